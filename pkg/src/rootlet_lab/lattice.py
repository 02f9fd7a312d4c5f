"""Joins in the root poset (Delta^+, <=) and related lattice structure."""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

from .ideals import atlas
from .rootsys import CounterexampleError, Root, RootSystem, bits

COMPARABLE = "comparable"
OVERLAP_MAX = "overlap_max"
DISJOINT_BRIDGE = "disjoint_bridge"


@dataclass(frozen=True)
class JoinResult:
    value: Root
    mode: str
    bridge: Root | None = None


def _check_positive(rs: RootSystem, *roots: Sequence[int]) -> None:
    for g in roots:
        if not rs.is_positive_root(g):
            raise ValueError(f"{tuple(g)} is not a positive root of {rs.label}")


def join(rs: RootSystem, eta: Sequence[int], beta: Sequence[int]) -> JoinResult:
    """Least upper bound by the closed form: coordinate maximum, or a bridged sum."""
    eta, beta = tuple(eta), tuple(beta)
    _check_positive(rs, eta, beta)
    s_eta, s_beta = rs.support(eta), rs.support(beta)
    if rs.connected(s_eta | s_beta):
        value = tuple(max(a, b) for a, b in zip(eta, beta))
        mode = COMPARABLE if value in (eta, beta) else OVERLAP_MAX
        bridge = None
    else:
        if s_eta & s_beta:
            raise CounterexampleError("overlapping supports with a disconnected union", {"eta": eta, "beta": beta})
        bridge = rs.sum_of_simple(rs.dynkin_path(s_eta, s_beta))
        if not rs.is_positive_root(bridge):
            raise CounterexampleError("connecting chain is not a root", {"bridge": bridge})
        value = tuple(a + b + c for a, b, c in zip(eta, beta, bridge))
        mode = DISJOINT_BRIDGE
    if not rs.is_positive_root(value):
        raise CounterexampleError("join formula produced a non-root", {"eta": eta, "beta": beta, "value": value})
    return JoinResult(value, mode, bridge)


def join_oracle(rs: RootSystem, eta: Sequence[int], beta: Sequence[int]) -> Root:
    """Least upper bound found by scanning every positive root."""
    _check_positive(rs, eta, beta)
    ie, ib = rs.root_index(eta), rs.root_index(beta)
    bounds = rs.up_mask[ie] & rs.up_mask[ib]
    least = [k for k in bits(bounds) if rs.up_mask[k] & bounds == bounds]
    if len(least) != 1:
        raise CounterexampleError(
            "no least upper bound",
            {"eta": tuple(eta), "beta": tuple(beta), "upper_bounds": rs.roots_of(bounds)},
        )
    return rs.positive_roots[least[0]]


def join_many(rs: RootSystem, roots: Iterable[Sequence[int]]) -> Root:
    roots = [tuple(g) for g in roots]
    if not roots:
        raise ValueError("join of an empty family")
    _check_positive(rs, *roots)
    return reduce(lambda a, b: join(rs, a, b).value, roots)


def commutative_roots(rs: RootSystem) -> frozenset[Root]:
    """Union of the maximal abelian ideals, cross-checked against the definition."""
    at = atlas(rs)
    union = 0
    for a in rs.simple_long:
        union |= at.mu_max(rs.simple_roots[a - 1]).mask
    direct = commutative_mask(rs)
    if union != direct:
        raise CounterexampleError(
            "union of maximal ideals differs from the commutative roots",
            {"union": rs.roots_of(union), "direct": rs.roots_of(direct)},
        )
    return frozenset(rs.roots_of(union))


def commutative_mask(rs: RootSystem) -> int:
    """Roots whose principal upper ideal is abelian."""
    return sum(1 << k for k in range(len(rs.positive_roots)) if rs.is_abelian(rs.up_mask[k]))


@dataclass(frozen=True)
class Slice:
    alpha: int
    i: int
    roots: tuple[Root, ...]
    minimum: Root | None
    maximum: Root | None
    join_closed: bool
    is_lattice: bool


def delta_slice(rs: RootSystem, alpha: int, i: int) -> Slice:
    """Roots whose alpha-coefficient equals i, with min, max and lattice test."""
    if not 1 <= alpha <= rs.rank or i < 1:
        raise ValueError("need a simple index in 1..n and i >= 1")
    mask = sum(1 << k for k, g in enumerate(rs.positive_roots) if g[alpha - 1] == i)
    members = list(bits(mask))
    roots = rs.roots_of(mask)
    if not members:
        return Slice(alpha, i, (), None, None, True, False)
    mins = [k for k in members if rs.down_mask[k] & mask == 1 << k]
    maxs = [k for k in members if rs.up_mask[k] & mask == 1 << k]
    closed = all(
        rs.root_index(join(rs, rs.positive_roots[a], rs.positive_roots[b]).value) in members
        for a in members
        for b in members
        if a < b
    )
    # lattice: every pair has a least upper and a greatest lower bound inside the slice
    lattice = True
    for a in members:
        for b in members:
            if b <= a:
                continue
            ub = rs.up_mask[a] & rs.up_mask[b] & mask
            lb = rs.down_mask[a] & rs.down_mask[b] & mask
            if sum(1 for k in bits(ub) if rs.up_mask[k] & ub == ub) != 1:
                lattice = False
            if sum(1 for k in bits(lb) if rs.down_mask[k] & lb == lb) != 1:
                lattice = False
    return Slice(
        alpha,
        i,
        roots,
        rs.positive_roots[mins[0]] if len(mins) == 1 else None,
        rs.positive_roots[maxs[0]] if len(maxs) == 1 else None,
        closed,
        lattice,
    )
