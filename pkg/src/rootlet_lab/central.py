"""Centralisers of abelian ideals at root granularity and the theta-pairings.

A root vector e_gamma commutes with e_nu exactly when gamma + nu is neither a
root nor zero, and the toral part of the centraliser of an ideal I is the
annihilator of span(I) in the Cartan subalgebra. No structure constants are
needed.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from itertools import combinations
from functools import lru_cache
from typing import Iterable

from .ideals import AbelianIdeal, atlas, full_rank
from .rootsys import CounterexampleError, Root, RootSystem, exact_rank


@dataclass(frozen=True)
class CentraliserProfile:
    root_part: frozenset[Root]
    toral_dim: int
    p1: bool  # centraliser lies in the nilradical
    p2: bool  # centraliser is a sum of abelian ideals
    p3: bool  # centraliser is an abelian ideal
    self_centralising: bool = False
    positive_mask: int = field(repr=False, default=0)


@lru_cache(maxsize=None)
def _difference_masks(rs: RootSystem) -> tuple[int, ...]:
    # bit b of entry k is set iff gamma_b - gamma_k is a root
    roots = rs.positive_roots
    return tuple(
        sum(1 << b for b, h in enumerate(roots) if rs.is_root(tuple(x - y for x, y in zip(h, g))))
        for g in roots
    )


def centraliser(rs: RootSystem, I: AbelianIdeal) -> CentraliserProfile:
    mask = I.mask
    diff = _difference_masks(rs)
    pos = sum(1 << k for k in range(len(rs.positive_roots)) if rs.adds_mask[k] & mask == 0)
    neg = [k for k in range(len(rs.positive_roots)) if not mask >> k & 1 and diff[k] & mask == 0]
    toral = rs.rank - exact_rank(rs.roots_of(mask))
    root_part = frozenset(rs.roots_of(pos)) | frozenset(
        tuple(-a for a in rs.positive_roots[k]) for k in neg
    )
    p1 = toral == 0 and not neg
    p2 = p3 = False
    if p1:
        if not rs.is_upper_closed(pos):
            raise CounterexampleError("centraliser is not b-stable", {"ideal": I.indices})
        covered = 0
        for J in atlas(rs).ideals:
            if J.mask & ~pos == 0:
                covered |= J.mask
        p2 = covered == pos
        p3 = rs.is_abelian(pos)
    return CentraliserProfile(root_part, toral, p1, p2, p3, p1 and pos == mask, pos)


@dataclass(frozen=True)
class Classification:
    ideal: AbelianIdeal
    profile: CentraliserProfile
    full_rank: bool
    contains_theta_minus_half: bool
    rootlet_in_long_simple: bool
    mismatches: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def theta_minus_half(rs: RootSystem) -> Root:
    return tuple(a - a // 2 for a in rs.theta)


def classify(rs: RootSystem, I: AbelianIdeal) -> Classification:
    """Definitional P1/P2/P3 flags next to their root-theoretic criteria."""
    if not I.mask:
        raise ValueError("classification needs a nonzero ideal")
    prof = centraliser(rs, I)
    fr = full_rank(rs, I)
    tmh = theta_minus_half(rs) in I
    simple_long = {rs.simple_roots[a - 1] for a in rs.simple_long}
    rt_pl = I.rootlet in simple_long
    bad = []
    if prof.p1 != fr:
        bad.append(f"P1={prof.p1} but full rank={fr}")
    if prof.p2 != (fr and tmh):
        bad.append(f"P2={prof.p2} but full rank and theta-[theta/2] in I = {fr and tmh}")
    if prof.p3 != rt_pl:
        bad.append(f"P3={prof.p3} but rootlet in Pi_l = {rt_pl}")
    if prof.p3 and prof.positive_mask != atlas(rs).mu_max(I.rootlet).mask:
        bad.append("P3 holds but the centraliser is not I(rt)_max")
    if not (prof.p1 or not prof.p2) or not (prof.p2 or not prof.p3):
        bad.append("P3 => P2 => P1 violated")
    return Classification(I, prof, fr, tmh, rt_pl, tuple(bad))


@dataclass(frozen=True)
class PairingReport:
    alpha_or_sigma: tuple[int, ...]
    left: tuple[Root, ...]
    right: tuple[Root, ...]
    pairs: tuple[tuple[Root, Root], ...]
    right_in_h: bool
    mismatches: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def sigma_pairs(rs: RootSystem, sigma: Iterable[int]) -> PairingReport:
    """Match min of the intersected minimal ideals with max of the complements."""
    sigma = tuple(sorted(set(sigma)))
    if not sigma or not set(sigma) <= set(rs.simple_long):
        raise ValueError(f"{sigma} must be a nonempty set of long simple indices")
    if not rs.connected(sigma):
        raise ValueError(f"{sigma} is not connected in the Dynkin diagram")
    at = atlas(rs)
    inter_min, outside = rs.full_mask, rs.full_mask
    for a in sigma:
        alpha = rs.simple_roots[a - 1]
        inter_min &= at.mu_min(alpha).mask
        outside &= ~at.mu_max(alpha).mask
    left = rs.roots_of(rs.minimal_elements(inter_min))
    right = rs.roots_of(rs.maximal_elements(outside))
    if not outside:
        # every root is commutative (type A); the partner of theta is [theta/2] = 0
        right = ((0,) * rs.rank,)
    pairs, bad = [], []
    for nu in left:
        partner = tuple(t - a for t, a in zip(rs.theta, nu))
        if partner in right:
            pairs.append((nu, partner))
        else:
            bad.append(f"theta - {nu} = {partner} is not maximal in the complement")
    if len(left) != len(right):
        bad.append(f"{len(left)} minimal vs {len(right)} maximal elements")
    right_in_h = all(rs.index[g] in rs.h_set for g in right if any(g))
    return PairingReport(sigma, left, right, tuple(pairs), right_in_h, tuple(bad))


def stunning_pairs(rs: RootSystem, alpha: int) -> PairingReport:
    if alpha not in rs.simple_long:
        raise ValueError(f"alpha_{alpha} is not a long simple root")
    rep = sigma_pairs(rs, [alpha])
    if not rep.right_in_h:
        rep = replace(rep, mismatches=rep.mismatches + ("maximal complement elements outside H",))
    return rep


def connected_long_subsets(rs: RootSystem) -> list[tuple[int, ...]]:
    nodes = rs.simple_long
    return [
        s for size in range(1, len(nodes) + 1) for s in combinations(nodes, size) if rs.connected(s)
    ]


def unique_container(rs: RootSystem, I: AbelianIdeal) -> int | None:
    """The long simple root below rt(I), when there is exactly one."""
    mu = I.rootlet
    below = [a for a in rs.simple_long if rs.leq(rs.simple_roots[a - 1], mu)]
    return below[0] if len(below) == 1 else None


def containing_maximal(rs: RootSystem, I: AbelianIdeal) -> list[int]:
    """Long simple indices alpha whose maximal ideal I(alpha)_max contains I."""
    at = atlas(rs)
    return [a for a in rs.simple_long if I <= at.mu_max(rs.simple_roots[a - 1])]


# E8 pairing table layout ---------------------------------------------------


@dataclass(frozen=True)
class TableRow:
    index: int  # simple index in the chosen numbering
    min_of_max: Root
    min_of_min: Root
    max_of_complement: Root


def pairing_table(rs: RootSystem, numbering: str = "bourbaki") -> list[TableRow]:
    """Rows of min(I(a)_max), min(I(a)_min), max(complement of I(a)_max) per long simple a.

    Within one simple root, entries of min(I(a)_max) lying in H come first; each
    is matched with the unique element of min(I(a)_min) above it, and the last
    column is theta minus that element.
    """
    at = atlas(rs)
    rows = []
    for i in range(1, rs.rank + 1):
        b = rs.simple_index_from_numbering(i, numbering)
        if b not in rs.simple_long:
            continue
        alpha = rs.simple_roots[b - 1]
        top = at.mu_max(alpha)
        col1 = top.generators
        col2 = at.mu_min(alpha).generators
        complement_max = set(rs.roots_of(rs.maximal_elements(rs.full_mask & ~top.mask)))
        key = lambda g: (rs.index[g] not in rs.h_set, rs.to_numbering(g, numbering))
        used = []
        for g in sorted(col1, key=key):
            above = [h for h in col2 if rs.leq(g, h)]
            if len(above) != 1:
                raise CounterexampleError(
                    f"cannot align table row for alpha_{i}", {"entry": g, "candidates": above}
                )
            h = above[0]
            partner = tuple(t - a for t, a in zip(rs.theta, h))
            if partner not in complement_max:
                raise CounterexampleError(f"theta - {h} is not maximal in the complement", {"alpha": i})
            used.append(h)
            rows.append(TableRow(i, g, h, partner))
        if sorted(used) != sorted(col2) or len(used) != len(complement_max):
            raise CounterexampleError(f"table row for alpha_{i} is not a bijection", {"alpha": i})
    return rows
