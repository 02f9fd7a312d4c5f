"""Abelian ideals of a Borel subalgebra, their minuscule elements and rootlets.

Ideals are stored as bitsets over the deterministic ordering of the positive
roots. The :class:`Atlas` of a root system holds all of them together with the
rootlet fibers; it is built once per type and is read-only afterwards.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import affine
from .affine import AffineVector, AffineWeylElement
from .rootsys import CounterexampleError, Root, RootSystem, bits, exact_rank, inverse_matrix


@dataclass(frozen=True, eq=False)
class AbelianIdeal:
    rs: RootSystem
    mask: int
    minuscule: AffineWeylElement

    def __eq__(self, other) -> bool:
        return isinstance(other, AbelianIdeal) and (self.rs, self.mask) == (other.rs, other.mask)

    def __hash__(self) -> int:
        return hash((self.rs, self.mask))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, gamma) -> bool:
        k = self.rs.index.get(tuple(gamma))
        return k is not None and bool(self.mask >> k & 1)

    def __repr__(self) -> str:
        gens = ", ".join(self.rs.format_root(g) for g in self.generators)
        return f"AbelianIdeal({self.rs.label}, size={len(self)}, min=[{gens}])"

    def __le__(self, other: AbelianIdeal) -> bool:
        return self.mask & ~other.mask == 0

    @property
    def roots(self) -> frozenset[Root]:
        return frozenset(self.rs.roots_of(self.mask))

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(bits(self.mask))

    @property
    def generators(self) -> tuple[Root, ...]:
        """Minimal elements, in root order."""
        return self.rs.roots_of(self.rs.minimal_elements(self.mask))

    @cached_property
    def rootlet(self) -> Root:
        if not self.mask:
            raise ValueError("the empty ideal has no rootlet")
        twice_delta_minus_theta = AffineVector(tuple(-a for a in self.rs.theta), 2)
        out = affine.act(self.rs, self.minuscule, twice_delta_minus_theta)
        if out.delta != 0 or not self.rs.is_positive_root(out.finite):
            raise CounterexampleError(
                "rootlet is not a positive root", {"ideal": self.indices, "value": repr(out)}
            )
        return tuple(int(a) for a in out.finite)

    @cached_property
    def z(self) -> Root:
        return affine.z_of(self.rs, self.minuscule)


class Fiber:
    """All nonzero abelian ideals with a given rootlet."""

    def __init__(self, mu: Root, members: Sequence[AbelianIdeal]):
        self.mu = mu
        self.members = tuple(members)
        minima = [I for I in self.members if not any(J.mask != I.mask and J <= I for J in self.members)]
        maxima = [I for I in self.members if not any(J.mask != I.mask and I <= J for J in self.members)]
        if len(minima) != 1 or len(maxima) != 1:
            raise CounterexampleError(
                f"fiber over {mu} has {len(minima)} minima and {len(maxima)} maxima",
                {"mu": mu},
            )
        self.min_ideal = minima[0]
        self.max_ideal = maxima[0]

    def __len__(self) -> int:
        return len(self.members)

    def __repr__(self) -> str:
        return f"Fiber(mu={self.mu}, size={len(self)})"


class Atlas:
    """Every abelian ideal of one root system, indexed by bitset and rootlet."""

    def __init__(self, rs: RootSystem, ideals: Iterable[AbelianIdeal] | None = None):
        self.rs = rs
        found = list(ideals) if ideals is not None else _bfs(rs)
        self.ideals = tuple(sorted(found, key=lambda I: (len(I), I.indices)))
        self.by_mask = {I.mask: I for I in self.ideals}
        if len(self.by_mask) != len(self.ideals):
            raise CounterexampleError("two minuscule elements share an ideal")
        groups: dict[Root, list[AbelianIdeal]] = {}
        for I in self.ideals:
            if I.mask:
                groups.setdefault(I.rootlet, []).append(I)
        self.fibers = {mu: Fiber(mu, groups[mu]) for mu in sorted(groups, key=lambda g: rs.index[g])}
        self._extend_cache: dict[tuple[int, int], AbelianIdeal] = {}
        self._step_cache: dict[tuple[Root, Root], int] = {}

    def __eq__(self, other) -> bool:
        if not isinstance(other, Atlas) or other.rs != self.rs:
            return False
        return [(I.mask, I.minuscule, I.minuscule.word) for I in self.ideals] == [
            (J.mask, J.minuscule, J.minuscule.word) for J in other.ideals
        ]

    def __len__(self) -> int:
        return len(self.ideals)

    def __iter__(self):
        return iter(self.ideals)

    @property
    def nonzero(self) -> tuple[AbelianIdeal, ...]:
        return tuple(I for I in self.ideals if I.mask)

    def ideal(self, roots: Iterable[Sequence[int]] | int) -> AbelianIdeal:
        mask = roots if isinstance(roots, int) else self.rs.mask_of(roots)
        try:
            return self.by_mask[mask]
        except KeyError:
            raise ValueError("not an abelian ideal: " + _explain(self.rs, mask)) from None

    def fiber(self, mu: Sequence[int]) -> Fiber:
        mu = tuple(mu)
        if not self.rs.is_positive_root(mu) or not self.rs.is_long(mu):
            raise ValueError(f"{mu} is not a long positive root")
        return self.fibers[mu]

    def mu_min(self, mu: Sequence[int]) -> AbelianIdeal:
        return self.fiber(mu).min_ideal

    def mu_max(self, mu: Sequence[int]) -> AbelianIdeal:
        return self.fiber(mu).max_ideal

    def maximal_ideals(self) -> tuple[AbelianIdeal, ...]:
        return tuple(I for I in self.ideals if not any(J.mask != I.mask and I <= J for J in self.ideals))

    def extend(self, I: AbelianIdeal, alpha: int) -> AbelianIdeal:
        """The ideal of s_alpha w_I, for rt(I) not simple and (alpha, rt(I)) > 0."""
        rs = self.rs
        if not I.mask:
            raise ValueError("cannot extend the empty ideal")
        mu = I.rootlet
        if sum(mu) == 1:
            raise ValueError(f"rootlet {mu} is simple")
        if not 1 <= alpha <= rs.rank or rs.form(rs.simple_roots[alpha - 1], mu) <= 0:
            raise ValueError(f"(alpha_{alpha}, {mu}) must be positive")
        key = (I.mask, alpha)
        if key not in self._extend_cache:
            w = affine.compose(affine.simple_reflection(rs, alpha), I.minuscule)
            new = affine.delta_one_inversions(rs, w)
            added = rs.mask_of(new.roots) & ~I.mask
            if new.other or added.bit_count() != 1 or rs.mask_of(new.roots) != I.mask | added:
                raise CounterexampleError("extension step is not minuscule", {"ideal": I.indices, "alpha": alpha})
            J = self.by_mask[I.mask | added]
            if J.minuscule != w:
                raise CounterexampleError("two minuscule elements for one ideal", {"ideal": J.indices})
            gamma = rs.positive_roots[added.bit_length() - 1]
            companion = tuple(t - g for t, g in zip(rs.theta, gamma))
            if not (added & rs.h_mask and rs.is_positive_root(companion)):
                raise CounterexampleError("added root is not in H", {"ideal": I.indices, "alpha": alpha})
            if J.rootlet != rs.reflect(alpha - 1, mu):
                raise CounterexampleError("extension rootlet is not s_alpha(mu)", {"ideal": I.indices})
            self._extend_cache[key] = J
        return self._extend_cache[key]

    def chain(self, I: AbelianIdeal, target: Sequence[int]) -> list[AbelianIdeal]:
        """Ideals I = I_0 < I_1 < ... < I_m with rootlets descending to ``target``."""
        rs = self.rs
        target = tuple(target)
        mu = I.rootlet
        if not rs.is_long(target) or not rs.is_positive_root(target) or not rs.leq(target, mu):
            raise ValueError(f"{target} is not a long root below the rootlet {mu}")
        out = [I]
        while out[-1].rootlet != target:
            out.append(self.extend(out[-1], self._descent(out[-1].rootlet, target)))
        return out

    def _descent(self, cur: Root, target: Root) -> int:
        """First simple index a with (alpha_a, cur) > 0 and s_a(cur) still above target."""
        key = (cur, target)
        if key not in self._step_cache:
            rs = self.rs
            for a in range(1, rs.rank + 1):
                if rs.form(rs.simple_roots[a - 1], cur) > 0 and rs.leq(target, rs.reflect(a - 1, cur)):
                    self._step_cache[key] = a
                    break
            else:
                raise CounterexampleError(f"no descent step from {cur} towards {target}")
        return self._step_cache[key]

    def chain_to(self, I: AbelianIdeal, target: Sequence[int]) -> AbelianIdeal:
        return self.chain(I, target)[-1]


def _explain(rs: RootSystem, mask: int) -> str:
    if not rs.is_upper_closed(mask):
        for k in bits(mask):
            miss = rs.up_mask[k] & ~mask
            if miss:
                g = rs.positive_roots[(miss & -miss).bit_length() - 1]
                return f"{rs.positive_roots[k]} is present but the larger root {g} is missing"
    for k in bits(mask):
        clash = rs.adds_mask[k] & mask
        if clash:
            g = rs.positive_roots[(clash & -clash).bit_length() - 1]
            return f"{rs.positive_roots[k]} + {g} is a root"
    return "unknown reason"


def _bfs(rs: RootSystem) -> list[AbelianIdeal]:
    start = affine.identity(rs)
    seen = {0: AbelianIdeal(rs, 0, start)}
    queue = deque([seen[0]])
    simple = [affine.affine_simple_root(rs, i) for i in range(rs.rank + 1)]
    while queue:
        I = queue.popleft()
        for i in range(rs.rank + 1):
            # N(s_i w) = N(w) + {w^{-1}(alpha_i)} whenever that root is positive
            new = affine.act_inverse(rs, I.minuscule, simple[i])
            if new.delta != 1:
                continue
            gamma = tuple(-int(a) for a in new.finite)
            if not rs.is_positive_root(gamma):
                raise CounterexampleError("level-one inversion with a negative finite part", {"w": I.minuscule.word})
            mask = I.mask | 1 << rs.index[gamma]
            if mask not in seen:
                w = affine.compose(affine.simple_reflection(rs, i), I.minuscule)
                seen[mask] = J = AbelianIdeal(rs, mask, w)
                queue.append(J)
    return list(seen.values())


@lru_cache(maxsize=None)
def atlas(rs: RootSystem) -> Atlas:
    return Atlas(rs)


# module-level operations ----------------------------------------------------


def enumerate_ideals(rs: RootSystem) -> list[AbelianIdeal]:
    """All abelian ideals via breadth-first search over minuscule elements."""
    return list(atlas(rs).ideals)


def upper_ideal_masks(rs: RootSystem) -> list[int]:
    """Every upper-closed subset of the positive roots, as bitsets."""
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for mask in frontier:
            for k in range(len(rs.positive_roots)):
                if not mask >> k & 1 and rs.up_mask[k] & ~(mask | 1 << k) == 0:
                    m = mask | 1 << k
                    if m not in seen:
                        seen.add(m)
                        nxt.append(m)
        frontier = nxt
    return sorted(seen, key=lambda m: (m.bit_count(), tuple(bits(m))))


def brute_force_enumerate(rs: RootSystem) -> list[frozenset[Root]]:
    """Abelian ideals by filtering all upper ideals; no Weyl group involved."""
    out = []
    for mask in upper_ideal_masks(rs):
        roots = [rs.positive_roots[k] for k in bits(mask)]
        if all(
            not rs.is_positive_root(tuple(a + b for a, b in zip(g, h)))
            for g, h in itertools.combinations_with_replacement(roots, 2)
        ):
            out.append(frozenset(roots))
    return out


def rootlet(rs: RootSystem, I: AbelianIdeal) -> Root:
    return I.rootlet


def z_of_ideal(rs: RootSystem, I: AbelianIdeal) -> Root:
    return I.z


def z1_enumerate(rs: RootSystem) -> set[Root]:
    """Coroot-lattice points pairing into {-1, 0, 1, 2} with every positive root."""
    n = rs.rank
    grid = np.array(list(itertools.product((-1, 0, 1, 2), repeat=n)), dtype=np.int64)
    coeffs = np.array(rs.positive_roots, dtype=np.int64)
    # pairing of z with gamma = sum c_i alpha_i is sum c_i (z, alpha_i)
    values = grid @ coeffs.T
    keep = grid[((values >= -1) & (values <= 2)).all(axis=1)]
    ginv = inverse_matrix(rs.bilinear)
    out = set()
    for p in keep.tolist():
        z = [sum(ginv[i][j] * p[j] for j in range(n)) for i in range(n)]
        # z = sum m_j alpha_j^vee with m_j = z_j / coroot_factor_j
        if all((zj / f).denominator == 1 for zj, f in zip(z, rs.coroot_factor)):
            out.add(tuple(int(zj) for zj in z))
    return out


def fibers(rs: RootSystem) -> dict[Root, Fiber]:
    return dict(atlas(rs).fibers)


def mu_min(rs: RootSystem, mu: Sequence[int]) -> AbelianIdeal:
    return atlas(rs).mu_min(mu)


def mu_max(rs: RootSystem, mu: Sequence[int]) -> AbelianIdeal:
    return atlas(rs).mu_max(mu)


def level(rs: RootSystem, mu: Sequence[int]) -> Fraction:
    """(rho, mu^vee)."""
    return rs.form(rs.rho, rs.coroot(mu))


def v_mu(rs: RootSystem, mu: Sequence[int]) -> AffineWeylElement:
    """Shortest finite Weyl element taking theta to mu, as a word in s_1..s_n."""
    mu = tuple(mu)
    if not rs.is_positive_root(mu) or not rs.is_long(mu):
        raise ValueError(f"{mu} is not a long positive root")
    word = []
    cur = mu
    while cur != rs.theta:
        i = next(i for i in range(rs.rank) if rs.form(rs.simple_roots[i], cur) < 0)
        nxt = rs.reflect(i, cur)
        if level(rs, nxt) != level(rs, cur) + 1:
            raise CounterexampleError("ascent step does not raise the level by one", {"mu": mu})
        word.append(i + 1)
        cur = nxt
    return affine.from_word(rs, word)


def extend(rs: RootSystem, I: AbelianIdeal, alpha: int) -> AbelianIdeal:
    return atlas(rs).extend(I, alpha)


def chain_to(rs: RootSystem, I: AbelianIdeal, target: Sequence[int]) -> AbelianIdeal:
    return atlas(rs).chain_to(I, target)


def full_rank(rs: RootSystem, I: AbelianIdeal | Iterable[Sequence[int]]) -> bool:
    roots = I.roots if isinstance(I, AbelianIdeal) else list(I)
    return exact_rank(roots) == rs.rank


def sum_of_long_simple(rs: RootSystem) -> Root:
    """|Pi_l|, asserted to be a root."""
    out = rs.sum_of_simple(rs.simple_long)
    if not rs.is_positive_root(out):
        raise CounterexampleError(f"sum of long simple roots {out} is not a root")
    return out
