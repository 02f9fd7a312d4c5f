"""Irreducible reduced root systems of types A-G with exact arithmetic.

Every vector lives in simple-root coordinates. Roots and coroots are tuples of
ints (coroots are integral because long roots have squared length 2); inner
products are :class:`fractions.Fraction`.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd, lcm
from typing import Iterable, Sequence

Root = tuple[int, ...]

FAMILIES = "ABCDEFG"

# node index under numbering="paper" -> Bourbaki index, E8 only (both 1-based)
E8_PAPER_TO_BOURBAKI = (8, 7, 6, 5, 4, 3, 1, 2)


class CounterexampleError(AssertionError):
    """A computed object contradicts a statement the library relies on."""

    def __init__(self, message: str, payload: dict | None = None):
        super().__init__(message)
        self.payload = payload or {}


@dataclass(frozen=True, order=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        f, n = self.family, self.rank
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 4,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }.get(f)
        if ok is None:
            raise ValueError(f"unknown family {f!r}; expected one of {FAMILIES}")
        if not ok:
            raise ValueError(f"invalid rank {n} for family {f}")

    @classmethod
    def parse(cls, label: str) -> CartanType:
        m = re.fullmatch(r"\s*([A-Za-z])\s*_?\s*(\d+)\s*", label)
        if not m:
            raise ValueError(f"cannot parse Cartan type {label!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def _diagram(t: CartanType) -> tuple[list[Fraction], list[tuple[int, int]]]:
    """Squared lengths of the simple roots and Dynkin edges (0-based, Bourbaki)."""
    n, f = t.rank, t.family
    chain = [(i, i + 1) for i in range(n - 1)]
    two = Fraction(2)
    if f == "A":
        return [two] * n, chain
    if f == "B":
        return [two] * (n - 1) + [Fraction(1)], chain
    if f == "C":
        return [Fraction(1)] * (n - 1) + [two], chain
    if f == "D":
        return [two] * n, [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if f == "E":
        edges = [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, n - 1)]
        return [two] * n, edges
    if f == "F":
        return [two, two, Fraction(1), Fraction(1)], chain
    return [Fraction(2, 3), two], chain  # G2: alpha_1 short


class RootSystem:
    """Positive roots, highest root, form and order of an irreducible system.

    Immutable after construction; obtain instances through :func:`build`.
    """

    def __init__(self, cartan_type: CartanType):
        self.cartan_type = cartan_type
        n = self.rank = cartan_type.rank
        lengths, edges = _diagram(cartan_type)
        self.edges = tuple(edges)
        adj: list[set[int]] = [set() for _ in range(n)]
        gram = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            gram[i][i] = lengths[i]
        for i, j in edges:
            adj[i].add(j)
            adj[j].add(i)
            gram[i][j] = gram[j][i] = -max(lengths[i], lengths[j]) / 2
        self.adjacency = tuple(frozenset(a) for a in adj)
        self.bilinear = tuple(tuple(row) for row in gram)
        # integer copy of the Gram matrix: (x, y) = x^T G y / scale
        self.scale = lcm(*(x.denominator for row in gram for x in row))
        self._coroots: dict[Root, Root] = {}
        self._gram_int = tuple(tuple(int(x * self.scale) for x in row) for row in gram)
        # cartan[i][j] = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)
        self.cartan_matrix = tuple(
            tuple(int(2 * gram[i][j] / gram[j][j]) for j in range(n)) for i in range(n)
        )
        # coroot of alpha_j is coroot_factor[j] * alpha_j
        self.coroot_factor = tuple(int(2 / lengths[j]) for j in range(n))

        self.simple_roots = tuple(_unit(n, i) for i in range(n))
        self.positive_roots = self._close()
        self.index = {g: k for k, g in enumerate(self.positive_roots)}
        self.theta = self.positive_roots[-1]
        if sum(self.theta) != max(sum(g) for g in self.positive_roots) or any(
            not self.leq(g, self.theta) for g in self.positive_roots
        ):
            raise CounterexampleError(f"{cartan_type}: no unique highest root")
        self.long_flags = tuple(self.form(g, g) == 2 for g in self.positive_roots)
        self.simple_long = tuple(i + 1 for i in range(n) if lengths[i] == 2)
        self.rho = tuple(Fraction(sum(g[i] for g in self.positive_roots), 2) for i in range(n))
        self.h_set = frozenset(
            k for k, g in enumerate(self.positive_roots) if self.form(g, self.theta) != 0
        )
        self._build_masks()

    # construction ---------------------------------------------------------

    def _close(self) -> tuple[Root, ...]:
        n = self.rank
        found = set(self.simple_roots)
        layer = list(self.simple_roots)
        while layer:
            nxt = []
            for beta in layer:
                for i in range(n):
                    if beta == self.simple_roots[i]:
                        continue
                    p = 0
                    down = list(beta)
                    while True:
                        down[i] -= 1
                        if tuple(down) not in found:
                            break
                        p += 1
                    q = p - self.cartan_pairing(beta, i)
                    if q > 0:
                        up = list(beta)
                        up[i] += 1
                        up = tuple(up)
                        if up not in found:
                            found.add(up)
                            nxt.append(up)
            layer = nxt
        return tuple(sorted(found, key=lambda g: (sum(g), g)))

    def _build_masks(self) -> None:
        roots = self.positive_roots
        m = len(roots)
        up, down, adds = [0] * m, [0] * m, [0] * m
        for a in range(m):
            for b in range(m):
                if self.leq(roots[a], roots[b]):
                    up[a] |= 1 << b
                    down[b] |= 1 << a
                s = tuple(x + y for x, y in zip(roots[a], roots[b]))
                if s in self.index:
                    adds[a] |= 1 << b
        self.up_mask = tuple(up)
        self.down_mask = tuple(down)
        # adds_mask[a] has bit b iff gamma_a + gamma_b is a positive root
        self.adds_mask = tuple(adds)
        self.full_mask = (1 << m) - 1
        self.h_mask = sum(1 << k for k in self.h_set)
        self.long_mask = sum(1 << k for k, f in enumerate(self.long_flags) if f)

    # identity -------------------------------------------------------------

    def __repr__(self) -> str:
        return f"RootSystem({self.cartan_type})"

    def __eq__(self, other) -> bool:
        return isinstance(other, RootSystem) and other.cartan_type == self.cartan_type

    def __hash__(self) -> int:
        return hash(("RootSystem", self.cartan_type))

    @property
    def label(self) -> str:
        return str(self.cartan_type)

    # form and coroots -----------------------------------------------------

    def form(self, x: Sequence, y: Sequence) -> int | Fraction:
        """Invariant inner product of two vectors in simple-root coordinates."""
        g = self._gram_int
        total = 0
        for i, a in enumerate(x):
            if a:
                row = g[i]
                total += a * sum(row[j] * b for j, b in enumerate(y) if b)
        if isinstance(total, int):
            q, rem = divmod(total, self.scale)
            # integral values stay plain ints, which is the common case
            return q if not rem else Fraction(total, self.scale)
        return Fraction(total) / self.scale

    def cartan_pairing(self, x: Sequence, i: int) -> int:
        """<x, alpha_i^vee> for an integral x and a 0-based simple index."""
        val = Fraction(2) * self.form(x, self.simple_roots[i]) / self.bilinear[i][i]
        if val.denominator != 1:
            raise ValueError(f"non-integral pairing of {tuple(x)} with alpha_{i + 1}")
        return int(val)

    def coroot(self, gamma: Sequence[int]) -> Root:
        gamma = tuple(gamma)
        hit = self._coroots.get(gamma)
        if hit is not None:
            return hit
        if not self.is_root(gamma):
            raise ValueError(f"{gamma} is not a root of {self.label}")
        c = Fraction(2) / self.form(gamma, gamma)
        out = tuple(c * a for a in gamma)
        if any(x.denominator != 1 for x in out):
            raise CounterexampleError(f"non-integral coroot of {gamma}")
        self._coroots[gamma] = out = tuple(int(x) for x in out)
        return out

    def reflect(self, i: int, x: Sequence[int]) -> Root:
        """Simple reflection s_{i+1} (0-based ``i``) of an integral vector."""
        c = self.cartan_pairing(x, i)
        out = list(x)
        out[i] -= c
        return tuple(out)

    def reflect_in(self, gamma: Sequence[int], x: Sequence[int]) -> Root:
        """Reflection s_gamma applied to x (both integral)."""
        c = Fraction(2) * self.form(x, gamma) / self.form(gamma, gamma)
        if c.denominator != 1:
            raise ValueError("non-integral reflection coefficient")
        return tuple(a - int(c) * b for a, b in zip(x, gamma))

    # membership and order -------------------------------------------------

    def is_root(self, x: Sequence[int]) -> bool:
        x = tuple(x)
        return x in self.index or tuple(-a for a in x) in self.index

    def is_positive_root(self, x: Sequence[int]) -> bool:
        return tuple(x) in self.index

    def is_long(self, gamma: Sequence[int]) -> bool:
        gamma = tuple(gamma)
        k = self.index.get(gamma)
        if k is None:
            k = self.index.get(tuple(-a for a in gamma))
        if k is not None:
            return self.long_flags[k]
        return self.form(gamma, gamma) == 2

    def leq(self, mu: Sequence[int], nu: Sequence[int]) -> bool:
        """Root order: nu - mu is a non-negative combination of simple roots."""
        return all(b >= a for a, b in zip(mu, nu))

    @property
    def long_positive_roots(self) -> tuple[Root, ...]:
        return tuple(g for g, f in zip(self.positive_roots, self.long_flags) if f)

    @cached_property
    def negative_roots(self) -> tuple[Root, ...]:
        return tuple(tuple(-a for a in g) for g in self.positive_roots)

    @cached_property
    def all_roots(self) -> tuple[Root, ...]:
        return self.positive_roots + self.negative_roots

    def root_index(self, gamma: Sequence[int]) -> int:
        try:
            return self.index[tuple(gamma)]
        except KeyError:
            raise ValueError(f"{tuple(gamma)} is not a positive root of {self.label}") from None

    def height(self, gamma: Sequence[int]) -> int:
        return sum(gamma)

    # bitset helpers -------------------------------------------------------

    def mask_of(self, roots: Iterable[Sequence[int]]) -> int:
        m = 0
        for g in roots:
            m |= 1 << self.root_index(g)
        return m

    def roots_of(self, mask: int) -> tuple[Root, ...]:
        return tuple(self.positive_roots[k] for k in bits(mask))

    def is_upper_closed(self, mask: int) -> bool:
        return all(self.up_mask[k] & ~mask == 0 for k in bits(mask))

    def is_abelian(self, mask: int) -> bool:
        return all(self.adds_mask[k] & mask == 0 for k in bits(mask))

    def upper_closure(self, mask: int) -> int:
        out = 0
        for k in bits(mask):
            out |= self.up_mask[k]
        return out

    def minimal_elements(self, mask: int) -> int:
        return sum(1 << k for k in bits(mask) if self.down_mask[k] & mask == 1 << k)

    def maximal_elements(self, mask: int) -> int:
        return sum(1 << k for k in bits(mask) if self.up_mask[k] & mask == 1 << k)

    # derived gadgets ------------------------------------------------------

    def half_floor(self, gamma: Sequence[int]) -> Root:
        return tuple(a // 2 for a in gamma)

    def principal_upper(self, gamma: Sequence[int]) -> frozenset[Root]:
        return frozenset(self.roots_of(self.up_mask[self.root_index(gamma)]))

    def support(self, gamma: Sequence[int]) -> frozenset[int]:
        """1-based indices of the simple roots with nonzero coefficient."""
        return frozenset(i + 1 for i, a in enumerate(gamma) if a)

    def connected(self, nodes: Iterable[int]) -> bool:
        """Connectivity of a set of 1-based nodes in the Dynkin diagram."""
        nodes = set(nodes)
        if not nodes:
            return False
        start = next(iter(nodes))
        seen = {start}
        todo = [start]
        while todo:
            a = todo.pop()
            for b in self.adjacency[a - 1]:
                if b + 1 in nodes and b + 1 not in seen:
                    seen.add(b + 1)
                    todo.append(b + 1)
        return seen == nodes

    def dynkin_path(self, left: Iterable[int], right: Iterable[int]) -> tuple[int, ...]:
        """Nodes strictly between two disjoint node sets on the connecting tree path."""
        left, right = set(left), set(right)
        prev = {a: None for a in left}
        todo = deque(left)
        while todo:
            a = todo.popleft()
            if a in right:
                path = []
                b = prev[a]
                while b is not None and b not in left:
                    path.append(b)
                    b = prev[b]
                return tuple(sorted(path))
            for b in self.adjacency[a - 1]:
                if b + 1 not in prev:
                    prev[b + 1] = a
                    todo.append(b + 1)
        raise ValueError("node sets are not connected in the diagram")

    def sum_of_simple(self, nodes: Iterable[int]) -> Root:
        out = [0] * self.rank
        for i in nodes:
            out[i - 1] += 1
        return tuple(out)

    # numbering ------------------------------------------------------------

    def to_numbering(self, gamma: Sequence[int], numbering: str = "bourbaki") -> Root:
        """Re-index coefficients; ``paper`` differs from Bourbaki only for E8."""
        if numbering == "bourbaki" or self.cartan_type != CartanType("E", 8):
            return tuple(gamma)
        if numbering != "paper":
            raise ValueError(f"unknown numbering {numbering!r}")
        return tuple(gamma[b - 1] for b in E8_PAPER_TO_BOURBAKI)

    def from_numbering(self, gamma: Sequence[int], numbering: str = "bourbaki") -> Root:
        if numbering == "bourbaki" or self.cartan_type != CartanType("E", 8):
            return tuple(gamma)
        if numbering != "paper":
            raise ValueError(f"unknown numbering {numbering!r}")
        out = [0] * 8
        for p, b in enumerate(E8_PAPER_TO_BOURBAKI):
            out[b - 1] = gamma[p]
        return tuple(out)

    def simple_index_to_numbering(self, i: int, numbering: str = "bourbaki") -> int:
        if numbering == "bourbaki" or self.cartan_type != CartanType("E", 8):
            return i
        return E8_PAPER_TO_BOURBAKI.index(i) + 1

    def simple_index_from_numbering(self, i: int, numbering: str = "bourbaki") -> int:
        if numbering == "bourbaki" or self.cartan_type != CartanType("E", 8):
            return i
        return E8_PAPER_TO_BOURBAKI[i - 1]

    def format_root(self, gamma: Sequence[int], numbering: str = "bourbaki", style: str = "comma") -> str:
        g = self.to_numbering(gamma, numbering)
        if style == "digits" and all(0 <= a < 10 for a in g):
            return "".join(str(a) for a in g)
        return ",".join(str(a) for a in g)

    # export ---------------------------------------------------------------

    def to_json_dict(self, numbering: str = "bourbaki") -> dict:
        conv = lambda g: list(self.to_numbering(g, numbering))
        order = [self.simple_index_from_numbering(i, numbering) for i in range(1, self.rank + 1)]
        return {
            "type": self.label,
            "rank": self.rank,
            "numbering": numbering,
            "simple_roots": [conv(self.simple_roots[b - 1]) for b in order],
            "positive_roots": [conv(g) for g in self.positive_roots],
            "theta": conv(self.theta),
            "h_set": sorted(self.h_set),
            "long_flags": list(self.long_flags),
        }


def bits(mask: int):
    """Indices of the set bits of ``mask`` in increasing order."""
    k = 0
    while mask:
        if mask & 1:
            yield k
        mask >>= 1
        k += 1


def _unit(n: int, i: int) -> Root:
    return tuple(1 if j == i else 0 for j in range(n))


@lru_cache(maxsize=None)
def _build(t: CartanType) -> RootSystem:
    return RootSystem(t)


def build(t: CartanType | str) -> RootSystem:
    """Construct (and memoise) the root system of a Cartan type such as ``"E8"``."""
    if isinstance(t, str):
        t = CartanType.parse(t)
    return _build(t)


def bilinear_form(rs: RootSystem, x: Sequence, y: Sequence) -> Fraction:
    return rs.form(x, y)


def coroot(rs: RootSystem, gamma: Sequence[int]) -> Root:
    return rs.coroot(gamma)


def root_leq(rs: RootSystem, mu: Sequence[int], nu: Sequence[int]) -> bool:
    return rs.leq(mu, nu)


def half_floor(rs: RootSystem, gamma: Sequence[int]) -> Root:
    return rs.half_floor(gamma)


def principal_upper(rs: RootSystem, gamma: Sequence[int]) -> frozenset[Root]:
    return rs.principal_upper(gamma)


def support(rs: RootSystem, gamma: Sequence[int]) -> frozenset[int]:
    return rs.support(gamma)


def connected(rs: RootSystem, nodes: Iterable[int]) -> bool:
    return rs.connected(nodes)


def exact_rank(rows: Iterable[Sequence]) -> int:
    """Rank of a rational matrix by exact elimination.

    Rows are scaled to integers first and reduced by cross-multiplication, so
    the arithmetic stays in Python ints.
    """
    mat = []
    for r in rows:
        fr = [Fraction(a) for a in r]
        d = lcm(*(a.denominator for a in fr)) if fr else 1
        mat.append([int(a * d) for a in fr])
    if not mat:
        return 0
    rank, ncols = 0, len(mat[0])
    for c in range(ncols):
        piv = next((r for r in range(rank, len(mat)) if mat[r][c]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        p = mat[rank]
        for r in range(rank + 1, len(mat)):
            q = mat[r][c]
            if q:
                row = [p[c] * a - q * b for a, b in zip(mat[r], p)]
                g = gcd(*row)
                mat[r] = [a // g for a in row] if g > 1 else row
        rank += 1
        if rank == len(mat):
            break
    return rank


def inverse_matrix(m: Sequence[Sequence]) -> list[list[Fraction]]:
    """Exact inverse of a nonsingular rational square matrix."""
    n = len(m)
    aug = [[Fraction(a) for a in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        piv = next(r for r in range(c, n) if aug[r][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [a / p for a in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def all_types(max_rank: int = 8) -> list[CartanType]:
    """Every irreducible type of rank at most ``max_rank`` in A..G order."""
    out = []
    for f in FAMILIES:
        for n in range(1, max_rank + 1):
            try:
                out.append(CartanType(f, n))
            except ValueError:
                pass
    return out
