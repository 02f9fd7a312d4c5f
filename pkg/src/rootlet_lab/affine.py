"""Affine Weyl group elements w = v.t_r acting linearly on V + R.delta.

``v`` is stored as an integer matrix on simple-root coordinates (column j is
v(alpha_j)), together with its inverse; ``r`` is a coroot-lattice vector, which
is integral in simple-root coordinates under the long-roots-have-length-2
normalisation. The translation acts by t_r(x) = x - (x, r) delta, hence

    w(x + c delta) = v(x) + (c - (x, r)) delta.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .rootsys import Root, RootSystem, inverse_matrix

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class AffineVector:
    finite: tuple
    delta: Fraction | int = 0

    def __add__(self, other: AffineVector) -> AffineVector:
        return AffineVector(
            tuple(a + b for a, b in zip(self.finite, other.finite)), self.delta + other.delta
        )

    def __neg__(self) -> AffineVector:
        return AffineVector(tuple(-a for a in self.finite), -self.delta)

    def is_positive_affine_root(self, rs: RootSystem) -> bool:
        """Membership in the positive affine roots Delta^+ u {Delta + k delta : k >= 1}."""
        if not rs.is_root(self.finite) or Fraction(self.delta).denominator != 1:
            return False
        return self.delta > 0 or (self.delta == 0 and rs.is_positive_root(self.finite))


@dataclass(frozen=True, eq=False)
class AffineWeylElement:
    v: Matrix
    v_inv: Matrix
    r: Root
    word: tuple[int, ...] | None = None

    def __eq__(self, other) -> bool:
        # words are not canonical; equality is decided on the normal form
        return isinstance(other, AffineWeylElement) and (self.v, self.r) == (other.v, other.r)

    def __hash__(self) -> int:
        return hash((self.v, self.r))

    def __repr__(self) -> str:
        w = "" if self.word is None else f", word={list(self.word)}"
        return f"AffineWeylElement(r={self.r}{w})"

    @property
    def rank(self) -> int:
        return len(self.r)

    def is_identity(self) -> bool:
        return self.v == identity_matrix(self.rank) and not any(self.r)

    def apply_finite(self, x: Sequence) -> tuple:
        return matvec(self.v, x)

    def apply_finite_inverse(self, x: Sequence) -> tuple:
        return matvec(self.v_inv, x)

    def to_json_dict(self) -> dict:
        return {
            "word": None if self.word is None else list(self.word),
            "v_matrix": [list(row) for row in self.v],
            "r": list(self.r),
        }


class LevelOneInversions(NamedTuple):
    roots: frozenset[Root]  # gamma in Delta^+ with delta - gamma inverted
    other: bool  # some other positive affine root is inverted as well


# small integer linear algebra -------------------------------------------------


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def matvec(m: Matrix, x: Sequence) -> tuple:
    return tuple(sum(row[j] * x[j] for j in range(len(x)) if x[j]) for row in m)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    cols = list(zip(*b))
    return tuple(tuple(sum(a[i][k] * c[k] for k in range(n)) for c in cols) for i in range(n))


def _columns_to_matrix(cols: Sequence[Sequence[int]]) -> Matrix:
    return tuple(zip(*cols))


# group operations ------------------------------------------------------------


def identity(rs: RootSystem) -> AffineWeylElement:
    e = identity_matrix(rs.rank)
    return AffineWeylElement(e, e, (0,) * rs.rank, ())


def simple_reflection(rs: RootSystem, i: int) -> AffineWeylElement:
    """s_i for i in 1..n, and s_0 = s_theta . t_{-theta^vee} for i = 0."""
    n = rs.rank
    if not 0 <= i <= n:
        raise ValueError(f"reflection index {i} out of range 0..{n}")
    if i == 0:
        cols = [rs.reflect_in(rs.theta, a) for a in rs.simple_roots]
        r = tuple(-a for a in rs.coroot(rs.theta))
    else:
        cols = [rs.reflect(i - 1, a) for a in rs.simple_roots]
        r = (0,) * n
    v = _columns_to_matrix(cols)
    return AffineWeylElement(v, v, r, (i,))


def compose(w1: AffineWeylElement, w2: AffineWeylElement) -> AffineWeylElement:
    """(v1, r1)(v2, r2) = (v1 v2, r2 + v2^{-1}(r1))."""
    shift = matvec(w2.v_inv, w1.r)
    word = None if w1.word is None or w2.word is None else w1.word + w2.word
    return AffineWeylElement(
        matmul(w1.v, w2.v),
        matmul(w2.v_inv, w1.v_inv),
        tuple(a + b for a, b in zip(w2.r, shift)),
        word,
    )


def inverse(w: AffineWeylElement) -> AffineWeylElement:
    """(v t_r)^{-1} = v^{-1} t_{-v(r)}."""
    word = None if w.word is None else tuple(reversed(w.word))
    return AffineWeylElement(w.v_inv, w.v, tuple(-a for a in matvec(w.v, w.r)), word)


def from_word(rs: RootSystem, word: Iterable[int]) -> AffineWeylElement:
    """The product s_{i_1} s_{i_2} ... of the listed reflections (left to right)."""
    w = identity(rs)
    for i in word:
        w = compose(w, simple_reflection(rs, i))
    return w


def act(rs: RootSystem, w: AffineWeylElement, x: AffineVector) -> AffineVector:
    finite = w.apply_finite(x.finite)
    return AffineVector(finite, x.delta - rs.form(x.finite, w.r))


def act_inverse(rs: RootSystem, w: AffineWeylElement, x: AffineVector) -> AffineVector:
    """w^{-1}(x) = v^{-1}(x) + (x, v(r)) delta."""
    return AffineVector(w.apply_finite_inverse(x.finite), x.delta + rs.form(x.finite, z_of(rs, w)))


def affine_simple_root(rs: RootSystem, i: int) -> AffineVector:
    if i == 0:
        return AffineVector(tuple(-a for a in rs.theta), 1)
    return AffineVector(rs.simple_roots[i - 1], 0)


# inversions and the minuscule predicate -------------------------------------


@lru_cache(maxsize=None)
def _root_arrays(rs: RootSystem) -> tuple[np.ndarray, np.ndarray]:
    roots = np.array(rs.all_roots, dtype=np.int64)
    return roots, roots @ np.array(rs._gram_int, dtype=np.int64)


def inversion_set(rs: RootSystem, w: AffineWeylElement) -> list[tuple[Root, int]]:
    """All positive affine roots gamma + k delta with w(gamma + k delta) negative.

    For a fixed finite root gamma the image is v(gamma) + (k - (gamma, r)) delta,
    so the inverted levels k form an explicit finite interval.
    """
    roots, rg = _root_arrays(rs)
    scaled = rg @ np.array(w.r, dtype=np.int64)
    if np.any(scaled % rs.scale):
        raise ValueError("translation part is not in the coroot lattice")
    m = scaled // rs.scale
    # a root is negative iff its coefficient sum is
    image_negative = (roots @ np.array(w.v, dtype=np.int64).T).sum(axis=1) < 0
    k_lo = np.ones(len(roots), dtype=np.int64)
    k_lo[: len(rs.positive_roots)] = 0
    k_hi = np.where(image_negative, m, m - 1)
    out = []
    for j in np.nonzero(k_hi >= k_lo)[0]:
        gamma = rs.all_roots[j]
        out.extend((gamma, k) for k in range(int(k_lo[j]), int(k_hi[j]) + 1))
    return sorted(out, key=lambda p: (p[1], sum(p[0]), p[0]))


def delta_one_inversions(rs: RootSystem, w: AffineWeylElement) -> LevelOneInversions:
    roots, other = set(), False
    for gamma, k in inversion_set(rs, w):
        neg = tuple(-a for a in gamma)
        if k == 1 and rs.is_positive_root(neg):
            roots.add(neg)
        else:
            other = True
    return LevelOneInversions(frozenset(roots), other)


def is_minuscule(rs: RootSystem, w: AffineWeylElement) -> bool:
    return all(k == 1 for _, k in inversion_set(rs, w))


def length(rs: RootSystem, w: AffineWeylElement) -> int:
    return len(inversion_set(rs, w))


def z_of(rs: RootSystem, w: AffineWeylElement) -> Root:
    """The coroot-lattice element v(r) attached to w = v.t_r."""
    return tuple(w.apply_finite(w.r))


def element_from_json(rs: RootSystem, data: dict) -> AffineWeylElement:
    v = tuple(tuple(int(Fraction(a)) for a in row) for row in data["v_matrix"])
    r = tuple(int(Fraction(a)) for a in data["r"])
    word = data.get("word")
    if word is not None:
        rebuilt = from_word(rs, word)
        if (rebuilt.v, rebuilt.r) != (v, r):
            raise ValueError("stored word does not produce the stored normal form")
        return rebuilt
    return AffineWeylElement(v, _invert_weyl(rs, v), r, None)


def _invert_weyl(rs: RootSystem, v: Matrix) -> Matrix:
    # Weyl elements are isometries: v^{-1} = G^{-1} v^T G
    n = rs.rank
    g = [[Fraction(x) for x in row] for row in rs.bilinear]
    vt = [[Fraction(v[j][i]) for j in range(n)] for i in range(n)]
    prod = [[sum(vt[i][k] * g[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    ginv = inverse_matrix(g)
    out = [[sum(ginv[i][k] * prod[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    return tuple(tuple(int(x) for x in row) for row in out)


def reflect_affine(rs: RootSystem, i: int, x: AffineVector) -> AffineVector:
    """s_i(x) = x - (x, alpha_i) alpha_i^vee straight from the extended form.

    delta is isotropic and orthogonal to V, so (x + a delta, alpha_i) only sees
    the finite parts. This route never touches the (v, r) normal form.
    """
    if i == 0:
        c = -rs.form(x.finite, rs.theta)  # (x, delta - theta)
        # alpha_0^vee = delta - theta since theta is long
        return AffineVector(tuple(a + c * t for a, t in zip(x.finite, rs.theta)), x.delta - c)
    alpha = rs.simple_roots[i - 1]
    c = rs.form(x.finite, alpha)
    co = rs.coroot(alpha)
    return AffineVector(tuple(a - c * b for a, b in zip(x.finite, co)), x.delta)


def act_by_word(rs: RootSystem, word: Sequence[int], x: AffineVector) -> AffineVector:
    """Apply s_{i_1} s_{i_2} ... s_{i_k} to x, rightmost generator first."""
    for i in reversed(word):
        x = reflect_affine(rs, i, x)
    return x
