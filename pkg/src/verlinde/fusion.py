"""The Verlinde fusion ring, exact and oracle routes.

The exact route is classical: Freudenthal weight multiplicities feed a
Racah-Speiser tensor decomposition, and Kac-Walton folding of the
classical summands into the level alcove yields the fusion product.  All
of it is integer/rational arithmetic.

The independent oracle route evaluates the Kac-Peterson S-matrix
numerically and applies the Verlinde formula; it shares no code with the
exact path beyond the root datum and is used to cross-check tables.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from .alcove import FusionContext, affine_reduce
from .errors import ContextMismatch, NonIntegralOracle, NotDominant, RankTooLarge
from .rootsystem import (
    RootSystem,
    Weight,
    dominant_reduce,
    inner_product,
    is_dominant,
    signed_weyl_orbit,
    weyl_dominant,
)

_SMATRIX_RANK_CAP = 4
_ORACLE_TOL = 1e-6


def _add(x: Sequence[int], y: Sequence[int]) -> Weight:
    return tuple(a + b for a, b in zip(x, y))


class CharElement:
    """Integer combination of dominant weights: an element of the
    representation ring, written in the irreducible basis."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[Weight, int] | Iterable[tuple[Weight, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        clean: dict[Weight, int] = {}
        for w, c in items:
            w = tuple(int(x) for x in w)
            if not is_dominant(w):
                raise NotDominant(f"irreducible label {w} is not dominant")
            c = int(c)
            if c:
                clean[w] = clean.get(w, 0) + c
        self.coeffs = {w: clean[w] for w in sorted(clean) if clean[w]}

    def is_zero(self) -> bool:
        return not self.coeffs

    def items(self):
        return self.coeffs.items()

    def __eq__(self, other) -> bool:
        return isinstance(other, CharElement) and self.coeffs == other.coeffs

    def __add__(self, other: "CharElement") -> "CharElement":
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, 0) + c
        return CharElement(out)

    def __neg__(self) -> "CharElement":
        return CharElement({w: -c for w, c in self.coeffs.items()})

    def __sub__(self, other: "CharElement") -> "CharElement":
        return self + (-other)

    def __rmul__(self, n: int) -> "CharElement":
        return CharElement({w: n * c for w, c in self.coeffs.items()})

    def __repr__(self) -> str:
        if not self.coeffs:
            return "CharElement(0)"
        body = " + ".join(f"{c}*[V_{list(w)}]" for w, c in self.coeffs.items())
        return f"CharElement({body})"


class FusionElement:
    """Integer combination of level-l basis weights sigma_mu, attached to a
    FusionContext.  Multiplication is the fusion product."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FusionContext,
                 coeffs: Mapping[Weight, int] | Iterable[tuple[Weight, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        clean: dict[Weight, int] = {}
        for w, c in items:
            w = ctx.require_basis(w)
            c = int(c)
            if c:
                clean[w] = clean.get(w, 0) + c
        self.ctx = ctx
        self.coeffs = {w: clean[w]
                       for w in sorted(clean, key=ctx.index.get) if clean[w]}

    def is_zero(self) -> bool:
        return not self.coeffs

    def items(self):
        return self.coeffs.items()

    def _check(self, other: "FusionElement") -> None:
        if not isinstance(other, FusionElement):
            raise TypeError(f"expected FusionElement, got {type(other).__name__}")
        if self.ctx.key != other.ctx.key:
            raise ContextMismatch(f"{self.ctx!r} vs {other.ctx!r}")

    def __eq__(self, other) -> bool:
        return (isinstance(other, FusionElement)
                and self.ctx.key == other.ctx.key
                and self.coeffs == other.coeffs)

    def __add__(self, other: "FusionElement") -> "FusionElement":
        self._check(other)
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, 0) + c
        return FusionElement(self.ctx, out)

    def __neg__(self) -> "FusionElement":
        return FusionElement(self.ctx, {w: -c for w, c in self.coeffs.items()})

    def __sub__(self, other: "FusionElement") -> "FusionElement":
        return self + (-other)

    def __rmul__(self, n: int) -> "FusionElement":
        return FusionElement(self.ctx, {w: n * c for w, c in self.coeffs.items()})

    def __mul__(self, other: "FusionElement") -> "FusionElement":
        return fuse(self.ctx, self, other)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "FusionElement(0)"
        body = " + ".join(f"{c}*sigma{list(w)}" for w, c in self.coeffs.items())
        return f"FusionElement({body})"


def element(ctx: FusionContext, coeffs: Mapping[Weight, int]) -> FusionElement:
    return FusionElement(ctx, coeffs)


def sigma(ctx: FusionContext, mu: Sequence[int]) -> FusionElement:
    """Basis element for one level-l weight."""
    return FusionElement(ctx, {tuple(mu): 1})


def unit(ctx: FusionContext) -> FusionElement:
    return sigma(ctx, (0,) * ctx.rs.rank)


def zero(ctx: FusionContext) -> FusionElement:
    return FusionElement(ctx, {})


# ---------------------------------------------------------------------------
# weight systems and classical tensor products

def weight_multiplicities(rs: RootSystem, lam: Sequence[int]) -> dict[Weight, int]:
    """Full weight system of the irreducible with highest weight ``lam``.

    The weight set is generated downward from ``lam`` through root strings
    (a string through ``w`` extends ``p + <w, alpha_i_vee>`` steps below
    ``w`` when it reaches ``p`` steps above), then multiplicities follow
    from the Freudenthal recursion

        (|lam+rho|^2 - |mu+rho|^2) m_mu =
            2 sum_{alpha>0} sum_{j>=1} m_{mu+j alpha} <mu + j alpha, alpha>

    evaluated on dominant weights in order of increasing depth.  All
    arithmetic is exact; integrality of each multiplicity is asserted.
    """
    lam = tuple(int(x) for x in lam)
    if not is_dominant(lam):
        raise NotDominant(f"highest weight {lam} is not dominant")
    cached = rs._weight_system_cache.get(lam)
    if cached is not None:
        return cached

    n = rs.rank
    alphas = rs.simple_roots
    depth: dict[Weight, int] = {lam: 0}
    layers: dict[int, list[Weight]] = {0: [lam]}
    d = 0
    while d in layers:
        for w in layers[d]:
            for i in range(n):
                p = 0
                up = _add(w, alphas[i])
                while up in depth:
                    p += 1
                    up = _add(up, alphas[i])
                for j in range(1, p + w[i] + 1):
                    nw = tuple(w[t] - j * alphas[i][t] for t in range(n))
                    if nw not in depth:
                        depth[nw] = d + j
                        layers.setdefault(d + j, []).append(nw)
        d += 1

    rho = rs.rho
    top = inner_product(rs, _add(lam, rho), _add(lam, rho))
    mult: dict[Weight, int] = {lam: 1}
    dominants = sorted((w for w in depth if is_dominant(w)),
                       key=lambda w: (depth[w], w))
    for w in dominants:
        if w == lam:
            continue
        acc = Fraction(0)
        for alpha in rs.positive_roots:
            v = _add(w, alpha)
            while v in depth:
                acc += mult[weyl_dominant(rs, v)] * inner_product(rs, v, alpha)
                v = _add(v, alpha)
        denom = top - inner_product(rs, _add(w, rho), _add(w, rho))
        m = 2 * acc / denom
        assert m.denominator == 1 and m > 0, (lam, w, m)
        mult[w] = int(m)

    out = {w: mult[weyl_dominant(rs, w)] for w in depth}
    rs._weight_system_cache[lam] = out
    return out


def weyl_dimension(rs: RootSystem, lam: Sequence[int]) -> int:
    """Dimension of the irreducible with highest weight ``lam`` (Weyl
    dimension formula, exact)."""
    lam = tuple(int(x) for x in lam)
    if not is_dominant(lam):
        raise NotDominant(f"highest weight {lam} is not dominant")
    cached = rs._dimension_cache.get(lam)
    if cached is not None:
        return cached
    rho = rs.rho
    shifted = _add(lam, rho)
    result = Fraction(1)
    for alpha in rs.positive_roots:
        result *= Fraction(inner_product(rs, shifted, alpha),
                           inner_product(rs, rho, alpha))
    assert result.denominator == 1
    out = int(result)
    rs._dimension_cache[lam] = out
    return out


def tensor_decompose(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]) -> CharElement:
    """Decompose the classical tensor product V_lam (x) V_mu.

    Racah-Speiser: every weight xi of V_mu contributes its multiplicity,
    signed by the rho-shifted dominant reduction of lam + xi.  The smaller
    weight system is the one enumerated.
    """
    lam = tuple(int(x) for x in lam)
    mu = tuple(int(x) for x in mu)
    if weyl_dimension(rs, mu) > weyl_dimension(rs, lam):
        lam, mu = mu, lam
    acc: dict[Weight, int] = {}
    for xi, m in weight_multiplicities(rs, mu).items():
        red, s = dominant_reduce(rs, _add(lam, xi))
        if s:
            acc[red] = acc.get(red, 0) + m * s
    return CharElement(acc)


# ---------------------------------------------------------------------------
# fusion product (exact path)

def _fuse_basis(ctx: FusionContext, m1: Weight, m2: Weight) -> dict[Weight, int]:
    key = (m1, m2) if m1 <= m2 else (m2, m1)
    cached = ctx._pair_cache.get(key)
    if cached is not None:
        return cached
    acc: dict[Weight, int] = {}
    for nu, t in tensor_decompose(ctx.rs, key[0], key[1]).items():
        red, s = affine_reduce(ctx, nu)
        if s:
            acc[red] = acc.get(red, 0) + t * s
    out = {w: c for w, c in acc.items() if c}
    ctx._pair_cache[key] = out
    return out


def fuse(ctx: FusionContext, a: FusionElement, b: FusionElement) -> FusionElement:
    """Fusion product, bilinear over the cached basis products."""
    for operand in (a, b):
        if not isinstance(operand, FusionElement):
            raise TypeError(f"expected FusionElement, got {type(operand).__name__}")
        if operand.ctx.key != ctx.key:
            raise ContextMismatch(f"{operand.ctx!r} does not match {ctx!r}")
    acc: dict[Weight, int] = {}
    for m1, c1 in a.coeffs.items():
        for m2, c2 in b.coeffs.items():
            for w, c in _fuse_basis(ctx, m1, m2).items():
                acc[w] = acc.get(w, 0) + c1 * c2 * c
    return FusionElement(ctx, acc)


def charge_conjugate(ctx: FusionContext, mu: Sequence[int]) -> Weight:
    """Dual basis label: the dominant representative of -mu."""
    w = ctx.require_basis(mu)
    return weyl_dominant(ctx.rs, tuple(-x for x in w))


def trace(ctx: FusionContext, a: FusionElement) -> int:
    """Frobenius trace: the coefficient of the unit."""
    if a.ctx.key != ctx.key:
        raise ContextMismatch(f"{a.ctx!r} does not match {ctx!r}")
    return a.coeffs.get((0,) * ctx.rs.rank, 0)


def frobenius_matrix(ctx: FusionContext) -> np.ndarray:
    """Pairing matrix P[i][j] = trace(sigma_i * sigma_j), integer."""
    n = len(ctx.basis)
    origin = (0,) * ctx.rs.rank
    out = np.zeros((n, n), dtype=np.int64)
    for i, m1 in enumerate(ctx.basis):
        for j, m2 in enumerate(ctx.basis):
            out[i, j] = _fuse_basis(ctx, m1, m2).get(origin, 0)
    return out


def horn_support(ctx: FusionContext, mu1: Sequence[int], mu2: Sequence[int]) -> set[Weight]:
    """Conjugacy classes appearing in the product set C_mu1 . C_mu2, i.e.
    the support of the fusion product of the two basis elements."""
    m1 = ctx.require_basis(mu1)
    m2 = ctx.require_basis(mu2)
    return set(_fuse_basis(ctx, m1, m2))


# ---------------------------------------------------------------------------
# numerical S-matrix oracle

def _unit_phase(q: Fraction) -> complex:
    # exp(2 pi i q) for exact rational q, reduced mod 1 before rounding
    return cmath.exp(2j * math.pi * float(q % 1))


def s_matrix(ctx: FusionContext) -> np.ndarray:
    """Kac-Peterson S-matrix at shifted level k, floating point.

    S[i][j] = c * sum_w det(w) exp(-2 pi i <w(mu_i + rho), mu_j + rho> / k)
    over the finite Weyl group, with c > 0 fixed by unitarity of the first
    row.  Enumerating the Weyl orbit caps the rank at 4.
    """
    if ctx._smatrix is not None:
        return ctx._smatrix
    rs = ctx.rs
    if rs.rank > _SMATRIX_RANK_CAP:
        raise RankTooLarge(f"S-matrix limited to rank <= {_SMATRIX_RANK_CAP}")
    k = ctx.twist_level
    basis = ctx.basis
    n = len(basis)
    shifted = [_add(mu, rs.rho) for mu in basis]
    raw = np.zeros((n, n), dtype=complex)
    for i, lam in enumerate(shifted):
        orbit = signed_weyl_orbit(rs, lam)
        for j, mu in enumerate(shifted):
            total = 0j
            for v, sgn in orbit.items():
                total += sgn * _unit_phase(-inner_product(rs, v, mu) / k)
            raw[i, j] = total
    gram = raw @ raw.conj().T
    scale = 1.0 / math.sqrt(gram[0, 0].real)
    s = scale * raw
    s.flags.writeable = False
    ctx._smatrix = s
    return s


def fuse_via_smatrix(ctx: FusionContext, mu1: Sequence[int],
                     mu2: Sequence[int]) -> dict[Weight, int]:
    """Verlinde-formula oracle for one basis pair.

    N^nu = sum_sigma S[mu1,s] S[mu2,s] conj(S[nu,s]) / S[0,s], rounded;
    every entry must sit within 1e-6 of a non-negative integer.
    """
    s = s_matrix(ctx)
    i1 = ctx.index[ctx.require_basis(mu1)]
    i2 = ctx.index[ctx.require_basis(mu2)]
    vec = s[i1] * s[i2] / s[0]
    sums = s.conj() @ vec
    out: dict[Weight, int] = {}
    for j, z in enumerate(sums):
        nearest = round(z.real)
        if abs(z - nearest) > _ORACLE_TOL or nearest < 0:
            raise NonIntegralOracle(
                f"Verlinde sum {z} at {ctx.basis[j]} is not a non-negative integer")
        if nearest:
            out[ctx.basis[j]] = int(nearest)
    return out
