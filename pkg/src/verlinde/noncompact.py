"""Transport of the fusion ring to the noncompact side of the dictionary
for a complex semisimple group G with maximal compact K.

K-homology of the (twisted, conjugation-equivariant) group C*-algebra is
free on the regular level-k weights; Dirac induction is the rho-shift
``[V_mu] -> beta_{mu+rho}``, so every ring operation transports through
that relabelling.  The quotient by the induced Verlinde ideal is the
fusion ring again, and the quantized induced-conjugacy-class spaces
``D_mu = G x_K C_mu`` form its generator set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .alcove import AlcovePosition, FusionContext, alcove_position, fusion_context
from .errors import (
    ContextMismatch,
    LevelBelowDualCoxeter,
    LevelOverflow,
    LevelZero,
    NotDominant,
)
from .fusion import FusionElement, fuse, sigma
from .rootsystem import RootSystem, Weight, is_dominant, level, weights_with_level_bound


def degree_parity(rs: RootSystem) -> int:
    """K-degree carrying the classes: parity of dim(G/K) for complex G,
    which equals dim K = rank + |roots| and hence rank mod 2."""
    return rs.rank % 2


@dataclass(frozen=True)
class NoncompactBasisElement:
    """Free-basis label of the twisted K-homology of G: a strictly
    dominant (regular) weight at a fixed twist level."""

    regular_weight: Weight
    twist_level: int

    def __post_init__(self):
        if any(x < 1 for x in self.regular_weight):
            raise NotDominant(
                f"regular weight {self.regular_weight} must have labels >= 1")

    @property
    def parity(self) -> int:
        """K-degree flag of the class (dim G/K mod 2)."""
        return len(self.regular_weight) % 2


def regular_level_weights(rs: RootSystem, k: int) -> list[Weight]:
    """Strictly dominant weights of level at most k-1, sorted
    lexicographically.  These label the basis at twist level k."""
    if k < rs.dual_coxeter:
        raise LevelBelowDualCoxeter(
            f"twist level {k} is below the dual Coxeter number {rs.dual_coxeter}")
    return weights_with_level_bound(rs, k - 1, floor=1)


def dirac_induce(rs: RootSystem, k: int, mu: Sequence[int]) -> NoncompactBasisElement:
    """Dirac induction of an irreducible class: the rho-shift mu -> mu+rho."""
    w = tuple(int(x) for x in mu)
    if not is_dominant(w):
        raise NotDominant(f"weight {w} is not dominant")
    if level(rs, w) > k - rs.dual_coxeter:
        raise LevelOverflow(
            f"level {level(rs, w)} exceeds k - h_vee = {k - rs.dual_coxeter}")
    return NoncompactBasisElement(tuple(x + 1 for x in w), k)


def q_map(ctx: FusionContext, a: FusionElement) -> dict[NoncompactBasisElement, int]:
    """Relabel a fusion element by the rho-shift; an isomorphism onto the
    span of the regular level-k basis."""
    if a.ctx.key != ctx.key:
        raise ContextMismatch(f"{a.ctx!r} does not match {ctx!r}")
    k = ctx.twist_level
    return {dirac_induce(ctx.rs, k, mu): c for mu, c in a.items()}


def _pull_back(rs: RootSystem, k: int,
               x: Mapping[NoncompactBasisElement, int]) -> FusionElement:
    ctx = fusion_context(rs, k - rs.dual_coxeter)
    coeffs: dict[Weight, int] = {}
    for elem, c in x.items():
        if elem.twist_level != k:
            raise ContextMismatch(
                f"basis element at twist level {elem.twist_level}, expected {k}")
        sig = elem.regular_weight
        if len(sig) != rs.rank:
            raise ContextMismatch(
                f"label {sig} has {len(sig)} entries, rank is {rs.rank}")
        if level(rs, sig) > k - 1:
            raise LevelOverflow(f"regular weight {sig} has level > {k - 1}")
        mu = tuple(s - 1 for s in sig)
        coeffs[mu] = coeffs.get(mu, 0) + c
    return FusionElement(ctx, coeffs)


def quotient_product(rs: RootSystem, k: int,
                     x: Mapping[NoncompactBasisElement, int],
                     y: Mapping[NoncompactBasisElement, int],
                     ) -> dict[NoncompactBasisElement, int]:
    """Product of the quotient ring (K-homology of G modulo the induced
    Verlinde ideal), computed by transport: q(a) . q(b) = q(fuse(a, b))."""
    if k < rs.dual_coxeter:
        raise LevelBelowDualCoxeter(
            f"twist level {k} is below the dual Coxeter number {rs.dual_coxeter}")
    ctx = fusion_context(rs, k - rs.dual_coxeter)
    return q_map(ctx, fuse(ctx, _pull_back(rs, k, x), _pull_back(rs, k, y)))


@dataclass(frozen=True)
class QHamiltonianGenerator:
    """Generator class of the quotient ring: the quantization of the
    induced space D_mu = G x_K C_mu over the conjugacy class C_mu.

    ``description`` records the correspondence symbolically: the proper
    base leg b and the conjugation leg f.  ``position`` locates C_mu in
    the fundamental alcove.
    """

    mu: Weight
    position: AlcovePosition
    description: str
    ctx: FusionContext = field(repr=False, compare=False)


def make_generator(ctx: FusionContext, mu: Sequence[int]) -> QHamiltonianGenerator:
    """Build the generator record for one basis weight (needs level >= 1)."""
    if ctx.fusion_level == 0:
        raise LevelZero("generators need a positive fusion level")
    w = ctx.require_basis(mu)
    pos = alcove_position(ctx, w)
    label = "[" + ",".join(str(x) for x in w) + "]"
    description = (
        f"D_{label} = G x_K C_{label}; "
        f"C_{label} = conjugacy class of exp(B(mu)/{ctx.fusion_level}); "
        f"legs b: D_{label} -> G/K (proper), f: [g, c] -> g c g^-1"
    )
    return QHamiltonianGenerator(mu=w, position=pos, description=description, ctx=ctx)


def quantize_product(ctx: FusionContext, g1: QHamiltonianGenerator,
                     g2: QHamiltonianGenerator) -> FusionElement:
    """Kasparov product of two quantized generators, expanded in the
    generator classes; equals the fusion product of the labels."""
    for g in (g1, g2):
        if g.ctx.key != ctx.key:
            raise ContextMismatch(f"{g.ctx!r} does not match {ctx!r}")
    return fuse(ctx, sigma(ctx, g1.mu), sigma(ctx, g2.mu))
