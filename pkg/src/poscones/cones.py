"""Positive cones on algebras with involution.

At every non-nil ordering P of the base field there are exactly two
cones, mirror images of each other; a cone is addressed by the handle
(P, eps) with eps in {+1, -1}.  A symmetric element u belongs to the
cone when every nonzero diagonal entry of its reduced diagonalization
has sign eps at P; the cone with eps = +1 contains phi.

Cones transfer along the same moves as forms: going up D -> M_ell(D)
(pointwise positive semidefiniteness), going down (values of the
pairing), and twisting the involution by a symmetric unit.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebra import AlgebraWithInvolution, DElem, MatD
from .errors import (
    InternalInvariantViolation,
    NilOrdering,
    NotSymmetric,
    OrderingNotInXTilde,
)
from .field import FieldElem
from .forms import HermitianForm, diagonalize, rank_one
from .morita import base_algebra, full_reduction, theta_algebra
from .orders import classify, x_tilde
from .sampling import rand_matd, rand_positive_at
from .signature import eta_maximal, is_positive_involution, m_p, sign_eta

__all__ = [
    "PositiveCone",
    "enumerate_cones",
    "member",
    "psd_up",
    "trace_down",
    "scale_cone",
    "ConeSample",
    "gen_cone_sample",
    "PropernessResult",
    "properness_check",
    "positive_involution_at",
    "formally_real",
    "harrison_sigma",
    "is_maximal_on",
    "max_q_agreement",
]


@dataclass(frozen=True)
class PositiveCone:
    """Handle (ordering, eps) for one of the two cones over an ordering."""

    alg: AlgebraWithInvolution
    ordering: int
    eps: int

    def __post_init__(self) -> None:
        if self.eps not in (1, -1):
            raise ValueError("eps must be +1 or -1")
        info = classify(self.alg, self.ordering)
        if info.nil:
            raise NilOrdering(
                f"no positive cones over nil ordering {self.ordering}"
            )

    def __str__(self) -> str:
        sign = "+" if self.eps == 1 else "-"
        return f"cone(P{self.ordering}, {sign})"


def enumerate_cones(alg: AlgebraWithInvolution) -> tuple[PositiveCone, ...]:
    """All positive cones on the algebra: two per non-nil ordering."""
    out = []
    for p in x_tilde(alg):
        out.append(PositiveCone(alg, p, 1))
        out.append(PositiveCone(alg, p, -1))
    return tuple(out)


def member(u: MatD, cone: PositiveCone) -> bool:
    """Exact membership of a symmetric element in the cone."""
    alg = cone.alg
    if not alg.is_symmetric(u):
        raise NotSymmetric("element is not sigma-symmetric")
    res = diagonalize(full_reduction(rank_one(alg, u)).gram)
    return all(
        e.is_zero() or e.sign_at(cone.ordering) == cone.eps for e in res.entries
    )


def psd_up(cone: PositiveCone, ell: int) -> PositiveCone:
    """Cone of pointwise-positive matrices over (M_ell(D), theta_t)."""
    if cone.alg.ell != 1 or not cone.alg.has_standard_involution:
        raise ValueError("going up starts from a cone on (D, theta)")
    target = AlgebraWithInvolution(
        ell, cone.alg.div, MatD.identity(cone.alg.div, ell)
    )
    return PositiveCone(target, cone.ordering, cone.eps)


def trace_down(cone: PositiveCone) -> PositiveCone:
    """Cone of pairing values down on (D, theta); inverse of psd_up."""
    if not cone.alg.has_standard_involution:
        raise ValueError("going down starts from a conjugate-transpose cone")
    return PositiveCone(base_algebra(cone.alg.div), cone.ordering, cone.eps)


def scale_cone(a: MatD, cone: PositiveCone) -> PositiveCone:
    """The cone a * K on the algebra with involution twisted by a.

    Membership transfers exactly: u in K iff a*u in scale_cone(a, K).
    Central field scalars keep the algebra handle and flip eps by their
    sign; general symmetric units move the handle to phi' = a * phi.
    """
    alg = cone.alg
    if not alg.is_symmetric(a):
        raise NotSymmetric("scaling element is not sigma-symmetric")
    a.inverse()  # raises Singular when not a unit
    scalar_diag = [a[i, i] for i in range(alg.ell)]
    if (
        all(e.is_scalar() for e in scalar_diag)
        and len({e for e in scalar_diag}) == 1
        and a == MatD.scalar(alg.div, scalar_diag[0], alg.ell)
    ):
        lam = scalar_diag[0].scalar()
        return PositiveCone(
            alg, cone.ordering, cone.eps * lam.sign_at(cone.ordering)
        )
    target = AlgebraWithInvolution(alg.ell, alg.div, a * alg.phi)
    return PositiveCone(target, cone.ordering, cone.eps)


# -- sampled cone closures -----------------------------------------------------


@dataclass(frozen=True)
class ConeSample:
    """Finite sample of a cone closure from a generator set."""

    alg: AlgebraWithInvolution
    ordering: int
    generators: tuple[MatD, ...]
    elements: tuple[MatD, ...]


def gen_cone_sample(
    alg: AlgebraWithInvolution,
    generators: Sequence[MatD],
    p: int,
    budget: int = 300,
    seed: int = 0,
) -> ConeSample:
    """Sample the closure of the generators under the cone operations.

    Closure steps: sums, twisted squares sigma(x) * s * x, and scaling by
    field elements positive at p.  The first elements enumerated are the
    twisted squares of the generators along all single-entry matrices,
    which suffice to expose improper generator sets.
    """
    classify(alg, p)  # validates the ordering
    gens = tuple(generators)
    for s in gens:
        if not alg.is_symmetric(s):
            raise NotSymmetric("generator is not sigma-symmetric")
    rng = random.Random(seed)
    pool: list[MatD] = list(gens)
    out: list[MatD] = list(gens)

    def push(x: MatD) -> None:
        pool.append(x)
        out.append(x)

    # deterministic twisted squares of the generators by single-entry
    # matrices: sigma(x) * s * x picks out diagonal values of s
    units: list[MatD] = []
    for r in range(alg.ell):
        for c in range(alg.ell):
            for beta in alg.div.basis():
                m = [[alg.div.zero()] * alg.ell for _ in range(alg.ell)]
                m[r][c] = beta
                units.append(MatD(alg.div, m))
    for s in gens:
        for x in units:
            if len(out) >= budget:
                break
            push(alg.sigma(x) * s * x)

    while len(out) < budget:
        op = rng.randrange(3)
        if op == 0:
            push(rng.choice(pool) + rng.choice(pool))
        elif op == 1:
            x = rand_matd(rng, alg.div, alg.ell, alg.ell)
            push(alg.sigma(x) * rng.choice(pool) * x)
        else:
            lam = rand_positive_at(rng, alg.field, p)
            push(rng.choice(pool).scale_field(lam))
    return ConeSample(alg, p, gens, tuple(out[:budget]))


@dataclass(frozen=True)
class PropernessResult:
    proper: bool
    witness: MatD | None = None


def properness_check(sample: ConeSample) -> PropernessResult:
    """Search the sample for a nonzero u with both u and -u present."""
    seen = set(sample.elements)
    for u in sample.elements:
        if not u.is_zero() and (-u) in seen:
            return PropernessResult(False, u)
    return PropernessResult(True, None)


# -- positive involutions and global structure --------------------------------


def positive_involution_at(
    alg: AlgebraWithInvolution, p: int
) -> tuple[MatD, AlgebraWithInvolution]:
    """Construct b with tau = Int(b) o sigma positive at ordering p.

    b is the inverse of the maximal-signature witness; the twisted algebra
    (same underlying matrices, twist matrix b * phi) is returned alongside.
    Raises NilOrdering when p is nil, where no positive involution exists.
    """
    _, c = m_p(alg, p)
    b = c.inverse()
    tau_alg = AlgebraWithInvolution(alg.ell, alg.div, b * alg.phi)
    if not is_positive_involution(alg, b, p):
        raise InternalInvariantViolation("constructed involution not positive")
    return b, tau_alg


def formally_real(alg: AlgebraWithInvolution) -> bool:
    """True when some ordering is non-nil (equivalently, some hermitian
    form has nonzero signature somewhere)."""
    return len(x_tilde(alg)) > 0


def harrison_sigma(
    alg: AlgebraWithInvolution, elems: Sequence[MatD]
) -> tuple[PositiveCone, ...]:
    """All cones containing every listed symmetric element."""
    cones = enumerate_cones(alg)
    return tuple(k for k in cones if all(member(a, k) for a in elems))


def is_maximal_on(
    alg: AlgebraWithInvolution, u: MatD, orderings_subset: Iterable[int]
) -> bool:
    """True when u attains the maximal signature at every listed ordering."""
    good = set(x_tilde(alg))
    ys = tuple(orderings_subset)
    for p in ys:
        if p not in good:
            raise OrderingNotInXTilde(f"ordering {p} is nil or invalid")
    return all(eta_maximal(alg, u, p) for p in ys)


def max_q_agreement(
    alg: AlgebraWithInvolution,
    u: MatD,
    orderings_subset: Iterable[int],
    reference: MatD | None = None,
) -> bool:
    """Check the cone characterization of maximality on a set of orderings.

    For a reference element known to be maximal on the set (phi by
    default), compares "u lies in exactly the cones containing the
    reference" with is_maximal_on(u, ...); returns True when the two
    criteria agree.  u must be nonzero: the zero element lies in every
    cone, so the left-hand criterion is degenerate for it.
    """
    ys = tuple(orderings_subset)
    good = set(x_tilde(alg))
    for p in ys:
        if p not in good:
            raise OrderingNotInXTilde(f"ordering {p} is nil or invalid")
    if u.is_zero():
        raise ValueError("reference comparison requires a nonzero element")
    if reference is None:
        reference = alg.phi
    if not is_maximal_on(alg, reference, ys):
        raise ValueError("reference element is not maximal on the set")
    cones = [
        PositiveCone(alg, p, eps) for p in ys for eps in (1, -1)
    ]
    lhs = all(member(u, k) == member(reference, k) for k in cones)
    rhs = is_maximal_on(alg, u, ys)
    return lhs == rhs
