"""Signatures of hermitian forms at orderings of the base field.

The signature used everywhere is normalized so that the rank-one form
whose reduction to (D, theta) is <1, ..., 1> has positive signature; in
particular sign_eta(<phi>, P) = +n_P at every non-nil ordering.  With
that normalization:

    sign_eta(h, P) = 0 at nil orderings, and otherwise the sum of the
    signs at P of the diagonal entries of the reduced, diagonalized form.

Any other admissible normalization differs from this one by a global sign
per ordering, which cancels in every absolute-value criterion below.
"""

from __future__ import annotations

from dataclasses import dataclass

from fractions import Fraction

from .algebra import AlgebraWithInvolution, DivisionAlgebraDesc, MatD
from .errors import (
    InternalInvariantViolation,
    NilOrdering,
    NotSymmetric,
    Singular,
)
from .field import FieldElem
from .forms import (
    HermitianForm,
    QuadraticFormF,
    diag_form,
    diagonalize,
    nonsingular_part,
    rank_one,
    tensor,
    times,
    unit_form,
)
from .morita import full_reduction
from .orders import classify, orderings_of

__all__ = [
    "REFERENCE_CONVENTION",
    "sign_eta",
    "m_p",
    "in_m_p",
    "eta_maximal",
    "SylvesterDecomposition",
    "pre_sylvester",
    "sign_cone",
    "trace_form",
    "is_positive_involution",
]

# Marker for the normalization in force; see module docstring.
REFERENCE_CONVENTION = "reduction-positive"


def sign_eta(h: HermitianForm, p: int, strategy: str = "first") -> int:
    """Signature of h at ordering p under the reference normalization."""
    info = classify(h.alg, p)
    if info.nil:
        return 0
    res = diagonalize(full_reduction(h).gram, strategy)
    return sum(e.sign_at(p) for e in res.entries)


def m_p(alg: AlgebraWithInvolution, p: int) -> tuple[int, MatD]:
    """Largest rank-one signature at p, with an element attaining it.

    Returns (n_P, c) where c is symmetric, invertible, and
    sign_eta(<c>, p) == n_P.  Raises NilOrdering at nil orderings, where
    every signature vanishes.
    """
    info = classify(alg, p)
    if info.nil:
        raise NilOrdering(f"all signatures vanish at ordering {p}")
    res = diagonalize(alg.phi)
    phis = res.entries
    if any(e.is_zero() for e in phis):
        raise InternalInvariantViolation("twist matrix diagonalized to a zero")
    g = res.witness
    flipped = MatD.diagonal(
        alg.div,
        [alg.div.from_field(e * e.sign_at(p)) for e in phis],
    )
    g_inv = g.inverse()
    n = g_inv.theta_t() * flipped * g_inv
    c = alg.phi * n
    value = sign_eta(rank_one(alg, c), p)
    if value != info.n_p:
        raise InternalInvariantViolation("witness element missed the bound")
    return info.n_p, c


def in_m_p(alg: AlgebraWithInvolution, a: MatD, p: int) -> bool:
    """Membership in the maximal-signature set: zero, or symmetric
    invertible with sign_eta(<a>, p) == n_P."""
    info = classify(alg, p)
    if info.nil:
        raise NilOrdering(f"all signatures vanish at ordering {p}")
    if not alg.is_symmetric(a):
        raise NotSymmetric("element is not sigma-symmetric")
    if a.is_zero():
        return True
    try:
        a.inverse()
    except Singular:
        return False
    return sign_eta(rank_one(alg, a), p) == info.n_p


def eta_maximal(alg: AlgebraWithInvolution, u: MatD, p: int) -> bool:
    """True when the nonsingular part of <u> attains the maximal signature.

    Criterion: every nonzero diagonal entry of the reduced diagonalization
    of <u> is positive at p.
    """
    info = classify(alg, p)
    if info.nil:
        raise NilOrdering(f"all signatures vanish at ordering {p}")
    if not alg.is_symmetric(u):
        raise NotSymmetric("element is not sigma-symmetric")
    res = diagonalize(full_reduction(rank_one(alg, u)).gram)
    return all(e.is_zero() or e.sign_at(p) == 1 for e in res.entries)


# -- Sylvester-style decomposition -------------------------------------------


@dataclass(frozen=True)
class SylvesterDecomposition:
    """ell^2 x h decomposed as (<pos> + <neg>) tensor <identity>.

    pos holds field coefficients positive at the ordering, neg the negative
    ones; r = len(pos), s = len(neg); t counts the scaling coefficients
    betas (a single 1 here).  The normalized signature is
    (r - s) / (n_P * t).
    """

    ordering: int
    n_p: int
    t: int
    betas: tuple[FieldElem, ...]
    pos: tuple[FieldElem, ...]
    neg: tuple[FieldElem, ...]

    @property
    def r(self) -> int:
        return len(self.pos)

    @property
    def s(self) -> int:
        return len(self.neg)

    def sign_value(self, eps: int = 1) -> int:
        num = eps * (self.r - self.s)
        den = self.n_p * self.t
        if num % den != 0:
            raise InternalInvariantViolation("non-integral normalized signature")
        return num // den


def pre_sylvester(
    h: HermitianForm, p: int, strategy: str = "first"
) -> SylvesterDecomposition:
    """Decompose ell^2 copies of h into signed scalar forms at ordering p.

    Requires the plain conjugate-transpose involution, a non-nil ordering,
    and h nonsingular.  The decomposition is validated against ell^2 x h
    on rank and on signatures at every ordering of the field.
    """
    alg = h.alg
    if not alg.has_standard_involution:
        raise ValueError("decomposition requires the conjugate-transpose form")
    info = classify(alg, p)
    if info.nil:
        raise NilOrdering(f"all signatures vanish at ordering {p}")
    res = diagonalize(full_reduction(h).gram, strategy)
    if any(e.is_zero() for e in res.entries):
        raise Singular("form is singular")
    ell = alg.ell
    pos, neg = [], []
    for e in res.entries:
        (pos if e.sign_at(p) == 1 else neg).extend([e] * ell)
    dec = SylvesterDecomposition(
        ordering=p,
        n_p=info.n_p,
        t=1,
        betas=(alg.field.one(),),
        pos=tuple(pos),
        neg=tuple(neg),
    )

    lhs = times(ell * ell, h)
    rhs = tensor(QuadraticFormF(dec.pos + dec.neg), unit_form(alg))
    if rhs.rank != lhs.rank:
        raise InternalInvariantViolation("decomposition rank mismatch")
    for q in orderings_of(alg):
        if sign_eta(rhs, q) != sign_eta(lhs, q):
            raise InternalInvariantViolation("decomposition signature mismatch")
    return dec


def sign_cone(h: HermitianForm, cone) -> int:
    """Signature of h relative to a positive cone (P, eps).

    Equals eps * sign_eta at the cone's ordering; singular forms are
    replaced by their nonsingular part first.  When the decomposition
    route applies it is cross-checked.
    """
    ns, _ = nonsingular_part(h)
    value = cone.eps * sign_eta(ns, cone.ordering)
    if h.alg.has_standard_involution and ns.rank > 0:
        dec = pre_sylvester(ns, cone.ordering)
        if dec.sign_value(cone.eps) != value:
            raise InternalInvariantViolation("decomposition sign mismatch")
    return value


# -- involution trace forms ---------------------------------------------------


def _trd_prod(div, x, y) -> FieldElem:
    """Base-field part of the reduced trace of x * y, for x, y in D.

    Only the scalar coordinate of the product is needed: for split and
    quad kinds the reduced trace is the invariant part of that
    coordinate, for quaternions it is twice the scalar part.
    """
    kind = div.kind
    xc, yc = x.coords, y.coords
    if kind == "split":
        return xc[0] * yc[0]
    if kind == "quad":
        (d,) = div.params
        return xc[0] * yc[0] - d * (xc[1] * yc[1])
    a, b = div.params
    c0 = (
        xc[0] * yc[0]
        - a * (xc[1] * yc[1])
        - b * (xc[2] * yc[2])
        - a * (b * (xc[3] * yc[3]))
    )
    return c0 + c0


def trace_form(alg: AlgebraWithInvolution, b: MatD | None = None) -> QuadraticFormF:
    """Diagonalized form of x -> Trd(tau(x) * x) with tau = Int(b) o sigma.

    b defaults to the identity (tau = sigma); it must be sigma-symmetric
    and invertible.  The result is a diagonal quadratic form over the base
    field, of dimension dim_F(A).
    """
    if b is None:
        b = alg.identity()
    if not alg.is_symmetric(b):
        raise NotSymmetric("twisting element is not sigma-symmetric")
    b_inv = b.inverse()  # raises Singular when not invertible

    # The Gram is computed over the basis of single-entry matrices
    # e = E_{r,c} * beta.  For such e,
    #   tau(e) = b*phi * theta_t(E_{r,c} beta) * (b*phi)^-1
    # is the outer product with (p, w) entry  bp[p][c] * theta(beta) * pib[r][w]
    # where bp = b*phi and pib = (b*phi)^-1, and for any m in A,
    #   Trd(m * E_{r,c} beta) = trd_D(m[c][r] * beta).
    ell = alg.ell
    div = alg.div
    slots = [
        (r, c, beta)
        for r in range(ell)
        for c in range(ell)
        for beta in div.basis()
    ]
    bp = b * alg.phi
    pib = bp.inverse()
    thetas = [beta.theta() for _, _, beta in slots]
    # partial[i][w] = theta(beta_i) * pib[r_i][w]
    partial = [
        [thetas[i] * pib[slots[i][0], w] for w in range(ell)]
        for i in range(len(slots))
    ]

    half = alg.field.elem(Fraction(1, 2))
    dim = len(slots)
    fdiv = DivisionAlgebraDesc(alg.field, "split")  # Gram lives over F
    rows = [[None] * dim for _ in range(dim)]
    for i in range(dim):
        ri, ci, beta_i = slots[i]
        for j in range(i, dim):
            rj, cj, beta_j = slots[j]
            # tau(e_i)[c_j][r_j] = bp[c_j][c_i] * partial[i][r_j], and the
            # symmetrized entry averages Trd(tau(e_i) e_j) with i <-> j
            tij = _trd_prod(div, bp[cj, ci] * partial[i][rj], beta_j)
            tji = _trd_prod(div, bp[ci, cj] * partial[j][ri], beta_i)
            rows[i][j] = rows[j][i] = fdiv.from_field((tij + tji) * half)
    gram = MatD(fdiv, rows)
    res = diagonalize(gram)
    return QuadraticFormF(res.entries)


def is_positive_involution(alg: AlgebraWithInvolution, b: MatD, p: int) -> bool:
    """True when tau = Int(b) o sigma has positive-semidefinite trace form
    at ordering p.

    Cross-checked against the rank-one criterion
    |sign_eta(<b^-1>, p)| == n_P, which is equivalent and independent of
    the signature normalization.
    """
    q = trace_form(alg, b)
    psd = q.is_positive_semidefinite_at(p)
    info = classify(alg, p)
    by_sign = abs(sign_eta(rank_one(alg, b.inverse()), p)) == info.n_p
    if psd != by_sign:
        raise InternalInvariantViolation(
            "trace-form and signature criteria disagree"
        )
    return psd
