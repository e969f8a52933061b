"""Seeded random generators for elements, matrices and forms.

All sampling is driven by an explicit random.Random instance so every
caller is reproducible.  Entries are kept small; all downstream
arithmetic is exact, so the samples certify whatever they witness.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import AlgebraWithInvolution, DElem, DivisionAlgebraDesc, MatD
from .errors import Singular
from .field import FieldDesc, FieldElem

__all__ = [
    "rand_fieldelem",
    "rand_positive_at",
    "rand_delem",
    "rand_matd",
    "rand_hermitian",
    "rand_symmetric",
    "rand_invertible_symmetric",
    "rand_hermitian_form_gram",
]


def rand_fieldelem(
    rng: random.Random,
    field: FieldDesc,
    span: int = 3,
    allow_sqrt: bool = True,
) -> FieldElem:
    a = Fraction(rng.randint(-span, span))
    if field.d is None or not allow_sqrt:
        return field.elem(a)
    b = Fraction(rng.randint(-span, span)) if rng.random() < 0.7 else Fraction(0)
    return field.elem(a, b)


def rand_positive_at(rng: random.Random, field: FieldDesc, p: int) -> FieldElem:
    """A field element strictly positive at ordering p."""
    while True:
        x = rand_fieldelem(rng, field)
        if x.sign_at(p) == 1:
            return x


def rand_delem(rng: random.Random, div: DivisionAlgebraDesc, span: int = 3) -> DElem:
    coords = tuple(
        rand_fieldelem(rng, div.base, span)
        if rng.random() < 0.8
        else div.base.zero()
        for _ in range(div.dim)
    )
    return DElem(div, coords)


def rand_matd(
    rng: random.Random,
    div: DivisionAlgebraDesc,
    rows: int,
    cols: int,
    span: int = 2,
) -> MatD:
    return MatD(
        div,
        [[rand_delem(rng, div, span) for _ in range(cols)] for _ in range(rows)],
    )


def rand_hermitian(
    rng: random.Random,
    div: DivisionAlgebraDesc,
    n: int,
    span: int = 2,
    singular: bool = False,
) -> MatD:
    """Random theta-hermitian n x n matrix; optionally of deficient rank.

    Built as theta_t(R) * diag(d) * R with field diagonal d, so hermitian
    by construction; singular=True zeroes part of the diagonal.
    """
    d = []
    for i in range(n):
        if singular and (i == n - 1 or rng.random() < 0.4):
            d.append(div.base.zero())
        else:
            val = rand_fieldelem(rng, div.base, span)
            d.append(val if not val.is_zero() else div.base.one())
    diag = MatD.diagonal(div, [div.from_field(c) for c in d])
    r = rand_matd(rng, div, n, n, span)
    return r.theta_t() * diag * r


def rand_symmetric(
    rng: random.Random, alg: AlgebraWithInvolution, span: int = 2
) -> MatD:
    """Random sigma-symmetric element, built as y + sigma(y)."""
    y = rand_matd(rng, alg.div, alg.ell, alg.ell, span)
    return y + alg.sigma(y)


def rand_invertible_symmetric(
    rng: random.Random, alg: AlgebraWithInvolution, span: int = 2
) -> MatD:
    """Random sigma-symmetric unit (rejection sampling)."""
    while True:
        x = rand_symmetric(rng, alg, span)
        try:
            x.inverse()
        except Singular:
            continue
        return x


def rand_hermitian_form_gram(
    rng: random.Random,
    alg: AlgebraWithInvolution,
    rank: int,
    span: int = 2,
    nonsingular: bool = False,
) -> MatD:
    """Flattened Gram of a random sigma-hermitian form of the given rank."""
    ell = alg.ell
    n = rank * ell
    while True:
        blocks = [[None] * rank for _ in range(rank)]
        for i in range(rank):
            y = rand_matd(rng, alg.div, ell, ell, span)
            blocks[i][i] = y + alg.sigma(y)
            for j in range(i + 1, rank):
                b = rand_matd(rng, alg.div, ell, ell, span)
                blocks[i][j] = b
                blocks[j][i] = alg.sigma(b)
        rows = []
        for i in range(rank):
            for r in range(ell):
                row = []
                for j in range(rank):
                    row.extend(blocks[i][j].entries[r])
                rows.append(row)
        gram = MatD(alg.div, rows)
        if not nonsingular:
            return gram
        try:
            gram.inverse()
        except Singular:
            continue
        return gram
