"""Built-in algebras with involution used by the CLI and the test suite.

The collection covers all three division-algebra kinds over Q and over
Q(sqrt(2)), with matrix sizes 1..3 and both the plain conjugate-transpose
involution and a twisted one.  The two Q(sqrt(2)) families have one nil
ordering each (the embedding sqrt(2) -> -sqrt(2)), so nil behavior is
exercised alongside the definite cases.
"""

from __future__ import annotations

from .algebra import AlgebraWithInvolution, DivisionAlgebraDesc, MatD
from .field import FieldDesc

__all__ = ["zoo_names", "zoo_algebra", "zoo_all"]


def _split_q(n: int) -> AlgebraWithInvolution:
    div = DivisionAlgebraDesc(FieldDesc(), "split")
    return AlgebraWithInvolution(n, div, MatD.identity(div, n))


def _split_q2_indef() -> AlgebraWithInvolution:
    div = DivisionAlgebraDesc(FieldDesc(), "split")
    phi = MatD.diagonal(div, [div.from_field(1), div.from_field(-1)])
    return AlgebraWithInvolution(2, div, phi)


def _quat_q(n: int) -> AlgebraWithInvolution:
    f = FieldDesc()
    div = DivisionAlgebraDesc(f, "quat", (f.one(), f.one()))
    return AlgebraWithInvolution(n, div, MatD.identity(div, n))


def _quat_rt2(n: int) -> AlgebraWithInvolution:
    f = FieldDesc(2)
    div = DivisionAlgebraDesc(f, "quat", (f.one(), f.elem(1, 1)))
    return AlgebraWithInvolution(n, div, MatD.identity(div, n))


def _quad_rt2(n: int) -> AlgebraWithInvolution:
    f = FieldDesc(2)
    div = DivisionAlgebraDesc(f, "quad", (f.sqrt_gen(),))
    return AlgebraWithInvolution(n, div, MatD.identity(div, n))


_BUILDERS = {
    "split-q-1": lambda: _split_q(1),
    "split-q-2": lambda: _split_q(2),
    "split-q-3": lambda: _split_q(3),
    "split-q-2-indef": _split_q2_indef,
    "quat-q-1": lambda: _quat_q(1),
    "quat-q-2": lambda: _quat_q(2),
    "quat-rt2-1": lambda: _quat_rt2(1),
    "quat-rt2-2": lambda: _quat_rt2(2),
    "quad-rt2-1": lambda: _quad_rt2(1),
    "quad-rt2-2": lambda: _quad_rt2(2),
}


def zoo_names() -> tuple[str, ...]:
    return tuple(_BUILDERS)


def zoo_algebra(name: str) -> AlgebraWithInvolution:
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise KeyError(
            f"unknown algebra {name!r}; available: {', '.join(_BUILDERS)}"
        ) from None
    return builder()


def zoo_all() -> dict[str, AlgebraWithInvolution]:
    return {name: b() for name, b in _BUILDERS.items()}
