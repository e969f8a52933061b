"""Signatures, maximal-signature witnesses, decompositions, trace forms."""

from fractions import Fraction

import pytest

from poscones import (
    DivisionAlgebraDesc,
    FieldDesc,
    classify,
    direct_sum,
    orderings_of,
    MatD,
    NilOrdering,
    QuadraticFormF,
    Singular,
    diag_form,
    eta_maximal,
    in_m_p,
    is_positive_involution,
    m_p,
    pre_sylvester,
    rank_one,
    scale_form,
    sign_cone,
    sign_eta,
    tensor,
    times,
    trace_form,
    unit_form,
    x_tilde,
    zoo_algebra,
    zoo_names,
    PositiveCone,
)

Q = FieldDesc()
RT2 = FieldDesc(2)
SPLIT = DivisionAlgebraDesc(Q, "split")


def qmat(rows):
    return MatD(SPLIT, [[SPLIT.from_field(Fraction(x)) for x in r] for r in rows])


class TestSignEta:
    def test_twist_form_attains_n_p_off_nil(self):
        for name in zoo_names():
            alg = zoo_algebra(name)
            h = rank_one(alg, alg.phi)
            for p in orderings_of(alg):
                info = classify(alg, p)
                expected = 0 if info.nil else info.n_p
                assert sign_eta(h, p) == expected, name

    def test_hyperbolic_vanishes(self):
        alg = zoo_algebra("split-q-2")
        h = diag_form(alg, [alg.identity(), -alg.identity()])
        assert sign_eta(h, 0) == 0

    def test_additive_under_direct_sum(self):
        alg = zoo_algebra("quat-q-1")
        a = rank_one(alg, MatD.scalar(alg.div, 2, 1))
        b = rank_one(alg, MatD.scalar(alg.div, -3, 1))
        assert sign_eta(direct_sum(a, b), 0) == sign_eta(a, 0) + sign_eta(b, 0)

    def test_scale_form_preserves_signatures(self):
        alg = zoo_algebra("split-q-2")
        h = unit_form(alg)
        moved = scale_form(-alg.identity(), h)
        assert sign_eta(moved, 0) == sign_eta(h, 0)

    def test_negative_tensor_flips_the_sign(self):
        alg = zoo_algebra("split-q-2")
        h = unit_form(alg)
        flipped = tensor(QuadraticFormF((alg.field.elem(-1),)), h)
        assert sign_eta(flipped, 0) == -sign_eta(h, 0)

    def test_twisted_unit_form_indefinite(self):
        alg = zoo_algebra("split-q-2-indef")
        assert sign_eta(rank_one(alg, alg.phi), 0) == 2
        assert sign_eta(unit_form(alg), 0) == 0


class TestMaximalWitness:
    def test_indefinite_split_algebra(self):
        alg = zoo_algebra("split-q-2-indef")
        value, c = m_p(alg, 0)
        assert value == 2
        assert c == qmat([[1, 0], [0, -1]])
        assert in_m_p(alg, c, 0)

    def test_standard_algebras_take_the_identity(self):
        for name in ("split-q-2", "quat-q-2", "quad-rt2-2"):
            alg = zoo_algebra(name)
            value, c = m_p(alg, 0)
            assert value == classify(alg, 0).n_p
            assert in_m_p(alg, c, 0)

    def test_nil_ordering_raises(self):
        for name in ("quat-rt2-1", "quad-rt2-2"):
            with pytest.raises(NilOrdering):
                m_p(zoo_algebra(name), 1)

    def test_in_m_p_rejects_low_signature(self):
        alg = zoo_algebra("split-q-2")
        assert in_m_p(alg, alg.identity(), 0)
        assert not in_m_p(alg, qmat([[1, 0], [0, -1]]), 0)
        # zero belongs by convention; singular nonzero elements do not
        assert in_m_p(alg, MatD.zeros(SPLIT, 2, 2), 0)
        assert not in_m_p(alg, qmat([[1, 0], [0, 0]]), 0)

    def test_eta_maximal_uses_the_positive_convention(self):
        alg = zoo_algebra("split-q-2")
        assert eta_maximal(alg, alg.identity(), 0)
        assert not eta_maximal(alg, -alg.identity(), 0)
        assert not eta_maximal(alg, qmat([[1, 0], [0, -1]]), 0)
        # singular elements qualify through their nonsingular part
        assert eta_maximal(alg, qmat([[1, 0], [0, 0]]), 0)


class TestPreSylvester:
    def test_positive_definite_unit_form(self):
        alg = zoo_algebra("split-q-2")
        dec = pre_sylvester(unit_form(alg), 0)
        assert (dec.r, dec.s) == (4, 0)
        assert dec.n_p == 2 and dec.t == 1
        assert dec.sign_value(1) == 2 == sign_eta(unit_form(alg), 0)
        assert dec.sign_value(-1) == -2

    def test_balanced_form(self):
        alg = zoo_algebra("split-q-2")
        h = rank_one(alg, qmat([[1, 0], [0, -1]]))
        dec = pre_sylvester(h, 0)
        assert (dec.r, dec.s) == (2, 2)
        assert dec.sign_value(1) == 0

    def test_quaternion_unit(self):
        alg = zoo_algebra("quat-q-1")
        dec = pre_sylvester(unit_form(alg), 0)
        assert (dec.r, dec.s) == (1, 0)
        assert dec.sign_value(1) == 1

    def test_strategies_agree(self):
        alg = zoo_algebra("quat-q-2")
        h = diag_form(alg, [alg.identity(), -alg.identity()])
        a = pre_sylvester(h, 0, "first")
        b = pre_sylvester(h, 0, "last")
        assert (a.r, a.s) == (b.r, b.s)

    def test_requires_standard_involution(self):
        alg = zoo_algebra("split-q-2-indef")
        with pytest.raises(ValueError):
            pre_sylvester(unit_form(alg), 0)

    def test_rejects_singular_and_nil(self):
        alg = zoo_algebra("split-q-2")
        with pytest.raises(Singular):
            pre_sylvester(rank_one(alg, MatD.zeros(SPLIT, 2, 2)), 0)
        with pytest.raises(NilOrdering):
            pre_sylvester(unit_form(zoo_algebra("quat-rt2-1")), 1)


class TestSignCone:
    def test_matches_eps_times_sign(self):
        alg = zoo_algebra("split-q-2")
        h = unit_form(alg)
        plus = PositiveCone(alg, 0, 1)
        minus = PositiveCone(alg, 0, -1)
        assert sign_cone(h, plus) == 2
        assert sign_cone(h, minus) == -2

    def test_singular_forms_use_the_nonsingular_part(self):
        alg = zoo_algebra("split-q-1")
        h = diag_form(alg, [qmat([[1]]), qmat([[0]]), qmat([[1]])])
        assert sign_cone(h, PositiveCone(alg, 0, 1)) == 2


class TestTraceForm:
    def test_transpose_on_2x2_rationals(self):
        q = trace_form(zoo_algebra("split-q-2"))
        assert [e for e in q.entries] == [Q.elem(1)] * 4

    def test_indefinite_twist(self):
        q = trace_form(zoo_algebra("split-q-2-indef"))
        assert sorted(e.sign_at(0) for e in q.entries) == [-1, -1, 1, 1]
        assert not q.is_positive_semidefinite_at(0)

    def test_hamilton_quaternions(self):
        q = trace_form(zoo_algebra("quat-q-1"))
        assert [e for e in q.entries] == [Q.elem(2)] * 4

    def test_quadratic_extension(self):
        q = trace_form(zoo_algebra("quad-rt2-1"))
        assert [e for e in q.entries] == [RT2.one(), RT2.sqrt_gen()]
        assert q.is_positive_semidefinite_at(0)
        assert not q.is_positive_semidefinite_at(1)

    def test_dimension_matches_the_algebra(self):
        for name in zoo_names():
            alg = zoo_algebra(name)
            assert trace_form(alg).dim == alg.ell * alg.ell * alg.div.dim


class TestPositiveInvolution:
    def test_identity_twist(self):
        alg = zoo_algebra("split-q-2")
        assert is_positive_involution(alg, alg.identity(), 0)
        assert not is_positive_involution(alg, qmat([[1, 0], [0, -1]]), 0)

    def test_central_scalar_keeps_the_involution(self):
        # tau = Int(-1) o theta is theta itself, hence still positive
        alg = zoo_algebra("quat-q-1")
        assert is_positive_involution(alg, -alg.identity(), 0)

    def test_indefinite_twist_fails_on_matrices(self):
        alg = zoo_algebra("quat-q-2")
        b = MatD.diagonal(alg.div, [alg.div.from_field(1), alg.div.from_field(-1)])
        assert not is_positive_involution(alg, b, 0)

    def test_all_zoo_maximal_orderings_have_one(self):
        for name in zoo_names():
            alg = zoo_algebra(name)
            for p in x_tilde(alg):
                _, c = m_p(alg, p)
                assert is_positive_involution(alg, c.inverse(), p), name
