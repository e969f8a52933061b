"""Ordering classification tables for the built-in algebras."""

import pytest

from poscones import (
    FieldDesc,
    OrderingInfo,
    ZeroArgument,
    classify,
    classify_all,
    harrison,
    orderings_of,
    x_tilde,
    zoo_algebra,
    zoo_names,
)

RT2 = FieldDesc(2)

# name -> tuple of (class, n_P, nil) per ordering, frozen by hand from the
# local structure: split stays real, quad splits or stays quadratic by the
# sign of d, quaternions stay division or split to 2x matrices by (a, b)
EXPECTED = {
    "split-q-1": (("rcf", 1, False),),
    "split-q-2": (("rcf", 2, False),),
    "split-q-3": (("rcf", 3, False),),
    "split-q-2-indef": (("rcf", 2, False),),
    "quat-q-1": (("quat", 1, False),),
    "quat-q-2": (("quat", 2, False),),
    "quat-rt2-1": (("quat", 1, False), ("rcf", 2, True)),
    "quat-rt2-2": (("quat", 2, False), ("rcf", 4, True)),
    "quad-rt2-1": (("acf", 1, False), ("d-rcf", 1, True)),
    "quad-rt2-2": (("acf", 2, False), ("d-rcf", 2, True)),
}


class TestClassification:
    @pytest.mark.parametrize("name", sorted(EXPECTED))
    def test_zoo_table(self, name):
        alg = zoo_algebra(name)
        infos = classify_all(alg)
        assert len(infos) == len(EXPECTED[name])
        for p, (cls, n_p, nil) in enumerate(EXPECTED[name]):
            assert infos[p] == OrderingInfo(p, cls, n_p, nil)

    def test_zoo_is_fully_covered(self):
        assert sorted(zoo_names()) == sorted(EXPECTED)

    def test_x_tilde_keeps_only_non_nil(self):
        for name in zoo_names():
            alg = zoo_algebra(name)
            assert x_tilde(alg) == tuple(
                p for p, (_, _, nil) in enumerate(EXPECTED[name]) if not nil
            )
            assert x_tilde(alg) == (0,)

    def test_invalid_ordering_rejected(self):
        with pytest.raises(ValueError):
            classify(zoo_algebra("split-q-1"), 1)

    def test_orderings_follow_the_field(self):
        assert orderings_of(zoo_algebra("split-q-2")) == (0,)
        assert orderings_of(zoo_algebra("quad-rt2-1")) == (0, 1)


class TestHarrison:
    def test_positive_sets(self):
        one_plus = RT2.elem(1, 1)  # positive only at P0
        one_minus = RT2.elem(1, -1)  # positive only at P1
        unit = RT2.elem(3, 2)  # totally positive
        assert harrison(RT2, [one_plus]) == (0,)
        assert harrison(RT2, [one_minus]) == (1,)
        assert harrison(RT2, [unit]) == (0, 1)
        assert harrison(RT2, [one_plus, one_minus]) == ()
        assert harrison(RT2, []) == (0, 1)

    def test_zero_rejected(self):
        with pytest.raises(ZeroArgument):
            harrison(RT2, [RT2.zero()])

    def test_field_mismatch(self):
        with pytest.raises(ValueError):
            harrison(RT2, [FieldDesc().one()])
