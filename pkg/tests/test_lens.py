import pytest
from hypothesis import given, strategies as st

from lensforge import (
    L2,
    M2,
    S1_X_S2,
    S3,
    InvalidInput,
    LensSpace,
    NonManifoldInput,
    NonPrimitiveCurve,
    NotInvertible,
    TorusCurve,
    dehn_fill,
    is_homeomorphic,
    mod_inverse,
    normalize_lens,
)
from lensforge.lens import homeomorphism_class
from oracles import brute_homeomorphic, brute_inverse, coprime_pairs


@pytest.mark.parametrize("n, q, expected", [
    (5, 7, LensSpace(5, 2)),
    (1, 0, S3),
    (5, -2, LensSpace(5, 3)),
    (-5, 2, LensSpace(5, 2)),
    (1, 17, S3),
    (0, 1, S1_X_S2),
    (0, -1, S1_X_S2),
])
def test_normalize_lens(n, q, expected):
    assert normalize_lens(n, q) == expected


def test_normalize_errors():
    with pytest.raises(InvalidInput):
        normalize_lens(0, 0)
    with pytest.raises(NonManifoldInput):
        normalize_lens(6, 4)
    with pytest.raises(NonManifoldInput):
        normalize_lens(0, 2)


def test_lens_space_rejects_noncanonical_names():
    for n, q in [(5, 5), (5, 0), (1, 1), (0, 0), (6, 2), (-3, 1)]:
        with pytest.raises(InvalidInput):
            LensSpace(n, q)


def test_degenerate_names():
    assert S3.is_sphere and S3.describe() == "S^3"
    assert S1_X_S2.is_s1_x_s2 and S1_X_S2.describe() == "S^1 x S^2"
    assert str(LensSpace(7, 2)) == "L(7,2)"


@given(st.integers(-200, 200), st.integers(-500, 500))
def test_normalize_idempotent(n, q):
    try:
        lens = normalize_lens(n, q)
    except (InvalidInput, NonManifoldInput):
        return
    assert normalize_lens(lens.n, lens.q) == lens


@pytest.mark.parametrize("q, n, expected", [(2, 7, 4), (1, 9, 1), (3, 5, 2)])
def test_mod_inverse_examples(q, n, expected):
    assert brute_inverse(q, n) == expected
    assert mod_inverse(q, n) == expected


def test_mod_inverse_against_scan_and_involution():
    for n, q in coprime_pairs(200):
        inv = mod_inverse(q, n)
        assert 1 <= inv < n
        assert inv == brute_inverse(q, n)
        assert mod_inverse(inv, n) == q


def test_mod_inverse_errors():
    with pytest.raises(NotInvertible):
        mod_inverse(4, 6)
    with pytest.raises(InvalidInput):
        mod_inverse(1, 1)


def test_is_homeomorphic_examples():
    assert is_homeomorphic(LensSpace(7, 2), LensSpace(7, 4))
    assert not is_homeomorphic(LensSpace(7, 2), LensSpace(7, 3))
    assert not is_homeomorphic(LensSpace(7, 2), LensSpace(5, 2))
    assert is_homeomorphic(S3, S3)
    assert not is_homeomorphic(S3, S1_X_S2)


def test_is_homeomorphic_is_an_equivalence_relation():
    for n in range(2, 51):
        spaces = [LensSpace(n, q) for q in range(1, n) if brute_inverse(q, n)]
        for x in spaces:
            assert is_homeomorphic(x, x)
            for y in spaces:
                xy = is_homeomorphic(x, y)
                assert xy == is_homeomorphic(y, x)
                assert xy == brute_homeomorphic(n, x.q, y.q)
                if xy:
                    for z in spaces:
                        if is_homeomorphic(y, z):
                            assert is_homeomorphic(x, z)
            cls = homeomorphism_class(x)
            assert 1 <= len(cls) <= 2 and x.q in cls


@pytest.mark.parametrize("curve, expected", [
    (5 * L2 - 2 * M2, LensSpace(5, 2)),
    (M2, S1_X_S2),
    (-M2, S1_X_S2),
    (L2, S3),
    (L2 + 7 * M2, S3),
    (-(5 * L2 - 2 * M2), LensSpace(5, 2)),
])
def test_dehn_fill_examples(curve, expected):
    assert dehn_fill(curve) == expected


def test_dehn_fill_rejects_nonprimitive():
    for curve in [TorusCurve(0, 0), TorusCurve(2, 4), TorusCurve(3, 0)]:
        with pytest.raises(NonPrimitiveCurve):
            dehn_fill(curve)


def test_dehn_fill_recovers_every_lens_space():
    for n, q in coprime_pairs(50):
        assert dehn_fill(n * L2 - q * M2) == LensSpace(n, q)
