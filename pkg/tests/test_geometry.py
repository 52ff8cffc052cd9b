import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from lensplumb import SlopeDatum, SpecError, assumptions, core_types, exceptional_curve_types, f_component, f_total, matching_cycle_type, validate_spec
from lensplumb.field import GF, QQ
from lensplumb.geometry import NEG_NEG, S1XS2, SPHERE, ZERO_NEG_TWO, Lens, _complete_basis, canonical_lens_q, det2
from lensplumb.poly import PolyRing

from conftest import random_slope, random_spec

R = PolyRing(QQ, ("x", "y"))
x, y = R.gens()


def S(k, l, sign=1):
    return SlopeDatum(k, l, sign)


def test_validate_examples():
    assert validate_spec([(1, 0, 1), (0, 1, 1)]).n == 1
    assert validate_spec([(1, 5, -1), (1, 5, -1)]).n == 1
    with pytest.raises(SpecError) as err:
        validate_spec([(1, 0, 1), (0, 1, 1), (2, 3, 1)])
    assert err.value.code == "k-or-l-one" and err.value.index == 2
    with pytest.raises(SpecError) as err:
        validate_spec([(1, 0, 1)])
    assert err.value.code == "n-zero"
    with pytest.raises(SpecError) as err:
        validate_spec([])
    assert err.value.code == "empty"


def test_validate_dict_form():
    spec = validate_spec({"slopes": [{"k": 1, "l": 2, "sign": "-"}, {"k": 0, "l": 1}], "field": {"kind": "prime", "p": 5}})
    assert spec.slopes[0] == S(1, 2, -1)
    assert spec.field == GF(5)
    assert spec.truncation.poly_degree == 6 and spec.truncation.winding == 2


def test_f_component_examples():
    assert f_component(S(1, 0), R) == y + 1
    assert f_component(S(0, 1), R) == 1 + x
    assert f_component(S(1, 3, -1), R) == y - x**3


def test_f_total_examples():
    assert f_total(validate_spec([(1, 1, 1), (1, 1, -1)])) == y**2 - x**2
    assert f_total(validate_spec([(1, 0, 1), (0, 1, 1)])) == 1 + x + y + x * y


def test_matching_cycle_examples():
    for k in range(1, 7):
        assert matching_cycle_type(S(1, 0), S(1, k)) == (Lens(k, 1) if k > 1 else SPHERE)
    assert matching_cycle_type(S(1, 0), S(1, 0)) == S1XS2
    assert matching_cycle_type(S(0, 1), S(1, 4)) == SPHERE


def test_core_types_examples():
    assert core_types(validate_spec([(1, 0, 1), (0, 1, 1), (1, 2, 1)])) == [Lens(2, 1), SPHERE, SPHERE]
    assert core_types(validate_spec([(1, 1, 1), (1, 1, 1)])) == [S1XS2, S1XS2]
    assert core_types(validate_spec([(1, 0, 1), (0, 1, 1)])) == [SPHERE, SPHERE]


def test_assumption_examples():
    a = assumptions(validate_spec([(1, 0, 1), (0, 1, 1), (1, 2, 1)]))
    assert (a.A, a.B, a.C, a.B_det) == (True, True, True, True)
    a = assumptions(validate_spec([(1, 1, 1), (0, 1, 1), (1, 1, 1)]))
    assert (a.A, a.B, a.C) == (True, False, False)
    a = assumptions(validate_spec([(1, 0, 1), (1, 0, 1)]))
    assert (a.A, a.B, a.C) == (True, False, False)


def test_assumption_b_variants():
    # parallel but unequal end slopes: the polynomials differ, the determinant vanishes
    a = assumptions(validate_spec([(1, 1, 1), (1, 1, -1)]))
    assert a.B and a.B_det
    a = assumptions(validate_spec([(1, 0, 1), (0, 1, 1), (1, 0, -1)]))
    assert a.B and not a.B_det
    # in characteristic 2 the two signs give the same polynomial
    a = assumptions(validate_spec([(1, 1, 1), (1, 1, -1)], field=GF(2)))
    assert not a.B


def test_curve_type_examples():
    assert exceptional_curve_types(validate_spec([(1, 0, 1), (0, 1, 1), (1, 2, 1)])) == [NEG_NEG, NEG_NEG]
    assert exceptional_curve_types(validate_spec([(1, 0, 1), (1, 2, 1)])) == [ZERO_NEG_TWO]
    assert exceptional_curve_types(validate_spec([(1, 1, 1), (1, 1, -1)])) == [ZERO_NEG_TWO]


slopes = st.builds(lambda r: SlopeDatum(*random_slope(random.Random(r), 6)), st.integers(0, 10**9))


@settings(max_examples=300, deadline=None)
@given(slopes, slopes)
def test_matching_cycle_symmetric(a, b):
    assert matching_cycle_type(a, b) == matching_cycle_type(b, a)


@settings(max_examples=300, deadline=None)
@given(slopes, slopes, st.integers(-3, 3))
def test_lens_q_independent_of_completion(a, b, m):
    s = a.vector
    t0 = _complete_basis(s)
    t = (t0[0] + m * s[0], t0[1] + m * s[1])
    assert matching_cycle_type(a, b, complement=t) == matching_cycle_type(a, b)


@settings(max_examples=300, deadline=None)
@given(slopes, slopes)
def test_lens_invariants(a, b):
    t = matching_cycle_type(a, b)
    if t.kind == "lens":
        assert 1 <= t.q < t.p and math.gcd(t.p, t.q) == 1
        assert t.q == canonical_lens_q(t.p, t.q)
        assert t.p == abs(det2(a.vector, b.vector))


def test_core_types_detect_parallel(rng):
    for _ in range(300):
        spec = random_spec(rng, 1, 5)
        cores = core_types(spec)
        m = len(spec.slopes)
        for i in range(m):
            parallel = det2(spec.slopes[i - 1].vector, spec.slopes[i].vector) == 0
            assert (cores[i] == S1XS2) == parallel


def test_assumption_c_characterisation(rng):
    for _ in range(300):
        spec = random_spec(rng, 1, 5)
        m = len(spec.slopes)
        no_s1s2 = all(
            matching_cycle_type(spec.slopes[i], spec.slopes[j]) != S1XS2 for i in range(m) for j in range(i + 1, m)
        )
        assert assumptions(spec).C == no_s1s2


def test_curve_types_follow_cores(rng):
    for _ in range(200):
        spec = random_spec(rng, 1, 5)
        cores = core_types(spec)
        curves = exceptional_curve_types(spec)
        assert len(curves) == spec.n
        for i, c in enumerate(curves, start=1):
            assert (c == NEG_NEG) == (cores[i] == SPHERE)


def test_canonical_q_small_table():
    # L(5,2) = L(5,3): {2, 3, 2^-1 = 3, 3^-1 = 2}
    assert canonical_lens_q(5, 3) == 2
    assert canonical_lens_q(7, 3) == 2  # 3^-1 = 5, -3 = 4, -5 = 2
    assert canonical_lens_q(8, 3) == 3


def test_sign_parse_errors():
    with pytest.raises(SpecError):
        validate_spec([(1, 0, "?"), (0, 1, 1)])
    with pytest.raises(SpecError):
        SlopeDatum(-1, 1)
