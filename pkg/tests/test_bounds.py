from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sumrank.bounds import NOT_APPLICABLE, SATISFIED, TIGHT, VIOLATED, evaluate_bounds, overall_ok
from sumrank.msrd import build_msrd_code
from sumrank.seeds import bch_seed, hamming_seed, mds_seed, trivial_seed


def _by_name(results):
    return {b.name: b for b in results}


def test_hamming_construction_is_tight():
    # q = 2, r = 2, rho = 3: g = 21 and q^m = 64 = 3*21 + 1
    res = _by_name(evaluate_bounds(2, 6, 2, 21, 2, mu=21))
    tight = res["g-distance3-divisible"]
    assert tight.status == TIGHT
    assert tight.lhs == tight.rhs == 21
    assert res["g-distance3"].status == TIGHT and res["g-distance3"].rhs == 21
    assert res["shared-beta"].status == SATISFIED
    assert overall_ok(list(res.values()))


def test_trivial_seed_gap_of_two():
    for q, r, h in [(5, 2, 3), (4, 3, 4), (7, 2, 2), (8, 3, 3)]:
        res = _by_name(evaluate_bounds(q, r, r, q - 1, h, mu=1))
        square = res["g-square"]
        assert square.status == SATISFIED
        assert square.rhs - square.lhs == 2


def test_desk_parameters_have_no_tight_bound():
    results = evaluate_bounds(5, 2, 2, 4, 3, mu=1)
    assert overall_ok(results)
    assert all(b.status != TIGHT for b in results)


def test_shared_beta_violation():
    res = _by_name(evaluate_bounds(2, 4, 2, 5, 3, mu=5))
    assert res["shared-beta"].status == VIOLATED
    assert (res["shared-beta"].lhs, res["shared-beta"].rhs) == (4, 6)
    assert not overall_ok(list(res.values()))


def test_m_below_r_is_violated():
    res = _by_name(evaluate_bounds(2, 1, 2, 2, 2))
    assert res["m>=r"].status == VIOLATED


def test_not_applicable_cases():
    res = _by_name(evaluate_bounds(3, 2, 2, 2, 1))
    for name in ("g-general", "g-distance3", "g-distance3-divisible", "g-square"):
        assert res[name].status == NOT_APPLICABLE
    assert "shared-beta" not in res and "pmds-large-h" not in res


def test_divisible_bound_keeps_exact_fraction():
    res = _by_name(evaluate_bounds(3, 4, 2, 1, 2))
    assert res["g-distance3-divisible"].rhs == Fraction(2 * 80, 8)
    res = _by_name(evaluate_bounds(2, 4, 2, 5, 2))
    assert res["g-distance3-divisible"].rhs == 5 and res["g-distance3-divisible"].status == TIGHT
    assert res["g-distance3-divisible"].to_dict()["rhs"] == "5"


def test_singleton_flags():
    res = _by_name(evaluate_bounds(2, 4, 2, 5, 2))
    assert res["singleton"].status == SATISFIED and res["singleton"].note == "met with equality"
    res = _by_name(evaluate_bounds(2, 4, 2, 5, 2, k=8, d=4))
    assert res["singleton"].status == VIOLATED
    res = _by_name(evaluate_bounds(2, 4, 2, 5, 2, k=7, d=3))
    assert res["singleton"].status == SATISFIED and res["singleton"].note == ""


def test_pmds_bounds():
    small = _by_name(evaluate_bounds(2, 4, 2, 5, 2, delta_loc=2))
    assert small["pmds-small-h"].status == SATISFIED
    assert small["pmds-small-h"].rhs == 1 * 2 - 1
    assert small["pmds-large-h"].status == NOT_APPLICABLE
    large = _by_name(evaluate_bounds(2, 6, 2, 21, 3, delta_loc=2))
    assert large["pmds-large-h"].rhs == (21 // 9) * 3 - 1
    assert large["pmds-large-h"].status == SATISFIED
    assert large["pmds-small-h"].status == NOT_APPLICABLE
    tiny = _by_name(evaluate_bounds(2, 1, 1, 50, 2, delta_loc=1))
    assert tiny["pmds-large-h"].status == VIOLATED


def test_rejects_nonpositive_parameters():
    with pytest.raises(ValueError):
        evaluate_bounds(2, 0, 2, 5, 2)


BUILT = {
    "trivial-3": (lambda: trivial_seed(3, 2), 2, 1),
    "trivial-5": (lambda: trivial_seed(5, 2), 4, 3),
    "mds": (lambda: mds_seed(2, 2, 5, 3), 1, 3),
    "hamming-2": (lambda: hamming_seed(2, 2, 2), 1, 2),
    "hamming-3": (lambda: hamming_seed(2, 2, 3), 1, 2),
    "bch": (lambda: bch_seed(2, 2, 2, 2), 1, 2),
}


@pytest.mark.parametrize("make,ell,h", BUILT.values(), ids=BUILT.keys())
def test_built_codes_satisfy_every_bound(make, ell, h):
    p = build_msrd_code(make(), ell, h).params
    assert overall_ok(evaluate_bounds(p.q, p.m, p.r, p.g, p.h, mu=p.mu, delta_loc=2))


@given(st.sampled_from([2, 3, 4, 5]), st.integers(1, 6), st.integers(1, 4), st.integers(1, 60),
       st.integers(1, 8))
def test_g_bounds_match_direct_formulas(q, m, r, g, h):
    res = _by_name(evaluate_bounds(q, m, r, g, h))
    if h >= 2:
        rhs = (h - 2) // r + (q - 1) * q**m // (q**r - 1) + 1
        assert res["g-general"].rhs == rhs
        expected = VIOLATED if g > rhs else TIGHT if g == rhs else SATISFIED
        assert res["g-general"].status == expected
    assert (res["m>=r"].status == VIOLATED) == (m < r)
    if h == 2:
        assert res["g-distance3"].rhs == (q - 1) * (q**m + 1) // (q**r - 1)
