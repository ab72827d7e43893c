import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from xconn.formulas import (DomainError, FamilyParams, ceil_div, ceil_mul_sqrt, ceil_sqrt,
                            ceiling_identity, formula_terms, guard, guard_limit,
                            kappa_closed_form, kappa_formula, kappa_small_case,
                            small_case_limit, verify_ceiling_identities)


def bisect_ceil_mul_sqrt(c: int, x: int) -> int:
    """Independent oracle: binary search the least k with k^2 >= c^2 * x."""
    lo, hi = 0, c * x + 1
    while lo < hi:
        mid = (lo + hi) // 2
        if mid * mid >= c * c * x:
            hi = mid
        else:
            lo = mid + 1
    return lo


def test_guard_examples():
    assert guard(FamilyParams("pxp", 5, 5, 3))          # 3 <= 9
    assert not guard(FamilyParams("cxp", 4, 3, 3))      # 3 > 2
    assert guard(FamilyParams("cxc", 4, 4, 0))          # 0 <= 3


def test_guard_limits():
    assert guard_limit("pxp", 5, 5) == 9
    assert guard_limit("cxp", 4, 3) == 2
    assert guard_limit("cxc", 4, 4) == 3


def test_kappa_formula_examples():
    res = kappa_formula(FamilyParams("pxp", 5, 5, 3))
    assert res.value == 5 and set(res.active_terms) == {"layers1", "layers2", "block"}

    res = kappa_formula(FamilyParams("cxp", 4, 3, 0))
    assert res.value == 4 and res.active_terms == ("layers1",)
    assert dict(res.terms) == {"layers1": 4, "layers2": 6, "block": 5}

    res = kappa_formula(FamilyParams("cxc", 6, 6, 2))
    assert res.value == 11 and res.active_terms == ("block",)


def test_kappa_formula_rejects_out_of_guard():
    with pytest.raises(DomainError):
        kappa_formula(FamilyParams("cxp", 4, 3, 3))


def test_family_params_structural_validation():
    with pytest.raises(ValueError):
        FamilyParams("pxp", 2, 5, 0)
    with pytest.raises(ValueError):
        FamilyParams("cxp", 3, 3, 0)
    with pytest.raises(ValueError):
        FamilyParams("cxc", 4, 3, 0)
    with pytest.raises(ValueError):
        FamilyParams("pxp", 3, 3, -1)


def test_small_cases():
    assert kappa_small_case("p1p", 7, 2) == 1       # 2 <= floor(6/2)-1
    assert kappa_small_case("p2p", 5, 3) == 2       # 3 <= 2*2-1
    assert kappa_small_case("c3p", 5, 5) == 3       # 5 <= 3*2-1
    assert kappa_small_case("c3c", 6, 5) == 6       # 5 <= 3*2-1
    for which, n, g in [("p1p", 7, 3), ("p2p", 5, 4), ("c3p", 5, 6), ("c3c", 6, 6),
                        ("c3c", 3, 0), ("p1p", 2, 0)]:
        with pytest.raises(DomainError):
            kappa_small_case(which, n, g)


def test_small_case_limits():
    assert small_case_limit("p1p", 7) == 2
    assert small_case_limit("p2p", 5) == 3
    assert small_case_limit("c3p", 8) == 8
    assert small_case_limit("c3c", 4) == 2


def test_closed_form_routing():
    assert kappa_closed_form("pxp", 1, 7, 2) == 1
    assert kappa_closed_form("pxp", 7, 2, 1) == 2   # symmetric orders
    assert kappa_closed_form("cxp", 3, 5, 5) == 3
    assert kappa_closed_form("cxc", 3, 6, 5) == 6
    assert kappa_closed_form("cxc", 6, 3, 5) == 6
    assert kappa_closed_form("pxp", 5, 5, 3) == 5
    with pytest.raises(DomainError):
        kappa_closed_form("cxp", 4, 2, 0)


def test_ceil_helpers_exact():
    assert ceil_div(7, 2) == 4 and ceil_div(8, 2) == 4
    assert [ceil_sqrt(x) for x in (0, 1, 2, 3, 4, 5, 8, 9)] == [0, 1, 2, 2, 2, 3, 3, 3]
    for c in (1, 2, 4):
        for x in range(0, 500):
            assert ceil_mul_sqrt(c, x) == bisect_ceil_mul_sqrt(c, x)


@given(st.integers(0, 10 ** 12), st.sampled_from([1, 2, 4]))
@settings(max_examples=200)
def test_ceil_mul_sqrt_matches_bisection(x, c):
    assert ceil_mul_sqrt(c, x) == bisect_ceil_mul_sqrt(c, x)


def test_ceiling_identity_examples():
    # ceil(sqrt(3)) + ceil(3/2) = 4 = ceil(2*sqrt(3))
    assert ceiling_identity("path_path", 2)
    assert ceiling_identity("path_path", 0)
    # 2*ceil(sqrt(6)) + 2*ceil(6/3) = 10 = ceil(4*sqrt(6))
    assert ceiling_identity("cycle_cycle", 5)


def test_cycle_cycle_identity_fails_at_g2():
    # 2*ceil(sqrt(3)) + 2*ceil(3/2) + 4 = 12 but ceil(4*sqrt(3)) + 4 = 11:
    # the doubled square split overshoots the claimed ceiling term
    assert not ceiling_identity("cycle_cycle", 2)
    assert 2 * ceil_sqrt(3) + 2 * ceil_div(3, ceil_sqrt(3)) + 4 == 12
    assert ceil_mul_sqrt(4, 3) + 4 == 11


def test_identity_sweep_matches_single_checks():
    fails = verify_ceiling_identities(3000)
    for kind in ("path_path", "cycle_path", "cycle_cycle"):
        direct = [g for g in range(3001) if not ceiling_identity(kind, g)]
        assert fails[kind] == direct
    assert fails["path_path"] == [] and fails["cycle_path"] == []
    assert fails["cycle_cycle"][:4] == [2, 4, 6, 9]


def test_formula_symmetry_for_paths():
    for m in range(3, 8):
        for n in range(3, 8):
            for g in range(0, guard_limit("pxp", m, n) + 1):
                if g <= guard_limit("pxp", n, m):
                    a = kappa_formula(FamilyParams("pxp", m, n, g)).value
                    b = kappa_formula(FamilyParams("pxp", n, m, g)).value
                    assert a == b


def test_block_term_is_min_boundary_for_cylinder():
    # the cxp ceiling term equals min over interval lengths a of the true
    # boundary size a + 2*ceil((g+1)/a) + 2 (drives the witness construction)
    for g in range(0, 3000):
        x = g + 1
        best = min(a + 2 * ceil_div(x, a) for a in range(1, ceil_mul_sqrt(2, 2 * x) + 3))
        assert best + 2 == ceil_mul_sqrt(2, 2 * x) + 2, g
