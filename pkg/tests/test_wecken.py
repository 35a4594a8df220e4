import pytest

from coincalc import (
    DescriptorError,
    INFINITE,
    TargetFamily,
    Truth,
    WeckenQuery,
    coincidence_producing_criterion,
    fixed_point_wecken,
    nielsen_value_set,
    nsharp_restrictions,
    overlap_disagreements,
    user_fact,
    wecken_condition,
)


def condition(m, n, family=TargetFamily.SPHERE, **kw):
    return wecken_condition(WeckenQuery(m, n, family, **kw))


def expected_no_set(limit):
    out = set()
    for n in (16, 32, 64):
        if 2 * n - 2 <= limit and n <= limit:
            out.add((2 * n - 2, n))
    n = 6
    while 2 * n - 1 <= limit and n <= limit:
        out.add((2 * n - 1, n))
        n += 4
    out.add((11, 6))
    return out


def test_exception_catalogue_within_64():
    no_set = set()
    unknown_set = set()
    for m in range(1, 65):
        for n in range(1, 65):
            fact = condition(m, n)
            if fact.is_no():
                no_set.add((m, n))
            elif fact.is_unknown():
                unknown_set.add((m, n))
    assert no_set == expected_no_set(64)
    # Unknown appears exactly at the uncovered gaps: no catalogued rule,
    # fallback R8
    for m, n in unknown_set:
        assert condition(m, n).provenance.ref == "R8"
    assert (13, 6) in unknown_set  # second gap row for n = 6
    assert (10, 4) in unknown_set  # n = 4 exclusion of the 2n+2 rule


def test_named_examples():
    assert condition(11, 6).is_no()
    assert condition(11, 6).provenance.ref == "R4"
    assert condition(30, 16).is_no()
    assert condition(10, 6).is_yes()
    assert condition(7, 5).is_yes()  # stable range
    assert condition(7, 5).provenance.ref == "R1"  # odd n fires first


def test_open_kervaire_row():
    fact = condition(254, 128)
    assert fact.is_unknown()
    assert fact.provenance.ref == "R5"


def test_overlap_scan_is_clean():
    assert overlap_disagreements() == []


def test_covering_invariance():
    for m in range(1, 40):
        for n in range(1, 20):
            sphere = condition(m, n, TargetFamily.SPHERE)
            form = condition(m, n, TargetFamily.SPACE_FORM)
            assert sphere.truth is form.truth


def test_general_targets_degrade_honestly():
    # Euler characteristic zero decides everything
    fact = condition(11, 6, TargetFamily.GENERAL,
                     noncompact_or_chi_zero=user_fact("yes"))
    assert fact.is_yes() and fact.provenance.ref == "R1"
    # without it, the sphere-specific failure at (11, 6) says nothing
    assert condition(11, 6, TargetFamily.GENERAL).is_unknown()
    assert condition(10, 6, TargetFamily.GENERAL).is_unknown()
    # but the stable range and the generic m <= n+4 window still apply
    assert condition(7, 5, TargetFamily.GENERAL).is_yes()
    assert condition(9, 6, TargetFamily.GENERAL).is_yes()
    assert condition(30, 16, TargetFamily.GENERAL).is_unknown()
    # ker E = 0 arguments survive on any target
    assert condition(11, 7, TargetFamily.GENERAL).is_yes()   # m = n+4
    assert condition(6, 4, TargetFamily.GENERAL).is_yes()    # n in {2,4,8}


# -- coincidence producing ----------------------------------------------------


def test_coincidence_producing_all_yes():
    report = coincidence_producing_criterion(
        user_fact("yes"), user_fact("unknown"), user_fact("unknown"))
    assert report.loose_by_small_deformation.is_yes()
    assert report.loose.is_yes()
    assert report.not_coincidence_producing.is_yes()
    assert report.j_image_vanishes.is_yes()


def test_coincidence_producing_injective_collapse():
    report = coincidence_producing_criterion(
        user_fact("no"), user_fact("yes"), user_fact("unknown"))
    assert report.loose_by_small_deformation.is_no()
    assert report.not_coincidence_producing.is_no()
    assert report.loose.is_no()


def test_coincidence_producing_gap():
    # j not injective (sphere target), boundary nonzero but dies in the
    # punctured target: not coincidence producing, looseness undecided
    report = coincidence_producing_criterion(
        user_fact("no"), user_fact("no"), user_fact("yes"))
    assert report.not_coincidence_producing.is_yes()
    assert report.loose_by_small_deformation.is_no()
    assert report.loose.is_unknown()


def test_coincidence_producing_contradiction():
    with pytest.raises(DescriptorError):
        coincidence_producing_criterion(
            user_fact("yes"), user_fact("unknown"), user_fact("no"))
    with pytest.raises(DescriptorError):
        coincidence_producing_criterion(
            user_fact("no"), user_fact("yes"), user_fact("yes"))


# -- N# restrictions -----------------------------------------------------------


def restrictions(n, m, pi1=1, orientable="no", closed=True, chi_zero="no",
                 e_del="unknown", d_fact="unknown"):
    return nsharp_restrictions(
        n, m, pi1, user_fact(orientable), closed, user_fact(chi_zero),
        user_fact(e_del), user_fact(d_fact))


def test_restrictions_odd_dimension():
    fact = restrictions(5, 9)
    assert fact.is_no()
    assert fact.provenance.ref == "Thm1.33a"


def test_restrictions_fundamental_group():
    fact = restrictions(4, 7, pi1=3)
    assert fact.is_no()
    assert fact.provenance.ref == "Thm1.33b"
    assert restrictions(4, 7, pi1=INFINITE).is_no()
    assert restrictions(4, 7, pi1=2, orientable="yes").is_no()


def test_restrictions_closed_and_euler():
    assert restrictions(4, 7, closed=False).is_no()
    assert restrictions(4, 7, chi_zero="yes").is_no()
    assert restrictions(4, 7, e_del="no").is_no()
    assert restrictions(4, 7, d_fact="no").is_no()


def test_restrictions_never_say_yes():
    fact = restrictions(4, 7, pi1=2, orientable="no", e_del="yes",
                        d_fact="yes")
    assert fact.is_unknown()


def test_restrictions_projective_regression():
    # real projective targets in the dimensions where nonzero N# is known
    # to occur: the check must stay open, never No
    for n in (4, 8, 12, 14, 16, 20):
        fact = restrictions(n, 2 * n - 1, pi1=2, orientable="no",
                            closed=True, chi_zero="no", e_del="yes")
        assert fact.is_unknown(), n


def test_restrictions_surface_case():
    assert restrictions(2, 2, pi1=1).is_unknown()   # sphere-like target
    assert restrictions(2, 3, pi1=1).is_no()        # m != 2 needs n >= 4


# -- value sets and the fixed point dichotomy ------------------------------------


def test_value_sets():
    assert nielsen_value_set(5, user_fact("no")).values == (0, 5)
    assert nielsen_value_set(2, user_fact("unknown")).values == (0, 1, 2)
    assert nielsen_value_set(1, user_fact("yes")).values == (0, 1)
    assert nielsen_value_set(1, user_fact("no")).values == (0, 1)
    assert nielsen_value_set(INFINITE, user_fact("no")).values \
        == (0, INFINITE)
    with pytest.raises(DescriptorError):
        nielsen_value_set(0, user_fact("no"))


def test_fixed_point_dichotomy():
    assert fixed_point_wecken(2, -2).is_no()
    assert fixed_point_wecken(2, 0).is_yes()
    assert fixed_point_wecken(2, 2).is_yes()
    assert fixed_point_wecken(3, -10).is_yes()
    assert fixed_point_wecken(1, 0).is_yes()
    with pytest.raises(DescriptorError):
        fixed_point_wecken(0, 0)
