import pytest

from spanwarp.fincore import validate_nat_trans
from spanwarp.fixtures import (s1_collapse_warping, s1_identity_warping, s1_monoidal,
                               s1_skew, s2_identity_warping, s2_monoidal, s2_skew,
                               s3_skew, xor_skew)
from spanwarp.skew import (DOT, SkewAlgebra, SkewExprError, SkewWarping,
                           alpha_nat_trans, enumerate_skew_warpings,
                           identity_skew_warping, is_posetal, kappa_nat_trans,
                           lunit_nat_trans, nu_nat_trans, one_object_view,
                           runit_nat_trans, self_skew_algebra, skew_kleisli,
                           skew_monoidal_of, validate_skew_algebra,
                           validate_skew_bicategory, validate_skew_warping)


def test_s1_valid():
    assert validate_skew_bicategory(s1_skew()).valid


def test_s2_valid_and_monoid_mutants_fail():
    assert validate_skew_bicategory(s2_skew()).valid
    rep = validate_skew_bicategory(s2_skew(alpha="s"))
    assert not rep.valid
    assert {"unit-middle", "unit-left", "unit-right"} <= {v.law for v in rep.violations}
    rep = validate_skew_bicategory(s2_skew(lam="s"))
    assert {"unit-middle", "unit-unit"} <= {v.law for v in rep.violations}
    rep = validate_skew_bicategory(s2_skew(rho="s"))
    assert not rep.valid


def test_xor_discrete_strict_monoidal_valid():
    assert validate_skew_bicategory(xor_skew()).valid


def test_s3_naturality_witnessed():
    rep = validate_skew_bicategory(s3_skew())
    assert not rep.valid
    v = rep.violations[0]
    assert v.law == "left-unitor-naturality"
    assert "u1" in v.detail or "u2" in v.detail


def test_one_object_roundtrip():
    for data in (s1_monoidal(), s2_monoidal()):
        assert skew_monoidal_of(one_object_view(data)) == data
    with pytest.raises(Exception):
        skew_monoidal_of(_two_object_dummy())


def _two_object_dummy():
    from spanwarp.fincore import discrete_category, finset
    from spanwarp.skew import SkewBicategory
    c = discrete_category(finset("p"))
    objs = finset("0", "1")
    return SkewBicategory(objs, {}, {}, {}, {}, {}, {})


def test_structural_errors_distinct_from_laws():
    s = s1_skew()
    broken = one_object_view(s1_monoidal())
    broken.unit_obj = {}
    rep = validate_skew_bicategory(broken)
    assert rep.structural and not rep.violations


def test_identity_skew_warpings_valid():
    for base in (s1_skew(), s2_skew(), xor_skew()):
        assert validate_skew_warping(identity_skew_warping(base)).valid


def test_s1_collapse_warping_valid():
    assert validate_skew_warping(s1_collapse_warping()).valid


def test_nu0_mutation_fails_unit_axioms():
    w = s2_identity_warping()
    bad = SkewWarping(w.base, w.obj_map, w.ext, w.units, w.nu, {DOT: "s"}, w.kappa)
    rep = validate_skew_warping(bad)
    assert not rep.valid
    assert {"warp-right-unit", "warp-unit-unit"} <= {v.law for v in rep.violations}


def test_kappa_mutation_fails():
    w = s2_identity_warping()
    bad = SkewWarping(w.base, w.obj_map, w.ext, w.units, w.nu, w.nu0,
                      {(DOT, DOT): {"e": "s"}})
    rep = validate_skew_warping(bad)
    assert not rep.valid and rep.violations


def test_enumeration_counts_and_rigidity():
    notes = []
    found = list(enumerate_skew_warpings(s1_skew(), notes=notes))
    assert len(found) == 2
    assert is_posetal(s1_skew())
    assert any("rigid" in n for n in notes)
    assert len(list(enumerate_skew_warpings(s2_skew()))) == 1
    assert len(list(enumerate_skew_warpings(xor_skew()))) == 2


def test_skew_kleisli_of_identity_is_base():
    for base in (s1_skew(), s2_skew(), xor_skew()):
        w = identity_skew_warping(base)
        assert skew_kleisli(w) == base


def test_skew_kleisli_outputs_validate():
    for base in (s1_skew(), s2_skew(), xor_skew()):
        for w in enumerate_skew_warpings(base):
            assert validate_skew_bicategory(skew_kleisli(w)).valid


def test_collapse_kleisli_is_properly_skew():
    k = skew_kleisli(s1_collapse_warping())
    assert validate_skew_bicategory(k).valid
    # the right unitor at bot is the non-invertible arrow bot -> top
    assert k.runit[(DOT, DOT)]["bot"] == "a"


def test_skew_kleisli_rejects_invalid_warping():
    w = s2_identity_warping()
    bad = SkewWarping(w.base, w.obj_map, w.ext, w.units, w.nu, {DOT: "s"}, w.kappa)
    with pytest.raises(Exception):
        skew_kleisli(bad)


def test_self_skew_algebras_valid():
    for w in (s1_identity_warping(), s1_collapse_warping(), s2_identity_warping()):
        assert validate_skew_algebra(self_skew_algebra(w, DOT)).valid


def test_mutated_cell_kappa_invalid():
    w = s2_identity_warping()
    sa = self_skew_algebra(w, DOT)
    bad = SkewAlgebra(w, DOT, sa.e_funcs, sa.cell_nu, {DOT: {"e": "s"}})
    rep = validate_skew_algebra(bad)
    assert not rep.valid and rep.violations


def test_stored_families_natural_via_induced_functors():
    s = s2_skew()
    assert validate_nat_trans(alpha_nat_trans(s, DOT, DOT, DOT, DOT)).valid
    assert validate_nat_trans(lunit_nat_trans(s, DOT, DOT)).valid
    assert validate_nat_trans(runit_nat_trans(s, DOT, DOT)).valid
    w = s1_collapse_warping()
    assert validate_nat_trans(nu_nat_trans(w, DOT, DOT, DOT)).valid
    assert validate_nat_trans(kappa_nat_trans(w, DOT, DOT)).valid


def test_posetal_reported_components_forced():
    notes = []
    list(enumerate_skew_warpings(s1_skew(), notes=notes))
    assert notes
