import itertools

import pytest

from spanwarp.fincore import (discrete_category, enumerate_functions, finset,
                              identity_function, validate_category)
from spanwarp.fixtures import (p1_category, p1_mw, w1_mw, w1_mw_bad_ext, w1_mw_bad_unit,
                               w1_mw_twisted, w1_wreath_bad_d, z2_category)
from spanwarp.monadwarp import (InvalidStructure, Warping, category_to_monad,
                                identity_warping, identity_wreath, monad_laws_report,
                                monad_to_category, mw_monad, mw_to_warping, mw_view,
                                span_monad, validate_mw_monad, validate_warping,
                                validate_wreath)
from spanwarp.spaneng import cell, identity_span, star_map_of


def mw_laws_hold(m):
    """Inline oracle for the three extension-form equations."""
    b, t = m.base, m.t_of
    for x in b.objects:
        for y in b.objects:
            for z in b.objects:
                for f in b.hom_of(x, t(y)):
                    for g in b.hom_of(y, t(z)):
                        tg = m.ext_of(y, z)(g)
                        if m.ext_of(x, z)(b.compose(x, t(y), t(z), tg, f)) != \
                                b.compose(t(x), t(y), t(z), tg, m.ext_of(x, y)(f)):
                            return False
    for x in b.objects:
        if m.ext_of(x, x)(m.unit_of(x)) != b.id_of(t(x)):
            return False
        for y in b.objects:
            for f in b.hom_of(x, t(y)):
                if b.compose(x, t(x), t(y), m.ext_of(x, y)(f), m.unit_of(x)) != f:
                    return False
    return True


def test_category_monad_roundtrip_discrete():
    c = discrete_category(finset("0", "1"))
    m = category_to_monad(c)
    # identity-like carrier: singleton diagonal, empty elsewhere
    for x in c.objects:
        for y in c.objects:
            assert len(m.carrier.entry_of(x, y)) == (1 if x == y else 0)
    assert monad_to_category(m) == c


def test_category_monad_roundtrip_z2():
    c = z2_category()
    m = category_to_monad(c)
    assert len(m.carrier.entry_of("x", "x")) == 2
    assert monad_to_category(m) == c
    # multiplication table is the group table
    cat = monad_to_category(m)
    table = {(g, f): cat.compose("x", "x", "x", g, f)
             for g in "1s" for f in "1s"}
    assert table == {("1", "1"): "1", ("1", "s"): "s", ("s", "1"): "s", ("s", "s"): "1"}


def test_span_monad_factory_rejects_broken_mult():
    c = z2_category()
    m = category_to_monad(c)
    carrier = m.carrier
    h = carrier.entry_of("x", "x")
    bad_mult = cell(m.mult.dom, carrier, {
        ("x", "x"): next(f for f in enumerate_functions(m.mult.dom.entry_of("x", "x"), h)
                         if any(f(e) != m.mult("x", "x", e) for e in m.mult.dom.entry_of("x", "x")))})
    with pytest.raises(InvalidStructure):
        span_monad(carrier, bad_mult, m.unit)
    assert span_monad(carrier, m.mult, m.unit) == m


def test_identity_warping_valid_on_both_bases():
    for c in (z2_category(), p1_category()):
        w = identity_warping(category_to_monad(c))
        assert validate_warping(w).valid


def test_w1_valid_and_literal_identity_warping():
    w = mw_to_warping(w1_mw())
    assert validate_warping(w).valid
    assert w == identity_warping(category_to_monad(z2_category()))


def test_eight_candidates_exactly_two_valid():
    c = z2_category()
    t = identity_function(c.objects)
    h = c.hom_of("x", "x")
    results = []
    for fn in enumerate_functions(h, h):
        for k in ("1", "s"):
            cand = mw_monad(c, t, {("x", "x"): fn}, {"x": k})
            direct = mw_laws_hold(cand)
            assert validate_mw_monad(cand).valid == direct
            assert validate_warping(mw_to_warping(cand)).valid == direct
            results.append(direct)
    assert len(results) == 8 and sum(results) == 2


def test_bad_unit_reports_unit_square_at_identity():
    rep = validate_mw_monad(w1_mw_bad_unit())
    assert not rep.valid
    laws = {(v.law, v.site) for v in rep.violations}
    assert ("unit-square", ("x", "x", "1")) in laws
    wrep = validate_warping(mw_to_warping(w1_mw_bad_unit()))
    assert not wrep.valid
    assert {v.law for v in wrep.violations} == {"unit-square", "unit-triangle"}


def test_bad_ext_rejected():
    assert not validate_mw_monad(w1_mw_bad_ext()).valid


def test_identity_wreath_valid():
    for c in (z2_category(), p1_category()):
        assert validate_wreath(identity_wreath(category_to_monad(c))).valid


def test_wreath_mutant_fails_j_compatibility():
    rep = validate_wreath(w1_wreath_bad_d())
    assert not rep.valid
    assert "d-j-compat" in {v.law for v in rep.violations}


def test_mw_roundtrips_are_literal():
    for m in (w1_mw(), w1_mw_twisted(), p1_mw()):
        w = mw_to_warping(m)
        assert mw_view(w) == m
        assert mw_to_warping(mw_view(w)) == w


def test_mw_view_requires_star_shape():
    w = mw_to_warping(w1_mw())
    doubled = Warping(w.base, w.base.carrier, w.t, w.k)
    assert star_map_of(doubled.endo) is None
    with pytest.raises(InvalidStructure):
        mw_view(doubled)


def test_p1_mw_is_forced_and_valid():
    m = p1_mw()
    assert validate_mw_monad(m).valid
    # every candidate set is a singleton, so this is the only possibility
    c = p1_category()
    t = m.obj_map
    for x in c.objects:
        assert len(c.hom_of(x, t(x))) == 1
        for y in c.objects:
            assert len(list(enumerate_functions(c.hom_of(x, t(y)), c.hom_of(t(x), t(y))))) == 1


def test_monad_law_report_flags_frame_errors():
    m = category_to_monad(z2_category())
    rep = monad_laws_report(m.carrier, m.unit, m.unit)
    assert rep.structural
