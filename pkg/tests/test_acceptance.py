"""Acceptance suite: one test per criterion, each printing a PASS line.

Everything is exact (structural equality); the time limits are generous
ceilings over observed runtimes.
"""

import json
import random
import subprocess
import sys
import time
from pathlib import Path

from spanwarp.correspond import (algebra_to_em_algebra, classical_of_mw,
                                 em_algebra_to_e_family, enumerate_ab_monads,
                                 enumerate_e_families, enumerate_em_algebras,
                                 enumerate_mw_monads, enumerate_object_maps,
                                 enumerate_warpings, enumerate_wreaths, kleisli_category,
                                 monad_to_warping, self_algebra, validate_algebra,
                                 validate_e_family, validate_em_algebra, warping_to_monad,
                                 warping_to_wreath, wreath_to_monad, wreath_to_warping)
from spanwarp.fincore import FinSet, finfunction, validate_category
from spanwarp.fixtures import (idempotent_bad_unit_category, p1_category, p1_mw, s1_skew,
                               s2_identity_warping, s2_skew, s3_skew, w1_mw,
                               w1_mw_bad_ext, w1_mw_bad_unit, w1_mw_twisted,
                               w1_warping_bad_unit, w1_wreath_bad_d, xor_skew,
                               z2_category)
from spanwarp.monadwarp import (SpanMonad, Wreath, ab_element, category_to_monad,
                                monad_laws_report, monad_to_category, mw_to_warping,
                                validate_mw_monad, validate_warping, validate_wreath)
from spanwarp.skew import (DOT, SkewAlgebra, SkewWarping, enumerate_skew_warpings,
                           identity_skew_warping, self_skew_algebra, skew_kleisli,
                           validate_skew_algebra, validate_skew_bicategory,
                           validate_skew_warping)
from spanwarp.spaneng import (cell, cells_equal, compose_spans, identity_cell,
                              identity_span, random_span, restrict_star, vcompose,
                              whisker)

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def _bases():
    return [category_to_monad(z2_category()), category_to_monad(p1_category())]


def _sweep():
    for cat in (z2_category(), p1_category()):
        mon = category_to_monad(cat)
        for t in enumerate_object_maps(cat):
            yield cat, mon, t, restrict_star(t)


def test_acceptance_1_theorem_one_bijection():
    t0 = time.monotonic()
    for cat, mon, t, endo in _sweep():
        warpings = list(enumerate_warpings(mon, endo))
        monads = list(enumerate_ab_monads(mon, endo))
        assert len(warpings) == len(monads)
        images = []
        for w in warpings:
            out = warping_to_monad(w)
            assert monad_to_warping(out, mon, endo) == w
            images.append(out)
        for m in monads:
            w = monad_to_warping(m, mon, endo)
            assert warping_to_monad(w) == m
        assert all(m in images for m in monads)
    elapsed = time.monotonic() - t0
    assert elapsed < 5.0
    print(f"\nACCEPTANCE 1: PASS - warping/monad-on-AB bijection, literal roundtrips "
          f"({elapsed:.2f}s)")


def test_acceptance_2_theorem_two_bijection():
    t0 = time.monotonic()
    for cat, mon, t, endo in _sweep():
        warpings = list(enumerate_warpings(mon, endo))
        wreaths = list(enumerate_wreaths(mon, endo))
        assert len(warpings) == len(wreaths)
        for w in warpings:
            wr = warping_to_wreath(w)
            assert wreath_to_warping(wr) == w
            assert wr in wreaths
        for wr in wreaths:
            w = wreath_to_warping(wr)
            assert warping_to_wreath(w) == wr
    elapsed = time.monotonic() - t0
    assert elapsed < 5.0
    print(f"\nACCEPTANCE 2: PASS - warping/wreath bijection, literal roundtrips "
          f"({elapsed:.2f}s)")


def test_acceptance_3_path_independence():
    t0 = time.monotonic()
    checked = 0
    for cat, mon, t, endo in _sweep():
        for wr in enumerate_wreaths(mon, endo):
            assert wreath_to_monad(wr) == warping_to_monad(wreath_to_warping(wr))
            checked += 1
    assert checked >= 3
    elapsed = time.monotonic() - t0
    assert elapsed < 5.0
    print(f"\nACCEPTANCE 3: PASS - wreath monad equals the two-step route on "
          f"{checked} wreaths ({elapsed:.2f}s)")


def test_acceptance_4_kleisli_correctness():
    t0 = time.monotonic()
    checked = 0
    for cat in (z2_category(), p1_category()):
        for t in enumerate_object_maps(cat):
            for m in enumerate_mw_monads(cat, t):
                k = kleisli_category(m)
                assert validate_category(k).valid
                w = mw_to_warping(m)
                mon = wreath_to_monad(warping_to_wreath(w))
                classical = monad_to_category(SpanMonad(mon.carrier, mon.mult, mon.unit))
                endo, carrier = w.endo, w.base.carrier
                emb = lambda x, y, f: ab_element(endo, carrier, x, y, f)
                for x in k.objects:
                    assert emb(x, x, k.ident[x]) == classical.ident[x]
                    for y in k.objects:
                        assert len(k.hom_of(x, y)) == len(classical.hom_of(x, y))
                        for z in k.objects:
                            for f in k.hom_of(x, y):
                                for g in k.hom_of(y, z):
                                    assert emb(x, z, k.compose(x, y, z, g, f)) == \
                                        classical.compose(x, y, z, emb(y, z, g), emb(x, y, f))
                checked += 1
    assert checked >= 3
    elapsed = time.monotonic() - t0
    assert elapsed < 5.0
    print(f"\nACCEPTANCE 4: PASS - Kleisli categories validate and match the "
          f"wreath route on {checked} instances ({elapsed:.2f}s)")


def test_acceptance_5_algebra_correspondence():
    t0 = time.monotonic()
    for m in (w1_mw(), w1_mw_twisted(), p1_mw()):
        cm = classical_of_mw(m)
        for a in m.base.objects:
            fams = list(enumerate_e_families(m, a))
            algs = list(enumerate_em_algebras(m, a))
            assert len(fams) == len(algs)
            for fam in fams:
                em = algebra_to_em_algebra(fam)
                assert validate_em_algebra(cm, em).valid
                assert em_algebra_to_e_family(m, em) == fam
            for em in algs:
                fam = em_algebra_to_e_family(m, em)
                assert validate_e_family(fam).valid
                assert algebra_to_em_algebra(fam) == em
    elapsed = time.monotonic() - t0
    assert elapsed < 5.0
    print(f"\nACCEPTANCE 5: PASS - family/EM-algebra counts agree with mutually "
          f"inverse translations ({elapsed:.2f}s)")


def test_acceptance_6_skew_kleisli():
    t0 = time.monotonic()
    outputs = 0
    for base in (s1_skew(), s2_skew(), xor_skew()):
        w = identity_skew_warping(base)
        k = skew_kleisli(w)
        assert validate_skew_bicategory(k).valid
        assert k == base
        outputs += 1
    for base in (s1_skew(), s2_skew(), xor_skew()):
        for w in enumerate_skew_warpings(base):
            assert validate_skew_bicategory(skew_kleisli(w)).valid
            outputs += 1
    assert outputs >= 8
    elapsed = time.monotonic() - t0
    assert elapsed < 10.0
    print(f"\nACCEPTANCE 6: PASS - {outputs} skew Kleisli outputs satisfy all five "
          f"axioms componentwise ({elapsed:.2f}s)")


def _mutations():
    from spanwarp.correspond import WarpAlgebra, e_family
    from spanwarp.fincore import finfunction
    from spanwarp.spaneng import compose_word

    w1 = mw_to_warping(w1_mw())
    wr = warping_to_wreath(w1)
    mon = wr.base
    one = identity_span(mon.objects)
    ab = compose_word([one, mon.carrier])

    def unit_cell_to(value):
        return cell(one, ab, {("x", "x"): finfunction(
            one.entry_of("x", "x"), ab.entry_of("x", "x"),
            {one.entry_of("x", "x").elements[0]: value})})

    sa = self_algebra(w1)
    bad_act = cell(sa.act.dom, sa.act.cod, {("x", "x"): finfunction(
        sa.act.dom.entry_of("x", "x"), sa.act.cod.entry_of("x", "x"),
        {e: "s" for e in sa.act.dom.entry_of("x", "x")})})

    z2 = z2_category()
    h = z2.hom_of("x", "x")
    m = category_to_monad(z2)
    bad_mult = cell(m.mult.dom, m.carrier, {("x", "x"): finfunction(
        m.mult.dom.entry_of("x", "x"), h,
        {e: ("s" if m.mult("x", "x", e) == "1" and e.factors() == ("1", "1") else
             m.mult("x", "x", e))
         for e in m.mult.dom.entry_of("x", "x")})})

    w2 = s2_identity_warping()
    sa2 = self_skew_algebra(w2, DOT)

    return [
        ("mw-monad unit K=s", lambda: validate_mw_monad(w1_mw_bad_unit())),
        ("mw-monad extension collapsed", lambda: validate_mw_monad(w1_mw_bad_ext())),
        ("warping wrong unit", lambda: validate_warping(w1_warping_bad_unit())),
        ("wreath d collapsed", lambda: validate_wreath(w1_wreath_bad_d())),
        ("wreath q twisted", lambda: validate_wreath(
            Wreath(wr.base, wr.endo, wr.d, unit_cell_to("s"), wr.j))),
        ("wreath j twisted", lambda: validate_wreath(
            Wreath(wr.base, wr.endo, wr.d, wr.q, unit_cell_to("s")))),
        ("monad multiplication broken", lambda: monad_laws_report(
            m.carrier, bad_mult, m.unit)),
        ("category unit broken", lambda: validate_category(idempotent_bad_unit_category())),
        ("algebra action constant", lambda: validate_algebra(
            __import__("spanwarp.correspond", fromlist=["WarpAlgebra"]).WarpAlgebra(
                w1, sa.y, sa.m, bad_act))),
        ("family law broken", lambda: validate_e_family(
            e_family(w1_mw(), "x", {"x": finfunction(h, h, {"1": "s", "s": "s"})}))),
        ("skew associator twisted", lambda: validate_skew_bicategory(s2_skew(alpha="s"))),
        ("skew left unitor twisted", lambda: validate_skew_bicategory(s2_skew(lam="s"))),
        ("skew unitor non-natural", lambda: validate_skew_bicategory(s3_skew())),
        ("skew warping nu0 twisted", lambda: validate_skew_warping(
            SkewWarping(w2.base, w2.obj_map, w2.ext, w2.units, w2.nu, {DOT: "s"}, w2.kappa))),
        ("skew algebra kappa twisted", lambda: validate_skew_algebra(
            SkewAlgebra(w2, DOT, sa2.e_funcs, sa2.cell_nu, {DOT: {"e": "s"}}))),
    ]


def test_acceptance_7_engine_soundness():
    t0 = time.monotonic()
    rng = random.Random(20240)
    for i in range(1000):
        sizes = [rng.randrange(1, 3) for _ in range(4)]
        sets = [FinSet(tuple(f"q{j}_{i}" for j in range(k))) for i, k in enumerate(sizes)]
        p = random_span(rng, sets[0], sets[1], 2, "p")
        n = random_span(rng, sets[1], sets[2], 2, "n")
        m = random_span(rng, sets[2], sets[3], 2, "m")
        left = compose_spans(compose_spans(m, n), p)
        right = compose_spans(m, compose_spans(n, p))
        assert left == right
        if i % 10 == 0:
            u = identity_cell(n)
            v = identity_cell(m)
            a = vcompose(whisker([], v, [u.cod]), whisker([v.dom], u, []))
            b = vcompose(whisker([v.cod], u, []), whisker([], v, [u.dom]))
            assert cells_equal(a, b).equal
    mutations = _mutations()
    assert len(mutations) >= 10
    for name, check in mutations:
        report = check()
        assert not report.valid, name
        assert report.violations, f"{name}: no law-level witness"
        assert report.violations[0].site is not None
    elapsed = time.monotonic() - t0
    assert elapsed < 10.0
    print(f"\nACCEPTANCE 7: PASS - 1000 random triples strictly associative, "
          f"interchange holds, {len(mutations)} mutations rejected with witnesses "
          f"({elapsed:.2f}s)")


def test_acceptance_8_cli_determinism():
    t0 = time.monotonic()
    from spanwarp.structfiles import emit_structure, parse_structure
    for path in sorted(FIXTURES.glob("*.json")):
        if path.name in ("truncated.json", "bad_schema.json"):
            continue
        text = path.read_text()
        kind, value = parse_structure(text)
        assert emit_structure(kind, value) == text, path.name

    def run(*args):
        return subprocess.run([sys.executable, "-m", "spanwarp", *args],
                              capture_output=True, text=True)

    assert run("validate", str(FIXTURES / "w1_warping.json")).returncode == 0
    assert run("validate", str(FIXTURES / "w1_bad_unit_warping.json")).returncode == 1
    assert run("validate", str(FIXTURES / "truncated.json")).returncode == 2
    assert run("validate", str(FIXTURES / "bad_schema.json")).returncode == 2
    a = run("validate", str(FIXTURES / "s1_skew_bicategory.json"))
    b = run("validate", str(FIXTURES / "s1_skew_bicategory.json"))
    assert a.stdout == b.stdout and a.returncode == 0
    wreath = run("convert", str(FIXTURES / "w1_warping.json"), "--to", "wreath")
    assert wreath.stdout == (FIXTURES / "w1_wreath.json").read_text()
    elapsed = time.monotonic() - t0
    print(f"\nACCEPTANCE 8: PASS - canonical emission roundtrips byte-exactly, "
          f"exit-code contract holds ({elapsed:.2f}s)")
