import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spanwarp.atoms import Path, Star, Unit
from spanwarp.fincore import FinSet, compose_functions, finfunction, finset, identity_function
from spanwarp.fixtures import w1_mw, w1_mw_bad_unit
from spanwarp.monadwarp import WARPING_AXIOMS, mw_to_warping, warping_env
from spanwarp.spaneng import (Cell2, PastingTypeError, Span, SpanError, cell, cells_equal,
                              compose_spans, compose_word, composite_elements, eval_pasting,
                              ident, identity_cell, identity_span, normalize, random_span,
                              restrict_star, span, star_map_of, stack, vcompose, wh, whisker)


def two_by_two_by_three():
    x = finset("x0", "x1")
    z = finset("z1", "z2")
    y = finset("y")
    n = span(x, z, {("x0", "z1"): ["n0", "n1"], ("x0", "z2"): ["n2", "n3"],
                    ("x1", "z1"): ["n4", "n5"], ("x1", "z2"): ["n6", "n7"]})
    m = span(z, y, {("z1", "y"): ["m0", "m1", "m2"], ("z2", "y"): ["m3", "m4", "m5"]})
    return m, n


def test_matrix_formula_sizes():
    m, n = two_by_two_by_three()
    mn = compose_spans(m, n)
    # 2 entries through each of the 2 pivots, 3 continuations each
    assert len(mn.entry_of("x0", "y")) == 12
    assert len(mn.entry_of("x1", "y")) == 12


def test_identity_composition_is_literal():
    _, n = two_by_two_by_three()
    assert compose_spans(identity_span(n.dst), n) == n
    assert compose_spans(n, identity_span(n.src)) == n
    one = identity_span(finset("a", "b"))
    assert compose_spans(one, one) == one


def test_identity_span_shape():
    one = identity_span(finset("a", "b"))
    assert tuple(one.entry_of("a", "a")) == (Unit("a"),)
    assert len(one.entry_of("a", "b")) == 0
    assert len(one.entry_of("b", "a")) == 0


def _random_triple(rng):
    sizes = [rng.randrange(1, 3) for _ in range(4)]
    sets = [FinSet(tuple(f"{chr(119 + i)}{j}" for j in range(k))) for i, k in enumerate(sizes)]
    p = random_span(rng, sets[0], sets[1], 2, "p")
    n = random_span(rng, sets[1], sets[2], 2, "n")
    m = random_span(rng, sets[2], sets[3], 2, "m")
    return m, n, p


def test_strict_associativity_seeded():
    rng = random.Random(7)
    for _ in range(50):
        m, n, p = _random_triple(rng)
        left = compose_spans(compose_spans(m, n), p)
        right = compose_spans(m, compose_spans(n, p))
        assert left == right
        assert left == compose_word([m, n, p])


@st.composite
def span_words(draw):
    sizes = [draw(st.integers(1, 2)) for _ in range(4)]
    sets = [FinSet(tuple(f"{chr(119 + i)}{j}" for j in range(k))) for i, k in enumerate(sizes)]
    rng = random.Random(draw(st.integers(0, 10 ** 6)))
    return (random_span(rng, sets[0], sets[1], 2, "p"),
            random_span(rng, sets[1], sets[2], 2, "n"),
            random_span(rng, sets[2], sets[3], 2, "m"))


@settings(max_examples=40, deadline=None)
@given(span_words())
def test_strict_associativity_property(word):
    m, n, p = word[2], word[1], word[0]
    assert compose_spans(compose_spans(m, n), p) == compose_spans(m, compose_spans(n, p))


def test_restrict_star_identity_function():
    x = finset("a", "b")
    assert restrict_star(identity_function(x)) == identity_span(x)


def test_restrict_star_collapse_map():
    x = finset("0", "1")
    f = finfunction(x, x, {"0": "1", "1": "1"})
    a = restrict_star(f)
    assert tuple(a.entry_of("1", "0")) == (Star("0"),)
    assert tuple(a.entry_of("1", "1")) == (Unit("1"),)
    assert len(a.entry_of("0", "0")) == 0 and len(a.entry_of("0", "1")) == 0
    assert star_map_of(a) == f


def test_star_reindexes_target():
    # (F*B)(x, y) is in bijection with B(x, Fy)
    x = finset("0", "1")
    f = finfunction(x, x, {"0": "1", "1": "1"})
    b = span(x, x, {("0", "0"): ["i0"], ("0", "1"): ["u"], ("1", "1"): ["i1"]})
    fb = compose_spans(restrict_star(f), b)
    for p in x:
        for q in x:
            assert len(fb.entry_of(p, q)) == len(b.entry_of(p, f(q)))
            for elem, parts in composite_elements([restrict_star(f), b], p, q):
                assert parts[0] in b.entry_of(p, f(q))
    assert len(fb.entry_of("0", "0")) == len(b.entry_of("0", "1")) == 1


def test_star_contravariant_functoriality():
    x = finset("0", "1", "2")
    f = finfunction(x, x, {"0": "1", "1": "2", "2": "2"})
    g = finfunction(x, x, {"0": "0", "1": "0", "2": "1"})
    # (f . g)* equals g* . f* on the nose
    assert compose_spans(restrict_star(g), restrict_star(f)) == restrict_star(compose_functions(f, g))
    sw = finfunction(x, x, {"0": "1", "1": "0", "2": "2"})
    assert compose_spans(restrict_star(sw), restrict_star(sw)) == identity_span(x)


def test_span_reserved_atom_discipline():
    x = finset("a", "b")
    with pytest.raises(SpanError):
        span(x, x, {("a", "b"): [Unit("a")]})
    with pytest.raises(SpanError):
        span(x, x, {("a", "a"): [Star("a")]})


def test_frame_mismatch_raises():
    m, n = two_by_two_by_three()
    with pytest.raises(PastingTypeError):
        compose_spans(n, m)


def _cell_between(rng, dom):
    entries = {}
    i = 0
    for x in dom.src:
        for y in dom.dst:
            entries[(x, y)] = FinSet((f"c{i}",))
            i += 1
    cod = Span(dom.src, dom.dst, entries)
    comp = {}
    for x in dom.src:
        for y in dom.dst:
            d, c = dom.entry_of(x, y), cod.entry_of(x, y)
            comp[(x, y)] = finfunction(d, c, {e: c.elements[0] for e in d})
    return cell(dom, cod, comp)


def test_vcompose_identity_and_whisker_by_nothing():
    rng = random.Random(3)
    m, n, _ = _random_triple(rng)
    c = _cell_between(rng, m)
    assert cells_equal(vcompose(identity_cell(c.cod), c), c)
    assert cells_equal(whisker([], c, []), c)


def test_interchange_exhaustive_small():
    rng = random.Random(11)
    for _ in range(30):
        m, n, _ = _random_triple(rng)
        u = _cell_between(rng, n)   # acts on the right factor of the word [m, n]
        v = _cell_between(rng, m)   # acts on the left factor
        lhs = vcompose(whisker([], v, [u.cod]), whisker([v.dom], u, []))
        rhs = vcompose(whisker([v.cod], u, []), whisker([], v, [u.dom]))
        res = cells_equal(lhs, rhs)
        assert res.equal, res.witness


def test_whisker_frame_matches_word_composite():
    rng = random.Random(5)
    m, n, _ = _random_triple(rng)
    u = _cell_between(rng, n)
    w = whisker([m], u, [])
    assert w.dom == compose_word([m, u.dom])
    assert w.cod == compose_word([m, u.cod])


def test_eval_single_cell_and_identity():
    rng = random.Random(9)
    m, n, _ = _random_triple(rng)
    u = _cell_between(rng, n)
    env = {"N": n, "M": m, "u": u}
    assert cells_equal(eval_pasting(wh([], "u", []), env), u)
    got = eval_pasting(stack(wh(["M"], "u", []), ident("M", "N")), env)
    assert cells_equal(got, whisker([m], u, []))


def test_pentagon_sides_agree_on_valid_warping():
    w = mw_to_warping(w1_mw())
    env = warping_env(w)
    name, lhs, rhs = WARPING_AXIOMS[0]
    assert name == "pentagon"
    assert cells_equal(eval_pasting(lhs, env), eval_pasting(rhs, env)).equal


def test_unit_square_sides_disagree_on_bad_unit():
    w = mw_to_warping(w1_mw_bad_unit())
    env = warping_env(w)
    name, lhs, rhs = WARPING_AXIOMS[1]
    assert name == "unit-square"
    res = cells_equal(eval_pasting(lhs, env), eval_pasting(rhs, env))
    assert not res.equal
    entry, elem, got, want = res.witness
    assert entry == ("x", "x") and {got, want} == {"1", "s"}


def test_ill_typed_expression_is_named():
    from spanwarp.fixtures import p1_mw
    w = mw_to_warping(p1_mw())
    env = warping_env(w)
    with pytest.raises(PastingTypeError):
        eval_pasting(stack("t", "t"), env)


def test_cells_equal_witness():
    x = finset("a")
    s1 = span(x, x, {("a", "a"): ["e"]})
    s2 = span(x, x, {("a", "a"): ["u", "v"]})
    c1 = cell(s1, s2, {("a", "a"): finfunction(s1.entry_of("a", "a"), s2.entry_of("a", "a"), {"e": "u"})})
    c2 = cell(s1, s2, {("a", "a"): finfunction(s1.entry_of("a", "a"), s2.entry_of("a", "a"), {"e": "v"})})
    assert cells_equal(c1, c1).equal
    res = cells_equal(c1, c2)
    assert not res.equal and res.witness == (("a", "a"), "e", "u", "v")


def test_normalize_flattens_nested_paths():
    x = finset("a")
    b = span(x, x, {("a", "a"): ["f", "g"]})
    bb = compose_spans(b, b)
    bbb1 = compose_spans(bb, b)
    bbb2 = compose_spans(b, bb)
    assert bbb1 == bbb2
    for e in bbb1.entry_of("a", "a"):
        assert isinstance(e, Path) and len(e.factors()) == 3
