"""Shared fixtures: small categories, warpings and skew structures.

Everything here is deterministic; the CLI fixture files under
``fixtures/`` are regenerated from these builders (``python -m
spanwarp.fixtures <dir>``).
"""

from __future__ import annotations

from .fincore import (FinCategory, FinSet, finfunction, finfunctor, finset,
                      identity_function, monoid_category, product_category)
from .monadwarp import MwMonad, SpanMonad, Warping, Wreath, category_to_monad, mw_monad, mw_to_warping
from .skew import (DOT, SkewAlgebra, SkewBicategory, SkewMonoidalData, SkewWarping,
                   identity_skew_warping, one_object_view, self_skew_algebra)
from .spaneng import cell, compose_word, identity_span
from .fincore import finfunction as ff


def z2_category() -> FinCategory:
    return monoid_category("x", finset("1", "s"),
                           {("1", "1"): "1", ("1", "s"): "s", ("s", "1"): "s", ("s", "s"): "1"},
                           "1")


def idempotent_category() -> FinCategory:
    """One object, hom {1, s} with s.s = s."""
    return monoid_category("x", finset("1", "s"),
                           {("1", "1"): "1", ("1", "s"): "s", ("s", "1"): "s", ("s", "s"): "s"},
                           "1")


def idempotent_bad_unit_category() -> FinCategory:
    """Same but with s.1 = 1: a right-unit law violation at s."""
    return monoid_category("x", finset("1", "s"),
                           {("1", "1"): "1", ("1", "s"): "s", ("s", "1"): "1", ("s", "s"): "s"},
                           "1")


def discrete2_category() -> FinCategory:
    from .fincore import discrete_category
    return discrete_category(finset("0", "1"))


def p1_category() -> FinCategory:
    """The walking arrow: objects 0, 1 and one arrow u: 0 -> 1."""
    x = finset("0", "1")
    return FinCategory(
        x,
        {("0", "0"): finset("i0"), ("0", "1"): finset("u"),
         ("1", "0"): FinSet(()), ("1", "1"): finset("i1")},
        {("0", "0", "0"): {("i0", "i0"): "i0"}, ("0", "0", "1"): {("u", "i0"): "u"},
         ("0", "1", "1"): {("i1", "u"): "u"}, ("1", "1", "1"): {("i1", "i1"): "i1"},
         ("0", "1", "0"): {}, ("1", "0", "0"): {}, ("1", "0", "1"): {}, ("1", "1", "0"): {}},
        {"0": "i0", "1": "i1"})


def w1_mw() -> MwMonad:
    """W1: base Z/2, T = id, extension = identity, unit K = 1."""
    z2 = z2_category()
    return mw_monad(z2, identity_function(z2.objects),
                    {("x", "x"): identity_function(z2.hom_of("x", "x"))}, {"x": "1"})


def w1_mw_twisted() -> MwMonad:
    """The second valid instance over Z/2: extension f -> f.s, unit K = s."""
    z2 = z2_category()
    h = z2.hom_of("x", "x")
    return mw_monad(z2, identity_function(z2.objects),
                    {("x", "x"): ff(h, h, {"1": "s", "s": "1"})}, {"x": "s"})


def w1_mw_bad_unit() -> MwMonad:
    """W1 with K = s: the unit laws fail."""
    z2 = z2_category()
    return mw_monad(z2, identity_function(z2.objects),
                    {("x", "x"): identity_function(z2.hom_of("x", "x"))}, {"x": "s"})


def w1_mw_bad_ext() -> MwMonad:
    """W1 with the extension collapsed to 1: f = Tf.K fails at s."""
    z2 = z2_category()
    h = z2.hom_of("x", "x")
    return mw_monad(z2, identity_function(z2.objects),
                    {("x", "x"): ff(h, h, {"1": "1", "s": "1"})}, {"x": "1"})


def w1_warping() -> Warping:
    return mw_to_warping(w1_mw())


def w1_warping_bad_unit() -> Warping:
    return mw_to_warping(w1_mw_bad_unit())


def p1_mw() -> MwMonad:
    """P1: the walking arrow with T constant at 1; everything is forced."""
    p1 = p1_category()
    x = p1.objects
    t = finfunction(x, x, {"0": "1", "1": "1"})
    ext = {}
    for a in x:
        for b in x:
            dom = p1.hom_of(a, "1")
            cod = p1.hom_of("1", "1")
            ext[(a, b)] = ff(dom, cod, {f: "i1" for f in dom})
    return mw_monad(p1, t, ext, {"0": "u", "1": "i1"})


def p1_warping() -> Warping:
    return mw_to_warping(p1_mw())


def z2_monad() -> SpanMonad:
    return category_to_monad(z2_category())


def w1_wreath_bad_d() -> Wreath:
    """The wreath of W1 with d collapsed to the identity arrow of Z/2."""
    from .correspond import warping_to_wreath
    wr = warping_to_wreath(w1_warping())
    m = wr.base
    one = identity_span(m.objects)
    ba = compose_word([m.carrier, one])
    ab = compose_word([one, m.carrier])
    d_bad = cell(ba, ab, {("x", "x"): ff(m.carrier.entry_of("x", "x"),
                                         m.carrier.entry_of("x", "x"),
                                         {"1": "1", "s": "1"})})
    return Wreath(m, one, d_bad, wr.q, wr.j)


# --- skew fixtures -----------------------------------------------------------

def arrow_hom_category() -> FinCategory:
    """The poset 2 = {bot -> top} as a category."""
    return FinCategory(
        finset("bot", "top"),
        {("bot", "bot"): finset("1b"), ("bot", "top"): finset("a"),
         ("top", "bot"): FinSet(()), ("top", "top"): finset("1t")},
        {("bot", "bot", "bot"): {("1b", "1b"): "1b"},
         ("bot", "bot", "top"): {("a", "1b"): "a"},
         ("bot", "top", "top"): {("1t", "a"): "a"},
         ("top", "top", "top"): {("1t", "1t"): "1t"},
         ("bot", "top", "bot"): {}, ("top", "bot", "bot"): {},
         ("top", "bot", "top"): {}, ("top", "top", "bot"): {}},
        {"bot": "1b", "top": "1t"})


def _poset2_arrow(cat: FinCategory, a, b):
    return cat.hom_of(a, b).elements[0]


def s1_monoidal() -> SkewMonoidalData:
    """Meet on the poset 2, unit top: a strict structure seen as skew."""
    cat = arrow_hom_category()
    prod = product_category(cat, cat)

    def meet(a, b):
        return "top" if a == "top" and b == "top" else "bot"

    om = finfunction(prod.objects, cat.objects, {o: meet(o.fst, o.snd) for o in prod.objects})
    mm = {}
    for a in prod.objects:
        for b in prod.objects:
            mm[(a, b)] = ff(prod.hom_of(a, b), cat.hom_of(om(a), om(b)),
                            {m: _poset2_arrow(cat, om(a), om(b)) for m in prod.hom_of(a, b)})
    tensor = finfunctor(prod, cat, om, mm)
    assoc = {}
    for h in cat.objects:
        for g in cat.objects:
            for f in cat.objects:
                v = meet(meet(h, g), f)
                assoc[(h, g, f)] = _poset2_arrow(cat, v, v)
    lunit = {f: _poset2_arrow(cat, f, f) for f in cat.objects}
    runit = {f: _poset2_arrow(cat, f, f) for f in cat.objects}
    return SkewMonoidalData(cat, tensor, "top", assoc, lunit, runit)


def s1_skew() -> SkewBicategory:
    return one_object_view(s1_monoidal())


def s1_identity_warping() -> SkewWarping:
    return identity_skew_warping(s1_skew())


def s1_collapse_warping() -> SkewWarping:
    """T = id, extension constant at top, K = top: a genuinely skew warping."""
    s = s1_skew()
    cat = s.hom_cat(DOT, DOT)
    om = finfunction(cat.objects, cat.objects, {o: "top" for o in cat.objects})
    mm = {}
    for a in cat.objects:
        for b in cat.objects:
            mm[(a, b)] = ff(cat.hom_of(a, b), cat.hom_of("top", "top"),
                            {m: "1t" for m in cat.hom_of(a, b)})
    ext = {(DOT, DOT): finfunctor(cat, cat, om, mm)}
    t = identity_function(s.objects)
    nu = {(DOT, DOT, DOT): {(g, f): "1t" for g in cat.objects for f in cat.objects}}
    nu0 = {DOT: "1t"}
    kappa = {(DOT, DOT): {f: _poset2_arrow(cat, f, "top") for f in cat.objects}}
    return SkewWarping(s, t, ext, {DOT: "top"}, nu, nu0, kappa)


def idem_monoid_hom_category() -> FinCategory:
    """One object e with endomorphisms {1, s}, s.s = s."""
    return monoid_category("e", finset("1", "s"),
                           {("1", "1"): "1", ("1", "s"): "s", ("s", "1"): "s", ("s", "s"): "s"},
                           "1")


def s2_monoidal(alpha="1", lam="1", rho="1") -> SkewMonoidalData:
    """Tensor by monoid multiplication on the idempotent-monoid hom-category.

    The structural cells are elements of {1, s}; the structure is lawful
    exactly when all three are 1, so single-cell mutations give genuine
    axiom failures.
    """
    cat = idem_monoid_hom_category()
    prod = product_category(cat, cat)
    om = finfunction(prod.objects, cat.objects, {o: "e" for o in prod.objects})
    mult = {("1", "1"): "1", ("1", "s"): "s", ("s", "1"): "s", ("s", "s"): "s"}
    mm = {}
    for a in prod.objects:
        for b in prod.objects:
            mm[(a, b)] = ff(prod.hom_of(a, b), cat.hom_of("e", "e"),
                            {m: mult[(m.fst, m.snd)] for m in prod.hom_of(a, b)})
    tensor = finfunctor(prod, cat, om, mm)
    return SkewMonoidalData(cat, tensor, "e",
                            {("e", "e", "e"): alpha}, {"e": lam}, {"e": rho})


def s2_skew(alpha="1", lam="1", rho="1") -> SkewBicategory:
    return one_object_view(s2_monoidal(alpha, lam, rho))


def s2_identity_warping() -> SkewWarping:
    return identity_skew_warping(s2_skew())


def xor_skew() -> SkewBicategory:
    """A strict monoidal discrete category (Z/2 under xor) as a skew bicategory."""
    from .fincore import discrete_category
    cat = discrete_category(finset("0", "1"))
    prod = product_category(cat, cat)

    def xor(a, b):
        return "0" if a == b else "1"

    om = finfunction(prod.objects, cat.objects, {o: xor(o.fst, o.snd) for o in prod.objects})
    mm = {}
    for a in prod.objects:
        for b in prod.objects:
            mm[(a, b)] = ff(prod.hom_of(a, b), cat.hom_of(om(a), om(b)),
                            {m: cat.id_of(om(a)) for m in prod.hom_of(a, b)})
    tensor = finfunctor(prod, cat, om, mm)
    assoc = {(h, g, f): cat.id_of(xor(xor(h, g), f))
             for h in cat.objects for g in cat.objects for f in cat.objects}
    lunit = {f: cat.id_of(f) for f in cat.objects}
    runit = {f: cat.id_of(f) for f in cat.objects}
    return one_object_view(SkewMonoidalData(cat, tensor, "0", assoc, lunit, runit))


def parallel_pair_category() -> FinCategory:
    """Two objects with a parallel pair of arrows a -> b."""
    return FinCategory(
        finset("a", "b"),
        {("a", "a"): finset("1a"), ("a", "b"): finset("u1", "u2"),
         ("b", "a"): FinSet(()), ("b", "b"): finset("1b")},
        {("a", "a", "a"): {("1a", "1a"): "1a"},
         ("a", "a", "b"): {("u1", "1a"): "u1", ("u2", "1a"): "u2"},
         ("a", "b", "b"): {("1b", "u1"): "u1", ("1b", "u2"): "u2"},
         ("b", "b", "b"): {("1b", "1b"): "1b"},
         ("a", "b", "a"): {}, ("b", "a", "a"): {}, ("b", "a", "b"): {}, ("b", "b", "a"): {}},
        {"a": "1a", "b": "1b"})


def s3_skew(lam_at_b="u1") -> SkewBicategory:
    """Left-projection tensor on the parallel-pair hom-category.

    Any choice of the left unitor at ``b`` breaks naturality against the
    other parallel arrow, so this is a naturality-negative fixture.
    """
    cat = parallel_pair_category()
    prod = product_category(cat, cat)
    om = finfunction(prod.objects, cat.objects, {o: o.fst for o in prod.objects})
    mm = {}
    for a in prod.objects:
        for b in prod.objects:
            mm[(a, b)] = ff(prod.hom_of(a, b), cat.hom_of(om(a), om(b)),
                            {m: m.fst for m in prod.hom_of(a, b)})
    tensor = finfunctor(prod, cat, om, mm)
    assoc = {(h, g, f): cat.id_of(h) for h in cat.objects for g in cat.objects for f in cat.objects}
    lunit = {"a": "1a", "b": lam_at_b}
    runit = {f: cat.id_of(f) for f in cat.objects}
    return one_object_view(SkewMonoidalData(cat, tensor, "a", assoc, lunit, runit))


# --- fixture files -----------------------------------------------------------

def file_fixtures() -> dict:
    """Every shipped fixture file: name -> (kind, value)."""
    from .correspond import e_family_to_algebra, self_algebra, warping_to_wreath
    from .correspond import enumerate_e_families
    from .skew import SkewWarping

    w2 = s2_identity_warping()
    w2_bad = SkewWarping(w2.base, w2.obj_map, w2.ext, w2.units, w2.nu,
                         {DOT: "s"}, w2.kappa)
    ef = next(iter(enumerate_e_families(w1_mw(), "x")))
    return {
        "z2_category": ("category", z2_category()),
        "idem_category": ("category", idempotent_category()),
        "idem_bad_unit_category": ("category", idempotent_bad_unit_category()),
        "discrete2_category": ("category", discrete2_category()),
        "p1_category": ("category", p1_category()),
        "z2_monad": ("monad", z2_monad()),
        "w1_warping": ("warping", w1_warping()),
        "w1_bad_unit_warping": ("warping", w1_warping_bad_unit()),
        "identity_warping_z2": ("warping", mw_to_warping(w1_mw())),
        "w1_wreath": ("wreath", warping_to_wreath(w1_warping())),
        "w1_bad_d_wreath": ("wreath", w1_wreath_bad_d()),
        "w1_mw": ("mw_monad", w1_mw()),
        "w1_twisted_mw": ("mw_monad", w1_mw_twisted()),
        "w1_bad_unit_mw": ("mw_monad", w1_mw_bad_unit()),
        "p1_mw": ("mw_monad", p1_mw()),
        "w1_self_algebra": ("algebra", self_algebra(w1_warping())),
        "w1_point_algebra": ("algebra", e_family_to_algebra(ef)),
        "s1_skew_bicategory": ("skew_bicategory", s1_skew()),
        "s2_skew_bicategory": ("skew_bicategory", s2_skew()),
        "s2_bad_assoc_skew_bicategory": ("skew_bicategory", s2_skew(alpha="s")),
        "s3_nonnatural_skew_bicategory": ("skew_bicategory", s3_skew()),
        "xor_skew_bicategory": ("skew_bicategory", xor_skew()),
        "s1_identity_skew_warping": ("skew_warping", s1_identity_warping()),
        "s1_collapse_skew_warping": ("skew_warping", s1_collapse_warping()),
        "s2_identity_skew_warping": ("skew_warping", w2),
        "s2_bad_nu0_skew_warping": ("skew_warping", w2_bad),
        "s1_self_skew_algebra": ("skew_algebra", self_skew_algebra(s1_collapse_warping(), DOT)),
    }


def write_fixture_files(directory) -> list:
    """Regenerate the canonical fixture files; returns the paths written."""
    import pathlib

    from .structfiles import emit_structure

    out = pathlib.Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name, (kind, value) in sorted(file_fixtures().items()):
        path = out / f"{name}.json"
        path.write_text(emit_structure(kind, value))
        written.append(path)
    (out / "truncated.json").write_text('{"kind": "warping", "base": {')
    written.append(out / "truncated.json")
    (out / "bad_schema.json").write_text('{"kind": "category", "objects": ["x"]}\n')
    written.append(out / "bad_schema.json")
    return written


if __name__ == "__main__":
    import sys

    target = sys.argv[1] if len(sys.argv) > 1 else "fixtures"
    for p in write_fixture_files(target):
        print(p)
