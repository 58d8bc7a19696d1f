"""Executable correspondences: warpings <-> monads on AB <-> wreaths.

The two theorem translations, the wreath-induced monad, the Kleisli
category of an extension-form monad, and algebras with their
Eilenberg-Moore counterparts.  Every constructor re-validates its output,
and the module ships independent exhaustive enumerators for each side of
each bijection so the counting invariants can be checked without going
through the translations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

from .atoms import Unit, render_atom
from .fincore import (FinCategory, FinFunction, FinSet, ValidationReport, Violation, _cap,
                      enumerate_functions, finfunction, identity_function, validate_category)
from .monadwarp import (InvalidStructure, MwMonad, SpanMonad, Warping, Wreath, ab_element,
                        category_to_monad, monad_laws_report, monad_to_category, mw_monad,
                        mw_to_warping, mw_view, validate_mw_monad, validate_warping,
                        validate_wreath)
from .spaneng import (Cell2, Span, cell, cells_equal, compose_word, composite_elements,
                      eval_pasting, explode, ident, identity_span, normalize, restrict_star,
                      span, stack, star_map_of, vcompose, wh, whisker)


@dataclass(frozen=True)
class MonadOnAB:
    """Monad structure on a composite AB, with the embedding of B."""

    carrier: Span
    mult: Cell2
    unit: Cell2
    base_embedding: Cell2


def base_embedding_cell(base: SpanMonad, endo: Span, unit: Cell2) -> Cell2:
    """(Ap)(uB): B => AB for a unit 1 => AB."""
    b = base.carrier
    return vcompose(whisker([endo], base.mult, []), whisker([], unit, [b]))


def monoid_map_report(base: SpanMonad, endo: Span, mult: Cell2, unit: Cell2,
                      max_witnesses: Optional[int] = None) -> ValidationReport:
    """Does (Ap)(uB) carry the monoid B into the candidate monoid on AB?"""
    b = base.carrier
    ab = compose_word([endo, b])
    iota = base_embedding_cell(base, endo, unit)
    violations = []
    res = cells_equal(vcompose(iota, base.unit), unit)
    if not res:
        violations.append(Violation("embed-unit", res.witness[0],
                                     f"at {render_atom(res.witness[1])}"))
    pair = vcompose(whisker([ab], iota, []), whisker([], iota, [b]))
    res = cells_equal(vcompose(mult, pair), vcompose(iota, base.mult))
    if not res:
        violations.append(Violation("embed-mult", res.witness[0],
                                     f"at {render_atom(res.witness[1])}"))
    return ValidationReport(violations=_cap(violations, max_witnesses))


def monad_on_ab_report(base: SpanMonad, endo: Span, mult: Cell2, unit: Cell2) -> ValidationReport:
    laws = monad_laws_report(compose_word([endo, base.carrier]), mult, unit)
    if not laws.valid:
        return laws
    return monoid_map_report(base, endo, mult, unit)


def warping_to_monad(w: Warping) -> MonadOnAB:
    report = validate_warping(w)
    if not report.valid:
        raise InvalidStructure("invalid warping", report)
    env = {"A": w.endo, "B": w.base.carrier, "p": w.base.mult, "e": w.base.unit,
           "t": w.t, "k": w.k}
    mult = eval_pasting(stack(wh(["A"], "p", []), wh([], "t", ["B"])), env)
    unit = w.k
    out = MonadOnAB(compose_word([w.endo, w.base.carrier]), mult, unit,
                    base_embedding_cell(w.base, w.endo, unit))
    check = monad_on_ab_report(w.base, w.endo, mult, unit)
    if not check.valid:
        raise InvalidStructure("constructed monad fails its laws", check)
    return out


def monad_to_warping(m: MonadOnAB, base: SpanMonad, a: Span) -> Warping:
    if m.carrier != compose_word([a, base.carrier]):
        raise InvalidStructure("carrier is not the composite of the endospan and the base")
    side = monoid_map_report(base, a, m.mult, m.unit)
    if not side.valid:
        raise InvalidStructure("base embedding is not a monoid map", side)
    laws = monad_laws_report(m.carrier, m.mult, m.unit)
    if not laws.valid:
        raise InvalidStructure("monad laws fail on AB", laws)
    env = {"A": a, "B": base.carrier, "p": base.mult, "e": base.unit, "m": m.mult}
    t = eval_pasting(stack("m", wh(["A", "B", "A"], "e", [])), env)
    w = Warping(base, a, t, m.unit)
    check = validate_warping(w)
    if not check.valid:
        raise InvalidStructure("extracted warping fails its axioms", check)
    return w


def warping_to_wreath(w: Warping) -> Wreath:
    report = validate_warping(w)
    if not report.valid:
        raise InvalidStructure("invalid warping", report)
    env = {"A": w.endo, "B": w.base.carrier, "p": w.base.mult, "e": w.base.unit,
           "t": w.t, "k": w.k}
    d = eval_pasting(stack("t", wh(["A"], "p", ["A"]), wh([], "k", ["B", "A"])), env)
    q = eval_pasting(stack("t", wh(["A"], "e", ["A"])), env)
    out = Wreath(w.base, w.endo, d, q, w.k)
    check = validate_wreath(out)
    if not check.valid:
        raise InvalidStructure("constructed wreath fails its axioms", check)
    return out


def wreath_to_warping(w: Wreath) -> Warping:
    report = validate_wreath(w)
    if not report.valid:
        raise InvalidStructure("invalid wreath", report)
    env = {"A": w.endo, "B": w.base.carrier, "p": w.base.mult, "e": w.base.unit,
           "d": w.d, "q": w.q, "j": w.j}
    t = eval_pasting(stack(wh(["A"], "p", []), wh([], "q", ["B"]), wh(["A"], "d", [])), env)
    out = Warping(w.base, w.endo, t, w.j)
    check = validate_warping(out)
    if not check.valid:
        raise InvalidStructure("extracted warping fails its axioms", check)
    return out


def wreath_to_monad(w: Wreath) -> MonadOnAB:
    """Monad on AB with unit j and multiplication (Ap)(qB)(AAp)(AdB)."""
    report = validate_wreath(w)
    if not report.valid:
        raise InvalidStructure("invalid wreath", report)
    env = {"A": w.endo, "B": w.base.carrier, "p": w.base.mult, "e": w.base.unit,
           "d": w.d, "q": w.q, "j": w.j}
    mult = eval_pasting(stack(
        wh(["A"], "p", []), wh([], "q", ["B"]), wh(["A", "A"], "p", []),
        wh(["A"], "d", ["B"])), env)
    out = MonadOnAB(compose_word([w.endo, w.base.carrier]), mult, w.j,
                    base_embedding_cell(w.base, w.endo, w.j))
    check = monad_on_ab_report(w.base, w.endo, mult, w.j)
    if not check.valid:
        raise InvalidStructure("constructed monad fails its laws", check)
    return out


def kleisli_category(m: MwMonad) -> FinCategory:
    """Homs B(x, Ty), composition g * f = Tg . f, identities K_x."""
    report = validate_mw_monad(m)
    if not report.valid:
        raise InvalidStructure("invalid extension-form monad", report)
    b, t = m.base, m.t_of
    objs = b.objects
    hom = {(x, y): b.hom_of(x, t(y)) for x in objs for y in objs}
    comp = {}
    for x in objs:
        for y in objs:
            for z in objs:
                table = {}
                for f in hom[(x, y)]:
                    for g in hom[(y, z)]:
                        table[(g, f)] = b.compose(x, t(y), t(z), m.ext_of(y, z)(g), f)
                comp[(x, y, z)] = table
    ident_map = {x: m.unit_of(x) for x in objs}
    out = FinCategory(objs, hom, comp, ident_map)
    check = validate_category(out)
    if not check.valid:
        raise InvalidStructure("Kleisli data is not a category", check)
    return out


# --- warping algebras -------------------------------------------------------

@dataclass(frozen=True)
class WarpAlgebra:
    """An object Y, a span M: X -> Y and an action m: MBA => MB."""

    warping: Warping
    y: FinSet
    m: Span
    act: Cell2


ALGEBRA_AXIOMS = (
    ("action-pentagon",
     stack("m", wh(["M"], "p", ["A"]), wh([], "m", ["B", "A"])),
     stack(wh(["M"], "p", []), wh([], "m", ["B"]), wh(["M", "B"], "t", []))),
    ("action-unit",
     stack(wh(["M"], "p", []), wh([], "m", ["B"]), wh(["M", "B"], "k", [])),
     ident("M", "B")),
)


def validate_algebra(a: WarpAlgebra, max_witnesses: Optional[int] = None) -> ValidationReport:
    w = a.warping
    structural = []
    if a.m.src != w.base.objects or a.m.dst != a.y:
        structural.append("the span M does not run from the monad objects to Y")
        return ValidationReport(structural=tuple(structural))
    mba = compose_word([a.m, w.base.carrier, w.endo])
    mb = compose_word([a.m, w.base.carrier])
    if a.act.dom != mba or a.act.cod != mb:
        structural.append("the action is not a 2-cell MBA => MB")
        return ValidationReport(structural=tuple(structural))
    env = {"A": w.endo, "B": w.base.carrier, "p": w.base.mult, "e": w.base.unit,
           "t": w.t, "k": w.k, "M": a.m, "m": a.act}
    violations = []
    for name, lhs, rhs in ALGEBRA_AXIOMS:
        res = cells_equal(eval_pasting(lhs, env), eval_pasting(rhs, env))
        if not res:
            entry, elem, va, vb = res.witness
            violations.append(Violation(
                name, entry, f"element {render_atom(elem)}: {render_atom(va)} != {render_atom(vb)}"))
    return ValidationReport(violations=_cap(violations, max_witnesses))


def self_algebra(w: Warping) -> WarpAlgebra:
    """The warping acting on itself: Y = X, M = A, action = t."""
    return WarpAlgebra(w, w.base.objects, w.endo, w.t)


# --- families of extension operators at one object --------------------------

POINT = "@"


@dataclass(frozen=True)
class EFamily:
    """Per object z, a map B(z, a) -> B(Tz, a), acting a warping at ``a``."""

    base: MwMonad
    at: object
    e_maps: "frozenset[tuple[object, FinFunction]]"

    def e_of(self, z) -> FinFunction:
        for k, fn in self.e_maps:
            if k == z:
                return fn
        raise KeyError(render_atom(z))


def e_family(base: MwMonad, at, e_maps: dict) -> EFamily:
    return EFamily(base, at, frozenset(e_maps.items()))


def validate_e_family(e: EFamily, max_witnesses: Optional[int] = None) -> ValidationReport:
    b, t, a = e.base.base, e.base.t_of, e.at
    structural = []
    if a not in b.objects:
        return ValidationReport(structural=(f"{render_atom(a)} is not an object",))
    for z in b.objects:
        try:
            fn = e.e_of(z)
        except KeyError:
            structural.append(f"missing map at {render_atom(z)}")
            continue
        if fn.dom != b.hom_of(z, a) or fn.cod != b.hom_of(t(z), a):
            structural.append(f"map at {render_atom(z)} has wrong boundary")
    if structural:
        return ValidationReport(structural=_cap(structural, max_witnesses))

    violations = []
    # E_u(E_y(g).f) = E_y(g).Tf for f: u -> Ty, g: y -> a
    for u in b.objects:
        for y in b.objects:
            for f in b.hom_of(u, t(y)):
                for g in b.hom_of(y, a):
                    eg = e.e_of(y)(g)
                    lhs = e.e_of(u)(b.compose(u, t(y), a, eg, f))
                    rhs = b.compose(t(u), t(y), a, eg, e.base.ext_of(u, y)(f))
                    if lhs != rhs:
                        violations.append(Violation(
                            "e-pentagon", (u, y, f, g),
                            f"E(Eg.f)={render_atom(lhs)} but Eg.Tf={render_atom(rhs)}"))
    # E_x(b).K_x = b
    for x in b.objects:
        k = e.base.unit_of(x)
        for arr in b.hom_of(x, a):
            got = b.compose(x, t(x), a, e.e_of(x)(arr), k)
            if got != arr:
                violations.append(Violation(
                    "e-unit", (x, arr), f"Eg.K={render_atom(got)} != {render_atom(arr)}"))
    return ValidationReport(violations=_cap(violations, max_witnesses))


def point_span(objects: FinSet, a) -> Span:
    """The span X -> {point} induced by picking the object ``a``."""
    return restrict_star(finfunction(FinSet((POINT,)), objects, {POINT: a}))


def e_family_to_algebra(e: EFamily) -> WarpAlgebra:
    w = mw_to_warping(e.base)
    b, t, a = e.base.base, e.base.t_of, e.at
    m_span = point_span(b.objects, a)
    y = FinSet((POINT,))
    mba = compose_word([m_span, w.base.carrier, w.endo])
    mb = compose_word([m_span, w.base.carrier])
    mb_of = {}
    for x in b.objects:
        for elem, parts in composite_elements([m_span, w.base.carrier], x, POINT):
            arr, _, _ = parts
            mb_of[(x, arr)] = elem
    comp = {}
    for x in b.objects:
        mapping = {}
        for elem, parts in composite_elements([m_span, w.base.carrier, w.endo], x, POINT):
            _, z, arr, _, _ = parts
            mapping[elem] = mb_of[(x, e.e_of(z)(arr))]
        comp[(x, POINT)] = finfunction(mba.entry_of(x, POINT), mb.entry_of(x, POINT), mapping)
    return WarpAlgebra(w, y, m_span, cell(mba, mb, comp))


def algebra_as_e_family(a: WarpAlgebra) -> EFamily:
    """Inverse of ``e_family_to_algebra``; needs Y a point and M an object pick."""
    if len(a.y) != 1:
        raise InvalidStructure("Y is not a one-element set")
    pick = star_map_of(a.m)
    if pick is None:
        raise InvalidStructure("M is not induced by an object choice")
    at = pick(a.y.elements[0])
    pt = a.y.elements[0]
    mw = mw_view(a.warping)
    b = mw.base
    decode = {}
    for x in b.objects:
        for elem, parts in composite_elements([a.m, a.warping.base.carrier], x, pt):
            arr, _, _ = parts
            decode[(x, elem)] = arr
    e_maps = {}
    for z in b.objects:
        dom = b.hom_of(z, at)
        cod = b.hom_of(mw.t_of(z), at)
        mapping = {}
        for arr in dom:
            elem = normalize(
                list(explode(a.warping.endo.entry_of(mw.t_of(z), z).elements[0])) + [z]
                + list(explode(arr)) + [at]
                + list(explode(a.m.entry_of(at, pt).elements[0])),
                mw.t_of(z), pt)
            mapping[arr] = decode[(mw.t_of(z), a.act(mw.t_of(z), pt, elem))]
        e_maps[z] = finfunction(dom, cod, mapping)
    return e_family(mw, at, e_maps)


# --- classical monads and Eilenberg-Moore algebras ---------------------------

@dataclass(frozen=True)
class ClassicalMonad:
    """Functor action, multiplication and unit on a finite category."""

    cat: FinCategory
    obj_map: FinFunction
    arr_map: "frozenset[tuple[tuple, FinFunction]]"
    mu: "frozenset[tuple[object, object]]"
    eta: "frozenset[tuple[object, object]]"

    def t_of(self, x):
        return self.obj_map(x)

    def t_arr(self, x, y, f):
        for k, fn in self.arr_map:
            if k == (x, y):
                return fn(f)
        raise KeyError((x, y))

    def mu_of(self, x):
        return dict(self.mu)[x]

    def eta_of(self, x):
        return dict(self.eta)[x]


def classical_of_mw(m: MwMonad) -> ClassicalMonad:
    """The monad presentation recovered through the wreath dictionary.

    Functor action f |-> T(K . f), multiplication T(id) at each object,
    unit K.
    """
    b, t = m.base, m.t_of
    arr_map = {}
    for x in b.objects:
        for y in b.objects:
            dom = b.hom_of(x, y)
            cod = b.hom_of(t(x), t(y))
            mapping = {}
            for f in dom:
                mapping[f] = m.ext_of(x, y)(b.compose(x, y, t(y), m.unit_of(y), f))
            arr_map[(x, y)] = finfunction(dom, cod, mapping)
    mu = {y: m.ext_of(t(y), y)(b.id_of(t(y))) for y in b.objects}
    eta = {x: m.unit_of(x) for x in b.objects}
    return ClassicalMonad(b, m.obj_map, frozenset(arr_map.items()),
                          frozenset(mu.items()), frozenset(eta.items()))


def validate_classical_monad(cm: ClassicalMonad,
                             max_witnesses: Optional[int] = None) -> ValidationReport:
    b, t = cm.cat, cm.t_of
    violations = []
    for x in b.objects:
        if cm.t_arr(x, x, b.id_of(x)) != b.id_of(t(x)):
            violations.append(Violation("functor-identity", (x,), "T(id) != id"))
    for x in b.objects:
        for y in b.objects:
            for z in b.objects:
                for f in b.hom_of(x, y):
                    for g in b.hom_of(y, z):
                        lhs = cm.t_arr(x, z, b.compose(x, y, z, g, f))
                        rhs = b.compose(t(x), t(y), t(z), cm.t_arr(y, z, g), cm.t_arr(x, y, f))
                        if lhs != rhs:
                            violations.append(Violation("functor-composition", (x, y, z, f, g), ""))
    for x, y, f in b.arrows():
        lhs = b.compose(x, y, t(y), cm.eta_of(y), f)
        rhs = b.compose(x, t(x), t(y), cm.t_arr(x, y, f), cm.eta_of(x))
        if lhs != rhs:
            violations.append(Violation("eta-natural", (x, y, f), ""))
        lhs = b.compose(t(t(x)), t(t(y)), t(y), cm.mu_of(y), cm.t_arr(t(x), t(y), cm.t_arr(x, y, f)))
        rhs = b.compose(t(t(x)), t(x), t(y), cm.t_arr(x, y, f), cm.mu_of(x))
        if lhs != rhs:
            violations.append(Violation("mu-natural", (x, y, f), ""))
    for x in b.objects:
        if b.compose(t(x), t(t(x)), t(x), cm.mu_of(x), cm.t_arr(x, t(x), cm.eta_of(x))) != b.id_of(t(x)):
            violations.append(Violation("mu-eta-right", (x,), "mu . T(eta) != id"))
        if b.compose(t(x), t(t(x)), t(x), cm.mu_of(x), cm.eta_of(t(x))) != b.id_of(t(x)):
            violations.append(Violation("mu-eta-left", (x,), "mu . eta != id"))
        lhs = b.compose(t(t(t(x))), t(t(x)), t(x), cm.mu_of(x), cm.t_arr(t(t(x)), t(x), cm.mu_of(x)))
        rhs = b.compose(t(t(t(x))), t(t(x)), t(x), cm.mu_of(x), cm.mu_of(t(x)))
        if lhs != rhs:
            violations.append(Violation("mu-assoc", (x,), "mu . T(mu) != mu . mu"))
    return ValidationReport(violations=_cap(violations, max_witnesses))


@dataclass(frozen=True)
class EMAlgebra:
    at: object
    action: object  # an arrow Ta -> a


def validate_em_algebra(cm: ClassicalMonad, alg: EMAlgebra,
                        max_witnesses: Optional[int] = None) -> ValidationReport:
    b, t, a, h = cm.cat, cm.t_of, alg.at, alg.action
    if h not in b.hom_of(t(a), a):
        return ValidationReport(structural=("action is not an arrow Ta -> a",))
    violations = []
    if b.compose(a, t(a), a, h, cm.eta_of(a)) != b.id_of(a):
        violations.append(Violation("em-unit", (a,), "h . eta != id"))
    lhs = b.compose(t(t(a)), t(a), a, h, cm.mu_of(a))
    rhs = b.compose(t(t(a)), t(a), a, h, cm.t_arr(t(a), a, h))
    if lhs != rhs:
        violations.append(Violation("em-mult", (a,), "h . mu != h . T(h)"))
    return ValidationReport(violations=_cap(violations, max_witnesses))


def algebra_to_em_algebra(e: EFamily) -> EMAlgebra:
    """The structure arrow is the family applied to the identity."""
    return EMAlgebra(e.at, e.e_of(e.at)(e.base.base.id_of(e.at)))


def em_algebra_to_e_family(m: MwMonad, alg: EMAlgebra) -> EFamily:
    cm = classical_of_mw(m)
    b, t, a, h = m.base, m.t_of, alg.at, alg.action
    e_maps = {}
    for z in b.objects:
        dom = b.hom_of(z, a)
        cod = b.hom_of(t(z), a)
        mapping = {arr: b.compose(t(z), t(a), a, h, cm.t_arr(z, a, arr)) for arr in dom}
        e_maps[z] = finfunction(dom, cod, mapping)
    return e_family(m, a, e_maps)


# --- exhaustive enumerators --------------------------------------------------

MAX_OBJECTS = 2
MAX_HOM = 2


class BoundsExceeded(ValueError):
    pass


def check_bounds(cat: FinCategory, max_objects: int = MAX_OBJECTS, max_hom: int = MAX_HOM):
    if len(cat.objects) > max_objects:
        raise BoundsExceeded(f"object count {len(cat.objects)} exceeds the limit {max_objects}")
    for x in cat.objects:
        for y in cat.objects:
            if len(cat.hom_of(x, y)) > max_hom:
                raise BoundsExceeded(
                    f"hom-set at ({render_atom(x)},{render_atom(y)}) exceeds the limit {max_hom}")


def enumerate_object_maps(cat: FinCategory) -> Iterator[FinFunction]:
    yield from enumerate_functions(cat.objects, cat.objects)


def enumerate_mw_candidates(cat: FinCategory, t: FinFunction) -> Iterator[MwMonad]:
    objs = cat.objects
    pairs = [(x, y) for x in objs for y in objs]
    ext_choices = [list(enumerate_functions(cat.hom_of(x, t(y)), cat.hom_of(t(x), t(y))))
                   for (x, y) in pairs]
    unit_choices = [list(cat.hom_of(x, t(x))) for x in objs]
    if any(not c for c in ext_choices) or any(not c for c in unit_choices):
        return
    for exts in itertools.product(*ext_choices):
        for units in itertools.product(*unit_choices):
            yield mw_monad(cat, t, dict(zip(pairs, exts)), dict(zip(objs.elements, units)))


def enumerate_mw_monads(cat: FinCategory, t: FinFunction) -> Iterator[MwMonad]:
    for cand in enumerate_mw_candidates(cat, t):
        if validate_mw_monad(cand).valid:
            yield cand


def enumerate_warpings(base: SpanMonad, endo: Span) -> Iterator[Warping]:
    """All valid warpings over (base, endo), by raw 2-cell enumeration."""
    b = base.carrier
    aba = compose_word([endo, b, endo])
    ab = compose_word([endo, b])
    objs = base.objects
    pairs = [(x, y) for x in objs for y in objs]
    t_choices = [list(enumerate_functions(aba.entry_of(x, y), ab.entry_of(x, y)))
                 for (x, y) in pairs]
    one = identity_span(objs)
    k_choices = [list(enumerate_functions(one.entry_of(x, y), ab.entry_of(x, y)))
                 for (x, y) in pairs]
    if any(not c for c in t_choices) or any(not c for c in k_choices):
        return
    for ts in itertools.product(*t_choices):
        t_cell = cell(aba, ab, dict(zip(pairs, ts)))
        for ks in itertools.product(*k_choices):
            k_cell = cell(one, ab, dict(zip(pairs, ks)))
            w = Warping(base, endo, t_cell, k_cell)
            if validate_warping(w).valid:
                yield w


def enumerate_wreaths(base: SpanMonad, endo: Span) -> Iterator[Wreath]:
    b = base.carrier
    ba = compose_word([b, endo])
    aa = compose_word([endo, endo])
    ab = compose_word([endo, b])
    objs = base.objects
    pairs = [(x, y) for x in objs for y in objs]
    one = identity_span(objs)
    d_choices = [list(enumerate_functions(ba.entry_of(x, y), ab.entry_of(x, y))) for (x, y) in pairs]
    q_choices = [list(enumerate_functions(aa.entry_of(x, y), ab.entry_of(x, y))) for (x, y) in pairs]
    j_choices = [list(enumerate_functions(one.entry_of(x, y), ab.entry_of(x, y))) for (x, y) in pairs]
    if any(not c for c in d_choices + q_choices + j_choices):
        return
    for ds in itertools.product(*d_choices):
        d_cell = cell(ba, ab, dict(zip(pairs, ds)))
        for qs in itertools.product(*q_choices):
            q_cell = cell(aa, ab, dict(zip(pairs, qs)))
            for js in itertools.product(*j_choices):
                j_cell = cell(one, ab, dict(zip(pairs, js)))
                w = Wreath(base, endo, d_cell, q_cell, j_cell)
                if validate_wreath(w).valid:
                    yield w


def enumerate_ab_monads(base: SpanMonad, endo: Span) -> Iterator[MonadOnAB]:
    """All monad structures on AB whose base embedding is a monoid map."""
    b = base.carrier
    ab = compose_word([endo, b])
    abab = compose_word([endo, b, endo, b])
    objs = base.objects
    pairs = [(x, y) for x in objs for y in objs]
    one = identity_span(objs)
    m_choices = [list(enumerate_functions(abab.entry_of(x, y), ab.entry_of(x, y))) for (x, y) in pairs]
    u_choices = [list(enumerate_functions(one.entry_of(x, y), ab.entry_of(x, y))) for (x, y) in pairs]
    if any(not c for c in m_choices) or any(not c for c in u_choices):
        return
    for ms in itertools.product(*m_choices):
        mult = cell(abab, ab, dict(zip(pairs, ms)))
        for us in itertools.product(*u_choices):
            unit = cell(one, ab, dict(zip(pairs, us)))
            if monad_on_ab_report(base, endo, mult, unit).valid:
                yield MonadOnAB(ab, mult, unit, base_embedding_cell(base, endo, unit))


def enumerate_e_families(m: MwMonad, at) -> Iterator[EFamily]:
    b, t = m.base, m.t_of
    objs = b.objects
    choices = [list(enumerate_functions(b.hom_of(z, at), b.hom_of(t(z), at))) for z in objs]
    if any(not c for c in choices):
        return
    for fns in itertools.product(*choices):
        cand = e_family(m, at, dict(zip(objs.elements, fns)))
        if validate_e_family(cand).valid:
            yield cand


def enumerate_em_algebras(m: MwMonad, at) -> Iterator[EMAlgebra]:
    cm = classical_of_mw(m)
    for h in m.base.hom_of(m.t_of(at), at):
        alg = EMAlgebra(at, h)
        if validate_em_algebra(cm, alg).valid:
            yield alg
