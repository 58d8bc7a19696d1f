"""Monads in Span, warpings, wreaths, and extension-form (mw) monads.

A monad ``(X, B)`` in the span model is the same data as a finite
category; ``category_to_monad`` / ``monad_to_category`` are the two
directions of that dictionary.  A warping over such a monad along a
function-induced endospan ``T*`` is the same data as an mw-monad: an
object map ``T``, extension operators ``B(x, Ty) -> B(Tx, Ty)`` and unit
arrows ``K_x``.  ``mw_view`` / ``mw_to_warping`` translate between the
two presentations; ``validate_mw_monad`` checks the three extension-form
equations by direct loops, independent of the pasting evaluator that
backs ``validate_warping``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .atoms import Unit, render_atom
from .fincore import (FinCategory, FinFunction, FinSet, StructureError, ValidationReport,
                      Violation, _cap, finfunction, identity_function)
from .spaneng import (Cell2, Span, cell, cells_equal, compose_word, composite_elements,
                      eval_pasting, explode, ident, identity_cell, identity_span,
                      normalize, restrict_star, span, star_map_of, stack, wh)


class InvalidStructure(StructureError):
    def __init__(self, msg: str, report: Optional[ValidationReport] = None):
        super().__init__(msg if report is None else f"{msg}: {report.summary()}")
        self.report = report


@dataclass(frozen=True)
class SpanMonad:
    """Endospan with multiplication and unit satisfying the monad laws."""

    carrier: Span
    mult: Cell2
    unit: Cell2

    @property
    def objects(self) -> FinSet:
        return self.carrier.src


def monad_laws_report(carrier: Span, mult: Cell2, unit: Cell2,
                      max_witnesses: Optional[int] = None) -> ValidationReport:
    structural = []
    if carrier.src != carrier.dst:
        structural.append("carrier is not an endospan")
        return ValidationReport(structural=tuple(structural))
    env = {"B": carrier, "p": mult, "e": unit, "I": identity_span(carrier.src)}
    if mult.dom != compose_word([carrier, carrier]) or mult.cod != carrier:
        structural.append("multiplication is not a 2-cell BB => B")
    if unit.dom != identity_span(carrier.src) or unit.cod != carrier:
        structural.append("unit is not a 2-cell 1 => B")
    if structural:
        return ValidationReport(structural=tuple(structural))
    checks = [
        ("associativity", stack("p", wh([], "p", ["B"])), stack("p", wh(["B"], "p", []))),
        ("left-unit", stack("p", wh([], "e", ["B"])), ident("B")),
        ("right-unit", stack("p", wh(["B"], "e", [])), ident("B")),
    ]
    violations = []
    for law, lhs, rhs in checks:
        res = cells_equal(eval_pasting(lhs, env), eval_pasting(rhs, env))
        if not res:
            violations.append(Violation(law, res.witness[0], f"at {render_atom(res.witness[1])}"))
    return ValidationReport(violations=_cap(violations, max_witnesses))


def span_monad(carrier: Span, mult: Cell2, unit: Cell2) -> SpanMonad:
    """Checked constructor; rejects data violating the monad laws."""
    report = monad_laws_report(carrier, mult, unit)
    if not report.valid:
        raise InvalidStructure("monad laws fail", report)
    return SpanMonad(carrier, mult, unit)


def category_to_monad(c: FinCategory) -> SpanMonad:
    from .fincore import validate_category
    report = validate_category(c)
    if not report.valid:
        raise InvalidStructure("not a category", report)
    x = c.objects
    carrier = span(x, x, {(a, b): c.hom_of(a, b) for a in x for b in x})
    bb = compose_word([carrier, carrier])
    mult_comp = {}
    for a in x:
        for b in x:
            mapping = {}
            for e, parts in composite_elements([carrier, carrier], a, b):
                f, z, g = parts
                mapping[e] = c.compose(a, z, b, g, f)
            mult_comp[(a, b)] = finfunction(bb.entry_of(a, b), carrier.entry_of(a, b), mapping)
    one = identity_span(x)
    unit_comp = {}
    for a in x:
        for b in x:
            mapping = {Unit(a): c.id_of(a)} if a == b else {}
            unit_comp[(a, b)] = finfunction(one.entry_of(a, b), carrier.entry_of(a, b), mapping)
    return SpanMonad(carrier, cell(bb, carrier, mult_comp), cell(one, carrier, unit_comp))


def monad_to_category(m: SpanMonad) -> FinCategory:
    x = m.objects
    b = m.carrier
    hom = {(a, c): b.entry_of(a, c) for a in x for c in x}
    comp = {}
    for a in x:
        for c in x:
            for d in x:
                table = {}
                for f in b.entry_of(a, c):
                    for g in b.entry_of(c, d):
                        e = normalize(list(explode(f)) + [c] + list(explode(g)), a, d)
                        table[(g, f)] = m.mult(a, d, e)
                comp[(a, c, d)] = table
    ident_map = {a: m.unit(a, a, Unit(a)) for a in x}
    return FinCategory(x, hom, comp, ident_map)


# --- warpings -------------------------------------------------------------

@dataclass(frozen=True)
class Warping:
    """2-cells t: ABA => AB and k: 1 => AB over a monad and an endospan.

    Values may hold unvalidated data so that mutation fixtures are
    expressible; ``validate_warping`` is the law gate.
    """

    base: SpanMonad
    endo: Span
    t: Cell2
    k: Cell2


WARPING_AXIOMS = (
    # pentagon: in extension form, T(Tg.f) = Tg.Tf
    ("pentagon",
     stack("t", wh(["A"], "p", ["A"]), wh([], "t", ["B", "A"])),
     stack(wh(["A"], "p", []), wh([], "t", ["B"]), wh(["A", "B"], "t", []))),
    # square with k: in extension form, f = Tf.K
    ("unit-square",
     stack(wh(["A"], "p", []), wh([], "t", ["B"]), wh(["A", "B"], "k", [])),
     ident("A", "B")),
    # triangle with k: in extension form, TK = 1
    ("unit-triangle",
     stack("t", wh([], "k", ["A"])),
     wh(["A"], "e", [])),
)


def warping_env(w: Warping) -> dict:
    return {"A": w.endo, "B": w.base.carrier, "p": w.base.mult, "e": w.base.unit,
            "t": w.t, "k": w.k}


def _axiom_check(axioms, env, max_witnesses) -> ValidationReport:
    violations = []
    for name, lhs, rhs in axioms:
        res = cells_equal(eval_pasting(lhs, env), eval_pasting(rhs, env))
        if not res:
            entry, elem, va, vb = res.witness
            violations.append(Violation(
                name, entry,
                f"element {render_atom(elem)}: {render_atom(va)} != {render_atom(vb)}"))
    return ValidationReport(violations=_cap(violations, max_witnesses))


def validate_warping(w: Warping, max_witnesses: Optional[int] = None) -> ValidationReport:
    structural = []
    if w.endo.src != w.base.objects or w.endo.dst != w.base.objects:
        structural.append("endospan frame does not match the monad")
        return ValidationReport(structural=tuple(structural))
    env = warping_env(w)
    aba = compose_word([w.endo, w.base.carrier, w.endo])
    ab = compose_word([w.endo, w.base.carrier])
    if w.t.dom != aba or w.t.cod != ab:
        structural.append("t is not a 2-cell ABA => AB")
    if w.k.dom != identity_span(w.base.objects) or w.k.cod != ab:
        structural.append("k is not a 2-cell 1 => AB")
    if structural:
        return ValidationReport(structural=tuple(structural))
    return _axiom_check(WARPING_AXIOMS, env, max_witnesses)


def identity_warping(base: SpanMonad) -> Warping:
    return Warping(base, identity_span(base.objects), identity_cell(base.carrier), base.unit)


# --- wreaths --------------------------------------------------------------

@dataclass(frozen=True)
class Wreath:
    """2-cells d: BA => AB, q: AA => AB, j: 1 => AB over a monad and endospan."""

    base: SpanMonad
    endo: Span
    d: Cell2
    q: Cell2
    j: Cell2


WREATH_AXIOMS = (
    ("mult-compat",
     stack("d", wh([], "p", ["A"])),
     stack(wh(["A"], "p", []), wh([], "d", ["B"]), wh(["B"], "d", []))),
    ("unit-compat",
     stack("d", wh([], "e", ["A"])),
     wh(["A"], "e", [])),
    ("d-q-compat",
     stack(wh(["A"], "p", []), wh([], "q", ["B"]), wh(["A"], "d", []), wh([], "d", ["A"])),
     stack(wh(["A"], "p", []), wh([], "d", ["B"]), wh(["B"], "q", []))),
    ("d-j-compat",
     stack(wh(["A"], "p", []), wh([], "j", ["B"])),
     stack(wh(["A"], "p", []), wh([], "d", ["B"]), wh(["B"], "j", []))),
    ("q-assoc",
     stack(wh(["A"], "p", []), wh([], "q", ["B"]), wh(["A"], "q", [])),
     stack(wh(["A"], "p", []), wh([], "q", ["B"]), wh(["A"], "d", []), wh([], "q", ["A"]))),
    ("q-j-right",
     stack(wh(["A"], "p", []), wh([], "q", ["B"]), wh(["A"], "j", [])),
     wh(["A"], "e", [])),
    ("q-j-left",
     stack(wh(["A"], "p", []), wh([], "q", ["B"]), wh(["A"], "d", []), wh([], "j", ["A"])),
     wh(["A"], "e", [])),
)


def wreath_env(w: Wreath) -> dict:
    return {"A": w.endo, "B": w.base.carrier, "p": w.base.mult, "e": w.base.unit,
            "d": w.d, "q": w.q, "j": w.j}


def validate_wreath(w: Wreath, max_witnesses: Optional[int] = None) -> ValidationReport:
    structural = []
    if w.endo.src != w.base.objects or w.endo.dst != w.base.objects:
        structural.append("endospan frame does not match the monad")
        return ValidationReport(structural=tuple(structural))
    ba = compose_word([w.base.carrier, w.endo])
    aa = compose_word([w.endo, w.endo])
    ab = compose_word([w.endo, w.base.carrier])
    if w.d.dom != ba or w.d.cod != ab:
        structural.append("d is not a 2-cell BA => AB")
    if w.q.dom != aa or w.q.cod != ab:
        structural.append("q is not a 2-cell AA => AB")
    if w.j.dom != identity_span(w.base.objects) or w.j.cod != ab:
        structural.append("j is not a 2-cell 1 => AB")
    if structural:
        return ValidationReport(structural=tuple(structural))
    return _axiom_check(WREATH_AXIOMS, wreath_env(w), max_witnesses)


def identity_wreath(base: SpanMonad) -> Wreath:
    return Wreath(base, identity_span(base.objects),
                  identity_cell(base.carrier), base.unit, base.unit)


# --- extension-form monads -------------------------------------------------

@dataclass(frozen=True)
class MwMonad:
    """Object map T, extension operators B(x,Ty) -> B(Tx,Ty), units K_x."""

    base: FinCategory
    obj_map: FinFunction
    ext: "frozenset[tuple[tuple, FinFunction]]"
    units: "frozenset[tuple[str, object]]"

    def t_of(self, x):
        return self.obj_map(x)

    def ext_of(self, x, y) -> FinFunction:
        for k, fn in self.ext:
            if k == (x, y):
                return fn
        raise KeyError((x, y))

    def unit_of(self, x):
        for k, v in self.units:
            if k == x:
                return v
        raise KeyError(render_atom(x))


def mw_monad(base: FinCategory, obj_map: FinFunction, ext: dict, units: dict) -> MwMonad:
    return MwMonad(base, obj_map, frozenset(ext.items()), frozenset(units.items()))


def validate_mw_monad(m: MwMonad, max_witnesses: Optional[int] = None) -> ValidationReport:
    """Direct check of the three extension-form equations."""
    b, t = m.base, m.t_of
    structural = []
    if m.obj_map.dom != b.objects or m.obj_map.cod != b.objects:
        structural.append("object map frame mismatch")
        return ValidationReport(structural=tuple(structural))
    for x in b.objects:
        for y in b.objects:
            try:
                fn = m.ext_of(x, y)
            except KeyError:
                structural.append(f"missing extension at ({render_atom(x)},{render_atom(y)})")
                continue
            if fn.dom != b.hom_of(x, t(y)) or fn.cod != b.hom_of(t(x), t(y)):
                structural.append(f"extension boundary mismatch at ({render_atom(x)},{render_atom(y)})")
    for x in b.objects:
        try:
            if m.unit_of(x) not in b.hom_of(x, t(x)):
                structural.append(f"unit at {render_atom(x)} outside hom(x, Tx)")
        except KeyError:
            structural.append(f"missing unit at {render_atom(x)}")
    if structural:
        return ValidationReport(structural=_cap(structural, max_witnesses))

    violations = []
    for x in b.objects:
        for y in b.objects:
            for z in b.objects:
                for f in b.hom_of(x, t(y)):
                    for g in b.hom_of(y, t(z)):
                        tg = m.ext_of(y, z)(g)
                        lhs = m.ext_of(x, z)(b.compose(x, t(y), t(z), tg, f))
                        rhs = b.compose(t(x), t(y), t(z), tg, m.ext_of(x, y)(f))
                        if lhs != rhs:
                            violations.append(Violation(
                                "pentagon", (x, y, z, f, g),
                                f"T(Tg.f)={render_atom(lhs)} but Tg.Tf={render_atom(rhs)}"))
    for x in b.objects:
        k = m.unit_of(x)
        if m.ext_of(x, x)(k) != b.id_of(t(x)):
            violations.append(Violation("unit-triangle", (x,), "TK != id"))
        for y in b.objects:
            for f in b.hom_of(x, t(y)):
                if b.compose(x, t(x), t(y), m.ext_of(x, y)(f), k) != f:
                    violations.append(Violation("unit-square", (x, y, f), "Tf.K != f"))
    return ValidationReport(violations=_cap(violations, max_witnesses))


def ab_element(endo: Span, carrier: Span, x, y, f):
    """The element of AB(x, y) carried by f in B(x, Ty)."""
    t = star_map_of(endo)
    ty = t(y)
    a_elem = endo.entry_of(ty, y).elements[0]
    return normalize(list(explode(f)) + [ty] + list(explode(a_elem)), x, y)


def mw_to_warping(m: MwMonad) -> Warping:
    base = category_to_monad(m.base)
    endo = restrict_star(m.obj_map)
    carrier = base.carrier
    t = m.t_of
    aba = compose_word([endo, carrier, endo])
    ab = compose_word([endo, carrier])
    t_comp = {}
    for x in m.base.objects:
        for y in m.base.objects:
            mapping = {}
            for e, parts in composite_elements([endo, carrier, endo], x, y):
                _, z, f, _, _ = parts
                mapping[e] = ab_element(endo, carrier, x, y, m.ext_of(z, y)(f))
            t_comp[(x, y)] = finfunction(aba.entry_of(x, y), ab.entry_of(x, y), mapping)
    one = identity_span(m.base.objects)
    k_comp = {}
    for x in m.base.objects:
        for y in m.base.objects:
            mapping = {Unit(x): ab_element(endo, carrier, x, x, m.unit_of(x))} if x == y else {}
            k_comp[(x, y)] = finfunction(one.entry_of(x, y), ab.entry_of(x, y), mapping)
    return Warping(base, endo, cell(aba, ab, t_comp), cell(one, ab, k_comp))


def mw_view(w: Warping) -> MwMonad:
    """Read a warping over a function-induced endospan off as an mw-monad."""
    t_fn = star_map_of(w.endo)
    if t_fn is None:
        raise InvalidStructure("endospan is not induced by a function")
    base_cat = monad_to_category(w.base)
    carrier = w.base.carrier
    t = t_fn
    decode = {}
    for x in base_cat.objects:
        for y in base_cat.objects:
            for e, parts in composite_elements([w.endo, carrier], x, y):
                f, _, _ = parts
                decode[(x, y, e)] = f
    ext = {}
    for z in base_cat.objects:
        for y in base_cat.objects:
            dom = base_cat.hom_of(z, t(y))
            cod = base_cat.hom_of(t(z), t(y))
            mapping = {}
            for f in dom:
                elem = normalize(
                    list(explode(w.endo.entry_of(t(z), z).elements[0])) + [z]
                    + list(explode(f)) + [t(y)]
                    + list(explode(w.endo.entry_of(t(y), y).elements[0])),
                    t(z), y)
                out = w.t(t(z), y, elem)
                mapping[f] = decode[(t(z), y, out)]
            ext[(z, y)] = finfunction(dom, cod, mapping)
    units = {}
    for x in base_cat.objects:
        units[x] = decode[(x, x, w.k(x, x, Unit(x)))]
    return mw_monad(base_cat, t_fn, ext, units)
