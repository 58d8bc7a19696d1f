"""Finite sets, functions, categories, functors and natural transformations.

Everything is a plain immutable-by-convention value with decidable
equality.  Validators never raise on law violations; they return a
``ValidationReport`` listing every violated instance (optionally
truncated), keeping structural defects separate from law failures.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .atoms import Atom, Pair, atom_key, render_atom


class StructureError(ValueError):
    """Raised when a value cannot even be assembled coherently."""


@dataclass(frozen=True, eq=False)
class FinSet:
    """Finite set with a stored, deterministic iteration order.

    Equality and hashing ignore the order: two routes that build the same
    set of canonical atoms compare equal even if they generated them in a
    different sequence.
    """

    elements: tuple

    def __post_init__(self):
        if len(set(self.elements)) != len(self.elements):
            raise StructureError(f"duplicate elements in finite set: {self.elements!r}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinSet):
            return NotImplemented
        return frozenset(self.elements) == frozenset(other.elements)

    def __hash__(self) -> int:
        return hash(frozenset(self.elements))

    def __contains__(self, x) -> bool:
        return x in self.elements

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


def finset(*elements) -> FinSet:
    return FinSet(tuple(elements))


EMPTY = FinSet(())


@dataclass(frozen=True)
class FinFunction:
    dom: FinSet
    cod: FinSet
    mapping: "frozenset[tuple[Atom, Atom]]"

    def __post_init__(self):
        m = dict(self.mapping)
        if len(m) != len(self.mapping) or set(m) != set(self.dom.elements):
            raise StructureError("function not total on its domain")
        for v in m.values():
            if v not in self.cod:
                raise StructureError(f"image {render_atom(v)} outside codomain")

    def __call__(self, x: Atom) -> Atom:
        for k, v in self.mapping:
            if k == x:
                return v
        raise KeyError(render_atom(x))

    def as_dict(self) -> dict:
        return dict(self.mapping)


def finfunction(dom: FinSet, cod: FinSet, mapping: dict) -> FinFunction:
    return FinFunction(dom, cod, frozenset(mapping.items()))


def identity_function(s: FinSet) -> FinFunction:
    return finfunction(s, s, {x: x for x in s})


def compose_functions(g: FinFunction, f: FinFunction) -> FinFunction:
    if f.cod != g.dom:
        raise StructureError("functions not composable")
    return finfunction(f.dom, g.cod, {x: g(f(x)) for x in f.dom})


def enumerate_functions(a: FinSet, b: FinSet) -> Iterator[FinFunction]:
    """All |b|^|a| total functions a -> b, in a fixed order."""
    for images in itertools.product(b.elements, repeat=len(a)):
        yield finfunction(a, b, dict(zip(a.elements, images)))


@dataclass(frozen=True)
class Violation:
    law: str
    site: tuple
    detail: str

    def render(self) -> str:
        parts = ",".join(render_atom(s) if not isinstance(s, tuple) else repr(s) for s in self.site)
        return f"{self.law} at ({parts}): {self.detail}"


@dataclass(frozen=True)
class ValidationReport:
    structural: tuple = ()
    violations: tuple = ()
    notes: tuple = ()

    @property
    def valid(self) -> bool:
        return not self.structural and not self.violations

    def summary(self) -> str:
        if self.valid:
            return "valid"
        lines = [f"structural: {s}" for s in self.structural]
        lines += [v.render() for v in self.violations]
        return "\n".join(lines)


def _cap(items: list, max_witnesses: Optional[int]) -> tuple:
    if max_witnesses is None:
        return tuple(items)
    return tuple(items[:max_witnesses])


@dataclass(frozen=True)
class FinCategory:
    """Objects, hom-sets and composition/identity tables.

    ``hom`` is total over ordered object pairs (absent homs are empty
    sets, never missing keys).  ``comp[(x, y, z)]`` maps a pair ``(g, f)``
    with ``f`` in ``hom(x, y)`` and ``g`` in ``hom(y, z)`` to ``g . f`` in
    ``hom(x, z)``.  Tables are allowed to be malformed; ``validate_category``
    reports that separately from law violations.
    """

    objects: FinSet
    hom: dict
    comp: dict
    ident: dict

    def hom_of(self, x, y) -> FinSet:
        return self.hom.get((x, y), EMPTY)

    def compose(self, x, y, z, g, f) -> Atom:
        return self.comp[(x, y, z)][(g, f)]

    def id_of(self, x) -> Atom:
        return self.ident[x]

    def arrows(self) -> Iterator[tuple]:
        """Yields (x, y, f) for every arrow f in hom(x, y)."""
        for x in self.objects:
            for y in self.objects:
                for f in self.hom_of(x, y):
                    yield x, y, f


def validate_category(c: FinCategory, max_witnesses: Optional[int] = None) -> ValidationReport:
    structural = []
    for x in c.objects:
        for y in c.objects:
            if (x, y) not in c.hom:
                structural.append(f"missing hom-set at ({render_atom(x)},{render_atom(y)})")
    for x in c.objects:
        if x not in c.ident:
            structural.append(f"missing identity at {render_atom(x)}")
        elif c.ident[x] not in c.hom_of(x, x):
            structural.append(f"identity at {render_atom(x)} not in hom({render_atom(x)},{render_atom(x)})")
    for x in c.objects:
        for y in c.objects:
            for z in c.objects:
                table = c.comp.get((x, y, z))
                if table is None:
                    if len(c.hom_of(x, y)) and len(c.hom_of(y, z)):
                        structural.append(f"missing composition table at ({render_atom(x)},{render_atom(y)},{render_atom(z)})")
                    continue
                for f in c.hom_of(x, y):
                    for g in c.hom_of(y, z):
                        if (g, f) not in table:
                            structural.append(
                                f"composition table at ({render_atom(x)},{render_atom(y)},{render_atom(z)}) "
                                f"missing ({render_atom(g)},{render_atom(f)})")
                        elif table[(g, f)] not in c.hom_of(x, z):
                            structural.append(
                                f"composite {render_atom(table[(g, f)])} lands outside "
                                f"hom({render_atom(x)},{render_atom(z)})")
    if structural:
        return ValidationReport(structural=_cap(structural, max_witnesses))

    violations = []
    for x, y, f in c.arrows():
        if c.compose(x, x, y, f, c.id_of(x)) != f:
            violations.append(Violation("right-unit", (x, y, f), f"{render_atom(f)} . id != {render_atom(f)}"))
        if c.compose(x, y, y, c.id_of(y), f) != f:
            violations.append(Violation("left-unit", (x, y, f), f"id . {render_atom(f)} != {render_atom(f)}"))
    for x in c.objects:
        for y in c.objects:
            for z in c.objects:
                for w in c.objects:
                    for f in c.hom_of(x, y):
                        for g in c.hom_of(y, z):
                            for h in c.hom_of(z, w):
                                left = c.compose(x, y, w, c.compose(y, z, w, h, g), f)
                                right = c.compose(x, z, w, h, c.compose(x, y, z, g, f))
                                if left != right:
                                    violations.append(Violation(
                                        "associativity", (x, y, z, w, f, g, h),
                                        f"(h.g).f={render_atom(left)} but h.(g.f)={render_atom(right)}"))
    return ValidationReport(violations=_cap(violations, max_witnesses))


def discrete_category(objects: FinSet) -> FinCategory:
    hom = {}
    for x in objects:
        for y in objects:
            hom[(x, y)] = finset(f"1{render_atom(x)}") if x == y else EMPTY
    comp = {(x, y, z): {} for x in objects for y in objects for z in objects}
    for x in objects:
        comp[(x, x, x)] = {(f"1{render_atom(x)}", f"1{render_atom(x)}"): f"1{render_atom(x)}"}
    ident = {x: f"1{render_atom(x)}" for x in objects}
    return FinCategory(objects, hom, comp, ident)


def monoid_category(obj: str, elements: FinSet, table: dict, unit: Atom) -> FinCategory:
    """One-object category from a multiplication table (g, f) -> g.f."""
    return FinCategory(finset(obj), {(obj, obj): elements}, {(obj, obj, obj): dict(table)}, {obj: unit})


def product_category(c: FinCategory, d: FinCategory) -> FinCategory:
    objects = FinSet(tuple(Pair(x, y) for x in c.objects for y in d.objects))
    hom = {}
    comp = {}
    for a in objects:
        for b in objects:
            hom[(a, b)] = FinSet(tuple(
                Pair(f, g) for f in c.hom_of(a.fst, b.fst) for g in d.hom_of(a.snd, b.snd)))
    for a in objects:
        for b in objects:
            for e in objects:
                if not len(hom[(a, b)]) or not len(hom[(b, e)]):
                    comp[(a, b, e)] = {}
                    continue
                table = {}
                for fg in hom[(a, b)]:
                    for hk in hom[(b, e)]:
                        table[(hk, fg)] = Pair(
                            c.compose(a.fst, b.fst, e.fst, hk.fst, fg.fst),
                            d.compose(a.snd, b.snd, e.snd, hk.snd, fg.snd))
                comp[(a, b, e)] = table
    ident = {a: Pair(c.id_of(a.fst), d.id_of(a.snd)) for a in objects}
    return FinCategory(objects, hom, comp, ident)


@dataclass(frozen=True)
class FinFunctor:
    dom: FinCategory
    cod: FinCategory
    obj_map: FinFunction
    mor_map: "frozenset[tuple[tuple, FinFunction]]" = field(default_factory=frozenset)

    def on_obj(self, x) -> Atom:
        return self.obj_map(x)

    def on_mor(self, x, y, f) -> Atom:
        for k, fn in self.mor_map:
            if k == (x, y):
                return fn(f)
        raise KeyError((x, y))


def finfunctor(dom: FinCategory, cod: FinCategory, obj_map: FinFunction, mor_map: dict) -> FinFunctor:
    return FinFunctor(dom, cod, obj_map, frozenset(mor_map.items()))


def identity_functor(c: FinCategory) -> FinFunctor:
    mor = {(x, y): identity_function(c.hom_of(x, y)) for x in c.objects for y in c.objects}
    return finfunctor(c, c, identity_function(c.objects), mor)


def validate_functor(fun: FinFunctor, max_witnesses: Optional[int] = None) -> ValidationReport:
    structural = []
    if fun.obj_map.dom != fun.dom.objects or fun.obj_map.cod != fun.cod.objects:
        structural.append("object map does not match the categories")
        return ValidationReport(structural=tuple(structural))
    mm = dict(fun.mor_map)
    for x in fun.dom.objects:
        for y in fun.dom.objects:
            fn = mm.get((x, y))
            if fn is None:
                if len(fun.dom.hom_of(x, y)):
                    structural.append(f"missing arrow map at ({render_atom(x)},{render_atom(y)})")
                continue
            if fn.dom != fun.dom.hom_of(x, y) or fn.cod != fun.cod.hom_of(fun.on_obj(x), fun.on_obj(y)):
                structural.append(f"arrow map at ({render_atom(x)},{render_atom(y)}) has wrong boundary")
    if structural:
        return ValidationReport(structural=_cap(structural, max_witnesses))

    violations = []
    for x in fun.dom.objects:
        if fun.on_mor(x, x, fun.dom.id_of(x)) != fun.cod.id_of(fun.on_obj(x)):
            violations.append(Violation("preserve-identity", (x,), "F(id) != id"))
    for x in fun.dom.objects:
        for y in fun.dom.objects:
            for z in fun.dom.objects:
                for f in fun.dom.hom_of(x, y):
                    for g in fun.dom.hom_of(y, z):
                        lhs = fun.on_mor(x, z, fun.dom.compose(x, y, z, g, f))
                        rhs = fun.cod.compose(
                            fun.on_obj(x), fun.on_obj(y), fun.on_obj(z),
                            fun.on_mor(y, z, g), fun.on_mor(x, y, f))
                        if lhs != rhs:
                            violations.append(Violation(
                                "preserve-composition", (x, y, z, f, g),
                                f"F(g.f)={render_atom(lhs)} but F(g).F(f)={render_atom(rhs)}"))
    return ValidationReport(violations=_cap(violations, max_witnesses))


@dataclass(frozen=True)
class FinNatTrans:
    dom: FinFunctor
    cod: FinFunctor
    components: "frozenset[tuple[Atom, Atom]]"

    def at(self, x) -> Atom:
        for k, v in self.components:
            if k == x:
                return v
        raise KeyError(render_atom(x))


def finnattrans(dom: FinFunctor, cod: FinFunctor, components: dict) -> FinNatTrans:
    return FinNatTrans(dom, cod, frozenset(components.items()))


def enumerate_functors(c: FinCategory, d: FinCategory) -> Iterator[FinFunctor]:
    """All functors c -> d, by brute enumeration of candidate maps."""
    pairs = [(x, y) for x in c.objects for y in c.objects]
    for om in enumerate_functions(c.objects, d.objects):
        choices = [list(enumerate_functions(c.hom_of(x, y), d.hom_of(om(x), om(y))))
                   for (x, y) in pairs]
        if any(not ch for ch in choices):
            continue
        for mms in itertools.product(*choices):
            cand = finfunctor(c, d, om, dict(zip(pairs, mms)))
            if validate_functor(cand).valid:
                yield cand


def validate_nat_trans(n: FinNatTrans, max_witnesses: Optional[int] = None) -> ValidationReport:
    f, g = n.dom, n.cod
    structural = []
    if f.dom is not g.dom and f.dom != g.dom:
        structural.append("functors are not parallel (different domains)")
    if f.cod is not g.cod and f.cod != g.cod:
        structural.append("functors are not parallel (different codomains)")
    if structural:
        return ValidationReport(structural=tuple(structural))
    comps = dict(n.components)
    for x in f.dom.objects:
        if x not in comps:
            structural.append(f"missing component at {render_atom(x)}")
        elif comps[x] not in f.cod.hom_of(f.on_obj(x), g.on_obj(x)):
            structural.append(f"component at {render_atom(x)} outside hom(F{render_atom(x)},G{render_atom(x)})")
    if structural:
        return ValidationReport(structural=_cap(structural, max_witnesses))

    violations = []
    cat = f.cod
    for x, y, arr in f.dom.arrows():
        lhs = cat.compose(f.on_obj(x), f.on_obj(y), g.on_obj(y), n.at(y), f.on_mor(x, y, arr))
        rhs = cat.compose(f.on_obj(x), g.on_obj(x), g.on_obj(y), g.on_mor(x, y, arr), n.at(x))
        if lhs != rhs:
            violations.append(Violation(
                "naturality", (x, y, arr),
                f"G(f).comp_x={render_atom(rhs)} but comp_y.F(f)={render_atom(lhs)}"))
    return ValidationReport(violations=_cap(violations, max_witnesses))


def sorted_atoms(xs) -> list:
    return sorted(xs, key=atom_key)
