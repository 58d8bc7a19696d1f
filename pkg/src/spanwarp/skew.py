"""Finite skew bicategories, skew warpings and their Kleisli construction.

A skew bicategory here is the concrete matrix-of-categories datum: a set
of objects, a hom-category per ordered pair, composition functors, unit
objects, and structural morphisms alpha, lambda, rho

    (h . g) . f --> h . (g . f)      1 . f --> f      f --> f . 1

that need not be invertible, natural in all arguments and subject to five
coherence axioms.  A skew warping on it consists of an object map ``T``,
extension functors ``hom(x, Ty) -> hom(Tx, Ty)``, unit objects ``K_x``
and structural morphisms

    nu:    T(Tg . f) --> Tg . Tf
    nu0:   T(K_x)    --> 1_{Tx}
    kappa: f         --> Tf . K_x

subject to five coherence axioms.  All axioms are decided componentwise:
both sides of each diagram are expressions (``MorExpr``) built from
generator cells, functor images, composition-functor images, identities
and sequential composites, evaluated over every assignment of the finite
quantifiers and compared morphism by morphism.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Optional, Union

from .atoms import Pair, render_atom
from .fincore import (FinCategory, FinFunction, FinFunctor, FinNatTrans, FinSet,
                      StructureError, ValidationReport, Violation, _cap,
                      enumerate_functions, enumerate_functors, finfunction, finfunctor,
                      finnattrans, identity_function, identity_functor, product_category,
                      validate_category, validate_functor, validate_nat_trans)


class SkewExprError(StructureError):
    """An axiom expression failed to type-check: a derivation bug."""


@dataclass(frozen=True)
class HomMor:
    """A morphism of a hom-category with its boundary objects."""

    dom: object
    cod: object
    arr: object


@dataclass
class SkewBicategory:
    objects: FinSet
    hom: dict            # (x, y) -> FinCategory
    comp: dict           # (x, y, z) -> FinFunctor from hom(y,z) x hom(x,y)
    unit_obj: dict       # x -> object of hom(x, x)
    assoc: dict          # (x, y, z, w) -> {(h, g, f): arrow}
    lunit: dict          # (x, y) -> {f: arrow}
    runit: dict          # (x, y) -> {f: arrow}

    def hom_cat(self, x, y) -> FinCategory:
        return self.hom[(x, y)]

    def tens(self, x, y, z, g, f):
        return self.comp[(x, y, z)].on_obj(Pair(g, f))

    def tens_mor(self, x, y, z, g: HomMor, f: HomMor) -> HomMor:
        fun = self.comp[(x, y, z)]
        arr = fun.on_mor(Pair(g.dom, f.dom), Pair(g.cod, f.cod), Pair(g.arr, f.arr))
        return HomMor(self.tens(x, y, z, g.dom, f.dom), self.tens(x, y, z, g.cod, f.cod), arr)

    def mor_id(self, x, y, f) -> HomMor:
        return HomMor(f, f, self.hom_cat(x, y).id_of(f))

    def mor_comp(self, x, y, b: HomMor, a: HomMor) -> HomMor:
        if a.cod != b.dom:
            raise SkewExprError("hom-category morphisms do not meet")
        cat = self.hom_cat(x, y)
        return HomMor(a.dom, b.cod, cat.compose(a.dom, a.cod, b.cod, b.arr, a.arr))

    def alpha(self, x, y, z, w, h, g, f) -> HomMor:
        arr = self.assoc[(x, y, z, w)][(h, g, f)]
        dom = self.tens(x, z, w, h, self.tens(x, y, z, g, f))
        return HomMor(self.tens(x, y, w, self.tens(y, z, w, h, g), f), dom, arr)

    def lam(self, x, y, f) -> HomMor:
        return HomMor(self.tens(x, y, y, self.unit_obj[y], f), f, self.lunit[(x, y)][f])

    def rho(self, x, y, f) -> HomMor:
        return HomMor(f, self.tens(x, x, y, f, self.unit_obj[x]), self.runit[(x, y)][f])


def is_posetal(s: SkewBicategory) -> bool:
    """True when every hom-set of every hom-category has at most one arrow."""
    for cat in s.hom.values():
        for x in cat.objects:
            for y in cat.objects:
                if len(cat.hom_of(x, y)) > 1:
                    return False
    return True


# --- morphism expressions --------------------------------------------------

@dataclass(frozen=True)
class OVar:
    name: str


@dataclass(frozen=True)
class OTens:
    left: "ObjExpr"
    right: "ObjExpr"


@dataclass(frozen=True)
class OUnit:
    ix: str


@dataclass(frozen=True)
class OKUnit:
    ix: str


@dataclass(frozen=True)
class OExt:
    iy: str
    body: "ObjExpr"


@dataclass(frozen=True)
class OEApp:
    body: "ObjExpr"


ObjExpr = Union[OVar, OTens, OUnit, OKUnit, OExt, OEApp]


@dataclass(frozen=True)
class MId:
    body: ObjExpr


@dataclass(frozen=True)
class MComp:
    after: "MorExpr"
    first: "MorExpr"


@dataclass(frozen=True)
class MTens:
    left: "MorExpr"
    right: "MorExpr"


@dataclass(frozen=True)
class MAlpha:
    h: ObjExpr
    g: ObjExpr
    f: ObjExpr


@dataclass(frozen=True)
class MLambda:
    body: ObjExpr


@dataclass(frozen=True)
class MRho:
    body: ObjExpr


@dataclass(frozen=True)
class MNu:
    ix: str
    iy: str
    iz: str
    g: ObjExpr
    f: ObjExpr


@dataclass(frozen=True)
class MNu0:
    ix: str


@dataclass(frozen=True)
class MKappa:
    iy: str
    body: ObjExpr


@dataclass(frozen=True)
class MExtM:
    iy: str
    body: "MorExpr"


@dataclass(frozen=True)
class MEApp:
    body: "MorExpr"


@dataclass(frozen=True)
class MCellNu:
    iy: str
    g: ObjExpr
    f: ObjExpr


@dataclass(frozen=True)
class MCellKappa:
    g: ObjExpr


MorExpr = Union[MId, MComp, MTens, MAlpha, MLambda, MRho, MNu, MNu0, MKappa,
                MExtM, MEApp, MCellNu, MCellKappa]

SkewPastingExpr = Union[ObjExpr, MorExpr]


def _o(e):
    return OVar(e) if isinstance(e, str) else e


def otens(l, r) -> OTens:
    return OTens(_o(l), _o(r))


def oext(iy, b) -> OExt:
    return OExt(iy, _o(b))


def mid(b) -> MId:
    return MId(_o(b))


def mcomp(*ms) -> MorExpr:
    out = ms[-1]
    for m in reversed(ms[:-1]):
        out = MComp(m, out)
    return out


def mtens(l, r) -> MTens:
    return MTens(l, r)


def malpha(h, g, f) -> MAlpha:
    return MAlpha(_o(h), _o(g), _o(f))


def mnu(ix, iy, iz, g, f) -> MNu:
    return MNu(ix, iy, iz, _o(g), _o(f))


def mkappa(iy, b) -> MKappa:
    return MKappa(iy, _o(b))


def mcellnu(iy, g, f) -> MCellNu:
    return MCellNu(iy, _o(g), _o(f))


@dataclass
class SkewContext:
    """Evaluation context: structures plus an assignment of variables."""

    base: SkewBicategory
    warping: Optional["SkewWarping"] = None
    algebra: Optional["SkewAlgebra"] = None
    assign: dict = field(default_factory=dict)

    def t_of(self, x):
        return self.warping.obj_map(x)


def eval_obj(e: ObjExpr, ctx: SkewContext) -> tuple:
    """Returns ((x, y), object of hom(x, y))."""
    s = ctx.base
    if isinstance(e, OVar):
        return ctx.assign[e.name]
    if isinstance(e, OTens):
        (y, z), g = eval_obj(e.left, ctx)
        (x, y2), f = eval_obj(e.right, ctx)
        if y2 != y:
            raise SkewExprError("composition boundaries do not meet")
        return (x, z), s.tens(x, y, z, g, f)
    if isinstance(e, OUnit):
        x = ctx.assign[e.ix]
        return (x, x), s.unit_obj[x]
    if isinstance(e, OKUnit):
        x = ctx.assign[e.ix]
        return (x, ctx.t_of(x)), ctx.warping.units[x]
    if isinstance(e, OExt):
        (x, q), f = eval_obj(e.body, ctx)
        y = ctx.assign[e.iy]
        if q != ctx.t_of(y):
            raise SkewExprError("extension applied off its hom-category")
        return (ctx.t_of(x), q), ctx.warping.ext[(x, y)].on_obj(f)
    if isinstance(e, OEApp):
        (z, q), f = eval_obj(e.body, ctx)
        alg = ctx.algebra
        if q != ctx.t_of(alg.at):
            raise SkewExprError("family applied off its hom-category")
        return (ctx.t_of(z), q), alg.e_funcs[z].on_obj(f)
    raise SkewExprError(f"not an object expression: {e!r}")


def eval_mor(e: MorExpr, ctx: SkewContext) -> tuple:
    """Returns ((x, y), HomMor in hom(x, y)); checks every boundary."""
    s = ctx.base
    if isinstance(e, MId):
        (x, y), f = eval_obj(e.body, ctx)
        return (x, y), s.mor_id(x, y, f)
    if isinstance(e, MComp):
        key1, m1 = eval_mor(e.first, ctx)
        key2, m2 = eval_mor(e.after, ctx)
        if key1 != key2:
            raise SkewExprError("sequential composite across hom-categories")
        return key1, s.mor_comp(*key1, m2, m1)
    if isinstance(e, MTens):
        (y, z), g = eval_mor(e.left, ctx)
        (x, y2), f = eval_mor(e.right, ctx)
        if y2 != y:
            raise SkewExprError("composition-functor image boundaries do not meet")
        return (x, z), s.tens_mor(x, y, z, g, f)
    if isinstance(e, MAlpha):
        (z, w), h = eval_obj(e.h, ctx)
        (y, z2), g = eval_obj(e.g, ctx)
        (x, y2), f = eval_obj(e.f, ctx)
        if z2 != z or y2 != y:
            raise SkewExprError("associator operands do not meet")
        return (x, w), s.alpha(x, y, z, w, h, g, f)
    if isinstance(e, MLambda):
        (x, y), f = eval_obj(e.body, ctx)
        return (x, y), s.lam(x, y, f)
    if isinstance(e, MRho):
        (x, y), f = eval_obj(e.body, ctx)
        return (x, y), s.rho(x, y, f)
    if isinstance(e, MNu):
        w = ctx.warping
        x, y, z = (ctx.assign[e.ix], ctx.assign[e.iy], ctx.assign[e.iz])
        (ky, kz), g = eval_obj(e.g, ctx)
        (kx, kty), f = eval_obj(e.f, ctx)
        if (ky, kz) != (y, ctx.t_of(z)) or (kx, kty) != (x, ctx.t_of(y)):
            raise SkewExprError("nu operands do not match its indices")
        tg = w.ext[(y, z)].on_obj(g)
        dom = w.ext[(x, z)].on_obj(s.tens(x, ctx.t_of(y), ctx.t_of(z), tg, f))
        cod = s.tens(ctx.t_of(x), ctx.t_of(y), ctx.t_of(z), tg, w.ext[(x, y)].on_obj(f))
        return (ctx.t_of(x), ctx.t_of(z)), HomMor(dom, cod, w.nu[(x, y, z)][(g, f)])
    if isinstance(e, MNu0):
        w = ctx.warping
        x = ctx.assign[e.ix]
        tx = ctx.t_of(x)
        dom = w.ext[(x, x)].on_obj(w.units[x])
        return (tx, tx), HomMor(dom, s.unit_obj[tx], w.nu0[x])
    if isinstance(e, MKappa):
        w = ctx.warping
        (x, q), f = eval_obj(e.body, ctx)
        y = ctx.assign[e.iy]
        if q != ctx.t_of(y):
            raise SkewExprError("kappa operand off its hom-category")
        cod = s.tens(x, ctx.t_of(x), q, w.ext[(x, y)].on_obj(f), w.units[x])
        return (x, q), HomMor(f, cod, w.kappa[(x, y)][f])
    if isinstance(e, MExtM):
        w = ctx.warping
        (x, q), m = eval_mor(e.body, ctx)
        y = ctx.assign[e.iy]
        if q != ctx.t_of(y):
            raise SkewExprError("extension image off its hom-category")
        fun = w.ext[(x, y)]
        return ((ctx.t_of(x), q),
                HomMor(fun.on_obj(m.dom), fun.on_obj(m.cod), fun.on_mor(m.dom, m.cod, m.arr)))
    if isinstance(e, MEApp):
        alg = ctx.algebra
        (z, q), m = eval_mor(e.body, ctx)
        if q != ctx.t_of(alg.at):
            raise SkewExprError("family image off its hom-category")
        fun = alg.e_funcs[z]
        return ((ctx.t_of(z), q),
                HomMor(fun.on_obj(m.dom), fun.on_obj(m.cod), fun.on_mor(m.dom, m.cod, m.arr)))
    if isinstance(e, MCellNu):
        alg, w = ctx.algebra, ctx.warping
        (ky, ta), g = eval_obj(e.g, ctx)
        (x, kty), f = eval_obj(e.f, ctx)
        y = ctx.assign[e.iy]
        if ky != y or kty != ctx.t_of(y) or ta != ctx.t_of(alg.at):
            raise SkewExprError("algebra nu operands do not match")
        eg = alg.e_funcs[y].on_obj(g)
        dom = alg.e_funcs[x].on_obj(ctx.base.tens(x, ctx.t_of(y), ta, eg, f))
        cod = ctx.base.tens(ctx.t_of(x), ctx.t_of(y), ta, eg, w.ext[(x, y)].on_obj(f))
        return (ctx.t_of(x), ta), HomMor(dom, cod, alg.cell_nu[(x, y)][(g, f)])
    if isinstance(e, MCellKappa):
        alg, w = ctx.algebra, ctx.warping
        (y, ta), g = eval_obj(e.g, ctx)
        if ta != ctx.t_of(alg.at):
            raise SkewExprError("algebra kappa operand off its hom-category")
        cod = ctx.base.tens(y, ctx.t_of(y), ta, alg.e_funcs[y].on_obj(g), w.units[y])
        return (y, ta), HomMor(g, cod, alg.cell_kappa[y][g])
    raise SkewExprError(f"not a morphism expression: {e!r}")


@dataclass(frozen=True)
class Axiom:
    name: str
    indices: tuple
    objvars: tuple  # (name, src_ix, dst_spec); dst_spec: ("i", ix) | ("Ti", ix) | ("Ta",)
    lhs: MorExpr
    rhs: MorExpr


def _axiom_assignments(ax: Axiom, ctx: SkewContext) -> Iterator[dict]:
    s = ctx.base
    for combo in itertools.product(s.objects.elements, repeat=len(ax.indices)):
        assign = dict(zip(ax.indices, combo))
        ranges = []
        for name, src_ix, dst in ax.objvars:
            x = assign[src_ix]
            if dst[0] == "i":
                y = assign[dst[1]]
            elif dst[0] == "Ti":
                y = ctx.t_of(assign[dst[1]])
            else:
                y = ctx.t_of(ctx.algebra.at)
            ranges.append([((x, y), f) for f in s.hom_cat(x, y).objects])
        for vals in itertools.product(*ranges):
            full = dict(assign)
            full.update({name: v for (name, _, _), v in zip(ax.objvars, vals)})
            yield full


def _check_axioms(axioms, ctx: SkewContext, max_witnesses) -> ValidationReport:
    violations = []
    for ax in axioms:
        for assign in _axiom_assignments(ax, ctx):
            local = SkewContext(ctx.base, ctx.warping, ctx.algebra, assign)
            key_l, lhs = eval_mor(ax.lhs, local)
            key_r, rhs = eval_mor(ax.rhs, local)
            if key_l != key_r or lhs.dom != rhs.dom or lhs.cod != rhs.cod:
                raise SkewExprError(f"axiom {ax.name} sides have different boundaries")
            if lhs.arr != rhs.arr:
                site = tuple(v[1] if isinstance(v, tuple) and len(v) == 2 and isinstance(v[0], tuple)
                             else v
                             for _, v in sorted(assign.items(), key=lambda kv: kv[0]))
                violations.append(Violation(
                    ax.name, site,
                    f"{render_atom(lhs.arr)} != {render_atom(rhs.arr)}"))
    return ValidationReport(violations=_cap(violations, max_witnesses))


BICAT_AXIOMS = (
    Axiom("assoc-pentagon", ("x", "y", "z", "w", "v"),
          (("f", "x", ("i", "y")), ("g", "y", ("i", "z")),
           ("h", "z", ("i", "w")), ("k", "w", ("i", "v"))),
          mcomp(malpha("k", "h", otens("g", "f")), malpha(otens("k", "h"), "g", "f")),
          mcomp(mtens(mid("k"), malpha("h", "g", "f")),
                malpha("k", otens("h", "g"), "f"),
                mtens(malpha("k", "h", "g"), mid("f")))),
    Axiom("unit-middle", ("x", "y", "z"),
          (("f", "x", ("i", "y")), ("h", "y", ("i", "z"))),
          mcomp(mtens(mid("h"), MLambda(OVar("f"))),
                malpha("h", OUnit("y"), "f"),
                mtens(MRho(OVar("h")), mid("f"))),
          mid(otens("h", "f"))),
    Axiom("unit-left", ("x", "y", "z"),
          (("f", "x", ("i", "y")), ("g", "y", ("i", "z"))),
          mcomp(MLambda(otens("g", "f")), malpha(OUnit("z"), "g", "f")),
          mtens(MLambda(OVar("g")), mid("f"))),
    Axiom("unit-right", ("x", "y", "z"),
          (("g", "x", ("i", "y")), ("h", "y", ("i", "z"))),
          mtens(mid("h"), MRho(OVar("g"))),
          mcomp(malpha("h", "g", OUnit("x")), MRho(otens("h", "g")))),
    Axiom("unit-unit", ("x",), (),
          mcomp(MLambda(OUnit("x")), MRho(OUnit("x"))),
          mid(OUnit("x"))),
)


def _bicat_structure(s: SkewBicategory, structural: list):
    for x in s.objects:
        for y in s.objects:
            if (x, y) not in s.hom:
                structural.append(f"missing hom-category at ({render_atom(x)},{render_atom(y)})")
                continue
            rep = validate_category(s.hom_cat(x, y))
            if not rep.valid:
                structural.append(f"hom-category at ({render_atom(x)},{render_atom(y)}): {rep.summary()}")
    if structural:
        return
    for x in s.objects:
        if x not in s.unit_obj or s.unit_obj[x] not in s.hom_cat(x, x).objects:
            structural.append(f"missing or stray unit object at {render_atom(x)}")
    for x in s.objects:
        for y in s.objects:
            for z in s.objects:
                fun = s.comp.get((x, y, z))
                if fun is None:
                    structural.append(f"missing composition functor at ({render_atom(x)},{render_atom(y)},{render_atom(z)})")
                    continue
                want = product_category(s.hom_cat(y, z), s.hom_cat(x, y))
                if fun.dom != want or fun.cod != s.hom_cat(x, z):
                    structural.append(f"composition functor boundary at ({render_atom(x)},{render_atom(y)},{render_atom(z)})")
                    continue
                rep = validate_functor(fun)
                if not rep.valid:
                    structural.append(f"composition functor at ({render_atom(x)},{render_atom(y)},{render_atom(z)}): {rep.summary()}")
    if structural:
        return
    for x in s.objects:
        for y in s.objects:
            for f in s.hom_cat(x, y).objects:
                lu = s.lunit.get((x, y), {}).get(f)
                dom = s.tens(x, y, y, s.unit_obj[y], f)
                if lu is None or lu not in s.hom_cat(x, y).hom_of(dom, f):
                    structural.append(f"left unitor at ({render_atom(x)},{render_atom(y)}) object {render_atom(f)}")
                ru = s.runit.get((x, y), {}).get(f)
                cod = s.tens(x, x, y, f, s.unit_obj[x])
                if ru is None or ru not in s.hom_cat(x, y).hom_of(f, cod):
                    structural.append(f"right unitor at ({render_atom(x)},{render_atom(y)}) object {render_atom(f)}")
    for x in s.objects:
        for y in s.objects:
            for z in s.objects:
                for w in s.objects:
                    table = s.assoc.get((x, y, z, w), {})
                    for f in s.hom_cat(x, y).objects:
                        for g in s.hom_cat(y, z).objects:
                            for h in s.hom_cat(z, w).objects:
                                arr = table.get((h, g, f))
                                dom = s.tens(x, y, w, s.tens(y, z, w, h, g), f)
                                cod = s.tens(x, z, w, h, s.tens(x, y, z, g, f))
                                if arr is None or arr not in s.hom_cat(x, w).hom_of(dom, cod):
                                    structural.append(
                                        f"associator at ({render_atom(x)},{render_atom(y)},{render_atom(z)},{render_atom(w)}) "
                                        f"objects ({render_atom(h)},{render_atom(g)},{render_atom(f)})")


def alpha_nat_trans(s: SkewBicategory, x, y, z, w) -> FinNatTrans:
    """The associator at (x,y,z,w) as a transformation between induced functors."""
    triple = product_category(s.hom_cat(z, w), product_category(s.hom_cat(y, z), s.hom_cat(x, y)))
    target = s.hom_cat(x, w)

    def left_obj(o):
        return s.tens(x, y, w, s.tens(y, z, w, o.fst, o.snd.fst), o.snd.snd)

    def right_obj(o):
        return s.tens(x, z, w, o.fst, s.tens(x, y, z, o.snd.fst, o.snd.snd))

    def left_mor(a, b, m):
        inner = s.tens_mor(y, z, w, HomMor(a.fst, b.fst, m.fst),
                           HomMor(a.snd.fst, b.snd.fst, m.snd.fst))
        return s.tens_mor(x, y, w, inner, HomMor(a.snd.snd, b.snd.snd, m.snd.snd)).arr

    def right_mor(a, b, m):
        inner = s.tens_mor(x, y, z, HomMor(a.snd.fst, b.snd.fst, m.snd.fst),
                           HomMor(a.snd.snd, b.snd.snd, m.snd.snd))
        return s.tens_mor(x, z, w, HomMor(a.fst, b.fst, m.fst), inner).arr

    def induced(obj_fn, mor_fn):
        om = finfunction(triple.objects, target.objects, {o: obj_fn(o) for o in triple.objects})
        mm = {}
        for a in triple.objects:
            for b in triple.objects:
                mm[(a, b)] = finfunction(
                    triple.hom_of(a, b), target.hom_of(obj_fn(a), obj_fn(b)),
                    {m: mor_fn(a, b, m) for m in triple.hom_of(a, b)})
        return finfunctor(triple, target, om, mm)

    comps = {Pair(h, Pair(g, f)): s.assoc[(x, y, z, w)][(h, g, f)]
             for h in s.hom_cat(z, w).objects
             for g in s.hom_cat(y, z).objects
             for f in s.hom_cat(x, y).objects}
    return finnattrans(induced(left_obj, left_mor), induced(right_obj, right_mor), comps)


def _endo_nat_trans(s, x, y, obj_fn, mor_fn, comps) -> FinNatTrans:
    cat = s.hom_cat(x, y)
    om = finfunction(cat.objects, cat.objects, {o: obj_fn(o) for o in cat.objects})
    mm = {}
    for a in cat.objects:
        for b in cat.objects:
            mm[(a, b)] = finfunction(cat.hom_of(a, b), cat.hom_of(obj_fn(a), obj_fn(b)),
                                     {m: mor_fn(a, b, m) for m in cat.hom_of(a, b)})
    fun = finfunctor(cat, cat, om, mm)
    return fun, comps


def lunit_nat_trans(s: SkewBicategory, x, y) -> FinNatTrans:
    fun, comps = _endo_nat_trans(
        s, x, y,
        lambda o: s.tens(x, y, y, s.unit_obj[y], o),
        lambda a, b, m: s.tens_mor(x, y, y, s.mor_id(y, y, s.unit_obj[y]), HomMor(a, b, m)).arr,
        {o: s.lunit[(x, y)][o] for o in s.hom_cat(x, y).objects})
    return finnattrans(fun, identity_functor(s.hom_cat(x, y)), comps)


def runit_nat_trans(s: SkewBicategory, x, y) -> FinNatTrans:
    fun, comps = _endo_nat_trans(
        s, x, y,
        lambda o: s.tens(x, x, y, o, s.unit_obj[x]),
        lambda a, b, m: s.tens_mor(x, x, y, HomMor(a, b, m), s.mor_id(x, x, s.unit_obj[x])).arr,
        {o: s.runit[(x, y)][o] for o in s.hom_cat(x, y).objects})
    return finnattrans(identity_functor(s.hom_cat(x, y)), fun, comps)


def validate_skew_bicategory(s: SkewBicategory,
                             max_witnesses: Optional[int] = None) -> ValidationReport:
    structural = []
    _bicat_structure(s, structural)
    if structural:
        return ValidationReport(structural=_cap(structural, max_witnesses))
    violations = []
    for x in s.objects:
        for y in s.objects:
            for rep, tag in ((validate_nat_trans(lunit_nat_trans(s, x, y)), "left-unitor"),
                             (validate_nat_trans(runit_nat_trans(s, x, y)), "right-unitor")):
                for v in rep.violations:
                    violations.append(Violation(f"{tag}-naturality", (x, y) + v.site, v.detail))
    for x in s.objects:
        for y in s.objects:
            for z in s.objects:
                for w in s.objects:
                    rep = validate_nat_trans(alpha_nat_trans(s, x, y, z, w))
                    for v in rep.violations:
                        violations.append(Violation("associator-naturality", (x, y, z, w) + v.site, v.detail))
    if violations:
        return ValidationReport(violations=_cap(violations, max_witnesses))
    ctx = SkewContext(s)
    return _check_axioms(BICAT_AXIOMS, ctx, max_witnesses)


# --- one-object view ---------------------------------------------------------

DOT = "@"


@dataclass
class SkewMonoidalData:
    """A skew monoidal category: the one-object case unpacked."""

    cat: FinCategory
    tensor: FinFunctor
    unit: object
    assoc: dict
    lunit: dict
    runit: dict


def one_object_view(d: SkewMonoidalData) -> SkewBicategory:
    return SkewBicategory(
        FinSet((DOT,)), {(DOT, DOT): d.cat}, {(DOT, DOT, DOT): d.tensor},
        {DOT: d.unit}, {(DOT, DOT, DOT, DOT): d.assoc},
        {(DOT, DOT): d.lunit}, {(DOT, DOT): d.runit})


def skew_monoidal_of(s: SkewBicategory) -> SkewMonoidalData:
    if len(s.objects) != 1:
        raise StructureError("not a one-object skew bicategory")
    x = s.objects.elements[0]
    return SkewMonoidalData(s.hom_cat(x, x), s.comp[(x, x, x)], s.unit_obj[x],
                            s.assoc[(x, x, x, x)], s.lunit[(x, x)], s.runit[(x, x)])


# --- skew warpings -----------------------------------------------------------

@dataclass
class SkewWarping:
    base: SkewBicategory
    obj_map: FinFunction
    ext: dict      # (x, y) -> FinFunctor hom(x, Ty) -> hom(Tx, Ty)
    units: dict    # x -> object of hom(x, Tx)
    nu: dict       # (x, y, z) -> {(g, f): arrow}   T(Tg.f) -> Tg.Tf
    nu0: dict      # x -> arrow                     T(K_x) -> 1_{Tx}
    kappa: dict    # (x, y) -> {f: arrow}           f -> Tf.K_x


WARP_AXIOMS = (
    Axiom("warp-assoc", ("u", "v", "w", "y"),
          (("f", "u", ("Ti", "v")), ("g", "v", ("Ti", "w")), ("h", "w", ("Ti", "y"))),
          mcomp(malpha(oext("y", "h"), oext("w", "g"), oext("v", "f")),
                mtens(mnu("v", "w", "y", "h", "g"), mid(oext("v", "f"))),
                mnu("u", "v", "y", otens(oext("y", "h"), "g"), "f")),
          mcomp(mtens(mid(oext("y", "h")), mnu("u", "v", "w", "g", "f")),
                mnu("u", "w", "y", "h", otens(oext("w", "g"), "f")),
                MExtM("y", malpha(oext("y", "h"), oext("w", "g"), "f")),
                MExtM("y", mtens(mnu("v", "w", "y", "h", "g"), mid("f"))))),
    Axiom("warp-right-unit", ("u", "y"),
          (("f", "u", ("Ti", "y")),),
          mcomp(mtens(mid(oext("y", "f")), MNu0("u")),
                mnu("u", "u", "y", "f", OKUnit("u")),
                MExtM("y", mkappa("y", "f"))),
          MRho(oext("y", "f"))),
    Axiom("warp-left-unit", ("u", "y"),
          (("f", "u", ("Ti", "y")),),
          mcomp(MExtM("y", MLambda(OVar("f"))),
                MExtM("y", mtens(MNu0("y"), mid("f")))),
          mcomp(MLambda(oext("y", "f")),
                mtens(MNu0("y"), mid(oext("y", "f"))),
                mnu("u", "y", "y", OKUnit("y"), "f"))),
    Axiom("warp-mult-unit", ("x", "v", "y"),
          (("f", "x", ("Ti", "v")), ("g", "v", ("Ti", "y"))),
          mcomp(malpha(oext("y", "g"), oext("v", "f"), OKUnit("x")),
                mtens(mnu("x", "v", "y", "g", "f"), mid(OKUnit("x"))),
                mkappa("y", otens(oext("y", "g"), "f"))),
          mtens(mid(oext("y", "g")), mkappa("v", "f"))),
    Axiom("warp-unit-unit", ("x",), (),
          mcomp(MLambda(OKUnit("x")),
                mtens(MNu0("x"), mid(OKUnit("x"))),
                mkappa("x", OKUnit("x"))),
          mid(OKUnit("x"))),
)


def nu_nat_trans(w: SkewWarping, x, y, z) -> FinNatTrans:
    s = w.base
    t = w.obj_map
    dom = product_category(s.hom_cat(y, t(z)), s.hom_cat(x, t(y)))
    target = s.hom_cat(t(x), t(z))

    def left_obj(o):
        return w.ext[(x, z)].on_obj(s.tens(x, t(y), t(z), w.ext[(y, z)].on_obj(o.fst), o.snd))

    def right_obj(o):
        return s.tens(t(x), t(y), t(z), w.ext[(y, z)].on_obj(o.fst), w.ext[(x, y)].on_obj(o.snd))

    def left_mor(a, b, m):
        tg = HomMor(w.ext[(y, z)].on_obj(a.fst), w.ext[(y, z)].on_obj(b.fst),
                    w.ext[(y, z)].on_mor(a.fst, b.fst, m.fst))
        inner = s.tens_mor(x, t(y), t(z), tg, HomMor(a.snd, b.snd, m.snd))
        return w.ext[(x, z)].on_mor(inner.dom, inner.cod, inner.arr)

    def right_mor(a, b, m):
        tg = HomMor(w.ext[(y, z)].on_obj(a.fst), w.ext[(y, z)].on_obj(b.fst),
                    w.ext[(y, z)].on_mor(a.fst, b.fst, m.fst))
        tf = HomMor(w.ext[(x, y)].on_obj(a.snd), w.ext[(x, y)].on_obj(b.snd),
                    w.ext[(x, y)].on_mor(a.snd, b.snd, m.snd))
        return s.tens_mor(t(x), t(y), t(z), tg, tf).arr

    def induced(obj_fn, mor_fn):
        om = finfunction(dom.objects, target.objects, {o: obj_fn(o) for o in dom.objects})
        mm = {}
        for a in dom.objects:
            for b in dom.objects:
                mm[(a, b)] = finfunction(dom.hom_of(a, b), target.hom_of(obj_fn(a), obj_fn(b)),
                                         {m: mor_fn(a, b, m) for m in dom.hom_of(a, b)})
        return finfunctor(dom, target, om, mm)

    comps = {Pair(g, f): w.nu[(x, y, z)][(g, f)]
             for g in s.hom_cat(y, t(z)).objects for f in s.hom_cat(x, t(y)).objects}
    return finnattrans(induced(left_obj, left_mor), induced(right_obj, right_mor), comps)


def kappa_nat_trans(w: SkewWarping, x, y) -> FinNatTrans:
    s = w.base
    t = w.obj_map
    cat = s.hom_cat(x, t(y))

    def obj_fn(o):
        return s.tens(x, t(x), t(y), w.ext[(x, y)].on_obj(o), w.units[x])

    def mor_fn(a, b, m):
        tf = HomMor(w.ext[(x, y)].on_obj(a), w.ext[(x, y)].on_obj(b),
                    w.ext[(x, y)].on_mor(a, b, m))
        return s.tens_mor(x, t(x), t(y), tf, s.mor_id(x, t(x), w.units[x])).arr

    om = finfunction(cat.objects, cat.objects, {o: obj_fn(o) for o in cat.objects})
    mm = {}
    for a in cat.objects:
        for b in cat.objects:
            mm[(a, b)] = finfunction(cat.hom_of(a, b), cat.hom_of(obj_fn(a), obj_fn(b)),
                                     {m: mor_fn(a, b, m) for m in cat.hom_of(a, b)})
    fun = finfunctor(cat, cat, om, mm)
    comps = {o: w.kappa[(x, y)][o] for o in cat.objects}
    return finnattrans(identity_functor(cat), fun, comps)


def _warping_structure(w: SkewWarping, structural: list):
    s, t = w.base, w.obj_map
    if t.dom != s.objects or t.cod != s.objects:
        structural.append("object map frame mismatch")
        return
    for x in s.objects:
        for y in s.objects:
            fun = w.ext.get((x, y))
            if fun is None:
                structural.append(f"missing extension functor at ({render_atom(x)},{render_atom(y)})")
                continue
            if fun.dom != s.hom_cat(x, t(y)) or fun.cod != s.hom_cat(t(x), t(y)):
                structural.append(f"extension functor boundary at ({render_atom(x)},{render_atom(y)})")
                continue
            rep = validate_functor(fun)
            if not rep.valid:
                structural.append(f"extension functor at ({render_atom(x)},{render_atom(y)}): {rep.summary()}")
    for x in s.objects:
        if x not in w.units or w.units[x] not in s.hom_cat(x, t(x)).objects:
            structural.append(f"missing or stray unit object at {render_atom(x)}")
    if structural:
        return
    for x in s.objects:
        for y in s.objects:
            for z in s.objects:
                table = w.nu.get((x, y, z), {})
                for g in s.hom_cat(y, t(z)).objects:
                    for f in s.hom_cat(x, t(y)).objects:
                        tg = w.ext[(y, z)].on_obj(g)
                        dom = w.ext[(x, z)].on_obj(s.tens(x, t(y), t(z), tg, f))
                        cod = s.tens(t(x), t(y), t(z), tg, w.ext[(x, y)].on_obj(f))
                        arr = table.get((g, f))
                        if arr is None or arr not in s.hom_cat(t(x), t(z)).hom_of(dom, cod):
                            structural.append(
                                f"nu component at ({render_atom(x)},{render_atom(y)},{render_atom(z)}) "
                                f"objects ({render_atom(g)},{render_atom(f)})")
    for x in s.objects:
        dom = w.ext[(x, x)].on_obj(w.units[x])
        arr = w.nu0.get(x)
        if arr is None or arr not in s.hom_cat(t(x), t(x)).hom_of(dom, s.unit_obj[t(x)]):
            structural.append(f"nu0 component at {render_atom(x)}")
    for x in s.objects:
        for y in s.objects:
            table = w.kappa.get((x, y), {})
            for f in s.hom_cat(x, t(y)).objects:
                cod = s.tens(x, t(x), t(y), w.ext[(x, y)].on_obj(f), w.units[x])
                arr = table.get(f)
                if arr is None or arr not in s.hom_cat(x, t(y)).hom_of(f, cod):
                    structural.append(
                        f"kappa component at ({render_atom(x)},{render_atom(y)}) object {render_atom(f)}")


def validate_skew_warping(w: SkewWarping,
                          max_witnesses: Optional[int] = None) -> ValidationReport:
    structural = []
    _warping_structure(w, structural)
    if structural:
        return ValidationReport(structural=_cap(structural, max_witnesses))
    t = w.obj_map
    violations = []
    for x in w.base.objects:
        for y in w.base.objects:
            rep = validate_nat_trans(kappa_nat_trans(w, x, y))
            for v in rep.violations:
                violations.append(Violation("kappa-naturality", (x, y) + v.site, v.detail))
            for z in w.base.objects:
                rep = validate_nat_trans(nu_nat_trans(w, x, y, z))
                for v in rep.violations:
                    violations.append(Violation("nu-naturality", (x, y, z) + v.site, v.detail))
    if violations:
        return ValidationReport(violations=_cap(violations, max_witnesses))
    ctx = SkewContext(w.base, warping=w)
    return _check_axioms(WARP_AXIOMS, ctx, max_witnesses)


def identity_skew_warping(s: SkewBicategory) -> SkewWarping:
    """T = id, extensions identity, units the unit objects, kappa = rho."""
    t = identity_function(s.objects)
    ext = {(x, y): identity_functor(s.hom_cat(x, y)) for x in s.objects for y in s.objects}
    nu = {}
    for x in s.objects:
        for y in s.objects:
            for z in s.objects:
                nu[(x, y, z)] = {
                    (g, f): s.hom_cat(x, z).id_of(s.tens(x, y, z, g, f))
                    for g in s.hom_cat(y, z).objects for f in s.hom_cat(x, y).objects}
    nu0 = {x: s.hom_cat(x, x).id_of(s.unit_obj[x]) for x in s.objects}
    kappa = {(x, y): dict(s.runit[(x, y)]) for x in s.objects for y in s.objects}
    return SkewWarping(s, t, ext, dict(s.unit_obj), nu, nu0, kappa)


def skew_kleisli(w: SkewWarping) -> SkewBicategory:
    """Homs hom(x, Ty), composition g * f = Tg . f, units K.

    The associator pastes nu with the base associator, the left unitor
    pastes nu0 with the base left unitor, and the right unitor is kappa.
    """
    report = validate_skew_warping(w)
    if not report.valid:
        raise StructureError(f"invalid skew warping: {report.summary()}")
    s, t = w.base, w.obj_map
    objs = s.objects
    hom = {(x, y): s.hom_cat(x, t(y)) for x in objs for y in objs}
    comp = {}
    for x in objs:
        for y in objs:
            for z in objs:
                dom = product_category(hom[(y, z)], hom[(x, y)])
                target = hom[(x, z)]

                def obj_fn(o, x=x, y=y, z=z):
                    return s.tens(x, t(y), t(z), w.ext[(y, z)].on_obj(o.fst), o.snd)

                om = finfunction(dom.objects, target.objects,
                                 {o: obj_fn(o) for o in dom.objects})
                mm = {}
                for a in dom.objects:
                    for b in dom.objects:
                        mapping = {}
                        for m in dom.hom_of(a, b):
                            tg = HomMor(w.ext[(y, z)].on_obj(a.fst), w.ext[(y, z)].on_obj(b.fst),
                                        w.ext[(y, z)].on_mor(a.fst, b.fst, m.fst))
                            mapping[m] = s.tens_mor(x, t(y), t(z), tg,
                                                    HomMor(a.snd, b.snd, m.snd)).arr
                        mm[(a, b)] = finfunction(dom.hom_of(a, b),
                                                 target.hom_of(obj_fn(a), obj_fn(b)), mapping)
                comp[(x, y, z)] = finfunctor(dom, target, om, mm)
    assoc = {}
    for x in objs:
        for y in objs:
            for z in objs:
                for v in objs:
                    table = {}
                    for h in hom[(z, v)].objects:
                        for g in hom[(y, z)].objects:
                            for f in hom[(x, y)].objects:
                                th = w.ext[(z, v)].on_obj(h)
                                tg = w.ext[(y, z)].on_obj(g)
                                nu_mor = HomMor(
                                    w.ext[(y, v)].on_obj(s.tens(y, t(z), t(v), th, g)),
                                    s.tens(t(y), t(z), t(v), th, tg),
                                    w.nu[(y, z, v)][(h, g)])
                                step = s.tens_mor(x, t(y), t(v), nu_mor, s.mor_id(x, t(y), f))
                                base_alpha = s.alpha(x, t(y), t(z), t(v), th, tg, f)
                                table[(h, g, f)] = s.mor_comp(x, t(v), base_alpha, step).arr
                    assoc[(x, y, z, v)] = table
    lunit = {}
    runit = {}
    for x in objs:
        for y in objs:
            ltable = {}
            for f in hom[(x, y)].objects:
                nu0_mor = HomMor(w.ext[(y, y)].on_obj(w.units[y]), s.unit_obj[t(y)], w.nu0[y])
                step = s.tens_mor(x, t(y), t(y), nu0_mor, s.mor_id(x, t(y), f))
                ltable[f] = s.mor_comp(x, t(y), s.lam(x, t(y), f), step).arr
            lunit[(x, y)] = ltable
            runit[(x, y)] = dict(w.kappa[(x, y)])
    return SkewBicategory(objs, hom, comp, dict(w.units), assoc, lunit, runit)


# --- skew algebras -----------------------------------------------------------

@dataclass
class SkewAlgebra:
    warping: SkewWarping
    at: object
    e_funcs: dict     # z -> FinFunctor hom(z, Ta) -> hom(Tz, Ta)
    cell_nu: dict     # (x, y) -> {(g, f): arrow}   E(Eg.f) -> Eg.Tf
    cell_kappa: dict  # y -> {g: arrow}             g -> Eg.K_y


ALGEBRA_AXIOMS_SKEW = (
    Axiom("act-assoc", ("u", "v", "w"),
          (("f", "u", ("Ti", "v")), ("g", "v", ("Ti", "w")), ("h", "w", ("Ta",))),
          mcomp(malpha(OEApp(OVar("h")), oext("w", "g"), oext("v", "f")),
                mtens(mcellnu("w", "h", "g"), mid(oext("v", "f"))),
                mcellnu("v", otens(OEApp(OVar("h")), "g"), "f")),
          mcomp(mtens(mid(OEApp(OVar("h"))), mnu("u", "v", "w", "g", "f")),
                mcellnu("w", "h", otens(oext("w", "g"), "f")),
                MEApp(malpha(OEApp(OVar("h")), oext("w", "g"), "f")),
                MEApp(mtens(mcellnu("w", "h", "g"), mid("f"))))),
    Axiom("act-unit", ("x", "v"),
          (("f", "x", ("Ti", "v")), ("g", "v", ("Ta",))),
          mcomp(malpha(OEApp(OVar("g")), oext("v", "f"), OKUnit("x")),
                mtens(mcellnu("v", "g", "f"), mid(OKUnit("x"))),
                MCellKappa(otens(OEApp(OVar("g")), "f"))),
          mtens(mid(OEApp(OVar("g"))), mkappa("v", "f"))),
)


def _algebra_structure(a: SkewAlgebra, structural: list):
    w = a.warping
    s, t = w.base, w.obj_map
    if a.at not in s.objects:
        structural.append(f"{render_atom(a.at)} is not an object")
        return
    ta = t(a.at)
    for z in s.objects:
        fun = a.e_funcs.get(z)
        if fun is None:
            structural.append(f"missing family functor at {render_atom(z)}")
            continue
        if fun.dom != s.hom_cat(z, ta) or fun.cod != s.hom_cat(t(z), ta):
            structural.append(f"family functor boundary at {render_atom(z)}")
            continue
        rep = validate_functor(fun)
        if not rep.valid:
            structural.append(f"family functor at {render_atom(z)}: {rep.summary()}")
    if structural:
        return
    for x in s.objects:
        for y in s.objects:
            table = a.cell_nu.get((x, y), {})
            for g in s.hom_cat(y, ta).objects:
                for f in s.hom_cat(x, t(y)).objects:
                    eg = a.e_funcs[y].on_obj(g)
                    dom = a.e_funcs[x].on_obj(s.tens(x, t(y), ta, eg, f))
                    cod = s.tens(t(x), t(y), ta, eg, w.ext[(x, y)].on_obj(f))
                    arr = table.get((g, f))
                    if arr is None or arr not in s.hom_cat(t(x), ta).hom_of(dom, cod):
                        structural.append(
                            f"algebra nu component at ({render_atom(x)},{render_atom(y)}) "
                            f"objects ({render_atom(g)},{render_atom(f)})")
    for y in s.objects:
        table = a.cell_kappa.get(y, {})
        for g in s.hom_cat(y, ta).objects:
            cod = s.tens(y, t(y), ta, a.e_funcs[y].on_obj(g), w.units[y])
            arr = table.get(g)
            if arr is None or arr not in s.hom_cat(y, ta).hom_of(g, cod):
                structural.append(f"algebra kappa component at {render_atom(y)} object {render_atom(g)}")


def validate_skew_algebra(a: SkewAlgebra,
                          max_witnesses: Optional[int] = None) -> ValidationReport:
    structural = []
    _algebra_structure(a, structural)
    if structural:
        return ValidationReport(structural=_cap(structural, max_witnesses))
    ctx = SkewContext(a.warping.base, warping=a.warping, algebra=a)
    return _check_axioms(ALGEBRA_AXIOMS_SKEW, ctx, max_witnesses)


def self_skew_algebra(w: SkewWarping, at) -> SkewAlgebra:
    """The warping acting on itself at one object: E = ext, cells from nu, kappa."""
    s, t = w.base, w.obj_map
    e_funcs = {z: w.ext[(z, at)] for z in s.objects}
    cell_nu = {(x, y): dict(w.nu[(x, y, at)]) for x in s.objects for y in s.objects}
    cell_kappa = {y: dict(w.kappa[(y, at)]) for y in s.objects}
    return SkewAlgebra(w, at, e_funcs, cell_nu, cell_kappa)


# --- enumeration -------------------------------------------------------------

def enumerate_skew_warpings(s: SkewBicategory, max_candidates: int = 200000,
                            notes: Optional[list] = None) -> Iterator[SkewWarping]:
    """All valid skew warpings on a finite base, by brute enumeration."""
    objs = s.objects
    for t in enumerate_functions(objs, objs):
        pairs = [(x, y) for x in objs for y in objs]
        ext_choices = [list(enumerate_functors(s.hom_cat(x, t(y)), s.hom_cat(t(x), t(y))))
                       for (x, y) in pairs]
        unit_choices = [list(s.hom_cat(x, t(x)).objects) for x in objs]
        if any(not c for c in ext_choices) or any(not c for c in unit_choices):
            continue
        for exts in itertools.product(*ext_choices):
            ext = dict(zip(pairs, exts))
            for units in itertools.product(*unit_choices):
                units_map = dict(zip(objs.elements, units))
                yield from _component_candidates(s, t, ext, units_map, max_candidates, notes)


def _component_candidates(s, t, ext, units, max_candidates, notes) -> Iterator[SkewWarping]:
    nu_slots, nu0_slots, kappa_slots = [], [], []
    total = 1
    for x in objs_of(s):
        for y in objs_of(s):
            for z in objs_of(s):
                for g in s.hom_cat(y, t(z)).objects:
                    for f in s.hom_cat(x, t(y)).objects:
                        tg = ext[(y, z)].on_obj(g)
                        dom = ext[(x, z)].on_obj(s.tens(x, t(y), t(z), tg, f))
                        cod = s.tens(t(x), t(y), t(z), tg, ext[(x, y)].on_obj(f))
                        arrows = list(s.hom_cat(t(x), t(z)).hom_of(dom, cod))
                        if not arrows:
                            return
                        total *= len(arrows)
                        nu_slots.append(((x, y, z), (g, f), arrows))
    for x in objs_of(s):
        dom = ext[(x, x)].on_obj(units[x])
        arrows = list(s.hom_cat(t(x), t(x)).hom_of(dom, s.unit_obj[t(x)]))
        if not arrows:
            return
        total *= len(arrows)
        nu0_slots.append((x, arrows))
    for x in objs_of(s):
        for y in objs_of(s):
            for f in s.hom_cat(x, t(y)).objects:
                cod = s.tens(x, t(x), t(y), ext[(x, y)].on_obj(f), units[x])
                arrows = list(s.hom_cat(x, t(y)).hom_of(f, cod))
                if not arrows:
                    return
                total *= len(arrows)
                kappa_slots.append(((x, y), f, arrows))
    if total > max_candidates:
        raise StructureError(f"candidate count {total} exceeds the limit {max_candidates}")
    if notes is not None and total == 1:
        notes.append("component choices are forced; the axiom set is vacuously rigid here")
    for nu_pick in itertools.product(*(a for (_, _, a) in nu_slots)):
        nu = {}
        for ((key, gf, _), arr) in zip(nu_slots, nu_pick):
            nu.setdefault(key, {})[gf] = arr
        for key in [(x, y, z) for x in objs_of(s) for y in objs_of(s) for z in objs_of(s)]:
            nu.setdefault(key, {})
        for nu0_pick in itertools.product(*(a for (_, a) in nu0_slots)):
            nu0 = {x: arr for (x, _), arr in zip(nu0_slots, nu0_pick)}
            for kappa_pick in itertools.product(*(a for (_, _, a) in kappa_slots)):
                kappa = {}
                for ((key, f, _), arr) in zip(kappa_slots, kappa_pick):
                    kappa.setdefault(key, {})[f] = arr
                for key in [(x, y) for x in objs_of(s) for y in objs_of(s)]:
                    kappa.setdefault(key, {})
                cand = SkewWarping(s, t, ext, units, nu, nu0, kappa)
                if validate_skew_warping(cand).valid:
                    yield cand


def objs_of(s: SkewBicategory):
    return s.objects
