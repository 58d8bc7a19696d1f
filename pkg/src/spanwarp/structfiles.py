"""Self-describing JSON files for every structure kind.

One object per file, tagged with ``kind``.  Canonical form sorts object
keys and set elements, so emission is byte-reproducible and
``parse . emit`` is the identity on canonical files.  Structured atoms
are encoded as one-key objects: ``{"unit": x}``, ``{"star": x}``,
``{"path": [...]}`` and ``{"pair": [a, b]}``; plain atoms are strings.
"""

from __future__ import annotations

import json
from typing import Any

from .atoms import Atom, Pair, Path, Star, Unit, atom_key
from .correspond import WarpAlgebra
from .fincore import (FinCategory, FinFunction, FinFunctor, FinSet, finfunction,
                      finfunctor, sorted_atoms)
from .monadwarp import (MwMonad, SpanMonad, Warping, Wreath, mw_monad)
from .skew import SkewAlgebra, SkewBicategory, SkewWarping
from .spaneng import Cell2, Span, cell


class SchemaError(ValueError):
    """The file parsed as JSON but does not describe a structure."""


KINDS = ("category", "monad", "warping", "wreath", "mw_monad", "algebra",
         "skew_bicategory", "skew_warping", "skew_algebra")


def atom_to_json(a: Atom) -> Any:
    if isinstance(a, str):
        return a
    if isinstance(a, Unit):
        return {"unit": a.obj}
    if isinstance(a, Star):
        return {"star": a.obj}
    if isinstance(a, Path):
        return {"path": [atom_to_json(p) for p in a.seq]}
    if isinstance(a, Pair):
        return {"pair": [atom_to_json(a.fst), atom_to_json(a.snd)]}
    raise SchemaError(f"not an atom: {a!r}")


def atom_from_json(v: Any, where: str = "") -> Atom:
    if isinstance(v, str):
        return v
    if isinstance(v, dict) and len(v) == 1:
        tag, body = next(iter(v.items()))
        if tag == "unit" and isinstance(body, str):
            return Unit(body)
        if tag == "star" and isinstance(body, str):
            return Star(body)
        if tag == "path" and isinstance(body, list):
            return Path(tuple(atom_from_json(p, where) for p in body))
        if tag == "pair" and isinstance(body, list) and len(body) == 2:
            return Pair(atom_from_json(body[0], where), atom_from_json(body[1], where))
    raise SchemaError(f"bad atom at {where or 'top level'}: {v!r}")


def _expect(cond: bool, msg: str):
    if not cond:
        raise SchemaError(msg)


def finset_to_json(s: FinSet) -> list:
    return [atom_to_json(a) for a in sorted_atoms(s.elements)]


def finset_from_json(v: Any, where: str) -> FinSet:
    _expect(isinstance(v, list), f"{where}: expected a list")
    return FinSet(tuple(atom_from_json(a, where) for a in v))


def function_to_json(f: FinFunction) -> list:
    items = sorted(f.mapping, key=lambda kv: atom_key(kv[0]))
    return [[atom_to_json(k), atom_to_json(v)] for k, v in items]


def function_from_json(v: Any, dom: FinSet, cod: FinSet, where: str) -> FinFunction:
    _expect(isinstance(v, list), f"{where}: expected a table")
    mapping = {}
    for row in v:
        _expect(isinstance(row, list) and len(row) == 2, f"{where}: expected [from, to] rows")
        mapping[atom_from_json(row[0], where)] = atom_from_json(row[1], where)
    try:
        return finfunction(dom, cod, mapping)
    except ValueError as exc:
        raise SchemaError(f"{where}: {exc}") from exc


def category_to_json(c: FinCategory) -> dict:
    objs = sorted_atoms(c.objects.elements)
    hom = [{"src": atom_to_json(x), "dst": atom_to_json(y),
            "elements": finset_to_json(c.hom_of(x, y))}
           for x in objs for y in objs]
    comp = []
    for x in objs:
        for y in objs:
            for z in objs:
                table = c.comp.get((x, y, z), {})
                rows = sorted(table.items(), key=lambda kv: (atom_key(kv[0][0]), atom_key(kv[0][1])))
                comp.append({"x": atom_to_json(x), "y": atom_to_json(y), "z": atom_to_json(z),
                             "table": [[atom_to_json(g), atom_to_json(f), atom_to_json(r)]
                                       for (g, f), r in rows]})
    ident = [[atom_to_json(x), atom_to_json(c.ident[x])] for x in objs if x in c.ident]
    return {"objects": [atom_to_json(x) for x in objs], "hom": hom, "comp": comp, "ident": ident}


def category_from_json(v: Any, where: str = "category") -> FinCategory:
    _expect(isinstance(v, dict), f"{where}: expected an object")
    for key in ("objects", "hom", "comp", "ident"):
        _expect(key in v, f"{where}: missing field {key!r}")
    objects = finset_from_json(v["objects"], f"{where}.objects")
    hom = {(x, y): FinSet(()) for x in objects for y in objects}
    for row in v["hom"]:
        _expect(isinstance(row, dict) and {"src", "dst", "elements"} <= set(row),
                f"{where}.hom: expected src/dst/elements records")
        key = (atom_from_json(row["src"], where), atom_from_json(row["dst"], where))
        _expect(key in hom, f"{where}.hom: stray pair {row['src']},{row['dst']}")
        hom[key] = finset_from_json(row["elements"], f"{where}.hom")
    comp = {}
    for row in v["comp"]:
        _expect(isinstance(row, dict) and {"x", "y", "z", "table"} <= set(row),
                f"{where}.comp: expected x/y/z/table records")
        key = tuple(atom_from_json(row[k], where) for k in ("x", "y", "z"))
        table = {}
        for entry in row["table"]:
            _expect(isinstance(entry, list) and len(entry) == 3,
                    f"{where}.comp: expected [g, f, gf] rows")
            g, f, r = (atom_from_json(a, where) for a in entry)
            table[(g, f)] = r
        comp[key] = table
    ident = {}
    for row in v["ident"]:
        _expect(isinstance(row, list) and len(row) == 2, f"{where}.ident: expected pairs")
        ident[atom_from_json(row[0], where)] = atom_from_json(row[1], where)
    return FinCategory(objects, hom, comp, ident)


def span_to_json(s: Span) -> dict:
    rows = []
    for x in sorted_atoms(s.src.elements):
        for y in sorted_atoms(s.dst.elements):
            cell_ = s.entry_of(x, y)
            if len(cell_):
                rows.append({"src": atom_to_json(x), "dst": atom_to_json(y),
                             "elements": finset_to_json(cell_)})
    return {"src": finset_to_json(s.src), "dst": finset_to_json(s.dst), "entries": rows}


def span_from_json(v: Any, where: str) -> Span:
    _expect(isinstance(v, dict) and {"src", "dst", "entries"} <= set(v),
            f"{where}: expected src/dst/entries")
    src = finset_from_json(v["src"], f"{where}.src")
    dst = finset_from_json(v["dst"], f"{where}.dst")
    entry = {(x, y): FinSet(()) for x in src for y in dst}
    for row in v["entries"]:
        _expect(isinstance(row, dict) and {"src", "dst", "elements"} <= set(row),
                f"{where}.entries: expected records")
        key = (atom_from_json(row["src"], where), atom_from_json(row["dst"], where))
        _expect(key in entry, f"{where}.entries: stray index pair")
        entry[key] = finset_from_json(row["elements"], f"{where}.entries")
    try:
        return Span(src, dst, entry)
    except ValueError as exc:
        raise SchemaError(f"{where}: {exc}") from exc


def cell_to_json(c: Cell2) -> dict:
    rows = []
    comps = dict(c.comp)
    for x in sorted_atoms(c.dom.src.elements):
        for y in sorted_atoms(c.dom.dst.elements):
            fn = comps[(x, y)]
            if len(fn.dom):
                rows.append({"src": atom_to_json(x), "dst": atom_to_json(y),
                             "table": function_to_json(fn)})
    return {"dom": span_to_json(c.dom), "cod": span_to_json(c.cod), "components": rows}


def cell_from_json(v: Any, where: str, dom: Span = None, cod: Span = None) -> Cell2:
    _expect(isinstance(v, dict) and {"components"} <= set(v), f"{where}: expected components")
    if dom is None:
        dom = span_from_json(v["dom"], f"{where}.dom")
    if cod is None:
        cod = span_from_json(v["cod"], f"{where}.cod")
    comps = {(x, y): finfunction(dom.entry_of(x, y), cod.entry_of(x, y), {})
             for x in dom.src for y in dom.dst if not len(dom.entry_of(x, y))}
    for row in v["components"]:
        _expect(isinstance(row, dict) and {"src", "dst", "table"} <= set(row),
                f"{where}.components: expected records")
        x = atom_from_json(row["src"], where)
        y = atom_from_json(row["dst"], where)
        _expect(x in dom.src and y in dom.dst, f"{where}.components: stray index pair")
        comps[(x, y)] = function_from_json(row["table"], dom.entry_of(x, y),
                                           cod.entry_of(x, y), f"{where}.components")
    try:
        return cell(dom, cod, comps)
    except ValueError as exc:
        raise SchemaError(f"{where}: {exc}") from exc


def monad_to_json(m: SpanMonad) -> dict:
    return {"carrier": span_to_json(m.carrier), "mult": cell_to_json(m.mult),
            "unit": cell_to_json(m.unit)}


def monad_from_json(v: Any, where: str = "monad") -> SpanMonad:
    from .spaneng import compose_word, identity_span
    _expect(isinstance(v, dict) and {"carrier", "mult", "unit"} <= set(v),
            f"{where}: expected carrier/mult/unit")
    carrier = span_from_json(v["carrier"], f"{where}.carrier")
    try:
        bb = compose_word([carrier, carrier])
        one = identity_span(carrier.src)
    except ValueError as exc:
        raise SchemaError(f"{where}: {exc}") from exc
    mult = cell_from_json(v["mult"], f"{where}.mult", bb, carrier)
    unit = cell_from_json(v["unit"], f"{where}.unit", one, carrier)
    return SpanMonad(carrier, mult, unit)


def warping_to_json(w: Warping) -> dict:
    return {"base": monad_to_json(w.base), "endo": span_to_json(w.endo),
            "t": cell_to_json(w.t), "k": cell_to_json(w.k)}


def warping_from_json(v: Any, where: str = "warping") -> Warping:
    from .spaneng import compose_word, identity_span
    _expect(isinstance(v, dict) and {"base", "endo", "t", "k"} <= set(v),
            f"{where}: expected base/endo/t/k")
    base = monad_from_json(v["base"], f"{where}.base")
    endo = span_from_json(v["endo"], f"{where}.endo")
    try:
        aba = compose_word([endo, base.carrier, endo])
        ab = compose_word([endo, base.carrier])
        one = identity_span(base.carrier.src)
    except ValueError as exc:
        raise SchemaError(f"{where}: {exc}") from exc
    t = cell_from_json(v["t"], f"{where}.t", aba, ab)
    k = cell_from_json(v["k"], f"{where}.k", one, ab)
    return Warping(base, endo, t, k)


def wreath_to_json(w: Wreath) -> dict:
    return {"base": monad_to_json(w.base), "endo": span_to_json(w.endo),
            "d": cell_to_json(w.d), "q": cell_to_json(w.q), "j": cell_to_json(w.j)}


def wreath_from_json(v: Any, where: str = "wreath") -> Wreath:
    from .spaneng import compose_word, identity_span
    _expect(isinstance(v, dict) and {"base", "endo", "d", "q", "j"} <= set(v),
            f"{where}: expected base/endo/d/q/j")
    base = monad_from_json(v["base"], f"{where}.base")
    endo = span_from_json(v["endo"], f"{where}.endo")
    try:
        ba = compose_word([base.carrier, endo])
        aa = compose_word([endo, endo])
        ab = compose_word([endo, base.carrier])
        one = identity_span(base.carrier.src)
    except ValueError as exc:
        raise SchemaError(f"{where}: {exc}") from exc
    d = cell_from_json(v["d"], f"{where}.d", ba, ab)
    q = cell_from_json(v["q"], f"{where}.q", aa, ab)
    j = cell_from_json(v["j"], f"{where}.j", one, ab)
    return Wreath(base, endo, d, q, j)


def mw_to_json(m: MwMonad) -> dict:
    base = category_to_json(m.base)
    objs = sorted_atoms(m.base.objects.elements)
    ext = [{"src": atom_to_json(x), "dst": atom_to_json(y),
            "table": function_to_json(m.ext_of(x, y))}
           for x in objs for y in objs]
    return {"base": base,
            "obj_map": function_to_json(m.obj_map),
            "ext": ext,
            "units": [[atom_to_json(x), atom_to_json(m.unit_of(x))] for x in objs]}


def mw_from_json(v: Any, where: str = "mw_monad") -> MwMonad:
    _expect(isinstance(v, dict) and {"base", "obj_map", "ext", "units"} <= set(v),
            f"{where}: expected base/obj_map/ext/units")
    base = category_from_json(v["base"], f"{where}.base")
    t = function_from_json(v["obj_map"], base.objects, base.objects, f"{where}.obj_map")
    ext = {}
    for row in v["ext"]:
        _expect(isinstance(row, dict) and {"src", "dst", "table"} <= set(row),
                f"{where}.ext: expected records")
        x = atom_from_json(row["src"], where)
        y = atom_from_json(row["dst"], where)
        ext[(x, y)] = function_from_json(row["table"], base.hom_of(x, t(y)),
                                         base.hom_of(t(x), t(y)), f"{where}.ext")
    units = {}
    for row in v["units"]:
        _expect(isinstance(row, list) and len(row) == 2, f"{where}.units: expected pairs")
        units[atom_from_json(row[0], where)] = atom_from_json(row[1], where)
    missing = [x for x in base.objects if x not in units or (x, x) not in ext]
    _expect(not missing, f"{where}: missing unit or extension rows")
    return mw_monad(base, t, ext, units)


def algebra_to_json(a: WarpAlgebra) -> dict:
    return {"warping": warping_to_json(a.warping), "y": finset_to_json(a.y),
            "m": span_to_json(a.m), "act": cell_to_json(a.act)}


def algebra_from_json(v: Any, where: str = "algebra") -> WarpAlgebra:
    from .spaneng import compose_word
    _expect(isinstance(v, dict) and {"warping", "y", "m", "act"} <= set(v),
            f"{where}: expected warping/y/m/act")
    w = warping_from_json(v["warping"], f"{where}.warping")
    y = finset_from_json(v["y"], f"{where}.y")
    m = span_from_json(v["m"], f"{where}.m")
    try:
        mba = compose_word([m, w.base.carrier, w.endo])
        mb = compose_word([m, w.base.carrier])
    except ValueError as exc:
        raise SchemaError(f"{where}: {exc}") from exc
    act = cell_from_json(v["act"], f"{where}.act", mba, mb)
    return WarpAlgebra(w, y, m, act)


def functor_to_json(f: FinFunctor) -> dict:
    mm = dict(f.mor_map)
    rows = []
    for (x, y) in sorted(mm, key=lambda k: (atom_key(k[0]), atom_key(k[1]))):
        if len(mm[(x, y)].dom):
            rows.append({"src": atom_to_json(x), "dst": atom_to_json(y),
                         "table": function_to_json(mm[(x, y)])})
    return {"obj_map": function_to_json(f.obj_map), "mor_map": rows}


def functor_from_json(v: Any, dom: FinCategory, cod: FinCategory, where: str) -> FinFunctor:
    _expect(isinstance(v, dict) and {"obj_map", "mor_map"} <= set(v),
            f"{where}: expected obj_map/mor_map")
    om = function_from_json(v["obj_map"], dom.objects, cod.objects, f"{where}.obj_map")
    mm = {(x, y): finfunction(dom.hom_of(x, y), cod.hom_of(om(x), om(y)), {})
          for x in dom.objects for y in dom.objects if not len(dom.hom_of(x, y))}
    for row in v["mor_map"]:
        _expect(isinstance(row, dict) and {"src", "dst", "table"} <= set(row),
                f"{where}.mor_map: expected records")
        x = atom_from_json(row["src"], where)
        y = atom_from_json(row["dst"], where)
        mm[(x, y)] = function_from_json(row["table"], dom.hom_of(x, y),
                                        cod.hom_of(om(x), om(y)), f"{where}.mor_map")
    missing = [(x, y) for x in dom.objects for y in dom.objects if (x, y) not in mm]
    _expect(not missing, f"{where}: missing arrow-map rows")
    return finfunctor(dom, cod, om, mm)


def _mor_table_to_json(table: dict, keylen: int) -> list:
    def keyf(kv):
        k = kv[0]
        return tuple(atom_key(a) for a in (k if isinstance(k, tuple) else (k,)))
    rows = []
    for k, arr in sorted(table.items(), key=keyf):
        ks = list(k) if isinstance(k, tuple) else [k]
        rows.append([atom_to_json(a) for a in ks] + [atom_to_json(arr)])
    return rows


def _mor_table_from_json(v: Any, keylen: int, where: str) -> dict:
    _expect(isinstance(v, list), f"{where}: expected a table")
    out = {}
    for row in v:
        _expect(isinstance(row, list) and len(row) == keylen + 1, f"{where}: bad row arity")
        atoms = [atom_from_json(a, where) for a in row]
        key = tuple(atoms[:keylen]) if keylen > 1 else atoms[0]
        out[key] = atoms[keylen]
    return out


def skew_bicategory_to_json(s: SkewBicategory) -> dict:
    objs = sorted_atoms(s.objects.elements)
    homs = [{"src": atom_to_json(x), "dst": atom_to_json(y),
             "category": category_to_json(s.hom_cat(x, y))}
            for x in objs for y in objs]
    comps = [{"x": atom_to_json(x), "y": atom_to_json(y), "z": atom_to_json(z),
              "functor": functor_to_json(s.comp[(x, y, z)])}
             for x in objs for y in objs for z in objs]
    assoc = [{"x": atom_to_json(x), "y": atom_to_json(y), "z": atom_to_json(z),
              "w": atom_to_json(w), "table": _mor_table_to_json(s.assoc.get((x, y, z, w), {}), 3)}
             for x in objs for y in objs for z in objs for w in objs]
    lunit = [{"src": atom_to_json(x), "dst": atom_to_json(y),
              "table": _mor_table_to_json(s.lunit.get((x, y), {}), 1)}
             for x in objs for y in objs]
    runit = [{"src": atom_to_json(x), "dst": atom_to_json(y),
              "table": _mor_table_to_json(s.runit.get((x, y), {}), 1)}
             for x in objs for y in objs]
    return {"objects": [atom_to_json(x) for x in objs], "homs": homs, "comp": comps,
            "units": [[atom_to_json(x), atom_to_json(s.unit_obj[x])] for x in objs],
            "assoc": assoc, "lunit": lunit, "runit": runit}


def skew_bicategory_from_json(v: Any, where: str = "skew_bicategory") -> SkewBicategory:
    from .fincore import product_category
    _expect(isinstance(v, dict), f"{where}: expected an object")
    for key in ("objects", "homs", "comp", "units", "assoc", "lunit", "runit"):
        _expect(key in v, f"{where}: missing field {key!r}")
    objects = finset_from_json(v["objects"], f"{where}.objects")
    hom = {}
    for row in v["homs"]:
        key = (atom_from_json(row["src"], where), atom_from_json(row["dst"], where))
        hom[key] = category_from_json(row["category"], f"{where}.homs")
    missing = [(x, y) for x in objects for y in objects if (x, y) not in hom]
    _expect(not missing, f"{where}: missing hom-categories")
    comp = {}
    for row in v["comp"]:
        key = tuple(atom_from_json(row[k], where) for k in ("x", "y", "z"))
        dom = product_category(hom[(key[1], key[2])], hom[(key[0], key[1])])
        comp[key] = functor_from_json(row["functor"], dom, hom[(key[0], key[2])], f"{where}.comp")
    units = {}
    for row in v["units"]:
        units[atom_from_json(row[0], where)] = atom_from_json(row[1], where)
    assoc = {}
    for row in v["assoc"]:
        key = tuple(atom_from_json(row[k], where) for k in ("x", "y", "z", "w"))
        assoc[key] = _mor_table_from_json(row["table"], 3, f"{where}.assoc")
    lunit = {}
    runit = {}
    for field, store in (("lunit", lunit), ("runit", runit)):
        for row in v[field]:
            key = (atom_from_json(row["src"], where), atom_from_json(row["dst"], where))
            store[key] = _mor_table_from_json(row["table"], 1, f"{where}.{field}")
    return SkewBicategory(objects, hom, comp, units, assoc, lunit, runit)


def skew_warping_to_json(w: SkewWarping) -> dict:
    s = w.base
    t = w.obj_map
    objs = sorted_atoms(s.objects.elements)
    ext = [{"src": atom_to_json(x), "dst": atom_to_json(y),
            "functor": functor_to_json(w.ext[(x, y)])}
           for x in objs for y in objs]
    nu = [{"x": atom_to_json(x), "y": atom_to_json(y), "z": atom_to_json(z),
           "table": _mor_table_to_json(w.nu.get((x, y, z), {}), 2)}
          for x in objs for y in objs for z in objs]
    kappa = [{"src": atom_to_json(x), "dst": atom_to_json(y),
              "table": _mor_table_to_json(w.kappa.get((x, y), {}), 1)}
             for x in objs for y in objs]
    return {"base": skew_bicategory_to_json(s),
            "obj_map": function_to_json(t),
            "ext": ext,
            "units": [[atom_to_json(x), atom_to_json(w.units[x])] for x in objs],
            "nu": nu,
            "nu0": [[atom_to_json(x), atom_to_json(w.nu0[x])] for x in objs],
            "kappa": kappa}


def skew_warping_from_json(v: Any, where: str = "skew_warping") -> SkewWarping:
    _expect(isinstance(v, dict), f"{where}: expected an object")
    for key in ("base", "obj_map", "ext", "units", "nu", "nu0", "kappa"):
        _expect(key in v, f"{where}: missing field {key!r}")
    base = skew_bicategory_from_json(v["base"], f"{where}.base")
    t = function_from_json(v["obj_map"], base.objects, base.objects, f"{where}.obj_map")
    ext = {}
    for row in v["ext"]:
        x = atom_from_json(row["src"], where)
        y = atom_from_json(row["dst"], where)
        ext[(x, y)] = functor_from_json(row["functor"], base.hom_cat(x, t(y)),
                                        base.hom_cat(t(x), t(y)), f"{where}.ext")
    units = {atom_from_json(r[0], where): atom_from_json(r[1], where) for r in v["units"]}
    nu = {}
    for row in v["nu"]:
        key = tuple(atom_from_json(row[k], where) for k in ("x", "y", "z"))
        nu[key] = _mor_table_from_json(row["table"], 2, f"{where}.nu")
    nu0 = {atom_from_json(r[0], where): atom_from_json(r[1], where) for r in v["nu0"]}
    kappa = {}
    for row in v["kappa"]:
        key = (atom_from_json(row["src"], where), atom_from_json(row["dst"], where))
        kappa[key] = _mor_table_from_json(row["table"], 1, f"{where}.kappa")
    return SkewWarping(base, t, ext, units, nu, nu0, kappa)


def skew_algebra_to_json(a: SkewAlgebra) -> dict:
    s = a.warping.base
    objs = sorted_atoms(s.objects.elements)
    e_funcs = [{"at": atom_to_json(z), "functor": functor_to_json(a.e_funcs[z])} for z in objs]
    cell_nu = [{"x": atom_to_json(x), "y": atom_to_json(y),
                "table": _mor_table_to_json(a.cell_nu.get((x, y), {}), 2)}
               for x in objs for y in objs]
    cell_kappa = [{"at": atom_to_json(y), "table": _mor_table_to_json(a.cell_kappa.get(y, {}), 1)}
                  for y in objs]
    return {"warping": skew_warping_to_json(a.warping), "at": atom_to_json(a.at),
            "e_funcs": e_funcs, "cell_nu": cell_nu, "cell_kappa": cell_kappa}


def skew_algebra_from_json(v: Any, where: str = "skew_algebra") -> SkewAlgebra:
    _expect(isinstance(v, dict), f"{where}: expected an object")
    for key in ("warping", "at", "e_funcs", "cell_nu", "cell_kappa"):
        _expect(key in v, f"{where}: missing field {key!r}")
    w = skew_warping_from_json(v["warping"], f"{where}.warping")
    at = atom_from_json(v["at"], where)
    _expect(at in w.base.objects, f"{where}: at is not an object")
    t = w.obj_map
    ta = t(at)
    e_funcs = {}
    for row in v["e_funcs"]:
        z = atom_from_json(row["at"], where)
        e_funcs[z] = functor_from_json(row["functor"], w.base.hom_cat(z, ta),
                                       w.base.hom_cat(t(z), ta), f"{where}.e_funcs")
    cell_nu = {}
    for row in v["cell_nu"]:
        key = (atom_from_json(row["x"], where), atom_from_json(row["y"], where))
        cell_nu[key] = _mor_table_from_json(row["table"], 2, f"{where}.cell_nu")
    cell_kappa = {}
    for row in v["cell_kappa"]:
        cell_kappa[atom_from_json(row["at"], where)] = _mor_table_from_json(
            row["table"], 1, f"{where}.cell_kappa")
    return SkewAlgebra(w, at, e_funcs, cell_nu, cell_kappa)


_TO_JSON = {
    "category": category_to_json, "monad": monad_to_json, "warping": warping_to_json,
    "wreath": wreath_to_json, "mw_monad": mw_to_json, "algebra": algebra_to_json,
    "skew_bicategory": skew_bicategory_to_json, "skew_warping": skew_warping_to_json,
    "skew_algebra": skew_algebra_to_json,
}

_FROM_JSON = {
    "category": category_from_json, "monad": monad_from_json, "warping": warping_from_json,
    "wreath": wreath_from_json, "mw_monad": mw_from_json, "algebra": algebra_from_json,
    "skew_bicategory": skew_bicategory_from_json, "skew_warping": skew_warping_from_json,
    "skew_algebra": skew_algebra_from_json,
}


def emit_structure(kind: str, value, fmt: str = "canonical") -> str:
    if kind not in _TO_JSON:
        raise SchemaError(f"unknown kind {kind!r}")
    doc = {"kind": kind, **_TO_JSON[kind](value)}
    if fmt == "pretty":
        return json.dumps(doc, indent=2) + "\n"
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def parse_structure(text: str):
    """Returns (kind, value); raises SchemaError on malformed input."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from exc
    _expect(isinstance(doc, dict), "top level: expected an object")
    kind = doc.get("kind")
    _expect(isinstance(kind, str) and kind in _FROM_JSON,
            f"top level: unknown or missing kind {kind!r}")
    return kind, _FROM_JSON[kind](doc)
