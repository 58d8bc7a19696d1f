"""Batch interface: validate, convert, kleisli and enumerate on structure files.

Exit codes: 0 valid (or command succeeded), 1 structurally sound but
law-violating (or invalid input to a construction), 2 malformed file,
unknown conversion, or bounds refusal.  Reports are canonical JSON on
stdout and contain nothing volatile; wall time goes to stderr.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import correspond, monadwarp, skew, structfiles
from .fincore import finfunction, validate_category
from .monadwarp import InvalidStructure
from .skew import StructureError
from .spaneng import restrict_star
from .structfiles import SchemaError, emit_structure, parse_structure

OK, INVALID, MALFORMED = 0, 1, 2


def _digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _report(command: str, digest: str, verdict: str, witnesses=(), counts=None, notes=()):
    doc = {"command": command, "input": digest, "verdict": verdict,
           "witnesses": list(witnesses), "counts": counts or {}, "notes": list(notes)}
    sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")


def _load(path: str):
    data = Path(path).read_bytes()
    kind, value = parse_structure(data.decode("utf-8"))
    return data, kind, value


_VALIDATORS = {
    "category": validate_category,
    "monad": lambda m, **kw: monadwarp.monad_laws_report(m.carrier, m.mult, m.unit, **kw),
    "warping": monadwarp.validate_warping,
    "wreath": monadwarp.validate_wreath,
    "mw_monad": monadwarp.validate_mw_monad,
    "algebra": correspond.validate_algebra,
    "skew_bicategory": skew.validate_skew_bicategory,
    "skew_warping": skew.validate_skew_warping,
    "skew_algebra": skew.validate_skew_algebra,
}


def cmd_validate(args) -> int:
    t0 = time.monotonic()
    try:
        data, kind, value = _load(args.file)
    except (OSError, SchemaError, StructureError) as exc:
        _report("validate", "", "malformed", witnesses=[str(exc)])
        return MALFORMED
    max_w = 1 if args.witnesses == "first" else None
    report = _VALIDATORS[kind](value, max_witnesses=max_w)
    if report.structural:
        _report("validate", _digest(data), "malformed", witnesses=report.structural)
        code = MALFORMED
    elif report.valid:
        _report("validate", _digest(data), "valid", notes=report.notes)
        code = OK
    else:
        _report("validate", _digest(data), "invalid",
                witnesses=[v.render() for v in report.violations])
        code = INVALID
    print(f"# validate: {time.monotonic() - t0:.3f}s", file=sys.stderr)
    return code


_CONVERSIONS = {
    ("category", "monad"): lambda c: ("monad", monadwarp.category_to_monad(c)),
    ("monad", "category"): lambda m: ("category", monadwarp.monad_to_category(m)),
    ("warping", "wreath"): lambda w: ("wreath", correspond.warping_to_wreath(w)),
    ("warping", "monad"): lambda w: ("monad", _strip_ab(correspond.warping_to_monad(w))),
    ("warping", "mw"): lambda w: ("mw_monad", monadwarp.mw_view(w)),
    ("wreath", "warping"): lambda w: ("warping", correspond.wreath_to_warping(w)),
    ("wreath", "monad"): lambda w: ("monad", _strip_ab(correspond.wreath_to_monad(w))),
    ("mw_monad", "warping"): lambda m: ("warping", monadwarp.mw_to_warping(m)),
    ("mw_monad", "wreath"): lambda m: ("wreath", correspond.warping_to_wreath(monadwarp.mw_to_warping(m))),
    ("mw_monad", "monad"): lambda m: ("monad", _strip_ab(correspond.warping_to_monad(monadwarp.mw_to_warping(m)))),
}


def _strip_ab(m):
    return monadwarp.SpanMonad(m.carrier, m.mult, m.unit)


def cmd_convert(args) -> int:
    target = {"mw": "mw"}.get(args.to, args.to)
    try:
        data, kind, value = _load(args.file)
    except (OSError, SchemaError, StructureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return MALFORMED
    conv = _CONVERSIONS.get((kind, "mw" if target == "mw_monad" else target))
    if conv is None:
        print(f"error: no conversion from {kind} to {args.to}", file=sys.stderr)
        return MALFORMED
    try:
        out_kind, out = conv(value)
    except InvalidStructure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INVALID
    sys.stdout.write(emit_structure(out_kind, out, args.format))
    return OK


def cmd_kleisli(args) -> int:
    try:
        data, kind, value = _load(args.file)
    except (OSError, SchemaError, StructureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return MALFORMED
    try:
        if kind == "mw_monad":
            out_kind, out = "category", correspond.kleisli_category(value)
        elif kind == "skew_warping":
            out_kind, out = "skew_bicategory", skew.skew_kleisli(value)
        else:
            print(f"error: kleisli needs an mw_monad or skew_warping file, got {kind}",
                  file=sys.stderr)
            return MALFORMED
    except (InvalidStructure, StructureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INVALID
    sys.stdout.write(emit_structure(out_kind, out, args.format))
    return OK


def _parse_obj_map(text, objects):
    mapping = {}
    for part in text.split(","):
        src, _, dst = part.partition(":")
        mapping[src.strip()] = dst.strip()
    return finfunction(objects, objects, mapping)


def _emit_instances(args, kind, instances):
    if args.emit_dir:
        out = Path(args.emit_dir)
        out.mkdir(parents=True, exist_ok=True)
        for i, inst in enumerate(instances):
            (out / f"{kind}_{i:04d}.json").write_text(emit_structure(kind, inst))


def cmd_enumerate(args) -> int:
    t0 = time.monotonic()
    try:
        data, kind, value = _load(args.file)
    except (OSError, SchemaError, StructureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return MALFORMED
    counts = {}
    notes = []
    try:
        if kind == "category" and args.kind in ("mw_monad", "warping", "wreath", "monad"):
            correspond.check_bounds(value, args.max_objects, args.max_hom)
            mon = monadwarp.category_to_monad(value)
            if args.obj_map:
                maps = [_parse_obj_map(args.obj_map, value.objects)]
            else:
                maps = list(correspond.enumerate_object_maps(value))
            total = 0
            for t in maps:
                endo = restrict_star(t)
                label = ",".join(f"{k}:{v}" for k, v in sorted(t.as_dict().items()))
                if args.kind == "mw_monad":
                    cands = list(correspond.enumerate_mw_candidates(value, t))
                    found = [c for c in cands if monadwarp.validate_mw_monad(c).valid]
                    counts[label] = {"candidates": len(cands), "valid": len(found)}
                elif args.kind == "warping":
                    found = list(correspond.enumerate_warpings(mon, endo))
                    counts[label] = {"valid": len(found)}
                elif args.kind == "wreath":
                    found = list(correspond.enumerate_wreaths(mon, endo))
                    counts[label] = {"valid": len(found)}
                else:
                    found = list(correspond.enumerate_ab_monads(mon, endo))
                    counts[label] = {"valid": len(found)}
                total += len(found)
                if args.emit_dir and found:
                    emit_kind = {"mw_monad": "mw_monad", "warping": "warping",
                                 "wreath": "wreath", "monad": "monad"}[args.kind]
                    conv = {"mw_monad": lambda c: c,
                            "warping": lambda c: c,
                            "wreath": lambda c: c,
                            "monad": _strip_ab}[args.kind]
                    _emit_instances(args, emit_kind, [conv(f) for f in found])
            counts["total"] = total
        elif kind == "mw_monad" and args.kind in ("e_family", "em_algebra"):
            correspond.check_bounds(value.base, args.max_objects, args.max_hom)
            objs = [args.at] if args.at else list(value.base.objects)
            total = 0
            for a in objs:
                if args.kind == "e_family":
                    n = len(list(correspond.enumerate_e_families(value, a)))
                else:
                    n = len(list(correspond.enumerate_em_algebras(value, a)))
                counts[str(a)] = {"valid": n}
                total += n
            counts["total"] = total
        elif kind == "skew_bicategory" and args.kind == "skew_warping":
            if len(value.objects) > args.max_objects:
                raise correspond.BoundsExceeded(
                    f"object count {len(value.objects)} exceeds the limit {args.max_objects}")
            for cat in value.hom.values():
                if len(cat.objects) > args.max_hom:
                    raise correspond.BoundsExceeded(
                        f"hom-category size {len(cat.objects)} exceeds the limit {args.max_hom}")
            found = list(skew.enumerate_skew_warpings(value, notes=notes))
            counts["total"] = len(found)
            if args.emit_dir:
                _emit_instances(args, "skew_warping", found)
        else:
            print(f"error: cannot enumerate {args.kind} over a {kind} file", file=sys.stderr)
            return MALFORMED
    except correspond.BoundsExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return MALFORMED
    _report("enumerate", _digest(data), "counts", counts=counts, notes=sorted(set(notes)))
    print(f"# enumerate: {time.monotonic() - t0:.3f}s", file=sys.stderr)
    return OK


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="spanwarp",
        description="Validate and transform finite monads, warpings, wreaths and skew structures.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="run the kind's validator on a structure file")
    p.add_argument("file")
    p.add_argument("--witnesses", choices=("all", "first"), default="all")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("convert", help="translate between structure kinds")
    p.add_argument("file")
    p.add_argument("--to", required=True,
                   choices=("warping", "wreath", "monad", "mw", "category"))
    p.add_argument("--format", choices=("canonical", "pretty"), default="canonical")
    p.set_defaults(fn=cmd_convert)

    p = sub.add_parser("kleisli", help="build the Kleisli structure")
    p.add_argument("file")
    p.add_argument("--format", choices=("canonical", "pretty"), default="canonical")
    p.set_defaults(fn=cmd_kleisli)

    p = sub.add_parser("enumerate", help="count (and optionally emit) valid instances")
    p.add_argument("file")
    p.add_argument("--kind", required=True,
                   choices=("mw_monad", "warping", "wreath", "monad", "e_family",
                            "em_algebra", "skew_warping"))
    p.add_argument("--obj-map", help="restrict to one object map, e.g. 'x:x' or '0:1,1:1'")
    p.add_argument("--at", help="restrict algebra enumeration to one object")
    p.add_argument("--max-objects", type=int, default=correspond.MAX_OBJECTS)
    p.add_argument("--max-hom", type=int, default=correspond.MAX_HOM)
    p.add_argument("--emit-dir", help="write every instance as a canonical file")
    p.set_defaults(fn=cmd_enumerate)

    args = parser.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
