"""Strictified model of the bicategory of spans of finite sets.

A span ``X -> Y`` is a matrix of finite sets indexed by ``X x Y``; a
2-cell is a matrix of functions.  Horizontal composition follows the
matrix formula ``MN(x, y) = sum_z M(z, y) x N(x, z)`` with the right
factor applied first.

Composites are kept in a normal form that makes horizontal composition
literally associative and unital, so 2-cell equations decide by pointwise
comparison with no coherence bookkeeping:

* an element of a composite is a flat alternating sequence of entry
  atoms and pivot atoms (a ``Path``), first-applied factor first;
* ``Unit`` atoms (identity-span entries) are elided together with one
  flanking pivot;
* a run of adjacent ``Star`` atoms (function-span entries) collapses
  onto its last member, and a star whose source boundary equals its own
  index is elided outright -- so composing function-induced spans lands
  exactly on the span induced by the composite function.

Every constructor checks that normalization stays injective on the entry
it builds and raises ``SpanError`` otherwise; with the reserved-atom
discipline below this never fires.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Mapping, Optional, Sequence, Union

from .atoms import Atom, Path, Star, Unit, render_atom
from .fincore import FinFunction, FinSet, StructureError, finfunction, identity_function


class SpanError(StructureError):
    pass


class PastingTypeError(SpanError):
    """An expression's boundaries do not meet."""


@dataclass(frozen=True)
class Span:
    """Matrix of finite sets between two index sets.

    Reserved atoms may only occur in their canonical positions: ``Unit(v)``
    alone at the diagonal entry ``(v, v)`` and ``Star(v)`` at an entry
    ``(u, v)`` with ``u != v``.
    """

    src: FinSet
    dst: FinSet
    entry: dict

    def __post_init__(self):
        for x in self.src:
            for y in self.dst:
                if (x, y) not in self.entry:
                    raise SpanError(f"missing entry at ({render_atom(x)},{render_atom(y)})")
        for (x, y), cell in self.entry.items():
            if x not in self.src or y not in self.dst:
                raise SpanError(f"entry key ({render_atom(x)},{render_atom(y)}) outside the frame")
            for a in cell:
                if isinstance(a, Unit) and (a.obj != x or x != y):
                    raise SpanError(f"unit atom {render_atom(a)} off the diagonal")
                if isinstance(a, Star) and (a.obj != y or x == y):
                    raise SpanError(f"star atom {render_atom(a)} at the wrong entry")

    def entry_of(self, x, y) -> FinSet:
        return self.entry[(x, y)]

    def frame(self) -> tuple:
        return (self.src, self.dst)


def span(src: FinSet, dst: FinSet, nonempty: dict) -> Span:
    """Build a span from the nonempty entries only."""
    entry = {(x, y): FinSet(()) for x in src for y in dst}
    for k, v in nonempty.items():
        entry[k] = v if isinstance(v, FinSet) else FinSet(tuple(v))
    return Span(src, dst, entry)


def identity_span(x: FinSet) -> Span:
    return span(x, x, {(a, a): FinSet((Unit(a),)) for a in x})


def restrict_star(f: FinFunction) -> Span:
    """The span induced by a function, singleton at ``(f v, v)``.

    Fixed points carry the unit atom, so the identity function induces
    the identity span on the nose.
    """
    entries = {}
    for v in f.dom:
        u = f(v)
        entries[(u, v)] = FinSet((Unit(v) if u == v else Star(v),))
    return span(f.cod, f.dom, entries)


def star_map_of(s: Span) -> Optional[FinFunction]:
    """Recover ``f`` with ``s == restrict_star(f)``, or None."""
    mapping = {}
    for v in s.dst:
        hits = [(u, tuple(s.entry_of(u, v))) for u in s.src if len(s.entry_of(u, v))]
        if len(hits) != 1:
            return None
        u, cell = hits[0]
        want = Unit(v) if u == v else Star(v)
        if cell != (want,):
            return None
        mapping[v] = u
    return finfunction(s.dst, s.src, mapping)


def explode(elem: Atom) -> tuple:
    return elem.seq if isinstance(elem, Path) else (elem,)


def normalize(seq: Sequence[Atom], lo: Atom, hi: Atom) -> Atom:
    """Normal form of an alternating factor/pivot sequence at entry (lo, hi)."""
    fs = list(seq[0::2])
    ps = list(seq[1::2])
    assert len(fs) == len(ps) + 1

    def drop(i: int):
        del fs[i]
        if ps:
            del ps[i if i < len(ps) else i - 1]

    i = 0
    while i < len(fs):
        if isinstance(fs[i], Unit):
            drop(i)
        else:
            i += 1
    i = 0
    while i + 1 < len(fs):
        if isinstance(fs[i], Star) and isinstance(fs[i + 1], Star):
            drop(i)
        else:
            i += 1
    i = 0
    while i < len(fs):
        before = ps[i - 1] if i else lo
        if isinstance(fs[i], Star) and before == fs[i].obj:
            drop(i)
        else:
            i += 1

    if not fs:
        if lo != hi:
            raise SpanError("empty path across distinct objects")
        return Unit(lo)
    if len(fs) == 1:
        return fs[0]
    seq_out = [fs[0]]
    for p, f in zip(ps, fs[1:]):
        seq_out += [p, f]
    return Path(tuple(seq_out))


def composite_elements(word: Sequence[Span], x, y) -> Iterator[tuple]:
    """Elements of the composite of ``word`` at entry ``(x, y)``.

    ``word`` is in diagram order (leftmost factor applied last).  Yields
    ``(element, parts)`` where ``parts`` alternates factor elements and
    pivots in application order.
    """
    if not word:
        raise SpanError("empty word has no canonical frame")
    order = list(reversed(word))  # application order
    mids = [s.dst for s in order[:-1]]

    def walk(i, start):
        s = order[i]
        if i == len(order) - 1:
            for e in s.entry_of(start, y):
                yield (e,)
            return
        for z in mids[i]:
            for e in s.entry_of(start, z):
                for rest in walk(i + 1, z):
                    yield (e, z) + rest

    for parts in walk(0, x):
        flat = []
        for j, p in enumerate(parts):
            flat.extend(explode(p) if j % 2 == 0 else [p])
        yield normalize(flat, x, y), parts


def compose_word(word: Sequence[Span]) -> Span:
    """Composite span of a nonempty word, with injectivity check per entry."""
    if not word:
        raise SpanError("empty word has no canonical frame")
    src = word[-1].src
    dst = word[0].dst
    for left, right in zip(word, word[1:]):
        if right.dst != left.src:
            raise PastingTypeError("word factors do not meet")
    entries = {}
    for x in src:
        for y in dst:
            elems = [e for e, _ in composite_elements(word, x, y)]
            if len(set(elems)) != len(elems):
                raise SpanError(f"normal-form collision at ({render_atom(x)},{render_atom(y)})")
            entries[(x, y)] = FinSet(tuple(elems))
    return Span(src, dst, entries)


def compose_spans(m: Span, n: Span) -> Span:
    """Composite ``m . n`` (n applied first); requires ``n.dst == m.src``."""
    if n.dst != m.src:
        raise PastingTypeError("spans do not meet")
    return compose_word([m, n])


@dataclass(frozen=True)
class Cell2:
    """Matrix of functions between two parallel spans."""

    dom: Span
    cod: Span
    comp: "frozenset[tuple[tuple, FinFunction]]"

    def __post_init__(self):
        if self.dom.frame() != self.cod.frame():
            raise SpanError("2-cell between spans with different frames")
        comps = dict(self.comp)
        for x in self.dom.src:
            for y in self.dom.dst:
                fn = comps.get((x, y))
                if fn is None:
                    raise SpanError(f"missing component at ({render_atom(x)},{render_atom(y)})")
                if fn.dom != self.dom.entry_of(x, y) or fn.cod != self.cod.entry_of(x, y):
                    raise SpanError(f"component boundary mismatch at ({render_atom(x)},{render_atom(y)})")

    def at(self, x, y) -> FinFunction:
        for k, fn in self.comp:
            if k == (x, y):
                return fn
        raise KeyError((x, y))

    def __call__(self, x, y, e) -> Atom:
        return self.at(x, y)(e)


def cell(dom: Span, cod: Span, comp: dict) -> Cell2:
    return Cell2(dom, cod, frozenset(comp.items()))


def identity_cell(s: Span) -> Cell2:
    return cell(s, s, {(x, y): identity_function(s.entry_of(x, y)) for x in s.src for y in s.dst})


def vcompose(a: Cell2, b: Cell2) -> Cell2:
    """Vertical composite ``a . b`` (b applied first); needs ``b.cod == a.dom``."""
    if b.cod != a.dom:
        raise PastingTypeError("2-cells do not stack")
    comp = {}
    for x in b.dom.src:
        for y in b.dom.dst:
            comp[(x, y)] = finfunction(
                b.dom.entry_of(x, y), a.cod.entry_of(x, y),
                {e: a(x, y, b(x, y, e)) for e in b.dom.entry_of(x, y)})
    return cell(b.dom, a.cod, comp)


def whisker(left: Sequence[Span], c: Cell2, right: Sequence[Span]) -> Cell2:
    """Horizontal whiskering ``left . c . right`` by identity cells."""
    if not left and not right:
        return c
    s_r = compose_word(list(right)) if right else identity_span(c.dom.src)
    s_l = compose_word(list(left)) if left else identity_span(c.dom.dst)
    dom3 = [s_l, c.dom, s_r]
    cod3 = [s_l, c.cod, s_r]
    dom_span = compose_word(dom3)
    cod_span = compose_word(cod3)
    comp = {}
    for x in dom_span.src:
        for y in dom_span.dst:
            mapping = {}
            for e, parts in composite_elements(dom3, x, y):
                r_el, u, mid, v, l_el = parts
                out = c(u, v, mid)
                flat = list(explode(r_el)) + [u] + list(explode(out)) + [v] + list(explode(l_el))
                mapping[e] = normalize(flat, x, y)
            comp[(x, y)] = finfunction(dom_span.entry_of(x, y), cod_span.entry_of(x, y), mapping)
    return cell(dom_span, cod_span, comp)


@dataclass(frozen=True)
class EqResult:
    equal: bool
    witness: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.equal


def cells_equal(a: Cell2, b: Cell2) -> EqResult:
    """Pointwise equality; on failure carries (entry, element, lhs, rhs)."""
    if a.dom != b.dom or a.cod != b.cod:
        return EqResult(False, ("frame", a.dom.frame(), b.dom.frame()))
    for x in a.dom.src:
        for y in a.dom.dst:
            for e in a.dom.entry_of(x, y):
                va, vb = a(x, y, e), b(x, y, e)
                if va != vb:
                    return EqResult(False, ((x, y), e, va, vb))
    return EqResult(True)


# --- pasting expressions -------------------------------------------------

@dataclass(frozen=True)
class BasicCell:
    name: str


@dataclass(frozen=True)
class IdentityOn:
    word: tuple


@dataclass(frozen=True)
class Whiskered:
    left: tuple
    body: "PastingExpr"
    right: tuple


@dataclass(frozen=True)
class Stack:
    parts: tuple  # last element applied first


PastingExpr = Union[BasicCell, IdentityOn, Whiskered, Stack]


def wh(left: Sequence[str], body, right: Sequence[str]) -> Whiskered:
    if isinstance(body, str):
        body = BasicCell(body)
    return Whiskered(tuple(left), body, tuple(right))


def stack(*parts) -> Stack:
    return Stack(tuple(BasicCell(p) if isinstance(p, str) else p for p in parts))


def ident(*word: str) -> IdentityOn:
    return IdentityOn(tuple(word))


Env = Mapping[str, Union[Span, Cell2]]


def _env_span(env: Env, name: str) -> Span:
    v = env.get(name)
    if not isinstance(v, Span):
        raise PastingTypeError(f"{name!r} does not name a span")
    return v


def eval_pasting(e: PastingExpr, env: Env) -> Cell2:
    """Evaluate a pasting expression to a concrete 2-cell.

    Raises ``PastingTypeError`` naming the first boundary that fails to
    meet; evaluation of a well-typed expression is total.
    """
    if isinstance(e, BasicCell):
        v = env.get(e.name)
        if not isinstance(v, Cell2):
            raise PastingTypeError(f"{e.name!r} does not name a 2-cell")
        return v
    if isinstance(e, IdentityOn):
        if not e.word:
            raise PastingTypeError("identity on the empty word needs a named identity span")
        return identity_cell(compose_word([_env_span(env, n) for n in e.word]))
    if isinstance(e, Whiskered):
        body = eval_pasting(e.body, env)
        return whisker([_env_span(env, n) for n in e.left], body,
                       [_env_span(env, n) for n in e.right])
    if isinstance(e, Stack):
        if not e.parts:
            raise PastingTypeError("empty vertical composite")
        cells = [eval_pasting(p, env) for p in e.parts]
        out = cells[-1]
        for i in range(len(cells) - 2, -1, -1):
            nxt = cells[i]
            if nxt.dom != out.cod:
                raise PastingTypeError(
                    f"vertical composite mismatch between factor {i + 1} and factor {i}")
            out = vcompose(nxt, out)
        return out
    raise PastingTypeError(f"not a pasting expression: {e!r}")


def random_span(rng, src: FinSet, dst: FinSet, max_entry: int = 2, tag: str = "a") -> Span:
    entries = {}
    count = itertools.count()
    for x in src:
        for y in dst:
            k = rng.randrange(max_entry + 1)
            entries[(x, y)] = FinSet(tuple(f"{tag}{next(count)}" for _ in range(k)))
    return Span(src, dst, entries)
