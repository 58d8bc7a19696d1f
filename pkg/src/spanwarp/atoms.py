"""Canonical atoms for elements of finite sets.

Plain strings are user-chosen atoms.  Three structured tags are reserved
for derived data: ``Unit`` (the singleton diagonal entry of an identity
span), ``Star`` (the singleton entry of a function-induced span), and
``Path`` (an element of a composite span in flattened normal form).
``Pair`` backs product categories.  Every atom renders to a string
deterministically; the rendering induces a total order used wherever
output has to be reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True)
class Unit:
    """The one element of an identity span at object ``obj``."""

    obj: str


@dataclass(frozen=True)
class Star:
    """The one element of a function-induced span, indexed by the argument."""

    obj: str


@dataclass(frozen=True)
class Path:
    """Flattened element of a composite span.

    ``seq`` alternates entry atoms and pivot atoms, first-applied factor
    first, and contains at least two entry atoms.  Factors are never
    ``Path`` (flattening) and never ``Unit`` (elision).
    """

    seq: tuple

    def factors(self) -> tuple:
        return self.seq[0::2]

    def pivots(self) -> tuple:
        return self.seq[1::2]


@dataclass(frozen=True)
class Pair:
    fst: "Atom"
    snd: "Atom"


Atom = Union[str, Unit, Star, Path, Pair]


def render_atom(a: Atom) -> str:
    if isinstance(a, str):
        return a
    if isinstance(a, Unit):
        return f"1@{a.obj}"
    if isinstance(a, Star):
        return f"*{a.obj}"
    if isinstance(a, Path):
        return "[" + ";".join(render_atom(p) for p in a.seq) + "]"
    if isinstance(a, Pair):
        return f"({render_atom(a.fst)},{render_atom(a.snd)})"
    raise TypeError(f"not an atom: {a!r}")


def atom_key(a: Atom):
    """Sort key giving a deterministic total order across atom kinds."""
    if isinstance(a, str):
        return (0, a)
    if isinstance(a, Unit):
        return (1, a.obj)
    if isinstance(a, Star):
        return (2, a.obj)
    if isinstance(a, Path):
        return (3, tuple(atom_key(p) for p in a.seq))
    if isinstance(a, Pair):
        return (4, atom_key(a.fst), atom_key(a.snd))
    raise TypeError(f"not an atom: {a!r}")
