"""The builtin verification corpus and the corpus file format.

The builtin corpus holds every module with at most eight elements over each
of Z, Z/2, Z/4 and Z/6: small enough that every hom-set the suites touch
stays exhaustively enumerable (the default corpus never triggers sampling),
rich enough to separate the integral from the modular behaviour.  Extension
pairs are capped at |M|*|N| <= 8 for the same reason.

A corpus file is a JSON object with any of the keys "extensions",
"coextensions", "torsors" and "cotorsors", each a list of the respective
descriptors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .core import INTEGERS, Module, Ring
from .cotorsors import Coextension, CotorsorStructure
from .extensions import Extension
from .extgroup import enumerate_extensions, invariant_factor_chains
from .serialize import (
    InvalidDescriptor,
    coextension_from_json,
    cotorsor_from_json,
    extension_from_json,
    torsor_from_json,
)
from .torsors import TorsorStructure

BUILTIN_RINGS: tuple[Ring, ...] = (INTEGERS, Ring(2), Ring(4), Ring(6))
MODULE_SIZE_CAP = 8
PAIR_PRODUCT_CAP = 8


@dataclass(frozen=True)
class Corpus:
    """Everything a verification suite runs over."""

    pairs: tuple[tuple[Module, Module], ...]
    extensions: tuple[Extension, ...]
    coextensions: tuple[Coextension, ...]
    torsors: tuple[TorsorStructure, ...] = ()
    cotorsors: tuple[CotorsorStructure, ...] = ()


@lru_cache(maxsize=None)
def builtin_modules(ring: Ring, size_cap: int = MODULE_SIZE_CAP) -> tuple[Module, ...]:
    """All modules with at most size_cap elements over the ring, sorted by
    (order, factors)."""
    out = []
    for order in range(1, size_cap + 1):
        for factors in invariant_factor_chains(order, ring):
            out.append(Module(ring, factors))
    return tuple(sorted(out, key=lambda m: (m.order(), m.factors)))


@lru_cache(maxsize=None)
def builtin_pairs(ring: Ring,
                  product_cap: int = PAIR_PRODUCT_CAP) -> tuple[tuple[Module, Module], ...]:
    mods = builtin_modules(ring)
    return tuple(
        (m, n)
        for m in mods
        for n in mods
        if m.order() * n.order() <= product_cap
    )


@lru_cache(maxsize=None)
def builtin_corpus() -> Corpus:
    """Pairs over every builtin ring plus one representative extension per
    isomorphism class for each pair, with their dual coextensions."""
    from .extgroup import coextension_from_extension

    pairs = []
    extensions = []
    for ring in BUILTIN_RINGS:
        for m, n in builtin_pairs(ring):
            pairs.append((m, n))
            extensions.extend(enumerate_extensions(m, n).classes)
    coextensions = [coextension_from_extension(E) for E in extensions]
    return Corpus(tuple(pairs), tuple(extensions), tuple(coextensions))


def load_corpus(path: str) -> Corpus:
    """Read a corpus file; pairs are derived from the objects it contains."""
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise InvalidDescriptor("corpus file must hold a JSON object")
    extensions = tuple(extension_from_json(o) for o in data.get("extensions", ()))
    coextensions = tuple(coextension_from_json(o) for o in data.get("coextensions", ()))
    torsors = tuple(torsor_from_json(o) for o in data.get("torsors", ()))
    cotorsors = tuple(cotorsor_from_json(o) for o in data.get("cotorsors", ()))
    pairs = []
    seen = set()
    for E in extensions:
        if (E.M, E.N) not in seen:
            seen.add((E.M, E.N))
            pairs.append((E.M, E.N))
    for C in coextensions:
        if (C.M, C.N) not in seen:
            seen.add((C.M, C.N))
            pairs.append((C.M, C.N))
    return Corpus(tuple(pairs), extensions, coextensions, torsors, cotorsors)
