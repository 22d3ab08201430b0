"""JSON descriptors for every value the command line reads or writes.

The formats are the wire contract of the library:

    ring           {"kind": "Z"} or {"kind": "Zmod", "n": 4}
    module         {"ring": ..., "factors": [2, 4]}
    morphism       {"source": ..., "target": ..., "matrix": [[...]]}
    extension      {"P": ..., "f": ..., "alpha": ...}
    coextension    {"P": ..., "f": ..., "alpha": ...}
    torsor         {"N": ..., "P": ..., "f": ..., "tau": ...}
    cotorsor       {"M": ..., "P": ..., "f": ..., "tau": ...}
    classification {"M": ..., "N": ..., "ext_invariant_factors": [...],
                    "classes": [...], "split_index": k, "baer_table": [[...]]}

Parsing re-runs full validation, so semantic errors surface as the same
typed exceptions the constructors raise.
"""

from __future__ import annotations

from .core import INTEGERS, HomextError, Module, Morphism, Ring
from .cotorsors import Coextension, CotorsorStructure, make_coextension
from .extensions import Extension, make_extension
from .extgroup import ExtClassification, table_invariant_factors
from .torsors import TorsorStructure


class InvalidDescriptor(HomextError):
    """Structurally malformed JSON input."""


def _expect_dict(obj, what: str) -> dict:
    if not isinstance(obj, dict):
        raise InvalidDescriptor(f"{what} must be a JSON object")
    return obj


def ring_to_json(ring: Ring) -> dict:
    if ring.is_integers:
        return {"kind": "Z"}
    return {"kind": "Zmod", "n": ring.modulus}


def ring_from_json(obj) -> Ring:
    obj = _expect_dict(obj, "ring")
    kind = obj.get("kind")
    if kind == "Z":
        return INTEGERS
    if kind == "Zmod":
        n = obj.get("n")
        if not isinstance(n, int):
            raise InvalidDescriptor("Zmod ring needs an integer 'n'")
        return Ring(n)
    raise InvalidDescriptor(f"unknown ring kind {kind!r}")


def module_to_json(module: Module) -> dict:
    return {"ring": ring_to_json(module.ring), "factors": list(module.factors)}


def module_from_json(obj) -> Module:
    obj = _expect_dict(obj, "module")
    factors = obj.get("factors")
    if not isinstance(factors, list) or not all(isinstance(d, int) for d in factors):
        raise InvalidDescriptor("module 'factors' must be a list of integers")
    return Module(ring_from_json(obj.get("ring")), tuple(factors))


def morphism_to_json(h: Morphism) -> dict:
    return {
        "source": module_to_json(h.source),
        "target": module_to_json(h.target),
        "matrix": [list(row) for row in h.matrix],
    }


def morphism_from_json(obj) -> Morphism:
    obj = _expect_dict(obj, "morphism")
    matrix = obj.get("matrix")
    if not isinstance(matrix, list) or not all(isinstance(r, list) for r in matrix):
        raise InvalidDescriptor("morphism 'matrix' must be a list of rows")
    return Morphism.from_rows(
        module_from_json(obj.get("source")),
        module_from_json(obj.get("target")),
        matrix,
    )


def extension_to_json(E: Extension) -> dict:
    return {
        "P": module_to_json(E.P),
        "f": morphism_to_json(E.f),
        "alpha": morphism_to_json(E.kernel_iso),
    }


def extension_from_json(obj) -> Extension:
    obj = _expect_dict(obj, "extension")
    return make_extension(
        module_from_json(obj.get("P")),
        morphism_from_json(obj.get("f")),
        morphism_from_json(obj.get("alpha")),
    )


def coextension_to_json(E: Coextension) -> dict:
    return {
        "P": module_to_json(E.P),
        "f": morphism_to_json(E.f),
        "alpha": morphism_to_json(E.cokernel_iso),
    }


def coextension_from_json(obj) -> Coextension:
    obj = _expect_dict(obj, "coextension")
    return make_coextension(
        module_from_json(obj.get("P")),
        morphism_from_json(obj.get("f")),
        morphism_from_json(obj.get("alpha")),
    )


def torsor_to_json(T: TorsorStructure) -> dict:
    return {
        "N": module_to_json(T.N),
        "P": module_to_json(T.P),
        "f": morphism_to_json(T.f),
        "tau": morphism_to_json(T.action),
    }


def torsor_from_json(obj) -> TorsorStructure:
    obj = _expect_dict(obj, "torsor")
    return TorsorStructure(
        morphism_from_json(obj.get("f")),
        module_from_json(obj.get("N")),
        morphism_from_json(obj.get("tau")),
    )


def cotorsor_to_json(T: CotorsorStructure) -> dict:
    return {
        "M": module_to_json(T.M),
        "P": module_to_json(T.P),
        "f": morphism_to_json(T.f),
        "tau": morphism_to_json(T.coaction),
    }


def cotorsor_from_json(obj) -> CotorsorStructure:
    obj = _expect_dict(obj, "cotorsor")
    return CotorsorStructure(
        morphism_from_json(obj.get("f")),
        module_from_json(obj.get("M")),
        morphism_from_json(obj.get("tau")),
    )


def classification_to_json(cls: ExtClassification) -> dict:
    if cls.baer_table is not None:
        factors = list(table_invariant_factors(cls.baer_table, cls.split_index))
        table = [list(row) for row in cls.baer_table]
    else:
        factors = None
        table = None
    return {
        "M": module_to_json(cls.M),
        "N": module_to_json(cls.N),
        "ext_invariant_factors": factors,
        "classes": [extension_to_json(E) for E in cls.classes],
        "split_index": cls.split_index,
        "baer_table": table,
    }
