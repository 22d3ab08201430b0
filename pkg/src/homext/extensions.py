"""Extensions of M by N and the group object living on the trivial one.

An extension is a surjection f: P -> M together with a chosen embedding of N
onto ker(f).  The trivial extension is the projection M (+) N -> M, and it
carries unit / addition / inversion morphisms making it an abelian group
object in the slice category of modules over M.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    DirectSum,
    FiberProduct,
    HomextError,
    ModElement,
    Module,
    Morphism,
    ParentMismatch,
    direct_sum,
    fiber_product,
    kernel,
)
from .reports import CheckReport, law


class NotSurjective(HomextError):
    """The structure map of an extension must be onto."""


class AlphaNotKernelIso(HomextError):
    """The chosen map of N into P is not an isomorphism onto ker(f)."""


@dataclass(frozen=True)
class Extension:
    """A surjection f: P -> M with kernel_iso embedding N onto ker(f)."""

    f: Morphism
    kernel_iso: Morphism

    def __post_init__(self):
        if self.kernel_iso.target != self.f.source:
            raise ParentMismatch("kernel embedding must land in the middle module")
        if not self.f.is_surjective():
            raise NotSurjective(f"{self.f} is not onto")
        members = {x for x in self.P.elements() if self.f(x).is_zero()}
        image = {self.kernel_iso(n) for n in self.N.elements()}
        if len(image) != self.N.order() or image != members:
            raise AlphaNotKernelIso(
                "embedding is not a bijection of N onto the kernel"
            )
        assert self.P.order() == self.M.order() * self.N.order()

    @property
    def P(self) -> Module:
        return self.f.source

    @property
    def M(self) -> Module:
        return self.f.target

    @property
    def N(self) -> Module:
        return self.kernel_iso.source

    def __str__(self) -> str:
        return f"extension {self.P} -> {self.M} with kernel {self.N}"


def make_extension(P: Module, f: Morphism, alpha: Morphism) -> Extension:
    """Validated construction; P is checked against the maps for consistency."""
    if f.source != P:
        raise ParentMismatch("f must start at P")
    return Extension(f, alpha)


def trivial_extension(M: Module, N: Module) -> Extension:
    """The projection M (+) N -> M with N included as the kernel."""
    ds = direct_sum(M, N)
    return Extension(ds.project_left, ds.include_right)


def is_extension_morphism(E: Extension, F: Extension, h: Morphism) -> bool:
    """True iff h commutes with the structure maps and the kernel embeddings,
    both checked elementwise."""
    if h.source != E.P or h.target != F.P:
        raise ParentMismatch("h must map E's middle module to F's")
    if E.M != F.M or E.N != F.N:
        raise ParentMismatch("extensions must share the same M and N")
    if any(F.f(h(p)) != E.f(p) for p in E.P.elements()):
        return False
    return all(h(E.kernel_iso(n)) == F.kernel_iso(n) for n in E.N.elements())


@dataclass(frozen=True)
class GroupObjectStructure:
    """Unit / addition / inversion on the trivial extension, as morphisms
    over M.  ``add`` is defined on the fiber product of the projection with
    itself; ``pairs`` carries that fiber product for evaluation."""

    carrier: Extension
    unit: Morphism
    add: Morphism
    inv: Morphism
    pairs: FiberProduct

    @property
    def bundle(self) -> DirectSum:
        return direct_sum(self.carrier.M, self.carrier.N)


def group_object(M: Module, N: Module) -> GroupObjectStructure:
    """(m, 0) as unit, fiberwise addition of the N parts, fiberwise negation."""
    carrier = trivial_extension(M, N)
    ds = direct_sum(M, N)
    fp = fiber_product(carrier.f, carrier.f)
    keep_n = ds.include_right @ ds.project_right
    add = fp.to_left + (keep_n @ fp.to_right)
    inv = (ds.include_left @ ds.project_left) - keep_n
    return GroupObjectStructure(carrier, ds.include_left, add, inv, fp)


def _pair_lookup(fp: FiberProduct) -> dict:
    return {
        (fp.to_left(w), fp.to_right(w)): w
        for w in fp.module.elements()
    }


def check_group_axioms(G: GroupObjectStructure) -> CheckReport:
    """Exhaustive elementwise verification of the group-object diagrams in
    the slice over M; failures carry a counterexample element."""
    E = G.carrier
    f = E.f
    elems = E.P.elements()
    pair_of = _pair_lookup(G.pairs)

    def added(x: ModElement, y: ModElement) -> ModElement:
        return G.add(pair_of[(x, y)])

    checks = []

    bad = next((m for m in E.M.elements() if f(G.unit(m)) != m), None)
    checks.append(law("unit-section", bad is None, f"m={bad}" if bad else None))

    bad = next(
        ((x, y) for (x, y) in pair_of if f(added(x, y)) != f(x)), None
    )
    checks.append(law("add-over-base", bad is None, f"pair={bad}" if bad else None))

    bad = next((x for x in elems if f(G.inv(x)) != f(x)), None)
    checks.append(law("inv-over-base", bad is None, f"x={bad}" if bad else None))

    bad = None
    for x in elems:
        for y in elems:
            if f(x) != f(y):
                continue
            for z in elems:
                if f(z) != f(x):
                    continue
                if added(added(x, y), z) != added(x, added(y, z)):
                    bad = (x, y, z)
                    break
            if bad:
                break
        if bad:
            break
    checks.append(law("associativity", bad is None, f"triple={bad}" if bad else None))

    bad = next((x for x in elems if added(G.unit(f(x)), x) != x), None)
    checks.append(law("unit-left", bad is None, f"x={bad}" if bad else None))

    bad = next((x for x in elems if added(x, G.unit(f(x))) != x), None)
    checks.append(law("unit-right", bad is None, f"x={bad}" if bad else None))

    bad = next((x for x in elems if added(x, G.inv(x)) != G.unit(f(x))), None)
    checks.append(law("inverse-right", bad is None, f"x={bad}" if bad else None))

    bad = next((x for x in elems if added(G.inv(x), x) != G.unit(f(x))), None)
    checks.append(law("inverse-left", bad is None, f"x={bad}" if bad else None))

    bad = next(
        ((x, y) for (x, y) in pair_of if added(x, y) != added(y, x)), None
    )
    checks.append(law("commutativity", bad is None, f"pair={bad}" if bad else None))

    return CheckReport(f"group object on {E.P} over {E.M}", tuple(checks))
