"""Torsors for the group object on the trivial extension.

A torsor over M is a surjection f: P -> M with a simply transitive fiberwise
action of N, encoded as a single morphism N (+) P -> P over M.  Extensions
induce torsors by translating along the kernel embedding, and that
assignment is an equivalence: its quasi-inverse recovers the embedding as
the action on zero, and the induced hom-sets coincide exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (
    AxiomViolation,
    ModElement,
    Module,
    Morphism,
    ParentMismatch,
    direct_sum,
    fiber_product,
    find_morphism,
    hom_enumerate,
    is_isomorphism,
    mediate_fiber_product,
)
from .extensions import Extension, NotSurjective, is_extension_morphism, trivial_extension
from .reports import CheckReport, law


@dataclass(frozen=True)
class TorsorStructure:
    """A surjection f: P -> M together with an action of N on its fibers."""

    f: Morphism
    acting_module: Module
    action: Morphism  # N (+) P -> P

    def __post_init__(self):
        ds = direct_sum(self.acting_module, self.P)
        if self.action.source != ds.module or self.action.target != self.P:
            raise ParentMismatch("action must map N (+) P to P")
        if not self.f.is_surjective():
            raise NotSurjective(f"{self.f} is not onto")

    @property
    def P(self) -> Module:
        return self.f.source

    @property
    def M(self) -> Module:
        return self.f.target

    @property
    def N(self) -> Module:
        return self.acting_module

    def pair(self, n: ModElement, p: ModElement) -> ModElement:
        ds = direct_sum(self.N, self.P)
        return ds.include_left(n) + ds.include_right(p)

    def act(self, n: ModElement, p: ModElement) -> ModElement:
        return self.action(self.pair(n, p))


def action_base(f: Morphism, N: Module) -> Morphism:
    """The map N (+) P -> M sending (n, p) to f(p): the object the action
    acts from, seen over the base."""
    ds = direct_sum(N, f.source)
    return f @ ds.project_right


def product_comparison(f: Morphism, N: Module) -> Morphism:
    """The comparison (n, p) -> ((f(p), n), p) from N (+) P to the fiber
    product of the trivial extension with f; an isomorphism whenever f is an
    extension with kernel N."""
    trivial = trivial_extension(f.target, N)
    fp = fiber_product(trivial.f, f)
    ds = direct_sum(N, f.source)
    bundle = direct_sum(f.target, N)
    into_mn = (bundle.include_left @ f @ ds.project_right) + (
        bundle.include_right @ ds.project_left
    )
    return mediate_fiber_product(fp, into_mn, ds.project_right)


def torsor_from_extension(E: Extension) -> TorsorStructure:
    """Translate along the kernel embedding: (n, p) acts as alpha(n) + p."""
    ds = direct_sum(E.N, E.P)
    action = (E.kernel_iso @ ds.project_left) + ds.project_right
    return TorsorStructure(E.f, E.N, action)


def extension_from_torsor(T: TorsorStructure) -> Extension:
    """Recover the kernel embedding as n -> action(n, 0); raises
    AxiomViolation when T does not satisfy the torsor axioms."""
    report = check_torsor_axioms(T)
    if not report.passed:
        failed = report.failures()[0]
        raise AxiomViolation(f"{failed.law}: {failed.counterexample}")
    ds = direct_sum(T.N, T.P)
    return Extension(T.f, T.action @ ds.include_left)


def is_torsor_morphism(S: TorsorStructure, T: TorsorStructure, h: Morphism) -> bool:
    """True iff h is over M and equivariant: h(n.p) = n.h(p), elementwise."""
    if h.source != S.P or h.target != T.P:
        raise ParentMismatch("h must map S's bundle to T's")
    if S.M != T.M or S.N != T.N:
        raise ParentMismatch("torsors must share the same base and group")
    if any(T.f(h(p)) != S.f(p) for p in S.P.elements()):
        return False
    return all(
        h(S.act(n, p)) == T.act(n, h(p))
        for n in S.N.elements()
        for p in S.P.elements()
    )


def find_torsor_morphism(S: TorsorStructure, T: TorsorStructure) -> Optional[Morphism]:
    """One torsor morphism S -> T, found by exact congruence solving; any hit
    is verified elementwise before being returned."""
    if S.M != T.M or S.N != T.N:
        raise ParentMismatch("torsors must share the same base and group")
    ds_s = direct_sum(S.N, S.P)
    ds_t = direct_sum(T.N, T.P)
    # equivariance: h o action_S - action_T o (id_N (+) h) = 0, where the
    # constant part of (id_N (+) h) contributes action_T o incl_N o proj_N
    conditions = [
        ((( T.f, None, 1),), S.f),
        (
            (
                (None, S.action, 1),
                (T.action @ ds_t.include_right, ds_s.project_right, -1),
            ),
            T.action @ ds_t.include_left @ ds_s.project_left,
        ),
    ]
    h = find_morphism(S.P, T.P, conditions)
    if h is not None and not is_torsor_morphism(S, T, h):
        raise AxiomViolation("solver produced a non-equivariant map")
    return h


def check_torsor_axioms(T: TorsorStructure) -> CheckReport:
    """Exhaustive check: the action lives over M, acts trivially at 0, and is
    simply transitive on each fiber."""
    checks = []
    elems = T.P.elements()
    ns = T.N.elements()

    bad = next(
        (
            (n, p)
            for n in ns
            for p in elems
            if T.f(T.act(n, p)) != T.f(p)
        ),
        None,
    )
    checks.append(law("action-over-base", bad is None, f"(n,p)={bad}" if bad else None))

    zero_n = T.N.zero()
    bad = next((p for p in elems if T.act(zero_n, p) != p), None)
    checks.append(law("unit", bad is None, f"p={bad}" if bad else None))

    missing = None
    ambiguous = None
    for p1 in elems:
        for p2 in elems:
            if T.f(p1) != T.f(p2):
                continue
            hits = [n for n in ns if T.act(n, p2) == p1]
            if not hits and missing is None:
                missing = (p1, p2)
            if len(hits) > 1 and ambiguous is None:
                ambiguous = (p1, p2, hits[0], hits[1])
    checks.append(
        law(
            "transitive-existence",
            missing is None,
            f"no n carries p2 to p1 for (p1,p2)={missing}" if missing else None,
        )
    )
    checks.append(
        law(
            "transitive-uniqueness",
            ambiguous is None,
            f"(p1,p2)={ambiguous[:2]} reached by n={ambiguous[2]} and n={ambiguous[3]}"
            if ambiguous
            else None,
        )
    )
    return CheckReport(f"torsor on {T.P} over {T.M}", tuple(checks))


def check_torsor_lemmas(T: TorsorStructure) -> CheckReport:
    """The two derived identities every torsor satisfies: translation by the
    action on zero, and additivity of the action in the group coordinate.
    These are theorems, so a failure indicates an implementation bug."""
    checks = []
    elems = T.P.elements()
    ns = T.N.elements()
    zero_p = T.P.zero()

    bad = next(
        (
            (n, p)
            for n in ns
            for p in elems
            if T.act(n, p) != T.act(n, zero_p) + p
        ),
        None,
    )
    checks.append(law("translation-by-zero", bad is None, f"(n,p)={bad}" if bad else None))

    bad = next(
        (
            (n1, n2, p)
            for n1 in ns
            for n2 in ns
            for p in elems
            if T.act(n1 + n2, p) != T.act(n1, T.act(n2, p))
        ),
        None,
    )
    checks.append(law("action-additivity", bad is None, f"(n1,n2,p)={bad}" if bad else None))
    return CheckReport(f"torsor lemmas on {T.P} over {T.M}", tuple(checks))


def torsor_homset_match(E: Extension, F: Extension) -> CheckReport:
    """Fullness and faithfulness made concrete: the extension morphisms
    E -> F and the torsor morphisms between the induced torsors are the same
    underlying maps."""
    te, tf = torsor_from_extension(E), torsor_from_extension(F)
    ext_homs = set()
    tor_homs = set()
    for h in hom_enumerate(E.P, F.P):
        if is_extension_morphism(E, F, h):
            ext_homs.add(h.matrix)
        if is_torsor_morphism(te, tf, h):
            tor_homs.add(h.matrix)
    same = ext_homs == tor_homs
    diff = (ext_homs ^ tor_homs) if not same else None
    checks = (
        law(
            "homsets-equal",
            same,
            f"maps in one filter only: {sorted(diff)[:3]}" if diff else None,
        ),
        law(
            "all-are-isomorphisms",
            all(
                is_isomorphism(Morphism(E.P, F.P, m)) for m in ext_homs
            ),
            None,
        ),
    )
    return CheckReport(
        f"hom-set comparison for extensions over {E.M} by {E.N}", checks
    )
