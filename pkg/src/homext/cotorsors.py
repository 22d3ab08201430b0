"""Coextensions, the cogroup on the canonical inclusion, and cotorsors.

A coextension is an injection f: N -> P with a chosen isomorphism of
coker(f) onto M.  The inclusion N -> M (+) N carries counit / coaddition /
coinversion morphisms making it a cogroup object in the category of modules
under N; that structure is pinned down by the abelian-group structure it
induces on the hom-sets out of it, and both descriptions are checked here.
A cotorsor is the dual of a torsor: a coaction P -> M (+) P with a section
axiom and a unique-decomposition axiom stated at the level of cosets of the
self-pushout P II_N P.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .core import (
    AxiomViolation,
    HomextError,
    ModElement,
    Module,
    Morphism,
    ParentMismatch,
    cokernel,
    copair_pushout,
    direct_sum,
    direct_sum_many,
    factor_through_surjection,
    find_morphism,
    hom_enumerate,
    is_isomorphism,
    pushout,
)
from .reports import CheckReport, LawCheck, law


class NotInjective(HomextError):
    """The structure map of a coextension must be one-to-one."""


class AlphaNotCokernelIso(HomextError):
    """The chosen map is not an isomorphism of coker(f) onto M."""


@dataclass(frozen=True)
class Coextension:
    """An injection f: N -> P with cokernel_iso: coker(f) -> M."""

    f: Morphism
    cokernel_iso: Morphism

    def __post_init__(self):
        if not self.f.is_injective():
            raise NotInjective(f"{self.f} is not one-to-one")
        quot, _ = cokernel(self.f)
        if self.cokernel_iso.source != quot:
            raise AlphaNotCokernelIso(
                "map must start at the canonical cokernel of f"
            )
        if not is_isomorphism(self.cokernel_iso):
            raise AlphaNotCokernelIso("map is not a bijection onto M")

    @property
    def P(self) -> Module:
        return self.f.target

    @property
    def N(self) -> Module:
        return self.f.source

    @property
    def M(self) -> Module:
        return self.cokernel_iso.target

    @property
    def project(self) -> Morphism:
        return cokernel(self.f).project

    def coset_value(self, p: ModElement) -> ModElement:
        """The value of the chosen isomorphism on the class [p]."""
        return self.cokernel_iso(self.project(p))

    def __str__(self) -> str:
        return f"coextension {self.N} -> {self.P} with cokernel {self.M}"


def make_coextension(P: Module, f: Morphism, alpha: Morphism) -> Coextension:
    """Validated construction; P is checked against the maps for consistency."""
    if f.target != P:
        raise ParentMismatch("f must land in P")
    return Coextension(f, alpha)


def trivial_coextension(M: Module, N: Module) -> Coextension:
    """The inclusion N -> M (+) N with [m, n] -> m on the cokernel."""
    ds = direct_sum(M, N)
    _, project = cokernel(ds.include_right)
    alpha = factor_through_surjection(project, ds.project_left)
    return Coextension(ds.include_right, alpha)


def is_coextension_morphism(E: Coextension, F: Coextension, h: Morphism) -> bool:
    """True iff h is under N and matches the two cokernel isomorphisms on
    every coset, checked elementwise."""
    if h.source != E.P or h.target != F.P:
        raise ParentMismatch("h must map E's module to F's")
    if E.M != F.M or E.N != F.N:
        raise ParentMismatch("coextensions must share the same M and N")
    if h @ E.f != F.f:
        return False
    return all(F.coset_value(h(p)) == E.coset_value(p) for p in E.P.elements())


# ------------------------------------------------------------- hom groups

@dataclass(frozen=True)
class CosliceHomGroup:
    """The abelian group of maps out of the inclusion N -> M (+) N to a
    fixed object f: N -> P of the category of modules under N.

    The sum of g and h sends (m, n) to g(m, 0) + h(m, 0) + f(n); the
    identity is (m, n) -> f(n).
    """

    base: Module  # M
    obj: Morphism  # f: N -> P
    members: tuple[Morphism, ...]

    @property
    def bundle(self):
        return direct_sum(self.base, self.obj.source)

    @property
    def identity(self) -> Morphism:
        return self.obj @ self.bundle.project_right

    def _restrict(self, g: Morphism) -> Morphism:
        ds = self.bundle
        return g @ ds.include_left @ ds.project_left

    def add(self, g: Morphism, h: Morphism) -> Morphism:
        return self._restrict(g) + self._restrict(h) + self.identity

    def inverse(self, g: Morphism) -> Morphism:
        return -self._restrict(g) + self.identity

    def table(self) -> tuple[tuple[int, ...], ...]:
        index = {g: i for i, g in enumerate(self.members)}
        return tuple(
            tuple(index[self.add(g, h)] for h in self.members)
            for g in self.members
        )

    def verify(self) -> CheckReport:
        checks: list[LawCheck] = []
        members = set(self.members)
        bad = next(
            (
                (g, h)
                for g in self.members
                for h in self.members
                if self.add(g, h) not in members
            ),
            None,
        )
        checks.append(law("closure", bad is None, f"pair={bad}" if bad else None))
        checks.append(law("identity-member", self.identity in members))
        bad = next(
            (g for g in self.members if self.add(self.identity, g) != g), None
        )
        checks.append(law("identity-law", bad is None, f"g={bad}" if bad else None))
        bad = next(
            (
                g
                for g in self.members
                if self.inverse(g) not in members
                or self.add(g, self.inverse(g)) != self.identity
            ),
            None,
        )
        checks.append(law("inverses", bad is None, f"g={bad}" if bad else None))
        bad = next(
            (
                (g, h)
                for g in self.members
                for h in self.members
                if self.add(g, h) != self.add(h, g)
            ),
            None,
        )
        checks.append(law("commutativity", bad is None, f"pair={bad}" if bad else None))
        bad = next(
            (
                (g, h, k)
                for g in self.members
                for h in self.members
                for k in self.members
                if self.add(self.add(g, h), k) != self.add(g, self.add(h, k))
            ),
            None,
        )
        checks.append(law("associativity", bad is None, f"triple={bad}" if bad else None))
        return CheckReport(f"hom group at {self.obj}", tuple(checks))


def coslice_hom_group(f: Morphism, M: Module) -> CosliceHomGroup:
    """Enumerate the maps (M (+) N, inclusion) -> (P, f) under N and wrap
    them with their abelian group structure."""
    ds = direct_sum(M, f.source)
    members = tuple(
        g for g in hom_enumerate(ds.module, f.target)
        if g @ ds.include_right == f
    )
    return CosliceHomGroup(M, f, members)


# ---------------------------------------------------------------- cogroup

@dataclass(frozen=True)
class CogroupStructure:
    """Counit / coaddition / coinversion on the inclusion N -> M (+) N.

    coadd lands in the self-pushout of the inclusion; ``double`` carries
    that pushout for evaluation and copairing.
    """

    M: Module
    N: Module
    counit: Morphism
    coadd: Morphism
    coinv: Morphism

    @property
    def bundle(self):
        return direct_sum(self.M, self.N)

    @property
    def inclusion(self) -> Morphism:
        return self.bundle.include_right

    @property
    def double(self):
        return pushout(self.inclusion, self.inclusion)


def cogroup(M: Module, N: Module) -> CogroupStructure:
    """(m, n) -> n as counit, (m, n) -> [(m, n), (m, 0)] as coaddition,
    (m, n) -> (-m, n) as coinversion."""
    ds = direct_sum(M, N)
    i_n = ds.include_right
    po = pushout(i_n, i_n)
    keep_m = ds.include_left @ ds.project_left
    coadd = po.from_left + (po.from_right @ keep_m)
    coinv = -keep_m + (i_n @ ds.project_right)
    return CogroupStructure(M, N, ds.project_right, coadd, coinv)


def _ternary_coproduct(inclusion: Morphism):
    """The three-fold coproduct of an object of the category under N, with
    its three coprojections and a copairing helper."""
    N = inclusion.source
    X = inclusion.target
    _, incls, _ = direct_sum_many([X, X, X])
    nn = direct_sum(N, N)
    rel = (
        (incls[0] @ inclusion @ nn.project_left)
        - (incls[1] @ inclusion @ nn.project_left)
        + (incls[1] @ inclusion @ nn.project_right)
        - (incls[2] @ inclusion @ nn.project_right)
    )
    quot, project = cokernel(rel)
    slots = [project @ incls[i] for i in range(3)]
    return quot, slots


def check_cogroup_axioms(C: CogroupStructure,
                         corpus: Sequence[Morphism] = ()) -> CheckReport:
    """Two verification layers.

    Direct diagram checks: counit laws, coassociativity inside the iterated
    coproduct, coinverse laws through the fold map, and cocommutativity.
    Corepresented checks: for every object f in ``corpus``, composing with
    the structure maps reproduces the hom-group identity, addition and
    inversion, and post-composition along any map of objects is a group
    homomorphism.
    """
    ds = C.bundle
    X = ds.module
    i_n = C.inclusion
    po = C.double
    checks: list[LawCheck] = []

    def elementwise(name: str, lhs: Morphism, rhs: Morphism):
        bad = next((x for x in X.elements() if lhs(x) != rhs(x)), None)
        checks.append(law(name, bad is None, f"x={bad}" if bad else None))

    identity_x = Morphism.identity(X)
    unit_leg = i_n @ C.counit

    checks.append(law("counit-under-fiber", C.counit @ i_n == Morphism.identity(C.N)))
    checks.append(law("coadd-under-fiber", C.coadd @ i_n == po.under_source))
    checks.append(law("coinv-under-fiber", C.coinv @ i_n == i_n))

    elementwise("counit-left", copair_pushout(po, unit_leg, identity_x) @ C.coadd, identity_x)
    elementwise("counit-right", copair_pushout(po, identity_x, unit_leg) @ C.coadd, identity_x)

    _, slots = _ternary_coproduct(i_n)
    pair12 = copair_pushout(po, slots[0], slots[1])
    pair23 = copair_pushout(po, slots[1], slots[2])
    lhs = copair_pushout(po, pair12 @ C.coadd, slots[2]) @ C.coadd
    rhs = copair_pushout(po, slots[0], pair23 @ C.coadd) @ C.coadd
    elementwise("coassociativity", lhs, rhs)

    elementwise("coinverse-left", copair_pushout(po, C.coinv, identity_x) @ C.coadd, unit_leg)
    elementwise("coinverse-right", copair_pushout(po, identity_x, C.coinv) @ C.coadd, unit_leg)

    swap = copair_pushout(po, po.from_right, po.from_left)
    elementwise("cocommutativity", swap @ C.coadd, C.coadd)

    # the two stated representatives of the coaddition agree as cosets
    keep_m = ds.include_left @ ds.project_left
    other_rep = (po.from_left @ keep_m) + po.from_right
    elementwise("representative-agreement", C.coadd, other_rep)

    for f in corpus:
        H = coslice_hom_group(f, C.M)
        tag = f"{f.source}->{f.target}"
        sub = H.verify()
        checks.append(
            law(
                f"hom-group-laws[{tag}]",
                sub.passed,
                "; ".join(c.law for c in sub.failures()) if not sub.passed else None,
            )
        )
        checks.append(law(f"identity-corepresented[{tag}]", f @ C.counit == H.identity))
        bad = next(
            (
                (g, h)
                for g in H.members
                for h in H.members
                if copair_pushout(po, g, h) @ C.coadd != H.add(g, h)
            ),
            None,
        )
        checks.append(
            law(f"addition-corepresented[{tag}]", bad is None, f"pair={bad}" if bad else None)
        )
        bad = next(
            (g for g in H.members if g @ C.coinv != H.inverse(g)), None
        )
        checks.append(
            law(f"inversion-corepresented[{tag}]", bad is None, f"g={bad}" if bad else None)
        )

    for f in corpus:
        for f2 in corpus:
            if f.source != f2.source:
                continue
            maps = [
                w for w in hom_enumerate(f.target, f2.target) if w @ f == f2
            ]
            if not maps:
                continue
            H1 = coslice_hom_group(f, C.M)
            H2 = coslice_hom_group(f2, C.M)
            bad = next(
                (
                    (w, g, h)
                    for w in maps
                    for g in H1.members
                    for h in H1.members
                    if w @ H1.add(g, h) != H2.add(w @ g, w @ h)
                ),
                None,
            )
            checks.append(
                law(
                    f"functoriality[{f.target}=>{f2.target}]",
                    bad is None,
                    f"(w,g,h)={bad}" if bad else None,
                )
            )

    return CheckReport(f"cogroup on {X} under {C.N}", tuple(checks))


# --------------------------------------------------------------- cotorsors

@dataclass(frozen=True)
class CotorsorStructure:
    """An injection f: N -> P with a coaction P -> M (+) P."""

    f: Morphism
    coacting_module: Module
    coaction: Morphism  # P -> M (+) P

    def __post_init__(self):
        ds = direct_sum(self.coacting_module, self.P)
        if self.coaction.source != self.P or self.coaction.target != ds.module:
            raise ParentMismatch("coaction must map P to M (+) P")
        if not self.f.is_injective():
            raise NotInjective(f"{self.f} is not one-to-one")

    @property
    def P(self) -> Module:
        return self.f.target

    @property
    def N(self) -> Module:
        return self.f.source

    @property
    def M(self) -> Module:
        return self.coacting_module


def coaction_base(f: Morphism, M: Module) -> Morphism:
    """The map N -> M (+) P sending n to (0, f(n)): the object the coaction
    lands in, seen under N."""
    ds = direct_sum(M, f.target)
    return ds.include_right @ f


def coproduct_comparison(f: Morphism, M: Module) -> Morphism:
    """The comparison (m, p) -> [(m, 0), p] from M (+) P to the pushout of
    the trivial coextension with f; an isomorphism whenever f is a
    coextension with cokernel M."""
    bundle = direct_sum(M, f.source)
    po = pushout(bundle.include_right, f)
    mp = direct_sum(M, f.target)
    return (po.from_left @ bundle.include_left @ mp.project_left) + (
        po.from_right @ mp.project_right
    )


def cotorsor_from_coextension(E: Coextension) -> CotorsorStructure:
    """Tag every p with the value of the chosen isomorphism on its class:
    p -> ([p]-value, p)."""
    ds = direct_sum(E.M, E.P)
    coaction = (ds.include_left @ E.cokernel_iso @ E.project) + ds.include_right
    return CotorsorStructure(E.f, E.M, coaction)


def coextension_from_cotorsor(T: CotorsorStructure) -> Coextension:
    """Recover the cokernel isomorphism as [p] -> first component of the
    coaction; raises AxiomViolation when T is not a cotorsor."""
    report = check_cotorsor_axioms(T)
    if not report.passed:
        failed = report.failures()[0]
        raise AxiomViolation(f"{failed.law}: {failed.counterexample}")
    _, project = cokernel(T.f)
    ds = direct_sum(T.M, T.P)
    alpha = factor_through_surjection(project, ds.project_left @ T.coaction)
    return Coextension(T.f, alpha)


def is_cotorsor_morphism(S: CotorsorStructure, T: CotorsorStructure,
                         h: Morphism) -> bool:
    """True iff h is under N and the coaction square with id (+) h commutes,
    elementwise."""
    if h.source != S.P or h.target != T.P:
        raise ParentMismatch("h must map S's module to T's")
    if S.M != T.M or S.N != T.N:
        raise ParentMismatch("cotorsors must share the same M and N")
    if h @ S.f != T.f:
        return False
    ds_s = direct_sum(S.M, S.P)
    ds_t = direct_sum(T.M, T.P)
    id_plus_h = (ds_t.include_left @ ds_s.project_left) + (
        ds_t.include_right @ h @ ds_s.project_right
    )
    return all(
        T.coaction(h(p)) == id_plus_h(S.coaction(p)) for p in S.P.elements()
    )


def find_cotorsor_morphism(S: CotorsorStructure,
                           T: CotorsorStructure) -> Optional[Morphism]:
    """One cotorsor morphism S -> T, by exact congruence solving."""
    if S.M != T.M or S.N != T.N:
        raise ParentMismatch("cotorsors must share the same M and N")
    ds_s = direct_sum(S.M, S.P)
    ds_t = direct_sum(T.M, T.P)
    conditions = [
        (((None, S.f, 1),), T.f),
        (
            (
                (ds_t.include_right, ds_s.project_right @ S.coaction, 1),
                (T.coaction, None, -1),
            ),
            -(ds_t.include_left @ ds_s.project_left @ S.coaction),
        ),
    ]
    h = find_morphism(S.P, T.P, conditions)
    if h is not None and not is_cotorsor_morphism(S, T, h):
        raise AxiomViolation("solver produced an invalid cotorsor morphism")
    return h


def check_cotorsor_axioms(T: CotorsorStructure) -> CheckReport:
    """Exhaustive check of the under-N condition, the section axiom, and the
    unique-decomposition axiom at the level of classes in P II_N P,
    including independence of the chosen representatives."""
    checks: list[LawCheck] = []
    ds = direct_sum(T.M, T.P)
    base = coaction_base(T.f, T.M)

    bad = next(
        (n for n in T.N.elements() if T.coaction(T.f(n)) != base(n)), None
    )
    checks.append(law("coaction-under-fiber", bad is None, f"n={bad}" if bad else None))

    bad = next(
        (p for p in T.P.elements() if ds.project_right(T.coaction(p)) != p), None
    )
    checks.append(law("section", bad is None, f"p={bad}" if bad else None))

    po = pushout(T.f, T.f)

    def decomposition_value(p1: ModElement, p2: ModElement) -> ModElement:
        return T.coaction(p1) + ds.include_right(p2)

    def class_of(p1: ModElement, p2: ModElement) -> ModElement:
        return po.project(po.sum.include_left(p1) + po.sum.include_right(p2))

    value_by_class: dict[ModElement, set[ModElement]] = {}
    for p1 in T.P.elements():
        for p2 in T.P.elements():
            value_by_class.setdefault(class_of(p1, p2), set()).add(
                decomposition_value(p1, p2)
            )
    bad = next((c for c, vals in value_by_class.items() if len(vals) > 1), None)
    checks.append(
        law(
            "representative-independence",
            bad is None,
            f"class {bad} takes several values" if bad else None,
        )
    )

    missing = None
    ambiguous = None
    for target in ds.module.elements():
        hits = [c for c, vals in value_by_class.items() if target in vals]
        if not hits and missing is None:
            missing = target
        if len(hits) > 1 and ambiguous is None:
            ambiguous = target
    checks.append(
        law(
            "decomposition-existence",
            missing is None,
            f"(m,p)={missing} has no decomposition" if missing else None,
        )
    )
    checks.append(
        law(
            "decomposition-uniqueness",
            ambiguous is None,
            f"(m,p)={ambiguous} decomposes along several classes" if ambiguous else None,
        )
    )
    return CheckReport(f"cotorsor on {T.P} under {T.N}", tuple(checks))


def cotorsor_homset_match(E: Coextension, F: Coextension) -> CheckReport:
    """The coextension morphisms E -> F and the cotorsor morphisms between
    the induced cotorsors are the same underlying maps."""
    te, tf = cotorsor_from_coextension(E), cotorsor_from_coextension(F)
    co_homs = set()
    tor_homs = set()
    for h in hom_enumerate(E.P, F.P):
        if is_coextension_morphism(E, F, h):
            co_homs.add(h.matrix)
        if is_cotorsor_morphism(te, tf, h):
            tor_homs.add(h.matrix)
    same = co_homs == tor_homs
    diff = (co_homs ^ tor_homs) if not same else None
    checks = (
        law(
            "homsets-equal",
            same,
            f"maps in one filter only: {sorted(diff)[:3]}" if diff else None,
        ),
        law(
            "all-are-isomorphisms",
            all(is_isomorphism(Morphism(E.P, F.P, m)) for m in co_homs),
            None,
        ),
    )
    return CheckReport(
        f"hom-set comparison for coextensions under {E.N} by {E.M}", checks
    )
