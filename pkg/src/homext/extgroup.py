"""Duality between extensions and coextensions, and Ext^1 two ways.

The duality functor turns a surjection-with-kernel-embedding into an
injection-with-cokernel-isomorphism by swapping which datum is structural;
it is an equivalence and its inverse is exact on the nose.  On top of it sit
two independent computations of Ext^1(M, N): a brute-force classification of
extensions up to isomorphism, and a closed-form computation from cyclic
resolutions.  The Baer sum equips the classification with its group
structure so the two answers can be compared as groups, not just counted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from functools import lru_cache
from math import gcd
from typing import Optional

from .core import (
    BoundExceeded,
    HomextError,
    Module,
    Morphism,
    ParentMismatch,
    Ring,
    RingMismatch,
    cokernel,
    direct_sum,
    factor_through_surjection,
    fiber_product,
    find_morphism,
    hom_enumerate,
    invariant_factors_by_counting,
    is_isomorphism,
    isomorphisms,
    kernel,
    mediate_fiber_product,
)
from .cotorsors import (
    Coextension,
    cotorsor_from_coextension,
    find_cotorsor_morphism,
    is_coextension_morphism,
)
from .extensions import Extension, is_extension_morphism, trivial_extension
from .reports import CheckReport, LawCheck, law
from .torsors import find_torsor_morphism, torsor_from_extension

DEFAULT_BOUND = 64


# ----------------------------------------------------------------- duality

def coextension_from_extension(E: Extension) -> Coextension:
    """Reread an extension as a coextension: the kernel embedding becomes the
    structure map, and the surjection descends to the cokernel isomorphism."""
    inclusion = E.kernel_iso
    _, project = cokernel(inclusion)
    alpha = factor_through_surjection(project, E.f)
    return Coextension(inclusion, alpha)


def extension_from_coextension(C: Coextension) -> Extension:
    """The inverse rereading; applying the duality again gives back C
    exactly, which the constructor-level validation re-asserts."""
    surjection = C.cokernel_iso @ C.project
    return Extension(surjection, C.f)


def duality_homset_match(E: Extension, F: Extension) -> CheckReport:
    """Extension morphisms E -> F and coextension morphisms between the dual
    objects are the same underlying maps."""
    ce, cf = coextension_from_extension(E), coextension_from_extension(F)
    ext_homs = set()
    co_homs = set()
    for h in hom_enumerate(E.P, F.P):
        if is_extension_morphism(E, F, h):
            ext_homs.add(h.matrix)
        if is_coextension_morphism(ce, cf, h):
            co_homs.add(h.matrix)
    same = ext_homs == co_homs
    diff = (ext_homs ^ co_homs) if not same else None
    return CheckReport(
        f"duality hom-set comparison over {E.M} by {E.N}",
        (
            law(
                "homsets-equal",
                same,
                f"maps in one filter only: {sorted(diff)[:3]}" if diff else None,
            ),
        ),
    )


# ------------------------------------------------- candidate middle modules

def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def invariant_factor_chains(order: int, ring: Ring) -> tuple[tuple[int, ...], ...]:
    """All invariant-factor chains of the given order, largest factor first
    bounded by the ring modulus, returned ascending and sorted."""
    cap = ring.modulus

    def descending(remaining: int, largest: Optional[int]):
        if remaining == 1:
            yield ()
            return
        for d in _divisors(remaining):
            if d < 2:
                continue
            if largest is not None and largest % d != 0:
                continue
            for rest in descending(remaining // d, d):
                yield (d,) + rest

    chains = {tuple(reversed(c)) for c in descending(order, cap)}
    return tuple(sorted(chains))


@lru_cache(maxsize=None)
def automorphism_generators(P: Module) -> tuple[Morphism, ...]:
    """Elementary automorphisms of P: unit scalings, transvections between
    coordinates, and swaps of equal factors.  They need not generate the full
    automorphism group; orbit reduction only uses them as a safe coarsening."""
    k = len(P.factors)
    gens: list[Morphism] = []

    def with_entry(i, j, value):
        rows = [[1 if r == c else 0 for c in range(k)] for r in range(k)]
        rows[i][j] = value
        return Morphism.from_rows(P, P, rows)

    for i, d in enumerate(P.factors):
        for u in range(2, d):
            if gcd(u, d) == 1:
                gens.append(with_entry(i, i, u))
    for i, di in enumerate(P.factors):
        for j, dj in enumerate(P.factors):
            if i == j:
                continue
            step = di // gcd(di, dj)
            if step < di:
                gens.append(with_entry(i, j, step))
    for i in range(k):
        for j in range(i + 1, k):
            if P.factors[i] == P.factors[j]:
                rows = [[1 if r == c else 0 for c in range(k)] for r in range(k)]
                rows[i][i] = rows[j][j] = 0
                rows[i][j] = rows[j][i] = 1
                gens.append(Morphism.from_rows(P, P, rows))
    for g in gens:
        assert is_isomorphism(g)
    return tuple(gens)


def _surjection_orbit_reps(P: Module, surjections) -> list[Morphism]:
    """One representative per orbit of the elementary automorphisms acting by
    precomposition.  Coarser-than-necessary orbits are harmless: the final
    isomorphism partition merges whatever this step leaves split."""
    gens = automorphism_generators(P)
    seen: set = set()
    reps = []
    for f in surjections:
        if f.matrix in seen:
            continue
        reps.append(f)
        seen.add(f.matrix)
        frontier = [f]
        while frontier:
            g = frontier.pop()
            for u in gens:
                h = g @ u
                if h.matrix not in seen:
                    seen.add(h.matrix)
                    frontier.append(h)
    return reps


# ------------------------------------------------------------ classification

@dataclass(frozen=True)
class ExtGroupDescriptor:
    """Ext^1(M, N) as an abstract finite abelian group."""

    invariant_factors: tuple[int, ...]

    @property
    def order(self) -> int:
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "0"
        return "+".join(f"Z/{d}" for d in self.invariant_factors)


@dataclass(frozen=True)
class ExtClassification:
    """One canonical representative per isomorphism class of extensions,
    with the index of the split class and (optionally) the Baer table."""

    M: Module
    N: Module
    classes: tuple[Extension, ...]
    split_index: int
    baer_table: Optional[tuple[tuple[int, ...], ...]] = None

    def class_of(self, E: Extension) -> int:
        if E.M != self.M or E.N != self.N:
            raise ParentMismatch("extension has the wrong M or N")
        for idx, rep in enumerate(self.classes):
            if rep.P == E.P and find_extension_morphism(E, rep) is not None:
                return idx
        raise HomextError("extension does not match any enumerated class")


def find_extension_morphism(E: Extension, F: Extension) -> Optional[Morphism]:
    """One morphism of extensions E -> F, or None.  Solved as an exact
    congruence system over the matrix entries; walking the full hom-set is
    equivalent but blows up on middle modules with many generators.  Any hit
    is an isomorphism by the short five lemma, and that is re-checked."""
    if E.M != F.M or E.N != F.N:
        raise ParentMismatch("extensions must share the same M and N")
    if E.P.factors != F.P.factors:
        return None
    conditions = [
        (((F.f, None, 1),), E.f),
        (((None, E.kernel_iso, 1),), F.kernel_iso),
    ]
    h = find_morphism(E.P, F.P, conditions)
    if h is not None and not is_isomorphism(h):
        raise HomextError("extension morphism failed the isomorphism re-check")
    return h


@lru_cache(maxsize=None)
def enumerate_extensions(M: Module, N: Module,
                         bound: int = DEFAULT_BOUND) -> ExtClassification:
    """Classify the extensions of M by N up to isomorphism by brute force.

    Candidate middle modules are every invariant-factor chain of order
    |M|*|N| permitted by the ring; candidate structure maps run over
    automorphism-orbit representatives of the surjections onto M, paired
    with every identification of N with the kernel; the partition criterion
    is existence of an extension morphism.
    """
    if M.ring != N.ring:
        raise RingMismatch("modules live over different rings")
    order = M.order() * N.order()
    if order > bound:
        raise BoundExceeded(f"|M|*|N| = {order} exceeds the bound {bound}")
    candidates: list[Extension] = []
    for factors in invariant_factor_chains(order, M.ring):
        P = Module(M.ring, factors)
        surjections = [f for f in hom_enumerate(P, M) if f.is_surjective()]
        for f in _surjection_orbit_reps(P, surjections):
            sub, embed = kernel(f)
            if sub.factors != N.factors:
                continue
            for iso in isomorphisms(N, sub):
                candidates.append(Extension(f, embed @ iso))
    classes: list[Extension] = []
    for cand in candidates:
        if not any(
            rep.P == cand.P and find_extension_morphism(cand, rep) is not None
            for rep in classes
        ):
            classes.append(cand)
    result = ExtClassification(M, N, tuple(classes), 0)
    split = result.class_of(trivial_extension(M, N))
    return replace(result, split_index=split)


# -------------------------------------------------------------- resolutions

def _prime_factorization(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _invariant_factors_from_cyclic_orders(orders) -> tuple[int, ...]:
    """Merge a multiset of cyclic orders into an invariant-factor chain by
    aligning the largest prime powers; no matrix machinery involved."""
    by_prime: dict[int, list[int]] = {}
    for n in orders:
        for p, e in _prime_factorization(n).items():
            by_prime.setdefault(p, []).append(e)
    for exps in by_prime.values():
        exps.sort(reverse=True)
    width = max((len(v) for v in by_prime.values()), default=0)
    descending = []
    for slot in range(width):
        f = 1
        for p, exps in by_prime.items():
            if slot < len(exps):
                f *= p ** exps[slot]
        descending.append(f)
    return tuple(reversed(descending))


def cyclic_ext_order(a: int, b: int, ring: Ring) -> int:
    """|Ext^1(Z/a, Z/b)| over the given ring.

    Over Z this is gcd(a, b).  Over Z/n the periodic resolution of Z/a by
    free Z/n-modules identifies Ext^1 with the subquotient
    {x in Z/b : (n/a) x = 0} / a (Z/b), whose order is
    gcd(b, n/a) * gcd(a, b) / b.
    """
    if ring.is_integers:
        return gcd(a, b)
    n = ring.modulus
    return gcd(b, n // a) * gcd(a, b) // b


def ext_by_resolution(M: Module, N: Module) -> ExtGroupDescriptor:
    """Ext^1(M, N) from cyclic resolutions, summand by summand.

    Each pair of cyclic factors contributes a cyclic group of the order
    given by cyclic_ext_order; additivity over direct sums assembles the
    total.  This path shares no machinery with the enumeration."""
    if M.ring != N.ring:
        raise RingMismatch("modules live over different rings")
    orders = [
        cyclic_ext_order(a, b, M.ring)
        for a in M.factors
        for b in N.factors
    ]
    return ExtGroupDescriptor(
        _invariant_factors_from_cyclic_orders(o for o in orders if o > 1)
    )


# ---------------------------------------------------------------- Baer sum

def baer_sum(E1: Extension, E2: Extension) -> Extension:
    """Fiber the two surjections over M, kill the antidiagonal copy of N,
    and push the structure maps through the quotient."""
    if E1.M != E2.M or E1.N != E2.N:
        raise ParentMismatch("summands must share the same M and N")
    fp = fiber_product(E1.f, E2.f)
    antidiagonal = mediate_fiber_product(fp, E1.kernel_iso, -E2.kernel_iso)
    _, project = cokernel(antidiagonal)
    f_sum = factor_through_surjection(project, fp.over_base)
    alpha_sum = project @ mediate_fiber_product(
        fp, E1.kernel_iso, Morphism.zero(E2.N, E2.P)
    )
    return Extension(f_sum, alpha_sum)


@lru_cache(maxsize=None)
def with_baer_table(classification: ExtClassification) -> ExtClassification:
    """Fill in the addition table on class indices."""
    table = tuple(
        tuple(
            classification.class_of(baer_sum(a, b))
            for b in classification.classes
        )
        for a in classification.classes
    )
    return replace(classification, baer_table=table)


def table_invariant_factors(table, identity: int) -> tuple[int, ...]:
    """Invariant factors of the finite abelian group presented by an
    addition table, extracted from solution counts of k*x = identity."""
    size = len(table)

    def multiple(k: int, x: int) -> int:
        acc = identity
        for _ in range(k):
            acc = table[acc][x]
        return acc

    def count(k: int) -> int:
        if k == 0:
            return size
        return sum(1 for x in range(size) if multiple(k, x) == identity)

    return invariant_factors_by_counting(count)


# ------------------------------------------------------------ cross checks

def cross_validate(M: Module, N: Module, bound: int = DEFAULT_BOUND) -> CheckReport:
    """Everything that must agree: class count vs resolution order, the Baer
    table being an abelian group with the resolution's invariant factors,
    and the class counts surviving transport to torsors and cotorsors."""
    checks: list[LawCheck] = []
    classification = enumerate_extensions(M, N, bound)
    resolution = ext_by_resolution(M, N)
    k = len(classification.classes)

    checks.append(
        law(
            "class-count-equals-resolution-order",
            k == resolution.order,
            f"enumerated {k}, resolution says {resolution.order}",
        )
    )

    tabled = with_baer_table(classification)
    table = tabled.baer_table
    split = tabled.split_index
    ident_ok = all(
        table[split][j] == j and table[j][split] == j for j in range(k)
    )
    checks.append(law("baer-identity-is-split-class", ident_ok))
    checks.append(
        law(
            "baer-commutative",
            all(table[i][j] == table[j][i] for i in range(k) for j in range(k)),
        )
    )
    checks.append(
        law(
            "baer-associative",
            all(
                table[table[i][j]][l] == table[i][table[j][l]]
                for i in range(k)
                for j in range(k)
                for l in range(k)
            ),
        )
    )
    checks.append(
        law(
            "baer-inverses",
            all(any(table[i][j] == split for j in range(k)) for i in range(k)),
        )
    )
    got_factors = table_invariant_factors(table, split)
    checks.append(
        law(
            "baer-structure-equals-resolution",
            got_factors == resolution.invariant_factors,
            f"table gives {got_factors}, resolution {resolution.invariant_factors}",
        )
    )

    torsors = [torsor_from_extension(E) for E in classification.classes]
    merged = next(
        (
            (i, j)
            for i, j in itertools.combinations(range(k), 2)
            if find_torsor_morphism(torsors[i], torsors[j]) is not None
        ),
        None,
    )
    checks.append(
        law(
            "torsor-class-count",
            merged is None,
            f"classes {merged} merge as torsors" if merged else None,
        )
    )

    cotorsors = [
        cotorsor_from_coextension(coextension_from_extension(E))
        for E in classification.classes
    ]
    merged = next(
        (
            (i, j)
            for i, j in itertools.combinations(range(k), 2)
            if find_cotorsor_morphism(cotorsors[i], cotorsors[j]) is not None
        ),
        None,
    )
    checks.append(
        law(
            "cotorsor-class-count",
            merged is None,
            f"classes {merged} merge as cotorsors" if merged else None,
        )
    )
    return CheckReport(f"cross-validation of Ext({M}, {N}) over {M.ring}", tuple(checks))
