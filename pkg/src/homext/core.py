"""Finite modules over Z or Z/n with exact, fully enumerable arithmetic.

Modules are kept in invariant-factor form (a divisibility chain of cyclic
orders), elements as reduced coordinate vectors, and morphisms as integer
matrices carrying a well-definedness certificate.  Every value is immutable
and every operation is a pure function, so anything here can be shared
freely between threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, prod
from typing import NamedTuple, Optional, Sequence

from .intlinalg import (
    column_lattice_basis,
    diagonal_matrix,
    smith_normal_form,
    solve_congruences,
    solve_lower_triangular,
)


class HomextError(Exception):
    """Base class for all library errors."""


class RingMismatch(HomextError):
    """Two values live over different base rings."""


class ParentMismatch(HomextError):
    """Element or morphism shapes do not line up."""


class BoundExceeded(HomextError):
    """A size-bounded enumeration was asked to go past its bound."""


class AxiomViolation(HomextError):
    """A structure required to satisfy its axioms does not."""


@dataclass(frozen=True)
class Ring:
    """The base ring: the integers (modulus None) or Z/modulus."""

    modulus: Optional[int] = None

    def __post_init__(self):
        if self.modulus is not None and self.modulus < 2:
            raise ValueError("modulus must be at least 2")

    @property
    def is_integers(self) -> bool:
        return self.modulus is None

    def __str__(self) -> str:
        return "Z" if self.modulus is None else f"Z/{self.modulus}"


INTEGERS = Ring()


@dataclass(frozen=True)
class Module:
    """A finite module Z/d1 x ... x Z/dk with d1 | d2 | ... | dk.

    The zero module has an empty factor tuple.  Over Z/n every factor must
    divide n; that exponent constraint is exactly what makes the underlying
    abelian group a Z/n-module, and additivity then implies linearity for
    every map between such modules.
    """

    ring: Ring
    factors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(int(d) for d in self.factors))
        prev = None
        for d in self.factors:
            if d < 2:
                raise ValueError("invariant factors must be at least 2")
            if prev is not None and d % prev != 0:
                raise ValueError(f"broken divisibility chain {self.factors}")
            prev = d
        if self.ring.modulus is not None:
            for d in self.factors:
                if self.ring.modulus % d != 0:
                    raise ValueError(
                        f"factor {d} does not divide the ring modulus "
                        f"{self.ring.modulus}"
                    )

    def order(self) -> int:
        return prod(self.factors)

    def exponent(self) -> int:
        return self.factors[-1] if self.factors else 1

    def zero(self) -> "ModElement":
        return ModElement(self, (0,) * len(self.factors))

    def element(self, coords: Sequence[int]) -> "ModElement":
        """Build an element, reducing each coordinate mod its factor."""
        if len(coords) != len(self.factors):
            raise ParentMismatch(
                f"expected {len(self.factors)} coordinates, got {len(coords)}"
            )
        return ModElement(self, tuple(c % d for c, d in zip(coords, self.factors)))

    def elements(self) -> tuple["ModElement", ...]:
        return _module_elements(self)

    def generators(self) -> tuple["ModElement", ...]:
        k = len(self.factors)
        return tuple(
            ModElement(self, tuple(1 if i == j else 0 for j in range(k)))
            for i in range(k)
        )

    def __str__(self) -> str:
        if not self.factors:
            return "0"
        return "+".join(f"Z/{d}" for d in self.factors)


@lru_cache(maxsize=None)
def _module_elements(module: Module) -> tuple["ModElement", ...]:
    ranges = [range(d) for d in module.factors]
    return tuple(ModElement(module, coords) for coords in itertools.product(*ranges))


@dataclass(frozen=True)
class ModElement:
    """An element of a Module as a canonical (reduced) coordinate tuple."""

    parent: Module
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != len(self.parent.factors):
            raise ParentMismatch("coordinate length does not match module rank")
        for c, d in zip(self.coords, self.parent.factors):
            if not 0 <= c < d:
                raise ValueError(f"coordinate {c} not reduced mod {d}")

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: "ModElement") -> "ModElement":
        if self.parent != other.parent:
            raise ParentMismatch("cannot add elements of different modules")
        return self.parent.element(
            [a + b for a, b in zip(self.coords, other.coords)]
        )

    def __neg__(self) -> "ModElement":
        return self.parent.element([-c for c in self.coords])

    def __sub__(self, other: "ModElement") -> "ModElement":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "ModElement":
        return self.parent.element([scalar * c for c in self.coords])

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.coords)) + ")"


def element_add(a: ModElement, b: ModElement) -> ModElement:
    """Coordinatewise sum, re-canonicalized."""
    return a + b


@dataclass(frozen=True)
class Morphism:
    """A module map given by an integer matrix (target rows x source columns).

    Entry (i, j) is reduced mod the i-th target factor e_i, and the
    certificate e_i | entry * d_j guarantees the matrix descends to a
    well-defined map on the quotients.  Matrices involving the zero module
    are empty in the corresponding direction.
    """

    source: Module
    target: Module
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.source.ring != self.target.ring:
            raise RingMismatch("morphism endpoints live over different rings")
        rows = len(self.target.factors)
        cols = len(self.source.factors)
        if len(self.matrix) != rows or any(len(r) != cols for r in self.matrix):
            raise ParentMismatch("matrix shape does not match endpoint ranks")
        for i, e in enumerate(self.target.factors):
            for j, d in enumerate(self.source.factors):
                a = self.matrix[i][j]
                if not 0 <= a < e:
                    raise ValueError(f"entry {a} not reduced mod {e}")
                if (a * d) % e != 0:
                    raise ValueError(
                        f"entry {a} at ({i},{j}) breaks well-definedness: "
                        f"{e} does not divide {a}*{d}"
                    )

    @classmethod
    def from_rows(cls, source: Module, target: Module, rows) -> "Morphism":
        """Build a morphism, reducing every entry mod its target factor."""
        rows = tuple(tuple(row) for row in rows)
        if len(rows) != len(target.factors):
            raise ParentMismatch("wrong number of matrix rows")
        reduced = tuple(
            tuple(int(x) % e for x in row)
            for row, e in zip(rows, target.factors)
        )
        return cls(source, target, reduced)

    @classmethod
    def identity(cls, module: Module) -> "Morphism":
        k = len(module.factors)
        return cls(
            module,
            module,
            tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k)),
        )

    @classmethod
    def zero(cls, source: Module, target: Module) -> "Morphism":
        cols = len(source.factors)
        return cls(
            source, target, tuple((0,) * cols for _ in target.factors)
        )

    def __call__(self, x: ModElement) -> ModElement:
        if x.parent != self.source:
            raise ParentMismatch("element does not belong to the source module")
        return self.target.element(
            [sum(a * c for a, c in zip(row, x.coords)) for row in self.matrix]
        )

    def __matmul__(self, other: "Morphism") -> "Morphism":
        """Composition self after other."""
        if other.target != self.source:
            raise ParentMismatch("composition endpoints do not match")
        rows = [
            [
                sum(self.matrix[i][t] * other.matrix[t][j]
                    for t in range(len(self.source.factors)))
                for j in range(len(other.source.factors))
            ]
            for i in range(len(self.target.factors))
        ]
        return Morphism.from_rows(other.source, self.target, rows)

    def __add__(self, other: "Morphism") -> "Morphism":
        if self.source != other.source or self.target != other.target:
            raise ParentMismatch("can only add parallel morphisms")
        rows = [
            [a + b for a, b in zip(r1, r2)]
            for r1, r2 in zip(self.matrix, other.matrix)
        ]
        return Morphism.from_rows(self.source, self.target, rows)

    def __neg__(self) -> "Morphism":
        rows = [[-a for a in row] for row in self.matrix]
        return Morphism.from_rows(self.source, self.target, rows)

    def __sub__(self, other: "Morphism") -> "Morphism":
        return self + (-other)

    def image(self) -> frozenset:
        return _image_set(self)

    def is_surjective(self) -> bool:
        return len(self.image()) == self.target.order()

    def is_injective(self) -> bool:
        return len(self.image()) == self.source.order()

    def __str__(self) -> str:
        return f"{self.source} -> {self.target} via {list(map(list, self.matrix))}"


@lru_cache(maxsize=None)
def _image_set(h: Morphism) -> frozenset:
    # closure of the column images under addition; avoids walking big sources
    gens = [h(g) for g in h.source.generators()]
    seen = {h.target.zero()}
    frontier = [h.target.zero()]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = x + g
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return frozenset(seen)


def apply(h: Morphism, a: ModElement) -> ModElement:
    """Matrix-vector application reduced mod the target factors."""
    return h(a)


def is_isomorphism(h: Morphism) -> bool:
    """True iff h is bijective on elements, checked by enumeration."""
    if h.source.order() != h.target.order():
        return False
    return len({h(x) for x in h.source.elements()}) == h.target.order()


@lru_cache(maxsize=None)
def hom_enumerate(source: Module, target: Module) -> tuple[Morphism, ...]:
    """All morphisms source -> target, in lexicographic matrix order.

    Cell (i, j) independently ranges over the multiples of
    e_i / gcd(e_i, d_j) in [0, e_i), so the full hom-set is the product of
    the per-cell choices.
    """
    if source.ring != target.ring:
        raise RingMismatch("hom-set endpoints live over different rings")
    es = target.factors
    ds = source.factors
    cells = []
    for e in es:
        for d in ds:
            step = e // gcd(e, d)
            cells.append(range(0, e, step))
    result = []
    k = len(ds)
    for flat in itertools.product(*cells):
        rows = tuple(flat[i * k:(i + 1) * k] for i in range(len(es)))
        result.append(Morphism(source, target, rows))
    return tuple(result)


def _hom_cells(source: Module, target: Module) -> list[range]:
    cells = []
    for e in target.factors:
        for d in source.factors:
            step = e // gcd(e, d)
            cells.append(range(0, e, step))
    return cells


def hom_set_size(source: Module, target: Module) -> int:
    """|Hom(source, target)| without materializing the hom-set."""
    return prod(len(c) for c in _hom_cells(source, target))


def hom_by_index(source: Module, target: Module, index: int) -> Morphism:
    """The index-th morphism in the lexicographic order used by
    hom_enumerate, decoded by mixed-radix arithmetic."""
    cells = _hom_cells(source, target)
    digits = []
    for cell in reversed(cells):
        index, r = divmod(index, len(cell))
        digits.append(cell[r])
    digits.reverse()
    k = len(source.factors)
    rows = tuple(
        tuple(digits[i * k:(i + 1) * k]) for i in range(len(target.factors))
    )
    return Morphism(source, target, rows)


@lru_cache(maxsize=None)
def isomorphisms(source: Module, target: Module) -> tuple[Morphism, ...]:
    if source.factors != target.factors:
        return ()
    return tuple(h for h in hom_enumerate(source, target) if is_isomorphism(h))


class KernelResult(NamedTuple):
    module: Module
    embed: Morphism  # injective, image = {x | f(x) = 0}


class CokernelResult(NamedTuple):
    module: Module
    project: Morphism  # surjective, kernel = image(f)


def subgroup_module(ambient: Module, members: Sequence[ModElement]) -> KernelResult:
    """Present a subgroup (given as its full member list) in invariant-factor
    form together with an embedding into the ambient module.

    The subgroup is pulled back to a sublattice L of Z^k containing the
    relation lattice D = diag(d); Smith form of the relations written in a
    basis of L yields both the factors and explicit generators.
    """
    k = len(ambient.factors)
    if k == 0:
        zero = Module(ambient.ring, ())
        return KernelResult(zero, Morphism(zero, ambient, ()))
    cols = [list(m.coords) for m in members]
    cols.extend(diagonal_matrix(list(ambient.factors)))
    basis = column_lattice_basis(cols, k)
    rel = [
        solve_lower_triangular(basis, [d if i == j else 0 for j in range(k)])
        for i, d in enumerate(ambient.factors)
    ]
    # rel's columns express diag(d) in the basis: transpose to column form
    rel_cols = [[rel[j][i] for j in range(k)] for i in range(k)]
    _, uinv, s, _, _ = smith_normal_form(rel_cols)
    gen_matrix = [
        [sum(basis[i][t] * uinv[t][j] for t in range(k)) for j in range(k)]
        for i in range(k)
    ]
    keep = [i for i in range(k) if s[i][i] > 1]
    factors = tuple(s[i][i] for i in keep)
    sub = Module(ambient.ring, factors)
    embed = Morphism.from_rows(
        sub, ambient, [[gen_matrix[i][j] for j in keep] for i in range(k)]
    )
    if sub.order() != len(members):
        raise HomextError("member list was not a subgroup")
    return KernelResult(sub, embed)


@lru_cache(maxsize=None)
def kernel(f: Morphism) -> KernelResult:
    """The kernel in invariant-factor form plus its inclusion, by enumeration."""
    members = [x for x in f.source.elements() if f(x).is_zero()]
    return KernelResult(*subgroup_module(f.source, members))


@lru_cache(maxsize=None)
def cokernel(f: Morphism) -> CokernelResult:
    """The quotient of the target by the image, with its projection."""
    ambient = f.target
    k = len(ambient.factors)
    if k == 0:
        zero = Module(ambient.ring, ())
        return CokernelResult(zero, Morphism(ambient, zero, ()))
    cols = [[row[j] for row in f.matrix] for j in range(len(f.source.factors))]
    cols.extend(diagonal_matrix(list(ambient.factors)))
    basis = column_lattice_basis(cols, k)
    u, _, s, _, _ = smith_normal_form(basis)
    keep = [i for i in range(k) if s[i][i] > 1]
    quot = Module(ambient.ring, tuple(s[i][i] for i in keep))
    project = Morphism.from_rows(ambient, quot, [u[i] for i in keep])
    return CokernelResult(quot, project)


def coset_representative(quotient_of: Morphism, representative: ModElement) -> ModElement:
    """Lexicographically smallest element in representative + image(quotient_of)."""
    if representative.parent != quotient_of.target:
        raise ParentMismatch("representative must live in the ambient module")
    return min(
        (representative + x for x in quotient_of.image()),
        key=lambda e: e.coords,
    )


@dataclass(frozen=True)
class CosetElement:
    """A coset of image(quotient_of), held by its canonical representative."""

    quotient_of: Morphism
    representative: ModElement

    def __post_init__(self):
        canon = coset_representative(self.quotient_of, self.representative)
        object.__setattr__(self, "representative", canon)

    def __add__(self, other: "CosetElement") -> "CosetElement":
        if self.quotient_of != other.quotient_of:
            raise ParentMismatch("cosets of different quotients")
        return CosetElement(self.quotient_of, self.representative + other.representative)

    def __str__(self) -> str:
        return f"[{self.representative}]"


class DirectSum(NamedTuple):
    module: Module
    include_left: Morphism
    include_right: Morphism
    project_left: Morphism
    project_right: Morphism


def _is_divisibility_chain(factors: Sequence[int]) -> bool:
    return all(b % a == 0 for a, b in zip(factors, factors[1:]))


@lru_cache(maxsize=None)
def direct_sum(left: Module, right: Module) -> DirectSum:
    """Concatenate and renormalize to a divisibility chain, tracking the four
    canonical maps through the renormalizing isomorphism.

    When the concatenated factor list is already a chain the isomorphism is
    the identity, so e.g. M (+) 0 comes back with include_left = id.
    """
    if left.ring != right.ring:
        raise RingMismatch("direct sum of modules over different rings")
    combined = left.factors + right.factors
    k = len(combined)
    kl = len(left.factors)
    u, uinv, s, _, _ = smith_normal_form(diagonal_matrix(list(combined)))
    keep = [i for i in range(k) if s[i][i] > 1]
    total = Module(left.ring, tuple(s[i][i] for i in keep))
    # forward iso D0 -> total on coordinates, and its inverse
    fwd = [[u[i][j] for j in range(k)] for i in keep]
    bwd = [[uinv[i][j] for j in keep] for i in range(k)]
    include_left = Morphism.from_rows(left, total, [[row[j] for j in range(kl)] for row in fwd])
    include_right = Morphism.from_rows(right, total, [[row[j] for j in range(kl, k)] for row in fwd])
    project_left = Morphism.from_rows(total, left, [bwd[i] for i in range(kl)])
    project_right = Morphism.from_rows(total, right, [bwd[i] for i in range(kl, k)])
    return DirectSum(total, include_left, include_right, project_left, project_right)


def direct_sum_many(modules: Sequence[Module]) -> tuple[Module, list[Morphism], list[Morphism]]:
    """Iterated binary direct sum with composed inclusions/projections."""
    if not modules:
        raise ValueError("need at least one summand")
    total = modules[0]
    incls = [Morphism.identity(total)]
    projs = [Morphism.identity(total)]
    for m in modules[1:]:
        ds = direct_sum(total, m)
        incls = [ds.include_left @ i for i in incls]
        projs = [p @ ds.project_left for p in projs]
        incls.append(ds.include_right)
        projs.append(ds.project_right)
        total = ds.module
    return total, incls, projs


class FiberProduct(NamedTuple):
    module: Module
    to_left: Morphism
    to_right: Morphism
    over_base: Morphism  # the structure map onto the common target
    embed: Morphism      # inclusion into the renormalized P (+) Q
    sum: DirectSum
    left: Morphism       # the defining map f: P -> M
    right: Morphism      # the defining map g: Q -> M


@lru_cache(maxsize=None)
def fiber_product(f: Morphism, g: Morphism) -> FiberProduct:
    """The submodule {(p, q) | f(p) = g(q)} of P (+) Q, with projections and
    the structure map sending (p, q) to the common value f(p) = g(q)."""
    if f.target != g.target:
        raise ParentMismatch("fiber product needs a common target")
    ds = direct_sum(f.source, g.source)
    difference = (f @ ds.project_left) - (g @ ds.project_right)
    sub, embed = kernel(difference)
    to_left = ds.project_left @ embed
    to_right = ds.project_right @ embed
    return FiberProduct(sub, to_left, to_right, f @ to_left, embed, ds, f, g)


class Pushout(NamedTuple):
    module: Module
    from_left: Morphism
    from_right: Morphism
    under_source: Morphism  # the structure map from the common source
    project: Morphism       # projection from the renormalized P (+) Q
    sum: DirectSum
    left: Morphism          # the defining map f: N -> P
    right: Morphism         # the defining map g: N -> Q


@lru_cache(maxsize=None)
def pushout(f: Morphism, g: Morphism) -> Pushout:
    """The cokernel of (f, -g): N -> P (+) Q, with the two coprojections and
    the structure map sending n to the common class of (f(n), 0) = (0, g(n))."""
    if f.source != g.source:
        raise ParentMismatch("pushout needs a common source")
    ds = direct_sum(f.target, g.target)
    antidiagonal = (ds.include_left @ f) - (ds.include_right @ g)
    quot, project = cokernel(antidiagonal)
    from_left = project @ ds.include_left
    from_right = project @ ds.include_right
    return Pushout(quot, from_left, from_right, from_left @ f, project, ds, f, g)


def factor_through_injection(embed: Morphism, h: Morphism) -> Morphism:
    """The unique g with embed o g = h, for h landing inside image(embed)."""
    lookup = {embed(x): x for x in embed.source.elements()}
    cols = []
    for gen in h.source.generators():
        hit = lookup.get(h(gen))
        if hit is None:
            raise HomextError("map does not land in the submodule")
        cols.append(hit.coords)
    mor = Morphism.from_rows(
        h.source,
        embed.source,
        [[cols[j][i] for j in range(len(cols))] for i in range(len(embed.source.factors))],
    )
    if embed @ mor != h:
        raise HomextError("factorization through the submodule failed")
    return mor


def factor_through_surjection(project: Morphism, h: Morphism) -> Morphism:
    """The unique g with g o project = h, for h killing ker(project)."""
    preimages = {}
    for x in project.source.elements():
        preimages.setdefault(project(x), x)
    cols = [h(preimages[gen]).coords for gen in project.target.generators()]
    try:
        mor = Morphism.from_rows(
            project.target,
            h.target,
            [[cols[j][i] for j in range(len(cols))] for i in range(len(h.target.factors))],
        )
    except ValueError as exc:
        raise HomextError("map does not factor through the quotient") from exc
    if mor @ project != h:
        raise HomextError("map does not factor through the quotient")
    return mor


def mediate_fiber_product(fp: FiberProduct, u: Morphism, v: Morphism) -> Morphism:
    """The mediating morphism of a cone (u, v) into a fiber product."""
    if u.source != v.source:
        raise ParentMismatch("cone legs need a common source")
    if fp.left @ u != fp.right @ v:
        raise ParentMismatch("legs do not agree over the base")
    combined = (fp.sum.include_left @ u) + (fp.sum.include_right @ v)
    return factor_through_injection(fp.embed, combined)


def copair_pushout(po: Pushout, u: Morphism, v: Morphism) -> Morphism:
    """The copairing [u, v] out of a pushout, for a cocone (u, v)."""
    if u.target != v.target:
        raise ParentMismatch("cocone legs need a common target")
    if u @ po.left != v @ po.right:
        raise ParentMismatch("legs do not agree under the source")
    combined = (u @ po.sum.project_left) + (v @ po.sum.project_right)
    return factor_through_surjection(po.project, combined)


# ---------------------------------------------------------------------------
# Constrained morphism search.
#
# All the "is there a morphism h with <linear conditions>" questions in this
# library (extension / torsor / cotorsor / coextension morphisms) are affine
# congruence systems in the matrix entries of h, so instead of walking the
# whole hom-set we solve the system exactly.  A condition is a list of terms
# (post, pre, sign) plus a constant right-hand side, and asserts
#     sum_k  sign_k * (post_k o h o pre_k)  =  rhs.
# ---------------------------------------------------------------------------

Term = tuple[Optional[Morphism], Optional[Morphism], int]
Condition = tuple[tuple[Term, ...], Morphism]


def find_morphism(source: Module, target: Module,
                  conditions: Sequence[Condition]) -> Optional[Morphism]:
    """One morphism source -> target satisfying every condition, or None."""
    ds = source.factors
    qs = target.factors
    ncols = len(ds)
    nrows = len(qs)
    nvar = nrows * ncols
    # substitute entry (i, j) = scale[i][j] * t_(i,j) so well-definedness of
    # the resulting matrix is automatic
    scale = [[q // gcd(q, d) for d in ds] for q in qs]
    sys_rows: list[list[int]] = []
    sys_rhs: list[int] = []
    sys_mod: list[int] = []
    for terms, rhs in conditions:
        test_source = rhs.source
        test_target = rhs.target
        for post, pre, sign in terms:
            if (pre.target if pre else source) != source:
                raise ParentMismatch("condition pre-map must land in the source")
            if (post.source if post else target) != target:
                raise ParentMismatch("condition post-map must leave the target")
            if (pre.source if pre else source) != test_source:
                raise ParentMismatch("condition terms disagree on test source")
            if (post.target if post else target) != test_target:
                raise ParentMismatch("condition terms disagree on test target")
        for r in range(len(test_target.factors)):
            for c in range(len(test_source.factors)):
                coeff = [0] * nvar
                for post, pre, sign in terms:
                    for i in range(nrows):
                        a = post.matrix[r][i] if post else (1 if r == i else 0)
                        if a == 0:
                            continue
                        for j in range(ncols):
                            b = pre.matrix[j][c] if pre else (1 if j == c else 0)
                            if b == 0:
                                continue
                            coeff[i * ncols + j] += sign * a * b * scale[i][j]
                sys_rows.append(coeff)
                sys_rhs.append(rhs.matrix[r][c])
                sys_mod.append(test_target.factors[r])
    solution = solve_congruences(sys_rows, sys_rhs, sys_mod)
    if solution is None:
        return None
    if not solution:
        solution = [0] * nvar
    rows = [
        [scale[i][j] * solution[i * ncols + j] for j in range(ncols)]
        for i in range(nrows)
    ]
    h = Morphism.from_rows(source, target, rows)
    for terms, rhs in conditions:
        acc = Morphism.zero(rhs.source, rhs.target)
        for post, pre, sign in terms:
            piece = h
            if pre is not None:
                piece = piece @ pre
            if post is not None:
                piece = post @ piece
            acc = acc + piece if sign > 0 else acc - piece
        if acc != rhs:
            raise HomextError("congruence solver returned an invalid morphism")
    return h


def invariant_factors_by_counting(orders_of_multiples) -> tuple[int, ...]:
    """Invariant factors of a finite abelian group from the counting function
    n -> #{x : n*x = 0}.  Used as an SNF-free cross-check.

    ``orders_of_multiples`` maps a positive integer n to that count.
    """
    total = orders_of_multiples(0)
    prime_powers: dict[int, list[int]] = {}
    primes = []
    n = total
    p = 2
    while p * p <= n:
        if n % p == 0:
            primes.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        primes.append(n)
    for p in primes:
        counts = [1]
        j = 1
        while True:
            c = orders_of_multiples(p ** j)
            counts.append(c)
            if c == counts[-2]:
                break
            j += 1
        # number of cyclic p-summands of exponent >= j
        exps = []
        for j in range(1, len(counts)):
            ratio = counts[j] // counts[j - 1]
            m = 0
            while ratio > 1:
                ratio //= p
                m += 1
            exps.append(m)
        summands = []
        for j, m in enumerate(exps, start=1):
            nxt = exps[j] if j < len(exps) else 0
            summands.extend([j] * (m - nxt))
        prime_powers[p] = sorted((p ** e for e in summands), reverse=True)
    width = max((len(v) for v in prime_powers.values()), default=0)
    factors = []
    for slot in range(width):
        f = 1
        for p, powers in prime_powers.items():
            if slot < len(powers):
                f *= powers[slot]
        factors.append(f)
    return tuple(sorted(factors))
