import pytest

from homext.core import (
    INTEGERS,
    Module,
    Morphism,
    ParentMismatch,
    Ring,
    is_isomorphism,
    hom_enumerate,
)
from homext.extensions import (
    AlphaNotKernelIso,
    Extension,
    GroupObjectStructure,
    NotSurjective,
    check_group_axioms,
    group_object,
    is_extension_morphism,
    make_extension,
    trivial_extension,
)

Z = INTEGERS


def M(*factors, ring=Z):
    return Module(ring, tuple(factors))


def z4_extension():
    """The nonsplit extension of Z/2 by Z/2: reduction from Z/4, times-two in."""
    z4, z2 = M(4), M(2)
    return make_extension(
        z4, Morphism(z4, z2, ((1,),)), Morphism(z2, z4, ((2,),))
    )


def test_trivial_extension_basic():
    E = trivial_extension(M(2), M(2))
    assert E.P.factors == (2, 2)
    assert E.f.matrix == ((1, 0),)
    assert E.f.is_surjective()


def test_trivial_extension_zero_base():
    E = trivial_extension(M(), M(3))
    assert E.M.order() == 1
    assert is_isomorphism(E.kernel_iso)


def test_trivial_extension_crt():
    E = trivial_extension(M(2), M(3))
    assert E.P.factors == (6,)
    # invariants hold by construction; check order multiplicativity
    assert E.P.order() == E.M.order() * E.N.order()
    assert (E.f @ E.kernel_iso) == Morphism.zero(E.N, E.M)


def test_make_extension_z4_valid():
    E = z4_extension()
    kernel_set = {p for p in E.P.elements() if E.f(p).is_zero()}
    assert {E.kernel_iso(n) for n in E.N.elements()} == kernel_set
    assert {x.coords for x in kernel_set} == {(0,), (2,)}


def test_make_extension_errors():
    z2, z4 = M(2), M(4)
    red = Morphism(z4, z2, ((1,),))
    with pytest.raises(AlphaNotKernelIso):
        make_extension(z4, red, Morphism.zero(z2, z4))
    with pytest.raises(NotSurjective):
        make_extension(z2, Morphism.zero(z2, z2), Morphism.zero(M(), z2))
    with pytest.raises(ParentMismatch):
        make_extension(z2, red, Morphism(z2, z4, ((2,),)))


def test_extension_order_multiplicativity():
    for E in (trivial_extension(M(2), M(4)), z4_extension()):
        assert E.P.order() == E.M.order() * E.N.order()


def test_is_extension_morphism_identity_and_slice_violation():
    E = trivial_extension(M(2), M(2))
    assert is_extension_morphism(E, E, Morphism.identity(E.P))
    # swap of the two coordinates breaks the slice condition over M
    swap = Morphism.from_rows(E.P, E.P, [[0, 1], [1, 0]])
    assert E.f @ swap != E.f
    assert not is_extension_morphism(E, E, swap)


def test_is_extension_morphism_negation_depends_on_exponent():
    # (m, n) -> (m, -n) fixes the kernel embedding only when N has exponent 2
    for n_factors, expected in (((2,), True), ((3,), False)):
        E = trivial_extension(M(2), M(*n_factors))
        G = group_object(E.M, E.N)
        assert is_extension_morphism(E, E, G.inv) is expected


def test_extension_morphisms_are_isomorphisms():
    E = trivial_extension(M(2), M(2))
    F = z4_extension()
    for src in (E, F):
        for tgt in (E, F):
            if src.P != tgt.P:
                continue
            for h in hom_enumerate(src.P, tgt.P):
                if is_extension_morphism(src, tgt, h):
                    assert is_isomorphism(h)


def test_group_object_formulas():
    G = group_object(M(2), M(2))
    ds = G.bundle
    x = ds.include_left(M(2).element([1])) + ds.include_right(M(2).element([0]))
    y = ds.include_left(M(2).element([1])) + ds.include_right(M(2).element([1]))
    pair = next(
        w for w in G.pairs.module.elements()
        if G.pairs.to_left(w) == x and G.pairs.to_right(w) == y
    )
    assert G.add(pair) == y  # (1,0) + (1,1) = (1,1)
    # inv fixes the unit section
    for m in M(2).elements():
        assert G.inv(G.unit(m)) == G.unit(m)


def test_group_object_unit_law_z4():
    G = group_object(M(4), M(4))
    report = check_group_axioms(G)
    assert report.law("unit-left").passed
    assert report.law("unit-right").passed


def test_check_group_axioms_all_pass():
    for pair in ((M(2), M(2)), (M(2), M(3)), (M(4), M(2)), (M(2, 2), M(2))):
        report = check_group_axioms(group_object(*pair))
        assert report.passed, str(report)


def test_check_group_axioms_vacuous_zero_fiber():
    report = check_group_axioms(group_object(M(2), M()))
    assert report.passed


def test_corrupted_add_fails_unit_law_only():
    # drop the second summand's N part: associativity still holds, units break
    G = group_object(M(2), M(2))
    corrupted = GroupObjectStructure(
        G.carrier, G.unit, G.pairs.to_left, G.inv, G.pairs
    )
    report = check_group_axioms(corrupted)
    assert report.law("associativity").passed
    assert not report.law("unit-left").passed
    assert report.law("unit-left").counterexample


def test_corrupted_inv_fails_inverse_law():
    G = group_object(M(2), M(3))
    identity_as_inv = GroupObjectStructure(
        G.carrier, G.unit, G.add, Morphism.identity(G.carrier.P), G.pairs
    )
    report = check_group_axioms(identity_as_inv)
    assert not report.law("inverse-right").passed
    assert report.law("inverse-right").counterexample


def test_group_axioms_over_modular_rings():
    report = check_group_axioms(group_object(M(2, ring=Ring(4)), M(4, ring=Ring(4))))
    assert report.passed
