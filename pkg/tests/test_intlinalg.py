import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from homext.intlinalg import (
    column_lattice_basis,
    diagonal_matrix,
    identity_matrix,
    mat_mul,
    mat_vec,
    smith_normal_form,
    solve_congruences,
    solve_lower_triangular,
    xgcd,
)


def is_identity(m):
    return m == identity_matrix(len(m))


@given(st.integers(-200, 200), st.integers(-200, 200))
def test_xgcd_bezout(a, b):
    g, x, y = xgcd(a, b)
    assert g >= 0
    assert x * a + y * b == g
    if a or b:
        assert a % g == 0 and b % g == 0


small_matrices = st.integers(0, 4).flatmap(
    lambda m: st.integers(0, 4).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(-9, 9), min_size=n, max_size=n),
            min_size=m,
            max_size=m,
        )
    )
)


@settings(max_examples=300)
@given(small_matrices)
def test_smith_normal_form_postconditions(a):
    u, uinv, s, v, vinv = smith_normal_form(a)
    m = len(a)
    n = len(a[0]) if m else 0
    assert mat_mul(mat_mul(u, a), v) == s
    assert is_identity(mat_mul(u, uinv))
    assert is_identity(mat_mul(uinv, u))
    assert is_identity(mat_mul(v, vinv))
    assert is_identity(mat_mul(vinv, v))
    diag = [s[i][i] for i in range(min(m, n))]
    for i in range(m):
        for j in range(n):
            if i != j:
                assert s[i][j] == 0
    for d, e in zip(diag, diag[1:]):
        assert d >= 0 and e >= 0
        if d == 0:
            assert e == 0
        else:
            assert e % d == 0


def test_smith_form_is_stable_on_smith_inputs():
    a = [[2, 0, 0], [0, 4, 0], [0, 0, 8]]
    u, uinv, s, v, vinv = smith_normal_form(a)
    assert s == a
    assert is_identity(u) and is_identity(v)


def test_column_lattice_basis_spans_same_lattice():
    # lattice generated by (2,0),(0,2),(1,1) inside Z^2 has index 2
    basis = column_lattice_basis([[2, 0], [0, 2], [1, 1]], 2)
    det = basis[0][0] * basis[1][1] - basis[0][1] * basis[1][0]
    assert abs(det) == 2
    # every generator is an integer combination of the basis columns
    for gen in ([2, 0], [0, 2], [1, 1]):
        x = solve_lower_triangular(basis, gen)
        assert mat_vec(basis, x) == gen


def test_column_lattice_basis_rejects_rank_deficient():
    try:
        column_lattice_basis([[1, 0]], 2)
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")


def brute_force_congruence(rows, rhs, moduli):
    # complete search: solutions are periodic with period lcm(moduli)
    period = 1
    for m in moduli:
        period = period * m // __import__("math").gcd(period, m)
    nvar = len(rows[0]) if rows else 0
    for cand in itertools.product(range(period), repeat=nvar):
        if all(
            (sum(r * c for r, c in zip(row, cand)) - b) % m == 0
            for row, b, m in zip(rows, rhs, moduli)
        ):
            return cand
    return None


@settings(max_examples=200)
@given(
    st.integers(1, 3).flatmap(
        lambda nv: st.tuples(
            st.lists(
                st.lists(st.integers(-4, 4), min_size=nv, max_size=nv),
                min_size=1,
                max_size=3,
            ),
            st.just(nv),
        )
    ),
    st.data(),
)
def test_solve_congruences_matches_brute_force(rows_nv, data):
    rows, nvar = rows_nv
    neq = len(rows)
    rhs = data.draw(st.lists(st.integers(-6, 6), min_size=neq, max_size=neq))
    moduli = data.draw(st.lists(st.integers(2, 4), min_size=neq, max_size=neq))
    got = solve_congruences(rows, rhs, moduli)
    expected = brute_force_congruence(rows, rhs, moduli)
    if expected is None:
        assert got is None
    else:
        assert got is not None
        for row, b, m in zip(rows, rhs, moduli):
            assert (sum(r * c for r, c in zip(row, got)) - b) % m == 0


def test_solve_congruences_empty_system():
    assert solve_congruences([], [], []) == []


def test_diagonal_and_identity_helpers():
    assert diagonal_matrix([2, 3]) == [[2, 0], [0, 3]]
    assert identity_matrix(0) == []
