"""Exact integer matrix routines: Smith form, lattice bases, congruence solving.

Everything here works on small dense matrices held as nested lists/tuples of
Python ints, which keeps the arithmetic exact at the sizes this library
handles (modules with at most a few dozen elements).
"""

from __future__ import annotations


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def identity_matrix(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b) -> list[list[int]]:
    if a and b:
        assert len(a[0]) == len(b), "shape mismatch"
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [
        [sum(row[t] * b[t][j] for t in range(inner)) for j in range(cols)]
        for row in a
    ]


def mat_vec(a, v) -> list[int]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def diagonal_matrix(entries) -> list[list[int]]:
    n = len(entries)
    return [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)]


def _is_smith_form(a, m: int, n: int) -> bool:
    prev = None
    for i in range(m):
        for j in range(n):
            if i != j and a[i][j] != 0:
                return False
        if i < n:
            d = a[i][i]
            if d < 0:
                return False
            if prev is not None and d != 0 and (prev == 0 or d % prev != 0):
                return False
            prev = d
    return True


def smith_normal_form(a):
    """Diagonalize an integer matrix by unimodular row/column operations.

    Returns (u, uinv, s, v, vinv) with u*a*v = s, where s is diagonal with
    nonnegative entries s[0][0] | s[1][1] | ... and u, v are unimodular with
    the given exact inverses.  Matrices already in Smith form pass through
    untouched, so callers can rely on identity transforms in that case.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    s = [list(row) for row in a]
    u = identity_matrix(m)
    uinv = identity_matrix(m)
    v = identity_matrix(n)
    vinv = identity_matrix(n)
    if _is_smith_form(s, m, n):
        return u, uinv, s, v, vinv

    def row_add(i, k, q):  # row_i += q * row_k
        s[i] = [x + q * y for x, y in zip(s[i], s[k])]
        u[i] = [x + q * y for x, y in zip(u[i], u[k])]
        for r in range(m):
            uinv[r][k] -= q * uinv[r][i]

    def row_swap(i, k):
        s[i], s[k] = s[k], s[i]
        u[i], u[k] = u[k], u[i]
        for r in range(m):
            uinv[r][i], uinv[r][k] = uinv[r][k], uinv[r][i]

    def row_negate(i):
        s[i] = [-x for x in s[i]]
        u[i] = [-x for x in u[i]]
        for r in range(m):
            uinv[r][i] = -uinv[r][i]

    def col_add(j, k, q):  # col_j += q * col_k
        for r in range(m):
            s[r][j] += q * s[r][k]
        for r in range(n):
            v[r][j] += q * v[r][k]
        vinv[k] = [x - q * y for x, y in zip(vinv[k], vinv[j])]

    def col_swap(j, k):
        for r in range(m):
            s[r][j], s[r][k] = s[r][k], s[r][j]
        for r in range(n):
            v[r][j], v[r][k] = v[r][k], v[r][j]
        vinv[j], vinv[k] = vinv[k], vinv[j]

    def col_negate(j):
        for r in range(m):
            s[r][j] = -s[r][j]
        for r in range(n):
            v[r][j] = -v[r][j]
        vinv[j] = [-x for x in vinv[j]]

    t = 0
    while t < min(m, n):
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = abs(s[i][j])
                if x and (best is None or x < best):
                    best = x
                    pivot = (i, j)
        if pivot is None:
            break
        if pivot[0] != t:
            row_swap(t, pivot[0])
        if pivot[1] != t:
            col_swap(t, pivot[1])
        while True:
            for i in range(t + 1, m):
                while s[i][t]:
                    row_add(i, t, -(s[i][t] // s[t][t]))
                    if s[i][t]:
                        row_swap(i, t)
            dirty = False
            for j in range(t + 1, n):
                while s[t][j]:
                    col_add(j, t, -(s[t][j] // s[t][t]))
                    if s[t][j]:
                        col_swap(j, t)
                        dirty = True
            if dirty or any(s[i][t] for i in range(t + 1, m)):
                continue
            # pivot must divide every remaining entry or the chain breaks
            witness = None
            for i in range(t + 1, m):
                if any(s[i][j] % s[t][t] for j in range(t + 1, n)):
                    witness = i
                    break
            if witness is None:
                break
            row_add(t, witness, 1)
        if s[t][t] < 0:
            row_negate(t)
        t += 1
    return u, uinv, s, v, vinv


def column_lattice_basis(columns, dim: int) -> list[list[int]]:
    """Basis of the full-rank column lattice spanned by ``columns`` in Z^dim.

    Returns a dim x dim lower-triangular matrix with positive diagonal whose
    columns generate the same lattice.  Raises ValueError if the columns do
    not span a finite-index sublattice.
    """
    if dim == 0:
        return []
    pool = [list(c) for c in columns if any(c)]
    basis_cols = []
    for r in range(dim):
        # invariant: every pool column vanishes in rows < r
        while True:
            nonzero = [c for c in pool if c[r]]
            if len(nonzero) <= 1:
                break
            nonzero.sort(key=lambda c: abs(c[r]))
            p = nonzero[0]
            for c in nonzero[1:]:
                q = c[r] // p[r]
                for i in range(r, dim):
                    c[i] -= q * p[i]
        chosen = None
        for c in pool:
            if c[r]:
                chosen = c
                break
        if chosen is None:
            raise ValueError("columns do not span a full-rank lattice")
        pool.remove(chosen)
        if chosen[r] < 0:
            chosen = [-x for x in chosen]
        basis_cols.append(chosen)
    return [[basis_cols[j][i] for j in range(dim)] for i in range(dim)]


def solve_lower_triangular(lower, rhs) -> list[int]:
    """Solve lower * x = rhs exactly over Z; the division must be exact."""
    x: list[int] = []
    for i in range(len(lower)):
        acc = rhs[i] - sum(lower[i][j] * x[j] for j in range(i))
        q, r = divmod(acc, lower[i][i])
        if r:
            raise ValueError("system has no integer solution")
        x.append(q)
    return x


def solve_congruences(rows, rhs, moduli):
    """Solve the simultaneous congruences rows[e] . t = rhs[e] (mod moduli[e]).

    Returns one integer solution vector for the t variables, or None when the
    system is unsolvable.  Moduli must be positive.
    """
    neq = len(rows)
    nvar = len(rows[0]) if neq else 0
    if neq == 0:
        return [0] * nvar
    aug = [list(rows[e]) + [moduli[e] if c == e else 0 for c in range(neq)]
           for e in range(neq)]
    u, _, s, v, _ = smith_normal_form(aug)
    c = mat_vec(u, list(rhs))
    ncols = nvar + neq
    y = [0] * ncols
    for i in range(neq):
        d = s[i][i] if i < ncols else 0
        if d:
            q, r = divmod(c[i], d)
            if r:
                return None
            y[i] = q
        elif c[i]:
            return None
    z = mat_vec(v, y)
    return z[:nvar]
