"""Exact linear algebra over the integers and rationals.

Matrices are immutable tuples of tuples of Python ints (or Fractions where
noted); nothing here ever touches floating point.  The routines this package
leans on are a fraction-free Bareiss determinant, a column-style Hermite
normal form with recorded transform, a Smith normal form with all four
transforms, a symmetric congruence reduction giving exact inertia, and a
Gram-only LLL for speeding up definite enumerations.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

Vec = tuple[int, ...]
Mat = tuple[Vec, ...]


def freeze(rows) -> Mat:
    return tuple(tuple(int(x) for x in row) for row in rows)


def identity(n: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(m: Mat) -> Mat:
    if not m:
        return ()
    return tuple(zip(*m))


def mat_mul(a, b) -> Mat:
    if not a:
        return ()
    bt = list(zip(*b)) if b else []
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_vec(m, v) -> Vec:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def bareiss_det(m: Mat) -> int:
    """Determinant of a square integer matrix, fraction-free.

    The empty 0x0 matrix has determinant 1.
    """
    n = len(m)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k]), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def hnf_with_transform(m, ncols: int | None = None) -> tuple[Mat, Mat]:
    """Column-style Hermite normal form.

    Returns (H, U) with H = M * U, U unimodular.  Pivots are positive,
    entries to the left of a pivot in its row are reduced into [0, pivot),
    and zero columns are pushed to the end.  ``ncols`` must be supplied when
    M has no rows.
    """
    nr = len(m)
    nc = len(m[0]) if nr else ncols
    if nc is None:
        raise ValueError("ncols required for a matrix with no rows")
    h = [list(map(int, row)) for row in m]
    u = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]

    def combine(c1, c2, a, b, c, d):
        # (col c1, col c2) <- (a*col c1 + b*col c2, c*col c1 + d*col c2)
        for mat in (h, u):
            for row in mat:
                s, t = row[c1], row[c2]
                row[c1] = a * s + b * t
                row[c2] = c * s + d * t

    col = 0
    for row in range(nr):
        if col >= nc:
            break
        piv = next((c for c in range(col, nc) if h[row][c]), None)
        if piv is None:
            continue
        if piv != col:
            for mat in (h, u):
                for r in mat:
                    r[col], r[piv] = r[piv], r[col]
        for c in range(col + 1, nc):
            if h[row][c] == 0:
                continue
            a, b = h[row][col], h[row][c]
            g, x, y = xgcd(a, b)
            combine(col, c, x, y, -(b // g), a // g)
        if h[row][col] < 0:
            for mat in (h, u):
                for r in mat:
                    r[col] = -r[col]
        p = h[row][col]
        for c in range(col):
            q = h[row][c] // p
            if q:
                for mat in (h, u):
                    for r in mat:
                        r[c] -= q * r[col]
        col += 1
    return freeze(h), freeze(u)


def integer_rank(m, ncols: int | None = None) -> int:
    if not m and not ncols:
        return 0
    h, _ = hnf_with_transform(m, ncols)
    nc = len(h[0]) if h else (ncols or 0)
    return sum(1 for c in range(nc) if any(row[c] for row in h))


def kernel(m, ncols: int | None = None) -> tuple[Vec, ...]:
    """Basis of the integer kernel {x : M x = 0}, as a tuple of vectors.

    The basis is primitive: it spans the full kernel sublattice, since it
    comes from the unimodular transform of a Hermite reduction.
    """
    nc = len(m[0]) if m else ncols
    if nc is None:
        raise ValueError("ncols required for a matrix with no rows")
    if not m:
        return tuple(identity(nc))
    h, u = hnf_with_transform(m, ncols)
    rank = sum(1 for c in range(nc) if any(row[c] for row in h))
    return tuple(tuple(u[r][c] for r in range(nc)) for c in range(rank, nc))


def solve_int(m, v, ncols: int | None = None) -> Vec | None:
    """One integer solution x of M x = v, or None if none exists."""
    nc = len(m[0]) if m else ncols
    if nc is None:
        raise ValueError("ncols required for a matrix with no rows")
    if not m:
        return tuple([0] * nc)
    h, u = hnf_with_transform(m, ncols)
    nr = len(m)
    # pivot row of column c is its topmost nonzero entry
    y = [0] * nc
    col = 0
    for row in range(nr):
        if col < nc and h[row][col]:
            s = v[row] - sum(h[row][c] * y[c] for c in range(col))
            if s % h[row][col]:
                return None
            y[col] = s // h[row][col]
            col += 1
    for row in range(nr):
        if sum(h[row][c] * y[c] for c in range(nc)) != v[row]:
            return None
    return mat_vec(u, y)


def snf_with_transforms(m) -> tuple[Mat, Mat, Mat, Mat, Mat]:
    """Smith normal form with all transforms.

    Returns (D, P, Pinv, Q, Qinv) with P * M * Q = D, D diagonal with
    nonnegative entries satisfying d1 | d2 | ... ; P, Q unimodular.
    """
    nr = len(m)
    nc = len(m[0]) if nr else 0
    d = [list(map(int, row)) for row in m]
    p = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]
    pinv = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]
    q = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]
    qinv = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]

    def row_swap(i, j):
        d[i], d[j] = d[j], d[i]
        p[i], p[j] = p[j], p[i]
        for r in pinv:
            r[i], r[j] = r[j], r[i]

    def row_add(i, j, k):
        # row i += k * row j ; keeps P*M*Q = D and P*Pinv = I
        for mat in (d, p):
            for c in range(len(mat[i])):
                mat[i][c] += k * mat[j][c]
        for r in pinv:
            r[j] -= k * r[i]

    def row_neg(i):
        d[i] = [-x for x in d[i]]
        p[i] = [-x for x in p[i]]
        for r in pinv:
            r[i] = -r[i]

    def col_swap(i, j):
        for r in d:
            r[i], r[j] = r[j], r[i]
        for r in q:
            r[i], r[j] = r[j], r[i]
        qinv[i], qinv[j] = qinv[j], qinv[i]

    def col_add(i, j, k):
        # col j += k * col i
        for mat in (d, q):
            for r in mat:
                r[j] += k * r[i]
        for c in range(nc):
            qinv[i][c] -= k * qinv[j][c]

    t = 0
    while t < min(nr, nc):
        # smallest nonzero entry of the remaining block to (t, t)
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                if d[i][j] and (best is None or abs(d[i][j]) < abs(d[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        while True:
            i, j = best
            if i != t:
                row_swap(t, i)
            if j != t:
                col_swap(t, j)
            dirty = False
            for i in range(t + 1, nr):
                if d[i][t]:
                    row_add(i, t, -(d[i][t] // d[t][t]))
                    if d[i][t]:
                        dirty = True
            for j in range(t + 1, nc):
                if d[t][j]:
                    col_add(t, j, -(d[t][j] // d[t][t]))
                    if d[t][j]:
                        dirty = True
            if dirty:
                best = min(
                    ((i, j) for i in range(t, nr) for j in range(t, nc) if d[i][j]),
                    key=lambda ij: abs(d[ij[0]][ij[1]]),
                )
                continue
            # pivot divides everything below-right, or we fold a bad row in
            offender = next(
                (
                    (i, j)
                    for i in range(t + 1, nr)
                    for j in range(t + 1, nc)
                    if d[i][j] % d[t][t]
                ),
                None,
            )
            if offender is None:
                break
            row_add(t, offender[0], 1)
            best = (t, t)
        if d[t][t] < 0:
            row_neg(t)
        t += 1
    return freeze(d), freeze(p), freeze(pinv), freeze(q), freeze(qinv)


def invariant_factors(m) -> tuple[int, ...]:
    """Diagonal of the Smith form, nontrivial factors only (entries > 1),
    in divisibility order.  Zero entries (infinite factors) are kept last."""
    d, *_ = snf_with_transforms(m)
    n = min(len(d), len(d[0]) if d else 0)
    diag = [d[i][i] for i in range(n)]
    return tuple(x for x in diag if x != 1)


def rational_solve(m, v):
    """Solve M x = v over the rationals; None if inconsistent.

    M is m x n with integer or Fraction entries.  Returns one solution as a
    tuple of Fractions (free variables set to zero).
    """
    nr = len(m)
    nc = len(m[0]) if nr else 0
    a = [[Fraction(x) for x in row] + [Fraction(v[i])] for i, row in enumerate(m)]
    pivots = []
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        f = a[r][c]
        a[r] = [x / f for x in a[r]]
        for i in range(nr):
            if i != r and a[i][c]:
                g = a[i][c]
                a[i] = [x - g * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    for i in range(r, nr):
        if a[i][nc]:
            return None
    x = [Fraction(0)] * nc
    for i, c in enumerate(pivots):
        x[c] = a[i][nc]
    return tuple(x)


def rational_inverse(m):
    """Inverse of a square nonsingular matrix, entries as Fractions."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        a[c], a[piv] = a[piv], a[c]
        f = a[c][c]
        a[c] = [x / f for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                g = a[i][c]
                a[i] = [x - g * y for x, y in zip(a[i], a[c])]
    return tuple(tuple(row[n:]) for row in a)


def inertia(gram) -> tuple[int, int, int]:
    """Exact Sylvester inertia (positive, negative, zero) of a symmetric
    integer matrix, by rational congruence reduction."""
    n = len(gram)
    a = [[Fraction(x) for x in row] for row in gram]
    pos = neg = zero = 0
    t = 0
    while t < n:
        piv = next((i for i in range(t, n) if a[i][i]), None)
        if piv is None:
            pair = next(
                ((i, j) for i in range(t, n) for j in range(i + 1, n) if a[i][j]),
                None,
            )
            if pair is None:
                zero += n - t
                break
            i, j = pair
            # symmetric op making a nonzero diagonal entry: b_j += b_i
            for k in range(n):
                a[j][k] += a[i][k]
            for k in range(n):
                a[k][j] += a[k][i]
            continue
        if piv != t:
            a[t], a[piv] = a[piv], a[t]
            for row in a:
                row[t], row[piv] = row[piv], row[t]
        d = a[t][t]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for i in range(t + 1, n):
            f = a[i][t] / d
            if f:
                for j in range(t + 1, n):
                    a[i][j] -= f * a[t][j]
        for i in range(t + 1, n):
            a[i][t] = a[t][i] = 0
        t += 1
    return pos, neg, zero


def floor_sqrt(x) -> int:
    """floor(sqrt(x)) for a nonnegative int or Fraction, exactly."""
    if x < 0:
        raise ValueError("negative argument")
    if isinstance(x, Fraction):
        return isqrt(x.numerator * x.denominator) // x.denominator
    return isqrt(int(x))


def _gso(a):
    # Gram-Schmidt data straight from a Gram matrix: squared lengths B and
    # coefficients mu, all exact.
    n = len(a)
    mu = [[Fraction(0)] * n for _ in range(n)]
    c = [[Fraction(0)] * n for _ in range(n)]
    b = [Fraction(0)] * n
    for i in range(n):
        for j in range(i + 1):
            s = Fraction(a[i][j])
            for k in range(j):
                s -= mu[j][k] * c[i][k]
            c[i][j] = s
            if j < i:
                if b[j] == 0:
                    raise ValueError("gram matrix is not positive definite")
                mu[i][j] = s / b[j]
        b[i] = c[i][i]
        if b[i] <= 0:
            raise ValueError("gram matrix is not positive definite")
    return b, mu


def lll_reduce_gram(gram, delta: Fraction = Fraction(3, 4)) -> tuple[Mat, Mat]:
    """LLL-reduce a positive definite Gram matrix without vector coordinates.

    Returns (G', T) with G' = T^t G T and T unimodular.
    """
    n = len(gram)
    a = [list(map(int, row)) for row in gram]
    t = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    if n <= 1:
        _gso(a)  # validates definiteness
        return freeze(a), freeze(t)

    def reduce_pair(k, j, qq):
        # b_k -= qq * b_j
        for i in range(n):
            a[k][i] -= qq * a[j][i]
        for i in range(n):
            a[i][k] -= qq * a[i][j]
        for r in t:
            r[k] -= qq * r[j]

    k = 1
    while k < n:
        b, mu = _gso(a)
        for j in range(k - 1, -1, -1):
            q = int((mu[k][j] + Fraction(1, 2)).__floor__())
            if q:
                reduce_pair(k, j, q)
                for i in range(j):
                    mu[k][i] -= q * mu[j][i]
                mu[k][j] -= q
        if b[k] >= (delta - mu[k][k - 1] ** 2) * b[k - 1]:
            k += 1
        else:
            a[k], a[k - 1] = a[k - 1], a[k]
            for row in a:
                row[k], row[k - 1] = row[k - 1], row[k]
            for r in t:
                r[k], r[k - 1] = r[k - 1], r[k]
            k = max(k - 1, 1)
    return freeze(a), freeze(t)
