"""Shared fixtures: block involutions on the rank-22 lattice, marked models
with known degeneracy behaviour, and a seeded random-involution generator.
"""

from __future__ import annotations

import random

from zlattice import (
    Lattice,
    direct_sum,
    inner_product,
    make_involution,
    make_lattice,
    make_picard_model,
    make_sublattice,
    standard_lattice,
)

# Block layout of the rank-22 lattice U^3 + E8(-1)^2.
U1 = (0, 1)
U2 = (2, 3)
U3 = (4, 5)
E8A = tuple(range(6, 14))
E8B = tuple(range(14, 22))

# A norm -2 vector of E8(-1) in the package's fixed basis.
E8_ROOT = (2, 0, -1, 0, 0, 0, 0, 0)


def lk3() -> Lattice:
    return standard_lattice("LK3")


def embed(block, local, rank=22):
    v = [0] * rank
    for idx, c in zip(block, local):
        v[idx] = c
    return tuple(v)


def s_copy_basis(e8_block=E8A):
    """A primitive copy of the (3,1,1) lattice inside U^3 + E8(-1)^2.

    Basis (E~, F~, A~) with E~ = f2 - r, F~ = r, A~ = e2 - f2 where
    (e2, f2) span the second hyperbolic block and r is a norm -2 vector
    of the chosen E8(-1) block.  The induced Gram then reproduces the
    marked intersection table.
    """
    r = embed(e8_block, E8_ROOT)
    e2 = embed(U2, (1, 0))
    f2 = embed(U2, (0, 1))
    e_t = tuple(a - b for a, b in zip(f2, r))
    f_t = r
    a_t = tuple(a - b for a, b in zip(e2, f2))
    return (e_t, f_t, a_t)


def block_diag_involution(lattice, minus_blocks):
    """Involution acting as -1 on the listed coordinate positions, +1 elsewhere."""
    n = lattice.rank
    minus = set()
    for block in minus_blocks:
        minus.update(block)
    m = tuple(
        tuple((-1 if i in minus else 1) if i == j else 0 for j in range(n))
        for i in range(n)
    )
    return make_involution(lattice, m)


def psi_split():
    """id on U1, -id on everything else: fixed part U, type ((3,1,1), -id)
    with respect to the embedded copy of the marked lattice."""
    return block_diag_involution(lk3(), [U2, U3, E8A, E8B])


def psi_minus():
    """-id on the whole rank-22 lattice."""
    L = lk3()
    n = L.rank
    m = tuple(tuple(-1 if i == j else 0 for j in range(n)) for i in range(n))
    return make_involution(L, m)


def sigma_s311_fixed():
    """Involution of U^3 + E8(-1)^2 with fixed part of invariants (3,1,1).

    Acts as +id on U1, as minus-the-reflection-in-E8_ROOT on the first
    E8(-1) block, and as -id elsewhere.  The fixed part is U1 + Z*r,
    an even 2-elementary lattice with (r, a, delta) = (3, 1, 1).
    """
    L = lk3()
    e8 = standard_lattice("E8(-1)")
    r = E8_ROOT
    rr = inner_product(e8, r, r)
    cols = []
    for j in range(8):
        x = tuple(1 if i == j else 0 for i in range(8))
        xr = inner_product(e8, x, r)
        # s_r(x) = x - (2 x.r / r.r) r, then negated
        refl = tuple(x[i] - (2 * xr // rr) * r[i] for i in range(8))
        cols.append(tuple(-c for c in refl))
    n = L.rank
    m = [[0] * n for _ in range(n)]
    for i in U1:
        m[i][i] = 1
    for i in U2 + U3 + E8B:
        m[i][i] = -1
    for j_local, col in enumerate(cols):
        j = E8A[j_local]
        for i_local, c in enumerate(col):
            m[E8A[i_local]][j] = c
    return make_involution(L, tuple(tuple(row) for row in m))


# --- marked rank-4 model with a degeneracy witness over a widened sublattice


N4_GRAM = ((0, 1, 0, 0), (1, 0, 0, 0), (0, 0, -2, -2), (0, 0, -2, -4))
N4_A0 = (1, -1, 0, 0)
N4_E = (0, 1, -1, 0)
N4_F = (0, 0, 1, 0)
N4_SPRIME = ((1, -1, 0, 0), (0, 1, 0, 0), (0, 0, 2, -1))


def n4_model():
    return make_picard_model(make_lattice(N4_GRAM), N4_A0, N4_E, N4_F)


def n4_sprime():
    return make_sublattice(make_lattice(N4_GRAM), N4_SPRIME)


# --- small lattices for the half-vector membership test


# index-2 overlattice of <-4> + <-4> generated by (g1+g2)/2; basis (h, g2)
# with h = (g1+g2)/2, so g1 = 2h - g2
OVER44_GRAM = ((-2, -2), (-2, -4))
OVER44_D1 = (2, -1)  # the class g1, norm -4

PLAIN44_GRAM = ((-4, 0), (0, -4))

# rank-4 even lattice where the glue class exists but the norm -4
# representative needs coordinates of size 2
DEEP_GRAM = ((-4, 0, 0, -2), (0, 0, 1, 0), (0, 1, 0, 0), (-2, 0, 0, 0))
DEEP_D1 = (1, 0, 0, 0)
DEEP_WITNESS = (1, -2, 2, -2)


def s311_model():
    S = standard_lattice("S311")
    return make_picard_model(S, (0, 0, 1), (1, 0, 0), (0, 1, 0))


def s311_plus(d: int):
    """Marked model over S311 + <d>."""
    S = standard_lattice("S311")
    N = direct_sum(S, make_lattice(((d,),)))
    return make_picard_model(N, (0, 0, 1, 0), (1, 0, 0, 0), (0, 1, 0, 0))


# --- seeded random involutions for the property suite


_BLOCKS = []


def _add_block(gram, matrix):
    _BLOCKS.append((gram, matrix))


_U = ((0, 1), (1, 0))
_add_block(_U, ((1, 0), (0, 1)))
_add_block(_U, ((-1, 0), (0, -1)))
_add_block(_U, ((0, 1), (1, 0)))
_add_block(_U, ((0, -1), (-1, 0)))
for _d in (-2, 2, -4, -6):
    _add_block(((_d,),), ((1,),))
    _add_block(((_d,),), ((-1,),))
    # two equal rank-1 blocks swapped: glue index 2
    _add_block(((_d, 0), (0, _d)), ((0, 1), (1, 0)))
    _add_block(((_d, 0), (0, _d)), ((0, -1), (-1, 0)))


def _assemble(rng: random.Random, max_rank: int):
    gram_blocks = []
    mat_blocks = []
    total = 0
    while total < max_rank:
        g, m = rng.choice(_BLOCKS)
        if total + len(g) > max_rank:
            break
        gram_blocks.append(g)
        mat_blocks.append(m)
        total += len(g)
        if rng.random() < 0.3:
            break
    if not gram_blocks:
        gram_blocks = [((-2,),)]
        mat_blocks = [((1,),)]
        total = 1
    gram = [[0] * total for _ in range(total)]
    mat = [[0] * total for _ in range(total)]
    at = 0
    for g, m in zip(gram_blocks, mat_blocks):
        k = len(g)
        for i in range(k):
            for j in range(k):
                gram[at + i][at + j] = g[i][j]
                mat[at + i][at + j] = m[i][j]
        at += k
    return gram, mat


def _conjugate(rng: random.Random, gram, mat):
    """Apply a random unimodular change of basis: G -> T^t G T, M -> T^-1 M T."""
    n = len(gram)
    t = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    tinv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(rng.randrange(0, 7)):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.choice((-1, 1))
        # column op on T: col_j += c * col_i; inverse tracks col_j -= c * col_i
        for k in range(n):
            t[k][j] += c * t[k][i]
        for k in range(n):
            tinv[i][k] -= c * tinv[j][k]
    new_gram = _mul(_mul(_transpose(t), gram), t)
    new_mat = _mul(_mul(tinv, mat), t)
    return new_gram, new_mat


def _transpose(m):
    return [list(col) for col in zip(*m)]


def _mul(a, b):
    n, k, p = len(a), len(b), len(b[0])
    return [
        [sum(a[i][x] * b[x][j] for x in range(k)) for j in range(p)] for i in range(n)
    ]


def random_involution(rng: random.Random, max_rank: int = 8):
    gram, mat = _assemble(rng, max_rank)
    gram, mat = _conjugate(rng, gram, mat)
    L = make_lattice(tuple(tuple(r) for r in gram))
    return make_involution(L, tuple(tuple(r) for r in mat))
