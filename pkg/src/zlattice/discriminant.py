"""Discriminant groups, their quadratic forms, and 2-elementary invariants.

The discriminant group of a nondegenerate lattice L is L*/L.  Working in
the coordinates of L, the dual L* is spanned by the columns of the inverse
Gram matrix, and L*/L is the cokernel of G: Z^n -> Z^n, so its invariant
factors come from the Smith normal form of G.  Values of the discriminant
quadratic form live in Q/2Z and are represented canonically in [0, 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import intlinalg as la
from .errors import (
    DegenerateLattice,
    EmbeddingMismatch,
    NotEven,
    NotInDualLattice,
    NotTwoElementary,
)
from .lattices import Lattice, determinant, is_even

QVec = tuple[Fraction, ...]


@dataclass(frozen=True)
class DiscriminantGroup:
    """L*/L with divisibility-ordered invariant factors (trivial 1s dropped).

    generators[i] is a coset representative of order invariant_factors[i],
    written as a rational vector in the lattice basis, reduced into [0,1)^n.
    """

    invariant_factors: tuple[int, ...]
    generators: tuple[QVec, ...]
    lattice: Lattice

    @property
    def order(self) -> int:
        out = 1
        for f in self.invariant_factors:
            out *= f
        return out


def discriminant_group(L: Lattice) -> DiscriminantGroup:
    if determinant(L) == 0:
        raise DegenerateLattice("discriminant group needs a nonzero determinant")
    n = L.rank
    d, _, pinv, _, _ = la.snf_with_transforms(L.gram) if n else ((), (), (), (), ())
    ginv = la.rational_inverse(L.gram) if n else ()
    factors = []
    gens = []
    for i in range(n):
        di = d[i][i]
        if di == 1:
            continue
        # cokernel generator e_i pulls back to the dual vector
        # G^{-1} (column i of P^{-1}); reduce mod Z^n for a canonical rep
        col = tuple(pinv[r][i] for r in range(n))
        dual = tuple(
            sum(ginv[r][c] * col[c] for c in range(n)) for r in range(n)
        )
        gens.append(tuple(x - x.__floor__() for x in dual))
        factors.append(di)
    return DiscriminantGroup(tuple(factors), tuple(gens), L)


def _check_dual(L: Lattice, g) -> QVec:
    v = tuple(Fraction(x) for x in g)
    if len(v) != L.rank:
        raise NotInDualLattice(
            f"vector length {len(v)} does not match rank {L.rank}"
        )
    for i, row in enumerate(L.gram):
        pairing = sum(Fraction(row[j]) * v[j] for j in range(L.rank))
        if pairing.denominator != 1:
            raise NotInDualLattice(
                f"pairing with basis vector {i} is {pairing}, not an integer"
            )
    return v


def discriminant_form_value(L: Lattice, g) -> Fraction:
    """q(g) = g.g mod 2Z, represented in [0, 2).

    g is a rational coset representative; it must pair integrally with the
    lattice.  On an even lattice the value depends only on the coset of g.
    """
    v = _check_dual(L, g)
    gv = [sum(Fraction(row[j]) * v[j] for j in range(L.rank)) for row in L.gram]
    val = sum(v[i] * gv[i] for i in range(L.rank))
    return val - 2 * ((val / 2).__floor__())


def discriminant_bilinear_value(L: Lattice, g, h) -> Fraction:
    """b(g, h) = g.h mod Z, represented in [0, 1)."""
    v = _check_dual(L, g)
    w = _check_dual(L, h)
    hw = [sum(Fraction(row[j]) * w[j] for j in range(L.rank)) for row in L.gram]
    val = sum(v[i] * hw[i] for i in range(L.rank))
    return val - val.__floor__()


def two_elementary_invariants(L: Lattice) -> tuple[int, int, int]:
    """(r, a, delta) for an even nondegenerate 2-elementary lattice.

    r is the rank, a the number of invariant factors (all must equal 2),
    and delta is 0 exactly when the discriminant quadratic form takes only
    integer values in Q/2Z.  Checking delta on the generators suffices:
    q(g+h) = q(g) + q(h) + 2b(g,h) mod 2Z, and 2b is integer-valued on a
    2-elementary group because twice any element lies in L.
    """
    if not is_even(L):
        odd = next(i for i in range(L.rank) if L.gram[i][i] % 2)
        raise NotEven(f"diagonal entry gram[{odd}][{odd}] = {L.gram[odd][odd]} is odd")
    dg = discriminant_group(L)
    bad = next((f for f in dg.invariant_factors if f != 2), None)
    if bad is not None:
        raise NotTwoElementary(f"invariant factor {bad} is not 2")
    a = len(dg.invariant_factors)
    delta = 0
    for g in dg.generators:
        if discriminant_form_value(L, g).denominator != 1:
            delta = 1
            break
    return (L.rank, a, delta)


def delta_via_involution(L: Lattice, sigma) -> int:
    """Parity invariant from an ambient involution: 0 if z.sigma(z) is even
    for every z, else 1.

    The map z -> z.sigma(z) mod 2 is Z/2-linear, since
    (z+w).sigma(z+w) - z.sigma(z) - w.sigma(w) = 2 z.sigma(w), so it is
    enough to evaluate on the basis vectors.
    """
    if sigma.ambient.gram != L.gram:
        raise EmbeddingMismatch("involution acts on a different lattice")
    gm = la.mat_mul(L.gram, sigma.matrix)
    return 1 if any(gm[i][i] % 2 for i in range(L.rank)) else 0
