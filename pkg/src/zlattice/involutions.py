"""Integral involutions of a lattice and the searches built on them.

An integral involution is a Gram-preserving integer matrix squaring to the
identity.  Its two eigenlattices are primitive, mutually orthogonal, and of
full combined rank; the quotient of the lattice by their direct sum is an
elementary 2-group.  On top of that sit the typed-restriction check, the
rank/hyperbolicity bookkeeping for period domains, and two bounded searches
for norm -4 "glue partner" configurations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import intlinalg as la
from .errors import (
    DegenerateSublattice,
    DimensionMismatch,
    EmbeddingMismatch,
    InvalidInputFile,
    NotInSublattice,
    NotInvolution,
    NotIsometry,
    SignMismatch,
    SNotInAntiFixed,
    WrongNorm,
)
from .lattices import (
    Lattice,
    SublatticeEmbedding,
    Vec,
    check_vector,
    is_hyperbolic,
    lattice_from_json_dict,
    make_sublattice,
    norm,
    orthogonal_complement,
)
from .roots import bounded_vectors_of_norm, vectors_of_norm


@dataclass(frozen=True)
class IntegralInvolution:
    """A matrix psi with psi^2 = id and psi^t G psi = G, acting on columns."""

    ambient: Lattice
    matrix: la.Mat

    def __post_init__(self):
        n = self.ambient.rank
        m = tuple(tuple(int(x) for x in row) for row in self.matrix)
        if len(m) != n or any(len(row) != n for row in m):
            raise DimensionMismatch(
                f"matrix is not {n} x {n}"
            )
        object.__setattr__(self, "matrix", m)
        if la.mat_mul(m, m) != la.identity(n):
            raise NotInvolution("matrix squared is not the identity")
        g = self.ambient.gram
        if la.mat_mul(la.mat_mul(la.transpose(m), g), m) != g:
            raise NotIsometry("matrix does not preserve the Gram matrix")

    def __call__(self, x) -> Vec:
        return la.mat_vec(self.matrix, check_vector(self.ambient, x))


def make_involution(L: Lattice, m) -> IntegralInvolution:
    return IntegralInvolution(L, tuple(tuple(row) for row in m))


def eigenlattices(psi: IntegralInvolution) -> tuple[SublatticeEmbedding, SublatticeEmbedding]:
    """(fixed, anti): the +1 and -1 eigenlattices, both primitive.

    Integer kernels of psi -+ id are automatically saturated, so no
    explicit saturation pass is needed.
    """
    n = psi.ambient.rank
    m = psi.matrix
    ident = la.identity(n)
    minus = tuple(
        tuple(m[i][j] - ident[i][j] for j in range(n)) for i in range(n)
    )
    plus = tuple(
        tuple(m[i][j] + ident[i][j] for j in range(n)) for i in range(n)
    )
    fixed = SublatticeEmbedding(psi.ambient, la.kernel(minus, ncols=n))
    anti = SublatticeEmbedding(psi.ambient, la.kernel(plus, ncols=n))
    return fixed, anti


def is_type(psi: IntegralInvolution, s: SublatticeEmbedding, theta: IntegralInvolution) -> bool:
    """Does psi stabilize S and restrict to theta on it?

    theta acts on S's induced lattice, in S's basis coordinates.  Returns
    False when psi does not stabilize S; raises EmbeddingMismatch when the
    pieces refer to different lattices in the first place.
    """
    if s.ambient.gram != psi.ambient.gram:
        raise EmbeddingMismatch("sublattice is embedded in a different lattice")
    if theta.ambient.gram != s.induced_gram():
        raise EmbeddingMismatch(
            "restriction involution acts on a different lattice than S induces"
        )
    cols = []
    for b in s.basis:
        coords = s.from_ambient(psi(b))
        if coords is None:
            return False
        cols.append(coords)
    restriction = la.transpose(cols)
    return restriction == theta.matrix


def involution_rank_sum_check(psi: IntegralInvolution) -> bool:
    """Sanity wrapper: eigenlattice ranks sum to the full rank and twice any
    basis vector splits integrally into its fixed and anti parts."""
    fixed, anti = eigenlattices(psi)
    n = psi.ambient.rank
    if fixed.rank + anti.rank != n:
        return False
    m = psi.matrix
    for j in range(n):
        e = tuple(int(i == j) for i in range(n))
        img = la.mat_vec(m, e)
        plus = tuple(a + b for a, b in zip(e, img))
        minus = tuple(a - b for a, b in zip(e, img))
        if fixed.from_ambient(plus) is None or anti.from_ambient(minus) is None:
            return False
    return True


@dataclass(frozen=True)
class PeriodDomainSummary:
    """Rank and hyperbolicity data of the two lattices that control the
    period domain factors; dims are rank - 1 when hyperbolic, else None."""

    rank_fixed: int
    rank_anti_s: int
    fixed_hyperbolic: bool
    anti_s_hyperbolic: bool
    dim_lambda_plus: int | None
    dim_lambda_minus: int | None


def period_domain_summary(psi: IntegralInvolution, s: SublatticeEmbedding) -> PeriodDomainSummary:
    """Ranks and hyperbolicity of the fixed lattice and of the anti-invariant
    part orthogonal to S.

    Requires psi to negate S pointwise (S inside the -1 eigenlattice).
    """
    if s.ambient.gram != psi.ambient.gram:
        raise EmbeddingMismatch("sublattice is embedded in a different lattice")
    for b in s.basis:
        if psi(b) != tuple(-c for c in b):
            raise SNotInAntiFixed(
                f"basis vector {b} is not negated by the involution"
            )
    n = psi.ambient.rank
    fixed, _ = eigenlattices(psi)
    plus = tuple(
        tuple(psi.matrix[i][j] + int(i == j) for j in range(n)) for i in range(n)
    )
    pairing_rows = tuple(la.mat_vec(s.ambient.gram, b) for b in s.basis)
    anti_s = SublatticeEmbedding(
        psi.ambient, la.kernel(plus + pairing_rows, ncols=n)
    )
    fixed_hyp = is_hyperbolic(fixed.induced_lattice())
    anti_hyp = is_hyperbolic(anti_s.induced_lattice())
    return PeriodDomainSummary(
        rank_fixed=fixed.rank,
        rank_anti_s=anti_s.rank,
        fixed_hyperbolic=fixed_hyp,
        anti_s_hyperbolic=anti_hyp,
        dim_lambda_plus=fixed.rank - 1 if fixed_hyp else None,
        dim_lambda_minus=anti_s.rank - 1 if anti_hyp else None,
    )


@dataclass(frozen=True)
class MembershipResult:
    """Outcome of a glue-partner search: status is "yes", "no", or
    "unknown"; witness is the partner vector in ambient coordinates."""

    status: str
    witness: Vec | None


def _scan_key(v: Vec):
    # minimal coordinate box first, then the sign convention of
    # canonical_order (positive first nonzero preferred), then lexicographic;
    # a witness minimal for this order stays minimal when the box grows
    first = next((c for c in v if c), 0)
    return (max(map(abs, v), default=0), 0 if first > 0 else 1, v)


def delta4_membership(L: Lattice, s: SublatticeEmbedding, d1, bound: int) -> MembershipResult:
    """Does some delta2 in the orthogonal complement of S satisfy
    delta2^2 = -4 and (d1 + delta2)/2 in L?

    The coset obstruction (d1 must lie in 2L + S-perp) is decided exactly;
    if it passes, candidates are enumerated completely when the complement
    is definite, otherwise inside the coordinate box |internal coord| <=
    bound, and a fruitless bounded search answers "unknown".
    """
    if s.ambient.gram != L.gram:
        raise EmbeddingMismatch("sublattice is embedded in a different lattice")
    d1 = check_vector(L, d1)
    if s.from_ambient(d1) is None:
        raise NotInSublattice("d1 does not lie in the marked sublattice")
    if norm(L, d1) != -4:
        raise WrongNorm(f"d1 has square {norm(L, d1)}, expected -4")
    if bound < 1:
        raise ValueError("bound must be a positive integer")
    comp = orthogonal_complement(s)
    n = L.rank
    # coset test: d1 = 2u + c with u in L, c in the complement
    cols = tuple(
        tuple(2 * int(i == j) for j in range(n)) for i in range(n)
    )
    stacked = tuple(
        cols[i] + tuple(comp.basis[j][i] for j in range(comp.rank))
        for i in range(n)
    )
    if la.solve_int(stacked, d1) is None:
        return MembershipResult("no", None)
    if comp.rank == 0:
        return MembershipResult("no", None)
    inner = comp.induced_lattice()
    p, nn, z = la.inertia(inner.gram)
    definite = z == 0 and (p == 0 or nn == 0)
    if definite:
        try:
            cands = vectors_of_norm(inner, -4).vectors
        except SignMismatch:
            return MembershipResult("no", None)
        exhaustive = True
    else:
        cands = bounded_vectors_of_norm(inner, -4, bound).vectors
        exhaustive = False
    hits = []
    for c in cands:
        amb = comp.to_ambient(c)
        if all((a + b) % 2 == 0 for a, b in zip(d1, amb)):
            hits.append((c, amb))
    if hits:
        # the hit set is negation-closed ((d1 - delta2)/2 = (d1 + delta2)/2
        # - delta2), so normalize the reported sign in ambient coordinates
        _, witness = min(hits, key=lambda pair: _scan_key(pair[0]))
        first = next((c for c in witness if c), 0)
        if first < 0:
            witness = tuple(-c for c in witness)
        return MembershipResult("yes", witness)
    return MembershipResult("no" if exhaustive else "unknown", None)


@dataclass(frozen=True)
class DegeneracyScanResult:
    """Outcome of the double-point degeneracy scan.

    status is "degenerate" or "no-witness-within-bound".  On a find, delta
    is the norm -2 vector and delta1, delta2 its doubled projections to the
    marked sublattice and its complement, each of norm -4, with
    delta = (delta1 + delta2) / 2.  All coordinates are ambient.
    """

    status: str
    delta: Vec | None
    delta1: Vec | None
    delta2: Vec | None

    @property
    def found(self) -> bool:
        return self.status == "degenerate"


def da_degeneracy_scan(L: Lattice, s: SublatticeEmbedding, bound: int) -> DegeneracyScanResult:
    """Search the box |coordinate| <= bound for a vector delta of square -2
    splitting as the half-sum of two norm -4 vectors, one in S and one in
    its orthogonal complement.

    The projections use the rational inverse of S's induced Gram matrix, so
    S must be nondegenerate.  The reported witness minimizes (coordinate
    box, lexicographic), which makes the result stable when bound grows.
    """
    if s.ambient.gram != L.gram:
        raise EmbeddingMismatch("sublattice is embedded in a different lattice")
    gs = s.induced_gram()
    if s.rank and la.bareiss_det(gs) == 0:
        raise DegenerateSublattice("marked sublattice has degenerate Gram matrix")
    if bound < 1:
        raise ValueError("bound must be a positive integer")
    gs_inv = la.rational_inverse(gs) if s.rank else ()
    pair_rows = tuple(la.mat_vec(L.gram, b) for b in s.basis)
    candidates = bounded_vectors_of_norm(L, -2, bound).vectors
    best = None
    for delta in candidates:
        split = _split_projections(s, gs_inv, pair_rows, delta)
        if split is None:
            continue
        d1, d2 = split
        if norm(L, d1) == -4 and norm(L, d2) == -4:
            if best is None or _scan_key(delta) < _scan_key(best[0]):
                best = (delta, d1, d2)
    if best is None:
        return DegeneracyScanResult("no-witness-within-bound", None, None, None)
    return DegeneracyScanResult("degenerate", *best)


def _split_projections(s, gs_inv, pair_rows, delta):
    # delta1 = 2 proj_S(delta), delta2 = 2 delta - delta1; both must land
    # in the lattice (integer coordinates) to count
    if s.rank == 0:
        return None
    n = s.ambient.rank
    rhs = tuple(
        sum(row[i] * delta[i] for i in range(n)) for row in pair_rows
    )
    y = tuple(
        sum(gs_inv[j][k] * rhs[k] for k in range(s.rank)) for j in range(s.rank)
    )
    d1 = []
    for i in range(n):
        c = 2 * sum(Fraction(s.basis[j][i]) * y[j] for j in range(s.rank))
        if c.denominator != 1:
            return None
        d1.append(int(c))
    d1 = tuple(d1)
    d2 = tuple(2 * a - b for a, b in zip(delta, d1))
    return d1, d2


def involution_from_json_dict(data) -> tuple[IntegralInvolution, SublatticeEmbedding | None]:
    """Parse the documented involution file format:
    {"gram": [[...]], "matrix": [[...]], "s_basis": [[...], ...] optional}.

    Returns the involution and, when "s_basis" is present, the marked
    sublattice embedding."""
    if not isinstance(data, dict) or "gram" not in data or "matrix" not in data:
        raise InvalidInputFile('expected an object with "gram" and "matrix" keys')
    L = lattice_from_json_dict({"gram": data["gram"], "name": data.get("name")})
    matrix = data["matrix"]
    if not isinstance(matrix, list) or not all(isinstance(r, list) for r in matrix):
        raise InvalidInputFile('"matrix" must be a list of rows')
    psi = make_involution(L, matrix)
    s = None
    if "s_basis" in data:
        sb = data["s_basis"]
        if not isinstance(sb, list) or not all(isinstance(v, list) for v in sb):
            raise InvalidInputFile('"s_basis" must be a list of vectors')
        s = make_sublattice(L, [tuple(v) for v in sb])
    return psi, s
