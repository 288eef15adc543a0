"""The Pluecker embedding and wedge-space machinery.

A subspace of vector dimension k+1 in GF(q)^(n+1) maps to the projective
point of the wedge space whose coordinates are the maximal minors of any
basis matrix, indexed by the lexicographically ordered strictly increasing
multi-indices (i_0, ..., i_k) in [0, n].  Coordinates are normalized so the
first nonzero one is 1, which makes projective equality structural.

The inverse direction is the kernel test: a wedge vector w is the image of
some subspace exactly when {v : w wedge v = 0} has vector dimension k+1,
and in that case the kernel is the subspace.  The same test decides whether
a wedge vector is decomposable at all, so no quadratic relations are needed.
"""

import itertools
from functools import lru_cache
from math import comb

from .errors import BadAmbient, BadParams, GradeMismatch, NotDecomposable, ZeroSubspace
from .gf import FiniteField, field_new
from .linalg import Matrix, Subspace, det_rows, kernel


@lru_cache(maxsize=None)
def multi_indices(n_plus_1: int, k_plus_1: int) -> tuple[tuple[int, ...], ...]:
    """All strictly increasing (k+1)-tuples in [0, n], lexicographically."""
    if not 1 <= k_plus_1 <= n_plus_1:
        raise BadParams(f"need 1 <= k+1 <= n+1, got k+1={k_plus_1}, n+1={n_plus_1}")
    return tuple(itertools.combinations(range(n_plus_1), k_plus_1))


@lru_cache(maxsize=None)
def index_positions(n_plus_1: int, k_plus_1: int) -> dict:
    """Multi-index -> position in the lexicographic enumeration."""
    return {idx: pos for pos, idx in enumerate(multi_indices(n_plus_1, k_plus_1))}


def wedge_of_rows(field: FiniteField, rows, n_plus_1: int) -> list[int]:
    """Wedge coordinates of a list of (n+1)-vectors: all maximal minors
    of the stacked matrix, in lex multi-index order (unnormalized)."""
    k1 = len(rows)
    return [det_rows(field, [[row[j] for j in idx] for row in rows])
            for idx in multi_indices(n_plus_1, k1)]


class PluckerVector:
    """A projective point of the wedge space (first nonzero coordinate 1)."""

    __slots__ = ("field", "n_plus_1", "k_plus_1", "coords")

    def __init__(self, field: FiniteField, n_plus_1: int, k_plus_1: int, coords):
        coords = list(coords)
        if len(coords) != comb(n_plus_1, k_plus_1):
            raise BadParams("coordinate count does not match the wedge dimension")
        lead = next((c for c in coords if c), None)
        if lead is None:
            raise ZeroSubspace("the zero wedge vector is not a projective point")
        if lead != 1:
            ilead = field.inv(lead)
            coords = [field.mul(ilead, c) for c in coords]
        self.field = field
        self.n_plus_1 = n_plus_1
        self.k_plus_1 = k_plus_1
        self.coords = tuple(coords)

    def __eq__(self, other) -> bool:
        return (isinstance(other, PluckerVector) and self.field == other.field
                and self.n_plus_1 == other.n_plus_1
                and self.k_plus_1 == other.k_plus_1
                and self.coords == other.coords)

    def __hash__(self) -> int:
        return hash((self.field, self.n_plus_1, self.k_plus_1, self.coords))

    def __repr__(self) -> str:
        return (f"PluckerVector(({':'.join(str(c) for c in self.coords)}), "
                f"G({self.k_plus_1},{self.n_plus_1}) over {self.field!r})")


def plucker_primary(x: Subspace) -> PluckerVector:
    """Pluecker coordinates of x from the maximal minors of its basis."""
    if x.dim == 0:
        raise ZeroSubspace("the zero subspace has no Pluecker coordinates")
    coords = wedge_of_rows(x.field, x.basis.data, x.ambient)
    return PluckerVector(x.field, x.ambient, x.dim, coords)


def plucker_dual(x: Subspace) -> PluckerVector:
    """Dual Pluecker coordinates: the primary coordinates of the space of
    linear forms vanishing on x.  Defined when ambient = 2 dim(x)."""
    if x.ambient != 2 * x.dim:
        raise BadAmbient("dual coordinates need ambient dimension 2(k+1)")
    return plucker_primary(x.annihilator())


@lru_cache(maxsize=None)
def _complement_signs(n_plus_1: int, k_plus_1: int) -> tuple[tuple[int, int], ...]:
    """For each multi-index position: (position of complement, parity),
    parity being 0 or 1 for the concatenated permutation (i, complement)."""
    full = set(range(n_plus_1))
    comp_k = n_plus_1 - k_plus_1
    pos_of = index_positions(n_plus_1, comp_k)
    out = []
    for idx in multi_indices(n_plus_1, k_plus_1):
        comp = tuple(sorted(full - set(idx)))
        inversions = sum(1 for a in idx for b in comp if a > b)
        out.append((pos_of[comp], inversions & 1))
    return tuple(out)


def dual_reindex(p: PluckerVector) -> PluckerVector:
    """Reverse-and-sign map taking primary coordinates to dual ones.

    The coordinate at the complementary multi-index picks up the sign of
    the permutation obtained by concatenating the index with its complement.
    """
    if p.n_plus_1 != 2 * p.k_plus_1:
        raise BadAmbient("dual reindexing needs ambient dimension 2(k+1)")
    f = p.field
    out = [0] * len(p.coords)
    for pos, (cpos, parity) in enumerate(_complement_signs(p.n_plus_1, p.k_plus_1)):
        c = p.coords[pos]
        out[cpos] = f.neg(c) if parity else c
    return PluckerVector(f, p.n_plus_1, p.k_plus_1, out)


def wedge_coords(field: FiniteField, n_plus_1: int, k_plus_1: int,
                 coords, v) -> list[int]:
    """Coordinates of (w wedge v) for a grade-(k+1) wedge vector w.

    Returns the raw grade-(k+2) coordinate list, which is all zeros exactly
    when v lies in the subspace of a decomposable w.  Multilinear and
    alternating in the vector argument.
    """
    if len(v) != n_plus_1:
        raise GradeMismatch("vector length does not match the ambient space")
    if len(coords) != comb(n_plus_1, k_plus_1):
        raise GradeMismatch("coordinate count does not match the grade")
    if k_plus_1 == n_plus_1:
        return []  # the wedge space of grade n+2 is trivial
    pos_of = index_positions(n_plus_1, k_plus_1)
    out = []
    for J in multi_indices(n_plus_1, k_plus_1 + 1):
        acc = 0
        # expand along the added vector: drop one entry of J at a time
        for s in range(k_plus_1 + 1):
            vj = v[J[s]]
            if not vj:
                continue
            sub = J[:s] + J[s + 1:]
            c = coords[pos_of[sub]]
            if not c:
                continue
            term = field.mul(c, vj)
            if (k_plus_1 - s) & 1:
                term = field.neg(term)
            acc = field.add(acc, term)
        out.append(acc)
    return out


def wedge_extend(p: PluckerVector, v) -> list[int]:
    """Raw coordinates of p wedge v (grade k+2); see wedge_coords."""
    return wedge_coords(p.field, p.n_plus_1, p.k_plus_1, p.coords, v)


def _wedge_map_matrix(field: FiniteField, n_plus_1: int, k_plus_1: int,
                      coords) -> Matrix:
    """Matrix of v -> (w wedge v) in the standard bases."""
    cols = []
    for j in range(n_plus_1):
        unit = [0] * n_plus_1
        unit[j] = 1
        cols.append(wedge_coords(field, n_plus_1, k_plus_1, coords, unit))
    rows = comb(n_plus_1, k_plus_1 + 1)
    return Matrix(field, [[cols[j][i] for j in range(n_plus_1)]
                          for i in range(rows)], cols=n_plus_1)


def annihilating_space(field: FiniteField, n_plus_1: int, k_plus_1: int,
                       coords) -> Subspace:
    """{v : w wedge v = 0} for a raw wedge coordinate vector w."""
    if k_plus_1 >= n_plus_1:
        return Subspace.full(field, n_plus_1)
    return kernel(_wedge_map_matrix(field, n_plus_1, k_plus_1, coords))


def is_decomposable(field: FiniteField, n_plus_1: int, k_plus_1: int,
                    coords) -> bool:
    """Whether a nonzero wedge coordinate vector is a wedge of k+1 vectors."""
    return annihilating_space(field, n_plus_1, k_plus_1, coords).dim == k_plus_1


def recover_subspace(p: PluckerVector) -> Subspace:
    """The subspace whose Pluecker coordinates are p.

    The kernel of v -> p wedge v has vector dimension k+1 exactly when p
    is totally decomposable, and then it is the subspace itself.  A smaller
    kernel means p is off the Grassmannian (a decoding failure upstream).
    """
    ker = annihilating_space(p.field, p.n_plus_1, p.k_plus_1, p.coords)
    if ker.dim != p.k_plus_1:
        raise NotDecomposable(
            f"kernel has dimension {ker.dim}, expected {p.k_plus_1}")
    return ker


# ----------------------------------------------------------------------
# text format: "q <p> <m>" / "grassmann <n+1> <k+1>" / one coordinate line
# ----------------------------------------------------------------------

def format_plucker(p: PluckerVector) -> str:
    return (f"q {p.field.p} {p.field.m}\n"
            f"grassmann {p.n_plus_1} {p.k_plus_1}\n"
            + " ".join(str(c) for c in p.coords) + "\n")


def parse_plucker(text: str) -> PluckerVector:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 3 or not lines[0].startswith("q ") \
            or not lines[1].startswith("grassmann "):
        raise ValueError("malformed Pluecker vector text")
    _, p, m = lines[0].split()
    _, n1, k1 = lines[1].split()
    field = field_new(int(p), int(m))
    coords = [int(v) for v in lines[2].split()]
    return PluckerVector(field, int(n1), int(k1), coords)
