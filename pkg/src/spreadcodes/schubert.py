"""Linear wedge-space varieties carving out intersection constraints.

For a subspace x and integers delta <= dim(x) <= k (projective), the set of
k-dimensional subspaces y with dim(y intersect x) >= delta maps under the
Pluecker embedding into a linear subspace W of the wedge space.  This
module computes W explicitly, as a spanning set and as linear equations,
via a base change adapted to x:

  * complete an RREF basis of x to an invertible (n+1) x (n+1) matrix B by
    appending standard basis vectors on the non-pivot columns;
  * wedge the rows of B over every multi-index whose (delta)-th entry stays
    inside the x block -- those wedges span W;
  * wedge the rows of the inverse-transpose of B over the remaining
    multi-indices -- those are the linear forms cutting W out.

The two constructions are dual bases of each other, so the span and the
equations are consistent by construction.
"""

from dataclasses import dataclass
from math import comb

from .errors import AmbientMismatch, BadFlag, ZeroSubspace
from .exterior import multi_indices, wedge_of_rows
from .gf import FiniteField
from .linalg import Matrix, Subspace, inverse, kernel, rref


@dataclass(frozen=True)
class FlagSpec:
    """The data determining an intersection constraint: meet x in projective
    dimension at least delta, among subspaces of projective dimension k."""

    x: Subspace
    delta: int
    k: int

    def __post_init__(self):
        if self.x.dim == 0:
            raise BadFlag("the reference subspace must be nonzero")
        if not 0 <= self.delta <= self.x.pdim <= self.k:
            raise BadFlag(
                f"need 0 <= delta <= dim(x) <= k, got delta={self.delta}, "
                f"dim(x)={self.x.pdim}, k={self.k}")


class LinearVariety:
    """A linear subspace of the wedge space of grade k+1 over GF(q)^(n+1),
    held as a spanning set and/or defining linear equations.

    Span vectors are raw wedge coordinate rows (not necessarily
    decomposable, not projectively normalized); equations are coefficient
    rows in RREF.  Either side may be absent and is derived on demand.
    """

    __slots__ = ("field", "n_plus_1", "k_plus_1", "_span", "_equations")

    def __init__(self, field: FiniteField, n_plus_1: int, k_plus_1: int,
                 span: Matrix | None = None, equations: Matrix | None = None):
        if span is None and equations is None:
            raise ValueError("need a span or equations")
        ambient = comb(n_plus_1, k_plus_1)
        for m in (span, equations):
            if m is not None and m.cols != ambient:
                raise AmbientMismatch("width does not match the wedge dimension")
        self.field = field
        self.n_plus_1 = n_plus_1
        self.k_plus_1 = k_plus_1
        self._span = span
        self._equations = equations

    @property
    def ambient(self) -> int:
        return comb(self.n_plus_1, self.k_plus_1)

    @property
    def span(self) -> Matrix:
        if self._span is None:
            self._span = parametrize(self._equations)
        return self._span

    @property
    def equations(self) -> Matrix:
        if self._equations is None:
            self._equations = implicitize(self._span)
        return self._equations

    def span_subspace(self) -> Subspace:
        """The span as a canonical subspace of the wedge space."""
        return Subspace.from_rows(self.field, self.ambient, self.span.data)

    def dim(self) -> int:
        """Vector dimension of the span."""
        if self._span is not None:
            return rref(self._span)[1]
        return self.ambient - rref(self._equations)[1]

    def contains(self, coords) -> bool:
        """Whether a wedge coordinate vector satisfies every equation."""
        return not any(self.equations.matvec(list(coords)))


def implicitize(span: Matrix) -> Matrix:
    """Linear forms vanishing exactly on the row space of span (RREF)."""
    return kernel(span).basis


def parametrize(equations: Matrix) -> Matrix:
    """A canonical spanning set of the solution space of the equations."""
    return kernel(equations).basis


def base_change_matrix(x: Subspace) -> Matrix:
    """Invertible matrix whose first dim(x) rows are the RREF basis of x,
    completed by the standard basis vectors of the non-pivot columns."""
    if x.dim == 0:
        raise ZeroSubspace("cannot build a base change for the zero subspace")
    n1 = x.ambient
    rows = [list(r) for r in x.basis.data]
    pivots = {next(j for j, v in enumerate(r) if v) for r in rows}
    for j in range(n1):
        if j not in pivots:
            unit = [0] * n1
            unit[j] = 1
            rows.append(unit)
    return Matrix(x.field, rows, cols=n1)


def _selected(flag: FlagSpec, n1: int):
    """Multi-indices whose wedge over the base-change rows lies in W:
    exactly those whose entry at position delta stays in the x block."""
    b = flag.x.pdim
    k1 = flag.k + 1
    sel, rest = [], []
    for idx in multi_indices(n1, k1):
        (sel if idx[flag.delta] <= b else rest).append(idx)
    return sel, rest


def span_dimension(dim_x: int, delta: int, k: int, n: int) -> int:
    """Vector dimension of W from the counting formula
    sum_d C(dim_x+1, d+1) * C(n-dim_x, k-d), d = delta..dim_x."""
    return sum(comb(dim_x + 1, d + 1) * comb(n - dim_x, k - d)
               for d in range(delta, dim_x + 1))


def schubert_basis(flag: FlagSpec, n: int) -> LinearVariety:
    """Spanning set of the linear variety enforcing the flag constraint.

    Rows are the wedges of the base-change rows over the selected
    multi-indices; they are independent because the base change is
    invertible, and their count matches span_dimension.
    """
    n1 = n + 1
    if flag.x.ambient != n1:
        raise AmbientMismatch("flag subspace does not live in PG(n)")
    B = base_change_matrix(flag.x)
    sel, _ = _selected(flag, n1)
    rows = [wedge_of_rows(flag.x.field, [B.data[i] for i in idx], n1)
            for idx in sel]
    span = Matrix(flag.x.field, rows, cols=comb(n1, flag.k + 1))
    return LinearVariety(flag.x.field, n1, flag.k + 1, span=span)


def schubert_equations(flag: FlagSpec, n: int) -> LinearVariety:
    """Defining linear equations of the same variety, via the dual basis.

    The wedges of the rows of the inverse-transpose of the base change,
    taken over the complementary multi-indices, annihilate exactly the
    span produced by schubert_basis.  Returned in RREF.
    """
    n1 = n + 1
    if flag.x.ambient != n1:
        raise AmbientMismatch("flag subspace does not live in PG(n)")
    B = base_change_matrix(flag.x)
    A = inverse(B).transpose()
    _, rest = _selected(flag, n1)
    rows = [wedge_of_rows(flag.x.field, [A.data[i] for i in idx], n1)
            for idx in rest]
    eqs = Matrix(flag.x.field, rows, cols=comb(n1, flag.k + 1))
    eqs = rref(eqs)[0]
    return LinearVariety(flag.x.field, n1, flag.k + 1, equations=eqs)
