"""Dense exact linear algebra over GF(q).

Matrices are row-major grids of integer-encoded field elements.  Subspaces
of GF(q)^n are stored as their reduced row-echelon basis with zero rows
dropped, so two equal subspaces are structurally equal.  The empty subspace
(vector dimension 0, projective dimension -1) is representable.

Elimination work is tallied in a module-level counter (one unit per scalar
multiply-accumulate) so decoders can report how much solving they did.
"""

from .errors import AmbientMismatch
from .gf import FiniteField, field_new

_ops = 0


def reset_ops() -> int:
    """Reset the elimination work counter, returning the old value."""
    global _ops
    old = _ops
    _ops = 0
    return old


def get_ops() -> int:
    return _ops


class Matrix:
    """A rows x cols matrix over a finite field."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: FiniteField, data, cols: int | None = None):
        data = [list(row) for row in data]
        if data:
            cols = len(data[0])
        elif cols is None:
            raise ValueError("cols is required for a matrix with no rows")
        q = field.q
        for row in data:
            if len(row) != cols:
                raise ValueError("ragged rows")
            for v in row:
                if not 0 <= v < q:
                    raise ValueError(f"{v} is not an element of {field!r}")
        self.field = field
        self.rows = len(data)
        self.cols = cols
        self.data = data

    @classmethod
    def identity(cls, field: FiniteField, n: int) -> "Matrix":
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, field: FiniteField, rows: int, cols: int) -> "Matrix":
        return cls(field, [[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def vstack(cls, field: FiniteField, matrices, cols: int) -> "Matrix":
        rows = []
        for m in matrices:
            if m.cols != cols:
                raise AmbientMismatch("stacked matrices must share a width")
            rows.extend(m.data)
        return cls(field, rows, cols=cols)

    def copy(self) -> "Matrix":
        return Matrix(self.field, self.data)

    def transpose(self) -> "Matrix":
        return Matrix(self.field,
                      [[self.data[i][j] for i in range(self.rows)]
                       for j in range(self.cols)],
                      cols=self.rows)

    def mul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows or self.field != other.field:
            raise AmbientMismatch("incompatible shapes for matrix product")
        f = self.field
        out = []
        for row in self.data:
            new = [0] * other.cols
            for k, a in enumerate(row):
                if a:
                    orow = other.data[k]
                    for j in range(other.cols):
                        if orow[j]:
                            new[j] = f.add(new[j], f.mul(a, orow[j]))
            out.append(new)
        return Matrix(f, out, cols=other.cols)

    def matvec(self, v) -> list[int]:
        if len(v) != self.cols:
            raise AmbientMismatch("vector length does not match matrix width")
        f = self.field
        out = []
        for row in self.data:
            acc = 0
            for a, b in zip(row, v):
                if a and b:
                    acc = f.add(acc, f.mul(a, b))
            out.append(acc)
        return out

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matrix) and self.field == other.field
                and self.cols == other.cols and self.data == other.data)

    def __hash__(self) -> int:
        return hash((self.field, self.cols, tuple(map(tuple, self.data))))

    def __repr__(self) -> str:
        return f"Matrix({self.field!r}, {self.rows}x{self.cols})"


def _rref_rows(field: FiniteField, rows: list[list[int]], cols: int):
    """In-place Gauss-Jordan; returns (rank, pivot column list)."""
    global _ops
    m = len(rows)
    pivots = []
    r = 0
    if field.m == 1:
        p = field.p
        for c in range(cols):
            pr = r
            while pr < m and rows[pr][c] == 0:
                pr += 1
            if pr == m:
                continue
            rows[r], rows[pr] = rows[pr], rows[r]
            row = rows[r]
            piv = row[c]
            if piv != 1:
                ipiv = pow(piv, p - 2, p)
                for j in range(c, cols):
                    row[j] = row[j] * ipiv % p
                _ops += cols - c
            for i in range(m):
                if i != r and rows[i][c]:
                    f0 = rows[i][c]
                    tgt = rows[i]
                    for j in range(c, cols):
                        tgt[j] = (tgt[j] - f0 * row[j]) % p
                    _ops += cols - c
            pivots.append(c)
            r += 1
            if r == m:
                break
    else:
        f_inv, f_mul, f_sub = field.inv, field.mul, field.sub
        for c in range(cols):
            pr = r
            while pr < m and rows[pr][c] == 0:
                pr += 1
            if pr == m:
                continue
            rows[r], rows[pr] = rows[pr], rows[r]
            row = rows[r]
            piv = row[c]
            if piv != 1:
                ipiv = f_inv(piv)
                for j in range(c, cols):
                    row[j] = f_mul(row[j], ipiv)
                _ops += cols - c
            for i in range(m):
                if i != r and rows[i][c]:
                    f0 = rows[i][c]
                    tgt = rows[i]
                    for j in range(c, cols):
                        if row[j]:
                            tgt[j] = f_sub(tgt[j], f_mul(f0, row[j]))
                    _ops += cols - c
            pivots.append(c)
            r += 1
            if r == m:
                break
    return r, pivots


def rref(M: Matrix):
    """Unique reduced row-echelon form of M.

    Returns (R, rank, pivot_columns).
    """
    rows = [list(r) for r in M.data]
    rank_, pivots = _rref_rows(M.field, rows, M.cols)
    return Matrix(M.field, rows, cols=M.cols), rank_, tuple(pivots)


def rank(M: Matrix) -> int:
    rows = [list(r) for r in M.data]
    r, _ = _rref_rows(M.field, rows, M.cols)
    return r


def det(M: Matrix) -> int:
    """Determinant by Gaussian elimination (exact field arithmetic)."""
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    return det_rows(M.field, M.data)


def det_rows(field: FiniteField, rows) -> int:
    n = len(rows)
    a = [list(r) for r in rows]
    f_inv, f_mul, f_sub = field.inv, field.mul, field.sub
    result = 1
    for c in range(n):
        pr = c
        while pr < n and a[pr][c] == 0:
            pr += 1
        if pr == n:
            return 0
        if pr != c:
            a[c], a[pr] = a[pr], a[c]
            result = field.neg(result)
        piv = a[c][c]
        result = f_mul(result, piv)
        ipiv = f_inv(piv)
        for i in range(c + 1, n):
            if a[i][c]:
                factor = f_mul(a[i][c], ipiv)
                arow, crow = a[i], a[c]
                for j in range(c, n):
                    if crow[j]:
                        arow[j] = f_sub(arow[j], f_mul(factor, crow[j]))
    return result


def inverse(M: Matrix) -> Matrix:
    if M.rows != M.cols:
        raise ValueError("inverse of a non-square matrix")
    n = M.rows
    aug = [list(row) + [1 if i == j else 0 for j in range(n)]
           for i, row in enumerate(M.data)]
    r, _ = _rref_rows(M.field, aug, 2 * n)
    if r < n:
        raise ValueError("matrix is singular")
    return Matrix(M.field, [row[n:] for row in aug], cols=n)


def kernel(M: Matrix) -> "Subspace":
    """The right null space {v : M v = 0} as a canonical Subspace."""
    rows = [list(r) for r in M.data]
    _, pivots = _rref_rows(M.field, rows, M.cols)
    f = M.field
    pivot_set = set(pivots)
    basis = []
    for free in range(M.cols):
        if free in pivot_set:
            continue
        v = [0] * M.cols
        v[free] = 1
        for i, pc in enumerate(pivots):
            v[pc] = f.neg(rows[i][free])
        basis.append(v)
    return Subspace.from_rows(f, M.cols, basis)


class Subspace:
    """A subspace of GF(q)^ambient held as a canonical RREF basis."""

    __slots__ = ("field", "ambient", "basis")

    def __init__(self, field: FiniteField, ambient: int, basis: Matrix):
        # callers must pass an RREF basis with no zero rows; use from_rows
        # to canonicalize arbitrary spanning sets
        self.field = field
        self.ambient = ambient
        self.basis = basis

    @classmethod
    def from_rows(cls, field: FiniteField, ambient: int, rows) -> "Subspace":
        work = [list(r) for r in rows]
        for r in work:
            if len(r) != ambient:
                raise AmbientMismatch("row length does not match ambient")
        rank_, _ = _rref_rows(field, work, ambient)
        return cls(field, ambient, Matrix(field, work[:rank_], cols=ambient))

    @classmethod
    def zero(cls, field: FiniteField, ambient: int) -> "Subspace":
        return cls(field, ambient, Matrix(field, [], cols=ambient))

    @classmethod
    def full(cls, field: FiniteField, ambient: int) -> "Subspace":
        return cls(field, ambient, Matrix.identity(field, ambient))

    @property
    def dim(self) -> int:
        """Vector-space dimension."""
        return self.basis.rows

    @property
    def pdim(self) -> int:
        """Projective dimension; -1 for the zero subspace."""
        return self.basis.rows - 1

    def key(self) -> tuple:
        """Canonical sort key (the serialized RREF basis)."""
        return tuple(tuple(row) for row in self.basis.data)

    def contains(self, v) -> bool:
        if len(v) != self.ambient:
            raise AmbientMismatch("vector length does not match ambient")
        f = self.field
        r = list(v)
        for row in self.basis.data:
            pc = next(j for j, x in enumerate(row) if x)
            if r[pc]:
                c = r[pc]
                for j in range(pc, self.ambient):
                    if row[j]:
                        r[j] = f.sub(r[j], f.mul(c, row[j]))
        return not any(r)

    def contains_subspace(self, other: "Subspace") -> bool:
        self._check_compatible(other)
        return all(self.contains(row) for row in other.basis.data)

    def vectors(self):
        """All q^dim vectors of the subspace (exhaustive; small spaces only)."""
        f = self.field
        rows = self.basis.data
        coeffs = [0] * len(rows)
        total = f.q ** len(rows)
        for n in range(total):
            x = n
            for i in range(len(rows)):
                coeffs[i] = x % f.q
                x //= f.q
            v = [0] * self.ambient
            for c, row in zip(coeffs, rows):
                if c:
                    for j, e in enumerate(row):
                        if e:
                            v[j] = f.add(v[j], f.mul(c, e))
            yield v

    def _check_compatible(self, other: "Subspace") -> None:
        if self.field != other.field or self.ambient != other.ambient:
            raise AmbientMismatch("subspaces live in different ambient spaces")

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        return Subspace.from_rows(self.field, self.ambient,
                                  self.basis.data + other.basis.data)

    def annihilator(self) -> "Subspace":
        """{v : b . v = 0 for every basis vector b} (dim = ambient - dim)."""
        return kernel(self.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        return self.annihilator().sum(other.annihilator()).annihilator()

    def distance(self, other: "Subspace") -> int:
        """Subspace distance dim(A+B) - dim(A and B)."""
        self._check_compatible(other)
        return 2 * self.sum(other).dim - self.dim - other.dim

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subspace) and self.field == other.field
                and self.ambient == other.ambient and self.basis == other.basis)

    def __hash__(self) -> int:
        return hash((self.field, self.ambient, self.key()))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient}, {self.field!r})"


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    return a.sum(b)


def subspace_intersection(a: Subspace, b: Subspace) -> Subspace:
    return a.intersect(b)


def subspace_distance(a: Subspace, b: Subspace) -> int:
    return a.distance(b)


# ----------------------------------------------------------------------
# text format: line 1 "q <p> <m>", line 2 "dims <rows> <cols>", then rows
# ----------------------------------------------------------------------

def format_matrix(M: Matrix) -> str:
    lines = [f"q {M.field.p} {M.field.m}", f"dims {M.rows} {M.cols}"]
    lines.extend(" ".join(str(v) for v in row) for row in M.data)
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> Matrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) < 2 or not lines[0].startswith("q ") \
            or not lines[1].startswith("dims "):
        raise ValueError("malformed matrix text")
    _, p, m = lines[0].split()
    _, rows, cols = lines[1].split()
    rows, cols = int(rows), int(cols)
    field = field_new(int(p), int(m))
    data = [[int(v) for v in lines[2 + i].split()] for i in range(rows)]
    return Matrix(field, data, cols=cols)


def format_subspace(s: Subspace) -> str:
    return format_matrix(s.basis)


def parse_subspace(text: str) -> Subspace:
    M = parse_matrix(text)
    return Subspace.from_rows(M.field, M.cols, M.data)
