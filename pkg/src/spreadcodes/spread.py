"""Desarguesian t-spread codes in PG(2t+1, q) via field reduction.

Points of the projective line over GF(q^(t+1)), read as GF(q)-subspaces of
GF(q)^(2t+2), give q^(t+1) + 1 pairwise disjoint (t+1)-dimensional
subspaces covering every nonzero vector: a spread.  Used as a subspace
code it has q^(t+1) + 1 codewords, minimum subspace distance 2(t+1), and
its Pluecker image spans a linear subspace U of projective dimension
2^(t+1) - 1, so membership in the code is a linear condition plus
decomposability.  U and its dual-coordinates counterpart are computed from
the codeword Pluecker matrix at construction time.

For t = 1 the two linear forms cutting U out of PG(5, q) feed the
closed-form line-spread decoder.
"""

from dataclasses import dataclass
from math import comb

from .errors import BadParams, WrongT
from .exterior import (dual_reindex, is_decomposable, plucker_primary)
from .gf import FiniteField, embed_subfield, field_new
from .linalg import Matrix, Subspace, format_matrix, inverse, parse_matrix
from .schubert import LinearVariety, implicitize


def factor_prime_power(q: int) -> tuple[int, int]:
    """q = p^m with p prime, else BadParams."""
    if q < 2:
        raise BadParams(f"{q} is not a prime power")
    p = 2
    while p * p <= q and q % p:
        p += 1
    if q % p:
        p = q  # q itself is prime
    m = 0
    rest = q
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1:
        raise BadParams(f"{q} is not a prime power")
    return p, m


class SpreadCode:
    """A Desarguesian t-spread code with its linear Pluecker span."""

    __slots__ = ("q", "t", "field", "codewords", "U", "U_dual")

    def __init__(self, q: int, t: int, field: FiniteField, codewords,
                 U: LinearVariety, U_dual: LinearVariety):
        self.q = q
        self.t = t
        self.field = field
        self.codewords = tuple(codewords)
        self.U = U
        self.U_dual = U_dual

    @property
    def n_plus_1(self) -> int:
        return 2 * self.t + 2

    @property
    def k_plus_1(self) -> int:
        return self.t + 1

    @property
    def k(self) -> int:
        """Projective dimension of the codewords."""
        return self.t

    def contains_codeword(self, x: Subspace) -> bool:
        return any(c == x for c in self.codewords)

    def __repr__(self) -> str:
        return (f"SpreadCode(q={self.q}, t={self.t}, "
                f"{len(self.codewords)} codewords)")


class _FieldReduction:
    """GF(q)-vector-space structure on E = GF(q^(t+1)), built over the
    common prime field so no tower of extensions is needed.

    The basis of E over GF(q) is chosen orthonormal for a twisted trace
    form Tr(lam * z * w).  In those coordinates the standard dot product
    of GF(q)^(t+1) is that trace form, so the annihilator of a spread
    codeword is again a spread codeword; this is what makes the dual
    Pluecker coordinates of the code land back in its own span U.
    """

    def __init__(self, q: int, t: int):
        p, m = factor_prime_power(q)
        self.base = field_new(p, m)
        self.ext = field_new(p, m * (t + 1))
        self.t = t
        self.m = m
        self.embed = [embed_subfield(self.base, a, self.ext)
                      for a in range(q)]
        self._emb_index = {img: a for a, img in enumerate(self.embed)}
        self.basis = self._orthonormal_basis()
        prime = field_new(p)
        cols = []
        for i in range(t + 1):
            for j in range(m):
                val = self.ext.mul(self.embed[p ** j], self.basis[i])
                cols.append(self.ext.coeffs(val))
        M = Matrix(prime, [[cols[c][r] for c in range(len(cols))]
                           for r in range(m * (t + 1))])
        self._solve = inverse(M)

    def trace(self, y: int) -> int:
        """Relative trace E -> GF(q), returned as a small-field element."""
        acc = 0
        term = y
        for _ in range(self.t + 1):
            acc = self.ext.add(acc, term)
            term = self.ext.pow(term, self.base.q)
        return self._emb_index[acc]

    def _form(self, lam: int, z: int, w: int) -> int:
        return self.trace(self.ext.mul(lam, self.ext.mul(z, w)))

    def _orthonormal_basis(self) -> list[int]:
        base, ext = self.base, self.ext
        smallest_root = {}
        for s in range(1, base.q):
            smallest_root.setdefault(base.mul(s, s), s)
        for lam in range(1, ext.q):
            basis: list[int] = []
            while len(basis) < self.t + 1:
                found = None
                for v in range(1, ext.q):
                    if any(self._form(lam, v, b) for b in basis):
                        continue
                    c = self._form(lam, v, v)
                    root = smallest_root.get(c)
                    if root is not None:
                        found = ext.mul(v, self.embed[base.inv(root)])
                        break
                if found is None:
                    break
                basis.append(found)
            if len(basis) == self.t + 1:
                return basis
        raise BadParams(
            f"no self-dual field-reduction basis for q={base.q}, t={self.t}")

    def coords(self, z: int) -> list[int]:
        """GF(q)-coordinates of z in the chosen basis, length t+1."""
        digits = self.ext.coeffs(z)
        g = self._solve.matvec(digits)
        return [self.base.from_coeffs(g[i * self.m:(i + 1) * self.m])
                for i in range(self.t + 1)]


def build_spread(q: int, t: int) -> SpreadCode:
    """The Desarguesian t-spread code in PG(2t+1, q).

    Codewords are the subspaces {(a*z, b*z) : z in GF(q^(t+1))} for the
    projective points (a : b) of the line over the extension field,
    written in GF(q)-coordinates.  The Pluecker span U and its
    dual-reindexed counterpart are attached with both spanning sets and
    equations.
    """
    if t < 1:
        raise BadParams("t must be >= 1")
    if 2 * (t + 1) > 32:
        raise BadParams("ambient dimension 2(t+1) above the design envelope")
    red = _FieldReduction(q, t)
    field = red.base
    n1 = 2 * (t + 1)
    ext = red.ext

    codewords = []
    points = [(1, b) for b in range(ext.q)] + [(0, 1)]
    for a, b in points:
        rows = []
        for xp in red.basis:
            za = ext.mul(a, xp)
            zb = ext.mul(b, xp)
            rows.append(red.coords(za) + red.coords(zb))
        codewords.append(Subspace.from_rows(field, n1, rows))
    codewords.sort(key=lambda c: c.key())

    U = _plucker_span(field, n1, t + 1,
                      [plucker_primary(c).coords for c in codewords])
    U_dual = _plucker_span(field, n1, t + 1,
                           [dual_reindex(plucker_primary(c)).coords
                            for c in codewords])
    return SpreadCode(q, t, field, codewords, U, U_dual)


def _plucker_span(field, n1, k1, coord_rows) -> LinearVariety:
    span = Subspace.from_rows(field, comb(n1, k1),
                              [list(c) for c in coord_rows]).basis
    return LinearVariety(field, n1, k1, span=span,
                         equations=implicitize(span))


# ----------------------------------------------------------------------
# verification
# ----------------------------------------------------------------------

@dataclass
class SpreadReport:
    """Outcome of verify_spread: (check name, passed, detail) triples."""

    checks: list

    @property
    def ok(self) -> bool:
        return all(passed for _, passed, _ in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c[1]]


def verify_spread(code: SpreadCode) -> SpreadReport:
    """Check every structural property a Desarguesian spread code must have.

    Never raises on a bad code; each failed property is reported.
    """
    checks = []
    f = code.field
    q, t = code.q, code.t
    n1 = code.n_plus_1
    k1 = code.k_plus_1
    cws = code.codewords

    expected = q ** k1 + 1
    checks.append(("codeword count", len(cws) == expected,
                   f"{len(cws)} vs q^(t+1)+1 = {expected}"))
    checks.append(("codeword dimension", all(c.dim == k1 for c in cws),
                   f"every codeword has vector dimension {k1}"))

    pairwise_trivial = all(cws[i].intersect(cws[j]).dim == 0
                           for i in range(len(cws))
                           for j in range(i + 1, len(cws)))
    checks.append(("pairwise trivial intersection", pairwise_trivial, ""))

    # counting: disjoint codewords of the right size cover everything
    covered = len(cws) * (q ** k1 - 1)
    checks.append(("covering count", covered == q ** n1 - 1,
                   f"{covered} nonzero vectors vs {q ** n1 - 1}"))
    if q ** n1 <= 4096:
        import itertools as _it
        hits_ok = True
        for v in _it.product(range(q), repeat=n1):
            if not any(v):
                continue
            hits = sum(1 for c in cws if c.contains(list(v)))
            if hits != 1:
                hits_ok = False
                break
        checks.append(("partition (exhaustive)", hits_ok, ""))

    if len(cws) > 1:
        dmin = min(cws[i].distance(cws[j])
                   for i in range(len(cws)) for j in range(i + 1, len(cws)))
        checks.append(("minimum distance", dmin == 2 * k1,
                       f"{dmin} vs 2(t+1) = {2 * k1}"))

    span_pdim = code.U.dim() - 1
    checks.append(("Pluecker span dimension", span_pdim == 2 ** k1 - 1,
                   f"projective dim {span_pdim} vs {2 ** k1 - 1}"))

    pluckers = [list(plucker_primary(c).coords) for c in cws]
    ambient = comb(n1, k1)
    import itertools as _it
    cap_ok = all(
        Subspace.from_rows(f, ambient, [pluckers[i] for i in triple]).dim == 3
        for triple in _it.combinations(range(len(pluckers)), 3))
    checks.append(("cap (no 3 collinear)", cap_ok, ""))

    if comb(len(pluckers), k1) <= 20000:
        gp_ok = all(
            Subspace.from_rows(f, ambient,
                               [pluckers[i] for i in subset]).dim == k1
            for subset in _it.combinations(range(len(pluckers)), k1))
        checks.append((f"general position ({k1}-subsets)", gp_ok, ""))

    dual_dim = code.U_dual.dim()
    checks.append(("dual span dimension", dual_dim == code.U.dim(),
                   f"{dual_dim} vs {code.U.dim()}"))
    if t == 1:
        same = (code.U.span_subspace() == code.U_dual.span_subspace())
        checks.append(("dual span equals U (t=1)", same, ""))
        checks.append(("no lines inside the quadric section",
                       _no_lines_in_section(code, pluckers), ""))
    return SpreadReport(checks)


def _no_lines_in_section(code: SpreadCode, pluckers) -> bool:
    """For t=1: no line through two codeword points stays on the quadric,
    i.e. the section U meets the Grassmannian in a cap of points only."""
    f = code.field
    for i in range(len(pluckers)):
        for j in range(i + 1, len(pluckers)):
            a, b = pluckers[i], pluckers[j]
            # b itself is a codeword point, so the line a + lam*b, b lies
            # on the quadric iff every a + lam*b does
            if all(is_decomposable(
                    f, code.n_plus_1, code.k_plus_1,
                    [f.add(x, f.mul(lam, y)) for x, y in zip(a, b)])
                    for lam in range(f.q)):
                return False
    return True


# ----------------------------------------------------------------------
# t = 1 constants for the closed-form decoder
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class KleinDecoderData:
    """The two independent linear forms cutting the line-spread span U
    out of PG(5, q); both primary and dual codeword coordinates satisfy
    them."""

    field: FiniteField
    a: tuple
    b: tuple


def klein_constants(code: SpreadCode) -> KleinDecoderData:
    if code.t != 1:
        raise WrongT("the closed-form decoder needs a line spread (t = 1)")
    eqs = code.U.equations
    if eqs.rows != 2:
        raise WrongT(f"expected 2 defining forms, found {eqs.rows}")
    return KleinDecoderData(code.field, tuple(eqs.data[0]), tuple(eqs.data[1]))


# ----------------------------------------------------------------------
# code artifact file
# ----------------------------------------------------------------------

def format_code(code: SpreadCode) -> str:
    parts = [f"[params] {code.q} {code.field.p} {code.field.m} {code.t}\n"]
    for i, c in enumerate(code.codewords):
        parts.append(f"[codeword {i}]\n")
        parts.append(format_matrix(c.basis))
    parts.append("[U-span]\n")
    parts.append(format_matrix(code.U.span))
    parts.append("[U-equations]\n")
    parts.append(format_matrix(code.U.equations))
    parts.append("[U-dual-span]\n")
    parts.append(format_matrix(code.U_dual.span))
    return "".join(parts)


def parse_code(text: str) -> SpreadCode:
    lines = text.splitlines()
    header = None
    sections: list[tuple[str, list[str]]] = []
    for ln in lines:
        if not ln.strip():
            continue
        if ln.startswith("[params]"):
            header = ln.split()[1:]
        elif ln.startswith("["):
            sections.append((ln.strip("[]").strip(), []))
        else:
            if not sections:
                raise ValueError("matrix data before any section header")
            sections[-1][1].append(ln)
    if header is None:
        raise ValueError("missing [params] section")
    q, p, m, t = (int(v) for v in header)
    field = field_new(p, m)
    blocks = {name: parse_matrix("\n".join(body)) for name, body in sections}
    codewords = []
    i = 0
    while f"codeword {i}" in blocks:
        M = blocks[f"codeword {i}"]
        codewords.append(Subspace.from_rows(field, M.cols, M.data))
        i += 1
    n1 = 2 * (t + 1)
    U = LinearVariety(field, n1, t + 1, span=blocks["U-span"],
                      equations=blocks["U-equations"])
    U_dual = LinearVariety(field, n1, t + 1, span=blocks["U-dual-span"])
    return SpreadCode(q, t, field, codewords, U, U_dual)
