"""Decoders for spread codes and other linear-section subspace codes.

Three decoders share one contract: given a received subspace x, return the
codewords within subspace distance t.

* decode_klein: closed-form line-spread decoder (t = 1).  A received point
  or plane is turned into the sent line by plugging its coordinates into
  the two linear forms cutting the code's span out of PG(5, q); a received
  line only needs a membership test.  No wedge coordinates are touched.

* decode_linear: the received subspace pins down an intersection
  constraint; its linear equations in the wedge space are stacked with the
  code's own equations and solved by one Gaussian elimination.  Solution
  points that are decomposable are candidate codewords.

* decode_param: same mathematics through the dual route -- substitute the
  spanning parametrization of the constraint variety into the code's
  equations and solve for the parameters.

A brute-force nearest-codeword oracle (oracle_decode) provides the ground
truth the fast decoders are tested against.

Received subspaces of projective dimension above k are dualized first
(annihilator of x against the dual-coordinate span), and the answer is
dualized back.
"""

from dataclasses import dataclass
from math import comb

from .errors import AmbientMismatch, BadDim, EnumerationOverflow
from .exterior import annihilating_space, plucker_primary
from .linalg import Matrix, Subspace, get_ops, kernel
from .schubert import FlagSpec, LinearVariety, schubert_basis, schubert_equations
from .spread import KleinDecoderData, SpreadCode

DECODED = "decoded"
RECEIVED_IS_CODEWORD = "received_is_codeword"
NO_CODEWORD = "no_codeword"
AMBIGUOUS = "ambiguous"

# largest projective solution-space point count the decoders will scan;
# within capacity the count is 1, so tripping this signals garbage input
ENUMERATION_LIMIT = 4096


@dataclass(frozen=True)
class DecodeOutcome:
    """Result of a decode call.

    codewords holds the decoded codeword (singleton for DECODED /
    RECEIVED_IS_CODEWORD, every tied candidate for AMBIGUOUS); the
    counters record how much searching and elimination work was done.
    """

    status: str
    codewords: tuple
    candidates_in_wedge: int = 0
    joint_rows: int = 0
    elim_ops: int = 0

    @property
    def ok(self) -> bool:
        return self.status in (DECODED, RECEIVED_IS_CODEWORD)


def delta_required(k: int, t: int, dim_x: int) -> int:
    """Smallest guaranteed projective dimension of (codeword meet x):
    ceil((k - t + dim_x) / 2), floored at 0."""
    return max(0, (k - t + dim_x + 1) // 2)


# ----------------------------------------------------------------------
# closed-form line-spread decoder
# ----------------------------------------------------------------------

def _bilinear_rows(field, form, p):
    """Coefficients in the running point X of form(pluecker(p wedge X))."""
    f0, f1, f2, f3, f4, f5 = form
    mul, add, sub, neg = field.mul, field.add, field.sub, field.neg
    return [
        neg(add(add(mul(f0, p[1]), mul(f1, p[2])), mul(f2, p[3]))),
        sub(mul(f0, p[0]), add(mul(f3, p[2]), mul(f4, p[3]))),
        sub(add(mul(f1, p[0]), mul(f3, p[1])), mul(f5, p[3])),
        add(add(mul(f2, p[0]), mul(f4, p[1])), mul(f5, p[2])),
    ]


def decode_klein(x: Subspace, kd: KleinDecoderData) -> DecodeOutcome:
    """Decode against a line spread in PG(3, q) given its two span forms.

    A point p: the sent line is the solution of the two forms evaluated
    on the pencil of lines through p.  A plane: the sent line is spanned
    by the two points obtained from the plane's dual coordinates by the
    same coefficient pattern.  A line decodes by membership test.
    """
    field = kd.field
    if x.field != field or x.ambient != 4:
        raise BadDim("the closed-form decoder works in GF(q)^4")
    if x.dim not in (1, 2, 3):
        raise BadDim(f"received vector dimension {x.dim} is not decodable")

    def in_code(line: Subspace) -> bool:
        coords = plucker_primary(line).coords
        return (_form_value(field, kd.a, coords) == 0
                and _form_value(field, kd.b, coords) == 0)

    if x.dim == 2:
        if in_code(x):
            return DecodeOutcome(RECEIVED_IS_CODEWORD, (x,))
        return DecodeOutcome(NO_CODEWORD, ())

    if x.dim == 1:
        p = x.basis.data[0]
        system = Matrix(field, [_bilinear_rows(field, kd.a, p),
                                _bilinear_rows(field, kd.b, p)])
        c = kernel(system)
    else:  # plane: use its dual coordinates
        p_star = x.annihilator().basis.data[0]
        c = Subspace.from_rows(field, 4,
                               [_bilinear_rows(field, kd.a, p_star),
                                _bilinear_rows(field, kd.b, p_star)])
    if c.dim != 2 or not in_code(c):
        return DecodeOutcome(NO_CODEWORD, ())
    return DecodeOutcome(DECODED, (c,))


def _form_value(field, form, coords):
    acc = 0
    for a, c in zip(form, coords):
        if a and c:
            acc = field.add(acc, field.mul(a, c))
    return acc


# ----------------------------------------------------------------------
# wedge-space decoders
# ----------------------------------------------------------------------

def decode_linear(x: Subspace, code: SpreadCode) -> DecodeOutcome:
    """Joint-equations decoder: stack the constraint equations with the
    code equations, solve once, scan the solution points."""
    return _decode_wedge(x, code, parametrized=False)


def decode_param(x: Subspace, code: SpreadCode) -> DecodeOutcome:
    """Parametrization decoder: substitute the constraint span into the
    code equations and solve for the coefficients."""
    return _decode_wedge(x, code, parametrized=True)


def _decode_wedge(x: Subspace, code: SpreadCode, parametrized: bool) -> DecodeOutcome:
    field = code.field
    if x.field != field or x.ambient != code.n_plus_1:
        raise AmbientMismatch("received subspace does not match the code")
    if x.dim == 0:
        return DecodeOutcome(NO_CODEWORD, ())

    k = code.k
    t = code.t
    n = code.n_plus_1 - 1
    dualized = x.pdim > k
    if dualized:
        work = x.annihilator()
        variety = code.U_dual
        if work.dim == 0:
            return DecodeOutcome(NO_CODEWORD, ())
    else:
        work = x
        variety = code.U

    delta = delta_required(k, t, work.pdim)
    flag = FlagSpec(work, delta, k)

    ops_before = get_ops()
    if parametrized:
        span = schubert_basis(flag, n).span
        system = variety.equations.mul(span.transpose())
        sol = kernel(system)
        points = _projective_reps(sol)
        alphas = (_combine(field, sol.basis.data, coeffs) for coeffs in points)
        wedges = (_combine(field, span.data, alpha) for alpha in alphas)
    else:
        constraint = schubert_equations(flag, n).equations
        system = Matrix.vstack(field, [constraint, variety.equations],
                               cols=variety.ambient)
        sol = kernel(system)
        points = _projective_reps(sol)
        wedges = (_combine(field, sol.basis.data, coeffs) for coeffs in points)
    elim_ops = get_ops() - ops_before
    joint_rows = system.rows

    count = (field.q ** sol.dim - 1) // (field.q - 1)
    if count > ENUMERATION_LIMIT:
        raise EnumerationOverflow(
            f"solution space has {count} projective points")

    examined = 0
    candidates = {}
    for w in wedges:
        examined += 1
        ker = annihilating_space(field, code.n_plus_1, code.k_plus_1, w)
        if ker.dim != code.k_plus_1:
            continue
        if work.distance(ker) <= t:
            candidates[ker.key()] = ker

    found = sorted(candidates.values(), key=lambda s: s.key())
    if dualized:
        found = sorted((c.annihilator() for c in found), key=lambda s: s.key())

    if not found:
        return DecodeOutcome(NO_CODEWORD, (), examined, joint_rows, elim_ops)
    if len(found) > 1:
        return DecodeOutcome(AMBIGUOUS, tuple(found), examined, joint_rows,
                             elim_ops)
    c = found[0]
    status = RECEIVED_IS_CODEWORD if c == x else DECODED
    return DecodeOutcome(status, (c,), examined, joint_rows, elim_ops)


def _projective_reps(sol: Subspace):
    """Coefficient tuples covering each projective point of sol once
    (leading coefficient 1)."""
    import itertools
    q = sol.field.q
    s = sol.dim
    for lead in range(s):
        for tail in itertools.product(range(q), repeat=s - lead - 1):
            yield (0,) * lead + (1,) + tail


def _combine(field, rows, coeffs) -> list[int]:
    out = [0] * len(rows[0])
    for c, row in zip(coeffs, rows):
        if c == 1:
            for j, v in enumerate(row):
                if v:
                    out[j] = field.add(out[j], v)
        elif c:
            for j, v in enumerate(row):
                if v:
                    out[j] = field.add(out[j], field.mul(c, v))
    return out


# ----------------------------------------------------------------------
# ground truth
# ----------------------------------------------------------------------

def oracle_decode(x: Subspace, code: SpreadCode) -> DecodeOutcome:
    """Brute-force nearest-codeword decoding: scan the whole code.

    Returns every codeword at minimum distance; DECODED only when the
    minimizer is unique and within the error-correcting capacity t.
    """
    if x.field != code.field or x.ambient != code.n_plus_1:
        raise AmbientMismatch("received subspace does not match the code")
    best = None
    minimizers = []
    for c in code.codewords:
        d = x.distance(c)
        if best is None or d < best:
            best = d
            minimizers = [c]
        elif d == best:
            minimizers.append(c)
    minimizers.sort(key=lambda s: s.key())
    if len(minimizers) == 1 and best <= code.t:
        c = minimizers[0]
        status = RECEIVED_IS_CODEWORD if c == x else DECODED
        return DecodeOutcome(status, (c,))
    if len(minimizers) > 1:
        return DecodeOutcome(AMBIGUOUS, tuple(minimizers))
    return DecodeOutcome(NO_CODEWORD, tuple(minimizers))
