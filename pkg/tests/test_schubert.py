import itertools
import random
from math import comb

import pytest

from spreadcodes.errors import BadFlag, ZeroSubspace
from spreadcodes.exterior import is_decomposable, plucker_primary
from spreadcodes.gf import field_new
from spreadcodes.linalg import Matrix, Subspace, det, rank, rref
from spreadcodes.schubert import (FlagSpec, LinearVariety, base_change_matrix,
                                  implicitize, parametrize, schubert_basis,
                                  schubert_equations, span_dimension)

GF2 = field_new(2)
GF3 = field_new(3)


def all_subspaces_rref(field, ambient, dim):
    """Every dim-dimensional subspace of GF(q)^ambient, via its unique RREF.

    Enumerates pivot column sets, then all assignments of the free entries.
    """
    if dim == 0:
        return [Subspace.zero(field, ambient)]
    out = []
    for pivots in itertools.combinations(range(ambient), dim):
        free_cells = [(i, j) for i in range(dim)
                      for j in range(pivots[i] + 1, ambient) if j not in pivots]
        for values in itertools.product(range(field.q), repeat=len(free_cells)):
            rows = [[0] * ambient for _ in range(dim)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, j), v in zip(free_cells, values):
                rows[i][j] = v
            out.append(Subspace(field, ambient,
                                Matrix(field, rows, cols=ambient)))
    return out


def random_subspace(field, ambient, dim, rng):
    while True:
        s = Subspace.from_rows(field, ambient,
                               [[rng.randrange(field.q) for _ in range(ambient)]
                                for _ in range(dim)])
        if s.dim == dim:
            return s


# ---------------------------------------------------------------------
# base change
# ---------------------------------------------------------------------

def test_base_change_of_prefix_is_identity():
    x = Subspace.from_rows(GF2, 4, [[1, 0, 0, 0], [0, 1, 0, 0]])
    assert base_change_matrix(x) == Matrix.identity(GF2, 4)


def test_base_change_avoids_pivot_columns():
    x = Subspace.from_rows(GF2, 4, [[1, 1, 0, 0]])
    B = base_change_matrix(x)
    assert B.data == [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    assert det(B) != 0
    # appended rows are unit vectors supported off the pivot columns of x
    pivots = {0}
    for row in B.data[1:]:
        assert sum(row) == 1 and row.index(1) not in pivots


def test_base_change_random():
    rng = random.Random(61)
    for _ in range(10):
        x = random_subspace(GF3, 6, rng.randrange(1, 6), rng)
        B = base_change_matrix(x)
        assert det(B) != 0
        assert Subspace.from_rows(GF3, 6, B.data[:x.dim]) == x


def test_base_change_rejects_zero_subspace():
    with pytest.raises(ZeroSubspace):
        base_change_matrix(Subspace.zero(GF2, 4))


# ---------------------------------------------------------------------
# span construction
# ---------------------------------------------------------------------

def test_lines_through_a_point_span_dimension():
    x = Subspace.from_rows(GF2, 4, [[1, 0, 1, 0]])
    W = schubert_basis(FlagSpec(x, 0, 1), 3)
    assert W.dim() == span_dimension(0, 0, 1, 3) == 3


def test_full_flag_gives_single_plucker_point():
    x = Subspace.from_rows(GF3, 4, [[1, 0, 0, 2], [0, 1, 1, 0]])
    W = schubert_basis(FlagSpec(x, 1, 1), 3)
    assert W.dim() == 1
    p = plucker_primary(x)
    assert W.span_subspace().contains(list(p.coords))


def test_span_dimension_against_plane_enumeration():
    # subspaces of projective dim 2 in PG(5, 2) meeting a fixed plane x in
    # at least a line: the rank of all their Pluecker vectors equals the
    # counting formula
    x = Subspace.from_rows(GF2, 6, [[1, 0, 0, 0, 0, 0],
                                    [0, 1, 0, 0, 0, 0],
                                    [0, 0, 1, 0, 0, 0]])
    expected = span_dimension(2, 1, 2, 5)
    assert expected == comb(3, 2) * comb(3, 1) + comb(3, 3) * comb(3, 0) == 10
    rows = []
    for y in all_subspaces_rref(GF2, 6, 3):
        if y.intersect(x).pdim >= 1:
            rows.append(list(plucker_primary(y).coords))
    oracle_rank = rank(Matrix(GF2, rows, cols=20))
    assert oracle_rank == expected
    W = schubert_basis(FlagSpec(x, 1, 2), 5)
    assert W.dim() == expected
    # the enumerated Pluecker vectors span exactly W
    assert Subspace.from_rows(GF2, 20, rows) == W.span_subspace()


def test_dimension_formula_sweep():
    rng = random.Random(67)
    for n in range(2, 6):
        for k in range(1, min(3, n - 1) + 1):
            for dim_x in range(0, k + 1):
                for delta in range(0, dim_x + 1):
                    x = random_subspace(GF2, n + 1, dim_x + 1, rng)
                    W = schubert_basis(FlagSpec(x, delta, k), n)
                    assert W.dim() == span_dimension(dim_x, delta, k, n)


def test_bad_flags_rejected():
    x = Subspace.from_rows(GF2, 4, [[1, 0, 0, 0], [0, 1, 0, 0]])
    with pytest.raises(BadFlag):
        FlagSpec(x, 2, 1)  # delta > dim(x)
    with pytest.raises(BadFlag):
        FlagSpec(x, 0, 0)  # dim(x) > k
    with pytest.raises(BadFlag):
        FlagSpec(x, -1, 1)


# ---------------------------------------------------------------------
# equations
# ---------------------------------------------------------------------

def test_equations_for_prefix_subspace_are_coordinate_annihilations():
    # x spanned by e0: the equations are X_i = 0 for multi-indices not
    # touching e0, i.e. unit coefficient rows
    x = Subspace.from_rows(GF2, 4, [[1, 0, 0, 0]])
    E = schubert_equations(FlagSpec(x, 0, 1), 3)
    assert E.equations.data == [[0, 0, 0, 1, 0, 0],
                                [0, 0, 0, 0, 1, 0],
                                [0, 0, 0, 0, 0, 1]]


def test_equation_count_for_point_flag():
    x = Subspace.from_rows(GF2, 4, [[0, 1, 1, 1]])
    E = schubert_equations(FlagSpec(x, 0, 1), 3)
    assert E.equations.rows == 6 - 3


def test_equations_annihilate_span():
    rng = random.Random(71)
    for _ in range(10):
        n = rng.randrange(3, 6)
        k = rng.randrange(1, min(3, n - 1) + 1)
        dim_x = rng.randrange(0, k + 1)
        delta = rng.randrange(0, dim_x + 1)
        x = random_subspace(GF3, n + 1, dim_x + 1, rng)
        flag = FlagSpec(x, delta, k)
        W = schubert_basis(flag, n)
        E = schubert_equations(flag, n)
        product = E.equations.mul(W.span.transpose())
        assert all(v == 0 for row in product.data for v in row)
        assert W.dim() + E.equations.rows == W.ambient


def test_membership_iff_satisfies_equations():
    x = Subspace.from_rows(GF2, 4, [[1, 0, 0, 1]])
    flag = FlagSpec(x, 0, 1)
    W = schubert_basis(flag, 3).span_subspace()
    E = schubert_equations(flag, 3)
    for coords in itertools.product(range(2), repeat=6):
        if not any(coords):
            continue
        assert W.contains(list(coords)) == E.contains(coords)


# ---------------------------------------------------------------------
# implicitization round trips
# ---------------------------------------------------------------------

def test_implicitize_full_space():
    assert implicitize(Matrix.identity(GF2, 6)).rows == 0


def test_implicitize_matches_direct_equations():
    rng = random.Random(73)
    for _ in range(5):
        n = rng.randrange(3, 6)
        k = rng.randrange(1, min(3, n - 1) + 1)
        dim_x = rng.randrange(0, k + 1)
        delta = rng.randrange(0, dim_x + 1)
        x = random_subspace(GF2, n + 1, dim_x + 1, rng)
        flag = FlagSpec(x, delta, k)
        direct = schubert_equations(flag, n).equations
        derived = implicitize(schubert_basis(flag, n).span)
        assert rref(direct)[0].data[:direct.rows] == derived.data


def test_parametrize_implicitize_round_trip():
    rng = random.Random(79)
    S = Matrix(GF3, [[rng.randrange(3) for _ in range(8)] for _ in range(3)])
    eqs = implicitize(S)
    back = parametrize(eqs)
    assert Subspace.from_rows(GF3, 8, back.data) == Subspace.from_rows(GF3, 8, S.data)


def test_variety_derives_missing_side():
    x = Subspace.from_rows(GF2, 4, [[1, 1, 1, 0]])
    flag = FlagSpec(x, 0, 1)
    W = schubert_basis(flag, 3)
    E = schubert_equations(flag, 3)
    assert W.span_subspace() == LinearVariety(GF2, 4, 2, equations=E.equations).span_subspace()
    assert rref(W.equations)[0] == rref(E.equations)[0]


# ---------------------------------------------------------------------
# the membership characterization
# ---------------------------------------------------------------------

def membership_agrees(field, n, k, x, delta, candidates):
    W = schubert_basis(FlagSpec(x, delta, k), n).span_subspace()
    for y in candidates:
        inside = W.contains(list(plucker_primary(y).coords))
        meets = y.intersect(x).pdim >= delta
        assert inside == meets, (x.key(), y.key(), delta)


def test_membership_pg32_exhaustive():
    lines = all_subspaces_rref(GF2, 4, 2)
    points = all_subspaces_rref(GF2, 4, 1)
    assert len(lines) == 35 and len(points) == 15
    for x in points:
        membership_agrees(GF2, 3, 1, x, 0, lines)
    for x in lines:
        for delta in (0, 1):
            membership_agrees(GF2, 3, 1, x, delta, lines)


def test_membership_pg33_sampled():
    rng = random.Random(83)
    lines = all_subspaces_rref(GF3, 4, 2)
    assert len(lines) == 130
    sampled_y = rng.sample(lines, 30)
    for _ in range(6):
        x = random_subspace(GF3, 4, rng.randrange(1, 3), rng)
        for delta in range(0, x.pdim + 1):
            membership_agrees(GF3, 3, 1, x, delta, sampled_y)


def test_membership_pg52_sampled():
    rng = random.Random(89)
    for _ in range(25):
        dim_x = rng.randrange(1, 4)
        x = random_subspace(GF2, 6, dim_x, rng)
        ys = [random_subspace(GF2, 6, 3, rng) for _ in range(20)]
        for delta in range(0, x.pdim + 1):
            membership_agrees(GF2, 5, 2, x, delta, ys)


# ---------------------------------------------------------------------
# spans inside the Grassmannian (one intersection step short of a flag)
# ---------------------------------------------------------------------

def test_span_all_decomposable_when_delta_is_k_minus_1():
    # delta = dim(x) = k-1 in PG(2k+1, 2): every nonzero span element is
    # decomposable, so the whole linear variety sits inside the embedding
    cases = [(1, Subspace.from_rows(GF2, 4, [[1, 0, 1, 1]])),
             (2, Subspace.from_rows(GF2, 6, [[1, 0, 0, 1, 0, 1],
                                             [0, 1, 0, 0, 1, 1]]))]
    for k, x in cases:
        n = 2 * k + 1
        W = schubert_basis(FlagSpec(x, k - 1, k), n)
        span = W.span_subspace()
        assert span.pdim == k + 1
        count = 0
        for v in span.vectors():
            if not any(v):
                continue
            count += 1
            assert is_decomposable(GF2, n + 1, k + 1, list(v))
        assert count == 2 ** (k + 2) - 1
