import itertools
import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from oracles import poly_mulmod, poly_pow, rank_by_minors, subfield_span_rank
from sumrank.finite_field import Basis, conjugacy_representatives, make_field, truncated_norm
from sumrank.linalg import MatrixF, rank, row_basis
from sumrank.msrd import (MsrdParams, SumRankVector, build_msrd_code, check_msrd_conditions, dual_code,
                          extend_scalars, extended_moore_matrix, is_msrd_matrix_bruteforce,
                          min_sum_rank_distance_exhaustive, puncture, shorten, sum_rank_weight,
                          sum_rank_weight_fast, tensor_beta)
from sumrank.seeds import hamming_seed, mds_seed, trivial_seed


@pytest.fixture(scope="module")
def hamming_code():
    return build_msrd_code(hamming_seed(2, 2, 2), 1, 2)


def _same_row_space(A: MatrixF, B: MatrixF) -> bool:
    stacked = MatrixF(A.ctx, np.vstack([A.data, B.data]))
    return rank(A) == rank(B) == rank(stacked)


# --- tensor products and Moore matrices -----------------------------------

def test_tensor_beta_degenerate_cases():
    ctx = make_field(2, 4)
    alpha = Basis.power(ctx, 2, 1)
    assert tensor_beta(alpha, [1]) == list(alpha.vec)
    unit = Basis(ctx, 1, 1, (1,))
    gamma = [3, 7, 11]
    assert tensor_beta(unit, gamma) == gamma


def test_tensor_beta_block_layout():
    ctx = make_field(2, 4)
    alpha = Basis.power(ctx, 2, 1)
    gamma = [5, 9]
    beta = tensor_beta(alpha, gamma)
    assert beta == [ctx.mul(alpha.vec[0], 5), ctx.mul(alpha.vec[1], 5),
                    ctx.mul(alpha.vec[0], 9), ctx.mul(alpha.vec[1], 9)]


def test_hamming_gamma_passes_conditions(hamming_code):
    code = hamming_code
    assert len(code.beta) == 10
    assert check_msrd_conditions(code.ctx, code.beta, 2, 5, 2, 2)
    assert is_msrd_matrix_bruteforce(code.parity_check, 5, 2, 2)


def test_moore_single_row_is_beta():
    ctx = make_field(2, 4)
    beta = [1, 2, 4, 8, 3]
    H = extended_moore_matrix(ctx, [1], [beta], 1, 2)
    assert H.tolist() == [beta]


def test_moore_over_gf4():
    ctx = make_field(2, 2)
    w = ctx.primitive
    H = extended_moore_matrix(ctx, [1], [[1, w]], 2, 2)
    assert H.tolist() == [[1, w], [1, ctx.mul(w, w)]]


@pytest.mark.parametrize("p,L,q", [(2, 4, 2), (2, 4, 4), (3, 2, 3), (2, 3, 2)])
def test_classical_moore_has_full_rank(p, L, q):
    ctx = make_field(p, L)
    degree = ctx.subfield_degree(q)
    basis = Basis.power(ctx, L, degree)
    for h in range(1, len(basis) + 1):
        assert rank(extended_moore_matrix(ctx, [1], [basis.vec], h, q)) == h


def _naive_entry(ctx, beta, a, q, k):
    frob = poly_pow(beta, q**k, ctx.modulus, ctx.p)
    norm = 1
    for u in range(k):
        norm = poly_mulmod(norm, poly_pow(a, q**u, ctx.modulus, ctx.p), ctx.modulus, ctx.p)
    return poly_mulmod(frob, norm, ctx.modulus, ctx.p)


@given(st.sampled_from([(2, 4, 2, 1), (3, 2, 3, 2), (2, 4, 4, 3), (5, 2, 5, 4)]), st.data())
def test_moore_entries_match_naive_evaluation(field, data):
    p, L, q, ell = field
    ctx = make_field(p, L)
    a = conjugacy_representatives(ctx, q, count=ell)
    sizes = data.draw(st.lists(st.integers(1, 2), min_size=ell, max_size=ell))
    blocks = [data.draw(st.lists(st.integers(0, ctx.order - 1), min_size=s, max_size=s)) for s in sizes]
    h = data.draw(st.integers(1, sum(sizes)))
    H = extended_moore_matrix(ctx, a, blocks, h, q)
    col = 0
    for ai, block in zip(a, blocks):
        for b in block:
            for k in range(h):
                assert H.data[k, col] == _naive_entry(ctx, b, ai, q, k)
            col += 1


@given(st.sampled_from([(2, 4, 2, 1), (3, 2, 3, 2), (2, 4, 4, 3), (5, 2, 5, 4)]), st.data())
def test_column_scaling_identity(field, data):
    p, L, q, ell = field
    ctx = make_field(p, L)
    a = conjugacy_representatives(ctx, q, count=ell)
    blocks = [data.draw(st.lists(st.integers(1, ctx.order - 1), min_size=1, max_size=3)) for _ in a]
    h = data.draw(st.integers(1, sum(len(b) for b in blocks)))
    H = extended_moore_matrix(ctx, a, blocks, h, q)
    col = 0
    for ai, block in zip(a, blocks):
        for b in block:
            scaled = ctx.vmul(H.data[:, col], ctx.inv(b))
            base = ctx.mul(ctx.pow(b, q - 1), ai)
            assert scaled.tolist() == [truncated_norm(ctx, base, q, k) for k in range(h)]
            col += 1


def test_moore_rejects_conjugate_representatives_and_bad_h():
    ctx = make_field(3, 2)
    # 1 and c^(q-1) are conjugate for any nonzero c
    c = ctx.primitive
    with pytest.raises(ValueError):
        extended_moore_matrix(ctx, [1, ctx.pow(c, 2)], [[1], [1]], 1, 3)
    with pytest.raises(ValueError):
        extended_moore_matrix(ctx, [1], [[1, c]], 3, 3)
    with pytest.raises(ValueError):
        extended_moore_matrix(ctx, [1, c], [[1]], 1, 3)


# --- MSRD conditions and the brute-force oracle --------------------------

def test_conditions_reject_zero_and_accept_single_block():
    ctx = make_field(2, 4)
    alpha = Basis.power(ctx, 2, 1)
    assert not check_msrd_conditions(ctx, [0, 1, 2, 4], 2, 2, 2, 2)
    assert not check_msrd_conditions(ctx, [1, 1], 2, 1, 1, 2)
    for h in (1, 2, 5):
        assert check_msrd_conditions(ctx, alpha.vec, 2, 1, h, 2)
    with pytest.raises(ValueError):
        check_msrd_conditions(ctx, [1, 2, 3], 2, 2, 2, 2)


def test_conditions_agree_with_bruteforce_on_random_beta():
    ctx = make_field(2, 4)
    rng = random.Random(11)
    agreements, positives = 0, 0
    for _ in range(100):
        beta = [rng.randrange(ctx.order) for _ in range(6)]
        theorem = check_msrd_conditions(ctx, beta, 2, 3, 2, 2)
        H = extended_moore_matrix(ctx, [1], [beta], 2, 2)
        assert theorem == is_msrd_matrix_bruteforce(H, 3, 2, 2)
        agreements += 1
        positives += theorem
    assert agreements == 100 and 0 < positives < 100


def test_bruteforce_small_cases():
    ctx = make_field(2, 4)
    # g = r = 1 is plain MDS-ness up to scaling
    M = MatrixF.from_rows(ctx, [[1], [0]])
    assert not is_msrd_matrix_bruteforce(MatrixF.from_rows(ctx, [[0]]), 1, 1, 2)
    assert is_msrd_matrix_bruteforce(MatrixF.from_rows(ctx, [[5]]), 1, 1, 2)
    with pytest.raises(ValueError):
        is_msrd_matrix_bruteforce(M, 1, 1, 2)
    repeated = extended_moore_matrix(ctx, [1], [[1, 2, 1, 4]], 2, 2)
    assert not is_msrd_matrix_bruteforce(repeated, 2, 2, 2)
    with pytest.raises(ValueError):
        is_msrd_matrix_bruteforce(repeated, 3, 2, 2)


def test_hamming_parity_check_is_msrd_by_enumeration(hamming_code):
    # 6^5 = 7776 tuples of invertible 2x2 binary matrices
    assert is_msrd_matrix_bruteforce(hamming_code.parity_check, 5, 2, 2)


# --- building codes --------------------------------------------------------

def test_build_trivial_seed_two_classes():
    code = build_msrd_code(trivial_seed(3, 2), 2, 1)
    p = code.params
    assert (p.m, p.N, p.g, p.k) == (2, 4, 2, 3)
    assert code.ctx.order == 9
    assert is_msrd_matrix_bruteforce(code.parity_check, 2, 2, 3)


def test_build_hamming_field_size(hamming_code):
    p = hamming_code.params
    assert (p.N, p.g, p.m, p.k) == (10, 5, 4, 8)
    assert p.field_size == 16 == (2**2 - 1) // (2 - 1) * p.g + 1


def test_build_mds_seed_field_size():
    code = build_msrd_code(mds_seed(2, 2, 5, 3), 1, 3)
    assert code.params.m == 2 * min(3, 5) == 6


def test_build_invariants(hamming_code):
    code = hamming_code
    H = code.parity_check
    assert H.shape == (code.params.h, code.params.N)
    assert H.tolist()[0] == list(code.beta) * code.params.ell
    G = code.generator
    assert G.rows == code.params.k
    assert not (G @ H.T).data.any()


def test_build_with_bruteforce_flag():
    code = build_msrd_code(hamming_seed(2, 2, 2), 1, 2, verify_bruteforce=True)
    assert code.params.N == 10


def test_build_errors():
    with pytest.raises(ValueError):
        build_msrd_code(hamming_seed(2, 2, 2), 1, 3)  # seed distance 3 < min(h, mu) + 1
    with pytest.raises(ValueError):
        build_msrd_code(trivial_seed(2, 2), 2, 1)  # two classes need q >= 3
    with pytest.raises(ValueError):
        build_msrd_code(hamming_seed(2, 2, 2), 1, 2, ctx=make_field(2, 6))


def test_params_validation():
    MsrdParams(3, 2, 2, 2, 1, 1)
    for args in [(3, 2, 2, 0, 1, 1), (3, 2, 2, 3, 1, 1), (2, 3, 2, 1, 1, 1), (2, 2, 4, 1, 5, 0),
                 (2, 2, 4, 1, 5, 10)]:
        with pytest.raises(ValueError):
            MsrdParams(*args)
    p = MsrdParams(2, 2, 4, 1, 5, 2)
    assert (p.g, p.N, p.k, p.t, p.field_size) == (5, 10, 8, 2, 16)


# --- weights and distances ------------------------------------------------

def test_zero_vector_has_weight_zero():
    ctx = make_field(2, 4)
    assert sum_rank_weight(SumRankVector(ctx, (0,) * 6, 3, 2, 2)) == 0


@given(st.lists(st.integers(0, 15), min_size=1, max_size=8))
def test_r_one_is_hamming_weight(entries):
    ctx = make_field(2, 4)
    v = SumRankVector(ctx, entries, len(entries), 1, 2)
    assert sum_rank_weight(v) == sum(1 for x in entries if x)


def test_g_one_is_rank_weight():
    rng = random.Random(3)
    for (p, L, q) in [(2, 4, 2), (2, 4, 4), (3, 2, 3), (2, 6, 4)]:
        ctx = make_field(p, L)
        for _ in range(50):
            r = rng.randint(1, 4)
            entries = [rng.randrange(ctx.order) for _ in range(r)]
            v = SumRankVector(ctx, entries, 1, r, q)
            assert sum_rank_weight(v) == subfield_span_rank(ctx, entries, q)


@given(st.sampled_from([(2, 4, 2), (2, 4, 4), (3, 2, 3)]), st.data())
def test_fast_weight_matches_matrix_weight(field, data):
    p, L, q = field
    ctx = make_field(p, L)
    g, r = data.draw(st.integers(1, 3)), data.draw(st.integers(1, 3))
    entries = data.draw(st.lists(st.integers(0, ctx.order - 1), min_size=g * r, max_size=g * r))
    v = SumRankVector(ctx, entries, g, r, q)
    w = sum_rank_weight(v)
    assert w == sum_rank_weight_fast(ctx, entries, [r] * g, q)
    assert 0 <= w <= g * r


def test_vector_length_checked():
    with pytest.raises(ValueError):
        SumRankVector(make_field(2, 2), (1, 2, 3), 2, 2, 2)


def test_distance_of_trivial_codes():
    ctx = make_field(2, 4)
    ones = MatrixF.from_rows(ctx, [[1] * 5])
    assert min_sum_rank_distance_exhaustive(ones, 5, 1, 2) == 5
    weight_one = MatrixF.from_rows(ctx, [[1, 0, 0, 0], [0, 1, 1, 0]])
    assert min_sum_rank_distance_exhaustive(weight_one, 2, 2, 2) == 1
    with pytest.raises(ValueError):
        min_sum_rank_distance_exhaustive(ones, 2, 2, 2)


def test_hamming_dual_distance(hamming_code):
    dual = dual_code(hamming_code)
    assert dual.dimension == 2
    assert min_sum_rank_distance_exhaustive(dual.generator, 5, 2, 2) == 9
    # the projective shortcut only drops scalar multiples
    assert min_sum_rank_distance_exhaustive(dual.generator, 5, 2, 2, projective=False) == 9


SINGLETON_CASES = {
    "trivial-q2": (lambda: trivial_seed(2, 2), 1, 1),
    "trivial-q3-l2-h1": (lambda: trivial_seed(3, 2), 2, 1),
    "trivial-q3-l2-h2": (lambda: trivial_seed(3, 2), 2, 2),
    "mds-r1": (lambda: mds_seed(2, 1, 3, 2), 1, 2),
    "hamming-r1": (lambda: hamming_seed(2, 1, 3), 1, 2),
}


@pytest.mark.parametrize("make,ell,h", SINGLETON_CASES.values(), ids=SINGLETON_CASES.keys())
def test_singleton_equality(make, ell, h):
    code = build_msrd_code(make(), ell, h)
    p = code.params
    d = min_sum_rank_distance_exhaustive(code.generator, p.g, p.r, p.q)
    assert d == h + 1
    # |C| = q^(m(N - d + 1)) means k = N - d + 1
    assert code.generator.rows == p.N - d + 1


@pytest.mark.parametrize("make,ell,h", SINGLETON_CASES.values(), ids=SINGLETON_CASES.keys())
def test_dual_distance(make, ell, h):
    code = build_msrd_code(make(), ell, h)
    p = code.params
    dual = dual_code(code)
    assert min_sum_rank_distance_exhaustive(dual.generator, p.g, p.r, p.q) == p.N - h + 1


# --- derived codes ---------------------------------------------------------

def test_dual_relations(hamming_code):
    dual = dual_code(hamming_code)
    assert dual.dimension + hamming_code.generator.rows == 10
    assert not (dual.generator @ dual.parity_check.T).data.any()
    back = dual_code(dual)
    assert _same_row_space(back.generator, hamming_code.generator)


def test_puncture_nothing(hamming_code):
    code = puncture(hamming_code, [])
    assert code.block_sizes == hamming_code.block_sizes
    assert _same_row_space(code.generator, hamming_code.generator)
    assert _same_row_space(code.parity_check, hamming_code.parity_check)


def test_puncture_full_block_stays_msrd(hamming_code):
    # deleting a block from the dual keeps a 2 x 8 matrix; shortening the code gives the same one
    dual = puncture(dual_code(hamming_code), [8, 9])
    assert dual.block_sizes == (2, 2, 2, 2)
    assert dual.generator.shape == (2, 8)
    assert is_msrd_matrix_bruteforce(dual.generator, 4, 2, 2)
    short = shorten(hamming_code, [8, 9])
    assert _same_row_space(short.parity_check, dual.generator)
    assert min_sum_rank_distance_exhaustive(dual.generator, 4, 2, 2) == 7


def test_puncture_within_block(hamming_code):
    dual = puncture(dual_code(hamming_code), [0])
    assert dual.block_sizes == (1, 2, 2, 2, 2)
    assert is_msrd_matrix_bruteforce(dual.generator, 5, 2, 2, block_sizes=dual.block_sizes)
    assert puncture(hamming_code, [0]).dimension == 8


def test_shorten_drops_one_dimension(hamming_code):
    G = hamming_code.generator
    for j in range(10):
        assert G.data[:, j].any()
        assert shorten(hamming_code, [j]).dimension == G.rows - 1


def test_derived_code_errors(hamming_code):
    with pytest.raises(ValueError):
        puncture(hamming_code, range(10))
    with pytest.raises(ValueError):
        shorten(hamming_code, [10])


def test_extend_scalars_identity(hamming_code):
    assert extend_scalars(hamming_code, 1) is hamming_code
    with pytest.raises(ValueError):
        extend_scalars(hamming_code, 0)


def test_extend_scalars_keeps_conditions(hamming_code):
    big = extend_scalars(hamming_code, 2)
    assert big.ctx.order == 256 and big.params.m == 8
    assert big.parity_check.shape == hamming_code.parity_check.shape
    assert rank(big.parity_check) == rank(hamming_code.parity_check)
    assert big.generator.rows == hamming_code.generator.rows
    assert check_msrd_conditions(big.ctx, big.beta, 2, 5, 2, 2)


@pytest.mark.parametrize("make,ell,h", [(lambda: trivial_seed(2, 2), 1, 1), (lambda: mds_seed(2, 1, 3, 2), 1, 2)],
                         ids=["trivial-g1", "mds-r1"])
def test_extend_scalars_keeps_distance(make, ell, h):
    code = build_msrd_code(make(), ell, h)
    p = code.params
    before = min_sum_rank_distance_exhaustive(code.generator, p.g, p.r, p.q)
    big = extend_scalars(code, 2)
    after = min_sum_rank_distance_exhaustive(big.generator, p.g, p.r, p.q)
    assert before == after == h + 1
    assert rank_by_minors(big.ctx, big.parity_check.tolist()) == h
    assert _same_row_space(row_basis(big.parity_check), big.parity_check)


def test_representatives_pairwise_non_conjugate():
    ctx = make_field(5, 2)
    reps = conjugacy_representatives(ctx, 5, count=4)
    for x, y in itertools.combinations(reps, 2):
        assert all(ctx.mul(ctx.pow(c, 4), x) != y for c in range(1, ctx.order))
