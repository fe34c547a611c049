"""Grid layer: cell sets, the click map, kernels, solving, pattern I/O."""

import random

import pytest

from lightsout.gridmap import (
    CellSet,
    UnsolvableError,
    all_solutions,
    apply_clicks,
    format_pattern,
    format_pbm,
    is_solvable,
    kernel_basis,
    lex_key,
    min_clicks,
    neighborhood,
    parse_pattern,
    solve_particular,
)

import naive


def rand_cellset(rng, n):
    return CellSet(n, rng.getrandbits(n * n))


def span_bits(n):
    return {0} | {e.bits for e in kernel_basis(n).span_nonzero()}


# -- CellSet basics -----------------------------------------------------------

def test_cellset_constructors():
    assert CellSet.empty(3).bits == 0
    assert CellSet.full(3).bits == (1 << 9) - 1
    cs = CellSet.from_cells(3, [(0, 0), (2, 1)])
    assert cs.bits == 1 | (1 << 7)
    assert cs.cells() == [(0, 0), (2, 1)]


def test_cellset_rejects_out_of_range_bits():
    with pytest.raises(ValueError):
        CellSet(2, 1 << 4)
    with pytest.raises(ValueError):
        CellSet.from_cells(2, [(2, 0)])
    with pytest.raises(ValueError):
        CellSet(0)


def test_cellset_set_algebra():
    a = CellSet.from_cells(3, [(0, 0), (1, 1)])
    b = CellSet.from_cells(3, [(1, 1), (2, 2)])
    assert (a ^ b).cells() == [(0, 0), (2, 2)]
    assert (a & b).cells() == [(1, 1)]
    assert (a | b).cells() == [(0, 0), (1, 1), (2, 2)]
    assert len(a) == 2 and (1, 1) in a and (0, 2) not in a
    assert a != b and a == CellSet(3, a.bits)
    assert len({a, CellSet(3, a.bits)}) == 1


def test_cellset_grid_size_mismatch():
    with pytest.raises(ValueError):
        CellSet.empty(3) ^ CellSet.empty(4)


def test_cellset_bool_and_repr():
    assert not CellSet.empty(5)
    assert CellSet.full(1)
    assert "CellSet" in repr(CellSet.empty(2))


# -- neighborhoods and the click map -------------------------------------------

@pytest.mark.parametrize(
    "v, count", [(0, 3), (2, 4), (12, 5), (24, 3), (10, 4)]
)
def test_neighborhood_sizes_5x5(v, count):
    assert len(neighborhood(5, v)) == count


def test_neighborhood_matches_oracle():
    for n in (1, 2, 3, 4, 5):
        for v in range(n * n):
            assert neighborhood(n, v).bits == naive.neighborhood_naive(n, v // n, v % n)


def test_neighborhood_rejects_out_of_range():
    with pytest.raises(ValueError):
        neighborhood(3, 9)
    with pytest.raises(ValueError):
        neighborhood(3, -1)


def test_apply_clicks_matches_oracle():
    rng = random.Random(0x11)
    for n in (1, 2, 3, 4, 5, 6):
        for _ in range(40):
            clicks = rand_cellset(rng, n)
            assert apply_clicks(clicks).bits == naive.apply_clicks_naive(n, clicks.bits)


def test_apply_clicks_is_linear():
    rng = random.Random(0x22)
    for _ in range(300):
        a, b = rand_cellset(rng, 5), rand_cellset(rng, 5)
        assert apply_clicks(a ^ b) == apply_clicks(a) ^ apply_clicks(b)


def test_apply_clicks_involution_via_double_click():
    # clicking the same set twice cancels
    rng = random.Random(0x33)
    for _ in range(100):
        a = rand_cellset(rng, 4)
        assert apply_clicks(a ^ a) == CellSet.empty(4)


# -- kernel --------------------------------------------------------------------

def test_kernel_dimensions_small():
    assert [len(kernel_basis(n)) for n in range(1, 9)] == [0, 0, 0, 4, 2, 0, 0, 0]


def test_kernel_span_matches_oracle():
    for n in range(1, 7):
        assert span_bits(n) == naive.kernel_span_naive(n), n


def test_kernel_elements_are_invisible_to_the_click_map():
    for n in (4, 5, 9):
        for e in kernel_basis(n):
            assert apply_clicks(e) == CellSet.empty(n)
            assert len(e) > 0


def test_kernel_basis_is_reduced_and_sorted():
    for n in (4, 5, 9, 11):
        basis = list(kernel_basis(n))
        lows = [e.bits & -e.bits for e in basis]
        assert lows == sorted(lows)  # sorted by leading cell
        assert len(set(lows)) == len(lows)
        for e, low in zip(basis, lows):
            #  reduced: no other basis vector contains this pivot cell
            assert all(other.bits & low == 0 for other in basis if other is not e)


def test_kernel_basis_cached_identity():
    assert kernel_basis(17) is kernel_basis(17)


def test_span_nonzero_count():
    assert len(kernel_basis(5).span_nonzero()) == 3
    assert len(kernel_basis(4).span_nonzero()) == 15
    assert kernel_basis(3).span_nonzero() == []


# -- solvability and solving ----------------------------------------------------

def test_is_solvable_matches_oracle():
    rng = random.Random(0x44)
    for n in (3, 4, 5):
        for _ in range(60):
            config = rand_cellset(rng, n)
            assert is_solvable(config) == (naive.solve_naive(n, config.bits) is not None)


def test_single_light_solvability_on_5x5_tracks_kernel_support():
    # a lone light is solvable exactly when its cell avoids every kernel
    # element (orthogonality); on the 5x5 that leaves 5 solvable cells
    union = 0
    for e in kernel_basis(5).span_nonzero():
        union |= e.bits
    solvable_cells = [v for v in range(25) if is_solvable(CellSet(5, 1 << v))]
    assert solvable_cells == [v for v in range(25) if not (union >> v) & 1]
    assert len(solvable_cells) == 5
    assert not is_solvable(CellSet(5, 1))  # the corner in particular


def test_solve_particular_round_trip():
    rng = random.Random(0x55)
    for n in (1, 2, 3, 4, 5, 6, 7):
        for _ in range(30):
            config = apply_clicks(rand_cellset(rng, n))  # always solvable
            sol = solve_particular(config)
            assert apply_clicks(sol) == config


def test_solve_particular_raises_on_unsolvable():
    with pytest.raises(UnsolvableError):
        solve_particular(CellSet(5, 1))


def test_solve_particular_is_canonical():
    # the returned solution has no weight on the kernel's leading cells,
    # so it is the same member of the coset every time
    rng = random.Random(0x66)
    pivots = [e.bits & -e.bits for e in kernel_basis(5)]
    for _ in range(50):
        config = apply_clicks(rand_cellset(rng, 5))
        sol = solve_particular(config)
        assert all(sol.bits & p == 0 for p in pivots)


def test_all_solutions_structure():
    rng = random.Random(0x77)
    for n, expect in ((3, 1), (5, 4), (4, 16)):
        config = apply_clicks(rand_cellset(rng, n))
        sols = all_solutions(config)
        assert len(sols) == expect
        assert len(set(sols)) == expect
        assert all(apply_clicks(s) == config for s in sols)


def test_all_solutions_differ_by_kernel():
    config = apply_clicks(CellSet.from_cells(5, [(2, 2)]))
    sols = all_solutions(config)
    diffs = {(sols[0] ^ s).bits for s in sols}
    assert diffs == span_bits(5)


def test_all_solutions_unsolvable():
    with pytest.raises(UnsolvableError):
        all_solutions(CellSet(5, 1 << 3))


def test_nullity_cap_refuses_big_kernels():
    config = apply_clicks(CellSet.full(4))
    with pytest.raises(ValueError, match="nullity"):
        all_solutions(config, max_nullity=2)
    with pytest.raises(ValueError, match="nullity"):
        min_clicks(config, max_nullity=2)


def test_min_clicks_matches_exhaustive_oracle():
    rng = random.Random(0x88)
    for n in (2, 3):
        for _ in range(12):
            config = apply_clicks(rand_cellset(rng, n))
            count, witness = min_clicks(config)
            assert count == naive.brute_min_clicks(n, config.bits)
            assert apply_clicks(witness) == config
            assert len(witness) == count


def test_min_clicks_matches_exhaustive_oracle_4x4():
    rng = random.Random(0x99)
    for _ in range(8):
        config = apply_clicks(rand_cellset(rng, 4))
        count, witness = min_clicks(config)
        assert count == naive.brute_min_clicks(4, config.bits)
        assert apply_clicks(witness) == config


def test_min_clicks_is_minimum_of_all_solutions():
    rng = random.Random(0xAA)
    for _ in range(40):
        config = apply_clicks(rand_cellset(rng, 5))
        count, witness = min_clicks(config)
        sols = all_solutions(config)
        assert count == min(len(s) for s in sols)
        assert witness in sols


def test_min_clicks_tie_break_is_lexicographic():
    rng = random.Random(0xBB)
    for _ in range(40):
        config = apply_clicks(rand_cellset(rng, 4))
        count, witness = min_clicks(config)
        ties = [s for s in all_solutions(config) if len(s) == count]
        assert witness == min(ties, key=lex_key)


def test_lex_key_orders_by_reading_order():
    # at the first cell (reading order) where two sets differ, the set
    # NOT containing it sorts first: binary-string order with 0 < 1
    a = CellSet.from_cells(3, [(0, 0)])
    b = CellSet.from_cells(3, [(0, 1)])
    c = CellSet.from_cells(3, [(0, 1), (2, 2)])
    assert lex_key(b) < lex_key(a)
    assert lex_key(b) < lex_key(c) < lex_key(a)


def test_unsolvable_error_is_a_value_error():
    assert issubclass(UnsolvableError, ValueError)


# -- pattern text and PBM -------------------------------------------------------

def test_pattern_round_trip():
    rng = random.Random(0xCC)
    for n in (1, 2, 5, 9):
        for _ in range(20):
            cs = rand_cellset(rng, n)
            assert parse_pattern(format_pattern(cs)) == cs


def test_parse_pattern_golden():
    cs = parse_pattern("#..\n.#.\n..#\n")
    assert cs == CellSet.from_cells(3, [(0, 0), (1, 1), (2, 2)])


def test_parse_pattern_tolerates_missing_final_newline():
    assert parse_pattern("#.\n.#") == CellSet.from_cells(2, [(0, 0), (1, 1)])


@pytest.mark.parametrize(
    "text",
    [
        "",
        "\n",
        "##\n#\n",          # ragged
        "##\n##\n##\n",      # non-square
        "#x\n##\n",          # bad character
        "# #\n###\n###\n",   # spaces are not cells
    ],
)
def test_parse_pattern_rejects_malformed(text):
    with pytest.raises(ValueError):
        parse_pattern(text)


def test_format_pattern_golden():
    cs = CellSet.from_cells(2, [(0, 1), (1, 0)])
    assert format_pattern(cs) == ".#\n#.\n"


def test_format_pbm_golden():
    cs = CellSet.from_cells(2, [(0, 0), (1, 1)])
    assert format_pbm(cs) == "P1\n2 2\n1 0\n0 1\n"


def test_format_pbm_header_dimensions():
    out = format_pbm(CellSet.empty(7))
    lines = out.splitlines()
    assert lines[0] == "P1"
    assert lines[1] == "7 7"
    assert len(lines) == 2 + 7
