import logging

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rdenergy.acceptance import random_block_spec, random_regular_block
from rdenergy.eigen import eig_sym, energy, inertia
from rdenergy.errors import InvalidBlockSpec
from rdenergy.graphs import apsp, complete_multipartite
from rdenergy.matrices import reciprocal_distance, seidel
from rdenergy.quotient import (CaseLabel, assemble_dense, assemble_spectrum, block_spectra,
                               build_quotient, case_iii_predicates, classify_case,
                               congruent_form, energy_via_cases, uniform_block_spec,
                               validate_blocks)


def jmi(n):
    return np.ones((n, n)) - np.eye(n)


RD_K22 = uniform_block_spec((2, 2), 0.5, 1.0)
D_K22 = uniform_block_spec((2, 2), 2.0, 1.0)
D_K222 = uniform_block_spec((2, 2, 2), 2.0, 1.0)
A_K22 = uniform_block_spec((2, 2), 0.0, 1.0)
S_K222 = uniform_block_spec((2, 2, 2), 1.0, -1.0)


def test_validate_extracts_row_sums():
    bs = validate_blocks([0.5 * jmi(2), 0.5 * jmi(2)], 1)
    assert bs.row_sums == (0.5, 0.5)
    assert bs.sizes == (2, 2) and bs.n == 4 and bs.k == 2


@pytest.mark.parametrize("blocks, a, message", [
    ([np.eye(2), jmi(2)], 1, "trace"),
    ([jmi(2), jmi(2)], 0, "nonzero"),
    ([np.array([[0, 1, 0], [1, 0, 2], [0, 2, 0]]), jmi(2)], 1, "row sums"),
    ([-jmi(2), jmi(2)], 1, "negative"),
    ([jmi(2)], 1, "k >= 2"),
    ([np.array([[0, 1], [2, 0]]), jmi(2)], 1, "symmetric"),
])
def test_validate_rejects(blocks, a, message):
    with pytest.raises(InvalidBlockSpec, match=message):
        validate_blocks(blocks, a)


def test_build_quotient_examples():
    assert np.array_equal(build_quotient(RD_K22), [[0.5, 2], [2, 0.5]])
    assert np.array_equal(build_quotient(A_K22), [[0, 2], [2, 0]])
    assert np.array_equal(build_quotient(S_K222), [[1, -2, -2], [-2, 1, -2], [-2, -2, 1]])


@pytest.mark.parametrize("bs, expected", [
    (RD_K22, [2.5, -0.5, -0.5, -1.5]),
    (D_K22, [4, 0, -2, -2]),
    (S_K222, [3, 3, -1, -1, -1, -3]),
])
def test_assemble_spectrum_examples(bs, expected):
    got = assemble_spectrum(bs).eigenvalues
    assert np.allclose(got, expected, atol=1e-12)
    # independent route: LAPACK on the dense matrix
    assert np.allclose(np.sort(np.linalg.eigvalsh(assemble_dense(bs)))[::-1], expected, atol=1e-12)


def test_assemble_dense_examples():
    rd = reciprocal_distance(apsp(complete_multipartite((2, 2))))
    assert np.array_equal(assemble_dense(RD_K22), rd)
    assert np.array_equal(assemble_dense(uniform_block_spec((1, 1), 0.0, 1.0)), [[0, 1], [1, 0]])
    s = seidel(complete_multipartite((2, 1, 1)))
    assert np.array_equal(assemble_dense(uniform_block_spec((2, 1, 1), 1.0, -1.0)), s)


@pytest.mark.parametrize("parts", [(1, 1), (2, 2), (5, 3, 1), (4, 4, 4, 2, 1)])
def test_rd_is_case_ii(parts):
    assert classify_case(uniform_block_spec(parts, 0.5, 1.0)) is CaseLabel.CASE_II


@pytest.mark.parametrize("parts", [(2, 2), (3, 2, 2), (5, 4, 3, 2)])
def test_distance_is_case_i(parts):
    assert classify_case(uniform_block_spec(parts, 2.0, 1.0)) is CaseLabel.CASE_I


@pytest.mark.parametrize("parts", [(1, 1, 1), (2, 2, 2), (4, 2, 1), (3, 3, 2, 1)])
def test_seidel_is_case_iii(parts):
    assert classify_case(uniform_block_spec(parts, 1.0, -1.0)) is CaseLabel.CASE_III


@pytest.mark.parametrize("bs, expected", [(D_K222, 12.0), (RD_K22, 5.0), (S_K222, 12.0)])
def test_energy_via_cases_examples(bs, expected):
    rep = energy_via_cases(bs)
    assert rep.method.value == "quotient"
    assert rep.energy == pytest.approx(expected, abs=1e-12)
    assert energy(eig_sym(assemble_dense(bs))) == pytest.approx(expected, abs=1e-12)


def test_no_case_falls_back_to_dense():
    # Seidel of K_{2,1}: the max-ratio third hypothesis fails
    bs = uniform_block_spec((2, 1), 1.0, -1.0)
    assert classify_case(bs) is CaseLabel.NO_CASE
    rep = energy_via_cases(bs)
    assert rep.method.value == "dense"
    assert rep.energy == pytest.approx(4.0)


def test_case_iii_variant_disagreement_is_logged(caplog):
    bs = uniform_block_spec((2, 1), 1.0, -1.0)
    assert case_iii_predicates(bs) == (False, True)
    with caplog.at_level(logging.INFO, logger="rdenergy.quotient"):
        classify_case(bs)
    assert "differs by ratio choice" in caplog.text


def test_random_block_is_regular_and_traceless():
    rng = np.random.default_rng(0)
    for size in (1, 2, 7):
        r = 0.0 if size == 1 else 1.3
        b = random_regular_block(rng, size, r)
        assert np.allclose(b.sum(axis=1), r)
        assert abs(np.trace(b)) < 1e-12
        assert np.array_equal(b, b.T)


seeds = st.integers(0, 2**32 - 1)


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_spectrum_union_matches_dense(seed):
    bs = random_block_spec(np.random.default_rng(seed))
    assembled = assemble_spectrum(bs).eigenvalues
    dense = eig_sym(assemble_dense(bs)).eigenvalues
    assert assembled.size == bs.n
    assert np.max(np.abs(assembled - dense)) <= 1e-8


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_quotient_inertia_congruence(seed):
    bs = random_block_spec(np.random.default_rng(seed))
    assert inertia(eig_sym(build_quotient(bs))) == inertia(eig_sym(congruent_form(bs)))


def _structured_spec(rng):
    """Random spec biased toward the three hypotheses."""
    k = int(rng.integers(2, 6))
    sizes = [int(s) for s in rng.integers(1, 8, k)]
    kind = rng.integers(3)
    if kind == 0:   # ratios at least a
        a = float(rng.uniform(0.1, 1))
        blocks = [random_regular_block(rng, s, s * a * float(rng.uniform(1, 2))) if s > 1
                  else np.zeros((1, 1)) for s in sizes]
        if any(s == 1 for s in sizes):
            sizes = [max(s, 2) for s in sizes]
            blocks = [random_regular_block(rng, s, s * a * float(rng.uniform(1, 2))) for s in sizes]
    elif kind == 1:  # scaled J - I blocks with small ratio
        a = float(rng.uniform(0.5, 3))
        blocks = [float(rng.uniform(0, 1)) * jmi(s) for s in sizes]
    else:           # negative coupling
        a = -float(rng.uniform(0.5, 3))
        blocks = [float(rng.uniform(0, 1)) * jmi(s) for s in sizes]
    return validate_blocks(blocks, a)


@settings(max_examples=80, deadline=None)
@given(seeds)
def test_case_formula_agrees_with_dense(seed):
    bs = _structured_spec(np.random.default_rng(seed))
    case = classify_case(bs)
    dense = eig_sym(assemble_dense(bs))
    rep = energy_via_cases(bs)
    assert abs(rep.energy - energy(dense)) <= 1e-8
    if case is CaseLabel.CASE_II:
        assert inertia(dense)[0] == 1


def test_structured_specs_hit_every_case():
    rng = np.random.default_rng(7)
    seen = {classify_case(_structured_spec(rng)) for _ in range(200)}
    assert {CaseLabel.CASE_I, CaseLabel.CASE_II, CaseLabel.CASE_III} <= seen


def test_block_spectra_contain_row_sums():
    for s, r in zip(block_spectra(RD_K22), RD_K22.row_sums):
        assert s.multiplicity(r) >= 1
