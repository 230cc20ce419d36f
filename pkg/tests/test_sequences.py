import numpy as np
import pytest

from ifnls import (standard_space, VectorSequence, ToleranceConfig,
                   check_convergence_to, check_cauchy, check_bounded,
                   verify_limit_uniqueness, verify_limit_arithmetic,
                   check_subsequence_inheritance, crisp_fuzzy_equivalence,
                   findim_limit_extraction, completeness_via_subsequence,
                   generate_corpus, known_limit, parse_sequence_csv,
                   write_sequence_csv, PreconditionFailed, TailNotSettled,
                   DegenerateBasis, SchemaError, CONVERGES, DIVERGES,
                   INCONCLUSIVE)

# Milder grid so unit tests certify on short prefixes; the defaults are
# exercised by the acceptance suite.
CFG = ToleranceConfig(t_grid=(0.1, 1.0, 10.0), r_levels=(0.5, 0.1),
                      eps_limit=1e-4)

SPACE1 = standard_space(1, "l1", 1.0)
SPACE2 = standard_space(2, "l1", 1.0)


def harmonic(length, dim=1):
    return generate_corpus("harmonic", length, dim)


def alternating(length, dim=1):
    return generate_corpus("alternating", length, dim)


# ---------------------------------------------------------------------------
# Convergence
# ---------------------------------------------------------------------------

def test_harmonic_converges_to_zero():
    verdict = check_convergence_to(SPACE1, harmonic(200), [0.0], CFG)
    assert verdict.status == CONVERGES
    assert verdict.limit == (0.0,)
    # every grid pair carries its first good index
    assert len(verdict.witnesses) == len(CFG.t_grid) * len(CFG.r_levels)
    assert all(rec["outcome"] == "satisfied" for rec in verdict.witnesses)


def test_alternating_diverges():
    # membership of the difference is 1/(1+1) = 0.5 at t=1 forever, never
    # above 1 - r for r < 1/2
    verdict = check_convergence_to(SPACE1, alternating(200), [0.0], CFG)
    assert verdict.status == DIVERGES
    assert SPACE1.evaluate([1.0], 1.0).membership == 0.5


def test_constant_sequence_converges_immediately():
    seq = VectorSequence(np.full((50, 1), 3.25))
    verdict = check_convergence_to(SPACE1, seq, [3.25], CFG)
    assert verdict.status == CONVERGES
    assert all(rec["n0"] == 1 for rec in verdict.witnesses)


def test_short_prefix_is_inconclusive_not_divergent():
    # a slowly improving tail must not be mistaken for divergence
    verdict = check_convergence_to(SPACE1, harmonic(40), [0.0], CFG)
    assert verdict.status == INCONCLUSIVE


def test_wrong_target_diverges():
    verdict = check_convergence_to(SPACE1, harmonic(200), [1.0], CFG)
    assert verdict.status == DIVERGES


def test_reported_degrees_sum_to_one_exactly():
    verdict = check_convergence_to(SPACE1, alternating(60), [0.0], CFG)
    seen = 0
    for rec in verdict.witnesses:
        if "witness" in rec:
            w = rec["witness"]
            assert w["membership"] + w["non_membership"] == 1.0
            seen += 1
    assert seen > 0


# ---------------------------------------------------------------------------
# Cauchy
# ---------------------------------------------------------------------------

def test_partial_sums_are_cauchy():
    seq = generate_corpus("partialsums", 400, 1)
    verdict = check_cauchy(SPACE1, seq, p_max=3, config=CFG)
    assert verdict.status == CONVERGES


def test_linear_growth_is_not_cauchy():
    # |x_{n+1} - x_n| = 1 forever: membership stuck at 1/2 for t = 1
    seq = VectorSequence(np.arange(1.0, 201.0)[:, None])
    verdict = check_cauchy(SPACE1, seq, p_max=2, config=CFG)
    assert verdict.status == DIVERGES


def test_constant_sequence_cauchy_with_exact_degrees():
    seq = VectorSequence(np.full((40, 1), -1.5))
    verdict = check_cauchy(SPACE1, seq, p_max=3, config=CFG)
    assert verdict.status == CONVERGES
    assert SPACE1.evaluate([0.0], 1.0) == (1.0, 0.0)


# ---------------------------------------------------------------------------
# Boundedness
# ---------------------------------------------------------------------------

def test_alternating_bounded_with_valid_witness():
    verdict = check_bounded(SPACE1, alternating(100), CFG)
    assert verdict.passed
    w = verdict.witness
    mem, nonmem = SPACE1.evaluate([1.0], w["t"])
    assert mem > 1 - w["r"] and nonmem < w["r"]
    # the witness pair named in the worked example is valid too
    assert SPACE1.evaluate([1.0], 9.0).membership == pytest.approx(0.9)


def test_zero_sequence_bounded():
    seq = VectorSequence(np.zeros((30, 1)))
    assert check_bounded(SPACE1, seq, CFG).passed


def test_growing_prefix_still_bounded_with_note():
    seq = VectorSequence(np.arange(1.0, 101.0)[:, None])
    verdict = check_bounded(SPACE1, seq, CFG)
    assert verdict.passed
    # N(x_L, t0) = t0/(t0 + L) must clear 1 - r at the witness
    w = verdict.witness
    assert w["t"] / (w["t"] + 100.0) > 1 - w["r"]
    assert any("prefix" in note for note in verdict.notes)


# ---------------------------------------------------------------------------
# Limit uniqueness and arithmetic
# ---------------------------------------------------------------------------

def test_uniqueness_same_target_consistent():
    verdict = verify_limit_uniqueness(SPACE1, harmonic(200), [0.0], [0.0], CFG)
    assert verdict.passed


def test_uniqueness_not_challenged_when_one_target_rejected():
    verdict = verify_limit_uniqueness(SPACE1, harmonic(200), [0.0], [1.0], CFG)
    assert verdict.passed
    statuses = {d["status"] for d in verdict.details}
    assert DIVERGES in statuses


def test_uniqueness_nearby_targets_inconclusive():
    # two targets closer than the grid can resolve, both certified
    verdict = verify_limit_uniqueness(SPACE1, harmonic(200), [0.0], [1e-9], CFG)
    assert verdict.status == INCONCLUSIVE


def test_limit_arithmetic_sum_and_scale():
    n = np.arange(1.0, 201.0)
    seq_a = VectorSequence((1.0 / n)[:, None], label="1/n")
    seq_b = VectorSequence((1.0 - 1.0 / n)[:, None], label="1-1/n")
    verdict = verify_limit_arithmetic(SPACE1, seq_a, [0.0], seq_b, [1.0],
                                      c=-2.0, config=CFG)
    assert verdict.passed


def test_limit_arithmetic_rejects_divergent_input():
    with pytest.raises(PreconditionFailed):
        verify_limit_arithmetic(SPACE1, harmonic(200), [0.0],
                                alternating(200), [0.0], c=1.0, config=CFG)


def test_limit_arithmetic_rejects_zero_scalar():
    with pytest.raises(ValueError):
        verify_limit_arithmetic(SPACE1, harmonic(200), [0.0],
                                harmonic(200), [0.0], c=0.0, config=CFG)


# ---------------------------------------------------------------------------
# Subsequences
# ---------------------------------------------------------------------------

def test_even_subsequence_inherits_limit():
    seq = harmonic(200)
    verdict = check_subsequence_inheritance(
        SPACE1, seq, list(range(2, 201, 2)), [0.0], CFG)
    assert verdict.passed


def test_identity_indices_inherit():
    seq = harmonic(200)
    verdict = check_subsequence_inheritance(
        SPACE1, seq, list(range(1, 201)), [0.0], CFG)
    assert verdict.passed


def test_convergent_subsequence_of_divergent_sequence_is_not_contradiction():
    # even terms of (-1)^n are constant 1; the full prefix diverges, so
    # nothing is asserted and the converse direction is explicitly not implied
    seq = alternating(200)
    verdict = check_subsequence_inheritance(
        SPACE1, seq, list(range(2, 201, 2)), [1.0], CFG)
    assert verdict.passed
    assert any("converse" in note for note in verdict.notes)


def test_subsequence_indices_validated():
    seq = harmonic(50)
    with pytest.raises(ValueError):
        check_subsequence_inheritance(SPACE1, seq, [3, 2, 1], [0.0], CFG)
    with pytest.raises(ValueError):
        check_subsequence_inheritance(SPACE1, seq, [0, 1], [0.0], CFG)


# ---------------------------------------------------------------------------
# Crisp/fuzzy agreement
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("kind,target", [("harmonic", 0.0),
                                         ("alternating", 0.0),
                                         ("constant", None)])
def test_crisp_fuzzy_agreement(kind, target):
    seq = generate_corpus(kind, 200, 1, seed=3)
    x = [target] if target is not None else known_limit(kind, 1, seed=3)
    verdict = crisp_fuzzy_equivalence(SPACE1, seq, x, config=CFG)
    assert verdict.passed
    assert all(d["agree"] for d in verdict.details)


def test_crisp_fuzzy_requires_standard_space():
    from ifnls import custom_space
    space = custom_space(1, lambda x, t: (t / (t + abs(float(x[0]))), 0.0))
    with pytest.raises(PreconditionFailed):
        crisp_fuzzy_equivalence(space, harmonic(60), [0.0], config=CFG)


# ---------------------------------------------------------------------------
# Finite-dimensional limit extraction
# ---------------------------------------------------------------------------

def test_extraction_standard_basis():
    n = np.arange(1.0, 601.0)
    seq = VectorSequence(np.column_stack([1.0 / n, 1.0 - 1.0 / n]))
    limit, verdict = findim_limit_extraction(SPACE2, seq, [[1, 0], [0, 1]], CFG)
    assert verdict.passed
    assert limit == pytest.approx([0.0, 1.0], abs=3e-3)


def test_extraction_constant_sequence():
    seq = VectorSequence(np.tile([2.0, -1.0], (40, 1)))
    limit, verdict = findim_limit_extraction(SPACE2, seq, [[1, 0], [0, 1]], CFG)
    assert verdict.passed
    assert limit == pytest.approx([2.0, -1.0], abs=1e-12)


def test_extraction_rotated_basis():
    # terms (1/n, 1/n) expand as beta = (1/n, 0) in {(1,1), (1,-1)}
    n = np.arange(1.0, 601.0)
    seq = VectorSequence(np.column_stack([1.0 / n, 1.0 / n]))
    basis = [[1.0, 1.0], [1.0, -1.0]]
    B = np.column_stack(basis)
    assert np.allclose(np.linalg.solve(B, [1.0, 1.0]), [1.0, 0.0])
    assert np.allclose(np.linalg.solve(B, [0.5, 0.5]), [0.5, 0.0])
    limit, verdict = findim_limit_extraction(SPACE2, seq, basis, CFG)
    assert verdict.passed
    assert limit == pytest.approx([0.0, 0.0], abs=3e-3)


def test_extraction_requires_cauchy():
    with pytest.raises(PreconditionFailed):
        findim_limit_extraction(SPACE2, alternating(100, dim=2),
                                [[1, 0], [0, 1]], CFG)


def test_extraction_detects_unsettled_tail():
    strict = ToleranceConfig(t_grid=CFG.t_grid, r_levels=CFG.r_levels,
                             eps_limit=1e-12)
    n = np.arange(1.0, 601.0)
    seq = VectorSequence(np.column_stack([1.0 / n, 1.0 / n]))
    with pytest.raises(TailNotSettled):
        findim_limit_extraction(SPACE2, seq, [[1, 0], [0, 1]], strict)


def test_extraction_rejects_degenerate_basis():
    n = np.arange(1.0, 601.0)
    seq = VectorSequence(np.column_stack([1.0 / n, 1.0 / n]))
    with pytest.raises(DegenerateBasis):
        findim_limit_extraction(SPACE2, seq, [[1, 1], [2, 2]], CFG)


# ---------------------------------------------------------------------------
# Completeness via a convergent subsequence
# ---------------------------------------------------------------------------

def test_cauchy_with_convergent_subsequence_converges():
    seq = harmonic(200)
    verdict = completeness_via_subsequence(
        SPACE1, seq, list(range(2, 201, 2)), [0.0], CFG)
    assert verdict.passed


def test_constant_sequence_any_subsequence():
    seq = VectorSequence(np.full((60, 1), 7.0))
    verdict = completeness_via_subsequence(
        SPACE1, seq, list(range(1, 61, 3)), [7.0], CFG)
    assert verdict.passed


def test_non_cauchy_input_rejected():
    with pytest.raises(PreconditionFailed):
        completeness_via_subsequence(SPACE1, alternating(200),
                                     list(range(2, 201, 2)), [1.0], CFG)


# ---------------------------------------------------------------------------
# Theorem-level properties over the corpus
# ---------------------------------------------------------------------------

CORPUS = [(kind, d) for kind in ("harmonic", "geometric", "alternating",
                                 "constant", "partialsums") for d in (1, 2)]


@pytest.mark.parametrize("kind,d", CORPUS)
def test_convergent_implies_cauchy(kind, d):
    seq = generate_corpus(kind, 400, d, seed=1)
    limit = known_limit(kind, d, seed=1)
    target = limit if limit is not None else np.zeros(d)
    space = standard_space(d, "l1", 1.0)
    conv = check_convergence_to(space, seq, target, CFG)
    if conv.status == CONVERGES:
        assert check_cauchy(space, seq, 3, CFG).status == CONVERGES


@pytest.mark.parametrize("kind,d", CORPUS)
def test_cauchy_implies_bounded(kind, d):
    seq = generate_corpus(kind, 400, d, seed=1)
    space = standard_space(d, "l1", 1.0)
    if check_cauchy(space, seq, 3, CFG).status == CONVERGES:
        assert check_bounded(space, seq, CFG).passed


def test_property_suite_is_not_vacuous():
    hits = 0
    for kind, d in CORPUS:
        seq = generate_corpus(kind, 400, d, seed=1)
        limit = known_limit(kind, d, seed=1)
        if limit is None:
            continue
        space = standard_space(d, "l1", 1.0)
        if check_convergence_to(space, seq, limit, CFG).status == CONVERGES:
            hits += 1
    assert hits >= 6


# ---------------------------------------------------------------------------
# Sequence CSV
# ---------------------------------------------------------------------------

def test_csv_roundtrip_with_label():
    seq = generate_corpus("geometric", 20, 2, seed=0)
    text = write_sequence_csv(seq)
    back = parse_sequence_csv(text)
    assert back.label == seq.label
    assert np.array_equal(back.terms, seq.terms)


def test_csv_rejects_bad_header():
    with pytest.raises(SchemaError):
        parse_sequence_csv("a,b\n1,2\n3,4\n")


def test_csv_rejects_ragged_rows():
    with pytest.raises(SchemaError):
        parse_sequence_csv("x1,x2\n1,2\n3\n")


def test_csv_rejects_non_numeric():
    with pytest.raises(SchemaError):
        parse_sequence_csv("x1\n1\nfoo\n")


def test_csv_rejects_single_row():
    with pytest.raises(SchemaError):
        parse_sequence_csv("x1\n1\n")
