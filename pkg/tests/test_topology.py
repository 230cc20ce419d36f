import numpy as np
import pytest

from ifnls import (standard_space, SampledSet, ToleranceConfig,
                   check_set_bounded, closure_membership, compactness_verdict,
                   finite_sample_subsequence_check, set_from_dict, set_to_dict,
                   bounded_witness, SchemaError)

SPACE2 = standard_space(2, "l2", 1.0)
SPACE1 = standard_space(1, "l1", 1.0)

UNIT_SQUARE = SampledSet(np.array([[0, 0], [1, 0], [0, 1], [1, 1]], float),
                         closed_flag=True, label="unit square corners")


def test_unit_square_bounded_with_reevaluable_witness():
    verdict = check_set_bounded(SPACE2, UNIT_SQUARE)
    assert verdict.passed
    w = verdict.witness
    for p in UNIT_SQUARE.points:
        mem, nonmem = SPACE2.evaluate(p, w["t"])
        assert mem > 1 - w["r"] and nonmem < w["r"]
    # the worked pair (t=13, r=0.1) is itself a valid witness:
    # 13/(13+sqrt(2)) ~ 0.902 > 0.9
    assert SPACE2.evaluate([1.0, 1.0], 13.0).membership == pytest.approx(
        13.0 / (13.0 + np.sqrt(2.0)))
    assert SPACE2.evaluate([1.0, 1.0], 13.0).membership > 0.9


def test_singleton_origin_bounded():
    zero = SampledSet(np.zeros((1, 2)), True, "origin")
    assert check_set_bounded(SPACE2, zero).passed


def test_line_sample_threshold_hand_value():
    # points on a segment of length 100: t=101 clears r=0.5 since
    # 101/(101+100) > 0.5
    pts = np.linspace(0.0, 100.0, 51)[:, None]
    line = SampledSet(pts, True, "segment")
    verdict = check_set_bounded(SPACE1, line)
    assert verdict.passed
    assert SPACE1.evaluate([100.0], 101.0).membership == pytest.approx(101 / 201)
    assert SPACE1.evaluate([100.0], 101.0).membership > 0.5


def test_no_witness_for_astronomic_sample():
    far = SampledSet(np.array([[10.0 ** j] for j in range(12)]), True, "far")
    verdict = check_set_bounded(SPACE1, far)
    assert verdict.failed
    assert "no witness" in verdict.witness["reason"]


def test_bounded_monotone_under_interior_points():
    verdict = check_set_bounded(SPACE2, UNIT_SQUARE)
    w = verdict.witness
    grown = SampledSet(np.vstack([UNIT_SQUARE.points, [[0.5, 0.5], [0.1, 0.9]]]),
                       True, "with interior points")
    again = check_set_bounded(SPACE2, grown)
    assert again.passed
    # the original witness still works for the grown sample
    mem, nonmem = SPACE2.evaluate([0.5, 0.5], w["t"])
    assert mem > 1 - w["r"] and nonmem < w["r"]


def test_closure_member_point():
    verdict = closure_membership(SPACE2, UNIT_SQUARE, [1.0, 0.0])
    assert verdict.passed
    assert verdict.witness["min_distance"] == 0.0


def test_closure_of_reciprocal_sample_contains_zero():
    sample = SampledSet(np.array([[1.0 / n] for n in range(1, 1001)]),
                        True, "reciprocals")
    cfg = ToleranceConfig(eps_limit=1e-2)
    verdict = closure_membership(SPACE1, sample, [0.0], cfg)
    assert verdict.passed
    assert verdict.witness["min_distance"] == pytest.approx(1e-3)


def test_closure_rejects_distant_point():
    sample = SampledSet(np.linspace(0, 1, 101)[:, None], True, "unit interval")
    verdict = closure_membership(SPACE1, sample, [5.0])
    assert verdict.failed
    assert verdict.witness["min_distance"] == pytest.approx(4.0)


def test_compactness_requires_declared_closed_and_bounded():
    assert compactness_verdict(SPACE2, UNIT_SQUARE).passed

    open_square = SampledSet(UNIT_SQUARE.points, closed_flag=False,
                             label="declared open")
    verdict = compactness_verdict(SPACE2, open_square)
    assert verdict.failed
    by_name = {d["condition"]: d["status"] for d in verdict.details}
    assert by_name["declared_closed"] == "fail"
    assert by_name["bounded"] == "pass"

    far = SampledSet(np.array([[10.0 ** j, 0.0] for j in range(12)]),
                     True, "far")
    verdict = compactness_verdict(SPACE2, far)
    assert verdict.failed
    by_name = {d["condition"]: d["status"] for d in verdict.details}
    assert by_name["bounded"] == "fail"


def test_pigeonhole_subsequence_is_exact_for_finite_samples():
    verdict = finite_sample_subsequence_check(SPACE2, UNIT_SQUARE, draws=200,
                                              seed=5)
    assert verdict.passed
    assert verdict.witness["occurrences"] >= 22  # tail window needs 11


def test_bounded_witness_helper_on_raw_points():
    w = bounded_witness(SPACE1, np.array([[1.0], [-1.0]]))
    assert w is not None
    assert SPACE1.evaluate([1.0], w["t"]).membership > 1 - w["r"]


def test_set_spec_roundtrip():
    spec = {"label": "unit square corners", "closed": True,
            "points": [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0]]}
    sampled = set_from_dict(spec)
    assert set_to_dict(sampled) == spec


def test_set_spec_schema_violations():
    good = {"label": "s", "closed": True, "points": [[0.0]]}
    with pytest.raises(SchemaError):
        set_from_dict({**good, "extra": 1})
    with pytest.raises(SchemaError):
        set_from_dict({"label": "s", "closed": True})
    with pytest.raises(SchemaError):
        set_from_dict({**good, "closed": "yes"})
    with pytest.raises(SchemaError):
        set_from_dict({**good, "points": []})
