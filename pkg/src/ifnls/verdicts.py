"""Verdict containers returned by every check.

A verdict never hides a failure inside an exception: failed checks are
data, and each one carries a witness (point, threshold, degrees) that can
be re-evaluated to reproduce the violation.  Statuses are three-valued;
"inconclusive" is first-class because finite prefixes and finite grids
cannot certify asymptotics.
"""

from dataclasses import dataclass

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"

CONVERGES = "converges"
DIVERGES = "diverges"

# Fixed wording for the documented readings this artifact applies where the
# source conditions are unusable as printed.  Reports append whichever of
# these a run actually triggered.
NOTE_NONMEMBERSHIP_INF = (
    "nonmembership level norm computed as the least t with M(x,t) <= alpha; "
    "the greatest-t reading is unbounded for x != 0"
)
NOTE_NONMEMBERSHIP_DIRECTION = (
    "the nonmembership family is reported with its observed direction in "
    "alpha (descending for the standard construction)"
)
NOTE_M_BELOW_ONE = (
    "positivity of the nonmembership degree is checked as M(x,t) < 1; "
    "M = 0 at the origin is required by the definiteness condition"
)
NOTE_M_MONOTONE = (
    "the monotone-decay condition is checked on the nonmembership degree: "
    "non-increasing in t with limit 0"
)
NOTE_VANISHING_SAMPLED = (
    "vanishing conditions checked in sampled contrapositive form: every "
    "sampled x != 0 must admit a grid t with small membership (resp. large "
    "nonmembership); an exhausted grid reports inconclusive, not failure"
)
NOTE_CRISP_MATCHED_THRESHOLDS = (
    "crisp verdicts use the thresholds induced by the degree grid "
    "(distance < r*t/((1-r)*k)), the exact correspondence for the standard "
    "construction"
)
NOTE_PREFIX_ONLY = "certified on the supplied finite prefix only"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a single named check."""

    name: str
    status: str
    witness: dict | None = None
    details: tuple = ()
    notes: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "witness": self.witness,
            "details": list(self.details),
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class ConvergenceVerdict:
    """Outcome of a tail-window convergence or Cauchy scan.

    ``witnesses`` holds one record per grid pair: the first good index n0
    when the pair is satisfied, or the violating index and degrees when it
    is not.
    """

    status: str
    witnesses: tuple = ()
    limit: tuple | None = None
    notes: tuple[str, ...] = ()

    @property
    def converged(self) -> bool:
        return self.status == CONVERGES

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "witnesses": list(self.witnesses),
            "limit": list(self.limit) if self.limit is not None else None,
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class ContinuityVerdict:
    """Outcome of one continuity notion at one base point."""

    notion: str
    status: str
    witness: dict | None = None
    notes: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        return {
            "notion": self.notion,
            "status": self.status,
            "witness": self.witness,
            "notes": list(self.notes),
        }


def summarize(verdicts) -> dict:
    """Count pass/fail/inconclusive over a list of verdict dicts."""
    counts = {PASS: 0, FAIL: 0, INCONCLUSIVE: 0}
    for v in verdicts:
        status = v["status"] if isinstance(v, dict) else v.status
        if status == CONVERGES:
            status = PASS
        elif status == DIVERGES:
            status = FAIL
        counts[status] = counts.get(status, 0) + 1
    return {"pass": counts[PASS], "fail": counts[FAIL],
            "inconclusive": counts[INCONCLUSIVE]}
