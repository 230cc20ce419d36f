"""Desk-scale closedness, closure, boundedness and compactness verdicts.

All judgments operate on finite point samples.  Boundedness is a genuine
witness search: find (t, r) with membership above 1 - r and non-membership
below r for every point.  Closedness of the set a sample stands for is not
decidable from data, so it travels as declared metadata and the
compactness verdict (closed and bounded, in finite dimension with an
idempotent operator pair) is conditional on that declaration.
"""

import json
from dataclasses import dataclass

import numpy as np

from .config import ToleranceConfig, DEFAULT_CONFIG, BOUNDED_SEARCH_CAP
from .errors import SchemaError
from .spaces import IFNSpace, degrees_batch
from .verdicts import Verdict, PASS, FAIL

_SET_FIELDS = {"label", "closed", "points"}


@dataclass(frozen=True, eq=False)
class SampledSet:
    """A finite point sample plus the declared closedness of its source set."""

    points: np.ndarray
    closed_flag: bool
    label: str = ""

    def __post_init__(self):
        pts = np.atleast_2d(np.asarray(self.points, dtype=float))
        if pts.ndim != 2 or pts.shape[0] < 1 or pts.shape[1] < 1:
            raise ValueError("a sampled set needs at least one point")
        if not np.all(np.isfinite(pts)):
            raise ValueError("sample points must be finite")
        object.__setattr__(self, "points", pts)

    @property
    def size(self) -> int:
        return self.points.shape[0]

    @property
    def dimension(self) -> int:
        return self.points.shape[1]


def set_from_dict(spec: dict) -> SampledSet:
    if not isinstance(spec, dict):
        raise SchemaError("set spec must be a JSON object")
    missing = _SET_FIELDS - spec.keys()
    unknown = spec.keys() - _SET_FIELDS
    if missing:
        raise SchemaError(f"set spec missing fields: {sorted(missing)}")
    if unknown:
        raise SchemaError(f"set spec has unknown fields: {sorted(unknown)}")
    if not isinstance(spec["closed"], bool):
        raise SchemaError("'closed' must be a boolean")
    if not isinstance(spec["label"], str):
        raise SchemaError("'label' must be a string")
    try:
        return SampledSet(np.asarray(spec["points"], dtype=float),
                          spec["closed"], spec["label"])
    except (ValueError, TypeError) as exc:
        raise SchemaError(f"bad point list: {exc}") from exc


def set_to_dict(sampled: SampledSet) -> dict:
    return {"label": sampled.label, "closed": sampled.closed_flag,
            "points": sampled.points.tolist()}


def load_set(path) -> SampledSet:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            spec = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise SchemaError(f"cannot read set spec {path}: {exc}") from exc
    return set_from_dict(spec)


def bounded_witness(space: IFNSpace, points: np.ndarray,
                    config: ToleranceConfig = DEFAULT_CONFIG) -> dict | None:
    """Search for (t, r) bounding every point's degrees, or None.

    For the standard construction the smallest workable t at level r is
    k * max||x|| * (1 - r) / r, which seeds the ladder; a doubling ladder
    capped at BOUNDED_SEARCH_CAP covers the general case.  Failure at the
    cap means "no witness found", not "unbounded".
    """
    points = np.atleast_2d(np.asarray(points, dtype=float))
    for r in config.r_levels:
        if space.is_standard:
            max_norm = float(space.ifn.scaled_norm(points, axis=-1).max())
            start = max_norm * (1.0 - r) / r
            t = max(start * (1.0 + 1e-9) + 1e-12, 1e-12)
        else:
            t = 1.0
        while t <= BOUNDED_SEARCH_CAP:
            mem, nonmem = degrees_batch(space, points, t)
            if bool(np.all(mem > 1.0 - r) and np.all(nonmem < r)):
                worst = int(np.argmin(mem))
                return {"t": float(t), "r": float(r),
                        "min_membership": float(mem.min()),
                        "max_non_membership": float(nonmem.max()),
                        "worst_point": points[worst].tolist()}
            t *= 2.0
    return None


def check_set_bounded(space: IFNSpace, sampled: SampledSet,
                      config: ToleranceConfig = DEFAULT_CONFIG) -> Verdict:
    """Boundedness witness search over a finite sample."""
    witness = bounded_witness(space, sampled.points, config)
    if witness is None:
        return Verdict("set_bounded", FAIL,
                       witness={"reason": "no witness found at search cap",
                                "cap": BOUNDED_SEARCH_CAP,
                                "r_levels": list(config.r_levels)})
    return Verdict("set_bounded", PASS, witness=witness)


def closure_membership(space: IFNSpace, sampled: SampledSet, x,
                       config: ToleranceConfig = DEFAULT_CONFIG) -> Verdict:
    """Whether x is reachable by a sequence drawn from the finite sample.

    On a finite sample any convergent selection eventually sits at the
    nearest point, so the check reduces to min-distance membership within
    eps_limit; the verdict says so and carries the nearest point and its
    degrees on the t grid.
    """
    x = np.asarray(x, dtype=float)
    diffs = sampled.points - x
    if space.is_standard:
        dists = space.ifn.crisp(diffs, axis=-1)
    else:
        dists = np.linalg.norm(diffs, axis=-1)
    idx = int(np.argmin(dists))
    dmin = float(dists[idx])
    nearest = sampled.points[idx]
    degrees = {str(t): list(map(float, space.evaluate(nearest - x, t)))
               for t in config.t_grid} if dmin > 0 else None
    in_closure = dmin <= config.eps_limit
    return Verdict(
        "closure_membership", PASS if in_closure else FAIL,
        witness={"x": x.tolist(), "nearest": nearest.tolist(),
                 "min_distance": dmin, "tolerance": config.eps_limit,
                 "grid_degrees": degrees},
        notes=("finite sample: reduced to min-distance membership within "
               "eps_limit",))


def compactness_verdict(space: IFNSpace, sampled: SampledSet,
                        config: ToleranceConfig = DEFAULT_CONFIG) -> Verdict:
    """Closed-and-bounded characterization applied at desk scale.

    Requires a finite-dimensional space whose operator pair is idempotent
    and whose degrees vanish appropriately; the caller vouches for that.
    The verdict names both sub-verdicts: the declared closedness gate and
    the boundedness witness search.
    """
    bounded = check_set_bounded(space, sampled, config)
    closed_rec = {"condition": "declared_closed",
                  "status": PASS if sampled.closed_flag else FAIL,
                  "witness": {"closed_flag": sampled.closed_flag}}
    bounded_rec = {"condition": "bounded", "status": bounded.status,
                   "witness": bounded.witness}
    compact = sampled.closed_flag and bounded.passed
    notes = ()
    if not sampled.closed_flag:
        notes = ("not certified compact: closedness declared false",)
    return Verdict("compactness", PASS if compact else FAIL,
                   witness=bounded.witness,
                   details=(closed_rec, bounded_rec), notes=notes)


def finite_sample_subsequence_check(space: IFNSpace, sampled: SampledSet,
                                    draws: int, seed: int = 0,
                                    config: ToleranceConfig = DEFAULT_CONFIG) -> Verdict:
    """Sequential-compactness cross-check, exact for finite samples.

    Draw a seeded sequence from the sample; by pigeonhole some point
    repeats, and the constant subsequence it spawns converges to a member
    of the sample.  Certifies that subsequence with the convergence
    scanner.
    """
    from .sequences import VectorSequence, check_convergence_to

    if draws < 2 * (config.tail_window + 1):
        raise ValueError("draws too few for a certifiable subsequence")
    rng = np.random.default_rng(seed)
    picks = rng.integers(0, sampled.size, size=draws)
    counts = np.bincount(picks, minlength=sampled.size)
    target_idx = int(np.argmax(counts))
    sub_positions = np.nonzero(picks == target_idx)[0] + 1  # 1-based
    target = sampled.points[target_idx]
    terms = sampled.points[picks]
    seq = VectorSequence(terms, label=f"draws from {sampled.label or 'sample'}")
    sub = seq.subsequence(sub_positions.tolist())
    verdict = check_convergence_to(space, sub, target, config)
    status = PASS if verdict.converged else FAIL
    return Verdict("finite_sample_subsequence", status,
                   witness={"target": target.tolist(),
                            "occurrences": int(counts[target_idx]),
                            "subsequence_status": verdict.status},
                   details=(verdict.to_dict(),))
