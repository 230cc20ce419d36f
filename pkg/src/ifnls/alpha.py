"""Crisp level norms extracted from a fuzzy norm.

At confidence level alpha in (0, 1) the membership family is

    level_norm_1(x) = inf{ t > 0 : membership(x, t) >= alpha }

and the non-membership family is the least t with non_membership(x, t)
<= alpha.  Both maps of t are monotone, so the infima fall to exponential
bracketing plus bisection.  For the standard construction the infima have
closed forms, kept here as the independent oracle:

    level_norm_1(x) = alpha * k * ||x|| / (1 - alpha)
    level_norm_2(x) = k * ||x|| * (1 - alpha) / alpha
"""

from dataclasses import dataclass

import numpy as np

from .config import (ToleranceConfig, DEFAULT_CONFIG, T_BRACKET_MAX,
                     BISECT_MAX_ITER, PIVOT_FLOOR)
from .errors import BracketError, DegenerateBasis
from .spaces import IFNSpace, as_vector
from .verdicts import (Verdict, PASS, FAIL,
                       NOTE_NONMEMBERSHIP_INF, NOTE_NONMEMBERSHIP_DIRECTION)

MEMBERSHIP = "membership"
NONMEMBERSHIP = "nonmembership"


def as_alpha(alpha: float) -> float:
    a = float(alpha)
    if not 0.0 < a < 1.0:
        raise ValueError(f"alpha must lie strictly inside (0, 1), got {alpha!r}")
    return a


@dataclass(frozen=True)
class AlphaNormResult:
    """A level-norm value with its final bracket and iteration count."""

    value: float
    bracket: tuple[float, float]
    iterations: int


def _threshold_inf(hit, config: ToleranceConfig) -> AlphaNormResult:
    """Least t > 0 where the monotone predicate ``hit`` turns true.

    Doubles up from t = 1 until the predicate holds (BracketError past the
    cap), or halves down until it fails; then bisects.  At return the
    upper end satisfies the predicate and the lower end does not, unless
    the infimum collapsed to 0.
    """
    iterations = 0
    if hit(1.0):
        hi, lo = 1.0, 0.5
        while hit(lo):
            hi = lo
            lo *= 0.5
            iterations += 1
            if lo < 1e-300:
                return AlphaNormResult(0.0, (0.0, lo), iterations)
    else:
        lo, hi = 1.0, 2.0
        while not hit(hi):
            lo = hi
            hi *= 2.0
            iterations += 1
            if hi > T_BRACKET_MAX:
                raise BracketError(
                    f"predicate never satisfied below t = {T_BRACKET_MAX:g}")
    while hi - lo > config.eps_bisect and iterations < BISECT_MAX_ITER:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if hit(mid):
            hi = mid
        else:
            lo = mid
        iterations += 1
    return AlphaNormResult(0.5 * (lo + hi), (lo, hi), iterations)


def alpha_norm_membership(space: IFNSpace, x, alpha: float,
                          config: ToleranceConfig = DEFAULT_CONFIG) -> AlphaNormResult:
    """Membership level norm: least t with membership(x, t) >= alpha."""
    alpha = as_alpha(alpha)
    x = as_vector(x, space.dimension)
    if not np.any(x):
        return AlphaNormResult(0.0, (0.0, 0.0), 0)
    if space.is_standard:
        c = float(space.ifn.scaled_norm(x))
        hit = lambda t: t / (t + c) >= alpha
    else:
        hit = lambda t: space.ifn.degrees(x, t)[0] >= alpha
    return _threshold_inf(hit, config)


def alpha_norm_nonmembership(space: IFNSpace, x, alpha: float,
                             config: ToleranceConfig = DEFAULT_CONFIG) -> AlphaNormResult:
    """Non-membership level norm: least t with non_membership(x, t) <= alpha.

    The set {t : non_membership(x, t) <= alpha} is an upper ray, so only
    its least element is finite; see NOTE_NONMEMBERSHIP_INF.
    """
    alpha = as_alpha(alpha)
    x = as_vector(x, space.dimension)
    if not np.any(x):
        return AlphaNormResult(0.0, (0.0, 0.0), 0)
    if space.is_standard:
        c = float(space.ifn.scaled_norm(x))
        hit = lambda t: c / (t + c) <= alpha
    else:
        hit = lambda t: space.ifn.degrees(x, t)[1] <= alpha
    return _threshold_inf(hit, config)


def closed_form_standard(crisp_value: float, k: float, alpha: float,
                         which: str = MEMBERSHIP) -> float:
    """Analytic level norm for the standard construction (the oracle)."""
    alpha = as_alpha(alpha)
    if crisp_value < 0:
        raise ValueError("crisp norm values are non-negative")
    if not k > 0:
        raise ValueError("scale k must be positive")
    if which == MEMBERSHIP:
        return alpha * k * crisp_value / (1.0 - alpha)
    if which == NONMEMBERSHIP:
        return k * crisp_value * (1.0 - alpha) / alpha
    raise ValueError(f"which must be {MEMBERSHIP!r} or {NONMEMBERSHIP!r}")


def verify_alpha_norm_axioms(space: IFNSpace, alpha: float, samples: int,
                             seed: int = 0,
                             config: ToleranceConfig = DEFAULT_CONFIG) -> Verdict:
    """Sampled norm axioms for both level-norm families.

    Non-negativity, definiteness, absolute homogeneity and the triangle
    inequality are checked on seeded vector pairs; the values come from
    the bisection path, not the closed form, so this doubles as an
    end-to-end exercise of the extraction.  The space is expected to have
    passed the fuzzy-norm verifier with an idempotent operator pair.
    """
    alpha = as_alpha(alpha)
    if samples < 1:
        raise ValueError("samples must be at least 1")
    rng = np.random.default_rng(seed)
    d = space.dimension
    raw = rng.normal(size=(samples, 2, d))
    scales = 10.0 ** rng.uniform(-1.0, 1.0, size=(samples, 2))
    cs = np.sign(rng.uniform(-1, 1, samples))
    cs[cs == 0] = 1.0
    cs *= 10.0 ** rng.uniform(-0.5, 0.5, samples)
    tol = 1e-8

    extractors = ((MEMBERSHIP, alpha_norm_membership),
                  (NONMEMBERSHIP, alpha_norm_nonmembership))
    details = []
    for family, extract in extractors:
        witness = None
        for i in range(samples):
            x = raw[i, 0] * scales[i, 0]
            y = raw[i, 1] * scales[i, 1]
            c = float(cs[i])
            nx = extract(space, x, alpha, config).value
            ny = extract(space, y, alpha, config).value
            if nx < 0 or ny < 0:
                witness = {"law": "non_negativity", "x": x.tolist(),
                           "value": nx}
                break
            if nx <= config.eps_bisect and np.any(x):
                witness = {"law": "definiteness", "x": x.tolist(),
                           "value": nx,
                           "reason": "vanishing norm away from the origin"}
                break
            ncx = extract(space, c * x, alpha, config).value
            if abs(ncx - abs(c) * nx) > tol * (1 + abs(c)):
                witness = {"law": "homogeneity", "x": x.tolist(), "c": c,
                           "lhs": ncx, "rhs": abs(c) * nx}
                break
            nsum = extract(space, x + y, alpha, config).value
            if nsum > nx + ny + tol:
                witness = {"law": "triangle", "x": x.tolist(),
                           "y": y.tolist(), "lhs": nsum, "rhs": nx + ny}
                break
        zero_norm = extract(space, space.zero(), alpha, config).value
        if witness is None and zero_norm != 0.0:
            witness = {"law": "definiteness", "x": space.zero().tolist(),
                       "value": zero_norm}
        details.append({"family": family,
                        "status": FAIL if witness else PASS,
                        "witness": witness})
    status = PASS if all(r["status"] == PASS for r in details) else FAIL
    bad = [r for r in details if r["status"] == FAIL]
    return Verdict("alpha_norm_axioms", status,
                   witness=bad[0]["witness"] if bad else
                   {"alpha": alpha, "samples": samples, "seed": seed},
                   details=tuple(details),
                   notes=(NOTE_NONMEMBERSHIP_INF,))


def verify_ascending_family(space: IFNSpace, x, alphas,
                            config: ToleranceConfig = DEFAULT_CONFIG) -> Verdict:
    """Monotonicity of the level-norm families along increasing alpha.

    The membership family must be non-descending.  The non-membership
    family's direction is observed and reported rather than asserted: with
    the least-t reading it descends for the standard construction.
    """
    alphas = [as_alpha(a) for a in alphas]
    if any(b <= a for a, b in zip(alphas, alphas[1:])):
        raise ValueError("alphas must be strictly increasing")
    x = as_vector(x, space.dimension)
    tol = 10 * config.eps_bisect
    mem_vals = [alpha_norm_membership(space, x, a, config).value for a in alphas]
    non_vals = [alpha_norm_nonmembership(space, x, a, config).value for a in alphas]

    witness = None
    for j in range(len(alphas) - 1):
        if mem_vals[j] > mem_vals[j + 1] + tol:
            witness = {"family": MEMBERSHIP,
                       "alphas": [alphas[j], alphas[j + 1]],
                       "values": [mem_vals[j], mem_vals[j + 1]]}
            break

    def direction(vals):
        if all(a <= b + tol for a, b in zip(vals, vals[1:])):
            return "ascending"
        if all(a >= b - tol for a, b in zip(vals, vals[1:])):
            return "descending"
        return "mixed"

    return Verdict(
        "ascending_family", FAIL if witness else PASS, witness=witness,
        details=({"family": MEMBERSHIP, "alphas": list(alphas),
                  "values": mem_vals, "direction": direction(mem_vals)},
                 {"family": NONMEMBERSHIP, "alphas": list(alphas),
                  "values": non_vals, "direction": direction(non_vals)}),
        notes=(NOTE_NONMEMBERSHIP_DIRECTION,))


def _corner_coefficients(m: int) -> np.ndarray:
    """Deterministic unit-l1-sphere points: axes plus signed diagonals."""
    rows = []
    eye = np.eye(m)
    for i in range(m):
        rows.append(eye[i])
        rows.append(-eye[i])
    if m <= 8:
        for bits in range(2 ** m):
            signs = np.array([1.0 if bits >> j & 1 else -1.0 for j in range(m)])
            rows.append(signs / m)
    else:
        rows.append(np.full(m, 1.0 / m))
        rows.append(np.full(m, -1.0 / m))
    return np.array(rows)


def estimate_comparability_constant(space: IFNSpace, basis, alpha: float,
                                    samples: int, seed: int = 0,
                                    config: ToleranceConfig = DEFAULT_CONFIG) -> float:
    """Lower bound linking combinations of independent vectors to their
    coefficient size.

    Minimizes level_norm_1(sum c_i b_i) / sum|c_i| over seeded points of
    the unit l1 sphere plus the deterministic axis and diagonal corners,
    where the extrema of such norm ratios live.  The result is a
    statistical estimate of the best constant.
    """
    alpha = as_alpha(alpha)
    if samples < 1:
        raise ValueError("samples must be at least 1")
    rows = [as_vector(b, space.dimension) for b in basis]
    if not rows:
        raise ValueError("basis must be non-empty")
    B = np.vstack(rows)
    gram = B @ B.T
    if abs(np.linalg.det(gram)) <= PIVOT_FLOOR:
        raise DegenerateBasis("Gram determinant at or below the pivot floor")

    m = len(rows)
    rng = np.random.default_rng(seed)
    weights = rng.dirichlet(np.ones(m), size=samples)
    signs = rng.choice([-1.0, 1.0], size=(samples, m))
    coeffs = np.vstack([_corner_coefficients(m), weights * signs])
    vectors = coeffs @ B

    best = np.inf
    for c_row, v in zip(coeffs, vectors):
        denom = float(np.abs(c_row).sum())
        value = alpha_norm_membership(space, v, alpha, config).value
        best = min(best, value / denom)
    return float(best)
