"""Continuous triangular norms and conorms on the unit interval.

Ships the three classical pairs (min/max, product/probabilistic sum,
Lukasiewicz/bounded sum), a sampled checker for the defining axioms, and
grid searches for the interpolation witnesses that continuity guarantees.
Only the idempotent min/max pair is used by the theorem-level suites; the
other families exist to exercise the axiom checker and the idempotency
detector.
"""

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .config import WITNESS_GRID_STEP, DEFAULT_CONFIG
from .errors import WitnessNotFound
from .verdicts import Verdict, PASS, FAIL


def as_unit(value: float, what: str = "value") -> float:
    """Validate membership of [0, 1] and return the value as a float."""
    v = float(value)
    if not 0.0 <= v <= 1.0:
        raise ValueError(f"{what} must lie in [0, 1], got {value!r}")
    return v


def _minimum(a, b):
    return np.minimum(a, b)


def _product(a, b):
    return a * b


def _lukasiewicz(a, b):
    return np.maximum(0.0, a + b - 1.0)


def _maximum(a, b):
    return np.maximum(a, b)


def _prob_sum(a, b):
    return a + b - a * b


def _bounded_sum(a, b):
    return np.minimum(1.0, a + b)


@dataclass(frozen=True)
class TriangularNorm:
    """Fuzzy conjunction: commutative, associative, monotone, identity 1."""

    kind: str
    fn: Callable

    def __call__(self, a, b):
        return self.fn(a, b)


@dataclass(frozen=True)
class TriangularConorm:
    """Fuzzy disjunction: commutative, associative, monotone, identity 0."""

    kind: str
    fn: Callable

    def __call__(self, a, b):
        return self.fn(a, b)


T_NORMS = {
    "min": _minimum,
    "product": _product,
    "lukasiewicz": _lukasiewicz,
}

T_CONORMS = {
    "max": _maximum,
    "probsum": _prob_sum,
    "boundedsum": _bounded_sum,
}


def tnorm(kind: str) -> TriangularNorm:
    if kind not in T_NORMS:
        raise ValueError(f"unknown t-norm {kind!r}; choose from {sorted(T_NORMS)}")
    return TriangularNorm(kind, T_NORMS[kind])


def tconorm(kind: str) -> TriangularConorm:
    if kind not in T_CONORMS:
        raise ValueError(f"unknown t-conorm {kind!r}; choose from {sorted(T_CONORMS)}")
    return TriangularConorm(kind, T_CONORMS[kind])


def eval_tnorm(t: TriangularNorm, a: float, b: float) -> float:
    """Apply a t-norm to two unit-interval values."""
    return float(t(as_unit(a, "a"), as_unit(b, "b")))


def eval_tconorm(s: TriangularConorm, a: float, b: float) -> float:
    """Apply a t-conorm to two unit-interval values."""
    return float(s(as_unit(a, "a"), as_unit(b, "b")))


def _law_violation(op, triples, pairs, identity_value, eps):
    """First sampled law violation for one binary operator, law by law."""
    for a, b, c in triples:
        if abs(op(a, b) - op(b, a)) > eps:
            return {"law": "commutativity", "point": [a, b],
                    "lhs": float(op(a, b)), "rhs": float(op(b, a))}
    for a, b, c in triples:
        lhs = op(op(a, b), c)
        rhs = op(a, op(b, c))
        if abs(lhs - rhs) > eps:
            return {"law": "associativity", "point": [a, b, c],
                    "lhs": float(lhs), "rhs": float(rhs)}
    for a, b, _ in triples:
        if abs(op(a, identity_value) - a) > eps:
            return {"law": "identity", "point": [a, identity_value],
                    "value": float(op(a, identity_value))}
        out = op(a, b)
        if not -eps <= out <= 1.0 + eps:
            return {"law": "range", "point": [a, b], "value": float(out)}
    for (a, b), (c, d) in pairs:
        lo, hi = op(a, b), op(c, d)
        if lo > hi + eps:
            return {"law": "monotonicity", "point": [a, b, c, d],
                    "lhs": float(lo), "rhs": float(hi)}
    return None


def check_algebra_axioms(t: TriangularNorm, s: TriangularConorm,
                         samples: int, seed: int = 0,
                         eps: float = DEFAULT_CONFIG.eps_degree) -> Verdict:
    """Sampled check of the four defining laws for a norm/conorm pair.

    Commutativity, associativity, the respective identities and joint
    monotonicity are tested on ``samples`` seeded triples; the verdict
    carries the first violating tuple when one exists.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    rng = np.random.default_rng(seed)
    u = rng.uniform(0.0, 1.0, size=(samples, 3))
    # Include the corners: violations often hide at 0 and 1.
    corners = np.array([[0.0, 0.0, 0.0], [1.0, 1.0, 1.0],
                        [0.0, 1.0, 0.5], [1.0, 0.0, 0.5]])
    triples = np.vstack([corners, u])
    lows = rng.uniform(0.0, 1.0, size=(samples, 2))
    highs = lows + (1.0 - lows) * rng.uniform(0.0, 1.0, size=(samples, 2))
    pairs = [((a, b), (c, d)) for (a, b), (c, d) in zip(lows, highs)]

    for name, op, ident in (("tnorm", t, 1.0), ("tconorm", s, 0.0)):
        bad = _law_violation(op, triples, pairs, ident, eps)
        if bad is not None:
            bad["operator"] = f"{name}:{op.kind}"
            return Verdict("algebra_axioms", FAIL, witness=bad)
    return Verdict("algebra_axioms", PASS,
                   witness={"samples": samples, "seed": seed})


def _grid_points():
    n = int(round(1.0 / WITNESS_GRID_STEP))
    return [i * WITNESS_GRID_STEP for i in range(1, n)]


def _descending_witness(pred) -> float:
    """Largest interior grid point satisfying pred, refined once by bisection."""
    prev_bad = 1.0
    for g in reversed(_grid_points()):
        if pred(g):
            mid = 0.5 * (g + prev_bad)
            return mid if pred(mid) else g
        prev_bad = g
    raise WitnessNotFound("no interior grid point satisfies the condition")


def _ascending_witness(pred) -> float:
    """Smallest interior grid point satisfying pred, refined once by bisection."""
    prev_bad = 0.0
    for g in _grid_points():
        if pred(g):
            mid = 0.5 * (prev_bad + g)
            return mid if pred(mid) else g
        prev_bad = g
    raise WitnessNotFound("no interior grid point satisfies the condition")


def separation_witness(t: TriangularNorm, s: TriangularConorm,
                       r1: float, r2: float) -> tuple[float, float]:
    """Witness pair for the strict interpolation property of continuous pairs.

    Given 0 < r2 < r1 < 1, returns (r3, r4) in (0, 1) with t(r1, r3) > r2
    and s(r4, r2) < r1.  Continuity of the operators guarantees existence;
    a grid search plus one bisection refinement finds a concrete pair.
    Raises WitnessNotFound for degenerate operators.
    """
    r1 = as_unit(r1, "r1")
    r2 = as_unit(r2, "r2")
    if not 0.0 < r2 < r1 < 1.0:
        raise ValueError("need 0 < r2 < r1 < 1")
    r3 = _descending_witness(lambda g: t(r1, g) > r2)
    r4 = _descending_witness(lambda g: s(g, r2) < r1)
    return r3, r4


def diagonal_witness(t: TriangularNorm, s: TriangularConorm,
                     level: float) -> tuple[float, float]:
    """Witness pair for reaching a level on the diagonal.

    For 0 < level < 1, returns (r6, r7) in (0, 1) with t(r6, r6) >= level
    and s(r7, r7) <= level.
    """
    level = as_unit(level, "level")
    if not 0.0 < level < 1.0:
        raise ValueError("level must lie strictly inside (0, 1)")
    r6 = _ascending_witness(lambda g: t(g, g) >= level)
    r7 = _descending_witness(lambda g: s(g, g) <= level)
    return r6, r7


def idempotency_report(t: TriangularNorm, s: TriangularConorm,
                       eps: float = DEFAULT_CONFIG.eps_degree) -> Verdict:
    """Flag whether both operators are idempotent on the unit-interval grid.

    min/max pass exactly; product/probsum fail with a concrete witness
    (e.g. 0.5*0.5 = 0.25).  Theorem-level suites require a passing pair.
    """
    for name, op in (("tnorm:" + t.kind, t), ("tconorm:" + s.kind, s)):
        for g in [0.0, 1.0] + _grid_points():
            if abs(op(g, g) - g) > eps:
                return Verdict(
                    "idempotency", FAIL,
                    witness={"operator": name, "point": g,
                             "value": float(op(g, g))})
    return Verdict("idempotency", PASS)
