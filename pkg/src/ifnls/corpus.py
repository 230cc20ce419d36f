"""Deterministic test-sequence generator with documented limits.

Every kind is a closed-form sequence whose convergence behavior is known
by inspection, which makes the corpus usable as ground truth for the
theorem-level property suites: harmonic and geometric tails go to zero,
alternating prefixes oscillate forever, constants sit still, and the
partial-sum kind crawls toward pi^2/6 slowly enough to exercise the
Cauchy diagnostics.
"""

import math

import numpy as np

from .sequences import VectorSequence

KINDS = ("harmonic", "geometric", "alternating", "constant", "partialsums")


def _constant_value(dimension: int, seed: int) -> np.ndarray:
    return np.random.default_rng(seed).uniform(-1.0, 1.0, size=dimension)


def generate_corpus(kind: str, length: int, dimension: int,
                    seed: int = 0) -> VectorSequence:
    """Build one corpus sequence; the seed only shapes the constant kind."""
    if kind not in KINDS:
        raise ValueError(f"unknown corpus kind {kind!r}; choose from {KINDS}")
    if length < 2:
        raise ValueError("length must be at least 2")
    if dimension < 1:
        raise ValueError("dimension must be at least 1")
    n = np.arange(1, length + 1, dtype=float)
    if kind == "harmonic":
        coord = 1.0 / n
    elif kind == "geometric":
        coord = 0.5 ** n
    elif kind == "alternating":
        coord = (-1.0) ** n
    elif kind == "constant":
        value = _constant_value(dimension, seed)
        terms = np.tile(value, (length, 1))
        return VectorSequence(terms, label=f"constant-d{dimension}-L{length}-s{seed}")
    else:  # partialsums
        coord = np.cumsum(1.0 / (n * n))
    terms = np.repeat(coord[:, None], dimension, axis=1)
    return VectorSequence(terms, label=f"{kind}-d{dimension}-L{length}-s{seed}")


def known_limit(kind: str, dimension: int, seed: int = 0):
    """The analytic limit of a corpus kind, or None for the divergent one."""
    if kind in ("harmonic", "geometric"):
        return np.zeros(dimension)
    if kind == "constant":
        return _constant_value(dimension, seed)
    if kind == "partialsums":
        return np.full(dimension, math.pi ** 2 / 6.0)
    if kind == "alternating":
        return None
    raise ValueError(f"unknown corpus kind {kind!r}")
