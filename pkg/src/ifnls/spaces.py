"""Finite-dimensional vector spaces carrying an intuitionistic fuzzy norm.

The workhorse construction turns a crisp norm into a degree pair

    membership(x, t)     = t / (t + k*||x||)
    non-membership(x, t) = k*||x|| / (t + k*||x||)

for a scale k > 0.  ``membership(x, t)`` reads as the degree to which the
length of x is below t.  A sampled verifier checks the eleven defining
conditions of such a fuzzy norm, so the same machinery also works as a
falsifier for would-be constructions supplied through ``CustomIFN``.
"""

import json
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from . import algebra
from .algebra import TriangularNorm, TriangularConorm, tnorm, tconorm
from .config import ToleranceConfig, DEFAULT_CONFIG, T_LARGE
from .errors import DomainError, SchemaError
from .verdicts import (Verdict, PASS, FAIL, INCONCLUSIVE,
                       NOTE_M_BELOW_ONE, NOTE_M_MONOTONE,
                       NOTE_VANISHING_SAMPLED)


class DegreePair(NamedTuple):
    membership: float
    non_membership: float


def as_vector(x, dimension: int | None = None) -> np.ndarray:
    """Coerce to a finite 1-d float array, optionally of fixed dimension."""
    v = np.atleast_1d(np.asarray(x, dtype=float))
    if v.ndim != 1 or v.size < 1:
        raise ValueError("a vector must be a non-empty 1-d array of reals")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector coordinates must be finite")
    if dimension is not None and v.size != dimension:
        raise DomainError(f"expected dimension {dimension}, got {v.size}")
    return v


def _l1(a, axis=-1):
    return np.abs(a).sum(axis=axis)


def _l2(a, axis=-1):
    return np.sqrt((a * a).sum(axis=axis))


def _linf(a, axis=-1):
    return np.abs(a).max(axis=axis)


CRISP_NORMS = {"l1": _l1, "l2": _l2, "linf": _linf}


@dataclass(frozen=True)
class CrispNorm:
    kind: str

    def __post_init__(self):
        if self.kind not in CRISP_NORMS:
            raise ValueError(
                f"unknown crisp norm {self.kind!r}; choose from {sorted(CRISP_NORMS)}")

    def __call__(self, a, axis=-1):
        return CRISP_NORMS[self.kind](np.asarray(a, dtype=float), axis=axis)


@dataclass(frozen=True)
class StandardIFN:
    """Degree pair built from a crisp norm with scale k > 0."""

    crisp: CrispNorm
    k: float

    def __post_init__(self):
        if not self.k > 0:
            raise ValueError("scale k must be positive")

    def scaled_norm(self, x, axis=-1):
        return self.k * self.crisp(x, axis=axis)

    def degrees_from_scaled_norm(self, c, t):
        """Degrees given c = k*||x||; c may be an array.

        The non-membership degree is the complement of the membership
        degree, which keeps their float sum at exactly 1.
        """
        mem = t / (t + c)
        return mem, 1.0 - mem

    def degrees(self, x, t: float):
        return self.degrees_from_scaled_norm(self.scaled_norm(x), t)


@dataclass(frozen=True)
class CustomIFN:
    """Adapter for a user-supplied degree evaluator (x, t) -> (mem, nonmem).

    Lets the axiom verifier run against arbitrary constructions, including
    deliberately broken ones.  Not serializable.
    """

    fn: Callable[[np.ndarray, float], tuple[float, float]]

    def degrees(self, x, t: float):
        mem, nonmem = self.fn(x, t)
        return float(mem), float(nonmem)


@dataclass(frozen=True)
class IFNSpace:
    """A finite-dimensional space with degree evaluator and operator pair."""

    dimension: int
    ifn: StandardIFN | CustomIFN
    tnorm: TriangularNorm
    tconorm: TriangularConorm

    def __post_init__(self):
        if self.dimension < 1:
            raise ValueError("dimension must be at least 1")

    @property
    def is_standard(self) -> bool:
        return isinstance(self.ifn, StandardIFN)

    def zero(self) -> np.ndarray:
        return np.zeros(self.dimension)

    def evaluate(self, x, t: float) -> DegreePair:
        """Degree pair at (x, t); defined only for t > 0."""
        if not t > 0:
            raise DomainError(f"degrees are defined for t > 0 only, got t={t!r}")
        v = as_vector(x, self.dimension)
        mem, nonmem = self.ifn.degrees(v, float(t))
        mem, nonmem = float(mem), float(nonmem)
        eps = DEFAULT_CONFIG.eps_degree
        if not (-eps <= mem <= 1 + eps and -eps <= nonmem <= 1 + eps):
            raise DomainError(f"evaluator returned degrees outside [0,1]: "
                              f"({mem}, {nonmem})")
        if mem + nonmem > 1 + eps:
            raise DomainError(f"degree sum exceeds 1: {mem} + {nonmem}")
        return DegreePair(mem, nonmem)


def standard_space(dimension: int, crisp: str = "l2", k: float = 1.0,
                   tnorm_kind: str = "min", tconorm_kind: str = "max") -> IFNSpace:
    return IFNSpace(dimension, StandardIFN(CrispNorm(crisp), float(k)),
                    tnorm(tnorm_kind), tconorm(tconorm_kind))


def custom_space(dimension: int, fn,
                 tnorm_kind: str = "min", tconorm_kind: str = "max") -> IFNSpace:
    """Space around a registered degree evaluator; for verifier/falsifier use."""
    return IFNSpace(dimension, CustomIFN(fn), tnorm(tnorm_kind), tconorm(tconorm_kind))


def degrees_batch(space: IFNSpace, vectors: np.ndarray, t: float):
    """Degree arrays for a batch of row vectors at one threshold t."""
    vectors = np.asarray(vectors, dtype=float)
    if space.is_standard:
        return space.ifn.degrees_from_scaled_norm(
            space.ifn.scaled_norm(vectors, axis=-1), t)
    mem = np.empty(len(vectors))
    nonmem = np.empty(len(vectors))
    for i, v in enumerate(vectors):
        mem[i], nonmem[i] = space.ifn.degrees(v, t)
    return mem, nonmem


# ---------------------------------------------------------------------------
# Space-spec JSON
# ---------------------------------------------------------------------------

_SPACE_FIELDS = {"dimension", "crisp_norm", "k", "tnorm", "tconorm"}


def space_from_dict(spec: dict) -> IFNSpace:
    """Build a standard space from the space-spec JSON schema.

    All five fields are required and unknown fields are rejected, so a
    typo cannot silently fall back to a default.
    """
    if not isinstance(spec, dict):
        raise SchemaError("space spec must be a JSON object")
    missing = _SPACE_FIELDS - spec.keys()
    unknown = spec.keys() - _SPACE_FIELDS
    if missing:
        raise SchemaError(f"space spec missing fields: {sorted(missing)}")
    if unknown:
        raise SchemaError(f"space spec has unknown fields: {sorted(unknown)}")
    dim = spec["dimension"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise SchemaError("dimension must be an integer >= 1")
    k = spec["k"]
    if not isinstance(k, (int, float)) or isinstance(k, bool) or not k > 0:
        raise SchemaError("k must be a positive number")
    try:
        return standard_space(dim, spec["crisp_norm"], float(k),
                              spec["tnorm"], spec["tconorm"])
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def space_to_dict(space: IFNSpace) -> dict:
    if not space.is_standard:
        raise SchemaError("only standard spaces are serializable")
    return {
        "dimension": space.dimension,
        "crisp_norm": space.ifn.crisp.kind,
        "k": space.ifn.k,
        "tnorm": space.tnorm.kind,
        "tconorm": space.tconorm.kind,
    }


def load_space(path) -> IFNSpace:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            spec = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise SchemaError(f"cannot read space spec {path}: {exc}") from exc
    return space_from_dict(spec)


# ---------------------------------------------------------------------------
# Sampled verification of the defining conditions
# ---------------------------------------------------------------------------

AXIOM_NAMES = (
    "degree_sum_bound",            # mem + nonmem <= 1
    "membership_positive",         # mem > 0
    "membership_definite",         # mem = 1 iff x = 0
    "membership_scaling",          # mem(cx, t) = mem(x, t/|c|)
    "membership_triangle",         # tnorm(mem(x,s), mem(y,t)) <= mem(x+y, s+t)
    "membership_monotone_limit",   # non-decreasing in t, -> 1
    "nonmembership_below_one",     # nonmem < 1
    "nonmembership_definite",      # nonmem = 0 iff x = 0
    "nonmembership_scaling",       # nonmem(cx, t) = nonmem(x, t/|c|)
    "nonmembership_triangle",      # tconorm(...) >= nonmem(x+y, s+t)
    "nonmembership_monotone_limit",  # non-increasing in t, -> 0
)


def _sample_vectors(rng, count, dimension, mag_lo=-3.0, mag_hi=2.0):
    """Seeded vectors with log-uniform magnitudes; directions on the sphere."""
    raw = rng.normal(size=(count, dimension))
    norms = np.linalg.norm(raw, axis=1)
    norms[norms == 0] = 1.0
    mags = 10.0 ** rng.uniform(mag_lo, mag_hi, size=count)
    return raw / norms[:, None] * mags[:, None]


def verify_ifn_axioms(space: IFNSpace, samples: int, seed: int = 0,
                      config: ToleranceConfig = DEFAULT_CONFIG) -> Verdict:
    """Check the eleven defining conditions on seeded samples.

    Returns a composite verdict with one record per condition; a failing
    record carries the violating tuple so it can be re-evaluated.  The
    two-sided definiteness conditions are checked exactly at the origin
    and strictly away from it on the sampled points.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    rng = np.random.default_rng(seed)
    d = space.dimension
    eps = config.eps_degree
    xs = _sample_vectors(rng, samples, d)
    ys = _sample_vectors(rng, samples, d)
    cs = np.sign(rng.uniform(-1, 1, samples))
    cs[cs == 0] = 1.0
    cs *= 10.0 ** rng.uniform(-0.7, 0.7, samples)
    ss = 10.0 ** rng.uniform(-2.0, 2.0, samples)
    ts = 10.0 ** rng.uniform(-2.0, 2.0, samples)
    zero = space.zero()
    t_sorted = tuple(sorted(config.t_grid))

    records = {}

    def record(name, witness=None, status=FAIL):
        if name not in records:
            records[name] = {"condition": name, "status": status,
                             "witness": witness}

    for i in range(samples):
        x, y, c, s, t = xs[i], ys[i], cs[i], ss[i], ts[i]
        mem, nonmem = space.evaluate(x, t)
        if mem + nonmem > 1 + eps:
            record("degree_sum_bound",
                   {"x": x.tolist(), "t": t, "membership": mem,
                    "non_membership": nonmem})
        if not mem > 0:
            record("membership_positive",
                   {"x": x.tolist(), "t": t, "membership": mem})
        if not mem < 1:
            record("membership_definite",
                   {"x": x.tolist(), "t": t, "membership": mem,
                    "reason": "degree 1 away from the origin"})
        if not nonmem < 1:
            record("nonmembership_below_one",
                   {"x": x.tolist(), "t": t, "non_membership": nonmem})
        if not nonmem > 0:
            record("nonmembership_definite",
                   {"x": x.tolist(), "t": t, "non_membership": nonmem,
                    "reason": "degree 0 away from the origin"})

        m_scaled = space.evaluate(c * x, t)
        m_ref = space.evaluate(x, t / abs(c))
        if abs(m_scaled.membership - m_ref.membership) > eps:
            record("membership_scaling",
                   {"x": x.tolist(), "c": float(c), "t": t,
                    "lhs": m_scaled.membership, "rhs": m_ref.membership})
        if abs(m_scaled.non_membership - m_ref.non_membership) > eps:
            record("nonmembership_scaling",
                   {"x": x.tolist(), "c": float(c), "t": t,
                    "lhs": m_scaled.non_membership,
                    "rhs": m_ref.non_membership})

        px = space.evaluate(x, s)
        py = space.evaluate(y, t)
        psum = space.evaluate(x + y, s + t)
        tri = float(space.tnorm(px.membership, py.membership))
        if tri > psum.membership + eps:
            record("membership_triangle",
                   {"x": x.tolist(), "y": y.tolist(), "s": s, "t": t,
                    "combined": tri, "sum_degree": psum.membership})
        co = float(space.tconorm(px.non_membership, py.non_membership))
        if co < psum.non_membership - eps:
            record("nonmembership_triangle",
                   {"x": x.tolist(), "y": y.tolist(), "s": s, "t": t,
                    "combined": co, "sum_degree": psum.non_membership})

    # Origin side of the definiteness conditions: exact, not sampled.
    for t in t_sorted:
        mem0, nonmem0 = space.evaluate(zero, t)
        if mem0 != 1.0:
            record("membership_definite",
                   {"x": zero.tolist(), "t": t, "membership": mem0,
                    "reason": "degree below 1 at the origin"})
        if nonmem0 != 0.0:
            record("nonmembership_definite",
                   {"x": zero.tolist(), "t": t, "non_membership": nonmem0,
                    "reason": "degree above 0 at the origin"})

    # Monotone envelopes and far-sample limits on a reduced sample.
    probe = xs[: min(samples, 64)]
    for x in probe:
        mems = [space.evaluate(x, t).membership for t in t_sorted]
        nonmems = [space.evaluate(x, t).non_membership for t in t_sorted]
        for j in range(len(t_sorted) - 1):
            if mems[j] > mems[j + 1] + eps:
                record("membership_monotone_limit",
                       {"x": x.tolist(), "t_pair": [t_sorted[j], t_sorted[j + 1]],
                        "degrees": [mems[j], mems[j + 1]]})
            if nonmems[j] < nonmems[j + 1] - eps:
                record("nonmembership_monotone_limit",
                       {"x": x.tolist(), "t_pair": [t_sorted[j], t_sorted[j + 1]],
                        "degrees": [nonmems[j], nonmems[j + 1]]})
        far = space.evaluate(x, T_LARGE)
        if far.membership < 1 - config.eps_limit:
            record("membership_monotone_limit",
                   {"x": x.tolist(), "t": T_LARGE,
                    "membership": far.membership,
                    "reason": "far sample below 1 - eps_limit"})
        if far.non_membership > config.eps_limit:
            record("nonmembership_monotone_limit",
                   {"x": x.tolist(), "t": T_LARGE,
                    "non_membership": far.non_membership,
                    "reason": "far sample above eps_limit"})

    details = []
    for name in AXIOM_NAMES:
        if name in records:
            details.append(records[name])
        else:
            details.append({"condition": name, "status": PASS, "witness": None})
    status = PASS if all(r["status"] == PASS for r in details) else FAIL
    failing = [r for r in details if r["status"] == FAIL]
    return Verdict("ifn_axioms", status,
                   witness=failing[0]["witness"] if failing else
                   {"samples": samples, "seed": seed},
                   details=tuple(details),
                   notes=(NOTE_M_BELOW_ONE, NOTE_M_MONOTONE))


def verify_extended_conditions(space: IFNSpace, samples: int,
                               config: ToleranceConfig = DEFAULT_CONFIG,
                               threshold: float = 0.5,
                               seed: int = 0) -> Verdict:
    """Check the extra hypotheses the level-norm results lean on.

    Idempotency of the operator pair is decidable on a grid and reported
    pass/fail.  The vanishing conditions are existential over all t > 0,
    so they are sampled in contrapositive form: every sampled x != 0 must
    admit a grid t where the membership degree drops below ``threshold``
    (resp. the non-membership degree rises above 1 - threshold).  A grid
    exhausted without such t yields inconclusive, never failure.
    """
    idem = algebra.idempotency_report(space.tnorm, space.tconorm,
                                      eps=config.eps_degree)
    details = [{"condition": "idempotent_pair", "status": idem.status,
                "witness": idem.witness}]

    rng = np.random.default_rng(seed)
    xs = _sample_vectors(rng, max(samples, 1), space.dimension)
    t_search = 10.0 ** np.linspace(-12, 3, 46)

    def sampled_existential(name, hit):
        for x in xs:
            found = None
            for t in t_search:
                if hit(x, float(t)):
                    found = float(t)
                    break
            if found is None:
                return {"condition": name, "status": INCONCLUSIVE,
                        "witness": {"x": x.tolist(),
                                    "reason": "search grid exhausted"}}
        return {"condition": name, "status": PASS, "witness": None}

    details.append(sampled_existential(
        "membership_vanishes_for_nonzero",
        lambda x, t: space.evaluate(x, t).membership < threshold))
    details.append(sampled_existential(
        "nonmembership_saturates_for_nonzero",
        lambda x, t: space.evaluate(x, t).non_membership > 1 - threshold))

    if any(r["status"] == FAIL for r in details):
        status = FAIL
    elif any(r["status"] == INCONCLUSIVE for r in details):
        status = INCONCLUSIVE
    else:
        status = PASS
    failing = [r for r in details if r["status"] != PASS]
    return Verdict("extended_conditions", status,
                   witness=failing[0]["witness"] if failing else None,
                   details=tuple(details),
                   notes=(NOTE_VANISHING_SAMPLED,))
