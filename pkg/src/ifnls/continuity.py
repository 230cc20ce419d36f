"""Three continuity notions for maps between fuzzy-normed spaces.

Sequential continuity transports convergent probe sequences through the
map.  The epsilon-threshold notion asks, per (eps, alpha), for a (delta,
beta) making two degree implications hold at every probe point.  The
strong notion demands a single delta whose domain degrees bound the image
degrees outright; it is strictly harder and fails for maps whose
difference quotient is unbounded, which the falsifier demonstrates with a
concrete far-field witness.

Probe points are seeded and sit on shells around the base point with
logarithmically spaced radii.  The radius range must be generous in both
directions: tiny radii keep every (delta, beta) hypothesis non-vacuous,
huge radii expose unbounded difference quotients.
"""

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .config import ToleranceConfig, DEFAULT_CONFIG
from .errors import PreconditionFailed
from .spaces import IFNSpace, as_vector, degrees_batch
from .sequences import VectorSequence, check_convergence_to
from .topology import SampledSet, compactness_verdict
from .verdicts import (Verdict, ContinuityVerdict, PASS, FAIL, INCONCLUSIVE)

SEQUENTIAL = "sequential_ifc"
STRONG = "strong_ifc"
EPS_THRESHOLD = "ifc"

EPS_LIST = (0.1, 1.0)
DELTA_GRID = tuple(float(v) for v in np.logspace(-6, 3, 32))
EPS_ALPHA_GRID = ((0.1, 0.5), (0.1, 0.9), (1.0, 0.5), (1.0, 0.9))
BETA_LEVELS = (0.5, 0.9, 0.99)
PROBE_POINTS = 512
SHELL_RADII = (1e-9, 1e7)


@dataclass(frozen=True)
class SampledMap:
    """A map between two spaces, evaluated pointwise on probe data."""

    domain: IFNSpace
    codomain: IFNSpace
    fn: Callable[[np.ndarray], np.ndarray]
    name: str = "custom"

    def __call__(self, x) -> np.ndarray:
        y = as_vector(self.fn(as_vector(x, self.domain.dimension)),
                      self.codomain.dimension)
        return y

    def apply_rows(self, rows: np.ndarray) -> np.ndarray:
        return np.array([self(row) for row in np.atleast_2d(rows)])


def _identity(x):
    return x


def _step(x):
    # 0 left of the origin, 1 from it on; the classic jump.
    return np.array([0.0 if x[0] < 0 else 1.0])


def _rational_quartic(x):
    v = x[0]
    return np.array([v ** 4 / (1.0 + v * v)])


def builtin_map(name: str, domain: IFNSpace,
                codomain: IFNSpace | None = None) -> SampledMap:
    """Resolve a builtin map name: identity, scale:<c>, step, example33."""
    codomain = codomain or domain
    if name == "identity":
        if domain.dimension != codomain.dimension:
            raise ValueError("identity needs equal dimensions")
        return SampledMap(domain, codomain, _identity, name)
    if name.startswith("scale:"):
        try:
            c = float(name.split(":", 1)[1])
        except ValueError as exc:
            raise ValueError(f"bad scale factor in {name!r}") from exc
        if c == 0:
            raise ValueError("scale factor must be nonzero")
        if domain.dimension != codomain.dimension:
            raise ValueError("scaling needs equal dimensions")
        return SampledMap(domain, codomain, lambda x: c * x, name)
    if name == "step":
        if domain.dimension != 1 or codomain.dimension != 1:
            raise ValueError("the step map is one-dimensional")
        return SampledMap(domain, codomain, _step, name)
    if name == "example33":
        if domain.dimension != 1 or codomain.dimension != 1:
            raise ValueError("example33 is one-dimensional")
        return SampledMap(domain, codomain, _rational_quartic, name)
    raise ValueError(f"unknown builtin map {name!r}")


BUILTIN_MAP_NAMES = ("identity", "scale:<c>", "step", "example33")


# ---------------------------------------------------------------------------
# Probes
# ---------------------------------------------------------------------------

def geometric_probe_sequences(space: IFNSpace, x0, count: int = 4,
                              length: int = 120, seed: int = 0) -> list:
    """Probe sequences x0 + direction/2^n, certifiably convergent to x0."""
    x0 = as_vector(x0, space.dimension)
    d = space.dimension
    rng = np.random.default_rng(seed)
    dirs = [np.eye(d)[0], -np.eye(d)[0]]
    while len(dirs) < count:
        v = rng.normal(size=d)
        dirs.append(v / np.linalg.norm(v))
    offsets = 0.5 ** np.arange(1, length + 1)
    probes = []
    for j, direction in enumerate(dirs[:count]):
        terms = x0[None, :] + offsets[:, None] * direction[None, :]
        probes.append(VectorSequence(terms, label=f"probe{j}"))
    return probes


def _shell_points(x0: np.ndarray, dimension: int, probe_points: int,
                  seed: int) -> np.ndarray:
    """Seeded points on log-spaced shells around x0, both directions."""
    lo, hi = SHELL_RADII
    radii = np.logspace(np.log10(lo), np.log10(hi), max(probe_points // 2, 2))
    rng = np.random.default_rng(seed)
    points = []
    for radius in radii:
        if dimension == 1:
            u = np.array([1.0])
        else:
            u = rng.normal(size=dimension)
            u /= np.linalg.norm(u)
        points.append(x0 + radius * u)
        points.append(x0 - radius * u)
    return np.array(points)


# ---------------------------------------------------------------------------
# The three notions
# ---------------------------------------------------------------------------

def check_sequential_ifc_at(smap: SampledMap, x0, probe_sequences=None,
                            config: ToleranceConfig = DEFAULT_CONFIG,
                            seed: int = 0) -> ContinuityVerdict:
    """Every probe converging to x0 must map to a sequence converging to
    the image of x0."""
    x0 = as_vector(x0, smap.domain.dimension)
    fx0 = smap(x0)
    if probe_sequences is None:
        probe_sequences = geometric_probe_sequences(smap.domain, x0, seed=seed)
    checked = []
    for probe in probe_sequences:
        domain_verdict = check_convergence_to(smap.domain, probe, x0, config)
        if not domain_verdict.converged:
            raise PreconditionFailed(
                f"probe {probe.label!r} not certified convergent to the "
                f"base point: {domain_verdict.status}")
        image = VectorSequence(smap.apply_rows(probe.terms),
                               label=f"image of {probe.label}")
        image_verdict = check_convergence_to(smap.codomain, image, fx0, config)
        checked.append({"probe": probe.label,
                        "image_status": image_verdict.status})
        if not image_verdict.converged:
            return ContinuityVerdict(
                SEQUENTIAL, FAIL,
                witness={"x0": x0.tolist(), "fx0": fx0.tolist(),
                         "probe": probe.label,
                         "probe_first_terms": probe.terms[:3].tolist(),
                         "image_status": image_verdict.status,
                         "image_records": list(image_verdict.witnesses)[:6]})
    return ContinuityVerdict(SEQUENTIAL, PASS,
                             witness={"x0": x0.tolist(), "fx0": fx0.tolist(),
                                      "probes": checked})


def check_strong_ifc_at(smap: SampledMap, x0, eps_list=EPS_LIST,
                        delta_grid=DELTA_GRID, probe_points: int = PROBE_POINTS,
                        seed: int = 0) -> ContinuityVerdict:
    """One delta per eps must bound image degrees by domain degrees.

    For each eps, hunts the delta grid for a value with
    membership_image(eps) >= membership_domain(delta) and the strict
    reverse for non-membership at every probe point.  Probe points equal
    to the base point are excluded; exact-zero image differences satisfy
    the condition by convention.  A failure records an (eps, x) pair that
    defeats every delta in the grid.
    """
    x0 = as_vector(x0, smap.domain.dimension)
    fx0 = smap(x0)
    points = _shell_points(x0, smap.domain.dimension, probe_points, seed)
    dom_gaps = points - x0
    img_gaps = smap.apply_rows(points) - fx0
    zero_image = ~np.any(img_gaps != 0.0, axis=1)

    dom_by_delta = {d: degrees_batch(smap.domain, dom_gaps, d)
                    for d in delta_grid}
    satisfied = {}
    for eps in eps_list:
        mem_v, nonmem_v = degrees_batch(smap.codomain, img_gaps, eps)
        ok_rows = []
        for delta in delta_grid:
            mem_u, nonmem_u = dom_by_delta[delta]
            ok = zero_image | ((mem_v >= mem_u) & (nonmem_v < nonmem_u))
            if bool(ok.all()):
                satisfied[eps] = float(delta)
                break
            ok_rows.append(ok)
        if eps in satisfied:
            continue
        defeats_all = ~np.logical_or.reduce(ok_rows)
        if defeats_all.any():
            i = int(np.argmax(defeats_all))
            witness_point = points[i]
        else:
            # No single point defeats every delta; pick the worst offender
            # for the smallest delta (still a complete defeat of the grid).
            i = int(np.argmax(~ok_rows[0]))
            witness_point = points[i]
        return ContinuityVerdict(
            STRONG, FAIL,
            witness={"eps": float(eps), "x": witness_point.tolist(),
                     "x0": x0.tolist(), "fx": smap(witness_point).tolist(),
                     "fx0": fx0.tolist(),
                     "defeats_every_delta": bool(defeats_all.any()),
                     "delta_grid": [float(d) for d in delta_grid]})
    return ContinuityVerdict(
        STRONG, PASS,
        witness={"x0": x0.tolist(),
                 "delta_for_eps": {str(e): satisfied[e] for e in eps_list}})


def check_ifc_at(smap: SampledMap, x0, eps_alpha_grid=EPS_ALPHA_GRID,
                 delta_grid=DELTA_GRID, beta_levels=BETA_LEVELS,
                 probe_points: int = PROBE_POINTS,
                 seed: int = 0) -> ContinuityVerdict:
    """Per (eps, alpha), some (delta, beta) must make both degree
    implications hold at every probe point:

        membership_domain(delta) > beta      => membership_image(eps) > alpha
        non_membership_domain(delta) < 1-beta => non_membership_image(eps) < 1-alpha
    """
    x0 = as_vector(x0, smap.domain.dimension)
    fx0 = smap(x0)
    points = _shell_points(x0, smap.domain.dimension, probe_points, seed)
    dom_gaps = points - x0
    img_gaps = smap.apply_rows(points) - fx0

    dom_by_delta = {d: degrees_batch(smap.domain, dom_gaps, d)
                    for d in delta_grid}
    satisfied = {}
    first_violation = None
    for eps, alpha in eps_alpha_grid:
        mem_v, nonmem_v = degrees_batch(smap.codomain, img_gaps, eps)
        concl_mem = mem_v > alpha
        concl_non = nonmem_v < 1.0 - alpha
        found = None
        for delta in delta_grid:
            mem_u, nonmem_u = dom_by_delta[delta]
            for beta in beta_levels:
                hyp_mem = mem_u > beta
                hyp_non = nonmem_u < 1.0 - beta
                ok = (~hyp_mem | concl_mem) & (~hyp_non | concl_non)
                if bool(ok.all()):
                    found = (float(delta), float(beta))
                    break
                if first_violation is None:
                    i = int(np.argmax(~ok))
                    first_violation = {
                        "eps": float(eps), "alpha": float(alpha),
                        "delta": float(delta), "beta": float(beta),
                        "x": points[i].tolist(), "fx": smap(points[i]).tolist(),
                        "domain_membership": float(mem_u[i]),
                        "image_membership": float(mem_v[i])}
            if found:
                break
        if found is None:
            return ContinuityVerdict(
                EPS_THRESHOLD, FAIL,
                witness={**(first_violation or {}), "x0": x0.tolist(),
                         "fx0": fx0.tolist(),
                         "reason": "every (delta, beta) pair defeated"})
        satisfied[(eps, alpha)] = found
    return ContinuityVerdict(
        EPS_THRESHOLD, PASS,
        witness={"x0": x0.tolist(),
                 "delta_beta_for_eps_alpha": {
                     f"({e},{a})": list(v) for (e, a), v in satisfied.items()}})


# ---------------------------------------------------------------------------
# Relations between the notions
# ---------------------------------------------------------------------------

def verify_strong_implies_sequential(smap: SampledMap, points,
                                     config: ToleranceConfig = DEFAULT_CONFIG,
                                     seed: int = 0) -> Verdict:
    """Wherever the strong check passes, the sequential check must too.

    The converse is expected to fail for suitable maps: points with a
    sequential pass and a strong fail are reported as converse
    falsifications, not as errors.
    """
    rows = []
    witness = None
    converse = []
    for x0 in points:
        strong = check_strong_ifc_at(smap, x0, seed=seed)
        seq = check_sequential_ifc_at(smap, x0, config=config, seed=seed)
        rows.append({"x0": as_vector(x0, smap.domain.dimension).tolist(),
                     "strong": strong.status, "sequential": seq.status})
        if strong.passed and not seq.passed:
            witness = rows[-1]
        if seq.passed and not strong.passed:
            converse.append(rows[-1])
    status = FAIL if witness else PASS
    notes = ()
    if converse:
        notes = (f"converse falsified at {len(converse)} point(s): "
                 "sequential holds where strong fails",)
    return Verdict("strong_implies_sequential", status, witness=witness,
                   details=tuple(rows), notes=notes)


def verify_ifc_sequential_agreement(smap: SampledMap, points,
                                    config: ToleranceConfig = DEFAULT_CONFIG,
                                    seed: int = 0) -> Verdict:
    """The eps-threshold and sequential verdicts must agree pointwise.

    Disagreement within the grids' resolving power is reported as
    inconclusive (a grid artifact carrying both witnesses), never as a
    silent pass.
    """
    rows = []
    artifact = None
    for x0 in points:
        ifc = check_ifc_at(smap, x0, seed=seed)
        seq = check_sequential_ifc_at(smap, x0, config=config, seed=seed)
        agree = ifc.passed == seq.passed
        rows.append({"x0": as_vector(x0, smap.domain.dimension).tolist(),
                     "ifc": ifc.status, "sequential": seq.status,
                     "agree": agree})
        if not agree and artifact is None:
            artifact = {"point": rows[-1], "ifc_witness": ifc.witness,
                        "sequential_witness": seq.witness}
    if artifact:
        return Verdict("ifc_sequential_agreement", INCONCLUSIVE,
                       witness=artifact, details=tuple(rows),
                       notes=("disagreement at grid resolution; both "
                              "witnesses attached",))
    return Verdict("ifc_sequential_agreement", PASS, details=tuple(rows))


def compact_image_check(smap: SampledMap, domain_set: SampledSet,
                        config: ToleranceConfig = DEFAULT_CONFIG,
                        seed: int = 0) -> Verdict:
    """A continuous image of a compact sample stays compact.

    Gates on domain compactness and on the eps-threshold check at a few
    sample points, then runs the compactness verdict on the image sample;
    the declared closedness flag propagates through the map.
    """
    domain_verdict = compactness_verdict(smap.domain, domain_set, config)
    if not domain_verdict.passed:
        raise PreconditionFailed(
            f"domain sample not certified compact: {domain_verdict.status}")
    stride = max(1, domain_set.size // 5)
    for x0 in domain_set.points[::stride][:5]:
        ifc = check_ifc_at(smap, x0, seed=seed)
        if not ifc.passed:
            raise PreconditionFailed(
                f"map not continuous at sampled domain point {x0.tolist()}")
    image = SampledSet(smap.apply_rows(domain_set.points),
                       closed_flag=domain_set.closed_flag,
                       label=f"{smap.name}({domain_set.label or 'sample'})")
    image_verdict = compactness_verdict(smap.codomain, image, config)
    return Verdict("compact_image", image_verdict.status,
                   witness=image_verdict.witness,
                   details=(domain_verdict.to_dict(), image_verdict.to_dict()))
