"""Convergence, Cauchy, boundedness and limit diagnostics for finite
vector-sequence prefixes.

Asymptotic statements are replaced by tail-window scans: a grid pair
(t, r) counts as satisfied when the degrees clear their thresholds from
some index n0 onward and the clean tail covers at least ``tail_window``
further terms.  A pair whose entire tail window violates the thresholds
without improving is divergence evidence; everything else is
inconclusive, because a finite prefix cannot certify asymptotics.
"""

import csv
import io
import re
from dataclasses import dataclass

import numpy as np

from .config import ToleranceConfig, DEFAULT_CONFIG, PIVOT_FLOOR
from .errors import (DegenerateBasis, PreconditionFailed, SchemaError,
                     TailNotSettled)
from .spaces import IFNSpace, as_vector, degrees_batch
from .topology import bounded_witness
from .verdicts import (Verdict, ConvergenceVerdict, PASS, FAIL, INCONCLUSIVE,
                       CONVERGES, DIVERGES, NOTE_CRISP_MATCHED_THRESHOLDS,
                       NOTE_PREFIX_ONLY)


@dataclass(frozen=True, eq=False)
class VectorSequence:
    """A finite prefix x_1..x_L of a vector sequence, rows of ``terms``."""

    terms: np.ndarray
    label: str = ""

    def __post_init__(self):
        arr = np.asarray(self.terms, dtype=float)
        if arr.ndim == 1:
            arr = arr[:, None]
        if arr.ndim != 2 or arr.shape[0] < 2:
            raise ValueError("a sequence needs at least two terms")
        if not np.all(np.isfinite(arr)):
            raise ValueError("sequence terms must be finite")
        object.__setattr__(self, "terms", arr)

    @property
    def length(self) -> int:
        return self.terms.shape[0]

    @property
    def dimension(self) -> int:
        return self.terms.shape[1]

    def subsequence(self, indices) -> "VectorSequence":
        """Extract terms at the given 1-based, strictly increasing indices."""
        idx = list(indices)
        if any(b <= a for a, b in zip(idx, idx[1:])):
            raise ValueError("indices must be strictly increasing")
        if not idx or idx[0] < 1 or idx[-1] > self.length:
            raise ValueError("indices must lie within 1..length")
        return VectorSequence(self.terms[np.asarray(idx) - 1],
                              label=f"{self.label}[sub]")


# ---------------------------------------------------------------------------
# Sequence CSV
# ---------------------------------------------------------------------------

def read_sequence_csv(path) -> VectorSequence:
    """Parse the one-row-per-term CSV with header x1,...,xd."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SchemaError(f"cannot read sequence CSV {path}: {exc}") from exc
    return parse_sequence_csv(text)


def parse_sequence_csv(text: str) -> VectorSequence:
    label = ""
    data_lines = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            m = re.match(r"#\s*label\s*:\s*(.*)", stripped)
            if m:
                label = m.group(1).strip()
            continue
        data_lines.append(line)
    if not data_lines:
        raise SchemaError("sequence CSV has no data rows")
    rows = list(csv.reader(io.StringIO("\n".join(data_lines))))
    header = [h.strip() for h in rows[0]]
    if header != [f"x{i}" for i in range(1, len(header) + 1)] or not header:
        raise SchemaError(f"sequence CSV header must be x1,...,xd, got {header}")
    d = len(header)
    terms = []
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != d:
            raise SchemaError(f"row {lineno}: expected {d} columns, got {len(row)}")
        try:
            terms.append([float(v) for v in row])
        except ValueError as exc:
            raise SchemaError(f"row {lineno}: non-numeric entry: {exc}") from exc
    if len(terms) < 2:
        raise SchemaError("sequence CSV needs at least two data rows")
    try:
        return VectorSequence(np.asarray(terms), label=label)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def write_sequence_csv(seq: VectorSequence) -> str:
    lines = []
    if seq.label:
        lines.append(f"# label: {seq.label}")
    lines.append(",".join(f"x{i}" for i in range(1, seq.dimension + 1)))
    for row in seq.terms:
        lines.append(",".join(repr(float(v)) for v in row))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Tail-window scanning
# ---------------------------------------------------------------------------

def _scan_tail(ok: np.ndarray, score: np.ndarray, tail_window: int) -> dict:
    """Classify one threshold pair over a prefix.

    ``ok`` flags per-term threshold satisfaction; ``score`` is any
    monotone proxy for closeness (higher is better) used to tell an
    improving tail from one bounded away from its target.
    """
    L = int(len(ok))
    if L < tail_window + 1:
        return {"outcome": "inconclusive", "n0": None,
                "reason": "prefix shorter than tail window"}
    bad = np.nonzero(~ok)[0]
    if bad.size == 0:
        return {"outcome": "satisfied", "n0": 1}
    n0 = int(bad[-1]) + 2  # 1-based index after the last violation
    if n0 <= L - tail_window:
        return {"outcome": "satisfied", "n0": n0}
    window = ok[L - tail_window:]
    if window.any():
        return {"outcome": "inconclusive", "n0": None,
                "reason": "tail window mixes hits and misses"}
    if L < 2 * tail_window:
        return {"outcome": "inconclusive", "n0": None,
                "reason": "prefix too short to judge the tail trend"}
    last = float(np.max(score[L - tail_window:]))
    prev = float(np.max(score[L - 2 * tail_window: L - tail_window]))
    if last > prev:
        return {"outcome": "inconclusive", "n0": None,
                "reason": "tail violates thresholds but is still improving"}
    return {"outcome": "diverging", "n0": None,
            "index": L, "best_tail_score": last,
            "reason": "tail bounded away from the target on the whole window"}


def _fuzzy_records(space, diffs, config, extra=None):
    """Threshold-pair records for difference vectors against the degree grid."""
    records = []
    if space.is_standard:
        scaled = space.ifn.scaled_norm(diffs, axis=-1)
    for t in config.t_grid:
        if space.is_standard:
            mem, nonmem = space.ifn.degrees_from_scaled_norm(scaled, t)
        else:
            mem, nonmem = degrees_batch(space, diffs, t)
        for r in config.r_levels:
            ok = (mem > 1.0 - r) & (nonmem < r)
            rec = {"t": float(t), "r": float(r)}
            if extra:
                rec.update(extra)
            rec.update(_scan_tail(ok, mem, config.tail_window))
            if rec["outcome"] != "satisfied":
                worst = int(np.argmin(mem[-config.tail_window:]))
                j = len(mem) - config.tail_window + worst
                rec["witness"] = {"index": int(j + 1),
                                  "membership": float(mem[j]),
                                  "non_membership": float(nonmem[j])}
            records.append(rec)
    return records


def _aggregate(records, limit=None, notes=()) -> ConvergenceVerdict:
    outcomes = {rec["outcome"] for rec in records}
    if outcomes == {"satisfied"}:
        status = CONVERGES
    elif "diverging" in outcomes:
        status = DIVERGES
    else:
        status = INCONCLUSIVE
    return ConvergenceVerdict(
        status=status, witnesses=tuple(records),
        limit=tuple(float(v) for v in limit) if (
            status == CONVERGES and limit is not None) else None,
        notes=tuple(notes) + (NOTE_PREFIX_ONLY,))


def check_convergence_to(space: IFNSpace, seq: VectorSequence, x,
                         config: ToleranceConfig = DEFAULT_CONFIG) -> ConvergenceVerdict:
    """Tail-window convergence of the prefix toward x on the degree grid.

    Converges when every (t, r) pair admits a least n0 with clean tail;
    diverges when some pair's whole tail window violates its thresholds
    without improving; inconclusive otherwise.
    """
    x = as_vector(x, space.dimension)
    if seq.dimension != space.dimension:
        raise ValueError("sequence and space dimensions differ")
    records = _fuzzy_records(space, seq.terms - x, config)
    return _aggregate(records, limit=x)


def check_cauchy(space: IFNSpace, seq: VectorSequence, p_max: int = 3,
                 config: ToleranceConfig = DEFAULT_CONFIG) -> ConvergenceVerdict:
    """Cauchy diagnosis: gap sequences x_{n+p} - x_n for p = 1..p_max."""
    if p_max < 1:
        raise ValueError("p_max must be at least 1")
    if seq.dimension != space.dimension:
        raise ValueError("sequence and space dimensions differ")
    records = []
    for p in range(1, p_max + 1):
        if seq.length - p < 2:
            records.append({"p": p, "outcome": "inconclusive", "n0": None,
                            "reason": "prefix shorter than the gap"})
            continue
        gaps = seq.terms[p:] - seq.terms[:-p]
        records.extend(_fuzzy_records(space, gaps, config, extra={"p": p}))
    return _aggregate(records)


def check_bounded(space: IFNSpace, seq: VectorSequence,
                  config: ToleranceConfig = DEFAULT_CONFIG) -> Verdict:
    """Boundedness witness search over the prefix's range."""
    if seq.dimension != space.dimension:
        raise ValueError("sequence and space dimensions differ")
    witness = bounded_witness(space, seq.terms, config)
    if witness is None:
        return Verdict("sequence_bounded", FAIL,
                       witness={"reason": "no witness found at search cap"},
                       notes=(NOTE_PREFIX_ONLY,))
    return Verdict("sequence_bounded", PASS, witness=witness,
                   notes=(NOTE_PREFIX_ONLY,))


def verify_limit_uniqueness(space: IFNSpace, seq: VectorSequence, x, y,
                            config: ToleranceConfig = DEFAULT_CONFIG) -> Verdict:
    """Two certified targets must coincide up to the grid's resolution.

    When both targets pass the convergence scan, the degrees of their
    difference must sit at the top of the scale on every grid t; a pair
    of materially distinct certified targets is flagged as a
    contradiction.  Indistinguishably close targets on a short prefix are
    reported inconclusive, with both witnesses.
    """
    x = as_vector(x, space.dimension)
    y = as_vector(y, space.dimension)
    vx = check_convergence_to(space, seq, x, config)
    vy = check_convergence_to(space, seq, y, config)
    detail = ({"target": x.tolist(), "status": vx.status},
              {"target": y.tolist(), "status": vy.status})
    if not (vx.converged and vy.converged):
        return Verdict("limit_uniqueness", PASS, details=detail,
                       notes=("at most one target certified; uniqueness "
                              "not challenged",))
    gap_degrees = {str(t): list(map(float, space.evaluate(x - y, t)))
                   for t in config.t_grid}
    near = all(space.evaluate(x - y, t).membership >= 1 - config.eps_limit
               for t in config.t_grid)
    if np.array_equal(x, y):
        return Verdict("limit_uniqueness", PASS, details=detail,
                       witness={"gap_degrees": gap_degrees})
    if near:
        return Verdict("limit_uniqueness", INCONCLUSIVE, details=detail,
                       witness={"gap_degrees": gap_degrees,
                                "x": x.tolist(), "y": y.tolist()},
                       notes=("distinct targets indistinguishable at the "
                              "configured tolerance (finite-prefix "
                              "ambiguity)",))
    return Verdict("limit_uniqueness", FAIL, details=detail,
                   witness={"gap_degrees": gap_degrees,
                            "x": x.tolist(), "y": y.tolist(),
                            "reason": "two materially distinct targets "
                                      "certified"})


def verify_limit_arithmetic(space: IFNSpace, seq_a: VectorSequence, lim_a,
                            seq_b: VectorSequence, lim_b, c: float,
                            config: ToleranceConfig = DEFAULT_CONFIG) -> Verdict:
    """Termwise sums and scalar multiples inherit their limits."""
    if c == 0:
        raise ValueError("the scalar must be nonzero")
    lim_a = as_vector(lim_a, space.dimension)
    lim_b = as_vector(lim_b, space.dimension)
    va = check_convergence_to(space, seq_a, lim_a, config)
    vb = check_convergence_to(space, seq_b, lim_b, config)
    if not va.converged:
        raise PreconditionFailed(
            f"first sequence not certified convergent: {va.status}")
    if not vb.converged:
        raise PreconditionFailed(
            f"second sequence not certified convergent: {vb.status}")
    n = min(seq_a.length, seq_b.length)
    seq_sum = VectorSequence(seq_a.terms[:n] + seq_b.terms[:n],
                             label="termwise sum")
    seq_scaled = VectorSequence(c * seq_a.terms, label="scaled")
    vsum = check_convergence_to(space, seq_sum, lim_a + lim_b, config)
    vscaled = check_convergence_to(space, seq_scaled, c * lim_a, config)
    ok = vsum.converged and vscaled.converged
    return Verdict(
        "limit_arithmetic", PASS if ok else FAIL,
        witness=None if ok else {"sum_status": vsum.status,
                                 "scaled_status": vscaled.status},
        details=({"check": "sum", "status": vsum.status,
                  "limit": (lim_a + lim_b).tolist()},
                 {"check": "scaled", "status": vscaled.status, "c": float(c),
                  "limit": (c * lim_a).tolist()}))


def check_subsequence_inheritance(space: IFNSpace, seq: VectorSequence,
                                  indices, x,
                                  config: ToleranceConfig = DEFAULT_CONFIG) -> Verdict:
    """A certified limit must be inherited by every extracted subsequence.

    Nothing is asserted when the full prefix is not certified (the
    converse direction is false: a subsequence may converge while the
    full sequence does not).
    """
    x = as_vector(x, space.dimension)
    full = check_convergence_to(space, seq, x, config)
    sub = seq.subsequence(indices)
    sub_verdict = check_convergence_to(space, sub, x, config)
    detail = ({"check": "full", "status": full.status},
              {"check": "subsequence", "status": sub_verdict.status,
               "length": sub.length})
    if not full.converged:
        return Verdict("subsequence_inheritance", PASS, details=detail,
                       notes=("full prefix not certified; inheritance not "
                              "asserted (converse direction not implied)",))
    if sub_verdict.converged:
        return Verdict("subsequence_inheritance", PASS, details=detail)
    if sub_verdict.status == INCONCLUSIVE:
        return Verdict("subsequence_inheritance", INCONCLUSIVE, details=detail,
                       witness={"reason": "subsequence too short to certify"})
    return Verdict("subsequence_inheritance", FAIL, details=detail,
                   witness={"subsequence_status": sub_verdict.status,
                            "records": list(sub_verdict.witnesses)})


# ---------------------------------------------------------------------------
# Crisp/fuzzy verdict agreement for the standard construction
# ---------------------------------------------------------------------------

def _crisp_records(space, diffs, config, extra=None):
    """Crisp scans at the thresholds induced by the degree grid.

    For the standard construction, membership(x, t) > 1 - r is exactly
    ||x|| < r*t/((1-r)*k), so crisp and fuzzy scans decide the same
    statement pair by pair.
    """
    k = space.ifn.k
    dists = space.ifn.crisp(diffs, axis=-1)
    records = []
    for t in config.t_grid:
        for r in config.r_levels:
            delta = r * t / ((1.0 - r) * k)
            ok = dists < delta
            rec = {"t": float(t), "r": float(r), "delta": float(delta)}
            if extra:
                rec.update(extra)
            rec.update(_scan_tail(ok, -dists, config.tail_window))
            records.append(rec)
    return records


def crisp_fuzzy_equivalence(space: IFNSpace, seq: VectorSequence, x,
                            p_max: int = 3,
                            config: ToleranceConfig = DEFAULT_CONFIG) -> Verdict:
    """Crisp and fuzzy convergence/Cauchy verdicts must coincide.

    Only meaningful for the standard construction, whose degrees are a
    monotone reparametrization of the crisp distance.
    """
    if not space.is_standard:
        raise PreconditionFailed(
            "crisp/fuzzy equivalence applies to the standard construction")
    x = as_vector(x, space.dimension)

    fuzzy_conv = check_convergence_to(space, seq, x, config)
    crisp_conv = _aggregate(_crisp_records(space, seq.terms - x, config))

    fuzzy_cauchy = check_cauchy(space, seq, p_max, config)
    crisp_records = []
    for p in range(1, p_max + 1):
        if seq.length - p < 2:
            crisp_records.append({"p": p, "outcome": "inconclusive",
                                  "n0": None,
                                  "reason": "prefix shorter than the gap"})
            continue
        gaps = seq.terms[p:] - seq.terms[:-p]
        crisp_records.extend(_crisp_records(space, gaps, config, extra={"p": p}))
    crisp_cauchy = _aggregate(crisp_records)

    conv_agree = fuzzy_conv.status == crisp_conv.status
    cauchy_agree = fuzzy_cauchy.status == crisp_cauchy.status
    detail = ({"check": "convergence", "fuzzy": fuzzy_conv.status,
               "crisp": crisp_conv.status, "agree": conv_agree},
              {"check": "cauchy", "fuzzy": fuzzy_cauchy.status,
               "crisp": crisp_cauchy.status, "agree": cauchy_agree})
    ok = conv_agree and cauchy_agree
    return Verdict("crisp_fuzzy_equivalence", PASS if ok else FAIL,
                   witness=None if ok else {"detail": list(detail)},
                   details=detail,
                   notes=(NOTE_CRISP_MATCHED_THRESHOLDS,))


# ---------------------------------------------------------------------------
# Finite-dimensional limit extraction
# ---------------------------------------------------------------------------

def _require_clean_pivots(matrix: np.ndarray):
    """Gaussian elimination with partial pivoting, kept only for its pivots."""
    m = matrix.astype(float).copy()
    d = m.shape[0]
    for col in range(d):
        pivot_row = col + int(np.argmax(np.abs(m[col:, col])))
        pivot = abs(m[pivot_row, col])
        if pivot < PIVOT_FLOOR:
            raise DegenerateBasis(
                f"pivot {pivot:g} below {PIVOT_FLOOR:g} in column {col}")
        if pivot_row != col:
            m[[col, pivot_row]] = m[[pivot_row, col]]
        m[col + 1:] -= np.outer(m[col + 1:, col] / m[col, col], m[col])
    return


def findim_limit_extraction(space: IFNSpace, seq: VectorSequence, basis,
                            config: ToleranceConfig = DEFAULT_CONFIG,
                            p_max: int = 3):
    """Recover the limit of a Cauchy prefix through a basis expansion.

    Expands every term in the basis, takes per-coordinate tail-window
    means once the tails have settled, reconstructs the limit candidate
    and certifies it with the convergence scanner.  This is the
    executable skeleton of the finite-dimensional completeness argument:
    coordinatewise scalar convergence rebuilds a limit inside the space.
    """
    d = space.dimension
    rows = [as_vector(b, d) for b in basis]
    if len(rows) != d:
        raise DegenerateBasis(
            f"need exactly {d} basis vectors to span, got {len(rows)}")
    cauchy = check_cauchy(space, seq, p_max, config)
    if not cauchy.converged:
        raise PreconditionFailed(
            f"sequence not certified Cauchy: {cauchy.status}")
    columns = np.column_stack(rows)
    _require_clean_pivots(columns)
    coeffs = np.linalg.solve(columns, seq.terms.T).T

    window = coeffs[-config.tail_window:]
    spread = window.max(axis=0) - window.min(axis=0)
    if np.any(spread >= config.eps_limit):
        worst = int(np.argmax(spread))
        raise TailNotSettled(
            f"coordinate {worst} tail spread {spread[worst]:g} exceeds "
            f"eps_limit {config.eps_limit:g} (prefix too short)")
    beta = window.mean(axis=0)
    limit = columns @ beta
    cert = check_convergence_to(space, seq, limit, config)
    verdict = Verdict(
        "findim_limit_extraction",
        PASS if cert.converged else INCONCLUSIVE,
        witness={"coefficients": beta.tolist(), "limit": limit.tolist(),
                 "tail_spread": spread.tolist(),
                 "certification": cert.status},
        details=(cert.to_dict(),))
    return limit, verdict


def completeness_via_subsequence(space: IFNSpace, seq: VectorSequence,
                                 indices, x,
                                 config: ToleranceConfig = DEFAULT_CONFIG,
                                 p_max: int = 3) -> Verdict:
    """A Cauchy prefix with a certified convergent subsequence must itself
    converge to the subsequence's limit."""
    x = as_vector(x, space.dimension)
    cauchy = check_cauchy(space, seq, p_max, config)
    if not cauchy.converged:
        raise PreconditionFailed(
            f"sequence not certified Cauchy: {cauchy.status}")
    sub = seq.subsequence(indices)
    sub_verdict = check_convergence_to(space, sub, x, config)
    if not sub_verdict.converged:
        raise PreconditionFailed(
            f"subsequence not certified convergent: {sub_verdict.status}")
    full = check_convergence_to(space, seq, x, config)
    return Verdict(
        "completeness_via_subsequence",
        PASS if full.converged else FAIL,
        witness={"full_status": full.status, "limit": x.tolist()},
        details=(full.to_dict(),))
