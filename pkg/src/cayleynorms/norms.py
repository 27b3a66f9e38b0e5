"""The four matrix norms and the identities/inequalities relating them.

Spectral norm: power iteration on the Gram operator.  Cut and
infinity-to-one norms: exact subset enumeration (capped at 26 rows), with
the inner optimum in closed form.  Grothendieck norm: bracketed between a
low-rank block-coordinate ascent (a feasible lower bound) and the cheapest
of three upper bounds (sqrt(mn)||A||, K_G times the infinity-to-one norm,
8 times the cut norm).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .cayley import cayley_matrix, center_regular, find_transitive_automorphisms
from .errors import CapacityError
from .groups import GroupFunction, function_norm

# Upper bound on the real Grothendieck constant (the known bound is
# pi / (2 log(1 + sqrt 2)) = 1.782...; we consume a number strictly above it).
K_G = 1.783

EXACT_ENUM_LIMIT = 26
_CHUNK_BITS = 16


# ---------------------------------------------------------------------------
# Spectral norm and symmetric spectra


def spectral_norm(a: np.ndarray, *, tol: float = 1e-12, max_iter: int = 100_000,
                  seed: int = 0) -> float:
    """Largest singular value via power iteration on A*A.

    Deterministic seeded start.  The estimate sigma_k = |A v_k| increases
    monotonically to sigma_1 at a geometric rate, so the remaining error is
    estimated from consecutive increments (Aitken style) and iteration stops
    once that estimate drops below ``tol`` relative, or once the increments
    sit at the floating-point noise floor.  The returned value is |Av| for a
    unit v, hence never an overestimate.
    """
    a = np.asarray(a)
    if a.ndim != 2:
        raise ValueError("spectral_norm needs a matrix")
    if a.size == 0 or not np.any(a):
        return 0.0
    n = a.shape[1]
    rng = np.random.Generator(np.random.Philox(seed))

    def random_unit() -> np.ndarray:
        v = rng.standard_normal(n)
        if np.iscomplexobj(a):
            v = v + 1j * rng.standard_normal(n)
        return v / np.linalg.norm(v)

    v = random_unit()
    sigma_prev = 0.0
    change_prev = math.inf
    at_noise_floor = 0
    for _ in range(max_iter):
        w = a @ v
        sigma = float(np.linalg.norm(w))
        if sigma == 0.0:
            v = random_unit()
            continue
        u = a.conj().T @ w
        v = u / np.linalg.norm(u)
        change = abs(sigma - sigma_prev)
        if change <= 4e-16 * sigma:
            at_noise_floor += 1
            if at_noise_floor >= 3:
                break
        else:
            at_noise_floor = 0
        if change <= tol * sigma:
            # geometric decay: remaining error ~ change * r / (1 - r)
            ratio = change / change_prev if change_prev > 0 else 0.0
            if ratio < 1.0 and change * ratio / (1.0 - ratio) <= tol * sigma:
                break
        sigma_prev = sigma
        change_prev = change
    return float(np.linalg.norm(a @ v))


def symmetric_spectrum(a: np.ndarray, *, tol: float = 1e-12,
                       max_sweeps: int = 60) -> np.ndarray:
    """All eigenvalues of a symmetric matrix via cyclic Jacobi rotations.

    Sweeps until the off-diagonal Frobenius mass drops below tol * ||A||_F.
    Eigenvalues are returned sorted by absolute value, descending, so the
    second entry is the usual lambda_2 of a regular graph.
    """
    a = np.asarray(a, dtype=np.float64)
    n = a.shape[0]
    if a.ndim != 2 or a.shape != (n, n):
        raise ValueError("symmetric_spectrum needs a square matrix")
    scale = float(np.abs(a).max()) if a.size else 0.0
    if scale and float(np.abs(a - a.T).max()) > 1e-12 * max(scale, 1.0):
        raise ValueError("matrix is not symmetric within 1e-12")
    w = ((a + a.T) / 2.0).copy()
    fro = float(np.linalg.norm(w))
    threshold = tol * fro
    # entries below this cannot push the off-diagonal mass above threshold
    skip_below = threshold / max(n, 1)
    for _ in range(max_sweeps):
        off = float(np.sqrt(max(np.sum(w * w) - np.sum(np.diag(w) ** 2), 0.0)))
        if off <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = w[p, q]
                if abs(apq) <= skip_below:
                    continue
                app, aqq = w[p, p], w[q, q]
                tau = (aqq - app) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                wp = w[:, p].copy()
                wq = w[:, q].copy()
                w[:, p] = c * wp - s * wq
                w[:, q] = s * wp + c * wq
                wp = w[p, :].copy()
                wq = w[q, :].copy()
                w[p, :] = c * wp - s * wq
                w[q, :] = s * wp + c * wq
                w[p, p] = app - t * apq
                w[q, q] = aqq + t * apq
                w[p, q] = 0.0
                w[q, p] = 0.0
    eigs = np.diag(w).copy()
    order = np.argsort(-np.abs(eigs), kind="stable")
    return eigs[order]


def second_eigenvalue(a: np.ndarray) -> float:
    """|lambda_2|: second largest eigenvalue in absolute value of a symmetric matrix."""
    spectrum = symmetric_spectrum(a)
    return float(abs(spectrum[1])) if spectrum.size > 1 else 0.0


# ---------------------------------------------------------------------------
# Exact cut and infinity-to-one norms by subset enumeration


@dataclass(frozen=True)
class CutNormResult:
    """Exact cut norm together with a maximizing (row set, column set)."""

    value: float
    row_set: tuple[int, ...]
    col_set: tuple[int, ...]


def _subset_key(mask: int, m: int) -> tuple[int, ...]:
    return tuple(i for i in range(m) if (mask >> i) & 1)


def _lex_min_mask(masks: np.ndarray, m: int) -> int:
    """The mask whose index set is lexicographically smallest (as a sorted tuple)."""
    cur = masks
    chosen = 0
    for i in range(m):
        if np.any(cur == chosen):
            return chosen
        bit = 1 << i
        with_bit = cur[(cur & bit) != 0]
        if with_bit.size:
            cur = with_bit
            chosen |= bit
    return chosen


def _column_witness(c: np.ndarray) -> tuple[float, tuple[int, ...]]:
    """Best column set for fixed row-set column sums c, lex-min on ties.

    The optimum is either the positive or the negative side; a zero column
    joins the set only when a later column is a genuine member, which is
    what makes the reported set lexicographically minimal.
    """
    n = c.shape[0]

    def build(member: np.ndarray) -> tuple[int, ...]:
        idx = np.nonzero(member)[0]
        if idx.size == 0:
            return ()
        last = int(idx[-1])
        return tuple(
            t for t in range(n) if member[t] or (c[t] == 0.0 and t < last)
        )

    pos_val = float(np.maximum(c, 0.0).sum())
    neg_val = float(-np.minimum(c, 0.0).sum())
    if pos_val > neg_val:
        return pos_val, build(c > 0.0)
    if neg_val > pos_val:
        return neg_val, build(c < 0.0)
    return pos_val, min(build(c > 0.0), build(c < 0.0))


def cut_norm_exact(a: np.ndarray, *, max_rows: int = EXACT_ENUM_LIMIT) -> CutNormResult:
    """Exact cut norm: max over row/column subsets of |sum of the submatrix|.

    Enumerates all 2^m row subsets (chunked; column sums via one matmul per
    chunk); the inner column optimum is closed-form.  Ties are broken by the
    lexicographically smallest row set, then column set.
    """
    a = np.asarray(a, dtype=np.float64)
    if a.ndim != 2:
        raise ValueError("cut_norm_exact needs a matrix")
    m, n = a.shape
    if m > max_rows:
        raise CapacityError(
            f"cut norm enumeration is capped at {max_rows} rows (got {m}); "
            "use grothendieck_bounds for larger matrices"
        )
    total = 1 << m
    bit_cols = np.arange(m, dtype=np.int64)
    chunk = min(total, 1 << _CHUNK_BITS)
    best_val = -1.0
    best_key: Optional[tuple[int, ...]] = None
    for offset in range(0, total, chunk):
        cnt = min(chunk, total - offset)
        masks = np.arange(offset, offset + cnt, dtype=np.int64)
        x = ((masks[:, None] >> bit_cols[None, :]) & 1).astype(np.float64)
        colsums = x @ a
        vals = np.maximum(colsums, 0.0).sum(axis=1)
        np.maximum(vals, -np.minimum(colsums, 0.0).sum(axis=1), out=vals)
        cmax = float(vals.max())
        if cmax < best_val or (cmax == best_val and best_key == ()):
            continue
        cand = masks[vals == cmax]
        key = _subset_key(_lex_min_mask(cand, m), m)
        if cmax > best_val or best_key is None or key < best_key:
            best_val = cmax
            best_key = key
    row_idx = np.array(best_key, dtype=np.int64)
    c = a[row_idx].sum(axis=0) if row_idx.size else np.zeros(n)
    _, col_key = _column_witness(c)
    return CutNormResult(value=best_val, row_set=best_key, col_set=col_key)


def infty_one_exact(a: np.ndarray, *, max_rows: int = EXACT_ENUM_LIMIT) -> float:
    """Exact infinity-to-one norm: max of |x^T A y| over x, y with +-1 entries.

    Enumerates sign vectors x with the first entry pinned to +1 (the x <-> -x
    symmetry); the optimal y is the sign pattern of A^T x, so the inner value
    is the l1 norm of A^T x.
    """
    a = np.asarray(a, dtype=np.float64)
    if a.ndim != 2:
        raise ValueError("infty_one_exact needs a matrix")
    m, _ = a.shape
    if m > max_rows:
        raise CapacityError(
            f"infinity-to-one enumeration is capped at {max_rows} rows (got {m}); "
            "use grothendieck_bounds for larger matrices"
        )
    total = 1 << (m - 1)
    bit_cols = np.arange(m, dtype=np.int64)
    chunk = min(total, 1 << _CHUNK_BITS)
    best = 0.0
    for offset in range(0, total, chunk):
        cnt = min(chunk, total - offset)
        # bit i of (mask << 1) flips the sign of row i; row 0 stays +1
        masks = np.arange(offset, offset + cnt, dtype=np.int64) << 1
        x = 1.0 - 2.0 * ((masks[:, None] >> bit_cols[None, :]) & 1)
        vals = np.abs(x @ a).sum(axis=1)
        best = max(best, float(vals.max()))
    return best


# ---------------------------------------------------------------------------
# Grothendieck norm: low-rank ascent lower bound, cheap upper bounds


@dataclass(frozen=True)
class BMConfig:
    """Configuration for the low-rank block-coordinate ascent.

    ``rank=None`` selects min(m+n, ceil(sqrt(2(m+n))) + 2); rank >= m+n
    realizes the full Grothendieck norm, smaller ranks target the
    intermediate rank-k norms.
    """

    rank: Optional[int] = None
    restarts: int = 8
    max_sweeps: int = 500
    tol: float = 1e-10
    seed: int = 0

    def __post_init__(self):
        if self.rank is not None and self.rank < 1:
            raise ValueError(f"rank must be >= 1, got {self.rank}")
        if self.restarts < 1:
            raise ValueError(f"restarts must be >= 1, got {self.restarts}")


@dataclass(frozen=True)
class VectorAssignment:
    """Unit-ball vectors x_1..x_m, y_1..y_n and their bilinear objective."""

    left: np.ndarray
    right: np.ndarray
    objective: float

    def __post_init__(self):
        for name, arr in (("left", self.left), ("right", self.right)):
            norms = np.linalg.norm(np.atleast_2d(arr), axis=1)
            if norms.size and float(norms.max()) > 1.0 + 1e-12:
                raise ValueError(
                    f"{name} vector {int(norms.argmax())} has norm "
                    f"{float(norms.max())} > 1"
                )


def default_bm_rank(m: int, n: int) -> int:
    return min(m + n, math.ceil(math.sqrt(2.0 * (m + n))) + 2)


def _unit_rows(w: np.ndarray) -> np.ndarray:
    norms = np.linalg.norm(w, axis=1, keepdims=True)
    return w / np.maximum(norms, 1e-300)


def _renormalize(w: np.ndarray, previous: np.ndarray) -> np.ndarray:
    """Normalize rows of w; rows that sum to zero keep their previous vector."""
    norms = np.linalg.norm(w, axis=1, keepdims=True)
    return np.where(norms > 0.0, w / np.maximum(norms, 1e-300), previous)


def _bm_restart(a: np.ndarray, k: int, max_sweeps: int, tol: float, rng):
    """One ascent run; returns (objective, x, y, per-sweep objective trace)."""
    m, n = a.shape
    x = _unit_rows(rng.standard_normal((m, k)))
    y = _unit_rows(rng.standard_normal((n, k)))
    trace: list[float] = []
    prev = -math.inf
    obj = 0.0
    for _ in range(max_sweeps):
        x = _renormalize(a @ y, x)
        y = _renormalize(a.T @ x, y)
        obj = float(np.sum((a @ y) * x))
        trace.append(obj)
        if obj - prev <= tol * max(abs(obj), 1e-300):
            break
        prev = obj
    return obj, x, y, trace


def grothendieck_bm(a: np.ndarray, cfg: Optional[BMConfig] = None) -> tuple[float, VectorAssignment]:
    """Lower-bound the Grothendieck norm by rank-k block-coordinate ascent.

    Every iterate is feasible, so the best objective over restarts is a
    valid lower bound on ||A||_G; as an estimate of the optimum it is
    heuristic.  Restart r uses the seeded generator jumped r times, making
    the result deterministic and independent of evaluation order.
    """
    a = np.asarray(a, dtype=np.float64)
    if a.ndim != 2:
        raise ValueError("grothendieck_bm needs a matrix")
    cfg = cfg or BMConfig()
    m, n = a.shape
    k = cfg.rank if cfg.rank is not None else default_bm_rank(m, n)
    if not np.any(a):
        x = np.zeros((m, k))
        y = np.zeros((n, k))
        x[:, 0] = 1.0
        y[:, 0] = 1.0
        return 0.0, VectorAssignment(left=x, right=y, objective=0.0)
    best_obj = -math.inf
    best_xy = None
    for r in range(cfg.restarts):
        rng = np.random.Generator(np.random.Philox(cfg.seed).jumped(r))
        obj, x, y, _ = _bm_restart(a, k, cfg.max_sweeps, cfg.tol, rng)
        if obj > best_obj:
            best_obj = obj
            best_xy = (x, y)
    x, y = best_xy
    return abs(best_obj), VectorAssignment(left=x, right=y, objective=best_obj)


def grothendieck_bounds(a: np.ndarray, cfg: Optional[BMConfig] = None, *,
                        exact_limit: int = EXACT_ENUM_LIMIT) -> tuple[float, float]:
    """A certified bracket [lower, upper] for the Grothendieck norm.

    lower = max(ascent value, exact infinity-to-one norm when feasible);
    upper = min(sqrt(mn) ||A||, K_G * infinity-to-one, 8 * cut norm), the
    last two only when the exact enumerations are feasible.
    """
    a = np.asarray(a, dtype=np.float64)
    m, n = a.shape
    lower, _ = grothendieck_bm(a, cfg)
    upper = math.sqrt(m * n) * spectral_norm(a)
    if m <= exact_limit:
        io1 = infty_one_exact(a, max_rows=exact_limit)
        lower = max(lower, io1)
        upper = min(upper, K_G * io1)
        cut = cut_norm_exact(a, max_rows=exact_limit)
        upper = min(upper, 8.0 * cut.value)
    return lower, upper


# ---------------------------------------------------------------------------
# Group-function norms and witnesses


def group_spectral(f: GroupFunction) -> float:
    """Spectral norm of a group function: ||A(f)|| / |G| (averaging scaling)."""
    cm = cayley_matrix(f.group, f)
    return spectral_norm(cm.matrix) / f.group.order


def translate_witness(f: GroupFunction, x: GroupFunction, y: GroupFunction) -> VectorAssignment:
    """Grothendieck witness from translates x_g(h) = x(gh), y_h(a) = y(ha).

    The vectors live in L2(G) under the averaging inner product (stored
    scaled by 1/sqrt(n) so euclidean norms coincide).  The averaging
    identity makes the vector objective equal the scalar objective
    mean f(gh^-1) x(g) y(h) term by term, so optimal scalar witnesses give
    a vector assignment achieving the spectral norm.
    """
    for other in (x, y):
        if not other.group.same_as(f.group):
            raise ValueError("witness functions must live on the same group as f")
    for name, w in (("x", x), ("y", y)):
        nw = function_norm(w, 2)
        if nw > 1.0 + 1e-9:
            raise ValueError(f"||{name}||_2 = {nw} exceeds the unit ball by more than 1e-9")
    g = f.group
    n = g.order
    scale = math.sqrt(n)
    tx = x.values[g.mul] / (scale * max(1.0, function_norm(x, 2)))
    ty = y.values[g.mul] / (scale * max(1.0, function_norm(y, 2)))
    fmat = f.values[g.ghinv]
    objective = float(np.sum(fmat * (tx @ ty.T)) / (n * n))
    return VectorAssignment(left=tx, right=ty, objective=objective)


# ---------------------------------------------------------------------------
# Reports and inequality checks


@dataclass(frozen=True)
class Check:
    """One verified inequality lhs <= rhs with its margin."""

    name: str
    lhs: float
    rhs: float
    tol: float

    @property
    def margin(self) -> float:
        return self.rhs - self.lhs

    @property
    def passed(self) -> bool:
        return self.margin >= -self.tol


def _check(name: str, lhs: float, rhs: float) -> Check:
    tol = 1e-9 * max(abs(lhs), abs(rhs), 1.0)
    return Check(name=name, lhs=float(lhs), rhs=float(rhs), tol=tol)


@dataclass
class NormReport:
    """All computed norms, bounds, witnesses and verification flags for one matrix."""

    rows: int
    cols: int
    spectral: float
    cut: Optional[CutNormResult]
    infty_one: Optional[float]
    groth_lower: float
    groth_upper: float
    bm_rank: int
    bm_restarts: int
    assignment: Optional[VectorAssignment] = None
    transitive: Optional[bool] = None
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    work: dict[str, int] = field(default_factory=dict)
    timings: dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        scale = max(abs(self.groth_lower), abs(self.groth_upper), 1.0)
        if self.groth_lower > self.groth_upper + 1e-9 * scale:
            raise ValueError(
                f"inconsistent bracket: lower {self.groth_lower} > upper {self.groth_upper}"
            )

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)


def verify_sandwich(a: np.ndarray, report: NormReport) -> list[Check]:
    """Check every applicable norm inequality, recording margins.

    Failures are reported in the returned checks, never raised.  The
    vertex-transitive cut/spectral sandwich is checked only when the report
    carries a positive transitivity flag.
    """
    a = np.asarray(a, dtype=np.float64)
    n = a.shape[0]
    checks: list[Check] = []
    cut = report.cut.value if report.cut is not None else None
    io1 = report.infty_one
    if cut is not None and io1 is not None:
        checks.append(_check("cut_le_infty_one", cut, io1))
        checks.append(_check("infty_one_le_4cut", io1, 4.0 * cut))
    checks.append(_check("bracket_ordered", report.groth_lower, report.groth_upper))
    if io1 is not None:
        checks.append(_check("infty_one_le_groth_upper", io1, report.groth_upper))
        checks.append(_check("groth_lower_le_kg_infty_one", report.groth_lower, K_G * io1))
    if cut is not None:
        checks.append(_check("cut_le_groth_upper", cut, report.groth_upper))
        checks.append(_check("groth_lower_le_8cut", report.groth_lower, 8.0 * cut))
    if report.transitive and cut is not None and a.shape[0] == a.shape[1]:
        checks.append(_check("transitive_cut_le_n_spectral", cut, n * report.spectral))
        checks.append(_check("transitive_n_spectral_le_8cut", n * report.spectral, 8.0 * cut))
    return checks


def analyze(a: np.ndarray, cfg: Optional[BMConfig] = None, *,
            exact_limit: int = EXACT_ENUM_LIMIT,
            transitivity_limit: int = 64) -> NormReport:
    """Compute every norm of a matrix and verify the sandwich inequalities.

    Capacity misses (cut and infinity-to-one above the exact limit,
    transitivity above the search limit) are recorded as notes rather than
    raised, so a report is always produced.
    """
    a = np.asarray(a, dtype=np.float64)
    if a.ndim != 2:
        raise ValueError("analyze needs a matrix")
    m, n = a.shape
    cfg = cfg or BMConfig()
    notes: list[str] = []
    timings: dict[str, float] = {}
    work: dict[str, int] = {}

    t0 = time.perf_counter()
    spectral = spectral_norm(a)
    timings["spectral"] = time.perf_counter() - t0

    cut = None
    io1 = None
    try:
        t0 = time.perf_counter()
        cut = cut_norm_exact(a, max_rows=exact_limit)
        timings["cut"] = time.perf_counter() - t0
        work["cut_subsets"] = 1 << m
        t0 = time.perf_counter()
        io1 = infty_one_exact(a, max_rows=exact_limit)
        timings["infty_one"] = time.perf_counter() - t0
        work["infty_one_signs"] = 1 << (m - 1)
    except CapacityError as exc:
        notes.append(str(exc))

    t0 = time.perf_counter()
    k = cfg.rank if cfg.rank is not None else default_bm_rank(m, n)
    bm_value, assignment = grothendieck_bm(a, cfg)
    timings["bm"] = time.perf_counter() - t0
    work["bm_rank"] = k
    work["bm_restarts"] = cfg.restarts

    lower = bm_value
    upper = math.sqrt(m * n) * spectral
    if io1 is not None:
        lower = max(lower, io1)
        upper = min(upper, K_G * io1)
    if cut is not None:
        upper = min(upper, 8.0 * cut.value)

    transitive = None
    if m == n and n <= transitivity_limit:
        t0 = time.perf_counter()
        transitive = find_transitive_automorphisms(a) is not None
        timings["transitivity"] = time.perf_counter() - t0
    elif m == n:
        notes.append(
            f"transitivity not attempted: n = {n} exceeds the search cap {transitivity_limit}"
        )

    report = NormReport(
        rows=m, cols=n, spectral=spectral, cut=cut, infty_one=io1,
        groth_lower=lower, groth_upper=upper, bm_rank=k,
        bm_restarts=cfg.restarts, assignment=assignment,
        transitive=transitive, notes=notes, work=work, timings=timings,
    )
    report.checks = verify_sandwich(a, report)
    return report


# ---------------------------------------------------------------------------
# Uniformity, mixing and the eigenvalue-vs-discrepancy bound


@dataclass(frozen=True)
class UniformityEstimate:
    """Smallest epsilon in the uniformity definition, exact or bracketed."""

    lower: float
    upper: float
    exact: bool

    @property
    def value(self) -> float:
        if not self.exact:
            raise ValueError("epsilon was only bracketed, not computed exactly")
        return self.lower


def _require_regular(a: np.ndarray, d: Optional[float]) -> float:
    n = a.shape[0]
    if a.ndim != 2 or a.shape != (n, n):
        raise ValueError("adjacency matrix must be square")
    if not np.isin(a, (0.0, 1.0)).all():
        raise ValueError("adjacency matrix must be 0/1")
    rows = a.sum(axis=1)
    cols = a.sum(axis=0)
    if d is None:
        d = float(rows[0]) if n else 0.0
    if not (np.all(rows == d) and np.all(cols == d)):
        raise ValueError("matrix is not d-regular")
    return float(d)


def epsilon_uniformity(a: np.ndarray, d: Optional[float] = None, *,
                       exact_limit: int = EXACT_ENUM_LIMIT,
                       cfg: Optional[BMConfig] = None) -> UniformityEstimate:
    """Smallest epsilon with every (S, T) discrepancy at most epsilon * d * n.

    Exact (via the cut norm of the degree-centered matrix) up to the
    enumeration cap; above it, a bracket derived from the Grothendieck
    bounds via cut <= G <= 8 cut.
    """
    a = np.asarray(a, dtype=np.float64)
    d = _require_regular(a, d)
    n = a.shape[0]
    if d == 0 or n == 0:
        return UniformityEstimate(0.0, 0.0, True)
    centered = center_regular(a, d)
    if n <= exact_limit:
        eps = cut_norm_exact(centered, max_rows=exact_limit).value / (d * n)
        return UniformityEstimate(eps, eps, True)
    lower, upper = grothendieck_bounds(centered, cfg, exact_limit=exact_limit)
    return UniformityEstimate(lower / 8.0 / (d * n), upper / (d * n), False)


def mixing_lemma_check(a: np.ndarray, d: float, lam: float, *,
                       exhaustive_limit: int = 14, samples: int = 100_000,
                       seed: int = 0) -> bool:
    """Check |e(S,T) - (d/n)|S||T|| <= lam sqrt(|S||T|) over vertex-set pairs.

    e(S,T) counts ordered adjacent pairs.  Exhaustive for n up to the limit:
    for each S the worst T of each size is extremal for the sorted shifted
    column sums, so all 2^n * 2^n pairs reduce to 2^n * n closed-form checks.
    Above the limit, a seeded random sample of pairs.
    """
    a = np.asarray(a, dtype=np.float64)
    d = _require_regular(a, d)
    n = a.shape[0]
    tol = 1e-9 * max(1.0, d)
    if n <= exhaustive_limit:
        masks = np.arange(1 << n, dtype=np.int64)
        x = ((masks[:, None] >> np.arange(n)[None, :]) & 1).astype(np.float64)
        sizes = x.sum(axis=1)
        z = x @ a - (d / n) * sizes[:, None]
        zs = np.sort(z, axis=1)
        prefix = np.cumsum(zs, axis=1)
        suffix = np.cumsum(zs[:, ::-1], axis=1)
        for j in range(1, n + 1):
            bound = lam * np.sqrt(sizes * j) + tol
            if np.any(suffix[:, j - 1] > bound) or np.any(-prefix[:, j - 1] > bound):
                return False
        return True
    rng = np.random.Generator(np.random.Philox(seed))
    block = 4096
    done = 0
    while done < samples:
        cnt = min(block, samples - done)
        xs = rng.integers(0, 2, size=(cnt, n)).astype(np.float64)
        ys = rng.integers(0, 2, size=(cnt, n)).astype(np.float64)
        e = np.einsum("ij,jk,ik->i", xs, a, ys)
        ssz = xs.sum(axis=1)
        tsz = ys.sum(axis=1)
        lhs = np.abs(e - (d / n) * ssz * tsz)
        if np.any(lhs > lam * np.sqrt(ssz * tsz) + tol):
            return False
        done += cnt
    return True


@dataclass(frozen=True)
class UniformityVsEigenvalue:
    """Result of the lambda <= 8 epsilon d comparison."""

    passed: bool
    lam: float
    epsilon: float
    degree: float

    @property
    def ratio(self) -> float:
        denom = self.epsilon * self.degree
        return self.lam / denom if denom > 0 else math.inf


def theorem3_check(a: np.ndarray, d: Optional[float] = None) -> UniformityVsEigenvalue:
    """Verify lambda <= 8 epsilon d with exact epsilon; report lambda/(epsilon d)."""
    a = np.asarray(a, dtype=np.float64)
    d = _require_regular(a, d)
    lam = second_eigenvalue(a)
    eps = epsilon_uniformity(a, d).value
    passed = lam <= 8.0 * eps * d + 1e-9 * max(1.0, lam)
    return UniformityVsEigenvalue(passed=passed, lam=lam, epsilon=eps, degree=d)
