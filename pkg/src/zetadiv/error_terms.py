"""Mean-square error term of the critical line, three ways, and its moments.

The central object is

    E(T) = integral_0^T |zeta(1/2+it)|^2 dt - T*(log(T/(2 pi)) + 2*gamma - 1),

computed here by

* ``E_direct``          - adaptive composite-Simpson quadrature of Z(t)^2
                          (chunked and cumulative, so scans are cheap);
* ``E_atkinson``        - the Atkinson explicit formula: two divisor-
                          weighted oscillating sums with exact ar-sinh
                          phase and amplitude factors, remainder O(log^2 T);
* ``E_balasubramanian`` - the double-sum explicit formula driven by the
                          Riemann-Siegel main sum, remainder O(log^2 T).

On top of E sit the hybrid remainder E*(t) = E(t) - 2 pi delta*(t/(2 pi)),
its moment scans (k = 2, 4, 5 against the T^{4/3} log^3 T, T^{16/9}, T^2
scales), the smoothed short-interval mean square, and a dyadic-block
slope estimator for empirical growth exponents.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .divisor import EULER_GAMMA, DivisorTable, delta_star, main_term, sieve_divisors
from .errors import (InvalidArgumentError, OutOfRangeError, PrecisionError,
                     PrecisionWarning, ResourceLimitError)
from .zeta import TWO_PI, theta1, zeta_abs2_grid

#: Atkinson cutoff window: the formula needs A*T < N < A'*T for fixed
#: 0 < A < A'; these are the configured constants (N defaults to T).
ATKINSON_A = 0.5
ATKINSON_A_PRIME = 2.0


def E_main_term(T) -> float:
    """Smooth part T*(log(T/(2 pi)) + 2*gamma - 1); 0 at T == 0."""
    T_arr = np.asarray(T, dtype=float)
    scalar = T_arr.ndim == 0
    T_arr = np.atleast_1d(T_arr)
    out = np.zeros_like(T_arr)
    nz = T_arr > 0
    out[nz] = T_arr[nz] * (np.log(T_arr[nz] / TWO_PI) + 2.0 * EULER_GAMMA - 1.0)
    return float(out[0]) if scalar else out


# ---------------------------------------------------------------------------
# Cumulative quadrature of |zeta(1/2+it)|^2
# ---------------------------------------------------------------------------

def _panel_width_cap(t: float) -> float:
    """Panel width that resolves the local oscillation of Z(t)^2.

    The phase speed of the main-sum cosines is ~log(t/(2 pi)), so the cap
    is min(0.05, 2 pi / (10 log(t/(2 pi)))); plain 0.05 where the log is
    not yet positive.
    """
    if t <= TWO_PI * math.e:
        return 0.05
    return min(0.05, TWO_PI / (10.0 * math.log(t / TWO_PI)))


def _simpson_chunk_block(f, a: float, m: int, n_chunks: int, chunk: float) -> np.ndarray:
    """Composite Simpson on n_chunks consecutive chunks, m panels each.

    Returns the n_chunks individual chunk integrals.  One function call
    evaluates the whole shared node grid.
    """
    npan = 2 * m
    h = chunk / npan
    total = n_chunks * npan
    xs = a + h * np.arange(total + 1)
    ys = f(xs)
    w = np.empty(npan + 1)
    w[0::2] = 2.0
    w[1::2] = 4.0
    w[0] = 1.0
    w[npan] = 1.0
    blocks = np.empty((n_chunks, npan + 1))
    ys2 = ys[:-1].reshape(n_chunks, npan)
    blocks[:, :npan] = ys2
    blocks[:, npan] = ys[npan::npan]
    return (h / 3.0) * blocks.dot(w)


def _simpson_single(f, a: float, b: float, m: int) -> float:
    npan = 2 * m
    xs = np.linspace(a, b, npan + 1)
    ys = f(xs)
    w = np.empty(npan + 1)
    w[0::2] = 2.0
    w[1::2] = 4.0
    w[0] = 1.0
    w[npan] = 1.0
    return float((b - a) / (3.0 * npan) * np.dot(ys, w))


class ZetaMeanSquare:
    """Chunked, extendable quadrature cache for integral_0^T Z(t)^2 dt.

    The axis is split into fixed chunks; each chunk is integrated by
    composite Simpson at the oscillation-resolving panel width and at
    half that width, keeping the finer value and a Richardson error
    estimate.  Extending from T1 to T2 only computes the new chunks, so
    one instance serves a whole scan.  Single-threaded by design (the
    ordered cumulative reduction); share only after it is built.
    """

    def __init__(self, chunk: float = 0.25, panel_cap: float = 0.05,
                 h_floor: float = 1e-5, integrand=zeta_abs2_grid):
        if chunk <= 0 or panel_cap <= 0:
            raise InvalidArgumentError("chunk and panel_cap must be positive")
        self.chunk = float(chunk)
        self.panel_cap = float(panel_cap)
        self.h_floor = float(h_floor)
        self._f = integrand
        self._cum = [0.0]          # cumulative integral at chunk boundaries
        self._err = [0.0]          # cumulative Richardson error estimate

    def _m_for(self, b: float) -> int:
        w = min(self.panel_cap, _panel_width_cap(b))
        return max(1, math.ceil(self.chunk / (2.0 * w)))

    def _covered(self) -> float:
        return (len(self._cum) - 1) * self.chunk

    def extend_to(self, T: float) -> None:
        """Ensure chunks cover [0, T]; batch-evaluates whole chunk groups."""
        need = math.ceil(max(T, 0.0) / self.chunk)
        k = len(self._cum) - 1
        while k < need:
            a = k * self.chunk
            m = self._m_for(a + self.chunk)
            # group the consecutive chunks that share this panel count
            k_end = k + 1
            while k_end < need and k_end - k < 4096 and self._m_for((k_end + 1) * self.chunk) == m:
                k_end += 1
            n_chunks = k_end - k
            coarse = _simpson_chunk_block(self._f, a, m, n_chunks, self.chunk)
            fine = _simpson_chunk_block(self._f, a, 2 * m, n_chunks, self.chunk)
            err = np.abs(fine - coarse) / 15.0
            for i in range(n_chunks):
                self._cum.append(self._cum[-1] + float(fine[i]))
                self._err.append(self._err[-1] + float(err[i]))
            k = k_end

    def integral(self, T: float) -> float:
        """integral_0^T Z(t)^2 dt (extends the cache as needed)."""
        if T < 0:
            raise InvalidArgumentError("integral needs T >= 0")
        if T == 0:
            return 0.0
        self.extend_to(T)
        k = int(T / self.chunk)
        base = self._cum[min(k, len(self._cum) - 1)]
        a = k * self.chunk
        if T > a + 1e-12 * max(1.0, T):
            m = self._m_for(T)
            base += self._refined_partial(a, T, m)
        return base

    def _refined_partial(self, a: float, b: float, m: int) -> float:
        coarse = _simpson_single(self._f, a, b, m)
        fine = _simpson_single(self._f, a, b, 2 * m)
        while abs(fine - coarse) / 15.0 > 1e-6 and (b - a) / (4 * m) > self.h_floor:
            m *= 2
            coarse, fine = fine, _simpson_single(self._f, a, b, 2 * m)
        return fine

    def error_estimate(self, T: float) -> float:
        """Accumulated Richardson error bound of the cached prefix at T."""
        self.extend_to(T)
        k = min(int(T / self.chunk), len(self._err) - 1)
        return self._err[k]

    def grid_values(self, n: int) -> np.ndarray:
        """Cumulative integral at the chunk boundaries 0, c, 2c, ..., n*c."""
        self.extend_to(n * self.chunk)
        return np.asarray(self._cum[:n + 1])


_default_ms: ZetaMeanSquare | None = None


def default_integrator() -> ZetaMeanSquare:
    """Process-wide shared quadrature cache (grown lazily, never shrunk)."""
    global _default_ms
    if _default_ms is None:
        _default_ms = ZetaMeanSquare()
    return _default_ms


def E_direct(T: float, step: float | None = None, *, tol: float = 0.1,
             integrator: ZetaMeanSquare | None = None) -> float:
    """E(T) by direct quadrature of Z(t)^2.

    ``step`` overrides the initial panel width (refinement below it is
    still automatic); the cached cumulative error at T must come in
    under ``tol`` or a PrecisionError is raised.  Passing an explicit
    ``integrator`` shares panel work across calls and makes the integral
    extension T1 -> T2 incremental.
    """
    if T < 0:
        raise InvalidArgumentError("E_direct needs T >= 0")
    if T == 0:
        return 0.0
    if tol <= 0:
        raise PrecisionError("tolerance must be positive")
    if step is not None:
        if step <= 0:
            raise InvalidArgumentError("step must be positive")
        integ = ZetaMeanSquare(panel_cap=min(step, 0.05))
    else:
        integ = integrator if integrator is not None else default_integrator()
    val = integ.integral(T)
    if integ.error_estimate(T) > tol:
        raise PrecisionError(
            f"quadrature error estimate {integ.error_estimate(T):.3e} "
            f"exceeds tol {tol} at T={T}")
    return val - E_main_term(T)


def E_grid(tmax: float, step: float = 0.25,
           integrator: ZetaMeanSquare | None = None) -> tuple[np.ndarray, np.ndarray]:
    """E on the uniform grid 0, step, ..., ~tmax (cumulative, one pass)."""
    if tmax <= 0 or step <= 0:
        raise InvalidArgumentError("tmax and step must be positive")
    n = int(round(tmax / step))
    integ = integrator if integrator is not None else ZetaMeanSquare(chunk=step)
    if abs(integ.chunk - step) > 1e-12:
        raise InvalidArgumentError("integrator chunk must equal the grid step")
    ts = step * np.arange(n + 1)
    return ts, integ.grid_values(n) - E_main_term(ts)


# ---------------------------------------------------------------------------
# Atkinson's explicit formula
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AtkinsonEval:
    """Term-by-term breakdown of the Atkinson formula at one T."""

    T: float
    N: float
    N_prime: float
    sigma1: float
    sigma2: float
    value: float


def atkinson_n_prime(T: float, N: float) -> float:
    """Second cutoff N' = T/(2 pi) + N/2 - sqrt(N^2/4 + N T/(2 pi))."""
    return T / TWO_PI + N / 2.0 - math.sqrt(N * N / 4.0 + N * T / TWO_PI)


def atkinson_f(T, n):
    """Exact phase 2 T arsinh(sqrt(pi n/(2T))) + sqrt(2 pi n T + pi^2 n^2) - pi/4.

    Its expansion starts -pi/4 + 2 sqrt(2 pi n T) + (1/6) sqrt(2 pi^3)
    n^{3/2} T^{-1/2} + ...; the closed form is used everywhere, the
    expansion only in tests.
    """
    n = np.asarray(n, dtype=float)
    x = math.pi * n / (2.0 * T)
    return (2.0 * T * np.arcsinh(np.sqrt(x))
            + np.sqrt(TWO_PI * n * T + (math.pi * n) ** 2) - math.pi / 4.0)


def atkinson_e(T, n):
    """Exact amplitude (1 + pi n/(2T))^(-1/4) / ((2T/(pi n))^(1/2) arsinh(sqrt(pi n/(2T)))).

    Equals 1 + O(n/T); evaluated as sqrt(x)/arsinh(sqrt(x)) against the
    quarter-power factor, which is stable down to n/T -> 0.
    """
    n = np.asarray(n, dtype=float)
    x = math.pi * n / (2.0 * T)
    rx = np.sqrt(x)
    return (1.0 + x) ** (-0.25) * rx / np.arcsinh(rx)


def E_atkinson(T: float, N: float | None = None, *, table: DivisorTable) -> AtkinsonEval:
    """E(T) by the Atkinson explicit formula with cutoff N (default T).

    sigma1 is the alternating divisor sum with amplitude/phase factors
    atkinson_e/atkinson_f; sigma2 the shorter logarithmic sum up to N'.
    The divisor table must cover max(N, N').  Remainder is O(log^2 T)
    with a modest constant (the cross-formula tests fit it).
    """
    if T <= 0:
        raise InvalidArgumentError("E_atkinson needs T > 0")
    N = float(T) if N is None else float(N)
    if not ATKINSON_A * T < N < ATKINSON_A_PRIME * T:
        raise InvalidArgumentError(
            f"cutoff N={N} outside ({ATKINSON_A}*T, {ATKINSON_A_PRIME}*T) for T={T}")
    n_prime = atkinson_n_prime(T, N)
    need = int(max(math.floor(N), math.floor(n_prime)))
    if need > table.limit:
        raise OutOfRangeError(f"divisor table limit {table.limit} < required {need}")

    n1 = np.arange(1, int(math.floor(N)) + 1)
    d1 = table.values[n1].astype(np.float64)
    sign = np.where(n1 % 2 == 0, 1.0, -1.0)
    amp = atkinson_e(T, n1)
    phase = atkinson_f(T, n1)
    sigma1 = (math.sqrt(2.0) * (T / TWO_PI) ** 0.25
              * float(np.sum(sign * d1 * n1 ** (-0.75) * amp * np.cos(phase))))

    n2 = np.arange(1, int(math.floor(n_prime)) + 1)
    if n2.size:
        d2 = table.values[n2].astype(np.float64)
        lg = np.log(T / (TWO_PI * n2))
        sigma2 = -2.0 * float(np.sum(
            d2 * n2 ** (-0.5) / lg * np.cos(T * lg - T + math.pi / 4.0)))
    else:
        sigma2 = 0.0
    return AtkinsonEval(T=float(T), N=N, N_prime=n_prime,
                        sigma1=sigma1, sigma2=sigma2, value=sigma1 + sigma2)


# ---------------------------------------------------------------------------
# Balasubramanian's explicit formula
# ---------------------------------------------------------------------------

def E_balasubramanian(T: float, *, k_cap: int = 10**4, block: int = 512) -> float:
    """E(T) by the double-sum formula over m, n <= K = sqrt(T/(2 pi)).

    First sum: sin(T log(n/m)) / (sqrt(mn) log(n/m)); second sum:
    sin(2 theta1 - T log(mn)) / (sqrt(mn) (log(T/(2 pi)) - log(mn)));
    both over m != n, doubled.  O(K^2) work, blocked to keep memory flat;
    K above ``k_cap`` raises ResourceLimitError.  Remainder O(log^2 T).
    """
    if T <= 0:
        raise InvalidArgumentError("E_balasubramanian needs T > 0")
    K = math.sqrt(T / TWO_PI)
    if K > k_cap:
        raise ResourceLimitError(f"K={K:.0f} exceeds cap {k_cap} (O(K^2) double sum)")
    kn = int(math.floor(K))
    if kn < 1:
        return 0.0
    n = np.arange(1, kn + 1, dtype=np.float64)
    logn = np.log(n)
    rsn = 1.0 / np.sqrt(n)
    th1 = theta1(T).value
    two_theta1_deriv = math.log(T / TWO_PI)
    s1 = 0.0
    s2 = 0.0
    for lo in range(0, kn, block):
        hi = min(lo + block, kn)
        dl = logn[lo:hi, None] - logn[None, :]
        np.fill_diagonal(dl[:, lo:hi], np.nan)  # mask m == n
        amp = rsn[lo:hi, None] * rsn[None, :]
        with np.errstate(invalid="ignore"):
            t1 = np.sin(T * dl) / dl * amp
        s1 += float(np.nansum(t1))
        sl = logn[lo:hi, None] + logn[None, :]
        den = two_theta1_deriv - sl
        t2 = np.sin(2.0 * th1 - T * sl) / den * amp
        np.fill_diagonal(t2[:, lo:hi], 0.0)
        s2 += float(np.sum(t2))
    return 2.0 * s1 + 2.0 * s2


# ---------------------------------------------------------------------------
# Hybrid remainder E* and its scans
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ErrorTermSample:
    """One abscissa with E, the scaled alternating divisor remainder, E*."""

    t: float
    E: float
    delta_star_scaled: float  # 2 pi delta*(t/(2 pi))
    E_star: float             # E - delta_star_scaled, exactly as stored


def E_star(T: float, *, table: DivisorTable,
           integrator: ZetaMeanSquare | None = None) -> ErrorTermSample:
    """E*(T) = E(T) - 2 pi delta*(T/(2 pi)) with all three parts reported."""
    if T <= 0:
        raise InvalidArgumentError("E_star needs T > 0")
    e_val = E_direct(T, integrator=integrator)
    ds = TWO_PI * delta_star(table, T / TWO_PI)
    return ErrorTermSample(t=float(T), E=e_val, delta_star_scaled=ds, E_star=e_val - ds)


@dataclass(eq=False)
class ScanResult:
    """A grid of error-term samples plus summary statistics.

    ``delta_star_scaled`` holds 2 pi delta*(t/(2 pi)); the CSV column is
    named ``delta_star`` (header ``t,E,delta_star,E_star``).
    """

    t: np.ndarray
    E: np.ndarray
    delta_star_scaled: np.ndarray
    E_star: np.ndarray
    meta: dict = field(default_factory=dict)

    def write_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            fh.write("t,E,delta_star,E_star\n")
            for i in range(self.t.size):
                fh.write(f"{float(self.t[i])!r},{float(self.E[i])!r},"
                         f"{float(self.delta_star_scaled[i])!r},"
                         f"{float(self.E_star[i])!r}\n")

    def summary(self) -> dict:
        out = dict(self.meta)
        out.update({
            "samples": int(self.t.size),
            "max_abs_E": float(np.max(np.abs(self.E))),
            "max_abs_delta_star_scaled": float(np.max(np.abs(self.delta_star_scaled))),
            "max_abs_E_star": float(np.max(np.abs(self.E_star))),
        })
        for k in (2, 4, 5):
            results = moment_scan_from_samples(self.t, self.E_star, k)
            if results:
                out[f"moment_k{k}_top_ratio"] = results[-1].ratio
        return out


def estar_scan(tmax: float, step: float = 0.25, *,
               table: DivisorTable | None = None,
               integrator: ZetaMeanSquare | None = None) -> ScanResult:
    """Sample E, 2 pi delta*(t/2 pi) and E* on the uniform grid to tmax.

    If no table is supplied one is sieved to cover 4*tmax/(2 pi).  E*
    is stored exactly as E minus the scaled divisor term, bit for bit.
    """
    if table is None:
        table = sieve_divisors(int(4 * tmax / TWO_PI) + 2)
    if 4 * tmax / TWO_PI > table.limit:
        raise OutOfRangeError("divisor table too small for delta*(tmax/(2 pi))")
    ts, e_vals = E_grid(tmax, step, integrator)
    x = ts / TWO_PI
    idx = np.floor(4.0 * x).astype(np.int64)
    ds = TWO_PI * (0.5 * table.alt_prefix()[idx] - main_term(x))
    ds[0] = 0.0
    return ScanResult(t=ts, E=e_vals, delta_star_scaled=ds, E_star=e_vals - ds,
                      meta={"tmax": float(tmax), "step": float(step)})


@dataclass(frozen=True)
class MomentResult:
    """Cumulative k-th moment of |E*| at one dyadic checkpoint."""

    T: float
    k: int
    integral: float
    normalizer: float
    ratio: float


def _moment_normalizer(T: float, k: int) -> float:
    if k == 2:
        return T ** (4.0 / 3.0) * math.log(T) ** 3
    if k == 4:
        return T ** (16.0 / 9.0)
    return T * T  # k == 5


def moment_scan_from_samples(ts: np.ndarray, e_star: np.ndarray, k: int,
                             j_min: int = 4) -> list[MomentResult]:
    """Cumulative trapezoid of |E*|^k reported at dyadic checkpoints 2^j."""
    if k not in (2, 4, 5):
        raise InvalidArgumentError("moment order k must be one of {2, 4, 5}")
    if ts.size < 2:
        raise InvalidArgumentError("need at least two samples")
    step = float(ts[1] - ts[0])
    if ts.size < 1000 or step > 1.0:
        warnings.warn(
            f"moment grid is sparse ({ts.size} samples, step {step}); "
            "moment ratios may be under-resolved", PrecisionWarning, stacklevel=2)
    g = np.abs(e_star) ** k
    cum = np.concatenate([[0.0], np.cumsum((g[1:] + g[:-1]) * 0.5 * np.diff(ts))])
    tmax = float(ts[-1])
    out = []
    j = j_min
    while 2.0 ** j <= tmax + 1e-9:
        T = 2.0 ** j
        idx = int(round(T / step))
        integral = float(cum[min(idx, cum.size - 1)])
        norm = _moment_normalizer(T, k)
        out.append(MomentResult(T=T, k=k, integral=integral,
                                normalizer=norm, ratio=integral / norm))
        j += 1
    return out


def moment_scan(tmax: float, k: int, grid_step: float = 0.25, *,
                scan: ScanResult | None = None,
                table: DivisorTable | None = None,
                integrator: ZetaMeanSquare | None = None) -> list[MomentResult]:
    """Moment scan of |E*|^k on [0, tmax]; builds the sample grid if needed."""
    if scan is None:
        scan = estar_scan(tmax, grid_step, table=table, integrator=integrator)
    return moment_scan_from_samples(scan.t, scan.E_star, k)


def fit_log_cubic(results: list[MomentResult]) -> tuple[np.ndarray, np.ndarray]:
    """Least-squares cubic in log T for integral/T^{4/3} at the checkpoints.

    Returns (coefficients highest power first, relative residuals).  The
    cubic's coefficients are fitted, never asserted; only the residual
    quality is checked downstream.
    """
    T = np.array([r.T for r in results])
    y = np.array([r.integral for r in results]) / T ** (4.0 / 3.0)
    lt = np.log(T)
    coef = np.polyfit(lt, y, 3)
    fitted = np.polyval(coef, lt)
    rel = np.abs(fitted - y) / np.maximum(np.abs(y), 1e-300)
    return coef, rel


# ---------------------------------------------------------------------------
# Smoothed short-interval mean square
# ---------------------------------------------------------------------------

def _bump_exp(u: np.ndarray) -> np.ndarray:
    """C-infinity collar profile exp(1 - 1/(1 - u^2)) on [0, 1)."""
    out = np.zeros_like(u)
    inner = u < 1.0
    ui = u[inner]
    out[inner] = np.exp(1.0 - 1.0 / (1.0 - ui * ui))
    return out


def _bump_ratio(u: np.ndarray) -> np.ndarray:
    """Alternative C-infinity collar profile exp(-u^2/(1 - u^2)) on [0, 1)."""
    out = np.zeros_like(u)
    inner = u < 1.0
    ui = u[inner]
    out[inner] = np.exp(-ui * ui / (1.0 - ui * ui))
    return out


BUMP_PROFILES = {"exp_bump": _bump_exp, "ratio_bump": _bump_ratio}


def smooth_window(ts: np.ndarray, T: float, G: float, profile: str = "exp_bump") -> np.ndarray:
    """Weight that is 1 on [T-G, T+G], 0 outside [T-2G, T+2G], smooth between."""
    try:
        prof = BUMP_PROFILES[profile]
    except KeyError:
        raise InvalidArgumentError(
            f"unknown profile {profile!r}; choose from {sorted(BUMP_PROFILES)}")
    u = (np.abs(np.asarray(ts, dtype=float) - T) - G) / G
    w = np.ones_like(u)
    outer = u > 0
    w[outer] = prof(np.minimum(u[outer], 1.0))
    return w


def short_interval_ms(T: float, G: float, *, profile: str = "exp_bump") -> float:
    """Smoothed mean square integral f(t) |zeta(1/2+it)|^2 dt around T.

    f is 1 on [T-G, T+G] and decays to 0 on the outer G-collars with the
    chosen C-infinity profile.  Admissible windows are 2 <= G <= T/2
    (the theoretical T^eps <= G <= T^{1-eps} corridor at desk scale).
    """
    if not 2.0 <= G <= T / 2.0:
        raise InvalidArgumentError(f"G={G} outside the admissible window [2, T/2] at T={T}")
    a, b = T - 2.0 * G, T + 2.0 * G
    w = min(0.05, _panel_width_cap(b))
    m = max(8, math.ceil((b - a) / (2.0 * w)))

    def f(ts):
        return smooth_window(ts, T, G, profile) * zeta_abs2_grid(ts)

    coarse = _simpson_single(f, a, b, m)
    fine = _simpson_single(f, a, b, 2 * m)
    if abs(fine - coarse) > max(0.05, 1e-6 * abs(fine)):
        raise PrecisionError("short-interval quadrature failed to settle")
    return fine


# ---------------------------------------------------------------------------
# Empirical growth exponents
# ---------------------------------------------------------------------------

def empirical_exponent(samples) -> float:
    """Dyadic-block slope: least squares of log(max|value|) versus log t.

    ``samples`` is a sequence of (t, value) pairs or a (t, value) array
    pair.  Blocks are [2^j, 2^{j+1}); at least 8 nonempty blocks are
    required.  Returns the fitted slope, an exploratory estimate of the
    growth exponent inf{a : value << t^a}.
    """
    if isinstance(samples, tuple) and len(samples) == 2:
        ts, vals = (np.asarray(samples[0], dtype=float),
                    np.asarray(samples[1], dtype=float))
    else:
        arr = np.asarray(list(samples), dtype=float)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise InvalidArgumentError("samples must be (t, value) pairs")
        ts, vals = arr[:, 0], arr[:, 1]
    ok = ts > 0
    ts, vals = ts[ok], vals[ok]
    if ts.size == 0:
        raise InvalidArgumentError("no positive abscissae")
    j = np.floor(np.log2(ts)).astype(int)
    xs, ys = [], []
    for jj in np.unique(j):
        m = float(np.max(np.abs(vals[j == jj])))
        if m > 0:
            xs.append(math.log(2.0 ** (jj + 0.5)))
            ys.append(math.log(m))
    if len(xs) < 8:
        raise InvalidArgumentError(
            f"need >= 8 nonempty dyadic blocks, got {len(xs)}")
    slope = float(np.polyfit(np.array(xs), np.array(ys), 1)[0])
    return slope


def cross_formula_constant(Ts, *, table: DivisorTable,
                           integrator: ZetaMeanSquare | None = None) -> dict:
    """Fit the shared remainder constant C of the three E(T) formulas.

    C is the maximum over the sample points of |E_direct - E_atkinson| and
    |E_direct - E_balasubramanian| divided by log^2 T.  Returns the fitted
    constant and per-T details for reporting.
    """
    rows = []
    c = 0.0
    for T in Ts:
        ed = E_direct(T, integrator=integrator)
        ea = E_atkinson(T, table=table).value
        eb = E_balasubramanian(T)
        l2 = math.log(T) ** 2
        rows.append({"T": T, "E_direct": ed, "E_atkinson": ea,
                     "E_balasubramanian": eb,
                     "dev_atkinson": abs(ed - ea) / l2,
                     "dev_balasubramanian": abs(ed - eb) / l2})
        c = max(c, rows[-1]["dev_atkinson"], rows[-1]["dev_balasubramanian"])
    return {"C": c, "rows": rows}
