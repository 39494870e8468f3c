"""Log-space complex gamma/sine arithmetic and unit-argument series evaluation.

Everything downstream needs quotients of many gamma and sine factors whose
individual magnitudes overflow doubles long before the quotient does, so the
building blocks here work in log space: a value is carried as log-magnitude
plus an unnormalized phase, products are additions, and a single
exponentiation happens at the end.  On top of that sit a block-vectorized
summation engine for one-more-numerator hypergeometric series at unit
argument, and evaluators for the three special functions of interest: the
44-label pair (a sum and a difference of two Saalschutzian 4F3(1) series)
and the eight-parameter function built from two very-well-poised 9F8(1)
series.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from typing import Sequence

import numpy as np

__all__ = [
    "GAMMA_MARGIN",
    "SIN_MARGIN",
    "EvaluationDomainError",
    "DegeneratePointError",
    "GammaPoleError",
    "DivergentSeriesError",
    "PrecisionWarning",
    "LogC",
    "combine_exponentials",
    "lgamma",
    "log_sin_pi",
    "pochhammer",
    "pochhammer_c",
    "series_sigma",
    "is_saalschutzian",
    "is_well_poised",
    "is_very_well_poised",
    "SeriesCtrl",
    "SeriesResult",
    "sum_pfq",
    "f43_star",
    "f43_star_log",
    "PointW",
    "PointV",
    "j_probe_args",
    "l_probe_args",
    "l7f6_probe_args",
    "m_probe_args",
    "require_margins",
    "margins_ok",
    "eval_J",
    "eval_J_log",
    "eval_K",
    "eval_L",
    "eval_L_log",
    "eval_L_7f6",
    "eval_L_7f6_log",
    "eval_M",
    "eval_M_log",
    "twiddle_params",
]

GAMMA_MARGIN = 0.1
SIN_MARGIN = 0.05
_POLE_MARGIN = 1e-12

_LOG_PI = math.log(math.pi)
_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)
_LOG_TWO_I = complex(math.log(2.0), 0.5 * math.pi)


class EvaluationDomainError(ValueError):
    """A parameter combination outside the evaluators' domain."""


class DegeneratePointError(EvaluationDomainError):
    """A gamma argument or sine argument too close to its singular set."""


class GammaPoleError(DegeneratePointError):
    """Argument within the hard pole margin of a non-positive integer."""


class DivergentSeriesError(EvaluationDomainError):
    """Unit-argument series whose parameter sums give no convergence."""


class PrecisionWarning(RuntimeWarning):
    """Result kept fewer significant digits than the working tolerance."""


def _near_nonpos_int(z: complex, margin: float) -> bool:
    n = round(z.real)
    return n <= 0 and abs(z - n) < margin


def _dist_to_int(z: complex) -> float:
    return abs(z - round(z.real))


# ---------------------------------------------------------------------------
# log-space values
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LogC:
    """A logarithm of a non-zero complex value: log-magnitude plus phase.

    The phase is not normalized; sums of these add winding freely, which is
    exactly what makes products of thousands of gamma factors safe.
    """

    log_mag: float
    phase: float

    @classmethod
    def from_complex(cls, z: complex) -> "LogC":
        z = complex(z)
        if z == 0:
            return cls(-math.inf, 0.0)
        return cls(math.log(abs(z)), cmath.phase(z))

    @classmethod
    def from_real(cls, x: float) -> "LogC":
        if x <= 0:
            raise ValueError("need a positive real value")
        return cls(math.log(x), 0.0)

    def __add__(self, other: "LogC") -> "LogC":
        return LogC(self.log_mag + other.log_mag, self.phase + other.phase)

    def __sub__(self, other: "LogC") -> "LogC":
        return LogC(self.log_mag - other.log_mag, self.phase - other.phase)

    def __neg__(self) -> "LogC":
        return LogC(-self.log_mag, -self.phase)

    def to_complex(self) -> complex:
        if self.log_mag == -math.inf:
            return 0j
        if self.log_mag > 709.0:
            raise OverflowError("value exceeds double range; stay in log space")
        return cmath.exp(complex(self.log_mag, self.phase))

    def as_log(self) -> complex:
        return complex(self.log_mag, self.phase)


def _logc_from_log(w: complex) -> LogC:
    return LogC(w.real, w.imag)


def combine_exponentials(terms: Sequence[LogC], coefs: Sequence[complex] = None):
    """Log of sum(coef_i * exp(term_i)), rescaled by the largest magnitude.

    Returns (LogC of the combination, cancellation ratio), where the ratio is
    |combination| / max |contribution| after rescaling.  A tiny ratio means
    the combination lost that many digits to cancellation.
    """
    if coefs is None:
        coefs = [1.0] * len(terms)
    if len(coefs) != len(terms) or not terms:
        raise ValueError("need one coefficient per term")
    mags = [
        t.log_mag + (math.log(abs(c)) if c != 0 else -math.inf)
        for t, c in zip(terms, coefs)
    ]
    r = max(mags)
    if r == -math.inf:
        return LogC(-math.inf, 0.0), 1.0
    contribs = [
        c * cmath.exp(complex(t.log_mag - r, t.phase)) for t, c in zip(terms, coefs)
    ]
    s = sum(contribs)
    biggest = max(abs(v) for v in contribs)
    ratio = abs(s) / biggest if biggest > 0 else 1.0
    if s == 0:
        return LogC(-math.inf, 0.0), 0.0
    return LogC(r + math.log(abs(s)), cmath.phase(s)), ratio


# ---------------------------------------------------------------------------
# gamma and sine in log space
# ---------------------------------------------------------------------------

# asymptotic series coefficients B_{2n} / (2n(2n-1))
_STIRLING = (
    1 / 12,
    -1 / 360,
    1 / 1260,
    -1 / 1680,
    1 / 1188,
    -691 / 360360,
    1 / 156,
    -3617 / 122400,
    43867 / 244188,
    -174611 / 125400,
    77683 / 5796,
    -236364091 / 1506960,
)

_SHIFT_RADIUS = 40.0


def _expm1_2pii(z: complex) -> complex:
    """exp(2*pi*i*z) - 1, accurate near the zeros (z near an integer)."""
    m = round(z.real)
    x = -2.0 * math.pi * z.imag
    y = 2.0 * math.pi * (z.real - m)
    if abs(x) <= 1.0 and abs(y) <= 1.0:
        return complex(
            math.expm1(x) * math.cos(y) - 2.0 * math.sin(0.5 * y) ** 2,
            math.exp(x) * math.sin(y),
        )
    return cmath.exp(complex(x, y)) - 1.0


def _log_sin_pi_c(z: complex) -> complex:
    if z.imag < 0:
        return _log_sin_pi_c(z.conjugate()).conjugate()
    # sin(pi z) = exp(-i pi z) (exp(2 pi i z) - 1) / (2 i); the extracted
    # exponential dominates for large Im z, so nothing overflows
    return -1j * math.pi * z + cmath.log(_expm1_2pii(z)) - _LOG_TWO_I


def log_sin_pi(z: complex, margin: float = SIN_MARGIN) -> LogC:
    """log sin(pi z) with the dominant exponential factored out.

    Safe for |Im z| up to 1e4 and beyond.  Rejects z closer than `margin`
    to an integer (callers that have already margin-checked may pass the
    hard pole margin explicitly).
    """
    z = complex(z)
    d = _dist_to_int(z)
    if d < _POLE_MARGIN:
        raise DegeneratePointError(f"sin(pi z) vanishes at z = {z}")
    if d < margin:
        raise DegeneratePointError(
            f"z = {z} within {margin} of an integer; sine margin violated"
        )
    return _logc_from_log(_log_sin_pi_c(z))


def _stirling_log_gamma(z: complex) -> complex:
    w = (z - 0.5) * cmath.log(z) - z + _HALF_LOG_TWO_PI
    zi = 1.0 / z
    z2 = zi * zi
    p = zi
    for c in _STIRLING:
        w += c * p
        p *= z2
    return w


def _lgamma_c(z: complex) -> complex:
    if _near_nonpos_int(z, _POLE_MARGIN):
        raise GammaPoleError(f"gamma pole at z = {z}")
    if z.real < 0.5:
        return _LOG_PI - _log_sin_pi_c(z) - _lgamma_c(1.0 - z)
    shift = 0j
    while abs(z) <= _SHIFT_RADIUS:
        shift += cmath.log(z)
        z = z + 1.0
    return _stirling_log_gamma(z) - shift


def lgamma(z: complex) -> LogC:
    """log Gamma(z) by upward recursion into |z| > 40 plus the asymptotic
    series, with reflection through log_sin_pi for Re z < 1/2."""
    return _logc_from_log(_lgamma_c(complex(z)))


def _lgamma_sum(args) -> LogC:
    total = 0j
    for z in args:
        total += _lgamma_c(complex(z))
    return _logc_from_log(total)


def pochhammer(a, n: int):
    """Rising factorial with n factors; exact for exact inputs."""
    if n < 0:
        raise ValueError("need n >= 0")
    out = 1
    for k in range(n):
        out = out * (a + k)
    return out


def pochhammer_c(a: complex, y: complex) -> complex:
    """Gamma(a+y)/Gamma(a) for complex offsets, via log-gamma differences."""
    return (lgamma(complex(a) + complex(y)) - lgamma(complex(a))).to_complex()


# ---------------------------------------------------------------------------
# series classifiers
# ---------------------------------------------------------------------------


def series_sigma(nums: Sequence[complex], dens: Sequence[complex]) -> complex:
    """Parameter-sum difference controlling unit-argument convergence."""
    return sum(complex(b) for b in dens) - sum(complex(a) for a in nums)


def is_saalschutzian(nums, dens, tol: float = 1e-9) -> bool:
    if len(nums) != len(dens) + 1:
        return False
    return abs(series_sigma(nums, dens) - 1.0) <= tol


def is_well_poised(nums, dens, tol: float = 1e-9) -> bool:
    if len(nums) != len(dens) + 1:
        return False
    ref = 1.0 + complex(nums[0])
    return all(
        abs(complex(b) + complex(a) - ref) <= tol for a, b in zip(nums[1:], dens)
    )


def is_very_well_poised(nums, dens, tol: float = 1e-9) -> bool:
    if not is_well_poised(nums, dens, tol):
        return False
    return abs(complex(nums[1]) - (1.0 + 0.5 * complex(nums[0]))) <= tol


# ---------------------------------------------------------------------------
# the summation engine
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SeriesCtrl:
    rel_tol: float = 1e-12
    n_max: int = 1 << 20
    tail_window: int = 64

    def __post_init__(self):
        if self.rel_tol <= 0:
            raise ValueError("rel_tol must be positive")
        if self.n_max < 2 * self.tail_window:
            raise ValueError("n_max must be at least twice the tail window")


@dataclass(frozen=True)
class SeriesResult:
    value: complex
    terms_used: int
    err_estimate: float
    converged: bool


class _Accum:
    """Neumaier-compensated accumulator for complex block sums."""

    __slots__ = ("re", "im", "cre", "cim")

    def __init__(self):
        self.re = self.im = self.cre = self.cim = 0.0

    def add(self, z: complex):
        x, y = z.real, z.imag
        t = self.re + x
        if abs(self.re) >= abs(x):
            self.cre += (self.re - t) + x
        else:
            self.cre += (x - t) + self.re
        self.re = t
        t = self.im + y
        if abs(self.im) >= abs(y):
            self.cim += (self.im - t) + y
        else:
            self.cim += (y - t) + self.im
        self.im = t

    def total(self) -> complex:
        return complex(self.re + self.cre, self.im + self.cim)


def _stop_index(below: np.ndarray, carry: int, need: int = 3):
    """First index at which `need` consecutive below-threshold terms end,
    counting `carry` consecutive hits from before this block."""
    false_pos = np.flatnonzero(~below)
    if false_pos.size == 0:
        idx = max(0, need - 1 - carry)
        return idx if idx < below.size else None
    first = int(false_pos[0])
    idx = max(0, need - 1 - carry)
    if idx < first:
        return idx
    nxt = np.append(false_pos[1:], below.size)
    cand = false_pos + need
    hits = cand[cand < np.minimum(nxt, below.size)]
    return int(hits[0]) if hits.size else None


def _trailing_streak(below: np.ndarray, carry: int) -> int:
    false_pos = np.flatnonzero(~below)
    if false_pos.size == 0:
        return carry + below.size
    return below.size - 1 - int(false_pos[-1])


def _term_ratio(nums, all_dens, k: int) -> complex:
    r = 1.0 + 0j
    for a in nums:
        r *= a + k
    for b in all_dens:
        r /= b + k
    return r


def sum_pfq(nums: Sequence[complex], dens: Sequence[complex], ctrl: SeriesCtrl = None) -> SeriesResult:
    """Unit-argument series with one more numerator than denominator parameter.

    Terms follow the multiplicative recurrence; blocks of terms are generated
    with vectorized cumulative products and folded into a compensated total.
    The running stop test asks for three consecutive terms below
    rel_tol * |partial sum|.  After stopping (or hitting n_max) an algebraic
    tail correction term_N * N / sigma is added, and one doubling pass to 2N
    re-corrects; the discrepancy between the two corrected values is the
    error estimate.  A numerator at a non-positive integer short-circuits all
    of that and sums the finitely many terms exactly.
    """
    if ctrl is None:
        ctrl = SeriesCtrl()
    nums = [complex(a) for a in nums]
    dens = [complex(b) for b in dens]
    if len(nums) != len(dens) + 1:
        raise ValueError("need one more numerator than denominator parameters")
    for b in dens:
        if _near_nonpos_int(b, _POLE_MARGIN):
            raise DegeneratePointError(f"denominator parameter {b} at a pole")

    trunc = None
    for a in nums:
        n = round(a.real)
        if n <= 0 and abs(a - n) < _POLE_MARGIN:
            trunc = -n if trunc is None else min(trunc, -n)
    all_dens = dens + [1.0 + 0j]
    if trunc is not None:
        if trunc + 1 > (1 << 22):
            raise ValueError("terminating index too large to sum")
        acc = _Accum()
        term = 1.0 + 0j
        acc.add(term)
        for k in range(trunc):
            term *= _term_ratio(nums, all_dens, k)
            acc.add(term)
        return SeriesResult(acc.total(), trunc + 1, 0.0, True)

    sigma = series_sigma(nums, dens)
    if sigma.real <= 0:
        raise DivergentSeriesError(
            f"parameter sums give convergence exponent {sigma}; series diverges"
        )

    a_np = np.array(nums, dtype=complex)
    b_np = np.array(all_dens, dtype=complex)

    def block_terms(t_prev: complex, start: int, size: int) -> np.ndarray:
        ks = np.arange(start - 1, start - 1 + size, dtype=float)
        ratios = np.ones(size, dtype=complex)
        for a in a_np:
            ratios *= a + ks
        for b in b_np:
            ratios /= b + ks
        return t_prev * np.cumprod(ratios)

    acc = _Accum()
    acc.add(1.0 + 0j)
    count = 1
    t_cur = 1.0 + 0j
    streak = 0
    block = ctrl.tail_window
    stopped = False
    while count < ctrl.n_max:
        size = min(block, ctrl.n_max - count)
        terms = block_terms(t_cur, count, size)
        partials = acc.total() + np.cumsum(terms)
        below = np.abs(terms) < ctrl.rel_tol * np.abs(partials)
        idx = _stop_index(below, streak)
        if idx is not None:
            kept = terms[: idx + 1]
            acc.add(complex(np.sum(kept)))
            t_cur = complex(terms[idx])
            count += idx + 1
            stopped = True
            break
        acc.add(complex(np.sum(terms)))
        t_cur = complex(terms[-1])
        streak = _trailing_streak(below, streak)
        count += size
        block = min(block * 2, 65536)

    # `count` terms are in; t_cur is the last included term
    big_n = count
    t_next = t_cur * _term_ratio(nums, all_dens, big_n - 1)
    v1 = acc.total() + t_next * big_n / sigma

    # doubling validation: push to 2N with the stop test off
    while count < 2 * big_n:
        size = min(65536, 2 * big_n - count)
        terms = block_terms(t_cur, count, size)
        acc.add(complex(np.sum(terms)))
        t_cur = complex(terms[-1])
        count += size
    t_next = t_cur * _term_ratio(nums, all_dens, count - 1)
    v2 = acc.total() + t_next * count / sigma
    err = abs(v1 - v2)
    converged = stopped and err <= ctrl.rel_tol * abs(v2)
    return SeriesResult(v2, count, err, converged)


# ---------------------------------------------------------------------------
# the starred 4F3 and the hyperplane point types
# ---------------------------------------------------------------------------


def _check_saalschutz_args(args7):
    A, B, C, D, E, F, G = args7
    if abs((E + F + G) - (A + B + C + D) - 1.0) > 1e-9:
        raise EvaluationDomainError("parameters leave the unit-shift hyperplane")


def f43_star_log(args7, ctrl: SeriesCtrl = None):
    """Gamma-prefactored Saalschutzian 4F3(1) in log space.

    Returns (LogC of Gamma[A,B,C,D / E,F,G] * 4F3, the raw SeriesResult).
    """
    A, B, C, D, E, F, G = [complex(z) for z in args7]
    _check_saalschutz_args((A, B, C, D, E, F, G))
    res = sum_pfq((A, B, C, D), (E, F, G), ctrl)
    pref = _lgamma_sum((A, B, C, D)) - _lgamma_sum((E, F, G))
    return pref + LogC.from_complex(res.value), res


def f43_star(args7, ctrl: SeriesCtrl = None) -> SeriesResult:
    lc, res = f43_star_log(args7, ctrl)
    scale = abs((lc - LogC.from_complex(res.value)).to_complex()) if res.value != 0 else 1.0
    return SeriesResult(lc.to_complex(), res.terms_used, res.err_estimate * scale, res.converged)


@dataclass(frozen=True)
class PointW:
    """Eight-slot parameter point; the last coordinate is always derived."""

    a: complex
    b: complex
    c: complex
    d: complex
    e: complex
    f: complex
    g: complex

    @property
    def h(self) -> complex:
        return 2 + 3 * self.a - (self.b + self.c + self.d + self.e + self.f + self.g)

    def args(self):
        return (self.a, self.b, self.c, self.d, self.e, self.f, self.g, self.h)

    @classmethod
    def from_mapping(cls, data) -> "PointW":
        vals = {}
        for k in "abcdefg":
            re, im = data[k]
            vals[k] = complex(re, im)
        if "h" in data:
            raise ValueError("the last coordinate is derived; do not supply it")
        return cls(**vals)


@dataclass(frozen=True)
class PointV:
    """Seven-slot parameter point; the last coordinate is always derived."""

    A: complex
    B: complex
    C: complex
    D: complex
    E: complex
    F: complex

    @property
    def G(self) -> complex:
        return 1 + self.A + self.B + self.C + self.D - self.E - self.F

    def args(self):
        return (self.A, self.B, self.C, self.D, self.E, self.F, self.G)

    @classmethod
    def from_mapping(cls, data) -> "PointV":
        vals = {}
        for k in "ABCDEF":
            re, im = data[k]
            vals[k] = complex(re, im)
        if "G" in data:
            raise ValueError("the last coordinate is derived; do not supply it")
        return cls(**vals)


def _seven(x):
    if isinstance(x, PointV):
        return x.args()
    args = tuple(complex(z) for z in x)
    if len(args) != 7:
        raise ValueError("need seven parameter values")
    return args


def _eight(w):
    if isinstance(w, PointW):
        return w.args()
    args = tuple(complex(z) for z in w)
    if len(args) != 8:
        raise ValueError("need eight parameter values")
    return args


# ---------------------------------------------------------------------------
# degeneracy probes
# ---------------------------------------------------------------------------


def j_probe_args(args7):
    """(gamma arguments, sine arguments) whose margins the J evaluation needs."""
    A, B, C, D, E, F, G = args7
    gammas = (
        A, B, C, D, E, F, G,
        1 + A - E, 1 + A - F, 1 + A - G,
        1 + A - B, 1 + A - C, 1 + A - D,
    )
    return gammas, (A,)


def l_probe_args(args7):
    A, B, C, D, E, F, G = args7
    gammas = (
        A, B, C, D, E, F, G,
        1 - E + A, 1 - E + B, 1 - E + C, 1 - E + D,
        2 - E, 1 + F - E, 1 + G - E,
    )
    return gammas, (E,)


def l7f6_probe_args(args7):
    A, B, C, D, E, F, G = args7
    a = D + G - E
    b, c, d, e, f = G - A, G - B, G - C, D, 1 + D - E
    gammas = (
        1 + a, 0.5 * a,
        1 + a - b, 1 + a - c, 1 + a - d, 1 + a - e, 1 + a - f,
        2 + 2 * a - b - c - d - e - f,
    )
    return gammas, ()


def m_probe_args(args8):
    a, b, c, d, e, f, g, h = args8
    rest = (c, d, e, f, g, h)
    gammas = [b, *rest]
    gammas += [b - a + t for t in rest]
    gammas += [1 + a, 0.5 * a]
    gammas += [1 + a - t for t in (b, *rest)]
    ap = 2 * b - a
    gammas += [1 + ap, 0.5 * ap, 1 + b - a]
    gammas += [1 + b - t for t in rest]
    return tuple(gammas), (b - a,)


def require_margins(gammas, sins, gamma_margin: float = GAMMA_MARGIN, sin_margin: float = SIN_MARGIN):
    """Raise unless every gamma argument clears the pole margin and every
    sine argument clears the integer margin."""
    for z in gammas:
        if _near_nonpos_int(complex(z), gamma_margin):
            raise DegeneratePointError(
                f"gamma argument {complex(z)} within {gamma_margin} of a pole"
            )
    for z in sins:
        if _dist_to_int(complex(z)) < sin_margin:
            raise DegeneratePointError(
                f"sine argument {complex(z)} within {sin_margin} of an integer"
            )


def margins_ok(gammas, sins, gamma_margin: float = GAMMA_MARGIN, sin_margin: float = SIN_MARGIN) -> bool:
    try:
        require_margins(gammas, sins, gamma_margin, sin_margin)
    except DegeneratePointError:
        return False
    return True


# ---------------------------------------------------------------------------
# the three function families
# ---------------------------------------------------------------------------


def _warn_if_cancelled(ratio: float, what: str):
    if ratio < 1e-9:
        warnings.warn(
            f"{what}: terms cancel to {ratio:.1e} of their size; "
            "fewer than 9 significant digits remain",
            PrecisionWarning,
            stacklevel=3,
        )


def eval_J_log(x, ctrl: SeriesCtrl = None) -> LogC:
    """Log of the sum-of-complementary-series function J(A;B,C,D;E,F,G)."""
    A, B, C, D, E, F, G = _seven(x)
    require_margins(*j_probe_args((A, B, C, D, E, F, G)))
    f1, _ = f43_star_log((A, B, C, D, E, F, G), ctrl)
    f2, _ = f43_star_log(
        (A, 1 + A - E, 1 + A - F, 1 + A - G, 1 + A - B, 1 + A - C, 1 + A - D), ctrl
    )
    den = log_sin_pi(A) + _lgamma_sum(
        (A, B, C, D, A, 1 + A - E, 1 + A - F, 1 + A - G)
    )
    combo, ratio = combine_exponentials([f1 - den, f2 - den], [1.0, 1.0])
    _warn_if_cancelled(ratio, "J evaluation")
    return combo


def eval_J(x, ctrl: SeriesCtrl = None) -> complex:
    return eval_J_log(x, ctrl).to_complex()


def eval_K(x, ctrl: SeriesCtrl = None) -> complex:
    """sin(pi A) Gamma(A) * J, the unrenormalized companion."""
    A = _seven(x)[0]
    return (log_sin_pi(A) + lgamma(A) + eval_J_log(x, ctrl)).to_complex()


def eval_L_log(args, ctrl: SeriesCtrl = None) -> LogC:
    """Log of the difference-of-supplementary-series function L(A,B,C,D;E;F,G)."""
    A, B, C, D, E, F, G = _seven(args)
    require_margins(*l_probe_args((A, B, C, D, E, F, G)))
    f1, _ = f43_star_log((A, B, C, D, E, F, G), ctrl)
    f2, _ = f43_star_log(
        (1 + A - E, 1 + B - E, 1 + C - E, 1 + D - E, 2 - E, 1 + F - E, 1 + G - E),
        ctrl,
    )
    den = log_sin_pi(E) + _lgamma_sum(
        (A, B, C, D, 1 - E + A, 1 - E + B, 1 - E + C, 1 - E + D)
    )
    combo, ratio = combine_exponentials([f1 - den, f2 - den], [1.0, -1.0])
    _warn_if_cancelled(ratio, "L evaluation")
    return combo


def eval_L(args, ctrl: SeriesCtrl = None) -> complex:
    return eval_L_log(args, ctrl).to_complex()


def eval_L_7f6_log(args, ctrl: SeriesCtrl = None) -> LogC:
    """Log of the very-well-poised 7F6 route to the same function."""
    A, B, C, D, E, F, G = _seven(args)
    if (F - D).real <= 0:
        raise DegeneratePointError(
            "the 7F6 route needs Re(F - D) > 0; "
            f"got {(F - D).real}"
        )
    a = D + G - E
    b, c, d, e, f = G - A, G - B, G - C, D, 1 + D - E
    require_margins(*l7f6_probe_args((A, B, C, D, E, F, G)))
    nums = (a, 1 + 0.5 * a, b, c, d, e, f)
    dens = (0.5 * a, 1 + a - b, 1 + a - c, 1 + a - d, 1 + a - e, 1 + a - f)
    res = sum_pfq(nums, dens, ctrl)
    pref = (
        lgamma(1 + a)
        - LogC.from_real(math.pi)
        - _lgamma_sum(
            (1 + a - b, 1 + a - c, 1 + a - d, 1 + a - e, 1 + a - f,
             2 + 2 * a - b - c - d - e - f)
        )
    )
    return pref + LogC.from_complex(res.value)


def eval_L_7f6(args, ctrl: SeriesCtrl = None) -> complex:
    return eval_L_7f6_log(args, ctrl).to_complex()


def _v_half_log(head: complex, params, ctrl: SeriesCtrl) -> LogC:
    # (pi/2) Gamma[1+head, params / 1+head-params] * 9F8 at unit argument
    nums = (head, 1 + 0.5 * head) + tuple(params)
    dens = (0.5 * head,) + tuple(1 + head - p for p in params)
    res = sum_pfq(nums, dens, ctrl)
    pref = (
        LogC.from_real(0.5 * math.pi)
        + lgamma(1 + head)
        + _lgamma_sum(params)
        - _lgamma_sum([1 + head - p for p in params])
    )
    return pref + LogC.from_complex(res.value)


def eval_M_log(w, ctrl: SeriesCtrl = None) -> LogC:
    """Log of the eight-parameter function M(a;b;c,d,e,f,g,h).

    Both very-well-poised halves and the shared sine/gamma denominator are
    assembled in log space; the two halves meet in one rescaled subtraction,
    with a warning if more than nine digits cancel.
    """
    a, b, c, d, e, f, g, h = _eight(w)
    if abs((2 + 3 * a) - (b + c + d + e + f + g + h)) > 1e-9:
        raise EvaluationDomainError("parameters leave the defining hyperplane")
    require_margins(*m_probe_args((a, b, c, d, e, f, g, h)))
    rest = (c, d, e, f, g, h)
    v1 = _v_half_log(a, (b,) + rest, ctrl)
    v2 = _v_half_log(2 * b - a, (b,) + tuple(b - a + t for t in rest), ctrl)
    den = log_sin_pi(b - a) + _lgamma_sum(
        (b,) + rest + tuple(b - a + t for t in rest)
    )
    combo, ratio = combine_exponentials([v1 - den, v2 - den], [1.0, -1.0])
    _warn_if_cancelled(ratio, "M evaluation")
    return combo


def eval_M(w, ctrl: SeriesCtrl = None) -> complex:
    return eval_M_log(w, ctrl).to_complex()


def twiddle_params(x0, x1, x2, x3, x4, x5):
    """Seven parameters from six free coordinates; the unit-shift identity
    then holds identically."""
    s = 0.5 + x0 + x1 + x2
    A = s + x3 + x4 + x5
    B = s - x3 - x4 + x5
    C = s + x3 - x4 - x5
    D = s - x3 + x4 - x5
    E = 1 + 2 * x1 + 2 * x2
    F = 1 + 2 * x0 + 2 * x1
    G = 1 + 2 * x0 + 2 * x2
    return (A, B, C, D, E, F, G)
