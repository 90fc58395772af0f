"""Scalar hypergeometric kernel.

Everything in the library reduces to the primitives collected here:
rising factorials, gamma-function ratios, terminating hypergeometric
sums, the Gauss 2F1 with a multi-route evaluation ladder, the confluent
1F1, the two-variable Appell F1 and Humbert Phi1 series, and a
tanh-sinh quadrature for Euler-type integrals over (0, 1).

All routines accept real or complex scalars and keep real inputs real.
Infinite series follow one stopping rule: summation ends once two
consecutive terms are below ``rel_tol`` times the running partial sum,
and raises :class:`~assocpoly.errors.NotConverged` (carrying the
partial outcome) if ``max_terms`` is hit first.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from scipy.special import gammaln, gammasgn, loggamma

from .errors import (
    DenominatorPole,
    DomainError,
    IllConditioned,
    NotConverged,
    PoleArgument,
    QuadratureNotConverged,
    SingularIntegrand,
    ZeroPochhammer,
)

__all__ = [
    "SeriesConfig",
    "EvalOutcome",
    "EulerIntegrand",
    "pochhammer",
    "pochhammer_log",
    "gamma_value",
    "gamma_ratio",
    "hyp_terminating",
    "gauss_2f1",
    "kummer_1f1",
    "appell_f1",
    "humbert_phi1",
    "euler_integral",
]

_NONPOS_INT_TOL = 1e-9
_POLE_TOL = 1e-12
_NEAR_INT_TOL = 1e-6


@dataclass(frozen=True)
class SeriesConfig:
    """Tolerances and caps shared by all series summations."""

    rel_tol: float = 1e-14
    max_terms: int = 10000
    use_compensated_sum: bool = True

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise ValueError("rel_tol must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be at least 1")


_DEFAULT_CFG = SeriesConfig()


@dataclass(frozen=True)
class EvalOutcome:
    """Value of a summation together with convergence metadata.

    Attributes
    ----------
    value : float or complex
        The computed value.
    converged : bool
        True when the stopping rule was met (or the result is exact).
    terms_used : int
        Number of terms (or quadrature nodes) consumed.
    err_estimate : float
        Magnitude of the last neglected contribution; 0.0 for exact
        closed-form branches.
    """

    value: complex
    converged: bool
    terms_used: int
    err_estimate: float


class Accumulator:
    """Compensated (Kahan) scalar accumulator; works for real or complex."""

    __slots__ = ("value", "_comp", "_compensated")

    def __init__(self, compensated=True):
        self.value = 0.0
        self._comp = 0.0
        self._compensated = compensated

    def add(self, term):
        if not self._compensated:
            self.value = self.value + term
            return
        y = term - self._comp
        t = self.value + y
        self._comp = (t - self.value) - y
        self.value = t


# ---------------------------------------------------------------------------
# Small scalar helpers
# ---------------------------------------------------------------------------


def _is_complex(*vals):
    return any(isinstance(v, complex) for v in vals)


def _power(base, exponent):
    # Python itself promotes negative-real ** fractional to complex,
    # but (0.0)**negative raises; route through cmath only when needed.
    if _is_complex(base, exponent):
        return complex(base) ** complex(exponent)
    return base ** exponent


def _exp(z):
    return cmath.exp(z) if isinstance(z, complex) else math.exp(z)


def _real(z):
    return z.real if isinstance(z, complex) else z


def _nonpos_int_degree(w, tol=_NONPOS_INT_TOL):
    """Return m >= 0 when w is within tol of the nonpositive integer -m, else None."""
    re = _real(w)
    im = w.imag if isinstance(w, complex) else 0.0
    if abs(im) > tol:
        return None
    r = round(re)
    if r > 0 or abs(re - r) > tol:
        return None
    return -int(r)


def _near_integer(w, tol=_NEAR_INT_TOL):
    re = _real(w)
    im = w.imag if isinstance(w, complex) else 0.0
    return abs(im) <= tol and abs(re - round(re)) <= tol


def _close(u, v, tol=1e-12):
    return abs(u - v) <= tol


# ---------------------------------------------------------------------------
# Rising factorials and gamma ratios
# ---------------------------------------------------------------------------


def pochhammer(a, k):
    """Rising factorial (a)_k = a (a+1) ... (a+k-1) for integer k >= 0.

    Parameters
    ----------
    a : float or complex
        Base of the rising factorial.
    k : int
        Nonnegative number of factors.

    Returns
    -------
    float or complex
        The exact product; real input gives real output.  If the
        product overflows binary64 and no factor is zero, the value is
        recomputed in log space and ``OverflowError`` is raised when it
        still exceeds the representable range.
    """
    if not isinstance(k, int) or k < 0:
        raise ValueError("k must be a nonnegative integer")
    result = 1.0
    for j in range(k):
        result = result * (a + j)
        if result == 0:
            return result
    mag = abs(result)
    if math.isinf(mag) or math.isnan(mag):
        raise OverflowError(f"pochhammer({a!r}, {k}) exceeds binary64 range")
    return result


def pochhammer_log(a, k):
    """Log-magnitude and phase of the rising factorial (a)_k.

    Returns
    -------
    (float, float or complex)
        ``(log_magnitude, phase)`` with ``phase`` of unit modulus
        (for real ``a`` it is +-1.0).  Raises
        :class:`~assocpoly.errors.ZeroPochhammer` when a factor is zero.
    """
    if not isinstance(k, int) or k < 0:
        raise ValueError("k must be a nonnegative integer")
    logmag = 0.0
    phase = 1.0
    for j in range(k):
        f = a + j
        m = abs(f)
        if m == 0:
            raise ZeroPochhammer(f"({a!r})_{k} has a zero factor at offset {j}")
        logmag += math.log(m)
        phase = phase * (f / m)
    return logmag, phase


def gamma_value(w):
    """Gamma(w) with an explicit pole error at nonpositive integers."""
    if _nonpos_int_degree(w, _POLE_TOL) is not None:
        raise PoleArgument(f"gamma pole at {w!r}")
    if isinstance(w, complex):
        return cmath.exp(loggamma(w))
    return math.gamma(w)


def gamma_ratio(z, a, b):
    """Gamma(z + a) / Gamma(z + b) evaluated in log space.

    Parameters
    ----------
    z, a, b : float or complex
        The ratio arguments; the two gamma arguments are ``z + a`` and
        ``z + b``.

    Returns
    -------
    float or complex
        The ratio.  Raises :class:`~assocpoly.errors.PoleArgument` when
        either gamma argument is within 1e-12 of a nonpositive integer.
    """
    za, zb = z + a, z + b
    for w in (za, zb):
        if _nonpos_int_degree(w, _POLE_TOL) is not None:
            raise PoleArgument(f"gamma pole at {w!r}")
    if _is_complex(za, zb):
        return cmath.exp(loggamma(complex(za)) - loggamma(complex(zb)))
    sign = float(gammasgn(za)) * float(gammasgn(zb))
    return sign * math.exp(float(gammaln(za)) - float(gammaln(zb)))


def _gamma_quotient(numerators, denominators):
    """prod Gamma(n_i) / prod Gamma(d_j) with pole handling.

    A pole in a numerator raises PoleArgument; a pole in a denominator
    makes the whole quotient exactly zero (reciprocal gamma is entire).
    """
    for w in numerators:
        if _nonpos_int_degree(w, _POLE_TOL) is not None:
            raise PoleArgument(f"gamma pole at {w!r}")
    for w in denominators:
        if _nonpos_int_degree(w, _POLE_TOL) is not None:
            return 0.0
    if _is_complex(*numerators, *denominators):
        s = 0.0 + 0.0j
        for w in numerators:
            s += loggamma(complex(w))
        for w in denominators:
            s -= loggamma(complex(w))
        return cmath.exp(s)
    logmag = 0.0
    sign = 1.0
    for w in numerators:
        logmag += float(gammaln(w))
        sign *= float(gammasgn(w))
    for w in denominators:
        logmag -= float(gammaln(w))
        sign *= float(gammasgn(w))
    return sign * math.exp(logmag)


# ---------------------------------------------------------------------------
# Terminating hypergeometric sums
# ---------------------------------------------------------------------------


def hyp_terminating(num_params, den_params, arg, top_index, cfg=None):
    """Finite hypergeometric sum sum_{j=0}^{top_index} term_j.

    ``term_j = prod (n_i)_j / prod (d_i)_j * arg^j / j!`` with the
    convention that a numerator factor hitting exactly zero terminates
    the sum (all later terms vanish), while a denominator factor
    hitting zero raises :class:`~assocpoly.errors.DenominatorPole`.
    A denominator parameter exactly equal to a numerator parameter is
    cancelled against it before summation.

    Parameters
    ----------
    num_params : sequence of float or complex
        Numerator parameters; at least one must be within 1e-9 of
        ``-top_index`` so the sum is genuinely terminating.
    den_params : sequence of float or complex
        Denominator parameters.
    arg : float or complex
        Series argument.
    top_index : int
        Last retained index (the polynomial degree).
    cfg : SeriesConfig, optional
        Only ``use_compensated_sum`` is consulted.

    Returns
    -------
    float or complex
        The finite sum.
    """
    cfg = cfg or _DEFAULT_CFG
    if not isinstance(top_index, int) or top_index < 0:
        raise ValueError("top_index must be a nonnegative integer")
    nums = list(num_params)
    if not any(abs(p + top_index) <= _NONPOS_INT_TOL for p in nums):
        raise ValueError(
            f"no numerator parameter matches -top_index = {-top_index}"
        )
    # Cancel denominator parameters exactly equal to numerator ones.
    dens = []
    for d in den_params:
        if d in nums:
            nums.remove(d)
        else:
            dens.append(d)
    if top_index == 0 or arg == 0:
        return 1.0
    acc = Accumulator(cfg.use_compensated_sum)
    term = 1.0
    acc.add(term)
    for j in range(top_index):
        numprod = 1.0
        for p in nums:
            numprod = numprod * (p + j)
        if numprod == 0:
            break
        denprod = 1.0
        for q in dens:
            denprod = denprod * (q + j)
        if denprod == 0:
            raise DenominatorPole(
                f"denominator factor vanishes at offset {j} in terminating sum"
            )
        term = term * numprod / denprod * arg / (j + 1)
        acc.add(term)
    return acc.value


# ---------------------------------------------------------------------------
# Gauss 2F1
# ---------------------------------------------------------------------------


def _series_2f1(a, b, c, z, cfg):
    acc = Accumulator(cfg.use_compensated_sum)
    term = 1.0
    acc.add(term)
    prev_abs = abs(term)
    small_streak = 0
    for n in range(cfg.max_terms):
        term = term * (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        acc.add(term)
        t_abs = abs(term)
        if t_abs <= cfg.rel_tol * abs(acc.value):
            small_streak += 1
            if small_streak >= 2:
                return EvalOutcome(acc.value, True, n + 2, max(t_abs, prev_abs))
        else:
            small_streak = 0
        prev_abs = t_abs
    raise NotConverged(
        f"2F1 series did not converge in {cfg.max_terms} terms at z={z!r}",
        outcome=EvalOutcome(acc.value, False, cfg.max_terms, prev_abs),
    )


def _scaled_outcome(factor, inner):
    return EvalOutcome(
        factor * inner.value,
        inner.converged,
        inner.terms_used,
        abs(factor) * inner.err_estimate,
    )


def _connection_2f1(a, b, c, z, cfg):
    # 1/(1-z) connection formula, valid when a - b is not an integer.
    w = 1.0 / (1.0 - z)
    terms_used = 0
    err = 0.0
    coef1 = _gamma_quotient([c, b - a], [b, c - a])
    if coef1 == 0:
        term1 = 0.0
    else:
        inner = _series_2f1(a, c - b, a - b + 1.0, w, cfg)
        terms_used += inner.terms_used
        scale = coef1 * _power(1.0 - z, -a)
        term1 = scale * inner.value
        err += abs(scale) * inner.err_estimate
    coef2 = _gamma_quotient([c, a - b], [a, c - b])
    if coef2 == 0:
        term2 = 0.0
    else:
        inner = _series_2f1(b, c - a, b - a + 1.0, w, cfg)
        terms_used += inner.terms_used
        scale = coef2 * _power(1.0 - z, -b)
        term2 = scale * inner.value
        err += abs(scale) * inner.err_estimate
    return EvalOutcome(term1 + term2, True, max(terms_used, 1), err)


def gauss_2f1(a, b, c, z, cfg=None, one_exclusion_radius=0.05):
    """Gauss hypergeometric function 2F1(a, b; c; z).

    The evaluation ladder, in order: exact elementary cases
    (``z = 0``, ``b = c``, ``a = c``), terminating series when ``a`` or
    ``b`` is within 1e-9 of a nonpositive integer (truncating at the
    smaller degree), the Gauss summation at ``z = 1`` when
    ``Re(c-a-b) > 0``, the direct series for ``|z| <= 0.5``, the
    z/(z-1) transformed series for ``|z/(z-1)| <= 0.5``, the 1/(1-z)
    connection formula for ``|1-z| >= 2`` when ``a - b`` stays at least
    1e-6 away from the integers, then the slow direct and transformed
    series up to radius 0.95, and finally the direct series on the rest
    of the open unit disk when ``Re(c-a-b) > 0`` (absolutely convergent
    there).

    Parameters
    ----------
    a, b, c : float or complex
        Parameters; ``c`` within 1e-12 of a nonpositive integer raises
        :class:`~assocpoly.errors.PoleArgument` unless an earlier exact
        or terminating branch applies.
    z : float or complex
        Argument.
    cfg : SeriesConfig, optional
        Series tolerances.
    one_exclusion_radius : float, optional
        Radius of the disk around ``z = 1`` inside which evaluation is
        refused (raising :class:`~assocpoly.errors.DomainError`) when
        ``Re(c-a-b) <= 0``.

    Returns
    -------
    EvalOutcome
        Value plus convergence metadata.
    """
    cfg = cfg or _DEFAULT_CFG
    if z == 0:
        return EvalOutcome(1.0, True, 1, 0.0)
    if _close(b, c):
        return EvalOutcome(_power(1.0 - z, -a), True, 1, 0.0)
    if _close(a, c):
        return EvalOutcome(_power(1.0 - z, -b), True, 1, 0.0)
    na = _nonpos_int_degree(a)
    nb = _nonpos_int_degree(b)
    if na is not None or nb is not None:
        degrees = [d for d in (na, nb) if d is not None]
        top = min(degrees)
        val = hyp_terminating([a, b], [c], z, top, cfg)
        return EvalOutcome(val, True, top + 1, 0.0)
    if _nonpos_int_degree(c, _POLE_TOL) is not None:
        raise PoleArgument(f"2F1 denominator parameter c={c!r} is a gamma pole")
    s = c - a - b
    if z == 1:
        if _real(s) > 0:
            val = _gamma_quotient([c, s], [c - a, c - b])
            return EvalOutcome(val, True, 1, 0.0)
        raise DomainError("2F1 at z=1 requires Re(c-a-b) > 0")
    if abs(1.0 - z) < one_exclusion_radius and _real(s) <= 0:
        raise DomainError(
            f"2F1 argument z={z!r} is inside the exclusion disk around 1 "
            "with Re(c-a-b) <= 0"
        )
    if abs(z) <= 0.5:
        return _series_2f1(a, b, c, z, cfg)
    zp = z / (z - 1.0)
    if abs(zp) <= 0.5:
        inner = _series_2f1(a, c - b, c, zp, cfg)
        return _scaled_outcome(_power(1.0 - z, -a), inner)
    conn_ready = abs(1.0 - z) >= 2.0
    ab_near_int = _near_integer(a - b)
    if conn_ready and not ab_near_int:
        return _connection_2f1(a, b, c, z, cfg)
    if abs(z) <= 0.95:
        return _series_2f1(a, b, c, z, cfg)
    if abs(zp) <= 0.95:
        inner = _series_2f1(a, c - b, c, zp, cfg)
        return _scaled_outcome(_power(1.0 - z, -a), inner)
    if conn_ready and ab_near_int:
        raise IllConditioned(
            f"only the 1/(1-z) connection formula reaches z={z!r}, but "
            f"a-b={a - b!r} is within 1e-6 of an integer"
        )
    if abs(z) < 1.0 and _real(s) > 0:
        # Absolutely convergent up to the unit circle; slow but honest.
        return _series_2f1(a, b, c, z, cfg)
    raise DomainError(f"no evaluation route for 2F1 at z={z!r}")


# ---------------------------------------------------------------------------
# Confluent 1F1
# ---------------------------------------------------------------------------


def _series_1f1(a, b, z, cfg):
    acc = Accumulator(cfg.use_compensated_sum)
    term = 1.0
    acc.add(term)
    prev_abs = abs(term)
    small_streak = 0
    for n in range(cfg.max_terms):
        term = term * (a + n) / ((b + n) * (n + 1)) * z
        acc.add(term)
        t_abs = abs(term)
        if t_abs <= cfg.rel_tol * abs(acc.value):
            small_streak += 1
            if small_streak >= 2:
                return EvalOutcome(acc.value, True, n + 2, max(t_abs, prev_abs))
        else:
            small_streak = 0
        prev_abs = t_abs
    raise NotConverged(
        f"1F1 series did not converge in {cfg.max_terms} terms at z={z!r}",
        outcome=EvalOutcome(acc.value, False, cfg.max_terms, prev_abs),
    )


def kummer_1f1(a, b, z, cfg=None):
    """Confluent hypergeometric function 1F1(a; b; z).

    Uses the direct series for ``Re(z) >= 0`` and the Kummer
    transformation ``exp(z) 1F1(b-a; b; -z)`` otherwise, so the summed
    series always has a nonnegative-real argument.

    Returns
    -------
    EvalOutcome
    """
    cfg = cfg or _DEFAULT_CFG
    if _nonpos_int_degree(b, _POLE_TOL) is not None:
        raise PoleArgument(f"1F1 denominator parameter b={b!r} is a gamma pole")
    if z == 0:
        return EvalOutcome(1.0, True, 1, 0.0)
    na = _nonpos_int_degree(a)
    if na is not None:
        val = hyp_terminating([a], [b], z, na, cfg)
        return EvalOutcome(val, True, na + 1, 0.0)
    if _real(z) < 0:
        inner = _series_1f1(b - a, b, -z, cfg)
        return _scaled_outcome(_exp(z), inner)
    return _series_1f1(a, b, z, cfg)


# ---------------------------------------------------------------------------
# Appell F1 and Humbert Phi1 (single-sum evaluations)
# ---------------------------------------------------------------------------


def _f1_series(alpha, beta1, beta2, sigma, x, y, cfg):
    acc = Accumulator(cfg.use_compensated_sum)
    coef = 1.0
    terms_total = 0
    prev_abs = math.inf
    small_streak = 0
    for m in range(cfg.max_terms):
        if coef == 0:
            return EvalOutcome(acc.value, True, max(terms_total, 1), 0.0)
        inner = gauss_2f1(alpha + m, beta2, sigma + m, y, cfg)
        term = coef * inner.value
        acc.add(term)
        terms_total += inner.terms_used
        t_abs = abs(term)
        if t_abs <= cfg.rel_tol * abs(acc.value):
            small_streak += 1
            if small_streak >= 2:
                return EvalOutcome(acc.value, True, terms_total, max(t_abs, prev_abs))
        else:
            small_streak = 0
        prev_abs = t_abs
        coef = coef * (alpha + m) * (beta1 + m) / ((sigma + m) * (m + 1)) * x
    raise NotConverged(
        f"Appell F1 series did not converge in {cfg.max_terms} terms",
        outcome=EvalOutcome(acc.value, False, terms_total, prev_abs),
    )


def appell_f1(alpha, beta1, beta2, sigma, x, y, cfg=None):
    """Appell hypergeometric function F1(alpha; beta1, beta2; sigma; x, y).

    Evaluated as a single series over powers of ``x`` whose
    coefficients are Gauss 2F1 values in ``y``.  Inside the bidisk
    ``max(|x|, |y|) < 1`` the series is summed directly; otherwise the
    (x/(x-1), y/(y-1)) transformation is applied once, and arguments
    still outside the bidisk raise
    :class:`~assocpoly.errors.DomainError`.

    Returns
    -------
    EvalOutcome
    """
    cfg = cfg or _DEFAULT_CFG
    if _nonpos_int_degree(sigma, _POLE_TOL) is not None:
        raise PoleArgument(f"F1 denominator parameter sigma={sigma!r} is a gamma pole")
    if max(abs(x), abs(y)) < 1.0:
        return _f1_series(alpha, beta1, beta2, sigma, x, y, cfg)
    if x == 1 or y == 1:
        raise DomainError("F1 transformation is singular at x=1 or y=1")
    xp = x / (x - 1.0)
    yp = y / (y - 1.0)
    if max(abs(xp), abs(yp)) < 1.0:
        inner = _f1_series(sigma - alpha, beta1, beta2, sigma, xp, yp, cfg)
        factor = _power(1.0 - x, -beta1) * _power(1.0 - y, -beta2)
        return _scaled_outcome(factor, inner)
    raise DomainError(
        f"F1 arguments (x={x!r}, y={y!r}) lie outside the bidisk even after "
        "the Pfaff-type transformation"
    )


def humbert_phi1(alpha1, lam, alpha2, x, y, cfg=None):
    """Humbert confluent function Phi1(alpha1, lam; alpha2; x, y).

    Evaluated as a single series over powers of ``x`` whose
    coefficients are confluent 1F1 values in ``y``; requires
    ``|x| < 1``.

    Returns
    -------
    EvalOutcome
    """
    cfg = cfg or _DEFAULT_CFG
    if _nonpos_int_degree(alpha2, _POLE_TOL) is not None:
        raise PoleArgument(
            f"Phi1 denominator parameter alpha2={alpha2!r} is a gamma pole"
        )
    if abs(x) >= 1.0:
        raise DomainError(f"Phi1 requires |x| < 1, got x={x!r}")
    acc = Accumulator(cfg.use_compensated_sum)
    coef = 1.0
    terms_total = 0
    prev_abs = math.inf
    small_streak = 0
    for m in range(cfg.max_terms):
        if coef == 0:
            return EvalOutcome(acc.value, True, max(terms_total, 1), 0.0)
        inner = kummer_1f1(alpha1 + m, alpha2 + m, y, cfg)
        term = coef * inner.value
        acc.add(term)
        terms_total += inner.terms_used
        t_abs = abs(term)
        if t_abs <= cfg.rel_tol * abs(acc.value):
            small_streak += 1
            if small_streak >= 2:
                return EvalOutcome(acc.value, True, terms_total, max(t_abs, prev_abs))
        else:
            small_streak = 0
        prev_abs = t_abs
        coef = coef * (alpha1 + m) * (lam + m) / ((alpha2 + m) * (m + 1)) * x
    raise NotConverged(
        f"Phi1 series did not converge in {cfg.max_terms} terms",
        outcome=EvalOutcome(acc.value, False, terms_total, prev_abs),
    )


# ---------------------------------------------------------------------------
# Euler-type integrals on (0, 1) via tanh-sinh quadrature
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EulerIntegrand:
    """Integrand u^(gamma-1) * prod (1 - b_i u)^(e_i) * exp(exp_scale * u).

    Attributes
    ----------
    gamma : float or complex
        Endpoint exponent; the integral requires ``Re(gamma) > 0``.
    factors : tuple of (base, exponent) pairs
        Each contributes ``(1 - base*u)**exponent``.
    exp_scale : float or complex
        Optional exponential factor scale (0 disables it).
    """

    gamma: complex
    factors: tuple = ()
    exp_scale: complex = 0.0


def _tanh_sinh_node(s):
    """Return (u, 1-u, log u, log(1-u), log w) for the tanh-sinh map on (0,1)."""
    q = 0.5 * math.pi * math.sinh(s)
    m2q = -2.0 * abs(q)
    em = math.exp(m2q)
    log1pem = math.log1p(em)
    if q >= 0:
        u = 1.0 / (1.0 + em)
        one_minus_u = em / (1.0 + em)
        log_u = -log1pem
        log_1mu = m2q - log1pem
    else:
        u = em / (1.0 + em)
        one_minus_u = 1.0 / (1.0 + em)
        log_u = m2q - log1pem
        log_1mu = -log1pem
    log_w = math.log(math.pi * math.cosh(s)) + m2q - 2.0 * log1pem
    return u, one_minus_u, log_u, log_1mu, log_w


def _euler_node_value(spec, s):
    u, one_minus_u, log_u, _log_1mu, log_w = _tanh_sinh_node(s)
    expo = (spec.gamma - 1.0) * log_u + log_w
    if spec.exp_scale != 0:
        expo = expo + spec.exp_scale * u
    val = _exp(expo)
    for base, exponent in spec.factors:
        # 1 - base*u rewritten to stay accurate as u -> 1.
        fac = (1.0 - base) + base * one_minus_u
        val = val * _power(fac, exponent)
    return val


def euler_integral(spec, cfg=None, max_levels=12):
    """Integral over (0, 1) of an :class:`EulerIntegrand`.

    Uses tanh-sinh quadrature with level doubling; endpoint
    singularities of the ``u^(gamma-1)`` type are handled in log space.

    Parameters
    ----------
    spec : EulerIntegrand
        The integrand description.  ``Re(gamma) <= 0`` raises
        :class:`~assocpoly.errors.DomainError`; a real factor base
        ``>= 1`` puts a zero of the factor on (0, 1] and raises
        :class:`~assocpoly.errors.SingularIntegrand`.
    cfg : SeriesConfig, optional
        ``rel_tol`` (floored at 1e-13) is the refinement target.
    max_levels : int, optional
        Maximum number of grid halvings before
        :class:`~assocpoly.errors.QuadratureNotConverged` is raised.

    Returns
    -------
    EvalOutcome
    """
    cfg = cfg or _DEFAULT_CFG
    re_gamma = _real(spec.gamma)
    if re_gamma <= 0:
        raise DomainError(f"Euler integral requires Re(gamma) > 0, got {spec.gamma!r}")
    for base, _exponent in spec.factors:
        if not isinstance(base, complex) and base >= 1.0 - 1e-14:
            raise SingularIntegrand(
                f"factor base {base!r} puts a zero of (1 - b*u) on (0, 1]"
            )
    # Half-width chosen so the u^(gamma-1) endpoint weight and the
    # quadrature weight both decay below binary64 resolution.
    tmax = math.asinh(max(45.0 / (math.pi * min(1.0, re_gamma)), 44.0 / math.pi))
    n0 = 6
    h = tmax / n0
    nodes = 0
    total = Accumulator(cfg.use_compensated_sum)
    for k in range(-n0, n0 + 1):
        total.add(_euler_node_value(spec, k * h))
        nodes += 1
    prev_val = total.value * h
    tol = max(cfg.rel_tol, 1e-13)
    for _level in range(1, max_levels + 1):
        h *= 0.5
        n_half = int(round(tmax / h))
        for k in range(-n_half + 1, n_half, 2):
            total.add(_euler_node_value(spec, k * h))
            nodes += 1
        cur_val = total.value * h
        delta = abs(cur_val - prev_val)
        if delta <= tol * abs(cur_val):
            return EvalOutcome(cur_val, True, nodes, delta)
        prev_val = cur_val
    raise QuadratureNotConverged(
        f"tanh-sinh refinement did not converge within {max_levels} levels"
    )
