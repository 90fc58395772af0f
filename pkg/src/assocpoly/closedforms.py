"""Closed-form representations of the index-shifted polynomial families.

Each function here evaluates one family by a route that is
mathematically independent of the three-term recurrence: finite double
sums whose inner factor is a terminating 4F3(1) or 3F2(1), quadratic
and cross-product combinations of Gauss 2F1 values, the complex
Meixner substitution giving the Meixner-Pollaczek family, and the
classical (gamma = 0) hypergeometric forms.

Two robustness policies apply throughout:

* Denominator rising factorials that vanish inside a summation range
  are rejected with :class:`~assocpoly.errors.DenominatorPole` rather
  than regularized; the affected parameter sets are measure-zero and a
  caller can perturb or switch representation.
* The alternating finite sums are evaluated in binary64 with
  compensated summation while tracking a condition estimate (largest
  intermediate magnitude over the final sum).  When cancellation would
  destroy more digits than the target accuracy allows and all inputs
  are real, the same sum is re-evaluated in exact rational arithmetic
  (:class:`fractions.Fraction`), which is possible because every term
  of these sums is rational in the parameters.

The module also carries the finite-sum hypergeometric identities that
underpin the quadratic representation, as report-producing checkers.
"""

from __future__ import annotations

import cmath
import enum
import math
from fractions import Fraction

from .errors import DenominatorPole, RestrictedParameter
from .hyperkernel import Accumulator, gauss_2f1, hyp_terminating, pochhammer
from .recurrences import MeixnerParams, meixner_seq
from .report import make_report

__all__ = [
    "RepresentationTag",
    "CharlierVariant",
    "LaguerreVariant",
    "meixner_4f3",
    "meixner_4f3_alt",
    "meixner_quadratic",
    "meixner_cross_2f1",
    "meixner_reflection_rhs",
    "charlier_3f2",
    "laguerre_3f2",
    "mp_from_meixner",
    "meixner_c1_degenerate",
    "meixner_classical",
    "charlier_classical",
    "laguerre_classical",
    "identity_4f3_finite_sum",
    "identity_3f2_pochhammer",
    "identity_3f2_t_powered",
    "identity_3f2_m_generalized",
]

_INT_TOL = 1e-8
# Escalate to exact rational arithmetic when the largest intermediate
# magnitude exceeds the final sum by this factor (binary64 then retains
# fewer than ~12 significant digits).
_ESCALATE_COND = 1e4


class RepresentationTag(enum.Enum):
    """Stable names for the available evaluation routes."""

    RECURRENCE = "recurrence"
    MEIXNER_4F3 = "4f3"
    MEIXNER_4F3_ALT = "4f3-alt"
    MEIXNER_QUADRATIC = "quadratic"
    MEIXNER_CROSS = "cross"
    CHARLIER_3F2 = "3f2"
    CHARLIER_3F2_TRANSFORMED = "3f2-transformed"
    LAGUERRE_3F2 = "3f2"
    LAGUERRE_3F2_RAHMAN = "3f2-rahman"
    MP_CONNECTION = "connection"
    DEGENERATE_C1 = "degenerate-c1"
    CLASSICAL = "classical"


class CharlierVariant(enum.Enum):
    PRIMARY = "primary"
    TRANSFORMED = "transformed"


class LaguerreVariant(enum.Enum):
    PRIMARY = "primary"
    RAHMAN = "rahman"


def _near_int_in_range(w, lo, hi, tol=_INT_TOL):
    """Return the integer r in [lo, hi] that w approximates, else None."""
    if isinstance(w, complex):
        if abs(w.imag) > tol:
            return None
        w = w.real
    r = round(w)
    if abs(w - r) > tol or r < lo or r > hi:
        return None
    return int(r)


def _check_n(n):
    if not isinstance(n, int) or n < 0:
        raise ValueError("n must be a nonnegative integer")


def _factorial(n):
    return math.factorial(n)


def _exactable(*vals):
    return all(
        isinstance(v, (int, Fraction))
        or (isinstance(v, float) and math.isfinite(v))
        for v in vals
    )


# ---------------------------------------------------------------------------
# Field-generic summation engine (binary64 with condition tracking, or
# exact rationals on escalation)
# ---------------------------------------------------------------------------


class _PlainSum:
    __slots__ = ("value",)

    def __init__(self, zero):
        self.value = zero

    def add(self, term):
        self.value = self.value + term


def _inner_hyp(nums, dens, arg, top, track, kahan=True):
    """Terminating sum over a generic field; returns (value, peak magnitude).

    ``nums``/``dens``/``arg`` must already live in the working field
    (floats or Fractions).  Implements the same semantics as
    :func:`~assocpoly.hyperkernel.hyp_terminating`: exact
    numerator/denominator pairs cancel, a zero numerator factor
    terminates, a zero denominator factor raises
    :class:`~assocpoly.errors.DenominatorPole`.
    """
    nums = list(nums)
    remaining = []
    for d in dens:
        if d in nums:
            nums.remove(d)
        else:
            remaining.append(d)
    one = arg * 0 + 1
    acc = Accumulator() if (track and kahan) else _PlainSum(one * 0)
    term = one
    acc.add(term)
    peak = 1.0
    for j in range(top):
        numprod = one
        for p in nums:
            numprod = numprod * (p + j)
        if numprod == 0:
            break
        denprod = one
        for q in remaining:
            denprod = denprod * (q + j)
        if denprod == 0:
            raise DenominatorPole(
                f"denominator factor vanishes at offset {j} in terminating sum"
            )
        term = term * numprod / denprod * arg / (j + 1)
        acc.add(term)
        if track:
            peak = max(peak, abs(term))
    return acc.value, peak


def _double_sum(n, outer_nums, outer_dens, outer_scale, inner_maker, track,
                kahan=True):
    """sum_k coef_k * inner_k with coef ratio built from the given factors.

    ``coef_{k+1}/coef_k = outer_scale * prod(outer_nums + k) /
    prod(outer_dens + k)``; ``inner_maker(k)`` returns the
    ``(nums, dens, arg, top)`` of the inner terminating sum at k.
    Returns ``(value, condition_estimate)`` where the condition is the
    peak intermediate magnitude over the final magnitude (None when not
    tracking).
    """
    one = outer_scale * 0 + 1
    acc = Accumulator() if (track and kahan) else _PlainSum(one * 0)
    coef = one
    peak = 0.0
    for k in range(n + 1):
        if coef == 0:
            break
        nums, dens, arg, top = inner_maker(k)
        inner, ipeak = _inner_hyp(nums, dens, arg, top, track, kahan)
        acc.add(coef * inner)
        if track:
            cmag = abs(coef)
            peak = max(peak, cmag * max(ipeak, abs(inner)))
        ratio = outer_scale
        for p in outer_nums:
            ratio = ratio * (p + k)
        for q in outer_dens:
            ratio = ratio / (q + k)
        coef = coef * ratio
    if not track:
        return acc.value, None
    mag = abs(acc.value)
    cond = peak / mag if mag > 0 else math.inf
    return acc.value, cond


# ---------------------------------------------------------------------------
# Meixner closed forms
# ---------------------------------------------------------------------------


def meixner_4f3(x, params, n, cfg=None):
    """Index-shifted Meixner value by the (1-c)-powered finite 4F3 double sum.

    ``M_n = c^{-n} (gamma+1)_n (gamma+beta)_n / n! *
    sum_k (1-c)^k (-n)_k (gamma+beta+x)_k / [(gamma+1)_k (gamma+beta)_k]
    * 4F3(k-n, gamma+beta+x+k, gamma+beta-1, gamma;
    gamma+beta+x, gamma+beta+k, gamma+1+k; 1)``.

    Parameters
    ----------
    x : float or complex
        Evaluation point.
    params : MeixnerParams
        Family parameters.
    n : int
        Degree.

    Returns
    -------
    float or complex
        Raises :class:`~assocpoly.errors.DenominatorPole` when
        ``gamma+beta+x`` or ``gamma+beta`` is within 1e-8 of an integer
        in ``[-(n-1), 0]`` (a denominator factor would vanish inside
        the summation range).
    """
    _check_n(n)
    beta, c, gamma = params.beta, params.c, params.gamma
    if n == 0:
        return 1.0
    for name, w in (("gamma+beta+x", gamma + beta + x), ("gamma+beta", gamma + beta)):
        if _near_int_in_range(w, -(n - 1), 0) is not None:
            raise DenominatorPole(
                f"{name} = {w!r} makes a denominator factor vanish for degree {n}"
            )
    kahan = cfg.use_compensated_sum if cfg is not None else True

    def run(exact):
        if exact:
            xe, be, ce, ge = (Fraction(v) for v in (x, beta, c, gamma))
        else:
            xe, be, ce, ge = x, beta, c, gamma
        gb = ge + be
        gbx = gb + xe
        one = (gb * 0) + 1

        def inner_maker(k):
            return (
                [k - n, gbx + k, gb - 1, ge],
                [gbx, gb + k, ge + 1 + k],
                one,
                n - k,
            )

        return _double_sum(
            n, [-n, gbx], [ge + 1, gb], one - ce, inner_maker, not exact, kahan
        )

    total, cond = run(False)
    if cond is not None and cond > _ESCALATE_COND and _exactable(x, beta, c, gamma):
        exact_total, _ = run(True)
        total = float(exact_total)
    pref = (
        c ** (-n) * pochhammer(gamma + 1.0, n) * pochhammer(gamma + beta, n)
        / _factorial(n)
    )
    return pref * total


def meixner_4f3_alt(x, params, n, cfg=None):
    """Index-shifted Meixner value by the (c-1)/c-powered finite 4F3 double sum.

    ``M_n = (gamma+1)_n (gamma+beta)_n / n! *
    sum_k ((c-1)/c)^k (-n)_k (gamma-x)_k / [(gamma+1)_k (gamma+beta)_k]
    * 4F3(k-n, gamma-x+k, gamma+beta-1, gamma;
    gamma-x, gamma+beta+k, gamma+1+k; 1)``.

    Raises :class:`~assocpoly.errors.DenominatorPole` when ``x - gamma``
    is within 1e-8 of an integer in ``[0, n-1]`` or ``gamma + beta`` of
    an integer in ``[-(n-1), 0]``.
    """
    _check_n(n)
    beta, c, gamma = params.beta, params.c, params.gamma
    if n == 0:
        return 1.0
    if _near_int_in_range(x - gamma, 0, n - 1) is not None:
        raise DenominatorPole(
            f"x - gamma = {x - gamma!r} makes a denominator factor vanish "
            f"for degree {n}"
        )
    if _near_int_in_range(gamma + beta, -(n - 1), 0) is not None:
        raise DenominatorPole(
            f"gamma+beta = {gamma + beta!r} makes a denominator factor vanish "
            f"for degree {n}"
        )
    kahan = cfg.use_compensated_sum if cfg is not None else True

    def run(exact):
        if exact:
            xe, be, ce, ge = (Fraction(v) for v in (x, beta, c, gamma))
        else:
            xe, be, ce, ge = x, beta, c, gamma
        gb = ge + be
        gx = ge - xe
        one = (gb * 0) + 1
        ct = (ce - 1) / ce

        def inner_maker(k):
            return (
                [k - n, gx + k, gb - 1, ge],
                [gx, gb + k, ge + 1 + k],
                one,
                n - k,
            )

        return _double_sum(
            n, [-n, gx], [ge + 1, gb], ct, inner_maker, not exact, kahan
        )

    total, cond = run(False)
    if cond is not None and cond > _ESCALATE_COND and _exactable(x, beta, c, gamma):
        exact_total, _ = run(True)
        total = float(exact_total)
    pref = (
        pochhammer(gamma + 1.0, n) * pochhammer(gamma + beta, n) / _factorial(n)
    )
    return pref * total


def meixner_quadratic(x, params, n, cfg=None):
    """Index-shifted Meixner value as a two-product quadratic 2F1 combination.

    ``(beta-1) M_n = (gamma+beta-1)_{n+1}
    2F1(x+1, gamma; 2-beta; ct) 2F1(-x, -n-gamma; beta; ct)
    - (gamma)_{n+1}
    2F1(x+beta, gamma+beta-1; beta; ct) 2F1(1-beta-x, 1-n-gamma-beta; 2-beta; ct)``
    with ``ct = (c-1)/c``.

    Raises :class:`~assocpoly.errors.RestrictedParameter` when ``beta``
    is within 1e-8 of a positive integer (the 2F1 parameter ``2-beta``
    degenerates and the prefactor ``1/(beta-1)`` can blow up), when
    ``gamma+beta`` is within 1e-8 of 1, or when ``gamma+beta <= 0``.
    """
    _check_n(n)
    beta, gamma = params.beta, params.gamma
    if _near_int_in_range(beta, 1, 10**9) is not None:
        raise RestrictedParameter(
            f"quadratic representation requires beta not a positive integer, "
            f"got beta={beta!r}"
        )
    if abs(gamma + beta - 1.0) < _INT_TOL or gamma + beta <= 0:
        raise RestrictedParameter(
            f"quadratic representation requires gamma+beta > 0 and != 1, "
            f"got gamma+beta={gamma + beta!r}"
        )
    ct = params.c_tilde
    coef1 = pochhammer(gamma + beta - 1.0, n + 1)
    if coef1 == 0:
        term1 = 0.0
    else:
        term1 = (
            coef1
            * gauss_2f1(x + 1.0, gamma, 2.0 - beta, ct, cfg).value
            * gauss_2f1(-x, -n - gamma, beta, ct, cfg).value
        )
    coef2 = pochhammer(gamma, n + 1)
    if coef2 == 0:
        term2 = 0.0
    else:
        term2 = (
            coef2
            * gauss_2f1(x + beta, gamma + beta - 1.0, beta, ct, cfg).value
            * gauss_2f1(
                1.0 - beta - x, 1.0 - n - gamma - beta, 2.0 - beta, ct, cfg
            ).value
        )
    return (term1 - term2) / (beta - 1.0)


def meixner_cross_2f1(x, params, n, cfg=None):
    """Index-shifted Meixner value as a cross product of 2F1 values at c.

    ``M_n = (1-c)^{1-beta} [ c^{-n} (gamma-x)_n F_{n+1}(c) G_0(c)
    - c (gamma)_{n+1} (gamma+beta-1)_{n+1} / (gamma-x-1)_{n+2}
    F_0(c) G_{n+1}(c) ]`` with
    ``F_m(c) = 2F1(x+1, 2-beta-gamma-m; 2+x-gamma-m; c)`` and
    ``G_m(c) = 2F1(gamma+m, 1-beta-x; gamma-x+m; c)``.

    Raises :class:`~assocpoly.errors.DenominatorPole` when ``x - gamma``
    is within 1e-8 of any integer: every integer offset makes a 2F1
    denominator parameter or the rising factorial
    ``(gamma-x-1)_{n+2}`` degenerate for some degree.
    """
    _check_n(n)
    beta, c, gamma = params.beta, params.c, params.gamma
    if _near_int_in_range(x - gamma, -(10**9), 10**9) is not None:
        raise DenominatorPole(
            f"x - gamma = {x - gamma!r} degenerates the cross-product "
            f"representation"
        )

    def f_part(m):
        return gauss_2f1(x + 1.0, 2.0 - beta - gamma - m, 2.0 + x - gamma - m, c, cfg)

    def g_part(m):
        return gauss_2f1(gamma + m, 1.0 - beta - x, gamma - x + m, c, cfg)

    term1 = c ** (-n) * pochhammer(gamma - x, n) * f_part(n + 1).value * g_part(0).value
    coef2 = pochhammer(gamma, n + 1) * pochhammer(gamma + beta - 1.0, n + 1)
    if coef2 == 0:
        term2 = 0.0
    else:
        term2 = (
            c
            * coef2
            / pochhammer(gamma - x - 1.0, n + 2)
            * f_part(0).value
            * g_part(n + 1).value
        )
    return (1.0 - c) ** (1.0 - beta) * (term1 - term2)


def meixner_reflection_rhs(x, params, n, cfg=None):
    """Right-hand side of the reflection identity for the Meixner family.

    ``M_n(x; beta, c, gamma) = c^{-n} M_n(-beta-x; beta, 1/c, gamma)``;
    this evaluates the right side by recurrence so it can be compared
    against a left side computed any other way.
    """
    _check_n(n)
    reflected = MeixnerParams(params.beta, 1.0 / params.c, params.gamma)
    seq = meixner_seq(-params.beta - x, reflected, n)
    return params.c ** (-n) * seq[n]


def meixner_c1_degenerate(beta, gamma, n):
    """Index-shifted Meixner value at the degenerate parameter c = 1.

    The value is independent of x:
    ``M_n = [(gamma+beta-1)_{n+1} - (gamma)_{n+1}] / (beta - 1)``.
    Raises :class:`~assocpoly.errors.RestrictedParameter` when ``beta``
    is within 1e-9 of 1.
    """
    _check_n(n)
    if abs(beta - 1.0) < 1e-9:
        raise RestrictedParameter("degenerate c=1 closed form requires beta != 1")
    return (pochhammer(gamma + beta - 1.0, n + 1) - pochhammer(gamma, n + 1)) / (
        beta - 1.0
    )


def meixner_classical(x, beta, c, n, cfg=None):
    """Classical Meixner polynomial (beta)_n 2F1(-n, -x; beta; 1 - 1/c)."""
    _check_n(n)
    return pochhammer(beta, n) * hyp_terminating(
        [-n, -x], [beta], 1.0 - 1.0 / c, n, cfg
    )


# ---------------------------------------------------------------------------
# Charlier closed forms
# ---------------------------------------------------------------------------


def charlier_3f2(x, params, n, variant=CharlierVariant.PRIMARY, cfg=None):
    """Index-shifted Charlier value by a finite 3F2 double sum.

    The primary variant is
    ``C_n = (gamma+1)_n / n! * sum_k (-a)^{-k} (-n)_k (gamma-x)_k /
    (gamma+1)_k * 3F2(k-n, gamma-x+k, gamma; gamma-x, gamma+k+1; 1)``;
    the transformed variant is
    ``C_n = sum_k (-a)^{-k} (-n)_k (gamma-x)_k / k! *
    3F2(-k, gamma, k-n; -n, gamma-x; 1)`` with the inner sum truncated
    at ``min(k, n-k)``.

    Parameters
    ----------
    variant : CharlierVariant or str
        ``"primary"`` or ``"transformed"``.

    Returns
    -------
    float or complex
        Raises :class:`~assocpoly.errors.DenominatorPole` when
        ``x - gamma`` is within 1e-8 of an integer inside the inner
        denominator range (``[0, n-1]`` for primary,
        ``[0, floor(n/2)-1]`` for transformed).
    """
    _check_n(n)
    variant = CharlierVariant(variant)
    a, gamma = params.a, params.gamma
    if n == 0:
        return 1.0
    kahan = cfg.use_compensated_sum if cfg is not None else True
    if variant is CharlierVariant.PRIMARY:
        if _near_int_in_range(x - gamma, 0, n - 1) is not None:
            raise DenominatorPole(
                f"x - gamma = {x - gamma!r} makes a denominator factor vanish "
                f"for degree {n}"
            )

        def run(exact):
            if exact:
                xe, ae, ge = Fraction(x), Fraction(a), Fraction(gamma)
            else:
                xe, ae, ge = x, a, gamma
            gx = ge - xe
            one = (ge * 0) + 1

            def inner_maker(k):
                return ([k - n, gx + k, ge], [gx, ge + k + 1], one, n - k)

            return _double_sum(
                n, [-n, gx], [ge + 1], -(one / ae), inner_maker, not exact, kahan
            )

        total, cond = run(False)
        if cond is not None and cond > _ESCALATE_COND and _exactable(x, a, gamma):
            exact_total, _ = run(True)
            total = float(exact_total)
        return pochhammer(gamma + 1.0, n) / _factorial(n) * total
    upper = max(0, n // 2 - 1)
    if _near_int_in_range(x - gamma, 0, upper) is not None:
        raise DenominatorPole(
            f"x - gamma = {x - gamma!r} makes a denominator factor vanish "
            f"for degree {n} (transformed variant)"
        )

    def run(exact):
        if exact:
            xe, ae, ge = Fraction(x), Fraction(a), Fraction(gamma)
        else:
            xe, ae, ge = x, a, gamma
        gx = ge - xe
        one = (ge * 0) + 1

        def inner_maker(k):
            return ([-k, ge, k - n], [-n, gx], one, min(k, n - k))

        return _double_sum(
            n, [-n, gx], [1], -(one / ae), inner_maker, not exact, kahan
        )

    total, cond = run(False)
    if cond is not None and cond > _ESCALATE_COND and _exactable(x, a, gamma):
        exact_total, _ = run(True)
        total = float(exact_total)
    return total


def charlier_classical(x, a, n, cfg=None):
    """Classical Charlier polynomial 2F0(-n, -x; ; -1/a)."""
    _check_n(n)
    return hyp_terminating([-n, -x], [], -1.0 / a, n, cfg)


# ---------------------------------------------------------------------------
# Laguerre closed forms
# ---------------------------------------------------------------------------


def laguerre_3f2(x, params, n, variant=LaguerreVariant.PRIMARY, cfg=None):
    """Index-shifted Laguerre value by a finite 3F2 double sum.

    The primary variant is
    ``L_n = (gamma+alpha+1)_n / n! * sum_k (-n)_k x^k /
    [(gamma+1)_k (gamma+alpha+1)_k] *
    3F2(k-n, gamma+alpha, gamma; gamma+alpha+k+1, gamma+1+k; 1)``;
    the second variant is
    ``L_n = (alpha+1)_n / n! * sum_k (-n)_k x^k /
    [(gamma+1)_k (alpha+1)_k] *
    3F2(k-n, 1-alpha+k, gamma; -alpha-n, gamma+k+1; 1)``,
    which carries the known restriction that ``alpha`` must not be an
    integer (raises :class:`~assocpoly.errors.RestrictedParameter`).

    Parameters
    ----------
    variant : LaguerreVariant or str
        ``"primary"`` or ``"rahman"``.
    """
    _check_n(n)
    variant = LaguerreVariant(variant)
    alpha, gamma = params.alpha, params.gamma
    if n == 0:
        return 1.0
    kahan = cfg.use_compensated_sum if cfg is not None else True
    if variant is LaguerreVariant.PRIMARY:
        if _near_int_in_range(gamma + alpha + 1.0, -(n - 1), 0) is not None:
            raise DenominatorPole(
                f"gamma+alpha+1 = {gamma + alpha + 1.0!r} makes a denominator "
                f"factor vanish for degree {n}"
            )

        def run(exact):
            if exact:
                xe, ale, ge = Fraction(x), Fraction(alpha), Fraction(gamma)
            else:
                xe, ale, ge = x, alpha, gamma
            ga = ge + ale
            one = (ge * 0) + 1

            def inner_maker(k):
                return ([k - n, ga, ge], [ga + k + 1, ge + 1 + k], one, n - k)

            return _double_sum(
                n, [-n], [ge + 1, ga + 1], xe, inner_maker, not exact, kahan
            )

        total, cond = run(False)
        if cond is not None and cond > _ESCALATE_COND and _exactable(x, alpha, gamma):
            exact_total, _ = run(True)
            total = float(exact_total)
        return pochhammer(gamma + alpha + 1.0, n) / _factorial(n) * total
    if abs(alpha - round(alpha)) < _INT_TOL:
        raise RestrictedParameter(
            f"the second Laguerre 3F2 form requires non-integer alpha, "
            f"got alpha={alpha!r}"
        )

    def run(exact):
        if exact:
            xe, ale, ge = Fraction(x), Fraction(alpha), Fraction(gamma)
        else:
            xe, ale, ge = x, alpha, gamma
        one = (ge * 0) + 1

        def inner_maker(k):
            return (
                [k - n, 1 - ale + k, ge],
                [-ale - n, ge + k + 1],
                one,
                n - k,
            )

        return _double_sum(
            n, [-n], [ge + 1, ale + 1], xe, inner_maker, not exact, kahan
        )

    total, cond = run(False)
    if cond is not None and cond > _ESCALATE_COND and _exactable(x, alpha, gamma):
        exact_total, _ = run(True)
        total = float(exact_total)
    return pochhammer(alpha + 1.0, n) / _factorial(n) * total


def laguerre_classical(x, alpha, n, cfg=None):
    """Classical Laguerre polynomial (alpha+1)_n / n! 1F1(-n; alpha+1; x)."""
    _check_n(n)
    return (
        pochhammer(alpha + 1.0, n)
        / _factorial(n)
        * hyp_terminating([-n], [alpha + 1.0], x, n, cfg)
    )


# ---------------------------------------------------------------------------
# Meixner-Pollaczek via the complex Meixner substitution
# ---------------------------------------------------------------------------


def mp_from_meixner(x, params, n):
    """Index-shifted Meixner-Pollaczek value via the complex Meixner connection.

    ``P_n(x) = exp(-i n phi) / (gamma+1)_n *
    M_n(i x - nu; 2 nu, exp(-2 i phi), gamma)`` where the Meixner value
    is computed by its recurrence with complex parameters.  For real
    ``x`` the imaginary part of the result is a rounding residual.
    """
    _check_n(n)
    nu, phi, gamma = params.nu, params.phi, params.gamma
    c = cmath.exp(-2.0j * phi)
    meix = MeixnerParams(2.0 * nu, c, gamma)
    seq = meixner_seq(1.0j * x - nu, meix, n)
    return cmath.exp(-1.0j * n * phi) / pochhammer(gamma + 1.0, n) * seq[n]


# ---------------------------------------------------------------------------
# Finite-sum hypergeometric identities
# ---------------------------------------------------------------------------


def identity_4f3_finite_sum(n, a, b, t, y, rel_tol=1e-9, cfg=None):
    """Check the t-powered finite 4F3 double sum against its 2F1 product form.

    Left side:
    ``sum_k t^k (-n)_k (a+y)_k / [(a+1)_k (b+1)_k] *
    4F3(k-n, a+y+k, a, b; a+y, b+1+k, a+1+k; 1)``.
    Right side:
    ``n!/(b-a) { b/(a+1)_n 2F1(1-y, a; a-b+1; t) 2F1(y, -n-a; b-a+1; t)
    - (1-t)^{n+1} a/(b+1)_n 2F1(1-y, n+a+1; a-b+1; t)
    2F1(y, 1-a; b-a+1; t) }``.

    Requires ``a > 0``, ``b > -1``, ``b != 0``, and ``b - a`` at least
    1e-8 away from every integer (otherwise
    :class:`~assocpoly.errors.RestrictedParameter` is raised); also
    rejects ``a + y`` within 1e-8 of an integer in ``[-(n-1), 0]``.

    Returns
    -------
    IdentityReport
    """
    _check_n(n)
    if not (a > 0 and b > -1) or abs(b) < _INT_TOL:
        raise RestrictedParameter(
            f"finite 4F3 sum identity requires a > 0, b > -1, b != 0; "
            f"got a={a!r}, b={b!r}"
        )
    if abs((b - a) - round(b - a)) < _INT_TOL:
        raise RestrictedParameter(
            f"finite 4F3 sum identity requires b - a away from the integers, "
            f"got b-a={b - a!r}"
        )
    if _near_int_in_range(a + y, -(n - 1), 0) is not None:
        raise RestrictedParameter(
            f"a + y = {a + y!r} makes a denominator factor vanish for degree {n}"
        )

    def run(exact):
        if exact:
            ae, be, te, ye = (Fraction(v) for v in (a, b, t, y))
        else:
            ae, be, te, ye = a, b, t, y
        one = (ae * 0) + 1

        def inner_maker(k):
            return (
                [k - n, ae + ye + k, ae, be],
                [ae + ye, be + 1 + k, ae + 1 + k],
                one,
                n - k,
            )

        return _double_sum(
            n, [-n, ae + ye], [ae + 1, be + 1], te, inner_maker, not exact
        )

    lhs, cond = run(False)
    if cond is not None and cond > _ESCALATE_COND and _exactable(a, b, t, y):
        exact_lhs, _ = run(True)
        lhs = float(exact_lhs)
    rhs = (
        _factorial(n)
        / (b - a)
        * (
            b
            / pochhammer(a + 1.0, n)
            * gauss_2f1(1.0 - y, a, a - b + 1.0, t, cfg).value
            * gauss_2f1(y, -n - a, b - a + 1.0, t, cfg).value
            - (1.0 - t) ** (n + 1)
            * a
            / pochhammer(b + 1.0, n)
            * gauss_2f1(1.0 - y, n + a + 1.0, a - b + 1.0, t, cfg).value
            * gauss_2f1(y, 1.0 - a, b - a + 1.0, t, cfg).value
        )
    )
    point = {"n": n, "a": a, "b": b, "t": t, "y": y}
    return make_report("finite-sum-4f3", point, lhs, rhs, rel_tol)


def identity_3f2_pochhammer(n, a, b, rel_tol=1e-10, cfg=None):
    """Check 3F2(-n, a, b; a+1, b+1; 1) against its two-term pochhammer form.

    Right side: ``n!/(b-a) [ b/(a+1)_n - a/(b+1)_n ]``.  Requires
    ``|b - a| >= 1e-8`` and ``a+1``, ``b+1`` away from the nonpositive
    integers.

    Returns
    -------
    IdentityReport
    """
    _check_n(n)
    if abs(b - a) < _INT_TOL:
        raise RestrictedParameter("3F2 pochhammer identity requires a != b")
    for w in (a + 1.0, b + 1.0):
        if _near_int_in_range(w, -(10**9), 0) is not None:
            raise RestrictedParameter(
                f"3F2 pochhammer identity requires denominator parameter {w!r} "
                "away from the nonpositive integers"
            )
    lhs, peak = _inner_hyp([-n, a, b], [a + 1.0, b + 1.0], 1.0, n, True)
    mag = abs(lhs)
    cond = peak / mag if mag > 0 else math.inf
    if cond > _ESCALATE_COND and _exactable(a, b):
        ae, be = Fraction(a), Fraction(b)
        exact_lhs, _ = _inner_hyp(
            [-n, ae, be], [ae + 1, be + 1], Fraction(1), n, False
        )
        lhs = float(exact_lhs)
    rhs = (
        _factorial(n)
        / (b - a)
        * (b / pochhammer(a + 1.0, n) - a / pochhammer(b + 1.0, n))
    )
    point = {"n": n, "a": a, "b": b}
    return make_report("3f2-pochhammer", point, lhs, rhs, rel_tol)


def identity_3f2_t_powered(n, a, b, t, rel_tol=1e-9, cfg=None):
    """Check the t-powered finite 3F2 double sum against its 2F1 product form.

    Left side: ``sum_k t^k (-n)_k / (b+1)_k *
    3F2(k-n, a, b; a+1, b+1+k; 1)``.
    Right side: ``n!/(b-a) { b/(a+1)_n 2F1(1, -n-a; b-a+1; t)
    - (1-t)^{n+1} a/(b+1)_n 2F1(1, 1-a; b-a+1; t) }``.

    Requires ``a != b`` and ``b - a`` away from the nonpositive
    integers (the 2F1 denominator parameter is ``b - a + 1``), plus
    ``a+1``, ``b+1`` away from the nonpositive integers.

    Returns
    -------
    IdentityReport
    """
    _check_n(n)
    if abs(b - a) < _INT_TOL or _near_int_in_range(b - a + 1.0, -(10**9), 0) is not None:
        raise RestrictedParameter(
            f"t-powered 3F2 identity requires b - a away from the nonpositive "
            f"integers, got b-a={b - a!r}"
        )
    for w in (a + 1.0, b + 1.0):
        if _near_int_in_range(w, -(10**9), 0) is not None:
            raise RestrictedParameter(
                f"t-powered 3F2 identity requires denominator parameter {w!r} "
                "away from the nonpositive integers"
            )

    def run(exact):
        if exact:
            ae, be, te = Fraction(a), Fraction(b), Fraction(t)
        else:
            ae, be, te = a, b, t
        one = (ae * 0) + 1

        def inner_maker(k):
            return ([k - n, ae, be], [ae + 1, be + 1 + k], one, n - k)

        return _double_sum(n, [-n], [be + 1], te, inner_maker, not exact)

    lhs, cond = run(False)
    if cond is not None and cond > _ESCALATE_COND and _exactable(a, b, t):
        exact_lhs, _ = run(True)
        lhs = float(exact_lhs)
    rhs = (
        _factorial(n)
        / (b - a)
        * (
            b
            / pochhammer(a + 1.0, n)
            * gauss_2f1(1.0, -n - a, b - a + 1.0, t, cfg).value
            - (1.0 - t) ** (n + 1)
            * a
            / pochhammer(b + 1.0, n)
            * gauss_2f1(1.0, 1.0 - a, b - a + 1.0, t, cfg).value
        )
    )
    point = {"n": n, "a": a, "b": b, "t": t}
    return make_report("3f2-t-powered", point, lhs, rhs, rel_tol)


def identity_3f2_m_generalized(n, a, b, m, rel_tol=1e-9, cfg=None):
    """Check 3F2(-n, a, b; a+m, b+1; 1) against its m-term product form.

    Right side: ``(a)_m / (a-b)_m { n!/(1+b)_n
    - (b/a) sum_{l=0}^{m-1} (a-b)_l (1+l)_n / [(1+a)_l (1+a+l)_n] }``
    for integer ``m >= 1``.

    Requires ``a > 0``, ``b`` away from the nonpositive integers, and
    ``(a-b)_m`` nonzero with ``|a - b| >= 1e-8``.

    Returns
    -------
    IdentityReport
    """
    _check_n(n)
    if not isinstance(m, int) or m < 1:
        raise ValueError("m must be an integer >= 1")
    if not a > 0:
        raise RestrictedParameter(
            f"m-generalized 3F2 identity requires a > 0, got {a!r}"
        )
    if _near_int_in_range(b + 1.0, -(10**9), 0) is not None or abs(b) < _INT_TOL:
        raise RestrictedParameter(
            f"m-generalized 3F2 identity requires b away from the nonpositive "
            f"integers, got b={b!r}"
        )
    if abs(b - a) < _INT_TOL or _near_int_in_range(a - b, -(m - 1), 0) is not None:
        raise RestrictedParameter(
            f"m-generalized 3F2 identity requires (a-b)_m nonzero, got a-b={a - b!r}"
        )
    lhs, peak = _inner_hyp([-n, a, b], [a + m, b + 1.0], 1.0, n, True)
    mag = abs(lhs)
    cond = peak / mag if mag > 0 else math.inf
    if cond > _ESCALATE_COND and _exactable(a, b):
        ae, be = Fraction(a), Fraction(b)
        exact_lhs, _ = _inner_hyp(
            [-n, ae, be], [ae + m, be + 1], Fraction(1), n, False
        )
        lhs = float(exact_lhs)
    tail = Accumulator()
    for l in range(m):
        tail.add(
            pochhammer(a - b, l)
            * pochhammer(1.0 + l, n)
            / (pochhammer(1.0 + a, l) * pochhammer(1.0 + a + l, n))
        )
    rhs = (
        pochhammer(a, m)
        / pochhammer(a - b, m)
        * (_factorial(n) / pochhammer(1.0 + b, n) - (b / a) * tail.value)
    )
    point = {"n": n, "a": a, "b": b, "m": m}
    return make_report("3f2-m-generalized", point, lhs, rhs, rel_tol)
