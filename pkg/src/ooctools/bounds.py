"""Exact-rational size bounds and correlation minima.

Everything here is :class:`fractions.Fraction`; no floats. Size lower bounds
can be negative and are kept that way; use :func:`lower_int` for the usable
integer form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, comb, floor

from .core import OocError


def _falling(n: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= n - i
    return out


def johnson_bound(v: int, w: int, lambda_a: int, lambda_c: int) -> Fraction:
    """``(v-1)...(v-lam) / (w(w-1)...(w-lam))`` with ``lam = max(lambda_a, lambda_c)``."""
    lam = max(lambda_a, lambda_c)
    if w <= lam:
        raise OocError(f"Johnson bound needs w > max(lambda_a, lambda_c) = {lam}")
    return Fraction(_falling(v - 1, lam), _falling(w, lam + 1))


def yang_fuja_bound(v: int, w: int, lam: int, m: int) -> Fraction:
    """Upper bound on the size of a ``(v, w, lam + m, lam)``-OOC."""
    if not (w > lam >= 1 and m >= 0):
        raise OocError(f"Yang-Fuja bound needs w > lambda >= 1 and m >= 0 (w={w}, lambda={lam}, m={m})")
    return Fraction(_falling(v - 1, lam) * (lam + m), _falling(w, lam + 1))


def gv_lower_bound(v: int, w: int, lambda_a: int, lambda_c: int) -> Fraction:
    # the numerator's (n-1)/2 factor is read with n = v
    numerator = Fraction(comb(v, w))
    if lambda_a + 1 <= w:
        numerator -= Fraction(v - 1, 2) * comb(w, lambda_a + 1) * comb(v, w - lambda_a - 1)
    top = min(v - w, w)
    denominator = v * sum(comb(v - w, w - i) * comb(w, i) for i in range(lambda_c + 1, top + 1))
    if denominator == 0:
        raise OocError("GV-type bound has a zero denominator for these parameters")
    return numerator / denominator


def csw_lower_bound(v: int, w: int, lambda_a: int, lambda_c: int) -> Fraction:
    """``[lc(v-w+1) - (lc/la)(w-1)^2(w-2)] / (w(w-1)^2)``."""
    if lambda_a == 0:
        raise OocError("greedy lower bound needs lambda_a >= 1")
    if w < 2:
        raise OocError("greedy lower bound needs w >= 2")
    num = lambda_c * (v - w + 1) - Fraction(lambda_c, lambda_a) * (w - 1) ** 2 * (w - 2)
    return num / (w * (w - 1) ** 2)


def fm_lower_bound(v: int, w: int, lambda_a: int, lambda_c: int) -> Fraction | None:
    """``(v(lc - la) - w + la) / (v lc - w^2)``, or None when ``w^2 = v lc``."""
    den = v * lambda_c - w * w
    if den == 0:
        return None
    return Fraction(v * (lambda_c - lambda_a) - w + lambda_a, den)


def lambda_a_min(v: int, w: int) -> Fraction:
    if v < 2:
        raise OocError("v must be at least 2")
    return Fraction(w * (w - 1), v - 1)


def lambda_c_min(v: int, w: int) -> Fraction:
    """Least possible cross-correlation of any family with two or more codewords."""
    return Fraction(w * w, v)


def upper_int(x: Fraction) -> int:
    return floor(x)


def lower_int(x: Fraction) -> int:
    """Usable size lower bound: ceiling, and never below 0."""
    return max(0, ceil(x))


@dataclass(frozen=True)
class BoundReport:
    v: int
    w: int
    lambda_a: int
    lambda_c: int
    johnson: Fraction | None
    yang_fuja: Fraction | None
    gv_lower: Fraction | None
    csw_lower: Fraction | None
    fm_lower: Fraction | None
    lambda_a_min: Fraction
    lambda_c_min: Fraction
    notes: dict[str, str] = field(default_factory=dict)

    @property
    def params(self) -> tuple[int, int, int, int]:
        return self.v, self.w, self.lambda_a, self.lambda_c

    def integer_forms(self) -> dict[str, int | None]:
        def up(x):
            return None if x is None else upper_int(x)

        def lo(x):
            return None if x is None else lower_int(x)

        return {
            "johnson": up(self.johnson),
            "yang_fuja": up(self.yang_fuja),
            "gv_lower": lo(self.gv_lower),
            "csw_lower": lo(self.csw_lower),
            "fm_lower": lo(self.fm_lower),
            "lambda_a_min": ceil(self.lambda_a_min),
            "lambda_c_min": ceil(self.lambda_c_min),
        }


def bound_report(v: int, w: int, lambda_a: int, lambda_c: int) -> BoundReport:
    """Evaluate every bound; inapplicable members are None with a note."""
    notes: dict[str, str] = {}

    def attempt(name, fn, *args):
        try:
            return fn(*args)
        except OocError as exc:
            notes[name] = str(exc)
            return None

    johnson = attempt("johnson", johnson_bound, v, w, lambda_a, lambda_c)
    if lambda_a >= lambda_c:
        yang_fuja = attempt("yang_fuja", yang_fuja_bound, v, w, lambda_c, lambda_a - lambda_c)
    else:
        yang_fuja = None
        notes["yang_fuja"] = "only stated for lambda_a >= lambda_c"
    gv = attempt("gv_lower", gv_lower_bound, v, w, lambda_a, lambda_c)
    csw = attempt("csw_lower", csw_lower_bound, v, w, lambda_a, lambda_c)
    fm = fm_lower_bound(v, w, lambda_a, lambda_c)
    if fm is None:
        notes["fm_lower"] = "inapplicable (w^2 = v*lc)"
    return BoundReport(
        v,
        w,
        lambda_a,
        lambda_c,
        johnson=johnson,
        yang_fuja=yang_fuja,
        gv_lower=gv,
        csw_lower=csw,
        fm_lower=fm,
        lambda_a_min=lambda_a_min(v, w),
        lambda_c_min=lambda_c_min(v, w),
        notes=notes,
    )


def fm_counting_inequality_holds(v: int, w: int, lambda_a: int, lambda_c: int, n: int) -> bool:
    """``(v-1) la + (N-1) v lc >= N w^2 - w``, true for every verified family."""
    return (v - 1) * lambda_a + (n - 1) * v * lambda_c >= n * w * w - w
