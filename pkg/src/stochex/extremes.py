"""Exact distributions of absolute prefix extremes and region probabilities."""

from __future__ import annotations

import io
from dataclasses import dataclass
from fractions import Fraction

from .dist import ExactJointDist, UnivariateDist, format_rational
from .errors import DimensionMismatch, NegativeThreshold, PrefixOutOfRange


@dataclass(frozen=True)
class RegionProbs:
    """Probabilities of the five disjoint events cut out by the two strips
    {|X| <= x} and {|Y| <= x}: north, south, east, west, and the central square."""

    x: Fraction
    north: Fraction
    south: Fraction
    east: Fraction
    west: Fraction
    center: Fraction

    def to_jsonable(self) -> dict:
        return {
            "x": format_rational(self.x),
            "N": format_rational(self.north),
            "S": format_rational(self.south),
            "E": format_rational(self.east),
            "W": format_rational(self.west),
            "C": format_rational(self.center),
        }


def abs_extreme_dist(d: ExactJointDist, prefix_len: int, kind: str) -> UnivariateDist:
    """Exact distribution of |max(X_1..X_l)| or |min(X_1..X_l)|."""
    if not (1 <= prefix_len <= d.dim):
        raise PrefixOutOfRange(f"prefix length {prefix_len} not in 1..{d.dim}")
    if kind not in ("max", "min"):
        raise ValueError(f"kind must be 'max' or 'min', got {kind!r}")
    pick = max if kind == "max" else min
    raw = [(abs(pick(a.point[:prefix_len])), a.prob) for a in d.atoms]
    return UnivariateDist.build(raw)


def region_probs(d: ExactJointDist, x: Fraction | int) -> RegionProbs:
    """Exact probabilities of the five disjoint bivariate strip events at x >= 0."""
    if d.dim != 2:
        raise DimensionMismatch("region probabilities are bivariate")
    x = Fraction(x)
    if x < 0:
        raise NegativeThreshold(f"threshold must be >= 0, got {x}")
    n = s = e = w = c = Fraction(0)
    for atom in d.atoms:
        a, b = atom.point
        if abs(a) <= x and abs(b) <= x:
            c += atom.prob
        elif abs(a) <= x and b > x:
            n += atom.prob
        elif abs(a) <= x and b < -x:
            s += atom.prob
        elif abs(b) <= x and a > x:
            e += atom.prob
        elif abs(b) <= x and a < -x:
            w += atom.prob
    return RegionProbs(x, n, s, e, w, c)


def verify_region_identities(d: ExactJointDist, x: Fraction | int) -> dict:
    """Check the six exact identities tying the region probabilities to the
    cdfs of |X|, |Y|, |max| and |min| at threshold x.

    Any violation indicates an implementation bug; the report carries the first
    violated identity with both exact sides.
    """
    if d.dim != 2:
        raise DimensionMismatch("region identities are bivariate")
    x = Fraction(x)
    r = region_probs(d, x)
    fx = abs_extreme_dist(d, 1, "max").cdf(x)
    fy = abs_extreme_dist(d.marginal([2]), 1, "max").cdf(x)
    fmax = abs_extreme_dist(d, 2, "max").cdf(x)
    fmin = abs_extreme_dist(d, 2, "min").cdf(x)
    identities = [
        ("F_absX = N+C+S", fx, r.north + r.center + r.south),
        ("F_absY = W+C+E", fy, r.west + r.center + r.east),
        ("F_absmax = W+C+S", fmax, r.west + r.center + r.south),
        ("F_absmin = N+C+E", fmin, r.north + r.center + r.east),
        ("F_absX - F_absmax = N-W", fx - fmax, r.north - r.west),
        ("F_absmin - F_absY = N-W", fmin - fy, r.north - r.west),
        ("F_absX - F_absmin = S-E", fx - fmin, r.south - r.east),
        ("F_absmax - F_absY = S-E", fmax - fy, r.south - r.east),
    ]
    for name, lhs, rhs in identities:
        if lhs != rhs:
            return {
                "x": format_rational(x),
                "ok": False,
                "violated": name,
                "lhs": format_rational(lhs),
                "rhs": format_rational(rhs),
            }
    return {"x": format_rational(x), "ok": True, "checked": len(identities)}


def cdf_table_csv(u: UnivariateDist, decimal: bool = False) -> str:
    """Render the cdf of a univariate distribution as a two-column CSV table."""
    out = io.StringIO()
    out.write("x,F\n")
    total = Fraction(0)
    for v, p in u.atoms:
        total += p
        if decimal:
            out.write(f"{float(v)!r},{float(total)!r}\n")
        else:
            out.write(f"{format_rational(v)},{format_rational(total)}\n")
    return out.getvalue()
