"""Geometric consequence theorems: genus bounds, Einstein obstructions,
Yamabe values, and the parameter scan over blown-up connected sums.

All inequality verdicts are evaluated over exact integers with cleared
denominators; equality counts as satisfied, matching the non-strict
inequalities of the underlying theorems.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .bordism import NONTRIVIAL, certify_family, spin_bordism_class
from .errors import InapplicableError, ValidationError
from .lattice import is_negative_definite, pairing, signature
from .manifolds import ManifoldData, cp2bar, connected_sum, s1xs3, s4, surface_product
from .spinc import SpinCStructure, canonical_spinc


@dataclass(frozen=True)
class SurfaceCandidate:
    """A hypothetical embedded surface: self-intersection, genus, and the
    pairing of the spin^c class with its fundamental class."""

    self_intersection: int
    genus: int
    pairing: int


@dataclass(frozen=True)
class PiRadical:
    """Exact value coefficient * sqrt(radicand) * pi with squarefree radicand."""

    coefficient: int
    radicand: int

    @classmethod
    def of(cls, coefficient: int, radicand: int) -> "PiRadical":
        if radicand < 0:
            raise ValidationError(f"radicand must be nonnegative, got {radicand}")
        if coefficient == 0 or radicand == 0:
            return cls(0, 0)
        out = 1
        rad = radicand
        d = 2
        while d * d <= rad:
            while rad % (d * d) == 0:
                rad //= d * d
                out *= d
            d += 1
        return cls(coefficient * out, rad)

    def is_zero(self) -> bool:
        return self.coefficient == 0

    def approx(self) -> float:
        if self.is_zero():
            return 0.0
        return self.coefficient * math.sqrt(self.radicand) * math.pi

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        if self.radicand == 1:
            return f"{self.coefficient}*pi"
        return f"{self.coefficient}*sqrt({self.radicand})*pi"


def _require_nontrivial(manifold: ManifoldData, s: SpinCStructure) -> int:
    """Certify the family, require a nontrivial bordism class, return l."""
    klass = spin_bordism_class(manifold, s)
    if klass.value != NONTRIVIAL:
        raise InapplicableError(
            f"bordism class is {klass.value} for {klass.dimension + 1} summands; "
            "the obstruction theorems require a nontrivial class"
        )
    return certify_family(manifold, s).summand_count


def embedding_obstructed(
    manifold: ManifoldData, s: SpinCStructure, cand: SurfaceCandidate
) -> bool:
    """Adjunction test for an embedded surface of nonnegative
    self-intersection and positive genus.

    True means the candidate violates n <= p + 2g - 2 and cannot embed;
    False means the inequality is satisfied (no conclusion about
    existence).
    """
    _require_nontrivial(manifold, s)
    if cand.genus < 1:
        raise InapplicableError("adjunction bound requires a surface of positive genus")
    if cand.self_intersection < 0:
        raise InapplicableError(
            "adjunction bound requires nonnegative self-intersection"
        )
    return cand.self_intersection > cand.pairing + 2 * cand.genus - 2


def min_genus(manifold: ManifoldData, s: SpinCStructure, n: int, p: int) -> int:
    """Smallest genus g >= 1 compatible with the adjunction bound for
    self-intersection n and pairing p."""
    _require_nontrivial(manifold, s)
    if n < 0:
        raise InapplicableError(
            "adjunction bound requires nonnegative self-intersection"
        )
    return max(1, -(-(n - p + 2) // 2))


def hitchin_thorpe(x: ManifoldData) -> bool:
    """3|tau| <= 2*chi, the topological necessary condition for an
    Einstein metric."""
    return 3 * abs(signature(x.h2)) <= 2 * x.euler


def summand_chern_square(manifold: ManifoldData, s: SpinCStructure) -> int:
    """Sum over summands of the squares of the canonical Chern classes.

    For a certified connected sum the forms are orthogonal, so this
    equals c1^2 of the total class.
    """
    certify_family(manifold, s)
    return pairing(manifold.h2, s.c1, s.c1)


def einstein_nonexistence(
    manifold: ManifoldData, s: SpinCStructure, n2: ManifoldData
) -> bool:
    """Whether the sum with a negative definite piece admits no Einstein
    metric.

    With l certified summands, the verdict is
    12*l - 3*(2*chi(N2) + 3*tau(N2)) >= sum of the summands' c1^2,
    evaluated exactly with cleared denominators.
    """
    l = _require_nontrivial(manifold, s)
    if not is_negative_definite(n2.h2):
        raise InapplicableError("N2 is not negative definite")
    chern_square = summand_chern_square(manifold, s)
    tau2 = signature(n2.h2)
    return 12 * l - 3 * (2 * n2.euler + 3 * tau2) >= chern_square


def yamabe_value(
    manifold: ManifoldData,
    s: SpinCStructure,
    n1: ManifoldData,
    n1_admits_nonneg_scalar: bool,
) -> PiRadical:
    """Yamabe invariant of the sum with N1: -4*pi*sqrt(2 * sum c1^2).

    N1 must be negative definite and carry a metric of nonnegative scalar
    curvature; the metric hypothesis is not decidable from our data and
    must be asserted by the caller.
    """
    _require_nontrivial(manifold, s)
    if not is_negative_definite(n1.h2):
        raise InapplicableError("metric hypothesis not certified: N1 is not negative definite")
    if not n1_admits_nonneg_scalar:
        raise InapplicableError(
            "metric hypothesis not certified: N1 must be asserted to admit a "
            "metric with nonnegative scalar curvature"
        )
    chern_square = summand_chern_square(manifold, s)
    return PiRadical.of(-4, 2 * chern_square)


def example_scan(
    g1: int, g1p: int, g2: int, g2p: int, s: int, r_max: int
) -> dict:
    """Scan blow-up counts r for the sum of two odd-genus surface products
    with r copies of reversed CP^2 and s copies of S^1 x S^3.

    For each r in 0..r_max the Einstein-nonexistence and Hitchin-Thorpe
    verdicts are computed through the general operations on assembled
    manifold data.  The returned table also carries the closed-form
    window: the rational lower bound (8/3)G - 4s - 4 and the integer
    window of r values satisfying both verdicts.
    """
    for g in (g1, g1p, g2, g2p):
        if g < 1 or g % 2 == 0:
            raise ValidationError(f"scan genera must be odd and positive, got {g}")
    if s < 0:
        raise ValidationError(f"s must be nonnegative, got {s}")
    if r_max < 1:
        raise ValidationError(f"r_max must be positive, got {r_max}")

    m = connected_sum(surface_product(g1, g1p), surface_product(g2, g2p))
    sc = canonical_spinc(m)
    big_g = (g1 - 1) * (g1p - 1) + (g2 - 1) * (g2p - 1)

    n2 = s4()
    for _ in range(s):
        n2 = connected_sum(n2, s1xs3())
    rows = []
    for r in range(r_max + 1):
        if r > 0:
            n2 = connected_sum(n2, cp2bar())
        x = connected_sum(m, n2)
        rows.append(
            {
                "r": r,
                "einstein_obstructed": einstein_nonexistence(m, sc, n2),
                "hitchin_thorpe": hitchin_thorpe(x),
            }
        )

    lower = Fraction(8 * big_g, 3) - 4 * s - 4
    upper = 8 * big_g - 4 * s - 4
    window_lo = max(0, math.ceil(lower))
    window = [window_lo, upper] if window_lo <= upper else None
    return {
        "G": big_g,
        "s": s,
        "r_max": r_max,
        "einstein_lower_bound": {"numerator": lower.numerator, "denominator": lower.denominator},
        "hitchin_thorpe_upper_bound": upper,
        "integer_window": window,
        "rows": rows,
    }
