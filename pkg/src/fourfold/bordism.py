"""Spin-bordism verdict for the covered connected-sum family.

The verdict is a theorem lookup, not a computation of spin structures:
for connected sums of K3 surfaces and products of two odd-genus surfaces,
each carrying its complex-structure spin^c class, the bordism class of
the monopole moduli space in the point bordism group is known to be
nontrivial for 2 or 3 summands and trivial for 4 or more.  Everything
else is refused with an explicit applicability error.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InapplicableError, UnsupportedFamilyError
from .manifolds import K3, SP, ManifoldData
from .spinc import SpinCStructure, moduli_dimension, spin_condition

TRIVIAL = "trivial"
NONTRIVIAL = "nontrivial"
UNKNOWN = "unknown"

# Point spin bordism groups by dimension.  The d = 1, 2 entries carry the
# verdicts; the others are standard values kept for display only.
POINT_SPIN_BORDISM = {
    0: "Z",
    1: "Z/2",
    2: "Z/2",
    3: "0",
    4: "Z",
    5: "0",
    6: "0",
    7: "0",
}


@dataclass(frozen=True)
class SpinBordismClass:
    """Value of the moduli-space bordism invariant in the point group."""

    dimension: int
    group: str
    value: str

    def __post_init__(self) -> None:
        if self.value == NONTRIVIAL and self.group == "0":
            raise ValueError("nontrivial value in the zero group")


@dataclass(frozen=True)
class FamilyCertificate:
    """Witness that (manifold, spin^c) lies in the covered family."""

    summand_count: int
    summand_kinds: tuple[str, ...]
    canonical: bool


def certify_family(manifold: ManifoldData, s: SpinCStructure) -> FamilyCertificate:
    """Check membership in the covered family.

    Every summand must be a K3 surface or a product of two odd-genus
    surfaces, and the spin^c class must be the concatenation of the
    summands' canonical classes.  Anything else raises
    :class:`UnsupportedFamilyError`.
    """
    kinds = []
    for summand in manifold.summands:
        if summand.kind == K3:
            kinds.append(str(summand))
        elif summand.kind == SP:
            g, gp = summand.genera
            if g % 2 == 0 or gp % 2 == 0:
                raise UnsupportedFamilyError(
                    f"summand {summand} has even genus; only odd-genus surface "
                    "products are covered"
                )
            kinds.append(str(summand))
        else:
            raise UnsupportedFamilyError(
                f"summand {summand} is outside the covered family "
                "(K3 or odd-genus surface products only)"
            )
    if manifold.canonical_c1 is None or s.c1 != manifold.canonical_c1:
        raise UnsupportedFamilyError(
            "spin^c structure is not the canonical (complex-structure) one "
            "on every summand"
        )
    return FamilyCertificate(
        summand_count=len(kinds),
        summand_kinds=tuple(kinds),
        canonical=True,
    )


def spin_bordism_class(manifold: ManifoldData, s: SpinCStructure) -> SpinBordismClass:
    """Evaluate the bordism invariant for a certified connected sum.

    Nontrivial for 2 or 3 summands, trivial for 4 or more.  A single
    summand is refused: the moduli space is a point but its class in the
    0-dimensional group is not established, so no verdict is offered.
    """
    certificate = certify_family(manifold, s)
    l = certificate.summand_count
    if l < 2:
        raise InapplicableError(
            "single-summand manifolds are not covered; no bordism verdict "
            "is established in dimension 0"
        )
    # The invariant is only defined when the spin condition holds; for a
    # certified family this is automatic.
    assert spin_condition(manifold, s).holds
    d = l - 1
    assert d == moduli_dimension(manifold, s)
    group = POINT_SPIN_BORDISM.get(d, "?")
    value = NONTRIVIAL if l in (2, 3) else TRIVIAL
    return SpinBordismClass(dimension=d, group=group, value=value)
