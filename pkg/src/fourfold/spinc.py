"""Spin^c structures, the Dirac index, and the evenness conditions.

A spin^c structure is modeled by the first Chern class of its determinant
line bundle, a characteristic vector of the intersection form.  The index
bundle of the family of Dirac operators over the torus of flat twistings
has a first Chern class expressed by half the cup-pairing matrix; the two
parity conditions checked here (index even, all half-pairings even) are
exactly what guarantees the monopole moduli space carries a spin
structure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IntegralityError, ValidationError
from .lattice import Vector, as_vector, is_characteristic, pairing, signature
from .manifolds import ManifoldData


@dataclass(frozen=True)
class SpinCStructure:
    """c1 of the determinant line bundle, in the fixed H^2 basis."""

    c1: Vector


@dataclass(frozen=True)
class TorusTwoForm:
    """Antisymmetric integer matrix of a 2-form on the Jacobian torus.

    Entry (i, j) is the coefficient of beta_i beta_j in the basis dual to
    the chosen H^1 generators.
    """

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise ValidationError(f"torus 2-form row {i} has length {len(row)}, expected {n}")
        for i in range(n):
            if self.entries[i][i] != 0:
                raise ValidationError(f"torus 2-form has nonzero diagonal at {i}")
            for j in range(i + 1, n):
                if self.entries[i][j] != -self.entries[j][i]:
                    raise ValidationError(f"torus 2-form not antisymmetric at ({i},{j})")

    @property
    def size(self) -> int:
        return len(self.entries)

    def all_even(self) -> bool:
        return all(x % 2 == 0 for row in self.entries for x in row)


@dataclass(frozen=True)
class SpinCondition:
    """Verdict of the two parity conditions for a spin moduli space."""

    index_even: bool
    chern_even: bool

    @property
    def holds(self) -> bool:
        return self.index_even and self.chern_even


@dataclass(frozen=True)
class W2Report:
    """Mod-2 data of the second Stiefel-Whitney classes of the two bundles
    whose sections cut out the moduli space.

    ``torus_part_mod2`` is the half-pairing matrix reduced mod 2;
    ``h_coefficient_mod2`` and ``e_h_coefficient_mod2`` are the
    coefficients of c1 of the tautological line bundle, which depend on
    the approximation dimension only through its parity.
    """

    torus_part_mod2: tuple[tuple[int, ...], ...]
    h_coefficient_mod2: int
    e_h_coefficient_mod2: int

    def vanishes(self) -> bool:
        return (
            self.h_coefficient_mod2 == 0
            and self.e_h_coefficient_mod2 == 0
            and all(x == 0 for row in self.torus_part_mod2 for x in row)
        )


def spinc(manifold: ManifoldData, coords) -> SpinCStructure:
    """Validating constructor: c1 must be characteristic for the form."""
    c1 = as_vector(coords)
    if len(c1) != manifold.h2.rank:
        raise ValidationError(
            f"c1 has length {len(c1)}, form rank is {manifold.h2.rank}"
        )
    if not is_characteristic(manifold.h2, c1):
        raise ValidationError("c1 is not characteristic for the intersection form")
    return SpinCStructure(c1)


def canonical_spinc(manifold: ManifoldData) -> SpinCStructure:
    if manifold.canonical_c1 is None:
        raise ValidationError(
            "manifold carries no canonical spin^c structure; supply c1 explicitly"
        )
    return SpinCStructure(manifold.canonical_c1)


def dirac_index(manifold: ManifoldData, s: SpinCStructure) -> int:
    """Index of the spin^c Dirac operator: (c1^2 - tau) / 8, exact."""
    square = pairing(manifold.h2, s.c1, s.c1)
    tau = signature(manifold.h2)
    num = square - tau
    if num % 8 != 0:
        raise ValidationError(
            f"c1^2 - tau = {num} is not divisible by 8; c1 is not a valid spin^c class"
        )
    return num // 8


def cup_pairing_matrix(manifold: ManifoldData, s: SpinCStructure) -> tuple[tuple[int, ...], ...]:
    """Matrix of pairings <c1 alpha_i alpha_j, [M]> over the H^1 generators."""
    b1 = manifold.b1
    t = [[0] * b1 for _ in range(b1)]
    for (i, j), v in manifold.cup1.items():
        p = pairing(manifold.h2, s.c1, v)
        t[i][j] = p
        t[j][i] = -p
    return tuple(tuple(row) for row in t)


def index_chern_form(manifold: ManifoldData, s: SpinCStructure) -> TorusTwoForm:
    """First Chern class of the Dirac index bundle on the Jacobian torus.

    Entries are half the cup pairings.  An odd pairing contradicts the
    integrality of the class and flags corrupt input data.
    """
    t = cup_pairing_matrix(manifold, s)
    rows = []
    for i, row in enumerate(t):
        out = []
        for j, x in enumerate(row):
            if x % 2 != 0:
                raise IntegralityError(
                    f"cup pairing at ({i},{j}) is odd ({x}); "
                    "half-integral index Chern class is not allowed"
                )
            out.append(x // 2)
        rows.append(tuple(out))
    return TorusTwoForm(tuple(rows))


def spin_condition(manifold: ManifoldData, s: SpinCStructure) -> SpinCondition:
    """Evaluate both parity conditions for the pair (manifold, spin^c)."""
    index_even = dirac_index(manifold, s) % 2 == 0
    chern_even = index_chern_form(manifold, s).all_even()
    return SpinCondition(index_even=index_even, chern_even=chern_even)


def has_index_square_root(manifold: ManifoldData, s: SpinCStructure) -> bool:
    """Whether det of the index bundle admits a square root line bundle.

    Equivalent to c1 of the index bundle being even, i.e. the second
    parity condition alone.
    """
    return index_chern_form(manifold, s).all_even()


def stiefel_whitney_parities(
    manifold: ManifoldData, s: SpinCStructure, m_parity: int = 0
) -> W2Report:
    """w2 data of the approximation bundles, as functions of m mod 2.

    ``m_parity`` is the parity of the complex dimension of the chosen
    finite-dimensional target space; the bundles themselves are never
    constructed.  With m_parity = 0 the report vanishes exactly when the
    spin condition holds.
    """
    if m_parity not in (0, 1):
        raise ValidationError(f"m_parity must be 0 or 1, got {m_parity}")
    c = index_chern_form(manifold, s)
    torus = tuple(tuple(x % 2 for x in row) for row in c.entries)
    a = dirac_index(manifold, s)
    return W2Report(
        torus_part_mod2=torus,
        h_coefficient_mod2=(m_parity + a) % 2,
        e_h_coefficient_mod2=m_parity,
    )


def moduli_dimension(manifold: ManifoldData, s: SpinCStructure) -> int:
    """Expected dimension of the monopole moduli space.

    d = (c1^2 - 2*chi - 3*tau) / 4; a non-integer value means the input
    data cannot come from a closed oriented 4-manifold.
    """
    square = pairing(manifold.h2, s.c1, s.c1)
    tau = signature(manifold.h2)
    num = square - 2 * manifold.euler - 3 * tau
    if num % 4 != 0:
        raise ValidationError(
            f"c1^2 - 2*chi - 3*tau = {num} is not divisible by 4; inconsistent input"
        )
    return num // 4
