"""Generator 4-manifolds, connected sums, and user-supplied descriptors.

A :class:`ManifoldData` records the algebraic-topological profile of a
closed oriented 4-manifold: first Betti number, the intersection form on
the free part of H^2, the cup products of H^1 generators, the Euler
number, provenance tags, and (when the generator carries one) the first
Chern class of the complex-structure spin^c structure.

Torsion in H^1 and H^2 is ignored throughout; every downstream formula
factors through the free parts.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import ValidationError
from .lattice import Lattice, Vector, as_vector, direct_sum, is_characteristic, zero_vector

K3 = "K3"
SP = "SP"
CP2 = "CP2"
CP2BAR = "CP2BAR"
S1XS3 = "S1xS3"
S4 = "S4"
CUSTOM = "CUSTOM"


@dataclass(frozen=True)
class Summand:
    """Provenance tag for one connected-sum piece."""

    kind: str
    genera: tuple[int, int] | None = None
    label: str | None = None

    def __str__(self) -> str:
        if self.kind == SP:
            g, gp = self.genera
            return f"SP({g},{gp})"
        if self.kind == CP2BAR:
            return "~CP2"
        if self.kind == CUSTOM and self.label:
            return f"CUSTOM({self.label})"
        return self.kind


@dataclass(frozen=True)
class ManifoldData:
    """Algebraic-topological profile of a closed oriented 4-manifold.

    ``cup1`` maps index pairs (i, j) with 0 <= i < j < b1 to the class
    alpha_i cup alpha_j in the H^2 basis; pairs with zero cup product are
    omitted.  The full antisymmetric tensor is recovered via
    :func:`cup_class`.
    """

    b1: int
    h2: Lattice
    cup1: dict[tuple[int, int], Vector] = field(default_factory=dict)
    euler: int = 0
    summands: tuple[Summand, ...] = ()
    canonical_c1: Vector | None = None

    def __post_init__(self) -> None:
        _check_invariants(self)


def _check_invariants(m: ManifoldData) -> None:
    if m.b1 < 0:
        raise ValidationError("b1 must be nonnegative")
    rank = m.h2.rank
    if m.euler != 2 - 2 * m.b1 + rank:
        raise ValidationError(
            f"euler number {m.euler} violates chi = 2 - 2*b1 + rank(H2) "
            f"= {2 - 2 * m.b1 + rank}"
        )
    for (i, j), v in m.cup1.items():
        if not (0 <= i < j < m.b1):
            raise ValidationError(f"cup1 index pair ({i},{j}) out of range for b1={m.b1}")
        if len(v) != rank:
            raise ValidationError(f"cup1 class at ({i},{j}) has length {len(v)}, expected {rank}")
    if m.canonical_c1 is not None:
        if len(m.canonical_c1) != rank:
            raise ValidationError(
                f"canonical c1 has length {len(m.canonical_c1)}, expected {rank}"
            )
        if not is_characteristic(m.h2, m.canonical_c1):
            raise ValidationError("canonical c1 is not characteristic for the form")


def cup_class(m: ManifoldData, i: int, j: int) -> Vector:
    """alpha_i cup alpha_j as an H^2 vector, for any i, j below b1."""
    if i == j:
        return zero_vector(m.h2)
    if i < j:
        v = m.cup1.get((i, j))
        return v if v is not None else zero_vector(m.h2)
    v = m.cup1.get((j, i))
    return tuple(-x for x in v) if v is not None else zero_vector(m.h2)


# E8 Dynkin diagram edges in Bourbaki labeling (0-based nodes).
_E8_EDGES = ((0, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7))


def _e8_form(sign: int) -> Lattice:
    rows = [[2 * sign if i == j else 0 for j in range(8)] for i in range(8)]
    for i, j in _E8_EDGES:
        rows[i][j] = rows[j][i] = -sign
    return Lattice(tuple(tuple(r) for r in rows))


_HYPERBOLIC = Lattice(((0, 1), (1, 0)))


def k3() -> ManifoldData:
    """The K3 surface: b1 = 0, chi = 24, form 2E8(-1) + 3H, tau = -16."""
    form = _e8_form(-1)
    form = direct_sum(form, _e8_form(-1))
    for _ in range(3):
        form = direct_sum(form, _HYPERBOLIC)
    return ManifoldData(
        b1=0,
        h2=form,
        euler=24,
        summands=(Summand(K3),),
        canonical_c1=zero_vector(form),
    )


def surface_product(g: int, gp: int) -> ManifoldData:
    """Product of two closed oriented surfaces of genus g and gp.

    Basis conventions, fixed once and for all:

    * H^1 generators are factor-major and symplectically interleaved:
      x_1, y_1, ..., x_g, y_g from the first factor, then the same
      pattern from the second, b1 = 2(g+gp) in total.
    * H^2 basis: alpha (fundamental class of the first factor), alpha'
      (second factor), then the 4*g*gp mixed classes u x v with u running
      over the first factor's H^1 basis (major) and v over the second's.
    * Pairings: alpha.alpha' = 1, alpha^2 = alpha'^2 = 0, and
      (u x v).(u' x v') = -<u u'> <v v'> with <x_i y_i> = 1 per factor.

    The canonical complex-structure spin^c class is
    2(1-g) alpha + 2(1-gp) alpha'.
    """
    if g < 1 or gp < 1:
        raise ValidationError(f"genus must be positive, got ({g},{gp})")
    n1, n2 = 2 * g, 2 * gp
    rank = 2 + n1 * n2

    def mix(i: int, j: int) -> int:
        return 2 + i * n2 + j

    rows = [[0] * rank for _ in range(rank)]
    rows[0][1] = rows[1][0] = 1
    for i in range(n1):
        k = i ^ 1  # symplectic partner within the first factor
        s1 = 1 if i % 2 == 0 else -1
        for j in range(n2):
            l = j ^ 1
            s2 = 1 if j % 2 == 0 else -1
            rows[mix(i, j)][mix(k, l)] = -s1 * s2
    form = Lattice(tuple(tuple(r) for r in rows))

    def basis_vec(idx: int) -> Vector:
        return tuple(1 if t == idx else 0 for t in range(rank))

    cup: dict[tuple[int, int], Vector] = {}
    for t in range(g):
        cup[(2 * t, 2 * t + 1)] = basis_vec(0)
    for t in range(gp):
        cup[(n1 + 2 * t, n1 + 2 * t + 1)] = basis_vec(1)
    for i in range(n1):
        for j in range(n2):
            cup[(i, n1 + j)] = basis_vec(mix(i, j))

    c1 = [0] * rank
    c1[0] = 2 * (1 - g)
    c1[1] = 2 * (1 - gp)
    return ManifoldData(
        b1=n1 + n2,
        h2=form,
        cup1=cup,
        euler=(2 - 2 * g) * (2 - 2 * gp),
        summands=(Summand(SP, (g, gp)),),
        canonical_c1=tuple(c1),
    )


def cp2() -> ManifoldData:
    return ManifoldData(b1=0, h2=Lattice(((1,),)), euler=3, summands=(Summand(CP2),))


def cp2bar() -> ManifoldData:
    return ManifoldData(b1=0, h2=Lattice(((-1,),)), euler=3, summands=(Summand(CP2BAR),))


def s1xs3() -> ManifoldData:
    return ManifoldData(b1=1, h2=Lattice(()), euler=0, summands=(Summand(S1XS3),))


def s4() -> ManifoldData:
    return ManifoldData(b1=0, h2=Lattice(()), euler=2, summands=(Summand(S4),))


def connected_sum(a: ManifoldData, b: ManifoldData) -> ManifoldData:
    """Connected sum: forms add orthogonally, cross cup products vanish."""
    h2 = direct_sum(a.h2, b.h2)
    ra, rb = a.h2.rank, b.h2.rank
    pad_a = (0,) * rb
    pad_b = (0,) * ra
    cup: dict[tuple[int, int], Vector] = {k: v + pad_a for k, v in a.cup1.items()}
    for (i, j), v in b.cup1.items():
        cup[(i + a.b1, j + a.b1)] = pad_b + v
    c1 = None
    if a.canonical_c1 is not None and b.canonical_c1 is not None:
        c1 = a.canonical_c1 + b.canonical_c1
    return ManifoldData(
        b1=a.b1 + b.b1,
        h2=h2,
        cup1=cup,
        euler=a.euler + b.euler - 2,
        summands=a.summands + b.summands,
        canonical_c1=c1,
    )


_DESCRIPTOR_FIELDS = {"b1", "form", "cup1", "euler", "c1", "label"}


def custom(descriptor: Mapping) -> ManifoldData:
    """Build a validated ManifoldData from a JSON-style descriptor.

    Expected shape::

        {"b1": int, "form": [[int]], "cup1": {"i,j": [int, ...]},
         "euler": int, "c1": [int, ...] | null, "label": str}

    cup1 keys are 1-based pairs "i,j" with i < j <= b1; omitted pairs are
    zero.  Every structural invariant is checked and the error names the
    invariant that failed.
    """
    unknown = set(descriptor) - _DESCRIPTOR_FIELDS
    if unknown:
        raise ValidationError(f"unknown descriptor fields: {sorted(unknown)}")
    for req in ("b1", "form", "euler"):
        if req not in descriptor:
            raise ValidationError(f"descriptor missing required field '{req}'")
    b1 = descriptor["b1"]
    if not isinstance(b1, int) or b1 < 0:
        raise ValidationError("b1 must be a nonnegative integer")
    form = Lattice.from_rows(descriptor["form"])
    euler = descriptor["euler"]
    if not isinstance(euler, int):
        raise ValidationError("euler must be an integer")

    cup: dict[tuple[int, int], Vector] = {}
    for key, value in (descriptor.get("cup1") or {}).items():
        try:
            i_str, j_str = key.split(",")
            i, j = int(i_str), int(j_str)
        except ValueError:
            raise ValidationError(f"cup1 key '{key}' is not of the form 'i,j'") from None
        if not (1 <= i < j <= b1):
            raise ValidationError(f"cup1 key '{key}' out of range: need 1 <= i < j <= b1={b1}")
        vec = as_vector(value)
        if any(vec):
            cup[(i - 1, j - 1)] = vec

    c1_raw = descriptor.get("c1")
    c1 = as_vector(c1_raw) if c1_raw is not None else None
    label = descriptor.get("label")
    return ManifoldData(
        b1=b1,
        h2=form,
        cup1=cup,
        euler=euler,
        summands=(Summand(CUSTOM, label=label),),
        canonical_c1=c1,
    )


def load_descriptor(path: str) -> ManifoldData:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            descriptor = json.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read descriptor file '{path}': {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValidationError(f"descriptor file '{path}' is not valid JSON: {exc}") from exc
    if not isinstance(descriptor, dict):
        raise ValidationError(f"descriptor file '{path}' must contain a JSON object")
    return custom(descriptor)


def descriptor_of(m: ManifoldData, label: str = "export") -> dict:
    """Serialize a ManifoldData back to the descriptor format."""
    return {
        "b1": m.b1,
        "form": [list(row) for row in m.h2.form],
        "cup1": {f"{i + 1},{j + 1}": list(v) for (i, j), v in sorted(m.cup1.items())},
        "euler": m.euler,
        "c1": list(m.canonical_c1) if m.canonical_c1 is not None else None,
        "label": label,
    }
