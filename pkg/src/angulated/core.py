"""Combinatorial model of the periodic linear quiver category.

The family is parametrised by an even d >= 2 together with l >= 2 and
m >= 3 satisfying m - 1 = d*l/2.  Its indecomposable objects live on the
doubly infinite linear quiver

    ... -> s-1:f1 -> ... -> s-1:f_{m+l-1} -> f1 -> ... -> f_{m+l-1} -> s1:f1 -> ...

with one vertex per global integer position; the degree-d suspension acts
by translating positions by one period m + l - 1.  The Hom space between
two vertices is one dimensional when the target sits between 0 and l - 1
steps to the right of the source and zero otherwise, which encodes the
vanishing of every composite of l consecutive arrows.  Fixing the basis
morphism u(x -> y) of each nonzero Hom space with all structure constants
equal to one, general objects are finite multisets of vertices and general
morphisms are rational matrices supported on the allowed distance band.

Everything downstream (angles, covers, AR theory) reduces to this distance
rule plus exact linear algebra over the rationals.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import linalg


class DomainError(ValueError):
    """Base class for mathematically invalid requests."""


class ConstraintViolation(DomainError):
    """Family parameters violate the defining arithmetic constraints."""


class ZeroHom(DomainError):
    """Asked for the canonical basis morphism of a vanishing Hom space."""


class ShapeMismatch(DomainError):
    """Sources, targets or matrix shapes do not line up."""


class BadDistance(DomainError):
    """Position distance outside the range the construction supports."""


class NotWide(DomainError):
    """Subcategory spec fails the wideness requirement."""


class NotMember(DomainError):
    """Object lies outside the subcategory it must belong to."""


@dataclass(frozen=True)
class FamilyParams:
    """Admissible triple (d, l, m) plus the derived period m + l - 1."""

    d: int
    l: int
    m: int
    period: int


def validate_params(d: int, l: int, m: int) -> FamilyParams:
    """Validate the family constraints and return the parameter record.

    Requires d even and >= 2, l >= 2, m >= 3 and m - 1 = d*l/2; raises
    ConstraintViolation naming the first failed condition.
    """
    for name, value in (("d", d), ("l", l), ("m", m)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise ConstraintViolation(f"{name} must be an integer, got {value!r}")
    if d < 2 or d % 2 != 0:
        raise ConstraintViolation(f"d must be an even integer >= 2, got {d}")
    if l < 2:
        raise ConstraintViolation(f"l must be an integer >= 2, got {l}")
    if m < 3:
        raise ConstraintViolation(f"m must be an integer >= 3, got {m}")
    if 2 * (m - 1) != d * l:
        raise ConstraintViolation(
            f"need m - 1 = d*l/2, got m - 1 = {m - 1} and d*l/2 = {d * l // 2}"
        )
    period = m + l - 1
    # consequence of the constraint, kept as a hard check
    assert 2 * period == l * (d + 2)
    return FamilyParams(d=d, l=l, m=m, period=period)


def split_pos(params: FamilyParams, pos: int) -> tuple[int, int]:
    """Unique (shift, index) view of a global position, index in [1, period]."""
    s, i = divmod(pos - 1, params.period)
    return s, i + 1


def join_pos(params: FamilyParams, shift: int, index: int) -> int:
    if not 1 <= index <= params.period:
        raise ValueError(f"index must lie in [1, {params.period}], got {index}")
    return shift * params.period + index


def index_of(params: FamilyParams, pos: int) -> int:
    return (pos - 1) % params.period + 1


def pos_label(params: FamilyParams, pos: int) -> str:
    """Human-readable name of the vertex at `pos`, e.g. "f4" or "s-1:f8"."""
    s, i = split_pos(params, pos)
    return f"f{i}" if s == 0 else f"s{s}:f{i}"


@dataclass(frozen=True)
class SumObject:
    """Finite multiset of vertex positions; the empty multiset is zero."""

    summands: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(sorted(self.summands)))

    @property
    def is_zero(self) -> bool:
        return not self.summands

    @property
    def is_indec(self) -> bool:
        return len(self.summands) == 1

    def __len__(self) -> int:
        return len(self.summands)


ZERO_OBJ = SumObject()


def indec(pos: int) -> SumObject:
    return SumObject((pos,))


def hom_dim(params: FamilyParams, x: int, y: int) -> int:
    """Dimension (0 or 1) of the Hom space from vertex x to vertex y."""
    return 1 if 0 <= y - x <= params.l - 1 else 0


@dataclass(frozen=True)
class Morphism:
    """Rational matrix between two sum objects, rows indexed by the target.

    Entry (i, j) is the coefficient of the basis morphism from source
    summand j to target summand i; it must vanish whenever that Hom space
    does (support rule).
    """

    params: FamilyParams
    source: SumObject
    target: SumObject
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows, cols = len(self.target), len(self.source)
        if len(self.entries) != rows or any(len(r) != cols for r in self.entries):
            raise ShapeMismatch(f"entry matrix must be {rows} x {cols}")
        ents = tuple(tuple(Fraction(e) for e in row) for row in self.entries)
        for i, y in enumerate(self.target.summands):
            for j, x in enumerate(self.source.summands):
                if ents[i][j] != 0 and not hom_dim(self.params, x, y):
                    raise ShapeMismatch(
                        f"entry ({i}, {j}) nonzero but Hom({x} -> {y}) = 0"
                    )
        object.__setattr__(self, "entries", ents)

    @property
    def is_zero(self) -> bool:
        return all(e == 0 for row in self.entries for e in row)


def zero_mor(params: FamilyParams, source: SumObject, target: SumObject) -> Morphism:
    ents = tuple((Fraction(0),) * len(source) for _ in range(len(target)))
    return Morphism(params, source, target, ents)


def identity_mor(params: FamilyParams, obj: SumObject) -> Morphism:
    n = len(obj)
    ents = tuple(
        tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)
    )
    return Morphism(params, obj, obj, ents)


def basis_mor(params: FamilyParams, x: int, y: int) -> Morphism:
    """Canonical basis morphism u(x -> y) with coefficient one."""
    if not hom_dim(params, x, y):
        raise ZeroHom(
            f"Hom({pos_label(params, x)} -> {pos_label(params, y)}) = 0 "
            f"(distance {y - x} outside [0, {params.l - 1}])"
        )
    return Morphism(params, indec(x), indec(y), ((Fraction(1),),))


def scale(mor: Morphism, c) -> Morphism:
    c = Fraction(c)
    ents = tuple(tuple(c * e for e in row) for row in mor.entries)
    return Morphism(mor.params, mor.source, mor.target, ents)


def add_mor(a: Morphism, b: Morphism) -> Morphism:
    if a.params != b.params or a.source != b.source or a.target != b.target:
        raise ShapeMismatch("can only add parallel morphisms")
    ents = tuple(
        tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a.entries, b.entries)
    )
    return Morphism(a.params, a.source, a.target, ents)


def compose(g: Morphism, f: Morphism) -> Morphism:
    """Composite g after f under the structure rule u(y->z)u(x->y) = u(x->z).

    The product of two basis morphisms survives exactly when the total
    distance stays below l, so the matrix product is masked by the support
    rule of the composite.
    """
    if f.params != g.params:
        raise ShapeMismatch("morphisms live over different parameters")
    if f.target != g.source:
        raise ShapeMismatch("compose needs target(f) = source(g)")
    p = f.params
    mids = len(g.source)
    ents = []
    for i, z in enumerate(g.target.summands):
        row = []
        for j, x in enumerate(f.source.summands):
            if hom_dim(p, x, z):
                row.append(
                    sum(
                        (g.entries[i][k] * f.entries[k][j] for k in range(mids)),
                        Fraction(0),
                    )
                )
            else:
                row.append(Fraction(0))
        ents.append(tuple(row))
    return Morphism(p, f.source, g.target, tuple(ents))


def shift_obj(params: FamilyParams, obj: SumObject, r: int) -> SumObject:
    return SumObject(tuple(pos + r * params.period for pos in obj.summands))


def shift_mor(mor: Morphism, r: int) -> Morphism:
    p = mor.params
    return Morphism(
        p, shift_obj(p, mor.source, r), shift_obj(p, mor.target, r), mor.entries
    )


def direct_sum_obj(a: SumObject, b: SumObject) -> SumObject:
    return SumObject(a.summands + b.summands)


def direct_sum_mor(a: Morphism, b: Morphism) -> Morphism:
    """Block diagonal sum, re-indexed along the canonical summand order."""
    if a.params != b.params:
        raise ShapeMismatch("morphisms live over different parameters")
    p = a.params
    src = direct_sum_obj(a.source, b.source)
    tgt = direct_sum_obj(a.target, b.target)
    # tag each summand slot with its origin before the canonical re-sort
    src_tags = sorted(
        [(pos, 0, j) for j, pos in enumerate(a.source.summands)]
        + [(pos, 1, j) for j, pos in enumerate(b.source.summands)]
    )
    tgt_tags = sorted(
        [(pos, 0, i) for i, pos in enumerate(a.target.summands)]
        + [(pos, 1, i) for i, pos in enumerate(b.target.summands)]
    )
    ents = []
    for (_, tside, ti) in tgt_tags:
        row = []
        for (_, sside, sj) in src_tags:
            if tside == sside == 0:
                row.append(a.entries[ti][sj])
            elif tside == sside == 1:
                row.append(b.entries[ti][sj])
            else:
                row.append(Fraction(0))
        ents.append(tuple(row))
    return Morphism(p, src, tgt, tuple(ents))


def is_radical(f: Morphism) -> bool:
    """No invertible component between isomorphic summands.

    Endomorphism rings of vertices are one dimensional, so this reduces to
    the vanishing of every entry between equal positions.
    """
    return all(
        f.entries[i][j] == 0
        for i, y in enumerate(f.target.summands)
        for j, x in enumerate(f.source.summands)
        if x == y
    )


def _allowed_cells(params, src: SumObject, tgt: SumObject) -> list[tuple[int, int]]:
    return [
        (i, j)
        for i, y in enumerate(tgt.summands)
        for j, x in enumerate(src.summands)
        if hom_dim(params, x, y)
    ]


def _mor_from_solution(params, src, tgt, cells, sol) -> Morphism:
    ents = [[Fraction(0)] * len(src) for _ in range(len(tgt))]
    for (i, j), v in zip(cells, sol):
        ents[i][j] = v
    return Morphism(params, src, tgt, tuple(tuple(r) for r in ents))


def right_factor(f: Morphism, t: Morphism) -> Morphism | None:
    """A morphism g with f o g = t, or None when t does not factor through f."""
    if f.params != t.params or f.target != t.target:
        raise ShapeMismatch("right_factor needs target(f) = target(t)")
    p = f.params
    a, b, c = t.source, f.source, f.target
    cells = _allowed_cells(p, a, b)
    cell_index = {cell: n for n, cell in enumerate(cells)}
    rows, rhs = [], []
    for i, cpos in enumerate(c.summands):
        for j, apos in enumerate(a.summands):
            if not hom_dim(p, apos, cpos):
                continue  # composite cell is killed by the distance rule
            row = [Fraction(0)] * len(cells)
            for k in range(len(b)):
                if f.entries[i][k] and (k, j) in cell_index:
                    row[cell_index[(k, j)]] += f.entries[i][k]
            rows.append(row)
            rhs.append(t.entries[i][j])
    sol = linalg.solve(rows, rhs, len(cells))
    if sol is None:
        return None
    return _mor_from_solution(p, a, b, cells, sol)


def left_factor(f: Morphism, t: Morphism) -> Morphism | None:
    """A morphism g with g o f = t, or None when t does not extend along f."""
    if f.params != t.params or f.source != t.source:
        raise ShapeMismatch("left_factor needs source(f) = source(t)")
    p = f.params
    a, b, c = f.source, f.target, t.target
    cells = _allowed_cells(p, b, c)
    cell_index = {cell: n for n, cell in enumerate(cells)}
    rows, rhs = [], []
    for i, cpos in enumerate(c.summands):
        for j, apos in enumerate(a.summands):
            if not hom_dim(p, apos, cpos):
                continue
            row = [Fraction(0)] * len(cells)
            for k in range(len(b)):
                if f.entries[k][j] and (i, k) in cell_index:
                    row[cell_index[(i, k)]] += f.entries[k][j]
            rows.append(row)
            rhs.append(t.entries[i][j])
    sol = linalg.solve(rows, rhs, len(cells))
    if sol is None:
        return None
    return _mor_from_solution(p, b, c, cells, sol)


def is_split_epi(f: Morphism) -> bool:
    return right_factor(f, identity_mor(f.params, f.target)) is not None


def is_split_mono(f: Morphism) -> bool:
    return left_factor(f, identity_mor(f.params, f.source)) is not None


def is_iso(f: Morphism) -> bool:
    return is_split_epi(f) and is_split_mono(f)
