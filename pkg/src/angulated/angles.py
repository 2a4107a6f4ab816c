"""Higher angles: construction, rotation and the exactness oracle.

An angle is a chain of d+2 objects whose last map lands in the period
shift of the first object, with all consecutive composites zero.  The
minimal angle on a basis morphism of distance D places its objects on the
two arithmetic progressions of step l through source and target, so the
d+1 gaps alternate between D and l - D and the total span is m - 1 + D.

The oracle `check_hom_exactness` never looks at how an angle was built: it
applies every covariant Hom functor from a window of test vertices to the
angle extended by one period on each side and verifies exactness of the
resulting rational complexes by rank counting.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .core import (
    BadDistance,
    FamilyParams,
    Morphism,
    ShapeMismatch,
    SumObject,
    ZERO_OBJ,
    basis_mor,
    compose,
    direct_sum_mor,
    direct_sum_obj,
    hom_dim,
    indec,
    identity_mor,
    shift_mor,
    shift_obj,
    zero_mor,
)


@dataclass(frozen=True)
class Angle:
    """Sigma^d-sequence of d+2 objects; validated on construction.

    maps[k] goes objects[k] -> objects[k+1] for k <= d and the connecting
    map maps[d+1] goes objects[d+1] -> shift(objects[0], 1).  Consecutive
    composites vanish, including around the wrap.
    """

    params: FamilyParams
    objects: tuple[SumObject, ...]
    maps: tuple[Morphism, ...]

    def __post_init__(self):
        p = self.params
        n = p.d + 2
        if len(self.objects) != n or len(self.maps) != n:
            raise ShapeMismatch(f"an angle needs {n} objects and {n} maps")
        targets = self.objects[1:] + (shift_obj(p, self.objects[0], 1),)
        for k, mor in enumerate(self.maps):
            if mor.params != p:
                raise ShapeMismatch("angle maps live over different parameters")
            if mor.source != self.objects[k] or mor.target != targets[k]:
                raise ShapeMismatch(f"map {k} does not match the object chain")
        for k in range(n - 1):
            if not compose(self.maps[k + 1], self.maps[k]).is_zero:
                raise ValueError(f"consecutive maps {k}, {k + 1} do not compose to zero")
        if not compose(self.maps[0], shift_mor(self.maps[-1], -1)).is_zero:
            raise ValueError("wrap-around composite is nonzero")

    @property
    def connecting(self) -> Morphism:
        return self.maps[-1]


def trivial_angle(params: FamilyParams, x: SumObject) -> Angle:
    """x --id--> x -> 0 -> ... -> 0 -> shift(x)."""
    n = params.d + 2
    objects = (x, x) + (ZERO_OBJ,) * (n - 2)
    maps = [identity_mor(params, x), zero_mor(params, x, ZERO_OBJ)]
    for _ in range(n - 3):
        maps.append(zero_mor(params, ZERO_OBJ, ZERO_OBJ))
    maps.append(zero_mor(params, ZERO_OBJ, shift_obj(params, x, 1)))
    return Angle(params, objects, tuple(maps))


def rotate_left(a: Angle) -> Angle:
    """Drop the first object, append its shift; d is even so no sign flips."""
    p = a.params
    objects = a.objects[1:] + (shift_obj(p, a.objects[0], 1),)
    maps = a.maps[1:] + (shift_mor(a.maps[0], 1),)
    return Angle(p, objects, maps)


def rotate_right(a: Angle) -> Angle:
    p = a.params
    objects = (shift_obj(p, a.objects[-1], -1),) + a.objects[:-1]
    maps = (shift_mor(a.maps[-1], -1),) + a.maps[:-1]
    return Angle(p, objects, maps)


def shift_angle(a: Angle, r: int) -> Angle:
    p = a.params
    return Angle(
        p,
        tuple(shift_obj(p, o, r) for o in a.objects),
        tuple(shift_mor(m, r) for m in a.maps),
    )


def direct_sum(a: Angle, b: Angle) -> Angle:
    if a.params != b.params:
        raise ShapeMismatch("angles live over different parameters")
    objects = tuple(direct_sum_obj(x, y) for x, y in zip(a.objects, b.objects))
    maps = tuple(direct_sum_mor(f, g) for f, g in zip(a.maps, b.maps))
    return Angle(a.params, objects, maps)


def _single_entry(mor: Morphism) -> Fraction | None:
    if mor.source.is_indec and mor.target.is_indec:
        return mor.entries[0][0]
    return None


def min_angle(mu: Morphism) -> Angle:
    """The unique angle on mu with all middle maps in the radical.

    mu must be a nonzero morphism between single vertices.  For distance
    D in [1, l-1] the objects sit at the positions target - r*l and
    source - r*l for 0 <= r <= d/2, sorted increasingly, with mu occupying
    the last slot before the connecting map; the connecting map is the
    basis morphism of distance l - D.  Distance 0 yields the contractible
    angle on the isomorphism mu.
    """
    p = mu.params
    entry = _single_entry(mu)
    if entry is None or entry == 0:
        raise BadDistance("min_angle needs a nonzero morphism between single vertices")
    x = mu.source.summands[0]
    y = mu.target.summands[0]
    delta = y - x
    if delta >= p.l or delta < 0:
        raise BadDistance(f"distance {delta} admits no nonzero morphism")
    if delta == 0:
        n = p.d + 2
        objects = (mu.source, mu.target) + (ZERO_OBJ,) * (n - 2)
        maps = [mu, zero_mor(p, mu.target, ZERO_OBJ)]
        for _ in range(n - 3):
            maps.append(zero_mor(p, ZERO_OBJ, ZERO_OBJ))
        maps.append(zero_mor(p, ZERO_OBJ, shift_obj(p, mu.source, 1)))
        return Angle(p, objects, tuple(maps))
    half = p.d // 2
    positions = sorted(
        [y - r * p.l for r in range(half + 1)] + [x - r * p.l for r in range(half + 1)]
    )
    # alternating gaps delta, l - delta; total span m - 1 + delta
    gaps = [b - a for a, b in zip(positions, positions[1:])]
    assert gaps == [delta if k % 2 == 0 else p.l - delta for k in range(p.d + 1)]
    assert positions[-1] - positions[0] == p.m - 1 + delta
    objects = tuple(indec(q) for q in positions)
    maps = [
        basis_mor(p, a, b) for a, b in zip(positions, positions[1:])
    ]
    maps[-1] = mu  # slot (X^d -> X^{d+1})
    maps.append(basis_mor(p, positions[-1], positions[0] + p.period))
    return Angle(p, objects, tuple(maps))


def extend(delta: Morphism) -> Angle:
    """Some angle whose connecting map is `delta`.

    A nonzero basis component from source vertex y to target vertex
    shift(x) contributes the right rotation of its minimal angle; rows and
    columns of `delta` that carry no entry contribute split (contractible)
    blocks.  The support must be a partial matching of summands: a
    connector mixing one summand into several is not decomposed here.
    """
    p = delta.params
    used_rows = [any(row) for row in delta.entries]
    used_cols = [
        any(delta.entries[i][j] for i in range(len(delta.target)))
        for j in range(len(delta.source))
    ]
    for i, row in enumerate(delta.entries):
        if sum(1 for e in row if e) > 1:
            raise ShapeMismatch("connector support must be a partial matching")
    for j in range(len(delta.source)):
        if sum(1 for i in range(len(delta.target)) if delta.entries[i][j]) > 1:
            raise ShapeMismatch("connector support must be a partial matching")

    blocks = []
    for i, tpos in enumerate(delta.target.summands):
        for j, spos in enumerate(delta.source.summands):
            if delta.entries[i][j]:
                comp = Morphism(
                    p, indec(spos), indec(tpos), ((delta.entries[i][j],),)
                )
                blocks.append(rotate_right(min_angle(comp)))
    for i, tpos in enumerate(delta.target.summands):
        if not used_rows[i]:
            # unmatched x-part: trivial angle on shift(tpos, -1)
            blocks.append(trivial_angle(p, indec(tpos - p.period)))
    for j, spos in enumerate(delta.source.summands):
        if not used_cols[j]:
            # unmatched y-part: twice rotated trivial angle, connector zero
            blocks.append(
                rotate_left(rotate_left(trivial_angle(p, indec(spos - p.period))))
            )
    if not blocks:
        n = p.d + 2
        return Angle(
            p,
            (ZERO_OBJ,) * n,
            tuple(
                [zero_mor(p, ZERO_OBJ, ZERO_OBJ)] * n
            ),
        )
    out = blocks[0]
    for b in blocks[1:]:
        out = direct_sum(out, b)
    return out


# ---------------------------------------------------------------------------
# F-level chains: d-kernels, d-cokernels, d-exact sequences
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FLevelChain:
    """Chain of objects in the fundamental window with its defining role."""

    params: FamilyParams
    kind: str  # "kernel" | "cokernel" | "exact"
    objects: tuple[SumObject, ...]
    maps: tuple[Morphism, ...]


def _window_positions(params: FamilyParams, i: int, j: int) -> list[int]:
    """Positions of the two residue classes of i, j inside [1, period]."""
    out = set()
    for base in (i, j):
        q = base % params.l
        for pos in range(1, params.period + 1):
            if pos % params.l == q:
                out.add(pos)
    return sorted(out)


def _chain_maps(params, objects) -> tuple[Morphism, ...]:
    maps = []
    for a, b in zip(objects, objects[1:]):
        if a.is_zero or b.is_zero:
            maps.append(zero_mor(params, a, b))
        else:
            maps.append(basis_mor(params, a.summands[0], b.summands[0]))
    return tuple(maps)


def _require_window_pair(params, i, j):
    if not (1 <= i <= params.period and 1 <= j <= params.period):
        raise BadDistance(f"indices must lie in [1, {params.period}]")
    if not 1 <= j - i <= params.l - 1:
        raise BadDistance(f"need 1 <= j - i <= {params.l - 1}, got {j - i}")


def d_kernel(params: FamilyParams, i: int, j: int) -> FLevelChain:
    """d+1 objects ending at f_i whose Hom-from sequences kill u(i -> j).

    The chain is the truncation of the alternating ladder through f_i, f_j
    to positions <= i inside the window, padded with zeros on the left.
    """
    _require_window_pair(params, i, j)
    positions = [q for q in _window_positions(params, i, j) if q <= i]
    objects = [ZERO_OBJ] * (params.d + 1 - len(positions)) + [indec(q) for q in positions]
    objects = tuple(objects)
    return FLevelChain(params, "kernel", objects, _chain_maps(params, objects))


def d_cokernel(params: FamilyParams, i: int, j: int) -> FLevelChain:
    """d+1 objects starting at f_j, dual to `d_kernel`."""
    _require_window_pair(params, i, j)
    positions = [q for q in _window_positions(params, i, j) if q >= j]
    objects = tuple(
        [indec(q) for q in positions] + [ZERO_OBJ] * (params.d + 1 - len(positions))
    )
    return FLevelChain(params, "cokernel", objects, _chain_maps(params, objects))


def d_exact_seq(params: FamilyParams, i: int, j: int) -> FLevelChain:
    """The full d+2 term sequence through u(i -> j) inside the window."""
    _require_window_pair(params, i, j)
    positions = _window_positions(params, i, j)
    assert len(positions) == params.d + 2  # each class meets the window (d+2)/2 times
    objects = tuple(indec(q) for q in positions)
    return FLevelChain(params, "exact", objects, _chain_maps(params, objects))


# ---------------------------------------------------------------------------
# Exactness oracles
# ---------------------------------------------------------------------------

def _hom_from_dims(params, t: int, obj: SumObject) -> list[int]:
    """Indices of summands of obj receiving a nonzero map from vertex t."""
    return [k for k, pos in enumerate(obj.summands) if hom_dim(params, t, pos)]


def _hom_into_dims(params, t: int, obj: SumObject) -> list[int]:
    return [k for k, pos in enumerate(obj.summands) if hom_dim(params, pos, t)]


def hom_matrix_from(t: int, mor: Morphism) -> list[list[Fraction]]:
    """Matrix of Hom(t, -) applied to mor, over the canonical hom bases."""
    p = mor.params
    src = _hom_from_dims(p, t, mor.source)
    tgt = _hom_from_dims(p, t, mor.target)
    return [[mor.entries[i][j] for j in src] for i in tgt]


def hom_matrix_into(t: int, mor: Morphism) -> list[list[Fraction]]:
    """Matrix of Hom(-, t) applied to mor (source and target swap roles)."""
    p = mor.params
    cols = _hom_into_dims(p, t, mor.target)
    rows = _hom_into_dims(p, t, mor.source)
    return [[mor.entries[i][j] for i in cols] for j in rows]


def _exact_slots(dims: list[int], mats: list[list[list[Fraction]]], slots) -> list[int]:
    """Slots among `slots` where the complex fails to be exact.

    mats[k] maps space k to space k+1; exactness at slot s means the
    incoming image fills the kernel of the outgoing map, checked as
    rank(in) + rank(out) = dim together with out o in = 0.
    """
    bad = []
    for s in slots:
        in_rank = linalg.rank(mats[s - 1]) if s >= 1 else 0
        out_rank = linalg.rank(mats[s]) if s < len(mats) else 0
        ok = in_rank + out_rank == dims[s]
        if ok and 0 < s < len(mats) and dims[s]:
            prod = linalg.mat_mul(mats[s], mats[s - 1], dims[s - 1])
            ok = linalg.is_zero(prod)
        if not ok:
            bad.append(s)
    return bad


def _check_from_side(params, objects, maps, t, slots) -> list[int]:
    dims = [len(_hom_from_dims(params, t, o)) for o in objects]
    mats = [hom_matrix_from(t, m) for m in maps]
    return _exact_slots(dims, mats, slots)


def _check_into_side(params, objects, maps, t, slots) -> list[int]:
    # Hom(-, t) reverses the chain; slot s of the original corresponds to
    # slot n-1-s of the reversed complex.
    n = len(objects)
    dims = [len(_hom_into_dims(params, t, o)) for o in reversed(objects)]
    mats = [hom_matrix_into(t, m) for m in reversed(maps)]
    bad = _exact_slots(dims, mats, [n - 1 - s for s in slots])
    return [n - 1 - s for s in bad]


def check_d_kernel(chain: FLevelChain, mu: Morphism) -> bool:
    """Definition-level test: 0 -> chain -> target(mu) exact under Hom(f_t, -)."""
    p = chain.params
    if chain.objects[-1] != mu.source:
        raise ShapeMismatch("chain must end at the source of mu")
    objects = chain.objects + (mu.target,)
    maps = list(chain.maps) + [mu]
    slots = range(len(chain.objects))
    return all(
        not _check_from_side(p, objects, maps, t, slots)
        for t in range(1, p.period + 1)
    )


def check_d_cokernel(chain: FLevelChain, mu: Morphism) -> bool:
    """Dual test: source(mu) -> chain -> 0 exact under Hom(-, f_t)."""
    p = chain.params
    if chain.objects[0] != mu.target:
        raise ShapeMismatch("chain must start at the target of mu")
    objects = (mu.source,) + chain.objects
    maps = [mu] + list(chain.maps)
    slots = range(1, len(objects))
    return all(
        not _check_into_side(p, objects, maps, t, slots)
        for t in range(1, p.period + 1)
    )


def check_d_exact(chain: FLevelChain) -> bool:
    """Both functor tests on a full d+2 term sequence."""
    p = chain.params
    objects, maps = chain.objects, list(chain.maps)
    n = len(objects)
    for t in range(1, p.period + 1):
        if _check_from_side(p, objects, maps, t, range(n - 1)):
            return False
        if _check_into_side(p, objects, maps, t, range(1, n)):
            return False
    return True


@dataclass(frozen=True)
class ExactnessReport:
    """Outcome of the Hom-exactness oracle; failures are (vertex, slot) pairs."""

    ok: bool
    failures: tuple[tuple[int, int], ...]


def check_hom_exactness(a: Angle) -> ExactnessReport:
    """Brute-force exactness of every induced Hom sequence across the angle.

    The angle is extended by one period on each side (objects and maps are
    translated copies, glued by the translated connecting maps) and every
    covariant Hom functor from a test vertex is applied.  Hom spaces vanish
    beyond distance l - 1, so test vertices ranging over
    [min position - period - l + 1, max position + period] see every
    nonzero entry of the infinite sequence; exactness is checked at each
    interior slot of the extended complex.
    """
    p = a.params
    positions = [q for o in a.objects for q in o.summands]
    if not positions:
        return ExactnessReport(True, ())
    objects = (
        [shift_obj(p, o, -1) for o in a.objects]
        + list(a.objects)
        + [shift_obj(p, o, 1) for o in a.objects]
    )
    inner = a.maps[:-1]
    maps = (
        [shift_mor(m, -1) for m in inner]
        + [shift_mor(a.maps[-1], -1)]
        + list(inner)
        + [a.maps[-1]]
        + [shift_mor(m, 1) for m in inner]
    )
    lo = min(positions) - p.period - p.l + 1
    hi = max(positions) + p.period
    slots = range(1, len(objects) - 1)
    failures = []
    for t in range(lo, hi + 1):
        for s in _check_from_side(p, objects, maps, t, slots):
            failures.append((t, s))
    return ExactnessReport(not failures, tuple(failures))
