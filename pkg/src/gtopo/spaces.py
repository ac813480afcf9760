"""Finite generalized topological spaces on {0..n-1}.

A generalized topology (GT) is a family of point-sets closed under arbitrary
unions; the empty set is forced (union of nothing), membership of the whole
ground set is the "strong" property, and closure under pairwise intersection
upgrades the family to an honest topology.  Point-sets are int bitmasks,
families are tuples of masks in a canonical order, and every operation here
is a pure function so census sweeps can memoize freely.
"""

import warnings
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import InputError, PreconditionError, ResourceError


# ---------------------------------------------------------------- bitmask sets

def mask_from_points(points: Iterable[int], n: int) -> int:
    m = 0
    for p in points:
        if not isinstance(p, int) or isinstance(p, bool) or not 0 <= p < n:
            raise InputError(f"point {p!r} outside ground set 0..{n - 1}")
        m |= 1 << p
    return m


def points_from_mask(mask: int) -> list[int]:
    out = []
    p = 0
    while mask:
        if mask & 1:
            out.append(p)
        mask >>= 1
        p += 1
    return out


def fmt_mask(mask: int) -> str:
    return "{" + ",".join(str(p) for p in points_from_mask(mask)) + "}"


def canonical_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Sort key for point-sets: cardinality, then the point tuple."""
    return mask.bit_count(), tuple(points_from_mask(mask))


def canonical_family(masks: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(set(masks), key=canonical_key))


def close_under_union(masks: Iterable[int]) -> set[int]:
    """Smallest superfamily closed under pairwise (hence arbitrary) union."""
    family = set(masks)
    frontier = list(family)
    while frontier:
        m = frontier.pop()
        for x in list(family):
            u = m | x
            if u not in family:
                family.add(u)
                frontier.append(u)
    return family


# ---------------------------------------------------------------- core types

@dataclass(frozen=True)
class FiniteGT:
    """A GT on points 0..n-1: opens are bitmasks in canonical order.

    Construct through make_space (validating) or the census/product/subspace
    builders, which are union-closed by construction.
    """

    n: int
    opens: tuple[int, ...]

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def open_set(self) -> frozenset[int]:
        return frozenset(self.opens)

    @cached_property
    def closeds(self) -> tuple[int, ...]:
        return canonical_family(self.full ^ u for u in self.opens)

    @cached_property
    def closed_set(self) -> frozenset[int]:
        return frozenset(self.closeds)

    @cached_property
    def clopens(self) -> tuple[int, ...]:
        return tuple(m for m in self.opens if m in self.closed_set)

    @property
    def is_strong(self) -> bool:
        return self.full in self.open_set

    @cached_property
    def is_topology(self) -> bool:
        return all(a & b in self.open_set
                   for i, a in enumerate(self.opens)
                   for b in self.opens[i + 1:])

    def is_open(self, mask: int) -> bool:
        return mask in self.open_set

    def is_closed(self, mask: int) -> bool:
        return mask in self.closed_set


@dataclass(frozen=True)
class GTReport:
    is_gt: bool
    is_strong: bool
    is_topology: bool
    violation: str | None


@dataclass(frozen=True)
class SeparationProfile:
    t0: bool
    t1: bool
    t2: bool
    normal: bool


# ---------------------------------------------------------------- validation

def _check_masks(masks: Iterable[int], n: int) -> list[int]:
    if n < 0:
        raise InputError(f"point count must be >= 0, got {n}")
    full = (1 << n) - 1
    out = []
    for m in masks:
        if not isinstance(m, int) or isinstance(m, bool) or m < 0:
            raise InputError(f"not a bitmask: {m!r}")
        if m & ~full:
            raise InputError(
                f"set {fmt_mask(m)} has a point outside 0..{n - 1}")
        out.append(m)
    return out


def validate_gt(family: Iterable[int], n: int) -> GTReport:
    """Diagnose a family of bitmasks against the GT and topology axioms.

    violation names the first failed axiom in canonical scan order: the
    missing empty set, then the first missing pairwise union, then (for
    topology only) the first missing pairwise intersection.
    """
    masks = canonical_family(_check_masks(family, n))
    full = (1 << n) - 1
    have = set(masks)
    if 0 not in have:
        return GTReport(False, False, False, "missing empty set")
    violation = None
    is_gt = True
    for i, a in enumerate(masks):
        for b in masks[i + 1:]:
            u = a | b
            if u not in have:
                violation = f"missing union {fmt_mask(a)} | {fmt_mask(b)}"
                is_gt = False
                break
        if violation:
            break
    is_strong = is_gt and full in have
    is_topology = is_gt
    if is_gt:
        for i, a in enumerate(masks):
            if not is_topology:
                break
            for b in masks[i + 1:]:
                w = a & b
                if w not in have:
                    violation = (f"missing intersection "
                                 f"{fmt_mask(a)} & {fmt_mask(b)}")
                    is_topology = False
                    break
    return GTReport(is_gt, is_strong, is_topology, violation)


def make_space(n: int, family: Iterable[int]) -> FiniteGT:
    """Validating constructor; refuses families that are not GTs."""
    masks = canonical_family(_check_masks(family, n))
    report = validate_gt(masks, n)
    if not report.is_gt:
        raise PreconditionError(f"not a generalized topology: {report.violation}")
    return FiniteGT(n, masks)


# ---------------------------------------------------------------- operators

def closure(space: FiniteGT, a: int) -> int:
    """Intersection of all closed supersets of a (the whole space is always
    closed, so the intersection is never over an empty collection)."""
    _check_masks([a], space.n)
    acc = space.full
    for c in space.closeds:
        if a & ~c == 0:
            acc &= c
    return acc


def interior(space: FiniteGT, a: int) -> int:
    _check_masks([a], space.n)
    acc = 0
    for u in space.opens:
        if u & ~a == 0:
            acc |= u
    return acc


def subspace(space: FiniteGT, a: int) -> FiniteGT:
    """Trace GT on a, points relabeled to 0..|a|-1 in point order."""
    _check_masks([a], space.n)
    points = points_from_mask(a)
    where = {p: i for i, p in enumerate(points)}
    traces = set()
    for u in space.opens:
        traces.add(mask_from_points((where[p] for p in points_from_mask(u & a)),
                                    len(points)))
    return FiniteGT(len(points), canonical_family(traces))


def product(s1: FiniteGT, s2: FiniteGT) -> FiniteGT:
    """Cross GT on X1 x X2 (row-major): opens (U x X2) | (X1 x V)."""
    if not (s1.is_strong and s2.is_strong):
        raise PreconditionError("product requires strong factors")
    n = s1.n * s2.n
    rows = {u: _stretch_rows(u, s1.n, s2.n) for u in s1.opens}
    cols = {v: _stretch_cols(v, s1.n, s2.n) for v in s2.opens}
    opens = {rows[u] | cols[v] for u in s1.opens for v in s2.opens}
    return FiniteGT(n, canonical_family(opens))


def _stretch_rows(u: int, n1: int, n2: int) -> int:
    row = (1 << n2) - 1
    m = 0
    for p in points_from_mask(u):
        m |= row << (p * n2)
    return m


def _stretch_cols(v: int, n1: int, n2: int) -> int:
    m = 0
    for q in points_from_mask(v):
        for p in range(n1):
            m |= 1 << (p * n2 + q)
    return m


def pair_point(x1: int, x2: int, n2: int) -> int:
    return x1 * n2 + x2


def generated_topology(space: FiniteGT) -> FiniteGT:
    """Smallest topology containing the opens: close under pairwise
    intersection, then under union."""
    if not space.is_strong:
        raise PreconditionError("generated topology requires a strong space")
    family = set(space.opens)
    frontier = list(family)
    while frontier:
        m = frontier.pop()
        for x in list(family):
            w = m & x
            if w not in family:
                family.add(w)
                frontier.append(w)
    return FiniteGT(space.n, canonical_family(close_under_union(family)))


def separation_profile(space: FiniteGT) -> SeparationProfile:
    n, opens = space.n, space.opens
    t0 = t1 = t2 = True
    for x in range(n):
        for y in range(x + 1, n):
            bx, by = 1 << x, 1 << y
            sees_x = any(u & bx and not u & by for u in opens)
            sees_y = any(u & by and not u & bx for u in opens)
            apart = any(u & bx and v & by and not u & v
                        for u in opens for v in opens)
            t0 = t0 and (sees_x or sees_y)
            t1 = t1 and (sees_x and sees_y)
            t2 = t2 and apart
    normal = True
    closeds = space.closeds
    for i, a in enumerate(closeds):
        for b in closeds[i:]:
            if a & b:
                continue
            if not any(a & ~u == 0 and b & ~v == 0 and not u & v
                       for u in opens for v in opens):
                normal = False
    return SeparationProfile(t0, t1, t2, normal)


# ---------------------------------------------------------------- census

CENSUS_HARD_CAP = 5


def enumerate_strong_gts(n: int, max_points: int = 4) -> Iterator[FiniteGT]:
    """Every strong GT on n labeled points, exactly once, streamed in
    lexicographic order of the inclusion vector over the canonical candidate
    order (absent before present).

    Candidates are the proper nonempty subsets; the empty set and the ground
    set are members of every strong GT.  The search branches exclude-first
    and propagates forced unions, which always land strictly later in
    canonical order, so each leaf is union-closed by construction.
    """
    if n < 0:
        raise InputError(f"point count must be >= 0, got {n}")
    cap = min(max_points, CENSUS_HARD_CAP)
    if n > cap:
        raise ResourceError(
            f"census at {n} points exceeds the configured maximum {cap}")
    if n >= 5:
        warnings.warn("census at 5 points enumerates about 1.4M families",
                      stacklevel=2)
    full = (1 << n) - 1
    if full == 0:
        yield FiniteGT(0, (0,))
        return
    cands = sorted(range(1, full), key=canonical_key)
    pos = {m: i for i, m in enumerate(cands)}
    k = len(cands)
    UNDEC, IN, OUT = 0, 1, -1
    status = [UNDEC] * k
    members: list[int] = []

    def dfs(i: int) -> Iterator[FiniteGT]:
        if i == k:
            yield FiniteGT(n, (0, *members, full))
            return
        m = cands[i]
        if status[i] != IN:
            status[i] = OUT
            yield from dfs(i + 1)
            status[i] = UNDEC
        # include branch (mandatory when an earlier union forced this set)
        undo = []
        ok = True
        for x in members:
            u = m | x
            if u == full or u == m:
                continue
            j = pos[u]
            if status[j] == OUT:
                ok = False
                break
            if status[j] == UNDEC:
                status[j] = IN
                undo.append(j)
        if ok:
            members.append(m)
            yield from dfs(i + 1)
            members.pop()
        for j in undo:
            status[j] = UNDEC

    yield from dfs(0)


def census_count(n: int, max_points: int = 4) -> int:
    return sum(1 for _ in enumerate_strong_gts(n, max_points))


def sample_strong_gts(n: int, count: int, seed: int) -> list[FiniteGT]:
    """Deterministic sample of distinct strong GTs: seed a RNG, draw random
    subfamilies of proper nonempty subsets, close each under union."""
    import random
    if n < 1:
        raise InputError("sampling needs at least one point")
    rng = random.Random(seed)
    full = (1 << n) - 1
    cands = sorted(range(1, full), key=canonical_key)
    seen: set[tuple[int, ...]] = set()
    out: list[FiniteGT] = []
    tries = 0
    while len(out) < count:
        tries += 1
        if tries > 1000 * count:
            raise ResourceError(
                f"could not find {count} distinct strong GTs on {n} points")
        bits = rng.getrandbits(len(cands))
        picked = [m for i, m in enumerate(cands) if bits >> i & 1]
        opens = canonical_family(close_under_union([0, full, *picked]))
        if opens not in seen:
            seen.add(opens)
            out.append(FiniteGT(n, opens))
    return out


# ---------------------------------------------------------------- file format

def space_to_dict(space: FiniteGT) -> dict:
    return {"points": space.n,
            "open_sets": [points_from_mask(u) for u in space.opens]}


def parse_space_dict(doc) -> tuple[int, list[int]]:
    """Type-check the {"points": n, "open_sets": [[...]]} document and return
    (n, masks).  GT axioms are not enforced here; validate_gt does that."""
    if not isinstance(doc, dict):
        raise InputError("space document must be a JSON object")
    if "points" not in doc or "open_sets" not in doc:
        raise InputError('space document needs "points" and "open_sets"')
    n = doc["points"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise InputError(f'"points" must be a non-negative integer, got {n!r}')
    raw = doc["open_sets"]
    if not isinstance(raw, list) or any(not isinstance(s, list) for s in raw):
        raise InputError('"open_sets" must be a list of point lists')
    return n, [mask_from_points(s, n) for s in raw]
