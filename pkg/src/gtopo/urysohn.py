"""Urysohn-type separation on finite GT spaces.

Everything here is exact and exhaustive: functions are finite tuples of
rationals, continuity is decided by fiber and ray-preimage criteria, the
four separation statements (separating functions into the interval topology
or the ray GT, extension of continuous functions off closed subspaces) are
decided by brute-force search over partitions, and the ladder/one-step
machinery that powers the classical dyadic construction is implemented so
its invariants can be machine-checked on every census space.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Optional

from .errors import InputError, NoExtension, PreconditionError, ResourceError
from .rationals import dyadics_by_level, unit_rationals
from .spaces import FiniteGT, canonical_key, closure, fmt_mask

TARGETS = ("taun", "gtaun")


def _check_target(target: str) -> None:
    if target not in TARGETS:
        raise InputError(f"target must be one of {TARGETS}, got {target!r}")


def _as_fraction(v) -> Fraction:
    if isinstance(v, float):
        raise InputError(f"refusing inexact float value: {v!r}")
    try:
        return Fraction(v)
    except (ValueError, TypeError, ZeroDivisionError) as e:
        raise InputError(f"not an exact rational: {v!r}") from e


# ---------------------------------------------------------------- functions

@dataclass(frozen=True)
class FiniteFunction:
    """A rational-valued function on points 0..n-1."""

    values: tuple[Fraction, ...]

    @property
    def n(self) -> int:
        return len(self.values)

    @cached_property
    def levels(self) -> tuple[Fraction, ...]:
        return tuple(sorted(set(self.values)))

    @cached_property
    def fibers(self) -> tuple[int, ...]:
        """Level sets as masks, aligned with levels (ascending values)."""
        out = []
        for v in self.levels:
            m = 0
            for p, w in enumerate(self.values):
                if w == v:
                    m |= 1 << p
            out.append(m)
        return tuple(out)

    def preimage_below(self, r: Fraction, strict: bool = True) -> int:
        m = 0
        for p, w in enumerate(self.values):
            if w < r or (not strict and w == r):
                m |= 1 << p
        return m

    def to_value_map(self) -> dict[str, str]:
        return {str(p): str(v) for p, v in enumerate(self.values)}


def make_function(values: Iterable) -> FiniteFunction:
    return FiniteFunction(tuple(_as_fraction(v) for v in values))


def constant_function(n: int, value) -> FiniteFunction:
    return FiniteFunction((_as_fraction(value),) * n)


def check_continuity_finite(f: FiniteFunction, space: FiniteGT,
                            target: str) -> bool:
    """Continuity of f into the interval topology (taun: every fiber open)
    or into the ray GT (gtaun: every prefix and suffix union of the
    value-ordered fibers open; union-closure lifts rays to all opens)."""
    _check_target(target)
    if f.n != space.n:
        raise InputError(f"function on {f.n} points, space on {space.n}")
    if target == "taun":
        return all(m in space.open_set for m in f.fibers)
    acc = 0
    for m in f.fibers:
        acc |= m
        if acc not in space.open_set:
            return False
    acc = 0
    for m in reversed(f.fibers):
        acc |= m
        if acc not in space.open_set:
            return False
    return True


# ---------------------------------------------------------------- pair deciders

def _check_pair(space: FiniteGT, a: int, b: int) -> None:
    if not space.is_strong:
        raise PreconditionError("separation deciders need a strong space")
    for m in (a, b):
        if m & ~space.full:
            raise InputError(f"set {fmt_mask(m)} leaves the ground set")
        if not space.is_closed(m):
            raise PreconditionError(f"set {fmt_mask(m)} is not closed")
    if a & b:
        raise PreconditionError("the closed sets are not disjoint")


def decide_gul_pair(space: FiniteGT, a: int, b: int) -> Optional[FiniteFunction]:
    """Separating function into the ray GT, or None.

    On a finite space such a function exists exactly when some clopen set
    contains a and misses b; the witness is the 0/1 indicator of the
    canonically least one.
    """
    _check_pair(space, a, b)
    for u in space.clopens:
        if a & ~u == 0 and u & b == 0:
            return FiniteFunction(tuple(
                Fraction(0) if u >> p & 1 else Fraction(1)
                for p in range(space.n)))
    return None


def _partition_region(space: FiniteGT, region: int) -> Optional[list[int]]:
    """Exact cover of region by disjoint nonempty opens, or None."""
    if region == 0:
        return []
    p = (region & -region).bit_length() - 1
    for u in space.opens:
        if u and u >> p & 1 and u & ~region == 0:
            rest = _partition_region(space, region ^ u)
            if rest is not None:
                return [u] + rest
    return None


def decide_ul_pair(space: FiniteGT, a: int, b: int) -> Optional[FiniteFunction]:
    """Separating function into the interval topology, or None.

    Decided by the fiber criterion: the fibers must partition the space into
    opens, with a and b inside distinct fibers carrying values 0 and 1.  The
    verdict is cross-checked against the clopen route; on finite spaces the
    two collapse, and a disagreement means a bug.
    """
    _check_pair(space, a, b)
    witness = None
    if a == 0:
        witness = constant_function(space.n, 1)
    elif b == 0:
        witness = constant_function(space.n, 0)
    else:
        witness = _search_open_partition_witness(space, a, b)
    other = next((u for u in space.clopens if a & ~u == 0 and u & b == 0), None)
    if (witness is None) != (other is None):
        raise RuntimeError(
            "internal cross-check failed: fiber search and clopen search "
            f"disagree on pair ({fmt_mask(a)}, {fmt_mask(b)})")
    return witness


def _search_open_partition_witness(space: FiniteGT, a: int,
                                   b: int) -> Optional[FiniteFunction]:
    for ua in space.opens:
        if a & ~ua or ua & b:
            continue
        for ub in space.opens:
            if b & ~ub or ub & ua:
                continue
            rest = _partition_region(space, space.full ^ (ua | ub))
            if rest is None:
                continue
            values = [Fraction(0)] * space.n
            blocks = [(ua, Fraction(0)), (ub, Fraction(1))]
            blocks += [(m, Fraction(k)) for k, m in
                       enumerate(sorted(rest, key=canonical_key), start=2)]
            for m, v in blocks:
                for p in range(space.n):
                    if m >> p & 1:
                        values[p] = v
            return FiniteFunction(tuple(values))
    return None


# ---------------------------------------------------------------- partitions

def nonempty_submasks(region: int) -> Iterator[int]:
    s = region
    while s:
        yield s
        s = (s - 1) & region


def ordered_partitions(region: int) -> Iterator[tuple[int, ...]]:
    """All ordered partitions of region into nonempty blocks."""
    if region == 0:
        yield ()
        return
    for first in nonempty_submasks(region):
        for rest in ordered_partitions(region ^ first):
            yield (first, *rest)


def set_partitions(region: int) -> Iterator[tuple[int, ...]]:
    """All unordered partitions, one representative each: the block holding
    the least remaining point comes first."""
    if region == 0:
        yield ()
        return
    low = region & -region
    rest_pool = region ^ low
    for extra in _all_submasks(rest_pool):
        first = low | extra
        for rest in set_partitions(region ^ first):
            yield (first, *rest)


def _all_submasks(region: int) -> Iterator[int]:
    s = region
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & region


def _continuous_partitions(trace_opens: frozenset[int], region: int,
                           target: str) -> list[tuple[int, ...]]:
    """Partitions of region that are continuous fiber structures relative to
    the given open traces: taun wants every block open, gtaun wants every
    prefix and suffix union open (block order = value order)."""
    out = []
    if target == "taun":
        for part in set_partitions(region):
            if all(m in trace_opens for m in part):
                out.append(part)
        return out
    for part in ordered_partitions(region):
        acc = 0
        ok = True
        for m in part:
            acc |= m
            if acc not in trace_opens:
                ok = False
                break
        if ok:
            acc = 0
            for m in reversed(part):
                acc |= m
                if acc not in trace_opens:
                    ok = False
                    break
        if ok:
            out.append(part)
    return out


@lru_cache(maxsize=4096)
def _continuous_x_partitions(space: FiniteGT, target: str) -> tuple:
    return tuple(_continuous_partitions(space.open_set, space.full, target))


# ---------------------------------------------------------------- statements

@dataclass(frozen=True)
class StatementReport:
    statement: str
    holds: bool
    pair: Optional[tuple[int, int]] = None
    counterexample: Optional[tuple[int, tuple[tuple[int, Fraction], ...]]] = None


STATEMENTS = ("UL", "GUL", "TET", "GTET")


def decide_statement(space: FiniteGT, statement: str) -> StatementReport:
    """Decide one of the four separation statements by exhaustive search.

    UL/GUL quantify the pair deciders over all disjoint closed pairs; the
    extension statements quantify over every closed set and every continuous
    fiber structure on its subspace, asking for a continuous fiber structure
    on the whole space whose trace is the given one.
    """
    st = statement.upper()
    if st not in STATEMENTS:
        raise InputError(f"statement must be one of {STATEMENTS}, got {statement!r}")
    if not space.is_strong:
        raise PreconditionError("statements are decided on strong spaces")
    if st in ("UL", "GUL"):
        decide = decide_ul_pair if st == "UL" else decide_gul_pair
        closeds = space.closeds
        for i, a in enumerate(closeds):
            for b in closeds[i:]:
                if a & b:
                    continue
                if decide(space, a, b) is None:
                    return StatementReport(st, False, pair=(a, b))
        return StatementReport(st, True)
    if space.n > 5:
        raise ResourceError(
            "extension statements are exhaustive; refusing above 5 points")
    target = "taun" if st == "TET" else "gtaun"
    xparts = _continuous_x_partitions(space, target)
    xparts_unord = ({frozenset(q) for q in xparts} if target == "taun" else None)
    for a in space.closeds:
        trace_opens = frozenset(u & a for u in space.opens)
        for part in _continuous_partitions(trace_opens, a, target):
            if _extends(part, a, xparts, xparts_unord, target):
                continue
            return StatementReport(st, False,
                                   counterexample=(a, _partition_values(part)))
    return StatementReport(st, True)


def _extends(part, a, xparts, xparts_unord, target) -> bool:
    if target == "gtaun":
        return any(tuple(q & a for q in qs if q & a) == part for qs in xparts)
    want = frozenset(part)
    return any(frozenset(q & a for q in qs if q & a) == want
               for qs in xparts_unord)


def _partition_values(part: tuple[int, ...]) -> tuple[tuple[int, Fraction], ...]:
    """Canonical function realizing a fiber structure: block k gets value k."""
    out = []
    for k, m in enumerate(part):
        p = 0
        mm = m
        while mm:
            if mm & 1:
                out.append((p, Fraction(k)))
            mm >>= 1
            p += 1
    return tuple(sorted(out))


# ---------------------------------------------------------------- ladders

@dataclass(frozen=True)
class Ladder:
    """Finite-support monotone family of opens indexed by rationals in (0,1),
    interpolated by closures: for indices r < s, cl(U_r) must land in U_s."""

    entries: tuple[tuple[Fraction, int], ...]

    @property
    def indices(self) -> tuple[Fraction, ...]:
        return tuple(r for r, _ in self.entries)

    @property
    def sets(self) -> tuple[int, ...]:
        return tuple(u for _, u in self.entries)


@dataclass(frozen=True)
class PairLadder:
    """Finite-support family of nested open-closed pairs indexed by rationals
    in (0,1); consecutive pairs interpolate through open differences."""

    entries: tuple[tuple[Fraction, tuple[int, int]], ...]

    @property
    def indices(self) -> tuple[Fraction, ...]:
        return tuple(r for r, _ in self.entries)


def _check_indices(indices) -> list[Fraction]:
    rs = [_as_fraction(r) for r in indices]
    if len(set(rs)) != len(rs):
        raise InputError("ladder indices must be distinct")
    for r in rs:
        if not 0 < r < 1:
            raise InputError(f"ladder index {r} outside (0,1)")
    return rs


def make_ladder(entries) -> Ladder:
    items = dict(entries).items() if isinstance(entries, dict) else list(entries)
    pairs = [( _as_fraction(r), u) for r, u in items]
    _check_indices([r for r, _ in pairs])
    return Ladder(tuple(sorted(pairs)))


def make_pair_ladder(entries) -> PairLadder:
    items = dict(entries).items() if isinstance(entries, dict) else list(entries)
    pairs = [(_as_fraction(r), (u, f)) for r, (u, f) in items]
    _check_indices([r for r, _ in pairs])
    return PairLadder(tuple(sorted(pairs)))


@dataclass(frozen=True)
class CheckReport:
    ok: bool
    clause: Optional[str] = None
    detail: Optional[str] = None


def check_ladder(space: FiniteGT, ladder, a: int, b: int) -> CheckReport:
    """Verify the ladder clauses on the finite support, reporting the first
    violation: (i) closure interpolation (nesting with open differences for
    pair ladders), (ii) the lower set contains a at every index, and (iii)
    closures avoid b (pair ladders: the closed components avoid b)."""
    if isinstance(ladder, Ladder):
        return _check_single_ladder(space, ladder, a, b)
    if isinstance(ladder, PairLadder):
        return _check_pair_ladder(space, ladder, a, b)
    raise InputError(f"not a ladder: {ladder!r}")


def _check_single_ladder(space, ladder, a, b) -> CheckReport:
    ent = ladder.entries
    for r, u in ent:
        if u not in space.open_set:
            return CheckReport(False, "open", f"U_{r} is not open")
    for i, (r, u) in enumerate(ent):
        cl = closure(space, u)
        for s, v in ent[i + 1:]:
            if cl & ~v:
                return CheckReport(False, "(i)",
                                   f"cl(U_{r}) is not inside U_{s}")
    for r, u in ent:
        if a & ~u:
            return CheckReport(False, "(ii)", f"U_{r} does not contain a")
    for r, u in ent:
        if closure(space, u) & b:
            return CheckReport(False, "(iii)", f"cl(U_{r}) meets b")
    return CheckReport(True)


def _check_pair_ladder(space, ladder, a, b) -> CheckReport:
    ent = ladder.entries
    for r, (u, f) in ent:
        if u not in space.open_set:
            return CheckReport(False, "(i)", f"U_{r} is not open")
        if f not in space.closed_set:
            return CheckReport(False, "(i)", f"F_{r} is not closed")
        if a & ~u or u & ~f:
            return CheckReport(False, "(i)",
                               f"chain a <= U_{r} <= F_{r} broken")
    for i, (s, (_, fs)) in enumerate(ent):
        for r, (ur, _) in ent[i + 1:]:
            if fs & ~ur:
                return CheckReport(False, "(ii)", f"F_{s} is not inside U_{r}")
            if (ur & ~fs) not in space.open_set:
                return CheckReport(False, "(ii)",
                                   f"U_{r} minus F_{s} is not open")
    for r, (_, f) in ent:
        if f & b:
            return CheckReport(False, "(iii)", f"F_{r} meets b")
    return CheckReport(True)


def function_from_ladder(space: FiniteGT, ladder: Ladder,
                         b: int) -> FiniteFunction:
    """Evaluate the infimum formula over the downward-filled ladder: points
    of the lowest rung get 0, points first appearing at rung s_i get the
    previous index s_{i-1}, points beyond every rung get 1 (the index-1 set
    is the complement of b by convention, and indices above 1 cover all of
    the space, so both cases land at 1)."""
    if not space.is_closed(b):
        raise PreconditionError(f"set {fmt_mask(b)} is not closed")
    rep = _check_single_ladder(space, ladder, 0, 0)
    if rep.clause in ("open", "(i)"):
        raise PreconditionError(f"invalid ladder: {rep.detail}")
    ent = ladder.entries
    values = []
    for p in range(space.n):
        val = Fraction(1)
        for i, (r, u) in enumerate(ent):
            if u >> p & 1:
                val = Fraction(0) if i == 0 else ent[i - 1][0]
                break
        values.append(val)
    return FiniteFunction(tuple(values))


def ladder_from_function(space: FiniteGT, f: FiniteFunction,
                         mode: str = "single", indices=None):
    """Extract the ladder of strict-below preimages (and weak-below closed
    companions in pair mode) at the given indices, default dyadics to
    level 4.  The function must be continuous into the ray GT (single) or
    the interval topology (pair)."""
    if mode not in ("single", "pair"):
        raise InputError(f"mode must be single or pair, got {mode!r}")
    target = "gtaun" if mode == "single" else "taun"
    if not check_continuity_finite(f, space, target):
        raise PreconditionError(f"function is not {target}-continuous")
    rs = sorted(_check_indices(list(indices) if indices is not None
                               else list(dyadics_by_level(4))))
    if mode == "single":
        return Ladder(tuple((r, f.preimage_below(r)) for r in rs))
    return PairLadder(tuple(
        (r, (f.preimage_below(r), f.preimage_below(r, strict=False)))
        for r in rs))


def extend_ladder_step(space: FiniteGT, partial: Ladder, a: int, b: int,
                       next_index) -> Ladder:
    """Insert one rung at next_index: the canonically least open set that
    interpolates between the closure of the rung below (or a) and the rung
    above (or the complement of b)."""
    r = _as_fraction(next_index)
    if not 0 < r < 1:
        raise InputError(f"next index {r} outside (0,1)")
    if r in partial.indices:
        raise InputError(f"index {r} already present")
    rep = check_ladder(space, partial, a, b)
    if not rep.ok:
        raise PreconditionError(f"invalid partial ladder: {rep.detail}")
    _check_pair(space, a, b)
    below = [(s, u) for s, u in partial.entries if s < r]
    above = [(s, u) for s, u in partial.entries if s > r]
    lower = closure(space, below[-1][1]) if below else a
    upper = (space.full ^ above[0][1]) if above else b
    for w in space.opens:
        if lower & ~w or a & ~w:
            continue
        cw = closure(space, w)
        if cw & upper or cw & b:
            continue
        return Ladder(tuple(sorted(partial.entries + ((r, w),))))
    raise NoExtension(
        f"no open set separates {fmt_mask(lower)} from {fmt_mask(upper)}",
        blocking=(lower, upper))


# ---------------------------------------------------------------- witnesses

@dataclass
class EffectiveWitness:
    """A total table assigning each ordered disjoint closed pair an ordered
    disjoint open pair that covers it componentwise."""

    table: dict[tuple[int, int], tuple[int, int]]

    def apply(self, a: int, b: int) -> tuple[int, int]:
        try:
            return self.table[(a, b)]
        except KeyError:
            raise InputError(
                f"({fmt_mask(a)}, {fmt_mask(b)}) is not a disjoint closed "
                f"pair of this space") from None


def normality_defect(space: FiniteGT) -> Optional[tuple[int, int]]:
    """First disjoint closed pair with no disjoint open covers, or None."""
    closeds = space.closeds
    for i, a in enumerate(closeds):
        for b in closeds[i:]:
            if a & b:
                continue
            if not any(a & ~u == 0 and b & ~v == 0 and not u & v
                       for u in space.opens for v in space.opens):
                return (a, b)
    return None


def effective_witness(space: FiniteGT) -> Optional[EffectiveWitness]:
    """Build the canonical witness table on a normal space: empty members
    get the trivial pairs, every other pair the canonically least disjoint
    open cover.  Returns None when some pair cannot be covered."""
    if not space.is_strong:
        raise PreconditionError("effective witnesses need a strong space")
    if normality_defect(space) is not None:
        return None
    table = {}
    closeds = space.closeds
    for a in closeds:
        for b in closeds:
            if a & b:
                continue
            if a == 0:
                table[(a, b)] = (0, space.full)
            elif b == 0:
                table[(a, b)] = (space.full, 0)
            else:
                table[(a, b)] = _least_open_cover(space, a, b)
    return EffectiveWitness(table)


def _least_open_cover(space, a, b) -> tuple[int, int]:
    for u in space.opens:
        if a & ~u:
            continue
        for v in space.opens:
            if b & ~v == 0 and not u & v:
                return (u, v)
    raise PreconditionError("pair admits no disjoint open cover")


def combine_effective_witnesses(s1: FiniteGT, s2: FiniteGT,
                                w1: EffectiveWitness,
                                w2: EffectiveWitness) -> EffectiveWitness:
    """Witness table for the product space: closed sets there are rectangles,
    so each disjoint closed pair has a coordinate with disjoint factors; the
    factor witness is stretched along the other coordinate."""
    from .spaces import product, _stretch_cols, _stretch_rows
    prod = product(s1, s2)
    table = {}
    for a in prod.closeds:
        for b in prod.closeds:
            if a & b:
                continue
            a1, a2 = _rect_factors(a, s1.n, s2.n)
            b1, b2 = _rect_factors(b, s1.n, s2.n)
            if a1 & b1 == 0:
                u, v = w1.apply(a1, b1)
                table[(a, b)] = (_stretch_rows(u, s1.n, s2.n),
                                 _stretch_rows(v, s1.n, s2.n))
            else:
                u, v = w2.apply(a2, b2)
                table[(a, b)] = (_stretch_cols(u, s1.n, s2.n),
                                 _stretch_cols(v, s1.n, s2.n))
    return EffectiveWitness(table)


def _rect_factors(m: int, n1: int, n2: int) -> tuple[int, int]:
    rows = 0
    cols = 0
    for x in range(n1):
        for y in range(n2):
            if m >> (x * n2 + y) & 1:
                rows |= 1 << x
                cols |= 1 << y
    return rows, cols


# ---------------------------------------------------------------- U-families

@dataclass(frozen=True)
class UFamily:
    """An indexed family of nested open-closed pairs with rational labels.

    The creation order is the chain order; labels are distinct rationals in
    (0,1) drawn from the fixed unit enumeration when built by extension."""

    labels: tuple[Fraction, ...]
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if len(self.labels) != len(self.pairs):
            raise InputError("labels and pairs must align")

    @property
    def length(self) -> int:
        return len(self.pairs)


EMPTY_U_FAMILY = UFamily((), ())


def validate_u_family(space: FiniteGT, fam: UFamily, a: int,
                      b: int) -> CheckReport:
    """Check the chain clauses: (i) a <= U_0 <= F_0 <= ... <= F_last <= X-b
    with open U's and closed F's, (ii) later opens minus earlier closeds are
    open, (iii) each position admits an auxiliary open-closed pair tied to
    its neighbors whose differences against the family are all open."""
    _check_u_pair(space, a, b)
    labels = fam.labels
    if len(set(labels)) != len(labels) or any(not 0 < r < 1 for r in labels):
        return CheckReport(False, "labels",
                           "labels must be distinct rationals in (0,1)")
    us = [u for u, _ in fam.pairs]
    fs = [f for _, f in fam.pairs]
    k = fam.length
    for i in range(k):
        if us[i] not in space.open_set or fs[i] not in space.closed_set:
            return CheckReport(False, "(i)", f"pair {i} is not open-closed")
    for i in range(k):
        lower = a if i == 0 else fs[i - 1]
        if lower & ~us[i] or us[i] & ~fs[i]:
            return CheckReport(False, "(i)", f"chain broken at position {i}")
    if k and fs[-1] & b:
        return CheckReport(False, "(i)", "top closed set meets b")
    for j in range(k):
        for i in range(j):
            if (us[j] & ~fs[i]) not in space.open_set:
                return CheckReport(
                    False, "(ii)",
                    f"U at position {j} minus F at position {i} is not open")
    for i in range(k):
        if not _aux_pair_ok(space, us, fs, i):
            return CheckReport(
                False, "(iii)", f"no auxiliary pair for position {i}")
    return CheckReport(True)


def _check_u_pair(space, a, b):
    _check_pair(space, a, b)
    if a == 0 or b == 0:
        raise PreconditionError("the chain clauses are about nonempty pairs")


def _aux_pair_ok(space, us, fs, i) -> bool:
    last = len(us) - 1
    for u in space.opens:
        if i == last and fs[last] & ~u:
            continue
        if 0 < i < last and fs[i] & ~u:
            continue
        for f in space.closeds:
            if u & ~f:
                continue
            if i == 0 and f & ~us[0]:
                continue
            if 0 < i < last and f & ~us[i + 1]:
                continue
            if _aux_side_conditions(space, us, fs, u, f):
                return True
    return False


def _aux_side_conditions(space, us, fs, u, f) -> bool:
    for j in range(len(us)):
        if f & ~us[j] == 0 and (us[j] & ~f) not in space.open_set:
            return False
        if fs[j] & ~u == 0 and (u & ~fs[j]) not in space.open_set:
            return False
    return True


def extend_u_family(space: FiniteGT, fam: UFamily, a: int, b: int) -> UFamily:
    """Append one pair: the canonically least open-closed pair whose extended
    family still satisfies all chain clauses.  The new label is the first
    unit-enumeration rational not yet used.  The empty family bootstraps to
    length 1."""
    rep = validate_u_family(space, fam, a, b)
    if not rep.ok:
        raise PreconditionError(f"invalid family: clause {rep.clause}, "
                                f"{rep.detail}")
    psi = unit_rationals()
    used = set(fam.labels)
    i = 0
    while psi.value_at(i) in used:
        i += 1
    label = psi.value_at(i)
    floor = fam.pairs[-1][1] if fam.length else a
    for u in space.opens:
        if floor & ~u:
            continue
        for f in space.closeds:
            if u & ~f or f & b:
                continue
            cand = UFamily(fam.labels + (label,), fam.pairs + ((u, f),))
            if validate_u_family(space, cand, a, b).ok:
                return cand
    raise NoExtension("no pair extends the family", blocking=(a, b))


@dataclass(frozen=True)
class UNormalReport:
    n_max: int
    per_n: tuple[bool, ...]
    blocking: tuple[Optional[tuple[int, int]], ...]

    @property
    def all_hold(self) -> bool:
        return all(self.per_n)


def is_u_normal(space: FiniteGT, n_max: int = 3) -> UNormalReport:
    """For each chain length up to n_max+1, does every nonempty disjoint
    closed pair admit a family satisfying the chain clauses?  Verdicts are
    reported per length bound; blocking records the first failing pair."""
    if not space.is_strong:
        raise PreconditionError("chain normality needs a strong space")
    if n_max < 0:
        raise InputError("n_max must be >= 0")
    pairs = [(x, y) for x in space.closeds for y in space.closeds
             if x and y and not x & y]
    per_n = []
    blocking = []
    for n in range(n_max + 1):
        verdict = True
        block = None
        for x, y in pairs:
            if not _chain_family_exists(space, x, y, n):
                verdict = False
                block = (x, y)
                break
        per_n.append(verdict)
        blocking.append(block)
    return UNormalReport(n_max, tuple(per_n), tuple(blocking))


def _chain_family_exists(space: FiniteGT, a: int, b: int, n: int) -> bool:
    if any(a & ~c == 0 and c & b == 0 for c in space.clopens):
        return True
    if n == 0:
        return False
    pool = [(u, f) for u in space.opens for f in space.closeds
            if a & ~u == 0 and u & ~f == 0 and not f & b]
    if not pool:
        return False
    us: list[int] = []
    fs: list[int] = []

    def dfs(i: int) -> bool:
        if i == n + 1:
            return all(_aux_pair_ok(space, us, fs, pos)
                       for pos in range(n + 1))
        for u, f in pool:
            if us and fs[-1] & ~u:
                continue
            if any((u & ~fs[j]) not in space.open_set for j in range(i)):
                continue
            us.append(u)
            fs.append(f)
            if dfs(i + 1):
                us.pop()
                fs.pop()
                return True
            us.pop()
            fs.pop()
        return False

    return dfs(0)
