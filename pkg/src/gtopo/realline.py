"""Two generalized topologies on the real line, implemented symbolically.

* gtn: ∅, ℝ, the rays (−∞,a) and (a,∞), and unions (−∞,a) ∪ (b,∞) with a ≤ b.
* gts: gtn plus the half-closed rays [a,∞) and unions (−∞,a) ∪ [b,∞), a < b.

Neither family is intersection-closed, so these are GT spaces and not
topologies.  Both open catalogs (and the matching closed catalogs) are finite
in form, which makes everything here decidable by pattern matching on
canonical SymbolicSets: classification, closures, Urysohn-style ramps between
gap-separated closed sets, Tietze-style extensions off closed pieces,
continuity verdicts for piecewise-affine maps, the effective separation
function F obtained by scanning a fixed enumeration of ℚ, and the dyadic
open-set ladders F generates.

Continuity targets:

* taun: the topology generated by bounded open intervals with rational ends;
  continuity means every window preimage (p,q) is open in the source.
* gtaun: the ray GT itself; continuity means every ray preimage is open in
  the source.

Both quantifiers are discharged by critical-value analysis: a preimage's
shape can only change when the window endpoint crosses one of finitely many
values attained at breakpoints or piece-end limits, so checking those values
plus representatives between them decides the full quantifier exactly.
"""

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, PreconditionError, ResourceError
from .pwmaps import PiecewiseMap, constant_map, make_pwmap
from .rationals import all_rationals, dyadic_neighbors
from .symsets import (ALL_REALS, EMPTY_SET, Interval, SymbolicSet, above,
                      below, make_set)

SPACES = ("gtn", "gts")
TARGETS = ("taun", "gtaun")

_PSI = all_rationals()  # the fixed scan order every effective construction uses


def _check_space(space: str) -> None:
    if space not in SPACES:
        raise InputError(f"unknown space {space!r}: expected one of {SPACES}")


def _check_target(target: str) -> None:
    if target not in TARGETS:
        raise InputError(f"unknown target {target!r}: expected one of {TARGETS}")


def _is_open_form(s: SymbolicSet, space: str) -> bool:
    comps = s.components
    if len(comps) == 0:
        return True
    if len(comps) == 1:
        c = comps[0]
        if c.lo is None and c.hi is None:
            return True
        if c.lo is None:
            return not c.hi_closed                       # (-inf, a)
        if c.hi is None:
            return not c.lo_closed or space == "gts"     # (a, inf) / [a, inf)
        return False
    if len(comps) == 2:
        left, right = comps
        if left.lo is not None or left.hi_closed or right.hi is not None:
            return False
        # canonical form already forces a <= b (a < b when right starts closed)
        return not right.lo_closed or space == "gts"
    return False


def _is_closed_form(s: SymbolicSet, space: str) -> bool:
    comps = s.components
    if len(comps) == 0:
        return True
    if len(comps) > 1:
        return False
    c = comps[0]
    if c.lo is None and c.hi is None:
        return True
    if c.lo is None:
        return c.hi_closed or space == "gts"             # (-inf,a] / (-inf,a)
    if c.hi is None:
        return c.lo_closed                               # [a, inf)
    if c.lo_closed and c.hi_closed:
        return True                                      # [a, b]
    return space == "gts" and c.lo_closed and not c.hi_closed   # [a, b)


def classify(s: SymbolicSet, space: str) -> str:
    _check_space(space)
    o, c = _is_open_form(s, space), _is_closed_form(s, space)
    if o and c:
        return "clopen"
    if o:
        return "open"
    if c:
        return "closed"
    return "neither"


def _open_in(s: SymbolicSet, space: str) -> bool:
    return _is_open_form(s, space)


def _closed_in(s: SymbolicSet, space: str) -> bool:
    return _is_closed_form(s, space)


def closure_sym(s: SymbolicSet, space: str) -> SymbolicSet:
    """Least closed-catalog superset: the hull, with end flags per catalog."""
    _check_space(space)
    if s.is_empty:
        return EMPTY_SET
    lo, _ = s.inf()
    hi, hi_attained = s.sup()
    lo_closed = lo is not None
    if space == "gtn":
        hi_closed = hi is not None
    else:
        # [a,b) and (-inf,a) are gts-closed, so an unattained sup stays open
        hi_closed = hi is not None and hi_attained
    return SymbolicSet((Interval(lo, hi, lo_closed, hi_closed),))


# --- separation ramps -------------------------------------------------------

def _check_closed_pair(a: SymbolicSet, b: SymbolicSet, space: str) -> None:
    for name, s in (("a", a), ("b", b)):
        if not _closed_in(s, space):
            raise PreconditionError(f"{name} is not closed in {space}")
    if not a.isdisjoint(b):
        raise PreconditionError("a and b intersect")


def _gap_ramp(left: SymbolicSet, right: SymbolicSet):
    """The 0/affine/1 ramp over the gap (sup left, inf right), if it is one."""
    c, _ = left.sup()
    d, _ = right.inf()
    if c is None or d is None or c >= d:
        return None
    slope = 1 / (d - c)
    return make_pwmap((c, d), ((0, 0), (slope, -c * slope), (0, 1)),
                      (0, 1))


def gul_witness(a: SymbolicSet, b: SymbolicSet, space: str) -> PiecewiseMap:
    """A piecewise ramp f with a ⊆ f⁻¹(0), b ⊆ f⁻¹(1), gtaun-continuous."""
    _check_space(space)
    _check_closed_pair(a, b, space)
    if a.is_empty or b.is_empty:
        raise PreconditionError("a and b must both be nonempty")
    straight = _gap_ramp(a, b)
    if straight is not None:
        return straight
    mirrored = _gap_ramp(b, a)
    if mirrored is not None:
        return mirrored.one_minus()
    raise PreconditionError("a and b are not separable by a gap")


# --- continuity -------------------------------------------------------------

def _probe_values(f: PiecewiseMap, extra=()) -> list[Fraction]:
    """Critical values plus two representatives inside every induced region."""
    crit = sorted(set(f.criticals()) | set(extra))
    if not crit:
        return [Fraction(0), Fraction(1)]
    out = [crit[0] - 2, crit[0] - 1]
    for c1, c2 in zip(crit, crit[1:]):
        step = (c2 - c1) / 4
        out.extend([c1, c1 + step, c1 + 2 * step])
    out.extend([crit[-1], crit[-1] + 1, crit[-1] + 2])
    return out


def _windows(params, target):
    if target == "gtaun":
        for q in params:
            yield None, q
            yield q, None
    else:
        for i, p in enumerate(params):
            for q in params[i + 1:]:
                yield p, q


def check_continuity_sym(f: PiecewiseMap, source: str, target: str) -> bool:
    _check_space(source)
    _check_target(target)
    return all(_open_in(f.preimage_open(lo, hi), source)
               for lo, hi in _windows(_probe_values(f), target))


# --- Tietze-style extension off a closed set --------------------------------

def _anchored_extension(t: SymbolicSet, p: SymbolicSet):
    """Candidate gtn-open whose trace on p could be t (verified by caller)."""
    P = p.components[0]
    rays = []
    for c in t.components:
        left = c.lo == P.lo and c.lo_closed == P.lo_closed
        right = c.hi == P.hi and c.hi_closed == P.hi_closed
        if left and c.hi is not None:
            rays.append(Interval(None, c.hi, False, False))
        elif right and c.lo is not None:
            rays.append(Interval(c.lo, None, False, False))
        else:
            return None
    return make_set(rays)


def _is_trace_open(t: SymbolicSet, p: SymbolicSet) -> bool:
    """Is t the trace on p of some gtn-open set?"""
    if t.is_empty or t == p:
        return True
    u = _anchored_extension(t, p)
    return u is not None and u.intersection(p) == t


def _subspace_continuous(p: SymbolicSet, f: PiecewiseMap, target: str) -> bool:
    """Continuity of f from the trace GT on p into the chosen target.

    The probe set is widened by f's values at p's finite endpoints: the trace
    shape can also change when a preimage boundary crosses an end of p.
    """
    ends = [e for e in (p.components[0].lo, p.components[0].hi)
            if e is not None]
    params = _probe_values(f, extra=[f.value_at(e) for e in ends])
    return all(_is_trace_open(f.preimage_open(lo, hi).intersection(p), p)
               for lo, hi in _windows(params, target))


def _slice_between(f: PiecewiseMap, lo, hi):
    """Breakpoints of f strictly inside (lo, hi), their values, and the
    pieces governing (lo, hi); None means unbounded."""
    k_lo = 0 if lo is None else bisect_right(f.breakpoints, lo)
    k_hi = len(f.breakpoints) if hi is None else bisect_left(f.breakpoints, hi)
    return (f.breakpoints[k_lo:k_hi], f.values[k_lo:k_hi],
            f.pieces[k_lo:k_hi + 1])


def tietze_extend(p: SymbolicSet, f: PiecewiseMap, target: str) -> PiecewiseMap:
    """Extend f off the closed set p by freezing the boundary values."""
    _check_target(target)
    if not _closed_in(p, "gtn"):
        raise PreconditionError("p is not closed in gtn")
    if p.is_empty or p.is_all:
        raise PreconditionError("p must be a proper nonempty closed set")
    c = p.components[0]
    if c.is_singleton:
        raise PreconditionError("singleton domains are not handled")
    if not _subspace_continuous(p, f, target):
        raise PreconditionError(
            f"f is not {target}-continuous on the subspace p")
    zero = Fraction(0)
    if c.lo is not None and c.hi is not None:
        fa, fb = f.value_at(c.lo), f.value_at(c.hi)
        bps, vals, pieces = _slice_between(f, c.lo, c.hi)
        return PiecewiseMap((c.lo,) + bps + (c.hi,),
                            ((zero, fa),) + pieces + ((zero, fb),),
                            (fa,) + vals + (fb,))
    if c.lo is None:                       # p = (-inf, a]
        fa = f.value_at(c.hi)
        bps, vals, pieces = _slice_between(f, None, c.hi)
        return PiecewiseMap(bps + (c.hi,), pieces + ((zero, fa),),
                            vals + (fa,))
    fb = f.value_at(c.lo)                  # p = [b, inf)
    bps, vals, pieces = _slice_between(f, c.lo, None)
    return PiecewiseMap((c.lo,) + bps, ((zero, fb),) + pieces, (fb,) + vals)


# --- image, connectedness, and the three-open-set obstruction ---------------

def image_and_connectedness(f: PiecewiseMap):
    img = f.image()
    return img, len(img.components) == 1


@dataclass(frozen=True)
class OpenTriple:
    u: SymbolicSet
    v: SymbolicSet
    w: SymbolicSet
    verdicts: tuple[str, str, str]


def disjoint_open_triple(f: PiecewiseMap) -> OpenTriple:
    """Preimages of (−1,1/4), (1/3,2/3), (3/4,∞) with their gtn verdicts.

    For any candidate separator of level sets 0 and 1 these are pairwise
    disjoint and, were f window-continuous, all three would be gtn-open —
    impossible, since distinct nonempty gtn-opens always intersect in a ray.
    """
    u = f.preimage_open(Fraction(-1), Fraction(1, 4))
    v = f.preimage_open(Fraction(1, 3), Fraction(2, 3))
    w = f.preimage_open(Fraction(3, 4), None)
    return OpenTriple(u, v, w,
                      tuple(classify(s, "gtn") for s in (u, v, w)))


# --- the effective separation function F and its ladders --------------------

@dataclass(frozen=True)
class SymbolicWitness:
    u: SymbolicSet
    v: SymbolicSet


def _ray_scan(a: SymbolicSet, b: SymbolicSet) -> SymbolicWitness:
    def hit(q):
        return ((a.issubset(below(q)) and b.issubset(above(q)))
                or (b.issubset(below(q)) and a.issubset(above(q))))

    _, q = _PSI.scan(hit)
    if a.issubset(below(q)) and b.issubset(above(q)):
        return SymbolicWitness(below(q), above(q))
    return SymbolicWitness(above(q), below(q))


def _clopen_split_scan(a: SymbolicSet, b: SymbolicSet) -> SymbolicWitness:
    def hit(q):
        return ((a.issubset(below(q)) and b.issubset(above(q, closed=True)))
                or (b.issubset(below(q)) and a.issubset(above(q, closed=True))))

    _, q = _PSI.scan(hit)
    if a.issubset(below(q)) and b.issubset(above(q, closed=True)):
        return SymbolicWitness(below(q), above(q, closed=True))
    return SymbolicWitness(above(q, closed=True), below(q))


def effective_F(a: SymbolicSet, b: SymbolicSet, space: str) -> SymbolicWitness:
    """Deterministic disjoint open cover ⟨U ⊇ a, V ⊇ b⟩ for closed disjoint
    a, b: the first qualifying split point in the fixed enumeration of ℚ."""
    _check_space(space)
    _check_closed_pair(a, b, space)
    if space == "gts":
        if _open_in(a, "gts"):
            return SymbolicWitness(a, a.complement())
        if _open_in(b, "gts"):
            return SymbolicWitness(b.complement(), b)
        return _clopen_split_scan(a, b)
    if a.is_empty:
        return SymbolicWitness(EMPTY_SET, ALL_REALS)
    if b.is_empty:
        return SymbolicWitness(ALL_REALS, EMPTY_SET)
    return _ray_scan(a, b)


@dataclass(frozen=True)
class SymbolicLadder:
    """Open sets indexed by dyadic rationals of (0,1), ascending by index."""

    entries: tuple[tuple[Fraction, SymbolicSet], ...]

    def indices(self) -> tuple[Fraction, ...]:
        return tuple(r for r, _ in self.entries)

    def get(self, r) -> SymbolicSet:
        r = Fraction(r)
        for idx, s in self.entries:
            if idx == r:
                return s
        raise InputError(f"no rung at index {r}")


def ladder_from_F(a: SymbolicSet, b: SymbolicSet, space: str,
                  level: int) -> SymbolicLadder:
    """Dyadic recursion: each new rung separates its neighbors' closure and
    complement with effective_F, so the chain conditions hold by construction."""
    _check_space(space)
    if not isinstance(level, int) or level < 1:
        raise InputError(f"level must be a positive integer, got {level!r}")
    if level > 8:
        raise ResourceError(f"level {level} would need {2 ** level - 1} rungs; "
                            "refusing beyond level 8")
    _check_closed_pair(a, b, space)
    if a.is_empty or b.is_empty:
        raise PreconditionError("a and b must both be nonempty")
    rungs: dict[Fraction, SymbolicSet] = {}
    for lev in range(1, level + 1):
        for j in range(1, 2 ** lev, 2):
            r = Fraction(j, 2 ** lev)
            lo_n, hi_n = dyadic_neighbors(r)
            lower = closure_sym(rungs[lo_n], space) if lo_n in rungs else a
            upper = rungs[hi_n].complement() if hi_n in rungs else b
            rungs[r] = effective_F(lower, upper, space).u
    return SymbolicLadder(tuple(sorted(rungs.items())))


# --- lifting a witness to the product plane ---------------------------------

@dataclass(frozen=True)
class LiftedWitness:
    """A separator of closed rectangles that only reads one coordinate."""

    coordinate: int          # 1 or 2
    base: PiecewiseMap

    def value_at(self, x1, x2) -> Fraction:
        return self.base.value_at(x1 if self.coordinate == 1 else x2)


def product_gul_witness(a1: SymbolicSet, a2: SymbolicSet, b1: SymbolicSet,
                        b2: SymbolicSet, space: str) -> LiftedWitness:
    _check_space(space)
    for name, s in (("a1", a1), ("a2", a2), ("b1", b1), ("b2", b2)):
        if not _closed_in(s, space):
            raise PreconditionError(f"{name} is not closed in {space}")
    if a1.is_empty or a2.is_empty:
        return LiftedWitness(1, constant_map(1))
    if b1.is_empty or b2.is_empty:
        return LiftedWitness(1, constant_map(0))
    if a1.isdisjoint(b1):
        return LiftedWitness(1, gul_witness(a1, b1, space))
    if a2.isdisjoint(b2):
        return LiftedWitness(2, gul_witness(a2, b2, space))
    raise PreconditionError("the rectangles intersect")
