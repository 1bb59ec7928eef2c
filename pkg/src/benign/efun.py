"""Finite-support integer functions and the set operations on them.

A function f: Z -> Z with finite support is stored in canonical sparse form
(no zero values).  Expressions over the two base sets (the singleton zero
function, and the adjacent-successor pairs) and the operations
iota/upsilon/rho/sigma/tau/theta/zeta/pi/omega_m denote subsets of the space
of all such functions; :func:`member` decides membership and
:func:`enumerate_set` materializes a bounded slice.

Exactness: rho, sigma, tau, iota, upsilon, omega_m and the atoms reduce
membership to finitely many determined sub-queries and never answer Unknown.
zeta, pi and theta existentially quantify over witness coordinates; searches
are cut off at the value bound and report Unknown unless a static profile of
the child expression certifies the verdict is bound-independent.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from benign.errors import BoundTooTight, NegativeSupport, SetTooLarge

INF = None  # unbounded cap / window edge

# Elements materialized per expression node before SetTooLarge is raised.
SET_CAP = 2_000_000
# Witness assignments tried per zeta/pi/theta search before giving Unknown.
SEARCH_CAP = 1_000_000


class FinSuppFn:
    """Function Z -> Z with finite support, in canonical sparse form."""

    __slots__ = ("items", "_hash")

    def __init__(self, entries=()):
        if isinstance(entries, dict):
            entries = entries.items()
        items = tuple(sorted((int(i), int(v)) for i, v in entries if v != 0))
        if len({i for i, _ in items}) != len(items):
            raise ValueError("duplicate indices")
        self.items = items
        self._hash = hash(items)

    def __call__(self, i):
        for j, v in self.items:
            if j == i:
                return v
        return 0

    @property
    def support(self):
        return tuple(i for i, _ in self.items)

    def is_zero(self):
        return not self.items

    def __eq__(self, other):
        return isinstance(other, FinSuppFn) and self.items == other.items

    def __hash__(self):
        return self._hash

    def __repr__(self):
        try:
            return f"FinSuppFn{to_tuple(self)}"
        except NegativeSupport:
            body = ", ".join(f"{i}: {v}" for i, v in self.items)
            return f"FinSuppFn({{{body}}})"

    # pointwise rearrangements used by the membership reductions

    def reflect(self):
        return _raw(tuple(sorted((-i, v) for i, v in self.items)))

    def shift(self, d):
        return _raw(tuple((i + d, v) for i, v in self.items))

    def swap01(self):
        def m(i):
            return 1 - i if i in (0, 1) else i

        return _raw(tuple(sorted((m(i), v) for i, v in self.items)))

    def with_value(self, i, v):
        rest = [(j, w) for j, w in self.items if j != i]
        if v != 0:
            rest.append((i, v))
        return _raw(tuple(sorted(rest)))

    def compress_even(self):
        """g -> f with f(i) = g(2i)."""
        return _raw(tuple((i // 2, v) for i, v in self.items if i % 2 == 0))

    def spread_even(self):
        """f -> g with g(2i) = f(i), zero on odd positions."""
        return _raw(tuple((2 * i, v) for i, v in self.items))


def _raw(items):
    f = FinSuppFn.__new__(FinSuppFn)
    f.items = items
    f._hash = hash(items)
    return f


ZERO_FN = FinSuppFn()


def normalize(values) -> FinSuppFn:
    """Canonical sparse function from a finite index->value map."""
    return FinSuppFn(values)


def from_tuple(values) -> FinSuppFn:
    """Function with f(i) = values[i] on 0 <= i < len(values), 0 elsewhere."""
    return FinSuppFn({i: v for i, v in enumerate(values)})


def to_tuple(f: FinSuppFn) -> tuple:
    """Shortest tuple notation; (0,) for the zero function.

    Raises NegativeSupport when f is nonzero at a negative index (the tuple
    notation is undefined there).
    """
    if f.is_zero():
        return (0,)
    if f.items[0][0] < 0:
        raise NegativeSupport(f"f({f.items[0][0]}) != 0")
    n = f.items[-1][0] + 1
    return tuple(f(i) for i in range(n))


def bump(f: FinSuppFn, m: int, direction) -> FinSuppFn:
    """f with the value at index m raised (+) or lowered (-) by one."""
    if direction in ("+", +1, 1):
        d = 1
    elif direction in ("-", -1):
        d = -1
    else:
        raise ValueError(f"direction must be '+' or '-', got {direction!r}")
    return f.with_value(m, f(m) + d)


def blocks(f: FinSuppFn, m: int) -> dict:
    """Nonzero length-m blocks of f, keyed by block index.

    Block i is the tuple (f(mi), ..., f(mi+m-1)); all omitted blocks are the
    zero tuple.
    """
    if m < 1:
        raise ValueError("m must be positive")
    out = {}
    for i, _ in f.items:
        q = i // m
        if q not in out:
            out[q] = tuple(f(m * q + j) for j in range(m))
    return dict(sorted(out.items()))


def block_fn(values) -> FinSuppFn:
    """A block, as the function it denotes (support in [0, m))."""
    return from_tuple(values)


# ---------------------------------------------------------------------------
# Expressions


@dataclass(frozen=True)
class SetExpr:
    """Expression tree over the atoms Z, S, E_m closed under the operations.

    ``op`` is one of Z S E iota upsilon rho sigma tau theta zeta pi omega;
    ``m`` carries the block length for omega / the arity for E.
    """

    op: str
    m: int | None = None
    children: tuple = ()

    def __post_init__(self):
        if self.op in ("E", "omega") and (self.m is None or self.m < 1):
            raise ValueError(f"{self.op} requires m >= 1")

    def __str__(self):
        from benign.dsl import format_expr

        return format_expr(self)


def Z() -> SetExpr:
    return SetExpr("Z")


def S() -> SetExpr:
    return SetExpr("S")


def E(m: int) -> SetExpr:
    return SetExpr("E", m=m)


def iota(a: SetExpr, b: SetExpr) -> SetExpr:
    return SetExpr("iota", children=(a, b))


def upsilon(a: SetExpr, b: SetExpr) -> SetExpr:
    return SetExpr("upsilon", children=(a, b))


def rho(a: SetExpr) -> SetExpr:
    return SetExpr("rho", children=(a,))


def sigma(a: SetExpr) -> SetExpr:
    return SetExpr("sigma", children=(a,))


def tau(a: SetExpr) -> SetExpr:
    return SetExpr("tau", children=(a,))


def theta(a: SetExpr) -> SetExpr:
    return SetExpr("theta", children=(a,))


def zeta(a: SetExpr) -> SetExpr:
    return SetExpr("zeta", children=(a,))


def pi(a: SetExpr) -> SetExpr:
    return SetExpr("pi", children=(a,))


def omega(m: int, a: SetExpr) -> SetExpr:
    return SetExpr("omega", m=m, children=(a,))


@dataclass(frozen=True)
class EvalBounds:
    """Search window [lo, hi) for supports plus a value bound."""

    lo: int = -4
    hi: int = 8
    vmax: int = 9

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("lo must be <= hi")
        if self.vmax < 0:
            raise ValueError("vmax must be nonnegative")

    def fits(self, f: FinSuppFn) -> bool:
        return all(self.lo <= i < self.hi and abs(v) <= self.vmax for i, v in f.items)

    def with_window(self, lo, hi):
        return EvalBounds(lo, hi, self.vmax)


# Membership verdicts


@dataclass(frozen=True)
class Membership:
    kind: str  # "in" | "out" | "unknown"
    reason: str | None = None

    @property
    def is_in(self):
        return self.kind == "in"

    @property
    def is_out(self):
        return self.kind == "out"

    @property
    def is_unknown(self):
        return self.kind == "unknown"

    def __str__(self):
        if self.is_unknown and self.reason:
            return f"Unknown({self.reason})"
        return self.kind.capitalize()


IN = Membership("in")
OUT = Membership("out")


def unknown(reason: str) -> Membership:
    return Membership("unknown", reason)


# ---------------------------------------------------------------------------
# Static profiles.
#
# For each expression we can bound, per coordinate, the values its members may
# take (cap), bound the support (window), and detect coordinates where every
# member stays a member after the value there is zeroed (free).  These
# certify when a cut-off witness search is exhaustive.


def _hull(a, b):
    """Hull of two [lo, hi) windows; None edges are infinite."""
    (alo, ahi), (blo, bhi) = a, b
    if alo == ahi:
        return b
    if blo == bhi:
        return a
    lo = None if alo is INF or blo is INF else min(alo, blo)
    hi = None if ahi is INF or bhi is INF else max(ahi, bhi)
    return (lo, hi)


def _isect(a, b):
    (alo, ahi), (blo, bhi) = a, b
    lo = blo if alo is INF else alo if blo is INF else max(alo, blo)
    hi = bhi if ahi is INF else ahi if bhi is INF else min(ahi, bhi)
    if lo is not INF and hi is not INF and lo > hi:
        return (0, 0)
    return (lo, hi)


def _in_window(i, w):
    lo, hi = w
    return (lo is INF or i >= lo) and (hi is INF or i < hi)


@lru_cache(maxsize=None)
def static_window(e: SetExpr):
    """A window [lo, hi) containing the support of every member of e."""
    op = e.op
    if op == "Z":
        return (0, 0)
    if op == "S":
        return (0, 2)
    if op == "E":
        return (0, e.m)
    if op == "iota":
        return _isect(static_window(e.children[0]), static_window(e.children[1]))
    if op == "upsilon":
        return _hull(static_window(e.children[0]), static_window(e.children[1]))
    c = static_window(e.children[0])
    lo, hi = c
    if op == "rho":
        return (0, 0) if lo == hi else (None if hi is INF else 1 - hi, None if lo is INF else 1 - lo)
    if op == "sigma":
        return (None if lo is INF else lo + 1, None if hi is INF else hi + 1)
    if op == "tau":
        if lo == hi or not (_in_window(0, c) or _in_window(1, c)):
            return c
        return _hull(c, (0, 2))
    if op == "theta":
        if lo == hi:
            return c
        nlo = None if lo is INF else -((-lo) // 2)  # ceil(lo/2)
        nhi = None if hi is INF else (hi - 1) // 2 + 1
        return (nlo, nhi)
    if op == "zeta":
        return _hull(c, (0, 1))
    if op == "pi":
        return (None if lo is INF else min(lo, 1), None)
    if op == "omega":
        return (None, None)
    raise AssertionError(op)


def coord_cap(e: SetExpr, i: int):
    """Upper bound for |f(i)| over members f of e; None means unbounded."""
    if not _in_window(i, static_window(e)):
        return 0
    op = e.op
    if op == "Z":
        return 0
    if op in ("S", "E"):
        return INF
    if op == "iota":
        a = coord_cap(e.children[0], i)
        b = coord_cap(e.children[1], i)
        return b if a is INF else a if b is INF else min(a, b)
    if op == "upsilon":
        a = coord_cap(e.children[0], i)
        b = coord_cap(e.children[1], i)
        return INF if a is INF or b is INF else max(a, b)
    c = e.children[0]
    if op == "rho":
        return coord_cap(c, -i)
    if op == "sigma":
        return coord_cap(c, i - 1)
    if op == "tau":
        return coord_cap(c, 1 - i if i in (0, 1) else i)
    if op == "theta":
        return coord_cap(c, 2 * i)
    if op == "zeta":
        return INF if i == 0 else coord_cap(c, i)
    if op == "pi":
        return INF if i >= 1 else coord_cap(c, i)
    if op == "omega":
        return coord_cap(c, i % e.m)
    raise AssertionError(op)


def coord_free(e: SetExpr, i: int) -> bool:
    """True when every member of e stays a member after zeroing f(i)."""
    if not _in_window(i, static_window(e)):
        return True  # members are already zero there
    op = e.op
    if op == "Z":
        return True
    if op == "S":
        return False
    if op == "E":
        return True
    if op in ("iota", "upsilon"):
        return coord_free(e.children[0], i) and coord_free(e.children[1], i)
    c = e.children[0]
    if op == "rho":
        return coord_free(c, -i)
    if op == "sigma":
        return coord_free(c, i - 1)
    if op == "tau":
        return coord_free(c, 1 - i if i in (0, 1) else i)
    if op == "theta":
        return coord_free(c, 2 * i)
    if op == "zeta":
        return True if i == 0 else coord_free(c, i)
    if op == "pi":
        return True if i >= 1 else coord_free(c, i)
    if op == "omega":
        return False
    raise AssertionError(op)


# ---------------------------------------------------------------------------
# Bound propagation (child bounds for each node)


def _child_bounds(e: SetExpr, b: EvalBounds) -> EvalBounds:
    op = e.op
    if op == "rho":
        return b.with_window(1 - b.hi, 1 - b.lo)
    if op == "sigma":
        return b.with_window(b.lo - 1, b.hi)
    if op == "tau":
        if b.lo < 2 and b.hi > 0:
            return b.with_window(min(b.lo, 0), max(b.hi, 2))
        return b
    if op == "theta":
        return b.with_window(2 * b.lo, 2 * b.hi)
    if op == "zeta":
        return b.with_window(min(b.lo, 0), max(b.hi, 1))
    if op == "pi":
        lo, hi = static_window(e.children[0])
        top = b.hi if hi is INF else max(b.hi, hi)
        return b.with_window(min(b.lo, 1) if lo is INF else min(b.lo, lo, 1), top)
    if op == "omega":
        return b.with_window(min(b.lo, 0), max(b.hi, e.m))
    return b


# ---------------------------------------------------------------------------
# Membership


def member(f: FinSuppFn, e: SetExpr, b: EvalBounds = EvalBounds()) -> Membership:
    """Decide f in e, searching existential witnesses within b."""
    op = e.op
    if op == "Z":
        return IN if f.is_zero() else OUT
    if op == "S":
        if any(i not in (0, 1) for i in f.support):
            return OUT
        return IN if f(1) == f(0) + 1 else OUT
    if op == "E":
        return IN if all(0 <= i < e.m for i in f.support) else OUT
    if op == "iota":
        va = member(f, e.children[0], b)
        if va.is_out:
            return OUT
        vb = member(f, e.children[1], b)
        if vb.is_out:
            return OUT
        if va.is_in and vb.is_in:
            return IN
        return va if va.is_unknown else vb
    if op == "upsilon":
        va = member(f, e.children[0], b)
        if va.is_in:
            return IN
        vb = member(f, e.children[1], b)
        if vb.is_in:
            return IN
        if va.is_out and vb.is_out:
            return OUT
        return va if va.is_unknown else vb

    c = e.children[0]
    cb = _child_bounds(e, b)
    if op == "rho":
        return member(f.reflect(), c, cb)
    if op == "sigma":
        return member(f.shift(-1), c, cb)
    if op == "tau":
        return member(f.swap01(), c, cb)
    if op == "omega":
        m = e.m
        verdict = member(ZERO_FN, c, cb)
        if verdict.is_out:
            return OUT
        for _, blk in blocks(f, m).items():
            v = member(block_fn(blk), c, cb)
            if v.is_out:
                return OUT
            if v.is_unknown:
                verdict = v
        return verdict
    if op == "zeta":
        return _member_zeta(f, c, cb)
    if op == "theta":
        return _member_free_search(f.spread_even(), c, cb, _odd_coords, "theta")
    if op == "pi":
        base = _raw(tuple((i, v) for i, v in f.items if i <= 0))
        return _member_free_search(base, c, cb, _positive_coords, "pi")
    raise AssertionError(op)


def _member_zeta(f, c, cb):
    if coord_free(c, 0):
        return member(f.with_value(0, 0), c, cb)
    cap = coord_cap(c, 0)
    limit = cb.vmax if cap is INF else min(cap, cb.vmax)
    exhaustive = cap is not INF and cap <= cb.vmax
    saw_unknown = False
    for v in _fan(limit):
        verdict = member(f.with_value(0, v), c, cb)
        if verdict.is_in:
            return IN
        if verdict.is_unknown:
            saw_unknown = True
    if exhaustive and not saw_unknown:
        return OUT
    return unknown("vmax" if not saw_unknown else "child")


def _fan(limit):
    yield 0
    for v in range(1, limit + 1):
        yield v
        yield -v


def _odd_coords(c, cb):
    lo, hi = static_window(c)
    if lo is INF or hi is INF:
        return None
    lo = max(lo, cb.lo)
    hi = min(hi, cb.hi)
    return [i for i in range(lo, hi) if i % 2 != 0]


def _positive_coords(c, cb):
    lo, hi = static_window(c)
    if hi is INF:
        return None
    return [i for i in range(max(1, lo if lo is not INF else 1, cb.lo), max(hi, 1)) if i >= 1]


def _member_free_search(base, c, cb, coords_fn, tag):
    """Witness search over free coordinates of the child expression.

    ``base`` carries the determined coordinates.  Every candidate witness
    agrees with base there and varies over the listed free coordinates.
    """
    # determined coordinates must fit the child's static profile
    for i, v in base.items:
        cap = coord_cap(c, i)
        if cap is not INF and abs(v) > cap:
            return OUT
    coords = coords_fn(c, cb)
    if coords is None:
        # support of potential witnesses is unbounded; try the zeroed witness
        verdict = member(base, c, cb)
        if verdict.is_in:
            return IN
        return unknown(f"window@{tag}")
    search = []
    exhaustive = True
    for i in coords:
        if base(i) != 0:
            continue  # already determined
        if coord_free(c, i):
            continue  # zero is optimal there
        cap = coord_cap(c, i)
        if cap == 0:
            continue
        limit = cb.vmax if cap is INF else min(cap, cb.vmax)
        if cap is INF or cap > cb.vmax:
            exhaustive = False
        search.append((i, limit))
    total = 1
    for _, limit in search:
        total *= 2 * limit + 1
        if total > SEARCH_CAP:
            verdict = member(base, c, cb)
            if verdict.is_in:
                return IN
            return unknown(f"search-space@{tag}")
    saw_unknown = False
    for combo in itertools.product(*[list(_fan(limit)) for _, limit in search]):
        g = base
        for (i, _), v in zip(search, combo):
            if v != 0:
                g = g.with_value(i, v)
        verdict = member(g, c, cb)
        if verdict.is_in:
            return IN
        if verdict.is_unknown:
            saw_unknown = True
    if exhaustive and not saw_unknown:
        return OUT
    return unknown(("vmax" if not saw_unknown else "child") + f"@{tag}")


# ---------------------------------------------------------------------------
# Bounded enumeration


def enumerate_set(e: SetExpr, b: EvalBounds = EvalBounds()) -> list:
    """All members of e fitting b, in lexicographic window order.

    Raises BoundTooTight when the evaluation cannot be certified exact at
    these bounds (i.e. some fitting candidate would evaluate Unknown), and
    SetTooLarge when an intermediate set would exceed the size cap.
    """
    items, uncert = _eval(e, b)
    if uncert is not None:
        raise BoundTooTight(uncert[0], uncert[1])
    fns = [_raw(t) for t in items]
    fns.sort(key=lambda f: tuple(f(i) for i in range(b.lo, b.hi)))
    return fns


def _guard(n, e):
    if n > SET_CAP:
        raise SetTooLarge(f"about {n} elements at {e}")


def _eval(e: SetExpr, b: EvalBounds):
    """Returns (set of items-tuples, uncertainty).

    The set is exactly sem(e) restricted to b whenever uncertainty is None;
    otherwise elements may be missing (never spurious).
    """
    op = e.op
    fit = b.fits
    if op == "Z":
        return {()}, None
    if op == "S":
        out = set()
        for a in range(-b.vmax - 1, b.vmax + 1):
            f = FinSuppFn({0: a, 1: a + 1})
            if fit(f):
                out.add(f.items)
        return out, None
    if op == "E":
        coords = [i for i in range(0, e.m) if b.lo <= i < b.hi]
        _guard((2 * b.vmax + 1) ** len(coords), e)
        out = set()
        for values in itertools.product(range(-b.vmax, b.vmax + 1), repeat=len(coords)):
            out.add(tuple((i, v) for i, v in zip(coords, values) if v != 0))
        return out, None
    if op == "iota":
        sa, ua = _eval(e.children[0], b)
        sb, ub = _eval(e.children[1], b)
        return sa & sb, ua or ub
    if op == "upsilon":
        sa, ua = _eval(e.children[0], b)
        sb, ub = _eval(e.children[1], b)
        return sa | sb, ua or ub

    c = e.children[0]
    cb = _child_bounds(e, b)
    if op in ("rho", "sigma", "tau"):
        sc, uc = _eval(c, cb)
        mapper = {
            "rho": FinSuppFn.reflect,
            "sigma": lambda g: g.shift(1),
            "tau": FinSuppFn.swap01,
        }[op]
        out = set()
        for items in sc:
            f = mapper(_raw(items))
            if fit(f):
                out.add(f.items)
        return out, uc
    if op == "theta":
        sc, uc = _eval(c, cb)
        out = set()
        for items in sc:
            f = _raw(items).compress_even()
            if fit(f):
                out.add(f.items)
        return out, uc or _theta_uncert(e, c, cb)
    if op == "zeta":
        sc, uc = _eval(c, cb)
        _guard(len(sc) * (2 * b.vmax + 1), e)
        out = set()
        for items in sc:
            g = _raw(items)
            for t in range(-b.vmax, b.vmax + 1):
                f = g.with_value(0, t)
                if fit(f):
                    out.add(f.items)
        uncert = uc
        if uncert is None and not coord_free(c, 0):
            cap = coord_cap(c, 0)
            if cap is INF or cap > b.vmax:
                uncert = ("vmax", str(e))
        return out, uncert
    if op == "pi":
        return _eval_pi(e, c, b, cb)
    if op == "omega":
        return _eval_omega(e, c, b, cb)
    raise AssertionError(op)


def _theta_uncert(e, c, cb):
    coords = _odd_coords(c, cb)
    if coords is None:
        return ("window", str(e))
    for i in coords:
        if coord_free(c, i):
            continue
        cap = coord_cap(c, i)
        if cap is INF or cap > cb.vmax:
            return ("vmax", str(e))
    return None


def _eval_pi(e, c, b, cb):
    sc, uc = _eval(c, cb)
    tails = {tuple((i, v) for i, v in items if i <= 0) for items in sc}
    pos = list(range(max(b.lo, 1), b.hi))
    _guard(len(tails) * (2 * b.vmax + 1) ** len(pos), e)
    out = set()
    for base in tails:
        for values in itertools.product(range(-b.vmax, b.vmax + 1), repeat=len(pos)):
            head = tuple((i, v) for i, v in zip(pos, values) if v != 0)
            out.add(base + head)
    uncert = uc
    if uncert is None:
        coords = _positive_coords(c, cb)
        if coords is None:
            uncert = ("window", str(e))
        else:
            for i in coords:
                if coord_free(c, i):
                    continue
                cap = coord_cap(c, i)
                if cap is INF or cap > cb.vmax:
                    uncert = ("vmax", str(e))
                    break
    return out, uncert


def _eval_omega(e, c, b, cb):
    m = e.m
    sc, uc = _eval(c, cb)
    if () not in sc:
        # without the zero function in the child the set is empty
        return set(), uc
    valid = [items for items in sc if all(0 <= i < m for i, _ in items)]
    qlo = b.lo // m
    qhi = -(-b.hi // m)  # ceil
    slots = []
    for q in range(qlo, qhi):
        allowed = []
        for items in valid:
            placed = tuple((m * q + i, v) for i, v in items)
            if all(b.lo <= i < b.hi for i, _ in placed):
                allowed.append(placed)
        slots.append(allowed)
    total = 1
    for allowed in slots:
        total *= max(len(allowed), 1)
        _guard(total, e)
    out = set()
    for combo in itertools.product(*slots):
        f = tuple(sorted(itertools.chain.from_iterable(combo)))
        out.add(f)
    return out, uc
