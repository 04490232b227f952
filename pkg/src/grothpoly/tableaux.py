"""Exact weighted enumeration of tableau families.

Families covered: marked multiset-valued tableaux, marked reverse plane
partitions (left, right and bottom marking variants, optionally with a
virtual boundary column driven by a mark set), integer-entry elegant and
inelegant tableaux, and flagged set-valued tableaux.

Fillings are plain dicts keyed by 1-based (row, column) cells.  Single-valued
marked fillings map a cell to (value, marked); multiset and set valued
fillings map a cell to a tuple of (value, marked) pairs.  enum_* functions
return exact TruncPoly sums of weights; gen_* generators yield the fillings
themselves.  Enumeration runs depth-first over cells taken column by column
from the right, top to bottom within a column, so that the neighbors a cell
is compared against are already placed.
"""

import itertools

from .ring import TruncPoly, X, ALPHA, BETA
from .shapes import (INF, ShapeError, cells, contains, dent_index, gen_cells,
                     gen_contains, part, partition, skew)


def _pvar(n, deg, fam, idx):
    """alpha_idx or beta_idx as a polynomial; zero for indices <= 0."""
    if idx <= 0:
        return TruncPoly.zero(n, deg)
    return TruncPoly.var(n, deg, fam, idx)


def _xvar(n, deg, v):
    """x_v as a polynomial; zero beyond the variable context."""
    if v > n:
        return TruncPoly.zero(n, deg)
    return TruncPoly.var(n, deg, X, v)


def _col_order(cell_list):
    return sorted(cell_list, key=lambda c: (-c[1], c[0]))


def _cell_bounds(flags, orientation, n, i, j, cap=True):
    """Inclusive (lo, hi) value bounds for cell (i, j).

    Values above n carry a zero x weight, so capped enumeration equals the
    specialization at x_{n+1} = x_{n+2} = ... = 0; only boundary mark sets
    need the uncapped bound, since their high values can be absorbed into
    parameter weights.
    """
    if flags is None:
        return 1, n
    r, s = flags
    k = i if orientation == "row" else j
    if not 1 <= k <= len(r):
        raise ShapeError(f"flag vectors too short for index {k}")
    hi = s[k - 1]
    if hi == INF or (cap and hi > n):
        hi = n
    return r[k - 1], hi


def _check_orientation(orientation):
    if orientation not in ("row", "col"):
        raise ShapeError(f"orientation must be row or col: {orientation!r}")


# ---------------------------------------------------------------------------
# marked multiset-valued tableaux

def _multisets(lo, hi, max_len):
    """Nonempty weakly increasing tuples over [lo, hi] of length <= max_len."""
    if lo > hi or max_len < 1:
        return
    prefix = []

    def rec(start):
        for v in range(start, hi + 1):
            prefix.append(v)
            yield tuple(prefix)
            if len(prefix) < max_len:
                yield from rec(v)
            prefix.pop()

    yield from rec(lo)


def _markable_positions(ms):
    return [p for p in range(1, len(ms)) if ms[p - 1] < ms[p]]


def mmsvt_weight(entries, n, deg):
    """Weight of an explicit filling {(i,j): ((value, marked), ...)}.

    Each element contributes x_value; every unmarked element beyond the first
    unmarked one contributes alpha_col, and every marked element -beta_row.
    """
    w = TruncPoly.const(n, deg, 1)
    for (i, j), elems in entries.items():
        if not elems:
            raise ShapeError("cells hold nonempty multisets")
        vals = [v for v, _ in elems]
        if any(a > b for a, b in zip(vals, vals[1:])):
            raise ShapeError(f"multiset not weakly increasing: {vals}")
        unmarked = 0
        for p, (v, marked) in enumerate(elems):
            w = w * _xvar(n, deg, v)
            if marked:
                if p == 0 or vals[p - 1] >= v:
                    raise ShapeError("marks need a strictly smaller "
                                     f"predecessor: {elems}")
                w = w * (-TruncPoly.var(n, deg, BETA, i))
            else:
                unmarked += 1
        w = w * TruncPoly.var(n, deg, ALPHA, j) ** (unmarked - 1)
    return w


def _mmsvt_state(outer, inner, orientation):
    _check_orientation(orientation)
    outer, inner = skew(outer, inner)
    return _col_order(cells(outer, inner))


def gen_mmsvt(outer, inner, n, deg, flags=None, orientation="row"):
    """Yield explicit fillings {(i,j): ((value, marked), ...)} whose total
    element count is at most deg."""
    order = _mmsvt_state(outer, inner, orientation)
    ends = {}
    entries = {}

    def rec(k, used):
        if k == len(order):
            yield dict(entries)
            return
        i, j = order[k]
        lo, hi = _cell_bounds(flags, orientation, n, i, j)
        above = ends.get((i - 1, j))
        if above is not None:
            lo = max(lo, above[1] + 1)
        right = ends.get((i, j + 1))
        if right is not None:
            hi = min(hi, right[0])
        max_len = deg - used - (len(order) - k - 1)
        for ms in _multisets(lo, hi, max_len):
            ends[(i, j)] = (ms[0], ms[-1])
            positions = _markable_positions(ms)
            for npick in range(len(positions) + 1):
                for picked in itertools.combinations(positions, npick):
                    entries[(i, j)] = tuple(
                        (v, p in picked) for p, v in enumerate(ms))
                    yield from rec(k + 1, used + len(ms))
            del entries[(i, j)]
            del ends[(i, j)]

    yield from rec(0, 0)


def enum_mmsvt(outer, inner, n, deg, flags=None, orientation="row"):
    """Exact generating function of flagged marked multiset fillings.

    Marks are summed out cell by cell: a markable element contributes
    alpha_col - beta_row, so only underlying multisets are enumerated.
    """
    order = _mmsvt_state(outer, inner, orientation)
    total = TruncPoly.zero(n, deg)
    ends = {}

    def rec(k, used, acc):
        nonlocal total
        if k == len(order):
            total = total + acc
            return
        i, j = order[k]
        lo, hi = _cell_bounds(flags, orientation, n, i, j)
        above = ends.get((i - 1, j))
        if above is not None:
            lo = max(lo, above[1] + 1)
        right = ends.get((i, j + 1))
        if right is not None:
            hi = min(hi, right[0])
        max_len = deg - used - (len(order) - k - 1)
        alpha = TruncPoly.var(n, deg, ALPHA, j)
        beta = TruncPoly.var(n, deg, BETA, i)
        for ms in _multisets(lo, hi, max_len):
            factor = TruncPoly.const(n, deg, 1)
            for v in ms:
                factor = factor * _xvar(n, deg, v)
            markable = len(_markable_positions(ms))
            factor = factor * alpha ** (len(ms) - 1 - markable)
            factor = factor * (alpha - beta) ** markable
            ends[(i, j)] = (ms[0], ms[-1])
            rec(k + 1, used + len(ms), acc * factor)
            del ends[(i, j)]

    rec(0, 0, TruncPoly.const(n, deg, 1))
    return total


# ---------------------------------------------------------------------------
# marked reverse plane partitions

_VARIANTS = ("left", "right", "bottom")


def _mrpp_validate(outer, inner, variant, orientation, mark_set, flags, n):
    _check_orientation(orientation)
    if variant not in _VARIANTS:
        raise ShapeError(f"unknown variant {variant!r}")
    inner = partition(inner)
    if mark_set is None:
        outer, inner = skew(outer, inner)
        return outer, inner, None
    outer = tuple(outer)
    if dent_index(outer) is None:
        raise ShapeError(f"mark sets need a dented outer shape: {outer}")
    if not contains(inner, outer):
        raise ShapeError(f"{inner} not contained in {outer}")
    if variant == "right":
        raise ShapeError("mark sets apply to left and bottom variants only")
    if orientation != "row":
        raise ShapeError("mark sets use row flags")
    if flags is not None and INF in flags[1]:
        raise ShapeError("mark sets need finite upper flags")
    mark_set = frozenset(mark_set)
    nflag = len(flags[0]) if flags is not None else len(outer)
    if not all(isinstance(i, int) and 1 <= i <= nflag for i in mark_set):
        raise ShapeError(f"mark set out of range: {sorted(mark_set)}")
    return outer, inner, mark_set


def _resolve_s_flags(outer, flags, n):
    """Upper flags as finite ints, defaulting every row to n."""
    if flags is None:
        return (n,) * max(len(outer), 1)
    return tuple(n if v == INF else v for v in flags[1])


def _virtual_value(outer, mark_set, s_flags, i, j):
    """The boundary entry at (i, outer_i + 1): s_i inside the mark set,
    infinite outside; None when (i, j) is not a boundary position."""
    if mark_set is None or not 1 <= i <= len(s_flags):
        return None
    if j != part(outer, i) + 1:
        return None
    return s_flags[i - 1] if i in mark_set else INF


def gen_rpp(outer, inner, n, flags=None, orientation="row", mark_set=None):
    """Yield reverse plane partitions {(i,j): value} of the skew shape with
    weakly increasing rows and columns and per-row or per-column bounds.

    With a mark set the outer shape may be dented and the boundary entries
    T(i, outer_i+1) (s_i for i in the set, infinite otherwise) bound from
    above any real cell directly below them; if r is not componentwise <= s
    the family is empty.
    """
    outer, inner, mark_set = _mrpp_validate(
        outer, inner, "left", orientation, mark_set, flags, n)
    s_flags = _resolve_s_flags(outer, flags, n)
    if mark_set is not None:
        r_flags = flags[0] if flags is not None else (1,) * len(s_flags)
        if any(a > b for a, b in zip(r_flags, s_flags)):
            return
    order = _col_order(cells(outer, inner))
    values = {}

    def rec(k):
        if k == len(order):
            yield dict(values)
            return
        i, j = order[k]
        lo, hi = _cell_bounds(flags, orientation, n, i, j,
                              cap=mark_set is None)
        if (i - 1, j) in values:
            lo = max(lo, values[(i - 1, j)])
        else:
            vv = _virtual_value(outer, mark_set, s_flags, i - 1, j)
            if vv == INF:
                return
            if vv is not None:
                lo = max(lo, vv)
        if (i, j + 1) in values:
            hi = min(hi, values[(i, j + 1)])
        for v in range(lo, hi + 1):
            values[(i, j)] = v
            yield from rec(k + 1)
            del values[(i, j)]

    yield from rec(0)


def _mrpp_neighbors(variant, i, j):
    """((mark cell, mark alpha index), (beta cell, beta index))."""
    if variant == "left":
        return ((i, j + 1), j), ((i - 1, j), i - 1)
    if variant == "right":
        return ((i, j - 1), j - 1), ((i + 1, j), i)
    return ((i - 1, j), i - 1), ((i, j + 1), j)


def _compare_value(values, outer, mark_set, s_flags, cell):
    if cell in values:
        return values[cell]
    return _virtual_value(outer, mark_set, s_flags, cell[0], cell[1])


def markable_cells(outer, inner, values, variant, mark_set=None, flags=None,
                   n=None):
    """Cells of the filling whose value equals the marking neighbor.

    n is only needed with a mark set, to resolve default or infinite upper
    flags into the virtual boundary values.
    """
    if mark_set is not None and n is None:
        raise ShapeError("mark sets need n to resolve boundary values")
    s_flags = _resolve_s_flags(tuple(outer), flags, n) \
        if mark_set is not None else ()
    out = []
    for (i, j), v in values.items():
        (mcell, _), _ = _mrpp_neighbors(variant, i, j)
        if _compare_value(values, tuple(outer), mark_set, s_flags, mcell) == v:
            out.append((i, j))
    return sorted(out)


def mrpp_weight(outer, inner, filling, variant, n, deg,
                mark_set=None, flags=None):
    """Weight of an explicit marked filling {(i,j): (value, marked)}.

    A marked cell contributes -alpha indexed by the marking rule; an unmarked
    cell repeating its beta-neighbor contributes the matching beta, any other
    unmarked cell contributes x_value.
    """
    outer = tuple(outer)
    s_flags = _resolve_s_flags(outer, flags, n) if mark_set is not None else ()
    values = {c: v for c, (v, _) in filling.items()}
    w = TruncPoly.const(n, deg, 1)
    for (i, j), (v, marked) in filling.items():
        (mcell, midx), (bcell, bidx) = _mrpp_neighbors(variant, i, j)
        if marked:
            if _compare_value(values, outer, mark_set, s_flags, mcell) != v:
                raise ShapeError(f"cell {(i, j)} is not markable")
            w = w * (-_pvar(n, deg, ALPHA, midx))
        elif _compare_value(values, outer, mark_set, s_flags, bcell) == v:
            w = w * _pvar(n, deg, BETA, bidx)
        else:
            w = w * _xvar(n, deg, v)
    return w


def enum_mrpp(outer, inner, n, deg, variant="left", flags=None,
              orientation="row", mark_set=None):
    """Exact generating function of marked reverse plane partitions.

    Markable cells are summed out: each contributes its unmarked weight minus
    the marking alpha, so only underlying fillings are enumerated.
    """
    outer_t, inner_t, mark_set = _mrpp_validate(
        outer, inner, variant, orientation, mark_set, flags, n)
    s_flags = _resolve_s_flags(outer_t, flags, n)
    total = TruncPoly.zero(n, deg)
    for values in gen_rpp(outer, inner, n, flags=flags,
                          orientation=orientation, mark_set=mark_set):
        w = TruncPoly.const(n, deg, 1)
        for (i, j), v in values.items():
            (mcell, midx), (bcell, bidx) = _mrpp_neighbors(variant, i, j)
            if _compare_value(values, outer_t, mark_set, s_flags, bcell) == v:
                rest = _pvar(n, deg, BETA, bidx)
            else:
                rest = _xvar(n, deg, v)
            if _compare_value(values, outer_t, mark_set, s_flags, mcell) == v:
                rest = rest - _pvar(n, deg, ALPHA, midx)
            w = w * rest
        total = total + w
    return total


def gen_mrpp(outer, inner, n, variant="left", flags=None, orientation="row",
             mark_set=None):
    """Yield explicit marked fillings {(i,j): (value, marked)}."""
    outer_t, inner_t, mark_set = _mrpp_validate(
        outer, inner, variant, orientation, mark_set, flags, n)
    for values in gen_rpp(outer, inner, n, flags=flags,
                          orientation=orientation, mark_set=mark_set):
        markable = markable_cells(outer_t, inner_t, values, variant,
                                  mark_set=mark_set, flags=flags, n=n)
        for npick in range(len(markable) + 1):
            for picked in itertools.combinations(markable, npick):
                chosen = set(picked)
                yield {c: (v, c in chosen) for c, v in values.items()}


def phi_left_to_right(outer, inner, filling):
    """Map a left-marked filling to the right-marked filling on the same
    underlying values: within the rows where two adjacent columns share the
    marked value, each mark moves up one row (wrapping at the top) and over
    to the right column.  Weight is preserved."""
    outer = tuple(outer)
    values = {c: v for c, (v, _) in filling.items()}
    new_marks = set()
    for (i, j), (v, marked) in filling.items():
        if not marked:
            continue
        rows = [r for r in range(1, len(outer) + 1)
                if values.get((r, j)) == v and values.get((r, j + 1)) == v]
        if i not in rows:
            raise ShapeError(f"cell {(i, j)} is not left-markable")
        idx = rows.index(i)
        target = rows[idx - 1] if idx > 0 else rows[-1]
        new_marks.add((target, j + 1))
    return {c: (v, c in new_marks) for c, v in values.items()}


# ---------------------------------------------------------------------------
# elegant and inelegant tableaux

_FAMILIES = ("elegant", "inelegant", "barred")

_RULE_GROUPS = {
    "C": 0, "c'": 0,
    "c": 1, "C'": 1,
    "D": 2, "d'": 2,
    "d": 3, "D'": 3,
}


def _rule_weight(rule, n, deg, t, c):
    group = _RULE_GROUPS.get(rule)
    if group is None:
        raise ShapeError(f"unknown weight rule {rule!r}")
    if group == 0:
        return _pvar(n, deg, ALPHA, t) - _pvar(n, deg, BETA, t - c)
    if group == 1:
        return _pvar(n, deg, BETA, t) - _pvar(n, deg, ALPHA, t + c)
    if group == 2:
        return _pvar(n, deg, ALPHA, t - c) - _pvar(n, deg, BETA, t)
    return _pvar(n, deg, BETA, t + c) - _pvar(n, deg, ALPHA, t)


def _elegant_cells(outer, inner):
    outer, inner = tuple(outer), tuple(inner)
    if all(v >= 0 for v in outer + inner):
        outer, inner = skew(outer, inner)
        return cells(outer, inner)
    if not gen_contains(inner, outer):
        raise ShapeError(f"{inner} not contained in {outer}")
    return gen_cells(outer, inner)


def gen_elegant(outer, inner, family):
    """Yield fillings {(i,j): value} of the family.

    elegant: rows weakly increase, columns strictly increase,
             min(i-j, 0) < T(i,j) < i;
    barred:  the same with T(i,j) <= i;
    inelegant: rows weakly decrease, columns strictly decrease,
             min(j-i, 0) < T(i,j) < j.
    """
    if family not in _FAMILIES:
        raise ShapeError(f"unknown family {family!r}")
    order = sorted(_elegant_cells(outer, inner))
    values = {}

    def rec(k):
        if k == len(order):
            yield dict(values)
            return
        i, j = order[k]
        if family == "inelegant":
            lo, hi = min(j - i, 0) + 1, j - 1
            if (i, j - 1) in values:
                hi = min(hi, values[(i, j - 1)])
            if (i - 1, j) in values:
                hi = min(hi, values[(i - 1, j)] - 1)
        else:
            lo = min(i - j, 0) + 1
            hi = i - 1 if family == "elegant" else i
            if (i, j - 1) in values:
                lo = max(lo, values[(i, j - 1)])
            if (i - 1, j) in values:
                lo = max(lo, values[(i - 1, j)] + 1)
        for v in range(lo, hi + 1):
            values[(i, j)] = v
            yield from rec(k + 1)
            del values[(i, j)]

    yield from rec(0)


def enum_elegant(outer, inner, n, deg, family, rule):
    """Sum of per-cell rule weights over the family; parameters only."""
    if rule not in _RULE_GROUPS:
        raise ShapeError(f"unknown weight rule {rule!r}")
    total = TruncPoly.zero(n, deg)
    for values in gen_elegant(outer, inner, family):
        w = TruncPoly.const(n, deg, 1)
        for (i, j), t in values.items():
            w = w * _rule_weight(rule, n, deg, t, j - i)
        total = total + w
    return total


# ---------------------------------------------------------------------------
# flagged set-valued tableaux

def _sets(lo, hi, max_len):
    """Nonempty strictly increasing tuples over [lo, hi] of length <= max_len."""
    if lo > hi or max_len < 1:
        return
    prefix = []

    def rec(start):
        for v in range(start, hi + 1):
            prefix.append(v)
            yield tuple(prefix)
            if len(prefix) < max_len:
                yield from rec(v + 1)
            prefix.pop()

    yield from rec(lo)


def gen_fsvt(outer, inner, f, g, n, deg):
    """Yield set-valued fillings {(i,j): (v1 < v2 < ...)} with row i entries
    in [g_i, f_i] and at most deg entries in total."""
    outer, inner = skew(outer, inner)
    if min(len(f), len(g)) < len(outer):
        raise ShapeError("flag vectors shorter than the shape")
    order = _col_order(cells(outer, inner))
    ends = {}
    chosen = {}

    def rec(k, used):
        if k == len(order):
            yield dict(chosen)
            return
        i, j = order[k]
        lo, hi = g[i - 1], f[i - 1]
        if hi == INF:
            hi = n
        if hi > n:
            raise ShapeError(f"upper flag {hi} exceeds the variable count {n}")
        above = ends.get((i - 1, j))
        if above is not None:
            lo = max(lo, above[1] + 1)
        right = ends.get((i, j + 1))
        if right is not None:
            hi = min(hi, right[0])
        max_len = deg - used - (len(order) - k - 1)
        for st in _sets(lo, hi, max_len):
            ends[(i, j)] = (st[0], st[-1])
            chosen[(i, j)] = st
            yield from rec(k + 1, used + len(st))
            del chosen[(i, j)]
            del ends[(i, j)]

    yield from rec(0, 0)


def enum_fsvt(outer, inner, f, g, n, deg, beta=None):
    """Generating function of flagged set-valued fillings: each filling
    contributes beta^(entries - cells) times the product of its x variables."""
    if beta is None:
        beta = TruncPoly.var(n, deg, BETA, 1)
    ncells = len(cells(partition(outer), partition(inner)))
    total = TruncPoly.zero(n, deg)
    for filling in gen_fsvt(outer, inner, f, g, n, deg):
        w = TruncPoly.const(n, deg, 1)
        count = 0
        for st in filling.values():
            count += len(st)
            for v in st:
                w = w * _xvar(n, deg, v)
        total = total + w * beta ** (count - ncells)
    return total
