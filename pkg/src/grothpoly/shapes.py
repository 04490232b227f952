"""Partitions, skew shapes, generalized and dented partitions, flag vectors.

Partitions are tuples of positive integers without trailing zeros; any
operation needing a fixed length takes n explicitly.  Generalized partitions
are weakly decreasing integer tuples whose length is significant.
"""

import math

INF = math.inf


class ShapeError(ValueError):
    pass


def partition(parts):
    """Canonicalize to a trailing-zero-free weakly decreasing tuple."""
    parts = tuple(parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise ShapeError(f"not weakly decreasing: {parts}")
    if parts and parts[-1] < 0:
        raise ShapeError(f"negative part in partition: {parts}")
    return parts


def part(lam, i):
    """lam_i with 1-based index and implicit trailing zeros."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def size(lam):
    return sum(lam)


def contains(inner, outer):
    """inner_i <= outer_i for all i (works for generalized tuples of equal
    length; ordinary partitions are padded with zeros)."""
    k = max(len(inner), len(outer))
    return all(part(inner, i) <= part(outer, i) for i in range(1, k + 1))


def gen_contains(inner, outer):
    """Containment for fixed-length generalized partitions."""
    if len(inner) != len(outer):
        raise ShapeError("generalized partitions must share their length")
    return all(a <= b for a, b in zip(inner, outer))


def conjugate(lam):
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def skew(outer, inner):
    outer, inner = partition(outer), partition(inner)
    if not contains(inner, outer):
        raise ShapeError(f"{inner} not contained in {outer}")
    return outer, inner


def cells(outer, inner=()):
    """Row-major cells (i, j) of outer/inner, 1-based."""
    out = []
    for i in range(1, len(outer) + 1):
        for j in range(part(inner, i) + 1, part(outer, i) + 1):
            out.append((i, j))
    return out


def cells_and_contents(outer, inner=()):
    """Row-major (i, j, c) with content c = j - i."""
    return [(i, j, j - i) for i, j in cells(outer, inner)]


def gen_cells(outer, inner):
    """Cells of a generalized skew shape: (i, j) with inner_i < j <= outer_i.
    Column indices may be nonpositive."""
    if len(outer) != len(inner):
        raise ShapeError("generalized partitions must share their length")
    out = []
    for i in range(1, len(outer) + 1):
        for j in range(inner[i - 1] + 1, outer[i - 1] + 1):
            out.append((i, j))
    return out


def circ(lam, mu, n):
    """The skew shape made by rotating lam 180 degrees and attaching mu to
    its right: (lam1+mu1, ..., lam1+mu_n)/(lam1-lam_n, ..., lam1-lam1)."""
    lam, mu = partition(lam), partition(mu)
    if n < max(len(lam), len(mu)):
        raise ShapeError(f"n={n} shorter than {lam} or {mu}")
    l1 = part(lam, 1)
    outer = tuple(l1 + part(mu, i) for i in range(1, n + 1))
    inner = tuple(l1 - part(lam, n + 1 - i) for i in range(1, n + 1))
    return partition(outer), partition(inner)


def dent_index(seq):
    """The k making seq a dented partition, or None.

    Dented: lam1+1 = ... = lam_{k-1}+1 = lam_k >= lam_{k+1} >= ... >= lam_n
    with nonnegative entries.  An ordinary partition has k = 1.
    """
    seq = tuple(seq)
    if any(p < 0 for p in seq):
        return None
    n = len(seq)
    for k in range(1, n + 1):
        if all(seq[i] + 1 == seq[k - 1] for i in range(k - 1)) and \
           all(seq[i] >= seq[i + 1] for i in range(k - 1, n - 1)):
            return k
    return None


def minimal_cell(seq):
    """(k, lam_k) for a dented partition; (1, lam_1) when already ordinary."""
    k = dent_index(seq)
    if k is None:
        raise ShapeError(f"not a dented partition: {tuple(seq)}")
    return k, tuple(seq)[k - 1]


def flag_pair(r, s, n=None):
    """Validate flag vectors; s entries may be INF."""
    r, s = tuple(r), tuple(s)
    if len(r) != len(s):
        raise ShapeError("flag vectors must have equal length")
    if n is not None and len(r) != n:
        raise ShapeError(f"flag vectors must have length {n}")
    if any((not isinstance(v, int)) or v < 1 for v in r):
        raise ShapeError(f"r entries must be positive integers: {r}")
    if any(v != INF and ((not isinstance(v, int)) or v < 1) for v in s):
        raise ShapeError(f"s entries must be positive integers or inf: {s}")
    return r, s


def resolve_flags(r, s, n):
    """Replace INF upper flags by the ambient variable count n."""
    return tuple(r), tuple(n if v == INF else v for v in s)


def parse_partition(text):
    text = text.strip()
    if text in ("", "0"):
        return ()
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise ShapeError(f"cannot parse partition {text!r}") from exc
    return partition(parts)


def parse_flags(text):
    """Parse 'r=1,1,2 s=3,3,inf' into a flag pair."""
    rv = sv = None
    for chunk in text.split():
        if chunk.startswith("r="):
            rv = tuple(int(p) for p in chunk[2:].split(","))
        elif chunk.startswith("s="):
            sv = tuple(INF if p == "inf" else int(p)
                       for p in chunk[2:].split(","))
        else:
            raise ShapeError(f"cannot parse flag chunk {chunk!r}")
    if rv is None or sv is None:
        raise ShapeError(f"flags need both r= and s=: {text!r}")
    return flag_pair(rv, sv)


def partitions_of(k, max_len=None, max_part=None):
    """All partitions of k, largest part first."""
    if max_part is None:
        max_part = k
    if max_len is None:
        max_len = k
    out = []

    def rec(remaining, cap, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if len(prefix) == max_len:
            return
        for p in range(min(cap, remaining), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(k, max_part, [])
    return out


def partitions_up_to(k, max_len=None, max_part=None):
    """All partitions of size <= k (including the empty one)."""
    out = []
    for m in range(k + 1):
        out.extend(partitions_of(m, max_len=max_len, max_part=max_part))
    return out


def partitions_between(lo, hi):
    """Partitions nu with lo <= nu <= hi componentwise."""
    k = max(len(lo), len(hi), 1)
    if not contains(lo, hi):
        return []
    out = []

    def rec(i, prefix):
        if i > k:
            out.append(partition(prefix))
            return
        upper = min(part(hi, i), prefix[-1] if prefix else part(hi, 1))
        for v in range(part(lo, i), upper + 1):
            prefix.append(v)
            rec(i + 1, prefix)
            prefix.pop()

    rec(1, [])
    return out
