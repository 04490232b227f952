"""Determinantal formulas for canonical Grothendieck polynomials and duals.

Everything is computed inside TruncPoly: x-degrees are truncated at deg,
parameter degrees are exact.  G-type formulas use circle-minus entries
h_m[X (-) Y] so that all values stay polynomial; the only truncated-series
prefactor is the geometric alpha-product attached to column determinants.

Conventions shared by all functions:
  - A_k = alpha_1 + ... + alpha_k and B_k = beta_1 + ... + beta_k as signed
    alphabets, empty for k <= 0.
  - Column ("col") determinants compute the polynomial attached to the
    conjugate shape outer'/inner'; the arguments stay unconjugated.
  - Flag hypothesis violations emit a warning but the determinant is still
    evaluated, since those values are meaningful counterexample data.
"""

import warnings
from math import comb

from .ring import (ALPHA, BETA, X, InternalCheckError, TruncPoly, det,
                   exact_divide)
from .shapes import (ShapeError, contains, dent_index, minimal_cell, part,
                     partition, partitions_between, partitions_of, size)
from .symfunc import (a_prefix, b_prefix, cat, e_ominus, e_pleth, h_ominus,
                      h_pleth, neg, single, vandermonde, x_interval)


def _one(n, deg):
    return TruncPoly.const(n, deg, 1)


def _pvar(n, deg, fam, idx):
    return TruncPoly.var(n, deg, fam, idx)


def _strip(seq):
    seq = tuple(seq)
    while seq and seq[-1] == 0:
        seq = seq[:-1]
    return seq


# Alphabets A_{lam_i} - B_{i-1} (G side) and -A_{lam_i-1} + B_{i-1} (g side).

def _g_right(k, i):
    return cat(a_prefix(k), neg(b_prefix(i - 1)))


def _dual_shift(k, i):
    return cat(neg(a_prefix(k - 1)), b_prefix(i - 1))


def G_bialternant(lam, n, deg):
    """det(h_{lam_i+n-i}[x_j (-) (A_{lam_i} - B_{i-1})]) over the Vandermonde
    determinant, with an n(n-1)/2 degree guard on the numerator."""
    lam = partition(lam)
    if len(lam) > n:
        raise ShapeError(f"shape {lam} does not fit in {n} rows")
    guard = n * (n - 1) // 2
    work = deg + guard
    matrix = [[h_ominus(part(lam, i) + n - i, single(X, j),
                        _g_right(part(lam, i), i), n, work)
               for j in range(1, n + 1)] for i in range(1, n + 1)]
    num = det(matrix, n=n, deg=work)
    return exact_divide(num, vandermonde(n, work), guard)


def g_bialternant(lam, n, deg):
    """det(h_{lam_i+n-i}[x_j - A_{lam_i-1} + B_{i-1}]) over the Vandermonde
    determinant."""
    lam = partition(lam)
    if len(lam) > n:
        raise ShapeError(f"shape {lam} does not fit in {n} rows")
    guard = n * (n - 1) // 2
    work = deg + guard
    matrix = [[h_pleth(part(lam, i) + n - i,
                       cat(single(X, j), _dual_shift(part(lam, i), i)),
                       n, work)
               for j in range(1, n + 1)] for i in range(1, n + 1)]
    num = det(matrix, n=n, deg=work)
    return exact_divide(num, vandermonde(n, work), guard)


def G_jt(lam, n, deg):
    """det(h_{lam_i-i+j}[X_n (-) (A_{lam_i} - B_{i-1})]) of size n."""
    lam = partition(lam)
    if len(lam) > n:
        raise ShapeError(f"shape {lam} does not fit in {n} rows")
    xs = x_interval(1, n)
    matrix = [[h_ominus(part(lam, i) - i + j, xs,
                        _g_right(part(lam, i), i), n, deg)
               for j in range(1, n + 1)] for i in range(1, n + 1)]
    return det(matrix, n=n, deg=deg)


def g_jt(lam, n, deg):
    """det(h_{lam_i-i+j}[X_n - A_{lam_i-1} + B_{i-1}]) of size n."""
    lam = partition(lam)
    if len(lam) > n:
        raise ShapeError(f"shape {lam} does not fit in {n} rows")
    xs = x_interval(1, n)
    matrix = [[h_pleth(part(lam, i) - i + j,
                       cat(xs, _dual_shift(part(lam, i), i)), n, deg)
               for j in range(1, n + 1)] for i in range(1, n + 1)]
    return det(matrix, n=n, deg=deg)


def G_jt_modified(lam, n, deg):
    """prod_{i,j<=n}(1 - b_i x_j) times the determinant with column-shifted
    entries h_{lam_i-i+j}[X_n (-) (A_{lam_i} - B_{i-1} + B_j)]."""
    lam = partition(lam)
    if len(lam) > n:
        raise ShapeError(f"shape {lam} does not fit in {n} rows")
    xs = x_interval(1, n)
    pref = _one(n, deg)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            pref = pref * (_one(n, deg)
                           - _pvar(n, deg, BETA, i) * _pvar(n, deg, X, j))
    matrix = [[h_ominus(part(lam, i) - i + j, xs,
                        cat(_g_right(part(lam, i), i), b_prefix(j)), n, deg)
               for j in range(1, n + 1)] for i in range(1, n + 1)]
    return pref * det(matrix, n=n, deg=deg)


def g_jt_modified(lam, n, deg):
    """det(h_{lam_i-i+j}[X_n - A_{lam_i-1} + B_{i-1} - B_{j-1}]); the column
    shift removes the need for any prefactor."""
    lam = partition(lam)
    if len(lam) > n:
        raise ShapeError(f"shape {lam} does not fit in {n} rows")
    xs = x_interval(1, n)
    matrix = [[h_pleth(part(lam, i) - i + j,
                       cat(xs, _dual_shift(part(lam, i), i),
                           neg(b_prefix(j - 1))), n, deg)
               for j in range(1, n + 1)] for i in range(1, n + 1)]
    return det(matrix, n=n, deg=deg)


def C_coeff(lam, mu, n, deg):
    """Coefficient of s_mu in the Schur expansion of G_lam:
    det(h_{mu_i-lam_j-i+j}[A_{lam_j} - B_{j-1}]); zero unless lam <= mu."""
    lam, mu = partition(lam), partition(mu)
    m = max(len(lam), len(mu))
    matrix = [[h_pleth(part(mu, i) - part(lam, j) - i + j,
                       _g_right(part(lam, j), j), n, deg)
               for j in range(1, m + 1)] for i in range(1, m + 1)]
    return det(matrix, n=n, deg=deg)


def c_coeff(lam, mu, n, deg):
    """Coefficient of s_mu in the Schur expansion of g_lam:
    det(h_{lam_i-mu_j-i+j}[-A_{lam_i-1} + B_{i-1}]); zero unless mu <= lam."""
    lam, mu = partition(lam), partition(mu)
    m = max(len(lam), len(mu))
    matrix = [[h_pleth(part(lam, i) - part(mu, j) - i + j,
                       _dual_shift(part(lam, i), i), n, deg)
               for j in range(1, m + 1)] for i in range(1, m + 1)]
    return det(matrix, n=n, deg=deg)


def hall_pairing(lam, mu, n, deg):
    """<G_lam, g_mu> computed two ways: the finite sum over lam <= nu <= mu
    of C_{lam,nu} c_{mu,nu}, and the closed determinant
    det(h_{mu_i-lam_j-i+j}[A_{lam_j} - B_{j-1} - A_{mu_i-1} + B_{i-1}]).
    Both must agree (else InternalCheckError); the value is delta_{lam,mu}."""
    lam, mu = partition(lam), partition(mu)
    total = TruncPoly.zero(n, deg)
    for nu in partitions_between(lam, mu):
        total = total + C_coeff(lam, nu, n, deg) * c_coeff(mu, nu, n, deg)
    m = max(len(lam), len(mu))
    matrix = [[h_pleth(part(mu, i) - part(lam, j) - i + j,
                       cat(_g_right(part(lam, j), j),
                           _dual_shift(part(mu, i), i)), n, deg)
               for j in range(1, m + 1)] for i in range(1, m + 1)]
    closed = det(matrix, n=n, deg=deg)
    if total != closed:
        raise InternalCheckError(
            f"pairing sum and determinant disagree for {lam}, {mu}")
    return total


def _box_truncate(p, n_x, bound):
    """Keep monomials whose x_1..x_{n_x} degree and remaining x degree are
    both <= bound."""
    kept = {}
    for mono, c in p.terms.items():
        dx = dy = 0
        for (fam, idx), e in mono:
            if fam == X:
                if idx <= n_x:
                    dx += e
                else:
                    dy += e
        if dx <= bound and dy <= bound:
            kept[mono] = c
    return TruncPoly(p.n, p.deg, kept)


def cauchy_check(n_x, n_y, bound):
    """prod_{i,j} 1/(1 - x_i y_j) = sum_lam G_lam(x) g_lam(y) with the
    y-alphabet realized as x_{n_x+1}..x_{n_x+n_y}, compared on all bidegrees
    (d_x, d_y) with d_x, d_y <= bound."""
    n = n_x + n_y
    deg = 2 * bound
    lhs = _one(n, deg)
    for i in range(1, n_x + 1):
        for j in range(1, n_y + 1):
            t = _pvar(n, deg, X, i) * _pvar(n, deg, X, n_x + j)
            geom = _one(n, deg)
            for k in range(1, bound + 1):
                geom = geom + t ** k
            lhs = lhs * geom
    rhs = TruncPoly.zero(n, deg)
    for k in range(bound + 1):
        for lam in partitions_of(k, max_len=n_x):
            gx = G_jt(lam, n_x, deg).with_n(n)
            rows = max(n_y, len(lam))
            gy = g_jt(lam, rows, deg).restrict_n(n_y).shift_x(n_x, n)
            rhs = rhs + gx * gy
    return _box_truncate(lhs, n_x, bound) == _box_truncate(rhs, n_x, bound)


def schur_in_grothendieck(lam, basis, budget, n, deg):
    """Expansion of s_lam in the G or g basis: s_lam = sum c_{mu,lam} G_mu
    over mu >= lam (truncated to |mu| <= budget) or sum C_{mu,lam} g_mu over
    mu <= lam (finite).  Returns {mu: parameter coefficient}."""
    lam = partition(lam)
    out = {}
    if basis == "G":
        for k in range(size(lam), budget + 1):
            for mu in partitions_of(k):
                if not contains(lam, mu):
                    continue
                coef = c_coeff(mu, lam, n, deg)
                if not coef.is_zero():
                    out[mu] = coef
    elif basis == "g":
        for mu in partitions_between((), lam):
            coef = C_coeff(mu, lam, n, deg)
            if not coef.is_zero():
                out[mu] = coef
    else:
        raise ShapeError(f"unknown basis {basis!r}")
    return out


def _flag_vectors(r, s, low):
    r, s = tuple(r), tuple(s)
    if len(r) != len(s):
        raise ShapeError("flag vectors must have equal length")
    if len(r) < low:
        raise ShapeError("flag vectors shorter than the shape")
    if any(v < 1 for v in r + s):
        raise ShapeError("flags must be positive")
    return r, s


def _warn_hypotheses(ok, label):
    if not ok:
        warnings.warn(f"{label} flag hypotheses violated; "
                      "evaluating the determinant anyway", stacklevel=3)


def _geom_prefactor(pairs, n, deg):
    """prod over (idx, lo, hi) of prod_{l=lo}^{hi} sum_k (alpha_idx x_l)^k."""
    pref = _one(n, deg)
    for idx, lo, hi in pairs:
        for l in range(lo, min(hi, n) + 1):
            t = _pvar(n, deg, ALPHA, idx) * _pvar(n, deg, X, l)
            geom = _one(n, deg)
            for k in range(1, deg + 1):
                geom = geom + t ** k
            pref = pref * geom
    return pref


def G_flagged_det(outer, inner, r, s, orientation, n, deg):
    """Flagged Jacobi-Trudi determinant for G, size len(r).

    row: prod_i prod_{l=r_i}^{s_i}(1 - b_i x_l) times
         det(h_{lam_i-mu_j-i+j}[X_[r_j,s_i] (-) (A_lam_i - A_mu_j - B_{i-1} + B_j)]).
    col: the row-flagged value of the conjugate shape outer'/inner', namely
         prod_i prod_l geom(a_i x_l) times
         det(e_{lam_i-mu_j-i+j}[X_[r_j,s_i] (-) (A_{i-1} - A_j - B_lam_i + B_mu_j)]).
    """
    lam, mu = partition(outer), partition(inner)
    r, s = _flag_vectors(r, s, max(len(lam), len(mu)))
    m = len(r)
    ok = contains(mu, lam)
    for i in range(1, m):
        if part(mu, i) < part(lam, i + 1):
            if orientation == "row":
                ok = ok and r[i - 1] <= r[i] and s[i - 1] <= s[i]
            else:
                ok = ok and (r[i - 1] - part(mu, i)
                             <= r[i] - part(mu, i + 1))
                ok = ok and (s[i - 1] - part(lam, i)
                             <= s[i] - part(lam, i + 1) + 1)
    _warn_hypotheses(ok, f"{orientation} G")
    if orientation == "row":
        pref = _one(n, deg)
        for i in range(1, m + 1):
            for l in range(r[i - 1], min(s[i - 1], n) + 1):
                pref = pref * (_one(n, deg)
                               - _pvar(n, deg, BETA, i) * _pvar(n, deg, X, l))
        matrix = [[h_ominus(part(lam, i) - part(mu, j) - i + j,
                            x_interval(r[j - 1], s[i - 1]),
                            cat(a_prefix(part(lam, i)),
                                neg(a_prefix(part(mu, j))),
                                neg(b_prefix(i - 1)), b_prefix(j)), n, deg)
                   for j in range(1, m + 1)] for i in range(1, m + 1)]
    elif orientation == "col":
        pref = _geom_prefactor(
            [(i, r[i - 1], s[i - 1]) for i in range(1, m + 1)], n, deg)
        matrix = [[e_ominus(part(lam, i) - part(mu, j) - i + j,
                            x_interval(r[j - 1], s[i - 1]),
                            cat(a_prefix(i - 1), neg(a_prefix(j)),
                                neg(b_prefix(part(lam, i))),
                                b_prefix(part(mu, j))), n, deg)
                   for j in range(1, m + 1)] for i in range(1, m + 1)]
    else:
        raise ShapeError(f"unknown orientation {orientation!r}")
    return pref * det(matrix, n=n, deg=deg)


def g_flagged_det(outer, inner, r, s, orientation, n, deg):
    """Flagged Jacobi-Trudi determinant for g, size len(r); no prefactor.

    row: det(h_{lam_i-mu_j-i+j}[X_[r_j,s_i] - A_{lam_i-1} + A_mu_j + B_{i-1} - B_{j-1}]).
    col: det(e_{lam_i-mu_j-i+j}[X_[r_j,s_i] - A_{i-1} + A_{j-1} + B_{lam_i-1} - B_mu_j])
         for the conjugate shape outer'/inner'.

    Unlike the G version there is no containment hypothesis.
    """
    lam, mu = partition(outer), partition(inner)
    r, s = _flag_vectors(r, s, max(len(lam), len(mu)))
    m = len(r)
    ok = True
    for i in range(1, m):
        if part(mu, i) < part(lam, i + 1):
            ok = ok and r[i - 1] <= r[i] and s[i - 1] <= s[i]
    _warn_hypotheses(ok, f"{orientation} g")
    if orientation == "row":
        matrix = [[h_pleth(part(lam, i) - part(mu, j) - i + j,
                           cat(x_interval(r[j - 1], s[i - 1]),
                               neg(a_prefix(part(lam, i) - 1)),
                               a_prefix(part(mu, j)),
                               b_prefix(i - 1), neg(b_prefix(j - 1))), n, deg)
                   for j in range(1, m + 1)] for i in range(1, m + 1)]
    elif orientation == "col":
        matrix = [[e_pleth(part(lam, i) - part(mu, j) - i + j,
                           cat(x_interval(r[j - 1], s[i - 1]),
                               neg(a_prefix(i - 1)), a_prefix(j - 1),
                               b_prefix(part(lam, i) - 1),
                               neg(b_prefix(part(mu, j)))), n, deg)
                   for j in range(1, m + 1)] for i in range(1, m + 1)]
    else:
        raise ShapeError(f"unknown orientation {orientation!r}")
    return det(matrix, n=n, deg=deg)


class FlagSweep:
    """Evaluates a flagged determinant for many flag vectors of one shape
    pair, sharing entry values, column-prefix minors, and per-row prefactors
    across calls.  value(r, s) equals G_flagged_det / g_flagged_det for the
    same arguments; hypothesis checking is left to the caller.

    Sharing works because entry (i, j) depends on the flags only through
    (r_j, s_i), and because x variables beyond n vanish, only through
    (min(r_j, n + 1), min(s_i, n)).
    """

    def __init__(self, kind, outer, inner, orientation, n, deg):
        if kind not in ("G", "g"):
            raise ShapeError(f"unknown kind {kind!r}")
        if orientation not in ("row", "col"):
            raise ShapeError(f"unknown orientation {orientation!r}")
        self.kind = kind
        self.lam, self.mu = partition(outer), partition(inner)
        self.orientation = orientation
        self.n, self.deg = n, deg
        self._entries = {}
        self._minors = {}
        self._rowpref = {}

    def _entry(self, i, j, rj, si):
        key = (i, j, rj, si)
        val = self._entries.get(key)
        if val is not None:
            return val
        lam, mu, n, deg = self.lam, self.mu, self.n, self.deg
        m = part(lam, i) - part(mu, j) - i + j
        xs = x_interval(rj, si)
        if self.kind == "G" and self.orientation == "row":
            val = h_ominus(m, xs, cat(a_prefix(part(lam, i)),
                                      neg(a_prefix(part(mu, j))),
                                      neg(b_prefix(i - 1)), b_prefix(j)),
                           n, deg)
        elif self.kind == "G":
            val = e_ominus(m, xs, cat(a_prefix(i - 1), neg(a_prefix(j)),
                                      neg(b_prefix(part(lam, i))),
                                      b_prefix(part(mu, j))), n, deg)
        elif self.orientation == "row":
            val = h_pleth(m, cat(xs, neg(a_prefix(part(lam, i) - 1)),
                                 a_prefix(part(mu, j)),
                                 b_prefix(i - 1), neg(b_prefix(j - 1))),
                          n, deg)
        else:
            val = e_pleth(m, cat(xs, neg(a_prefix(i - 1)), a_prefix(j - 1),
                                 b_prefix(part(lam, i) - 1),
                                 neg(b_prefix(part(mu, j)))), n, deg)
        self._entries[key] = val
        return val

    def _minor(self, rows, r, s):
        # det of the submatrix on these rows and columns 1..len(rows); the
        # full-size determinant is not memoized since its key rarely repeats
        k = len(rows)
        if k == 0:
            return _one(self.n, self.deg)
        full = k == len(r)
        key = (rows, r[:k], tuple(s[i - 1] for i in rows))
        if not full:
            val = self._minors.get(key)
            if val is not None:
                return val
        acc = TruncPoly.zero(self.n, self.deg)
        for t, i in enumerate(rows):
            entry = self._entry(i, k, r[k - 1], s[i - 1])
            if entry.is_zero():
                continue
            term = entry * self._minor(rows[:t] + rows[t + 1:], r, s)
            if (t + k - 1) % 2:
                term = -term
            acc = acc + term
        if not full:
            self._minors[key] = acc
        return acc

    def _row_factor(self, i, ri, si):
        key = (i, ri, si)
        val = self._rowpref.get(key)
        if val is not None:
            return val
        n, deg = self.n, self.deg
        if self.orientation == "row":
            val = _one(n, deg)
            for l in range(ri, min(si, n) + 1):
                val = val * (_one(n, deg)
                             - _pvar(n, deg, BETA, i) * _pvar(n, deg, X, l))
        else:
            val = _geom_prefactor([(i, ri, si)], n, deg)
        self._rowpref[key] = val
        return val

    def value(self, r, s):
        n = self.n
        r = tuple(min(v, n + 1) for v in r)
        s = tuple(min(v, n) for v in s)
        m = len(r)
        result = self._minor(tuple(range(1, m + 1)), r, s)
        if self.kind == "G":
            for i in range(1, m + 1):
                result = result * self._row_factor(i, r[i - 1], s[i - 1])
        return result


def valid_mark_sets(outer):
    """Mark sets compatible with the boundary recursion for a dented shape:
    {1..p} and {1..p} minus the dent row k, for every p >= k whose part still
    equals the dent part."""
    lam = tuple(outer)
    k, lamk = minimal_cell(lam)
    out = []
    for p in range(k, len(lam) + 1):
        if lamk == 0 or part(lam, p) != lamk:
            break
        for cand in (frozenset(range(1, p + 1)),
                     frozenset(range(1, p + 1)) - {k}):
            if cand not in out:
                out.append(cand)
    if not out:
        out.append(frozenset())
    return out


def g_marked_det(outer, inner, r, s, mark_set, n, deg):
    """Row-flagged dual determinant with a boundary mark set, size len(r).

    entry(i,j) = 0 when r_j > s_i, else
    h_{lam_i-mu_j-i+j}[X_[r_j,s_i] - A_{lam_i-1+[i in I]} + A_mu_j
                       + B_{i-1} - B_{j-1}].

    outer may be dented; with I empty and an ordinary partition this reduces
    to the row g determinant whenever r <= s componentwise.
    """
    lam = tuple(outer)
    if dent_index(lam) is None:
        raise ShapeError(f"not a dented partition: {lam}")
    mu = partition(inner)
    if not contains(mu, lam):
        raise ShapeError(f"{mu} not contained in {lam}")
    r, s = _flag_vectors(r, s, len(lam))
    m = len(r)
    mark_set = frozenset(mark_set)
    if not all(isinstance(i, int) and 1 <= i <= m for i in mark_set):
        raise ShapeError(f"mark set out of range: {sorted(mark_set)}")
    ok = mark_set in valid_mark_sets(lam)
    for i in range(1, m):
        if part(mu, i) < part(lam, i + 1):
            ok = ok and r[i - 1] <= r[i] and s[i - 1] <= s[i]
    _warn_hypotheses(ok, "marked g")
    zero = TruncPoly.zero(n, deg)
    matrix = [[zero if r[j - 1] > s[i - 1] else
               h_pleth(part(lam, i) - part(mu, j) - i + j,
                       cat(x_interval(r[j - 1], s[i - 1]),
                           neg(a_prefix(part(lam, i) - 1
                                        + (i in mark_set))),
                           a_prefix(part(mu, j)),
                           b_prefix(i - 1), neg(b_prefix(j - 1))), n, deg)
               for j in range(1, m + 1)] for i in range(1, m + 1)]
    return det(matrix, n=n, deg=deg)


def matsumura_Gpq(m, p, q, n, deg):
    """One-row flagged Grothendieck series in the collapsed parameter b_1:
    prod_{l=q}^p (1 + b_1 x_l) * sum_{k>=0} (-b_1)^k h_{m+k}[X_[q,p]]."""
    beta = _pvar(n, deg, BETA, 1)
    pref = _one(n, deg)
    for l in range(q, min(p, n) + 1):
        pref = pref * (_one(n, deg) + beta * _pvar(n, deg, X, l))
    xs = x_interval(q, p)
    acc = TruncPoly.zero(n, deg)
    for k in range(0, max(0, deg - m) + 1):
        term = h_pleth(m + k, xs, n, deg)
        if term.is_zero():
            continue
        acc = acc + ((-beta) ** k) * term
    return pref * acc


def _binom_int(t, m):
    """Binomial coefficient C(t, m) extended to negative integer t."""
    if t >= 0:
        return comb(t, m)
    return (-1) ** m * comb(-t + m - 1, m)


def matsumura_det(lam, mu, f, g, n, deg):
    """Single-parameter flagged determinant: prod_{i<=l(lam)}
    prod_{l=g_i}^{f_i}(1 + b_1 x_l) times det over l(lam) rows of
    sum_m b_1^m C(i-j-1, m) h_{lam_i-mu_j-i+j+m}[X_[g_j,f_i]]."""
    lam, mu = partition(lam), partition(mu)
    if not contains(mu, lam):
        raise ShapeError(f"{mu} is not contained in {lam}")
    ell = len(lam)
    f, g = tuple(f), tuple(g)
    if len(f) < ell or len(g) < ell:
        raise ShapeError("flag vectors shorter than the shape")
    beta = _pvar(n, deg, BETA, 1)
    pref = _one(n, deg)
    for i in range(1, ell + 1):
        for l in range(g[i - 1], min(f[i - 1], n) + 1):
            pref = pref * (_one(n, deg) + beta * _pvar(n, deg, X, l))
    matrix = []
    for i in range(1, ell + 1):
        row = []
        for j in range(1, ell + 1):
            idx = part(lam, i) - part(mu, j) - i + j
            xs = x_interval(g[j - 1], f[i - 1])
            acc = TruncPoly.zero(n, deg)
            for m in range(max(0, -idx), deg - idx + 1):
                bc = _binom_int(i - j - 1, m)
                if bc == 0:
                    continue
                term = h_pleth(idx + m, xs, n, deg)
                if term.is_zero():
                    continue
                acc = acc + bc * (beta ** m) * term
            row.append(acc)
        matrix.append(row)
    return pref * det(matrix, n=n, deg=deg)


# Skew Schur expansions.  The eight coefficient determinants are named after
# their standard letters; primed letters take (rho, mu) subscripts and
# unprimed ones take (lam, nu).

_SKEW_COEFF = {
    "C": ("h", lambda lam, i, j: cat(a_prefix(part(lam, j)),
                                     neg(b_prefix(j - 1)))),
    "C'": ("h", lambda mu, i, j: cat(neg(a_prefix(part(mu, i))),
                                     b_prefix(i))),
    "D": ("e", lambda lam, i, j: cat(a_prefix(j - 1),
                                     neg(b_prefix(part(lam, j))))),
    "D'": ("e", lambda mu, i, j: cat(neg(a_prefix(i)),
                                     b_prefix(part(mu, i)))),
    "c": ("h", lambda lam, i, j: cat(neg(a_prefix(part(lam, i) - 1)),
                                     b_prefix(i - 1))),
    "c'": ("h", lambda mu, i, j: cat(a_prefix(part(mu, j)),
                                     neg(b_prefix(j - 1)))),
    "d": ("e", lambda lam, i, j: cat(neg(a_prefix(i - 1)),
                                     b_prefix(part(lam, i) - 1))),
    "d'": ("e", lambda mu, i, j: cat(a_prefix(j - 1),
                                     neg(b_prefix(part(mu, j))))),
}


def skew_coeff(rule, first, second, n, deg, rows=None):
    """Skew Schur expansion coefficient named by its rule letter, with
    subscripts in display order: C/D/c/d take (lam, nu), the primed rules
    take (rho, mu).  Capital rules index the determinant by the second
    subscript on rows (e.g. C gives h_{nu_i - lam_j - i + j}), lowercase
    rules by the first (c gives h_{lam_i - nu_j - i + j})."""
    if rule not in _SKEW_COEFF:
        raise ShapeError(f"unknown coefficient rule {rule!r}")
    basis, alphabet = _SKEW_COEFF[rule]
    if rows is None:
        rows = max(len(first), len(second), 1)
    if rule in ("C", "D", "C'", "D'"):
        top, bot = second, first
    else:
        top, bot = first, second
    fixed = first if rule in ("C", "D", "c", "d") else second
    fn = h_pleth if basis == "h" else e_pleth
    matrix = [[fn(part(top, i) - part(bot, j) - i + j,
                  alphabet(fixed, i, j), n, deg)
               for j in range(1, rows + 1)] for i in range(1, rows + 1)]
    return det(matrix, n=n, deg=deg)


def gpar_schur(nu, rho, basis, rows, n, deg):
    """Jacobi-Trudi determinant det(f_{nu_i-rho_j-i+j}[X_n]) of size rows for
    generalized partitions; basis "h" gives s_{nu/rho}, basis "e" gives
    s_{nu'/rho'}."""
    xs = x_interval(1, n)
    fn = h_pleth if basis == "h" else e_pleth
    matrix = [[fn(part(nu, i) - part(rho, j) - i + j, xs, n, deg)
               for j in range(1, rows + 1)] for i in range(1, rows + 1)]
    return det(matrix, n=n, deg=deg)


class SchurExpansion:
    """prefactor times sum of entries[(nu, rho)] * s, where s is s_{nu/rho}
    for h-kinds and s_{nu'/rho'} for e-kinds.  Keys are trailing-zero-free
    tuples; rho may have negative parts (G-kinds only)."""

    def __init__(self, kind, n, deg, rows, entries, prefactor):
        self.kind = kind
        self.n = n
        self.deg = deg
        self.rows = rows
        self.entries = entries
        self.prefactor = prefactor

    def total(self):
        basis = "h" if self.kind.endswith("_h") else "e"
        acc = TruncPoly.zero(self.n, self.deg)
        for (nu, rho), coef in self.entries.items():
            acc = acc + coef * gpar_schur(nu, rho, basis, self.rows,
                                          self.n, self.deg)
        return self.prefactor * acc


def _gen_nu_above(lam, budget, rows):
    out = []
    for extra in range(budget + 1):
        for nu in partitions_of(size(lam) + extra, max_len=rows):
            if contains(lam, nu):
                out.append(nu)
    return out


def _gen_rho_below(mu, budget, rows):
    """Weakly decreasing integer tuples of length rows, componentwise <= mu
    (zero padded) with total deficiency <= budget."""
    bar = [part(mu, i) for i in range(1, rows + 1)]
    out = []

    def rec(i, prev, rem, acc):
        if i == rows:
            out.append(tuple(acc))
            return
        hi = bar[i] if i == 0 else min(prev, bar[i])
        for v in range(bar[i] - rem, hi + 1):
            acc.append(v)
            rec(i + 1, v, rem - (bar[i] - v), acc)
            acc.pop()

    rec(0, 0, budget, [])
    return out


def skew_schur_expansion(outer, inner, kind, budget, n, deg):
    """Skew Schur expansion of the skew polynomial of the given kind.

    kind "G_h": G_{outer/inner} = C * sum C_{lam,nu} s_{nu/rho} C'_{rho,mu}
    kind "G_e": G_{outer'/inner'} = D * sum D_{lam,nu} s_{nu'/rho'} D'_{rho,mu}
    kind "g_h": g_{outer/inner} = sum c_{lam,nu} s_{nu/rho} c'_{rho,mu}
    kind "g_e": g_{outer'/inner'} = sum d_{lam,nu} s_{nu'/rho'} d'_{rho,mu}

    G-kinds run over nu >= outer with |nu/outer| <= budget and generalized
    rho <= inner with deficiency <= budget, so the multiplied-out total is
    exact to x-degree budget.  g-kinds are finite and exact.  The prefactors
    C = prod_{i<=rows}prod_{l<=n}(1 - b_i x_l) and the geometric series
    D = prod prod (1 - a_i x_l)^{-1} use the same row count as the entries.
    """
    lam, mu = partition(outer), partition(inner)
    if kind in ("G_h", "G_e"):
        rows = max(len(lam), len(mu)) + budget
        entries = {}
        if contains(mu, lam):
            left_rule = "C" if kind == "G_h" else "D"
            right_rule = "C'" if kind == "G_h" else "D'"
            rhos = [(rho, skew_coeff(right_rule, _strip(rho), mu, n, deg,
                                     rows=rows))
                    for rho in _gen_rho_below(mu, budget, rows)]
            rhos = [(rho, coef) for rho, coef in rhos if not coef.is_zero()]
            for nu in _gen_nu_above(lam, budget, rows):
                left = skew_coeff(left_rule, lam, nu, n, deg, rows=rows)
                if left.is_zero():
                    continue
                for rho, right in rhos:
                    entries[(nu, _strip(rho))] = left * right
        if kind == "G_h":
            pref = _one(n, deg)
            for i in range(1, rows + 1):
                for l in range(1, n + 1):
                    pref = pref * (_one(n, deg) - _pvar(n, deg, BETA, i)
                                   * _pvar(n, deg, X, l))
        else:
            pref = _geom_prefactor([(i, 1, n) for i in range(1, rows + 1)],
                                   n, deg)
        return SchurExpansion(kind, n, deg, rows, entries, pref)
    if kind in ("g_h", "g_e"):
        rows = max(len(lam), len(mu), 1)
        left_rule = "c" if kind == "g_h" else "d"
        right_rule = "c'" if kind == "g_h" else "d'"
        entries = {}
        for nu in partitions_between(mu, lam):
            left = skew_coeff(left_rule, lam, nu, n, deg, rows=rows)
            if left.is_zero():
                continue
            for rho in partitions_between(mu, nu):
                right = skew_coeff(right_rule, rho, mu, n, deg, rows=rows)
                if right.is_zero():
                    continue
                entries[(nu, rho)] = left * right
        return SchurExpansion(kind, n, deg, rows, entries, _one(n, deg))
    raise ShapeError(f"unknown expansion kind {kind!r}")


def dual_parameters(p):
    """Substitute alpha_i -> -beta_i and beta_i -> -alpha_i."""
    assignment = {}
    for mono in p.terms:
        for (fam, idx), _ in mono:
            if fam == ALPHA:
                assignment[(ALPHA, idx)] = -TruncPoly.var(p.n, p.deg,
                                                          BETA, idx)
            elif fam == BETA:
                assignment[(BETA, idx)] = -TruncPoly.var(p.n, p.deg,
                                                         ALPHA, idx)
    return p.specialize(assignment)


def omega_check(outer, inner, kind, budget, n, deg):
    """Entrywise omega involution test: the h-expansion of outer/inner at
    (a, b) must match the e-expansion data at (-b, -a) key by key, and the
    omega image of the h-prefactor (e-series to h-series swap) must equal
    the substituted e-prefactor."""
    if kind == "G":
        left = skew_schur_expansion(outer, inner, "G_h", budget, n, deg)
        right = skew_schur_expansion(outer, inner, "G_e", budget, n, deg)
    elif kind == "g":
        left = skew_schur_expansion(outer, inner, "g_h", budget, n, deg)
        right = skew_schur_expansion(outer, inner, "g_e", budget, n, deg)
    else:
        raise ShapeError(f"unknown kind {kind!r}")
    if set(left.entries) != set(right.entries):
        return False
    for key, coef in left.entries.items():
        if coef != dual_parameters(right.entries[key]):
            return False
    if kind == "g":
        return left.prefactor == right.prefactor
    omega_pref = _one(n, deg)
    xs = x_interval(1, n)
    for i in range(1, left.rows + 1):
        series = TruncPoly.zero(n, deg)
        for m in range(deg + 1):
            term = h_pleth(m, xs, n, deg)
            if term.is_zero():
                break
            series = series + ((-_pvar(n, deg, BETA, i)) ** m) * term
        omega_pref = omega_pref * series
    return omega_pref == dual_parameters(right.prefactor)
