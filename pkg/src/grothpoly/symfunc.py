"""Complete homogeneous and elementary symmetric polynomials, plethystic
evaluation over signed alphabets, the ominus operator, Schur functions, and
Schur-basis expansion of symmetric truncated polynomials.

An alphabet is a tuple of (sign, block) atoms.  Blocks:
    ("x", r, s)        x_r + ... + x_s
    ("ap", k)          alpha_1 + ... + alpha_k   (empty for k <= 0)
    ("bp", k)          beta_1 + ... + beta_k
    ("ai", p, q)       alpha_p + ... + alpha_q
    ("bi", p, q)       beta_p + ... + beta_q
    ("v", fam, idx)    a single variable
    ("m", mult, fam, idx)  mult >= 0 copies of a single variable
"""

import math

from .ring import ALPHA, BETA, X, TruncPoly
from .shapes import part


class SymmetryError(ValueError):
    pass


class ExpansionError(ValueError):
    pass


def x_interval(r, s):
    return ((1, ("x", r, s)),) if r <= s else ()


def a_prefix(k):
    return ((1, ("ap", k)),) if k > 0 else ()


def b_prefix(k):
    return ((1, ("bp", k)),) if k > 0 else ()


def single(fam, idx):
    return ((1, ("v", fam, idx)),)


def const_multiple(mult, fam, idx):
    if mult == 0:
        return ()
    if mult < 0:
        return ((-1, ("m", -mult, fam, idx)),)
    return ((1, ("m", mult, fam, idx)),)


def neg(alphabet):
    return tuple((-sign, block) for sign, block in alphabet)


def cat(*alphabets):
    out = []
    for z in alphabets:
        out.extend(z)
    return tuple(out)


def _block_vars(block, n, deg):
    kind = block[0]
    if kind == "x":
        # x variables beyond the context evaluate to zero
        _, r, s = block
        return [TruncPoly.var(n, deg, X, i)
                for i in range(max(r, 1), min(s, n) + 1)]
    if kind == "ap":
        return [TruncPoly.var(n, deg, ALPHA, i) for i in range(1, block[1] + 1)]
    if kind == "bp":
        return [TruncPoly.var(n, deg, BETA, i) for i in range(1, block[1] + 1)]
    if kind == "ai":
        _, p, q = block
        return [TruncPoly.var(n, deg, ALPHA, i) for i in range(p, q + 1)]
    if kind == "bi":
        _, p, q = block
        return [TruncPoly.var(n, deg, BETA, i) for i in range(p, q + 1)]
    if kind == "v":
        return [TruncPoly.var(n, deg, block[1], block[2])]
    raise ValueError(f"unknown block {block!r}")


def block_size(block):
    """Number of letters in the block (for e-vanishing bounds)."""
    kind = block[0]
    if kind == "x":
        return max(block[2] - block[1] + 1, 0)
    if kind in ("ap", "bp"):
        return max(block[1], 0)
    if kind in ("ai", "bi"):
        return max(block[2] - block[1] + 1, 0)
    if kind == "v":
        return 1
    if kind == "m":
        return block[1]
    raise ValueError(f"unknown block {block!r}")


def alphabet_size(alphabet):
    return sum(block_size(b) for _, b in alphabet)


def is_x_only(alphabet):
    return all(b[0] == "x" or (b[0] == "v" and b[1] == X)
               for _, b in alphabet)


def is_param_only(alphabet):
    return all(b[0] in ("ap", "bp", "ai", "bi")
               or (b[0] == "v" and b[1] != X)
               or (b[0] == "m" and b[2] != X)
               for _, b in alphabet)


_BLOCK_CACHE = {}


def h_block(m, block, n, deg):
    """h_m of a single positive block."""
    if m < 0:
        return TruncPoly.zero(n, deg)
    if m == 0:
        return TruncPoly.const(n, deg, 1)
    key = ("h", m, block, n, deg)
    got = _BLOCK_CACHE.get(key)
    if got is not None:
        return got
    if block[0] == "x" and m > deg:
        out = TruncPoly.zero(n, deg)
    elif block[0] == "m":
        _, mult, fam, idx = block
        c = math.comb(mult + m - 1, m)
        out = c * TruncPoly.var(n, deg, fam, idx) ** m
    else:
        variables = _block_vars(block, n, deg)
        table = [TruncPoly.const(n, deg, 1)] + \
            [TruncPoly.zero(n, deg) for _ in range(m)]
        for v in variables:
            for d in range(1, m + 1):
                table[d] = table[d] + v * table[d - 1]
        out = table[m]
    _BLOCK_CACHE[key] = out
    return out


def e_block(m, block, n, deg):
    """e_m of a single positive block."""
    if m < 0:
        return TruncPoly.zero(n, deg)
    if m == 0:
        return TruncPoly.const(n, deg, 1)
    if m > block_size(block):
        return TruncPoly.zero(n, deg)
    key = ("e", m, block, n, deg)
    got = _BLOCK_CACHE.get(key)
    if got is not None:
        return got
    if block[0] == "m":
        _, mult, fam, idx = block
        c = math.comb(mult, m)
        out = c * TruncPoly.var(n, deg, fam, idx) ** m
    else:
        variables = _block_vars(block, n, deg)
        table = [TruncPoly.const(n, deg, 1)] + \
            [TruncPoly.zero(n, deg) for _ in range(m)]
        for v in variables:
            for d in range(min(m, len(variables)), 0, -1):
                table[d] = table[d] + v * table[d - 1]
        out = table[m]
    _BLOCK_CACHE[key] = out
    return out


_ALPHABET_CACHE = {}


def h_pleth(m, alphabet, n, deg):
    """h_m[Z] for a signed alphabet Z; h_m[-Z] = (-1)^m e_m[Z] per block."""
    if m < 0:
        return TruncPoly.zero(n, deg)
    key = ("h", m, alphabet, n, deg)
    got = _ALPHABET_CACHE.get(key)
    if got is not None:
        return got
    cur = [TruncPoly.const(n, deg, 1)] + \
        [TruncPoly.zero(n, deg) for _ in range(m)]
    for sign, block in alphabet:
        if sign > 0:
            bvals = [h_block(k, block, n, deg) for k in range(m + 1)]
        else:
            bvals = [(-1) ** k * e_block(k, block, n, deg)
                     for k in range(m + 1)]
        nxt = []
        for d in range(m + 1):
            acc = TruncPoly.zero(n, deg)
            for k in range(d + 1):
                if not (bvals[k].is_zero() or cur[d - k].is_zero()):
                    acc = acc + cur[d - k] * bvals[k]
            nxt.append(acc)
        cur = nxt
    _ALPHABET_CACHE[key] = cur[m]
    return cur[m]


def e_pleth(m, alphabet, n, deg):
    """e_m[Z] for a signed alphabet Z; e_m[-Z] = (-1)^m h_m[Z] per block."""
    if m < 0:
        return TruncPoly.zero(n, deg)
    key = ("e", m, alphabet, n, deg)
    got = _ALPHABET_CACHE.get(key)
    if got is not None:
        return got
    cur = [TruncPoly.const(n, deg, 1)] + \
        [TruncPoly.zero(n, deg) for _ in range(m)]
    for sign, block in alphabet:
        if sign > 0:
            bvals = [e_block(k, block, n, deg) for k in range(m + 1)]
        else:
            bvals = [(-1) ** k * h_block(k, block, n, deg)
                     for k in range(m + 1)]
        nxt = []
        for d in range(m + 1):
            acc = TruncPoly.zero(n, deg)
            for k in range(d + 1):
                if not (bvals[k].is_zero() or cur[d - k].is_zero()):
                    acc = acc + cur[d - k] * bvals[k]
            nxt.append(acc)
        cur = nxt
    _ALPHABET_CACHE[key] = cur[m]
    return cur[m]


def _check_ominus(left, right):
    if not is_x_only(left):
        raise ValueError("ominus left argument must be x-blocks only")
    if not is_param_only(right):
        raise ValueError("ominus right argument must be parameter blocks only")


def h_ominus(m, left, right, n, deg):
    """h_m[left (-) right] = sum_k h_{m+k}[left] h_k[right].

    The sum stops at k = deg - m since h_{m+k}[left] is homogeneous of
    x-degree m + k.  m may be negative.
    """
    _check_ominus(left, right)
    acc = TruncPoly.zero(n, deg)
    for k in range(max(0, -m), deg - m + 1):
        lhs = h_pleth(m + k, left, n, deg)
        if lhs.is_zero():
            continue
        rhs = h_pleth(k, right, n, deg)
        if rhs.is_zero():
            continue
        acc = acc + lhs * rhs
    return acc


def e_ominus(m, left, right, n, deg):
    """e_m[left (-) right]; terminates because e_{m+k}[left] vanishes once
    m + k exceeds the number of letters in left."""
    _check_ominus(left, right)
    acc = TruncPoly.zero(n, deg)
    top = alphabet_size(left) - m
    for k in range(max(0, -m), top + 1):
        lhs = e_pleth(m + k, left, n, deg)
        if lhs.is_zero():
            continue
        rhs = e_pleth(k, right, n, deg)
        if rhs.is_zero():
            continue
        acc = acc + lhs * rhs
    return acc


def vandermonde(n, deg):
    out = TruncPoly.const(n, deg, 1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out = out * (TruncPoly.var(n, deg, X, i)
                         - TruncPoly.var(n, deg, X, j))
    return out


def schur_jt(outer, inner, n, deg, rows=None):
    """s_{outer/inner}(x_n) = det(h_{lam_i - mu_j - i + j}[X_n])."""
    from .ring import det
    if rows is None:
        rows = max(len(outer), len(inner))
    xs = x_interval(1, n)
    matrix = [[h_pleth(part(outer, i) - part(inner, j) - i + j, xs, n, deg)
               for j in range(1, rows + 1)] for i in range(1, rows + 1)]
    return det(matrix, n=n, deg=deg)


def schur_bialternant(lam, n, deg):
    """det(x_j^{lam_i + n - i}) / prod_{i<j}(x_i - x_j), computed with a
    guard of n(n-1)/2 extra x-degrees for the division."""
    from .ring import det, exact_divide
    guard = n * (n - 1) // 2
    gdeg = deg + guard
    matrix = [[TruncPoly.var(n, gdeg, X, j) ** (part(lam, i) + n - i)
               for j in range(1, n + 1)] for i in range(1, n + 1)]
    num = det(matrix, n=n, deg=gdeg)
    return exact_divide(num, vandermonde(n, gdeg), guard)


def schur_flagged_check(lam, n, deg):
    """det(h_{lam_i - i + j}[X_{n-j+1}]) must also give s_lam(x_n)."""
    from .ring import det
    matrix = [[h_pleth(part(lam, i) - i + j, x_interval(1, n - j + 1), n, deg)
               for j in range(1, n + 1)] for i in range(1, n + 1)]
    return det(matrix, n=n, deg=deg) == schur_jt(lam, (), n, deg, rows=n)


def _x_vector(mono, n):
    vec = [0] * n
    for (fam, idx), e in mono:
        if fam == X:
            vec[idx - 1] = e
    return tuple(vec)


def _param_part(mono):
    return tuple(v for v in mono if v[0][0] != X)


def schur_expand(p, max_degree=None):
    """Expand a symmetric truncated polynomial in Schur polynomials by
    peeling the graded-lex dominant x-monomial; returns {partition: coeff}
    with parameter-only coefficient polynomials."""
    n, deg = p.n, p.deg
    if max_degree is None:
        max_degree = deg
    for i in range(1, n):
        if p.swap_x(i, i + 1) != p:
            raise SymmetryError(f"not symmetric under x{i} <-> x{i + 1}")
    work = TruncPoly(n, deg, {m: c for m, c in p.terms.items()
                              if sum(_x_vector(m, n)) <= max_degree})
    result = {}
    guard = 0
    while not work.is_zero():
        guard += 1
        if guard > 100000:
            raise ExpansionError("expansion did not terminate")
        dom = max(work.terms, key=lambda m: (sum(_x_vector(m, n)),
                                             _x_vector(m, n)))
        vec = _x_vector(dom, n)
        mu = tuple(v for v in vec if v)
        if any(vec[i] < vec[i + 1] for i in range(n - 1)):
            raise ExpansionError(f"dominant x-part {vec} is not a partition")
        coeff_terms = {}
        for mono, c in work.terms.items():
            if _x_vector(mono, n) == vec:
                coeff_terms[_param_part(mono)] = c
        coeff = TruncPoly(n, deg, coeff_terms)
        result[mu] = result.get(mu, TruncPoly.zero(n, deg)) + coeff
        work = work - coeff * schur_jt(mu, (), n, deg)
    return {mu: c for mu, c in result.items() if not c.is_zero()}


def product_circ_check(lam, mu, n, deg):
    """s_lam(x_n) s_mu(x_n) = s_{lam o mu}(x_n)."""
    from .shapes import circ
    outer, inner = circ(lam, mu, n)
    lhs = schur_jt(lam, (), n, deg) * schur_jt(mu, (), n, deg)
    return lhs == schur_jt(outer, inner, n, deg)
