"""Command-line front end: compute polynomials, expand them in the Schur
basis, query coefficients, run verification suites, and stream tableaux.

Output is byte-stable: monomials are grouped by their parameter part
(ascending parameter degree, then variable order a1 < a2 < ... < b1 < ...),
and x-monomials inside a group are printed by ascending total degree with
lexicographic ties (x1^2 before x1*x2 before x2^2).  Signs are folded into
the leading connector when a whole group is negative.

Exit codes: 0 success, 1 verification failure, 2 usage or argument error,
3 internal inconsistency (two formulas that must agree disagreed).
"""

import argparse
import itertools
import json
import sys
import warnings

from .grothendieck import (C_coeff, FlagSweep, G_bialternant, G_flagged_det,
                           G_jt, G_jt_modified, c_coeff, cauchy_check,
                           g_bialternant, g_flagged_det, g_jt, g_jt_modified,
                           g_marked_det, hall_pairing, matsumura_det,
                           omega_check, schur_in_grothendieck,
                           skew_schur_expansion, valid_mark_sets)
from .lgv import nonintersecting_coeff
from .ring import (ALPHA, BETA, FAMILY_NAMES, X, DivisibilityError,
                   InternalCheckError, TruncPoly)
from .shapes import (INF, ShapeError, conjugate, contains, dent_index, part,
                     partition, partitions_between, partitions_of,
                     partitions_up_to, size)
from .symfunc import schur_jt
from .tableaux import (enum_elegant, enum_fsvt, enum_mmsvt, enum_mrpp,
                       gen_fsvt, gen_mmsvt, gen_mrpp)

SCHEMA = "grothpoly-terms-1"

FAMILY_CODES = {name: fam for fam, name in FAMILY_NAMES.items()}

LATEX_NAMES = {X: "x", ALPHA: "\\alpha", BETA: "\\beta"}


# ---------------------------------------------------------------------------
# rendering

def _mono_split(mono):
    xs = tuple(p for p in mono if p[0][0] == X)
    ps = tuple(p for p in mono if p[0][0] != X)
    return xs, ps


def _xmono_key(xs, n):
    vec = [0] * n
    for (_, idx), e in xs:
        vec[idx - 1] = e
    return (sum(vec), tuple(-e for e in vec))


def _pmono_key(ps):
    return (sum(e for _, e in ps), ps)


def _render_vars(pairs, fmt):
    if not pairs:
        return "1"
    out = []
    for (fam, idx), e in pairs:
        if fmt == "latex":
            body = f"{LATEX_NAMES[fam]}_{{{idx}}}"
            if e > 1:
                body += f"^{{{e}}}"
        else:
            body = f"{FAMILY_NAMES[fam]}{idx}"
            if e > 1:
                body += f"^{e}"
        out.append(body)
    return ("*" if fmt == "text" else " ").join(out)


def poly_records(p):
    """Structured form: terms as (coefficient, exponent-vector) records."""
    order = []
    for mono, c in p.terms.items():
        xs, ps = _mono_split(mono)
        order.append((_xmono_key(xs, p.n)[0], _pmono_key(ps)[0], mono, c))
    order.sort()
    terms = [{"coeff": c,
              "powers": [[FAMILY_NAMES[fam], idx, e] for (fam, idx), e in mono]}
             for _, _, mono, c in order]
    return {"schema": SCHEMA, "n": p.n, "deg": p.deg, "terms": terms}


def parse_records(data):
    """Inverse of poly_records; accepts the JSON text or the parsed dict."""
    if isinstance(data, str):
        data = json.loads(data)
    if data.get("schema") != SCHEMA:
        raise ShapeError(f"unknown schema {data.get('schema')!r}")
    terms = {}
    for rec in data["terms"]:
        mono = tuple(sorted(((FAMILY_CODES[name], idx), e)
                            for name, idx, e in rec["powers"]))
        terms[mono] = rec["coeff"]
    return TruncPoly(data["n"], data["deg"], terms)


def render_poly(p, fmt="text"):
    if fmt == "json-like":
        return json.dumps(poly_records(p))
    if not p.terms:
        return "0"
    mult = "*" if fmt == "text" else " "
    groups = {}
    for mono, c in p.terms.items():
        xs, ps = _mono_split(mono)
        groups.setdefault(ps, {})[xs] = c
    out = []
    for ps in sorted(groups, key=_pmono_key):
        terms = sorted(groups[ps].items(),
                       key=lambda item: _xmono_key(item[0], p.n))
        negative = all(c < 0 for _, c in terms)
        if negative:
            terms = [(xs, -c) for xs, c in terms]
        pstr = _render_vars(ps, fmt) if ps else ""
        if len(terms) == 1:
            xs, c = terms[0]
            body = _render_vars(xs, fmt)
            pieces = [] if c == 1 else [str(c)]
            if pstr:
                pieces.append(pstr)
            if body != "1":
                pieces.append(body)
            group = mult.join(pieces) if pieces else "1"
        else:
            rendered = []
            for xs, c in terms:
                body = _render_vars(xs, fmt)
                if body == "1":
                    rendered.append(str(c))
                elif c == 1:
                    rendered.append(body)
                elif c == -1:
                    rendered.append("-" + body)
                else:
                    rendered.append(f"{c}{mult}{body}")
            inner = "+".join(rendered).replace("+-", "-")
            group = f"{pstr}{mult}({inner})" if pstr else f"({inner})"
        sign = "-" if negative else "+"
        if not out:
            out.append(("-" if negative else "") + group)
        else:
            out.append(f" {sign} {group}")
    return "".join(out)


# ---------------------------------------------------------------------------
# argument helpers

def _parse_mark_set(text):
    text = text.strip()
    if text in ("", "0", "none"):
        return frozenset()
    try:
        return frozenset(int(tok) for tok in text.split(","))
    except ValueError:
        raise ShapeError(f"bad mark set {text!r}") from None


def _parse_spec(text):
    """Tokens like "a=0", "b=1", "a2=-1": whole-family or single-variable
    integer substitutions for the parameter alphabets."""
    rules = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        name, _, value = tok.partition("=")
        name = name.strip()
        try:
            value = int(value)
        except ValueError:
            raise ShapeError(f"bad substitution value in {tok!r}") from None
        if name in ("a", "b"):
            rules.append((FAMILY_CODES[name], None, value))
        elif name[:1] in ("a", "b") and name[1:].isdigit():
            rules.append((FAMILY_CODES[name[0]], int(name[1:]), value))
        else:
            raise ShapeError(f"bad substitution target in {tok!r}")
    return rules


def _apply_spec(p, rules):
    if not rules:
        return p
    assignment = {}
    seen = {var for mono in p.terms for var, _ in mono}
    for fam, idx, value in rules:
        if idx is not None:
            assignment[(fam, idx)] = value
        else:
            for vfam, vidx in seen:
                if vfam == fam:
                    assignment[(vfam, vidx)] = value
    return p.specialize(assignment)


def _parse_shape(text):
    """Comma-separated parts; trailing zeros dropped.  Dented near-partitions
    are accepted here so the marked determinant stays reachable; ordinary
    commands validate partition order downstream."""
    text = text.strip()
    if text in ("", "0"):
        return ()
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ShapeError(f"bad shape {text!r}") from None
    if any(v < 0 for v in parts):
        raise ShapeError(f"negative part in {text!r}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def _get_shapes(args):
    outer = _parse_shape(args.shape)
    inner = _parse_shape(args.inner) if args.inner else ()
    return outer, inner


def _parse_flag_list(text, length, fill):
    if text is None:
        return (fill,) * length
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        out.append(INF if tok in ("inf", "oo") else int(tok))
    return tuple(out)


def _default_deg(args, outer, inner):
    if args.deg is not None:
        return args.deg
    return max(sum(outer) - sum(inner), 0)


def _require_rows(n, outer):
    if n < len(outer):
        raise ShapeError(f"n = {n} is below the {len(outer)} rows "
                         f"of {tuple(outer)}; pass a larger --n")


def _warn_degree(deg, outer, inner):
    want = sum(outer) - sum(inner)
    if deg < want:
        print(f"warning: --deg {deg} is below the cell count {want}; "
              "top-degree terms are truncated", file=sys.stderr)


# ---------------------------------------------------------------------------
# compute / expand / coeff / enumerate

def cmd_compute(args):
    outer, inner = _get_shapes(args)
    n = args.n
    deg = _default_deg(args, outer, inner)
    _require_rows(n, outer)
    _warn_degree(deg, outer, inner)
    if args.target == "s":
        value = schur_jt(outer, inner, n, deg)
    else:
        flagged = (args.flags_r is not None or args.flags_s is not None
                   or inner or args.mark_set is not None)
        if not flagged:
            value = G_jt(outer, n, deg) if args.target == "G" \
                else g_jt(outer, n, deg)
        else:
            m = max(len(outer), len(inner), 1)
            r = _parse_flag_list(args.flags_r, m, 1)
            s = _parse_flag_list(args.flags_s, m, n)
            s = tuple(n if v == INF else v for v in s)
            if args.mark_set is not None:
                if args.target != "g":
                    raise ShapeError("mark sets apply to the dual family only")
                value = g_marked_det(tuple(outer), inner, r, s,
                                     _parse_mark_set(args.mark_set), n, deg)
            elif args.target == "G":
                value = G_flagged_det(outer, inner, r, s,
                                      args.orientation, n, deg)
            else:
                value = g_flagged_det(outer, inner, r, s,
                                      args.orientation, n, deg)
    value = _apply_spec(value, _parse_spec(args.spec or ""))
    return render_poly(value, args.format), 0


def _shape_label(nu, rho=()):
    nu_txt = ",".join(str(v) for v in nu) or "0"
    if not rho:
        return f"s[{nu_txt}]"
    rho_txt = ",".join(str(v) for v in rho)
    return f"s[{nu_txt}/{rho_txt}]"


def cmd_expand(args):
    outer, inner = _get_shapes(args)
    n = args.n
    deg = _default_deg(args, outer, inner)
    budget = args.budget if args.budget is not None else deg
    lines = []
    if args.target == "s":
        lam = partition(outer)
        lines.append(f"in G basis (sizes up to {size(lam) + budget}):")
        table = schur_in_grothendieck(lam, "G", size(lam) + budget, n, deg)
        for mu in sorted(table):
            lines.append(f"  G[{','.join(map(str, mu)) or '0'}]: "
                         f"{render_poly(table[mu], args.format)}")
        lines.append("in g basis:")
        table = schur_in_grothendieck(lam, "g", size(lam), n, deg)
        for mu in sorted(table):
            lines.append(f"  g[{','.join(map(str, mu)) or '0'}]: "
                         f"{render_poly(table[mu], args.format)}")
        return "\n".join(lines), 0
    if inner:
        kind = "G_h" if args.target == "G" else "g_h"
        expansion = skew_schur_expansion(outer, inner, kind, budget, n, deg)
        lines.append(f"prefactor: {render_poly(expansion.prefactor, args.format)}")
        for nu, rho in sorted(expansion.entries):
            coef = expansion.entries[(nu, rho)]
            lines.append(f"{_shape_label(nu, rho)}: "
                         f"{render_poly(coef, args.format)}")
        return "\n".join(lines), 0
    lam = partition(outer)
    if args.target == "G":
        for k in range(size(lam), size(lam) + budget + 1):
            for mu in partitions_of(k):
                if contains(lam, mu):
                    coef = C_coeff(lam, mu, n, deg)
                    if not coef.is_zero():
                        lines.append(f"{_shape_label(mu)}: "
                                     f"{render_poly(coef, args.format)}")
    else:
        for mu in partitions_between((), lam):
            coef = c_coeff(lam, mu, n, deg)
            if not coef.is_zero():
                lines.append(f"{_shape_label(mu)}: "
                             f"{render_poly(coef, args.format)}")
    return "\n".join(lines), 0


def cmd_coeff(args):
    outer, inner = _get_shapes(args)
    n, deg = args.n, args.deg
    if args.target == "C":
        value = C_coeff(outer, inner, n, deg)
    elif args.target == "c":
        value = c_coeff(outer, inner, n, deg)
    else:
        value = hall_pairing(outer, inner, n, deg)
    value = _apply_spec(value, _parse_spec(args.spec or ""))
    return render_poly(value, args.format), 0


def _grid_lines(outer, inner, cells_text):
    width = max((len(t) for t in cells_text.values()), default=1)
    lines = []
    for i in range(1, len(outer) + 1):
        row = []
        for j in range(1, part(outer, i) + 1):
            txt = cells_text.get((i, j), ".")
            row.append(txt.rjust(width))
        lines.append(" ".join(row).rstrip())
    return lines


def cmd_enumerate(args):
    outer, inner = _get_shapes(args)
    n = args.n
    deg = args.deg if args.deg is not None else \
        size(partition(outer)) - size(partition(inner)) + 2
    m = max(len(tuple(outer)), len(partition(inner)), 1)
    blocks = []
    if args.target == "G":
        flags = None
        if args.flags_r is not None or args.flags_s is not None:
            flags = (_parse_flag_list(args.flags_r, m, 1),
                     _parse_flag_list(args.flags_s, m, INF))
        for filling in gen_mmsvt(outer, inner, n, deg, flags=flags,
                                 orientation=args.orientation):
            text = {cell: "".join(str(v) + ("*" if marked else "")
                                  for v, marked in elems)
                    for cell, elems in filling.items()}
            blocks.append(_grid_lines(partition(outer), partition(inner),
                                      text))
    elif args.target == "g":
        flags = None
        if args.flags_r is not None or args.flags_s is not None:
            flags = (_parse_flag_list(args.flags_r, m, 1),
                     _parse_flag_list(args.flags_s, m, INF))
        mark_set = _parse_mark_set(args.mark_set) \
            if args.mark_set is not None else None
        for filling in gen_mrpp(outer, inner, n, variant=args.variant,
                                flags=flags, orientation=args.orientation,
                                mark_set=mark_set):
            text = {cell: str(v) + ("*" if marked else "")
                    for cell, (v, marked) in filling.items()}
            blocks.append(_grid_lines(tuple(outer), partition(inner), text))
    elif args.target == "matsumura":
        f = _parse_flag_list(args.flags_s, m, n)
        g = _parse_flag_list(args.flags_r, m, 1)
        for filling in gen_fsvt(outer, inner, f, g, n, deg):
            text = {cell: "".join(str(v) for v in st)
                    for cell, st in filling.items()}
            blocks.append(_grid_lines(partition(outer), partition(inner),
                                      text))
    else:
        raise ShapeError(f"cannot enumerate target {args.target!r}")
    out = []
    for block in blocks:
        out.extend(block or ["(empty shape)"])
        out.append("")
    out.append(f"total: {len(blocks)}")
    return "\n".join(out), 0


# ---------------------------------------------------------------------------
# verification suites (shared with the acceptance tests)

def verify_duality(max_size=4, n=1, deg=0):
    """<G_lam, g_mu> = delta, both as the coefficient sum and the closed
    determinant (the two are compared inside hall_pairing)."""
    shapes = list(partitions_up_to(max_size))
    checked = 0
    for lam in shapes:
        for mu in shapes:
            value = hall_pairing(lam, mu, n, deg)
            want = TruncPoly.const(n, deg, 1 if lam == mu else 0)
            if value != want:
                return False, [f"FAIL duality at lam={lam}, mu={mu}: "
                               f"got {render_poly(value)}"]
            checked += 1
    return True, [f"duality: {checked} pairs equal delta"]


_FIVE_WAY_LABELS = ("bialternant", "jacobi-trudi", "modified jacobi-trudi",
                    "flagged determinant", "tableau enumeration")


def five_way(kind, lam, n, deg):
    """The five equivalent evaluations of G or g for a shape fitting in n
    rows, in the order of _FIVE_WAY_LABELS."""
    lam = partition(lam)
    m = max(len(lam), 1)
    r, s = (1,) * m, (n,) * m
    if kind == "G":
        return [G_bialternant(lam, n, deg), G_jt(lam, n, deg),
                G_jt_modified(lam, n, deg),
                G_flagged_det(lam, (), r, s, "row", n, deg),
                enum_mmsvt(lam, (), n, deg)]
    return [g_bialternant(lam, n, deg), g_jt(lam, n, deg),
            g_jt_modified(lam, n, deg),
            g_flagged_det(lam, (), r, s, "row", n, deg),
            enum_mrpp(lam, (), n, deg)]


def verify_concordance(kind, max_size=4, deg=6, ns=(1, 2, 3)):
    """Bialternant = Jacobi-Trudi = modified = flagged (r=1, s=n) = tableau
    enumeration, for every shape with at most max_size cells fitting in n
    rows."""
    checked = 0
    for n in ns:
        for k in range(max_size + 1):
            for lam in partitions_of(k, max_len=n):
                values = five_way(kind, lam, n, deg)
                for label, value in zip(_FIVE_WAY_LABELS[1:], values[1:]):
                    if value != values[0]:
                        return False, [
                            f"FAIL {kind} concordance at lam={lam}, n={n}: "
                            f"{label} differs from bialternant"]
                checked += 1
    return True, [f"{kind} concordance: {checked} shapes agree five ways"]


def verify_coefficients(kind, max_size=5, n=1, deg=0):
    """Determinant = tableau enumeration = lattice-path sum, plus the
    nonnegativity of the sign-adjusted specialization."""
    checked = 0
    for big in partitions_up_to(max_size):
        for small in partitions_between((), big):
            if kind == "C":
                det_value = C_coeff(small, big, n, deg)
                tab = enum_elegant(big, small, n, deg, "inelegant", "C")
                paths = nonintersecting_coeff(small, big, "C", n, deg)
                flip, flip_fam = det_value, BETA
            else:
                det_value = c_coeff(big, small, n, deg)
                tab = enum_elegant(big, small, n, deg, "elegant", "c")
                paths = nonintersecting_coeff(big, small, "c", n, deg)
                flip, flip_fam = det_value, ALPHA
            if not (det_value == tab == paths):
                return False, [f"FAIL {kind} at lam={small}, mu={big}: "
                               "determinant, tableaux and paths disagree"]
            assignment = {var: -TruncPoly.var(n, deg, *var)
                          for mono in flip.terms for var, _ in mono
                          if var[0] == flip_fam}
            signed = flip.specialize(assignment)
            if any(c < 0 for c in signed.terms.values()):
                return False, [f"FAIL {kind} positivity at lam={small}, "
                               f"mu={big}"]
            checked += 1
    return True, [f"{kind}: {checked} pairs agree three ways and the "
                  "sign-adjusted values are nonnegative"]


def verify_cauchy(budget=3):
    if cauchy_check(2, 2, budget):
        return True, [f"cauchy: kernel matches the G*g sum to bidegree "
                      f"{budget}"]
    return False, ["FAIL cauchy: kernel and G*g sum differ"]


def verify_omega(max_outer=4, max_inner=2, budget=2, n=2, deg=2):
    checked = 0
    for lam in partitions_up_to(max_outer):
        for mu in partitions_up_to(max_inner):
            if not contains(mu, lam):
                continue
            for kind in ("G", "g"):
                if not omega_check(lam, mu, kind, budget, n, deg):
                    return False, [f"FAIL omega for {kind} at lam={lam}, "
                                   f"mu={mu}"]
                checked += 1
    return True, [f"omega: {checked} expansion-level involution checks pass"]


def _collapse_to_single_beta(p, sign):
    assignment = {}
    for mono in p.terms:
        for (fam, idx), _ in mono:
            if fam == ALPHA:
                assignment[(fam, idx)] = 0
            elif fam == BETA:
                assignment[(fam, idx)] = sign * TruncPoly.var(p.n, p.deg,
                                                              BETA, 1)
    return p.specialize(assignment)


def verify_matsumura(max_outer=6, flag_max=3, n=3):
    """Set-valued enumeration = single-beta determinant on every skew shape
    with at most 3 cells, and exactly one sign of the collapsed flagged
    determinant reproduces it; the surviving convention is reported."""
    checked = 0
    minus_ok = plus_ok = True
    for lam in partitions_up_to(max_outer):
        if len(lam) > n:
            continue
        for mu in partitions_between((), lam):
            if not 0 < size(lam) - size(mu) <= 3:
                continue
            m = len(lam)
            deg = size(lam) - size(mu) + 2
            for f in itertools.product(range(1, flag_max + 1), repeat=m):
                for g in itertools.product(range(1, flag_max + 1), repeat=m):
                    if any(gi > fi for gi, fi in zip(g, f)):
                        continue
                    single = matsumura_det(lam, mu, f, g, n, deg)
                    if single != enum_fsvt(lam, mu, f, g, n, deg):
                        return False, [f"FAIL matsumura at {lam}/{mu}, "
                                       f"f={f}, g={g}: determinant differs "
                                       "from the enumeration"]
                    with warnings.catch_warnings():
                        warnings.simplefilter("ignore")
                        flagged = G_flagged_det(lam, mu, g, f, "row", n, deg)
                    if single != _collapse_to_single_beta(flagged, -1):
                        minus_ok = False
                    if single != _collapse_to_single_beta(flagged, +1):
                        plus_ok = False
                    checked += 1
    if minus_ok == plus_ok:
        return False, [f"FAIL matsumura: expected exactly one sign "
                       f"convention to survive, got minus={minus_ok}, "
                       f"plus={plus_ok}"]
    sign = "b = (-beta, -beta, ...)" if minus_ok else "b = (beta, beta, ...)"
    return True, [f"matsumura: {checked} flagged shapes match the set-valued "
                  f"enumeration; surviving convention: {sign}"]


def _row_monotone(lam, mu, r, s):
    for i in range(1, len(r)):
        if part(mu, i) < part(lam, i + 1):
            if r[i - 1] > r[i] or s[i - 1] > s[i]:
                return False
    return True


def _col_monotone(lam, mu, r, s, slack=0):
    for i in range(1, len(r)):
        if part(mu, i) < part(lam, i + 1):
            if r[i - 1] - part(mu, i) > r[i] - part(mu, i + 1) + slack:
                return False
            if s[i - 1] - part(lam, i) > s[i] - part(lam, i + 1) + 1:
                return False
    return True


def _dented_shapes(max_size, max_len):
    out = []
    for length in range(1, max_len + 1):
        for lam in itertools.product(range(1, max_size + 1), repeat=length):
            if sum(lam) <= max_size and dent_index(lam) is not None:
                out.append(lam)
    return out


def verify_flagged(max_size=4, flag_max=3, ns=(1, 2, 3), marked_n=2,
                   crosscheck_every=97):
    """Flagged determinants against tableau enumerations on every flag pair
    satisfying the respective monotonicity hypotheses.

    Values depend on the flags only through (min(r_i, n+1), min(s_i, n)), so
    each equivalence class is checked once; a sample of raw flag vectors is
    re-evaluated through the plain determinant functions as a cross-check.
    The weakened lower-flag condition for column-flagged G (one extra unit of
    slack) is evaluated and reported, never asserted.
    """
    counts = {"row G": 0, "col G": 0, "row dual": 0, "col dual": 0,
              "dual without containment": 0, "marked dual": 0,
              "marked dual on properly dented shapes": 0}
    crosschecked = 0
    weak_agree = weak_differ = 0
    tick = 0
    for n in ns:
        for lam in partitions_up_to(max_size):
            deg = size(lam) + 2
            for mu in partitions_up_to(max_size):
                contained = contains(mu, lam)
                m = max(len(lam), len(mu), 1)
                space = list(itertools.product(range(1, flag_max + 1),
                                               repeat=m))
                if contained:
                    keys = [("row G", "G", "row"), ("col G", "G", "col"),
                            ("row dual", "g", "row"),
                            ("col dual", "g", "col")]
                else:
                    keys = [("row dual", "g", "row"),
                            ("col dual", "g", "col")]
                sweeps = {key: FlagSweep(kind, lam, mu, orientation, n, deg)
                          for key, kind, orientation in keys}
                seen = {key: set() for key in sweeps}
                seen["weak col G"] = set()
                zero = TruncPoly.zero(n, deg)
                for r in space:
                    for s in space:
                        eff = (tuple(min(v, n + 1) for v in r),
                               tuple(min(v, n) for v in s))
                        row_ok = _row_monotone(lam, mu, r, s)
                        col_ok = contained and _col_monotone(lam, mu, r, s)
                        jobs = []
                        if row_ok:
                            jobs += [("row dual", "row", True),
                                     ("col dual", "col", True)]
                            if contained:
                                jobs.append(("row G", "row", False))
                        if col_ok:
                            jobs.append(("col G", "col", False))
                        for key, orientation, dual in jobs:
                            if eff in seen[key]:
                                continue
                            seen[key].add(eff)
                            value = sweeps[key].value(r, s)
                            if not contained:
                                reference = zero
                            elif orientation == "row":
                                reference = (enum_mrpp if dual else
                                             enum_mmsvt)(
                                    lam, mu, n, deg, flags=(r, s),
                                    orientation="row")
                            else:
                                reference = (enum_mrpp if dual else
                                             enum_mmsvt)(
                                    conjugate(lam), conjugate(mu), n, deg,
                                    flags=(r, s), orientation="col")
                            if value != reference:
                                return False, [
                                    f"FAIL {key} at lam={lam}, mu={mu}, "
                                    f"n={n}, r={r}, s={s}"]
                            if contained:
                                counts[key] += 1
                            else:
                                counts["dual without containment"] += 1
                            tick += 1
                            if tick % crosscheck_every == 0:
                                with warnings.catch_warnings():
                                    warnings.simplefilter("ignore")
                                    direct = (g_flagged_det if dual else
                                              G_flagged_det)(
                                        lam, mu, r, s, orientation, n, deg)
                                if direct != value:
                                    return False, [
                                        f"FAIL cross-check {key} at "
                                        f"lam={lam}, mu={mu}, n={n}, "
                                        f"r={r}, s={s}"]
                                crosschecked += 1
                        if (contained and not col_ok
                                and _col_monotone(lam, mu, r, s, slack=1)
                                and eff not in seen["weak col G"]):
                            seen["weak col G"].add(eff)
                            value = sweeps["col G"].value(r, s)
                            reference = enum_mmsvt(
                                conjugate(lam), conjugate(mu), n, deg,
                                flags=(r, s), orientation="col")
                            if value == reference:
                                weak_agree += 1
                            else:
                                weak_differ += 1
    # boundary-marked duals; dented shapes included
    n = marked_n
    for lam in _dented_shapes(max_size, 3):
        deg = sum(lam) + 2
        m = len(lam)
        dented = dent_index(lam) is not None and dent_index(lam) > 1
        space = list(itertools.product(range(1, flag_max + 1), repeat=m))
        mus = [mu for mu in partitions_up_to(sum(lam))
               if len(mu) <= m and contains(mu, lam)]
        for mu in mus:
            for mark_set in valid_mark_sets(lam):
                for r in space:
                    for s in space:
                        if not _row_monotone(lam, mu, r, s):
                            continue
                        with warnings.catch_warnings():
                            warnings.simplefilter("ignore")
                            value = g_marked_det(lam, mu, r, s, mark_set,
                                                 n, deg)
                        reference = enum_mrpp(lam, mu, n, deg,
                                              flags=(r, s),
                                              mark_set=mark_set)
                        if value != reference:
                            return False, [
                                f"FAIL marked dual at lam={lam}, mu={mu}, "
                                f"I={sorted(mark_set)}, r={r}, s={s}"]
                        counts["marked dual"] += 1
                        if dented:
                            counts["marked dual on properly dented "
                                   "shapes"] += 1
    lines = [f"{key}: {count} flagged identities hold"
             for key, count in counts.items()]
    lines.append(f"cross-checked {crosschecked} raw flag vectors against "
                 "the direct determinants")
    lines.append(f"weakened col G condition (reported, not asserted): "
                 f"{weak_agree} extra flag pairs agree, {weak_differ} "
                 "differ")
    return True, lines


VERIFY_SUITES = ("duality", "hall", "G", "g", "C", "c", "cauchy", "omega",
                 "matsumura", "flagged")


def cmd_verify(args):
    max_size = args.max_size
    suite = args.target
    if suite in ("duality", "hall"):
        ok, lines = verify_duality(max_size=max_size)
    elif suite in ("G", "g"):
        deg = args.deg if args.deg is not None else 6
        ok, lines = verify_concordance(suite, max_size=max_size, deg=deg)
    elif suite in ("C", "c"):
        ok, lines = verify_coefficients(suite, max_size=max_size)
    elif suite == "cauchy":
        ok, lines = verify_cauchy(budget=args.budget
                                  if args.budget is not None else 3)
    elif suite == "omega":
        ok, lines = verify_omega(max_outer=max_size,
                                 budget=args.budget
                                 if args.budget is not None else 2)
    elif suite == "matsumura":
        ok, lines = verify_matsumura(max_outer=max_size)
    else:
        ok, lines = verify_flagged(max_size=max_size)
    return "\n".join(lines), 0 if ok else 1


# ---------------------------------------------------------------------------
# parser

def _add_common(p, need_n=True):
    p.add_argument("--shape", required=True,
                   help="outer shape as comma-separated parts; 0 for empty")
    p.add_argument("--inner", default="",
                   help="inner shape for skew computations (default empty)")
    if need_n:
        p.add_argument("--n", type=int, required=True,
                       help="number of x variables; must cover the shape rows")
    p.add_argument("--deg", type=int, default=None,
                   help="x-degree truncation (default: cell count)")
    p.add_argument("--format", choices=["text", "latex", "json-like"],
                   default="text", help="output format (default text)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="grothpoly",
        description="Exact refined Grothendieck polynomial calculator: "
                    "compute, expand, verify, and enumerate.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("compute",
                       help="evaluate a polynomial and print it")
    p.add_argument("target", choices=["G", "g", "s"],
                   help="G, dual g, or Schur s")
    _add_common(p)
    p.add_argument("--flags-r", default=None,
                   help="lower flags, e.g. 1,1,2 (default all 1)")
    p.add_argument("--flags-s", default=None,
                   help="upper flags, e.g. 2,3,inf (default all n)")
    p.add_argument("--orientation", choices=["row", "col"], default="row",
                   help="flag orientation (default row)")
    p.add_argument("--mark-set", default=None,
                   help="boundary mark rows for the marked dual determinant")
    p.add_argument("--spec", default=None,
                   help="parameter substitutions, e.g. a=0,b=1")

    p = sub.add_parser("expand", help="Schur-basis expansions")
    p.add_argument("target", choices=["G", "g", "s"],
                   help="expand G or g in Schur terms, or s in the G/g bases")
    _add_common(p, need_n=False)
    p.add_argument("--n", type=int, default=1,
                   help="variable count for coefficient contexts (default 1)")
    p.add_argument("--budget", type=int, default=None,
                   help="extra size allowed above |shape| (default --deg)")

    p = sub.add_parser("coeff", help="single expansion coefficients")
    p.add_argument("target", choices=["C", "c", "hall"],
                   help="Schur coefficient of G (C), of g (c), or the "
                        "pairing <G,g>")
    p.add_argument("--shape", required=True,
                   help="first index (the G/g shape)")
    p.add_argument("--inner", required=True,
                   help="second index (the Schur or pairing shape)")
    p.add_argument("--n", type=int, default=1,
                   help="variable context; the value has no x part")
    p.add_argument("--deg", type=int, default=0,
                   help="x-degree truncation (default 0)")
    p.add_argument("--format", choices=["text", "latex", "json-like"],
                   default="text")
    p.add_argument("--spec", default=None,
                   help="parameter substitutions, e.g. a=0,b=1")

    p = sub.add_parser("verify", help="verification suites")
    p.add_argument("target", choices=list(VERIFY_SUITES),
                   help="which identity family to check")
    p.add_argument("--max-size", type=int, default=4,
                   help="largest shape size swept (default 4)")
    p.add_argument("--budget", type=int, default=None,
                   help="series budget where applicable (default per suite)")
    p.add_argument("--deg", type=int, default=None,
                   help="x-degree for the concordance suites (default 6)")

    p = sub.add_parser("enumerate",
                       help="stream tableaux as text grids, one per block; "
                            "marks print as a trailing asterisk")
    p.add_argument("target", choices=["G", "g", "matsumura"],
                   help="multiset tableaux for G, marked reverse plane "
                        "partitions for g, set-valued fillings for matsumura")
    _add_common(p)
    p.add_argument("--flags-r", default=None, help="lower flags")
    p.add_argument("--flags-s", default=None, help="upper flags")
    p.add_argument("--orientation", choices=["row", "col"], default="row")
    p.add_argument("--variant", choices=["left", "right", "bottom"],
                   default="left", help="marking rule for the dual family")
    p.add_argument("--mark-set", default=None,
                   help="boundary mark rows (dual family only)")
    return parser


DISPATCH = {"compute": cmd_compute, "expand": cmd_expand, "coeff": cmd_coeff,
            "verify": cmd_verify, "enumerate": cmd_enumerate}


def run(argv):
    """Parse and execute; returns (exit status, output text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (0 if exc.code in (0, None) else 2), ""
    try:
        out, status = DISPATCH[args.verb](args)
    except (InternalCheckError, DivisibilityError) as exc:
        return 3, f"internal inconsistency: {exc}"
    except (ShapeError, ValueError) as exc:
        return 2, f"error: {exc}"
    return status, out


def main() -> None:
    status, out = run(sys.argv[1:])
    if out:
        print(out)
    sys.exit(status)


if __name__ == "__main__":
    main()
