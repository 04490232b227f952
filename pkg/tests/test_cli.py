from __future__ import annotations

import json

import pytest
from hypothesis import given, settings, strategies as st

from grothpoly import cli
from grothpoly.grothendieck import G_flagged_det, G_jt, g_jt
from grothpoly.ring import ALPHA, BETA, X, TruncPoly
from grothpoly.symfunc import schur_jt


def run(argv):
    return cli.run(argv)


def test_compute_g_one_box_exact_text():
    status, out = run(["compute", "G", "--shape", "1", "--n", "2",
                       "--deg", "2"])
    assert status == 0
    assert out == "(x1+x2) + a1*(x1^2+x1*x2+x2^2) - b1*x1*x2"


def test_compute_schur_empty_shape():
    status, out = run(["compute", "s", "--shape", "0", "--n", "1"])
    assert status == 0
    assert out == "1"


def test_compute_matches_library():
    status, out = run(["compute", "g", "--shape", "2,1", "--n", "2",
                       "--deg", "4"])
    assert status == 0
    assert out == cli.render_poly(g_jt((2, 1), 2, 4))
    status, out = run(["compute", "G", "--shape", "2,1", "--inner", "1",
                       "--n", "2", "--deg", "3", "--flags-r", "1,2",
                       "--flags-s", "2,2"])
    assert status == 0
    want = G_flagged_det((2, 1), (1,), (1, 2), (2, 2), "row", 2, 3)
    assert out == cli.render_poly(want)


def test_compute_specialization_recovers_schur():
    plain = run(["compute", "s", "--shape", "2,1", "--n", "2", "--deg", "3"])
    subbed = run(["compute", "G", "--shape", "2,1", "--n", "2", "--deg", "3",
                  "--spec", "a=0,b=0"])
    assert plain == subbed
    status, out = run(["compute", "G", "--shape", "1", "--n", "1",
                       "--deg", "2", "--spec", "a1=1,b1=0"])
    assert status == 0
    assert out == "(x1+x1^2)"


def test_output_is_byte_stable():
    argv = ["compute", "g", "--shape", "2,2", "--n", "3", "--deg", "4"]
    first = run(argv)
    assert first == run(argv)


def test_latex_format():
    status, out = run(["compute", "G", "--shape", "1", "--n", "2",
                       "--deg", "2", "--format", "latex"])
    assert status == 0
    assert out == ("(x_{1}+x_{2}) + \\alpha_{1} "
                   "(x_{1}^{2}+x_{1} x_{2}+x_{2}^{2}) - \\beta_{1} "
                   "x_{1} x_{2}")


def test_json_round_trip():
    for p in [G_jt((2, 1), 3, 4), g_jt((2, 2), 2, 5),
              schur_jt((1,), (), 2, 3), TruncPoly.zero(2, 3)]:
        blob = cli.render_poly(p, "json-like")
        data = json.loads(blob)
        assert data["schema"] == cli.SCHEMA
        assert cli.parse_records(blob) == p
        assert cli.parse_records(data) == p


def test_parse_records_rejects_unknown_schema():
    from grothpoly.shapes import ShapeError
    with pytest.raises(ShapeError):
        cli.parse_records({"schema": "something-else", "n": 1, "deg": 0,
                           "terms": []})


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.sampled_from([X, ALPHA, BETA]),
                          st.integers(1, 2), st.integers(1, 2),
                          st.integers(-3, 3)),
                max_size=4))
def test_round_trip_random_polynomials(spec):
    n, deg = 2, 4
    p = TruncPoly.zero(n, deg)
    for fam, idx, exp, coeff in spec:
        p = p + coeff * TruncPoly.var(n, deg, fam, idx) ** exp
    assert cli.parse_records(cli.render_poly(p, "json-like")) == p


def test_render_zero_and_constants():
    assert cli.render_poly(TruncPoly.zero(1, 0)) == "0"
    assert cli.render_poly(TruncPoly.const(1, 0, 1)) == "1"
    assert cli.render_poly(TruncPoly.const(1, 0, -7)) == "-7"


def test_render_folds_negative_groups():
    n, deg = 2, 3
    x1 = TruncPoly.var(n, deg, X, 1)
    x2 = TruncPoly.var(n, deg, X, 2)
    b1 = TruncPoly.var(n, deg, BETA, 1)
    assert cli.render_poly(x1 + x2 - b1 * x1 * x2) == "(x1+x2) - b1*x1*x2"
    assert cli.render_poly(-b1 * (x1 + x2)) == "-b1*(x1+x2)"


def test_enumerate_multiset_tableaux_grid():
    status, out = run(["enumerate", "G", "--shape", "2", "--n", "1",
                       "--deg", "3"])
    assert status == 0
    assert out == "1 1\n\n11  1\n\n 1 11\n\ntotal: 3"


def test_enumerate_marks_use_trailing_asterisk():
    # left variant: the left cell of an equal horizontal pair may be marked
    status, out = run(["enumerate", "g", "--shape", "2", "--n", "1"])
    assert status == 0
    assert out == "1 1\n\n1*  1\n\ntotal: 2"


def test_enumerate_respects_flags():
    unflagged = run(["enumerate", "matsumura", "--shape", "2", "--n", "2",
                     "--deg", "4"])
    flagged = run(["enumerate", "matsumura", "--shape", "2", "--n", "2",
                   "--deg", "4", "--flags-s", "1"])
    assert unflagged[0] == flagged[0] == 0
    assert unflagged[1].endswith("total: 5")
    assert flagged[1].endswith("total: 1")


def test_expand_one_box():
    status, out = run(["expand", "G", "--shape", "1", "--budget", "1"])
    assert status == 0
    assert out == "s[1]: 1\ns[2]: a1\ns[1,1]: -b1"
    status, out = run(["expand", "g", "--shape", "2"])
    assert status == 0
    assert out == "s[1]: -a1\ns[2]: 1"


def test_coeff_hall_is_delta():
    assert run(["coeff", "hall", "--shape", "2,1", "--inner", "2,1"]) \
        == (0, "1")
    assert run(["coeff", "hall", "--shape", "2,1", "--inner", "3"]) == (0, "0")
    assert run(["coeff", "C", "--shape", "1", "--inner", "2"]) == (0, "a1")
    assert run(["coeff", "c", "--shape", "2", "--inner", "1"]) == (0, "-a1")
    assert run(["coeff", "c", "--shape", "2,1", "--inner", "2"]) == (0, "b1")


def test_verify_exit_codes():
    status, out = run(["verify", "duality", "--max-size", "2"])
    assert status == 0
    assert "pairs equal delta" in out


def test_verify_failure_exits_one(monkeypatch):
    monkeypatch.setattr(cli, "verify_duality",
                        lambda max_size: (False, ["FAIL duality"]))
    status, out = run(["verify", "duality"])
    assert status == 1
    assert "FAIL" in out


def test_usage_errors_exit_two():
    status, out = run(["compute", "G", "--shape", "2,1", "--n", "1",
                       "--deg", "3"])
    assert status == 2
    assert "rows" in out
    status, _ = run(["compute", "G", "--shape", "nope", "--n", "1"])
    assert status == 2
    status, _ = run(["compute", "G", "--shape", "1", "--n", "1",
                     "--spec", "q=3"])
    assert status == 2
    status, _ = run(["unknown-verb"])
    assert status == 2


def test_low_degree_warning_on_stderr(capsys):
    status, _ = run(["compute", "G", "--shape", "3", "--n", "1", "--deg", "1"])
    assert status == 0
    assert "truncated" in capsys.readouterr().err


def test_mark_set_rejected_for_G():
    status, out = run(["compute", "G", "--shape", "1,2", "--n", "2",
                       "--mark-set", "1"])
    assert status == 2
    assert "dual" in out
