from importlib import resources

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_code
from hullcodes import GF
from hullcodes import codes as cd
from hullcodes.cli import main
from hullcodes.errors import ParseError
from hullcodes.textio import (
    parse_code_text,
    parse_field_header,
    parse_vector,
    read_code,
    render_code_text,
    render_field_header,
    write_code,
)


def data(name):
    return str(resources.files("hullcodes") / "data" / name)


@pytest.fixture
def code_file(tmp_path):
    def make(text, name="c.code"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return make


# --- text format ----------------------------------------------------------------------

def test_header_round_trip():
    for q in (2, 3, 4, 8, 9, 16):
        f = GF(q)
        g = parse_field_header(render_field_header(f))
        assert (g.p, g.m, g.w.value) == (f.p, f.m, f.w.value)


def test_header_defaults_and_errors():
    assert parse_field_header("field p=2 m=3").q == 8
    assert parse_field_header("field p=5").q == 5  # m defaults to 1
    for bad in ["p=2 m=3", "field m=2", "field p=2 m=x", "field p=2 m=2 poly=1 0 1",
                "field p=2 m=2 color=3"]:
        with pytest.raises(ParseError):
            parse_field_header(bad)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3, 4, 8, 16]), st.integers(1, 7), st.integers(0, 2 ** 32 - 1))
def test_code_text_round_trip(q, n, seed):
    rng = np.random.default_rng(seed)
    C = random_code(rng, GF(q), n, int(rng.integers(1, n + 1)))
    back = parse_code_text(render_code_text(C))
    assert back == C and back.G == C.G


def test_comments_and_blank_lines():
    C = parse_code_text("# header comment\n\nfield p=2 m=2\n1 w w^2  # row one\n\n0 1 1\n")
    assert (C.n, C.k) == (3, 2)


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError, match="line 3"):
        parse_code_text("field p=2 m=2\n1 0 1\n1 x 1\n")
    with pytest.raises(ParseError, match="line 3"):
        parse_code_text("field p=2 m=2\n1 0 1\n1 1\n")
    with pytest.raises(ParseError):
        parse_code_text("")


def test_vectors():
    f = GF(8)
    assert parse_vector(f, "1, w, w^3") == parse_vector(f, "1 w w^3") == [1, 2, 3]


def test_file_round_trip(tmp_path):
    C = read_code(data("gf8-10-3-7.code"))
    write_code(C, tmp_path / "out.code")
    assert read_code(tmp_path / "out.code").G == C.G


# --- command line ---------------------------------------------------------------------

def test_hull_command(capsys):
    assert main(["hull", data("gf4-6-3-3.code")]) == 0
    out = capsys.readouterr().out
    assert "hull_dim: 1" in out and "d: 3" in out and "lcd: false" in out


def test_dual_and_distance(capsys, tmp_path):
    out_file = tmp_path / "dual.code"
    assert main(["dual", data("gf8-10-3-7.code"), "-o", str(out_file)]) == 0
    assert read_code(out_file).k == 7
    assert main(["distance", data("gf8-10-3-7.code")]) == 0
    assert "d: 7" in capsys.readouterr().out


def test_oracle_command(capsys):
    assert main(["oracle", data("gf4-6-3-3.code")]) == 0
    out = capsys.readouterr().out
    assert "orthogonal_codewords: 4 of 64" in out and "oracle_hull_dim: 1" in out


def test_scale_and_permute(capsys):
    assert main(["scale", data("gf4-4-2-2.code"), "--by", "w 1 1 1"]) == 0
    assert "hull_dim: 1" in capsys.readouterr().out
    assert main(["permute", data("gf4-6-3-3.code"), "--sigma", "2,1,3,4,5,6"]) == 0
    assert "hull_dim: 1" in capsys.readouterr().out
    assert main(["scale", data("gf4-4-2-2.code"), "--by", "0 1 1 1"]) == 2


def test_construct_success(capsys):
    assert main(["construct", "cor", data("gf4-4-2-2.code")]) == 0
    out = capsys.readouterr().out
    assert "verified_hull: 1" in out and "lambda: w" in out


def test_construct_con1(capsys, tmp_path, code_file):
    path = code_file("field p=2 m=2\n1 1 1\n")
    out_file = tmp_path / "ext.code"
    assert main(["construct", "con1", path, "--alpha", "w^2", "--row", "w 1 0",
                 "-o", str(out_file)]) == 0
    assert cd.hull(read_code(out_file)).dim == 1
    assert main(["construct", "con1", path, "--search", "--trials", "200"]) == 0
    assert main(["construct", "con1", path]) == 2


def test_construct_hypothesis_failure_exit_code(capsys):
    assert main(["construct", "thm31", data("gf8-10-3-7.code")]) == 2
    captured = capsys.readouterr()
    assert "P1 P2^T + a b^T = 0" in captured.err
    assert "hypothesis" in captured.out


def test_construct_sum_and_extend(capsys):
    assert main(["construct", "sum", data("gf4-sum-lcd-1.code"), data("gf4-sum-lcd-2.code")]) == 0
    assert main(["construct", "sum", data("gf4-sum-lcd-1.code")]) == 2
    assert main(["construct", "extend", data("gf8-5-2-4.code"), "--dual-word",
                 "0 0 1 w^5 w^5"]) == 0
    assert "verified_hull: 1" in capsys.readouterr().out
    assert main(["construct", "lemma3ab", data("gf4-6-3-3.code"), "--coord", "2",
                 "--value", "w"]) == 0


def test_parse_error_exit_code(code_file, capsys):
    assert main(["hull", code_file("field p=2 m=2\n1 q 1\n")]) == 3
    assert "line 2" in capsys.readouterr().err


def test_budget_exit_code(capsys):
    assert main(["--budget", "10", "distance", data("gf8-10-3-7.code")]) == 4
    assert main(["--budget", "10", "oracle", data("gf8-10-3-7.code")]) == 4


def test_rs_command(capsys):
    assert main(["rs", "8", "all", "3"]) == 0
    assert "[7,3,5]" in capsys.readouterr().out
    assert main(["rs", "8", "all", "8"]) == 2
    assert main(["rs", "6", "all", "2"]) == 2


def test_missing_file(capsys):
    assert main(["hull", "/nonexistent/file.code"]) == 1


def test_verify_examples_single(capsys):
    assert main(["verify-examples", "--only", "hull1-gf4-6-3"]) == 0
    assert "PASS  hull1-gf4-6-3" in capsys.readouterr().out


def test_verify_examples_reports_failures_honestly(capsys):
    code = main(["verify-examples"])
    out = capsys.readouterr().out
    assert "FAIL  lcd-gf8-10-3" in out
    assert code == 1
