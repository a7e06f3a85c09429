import json

import pytest
from hypothesis import given, settings, strategies as st

from alexideal.cli import main, run
from alexideal.dsl import DSLParseError, format_knot, load_knot, parse_knot, parse_presentation
from alexideal.fox import Presentation, Word, format_presentation
from alexideal.knots import catalog, twist_spin, two_bridge
from alexideal.zideal import parse_ideal

TREF_TEXT = "gens: x y ; rels: x y x y^-1 x^-1 y^-1 ;"
T2_TEXT = """\
# 2-twist spun trefoil
name: tau^2 3_1 ;
genus: 0 ;
gens: x y ;
rels: x y x y^-1 x^-1 y^-1 ,   # trefoil relator
      x^2 y x^-2 y^-1 ;
"""


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        path = tmp_path / f"{name}.knot"
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write


# -- DSL -----------------------------------------------------------------

def test_parse_trefoil():
    P = parse_presentation(TREF_TEXT)
    assert P.names == ("x", "y") and P.n_rels == 1
    assert format_presentation(P) == "gens: x y ;\nrels: x y x y^-1 x^-1 y^-1 ;\n"


def test_header_and_comments():
    kf = parse_knot(T2_TEXT)
    assert kf.name == "tau^2 3_1" and kf.genus == 0 and kf.presentation.n_rels == 2
    assert parse_knot("genus: classical ; " + TREF_TEXT).genus is None
    assert parse_knot("genus: 3 ; " + TREF_TEXT).genus == 3
    assert parse_knot(TREF_TEXT).genus == 0


def test_empty_word_and_missing_rels():
    P = parse_presentation("gens: x ; rels: 1 ;")
    assert P.relators == (Word(),)
    assert parse_presentation("gens: x ;").n_rels == 0
    assert parse_presentation("gens: x y ; rels: x y^-1").n_rels == 1


def test_weights():
    P = parse_presentation("gens: a b ; weights: 1 2 ; rels: a^2 b^-1 ;")
    assert P.weights == (1, 2)


@pytest.mark.parametrize("text, line, col, fragment", [
    ("gens: x y ;\nrels: x z ;", 2, 9, "unknown generator 'z'"),
    ("gens: x ;\nfoo: 1 ;", 2, 1, "unknown section 'foo'"),
    ("gens: x ; gens: y ;", 1, 11, "duplicate section 'gens'"),
    ("rels: x ; gens: x ;", 1, 1, "'rels' must come after 'gens'"),
    ("name: a ;", 1, 10, "missing 'gens'"),
    ("gens: x y ; weights: 1 ;", 1, 25, "one weight per generator"),
    ("gens: x y ;\nrels: x^ y ;", 2, 10, "expected an integer"),
    ("genus: often ; gens: x ;", 1, 8, "integer or 'classical'"),
    ("gens: x y\nrels: x ;", 2, 5, "expected an identifier"),
    ('name: "open ;\ngens: x ;', 1, 7, "unterminated string"),
])
def test_located_errors(text, line, col, fragment):
    with pytest.raises(DSLParseError) as exc:
        parse_knot(text)
    assert (exc.value.line, exc.value.col) == (line, col)
    assert fragment in exc.value.msg


def test_presentation_errors_point_at_rels():
    # x y has exponent sum 2, so it is not a valid knot relator
    with pytest.raises(DSLParseError) as exc:
        parse_knot("gens: x y ;\n\nrels: x y ;")
    assert (exc.value.line, exc.value.col) == (3, 1)


@pytest.mark.parametrize("K", catalog(), ids=lambda K: K.name)
def test_format_round_trip_on_catalog(K):
    text = format_knot(K)
    L = load_knot(text)
    assert (L.name, L.genus, L.presentation) == (K.name, K.genus, K.presentation)
    assert format_knot(L) == text


@settings(max_examples=100)
@given(st.text(st.characters(codec="utf-8", exclude_categories=("Cs", "Cc")), min_size=1, max_size=12))
def test_names_round_trip(name):
    K = load_knot("gens: x ;", name)
    assert load_knot(format_knot(K)).name == name


def test_names_with_separators_are_quoted():
    K = load_knot(TREF_TEXT, "realize(3; t+1)")
    assert format_knot(K).startswith('name: "realize(3; t+1)" ;')
    assert load_knot(format_knot(K)).name == "realize(3; t+1)"


words = st.lists(st.tuples(st.integers(0, 2), st.integers(-3, 3)), max_size=8).map(Word)


@settings(max_examples=60)
@given(st.lists(words, max_size=3))
def test_print_parse_is_identity(rels):
    rels = [w for w in rels if sum(e for _, e in w) == 0]
    P = Presentation(("x", "y", "z"), tuple(rels))
    text = format_presentation(P)
    assert parse_presentation(text) == P
    assert format_presentation(parse_presentation(text)) == text


# -- CLI -----------------------------------------------------------------

def test_ideal_command(files):
    assert run(["ideal", files("t2", T2_TEXT)]) == (0, "3; t+1\n", "")
    assert run(["ideal", "@" + TREF_TEXT]) == (0, "t^2-t+1\n", "")
    assert run(["ideal", "--elementary", "2", "@" + TREF_TEXT])[1] == "1\n"
    assert run(["ideal", "--elementary", "0", "@" + TREF_TEXT])[1] == "0\n"


def test_inline_with_literal_quotes():
    assert run(["det", '@"' + TREF_TEXT + '"'])[1] == "3\n"


def test_knot_and_twist_spin(files):
    code, out, _ = run(["knot", "two-bridge", "3", "1"])
    assert code == 0 and "genus: classical ;" in out
    path = files("b31", out)
    code, out, _ = run(["twist-spin", "-n", "2", path])
    assert code == 0 and "genus: 0 ;" in out
    assert parse_ideal(run(["ideal", "@" + out])[1]) == parse_ideal("3; t+1")
    # a genus-0 file is still read as the classical input of the twist spin
    assert run(["twist-spin", "-n", "5", "@" + TREF_TEXT])[0] == 0
    assert run(["knot", "two-bridge", "4", "1"])[0] == 1


def test_sum_and_realize():
    code, out, _ = run(["sum", "@" + T2_TEXT, "@" + TREF_TEXT])
    assert code == 0
    assert run(["ideal", "@" + out])[1] == run(["ideal", "@" + out])[1]
    code, out, _ = run(["realize", "--ideal", "3; t+1"])
    K = load_knot(out)
    assert code == 0 and K.genus == 2 and K.presentation.n_rels == 3
    assert K.alexander_ideal == parse_ideal("3; t+1")
    code, out, _ = run(["realize", "--poly", "2t-1"])
    assert code == 0 and load_knot(out).genus == 0
    assert run(["realize", "--poly", "t+1"])[0] == 1
    assert run(["realize", "--ideal", "2; t+1"])[0] == 1
    assert run(["realize", "--poly", "2t-1", "--ideal", "3; t+1"])[0] == 1


def test_det_and_colorings():
    assert run(["det", "@" + T2_TEXT]) == (0, "3\n", "")
    assert run(["colorings", "-p", "3", "@" + T2_TEXT]) == (0, "9\n", "")
    assert run(["colorings", "-p", "4", "@" + T2_TEXT])[0] == 1


def test_report_json():
    code, out, err = run(["report", "--json", "@" + T2_TEXT])
    assert code == 0 and err == ""
    assert '"ideal":["3","t+1"]' in out and '"determinant":3' in out and '"principal":false' in out
    d = json.loads(out)
    assert d["name"] == "tau^2 3_1" and d["conclusions"] == ["NotZeroSlice", "NotInvertible", "NotRibbon"]
    text = run(["report", "@" + T2_TEXT])[1]
    assert "conclusions: NotZeroSlice, NotInvertible, NotRibbon" in text


def test_compare_ribbon_basis_graph():
    t2 = "@" + T2_TEXT
    t3 = "@" + format_knot(twist_spin(two_bridge(9, 7, "6_1"), 2))
    assert run(["compare", t2, t3])[1] == "Distinguished: class (3; t+1) vs class (9; t+1)\n"
    assert run(["compare", t2, t2])[1] == "IdealsEquivalent\n"
    assert run(["ribbon-compatible", t2, t2])[1] == "Witness(1)\n"
    assert run(["ribbon-compatible", t2, t3])[1] == "Incompatible(IdealMismatch)\n"
    out = run(["basis", t2, "@" + format_knot(twist_spin(two_bridge(5, 1, "5_1"), 2))])[1]
    assert out.startswith("Certificate:") and "tau^2 5_1: (5; t+1)" in out
    assert run(["basis", t2, t2])[1] == "Failure(0, 1)\n"
    assert run(["graph", t2, t3]) == (0, "", "")
    dot = run(["graph", "--dot", t2, t3])[1]
    assert dot.startswith("digraph {") and "->" not in dot


def test_hilbert():
    assert run(["hilbert", "--ideal", "3; t+1", "--max-n", "3"]) == (0, "1 2 3 4\n", "")
    assert run(["hilbert", "--ideal", "t+1", "--max-n", "2"])[0] == 1


def test_parse_errors_exit_2(files):
    code, out, err = run(["ideal", "@gens: x y ; rels: x z ;"])
    assert (code, out) == (2, "")
    assert err == "<inline>:1:21: parse error: unknown generator 'z'\n"
    path = files("bad", "gens: x ;\n  bogus: 1 ;")
    code, _, err = run(["det", path])
    assert code == 2 and err.startswith(f"{path}:2:3: parse error")
    code, _, err = run(["hilbert", "--ideal", "3; t+", "--max-n", "1"])
    assert code == 2 and err.startswith("<ideal>:1:5: parse error")
    assert run(["realize", "--poly", "t^"])[0] == 2


def test_resource_bounds_exit_3():
    code, _, err = run(["hilbert", "--ideal", "101; t+1", "--max-n", "2"])
    assert code == 3 and err.startswith("resource bound exceeded: prime")
    # colorings are plain linear algebra mod p and carry no prime bound
    assert run(["colorings", "-p", "101", "@" + TREF_TEXT]) == (0, "101\n", "")
    names = " ".join(f"x{i}" for i in range(14))
    rels = " , ".join(f"x{i} x{i + 1}^-1" for i in range(13))
    code, _, err = run(["ideal", f"@gens: {names} ; rels: {rels} ;"])
    assert code == 3 and "matrix size" in err


def test_usage_errors_exit_1(tmp_path):
    assert run(["bogus"])[0] == 1
    assert run(["det", "--frobnicate", "@" + TREF_TEXT])[0] == 1
    assert run([])[0] == 1
    code, _, err = run(["det", str(tmp_path / "missing.knot")])
    assert code == 1 and "cannot read" in err


def test_output_is_byte_identical_across_runs():
    for argv in (["report", "--json", "@" + T2_TEXT], ["realize", "--ideal", "3; t+1"], ["graph", "--dot", "@" + T2_TEXT, "@" + TREF_TEXT]):
        assert len({run(argv) for _ in range(3)}) == 1


def test_main_writes_streams(capsys):
    assert main(["det", "@" + T2_TEXT]) == 0
    assert capsys.readouterr().out == "3\n"
    assert main(["det", "@gens: x ; rels: y ;"]) == 2
    captured = capsys.readouterr()
    assert captured.out == "" and "parse error" in captured.err
