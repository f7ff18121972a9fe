import io as stdio
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

import bckcodes as bc
from bckcodes import io
from bckcodes.cli import main
import reference_data as rd

ALG4_TEXT = "4\n0 0 0 0\n1 0 0 1\n2 1 0 2\n3 3 3 0\n"


def _write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


# ---------------------------------------------------------------- file formats


def test_parse_algebra_accepts_comments_and_blanks():
    text = "# cayley table\n\n4\n# rows follow\n0 0 0 0\n1 0 0 1\n2 1 0 2\n3 3 3 0\n"
    assert io.parse_algebra(text).table == rd.ALG4_COMMUTATIVE


def test_render_algebra_roundtrip(alg4_commutative):
    rendered = io.render_algebra(alg4_commutative, header="anything")
    assert io.parse_algebra(rendered) == alg4_commutative


@given(st.integers(1, 5).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(
            st.lists(st.integers(0, n - 1), min_size=n, max_size=n),
            min_size=n,
            max_size=n,
        ),
    )
))
def test_algebra_roundtrip_any_table(case):
    n, rows = case
    alg = bc.CayleyAlgebra(tuple(tuple(r) for r in rows))
    assert io.parse_algebra(io.render_algebra(alg)) == alg


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("", "no data lines"),
        ("abc\n", "expected the order"),
        ("0\n", "order must be positive"),
        ("2\n0 0\n", "expected 2 table rows"),
        ("2\n0 0\n1 0 0\n", "line 3: expected 2 entries"),
        ("2\n0 0\n1 x\n", "line 3: table entries must be integers"),
        ("2\n0 0\n1 5\n", "line 3: table entry outside 0..1"),
    ],
)
def test_parse_algebra_errors(text, fragment):
    with pytest.raises(bc.ParseError) as exc:
        io.parse_algebra(text)
    assert fragment in str(exc.value)


def test_parse_code_roundtrip():
    text = "# four words\n1111\n\n0110\n0010\n0001\n"
    code = io.parse_code(text)
    assert code.strings() == rd.CODE4
    assert io.parse_code(io.render_code(code, header="x")) == code


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("", "no codewords"),
        ("10a\n", "line 1: codeword may only contain 0 and 1"),
        ("11\n101\n", "line 2: codeword length 3 differs"),
        ("11\n11\n", "line 2: duplicate codeword"),
    ],
)
def test_parse_code_errors(text, fragment):
    with pytest.raises(bc.ParseError) as exc:
        io.parse_code(text)
    assert fragment in str(exc.value)


def test_parse_function(alg4_commutative):
    fn = io.parse_function("# f\na 0\nb 3\n", alg4_commutative)
    assert fn.domain == ("a", "b")
    assert fn.values == (0, 3)


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("", "no entries"),
        ("a\n", "expected 'label value'"),
        ("a x\n", "value must be an integer"),
        ("a 9\n", "value 9 outside 0..3"),
        ("a 0\na 1\n", "duplicate label 'a'"),
    ],
)
def test_parse_function_errors(text, fragment, alg4_commutative):
    with pytest.raises(bc.ParseError) as exc:
        io.parse_function(text, alg4_commutative)
    assert fragment in str(exc.value)


def test_report_roundtrip():
    rendered = io.render_report("verify", {"bck": True})
    data = io.parse_report(rendered)
    assert data["kind"] == "verify"
    assert data["bck"] is True
    assert data["report_version"] == 1


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("not json", "invalid JSON report"),
        ("[1, 2]", "report must be a JSON object"),
        ('{"report_version": 2}', "unsupported report_version 2"),
    ],
)
def test_parse_report_errors(text, fragment):
    with pytest.raises(bc.ParseError) as exc:
        io.parse_report(text)
    assert fragment in str(exc.value)


# ------------------------------------------------------------------------ CLI


def test_cli_verify_text(tmp_path, capsys):
    path = _write(tmp_path, "alg.txt", ALG4_TEXT)
    assert main(["verify", path]) == 0
    out = capsys.readouterr().out
    assert "order: 4" in out
    assert out.count("holds") == 5
    assert "bck: yes" in out
    assert "commutative: yes" in out
    assert "implicative: no" in out
    assert "order pairs: 0<=1 0<=2 0<=3 1<=2" in out


def test_cli_verify_json(tmp_path, capsys):
    path = _write(tmp_path, "alg.txt", ALG4_TEXT)
    assert main(["verify", path, "--json"]) == 0
    data = io.parse_report(capsys.readouterr().out)
    assert data["kind"] == "verify"
    assert data["bck"] is True and data["bci"] is True
    assert [c["axiom"] for c in data["axioms"]] == [1, 2, 3, 4, 5]
    assert all(c["holds"] for c in data["axioms"])
    assert data["order_pairs"] == [list(p) for p in rd.ORDER4_PAIRS]
    assert data["commutative"]["holds"] is True
    assert data["implicative"]["holds"] is False


def test_cli_verify_failure_exits_1(tmp_path, capsys):
    path = _write(tmp_path, "bad.txt", "2\n0 0\n1 1\n")
    assert main(["verify", path]) == 1
    out = capsys.readouterr().out
    assert "axiom 3 [x*x = 0]: fails at x=1" in out
    assert "bck: no" in out


def test_cli_verify_stdin(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", stdio.StringIO(ALG4_TEXT))
    assert main(["verify", "-"]) == 0
    assert "bck: yes" in capsys.readouterr().out


def test_cli_verify_parse_error_exits_2(tmp_path, capsys):
    path = _write(tmp_path, "alg.txt", "2\n0 0\n")
    assert main(["verify", path]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_cli_missing_file_exits_2(tmp_path, capsys):
    assert main(["verify", str(tmp_path / "nope.txt")]) == 2
    assert "cannot read" in capsys.readouterr().err


def test_cli_encode_identity(tmp_path, capsys):
    path = _write(tmp_path, "alg.txt", ALG4_TEXT)
    assert main(["encode", path]) == 0
    code = io.parse_code(capsys.readouterr().out)
    assert code.strings() == rd.CODE4


def test_cli_encode_with_function(tmp_path, capsys, alg4_commutative):
    alg_path = _write(tmp_path, "alg.txt", ALG4_TEXT)
    fn_path = _write(tmp_path, "fn.txt", "p 1\nq 3\n")
    assert main(["encode", alg_path, "--function", fn_path, "--json"]) == 0
    data = io.parse_report(capsys.readouterr().out)
    fn = bc.BckFunction(("p", "q"), alg4_commutative, (1, 3))
    assert data["domain"] == ["p", "q"]
    assert data["words"] == list(bc.generate_code(fn).strings())


def test_cli_encode_rejects_non_bck(tmp_path, capsys):
    path = _write(tmp_path, "bad.txt", "2\n0 1\n1 0\n")
    assert main(["encode", path]) == 1
    assert "not a BCK-algebra" in capsys.readouterr().err


def test_cli_construct_exact(tmp_path, capsys):
    path = _write(tmp_path, "code.txt", "\n".join(rd.CODE4) + "\n")
    assert main(["construct", path]) == 0
    out = capsys.readouterr().out
    assert "# roundtrip: exact" in out
    assert io.parse_algebra(out).table == rd.ALG4_FROM_CODE


def test_cli_construct_json(tmp_path, capsys):
    path = _write(tmp_path, "code.txt", "\n".join(rd.CODE4) + "\n")
    assert main(["construct", path, "--json"]) == 0
    data = io.parse_report(capsys.readouterr().out)
    assert data["table"] == [list(r) for r in rd.ALG4_FROM_CODE]
    assert data["roundtrip"]["exact"] is True
    assert data["roundtrip"]["self_describing"] is True
    assert data["names"] == ["w1", "w2", "w3", "w4"]


def test_cli_construct_inexact(tmp_path, capsys):
    path = _write(
        tmp_path, "code.txt", "\n".join(rd.ROUNDTRIP_COUNTEREXAMPLE) + "\n"
    )
    assert main(["construct", path]) == 1
    out = capsys.readouterr().out
    assert "# roundtrip: inexact" in out

    assert main(["construct", path, "--lax"]) == 0
    captured = capsys.readouterr()
    assert "warning: round trip is inexact" in captured.err


def test_cli_construct_rejects_non_member(tmp_path, capsys):
    path = _write(tmp_path, "code.txt", "10\n01\n")
    assert main(["construct", path]) == 2
    assert "not a triangular-family code" in capsys.readouterr().err


def test_cli_lift_text(tmp_path, capsys):
    path = _write(tmp_path, "code.txt", "\n".join(rd.LIFT_INPUT) + "\n")
    assert main(["lift", path]) == 0
    out = capsys.readouterr().out
    words = [l for l in out.splitlines() if l and not l.startswith("#")]
    assert tuple(words) == rd.LIFT_OUTPUT
    assert "# columns: 0->5 1->6 2->7 3->8 4->9" in out


def test_cli_lift_json(tmp_path, capsys):
    path = _write(tmp_path, "code.txt", "\n".join(rd.LIFT_INPUT) + "\n")
    assert main(["lift", path, "--json"]) == 0
    data = io.parse_report(capsys.readouterr().out)
    assert data["ambient_order"] == 10
    assert data["ambient_matrix"] == list(rd.LIFT_COMPLETED)
    assert data["column_map"] == list(rd.LIFT_COLUMN_MAP)
    assert data["lifted"] == list(rd.LIFT_OUTPUT)
    assert data["source"] == list(rd.LIFT_INPUT_SORTED)


def test_cli_enumerate_codes(capsys):
    assert main(["enumerate", "--order", "4", "--codes"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "count: 8"
    assert len(lines) == 9
    assert all(len(line.split()) == 4 for line in lines[1:])


def test_cli_enumerate_algebras(capsys):
    assert main(["enumerate", "--order", "3", "--algebras"]) == 0
    out = capsys.readouterr().out
    assert "tables: 5" in out
    assert "iso classes: 3" in out
    assert "bound check: pass" in out


def test_cli_enumerate_algebras_json(capsys):
    assert main(["enumerate", "--order", "3", "--algebras", "--json"]) == 0
    data = io.parse_report(capsys.readouterr().out)
    assert data["total_tables"] == 5
    assert data["iso_classes"] == 3
    assert sum(c["size"] for c in data["classes"]) == 5


def test_cli_enumerate_family_json(capsys):
    assert main(["enumerate", "--order", "3", "--family", "--json"]) == 0
    data = io.parse_report(capsys.readouterr().out)
    assert data["table"] == [[0, 0], [1, 0]]
    assert data["code"] == list(rd.CHAIN2_CODE)


def test_cli_enumerate_order_6_needs_explicit_cap(capsys):
    assert main(["enumerate", "--order", "6", "--algebras"]) == 2
    assert "--max-order 6" in capsys.readouterr().err


def test_cli_enumerate_codes_out_of_range(capsys):
    assert main(["enumerate", "--order", "9", "--codes"]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_cli_requires_a_mode():
    with pytest.raises(SystemExit):
        main(["enumerate", "--order", "3"])


def test_cli_json_is_valid_json(tmp_path, capsys):
    path = _write(tmp_path, "alg.txt", ALG4_TEXT)
    main(["verify", path, "--json"])
    json.loads(capsys.readouterr().out)
