import json
import re

from flagheight.cli import (
    EXIT_CAP,
    EXIT_MATH,
    EXIT_OK,
    EXIT_PARSE,
    main,
)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_height_p1(capsys):
    code, out, _ = run(capsys, "height", "--group", "A1",
                       "--theta", "", "--lambda", "1")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["height"] == {"num": "1", "den": "2"}
    assert doc["methods_agreed"] is True
    assert doc["dim"] == 1
    assert doc["cor82_ok"] is True


def test_height_quadric_b2(capsys):
    code, out, _ = run(capsys, "height", "--group", "B2",
                       "--theta", "2", "--lambda", "1,0", "--method", "all")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["height"] == {"num": "17", "den": "3"}
    assert doc["coxeter"] == 4


def test_json_schema_fields(capsys):
    _, out, _ = run(capsys, "height", "--group", "A2",
                    "--theta", "", "--lambda", "1,1")
    doc = json.loads(out)
    assert set(doc) == {"group", "theta", "lambda", "dim", "height",
                        "methods_agreed", "coxeter", "cor82_ok",
                        "conjecture_ok", "elapsed_ms"}


def test_deterministic_apart_from_elapsed(capsys):
    outs = []
    for _ in range(2):
        _, out, _ = run(capsys, "height", "--group", "B2",
                        "--theta", "", "--lambda", "2,1")
        outs.append(re.sub(r'"elapsed_ms": \d+', '"elapsed_ms": 0', out))
    assert outs[0] == outs[1]


def test_single_method(capsys):
    code, out, _ = run(capsys, "height", "--group", "A2", "--theta", "2",
                       "--lambda", "1,0", "--method", "substitution")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["height"] == {"num": "5", "den": "4"}
    assert doc["methods_agreed"] is None


def test_y_override(capsys):
    code, out, _ = run(capsys, "height", "--group", "A2", "--theta", "",
                       "--lambda", "1,1", "--method", "fixed-point",
                       "--y", "1,3")
    assert code == EXIT_OK
    base = run(capsys, "height", "--group", "A2", "--theta", "",
               "--lambda", "1,1", "--method", "substitution")[1]
    assert json.loads(out)["height"] == json.loads(base)["height"]


def test_bwb_singular_and_regular(capsys):
    code, out, _ = run(capsys, "bwb", "--group", "A1", "--lambda", "-1")
    assert code == EXIT_OK
    assert json.loads(out)["singular"] is True
    code, out, _ = run(capsys, "bwb", "--group", "A1", "--lambda", "-3")
    doc = json.loads(out)
    assert doc["degree"] == 1 and doc["lambda0"] == [1] and doc["dim"] == 2


def test_dim_and_char(capsys):
    _, out, _ = run(capsys, "dim", "--group", "G2", "--lambda", "0,1")
    assert json.loads(out)["dim"] == 14
    _, out, _ = run(capsys, "char", "--group", "A2", "--lambda", "1,1")
    doc = json.loads(out)
    assert doc["dim"] == 8
    assert {"weight": [0, 0], "mult": 2} in doc["weights"]


def test_jantzen_rhs(capsys):
    _, out, _ = run(capsys, "jantzen-rhs", "--group", "A1",
                    "--theta", "", "--lambda", "3")
    doc = json.loads(out)
    assert doc["lambda0_component_zero"] is True
    assert doc["primes"] == {"3": [{"weight": [-1], "coeff": 1},
                                   {"weight": [1], "coeff": 1}]}


def test_scan_csv(capsys):
    code, out, _ = run(capsys, "scan", "--group", "A2", "--output", "csv")
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert len(lines) == 3  # header + two maximal parabolics
    assert lines[0].startswith("group,")


def test_print_numbering(capsys):
    code, out, _ = run(capsys, "height", "--group", "B2", "--print-numbering")
    assert code == EXIT_OK
    assert "B2" in out


def test_parse_errors(capsys):
    assert run(capsys, "height", "--group", "Q9", "--theta", "",
               "--lambda", "1")[0] == EXIT_PARSE
    assert run(capsys, "height", "--group", "A1", "--theta", "",
               "--lambda", "x")[0] == EXIT_PARSE
    assert run(capsys, "height", "--group", "A1")[0] == EXIT_PARSE \
        or run(capsys, "height", "--group", "A1", "--theta", "",
               "--lambda", "")[0] == EXIT_MATH


def test_math_errors(capsys):
    # non-ample weight
    assert run(capsys, "height", "--group", "B2", "--theta", "1",
               "--lambda", "1,0")[0] == EXIT_MATH
    # wrong lambda length
    assert run(capsys, "height", "--group", "A2", "--theta", "",
               "--lambda", "1")[0] == EXIT_MATH
    # theta out of range
    assert run(capsys, "height", "--group", "A2", "--theta", "5",
               "--lambda", "1,1")[0] == EXIT_MATH


def test_cap_exceeded(capsys):
    code, _, err = run(capsys, "height", "--group", "E6", "--theta", "",
                       "--lambda", "1,1,1,1,1,1", "--cap", "100")
    assert code == EXIT_CAP
    assert "100" in err


def test_cache_dir_flag(tmp_path, capsys):
    code, out, _ = run(capsys, "height", "--group", "B2", "--theta", "",
                       "--lambda", "1,1", "--cache-dir", str(tmp_path))
    assert code == EXIT_OK
    assert list(tmp_path.iterdir())
    # second run hits the cache and agrees
    code2, out2, _ = run(capsys, "height", "--group", "B2", "--theta", "",
                         "--lambda", "1,1", "--cache-dir", str(tmp_path))
    assert json.loads(out)["height"] == json.loads(out2)["height"]


def test_env_cache_dir(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("FLAGHEIGHT_CACHE_DIR", str(tmp_path))
    code, _, _ = run(capsys, "height", "--group", "A2", "--theta", "",
                     "--lambda", "1,1")
    assert code == EXIT_OK
    assert list(tmp_path.iterdir())


def test_text_output(capsys):
    _, out, _ = run(capsys, "height", "--group", "A1", "--theta", "",
                    "--lambda", "1", "--output", "text")
    assert "1/2" in out
