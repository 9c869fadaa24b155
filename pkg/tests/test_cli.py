import io
import json
import subprocess
import sys

import pytest

from cauchon.cli import main
from cauchon.lusztig import canonical_order
from cauchon.serialize import implication_from_dict, order_from_dict


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_roots_text_g2():
    code, text = run("roots", "G2")
    rows = text.strip().splitlines()[1:]
    assert code == 0 and len(rows) == 6
    assert rows[3].split()[5] == "5/2"


def test_roots_json_f4():
    code, text = run("roots", "F4", "--format", "json")
    doc = json.loads(text)
    assert code == 0
    assert set(doc) == {"type", "rank", "good_numbering", "word", "roots", "implications"}
    assert len(doc["roots"]) == 24
    assert doc["roots"][16]["pos"] == 17 and doc["roots"][16]["lheight"] == "11/2"
    assert set(doc["roots"][0]) == {"pos", "coeffs", "column", "box", "height", "lheight", "assoc_simple"}


def test_roots_a1():
    code, text = run("roots", "A1")
    assert code == 0 and len(text.strip().splitlines()) == 2


@pytest.mark.parametrize("t", ["G2", "D5", "F4", "E8"])
def test_json_round_trip(t):
    _, text = run("roots", t, "--format", "json")
    doc = json.loads(text)
    order = order_from_dict(doc)
    assert order == canonical_order(t)
    _, again = run("roots", t, "--format", "json")
    assert again == text
    imps = [implication_from_dict(d) for d in doc["implications"]]
    assert len(imps) == len(doc["implications"])


def test_word():
    assert run("word", "G2") == (0, "1 2 1 2 1 2\n")


def test_count_e8():
    assert run("count", "E8") == (0, "696729600\n")


def test_count_per_start_f4():
    code, text = run("count", "F4", "--per-start", "--column", "4")
    lines = text.splitlines()
    assert code == 0
    assert "16: 3" in lines and "none: 1" in lines and lines[-1] == "total: 24"


def test_count_per_column():
    code, text = run("count", "F4", "--per-column")
    assert text.splitlines() == ["column 1: 2", "column 2: 3", "column 3: 8", "column 4: 24", "1152"]


def test_implications_formats():
    code, text = run("implications", "G2")
    assert code == 0 and "6 -> 5" in text.splitlines()
    code, dot = run("implications", "E8", "--column", "8", "--format", "dot")
    assert code == 0 and "dashed" in dot
    code, js = run("implications", "E8", "--column", "8", "--format", "json")
    kinds = {d["kind"] for d in json.loads(js)["implications"]}
    assert kinds == {"arrow", "choice"}
    code, text = run("implications", "E8", "--column", "8")
    assert "92 => 89 or 90" in text.splitlines()


def test_planes():
    code, text = run("planes", "G2")
    assert code == 0 and "G2FULL" in text
    code, js = run("planes", "C3", "--format", "json")
    assert any(p["type"] == "T12" for p in json.loads(js))


def test_enumerate():
    code, text = run("enumerate", "A2")
    assert code == 0 and len(text.splitlines()) == 6 and "{}" in text.splitlines()
    code, js = run("enumerate", "G2", "--format", "json")
    assert len(json.loads(js)) == 12
    code, text = run("enumerate", "E8", "--limit", "3")
    assert code == 0 and len(text.splitlines()) == 3


def test_size_limit_exit_code():
    code, _ = run("enumerate", "E8")
    assert code == 3


def test_usage_errors():
    assert run("count", "X9")[0] == 2
    assert run("count", "B1")[0] == 2
    assert run("count", "F4", "--column", "7")[0] == 2
    assert run("verify", "E8", "--oracle")[0] == 2
    assert run()[0] == 2


def test_verify():
    code, text = run("verify", "G2", "--bijection")
    assert code == 0 and text.startswith("PASS")
    code, text = run("verify", "D4", "--invariants", "--oracle")
    assert code == 0 and "FAIL" not in text
    assert run("verify", "F4") == run("verify", "F4")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cauchon", "count", "G2"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and proc.stdout == "12\n"
