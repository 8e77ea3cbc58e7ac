import re
import subprocess
import sys

import pytest

from xmodcoh.catalog import by_name
from xmodcoh.cli import ParseError, document_from_xmod, emit, parse, run
from xmodcoh.grp import automorphisms, homomorphisms
from xmodcoh.xmod import CrossedModule

TRIVIAL_DOC = """cmx 1
[gamma]
order 1
table
0
[group F]
order 1
table
0
[group G]
order 1
table
0
[boundary]
0
[action G F]
0
[action gamma F]
0
[action gamma G]
0
"""


def _write(tmp_path, name, text):
    p = tmp_path / f"{name}.cmx"
    p.write_text(text, encoding="utf-8")
    return str(p)


def _fixture(tmp_path, name):
    return _write(tmp_path, name, emit(document_from_xmod(by_name(name).cm)))


def _cm1_mutant():
    cm = by_name("q8_to_inn").cm
    F, V = cm.F.group, cm.G.group
    A, perms = automorphisms(F)
    d = cm.boundary.map
    for h in homomorphisms(V, A):
        gact = tuple(perms[a] for a in h)
        if any(d[p[f]] != d[f] for p in gact for f in F.elements):
            return CrossedModule(cm.F, cm.G, cm.boundary, gact)
    raise AssertionError("no mutant found")


def _records(text):
    return [line.split("\t") for line in text.splitlines()]


def test_trivial_document(tmp_path):
    doc = parse(TRIVIAL_DOC)
    cm = doc.to_crossed_module()
    assert cm.F.group.order == cm.G.group.order == cm.gamma.order == 1
    code, out = run(["validate", _write(tmp_path, "t", TRIVIAL_DOC), "--format", "tsv"])
    assert code == 0 and ["VALID", "true"] in _records(out)


def test_inversion_document_is_quasi_abelian(tmp_path):
    path = _fixture(tmp_path, "z4_to_z2_inv")
    code, out = run(["validate", path, "--format", "tsv"])
    assert code == 0
    qa = next(r for r in _records(out) if r[0] == "QUASI_ABELIAN")
    assert qa[1] == "true"


@pytest.mark.parametrize("name", ["trivial", "z4_to_z2_inv", "id_q8", "s3_in_s3xc2_conj", "q8_to_inn", "one_to_c3"])
def test_roundtrip_is_byte_identical(name):
    text = emit(document_from_xmod(by_name(name).cm))
    doc = parse(text)
    assert emit(doc) == text
    assert parse(emit(doc)) == doc


def test_comments_and_spacing_are_ignored():
    noisy = "# header\n" + TRIVIAL_DOC.replace("order 1", "order   1   # one element").replace("\n0\n", "\n  0\n\n")
    assert parse(noisy) == parse(TRIVIAL_DOC)


def test_wrong_boundary_length_reports_its_line():
    text = emit(document_from_xmod(by_name("z4_to_z2").cm))
    lines = text.splitlines()
    row = lines.index("[boundary]") + 1
    lines[row] = "0 1 0"
    with pytest.raises(ParseError) as exc:
        parse("\n".join(lines) + "\n")
    assert exc.value.line == row + 1


def test_sections_out_of_order():
    text = TRIVIAL_DOC.replace("[group F]", "[group X]")
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert exc.value.line == 6


def test_bad_header():
    with pytest.raises(ParseError) as exc:
        parse("cmx 2\n")
    assert (exc.value.line, exc.value.column) == (1, 5)


def test_parse_error_exit_code(tmp_path):
    code, out = run(["validate", _write(tmp_path, "bad", "cmx 1\n[gamma]\norder x\n"), "--format", "tsv"])
    assert code == 2 and out.startswith("PARSE_ERROR\t3\t")


def test_cm1_mutant_exit_two_with_witness(tmp_path):
    path = _write(tmp_path, "mut", emit(document_from_xmod(_cm1_mutant())))
    code, out = run(["validate", path, "--format", "tsv"])
    assert code == 2
    rows = _records(out)
    assert ["VALID", "false"] in rows
    hit = [r for r in rows if r[0] == "VIOLATION" and r[1] == "CM1"]
    assert hit and re.fullmatch(r"\d+ \d+", hit[0][2])


def test_theorem42_identity_module(tmp_path):
    code, out = run(["theorem42", _fixture(tmp_path, "id_q8"), "--format", "tsv"])
    assert code == 0
    rows = _records(out)
    exact = [r for r in rows if r[0] == "EXACT_AT"]
    assert exact and all(r[2] == "true" for r in exact)


def test_theorem42_tsv_schema(tmp_path):
    code, out = run(["theorem42", _fixture(tmp_path, "s3_in_s3xc2"), "--format", "tsv"])
    assert code == 0
    rows = _records(out)
    keys = {r[0] for r in rows}
    assert keys == {"QUASI_ABELIAN", "CARD", "EXACT_AT", "AB1_IMAGE_CRITERION", "CHECK"}
    for r in rows:
        if r[0] == "EXACT_AT":
            assert len(r) == 3 and r[2] in ("true", "false")
        elif r[0] == "AB1_IMAGE_CRITERION":
            assert len(r) == 2 and r[1] in ("true", "false")
        elif r[0] == "CARD":
            assert len(r) == 3 and r[2].isdigit()
    cards = [r[1] for r in rows if r[0] == "CARD"]
    assert len(cards) == 12 and len(set(cards)) == 12
    joints = [r[1] for r in rows if r[0] == "EXACT_AT"]
    assert "H1_ab" not in joints and len(joints) == 10


def test_theorem42_non_quasi_abelian_fails(tmp_path):
    code, out = run(["theorem42", _fixture(tmp_path, "q8_to_inn"), "--format", "tsv"])
    assert code == 1
    assert _records(out)[0][:2] == ["QUASI_ABELIAN", "false"]


def test_cohomology_ab_degree_one(tmp_path):
    code, out = run(["cohomology", _fixture(tmp_path, "z4_to_z2"), "--object", "ab", "--degree", "1", "--format", "tsv"])
    assert code == 0
    assert _records(out)[0] == ["CARD", "H1_ab", "2"]


@pytest.mark.parametrize("obj,deg", [("F", 1), ("G", 0), ("cm", -1), ("cm", 1), ("lienF", 2), ("lienG", 2), ("ab", 2)])
def test_cohomology_objects(tmp_path, obj, deg):
    code, out = run(["cohomology", _fixture(tmp_path, "s3_in_s3xc2"), "--object", obj, "--degree", str(deg), "--format", "tsv"])
    assert code == 0
    rows = _records(out)
    assert rows[0][0] == "CARD" and int(rows[0][2]) == sum(1 for r in rows if r[0] == "CLASS")


def test_budget_exit_three(tmp_path):
    path = _fixture(tmp_path, "id_q8")
    code, out = run(["--budget", "1", "theorem42", path, "--format", "tsv"])
    assert code == 3 and _records(out)[-1][0] == "BUDGET_EXCEEDED"
    code, _ = run(["theorem42", path, "--budget", "1"])
    assert code == 3


def test_budget_from_environment(tmp_path, monkeypatch):
    monkeypatch.setenv("CMX_BUDGET", "1")
    code, _ = run(["cohomology", _fixture(tmp_path, "id_q8"), "--object", "G", "--degree", "1"])
    assert code == 3


def test_twistcheck(tmp_path):
    code, out = run(["twistcheck", _fixture(tmp_path, "z4_to_z2"), "--format", "tsv"])
    assert code == 0
    rows = _records(out)
    assert rows[0] == ["THETA_CONVENTION", "q*c^-1"]
    assert all(r[2] == "true" for r in rows if r[0] == "CHECK")


def test_output_is_stable(tmp_path):
    path = _fixture(tmp_path, "s3_in_s3xc2_conj")
    assert run(["theorem42", path, "--format", "tsv"]) == run(["theorem42", path, "--format", "tsv"])


def test_catalog_and_discover():
    code, out = run(["catalog", "list", "--format", "tsv"])
    assert code == 0 and len(_records(out)) >= 9
    code, out = run(["catalog", "show", "id_s3"])
    assert code == 0 and out.startswith("cmx 1\n")
    code, out = run(["discover", "--max-f", "2", "--max-g", "2", "--max-gamma", "2", "--format", "tsv"])
    assert code == 0 and sum(1 for r in _records(out) if r[0] == "INSTANCE") == 10


def test_usage_errors():
    assert run(["cohomology"])[0] == 2
    assert run(["nonsense"])[0] == 2


def test_missing_file():
    assert run(["validate", "/nonexistent/file.cmx"])[0] == 2


def test_console_entry_point(tmp_path):
    path = _fixture(tmp_path, "z4_to_z2")
    proc = subprocess.run(
        [sys.executable, "-m", "xmodcoh.cli", "validate", path, "--format", "tsv"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout.startswith("VALID\ttrue")
