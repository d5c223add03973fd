"""Command line surface: exit codes, report shapes, schema, determinism."""

import json
from fractions import Fraction
from pathlib import Path

import pytest

jsonschema = pytest.importorskip("jsonschema")

from posetdeform import cli
from posetdeform.deform import MCElement, moduli
from posetdeform.posets import save_poset, sphere_poset
from posetdeform.simplicial import SimpCochain

POSETS = Path(__file__).resolve().parents[1] / "posets"
SCHEMA = json.loads(
    (Path(cli.__file__).parent / "schemas" / "report.schema.json").read_text()
)


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    return code, doc, err


def poset_path(name):
    return str(POSETS / ("%s.json" % name))


@pytest.fixture(scope="module")
def sphere_z(tmp_path_factory):
    """Element files for gauge tests: z, 2z, and z plus a coboundary."""
    p = sphere_poset()
    z = moduli(p, 1)[1][0].term(1)
    d = tmp_path_factory.mktemp("elems")
    paths = {}
    for name, cochain in (
        ("z", z),
        ("2z", z.scale(Fraction(2))),
    ):
        e = MCElement.single(1, 1, cochain)
        path = d / ("%s.json" % name)
        path.write_text(json.dumps(e.to_dict(p)))
        paths[name] = str(path)
    return paths


def test_validate_reports_counts(capsys):
    code, doc, _ = run_json(capsys, "validate", poset_path("cr4"))
    assert code == 0
    assert doc["verb"] == "validate"
    assert doc["poset"] == "cr4"
    assert doc["elements"] == 4
    assert doc["intervals"] == 8


def test_validate_table_output(capsys):
    code, out, _ = run(capsys, "validate", poset_path("cr4"))
    assert code == 0
    assert "elements" in out and "4" in out


def test_cohomology_strict_and_weak(capsys):
    code, doc, _ = run_json(capsys, "cohomology", poset_path("cr4"))
    assert code == 0 and doc["betti"] == [1, 1, 0] and doc["mode"] == "strict"
    code, doc, _ = run_json(
        capsys, "cohomology", poset_path("cr4"), "--unnormalized"
    )
    assert code == 0 and doc["betti"] == [1, 1, 0] and doc["mode"] == "weak"
    code, doc, _ = run_json(
        capsys, "cohomology", poset_path("sphere14"), "--max-degree", "2"
    )
    assert code == 0 and doc["betti"] == [1, 0, 1]


def test_hochschild_agreement(capsys):
    code, doc, _ = run_json(
        capsys, "hochschild", poset_path("chain2"), "--max-degree", "2"
    )
    assert code == 0
    assert doc["agree"] is True
    assert doc["simplicial"] == doc["relative"] == doc["full"] == [1, 0, 0]


def test_hochschild_degree_cap(capsys):
    code, _, err = run(
        capsys, "hochschild", poset_path("chain2"), "--max-degree", "3"
    )
    assert code == 2
    assert "0..2" in err


def test_verify_single_suite(capsys):
    code, doc, _ = run_json(
        capsys,
        "verify",
        poset_path("chain2"),
        "--suite",
        "operad",
        "--samples",
        "3",
    )
    assert code == 0
    assert doc["suite"] == "operad" and doc["ok"] is True and doc["failed"] == 0


def test_verify_all_suites(capsys):
    code, doc, _ = run_json(
        capsys, "verify", poset_path("chain2"), "--samples", "2"
    )
    assert code == 0 and doc["ok"] is True
    assert [r["suite"] for r in doc["reports"]] == [
        "operad",
        "brace",
        "hga",
        "dgla",
        "iso",
    ]


def test_verify_rejects_bad_sample_count(capsys):
    code, _, err = run(capsys, "verify", poset_path("chain2"), "--samples", "0")
    assert code == 2 and "samples" in err


def test_deform_dimensions(capsys):
    code, doc, _ = run_json(capsys, "deform", poset_path("cr4"), "--order", "2")
    assert code == 0 and doc["dimension"] == 0 and doc["basis"] == []
    code, doc, _ = run_json(
        capsys, "deform", poset_path("sphere14"), "--order", "2"
    )
    assert code == 0 and doc["dimension"] == 2 and len(doc["basis"]) == 2


def test_mc_check_positive(capsys, tmp_path, sphere_z):
    code, doc, _ = run_json(
        capsys, "mc-check", poset_path("sphere14"), sphere_z["z"]
    )
    assert code == 0 and doc["ok"] is True and doc["witness"] is None


def test_mc_check_negative(capsys, tmp_path, cr4):
    e = MCElement(
        1, {1: SimpCochain(2, {(cr4.index("a"), cr4.index("a"), cr4.index("c")): 1})}
    )
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(e.to_dict(cr4)))
    code, doc, _ = run_json(capsys, "mc-check", poset_path("cr4"), str(path))
    assert code == 1
    assert doc["ok"] is False
    assert doc["witness"] == {"layer": 1, "chain": ["a", "a", "a", "c"]}


def test_gauge_equiv_negative(capsys, sphere_z):
    code, doc, _ = run_json(
        capsys,
        "gauge-equiv",
        poset_path("sphere14"),
        sphere_z["z"],
        sphere_z["2z"],
    )
    assert code == 1
    assert doc["equivalent"] is False and doc["witness"] is None


def test_gauge_equiv_positive(capsys, sphere_z):
    code, doc, _ = run_json(
        capsys,
        "gauge-equiv",
        poset_path("sphere14"),
        sphere_z["z"],
        sphere_z["z"],
    )
    assert code == 0
    assert doc["equivalent"] is True and doc["witness"] is not None


def test_gauge_equiv_rejects_non_mc(capsys, tmp_path, cr4):
    e = MCElement(
        1, {1: SimpCochain(2, {(cr4.index("a"), cr4.index("a"), cr4.index("c")): 1})}
    )
    z = MCElement.zero(1)
    p1 = tmp_path / "e.json"
    p2 = tmp_path / "z.json"
    p1.write_text(json.dumps(e.to_dict(cr4)))
    p2.write_text(json.dumps(z.to_dict(cr4)))
    code, _, err = run(
        capsys, "gauge-equiv", poset_path("cr4"), str(p1), str(p2)
    )
    assert code == 2 and err != ""


def test_missing_file(capsys):
    code, _, err = run(capsys, "validate", "/no/such/file.json")
    assert code == 2
    assert "file.json" in err


def test_bad_json_reports_position(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{")
    code, _, err = run(capsys, "validate", str(path))
    assert code == 2
    assert "line 1" in err


def test_cyclic_poset_rejected(capsys, tmp_path):
    path = tmp_path / "cyclic.json"
    path.write_text(
        json.dumps(
            {"name": "bad", "elements": ["a", "b"], "relations": [["a", "b"], ["b", "a"]]}
        )
    )
    code, _, err = run(capsys, "validate", str(path))
    assert code == 2 and err != ""


def test_usage_errors(capsys):
    assert run(capsys, "no-such-verb", "x")[0] == 2
    assert run(capsys)[0] == 2


def test_meta_block_and_byte_determinism(capsys):
    code, out1, _ = run(capsys, "validate", poset_path("cr4"), "--format", "json")
    doc = json.loads(out1)
    assert "meta" in doc and "version" in doc["meta"] and "generated" in doc["meta"]
    code, plain1, _ = run(
        capsys, "validate", poset_path("cr4"), "--format", "json", "--no-meta"
    )
    code, plain2, _ = run(
        capsys, "validate", poset_path("cr4"), "--format", "json", "--no-meta"
    )
    assert plain1 == plain2
    assert "meta" not in json.loads(plain1)


def test_json_output_is_a_single_document(capsys):
    _, out, _ = run_json(
        capsys, "cohomology", poset_path("diamond"), "--max-degree", "1"
    )
    # run_json already parsed the full stream as one document; spot-check
    # the table path prints more than one line instead
    _, table, _ = run(capsys, "cohomology", poset_path("diamond"))
    assert len(table.splitlines()) > 1
