"""Command line reports: exit codes, payloads, byte determinism."""

import json
import os

from gradings.cli import main
from gradings.jsonio import dump_json
from gradings.scalar import make_field

HERE = os.path.dirname(__file__)
INSTANCES = os.path.abspath(os.path.join(HERE, "..", "instances"))


def path(name):
    return os.path.join(INSTANCES, name)


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_validate_reports_components(capsys):
    code, report = run(capsys, ["validate", path("sl2_gamma1.json")])
    assert code == 0 and report["ok"]
    check = report["checks"][0]
    assert check["check"] == "ggrading_valid"
    assert check["detail"]["components"] == 3
    assert sorted(check["detail"]["dims"]) == [1, 1, 1]
    assert check["detail"]["group"] == [1, []]
    assert report["command"] == ["validate", path("sl2_gamma1.json")]


def test_universal_group_of_split_torus(capsys):
    code, report = run(capsys, ["universal-group", path("fxf.json")])
    assert code == 0
    assert report["result"]["invariants"] == [0, []]
    assert report["result"]["is_group_grading"] is False


def test_induce_merges_components(capsys):
    code, report = run(capsys, ["induce", path("non_group_sl2xsl2.json")])
    assert code == 0
    assert report["result"]["invariants"] == [1, [2]]
    assert report["result"]["components"] == 4


def test_product_commands(capsys):
    code, report = run(capsys, [
        "product", "free", path("sl2_gamma1.json"), path("sl2_gamma2.json"),
    ])
    assert code == 0
    assert report["result"]["invariants"] == [1, [2, 2]]
    inst = report["result"]["instance"]
    assert inst["algebra"]["dim"] == 6
    assert len(inst["ggrading"]["components"]) == 6

    code, report = run(capsys, [
        "product", "grading", path("sl2_gamma1.json"), path("sl2_gamma2.json"),
    ])
    assert code == 0
    assert len(report["result"]["instance"]["grading"]["components"]) == 6

    code, report = run(capsys, [
        "product", "g",
        path("sl2xsl2_z4z2_table.json"), path("sl2xsl2_z4z2_table.json"),
    ])
    assert code == 0
    assert report["result"]["invariants"] == [0, [2, 4]]

    code, report = run(capsys, ["product", "free", path("sl2_gamma1.json")])
    assert code == 2 and report["error"]["kind"] == "schema"


def test_loop_build_verify_and_recover(capsys):
    code, report = run(capsys, ["loop", "build", path("sl2_z4z2.json")])
    assert code == 0
    assert report["result"]["dimension"] == 6
    assert report["result"]["kernel_order"] == 2
    assert len(report["result"]["labels"]) == 6

    code, report = run(capsys, ["loop", "verify", path("sl2_z4z2.json")])
    assert code == 0 and report["ok"]
    assert report["result"]["certified"] is True

    code, report = run(capsys,
                       ["loop", "recover", path("sl2xsl2_z4z2_table.json")])
    assert code == 0
    assert report["result"]["quotient_invariants"] == [0, [2, 2]]
    assert report["result"]["kernel_order"] == 2
    base = report["result"]["base_instance"]
    assert base["algebra"]["dim"] == 3


def test_loop_split_reproduces_component_table(capsys):
    code, report = run(capsys, ["loop", "split", path("sl2_z4z2.json")])
    assert code == 0 and report["ok"]
    result = report["result"]
    assert result["copies"] == 2

    # characters of the order-2 kernel: trivial and sign
    assert result["character_values"] == [["1,0", "1,0"], ["1,0", "-1,0"]]
    det_check = report["checks"][1]
    assert det_check["check"] == "character_matrix_regular"
    assert det_check["detail"]["determinant"] == "-2,0"

    images = {tuple(e["degree"]): e["image"] for e in
              result["images_by_degree"]}
    assert len(images) == 6
    # the degree with canonical coordinates (0, 1) maps onto the line (H, iH)
    assert images[(0, 1)] == [["0,0", "0,0", "1,0", "0,0", "0,0", "0,1"]]
    assert images[(0, 3)] == [["0,0", "0,0", "1,0", "0,0", "0,0", "0,-1"]]
    assert images[(1, 0)] == [["1,0", "1,0", "0,0", "1,0", "1,0", "0,0"]]


def test_loop_witness_and_bad_characteristic_split(capsys):
    code, report = run(capsys, ["loop", "witness", path("sl2_f2_loop.json")])
    assert code == 0 and report["ok"]
    assert report["checks"][1]["check"] == "ideal_proper_nonzero"
    assert 0 < report["checks"][1]["detail"]["ideal_dim"] < 6

    code, report = run(capsys, ["loop", "split", path("sl2_f2_loop.json")])
    assert code == 3
    assert report["ok"] is False
    assert report["error"]["name"] == "CharDividesKernel"
    assert report["error"]["kind"] == "precondition"


def test_decompose_and_centroid(capsys):
    code, report = run(capsys,
                       ["decompose", "simple", path("sl2xsl2_z4z2_table.json")])
    assert code == 0
    assert sorted(report["result"]["dims"]) == [3, 3]

    code, report = run(capsys,
                       ["decompose", "graded", path("sl2xsl2_z4z2_table.json")])
    assert code == 0
    factors = report["result"]["factors"]
    assert len(factors) == 1
    assert factors[0]["dim"] == 6
    assert factors[0]["constituents"] == [0, 1]
    assert factors[0]["centroid_dim"] == 2

    code, report = run(capsys,
                       ["centroid", path("sl2xsl2_z4z2_table.json")])
    assert code == 0
    assert report["result"]["dimension"] == 2
    assert len(report["result"]["support"]) == 2
    assert report["result"]["component_dims"] == [1, 1]


def test_equivalence_extension_is_obstructed(capsys):
    code, report = run(capsys, [
        "equivalence", "extend",
        path("jordan_loop1.json"), path("jordan_loop2.json"),
        path("jordan_swap_map.json"),
    ])
    assert code == 3
    assert report["error"]["name"] == "NoLift"


def test_equivalence_extension_identity_control(capsys, tmp_path):
    ident = tmp_path / "identity.json"
    field = make_field("rationals")
    one, zero = "1", "0"
    ident.write_text(dump_json({
        "format": 1,
        "field": {"kind": "rationals"},
        "matrix": [[one, zero, zero], [zero, one, zero], [zero, zero, one]],
    }))
    code, report = run(capsys, [
        "equivalence", "extend",
        path("jordan_loop1.json"), path("jordan_loop1.json"), str(ident),
    ])
    assert code == 0
    assert report["result"]["extends"] is True
    assert len(report["result"]["equivalence"]) == 6
    assert "lift" in report["result"]


def test_catalog_run_entry_and_field_override(capsys):
    code, report = run(capsys, ["catalog", "run", "non-group-sl2xsl2"])
    assert code == 0 and report["ok"]
    entry = report["result"]["entries"][0]
    assert entry["entry"] == "non-group-sl2xsl2"
    assert entry["ok"] is True
    by_name = {c["check"]: c for c in entry["checks"]}
    assert by_name["universal_group"]["detail"]["got"] == [1, [2]]
    assert by_name["induced_component_count"]["detail"]["got"] == 4

    code, report = run(capsys, [
        "catalog", "run", "sl2-gamma1", "--field", "prime:5",
    ])
    assert code == 0
    assert report["result"]["entries"][0]["field"] == {
        "kind": "prime", "p": 5,
    }

    code, report = run(capsys, [
        "catalog", "run", "all", "--field", "rationals",
    ])
    assert code == 2 and report["error"]["kind"] == "schema"

    code, report = run(capsys, ["catalog", "run", "no-such-entry"])
    assert code == 2

    code, report = run(capsys, [
        "catalog", "run", "sl2-gamma1", "--field", "bogus",
    ])
    assert code == 2


def test_schema_errors_exit_2(capsys):
    code, report = run(capsys, ["loop", "split", path("fxf.json")])
    assert code == 2
    assert report["error"]["kind"] == "schema"
    assert report["ok"] is False


def test_reports_are_byte_deterministic(capsys, tmp_path):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    code = main(["universal-group", path("fxf.json"), "--out", str(out1)])
    text1 = capsys.readouterr().out
    assert code == 0
    code = main(["universal-group", path("fxf.json"), "--out", str(out2)])
    text2 = capsys.readouterr().out
    assert text1 == text2
    assert out1.read_text() == out2.read_text() == text1

    # the mirrored path never leaks into the report
    report = json.loads(text1)
    assert report["command"] == ["universal-group", path("fxf.json")]
