import csv

from cdlab import verify
from cdlab.report import write_report
from cdlab.verify import Case, SweepResult


def test_small_sweeps_pass():
    for result in (verify.omega_sweep(2, 2), verify.gamma_sweep(3, 3), verify.lambda_sweep(3),
                   verify.poset_product_sweep(("boolean:2", "polygon:3")), verify.free_join_sweep(("boolean:2",))):
        assert result.ok, result.summary()
        assert result.checked > 0


def test_summary_lines():
    assert verify.lambda_sweep(6).summary() == "slone: all 49 (p,q) OK"
    assert verify.gamma_sweep(4, 4).summary() == "thm52: all 144 pairs OK"
    assert verify.free_join_sweep(("boolean:2", "boolean:3")).summary() == "lee: identity holds on all 4 listed poset pairs"


def test_failed_summary_and_json():
    r = SweepResult("demo", "pairs", [Case("x", "g", True), Case("y", "g", False, "off by one")])
    assert not r.ok
    assert r.summary() == "demo: 1 of 2 pairs FAILED"
    assert r.to_json()["mismatches"] == [{"case": "y", "detail": "off by one"}]


def test_workers_give_identical_results():
    serial = verify.gamma_sweep(3, 3, workers=1)
    parallel = verify.gamma_sweep(3, 3, workers=2)
    assert [(c.name, c.ok) for c in serial.cases] == [(c.name, c.ok) for c in parallel.cases]


def test_report_writes_table_and_figure(tmp_path):
    result = SweepResult("demo", "pairs", [Case("a", "g1", True), Case("b", "g2", False, "bad")])
    table, figure = write_report(result, str(tmp_path / "out"), "png")
    with open(table, newline="") as fh:
        rows = list(csv.reader(fh, delimiter="\t"))
    assert rows[0] == ["case", "group", "status", "detail"]
    assert rows[1:] == [["a", "g1", "ok", ""], ["b", "g2", "MISMATCH", "bad"]]
    with open(figure, "rb") as fh:
        assert fh.read(4) == b"\x89PNG"


def test_report_svg_is_byte_stable(tmp_path):
    result = verify.lambda_sweep(2)
    first = write_report(result, str(tmp_path / "a"), "svg")[1]
    second = write_report(result, str(tmp_path / "b"), "svg")[1]
    assert open(first, "rb").read() == open(second, "rb").read()
