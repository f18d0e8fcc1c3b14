import json

from plab.suite import CHECKS, FAIL, PASS, SuiteConfig, _Ctx, run_check, run_paper_suite


def test_every_check_has_an_anchor():
    assert sorted(CHECKS) == list(range(1, 15))
    assert all(anchor for anchor, _, _ in CHECKS.values())
    assert [cid for cid, (_, _, heavy) in CHECKS.items() if heavy] == [6]


def test_report_bytes_are_deterministic(tmp_path):
    cfg = SuiteConfig(seed=3, only=(1, 3, 7))
    a = run_paper_suite(cfg).write(tmp_path / "a")
    b = run_paper_suite(cfg).write(tmp_path / "b")
    for name in ("report.md", "report.csv", "report.json"):
        assert (a / name).read_bytes() == (b / name).read_bytes()
    doc = json.loads((a / "report.json").read_text())
    assert doc["verdict"] == PASS and doc["seed"] == 3
    assert all(r["anchor"] for r in doc["records"])
    assert [r["check"] for r in doc["records"]] == sorted(r["check"] for r in doc["records"])


def test_default_suite_skips_the_heavy_check_and_passes():
    lines = []
    report = run_paper_suite(SuiteConfig(log=lines.append))
    assert {r.check for r in report.records} == set(range(1, 15)) - {6}
    assert report.passed, [r for r in report.records if r.verdict != PASS]
    assert len(lines) == 13 and report.totals["fail"] == 0


def test_failing_record_and_crash_are_reported():
    ctx = _Ctx(99, "anchor", None, 0)
    assert not ctx.record("x", "instance", 1, 2)
    assert ctx.records[0].verdict == FAIL

    def boom(ctx):
        raise RuntimeError("kaboom")

    CHECKS[99] = ("anchor", boom, False)
    try:
        records, _ = run_check(99)
    finally:
        del CHECKS[99]
    assert records[-1].verdict == FAIL and "kaboom" in records[-1].computed
