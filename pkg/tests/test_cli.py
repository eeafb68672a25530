import json

import pytest

from qoscpoly import cli
from qoscpoly.report import (DISCREPANCY, FAIL, PASS, VerificationReport,
                             record)
from qoscpoly.verify import RunConfig, run_suites


def run_cli(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


FAST = ["--nmax", "4", "--order", "6"]


class TestReport:
    def test_record_statuses(self):
        assert record("a", {}, True, 1, 1).status == PASS
        assert record("a", {}, False, 1, 2).status == FAIL
        assert record("a", {}, False, 1, 2, discrepancy=True).status == DISCREPANCY

    def test_ok_ignores_discrepancies(self):
        rep = VerificationReport({}, 0)
        rep.extend([record("a", {}, True, 1, 1),
                    record("b", {}, False, 1, 2, discrepancy=True)])
        assert rep.ok
        rep.extend([record("c", {}, False, 1, 2)])
        assert not rep.ok

    def test_text_summary_line(self):
        rep = VerificationReport({}, 7)
        rep.extend([record("a", {}, True, 1, 1)])
        text = rep.to_text()
        assert "summary: 1 pass, 0 fail, 0 documented-discrepancy (seed=7)" in text

    def test_json_roundtrip(self):
        rep = VerificationReport({"q": "1/4"}, 0)
        rep.extend([record("zz", {"n": 3}, True, "1", "1"),
                    record("aa", {}, False, "1", "2")])
        data = json.loads(rep.to_json())
        assert data["summary"][FAIL] == 1
        assert [r["check_id"] for r in data["records"]] == ["aa", "zz"]

    def test_csv_header(self):
        rep = VerificationReport({}, 0)
        first = rep.to_csv().splitlines()[0]
        assert first == "check_id,params,status,lhs,rhs,note"


class TestVerifyCommand:
    def test_single_suite_passes(self, capsys):
        code, out, err = run_cli(capsys, ["verify", "--suite", "qkernel"] + FAST)
        assert code == cli.EXIT_OK
        assert "fail" in out.splitlines()[-1]
        assert "[fail]" not in out

    def test_discrepancies_do_not_fail(self, capsys):
        code, out, _ = run_cli(
            capsys, ["verify", "--suite", "qseries", "--suite", "matrixelements"]
            + FAST)
        assert code == cli.EXIT_OK
        assert "[documented-discrepancy]" in out

    def test_json_schema(self, capsys):
        code, out, _ = run_cli(
            capsys, ["verify", "--suite", "qkernel", "--format", "json"] + FAST)
        assert code == cli.EXIT_OK
        data = json.loads(out)
        assert set(data) == {"context", "seed", "summary", "records"}
        assert data["summary"][FAIL] == 0

    def test_deterministic_output(self, capsys):
        argv = ["verify", "--suite", "polyfamilies", "--seed", "3",
                "--format", "json"] + FAST
        _, first, _ = run_cli(capsys, argv)
        _, second, _ = run_cli(capsys, argv)
        assert first == second

    def test_seed_changes_randomized_cases(self):
        cfgs = [RunConfig(suites=("hahncalc",), nmax=4, order=6, seed=s)
                for s in (0, 1)]
        reports = [run_suites(c) for c in cfgs]
        assert reports[0].to_json() != reports[1].to_json()

    def test_bad_s_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, ["verify", "--s", "3/2"])
        assert code == cli.EXIT_USAGE
        assert "error" in err

    def test_unknown_suite_rejected(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run_cli(capsys, ["verify", "--suite", "nonsense"])
        assert exc.value.code == cli.EXIT_USAGE

    def test_failure_exit_code(self, capsys, monkeypatch):
        # force a failing record through a stubbed suite
        import qoscpoly.verify as verify

        def broken_suite(ctx, nmax, order, rng):
            return [record("stub/forced-failure", {}, False, 0, 1)]

        monkeypatch.setitem(verify.SUITES, "qkernel", broken_suite)
        code, out, _ = run_cli(capsys, ["verify", "--suite", "qkernel"] + FAST)
        assert code == cli.EXIT_VERIFICATION_FAILED
        assert "[fail] stub/forced-failure" in out

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "report.csv"
        code, out, _ = run_cli(
            capsys, ["verify", "--suite", "qkernel", "--format", "csv",
                     "--out", str(path)] + FAST)
        assert code == cli.EXIT_OK
        assert out == ""
        assert path.read_text().startswith("check_id,")

    def test_out_unwritable(self, capsys):
        code, _, err = run_cli(
            capsys, ["verify", "--suite", "qkernel",
                     "--out", "/nonexistent-dir/report.txt"] + FAST)
        assert code == cli.EXIT_IO
        assert "cannot write" in err


class TestTableCommand:
    def test_poly_json(self, capsys):
        code, out, _ = run_cli(
            capsys, ["table", "poly", "--format", "json", "--nmax", "3"])
        assert code == cli.EXIT_OK
        data = json.loads(out)
        assert set(data) == {"context", "kind", "rows"}
        assert data["kind"] == "poly"
        families = {row["family"] for row in data["rows"]}
        assert families == {"qgaussian", "qfactorial", "hahn"}

    def test_matel_rows_agree_for_exact_families(self, capsys):
        code, out, _ = run_cli(
            capsys, ["table", "matel", "--format", "json", "--nmax", "3"])
        assert code == cli.EXIT_OK
        rows = json.loads(out)["rows"]
        for row in rows:
            if row["family"] != "hahn":
                assert row["agree"]

    def test_position_table(self, capsys):
        code, out, _ = run_cli(
            capsys, ["table", "position", "--format", "json", "--nmax", "2"])
        rows = json.loads(out)["rows"]
        assert rows[0]["coeffs"] == ["1"]
        assert rows[1]["coeffs"] == ["0", "1"]

    def test_csv_and_text_formats(self, capsys):
        for fmt in ("csv", "text"):
            code, out, _ = run_cli(
                capsys, ["table", "genfun", "--format", fmt, "--order", "4"])
            assert code == cli.EXIT_OK
            assert out

    def test_context_block(self, capsys):
        _, out, _ = run_cli(
            capsys, ["table", "hahn", "--format", "json", "--nmax", "2",
                     "--s", "3/4", "--omega", "1/8"])
        ctx = json.loads(out)["context"]
        assert ctx == {"s": "3/4", "q": "9/16", "omega": "1/8", "omega0": "2/7"}
