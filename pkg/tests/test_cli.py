import subprocess
import sys

import pytest

from shiftadd.cli import main


def run_cli(*argv):
    return main(list(argv))


class TestVerifyCommand:
    def test_passes_at_width_4(self, capsys):
        assert run_cli("verify", "--width", "4") == 0
        out = capsys.readouterr().out
        assert "256/256" in out
        assert "PASS" in out

    def test_width_required(self):
        with pytest.raises(SystemExit) as excinfo:
            run_cli("verify")
        assert excinfo.value.code == 2


class TestRunCommand:
    def test_product_and_ledger(self, capsys):
        assert run_cli("run", "--arch", "conv", "--width", "8", "--a", "255", "--b", "255") == 0
        out = capsys.readouterr().out
        assert "product: 65025" in out
        assert "multiplier_shift:" in out

    def test_trace_output(self, capsys):
        code = run_cli(
            "run", "--arch", "lowpower", "--width", "3", "--a", "3", "--b", "2", "--trace"
        )
        assert code == 0
        out = capsys.readouterr().out
        assert "B(0)=0  000" in out
        assert "B(1)=1  011" in out
        assert "B(2)=0  000" in out
        assert "Answer -> 000110  (6)" in out
        assert "adder firings: 1" in out
        assert "product: 6" in out

    def test_rejects_out_of_range_operand(self):
        with pytest.raises(SystemExit) as excinfo:
            run_cli("run", "--arch", "conv", "--width", "3", "--a", "9", "--b", "1")
        assert excinfo.value.code == 2

    def test_rejects_unknown_arch(self):
        with pytest.raises(SystemExit) as excinfo:
            run_cli("run", "--arch", "fast", "--width", "3", "--a", "1", "--b", "1")
        assert excinfo.value.code == 2


class TestSweepCommand:
    def test_writes_csv_and_summary(self, tmp_path, capsys):
        out_file = tmp_path / "report.csv"
        code = run_cli(
            "sweep", "--widths", "4,8", "--dist", "uniform", "--trials", "500",
            "--seed", "9", "--out", str(out_file), "--format", "csv",
        )
        assert code == 0
        lines = out_file.read_text().splitlines()
        assert lines[0].startswith("#")
        assert "rng=" in lines[0]
        assert len(lines) == 2 + 4  # comment, header, two rows per width
        console = capsys.readouterr().out
        assert "modeled reduction" in console
        assert "20.51%" in console and "35.25%" in console

    def test_json_format(self, tmp_path):
        out_file = tmp_path / "report.json"
        code = run_cli(
            "sweep", "--widths", "4", "--trials", "200", "--seed", "1",
            "--out", str(out_file), "--format", "json",
        )
        assert code == 0
        assert out_file.exists()

    def test_fixed_dist_requires_operands(self, tmp_path):
        with pytest.raises(SystemExit) as excinfo:
            run_cli("sweep", "--widths", "8", "--dist", "fixed", "--trials", "10",
                    "--out", str(tmp_path / "x.csv"))
        assert excinfo.value.code == 2

    def test_bad_widths_usage_error(self, tmp_path):
        with pytest.raises(SystemExit) as excinfo:
            run_cli("sweep", "--widths", "4,eight", "--trials", "10",
                    "--out", str(tmp_path / "x.csv"))
        assert excinfo.value.code == 2

    def test_oversized_width_usage_error(self, tmp_path):
        with pytest.raises(SystemExit) as excinfo:
            run_cli("sweep", "--widths", "20", "--trials", "10",
                    "--out", str(tmp_path / "x.csv"))
        assert excinfo.value.code == 2

    def test_unwritable_destination_fails(self, tmp_path, capsys):
        code = run_cli(
            "sweep", "--widths", "4", "--trials", "50", "--seed", "1",
            "--out", str(tmp_path / "missing" / "x.csv"),
        )
        assert code == 1
        assert "error:" in capsys.readouterr().err

    def test_model_file(self, tmp_path, capsys):
        model = tmp_path / "model.cfg"
        model.write_text("adder = 0.5\nvdd = 1.0\nf_clk = 1.0\n")
        out_file = tmp_path / "r.csv"
        code = run_cli(
            "sweep", "--widths", "4", "--trials", "100", "--seed", "2",
            "--out", str(out_file), "--model", str(model),
        )
        assert code == 0


class TestEntryPoint:
    def test_module_invocation_usage_error_exit_code(self):
        proc = subprocess.run(
            [sys.executable, "-m", "shiftadd", "bogus"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 2

    def test_module_invocation_verify(self):
        proc = subprocess.run(
            [sys.executable, "-m", "shiftadd", "verify", "--width", "3"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert "PASS" in proc.stdout
