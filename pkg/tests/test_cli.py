import pytest

from zpfcross.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def csv_rows(out):
    lines = out.strip().splitlines()
    header = lines[0].split(",")
    return header, [line.split(",") for line in lines[1:]]


class TestConstantsCommand:
    def test_table(self, capsys):
        code, out, _ = run(capsys, "constants")
        assert code == 0
        assert "hbar" in out and "1.054571628e-34" in out
        assert "rel_sigma" in out

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "constants", "--format", "csv")
        header, rows = csv_rows(out)
        assert code == 0
        assert header == ["name", "value", "unit", "rel_sigma", "source"]
        assert any(row[0] == "H" for row in rows)


class TestTransitionCommand:
    def test_table_output(self, capsys):
        code, out, _ = run(capsys, "transition", "--slope", "1.7", "--kappa", "1")
        assert code == 0
        values = dict(line.split(None, 1) for line in out.splitlines())
        assert float(values["lambda0_m"]) == 16.0
        assert float(values["sigma_m"]) == 1.38
        assert "sigma_H" in values

    def test_csv_output(self, capsys):
        code, out, _ = run(capsys, "transition", "--slope", "2.0", "--kappa", "1e-5",
                           "--format", "csv")
        header, rows = csv_rows(out)
        assert code == 0
        assert header[:4] == ["a", "kappa", "lambda0_m", "sigma_m"]
        lam = float(rows[0][header.index("lambda0_m")])
        assert abs(lam - 5183.0) / 5183.0 < 1e-3

    def test_monte_carlo_flag_deterministic(self, capsys):
        args = ("transition", "--slope", "1.8", "--mc", "2000", "--seed", "9")
        code1, out1, _ = run(capsys, *args)
        code2, out2, _ = run(capsys, *args)
        assert code1 == code2 == 0
        assert "mc_mean_m" in out1
        assert out1 == out2

    def test_validation_exit_code(self, capsys):
        code, _, err = run(capsys, "transition", "--slope", "5")
        assert code == 2
        assert "slope" in err

    def test_kappa_validation(self, capsys):
        code, _, err = run(capsys, "transition", "--slope", "1.8", "--kappa", "0")
        assert code == 2

    def test_numeric_failure_exit_code(self, capsys, tmp_path):
        config = tmp_path / "broken.cfg"
        config.write_text("hbar = 1e308\nG = 1e308\n", encoding="utf-8")
        code, _, err = run(capsys, "transition", "--slope", "1.8",
                           "--config", str(config))
        assert code == 3
        assert "numeric" in err


class TestSweepCommand:
    def test_published_table_csv(self, capsys):
        code, out, _ = run(capsys, "sweep", "--slopes", "1.7,1.8,2.0",
                           "--kappas", "1,1e-5", "--format", "csv")
        header, rows = csv_rows(out)
        assert code == 0
        assert header == ["a", "kappa", "lambda0_m", "sigma_m", "k0_per_m"]
        assert len(rows) == 6
        published = [16.0, 185.0, 53.0, 587.0, 517.0, 5172.0]
        for row, ref in zip(rows, published):
            assert abs(float(row[2]) - ref) / ref < 0.02

    def test_extra_outputs(self, capsys):
        code, out, _ = run(capsys, "sweep", "--slopes", "1.8", "--kappas", "1e-5",
                           "--outputs", "epsilon,N,Ns", "--format", "csv")
        header, rows = csv_rows(out)
        assert code == 0
        assert header[-3:] == ["epsilon_w_m3", "n_solar", "ns_solar"]

    def test_invalid_cells_keep_exit_zero(self, capsys):
        code, out, _ = run(capsys, "sweep", "--slopes", "1.8,3.5", "--kappas", "1")
        assert code == 0
        assert "<error: SlopeOutOfRange>" in out

    def test_empty_sweep_is_validation_error(self, capsys):
        code, _, err = run(capsys, "sweep", "--slopes", "", "--kappas", "1")
        assert code == 2


class TestDissipationCommand:
    def test_provenance_note_and_values(self, capsys):
        code, out, _ = run(capsys, "dissipation", "--kappa", "1e-5", "--slope", "1.7")
        assert code == 0
        assert out.splitlines()[0].startswith("# N0 mode: paper")
        assert "computed from constants" in out
        assert "2.1e9" in out.splitlines()[0].replace("e+09", "e9")
        assert "ns_solar" in out

    def test_computed_mode(self, capsys):
        code, out, _ = run(capsys, "dissipation", "--kappa", "1e-5", "--slope", "1.7",
                           "--n0", "computed")
        assert code == 0
        assert "# N0 mode: computed" in out


class TestBoundCommand:
    def test_published_bound(self, capsys):
        code, out, _ = run(capsys, "bound", "--slope", "1.7")
        assert code == 0
        assert "# N0 mode: paper" in out
        lines = dict()
        for line in out.splitlines()[1:]:
            name, value = line.split(None, 1)
            lines[name] = value.strip()
        kappa = float(lines["kappa"])
        lam = float(lines["lambda0_m"])
        assert 0.5 < kappa / 9e-18 < 2.0
        assert abs(lam - 67e3) / 67e3 < 0.15

    def test_computed_mode_rejected(self, capsys):
        code, _, err = run(capsys, "bound", "--slope", "1.7", "--n0", "computed")
        assert code == 2
        assert "turbulence degree" in err


class TestSpectrumCommand:
    def test_boyer_csv(self, capsys):
        code, out, _ = run(capsys, "spectrum", "--model", "boyer",
                           "--kmin", "1", "--kmax", "100", "--points", "3")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "k,E"
        assert len(lines) == 4
        k, e = (float(tok) for tok in lines[1].split(","))
        assert abs(e - 1.054571628e-34 * 2.99792458e8 * k ** 3) / e < 1e-12

    def test_powerlaw_defaults(self, capsys):
        code, out, _ = run(capsys, "spectrum", "--model", "powerlaw",
                           "--slope", "1.8", "--kappa", "1e-5", "--points", "5")
        assert code == 0
        assert len(out.strip().splitlines()) == 6

    def test_ms_and_truncated(self, capsys):
        code, out, _ = run(capsys, "spectrum", "--model", "ms", "--gamma", "2",
                           "--kmin", "1e-10", "--kmax", "1e10", "--points", "4")
        assert code == 0
        code, out, _ = run(capsys, "spectrum", "--model", "truncated",
                           "--points", "4")
        assert code == 0
        last = out.strip().splitlines()[-1]
        assert float(last.split(",")[1]) > 0.0  # cutoff is inclusive

    def test_bad_grid(self, capsys):
        code, _, err = run(capsys, "spectrum", "--model", "boyer",
                           "--kmin", "10", "--kmax", "1")
        assert code == 2


class TestConfigFlag:
    def test_override_changes_result(self, capsys, tmp_path):
        config = tmp_path / "h.cfg"
        config.write_text("H = 77 km/s/Mpc\n", encoding="utf-8")
        code, out, _ = run(capsys, "transition", "--slope", "2.0", "--format", "csv",
                           "--config", str(config))
        assert code == 0
        _, out_default, _ = run(capsys, "transition", "--slope", "2.0", "--format", "csv")
        assert out != out_default

    def test_bad_config(self, capsys, tmp_path):
        config = tmp_path / "bad.cfg"
        config.write_text("warp_factor = 9\n", encoding="utf-8")
        code, _, err = run(capsys, "transition", "--slope", "2.0",
                           "--config", str(config))
        assert code == 2

    def test_unknown_argument(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["transition", "--slope", "1.8", "--warp", "9"])
        assert exc.value.code == 2
