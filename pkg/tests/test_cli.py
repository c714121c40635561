import json
from pathlib import Path

import pytest

from starsec.cli import main, parse_series, parse_values
from starsec.errors import ConfigValueError

SMALL_SEARCH = """[search]
x_min = 0.0
x_max = 1.0
y_min = 0.0
y_max = 1.0
z_min = 9.0
z_max = 10.0
step = 1.0
"""


def test_parse_values():
    assert parse_values("0:5:50") == tuple(float(v) for v in range(0, 55, 5))
    assert parse_values("10, 20,40") == (10.0, 20.0, 40.0)
    with pytest.raises(ConfigValueError):
        parse_values("a,b")
    with pytest.raises(ConfigValueError):
        parse_values("0:0:1")


def test_parse_series():
    series = parse_series("kappa=10,15,20")
    assert series.name == "kappa"
    assert series.values == (10.0, 15.0, 20.0)
    with pytest.raises(ConfigValueError):
        parse_series("kappa")


def test_show_config(scenario_path, capsys):
    assert main(["show-config", "--config", str(scenario_path)]) == 0
    shown = json.loads(capsys.readouterr().out)
    assert shown["power"]["rho"] == 0.3
    assert shown["system"]["elements"] == 20


def test_show_config_applies_overrides(scenario_path, capsys):
    assert main(["show-config", "--config", str(scenario_path), "--seed", "9", "--eve-model", "exact"]) == 0
    shown = json.loads(capsys.readouterr().out)
    assert shown["monte_carlo"]["seed"] == 9
    assert shown["monte_carlo"]["eve_model"] == "exact"


def test_invalid_config_exit_code(tmp_path, scenario_text):
    path = tmp_path / "bad.cfg"
    path.write_text(scenario_text.replace("rho = 0.3", "rho = 1.3"), encoding="utf-8")
    assert main(["show-config", "--config", str(path)]) == 2


def test_missing_config_exit_code(tmp_path):
    assert main(["show-config", "--config", str(tmp_path / "absent.cfg")]) == 2


def test_sweep_needs_variable_and_values(scenario_path, tmp_path):
    assert main(["sweep", "--config", str(scenario_path), "--out", str(tmp_path)]) == 2


def test_colocated_uav_reports_run_failure(scenario_text, tmp_path, caplog):
    path = tmp_path / "colocated.cfg"
    path.write_text(scenario_text.replace("uav = [0.5, 0.5, 10.0]", "uav = [5.0, 5.0, 5.0]"), encoding="utf-8")
    argv = ["sweep", "--config", str(path), "--out", str(tmp_path), "--variable", "kappa", "--values", "10"]
    assert main(argv) == 2
    messages = [r.getMessage() for r in caplog.records if r.levelname == "ERROR"]
    assert any(m.startswith("Run failed:") for m in messages)
    assert not any(m.startswith("Configuration error") for m in messages)


def test_unwritable_output_exit_code(scenario_path, tmp_path):
    blocker = tmp_path / "taken"
    blocker.write_text("", encoding="utf-8")
    argv = ["sweep", "--config", str(scenario_path), "--out", str(blocker), "--variable", "ps_dbm", "--values", "10"]
    assert main(argv) == 3


def test_sweep_writes_csv(scenario_path, tmp_path, capsys):
    argv = [
        "sweep",
        "--config", str(scenario_path),
        "--out", str(tmp_path),
        "--variable", "kappa",
        "--values", "10,20",
        "--metrics", "r_sec_r,r_sec_t",
    ]
    assert main(argv) == 0
    path = Path(capsys.readouterr().out.strip())
    assert path == tmp_path / "sweep_kappa.csv"
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0].startswith("# starsec_version = ")
    table = [line for line in lines if not line.startswith("#")]
    assert table[0] == "kappa,r_sec_r,r_sec_t"
    assert len(table) == 3
    assert table[1].startswith("10,")


def test_sweep_with_simulation_is_reproducible(scenario_path, tmp_path):
    def run(out: Path) -> bytes:
        argv = [
            "sweep",
            "--config", str(scenario_path),
            "--out", str(out),
            "--variable", "ps_dbm",
            "--values", "10,20",
            "--with-mc",
            "--trials", "500",
            "--seed", "11",
        ]
        assert main(argv) == 0
        return (out / "sweep_ps_dbm.csv").read_bytes()

    assert run(tmp_path / "a") == run(tmp_path / "b")


def test_preset_sweep(scenario_path, tmp_path, capsys):
    argv = ["sweep", "--config", str(scenario_path), "--out", str(tmp_path), "--preset", "wssr_vs_zeta"]
    assert main(argv) == 0
    assert capsys.readouterr().out.split() == [str(tmp_path / "sweep_zeta.csv")]


def test_optimize(tmp_path, scenario_text, capsys):
    config = tmp_path / "small.cfg"
    config.write_text(scenario_text.split("[search]")[0] + SMALL_SEARCH, encoding="utf-8")
    assert main(["optimize", "--config", str(config), "--out", str(tmp_path / "out")]) == 0
    summary = json.loads(capsys.readouterr().out)
    assert 0.0 <= summary["zeta_star"] <= 1.0
    assert summary["uav_star"][2] in (9.0, 10.0)
    assert (tmp_path / "out" / "optimize_trace.csv").exists()
    assert (tmp_path / "out" / "optimize_summary.json").exists()


@pytest.mark.slow
def test_validate_negative_control_fails(scenario_path, tmp_path):
    argv = [
        "validate",
        "--config", str(scenario_path),
        "--out", str(tmp_path),
        "--trials", "2000",
        "--spread-scale", "2",
    ]
    assert main(argv) == 1
    assert (tmp_path / "validation_report.csv").exists()
