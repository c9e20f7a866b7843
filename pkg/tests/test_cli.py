import csv
import io
import json
from fractions import Fraction

from vwbm.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# info
# ---------------------------------------------------------------------------

def test_info_json_2_7(capsys):
    code, out, err = run(capsys, "info", "2", "7", "--format", "json")
    assert code == 0 and err == ""
    data = json.loads(out)
    assert data["schema"] == "vwbm-report/1"
    assert data["genus"] == 3
    assert data["spectrum"] == ["1", "3/5", "1/5"]
    assert data["summands"][0] == {
        "kappa": "0", "mu": "1/7", "nu": "1/2", "lyapunov": "1", "tiling": True}
    assert data["covers"] == []
    assert data["primitivity"]["algebraically_primitive"] is True
    assert data["uniformizer"] == "Delta(2,7,oo)"
    assert data["generator"]["y_exponent"] == 4


def test_info_rejects_invalid_parameters(capsys):
    code, out, err = run(capsys, "info", "1", "9")
    assert code == 2
    assert out == ""
    assert "n, m must exceed 1 and nm >= 6" in err


def test_info_flags_arithmetic(capsys):
    code, out, _ = run(capsys, "info", "3", "3")
    assert code == 0
    assert json.loads(out)["arithmetic"] is True


def test_info_md(capsys):
    code, out, _ = run(capsys, "info", "2", "7", "--format", "md")
    assert code == 0
    assert "## T(2,7)" in out and "**(0, 1/7, 1/2)**" in out


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------

def test_table_csv_round_trips(capsys):
    code, out, _ = run(capsys, "table", "2", "3", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 1  # only T(2, 3) is valid in that range
    row = rows[0]
    assert (int(row["n"]), int(row["m"])) == (2, 3)
    assert Fraction(row["mu"]) == Fraction(1, 3)
    assert Fraction(row["nu"]) == Fraction(1, 2)
    assert Fraction(row["lyapunov"]) == 1
    assert row["tiling"] == "True"


def test_table_md_matches_reference_layout(capsys):
    code, out, _ = run(capsys, "table", "2", "7", "--format", "md")
    assert code == 0
    assert "### T(2,7)" in out
    # ascending exponents with the bold tiling row last
    block = out.split("### T(2,7)")[1].split("###")[0]
    assert block.index("| (0, 3/7, 1/2) | 1/5 |") \
        < block.index("| (0, 2/7, 1/2) | 3/5 |") \
        < block.index("| **(0, 1/7, 1/2)** | **1** |")


def test_table_output_is_deterministic(capsys):
    _, first, _ = run(capsys, "table", "4", "6", "--format", "json")
    _, second, _ = run(capsys, "table", "4", "6", "--format", "json")
    assert first == second


# ---------------------------------------------------------------------------
# other subcommands
# ---------------------------------------------------------------------------

def test_spectrum_command(capsys):
    code, out, _ = run(capsys, "spectrum", "4", "5")
    assert code == 0
    assert json.loads(out)["spectrum"] == [
        "1", "7/11", "6/11", "3/11", "2/11", "1/11"]


def test_covers_command_with_certificates(capsys):
    code, out, _ = run(capsys, "covers", "8", "8", "--certify")
    assert code == 0
    data = json.loads(out)
    assert data["covers"] == [[2, 4], [4, 2], [4, 4]]
    assert all(cert["contained"] for cert in data["certificates"])
    scales = {tuple(c["cover"]): c["scale"] for c in data["certificates"]}
    assert scales == {(2, 4): 8, (4, 2): 8, (4, 4): 4}


def test_generator_command(capsys):
    code, out, _ = run(capsys, "generator", "2", "5")
    assert code == 0
    data = json.loads(out)["generator"]
    assert data["rhs"] == [-2, 5, 0, -5, 0, 1]
    assert data["factored"]["text"] == "y^4 = (u - 2)(u^2 + u - 1)^2"
    assert data["numeric_verification"]["ok"] is True
    assert "e-" in data["numeric_verification"]["max_relative_deviation"]


def test_tracefield_command(capsys):
    code, out, _ = run(capsys, "tracefield", "4", "6")
    assert code == 0
    data = json.loads(out)
    assert (data["degree_F"], data["degree_E"]) == (4, 2)
    assert (data["oracle_degree_F"], data["oracle_degree_E"]) == (4, 2)
    assert data["admissible_triangle_group"] is False
    assert data["hecke"]["field_degree"] == 2


def test_surface_command(capsys):
    code, out, _ = run(capsys, "surface", "2", "3")
    assert code == 0
    data = json.loads(out)
    assert data["column_span_order"] == 12
    assert data["square_count"] == 24
    assert data["surface_genus"] == 11
    assert data["lift_classes"] == 1
    assert data["sigma2"]["horizontal_cylinders_preserved"] is True


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def test_verify_small_grid_passes(capsys):
    code, out, _ = run(capsys, "verify", "6")
    assert code == 0
    lines = out.strip().splitlines()
    assert all(line.startswith("PASS") for line in lines)
    assert lines[-1].startswith("PASS  overall")


def test_verify_level_filter(capsys):
    code, out, _ = run(capsys, "verify", "8", "--level", "trace-only")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 3  # two trace checks plus the overall line
    assert "trace degrees formula vs oracle" in out


def test_verify_rejects_small_nmax(capsys):
    code, _, err = run(capsys, "verify", "2")
    assert code == 2 and "nmax" in err


def test_verify_rejects_unknown_level(capsys):
    code, _, err = run(capsys, "verify", "6", "--level", "bogus")
    assert code == 2 and "unknown level" in err
