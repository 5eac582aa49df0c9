import csv
import json
import subprocess
import sys

from trigonal.cli import BENCH_HEADER, main
from trigonal.curve import write_curve_file


def run_cli(args):
    """Run the CLI in-process, capturing stdout; returns (status, text)."""
    import io
    from contextlib import redirect_stdout
    buf = io.StringIO()
    with redirect_stdout(buf):
        status = main(args)
    return status, buf.getvalue()


def test_decide_veronese_exit_zero(tmp_path, fermat_quintic):
    path = tmp_path / "quintic.curve"
    path.write_text("f = x^5 + y^5 + z^5\n")
    status, out = run_cli(["decide", str(path), "--seed", "3"])
    assert status == 0
    data = json.loads(out)
    assert data["case"] == "Veronese" and data["trigonal"] is False


def test_decide_trigonal_exit_zero(tmp_path, proj5):
    path = tmp_path / "proj5.curve"
    path.write_text(write_curve_file(proj5))
    jf = tmp_path / "report.json"
    status, out = run_cli(["decide", str(path), "--seed", "3",
                           "--json-out", str(jf)])
    assert status == 0
    data = json.loads(out)
    assert data["trigonal"] is True and data["verified_degree"] == 3
    assert json.loads(jf.read_text()) == data


def test_decide_cusp_exit_two(tmp_path):
    path = tmp_path / "cusp.curve"
    path.write_text("f = y^2*z - x^3\n")
    status, _ = run_cli(["decide", str(path)])
    assert status == 2


def test_decide_low_genus_exit_two(tmp_path):
    path = tmp_path / "cubic.curve"
    path.write_text("f = x^3 + y^3 + z^3\n")
    status, _ = run_cli(["decide", str(path)])
    assert status == 2


def test_decide_hyperelliptic_exit_two(tmp_path, hyper5):
    path = tmp_path / "hyper.curve"
    path.write_text(write_curve_file(hyper5))
    status, _ = run_cli(["decide", str(path)])
    assert status == 2


def test_decide_parse_error_exit_two(tmp_path):
    path = tmp_path / "bad.curve"
    path.write_text("f = x^4 + w^4\n")
    status, _ = run_cli(["decide", str(path)])
    assert status == 2


def test_decide_with_point_flag(tmp_path, klein):
    path = tmp_path / "klein.curve"
    path.write_text("f = x^3*y + y^3*z + z^3*x\n")
    status, out = run_cli(["decide", str(path), "--point", "0:0:1"])
    assert status == 0
    data = json.loads(out)
    assert data["case"] == "Genus3" and data["verified_degree"] == 3


def test_generate_round_trip(tmp_path):
    out = tmp_path / "c.curve"
    status, _ = run_cli(["generate", "projection", "--degree", "6",
                         "--seed", "4", "--out", str(out)])
    assert status == 0
    text = out.read_text()
    assert "# genus = 7" in text
    status, rep = run_cli(["decide", str(out), "--seed", "1"])
    assert status == 0
    assert json.loads(rep)["trigonal"] is True


def test_generate_m1_genus_line(tmp_path):
    out = tmp_path / "m1.curve"
    status, _ = run_cli(["generate", "m1", "--deg-x", "3", "--seed", "2",
                         "--out", str(out)])
    assert status == 0
    assert "# genus = 4" in out.read_text()


def test_generate_m2_failure_is_exit_two(tmp_path):
    # the parameter-elimination construction rarely validates; either a
    # validated file or a typed failure mapping to exit status 2 is fine
    out = tmp_path / "m2.curve"
    status = main(["generate", "m2", "--deg", "2", "--seed", "11",
                   "--out", str(out)])
    assert status in (0, 2)


def test_bench_csv_shape_and_determinism(tmp_path):
    spec = tmp_path / "bench.spec"
    spec.write_text("method=m1 params=deg_x=3 n=3 height=5\n"
                    "method=projection params=d=5 n=2 height=5\n")
    out1 = tmp_path / "b1.csv"
    out2 = tmp_path / "b2.csv"
    for out in (out1, out2):
        status, _ = run_cli(["bench", str(spec), "--out", str(out),
                             "--seed", "9"])
        assert status == 0
    rows1 = list(csv.reader(out1.read_text().splitlines()))
    rows2 = list(csv.reader(out2.read_text().splitlines()))
    assert rows1[0] == BENCH_HEADER
    assert len(rows1) == 6
    # identical except the seconds column
    sec = BENCH_HEADER.index("seconds")
    for a, b in zip(rows1, rows2):
        assert a[:sec] == b[:sec] and a[sec + 1:] == b[sec + 1:]
    # accepted m1 rows have genus 4; projection rows genus 5
    for row in rows1[1:]:
        if row[0] == "m1" and row[6] == "True":
            assert row[3] == "4" and row[7] == "True"
        if row[0] == "projection" and row[6] == "True":
            assert row[3] == "5" and row[7] == "True"


def test_bench_empty_spec_gives_header_only(tmp_path):
    spec = tmp_path / "empty.spec"
    spec.write_text("# nothing\n")
    out = tmp_path / "b.csv"
    status, _ = run_cli(["bench", str(spec), "--out", str(out)])
    assert status == 0
    assert out.read_text().strip() == ",".join(BENCH_HEADER)


def test_cli_subprocess_entry_point(tmp_path, proj5):
    """The installed console script behaves like main()."""
    path = tmp_path / "c.curve"
    path.write_text(write_curve_file(proj5))
    proc = subprocess.run([sys.executable, "-m", "trigonal.cli", "decide",
                           str(path), "--seed", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["trigonal"] is True
