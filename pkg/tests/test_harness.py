import json

import pytest

from baxlab import cli, harness
from baxlab.bijections import gamma
from baxlab.harness import render_ascii, run_suite
from baxlab.paths import BOTTOM_START, MIDDLE_START, TOP_START, LatticePath, PathTriple
from baxlab.perm import all_permutations


def ex9_triple():
    return PathTriple(
        LatticePath(BOTTOM_START, "HVHVVHHV"),
        LatticePath(MIDDLE_START, "VVHHVHVH"),
        LatticePath(TOP_START, "VVHHVVHH"),
    )


def test_run_suite_all_passes_at_small_n():
    report = run_suite("all", 4)
    assert report.passed
    assert report.suite == "all" and report.n == 4
    assert all(c.passed for c in report.checks)
    labels = [c.label for c in report.checks]
    assert len(set(labels)) == len(labels)


def test_run_suite_rejects_unknown_names():
    with pytest.raises(ValueError, match="unknown suite"):
        run_suite("nope", 3)
    with pytest.raises(ValueError):
        run_suite("counts", 0)


def test_reports_are_deterministic():
    a = run_suite("corollaries", 6)
    b = run_suite("corollaries", 6)
    assert a.checks == b.checks
    assert a.passed and any(c.label == "bax6-golden-set" for c in a.checks)


def test_counts_suite_reports_the_alternating_values():
    report = run_suite("counts", 7)
    assert report.passed
    by_label = {c.label: c for c in report.checks}
    assert "alternating 70" in by_label["alternating-count-n7"].detail
    assert "alternating 25" in by_label["alternating-count-n6"].detail


def test_report_serialization():
    report = run_suite("counts", 3)
    obj = report.to_obj()
    assert obj["suite"] == "counts" and obj["passed"] is True
    assert json.loads(json.dumps(obj)) == obj
    assert {c["label"] for c in obj["checks"]} == {c.label for c in report.checks}


def test_parallel_scan_matches_serial(monkeypatch):
    perms = list(all_permutations(6))
    serial = harness._scan("fv", perms, jobs=1)
    monkeypatch.setattr(harness, "_CHUNK", 64)
    parallel = harness._scan("fv", perms, jobs=2)
    assert serial is None and parallel is None


def test_default_jobs_env(monkeypatch):
    monkeypatch.setenv("BAXLAB_JOBS", "3")
    assert harness.default_jobs() == 3
    monkeypatch.setenv("BAXLAB_JOBS", "junk")
    assert harness.default_jobs() == 1
    monkeypatch.delenv("BAXLAB_JOBS")
    assert harness.default_jobs() == 1


def canvas_marks(text, mark):
    """Grid coordinates of every occurrence of mark in a rendering."""
    rows = text.split("\n")
    height = len(rows)
    out = set()
    for r, row in enumerate(rows):
        for c, ch in enumerate(row):
            if ch == mark:
                assert r % 2 == 0 and c % 2 == 0, "vertices sit on even cells"
                out.add((c // 2, (height - 1 - r) // 2))
    return out


def test_render_ascii_traces_the_vertices():
    t = ex9_triple()
    text = render_ascii(t)
    assert canvas_marks(text, "B") == set(t.bottom.vertices())
    assert canvas_marks(text, "M") == set(t.middle.vertices())
    assert canvas_marks(text, "T") == set(t.top.vertices())


def test_render_ascii_empty_triple_shows_three_markers():
    t = PathTriple(
        LatticePath(BOTTOM_START, ""),
        LatticePath(MIDDLE_START, ""),
        LatticePath(TOP_START, ""),
    )
    text = render_ascii(t)
    assert canvas_marks(text, "B") == {(2, 0)}
    assert canvas_marks(text, "M") == {(1, 1)}
    assert canvas_marks(text, "T") == {(0, 2)}
    assert "-" not in text and "|" not in text


def test_render_ascii_single_h_segments():
    t = gamma((2, 1))
    text = render_ascii(t)
    assert text.count("-") == 3
    assert "|" not in text


# ---------------------------------------------------------------------------
# command-line interface


def test_cli_map_gamma_json(capsys):
    rc = cli.main(["map", "--perm", "235419786", "--to", "gamma", "--render", "json"])
    assert rc == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj == {
        "bottom": {"start": [2, 0], "steps": "HVHVVHHV"},
        "middle": {"start": [1, 1], "steps": "VVHHVHVH"},
        "top": {"start": [0, 2], "steps": "VVHHVVHH"},
    }


def test_cli_map_laguerre(capsys):
    rc = cli.main(["map", "--perm", "512439786", "--to", "laguerre"])
    assert rc == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj == {"word": "URUDDBUD", "weights": [1, 2, 2, 2, 1, 1, 1, 2]}


def test_cli_map_rejects_non_baxter(capsys):
    rc = cli.main(["map", "--perm", "2413", "--to", "gamma"])
    assert rc == 2
    assert "2-41-3" in capsys.readouterr().err
    rc = cli.main(["map", "--perm", "2413", "--to", "gamma", "--unchecked"])
    assert rc == 0


def test_cli_map_rejects_bad_perm(capsys):
    rc = cli.main(["map", "--perm", "[1,2,2]", "--to", "gamma"])
    assert rc == 2
    assert "permutation" in capsys.readouterr().err


def test_cli_map_ascii(capsys):
    rc = cli.main(["map", "--perm", "21", "--to", "gamma", "--render", "ascii"])
    assert rc == 0
    assert capsys.readouterr().out.count("-") == 3


def test_cli_enum_count(capsys):
    rc = cli.main(["enum", "--n", "3", "--k", "1", "--format", "count"])
    assert rc == 0
    assert capsys.readouterr().out.strip() == "4"
    rc = cli.main(["enum", "--n", "4", "--format", "count"])
    assert rc == 0
    assert capsys.readouterr().out.strip() == "22"


def test_cli_enum_csv(capsys):
    rc = cli.main(["enum", "--n", "2", "--format", "csv"])
    assert rc == 0
    lines = capsys.readouterr().out.strip().split("\n")
    assert lines[0] == "bottom,middle,top"
    assert sorted(lines[1:]) == ["H,H,H", "V,V,V"]


def test_cli_enum_json(capsys):
    rc = cli.main(["enum", "--n", "2", "--k", "1", "--format", "json"])
    assert rc == 0
    arr = json.loads(capsys.readouterr().out)
    assert arr == [
        {
            "bottom": {"start": [2, 0], "steps": "H"},
            "middle": {"start": [1, 1], "steps": "H"},
            "top": {"start": [0, 2], "steps": "H"},
        }
    ]


def test_cli_invert_round_trip(tmp_path, capsys):
    rc = cli.main(["map", "--perm", "235419786", "--to", "gamma"])
    triple_json = capsys.readouterr().out
    path = tmp_path / "triple.json"
    path.write_text(triple_json)
    rc = cli.main(["invert", "--from", "gamma", "--in", str(path)])
    assert rc == 0
    assert json.loads(capsys.readouterr().out) == [2, 3, 5, 4, 1, 9, 7, 8, 6]
    rc = cli.main(["invert", "--from", "gamma-prime", "--in", str(path)])
    assert rc == 0
    assert json.loads(capsys.readouterr().out) == [5, 1, 2, 4, 3, 9, 7, 8, 6]


def test_cli_invert_rejects_crossing_triple(tmp_path, capsys):
    obj = {
        "bottom": {"start": [2, 0], "steps": "HV"},
        "middle": {"start": [1, 1], "steps": "VH"},
        "top": {"start": [0, 2], "steps": "HV"},
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(obj))
    rc = cli.main(["invert", "--from", "gamma", "--in", str(path)])
    assert rc == 2
    assert "vertex-disjoint" in capsys.readouterr().err


def test_cli_invert_missing_file(capsys):
    rc = cli.main(["invert", "--from", "gamma", "--in", "/no/such/file.json"])
    assert rc == 2


def test_cli_poly(capsys):
    rc = cli.main(["poly", "--n", "2"])
    assert rc == 0
    assert json.loads(capsys.readouterr().out) == [
        {"t": 0, "q": 0, "c": "1"},
        {"t": 1, "q": 3, "c": "1"},
    ]


def test_cli_verify_pass(capsys):
    rc = cli.main(["verify", "--suite", "counts", "--n", "5"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "PASS" in out and "FAIL" not in out
    assert "suite counts (n=5)" in out


def test_cli_verify_json(capsys):
    rc = cli.main(["verify", "--suite", "polynomial", "--n", "4", "--json"])
    assert rc == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["passed"] is True
    assert obj["suite"] == "polynomial"


def test_cli_verify_unknown_suite_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "--suite", "bogus", "--n", "3"])
    assert exc.value.code == 2


def test_cli_verify_failure_exit_code(monkeypatch, capsys):
    # sabotage one formula so a check genuinely fails
    monkeypatch.setattr(harness, "baxter_number", lambda n: 999)
    rc = cli.main(["verify", "--suite", "counts", "--n", "2"])
    assert rc == 1
    out = capsys.readouterr().out
    assert "FAIL" in out and "999" in out
