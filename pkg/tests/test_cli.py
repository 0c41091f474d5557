import json

import pytest

from skewpath import cli, height, levels, sampler
from skewpath.closed_forms import s_series
from skewpath.oeis import SHIPPED_FIXTURE


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_golden(capsys):
    code, out, _ = run(capsys, "count", "-n", "5")
    assert code == 0 and out == '{"n":5,"count":"2514"}\n'


def test_count_with_oracle(capsys):
    code, out, _ = run(capsys, "count", "-n", "4", "--oracle")
    payload = json.loads(out)
    assert code == 0 and payload["agree"] and payload["oracle"] == "370"


def test_count_plain_large(capsys):
    code, out, _ = run(capsys, "count", "-n", "60", "--format", "plain")
    assert code == 0 and int(out) == s_series(61).integers()[60]


def test_series_matches_library(capsys):
    _, out, _ = run(capsys, "series", "--terms", "12")
    assert [int(c) for c in json.loads(out)["coeffs"]] == s_series(12).integers()
    _, out, _ = run(capsys, "series", "--terms", "10", "--of", "g0", "--format", "plain")
    assert [int(c) for c in out.split()] == levels.level_closed(0, 10)[1].integers()


def test_height_dist_csv(capsys):
    code, out, _ = run(capsys, "height", "--dist", "3", "--format", "csv")
    assert code == 0 and out.splitlines() == ["height,count", "1,8", "2,32", "3,18"]


def test_height_average_json(capsys):
    _, out, _ = run(capsys, "height", "--average", "10")
    row = json.loads(out)
    exact = height.average_height_exact(10)
    assert row["exact"] == f"{exact.numerator}/{exact.denominator}"
    assert row["ratio"] == pytest.approx(height.average_height_ratio(10))


def test_height_compare_csv(capsys):
    _, out, _ = run(capsys, "height", "--compare", "5,10", "--format", "csv")
    lines = out.splitlines()
    assert lines[0].split(",")[:2] == ["n", "exact"] and len(lines) == 3


def test_levels_csv_matches_dp(capsys):
    _, out, _ = run(capsys, "levels", "--order", "6")
    lines = out.splitlines()
    assert lines[0] == "length,level,f,g,h,total"
    table = levels.level_dp(6)
    for line in lines[1:]:
        length, i, f, g, h, total = map(int, line.split(","))
        assert (f, g, h) == (table.f(i)[length], table.g(i)[length], table.h(i)[length])
        assert total == f + g + h


def test_truncate_verdict(capsys):
    code, out, _ = run(capsys, "truncate", "--K", "3", "--order", "16")
    payload = json.loads(out)
    assert code == 0 and payload["consistent"]
    assert payload["verdict"]["g0_cramer_eq_continued_fraction"]
    assert payload["verdict"]["h0_cramer_eq_dp_cap_K_plus_2"]


def test_sample_reproducible(capsys):
    _, a, _ = run(capsys, "sample", "-n", "5", "--trials", "20", "--seed", "7", "--emit-paths")
    _, b, _ = run(capsys, "sample", "-n", "5", "--trials", "20", "--seed", "7", "--emit-paths")
    assert a == b
    payload = json.loads(a)
    assert payload["paths"] == [str(p) for p in sampler.sample_paths(5, 20, 7)]
    assert payload["rng"] == sampler.RNG_ALGORITHM


def test_check_all_passes(capsys):
    code, out, _ = run(capsys, "check", "--all", "--order", "24")
    assert code == 0 and json.loads(out)["passed"]


def test_check_known_false_exits_1(capsys):
    code, out, _ = run(capsys, "check", "--id", "g_boundary_printed", "--order", "12")
    assert code == 1 and not json.loads(out)["passed"]


def test_check_unknown_id(capsys):
    code, _, err = run(capsys, "check", "--id", "nope")
    assert code == 2 and "unknown check" in err


def test_oeis_verify_offline(capsys):
    code, out, _ = run(capsys, "oeis-verify", "--id", "A000001", "--upto", "12", "--offline", str(SHIPPED_FIXTURE))
    payload = json.loads(out)
    assert code == 0 and payload["passed"] and payload["compared"] == 13


def test_malformed_id_is_json_error(capsys):
    code, out, _ = run(capsys, "oeis-verify", "--id", "A08687", "--upto", "3", "--offline", str(SHIPPED_FIXTURE))
    assert code == 1 and json.loads(out)["error"] == "MalformedId"


def test_value_error_exit_2(capsys):
    code, _, err = run(capsys, "height", "--average", "0")
    assert code == 2 and err.startswith("skewpath: error")


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["count"])
    assert info.value.code == 2
