import io
import json
import math
import textwrap

import pytest

from sailcost.errors import ParseError, UnitError, ValidationError
from sailcost.scenario import (
    SweepSpec,
    apply_overrides,
    build_scenario,
    dump_scenario,
    load_scenario,
    parse_entries,
    scenario_with,
    write_results,
)

MINIMAL = textwrap.dedent("""\
    name = t
    mode = optimized
    [target]
    beta0 = 0.2
    [payload]
    m0 = 1 g
    [sail]
    h = 1 um
    rho = 1 g/cc
    eps_r = 1
    [array]
    lambda = 1 um
    [metrics]
    a1 = 1 usd/W
    a2 = 1000 usd/m2
""")


def _scenario(text=MINIMAL):
    return build_scenario(parse_entries(text))


def test_minimal_scenario_builds_with_si_values_and_defaults():
    sc = _scenario()
    assert sc.payload.mass == 1e-3
    assert sc.sail.thickness == 1e-6
    assert sc.sail.density == 1000.0
    assert sc.array.wavelength == 1e-6
    assert sc.array.diffraction_factor == 1.22
    assert sc.array.shape_factor == math.pi / 4
    assert sc.metrics.laser_usd_per_watt == 1.0
    assert sc.beta_target == 0.2
    assert sc.budget_target is None
    assert sc.curve is None


def test_comments_and_blank_lines_ignored():
    sc = _scenario("# header\n\n" + MINIMAL + "\n# trailing\n")
    assert sc.name == "t"


def test_bare_number_on_dimensioned_field_rejected_with_line():
    bad = MINIMAL.replace("h = 1 um", "h = 1e-6")
    with pytest.raises(UnitError, match="missing unit"):
        _scenario(bad)


def test_wrong_dimension_rejected():
    bad = MINIMAL.replace("h = 1 um", "h = 1 g")
    with pytest.raises(UnitError, match="mass unit"):
        _scenario(bad)


def test_unknown_key_rejected_with_line_number():
    with pytest.raises(ValidationError, match="unknown key"):
        _scenario(MINIMAL + "[sail]\nwingspan = 3 m\n")


def test_duplicate_key_rejected():
    with pytest.raises(ParseError, match="duplicate"):
        parse_entries(MINIMAL + "[sail]\nh = 2 um\n")


def test_missing_required_key():
    bad = MINIMAL.replace("rho = 1 g/cc\n", "")
    with pytest.raises(ValidationError, match="sail.rho"):
        _scenario(bad)


def test_garbage_line_reports_position():
    with pytest.raises(ParseError, match="line 2"):
        parse_entries("name = x\nnot a statement\n")


def test_exactly_one_target_required():
    both = MINIMAL.replace("beta0 = 0.2", "beta0 = 0.2\nbudget = 1e9 usd")
    with pytest.raises(ValidationError, match="exactly one"):
        _scenario(both)
    neither = MINIMAL.replace("beta0 = 0.2\n", "")
    with pytest.raises(ValidationError, match="exactly one"):
        _scenario(neither)


def test_reserved_cost_items_must_be_zero():
    ok = MINIMAL + "[metrics]\na5 = 0\n"
    assert _scenario(ok).name == "t"
    with pytest.raises(ValidationError, match="reserved"):
        _scenario(MINIMAL + "[metrics]\na5 = 3\n")


def test_field_validation_points_at_field():
    bad = MINIMAL.replace("eps_r = 1", "eps_r = 1.5")
    with pytest.raises(ValidationError, match="sail.eps_r"):
        _scenario(bad)


def test_overrides_merge_and_revalidate():
    entries = apply_overrides(parse_entries(MINIMAL), ["metrics.a1=0.1 usd/W"])
    assert build_scenario(entries).metrics.laser_usd_per_watt == 0.1
    with pytest.raises(UnitError):
        build_scenario(apply_overrides(parse_entries(MINIMAL), ["sail.h=2"]))


def test_dump_load_fixed_point():
    sc = _scenario(MINIMAL + "[techcurve]\na1_base = 100 usd/W\n")
    text = dump_scenario(sc)
    again = build_scenario(parse_entries(text))
    assert again == sc
    assert dump_scenario(again) == text


def test_load_scenario_from_file(tmp_path):
    path = tmp_path / "case.scn"
    path.write_text(MINIMAL)
    assert load_scenario(path).name == "t"


def test_scenario_with_replaces_nested_field():
    sc = _scenario()
    varied = scenario_with(sc, "metrics.a1", 0.5)
    assert varied.metrics.laser_usd_per_watt == 0.5
    assert varied.sail == sc.sail
    assert scenario_with(sc, "payload.m0", 2e-3).payload.mass == 2e-3


def test_sweep_grids():
    lin = SweepSpec("metrics.a1", 1.0, 3.0, 5)
    assert lin.grid() == pytest.approx([1.0, 1.5, 2.0, 2.5, 3.0])
    log = SweepSpec("array.d", 1.0, 100.0, 3, scale="log")
    assert log.grid() == pytest.approx([1.0, 10.0, 100.0])


def test_sweep_validation():
    with pytest.raises(ValidationError):
        SweepSpec("name", 0.0, 1.0, 3)
    with pytest.raises(ValidationError):
        SweepSpec("array.d", 5.0, 1.0, 3)
    with pytest.raises(ValidationError):
        SweepSpec("array.d", 1.0, 2.0, 1)
    with pytest.raises(ValidationError):
        SweepSpec("array.d", -1.0, 2.0, 3, scale="log")


def test_csv_output_deterministic():
    rows = [{"a": 1.0, "b": 0.1}, {"a": 2.0, "b": 1e22}]
    bufs = []
    for _ in range(2):
        buf = io.StringIO()
        write_results(rows, "csv", buf)
        bufs.append(buf.getvalue())
    assert bufs[0] == bufs[1]
    assert bufs[0] == "a,b\n1.0,0.1\n2.0,1e+22\n"


def test_csv_floats_round_trip():
    value = 193085264928.40485
    buf = io.StringIO()
    write_results([{"x": value}], "csv", buf)
    cell = buf.getvalue().splitlines()[1]
    assert float(cell) == value


def test_csv_rejects_ragged_records():
    with pytest.raises(ValidationError, match="homogeneous"):
        write_results([{"a": 1}, {"b": 2}], "csv", io.StringIO())


def test_json_output(tmp_path):
    path = tmp_path / "out.json"
    n = write_results([{"a": 1.5}], "json", str(path))
    data = path.read_bytes()
    assert len(data) == n
    assert data.endswith(b"\n")
    assert b"\r" not in data
    assert json.loads(data) == [{"a": 1.5}]


def test_unwritable_destination(tmp_path):
    with pytest.raises(ValidationError, match="cannot write"):
        write_results([{"a": 1}], "json", str(tmp_path / "no" / "dir" / "x.json"))
