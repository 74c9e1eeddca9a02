import json
import math

import numpy as np
import pytest

from su3hom.coincidence import DelayPair, rate_p111
from su3hom.landscape import (
    AxisSpec,
    Landscape,
    ScenarioError,
    find_dips,
    load_scenario,
    preset,
    read_csv,
    read_pgm,
    scenario_to_dict,
    sweep,
    write_outputs,
)
from su3hom.unitary import build_su3

from conftest import OMEGA_A, OMEGA_B, OMEGA_C


def small(name, points=21, engine="analytic"):
    return preset(name, points=points, engine=engine)


def test_preset_fig1a():
    s = preset("fig1a")
    assert s.omega.as_tuple() == pytest.approx(OMEGA_A)
    assert (s.setup.source.carrier, s.setup.source.width) == (0.0, 0.1)
    assert [(d.carrier, d.width) for d in s.setup.detectors] == [(0, 0.1), (0, 0.1), (0, 1.0)]
    assert s.t1.values.size == 121
    assert s.t1.values[0] == pytest.approx(-30) and s.t1.values[-1] == pytest.approx(30)
    assert 0.0 in s.t1.values


def test_preset_fig1b_fig1c_fig1d():
    b = preset("fig1b")
    assert b.omega.as_tuple() == pytest.approx(OMEGA_B)
    assert b.setup.source.width == 1.0
    assert [d.width for d in b.setup.detectors] == [0.1, 0.1, 0.01]
    c = preset("fig1c")
    assert c.omega.as_tuple() == pytest.approx(OMEGA_C)
    assert c.omega.beta2 == pytest.approx(2 * math.acos(1 / math.sqrt(3)))
    assert [(d.carrier, d.width) for d in c.setup.detectors] == [(3, 0.2), (2, 0.2), (1, 0.2)]
    assert (c.setup.source.carrier, c.setup.source.width) == (0, 0.5)
    d = preset("fig1d")
    assert d.omega == preset("fig1a").omega
    assert (d.setup.source.carrier, d.setup.source.width) == (0.1, 0.1)
    assert [(x.carrier, x.width) for x in d.setup.detectors] == [(0.95, 0.11), (0, 0.1), (0.99, 0.11)]
    assert any("0.11" in n for n in d.notes)
    with pytest.raises(ScenarioError):
        preset("fig2")


def test_scenario_file_round_trip(tmp_path):
    s = preset("fig1a")
    path = tmp_path / "fig1a.json"
    path.write_text(json.dumps(scenario_to_dict(s)))
    loaded = load_scenario(path)
    assert loaded.omega == s.omega
    assert loaded.setup == s.setup
    np.testing.assert_array_equal(loaded.t1.values, s.t1.values)


def test_shipped_scenarios_match_presets():
    from pathlib import Path

    root = Path(__file__).resolve().parents[1] / "scenarios"
    for name in ("fig1a", "fig1b", "fig1c", "fig1d"):
        loaded = load_scenario(root / f"{name}.json")
        assert loaded.omega == preset(name).omega
        assert loaded.setup == preset(name).setup


def write(tmp_path, data):
    path = tmp_path / "s.json"
    path.write_text(json.dumps(data))
    return path


def test_missing_detector_named(tmp_path):
    data = scenario_to_dict(preset("fig1a"))
    data["detectors"] = data["detectors"][:2]
    with pytest.raises(ScenarioError, match=r"detectors\[2\]"):
        load_scenario(write(tmp_path, data))


def test_negative_width_named(tmp_path):
    data = scenario_to_dict(preset("fig1a"))
    data["detectors"][1]["width"] = -1
    with pytest.raises(ScenarioError, match=r"detectors\[1\]\.width.*> 0"):
        load_scenario(write(tmp_path, data))


@pytest.mark.parametrize(
    "mutate,match",
    [
        (lambda d: d.pop("omega"), "omega"),
        (lambda d: d.__setitem__("omega", [0] * 7), "omega"),
        (lambda d: d["source"].pop("carrier"), r"source\.carrier"),
        (lambda d: d["grid"].pop("t2"), r"grid\.t2"),
        (lambda d: d["grid"].__setitem__("t1", [0, 1, 0]), "step"),
        (lambda d: d.__setitem__("engine", "magic"), "engine"),
        (lambda d: d["source"].__setitem__("width", "wide"), r"source\.width"),
    ],
)
def test_invalid_fields(tmp_path, mutate, match):
    data = scenario_to_dict(preset("fig1a"))
    mutate(data)
    with pytest.raises(ScenarioError, match=match):
        load_scenario(write(tmp_path, data))


def test_unreadable_scenario(tmp_path):
    with pytest.raises(ScenarioError):
        load_scenario(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ScenarioError, match="invalid JSON"):
        load_scenario(bad)


def test_axis_values():
    ax = AxisSpec(-1.0, 1.0, 0.25)
    np.testing.assert_allclose(ax.values, np.linspace(-1, 1, 9))


def test_sweep_matches_pointwise():
    s = small("fig1c", points=11)
    land = sweep(s)
    r = build_su3(s.omega)
    floor = 1e-14 * land.rates.max()  # rounding of the vanishing permanent
    for i, a in enumerate(land.tau1):
        for j, b in enumerate(land.tau2):
            assert land.rates[i, j] == pytest.approx(rate_p111(r, s.setup, DelayPair(a, b)), rel=1e-12, abs=floor)


def test_sweep_deterministic_across_jobs():
    s = small("fig1d", points=41)
    assert np.array_equal(sweep(s, jobs=1).rates, sweep(s, jobs=3).rates)


def test_quadrature_engine_agrees():
    s = small("fig1b", points=5, engine="quadrature")
    q = sweep(s).rates
    a = sweep(preset("fig1b", points=5)).rates
    np.testing.assert_allclose(q, a, rtol=1e-6, atol=1e-12 * a.max())


def test_fig_features_small_grids():
    a = sweep(small("fig1a"))
    assert a.rate_at(0, 0) < 1e-12
    b = sweep(small("fig1b"))
    assert b.rate_at(0, 0) > 0
    assert 0 <= a.rates.min() and a.rates.max() <= 1


def test_find_dips_fig1c():
    land = sweep(preset("fig1c", points=61))
    dips = find_dips(land)
    off_origin = [d for d in dips if math.hypot(d.tau1, d.tau2) > 1.0]
    assert off_origin and off_origin[0].relative < 1e-20


def test_outputs_zero_grid(tmp_path):
    s = small("fig1a", points=3)
    land = Landscape(np.array([-1.0, 0, 1]), np.array([-1.0, 0, 1]), np.zeros((3, 3)), s)
    write_outputs(land, tmp_path / "r.csv", tmp_path / "r.json", tmp_path / "r.pgm")
    raw = (tmp_path / "r.pgm").read_bytes()
    assert raw == b"P5\n3 3\n255\n" + bytes(9)


def test_outputs_round_trip(tmp_path):
    land = sweep(small("fig1a", points=15))
    paths = tmp_path / "a.csv", tmp_path / "a.json", tmp_path / "a.pgm"
    write_outputs(land, *paths)
    header = paths[0].read_text().splitlines()[0]
    assert header == "tau1,tau2,rate"
    rows = paths[0].read_text().splitlines()[1:]
    assert len(rows) == 15 * 15
    # tau1 outer, tau2 inner
    assert rows[0].split(",")[:2] == ["-30", "-30"] and rows[1].split(",")[:2] == ["-30", "-25.7142857143"]
    tau1, tau2, rates = read_csv(paths[0])
    written = np.vectorize(lambda x: float(f"{x:.12g}"))(land.rates)
    assert np.array_equal(rates, written)
    np.testing.assert_allclose(rates, land.rates, rtol=1e-11, atol=0)
    origin = [r for r in rows if r.startswith("0,0,")]
    assert float(origin[0].split(",")[2]) < 1e-12

    meta = json.loads(paths[1].read_text())
    assert meta["scenario"]["name"] == "fig1a"
    assert meta["extrema"]["max"]["rate"] == pytest.approx(land.rates.max())
    assert meta["shape"] == [15, 15]

    img = read_pgm(paths[2])
    assert img.max() == 255
    # tau1 runs along columns, tau2 down the rows
    i, j = np.unravel_index(np.argmax(land.rates), land.rates.shape)
    assert img[j, i] == 255


def test_heatmap_orientation(tmp_path):
    s = small("fig1a", points=3)
    rates = np.zeros((2, 3))
    rates[1, 0] = 0.5  # tau1 index 1, tau2 index 0
    land = Landscape(np.array([0.0, 1.0]), np.array([0.0, 1.0, 2.0]), rates, s)
    write_outputs(land, tmp_path / "o.csv", tmp_path / "o.json", tmp_path / "o.pgm")
    img = read_pgm(tmp_path / "o.pgm")
    assert img.shape == (3, 2)
    assert img[0, 1] == 255 and img.sum() == 255


def test_write_errors_carry_path(tmp_path):
    land = sweep(small("fig1a", points=3))
    with pytest.raises(OSError, match="nope"):
        write_outputs(land, tmp_path / "nope" / "x.csv", tmp_path / "x.json")
