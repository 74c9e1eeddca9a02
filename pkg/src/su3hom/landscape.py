"""Scenarios, built-in presets, delay-grid sweeps and file output."""

from __future__ import annotations

import csv
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np
from scipy.ndimage import maximum_filter, minimum_filter
from scipy.optimize import least_squares

from .coincidence import DelayPair, amplitude3, rate_p111_grid
from .oracle import quadrature_rate
from .spectral import GaussianSpectrum, SpectralSetup
from .unitary import OmegaSU3, build_su3

__all__ = [
    "ScenarioError",
    "AxisSpec",
    "Scenario",
    "Landscape",
    "PRESETS",
    "preset",
    "load_scenario",
    "scenario_to_dict",
    "sweep",
    "Dip",
    "find_dips",
    "write_outputs",
    "read_csv",
    "read_pgm",
]

ENGINES = ("analytic", "quadrature")
PRESET_POINTS = 121
PRESET_SPAN = 3.0  # axes cover +/- PRESET_SPAN / smallest width


class ScenarioError(ValueError):
    """Invalid or incomplete scenario description."""


@dataclass(frozen=True)
class AxisSpec:
    lo: float
    hi: float
    step: float

    def __post_init__(self):
        for name in ("lo", "hi", "step"):
            if not math.isfinite(getattr(self, name)):
                raise ScenarioError(f"grid {name} must be finite")
        if self.step <= 0:
            raise ScenarioError(f"grid step must be > 0, got {self.step}")
        if self.hi < self.lo:
            raise ScenarioError(f"grid range is empty: [{self.lo}, {self.hi}]")

    @property
    def values(self) -> np.ndarray:
        count = int(round((self.hi - self.lo) / self.step)) + 1
        return np.linspace(self.lo, self.lo + (count - 1) * self.step, count)

    @classmethod
    def symmetric(cls, half_width: float, points: int) -> "AxisSpec":
        return cls(-half_width, half_width, 2 * half_width / (points - 1))


@dataclass(frozen=True)
class Scenario:
    omega: OmegaSU3
    setup: SpectralSetup
    t1: AxisSpec
    t2: AxisSpec
    engine: str = "analytic"
    name: str = "custom"
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if self.engine not in ENGINES:
            raise ScenarioError(f"engine must be one of {ENGINES}, got {self.engine!r}")
        if self.setup.ports != 3:
            raise ScenarioError(f"scenario needs 3 detectors, got {self.setup.ports}")


@dataclass
class Landscape:
    tau1: np.ndarray
    tau2: np.ndarray
    rates: np.ndarray  # rates[i, j] at (tau1[i], tau2[j])
    scenario: Scenario
    extrema: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.rates.shape != (self.tau1.size, self.tau2.size):
            raise ValueError("rate matrix does not match the axes")
        if not self.extrema:
            imin = np.unravel_index(np.argmin(self.rates), self.rates.shape)
            imax = np.unravel_index(np.argmax(self.rates), self.rates.shape)
            self.extrema = {
                "min": {
                    "rate": float(self.rates[imin]),
                    "tau1": float(self.tau1[imin[0]]),
                    "tau2": float(self.tau2[imin[1]]),
                },
                "max": {
                    "rate": float(self.rates[imax]),
                    "tau1": float(self.tau1[imax[0]]),
                    "tau2": float(self.tau2[imax[1]]),
                },
            }

    def rate_at(self, tau1: float, tau2: float) -> float:
        i = int(np.argmin(np.abs(self.tau1 - tau1)))
        j = int(np.argmin(np.abs(self.tau2 - tau2)))
        return float(self.rates[i, j])


_HALF_PI = math.pi / 2

# name -> (omega, source, detectors, notes)
_PRESET_TABLE = {
    "fig1a": (
        (0, _HALF_PI, _HALF_PI, math.pi, 0, _HALF_PI, _HALF_PI, math.pi),
        (0.0, 0.1),
        ((0.0, 0.1), (0.0, 0.1), (0.0, 1.0)),
        (),
    ),
    "fig1b": (
        (0, _HALF_PI, 0, _HALF_PI, 0, _HALF_PI, 0, 0),
        (0.0, 1.0),
        ((0.0, 0.1), (0.0, 0.1), (0.0, 0.01)),
        (),
    ),
    "fig1c": (
        (0, _HALF_PI, _HALF_PI, 2 * math.acos(1 / math.sqrt(3)), 0, _HALF_PI, 0, 0),
        (0.0, 0.5),
        ((3.0, 0.2), (2.0, 0.2), (1.0, 0.2)),
        (),
    ),
    "fig1d": (
        (0, _HALF_PI, _HALF_PI, math.pi, 0, _HALF_PI, _HALF_PI, math.pi),
        (0.1, 0.1),
        ((0.95, 0.11), (0.0, 0.1), (0.99, 0.11)),
        ("detector 3 width set to 0.11 (mirroring detector 1); a zero width "
         "has no normalizable Gaussian",),
    ),
}
PRESETS = tuple(_PRESET_TABLE)


def preset(
    name: str,
    points: int = PRESET_POINTS,
    span: float = PRESET_SPAN,
    engine: str = "analytic",
) -> Scenario:
    """Built-in parameter set; each delay axis covers [-span/w_min, span/w_min]."""
    try:
        omega, src, dets, notes = _PRESET_TABLE[name]
    except KeyError:
        raise ScenarioError(f"unknown preset {name!r}; choose from {PRESETS}") from None
    setup = SpectralSetup(GaussianSpectrum(*src), tuple(GaussianSpectrum(*d) for d in dets))
    half = span / min(s.width for s in setup.spectra)
    axis = AxisSpec.symmetric(half, points)
    return Scenario(
        omega=OmegaSU3(*omega),
        setup=setup,
        t1=axis,
        t2=axis,
        engine=engine,
        name=name,
        notes=notes + (f"delay axes span +/-{span}/min(width) with {points} points",),
    )


def _number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ScenarioError(f"{where}: expected a number, got {value!r}")
    if not math.isfinite(value):
        raise ScenarioError(f"{where}: must be finite, got {value!r}")
    return float(value)


def _require(mapping: dict, key: str, where: str):
    if not isinstance(mapping, dict) or key not in mapping:
        raise ScenarioError(f"missing field {where}")
    return mapping[key]


def _spectrum(obj, where: str) -> GaussianSpectrum:
    carrier = _number(_require(obj, "carrier", f"{where}.carrier"), f"{where}.carrier")
    width = _number(_require(obj, "width", f"{where}.width"), f"{where}.width")
    if width <= 0:
        raise ScenarioError(f"{where}.width: width must be > 0, got {width}")
    return GaussianSpectrum(carrier, width)


def _axis(obj, key: str) -> AxisSpec:
    where = f"grid.{key}"
    triple = _require(obj, key, where)
    if not isinstance(triple, list) or len(triple) != 3:
        raise ScenarioError(f"{where}: expected [lo, hi, step]")
    lo, hi, step = (_number(v, f"{where}[{i}]") for i, v in enumerate(triple))
    return AxisSpec(lo, hi, step)


def scenario_from_dict(data: dict, name: str = "custom") -> Scenario:
    if not isinstance(data, dict):
        raise ScenarioError("scenario must be a JSON object")
    omega = _require(data, "omega", "omega")
    if not isinstance(omega, list) or len(omega) != 8:
        raise ScenarioError("omega: expected a list of 8 angles")
    omega = OmegaSU3(*(_number(v, f"omega[{i}]") for i, v in enumerate(omega)))
    source = _spectrum(_require(data, "source", "source"), "source")
    dets = _require(data, "detectors", "detectors")
    if not isinstance(dets, list):
        raise ScenarioError("detectors: expected a list")
    for i in range(3):
        if i >= len(dets):
            raise ScenarioError(f"missing field detectors[{i}]")
    if len(dets) > 3:
        raise ScenarioError(f"detectors: expected 3 entries, got {len(dets)}")
    detectors = tuple(_spectrum(d, f"detectors[{i}]") for i, d in enumerate(dets))
    grid = _require(data, "grid", "grid")
    engine = data.get("engine", "analytic")
    if engine not in ENGINES:
        raise ScenarioError(f"engine: must be one of {ENGINES}, got {engine!r}")
    return Scenario(
        omega=omega,
        setup=SpectralSetup(source, detectors),
        t1=_axis(grid, "t1"),
        t2=_axis(grid, "t2"),
        engine=engine,
        name=str(data.get("name", name)),
        notes=tuple(data.get("notes", ())),
    )


def load_scenario(path) -> Scenario:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except OSError as exc:
        raise ScenarioError(f"{path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"{path}: invalid JSON ({exc})") from exc
    return scenario_from_dict(data, name=path.stem)


def scenario_to_dict(s: Scenario) -> dict:
    as_dict = lambda g: {"carrier": g.carrier, "width": g.width}  # noqa: E731
    return {
        "name": s.name,
        "omega": list(s.omega.as_tuple()),
        "source": as_dict(s.setup.source),
        "detectors": [as_dict(d) for d in s.setup.detectors],
        "grid": {
            "t1": [s.t1.lo, s.t1.hi, s.t1.step],
            "t2": [s.t2.lo, s.t2.hi, s.t2.step],
        },
        "engine": s.engine,
        "notes": list(s.notes),
    }


def _rows(s: Scenario, tau1_chunk: np.ndarray) -> np.ndarray:
    r = build_su3(s.omega)
    tau2 = s.t2.values
    if s.engine == "analytic":
        return rate_p111_grid(r, s.setup, tau1_chunk, tau2)
    return np.array(
        [[quadrature_rate(r, s.setup, DelayPair(a, b)) for b in tau2] for a in tau1_chunk]
    )


def sweep(s: Scenario, jobs: int = 1) -> Landscape:
    """Evaluate the rate on the scenario grid; output does not depend on ``jobs``."""
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    tau1 = s.t1.values
    chunks = [c for c in np.array_split(tau1, max(jobs, 1) * 4) if c.size]
    if jobs == 1:
        parts = [_rows(s, c) for c in chunks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_rows, [s] * len(chunks), chunks))
    return Landscape(tau1=tau1, tau2=s.t2.values, rates=np.vstack(parts), scenario=s)


@dataclass(frozen=True)
class Dip:
    tau1: float
    tau2: float
    rate: float
    relative: float  # rate / landscape maximum


def find_dips(landscape: Landscape, support: float = 1e-3) -> list[Dip]:
    """Refine interior local minima of the grid into coincidence dips.

    Only minima whose 5x5 neighbourhood reaches ``support`` times the
    landscape maximum are kept, which skips flat underflow regions. Each
    candidate is polished by solving Re A = Im A = 0 in least squares.
    Sorted by depth, deepest first.
    """
    rates = landscape.rates
    top = float(rates.max())
    if top <= 0:
        return []
    mask = (rates == minimum_filter(rates, size=3, mode="nearest")) & (
        maximum_filter(rates, size=5, mode="nearest") > support * top
    )
    mask[[0, -1], :] = False
    mask[:, [0, -1]] = False
    s = landscape.scenario
    r = build_su3(s.omega)
    scale = math.sqrt(top)

    def residual(x):
        a = amplitude3(r, s.setup, DelayPair(*x)) / scale
        return [a.real, a.imag]

    dips = []
    for i, j in np.argwhere(mask):
        x0 = np.array([landscape.tau1[i], landscape.tau2[j]])
        res = least_squares(residual, x0, xtol=1e-15, ftol=1e-15, gtol=1e-15)
        # keep the refined point near its seed cell
        if np.max(np.abs(res.x - x0)) > 2 * max(s.t1.step, s.t2.step):
            res.x = x0
        rate = abs(amplitude3(r, s.setup, DelayPair(*res.x))) ** 2
        dips.append(Dip(float(res.x[0]), float(res.x[1]), rate, rate / top))
    dips.sort(key=lambda d: d.relative)
    return dips


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def write_outputs(
    landscape: Landscape,
    csv_path,
    meta_path,
    heatmap_path=None,
    dips: Optional[list[Dip]] = None,
) -> None:
    """CSV (tau1 outer, tau2 inner), JSON metadata and an optional 8-bit P5 heatmap."""
    csv_path, meta_path = Path(csv_path), Path(meta_path)
    try:
        with csv_path.open("w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["tau1", "tau2", "rate"])
            for i, t1 in enumerate(landscape.tau1):
                for j, t2 in enumerate(landscape.tau2):
                    w.writerow([_fmt(t1), _fmt(t2), _fmt(landscape.rates[i, j])])
    except OSError as exc:
        raise OSError(f"cannot write CSV {csv_path}: {exc}") from exc

    meta = {
        "scenario": scenario_to_dict(landscape.scenario),
        "shape": list(landscape.rates.shape),
        "extrema": landscape.extrema,
        "csv": csv_path.name,
    }
    if dips is not None:
        meta["dips"] = [vars(d) for d in dips]
    if heatmap_path is not None:
        meta["heatmap"] = Path(heatmap_path).name
    try:
        meta_path.write_text(json.dumps(meta, indent=2) + "\n")
    except OSError as exc:
        raise OSError(f"cannot write metadata {meta_path}: {exc}") from exc

    if heatmap_path is not None:
        heatmap_path = Path(heatmap_path)
        # tau1 -> columns, tau2 -> rows
        img = landscape.rates.T
        top = img.max()
        pix = np.zeros(img.shape, dtype=np.uint8)
        if top > 0:
            pix = np.clip(np.rint(img / top * 255), 0, 255).astype(np.uint8)
        header = f"P5\n{img.shape[1]} {img.shape[0]}\n255\n".encode("ascii")
        try:
            heatmap_path.write_bytes(header + pix.tobytes())
        except OSError as exc:
            raise OSError(f"cannot write heatmap {heatmap_path}: {exc}") from exc


def read_csv(path) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Inverse of the CSV part of :func:`write_outputs`."""
    data = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
    tau1 = np.unique(data[:, 0])
    tau2 = np.unique(data[:, 1])
    return tau1, tau2, data[:, 2].reshape(tau1.size, tau2.size)


def read_pgm(path) -> np.ndarray:
    raw = Path(path).read_bytes()
    parts = raw.split(b"\n", 3)
    if parts[0] != b"P5":
        raise ValueError(f"{path}: not a binary PGM")
    width, height = map(int, parts[1].split())
    return np.frombuffer(parts[3], dtype=np.uint8).reshape(height, width)
