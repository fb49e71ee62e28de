"""Bundled snapshot series.

These are synthetic stand-ins shaped like the usual US aggregates (see
tools/make_snapshots.py in the source tree for how they are built).
They exist so the demos and the command line have something realistic
to chew on without network access.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .errors import DomainError
from .paramfile import load_params
from .timeseries import TimeSeries, load_csv

__all__ = [
    "SeriesInfo",
    "SERIES",
    "series_names",
    "bundled_path",
    "bundled_series",
    "bundled_params",
]


@dataclass(frozen=True)
class SeriesInfo:
    filename: str
    units: str
    description: str


SERIES: dict[str, SeriesInfo] = {
    "gdp": SeriesInfo("gdp.csv", "G$/yr", "nominal output, quarterly"),
    "mbcurrcir": SeriesInfo("mbcurrcir.csv", "G$", "currency in circulation, monthly"),
    "ambsl": SeriesInfo("ambsl.csv", "G$", "monetary base, monthly"),
    "pcepilfe": SeriesInfo("pcepilfe.csv", "index (2009=100)", "core consumption deflator, monthly"),
    "cpilfesl": SeriesInfo("cpilfesl.csv", "index (1982-84=100)", "core consumer prices, monthly"),
    "gs10": SeriesInfo("gs10.csv", "%/yr", "long-term treasury rate, monthly"),
    "tb3ms": SeriesInfo("tb3ms.csv", "%/yr", "short-term bill rate, monthly"),
    "hours": SeriesInfo("hours.csv", "index (2009=100)", "aggregate hours, quarterly"),
    "rknanpusa": SeriesInfo("rknanpusa.csv", "G$ (2011)", "real capital stock, annual"),
}


def series_names() -> tuple[str, ...]:
    return tuple(SERIES)


def _info(name: str) -> SeriesInfo:
    try:
        return SERIES[name]
    except KeyError:
        known = ", ".join(SERIES)
        raise DomainError(f"unknown bundled series {name!r} (known: {known})") from None


def bundled_path(name: str):
    """Context manager yielding a filesystem path to the named snapshot."""
    info = _info(name)
    return resources.as_file(resources.files("infoeq").joinpath("data", info.filename))


def bundled_series(name: str) -> TimeSeries:
    info = _info(name)
    with bundled_path(name) as path:
        return load_csv(path, name=name, units=info.units)


def bundled_params() -> dict[str, float]:
    """Calibration constants matched to the bundled snapshots."""
    ref = resources.files("infoeq").joinpath("data", "us_params.txt")
    with resources.as_file(ref) as path:
        return load_params(path)
