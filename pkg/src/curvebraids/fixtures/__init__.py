"""Bundled regression data: band representations of the full twist, branches and curves.

Band representations are checked against their stated product (``delta2``, or
``delta`` for a factorization of the half twist whose square is used) when
loaded.  A failed check does not stop loading; the fixture is marked
unverified and a :class:`FixtureCheckWarning` is issued, so the raw
transcription stays available for inspection.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field
from pathlib import Path

from ..artin import braids_equal
from ..braid import BandRepresentation, delta, delta_squared
from ..errors import FormatError
from ..formats import from_json, parse_branch, parse_brep
from ..monodromy import PolyCurve
from ..puiseux import BranchParam

__all__ = [
    "FIXTURE_DIR",
    "FixtureCheckWarning",
    "BandFixture",
    "BranchFixture",
    "PolyFixture",
    "FixtureSet",
    "fixture_files",
    "load_fixture_file",
    "load_fixtures",
    "get_fixture",
]

FIXTURE_DIR = Path(__file__).resolve().parent


class FixtureCheckWarning(UserWarning):
    """A band-representation fixture does not multiply to its stated product."""


@dataclass(frozen=True)
class BandFixture:
    name: str
    brep: BandRepresentation
    product: str
    verified: bool
    expect: dict = field(default_factory=dict, compare=False)
    notation: str = ""

    def group_brep(self) -> BandRepresentation:
        """The band representation of the full twist: ``brep``, or ``brep`` twice
        when the fixture factors the half twist."""
        if self.product == "delta":
            return BandRepresentation(self.brep.strands, self.brep.bands * 2)
        return self.brep


@dataclass(frozen=True)
class BranchFixture:
    name: str
    branch: BranchParam
    expect: dict = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class PolyFixture:
    name: str
    poly: PolyCurve
    expect: dict = field(default_factory=dict, compare=False)


@dataclass
class FixtureSet:
    bands: dict[str, BandFixture] = field(default_factory=dict)
    branches: dict[str, BranchFixture] = field(default_factory=dict)
    polys: dict[str, PolyFixture] = field(default_factory=dict)

    def names(self) -> list[str]:
        return [*self.bands, *self.branches, *self.polys]

    def __len__(self):
        return len(self.bands) + len(self.branches) + len(self.polys)

    def __getitem__(self, name):
        for table in (self.bands, self.branches, self.polys):
            if name in table:
                return table[name]
        raise KeyError(name)


def _check_product(brep: BandRepresentation, product: str) -> bool:
    n = brep.strands
    if product == "delta2":
        target = delta_squared(n)
    elif product == "delta":
        target = delta(n)
    else:
        raise FormatError(f"unknown product {product!r}")
    return braids_equal(brep.braid(), target)


def _read(path: Path):
    try:
        return json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise FormatError(f"{path.name}: {exc}") from None


def _entry_name(entry):
    return entry.get("name", "?") if isinstance(entry, dict) else "?"


def _load_file(path: Path, fs: FixtureSet, check: bool) -> None:
    data = _read(path)
    if not isinstance(data, dict):
        raise FormatError(f"{path.name}: top level must be an object")
    entry = None
    try:
        for entry in data.get("band_representations", ()):
            brep = parse_brep(entry["brep"])
            product = entry.get("product", "delta2")
            ok = _check_product(brep, product) if check else True
            if not ok:
                warnings.warn(
                    f"fixture {entry['name']} does not multiply to {product}",
                    FixtureCheckWarning,
                    stacklevel=3,
                )
            fs.bands[entry["name"]] = BandFixture(
                entry["name"], brep, product, ok, entry.get("expect", {}), entry.get("notation", "")
            )
        for entry in data.get("branches", ()):
            fs.branches[entry["name"]] = BranchFixture(
                entry["name"], parse_branch(entry["branch"]), entry.get("expect", {})
            )
        for entry in data.get("polynomials", ()):
            poly = from_json({**entry["poly"], "type": "poly"})
            fs.polys[entry["name"]] = PolyFixture(entry["name"], poly, entry.get("expect", {}))
    except (KeyError, TypeError, AttributeError, ValueError) as exc:
        raise FormatError(f"{path.name}: malformed entry {_entry_name(entry)!r} ({exc})") from None


def fixture_files(directory=None) -> list[Path]:
    root = Path(directory) if directory is not None else FIXTURE_DIR
    files = sorted(root.glob("*.json"))
    if not files:
        raise FileNotFoundError(f"no fixture files in {root}")
    return files


def load_fixtures(directory=None, check: bool = True) -> FixtureSet:
    """Load every ``*.json`` fixture file in ``directory`` (default: bundled)."""
    fs = FixtureSet()
    for path in fixture_files(directory):
        _load_file(path, fs, check)
    return fs


def load_fixture_file(path, check: bool = True) -> FixtureSet:
    fs = FixtureSet()
    _load_file(Path(path), fs, check)
    return fs


def get_fixture(name: str, directory=None):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", FixtureCheckWarning)
        return load_fixtures(directory)[name]
