"""Run every bundled fixture through its checks."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .braid import closure_invariants
from .errors import FormatError
from .fixtures import (
    BandFixture,
    BranchFixture,
    FixtureCheckWarning,
    PolyFixture,
    fixture_files,
    load_fixture_file,
)
from .knotgroup import (
    abelianization,
    coset_enumerate,
    count_homs_to_symmetric,
    projective_presentation,
    tietze_simplify,
)
from .monodromy import track_polynomial
from .puiseux import branch_genus, cable_cascade, cascade_braid, milnor_number

__all__ = ["FixtureResult", "check_fixture", "fixtures_selftest"]


@dataclass(frozen=True)
class FixtureResult:
    name: str
    ok: bool
    failures: tuple[str, ...] = ()

    def __str__(self):
        if self.ok:
            return f"PASS {self.name}"
        return f"FAIL {self.name}: " + "; ".join(self.failures)


def _compare(failures, label, got, want):
    if got != want:
        failures.append(f"{label} = {got}, expected {want}")


def _check_bands(f: BandFixture, failures, max_cosets):
    if not f.verified:
        failures.append(f"product is not {f.product}")
    e = f.expect
    p = projective_presentation(f.group_brep(), check=False)
    ab = abelianization(p)
    if "torsion" in e:
        _compare(failures, "torsion", list(ab.torsion), e["torsion"])
    if "free_rank" in e:
        _compare(failures, "free rank", ab.free_rank, e["free_rank"])
    if "order" in e:
        _compare(failures, "order", str(coset_enumerate(p, max_cosets)), str(e["order"]))
    if "order_with_squares" in e:
        sq = p.with_relators([(i, i) for i in range(1, p.generators + 1)])
        _compare(failures, "order with squares", str(coset_enumerate(sq, max_cosets)), str(e["order_with_squares"]))
    if "simplified_generators" in e or "homs_s3" in e:
        s = tietze_simplify(p)
        if "simplified_generators" in e:
            _compare(failures, "simplified generators", s.generators, e["simplified_generators"])
        if "homs_s3" in e:
            _compare(failures, "homs to S3", count_homs_to_symmetric(s, 3), e["homs_s3"])


def _check_branch(f: BranchFixture, failures):
    e = f.expect
    c = cable_cascade(f.branch)
    if "cascade" in e:
        _compare(failures, "cascade", [list(pq) for pq in c.pairs], e["cascade"])
    if "milnor" in e:
        _compare(failures, "milnor number", milnor_number(f.branch), e["milnor"])
    if "genus" in e:
        _compare(failures, "genus", branch_genus(f.branch), e["genus"])
    if "braid" in e:
        _compare(failures, "braid", str(cascade_braid(c)), e["braid"])


def _check_poly(f: PolyFixture, failures):
    e = f.expect
    inv = closure_invariants(track_polynomial(f.poly).word)
    if "exponent_sum" in e:
        _compare(failures, "exponent sum", inv.exponent_sum, e["exponent_sum"])
    if "components" in e:
        _compare(failures, "components", inv.components, e["components"])
    if "linking" in e:
        _compare(failures, "linking", list(inv.linking_multiset()), e["linking"])
    if "self_windings" in e:
        _compare(failures, "self-windings", list(inv.self_windings or ()), e["self_windings"])


def check_fixture(f, max_cosets=None) -> FixtureResult:
    failures: list[str] = []
    try:
        if isinstance(f, BandFixture):
            _check_bands(f, failures, max_cosets)
        elif isinstance(f, BranchFixture):
            _check_branch(f, failures)
        elif isinstance(f, PolyFixture):
            _check_poly(f, failures)
    except Exception as exc:  # a crash is reported as that fixture's failure
        failures.append(f"{type(exc).__name__}: {exc}")
    return FixtureResult(f.name, not failures, tuple(failures))


def fixtures_selftest(directory=None, max_cosets=None) -> list[FixtureResult]:
    """Check every fixture.  A file that cannot be read is reported as a failure
    under its own name and the remaining files are still checked."""
    results = []
    for path in fixture_files(directory):
        try:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", FixtureCheckWarning)
                fs = load_fixture_file(path)
        except FormatError as exc:
            msg = str(exc).removeprefix(f"{path.name}: ")
            results.append(FixtureResult(path.name, False, (msg,)))
            continue
        results.extend(check_fixture(fs[name], max_cosets) for name in fs.names())
    return results
