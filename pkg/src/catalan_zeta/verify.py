"""Exhaustive enumeration and law checking over all objects of a size.

Each law compares two routes through the bijections on every Dyck path or
plane tree of size ``n``.  The maps a law uses are looked up by name in a
``maps`` dictionary, so a test can swap in a deliberately wrong version and
confirm the law notices.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import islice
from multiprocessing import get_context
from typing import Callable, Iterator

from . import core, dyck_maps, tree_maps
from .core import DyckPath, PlaneTree, catalan

JOBS_ENV = "CATALAN_ZETA_JOBS"
_BATCH = 2048


def enumerate_dyck(n: int) -> Iterator[DyckPath]:
    """All Dyck paths of size ``n`` in lexicographic order ('E' < 'N')."""
    if n < 0:
        raise ValueError("n must be non-negative")
    steps: list[str] = []

    def rec(north: int, east: int):
        if north == n and east == n:
            yield DyckPath("".join(steps))
            return
        if east < north:
            steps.append("E")
            yield from rec(north, east + 1)
            steps.pop()
        if north < n:
            steps.append("N")
            yield from rec(north + 1, east)
            steps.pop()

    return rec(0, 0)


def enumerate_trees(n: int, maps: dict | None = None) -> Iterator[PlaneTree]:
    m = _maps(maps)
    return (m["lambda_steep"](d) for d in enumerate_dyck(n))


def enumerate_posets(n: int, maps: dict | None = None) -> Iterator[core.Poset]:
    m = _maps(maps)
    return (m["xi_poset"](t) for t in enumerate_trees(n, m))


DEFAULT_MAPS: dict[str, Callable] = {
    "phi": dyck_maps.phi,
    "psi": dyck_maps.psi,
    "psi_relation": dyck_maps.psi_relation,
    "zeta": dyck_maps.zeta,
    "zeta_oracle": dyck_maps.zeta_classical_oracle,
    "xi_poset": tree_maps.xi_poset,
    "lambda_poset": tree_maps.lambda_poset,
    "xi_steep": tree_maps.xi_steep,
    "lambda_steep": tree_maps.lambda_steep,
    "xi_bounce": tree_maps.xi_bounce,
    "lambda_bounce": tree_maps.lambda_bounce,
    "node_value": tree_maps.node_value,
}


def _maps(overrides: dict | None) -> dict:
    if not overrides:
        return DEFAULT_MAPS
    unknown = set(overrides) - set(DEFAULT_MAPS)
    if unknown:
        raise KeyError(f"unknown map name(s): {sorted(unknown)}")
    return {**DEFAULT_MAPS, **overrides}


# ---------------------------------------------------------------------------
# Reports


@dataclass
class Counterexample:
    input: str
    expected: str
    actual: str


@dataclass
class LawReport:
    law: str
    n: int
    checked: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)
    millis: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def merge(self, other: LawReport) -> None:
        self.checked += other.checked
        self.counterexamples.extend(other.counterexamples)
        self.millis += other.millis


# ---------------------------------------------------------------------------
# Per-object checks.  Each returns None on success or a Counterexample.


def _safe(fn, *args):
    try:
        return fn(*args)
    except Exception as exc:  # a crashing map is a counterexample, not a crash
        return f"<{type(exc).__name__}: {exc}>"


def _compare(inp, expected, actual):
    if expected != actual:
        return Counterexample(str(inp), str(expected), str(actual))
    return None


def _law_main(d: DyckPath, m):
    return _compare(d, _safe(m["zeta"], d), _safe(lambda x: m["phi"](m["psi"](x)), d))


def _law_poset_roundtrip(t: PlaneTree, m):
    back = _safe(lambda x: m["lambda_poset"](m["xi_poset"](x)), t)
    bad = _compare(t, t, back)
    if bad:
        return bad
    # the poset side comes from a different route so the check is not circular
    p = _safe(lambda x: m["psi"](m["xi_steep"](x)), t)
    if isinstance(p, str):
        return Counterexample(str(t), "a poset", p)
    return _compare(p, p, _safe(lambda x: m["xi_poset"](m["lambda_poset"](x)), p))


def _law_steep_roundtrip(d: DyckPath, m):
    bad = _compare(d, d, _safe(lambda x: m["xi_steep"](m["lambda_steep"](x)), d))
    if bad:
        return bad
    t = _safe(m["lambda_bounce"], d)
    return _compare(t, t, _safe(lambda x: m["lambda_steep"](m["xi_steep"](x)), t))


def _law_bounce_roundtrip(d: DyckPath, m):
    bad = _compare(d, d, _safe(lambda x: m["xi_bounce"](m["lambda_bounce"](x)), d))
    if bad:
        return bad
    t = _safe(m["lambda_steep"], d)
    return _compare(t, t, _safe(lambda x: m["lambda_bounce"](m["xi_bounce"](x)), t))


def _law_phi_bounce(t: PlaneTree, m):
    return _compare(t, _safe(m["xi_bounce"], t), _safe(lambda x: m["phi"](m["xi_poset"](x)), t))


def _law_psi_steep(d: DyckPath, m):
    return _compare(d, _safe(lambda x: m["xi_poset"](m["lambda_steep"](x)), d), _safe(m["psi"], d))


def _law_zeta_oracle(d: DyckPath, m):
    return _compare(d, _safe(m["zeta_oracle"], d), _safe(m["zeta"], d))


def _law_psi_valid(d: DyckPath, m):
    p = _safe(m["psi_relation"], d)
    if isinstance(p, str):
        return Counterexample(str(d), "unit interval order", p)
    if not core.is_strict_order(p):
        return Counterexample(str(d), "unit interval order", f"not a strict order: {p}")
    if not core.is_three_plus_one_free(p):
        return Counterexample(str(d), "unit interval order", f"contains 3+1: {p}")
    if not core.is_two_plus_two_free(p):
        return Counterexample(str(d), "unit interval order", f"contains 2+2: {p}")
    return None


def _law_lemma(t: PlaneTree, m):
    value = m["node_value"]
    if not _safe(tree_maps.check_parent_condition, t, value) is True:
        return Counterexample(str(t), "parent condition holds", "parent condition fails")
    base = t.max_arity + 2
    for gap, depth in tree_maps.parent_gaps(t, value):
        if not 1 < gap < 1 + Fraction(1, base ** (depth - 1)):
            return Counterexample(
                str(t), f"1 < gap < 1 + {base}^-{depth - 1}", f"gap {gap} at parent depth {depth}"
            )
    return None


# law name -> (object family, per-object check)
LAWS: dict[str, tuple[str, Callable]] = {
    "main": ("dyck", _law_main),
    "poset-roundtrip": ("tree", _law_poset_roundtrip),
    "steep-roundtrip": ("dyck", _law_steep_roundtrip),
    "bounce-roundtrip": ("dyck", _law_bounce_roundtrip),
    "phi-bounce": ("tree", _law_phi_bounce),
    "psi-steep": ("dyck", _law_psi_steep),
    "zeta-oracle": ("dyck", _law_zeta_oracle),
    "psi-valid": ("dyck", _law_psi_valid),
    "lemma": ("tree", _law_lemma),
    "count": ("poset", None),
}


def _check_batch(args):
    law, encodings, overrides = args
    family, check = LAWS[law]
    m = _maps(overrides)
    out = []
    for enc in encodings:
        obj = DyckPath(enc) if family == "dyck" else PlaneTree.parse(enc)
        bad = check(obj, m)
        if bad is not None:
            out.append(bad)
    return len(encodings), out


def _batches(it, size):
    it = iter(it)
    while True:
        chunk = list(islice(it, size))
        if not chunk:
            return
        yield chunk


def _count_law(n: int, m) -> tuple[int, list[Counterexample]]:
    # distinct canonical encodings: a duplicate would mean two non-isomorphic
    # inputs collapsed, since canonical relations decide isomorphism
    bad = []
    seen: set[frozenset] = set()
    checked = 0
    for t in enumerate_trees(n, m):
        p = _safe(m["xi_poset"], t)
        checked += 1
        if isinstance(p, str) or not core.is_canonical(p):
            bad.append(Counterexample(str(t), "canonical poset", str(p)))
        elif p.relations in seen:
            bad.append(Counterexample(str(t), "new isomorphism class", f"duplicate {p}"))
        else:
            seen.add(p.relations)
    if checked != catalan(n):
        bad.append(Counterexample(f"n={n}", f"{catalan(n)} posets", f"{checked} posets"))
    return checked, bad


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


def verify_law(law: str, n: int, maps: dict | None = None, jobs: int = 1) -> LawReport:
    """Check ``law`` on every object of size ``n``.

    Counterexamples come back in enumeration order whatever ``jobs`` is.
    Map overrides must be picklable (module-level functions) when ``jobs > 1``.
    """
    if law not in LAWS:
        raise KeyError(f"unknown law {law!r}; choose from {', '.join(LAWS)}")
    if n < 0:
        raise ValueError("n must be non-negative")
    m = _maps(maps)
    start = time.perf_counter()
    report = LawReport(law, n)
    family, _ = LAWS[law]
    if family == "poset":
        report.checked, report.counterexamples = _count_law(n, m)
    else:
        source = enumerate_dyck(n) if family == "dyck" else enumerate_trees(n, m)
        tasks = ((law, [str(o) for o in chunk], maps) for chunk in _batches(source, _BATCH))
        if jobs > 1:
            with get_context("spawn").Pool(jobs) as pool:
                results = list(pool.imap(_check_batch, tasks))
        else:
            results = map(_check_batch, tasks)
        for checked, bad in results:
            report.checked += checked
            report.counterexamples.extend(bad)
    report.millis = round((time.perf_counter() - start) * 1000, 3)
    return report


def verify_upto(law: str, n_max: int, maps: dict | None = None, jobs: int = 1) -> LawReport:
    """One report for ``law`` over sizes ``1..n_max``."""
    total = LawReport(law, n_max)
    for n in range(1, n_max + 1):
        total.merge(verify_law(law, n, maps, jobs))
    total.millis = round(total.millis, 3)
    return total


def verify_all(n_max: int, jobs: int = 1) -> list[LawReport]:
    return [verify_upto(law, n_max, jobs=jobs) for law in LAWS]
