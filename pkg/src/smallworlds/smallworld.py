"""Growth reports over network families and small-world classification.

Six notions are tracked. Degree-based: the largest (DSWL), average (DSWA), or
median (DSWMd) degree divided by ln N diverges. Distance-based: the diameter
(SWD), average (SWA), or median (SWMd) distance divided by ln N stays bounded.

Limits cannot be decided from finite data, so classification comes in two
flavors: closed-form answers for the built-in families (authoritative) and an
empirical-trend heuristic over a growth report (documented thresholds below).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arrays import degree_stats
from .families import FamilySpec, make_family
from .graph import Graph, degree_array, distance_stats
from .lorenz import MajorizationVerdict, Relation, majorize_compare

# A ratio sequence counts as diverging when its tail still rises and the last
# value exceeds the first by this factor.
DIVERGENCE_FACTOR = 4.0
# ... and as bounded unless the last value is this factor above the first with
# a still-rising tail.
BOUNDED_FACTOR = 2.0

DEFAULT_TARGET_SIZES = (32, 64, 128, 256, 512, 1024)

_DEGREE_FLAGS = ("dswl", "dswa", "dswmd")
_DISTANCE_FLAGS = ("swd", "swa", "swmd")


@dataclass(frozen=True)
class GrowthRow:
    """Exact per-size statistics of one family member."""

    param: int
    n: int
    max_degree: int
    mean_degree: Fraction
    median_degree: Fraction
    diameter: int
    mean_distance: Fraction
    median_distance: Fraction

    def ratios(self) -> dict[str, float]:
        """Each statistic divided by ln N."""
        ln = math.log(self.n)
        return {
            "max_degree": self.max_degree / ln,
            "mean_degree": float(self.mean_degree) / ln,
            "median_degree": float(self.median_degree) / ln,
            "diameter": self.diameter / ln,
            "mean_distance": float(self.mean_distance) / ln,
            "median_distance": float(self.median_distance) / ln,
        }


@dataclass(frozen=True)
class GrowthReport:
    spec: FamilySpec
    rows: tuple[GrowthRow, ...]

    def ratio_series(self, stat: str) -> list[float]:
        return [row.ratios()[stat] for row in self.rows]


@dataclass(frozen=True)
class SWClassification:
    dswl: bool
    dswa: bool
    dswmd: bool
    swd: bool
    swa: bool
    swmd: bool
    provenance: str  # "closed-form" | "empirical-trend"

    def __post_init__(self):
        if self.dswmd and not (self.dswa and self.dswl):
            raise ValueError("DSWMd must imply DSWA and DSWL")
        if self.dswa and not self.dswl:
            raise ValueError("DSWA must imply DSWL")
        if self.swd and not (self.swa and self.swmd):
            raise ValueError("SWD must imply SWA and SWMd")

    def flags(self) -> dict[str, bool]:
        return {k: getattr(self, k) for k in _DEGREE_FLAGS + _DISTANCE_FLAGS}


def params_for_targets(spec: FamilySpec, targets: tuple[int, ...]) -> tuple[int, ...]:
    """Map target node counts to valid family parameters (N or M per kind)."""
    if any(t < 3 for t in targets):
        raise ValueError("target node counts must be >= 3")
    if list(targets) != sorted(set(targets)):
        raise ValueError("target grid must be strictly increasing")
    if spec.kind in ("complete", "star", "chain", "polygon", "lntree"):
        if spec.kind == "lntree" and min(targets) < 4:
            raise ValueError("lntree needs target N >= 4")
        return targets
    if spec.kind == "spider":
        params = tuple(max(2, round(t / 3)) for t in targets)
    elif spec.kind == "kite":
        params = tuple(max(2, (t + 1) // 2) for t in targets)
    else:  # s1 / s2
        a, b = spec.ab
        floor_m = 1 if spec.kind == "s1" else max(1, b - 2 * a)
        params = tuple(max(floor_m, (t - a - b) // 2) for t in targets)
    if list(params) != sorted(set(params)):
        raise ValueError(
            f"target grid collapses for family {spec.kind!r}: "
            f"node counts must be spaced enough to give distinct parameters"
        )
    return params


@lru_cache(maxsize=None)
def growth_report(spec: FamilySpec, params: tuple[int, ...]) -> GrowthReport:
    """Exact statistics for each family member; `params` are the family's
    natural parameters (N, or M for spider/kite/s1/s2)."""
    rows = []
    for p in params:
        g = make_family(spec, p)
        delta = degree_array(g)
        dmax, dmean, dmedian = degree_stats(delta)
        ds = distance_stats(g)
        rows.append(GrowthRow(
            param=p, n=g.n,
            max_degree=dmax, mean_degree=dmean, median_degree=dmedian,
            diameter=ds.diameter, mean_distance=ds.mean_distance,
            median_distance=ds.median_distance,
        ))
    if sorted(r.n for r in rows) != [r.n for r in rows]:
        raise ValueError("rows must be sorted by node count")
    return GrowthReport(spec, tuple(rows))


def _check_grid(report: GrowthReport) -> None:
    ns = [row.n for row in report.rows]
    # "Two decades" in the doubling sense: the default grid spans 32x.
    if len(ns) < 4 or ns[-1] < 30 * ns[0]:
        raise ValueError("classification needs >= 4 rows spanning a wide range of N")


def _diverging(seq: list[float]) -> bool:
    return seq[-1] > seq[-2] and seq[-1] >= DIVERGENCE_FACTOR * seq[0]


def _bounded(seq: list[float]) -> bool:
    return not (seq[-1] > seq[-2] and seq[-1] >= BOUNDED_FACTOR * seq[0])


def classify_degree_smallworld(report: GrowthReport, closed_form: bool = True
                               ) -> SWClassification:
    """Degree flags; distance flags are carried along so the result is a full
    classification. With `closed_form` the built-in family answer overrides
    the trend heuristic."""
    if closed_form:
        return known_classification(report.spec)
    _check_grid(report)
    dist = classify_distance_smallworld(report, closed_form=False)
    return SWClassification(
        dswl=_diverging(report.ratio_series("max_degree")),
        dswa=_diverging(report.ratio_series("mean_degree")),
        dswmd=_diverging(report.ratio_series("median_degree")),
        swd=dist.swd, swa=dist.swa, swmd=dist.swmd,
        provenance="empirical-trend",
    )


def classify_distance_smallworld(report: GrowthReport, closed_form: bool = True
                                 ) -> SWClassification:
    """Distance flags (bounded ratio sequences), degree flags carried along."""
    if closed_form:
        return known_classification(report.spec)
    _check_grid(report)
    return SWClassification(
        dswl=_diverging(report.ratio_series("max_degree")),
        dswa=_diverging(report.ratio_series("mean_degree")),
        dswmd=_diverging(report.ratio_series("median_degree")),
        swd=_bounded(report.ratio_series("diameter")),
        swa=_bounded(report.ratio_series("mean_distance")),
        swmd=_bounded(report.ratio_series("median_distance")),
        provenance="empirical-trend",
    )


#            dswl  dswa  dswmd  swd   swa   swmd
_KNOWN = {
    "complete": (True, True, True, True, True, True),
    "star":     (True, False, False, True, True, True),
    "chain":    (False, False, False, False, False, False),
    "polygon":  (False, False, False, False, False, False),
    "spider":   (True, True, False, True, True, True),
    "kite":     (True, True, True, False, False, False),
    "lntree":   (False, False, False, True, True, True),
    "s1":       (True, True, True, True, True, True),
    "s2":       (True, True, False, True, True, True),
}


def known_classification(spec: FamilySpec) -> SWClassification:
    """The closed-form six-flag table for a built-in family."""
    flags = _KNOWN[spec.kind]
    return SWClassification(*flags, provenance="closed-form")


@dataclass(frozen=True)
class SmallerWorldVerdict:
    verdict: MajorizationVerdict
    statement: str


def smaller_world_compare(g: Graph, h: Graph,
                          name_g: str = "G", name_h: str = "H") -> SmallerWorldVerdict:
    """Degree-majorization comparison: delta(G) majorized by delta(H) means H
    is the smaller world."""
    if g.n != h.n:
        raise ValueError("smaller-world comparison needs equal node counts")
    verdict = majorize_compare(degree_array(g), degree_array(h))
    statements = {
        Relation.LESS: f"{name_h} is a smaller world than {name_g}",
        Relation.GREATER: f"{name_g} is a smaller world than {name_h}",
        Relation.EQUAL: f"{name_g} and {name_h} are equally small worlds",
        Relation.INCOMPARABLE: f"{name_g} and {name_h} are incomparable",
    }
    return SmallerWorldVerdict(verdict, statements[verdict.relation])
