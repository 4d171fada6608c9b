#!/usr/bin/env python3
"""Print the growth table and small-world classification of every built-in
family over the default parameter grid."""

from smallworlds.families import FAMILY_KINDS, FamilySpec
from smallworlds.smallworld import (
    DEFAULT_TARGET_SIZES,
    classify_distance_smallworld,
    growth_report,
    known_classification,
    params_for_targets,
)


def main() -> None:
    for kind in FAMILY_KINDS:
        spec = FamilySpec(kind)
        report = growth_report(spec, params_for_targets(spec, DEFAULT_TARGET_SIZES))
        print(f"\n== {kind} ==")
        print(f"{'N':>6} {'d1/lnN':>9} {'mean/lnN':>9} {'md/lnN':>9} "
              f"{'diam/lnN':>9} {'mu/lnN':>9} {'Md/lnN':>9}")
        for row in report.rows:
            r = row.ratios()
            print(f"{row.n:>6} {r['max_degree']:>9.3f} {r['mean_degree']:>9.3f} "
                  f"{r['median_degree']:>9.3f} {r['diameter']:>9.3f} "
                  f"{r['mean_distance']:>9.3f} {r['median_distance']:>9.3f}")
        print("closed-form:    ", known_classification(spec).flags())
        print("empirical-trend:", classify_distance_smallworld(report, closed_form=False).flags())


if __name__ == "__main__":
    main()
