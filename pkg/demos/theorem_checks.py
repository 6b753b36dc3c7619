"""Classification checkers in action across the configuration families.

Each row prints the verdict of one implication on one configuration,
including the documented six-point exception where four steps of 2 do not
yet force a conic.
"""

from fatpoints.analysis import (
    check_double_unit_step_collinear,
    check_minimal_gap_collinear,
    check_uniform_step_two_conic,
    check_unit_step_arrangement,
    conjecture_search,
)
from fatpoints.configs import collinear, general, on_conic, star, type9


def show(label, verdict):
    print(f"{label:46s} -> {verdict.status:22s} alphas={verdict.context.get('alphas')}")


def main():
    show("minimal-gap  k=3 on collinear(4)",
         check_minimal_gap_collinear(collinear(4), 3))
    show("minimal-gap  k=3 on star(4)",
         check_minimal_gap_collinear(star(4, seed=1)[0], 3))
    show("unit-step    k=2 on star(4)",
         check_unit_step_arrangement(star(4, seed=1)[0], 2))
    show("unit-step    k=4 on collinear(5)",
         check_unit_step_arrangement(collinear(5), 4))
    show("double-unit  k=3 on 3 general points",
         check_double_unit_step_collinear(general(3, seed=11, height=12), 3))
    show("uniform-2    k_max=5 on on_conic(7)",
         check_uniform_step_two_conic(on_conic(7), 5))
    show("uniform-2    k_max=4 on type9 (sharp case)",
         check_uniform_step_two_conic(type9(), 4))
    show("uniform-2    k_max=5 on type9",
         check_uniform_step_two_conic(type9(), 5))

    print("\nsearch: 40 seeded trials for four consecutive steps of 2")
    rep = conjecture_search(trials=40, r_range=(4, 9), k=5, seed=1)
    print(f"  hypothesis-true instances: {len(rep.hypothesis_true)} "
          f"(all on conics: {all(h['conic'] for h in rep.hypothesis_true)})")
    print(f"  candidate counterexamples: {len(rep.inconsistent)}")


if __name__ == "__main__":
    main()
