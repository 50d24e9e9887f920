"""Regenerate the JSON fixtures bundled in ``src/whapar/fixtures``."""

import json
from fractions import Fraction
from pathlib import Path

from whapar import constructors as cons
from whapar.io import FIXTURES, dump_action, dump_algebra, dump_groupoid, dump_parrep
from whapar.partial import PartialAction, PartialRep, epsilon_action, target_action
from whapar.wha import FinDimAlgebra

ONE = Fraction(1)


def write(name, data):
    path = Path(FIXTURES) / name
    path.write_text(json.dumps(data, indent=1) + "\n", encoding="utf-8")
    print("wrote", path)


def main():
    FIXTURES.mkdir(exist_ok=True)
    groupoids = {
        "trivial": cons.trivial_group(), "z2": cons.cyclic_group(2), "z3": cons.cyclic_group(3),
        "z4": cons.cyclic_group(4), "klein": cons.klein_group(),
        "discrete2": cons.discrete_groupoid(2), "pair2": cons.pair_groupoid(2),
    }
    for key, g in groupoids.items():
        write("%s.groupoid.json" % key, dump_groupoid(g))

    sw = cons.sweedler_pair()
    write("sweedler_pair.json", dump_algebra(sw))
    z2 = dump_algebra(cons.groupoid_algebra(groupoids["z2"]))
    write("z2.json", z2)
    broken = json.loads(json.dumps(z2))
    broken["name"] = "Q[Z2] with g.g = 2e"
    for row in broken["mult"]:
        if row[:2] == [1, 1]:
            row[3] = "2"
    write("broken.json", broken)
    bc = dump_algebra(sw)
    bc["name"] = "sweedler_pair with eps(e_g) = 0"
    bc["counit"][2] = "0"
    write("broken_counit.json", bc)

    q = FinDimAlgebra(1, {(0, 0): {0: ONE}}, {0: ONE}, labels=["1"], name="Q")
    e1, ex, eg, f1 = 0, 1, 2, 4

    def action(entries, name):
        return PartialAction(sw, q, {(i, 0): {0: Fraction(c)} for i, c in entries.items()}, name=name)

    write("sweedler_q.action.json", dump_action(action({e1: 1}, "sweedler_q"), "sweedler_pair.json"))
    write("sweedler_q_both.action.json",
          dump_action(action({e1: 1, f1: 1}, "sweedler_q-both"), "sweedler_pair.json"))
    write("sweedler_q_pa3.action.json",
          dump_action(action({e1: 1, ex: 1}, "sweedler_q-ex"), "sweedler_pair.json"))
    write("sweedler_q_pm6.action.json",
          dump_action(action({e1: 1, eg: 2}, "sweedler_q-eg2"), "sweedler_pair.json"))
    write("z2_eps.action.json",
          dump_action(epsilon_action(cons.groupoid_algebra(groupoids["z2"])), "z2.groupoid.json"))
    write("pair2_target.action.json",
          dump_action(target_action(cons.groupoid_algebra(groupoids["pair2"])), "pair2.groupoid.json"))

    def rep(h, images, name):
        return PartialRep(h, q, [{0: Fraction(c)} if c else {} for c in images], name=name)

    write("sweedler_q.parrep.json",
          dump_parrep(rep(sw, [1, 0, 0, 0, 0, 0, 0, 0], "sweedler_q"), "sweedler_pair.json"))
    write("sweedler_q_both.parrep.json",
          dump_parrep(rep(sw, [1, 0, 0, 0, 1, 0, 0, 0], "sweedler_q-both"), "sweedler_pair.json"))
    h2 = cons.groupoid_algebra(groupoids["z2"])
    write("z2_partial.parrep.json", dump_parrep(rep(h2, [1, 0], "z2-partial"), "z2.groupoid.json"))


if __name__ == "__main__":
    main()
