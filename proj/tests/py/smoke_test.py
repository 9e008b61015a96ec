"""End-to-end smoke test for the Python bindings."""

import os
import sys

import loopkit

TABLE5 = [
    [0, 1, 2, 3, 4],
    [1, 3, 0, 4, 2],
    [2, 0, 4, 1, 3],
    [3, 4, 1, 2, 0],
    [4, 2, 3, 0, 1],
]


def asset(name):
    base = os.environ["LOOPKIT_TEST_ASSET_DIR"]
    return os.path.join(base, name)


def check(condition, what):
    if not condition:
        raise AssertionError(what)


def main():
    check(loopkit.__version__ == "0.1.0", "version")

    p = loopkit.Permutation([1, 3, 0, 4, 2])
    check(p.degree == 5, "degree")
    check(p(0) == 1, "call")
    check(loopkit.perm_order(p) == 5, "perm_order")
    check(loopkit.compose(p, loopkit.inverse(p)).is_identity(), "compose/inverse")
    check(loopkit.cycle_string(p) == "(0 1 3 4 2)", "cycle_string")
    check(len(loopkit.all_permutations(4)) == 24, "all_permutations")
    try:
        loopkit.Permutation([0, 0])
    except loopkit.LoopkitError:
        pass
    else:
        raise AssertionError("duplicate images must be rejected")

    loop = loopkit.Loop.validate(TABLE5)
    check(loop.order == 5, "order")
    check(loop.identity == 0, "identity")
    check(loop.mul(1, 3) == 4, "mul")
    check(loop.left_divide(1, 0) == 2, "left_divide")
    check(loop.right_divide(2, 0) == 1, "right_divide")
    check(loop.j_rho().images() == [0, 2, 1, 4, 3], "j_rho")
    check(loop.rows() == TABLE5, "rows")
    check(loop == loopkit.Loop.from_cells(5, [v for row in TABLE5 for v in row]), "from_cells")

    flags = loopkit.classify(loop)
    check(flags["bits"] == "1101111", "bits")
    check(flags["wip"] and flags["cip"] and flags["commutative"], "flags")

    for criterion in ("definitional", "right_identity", "left_identity",
                      "operator_rho", "operator_lambda"):
        check(loopkit.is_wip(loop, criterion)["holds"], "wip " + criterion)
    check(loopkit.is_cip(loop)["holds"], "cip")
    check(loopkit.is_aip(loop)["holds"], "aip")
    check(loopkit.is_m_inverse(loop, -1)["holds"], "m=-1")
    check(loopkit.is_weak_inverse_permutation(loop, p)["holds"], "member test")

    sets = loopkit.weak_inverse_sets(loop)
    check(len(sets["s_prime"]) == 26, "s_prime size")
    check(sets["s_rho"] == sets["s_prime"] == sets["s_lambda"], "set equality")
    check(loopkit.commuting_closure_check(loop)["holds"], "commuting closure")

    triple = loopkit.counterexample_triple()
    check(triple.a.images() == [1, 3, 0, 4, 2], "triple a")
    check(loopkit.counterexample_loop() == loop, "bundled loop")
    check(loopkit.check_isotopism(loop, loop, triple)["holds"], "self-isotopism")
    t = loopkit.check_t_condition(loop, loop, triple)
    check(t == {"t1": False, "t2": False, "t3": False, "t": False}, "t condition")
    check(loopkit.apply_isotopism(loop, triple) == loop, "apply")
    check(loopkit.principal_isotope(loop, 1, 2) == loop, "principal")
    check(loopkit.derive_third(loop, loop, triple.a, triple.b).is_identity(), "derive_third")

    check(len(loopkit.find_isotopisms(loop, loop)) == 100, "isotopism count")
    check(len(loopkit.find_isotopisms(loop, loop, limit=5)) == 5, "limit")
    check(len(loopkit.find_isomorphisms(loop, loop)) == 4, "isomorphism count")
    check(len(loopkit.autotopisms(loop)) == 100, "autotopism count")

    check([len(loopkit.enumerate_loops(n)) for n in range(1, 6)] == [1, 1, 1, 4, 56],
          "enumeration counts")
    catalog = loopkit.build_catalog(5)
    check(len(catalog) == 6, "classes")
    check([entry["members"] for entry in catalog] == [8, 8, 2, 8, 24, 6], "class sizes")
    check(catalog[5]["flags"] == "1101111", "class flags")
    z5 = loopkit.Loop.validate([[(i + j) % 5 for j in range(5)] for i in range(5)])
    check(loopkit.canonical_key(loop) == loopkit.canonical_key(z5), "canonical key")
    check(loopkit.normalize(z5) == z5, "normalize")

    check(loopkit.verify_counterexample()["passed"], "counterexample verdict")
    verdicts = loopkit.verify_suite(transfer_order=2, artzy_order=2)
    check(len(verdicts) == 7, "verdicts")
    check(all(v["passed"] for v in verdicts), "suite passes")
    check([v["theorem_id"] for v in verdicts] ==
          ["counterexample", "wip_transfer", "translation_identities", "osborn_autotopism",
           "t_corollaries", "t_isomorphy", "artzy_cip"], "verdict order")

    check(loopkit.read_loop_file(asset("counterexample.loop")) == loop, "read loop asset")
    read_triple = loopkit.read_triple_file(asset("counterexample_triple.txt"))
    check(read_triple.a.images() == triple.a.images(), "read triple asset")
    check(loopkit.loop_from_text(loopkit.loop_text(loop)) == loop, "text round trip")

    try:
        loopkit.autotopisms(loopkit.Loop.validate(
            [[(i + j) % 7 for j in range(7)] for i in range(7)]))
    except loopkit.LoopkitError:
        pass
    else:
        raise AssertionError("order guard must fire")

    print("python smoke test passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
