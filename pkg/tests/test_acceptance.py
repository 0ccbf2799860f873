"""Acceptance criteria, one test each; every test prints a single PASS/FAIL line."""
import pytest

from dpjordan import weyl
from dpjordan.constructions import dp4_sign_group, dp6_parts, dp8_product_group, dp8_s5
from dpjordan.extensions import enumerate_extensions, regular_representation
from dpjordan.jordan import abelian_subgroups, jordan_constant
from dpjordan.perms import centralizer, conjugacy_class, element_order, subgroup_from_elements, subgroups
from dpjordan.picard import blowup_config, graph_automorphisms, hexagon_structure_check
from dpjordan.verify import VerifyConfig, check_isaacs

from property_suite import run_exhaustive, run_random


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail=""):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f" ({detail})" if detail else ""))
        assert ok, detail
    return emit


def la(text):
    return weyl.line_action(weyl.parse_element(text))


def test_1_wd5_order(report):
    G = weyl.full_group()
    aut = graph_automorphisms(blowup_config(5).graph())
    ok = G.order == 1920 and aut.order == 1920 and G.element_set == aut.element_set
    report(1, "W(D5) has 1920 elements and equals Aut of the 16-line graph", ok,
           f"|W|={G.order}, |Aut|={aut.order}")


def test_2_wd5_classes(report):
    G = weyl.full_group()
    by_order = {}
    for g in G.elements:
        by_order.setdefault(element_order(g), []).append(g)
    five = conjugacy_class(G, la("(1 2 3 4 5)"))
    three = conjugacy_class(G, la("(1 2 3)"))
    ok5 = five == set(by_order[5])
    ok3 = three == set(by_order[3])
    rho4 = [g for g in weyl.all_elements() if element_order(weyl.rho(g)) == 4]
    c1 = conjugacy_class(G, la("(1 2 3 4)"))
    c2 = conjugacy_class(G, la("(1 2 3 4)*i15"))
    ok4 = c1.isdisjoint(c2) and {weyl.line_action(g) for g in rho4} == c1 | c2
    allowed = {G.identity, la("i1234")}
    i12 = la("i12")
    cent = [centralizer(G, [i12, la(x)]).element_set for x in ("(1 2 3 4)", "(1 2 3 4)*i15")]
    okc = all(c <= allowed for c in cent)
    report(2, "single classes of order 5 and 3, two rho-order-4 classes, centralizers inside <i1234>",
           ok5 and ok3 and ok4 and okc,
           f"order5={len(five)}/{len(by_order[5])}, order3={len(three)}/{len(by_order[3])}, "
           f"rho4 classes {len(c1)}+{len(c2)}={len(rho4)}, centralizers {[len(c) for c in cent]}")


def test_3_iota12(report):
    G = weyl.full_group()
    K = subgroup_from_elements(G, [weyl.line_action(weyl.SignedPerm(weyl.Permutation.identity(5), v))
                                   for v in {g.signs for g in weyl.all_elements()}])
    c = la("(1 2 3 4)")
    big = [H for H in subgroups(K) if H.order >= 8]
    inv = [H for H in big if {h.conjugate(c) for h in H.elements} == H.element_set]
    ok = K.order == 16 and len(big) == 16 and all(la("i12") in H for H in inv)
    report(3, "every (1234)-invariant subgroup of order >= 8 of the sign kernel contains i12", ok,
           f"{len(big)} subgroups swept, {len(inv)} invariant")


def test_4_small_2_groups(report):
    exts = enumerate_extensions(2)
    js = [jordan_constant(regular_representation(e.group)).jordan for e in exts]
    small = [e for k in (0, 1) for e in enumerate_extensions(k)]
    ok = len(exts) == 160 and max(js) <= 2 and all(e.group.is_abelian() for e in small)
    report(4, "extensions of mu_2^2 by mu_4 have J <= 2; k <= 1 extensions are abelian", ok,
           f"{len(exts)} k=2 extensions, max J {max(js)}, {len(small)} small extensions")


def test_5_fixed_lines(report):
    fixed = weyl.fixed_lines(weyl.parse_element("(1 2 3 4 5)"))
    counts = {len(weyl.fixed_lines(g)) for g in weyl.all_elements()
              if element_order(weyl.line_action(g)) == 5}
    ok = fixed == {"Q"} and counts == {1}
    report(5, "(12345) fixes exactly Q and every order-5 element fixes one line", ok,
           f"fixed={sorted(fixed)}, counts={sorted(counts)}")


def test_6_hexagon(report):
    cfg = blowup_config(3)
    A = graph_automorphisms(cfg.graph())
    A = subgroup_from_elements(A, A.elements)
    ok_s, sigma = hexagon_structure_check(A)
    sixes = [H for H in subgroups(A) if H.order == 6]
    s3 = [H for H in sixes if not H.is_abelian()]
    mu6 = [H for H in sixes if H.is_abelian()]
    cyc = {A.identity, sigma}
    ok_c = all(centralizer(A, H.generators).element_set <= cyc for H in s3)
    ok_m = len(mu6) == 1 and centralizer(A, mu6[0].generators) == mu6[0]
    ok = len(cfg.names) == 6 and cfg.graph().is_cycle() and A.order == 12 and ok_s and ok_c and ok_m
    report(6, "six lines form a hexagon with automorphism group S3 x mu2 of order 12", ok,
           f"|Aut|={A.order}, S3 subgroups={len(s3)}, mu6 self-centralizing={ok_m}")


def test_7_example_jordan_constants(report):
    got = {
        "dp4-32": jordan_constant(dp4_sign_group()).jordan,
        "dp6-n5": jordan_constant(dp6_parts(5)[0]).jordan,
        "dp6-n7": jordan_constant(dp6_parts(7)[0]).jordan,
        "dp8-product": jordan_constant(dp8_product_group()).jordan,
        "dp8-s5": jordan_constant(dp8_s5()).jordan,
    }
    want = {"dp4-32": 2, "dp6-n5": 4, "dp6-n7": 4, "dp8-product": 7200, "dp8-s5": 120}
    report(7, "Jordan constants of the example groups", got == want, str(got))


def test_8_index_inequality(report):
    details = {}
    ok = True
    for n in (5, 7):
        G, N = dp6_parts(n)
        outside = [A for A in abelian_subgroups(G) if not A.element_set <= N.element_set]
        m = min(G.order // A.order for A in outside)
        details[n] = m
        ok = ok and m >= n > 4
    report(8, "abelian subgroups outside mu_n^2 have index >= n > 4 for n = 5, 7", ok,
           f"minimal indices {details}")


def test_9_property_suites(report):
    ex = run_exhaustive()
    rnd = run_random(seed=1729, count=1000)
    isaacs = check_isaacs(VerifyConfig(subgroup_cap=512))
    ok = not ex["failures"] and not rnd["failures"] and isaacs.status == "pass"
    report(9, "property suites on exhaustive small cases and 1000 seeded random groups", ok,
           f"{ex['cases']} exhaustive cases, {rnd['instances']} random "
           f"({rnd['jordan_checked']} with Jordan agreement), Isaacs {isaacs.computed['results']}")
