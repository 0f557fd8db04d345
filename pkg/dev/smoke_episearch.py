import itertools
import sys
import time

sys.path.insert(0, "/root/pkg/src")

from tql.perm import Permutation, build_group, generates, coset_action
from tql.zoo import make_psl2, make_standard, direct_product
from tql.fuchsian import Signature
from tql import episearch as ep

T0 = time.time()


def check(label, got, want=None):
    ok = True if want is None else got == want
    stamp = time.time() - T0
    print(f"[{stamp:7.2f}s] {'ok ' if ok else 'FAIL'} {label}: {got!r}"
          + ("" if want is None or ok else f"  (want {want!r})"))
    if want is not None and not ok:
        raise SystemExit(f"MISMATCH at {label}")


# --- S4 quadruples vs brute force ------------------------------------------
s4 = make_standard("sym", 4)
invs = [g for g in s4.elements() if g.order() == 2]
brute = {}
for x1, x2, x3 in itertools.product(invs, repeat=3):
    w = x1 * x2 * x3
    if w.order() != 3:
        continue
    if generates([x1, x2, x3], s4):
        n = (x1 * x2).order()
        brute[n] = brute.get(n, 0) + 1
print("S4 brute n_distribution:", dict(sorted(brute.items())))

rep = ep.find_quadruples(s4)
check("S4 quad n_distribution == brute", rep.n_distribution, brute)
check("S4 quad total", rep.total, sum(brute.values()))
check("S4 quad class_count", rep.class_count)
for n, w in rep.witnesses.items():
    w.validate()
    assert w.n == n
check("S4 witnesses validate", sorted(rep.witnesses), sorted(rep.n_distribution))

# thread invariance (cache bypassed for triples; quads have no cache)
rep2 = ep.find_quadruples(s4, threads=2)
check("S4 quad thread invariance", rep2.n_distribution, rep.n_distribution)

# --- A5: no (2,3,7) triples, instantly --------------------------------------
a5 = make_standard("alt", 5)
t = time.time()
rep = ep.find_triples(a5, (2, 3, 7))
check("A5 (2,3,7) total", rep.total, 0)
check("A5 shortcut fast", time.time() - t < 0.5, True)
# but A5 is (2,3,5)-generated
rep = ep.find_triples(a5, (2, 3, 5))
check("A5 (2,3,5) total > 0", rep.total > 0, True)
check("A5 (2,3,5) aut | total", rep.total % 120, 0)

# --- PSL2(7) -----------------------------------------------------------------
g7 = make_psl2(7)
rep = ep.find_triples(g7, (2, 3, 7))
check("PSL2(7) triple total", rep.total, 336)
check("PSL2(7) triple class_count", rep.class_count, 1)
wit = rep.witnesses[7]
check("PSL2(7) witness orders", (wit.x.order(), wit.y.order(), wit.z.order()), (2, 3, 7))

qrep = ep.find_quadruples(g7)
check("PSL2(7) quad total", qrep.total, 0)

check("PSL2(7) no D7 inversion", ep.inverting_involution_exists(g7, 7), None)

cls = ep.classify(g7)
check("PSL2(7) classify flags",
      (cls.hurwitz, cls.maximal_reducible, cls.handlebody, cls.bounded_surface, cls.g7),
      (True, False, False, False, False))
check("PSL2(7) hurwitz genus", cls.hurwitz_genus, 3)

irr = ep.irreducible_subgroups(g7, wit)
got = sorted((sub.order, str(sig)) for sub, sig in irr)
check("PSL2(7) irreducible subgroups", got, [(7, "(0;7,7,7)"), (21, "(0;3,3,7)")])

thm = ep.theorem1_check(g7, wit)
check("PSL2(7) theorem1", (thm.hypothesis_met, thm.subgroup_order, thm.image_order,
                           thm.image_perfect, thm.signature),
      (True, 24, 168, True, "(0;2,2,2,3)"))

subs24 = ep.find_subgroups_of_order(g7, 24, seed=0)
check("PSL2(7) order-24 subgroup found", len(subs24) >= 1, True)
ind = ep.induced_quadruple(g7, wit, subs24[0])
check("PSL2(7) induced n_values subset", set(ind.n_values) <= {2, 3, 4}, True)
check("PSL2(7) induced nonempty", len(ind.n_values) >= 1, True)
print("    PSL2(7) induced n_values:", ind.n_values)

ext = ep.extended_hurwitz_test(g7, wit)
print("    PSL2(7) extended witness for canonical triple:", ext and ext.cycle_string())
surv = ep.extended_hurwitz_survey(g7)
print("    PSL2(7) extension survey:", surv.exists, "checked", surv.triples_checked)

# --- PSL2(8) -----------------------------------------------------------------
# 1512 ordered pairs (verified by class-multiplication arithmetic): one orbit
# of the full automorphism group, three orbits of inner+diagonal
g8 = make_psl2(8)
rep8 = ep.find_triples(g8, (2, 3, 7))
check("PSL2(8) triple total", rep8.total, 1512)
check("PSL2(8) triple class_count (full aut)", rep8.class_count, 1)
check("PSL2(8) pgl class count", rep8.total // 504, 3)
irr8 = ep.irreducible_subgroups(g8, rep8.witnesses[7])
got8 = sorted((sub.order, str(sig)) for sub, sig in irr8)
check("PSL2(8) irreducible subgroups", got8, [(56, "(0;2,7,7)")])

# --- D6 quadruples -----------------------------------------------------------
d6 = make_standard("dihedral", 6)
repd = ep.find_quadruples(d6)
check("D6 quad total > 0", repd.total > 0, True)
print("    D6 n_distribution:", dict(sorted(repd.n_distribution.items())))

# --- PSL2(13): D7 inversion, g7 construction ---------------------------------
g13 = make_psl2(13)
rep13 = ep.find_triples(g13, (2, 3, 7))
# the genus-14 triplet: 6552 = 3 * 2184 ordered pairs (class-multiplication check)
check("PSL2(13) triple total", rep13.total, 6552)
check("PSL2(13) triple class_count", rep13.class_count, 3)
zt = ep.inverting_involution_exists(g13, 7)
check("PSL2(13) D7 witness", zt is not None, True)
trip13 = rep13.witnesses[7]
t13 = ep.involution_inverting(g13, trip13.z)
check("PSL2(13) t for triple z", t13 is not None, True)
quad13 = ep.g7_quadruple_from_triple(trip13, t13)
check("PSL2(13) g7 quadruple n", quad13.n, 7)

ext13 = ep.extended_hurwitz_survey(g13)
print("    PSL2(13) extension survey exists:", ext13.exists,
      "checked:", ext13.triples_checked,
      "t:", ext13.t and ext13.t.cycle_string())

thm13 = ep.theorem1_check(g13, trip13)
check("PSL2(13) theorem1 hypothesis", thm13.hypothesis_met, False)
print("    PSL2(13) theorem1 note:", thm13.note)

irr13 = ep.irreducible_subgroups(g13, trip13)
check("PSL2(13) irreducible subgroups", irr13, [])

# --- handles bookkeeping ------------------------------------------------------
hb = ep.handles_bookkeeping(336, 168)
check("handles (336,168)", (hb.outer_genus, hb.inner_count, hb.inner_genus), (29, 2, 3))
hb = ep.handles_bookkeeping(9828, 9828)
check("handles (9828,9828)", (hb.outer_genus, hb.inner_count, hb.inner_genus), (820, 1, 118))

# --- survey up to 17 (quick slice) -------------------------------------------
rows = ep.hurwitz_survey_psl2(17)
got = [r.q for r in rows if r.hurwitz]
check("survey q<=17 hurwitz set", got, [7, 8, 13])
g13row = [r for r in rows if r.q == 13][0]
check("survey genus at 13", g13row.genus, 14)
g8row = [r for r in rows if r.q == 8][0]
check("survey q=8 both counts", (g8row.class_count, g8row.pgl_class_count), (1, 3))

# --- PSL2(27): triples, quadruple n_set, D7 witness ---------------------------
g27 = make_psl2(27)
t = time.time()
rep27 = ep.find_triples(g27, (2, 3, 7))
print(f"    PSL2(27) triple total={rep27.total} class_count={rep27.class_count} "
      f"pgl={rep27.total // 19656 if rep27.total % 19656 == 0 else 'n/a'} "
      f"({time.time() - t:.1f}s)")
check("PSL2(27) hurwitz", rep27.total > 0, True)
check("PSL2(27) aut | total", rep27.total % 58968, 0)
t = time.time()
q27 = ep.find_quadruples(g27)
print(f"    PSL2(27) quad n_distribution: {dict(sorted(q27.n_distribution.items()))} "
      f"({time.time() - t:.1f}s)")
check("PSL2(27) no handlebody n", set(q27.n_set) & {2, 3, 4, 5}, set())
check("PSL2(27) 7 in n_set", 7 in q27.n_set, True)
q27.witnesses[7].validate()
zt27 = ep.inverting_involution_exists(g27, 7)
check("PSL2(27) D7 witness", zt27 is not None, True)
t27 = ep.involution_inverting(g27, rep27.witnesses[7].z)
quad27 = ep.g7_quadruple_from_triple(rep27.witnesses[7], t27)
check("PSL2(27) g7 construction n", quad27.n, 7)

# --- product group: triples, theorem instance, induced quadruple --------------
p7x8 = direct_product(make_psl2(7), make_psl2(8))
t = time.time()
repP = ep.find_triples(p7x8, (2, 3, 7))
print(f"    product triple total={repP.total} ({time.time() - t:.1f}s)")
check("product triple total", repP.total, 336 * 1512)
check("product triple class_count", repP.class_count, 1)
tripP = repP.witnesses[7]

u = direct_product(subs24[0], make_psl2(8))
check("U order", u.order, 12096)
thmP = ep.theorem1_check(p7x8, tripP, subgroup=u)
check("product theorem1", (thmP.image_order, thmP.image_perfect, thmP.signature),
      (168, True, "(0;2,2,2,3)"))
t = time.time()
indP = ep.induced_quadruple(p7x8, tripP, u)
print(f"    product induced n_values: {indP.n_values} ({time.time() - t:.1f}s)")
check("product induced 36", 36 in indP.n_values, True)

print(f"\nALL EPISEARCH SMOKE CHECKS PASSED in {time.time() - T0:.1f}s")
