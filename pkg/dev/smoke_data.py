"""Timing smoke run of the searches on the shipped data groups."""
import sys
import time

sys.path.insert(0, "/root/pkg/src")

from tql import episearch, zoo


def run(name, fn):
    t0 = time.time()
    out = fn()
    print(f"[{time.time()-t0:7.1f}s] {name}: {out}", flush=True)
    return out


def tri(r):
    return f"total={r.total} cc={r.class_count}"


def quad(r):
    return f"total={r.total} cc={r.class_count} n_dist={r.n_distribution}"


def ext(r):
    return f"exists={r.exists} checked={r.triples_checked} t={r.t.cycle_string() if r.t else None}"


m12 = zoo.load_group("src/tql/data/m12.grp")
a9 = zoo.make_standard("alt", 9)
j2 = zoo.load_group("src/tql/data/j2.grp")
j1 = zoo.load_group("src/tql/data/j1.grp")

run("m12 triples", lambda: tri(episearch.find_triples(m12)))
run("m12 quads", lambda: quad(episearch.find_quadruples(m12)))
run("a9 triples", lambda: tri(episearch.find_triples(a9)))
run("a9 quads", lambda: quad(episearch.find_quadruples(a9)))
run("j2 triples", lambda: tri(episearch.find_triples(j2)))
run("j2 ext237", lambda: ext(episearch.extended_hurwitz_survey(j2)))
run("j2 quads", lambda: quad(episearch.find_quadruples(j2)))
run("j1 triples", lambda: tri(episearch.find_triples(j1)))
run("j1 ext237", lambda: ext(episearch.extended_hurwitz_survey(j1)))
run("j1 quads", lambda: quad(episearch.find_quadruples(j1)))
