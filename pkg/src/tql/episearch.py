"""Exhaustive, class-pruned searches for generating tuples.

A (2,3,7)-triple (exact orders, product of the three equal to the identity,
pair generating the whole group) certifies a surface action of the largest
possible order 84(g-1); a (2,2,2,3)-quadruple certifies the order-12(g-1)
analogue, and n = |x1*x2| refines the latter classification.  Exact orders
everywhere are what make the corresponding kernels torsion free, so orders
are never tested as "divides" anywhere in this module.

Search layout: the outermost tuple slot runs over conjugacy-class
representatives with multiplicity equal to the class size (conjugation
preserves every condition), inner slots run over full element lists as numpy
row matrices, and the expensive generation check runs last on the few
survivors of the vectorized exact-order filters.
"""

from __future__ import annotations

import itertools
import multiprocessing
import random
import weakref
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .perm import (
    GroupHandle,
    GroupMetadata,
    Permutation,
    build_group,
    coset_action,
    generates,
    subgroup_order_bounded,
)
from .zoo import factorize, make_psl2, prime_power
from .fuchsian import (
    Signature,
    SignatureError,
    enumerate_subgroup_signatures,
    euler_characteristic,
    subgroup_signature,
    surface_genus_from_order,
)

SIG_TRIANGLE = Signature(0, (2, 3, 7))
SIG_QUADRANGLE = Signature(0, (2, 2, 2, 3))
HANDLEBODY_NS = (2, 3, 4, 5)
MAX_INVOLUTIONS = 20_000


class SearchCapError(RuntimeError):
    """A search was refused because it exceeds a configured cap."""


class SearchInconclusiveError(RuntimeError):
    """A bounded search exhausted its space without settling the question."""


class TupleValidationError(ValueError):
    """A reported witness failed independent re-validation."""


# ---------------------------------------------------------------------------
# witness tuples


@dataclass(frozen=True)
class GeneratingTriple:
    """(x, y, z) with x*y*z = 1, exact orders, and <x,y> the whole group."""

    x: Permutation
    y: Permutation
    z: Permutation
    group: GroupHandle
    orders: tuple[int, int, int] = (2, 3, 7)

    def validate(self) -> "GeneratingTriple":
        l, m, k = self.orders
        if self.x.order() != l or self.y.order() != m or self.z.order() != k:
            raise TupleValidationError(
                f"triple orders are ({self.x.order()},{self.y.order()},{self.z.order()}), "
                f"want {self.orders}")
        if not (self.x * self.y * self.z).is_identity:
            raise TupleValidationError("triple product x*y*z is not the identity")
        if not generates([self.x, self.y], self.group):
            raise TupleValidationError("triple does not generate the group")
        return self


@dataclass(frozen=True)
class GeneratingQuadruple:
    """(x1..x4) with orders (2,2,2,3), product 1, generating the group."""

    x1: Permutation
    x2: Permutation
    x3: Permutation
    x4: Permutation
    group: GroupHandle

    @property
    def n(self) -> int:
        return (self.x1 * self.x2).order()

    def validate(self) -> "GeneratingQuadruple":
        orders = (self.x1.order(), self.x2.order(), self.x3.order(), self.x4.order())
        if orders != (2, 2, 2, 3):
            raise TupleValidationError(f"quadruple orders are {orders}, want (2, 2, 2, 3)")
        if not (self.x1 * self.x2 * self.x3 * self.x4).is_identity:
            raise TupleValidationError("quadruple product is not the identity")
        if (self.x1 * self.x2).order() != (self.x3 * self.x4).order():
            raise TupleValidationError("|x1*x2| != |x3*x4| (impossible for product 1)")
        if not generates([self.x1, self.x2, self.x3, self.x4], self.group):
            raise TupleValidationError("quadruple does not generate the group")
        return self


@dataclass
class TupleReport:
    """Exact ordered-tuple counts from one search."""

    group_name: str
    group_order: int
    kind: str                       # "triple" or "quadruple"
    orders: tuple[int, ...]
    total: int
    aut_order: int | None
    class_count: int | None
    n_distribution: dict[int, int]
    witnesses: dict[int, object]    # triple: {order_k: GeneratingTriple}; quad: {n: GeneratingQuadruple}
    n_filter: tuple[int, ...] | None = None

    @property
    def n_set(self) -> tuple[int, ...]:
        return tuple(sorted(self.n_distribution))

    def as_dict(self) -> dict:
        wit = {}
        for key, w in self.witnesses.items():
            if isinstance(w, GeneratingTriple):
                wit[str(key)] = [w.x.cycle_string(), w.y.cycle_string(), w.z.cycle_string()]
            else:
                wit[str(key)] = [w.x1.cycle_string(), w.x2.cycle_string(),
                                 w.x3.cycle_string(), w.x4.cycle_string()]
        return {
            "group": self.group_name, "group_order": self.group_order,
            "kind": self.kind, "orders": list(self.orders), "total": self.total,
            "aut_order": self.aut_order, "class_count": self.class_count,
            "n_distribution": {str(n): c for n, c in sorted(self.n_distribution.items())},
            "n_filter": sorted(self.n_filter) if self.n_filter is not None else None,
            "witnesses": wit,
        }


def _finish_report(report: TupleReport) -> TupleReport:
    if report.aut_order and report.total:
        if report.total % report.aut_order != 0:
            raise AssertionError(
                f"aut order {report.aut_order} does not divide tuple count {report.total} "
                f"for {report.group_name}; the count or the aut order is wrong")
        report.class_count = report.total // report.aut_order
    elif report.aut_order is not None:
        report.class_count = 0 if report.total == 0 else None
    return report


# ---------------------------------------------------------------------------
# element censuses and class pools

_census_cache: "weakref.WeakKeyDictionary[GroupHandle, dict[int, list[Permutation]]]" = \
    weakref.WeakKeyDictionary()
_class_cache: "weakref.WeakKeyDictionary[GroupHandle, dict[int, list[tuple[Permutation, int]]]]" = \
    weakref.WeakKeyDictionary()


def elements_of_exact_order(group: GroupHandle, orders: Iterable[int]) -> dict[int, list[Permutation]]:
    """Sorted lists of the elements of each requested exact order (cached)."""
    wanted = set(orders)
    cached = _census_cache.setdefault(group, {})
    for k in list(wanted):
        if group.order % k != 0:
            cached.setdefault(k, [])     # Lagrange: no such elements
    missing = [k for k in wanted if k not in cached]
    if missing:
        found: dict[int, list[Permutation]] = {k: [] for k in missing}
        for g in group.elements():
            k = g.order()
            if k in found:
                found[k].append(g)
        for k, lst in found.items():
            lst.sort()
            cached[k] = lst
    return {k: cached[k] for k in wanted}


def order_classes(group: GroupHandle, k: int) -> list[tuple[Permutation, int]]:
    """Conjugacy classes of the exact-order-k elements as (lex-min rep, size)."""
    cached = _class_cache.setdefault(group, {})
    if k in cached:
        return cached[k]
    pool = elements_of_exact_order(group, [k])[k]
    pool_set = {p.images for p in pool}
    conj = [g for g in group.generators] + [g.inverse() for g in group.generators]
    seen: set[tuple[int, ...]] = set()
    out: list[tuple[Permutation, int]] = []
    for p in pool:                      # ascending, so each rep is its class minimum
        if p.images in seen:
            continue
        members = {p.images}
        frontier = [p]
        while frontier:
            h = frontier.pop()
            for c in conj:
                hc = h.conjugated_by(c)
                if hc.images not in members:
                    members.add(hc.images)
                    frontier.append(hc)
        if not members <= pool_set:
            raise AssertionError("conjugation left the exact-order pool")
        seen |= members
        out.append((p, len(members)))
    cached[k] = out
    return out


def _mat(perms: Sequence[Permutation]) -> np.ndarray:
    if not perms:
        return np.zeros((0, 0), dtype=np.int16)
    degree = perms[0].degree
    if degree >= 2 ** 15:
        raise SearchCapError(f"degree {degree} too large for vectorized search")
    return np.array([p.images for p in perms], dtype=np.int16)


def _row_pow(mat: np.ndarray, e: int) -> np.ndarray:
    """Rowwise e-th power of row permutations (left-to-right composition)."""
    n, d = mat.shape
    result = np.tile(np.arange(d, dtype=mat.dtype), (n, 1))
    base = mat
    while e:
        if e & 1:
            result = np.take_along_axis(base, result, axis=1)
        e >>= 1
        if e:
            base = np.take_along_axis(base, base, axis=1)
    return result


def _exact_order_mask(mat: np.ndarray, k: int) -> np.ndarray:
    """Boolean rows whose permutations have exact order k."""
    idrow = np.arange(mat.shape[1], dtype=mat.dtype)
    mask = (_row_pow(mat, k) == idrow).all(axis=1)
    for p in factorize(k):
        mask &= ~((_row_pow(mat, k // p) == idrow).all(axis=1))
    return mask


def _blocks(n: int, parts: int) -> list[tuple[int, int]]:
    if n <= 0:
        return [(0, 0)]
    parts = max(1, min(parts, n))
    step = -(-n // parts)
    return [(lo, min(lo + step, n)) for lo in range(0, n, step)]


_MP_CTX: dict = {}


def _map_blocks(worker, blocks: list, threads: int) -> list:
    if threads <= 1 or len(blocks) <= 1:
        return [worker(b) for b in blocks]
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(min(threads, len(blocks))) as pool:
        return pool.map(worker, blocks)


# ---------------------------------------------------------------------------
# triple search


def _triple_block(bounds: tuple[int, int, int]) -> tuple[int, list[int]]:
    """Scan y rows [lo, hi) against class rep ci; return surviving y indices."""
    ci, lo, hi = bounds
    group: GroupHandle = _MP_CTX["group"]
    ymat: np.ndarray = _MP_CTX["ymat"]
    ys: list[Permutation] = _MP_CTX["ys"]
    k: int = _MP_CTX["k"]
    rep: Permutation = _MP_CTX["classes"][ci][0]
    x_arr = np.asarray(rep.images, dtype=ymat.dtype)
    sub = ymat[lo:hi]
    prod = sub[:, x_arr]                     # row j = x * y_j
    mask = _exact_order_mask(prod, k)
    hits = []
    for off in np.nonzero(mask)[0]:
        j = lo + int(off)
        if generates([rep, ys[j]], group):
            hits.append(j)
    return ci, hits


_scan_cache: "weakref.WeakKeyDictionary[GroupHandle, dict]" = weakref.WeakKeyDictionary()


def _triple_scan(group: GroupHandle, orders: tuple[int, int, int], threads: int,
                 use_cache: bool = True,
                 ) -> tuple[list[tuple[Permutation, int]], list[list[int]], list[Permutation]]:
    """Class-pruned scan; returns (classes of order-l, generating y indices per
    class rep, the order-m element list).  Results are thread-count invariant
    and cached per group."""
    cached = _scan_cache.setdefault(group, {})
    if use_cache and orders in cached:
        return cached[orders]
    l, m, k = orders
    census = elements_of_exact_order(group, [l, m])
    xs, ys = census[l], census[m]
    classes = order_classes(group, l) if xs else []
    survivors: list[list[int]] = [[] for _ in classes]
    if xs and ys and group.order % k == 0:
        ymat = _mat(ys)
        _MP_CTX.update(group=group, ymat=ymat, ys=ys, k=k, classes=classes)
        n_blocks = max(1, min(max(threads, 1) * 2, -(-len(ys) // 512)))
        blocks = []
        for ci in range(len(classes)):
            for lo, hi in _blocks(len(ys), n_blocks):
                blocks.append((ci, lo, hi))
        for ci, hits in _map_blocks(_triple_block, blocks, threads):
            survivors[ci].extend(hits)
        for lst in survivors:
            lst.sort()
    result = classes, survivors, ys
    if use_cache:
        cached[orders] = result
    return result


def find_triples(group: GroupHandle, orders: tuple[int, int, int] = (2, 3, 7),
                 threads: int = 1) -> TupleReport:
    """Count ordered (l,m,k) generating tuples with exact orders.

    total = sum over hits of the outer class size; when the automorphism
    group order is known, class_count = total / aut_order (the automorphism
    action on generating tuples is free, so this is exact).
    """
    l, m, k = orders
    classes, survivors, ys = _triple_scan(group, orders, threads)
    total = 0
    witness: GeneratingTriple | None = None
    for (rep, size), hits in zip(classes, survivors):
        total += size * len(hits)
        if hits and witness is None:
            y = ys[hits[0]]
            witness = GeneratingTriple(rep, y, (rep * y).inverse(), group, orders).validate()
    report = TupleReport(
        group_name=group.name, group_order=group.order, kind="triple",
        orders=orders, total=total, aut_order=group.metadata.aut_order,
        class_count=None, n_distribution={},
        witnesses={k: witness} if witness else {})
    return _finish_report(report)


# ---------------------------------------------------------------------------
# quadruple search


def _quad_block(bounds: tuple[int, int, int]) -> tuple[dict[int, int], dict[int, tuple], int]:
    """Scan x2 indices [lo, hi) for class rep ci; returns (per-n generating
    (x2,x3) pair counts, per-n lexicographically least witness, pairs tried)."""
    ci, lo, hi = bounds
    group: GroupHandle = _MP_CTX["group"]
    imat: np.ndarray = _MP_CTX["imat"]
    invs: list[Permutation] = _MP_CTX["invs"]
    n_filter: frozenset[int] | None = _MP_CTX["n_filter"]
    rep: Permutation = _MP_CTX["classes"][ci][0]
    counts: dict[int, int] = {}
    wits: dict[int, tuple] = {}
    pairs = 0
    for j in range(lo, hi):
        x2 = invs[j]
        left = rep * x2
        n = left.order()
        if n_filter is not None and n not in n_filter:
            continue
        pairs += 1
        c_arr = np.asarray(left.images, dtype=imat.dtype)
        prod = imat[:, c_arr]                # row t = x1 * x2 * x3_t
        mask = _exact_order_mask(prod, 3)
        for off in np.nonzero(mask)[0]:
            x3 = invs[int(off)]
            if not generates([rep, x2, x3], group):
                continue
            counts[n] = counts.get(n, 0) + 1
            key = (rep.images, x2.images, x3.images)
            if n not in wits or key < wits[n]:
                wits[n] = key
    return counts, wits, pairs


def find_quadruples(group: GroupHandle, n_filter: Iterable[int] | None = None,
                    threads: int = 1,
                    max_involutions: int = MAX_INVOLUTIONS) -> TupleReport:
    """Count ordered (2,2,2,3) generating quadruples; x4 = (x1*x2*x3)^-1.

    n = |x1*x2| is recorded per tuple.  An n_filter restricts the search to
    pairs with n in the filter (sound: n depends only on x1, x2) and lifts
    the involution-count cap.
    """
    nf = frozenset(n_filter) if n_filter is not None else None
    invs = elements_of_exact_order(group, [2])[2]
    aut = group.metadata.aut_order
    base = TupleReport(group_name=group.name, group_order=group.order,
                       kind="quadruple", orders=(2, 2, 2, 3), total=0,
                       aut_order=aut, class_count=None, n_distribution={},
                       witnesses={},
                       n_filter=tuple(sorted(nf)) if nf is not None else None)
    if not invs or group.order % 3 != 0:
        return _finish_report(base)
    if nf is None and len(invs) > max_involutions:
        raise SearchCapError(
            f"{group.name} has {len(invs)} involutions (cap {max_involutions}); "
            "supply an n_filter to search anyway")
    classes = order_classes(group, 2)
    imat = _mat(invs)
    _MP_CTX.update(group=group, imat=imat, invs=invs, n_filter=nf, classes=classes)
    dist: dict[int, int] = {}
    wit_keys: dict[int, tuple] = {}
    n_blocks = max(1, min(max(threads, 1) * 4, -(-len(invs) // 8)))
    blocks = []
    for ci in range(len(classes)):
        for lo, hi in _blocks(len(invs), n_blocks):
            blocks.append((ci, lo, hi))
    results = _map_blocks(_quad_block, blocks, threads)
    for (ci, _, _), (counts, wits, _) in zip(blocks, results):
        size = classes[ci][1]
        for n, c in counts.items():
            dist[n] = dist.get(n, 0) + size * c
        for n, key in wits.items():
            if n not in wit_keys or key < wit_keys[n]:
                wit_keys[n] = key
    witnesses: dict[int, GeneratingQuadruple] = {}
    for n, (i1, i2, i3) in wit_keys.items():
        x1, x2, x3 = (Permutation(list(t)) for t in (i1, i2, i3))
        x4 = (x1 * x2 * x3).inverse()
        witnesses[n] = GeneratingQuadruple(x1, x2, x3, x4, group).validate()
        if witnesses[n].n != n:
            raise AssertionError("witness filed under the wrong n")
    base.total = sum(dist.values())
    base.n_distribution = dist
    base.witnesses = witnesses
    return _finish_report(base)


# ---------------------------------------------------------------------------
# classification


@dataclass
class ClassificationReport:
    group_name: str
    group_order: int
    hurwitz: bool
    hurwitz_total: int
    hurwitz_class_count: int | None
    maximal_reducible: bool
    handlebody: bool
    handlebody_types: tuple[int, ...]
    bounded_surface: bool
    g7: bool
    n_set: tuple[int, ...]
    hurwitz_genus: int | None
    reducible_genus: int | None
    triple_witness: GeneratingTriple | None
    quadruple_witnesses: dict[int, GeneratingQuadruple]

    def as_dict(self) -> dict:
        return {
            "group": self.group_name, "group_order": self.group_order,
            "flags": {
                "hurwitz": self.hurwitz,
                "maximal_reducible": self.maximal_reducible,
                "handlebody": self.handlebody,
                "bounded_surface": self.bounded_surface,
                "g7": self.g7,
            },
            "handlebody_types": list(self.handlebody_types),
            "hurwitz_total": self.hurwitz_total,
            "hurwitz_class_count": self.hurwitz_class_count,
            "n_set": list(self.n_set),
            "hurwitz_genus": self.hurwitz_genus,
            "reducible_genus": self.reducible_genus,
        }


def classify(group: GroupHandle, threads: int = 1,
             n_filter: Iterable[int] | None = None) -> ClassificationReport:
    """Full per-group verdict: triangle and quadrangle searches plus genera.

    With an n_filter the quadrangle flags are computed over the filtered n
    only (absence claims then cover just those n).
    """
    triples = find_triples(group, (2, 3, 7), threads=threads)
    quads = find_quadruples(group, n_filter=n_filter, threads=threads)
    n_set = quads.n_set
    handle_types = tuple(n for n in n_set if n in HANDLEBODY_NS)
    hurwitz_genus = surface_genus_from_order(group.order, SIG_TRIANGLE) \
        if triples.total else None
    reducible_genus = surface_genus_from_order(group.order, SIG_QUADRANGLE) \
        if quads.total else None
    report = ClassificationReport(
        group_name=group.name, group_order=group.order,
        hurwitz=triples.total > 0, hurwitz_total=triples.total,
        hurwitz_class_count=triples.class_count,
        maximal_reducible=quads.total > 0,
        handlebody=bool(handle_types), handlebody_types=handle_types,
        bounded_surface=2 in n_set, g7=7 in n_set, n_set=n_set,
        hurwitz_genus=hurwitz_genus, reducible_genus=reducible_genus,
        triple_witness=next(iter(triples.witnesses.values()), None),
        quadruple_witnesses=quads.witnesses)
    if report.bounded_surface and not report.handlebody:
        raise AssertionError("flag implication violated: bounded_surface => handlebody")
    if (report.handlebody or report.g7) and not report.maximal_reducible:
        raise AssertionError("flag implication violated: G_n flags need a quadruple")
    return report


# ---------------------------------------------------------------------------
# dihedral witnesses and the n = 7 constructions


def _inverting_hit(imat: np.ndarray, z: Permutation) -> int | None:
    """Least row index t of imat with t*z*t = z^-1, or None."""
    z_arr = np.asarray(z.images, dtype=imat.dtype)
    zinv_arr = np.asarray(z.inverse().images, dtype=imat.dtype)
    tz = z_arr[imat]                               # row t: t then z
    tzt = np.take_along_axis(imat, tz, axis=1)     # row t: t*z*t
    hits = np.nonzero((tzt == zinv_arr).all(axis=1))[0]
    return int(hits[0]) if hits.size else None


def involution_inverting(group: GroupHandle, z: Permutation) -> Permutation | None:
    """The least involution t with t*z*t = z^-1, or None."""
    invs = elements_of_exact_order(group, [2])[2]
    if not invs:
        return None
    hit = _inverting_hit(_mat(invs), z)
    return invs[hit] if hit is not None else None


def inverting_involution_exists(group: GroupHandle, k: int) -> tuple[Permutation, Permutation] | None:
    """A pair (z, t) with |z| = k, |t| = 2, t*z*t = z^-1, or None.

    Such a pair spans a dihedral subgroup of order 2k.  Checking one z per
    conjugacy class is exhaustive: conjugating a witness follows the class.
    """
    census = elements_of_exact_order(group, [2, k])
    invs = census[2]
    if not invs or not census[k]:
        return None
    imat = _mat(invs)
    for z, _size in order_classes(group, k):
        hit = _inverting_hit(imat, z)
        if hit is not None:
            return z, invs[hit]
    return None


def g7_quadruple_from_triple(triple: GeneratingTriple,
                             t: Permutation) -> GeneratingQuadruple:
    """Turn a (2,3,7)-triple plus an involution inverting z into a quadruple
    with n = 7: (t, t*z, x, y) has product t*(t*z)*x*y = z*(x*y) = z*z^-1 = 1,
    and t*z is an involution because (t*z)^2 = (t*z*t)*z = z^-1*z."""
    triple.validate()
    if t.order() != 2:
        raise TupleValidationError(f"t has order {t.order()}, want an involution")
    z = triple.z
    if t * z * t != z.inverse():
        raise TupleValidationError("t does not invert z")
    quad = GeneratingQuadruple(t, t * z, triple.x, triple.y, triple.group)
    quad.validate()
    if quad.n != z.order():
        raise AssertionError("constructed quadruple has the wrong n")
    return quad


# ---------------------------------------------------------------------------
# extension to the reflection group


def _extension_witness(imat: np.ndarray, invs: list[Permutation],
                       x: Permutation, y: Permutation) -> Permutation | None:
    """Involution t with t*x*t = x and t*y*t = y^-1 (lex-least), or None."""
    dtype = imat.dtype
    x_arr = np.asarray(x.images, dtype=dtype)
    tx = x_arr[imat]
    xt = imat[:, x_arr]
    commuting = np.nonzero((tx == xt).all(axis=1))[0]
    if not commuting.size:
        return None
    sub = imat[commuting]
    y_arr = np.asarray(y.images, dtype=dtype)
    yinv_arr = np.asarray(y.inverse().images, dtype=dtype)
    ty = y_arr[sub]
    tyt = np.take_along_axis(sub, ty, axis=1)
    hits = np.nonzero((tyt == yinv_arr).all(axis=1))[0]
    if not hits.size:
        return None
    return invs[int(commuting[hits[0]])]


def extended_hurwitz_test(group: GroupHandle, triple: GeneratingTriple) -> Permutation | None:
    """Does the triple's surjection extend to the index-2 reflection extension
    of the triangle group?  Criterion: an involution t centralizing x and
    inverting y.  Returns the least such t, or None."""
    triple.validate()
    invs = elements_of_exact_order(group, [2])[2]
    if not invs:
        return None
    return _extension_witness(_mat(invs), invs, triple.x, triple.y)


@dataclass
class ExtensionSurveyReport:
    group_name: str
    exists: bool
    triple: GeneratingTriple | None
    t: Permutation | None
    triples_checked: int

    def as_dict(self) -> dict:
        return {"group": self.group_name, "exists": self.exists,
                "triples_checked": self.triples_checked,
                "witness_t": self.t.cycle_string() if self.t else None}


def extended_hurwitz_survey(group: GroupHandle, threads: int = 1) -> ExtensionSurveyReport:
    """Test every class of (2,3,7) triples for a reflection extension.

    Complete: every triple is conjugate to one whose x is a class
    representative, and the extension property is conjugation invariant.
    """
    classes, survivors, ys = _triple_scan(group, (2, 3, 7), threads)
    invs = elements_of_exact_order(group, [2])[2]
    imat = _mat(invs)
    checked = 0
    for (rep, _size), hits in zip(classes, survivors):
        for j in hits:
            checked += 1
            t = _extension_witness(imat, invs, rep, ys[j])
            if t is not None:
                triple = GeneratingTriple(rep, ys[j], (rep * ys[j]).inverse(),
                                          group).validate()
                return ExtensionSurveyReport(group.name, True, triple, t, checked)
    return ExtensionSurveyReport(group.name, False, None, None, checked)


# ---------------------------------------------------------------------------
# the PSL2 survey


@dataclass
class SurveyRow:
    q: int
    p: int
    f: int
    order: int
    total: int
    class_count: int | None
    pgl_class_count: int | None
    hurwitz: bool
    criterion: bool
    genus: int | None

    def as_dict(self) -> dict:
        return {"q": self.q, "p": self.p, "f": self.f, "order": self.order,
                "total": self.total, "class_count": self.class_count,
                "pgl_class_count": self.pgl_class_count,
                "hurwitz": self.hurwitz, "criterion": self.criterion,
                "genus": self.genus}


def _psl2_criterion(p: int, f: int, q: int) -> bool:
    """Arithmetic membership test for the (2,3,7) survey of PSL2(q)."""
    if q == 7:
        return True
    if f == 1:
        return p % 7 in (1, 6)
    if f == 3:
        return p % 7 in (2, 3, 4, 5)
    return False


def hurwitz_survey_psl2(q_max: int, threads: int = 1, limit: int = 50) -> list[SurveyRow]:
    """find_triples over all PSL2(q), 4 <= q <= q_max, cross-checked against
    the arithmetic criterion; any disagreement is a hard failure.

    Each row reports two orbit counts: class_count (modulo the full
    automorphism group, field maps included) and pgl_class_count (modulo
    inner and diagonal only).  They differ exactly when field automorphisms
    fuse classes, e.g. for cube prime powers.
    """
    if q_max > limit:
        raise SearchCapError(f"survey limited to q <= {limit}, asked for {q_max}")
    rows: list[SurveyRow] = []
    for q in range(4, q_max + 1):
        pp = prime_power(q)
        if pp is None:
            continue
        p, f = pp
        grp = make_psl2(q)
        rep = find_triples(grp, (2, 3, 7), threads=threads)
        hur = rep.total > 0
        crit = _psl2_criterion(p, f, q)
        if hur != crit:
            raise AssertionError(
                f"survey mismatch at q={q}: search says {hur}, criterion says {crit}")
        pgl_order = q * (q * q - 1)
        if rep.total % pgl_order:
            raise AssertionError(
                f"inner-diagonal orbit count not integral at q={q}")
        genus = surface_genus_from_order(grp.order, SIG_TRIANGLE) if hur else None
        rows.append(SurveyRow(q, p, f, grp.order, rep.total, rep.class_count,
                              rep.total // pgl_order, hur, crit, genus))
    return rows


# ---------------------------------------------------------------------------
# subgroup discovery


def _fingerprint(handle: GroupHandle) -> tuple:
    orbits = []
    seen: set[int] = set()
    for pt in range(handle.degree):
        if pt in seen:
            continue
        orb = handle.orbit(pt)
        seen |= orb
        orbits.append(len(orb))
    histogram: dict[int, int] = {}
    for g in handle.elements():
        k = g.order()
        histogram[k] = histogram.get(k, 0) + 1
    return (handle.order, tuple(sorted(orbits)), tuple(sorted(histogram.items())))


def find_subgroups_of_order(group: GroupHandle, m: int, attempts: int = 400,
                            seed: int = 0) -> list[GroupHandle]:
    """Seeded random search for order-m subgroups (1- and 2-generated).

    Semi-decision: an empty result is "none found", not a nonexistence proof.
    Results are deduplicated by an order/orbit/element-census fingerprint and
    returned in a deterministic order.
    """
    if m < 1 or group.order % m != 0:
        raise ValueError(f"{m} does not divide the group order {group.order}")
    if m == group.order:
        return [group]
    if m == 1:
        return [build_group([Permutation.identity(group.degree)],
                            GroupMetadata(name="trivial subgroup"))]
    rng = random.Random(seed)
    found: dict[tuple, GroupHandle] = {}
    for _ in range(attempts):
        a = group.random_element(rng)
        b = group.random_element(rng)
        for gens in ((a,), (a, b)):
            gens = [g for g in gens if not g.is_identity]
            if not gens:
                continue
            if subgroup_order_bounded(gens, m) != m:
                continue
            sub = build_group(gens, GroupMetadata(
                name=f"order-{m} subgroup of {group.name}"))
            fp = _fingerprint(sub)
            found.setdefault(fp, sub)
    return [found[fp] for fp in sorted(found)]


def irreducible_subgroups(group: GroupHandle, triple: GeneratingTriple,
                          attempts: int = 600, seed: int = 0,
                          ) -> list[tuple[GroupHandle, Signature]]:
    """Subgroups whose coset signature under the triple's action has genus 0
    and exactly three periods (the irreducible-action certificate).

    Only candidate indices allowed by the branching arithmetic are searched,
    and only those dividing the group order.  Subgroup discovery is the
    random semi-decision search, so the list may be incomplete.
    """
    triple.validate()
    chi = euler_characteristic(SIG_TRIANGLE)
    max_period = max(SIG_TRIANGLE.periods)
    # most negative chi of a genus-0 three-period signature is 3/max_period - 1
    d_max = int((Fraction(1) - Fraction(3, max_period)) / -chi)
    out: list[tuple[GroupHandle, Signature]] = []
    seen: set[tuple] = set()
    for d in range(2, d_max + 1):
        cands = [s for s in enumerate_subgroup_signatures(SIG_TRIANGLE, d)
                 if s.genus == 0 and len(s.periods) == 3]
        if not cands or group.order % d != 0:
            continue
        m = group.order // d
        for sub in find_subgroups_of_order(group, m, attempts=attempts, seed=seed):
            act = coset_action(group, sub)
            images = [act.image_of(w) for w in (triple.x, triple.y, triple.z)]
            try:
                sig = subgroup_signature(SIG_TRIANGLE, images, act.degree)
            except SignatureError:
                continue
            if sig.genus == 0 and len(sig.periods) == 3:
                key = (m, _fingerprint(sub), str(sig))
                if key not in seen:
                    seen.add(key)
                    out.append((sub, sig))
    return out


# ---------------------------------------------------------------------------
# boundary bookkeeping and the index-7 theorem instance


@dataclass
class HandlesReport:
    outer_genus: int
    inner_count: int
    inner_genus: int

    def as_dict(self) -> dict:
        return {"outer_genus": self.outer_genus, "inner_count": self.inner_count,
                "inner_genus": self.inner_genus}


def handles_bookkeeping(group_order: int, triangle_image_order: int) -> HandlesReport:
    """Boundary counts for the product-with-handles construction.

    outer = 1 + N/12 (quadrangle side), the triangle side contributes
    N/M components each of genus 1 + M/84; the identity
    84*(inner_genus - 1) * inner_count == 12*(outer_genus - 1) is asserted.
    """
    n, m = group_order, triangle_image_order
    if n <= 0 or m <= 0 or n % 12 or m % 84 or n % m:
        raise ValueError(
            f"need 12 | {n}, 84 | {m}, {m} | {n} for the boundary bookkeeping")
    report = HandlesReport(outer_genus=1 + n // 12, inner_count=n // m,
                           inner_genus=1 + m // 84)
    if 84 * (report.inner_genus - 1) * report.inner_count != 12 * (report.outer_genus - 1):
        raise AssertionError("boundary Euler-characteristic identity failed")
    return report


@dataclass
class Theorem1Report:
    group_name: str
    hypothesis_met: bool
    subgroup_order: int | None
    index: int | None
    image_order: int | None
    image_perfect: bool | None
    signature: str | None
    note: str = ""

    def as_dict(self) -> dict:
        return {"group": self.group_name, "hypothesis_met": self.hypothesis_met,
                "subgroup_order": self.subgroup_order, "index": self.index,
                "image_order": self.image_order, "image_perfect": self.image_perfect,
                "signature": self.signature, "note": self.note}


def theorem1_check(group: GroupHandle, triple: GeneratingTriple,
                   subgroup: GroupHandle | None = None, attempts: int = 600,
                   seed: int = 0) -> Theorem1Report:
    """Index-7 subgroup analysis: coset image order/perfectness and the
    subgroup's coset signature (expected order 168, perfect, (0;2,2,2,3))."""
    triple.validate()
    if subgroup is None:
        if group.order % 7 != 0:
            return Theorem1Report(group.name, False, None, None, None, None, None,
                                  note="group order not divisible by 7")
        candidates = find_subgroups_of_order(group, group.order // 7,
                                             attempts=attempts, seed=seed)
        if not candidates:
            return Theorem1Report(
                group.name, False, None, None, None, None, None,
                note="no index-7 subgroup found (random search is a semi-decision)")
        subgroup = candidates[0]
    if group.order % subgroup.order != 0:
        raise ValueError("subgroup order does not divide the group order")
    act = coset_action(group, subgroup)
    images = [act.image_of(w) for w in (triple.x, triple.y, triple.z)]
    sig = subgroup_signature(SIG_TRIANGLE, images, act.degree)
    return Theorem1Report(
        group.name, True, subgroup.order, act.degree, act.image.order,
        act.image.is_perfect, str(sig))


# ---------------------------------------------------------------------------
# the induced quadruple of an index-7 subgroup


@dataclass
class InducedQuadrupleReport:
    group_name: str
    subgroup_order: int
    signature: str
    n_values: tuple[int, ...]
    witnesses: dict[int, GeneratingQuadruple]

    def as_dict(self) -> dict:
        return {"group": self.group_name, "subgroup_order": self.subgroup_order,
                "signature": self.signature, "n_values": list(self.n_values)}


def induced_quadruple(group: GroupHandle, triple: GeneratingTriple,
                      subgroup: GroupHandle) -> InducedQuadrupleReport:
    """The quadruple induced on an index-7 subgroup by the triple's action.

    The canonical generators of the preimage are, up to subgroup conjugacy
    and cyclic ordering, the conjugates r_c * w * r_c^-1 of the triple
    elements at their fixed cosets (three involutions from x, one order-3
    element from y).  The search runs over exactly those subgroup classes:
    all orderings, full inner classes, with x4 forced and checked against the
    order-3 classes, then the generation test.  Every reported quadruple is
    certified independently (orders, product, generation); the search space
    provably contains the induced quadruple, so its n is among n_values.
    """
    triple.validate()
    act = coset_action(group, subgroup)
    images = [act.image_of(w) for w in (triple.x, triple.y, triple.z)]
    sig = subgroup_signature(SIG_TRIANGLE, images, act.degree)
    if sig != SIG_QUADRANGLE:
        raise SignatureError(
            f"index-{act.degree} subgroup has preimage signature {sig}, "
            f"need {SIG_QUADRANGLE}")
    reps = act.representatives
    fixed_x = [c for c in range(act.degree) if images[0].images[c] == c]
    fixed_y = [c for c in range(act.degree) if images[1].images[c] == c]
    if len(fixed_x) != 3 or len(fixed_y) != 1:
        raise AssertionError("signature promised 3 + 1 fixed cosets")
    es = []
    for c in fixed_x:
        e = reps[c] * triple.x * reps[c].inverse()
        if not subgroup.contains(e) or e.order() != 2:
            raise AssertionError("coset-fixed conjugate landed outside the subgroup")
        es.append(e)
    fy = reps[fixed_y[0]] * triple.y * reps[fixed_y[0]].inverse()
    if not subgroup.contains(fy) or fy.order() != 3:
        raise AssertionError("order-3 conjugate landed outside the subgroup")
    e_classes = [subgroup.conjugacy_class_of(e) for e in es]
    order3_images = {g.images for g in subgroup.conjugacy_class_of(fy)}
    order3_images |= {g.images for g in subgroup.conjugacy_class_of(fy.inverse())}
    n_values: set[int] = set()
    witnesses: dict[int, GeneratingQuadruple] = {}
    for a, b, c in itertools.permutations(range(3)):
        u1 = es[a]
        for u2 in e_classes[b]:
            left = u1 * u2
            n = left.order()
            if n in witnesses:
                continue
            for u3 in e_classes[c]:
                u4 = (left * u3).inverse()
                if u4.images not in order3_images:
                    continue
                if not generates([u1, u2, u3], subgroup):
                    continue
                quad = GeneratingQuadruple(u1, u2, u3, u4, subgroup).validate()
                n_values.add(n)
                witnesses.setdefault(n, quad)
                break
    if not n_values:
        raise SearchInconclusiveError(
            "no quadruple found over the coset-derived classes; "
            "inputs are inconsistent with an induced quadrangle action")
    return InducedQuadrupleReport(group.name, subgroup.order, str(sig),
                                  tuple(sorted(n_values)), witnesses)
