"""Exact orbifold-signature calculus.

Everything here is integer/rational arithmetic: Euler characteristics,
genus-from-order formulas, subgroup signatures computed from coset actions,
abelianizations via Smith normal form, and candidate-signature enumeration.
Floating point is banned in this module; genus decisions are integrality
tests and are asserted, never rounded.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .perm import FormatError, Permutation

INDEX_GUARD = 2 ** 62


class SignatureError(ValueError):
    """Inconsistent signature arithmetic (non-integral genus or index)."""


_SIG_RE = re.compile(r"^\(\s*(\d+)\s*(?:;\s*([0-9,\s]*))?\)$")


@dataclass(frozen=True)
class Signature:
    """Orbifold signature: genus plus a sorted multiset of branch periods."""

    genus: int
    periods: tuple[int, ...]

    def __init__(self, genus: int, periods: Iterable[int] = ()):
        if genus < 0:
            raise SignatureError(f"genus must be >= 0, got {genus}")
        ps = tuple(sorted(int(m) for m in periods))
        if any(m < 2 for m in ps):
            raise SignatureError(f"periods must be >= 2, got {ps}")
        object.__setattr__(self, "genus", int(genus))
        object.__setattr__(self, "periods", ps)

    @staticmethod
    def parse(text: str) -> "Signature":
        m = _SIG_RE.match(text.strip())
        if not m:
            raise FormatError(f"bad signature literal {text!r}; want (h;m1,m2,...)")
        genus = int(m.group(1))
        body = m.group(2)
        periods: list[int] = []
        if body and body.strip():
            for tok in body.split(","):
                tok = tok.strip()
                if not tok:
                    raise FormatError(f"empty period in {text!r}")
                periods.append(int(tok))
        return Signature(genus, periods)

    def __str__(self) -> str:
        if not self.periods:
            return f"({self.genus})"
        return f"({self.genus};" + ",".join(str(m) for m in self.periods) + ")"

    def __repr__(self) -> str:
        return f"Signature.parse({str(self)!r})"


def euler_characteristic(s: Signature) -> Fraction:
    """chi = 2 - 2h - sum(1 - 1/m) over the periods, exactly."""
    chi = Fraction(2 - 2 * s.genus)
    for m in s.periods:
        chi -= Fraction(m - 1, m)
    return chi


def subgroup_index(sub: Signature, parent: Signature) -> int:
    """chi(sub)/chi(parent) when that is a positive integer."""
    chi_sub = euler_characteristic(sub)
    chi_par = euler_characteristic(parent)
    if chi_sub >= 0 or chi_par >= 0:
        raise SignatureError(
            f"index arithmetic needs hyperbolic signatures, got chi {chi_sub} and {chi_par}")
    ratio = chi_sub / chi_par
    if ratio.denominator != 1 or ratio < 1:
        raise SignatureError(
            f"{sub} is not a finite-index candidate in {parent} (chi ratio {ratio})")
    return int(ratio)


def surface_genus_from_order(order: int, s: Signature) -> int:
    """Genus g with 2 - 2g = order * chi(s); requires an integer g >= 2."""
    if order <= 0:
        raise SignatureError(f"group order must be positive, got {order}")
    if order > INDEX_GUARD:
        raise SignatureError(f"order {order} exceeds the 2^62 arithmetic guard")
    chi = euler_characteristic(s)
    g = 1 - Fraction(order) * chi / 2
    if g.denominator != 1 or g < 2:
        raise SignatureError(
            f"no torsion-free-kernel surjection possible at this order: "
            f"order {order} with {s} gives genus {g}")
    return int(g)


def _transitive(images: Sequence[Permutation], degree: int) -> bool:
    if degree == 1:
        return True
    seen = {0}
    frontier = [0]
    while frontier:
        pt = frontier.pop()
        for g in images:
            img = g.images[pt]
            if img not in seen:
                seen.add(img)
                frontier.append(img)
    return len(seen) == degree


def subgroup_signature(parent: Signature, images: Sequence[Permutation],
                       index: int) -> Signature:
    """Signature of an index-d subgroup from the coset action of the canonical
    generators: each length-l cycle of the i-th image with l < m_i contributes
    a period m_i / l; the genus is solved from chi(sub) = d * chi(parent).
    """
    if parent.genus != 0:
        raise SignatureError("subgroup signatures are computed for genus-0 parents only")
    if len(images) != len(parent.periods):
        raise SignatureError(
            f"need one coset image per period: {len(parent.periods)} periods, "
            f"{len(images)} images")
    if index < 1 or index > INDEX_GUARD:
        raise SignatureError(f"index {index} out of range")
    degree = images[0].degree if images else index
    if degree != index or any(g.degree != index for g in images):
        raise SignatureError("coset images must act on exactly `index` points")
    prod = Permutation.identity(index)
    for g in images:
        prod = prod * g
    if not prod.is_identity:
        raise SignatureError("canonical-generator images must multiply to the identity")
    if not _transitive(images, index):
        raise SignatureError("coset action is not transitive; not a subgroup action")
    periods: list[int] = []
    for m, g in zip(parent.periods, images):
        for l in g.cycle_lengths():
            if m % l != 0:
                raise SignatureError(
                    f"cycle length {l} does not divide the period {m}; "
                    "images are not a (2,3,...)-style canonical tuple")
            if l < m:
                periods.append(m // l)
    chi_sub = index * euler_characteristic(parent)
    h2 = 2 - chi_sub - sum(Fraction(m - 1, m) for m in periods)
    if h2.denominator != 1 or h2 < 0 or int(h2) % 2 != 0:
        raise SignatureError(
            f"inconsistent branching data: genus equation gives 2h = {h2}")
    return Signature(int(h2) // 2, periods)


def smith_normal_form(rows: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors (each dividing the next) of an integer matrix."""
    a = [list(map(int, row)) for row in rows]
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    factors: list[int] = []
    top = 0
    while top < nrows and top < ncols:
        # find a nonzero pivot with the least absolute value
        pivot = None
        best = None
        for i in range(top, nrows):
            for j in range(top, ncols):
                v = abs(a[i][j])
                if v and (best is None or v < best):
                    best = v
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        a[top], a[pi] = a[pi], a[top]
        for row in a:
            row[top], row[pj] = row[pj], row[top]
        dirty = False
        p = a[top][top]
        for i in range(top + 1, nrows):
            if a[i][top]:
                q = a[i][top] // p
                for j in range(top, ncols):
                    a[i][j] -= q * a[top][j]
                if a[i][top]:
                    dirty = True
        for j in range(top + 1, ncols):
            if a[top][j]:
                q = a[top][j] // p
                for i in range(top, nrows):
                    a[i][j] -= q * a[i][top]
                if a[top][j]:
                    dirty = True
        if dirty:
            continue  # remainders remain; rerun pivot selection at this corner
        factors.append(abs(p))
        top += 1
    # enforce the divisibility chain
    changed = True
    while changed:
        changed = False
        for i in range(len(factors) - 1):
            x, y = factors[i], factors[i + 1]
            if y % x != 0:
                g = math.gcd(x, y)
                factors[i], factors[i + 1] = g, x * y // g
                changed = True
    return factors


@dataclass(frozen=True)
class AbelianInvariants:
    """Torsion invariant factors (ascending divisibility) plus free rank."""

    torsion: tuple[int, ...]
    free_rank: int

    def __str__(self) -> str:
        parts = [f"Z{m}" for m in self.torsion]
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        return " x ".join(parts) if parts else "trivial"

    @property
    def order(self) -> int | None:
        """Group order when finite, else None."""
        if self.free_rank:
            return None
        return math.prod(self.torsion) if self.torsion else 1


def abelianization(s: Signature) -> AbelianInvariants:
    """Abelianized signature group: periods give diag(m_i) relations, the
    product relation gives an all-ones row, handles contribute 2h free ranks
    (the commutator part of the long relation dies under abelianization)."""
    r = len(s.periods)
    if r == 0:
        return AbelianInvariants((), 2 * s.genus)
    rows = [[s.periods[i] if j == i else 0 for j in range(r)] for i in range(r)]
    rows.append([1] * r)
    factors = smith_normal_form(rows)
    torsion = tuple(f for f in factors if f > 1)
    free = r - len(factors) + 2 * s.genus
    return AbelianInvariants(torsion, free)


def _divisor_partitions(d: int, divisors: Sequence[int]) -> Iterable[tuple[int, ...]]:
    """All multisets of the given divisors summing to d (parts non-increasing)."""
    divs = sorted(divisors, reverse=True)

    def rec(rest: int, start: int, acc: list[int]):
        if rest == 0:
            yield tuple(acc)
            return
        for k in range(start, len(divs)):
            part = divs[k]
            if part <= rest:
                acc.append(part)
                yield from rec(rest - part, k, acc)
                acc.pop()

    yield from rec(d, 0, [])


def enumerate_subgroup_signatures(parent: Signature, index: int) -> list[Signature]:
    """Candidate signatures of index-d subgroups of a genus-0 signature group.

    Implements the Riemann-Hurwitz branching conditions only: for each parent
    period m, the d cosets split into cycles whose lengths divide m, each
    length l < m contributing a period m/l; genus forced by chi multiplicativity.
    Candidates are necessary-condition survivors, not certified realizable.
    """
    if parent.genus != 0:
        raise SignatureError("candidate enumeration expects a genus-0 parent")
    if index < 1 or index > 5000:
        raise SignatureError(f"index {index} out of supported range 1..5000")
    chi_sub = index * euler_characteristic(parent)
    per_period: list[list[tuple[int, ...]]] = []
    for m in parent.periods:
        divisors = [l for l in range(1, m + 1) if m % l == 0]
        choices = []
        for part in _divisor_partitions(index, divisors):
            choices.append(tuple(m // l for l in part if l < m))
        per_period.append(choices)
    results: set[tuple[int, tuple[int, ...]]] = set()

    def rec(i: int, acc: list[int]):
        if i == len(per_period):
            h2 = 2 - chi_sub - sum(Fraction(m - 1, m) for m in acc)
            if h2.denominator == 1 and h2 >= 0 and int(h2) % 2 == 0:
                results.add((int(h2) // 2, tuple(sorted(acc))))
            return
        for choice in per_period[i]:
            rec(i + 1, acc + list(choice))

    rec(0, [])
    sigs = [Signature(h, ps) for h, ps in results]
    sigs.sort(key=lambda s2: (s2.genus, s2.periods))
    return sigs
