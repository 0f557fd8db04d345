"""Exact permutation-group machinery: elements, stabilizer chains, coset actions.

Composition is left-to-right throughout: (p * q)(i) = q(p(i)).  Points are
0-based internally; the text format (cycle strings, generator files) is 1-based.
"""

from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

DEFAULT_ENUMERATION_CAP = 2_000_000


class DegreeMismatchError(ValueError):
    """Operands act on different point sets."""


class EnumerationCapError(RuntimeError):
    """A full-element walk would exceed the configured cap."""


class NotASubgroupError(ValueError):
    """A handle passed as a subgroup has a generator outside the parent."""


class OrderMismatchError(ValueError):
    """Declared group order does not match the computed stabilizer chain."""


class FormatError(ValueError):
    """Malformed cycle string or generator file."""


class Permutation:
    """A bijection of {0, ..., degree-1}, stored as the tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        imgs = tuple(images)
        if sorted(imgs) != list(range(len(imgs))):
            raise FormatError(f"not a permutation of 0..{len(imgs) - 1}: {imgs!r}")
        self.images = imgs

    @classmethod
    def _raw(cls, imgs: tuple[int, ...]) -> "Permutation":
        # trusted constructor: skips the bijection check on hot paths
        p = object.__new__(cls)
        p.images = imgs
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Left-to-right product of the given cycles (0-based points).

        Disjoint cycles give the usual simultaneous notation; overlapping
        cycles are multiplied in the order written.
        """
        result = cls.identity(degree)
        for cyc in cycles:
            if len(set(cyc)) != len(cyc):
                raise FormatError(f"repeated point in cycle {cyc!r}")
            imgs = list(range(degree))
            for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
                if not 0 <= a < degree:
                    raise FormatError(f"point {a} out of range for degree {degree}")
                imgs[a] = b
            result = result * cls._raw(tuple(imgs))
        return result

    @property
    def degree(self) -> int:
        return len(self.images)

    @property
    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        a, b = self.images, other.images
        if len(a) != len(b):
            raise DegreeMismatchError(f"degree {len(a)} vs {len(b)}")
        return Permutation._raw(tuple(b[i] for i in a))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images):
            inv[v] = i
        return Permutation._raw(tuple(inv))

    def __pow__(self, n: int) -> "Permutation":
        if n < 0:
            return self.inverse() ** (-n)
        result = Permutation.identity(self.degree)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugated_by(self, g: "Permutation") -> "Permutation":
        """g^-1 * self * g, computed in one pass."""
        a, gi = self.images, g.images
        if len(a) != len(gi):
            raise DegreeMismatchError(f"degree {len(a)} vs {len(gi)}")
        res = [0] * len(a)
        for i, ai in enumerate(a):
            res[gi[i]] = gi[ai]
        return Permutation._raw(tuple(res))

    def order(self) -> int:
        n = 1
        seen = [False] * len(self.images)
        for start, img in enumerate(self.images):
            if seen[start] or img == start:
                continue
            length = 0
            j = start
            while not seen[j]:
                seen[j] = True
                j = self.images[j]
                length += 1
            n = math.lcm(n, length)
        return n

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, sorted."""
        seen = [False] * len(self.images)
        out = []
        for start, img in enumerate(self.images):
            if seen[start]:
                continue
            seen[start] = True
            if img == start:
                continue
            cyc = [start]
            j = img
            while j != start:
                seen[j] = True
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def cycle_lengths(self) -> list[int]:
        """All cycle lengths including fixed points, ascending."""
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            length = 0
            j = start
            while not seen[j]:
                seen[j] = True
                j = self.images[j]
                length += 1
            out.append(length)
        return sorted(out)

    def fixed_points(self) -> list[int]:
        return [i for i, v in enumerate(self.images) if i == v]

    def cycle_string(self) -> str:
        """1-based disjoint cycle notation, '()' for the identity."""
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + ",".join(str(i + 1) for i in c) + ")" for c in cycs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()!r}, degree={self.degree})"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse 1-based cycle notation like '(1,2,3)(4,5)' or '()'."""
    stripped = re.sub(r"\s+", "", text)
    if stripped in ("()", ""):
        return Permutation.identity(degree)
    consumed = _CYCLE_RE.sub("", stripped)
    if consumed:
        raise FormatError(f"unparsable cycle text {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(stripped):
        if not body:
            continue
        try:
            pts = [int(tok) for tok in body.split(",")]
        except ValueError as exc:
            raise FormatError(f"bad cycle body {body!r}") from exc
        if any(pt < 1 or pt > degree for pt in pts):
            raise FormatError(f"point out of range 1..{degree} in {text!r}")
        cycles.append([pt - 1 for pt in pts])
    return Permutation.from_cycles(degree, cycles)


@dataclass(frozen=True)
class GroupMetadata:
    name: str | None = None
    known_order: int | None = None
    aut_order: int | None = None
    simple: bool | None = None


@dataclass(frozen=True)
class GeneratorFile:
    degree: int
    generators: tuple[Permutation, ...]
    order: int | None
    aut_order: int | None
    name: str | None


def read_generator_file(path: str) -> GeneratorFile:
    """Read the textual generator format.

    Line 1: 'degree <d>'.  Optional 'order <N>', 'aut_order <N>', 'name <s>'.
    Every other non-comment line is one generator in 1-based cycle notation.
    '#' starts a comment.
    """
    degree = None
    order = None
    aut_order = None
    name = None
    gens: list[Permutation] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            head = line.split(None, 1)[0]
            if degree is None:
                if head != "degree":
                    raise FormatError(f"{path}:{lineno}: first line must declare the degree")
                degree = int(line.split(None, 1)[1])
                if degree < 1:
                    raise FormatError(f"{path}:{lineno}: degree must be positive")
                continue
            if head == "order":
                order = int(line.split(None, 1)[1])
            elif head == "aut_order":
                aut_order = int(line.split(None, 1)[1])
            elif head == "name":
                name = line.split(None, 1)[1].strip()
            else:
                try:
                    gens.append(parse_cycles(line, degree))
                except FormatError as exc:
                    raise FormatError(f"{path}:{lineno}: {exc}") from exc
    if degree is None:
        raise FormatError(f"{path}: empty generator file")
    if not gens:
        raise FormatError(f"{path}: no generators")
    return GeneratorFile(degree, tuple(gens), order, aut_order, name)


def write_generator_file(path: str, degree: int, generators: Sequence[Permutation],
                         order: int | None = None, aut_order: int | None = None,
                         name: str | None = None, header_comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        if header_comment:
            for line in header_comment.splitlines():
                fh.write(f"# {line}\n")
        fh.write(f"degree {degree}\n")
        if order is not None:
            fh.write(f"order {order}\n")
        if aut_order is not None:
            fh.write(f"aut_order {aut_order}\n")
        if name is not None:
            fh.write(f"name {name}\n")
        for g in generators:
            fh.write(g.cycle_string() + "\n")


class _Level:
    __slots__ = ("point", "gens", "transversal", "orbit", "_done")

    def __init__(self, point: int, degree: int):
        self.point = point
        self.gens: list[tuple[Permutation, Permutation]] = []  # (g, g^-1)
        ident = Permutation.identity(degree)
        self.transversal: dict[int, tuple[Permutation, Permutation]] = {point: (ident, ident)}
        self.orbit: list[int] = [point]  # insertion order, BFS
        self._done: set[tuple[int, int]] = set()  # processed (point, gen index) pairs


class _ChainBuilder:
    """Deterministic Schreier-Sims.  Each new level takes the smallest point
    moved by the residue that creates it, so chains are reproducible for a
    fixed generator sequence."""

    def __init__(self, degree: int, abort_above: int | None = None):
        self.degree = degree
        self.levels: list[_Level] = []
        self.abort_above = abort_above
        self.aborted = False

    def order(self) -> int:
        n = 1
        for level in self.levels:
            n *= len(level.transversal)
        return n

    def sift_from(self, g: Permutation, start: int) -> tuple[Permutation, int]:
        for idx in range(start, len(self.levels)):
            level = self.levels[idx]
            img = g.images[level.point]
            if img == level.point:
                continue
            entry = level.transversal.get(img)
            if entry is None:
                return g, idx
            g = g * entry[1]
        return g, len(self.levels)

    def sift(self, g: Permutation) -> Permutation:
        return self.sift_from(g, 0)[0]

    def add_generator(self, g: Permutation, level: int = 0) -> None:
        work = [(g, level)]
        while work and not self.aborted:
            p, lvl = work.pop()
            residue, at = self.sift_from(p, lvl)
            if residue.is_identity:
                continue
            self._install(residue, lvl, at, work)

    def _install(self, g: Permutation, start: int, stick: int,
                 work: list[tuple[Permutation, int]]) -> None:
        # The residue fixes every base point above its stick level, so it is a
        # legitimate generator for each level from the sift's start down to
        # where it stuck.  Installing it only at the stick level would leave
        # shallower orbits closed under too few generators.
        if stick == len(self.levels):
            moved = min(i for i, v in enumerate(g.images) if i != v)
            self.levels.append(_Level(moved, self.degree))
        pair = (g, g.inverse())
        for lvl in range(start, stick + 1):
            self._close(lvl, pair, work)
            if self.aborted:
                return

    def _close(self, lvl: int, pair: tuple[Permutation, Permutation],
               work: list[tuple[Permutation, int]]) -> None:
        level = self.levels[lvl]
        level.gens.append(pair)
        # close the orbit and sift every new Schreier generator one level down
        i = 0
        while i < len(level.orbit):
            pt = level.orbit[i]
            u_pt = level.transversal[pt][0]
            for j, (gen, _) in enumerate(level.gens):
                if (pt, j) in level._done:
                    continue
                level._done.add((pt, j))
                img = gen.images[pt]
                entry = level.transversal.get(img)
                if entry is None:
                    u = u_pt * gen
                    level.transversal[img] = (u, u.inverse())
                    level.orbit.append(img)
                    if self.abort_above is not None and self.order() > self.abort_above:
                        self.aborted = True
                        return
                else:
                    schreier = u_pt * gen * entry[1]
                    if not schreier.is_identity:
                        work.append((schreier, lvl + 1))
            i += 1


class GroupHandle:
    """Immutable handle for a finite permutation group with a verified
    stabilizer chain.  Do not mutate the exposed structures."""

    def __init__(self, degree: int, generators: tuple[Permutation, ...],
                 levels: list[_Level], order: int, metadata: GroupMetadata):
        self.degree = degree
        self.generators = generators
        self._levels = levels
        self.order = order
        self.metadata = metadata
        self.base = tuple(level.point for level in levels)
        sg: list[Permutation] = []
        for level in levels:
            sg.extend(g for g, _ in level.gens)
        self.strong_generators = tuple(sg)
        self._derived: GroupHandle | None = None

    @property
    def transversals(self) -> tuple[dict[int, Permutation], ...]:
        return tuple({p: uv[0] for p, uv in level.transversal.items()} for level in self._levels)

    @property
    def name(self) -> str:
        return self.metadata.name or f"group of order {self.order} on {self.degree} points"

    def __repr__(self) -> str:
        return f"GroupHandle({self.name!r}, order={self.order}, degree={self.degree})"

    def sift(self, g: Permutation) -> Permutation:
        residue = g
        for level in self._levels:
            img = residue.images[level.point]
            if img == level.point:
                continue
            entry = level.transversal.get(img)
            if entry is None:
                return residue
            residue = residue * entry[1]
        return residue

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            return False
        return self.sift(g).is_identity

    def orbit(self, point: int) -> set[int]:
        seen = {point}
        frontier = [point]
        while frontier:
            pt = frontier.pop()
            for g in self.generators:
                img = g.images[pt]
                if img not in seen:
                    seen.add(img)
                    frontier.append(img)
        return seen

    @property
    def is_transitive(self) -> bool:
        return self.degree == len(self.orbit(0)) if self.degree else True

    def elements(self, cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[Permutation]:
        """All elements exactly once, in a deterministic base-image order with
        the identity first (each level walks its base point before the rest of
        its orbit, ascending)."""
        if self.order > cap:
            raise EnumerationCapError(
                f"group order {self.order} exceeds enumeration cap {cap}")
        return self._elements_rec(0)

    def _elements_rec(self, lvl: int) -> Iterator[Permutation]:
        if lvl == len(self._levels):
            yield Permutation.identity(self.degree)
            return
        level = self._levels[lvl]
        points = [level.point] + sorted(p for p in level.transversal if p != level.point)
        reps = [level.transversal[p][0] for p in points]
        for u in reps:
            for rest in self._elements_rec(lvl + 1):
                yield rest * u

    def elements_by_order(self, orders: Iterable[int],
                          cap: int = DEFAULT_ENUMERATION_CAP) -> dict[int, list[Permutation]]:
        """Elements of the given exact orders, each list in lexicographic order."""
        wanted = set(orders)
        out: dict[int, list[Permutation]] = {k: [] for k in wanted}
        for g in self.elements(cap):
            k = g.order()
            if k in wanted:
                out[k].append(g)
        for lst in out.values():
            lst.sort()
        return out

    def conjugacy_classes(self, order_filter: int | None = None,
                          cap: int = DEFAULT_ENUMERATION_CAP) -> list[tuple[Permutation, int]]:
        """(representative, class size) pairs; representatives are the
        lexicographically least class members, in ascending order."""
        if order_filter is not None:
            pool = self.elements_by_order([order_filter], cap)[order_filter]
        else:
            pool = list(self.elements(cap))
        pool_set = {g.images for g in pool}
        seen: set[tuple[int, ...]] = set()
        classes = []
        conj_by = [g for g in self.generators] + [g.inverse() for g in self.generators]
        for g in pool:
            if g.images in seen:
                continue
            members = {g.images}
            frontier = [g]
            while frontier:
                h = frontier.pop()
                for c in conj_by:
                    hc = h.conjugated_by(c)
                    if hc.images not in members:
                        members.add(hc.images)
                        frontier.append(hc)
            if not members <= pool_set and order_filter is not None:
                raise AssertionError("conjugation left the fixed-order subset")
            seen |= members
            classes.append((Permutation._raw(min(members)), len(members)))
        classes.sort(key=lambda pair: pair[0].images)
        return classes

    def conjugacy_class_of(self, g: Permutation) -> list[Permutation]:
        """The full conjugacy class of g, lexicographically sorted."""
        members = {g.images: g}
        frontier = [g]
        conj_by = [h for h in self.generators] + [h.inverse() for h in self.generators]
        while frontier:
            h = frontier.pop()
            for c in conj_by:
                hc = h.conjugated_by(c)
                if hc.images not in members:
                    members[hc.images] = hc
                    frontier.append(hc)
        return [members[k] for k in sorted(members)]

    def derived_subgroup(self) -> "GroupHandle":
        """Commutator subgroup, via the normal closure of generator commutators."""
        if self._derived is not None:
            return self._derived
        builder = _ChainBuilder(self.degree)
        queue: list[Permutation] = []
        for a in self.generators:
            for b in self.generators:
                c = a.inverse() * b.inverse() * a * b
                if not c.is_identity:
                    queue.append(c)
        closure_gens: list[Permutation] = []
        conj_by = [g for g in self.generators] + [g.inverse() for g in self.generators]
        while queue:
            c = queue.pop()
            if builder.sift(c).is_identity:
                continue
            builder.add_generator(c)
            closure_gens.append(c)
            queue.extend(c.conjugated_by(g) for g in conj_by)
        if not closure_gens:
            closure_gens = [Permutation.identity(self.degree)]
        handle = GroupHandle(self.degree, tuple(closure_gens), builder.levels,
                             builder.order(), GroupMetadata(name=f"[{self.name}]'"))
        self._derived = handle
        return handle

    @property
    def is_perfect(self) -> bool:
        return self.derived_subgroup().order == self.order

    def random_element(self, rng: random.Random | int) -> Permutation:
        """Exactly uniform element, drawn by picking one transversal
        representative per chain level."""
        if isinstance(rng, int):
            rng = random.Random(rng)
        g = Permutation.identity(self.degree)
        for level in reversed(self._levels):
            pt = rng.choice(sorted(level.transversal))
            g = g * level.transversal[pt][0]
        return g


def build_group(generators: Sequence[Permutation],
                metadata: GroupMetadata | None = None) -> GroupHandle:
    """Run the full deterministic Schreier-Sims construction.

    If metadata.known_order is set, a mismatch with the computed order is a
    hard error (corrupt input data).
    """
    if not generators:
        raise ValueError("need at least one generator (use an identity for the trivial group)")
    degree = generators[0].degree
    if any(g.degree != degree for g in generators):
        raise DegreeMismatchError("generators act on different point sets")
    metadata = metadata or GroupMetadata()
    builder = _ChainBuilder(degree)
    for g in generators:
        builder.add_generator(g)
    order = builder.order()
    if metadata.known_order is not None and metadata.known_order != order:
        raise OrderMismatchError(
            f"declared order {metadata.known_order} but chain gives {order}"
            + (f" for {metadata.name}" if metadata.name else ""))
    _verify_chain(builder, generators)
    return GroupHandle(degree, tuple(generators), builder.levels, order, metadata)


def _verify_chain(builder: _ChainBuilder, generators: Sequence[Permutation]) -> None:
    """Independent completeness check: every input generator and every Schreier
    generator of every level must sift to the identity."""
    for g in generators:
        if not builder.sift(g).is_identity:
            raise AssertionError("stabilizer chain failed to absorb a generator")
    for idx, level in enumerate(builder.levels):
        for pt in level.orbit:
            u_pt = level.transversal[pt][0]
            for gen, _ in level.gens:
                img = gen.images[pt]
                schreier = u_pt * gen * level.transversal[img][1]
                if not builder.sift_from(schreier, idx + 1)[0].is_identity:
                    raise AssertionError("unabsorbed Schreier generator in the chain")


def generates(gens: Sequence[Permutation], ambient: GroupHandle) -> bool:
    """Does <gens> equal the ambient group?  All gens must lie in ambient.

    Fast paths: a transitivity pre-check when the ambient group is transitive,
    and an early yes once the partial chain's transversal product exceeds
    |ambient|/2 (the partial product never exceeds |<gens>|, and a subgroup of
    order more than half the group order is the whole group).
    """
    gens = [g for g in gens if not g.is_identity]
    if not gens:
        return ambient.order == 1
    if ambient.is_transitive and ambient.degree > 1:
        seen = {0}
        frontier = [0]
        while frontier:
            pt = frontier.pop()
            for g in gens:
                img = g.images[pt]
                if img not in seen:
                    seen.add(img)
                    frontier.append(img)
        if len(seen) != ambient.degree:
            return False
    builder = _ChainBuilder(ambient.degree, abort_above=ambient.order // 2)
    for g in gens:
        builder.add_generator(g)
        if builder.aborted:
            return True
    return builder.order() == ambient.order


def subgroup_order_bounded(gens: Sequence[Permutation], bound: int) -> int | None:
    """Order of <gens> if it is at most bound, else None (early abort)."""
    gens = [g for g in gens if not g.is_identity]
    if not gens:
        return 1
    builder = _ChainBuilder(gens[0].degree, abort_above=bound)
    for g in gens:
        builder.add_generator(g)
        if builder.aborted:
            return None
    return builder.order()


class CosetAction:
    """Right-multiplication action of a group on the right cosets of a subgroup."""

    def __init__(self, group: GroupHandle, subgroup: GroupHandle):
        if subgroup.degree != group.degree:
            raise DegreeMismatchError("subgroup degree differs from parent degree")
        for g in subgroup.generators:
            if not group.contains(g):
                raise NotASubgroupError("subgroup generator outside the parent group")
        if group.order % subgroup.order != 0:
            raise NotASubgroupError("subgroup order does not divide parent order")
        self.group = group
        self.subgroup = subgroup
        self.degree = group.order // subgroup.order
        reps: list[Permutation] = [Permutation.identity(group.degree)]
        i = 0
        while i < len(reps):
            for s in group.generators:
                cand = reps[i] * s
                if self._find(reps, cand) is None:
                    reps.append(cand)
                    if len(reps) > self.degree:
                        raise NotASubgroupError("coset walk exceeded the expected index")
            i += 1
        if len(reps) != self.degree:
            raise AssertionError("coset enumeration incomplete")
        self.representatives = tuple(reps)
        image_gens = tuple(self.image_of(s) for s in group.generators)
        self.image = build_group(
            image_gens, GroupMetadata(name=f"{group.name} on {self.degree} cosets"))
        if not self.image.is_transitive:
            raise AssertionError("coset action must be transitive")

    def _find(self, reps: Sequence[Permutation], g: Permutation) -> int | None:
        for j, r in enumerate(reps):
            if self.subgroup.contains(g * r.inverse()):
                return j
        return None

    def image_of(self, g: Permutation) -> Permutation:
        imgs = []
        for r in self.representatives:
            j = self._find(self.representatives, r * g)
            if j is None:
                raise NotASubgroupError("element does not permute the cosets (not in the group?)")
            imgs.append(j)
        return Permutation(imgs)


def coset_action(group: GroupHandle, subgroup: GroupHandle) -> CosetAction:
    """Permutation action on right cosets; .image is the induced quotient action."""
    return CosetAction(group, subgroup)
