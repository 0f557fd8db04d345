"""Constructors for the group families under study.

PSL2/PGL2 act on the projective line over GF(q) (degree q+1, infinity encoded
as point index q).  Every constructor passes a formula order to build_group,
so a wrong generator set is a hard error, never a silent wrong group.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from .perm import (
    FormatError,
    GroupHandle,
    GroupMetadata,
    Permutation,
    build_group,
    read_generator_file,
)

MAX_FIELD_SIZE = 512


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (small inputs only)."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def prime_power(q: int) -> tuple[int, int] | None:
    """(p, f) with q = p^f, or None if q is not a prime power >= 2."""
    if q < 2:
        return None
    fac = factorize(q)
    if len(fac) != 1:
        return None
    return next(iter(fac.items()))


def euler_phi(n: int) -> int:
    phi = 1
    for p, e in factorize(n).items():
        phi *= (p - 1) * p ** (e - 1)
    return phi


def _poly_trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_rem(a: tuple[int, ...], m: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Remainder of a mod m over GF(p); m must be monic."""
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - dm
            for i, mi in enumerate(m):
                a[shift + i] = (a[shift + i] - lead * mi) % p
        a.pop()
    return _poly_trim(a)


def _poly_mul(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= f/2.

    A reducible polynomial of degree f has a factor of degree at most f/2,
    so this is a complete test (degree-1 trials catch all roots).
    """
    f = len(modulus) - 1
    for d in range(1, f // 2 + 1):
        for code in range(p ** d):
            g = []
            c = code
            for _ in range(d):
                g.append(c % p)
                c //= p
            g.append(1)
            if not _poly_rem(modulus, tuple(g), p):
                return False
    return True


class FiniteField:
    """GF(p^f) with full add/mul tables; elements are integers 0..q-1 whose
    base-p digits are the polynomial coefficients (least significant first).

    The modulus defaults to the monic irreducible of degree f with the
    smallest integer encoding; pass `modulus` (little-endian coefficient
    tuple, monic) to override.
    """

    def __init__(self, p: int, f: int = 1, modulus: tuple[int, ...] | None = None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if f < 1:
            raise ValueError("extension degree must be >= 1")
        q = p ** f
        if q > MAX_FIELD_SIZE:
            raise ValueError(f"field size {q} exceeds supported maximum {MAX_FIELD_SIZE}")
        self.p = p
        self.f = f
        self.q = q
        if modulus is None:
            modulus = self._smallest_irreducible(p, f)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != f + 1 or modulus[-1] != 1:
                raise ValueError(f"modulus must be monic of degree {f}")
            if f > 1 and not _is_irreducible(modulus, p):
                raise ValueError(f"modulus {modulus} is reducible over GF({p})")
        self.modulus = modulus
        self._build_tables()
        self.primitive_element = self._find_primitive()

    @staticmethod
    def _smallest_irreducible(p: int, f: int) -> tuple[int, ...]:
        if f == 1:
            return (0, 1)
        for code in range(p ** f):
            g = []
            c = code
            for _ in range(f):
                g.append(c % p)
                c //= p
            g.append(1)
            cand = tuple(g)
            if _is_irreducible(cand, p):
                return cand
        raise AssertionError("no irreducible polynomial found")  # impossible

    def _encode(self, poly: tuple[int, ...]) -> int:
        val = 0
        for c in reversed(poly):
            val = val * self.p + c
        return val

    def _decode(self, a: int) -> tuple[int, ...]:
        out = []
        while a:
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def _build_tables(self) -> None:
        p, q = self.p, self.q
        polys = [self._decode(a) for a in range(q)]
        self._add = [[0] * q for _ in range(q)]
        self._mul = [[0] * q for _ in range(q)]
        for a in range(q):
            pa = polys[a]
            for b in range(a, q):
                pb = polys[b]
                s = [0] * max(len(pa), len(pb), 1)
                for i, c in enumerate(pa):
                    s[i] = c
                for i, c in enumerate(pb):
                    s[i] = (s[i] + c) % p
                v = self._encode(_poly_trim(s))
                self._add[a][b] = v
                self._add[b][a] = v
                m = self._encode(_poly_rem(_poly_mul(pa, pb, p), self.modulus, p))
                self._mul[a][b] = m
                self._mul[b][a] = m
        self._neg = [0] * q
        for a in range(q):
            na = self._encode(tuple((-c) % p for c in polys[a]))
            self._neg[a] = na
        self._inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self._mul[a][b] == 1:
                    self._inv[a] = b
                    break
            else:
                raise AssertionError(f"no inverse for {a}: modulus not irreducible?")

    def _find_primitive(self) -> int:
        target = self.q - 1
        if target == 1:
            return 1
        prime_divisors = list(factorize(target))
        for g in range(2, self.q):
            if all(self.pow(g, target // r) != 1 for r in prime_divisors):
                return g
        raise AssertionError("no primitive element found")  # impossible for a field

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self._inv[a]

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            return self.pow(self.inv(a), -k)
        result = 1
        base = a
        while k:
            if k & 1:
                result = self._mul[result][base]
            base = self._mul[base][base]
            k >>= 1
        return result

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        n = self.q - 1
        for p_, e in sorted(factorize(n).items()):
            for _ in range(e):
                if self.pow(a, n // p_) == 1:
                    n //= p_
                else:
                    break
        return n

    def __repr__(self) -> str:
        return f"FiniteField(p={self.p}, f={self.f}, modulus={self.modulus})"


def _projective_maps(field: FiniteField, scale: int) -> tuple[Permutation, Permutation, Permutation]:
    """(x -> x+1, x -> scale*x, x -> -1/x) on the projective line, infinity = q."""
    q = field.q
    t = [field.add(x, 1) for x in range(q)] + [q]
    d = [field.mul(scale, x) for x in range(q)] + [q]
    s = [0] * (q + 1)
    s[0] = q
    s[q] = 0
    for x in range(1, q):
        s[x] = field.neg(field.inv(x))
    return Permutation(t), Permutation(d), Permutation(s)


@lru_cache(maxsize=None)
def make_psl2(q: int, modulus: tuple[int, ...] | None = None) -> GroupHandle:
    """PSL(2,q) on the q+1 points of the projective line, q a prime power >= 4.

    Generators: x -> x+1, x -> a*x with a generating the squares of GF(q)*,
    and x -> -1/x.  The chain order is verified against q(q^2-1)/gcd(2,q-1).
    """
    pp = prime_power(q)
    if pp is None or q < 4:
        raise ValueError(f"q must be a prime power >= 4, got {q}")
    p, f = pp
    fld = FiniteField(p, f, modulus)
    zeta = fld.primitive_element
    alpha = zeta if p == 2 else fld.mul(zeta, zeta)
    t, d, s = _projective_maps(fld, alpha)
    order = q * (q * q - 1) // math.gcd(2, q - 1)
    meta = GroupMetadata(name=f"PSL(2,{q})", known_order=order,
                         aut_order=q * (q * q - 1) * f, simple=True)
    return build_group([t, d, s], meta)


@lru_cache(maxsize=None)
def make_pgl2(q: int, modulus: tuple[int, ...] | None = None) -> GroupHandle:
    """PGL(2,q) on the projective line, q a prime power >= 3.

    Same maps as PSL(2,q) but scaling by a primitive element; order q(q^2-1).
    """
    pp = prime_power(q)
    if pp is None or q < 3:
        raise ValueError(f"q must be a prime power >= 3, got {q}")
    p, f = pp
    fld = FiniteField(p, f, modulus)
    t, d, s = _projective_maps(fld, fld.primitive_element)
    order = q * (q * q - 1)
    meta = GroupMetadata(name=f"PGL(2,{q})", known_order=order,
                         aut_order=q * (q * q - 1) * f,
                         simple=(p == 2 and q >= 4))
    return build_group([t, d, s], meta)


def _sym_aut_order(n: int) -> int:
    if n <= 2:
        return 1
    if n == 6:
        return 1440
    return math.factorial(n)


def _alt_aut_order(n: int) -> int:
    if n <= 2:
        return 1
    if n == 3:
        return 2
    if n == 4:
        return 24
    if n == 5:
        return 120
    if n == 6:
        return 1440
    return math.factorial(n)


@lru_cache(maxsize=None)
def make_standard(family: str, n: int) -> GroupHandle:
    """Natural actions: sym(n), alt(n), dihedral(n) of order 2n, cyclic(n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if family == "sym":
        if n == 1:
            gens = [Permutation.identity(1)]
        else:
            gens = [Permutation.from_cycles(n, [(0, 1)]),
                    Permutation.from_cycles(n, [tuple(range(n))])]
        meta = GroupMetadata(name=f"S{n}", known_order=math.factorial(n),
                             aut_order=_sym_aut_order(n), simple=(n == 2))
        return build_group(gens, meta)
    if family == "alt":
        if n <= 2:
            gens = [Permutation.identity(max(n, 1))]
        elif n == 3:
            gens = [Permutation.from_cycles(3, [(0, 1, 2)])]
        elif n % 2 == 1:
            gens = [Permutation.from_cycles(n, [(0, 1, 2)]),
                    Permutation.from_cycles(n, [tuple(range(n))])]
        else:
            gens = [Permutation.from_cycles(n, [(0, 1, 2)]),
                    Permutation.from_cycles(n, [tuple(range(1, n))])]
        order = 1 if n <= 2 else math.factorial(n) // 2
        meta = GroupMetadata(name=f"A{n}", known_order=order,
                             aut_order=_alt_aut_order(n),
                             simple=(n == 3 or n >= 5))
        return build_group(gens, meta)
    if family == "dihedral":
        if n == 1:
            gens = [Permutation.from_cycles(2, [(0, 1)])]
            degree = 2
        elif n == 2:
            gens = [Permutation.from_cycles(4, [(0, 1)]),
                    Permutation.from_cycles(4, [(2, 3)])]
            degree = 4
        else:
            rot = Permutation.from_cycles(n, [tuple(range(n))])
            ref = Permutation([(n - i) % n for i in range(n)])
            gens = [rot, ref]
            degree = n
        if n == 1:
            aut = 1
        elif n == 2:
            aut = 6
        else:
            aut = n * euler_phi(n)
        meta = GroupMetadata(name=f"D{n}", known_order=2 * n, aut_order=aut,
                             simple=(n == 1))
        return build_group(gens, meta)
    if family == "cyclic":
        gens = [Permutation.from_cycles(n, [tuple(range(n))])] if n > 1 \
            else [Permutation.identity(1)]
        meta = GroupMetadata(name=f"Z{n}", known_order=n,
                             aut_order=euler_phi(n), simple=is_prime(n))
        return build_group(gens, meta)
    raise ValueError(f"unknown family {family!r} (want sym/alt/dihedral/cyclic)")


def direct_product(g: GroupHandle, h: GroupHandle) -> GroupHandle:
    """Product acting on the disjoint union of the two point sets.

    aut_order is filled in only in the safe case: both factors flagged simple
    with distinct orders (then every automorphism preserves the factors).
    """
    dg, dh = g.degree, h.degree
    gens = []
    for a in g.generators:
        gens.append(Permutation._raw(a.images + tuple(range(dg, dg + dh))))
    for b in h.generators:
        gens.append(Permutation._raw(tuple(range(dg)) + tuple(x + dg for x in b.images)))
    aut = None
    if (g.metadata.simple and h.metadata.simple and g.order != h.order
            and g.metadata.aut_order and h.metadata.aut_order):
        aut = g.metadata.aut_order * h.metadata.aut_order
    meta = GroupMetadata(name=f"{g.name} x {h.name}",
                         known_order=g.order * h.order, aut_order=aut, simple=False)
    return build_group(gens, meta)


def load_group(path: str) -> GroupHandle:
    """Load a generator file; a declared `order` line is hard-verified."""
    gf = read_generator_file(path)
    meta = GroupMetadata(name=gf.name or path, known_order=gf.order,
                         aut_order=gf.aut_order, simple=None)
    return build_group(list(gf.generators), meta)


@dataclass(frozen=True)
class GroupSpec:
    """Parsed group specifier; build() realizes it as a GroupHandle."""
    family: str
    n: int | None = None
    path: str | None = None
    factors: tuple["GroupSpec", ...] = field(default=())
    text: str = ""

    def build(self) -> GroupHandle:
        if self.family == "psl2":
            return make_psl2(self.n)
        if self.family == "pgl2":
            return make_pgl2(self.n)
        if self.family in ("sym", "alt", "dihedral", "cyclic"):
            return make_standard(self.family, self.n)
        if self.family == "product":
            return direct_product(self.factors[0].build(), self.factors[1].build())
        if self.family == "file":
            return load_group(self.path)
        raise AssertionError(f"unbuildable spec {self!r}")


_FAMILY_BY_TAG = {"psl2": "psl2", "pgl2": "pgl2", "sym": "sym", "alt": "alt",
                  "dih": "dihedral", "cyc": "cyclic"}


def parse_group_spec(text: str) -> GroupSpec:
    """Parse `psl2:q`, `pgl2:q`, `sym:n`, `alt:n`, `dih:n`, `cyc:n`,
    `prod:<spec>,<spec>`, `file:<path>`."""
    text = text.strip()
    tag, sep, rest = text.partition(":")
    if not sep:
        raise FormatError(f"group spec {text!r} needs a family tag like psl2:7")
    if tag == "file":
        if not rest:
            raise FormatError("file: spec needs a path")
        return GroupSpec(family="file", path=rest, text=text)
    if tag == "prod":
        for i, ch in enumerate(rest):
            if ch != ",":
                continue
            left, right = rest[:i], rest[i + 1:]
            try:
                return GroupSpec(family="product",
                                 factors=(parse_group_spec(left), parse_group_spec(right)),
                                 text=text)
            except FormatError:
                continue
        raise FormatError(f"prod spec {text!r} does not split into two valid specs")
    if tag not in _FAMILY_BY_TAG:
        raise FormatError(f"unknown family tag {tag!r} in {text!r}")
    try:
        n = int(rest)
    except ValueError as exc:
        raise FormatError(f"bad numeric parameter in {text!r}") from exc
    family = _FAMILY_BY_TAG[tag]
    if family == "psl2" and (prime_power(n) is None or n < 4):
        raise FormatError(f"psl2 parameter must be a prime power >= 4, got {n}")
    if family == "pgl2" and (prime_power(n) is None or n < 3):
        raise FormatError(f"pgl2 parameter must be a prime power >= 3, got {n}")
    if family in ("sym", "alt", "dihedral", "cyclic") and n < 1:
        raise FormatError(f"{tag} parameter must be >= 1, got {n}")
    return GroupSpec(family=family, n=n, text=text)
