"""Exact arithmetic tables for small Galois fields GF(p^e) and their extensions.

Field elements are dense integer ids 0..q-1.  An id encodes the coefficient
vector of a polynomial over GF(p) in base p (id = sum c_i * p^i), so 0 and 1
are always the additive and multiplicative identities.  Multiplication is
polynomial multiplication modulo a fixed irreducible polynomial, chosen as
the first monic irreducible of degree e in base-p enumeration order, so every
run produces bit-identical tables.

Chosen irreducible polynomials (coefficients low to high):
    GF(4)  : x^2 + x + 1
    GF(8)  : x^3 + x + 1
    GF(9)  : x^2 + 1
    GF(16) : x^4 + x + 1
    GF(25) : x^2 + 2
"""

from __future__ import annotations

from .errors import UnsupportedField

SUPPORTED_ORDERS = frozenset({2, 3, 4, 5, 7, 8, 9, 16, 25})

_FIELD_CACHE: dict[tuple[int, int], "FieldTable"] = {}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _digits(value: int, p: int, width: int) -> tuple[int, ...]:
    out = []
    for _ in range(width):
        out.append(value % p)
        value //= p
    return tuple(out)


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    # m is monic
    a = list(a)
    _poly_trim(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        coef = a[-1]
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - coef * mi) % p
        _poly_trim(a)
    return a


def _monic_polys(p: int, deg: int):
    for k in range(p**deg):
        yield list(_digits(k, p, deg)) + [1]


def _is_irreducible(poly: list[int], p: int) -> bool:
    deg = len(poly) - 1
    if deg == 1:
        return True
    if poly[0] == 0:  # divisible by x
        return False
    for d in range(1, deg // 2 + 1):
        for cand in _monic_polys(p, d):
            if not _poly_mod(poly, cand, p):
                return False
    return True


def irreducible_poly(p: int, e: int) -> tuple[int, ...]:
    """First monic irreducible of degree e over GF(p), coefficients low to high."""
    for poly in _monic_polys(p, e):
        if _is_irreducible(poly, p):
            return tuple(poly)
    raise UnsupportedField(f"no irreducible polynomial found for p={p}, e={e}")


class FieldTable:
    """Complete lookup tables for GF(p^e).

    Immutable after construction; safe for concurrent read-only use.
    """

    def __init__(self, p: int, e: int):
        if not _is_prime(p):
            raise UnsupportedField(f"characteristic {p} is not prime")
        q = p**e
        if q not in SUPPORTED_ORDERS:
            raise UnsupportedField(
                f"GF({q}) is outside the supported set {sorted(SUPPORTED_ORDERS)}"
            )
        self.p = p
        self.e = e
        self.q = q
        self.irr = irreducible_poly(p, e)

        polys = [list(_digits(a, p, e)) for a in range(q)]
        irr = list(self.irr)

        self.add_table = [
            [self._encode([(x + y) % p for x, y in zip(polys[a], polys[b])]) for b in range(q)]
            for a in range(q)
        ]
        self.mul_table = [
            [self._encode(_poly_mod(_poly_mul(polys[a], polys[b], p), irr, p)) for b in range(q)]
            for a in range(q)
        ]
        self.neg_table = [self._encode([(-x) % p for x in polys[a]]) for a in range(q)]

        self.inv_table = [0] * q
        for a in range(1, q):
            row = self.mul_table[a]
            self.inv_table[a] = row.index(1)

        assert self.add_table[0] == list(range(q))
        assert self.mul_table[1] == list(range(q))

    def _encode(self, coeffs: list[int]) -> int:
        value = 0
        for c in reversed(coeffs):
            value = value * self.p + c
        return value

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self.inv_table[a]

    def elements(self) -> range:
        return range(self.q)

    def __repr__(self) -> str:
        return f"FieldTable(GF({self.q}), irr={self.irr})"


def field_new(p: int, e: int) -> FieldTable:
    """Build (or fetch the cached) GF(p^e) table set."""
    key = (p, e)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = FieldTable(p, e)
    return _FIELD_CACHE[key]


def field_of_order(q: int) -> FieldTable:
    """GF(q) for a supported prime power q."""
    if q not in SUPPORTED_ORDERS:
        raise UnsupportedField(f"GF({q}) is outside the supported set {sorted(SUPPORTED_ORDERS)}")
    for p in (2, 3, 5, 7):
        e = 0
        n = q
        while n % p == 0:
            n //= p
            e += 1
        if n == 1 and e >= 1:
            return field_new(p, e)
    raise UnsupportedField(f"{q} is not a prime power")


class FieldExtension:
    """GF(q^m) over a base GF(q), with both directions of the coordinate map.

    The extension table is the canonical GF(p^(e*m)) table, so certificates
    that reference extension element ids stay reproducible.  Coordinates are
    taken with respect to the basis {1, x, ..., x^(m-1)} where x is the
    adjoined root of the GF(p)-irreducible; the base field embeds through the
    least root of its own irreducible inside the extension.
    """

    def __init__(self, base: FieldTable, degree: int):
        if degree < 1:
            raise UnsupportedField("extension degree must be >= 1")
        q_ext = base.q**degree
        if q_ext not in SUPPORTED_ORDERS:
            raise UnsupportedField(
                f"GF({base.q}^{degree}) = GF({q_ext}) is outside the supported set"
            )
        self.base = base
        self.degree = degree
        self.field = field_new(base.p, base.e * degree)
        F = self.field

        beta = self._least_root(base.irr)
        self._embed = tuple(self._lift(a, beta) for a in range(base.q))
        for a in range(base.q):
            for b in range(base.q):
                assert self._embed[base.add(a, b)] == F.add(self._embed[a], self._embed[b])
                assert self._embed[base.mul(a, b)] == F.mul(self._embed[a], self._embed[b])

        x = base.p if F.e >= 2 else 1
        powers = [1]
        for _ in range(degree - 1):
            powers.append(F.mul(powers[-1], x))

        ids: dict[tuple[int, ...], int] = {}
        coords: list[tuple[int, ...]] = [()] * F.q
        for code in range(F.q):
            vec = _digits(code, base.q, degree)
            val = 0
            for c, xp in zip(vec, powers):
                val = F.add(val, F.mul(self._embed[c], xp))
            ids[vec] = val
            coords[val] = vec
        if len(set(ids.values())) != F.q:
            raise UnsupportedField("coordinate map failed to be bijective")
        self._ids = ids
        self._coords = tuple(coords)

    def _least_root(self, poly: tuple[int, ...]) -> int:
        F = self.field
        for z in range(F.q):
            acc = 0
            for c in reversed(poly):
                acc = F.add(F.mul(acc, z), c)
            if acc == 0:
                return z
        raise UnsupportedField("base irreducible has no root in the extension")

    def _lift(self, a: int, beta: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(_digits(a, self.base.p, self.base.e)):
            acc = F.add(F.mul(acc, beta), c)
        return acc

    def embed(self, a: int) -> int:
        """Image of a base-field element inside the extension."""
        return self._embed[a]

    def coords(self, lam: int) -> tuple[int, ...]:
        """Base-field coordinate vector of an extension element."""
        return self._coords[lam]

    def from_coords(self, vec) -> int:
        """Extension element with the given base-field coordinates."""
        return self._ids[tuple(vec)]

    def __repr__(self) -> str:
        return f"FieldExtension(GF({self.base.q})->GF({self.field.q}))"


def ext_field(base: FieldTable, degree: int) -> FieldExtension:
    """Extension field of the given degree, plus both coordinate maps."""
    return FieldExtension(base, degree)
