"""Exact arithmetic in small Galois fields GF(p^k).

Elements are encoded as integers in ``0..p^k-1``, read as base-p digit
vectors of polynomial coefficients with the constant term in the lowest
digit.  The reduction polynomial is picked deterministically: the
lexicographically smallest monic irreducible polynomial of degree k over
GF(p), comparing coefficient tuples from the constant term upward.  That
makes element encodings (and everything built on top of them, planes
included) reproducible across runs and machines.

Full addition/multiplication tables are precomputed for orders up to 256;
larger fields fall back to on-the-fly polynomial arithmetic.
"""

from __future__ import annotations

MAX_ORDER = 1 << 16
TABLE_LIMIT = 256


def is_prime(n: int) -> bool:
    """Trial-division primality test, plenty at these sizes."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# polynomial helpers over GF(p); coefficient tuples, low degree first


def _poly_trim(c: tuple[int, ...]) -> tuple[int, ...]:
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return c[:i]


def _poly_mod(num: tuple[int, ...], den: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Remainder of num / den over GF(p).  den must be monic."""
    r = list(num)
    dd = len(den) - 1
    for i in range(len(r) - 1, dd - 1, -1):
        c = r[i] % p
        if c:
            for j in range(dd + 1):
                r[i - dd + j] = (r[i - dd + j] - c * den[j]) % p
    return _poly_trim(tuple(v % p for v in r[:dd]))


def _poly_mul(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return tuple(out)


def _monic_polys(degree: int, p: int):
    """Yield all monic polynomials of the given degree over GF(p) in
    lexicographic order of their coefficient tuples (constant term first)."""
    total = p**degree
    for code in range(total):
        coeffs = []
        c = code
        for _ in range(degree):
            coeffs.append(c % p)
            c //= p
        yield tuple(coeffs) + (1,)


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    deg = len(poly) - 1
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for g in _monic_polys(d, p):
            if not _poly_mod(poly, g, p):
                return False
    return True


def _smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    for cand in _monic_polys(k, p):
        if _is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found (unreachable)")


# ---------------------------------------------------------------------------


class Field:
    """GF(p^k) with a canonical reduction polynomial and recorded generator.

    Use :func:`field_make` to construct one.  Instances are immutable by
    convention and safe to share between processes.

    Attributes:
        p: characteristic.
        k: extension degree.
        order: p**k.
        reduction_poly: monic irreducible coefficient tuple, low degree
            first, length k+1.
        primitive: the smallest element generating the multiplicative group.
    """

    def __init__(self, p: int, k: int):
        self.p = p
        self.k = k
        self.order = p**k
        self.reduction_poly = _smallest_irreducible(p, k)
        self._tables = self.order <= TABLE_LIMIT
        if self._tables:
            u = self.order
            self._add = [[self._add_raw(a, b) for b in range(u)] for a in range(u)]
            self._mul = [[self._mul_raw(a, b) for b in range(u)] for a in range(u)]
        self.primitive = self._find_primitive()

    # -- raw digit/polynomial arithmetic (used to build tables, and directly
    #    for orders past the table limit)

    def _digits(self, a: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.k):
            out.append(a % p)
            a //= p
        return tuple(out)

    def _undigits(self, coeffs) -> int:
        out = 0
        for c in reversed(tuple(coeffs) + (0,) * (self.k - len(coeffs))):
            out = out * self.p + c
        return out

    def _add_raw(self, a: int, b: int) -> int:
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.k):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def _mul_raw(self, a: int, b: int) -> int:
        prod = _poly_mul(self._digits(a), self._digits(b), self.p)
        return self._undigits(_poly_mod(prod, self.reduction_poly, self.p))

    # -- public operations

    def add(self, a: int, b: int) -> int:
        if self._tables:
            return self._add[a][b]
        return self._add_raw(a, b)

    def neg(self, a: int) -> int:
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.k):
            out += ((p - a % p) % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._tables:
            return self._mul[a][b]
        return self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        # a^(order-2) = a^-1 in the multiplicative group
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        """Square-and-multiply exponentiation; negative e inverts first."""
        if e < 0:
            a = self.inv(a)
            e = -e
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        n = 1
        x = a
        while x != 1:
            x = self.mul(x, a)
            n += 1
        return n

    def elements(self) -> range:
        return range(self.order)

    def _find_primitive(self) -> int:
        group = self.order - 1
        primes = _prime_factors(group)
        for g in range(1, self.order):
            if all(self.pow(g, group // r) != 1 for r in primes):
                return g
        raise AssertionError("no primitive element (unreachable)")

    def __repr__(self) -> str:
        return f"Field(p={self.p}, k={self.k}, order={self.order})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self) -> int:
        return hash((self.p, self.k))


def field_make(p: int, k: int = 1) -> Field:
    """Build GF(p^k).

    Raises ValueError for non-prime p, k < 1, or orders past 2^16.
    """
    if k < 1:
        raise ValueError(f"extension degree must be >= 1, got {k}")
    if not is_prime(p):
        raise ValueError(f"characteristic must be prime, got {p}")
    if p**k > MAX_ORDER:
        raise ValueError(f"field order {p**k} exceeds supported bound {MAX_ORDER}")
    return Field(p, k)
