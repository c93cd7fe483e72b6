"""Arithmetic in GF(p^k) for odd primes p.

Field elements are plain integers ("codes") in [0, q).  The base-p digits
of a code, least significant first, are the coefficients of the element in
the polynomial basis, so code 0 is the additive and code 1 the
multiplicative identity.  For k = 1 this degenerates to arithmetic mod p.
"""

from __future__ import annotations

MAX_ORDER = 1 << 16

# Extension fields up to this order precompute full operation tables.
_TABLE_MAX = 1024


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# Polynomials over GF(p), coefficient tuples little-endian, used only while
# choosing the modulus and for extension-field arithmetic.
# ---------------------------------------------------------------------------

def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a, m, p):
    """Remainder of a modulo the monic polynomial m."""
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            a[i] = 0
            for j in range(dm):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return _poly_trim(a[:dm])


def _poly_eval(a, x, p):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def _monic_polys(degree: int, p: int):
    """Monic polynomials of the given degree, in the canonical order.

    Order: ascending by the integer whose base-p digits are the
    non-leading coefficients (c_{degree-1}, ..., c_1, c_0).
    """
    for m in range(p**degree):
        coeffs = []
        v = m
        for _ in range(degree):
            coeffs.append(v % p)
            v //= p
        yield coeffs + [1]


def _is_irreducible(poly, p) -> bool:
    degree = len(poly) - 1
    if degree == 1:
        return True
    if any(_poly_eval(poly, x, p) == 0 for x in range(p)):
        return False
    if degree <= 3:
        # No roots means no linear factor, which suffices up to cubics.
        return True
    for d in range(2, degree // 2 + 1):
        for cand in _monic_polys(d, p):
            if _is_irreducible(cand, p) and not _poly_mod(poly, cand, p):
                return False
    return True


def _first_irreducible(p: int, k: int) -> tuple[int, ...]:
    for cand in _monic_polys(k, p):
        if _is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class Field:
    """GF(p^k) with a fixed modulus; immutable once constructed.

    All operations are pure functions of integer codes, so a Field may be
    shared freely between threads.  Use :func:`make_field` rather than the
    constructor; it validates the parameters and picks the canonical
    modulus (the first monic irreducible of degree k in the enumeration
    order of :func:`_monic_polys`).
    """

    __slots__ = ("p", "k", "q", "modulus", "_add", "_mul", "_inv")

    def __init__(self, p: int, k: int, modulus: tuple[int, ...] | None):
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = modulus
        self._add = self._mul = self._inv = None
        if k > 1 and self.q <= _TABLE_MAX:
            self._build_tables()

    def __repr__(self) -> str:
        return f"Field(GF({self.q}))"

    def elements(self) -> range:
        return range(self.q)

    # -- encoding ----------------------------------------------------------

    def to_coeffs(self, code: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.k):
            out.append(code % self.p)
            code //= self.p
        return tuple(out)

    def from_coeffs(self, coeffs) -> int:
        code = 0
        for c in reversed(list(coeffs)):
            code = code * self.p + c % self.p
        return code

    # -- arithmetic --------------------------------------------------------

    def add(self, x: int, y: int) -> int:
        if self.k == 1:
            return (x + y) % self.p
        if self._add is not None:
            return self._add[x * self.q + y]
        return self._add_poly(x, y)

    def neg(self, x: int) -> int:
        if self.k == 1:
            return -x % self.p
        return self.from_coeffs(-c % self.p for c in self.to_coeffs(x))

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if self.k == 1:
            return (x * y) % self.p
        if self._mul is not None:
            return self._mul[x * self.q + y]
        return self._mul_poly(x, y)

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of zero in GF(%d)" % self.q)
        if self.k == 1:
            return pow(x, self.p - 2, self.p)
        if self._inv is not None:
            return self._inv[x]
        return self.pow(x, self.q - 2)

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def pow(self, x: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(x), -e)
        acc = 1
        base = x
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            e >>= 1
        return acc

    # -- internals ---------------------------------------------------------

    def _add_poly(self, x: int, y: int) -> int:
        xa, ya = self.to_coeffs(x), self.to_coeffs(y)
        return self.from_coeffs((a + b) % self.p for a, b in zip(xa, ya))

    def _mul_poly(self, x: int, y: int) -> int:
        prod = _poly_mul(list(self.to_coeffs(x)), list(self.to_coeffs(y)), self.p)
        red = _poly_mod(prod, self.modulus, self.p)
        return self.from_coeffs(red + [0] * (self.k - len(red)))

    def _build_tables(self) -> None:
        q = self.q
        add = [0] * (q * q)
        mul = [0] * (q * q)
        for x in range(q):
            for y in range(x, q):
                s = self._add_poly(x, y)
                m = self._mul_poly(x, y)
                add[x * q + y] = add[y * q + x] = s
                mul[x * q + y] = mul[y * q + x] = m
        inv = [0] * q
        for x in range(1, q):
            for y in range(1, q):
                if mul[x * q + y] == 1:
                    inv[x] = y
                    break
        self._add, self._mul, self._inv = add, mul, inv


def make_field(p: int, k: int) -> Field:
    """Build GF(p^k) with the canonical modulus.

    Raises ValueError with a distinct message for each rejected input:
    non-integer-like, k < 1, even p, non-prime p, or order above the
    supported bound.
    """
    if k < 1:
        raise ValueError(f"extension degree must be >= 1, got {k}")
    if p % 2 == 0:
        raise ValueError(f"even characteristic {p} is not supported")
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p**k > MAX_ORDER:
        raise ValueError(f"field order {p}**{k} exceeds the bound {MAX_ORDER}")
    modulus = _first_irreducible(p, k) if k > 1 else None
    return Field(p, k, modulus)


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def primitive_root(field: Field) -> int:
    """Smallest code whose multiplicative order is exactly q - 1."""
    n = field.q - 1
    factors = _prime_factors(n)
    for c in range(2, field.q):
        if all(field.pow(c, n // r) != 1 for r in factors):
            return c
    # q = 3 leaves only c = 2, caught above; q = 2 cannot occur (p odd).
    raise AssertionError("no primitive root found")  # unreachable
