"""Arithmetic in small finite fields GF(ell**f).

Elements are polynomial residues mod a deterministic irreducible modulus (the
lexicographically least monic irreducible of degree f, coefficients ordered
constant term first).  Elements are represented as tuples of ints in
[0, ell), length f, constant term first.
"""

from functools import lru_cache
from itertools import product
from math import gcd

from .numtheory import is_prime

MAX_SIZE = 1 << 16
MAX_DEGREE = 12


class FieldSpec:
    """GF(ell**f) with precomputed modulus and reduction data."""

    def __init__(self, ell: int, f: int, modulus: tuple[int, ...]):
        self.ell = ell
        self.f = f
        self.q = ell**f
        # monic of degree f; coefficient list constant-term-first, length f+1
        self.modulus = modulus
        self.zero = (0,) * f
        self.one = ((1,) + (0,) * (f - 1)) if f > 0 else ()

    def __repr__(self):
        return f"GF({self.ell}^{self.f}, modulus={list(self.modulus)})"

    # -- element construction ------------------------------------------------

    def element(self, coeffs) -> tuple[int, ...]:
        coeffs = tuple(c % self.ell for c in coeffs)
        if len(coeffs) != self.f:
            raise ValueError(f"need {self.f} coefficients")
        return coeffs

    def from_int(self, n: int) -> tuple[int, ...]:
        """The element whose base-ell digits (little-endian) are n's digits."""
        digits = []
        for _ in range(self.f):
            n, r = divmod(n, self.ell)
            digits.append(r)
        return tuple(digits)

    def to_int(self, a) -> int:
        n = 0
        for c in reversed(a):
            n = n * self.ell + c
        return n

    def elements(self):
        """All field elements in lexicographic (from_int) order."""
        return [self.from_int(i) for i in range(self.q)]

    # -- arithmetic ----------------------------------------------------------

    def add(self, a, b):
        ell = self.ell
        return tuple((x + y) % ell for x, y in zip(a, b))

    def neg(self, a):
        ell = self.ell
        return tuple((-x) % ell for x in a)

    def sub(self, a, b):
        ell = self.ell
        return tuple((x - y) % ell for x, y in zip(a, b))

    def mul(self, a, b):
        ell, f = self.ell, self.f
        # schoolbook product then reduction by the monic modulus
        prod_coeffs = [0] * (2 * f - 1) if f > 0 else []
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod_coeffs[i + j] = (prod_coeffs[i + j] + x * y) % ell
        return self._reduce(prod_coeffs)

    def _reduce(self, coeffs):
        ell, f, mod = self.ell, self.f, self.modulus
        coeffs = list(coeffs)
        for i in range(len(coeffs) - 1, f - 1, -1):
            c = coeffs[i]
            if c:
                coeffs[i] = 0
                # subtract c * x^(i-f) * modulus
                base = i - f
                for j in range(f + 1):
                    coeffs[base + j] = (coeffs[base + j] - c * mod[j]) % ell
        return tuple(coeffs[:f])

    def scalar_mul(self, c, a):
        ell = self.ell
        return tuple((c * x) % ell for x in a)

    def inv(self, a):
        """Multiplicative inverse via extended Euclid on polynomials."""
        if a == self.zero:
            raise ZeroDivisionError("inversion of zero field element")
        ell = self.ell
        # polynomials as little-endian coefficient lists over GF(ell)
        r0, r1 = list(self.modulus), list(a)
        s0, s1 = [0], [1]
        while any(r1):
            q, r = _poly_divmod(r0, r1, ell)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1, ell), ell)
        # r0 is now gcd, a nonzero constant (modulus is irreducible)
        c = next(c for c in r0 if c)
        cinv = pow(c, -1, ell)
        inv = [x * cinv % ell for x in s0]
        inv += [0] * (self.f - len(inv))
        return self._reduce(inv[: 2 * self.f])

    def pow(self, a, n: int):
        if n < 0:
            return self.pow(self.inv(a), -n)
        result = self.one
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def frobenius(self, a, k: int):
        """a**(ell**k), the k-th power of the Frobenius automorphism."""
        return self.pow(a, self.ell ** (k % self.f))

    def element_order(self, a) -> int:
        if a == self.zero:
            raise ValueError("zero has no multiplicative order")
        from .numtheory import divisors
        for d in divisors(self.q - 1):
            if self.pow(a, d) == self.one:
                return d
        raise AssertionError("unreachable")

    def primitive_element(self):
        """The least (in from_int order) generator of the unit group."""
        for i in range(1, self.q):
            a = self.from_int(i)
            if self.element_order(a) == self.q - 1:
                return a
        raise AssertionError("no primitive element found")


def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_sub(a, b, ell):
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _poly_trim([(x - y) % ell for x, y in zip(a, b)])


def _poly_mul(a, b, ell):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % ell
    return _poly_trim(out)


def _poly_divmod(a, b, ell):
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    if not b:
        raise ZeroDivisionError
    binv = pow(b[-1], -1, ell)
    q = [0] * max(0, len(a) - len(b) + 1)
    r = list(a)
    while len(r) >= len(b):
        c = r[-1] * binv % ell
        d = len(r) - len(b)
        q[d] = c
        for i in range(len(b)):
            r[d + i] = (r[d + i] - c * b[i]) % ell
        _poly_trim(r)
        if not r:
            break
    return _poly_trim(q), r


def _is_irreducible(mod, ell):
    """Irreducibility of a monic polynomial over GF(ell) by root/factor scan.

    Degree f <= 12 and ell**f <= 2**16, so testing divisibility by every monic
    polynomial of degree <= f//2 is affordable (there are at most ell**6 of
    them and ell**6 <= 2**16 in range).
    """
    f = len(mod) - 1
    for d in range(1, f // 2 + 1):
        for tail in product(range(ell), repeat=d):
            div = list(tail) + [1]
            _, r = _poly_divmod(mod, div, ell)
            if not r:
                return False
    return True


@lru_cache(maxsize=None)
def make_field(ell: int, f: int) -> FieldSpec:
    """GF(ell**f) with the lexicographically least monic irreducible modulus.

    Lexicographic order is over the coefficient tuple read constant term
    first.  Deterministic: the same (ell, f) always yields the same field.
    """
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    if f < 1 or f > MAX_DEGREE or ell**f > MAX_SIZE:
        raise ValueError(f"field size cap exceeded: {ell}^{f}")
    if f == 1:
        return FieldSpec(ell, 1, (0, 1))  # modulus x
    # enumerate monic polynomials in lexicographic order of the coefficient
    # tuple read from the highest non-leading coefficient down to the constant
    for high_to_low in product(range(ell), repeat=f):
        mod = tuple(reversed(high_to_low)) + (1,)
        if mod[0] == 0:
            continue  # divisible by x
        if _is_irreducible(mod, ell):
            return FieldSpec(ell, f, mod)
    raise AssertionError("no irreducible polynomial found")


__all__ = ["FieldSpec", "make_field", "MAX_SIZE", "MAX_DEGREE"]
