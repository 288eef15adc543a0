"""Finite field arithmetic for GF(p^m).

Elements are canonical integers in [0, q), q = p^m.  The base-p digits of
the integer, least significant first, are the coefficients of a polynomial
over GF(p); arithmetic is modulo a monic irreducible polynomial of degree m.
0 is the additive identity and 1 the multiplicative identity.

The modulus is chosen deterministically: candidates are enumerated by the
integer encoding of their non-leading coefficients (so the lowest-degree
coefficients vary fastest) and the first irreducible one wins.  This makes
the element encoding reproducible, e.g.

    GF(4)  : x^2 + x + 1
    GF(8)  : x^3 + x + 1
    GF(9)  : x^2 + 1

For extension fields a generator of the multiplicative group is located
once and exp/log tables drive mul/inv; prime fields use plain modular
integer arithmetic.
"""

from .errors import DivisionByZero, IncompatibleFields, NotPrime

# exp/log tables are built for extension fields up to this order
_TABLE_LIMIT = 1 << 16


def is_prime(n: int) -> bool:
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


# ----------------------------------------------------------------------
# polynomials over GF(p), as coefficient lists low-to-high (trimmed)
# ----------------------------------------------------------------------

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


def _poly_mod(a: list[int], mod: list[int], p: int) -> list[int]:
    # mod is monic
    a = list(a)
    dm = len(mod) - 1
    while len(a) > dm:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - dm
            for i, c in enumerate(mod):
                a[shift + i] = (a[shift + i] - lead * c) % p
        a.pop()
    return _poly_trim(a)


def _encode(coeffs: list[int], p: int) -> int:
    val = 0
    for c in reversed(coeffs):
        val = val * p + c
    return val


def _decode(value: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        out.append(value % p)
        value //= p
    return out


def _is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for enc in range(p ** d):
            divisor = _decode(enc, p, d) + [1]
            if not _poly_mod(poly, divisor, p):
                return False
    return True


def _find_modulus(p: int, m: int) -> list[int]:
    for enc in range(p ** m):
        cand = _decode(enc, p, m) + [1]
        if _is_irreducible(cand, p):
            return cand
    raise AssertionError(f"no irreducible polynomial of degree {m} over GF({p})")


class FiniteField:
    """GF(p^m) with integer-encoded elements.

    All arithmetic methods take and return integers in [0, q).  Instances
    are immutable and hashable; two instances are equal iff they have the
    same characteristic, degree and modulus.
    """

    __slots__ = ("p", "m", "q", "modulus", "generator", "_exp", "_log",
                 "_embeddings")

    def __init__(self, p: int, m: int = 1, modulus: list[int] | None = None):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.m = m
        self.q = p ** m
        if modulus is None:
            modulus = _find_modulus(p, m)
        else:
            modulus = list(modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree m")
            if not _is_irreducible(modulus, p):
                raise ValueError("modulus is reducible")
        self.modulus = tuple(modulus)
        self._embeddings: dict = {}
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self.generator = self._find_generator()
        if m > 1 and self.q <= _TABLE_LIMIT:
            self._build_tables()

    # -- construction helpers ------------------------------------------

    def _mul_raw(self, a: int, b: int) -> int:
        pa = _decode(a, self.p, self.m)
        pb = _decode(b, self.p, self.m)
        prod = _poly_mod(_poly_mul(pa, pb, self.p), list(self.modulus), self.p)
        return _encode(prod, self.p)

    def _pow_raw(self, a: int, e: int) -> int:
        out = 1
        base = a
        while e:
            if e & 1:
                out = self._mul_raw(out, base)
            base = self._mul_raw(base, base)
            e >>= 1
        return out

    def _find_generator(self) -> int:
        n = self.q - 1
        if n == 1:
            return 1
        factors = _prime_factors(n)
        for g in range(2, self.q):
            if all(self._pow_raw(g, n // f) != 1 for f in factors):
                return g
        raise AssertionError("multiplicative group has no generator")

    def _build_tables(self) -> None:
        n = self.q - 1
        exp = [1] * (2 * n)
        log = [0] * self.q
        val = 1
        for i in range(n):
            exp[i] = val
            exp[i + n] = val
            log[val] = i
            val = self._mul_raw(val, self.generator)
        self._exp = exp
        self._log = log

    # -- arithmetic -----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % p
        out = 0
        mult = 1
        while a or b:
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        p = self.p
        if p == 2:
            return a
        if self.m == 1:
            return (p - a) % p
        out = 0
        mult = 1
        while a:
            out += ((p - a % p) % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("0 has no multiplicative inverse")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        if self._exp is not None:
            return self._exp[self.q - 1 - self._log[a]]
        return self._pow_raw(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if self.m == 1:
            return pow(a, e, self.p)
        if a == 0:
            return 1 if e == 0 else 0
        if self._exp is not None:
            return self._exp[self._log[a] * e % (self.q - 1)]
        return self._pow_raw(a, e)

    # -- element views ----------------------------------------------------

    def elements(self) -> range:
        return range(self.q)

    def coeffs(self, a: int) -> list[int]:
        """Base-p digits of a, low-to-high, length m."""
        return _decode(a, self.p, self.m)

    def from_coeffs(self, digits) -> int:
        return _encode([d % self.p for d in digits], self.p)

    # -- dunder -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, FiniteField)
                and self.p == other.p and self.m == other.m
                and self.modulus == other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m})"


def field_new(p: int, m: int = 1) -> FiniteField:
    """GF(p^m) with the deterministically chosen modulus."""
    return FiniteField(p, m)


def _eval_poly(coeffs, x: int, field: FiniteField) -> int:
    """Evaluate a polynomial with prime-subfield coefficients at x."""
    acc = 0
    for c in reversed(list(coeffs)):
        acc = field.add(field.mul(acc, x), c % field.p)
    return acc


def embed_subfield(small: FiniteField, a: int, big: FiniteField) -> int:
    """Image of a in big under the canonical embedding GF(q) -> GF(q^s).

    The embedding sends the small field's polynomial generator to the
    smallest root (by integer encoding) of the small modulus inside big,
    which makes it a deterministic ring homomorphism.  Prime subfields
    embed as the identity on [0, p).
    """
    if small.p != big.p or big.m % small.m != 0:
        raise IncompatibleFields(f"no embedding {small!r} -> {big!r}")
    if not 0 <= a < small.q:
        raise ValueError(f"{a} is not an element of {small!r}")
    if small.m == 1:
        return a
    key = (small.p, small.m, small.modulus)
    table = big._embeddings.get(key)
    if table is None:
        root = None
        for z in range(big.q):
            if _eval_poly(small.modulus, z, big) == 0:
                root = z
                break
        if root is None:
            raise IncompatibleFields(
                f"modulus of {small!r} has no root in {big!r}")
        table = []
        for val in range(small.q):
            img = 0
            for i, c in enumerate(small.coeffs(val)):
                img = big.add(img, big.mul(c, big.pow(root, i)))
            table.append(img)
        big._embeddings[key] = table
    return table[a]
