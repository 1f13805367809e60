"""Exact arithmetic over small finite fields and their polynomial rings.

A field element of GF(p^m) is an integer index in range(p^m) whose base-p
digits (little endian) are its coordinates in the power basis of the field
modulus; for m = 1 the index is simply the residue mod p.  A polynomial is
a tuple of such indices, little endian, with no trailing zeros.  Every
object here is immutable and hashable, so results compare bit-exactly and
can be used as dict keys.  All operations are pure functions.
"""

from __future__ import annotations

import functools
import math
import re
from dataclasses import dataclass

import numpy as np

from .errors import InternalError, ParseError, PreconditionError


# ---------------------------------------------------------------------------
# integer utilities


def is_prime(n: int) -> bool:
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


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending, by trial division."""
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


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def order_mod(a: int, n: int) -> int:
    """Multiplicative order of a modulo n."""
    if n <= 1 or math.gcd(a, n) != 1:
        raise PreconditionError(f"order of {a} mod {n} is undefined")
    t = a % n
    k = 1
    while t != 1:
        t = t * a % n
        k += 1
    return k


def _int_digits(i: int, base: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        out.append(i % base)
        i //= base
    return out


# ---------------------------------------------------------------------------
# prime-field polynomial helpers on raw int lists (little endian)
#
# Used to validate extension moduli and to multiply element representations
# before FieldSpec/Poly exist, so they cannot depend on either.


def _pf_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _pf_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pf_trim(out)


def _pf_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    if len(a) < len(b):
        return [], _pf_trim(r)
    qc = [0] * (len(a) - len(b) + 1)
    inv_lead = pow(b[-1], -1, p)
    for i in range(len(qc) - 1, -1, -1):
        c = r[i + len(b) - 1] * inv_lead % p
        if c:
            qc[i] = c
            for j, bj in enumerate(b):
                r[i + j] = (r[i + j] - c * bj) % p
    return _pf_trim(qc), _pf_trim(r)


def _pf_is_irreducible(f: list[int], p: int) -> bool:
    # trial division by every monic polynomial of degree <= deg(f)/2
    d = len(f) - 1
    if d <= 0:
        return False
    for deg in range(1, d // 2 + 1):
        for idx in range(p**deg):
            g = _int_digits(idx, p, deg) + [1]
            if not _pf_divmod(f, g, p)[1]:
                return False
    return True


# ---------------------------------------------------------------------------
# fields


@dataclass(frozen=True)
class FieldSpec:
    """A finite field GF(p^m) with elements addressed by integer index.

    modulus holds the little-endian coefficients of a monic irreducible of
    degree m over GF(p); it stays empty for prime fields.  Irreducibility
    is checked at construction by exhaustive trial division, which is fine
    at the degrees this package ever sees.
    """

    p: int
    m: int = 1
    modulus: tuple[int, ...] = ()

    def __post_init__(self):
        if not is_prime(self.p):
            raise PreconditionError(f"characteristic {self.p} is not prime")
        if self.m < 1:
            raise PreconditionError("extension degree must be >= 1")
        if self.m == 1:
            if self.modulus:
                raise PreconditionError("prime fields take no modulus")
            return
        mod = self.modulus
        if len(mod) != self.m + 1 or mod[-1] != 1:
            raise PreconditionError("modulus must be monic of degree m")
        if any(not 0 <= c < self.p for c in mod):
            raise PreconditionError("modulus coefficients out of range")
        if not _pf_is_irreducible(list(mod), self.p):
            raise PreconditionError("modulus is reducible over the prime field")

    @property
    def q(self) -> int:
        return self.p**self.m

    def __repr__(self):
        return f"GF({self.q})" if self.m == 1 else f"GF({self.p}^{self.m})"

    # -- arithmetic on element indices --------------------------------

    def _digits(self, a: int) -> list[int]:
        return _int_digits(a, self.p, self.m)

    def _undigits(self, digs: list[int]) -> int:
        out = 0
        for d in reversed(digs):
            out = out * self.p + d
        return out

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        p = self.p
        out, mult = 0, 1
        while a or b:
            out += (a % p + b % p) % p * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        if self.m == 1:
            return -a % self.p
        p = self.p
        out, mult = 0, 1
        while a:
            out += -a % p * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        prod = _pf_mul(self._digits(a), self._digits(b), self.p)
        _, r = _pf_divmod(prod, list(self.modulus), self.p)
        return self._undigits(r + [0] * (self.m - len(r)))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.m == 1:
            return pow(a, -1, self.p)
        return self.pow(a, self.q - 2)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a = self.inv(a)
            e = -e
        out = 1
        while e:
            if e & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            e >>= 1
        return out

    def element(self, idx: int) -> "FieldElement":
        return FieldElement(self, idx)

    @functools.cached_property
    def tables(self) -> tuple[np.ndarray, np.ndarray]:
        """(add, mul) lookup tables as q-by-q arrays for vectorized spans."""
        q = self.q
        if q > 1024:
            raise PreconditionError(f"dense tables for q = {q} refused")
        dtype = np.uint8 if q <= 256 else np.uint16
        add = np.empty((q, q), dtype=dtype)
        mul = np.empty((q, q), dtype=dtype)
        for a in range(q):
            for b in range(a, q):
                add[a, b] = add[b, a] = self.add(a, b)
                mul[a, b] = mul[b, a] = self.mul(a, b)
        return add, mul


@dataclass(frozen=True)
class FieldElement:
    """One element of a FieldSpec, by index.  Equality is representation
    equality."""

    spec: FieldSpec
    idx: int

    def __post_init__(self):
        if not 0 <= self.idx < self.spec.q:
            raise PreconditionError(f"element index {self.idx} out of range")

    @property
    def rep(self) -> tuple[int, ...]:
        """Coordinates over GF(p), little endian, always length m."""
        return tuple(_int_digits(self.idx, self.spec.p, self.spec.m))

    def _peer(self, other) -> int:
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.spec != self.spec:
            raise PreconditionError("field mismatch")
        return other.idx

    def __add__(self, other):
        b = self._peer(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.add(self.idx, b))

    def __sub__(self, other):
        b = self._peer(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.sub(self.idx, b))

    def __mul__(self, other):
        b = self._peer(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.mul(self.idx, b))

    def __truediv__(self, other):
        b = self._peer(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.mul(self.idx, self.spec.inv(b)))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.idx))

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.spec.pow(self.idx, e))

    def __bool__(self):
        return self.idx != 0

    def __int__(self):
        return self.idx

    def __repr__(self):
        return f"{self.idx}:{self.spec!r}"


# ---------------------------------------------------------------------------
# polynomials


@dataclass(frozen=True)
class Poly:
    """Univariate polynomial over a FieldSpec.

    coeffs is little endian with no trailing zeros; the zero polynomial is
    the empty tuple and has degree -1.  The constructor normalizes, so any
    two equal polynomials are equal as tuples.
    """

    spec: FieldSpec
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = tuple(self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        q = self.spec.q
        for v in c:
            if not isinstance(v, int) or not 0 <= v < q:
                raise PreconditionError(f"coefficient {v!r} out of range")
        object.__setattr__(self, "coeffs", c)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, spec: FieldSpec) -> "Poly":
        return cls(spec, ())

    @classmethod
    def one(cls, spec: FieldSpec) -> "Poly":
        return cls(spec, (1,))

    @classmethod
    def x(cls, spec: FieldSpec) -> "Poly":
        return cls(spec, (0, 1))

    @classmethod
    def monomial(cls, spec: FieldSpec, e: int, c: int = 1) -> "Poly":
        return cls(spec, (0,) * e + (c,))

    @classmethod
    def from_ints(cls, spec: FieldSpec, ints) -> "Poly":
        """Build from plain integers.  Over a prime field entries reduce mod
        p (negatives included); over an extension they are element indices,
        with -v meaning the negative of the element with index v."""
        if spec.m == 1:
            return cls(spec, tuple(v % spec.p for v in ints))
        out = []
        for v in ints:
            if 0 <= v < spec.q:
                out.append(v)
            elif -spec.q < v < 0:
                out.append(spec.neg(-v))
            else:
                raise ParseError(f"coefficient {v} out of range for {spec!r}")
        return cls(spec, tuple(out))

    # -- structure ----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def _check(self, other: "Poly"):
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if other.spec != self.spec:
            raise PreconditionError("field mismatch")

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        spec = self.spec
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = spec.add(out[i], v)
        return Poly(spec, tuple(out))

    def __neg__(self) -> "Poly":
        spec = self.spec
        return Poly(spec, tuple(spec.neg(v) for v in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        spec = self.spec
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(spec)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = spec.add(out[i + j], spec.mul(ai, bj))
        return Poly(spec, tuple(out))

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        spec = self.spec
        db = other.degree
        r = list(self.coeffs)
        if len(r) <= db:
            return Poly.zero(spec), self
        qc = [0] * (len(r) - db)
        inv_lead = spec.inv(other.coeffs[-1])
        for i in range(len(qc) - 1, -1, -1):
            c = spec.mul(r[i + db], inv_lead)
            if c:
                qc[i] = c
                for j, bj in enumerate(other.coeffs):
                    if bj:
                        r[i + j] = spec.sub(r[i + j], spec.mul(c, bj))
        return Poly(spec, tuple(qc)), Poly(spec, tuple(r[:db]))

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise PreconditionError("negative polynomial power")
        out = Poly.one(self.spec)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def pow_mod(self, e: int, modulus: "Poly") -> "Poly":
        """self^e reduced modulo `modulus`, by square and multiply."""
        if e < 0:
            raise PreconditionError("negative polynomial power")
        self._check(modulus)
        if modulus.degree < 1:
            raise PreconditionError("modulus must have degree >= 1")
        out = Poly.one(self.spec) % modulus
        base = self % modulus
        while e:
            if e & 1:
                out = out * base % modulus
            base = base * base % modulus
            e >>= 1
        return out

    # -- scalar helpers -----------------------------------------------

    def scaled(self, c: int) -> "Poly":
        spec = self.spec
        return Poly(spec, tuple(spec.mul(c, v) for v in self.coeffs))

    def monic(self) -> "Poly":
        """Scale to leading coefficient 1; the zero polynomial passes
        through unchanged."""
        if self.is_zero or self.is_monic:
            return self
        return self.scaled(self.spec.inv(self.coeffs[-1]))

    def shifted(self, k: int) -> "Poly":
        """Multiply by x^k, k >= 0."""
        if k < 0:
            raise PreconditionError("negative shift")
        if self.is_zero:
            return self
        return Poly(self.spec, (0,) * k + self.coeffs)

    def evaluate(self, c: int) -> int:
        """Value at the element with index c, by Horner's rule."""
        spec = self.spec
        acc = 0
        for a in reversed(self.coeffs):
            acc = spec.add(spec.mul(acc, c), a)
        return acc

    def __str__(self):
        return format_poly(self)


def xn_minus_const(spec: FieldSpec, n: int, c: int = 1) -> Poly:
    """x^n - c, with c an element index.  x^n + 1 is c = neg(1)."""
    if n < 1:
        raise PreconditionError("length must be >= 1")
    return Poly(spec, (spec.neg(c),) + (0,) * (n - 1) + (1,))


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor; gcd(f, 0) = monic(f), gcd(0, 0) = 0."""
    if a.spec != b.spec:
        raise PreconditionError("field mismatch")
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def reciprocal(h: Poly) -> Poly:
    """Monic reciprocal h*(x) = h(0)^-1 x^deg(h) h(1/x).

    Requires h(0) != 0 so the degree is preserved and the reversal is an
    involution up to monic scaling.
    """
    if h.is_zero or h.coeffs[0] == 0:
        raise PreconditionError("reciprocal needs a nonzero constant term")
    return Poly(h.spec, tuple(reversed(h.coeffs))).monic()


def scale_substitute(g: Poly, lam: FieldElement) -> Poly:
    """g(lam * x): coefficient i picks up a factor lam^i."""
    if lam.spec != g.spec:
        raise PreconditionError("field mismatch")
    if lam.idx == 0:
        raise PreconditionError("substitution scalar must be nonzero")
    spec = g.spec
    out = []
    power = 1
    for v in g.coeffs:
        out.append(spec.mul(v, power))
        power = spec.mul(power, lam.idx)
    return Poly(spec, tuple(out))


def negacyclic_image(M: Poly) -> Poly:
    """Monic normalization of M(-x); the roots are negated."""
    if M.is_zero:
        raise PreconditionError("zero polynomial has no monic associate")
    lam = FieldElement(M.spec, M.spec.neg(1))
    return scale_substitute(M, lam).monic()


def power_substitute_mod(g: Poly, k: int, N: int) -> Poly:
    """g(x^k) in the residue ring mod x^N - 1, monic-normalized.

    Negative k is allowed: the Laurent exponents k*i are first shifted by
    a common power of x so the smallest becomes 0, then reduced mod N.
    That makes the result the monic associate a hand computation would
    write down, e.g. x^-56 + x^-42 + 1 becomes x^56 + x^14 + 1.
    k must not vanish mod N or the substitution collapses to a constant.
    """
    if N < 1:
        raise PreconditionError("modulus length must be >= 1")
    if k % N == 0:
        raise PreconditionError(f"substitution power {k} vanishes mod {N}")
    if g.is_zero:
        return g
    spec = g.spec
    exps = [k * i for i, v in enumerate(g.coeffs) if v]
    shift = -min(exps) if min(exps) < 0 else 0
    acc = [0] * N
    for i, v in enumerate(g.coeffs):
        if v:
            e = (k * i + shift) % N
            acc[e] = spec.add(acc[e], v)
    return Poly(spec, tuple(acc)).monic()


# ---------------------------------------------------------------------------
# multiplicative order of a polynomial


def _p_power_at_least(p: int, e: int) -> int:
    t = 1
    while t < e:
        t *= p
    return t


def _order_iterative(f: Poly) -> int:
    spec = f.spec
    one = Poly.one(spec)
    # ord(f) <= (q^d - 1) * p^ceil(log_p d); anything past that is a bug
    bound = (spec.q**f.degree - 1) * _p_power_at_least(spec.p, f.degree)
    r = Poly.x(spec) % f
    a = 1
    while r != one:
        r = r.shifted(1) % f
        a += 1
        if a > bound:
            raise InternalError(f"order search for {f} exceeded bound {bound}")
    return a


def _order_factored(f: Poly) -> int:
    spec = f.spec
    result = 1
    emax = 1
    for g, e in factor_into_irreducibles(f):
        emax = max(emax, e)
        target = spec.q**g.degree - 1
        x = Poly.x(spec)
        og = None
        for a in divisors(target):
            if x.pow_mod(a, g) == Poly.one(spec):
                og = a
                break
        if og is None:
            raise InternalError(f"no order found for irreducible factor {g}")
        result = math.lcm(result, og)
    return result * _p_power_at_least(spec.p, emax)


def order(f: Poly, method: str = "both") -> int:
    """Smallest a >= 1 with x^a congruent to 1 modulo monic(f).

    method "iterative" walks powers of x directly, "factored" uses the
    factorization of f (lcm of the irreducible factors' orders, times the
    characteristic raised to ceil(log_p of the largest multiplicity)), and
    the default "both" runs the two and insists they agree.
    """
    if f.degree < 1:
        raise PreconditionError("order needs degree >= 1")
    if f.coeffs[0] == 0:
        raise PreconditionError("order needs a nonzero constant term")
    f = f.monic()
    if method == "iterative":
        return _order_iterative(f)
    if method == "factored":
        return _order_factored(f)
    if method != "both":
        raise ParseError(f"unknown order method {method!r}")
    a = _order_iterative(f)
    b = _order_factored(f)
    if a != b:
        raise InternalError(f"order methods disagree on {f}: {a} vs {b}")
    return a


# ---------------------------------------------------------------------------
# irreducibility and factorization (trial division; degrees here are tiny)


def is_irreducible(f: Poly) -> bool:
    d = f.degree
    if d < 1:
        return False
    if d == 1:
        return True
    spec = f.spec
    for dd in range(1, d // 2 + 1):
        for idx in range(spec.q**dd):
            g = Poly(spec, tuple(_int_digits(idx, spec.q, dd)) + (1,))
            if (f % g).is_zero:
                return False
    return True


def factor_into_irreducibles(f: Poly) -> tuple[tuple[Poly, int], ...]:
    """Monic irreducible factors with multiplicities.

    Pairs come back sorted by (degree, coefficient tuple) so the output is
    canonical; the leading unit of f is dropped.
    """
    if f.is_zero:
        raise PreconditionError("cannot factor the zero polynomial")
    spec = f.spec
    rem = f.monic()
    out: dict[Poly, int] = {}
    d = 1
    while rem.degree >= 1 and d <= rem.degree // 2:
        for idx in range(spec.q**d):
            g = Poly(spec, tuple(_int_digits(idx, spec.q, d)) + (1,))
            e = 0
            while True:
                q_, r_ = divmod(rem, g)
                if not r_.is_zero:
                    break
                rem = q_
                e += 1
            if e:
                out[g] = e
        d += 1
    if rem.degree >= 1:
        out[rem] = out.get(rem, 0) + 1
    return tuple(sorted(out.items(), key=lambda kv: (kv[0].degree, kv[0].coeffs)))


def find_irreducible(spec: FieldSpec, degree: int) -> Poly:
    """First monic irreducible of the given degree, scanning the non-leading
    coefficients in ascending little-endian index order.  Deterministic, so
    every derived structure is reproducible."""
    if degree < 1:
        raise PreconditionError("degree must be >= 1")
    for idx in range(spec.q**degree):
        g = Poly(spec, tuple(_int_digits(idx, spec.q, degree)) + (1,))
        if is_irreducible(g):
            return g
    raise InternalError("no irreducible of requested degree")


# ---------------------------------------------------------------------------
# extension fields as polynomial quotients


@dataclass(frozen=True)
class ExtField:
    """GF(q^w) presented as Poly values over `base` modulo `modulus`.

    Elements are ordinary Poly objects of degree < w.  Keeping the tower
    explicit (instead of re-embedding into a flat GF(p^{mw})) makes descent
    to the base field a constant-degree check.
    """

    base: FieldSpec
    modulus: Poly

    def __post_init__(self):
        if self.modulus.spec != self.base:
            raise PreconditionError("modulus not over the base field")
        if not self.modulus.is_monic or self.modulus.degree < 1:
            raise PreconditionError("extension modulus must be monic, degree >= 1")
        if not is_irreducible(self.modulus):
            raise PreconditionError("extension modulus is reducible")

    @property
    def w(self) -> int:
        return self.modulus.degree

    @property
    def size(self) -> int:
        return self.base.q**self.modulus.degree

    def zero(self) -> Poly:
        return Poly.zero(self.base)

    def one(self) -> Poly:
        return Poly.one(self.base)

    def element(self, i: int) -> Poly:
        """The i-th element in ascending index order (base-q digits are the
        coefficients)."""
        if not 0 <= i < self.size:
            raise PreconditionError(f"element index {i} out of range")
        return Poly(self.base, tuple(_int_digits(i, self.base.q, self.w)))

    def add(self, a: Poly, b: Poly) -> Poly:
        return a + b

    def mul(self, a: Poly, b: Poly) -> Poly:
        return a * b % self.modulus

    def pow(self, a: Poly, e: int) -> Poly:
        if e < 0:
            return self.pow(self.inv(a), -e)
        return a.pow_mod(e, self.modulus)

    def inv(self, a: Poly) -> Poly:
        if a.is_zero:
            raise ZeroDivisionError("inverse of zero")
        return a.pow_mod(self.size - 2, self.modulus)

    def descend(self, a: Poly) -> int:
        """Index of a in the base field; a must be a constant."""
        if a.degree > 0:
            raise InternalError(f"element {a} does not lie in the base field")
        return a.coeffs[0] if a.coeffs else 0


def find_primitive(ext: ExtField) -> Poly:
    """First element in ascending index order whose multiplicative order is
    size - 1."""
    n = ext.size - 1
    checks = [n // r for r in prime_factors(n)]
    one = ext.one()
    for i in range(1, ext.size):
        g = ext.element(i)
        if all(ext.pow(g, c) != one for c in checks):
            return g
    raise InternalError("no primitive element found")


# ---------------------------------------------------------------------------
# cyclotomic cosets and minimal polynomials


def cyclotomic_cosets(n: int, q: int) -> tuple[tuple[int, ...], ...]:
    """q-cyclotomic cosets mod n, each sorted ascending, listed by leader.

    Works for any n coprime to q; no field construction involved.
    """
    if n < 1 or math.gcd(n, q) != 1:
        raise PreconditionError(f"cosets mod {n} need gcd(n, q) = 1, n >= 1")
    assigned = [False] * n
    out = []
    for t in range(n):
        if assigned[t]:
            continue
        c = []
        cur = t
        while not assigned[cur]:
            assigned[cur] = True
            c.append(cur)
            cur = cur * q % n
        out.append(tuple(sorted(c)))
    return tuple(out)


@dataclass(frozen=True)
class CyclotomicStructure:
    """Splitting data for x^l - 1 over GF(q): the coset partition of Z_l
    plus a fixed primitive l-th root of unity zeta living in `ext`.

    e is (l-1)/w when w divides l-1 (always the case for prime l) and None
    otherwise.
    """

    l: int
    spec: FieldSpec
    w: int
    e: int | None
    cosets: tuple[tuple[int, ...], ...]
    ext: ExtField
    zeta: Poly

    @property
    def leaders(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.cosets)

    def coset_of(self, t: int) -> tuple[int, ...]:
        t %= self.l
        for c in self.cosets:
            if t in c:
                return c
        raise InternalError("cosets do not cover Z_l")

    def zeta_power(self, i: int) -> Poly:
        return self.ext.pow(self.zeta, i % self.l)


def cyclotomic_structure(l: int, spec: FieldSpec) -> CyclotomicStructure:
    """Build the splitting of x^l - 1 for odd l coprime to q.

    The extension modulus is the first irreducible of degree w = ord_l(q)
    and zeta is g^((q^w - 1)/l) for the first primitive element g, so the
    whole structure is deterministic.  A different zeta would permute the
    coset labels t; nothing downstream depends on more than that labeling.
    """
    q = spec.q
    if l < 3 or l % 2 == 0:
        raise PreconditionError("modulus must be an odd integer >= 3")
    if math.gcd(l, q) != 1:
        raise PreconditionError(f"modulus {l} not coprime to field size {q}")
    w = order_mod(q, l)
    e = (l - 1) // w if (l - 1) % w == 0 else None
    cosets = cyclotomic_cosets(l, q)
    ext = ExtField(spec, find_irreducible(spec, w))
    g = find_primitive(ext)
    zeta = ext.pow(g, (ext.size - 1) // l)
    one = ext.one()
    if ext.pow(zeta, l) != one:
        raise InternalError("zeta is not an l-th root of unity")
    for r in prime_factors(l):
        if ext.pow(zeta, l // r) == one:
            raise InternalError("zeta has order below l")
    return CyclotomicStructure(l, spec, w, e, cosets, ext, zeta)


def minimal_polynomial(struct: CyclotomicStructure, t: int) -> Poly:
    """Monic minimal polynomial of zeta^t over GF(q).

    Expands the product of (x - zeta^i) over the coset of t inside the
    extension, then requires every coefficient to descend to the base
    field.
    """
    ext = struct.ext
    coset = struct.coset_of(t)
    coeffs = [ext.one()]
    for i in coset:
        root = ext.pow(struct.zeta, i)
        nxt = [ext.zero()] * (len(coeffs) + 1)
        for j, c in enumerate(coeffs):
            nxt[j + 1] = nxt[j + 1] + c
            nxt[j] = nxt[j] + ext.mul(c, -root)
        coeffs = nxt
    return Poly(struct.spec, tuple(ext.descend(c) for c in coeffs))


# ---------------------------------------------------------------------------
# text format: human form "x^4+x^3+1" / "3x^2+4x+1", list form "[1,1,0,0,1]"


_TERM_RE = re.compile(r"^([+-])?(\d+)?(x(?:\^(\d+))?)?$")


def parse_poly(spec: FieldSpec, text: str) -> Poly:
    """Parse either text form into a Poly over spec.

    List form is little endian.  Human form allows multi-digit
    coefficients, minus signs, and arbitrary term order; coefficients
    reduce mod p over prime fields.
    """
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial string")
    if s.startswith("["):
        if not s.endswith("]"):
            raise ParseError(f"unterminated coefficient list: {text!r}")
        body = s[1:-1].strip()
        ints = []
        if body:
            for part in body.split(","):
                try:
                    ints.append(int(part.strip()))
                except ValueError:
                    raise ParseError(f"bad coefficient {part.strip()!r}") from None
        return Poly.from_ints(spec, ints)
    compact = s.replace(" ", "")
    if compact == "0":
        return Poly.zero(spec)
    out = Poly.zero(spec)
    for term in re.findall(r"[+-]?[^+-]+", compact):
        mt = _TERM_RE.match(term)
        if not mt or (mt.group(2) is None and mt.group(3) is None):
            raise ParseError(f"bad term {term!r} in {text!r}")
        sign, digits, xpart, exp = mt.groups()
        c = int(digits) if digits is not None else 1
        if sign == "-":
            c = -c
        if xpart is None:
            e = 0
        elif exp is not None:
            e = int(exp)
        else:
            e = 1
        out = out + Poly.from_ints(spec, [0] * e + [c])
    return out


def format_poly(f: Poly) -> str:
    """Human form with descending powers and coefficients as indices."""
    if f.is_zero:
        return "0"
    parts = []
    for e in range(f.degree, -1, -1):
        c = f.coeffs[e]
        if c == 0:
            continue
        if e == 0:
            parts.append(str(c))
        else:
            xs = "x" if e == 1 else f"x^{e}"
            parts.append(xs if c == 1 else f"{c}{xs}")
    return "+".join(parts)


def format_poly_list(f: Poly) -> str:
    """Little-endian list form, e.g. "[1,1,0,0,1]"."""
    return "[" + ",".join(str(c) for c in f.coeffs) + "]"
