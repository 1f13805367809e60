"""Composing constacyclic codes into longer cyclic codes.

Two constructions live here.  The plus-minus doubling takes a cyclic and
a negacyclic code of the same odd-characteristic length n and glues them
into a cyclic code of length 2n via (u + v | u - v).  The product takes
cyclic codes of coprime lengths n1, n2 and interleaves them into a
cyclic code of length n1*n2 through the CRT index bijection
theta <-> (theta mod n1, theta mod n2).

Both come with a literal vector-level enumeration (`uv_vector_span`,
`product_vector_span`) that builds the codeword set from the defining
recipe instead of the generator-polynomial ideal.  Those are oracles for
the tests, not production paths.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import Poly, poly_gcd, power_substitute_mod, xn_minus_const
from .codes import (
    ConstacyclicCode,
    _generator_rows,
    _span,
    dual,
    enumerate_codewords,
    make_code,
)
from .errors import BudgetExceededError, InternalError, PreconditionError

UV_SPAN_BUDGET = 10**6
PRODUCT_SPAN_BUDGET = 10**5


# ---------------------------------------------------------------------------
# plus-minus doubling


def _check_uv_pair(C1: ConstacyclicCode, C2: ConstacyclicCode) -> None:
    if C1.spec != C2.spec:
        raise PreconditionError("components live over different fields")
    if C1.spec.p == 2:
        raise PreconditionError("doubling needs odd characteristic")
    if C1.n != C2.n:
        raise PreconditionError(f"component lengths differ: {C1.n} vs {C2.n}")
    if C1.shift != 1:
        raise PreconditionError("first component must be cyclic")
    if C2.shift != -1:
        raise PreconditionError("second component must be negacyclic")


def uv_construct(C1: ConstacyclicCode, C2: ConstacyclicCode) -> ConstacyclicCode:
    """Cyclic code of length 2n with generator g1 * g2.

    The codewords are exactly {(u + v | u - v) : u in C1, v in C2}; the
    product of the generators works because x^(2n) - 1 splits as
    (x^n - 1)(x^n + 1) in odd characteristic.  When both component
    distances are on record, the composite carries the closed-form
    min{2 d1, 2 d2, max{d1, d2}} tagged as a bound, not an exact value.
    """
    _check_uv_pair(C1, C2)
    C = make_code(C1.spec, 2 * C1.n, 1, C1.g * C2.g)
    assert C.k == C1.k + C2.k
    if C1.d_known is not None and C2.d_known is not None:
        d1, d2 = C1.d_known, C2.d_known
        C = C.with_distance(min(2 * d1, 2 * d2, max(d1, d2)), "bound")
    return C


def uv_vector_span(
    C1: ConstacyclicCode, C2: ConstacyclicCode, budget: int = UV_SPAN_BUDGET
) -> set:
    """The literal set {(u + v | u - v)} as tuples of element indices.

    Materializes all q^(k1+k2) pairs, so the budget guard is hard.
    """
    if C1.spec != C2.spec:
        raise PreconditionError("components live over different fields")
    if C1.n != C2.n:
        raise PreconditionError(f"component lengths differ: {C1.n} vs {C2.n}")
    spec = C1.spec
    if spec.q ** (C1.k + C2.k) > budget:
        raise BudgetExceededError(
            f"q^(k1+k2) = {spec.q}^{C1.k + C2.k} over budget {budget}"
        )
    U = enumerate_codewords(C1, budget)
    V = enumerate_codewords(C2, budget)
    add_t, _ = spec.tables
    neg_t = np.array([spec.neg(i) for i in range(spec.q)], dtype=add_t.dtype)
    plus = add_t[U[:, None, :], V[None, :, :]]
    minus = add_t[U[:, None, :], neg_t[V][None, :, :]]
    words = np.concatenate([plus, minus], axis=2).reshape(-1, 2 * C1.n)
    return set(map(tuple, words.tolist()))


# ---------------------------------------------------------------------------
# coprime-length product


@dataclass(frozen=True)
class ProductIndexMap:
    """CRT pairing between [0, n1*n2) and [0, n1) x [0, n2).

    alpha and beta satisfy alpha*n1 + beta*n2 = 1, which makes
    theta_of(i, j) the unique index congruent to i mod n1 and j mod n2.
    Any Bezout pair describes the same bijection; `crt_map` picks a
    canonical one.
    """

    n1: int
    n2: int
    alpha: int
    beta: int

    def __post_init__(self):
        if self.n1 < 1 or self.n2 < 1:
            raise PreconditionError("lengths must be >= 1")
        if math.gcd(self.n1, self.n2) != 1:
            raise PreconditionError(f"lengths {self.n1} and {self.n2} share a factor")
        if self.alpha * self.n1 + self.beta * self.n2 != 1:
            raise PreconditionError("alpha*n1 + beta*n2 must equal 1")

    @property
    def length(self) -> int:
        return self.n1 * self.n2

    def theta_of(self, i: int, j: int) -> int:
        return (i * self.beta * self.n2 + j * self.alpha * self.n1) % self.length

    def pair_of(self, theta: int) -> tuple[int, int]:
        return (theta % self.n1, theta % self.n2)


def crt_map(n1: int, n2: int) -> ProductIndexMap:
    """Canonical index map: |alpha| minimal, ties broken toward alpha <= 0."""
    if n1 < 1 or n2 < 1:
        raise PreconditionError("lengths must be >= 1")
    if math.gcd(n1, n2) != 1:
        raise PreconditionError(f"lengths {n1} and {n2} share a factor")
    a0 = pow(n1, -1, n2)
    alpha = a0 if a0 < n2 - a0 else a0 - n2
    beta, rem = divmod(1 - alpha * n1, n2)
    assert rem == 0
    return ProductIndexMap(n1, n2, alpha, beta)


def _substituted(g: Poly, k: int, N: int) -> Poly:
    # g(x^k) mod x^N - 1.  k = 0 mod N collapses every term to x^0; that
    # only arises for length-1 factors, where the constant g(1) is the
    # right image (possibly zero).
    if k % N == 0:
        return Poly(g.spec, (g.evaluate(1),))
    return power_substitute_mod(g, k, N)


def product_construct(
    C1: ConstacyclicCode,
    C2: ConstacyclicCode,
    index_map: ProductIndexMap | None = None,
) -> ConstacyclicCode:
    """Cyclic code of length n1*n2 whose arrays have all length-n1
    sections in C1 and all length-n2 sections in C2.

    The generator is gcd(g1(x^(beta*n2)) * g2(x^(alpha*n1)), x^N - 1).
    The dimension must come out as k1*k2 and the closed-form dual
    generator gcd(g1perp(x^(beta*n2)), g2perp(x^(alpha*n1)), x^N - 1)
    must agree with the reciprocal-of-h dual; both are rechecked on
    every call.  When both component distances are on record the
    composite carries d1*d2, tagged as a bound.
    """
    if C1.spec != C2.spec:
        raise PreconditionError("components live over different fields")
    if C1.shift != 1 or C2.shift != 1:
        raise PreconditionError("both components must be cyclic")
    if math.gcd(C1.n, C2.n) != 1:
        raise PreconditionError(f"lengths {C1.n} and {C2.n} share a factor")
    pmap = index_map if index_map is not None else crt_map(C1.n, C2.n)
    if (pmap.n1, pmap.n2) != (C1.n, C2.n):
        raise PreconditionError("index map was built for different lengths")
    spec = C1.spec
    N = pmap.length
    modulus = xn_minus_const(spec, N, 1)
    A = _substituted(C1.g, pmap.beta * C2.n, N)
    B = _substituted(C2.g, pmap.alpha * C1.n, N)
    C = make_code(spec, N, 1, poly_gcd((A * B) % modulus, modulus))
    if C.k != C1.k * C2.k:
        raise InternalError(f"product dimension {C.k} != {C1.k} * {C2.k}")
    dA = _substituted(dual(C1).g, pmap.beta * C2.n, N)
    dB = _substituted(dual(C2).g, pmap.alpha * C1.n, N)
    if poly_gcd(poly_gcd(dA, dB), modulus) != dual(C).g:
        raise InternalError("closed-form dual generator disagrees with h* dual")
    if C1.d_known is not None and C2.d_known is not None:
        C = C.with_distance(C1.d_known * C2.d_known, "bound")
    return C


def product_vector_span(
    C1: ConstacyclicCode,
    C2: ConstacyclicCode,
    index_map: ProductIndexMap,
    budget: int = PRODUCT_SPAN_BUDGET,
) -> set:
    """All interleaved array codewords c[theta] = a[theta mod n1, theta mod n2].

    Spans the k1*k2 interleaved outer-product basis arrays, so the cost
    is q^(k1*k2); oracle use only.
    """
    if C1.spec != C2.spec:
        raise PreconditionError("components live over different fields")
    if (index_map.n1, index_map.n2) != (C1.n, C2.n):
        raise PreconditionError("index map was built for different lengths")
    spec = C1.spec
    k1, k2 = C1.k, C2.k
    if spec.q ** (k1 * k2) > budget:
        raise BudgetExceededError(
            f"q^(k1*k2) = {spec.q}^{k1 * k2} over budget {budget}"
        )
    _, mul_t = spec.tables
    G1 = _generator_rows(C1)
    G2 = _generator_rows(C2)
    N = index_map.length
    thetas = np.arange(N)
    I, J = thetas % C1.n, thetas % C2.n
    rows = np.zeros((k1 * k2, N), dtype=np.int64)
    for a in range(k1):
        for b in range(k2):
            outer = mul_t[G1[a][:, None], G2[b][None, :]]
            rows[a * k2 + b] = outer[I, J]
    words = _span(spec, rows, N)
    return set(map(tuple, words.tolist()))
