"""Constacyclic code objects: duals, containment, encoding, exact minimum
distance by enumeration, and narrow-sense BCH designs.

A code is stored as (field, length, shift constant, monic generator).  The
shift constant is +1 for cyclic and -1 for negacyclic; nothing else occurs
here.  Minimum distances are exact: either the message space or the dual
is enumerated in full, and if both sides blow the budget the search
refuses instead of returning a bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .algebra import (
    FieldSpec,
    Poly,
    ExtField,
    cyclotomic_cosets,
    find_irreducible,
    find_primitive,
    order_mod,
    reciprocal,
    xn_minus_const,
)
from .errors import BudgetExceededError, InternalError, ParseError, PreconditionError

INFINITE_DISTANCE = math.inf

DEFAULT_BUDGET = 10**7

# largest extension degree we are willing to split x^n - 1 over when
# materializing a BCH generator; design-level predicates have no such cap
BCH_MATERIALIZE_ORD_CAP = 8

_D_METHODS = ("bruteforce", "table1", "bound")


@dataclass(frozen=True)
class ConstacyclicCode:
    """An ideal <g> in F_q[x]/(x^n - shift).

    d_known / d_method are optional carried metadata: d_method says how
    d_known was obtained.  "bruteforce" and "table1" are exact values;
    "bound" marks a closed-form expression that is not guaranteed exact
    (the combinators tag their composed-distance formulas this way).
    Records with different metadata compare unequal.
    """

    spec: FieldSpec
    n: int
    shift: int
    g: Poly
    d_known: int | float | None = None
    d_method: str | None = None

    def __post_init__(self):
        if self.n < 1:
            raise PreconditionError("length must be >= 1")
        if self.shift not in (1, -1):
            raise PreconditionError("shift constant must be +1 or -1")
        if self.spec.p == 2 and self.shift == -1:
            # -1 = +1 in characteristic 2; keep one canonical form
            object.__setattr__(self, "shift", 1)
        if self.g.spec != self.spec:
            raise PreconditionError("generator is over the wrong field")
        if not self.g.is_monic:
            raise PreconditionError("generator must be monic")
        if not (self.modulus_poly() % self.g).is_zero:
            raise PreconditionError(
                f"generator {self.g} does not divide x^{self.n} - ({self.shift})"
            )
        if (self.d_known is None) != (self.d_method is None):
            raise PreconditionError("d_known and d_method come together")
        if self.d_method is not None and self.d_method not in _D_METHODS:
            raise PreconditionError(f"unknown d_method {self.d_method!r}")

    def modulus_poly(self) -> Poly:
        c = 1 if self.shift == 1 else self.spec.neg(1)
        return xn_minus_const(self.spec, self.n, c)

    @property
    def k(self) -> int:
        return self.n - self.g.degree

    @property
    def h(self) -> Poly:
        """Check polynomial: g * h = x^n - shift."""
        return self.modulus_poly() // self.g

    def with_distance(self, d, method: str) -> "ConstacyclicCode":
        return replace(self, d_known=d, d_method=method)

    def __repr__(self):
        kind = "cyclic" if self.shift == 1 else "negacyclic"
        return f"[{self.n},{self.k}] {kind} {self.spec!r} <{self.g}>"


def make_code(spec: FieldSpec, n: int, shift: int, g: Poly) -> ConstacyclicCode:
    """Validated constructor; see ConstacyclicCode."""
    return ConstacyclicCode(spec, n, shift, g)


def dual(C: ConstacyclicCode) -> ConstacyclicCode:
    """The dual code, generated by the monic reciprocal of h.

    Divisors of x^n - shift always have nonzero constant term, so the
    reciprocal is well defined.  With shift in {+1, -1} the dual lives in
    the same ambient ring.  Distance metadata does not transfer.
    """
    return ConstacyclicCode(C.spec, C.n, C.shift, reciprocal(C.h))


def is_subcode(C: ConstacyclicCode, D: ConstacyclicCode) -> bool:
    """C subseteq D, i.e. g_D | g_C.  Codes must share field, length, shift."""
    if C.spec != D.spec or C.n != D.n or C.shift != D.shift:
        raise PreconditionError("codes live in different ambient rings")
    return (C.g % D.g).is_zero


def is_dual_containing(C: ConstacyclicCode) -> bool:
    """Whether the dual is contained in C."""
    return is_subcode(dual(C), C)


def encode(C: ConstacyclicCode, message: Poly) -> Poly:
    """Codeword m(x) g(x); injective and linear in the message."""
    if message.spec != C.spec:
        raise PreconditionError("message over the wrong field")
    if message.degree >= C.k:
        raise PreconditionError(f"message degree {message.degree} >= k = {C.k}")
    return message * C.g


# ---------------------------------------------------------------------------
# exact minimum distance


def _generator_rows(C: ConstacyclicCode) -> np.ndarray:
    """k x n matrix of element indices whose rows span C (shifts of g)."""
    rows = np.zeros((C.k, C.n), dtype=np.int64)
    for i in range(C.k):
        rows[i, i : i + len(C.g.coeffs)] = C.g.coeffs
    return rows


def _span(spec: FieldSpec, rows: np.ndarray, n: int) -> np.ndarray:
    """All linear combinations of the given rows (q^rows many, zero first)."""
    add_t, mul_t = spec.tables
    q = spec.q
    out = np.zeros((1, n), dtype=add_t.dtype)
    scalars = np.arange(q)
    for r in rows:
        scaled = mul_t[scalars[:, None], r[None, :].astype(np.int64)]
        out = add_t[out[None, :, :], scaled[:, None, :]].reshape(-1, n)
    return out


def enumerate_codewords(C: ConstacyclicCode, budget: int = 10**6) -> np.ndarray:
    """The full q^k x n codeword array.  Materializes everything, so the
    cap is deliberately tighter than the distance budget."""
    if C.spec.q**C.k > budget:
        raise BudgetExceededError(f"q^k = {C.spec.q}^{C.k} over budget {budget}")
    return _span(C.spec, _generator_rows(C), C.n)


def _min_weight_direct(C: ConstacyclicCode) -> int:
    """Exact min weight by a two-half sweep of the message space."""
    spec = C.spec
    rows = _generator_rows(C)
    k1 = C.k // 2
    half_a = _span(spec, rows[:k1], C.n)
    half_b = _span(spec, rows[k1:], C.n)
    add_t, _ = spec.tables
    best = C.n + 1
    for a in half_a:
        combined = add_t[a[None, :], half_b]
        w = np.count_nonzero(combined, axis=1)
        nz = w[w > 0]
        if nz.size:
            best = min(best, int(nz.min()))
    if best > C.n:
        raise InternalError("no nonzero codeword found in a k >= 1 code")
    return best


def _weight_distribution(C: ConstacyclicCode) -> list[int]:
    """Counts of codewords per weight 0..n, by the same two-half sweep."""
    spec = C.spec
    rows = _generator_rows(C)
    k1 = C.k // 2
    half_a = _span(spec, rows[:k1], C.n)
    half_b = _span(spec, rows[k1:], C.n)
    add_t, _ = spec.tables
    counts = np.zeros(C.n + 1, dtype=np.int64)
    for a in half_a:
        combined = add_t[a[None, :], half_b]
        w = np.count_nonzero(combined, axis=1)
        counts += np.bincount(w, minlength=C.n + 1)
    return [int(c) for c in counts]


def _krawtchouk(n: int, q: int, j: int, i: int) -> int:
    return sum(
        (-1) ** s * (q - 1) ** (j - s) * math.comb(i, s) * math.comb(n - i, j - s)
        for s in range(0, j + 1)
    )


def _min_distance_via_dual(C: ConstacyclicCode) -> int:
    """Exact distance from the dual weight distribution (MacWilliams).

    Everything stays in exact integers; any non-divisibility or negative
    count means a bug, not a rounding problem.
    """
    spec, n = C.spec, C.n
    B = _weight_distribution(dual(C))
    size_dual = spec.q ** (n - C.k)
    dist = []
    for j in range(n + 1):
        acc = sum(B[i] * _krawtchouk(n, spec.q, j, i) for i in range(n + 1) if B[i])
        if acc % size_dual:
            raise InternalError(f"MacWilliams count for weight {j} not integral")
        aj = acc // size_dual
        if aj < 0:
            raise InternalError(f"negative codeword count at weight {j}")
        dist.append(aj)
    if dist[0] != 1 or sum(dist) != spec.q**C.k:
        raise InternalError("dual-side weight distribution is inconsistent")
    for j in range(1, n + 1):
        if dist[j]:
            return j
    raise InternalError("no nonzero codeword found in a k >= 1 code")


def min_distance_bruteforce(C: ConstacyclicCode, budget: int = DEFAULT_BUDGET):
    """Exact minimum Hamming weight of C.

    Enumerates whichever of the message space (q^k) and the dual's message
    space (q^(n-k)) fits the budget, the primal side first.  The zero code
    gets INFINITE_DISTANCE.  Raises BudgetExceededError when neither side
    fits; never returns an estimate.
    """
    if C.k == 0:
        return INFINITE_DISTANCE
    if C.k == C.n:
        return 1
    q = C.spec.q
    if q**C.k <= budget:
        return _min_weight_direct(C)
    if q ** (C.n - C.k) <= budget:
        return _min_distance_via_dual(C)
    raise BudgetExceededError(
        f"both q^{C.k} and q^{C.n - C.k} exceed budget {budget} for {C!r}"
    )


# ---------------------------------------------------------------------------
# narrow-sense BCH designs


def cyclotomic_cosets_mod(n: int, spec: FieldSpec) -> tuple[tuple[int, ...], ...]:
    """q-cyclotomic cosets mod n with smallest-member leaders."""
    return cyclotomic_cosets(n, spec.q)


@dataclass(frozen=True)
class BchDesign:
    """Coset-level description of a narrow-sense BCH code of designed
    distance delta: the union of the cosets meeting {1, ..., delta-1}.

    Everything dimension- and duality-related is readable off the design
    without building a generator, which keeps lengths with huge splitting
    fields tractable.
    """

    n: int
    spec: FieldSpec
    delta: int
    cosets_used: tuple[tuple[int, ...], ...]

    @property
    def defining_set(self) -> tuple[int, ...]:
        return tuple(sorted(x for c in self.cosets_used for x in c))

    @property
    def dimension(self) -> int:
        return self.n - len(self.defining_set)

    def is_dual_containing(self) -> bool:
        """Dual containment is exactly: the defining set misses its own
        negation."""
        T = set(self.defining_set)
        return all((self.n - t) % self.n not in T for t in T)


def bch_design(n: int, spec: FieldSpec, delta: int) -> BchDesign:
    if math.gcd(n, spec.q) != 1:
        raise PreconditionError(f"length {n} not coprime to field size {spec.q}")
    if not 2 <= delta <= n:
        raise PreconditionError(f"designed distance {delta} outside 2..{n}")
    used = []
    seen = set()
    for c in cyclotomic_cosets(n, spec.q):
        if c[0] in seen:
            continue
        if any(1 <= x <= delta - 1 for x in c):
            used.append(c)
            seen.add(c[0])
    return BchDesign(n, spec, delta, tuple(used))


def bch_code(n: int, spec: FieldSpec, delta: int) -> ConstacyclicCode:
    """Materialize the BCH design as a cyclic code.

    Needs the splitting field GF(q^w) for w = ord_n(q); w above
    BCH_MATERIALIZE_ORD_CAP is refused since the generator would need
    arithmetic in an enormous extension.  Design-level questions
    (dimension, dual containment) never need this.
    """
    design = bch_design(n, spec, delta)
    w = order_mod(spec.q, n)
    if w > BCH_MATERIALIZE_ORD_CAP:
        raise PreconditionError(
            f"splitting field degree {w} exceeds cap {BCH_MATERIALIZE_ORD_CAP}"
        )
    ext = ExtField(spec, find_irreducible(spec, w))
    gamma = ext.pow(find_primitive(ext), (ext.size - 1) // n)
    g = Poly.one(spec)
    for coset in design.cosets_used:
        g = g * _annihilator(ext, gamma, coset)
    code = ConstacyclicCode(spec, n, 1, g)
    if code.k != design.dimension:
        raise InternalError("materialized BCH dimension disagrees with design")
    return code


def _annihilator(ext: ExtField, gamma: Poly, coset: tuple[int, ...]) -> Poly:
    """Monic polynomial over the base field with roots gamma^i, i in coset."""
    coeffs = [ext.one()]
    for i in coset:
        root = ext.pow(gamma, i)
        nxt = [ext.zero()] * (len(coeffs) + 1)
        for j, c in enumerate(coeffs):
            nxt[j + 1] = nxt[j + 1] + c
            nxt[j] = nxt[j] + ext.mul(c, -root)
        coeffs = nxt
    out = Poly(ext.base, tuple(ext.descend(c) for c in coeffs))
    if out.degree != len(coset):
        raise InternalError("annihilator degree mismatch")
    return out


def bch_dual_containing_max_delta(n: int, spec: FieldSpec) -> int:
    """Largest delta in 2..n whose design is dual-containing, or 1 if even
    delta = 2 fails.

    The defining set only grows with delta, so a single upward scan to the
    first failure is exact.  Runs of delta sharing one defining set share
    the verdict, which makes the reported value the largest of its run.
    """
    if math.gcd(n, spec.q) != 1:
        raise PreconditionError(f"length {n} not coprime to field size {spec.q}")
    best = 1
    for delta in range(2, n + 1):
        if not bch_design(n, spec, delta).is_dual_containing():
            break
        best = delta
    return best


# ---------------------------------------------------------------------------
# descriptor records


def descriptor_object(C: ConstacyclicCode) -> dict:
    """Flat structured record; field order matters for the line form."""
    out = {
        "p": C.spec.p,
        "m": C.spec.m,
        "modulus": list(C.spec.modulus),
        "n": C.n,
        "shift": C.shift,
        "generator": list(C.g.coeffs),
        "k": C.k,
    }
    if C.d_known is not None and C.d_known != INFINITE_DISTANCE:
        out["d_known"] = C.d_known
        out["d_method"] = C.d_method
    return out


def descriptor_line(C: ConstacyclicCode) -> str:
    obj = descriptor_object(C)
    parts = []
    for key, val in obj.items():
        if isinstance(val, list):
            parts.append(f"{key}=[{','.join(str(v) for v in val)}]")
        else:
            parts.append(f"{key}={val}")
    return " ".join(parts)


def code_from_descriptor(obj: dict) -> ConstacyclicCode:
    try:
        spec = FieldSpec(int(obj["p"]), int(obj["m"]), tuple(obj["modulus"]))
        g = Poly(spec, tuple(int(c) for c in obj["generator"]))
        code = ConstacyclicCode(
            spec,
            int(obj["n"]),
            int(obj["shift"]),
            g,
            obj.get("d_known"),
            obj.get("d_method"),
        )
    except KeyError as e:
        raise ParseError(f"descriptor missing field {e.args[0]!r}") from None
    if "k" in obj and int(obj["k"]) != code.k:
        raise ParseError(f"descriptor says k={obj['k']} but generator gives {code.k}")
    return code


def parse_descriptor_line(text: str) -> ConstacyclicCode:
    obj = {}
    for item in text.split():
        if "=" not in item:
            raise ParseError(f"bad descriptor item {item!r}")
        key, val = item.split("=", 1)
        if val.startswith("["):
            if not val.endswith("]"):
                raise ParseError(f"unterminated list in {item!r}")
            body = val[1:-1]
            obj[key] = [int(v) for v in body.split(",")] if body else []
        elif key == "d_method":
            obj[key] = val
        else:
            try:
                obj[key] = int(val)
            except ValueError:
                raise ParseError(f"bad integer in {item!r}") from None
    return code_from_descriptor(obj)
