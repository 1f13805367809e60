"""Repeated-root cyclic and negacyclic code families over GF(q), q odd.

Lengths p^s, l*p^s (l an odd prime different from p), and 2*p^s.  In every
family x^n -+ 1 is a p^s-th power of a squarefree polynomial, so a code is
pinned down by one exponent a_t in [0, p^s] per irreducible factor.  The
factor labeling conventions and the split into families follow how the
factors organize themselves:

  "ps"            l = 1, single factor x -+ 1, label 0.
  "lemma1-I-even" l odd prime, q generates an even-order subgroup mod l.
                  Factor degrees are uniform; labels 0..e index cosets by
                  ascending leader, label 0 being the x -+ 1 factor.
  "lemma1-I-odd"  as above with odd order; cosets pair off under negation,
                  so labels are 0 and +-1..+-e/2, the positive label of a
                  pair going to the coset with the smaller leader.
  "lemma1-II"     q = 1 mod l; all factors linear, labels 0, +-1..+-(l-1)/2
                  with label t meaning the factor with root zeta^t.
  "lemma2"        l = 2.  Cyclic: labels 0, 1 for x-1, x+1.  Negacyclic
                  splits on q mod 4: labels 0, 1 for x-eta, x+eta when
                  q = 1 mod 4 (eta^2 = -1), single label 0 for x^2+1
                  otherwise.

The same exponent data generates a cyclic or a negacyclic code: the shift
argument picks the factor system (M_t versus the monic M_t(-x)).
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass

from .algebra import (
    FieldSpec,
    Poly,
    cyclotomic_cosets,
    cyclotomic_structure,
    is_prime,
    minimal_polynomial,
    negacyclic_image,
    order_mod,
)
from .codes import (
    ConstacyclicCode,
    DEFAULT_BUDGET,
    INFINITE_DISTANCE,
    make_code,
    min_distance_bruteforce,
)
from .errors import InternalError, ParseError, PreconditionError


class Family(enum.Enum):
    """Factor-system families; values are the wire tokens the CLI accepts."""

    PRIME_POWER = "ps"
    COFACTOR_EVEN_ORDER = "lemma1-I-even"
    COFACTOR_ODD_ORDER = "lemma1-I-odd"
    COFACTOR_SPLIT = "lemma1-II"
    TWICE_PRIME_POWER = "lemma2"


_LEMMA1_FAMILIES = (
    Family.COFACTOR_EVEN_ORDER,
    Family.COFACTOR_ODD_ORDER,
    Family.COFACTOR_SPLIT,
)


def _require_odd_q(spec: FieldSpec):
    if spec.q % 2 == 0:
        raise PreconditionError("repeated-root families here need odd q")


def classify_family(l: int, spec: FieldSpec) -> Family:
    """The unique family tag for co-factor length l over the given field."""
    _require_odd_q(spec)
    if l == 1:
        return Family.PRIME_POWER
    if l == 2:
        return Family.TWICE_PRIME_POWER
    if l == spec.p or l % 2 == 0 or not is_prime(l):
        raise PreconditionError(
            f"co-factor length must be 1, 2, or an odd prime != {spec.p}; got {l}"
        )
    w = order_mod(spec.q, l)
    if w == 1:
        return Family.COFACTOR_SPLIT
    return Family.COFACTOR_EVEN_ORDER if w % 2 == 0 else Family.COFACTOR_ODD_ORDER


@functools.lru_cache(maxsize=None)
def _label_leaders(l: int, spec: FieldSpec) -> tuple[tuple[int, int], ...]:
    """(label, coset leader) pairs for the lemma1 families, sorted by label."""
    fam = classify_family(l, spec)
    if fam is Family.COFACTOR_SPLIT:
        half = (l - 1) // 2
        return tuple((t, t % l) for t in range(-half, half + 1))
    cosets = cyclotomic_cosets(l, spec.q)
    w = order_mod(spec.q, l)
    for c in cosets[1:]:
        if len(c) != w:
            raise InternalError(f"nonuniform coset size {len(c)} mod {l}")
    if fam is Family.COFACTOR_EVEN_ORDER:
        return tuple((i, c[0]) for i, c in enumerate(cosets))
    # odd order: pair nonzero cosets with their negations
    pairs = {0: 0}
    used = set()
    j = 0
    for c in cosets[1:]:
        if c[0] in used:
            continue
        neg = tuple(sorted((l - x) % l for x in c))
        if neg == c:
            raise InternalError(f"coset {c} self-paired despite odd order")
        j += 1
        pairs[j] = c[0]
        pairs[-j] = neg[0]
        used.add(c[0])
        used.add(neg[0])
    return tuple(sorted(pairs.items()))


@functools.lru_cache(maxsize=None)
def _label_factors(l: int, spec: FieldSpec, shift: int) -> tuple[tuple[int, Poly], ...]:
    """(label, irreducible factor) pairs.  shift +1 gives the M_t, shift -1
    their monic negated-variable images."""
    struct = cyclotomic_structure(l, spec)
    out = []
    for label, leader in _label_leaders(l, spec):
        M = minimal_polynomial(struct, leader)
        out.append((label, M if shift == 1 else negacyclic_image(M)))
    return tuple(out)


def family_labels(l: int, spec: FieldSpec, shift: int = -1) -> tuple[int, ...]:
    """Sorted label set for the factor system of x^(l p^s) - shift."""
    fam = classify_family(l, spec)
    if fam is Family.PRIME_POWER:
        return (0,)
    if fam is Family.TWICE_PRIME_POWER:
        if shift == -1 and spec.q % 4 == 3:
            return (0,)
        return (0, 1)
    return tuple(label for label, _ in _label_leaders(l, spec))


@dataclass(frozen=True)
class RepeatedRootSpec:
    """Exponent data for one repeated-root code: a_t per factor label t.

    The exponents are kept dense (every label of the family present, with
    a_t = p^s marking an absent factor) so nothing is silently dropped.
    For l = 2 the label set {0} is also accepted, covering the negacyclic
    q = 3 mod 4 factor system.
    """

    spec: FieldSpec
    p: int
    s: int
    l: int
    family: Family
    exponents: tuple[tuple[int, int], ...]

    def __post_init__(self):
        _require_odd_q(self.spec)
        if self.p != self.spec.p:
            raise PreconditionError("p must be the field characteristic")
        if self.s < 1:
            raise PreconditionError("s must be >= 1")
        expected = classify_family(self.l, self.spec)
        if self.family is not expected:
            raise PreconditionError(
                f"family {self.family.value} inconsistent with l={self.l}: "
                f"expected {expected.value}"
            )
        exps = tuple(sorted((int(t), int(a)) for t, a in self.exponents))
        object.__setattr__(self, "exponents", exps)
        labels = tuple(t for t, _ in exps)
        if len(set(labels)) != len(labels):
            raise PreconditionError("duplicate exponent labels")
        full = family_labels(self.l, self.spec, shift=1)
        short = family_labels(self.l, self.spec, shift=-1)
        if labels != full and labels != short:
            raise PreconditionError(
                f"labels {labels} do not match the family's label set {full}"
            )
        ps = self.p**self.s
        for t, a in exps:
            if not 0 <= a <= ps:
                raise PreconditionError(f"exponent a_{t} = {a} outside [0, {ps}]")

    @property
    def n(self) -> int:
        return self.l * self.p**self.s

    @property
    def exponent_map(self) -> dict[int, int]:
        return dict(self.exponents)

    def a(self, label: int) -> int:
        for t, v in self.exponents:
            if t == label:
                return v
        raise PreconditionError(f"no exponent for label {label}")


# ---------------------------------------------------------------------------
# generators


def gen_ps(spec: FieldSpec, s: int, k: int, shift: int) -> ConstacyclicCode:
    """Length p^s: the code <(x -+ 1)^(p^s - k)> of dimension k."""
    _require_odd_q(spec)
    ps = spec.p**s
    if not 0 <= k <= ps:
        raise PreconditionError(f"dimension {k} outside [0, {ps}]")
    root = 1 if shift == 1 else spec.neg(1)
    g = Poly(spec, (spec.neg(root), 1)) ** (ps - k)
    return make_code(spec, ps, shift, g)


def gen_lps(rrspec: RepeatedRootSpec, shift: int) -> ConstacyclicCode:
    """Length l*p^s: the product of factor powers (M_t)^(p^s - a_t), with
    the negacyclic factor system when shift = -1."""
    if rrspec.family not in _LEMMA1_FAMILIES:
        raise PreconditionError(f"gen_lps does not cover family {rrspec.family.value}")
    factors = dict(_label_factors(rrspec.l, rrspec.spec, shift))
    ps = rrspec.p**rrspec.s
    g = Poly.one(rrspec.spec)
    for t, a in rrspec.exponents:
        g = g * factors[t] ** (ps - a)
    return make_code(rrspec.spec, rrspec.n, shift, g)


def gen_lps_dual(rrspec: RepeatedRootSpec, shift: int) -> Poly:
    """Dual generator in closed form: exponents complement to a_t, and for
    the odd-order and split families the labels swap t <-> -t (each factor's
    reciprocal is the factor of the negated label)."""
    if rrspec.family not in _LEMMA1_FAMILIES:
        raise PreconditionError(f"gen_lps_dual does not cover {rrspec.family.value}")
    factors = dict(_label_factors(rrspec.l, rrspec.spec, shift))
    amap = rrspec.exponent_map
    g = Poly.one(rrspec.spec)
    for t in factors:
        a = amap[t] if rrspec.family is Family.COFACTOR_EVEN_ORDER else amap[-t]
        g = g * factors[t] ** a
    return g


def sqrt_of_minus_one(spec: FieldSpec) -> int:
    """The canonical square root of -1: smallest element index with
    idx^2 = -1.  Exists iff q = 1 mod 4."""
    if spec.q % 4 != 1:
        raise PreconditionError(f"-1 is not a square in {spec!r}")
    minus_one = spec.neg(1)
    for c in range(spec.q):
        if spec.mul(c, c) == minus_one:
            return c
    raise InternalError("q = 1 mod 4 but no square root of -1 found")


def gen_2ps(spec: FieldSpec, s: int, exponents, shift: int) -> ConstacyclicCode:
    """Length 2p^s.  Cyclic: (x-1)^(p^s-a_0) (x+1)^(p^s-a_1).  Negacyclic
    with q = 1 mod 4: (x-eta)^(p^s-a_0) (x+eta)^(p^s-a_1).  Negacyclic with
    q = 3 mod 4: the single factor (x^2+1)^(p^s-a_0)."""
    _require_odd_q(spec)
    if s < 1:
        raise PreconditionError("s must be >= 1")
    ps = spec.p**s
    exps = dict(exponents)
    for t, a in exps.items():
        if not 0 <= a <= ps:
            raise PreconditionError(f"exponent a_{t} = {a} outside [0, {ps}]")
    if shift == 1 or spec.q % 4 == 1:
        if set(exps) != {0, 1}:
            raise PreconditionError(f"labels {sorted(exps)} should be [0, 1]")
        if shift == 1:
            r0, r1 = 1, spec.neg(1)
        else:
            eta = sqrt_of_minus_one(spec)
            r0, r1 = eta, spec.neg(eta)
        g = Poly(spec, (spec.neg(r0), 1)) ** (ps - exps[0])
        g = g * Poly(spec, (spec.neg(r1), 1)) ** (ps - exps[1])
    else:
        if set(exps) != {0}:
            raise PreconditionError(
                f"q = {spec.q} = 3 mod 4: x^2+1 stays irreducible, single label 0"
            )
        g = Poly(spec, (1, 0, 1)) ** (ps - exps[0])
    return make_code(spec, 2 * ps, shift, g)


def gen_2ps_dual(spec: FieldSpec, s: int, exponents, shift: int) -> Poly:
    """Closed-form dual generator for gen_2ps.

    Cyclic factors and x^2+1 are self-reciprocal, so exponents simply
    complement.  The x -+ eta factors are each other's reciprocals, so
    their exponents swap: the dual is (x+eta)^(a_0) (x-eta)^(a_1).
    """
    _require_odd_q(spec)
    ps = spec.p**s
    exps = dict(exponents)
    if shift == 1 or spec.q % 4 == 1:
        if set(exps) != {0, 1}:
            raise PreconditionError(f"labels {sorted(exps)} should be [0, 1]")
        if shift == 1:
            r0, r1 = 1, spec.neg(1)
            e0, e1 = exps[0], exps[1]
        else:
            eta = sqrt_of_minus_one(spec)
            r0, r1 = eta, spec.neg(eta)
            e0, e1 = exps[1], exps[0]
        g = Poly(spec, (spec.neg(r0), 1)) ** e0
        return g * Poly(spec, (spec.neg(r1), 1)) ** e1
    if set(exps) != {0}:
        raise PreconditionError("q = 3 mod 4 negacyclic has the single label 0")
    return Poly(spec, (1, 0, 1)) ** exps[0]


def generate(rrspec: RepeatedRootSpec, shift: int) -> ConstacyclicCode:
    """Dispatch to the family's generator."""
    if rrspec.family is Family.PRIME_POWER:
        return gen_ps(rrspec.spec, rrspec.s, rrspec.a(0), shift)
    if rrspec.family is Family.TWICE_PRIME_POWER:
        return gen_2ps(rrspec.spec, rrspec.s, rrspec.exponent_map, shift)
    return gen_lps(rrspec, shift)


def generate_dual(rrspec: RepeatedRootSpec, shift: int) -> Poly:
    """Closed-form dual generator for any family."""
    if rrspec.family is Family.PRIME_POWER:
        root = 1 if shift == 1 else rrspec.spec.neg(1)
        return Poly(rrspec.spec, (rrspec.spec.neg(root), 1)) ** rrspec.a(0)
    if rrspec.family is Family.TWICE_PRIME_POWER:
        return gen_2ps_dual(rrspec.spec, rrspec.s, rrspec.exponent_map, shift)
    return gen_lps_dual(rrspec, shift)


# ---------------------------------------------------------------------------
# the P_v / V distance calculus


def weight_pv(v: int, p: int) -> int:
    """Hamming weight of (x-1)^v over GF(p): the product of (digit + 1)
    over the base-p digits of v."""
    if v < 0:
        raise PreconditionError("v must be >= 0")
    out = 1
    while v:
        out *= v % p + 1
        v //= p
    return out


def set_v(p: int, s: int) -> tuple[int, ...]:
    """The breakpoint set V: 0 together with the points
    sum_(mu=1)^(u-1) (p-1) p^(s-mu) + tau p^(s-u) for u in 1..s, tau in
    1..p-1.  Sorted; size 1 + s(p-1)."""
    if p == 2:
        raise PreconditionError("odd characteristic only")
    if s < 1:
        raise PreconditionError("s must be >= 1")
    out = {0}
    for u in range(1, s + 1):
        base = sum((p - 1) * p ** (s - mu) for mu in range(1, u))
        for tau in range(1, p):
            out.add(base + tau * p ** (s - u))
    vs = tuple(sorted(out))
    if len(vs) != 1 + s * (p - 1):
        raise InternalError("breakpoint set has the wrong size")
    return vs


def simple_root_subcode(rrspec: RepeatedRootSpec, v: int, shift: int = -1) -> ConstacyclicCode:
    """The length-l simple-root code keeping exactly the factors whose
    generator exponent p^s - a_t exceeds v."""
    if rrspec.family not in _LEMMA1_FAMILIES:
        raise PreconditionError("simple-root subcodes need an odd-prime co-factor")
    ps = rrspec.p**rrspec.s
    if not 0 <= v <= ps - 1:
        raise PreconditionError(f"v = {v} outside [0, {ps - 1}]")
    factors = dict(_label_factors(rrspec.l, rrspec.spec, shift))
    g = Poly.one(rrspec.spec)
    for t, a in rrspec.exponents:
        if ps - a > v:
            g = g * factors[t]
    return make_code(rrspec.spec, rrspec.l, shift, g)


@dataclass(frozen=True)
class Table1Inputs:
    """Where a (b_min, b_max) pair lands in the nine-case distance table.

    case 1..9 matches the table rows; case 0 covers the degenerate
    situations outside it (b_max = 0 full space, b_min = 0 with missing
    factors, b_min = b_max = p^s zero code).  params carries the case's
    region parameters by name; d_prime is the simple-root subcode distance
    when the case formula uses one, else None.
    """

    b_min: int
    b_max: int
    case: int
    params: tuple[tuple[str, int], ...]
    d_prime: int | float | None


def _region(b: int, p: int, s: int):
    """Region of b in [1, p^s]: A, (B, beta), (C, mu, tau), or D."""
    ps = p**s
    if b == ps:
        return ("D",)
    if 1 <= b <= p ** (s - 1):
        return ("A",)
    for beta in range(1, p - 1):
        if beta * p ** (s - 1) < b <= (beta + 1) * p ** (s - 1):
            return ("B", beta)
    for mu in range(1, s):
        base = ps - p ** (s - mu)
        for tau in range(1, p):
            if base + (tau - 1) * p ** (s - mu - 1) < b <= base + tau * p ** (s - mu - 1):
                return ("C", mu, tau)
    raise InternalError(f"b = {b} escaped the region classification")


def classify_case(p: int, s: int, b_min: int, b_max: int) -> tuple[int, tuple[tuple[str, int], ...]]:
    """Table row (1..9) and named region parameters for a (b_min, b_max)
    pair with 1 <= b_min <= b_max <= p^s; case 0 for anything else."""
    ps = p**s
    if not 0 <= b_min <= b_max <= ps:
        raise PreconditionError(f"need 0 <= b_min <= b_max <= {ps}")
    if b_min == 0 or b_max == 0 or b_min == b_max == ps:
        return 0, ()
    lo = _region(b_min, p, s)
    hi = _region(b_max, p, s)
    key = (lo[0], hi[0])
    if key == ("A", "A"):
        return 1, ()
    if key == ("A", "B"):
        return 2, (("beta", hi[1]),)
    if key == ("A", "C"):
        return 3, (("mu", hi[1]), ("tau", hi[2]))
    if key == ("B", "B"):
        return 4, (("beta0", lo[1]), ("beta1", hi[1]))
    if key == ("B", "C"):
        return 5, (("beta", lo[1]), ("mu", hi[1]), ("tau", hi[2]))
    if key == ("C", "C"):
        return 6, (("mu0", lo[1]), ("tau0", lo[2]), ("mu1", hi[1]), ("tau1", hi[2]))
    if key == ("A", "D"):
        return 7, ()
    if key == ("B", "D"):
        return 8, (("beta", lo[1]),)
    if key == ("C", "D"):
        return 9, (("mu", lo[1]), ("tau", lo[2]))
    raise InternalError(f"regions {lo} {hi} violate the b_min <= b_max ordering")


def _case_formula(case: int, params: dict, p: int, dp) -> int | float:
    if case == 1:
        return 2
    if case == 2:
        return min(2 * dp, params["beta"] + 2)
    if case == 3:
        return min(2 * dp, (params["tau"] + 1) * p ** params["mu"])
    if case == 4:
        return min((params["beta0"] + 2) * dp, params["beta1"] + 2)
    if case == 5:
        return min((params["beta"] + 2) * dp, (params["tau"] + 1) * p ** params["mu"])
    if case == 6:
        t0 = (params["tau0"] + 1) * p ** params["mu0"] * dp
        t1 = (params["tau1"] + 1) * p ** params["mu1"]
        return min(t0, t1)
    if case == 7:
        return 2 * dp
    if case == 8:
        return (params["beta"] + 2) * dp
    if case == 9:
        return (params["tau"] + 1) * p ** params["mu"] * dp
    raise InternalError(f"no formula for case {case}")


def table1_inputs(rrspec: RepeatedRootSpec, shift: int = -1,
                  budget: int = DEFAULT_BUDGET) -> Table1Inputs:
    """Classify the code's (b_min, b_max) pair and evaluate d_prime at the
    canonical breakpoint (see distance_table1)."""
    if rrspec.family not in _LEMMA1_FAMILIES:
        raise PreconditionError("the distance table covers odd-prime co-factors")
    ps = rrspec.p**rrspec.s
    bs = [ps - a for _, a in rrspec.exponents]
    b_min, b_max = min(bs), max(bs)
    case, params = classify_case(rrspec.p, rrspec.s, b_min, b_max)
    v_prime = _first_breakpoint(rrspec.p, rrspec.s, b_min, b_max)
    dp = None
    if v_prime is not None:
        dp = min_distance_bruteforce(simple_root_subcode(rrspec, v_prime, shift), budget)
    return Table1Inputs(b_min, b_max, case, params, dp)


def _first_breakpoint(p: int, s: int, lo: int, hi: int):
    """Smallest v in V with lo <= v < hi, or None.  P_v increases along V,
    so this is also the P_v-minimizing breakpoint of the stratum."""
    for v in set_v(p, s):
        if v >= hi:
            break
        if v >= lo:
            return v
    return None


def distance_table1(rrspec: RepeatedRootSpec, shift: int = -1,
                    budget: int = DEFAULT_BUDGET):
    """Exact minimum distance of the length l*p^s code, by breakpoints.

    Two candidates: P_v' * d(subcode at v') for v' the first breakpoint in
    [b_min, b_max), and P_v'' for v'' the first breakpoint at or above
    b_max (where the subcode is the whole space).  The minimum of the two
    is the distance; both can be missing only for the zero code, reported
    as INFINITE_DISTANCE.  When the pair falls in one of the nine table
    cases the closed-form row value is evaluated as a cross-check.
    """
    if rrspec.family not in _LEMMA1_FAMILIES:
        raise PreconditionError("the distance table covers odd-prime co-factors")
    p, s = rrspec.p, rrspec.s
    ps = p**s
    bs = [ps - a for _, a in rrspec.exponents]
    b_min, b_max = min(bs), max(bs)

    candidates = []
    v_prime = _first_breakpoint(p, s, b_min, b_max)
    dp = None
    if v_prime is not None:
        dp = min_distance_bruteforce(simple_root_subcode(rrspec, v_prime, shift), budget)
        candidates.append(weight_pv(v_prime, p) * dp)
    v_second = next((v for v in set_v(p, s) if v >= b_max), None)
    if v_second is not None:
        candidates.append(weight_pv(v_second, p))
    if not candidates:
        # every factor at full multiplicity: the zero code
        return INFINITE_DISTANCE
    d = min(candidates)

    case, params = classify_case(p, s, b_min, b_max)
    if case:
        row = _case_formula(case, dict(params), p, dp if dp is not None else 1)
        if row != d:
            raise InternalError(
                f"table case {case} gives {row} but breakpoints give {d}"
            )
    return d


# ---------------------------------------------------------------------------
# text form: "rr p=5 s=2 l=3 family=lemma1-II shift=-1 a0=19 a1=18 a-1=18"


def parse_rr_spec(text: str) -> tuple[RepeatedRootSpec, int]:
    """Parse the rr text form; returns the spec and the shift constant."""
    items = text.split()
    if not items or items[0] != "rr":
        raise ParseError("repeated-root spec must start with 'rr'")
    fields: dict[str, str] = {}
    exps: dict[int, int] = {}
    for item in items[1:]:
        if "=" not in item:
            raise ParseError(f"bad item {item!r}")
        key, val = item.split("=", 1)
        if key.startswith("a") and key != "a" and _is_int(key[1:]):
            label = int(key[1:])
            if label in exps:
                raise ParseError(f"duplicate exponent label {label}")
            exps[label] = _parse_int(val, item)
        elif key in ("p", "s", "l", "shift"):
            fields[key] = val
        elif key == "family":
            fields[key] = val
        else:
            raise ParseError(f"unknown field {key!r}")
    for need in ("p", "s", "l", "family", "shift"):
        if need not in fields:
            raise ParseError(f"missing field {need!r}")
    p = _parse_int(fields["p"], "p")
    s = _parse_int(fields["s"], "s")
    l = _parse_int(fields["l"], "l")
    shift = _parse_int(fields["shift"], "shift")
    if shift not in (1, -1):
        raise ParseError("shift must be +1 or -1")
    try:
        family = Family(fields["family"])
    except ValueError:
        raise ParseError(f"unknown family {fields['family']!r}") from None
    spec = FieldSpec(p)
    rr = RepeatedRootSpec(spec, p, s, l, family, tuple(exps.items()))
    return rr, shift


def _is_int(s: str) -> bool:
    try:
        int(s)
    except ValueError:
        return False
    return True


def _parse_int(val: str, where) -> int:
    try:
        return int(val)
    except ValueError:
        raise ParseError(f"bad integer in {where!r}") from None
