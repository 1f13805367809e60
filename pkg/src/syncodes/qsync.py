"""Certificates for block-synchronization code pairs.

The quantum-code side is never represented directly.  A certificate
records the classical evidence that a nested pair of cyclic codes
C subseteq D (with C containing its dual) yields an [[n, 2k_C - n]]
synchronizable code: the exact quotient f = g_C / g_D, its
multiplicative order (the misalignment tolerance, at most n), and
error-correction bounds floor((d-1)/2) carrying the provenance of
whatever distance metadata the inputs brought along.

`assemble` handles a bare pair, `assemble_uv` the doubled pairs built
from four length-n components, `assemble_product` the coprime-length
product pairs.  `check_theorem3` and `check_theorem456` verify the
sufficient conditions under which the repeated-root families reach the
maximum tolerance, and cross-check each passing condition set by
actually assembling the certificate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import (
    FieldSpec,
    Poly,
    format_poly,
    is_prime,
    order,
    order_mod,
    poly_gcd,
    reciprocal,
    xn_minus_const,
)
from .codes import (
    INFINITE_DISTANCE,
    ConstacyclicCode,
    dual,
    is_dual_containing,
    is_subcode,
    make_code,
)
from .combinators import _substituted, crt_map, product_construct, uv_construct
from .errors import InternalError, PreconditionError
from .repeated_root import Family, RepeatedRootSpec, gen_ps, generate


def _ser(v):
    if v == INFINITE_DISTANCE:
        return "infinite"
    return v


@dataclass(frozen=True)
class ErrorBound:
    """floor((d - 1) / 2) together with where its d came from.

    method is one of the code-level distance methods ("bruteforce" and
    "table1" are exact, "bound" is a closed form) or "unknown" when the
    input carried no distance at all.
    """

    t: int | None
    d: int | None
    method: str

    def as_document(self) -> dict:
        return {"t": _ser(self.t), "d": _ser(self.d), "method": self.method}


def _distance_bound(C: ConstacyclicCode) -> ErrorBound:
    if C.d_known is None:
        return ErrorBound(None, None, "unknown")
    return ErrorBound((C.d_known - 1) // 2, C.d_known, C.d_method)


@dataclass(frozen=True)
class QsyncCertificate:
    """Evidence bundle for one synchronizable-code construction.

    n, k are the [[n, k]] parameters; f the quotient polynomial whose
    order is the tolerance; checks the ledger of verified predicates.
    A degenerate pair (C = D) is legal and shows up as tolerance 0 with
    an empty admissible window.
    """

    n: int
    k: int
    f: Poly
    tolerance: int
    max_tolerance: bool
    bit_error_bound: ErrorBound
    phase_error_bound: ErrorBound
    checks: tuple[str, ...]

    def admits(self, a_left: int, a_right: int) -> bool:
        """Whether the misalignment pair is inside the tolerated window."""
        if a_left < 0 or a_right < 0:
            return False
        return a_left + a_right < self.tolerance

    def as_document(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "f": format_poly(self.f),
            "tolerance": self.tolerance,
            "max_tolerance": self.max_tolerance,
            "bit_error_bound": self.bit_error_bound.as_document(),
            "phase_error_bound": self.phase_error_bound.as_document(),
            "checks": list(self.checks),
        }


def assemble(C: ConstacyclicCode, D: ConstacyclicCode) -> QsyncCertificate:
    """Certificate for a dual-containing cyclic C nested in cyclic D.

    f = g_C / g_D is re-verified to divide exactly; the tolerance is
    ord(f) computed by both order algorithms (they must agree).  C = D
    gives the degenerate zero-tolerance certificate rather than an
    error.  Bit bounds come from d_D, phase bounds from d_C.
    """
    if C.spec != D.spec or C.n != D.n:
        raise PreconditionError("codes live in different ambient rings")
    if C.shift != 1 or D.shift != 1:
        raise PreconditionError("both codes must be cyclic")
    if not is_dual_containing(C):
        raise PreconditionError("C does not contain its dual")
    if not is_subcode(C, D):
        raise PreconditionError("C is not a subcode of D")
    f, rem = divmod(C.g, D.g)
    if not rem.is_zero:
        raise InternalError("nesting holds but g_D does not divide g_C")
    assert f.is_monic
    if f.coeffs[0] == 0:
        raise InternalError("quotient f has zero constant term")
    checks = [
        "C contains its dual",
        "g_D divides g_C",
        "f = g_C / g_D with zero remainder",
    ]
    k = 2 * C.k - C.n
    assert k >= 0
    if f.degree == 0:
        tolerance = 0
        checks.append("f constant: degenerate pair, zero tolerance")
    else:
        tolerance = order(f)
        checks.append("ord(f) agreed between iterative and factored methods")
        if not 1 <= tolerance <= C.n:
            raise InternalError(f"ord(f) = {tolerance} outside [1, {C.n}]")
        checks.append("tolerance within [1, n]")
    return QsyncCertificate(
        n=C.n,
        k=k,
        f=f,
        tolerance=tolerance,
        max_tolerance=tolerance == C.n,
        bit_error_bound=_distance_bound(D),
        phase_error_bound=_distance_bound(C),
        checks=tuple(checks),
    )


def assemble_uv(
    C1: ConstacyclicCode,
    C2: ConstacyclicCode,
    C3: ConstacyclicCode,
    C4: ConstacyclicCode,
) -> QsyncCertificate:
    """Certificate for the doubled pair C1 v C2 subseteq C3 v C4.

    C1, C3 cyclic and C2, C4 negacyclic, all of one length n over an
    odd-characteristic field, each containing its dual, with C1 in C3
    and C2 in C4.  Reusing one pair as both inner and outer is refused;
    sweep over `assemble` directly for degenerate probes.  The composed
    codes carry the min{2d', 2d'', max{d', d''}} distance bound when the
    component distances are known, so the certificate's error bounds
    inherit exactly that provenance.
    """
    for idx, Ci in ((1, C1), (2, C2), (3, C3), (4, C4)):
        want = 1 if idx % 2 else -1
        if Ci.shift != want:
            kind = "cyclic" if want == 1 else "negacyclic"
            raise PreconditionError(f"C{idx} must be {kind}")
        if not is_dual_containing(Ci):
            raise PreconditionError(f"C{idx} does not contain its dual")
    if not is_subcode(C1, C3):
        raise PreconditionError("C1 is not a subcode of C3")
    if not is_subcode(C2, C4):
        raise PreconditionError("C2 is not a subcode of C4")
    C = uv_construct(C1, C2)
    D = uv_construct(C3, C4)
    if C.g == D.g:
        raise PreconditionError("inner and outer pairs coincide")
    cert = assemble(C, D)
    assert cert.k == 2 * (C1.k + C2.k - C1.n)
    return cert


def assemble_product(
    C1: ConstacyclicCode, C2: ConstacyclicCode, rho: Poly
) -> QsyncCertificate:
    """Certificate from duals of two coprime-length product codes.

    C1 is a self-orthogonal cyclic [n1, k1] code, C2 a cyclic [n2, k2]
    code with gcd(n1, n2) = 1.  rho (non-trivial, rho(0) = 1) enlarges
    g2 into g3 = g2 * rho, which must still divide x^n2 - 1, and must be
    coprime to h2 / rho, i.e. gcd(g3perp, rho*) = 1.  The assembled pair
    is dual(C1 x C2) inside dual(C1 x C3), giving [[n1 n2, n1 n2 -
    2 k1 k2]].  The quotient f is recomputed directly as
    gcd(g1perp(x^(beta n2)), rho*(x^(alpha n1)), x^N - 1) and must match
    bit for bit.
    """
    if C1.spec != C2.spec:
        raise PreconditionError("components live over different fields")
    if C1.shift != 1 or C2.shift != 1:
        raise PreconditionError("both components must be cyclic")
    if math.gcd(C1.n, C2.n) != 1:
        raise PreconditionError(f"lengths {C1.n} and {C2.n} share a factor")
    if rho.spec != C1.spec:
        raise PreconditionError("rho is over the wrong field")
    if rho.degree < 1:
        raise PreconditionError("rho must be non-trivial")
    if rho.coeffs[0] != 1:
        raise PreconditionError("rho must have constant term 1")
    if not is_subcode(C1, dual(C1)):
        raise PreconditionError("C1 is not self-orthogonal")
    quot, rem = divmod(C2.h, rho)
    if not rem.is_zero:
        raise PreconditionError("rho does not divide the check polynomial of C2")
    if poly_gcd(quot, rho).degree != 0:
        raise PreconditionError("rho shares a factor with h2 / rho")
    C3 = make_code(C2.spec, C2.n, 1, (C2.g * rho).monic())
    pmap = crt_map(C1.n, C2.n)
    P = product_construct(C1, C2, pmap)
    D = product_construct(C1, C3, pmap)
    cert = assemble(dual(P), dual(D))
    N = pmap.length
    fa = _substituted(dual(C1).g, pmap.beta * C2.n, N)
    fb = _substituted(reciprocal(rho), pmap.alpha * C1.n, N)
    f_direct = poly_gcd(poly_gcd(fa, fb), xn_minus_const(C1.spec, N, 1))
    if f_direct != cert.f:
        raise InternalError("direct gcd form of f disagrees with the quotient form")
    assert cert.k == N - 2 * C1.k * C2.k
    return cert


# ---------------------------------------------------------------------------
# sufficient conditions for maximum tolerance


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of one sufficient-condition check.

    conditions holds (description, holds) pairs in a stable order.
    predicted_k follows the closed-form dimension statement for the
    family, which for the prime-power family names the two cyclic
    dimensions (k1 + k3); the attached certificate's k is computed from
    the assembled pair instead and wins whenever the two disagree.
    certificate is present only when every condition holds.
    """

    kind: str
    satisfied: bool
    conditions: tuple[tuple[str, bool], ...]
    predicted_n: int
    predicted_k: int
    predicted_tolerance: int
    certificate: QsyncCertificate | None

    def as_document(self) -> dict:
        return {
            "kind": self.kind,
            "satisfied": self.satisfied,
            "conditions": [
                {"name": name, "holds": holds} for name, holds in self.conditions
            ],
            "predicted": {
                "n": self.predicted_n,
                "k": self.predicted_k,
                "tolerance": self.predicted_tolerance,
            },
            "certificate": None
            if self.certificate is None
            else self.certificate.as_document(),
        }


def check_theorem3(
    p: int, s: int, k1: int, k2: int, k3: int, k4: int
) -> ConditionReport:
    """Maximum-tolerance conditions for prime-power component length.

    k1/k3 are the cyclic inner/outer dimensions, k2/k4 the negacyclic
    ones, all in the dual-containing range [p^s / 2, p^s].  The
    sufficient pair of conditions is k3 - k1 > p^(s-1) and k4 = k2 + 1;
    when both hold, the assembled doubled pair is attached and its
    tolerance 2 p^s is re-verified.
    """
    if not is_prime(p) or p == 2:
        raise PreconditionError("p must be an odd prime")
    if s < 1:
        raise PreconditionError("s must be >= 1")
    P = p**s
    for name, v in (("k1", k1), ("k2", k2), ("k3", k3), ("k4", k4)):
        if not (2 * v >= P and v <= P):
            raise PreconditionError(
                f"{name} = {v} violates p^s/2 <= {name} <= p^s (p^s = {P})"
            )
    conditions = (
        (f"k3 - k1 > p^(s-1) = {p ** (s - 1)}", k3 - k1 > p ** (s - 1)),
        ("k4 == k2 + 1", k4 == k2 + 1),
    )
    satisfied = all(ok for _, ok in conditions)
    cert = None
    if satisfied:
        spec = FieldSpec(p)
        cert = assemble_uv(
            gen_ps(spec, s, k1, 1),
            gen_ps(spec, s, k2, -1),
            gen_ps(spec, s, k3, 1),
            gen_ps(spec, s, k4, -1),
        )
        if cert.tolerance != 2 * P:
            raise InternalError(f"certified tolerance {cert.tolerance} != {2 * P}")
    return ConditionReport(
        kind="thm3",
        satisfied=satisfied,
        conditions=conditions,
        predicted_n=2 * P,
        predicted_k=2 * (k1 + k3 - P),
        predicted_tolerance=2 * P,
        certificate=cert,
    )


_KIND_FAMILIES = {
    "thm4": (Family.COFACTOR_EVEN_ORDER, Family.COFACTOR_ODD_ORDER),
    "thm5": (Family.COFACTOR_SPLIT,),
    "thm6": (Family.TWICE_PRIME_POWER,),
}


def _range_line(i: int, m: dict[int, int], P: int, pair_labels) -> tuple[str, bool]:
    # per-label range for self-reciprocal factors, pair-sum range for
    # the +-t factor pairs that the dual swaps
    ok = True
    for t, v in m.items():
        if pair_labels and t in pair_labels:
            continue
        ok = ok and 2 * v >= P and v <= P
    if pair_labels:
        for t in pair_labels:
            if t > 0:
                ok = ok and P <= m[t] + m[-t] <= 2 * P
        return (
            f"C{i}: dual-containing ranges (a[0] in [p^s/2, p^s], "
            "pair sums in [p^s, 2p^s])",
            ok,
        )
    return (f"C{i}: dual-containing ranges (each a in [p^s/2, p^s])", ok)


def _sum_range_line(i: int, m: dict[int, int], P: int) -> tuple[str, bool]:
    # the dual swaps the two conjugate linear factors, so only the sum
    # of their exponents is constrained
    ok = P <= m[0] + m[1] <= 2 * P
    return (f"C{i}: dual-containing range (a[0] + a[1] in [p^s, 2p^s])", ok)


def _nesting_line(inner: int, outer: int, mi: dict, mo: dict) -> tuple[str, bool]:
    ok = set(mi) == set(mo) and all(mi[t] <= mo[t] for t in mi)
    return (f"C{inner} subseteq C{outer}: labelwise a{inner} <= a{outer}", ok)


def check_theorem456(
    rr1: RepeatedRootSpec,
    rr2: RepeatedRootSpec,
    rr3: RepeatedRootSpec,
    rr4: RepeatedRootSpec,
    family: str,
) -> ConditionReport:
    """Maximum-tolerance conditions for the repeated-root families.

    rr1/rr3 describe the cyclic inner/outer codes, rr2/rr4 the
    negacyclic ones; family selects the condition set: "thm4" for the
    inert-cofactor families (w even or odd), "thm5" for the split
    cofactor, "thm6" for twice-a-prime-power length.  Reports the
    dual-containing ranges, the nesting inequalities, and the order
    condition individually, and cross-checks the predicted dimension
    and tolerance against the assembled certificate when all hold.
    """
    if family not in _KIND_FAMILIES:
        raise PreconditionError(f"unknown condition family {family!r}")
    rrs = (rr1, rr2, rr3, rr4)
    for i, rr in enumerate(rrs, 1):
        key = (rr.spec, rr.p, rr.s, rr.l, rr.family)
        if key != (rr1.spec, rr1.p, rr1.s, rr1.l, rr1.family):
            raise PreconditionError(f"C{i} disagrees with C1 on field or length")
    if rr1.family not in _KIND_FAMILIES[family]:
        raise PreconditionError(
            f"codes of family {rr1.family.value!r} do not fit {family}"
        )
    spec, p, s, l = rr1.spec, rr1.p, rr1.s, rr1.l
    P = p**s
    Ph = p ** (s - 1)
    a = {i: rr.exponent_map for i, rr in enumerate(rrs, 1)}
    n_comp = rr1.n

    if family in ("thm4", "thm5"):
        labels = tuple(sorted(a[1]))
        for i in (2, 3, 4):
            if tuple(sorted(a[i])) != labels:
                raise PreconditionError(f"C{i} uses a different label set than C1")
        if rr1.family is Family.COFACTOR_EVEN_ORDER:
            pair_labels = None
        else:
            pair_labels = tuple(t for t in labels if t != 0)
        conditions = [_range_line(i, a[i], P, pair_labels) for i in (1, 2, 3, 4)]
        conditions.append(_nesting_line(1, 3, a[1], a[3]))
        conditions.append(_nesting_line(2, 4, a[2], a[4]))
        hit = any(
            math.gcd(r, l) == 1 and a[4][r] - a[2][r] > Ph for r in labels
        )
        conditions.append(
            (f"a4[r] - a2[r] > p^(s-1) = {Ph} for some label r coprime to {l}", hit)
        )
        w = order_mod(spec.q % l, l)
        predicted_k = 2 * (
            a[1][0]
            + a[2][0]
            + w * sum(a[1][t] + a[2][t] for t in labels if t != 0)
            - n_comp
        )
    else:
        for i in (1, 3):
            if tuple(sorted(a[i])) != (0, 1):
                raise PreconditionError(f"C{i} must carry the two root labels 0, 1")
        nega_labels = (0, 1) if spec.q % 4 == 1 else (0,)
        for i in (2, 4):
            if tuple(sorted(a[i])) != nega_labels:
                raise PreconditionError(
                    f"C{i} does not fit the negacyclic factor structure mod 4"
                )
        if spec.q % 4 == 1:
            conditions = [
                _range_line(1, a[1], P, None),
                _sum_range_line(2, a[2], P),
                _range_line(3, a[3], P, None),
                _sum_range_line(4, a[4], P),
            ]
        else:
            conditions = [_range_line(i, a[i], P, None) for i in (1, 2, 3, 4)]
        conditions.append(_nesting_line(1, 3, a[1], a[3]))
        conditions.append(_nesting_line(2, 4, a[2], a[4]))
        if spec.q % 4 == 1:
            hit = any(a[4][t] - a[2][t] > Ph for t in (0, 1))
            conditions.append(
                (f"a4[t] - a2[t] > p^(s-1) = {Ph} for some t in {{0, 1}}", hit)
            )
            predicted_k = 2 * (a[1][0] + a[1][1] + a[2][0] + a[2][1] - n_comp)
        else:
            hit = a[4][0] - a[2][0] > Ph
            conditions.append((f"a4 - a2 > p^(s-1) = {Ph}", hit))
            predicted_k = 2 * (a[1][0] + a[1][1] + 2 * a[2][0] - n_comp)

    satisfied = all(ok for _, ok in conditions)
    cert = None
    if satisfied:
        cert = assemble_uv(
            generate(rr1, 1), generate(rr2, -1), generate(rr3, 1), generate(rr4, -1)
        )
        if cert.k != predicted_k:
            raise InternalError(
                f"certified dimension {cert.k} != predicted {predicted_k}"
            )
        if cert.tolerance != 2 * n_comp:
            raise InternalError(
                f"certified tolerance {cert.tolerance} != {2 * n_comp}"
            )
    return ConditionReport(
        kind=family,
        satisfied=satisfied,
        conditions=tuple(conditions),
        predicted_n=2 * n_comp,
        predicted_k=predicted_k,
        predicted_tolerance=2 * n_comp,
        certificate=cert,
    )
