"""Separability criteria, separation witnesses, separable closure,
primitive elements, transitivity, and the determinant criterion.

Three routes to the same verdict are implemented and cross-checked:
the derivative/distinct-roots criterion on the minimal polynomial, the
separation-witness criterion (two homomorphisms disagreeing on the
element over every intermediate subfield not containing it), and the
embedding-count criterion |Hom_K(E, N)| = [E : K].
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from .embeddings import agree_on, count_hom, hom_set
from .errors import CapabilityError, InputError, PropertyViolation
from .factor import distinct_root_count, separable_decompose
from .lattice import subfields_separable
from .linalg import SpanBuilder, determinant
from .towers import (Subfield, base_subfield, flatten, lift, make_extension,
                     minimal_polynomial, tower_stages)


@dataclass
class SeparabilityReport:
    subject: str
    degree: int
    separable: bool
    exponent: int = 0                   # e with minpoly = g(x^{p^e})
    hom_count: int = None
    criteria: dict = dc_field(default_factory=dict)
    witness_pair: tuple = None          # (phi, psi, L)
    canonical_witness: object = None    # Subfield K(alpha^{p^e})
    notes: list = dc_field(default_factory=list)


# ---------------------------------------------------------------------------
# criterion (i): distinct roots of the minimal polynomial


def is_separable_element(alpha, report_subject=None):
    """Derivative/distinct-roots criterion on the minimal polynomial."""
    mp = minimal_polynomial(alpha)
    dec = separable_decompose(mp)
    n_roots = distinct_root_count(mp)
    separable = n_roots == mp.degree
    if separable != (dec.e == 0):
        raise PropertyViolation(
            "distinct-root count disagrees with the decomposition exponent")
    return SeparabilityReport(
        subject=report_subject or repr(alpha),
        degree=mp.degree,
        separable=separable,
        exponent=dec.e,
        criteria={"derivative": separable},
    )


# ---------------------------------------------------------------------------
# separation witnesses


def separation_witness(alpha, L, E, ctx):
    """A pair of L-algebra homomorphisms E -> N separated by alpha, or None.

    Requires alpha in E \\ L; the search over pairs is exhaustive.
    """
    alpha = E.element(alpha)
    if L.contains(alpha):
        raise InputError("the element lies in L; a witness needs alpha outside L")
    maps = hom_set(E, L, ctx)
    for phi, psi in itertools.combinations(maps, 2):
        if phi.apply(alpha) != psi.apply(alpha):
            return phi, psi
    return None


def canonical_inseparable_witness(alpha, E, ctx=None):
    """The subfield L = K(alpha^{p^e}) over which no pair separates alpha.

    Validates alpha not in L and, when a context is supplied, that every
    pair of L-algebra homomorphisms agrees on alpha.
    """
    alpha = E.element(alpha)
    mp = minimal_polynomial(alpha)
    dec = separable_decompose(mp)
    if dec.e == 0:
        raise InputError("canonical witness exists only for inseparable elements")
    p = E.characteristic
    L = Subfield(E, [alpha ** (p ** dec.e)])
    if L.contains(alpha):
        raise PropertyViolation(
            "alpha lies in K(alpha^{p^e}); it would satisfy a smaller polynomial")
    if ctx is not None:
        maps = hom_set(E, L, ctx)
        for phi, psi in itertools.combinations(maps, 2):
            if phi.apply(alpha) != psi.apply(alpha):
                raise PropertyViolation(
                    "a pair over the canonical witness separates alpha")
    return L


def _subfields_of_simple_part(alpha, E, ctx, lattice=None):
    """Proper intermediate subfields of K(alpha)/K, as subfields of E.

    Uses a complete lattice of E when one is supplied; otherwise prime
    degrees need only K, and composite degrees go through a standalone
    copy of K(alpha) and its Galois lattice.
    """
    Kalpha = Subfield(E, [alpha])
    d = Kalpha.dim
    if d == 1:
        return []
    if lattice is not None and lattice.completeness == "complete":
        out = []
        for L in lattice.nodes:
            if L.contains(alpha):
                continue
            if all(Kalpha.contains(b) for b in L.basis):
                out.append(L)
        return out
    if _is_prime(d):
        return [base_subfield(E)]
    mp = minimal_polynomial(alpha)
    handle = make_extension(mp.field, mp, "c")
    from .embeddings import normal_closure_context
    sub_ctx = normal_closure_context(handle, height_bound=ctx.height_bound)
    inner = subfields_separable(handle, sub_ctx)
    out = []
    for node in inner.nodes:
        gens = []
        for b in node.basis:
            coords = flatten(b)
            g = E.zero
            power = E.one
            for c in coords:
                g = g + lift(c, E) * power
                power = power * alpha
            gens.append(g)
        L = Subfield(E, gens)
        if not L.contains(alpha):
            out.append(L)
    return out


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def is_separable_element_by_witness(alpha, E, ctx, lattice=None):
    """Criterion (ii) via the (iii) reduction: quantify over K(alpha)/K only.

    Inseparable elements are certified by the canonical witness subfield;
    separable ones by exhibiting a separating pair over every proper
    intermediate subfield of K(alpha)/K.
    """
    alpha = E.element(alpha)
    mp = minimal_polynomial(alpha)
    dec = separable_decompose(mp)
    report = SeparabilityReport(
        subject=repr(alpha), degree=mp.degree, separable=False,
        exponent=dec.e, criteria={})
    if dec.e >= 1:
        L = canonical_inseparable_witness(alpha, E, ctx)
        report.separable = False
        report.canonical_witness = L
        report.criteria["witness"] = False
        return report
    for L in _subfields_of_simple_part(alpha, E, ctx, lattice):
        pair = separation_witness(alpha, L, E, ctx)
        if pair is None:
            report.separable = False
            report.criteria["witness"] = False
            report.notes.append("no separating pair over a proper subfield")
            return report
        report.witness_pair = (pair[0], pair[1], L)
    report.separable = True
    report.criteria["witness"] = True
    return report


# ---------------------------------------------------------------------------
# hom-count criteria


def hom_count_criterion(E, ctx):
    """Separable iff |Hom_K(E, N)| = [E : K]."""
    n = E.absolute_degree
    count = count_hom(E, base_subfield(E), ctx)
    if count > n:
        raise PropertyViolation("embedding count exceeds the degree")
    separable = count == n
    return SeparabilityReport(
        subject=repr(E), degree=n, separable=separable,
        hom_count=count, criteria={"hom_count": separable})


def hom_gt1_criterion(E, ctx, lattice):
    """Separable iff every proper intermediate subfield has |Hom_L(E, N)| > 1.

    A single failing subfield certifies inseparability even from a
    sound-only lattice; certifying separability needs a complete one.
    """
    counts = []
    for L in lattice.proper_nodes():
        c = count_hom(E, L, ctx)
        counts.append((L, c))
        if c <= 1:
            return False, counts
    if lattice.completeness != "complete":
        raise CapabilityError(
            "cannot certify separability from an incomplete subfield lattice")
    return True, counts


# ---------------------------------------------------------------------------
# corollaries


@dataclass
class L1L2Result:
    containment: bool
    implication: bool

    @property
    def equivalent(self):
        return self.containment == self.implication


def l1l2_check(L1, L2, E, ctx):
    """Containment L1 <= L2 versus the restriction implication.

    implication: phi|L2 = psi|L2 forces phi|L1 = psi|L1, quantified
    exhaustively over Hom_K(E, N) pairs.
    """
    containment = all(L2.contains(b) for b in L1.basis)
    maps = hom_set(E, base_subfield(E), ctx)
    implication = True
    for phi, psi in itertools.combinations(maps, 2):
        if agree_on(phi, psi, L2) and not agree_on(phi, psi, L1):
            implication = False
            break
    return L1L2Result(containment=containment, implication=implication)


@dataclass
class MembershipResult:
    by_embeddings: bool
    by_span: bool

    def __bool__(self):
        return self.by_embeddings

    @property
    def consistent(self):
        return self.by_embeddings == self.by_span


def membership_by_embeddings(alpha, beta, E, ctx):
    """alpha in K(beta) tested two ways: pair quantification and linear algebra.

    Valid for separable E/K only (checked); the two answers must agree.
    """
    alpha = E.element(alpha)
    beta = E.element(beta)
    if count_hom(E, base_subfield(E), ctx) != E.absolute_degree:
        raise InputError("membership-by-embeddings requires a separable extension")
    maps = hom_set(E, base_subfield(E), ctx)
    by_emb = True
    for phi, psi in itertools.combinations(maps, 2):
        if phi.apply(beta) == psi.apply(beta) and \
                phi.apply(alpha) != psi.apply(alpha):
            by_emb = False
            break
    by_span = Subfield(E, [beta]).contains(alpha)
    result = MembershipResult(by_embeddings=by_emb, by_span=by_span)
    if not result.consistent:
        raise PropertyViolation(
            "embedding-pair membership disagrees with the span test")
    return result


# ---------------------------------------------------------------------------
# separable closure


@dataclass
class ClosureResult:
    closure: object            # Subfield of E
    separable_degree: int      # [closure : K]
    inseparable_degree: int    # [E : closure], a power of p


def separable_closure(E, ctx=None):
    """The intermediate field of all elements separable over the base.

    For a simple stage with minpoly g(x^{p^e}) the closure is generated
    by alpha^{p^e}; towers are handled stage by stage, and the result is
    certified against the embedding count when a context is available.
    """
    n = E.absolute_degree
    stages = [s for s in tower_stages(E) if s.kind == "extension"]
    p = E.characteristic
    gens = []
    for stage in stages:
        beta = lift(stage.generator, E)
        dec = separable_decompose(minimal_polynomial(beta))
        gens.append(beta ** (p ** dec.e))
    closure = Subfield(E, gens, label="separable closure")
    sep_deg = closure.dim
    insep = n // sep_deg
    if sep_deg * insep != n:
        raise CapabilityError("closure dimension does not divide the degree")
    m = insep
    while m > 1:
        if m % p:
            raise CapabilityError(
                "[E : closure] is not a p-power; unsupported tower shape")
        m //= p
    for b in closure.basis:
        if not is_separable_element(b).separable:
            raise CapabilityError(
                "stage-wise closure contains an inseparable element")
    if ctx is not None:
        count = count_hom(E, base_subfield(E), ctx)
        if count != sep_deg:
            raise CapabilityError(
                f"closure degree {sep_deg} does not match the separable "
                f"degree |Hom| = {count}")
    return ClosureResult(closure=closure, separable_degree=sep_deg,
                         inseparable_degree=insep)


# ---------------------------------------------------------------------------
# primitive element


@dataclass
class PrimitiveSearchPlan:
    """The candidate line gamma = alpha + c*beta through the proof's plane."""

    alpha: object
    beta: object
    candidates: list


def _prime_divisors(n):
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


def primitive_element(E, ctx, max_candidates=None):
    """A single generator of a separable finite-degree extension.

    Finite fields: first element escaping every maximal subfield, via the
    divisor test gamma^(q^(n/l)) != gamma for each prime l | n.  Infinite
    base: pairwise reduction along the candidate line alpha + c*beta with
    deterministic scalars; more than [E:K]^2 candidates guarantee a hit.
    """
    n = E.absolute_degree
    if count_hom(E, base_subfield(E), ctx) != n:
        raise InputError("primitive elements are computed for separable input")
    base = E.base
    if n == 1:
        return E.element(1)
    if base.kind == "prime":
        q = base.p
        primes = _prime_divisors(n)
        from .towers import iter_elements
        for gamma in iter_elements(E):
            if gamma.is_zero():
                continue
            if all(gamma ** (q ** (n // ell)) != gamma for ell in primes):
                _verify_primitive(gamma, n)
                return gamma
        raise PropertyViolation("no generator found in a finite field scan")
    stages = [s for s in tower_stages(E) if s.kind == "extension"]
    gens = [lift(s.generator, E) for s in stages]
    gamma = gens[0]
    limit = max_candidates if max_candidates is not None else n * n + 1
    for beta in gens[1:]:
        target = Subfield(E, [gamma, beta]).dim
        plan = PrimitiveSearchPlan(
            alpha=gamma, beta=beta,
            candidates=[base.scalar_by_index(k) for k in range(limit)])
        gamma = _combine_pair(plan, target)
    _verify_primitive(gamma, n)
    return gamma


def _combine_pair(plan, target_degree):
    for c in plan.candidates:
        cand = plan.alpha + lift_scalar(c, plan.alpha.field) * plan.beta
        if minimal_polynomial(cand).degree == target_degree:
            return cand
    raise PropertyViolation(
        "candidate exhaustion in the primitive-element search")


def lift_scalar(c, field):
    return lift(c, field) if field.kind == "extension" else field.element(c)


def _verify_primitive(gamma, n):
    if minimal_polynomial(gamma).degree != n:
        raise PropertyViolation("generator fails the degree postcondition")


# ---------------------------------------------------------------------------
# transitivity and the determinant criterion


@dataclass
class TransitivityReport:
    lower_separable: bool      # L/K
    upper_separable: bool      # E/L
    total_separable: bool      # E/K
    hom_counts: tuple          # (|Hom_K(L)|, |Hom_L(E)|, |Hom_K(E)|)

    @property
    def implication_holds(self):
        if self.lower_separable and self.upper_separable:
            return self.total_separable
        return True


def transitivity_check(E, L, ctx):
    """Verdicts for E/L, L/K, E/K with the transitivity implication asserted.

    L is a Subfield of E.
    """
    n = E.absolute_degree
    dim_l = L.dim
    if n % dim_l:
        raise PropertyViolation("subfield dimension does not divide the degree")
    maps = hom_set(E, base_subfield(E), ctx)
    hom_K_E = len(maps)
    hom_L_E = len(hom_set(E, L, ctx))
    restrictions = {tuple(phi.apply(b).rep for b in L.basis) for phi in maps}
    hom_K_L = len(restrictions)
    report = TransitivityReport(
        lower_separable=hom_K_L == dim_l,
        upper_separable=hom_L_E == n // dim_l,
        total_separable=hom_K_E == n,
        hom_counts=(hom_K_L, hom_L_E, hom_K_E))
    if not report.implication_holds:
        raise PropertyViolation("transitivity of separability failed")
    return report


def det_criterion(elements, E, ctx):
    """Bourbaki determinant criterion: some n embeddings give det(s_i(a_j)) != 0.

    The input list must be linearly independent over the base (checked).
    """
    elements = [E.element(a) for a in elements]
    base = E.base
    n = E.absolute_degree
    sb = SpanBuilder(base, n)
    for a in elements:
        if not sb.add(flatten(a)):
            raise InputError("input elements are linearly dependent over the base")
    maps = hom_set(E, base_subfield(E), ctx)
    k = len(elements)
    if len(maps) < k:
        return False
    N = ctx.N
    for subset in itertools.combinations(maps, k):
        rows = [[sigma.apply(a) for a in elements] for sigma in subset]
        if not determinant(N, rows).is_zero():
            return True
    return False
