"""Splitting fields as finite stand-ins for an algebraic closure, and the
enumeration, restriction, and extension of field embeddings.

An embedding E -> N is stored as the tuple of images of E's tower
generators; each image is a root in N of the stage minimal polynomial
with the previous images substituted into its coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import ContextTooSmallError, FieldMismatchError
from .factor import (DEFAULT_HEIGHT_BOUND, _element_sort_key,
                     distinct_root_count, factor, roots_in)
from .poly import Poly
from .towers import (ExtensionField, Subfield, base_subfield, is_ancestor,
                     lift, lift_poly, minimal_polynomial, tower_stages)


class Embedding:
    """A base-fixing field homomorphism from a tower E into N."""

    __slots__ = ("domain", "codomain", "images")

    def __init__(self, domain, codomain, images):
        self.domain = domain
        self.codomain = codomain
        self.images = tuple(images)

    def apply(self, a):
        """Image of an element of (a stage of) the domain tower."""
        if not is_ancestor(a.field, self.domain):
            raise FieldMismatchError(f"{a.field} is not a stage of {self.domain}")
        stages = [s for s in tower_stages(self.domain) if s.kind == "extension"]
        image_of = dict(zip((id(s) for s in stages), self.images))
        return _apply_images(image_of, a, self.codomain)

    def __call__(self, a):
        return self.apply(a)

    def compose(self, inner):
        """self o inner; inner's codomain must be self's domain."""
        if inner.codomain != self.domain:
            raise FieldMismatchError("embeddings do not compose")
        return Embedding(inner.domain, self.codomain,
                         [self.apply(img) for img in inner.images])

    def __eq__(self, other):
        return (isinstance(other, Embedding) and other.domain == self.domain
                and other.codomain == self.codomain
                and other.images == self.images)

    def __hash__(self):
        return hash(tuple(img.rep for img in self.images))

    def sort_key(self):
        return tuple(_element_sort_key(img) for img in self.images)

    def __repr__(self):
        stages = [s for s in tower_stages(self.domain) if s.kind == "extension"]
        parts = [f"{s.gen_name} -> {img!r}" for s, img in zip(stages, self.images)]
        return "Embedding(" + ", ".join(parts) + ")"


def _apply_images(image_of, a, N):
    f = a.field
    if f.kind != "extension":
        return lift(a, N)
    img = image_of[id(f)]
    acc = N.zero
    power = N.one
    for coord in a.rep:
        c = _apply_images(image_of, _as_element(f.parent, coord), N)
        acc = acc + c * power
        power = power * img
    return acc


def _as_element(field, rep):
    from .basefields import FieldElement
    return FieldElement(field, rep)


def identity_embedding(E, N):
    """The inclusion of E into an extension tower N of E."""
    if not is_ancestor(E, N):
        raise FieldMismatchError(f"{E} is not a stage of {N}")
    stages = [s for s in tower_stages(E) if s.kind == "extension"]
    return Embedding(E, N, [lift(s.generator, N) for s in stages])


@dataclass
class SplittingContext:
    """A finite extension N large enough for the embedding queries at hand."""

    N: object
    height_bound: int = DEFAULT_HEIGHT_BOUND
    tracked_roots: dict = dc_field(default_factory=dict)
    _root_cache: dict = dc_field(default_factory=dict)

    @property
    def degree(self):
        return self.N.absolute_degree

    def roots_of(self, f):
        """All roots of f in N, required to be the full root set of f.

        Raises ContextTooSmallError when N holds fewer roots than f has
        in the algebraic closure.
        """
        f = lift_poly(f, self.N) if f.field != self.N else f
        key = f.coeffs
        if key in self._root_cache:
            return self._root_cache[key]
        expected = distinct_root_count(f)
        roots = roots_in(f, self.N, height_bound=self.height_bound)
        if len(roots) < expected:
            raise ContextTooSmallError(
                f"only {len(roots)} of {expected} roots of {f!r} found in "
                f"{self.N!r} (context too small or height bound "
                f"{self.height_bound} too low)")
        roots = sorted(roots, key=_element_sort_key)
        self._root_cache[key] = roots
        return roots


def _dedupe_sorted(elems):
    out = []
    for e in sorted(elems, key=_element_sort_key):
        if not out or out[-1] != e:
            out.append(e)
    return out


def _split_completely(f, N, counter, prefix, height_bound):
    """Extend N until f splits into linear factors; collect f's roots.

    After each extension the fresh generator is peeled out of the factor
    it was adjoined for, so the expensive refactoring happens on degrees
    that shrink by one each round, never on the whole tower from scratch.
    """
    fac = factor(lift_poly(f, N) if f.field != N else f,
                 height_bound=height_bound)
    roots = [-q.coefficient(0) for q, _m in fac.factors if q.degree == 1]
    pending = [q for q, _m in fac.factors if q.degree > 1]
    while pending:
        q = pending.pop(0)
        counter += 1
        N = ExtensionField(N, f"{prefix}{counter}", q, _certified=True)
        roots = [lift(r, N) for r in roots]
        pending = [lift_poly(g, N) for g in pending]
        roots.append(N.generator)
        quot = lift_poly(q, N) // Poly(N, [-N.generator, N.one])
        if quot.degree > 0:
            sub = factor(quot, height_bound=height_bound)
            roots.extend(-g.coefficient(0) for g, _m in sub.factors
                         if g.degree == 1)
            pending.extend(g for g, _m in sub.factors if g.degree > 1)
    return N, counter, _dedupe_sorted(roots)


def splitting_field(f, K, height_bound=DEFAULT_HEIGHT_BOUND):
    """Adjoin roots of f until it factors into linear factors over N."""
    N, _counter, roots = _split_completely(f, K, 0, "r", height_bound)
    ctx = SplittingContext(N, height_bound=height_bound)
    fN = lift_poly(f, N) if f.field != N else f
    ctx._root_cache[fN.coeffs] = roots
    ctx.tracked_roots[f.coeffs] = roots
    return ctx


def normal_closure_context(E, height_bound=DEFAULT_HEIGHT_BOUND):
    """A context whose field N extends E and splits every stage minpoly of E."""
    defining = []
    for stage in tower_stages(E):
        if stage.kind != "extension":
            continue
        g = lift(stage.generator, E)
        defining.append(minimal_polynomial(g))
    N = E
    counter = 0
    collected = []
    for fk in defining:
        N, counter, roots = _split_completely(fk, N, counter, "n", height_bound)
        collected.append(roots)
    ctx = SplittingContext(N, height_bound=height_bound)
    for fk, roots in zip(defining, collected):
        roots = _dedupe_sorted(lift(r, N) for r in roots)
        ctx._root_cache[lift_poly(fk, N).coeffs] = roots
        ctx.tracked_roots[fk.coeffs] = roots
    return ctx


def _stage_roots(E, stage, image_of, ctx):
    """Roots in N of the stage minpoly with its coefficients mapped by a
    partial embedding.

    The mapped minpoly divides the absolute minpoly of the stage generator
    (conjugation fixes the base), so its roots are found by filtering that
    polynomial's cached root pool instead of factoring over N.
    """
    N = ctx.N
    m_img = Poly(N, [_apply_images(image_of, c, N)
                     for c in stage.minpoly.coeffs])
    m_abs = minimal_polynomial(lift(stage.generator, E))
    pool = ctx.roots_of(m_abs)
    roots = [r for r in pool if m_img.eval(r).is_zero()]
    if len(roots) < m_img.degree:
        expected = distinct_root_count(m_img)
        if len(roots) < expected:
            raise ContextTooSmallError(
                f"only {len(roots)} of {expected} roots of a conjugated "
                f"stage minpoly lie in {N!r}")
    return roots


def hom_set(E, L, ctx):
    """All L-algebra homomorphisms E -> ctx.N, in deterministic order.

    L is a Subfield of E (use base_subfield(E) for Hom_K); built stage by
    stage by chasing roots of stage minpolys, then filtered to the maps
    fixing L pointwise.
    """
    N = ctx.N
    if not is_ancestor(E, N):
        raise FieldMismatchError("context field does not extend the domain")
    stages = [s for s in tower_stages(E) if s.kind == "extension"]
    partials = [()]
    for stage in stages:
        new = []
        for partial in partials:
            image_of = dict(zip((id(s) for s in stages), partial))
            for r in _stage_roots(E, stage, image_of, ctx):
                new.append(partial + (r,))
        partials = new
    maps = [Embedding(E, N, images) for images in partials]
    if L is not None:
        maps = [phi for phi in maps if _fixes(phi, L, N)]
    maps.sort(key=Embedding.sort_key)
    return maps


def _fixes(phi, L, N):
    return all(phi.apply(b) == lift(b, N) for b in L.basis)


def agree_on(phi, psi, L):
    """True iff phi and psi coincide on the subfield L (checked on its basis)."""
    if phi.domain != psi.domain or phi.codomain != psi.codomain:
        raise FieldMismatchError("embeddings with different (co)domains")
    return all(phi.apply(b) == psi.apply(b) for b in L.basis)


def extend_embedding(phi, stage, ctx):
    """All extensions of phi: F -> N to the single stage F(beta) over F."""
    if stage.parent != phi.domain:
        raise FieldMismatchError("stage does not sit directly above the domain")
    N = ctx.N
    stages = [s for s in tower_stages(stage) if s.kind == "extension"]
    image_of = dict(zip((id(s) for s in stages), phi.images))
    out = [Embedding(stage, N, phi.images + (r,))
           for r in _stage_roots(stage, stage, image_of, ctx)]
    out.sort(key=Embedding.sort_key)
    return out


@dataclass
class TowerAudit:
    hom_K_E: int
    hom_L_E: int
    hom_K_L: int
    degree: int

    @property
    def formula_holds(self):
        return self.hom_K_E == self.hom_L_E * self.hom_K_L

    @property
    def bounded_by_degree(self):
        return self.hom_K_E <= self.degree


def count_hom(E, L, ctx):
    """|Hom_L(E, N)|."""
    return len(hom_set(E, L, ctx))


def tower_audit(E, L, ctx):
    """Check |Hom_K(E)| = |Hom_L(E)| * |Hom_K(L)| by independent enumeration.

    Hom_K(L) is enumerated as the distinct restrictions to L of Hom_K(E);
    by the extension theorem every embedding of L arises this way.
    """
    K = base_subfield(E)
    all_maps = hom_set(E, K, ctx)
    hom_L_E = len(hom_set(E, L, ctx))
    restrictions = set()
    for phi in all_maps:
        restrictions.add(tuple(phi.apply(b).rep for b in L.basis))
    return TowerAudit(hom_K_E=len(all_maps), hom_L_E=hom_L_E,
                      hom_K_L=len(restrictions), degree=E.absolute_degree)
