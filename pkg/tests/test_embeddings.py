"""Splitting contexts, embedding enumeration, restriction, and extension."""

import pytest

from fieldsep.embeddings import (Embedding, SplittingContext, agree_on,
                                 count_hom, extend_embedding, hom_set,
                                 identity_embedding, normal_closure_context,
                                 splitting_field, tower_audit)
from fieldsep.errors import (ContextTooSmallError, FieldMismatchError,
                             InputError)
from fieldsep.parse import parse_poly, parse_tower
from fieldsep.basefields import PrimeField, RationalFunctionField
from fieldsep.towers import (Subfield, base_subfield, lift, lift_poly,
                             minimal_polynomial, poly_eval, tower_stages)


def test_splitting_field_finite():
    F2 = PrimeField(2)
    ctx = splitting_field(parse_poly("x^3 + x + 1", F2), F2)
    assert ctx.degree == 3
    f = parse_poly("x^3 + x + 1", F2)
    roots = ctx.roots_of(f)
    assert len(roots) == 3
    fN = lift_poly(f, ctx.N)
    assert all(fN.eval(r).is_zero() for r in roots)


def test_splitting_field_ratfunc():
    K = RationalFunctionField(3)
    f = parse_poly("x^2 + 2*t", K)
    ctx = splitting_field(f, K)
    assert ctx.degree == 2
    roots = ctx.roots_of(f)
    assert len(roots) == 2
    assert roots[0] == -roots[1]


def test_roots_of_caches_and_checks():
    K = RationalFunctionField(2)
    f = parse_poly("x^2 + t", K)  # one distinct root (inseparable)
    ctx = splitting_field(f, K)
    roots = ctx.roots_of(f)
    assert len(roots) == 1
    assert ctx.roots_of(f) is roots  # cached list is reused


def test_context_too_small():
    # x^3 - t over F_5(t): only one cube root lives in K(gamma)
    spec = parse_tower("base FpT 5\ngen g : x^3 + 4*t\n")
    E = spec.field
    ctx = SplittingContext(E)
    f = lift_poly(parse_poly("x^3 + 4*t", E.base), E)
    with pytest.raises(ContextTooSmallError):
        ctx.roots_of(f)


def test_identity_embedding_and_apply():
    spec = parse_tower("base Fp 2\ngen w : x^2 + x + 1\ngen v : x^2 + x + w\n")
    E = spec.field
    phi = identity_embedding(E, E)
    v = spec.element("v")
    w = spec.element("w")
    assert phi.apply(v) == v
    assert phi(v * w + 1) == v * w + 1
    # applying to an element of an inner stage works too
    assert phi.apply(E.parent.generator) == w
    with pytest.raises(FieldMismatchError):
        phi.apply(PrimeField(3).one)


def test_hom_set_biquadratic_is_klein_group(contexts, corpus):
    spec = corpus["biquadratic_p3"]
    E = spec.field
    ctx = contexts("biquadratic_p3")
    maps = hom_set(E, base_subfield(E), ctx)
    assert len(maps) == 4
    assert maps == sorted(maps, key=Embedding.sort_key)
    # every map is an involution and the set is closed under composition
    ident = identity_embedding(E, ctx.N)
    assert ident in maps
    for phi in maps:
        assert phi.compose(phi) == ident
    s = lift(E.parent.generator, E)
    images = sorted(repr(phi.apply(s)) for phi in maps)
    assert images == ["2*s", "2*s", "s", "s"]


def test_hom_set_respects_the_fixed_subfield(contexts, corpus):
    spec = corpus["biquadratic_p3"]
    E = spec.field
    ctx = contexts("biquadratic_p3")
    s = lift(E.parent.generator, E)
    L = Subfield(E, [s])
    maps = hom_set(E, L, ctx)
    assert len(maps) == 2
    assert all(phi.apply(s) == lift(s, ctx.N) for phi in maps)


def test_extend_embedding_counts(contexts, corpus):
    spec = corpus["biquadratic_p3"]
    E = spec.field
    ctx = contexts("biquadratic_p3")
    P = E.parent
    lower = hom_set(P, base_subfield(P), ctx)
    assert len(lower) == 2
    total = []
    for phi in lower:
        total.extend(extend_embedding(phi, E, ctx))
    assert len(total) == 4
    assert sorted(total, key=Embedding.sort_key) == \
        hom_set(E, base_subfield(E), ctx)
    with pytest.raises(FieldMismatchError):
        extend_embedding(lower[0], P, ctx)


def test_agree_on(contexts, corpus):
    spec = corpus["biquadratic_p3"]
    E = spec.field
    ctx = contexts("biquadratic_p3")
    maps = hom_set(E, base_subfield(E), ctx)
    K = base_subfield(E)
    s = lift(E.parent.generator, E)
    L = Subfield(E, [s])
    for phi in maps:
        assert agree_on(phi, phi, L)
        assert agree_on(phi, maps[0], K)  # everything fixes K
    disagree = [psi for psi in maps if not agree_on(maps[0], psi, L)]
    assert len(disagree) == 2


def test_normal_closure_inseparable(contexts, corpus):
    spec = corpus["sqrt_t_p2"]
    E = spec.field
    ctx = contexts("sqrt_t_p2")
    assert ctx.N is E  # x^2 + t already splits as (x + s)^2
    assert count_hom(E, base_subfield(E), ctx) == 1


def test_normal_closure_grows_when_needed():
    spec = parse_tower("base Fp 2\ngen c : x^3 + x + 1\n")
    E = spec.field
    ctx = normal_closure_context(E)
    # GF(8) is normal over F_2, so no growth is needed
    assert ctx.N is E
    assert count_hom(E, base_subfield(E), ctx) == 3
    # a non-normal cubic over F_5(t) needs a genuine closure
    spec2 = parse_tower("base FpT 5\ngen g : x^3 + 4*t\n")
    E2 = spec2.field
    ctx2 = normal_closure_context(E2)
    assert ctx2.N.absolute_degree > 3
    assert count_hom(E2, base_subfield(E2), ctx2) == 3


def test_tower_audit(contexts, corpus):
    spec = corpus["gf64_tower"]
    E = spec.field
    ctx = contexts("gf64_tower")
    w = lift(E.parent.generator, E)
    audit = tower_audit(E, Subfield(E, [w]), ctx)
    assert audit.formula_holds
    assert audit.bounded_by_degree
    assert audit.hom_K_E == 6
    assert (audit.hom_L_E, audit.hom_K_L) == (3, 2)


def test_embedding_images_are_conjugate_roots(contexts, corpus):
    spec = corpus["gf729"]
    E = spec.field
    ctx = contexts("gf729")
    maps = hom_set(E, base_subfield(E), ctx)
    assert len(maps) == 6
    stages = [s for s in tower_stages(E) if s.kind == "extension"]
    for phi in maps:
        for stage, img in zip(stages, phi.images):
            m = minimal_polynomial(lift(stage.generator, E))
            assert poly_eval(m, img).is_zero()
