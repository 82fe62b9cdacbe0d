"""Separability criteria, witnesses, closure, primitive elements, and the
corollaries built on embedding counts."""

import pytest

from fieldsep.embeddings import hom_set
from fieldsep.errors import CapabilityError, InputError, PropertyViolation
from fieldsep.lattice import SubfieldLattice, subfields_finite
from fieldsep.separability import (canonical_inseparable_witness, det_criterion,
                                   hom_count_criterion, hom_gt1_criterion,
                                   is_separable_element,
                                   is_separable_element_by_witness, l1l2_check,
                                   membership_by_embeddings, primitive_element,
                                   separable_closure, separation_witness,
                                   transitivity_check)
from fieldsep.towers import (Subfield, base_subfield, lift,
                             minimal_polynomial)


def gens(E):
    from fieldsep.towers import tower_stages
    return [lift(s.generator, E) for s in tower_stages(E)
            if s.kind == "extension"]


# -- element criteria ---------------------------------------------------------


def test_derivative_criterion(corpus):
    w = corpus["gf16"].element("w")
    rep = is_separable_element(w, report_subject="w")
    assert rep.separable and rep.exponent == 0 and rep.degree == 2
    assert rep.subject == "w" and rep.criteria == {"derivative": True}

    s = corpus["sqrt_t_p2"].element("s")
    rep = is_separable_element(s)
    assert not rep.separable and rep.exponent == 1 and rep.degree == 2

    b = corpus["quartic_t_p2"].element("b")  # b = a^2, minpoly x^2 + t
    rep = is_separable_element(b)
    assert not rep.separable and rep.exponent == 1


def test_separation_witness_found(corpus, contexts):
    spec = corpus["gf4"]
    E = spec.field
    ctx = contexts("gf4")
    w = spec.element("w")
    pair = separation_witness(w, base_subfield(E), E, ctx)
    assert pair is not None
    phi, psi = pair
    assert phi.apply(w) != psi.apply(w)
    with pytest.raises(InputError):
        separation_witness(E.one, base_subfield(E), E, ctx)


def test_canonical_witness(corpus, contexts):
    spec = corpus["sqrt_t_p2"]
    E = spec.field
    ctx = contexts("sqrt_t_p2")
    s = spec.element("s")
    L = canonical_inseparable_witness(s, E, ctx)
    assert L.dim == 1                      # s^2 = t lands in the base
    assert not L.contains(s)
    assert separation_witness(s, L, E, ctx) is None
    with pytest.raises(InputError):
        canonical_inseparable_witness(corpus["gf4"].element("w"),
                                      corpus["gf4"].field)


def test_witness_criterion_agrees(corpus, contexts):
    for name, elem in (("gf16", "a"), ("sqrt_t_p3", "a"), ("sqrt_t_p2", "a"),
                       ("mixed_p2", "c")):
        spec = corpus[name]
        E = spec.field
        ctx = contexts(name)
        alpha = spec.element(elem)
        rep = is_separable_element_by_witness(alpha, E, ctx)
        assert rep.separable == is_separable_element(alpha).separable
        if rep.separable:
            assert rep.criteria["witness"] is True
        else:
            assert rep.canonical_witness is not None


# -- hom-count criteria -------------------------------------------------------


def test_hom_count_criterion(corpus, contexts):
    expected = {"gf16": (4, True), "sqrt_t_p2": (1, False),
                "mixed_p2": (2, False), "biquadratic_p3": (4, True),
                "insep_tower_p2": (1, False), "trans_tower_p3": (4, True)}
    for name, (count, verdict) in expected.items():
        rep = hom_count_criterion(corpus[name].field, contexts(name))
        assert (rep.hom_count, rep.separable) == (count, verdict), name


def test_hom_gt1_criterion(corpus, contexts):
    spec = corpus["sqrt_t_p2"]
    E = spec.field
    ctx = contexts("sqrt_t_p2")
    lattice = SubfieldLattice(E, [base_subfield(E)], "sound_only")
    ok, counts = hom_gt1_criterion(E, ctx, lattice)
    assert not ok
    assert counts[-1][1] == 1              # the failure is at L = K
    # certifying separability demands a complete lattice
    spec2 = corpus["gf4"]
    E2 = spec2.field
    incomplete = SubfieldLattice(E2, [base_subfield(E2)], "sound_only")
    with pytest.raises(CapabilityError):
        hom_gt1_criterion(E2, contexts("gf4"), incomplete)
    ok2, _counts = hom_gt1_criterion(E2, contexts("gf4"),
                                     subfields_finite(E2))
    assert ok2


# -- corollaries --------------------------------------------------------------


def test_l1l2_basic(corpus, contexts):
    spec = corpus["biquadratic_p3"]
    E = spec.field
    ctx = contexts("biquadratic_p3")
    s = spec.element("s")
    u = spec.element("u")
    K = base_subfield(E)
    assert l1l2_check(K, Subfield(E, [s]), E, ctx).equivalent
    assert l1l2_check(Subfield(E, [s]), Subfield(E, [s]), E, ctx).equivalent
    r = l1l2_check(Subfield(E, [s]), Subfield(E, [u]), E, ctx)
    assert not r.containment and not r.implication and r.equivalent


def test_membership_by_embeddings(corpus, contexts):
    spec = corpus["biquadratic_p3"]
    E = spec.field
    ctx = contexts("biquadratic_p3")
    s = spec.element("s")
    u = spec.element("u")
    assert membership_by_embeddings(s, s + u, E, ctx)      # K(s+u) = E
    r = membership_by_embeddings(s, u, E, ctx)
    assert not r.by_embeddings and r.consistent
    with pytest.raises(InputError):
        membership_by_embeddings(corpus["sqrt_t_p2"].element("s"),
                                 corpus["sqrt_t_p2"].element("s"),
                                 corpus["sqrt_t_p2"].field,
                                 contexts("sqrt_t_p2"))


# -- closure ------------------------------------------------------------------


def test_separable_closure(corpus, contexts):
    res = separable_closure(corpus["gf16"].field, contexts("gf16"))
    assert (res.separable_degree, res.inseparable_degree) == (4, 1)

    spec = corpus["mixed_p2"]
    res = separable_closure(spec.field, contexts("mixed_p2"))
    assert (res.separable_degree, res.inseparable_degree) == (2, 2)
    a = spec.element("a")  # the generator squared, separable of degree 2
    assert res.closure.same_as(Subfield(spec.field, [a]))

    res = separable_closure(corpus["insep_tower_p2"].field,
                            contexts("insep_tower_p2"))
    assert (res.separable_degree, res.inseparable_degree) == (1, 4)
    assert res.closure.dim == 1


# -- primitive elements -------------------------------------------------------


def test_primitive_element(corpus, contexts):
    spec = corpus["gf16"]
    gamma = primitive_element(spec.field, contexts("gf16"))
    assert minimal_polynomial(gamma).degree == 4

    spec2 = corpus["biquadratic_p3"]
    gamma2 = primitive_element(spec2.field, contexts("biquadratic_p3"))
    assert minimal_polynomial(gamma2).degree == 4

    with pytest.raises(InputError):
        primitive_element(corpus["sqrt_t_p2"].field, contexts("sqrt_t_p2"))


# -- transitivity and the determinant criterion -------------------------------


def test_transitivity(corpus, contexts):
    spec = corpus["gf16"]
    E = spec.field
    L = Subfield(E, [spec.element("w")])
    rep = transitivity_check(E, L, contexts("gf16"))
    assert rep.hom_counts == (2, 2, 4)
    assert rep.lower_separable and rep.upper_separable and rep.total_separable
    assert rep.implication_holds

    spec2 = corpus["insep_tower_p2"]
    E2 = spec2.field
    L2 = Subfield(E2, [lift(E2.parent.generator, E2)])
    rep2 = transitivity_check(E2, L2, contexts("insep_tower_p2"))
    assert not rep2.total_separable
    assert rep2.implication_holds          # vacuously: a step is inseparable
    assert not (rep2.lower_separable and rep2.upper_separable)


def test_det_criterion(corpus, contexts):
    spec = corpus["gf4"]
    E = spec.field
    w = spec.element("w")
    assert det_criterion([E.one, w], E, contexts("gf4"))
    with pytest.raises(InputError):
        det_criterion([E.one, w, w + 1], E, contexts("gf4"))

    spec2 = corpus["sqrt_t_p2"]
    E2 = spec2.field
    assert not det_criterion([E2.one, spec2.element("s")], E2,
                             contexts("sqrt_t_p2"))


def test_report_consistency_guard(corpus, contexts):
    # the three criteria agree on a mixed bag of named corpus elements
    for name in ("gf16", "sqrt_t_p2", "quartic_t_p2", "biquadratic_p3"):
        spec = corpus[name]
        E = spec.field
        ctx = contexts(name)
        maps = hom_set(E, base_subfield(E), ctx)
        for elem_name in sorted(spec.names):
            alpha = spec.element(elem_name)
            d = minimal_polynomial(alpha).degree
            images = {phi.apply(alpha).rep for phi in maps}
            hom_verdict = len(images) == d
            assert hom_verdict == is_separable_element(alpha).separable
