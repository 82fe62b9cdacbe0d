"""Tower construction, coordinates, minimal polynomials, and subfields."""

import pytest

from fieldsep.basefields import PrimeField, RationalFunctionField
from fieldsep.errors import FieldMismatchError, InputError, ReducibleError
from fieldsep.parse import parse_poly, parse_tower
from fieldsep.poly import Poly
from fieldsep.towers import (Subfield, base_subfield, bounded_count,
                             degree_over, flatten, full_subfield, is_ancestor,
                             iter_bounded_elements, iter_elements, lift,
                             lift_poly, make_extension, minimal_polynomial,
                             poly_eval, tower_stages, unflatten)


@pytest.fixture(scope="module")
def gf16():
    return parse_tower("base Fp 2\ngen w : x^2 + x + 1\ngen v : x^2 + x + w\n")


@pytest.fixture(scope="module")
def biq():
    return parse_tower("base FpT 3\ngen s : x^2 + 2*t\ngen u : x^2 + 2*t + 2\n")


def test_make_extension_certifies_irreducibility():
    F2 = PrimeField(2)
    with pytest.raises(ReducibleError):
        make_extension(F2, parse_poly("x^2 + 1", F2))
    with pytest.raises(InputError):
        make_extension(F2, parse_poly("x + 1", F2))  # degree too small
    E = make_extension(F2, parse_poly("x^2 + x + 1", F2), "w")
    assert E.absolute_degree == 2
    assert poly_eval(E.minpoly, E.generator).is_zero()


def test_stage_navigation(gf16):
    E = gf16.field
    stages = tower_stages(E)
    assert [s.kind for s in stages] == ["prime", "extension", "extension"]
    assert is_ancestor(stages[1], E)
    assert is_ancestor(E, E)
    assert not is_ancestor(E, stages[1])


def test_lift_and_flatten_inverse(gf16):
    E = gf16.field
    w = gf16.element("w")
    v = gf16.element("v")
    a = w * v + v + 1
    assert unflatten(E, flatten(a)) == a
    assert len(flatten(a)) == 4
    # lifting from the middle stage commutes with arithmetic
    mid = E.parent
    wm = mid.generator
    assert lift(wm * wm, E) == lift(wm, E) * lift(wm, E)
    with pytest.raises(FieldMismatchError):
        lift(E.generator, mid)


def test_tower_arithmetic(gf16, biq):
    for spec in (gf16, biq):
        E = spec.field
        g = E.generator
        assert poly_eval(E.minpoly, g).is_zero()
        a = g + 1
        assert a * a.inverse() == E.one
        assert (a - a).is_zero()
        assert a ** 3 == a * a * a
    with pytest.raises(ZeroDivisionError):
        biq.field.zero.inverse()


def test_lift_poly_and_eval(biq):
    E = biq.field
    K = E.base
    f = Poly(K, [K.t, K.one])  # x + t
    fe = lift_poly(f, E)
    s = lift(E.parent.generator, E)
    assert fe.eval(s) == s + lift(K.t, E)
    assert poly_eval(f, s) == fe.eval(s)


def test_minimal_polynomial_oracles(gf16, biq):
    w = gf16.element("w")
    assert repr(minimal_polynomial(w)) == "x^2 + x + 1"
    v = gf16.element("v")
    assert minimal_polynomial(v).degree == 4
    assert poly_eval(minimal_polynomial(v), v).is_zero()
    s = lift(biq.field.parent.generator, biq.field)
    assert repr(minimal_polynomial(s)) == "x^2 + 2*t"
    # over an intermediate subfield the stage minpoly reappears
    E = gf16.field
    L = Subfield(E, [w])
    m = minimal_polynomial(v, over=L)
    assert m.degree == 2
    assert poly_eval(m, v).is_zero()
    with pytest.raises(TypeError):
        minimal_polynomial(v, over="w")


def test_subfield_spans(gf16):
    E = gf16.field
    w = gf16.element("w")
    v = gf16.element("v")
    K = base_subfield(E)
    assert K.dim == 1
    L = Subfield(E, [w])
    assert L.dim == 2
    assert L.contains(w * w)          # closed under multiplication
    assert not L.contains(v)
    assert full_subfield(E).dim == 4
    assert Subfield(E, [v]).dim == 4  # v generates everything
    assert L.same_as(Subfield(E, [w + 1]))
    assert degree_over(v, L) == 2
    assert degree_over(w, K) == 2


def test_subfield_over_rational_base(biq):
    E = biq.field
    s = lift(E.parent.generator, E)
    u = E.generator
    assert Subfield(E, [s]).dim == 2
    assert Subfield(E, [s * u]).dim == 2
    assert Subfield(E, [s, u]).dim == 4
    assert base_subfield(E).contains(lift(E.base.t, E))


def test_element_enumeration(gf16):
    E = gf16.field
    elems = list(iter_elements(E))
    assert len(elems) == 16
    assert len({flatten(e) for e in elems}) == 16
    K = RationalFunctionField(2)
    T = parse_tower("base FpT 2\ngen s : x^2 + t\n").field
    got = list(iter_bounded_elements(T, 0))
    assert len(got) == bounded_count(T, 0) == 4
    with pytest.raises(InputError):
        list(iter_elements(T))
    assert bounded_count(T, 1) == 16


def test_element_coercions(gf16):
    E = gf16.field
    assert E.element(3) == E.one  # 3 mod 2
    w = gf16.element("w")
    assert E.element(w) == w
    with pytest.raises(InputError):
        E.element((E.parent.zero,))  # wrong coordinate count
    got = E.from_coords([E.parent.one])
    assert got == E.one
