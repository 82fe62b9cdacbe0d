"""Simple extensions K[x]/(f), towers thereof, and subfields as K-spans.

Towers stay nested: an element of a stage is a coordinate tuple over the
parent stage, fully reduced modulo the stage minimal polynomial.  The
flattened coordinate vector over the root base field (product power
basis) feeds all linear algebra.
"""

from __future__ import annotations

import itertools

from .basefields import FieldElement
from .errors import FieldMismatchError, InputError, ReducibleError
from .linalg import SpanBuilder, solve_combination
from .poly import Poly


class ExtensionField:
    """A simple extension parent[x]/(minpoly), one stage of a tower."""

    kind = "extension"

    def __init__(self, parent, gen_name, minpoly, _certified=False):
        if not minpoly.is_monic() or minpoly.degree < 2:
            raise InputError("stage minimal polynomial must be monic of degree >= 2")
        if minpoly.field != parent:
            raise FieldMismatchError("minpoly coefficients not in the parent field")
        self.parent = parent
        self.gen_name = gen_name
        self.minpoly = minpoly
        self.degree_over_parent = minpoly.degree
        self.certified_irreducible = _certified

    @property
    def characteristic(self):
        return self.parent.characteristic

    @property
    def base(self):
        return self.parent.base

    @property
    def absolute_degree(self):
        return self.parent.absolute_degree * self.degree_over_parent

    def __repr__(self):
        return f"{self.parent!r}({self.gen_name})"

    # identity-based equality: each make_extension call yields a new field

    def _zero_rep(self):
        z = self.parent._zero_rep()
        return (z,) * self.degree_over_parent

    @property
    def zero(self):
        return FieldElement(self, self._zero_rep())

    @property
    def one(self):
        reps = [self.parent.one.rep] + \
            [self.parent._zero_rep()] * (self.degree_over_parent - 1)
        return FieldElement(self, tuple(reps))

    @property
    def generator(self):
        z = self.parent._zero_rep()
        reps = [z] * self.degree_over_parent
        reps[1] = self.parent.one.rep
        return FieldElement(self, tuple(reps))

    def element(self, x):
        if isinstance(x, FieldElement):
            if x.field == self:
                return x
            if is_ancestor(x.field, self):
                return lift(x, self)
            raise FieldMismatchError(f"{x.field} element into {self}")
        if isinstance(x, int):
            return lift(self.base.element(x), self)
        if isinstance(x, tuple):
            if len(x) != self.degree_over_parent:
                raise InputError("coordinate tuple of wrong length")
            return FieldElement(self, tuple(self.parent.element(c).rep for c in x))
        raise TypeError(f"cannot build {self} element from {x!r}")

    def from_coords(self, coords):
        """Element from parent-field coordinates (low power first, padded)."""
        coords = list(coords)
        if len(coords) > self.degree_over_parent:
            raise InputError("too many coordinates")
        coords += [self.parent.zero] * (self.degree_over_parent - len(coords))
        return self.element(tuple(coords))

    # -- rep <-> Poly over parent -------------------------------------------

    def _to_poly(self, rep):
        return Poly(self.parent, [FieldElement(self.parent, c) for c in rep])

    def _from_poly(self, f):
        f = f % self.minpoly
        reps = [f.coefficient(i).rep for i in range(self.degree_over_parent)]
        return tuple(reps)

    def _add(self, a, b):
        return tuple(self.parent._add(x, y) for x, y in zip(a, b))

    def _sub(self, a, b):
        return tuple(self.parent._sub(x, y) for x, y in zip(a, b))

    def _neg(self, a):
        return tuple(self.parent._neg(x) for x in a)

    def _mul(self, a, b):
        return self._from_poly(self._to_poly(a) * self._to_poly(b))

    def _inv(self, a):
        f = self._to_poly(a)
        if f.is_zero():
            raise ZeroDivisionError(f"inverse of 0 in {self}")
        # extended Euclid: u*f + v*minpoly = gcd = const
        r0, r1 = self.minpoly, f
        s0, s1 = Poly.zero(self.parent), Poly.one(self.parent)
        while not r1.is_zero():
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
        if r0.degree != 0:
            raise ReducibleError(
                f"minpoly of {self!r} is reducible: gcd {r0!r}", factor=r0)
        inv = s0.scale(r0.coefficient(0).inverse())
        return self._from_poly(inv)

    def format_element(self, a):
        f = self._to_poly(a.rep)
        if f.is_zero():
            return "0"
        parts = []
        for i in range(f.degree, -1, -1):
            c = f.coefficient(i)
            if c.is_zero():
                continue
            cs = repr(c)
            g = self.gen_name if i == 1 else f"{self.gen_name}^{i}"
            if i == 0:
                parts.append(cs)
            elif c == self.parent.one:
                parts.append(g)
            else:
                if any(op in cs for op in (" + ", " - ", "/", "*")):
                    cs = f"({cs})"
                parts.append(f"{cs}*{g}")
        return " + ".join(parts)


# ---------------------------------------------------------------------------
# tower navigation


def tower_stages(field):
    """Stage handles from the root base up to (and including) this field."""
    chain = []
    while field.kind == "extension":
        chain.append(field)
        field = field.parent
    chain.append(field)
    return list(reversed(chain))


def is_ancestor(candidate, field):
    """True if candidate is field itself or one of its tower parents."""
    while True:
        if field == candidate:
            return True
        if field.kind != "extension":
            return False
        field = field.parent


def lift(a, target):
    """Include an element of an ancestor stage into the target field."""
    if a.field == target:
        return a
    if not is_ancestor(a.field, target):
        raise FieldMismatchError(f"{a.field} is not a stage of {target}")
    chain = []
    f = target
    while f != a.field:
        chain.append(f)
        f = f.parent
    rep = a.rep
    for stage in reversed(chain):
        pad = [stage.parent._zero_rep()] * stage.degree_over_parent
        pad[0] = rep
        rep = tuple(pad)
    return FieldElement(target, rep)


def lift_poly(f, target):
    """Lift a polynomial's coefficients into an extension of its field."""
    if f.field == target:
        return f
    return Poly(target, [lift(c, target) for c in f.coeffs])


def poly_eval(f, a):
    """Evaluate f at a point whose field extends f's coefficient field."""
    if a.field != f.field:
        f = lift_poly(f, a.field)
    return f.eval(a)


def flatten(a):
    """Coordinates of a over the root base field (product power basis)."""
    field = a.field
    if field.kind != "extension":
        return (a,)
    base = field.base
    out = []

    def rec(f, rep):
        if f.kind != "extension":
            out.append(FieldElement(base, rep))
            return
        for c in rep:
            rec(f.parent, c)

    rec(field, a.rep)
    return tuple(out)


def unflatten(field, vec):
    """Inverse of flatten: base coordinates -> tower element."""
    it = iter(vec)

    def rec(f):
        if f.kind != "extension":
            return next(it).rep
        return tuple(rec_stage(f))

    def rec_stage(f):
        return [rec(f.parent) for _ in range(f.degree_over_parent)]

    rep = rec(field)
    return FieldElement(field, rep)


def iter_elements(field):
    """All elements of a finite tower over F_p, in coordinate-lex order."""
    base = field.base
    if base.kind != "prime":
        raise InputError(f"{field} is not finite")
    n = field.absolute_degree
    for coords in itertools.product(range(base.p), repeat=n):
        yield unflatten(field, [base.element(c) for c in coords])


def iter_bounded_elements(field, max_t_deg):
    """Tower elements whose base coordinates are polynomials in t of bounded degree.

    For prime bases this is every element.  Coordinate-lex order, so the
    enumeration is deterministic.
    """
    base = field.base
    if base.kind == "prime":
        yield from iter_elements(field)
        return
    n = field.absolute_degree
    coords_pool = list(base.iter_poly_elements(max_t_deg))
    for coords in itertools.product(coords_pool, repeat=n):
        yield unflatten(field, coords)


def bounded_count(field, max_t_deg):
    base = field.base
    n = field.absolute_degree
    if base.kind == "prime":
        return base.p ** n
    return base.p ** ((max_t_deg + 1) * n)


# ---------------------------------------------------------------------------
# minimal polynomials and subfields


def minimal_polynomial(a, over=None):
    """Monic minimal polynomial of a over the root base (default) or a Subfield.

    Found as the first linear dependence among 1, a, a^2, ... by exact
    elimination over the base field.
    """
    if over is not None and not isinstance(over, Subfield):
        raise TypeError("'over' must be a Subfield or None")
    if over is not None:
        return _minimal_polynomial_over_subfield(a, over)
    field = a.field
    base = field.base
    n = field.absolute_degree
    sb = SpanBuilder(base, n)
    powers = []
    vectors = []
    current = field.element(1) if field.kind == "extension" else a.field.one
    while True:
        vec = flatten(current)
        if not sb.add(vec):
            coeffs = solve_combination(base, vectors, vec)
            d = len(powers)
            mp = [-c for c in coeffs] + [base.one]
            return Poly(base, mp)
        powers.append(current)
        vectors.append(vec)
        current = current * a
        if len(powers) > n:
            raise AssertionError("no linear dependence within the degree bound")


def _minimal_polynomial_over_subfield(a, L):
    field = a.field
    base = field.base
    n = field.absolute_degree
    basis = L.basis
    apow = field.element(1) if field.kind == "extension" else a.field.one
    power_list = [apow]
    for d in range(1, n + 1):
        power_list.append(power_list[-1] * a)
        target = flatten(power_list[d])
        cols = [flatten(b * power_list[i]) for i in range(d) for b in basis]
        coeffs = solve_combination(base, cols, target)
        if coeffs is None:
            continue
        m = len(basis)
        poly_coeffs = []
        for i in range(d):
            c = field.zero if field.kind == "extension" else base.zero
            for j in range(m):
                scalar = lift(coeffs[i * m + j], field) \
                    if field.kind == "extension" else coeffs[i * m + j]
                c = c + scalar * basis[j]
            poly_coeffs.append(-c)
        one = field.one if field.kind == "extension" else base.one
        poly_coeffs.append(one)
        return Poly(field if field.kind == "extension" else base, poly_coeffs)
    raise AssertionError("no linear dependence within the degree bound")


class Subfield:
    """Intermediate field of ambient/base, given by generators.

    The stored basis is a K-basis of the smallest subfield containing the
    generators, obtained by closing {1} + generators under multiplication
    until the span stabilizes.
    """

    def __init__(self, ambient, generators, label=None):
        self.ambient = ambient
        self.generators = [ambient.element(g) for g in generators]
        self.label = label
        self._basis = None

    @property
    def basis(self):
        if self._basis is None:
            self._basis = self._compute_basis()
        return self._basis

    def _compute_basis(self):
        field = self.ambient
        base = field.base
        n = field.absolute_degree
        sb = SpanBuilder(base, n)
        elems = []
        one = field.one if field.kind == "extension" else field.element(1)

        def try_add(e):
            if sb.add(flatten(e)):
                elems.append(e)
                return True
            return False

        try_add(one)
        for g in self.generators:
            try_add(g)
        changed = True
        while changed:
            changed = False
            snapshot = list(elems)
            for x in snapshot:
                for y in snapshot:
                    if try_add(x * y):
                        changed = True
        return elems

    @property
    def dim(self):
        return len(self.basis)

    def contains(self, a):
        a = self.ambient.element(a)
        sb = SpanBuilder(self.ambient.base, self.ambient.absolute_degree)
        for b in self.basis:
            sb.add(flatten(b))
        return sb.contains(flatten(a))

    def same_as(self, other):
        if other.ambient != self.ambient or other.dim != self.dim:
            return False
        return all(other.contains(b) for b in self.basis)

    def __repr__(self):
        if self.label:
            return f"Subfield({self.label})"
        gens = ", ".join(repr(g) for g in self.generators)
        return f"Subfield(<{gens}>)"


def subfield_membership(a, L):
    return L.contains(a)


def span_basis(L):
    return list(L.basis)


def base_subfield(ambient):
    """The root base field K viewed as a subfield of the ambient tower."""
    return Subfield(ambient, [], label="K")


def full_subfield(ambient):
    """The ambient field E viewed as a subfield of itself."""
    gens = [lift(stage.generator, ambient) for stage in tower_stages(ambient)
            if stage.kind == "extension"]
    return Subfield(ambient, gens, label="E")


def degree_over(a, L):
    """[L(a) : L] computed as dim L(a) / dim L over the base."""
    bigger = Subfield(L.ambient, list(L.generators) + [a])
    d, r = divmod(bigger.dim, L.dim)
    if r:
        raise AssertionError("subfield dimension does not divide")
    return d


def make_extension(parent, f, gen_name=None):
    """Adjoin a root of f to parent, certifying irreducibility first."""
    from .factor import is_irreducible  # deferred: factor builds on towers

    if not f.is_monic():
        raise InputError("extension polynomial must be monic")
    if f.degree < 2:
        raise InputError("extension polynomial must have degree >= 2")
    ok, certificate = is_irreducible(f)
    if not ok:
        raise ReducibleError(
            f"{f!r} is reducible over {parent!r}: factor {certificate!r}",
            factor=certificate)
    if gen_name is None:
        gen_name = f"a{parent.absolute_degree * f.degree}"
    return ExtensionField(parent, gen_name, f, _certified=True)
