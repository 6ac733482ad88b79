"""Sector forms on R^m and their cosimplicial operator calculus.

A sector form of degree n is a polynomial map from the n-th iterated
tangent space of R^m to R^k that is linear in each of its n tangent
variables; `is_sector_form` decides the defining equations exactly.
Degree 1 recovers ordinary differential 1-forms f(x) dx; from degree 2
on the forms are strictly richer (g(x) v1 v2 + h(x) d on the line).

The operators:

* ``fundamental_derivative``  degree n -> n+1, the Jacobian followed by
  the principal projection;
* ``coface(_, i)``            derivative in position i (a flip cycle
  before the fundamental derivative);
* ``codegeneracy(_, i)``      precompose with the lift whisker;
* ``symmetry(_, i)``          precompose with the swap whisker;
* ``apply_cardinal_map``      the action of an arbitrary map of finite
  cardinals, through its factorization into generators;
* ``exterior_derivative``     the signed sum of cofaces, which squares
  to zero;
* ``pullback``                precompose with an iterated tangent of a
  polynomial map of base spaces.

Alternating forms (every adjacent swap acts as negation) are the
singular forms; they are closed under the exterior derivative.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fincard import DELTA, EPSILON, FinMap, factor_map
from .poly import Poly, PolyMap, compose, zero_map
from .tangent import (
    flip_cycle,
    flip_whisker,
    iterate_tangent,
    lift_whisker,
    multilinearity_probe,
    origin_lift,
    principal_projection,
    tangent_of_map,
)


@dataclass(frozen=True)
class SectorForm:
    """A candidate sector form: degree n, base dimension m, values in R^k.

    Construction only checks dimensions; the linearity equations are a
    separate, explicit test (`is_sector_form`).
    """

    n: int
    m: int
    k: int
    body: PolyMap

    def __post_init__(self):
        if self.n < 0 or self.m < 1 or self.k < 1:
            raise ValueError("need degree >= 0, base dim >= 1, value dim >= 1")
        expect = self.m << self.n
        if (self.body.dom_dim, self.body.cod_dim) != (expect, self.k):
            raise ValueError(
                f"body is {self.body.dom_dim}->{self.body.cod_dim}, "
                f"expected {expect}->{self.k}")

    @classmethod
    def zero(cls, n: int, m: int, k: int = 1) -> "SectorForm":
        return cls(n, m, k, zero_map(m << n, k))

    @property
    def is_zero(self) -> bool:
        return self.body.is_zero

    def __add__(self, other: "SectorForm") -> "SectorForm":
        self._match(other)
        return SectorForm(self.n, self.m, self.k, self.body + other.body)

    def __sub__(self, other: "SectorForm") -> "SectorForm":
        self._match(other)
        return SectorForm(self.n, self.m, self.k, self.body - other.body)

    def __neg__(self) -> "SectorForm":
        return SectorForm(self.n, self.m, self.k, -self.body)

    def scale(self, c) -> "SectorForm":
        return SectorForm(self.n, self.m, self.k, self.body.scale(c))

    def _match(self, other: "SectorForm"):
        if (self.n, self.m, self.k) != (other.n, other.m, other.k):
            raise ValueError("forms live on different spaces")


def multilinearity_failures(omega: SectorForm) -> tuple[int, ...]:
    """Indices i whose linearity equation fails, in ascending order.

    The equation at i: probing the Jacobian at position i returns the
    form itself, lifted through the origin.
    """
    if omega.n == 0:
        return ()
    jac = tangent_of_map(omega.body)
    rhs = compose(omega.body, origin_lift(omega.k))
    bad = []
    for i in range(1, omega.n + 1):
        lhs = compose(multilinearity_probe(omega.m, omega.n, i), jac)
        if lhs != rhs:
            bad.append(i)
    return tuple(bad)


def is_sector_form(omega: SectorForm) -> bool:
    return not multilinearity_failures(omega)


def _require_sector(omega: SectorForm):
    bad = multilinearity_failures(omega)
    if bad:
        raise ValueError(f"not a sector form: linearity fails at positions {list(bad)}")


def fundamental_derivative(omega: SectorForm, validate: bool = True) -> SectorForm:
    """Jacobian then principal projection: degree n to degree n+1."""
    if validate:
        _require_sector(omega)
    body = compose(tangent_of_map(omega.body), principal_projection(omega.k))
    return SectorForm(omega.n + 1, omega.m, omega.k, body)


def coface(omega: SectorForm, i: int, validate: bool = True) -> SectorForm:
    """Derivative in position i: flip cycle, Jacobian, principal projection."""
    if not 1 <= i <= omega.n + 1:
        raise ValueError(f"need 1 <= i <= {omega.n + 1}, got {i}")
    if validate:
        _require_sector(omega)
    body = compose(flip_cycle(omega.m, omega.n + 1, i),
                   compose(tangent_of_map(omega.body), principal_projection(omega.k)))
    return SectorForm(omega.n + 1, omega.m, omega.k, body)


def codegeneracy(omega: SectorForm, i: int, validate: bool = True) -> SectorForm:
    """Precompose with the lift whisker at i: degree n+1 down to n."""
    if omega.n < 1 or not 1 <= i <= omega.n - 1:
        raise ValueError(f"need 1 <= i <= {omega.n - 1}, got {i}")
    if validate:
        _require_sector(omega)
    body = compose(lift_whisker(omega.m, omega.n - 1, i), omega.body)
    return SectorForm(omega.n - 1, omega.m, omega.k, body)


def symmetry(omega: SectorForm, i: int, validate: bool = True) -> SectorForm:
    """Precompose with the adjacent swap at i; an involution on degree n."""
    if not 1 <= i <= omega.n - 1:
        raise ValueError(f"need 1 <= i <= {omega.n - 1}, got {i}")
    if validate:
        _require_sector(omega)
    body = compose(flip_whisker(omega.m, omega.n, i), omega.body)
    return SectorForm(omega.n, omega.m, omega.k, body)


def apply_cardinal_map(omega: SectorForm, f: FinMap, validate: bool = True) -> SectorForm:
    """Act by an arbitrary map of finite cardinals f: n -> n'.

    Factor f through codegeneracies, swaps, and fundamental cofaces, and
    apply the matching operators in order.  The result does not depend
    on the factorization.
    """
    if f.dom != omega.n:
        raise ValueError(f"map leaves cardinal {f.dom}, form has degree {omega.n}")
    if validate:
        _require_sector(omega)
    out = omega
    for g in factor_map(f).gens:
        if g.kind == EPSILON:
            out = codegeneracy(out, g.i, validate=False)
        elif g.kind == DELTA:
            out = fundamental_derivative(out, validate=False)
        else:
            out = symmetry(out, g.i, validate=False)
    return out


def exterior_derivative(omega: SectorForm, validate: bool = True) -> SectorForm:
    """The alternating sum of cofaces, (-1)^(i-1) at position i.

    Squares to zero: sector forms are a cochain complex.
    """
    if validate:
        _require_sector(omega)
    shared = compose(tangent_of_map(omega.body), principal_projection(omega.k))
    total = zero_map(omega.m << (omega.n + 1), omega.k)
    for i in range(1, omega.n + 2):
        term = compose(flip_cycle(omega.m, omega.n + 1, i), shared)
        total = total + (term if i % 2 else -term)
    return SectorForm(omega.n + 1, omega.m, omega.k, total)


def is_alternating(omega: SectorForm) -> bool:
    """Every adjacent swap acts as negation (vacuous below degree 2)."""
    return all(
        compose(flip_whisker(omega.m, omega.n, i), omega.body) == -omega.body
        for i in range(1, omega.n))


def pullback(omega: SectorForm, phi: PolyMap, validate: bool = True) -> SectorForm:
    """Precompose with the iterated tangent of phi: forms move contravariantly."""
    if phi.cod_dim != omega.m:
        raise ValueError(f"map lands in R^{phi.cod_dim}, form lives on R^{omega.m}")
    if phi.dom_dim < 1:
        raise ValueError("base spaces must have dimension >= 1")
    if validate:
        _require_sector(omega)
    body = compose(iterate_tangent(phi, omega.n), omega.body)
    return SectorForm(omega.n, phi.dom_dim, omega.k, body)


# -- convenient constructors for the worked shapes ----------------------

def form_from_coefficients(n: int, m: int, blocks: dict[tuple[tuple[int, ...], ...], Poly]) -> SectorForm:
    """Build sum of coeff(x) * product of tangent coordinates.

    ``blocks`` maps a tuple of (flat coordinate indices) to a coefficient
    polynomial in the m base variables; mostly a test/demo convenience.
    """
    size = m << n
    total = Poly.zero(size)
    base_embed = list(range(m))
    for coords, coeff in blocks.items():
        if coeff.nvars != m:
            raise ValueError("coefficients are polynomials in the base variables")
        term = coeff.embed(size, base_embed)
        for c in coords:
            term = term * Poly.var(size, c)
        total = total + term
    return SectorForm(n, m, 1, PolyMap(size, 1, (total,)))


def line_one_form(f: Poly) -> SectorForm:
    """f(x) v on the line, for f a polynomial in one variable."""
    return form_from_coefficients(1, 1, {(1,): f})


def line_two_form(g: Poly, h: Poly) -> SectorForm:
    """g(x) v1 v2 + h(x) d on the line."""
    return form_from_coefficients(2, 1, {(1, 2): g, (3,): h})
