"""Degree-bounded bases of sector forms and desk-scale cohomology.

`sector_basis` enumerates an ansatz of candidate polynomials that are
multilinear in each tangent coordinate group and have base dependence of
bounded degree, imposes the linearity equations as exact linear
constraints on the coefficients, and returns a basis of the solution
space.  `complex_report` assembles the boundary maps of the resulting
degree-bounded complex, certifies that the boundary squares to zero, and
reports kernel/image/cohomology ranks for the full complex and for the
alternating (singular) subcomplex.

Truncation note: the exterior derivative differentiates base
coefficients, so the image at level n is computed from the level-(n-1)
space with the degree bound raised by one; otherwise truncation
manufactures spurious cohomology at the top of the filtration.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .linalg import nullspace, rank
from .poly import Poly, PolyMap, compose
from .sector import SectorForm, exterior_derivative, symmetry
from .tangent import multilinearity_probe, origin_lift, tangent_of_map


class SizeError(ValueError):
    """Raised instead of silently truncating a blown-up enumeration."""


def _base_exponents(m: int, d: int) -> list[tuple[int, ...]]:
    """Exponent vectors over m base variables of total degree <= d."""
    out = []

    def rec(prefix, remaining):
        if len(prefix) == m - 1:
            for e in range(remaining + 1):
                out.append(tuple(prefix) + (e,))
            return
        for e in range(remaining + 1):
            rec(prefix + [e], remaining - e)

    if m == 0:
        return [()]
    rec([], d)
    return sorted(out)


def sector_candidates(n: int, m: int, d: int) -> list[Poly]:
    """The ansatz: base monomials times at most one variable per tangent group.

    Tangent coordinates of T^n R^m split into 2^n - 1 nonempty-level
    groups of m variables each; a candidate takes each group to degree
    at most one jointly.
    """
    size = m << n
    groups = list(range(1, 1 << n))  # nonempty level sets, binary-counter order
    base_embed = list(range(m))
    candidates = []
    for exps in _base_exponents(m, d):
        base = Poly.monomial(m, exps).embed(size, base_embed)
        for picks in product(range(m + 1), repeat=len(groups)):
            term = base
            for mask, pick in zip(groups, picks):
                if pick:
                    term = term * Poly.var(size, mask * m + (pick - 1))
            candidates.append(term)
    return candidates


def _linearity_rows(n: int, m: int, candidates: list[Poly]) -> list[dict]:
    """Constraint matrix rows: columns are candidates, rows are monomials of
    the residual of each linearity equation."""
    size = m << n
    lam = origin_lift(1)
    probes = [multilinearity_probe(m, n, i) for i in range(1, n + 1)]
    rows: dict[tuple, dict[int, Fraction]] = {}
    for col, cand in enumerate(candidates):
        body = PolyMap(size, 1, (cand,))
        jac = tangent_of_map(body)
        rhs = compose(body, lam)
        for i, probe in enumerate(probes):
            residual = compose(probe, jac) - rhs
            for comp_idx, comp in enumerate(residual.components):
                for exp, coeff in comp.terms.items():
                    key = (i, comp_idx, exp)
                    rows.setdefault(key, {})[col] = coeff
    return list(rows.values())


def sector_basis(n: int, m: int, d: int, max_candidates: int = 20000) -> list[SectorForm]:
    """A basis of sector n-forms on R^m with coefficient degree <= d.

    Deterministic: candidates are enumerated in a fixed order and the
    kernel basis comes out of reduced echelon form.
    """
    if n < 0 or m < 1 or d < 0:
        raise ValueError("need n >= 0, m >= 1, d >= 0")
    candidates = sector_candidates(n, m, d)
    if len(candidates) > max_candidates:
        raise SizeError(
            f"{len(candidates)} candidates at (n={n}, m={m}, d={d}) "
            f"exceed the guard of {max_candidates}")
    size = m << n
    if n == 0:
        return [SectorForm(0, m, 1, PolyMap(size, 1, (c,))) for c in candidates]
    rows = _linearity_rows(n, m, candidates)
    basis = []
    for vec in nullspace(rows, len(candidates)):
        total = Poly.zero(size)
        for col, coeff in sorted(vec.items()):
            total = total + candidates[col].scale(coeff)
        basis.append(SectorForm(n, m, 1, PolyMap(size, 1, (total,))))
    return basis


def _body_vector(form: SectorForm) -> dict:
    """Sparse coefficient vector of a form body over (component, exponent) keys."""
    vec = {}
    for comp_idx, comp in enumerate(form.body.components):
        for exp, coeff in comp.terms.items():
            vec[(comp_idx, exp)] = coeff
    return vec


def alternating_subbasis(basis: list[SectorForm]) -> list[SectorForm]:
    """Basis of the alternating (singular) subspace of a span of sector forms."""
    if not basis:
        return []
    n = basis[0].n
    if n < 2:
        return list(basis)
    rows: dict[tuple, dict[int, Fraction]] = {}
    for col, form in enumerate(basis):
        for i in range(1, n):
            residual = symmetry(form, i, validate=False) + form
            for key, coeff in _body_vector(residual).items():
                rows.setdefault((i,) + key, {})[col] = coeff
    combos = nullspace(list(rows.values()), len(basis))
    out = []
    for vec in combos:
        total = SectorForm.zero(n, basis[0].m, basis[0].k)
        for col, coeff in sorted(vec.items()):
            total = total + basis[col].scale(coeff)
        out.append(total)
    return out


def singular_basis(n: int, m: int, d: int, max_candidates: int = 20000) -> list[SectorForm]:
    """A basis of singular (alternating sector) n-forms at coefficient bound d."""
    return alternating_subbasis(sector_basis(n, m, d, max_candidates))


@dataclass(frozen=True)
class ComplexReport:
    """Dimensions and ranks of the degree-bounded sector-form complex.

    ``boundary_ranks[i]`` is the rank of the boundary leaving level i at
    the stated bound; ``image_ranks_raised[i]`` is its rank from the
    bound-(d+1) space, which is what the cohomology subtraction uses:
    H[i] = kernel_dims[i] - image_ranks_raised[i-1].
    """

    base_dim: int
    degree_bound: int
    levels: int
    dims: tuple[int, ...]
    kernel_dims: tuple[int, ...]
    boundary_ranks: tuple[int, ...]
    image_ranks_raised: tuple[int, ...]
    cohomology: tuple[int, ...]
    singular_dims: tuple[int, ...]
    singular_kernel_dims: tuple[int, ...]
    singular_boundary_ranks: tuple[int, ...]
    singular_image_ranks_raised: tuple[int, ...]
    singular_cohomology: tuple[int, ...]
    complex_verified: bool

    def consistent(self) -> bool:
        ok = all(self.cohomology[i] == self.kernel_dims[i]
                 - (self.image_ranks_raised[i - 1] if i else 0)
                 for i in range(len(self.cohomology)))
        ok = ok and all(self.singular_cohomology[i] == self.singular_kernel_dims[i]
                        - (self.singular_image_ranks_raised[i - 1] if i else 0)
                        for i in range(len(self.singular_cohomology)))
        return ok


def _rank_and_kernel(basis: list[SectorForm]) -> tuple[int, int, bool]:
    """(rank of the boundary on this basis, kernel dim, boundary-squared-zero)."""
    vectors = []
    square_zero = True
    for form in basis:
        dform = exterior_derivative(form, validate=False)
        vectors.append(_body_vector(dform))
        if not exterior_derivative(dform, validate=False).is_zero:
            square_zero = False
    r = rank([v for v in vectors if v])
    return r, len(basis) - r, square_zero


def complex_report(m: int, d: int, n_max: int, max_candidates: int = 20000) -> ComplexReport:
    """Assemble the degree-bounded complex on R^m up to level n_max.

    Kernels use coefficient bound d; images entering level n use the
    level-(n-1) basis at bound d+1.  Exact rational arithmetic
    throughout; the boundary-squares-to-zero flag is a hard check on
    every basis element encountered.
    """
    if n_max < 0:
        raise ValueError("need n_max >= 0")
    bases_d = [sector_basis(nu, m, d, max_candidates) for nu in range(n_max + 1)]
    bases_up = [sector_basis(nu, m, d + 1, max_candidates) for nu in range(n_max)]
    alt_d = [alternating_subbasis(b) for b in bases_d]
    alt_up = [alternating_subbasis(b) for b in bases_up]

    verified = True
    dims, kernels, ranks, raised = [], [], [], []
    s_dims, s_kernels, s_ranks, s_raised = [], [], [], []
    for nu in range(n_max + 1):
        r, k, ok = _rank_and_kernel(bases_d[nu])
        verified = verified and ok
        dims.append(len(bases_d[nu]))
        ranks.append(r)
        kernels.append(k)
        sr, sk, sok = _rank_and_kernel(alt_d[nu])
        verified = verified and sok
        s_dims.append(len(alt_d[nu]))
        s_ranks.append(sr)
        s_kernels.append(sk)
    for nu in range(n_max):
        r, _, ok = _rank_and_kernel(bases_up[nu])
        verified = verified and ok
        raised.append(r)
        sr, _, sok = _rank_and_kernel(alt_up[nu])
        verified = verified and sok
        s_raised.append(sr)

    cohomology = [kernels[0]] + [kernels[i] - raised[i - 1] for i in range(1, n_max + 1)]
    s_cohomology = [s_kernels[0]] + [s_kernels[i] - s_raised[i - 1] for i in range(1, n_max + 1)]
    return ComplexReport(
        base_dim=m, degree_bound=d, levels=n_max,
        dims=tuple(dims), kernel_dims=tuple(kernels),
        boundary_ranks=tuple(ranks), image_ranks_raised=tuple(raised),
        cohomology=tuple(cohomology),
        singular_dims=tuple(s_dims), singular_kernel_dims=tuple(s_kernels),
        singular_boundary_ranks=tuple(s_ranks),
        singular_image_ranks_raised=tuple(s_raised),
        singular_cohomology=tuple(s_cohomology),
        complex_verified=verified)
