"""The concrete tangent-category model on Cartesian spaces.

The n-th iterated tangent space of R^m is R^{m * 2^n}, coordinatized by
pairs (j, S) of a base index j in 1..m and a set S of tangent levels
S subset of {1..n}; nesting one more tangent level appends the new top
level, so the flat order is the binary-counter order on S.  Applying the
tangent functor to a polynomial map is exact forward-mode
differentiation: Tf(base, tangent) = (f(base), Jf(base) . tangent).

The structural natural transformations (vertical lift, canonical flip,
projection, zero section, fibre addition) are realized as polynomial
maps, whiskered to any level, and every tangent-category axiom is
machine-checked as an exact identity of polynomial maps by
`verify_tangent_axioms`.  Surjections of finite cardinals act on
iterated tangent spaces contravariantly through `realize_surjection`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

from .fincard import (
    EPSILON,
    SIGMA,
    FinMap,
    GenWord,
    Generator,
    RelationReport,
    classify,
    factor_surjection,
)
from .poly import (
    Poly,
    PolyMap,
    compose,
    coordinate_map,
    identity_map,
    zero_map,
)


@dataclass(frozen=True)
class TangentCoords:
    """Coordinate bookkeeping for the flattened space T^depth R^base_dim."""

    base_dim: int
    depth: int

    def __post_init__(self):
        if self.base_dim < 0 or self.depth < 0:
            raise ValueError("dimensions must be nonnegative")

    @property
    def size(self) -> int:
        return self.base_dim << self.depth

    def index(self, j: int, levels: Iterable[int]) -> int:
        """Flat index of the coordinate (j, S): blocks in binary-counter order."""
        if not 1 <= j <= self.base_dim:
            raise ValueError(f"base index {j} out of range")
        mask = 0
        for level in levels:
            if not 1 <= level <= self.depth:
                raise ValueError(f"tangent level {level} out of range")
            mask |= 1 << (level - 1)
        return mask * self.base_dim + (j - 1)

    def label(self, flat: int) -> tuple[int, frozenset[int]]:
        if not 0 <= flat < self.size:
            raise ValueError("flat index out of range")
        mask, j = divmod(flat, self.base_dim)
        return j + 1, frozenset(l + 1 for l in range(self.depth) if mask >> l & 1)

    def labels(self) -> list[tuple[int, frozenset[int]]]:
        return [self.label(i) for i in range(self.size)]

    def name(self, flat: int) -> str:
        j, levels = self.label(flat)
        suffix = f"_{j}" if self.base_dim > 1 else ""
        if not levels:
            return f"x{suffix}"
        return "u{" + ",".join(str(l) for l in sorted(levels)) + "}" + suffix


def tangent_of_map(f: PolyMap) -> PolyMap:
    """One application of the tangent functor: exact Jacobian pushforward."""
    a, b = f.dom_dim, f.cod_dim
    keep = list(range(a))
    base = [c.embed(2 * a, keep) for c in f.components]
    tangent = []
    for c in f.components:
        t = Poly.zero(2 * a)
        for j in range(a):
            d = c.partial(j)
            if not d.is_zero:
                t = t + d.embed(2 * a, keep) * Poly.var(2 * a, a + j)
        tangent.append(t)
    return PolyMap(2 * a, 2 * b, tuple(base + tangent))


def iterate_tangent(f: PolyMap, n: int) -> PolyMap:
    if n < 0:
        raise ValueError("tangent depth must be nonnegative")
    for _ in range(n):
        f = tangent_of_map(f)
    return f


# -- structural transformations at R^m --------------------------------

def vertical_lift(m: int) -> PolyMap:
    """(x, v) |-> (x, 0, 0, v): duplicate a tangent vector into the double bundle."""
    return coordinate_map(2 * m,
                          list(range(m)) + [None] * (2 * m) + list(range(m, 2 * m)))


def canonical_flip(m: int) -> PolyMap:
    """(x, v1, v2, d) |-> (x, v2, v1, d): exchange the two tangent levels."""
    return coordinate_map(4 * m,
                          list(range(m)) + list(range(2 * m, 3 * m))
                          + list(range(m, 2 * m)) + list(range(3 * m, 4 * m)))


def bundle_projection(m: int) -> PolyMap:
    """(x, v) |-> x."""
    return coordinate_map(2 * m, range(m))


def zero_section(m: int) -> PolyMap:
    """x |-> (x, 0)."""
    return coordinate_map(m, list(range(m)) + [None] * m)


def fibre_addition(m: int) -> PolyMap:
    """(x, u, w) |-> (x, u + w) on the fibre product of two tangent bundles."""
    comps = [Poly.var(3 * m, j) for j in range(m)]
    comps += [Poly.var(3 * m, m + j) + Poly.var(3 * m, 2 * m + j) for j in range(m)]
    return PolyMap(3 * m, 2 * m, tuple(comps))


STRUCTURAL_KINDS = ("vlift", "flip", "proj", "zero", "add")


def structural(kind: str, m: int) -> PolyMap:
    """Dispatch on {vlift, flip, proj, zero, add} at base dimension m."""
    try:
        fn = {"vlift": vertical_lift, "flip": canonical_flip,
              "proj": bundle_projection, "zero": zero_section,
              "add": fibre_addition}[kind]
    except KeyError:
        raise ValueError(f"unknown structural kind {kind!r}") from None
    return fn(m)


# -- the differential object R^k ---------------------------------------

def origin_lift(k: int) -> PolyMap:
    """x |-> (0, x): the vector x seen as a tangent vector at the origin."""
    return coordinate_map(k, [None] * k + list(range(k)))


def principal_projection(k: int) -> PolyMap:
    """(x, v) |-> v: extract the tangent part of T R^k."""
    return coordinate_map(2 * k, range(k, 2 * k))


# -- whiskered transformations on iterated tangent spaces --------------

def lift_whisker(m: int, n: int, i: int) -> PolyMap:
    """Vertical lift at generator index i: T^n R^m -> T^{n+1} R^m.

    Splits tangent level n-i+1, counted from the inside; index 1 lifts
    the outermost level.
    """
    if not 1 <= i <= n:
        raise ValueError(f"need 1 <= i <= n, got i={i}, n={n}")
    return iterate_tangent(vertical_lift(m << (n - i)), i - 1)


def flip_whisker(m: int, n: int, i: int) -> PolyMap:
    """Adjacent level swap at generator index i: T^n R^m -> T^n R^m.

    Swaps tangent levels n-i and n-i+1; index 1 swaps the outermost two.
    """
    if not 1 <= i <= n - 1:
        raise ValueError(f"need 1 <= i <= n-1, got i={i}, n={n}")
    return iterate_tangent(canonical_flip(m << (n - i - 1)), i - 1)


def flip_cycle(m: int, n: int, i: int) -> PolyMap:
    """The descending composite of swaps at indices i-1, ..., 1 on T^n R^m.

    Index 1 is the empty composite, the identity; this realizes the
    descending cycle permutation on tangent levels.
    """
    if not 1 <= i <= n:
        raise ValueError(f"need 1 <= i <= n, got i={i}, n={n}")
    out = identity_map(m << n)
    for j in range(i - 1, 0, -1):
        out = compose(out, flip_whisker(m, n, j))
    return out


def multilinearity_probe(m: int, n: int, i: int) -> PolyMap:
    """Lift at index i followed by the flip cycle: T^n R^m -> T^{n+1} R^m.

    Precomposing the Jacobian of a candidate form with this map probes
    its linearity in tangent variable i.
    """
    if not 1 <= i <= n:
        raise ValueError(f"need 1 <= i <= n, got i={i}, n={n}")
    return compose(lift_whisker(m, n, i), flip_cycle(m, n + 1, i))


WHISKER_KINDS = ("lift", "swap", "swap_cycle", "probe")


def whisker(kind: str, m: int, n: int, i: int) -> PolyMap:
    """Dispatch on {lift, swap, swap_cycle, probe} at base dim m, level n, index i."""
    try:
        fn = {"lift": lift_whisker, "swap": flip_whisker,
              "swap_cycle": flip_cycle, "probe": multilinearity_probe}[kind]
    except KeyError:
        raise ValueError(f"unknown whisker kind {kind!r}") from None
    return fn(m, n, i)


# -- realizing finite-cardinal surjections ------------------------------

def realize_generator(g: Generator, m: int) -> PolyMap:
    """Epsilon acts by the lift whisker, sigma by the swap whisker."""
    if g.kind == EPSILON:
        return lift_whisker(m, g.n, g.i)
    if g.kind == SIGMA:
        return flip_whisker(m, g.n, g.i)
    raise ValueError("coface generators do not act on iterated tangent spaces")


def realize_word(w: GenWord, m: int) -> PolyMap:
    """Contravariant realization of a word: T^cod R^m -> T^dom R^m."""
    out = identity_map(m << w.cod)
    for g in reversed(w.gens):
        out = compose(out, realize_generator(g, m))
    return out


def realize_surjection(u: FinMap, m: int) -> PolyMap:
    """The action of a surjection u: a -> b on tangent iterates, T^b -> T^a.

    Independent of the factorization of u; the packaged one is the
    deterministic `factor_surjection`.
    """
    if not classify(u).surjective:
        raise ValueError(f"{u!r} is not surjective")
    return realize_word(factor_surjection(u), m)


# -- fibre products and pairings ---------------------------------------

def tangent_fibre_map(f: PolyMap) -> PolyMap:
    """The induced map on fibre products: (x, u, w) |-> (f x, Jf u, Jf w)."""
    a, b = f.dom_dim, f.cod_dim
    tf = tangent_of_map(f)
    u_map = list(range(2 * a))
    w_map = list(range(a)) + list(range(2 * a, 3 * a))
    base = [tf.components[j].embed(3 * a, u_map) for j in range(b)]
    first = [tf.components[b + j].embed(3 * a, u_map) for j in range(b)]
    second = [tf.components[b + j].embed(3 * a, w_map) for j in range(b)]
    return PolyMap(3 * a, 3 * b, tuple(base + first + second))


def fibre_pair(f: PolyMap, g: PolyMap) -> PolyMap:
    """Pair two maps into T Y over a shared base as a map into the fibre product.

    f and g land in T R^y = R^{2y} and must agree on the base block.
    """
    if f.dom_dim != g.dom_dim or f.cod_dim != g.cod_dim or f.cod_dim % 2:
        raise ValueError("expected two maps into the same tangent space")
    y = f.cod_dim // 2
    if f.components[:y] != g.components[:y]:
        raise ValueError("maps disagree on the base block")
    return PolyMap(f.dom_dim, 3 * y,
                   f.components[:y] + f.components[y:] + g.components[y:])


def tangent_pair(f: PolyMap, g: PolyMap) -> PolyMap:
    """Pair two maps into T^2 R^m over the tangent projection.

    The target is T applied to the fibre product, laid out as
    (x, u, w, x', u', w'); f and g must agree on the blocks that the
    tangent projection keeps.
    """
    if f.dom_dim != g.dom_dim or f.cod_dim != g.cod_dim or f.cod_dim % 4:
        raise ValueError("expected two maps into the same double tangent space")
    m = f.cod_dim // 4
    fb, gb = f.components, g.components
    if fb[:m] != gb[:m] or fb[2 * m:3 * m] != gb[2 * m:3 * m]:
        raise ValueError("maps disagree under the tangent projection")
    comps = (fb[:m] + fb[m:2 * m] + gb[m:2 * m]
             + fb[2 * m:3 * m] + fb[3 * m:] + gb[3 * m:])
    return PolyMap(f.dom_dim, 6 * m, comps)


def lift_comparison(m: int) -> PolyMap:
    """The comparison map from the fibre product into the double bundle.

    Built as the pairing of (first projection; vertical lift) with
    (second projection; zero section of the tangent bundle), pushed
    through the tangent of fibre addition.  Its pullback universal
    property is not checked here.
    """
    three = 3 * m
    pi1 = coordinate_map(three, list(range(2 * m)))
    pi2 = coordinate_map(three, list(range(m)) + list(range(2 * m, 3 * m)))
    f = compose(pi1, vertical_lift(m))
    g = compose(pi2, zero_section(2 * m))
    return compose(tangent_pair(f, g), tangent_of_map(fibre_addition(m)))


# -- axiom verification -------------------------------------------------

def _random_polymap(rng: random.Random, a: int, b: int, deg: int = 2) -> PolyMap:
    comps = []
    for _ in range(b):
        terms = {}
        for _ in range(rng.randint(1, 3)):
            exp = [0] * a
            for _ in range(rng.randint(0, deg)):
                exp[rng.randrange(a)] += 1
            terms[tuple(exp)] = terms.get(tuple(exp), 0) + rng.randint(-3, 3)
        comps.append(Poly(a, terms))
    return PolyMap(a, b, tuple(comps))


def _coherence_axioms(mu: int):
    """The lift/flip coherence equations instantiated at R^mu, with depths."""
    L, C = vertical_lift, canonical_flip
    T = tangent_of_map
    yield ("flip-involution", 2,
           compose(C(mu), C(mu)), identity_map(4 * mu))
    yield ("flip-fixes-lift", 2,
           compose(L(mu), C(mu)), L(mu))
    yield ("lift-coassociative", 3,
           compose(L(mu), T(L(mu))), compose(L(mu), L(2 * mu)))
    yield ("flip-braid", 3,
           compose(compose(T(C(mu)), C(2 * mu)), T(C(mu))),
           compose(compose(C(2 * mu), T(C(mu))), C(2 * mu)))
    yield ("lift-flip-exchange", 3,
           compose(compose(L(2 * mu), T(C(mu))), C(2 * mu)),
           compose(C(mu), T(L(mu))))


def _bundle_morphism_axioms(mu: int):
    """Both structural transformations are morphisms of additive bundles."""
    L, C, P, Z, A = (vertical_lift(mu), canonical_flip(mu), bundle_projection(mu),
                     zero_section(mu), fibre_addition(mu))
    T = tangent_of_map
    three = 3 * mu
    pi1 = coordinate_map(three, list(range(2 * mu)))
    pi2 = coordinate_map(three, list(range(mu)) + list(range(2 * mu, 3 * mu)))
    yield ("lift-bundle-square", 2, compose(L, T(P)), compose(P, Z))
    lift2 = tangent_pair(compose(pi1, L), compose(pi2, L))
    yield ("lift-additive", 2, compose(lift2, T(A)), compose(A, L))
    yield ("lift-unit", 2, compose(Z, T(Z)), compose(Z, L))
    yield ("flip-bundle-square", 2, compose(C, bundle_projection(2 * mu)), T(P))
    tpi1, tpi2 = T(pi1), T(pi2)
    flip2 = fibre_pair(compose(tpi1, C), compose(tpi2, C))
    yield ("flip-additive", 2, compose(flip2, fibre_addition(2 * mu)), compose(T(A), C))
    yield ("flip-unit", 2, zero_section(2 * mu), compose(T(Z), C))


def _differential_object_axioms(mu: int):
    """Lift and principal projection identities on the coefficient object R^mu."""
    lam, phat = origin_lift(mu), principal_projection(mu)
    L, C, Z = vertical_lift(mu), canonical_flip(mu), zero_section(mu)
    T = tangent_of_map
    # additivity of the principal projection under the tangent of +
    plus = PolyMap(2 * mu, mu,
                   tuple(Poly.var(2 * mu, j) + Poly.var(2 * mu, mu + j) for j in range(mu)))
    tpi1 = T(coordinate_map(2 * mu, range(mu)))
    tpi2 = T(coordinate_map(2 * mu, range(mu, 2 * mu)))
    yield ("principal-additive", 2,
           compose(T(plus), phat), compose(tpi1, phat) + compose(tpi2, phat))
    yield ("principal-retract", 1, compose(lam, phat), identity_map(mu))
    yield ("zero-principal", 1, compose(Z, phat), zero_map(mu, mu))
    tp_p = compose(T(phat), phat)
    yield ("lift-principal-double", 2, compose(L, tp_p), phat)
    yield ("flip-principal", 2, compose(C, tp_p), tp_p)
    yield ("lift-principal-swap", 2, compose(L, T(phat)), compose(phat, lam))
    yield ("flip-principal-lift", 2,
           compose(compose(T(lam), C), T(phat)), compose(phat, lam))


def _naturality_axioms(m: int):
    """Naturality squares for lift, flip, projection, zero, addition."""
    rng = random.Random(2024)
    T = tangent_of_map
    panel = []
    dims = sorted({1, 2, m})
    for a in dims:
        for b in dims:
            panel.append(_random_polymap(rng, a, b))
    for idx, f in enumerate(panel):
        a, b = f.dom_dim, f.cod_dim
        tf = T(f)
        ttf = T(tf)
        yield (f"naturality-lift[{idx}]", 2,
               compose(tf, vertical_lift(b)), compose(vertical_lift(a), ttf))
        yield (f"naturality-flip[{idx}]", 2,
               compose(ttf, canonical_flip(b)), compose(canonical_flip(a), ttf))
        yield (f"naturality-proj[{idx}]", 1,
               compose(tf, bundle_projection(b)), compose(bundle_projection(a), f))
        yield (f"naturality-zero[{idx}]", 1,
               compose(f, zero_section(b)), compose(zero_section(a), tf))
        yield (f"naturality-add[{idx}]", 1,
               compose(tangent_fibre_map(f), fibre_addition(b)),
               compose(fibre_addition(a), tf))


def verify_tangent_axioms(m: int, depth: int = 3) -> RelationReport:
    """Machine-check every tangent-structure axiom at R^m, exactly.

    Coherence, bundle-morphism, and differential-object identities are
    re-instantiated at iterated tangent spaces of R^m whenever the total
    tangent depth stays within ``depth``; naturality is checked on a
    fixed seeded panel of random polynomial maps.
    """
    if m < 1:
        raise ValueError("base dimension must be at least 1")
    checked = 0
    failures = []

    def run(name, lhs, rhs, mu):
        nonlocal checked
        checked += 1
        if lhs != rhs:
            failures.append({"axiom": name, "at_dim": mu})

    for source in (_coherence_axioms, _bundle_morphism_axioms, _differential_object_axioms):
        for j in range(max(1, depth)):
            mu = m << j
            try:
                axioms = list(source(mu))
            except ValueError as err:
                # a broken structural map can make an axiom unbuildable;
                # that is a failure, not a crash
                checked += 1
                failures.append({"axiom": f"{source.__name__}@T^{j}",
                                 "at_dim": mu, "error": str(err)})
                continue
            for name, intrinsic, lhs, rhs in axioms:
                if j == 0 or j + intrinsic <= depth:
                    run(f"{name}@T^{j}" if j else name, lhs, rhs, mu)
    for name, _intrinsic, lhs, rhs in _naturality_axioms(m):
        run(name, lhs, rhs, m)
    return RelationReport("tangent-axioms", depth, checked, tuple(failures))
