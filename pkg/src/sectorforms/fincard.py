"""Finite cardinals and their generator-and-relation presentations.

The objects are the cardinals 0, 1, 2, ... whose elements are written
1, ..., n.  A morphism is a total function stored as an explicit table.
Five wide subcategories are distinguished by `classify`: all maps,
surjections, bijections, order-preserving maps, and order-preserving
surjections.

The generating morphisms are

* ``epsilon`` (codegeneracy)  n+1 -> n   merges i and i+1,
* ``delta``   (coface)        n -> n+1   skips the value i,
* ``sigma``   (symmetry)      n -> n     swaps i and i+1,

and every map factors through them.  `check_relations` machine-verifies
the ten relation families of the two presentations (the full one over
epsilon/delta/sigma, and the leaner one over epsilon/sigma plus the
fundamental cofaces delta_1) by exhaustive table evaluation.

Composition is diagrammatic throughout: ``compose(f, g)`` applies ``f``
first.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Iterator

EPSILON = "epsilon"
DELTA = "delta"
SIGMA = "sigma"

GENERATOR_KINDS = (EPSILON, DELTA, SIGMA)


class CompositionError(ValueError):
    """Raised when arities do not line up for composition."""


@dataclass(frozen=True)
class FinMap:
    """A total function between finite cardinals, as a 1-based table.

    ``table[x-1]`` is the image of element x; ``dom == 0`` gives the
    empty table.  Instances are immutable and hashable.
    """

    dom: int
    cod: int
    table: tuple[int, ...]

    def __post_init__(self):
        if self.dom < 0 or self.cod < 0:
            raise ValueError("cardinals must be nonnegative")
        table = tuple(self.table)
        object.__setattr__(self, "table", table)
        if len(table) != self.dom:
            raise ValueError(f"table length {len(table)} != dom {self.dom}")
        for x, y in enumerate(table, start=1):
            if not isinstance(y, int) or isinstance(y, bool):
                raise ValueError(f"entry {x} -> {y!r} is not an integer")
            if not 1 <= y <= self.cod:
                raise ValueError(f"entry {x} -> {y} outside 1..{self.cod}")

    def __call__(self, x: int) -> int:
        if not 1 <= x <= self.dom:
            raise ValueError(f"{x} not an element of {self.dom}")
        return self.table[x - 1]

    def then(self, other: "FinMap") -> "FinMap":
        return compose(self, other)

    def __repr__(self):
        return f"FinMap({self.dom}->{self.cod}, {list(self.table)})"


def identity(n: int) -> FinMap:
    return FinMap(n, n, tuple(range(1, n + 1)))


def compose(f: FinMap, g: FinMap) -> FinMap:
    """Diagrammatic composite: first ``f``, then ``g``."""
    if f.cod != g.dom:
        raise CompositionError(f"cod {f.cod} != dom {g.dom}")
    return FinMap(f.dom, g.cod, tuple(g.table[y - 1] for y in f.table))


def monoidal_sum(f: FinMap, g: FinMap) -> FinMap:
    """Block sum: the first block maps via f, the second via g shifted by f.cod."""
    table = f.table + tuple(y + f.cod for y in g.table)
    return FinMap(f.dom + g.dom, f.cod + g.cod, table)


@dataclass(frozen=True)
class Generator:
    """A formal generator epsilon/delta/sigma with level ``n`` and index ``i``."""

    kind: str
    n: int
    i: int

    def __post_init__(self):
        if self.kind not in GENERATOR_KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        n, i = self.n, self.i
        if n < 0:
            raise ValueError("level must be nonnegative")
        ok = {
            EPSILON: 1 <= i <= n,
            DELTA: 1 <= i <= n + 1,
            SIGMA: 1 <= i <= n - 1,
        }[self.kind]
        if not ok:
            raise ValueError(f"index {i} out of range for {self.kind} at level {n}")

    @property
    def map_dom(self) -> int:
        return self.n + 1 if self.kind == EPSILON else self.n

    @property
    def map_cod(self) -> int:
        return self.n + 1 if self.kind == DELTA else self.n

    def __repr__(self):
        return f"{self.kind}({self.n},{self.i})"


def generator_map(g: Generator) -> FinMap:
    """Realize a formal generator as a concrete table."""
    n, i = g.n, g.i
    if g.kind == EPSILON:
        # n+1 -> n, merging i and i+1
        return FinMap(n + 1, n, tuple(x if x <= i else x - 1 for x in range(1, n + 2)))
    if g.kind == DELTA:
        # n -> n+1, skipping the value i
        return FinMap(n, n + 1, tuple(x if x < i else x + 1 for x in range(1, n + 1)))
    # sigma: swap i and i+1
    table = list(range(1, n + 1))
    table[i - 1], table[i] = table[i], table[i - 1]
    return FinMap(n, n, tuple(table))


@dataclass(frozen=True)
class GenWord:
    """A composable sequence of generators with declared endpoints.

    The empty word is the identity at its declared cardinal.  Adjacent
    generators must compose: the realized codomain of each equals the
    realized domain of the next.
    """

    dom: int
    cod: int
    gens: tuple[Generator, ...] = ()

    def __post_init__(self):
        gens = tuple(self.gens)
        object.__setattr__(self, "gens", gens)
        at = self.dom
        for g in gens:
            if g.map_dom != at:
                raise CompositionError(f"generator {g} expects domain {g.map_dom}, word is at {at}")
            at = g.map_cod
        if at != self.cod:
            raise CompositionError(f"word ends at {at}, declared cod {self.cod}")

    def __len__(self):
        return len(self.gens)

    def kinds_used(self) -> set[str]:
        return {g.kind for g in self.gens}


def eval_word(w: GenWord, realize: Callable[[Generator], FinMap] = generator_map) -> FinMap:
    """Left-to-right composite of the generator realizations."""
    out = identity(w.dom)
    for g in w.gens:
        out = compose(out, realize(g))
    if out.cod != w.cod:
        raise CompositionError(f"word evaluates to cod {out.cod}, declared {w.cod}")
    return out


def sigma_cycle(n: int, i: int) -> FinMap:
    """The descending cycle (i, i-1, ..., 2, 1) on 1..n, fixing everything above i.

    Equals the realization of the word sigma_1; sigma_2; ...; sigma_{i-1};
    in particular i = 1 gives the identity.
    """
    if not 1 <= i <= n:
        raise ValueError(f"need 1 <= i <= n, got i={i}, n={n}")
    table = [i] + [x - 1 for x in range(2, i + 1)] + list(range(i + 1, n + 1))
    return FinMap(n, n, tuple(table))


def sigma_cycle_word(n: int, i: int) -> GenWord:
    """The word sigma_1; ...; sigma_{i-1} at level n realizing `sigma_cycle`."""
    if not 1 <= i <= n:
        raise ValueError(f"need 1 <= i <= n, got i={i}, n={n}")
    return GenWord(n, n, tuple(Generator(SIGMA, n, j) for j in range(1, i)))


def probe_surjection(n: int, j: int) -> FinMap:
    """The surjection n+1 -> n sending 1 to j and x to x-1 otherwise.

    Its realization on iterated tangent spaces probes linearity in
    position j; it factors as sigma_cycle(n+1, j) followed by the
    codegeneracy at j.
    """
    if not 1 <= j <= n:
        raise ValueError(f"need 1 <= j <= n, got j={j}, n={n}")
    return FinMap(n + 1, n, (j,) + tuple(range(1, n + 1)))


@dataclass(frozen=True)
class Classification:
    surjective: bool
    bijective: bool
    order_preserving: bool


def classify(f: FinMap) -> Classification:
    hit = set(f.table)
    surjective = len(hit) == f.cod
    bijective = surjective and f.dom == f.cod
    order_preserving = all(f.table[i] <= f.table[i + 1] for i in range(f.dom - 1))
    return Classification(surjective, bijective, order_preserving)


def _permutation_word(perm: FinMap) -> list[Generator]:
    """Decompose a permutation into adjacent transpositions by insertion sort.

    Performing the swap at position j on the table turns u into sigma_j; u,
    so the swaps recorded in application order spell the word for u itself.
    """
    n = perm.dom
    table = list(perm.table)
    word: list[Generator] = []
    for upper in range(n, 1, -1):
        for j in range(1, upper):
            if table[j - 1] > table[j]:
                table[j - 1], table[j] = table[j], table[j - 1]
                word.append(Generator(SIGMA, n, j))
    return word


def _monotone_surjection_word(table: list[int]) -> list[Generator]:
    """Codegeneracy word for an order-preserving surjection, smallest index first."""
    word: list[Generator] = []
    cur = list(table)
    while len(cur) > len(set(cur)):
        j = next(x for x in range(1, len(cur)) if cur[x - 1] == cur[x])
        word.append(Generator(EPSILON, len(cur) - 1, j))
        del cur[j]
    return word


def factor_surjection(f: FinMap) -> GenWord:
    """Factor a surjection as a permutation word followed by codegeneracies.

    The permutation part sorts the table stably by (value, position); the
    order-preserving part merges equal neighbours smallest index first.
    The contract is the round trip eval_word(factor_surjection(f)) == f.
    """
    if not classify(f).surjective:
        raise ValueError(f"{f!r} is not surjective")
    order = sorted(range(1, f.dom + 1), key=lambda x: (f.table[x - 1], x))
    rank = [0] * f.dom
    for pos, x in enumerate(order, start=1):
        rank[x - 1] = pos
    perm = FinMap(f.dom, f.dom, tuple(rank))
    word = _permutation_word(perm)
    word.extend(_monotone_surjection_word(sorted(f.table)))
    return GenWord(f.dom, f.cod, tuple(word))


def _coface_word(n: int, i: int) -> list[Generator]:
    """delta_i at level n through the fundamental coface: delta_1 then a sigma cycle."""
    word = [Generator(DELTA, n, 1)]
    word.extend(Generator(SIGMA, n + 1, j) for j in range(1, i))
    return word


def factor_map(f: FinMap) -> GenWord:
    """Factor an arbitrary map through epsilon, sigma, and delta-at-index-1.

    Splits f as a surjection onto its image followed by the monotone
    injection enumerating the image, then rewrites every coface through
    the fundamental one.
    """
    image = sorted(set(f.table))
    r = len(image)
    pos = {v: p for p, v in enumerate(image, start=1)}
    surj = FinMap(f.dom, r, tuple(pos[v] for v in f.table))
    word = list(factor_surjection(surj).gens)
    missing = [v for v in range(1, f.cod + 1) if v not in pos]
    # Insert missing values top-down: the k-th smallest missing value m_k is
    # inserted at level cod-k with its index shifted by the k-1 smaller ones.
    q = len(missing)
    for k in range(q, 0, -1):
        level = f.cod - k
        word.extend(_coface_word(level, missing[k - 1] - (k - 1)))
    return GenWord(f.dom, f.cod, tuple(word))


def all_maps(dom: int, cod: int) -> Iterator[FinMap]:
    """All maps dom -> cod (none unless dom == 0 when cod == 0)."""
    if dom == 0:
        yield FinMap(0, cod, ())
        return
    if cod == 0:
        return
    for table in product(range(1, cod + 1), repeat=dom):
        yield FinMap(dom, cod, table)


def all_surjections(dom: int, cod: int) -> Iterator[FinMap]:
    for f in all_maps(dom, cod):
        if len(set(f.table)) == cod:
            yield f


@dataclass(frozen=True)
class RelationReport:
    """Outcome of sweeping one relation family up to a level bound.

    Failures are accumulated, never raised, so a corrupted realization
    shows every broken instance.
    """

    family: str
    bound: int
    checked: int
    failures: tuple[dict, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        state = "ok" if self.ok else f"{len(self.failures)} FAILURES"
        return f"{self.family}: {self.checked} instances, {state}"


Realize = Callable[[Generator], FinMap]


def _word(realize: Realize, *gens: Generator) -> FinMap:
    out = identity(gens[0].map_dom) if gens else None
    for g in gens:
        m = realize(g)
        out = m if out is None else compose(out, m)
    return out


def _relation_instances(family: str, max_n: int) -> Iterator[tuple[dict, tuple[Generator, ...], tuple[Generator, ...] | int]]:
    """Yield (params, lhs word, rhs word-or-identity-level) for one family.

    An int on the right-hand side stands for the identity at that cardinal.
    """
    E, D, S = EPSILON, DELTA, SIGMA
    g = Generator
    if family == "pure-codegeneracy":
        # eps_i ; eps_j = eps_{j+1} ; eps_i   (i <= j)
        for n in range(1, max_n + 1):
            for j in range(1, n + 1):
                for i in range(1, j + 1):
                    yield ({"n": n, "i": i, "j": j},
                           (g(E, n + 1, i), g(E, n, j)),
                           (g(E, n + 1, j + 1), g(E, n, i)))
    elif family == "pure-coface":
        # delta_j ; delta_i = delta_i ; delta_{j+1}   (i <= j)
        for n in range(0, max_n + 1):
            for j in range(1, n + 2):
                for i in range(1, j + 1):
                    yield ({"n": n, "i": i, "j": j},
                           (g(D, n, j), g(D, n + 1, i)),
                           (g(D, n, i), g(D, n + 1, j + 1)))
    elif family == "coface-codegeneracy":
        # delta_i ; eps_j = eps_{j-1}; delta_i | 1 | eps_j; delta_{i-1}
        for n in range(1, max_n + 1):
            for i in range(1, n + 2):
                for j in range(1, n + 1):
                    params = {"n": n, "i": i, "j": j}
                    lhs = (g(D, n, i), g(E, n, j))
                    if i < j:
                        yield (params, lhs, (g(E, n - 1, j - 1), g(D, n - 1, i)))
                    elif i in (j, j + 1):
                        yield (params, lhs, n)
                    else:
                        yield (params, lhs, (g(E, n - 1, j), g(D, n - 1, i - 1)))
    elif family == "moore-involution":
        for n in range(2, max_n + 1):
            for i in range(1, n):
                yield ({"n": n, "i": i}, (g(S, n, i), g(S, n, i)), n)
    elif family == "moore-braid":
        for n in range(3, max_n + 1):
            for i in range(1, n - 1):
                yield ({"n": n, "i": i},
                       (g(S, n, i), g(S, n, i + 1), g(S, n, i)),
                       (g(S, n, i + 1), g(S, n, i), g(S, n, i + 1)))
    elif family == "moore-commute":
        for n in range(2, max_n + 1):
            for j in range(1, n):
                for i in range(1, j - 1):
                    yield ({"n": n, "i": i, "j": j},
                           (g(S, n, j), g(S, n, i)),
                           (g(S, n, i), g(S, n, j)))
    elif family == "codegeneracy-symmetry":
        for n in range(2, max_n + 1):
            # eps_j ; sig_i = sig_i ; eps_j           (i < j - 1)
            for j in range(1, n + 1):
                for i in range(1, min(j - 1, n)):
                    yield ({"n": n, "i": i, "j": j, "case": "far-below"},
                           (g(E, n, j), g(S, n, i)),
                           (g(S, n + 1, i), g(E, n, j)))
            # eps_i ; sig_i = sig_{i+1} ; sig_i ; eps_{i+1}
            for i in range(1, n):
                yield ({"n": n, "i": i, "case": "clash"},
                       (g(E, n, i), g(S, n, i)),
                       (g(S, n + 1, i + 1), g(S, n + 1, i), g(E, n, i + 1)))
            # eps_j ; sig_i = sig_{i+1} ; eps_j       (i > j)
            for j in range(1, n + 1):
                for i in range(j + 1, n):
                    yield ({"n": n, "i": i, "j": j, "case": "above"},
                           (g(E, n, j), g(S, n, i)),
                           (g(S, n + 1, i + 1), g(E, n, j)))
            # sig_i ; eps_i = eps_i
            for i in range(1, n + 1):
                yield ({"n": n, "i": i, "case": "absorb"},
                       (g(S, n + 1, i), g(E, n, i)),
                       (g(E, n, i),))
    elif family == "coface-symmetry":
        for n in range(1, max_n + 1):
            # delta_j ; sig_i = sig_i ; delta_j       (i < j - 1)
            for j in range(1, n + 2):
                for i in range(1, min(j - 1, n)):
                    yield ({"n": n, "i": i, "j": j, "case": "far-below"},
                           (g(D, n, j), g(S, n + 1, i)),
                           (g(S, n, i), g(D, n, j)))
            # delta_i ; sig_i = delta_{i+1}
            for i in range(1, n + 1):
                yield ({"n": n, "i": i, "case": "shift"},
                       (g(D, n, i), g(S, n + 1, i)),
                       (g(D, n, i + 1),))
            # delta_j ; sig_i = sig_{i-1} ; delta_j   (i > j)
            for j in range(1, n + 2):
                for i in range(j + 1, n + 1):
                    yield ({"n": n, "i": i, "j": j, "case": "above"},
                           (g(D, n, j), g(S, n + 1, i)),
                           (g(S, n, i - 1), g(D, n, j)))
    elif family == "fundamental-coface-codegeneracy":
        # delta_1 ; eps_1 = 1   and   delta_1 ; eps_{j+1} = eps_j ; delta_1
        for n in range(1, max_n + 1):
            yield ({"n": n, "case": "retract"}, (g(D, n, 1), g(E, n, 1)), n)
            for j in range(1, n + 1):
                yield ({"n": n, "j": j, "case": "slide"},
                       (g(D, n + 1, 1), g(E, n + 1, j + 1)),
                       (g(E, n, j), g(D, n, 1)))
    elif family == "fundamental-coface-symmetry":
        # delta_1 ; delta_1 ; sig_1 = delta_1 ; delta_1   and
        # delta_1 ; sig_{i+1} = sig_i ; delta_1
        for n in range(0, max_n + 1):
            yield ({"n": n, "case": "square"},
                   (g(D, n, 1), g(D, n + 1, 1), g(S, n + 2, 1)),
                   (g(D, n, 1), g(D, n + 1, 1)))
            for i in range(1, n):
                yield ({"n": n, "i": i, "case": "slide"},
                       (g(D, n, 1), g(S, n + 1, i + 1)),
                       (g(S, n, i), g(D, n, 1)))
    else:
        raise ValueError(f"unknown relation family {family!r}")


RELATION_FAMILIES = (
    "pure-codegeneracy",
    "pure-coface",
    "coface-codegeneracy",
    "moore-involution",
    "moore-braid",
    "moore-commute",
    "codegeneracy-symmetry",
    "coface-symmetry",
    "fundamental-coface-codegeneracy",
    "fundamental-coface-symmetry",
)


def check_relations(max_n: int,
                    families: Iterable[str] = RELATION_FAMILIES,
                    realize: Realize = generator_map) -> list[RelationReport]:
    """Exhaustively verify every relation family for all levels up to max_n.

    Both sides of each instance are realized as tables and compared for
    exact equality.  The optional ``realize`` hook lets tests corrupt a
    generator realization and watch the sweep catch it.
    """
    if max_n < 2:
        raise ValueError("need max_n >= 2 to see every family")
    reports = []
    for family in families:
        checked = 0
        failures = []
        for params, lhs, rhs in _relation_instances(family, max_n):
            checked += 1
            left = _word(realize, *lhs)
            right = identity(rhs) if isinstance(rhs, int) else _word(realize, *rhs)
            if left != right:
                failures.append({"family": family, **params,
                                 "lhs": list(left.table), "rhs": list(right.table)})
        reports.append(RelationReport(family, max_n, checked, tuple(failures)))
    return reports
