"""Shared oracle-style generators for the test suite."""

import random
from fractions import Fraction

from sectorforms.fincard import (
    EPSILON,
    SIGMA,
    FinMap,
    GenWord,
    Generator,
    compose as fc_compose,
    generator_map,
    identity,
)
from sectorforms.poly import Poly, PolyMap
from sectorforms.sector import (
    SectorForm,
    codegeneracy,
    coface,
    form_from_coefficients,
    is_sector_form,
    symmetry,
)
from sectorforms.tangent import TangentCoords


def set_partitions(elements):
    """All partitions of a list into nonempty blocks (Bell-number many)."""
    elements = list(elements)
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def random_base_poly(rng, m, d):
    terms = {}
    for _ in range(rng.randint(1, 3)):
        exp = [0] * m
        for _ in range(rng.randint(0, d)):
            exp[rng.randrange(m)] += 1
        if sum(exp) <= d:
            terms[tuple(exp)] = terms.get(tuple(exp), 0) + Fraction(rng.randint(-3, 3))
    return Poly(m, terms)


def random_sector_form(rng, n, m, d, nterms=3):
    """A random linear combination of partition-monomial sector forms.

    Membership is re-checked exactly, so the generator cannot silently
    drift outside the space it claims to sample.
    """
    partitions = list(set_partitions(range(1, n + 1)))
    tc = TangentCoords(m, n)
    blocks = {}
    for _ in range(nterms):
        part = partitions[rng.randrange(len(partitions))]
        coords = tuple(sorted(tc.index(rng.randint(1, m), frozenset(b)) for b in part))
        coeff = random_base_poly(rng, m, d)
        blocks[coords] = blocks.get(coords, Poly.zero(m)) + coeff
    form = form_from_coefficients(n, m, blocks)
    assert is_sector_form(form)
    return form


def random_finmap(rng, dom, cod):
    return FinMap(dom, cod, tuple(rng.randint(1, cod) for _ in range(dom)))


def random_surjection(rng, dom, cod):
    entries = list(range(1, cod + 1)) + [rng.randint(1, cod) for _ in range(dom - cod)]
    rng.shuffle(entries)
    return FinMap(dom, cod, tuple(entries))


def randomized_factorization(rng, u):
    """Peel random generators off the left of a surjection.

    An independent factorization used to cross-check the deterministic
    one: at each step pick any admissible merge (equal neighbours) or
    swap (inverted neighbours) uniformly at random.
    """
    gens = []
    cur = u
    while True:
        moves = []
        for j in range(1, cur.dom):
            if cur.table[j - 1] == cur.table[j]:
                moves.append((EPSILON, j))
            if cur.table[j - 1] > cur.table[j]:
                moves.append((SIGMA, j))
        if not moves:
            assert cur == identity(cur.dom)
            return GenWord(u.dom, u.cod, tuple(gens))
        kind, j = moves[rng.randrange(len(moves))]
        if kind == SIGMA:
            g = Generator(SIGMA, cur.dom, j)
            gens.append(g)
            cur = fc_compose(generator_map(g), cur)
        else:
            g = Generator(EPSILON, cur.dom - 1, j)
            gens.append(g)
            table = list(cur.table)
            del table[j]
            cur = FinMap(cur.dom - 1, cur.cod, tuple(table))


def apply_generator_word(form, gens):
    """Act on a sector form by an explicit generator word, operator by operator."""
    out = form
    for g in gens:
        if g.kind == EPSILON:
            out = codegeneracy(out, g.i, validate=False)
        elif g.kind == SIGMA:
            out = symmetry(out, g.i, validate=False)
        else:
            out = coface(out, g.i, validate=False)
    return out
