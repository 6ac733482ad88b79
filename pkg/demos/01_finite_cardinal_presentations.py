"""Finite cardinals, their generators, and machine-checked presentations.

The category of finite cardinals has objects 0, 1, 2, ... and all maps
between them, stored here as explicit tables.  Three families of
generators build every map:

    epsilon  (merge two neighbours)   n+1 -> n
    delta    (skip a value)           n   -> n+1
    sigma    (swap two neighbours)    n   -> n

Run me:  python3 demos/01_finite_cardinal_presentations.py
"""

from sectorforms import (
    FinMap,
    Generator,
    check_relations,
    classify,
    compose_finmap,
    eval_word,
    factor_map,
    factor_surjection,
    generator_map,
    monoidal_sum,
    probe_surjection,
    sigma_cycle,
)

# -- maps are tables, composition is table lookup -----------------------

f = FinMap(3, 2, (2, 1, 1))
g = FinMap(2, 2, (2, 1))
print("f =", f)
print("g =", g)
print("f ; g =", compose_finmap(f, g))
print("classify(f):", classify(f))

# the monoidal sum places two maps side by side
swap = generator_map(Generator("sigma", 2, 1))
print("1 + swap =", monoidal_sum(FinMap(1, 1, (1,)), swap), "(the swap of 2,3 inside 3)")

# -- generators realize to concrete tables -------------------------------

merge = generator_map(Generator("epsilon", 2, 1))
skip = generator_map(Generator("delta", 2, 1))
print("\nepsilon(2,1) =", merge)
print("delta(2,1)   =", skip)
print("sigma cycle (3 2 1) on 1..4 =", sigma_cycle(4, 3))
print("probe surjection 4 -> 3 at j = 2:", probe_surjection(3, 2))

# -- every surjection factors through merges and swaps --------------------

word = factor_surjection(f)
print("\nfactor_surjection(f) =", list(word.gens))
print("round trip ok:", eval_word(word) == f)

# arbitrary maps also need the fundamental skip at index 1
inj = FinMap(1, 2, (1,))
word2 = factor_map(inj)
print("factor_map([1]: 1->2) =", list(word2.gens))
print("round trip ok:", eval_word(word2) == inj)

# -- the presentations hold: exhaustive relation sweep --------------------

print("\nrelation sweep up to level 6:")
for report in check_relations(6):
    print(" ", report.summary())
