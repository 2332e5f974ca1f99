"""Shared word generators for property tests (hypothesis strategies and seeded samplers)."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from pregroup.algebra import GeneratorPoset, PregroupWord, SimpleTerm

AB = GeneratorPoset.discrete(["a", "b"])
CHAIN = GeneratorPoset(["a", "b"], [("a", "b")])

terms = st.builds(SimpleTerm, st.sampled_from(["a", "b"]), st.integers(-2, 2))
words = st.lists(terms, max_size=6).map(lambda ts: PregroupWord(tuple(ts)))
posets = st.sampled_from([AB, CHAIN])


def step_below(w: PregroupWord, poset: GeneratorPoset, rng: random.Random) -> PregroupWord:
    """One rewriting step downward: splice in a pair (g, z)(g, z+1) or lower one term."""
    terms_ = list(w.terms)
    lowerable = []
    for i, t in enumerate(terms_):
        for h in poset.generators:
            if h == t.generator:
                continue
            even = t.adjoint_index % 2 == 0
            if (even and poset.leq(h, t.generator)) or (not even and poset.leq(t.generator, h)):
                lowerable.append((i, h))
    if lowerable and rng.random() < 0.4:
        i, h = rng.choice(lowerable)
        terms_[i] = SimpleTerm(h, terms_[i].adjoint_index)
    else:
        g = rng.choice(poset.generators)
        z = rng.randint(-2, 1)
        i = rng.randint(0, len(terms_))
        terms_[i:i] = [SimpleTerm(g, z), SimpleTerm(g, z + 1)]
    return PregroupWord(tuple(terms_))


def below(v: PregroupWord, poset: GeneratorPoset, rng: random.Random, steps: int | None = None) -> PregroupWord:
    """A word that lies below ``v`` by construction."""
    if steps is None:
        steps = rng.randint(0, 3)
    w = v
    for _ in range(steps):
        w = step_below(w, poset, rng)
    return w


@st.composite
def below_pairs(draw, poset_strategy=posets):
    """``(w, v, poset)`` with ``w <= v`` holding by construction."""
    poset = draw(poset_strategy)
    v = draw(st.lists(terms, max_size=4).map(lambda ts: PregroupWord(tuple(ts))))
    rng = random.Random(draw(st.integers(0, 2**32)))
    return below(v, poset, rng), v, poset


def random_word(rng: random.Random, max_len: int = 6, max_index: int = 2, gens=("a", "b")) -> PregroupWord:
    n = rng.randint(0, max_len)
    return PregroupWord(tuple(SimpleTerm(rng.choice(gens), rng.randint(-max_index, max_index)) for _ in range(n)))
