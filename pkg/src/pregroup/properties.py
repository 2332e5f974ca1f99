"""
Engine-versus-oracle cross-checks over exhaustive word families.

A family is every word of length <= ``max_len`` over some generators with
adjoint indices in ``[-max_index, max_index]``. For each poset the oracle
closes 1 upward and downward once; every word's engine verdicts are then
compared against membership in those closures. Comparisons between two
arbitrary words use one upward closure per left-hand word.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .algebra import GeneratorPoset, PregroupWord, SimpleTerm, words_over
from .oracle import closure, oracle_down_closure, oracle_leq, oracle_up_closure
from .reduction import contracts_to_empty, expands_from_empty, leq


def generator_names(k: int) -> list[str]:
    return [chr(ord("a") + i) for i in range(k)]


def discrete_poset(k: int) -> GeneratorPoset:
    return GeneratorPoset.discrete(generator_names(k))


def chain_poset(k: int) -> GeneratorPoset:
    names = generator_names(k)
    return GeneratorPoset(names, list(zip(names, names[1:])))


@dataclass
class FamilyReport:
    """Exhaustive comparison of contraction/expansion verdicts with the oracle."""

    poset: GeneratorPoset
    max_len: int
    max_index: int
    words: int = 0
    below_one: int = 0
    above_one: int = 0
    mismatches: list[tuple[str, PregroupWord]] = field(default_factory=list)
    cycles: list[PregroupWord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches and not self.cycles


def check_family(poset: GeneratorPoset, max_len: int, max_index: int) -> FamilyReport:
    """
    Compare ``contracts_to_empty``, ``expands_from_empty`` and ``leq`` against
    1 on either side with the oracle on every word of the family, and record
    any nonempty word lying both above and below 1.
    """
    gens = list(poset.generators)
    down = oracle_down_closure(poset, gens, max_len, max_index)
    up = oracle_up_closure(poset, gens, max_len, max_index)
    report = FamilyReport(poset, max_len, max_index)
    unit = PregroupWord()
    for w in words_over(gens, max_len, max_index):
        report.words += 1
        below = contracts_to_empty(w, poset).holds
        above = expands_from_empty(w, poset).holds
        report.below_one += below
        report.above_one += above
        if below != (w in down):
            report.mismatches.append(("contracts_to_empty", w))
        if above != (w in up):
            report.mismatches.append(("expands_from_empty", w))
        if leq(w, unit, poset).holds != (w in down):
            report.mismatches.append(("leq(w, 1)", w))
        if leq(unit, w, poset).holds != (w in up):
            report.mismatches.append(("leq(1, w)", w))
        if below and above and len(w):
            report.cycles.append(w)
    return report


@dataclass
class PairReport:
    pairs: int = 0
    holding: int = 0
    inconclusive: int = 0
    direct_checks: int = 0
    mismatches: list[tuple[PregroupWord, PregroupWord]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches and not self.inconclusive


def _random_word(rng: random.Random, gens: list[str], max_len: int, max_index: int) -> PregroupWord:
    n = rng.randint(0, max_len)
    return PregroupWord(
        tuple(SimpleTerm(rng.choice(gens), rng.randint(-max_index, max_index)) for _ in range(n))
    )


def _padded_word(rng: random.Random, gens: list[str], max_len: int, max_index: int) -> PregroupWord:
    # a short core with primitive pairs (g, z)(g, z+1) spliced in, so that
    # reductions actually occur
    terms = list(_random_word(rng, gens, max(0, max_len - 2), max_index).terms)
    while len(terms) + 2 <= max_len and rng.random() < 0.8:
        g = rng.choice(gens)
        z = rng.randint(-max_index, max_index - 1)
        pair = [SimpleTerm(g, z), SimpleTerm(g, z + 1)]
        if rng.random() < 0.5:
            pair.reverse()
        i = rng.randint(0, len(terms))
        terms[i:i] = pair
    return PregroupWord(tuple(terms))


def check_pairs(
    poset: GeneratorPoset,
    max_len: int,
    max_index: int,
    pairs: int,
    seed: int = 0,
    per_word: int = 25,
    direct: int = 200,
) -> PairReport:
    """
    Compare ``leq(w, v)`` with rewriting on at least ``pairs`` sampled pairs.

    Left-hand words are half uniform, half built with spliced-in pairs. Each
    gets one bounded upward closure; right-hand words are drawn half from that
    closure and half uniformly. ``direct`` of the pairs are re-asked through
    :func:`oracle_leq` with its own default bounds.
    """
    rng = random.Random(seed)
    gens = list(poset.generators)
    window = (-max_index, max_index)
    report = PairReport()
    while report.pairs < pairs:
        if rng.random() < 0.5:
            w = _random_word(rng, gens, max_len, max_index)
        else:
            w = _padded_word(rng, gens, max_len, max_index)
        reach = closure(w, poset, max_len, window)
        if reach.step_bound_hit:
            report.inconclusive += 1
            continue
        pool = sorted(reach.reachable, key=lambda x: (len(x), x.terms))
        for i in range(per_word):
            if i % 2 == 0:
                v = rng.choice(pool)
            else:
                v = _random_word(rng, gens, max_len, max_index)
            expected = v in reach
            got = leq(w, v, poset).holds
            report.pairs += 1
            report.holding += got
            if got != expected:
                report.mismatches.append((w, v))
            if report.direct_checks < direct and i < 2:
                answer = oracle_leq(w, v, poset)
                report.direct_checks += 1
                if answer.inconclusive:
                    report.inconclusive += 1
                elif answer.holds != got:
                    report.mismatches.append((w, v))
    return report
