"""Letter-level rewriting for the presented duals.

Words are tuples of letters: ``("G", group_word)``, ``("F2",)`` and ``("F1",)``.
The rules are the defining relations read left to right; irreducible words
are ``G F2^s F1^l`` with l below the nilpotency bound. Redexes are chosen in a
seeded random order, so agreement with ``PresentedDual.product`` across seeds
is a confluence check of the rule set.
"""

from __future__ import annotations

import logging
import random
from fractions import Fraction
from typing import Hashable, Sequence

from hopfdual.algebra.element import Element
from hopfdual.duals.presented import (
    SECTOR_X,
    SECTOR_Z,
    DPresented,
    LiuPresented,
    PresentedDual,
    TaftPresented,
)
from hopfdual.reporting.report import Report
from hopfdual.scalars.cyclotomic import CycloScalar, Scalar

__all__ = ["F1", "F2", "Letter", "Word", "group", "random_words", "rewrite", "verify_confluence"]

logger = logging.getLogger(__name__)

Letter = tuple
Word = tuple[Letter, ...]

F1: Letter = ("F1",)
F2: Letter = ("F2",)


def group(key: Hashable) -> Letter:
    return ("G", key)


def _is_group(letter: Letter) -> bool:
    return letter[0] == "G"


class _Rules:
    """Family-specific constants of the rewriting system."""

    def __init__(self, dual: PresentedDual):
        self.dual = dual
        self.ctx = dual.ctx
        self.bound = dual.nil_bound

    def twist(self, key: Hashable) -> CycloScalar:
        """F1 G = twist(G) G F1."""

        if isinstance(self.dual, TaftPresented):
            return self.dual.q**key.j
        if isinstance(self.dual, LiuPresented):
            return key.beta
        if key.sector == SECTOR_Z:
            return key.beta
        return key.alpha ** (-self.dual.params.d) * key.beta

    def commutator(self) -> list[tuple[Word, Scalar]]:
        """F1 F2 - F2 F1 as a combination of words."""

        dual = self.dual
        if isinstance(dual, LiuPresented):
            return [((group(dual.unit_key()), F1), Fraction(1, dual.params.n))]
        if isinstance(dual, DPresented):
            z11 = dual.word(SECTOR_Z).support()[0]
            return [((group(z11), F1), Fraction(1, dual.params.m))]
        return []

    def nil_run(self) -> list[tuple[Word, Scalar]]:
        """F1^bound as a combination of words."""

        if isinstance(self.dual, DPresented):
            x11 = self.dual.word(SECTOR_X).support()[0]
            return [((group(x11),), self.dual.kappa)]
        return []

    def unit_words(self) -> list[Word]:
        return [(group(key),) for key in self.dual.unit().support()]


def _rewrites(rules: _Rules, word: Word) -> list[tuple[int, int, list[tuple[Word, Scalar]]]]:
    """Every redex as (start, end, replacement combination)."""

    out = []
    if not word or not _is_group(word[0]):
        out.append((0, 0, [(prefix, 1) for prefix in rules.unit_words()]))
    for i in range(len(word) - 1):
        a, b = word[i], word[i + 1]
        if _is_group(a) and _is_group(b):
            merged = rules.dual.mul_b(a[1], b[1])
            out.append((i, i + 2, [((group(key),), c) for key, c in merged.terms()]))
        elif a == F2 and _is_group(b):
            out.append((i, i + 2, [((b, F2), 1)]))
        elif a == F1 and _is_group(b):
            out.append((i, i + 2, [((b, F1), rules.twist(b[1]))]))
        elif a == F1 and b == F2:
            out.append((i, i + 2, [((F2, F1), 1), *rules.commutator()]))
    run = 0
    for i, letter in enumerate(word):
        run = run + 1 if letter == F1 else 0
        if run >= rules.bound:
            out.append((i + 1 - rules.bound, i + 1, rules.nil_run()))
    return out


def _normal_key(word: Word) -> Hashable:
    head, *rest = word
    s = sum(1 for letter in rest if letter == F2)
    return head[1]._replace(s=s, l=len(rest) - s)


def rewrite(dual: PresentedDual, word: Sequence[Letter], seed: int = 0) -> Element:
    """Reduce a letter word to normal-form words, picking redexes at random."""

    rules = _Rules(dual)
    rng = random.Random(seed)
    pending: dict[Word, CycloScalar] = {tuple(word): dual.ctx.one}
    done: list[tuple[Hashable, CycloScalar]] = []
    while pending:
        current, coeff = pending.popitem()
        if coeff.is_zero():
            continue
        redexes = _rewrites(rules, current)
        if not redexes:
            done.append((_normal_key(current), coeff))
            continue
        start, end, replacement = rng.choice(redexes)
        for middle, c in replacement:
            new = current[:start] + middle + current[end:]
            pending[new] = pending.get(new, dual.ctx.zero) + coeff * c
    return Element(done)


def letter_element(dual: PresentedDual, letter: Letter) -> Element:
    if _is_group(letter):
        return Element.basis(letter[1], dual.ctx.one)
    return dual.f1() if letter == F1 else dual.f2()


def random_words(
    dual: PresentedDual, samples: Sequence[Scalar], length: int, count: int, seed: int = 0
) -> list[Word]:
    """Seeded random words over the group letters of ``samples`` and F1, F2."""

    rng = random.Random(seed)
    groups = sorted({dual.group_part(w) for w in dual.sample_words(samples, 0)})
    alphabet: list[Letter] = [group(key) for key in groups] + [F2]
    if dual.has_f1:
        alphabet.append(F1)
    return [tuple(rng.choice(alphabet) for _ in range(length)) for _ in range(count)]


def verify_confluence(dual: PresentedDual, words: Sequence[Word], seeds: Sequence[int]) -> Report:
    """Every seed's reduction of every word equals the presented product."""

    report = Report(suite="rewriting", family=dual.family, params=dual.params.as_dict())
    structure = dual.structure()
    for word in words:
        expected = dual.product(*(letter_element(dual, letter) for letter in word))
        label = " ".join(letter[0] if not _is_group(letter) else dual.format_basis(letter[1]) for letter in word)
        for seed in seeds:
            got = rewrite(dual, word, seed)
            report.check(
                got == expected,
                lambda: f"seed {seed} reduces [{label}] to {structure.fmt(got)}, expected {structure.fmt(expected)}",
            )
    logger.debug("confluence on %s: %d cases, %d failed", dual.family, report.cases_total, report.cases_failed)
    return report
