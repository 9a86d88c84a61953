"""Corpus-level estimation of adposition attachment direction.

Whether ADP tokens behave as prepositions (head to their right) or
postpositions (head to their left) is decided by counting adjacent
ADP/nominal token pairs over the whole input, with nominal meaning NOUN,
PROPN, or PRON.  Bigrams never cross sentence boundaries.
"""

from dataclasses import dataclass
from typing import Iterable

from .conllu import Sentence
from .rules import Direction, is_nominal


@dataclass(frozen=True)
class AdpDirectionEstimate:
    adp_nominal_count: int
    nominal_adp_count: int

    @property
    def resolved(self) -> Direction:
        """Majority direction; ties (including no ADP at all) go right."""
        if self.adp_nominal_count >= self.nominal_adp_count:
            return Direction.RIGHT
        return Direction.LEFT


def estimate_adp_direction(corpus: Iterable[Sentence]) -> AdpDirectionEstimate:
    """Count ADP-nominal and nominal-ADP adjacencies across the corpus."""
    adp_nominal = 0
    nominal_adp = 0
    for sentence in corpus:
        for left, right in zip(sentence.tokens, sentence.tokens[1:]):
            if left.upos == "ADP" and is_nominal(right.upos):
                adp_nominal += 1
            if is_nominal(left.upos) and right.upos == "ADP":
                nominal_adp += 1
    return AdpDirectionEstimate(adp_nominal, nominal_adp)
