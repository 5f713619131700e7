"""Frequency distributions and smoothed probability estimates.

:class:`FreqDist` counts experiment outcomes; :class:`CondFreqDist`
groups frequency distributions under conditions.  Probability
distributions are built on top of a frozen frequency distribution:
maximum likelihood, or the Lidstone add-gamma family

    P(x) = (count(x) + gamma) / (N + gamma * B)

over ``B`` bins, of which the observed outcomes are a subset.  Laplace
smoothing is Lidstone with gamma = 1, the expected likelihood estimate
uses gamma = 0.5.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import EmptyDistribution, InvalidBins


class FreqDist:
    """Outcome counts for a single experiment.

    Absent outcomes count as zero; ``N`` is the total of all counts and
    is kept in step with every update.  Updates are single-writer: do
    not mutate a distribution while another thread reads it.
    """

    def __init__(self, counts: dict[str, int] | None = None):
        self._counts: dict[str, int] = {}
        self._n = 0
        if counts:
            for outcome, count in counts.items():
                self.increment(outcome, count)

    @property
    def N(self) -> int:
        return self._n

    def count(self, outcome: str) -> int:
        return self._counts.get(outcome, 0)

    def increment(self, outcome: str, by: int = 1) -> "FreqDist":
        if by < 1:
            raise ValueError(f"increment must be >= 1, got {by}")
        self._counts[outcome] = self._counts.get(outcome, 0) + by
        self._n += by
        return self

    def freq(self, outcome: str) -> Fraction:
        """Relative frequency count/N as an exact rational; 0 when empty."""
        if self._n == 0:
            return Fraction(0)
        return Fraction(self.count(outcome), self._n)

    def max(self) -> str:
        """The outcome with the highest count; ties go to the
        lexicographically smallest outcome."""
        if self._n == 0:
            raise EmptyDistribution("cannot take the max of an empty distribution")
        return min(self._counts, key=lambda o: (-self._counts[o], o))

    def outcomes(self) -> list[str]:
        return sorted(self._counts)

    def items(self):
        return self._counts.items()

    def __len__(self):
        return len(self._counts)

    def __contains__(self, outcome):
        return outcome in self._counts

    def __eq__(self, other):
        return isinstance(other, FreqDist) and self._counts == other._counts

    def __repr__(self):
        body = ", ".join(f"{o}: {c}" for o, c in sorted(self._counts.items()))
        return f"FreqDist({{{body}}})"


class CondFreqDist:
    """A frequency distribution per condition, created on first touch."""

    def __init__(self):
        self._table: dict[str, FreqDist] = {}

    def __getitem__(self, condition: str) -> FreqDist:
        if condition not in self._table:
            self._table[condition] = FreqDist()
        return self._table[condition]

    def __contains__(self, condition):
        return condition in self._table

    def conditions(self) -> list[str]:
        return sorted(self._table)

    def __len__(self):
        return len(self._table)


class ProbDist:
    """Interface: a probability for each outcome, summing to 1 over the bins."""

    def prob(self, outcome: str) -> float:
        raise NotImplementedError


class MleProbDist(ProbDist):
    """Maximum-likelihood estimate: P(x) = count(x)/N, unseen outcomes 0."""

    def __init__(self, freqdist: FreqDist):
        if freqdist.N == 0:
            raise EmptyDistribution("MLE needs at least one observation")
        self._fd = freqdist
        self.bins = len(freqdist)

    def prob(self, outcome: str) -> float:
        return self._fd.count(outcome) / self._fd.N

    def observed(self) -> list[str]:
        return self._fd.outcomes()


class LidstoneProbDist(ProbDist):
    """Add-gamma smoothing over a caller-supplied number of bins.

    The bin count is task knowledge (tag-set size, vocabulary size) and
    must cover at least the observed outcomes.  Every unseen bin gets
    probability gamma / (N + gamma * B).
    """

    def __init__(self, freqdist: FreqDist, gamma: float, bins: int):
        if gamma <= 0:
            raise ValueError(f"gamma must be positive, got {gamma}")
        if bins <= 0 or bins < len(freqdist):
            raise InvalidBins(f"bins must cover the {len(freqdist)} observed outcomes, got {bins}")
        self._fd = freqdist
        self.gamma = gamma
        self.bins = bins
        self._denom = freqdist.N + gamma * bins

    def prob(self, outcome: str) -> float:
        return (self._fd.count(outcome) + self.gamma) / self._denom

    def observed(self) -> list[str]:
        return self._fd.outcomes()


def laplace(freqdist: FreqDist, bins: int) -> LidstoneProbDist:
    """Laplace (add-one) estimate."""
    return LidstoneProbDist(freqdist, 1.0, bins)


def ele(freqdist: FreqDist, bins: int) -> LidstoneProbDist:
    """Expected likelihood estimate (add-half)."""
    return LidstoneProbDist(freqdist, 0.5, bins)
