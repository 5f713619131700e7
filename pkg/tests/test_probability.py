from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lingkit.errors import EmptyDistribution, InvalidBins
from lingkit.probability import (
    CondFreqDist,
    FreqDist,
    LidstoneProbDist,
    MleProbDist,
    ele,
    laplace,
)


def test_increment():
    fd = FreqDist()
    fd.increment("a")
    assert fd.count("a") == 1 and fd.N == 1
    fd.increment("a", 2)
    assert fd.count("a") == 3 and fd.N == 3
    fd.increment("b")
    assert fd.count("b") == 1 and fd.N == 4
    with pytest.raises(ValueError):
        fd.increment("a", 0)


def test_freq_is_exact():
    fd = FreqDist({"a": 2, "b": 1})
    assert fd.freq("a") == Fraction(2, 3)
    assert FreqDist().freq("a") == 0
    assert FreqDist({"a": 5}).freq("b") == 0
    # exactness: freq * N recovers the count with no rounding
    assert fd.freq("a") * fd.N == 2


def test_max_and_ties():
    assert FreqDist({"a": 2, "b": 1}).max() == "a"
    assert FreqDist({"a": 1, "b": 1}).max() == "a"
    with pytest.raises(EmptyDistribution):
        FreqDist().max()


def test_mle():
    pd = MleProbDist(FreqDist({"a": 2, "b": 1}))
    assert pd.prob("a") == pytest.approx(2 / 3)
    assert pd.prob("c") == 0.0
    with pytest.raises(EmptyDistribution):
        MleProbDist(FreqDist())


def test_lidstone_formulas():
    # Laplace over {a:2, b:1} with 2 bins: (2+1)/(3+2)
    pd = laplace(FreqDist({"a": 2, "b": 1}), bins=2)
    assert pd.prob("a") == pytest.approx(0.6)
    # no data, gamma=. 5, 4 bins: 0.5 / 2
    pd = ele(FreqDist(), bins=4)
    assert pd.prob("anything") == pytest.approx(0.25)
    with pytest.raises(InvalidBins):
        LidstoneProbDist(FreqDist({"a": 1}), 1.0, bins=0)
    with pytest.raises(InvalidBins):
        LidstoneProbDist(FreqDist({"a": 1, "b": 1}), 1.0, bins=1)
    with pytest.raises(ValueError):
        LidstoneProbDist(FreqDist({"a": 1}), 0.0, bins=2)


COUNTS = st.dictionaries(
    st.text(alphabet="abcdefgh", min_size=1, max_size=3),
    st.integers(min_value=1, max_value=40),
    min_size=0,
    max_size=6,
)


@given(COUNTS, st.integers(min_value=0, max_value=5), st.sampled_from([0.1, 0.5, 1.0, 3.0]))
def test_lidstone_sums_to_one(counts, extra_bins, gamma):
    fd = FreqDist(counts)
    bins = len(fd) + extra_bins
    if bins == 0:
        bins = 1
    pd = LidstoneProbDist(fd, gamma, bins)
    total = sum(pd.prob(o) for o in fd.outcomes())
    total += (bins - len(fd)) * pd.prob("\x00unseen")
    assert total == pytest.approx(1.0, abs=1e-9)


@given(COUNTS.filter(lambda c: c))
def test_mle_sums_to_one(counts):
    pd = MleProbDist(FreqDist(counts))
    assert sum(pd.prob(o) for o in counts) == pytest.approx(1.0, abs=1e-9)


@given(COUNTS.filter(lambda c: c))
def test_lidstone_limit_is_mle(counts):
    fd = FreqDist(counts)
    mle = MleProbDist(fd)
    tiny = LidstoneProbDist(fd, 1e-8, bins=len(fd))
    for outcome in fd.outcomes():
        assert abs(tiny.prob(outcome) - mle.prob(outcome)) < 1e-6


def test_cond_freq_dist():
    cfd = CondFreqDist()
    cfd["the"].increment("DT")
    cfd["the"].increment("DT")
    cfd["run"].increment("VB")
    assert cfd["the"].max() == "DT"
    assert "run" in cfd and "dog" not in cfd
    assert cfd.conditions() == ["run", "the"]
