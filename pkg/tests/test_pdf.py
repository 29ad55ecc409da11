"""PDF estimation against brute-force counting."""

import math
import warnings

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import naive
from ordinalis import (
    EmbeddingParams,
    InsufficientDataError,
    InvalidPdfError,
    OrdinalPdf,
    ShortSeriesWarning,
    estimate_pdf,
)


def quiet_pdf(series, params):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ShortSeriesWarning)
        return estimate_pdf(series, params)


class TestEstimatePdf:
    def test_monotone_series_is_delta(self):
        pdf = quiet_pdf(np.arange(1, 101, dtype=float), EmbeddingParams(4))
        assert pdf.n_windows == 97
        assert pdf.probs[0] == 1.0
        assert not pdf.probs[1:].any()
        assert pdf.counts[0] == 97

    def test_small_series_counts(self):
        pdf = quiet_pdf([3, 1, 2, 5, 4], EmbeddingParams(3))
        assert pdf.n_windows == 3
        expected = np.zeros(6)
        expected[[4, 0, 2]] = 1 / 3
        assert np.array_equal(pdf.probs, expected)

    def test_uniform_construction(self):
        # alternating series hits both length-2 patterns equally often
        pdf = quiet_pdf([0.0, 1.0, 0.0, 1.0, 0.0], EmbeddingParams(2))
        assert np.array_equal(pdf.probs, np.array([0.5, 0.5]))

    def test_too_short(self):
        with pytest.raises(InsufficientDataError):
            estimate_pdf([1.0, 2.0], EmbeddingParams(4))

    def test_short_series_warns_but_works(self):
        with pytest.warns(ShortSeriesWarning):
            pdf = estimate_pdf(np.arange(100.0), EmbeddingParams(5))
        assert pdf.n_windows == 96

    def test_default_window_size_does_not_warn(self):
        with warnings.catch_warnings():
            warnings.simplefilter("error", ShortSeriesWarning)
            estimate_pdf(np.arange(300.0), EmbeddingParams(4))

    def test_nan_windows_skipped(self):
        series = np.array([1.0, 2.0, np.nan, 3.0, 1.0, 2.0, 4.0])
        pdf = quiet_pdf(series, EmbeddingParams(2))
        # pairs (1,2) (2,nan) (nan,3) (3,1) (1,2) (2,4)
        assert pdf.n_windows == 4
        assert pdf.n_skipped == 2
        assert pdf.counts.sum() == 4
        counts, n_valid, n_skipped = naive.pdf_counts(series.tolist(), 2, 1)
        assert n_valid == 4 and n_skipped == 2
        assert {i: int(c) for i, c in enumerate(pdf.counts) if c} == dict(counts)

    def test_all_nan_raises(self):
        with pytest.raises(InsufficientDataError):
            quiet_pdf([np.nan] * 10, EmbeddingParams(3))

    def test_probs_are_read_only(self):
        pdf = quiet_pdf([3, 1, 2, 5, 4], EmbeddingParams(3))
        with pytest.raises(ValueError):
            pdf.probs[0] = 0.5


class TestOracleEquivalence:
    @settings(max_examples=200, deadline=None)
    @given(
        data=st.lists(
            st.one_of(
                st.integers(min_value=0, max_value=5).map(float),
                st.floats(min_value=-100, max_value=100, allow_nan=False),
            ),
            min_size=8,
            max_size=120,
        ),
        d=st.integers(min_value=2, max_value=4),
        tau=st.integers(min_value=1, max_value=2),
    )
    def test_counts_match_naive_sort(self, data, d, tau):
        params = EmbeddingParams(d, tau)
        if len(data) < params.span:
            return
        pdf = quiet_pdf(np.array(data), params)
        counts, n_valid, n_skipped = naive.pdf_counts(data, d, tau)
        assert pdf.n_windows == n_valid
        assert pdf.n_skipped == n_skipped
        for state in range(params.n_states):
            assert pdf.counts[state] == counts.get(state, 0)
        # probs come from the same integer division
        assert np.array_equal(pdf.probs, pdf.counts / n_valid)


@settings(max_examples=100, deadline=None)
@given(
    data=st.lists(st.floats(min_value=-1e6, max_value=1e6, allow_nan=False),
                  min_size=10, max_size=200),
    d=st.integers(min_value=2, max_value=4),
)
def test_normalization_and_integer_counts(data, d):
    pdf = quiet_pdf(np.array(data), EmbeddingParams(d))
    assert abs(float(pdf.probs.sum()) - 1.0) <= 1e-12
    assert ((pdf.probs >= 0) & (pdf.probs <= 1)).all()
    recovered = pdf.probs * pdf.n_windows
    assert np.abs(recovered - np.round(recovered)).max() < 1e-9
    assert pdf.n_states == math.factorial(d)


class TestOrdinalPdfValidation:
    def test_from_probs_checks_sum(self):
        with pytest.raises(InvalidPdfError):
            OrdinalPdf.from_probs([0.5, 0.6])

    def test_from_probs_accepts_valid(self):
        pdf = OrdinalPdf.from_probs([0.25, 0.75])
        assert pdf.n_states == 2

    def test_rejects_negative_entries(self):
        with pytest.raises(InvalidPdfError):
            OrdinalPdf(probs=np.array([-0.1, 1.1]), n_states=2, n_windows=2)

    def test_rejects_wrong_length(self):
        with pytest.raises(InvalidPdfError):
            OrdinalPdf(probs=np.array([1.0]), n_states=2, n_windows=1)

    def test_rejects_count_mismatch(self):
        with pytest.raises(InvalidPdfError):
            OrdinalPdf(
                probs=np.array([0.5, 0.5]),
                n_states=2,
                n_windows=4,
                counts=np.array([1, 1]),
            )
