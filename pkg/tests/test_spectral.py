import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _oracles import spectrum_dense
from k2tspread.graph import (
    Graph,
    circulant,
    copies,
    extremal_graph,
    join,
    make_complete,
    make_empty,
    make_path,
)
from k2tspread.spectral import (
    join_regular_spectrum,
    nikiforov_bound,
    rayleigh,
    spectrum,
    spread,
    spread_closed_form,
)


def test_small_spectra():
    np.testing.assert_allclose(spectrum(make_complete(3)).eigenvalues, [2, -1, -1], atol=1e-12)
    np.testing.assert_allclose(spectrum(make_path(3)).eigenvalues, [math.sqrt(2), 0, -math.sqrt(2)], atol=1e-12)
    s = spectrum(join(make_complete(1), copies(make_complete(2), 3)))
    assert s.lambda1 == pytest.approx(3) and s.lambda_n == pytest.approx(-2)
    assert s.spread == pytest.approx(5)


def test_spread_basics():
    assert spread(make_empty(5)) == 0
    assert spread(make_complete(3)) == pytest.approx(3)
    with pytest.raises(ValueError):
        spectrum(make_empty(0))


def test_residual_certificate_reported():
    s = spectrum(extremal_graph(40, 3, 10))
    assert 0 <= s.max_residual < 1e-12


def test_join_spectrum_examples():
    np.testing.assert_allclose(join_regular_spectrum([0], 0, [0], 0), [1, -1])
    h = copies(make_complete(2), 3)
    got = join_regular_spectrum([0], 0, spectrum(h).eigenvalues, 1)
    np.testing.assert_allclose(got, [3, 1, 1, -1, -1, -1, -2], atol=1e-12)
    np.testing.assert_allclose(got, spectrum(join(make_complete(1), h)).eigenvalues, atol=1e-12)
    k2 = spectrum(make_complete(2)).eigenvalues
    np.testing.assert_allclose(join_regular_spectrum(k2, 1, k2, 1), [3, -1, -1, -1], atol=1e-12)
    with pytest.raises(ValueError):
        join_regular_spectrum([2, 0], 1, [0], 0)


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 14), st.integers(3, 14), st.data())
def test_join_spectrum_random_circulants(m, n, data):
    og = data.draw(st.sets(st.integers(1, m // 2), max_size=3))
    oh = data.draw(st.sets(st.integers(1, n // 2), max_size=3))
    g, h = circulant(m, og), circulant(n, oh)
    k, ell = g.degree(0), h.degree(0)
    got = join_regular_spectrum(spectrum(g).eigenvalues, k, spectrum(h).eigenvalues, ell)
    np.testing.assert_allclose(got, spectrum(join(g, h)).eigenvalues, atol=1e-8)


@pytest.mark.parametrize("q,t", [(3, 2), (1, 2), (5, 4), (2, 7)])
def test_closed_form_matches_dense(q, t):
    g = join(make_complete(1), copies(make_complete(t), q))
    assert spread(g) == pytest.approx(spread_closed_form(q, t), abs=1e-9)


def test_closed_form_degenerate_q0():
    # formula gives t - 1, not the spread of a lone vertex
    assert spread_closed_form(0, 2) == 1
    assert spread(make_complete(1)) == 0


def test_rayleigh():
    k2 = make_complete(2)
    assert rayleigh(k2, [1, 1]) == pytest.approx(1)
    assert rayleigh(k2, [1, -1]) == pytest.approx(-1)
    with pytest.raises(ValueError):
        rayleigh(k2, [0, 0])
    g = extremal_graph(30, 4, 5)
    s = spectrum(g)
    w = np.random.default_rng(0).normal(size=30)
    assert s.lambda_n - 1e-12 <= rayleigh(g, w) <= s.lambda1 + 1e-12


def test_nikiforov_bound_values():
    assert nikiforov_bound(1024, 3) == 33
    assert nikiforov_bound(100, 4) == pytest.approx(1.5 + math.sqrt(101.25))


def test_dense_oracle_agrees_on_random_graph():
    rng = np.random.default_rng(1)
    n = 25
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.3]
    np.testing.assert_allclose(spectrum(Graph.from_edges(n, edges)).eigenvalues, spectrum_dense(n, edges), atol=1e-10)
