import random
import runpy
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mixedbraids import kernels, verification
from mixedbraids._pykernels import StepBudgetExceeded

needs_ext = pytest.mark.skipif("cython" not in kernels.BACKENDS, reason="compiled kernels not built")


def test_backend_selected():
    assert kernels.BACKEND in ("cython", "python")
    assert kernels.normal_form is kernels.BACKENDS[kernels.BACKEND].normal_form


@st.composite
def inputs(draw):
    n = draw(st.integers(1, 8))
    if n == 1:
        return 1, []
    letters = draw(st.lists(st.integers(1, n - 1).flatmap(lambda i: st.sampled_from((i, -i))), max_size=40))
    return n, letters


@needs_ext
@given(inputs())
def test_backends_agree(case):
    n, letters = case
    py, cy = kernels.BACKENDS["python"], kernels.BACKENDS["cython"]
    assert py.normal_form(n, list(letters), 10**6) == cy.normal_form(n, list(letters), 10**6)
    assert py.crossing_sums(n, list(letters)) == cy.crossing_sums(n, list(letters))


@pytest.mark.parametrize("name", ["python", "cython"])
def test_budget_raises(name):
    if name not in kernels.BACKENDS:
        pytest.skip("compiled kernels not built")
    backend = kernels.BACKENDS[name]
    letters = [1, 2, 3, 4] * 30
    with pytest.raises(StepBudgetExceeded):
        backend.normal_form(5, letters, 3)


def test_python_normal_form_shape():
    rng = random.Random(2)
    for _ in range(50):
        n = rng.randint(2, 6)
        letters = [rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(rng.randint(0, 20))]
        p, factors, steps = kernels.BACKENDS["python"].normal_form(n, letters, 10**6)
        assert steps >= 0
        ident = tuple(range(n))
        # no identity factors and no leading Delta remain
        assert all(f != ident for f in factors)
        assert all(f != ident[::-1] for f in factors[:1])


def test_suites_on_python_fallback(monkeypatch):
    py = kernels.BACKENDS["python"]
    monkeypatch.setattr(kernels, "normal_form", py.normal_form)
    monkeypatch.setattr(kernels, "crossing_sums", py.crossing_sums)
    for res in (verification.center_identities(), verification.word_problem(pairs=100),
                verification.conjugation_equivariance(trials=200)):
        assert res.passed, res.failures[:5]


def test_benchmark_script_runs(capsys):
    bench = runpy.run_path(str(Path(__file__).parents[1] / "benchmarks" / "bench_kernels.py"))
    bench["main"](["--words", "2", "--repeat", "1"])
    assert "normal_form" in capsys.readouterr().out
