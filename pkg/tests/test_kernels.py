import importlib
import random

import pytest

from twistwarp import _kernels_py, kernels
from twistwarp.gauss import random_code

compiled = pytest.importorskip("twistwarp._kernels")


def test_backend_selected():
    assert kernels.BACKEND == "cython"


def test_backends_agree():
    rng = random.Random(5)
    for _ in range(300):
        c = random_code(rng, rng.randint(0, 12), rng.randint(0, 6), rng.randint(0, 2))
        kinds, ids, n = c.streams()
        assert list(compiled.warping_degrees(kinds, ids, n)) == \
            _kernels_py.warping_degrees(kinds, ids, n)
        assert list(compiled.arc_bar_parities(kinds, ids)) == \
            _kernels_py.arc_bar_parities(kinds, ids)


def test_empty_stream():
    assert list(compiled.warping_degrees([], [], 0)) == [0] == _kernels_py.warping_degrees([], [], 0)
    assert list(compiled.arc_bar_parities([], [])) == []


def test_environment_forces_fallback(monkeypatch):
    monkeypatch.setenv("TWISTWARP_PURE_PYTHON", "1")
    try:
        assert importlib.reload(kernels).BACKEND == "python"
    finally:
        monkeypatch.delenv("TWISTWARP_PURE_PYTHON")
        importlib.reload(kernels)
    assert kernels.BACKEND == "cython"
