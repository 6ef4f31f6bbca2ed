"""Shared fixtures: the (3,3) and (4,4) desk-scale models at fixed generic q."""

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from chiral_potts_curve import is_generic_q, point_from_lambda  # noqa: E402
from drinfeld_polynomial import build_drinfeld  # noqa: E402
from transfer_matrices import enumerate_basis  # noqa: E402


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: the (3,6) sector with a 243×243 matrix")


class Model:
    def __init__(self, N, L, kprime, lam_q):
        self.N, self.L, self.kprime = N, L, kprime
        self.dd = build_drinfeld(N, L, kprime)
        self.p = self.dd.p
        self.basis = enumerate_basis(N, L)
        self.q = point_from_lambda(kprime, lam_q, N)
        self.q2 = point_from_lambda(kprime, 0.7 - 0.9j, N)
        assert is_generic_q(self.q, self.p, kprime)
        assert is_generic_q(self.q2, self.p, kprime)


@pytest.fixture(scope="session")
def model33():
    return Model(3, 3, 0.3, 1.3 + 0.4j)


@pytest.fixture(scope="session")
def model44():
    return Model(4, 4, 0.5, 1.4 + 0.3j)


@pytest.fixture(scope="session", params=["model33", "model44"])
def model(request):
    return request.getfixturevalue(request.param)
