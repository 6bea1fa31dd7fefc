import random
from fractions import Fraction

import pytest
from hypothesis import settings

from liebialg.bialgebra import coboundary_cocommutator, dual_bracket
from liebialg.catalog import lorentzian_2plus1, lorentzian_3plus1
from liebialg.duality import dual_splitting

settings.register_profile("liebialg", deadline=None, print_blob=True)
settings.load_profile("liebialg")


@pytest.fixture(scope="session")
def k21():
    return lorentzian_2plus1()


@pytest.fixture(scope="session")
def k31():
    return lorentzian_3plus1()


@pytest.fixture(scope="session")
def k21_dual(k21):
    delta = coboundary_cocommutator(k21.algebra, k21.r)
    return dual_bracket(delta), dual_splitting(k21.splitting)


def random_fraction(rng: random.Random, bound=9):
    return Fraction(rng.randint(-bound, bound), rng.randint(1, 4))


# acceptance criteria record one line each; printed in the terminal summary
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
