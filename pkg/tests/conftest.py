import random

import pytest

from lensplumb import GF, QQ, validate_spec

ACCEPTANCE = {}


def random_slope(rng, max_exp=4):
    sign = rng.choice((1, -1))
    if rng.random() < 0.5:
        return (1, rng.randint(0, max_exp), sign)
    return (rng.randint(0, max_exp), 1, sign)


def random_spec(rng, n_min=1, n_max=4, fields=(None,), max_exp=4):
    n = rng.randint(n_min, n_max)
    return validate_spec([random_slope(rng, max_exp) for _ in range(n + 1)], field=rng.choice(fields))


FIELDS = (QQ, GF(2), GF(3), GF(5), GF(7))


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}")
