import json
import os

import pytest

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), "golden")


def load_golden(name):
    with open(os.path.join(GOLDEN_DIR, name)) as f:
        return json.load(f)


def load_golden_lines(name):
    with open(os.path.join(GOLDEN_DIR, name)) as f:
        return [json.loads(line) for line in f if line.strip()]


@pytest.fixture(scope="session")
def primes23():
    from pellsu.sunit import PrimeSet
    return PrimeSet((2, 3))
