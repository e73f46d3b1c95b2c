from fractions import Fraction

import pytest

from zinbiel.catalog import get_base_algebra

BASE_CASES = [
    ("A1", None),
    ("A2", None),
    ("A3", None),
    ("A4", None),
    ("A5", {"lambda": 1}),
    ("A5", {"lambda": 2}),
    ("A5", {"lambda": -1}),
    ("A5", {"lambda": Fraction(7, 3)}),
    ("A6", None),
]


@pytest.fixture(params=BASE_CASES, ids=lambda c: c[0] if c[1] is None else f"{c[0]}[{c[1]['lambda']}]")
def base_algebra(request):
    fixture_id, params = request.param
    return get_base_algebra(fixture_id, params)
