import random
from fractions import Fraction

import pytest

from superlie.field import FieldElem


SEED = 20260823


@pytest.fixture
def rng():
    return random.Random(SEED)


def rand_elem(rng, span: int = 9) -> FieldElem:
    return FieldElem(Fraction(rng.randint(-span, span), rng.randint(1, span)),
                     Fraction(rng.randint(-span, span), rng.randint(1, span)),
                     Fraction(rng.randint(-span, span), rng.randint(1, span)),
                     Fraction(rng.randint(-span, span), rng.randint(1, span)))
