import random

import pytest
from hypothesis import strategies as st

from paulizeta.pauli import PauliLetter, SparsePauliString
from paulizeta.table import available_backends


def S(label):
    return SparsePauliString.from_label(label)


@pytest.fixture(params=available_backends())
def backend(request):
    return request.param


def random_string(rng, n, max_weight, min_weight=0):
    w = rng.randint(min_weight, min(max_weight, n))
    qubits = sorted(rng.sample(range(n), w))
    return SparsePauliString(tuple((j, rng.choice("XYZ")) for j in qubits))


@pytest.fixture
def rng():
    return random.Random(20261016)


letters = st.sampled_from([PauliLetter.X, PauliLetter.Y, PauliLetter.Z])


@st.composite
def sparse_strings(draw, max_index=40, max_weight=8):
    qubits = draw(st.lists(st.integers(0, max_index), unique=True, max_size=max_weight))
    return SparsePauliString(tuple((j, draw(letters)) for j in sorted(qubits)))
