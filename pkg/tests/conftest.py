import itertools

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from piecewise import Alphabet, Word

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

AB = Alphabet(("A", "B"))
ABC = Alphabet(("A", "B", "C"))


def W(text, alphabet=ABC):
    return Word.from_text(text, alphabet)


def texts(letters="ABC", min_size=0, max_size=8):
    return st.text(alphabet=letters, min_size=min_size, max_size=max_size)


def words(letters="ABC", min_size=0, max_size=8):
    alphabet = Alphabet(tuple(letters))
    return texts(letters, min_size, max_size).map(lambda s: Word.from_text(s, alphabet))


def all_texts(letters, max_length, min_length=0):
    for n in range(min_length, max_length + 1):
        for t in itertools.product(letters, repeat=n):
            yield "".join(t)


@pytest.fixture(scope="session", autouse=True)
def _compiled():
    from piecewise.side import warm_up

    warm_up()
