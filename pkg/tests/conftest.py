import random

from hypothesis import HealthCheck, assume, settings
from hypothesis import strategies as st

from onerel.words import free_reduce, is_proper_power

settings.register_profile(
    "default", deadline=None, max_examples=150, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

LETTERS = (1, -1, 2, -2)

letter_lists = st.lists(st.sampled_from(LETTERS), max_size=30)
words = letter_lists.map(free_reduce)
nonempty_words = words.filter(bool)
short_words = st.lists(st.sampled_from(LETTERS), max_size=6).map(free_reduce)


@st.composite
def cyclic_words(draw, max_size=24):
    w = draw(st.lists(st.sampled_from(LETTERS), min_size=1, max_size=max_size).map(free_reduce))
    letters = w.letters
    while len(letters) >= 2 and letters[0] == -letters[-1]:
        letters = letters[1:-1]
    return free_reduce(letters)


@st.composite
def balanced_words(draw, max_syllables=5):
    """Cyclically reduced, zero a-exponent sum, some a-letter, not a proper power.

    Built as alternating syllables a^e1 b^f1 ... a^em b^fm with sum(e) = 0,
    which is cyclically reduced by construction.
    """
    nz = st.integers(-3, 3).filter(bool)
    es = draw(st.lists(nz, min_size=1, max_size=max_syllables))
    if sum(es):
        es.append(-sum(es))
    fs = draw(st.lists(nz, min_size=len(es), max_size=len(es)))
    letters = []
    for e, f in zip(es, fs):
        letters += [1 if e > 0 else -1] * abs(e) + [2 if f > 0 else -2] * abs(f)
    w = free_reduce(letters)
    assume(not is_proper_power(w)[0])
    return w


def random_reduced(rng: random.Random, length: int):
    letters = [rng.choice(LETTERS)]
    while len(letters) < length:
        x = rng.choice(LETTERS)
        if x != -letters[-1]:
            letters.append(x)
    return free_reduce(letters)
