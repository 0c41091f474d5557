import itertools

import pytest

from skewpath.errors import BadStepSymbol, BelowAxis, ForbiddenFactor, LimitExceeded
from skewpath.paths import (
    PrefixClass,
    Step,
    count_by_height,
    count_paths,
    enumerate_paths,
    parse_path,
    parse_steps,
    validate_path,
)

FIGURE_PATH = "UUgbUUUUUUbrrgUUUUUggUbbgggr"


def _valid_words(length):
    """Every word over {U,g,b,r} of the given length accepted by validate_path."""
    out = []
    for word in itertools.product("Ugbr", repeat=length):
        try:
            out.append(validate_path(word))
        except (BelowAxis, ForbiddenFactor):
            pass
    return out


def test_figure_path_is_accepted():
    p = parse_path(FIGURE_PATH)
    assert (p.length, p.semilength, p.height, p.end_level) == (28, 14, 7, 0)


def test_empty_path():
    p = validate_path([])
    assert (p.length, p.height, p.end_level) == (0, 0, 0)
    assert p.prefix_class is PrefixClass.EMPTY


@pytest.mark.parametrize(
    "word, exc, pos",
    [
        ("Ur", ForbiddenFactor, 1),
        ("UUgrU", ForbiddenFactor, 4),
        ("g", BelowAxis, 0),
        ("UgUbb", BelowAxis, 4),
    ],
)
def test_rejections_carry_positions(word, exc, pos):
    with pytest.raises(exc) as info:
        validate_path(word)
    assert info.value.position == pos


def test_bad_symbol():
    with pytest.raises(BadStepSymbol) as info:
        parse_steps("UxD")
    assert info.value.position == 1


def test_prefix_class_of_last_step():
    assert validate_path("U").prefix_class is PrefixClass.LAST_UP
    assert validate_path("Ub").prefix_class is PrefixClass.LAST_COLORED_DOWN
    assert validate_path("UUgr").prefix_class is PrefixClass.LAST_RED_DOWN


def test_n1_paths():
    assert [str(p) for p in enumerate_paths(1)] == ["Ug", "Ub"]


def test_n2_paths_by_shape():
    words = [str(p) for p in enumerate_paths(2)]
    assert len(words) == 10
    assert sorted(w for w in words if w[1] != "U") == sorted(
        f"U{a}U{b}" for a in "gb" for b in "gb"
    )
    assert sorted(w for w in words if w[1] == "U") == sorted(
        f"UU{a}{b}" for a in "gb" for b in "gbr"
    )


def test_n2_height_filter():
    words = [str(p) for p in enumerate_paths(2, max_height=1)]
    assert words == ["UgUg", "UgUb", "UbUg", "UbUb"]


@pytest.mark.parametrize("length", range(0, 9))
def test_enumerator_matches_exhaustive_words(length):
    if length % 2 == 0:
        closed = sorted(str(p) for p in _valid_words(length) if p.end_level == 0)
        assert sorted(str(p) for p in enumerate_paths(length // 2)) == closed
    prefixes = sorted(str(p) for p in _valid_words(length))
    assert sorted(str(p) for p in enumerate_paths(0, prefix_length=length)) == prefixes


def test_enumeration_order_is_lexicographic():
    rank = {s.value: i for i, s in enumerate([Step.UP, Step.DOWN_GREEN, Step.DOWN_BLUE, Step.DOWN_RED])}
    words = [str(p) for p in enumerate_paths(4)]
    keys = [[rank[c] for c in w] for w in words]
    assert keys == sorted(keys)
    assert len(set(words)) == len(words)


def test_enumerated_paths_revalidate():
    for p in enumerate_paths(5):
        q = validate_path(p.steps)
        assert (q.height, q.end_level) == (p.height, p.end_level) == (p.height, 0)


@pytest.mark.parametrize("n, expected", [(0, 1), (1, 2), (2, 10), (3, 58)])
def test_count_paths(n, expected):
    assert count_paths(n) == expected


@pytest.mark.parametrize(
    "n, expected",
    [(1, {1: 2}), (2, {1: 4, 2: 6}), (3, {1: 8, 2: 32, 3: 18})],
)
def test_count_by_height(n, expected):
    assert count_by_height(n) == expected


def test_height_counts_sum_to_total():
    for n in range(7):
        assert sum(count_by_height(n).values()) == count_paths(n)


def test_language_not_closed_under_reversal():
    swap = str.maketrans({"U": "g", "g": "U", "b": "U"})
    mirrored = [str(p)[::-1].translate(swap) for p in enumerate_paths(3)]
    rejected = 0
    for w in mirrored:
        try:
            validate_path(w)
        except (BelowAxis, ForbiddenFactor):
            rejected += 1
    assert rejected > 0


def test_limit(monkeypatch):
    with pytest.raises(LimitExceeded):
        list(enumerate_paths(11))
    monkeypatch.setenv("SKEWPATH_BRUTE_LIMIT", "2")
    with pytest.raises(LimitExceeded):
        count_paths(3)
    assert count_paths(2) == 10
