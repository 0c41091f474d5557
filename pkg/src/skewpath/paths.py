"""Step alphabet, path recognizer and the brute-force enumerator.

Steps are written one character each: ``U`` (up), ``g`` and ``b`` (the two
coloured down-steps) and ``r`` (the left step, drawn as a red down-step).
A word is a path when its level never drops below zero and it contains
neither ``Ur`` nor ``rU``.
"""
from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence

from .errors import BadStepSymbol, BelowAxis, ForbiddenFactor, LimitExceeded

DEFAULT_BRUTE_LIMIT = 10


class Step(str, Enum):
    UP = "U"
    DOWN_GREEN = "g"
    DOWN_BLUE = "b"
    DOWN_RED = "r"

    @property
    def delta(self) -> int:
        return 1 if self is Step.UP else -1

    def __str__(self) -> str:
        return self.value


# enumeration order U < g < b < r
STEP_ORDER: tuple[Step, ...] = (Step.UP, Step.DOWN_GREEN, Step.DOWN_BLUE, Step.DOWN_RED)


class PrefixClass(Enum):
    EMPTY = "empty"
    LAST_UP = "up"
    LAST_COLORED_DOWN = "colored"
    LAST_RED_DOWN = "red"

    @classmethod
    def of(cls, step: Step | None) -> PrefixClass:
        if step is None:
            return cls.EMPTY
        if step is Step.UP:
            return cls.LAST_UP
        if step is Step.DOWN_RED:
            return cls.LAST_RED_DOWN
        return cls.LAST_COLORED_DOWN


def allowed_steps(level: int, cls: PrefixClass) -> Iterator[Step]:
    """Steps the automaton accepts from state ``(level, cls)``, in enumeration order."""
    if cls is not PrefixClass.LAST_RED_DOWN:
        yield Step.UP
    if level > 0:
        yield Step.DOWN_GREEN
        yield Step.DOWN_BLUE
        if cls is not PrefixClass.LAST_UP:
            yield Step.DOWN_RED


@dataclass(frozen=True)
class Path:
    steps: tuple[Step, ...]
    height: int
    end_level: int

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def semilength(self) -> int:
        return sum(1 for s in self.steps if s is Step.UP)

    @property
    def is_closed(self) -> bool:
        return self.end_level == 0

    @property
    def prefix_class(self) -> PrefixClass:
        return PrefixClass.of(self.steps[-1] if self.steps else None)

    def levels(self) -> list[int]:
        out = [0]
        for s in self.steps:
            out.append(out[-1] + s.delta)
        return out

    def coordinates(self) -> list[tuple[int, int]]:
        """Vertices in the drawing convention where every down-step is (1, -1)."""
        return list(enumerate(self.levels()))

    def __str__(self) -> str:
        return "".join(s.value for s in self.steps)


def parse_steps(text: str) -> list[Step]:
    out = []
    for i, ch in enumerate(text):
        try:
            out.append(Step(ch))
        except ValueError:
            raise BadStepSymbol(i, ch) from None
    return out


def validate_path(steps: Iterable[Step | str]) -> Path:
    """Scan a step word once, tracking ``(level, last-step class)``.

    Error positions are 0-based indices of the offending step.
    """
    level = height = 0
    prev: Step | None = None
    seq = []
    for i, raw in enumerate(steps):
        try:
            s = Step(raw)
        except ValueError:
            raise BadStepSymbol(i, str(raw)) from None
        if (prev is Step.UP and s is Step.DOWN_RED) or (prev is Step.DOWN_RED and s is Step.UP):
            raise ForbiddenFactor(i)
        level += s.delta
        if level < 0:
            raise BelowAxis(i)
        height = max(height, level)
        prev = s
        seq.append(s)
    return Path(tuple(seq), height, level)


def parse_path(text: str) -> Path:
    return validate_path(parse_steps(text.strip()))


def brute_limit() -> int:
    env = os.environ.get("SKEWPATH_BRUTE_LIMIT")
    return int(env) if env else DEFAULT_BRUTE_LIMIT


def _check_limit(n: int, limit: int | None) -> None:
    limit = brute_limit() if limit is None else limit
    if n > limit:
        raise LimitExceeded(f"semilength {n} exceeds brute-force limit {limit}")


def enumerate_paths(
    n: int,
    max_height: int | None = None,
    prefix_length: int | None = None,
    limit: int | None = None,
) -> Iterator[Path]:
    """Yield every closed path of semilength ``n`` in lexicographic order.

    With ``prefix_length`` set, yield every valid prefix of that length instead
    (any end level); ``n`` is then ignored.  Generation prunes invalid branches,
    so work is proportional to the output size.
    """
    length = 2 * n if prefix_length is None else prefix_length
    _check_limit((length + 1) // 2, limit)
    closed = prefix_length is None
    cap = length if max_height is None else max_height
    word: list[Step] = []

    def rec(level: int, cls: PrefixClass, height: int) -> Iterator[Path]:
        remaining = length - len(word)
        if remaining == 0:
            if not closed or level == 0:
                yield Path(tuple(word), height, level)
            return
        for s in allowed_steps(level, cls):
            nxt = level + s.delta
            if nxt > cap or (closed and nxt > remaining - 1):
                continue
            word.append(s)
            yield from rec(nxt, PrefixClass.of(s), max(height, nxt))
            word.pop()

    yield from rec(0, PrefixClass.EMPTY, 0)


def count_paths(n: int, limit: int | None = None) -> int:
    return sum(1 for _ in enumerate_paths(n, limit=limit))


def count_by_height(n: int, limit: int | None = None) -> dict[int, int]:
    """Exact number of closed paths of semilength ``n`` with each height."""
    counts = Counter(p.height for p in enumerate_paths(n, limit=limit))
    return dict(sorted(counts.items()))


def read_paths(lines: Sequence[str]) -> list[Path]:
    return [parse_path(line) for line in lines if line.strip()]
