"""OEIS b-file fetching with a local cache and an offline fixture mode.

Offline mode reads only the fixture it is given and never opens a socket.
"""
from __future__ import annotations

import os
import re
import tempfile
import time
import urllib.error
import urllib.request
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from .errors import MalformedId, NetworkUnavailable, NotFound, ParseError

ID_PATTERN = re.compile(r"^A\d{6}$")
BFILE_URL = "https://oeis.org/{id}/b{digits}.txt"
CACHE_TTL_SECONDS = 30 * 24 * 3600
FIXTURE_DIR = Path(__file__).parent / "data"
SHIPPED_FIXTURE = FIXTURE_DIR / "skew_dyck_two_colors.txt"


@dataclass(frozen=True)
class SequenceRecord:
    id: str
    terms: list[int]
    offset: int
    source: str = field(compare=False)


def check_id(seq_id: str) -> str:
    if not ID_PATTERN.match(seq_id):
        raise MalformedId(f"{seq_id!r} is not of the form A followed by six digits")
    return seq_id


def parse_bfile(text: str) -> tuple[int, list[int]]:
    """Parse ``index value`` lines; ``#`` comments and blank lines are skipped."""
    offset = None
    terms: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'index value', got {raw!r}")
        try:
            idx, val = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer field in {raw!r}") from None
        if offset is None:
            offset = idx
        elif idx != offset + len(terms):
            raise ParseError(f"line {lineno}: index {idx} out of sequence")
        terms.append(val)
    if not terms:
        raise ParseError("no terms found")
    return offset, terms


def format_bfile(offset: int, terms: list[int], header: str = "") -> str:
    lines = [f"# {h}" for h in header.splitlines()] if header else []
    lines += [f"{offset + i} {t}" for i, t in enumerate(terms)]
    return "\n".join(lines) + "\n"


def cache_dir() -> Path:
    env = os.environ.get("SKEWPATH_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "skewpath" / "oeis"


def _bfile_name(seq_id: str) -> str:
    return f"b{seq_id[1:]}.txt"


def _atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _download(url: str, timeout: float) -> str:
    try:
        with urllib.request.urlopen(url, timeout=timeout) as resp:
            return resp.read().decode("utf-8")
    except urllib.error.HTTPError as exc:
        if exc.code == 404:
            raise NotFound(url) from exc
        raise NetworkUnavailable(f"{url}: HTTP {exc.code}") from exc
    except (urllib.error.URLError, OSError) as exc:
        raise NetworkUnavailable(f"{url}: {exc}") from exc


def fetch_sequence(
    seq_id: str,
    *,
    fixture: str | os.PathLike | None = None,
    offline: bool = False,
    cache: str | os.PathLike | None = None,
    timeout: float = 20.0,
    downloader: Callable[[str, float], str] = _download,
) -> SequenceRecord:
    """Fetch a b-file for ``seq_id``.

    ``fixture`` may name a b-file or a directory holding ``bNNNNNN.txt``;
    supplying it implies offline mode.
    """
    check_id(seq_id)
    if fixture is not None or offline:
        if fixture is None:
            raise NotFound(f"{seq_id}: offline mode needs a fixture")
        path = Path(fixture)
        if path.is_dir():
            path = path / _bfile_name(seq_id)
        if not path.is_file():
            raise NotFound(f"{seq_id}: fixture {path} missing")
        offset, terms = parse_bfile(path.read_text(encoding="utf-8"))
        return SequenceRecord(seq_id, terms, offset, "fixture")

    cpath = Path(cache) if cache is not None else cache_dir()
    cfile = cpath / _bfile_name(seq_id)
    if cfile.is_file() and time.time() - cfile.stat().st_mtime < CACHE_TTL_SECONDS:
        offset, terms = parse_bfile(cfile.read_text(encoding="utf-8"))
        return SequenceRecord(seq_id, terms, offset, "cache")

    text = downloader(BFILE_URL.format(id=seq_id, digits=seq_id[1:]), timeout)
    offset, terms = parse_bfile(text)
    _atomic_write(cfile, text)
    return SequenceRecord(seq_id, terms, offset, "network")


@dataclass
class VerifyReport:
    id: str
    generator: str
    upto: int
    compared: list[tuple[int, int, int]]
    first_mismatch: int | None
    exhausted: bool
    source: str

    @property
    def passed(self) -> bool:
        return self.first_mismatch is None

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "generator": self.generator,
            "upto": self.upto,
            "source": self.source,
            "passed": self.passed,
            "first_mismatch": self.first_mismatch,
            "compared": len(self.compared),
            "note": "fixture exhausted" if self.exhausted else "",
            "rows": [{"n": n, "expected": str(e), "local": str(v)} for n, e, v in self.compared],
        }


def local_generator(name: str) -> Callable[[int], int]:
    """Resolve ``s``, ``height:<h>`` or ``level:<f|g|h|total>:<i>`` to an ``n -> term`` map."""
    from .closed_forms import s_coefficient
    from .height import bounded_counts
    from .levels import level_closed, level_total_closed

    if name == "s":
        return s_coefficient
    kind, _, rest = name.partition(":")
    if kind == "height" and rest.isdigit():
        h = int(rest)
        return lambda n: bounded_counts(h, n + 1)[n]
    if kind == "level":
        which, _, lvl = rest.partition(":")
        if which in ("f", "g", "h", "total") and lvl.isdigit():
            i = int(lvl)

            def term(n: int) -> int:
                if which == "total":
                    s = level_total_closed(i, n + 1)
                else:
                    s = level_closed(i, n + 1)["fgh".index(which)]
                return int(s[n])

            return term
    raise ValueError(f"unknown generator {name!r}")


def verify_sequence(seq_id: str, upto: int, generator: str = "s", **fetch_kwargs) -> VerifyReport:
    """Compare fetched terms with indices ``offset..upto`` against a local generator."""
    record = fetch_sequence(seq_id, **fetch_kwargs)
    gen = local_generator(generator)
    compared = []
    first = None
    last_idx = record.offset + len(record.terms) - 1
    for n in range(record.offset, min(upto, last_idx) + 1):
        expected = record.terms[n - record.offset]
        local = gen(n)
        compared.append((n, expected, local))
        if first is None and expected != local:
            first = n
    return VerifyReport(seq_id, generator, upto, compared, first, upto > last_idx, record.source)
