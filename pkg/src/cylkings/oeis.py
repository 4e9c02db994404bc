"""Reference sequences from the OEIS: b-file parsing, a small on-disk cache
and embedded fixtures for offline use.

A002464 counts kings (offset 0), A002493 cylindrical kings (offset 1).
"""

from __future__ import annotations

import logging
import os
import urllib.error
import urllib.request
from dataclasses import dataclass
from pathlib import Path
from typing import Literal

log = logging.getLogger(__name__)

__all__ = [
    "OeisSequence", "FIXTURES", "KNOWN_IDS", "parse_bfile", "render_bfile",
    "bfile_url", "default_cache_dir", "load_sequence",
]

CACHE_ENV = "CYLKINGS_CACHE_DIR"

# n -> a(n)
FIXTURES: dict[str, dict[int, int]] = {
    "A002464": dict(enumerate([
        1, 1, 0, 0, 2, 14, 90, 646, 5242, 47622, 479306, 5296790,
        63779034, 831283558,
    ])),
    "A002493": dict(enumerate([
        1, 0, 0, 0, 10, 60, 462, 3920, 36954, 382740, 4327510, 53088888,
        702756210,
    ], start=1)),
}

KNOWN_IDS = tuple(FIXTURES)


@dataclass(frozen=True)
class OeisSequence:
    id: str
    terms: dict[int, int]
    source: Literal["fetched", "cached", "embedded-fixture"]

    def __getitem__(self, n: int) -> int:
        return self.terms[n]


def parse_bfile(text: str) -> dict[int, int]:
    """Parse "index value" lines; blank lines and '#' comments are skipped."""
    terms = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) < 2:
            raise ValueError(f"line {lineno}: expected 'index value', got {line!r}")
        terms[int(parts[0])] = int(parts[1])
    return terms


def render_bfile(terms: dict[int, int]) -> str:
    return "".join(f"{n} {terms[n]}\n" for n in sorted(terms))


def bfile_url(seq_id: str) -> str:
    return f"https://oeis.org/{seq_id}/b{seq_id[1:]}.txt"


def default_cache_dir(flag: str | None = None) -> Path:
    """Cache directory: explicit flag, then the environment, then ~/.cache."""
    if flag:
        return Path(flag)
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "cylkings"


def _check_id(seq_id: str) -> None:
    if seq_id not in FIXTURES:
        raise KeyError(f"unknown sequence {seq_id!r}; known: {', '.join(KNOWN_IDS)}")


def load_sequence(seq_id: str, offline: bool = True,
                  cache_dir: str | Path | None = None,
                  timeout: float = 10.0) -> OeisSequence:
    """Fixture, cached b-file or freshly downloaded b-file, in that preference
    order when offline and the reverse when online."""
    _check_id(seq_id)
    fixture = OeisSequence(seq_id, dict(FIXTURES[seq_id]), "embedded-fixture")
    if offline:
        return fixture
    cache = default_cache_dir(str(cache_dir) if cache_dir else None)
    path = cache / f"b{seq_id[1:]}.txt"
    if path.exists():
        return OeisSequence(seq_id, parse_bfile(path.read_text()), "cached")
    try:
        with urllib.request.urlopen(bfile_url(seq_id), timeout=timeout) as resp:
            text = resp.read().decode("utf-8")
        terms = parse_bfile(text)
    except (urllib.error.URLError, OSError, ValueError) as exc:
        log.warning("could not fetch %s (%s); using embedded fixture", seq_id, exc)
        return fixture
    try:
        cache.mkdir(parents=True, exist_ok=True)
        path.write_text(render_bfile(terms))
    except OSError as exc:
        log.warning("could not write cache %s: %s", path, exc)
    return OeisSequence(seq_id, terms, "fetched")
