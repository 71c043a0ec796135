"""OEIS b-file parsing, fetching and local caching.

Cache layout: one verbatim b-file per sequence, ``<cache>/b000108.txt``,
under ``$OEIS_CACHE_DIR`` or ``~/.cache/hankelkit/oeis``.
"""

from __future__ import annotations

import logging
import os
import re
import tempfile
import threading
import time
import urllib.error
import urllib.request
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Optional

from .errors import NetworkError, NotFound, ParseError
from .series import Sequence

log = logging.getLogger(__name__)

USER_AGENT = "hankelkit/0.1 (b-file client; exact Hankel transform toolkit)"
BFILE_URL = "https://oeis.org/{a}/b{num}.txt"

_ANUMBER_RE = re.compile(r"^[Aa]?(\d{1,6})$")
_locks: dict = {}
_locks_guard = threading.Lock()


def normalize_anumber(anumber) -> str:
    m = _ANUMBER_RE.match(str(anumber).strip())
    if not m:
        raise ParseError(f"not an OEIS A-number: {anumber!r}")
    return f"A{int(m.group(1)):06d}"


@dataclass(frozen=True)
class BFile:
    anumber: Optional[str]
    entries: tuple  # ((index, value), ...)

    @property
    def offset(self) -> int:
        return self.entries[0][0] if self.entries else 0

    def values(self) -> list:
        return [v for _, v in self.entries]

    def render(self) -> str:
        head = f"# {self.anumber}\n" if self.anumber else ""
        return head + "".join(f"{i} {v}\n" for i, v in self.entries)


def parse_bfile(text: str, anumber: Optional[str] = None) -> BFile:
    """Parse ``n a(n)`` lines; ``#`` comments and blank lines are skipped.

    Indices must be consecutive.  ParseError carries the 1-based line number.
    """
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) < 2:
            raise ParseError(f"expected 'index value', got {raw!r}", line=lineno)
        try:
            idx, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer field in {raw!r}", line=lineno) from None
        if entries and idx != entries[-1][0] + 1:
            raise ParseError(f"index {idx} does not follow {entries[-1][0]}", line=lineno)
        entries.append((idx, value))
    return BFile(anumber, tuple(entries))


def default_cache_dir() -> Path:
    env = os.environ.get("OEIS_CACHE_DIR")
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "hankelkit" / "oeis"


def cache_path(anumber: str, cache_dir=None) -> Path:
    a = normalize_anumber(anumber)
    return Path(cache_dir or default_cache_dir()) / f"b{a[1:]}.txt"


def _write_atomic(path: Path, text: str):
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


def http_get(url: str, timeout: float = 20.0) -> str:
    req = urllib.request.Request(url, headers={"User-Agent": USER_AGENT})
    try:
        with urllib.request.urlopen(req, timeout=timeout) as resp:
            return resp.read().decode("utf-8")
    except urllib.error.HTTPError as exc:
        if exc.code == 404:
            raise NotFound(f"{url} returned 404") from None
        raise NetworkError(f"{url}: HTTP {exc.code}") from None
    except (urllib.error.URLError, OSError) as exc:
        raise NetworkError(f"{url}: {exc}") from None


def _download(a: str, getter: Callable[[str], str], retries: int = 1, backoff: float = 1.0) -> str:
    url = BFILE_URL.format(a=a, num=a[1:])
    for attempt in range(retries + 1):
        try:
            return getter(url)
        except NetworkError:
            if attempt == retries:
                raise
            log.info("retrying %s after network error", url)
            time.sleep(backoff * (attempt + 1))
    raise AssertionError("unreachable")


def _lock_for(a: str) -> threading.Lock:
    with _locks_guard:
        return _locks.setdefault(a, threading.Lock())


def fetch_bfile(
    anumber,
    *,
    offline: bool = False,
    cache_dir=None,
    getter: Optional[Callable[[str], str]] = None,
    backoff: float = 1.0,
) -> BFile:
    """Cached b-file for an A-number; the network is used only on a cache miss."""
    getter = getter or http_get
    a = normalize_anumber(anumber)
    path = cache_path(a, cache_dir)
    with _lock_for(a):
        if path.exists():
            return parse_bfile(path.read_text(encoding="utf-8"), a)
        if offline:
            raise NetworkError(f"{a} is not cached and network access is disabled")
        text = _download(a, getter, backoff=backoff)
        bfile = parse_bfile(text, a)
        if not bfile.entries:
            raise NotFound(f"no b-file data for {a}")
        _write_atomic(path, text)
        return bfile


def fetch(anumber, max_terms: Optional[int] = None, **kwargs) -> Sequence:
    """Up to ``max_terms`` leading terms, re-indexed from 0 whatever the OEIS offset."""
    values = fetch_bfile(anumber, **kwargs).values()
    if max_terms is not None:
        values = values[:max_terms]
    if not values:
        raise NotFound(f"no terms for {anumber}")
    return Sequence(tuple(values))
