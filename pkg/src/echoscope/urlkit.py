"""URL handling: extraction from text, normalization, registrable domains,
and platform-target classification.

Everything here is a pure function over immutable inputs plus bundled,
versioned data tables (public-suffix snapshot, platform-domain aliases,
shortener tables). No network calls are ever made; shortened URLs are only
expanded through the static branded-shortener table.
"""

from __future__ import annotations

import ipaddress
import re
from dataclasses import dataclass
from datetime import datetime
from functools import lru_cache
from importlib import resources
from urllib.parse import urlsplit

from .errors import DomainResolutionError, UrlParseError

# Maximal http(s) URL substrings. Trailing punctuation is trimmed afterwards
# because the greedy character class overshoots prose like "see https://x.com."
_URL_RE = re.compile(r"https?://[^\s<>\"'«»“”]+", re.IGNORECASE)

_TRAILING_PUNCT = ".,;:!?'’”"
_CLOSERS = {")": "(", "]": "[", "}": "{"}

_HOST_LABEL_RE = re.compile(r"^[a-z0-9_](?:[a-z0-9_-]*[a-z0-9_])?$")


def extract_urls(text: str) -> list[str]:
    """Return every maximal http(s) URL substring of *text*, left to right.

    Duplicates are preserved. Trailing sentence punctuation is stripped, and
    a trailing closer like ')' is stripped only when unbalanced within the
    URL itself (so wiki-style URLs ending in '_(x)' survive).
    """
    found = []
    for match in _URL_RE.finditer(text or ""):
        url = match.group(0)
        while url:
            last = url[-1]
            if last in _TRAILING_PUNCT:
                url = url[:-1]
            elif last in _CLOSERS and url.count(_CLOSERS[last]) < url.count(last):
                url = url[:-1]
            else:
                break
        if url:
            found.append(url)
    return found


@dataclass(frozen=True)
class NormalizedUrl:
    """A canonicalized URL: lowercase ASCII host, no port/userinfo/fragment."""

    scheme: str
    host: str
    path: str
    original: str

    def reassembled(self) -> str:
        return f"{self.scheme}://{self.host}{self.path}"


def _validate_host(host: str, raw: str) -> str:
    if not host:
        raise UrlParseError(f"no host in {raw!r}")
    if host.endswith("."):
        host = host.rstrip(".")
    if not host:
        raise UrlParseError(f"no host in {raw!r}")
    if ":" in host:  # bracketless IPv6 from urlsplit().hostname
        return host
    try:
        host = host.encode("idna").decode("ascii").lower()
    except UnicodeError as exc:
        raise UrlParseError(f"host {host!r} is not IDNA-encodable") from exc
    for label in host.split("."):
        if not _HOST_LABEL_RE.match(label):
            raise UrlParseError(f"invalid host label {label!r} in {raw!r}")
    return host


def normalize_url(raw: str, shortener_map: dict[str, str] | None = None) -> NormalizedUrl:
    """Canonicalize *raw* into a :class:`NormalizedUrl`.

    Lowercases the host, strips the leading "www.", the port, fragment and
    userinfo, and rewrites branded-shortener hosts through the static
    mapping table (bundled table by default). Scheme-less input is accepted
    when the authority part looks like a dotted host. Raises
    :class:`UrlParseError` on anything else; callers count and skip.
    """
    if shortener_map is None:
        shortener_map = load_shortener_map()
    raw = (raw or "").strip()
    if not raw:
        raise UrlParseError("empty URL string")

    candidate = raw
    if "://" not in candidate:
        if candidate.startswith("//"):
            candidate = "http:" + candidate
        else:
            head = re.split(r"[/?#]", candidate, maxsplit=1)[0]
            if "." not in head or " " in head:
                raise UrlParseError(f"not a URL: {raw!r}")
            candidate = "https://" + candidate

    try:
        parts = urlsplit(candidate)
        hostname = parts.hostname
    except ValueError as exc:
        raise UrlParseError(f"unparseable URL {raw!r}") from exc

    scheme = (parts.scheme or "https").lower()
    if scheme not in ("http", "https"):
        raise UrlParseError(f"unsupported scheme {scheme!r} in {raw!r}")
    if hostname is None or " " in (parts.netloc or ""):
        raise UrlParseError(f"no valid host in {raw!r}")

    host = _validate_host(hostname, raw)
    if host.startswith("www.") and len(host) > 4:
        host = host[4:]
    host = shortener_map.get(host, host)

    path = parts.path or ""
    if parts.query:
        path = f"{path}?{parts.query}"
    return NormalizedUrl(scheme=scheme, host=host, path=path, original=raw)


# ---------------------------------------------------------------------------
# Public-suffix rules
# ---------------------------------------------------------------------------

class PublicSuffixList:
    """Matcher over a pinned snapshot of public-suffix rules.

    Implements the standard rule semantics: the prevailing rule is the
    matching exception rule if any, otherwise the matching rule with the
    most labels, otherwise the implicit "*" rule. The registrable domain is
    the prevailing suffix plus one preceding label.
    """

    def __init__(self, rules: list[str], version: str = "unversioned"):
        self.version = version
        self._exact: set[tuple[str, ...]] = set()
        self._wildcard: set[tuple[str, ...]] = set()   # labels after "*."
        self._exception: set[tuple[str, ...]] = set()  # labels after "!"
        for rule in rules:
            rule = rule.strip().lower()
            if not rule or rule.startswith("//"):
                continue
            if rule.startswith("!"):
                self._exception.add(tuple(rule[1:].split(".")))
            elif rule.startswith("*."):
                self._wildcard.add(tuple(rule[2:].split(".")))
            else:
                self._exact.add(tuple(rule.split(".")))

    @classmethod
    def from_file(cls, path) -> "PublicSuffixList":
        version = "unversioned"
        rules = []
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line.startswith("//"):
                    m = re.search(r"version[:=]\s*(\S+)", line)
                    if m:
                        version = m.group(1)
                    continue
                rules.append(line)
        return cls(rules, version=version)

    def suffix_length(self, labels: tuple[str, ...]) -> int:
        """Number of labels in the prevailing public suffix of *labels*."""
        for exc in self._exception:
            n = len(exc)
            if len(labels) >= n and labels[-n:] == exc:
                return n - 1
        best = 1  # implicit "*" rule: the bare TLD
        for rule in self._exact:
            n = len(rule)
            if len(labels) >= n and labels[-n:] == rule:
                best = max(best, n)
        for rule in self._wildcard:
            n = len(rule) + 1
            if len(labels) >= n and labels[-(n - 1):] == rule:
                best = max(best, n)
        return best

    def registrable_domain(self, host: str) -> str:
        host = host.strip(".").lower()
        if not host:
            raise DomainResolutionError("empty host")
        if _is_ip_literal(host):
            raise DomainResolutionError(f"IP literal host {host!r}")
        labels = tuple(host.split("."))
        n_suffix = self.suffix_length(labels)
        if len(labels) <= n_suffix:
            raise DomainResolutionError(f"host {host!r} is a bare public suffix")
        return ".".join(labels[-(n_suffix + 1):])


def _is_ip_literal(host: str) -> bool:
    try:
        ipaddress.ip_address(host)
        return True
    except ValueError:
        return False


@lru_cache(maxsize=1)
def load_public_suffix_list() -> PublicSuffixList:
    path = resources.files("echoscope.data") / "public_suffixes.dat"
    with resources.as_file(path) as p:
        return PublicSuffixList.from_file(p)


def registrable_domain(url: NormalizedUrl | str, psl: PublicSuffixList | None = None) -> str:
    """Public-suffix-aware registrable domain (eTLD+1) of a URL or host."""
    if psl is None:
        psl = load_public_suffix_list()
    host = url.host if isinstance(url, NormalizedUrl) else url
    return psl.registrable_domain(host)


# ---------------------------------------------------------------------------
# Platform-owned domains and shortener tables
# ---------------------------------------------------------------------------

def _read_table(name: str) -> list[list[str]]:
    path = resources.files("echoscope.data") / name
    rows = []
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rows.append(line.split("\t"))
    return rows


@lru_cache(maxsize=1)
def load_platform_domains() -> dict[str, str]:
    """Bundled mapping of registrable domain -> platform id."""
    return {row[0]: row[1] for row in _read_table("platform_domains.tsv")}


@lru_cache(maxsize=1)
def load_shortener_map() -> dict[str, str]:
    """Bundled mapping of branded-shortener host -> canonical host."""
    return {row[0]: row[1] for row in _read_table("shortener_map.tsv")}


@lru_cache(maxsize=1)
def load_shortener_flags() -> frozenset[str]:
    """Generic shortener domains that cannot be statically expanded."""
    return frozenset(row[0] for row in _read_table("shortener_flags.txt"))


def classify_platform_target(
    domain: str,
    path: str = "",
    table: dict[str, str] | None = None,
) -> str | None:
    """Platform id a domain points at, or None for non-platform domains.

    *path* is accepted for interface completeness (rules are currently
    domain-granular) and ignored.
    """
    del path
    if table is None:
        table = load_platform_domains()
    return table.get(domain)


# ---------------------------------------------------------------------------
# The normalized link record
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LinkRecord:
    """One kept, normalized shared URL."""

    platform: str
    user_id: str
    timestamp: datetime
    domain: str
    target_platform: str | None = None
    community: str | None = None
