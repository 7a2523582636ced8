"""Client for number-field databases, offline-first with a validating cache.

The default configuration reads a bundled fixture (no network); pointing
``base_url`` at an http(s) endpoint or a ``file://`` path switches sources
without changing any call site.  Every payload goes through one validation
gate: structurally invalid records are dropped (counted, logged), and only
validated records are cached or returned.

The cache is one content-addressed file per normalized query (sha256 of the
canonical query JSON), carrying a format-version header, written via a
temporary file plus atomic rename.  A corrupt entry is never served: lookup
invalidates it (removes the file, logs a warning) and reports a miss.

Config keys: ``base_url``, ``cache_dir``, ``offline``, ``timeout_seconds``;
each can be overridden by an environment variable with the single prefix
``NFZETA_`` (e.g. ``NFZETA_CACHE_DIR``).
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import requests

from .arith import squarefree_part
from .numberfield import FieldDescriptor, Ingested, Quadratic, fundamental_discriminant

__all__ = [
    "FORMAT_VERSION",
    "ENV_PREFIX",
    "TransportError",
    "DecodeError",
    "ClientConfig",
    "load_config",
    "FieldRecord",
    "QuerySpec",
    "FetchResult",
    "fetch",
    "cache_lookup",
    "cache_store",
    "to_descriptor",
]

logger = logging.getLogger("nfzeta.dbclient")

FORMAT_VERSION = 1
ENV_PREFIX = "NFZETA_"
OFFLINE_URL = "offline://bundled"


class TransportError(OSError):
    """The source could not be reached and the cache holds no answer."""


class DecodeError(ValueError):
    """The payload was not valid JSON of the expected shape."""


# --------------------------------------------------------------------------
# configuration
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class ClientConfig:
    base_url: str = OFFLINE_URL
    cache_dir: str = str(Path.home() / ".cache" / "nfzeta")
    offline: bool = True
    timeout_seconds: float = 10.0

    def __post_init__(self):
        if self.timeout_seconds <= 0:
            raise ValueError("timeout_seconds must be positive")


_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off"}


def _parse_bool(text: str) -> bool:
    low = text.strip().lower()
    if low in _TRUE:
        return True
    if low in _FALSE:
        return False
    raise ValueError(f"cannot parse boolean from {text!r}")


def load_config(path: str | None = None, env: dict | None = None) -> ClientConfig:
    """Defaults, then a JSON config file, then NFZETA_* environment overrides."""
    values = {
        "base_url": OFFLINE_URL,
        "cache_dir": str(Path.home() / ".cache" / "nfzeta"),
        "offline": True,
        "timeout_seconds": 10.0,
    }
    if path is not None:
        raw = json.loads(Path(path).read_text())
        if not isinstance(raw, dict):
            raise ValueError("config file must hold a JSON object")
        unknown = set(raw) - set(values)
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        values.update(raw)
    env = os.environ if env is None else env
    if ENV_PREFIX + "BASE_URL" in env:
        values["base_url"] = env[ENV_PREFIX + "BASE_URL"]
    if ENV_PREFIX + "CACHE_DIR" in env:
        values["cache_dir"] = env[ENV_PREFIX + "CACHE_DIR"]
    if ENV_PREFIX + "OFFLINE" in env:
        values["offline"] = _parse_bool(env[ENV_PREFIX + "OFFLINE"])
    if ENV_PREFIX + "TIMEOUT_SECONDS" in env:
        values["timeout_seconds"] = float(env[ENV_PREFIX + "TIMEOUT_SECONDS"])
    return ClientConfig(
        base_url=str(values["base_url"]),
        cache_dir=str(values["cache_dir"]),
        offline=bool(values["offline"]),
        timeout_seconds=float(values["timeout_seconds"]),
    )


# --------------------------------------------------------------------------
# records and queries
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class FieldRecord:
    """One database row: invariants of a number field, polynomial included."""

    label: str
    degree: int
    discriminant: int
    signature: tuple
    defining_polynomial: tuple  # ascending coefficients, monic
    h: int | None = None
    regulator: float | None = None
    torsion_w: int | None = None

    def __post_init__(self):
        if not self.label:
            raise ValueError("label must be non-empty")
        if self.degree < 2:
            raise ValueError("degree must be >= 2")
        if abs(self.discriminant) <= 1:
            raise ValueError("|discriminant| must exceed 1")
        r1, r2 = self.signature
        if r1 < 0 or r2 < 0 or r1 + 2 * r2 != self.degree:
            raise ValueError("signature inconsistent with degree")
        poly = tuple(self.defining_polynomial)
        object.__setattr__(self, "defining_polynomial", poly)
        object.__setattr__(self, "signature", (r1, r2))
        if len(poly) != self.degree + 1:
            raise ValueError("polynomial length must be degree + 1")
        if poly[-1] != 1:
            raise ValueError("defining polynomial must be monic")
        if not all(isinstance(c, int) for c in poly):
            raise ValueError("polynomial coefficients must be integers")
        if self.h is not None and self.h < 1:
            raise ValueError("class number must be >= 1")
        if self.regulator is not None and not self.regulator > 0:
            raise ValueError("regulator must be positive")
        if self.torsion_w is not None and (self.torsion_w < 2 or self.torsion_w % 2):
            raise ValueError("torsion order must be even and >= 2")


@dataclass(frozen=True)
class QuerySpec:
    """Filters plus paging limits for a field query."""

    degree: int | None = None
    abs_disc_min: int = 2
    abs_disc_max: int | None = None
    signature: tuple | None = None
    page_size: int = 100
    max_records: int = 1000

    def __post_init__(self):
        if self.degree is not None and self.degree < 2:
            raise ValueError("degree filter must be >= 2")
        if self.abs_disc_min < 2:
            raise ValueError("abs_disc_min must be >= 2")
        if self.abs_disc_max is not None and self.abs_disc_max < self.abs_disc_min:
            raise ValueError("abs_disc_max must be >= abs_disc_min")
        if not 1 <= self.page_size <= 1000:
            raise ValueError("page_size must be in [1, 1000]")
        if not 0 <= self.max_records <= 10**5:
            raise ValueError("max_records must be in [0, 100000]")
        if self.signature is not None:
            r1, r2 = self.signature
            object.__setattr__(self, "signature", (r1, r2))
            if r1 < 0 or r2 < 0:
                raise ValueError("signature parts must be >= 0")
            if self.degree is not None and r1 + 2 * r2 != self.degree:
                raise ValueError("signature filter inconsistent with degree filter")

    def normalized(self) -> dict:
        return {
            "degree": self.degree,
            "abs_disc_min": self.abs_disc_min,
            "abs_disc_max": self.abs_disc_max,
            "signature": None if self.signature is None else list(self.signature),
            "page_size": self.page_size,
            "max_records": self.max_records,
        }


@dataclass(frozen=True)
class FetchResult:
    records: tuple
    dropped: int  # structurally invalid source rows discarded (logged)
    truncated: bool  # more rows matched than max_records allowed
    source: str  # "fixture" | "network" | "cache"


# --------------------------------------------------------------------------
# payload handling
# --------------------------------------------------------------------------


def _canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _record_to_raw(rec: FieldRecord) -> dict:
    raw = {
        "label": rec.label,
        "degree": rec.degree,
        "discriminant": rec.discriminant,
        "signature": list(rec.signature),
        "defining_polynomial": list(rec.defining_polynomial),
    }
    if rec.h is not None:
        raw["h"] = rec.h
    if rec.regulator is not None:
        raw["regulator"] = rec.regulator
    if rec.torsion_w is not None:
        raw["torsion_w"] = rec.torsion_w
    return raw


def _record_from_raw(raw: dict) -> FieldRecord:
    if not isinstance(raw, dict):
        raise ValueError("record must be an object")
    return FieldRecord(
        label=str(raw["label"]),
        degree=int(raw["degree"]),
        discriminant=int(raw["discriminant"]),
        signature=tuple(raw["signature"]),
        defining_polynomial=tuple(int(c) for c in raw["defining_polynomial"]),
        h=None if raw.get("h") is None else int(raw["h"]),
        regulator=None if raw.get("regulator") is None else float(raw["regulator"]),
        torsion_w=None if raw.get("torsion_w") is None else int(raw["torsion_w"]),
    )


def _matches(rec: FieldRecord, q: QuerySpec) -> bool:
    if q.degree is not None and rec.degree != q.degree:
        return False
    if abs(rec.discriminant) < q.abs_disc_min:
        return False
    if q.abs_disc_max is not None and abs(rec.discriminant) > q.abs_disc_max:
        return False
    if q.signature is not None and rec.signature != q.signature:
        return False
    return True


def _load_payload(cfg: ClientConfig) -> tuple:
    """Raw payload bytes plus the origin they came from (for error messages)."""
    url = cfg.base_url
    if cfg.offline or url.startswith("offline://"):
        origin = "bundled fixture nf_fields_offline.json"
        data = (
            resources.files("nfzeta")
            .joinpath("fixtures/nf_fields_offline.json")
            .read_bytes()
        )
        return data, origin
    if url.startswith("file://"):
        path = Path(url[len("file://") :])
        try:
            return path.read_bytes(), str(path)
        except OSError as exc:
            raise TransportError(f"cannot read {path}: {exc}") from exc
    try:
        resp = requests.get(url, timeout=cfg.timeout_seconds)
        resp.raise_for_status()
        return resp.content, url
    except (requests.RequestException, OSError) as exc:
        raise TransportError(f"cannot reach {url}: {exc}") from exc


def _parse_payload(data: bytes, origin: str) -> tuple:
    """Validated records plus the dropped-row count."""
    try:
        payload = json.loads(data)
    except json.JSONDecodeError as exc:
        raise DecodeError(f"invalid JSON from {origin}: {exc}") from exc
    if not isinstance(payload, dict) or not isinstance(payload.get("fields"), list):
        raise DecodeError(f"payload from {origin} lacks a 'fields' list")
    records = []
    dropped = 0
    for i, raw in enumerate(payload["fields"]):
        try:
            records.append(_record_from_raw(raw))
        except (KeyError, TypeError, ValueError) as exc:
            dropped += 1
            logger.warning("dropping invalid record %d from %s: %s", i, origin, exc)
    return records, dropped


# --------------------------------------------------------------------------
# cache
# --------------------------------------------------------------------------


def _cache_path(cfg: ClientConfig, query: QuerySpec) -> Path:
    key = hashlib.sha256(_canonical(query.normalized()).encode()).hexdigest()
    return Path(cfg.cache_dir) / f"{key}.json"


def _serialize_cache_payload(query: QuerySpec, result: FetchResult) -> bytes:
    payload = {
        "format_version": FORMAT_VERSION,
        "query": query.normalized(),
        "dropped": result.dropped,
        "truncated": result.truncated,
        "records": [_record_to_raw(r) for r in result.records],
    }
    return (_canonical(payload) + "\n").encode()


def cache_store(query: QuerySpec, result: FetchResult, config: ClientConfig | None = None) -> Path:
    """Write the entry under its content address: temp file, then atomic rename."""
    cfg = config or load_config()
    path = _cache_path(cfg, query)
    path.parent.mkdir(parents=True, exist_ok=True)
    data = _serialize_cache_payload(query, result)
    fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise
    return path


def cache_lookup(query: QuerySpec, config: ClientConfig | None = None) -> FetchResult | None:
    """The cached result for this query, or None.

    A corrupt entry (bad JSON, wrong format version, mismatched query,
    invalid record) is invalidated on sight: the file is removed, a warning
    is logged, and the lookup reports a miss.
    """
    cfg = config or load_config()
    path = _cache_path(cfg, query)
    if not path.exists():
        return None
    try:
        payload = json.loads(path.read_bytes())
        if payload["format_version"] != FORMAT_VERSION:
            raise ValueError(f"format_version {payload['format_version']}")
        if payload["query"] != query.normalized():
            raise ValueError("stored query does not match")
        records = tuple(_record_from_raw(r) for r in payload["records"])
        return FetchResult(
            records=records,
            dropped=int(payload["dropped"]),
            truncated=bool(payload["truncated"]),
            source="cache",
        )
    except (KeyError, TypeError, ValueError) as exc:
        logger.warning("invalidating corrupt cache entry %s: %s", path, exc)
        try:
            path.unlink()
        except OSError:
            pass
        return None


# --------------------------------------------------------------------------
# fetch
# --------------------------------------------------------------------------


def fetch(query: QuerySpec, config: ClientConfig | None = None) -> FetchResult:
    """Fetch, validate, filter, paginate, cache, and return field records.

    Records are validated before anything else sees them; invalid rows are
    dropped (counted in ``dropped``, each logged).  Matches are ordered by
    (degree, |discriminant|, label) and assembled page by page up to
    ``max_records``; ``truncated`` reports whether more matched.  The result
    is cached before it is returned.  If the source is unreachable, a warm
    cache answers (source="cache"); a cold cache raises TransportError.
    """
    cfg = config or load_config()
    try:
        data, origin = _load_payload(cfg)
    except TransportError:
        hit = cache_lookup(query, cfg)
        if hit is not None:
            return hit
        raise
    records, dropped = _parse_payload(data, origin)
    matches = sorted(
        (r for r in records if _matches(r, query)),
        key=lambda r: (r.degree, abs(r.discriminant), r.label),
    )
    taken: list = []
    offset = 0
    while offset < len(matches) and len(taken) < query.max_records:
        page = matches[offset : offset + query.page_size]
        room = query.max_records - len(taken)
        taken.extend(page[:room])
        offset += query.page_size
    result = FetchResult(
        records=tuple(taken),
        dropped=dropped,
        truncated=len(matches) > len(taken),
        source="fixture" if (cfg.offline or cfg.base_url.startswith("offline://")) else "network",
    )
    cache_store(query, result, cfg)
    return result


# --------------------------------------------------------------------------
# descriptor conversion
# --------------------------------------------------------------------------


def to_descriptor(rec: FieldRecord) -> FieldDescriptor:
    """Turn a record into a field descriptor the rest of the library accepts.

    Degree 2 becomes Quadratic(m) after checking that the polynomial's
    discriminant reduces to the record's field discriminant (mismatch raises
    ValueError); other degrees become Ingested records carried verbatim.
    """
    if rec.degree == 2:
        c, b, _ = rec.defining_polynomial
        disc_poly = b * b - 4 * c
        if disc_poly == 0:
            raise ValueError(f"{rec.label}: degenerate polynomial discriminant")
        m = squarefree_part(disc_poly)
        D = fundamental_discriminant(m)
        if D != rec.discriminant:
            raise ValueError(
                f"{rec.label}: polynomial gives discriminant {D}, record says {rec.discriminant}"
            )
        expected_sig = (0, 1) if D < 0 else (2, 0)
        if rec.signature != expected_sig:
            raise ValueError(f"{rec.label}: signature {rec.signature} inconsistent with D={D}")
        return Quadratic(m)
    return Ingested(
        label=rec.label,
        degree=rec.degree,
        discriminant=rec.discriminant,
        signature=rec.signature,
        coeffs=rec.defining_polynomial,
        h=rec.h,
        regulator=rec.regulator,
        torsion_w=rec.torsion_w,
    )
