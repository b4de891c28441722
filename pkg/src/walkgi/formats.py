"""graph6 codec, line-oriented dataset reader, and the invariant catalog.

graph6 packs the upper adjacency triangle column-wise, six bits per printable
character (ASCII 63..126).  The codec is bit-exact: parsing rejects stray
characters, wrong body lengths, and nonzero padding bits, and writing always
round-trips.  Size headers cover 1 and 4 byte forms (n <= 4096); the 8-byte
huge-graph header is rejected.

The catalog is a flat TSV file (header line "walkgi-catalog v1") holding one
record per graph: its graph6 text, strong-regularity parameters, exact
determinant as decimal text, and content digests of the two local-complement
invariant encodings.  The encodings themselves live in a sidecar blob
directory keyed by hex digest, so equality checks can always fall back to
full byte comparison.
"""

from __future__ import annotations

import hashlib
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .graph import MAX_VERTICES, Graph, SrgParams, srg_parameters
from .invariants import lc_determinant_profile, lc_walk_signature
from .linalg import adjacency_matrix, determinant

GRAPH6_HEADER_TOKEN = ">>graph6<<"
CATALOG_HEADER = "walkgi-catalog v1"


class Graph6Error(ValueError):
    """Malformed graph6 text."""


class DatasetError(ValueError):
    """Dataset read aborted (strict mode)."""


class CatalogError(ValueError):
    """Malformed or inconsistent catalog data."""


def parse_graph6(text: str) -> Graph:
    """Parse one graph6 line into a Graph."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER_TOKEN):
        s = s[len(GRAPH6_HEADER_TOKEN):]
    if not s:
        raise Graph6Error("empty graph6 text")
    vals = []
    for pos, ch in enumerate(s):
        b = ord(ch)
        if not 63 <= b <= 126:
            raise Graph6Error(f"invalid graph6 byte at position {pos}")
        vals.append(b - 63)

    if vals[0] < 63:
        n = vals[0]
        body = vals[1:]
    else:
        if len(vals) >= 2 and vals[1] == 63:
            raise Graph6Error("8-byte size header (n > 258047) not supported")
        if len(vals) < 4:
            raise Graph6Error("truncated size header")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    if n == 0:
        raise Graph6Error("graph must have at least one vertex")
    if n > MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} exceeds cap {MAX_VERTICES}")

    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise Graph6Error(
            f"truncated/overlong body: expected {expected} characters for n={n}, got {len(body)}"
        )

    rows = [0] * n
    t = 0
    i, j = 0, 1
    for val in body:
        for shift in (5, 4, 3, 2, 1, 0):
            bit = (val >> shift) & 1
            if t < nbits:
                if bit:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                i += 1
                if i == j:
                    i = 0
                    j += 1
            elif bit:
                raise Graph6Error("nonzero padding bits in graph6 body")
            t += 1
    return Graph(tuple(rows))


def write_graph6(G: Graph) -> str:
    """Canonical graph6 line; parse_graph6 reconstructs G exactly."""
    n = G.n
    out = []
    if n <= 62:
        out.append(chr(63 + n))
    else:
        out.append("~")
        out.append(chr(63 + ((n >> 12) & 63)))
        out.append(chr(63 + ((n >> 6) & 63)))
        out.append(chr(63 + (n & 63)))
    acc = 0
    nbits = 0
    for j in range(1, n):
        row_j = G.rows[j]
        for i in range(j):
            acc = (acc << 1) | ((row_j >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


@dataclass(frozen=True, slots=True)
class ParseFailure:
    path: str
    lineno: int
    message: str

    def __str__(self) -> str:
        return f"{self.path}:{self.lineno}: {self.message}"


def read_dataset(
    path: str | os.PathLike, strict: bool = False
) -> tuple[list[tuple[str, Graph]], list[ParseFailure]]:
    """Read a graph6 dataset file: one graph per line, file order preserved.

    Blank lines and '#' comments are skipped, as is an optional
    '>>graph6<<' header token.  Ids are "filename:lineno".  Parse failures
    are collected and returned; with strict=True the first failure raises
    DatasetError instead.
    """
    path = Path(path)
    name = path.name
    entries: list[tuple[str, Graph]] = []
    failures: list[ParseFailure] = []
    with open(path, encoding="utf-8", errors="replace") as fh:
        for lineno, line in enumerate(fh, start=1):
            s = line.strip()
            if s.startswith(GRAPH6_HEADER_TOKEN):
                s = s[len(GRAPH6_HEADER_TOKEN):].strip()
            if not s or s.startswith("#"):
                continue
            try:
                entries.append((f"{name}:{lineno}", parse_graph6(s)))
            except Graph6Error as exc:
                if strict:
                    raise DatasetError(f"{path}:{lineno}: {exc}") from exc
                failures.append(ParseFailure(str(path), lineno, str(exc)))
    return entries, failures


@dataclass(frozen=True, slots=True)
class CatalogRecord:
    """One catalog line plus (optionally) the sidecar invariant encodings."""

    id: str
    g6: str
    params: SrgParams | None
    det: int
    lc_profile_digest: str
    lc_walk_digest: str
    lc_profile_encoding: bytes | None = None
    lc_walk_encoding: bytes | None = None


def make_catalog_record(record_id: str, G: Graph) -> CatalogRecord:
    """Compute a full catalog record (both invariant encodings) for one graph."""
    profile_enc = lc_determinant_profile(G).encode()
    walk_enc = lc_walk_signature(G).encode()
    return CatalogRecord(
        id=record_id,
        g6=write_graph6(G),
        params=srg_parameters(G),
        det=determinant(adjacency_matrix(G)),
        lc_profile_digest=hashlib.sha256(profile_enc).hexdigest(),
        lc_walk_digest=hashlib.sha256(walk_enc).hexdigest(),
        lc_profile_encoding=profile_enc,
        lc_walk_encoding=walk_enc,
    )


def blob_dir(path: str | os.PathLike) -> Path:
    return Path(f"{os.fspath(path)}.blobs")


def _params_text(params: SrgParams | None) -> str:
    if params is None:
        return "-"
    return f"{params.n},{params.d},{params.alpha},{params.beta}"


def _parse_params(text: str, where: str) -> SrgParams | None:
    if text == "-":
        return None
    parts = text.split(",")
    if len(parts) != 4:
        raise CatalogError(f"{where}: bad params field {text!r}")
    try:
        n, d, alpha, beta = (int(p) for p in parts)
    except ValueError as exc:
        raise CatalogError(f"{where}: bad params field {text!r}") from exc
    return SrgParams(n, d, alpha, beta)


def catalog_write(records: Iterable[CatalogRecord], path: str | os.PathLike) -> None:
    """Write catalog TSV plus sidecar blobs for records carrying encodings."""
    records = list(records)
    lines = [CATALOG_HEADER]
    for rec in records:
        for field_value in (rec.id, rec.g6):
            if "\t" in field_value or "\n" in field_value:
                raise CatalogError(f"field {field_value!r} contains tab/newline")
        lines.append(
            "\t".join(
                (
                    rec.id,
                    rec.g6,
                    _params_text(rec.params),
                    str(rec.det),
                    rec.lc_profile_digest,
                    rec.lc_walk_digest,
                )
            )
        )
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
    blobs = blob_dir(path)
    pending = []
    for rec in records:
        for digest, enc in (
            (rec.lc_profile_digest, rec.lc_profile_encoding),
            (rec.lc_walk_digest, rec.lc_walk_encoding),
        ):
            if enc is not None:
                if hashlib.sha256(enc).hexdigest() != digest:
                    raise CatalogError(f"record {rec.id!r}: digest does not match encoding")
                pending.append((digest, enc))
    if pending:
        blobs.mkdir(parents=True, exist_ok=True)
        for digest, enc in pending:
            target = blobs / digest
            if not target.exists():
                target.write_bytes(enc)


def catalog_read(path: str | os.PathLike, with_blobs: bool = True) -> list[CatalogRecord]:
    """Read a catalog; blob contents are verified against their digests."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    lines = text.splitlines()
    if not lines or lines[0] != CATALOG_HEADER:
        found = lines[0] if lines else "<empty file>"
        raise CatalogError(f"unsupported catalog version: {found!r}")
    blobs = blob_dir(path)
    records = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line:
            continue
        fields = line.split("\t")
        if len(fields) != 6:
            raise CatalogError(f"{path}:{lineno}: expected 6 fields, got {len(fields)}")
        rec_id, g6, params_text, det_text, profile_digest, walk_digest = fields
        where = f"{path}:{lineno}"
        try:
            det = int(det_text)
        except ValueError as exc:
            raise CatalogError(f"{where}: bad determinant field {det_text!r}") from exc
        profile_enc = walk_enc = None
        if with_blobs:
            profile_enc = _load_blob(blobs, profile_digest, where)
            walk_enc = _load_blob(blobs, walk_digest, where)
        records.append(
            CatalogRecord(
                id=rec_id,
                g6=g6,
                params=_parse_params(params_text, where),
                det=det,
                lc_profile_digest=profile_digest,
                lc_walk_digest=walk_digest,
                lc_profile_encoding=profile_enc,
                lc_walk_encoding=walk_enc,
            )
        )
    return records


def _load_blob(blobs: Path, digest: str, where: str) -> bytes | None:
    target = blobs / digest
    if not target.is_file():
        return None
    data = target.read_bytes()
    if hashlib.sha256(data).hexdigest() != digest:
        raise CatalogError(f"{where}: sidecar blob {digest} fails digest check")
    return data
