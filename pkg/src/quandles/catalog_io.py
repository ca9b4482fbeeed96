"""Plain-text formats for quandle matrices and catalogs.

A ``.qnd`` file is the order n on the first line, then n rows of n
space-separated 1-based entries.  Catalogs are directories of ``.qnd``
files plus an ``index.txt`` with one line per entry:

    <id> <order> <profile> <latin> <|Aut|>

where the profile is rendered like ``{1,2,2}``.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from importlib import resources

from .canon import automorphism_group
from .quandle import Quandle, Table, from_table, is_connected, is_latin, profile


class MatrixFormatError(Exception):
    """Base class for .qnd parse errors."""


class BadHeader(MatrixFormatError):
    def __init__(self, text: str):
        super().__init__(f"first line must be the order, got {text!r}")


class RaggedRow(MatrixFormatError):
    def __init__(self, line: int):
        self.line = line
        super().__init__(f"line {line} does not have the expected width")


class OutOfRange(MatrixFormatError):
    def __init__(self, i: int, j: int, value: int):
        super().__init__(f"entry ({i},{j}) = {value} is outside 1..n")


class ValidationFailed(Exception):
    def __init__(self, entry_id: str, cause: Exception):
        self.entry_id = entry_id
        self.cause = cause
        super().__init__(f"catalog entry {entry_id}: {cause}")


def parse_matrix(text: str) -> Table:
    """Parse the .qnd format; tolerant of extra spaces, not ragged rows."""
    lines = [ln for ln in text.splitlines()]
    if not lines or not lines[0].strip().isdigit():
        raise BadHeader(lines[0] if lines else "")
    n = int(lines[0].strip())
    body = [ln for ln in lines[1:] if ln.strip()]
    if len(body) != n:
        raise RaggedRow(len(body) + 2 if len(body) < n else n + 2)
    table = []
    for i, line in enumerate(body, start=1):
        fields = line.split()
        if len(fields) != n:
            raise RaggedRow(i + 1)
        row = []
        for j, f in enumerate(fields, start=1):
            try:
                value = int(f)
            except ValueError:
                raise RaggedRow(i + 1) from None
            if not 1 <= value <= n:
                raise OutOfRange(i, j, value)
            row.append(value)
        table.append(tuple(row))
    return tuple(table)


def serialize_matrix(table: Table) -> str:
    """Canonical spacing: header line, single spaces, newline-terminated."""
    n = len(table)
    lines = [str(n)]
    lines.extend(" ".join(str(x) for x in row) for row in table)
    return "\n".join(lines) + "\n"


def format_profile(prof: tuple[int, ...]) -> str:
    return "{" + ",".join(str(x) for x in prof) + "}"


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    quandle: Quandle

    @property
    def order(self) -> int:
        return self.quandle.n


def load_quandle(path: str) -> Quandle:
    with open(path, encoding="ascii") as fh:
        return from_table(parse_matrix(fh.read()))


def save_quandle(path: str, q: Quandle):
    with open(path, "w", encoding="ascii") as fh:
        fh.write(serialize_matrix(q.table))


def save_catalog(directory: str, entries: list[CatalogEntry]):
    """Write one <id>.qnd per entry plus index.txt (temp-then-rename)."""
    os.makedirs(directory, exist_ok=True)
    index_lines = []
    for entry in entries:
        save_quandle(os.path.join(directory, f"{entry.id}.qnd"), entry.quandle)
        q = entry.quandle
        prof = format_profile(profile(q)) if is_connected(q) else "-"
        aut = len(automorphism_group(q)) if is_connected(q) else "-"
        latin = "latin" if is_latin(q) else "nonlatin"
        index_lines.append(f"{entry.id} {q.n} {prof} {latin} {aut}")
    tmp = os.path.join(directory, "index.txt.tmp")
    with open(tmp, "w", encoding="ascii") as fh:
        fh.write("\n".join(index_lines) + ("\n" if index_lines else ""))
    os.replace(tmp, os.path.join(directory, "index.txt"))


def load_catalog(directory: str) -> list[CatalogEntry]:
    """Load and validate every .qnd file, sorted by file name."""
    entries = []
    for name in sorted(os.listdir(directory)):
        if not name.endswith(".qnd"):
            continue
        entry_id = name[: -len(".qnd")]
        try:
            q = load_quandle(os.path.join(directory, name))
        except Exception as exc:
            raise ValidationFailed(entry_id, exc) from exc
        entries.append(CatalogEntry(id=entry_id, quandle=q))
    return entries


PAPER_TABLE_IDS = ("q61", "q72", "q52", "q53")


def paper_tables() -> list[CatalogEntry]:
    """The four bundled operation tables: Q61, Q72 and the canonical
    matrices of Q52 and Q53."""
    entries = []
    for entry_id in PAPER_TABLE_IDS:
        text = (
            resources.files("quandles")
            .joinpath("paper_tables", f"{entry_id}.qnd")
            .read_text(encoding="ascii")
        )
        entries.append(
            CatalogEntry(id=entry_id, quandle=from_table(parse_matrix(text)))
        )
    return entries


def paper_table(entry_id: str) -> Quandle:
    for entry in paper_tables():
        if entry.id == entry_id:
            return entry.quandle
    raise KeyError(entry_id)
