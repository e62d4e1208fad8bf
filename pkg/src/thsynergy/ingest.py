"""Firm-register ingestion: CSV parsing and categorical classification.

Raw rows carry a municipality code, a two-digit NACE activity code, an
employee count, turnover in NOK and a foreign ownership share. Classification
turns each row into the three categorical coordinates used downstream
(municipality, size class, technology group) plus an ownership flag.
"""
from __future__ import annotations

import csv
import io
from bisect import bisect_right
from dataclasses import dataclass, field
from enum import Enum
from typing import BinaryIO, Iterable, Mapping, TextIO


class MissingColumn(ValueError):
    """A required column is absent from the CSV header."""

    def __init__(self, names: Iterable[str]):
        self.names = tuple(names)
        super().__init__(f"missing required column(s): {', '.join(self.names)}")


class MalformedRow(ValueError):
    """A data row failed strict validation. Carries the 1-based line number."""

    def __init__(self, line_no: int, reason: str):
        self.line_no = line_no
        self.reason = reason
        super().__init__(f"line {line_no}: {reason}")


class UnmappedNace(ValueError):
    """A two-digit NACE code with no technology-group mapping."""

    def __init__(self, nace2: int):
        self.nace2 = nace2
        super().__init__(f"NACE code {nace2:02d} has no technology group mapping")


class Ownership(str, Enum):
    DOMESTIC = "domestic"
    FOREIGN = "foreign"


# --- default classification tables -----------------------------------------

# Two-digit NACE division -> technology group 1..10, the standard ten-group
# high-level aggregation. Divisions 04, 40, 44, 57, 67, 83 and 89 do not
# exist in the classification and are deliberately absent.
_NACE_GROUP_RANGES = (
    (1, 3, 1),
    (5, 39, 2),
    (41, 43, 3),
    (45, 56, 4),
    (58, 63, 5),
    (64, 66, 6),
    (68, 68, 7),
    (69, 82, 8),
    (84, 88, 9),
    (90, 99, 10),
)

TECH_GROUP_LABELS: dict[int, str] = {
    1: "agriculture, forestry and fishing",
    2: "manufacturing, mining and quarrying and other industry",
    3: "construction",
    4: "wholesale and retail trade, transport, accommodation and food",
    5: "information and communication",
    6: "financial and insurance activities",
    7: "real estate activities",
    8: "professional, scientific, technical and support activities",
    9: "public administration, education, health and social work",
    10: "other services",
}


def default_nace_map() -> dict[int, int]:
    out: dict[int, int] = {}
    for lo, hi, group in _NACE_GROUP_RANGES:
        for code in range(lo, hi + 1):
            out[code] = group
    return out


DEFAULT_SIZE_BIN_EDGES = (0, 1, 5, 10, 20, 50, 100, 250)
DEFAULT_FOREIGN_CUTOFF = 0.20


def size_labels(edges: tuple[int, ...]) -> tuple[str, ...]:
    """Human-readable labels for half-open employee bins.

    Single-value bins get the bare number ("0"), middle bins "lo-hi" with an
    inclusive upper end, and the unbounded top bin "lo+". Default edges yield
    0, 1-4, 5-9, 10-19, 20-49, 50-99, 100-249 and 250+.
    """
    out = []
    for i, lo in enumerate(edges):
        if i + 1 < len(edges):
            hi = edges[i + 1] - 1
            out.append(str(lo) if hi == lo else f"{lo}-{hi}")
        else:
            out.append(f"{lo}+")
    return tuple(out)


def parse_share(text: str) -> float:
    """Parse an ownership share given as a fraction ("0.2") or percent ("20%")."""
    text = text.strip()
    if text.endswith("%"):
        value = float(text[:-1]) / 100.0
    else:
        value = float(text)
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"share {text!r} outside [0, 1]")
    return value


@dataclass(frozen=True)
class ClassificationConfig:
    """Knobs for the row -> categories mapping.

    foreign_cutoff is inclusive: a share exactly at the cutoff counts as
    foreign. Bin edges must start at 0 and increase strictly; each edge opens
    a half-open interval ending just before the next edge, the last one
    unbounded.
    """

    foreign_cutoff: float = DEFAULT_FOREIGN_CUTOFF
    size_bin_edges: tuple[int, ...] = DEFAULT_SIZE_BIN_EDGES
    nace_map: dict[int, int] = field(default_factory=default_nace_map)

    def __post_init__(self):
        if not 0.0 < self.foreign_cutoff <= 1.0:
            raise ValueError("foreign_cutoff must be in (0, 1]")
        edges = tuple(int(e) for e in self.size_bin_edges)
        if not edges or edges[0] != 0:
            raise ValueError("size_bin_edges must start at 0")
        if any(b <= a for a, b in zip(edges, edges[1:])):
            raise ValueError("size_bin_edges must be strictly increasing")
        object.__setattr__(self, "size_bin_edges", edges)

    @property
    def size_class_labels(self) -> tuple[str, ...]:
        return size_labels(self.size_bin_edges)


@dataclass(frozen=True)
class FirmRecord:
    """One validated register row, units as in the source data (NOK, headcount)."""

    firm_id: str
    municipality_code: str
    nace2: int
    employees: int
    turnover: float
    foreign_share: float

    def __post_init__(self):
        if not 1 <= self.nace2 <= 99:
            raise ValueError(f"nace2 {self.nace2} outside 01-99")
        if self.employees < 0:
            raise ValueError("employees must be non-negative")
        if self.turnover < 0:
            raise ValueError("turnover must be non-negative")
        if not 0.0 <= self.foreign_share <= 1.0:
            raise ValueError("foreign_share must be a fraction in [0, 1]")


@dataclass(frozen=True)
class ClassifiedFirm:
    """A firm reduced to its three categorical coordinates plus ownership."""

    municipality: str
    size_class: str
    tech_group: int
    ownership: Ownership
    turnover: float


# --- CSV parsing ------------------------------------------------------------

CANONICAL_COLUMNS = (
    "firm_id",
    "municipality_code",
    "nace2",
    "employees",
    "turnover_nok",
    "foreign_share",
)
_REQUIRED = CANONICAL_COLUMNS[1:]  # firm_id may be absent


def _as_text_stream(source: bytes | bytearray | BinaryIO | TextIO) -> TextIO:
    if isinstance(source, (bytes, bytearray)):
        return io.StringIO(source.decode("utf-8"))
    if isinstance(source, io.TextIOBase):
        return source
    return io.TextIOWrapper(source, encoding="utf-8", newline="")


def _scan_rows(source, schema: Mapping[str, str] | None):
    """Yield (line_no, record, error) per data row, exactly one of the last
    two non-None. Raises MissingColumn up front. Internal; parse_firm_records
    and validate_firm_csv both drive it.
    """
    mapping = dict(schema) if schema else {}
    for name in CANONICAL_COLUMNS:
        mapping.setdefault(name, name)

    reader = csv.reader(_as_text_stream(source))
    try:
        header = next(reader)
    except StopIteration:
        raise MissingColumn(_REQUIRED) from None
    positions: dict[str, int] = {}
    for canonical in CANONICAL_COLUMNS:
        try:
            positions[canonical] = header.index(mapping[canonical])
        except ValueError:
            pass
    missing = [mapping[c] for c in _REQUIRED if c not in positions]
    if missing:
        raise MissingColumn(missing)
    has_id = "firm_id" in positions
    width = max(positions.values()) + 1

    for row in reader:
        line = reader.line_num
        try:
            if not row:
                raise MalformedRow(line, "blank row")
            if len(row) < width:
                raise MalformedRow(line, f"expected at least {width} fields, got {len(row)}")

            def cell(name: str) -> str:
                return row[positions[name]].strip()

            try:
                nace2 = int(cell("nace2"))
            except ValueError:
                raise MalformedRow(line, f"nace2 {cell('nace2')!r} is not an integer") from None
            try:
                employees = int(cell("employees"))
            except ValueError:
                raise MalformedRow(line, f"employees {cell('employees')!r} is not an integer") from None
            try:
                turnover = float(cell("turnover_nok"))
            except ValueError:
                raise MalformedRow(line, f"turnover_nok {cell('turnover_nok')!r} is not a number") from None
            try:
                share = float(cell("foreign_share"))
            except ValueError:
                raise MalformedRow(line, f"foreign_share {cell('foreign_share')!r} is not a number") from None

            firm_id = cell("firm_id") if has_id else f"row-{line}"
            try:
                record = FirmRecord(
                    firm_id=firm_id,
                    municipality_code=cell("municipality_code"),
                    nace2=nace2,
                    employees=employees,
                    turnover=turnover,
                    foreign_share=share,
                )
            except ValueError as exc:
                raise MalformedRow(line, str(exc)) from None
        except MalformedRow as exc:
            yield line, None, exc
            continue
        yield line, record, None


def parse_firm_records(source, schema: Mapping[str, str] | None = None) -> list[FirmRecord]:
    """Parse a UTF-8 CSV stream into FirmRecords, strictly.

    Arguments:
        source: bytes, a binary stream or a text stream positioned at the header.
        schema: optional map from canonical column names (firm_id,
            municipality_code, nace2, employees, turnover_nok, foreign_share)
            to the actual header names in the file.

    Any defect aborts the whole parse; rows are never silently dropped, so
    the returned list length always equals the data row count.
    """
    out = []
    for _, record, error in _scan_rows(source, schema):
        if error is not None:
            raise error
        out.append(record)
    return out


def classify(record: FirmRecord, config: ClassificationConfig | None = None) -> ClassifiedFirm:
    """Map one FirmRecord to its categorical coordinates.

    Raises UnmappedNace when the two-digit code has no technology group in
    the configured map.
    """
    config = config or ClassificationConfig()
    group = config.nace_map.get(record.nace2)
    if group is None:
        raise UnmappedNace(record.nace2)
    bin_idx = bisect_right(config.size_bin_edges, record.employees) - 1
    ownership = (
        Ownership.FOREIGN
        if record.foreign_share >= config.foreign_cutoff
        else Ownership.DOMESTIC
    )
    return ClassifiedFirm(
        municipality=record.municipality_code,
        size_class=config.size_class_labels[bin_idx],
        tech_group=group,
        ownership=ownership,
        turnover=record.turnover,
    )


def classify_all(records: Iterable[FirmRecord], config: ClassificationConfig | None = None) -> list[ClassifiedFirm]:
    config = config or ClassificationConfig()
    return [classify(r, config) for r in records]


def validate_firm_csv(source, schema: Mapping[str, str] | None = None,
                      config: ClassificationConfig | None = None) -> tuple[int, list[tuple[int, str]]]:
    """Scan a CSV collecting every defect instead of stopping at the first.

    Returns (data_row_count, issues) where each issue is (line_no, message).
    Used by the command-line validate step; parse_firm_records stays strict.
    """
    config = config or ClassificationConfig()
    issues: list[tuple[int, str]] = []
    rows = 0
    try:
        for line, record, error in _scan_rows(source, schema):
            rows += 1
            if error is not None:
                issues.append((error.line_no, error.reason))
                continue
            try:
                classify(record, config)
            except UnmappedNace as exc:
                issues.append((line, str(exc)))
    except MissingColumn as exc:
        issues.append((1, str(exc)))
    return rows, issues


def load_config(path: str) -> ClassificationConfig:
    """Read a key = value config file for classification overrides.

    Recognized keys:
        foreign_cutoff   fraction ("0.2") or percent ("20%")
        size_bin_edges   comma-separated non-negative integers starting at 0

    Lines starting with # and blank lines are ignored. Unknown keys are an
    error rather than a silent no-op.
    """
    cutoff = DEFAULT_FOREIGN_CUTOFF
    edges = DEFAULT_SIZE_BIN_EDGES
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            stripped = raw.strip()
            if not stripped or stripped.startswith("#"):
                continue
            if "=" not in stripped:
                raise ValueError(f"config line not key = value: {raw!r}")
            key, _, value = stripped.partition("=")
            key = key.strip()
            value = value.strip()
            if key == "foreign_cutoff":
                cutoff = parse_share(value)
            elif key == "size_bin_edges":
                edges = tuple(int(part.strip()) for part in value.split(","))
            else:
                raise ValueError(f"unknown config key {key!r}")
    return ClassificationConfig(foreign_cutoff=cutoff, size_bin_edges=edges)
