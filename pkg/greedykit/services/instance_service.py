"""
Instance Service - reading and writing problem instances

Formats:
    .csv      facility matrix, one customer per row, comma-separated reals
    .weights  modular weights, reals separated by commas or whitespace
    .table    explicit value table, 2^n reals in subset-bitmask order
"""

import csv
import hashlib
import logging
import math
import re
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence

import numpy as np

from greedykit.core.exceptions import DomainError, InstanceParseError
from greedykit.core.sets import SetFunction
from greedykit.functions import (
    FacilityFunction,
    FacilityMatrix,
    ModularFunction,
    ModularWeights,
    TabulatedFunction,
)

logger = logging.getLogger(__name__)

FACILITY = "facility"
MODULAR = "modular"
TABLE = "table"
KINDS = (FACILITY, MODULAR, TABLE)

EXTENSION_KINDS = {
    ".csv": FACILITY,
    ".weights": MODULAR,
    ".table": TABLE,
}

_SEPARATORS = re.compile(r"[,\s]+")


@dataclass
class InstanceFile:
    """A parsed instance and where it came from"""

    path: str
    kind: str
    function: SetFunction
    values: np.ndarray
    checksum: str

    @property
    def n(self) -> int:
        return self.function.n

    @property
    def m(self) -> int:
        return self.values.shape[0] if self.kind == FACILITY else 1


def _read_text(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8-sig")
    except FileNotFoundError:
        raise InstanceParseError(f"instance file not found: {path}")
    except UnicodeDecodeError as e:
        raise InstanceParseError(f"instance file is not UTF-8: {path} ({e})")


def _strip_trailing_blank(lines: List[str]) -> List[str]:
    while lines and not lines[-1].strip():
        lines.pop()
    return lines


def _parse_real(token: str, row: int, col: Optional[int] = None) -> float:
    try:
        return float(token.strip())
    except ValueError:
        where = f" col {col}" if col is not None else ""
        raise InstanceParseError(f"not a decimal number{where}: {token.strip()!r}", row=row)


def parse_matrix_csv(path, header: bool = False) -> FacilityMatrix:
    """
    Parse a facility matrix

    Args:
        path: CSV file, one customer per row
        header: Skip the first row

    Returns:
        FacilityMatrix with m = data rows and n = fields per row

    Raises:
        InstanceParseError: Empty file, ragged row, or unparseable number
        DomainError: Negative entry, reported as (row, col) of the file
    """
    path = Path(path)
    lines = _strip_trailing_blank(_read_text(path).splitlines())
    first_row = 1
    if header and lines:
        lines = lines[1:]
        first_row = 2
    if not lines:
        raise InstanceParseError(f"no data rows in {path}")

    rows = []
    width = None
    for offset, fields in enumerate(csv.reader(lines)):
        row_number = first_row + offset
        if width is None:
            width = len(fields)
        elif len(fields) != width:
            raise InstanceParseError(f"ragged row: expected {width} fields, found {len(fields)}", row=row_number)
        values = []
        for col, token in enumerate(fields, start=1):
            value = _parse_real(token, row_number, col)
            if not math.isfinite(value):
                raise DomainError(f"non-finite entry at (row {row_number}, col {col})")
            if value < 0:
                raise DomainError(f"negative entry {value} at (row {row_number}, col {col})")
            values.append(value)
        rows.append(values)

    matrix = FacilityMatrix(rows)
    logger.info(f"Parsed facility matrix {matrix.m}x{matrix.n} from {path}")
    return matrix


def _parse_reals(path: Path) -> List[float]:
    text = _read_text(path)
    values = []
    for row, line in enumerate(text.splitlines(), start=1):
        for token in _SEPARATORS.split(line.strip()):
            if token:
                values.append(_parse_real(token, row))
    if not values:
        raise InstanceParseError(f"no values in {path}")
    return values


def parse_weights(path) -> ModularWeights:
    return ModularWeights(_parse_reals(Path(path)))


def parse_table(path) -> np.ndarray:
    return np.array(_parse_reals(Path(path)), dtype=np.float64)


def parse_labels(path) -> List[str]:
    lines = _strip_trailing_blank(_read_text(Path(path)).splitlines())
    return [line.strip() for line in lines]


def infer_kind(path, kind: Optional[str] = None) -> str:
    if kind is not None:
        if kind not in KINDS:
            raise DomainError(f"Unknown instance kind: {kind}")
        return kind
    suffix = Path(path).suffix.lower()
    if suffix not in EXTENSION_KINDS:
        raise DomainError(f"Cannot infer instance kind from extension {suffix!r}; pass --kind")
    return EXTENSION_KINDS[suffix]


def checksum(kind: str, values: np.ndarray) -> str:
    """SHA-256 over the shape and the round-trip decimal form of every value"""
    digest = hashlib.sha256()
    digest.update(f"{kind}:{'x'.join(str(d) for d in values.shape)}:".encode())
    digest.update(",".join(repr(float(v)) for v in values.ravel()).encode())
    return digest.hexdigest()


def load_instance(
    path,
    kind: Optional[str] = None,
    header: bool = False,
    labels: Optional[Sequence[str]] = None,
) -> InstanceFile:
    """
    Load an instance file as a set function

    Args:
        path: Instance file
        kind: facility, modular or table; inferred from the extension if omitted
        header: Skip a header row (facility CSV only)
        labels: Optional display labels, one per element

    Returns:
        InstanceFile
    """
    kind = infer_kind(path, kind)
    try:
        if kind == FACILITY:
            matrix = parse_matrix_csv(path, header=header)
            function, values = FacilityFunction(matrix, labels=labels), matrix.values
        elif kind == MODULAR:
            weights = parse_weights(path)
            function, values = ModularFunction(weights, labels=labels), weights.values
        else:
            table = parse_table(path)
            function = TabulatedFunction(table, labels=labels)
            values = function.values
    except ValueError as e:
        if isinstance(e, (DomainError, InstanceParseError)):
            raise
        raise DomainError(str(e))

    return InstanceFile(
        path=str(path),
        kind=kind,
        function=function,
        values=values,
        checksum=checksum(kind, values),
    )


def format_real(value: float) -> str:
    """Decimal form with 17 significant digits (round-trips any float64)"""
    return format(float(value), ".17g")


def write_matrix_csv(matrix: FacilityMatrix, path) -> Path:
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        for row in matrix.values:
            writer.writerow([format_real(v) for v in row])
    logger.info(f"Wrote facility matrix {matrix.m}x{matrix.n} to {path}")
    return path
