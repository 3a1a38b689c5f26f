import csv
import io
import sys
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, TextIO

from .. import __version__
from ..exceptions import ConfigurationError
from .records import CSV_COLUMNS, CensusRecord


PROJECT = "lefschetz-mci"


def header_line(**fields: Any) -> str:
    """'# lefschetz-mci <version> key=value ...' with keys in call order"""
    parts = [f"# {PROJECT} {__version__}"]
    for key, value in fields.items():
        if isinstance(value, (list, tuple)):
            value = ",".join(str(v) for v in value)
        parts.append(f"{key}={value}")
    return " ".join(parts)


class CensusWriter:
    """Writes census records to a file (or stdout) as JSONL or CSV"""

    def __init__(self, out: Optional[str] = None, output_format: str = "jsonl", **header: Any):
        if output_format not in ("jsonl", "csv"):
            raise ConfigurationError(f"unknown output format {output_format!r}")
        self.out = Path(out) if out else None
        self.output_format = output_format
        self.header = header
        self.count = 0
        self._stream: Optional[TextIO] = None
        self._csv = None

    def __enter__(self) -> 'CensusWriter':
        self.open()
        return self

    def __exit__(self, *exc_info):
        self.close()

    def open(self):
        if self.out is None:
            self._stream = sys.stdout
        else:
            self.out.parent.mkdir(parents=True, exist_ok=True)
            self._stream = open(self.out, 'w', newline='')
        self._stream.write(header_line(**self.header) + '\n')
        if self.output_format == "csv":
            self._csv = csv.writer(self._stream, lineterminator='\n')
            self._csv.writerow(CSV_COLUMNS)

    def write(self, record: CensusRecord):
        if self._stream is None:
            self.open()
        if self._csv is not None:
            self._csv.writerow(record.to_csv_row())
        else:
            self._stream.write(record.to_json_line() + '\n')
        self.count += 1

    def write_all(self, records: Iterable[CensusRecord]) -> int:
        for record in records:
            self.write(record)
        return self.count

    def close(self):
        if self._stream is not None and self._stream is not sys.stdout:
            self._stream.close()
        else:
            sys.stdout.flush()
        self._stream = None
        self._csv = None


def read_header(path: str) -> Dict[str, str]:
    """key=value pairs of the first header line"""
    with open(path, 'r') as f:
        first = f.readline().strip()
    if not first.startswith('#'):
        return {}
    return dict(part.split('=', 1) for part in first.split()[3:] if '=' in part)


def read_records(path: str) -> List[CensusRecord]:
    """Parse a census file back, skipping '#' lines; the format is sniffed from the content"""
    with open(path, 'r') as f:
        lines = [line for line in f if line.strip() and not line.startswith('#')]
    if not lines:
        return []
    if lines[0].lstrip().startswith('{'):
        return [CensusRecord.from_json_line(line) for line in lines]
    reader = csv.DictReader(io.StringIO(''.join(lines)))
    return [CensusRecord.from_csv_row(row) for row in reader]
