"""Flat-file persistence for sweeps, evaluations, checks and estimates."""

from __future__ import annotations

import csv
import io
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence, TextIO

from pydantic import BaseModel

from qpoch.core.errors import ConfigError
from qpoch.models import SweepDocument, SweepMeta, SweepRowRecord

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("csv", "json")
SWEEP_COLUMNS = ("order", "beta_exp", "partial_re", "partial_im", "abs_error")


class ResultRepository:
    """Render records as CSV or JSON and store them in a file or a text stream."""

    def __init__(self, output_format: str = "csv", path: Optional[Path] = None, stream: Optional[TextIO] = None) -> None:
        if output_format not in OUTPUT_FORMATS:
            raise ConfigError(f"unknown output format {output_format!r}, expected one of {OUTPUT_FORMATS}")
        self._format = output_format
        self._path = Path(path) if path is not None else None
        self._stream = stream

    @property
    def output_format(self) -> str:
        return self._format

    def render_sweep(self, meta: SweepMeta, rows: Sequence[SweepRowRecord]) -> str:
        if self._format == "json":
            return SweepDocument(meta=meta, rows=list(rows)).model_dump_json(indent=2) + "\n"
        return _csv_text(SWEEP_COLUMNS, [row.model_dump() for row in rows])

    def render_records(self, records: Sequence[BaseModel]) -> str:
        if not records:
            return "[]\n" if self._format == "json" else ""
        if self._format == "json":
            payload = [record.model_dump() for record in records]
            return json.dumps(payload if len(payload) > 1 else payload[0], indent=2) + "\n"
        columns = tuple(type(records[0]).model_fields)
        return _csv_text(columns, [record.model_dump() for record in records])

    def save_sweep(self, meta: SweepMeta, rows: Sequence[SweepRowRecord]) -> None:
        self._write(self.render_sweep(meta, rows))
        logger.info("Stored %d sweep rows", len(rows))

    def save_records(self, records: Sequence[BaseModel]) -> None:
        self._write(self.render_records(records))

    def save_text(self, text: str) -> None:
        self._write(text if text.endswith("\n") else text + "\n")

    def _write(self, text: str) -> None:
        if self._path is not None:
            self._path.parent.mkdir(parents=True, exist_ok=True)
            self._path.write_text(text, encoding="utf-8")
            logger.info("Results written to %s", self._path)
            return
        stream = self._stream if self._stream is not None else sys.stdout
        stream.write(text)
        stream.flush()


def _csv_text(columns: Sequence[str], rows: Sequence[dict]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(columns), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({column: row[column] for column in columns})
    return buffer.getvalue()


def load_sweep(path: Path) -> list[SweepRowRecord]:
    """Read the rows of a sweep written in either format."""

    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix == ".json" or text.lstrip().startswith("{"):
        return SweepDocument.model_validate_json(text).rows
    return [SweepRowRecord(**row) for row in csv.DictReader(io.StringIO(text))]
