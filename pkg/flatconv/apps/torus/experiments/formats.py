"""
Writers that render run documents as JSON or CSV text
"""
from __future__ import annotations

import csv
import json
from collections.abc import Sequence
from enum import Enum
from io import StringIO
from typing import Any

from attrs import define, field


class ReportFormat(Enum):
    """
    Format of the artifacts written by a run
    """

    JSON = ".json"
    CSV = ".csv"


@define(frozen=True)
class Table:
    """
    A CSV block; ``gap`` puts a blank line before it unless it comes first.
    """

    header: tuple[str, ...] = field(converter=tuple)
    rows: list[Sequence[Any]] = field(factory=list)
    gap: bool = True


@define(frozen=True)
class Document:
    """
    One artifact of a run, in both shapes

    ``payload`` is what the JSON writer dumps. ``tables`` are what the CSV
    writer prints, one after the other, separated by a blank line.
    """

    name: str
    payload: dict[str, Any]
    tables: list[Table] = field(factory=list)


class Writer:
    """
    Base class to create a writer

    To create a new Writer you need to implement `_render`
    """

    format: ReportFormat

    @classmethod
    def filename(cls, document: Document) -> str:
        """Artifact file name for ``document``."""
        return f"{document.name}{cls.format.value}"

    @classmethod
    def render(cls, document: Document) -> str:
        """
        Returns the document as text, ending with a newline
        """
        return cls._render(document)

    @classmethod
    def _render(cls, document: Document) -> str:
        raise NotImplementedError


class JSONWriter(Writer):
    """
    Writer used for .json files

    Keys are sorted so that equal documents give byte-identical files.
    """

    format = ReportFormat.JSON

    @classmethod
    def _render(cls, document: Document) -> str:
        return json.dumps(document.payload, indent=2, sort_keys=True) + "\n"


class CSVWriter(Writer):
    """
    Writer used for .csv files
    """

    format = ReportFormat.CSV

    @classmethod
    def _render(cls, document: Document) -> str:
        if not document.tables:
            raise ValueError(f"'{document.name}' has no tabular form")
        with StringIO() as csv_buffer:
            csv_writer = csv.writer(csv_buffer, lineterminator="\n")
            for index, table in enumerate(document.tables):
                if index and table.gap:
                    csv_writer.writerow([])
                if table.header:
                    csv_writer.writerow(table.header)
                csv_writer.writerows(table.rows)
            return csv_buffer.getvalue()


# Add writers here
_writers = [JSONWriter, CSVWriter]


def get_writer(report_format: ReportFormat) -> type[Writer]:
    """
    Get the writer for the respective `format`

    Raise `ValueError` if no writer found
    """
    for writer in _writers:
        if report_format == writer.format:
            return writer

    raise ValueError(f"Writer not found for format {report_format}")
