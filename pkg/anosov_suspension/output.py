# -*- coding: utf-8 -*-

"""
Serialize report frames as CSV or JSON lines.

Frames are written by a ``polars_writer.Writer`` into an in-memory buffer
first, then the bytes go to the output path (or stdout). Trailing summary
records are appended as extra JSON lines built from one-row frames.
"""

import typing as T
import io
import sys
from pathlib import Path

import polars as pl
from polars_writer.writer import Writer

from .constants import OutputFormatEnum
from .typehint import T_RECORD


def new_writer(format: T.Union[str, OutputFormatEnum]) -> Writer:
    return Writer(format=OutputFormatEnum(format).value)


def frame_to_bytes(df: pl.DataFrame, polars_writer: Writer) -> bytes:
    buffer = io.BytesIO()
    polars_writer.write(df, file_args=[buffer])
    return buffer.getvalue()


def record_to_bytes(record: T_RECORD) -> bytes:
    """
    One JSON line for a flat record.
    """
    return frame_to_bytes(pl.DataFrame([record]), new_writer(OutputFormatEnum.ndjson))


def render(
    df: pl.DataFrame,
    format: T.Union[str, OutputFormatEnum],
    trailing_records: T.Optional[T.Iterable[T_RECORD]] = None,
) -> bytes:
    """
    :param trailing_records: records appended after the frame, only for
        ``ndjson``.
    """
    data = frame_to_bytes(df, new_writer(format))
    if trailing_records:
        if OutputFormatEnum(format) is not OutputFormatEnum.ndjson:
            raise ValueError("trailing records are only supported for ndjson")
        if data and not data.endswith(b"\n"):
            data += b"\n"
        for record in trailing_records:
            data += record_to_bytes(record)
    return data


def emit(data: bytes, out: T.Optional[T.Union[str, Path]] = None) -> T.Optional[Path]:
    """
    Write ``data`` to ``out``, or to stdout when ``out`` is ``None`` or ``"-"``.
    """
    if out is None or str(out) == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        return None
    path = Path(out)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(data)
    return path
