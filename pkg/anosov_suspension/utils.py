# -*- coding: utf-8 -*-

"""
Small helpers shared by every module: unit-interval wrapping, seeded
generators and ascii rendering of report frames.
"""

import typing as T
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import polars as pl
from tabulate import tabulate
from more_itertools import chunked


def wrap_unit(v: float) -> float:
    """
    Reduce ``v`` modulo 1 into the half-open interval ``[0, 1)``.

    ``v - floor(v)`` may round up to exactly ``1.0`` for tiny negative
    inputs, that case is mapped to ``0.0`` so representatives are unique.

    >>> wrap_unit(1.0)
    0.0
    >>> wrap_unit(-0.25)
    0.75
    """
    r = v - math.floor(v)
    if r >= 1.0:
        return 0.0
    return r


def wrap_delta(d: float) -> float:
    """
    Shortest signed representative of a coordinate difference on the circle,
    in ``[-0.5, 0.5)``.
    """
    return d - math.floor(d + 0.5)


def new_rng(seed: int) -> np.random.Generator:
    """
    The single named generator of this project: numpy ``PCG64`` seeded with
    a 64-bit integer.
    """
    return np.random.Generator(np.random.PCG64(seed))


def quantize(v: float, quantum: float) -> int:
    """
    Integer cache key of ``v`` on a grid of spacing ``quantum``.
    """
    return int(round(v / quantum))


def df_to_ascii(df: pl.DataFrame) -> str:
    """
    Convert a polars DataFrame to an ASCII table in string.
    """
    return tabulate(
        [list(record.values()) for record in df.to_dicts()],
        headers=list(df.schema),
        tablefmt="grid",
    )


def concat_report_frames(
    dfs: T.List[pl.DataFrame],
) -> pl.DataFrame:
    """
    Stack report frames whose columns differ (for example Jacobian probe rows
    and cross-section rows) into one frame.

    Columns are ordered by first appearance; a column missing from a frame is
    filled with nulls of the dtype it has elsewhere. A column that appears
    with two different dtypes raises ``TypeError``.

    **Example**

    >>> jac = pl.DataFrame({"record": ["jacobian"], "max_abs_error": [1e-9]})
    >>> sec = pl.DataFrame({"record": ["section"], "mismatch": [2e-12]})
    >>> concat_report_frames([jac, sec]).columns
    ['record', 'max_abs_error', 'mismatch']
    """
    schema: T.Dict[str, pl.DataType] = dict()
    for df in dfs:
        for name, dtype in df.schema.items():
            if name in schema and schema[name] != dtype:
                raise TypeError(
                    f"column '{name}' has conflicting dtypes: {schema[name]} vs {dtype}"
                )
            schema.setdefault(name, dtype)
    columns = list(schema)
    aligned = list()
    for df in dfs:
        missing = [
            pl.lit(None, dtype=schema[name]).alias(name)
            for name in columns
            if name not in df.schema
        ]
        aligned.append(df.with_columns(*missing).select(columns))
    return pl.concat(aligned)


T_ITEM = T.TypeVar("T_ITEM")
T_RESULT = T.TypeVar("T_RESULT")


def fan_out(
    func: T.Callable[[T_ITEM], T_RESULT],
    items: T.Sequence[T_ITEM],
    workers: int = 1,
    chunk_size: int = 256,
) -> T.List[T_RESULT]:
    """
    ``[func(item) for item in items]``, optionally spread over a thread pool.

    Items are cut into chunks; ``Executor.map`` yields chunk results in
    submission order, so the output order never depends on completion order.
    """
    if workers <= 1 or len(items) <= chunk_size:
        return [func(item) for item in items]

    def run_chunk(chunk: T.List[T_ITEM]) -> T.List[T_RESULT]:
        return [func(item) for item in chunk]

    results = list()
    with ThreadPoolExecutor(max_workers=workers) as executor:
        for chunk_result in executor.map(run_chunk, chunked(items, chunk_size)):
            results.extend(chunk_result)
    return results
