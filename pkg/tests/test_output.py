# -*- coding: utf-8 -*-

import io
import json

import pytest
import polars as pl

from anosov_suspension.constants import OutputFormatEnum
from anosov_suspension.output import new_writer, record_to_bytes, render, emit

DF = pl.DataFrame({"a": [1, 2], "b": [0.5, 1.5]})


def test_new_writer():
    assert new_writer("csv").is_csv()
    assert new_writer(OutputFormatEnum.ndjson).is_ndjson()
    with pytest.raises(ValueError):
        new_writer("xml")


def test_render_csv():
    assert render(DF, "csv") == b"a,b\n1,0.5\n2,1.5\n"
    with pytest.raises(ValueError):
        render(DF, "csv", trailing_records=[{"record": "summary"}])


def test_render_ndjson():
    data = render(DF, OutputFormatEnum.ndjson)
    assert pl.read_ndjson(io.BytesIO(data)).equals(DF)

    summary = {"record": "summary", "samples": 2, "passed": True}
    data = render(DF, "ndjson", trailing_records=[summary])
    lines = data.decode("utf-8").splitlines()
    assert len(lines) == 3
    assert json.loads(lines[0]) == {"a": 1, "b": 0.5}
    assert json.loads(lines[-1]) == summary
    assert record_to_bytes(summary).decode("utf-8").strip() == lines[-1]


def test_emit(tmp_path, capsysbinary):
    path = emit(b"a,b\n", tmp_path / "sub" / "report.csv")
    assert path == tmp_path / "sub" / "report.csv"
    assert path.read_bytes() == b"a,b\n"

    assert emit(b"hello\n") is None
    assert emit(b"world\n", "-") is None
    assert capsysbinary.readouterr().out == b"hello\nworld\n"


if __name__ == "__main__":
    from anosov_suspension.tests import run_cov_test

    run_cov_test(__file__, "anosov_suspension.output", preview=False)
