# -*- coding: utf-8 -*-

try:
    import typing_extensions as T
except:  # pragma: no cover
    import typing as T

T_VEC2 = T.Tuple[float, float]
T_RECORD = T.Dict[str, T.Any]


class EquivalenceRecord(T.TypedDict):
    sample: T.Required[int]
    x1: T.Required[float]
    x2: T.Required[float]
    s: T.Required[float]
    t: T.Required[float]
    n_src: T.Required[int]
    n_tgt: T.Required[int]
    tau: T.Required[float]
    slope: T.Required[float]
    residual: T.Required[float]
