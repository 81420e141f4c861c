"""Structured pass/fail records for checked claims."""

import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field

SCHEMA_VERSION = 1
STATUSES = ("pass", "fail", "skipped")


@dataclass
class PaperReport:
    claim_id: str
    status: str
    values: dict = field(default_factory=dict)
    location: str = ""
    runtime: float = 0.0

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")

    @property
    def passed(self):
        return self.status == "pass"

    def to_dict(self):
        return _jsonable(asdict(self))


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, float, str)):
        return obj
    return str(obj)


class _Clock:
    elapsed = 0.0


@contextmanager
def timed():
    clock = _Clock()
    start = time.perf_counter()
    try:
        yield clock
    finally:
        clock.elapsed = time.perf_counter() - start
