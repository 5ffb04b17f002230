"""Construction size against the best bound and the exact optimum.

Rows are produced for the distance sets ``{2, 4, ..., 2s}``, where the
constant-weight construction (plus the zero word when ``s`` is even) is the
candidate extremal code.
"""

from __future__ import annotations

import csv
import io
from dataclasses import asdict, dataclass
from typing import Iterable

from .bounds import best_bounds
from .combinatorics import binomial
from .core import DistanceSet
from .search import max_code

EVIDENCE_COLUMNS = ("n", "s", "distances", "construction", "best_bound", "best_bound_from",
                    "exact", "complete")


@dataclass(frozen=True)
class EvidenceRow:
    n: int
    s: int
    distances: str
    construction: int
    best_bound: int
    best_bound_from: str
    exact: int
    complete: bool


def evidence_row(n: int, s: int, time_limit: float | None = None) -> EvidenceRow:
    D = DistanceSet(tuple(range(2, 2 * s + 1, 2)))
    construction = binomial(n, s) + (1 if s % 2 == 0 else 0)
    bb = best_bounds(n, D)
    result = max_code(n, D, time_limit)
    return EvidenceRow(n, s, str(D), construction, bb.minimum, " ".join(bb.best_names()),
                       result.value, result.complete)


def evidence_table(pairs: Iterable[tuple[int, int]],
                   time_limit: float | None = None) -> list[EvidenceRow]:
    return [evidence_row(n, s, time_limit) for n, s in pairs]


def evidence_csv(rows: Iterable[EvidenceRow]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=EVIDENCE_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        d = asdict(row)
        d["complete"] = "true" if row.complete else "false"
        writer.writerow(d)
    return buf.getvalue()
