"""Oracle harness: every registered identity against brute-force determinants.

For each index in range the harness computes the Hankel determinant from
scratch (Gaussian elimination for rational sequences, fraction-free
elimination for polynomial ones) and, independently, the identity's closed
form, then compares the two exactly; polynomial values are compared
coefficientwise.  Vanishing claims are ordinary comparisons against an exact
zero, so threshold behavior is checked as part of the range.

Both values are stored verbatim as exact strings in the report, so a report
can be re-audited without rerunning anything.  An ``asserted`` identity with
any mismatch marks its whole report failed; ``report_only`` identities
record agreement per index and never fail a run.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .closed_forms import ClosedFormIdentity, eval_closed_form, get_identity, registry
from .hankel import hankel_det, term_to_str
from .poly import UniPoly
from .sequences import Term


def terms_equal(a: Term, b: Term) -> bool:
    """Exact equality, treating a constant polynomial and its value as equal."""
    if isinstance(a, UniPoly) or isinstance(b, UniPoly):
        a = a if isinstance(a, UniPoly) else UniPoly.constant(a)
        b = b if isinstance(b, UniPoly) else UniPoly.constant(b)
    return a == b


@dataclass(frozen=True)
class IndexRecord:
    index: int
    oracle: str
    closed_form: str
    match: bool
    elapsed_s: float

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "oracle": self.oracle,
            "closed_form": self.closed_form,
            "match": self.match,
            "elapsed_s": self.elapsed_s,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "IndexRecord":
        return cls(d["index"], d["oracle"], d["closed_form"], d["match"], d["elapsed_s"])


@dataclass(frozen=True)
class VerificationReport:
    identity_id: str
    status: str
    max_index: int
    records: tuple[IndexRecord, ...]

    @property
    def passed(self) -> int:
        return sum(1 for r in self.records if r.match)

    @property
    def failed(self) -> int:
        return sum(1 for r in self.records if not r.match)

    @property
    def ok(self) -> bool:
        """False only for an asserted identity with at least one mismatch."""
        return self.status != "asserted" or self.failed == 0

    def to_dict(self) -> dict:
        return {
            "identity_id": self.identity_id,
            "status": self.status,
            "max_index": self.max_index,
            "records": [r.to_dict() for r in self.records],
            "summary": {"passed": self.passed, "failed": self.failed, "ok": self.ok},
        }

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        return cls(
            identity_id=d["identity_id"],
            status=d["status"],
            max_index=d["max_index"],
            records=tuple(IndexRecord.from_dict(r) for r in d["records"]),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        return cls.from_dict(json.loads(text))


def verify_identity(
    identity: Union[str, ClosedFormIdentity],
    max_index: Optional[int] = None,
    params: Optional[dict] = None,
) -> VerificationReport:
    """Compare brute force against the closed form for n = 0..max_index."""
    if isinstance(identity, str):
        if params:
            bound = ",".join(f"{k}={v}" for k, v in sorted(params.items()))
            identity = f"{identity}({bound})" if "(" not in identity else identity
        identity = get_identity(identity)
    n_max = identity.default_max_index if max_index is None else max_index
    records = []
    for n in range(n_max + 1):
        t0 = time.perf_counter()
        oracle = hankel_det(identity.sequence, n).value
        closed = eval_closed_form(identity, n)
        match = terms_equal(oracle, closed)
        records.append(
            IndexRecord(
                index=n,
                oracle=term_to_str(oracle),
                closed_form=term_to_str(closed),
                match=match,
                elapsed_s=time.perf_counter() - t0,
            )
        )
    return VerificationReport(
        identity_id=identity.id,
        status=identity.status,
        max_index=n_max,
        records=tuple(records),
    )


def verify_all(
    max_index_default: Optional[int] = None,
    overrides: Optional[dict[str, int]] = None,
) -> list[VerificationReport]:
    """Run the whole registry; per-identity ranges may be overridden."""
    overrides = overrides or {}
    reports = []
    for ident in registry():
        n_max = overrides.get(ident.id, max_index_default)
        if n_max is None:
            n_max = ident.default_max_index
        reports.append(verify_identity(ident, n_max))
    return reports


def any_asserted_failure(reports: Sequence[VerificationReport]) -> bool:
    return any(not r.ok for r in reports)
