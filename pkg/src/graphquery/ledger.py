"""Append-only query transcripts with JSONL export and replay helpers."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Sequence

from .partitions import Partition

KINDS = ("alpha", "alpha_m", "beta")


@dataclass(frozen=True)
class LedgerEntry:
    kind: str
    args: tuple
    answer: int
    index: int

    def to_json(self) -> str:
        if self.kind == "alpha":
            args = list(self.args)
        else:
            v, subset = self.args
            args = [v, sorted(subset)]
        return json.dumps(
            {"kind": self.kind, "args": args, "answer": self.answer, "index": self.index}
        )


class QueryLedger:
    """Append-only record of oracle calls; `count` is the measurement unit."""

    def __init__(self):
        self._entries: list[LedgerEntry] = []

    def append(self, kind: str, args: tuple, answer: int) -> LedgerEntry:
        if kind not in KINDS:
            raise ValueError(f"unknown oracle kind {kind!r}")
        if answer not in (0, 1):
            raise ValueError("answer must be a bit")
        entry = LedgerEntry(kind, args, answer, len(self._entries))
        self._entries.append(entry)
        return entry

    @property
    def count(self) -> int:
        return len(self._entries)

    @property
    def entries(self) -> tuple[LedgerEntry, ...]:
        return tuple(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[LedgerEntry]:
        return iter(self._entries)

    def answered(self, bit: int) -> int:
        return sum(1 for e in self._entries if e.answer == bit)

    def to_jsonl(self) -> str:
        return "\n".join(e.to_json() for e in self._entries) + ("\n" if self._entries else "")

    @classmethod
    def from_jsonl(cls, text: str) -> QueryLedger:
        ledger = cls()
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            obj = json.loads(line)
            kind = obj["kind"]
            if kind == "alpha":
                args = tuple(obj["args"])
            else:
                v, subset = obj["args"]
                args = (v, frozenset(subset))
            entry = ledger.append(kind, args, obj["answer"])
            if entry.index != obj["index"]:
                raise ValueError(
                    f"entry index {obj['index']} does not match position {entry.index}"
                )
        return ledger


def honest_answer(entry: LedgerEntry, partition: Partition) -> int:
    """Answer entry's query truthfully for a hidden graph with these components."""
    if entry.kind == "alpha":
        u, v = entry.args
        return int(partition.same_block(u, v))
    if entry.kind == "alpha_m":
        u, subset = entry.args
        return int(any(partition.same_block(u, v) for v in subset))
    raise ValueError("beta queries depend on edges, not components; cannot replay from a partition")


def replay_matches_partition(entries: Sequence[LedgerEntry], partition: Partition) -> bool:
    """True iff every recorded answer matches the honest answer for `partition`."""
    return all(honest_answer(e, partition) == e.answer for e in entries)


def replay_on_session(entries: Sequence[LedgerEntry], session) -> bool:
    """Re-issue every recorded query against a fresh session; True iff answers agree.

    The session must expose the query method matching each entry's kind.
    """
    method = {
        "alpha": "membership_query",
        "alpha_m": "multi_membership_query",
        "beta": "neighborhood_query",
    }
    for e in entries:
        fn = getattr(session, method[e.kind])
        if fn(*e.args) != e.answer:
            return False
    return True
