"""Character degree multisets: family generators and the JSON-lines corpus."""

from __future__ import annotations

import io
import json
import os
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from typing import IO, Iterable, Optional, Union

from .arith import DomainError, as_prime_power

PROVENANCES = ("generated-family", "file", "product")


@dataclass(frozen=True)
class DegreeMultiset:
    """cd(G) with multiplicities.

    ``entries`` holds ``(degree, multiplicity)`` pairs with distinct degrees in
    ascending order. Use :meth:`from_pairs` to build one from unsorted or
    repeated pairs.
    """

    name: str
    entries: tuple[tuple[int, int], ...]
    group_order: Optional[int] = None
    provenance: str = "file"
    tags: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")
        prev = 0
        for d, m in self.entries:
            if not (_is_int(d) and _is_int(m)) or d < 1 or m < 1:
                raise ValueError(f"bad entry ({d!r}, {m!r})")
            if d <= prev:
                raise ValueError("degrees must be distinct and ascending")
            prev = d
        if self.group_order is not None and (
            not _is_int(self.group_order) or self.group_order < 1
        ):
            raise ValueError(f"bad group order {self.group_order!r}")

    @classmethod
    def from_pairs(
        cls,
        name: str,
        pairs: Iterable[tuple[int, int]],
        group_order: Optional[int] = None,
        provenance: str = "file",
        tags: Iterable[str] = (),
    ) -> "DegreeMultiset":
        counts: Counter[int] = Counter()
        for d, m in pairs:
            if not (_is_int(d) and _is_int(m)) or d < 1 or m < 0:
                raise ValueError(f"bad entry ({d!r}, {m!r})")
            counts[d] += m
        entries = tuple(sorted((d, m) for d, m in counts.items() if m > 0))
        return cls(name, entries, group_order, provenance, tuple(tags))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.entries)

    def degrees(self) -> list[int]:
        """Every degree repeated by its multiplicity."""
        return [d for d, m in self.entries for _ in range(m)]

    def sum_of_squares(self) -> int:
        return sum(d * d * m for d, m in self.entries)

    def validate(self) -> list[str]:
        """Return invariant violations; an empty list means valid."""
        problems = []
        if not self.entries or self.entries[0][0] != 1:
            problems.append("missing trivial character (degree 1)")
        if self.group_order is not None:
            total = self.sum_of_squares()
            if total != self.group_order:
                problems.append(
                    f"sum-of-squares mismatch: {total} != order {self.group_order}"
                )
            bad = [d for d in self.support if self.group_order % d]
            if bad:
                problems.append(f"degrees {bad} do not divide order {self.group_order}")
        return problems

    def to_record(self) -> dict:
        rec: dict = {"name": self.name, "degrees": [list(e) for e in self.entries]}
        if self.group_order is not None:
            rec["order"] = self.group_order
        if self.tags:
            rec["tags"] = list(self.tags)
        return rec


def _is_int(x: object) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _family_q(q: int, *, odd: bool) -> tuple[int, int]:
    pp = as_prime_power(q) if _is_int(q) and q >= 2 else None
    if pp is None:
        raise DomainError(f"{q} is not a prime power")
    if odd and (q % 2 == 0 or q < 5):
        raise DomainError(f"q must be an odd prime power >= 5, got {q}")
    if q < 4:
        raise DomainError(f"q must be >= 4, got {q}")
    return pp


def gen_psl2(q: int) -> DegreeMultiset:
    _family_q(q, odd=False)
    if q % 2 == 0:
        pairs = [(1, 1), (q, 1), (q - 1, q // 2), (q + 1, q // 2 - 1)]
        order = q * (q * q - 1)
    else:
        half = (q + 1) // 2 if q % 4 == 1 else (q - 1) // 2
        if q % 4 == 1:
            rest = [(q + 1, (q - 5) // 4), (q - 1, (q - 1) // 4)]
        else:
            rest = [(q + 1, (q - 3) // 4), (q - 1, (q - 3) // 4)]
        pairs = [(1, 1), (q, 1), (half, 2), *rest]
        order = q * (q * q - 1) // 2
    return DegreeMultiset.from_pairs(
        f"PSL2({q})", pairs, order, "generated-family", ("psl2",)
    )


def gen_pgl2(q: int) -> DegreeMultiset:
    _family_q(q, odd=True)
    pairs = [(1, 2), (q, 2), (q + 1, (q - 3) // 2), (q - 1, (q - 1) // 2)]
    return DegreeMultiset.from_pairs(
        f"PGL2({q})", pairs, q * (q * q - 1), "generated-family", ("pgl2",)
    )


def gen_sl2(q: int) -> DegreeMultiset:
    _family_q(q, odd=True)
    pairs = [
        (1, 1),
        (q, 1),
        (q + 1, (q - 3) // 2),
        (q - 1, (q - 1) // 2),
        ((q + 1) // 2, 2),
        ((q - 1) // 2, 2),
    ]
    return DegreeMultiset.from_pairs(
        f"SL2({q})", pairs, q * (q * q - 1), "generated-family", ("sl2",)
    )


FAMILIES = {"psl2": gen_psl2, "pgl2": gen_pgl2, "sl2": gen_sl2}


def abelian(k: int) -> DegreeMultiset:
    """Degrees of an abelian group of order k: k linear characters."""
    if not _is_int(k) or k < 1:
        raise DomainError(f"abelian group order must be positive, got {k!r}")
    return DegreeMultiset(f"Ab({k})", ((1, k),), k, "generated-family", ("abelian",))


def direct_product(a: DegreeMultiset, b: DegreeMultiset) -> DegreeMultiset:
    counts: Counter[int] = Counter()
    for da, ma in a.entries:
        for db, mb in b.entries:
            counts[da * db] += ma * mb
    order = None
    if a.group_order is not None and b.group_order is not None:
        order = a.group_order * b.group_order
    tags = tuple(t for t in a.tags if t in b.tags)
    return DegreeMultiset(
        f"{a.name} x {b.name}", tuple(sorted(counts.items())), order, "product", tags
    )


# ---------------------------------------------------------------------------
# Corpus files

@dataclass(frozen=True)
class CorpusError:
    line: int
    message: str
    name: Optional[str] = None

    def __str__(self) -> str:
        who = f" ({self.name})" if self.name else ""
        return f"line {self.line}{who}: {self.message}"


def parse_record(obj: object, provenance: str = "file") -> DegreeMultiset:
    if not isinstance(obj, dict):
        raise ValueError("record is not a JSON object")
    name = obj.get("name")
    if not isinstance(name, str):
        raise ValueError("missing or non-string 'name'")
    raw = obj.get("degrees")
    if not isinstance(raw, list):
        raise ValueError("missing 'degrees' list")
    pairs = []
    for item in raw:
        if not (isinstance(item, list) and len(item) == 2):
            raise ValueError(f"degree entry {item!r} is not a [degree, multiplicity] pair")
        pairs.append((item[0], item[1]))
    order = obj.get("order")
    tags = obj.get("tags", [])
    if not isinstance(tags, list) or not all(isinstance(t, str) for t in tags):
        raise ValueError("'tags' must be a list of strings")
    return DegreeMultiset.from_pairs(name, pairs, order, provenance, tags)


def read_corpus(stream: IO[str]) -> tuple[list[DegreeMultiset], list[CorpusError]]:
    records: list[DegreeMultiset] = []
    errors: list[CorpusError] = []
    for lineno, line in enumerate(stream, 1):
        if not line.strip():
            continue
        name = None
        try:
            obj = json.loads(line)
            if isinstance(obj, dict) and isinstance(obj.get("name"), str):
                name = obj["name"]
            ms = parse_record(obj)
        except (ValueError, TypeError) as exc:
            errors.append(CorpusError(lineno, str(exc), name))
            continue
        problems = ms.validate()
        if problems:
            errors.extend(CorpusError(lineno, p, name) for p in problems)
        else:
            records.append(ms)
    return records, errors


def load_corpus(
    path: Union[str, os.PathLike],
) -> tuple[list[DegreeMultiset], list[CorpusError]]:
    """Read a corpus file.

    Returns the valid records and a list of per-record errors. Invalid records
    are dropped; I/O failures propagate as ``OSError``.
    """
    with open(path, encoding="utf-8") as fh:
        return read_corpus(fh)


def dump_record(ms: DegreeMultiset) -> str:
    return json.dumps(ms.to_record())


def save_corpus(records: Iterable[DegreeMultiset], path: Union[str, os.PathLike]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for ms in records:
            fh.write(dump_record(ms) + "\n")


def bundled_corpus() -> list[DegreeMultiset]:
    """Hand-curated degree sets shipped with the package."""
    text = resources.files(__package__).joinpath("data/corpus.jsonl").read_text("utf-8")
    records, errors = read_corpus(io.StringIO(text))
    if errors:
        raise RuntimeError(f"bundled corpus is invalid: {errors[0]}")
    return records
