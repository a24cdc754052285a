"""Sentence-pointer DSL: parsing and classical reading dynamics.

A system is a list of lines of the form

    (1) sentence (2) is false

one per sentence, with ``#`` comments.  Each sentence refers to exactly one
sentence (possibly itself) and asserts a polarity.  Reading a sentence under
a hypothesized truth value propagates a value to the referenced sentence;
iterating that map partitions the pointed assignments into orbits, and an
orbit that visits some sentence with both truth values is a paradox.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

PARADOXICAL = "paradoxical_cycle"
CONSISTENT = "consistent_cycle"


class ParseError(ValueError):
    """Syntax or reference error in DSL source, with position info."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class TopologyError(ValueError):
    """Reference graph is not a single cycle covering every sentence."""


@dataclass(frozen=True)
class SentenceSystem:
    """Parsed system: sentence k claims sentence ``targets[k]`` is ``polarities[k]``."""

    targets: tuple[int, ...]
    polarities: tuple[bool, ...]
    name: str = ""
    source: str = ""

    @property
    def n(self) -> int:
        return len(self.targets)

    def target(self, k: int) -> int:
        return self.targets[k - 1]

    def polarity(self, k: int) -> bool:
        return self.polarities[k - 1]


@dataclass(frozen=True)
class PointedAssignment:
    """A hypothesized reading: ``focus`` currently holds ``value``."""

    focus: int
    value: bool


@dataclass(frozen=True)
class ReadingOrbit:
    """Closed orbit of the reading map; paradoxical iff some sentence flips."""

    states: tuple[PointedAssignment, ...]
    kind: str

    @property
    def length(self) -> int:
        return len(self.states)


_TOKEN = re.compile(r"\(|\)|\b(?:is|sentence|true|false)\b|\d+|[^\s()]+")


def _tokenize(text: str) -> list[tuple[str, int]]:
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(text)]


def _parse_line(text: str, lineno: int) -> tuple[int, int, bool]:
    tokens = _tokenize(text)
    pos = 0

    def expect(kind: str) -> tuple[str, int]:
        nonlocal pos
        if pos >= len(tokens):
            raise ParseError(f"expected {kind}, found end of line", lineno, len(text) + 1)
        tok, col = tokens[pos]
        if kind == "INT":
            if not tok.isdigit():
                raise ParseError(f"expected integer, found {tok!r}", lineno, col)
        elif kind == "VALUE":
            if tok not in ("true", "false"):
                raise ParseError(f"expected 'true' or 'false', found {tok!r}", lineno, col)
        elif tok != kind:
            raise ParseError(f"expected {kind!r}, found {tok!r}", lineno, col)
        pos += 1
        return tok, col

    expect("(")
    index, _ = expect("INT")
    expect(")")
    expect("sentence")
    expect("(")
    target, _ = expect("INT")
    expect(")")
    expect("is")
    value, _ = expect("VALUE")
    if pos != len(tokens):
        tok, col = tokens[pos]
        raise ParseError(f"unexpected trailing token {tok!r}", lineno, col)
    return int(index), int(target), value == "true"


def parse_system(source: str, name: str = "") -> SentenceSystem:
    """Parse DSL source into a :class:`SentenceSystem`.

    Raises :class:`ParseError` with line/column for syntax errors, duplicate
    indices, non-contiguous numbering, or references to missing sentences.
    """
    entries: dict[int, tuple[int, bool, int]] = {}
    for lineno, raw in enumerate(source.splitlines(), start=1):
        text = raw.split("#", 1)[0]
        if not text.strip():
            continue
        index, target, polarity = _parse_line(text, lineno)
        if index in entries:
            raise ParseError(f"duplicate sentence index ({index})", lineno)
        entries[index] = (target, polarity, lineno)
    if not entries:
        raise ParseError("empty system", 1)
    n = len(entries)
    for index in entries:
        if not 1 <= index <= n:
            raise ParseError(
                f"sentence indices must be contiguous 1..{n}, found ({index})",
                entries[index][2],
            )
    for index in range(1, n + 1):
        target, _, lineno = entries[index]
        if target not in entries:
            raise ParseError(
                f"sentence ({index}) references missing sentence ({target})", lineno
            )
    targets = tuple(entries[k][0] for k in range(1, n + 1))
    polarities = tuple(entries[k][1] for k in range(1, n + 1))
    return SentenceSystem(targets, polarities, name=name, source=source)


def reading_step(system: SentenceSystem, p: PointedAssignment) -> PointedAssignment:
    """One step of the reading map.

    Sentence ``p.focus`` claims its target has some polarity; if the focus
    holds, the target acquires that polarity, otherwise the negation.
    """
    target = system.target(p.focus)
    claimed = system.polarity(p.focus)
    return PointedAssignment(target, claimed if p.value else not claimed)


def _check_single_cycle(system: SentenceSystem) -> None:
    n = system.n
    hit = [0] * (n + 1)
    for k in range(1, n + 1):
        hit[system.target(k)] += 1
    missing = [k for k in range(1, n + 1) if hit[k] == 0]
    if missing:
        raise TopologyError(
            f"reference graph is not a permutation: sentence(s) {missing} are never referenced"
        )
    seen = {1}
    k = system.target(1)
    while k not in seen:
        seen.add(k)
        k = system.target(k)
    if len(seen) != n:
        raise TopologyError(
            f"reference graph has more than one cycle: {sorted(seen)} is a proper sub-cycle"
        )


def classify(system: SentenceSystem) -> list[ReadingOrbit]:
    """Partition all 2n pointed assignments into reading orbits.

    The first orbit starts at (1, true); remaining assignments seed further
    orbits in (sentence, true-before-false) order, so the result is
    deterministic.  Requires the reference graph to be one covering cycle.
    """
    _check_single_cycle(system)
    todo = [
        PointedAssignment(k, v) for k in range(1, system.n + 1) for v in (True, False)
    ]
    visited: set[PointedAssignment] = set()
    orbits: list[ReadingOrbit] = []
    for seed in todo:
        if seed in visited:
            continue
        states = [seed]
        visited.add(seed)
        cur = reading_step(system, seed)
        while cur != seed:
            states.append(cur)
            visited.add(cur)
            cur = reading_step(system, cur)
        per_sentence: dict[int, set[bool]] = {}
        for s in states:
            per_sentence.setdefault(s.focus, set()).add(s.value)
        kind = PARADOXICAL if any(len(vs) == 2 for vs in per_sentence.values()) else CONSISTENT
        orbits.append(ReadingOrbit(tuple(states), kind))
    return orbits
