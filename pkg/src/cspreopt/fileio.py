"""Plain-text instance and solution files.

Instance file::

    l=4
    alphabet=AB        (optional)
    AAAABBBB
    BBBBAAAA

Solution file::

    cost=1
    pattern=BBBB
    occ 0 4
    occ 1 0

Positions are 0-based and every file ends with a newline.
"""
from __future__ import annotations

import re

from .model import CostedSolution, Instance, Occurrence, Solution, make_alphabet


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _lines(text: str) -> list[str]:
    if not text:
        raise ParseError("empty input")
    if not text.endswith("\n"):
        raise ParseError("missing trailing newline", text.count("\n") + 1)
    return text[:-1].split("\n")


def _header(line: str, key: str, lineno: int) -> str:
    if not line.startswith(key + "="):
        raise ParseError(f"expected '{key}=...'", lineno)
    return line[len(key) + 1:]


def _int_header(line: str, key: str, lineno: int) -> int:
    raw = _header(line, key, lineno)
    if not re.fullmatch(r"\d+", raw):
        raise ParseError(f"{key} must be a non-negative integer, got {raw!r}", lineno)
    return int(raw)


def parse_instance(text: str, *, fasta: bool = False, l: int | None = None) -> Instance:
    """Parse an instance file.

    With ``fasta=True`` lines starting with ``>`` separate records and a
    record's lines are concatenated; ``l`` may then come from the argument
    instead of an ``l=`` header.
    """
    lines = _lines(text)
    i = 0
    if lines and lines[0].startswith("l="):
        l = _int_header(lines[0], "l", 1)
        i = 1
    elif l is None:
        raise ParseError("expected 'l=...'", 1)
    if l < 1:
        raise ParseError("l must be positive", 1)
    alphabet = ""
    if i < len(lines) and lines[i].startswith("alphabet="):
        try:
            alphabet = make_alphabet(_header(lines[i], "alphabet", i + 1))
        except ValueError as exc:
            raise ParseError(str(exc), i + 1) from None
        i += 1

    seqs: list[tuple[str, int]] = []
    for lineno, line in enumerate(lines[i:], start=i + 1):
        if fasta and line.startswith(">"):
            seqs.append(("", lineno))
            continue
        if not line:
            if fasta:
                continue
            raise ParseError("blank line", lineno)
        bad = [ch for ch in line if ch.isspace() or not ch.isprintable() or (alphabet and ch not in alphabet)]
        if bad:
            raise ParseError(f"illegal character {bad[0]!r}", lineno)
        if fasta and seqs:
            seqs[-1] = (seqs[-1][0] + line, seqs[-1][1])
        else:
            seqs.append((line, lineno))
    if not seqs:
        raise ParseError("no sequences", len(lines))
    n = len(seqs[0][0])
    for s, lineno in seqs:
        if len(s) != n:
            raise ParseError(f"sequence length {len(s)} differs from {n}", lineno)
    if l > n:
        raise ParseError(f"l={l} exceeds sequence length {n}", 1)
    return Instance(tuple(s for s, _ in seqs), l, alphabet)


def serialize_instance(inst: Instance) -> str:
    out = [f"l={inst.l}"]
    if inst.alphabet != "".join(sorted(set("".join(inst.sequences)))):
        out.append(f"alphabet={inst.alphabet}")
    out.extend(inst.sequences)
    return "\n".join(out) + "\n"


def serialize_solution(result) -> str:
    """Write anything with ``solution``, ``cost`` and ``pattern``/``consensus``."""
    pattern = getattr(result, "pattern", None) or result.consensus
    sol = result.solution
    if sol is None or not len(sol):
        raise ValueError("cannot serialise a solution without occurrences")
    out = [f"cost={result.cost}", f"pattern={pattern}"]
    out.extend(f"occ {o.seq_index} {o.position}" for o in sol.occurrences)
    return "\n".join(out) + "\n"


def parse_solution(text: str) -> CostedSolution:
    lines = _lines(text)
    if len(lines) < 3:
        raise ParseError("solution needs cost, pattern and at least one occurrence", len(lines))
    cost = _int_header(lines[0], "cost", 1)
    pattern = _header(lines[1], "pattern", 2)
    occs = []
    for lineno, line in enumerate(lines[2:], start=3):
        m = re.fullmatch(r"occ (\d+) (\d+)", line)
        if not m:
            raise ParseError(f"expected 'occ <seq> <pos>', got {line!r}", lineno)
        occs.append(Occurrence(int(m.group(1)), int(m.group(2))))
    try:
        sol = Solution(tuple(occs))
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    return CostedSolution(sol, pattern, cost)


def read_instance(path, **kwargs) -> Instance:
    with open(path, encoding="utf-8", newline="") as fh:
        return parse_instance(fh.read(), **kwargs)


def write_text(path, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
