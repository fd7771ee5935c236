"""
Plain-text H-representation documents.

    # optional comment lines
    d m
    a_1 ... a_d b        (m rows, entries are integers or p/q)
"""
import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, List, Optional, Tuple

from polyrep.exact.rational import RatVec, format_rat, to_rat
from polyrep.lattice.hpolytope import HPolytope
from polyrep.utils.errors import ParseError

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r'\S+')


@dataclass(frozen=True)
class HRepDocument:
    dim: int
    rows: Tuple[RatVec, ...]

    @property
    def m(self) -> int:
        return len(self.rows)

    def to_hpolytope(self) -> HPolytope:
        return HPolytope(tuple(r[:-1] for r in self.rows), tuple(r[-1] for r in self.rows))

    @classmethod
    def from_hpolytope(cls, H: HPolytope) -> "HRepDocument":
        return cls(H.dim, tuple(a + (b,) for a, b in H.rows()))


def _data_lines(text: str) -> Iterator[Tuple[int, List[Tuple[int, str]]]]:
    """Yield (line number, [(column, token), ...]) for non-comment lines."""
    for number, line in enumerate(text.splitlines(), start=1):
        content = line.split('#', 1)[0]
        tokens = [(m.start() + 1, m.group()) for m in _TOKEN.finditer(content)]
        if tokens:
            yield number, tokens


def _parse_count(number: int, column: int, token: str, what: str) -> int:
    if not re.fullmatch(r'\d+', token) or int(token) == 0:
        raise ParseError(f"{what} must be a positive integer, got {token!r}", number, column)
    return int(token)


def parse_hrep(text: str) -> HRepDocument:
    """
    Parse an H-representation document.

    Raises:
        ParseError: With line and column on malformed headers, entries,
            row lengths or row counts.
    """
    lines = _data_lines(text)
    header = next(lines, None)
    if header is None:
        raise ParseError("empty document: expected a 'd m' header")
    number, tokens = header
    if len(tokens) != 2:
        column = tokens[2][0] if len(tokens) > 2 else tokens[-1][0]
        raise ParseError("header must be 'd m'", number, column)
    d = _parse_count(number, tokens[0][0], tokens[0][1], "dimension")
    m = _parse_count(number, tokens[1][0], tokens[1][1], "row count")

    rows: List[RatVec] = []
    last_line = number
    for number, tokens in lines:
        last_line = number
        if len(rows) == m:
            raise ParseError(f"unexpected data after {m} rows", number, tokens[0][0])
        if len(tokens) != d + 1:
            column = tokens[d + 1][0] if len(tokens) > d + 1 else tokens[-1][0] + len(tokens[-1][1])
            raise ParseError(f"dimension mismatch: expected {d + 1} entries, found {len(tokens)}",
                             number, column)
        row = []
        for column, token in tokens:
            try:
                row.append(to_rat(token))
            except ValueError as e:
                raise ParseError(str(e), number, column) from e
        rows.append(tuple(row))
    if len(rows) != m:
        raise ParseError(f"expected {m} rows, found {len(rows)}", last_line)
    logger.debug(f"Parsed H-representation: d={d}, m={m}")
    return HRepDocument(d, tuple(rows))


def load_hrep(path: str) -> HPolytope:
    """Read and parse an H-representation file."""
    text = Path(path).read_text(encoding="utf-8")
    return parse_hrep(text).to_hpolytope()


def emit_hrep(H: HPolytope, comment: Optional[str] = None) -> str:
    """Serialize H in the document grammar, one row per line."""
    lines = []
    if comment:
        lines.extend(f"# {line}" for line in comment.splitlines())
    doc = HRepDocument.from_hpolytope(H)
    lines.append(f"{doc.dim} {doc.m}")
    lines.extend(" ".join(format_rat(c) for c in row) for row in doc.rows)
    return "\n".join(lines) + "\n"
