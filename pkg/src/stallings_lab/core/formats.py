"""
Text formats for graphs and generator lists.

Graph file::

    # seed=7 attempt=3          (optional provenance lines)
    rank n basepoint
    a v w                       (one per edge, sorted by (a, v))

Subgroup file::

    rank r
    1 -2 1                      (one generator word per line)
"""

from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .errors import AlphabetError, ContractViolation, FormatError
from .graph import StallingsGraph, has_stray_leaves, is_connected
from .partial_injection import PartialInjection
from .words import Word, format_word, parse_word


def _parse_int(token: str, line_number: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(f"expected an integer, got {token!r}", line_number) from None


def _parse_comment(line: str) -> Dict[str, str]:
    fields = {}
    for token in line.lstrip("#").split():
        key, sep, value = token.partition("=")
        if sep:
            fields[key] = value
    return fields


def _content_lines(text: str) -> Tuple[List[Tuple[int, str]], Dict[str, str]]:
    """Split into numbered non-blank lines and merged ``# key=value`` comments."""
    lines, provenance = [], {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            provenance.update(_parse_comment(line))
            continue
        lines.append((number, line))
    return lines, provenance


def dump_graph(g: StallingsGraph, provenance: Optional[Mapping[str, object]] = None) -> str:
    lines = []
    if provenance:
        lines.append("# " + " ".join(f"{key}={value}" for key, value in provenance.items()))
    lines.append(f"{g.rank} {g.vertex_count} {g.basepoint}")
    lines.extend(f"{a} {v} {w}" for v, a, w in g.edges())
    return "\n".join(lines) + "\n"


def load_graph_with_provenance(text: str) -> Tuple[StallingsGraph, Dict[str, str]]:
    lines, provenance = _content_lines(text)
    if not lines:
        raise FormatError("empty graph file", 1)
    number, header = lines[0]
    tokens = header.split()
    if len(tokens) != 3:
        raise FormatError("header must be 'rank n basepoint'", number)
    rank, n, basepoint = (_parse_int(t, number) for t in tokens)
    if rank < 1 or n < 1 or not 0 <= basepoint < n:
        raise FormatError(f"invalid header values {rank} {n} {basepoint}", number)

    pairs: List[List[Tuple[int, int]]] = [[] for _ in range(rank)]
    previous = (0, -1)
    for number, line in lines[1:]:
        tokens = line.split()
        if len(tokens) != 3:
            raise FormatError("edge lines must be 'a v w'", number)
        a, v, w = (_parse_int(t, number) for t in tokens)
        if not 1 <= a <= rank:
            raise FormatError(f"label {a} outside alphabet of rank {rank}", number)
        if not (0 <= v < n and 0 <= w < n):
            raise FormatError(f"vertex out of range in edge {a} {v} {w}", number)
        if (a, v) <= previous:
            raise FormatError("edges must be sorted by (label, source) without repeats", number)
        previous = (a, v)
        pairs[a - 1].append((v, w))

    try:
        maps = tuple(PartialInjection.from_pairs(n, p) for p in pairs)
    except ContractViolation as e:
        raise FormatError(f"edges are not deterministic: {e}") from e
    graph = StallingsGraph(rank, n, maps, basepoint)
    core = is_connected(graph) and not has_stray_leaves(graph)
    return StallingsGraph(rank, n, maps, basepoint, True, core), provenance


def load_graph(text: str) -> StallingsGraph:
    return load_graph_with_provenance(text)[0]


def dump_words(rank: int, words: Sequence[Word]) -> str:
    lines = [f"rank {rank}"]
    lines.extend(format_word(w) for w in words)
    return "\n".join(lines) + "\n"


def load_words(text: str) -> Tuple[int, List[Word]]:
    """Parse a subgroup file into (rank, generators)."""
    lines, _ = _content_lines(text)
    if not lines:
        raise FormatError("empty subgroup file", 1)
    number, header = lines[0]
    tokens = header.split()
    if len(tokens) != 2 or tokens[0] != "rank":
        raise FormatError("header must be 'rank r'", number)
    rank = _parse_int(tokens[1], number)
    if rank < 1:
        raise FormatError(f"rank must be positive, got {rank}", number)
    words = []
    for number, line in lines[1:]:
        w = parse_word(line, number)
        try:
            w.check_alphabet(rank)
        except AlphabetError as e:
            raise FormatError(str(e), number) from e
        words.append(w)
    return rank, words


def is_words_text(text: str) -> bool:
    """Subgroup files start with a ``rank`` header; graph files with numbers."""
    lines, _ = _content_lines(text)
    return bool(lines) and lines[0][1].split()[0] == "rank"
