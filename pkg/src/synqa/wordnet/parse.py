"""Parsers for the WordNet 3.0 dictionary file formats.

Handles the four index files (``index.noun`` etc.), the four data files
(``data.noun`` etc.), the morphological exception lists (``noun.exc`` etc.)
and the WordNet Domains mapping file. Parsing is strict: a malformed line
aborts the load with the file name and line number.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path


class WordNetLoadError(Exception):
    """Raised when a dictionary file is missing or malformed."""

    def __init__(self, message: str, filename: str | None = None, line: int | None = None):
        loc = ""
        if filename is not None:
            loc = f" [{filename}" + (f":{line}" if line is not None else "") + "]"
        super().__init__(message + loc)
        self.filename = filename
        self.line = line


# Suffix of a lemma carrying an adjective syntax marker, e.g. "afraid(p)".
_SYNTAX_MARKER = re.compile(r"\((a|p|ip)\)$")

# Files per part of speech; satellite adjectives live in the "adj" files.
POS_FILE_SUFFIXES = {"n": "noun", "v": "verb", "a": "adj", "r": "adv"}


@dataclass(frozen=True)
class IndexEntry:
    """One line of an index file: a lemma and its synset offsets in sense order."""

    lemma: str
    pos: str  # n, v, a, r
    offsets: tuple[int, ...]


@dataclass(frozen=True)
class RawPointer:
    symbol: str
    offset: int
    pos: str  # data file of the target: n, v, a, r
    source_target: str  # four hex digits; 0000 for semantic pointers


@dataclass
class RawSynset:
    """One line of a data file before cross-file resolution."""

    offset: int
    lex_filenum: int
    ss_type: str  # n, v, a, s, r
    words: list[str] = field(default_factory=list)
    pointers: list[RawPointer] = field(default_factory=list)
    gloss: str = ""
    definition: str = ""
    examples: list[str] = field(default_factory=list)

    @property
    def pos(self) -> str:
        """Part of speech with satellites folded into adjectives."""
        return "a" if self.ss_type == "s" else self.ss_type


def _data_lines(path: Path):
    """Yield (line_number, stripped_line) for non-header lines.

    Header/license lines in the stock files begin with whitespace.
    """
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise WordNetLoadError(f"missing dictionary file: {path.name}", filename=str(path))
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line or line[0] == " ":
            continue
        yield lineno, line


def parse_index_file(path: Path, pos: str) -> list[IndexEntry]:
    entries = []
    for lineno, line in _data_lines(path):
        fields = line.split()
        try:
            lemma = fields[0]
            file_pos = fields[1]
            synset_cnt = int(fields[2])
            p_cnt = int(fields[3])
            # skip the pointer-symbol list, then sense_cnt and tagsense_cnt
            tail = fields[4 + p_cnt + 2:]
            offsets = tuple(int(tok) for tok in tail)
        except (IndexError, ValueError):
            raise WordNetLoadError("malformed index line", filename=path.name, line=lineno)
        if file_pos not in ("n", "v", "a", "r") or len(offsets) != synset_cnt:
            raise WordNetLoadError(
                f"index line for {lemma!r} announces {synset_cnt} synsets but lists {len(offsets)}",
                filename=path.name,
                line=lineno,
            )
        entries.append(IndexEntry(lemma=lemma, pos=pos, offsets=offsets))
    return entries


def _split_gloss(gloss: str) -> tuple[str, list[str]]:
    """Split a raw gloss into definition text and quoted usage examples."""
    definition_parts = []
    examples = []
    for part in gloss.split("; "):
        stripped = part.strip()
        if stripped.startswith('"'):
            examples.append(stripped.strip('"'))
        else:
            definition_parts.append(stripped)
    return "; ".join(definition_parts), examples


def parse_data_file(path: Path, pos: str) -> list[RawSynset]:
    synsets = []
    for lineno, line in _data_lines(path):
        body, sep, gloss = line.partition(" | ")
        fields = body.split()
        try:
            syn = RawSynset(
                offset=int(fields[0]),
                lex_filenum=int(fields[1]),
                ss_type=fields[2],
            )
            w_cnt = int(fields[3], 16)
            cursor = 4
            strip_markers = pos == "a"  # syntax markers occur in data.adj only
            for _ in range(w_cnt):
                word = fields[cursor]
                if strip_markers and word.endswith(")"):
                    word = _SYNTAX_MARKER.sub("", word)
                syn.words.append(word)
                cursor += 2  # skip lex_id
            p_cnt = int(fields[cursor])
            cursor += 1
            for _ in range(p_cnt):
                symbol, off, tgt_pos, st = fields[cursor:cursor + 4]
                syn.pointers.append(
                    RawPointer(symbol=symbol, offset=int(off), pos=tgt_pos,
                               source_target=st)
                )
                cursor += 4
            # verb data lines carry a frame section we do not model
            if cursor < len(fields) and pos != "v":
                raise ValueError("trailing fields")
        except (IndexError, ValueError):
            raise WordNetLoadError("malformed data line", filename=path.name, line=lineno)
        if syn.ss_type not in ("n", "v", "a", "s", "r") or not syn.words:
            raise WordNetLoadError(
                f"data line at offset {syn.offset} has bad type or no words",
                filename=path.name,
                line=lineno,
            )
        syn.gloss = gloss.strip()
        syn.definition, syn.examples = _split_gloss(syn.gloss)
        synsets.append(syn)
    return synsets


def parse_exception_file(path: Path) -> dict[str, tuple[str, ...]]:
    """Morphological exceptions: inflected form mapped to its base forms."""
    table: dict[str, tuple[str, ...]] = {}
    for lineno, line in _data_lines(path):
        forms = line.split()
        if len(forms) < 2:
            raise WordNetLoadError("exception line needs at least two forms",
                                   filename=path.name, line=lineno)
        table[forms[0]] = tuple(forms[1:])
    return table


_DOMAIN_KEY = re.compile(r"^(\d{8})-([nvar])$")


def parse_domains_file(path: Path) -> dict[tuple[int, str], tuple[str, ...]]:
    """WordNet Domains rows: ``offset-pos<TAB>label [label ...]``."""
    if not path.exists():
        raise WordNetLoadError(f"missing domains file: {path}", filename=str(path))
    mapping: dict[tuple[int, str], tuple[str, ...]] = {}
    for lineno, line in _data_lines(path):
        key, _, labels = line.partition("\t")
        m = _DOMAIN_KEY.match(key.strip())
        if not m or not labels.strip():
            raise WordNetLoadError("malformed domains row", filename=path.name, line=lineno)
        mapping[(int(m.group(1)), m.group(2))] = tuple(labels.split())
    return mapping
