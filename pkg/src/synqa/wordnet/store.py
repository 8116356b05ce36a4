"""In-memory lexical store built from the WordNet 3.0 dictionary files.

The store is immutable after :func:`load_wordnet` returns and may be shared
freely across threads. Sense order everywhere follows the index files, which
list each lemma's synsets in corpus-frequency order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from pathlib import Path

from . import parse
from .morphy import base_forms
from .parse import POS_FILE_SUFFIXES, WordNetLoadError


class PartOfSpeech(str, enum.Enum):
    NOUN = "n"
    VERB = "v"
    ADJECTIVE = "a"
    ADVERB = "r"

    @classmethod
    def coerce(cls, value: "PartOfSpeech | str") -> "PartOfSpeech":
        if isinstance(value, cls):
            return value
        try:
            return cls(value)
        except ValueError:
            return cls[str(value).upper()]


class RelationKind(str, enum.Enum):
    HYPERNYM = "hypernym"
    HYPONYM = "hyponym"
    PART_MERONYM = "part_meronym"
    MEMBER_MERONYM = "member_meronym"
    PART_HOLONYM = "part_holonym"
    MEMBER_HOLONYM = "member_holonym"
    ANTONYM = "antonym"
    ENTAILMENT = "entailment"


# Inverse pairs used by the consistency check after load.
INVERSE_RELATIONS = {
    RelationKind.HYPERNYM: RelationKind.HYPONYM,
    RelationKind.HYPONYM: RelationKind.HYPERNYM,
    RelationKind.PART_MERONYM: RelationKind.PART_HOLONYM,
    RelationKind.PART_HOLONYM: RelationKind.PART_MERONYM,
    RelationKind.MEMBER_MERONYM: RelationKind.MEMBER_HOLONYM,
    RelationKind.MEMBER_HOLONYM: RelationKind.MEMBER_MERONYM,
}

# Pointer symbols surfaced through the typed relation API. Instance
# hypernyms/hyponyms fold into the plain kinds so the pair stays symmetric.
POINTER_SYMBOLS = {
    "@": RelationKind.HYPERNYM,
    "@i": RelationKind.HYPERNYM,
    "~": RelationKind.HYPONYM,
    "~i": RelationKind.HYPONYM,
    "%p": RelationKind.PART_MERONYM,
    "%m": RelationKind.MEMBER_MERONYM,
    "#p": RelationKind.PART_HOLONYM,
    "#m": RelationKind.MEMBER_HOLONYM,
    "!": RelationKind.ANTONYM,
    "*": RelationKind.ENTAILMENT,
}


class DomainsUnavailableError(Exception):
    """Raised when domain lookup is attempted without a loaded mapping."""


@dataclass(frozen=True)
class Synset:
    """One sense: its lemmas, gloss material and typed relation links."""

    id: str
    offset: int
    pos: PartOfSpeech
    lemmas: tuple[str, ...]
    gloss: str
    examples: tuple[str, ...]
    relations: dict[RelationKind, tuple[str, ...]]
    other_relations: dict[str, tuple[str, ...]] = field(default_factory=dict)

    def __repr__(self) -> str:
        return f"Synset({self.id!r})"


@dataclass(frozen=True)
class DomainLabel:
    """A WordNet Domains label attached to one synset."""

    label: str
    offset: int
    pos: PartOfSpeech


@dataclass(frozen=True)
class DomainsReport:
    """Load statistics for the domains mapping."""

    rows_total: int
    rows_matched: int
    unmatched_keys: tuple[tuple[int, str], ...]


def normalize_lemma(lemma: str) -> str:
    """Index convention: lowercase, spaces joined with underscores."""
    return lemma.strip().lower().replace(" ", "_")


_POS_ORDER = (PartOfSpeech.NOUN, PartOfSpeech.VERB, PartOfSpeech.ADJECTIVE, PartOfSpeech.ADVERB)


class LexicalStore:
    """Read-only lookup over every synset parsed from a dictionary directory."""

    def __init__(
        self,
        by_id: dict[str, Synset],
        index: dict[tuple[str, PartOfSpeech], tuple[str, ...]],
        exceptions: dict[PartOfSpeech, dict[str, tuple[str, ...]]],
    ):
        self._by_id = by_id
        self._index = index
        self._exceptions = exceptions
        self._domains: dict[tuple[int, PartOfSpeech], tuple[str, ...]] | None = None
        self.domains_report: DomainsReport | None = None
        # memo over an immutable store; context normalization hits this hard
        self._morphy_cache: dict[tuple[str, PartOfSpeech], tuple[str, ...]] = {}

    # -- basic lookup -----------------------------------------------------

    def __len__(self) -> int:
        return len(self._by_id)

    def synset(self, synset_id: str) -> Synset:
        return self._by_id[synset_id]

    def all_synsets(self):
        return iter(self._by_id.values())

    def lemmas(self, pos: PartOfSpeech | str | None = None):
        """All index headwords, optionally restricted to one part of speech."""
        wanted = None if pos is None else PartOfSpeech.coerce(pos)
        for lemma, lemma_pos in self._index:
            if wanted is None or lemma_pos is wanted:
                yield lemma, lemma_pos

    def has_lemma(self, lemma: str, pos: PartOfSpeech | str) -> bool:
        return (normalize_lemma(lemma), PartOfSpeech.coerce(pos)) in self._index

    def synsets_for(self, lemma: str, pos: PartOfSpeech | str | None = None) -> list[Synset]:
        """Senses of ``lemma`` in WordNet sense order; [] when absent."""
        key = normalize_lemma(lemma)
        if pos is not None:
            ids = self._index.get((key, PartOfSpeech.coerce(pos)), ())
            return [self._by_id[sid] for sid in ids]
        result = []
        for p in _POS_ORDER:
            result.extend(self._by_id[sid] for sid in self._index.get((key, p), ()))
        return result

    def synonyms_of(self, synset: Synset, exclude: str) -> list[str]:
        """The synset's other lemmas, compared case-insensitively."""
        excluded = normalize_lemma(exclude)
        return [w for w in synset.lemmas if normalize_lemma(w) != excluded]

    def related(self, synset: Synset, kind: RelationKind) -> list[Synset]:
        return [self._by_id[sid] for sid in synset.relations.get(kind, ())]

    # -- morphology -------------------------------------------------------

    def morphy(self, word: str, pos: PartOfSpeech | str) -> list[str]:
        """Base forms of ``word`` that are headwords for ``pos``."""
        p = PartOfSpeech.coerce(pos)
        key = (normalize_lemma(word), p)
        cached = self._morphy_cache.get(key)
        if cached is None:
            cached = tuple(
                base_forms(
                    key[0],
                    p.value,
                    self._exceptions[p],
                    lambda form: (form, p) in self._index,
                )
            )
            self._morphy_cache[key] = cached
        return list(cached)

    # -- domains ----------------------------------------------------------

    def attach_domains(self, path: Path | str) -> DomainsReport:
        """Load a WordNet Domains mapping and report unmatched rows."""
        raw = parse.parse_domains_file(Path(path))
        mapping: dict[tuple[int, PartOfSpeech], tuple[str, ...]] = {}
        known = {(s.offset, s.pos) for s in self._by_id.values()}
        unmatched = []
        for (offset, pos_char), labels in raw.items():
            key = (offset, PartOfSpeech(pos_char))
            if key in known:
                mapping[key] = labels
            else:
                unmatched.append((offset, pos_char))
        self._domains = mapping
        self.domains_report = DomainsReport(
            rows_total=len(raw),
            rows_matched=len(mapping),
            unmatched_keys=tuple(unmatched),
        )
        return self.domains_report

    @property
    def domains_loaded(self) -> bool:
        return self._domains is not None

    def domains_of(self, synset: Synset) -> list[DomainLabel]:
        """Domain labels for a synset; [] when the synset is unmapped."""
        if self._domains is None:
            raise DomainsUnavailableError("no WordNet Domains mapping loaded")
        labels = self._domains.get((synset.offset, synset.pos), ())
        return [DomainLabel(label=l, offset=synset.offset, pos=synset.pos) for l in labels]


def _merge_entries(entries: list[parse.IndexEntry]) -> dict[str, tuple[int, ...]]:
    """Offsets per lemma, folding duplicate index lines (case variants share
    one lowercased lemma) into a single entry in first-seen order."""
    merged: dict[str, list[int]] = {}
    for entry in entries:
        bucket = merged.setdefault(entry.lemma, [])
        for offset in entry.offsets:
            if offset not in bucket:
                bucket.append(offset)
    return {lemma: tuple(offsets) for lemma, offsets in merged.items()}


def _build_synsets(
    raw_by_key: dict[tuple[str, int], parse.RawSynset],
    index_entries: dict[str, list[parse.IndexEntry]],
) -> tuple[dict[str, Synset], dict[tuple[str, PartOfSpeech], tuple[str, ...]]]:
    merged_index = {
        pos_char: _merge_entries(entries) for pos_char, entries in index_entries.items()
    }

    # Sense numbers: position of each synset in its lemma's merged entry.
    sense_number: dict[tuple[str, int], dict[str, int]] = {}
    for pos_char, entries in merged_index.items():
        for lemma, offsets in entries.items():
            for n, offset in enumerate(offsets, start=1):
                sense_number.setdefault((pos_char, offset), {})[lemma] = n

    ids: dict[tuple[str, int], str] = {}
    for (pos_char, offset), raw in raw_by_key.items():
        head = normalize_lemma(raw.words[0])
        numbering = sense_number.get((pos_char, offset), {})
        if head not in numbering:
            raise WordNetLoadError(
                f"synset at offset {offset} in data.{POS_FILE_SUFFIXES[pos_char]} "
                f"has head word {raw.words[0]!r} missing from the index"
            )
        ids[(pos_char, offset)] = f"{head}.{raw.pos}.{numbering[head]:02d}"

    by_id: dict[str, Synset] = {}
    for (pos_char, offset), raw in raw_by_key.items():
        relations: dict[RelationKind, list[str]] = {}
        other: dict[str, list[str]] = {}
        for ptr in raw.pointers:
            target_key = (ptr.pos, ptr.offset)
            if target_key not in ids:
                raise WordNetLoadError(
                    f"synset {ids[(pos_char, offset)]} points at unknown synset "
                    f"{ptr.offset} in data.{POS_FILE_SUFFIXES.get(ptr.pos, ptr.pos)}"
                )
            target_id = ids[target_key]
            kind = POINTER_SYMBOLS.get(ptr.symbol)
            if kind is not None:
                bucket = relations.setdefault(kind, [])
            else:
                bucket = other.setdefault(ptr.symbol, [])
            if target_id not in bucket:
                bucket.append(target_id)
        sid = ids[(pos_char, offset)]
        if sid in by_id:
            raise WordNetLoadError(f"duplicate synset id {sid}")
        by_id[sid] = Synset(
            id=sid,
            offset=offset,
            pos=PartOfSpeech(raw.pos),
            lemmas=tuple(raw.words),
            gloss=raw.definition,
            examples=tuple(raw.examples),
            relations={k: tuple(v) for k, v in relations.items()},
            other_relations={k: tuple(v) for k, v in other.items()},
        )

    index: dict[tuple[str, PartOfSpeech], tuple[str, ...]] = {}
    for pos_char, entries in merged_index.items():
        for lemma, offsets in entries.items():
            sids = []
            for offset in offsets:
                if (pos_char, offset) not in ids:
                    raise WordNetLoadError(
                        f"index entry {lemma!r} references unknown offset {offset} "
                        f"in data.{POS_FILE_SUFFIXES[pos_char]}"
                    )
                sids.append(ids[(pos_char, offset)])
            index[(lemma, PartOfSpeech(pos_char))] = tuple(sids)
    return by_id, index


def load_wordnet(dict_dir: Path | str, domains_file: Path | str | None = None) -> LexicalStore:
    """Parse a WordNet 3.0 ``dict`` directory into a :class:`LexicalStore`.

    Expects ``index.{noun,verb,adj,adv}``, ``data.{noun,verb,adj,adv}`` and
    the ``{noun,verb,adj,adv}.exc`` exception lists. The optional
    ``domains_file`` is a WordNet Domains mapping loaded on top.
    """
    root = Path(dict_dir)
    if not root.is_dir():
        raise WordNetLoadError(f"not a dictionary directory: {root}")

    index_entries: dict[str, list[parse.IndexEntry]] = {}
    raw_by_key: dict[tuple[str, int], parse.RawSynset] = {}
    exceptions: dict[PartOfSpeech, dict[str, tuple[str, ...]]] = {}

    for pos_char, suffix in POS_FILE_SUFFIXES.items():
        index_entries[pos_char] = parse.parse_index_file(root / f"index.{suffix}", pos_char)
        for raw in parse.parse_data_file(root / f"data.{suffix}", pos_char):
            key = (pos_char, raw.offset)
            if key in raw_by_key:
                raise WordNetLoadError(
                    f"duplicate offset {raw.offset}", filename=f"data.{suffix}"
                )
            raw_by_key[key] = raw
        exceptions[PartOfSpeech(pos_char)] = parse.parse_exception_file(
            root / f"{suffix}.exc"
        )

    by_id, index = _build_synsets(raw_by_key, index_entries)
    store = LexicalStore(by_id=by_id, index=index, exceptions=exceptions)
    if domains_file is not None:
        store.attach_domains(domains_file)
    return store
