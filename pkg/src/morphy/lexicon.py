# -*- coding: utf-8 -*-
"""Root lexicon: entries, file format, lookup.

The lexicon stores word roots (stems) together with an inflection class id
and whatever extra information the paradigm needs: gender for nouns, verb
prefixes, orthography flags and irregular-form overrides.  Homographs are
ordinary: several entries may share a root.

File format, one entry per line, UTF-8::

    root<TAB>pos<TAB>class_id<TAB>key=value[,key=value...]

with keys ``gender``, ``prefix``, ``prefix_kind``, ``flags`` and
``override.<slot>``.  Lines starting with ``#`` are comments.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from .tags import LARGE_BASES

FLAGS = ("umlaut_in_paradigm", "ss_sharp_shift", "no_ge_participle")
PREFIX_KINDS = ("separable", "inseparable", "none")


class LexiconError(ValueError):
    """Raised for ill-formed lexicon data; carries a line number if known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


@dataclass(frozen=True)
class LexiconEntry:
    root: str
    pos: str
    inflection_class: str
    gender: str | None = None
    prefix: str | None = None
    prefix_kind: str = "none"
    flags: frozenset = frozenset()
    overrides: tuple = ()   # sorted ((slot_or_transform, surface), ...)

    def __post_init__(self):
        if not self.root:
            raise LexiconError("root must be non-empty")
        if self.pos not in LARGE_BASES:
            raise LexiconError(f"unknown part of speech {self.pos!r}")
        if self.pos in ("SUB", "EIG") and self.gender is None:
            raise LexiconError(f"noun entry {self.root!r} needs a gender")
        if self.gender is not None and self.gender not in ("MAS", "FEM", "NEU"):
            raise LexiconError(f"unknown gender {self.gender!r}")
        if self.prefix_kind not in PREFIX_KINDS:
            raise LexiconError(f"unknown prefix kind {self.prefix_kind!r}")
        if self.prefix and self.prefix_kind == "none":
            raise LexiconError(
                f"entry {self.root!r} has a prefix but no prefix kind")
        for f in self.flags:
            if f not in FLAGS:
                raise LexiconError(f"unknown flag {f!r}")

    def override(self, key: str) -> str | None:
        for k, v in self.overrides:
            if k == key:
                return v
        return None

    def has_flag(self, flag: str) -> bool:
        return flag in self.flags


class Lexicon:
    """A multiset of entries indexed by root.

    Reads are lock-free; ``add_entry`` takes an internal lock and bumps a
    version counter so analyzers can invalidate cached indexes.
    """

    def __init__(self, entries=()):
        self._entries = []
        self._by_root = {}
        self._lock = threading.Lock()
        self.version = 0
        for e in entries:
            self.add_entry(e)

    @property
    def entries(self) -> tuple:
        return tuple(self._entries)

    def __len__(self):
        return len(self._entries)

    def add_entry(self, entry: LexiconEntry):
        with self._lock:
            if entry in self._by_root.get(entry.root, ()):
                raise LexiconError(
                    f"duplicate entry for root {entry.root!r}")
            self._entries.append(entry)
            self._by_root.setdefault(entry.root, []).append(entry)
            self.version += 1

    def lookup_roots(self, root_candidate: str) -> list:
        """All entries whose root equals the candidate exactly."""
        return list(self._by_root.get(root_candidate, ()))


def _parse_extras(fields, lineno):
    gender = None
    prefix = None
    prefix_kind = "none"
    flags = []
    overrides = {}
    last_key = None
    chunks = []
    for f in fields:
        chunks.extend(c for c in f.split(",") if c != "")
    for chunk in chunks:
        if "=" in chunk:
            key, _, value = chunk.partition("=")
            last_key = key
        else:
            # continuation of a multi-valued key, e.g. flags=a,b
            if last_key != "flags":
                raise LexiconError(f"stray value {chunk!r}", lineno)
            key, value = "flags", chunk
        if key == "gender":
            gender = value
        elif key == "prefix":
            prefix = value
        elif key == "prefix_kind":
            prefix_kind = value
        elif key == "flags":
            flags.append(value)
        elif key.startswith("override."):
            overrides[key[len("override."):]] = value
        else:
            raise LexiconError(f"unknown key {key!r}", lineno)
    return gender, prefix, prefix_kind, flags, overrides


def load_lexicon(source: str, classes=None) -> Lexicon:
    """Parse lexicon file text.  ``classes`` (a paradigm mapping) enables
    validation of class ids."""
    lex = Lexicon()
    for lineno, raw in enumerate(source.splitlines(), start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) < 3:
            raise LexiconError("expected root, pos and class fields", lineno)
        root, pos, class_id = fields[0], fields[1], fields[2]
        if classes is not None and class_id not in classes:
            raise LexiconError(f"unknown class id {class_id!r}", lineno)
        try:
            gender, prefix, prefix_kind, flags, overrides = _parse_extras(
                fields[3:], lineno)
            entry = LexiconEntry(
                root=root, pos=pos, inflection_class=class_id,
                gender=gender, prefix=prefix, prefix_kind=prefix_kind,
                flags=frozenset(flags),
                overrides=tuple(sorted(overrides.items())))
            lex.add_entry(entry)
        except LexiconError as err:
            if err.line is None:
                raise LexiconError(str(err), lineno) from err
            raise
    return lex


def format_entry(entry: LexiconEntry) -> str:
    """Render one lexicon line in canonical field order."""
    extras = []
    if entry.gender:
        extras.append(f"gender={entry.gender}")
    if entry.prefix:
        extras.append(f"prefix={entry.prefix}")
    if entry.prefix_kind != "none":
        extras.append(f"prefix_kind={entry.prefix_kind}")
    if entry.flags:
        extras.append("flags=" + ",".join(sorted(entry.flags)))
    for slot, surf in entry.overrides:
        extras.append(f"override.{slot}={surf}")
    fields = [entry.root, entry.pos, entry.inflection_class]
    if extras:
        fields.append(",".join(extras))
    return "\t".join(fields)


def save_lexicon(lex: Lexicon) -> str:
    """Serialize deterministically: sorted by root, pos, class, extras."""
    lines = sorted(format_entry(e) for e in lex.entries)
    return "".join(line + "\n" for line in lines)


def lookup_roots(root_candidate: str, lex: Lexicon) -> list:
    return lex.lookup_roots(root_candidate)
