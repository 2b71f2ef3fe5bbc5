# -*- coding: utf-8 -*-
"""Part-of-speech tag sets.

Two inventories are defined: a small set of 51 coarse tags (plain codes such
as ``SUB`` or ``PRO DEM ATT``) and a large set in which a base code carries
grammatical features (case, number, gender, person, tense/mood, degree,
declension type and attributive/pronominal usage), e.g.
``SUB NOM FEM SIN`` or ``ART DEF AKK NEU SIN``.  Every large tag maps onto
exactly one small tag.

Tag strings are space separated uppercase tokens.  Parsing normalizes token
order; formatting always emits the canonical order (base code first, then
features sorted by dimension).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product


class TagError(ValueError):
    """Raised for unparseable or ill-formed tags."""


SMALL = "small"
LARGE = "large"

# The 51 codes of the small tag set.
SMALL_TAGS = (
    "SUB", "EIG",
    "VER", "VER INF", "VER PA2", "VER EIZ", "VER IMP",
    "VER AUX", "VER AUX INF", "VER AUX PA2", "VER AUX IMP",
    "VER MOD", "VER MOD INF", "VER MOD PA2", "VER MOD IMP",
    "ART IND", "ART DEF",
    "ADJ", "ADJ ADV",
    "PRO DEM ATT", "PRO DEM PRO", "PRO REL ATT", "PRO REL PRO",
    "PRO POS ATT", "PRO POS PRO", "PRO IND ATT", "PRO IND PRO",
    "PRO INR ATT", "PRO INR PRO", "PRO PER", "PRO REF",
    "ADV", "ADV PRO",
    "KON UNT", "KON NEB", "KON INF", "KON VGL", "KON PRI",
    "PRP", "SKZ", "ZUS", "INJ", "ZAL", "ZAN", "ABK",
    "SZD", "SZE", "SZG", "SZK", "SZS", "SZN",
)

# Feature dimensions with their value inventories.
DIMENSIONS = {
    "person": ("1PE", "2PE", "3PE"),
    "case": ("NOM", "GEN", "DAT", "AKK"),
    "gender": ("MAS", "FEM", "NEU"),
    "declension": ("SOL", "DEF", "IND"),
    "number": ("SIN", "PLU"),
    "tense": ("PRÄ", "PRT", "KJ1", "KJ2", "IMP"),
    "degree": ("POS", "KOM", "SUP"),
    "usage": ("ATT", "PRO", "ADV"),
}

# Canonical order of feature tokens in a formatted tag.  Declension comes
# directly after the base code so that definite/indefinite articles read
# "ART DEF ..." / "ART IND ...".
_DIM_ORDER = ("declension", "person", "case", "gender", "number",
              "tense", "degree", "usage")

# Feature values are unique across dimensions, so a flat lookup suffices.
_VALUE_TO_DIM = {v: dim for dim, values in DIMENSIONS.items() for v in values}

# Base codes of the large set with the features each one may carry.  A value
# tuple restricts the dimension to those values.
LARGE_BASES = {
    "SUB": {"case": None, "gender": None, "number": None},
    "EIG": {"case": None, "gender": None, "number": None},
    "VER": {"person": None, "number": None,
            "tense": ("PRÄ", "PRT", "KJ1", "KJ2")},
    "VER INF": {},
    "VER PA2": {},
    "VER EIZ": {},
    "VER IMP": {"number": None},
    "VER AUX": {"person": None, "number": None,
                "tense": ("PRÄ", "PRT", "KJ1", "KJ2")},
    "VER AUX INF": {},
    "VER AUX PA2": {},
    "VER AUX IMP": {"number": None},
    "VER MOD": {"person": None, "number": None,
                "tense": ("PRÄ", "PRT", "KJ1", "KJ2")},
    "VER MOD INF": {},
    "VER MOD PA2": {},
    "VER MOD IMP": {"number": None},
    "ART": {"declension": ("DEF", "IND"), "case": None, "gender": None,
            "number": None},
    "ADJ": {"case": None, "gender": None, "number": None,
            "declension": None, "degree": None, "usage": ("ADV",)},
    "PA1": {"case": None, "gender": None, "number": None,
            "declension": None},
    "PRO DEM": {"usage": ("ATT", "PRO"), "case": None, "gender": None,
                "number": None},
    "PRO REL": {"usage": ("ATT", "PRO"), "case": None, "gender": None,
                "number": None},
    "PRO POS": {"usage": ("ATT", "PRO"), "case": None, "gender": None,
                "number": None},
    "PRO IND": {"usage": ("ATT", "PRO"), "case": None, "gender": None,
                "number": None},
    "PRO INR": {"usage": ("ATT", "PRO"), "case": None, "gender": None,
                "number": None},
    "PRO PER": {"person": None, "case": None, "gender": None, "number": None},
    "PRO REF": {"person": None, "case": ("DAT", "AKK"), "number": None},
    "ADV": {},
    "ADV PRO": {},
    "KON UNT": {}, "KON NEB": {}, "KON INF": {}, "KON VGL": {}, "KON PRI": {},
    "PRP": {"case": ("GEN", "DAT", "AKK")},
    "SKZ": {}, "ZUS": {}, "INJ": {}, "ZAL": {}, "ZAN": {}, "ABK": {},
    "SZD": {}, "SZE": {}, "SZG": {}, "SZK": {}, "SZS": {}, "SZN": {},
}

# Dimensions that must be present for a large tag to be well formed.
REQUIRED_DIMS = {
    "ART": ("declension",),
    "PRO DEM": ("usage",),
    "PRO REL": ("usage",),
    "PRO POS": ("usage",),
    "PRO IND": ("usage",),
    "PRO INR": ("usage",),
}

# Pronoun subclass codes are sometimes written without the leading PRO.
_FIRST_TOKEN_ALIASES = {
    "PER": "PRO PER", "REF": "PRO REF", "DEM": "PRO DEM", "REL": "PRO REL",
    "POS": "PRO POS", "IND": "PRO IND", "INR": "PRO INR",
}

_BASE_BY_TOKENS = {tuple(b.split(" ")): b for b in LARGE_BASES}
_MAX_BASE_LEN = max(len(t) for t in _BASE_BY_TOKENS)

_SMALL_BY_MULTISET = {}
for _code in SMALL_TAGS:
    _key = tuple(sorted(_code.split(" ")))
    _SMALL_BY_MULTISET[_key] = _code


@dataclass(frozen=True)
class Tag:
    """A part-of-speech tag: a base code plus zero or more features.

    Small tags never carry features.  Instances are immutable and hashable;
    :func:`format_tag` renders the canonical string form.
    """

    kind: str
    pos: str
    features: frozenset = frozenset()

    def __post_init__(self):
        if self.kind not in (SMALL, LARGE):
            raise TagError(f"unknown tag set kind: {self.kind!r}")
        if self.kind == SMALL and self.features:
            raise TagError("small tags carry no features")

    def feature(self, dimension: str):
        """Return the value of a dimension or None."""
        for dim, value in self.features:
            if dim == dimension:
                return value
        return None

    def __str__(self):
        return format_tag(self)

    def __lt__(self, other):
        return format_tag(self) < format_tag(other)


def _check_tokens(s: str):
    if not s or s != s.strip() or "  " in s:
        raise TagError(f"malformed tag string: {s!r}")
    return s.split(" ")


def parse_tag(s: str, kind: str) -> Tag:
    """Parse a space-separated tag string into a :class:`Tag`.

    Token order beyond the base code is normalized.  Raises
    :class:`TagError` for unknown tokens, duplicate dimensions and features
    that are illegal for the base code.
    """
    tokens = _check_tokens(s)
    if kind == SMALL:
        return _parse_small(s, tokens)
    if kind == LARGE:
        return _parse_large(s, tokens)
    raise TagError(f"unknown tag set kind: {kind!r}")


def _parse_small(s, tokens):
    joined = " ".join(tokens)
    if joined in _SMALL_SET:
        return Tag(SMALL, joined)
    key = tuple(sorted(tokens))
    code = _SMALL_BY_MULTISET.get(key)
    if code is None:
        # Figure-style shorthand drops the PRO class marker (POS ATT etc.).
        code = _SMALL_BY_MULTISET.get(tuple(sorted(tokens + ["PRO"])))
    if code is None:
        raise TagError(f"unknown small tag: {s!r}")
    return Tag(SMALL, code)


def _parse_large(s, tokens):
    base = None
    rest = tokens
    for k in range(min(_MAX_BASE_LEN, len(tokens)), 0, -1):
        cand = _BASE_BY_TOKENS.get(tuple(tokens[:k]))
        if cand is not None:
            base, rest = cand, tokens[k:]
            break
    if base is None and tokens[0] in _FIRST_TOKEN_ALIASES:
        base, rest = _FIRST_TOKEN_ALIASES[tokens[0]], tokens[1:]
    if base is None:
        raise TagError(f"unknown token {tokens[0]!r} in tag {s!r}")
    legal = LARGE_BASES[base]
    feats = {}
    for tok in rest:
        dim = _VALUE_TO_DIM.get(tok)
        if dim is None:
            raise TagError(f"unknown token {tok!r} in tag {s!r}")
        if dim in feats:
            raise TagError(f"duplicate {dim} feature in tag {s!r}")
        if dim not in legal:
            raise TagError(f"feature {tok!r} illegal for base {base!r}")
        allowed = legal[dim]
        if allowed is not None and tok not in allowed:
            raise TagError(f"feature {tok!r} illegal for base {base!r}")
        feats[dim] = tok
    for dim in REQUIRED_DIMS.get(base, ()):
        if dim not in feats:
            raise TagError(f"base {base!r} requires a {dim} feature: {s!r}")
    return Tag(LARGE, base, frozenset(feats.items()))


def format_tag(t: Tag) -> str:
    """Render a tag as its canonical space-separated string."""
    if not t.features:
        return t.pos
    feats = dict(t.features)
    ordered = [feats[d] for d in _DIM_ORDER if d in feats]
    return " ".join([t.pos] + ordered)


def map_large_to_small(t: Tag) -> Tag:
    """Project a large tag onto the small tag set.

    Total and deterministic: grammatical features are dropped, while the
    distinctions the small set keeps (article type, verb subclass, pronoun
    subclass and usage, adverbial adjectives) are preserved.
    """
    if t.kind != LARGE:
        raise TagError("map_large_to_small expects a large tag")
    base = t.pos
    if base == "ART":
        return Tag(SMALL, f"ART {t.feature('declension')}")
    if base == "ADJ":
        return Tag(SMALL, "ADJ ADV" if t.feature("usage") == "ADV" else "ADJ")
    if base == "PA1":
        return Tag(SMALL, "ADJ")
    if base in ("PRO DEM", "PRO REL", "PRO POS", "PRO IND", "PRO INR"):
        return Tag(SMALL, f"{base} {t.feature('usage')}")
    return Tag(SMALL, base)


def _enumerate_large():
    tags = []
    for base, legal in LARGE_BASES.items():
        required = set(REQUIRED_DIMS.get(base, ()))
        dims = list(legal)
        choices = []
        for dim in dims:
            values = legal[dim] or DIMENSIONS[dim]
            if dim in required:
                choices.append(tuple(values))
            else:
                choices.append((None,) + tuple(values))
        for combo in product(*choices):
            feats = frozenset(
                (d, v) for d, v in zip(dims, combo) if v is not None)
            tags.append(Tag(LARGE, base, feats))
    return tuple(tags)


class TagSet:
    """An enumerable tag inventory of the given kind."""

    def __init__(self, kind: str):
        if kind not in (SMALL, LARGE):
            raise TagError(f"unknown tag set kind: {kind!r}")
        self.kind = kind

    @property
    def members(self):
        if self.kind == SMALL:
            return tuple(Tag(SMALL, c) for c in SMALL_TAGS)
        return _large_members()

    def __contains__(self, tag: Tag):
        if tag.kind != self.kind:
            return False
        try:
            return parse_tag(format_tag(tag), self.kind) == tag
        except TagError:
            return False

    def __len__(self):
        return len(self.members)


@lru_cache(maxsize=None)
def _large_members():
    return _enumerate_large()


_SMALL_SET = frozenset(SMALL_TAGS)

# Small-set base codes considered open word classes; used as the fallback
# inventory for unknown-word guessing.
OPEN_CLASS_SMALL = (
    "SUB", "EIG", "VER", "VER INF", "VER PA2", "ADJ", "ADJ ADV", "ADV",
)


def small(code: str) -> Tag:
    """Shorthand for parsing a small tag."""
    return parse_tag(code, SMALL)


def large(code: str) -> Tag:
    """Shorthand for parsing a large tag."""
    return parse_tag(code, LARGE)
