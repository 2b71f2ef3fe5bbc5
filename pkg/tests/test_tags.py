# -*- coding: utf-8 -*-
import pytest

from morphy import tags
from morphy.tags import (LARGE, SMALL, Tag, TagError, TagSet, format_tag,
                         map_large_to_small, parse_tag)

TABLE_SMALL = [
    "SUB", "EIG", "VER", "VER INF", "VER PA2", "VER EIZ", "VER IMP",
    "VER AUX", "VER AUX INF", "VER AUX PA2", "VER AUX IMP",
    "VER MOD", "VER MOD INF", "VER MOD PA2", "VER MOD IMP",
    "ART IND", "ART DEF", "ADJ", "ADJ ADV",
    "PRO DEM ATT", "PRO DEM PRO", "PRO REL ATT", "PRO REL PRO",
    "PRO POS ATT", "PRO POS PRO", "PRO IND ATT", "PRO IND PRO",
    "PRO INR ATT", "PRO INR PRO", "PRO PER", "PRO REF",
    "ADV", "ADV PRO", "KON UNT", "KON NEB", "KON INF", "KON VGL",
    "KON PRI", "PRP", "SKZ", "ZUS", "INJ", "ZAL", "ZAN", "ABK",
    "SZD", "SZE", "SZG", "SZK", "SZS", "SZN",
]


def test_small_set_has_exactly_51_members():
    assert len(TABLE_SMALL) == 51
    assert sorted(tags.SMALL_TAGS) == sorted(TABLE_SMALL)
    assert len(TagSet(SMALL)) == 51


def test_parse_small_examples():
    assert parse_tag("SUB", SMALL) == Tag(SMALL, "SUB")
    with pytest.raises(TagError):
        parse_tag("SUB XYZ", SMALL)


def test_parse_large_example():
    t = parse_tag("VER 3PE SIN", LARGE)
    assert t.pos == "VER"
    assert t.feature("person") == "3PE"
    assert t.feature("number") == "SIN"


def test_parse_rejects_unknown_duplicate_and_illegal():
    with pytest.raises(TagError):
        parse_tag("VER 3PE 1PE", LARGE)
    with pytest.raises(TagError):
        parse_tag("SZE NOM", LARGE)
    with pytest.raises(TagError):
        parse_tag("VER BLORP", LARGE)
    with pytest.raises(TagError):
        parse_tag(" SUB", SMALL)
    with pytest.raises(TagError):
        parse_tag("SUB  NOM", LARGE)


def test_format_examples():
    assert format_tag(parse_tag("ART DEF", LARGE)) == "ART DEF"
    assert format_tag(Tag(LARGE, "SZE")) == "SZE"
    t = parse_tag("SUB AKK NEU PLU", LARGE)
    assert format_tag(t) == "SUB AKK NEU PLU"


def test_token_order_is_normalized():
    a = parse_tag("SUB NOM FEM SIN", LARGE)
    b = parse_tag("SUB SIN FEM NOM", LARGE)
    assert a == b
    assert format_tag(a) == format_tag(b)


def test_figure_style_shorthand_accepted():
    assert parse_tag("PER PRO", SMALL) == parse_tag("PRO PER", SMALL)
    assert parse_tag("POS ATT", SMALL) == parse_tag("PRO POS ATT", SMALL)
    t = parse_tag("PER NOM SIN 1PE", LARGE)
    assert t.pos == "PRO PER"
    t = parse_tag("POS AKK SIN FEM ATT", LARGE)
    assert t.pos == "PRO POS"
    assert t.feature("usage") == "ATT"
    t = parse_tag("DEM NOM SIN NEU PRO", LARGE)
    assert t.pos == "PRO DEM"


def test_parse_format_identity_over_both_sets():
    for kind in (SMALL, LARGE):
        for member in TagSet(kind).members:
            assert parse_tag(format_tag(member), kind) == member


def test_mapping_examples():
    cases = [
        ("SUB NOM FEM SIN", "SUB"),
        ("ART DEF AKK SIN NEU", "ART DEF"),
        ("VER 1PE SIN", "VER"),
        ("ART IND NOM MAS SIN", "ART IND"),
        ("VER AUX 3PE SIN PRÄ", "VER AUX"),
        ("VER MOD INF", "VER MOD INF"),
        ("PA1 SOL NEU AKK PLU", "ADJ"),
        ("ADJ ADV", "ADJ ADV"),
        ("ADJ NOM MAS SIN", "ADJ"),
        ("PRO DEM NOM NEU SIN PRO", "PRO DEM PRO"),
        ("PER NOM SIN 1PE", "PRO PER"),
        ("PRP DAT", "PRP"),
    ]
    for large_str, small_str in cases:
        mapped = map_large_to_small(parse_tag(large_str, LARGE))
        assert format_tag(mapped) == small_str


def test_mapping_total_and_into_small_set():
    small = set(tags.SMALL_TAGS)
    for member in TagSet(LARGE).members:
        assert format_tag(map_large_to_small(member)) in small


def test_mapping_order_insensitive():
    import itertools
    base = "PA1 SOL NEU AKK PLU".split()
    targets = set()
    for perm in itertools.permutations(base[1:]):
        t = parse_tag(" ".join([base[0]] + list(perm)), LARGE)
        targets.add(format_tag(map_large_to_small(t)))
    assert targets == {"ADJ"}


def test_small_tags_carry_no_features():
    with pytest.raises(TagError):
        Tag(SMALL, "SUB", frozenset([("case", "NOM")]))


def test_art_requires_declension():
    with pytest.raises(TagError):
        parse_tag("ART NOM MAS SIN", LARGE)
    with pytest.raises(TagError):
        parse_tag("ART SOL", LARGE)
