#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Emit data/growth_text.txt: >=100k tokens of plain German-like text for
n-gram growth statistics.  One sentence per line, tokens space separated."""

import os
import random
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from morphy.data import load_default_paradigms, load_seed_lexicon
from morphy.inflection import expand_full_form_lexicon

OUT = os.path.join(os.path.dirname(__file__), "..", "data",
                   "growth_text.txt")

TARGET_TOKENS = 105_000


def main():
    classes = load_default_paradigms()
    lex = load_seed_lexicon()
    ffl = expand_full_form_lexicon(lex, classes)

    buckets = {}
    for surface, readings in ffl.items():
        for _lemma, tag in readings:
            buckets.setdefault(tag.pos, set()).add(surface)
    pools = {pos: sorted(forms) for pos, forms in buckets.items()}

    rng = random.Random(100_000)
    det = pools["ART"]
    nouns = pools["SUB"]
    verbs = pools["VER"]
    adjs = pools["ADJ"]
    advs = pools["ADV"]
    preps = pools["PRP"]
    kon = pools["KON NEB"] + pools["KON UNT"]
    pros = pools["PRO PER"] + pools["PRO POS"]

    shapes = (
        lambda: [rng.choice(det), rng.choice(nouns), rng.choice(verbs),
                 rng.choice(det), rng.choice(nouns), "."],
        lambda: [rng.choice(pros), rng.choice(verbs), rng.choice(det),
                 rng.choice(adjs), rng.choice(nouns), "."],
        lambda: [rng.choice(det), rng.choice(nouns), rng.choice(verbs),
                 rng.choice(preps), rng.choice(det), rng.choice(nouns), "."],
        lambda: [rng.choice(det), rng.choice(nouns), rng.choice(verbs),
                 rng.choice(advs), "."],
        lambda: [rng.choice(det), rng.choice(adjs), rng.choice(nouns),
                 rng.choice(verbs), rng.choice(det), rng.choice(nouns),
                 rng.choice(kon), rng.choice(det), rng.choice(nouns),
                 rng.choice(verbs), "."],
    )

    lines = []
    total = 0
    while total < TARGET_TOKENS:
        tokens = rng.choice(shapes)()
        total += len(tokens)
        lines.append(" ".join(tokens))
    path = os.path.abspath(OUT)
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"wrote {total} tokens, {len(lines)} lines to {path}")


if __name__ == "__main__":
    main()
