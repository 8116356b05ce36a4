#!/usr/bin/env python3
# Score simulated model predictions on the base set and its adversarial
# counterpart, then pair the outcomes to surface fragile questions.

import random

from synqa.dataset import adversarial_to_items, read_squad
from synqa.evaluate import paired_report, render_table, score
from synqa.generate import build_adversarial_set
from synqa.wordnet import load_wordnet

store = load_wordnet("data/mini_wordnet")
corpus = read_squad("data/base_dev.json")
generated = build_adversarial_set(corpus.pairs(), store, strategies=("single",))
adv_items = adversarial_to_items(generated, corpus.by_id())

rng = random.Random(11)

def simulate(items, skill):
    # a fake model: answers correctly with probability `skill`
    return {
        i.id: (i.answers[0][0] if i.answers else "") if rng.random() < skill
        else "no idea"
        for i in items
    }

base_report = score(corpus.items, simulate(corpus.items, 0.85), dataset="base")
adv_report = score(adv_items, simulate(adv_items, 0.30), dataset="adversarial")
print(render_table([base_report, adv_report]))

paired = paired_report(base_report, adv_report, generated)
print(f"fragility: {paired.fragility_str}% of base-correct questions break "
      f"under synonym substitution ({len(paired.lucky_hit_candidates)} lucky-hit candidates)")
