#!/usr/bin/env python3
# Rank the senses of an ambiguous question word against its context,
# comparing the question-only window with the full-paragraph window.

from synqa.textprep import candidates
from synqa.wordnet import load_wordnet
from synqa.wsd import LeskConfig, Scope, build_window, lesk_rank

QUESTION = "What is the term of office for each house member?"
PARAGRAPH = (
    "In November 2006, the Victorian Legislative Council elections were held "
    "under a new multi-member proportional representation system. The total "
    "number of upper house members was reduced from 44 to 40 and their term "
    "of office is now the same as the lower house members—four years."
)

store = load_wordnet("data/mini_wordnet")
target = next(c for c in candidates(QUESTION, store) if c.base_form == "house")
config = LeskConfig()

for scope in (Scope.QUESTION_ONLY, Scope.QUESTION_PLUS_PARAGRAPH):
    window = build_window(QUESTION, PARAGRAPH, target, scope, store, config.stopwords)
    result = lesk_rank(target, window, store, config)
    print(f"\nscope = {scope.value} ({len(window.bag)} distinct context words)")
    for s in result.all_scores[:4]:
        marker = "->" if s.rank == 1 else "  "
        print(f" {marker} rank {s.rank}  score {s.score:<3} {s.synset.id:12s} {s.synset.gloss[:60]}")
