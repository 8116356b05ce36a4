#!/usr/bin/env python3
# Explore the lexical store: senses, glosses, relations, morphology.

from synqa.wordnet import RelationKind, load_wordnet

store = load_wordnet("data/mini_wordnet", domains_file="data/wordnet_domains.txt")
print(f"loaded {len(store)} synsets")

print("\nsenses of 'house':")
for synset in store.synsets_for("house"):
    print(f"  {synset.id:12s} {synset.gloss}")

bed = store.synsets_for("bed", "n")[0]
print("\nhypernyms of bed.n.01:", [s.lemmas for s in store.related(bed, RelationKind.HYPERNYM)])

chair = store.synsets_for("chair", "n")[0]
print("parts of a chair:", [s.lemmas[0] for s in store.related(chair, RelationKind.PART_MERONYM)])

buy = store.synsets_for("buy", "v")[0]
print("buying entails:", [s.lemmas[0] for s in store.related(buy, RelationKind.ENTAILMENT)])

print("\nbase forms: went ->", store.morphy("went", "v"), "  houses ->", store.morphy("houses", "n"))

assembly = store.synset("house.n.05")
print("domains of the legislative 'house':", [d.label for d in store.domains_of(assembly)])
