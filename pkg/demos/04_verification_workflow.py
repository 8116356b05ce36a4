#!/usr/bin/env python3
# The human verification loop on a small scale: blocks, a review sheet,
# simulated worker verdicts, the audit sample, and the final dataset.

import tempfile
from pathlib import Path

from synqa.annotation import (
    apply_verdicts, export_review, identify_domains, import_verdicts,
    make_blocks, qc_sample, worker_pass,
)
from synqa.dataset import read_squad
from synqa.generate import build_adversarial_set
from synqa.wordnet import load_wordnet

store = load_wordnet("data/mini_wordnet", domains_file="data/wordnet_domains.txt")
corpus = read_squad("data/base_dev.json")
items = corpus.by_id()
generated = build_adversarial_set(corpus.pairs(), store)

blocks = make_blocks(
    generated, seed=7,
    article_of=lambda a: items[a.origin_id].paragraph_ref[0],
    min_size=100, max_size=120,
)
print(f"{len(generated)} candidates -> {len(blocks)} blocks "
      f"(sizes {[len(b.question_ids) for b in blocks][:4]} ...)")

profile = identify_domains(generated, store, seed=7)
print("question-set domains:", profile.top2)

work = Path(tempfile.mkdtemp())
sheet = work / "review.tsv"
by_id = {a.id: a for a in generated}
paragraphs = {a.id: corpus.context_of(items[a.origin_id]) for a in generated}
export_review(blocks[0], by_id, sheet, store=store,
              paragraph_of=lambda a: paragraphs[a.id])

# a worker marks most rows correct, flags one fixed phrase, adds a synonym
lines = sheet.read_text().splitlines()
for i, line in enumerate(lines[1:], start=1):
    cells = line.split("\t")
    if i == 3:
        cells[6], cells[9] = "incorrect", "x"
    elif i == 4:
        cells[6], cells[12] = "correct", "path"
    else:
        cells[6] = "correct"
    lines[i] = "\t".join(cells)
sheet.write_text("\n".join(lines) + "\n")

records = import_verdicts(sheet, known_ids=set(by_id), worker="worker-1")
print(f"imported {len(records)} verdicts;",
      f"audit sample of {len(qc_sample(records, 0.15, seed=9))};",
      f"worker gate: {'pass' if worker_pass(records).passed else 'fail'}")

result = apply_verdicts(generated, records)
print(f"verified {len(result.final)} (of which {len(result.worker_added)} worker-added), "
      f"rejected {len(result.rejected)}, unreviewed {len(result.unreviewed_ids)}")
