#!/usr/bin/env python3
# Drive the review service end to end: start it on a scratch workspace,
# submit a verdict over HTTP, restart, and show the verdict survived.

import json
import tempfile
import threading
import urllib.request
from pathlib import Path
from types import SimpleNamespace

from synqa.cli import build_service
from synqa.cli import main as cli
from synqa.serve import make_server

work = Path(tempfile.mkdtemp())
cli(["generate", "--wordnet-dir", "data/mini_wordnet",
     "--input", "data/base_dev.json",
     "--output", str(work / "adv.json"), "--sidecar", str(work / "adv.prov.jsonl")])
cli(["blocks", "--sidecar", str(work / "adv.prov.jsonl"),
     "--base", "data/base_dev.json", "--seed", "7",
     "--block-size-min", "100", "--block-size-max", "200",
     "--output", str(work / "blocks.json")])

args = SimpleNamespace(
    base="data/base_dev.json", sidecar=str(work / "adv.prov.jsonl"),
    blocks=str(work / "blocks.json"), wordnet_dir="data/mini_wordnet",
    domains_file=None, log=str(work / "verdicts.jsonl"),
)

service = build_service(args)
server = make_server(service, bind="127.0.0.1:0")
threading.Thread(target=server.serve_forever, daemon=True).start()
root = f"http://127.0.0.1:{server.server_address[1]}"

card = json.load(urllib.request.urlopen(f"{root}/api/blocks/block-001/next"))["card"]
print("first card:", card["question_id"], "-", card["generated_question"])

request = urllib.request.Request(
    f"{root}/api/verdicts",
    data=json.dumps({"question_id": card["question_id"], "verdict": "correct",
                     "worker_id": "demo", "flags": [], "added_synonyms": []}).encode(),
    headers={"Content-Type": "application/json"},
)
print("submitted:", json.load(urllib.request.urlopen(request))["ok"])
server.shutdown(); server.server_close(); service.log.close()

service = build_service(args)  # fresh process would do the same
print("after restart the service still knows", len(service.records()), "verdict")
service.log.close()
