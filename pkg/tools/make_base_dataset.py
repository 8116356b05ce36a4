#!/usr/bin/env python3
"""Build the bundled SQuAD-2.0-format development corpus.

Thirty-five articles of template-generated prose over the mini dictionary's
vocabulary, with exact answer offsets and roughly a third unanswerable
questions. Deterministic for the fixed seed; writes data/base_dev.json.

Usage: python tools/make_base_dataset.py [output_path]
"""

from __future__ import annotations

import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from synqa.dataset import Article, QAItem, SquadData, read_squad, write_squad  # noqa: E402

OUT = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data" / "base_dev.json"

PLACES = [
    "Velora", "Darnmoor", "Thornevale", "Brindlemere", "Ashford", "Calvera",
    "Northgate", "Eastmere", "Silverbrook", "Harrowfield", "Windhaven",
    "Stonebridge", "Maplewood", "Redcliff", "Fairhaven", "Duskvale",
    "Ironhollow", "Greenford", "Westmarch", "Copperlane", "Briarton",
    "Glimmerfall", "Oakendale", "Frosthollow", "Lanternwick", "Mirefield",
    "Sunderby", "Hollowcrest", "Peltenbrook", "Quillmont", "Ravensmoor",
    "Tarnwell", "Umbervale", "Wyndelhurst", "Yarrowgate",
]

PEOPLE = [
    "General Aldric", "Queen Maristella", "Captain Loreth", "Doctor Havren",
    "Professor Windcott", "Mayor Edlyn", "Judge Carmody", "Bishop Talveren",
    "Lady Ferngold", "Admiral Stroud", "Master Quillon", "Countess Averil",
    "Chancellor Bram", "Sister Morwenna", "Engineer Caldus", "Farmer Oswin",
    "Merchant Tobrel", "Painter Liraine", "Singer Elowen", "Scholar Nerith",
]

# article topics: (title suffix, question nouns, context color words)
TOPICS = [
    ("politics", ["election", "council", "parliament", "government", "vote",
                  "senate", "committee", "law", "tax", "electorate"],
     ["the legislative assembly", "the official vote", "the governing council",
      "elected representatives", "the administrative body"]),
    ("war", ["battle", "war", "army", "soldier", "weapon", "castle",
             "victory", "gun", "sword"],
     ["opposing military forces", "the armed conflict", "the fortified walls",
      "enlisted soldiers", "a decisive engagement"]),
    ("medicine", ["doctor", "hospital", "illness", "medicine", "nurse"],
     ["the licensed medical practitioners", "patients under treatment",
      "the health facility", "symptoms of disease"]),
    ("music", ["music", "song", "concert", "guitar", "piano"],
     ["instrumental and vocal tones", "a short musical composition",
      "players and singers", "the keyboard instrument"]),
    ("sport", ["team", "match", "game", "player", "football", "court"],
     ["two teams in competition", "the formal contest", "physical exertion",
      "the marked playing area"]),
    ("geography", ["river", "mountain", "lake", "valley", "island", "forest",
                   "bridge", "harbor", "sea"],
     ["a large natural stream of water", "the sheltered port",
      "densely wooded slopes", "the surrounding land"]),
    ("commerce", ["market", "shop", "merchant", "money", "trade", "coin",
                  "bank", "factory"],
     ["goods and services", "the financial institution", "retail trade",
      "deposits and lending"]),
    ("learning", ["school", "university", "teacher", "student", "book",
                  "library", "lesson"],
     ["young people receiving education", "a collection of books",
      "enrolled learners", "units of instruction"]),
    ("sky", ["star", "moon", "planet", "sun"],
     ["celestial bodies visible at night", "the astronomy records",
      "thermonuclear radiation", "the natural satellite"]),
    ("food", ["bread", "fruit", "wine", "milk", "meat", "wheat", "apple"],
     ["food made from dough of flour", "fermented juice of grapes",
      "the ripened fruit", "meals for travelers"]),
]

ANSWERABLE_TEMPLATES = [
    # (sentence, question, answer-part key)
    ("In {year}, the {noun} near {place} was defended by {person}.",
     "Who defended the {noun} near {place}?", "person"),
    ("The {noun} of {place} was built in {year}.",
     "When was the {noun} of {place} built?", "year"),
    ("{person} led the {noun} of {place} for {count} years.",
     "Who led the {noun} of {place}?", "person"),
    ("The old {noun} at {place} attracted {count} visitors every spring.",
     "How many visitors did the old {noun} at {place} attract every spring?",
     "count"),
    ("After the storm of {year}, {person} repaired the {noun} beside the gate.",
     "Who repaired the {noun} beside the gate after the storm of {year}?",
     "person"),
    ("The people of {place} kept their {noun} near the main road.",
     "Where did the people of {place} keep their {noun}?", "main_road"),
    ("According to the records, {person} paid for the new {noun} in {year}.",
     "According to the records, who paid for the new {noun} in {year}?",
     "person"),
]

IMPOSSIBLE_TEMPLATES = [
    "What {noun} did {person} sell in {place}?",
    "Which {noun} did {person} destroy before {year}?",
    "Why did {person} abandon the {noun} of {place}?",
]


def build(seed: int = 20200311) -> SquadData:
    rng = random.Random(seed)
    articles = []
    items = []
    topic_cycle = [TOPICS[i % len(TOPICS)] for i in range(35)]
    for ai, (topic, nouns, colors) in enumerate(topic_cycle):
        place = PLACES[ai]
        title = f"{place} ({topic})"
        paragraphs = []
        for pi in range(rng.randint(5, 7)):
            sentences = []
            facts = []  # (question, answer_text or None, sentence_index)
            used_people = []
            for qi in range(rng.randint(3, 5)):
                noun = rng.choice(nouns)
                person = rng.choice(PEOPLE)
                used_people.append(person)
                year = str(rng.randint(1130, 2019))
                count = str(rng.randint(40, 9000))
                values = {
                    "noun": noun, "place": place, "person": person,
                    "year": year, "count": count, "main_road": "near the main road",
                }
                if rng.random() < 0.32:
                    template = rng.choice(IMPOSSIBLE_TEMPLATES)
                    foreign = rng.choice([p for p in PEOPLE if p not in used_people])
                    question = template.format(
                        noun=rng.choice(nouns), person=foreign,
                        place=place, year=year,
                    )
                    facts.append((question, None, None))
                else:
                    sentence_t, question_t, answer_key = rng.choice(ANSWERABLE_TEMPLATES)
                    sentence = sentence_t.format(**values)
                    question = question_t.format(**values)
                    answer = values[answer_key] if answer_key != "main_road" else "near the main road"
                    facts.append((question, answer, len(sentences)))
                    sentences.append(sentence)
                if rng.random() < 0.5:
                    sentences.append(f"The chronicles of {place} describe {rng.choice(colors)}.")
            if not sentences:
                sentences.append(f"The chronicles of {place} describe {rng.choice(colors)}.")
            context = " ".join(sentences)
            offsets = []
            at = 0
            for s in sentences:
                offsets.append(at)
                at += len(s) + 1
            for qi, (question, answer, si) in enumerate(facts):
                qid = f"a{ai:02d}-p{pi:02d}-q{qi:02d}"
                if answer is None:
                    answers = ()
                    impossible = True
                else:
                    start = offsets[si] + sentences[si].find(answer)
                    assert context[start:start + len(answer)] == answer
                    answers = ((answer, start),)
                    impossible = False
                items.append(
                    QAItem(
                        id=qid, question=question, paragraph_ref=(title, pi),
                        answers=answers, is_impossible=impossible,
                    )
                )
            paragraphs.append(context)
        articles.append(Article(title=title, paragraphs=tuple(paragraphs)))
    return SquadData(version="v2.0-mini", articles=articles, items=items)


if __name__ == "__main__":
    data = build()
    write_squad(data.articles, data.items, OUT, version=data.version)
    check = read_squad(OUT)
    assert not check.issues, check.issues[:5]
    answerable = sum(1 for i in check.items if not i.is_impossible)
    print(
        f"wrote {len(check.articles)} articles, {len(check.items)} questions "
        f"({answerable} answerable) to {OUT}"
    )
