import { describe, expect, it } from "vitest";

import {
  FLAG_KEYS,
  ReviewCard,
  addSynonyms,
  draftFromCard,
  emptyDraft,
  highlightSegments,
  progressLabel,
  removeSynonym,
  setVerdict,
  toSubmitPayload,
  toggleFlag,
  validateDraft,
} from "../src/model.js";

const card: ReviewCard = {
  ordinal: 4,
  question_id: "q1-syn-001",
  origin_question: "Which direction did Romans use to drift through the Rhine?",
  generated_question: "Which way did Romans use to drift through the Rhine?",
  paragraph: "Some context.",
  strategy: "single",
  substitutions: [
    { original: "direction", start: 6, end: 15, replacement: "way", gloss: "a line leading to a place or point" },
  ],
  verdict: "",
  flags: [],
  added_synonyms: [],
};

describe("draft state", () => {
  it("starts unreviewed and invalid", () => {
    const draft = emptyDraft();
    expect(draft.verdict).toBe("");
    expect(validateDraft(draft)).toMatch(/choose correct or incorrect/);
  });

  it("setting any case flag implies an incorrect verdict", () => {
    let draft = emptyDraft();
    draft = toggleFlag(draft, "fixed_phrase");
    expect(draft.verdict).toBe("incorrect");
    expect([...draft.flags]).toEqual(["fixed_phrase"]);
    expect(validateDraft(draft)).toBeNull();
  });

  it("clearing a flag keeps the verdict", () => {
    let draft = toggleFlag(emptyDraft(), "idiomatic");
    draft = toggleFlag(draft, "idiomatic");
    expect(draft.flags.size).toBe(0);
    expect(draft.verdict).toBe("incorrect");
  });

  it("a flagged row cannot be marked correct", () => {
    let draft = toggleFlag(emptyDraft(), "q_wrong");
    draft = setVerdict(draft, "correct");
    expect(validateDraft(draft)).toMatch(/cannot be marked correct/);
  });

  it("splits, trims and dedupes added synonyms", () => {
    let draft = setVerdict(emptyDraft(), "correct");
    draft = addSynonyms(draft, " way , path,, way ");
    expect(draft.addedSynonyms).toEqual(["way", "path"]);
    draft = removeSynonym(draft, "way");
    expect(draft.addedSynonyms).toEqual(["path"]);
  });

  it("resumes from a server-side record", () => {
    const reviewed = {
      ...card,
      verdict: "incorrect" as const,
      flags: ["multiword_entity"],
      added_synonyms: ["route"],
    };
    const draft = draftFromCard(reviewed);
    expect(draft.verdict).toBe("incorrect");
    expect(draft.flags.has("multiword_entity")).toBe(true);
    expect(draft.addedSynonyms).toEqual(["route"]);
  });

  it("builds the submission payload", () => {
    let draft = setVerdict(emptyDraft(), "correct");
    draft = addSynonyms(draft, "way");
    const payload = toSubmitPayload(card, draft, "w1");
    expect(payload).toEqual({
      question_id: "q1-syn-001",
      verdict: "correct",
      flags: [],
      added_synonyms: ["way"],
      worker_id: "w1",
    });
  });

  it("knows all five case flags", () => {
    expect(FLAG_KEYS).toHaveLength(5);
  });
});

describe("highlighting", () => {
  it("marks exactly the recorded span", () => {
    const segments = highlightSegments(card.origin_question, card.substitutions);
    expect(segments).toEqual([
      { text: "Which ", highlighted: false },
      { text: "direction", highlighted: true },
      { text: " did Romans use to drift through the Rhine?", highlighted: false },
    ]);
    const rebuilt = segments.map((s) => s.text).join("");
    expect(rebuilt).toBe(card.origin_question);
  });

  it("handles multiple substitutions in offset order", () => {
    const origin = "the house near the bank";
    const segments = highlightSegments(origin, [
      { start: 19, end: 23 },
      { start: 4, end: 9 },
    ]);
    expect(segments.map((s) => [s.text, s.highlighted])).toEqual([
      ["the ", false],
      ["house", true],
      [" near the ", false],
      ["bank", true],
    ]);
  });

  it("no substitutions means one plain segment", () => {
    expect(highlightSegments("hello", [])).toEqual([
      { text: "hello", highlighted: false },
    ]);
  });
});

describe("progress label", () => {
  it("renders counts and percent", () => {
    expect(progressLabel(3, 10)).toBe("3 / 10 (30%)");
    expect(progressLabel(10, 10)).toBe("10 / 10 (100%)");
    expect(progressLabel(0, 0)).toBe("0 / 0 (0%)");
  });
});
