/**
 * Pure review-card state: verdict drafts, flag implications, validation,
 * highlight computation and progress labels. No DOM, no network.
 */

export type VerdictValue = "correct" | "incorrect" | "";

export const FLAG_KEYS = [
  "q_wrong",
  "idiomatic",
  "fixed_phrase",
  "multiword_entity",
  "improper_sentence",
] as const;

export type FlagName = (typeof FLAG_KEYS)[number];

export const FLAG_LABELS: Record<FlagName, string> = {
  q_wrong: "(i) original question is wrong",
  idiomatic: "(ii) idiomatic expression",
  fixed_phrase: "(iii) fixed prepositional phrase",
  multiword_entity: "(iv) multiword named entity",
  improper_sentence: "(v) improper sentence",
};

export interface SubstitutionView {
  original: string;
  start: number;
  end: number;
  replacement: string;
  gloss: string;
}

export interface ReviewCard {
  ordinal: number;
  question_id: string;
  origin_question: string;
  generated_question: string;
  paragraph: string;
  strategy: string;
  substitutions: SubstitutionView[];
  verdict: VerdictValue;
  flags: string[];
  added_synonyms: string[];
}

export interface BlockSummary {
  block_id: string;
  size: number;
  reviewed: number;
  assigned_domains: string[];
  worker_id: string | null;
}

export interface NextCardResponse {
  version: string;
  complete: boolean;
  card: ReviewCard | null;
  reviewed: number;
  total: number;
}

export interface Draft {
  verdict: VerdictValue;
  flags: ReadonlySet<FlagName>;
  addedSynonyms: readonly string[];
}

export function emptyDraft(): Draft {
  return { verdict: "", flags: new Set(), addedSynonyms: [] };
}

/** Resume whatever the server already has for this card. */
export function draftFromCard(card: ReviewCard): Draft {
  return {
    verdict: card.verdict,
    flags: new Set(card.flags.filter(isFlag)),
    addedSynonyms: [...card.added_synonyms],
  };
}

function isFlag(name: string): name is FlagName {
  return (FLAG_KEYS as readonly string[]).includes(name);
}

export function setVerdict(draft: Draft, verdict: VerdictValue): Draft {
  return { ...draft, verdict };
}

/**
 * Toggling any exclusion flag on implies the synonym is incorrect;
 * clearing flags never silently flips the verdict back.
 */
export function toggleFlag(draft: Draft, flag: FlagName): Draft {
  const flags = new Set(draft.flags);
  if (flags.has(flag)) {
    flags.delete(flag);
    return { ...draft, flags };
  }
  flags.add(flag);
  return { ...draft, flags, verdict: "incorrect" };
}

export function addSynonyms(draft: Draft, raw: string): Draft {
  const entries = raw
    .split(",")
    .map((s) => s.trim())
    .filter((s) => s.length > 0);
  const merged = [...draft.addedSynonyms];
  for (const entry of entries) {
    if (!merged.includes(entry)) {
      merged.push(entry);
    }
  }
  return { ...draft, addedSynonyms: merged };
}

export function removeSynonym(draft: Draft, synonym: string): Draft {
  return {
    ...draft,
    addedSynonyms: draft.addedSynonyms.filter((s) => s !== synonym),
  };
}

/** Why the draft cannot be submitted yet, or null when it can. */
export function validateDraft(draft: Draft): string | null {
  if (draft.verdict === "") {
    return draft.flags.size > 0
      ? "flags imply an incorrect verdict; pick a verdict first"
      : "choose correct or incorrect before submitting";
  }
  if (draft.flags.size > 0 && draft.verdict !== "incorrect") {
    return "a flagged row cannot be marked correct";
  }
  return null;
}

export interface SubmitPayload {
  question_id: string;
  verdict: VerdictValue;
  flags: FlagName[];
  added_synonyms: string[];
  worker_id: string;
}

export function toSubmitPayload(
  card: ReviewCard,
  draft: Draft,
  workerId: string,
): SubmitPayload {
  return {
    question_id: card.question_id,
    verdict: draft.verdict,
    flags: [...draft.flags].sort(),
    added_synonyms: [...draft.addedSynonyms],
    worker_id: workerId,
  };
}

export interface Segment {
  text: string;
  highlighted: boolean;
}

/**
 * Split the origin question into plain and highlighted segments using the
 * recorded substitution offsets, so the view marks exactly the spans the
 * generator replaced.
 */
export function highlightSegments(
  origin: string,
  substitutions: readonly { start: number; end: number }[],
): Segment[] {
  const spans = [...substitutions].sort((a, b) => a.start - b.start);
  const segments: Segment[] = [];
  let cursor = 0;
  for (const span of spans) {
    if (span.start > cursor) {
      segments.push({ text: origin.slice(cursor, span.start), highlighted: false });
    }
    segments.push({ text: origin.slice(span.start, span.end), highlighted: true });
    cursor = span.end;
  }
  if (cursor < origin.length) {
    segments.push({ text: origin.slice(cursor), highlighted: false });
  }
  return segments;
}

export function progressLabel(reviewed: number, total: number): string {
  const percent = total === 0 ? 0 : Math.round((100 * reviewed) / total);
  return `${reviewed} / ${total} (${percent}%)`;
}
