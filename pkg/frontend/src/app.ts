/**
 * The review application: pick a block, judge cards one by one, finish.
 *
 * The question text is never editable here; workers judge the proposed
 * synonym, set the exclusion flags (which imply an incorrect verdict) and
 * may add synonyms of their own. Progress advances only after the server
 * acknowledges a submission, and a reload always resumes from the server's
 * state, so no acknowledged verdict can be lost.
 */

import { ApiError, ReviewApi, StaleDatasetError } from "./api.js";
import { bindShortcuts, ShortcutAction } from "./keyboard.js";
import {
  Draft,
  FLAG_KEYS,
  FLAG_LABELS,
  FlagName,
  NextCardResponse,
  ReviewCard,
  addSynonyms,
  draftFromCard,
  highlightSegments,
  progressLabel,
  removeSynonym,
  setVerdict,
  toSubmitPayload,
  toggleFlag,
  validateDraft,
} from "./model.js";

const api = new ReviewApi({ baseUrl: "" });

interface AppState {
  workerId: string;
  blockId: string | null;
  current: NextCardResponse | null;
  draft: Draft;
  error: string | null;
  submitting: boolean;
}

const state: AppState = {
  workerId: localStorage.getItem("synqa-worker") ?? "",
  blockId: null,
  current: null,
  draft: { verdict: "", flags: new Set(), addedSynonyms: [] },
  error: null,
  submitting: false,
};

const root = () => document.getElementById("app")!;

function el(tag: string, className?: string, text?: string): HTMLElement {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

async function showBlocks(): Promise<void> {
  state.blockId = null;
  state.current = null;
  try {
    const listing = await api.blocks();
    const container = el("div", "blocks");
    container.appendChild(el("h1", "", "Review blocks"));
    const workerRow = el("div", "worker-row");
    const workerInput = el("input") as HTMLInputElement;
    workerInput.placeholder = "your worker id";
    workerInput.value = state.workerId;
    workerInput.addEventListener("change", () => {
      state.workerId = workerInput.value.trim();
      localStorage.setItem("synqa-worker", state.workerId);
    });
    workerRow.appendChild(el("label", "", "Worker: "));
    workerRow.appendChild(workerInput);
    container.appendChild(workerRow);
    for (const block of listing.blocks) {
      const row = el("button", "block-row");
      row.textContent =
        `${block.block_id}: ${progressLabel(block.reviewed, block.size)}` +
        (block.assigned_domains.length
          ? `  [${block.assigned_domains.join(", ")}]`
          : "");
      row.addEventListener("click", () => {
        state.blockId = block.block_id;
        void showNextCard();
      });
      container.appendChild(row);
    }
    container.appendChild(el("p", "hint", `dataset ${listing.version}`));
    root().replaceChildren(container);
  } catch (err) {
    renderError(err, () => void showBlocks());
  }
}

async function showNextCard(): Promise<void> {
  if (!state.blockId) return;
  try {
    state.current = await api.nextCard(state.blockId);
    state.error = null;
    if (state.current.complete || !state.current.card) {
      renderComplete();
    } else {
      state.draft = draftFromCard(state.current.card);
      renderCard(state.current.card);
    }
  } catch (err) {
    renderError(err, () => void showNextCard());
  }
}

function renderComplete(): void {
  const current = state.current!;
  const container = el("div", "complete");
  container.appendChild(el("h1", "", "Block complete"));
  container.appendChild(
    el("p", "", `${progressLabel(current.reviewed, current.total)} reviewed. Thank you!`),
  );
  const back = el("button", "", "back to blocks");
  back.addEventListener("click", () => void showBlocks());
  container.appendChild(back);
  root().replaceChildren(container);
}

function renderError(err: unknown, retry: () => void): void {
  const container = el("div", "error-banner");
  const message =
    err instanceof StaleDatasetError
      ? `${err.message}; reload the page`
      : err instanceof ApiError
        ? `service error: ${err.message}`
        : `service unreachable: ${String(err)}`;
  container.appendChild(el("p", "", message));
  const button = el("button", "", "retry");
  button.addEventListener("click", retry);
  container.appendChild(button);
  root().replaceChildren(container);
}

function renderCard(card: ReviewCard): void {
  const current = state.current!;
  const container = el("div", "card");

  const header = el("div", "header");
  header.appendChild(el("span", "progress", progressLabel(current.reviewed, current.total)));
  header.appendChild(el("span", "qid", card.question_id));
  container.appendChild(header);

  const origin = el("p", "origin");
  origin.appendChild(el("span", "label", "original: "));
  for (const segment of highlightSegments(card.origin_question, card.substitutions)) {
    origin.appendChild(
      el("span", segment.highlighted ? "token-highlight" : "", segment.text),
    );
  }
  container.appendChild(origin);

  const generated = el("p", "generated");
  generated.appendChild(el("span", "label", "generated: "));
  generated.appendChild(el("span", "", card.generated_question));
  container.appendChild(generated);

  for (const sub of card.substitutions) {
    const line = el("p", "substitution");
    line.appendChild(el("code", "", `${sub.original} → ${sub.replacement}`));
    if (sub.gloss) line.appendChild(el("span", "gloss", `  “${sub.gloss}”`));
    container.appendChild(line);
  }

  const paragraph = el("details", "paragraph");
  paragraph.appendChild(el("summary", "", "context paragraph"));
  paragraph.appendChild(el("p", "", card.paragraph));
  (paragraph as HTMLDetailsElement).open = true;
  container.appendChild(paragraph);

  const verdicts = el("div", "verdicts");
  for (const value of ["correct", "incorrect"] as const) {
    const button = el(
      "button",
      "verdict" + (state.draft.verdict === value ? " active" : ""),
      `${value} (${value === "correct" ? "c" : "x"})`,
    );
    button.addEventListener("click", () => {
      state.draft = setVerdict(state.draft, value);
      renderCard(card);
    });
    verdicts.appendChild(button);
  }
  container.appendChild(verdicts);

  const flags = el("div", "flags");
  FLAG_KEYS.forEach((flag, i) => {
    const button = el(
      "button",
      "flag" + (state.draft.flags.has(flag) ? " active" : ""),
      `${FLAG_LABELS[flag]} (${i + 1})`,
    );
    button.addEventListener("click", () => {
      state.draft = toggleFlag(state.draft, flag);
      renderCard(card);
    });
    flags.appendChild(button);
  });
  container.appendChild(flags);

  const synonyms = el("div", "synonyms");
  synonyms.appendChild(el("label", "", "add synonyms (a): "));
  const input = el("input", "synonym-input") as HTMLInputElement;
  input.id = "synonym-input";
  input.placeholder = "comma-separated";
  synonyms.appendChild(input);
  for (const synonym of state.draft.addedSynonyms) {
    const chip = el("button", "chip", `${synonym} ✕`);
    chip.addEventListener("click", () => {
      state.draft = removeSynonym(state.draft, synonym);
      renderCard(card);
    });
    synonyms.appendChild(chip);
  }
  container.appendChild(synonyms);

  if (state.error) {
    container.appendChild(el("p", "inline-error", state.error));
  }

  const submit = el("button", "submit", state.submitting ? "submitting…" : "submit (enter)");
  submit.addEventListener("click", () => void submitCurrent(card, input));
  container.appendChild(submit);

  root().replaceChildren(container);
}

async function submitCurrent(card: ReviewCard, input: HTMLInputElement): Promise<void> {
  if (state.submitting) return;
  if (input.value.trim()) {
    state.draft = addSynonyms(state.draft, input.value);
    input.value = "";
  }
  const problem = validateDraft(state.draft);
  if (problem) {
    state.error = problem;
    renderCard(card);
    return;
  }
  state.submitting = true;
  renderCard(card);
  try {
    await api.submit(toSubmitPayload(card, state.draft, state.workerId));
    state.error = null;
    state.submitting = false;
    await showNextCard();
  } catch (err) {
    state.submitting = false;
    if (err instanceof ApiError) {
      state.error = err.message;
      renderCard(card);
    } else {
      renderError(err, () => void showNextCard());
    }
  }
}

function handleShortcut(action: ShortcutAction): void {
  const card = state.current?.card;
  if (!card) return;
  const input = document.getElementById("synonym-input") as HTMLInputElement | null;
  switch (action) {
    case "correct":
      state.draft = setVerdict(state.draft, "correct");
      break;
    case "incorrect":
      state.draft = setVerdict(state.draft, "incorrect");
      break;
    case "flag_i":
    case "flag_ii":
    case "flag_iii":
    case "flag_iv":
    case "flag_v": {
      const index = ["flag_i", "flag_ii", "flag_iii", "flag_iv", "flag_v"].indexOf(action);
      state.draft = toggleFlag(state.draft, FLAG_KEYS[index] as FlagName);
      break;
    }
    case "focus_synonyms":
      input?.focus();
      return;
    case "submit":
      if (input) void submitCurrent(card, input);
      return;
  }
  renderCard(card);
}

bindShortcuts(window, handleShortcut);
void showBlocks();
