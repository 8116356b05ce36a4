/**
 * Keyboard shortcuts for the review loop. The mapping itself is pure so it
 * can be tested without a DOM; `bindShortcuts` wires it to a window.
 */

export type ShortcutAction =
  | "correct"
  | "incorrect"
  | "flag_i"
  | "flag_ii"
  | "flag_iii"
  | "flag_iv"
  | "flag_v"
  | "focus_synonyms"
  | "submit";

export const DEFAULT_BINDINGS: Record<string, ShortcutAction> = {
  c: "correct",
  x: "incorrect",
  "1": "flag_i",
  "2": "flag_ii",
  "3": "flag_iii",
  "4": "flag_iv",
  "5": "flag_v",
  a: "focus_synonyms",
  enter: "submit",
};

const TYPING_TAGS = new Set(["input", "textarea", "select"]);

/**
 * Action for a keystroke, or null when it should be ignored. While the
 * focus is in a text field only Enter stays active (to submit the synonym
 * being typed); everything else belongs to the field.
 */
export function actionForKey(
  key: string,
  focusedTag: string | null,
  bindings: Record<string, ShortcutAction> = DEFAULT_BINDINGS,
): ShortcutAction | null {
  const action = bindings[key.toLowerCase()];
  if (action === undefined) {
    return null;
  }
  if (focusedTag !== null && TYPING_TAGS.has(focusedTag.toLowerCase())) {
    return action === "submit" ? action : null;
  }
  return action;
}

export function bindShortcuts(
  target: Pick<Window, "addEventListener" | "removeEventListener">,
  handle: (action: ShortcutAction) => void,
  bindings: Record<string, ShortcutAction> = DEFAULT_BINDINGS,
): () => void {
  const listener = (event: Event) => {
    const keyboardEvent = event as KeyboardEvent;
    const active = (event.target as HTMLElement | null)?.tagName ?? null;
    const action = actionForKey(keyboardEvent.key, active, bindings);
    if (action !== null) {
      keyboardEvent.preventDefault();
      handle(action);
    }
  };
  target.addEventListener("keydown", listener);
  return () => target.removeEventListener("keydown", listener);
}
