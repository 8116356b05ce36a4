"""Synonym-substitution adversarial question sets for SQuAD-style QA.

Pipeline: parse a WordNet 3.0 dictionary, select substitutable question
tokens, rank their senses against the paragraph with a Lesk-style overlap,
substitute synonyms of the chosen sense, route the candidates through a
human verification workflow, and score model predictions on base vs.
adversarial sets with exact match.
"""

__version__ = "0.1.0"
