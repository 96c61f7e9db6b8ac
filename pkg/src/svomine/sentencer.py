"""Sentence splitting and tokenization.

An abstract is split on word-final '.', '?' or '!' (which covers ellipses),
except when the whole word, period included, is a known acronym ("Dr.",
"e.g."). Each sentence is then split into word and punctuation tokens:
leading/trailing punctuation is detached from words unless the remaining core
is a protected form (acronym, decimal number, currency amount, or a listed
contraction), and listed contractions expand into their clitic parts
("don't" -> "do", "n't").

Both steps conserve characters: concatenating all tokens of all sentences
reproduces the abstract's non-whitespace character sequence.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from .errors import LoadError

# Characters that may be peeled off a token's edges as standalone punctuation.
# '$' and '-' are deliberately absent (currency, hyphenated names).
_PEEL_CHARS = set(".,;:!?()[]{}<>\"'`…“”‘’")

_SENTENCE_FINAL = (".", "?", "!")

# Any digits[.]digits form is protected; this generalizes the narrow
# currency shape ^[$][0-9]{1,3}[.][0-9][0-9] which is also accepted.
_PROTECTED_NUMBER = re.compile(r"\$?\d+(?:,\d{3})*\.\d+")

_WORD = re.compile(r"\S+")


@dataclass(frozen=True)
class Sentence:
    text: str
    source_offset: int


def load_acronyms(path: str | Path) -> frozenset[str]:
    """One acronym per line (trailing-period forms like "Dr."), '#' comments."""
    acronyms = set()
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if line and not line.startswith("#"):
                acronyms.add(line)
    return frozenset(acronyms)


def load_contractions(path: str | Path) -> dict[str, tuple[str, ...]]:
    """TSV of surface form -> space-separated expansion.

    Expansions must conserve characters (''.join(parts) == surface) so that
    tokenization remains a partition of the sentence's characters.
    """
    table: dict[str, tuple[str, ...]] = {}
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 2:
                raise LoadError(f"{path}: line {line_no}: expected 2 fields, got {len(fields)}")
            surface, expansion = fields[0].strip(), tuple(fields[1].split())
            if not surface or not expansion:
                raise LoadError(f"{path}: line {line_no}: empty surface or expansion")
            if "".join(expansion) != surface:
                raise LoadError(
                    f"{path}: line {line_no}: expansion does not conserve characters "
                    f"({surface!r} vs {expansion!r})"
                )
            table[surface.lower()] = expansion
    return table


def split_sentences(abstract: str, acronyms: frozenset[str] | set[str]) -> list[Sentence]:
    """Split an abstract into sentences, delimiters kept attached.

    A boundary falls after any whitespace-delimited word whose final character
    is '.', '?' or '!', unless the word (with its period) is in the acronym
    set. Text with no delimiter yields a single sentence.
    """
    sentences: list[Sentence] = []
    start: int | None = None
    last_end = 0
    for match in _WORD.finditer(abstract):
        if start is None:
            start = match.start()
        last_end = match.end()
        word = match.group(0)
        if word.endswith(_SENTENCE_FINAL) and word not in acronyms:
            sentences.append(Sentence(abstract[start:last_end], start))
            start = None
    if start is not None:
        sentences.append(Sentence(abstract[start:last_end], start))
    return sentences


def _is_protected(core: str, acronyms, contractions) -> bool:
    if core in acronyms:
        return True
    if _PROTECTED_NUMBER.fullmatch(core):
        return True
    return core.lower() in contractions


def _split_raw_token(raw: str, acronyms, contractions) -> list[str]:
    lead: list[str] = []
    trail: list[str] = []
    core = raw
    while core and not _is_protected(core, acronyms, contractions):
        if core[0] in _PEEL_CHARS:
            lead.append(core[0])
            core = core[1:]
        elif core[-1] in _PEEL_CHARS:
            trail.append(core[-1])
            core = core[:-1]
        else:
            break
    tokens = lead
    if core:
        expansion = contractions.get(core.lower())
        if expansion:
            # Apply the split points of the lowercase expansion to the
            # original core so that case is preserved.
            pos = 0
            for part in expansion:
                tokens.append(core[pos : pos + len(part)])
                pos += len(part)
        else:
            tokens.append(core)
    tokens.extend(reversed(trail))
    return tokens


def tokenize(
    sentence: Sentence | str,
    acronyms: frozenset[str] | set[str],
    contractions: dict[str, tuple[str, ...]],
) -> list[str]:
    """Tokenize one sentence into words and punctuation."""
    text = sentence.text if isinstance(sentence, Sentence) else sentence
    tokens: list[str] = []
    for match in _WORD.finditer(text):
        tokens.extend(_split_raw_token(match.group(0), acronyms, contractions))
    return tokens
