"""Entity normalization: replace long-form biological/chemical terms with abbreviations.

Multi-word names like "phosphatase and tensin homolog deleted on chromosome 10"
wreck POS tagging downstream, so they are collapsed into single abbreviated
tokens before any text analysis. The dictionary is a curated TSV
(long_form, abbreviation, score); only entries scoring above the retention
cutoff are kept.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .errors import LoadError

# Retention cutoff for dictionary entries (ROC inflection point of the
# upstream abbreviation scorer).
SCORE_CUTOFF = 0.88


@dataclass(frozen=True)
class AbbreviationEntry:
    long_form: str
    abbreviation: str
    score: float


@dataclass
class AbbreviationDictionary:
    """Retained entries, ordered longest long_form first (ties lexicographic)."""

    entries: list[AbbreviationEntry] = field(default_factory=list)
    _pattern: re.Pattern | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self.entries = sorted(
            self.entries, key=lambda e: (-len(e.long_form), e.long_form)
        )
        if self.entries:
            # Alternatives ordered longest first, so the leftmost match always
            # prefers the longest long form at that position.
            alternation = "|".join(re.escape(e.long_form) for e in self.entries)
            self._pattern = re.compile(r"\b(?:%s)\b" % alternation, re.IGNORECASE)
        self._by_long_form = {e.long_form.casefold(): e.abbreviation for e in self.entries}

    def __len__(self):
        return len(self.entries)

    def lookup(self, long_form: str) -> str | None:
        return self._by_long_form.get(long_form.casefold())


def load_dictionary(path: str | Path) -> AbbreviationDictionary:
    """Load a TSV dictionary, keeping only rows with score > 0.88.

    Format: UTF-8, tab-separated ``long_form<TAB>abbreviation<TAB>score``,
    '#' comment lines and blank lines ignored. Malformed rows and long forms
    mapped to two different abbreviations are load errors.
    """
    entries: list[AbbreviationEntry] = []
    seen: dict[str, tuple[int, str]] = {}  # casefolded long_form -> (line_no, abbreviation)
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 3:
                raise LoadError(
                    f"{path}: line {line_no}: expected 3 tab-separated fields, got {len(fields)}"
                )
            long_form, abbreviation, score_text = (f.strip() for f in fields)
            try:
                score = float(score_text)
            except ValueError:
                raise LoadError(f"{path}: line {line_no}: unparseable score {score_text!r}")
            if not 0.0 <= score <= 1.0:
                raise LoadError(f"{path}: line {line_no}: score {score} outside [0, 1]")
            if not long_form:
                raise LoadError(f"{path}: line {line_no}: empty long form")
            if not abbreviation or any(ch.isspace() for ch in abbreviation):
                raise LoadError(
                    f"{path}: line {line_no}: abbreviation {abbreviation!r} must be a single token"
                )
            if long_form.casefold() == abbreviation.casefold():
                raise LoadError(
                    f"{path}: line {line_no}: long form and abbreviation are identical"
                )
            key = long_form.casefold()
            if key in seen:
                prior_line, prior_abbrev = seen[key]
                if prior_abbrev != abbreviation:
                    raise LoadError(
                        f"{path}: line {line_no}: long form {long_form!r} conflicts with "
                        f"line {prior_line} ({prior_abbrev!r} vs {abbreviation!r})"
                    )
                continue  # identical duplicate, keep the first
            if score <= SCORE_CUTOFF:
                continue
            seen[key] = (line_no, abbreviation)
            entries.append(AbbreviationEntry(long_form, abbreviation, score))
    return AbbreviationDictionary(entries)


def normalize(text: str, dictionary: AbbreviationDictionary) -> str:
    """Replace every long-form occurrence with its abbreviation.

    Matching is case-insensitive at word boundaries, longest match first,
    left to right, non-overlapping; substituted output is never re-scanned.
    Characters outside matched spans are preserved byte for byte.
    """
    if not dictionary.entries:
        return text
    return dictionary._pattern.sub(
        lambda m: dictionary.lookup(m.group(0)), text
    )
