"""Three-stage word stemming: specific rules, irregular forms, affix stripping.

The first matching stage wins. Specific rules are (surface word, tag class)
pairs mapping directly to a stem ("dehydrogenised" as a verb ->
"dehydrogenate"); the irregular dictionary covers forms that affix removal
cannot reach ("calves" -> "calf"); affix stripping removes the longest listed
suffix (then prefix) whose guards pass, repeating until nothing applies so
that the result is a fixpoint. Stems never drop below 2 characters.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .errors import LoadError
from .tagger import NOUN_TAGS, VERB_TAGS

MIN_STEM = 2

_VOWELS = set("aeiou")

# Letters whose doubling survives -ed/-ing stripping ("roll", "pass", "buzz").
_KEEP_DOUBLED = set("lsz")

_CLASS_NAMES = ("verb", "noun", "any")


def tag_class(tag: str) -> str:
    if tag in VERB_TAGS:
        return "verb"
    if tag in NOUN_TAGS:
        return "noun"
    return "other"


@dataclass
class StemRuleSet:
    specific: dict[tuple[str, str], str] = field(default_factory=dict)
    irregulars: dict[str, str] = field(default_factory=dict)
    suffixes: list[tuple[str, int]] = field(default_factory=list)  # (affix, min stem length)
    prefixes: list[tuple[str, int]] = field(default_factory=list)

    def __post_init__(self):
        self.suffixes = sorted(self.suffixes, key=lambda a: (-len(a[0]), a[0]))
        self.prefixes = sorted(self.prefixes, key=lambda a: (-len(a[0]), a[0]))


def load_specific_rules(path: str | Path) -> dict[tuple[str, str], str]:
    """Lines of "word tagclass stem" with tagclass one of verb/noun/any."""
    rules: dict[tuple[str, str], str] = {}
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 3:
                raise LoadError(f"{path}: line {line_no}: expected 'word tagclass stem'")
            word, klass, stem_word = parts
            if klass not in _CLASS_NAMES:
                raise LoadError(f"{path}: line {line_no}: unknown tag class {klass!r}")
            rules[(word.lower(), klass)] = stem_word
    return rules


def load_irregulars(path: str | Path) -> dict[str, str]:
    """Lines of "word stem"."""
    table: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise LoadError(f"{path}: line {line_no}: expected 'word stem'")
            table[parts[0].lower()] = parts[1]
    return table


def load_affixes(path: str | Path) -> list[tuple[str, int]]:
    """One affix per line with an optional minimum-stem-length column."""
    affixes: list[tuple[str, int]] = []
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) == 1:
                affixes.append((parts[0], MIN_STEM))
            elif len(parts) == 2:
                try:
                    min_len = int(parts[1])
                except ValueError:
                    raise LoadError(f"{path}: line {line_no}: bad min length {parts[1]!r}")
                affixes.append((parts[0], max(min_len, MIN_STEM)))
            else:
                raise LoadError(f"{path}: line {line_no}: expected 'affix [minlen]'")
    return affixes


def load_stem_rules(
    specific_file: str | Path,
    irregulars_file: str | Path,
    suffix_file: str | Path,
    prefix_file: str | Path,
) -> StemRuleSet:
    return StemRuleSet(
        specific=load_specific_rules(specific_file),
        irregulars=load_irregulars(irregulars_file),
        suffixes=load_affixes(suffix_file),
        prefixes=load_affixes(prefix_file),
    )


def _is_consonant(ch: str) -> bool:
    return ch.isalpha() and ch.lower() not in _VOWELS


def _repair(stem: str, affix: str) -> str:
    """Undouble final consonants and restore a dropped 'e' after -ed/-ing."""
    if affix not in ("ed", "ing"):
        return stem
    if (
        len(stem) >= 3
        and stem[-1] == stem[-2]
        and _is_consonant(stem[-1])
        and stem[-1].lower() not in _KEEP_DOUBLED
    ):
        return stem[:-1]
    if (
        len(stem) >= 3
        and _is_consonant(stem[-1])
        and stem[-2].lower() in _VOWELS
        and _is_consonant(stem[-3])
    ):
        return stem + "e"
    return stem


def _suffix_applies(word: str, affix: str, min_len: int) -> bool:
    lower = word.lower()
    if not lower.endswith(affix) or len(word) - len(affix) < min_len:
        return False
    if affix == "es":
        # Only strip the inserted-e plural ("boxes", "catches"); plain
        # e-final words lose just the "s" ("activates" -> "activate").
        head = lower[: -len(affix)]
        return head.endswith(("s", "x", "z", "ch", "sh"))
    if affix == "s":
        # Never strip "ss" ("pass") or "us"/"is" latinates ("virus").
        return not lower.endswith(("ss", "us", "is"))
    return True


def _strip_once(word: str, rules: StemRuleSet) -> str:
    for affix, min_len in rules.suffixes:
        if _suffix_applies(word, affix, min_len):
            return _repair(word[: -len(affix)], affix)
    for affix, min_len in rules.prefixes:
        if word.lower().startswith(affix) and len(word) - len(affix) >= min_len:
            return word[len(affix):]
    return word


def _stage_once(word: str, klass: str, rules: StemRuleSet) -> str:
    lower = word.lower()
    if klass in ("verb", "noun"):
        specific = rules.specific.get((lower, klass))
        if specific is not None:
            return specific
    specific = rules.specific.get((lower, "any"))
    if specific is not None:
        return specific
    irregular = rules.irregulars.get(lower)
    if irregular is not None:
        return irregular
    return _strip_once(word, rules)


def stem(word: str, tag: str, rules: StemRuleSet) -> str:
    """Stem one word given its POS tag.

    Stages repeat until the result is stable, so stem is idempotent by
    construction; a revisited form (a cycle in user-supplied rules) ends the
    loop deterministically. Non-empty input gives non-empty output.
    """
    if not word:
        return word
    klass = tag_class(tag)
    current = word
    seen = {current}
    while True:
        after = _stage_once(current, klass, rules)
        if after == current:
            return current
        if after in seen:
            return after
        seen.add(after)
        current = after
