"""Two-phase transformation-based POS tagging.

Phase one assigns each token its most likely tag from a lexicon, with
defaults for unknown words (NN, NNP when capitalized, CD for numerals, the
punctuation tag for pure punctuation). Phase two corrects tags by applying
ordered lexical rules (affix-triggered, e.g. "NN ing fhassuf 3 VBG") and then
ordered contextual rules (neighbor-triggered, e.g. "RB JJ NEXTTAG NN").

Rules run in file order; each rule makes one left-to-right pass over the
current, mutating tag sequence.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from .errors import LoadError

WORD_TAGS = frozenset(
    """CC CD DT EX FW IN JJ JJR JJS LS MD NN NNS NNP NNPS PDT POS PRP PRP$
    RB RBR RBS RP SYM TO UH VB VBD VBN VBG VBP VBZ WDT WP WP$ WRB""".split()
)

PUNCT_TAGS = frozenset({".", ",", ":", "(", ")", "``", "''", "$", "#"})

TAG_SET = WORD_TAGS | PUNCT_TAGS

VERB_TAGS = frozenset({"VB", "VBD", "VBG", "VBN", "VBP", "VBZ"})
NOUN_TAGS = frozenset({"NN", "NNS", "NNP", "NNPS"})

# token -> (tag, tag, ...), most likely first
Lexicon = dict[str, tuple[str, ...]]
# (token, tag) pairs
TaggedSentence = list[tuple[str, str]]

_NUMERAL = re.compile(r"\$?\d+(?:[.,]\d+)*")

_PUNCT_TAG_MAP = {
    ".": ".", "!": ".", "?": ".",
    ",": ",",
    ":": ":", ";": ":", "...": ":", "…": ":",
    "(": "(", "[": "(", "{": "(",
    ")": ")", "]": ")", "}": ")",
    "`": "``", "``": "``",
    "'": "''", '"': "''", "''": "''",
    "$": "$", "#": "#",
}

_LEXICAL_KINDS = frozenset(
    {"hassuf", "haspref", "deletesuf", "deletepref", "char"}
)

_CONTEXT_TRIGGERS = frozenset(
    {
        "NEXTTAG", "PREVTAG", "NEXT1OR2TAG", "PREV1OR2TAG",
        "NEXT2TAG", "PREV2TAG", "NEXTWD", "PREVWD", "CURWD", "SURROUNDTAG",
    }
)


@dataclass(frozen=True)
class LexicalRule:
    from_tag: str | None  # None for the unconditioned (non-"f") forms
    affix: str
    kind: str             # member of _LEXICAL_KINDS
    affix_length: int
    to_tag: str


@dataclass(frozen=True)
class ContextualRule:
    from_tag: str
    to_tag: str
    trigger: str
    values: tuple[str, ...]


@dataclass
class TaggerModel:
    lexicon: Lexicon
    lexical_rules: list[LexicalRule]
    contextual_rules: list[ContextualRule]


def _check_tag(tag: str, path, line_no) -> str:
    if tag not in TAG_SET:
        raise LoadError(f"{path}: line {line_no}: unknown tag {tag!r}")
    return tag


def load_lexicon(path: str | Path) -> Lexicon:
    """Lines of "word TAG [TAG...]"; the first tag is the most likely one."""
    lexicon: Lexicon = {}
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) < 2:
                raise LoadError(f"{path}: line {line_no}: expected word and at least one tag")
            word, tags = parts[0], parts[1:]
            lexicon[word] = tuple(_check_tag(t, path, line_no) for t in tags)
    return lexicon


def load_lexical_rules(path: str | Path) -> list[LexicalRule]:
    """Affix rules, one per line.

    Tag-conditioned form: ``FROM affix fKIND length TO``; unconditioned
    form: ``affix KIND length TO``. Unknown keywords are load errors, never
    silently skipped.
    """
    rules: list[LexicalRule] = []
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) == 5:
                from_tag, affix, keyword, length, to_tag = parts
                if not keyword.startswith("f"):
                    raise LoadError(
                        f"{path}: line {line_no}: 5-field rule requires an f-prefixed keyword"
                    )
                kind = keyword[1:]
                from_tag = _check_tag(from_tag, path, line_no)
            elif len(parts) == 4:
                affix, keyword, length, to_tag = parts
                kind = keyword
                from_tag = None
            else:
                raise LoadError(f"{path}: line {line_no}: expected 4 or 5 fields")
            if kind not in _LEXICAL_KINDS:
                raise LoadError(f"{path}: line {line_no}: unknown rule keyword {keyword!r}")
            try:
                affix_length = int(length)
            except ValueError:
                raise LoadError(f"{path}: line {line_no}: unparseable affix length {length!r}")
            if affix_length != len(affix):
                raise LoadError(
                    f"{path}: line {line_no}: affix length {affix_length} does not match "
                    f"{affix!r}"
                )
            rules.append(
                LexicalRule(from_tag, affix, kind, affix_length, _check_tag(to_tag, path, line_no))
            )
    return rules


def load_contextual_rules(path: str | Path) -> list[ContextualRule]:
    """Neighbor-triggered rules: ``FROM TO TRIGGER value [value2]``."""
    rules: list[ContextualRule] = []
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) < 4:
                raise LoadError(f"{path}: line {line_no}: expected at least 4 fields")
            from_tag, to_tag, trigger = parts[0], parts[1], parts[2]
            values = tuple(parts[3:])
            if trigger not in _CONTEXT_TRIGGERS:
                raise LoadError(f"{path}: line {line_no}: unknown trigger {trigger!r}")
            if trigger == "SURROUNDTAG":
                if len(values) != 2:
                    raise LoadError(f"{path}: line {line_no}: SURROUNDTAG takes two values")
            elif len(values) != 1:
                raise LoadError(f"{path}: line {line_no}: {trigger} takes one value")
            rules.append(
                ContextualRule(
                    _check_tag(from_tag, path, line_no),
                    _check_tag(to_tag, path, line_no),
                    trigger,
                    values,
                )
            )
    return rules


def load_tagger_model(
    lexicon_file: str | Path,
    lexical_rules_file: str | Path,
    contextual_rules_file: str | Path,
) -> TaggerModel:
    return TaggerModel(
        lexicon=load_lexicon(lexicon_file),
        lexical_rules=load_lexical_rules(lexical_rules_file),
        contextual_rules=load_contextual_rules(contextual_rules_file),
    )


def punctuation_tag(token: str) -> str | None:
    """Punctuation tag for a token consisting only of non-alphanumerics."""
    if not token or any(ch.isalnum() for ch in token):
        return None
    return _PUNCT_TAG_MAP.get(token, "SYM")


def tag_initial(tokens: list[str], model: TaggerModel) -> TaggedSentence:
    """Lexicon lookup with the standard unknown-word defaults."""
    tagged: TaggedSentence = []
    for token in tokens:
        tags = model.lexicon.get(token) or model.lexicon.get(token.lower())
        if tags:
            tag = tags[0]
        else:
            punct = punctuation_tag(token)
            if punct is not None:
                tag = punct
            elif _NUMERAL.fullmatch(token):
                tag = "CD"
            elif token[0].isupper():
                tag = "NNP"
            else:
                tag = "NN"
        tagged.append((token, tag))
    return tagged


def _lexical_rule_fires(rule: LexicalRule, word: str, tag: str, lexicon: Lexicon) -> bool:
    if rule.from_tag is not None and tag != rule.from_tag:
        return False
    if rule.kind == "hassuf":
        return word.endswith(rule.affix)
    if rule.kind == "haspref":
        return word.startswith(rule.affix)
    if rule.kind == "deletesuf":
        return word.endswith(rule.affix) and word[: -rule.affix_length] in lexicon
    if rule.kind == "deletepref":
        return word.startswith(rule.affix) and word[rule.affix_length :] in lexicon
    if rule.kind == "char":
        return rule.affix in word
    raise AssertionError(rule.kind)


def apply_lexical_rules(
    tagged: TaggedSentence, rules: list[LexicalRule], lexicon: Lexicon | None = None
) -> TaggedSentence:
    """Apply affix rules in order, one left-to-right pass each."""
    lexicon = lexicon or {}
    pairs = list(tagged)
    for rule in rules:
        for i, (word, tag) in enumerate(pairs):
            if _lexical_rule_fires(rule, word, tag, lexicon):
                pairs[i] = (word, rule.to_tag)
    return pairs


def _context_rule_fires(rule: ContextualRule, pairs: TaggedSentence, i: int) -> bool:
    n = len(pairs)

    def tag_at(j):
        return pairs[j][1] if 0 <= j < n else None

    def word_at(j):
        return pairs[j][0] if 0 <= j < n else None

    t = rule.trigger
    v = rule.values[0]
    if t == "NEXTTAG":
        return tag_at(i + 1) == v
    if t == "PREVTAG":
        return tag_at(i - 1) == v
    if t == "NEXT1OR2TAG":
        return v in (tag_at(i + 1), tag_at(i + 2))
    if t == "PREV1OR2TAG":
        return v in (tag_at(i - 1), tag_at(i - 2))
    if t == "NEXT2TAG":
        return tag_at(i + 2) == v
    if t == "PREV2TAG":
        return tag_at(i - 2) == v
    if t == "NEXTWD":
        return word_at(i + 1) == v
    if t == "PREVWD":
        return word_at(i - 1) == v
    if t == "CURWD":
        return pairs[i][0] == v
    if t == "SURROUNDTAG":
        return tag_at(i - 1) == v and tag_at(i + 1) == rule.values[1]
    raise AssertionError(t)


def apply_contextual_rules(
    tagged: TaggedSentence, rules: list[ContextualRule]
) -> TaggedSentence:
    """Apply neighbor rules in order against the current tag sequence."""
    pairs = list(tagged)
    for rule in rules:
        for i in range(len(pairs)):
            if pairs[i][1] == rule.from_tag and _context_rule_fires(rule, pairs, i):
                pairs[i] = (pairs[i][0], rule.to_tag)
    return pairs


def tag(tokens: list[str], model: TaggerModel) -> TaggedSentence:
    """Full two-phase tagging: initial lookup, lexical pass, contextual pass."""
    tagged = tag_initial(tokens, model)
    tagged = apply_lexical_rules(tagged, model.lexical_rules, model.lexicon)
    return apply_contextual_rules(tagged, model.contextual_rules)
