"""Noun/verb group chunking over tag sequences.

Chunking is a 4-step protocol on the space-joined tag string:

1. protect the participle tags VBD, VBG, VBN with a reserved suffix so they
   cannot be absorbed into noun groups,
2. find NX (noun group) spans with the noun-phrase tag pattern,
3. remove the protection suffix,
4. find VX (verb group) spans with the verb-phrase tag pattern over the tags
   not covered by an NX span.

Both patterns operate on space-terminated tag tokens ("NN " etc.) and are
matched with leftmost-longest (POSIX) semantics: at the leftmost position
where any match starts, the longest match wins. Matches start and end on tag
boundaries only.
"""

from __future__ import annotations

from dataclasses import dataclass

import regex

from .tagger import TaggedSentence, VERB_TAGS

PROTECT_SUFFIX = "~"
PROTECTED_TAGS = ("VBD", "VBG", "VBN")

# Noun-phrase pattern: an optional possessive noun group ("... POS") followed
# by the noun group proper, which is either determiner-led, bare-modifier-led,
# or a standalone pronoun-like tag.
_NP_DET_GROUP = "(PDT )?(DT |PRP[$] |WDT |WP[$] )"
_NP_MODS_DET = "(VBG |VBD |VBN |JJ |JJR |JJS |, |CC |NN |NNS |NNP |NNPS |CD )*"
_NP_MODS_BARE = "(JJ |JJR |JJS |, |CC |NN |NNS |NNP |NNPS |CD )*"
_NP_HEAD = "(NN |NNS |NNP |NNPS |CD )+"
_NP_CORE = (
    "((" + _NP_DET_GROUP + _NP_MODS_DET + _NP_HEAD + ")"
    "|((PDT )?" + _NP_MODS_BARE + _NP_HEAD + ")"
    "|EX |PRP |WP |WDT )"
)
NOUN_PHRASE_PATTERN = "(" + _NP_CORE + "POS )?" + _NP_CORE

# Verb-phrase pattern: optional adverbs and modal, a verb group with absorbed
# adverbs, an optional particle, and an optional to-infinitive tail.
VERB_PHRASE_PATTERN = (
    "(RB |RBR |RBS |WRB )*(MD )?(RB |RBR |RBS |WRB )*"
    "(VB |VBD |VBG |VBN |VBP |VBZ )"
    "(VB |VBD |VBG |VBN |VBP |VBZ |RB |RBR |RBS |WRB )*"
    "(RP )?(TO (RB )*(VB |VBN )(RP )?)?"
)

_NP_RE = regex.compile(NOUN_PHRASE_PATTERN, flags=regex.POSIX)
_VP_RE = regex.compile(VERB_PHRASE_PATTERN, flags=regex.POSIX)

# Placeholder for tags masked out of verb-phrase matching; matches nothing in
# either pattern.
_MASK_TAG = "0"


@dataclass(frozen=True)
class Chunk:
    """A labelled token span; label "NX", "VX", or "O" for outside tokens."""

    label: str
    start: int  # first token index
    end: int    # last token index, inclusive

    def indices(self):
        return range(self.start, self.end + 1)


@dataclass
class ChunkedSentence:
    tokens: list[str]
    tags: list[str]
    items: list[Chunk]

    def spans(self, label: str) -> list[tuple[int, int]]:
        return [(c.start, c.end) for c in self.items if c.label == label]


def protect_verbs(tags: list[str]) -> list[str]:
    """Suffix VBD/VBG/VBN so noun-phrase alternatives cannot match them."""
    return [t + PROTECT_SUFFIX if t in PROTECTED_TAGS else t for t in tags]


def unprotect_verbs(tags: list[str]) -> list[str]:
    return [t[: -len(PROTECT_SUFFIX)] if t.endswith(PROTECT_SUFFIX) else t for t in tags]


def _tag_string(tags: list[str]) -> tuple[str, list[int]]:
    """Space-terminated tag string plus the character offset of each tag."""
    offsets = []
    pos = 0
    for t in tags:
        offsets.append(pos)
        pos += len(t) + 1
    return "".join(t + " " for t in tags), offsets


def _match_spans(pattern: "regex.Pattern", tags: list[str]) -> list[tuple[int, int]]:
    """Leftmost-longest non-overlapping matches, as inclusive token spans.

    Matching is attempted only at tag boundaries; POSIX semantics make the
    match at the first viable boundary the longest one there.
    """
    text, offsets = _tag_string(tags)
    boundary_to_index = {off: i for i, off in enumerate(offsets)}
    end_to_index = {off + len(t) + 1: i for i, (off, t) in enumerate(zip(offsets, tags))}
    spans: list[tuple[int, int]] = []
    k = 0
    while k < len(tags):
        m = pattern.match(text, offsets[k])
        if m is None or m.end() == m.start():
            k += 1
            continue
        last = end_to_index.get(m.end())
        if last is None:  # cannot happen: every alternative ends "TAG "
            raise AssertionError(f"match not aligned to tag boundary: {m.group(0)!r}")
        spans.append((boundary_to_index[m.start()], last))
        k = last + 1
    return spans


def find_noun_phrases(tags: list[str]) -> list[tuple[int, int]]:
    """NX spans over a (verb-protected) tag sequence."""
    return _match_spans(_NP_RE, tags)


def find_verb_phrases(tags: list[str], masked: set[int] | None = None) -> list[tuple[int, int]]:
    """VX spans over the tags, with `masked` token indices excluded."""
    if masked:
        tags = [_MASK_TAG if i in masked else t for i, t in enumerate(tags)]
    return _match_spans(_VP_RE, tags)


def chunk(tagged: TaggedSentence) -> ChunkedSentence:
    """Run the full 4-step protocol on one tagged sentence."""
    tokens = [w for w, _ in tagged]
    tags = [t for _, t in tagged]
    nx_spans = find_noun_phrases(protect_verbs(tags))
    covered = {i for s, e in nx_spans for i in range(s, e + 1)}
    vx_spans = find_verb_phrases(tags, masked=covered)

    labelled = [(s, e, "NX") for s, e in nx_spans] + [(s, e, "VX") for s, e in vx_spans]
    labelled.sort()
    items: list[Chunk] = []
    pos = 0
    for s, e, label in labelled:
        items.extend(Chunk("O", i, i) for i in range(pos, s))
        items.append(Chunk(label, s, e))
        pos = e + 1
    items.extend(Chunk("O", i, i) for i in range(pos, len(tags)))
    return ChunkedSentence(tokens, tags, items)


def to_bracketed(cs: ChunkedSentence) -> str:
    """Debug dump: "(NX token/TAG ... NX)" style bracketing."""
    parts = []
    for item in cs.items:
        body = " ".join(f"{cs.tokens[i]}/{cs.tags[i]}" for i in item.indices())
        if item.label == "O":
            parts.append(body)
        else:
            parts.append(f"({item.label} {body} {item.label})")
    return " ".join(parts)
