"""Subject-verb-object extraction from chunked sentences.

The first NX group is the clause subject; the first VX group after it supplies
the verb (the last verb-tagged token of the group, stemmed, so auxiliaries are
skipped); every NX between that VX and the next VX is an object. Extraction
then recurses clause by clause: each later VX takes the nearest preceding NX
as its subject. Subject, verb and objects are therefore always contiguous in
chunk order; outside tokens such as prepositions between them do not break a
clause. Clauses keep their full surface text; objects-only reduction to
entity names happens in the miner.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chunker import ChunkedSentence
from .tagger import VERB_TAGS

Span = tuple[int, int]


@dataclass(frozen=True)
class SVOAssertion:
    doc_id: str
    subject: str
    verb: str                 # stemmed (infinitive) form
    objects: tuple[str, ...]  # non-empty, in sentence order
    subject_span: Span
    verb_span: Span
    object_spans: tuple[Span, ...]


@dataclass(frozen=True)
class AtomicAssertion:
    doc_id: str
    subject: str
    verb: str
    object: str


def _surface(cs: ChunkedSentence, span: Span) -> str:
    return " ".join(cs.tokens[span[0] : span[1] + 1])


def _verb_head(cs: ChunkedSentence, span: Span) -> int:
    """Index of the last verb-tagged token in a VX span (the head verb)."""
    for i in range(span[1], span[0] - 1, -1):
        if cs.tags[i] in VERB_TAGS:
            return i
    return span[1]


def extract_svos(
    cs: ChunkedSentence, stems: list[str], doc_id: str = ""
) -> list[SVOAssertion]:
    """Extract all clause assertions from one chunked sentence.

    `stems` holds the stemmed form of each token, parallel to `cs.tokens`.
    Returns an empty list when no (NX, VX, NX) ordering exists.
    """
    nx = cs.spans("NX")
    vx = cs.spans("VX")
    if not nx or not vx:
        return []
    first_nx = nx[0]
    verbs = [v for v in vx if v[0] > first_nx[0]]
    assertions: list[SVOAssertion] = []
    for k, verb_span in enumerate(verbs):
        next_start = verbs[k + 1][0] if k + 1 < len(verbs) else len(cs.tokens)
        objects = [s for s in nx if verb_span[1] < s[0] < next_start]
        if not objects:
            continue
        if k == 0:
            subject_span = first_nx
        else:
            preceding = [s for s in nx if s[1] < verb_span[0]]
            subject_span = preceding[-1]
        head = _verb_head(cs, verb_span)
        assertions.append(
            SVOAssertion(
                doc_id=doc_id,
                subject=_surface(cs, subject_span),
                verb=stems[head],
                objects=tuple(_surface(cs, s) for s in objects),
                subject_span=subject_span,
                verb_span=verb_span,
                object_spans=tuple(objects),
            )
        )
    return assertions


def atomize(assertion: SVOAssertion) -> list[AtomicAssertion]:
    """One single-object assertion per object, order preserved."""
    return [
        AtomicAssertion(assertion.doc_id, assertion.subject, assertion.verb, obj)
        for obj in assertion.objects
    ]


def dump_assertion(assertion: SVOAssertion) -> str:
    """One record per line: doc_id, subject, verb, tab-separated objects."""
    return "\t".join(
        [assertion.doc_id, assertion.subject, assertion.verb, *assertion.objects]
    )
