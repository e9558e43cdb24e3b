"""Noun group identification by shallow parsing.

A noun group is a maximal token run matching DET? (ADJ|NUM)* (NOUN|PROPN)+;
a pronoun forms a singleton group. The head is the last noun token.
"""

from __future__ import annotations

from .types import NounGroup, Pos, Token

_MODIFIERS = (Pos.ADJ, Pos.NUM)
_NOUNS = (Pos.NOUN, Pos.PROPN)


def chunk_noun_groups(tokens: list[Token]) -> list[NounGroup]:
    groups: list[NounGroup] = []
    n = len(tokens)
    i = 0
    while i < n:
        pos = tokens[i].pos
        if pos is Pos.PRON:
            groups.append(NounGroup(i, i, i))
            i += 1
            continue
        j = i + 1 if pos is Pos.DET else i
        k = j
        while k < n and tokens[k].pos in _MODIFIERS:
            k += 1
        m = k
        while m < n and tokens[m].pos in _NOUNS:
            m += 1
        if m > k:
            groups.append(NounGroup(i, m - 1, m - 1))
            i = m
        else:
            i += 1
    return groups
