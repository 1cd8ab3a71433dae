"""Constant-length substitutions: parsing, validation, seeds.

A substitution of length L maps every letter to a word of exactly L
letters.  The text file format is

    alphabet: a b c
    rules:
    a: a a c a a
    b: a b c a a
    c: a c c b a

Rule words may also be written as a single run like `aacaa` when every
letter of the alphabet is a single character.  A JSON equivalent with
fields `alphabet` (list) and `rules` (letter -> word or letter list) is
accepted as well.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from .errors import ParseError, PreconditionError


@dataclass(frozen=True)
class Substitution:
    alphabet: tuple[str, ...]
    rules: tuple[tuple[str, ...], ...]  # parallel to alphabet

    def __post_init__(self):
        if len(set(self.alphabet)) != len(self.alphabet) or not self.alphabet:
            raise PreconditionError("alphabet letters must be distinct and non-empty")
        if len(self.rules) != len(self.alphabet):
            raise PreconditionError("one rule per letter required")
        lengths = {len(w) for w in self.rules}
        if len(lengths) != 1:
            raise PreconditionError(f"non-constant length: {sorted(lengths)}")
        if self.length < 2:
            raise PreconditionError("substitution length must be >= 2")
        letters = set(self.alphabet)
        for w in self.rules:
            for x in w:
                if x not in letters:
                    raise PreconditionError(f"unknown symbol {x!r} in rule")

    @property
    def length(self) -> int:
        return len(self.rules[0])

    @cached_property
    def _letter_index(self):
        return {a: i for i, a in enumerate(self.alphabet)}

    def rule(self, letter: str) -> tuple[str, ...]:
        return self.rules[self._letter_index[letter]]

    def column(self, j: int) -> tuple[str, ...]:
        """Column j of the rule block, as the tuple (theta(a)[j] for a in alphabet)."""
        return tuple(w[j] for w in self.rules)

    @cached_property
    def is_primitive(self) -> bool:
        """Some power of the incidence relation connects every letter to every letter."""
        n = len(self.alphabet)
        idx = self._letter_index
        adj = [[False] * n for _ in range(n)]
        for i, w in enumerate(self.rules):
            for x in w:
                adj[i][idx[x]] = True
        power = adj
        # Wielandt bound on the primitivity exponent.
        for _ in range(n * n - 2 * n + 2):
            if all(all(row) for row in power):
                return True
            power = [
                [
                    any(power[i][k] and adj[k][j] for k in range(n))
                    for j in range(n)
                ]
                for i in range(n)
            ]
        return all(all(row) for row in power)

    @cached_property
    def is_bijective(self) -> bool:
        n = len(self.alphabet)
        return all(len(set(self.column(j))) == n for j in range(self.length))

    def apply(self, word) -> tuple[str, ...]:
        out = []
        for letter in word:
            out.extend(self.rule(letter))
        return tuple(out)

    @cached_property
    def two_block_language(self) -> frozenset[tuple[str, str]]:
        """Admissible 2-letter words: pairs occurring in some iterated image."""
        pairs = set()
        for w in self.rules:
            pairs.update(zip(w, w[1:]))
        while True:
            new = set(pairs)
            for (a, b) in pairs:
                wa, wb = self.rule(a), self.rule(b)
                new.update(zip(wa, wa[1:]))
                new.add((wa[-1], wb[0]))
            if new == pairs:
                return frozenset(pairs)
            pairs = new

    def to_text(self) -> str:
        lines = ["alphabet: " + " ".join(self.alphabet), "rules:"]
        for a, w in zip(self.alphabet, self.rules):
            lines.append(f"{a}: " + " ".join(w))
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(
            {
                "alphabet": list(self.alphabet),
                "rules": {a: list(w) for a, w in zip(self.alphabet, self.rules)},
            },
            indent=2,
            sort_keys=True,
        )


def fixed_point_seeds(subst: Substitution) -> tuple[str, ...]:
    """Letters s with theta(s)[1] = s.

    Position 1 is the letter to the right of the dot after one
    shift-then-substitute step, so exactly these letters seed two-sided
    sequences fixed by that map.
    """
    return tuple(s for s in subst.alphabet if subst.rule(s)[1] == s)


def _split_rule_word(tokens, alphabet, line_no):
    if len(tokens) == 1 and tokens[0] not in alphabet and all(len(a) == 1 for a in alphabet):
        tokens = list(tokens[0])
    for t in tokens:
        if t not in alphabet:
            raise ParseError(f"unknown symbol {t!r}", line=line_no)
    return tuple(tokens)


def parse_substitution_text(text: str) -> Substitution:
    alphabet = None
    rules = {}
    in_rules = False
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("alphabet:"):
            alphabet = tuple(line[len("alphabet:"):].split())
            if not alphabet:
                raise ParseError("empty alphabet", line=line_no)
            continue
        if line == "rules:":
            if alphabet is None:
                raise ParseError("rules before alphabet", line=line_no)
            in_rules = True
            continue
        if not in_rules or ":" not in line:
            raise ParseError(f"unexpected line {line!r}", line=line_no)
        head, _, tail = line.partition(":")
        letter = head.strip()
        if alphabet is None or letter not in alphabet:
            raise ParseError(f"unknown symbol {letter!r}", line=line_no)
        if letter in rules:
            raise ParseError(f"duplicate rule for {letter!r}", line=line_no)
        rules[letter] = _split_rule_word(tail.split(), set(alphabet), line_no)
    if alphabet is None:
        raise ParseError("missing alphabet line")
    missing = [a for a in alphabet if a not in rules]
    if missing:
        raise ParseError(f"missing rules for {missing}")
    try:
        return Substitution(alphabet, tuple(rules[a] for a in alphabet))
    except PreconditionError as exc:
        raise ParseError(str(exc)) from exc


def parse_substitution_json(text: str) -> Substitution:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "alphabet" not in doc or "rules" not in doc:
        raise ParseError("expected object with 'alphabet' and 'rules'")
    alphabet = tuple(doc["alphabet"])
    rules = []
    for a in alphabet:
        if a not in doc["rules"]:
            raise ParseError(f"missing rule for {a!r}")
        word = doc["rules"][a]
        if isinstance(word, str):
            word = list(word)
        rules.append(tuple(word))
    try:
        return Substitution(alphabet, tuple(rules))
    except PreconditionError as exc:
        raise ParseError(str(exc)) from exc


def parse_substitution(text: str) -> Substitution:
    """Parse either the text format or the JSON equivalent."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_substitution_json(text)
    return parse_substitution_text(text)
