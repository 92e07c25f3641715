"""Combinatorial codes on a finite neuron set, with compact-text and JSON I/O.

A code is a duplicate-free collection of codewords over neurons 1..n, where a
codeword is a subset of {1, ..., n}.  Internally every codeword is a bitmask
(neuron i lives at bit i-1), which keeps the subset combinatorics elsewhere in
the package cheap; the public surface speaks frozensets of 1-based ints.
"""

from __future__ import annotations

import json
import re
from collections.abc import Iterable

MAX_NEURONS = 64

_N_PREFIX = re.compile(r"^\s*n\s*=\s*(\d+)\s*[:;]?\s*")
_JSON_OBJECT = re.compile(r"^\{\s*\"")


def word_mask(members: Iterable[int], n: int | None = None) -> int:
    """Bitmask of a codeword given as an iterable of 1-based neuron indices."""
    mask = 0
    for i in members:
        if not isinstance(i, int) or isinstance(i, bool):
            raise ValueError(f"neuron index must be an int, got {i!r}")
        if i < 1:
            raise ValueError(f"neuron index must be >= 1, got {i}")
        if n is not None and i > n:
            raise ValueError(f"neuron index {i} exceeds declared n={n}")
        if i > MAX_NEURONS:
            raise ValueError(f"neuron index {i} exceeds the cap of {MAX_NEURONS}")
        mask |= 1 << (i - 1)
    return mask


def mask_members(mask: int) -> tuple[int, ...]:
    """Sorted 1-based neuron indices of a codeword bitmask."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _word_key(mask: int) -> tuple[int, tuple[int, ...]]:
    # Deterministic word order: cardinality, then lexicographic on members.
    return (mask.bit_count(), mask_members(mask))


class Code:
    """A finite set of codewords over the neuron set {1, ..., n}.

    Immutable by convention; equality and hashing compare both n and the word
    set, so the same words on different ambient neuron counts are different
    codes (they differ by trivial neurons).
    """

    __slots__ = ("n", "_mask_set", "_mask_list")

    def __init__(self, n: int, words: Iterable[Iterable[int]] = ()):
        if not isinstance(n, int) or isinstance(n, bool):
            raise ValueError(f"neuron count must be an int, got {n!r}")
        if n < 0 or n > MAX_NEURONS:
            raise ValueError(f"neuron count must be in 0..{MAX_NEURONS}, got {n}")
        self.n = n
        masks = set()
        for w in words:
            masks.add(w if isinstance(w, int) else word_mask(w, n))
        if masks and max(masks) >= 1 << n:
            bad = max(masks)
            raise ValueError(
                f"codeword {set(mask_members(bad))} does not fit in n={n} neurons"
            )
        self._mask_set = frozenset(masks)
        self._mask_list = tuple(sorted(masks, key=_word_key))

    @classmethod
    def from_words(cls, words: Iterable[Iterable[int]]) -> "Code":
        """Build a code inferring n as the largest neuron mentioned."""
        ws = [frozenset(w) for w in words]
        n = max((max(w) for w in ws if w), default=0)
        return cls(n, ws)

    @property
    def masks(self) -> tuple[int, ...]:
        """Codeword bitmasks in the deterministic (cardinality, lex) order."""
        return self._mask_list

    @property
    def mask_set(self) -> frozenset[int]:
        return self._mask_set

    @property
    def words(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(mask_members(m)) for m in self._mask_list)

    def contains(self, word: Iterable[int]) -> bool:
        """Set membership; malformed or out-of-range words are simply absent."""
        try:
            mask = word if isinstance(word, int) else word_mask(word)
        except ValueError:
            return False
        return mask in self._mask_set

    def __contains__(self, word) -> bool:
        return self.contains(word)

    def __iter__(self):
        return iter(self.words)

    def __len__(self) -> int:
        return len(self._mask_set)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Code):
            return NotImplemented
        return self.n == other.n and self._mask_set == other._mask_set

    def __hash__(self) -> int:
        return hash((self.n, self._mask_set))

    def __repr__(self) -> str:
        return f"Code({self.n}, {format_code(self)!r})"


def contains(code: Code, word: Iterable[int]) -> bool:
    return code.contains(word)


def _parse_compact(body: str, declared: int | None) -> Code:
    inner = body.strip()
    if inner.startswith("{"):
        if not inner.endswith("}"):
            raise ValueError(f"unbalanced braces in code literal {body!r}")
        inner = inner[1:-1].strip()
    elif inner.endswith("}"):
        raise ValueError(f"unbalanced braces in code literal {body!r}")
    elif not inner:
        raise ValueError("empty code literal; the zero-word code is spelled []")
    if not inner:
        # "{}" is the lone empty codeword.
        words: list[frozenset[int]] = [frozenset()]
    else:
        words = []
        for tok in inner.split(","):
            tok = tok.strip()
            if not tok:
                raise ValueError(f"empty codeword token in {body!r}")
            if tok == "0":
                words.append(frozenset())
                continue
            if not tok.isdigit():
                raise ValueError(f"malformed codeword token {tok!r}")
            if "0" in tok:
                raise ValueError(
                    f"token {tok!r}: 0 spells the empty codeword and cannot "
                    "combine with other digits (compact notation covers neurons 1..9)"
                )
            words.append(frozenset(int(ch) for ch in tok))
    n = declared if declared is not None else max((max(w) for w in words if w), default=0)
    return Code(n, words)


def _words_from_json_lists(data, declared: int | None) -> Code:
    if not isinstance(data, list) or not all(isinstance(w, list) for w in data):
        raise ValueError("JSON code must be a list of lists of neuron indices")
    words = [frozenset(w) for w in data]
    for w, raw in zip(words, data):
        for i in raw:
            if not isinstance(i, int) or isinstance(i, bool) or i < 1:
                raise ValueError(f"neuron index must be a positive int, got {i!r}")
    n = declared if declared is not None else max((max(w) for w in words if w), default=0)
    return Code(n, words)


def parse_code(text: str) -> Code:
    """Parse a code literal.

    Grammar: an optional "n=K" prefix, then either compact notation
    ("{12,23,1,3,0}", braces optional, digits 1..9, "0" or "{}" for the empty
    codeword), a JSON list of lists ("[[1,2],[10]]", "[]" is the zero-word
    code), or a JSON object {"n": K, "words": [...]} as emitted by the CLI.
    """
    if not isinstance(text, str):
        raise ValueError(f"expected a string, got {type(text).__name__}")
    declared: int | None = None
    m = _N_PREFIX.match(text)
    if m:
        declared = int(m.group(1))
        text = text[m.end():]
    body = text.strip()
    if not body:
        raise ValueError("empty code literal")
    if body.startswith("["):
        try:
            data = json.loads(body)
        except json.JSONDecodeError as exc:
            raise ValueError(f"bad JSON code literal: {exc}") from exc
        return _words_from_json_lists(data, declared)
    if _JSON_OBJECT.match(body):
        try:
            obj = json.loads(body)
        except json.JSONDecodeError as exc:
            raise ValueError(f"bad JSON code literal: {exc}") from exc
        if not isinstance(obj, dict) or set(obj) != {"n", "words"}:
            raise ValueError('JSON object code must have exactly the keys "n" and "words"')
        n_obj = obj["n"]
        if not isinstance(n_obj, int) or isinstance(n_obj, bool):
            raise ValueError(f'"n" must be an int, got {n_obj!r}')
        if declared is not None and declared != n_obj:
            raise ValueError(f"prefix n={declared} disagrees with object n={n_obj}")
        return _words_from_json_lists(obj["words"], n_obj)
    return _parse_compact(body, declared)


def _display_masks(code: Code) -> list[int]:
    # Display order: largest codewords first, lexicographic within a size.
    return sorted(code.masks, key=lambda m: (-m.bit_count(), mask_members(m)))


def _needs_prefix(code: Code) -> bool:
    inferred = max((max(mask_members(m), default=0) for m in code.masks), default=0)
    return inferred != code.n


def format_code(code: Code, style: str = "compact") -> str:
    """Render a code so that parse_code(format_code(c)) == c.

    An "n=K " prefix appears exactly when n is not inferable from the words.
    The zero-word code only has a JSON spelling, whatever style is asked for.
    """
    if style not in ("compact", "json"):
        raise ValueError(f"unknown style {style!r}")
    prefix = f"n={code.n} " if _needs_prefix(code) else ""
    if not code.masks:
        return prefix + "[]"
    if style == "json":
        body = json.dumps([list(mask_members(m)) for m in _display_masks(code)],
                          separators=(",", ":"))
        return prefix + body
    if code.n > 9:
        raise ValueError(f"compact style requires n <= 9, got n={code.n}")
    toks = []
    for m in _display_masks(code):
        toks.append("".join(str(i) for i in mask_members(m)) if m else "0")
    return prefix + "{" + ",".join(toks) + "}"


def code_to_obj(code: Code) -> dict:
    """JSON-ready object form; parse_code accepts its json.dumps output."""
    return {"n": code.n, "words": [list(mask_members(m)) for m in _display_masks(code)]}
