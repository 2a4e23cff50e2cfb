"""Text forms for words and linear combinations.

Word syntax: comma-separated letter indices with an optional repeat macro,
``"2,1,1"`` or ``"2,{1}^2"`` for z2z1z1; ``"()"`` is the empty word.

Combination syntax is what :func:`stuffle.algebra.to_text` prints, e.g.
``"2 z1z1 - z2"``; a bare integer term is a multiple of the empty word and
``"0"`` is the zero combination.
"""
from __future__ import annotations

import json
import re

from .algebra import LinComb, Word, as_lincomb, to_text


class ParseError(ValueError):
    def __init__(self, message: str, text: str, column: int):
        self.text = text
        self.column = column  # 1-based
        super().__init__(f"{message} at column {column}: {text!r}")


_ITEM = re.compile(r"\s*(?:\{\s*(\d+)\s*\}\s*\^\s*(\d+)|(\d+))\s*")


def parse_word(text: str) -> Word:
    if text.strip() == "()":
        return ()
    if not text.strip():
        raise ParseError("empty input (write () for the empty word)", text, 1)
    letters: list = []
    pos = 0
    while True:
        m = _ITEM.match(text, pos)
        if not m:
            raise ParseError("expected a letter index or {k}^n", text, pos + 1)
        if m.group(3) is not None:
            k, reps = int(m.group(3)), 1
            kpos = m.start(3)
        else:
            k, reps = int(m.group(1)), int(m.group(2))
            kpos = m.start(1)
        if k < 1:
            raise ParseError("letter indices must be >= 1", text, kpos + 1)
        letters.extend([k] * reps)
        pos = m.end()
        if pos == len(text):
            break
        if text[pos] != ",":
            raise ParseError("expected ','", text, pos + 1)
        pos += 1
    return tuple(letters)


def format_word(w: Word) -> str:
    return ",".join(map(str, w)) if w else "()"


_TERM = re.compile(r"\s*([+-])?\s*(\d+)?\s*\*?\s*((?:z\d+)+)?\s*")


def parse_lincomb(text: str) -> LinComb:
    if text.strip() == "0":
        return LinComb.zero()
    terms: dict = {}
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        sign, coeff, body = m.group(1), m.group(2), m.group(3)
        if m.end() == pos or (coeff is None and body is None):
            raise ParseError("expected a term", text, pos + 1)
        if sign is None and not first:
            raise ParseError("expected '+' or '-'", text, pos + 1)
        c = int(coeff) if coeff is not None else 1
        if sign == "-":
            c = -c
        w = tuple(int(x) for x in re.findall(r"z(\d+)", body or ""))
        if any(x < 1 for x in w):
            raise ParseError("letter indices must be >= 1", text, pos + 1)
        terms[w] = terms.get(w, 0) + c
        pos = m.end()
        first = False
    if first:
        raise ParseError("empty combination (write 0)", text, 1)
    return LinComb(terms)


def format_text(c, zeta: bool = False, star: bool = False) -> str:
    c = as_lincomb(c)
    if not zeta:
        return to_text(c)
    name = "zeta*" if star else "zeta"
    return _join(c, lambda w: f"{name}({','.join(map(str, w))})" if w else "1", " ")


def format_latex(c, zeta: bool = False, star: bool = False) -> str:
    c = as_lincomb(c)
    if zeta:
        name = r"\zeta^\star" if star else r"\zeta"

        def body(w):
            return f"{name}({','.join(map(str, w))})" if w else "1"
    else:

        def body(w):
            return "".join(f"z_{{{k}}}" for k in w) or "1"

    return _join(c, body, r"\,")


def _join(c: LinComb, body, sep: str) -> str:
    parts = []
    for w, k in c.items():
        b = body(w)
        if not w:
            term = str(abs(k))
        elif abs(k) == 1:
            term = b
        else:
            term = f"{abs(k)}{sep}{b}"
        if not parts:
            parts.append(term if k > 0 else f"-{term}")
        else:
            parts.append(("+ " if k > 0 else "- ") + term)
    return " ".join(parts) if parts else "0"


def to_json_obj(c, op: str) -> dict:
    c = as_lincomb(c)
    return {
        "terms": [{"word": list(w), "coeff": str(k)} for w, k in c.items()],
        "meta": {"weight": c.weight(), "op": op},
    }


def to_json(c, op: str) -> str:
    return json.dumps(to_json_obj(c, op), sort_keys=True)


def from_json(text_or_obj) -> LinComb:
    obj = json.loads(text_or_obj) if isinstance(text_or_obj, str) else text_or_obj
    return LinComb((tuple(t["word"]), int(t["coeff"])) for t in obj["terms"])
