"""Reader and writer for the presentation / knot file format.

::

    name: trefoil ;          # optional; quote it as "..." if it holds ';' or '#'
    genus: classical ;       # optional, an integer or "classical"; default 0
    gens: x y ;
    weights: 1 1 ;           # optional, default all 1
    rels: x y x y^-1 x^-1 y^-1 , x^2 y x^-2 y^-1 ;

A word is a whitespace-separated list of syllables ``name`` or ``name^k``;
``1`` denotes the empty word.  ``#`` starts a comment.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fox import Presentation, Word, format_presentation
from .knots import SurfaceKnot


class DSLParseError(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.msg = msg
        self.line = line
        self.col = col


_KEYS = ("name", "genus", "gens", "weights", "rels")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def where(self, pos: int | None = None) -> tuple[int, int]:
        pos = self.pos if pos is None else pos
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def error(self, msg: str, pos: int | None = None) -> DSLParseError:
        return DSLParseError(msg, *self.where(pos))

    def skip(self) -> None:
        t = self.text
        while self.pos < len(t):
            c = t[self.pos]
            if c.isspace():
                self.pos += 1
            elif c == "#":
                nl = t.find("\n", self.pos)
                self.pos = len(t) if nl < 0 else nl
            else:
                break

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def at_end(self) -> bool:
        return self.peek() == ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise self.error(f"expected '{ch}', found '{found}'")
        self.pos += 1

    def ident(self) -> str:
        self.skip()
        start = self.pos
        t = self.text
        if start < len(t) and (t[start].isalpha() or t[start] == "_"):
            self.pos += 1
            while self.pos < len(t) and (t[self.pos].isalnum() or t[self.pos] in "_'"):
                self.pos += 1
            return t[start:self.pos]
        raise self.error("expected an identifier")

    def integer(self) -> int:
        self.skip()
        start = self.pos
        t = self.text
        if self.pos < len(t) and t[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(t) and t[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            self.pos = start
            raise self.error("expected an integer")
        return int(t[start:self.pos])

    def quoted(self) -> str:
        # "..." with backslash escapes for '"' and '\\'
        start = self.pos
        t = self.text
        out = []
        self.pos += 1
        while self.pos < len(t) and t[self.pos] != '"':
            if t[self.pos] == "\\" and self.pos + 1 < len(t):
                self.pos += 1
            out.append(t[self.pos])
            self.pos += 1
        if self.pos >= len(t):
            raise self.error("unterminated string", start)
        self.pos += 1
        return "".join(out)

    def raw_until_semicolon(self) -> str:
        self.skip()
        end = self.text.find(";", self.pos)
        if end < 0:
            raise self.error("expected ';'")
        value = self.text[self.pos:end].strip()
        self.pos = end
        return value


@dataclass
class KnotFile:
    presentation: Presentation
    name: str | None = None
    genus: int | None = 0


def _end_statement(sc: _Scanner) -> None:
    # the final ';' may be omitted
    if sc.at_end():
        return
    sc.expect(";")


def _parse_word(sc: _Scanner, index: dict[str, int]) -> Word:
    syllables = []
    while True:
        c = sc.peek()
        if c in (",", ";", ""):
            break
        if c == "1":
            sc.pos += 1
            continue
        pos = sc.pos
        name = sc.ident()
        if name not in index:
            raise sc.error(f"unknown generator '{name}'", pos)
        e = 1
        if sc.peek() == "^":
            sc.pos += 1
            e = sc.integer()
        syllables.append((index[name], e))
    return Word(syllables)


def parse_knot(text: str) -> KnotFile:
    sc = _Scanner(text)
    seen: dict[str, object] = {}
    rels_pos = None
    while not sc.at_end():
        pos = sc.pos
        key = sc.ident()
        if key not in _KEYS:
            raise sc.error(f"unknown section '{key}'", pos)
        if key in seen:
            raise sc.error(f"duplicate section '{key}'", pos)
        sc.expect(":")
        if key == "name":
            seen[key] = sc.quoted() if sc.peek() == '"' else sc.raw_until_semicolon()
        elif key == "genus":
            if sc.peek().isalpha():
                word_pos = sc.pos
                if sc.ident() != "classical":
                    raise sc.error("genus must be an integer or 'classical'", word_pos)
                seen[key] = None
            else:
                g_pos = sc.pos
                g = sc.integer()
                if g < 0:
                    raise sc.error("genus must be nonnegative", g_pos)
                seen[key] = g
        elif key == "gens":
            names = []
            while sc.peek() not in (";", ""):
                names.append(sc.ident())
            if len(set(names)) != len(names):
                raise sc.error("duplicate generator name", pos)
            seen[key] = names
        elif key == "weights":
            ws = []
            while sc.peek() not in (";", ""):
                ws.append(sc.integer())
            seen[key] = ws
        elif key == "rels":
            if "gens" not in seen:
                raise sc.error("'rels' must come after 'gens'", pos)
            rels_pos = sc.where(pos)
            index = {nm: i for i, nm in enumerate(seen["gens"])}
            words = []
            if sc.peek() not in (";", ""):
                words.append(_parse_word(sc, index))
                while sc.peek() == ",":
                    sc.pos += 1
                    words.append(_parse_word(sc, index))
            seen[key] = words
        _end_statement(sc)
    if "gens" not in seen:
        raise DSLParseError("missing 'gens' section", *sc.where())
    names = seen["gens"]
    weights = seen.get("weights", [1] * len(names))
    if len(weights) != len(names):
        raise DSLParseError("need one weight per generator", *sc.where())
    try:
        pres = Presentation(tuple(names), tuple(seen.get("rels", [])), tuple(weights))
    except ValueError as exc:
        line, col = rels_pos or sc.where()
        raise DSLParseError(str(exc), line, col) from None
    return KnotFile(pres, seen.get("name"), seen.get("genus", 0))


def parse_presentation(text: str) -> Presentation:
    return parse_knot(text).presentation


def load_knot(text: str, default_name: str = "K") -> SurfaceKnot:
    kf = parse_knot(text)
    return SurfaceKnot(kf.name or default_name, kf.genus, kf.presentation, ("File",))


def _format_name(name: str) -> str:
    if name and name == name.strip() and not any(c in name for c in ';#"\n'):
        return name
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def format_knot(K: SurfaceKnot) -> str:
    genus = "classical" if K.genus is None else str(K.genus)
    return f"name: {_format_name(K.name)} ;\ngenus: {genus} ;\n" + format_presentation(K.presentation)
