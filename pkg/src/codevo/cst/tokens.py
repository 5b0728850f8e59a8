"""Tolerant tokenizers for the supported grammars.

Both lexers accept arbitrary text and never raise: malformed input
degrades to best-effort tokens plus an error flag, so parsing can keep
going and mark the damaged region with an ERROR node.
"""

from __future__ import annotations

NAME = "name"
NUM = "number"
STR = "string"
OP = "op"
COMMENT = "comment"
NL = "newline"
REGEX = "regex"


class Token:
    __slots__ = ("kind", "text", "start", "end", "line")

    def __init__(self, kind: str, text: str, start: int, end: int, line: int):
        self.kind = kind
        self.text = text
        self.start = start
        self.end = end
        self.line = line

    def __repr__(self):
        return f"Token({self.kind}, {self.text!r}, {self.start}:{self.end})"


def _is_name_start(ch: str) -> bool:
    return ch.isalpha() or ch == "_" or ord(ch) > 127


def _is_name_part(ch: str) -> bool:
    return ch.isalnum() or ch == "_" or ord(ch) > 127


_SPACE = " \t\r\f\v"


def _scan_number(src: str, i: int) -> int:
    n = len(src)
    is_hex = src.startswith(("0x", "0X"), i)
    j = i + 1
    while j < n:
        ch = src[j]
        if ch.isalnum() or ch in "._":
            if not is_hex and ch in "eE" and j + 1 < n and src[j + 1] in "+-":
                j += 2
                continue
            j += 1
        else:
            break
    return j


# --- Python ---------------------------------------------------------------

_PY_OPS = [
    "**=", "//=", ">>=", "<<=", "...", "->", ":=",
    "==", "!=", "<=", ">=", "**", "//", "<<", ">>",
    "+=", "-=", "*=", "/=", "%=", "@=", "&=", "|=", "^=",
]
_PY_SINGLE = set("+-*/%@&|^~<>()[]{},:.;=")
_STR_PREFIXES = {"r", "b", "u", "f", "rb", "br", "fr", "rf"}


def lex_python(src: str) -> tuple[list[Token], bool]:
    """Tokens including NL (logical line ends) and COMMENT."""
    tokens: list[Token] = []
    had_error = False
    i = 0
    n = len(src)
    line = 1
    depth = 0  # () [] {} nesting; newlines inside are not logical ends

    def emit(kind, start, end):
        tokens.append(Token(kind, src[start:end], start, end, line))

    while i < n:
        ch = src[i]
        if ch in _SPACE:
            i += 1
            continue
        if ch == "\\" and i + 1 < n and src[i + 1] == "\n":
            i += 2
            line += 1
            continue
        if ch == "\n":
            if depth == 0 and tokens and tokens[-1].kind != NL:
                emit(NL, i, i + 1)
            i += 1
            line += 1
            continue
        if ch == "#":
            j = src.find("\n", i)
            j = n if j == -1 else j
            emit(COMMENT, i, j)
            i = j
            continue
        if _is_name_start(ch):
            j = i + 1
            while j < n and _is_name_part(src[j]):
                j += 1
            word = src[i:j]
            if word.lower() in _STR_PREFIXES and j < n and src[j] in "\"'":
                i, line, ok = _scan_py_string(src, i, j, line, tokens)
                had_error = had_error or not ok
                continue
            emit(NAME, i, j)
            i = j
            continue
        if ch.isdigit() or (ch == "." and i + 1 < n and src[i + 1].isdigit()):
            j = _scan_number(src, i)
            emit(NUM, i, j)
            i = j
            continue
        if ch in "\"'":
            i, line, ok = _scan_py_string(src, i, i, line, tokens)
            had_error = had_error or not ok
            continue
        matched = False
        for op in _PY_OPS:
            if src.startswith(op, i):
                emit(OP, i, i + len(op))
                i += len(op)
                matched = True
                break
        if matched:
            continue
        if ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth = max(0, depth - 1)
        emit(OP, i, i + 1)
        if ch not in _PY_SINGLE:
            had_error = True
        i += 1

    if tokens and tokens[-1].kind != NL:
        tokens.append(Token(NL, "", n, n, line))
    return tokens, had_error


def _scan_py_string(src, start, quote_pos, line, tokens) -> tuple[int, int, bool]:
    """Scan a (possibly prefixed, possibly triple) string literal."""
    n = len(src)
    quote = src[quote_pos]
    if src.startswith(quote * 3, quote_pos):
        closer = quote * 3
        i = quote_pos + 3
    else:
        closer = quote
        i = quote_pos + 1
    start_line = line
    ok = False
    # Backslash prevents the next char from closing the literal even in
    # raw strings (the backslash just stays in the value there).
    while i < n:
        ch = src[i]
        if ch == "\\" and i + 1 < n:
            if src[i + 1] == "\n":
                line += 1
            i += 2
            continue
        if ch == "\n":
            if len(closer) == 1:
                break  # unterminated single-line string
            line += 1
            i += 1
            continue
        if src.startswith(closer, i):
            i += len(closer)
            ok = True
            break
        i += 1
    tokens.append(Token(STR, src[start:i], start, i, start_line))
    return i, line, ok


# --- C-family (JavaScript / TypeScript / Java) ------------------------------

_JS_OPS = [
    ">>>=", "===", "!==", "**=", "<<=", ">>=", ">>>", "&&=", "||=", "??=", "...",
    "=>", "==", "!=", "<=", ">=", "&&", "||", "??", "?.", "++", "--",
    "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<", ">>", "**",
]
_JAVA_OPS = [
    ">>>=", "<<=", ">>=", ">>>", "->", "::", "...",
    "==", "!=", "<=", ">=", "&&", "||", "++", "--",
    "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<", ">>",
]
_C_SINGLE = set("+-*/%&|^~<>!?()[]{},:.;=@#$")

# A '/' after one of these keywords starts a regex literal, not division.
_REGEX_KEYWORDS = {
    "return", "typeof", "instanceof", "in", "of", "new", "delete", "void",
    "throw", "case", "do", "else", "yield", "await",
}


def lex_clike(src: str, language: str) -> tuple[list[Token], bool]:
    """Tokens for JS/TS/Java. No NL tokens; tokens carry their line."""
    js = language in ("javascript", "typescript")
    ops = _JS_OPS if js else _JAVA_OPS
    tokens: list[Token] = []
    had_error = False
    i = 0
    n = len(src)
    line = 1
    brace_depth = 0
    template_stack: list[int] = []  # brace depth owned by each open interpolation

    def emit(kind, start, end):
        tokens.append(Token(kind, src[start:end], start, end, line))

    def prev_significant() -> Token | None:
        for tok in reversed(tokens):
            if tok.kind != COMMENT:
                return tok
        return None

    def enter_template(pos: int) -> int:
        """Scan a literal chunk; returns resume offset."""
        nonlocal line, had_error, brace_depth
        j, line2, err, opened_interp = _scan_template_chunk(src, pos, line, tokens)
        line = line2
        had_error = had_error or err
        if opened_interp:
            brace_depth += 1
            template_stack.append(brace_depth)
        return j

    while i < n:
        ch = src[i]
        if ch == "\n":
            line += 1
            i += 1
            continue
        if ch in _SPACE:
            i += 1
            continue
        if ch == "/" and i + 1 < n and src[i + 1] == "/":
            j = src.find("\n", i)
            j = n if j == -1 else j
            emit(COMMENT, i, j)
            i = j
            continue
        if ch == "/" and i + 1 < n and src[i + 1] == "*":
            j = src.find("*/", i + 2)
            if j == -1:
                j = n
                had_error = True
            else:
                j += 2
            emit(COMMENT, i, j)
            line += src.count("\n", i, j)
            i = j
            continue
        if js and ch == "/" and not src.startswith("/=", i):
            end = _try_scan_regex(src, i, prev_significant())
            if end is not None:
                emit(REGEX, i, end)
                i = end
                continue
        if js and ch == "`":
            i = enter_template(i + 1)
            continue
        if ch in "\"'":
            j = i + 1
            ok = False
            while j < n:
                c = src[j]
                if c == "\\" and j + 1 < n:
                    j += 2
                    continue
                if c == "\n":
                    break
                if c == ch:
                    j += 1
                    ok = True
                    break
                j += 1
            if not ok:
                had_error = True
            emit(STR, i, j)
            i = j
            continue
        if _is_name_start(ch) or (js and ch == "$"):
            j = i + 1
            while j < n and (_is_name_part(src[j]) or (js and src[j] == "$")):
                j += 1
            emit(NAME, i, j)
            i = j
            continue
        if ch.isdigit() or (ch == "." and i + 1 < n and src[i + 1].isdigit()):
            j = _scan_number(src, i)
            emit(NUM, i, j)
            i = j
            continue
        if ch == "{":
            brace_depth += 1
        elif ch == "}":
            if template_stack and brace_depth == template_stack[-1]:
                # Interpolation closes here; resume the literal chunk.
                template_stack.pop()
                brace_depth -= 1
                emit(OP, i, i + 1)
                i = enter_template(i + 1)
                continue
            brace_depth = max(0, brace_depth - 1)
        matched = False
        for op in ops:
            if src.startswith(op, i):
                emit(OP, i, i + len(op))
                i += len(op)
                matched = True
                break
        if matched:
            continue
        emit(OP, i, i + 1)
        if ch not in _C_SINGLE:
            had_error = True
        i += 1

    return tokens, had_error


def _scan_template_chunk(src, i, line, tokens):
    """Scan template-literal text until the closing backtick or a `${`.

    Emits the chunk as a STR token (and the `${` opener when present).
    Returns (resume_offset, line, had_error, opened_interpolation).
    """
    n = len(src)
    chunk_start = i - 1 if i > 0 and src[i - 1] == "`" else i
    start_line = line
    while i < n:
        ch = src[i]
        if ch == "\\" and i + 1 < n:
            if src[i + 1] == "\n":
                line += 1
            i += 2
            continue
        if ch == "\n":
            line += 1
            i += 1
            continue
        if ch == "`":
            tokens.append(Token(STR, src[chunk_start : i + 1], chunk_start, i + 1, start_line))
            return i + 1, line, False, False
        if ch == "$" and i + 1 < n and src[i + 1] == "{":
            if i > chunk_start:
                tokens.append(Token(STR, src[chunk_start:i], chunk_start, i, start_line))
            tokens.append(Token(OP, "${", i, i + 2, line))
            return i + 2, line, False, True
        i += 1
    tokens.append(Token(STR, src[chunk_start:n], chunk_start, n, start_line))
    return n, line, True, False


def _try_scan_regex(src, i, prev: Token | None) -> int | None:
    """End offset of a regex literal starting at '/', or None."""
    if prev is not None:
        if prev.kind in (NUM, STR, REGEX):
            return None
        if prev.kind == NAME and prev.text not in _REGEX_KEYWORDS:
            return None
        if prev.kind == OP and prev.text in (")", "]", "}", "++", "--"):
            return None
    n = len(src)
    j = i + 1
    in_class = False
    first = True
    while j < n:
        ch = src[j]
        if ch == "\\" and j + 1 < n:
            j += 2
            first = False
            continue
        if ch == "\n":
            return None
        if in_class:
            if ch == "]":
                in_class = False
        elif ch == "[":
            in_class = True
        elif ch == "/":
            if first:
                return None
            j += 1
            while j < n and src[j].isalpha():
                j += 1
            return j
        first = False
        j += 1
    return None
