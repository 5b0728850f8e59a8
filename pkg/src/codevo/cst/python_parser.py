"""Indentation-aware Python grammar producing concrete syntax trees.

The node-type vocabulary (function_definition, list_comprehension,
decorated_definition, ...) follows conventional CST naming so metric
definitions read naturally. Parsing is total: any line that cannot be
parsed becomes an ERROR node holding its tokens, and the rest of the
file is unaffected.
"""

from __future__ import annotations

from .node import CstNode, LineIndex
from .tokens import COMMENT, NAME, NL, NUM, OP, STR, Token, lex_python

GRAMMAR_VERSION = "1.0"

_KEYWORDS = {
    "and", "as", "assert", "async", "await", "break", "class", "continue",
    "def", "del", "elif", "else", "except", "finally", "for", "from",
    "global", "if", "import", "in", "is", "lambda", "nonlocal", "not",
    "or", "pass", "raise", "return", "try", "while", "with", "yield",
}
_CONST_TYPES = {"True": "true", "False": "false", "None": "none"}

_COMPARE_OPS = {"<", ">", "==", "!=", "<=", ">=", "<>"}
_AUG_OPS = {"+=", "-=", "*=", "/=", "//=", "%=", "@=", "**=", ">>=", "<<=", "&=", "|=", "^="}

# Binary precedence levels, loosest first.
_BIN_LEVELS = [
    ({"|"}, "binary_operator"),
    ({"^"}, "binary_operator"),
    ({"&"}, "binary_operator"),
    ({"<<", ">>"}, "binary_operator"),
    ({"+", "-"}, "binary_operator"),
    ({"*", "/", "//", "%", "@"}, "binary_operator"),
]


class _ParseError(Exception):
    pass


class _Line:
    __slots__ = ("indent", "tokens")

    def __init__(self, indent: int, tokens: list[Token]):
        self.indent = indent
        self.tokens = tokens


def _leaf(tok: Token) -> CstNode:
    if tok.kind == NAME:
        if tok.text in _CONST_TYPES:
            return CstNode(_CONST_TYPES[tok.text], tok.start, tok.end)
        if tok.text in _KEYWORDS:
            return CstNode(tok.text, tok.start, tok.end, is_named=False)
        return CstNode("identifier", tok.start, tok.end)
    if tok.kind == NUM:
        text = tok.text
        lowered = text.lower()
        is_float = not lowered.startswith("0x") and ("." in text or "e" in lowered)
        return CstNode("float" if is_float else "integer", tok.start, tok.end)
    if tok.kind == STR:
        return CstNode("string", tok.start, tok.end)
    if tok.text == "...":
        return CstNode("ellipsis", tok.start, tok.end)
    return CstNode(tok.text or tok.kind, tok.start, tok.end, is_named=False)


def _error_node(tokens: list[Token]) -> CstNode:
    node = CstNode("ERROR", tokens[0].start, tokens[-1].end)
    node.adopt_all(_leaf(t) for t in tokens)
    return node


def _indent_of(src: str, tok: Token) -> int:
    # Column of the first token, with tabs advancing to multiples of 8.
    start = src.rfind("\n", 0, tok.start) + 1
    col = 0
    for ch in src[start : tok.start]:
        col = (col // 8 + 1) * 8 if ch == "\t" else col + 1
    return col


def _logical_lines(src: str, tokens: list[Token]) -> tuple[list[_Line], list[Token]]:
    lines: list[_Line] = []
    comments: list[Token] = []
    current: list[Token] = []
    for tok in tokens:
        if tok.kind == COMMENT:
            comments.append(tok)
        elif tok.kind == NL:
            if current:
                lines.append(_Line(_indent_of(src, current[0]), current))
                current = []
        else:
            current.append(tok)
    if current:
        lines.append(_Line(_indent_of(src, current[0]), current))
    return lines, comments


class _ExprParser:
    """Pratt-style expression parser over one token slice."""

    def __init__(self, tokens: list[Token]):
        self.toks = tokens
        self.pos = 0
        self.depth = 0

    # -- cursor helpers -----------------------------------------------------

    def peek(self, offset: int = 0) -> Token | None:
        i = self.pos + offset
        return self.toks[i] if i < len(self.toks) else None

    def at(self, text: str, offset: int = 0) -> bool:
        tok = self.peek(offset)
        return tok is not None and tok.text == text

    def at_name(self, text: str, offset: int = 0) -> bool:
        tok = self.peek(offset)
        return tok is not None and tok.kind == NAME and tok.text == text

    def take(self) -> CstNode:
        tok = self.toks[self.pos]
        self.pos += 1
        return _leaf(tok)

    def expect(self, text: str) -> CstNode:
        if not self.at(text):
            raise _ParseError(f"expected {text!r}")
        return self.take()

    def done(self) -> bool:
        return self.pos >= len(self.toks)

    def _guard(self):
        self.depth += 1
        if self.depth > 200:
            raise _ParseError("expression nesting too deep")

    # -- entry points --------------------------------------------------------

    def parse_exprlist(self, no_in: bool = False) -> CstNode:
        """Expression or bare comma tuple (`1, 2` and `x,`)."""
        parts = [self.parse_expr(no_in=no_in)]
        is_tuple = False
        while self.at(","):
            is_tuple = True
            parts.append(self.take())
            if self.done() or self.at("=") or self.at(")") or self.at("]") or self.at("}") or self.at(":"):
                break
            parts.append(self.parse_expr(no_in=no_in))
        if not is_tuple:
            return parts[0]
        return CstNode.wrap("tuple", parts)

    def parse_expr(self, no_in: bool = False) -> CstNode:
        self._guard()
        try:
            if self.at_name("lambda"):
                return self._lambda()
            if self.at_name("yield"):
                return self._yield()
            node = self._ternary(no_in)
            if self.at(":="):
                op = self.take()
                value = self.parse_expr(no_in=no_in)
                return CstNode.wrap("named_expression", [node, op, value])
            return node
        finally:
            self.depth -= 1

    # -- operator levels -----------------------------------------------------

    def _ternary(self, no_in: bool) -> CstNode:
        node = self._or(no_in)
        if self.at_name("if"):
            parts = [node, self.take(), self._or(no_in)]
            if self.at_name("else"):
                parts.append(self.take())
                parts.append(self.parse_expr(no_in=no_in))
            return CstNode.wrap("conditional_expression", parts)
        return node

    def _or(self, no_in: bool) -> CstNode:
        node = self._and(no_in)
        while self.at_name("or"):
            node = CstNode.wrap("boolean_operator", [node, self.take(), self._and(no_in)])
        return node

    def _and(self, no_in: bool) -> CstNode:
        node = self._not(no_in)
        while self.at_name("and"):
            node = CstNode.wrap("boolean_operator", [node, self.take(), self._not(no_in)])
        return node

    def _not(self, no_in: bool) -> CstNode:
        if self.at_name("not"):
            op = self.take()
            return CstNode.wrap("not_operator", [op, self._not(no_in)])
        return self._comparison(no_in)

    def _at_compare_op(self, no_in: bool) -> bool:
        tok = self.peek()
        if tok is None:
            return False
        if tok.text in _COMPARE_OPS:
            return True
        if tok.kind == NAME and tok.text == "in" and not no_in:
            return True
        if tok.kind == NAME and tok.text == "is":
            return True
        if tok.kind == NAME and tok.text == "not" and self.at_name("in", 1) and not no_in:
            return True
        return False

    def _comparison(self, no_in: bool) -> CstNode:
        node = self._binary(0, no_in)
        if not self._at_compare_op(no_in):
            return node
        parts = [node]
        while self._at_compare_op(no_in):
            parts.append(self.take())  # in / is / not / comparison op
            if parts[-1].type_name in ("is", "not") and (self.at_name("not") or self.at_name("in")):
                parts.append(self.take())  # 'is not' / 'not in'
            parts.append(self._binary(0, no_in))
        return CstNode.wrap("comparison_operator", parts)

    def _binary(self, level: int, no_in: bool) -> CstNode:
        if level >= len(_BIN_LEVELS):
            return self._unary(no_in)
        ops, type_name = _BIN_LEVELS[level]
        node = self._binary(level + 1, no_in)
        while not self.done() and self.peek().kind == OP and self.peek().text in ops:
            node = CstNode.wrap(type_name, [node, self.take(), self._binary(level + 1, no_in)])
        return node

    def _unary(self, no_in: bool) -> CstNode:
        if self.at("+") or self.at("-") or self.at("~"):
            op = self.take()
            return CstNode.wrap("unary_operator", [op, self._unary(no_in)])
        if self.at_name("await"):
            op = self.take()
            return CstNode.wrap("await", [op, self._unary(no_in)])
        return self._power(no_in)

    def _power(self, no_in: bool) -> CstNode:
        node = self._postfix(no_in)
        if self.at("**"):
            op = self.take()
            return CstNode.wrap("binary_operator", [node, op, self._unary(no_in)])
        return node

    def _postfix(self, no_in: bool) -> CstNode:
        node = self._atom(no_in)
        while not self.done():
            if self.at("("):
                args = self._argument_list()
                node = CstNode.wrap("call", [node, args])
            elif self.at("["):
                sub = self._subscript_suffix(no_in)
                node = CstNode.wrap("subscript", [node] + sub)
            elif self.at(".") and self.peek(1) is not None and self.peek(1).kind == NAME:
                dot = self.take()
                attr = self.take()
                node = CstNode.wrap("attribute", [node, dot, attr])
            else:
                break
        return node

    # -- compound atoms -------------------------------------------------------

    def _atom(self, no_in: bool) -> CstNode:
        self._guard()
        try:
            tok = self.peek()
            if tok is None:
                raise _ParseError("expression expected")
            if tok.kind == STR:
                strings = [self.take()]
                while not self.done() and self.peek().kind == STR:
                    strings.append(self.take())
                if len(strings) > 1:
                    return CstNode.wrap("concatenated_string", strings)
                return strings[0]
            if tok.kind == NUM:
                return self.take()
            if tok.kind == NAME:
                if tok.text == "lambda":
                    return self._lambda()
                if tok.text == "yield":
                    return self._yield()
                if tok.text == "await":
                    return self._unary(no_in)
                if tok.text == "not":
                    return self._not(no_in)
                if tok.text in _KEYWORDS and tok.text not in ("match", "case", "type"):
                    raise _ParseError(f"unexpected keyword {tok.text!r}")
                return self.take()
            if tok.text == "...":
                return self.take()
            if tok.text in ("*", "**"):
                op = self.take()
                kind = "list_splat" if op.type_name == "*" else "dictionary_splat"
                return CstNode.wrap(kind, [op, self.parse_expr(no_in=no_in)])
            if tok.text == "(":
                return self._paren_group()
            if tok.text == "[":
                return self._bracket_group()
            if tok.text == "{":
                return self._brace_group()
            if tok.text in ("+", "-", "~"):
                return self._unary(no_in)
            raise _ParseError(f"unexpected token {tok.text!r}")
        finally:
            self.depth -= 1

    def _comprehension_clauses(self) -> list[CstNode]:
        clauses = []
        while self.at_name("for") or self.at_name("if") or (self.at_name("async") and self.at_name("for", 1)):
            if self.at_name("if"):
                kw = self.take()
                # Conditions and iterables are or-tests: a trailing 'if'
                # always starts the next comprehension clause.
                cond = self._or(False)
                clauses.append(CstNode.wrap("if_clause", [kw, cond]))
                continue
            parts = []
            if self.at_name("async"):
                parts.append(self.take())
            parts.append(self.expect("for"))
            parts.append(self.parse_exprlist(no_in=True))
            parts.append(self.expect("in"))
            parts.append(self._or(False))
            clauses.append(CstNode.wrap("for_in_clause", parts))
        return clauses

    def _paren_group(self) -> CstNode:
        opener = self.expect("(")
        if self.at(")"):
            return CstNode.wrap("tuple", [opener, self.take()])
        if self.at_name("yield"):
            inner = self._yield()
            closer = self.expect(")")
            return CstNode.wrap("parenthesized_expression", [opener, inner, closer])
        first = self.parse_expr()
        if self.at_name("for") or (self.at_name("async") and self.at_name("for", 1)):
            parts = [opener, first] + self._comprehension_clauses() + [self.expect(")")]
            return CstNode.wrap("generator_expression", parts)
        if self.at(","):
            parts = [opener, first]
            while self.at(","):
                parts.append(self.take())
                if self.at(")"):
                    break
                parts.append(self.parse_expr())
            parts.append(self.expect(")"))
            return CstNode.wrap("tuple", parts)
        closer = self.expect(")")
        return CstNode.wrap("parenthesized_expression", [opener, first, closer])

    def _bracket_group(self) -> CstNode:
        opener = self.expect("[")
        if self.at("]"):
            return CstNode.wrap("list", [opener, self.take()])
        first = self.parse_expr()
        if self.at_name("for") or (self.at_name("async") and self.at_name("for", 1)):
            parts = [opener, first] + self._comprehension_clauses() + [self.expect("]")]
            return CstNode.wrap("list_comprehension", parts)
        parts = [opener, first]
        while self.at(","):
            parts.append(self.take())
            if self.at("]"):
                break
            parts.append(self.parse_expr())
        parts.append(self.expect("]"))
        return CstNode.wrap("list", parts)

    def _brace_group(self) -> CstNode:
        opener = self.expect("{")
        if self.at("}"):
            return CstNode.wrap("dictionary", [opener, self.take()])
        if self.at("**"):
            parts = [opener, self._atom(False)]
            while self.at(","):
                parts.append(self.take())
                if self.at("}"):
                    break
                parts.append(self._dict_entry())
            parts.append(self.expect("}"))
            return CstNode.wrap("dictionary", parts)
        first = self.parse_expr()
        if self.at(":"):
            pair = self._pair_from(first)
            if self.at_name("for") or (self.at_name("async") and self.at_name("for", 1)):
                parts = [opener, pair] + self._comprehension_clauses() + [self.expect("}")]
                return CstNode.wrap("dictionary_comprehension", parts)
            parts = [opener, pair]
            while self.at(","):
                parts.append(self.take())
                if self.at("}"):
                    break
                parts.append(self._dict_entry())
            parts.append(self.expect("}"))
            return CstNode.wrap("dictionary", parts)
        if self.at_name("for") or (self.at_name("async") and self.at_name("for", 1)):
            parts = [opener, first] + self._comprehension_clauses() + [self.expect("}")]
            return CstNode.wrap("set_comprehension", parts)
        parts = [opener, first]
        while self.at(","):
            parts.append(self.take())
            if self.at("}"):
                break
            parts.append(self.parse_expr())
        parts.append(self.expect("}"))
        return CstNode.wrap("set", parts)

    def _dict_entry(self) -> CstNode:
        if self.at("**"):
            return self._atom(False)
        key = self.parse_expr()
        if self.at(":"):
            return self._pair_from(key)
        return key

    def _pair_from(self, key: CstNode) -> CstNode:
        colon = self.expect(":")
        value = self.parse_expr()
        return CstNode.wrap("pair", [key, colon, value])

    def _argument_list(self) -> CstNode:
        parts = [self.expect("(")]
        while not self.at(")"):
            if self.done():
                raise _ParseError("unterminated argument list")
            if (
                self.peek().kind == NAME
                and self.peek().text not in _KEYWORDS
                and self.at("=", 1)
            ):
                name = self.take()
                eq = self.take()
                value = self.parse_expr()
                parts.append(CstNode.wrap("keyword_argument", [name, eq, value]))
            else:
                arg = self.parse_expr()
                if self.at_name("for") or (self.at_name("async") and self.at_name("for", 1)):
                    arg = CstNode.wrap("generator_expression", [arg] + self._comprehension_clauses())
                parts.append(arg)
            if self.at(","):
                parts.append(self.take())
            elif not self.at(")"):
                raise _ParseError("malformed argument list")
        parts.append(self.take())
        return CstNode.wrap("argument_list", parts)

    def _subscript_suffix(self, no_in: bool) -> list[CstNode]:
        parts = [self.expect("[")]
        while not self.at("]"):
            if self.done():
                raise _ParseError("unterminated subscript")
            parts.append(self._slice_item(no_in))
            if self.at(","):
                parts.append(self.take())
        parts.append(self.take())
        return parts

    def _slice_item(self, no_in: bool) -> CstNode:
        pieces: list[CstNode] = []
        if not self.at(":"):
            pieces.append(self.parse_expr(no_in=no_in))
        if not self.at(":"):
            return pieces[0]
        while self.at(":"):
            pieces.append(self.take())
            if not (self.at(":") or self.at("]") or self.at(",")):
                pieces.append(self.parse_expr(no_in=no_in))
        return CstNode.wrap("slice", pieces)

    def _lambda(self) -> CstNode:
        parts = [self.expect("lambda")]
        if not self.at(":"):
            params = self._lambda_parameters()
            parts.append(params)
        parts.append(self.expect(":"))
        parts.append(self.parse_expr())
        return CstNode.wrap("lambda", parts)

    def _lambda_parameters(self) -> CstNode:
        parts: list[CstNode] = []
        while not self.at(":") and not self.done():
            parts.append(self._parameter(stop={":", ","}))
            if self.at(","):
                parts.append(self.take())
        if not parts:
            raise _ParseError("empty lambda parameters")
        return CstNode.wrap("lambda_parameters", parts)

    def _parameter(self, stop: set[str]) -> CstNode:
        if self.at("*") or self.at("**"):
            star = self.take()
            kind = "list_splat_pattern" if star.type_name == "*" else "dictionary_splat_pattern"
            if not self.done() and self.peek().kind == NAME and self.peek().text not in _KEYWORDS:
                pattern = CstNode.wrap(kind, [star, self.take()])
                if self.at(":") and ":" not in stop:
                    colon = self.take()
                    ann = CstNode.wrap("type", [self.parse_expr()])
                    return CstNode.wrap("typed_parameter", [pattern, colon, ann])
                return pattern
            return star  # bare keyword separator
        if self.at("/"):
            return self.take()  # positional separator
        tok = self.peek()
        if tok is None or tok.kind != NAME or tok.text in _KEYWORDS:
            raise _ParseError("parameter name expected")
        name = self.take()
        annotation = None
        if self.at(":") and ":" not in stop:
            colon = self.take()
            ann = self.parse_expr()
            annotation = (colon, CstNode.wrap("type", [ann]))
        if self.at("="):
            eq = self.take()
            default = self.parse_expr()
            if annotation:
                return CstNode.wrap(
                    "typed_default_parameter", [name, annotation[0], annotation[1], eq, default]
                )
            return CstNode.wrap("default_parameter", [name, eq, default])
        if annotation:
            return CstNode.wrap("typed_parameter", [name, annotation[0], annotation[1]])
        return name

    def _yield(self) -> CstNode:
        parts = [self.expect("yield")]
        if self.at_name("from"):
            parts.append(self.take())
            parts.append(self.parse_expr())
        elif not self.done() and not self.at(")") and not self.at("]") and not self.at("}") and not self.at(","):
            parts.append(self.parse_exprlist())
        return CstNode.wrap("yield", parts)


class PythonParser:
    """Grammar object for the registry: parse(source) -> module CstNode."""

    language_id = "python"
    version = GRAMMAR_VERSION

    def parse(self, src: str) -> CstNode:
        tokens, _ = lex_python(src)
        lines, comments = _logical_lines(src, tokens)
        root = CstNode("module", 0, len(src))
        self._lines = lines
        nodes, _ = self._parse_region(0, -1)
        root.adopt_all(nodes)
        root.start, root.end = 0, len(src)
        index = LineIndex(src)
        for comment in comments:
            _insert_comment(root, CstNode("comment", comment.start, comment.end))
        root.bind(index)
        return root

    # -- statement layer -----------------------------------------------------

    def _parse_region(self, i: int, parent_indent: int) -> tuple[list[CstNode], int]:
        nodes: list[CstNode] = []
        lines = self._lines
        while i < len(lines) and lines[i].indent > parent_indent:
            stmts, i = self._parse_statement(i)
            nodes.extend(stmts)
        return nodes, i

    def _parse_statement(self, i: int) -> tuple[list[CstNode], int]:
        line = self._lines[i]
        toks = line.tokens
        head = toks[0]
        try:
            if head.kind == OP and head.text == "@":
                return self._decorated(i)
            if head.kind == NAME:
                word = head.text
                if word == "def" or (word == "async" and self._second_word(toks) == "def"):
                    return self._definition(i, "function_definition")
                if word == "class":
                    return self._definition(i, "class_definition")
                if word == "if":
                    return self._if_statement(i)
                if word == "for" or (word == "async" and self._second_word(toks) == "for"):
                    return self._loop(i, "for_statement", with_else=True)
                if word == "while":
                    return self._loop(i, "while_statement", with_else=True)
                if word == "try":
                    return self._try_statement(i)
                if word == "with" or (word == "async" and self._second_word(toks) == "with"):
                    return self._loop(i, "with_statement", with_else=False)
                if word == "match" and self._looks_like_match(i):
                    return self._match_statement(i)
            return self._simple_line(i)
        except _ParseError:
            return self._recover_line(toks), i + 1

    def _recover_line(self, toks: list[Token]) -> list[CstNode]:
        """Salvage a failed logical line.

        Unclosed brackets make the lexer fuse everything that follows
        into one logical line; re-splitting on physical lines keeps the
        damage local and recovers trailing well-formed statements.
        """
        groups: list[list[Token]] = []
        for tok in toks:
            if groups and tok.line == groups[-1][-1].line:
                groups[-1].append(tok)
            else:
                groups.append([tok])
        if len(groups) == 1:
            return [_error_node(toks)]
        return [self._parse_simple(g) for g in groups]

    @staticmethod
    def _second_word(toks: list[Token]) -> str | None:
        return toks[1].text if len(toks) > 1 and toks[1].kind == NAME else None

    def _looks_like_match(self, i: int) -> bool:
        line = self._lines[i]
        if line.tokens[-1].text != ":":
            return False
        nxt = i + 1
        if nxt >= len(self._lines) or self._lines[nxt].indent <= line.indent:
            return False
        return self._lines[nxt].tokens[0].text == "case"

    def _split_header(self, toks: list[Token]) -> tuple[list[Token], list[Token]]:
        """Header tokens up to the block colon, and inline-body tokens."""
        depth = 0
        lambda_depth = 0
        for idx, tok in enumerate(toks):
            if tok.kind == OP:
                if tok.text in "([{":
                    depth += 1
                elif tok.text in ")]}":
                    depth -= 1
                elif tok.text == ":" and depth == 0:
                    if lambda_depth:
                        lambda_depth -= 1
                        continue
                    return toks[: idx + 1], toks[idx + 1 :]
            elif tok.kind == NAME and tok.text == "lambda" and depth == 0:
                lambda_depth += 1
        raise _ParseError("missing ':' in compound header")

    def _header_nodes(self, header: list[Token], parse_expr_from: int, no_in_target: bool = False) -> list[CstNode]:
        """Leaves for leading keywords + parsed expression + ':' leaf."""
        nodes = [_leaf(t) for t in header[:parse_expr_from]]
        body = header[parse_expr_from:-1]
        if body:
            parser = _ExprParser(body)
            nodes.append(parser.parse_exprlist())
            if not parser.done():
                nodes.append(_error_node(body[parser.pos :]))
        nodes.append(_leaf(header[-1]))
        return nodes

    def _block(self, i: int, header_indent: int, inline: list[Token]) -> tuple[CstNode | None, int]:
        if inline:
            stmts = self._inline_statements(inline)
            return CstNode.wrap("block", stmts), i
        if i < len(self._lines) and self._lines[i].indent > header_indent:
            nodes, i = self._parse_region(i, header_indent)
            if nodes:
                return CstNode.wrap("block", nodes), i
        return None, i

    def _inline_statements(self, toks: list[Token]) -> list[CstNode]:
        stmts = []
        for chunk in _split_on(toks, ";"):
            if chunk:
                stmts.append(self._parse_simple(chunk))
        return stmts or [_error_node(toks)]

    def _clause_line(self, i: int, indent: int, words: set[str]) -> bool:
        if i >= len(self._lines):
            return False
        line = self._lines[i]
        return line.indent == indent and line.tokens[0].kind == NAME and line.tokens[0].text in words

    def _definition(self, i: int, type_name: str) -> tuple[list[CstNode], int]:
        line = self._lines[i]
        header, inline = self._split_header(line.tokens)
        parts: list[CstNode] = []
        pos = 0
        if header[pos].text == "async":
            parts.append(_leaf(header[pos]))
            pos += 1
        parts.append(_leaf(header[pos]))  # def / class
        pos += 1
        if pos < len(header) and header[pos].kind == NAME:
            parts.append(_leaf(header[pos]))
            pos += 1
        if type_name == "function_definition":
            params, pos = self._parameters(header, pos)
            parts.append(params)
            if pos < len(header) - 1 and header[pos].text == "->":
                parts.append(_leaf(header[pos]))
                pos += 1
                type_toks = header[pos:-1]
                if type_toks:
                    expr = _ExprParser(type_toks).parse_expr()
                    parts.append(CstNode.wrap("type", [expr]))
                    pos = len(header) - 1
        elif pos < len(header) - 1 and header[pos].text == "(":
            args = _ExprParser(header[pos:-1])._argument_list()
            parts.append(args)
            pos = len(header) - 1
        parts.append(_leaf(header[-1]))
        block, j = self._block(i + 1, line.indent, inline)
        if block is not None:
            parts.append(block)
        return [CstNode.wrap(type_name, parts)], j

    def _parameters(self, header: list[Token], pos: int) -> tuple[CstNode, int]:
        if pos >= len(header) or header[pos].text != "(":
            raise _ParseError("expected parameter list")
        depth = 0
        end = pos
        for idx in range(pos, len(header)):
            if header[idx].kind == OP:
                if header[idx].text in "([{":
                    depth += 1
                elif header[idx].text in ")]}":
                    depth -= 1
                    if depth == 0:
                        end = idx
                        break
        else:
            raise _ParseError("unterminated parameter list")
        inner = header[pos + 1 : end]
        parts: list[CstNode] = [_leaf(header[pos])]
        parser = _ExprParser(inner)
        while not parser.done():
            parts.append(parser._parameter(stop={","}))
            if parser.at(","):
                parts.append(parser.take())
        parts.append(_leaf(header[end]))
        node = CstNode.wrap("parameters", parts)
        return node, end + 1

    def _decorated(self, i: int) -> tuple[list[CstNode], int]:
        decorators = []
        lines = self._lines
        while i < len(lines) and lines[i].tokens[0].text == "@":
            toks = lines[i].tokens
            at = _leaf(toks[0])
            body = toks[1:]
            children = [at]
            if body:
                parser = _ExprParser(body)
                try:
                    children.append(parser.parse_expr())
                except _ParseError:
                    children.append(_error_node(body))
            decorators.append(CstNode.wrap("decorator", children))
            i += 1
        if i < len(lines) and lines[i].tokens[0].kind == NAME and (
            lines[i].tokens[0].text in ("def", "class")
            or (lines[i].tokens[0].text == "async" and self._second_word(lines[i].tokens) == "def")
        ):
            defn, i = self._parse_statement(i)
            return [CstNode.wrap("decorated_definition", decorators + defn)], i
        return [CstNode.wrap("ERROR", decorators)], i

    def _if_statement(self, i: int) -> tuple[list[CstNode], int]:
        line = self._lines[i]
        indent = line.indent
        header, inline = self._split_header(line.tokens)
        parts = self._header_nodes(header, 1)
        block, i = self._block(i + 1, indent, inline)
        if block is not None:
            parts.append(block)
        while self._clause_line(i, indent, {"elif", "else"}):
            clause_line = self._lines[i]
            kind = "elif_clause" if clause_line.tokens[0].text == "elif" else "else_clause"
            header, inline = self._split_header(clause_line.tokens)
            sub = self._header_nodes(header, 1)
            block, i = self._block(i + 1, indent, inline)
            if block is not None:
                sub.append(block)
            parts.append(CstNode.wrap(kind, sub))
            if kind == "else_clause":
                break
        return [CstNode.wrap("if_statement", parts)], i

    def _loop(self, i: int, type_name: str, with_else: bool) -> tuple[list[CstNode], int]:
        line = self._lines[i]
        indent = line.indent
        header, inline = self._split_header(line.tokens)
        kw_count = 2 if header[0].text == "async" else 1
        if type_name == "for_statement":
            parts = [_leaf(t) for t in header[:kw_count]]
            body = header[kw_count:-1]
            parser = _ExprParser(body)
            try:
                parts.append(parser.parse_exprlist(no_in=True))
                parts.append(parser.expect("in"))
                parts.append(parser.parse_exprlist())
                if not parser.done():
                    parts.append(_error_node(body[parser.pos :]))
            except _ParseError:
                parts.append(_error_node(body))
            parts.append(_leaf(header[-1]))
        elif type_name == "with_statement":
            parts = [_leaf(t) for t in header[:kw_count]]
            body = header[kw_count:-1]
            if body:
                parts.extend(self._with_items(body))
            parts.append(_leaf(header[-1]))
        else:
            parts = self._header_nodes(header, kw_count)
        block, i = self._block(i + 1, indent, inline)
        if block is not None:
            parts.append(block)
        if with_else and type_name != "with_statement" and self._clause_line(i, indent, {"else"}):
            clause_line = self._lines[i]
            header, inline = self._split_header(clause_line.tokens)
            sub = self._header_nodes(header, 1)
            block, i = self._block(i + 1, indent, inline)
            if block is not None:
                sub.append(block)
            parts.append(CstNode.wrap("else_clause", sub))
        return [CstNode.wrap(type_name, parts)], i

    def _with_items(self, toks: list[Token]) -> list[CstNode]:
        nodes = []
        # Strip optional grouping parens: with (a as b, c as d):
        if toks[0].text == "(" and toks[-1].text == ")":
            nodes.append(_leaf(toks[0]))
            inner, tail = toks[1:-1], [_leaf(toks[-1])]
        else:
            inner, tail = toks, []
        for chunk in _split_on(inner, ","):
            if not chunk:
                continue
            pieces = _split_on_name(chunk, "as")
            parser = _ExprParser(pieces[0])
            try:
                item = parser.parse_expr()
            except _ParseError:
                item = _error_node(pieces[0])
            nodes.append(item)
            if len(pieces) > 1 and pieces[1]:
                try:
                    nodes.append(_ExprParser(pieces[1]).parse_expr())
                except _ParseError:
                    nodes.append(_error_node(pieces[1]))
        return nodes + tail

    def _try_statement(self, i: int) -> tuple[list[CstNode], int]:
        line = self._lines[i]
        indent = line.indent
        header, inline = self._split_header(line.tokens)
        parts = self._header_nodes(header, 1)
        block, i = self._block(i + 1, indent, inline)
        if block is not None:
            parts.append(block)
        kinds = {"except": "except_clause", "else": "else_clause", "finally": "finally_clause"}
        while self._clause_line(i, indent, set(kinds)):
            clause_line = self._lines[i]
            kind = kinds[clause_line.tokens[0].text]
            header, inline = self._split_header(clause_line.tokens)
            kw = 2 if len(header) > 1 and header[1].text == "*" else 1
            if kind == "except_clause":
                sub = [_leaf(t) for t in header[:kw]]
                body = header[kw:-1]
                for piece in _split_on_name(body, "as"):
                    if piece:
                        try:
                            sub.append(_ExprParser(piece).parse_exprlist())
                        except _ParseError:
                            sub.append(_error_node(piece))
                sub.append(_leaf(header[-1]))
            else:
                sub = self._header_nodes(header, kw)
            block, i = self._block(i + 1, indent, inline)
            if block is not None:
                sub.append(block)
            parts.append(CstNode.wrap(kind, sub))
        return [CstNode.wrap("try_statement", parts)], i

    def _match_statement(self, i: int) -> tuple[list[CstNode], int]:
        line = self._lines[i]
        indent = line.indent
        header, inline = self._split_header(line.tokens)
        parts = [CstNode(header[0].text, header[0].start, header[0].end, is_named=False)]
        body = header[1:-1]
        if body:
            parser = _ExprParser(body)
            parts.append(parser.parse_exprlist())
        parts.append(_leaf(header[-1]))
        j = i + 1
        lines = self._lines
        while j < len(lines) and lines[j].indent > indent and lines[j].tokens[0].text == "case":
            case_line = lines[j]
            try:
                case_header, case_inline = self._split_header(case_line.tokens)
                sub: list[CstNode] = [
                    CstNode(case_header[0].text, case_header[0].start, case_header[0].end, is_named=False)
                ]
                pattern = case_header[1:-1]
                if pattern:
                    parser = _ExprParser(pattern)
                    try:
                        sub.append(parser.parse_exprlist())
                        while not parser.done():
                            sub.append(parser.take())
                    except _ParseError:
                        sub.append(_error_node(pattern))
                sub.append(_leaf(case_header[-1]))
                block, j2 = self._block(j + 1, case_line.indent, case_inline)
                if block is not None:
                    sub.append(block)
                parts.append(CstNode.wrap("case_clause", sub))
                j = j2
            except _ParseError:
                parts.append(_error_node(case_line.tokens))
                j += 1
        return [CstNode.wrap("match_statement", parts)], j

    # -- simple statements -----------------------------------------------------

    def _simple_line(self, i: int) -> tuple[list[CstNode], int]:
        toks = self._lines[i].tokens
        stmts = []
        for chunk in _split_on(toks, ";"):
            if chunk:
                stmts.append(self._parse_simple(chunk))
        return stmts or [_error_node(toks)], i + 1

    def _parse_simple(self, toks: list[Token]) -> CstNode:
        word = toks[0].text if toks[0].kind == NAME else None
        try:
            if word == "return":
                parts = [_leaf(toks[0])]
                if len(toks) > 1:
                    parts.append(_ExprParser(toks[1:]).parse_exprlist())
                return CstNode.wrap("return_statement", parts)
            if word in ("pass", "break", "continue"):
                return CstNode.wrap(f"{word}_statement", [_leaf(toks[0])])
            if word == "raise":
                parts = [_leaf(toks[0])]
                if len(toks) > 1:
                    rest = toks[1:]
                    pieces = _split_on_name(rest, "from")
                    parts.append(_ExprParser(pieces[0]).parse_expr())
                    if len(pieces) > 1 and pieces[1]:
                        parts.append(_ExprParser(pieces[1]).parse_expr())
                return CstNode.wrap("raise_statement", parts)
            if word == "assert":
                parts = [_leaf(toks[0])]
                parser = _ExprParser(toks[1:])
                parts.append(parser.parse_expr())
                if parser.at(","):
                    parts.append(parser.take())
                    parts.append(parser.parse_expr())
                return CstNode.wrap("assert_statement", parts)
            if word == "import":
                return self._import(toks, "import_statement")
            if word == "from":
                return self._import(toks, "import_from_statement")
            if word in ("global", "nonlocal"):
                parts = [_leaf(t) for t in toks]
                return CstNode.wrap(f"{word}_statement", parts)
            if (
                word == "type"
                and len(toks) >= 4
                and toks[1].kind == NAME
                and toks[2].text == "="
            ):
                parts = [
                    CstNode(toks[0].text, toks[0].start, toks[0].end, is_named=False),
                    _leaf(toks[1]),
                    _leaf(toks[2]),
                    CstNode.wrap("type", [_ExprParser(toks[3:]).parse_expr()]),
                ]
                return CstNode.wrap("type_alias_statement", parts)
            if word == "del":
                parts = [_leaf(toks[0]), _ExprParser(toks[1:]).parse_exprlist()]
                return CstNode.wrap("delete_statement", parts)
            return self._expression_statement(toks)
        except _ParseError:
            return _error_node(toks)

    def _import(self, toks: list[Token], type_name: str) -> CstNode:
        parts: list[CstNode] = []
        dotted: list[CstNode] = []

        def flush():
            nonlocal dotted
            if dotted:
                parts.append(CstNode.wrap("dotted_name", dotted) if len(dotted) > 1 else dotted[0])
                dotted = []

        for tok in toks:
            if tok.kind == NAME and tok.text not in ("import", "from", "as"):
                dotted.append(_leaf(tok))
            elif tok.kind == OP and tok.text == ".":
                dotted.append(_leaf(tok))
            else:
                flush()
                parts.append(_leaf(tok))
        flush()
        return CstNode.wrap(type_name, parts)

    def _expression_statement(self, toks: list[Token]) -> CstNode:
        parser = _ExprParser(toks)
        first = parser.parse_exprlist()
        node = first
        if not parser.done():
            tok = parser.peek()
            if tok.text == "=":
                node = self._assignment_chain(first, parser)
            elif tok.text in _AUG_OPS:
                op = parser.take()
                rhs = self._rhs(parser)
                node = CstNode.wrap("augmented_assignment", [first, op, rhs])
            elif tok.text == ":":
                colon = parser.take()
                ann = CstNode.wrap("type", [parser.parse_expr()])
                pieces = [first, colon, ann]
                if parser.at("="):
                    pieces.append(parser.take())
                    pieces.append(self._rhs(parser))
                node = CstNode.wrap("assignment", pieces)
            if not parser.done():
                node = CstNode.wrap("ERROR", [node] + [parser.take() for _ in range(len(parser.toks) - parser.pos)])
        return CstNode.wrap("expression_statement", [node])

    def _assignment_chain(self, left: CstNode, parser: _ExprParser) -> CstNode:
        eq = parser.take()
        right = self._rhs(parser)
        if parser.at("="):
            right = self._assignment_chain(right, parser)
        return CstNode.wrap("assignment", [left, eq, right])

    def _rhs(self, parser: _ExprParser) -> CstNode:
        if parser.at_name("yield"):
            return parser._yield()
        return parser.parse_exprlist()


def _split_on(toks: list[Token], sep: str) -> list[list[Token]]:
    chunks: list[list[Token]] = [[]]
    depth = 0
    for tok in toks:
        if tok.kind == OP:
            if tok.text in "([{":
                depth += 1
            elif tok.text in ")]}":
                depth -= 1
            elif tok.text == sep and depth == 0:
                chunks.append([])
                continue
        chunks[-1].append(tok)
    return chunks


def _split_on_name(toks: list[Token], word: str) -> list[list[Token]]:
    chunks: list[list[Token]] = [[]]
    depth = 0
    for tok in toks:
        if tok.kind == OP and tok.text in "([{":
            depth += 1
        elif tok.kind == OP and tok.text in ")]}":
            depth -= 1
        elif tok.kind == NAME and tok.text == word and depth == 0:
            chunks.append([])
            continue
        chunks[-1].append(tok)
    return chunks


def _insert_comment(root: CstNode, comment: CstNode) -> None:
    node = root
    while True:
        next_child = None
        for child in node.children:
            if child.start <= comment.start and comment.end <= child.end and child.children:
                next_child = child
                break
        if next_child is None:
            break
        node = next_child
    comment.parent = node
    idx = 0
    while idx < len(node.children) and node.children[idx].start < comment.start:
        idx += 1
    node.children.insert(idx, comment)
