"""Brace-language grammars: JavaScript, TypeScript, and Java.

Parsing is two-stage: tokens are folded into a bracket tree, then a
statement scanner types the constructs metrics care about (functions,
arrows, classes, declarations, loops, ...). Anything unrecognized stays
in the tree as anonymous leaves, so parsing is total and node text
always reflects the source.
"""

from __future__ import annotations

from .node import CstNode, LineIndex
from .python_parser import _insert_comment
from .tokens import COMMENT, NAME, NUM, OP, REGEX, STR, Token, lex_clike

GRAMMAR_VERSION = "1.0"

_JS_KEYWORDS = {
    "break", "case", "catch", "class", "const", "continue", "debugger",
    "default", "delete", "do", "else", "export", "extends", "finally",
    "for", "function", "if", "import", "in", "instanceof", "let", "new",
    "of", "return", "static", "super", "switch", "this", "throw", "try",
    "typeof", "var", "void", "while", "with", "yield", "async", "await",
    "get", "set", "interface", "type", "enum", "namespace", "declare",
    "abstract", "implements", "readonly", "public", "private", "protected",
    "as", "satisfies", "override", "module", "extends", "infer", "keyof",
}
_JS_LITERALS = {"true": "true", "false": "false", "null": "null", "undefined": "undefined"}

_JAVA_KEYWORDS = {
    "abstract", "assert", "boolean", "break", "byte", "case", "catch",
    "char", "class", "const", "continue", "default", "do", "double",
    "else", "enum", "extends", "final", "finally", "float", "for", "goto",
    "if", "implements", "import", "instanceof", "int", "interface",
    "long", "native", "new", "package", "private", "protected", "public",
    "record", "return", "sealed", "short", "static", "strictfp", "super",
    "switch", "synchronized", "this", "throw", "throws", "transient",
    "try", "var", "void", "volatile", "while", "yield", "permits",
}

_JAVA_MODIFIERS = {
    "public", "private", "protected", "static", "final", "abstract",
    "synchronized", "native", "strictfp", "transient", "volatile",
    "default", "sealed", "non-sealed",
}

# Statement keywords that may start a new statement after a line break
# even without a semicolon (the pragmatic ASI rule used here).
_JS_STMT_STARTERS = {
    "const", "let", "var", "function", "class", "if", "for", "while", "do",
    "switch", "try", "return", "throw", "break", "continue", "import",
    "export", "interface", "type", "enum", "namespace", "declare", "async",
}


class _Group:
    __slots__ = ("opener", "items", "closer", "kind")

    def __init__(self, opener: Token, kind: str):
        self.opener = opener
        self.items: list = []
        self.closer: Token | None = None
        self.kind = kind  # paren | bracket | brace | template

    @property
    def start(self) -> int:
        return self.opener.start

    @property
    def end(self) -> int:
        return self.closer.end if self.closer is not None else (
            self.items[-1].end if self.items else self.opener.end
        )

    @property
    def line(self) -> int:
        return self.opener.line


_GROUP_KINDS = {"(": "paren", "[": "bracket", "{": "brace", "${": "template"}
_CLOSERS = {")": "paren", "]": "bracket", "}": "brace"}


def _build_groups(tokens: list[Token]) -> list:
    root: list = []
    stack: list[_Group] = []
    for tok in tokens:
        target = stack[-1].items if stack else root
        if tok.kind == OP and tok.text in _GROUP_KINDS:
            group = _Group(tok, _GROUP_KINDS[tok.text])
            target.append(group)
            stack.append(group)
        elif tok.kind == OP and tok.text in _CLOSERS:
            kind = _CLOSERS[tok.text]
            if stack and (stack[-1].kind == kind or (kind == "brace" and stack[-1].kind == "template")):
                stack[-1].closer = tok
                stack.pop()
            elif stack:
                # Mismatched closer: close intervening groups at this token.
                while stack and stack[-1].kind != kind and not (kind == "brace" and stack[-1].kind == "template"):
                    stack.pop()
                if stack:
                    stack[-1].closer = tok
                    stack.pop()
                else:
                    root.append(tok)
            else:
                target.append(tok)
        else:
            target.append(tok)
    return root


class _CParser:
    """Shared machinery for the brace-language grammars."""

    language_id = ""
    keywords: set[str] = set()
    literals: dict[str, str] = {}
    version = GRAMMAR_VERSION

    def parse(self, src: str) -> CstNode:
        tokens, _ = lex_clike(src, self.language_id)
        comments = [t for t in tokens if t.kind == COMMENT]
        items = _build_groups([t for t in tokens if t.kind != COMMENT])
        root = CstNode("program", 0, len(src))
        root.adopt_all(self.parse_statements(items))
        root.start, root.end = 0, len(src)
        for comment in comments:
            _insert_comment(root, CstNode("comment", comment.start, comment.end))
        root.bind(LineIndex(src))
        return root

    # -- leaves ---------------------------------------------------------------

    def leaf(self, tok: Token) -> CstNode:
        if tok.kind == NAME:
            mapped = self.literals.get(tok.text)
            if mapped:
                return CstNode(mapped, tok.start, tok.end)
            if tok.text in self.keywords:
                return CstNode(tok.text, tok.start, tok.end, is_named=False)
            return CstNode("identifier", tok.start, tok.end)
        if tok.kind == NUM:
            return CstNode("number", tok.start, tok.end)
        if tok.kind == STR:
            return CstNode("string", tok.start, tok.end)
        if tok.kind == REGEX:
            return CstNode("regex", tok.start, tok.end)
        return CstNode(tok.text or tok.kind, tok.start, tok.end, is_named=False)

    def flat(self, item) -> list[CstNode]:
        """Item (or item list) to leaves, groups flattened recursively."""
        if isinstance(item, list):
            out = []
            for it in item:
                out.extend(self.flat(it))
            return out
        if isinstance(item, _Group):
            out = [self.leaf(item.opener)]
            for it in item.items:
                out.extend(self.flat(it))
            if item.closer is not None:
                out.append(self.leaf(item.closer))
            return out
        return [self.leaf(item)]

    # -- pattern helpers --------------------------------------------------------

    @staticmethod
    def is_word(item, *texts: str) -> bool:
        return isinstance(item, Token) and item.kind == NAME and (not texts or item.text in texts)

    @staticmethod
    def is_op(item, *texts: str) -> bool:
        return isinstance(item, Token) and item.kind == OP and (not texts or item.text in texts)

    @staticmethod
    def is_group(item, kind: str) -> bool:
        return isinstance(item, _Group) and item.kind == kind

    def group_node(self, group: _Group, type_name: str, inner: list[CstNode], named: bool = True) -> CstNode:
        node = CstNode(type_name, group.opener.start, group.opener.end, is_named=named)
        node.adopt(self.leaf(group.opener))
        node.adopt_all(inner)
        if group.closer is not None:
            node.adopt(self.leaf(group.closer))
        node.end = max(node.end, group.end)
        return node

    def block_of(self, group: _Group, type_name: str) -> CstNode:
        return self.group_node(group, type_name, self.parse_statements(group.items))

    # Subclasses provide parse_statements and expression scanning.
    def parse_statements(self, items: list) -> list[CstNode]:  # pragma: no cover
        raise NotImplementedError


def _statement_end(items: list, i: int, starters: set[str]) -> int:
    """End index (exclusive) of an expression-ish statement run."""
    n = len(items)
    j = i
    prev = None
    while j < n:
        item = items[j]
        if isinstance(item, Token) and item.kind == OP and item.text == ";":
            return j + 1
        if prev is not None and isinstance(item, (Token, _Group)):
            line = item.line if isinstance(item, Token) else item.opener.line
            prev_line = prev.line if isinstance(prev, Token) else (
                prev.closer.line if prev.closer is not None else prev.opener.line
            )
            if line > prev_line and _CParser.is_word(item, *starters):
                prev_ok = isinstance(prev, _Group) or (
                    isinstance(prev, Token) and (prev.kind in (NAME, NUM, STR, REGEX) or prev.text in ("++", "--"))
                )
                if prev_ok:
                    return j
        prev = item
        j += 1
    return n


class JsParser(_CParser):
    """JavaScript grammar; TypeScript extends it."""

    language_id = "javascript"
    keywords = _JS_KEYWORDS
    literals = _JS_LITERALS

    # ---- statements ----------------------------------------------------------

    def parse_statements(self, items: list) -> list[CstNode]:
        nodes: list[CstNode] = []
        i = 0
        n = len(items)
        while i < n:
            node, i = self.parse_statement(items, i)
            if isinstance(node, list):
                nodes.extend(node)
            elif node is not None:
                nodes.append(node)
        return nodes

    def parse_statement(self, items: list, i: int):
        item = items[i]
        if self.is_op(item, ";"):
            return self.leaf(item), i + 1
        if self.is_group(item, "brace"):
            return self.block_of(item, "statement_block"), i + 1
        if self.is_word(item):
            word = item.text
            if word in ("import",):
                return self._simple_run(items, i, "import_statement", scan=False)
            if word == "export":
                return self._export(items, i)
            if word == "function" or (word == "async" and self.is_word(self._peek(items, i + 1), "function")):
                return self._function(items, i, declaration=True)
            if word == "class" or (word == "abstract" and self.is_word(self._peek(items, i + 1), "class")):
                return self._class(items, i, "class_declaration")
            if word in ("const", "let", "var"):
                return self._declaration(items, i)
            if word == "if":
                return self._if(items, i)
            if word == "for":
                return self._for(items, i)
            if word == "while":
                return self._while(items, i)
            if word == "do":
                return self._do(items, i)
            if word == "switch":
                return self._switch(items, i)
            if word == "try":
                return self._try(items, i)
            if word in ("return", "throw"):
                return self._simple_run(items, i, f"{word}_statement")
            if word in ("break", "continue"):
                return self._simple_run(items, i, f"{word}_statement")
            if word in ("case", "default"):
                return self._case_label(items, i)
            extra = self._language_statement(items, i)
            if extra is not None:
                return extra
        return self._expression_statement(items, i)

    def _language_statement(self, items, i):
        return None

    @staticmethod
    def _peek(items, i):
        return items[i] if i < len(items) else None

    def _simple_run(self, items: list, i: int, type_name: str, scan: bool = True):
        end = _statement_end(items, i + 1, _JS_STMT_STARTERS)
        rest = items[i + 1 : end]
        children = [self.leaf(items[i])] + (self._expr_nodes(rest) if scan else self.flat(rest))
        return CstNode.wrap(type_name, children), end

    def _case_label(self, items: list, i: int):
        # 'case expr:' / 'default:' labels inside a switch body.
        leaves = [self.leaf(items[i])]
        j = i + 1
        while j < len(items) and not self.is_op(items[j], ":"):
            leaves.extend(self.flat(items[j]))
            j += 1
        if j < len(items):
            leaves.append(self.leaf(items[j]))
            j += 1
        return leaves, j

    def _expression_statement(self, items: list, i: int):
        end = _statement_end(items, i, _JS_STMT_STARTERS)
        if end == i:
            end = i + 1
        children = self._expr_nodes(items[i:end])
        if not children:
            return None, end
        return CstNode.wrap("expression_statement", children), end

    def _export(self, items: list, i: int):
        children = [self.leaf(items[i])]
        j = i + 1
        if self.is_word(self._peek(items, j), "default"):
            children.append(self.leaf(items[j]))
            j += 1
        nxt = self._peek(items, j)
        if self.is_word(nxt) and nxt.text in (
            "function", "class", "const", "let", "var", "async", "abstract",
            "interface", "type", "enum", "namespace", "declare",
        ):
            inner, j = self.parse_statement(items, j)
            if isinstance(inner, CstNode):
                children.append(inner)
            elif isinstance(inner, list):
                children.extend(inner)
            return CstNode.wrap("export_statement", children), j
        end = _statement_end(items, j, _JS_STMT_STARTERS)
        if self.is_group(nxt, "brace"):
            # export { a, b } from "x";
            return CstNode.wrap("export_statement", children + self.flat(items[j:end])), end
        return CstNode.wrap("export_statement", children + self._expr_nodes(items[j:end])), end

    def _declaration(self, items: list, i: int):
        kw = items[i]
        type_name = "variable_declaration" if kw.text == "var" else "lexical_declaration"
        end = _statement_end(items, i + 1, _JS_STMT_STARTERS)
        run = items[i + 1 : end]
        children: list[CstNode] = [self.leaf(kw)]
        children.extend(self._declarators(run))
        return CstNode.wrap(type_name, children), end

    def _declarators(self, run: list) -> list[CstNode]:
        # Split on top-level commas; each piece becomes a declarator.
        pieces: list[list] = [[]]
        for item in run:
            if self.is_op(item, ","):
                pieces.append([item])
            else:
                pieces[-1].append(item)
        out: list[CstNode] = []
        for piece in pieces:
            lead: list[CstNode] = []
            body = piece
            if body and self.is_op(body[0], ","):
                lead = [self.leaf(body[0])]
                body = body[1:]
            if not body:
                out.extend(lead)
                continue
            sub = self._expr_nodes(body)
            if self.is_op(body[-1], ";"):
                decl_children, tail = sub[:-1], [sub[-1]]
            else:
                decl_children, tail = sub, []
            out.extend(lead)
            if decl_children:
                out.append(CstNode.wrap("variable_declarator", decl_children))
            out.extend(tail)
        return out

    def _function(self, items: list, i: int, declaration: bool):
        children: list[CstNode] = []
        j = i
        if self.is_word(items[j], "async"):
            children.append(self.leaf(items[j]))
            j += 1
        children.append(self.leaf(items[j]))  # 'function'
        j += 1
        generator = False
        if self.is_op(self._peek(items, j), "*"):
            generator = True
            children.append(self.leaf(items[j]))
            j += 1
        if self.is_word(self._peek(items, j)):
            children.append(self.leaf(items[j]))
            j += 1
        j = self._skip_type_params(items, j, children)
        if self.is_group(self._peek(items, j), "paren"):
            children.append(self._formal_parameters(items[j]))
            j += 1
        j = self._skip_return_type(items, j, children)
        if self.is_group(self._peek(items, j), "brace"):
            children.append(self.block_of(items[j], "statement_block"))
            j += 1
        if declaration:
            type_name = "generator_function_declaration" if generator else "function_declaration"
        else:
            type_name = "generator_function" if generator else "function_expression"
        return CstNode.wrap(type_name, children), j

    def _formal_parameters(self, group: _Group) -> CstNode:
        return self.group_node(group, "formal_parameters", self._expr_nodes(group.items))

    def _skip_type_params(self, items, j, children):
        return j

    def _skip_return_type(self, items, j, children):
        return j

    def _class(self, items: list, i: int, type_name: str):
        children: list[CstNode] = []
        j = i
        if self.is_word(items[j], "abstract"):
            children.append(self.leaf(items[j]))
            j += 1
        children.append(self.leaf(items[j]))  # 'class'
        j += 1
        while j < len(items) and not self.is_group(items[j], "brace"):
            item = items[j]
            if isinstance(item, Token) and item.kind == OP and item.text == ";":
                break
            children.extend(self.flat(item))
            j += 1
        if j < len(items) and self.is_group(items[j], "brace"):
            children.append(self._class_body(items[j]))
            j += 1
        return CstNode.wrap(type_name, children), j

    _MEMBER_MODIFIERS = {
        "static", "async", "get", "set", "public", "private", "protected",
        "readonly", "abstract", "declare", "override", "accessor",
    }

    def _class_body(self, group: _Group) -> CstNode:
        members: list[CstNode] = []
        items = group.items
        i = 0
        n = len(items)
        while i < n:
            item = items[i]
            if self.is_op(item, ";") or self.is_op(item, ","):
                members.append(self.leaf(item))
                i += 1
                continue
            if self.is_op(item, "@"):
                # Decorator on a member.
                deco = [self.leaf(item)]
                i += 1
                while i < n and (self.is_word(items[i]) or self.is_op(items[i], ".") or self.is_group(items[i], "paren")):
                    was_group = self.is_group(items[i], "paren")
                    deco.extend(self.flat(items[i]))
                    i += 1
                    if was_group:
                        break
                members.append(CstNode.wrap("decorator", deco))
                continue
            member, i = self._class_member(items, i)
            if isinstance(member, list):
                members.extend(member)
            elif member is not None:
                members.append(member)
        return self.group_node(group, "class_body", members)

    def _class_member(self, items: list, i: int):
        n = len(items)
        j = i
        lead: list[CstNode] = []
        while j < n and self.is_word(items[j]) and items[j].text in self._MEMBER_MODIFIERS:
            # 'static' etc. might itself be a field name; only treat as a
            # modifier when more member tokens follow.
            if j + 1 < n and (self.is_word(items[j + 1]) or self.is_op(items[j + 1], "*") or self.is_group(items[j + 1], "paren") or self.is_group(items[j + 1], "bracket") or isinstance(items[j + 1], Token) and items[j + 1].kind == STR):
                lead.append(self.leaf(items[j]))
                j += 1
            else:
                break
        if j < n and self.is_op(items[j], "*"):
            lead.append(self.leaf(items[j]))
            j += 1
        # Member name: identifier, string, number, computed, or private #name.
        name_nodes: list[CstNode] = []
        if j < n and self.is_op(items[j], "#"):
            name_nodes.append(self.leaf(items[j]))
            j += 1
        if j < n and (
            self.is_word(items[j])
            or (isinstance(items[j], Token) and items[j].kind in (STR, NUM))
            or self.is_group(items[j], "bracket")
        ):
            name_nodes.extend(self.flat(items[j]))
            j += 1
        else:
            # Not a recognizable member: consume one item to stay total.
            if j == i:
                consumed = self.flat(items[i])
                return consumed, i + 1
            return lead + name_nodes, j
        k = self._skip_type_params_index(items, j)
        if k < n and self.is_group(items[k], "paren"):
            children = lead + name_nodes
            for idx in range(j, k):
                children.extend(self.flat(items[idx]))
            children.append(self._formal_parameters(items[k]))
            k += 1
            k = self._skip_return_type_index(items, k, children)
            if k < n and self.is_group(items[k], "brace"):
                children.append(self.block_of(items[k], "statement_block"))
                k += 1
            if k < n and self.is_op(items[k], ";"):
                children.append(self.leaf(items[k]))
                k += 1
            return CstNode.wrap("method_definition", children), k
        # Field: consume until ';' or line-broken next member.
        children = lead + name_nodes
        end = j
        while end < n and not self.is_op(items[end], ";"):
            prev = items[end - 1]
            cur = items[end]
            cur_line = cur.line if isinstance(cur, Token) else cur.opener.line
            prev_line = prev.line if isinstance(prev, Token) else (
                prev.closer.line if prev.closer is not None else prev.opener.line
            )
            if cur_line > prev_line and not self.is_op(prev, "=", ",", ":", "|", "&", "?", "."):
                break
            end += 1
        children.extend(self._expr_nodes(items[j:end]))
        if end < n and self.is_op(items[end], ";"):
            children.append(self.leaf(items[end]))
            end += 1
        return CstNode.wrap("field_definition", children), end

    def _skip_type_params_index(self, items, j):
        return j

    def _skip_return_type_index(self, items, j, children):
        return j

    # ---- compound statements ---------------------------------------------------

    def _if(self, items: list, i: int):
        children = [self.leaf(items[i])]
        j = i + 1
        if self.is_group(self._peek(items, j), "paren"):
            children.append(self.group_node(items[j], "parenthesized_expression", self._expr_nodes(items[j].items)))
            j += 1
        body, j = self.parse_statement(items, j)
        if isinstance(body, CstNode):
            children.append(body)
        elif isinstance(body, list):
            children.extend(body)
        if self.is_word(self._peek(items, j), "else"):
            else_children = [self.leaf(items[j])]
            j += 1
            else_body, j = self.parse_statement(items, j)
            if isinstance(else_body, CstNode):
                else_children.append(else_body)
            elif isinstance(else_body, list):
                else_children.extend(else_body)
            children.append(CstNode.wrap("else_clause", else_children))
        return CstNode.wrap("if_statement", children), j

    def _loop_header_kind(self, group: _Group) -> str:
        if any(self.is_op(item, ";") for item in group.items):
            return "for_statement"
        for item in group.items:
            if self.is_word(item, "in", "of"):
                return "for_in_statement"
        return "for_statement"

    def _for(self, items: list, i: int):
        children = [self.leaf(items[i])]
        j = i + 1
        type_name = "for_statement"
        if self.is_word(self._peek(items, j), "await"):
            children.append(self.leaf(items[j]))
            j += 1
        if self.is_group(self._peek(items, j), "paren"):
            header = items[j]
            type_name = self._loop_header_kind(header)
            children.append(self.group_node(header, "parenthesized_expression", self._for_header_nodes(header), named=False))
            j += 1
        body, j = self.parse_statement(items, j)
        if isinstance(body, CstNode):
            children.append(body)
        elif isinstance(body, list):
            children.extend(body)
        return CstNode.wrap(type_name, children), j

    def _for_header_nodes(self, group: _Group) -> list[CstNode]:
        # A const/let/var in the header introduces a declaration node,
        # so declaration metrics see loop bindings too.
        items = group.items
        if items and self.is_word(items[0], "const", "let", "var"):
            type_name = "variable_declaration" if items[0].text == "var" else "lexical_declaration"
            end = 1
            while end < len(items) and not (
                self.is_op(items[end], ";") or self.is_word(items[end], "in", "of")
            ):
                end += 1
            decl_children = [self.leaf(items[0])]
            inner = self._expr_nodes(items[1:end])
            if inner:
                decl_children.append(CstNode.wrap("variable_declarator", inner))
            decl = CstNode.wrap(type_name, decl_children)
            return [decl] + self._expr_nodes(items[end:])
        return self._expr_nodes(items)

    def _while(self, items: list, i: int):
        children = [self.leaf(items[i])]
        j = i + 1
        if self.is_group(self._peek(items, j), "paren"):
            children.append(self.group_node(items[j], "parenthesized_expression", self._expr_nodes(items[j].items)))
            j += 1
        body, j = self.parse_statement(items, j)
        if isinstance(body, CstNode):
            children.append(body)
        elif isinstance(body, list):
            children.extend(body)
        return CstNode.wrap("while_statement", children), j

    def _do(self, items: list, i: int):
        children = [self.leaf(items[i])]
        j = i + 1
        body, j = self.parse_statement(items, j)
        if isinstance(body, CstNode):
            children.append(body)
        elif isinstance(body, list):
            children.extend(body)
        if self.is_word(self._peek(items, j), "while"):
            children.append(self.leaf(items[j]))
            j += 1
            if self.is_group(self._peek(items, j), "paren"):
                children.append(self.group_node(items[j], "parenthesized_expression", self._expr_nodes(items[j].items)))
                j += 1
            if self.is_op(self._peek(items, j), ";"):
                children.append(self.leaf(items[j]))
                j += 1
        return CstNode.wrap("do_statement", children), j

    def _switch(self, items: list, i: int):
        children = [self.leaf(items[i])]
        j = i + 1
        if self.is_group(self._peek(items, j), "paren"):
            children.append(self.group_node(items[j], "parenthesized_expression", self._expr_nodes(items[j].items)))
            j += 1
        if self.is_group(self._peek(items, j), "brace"):
            children.append(self.block_of(items[j], "switch_body"))
            j += 1
        return CstNode.wrap("switch_statement", children), j

    def _try(self, items: list, i: int):
        children = [self.leaf(items[i])]
        j = i + 1
        if self.is_group(self._peek(items, j), "brace"):
            children.append(self.block_of(items[j], "statement_block"))
            j += 1
        if self.is_word(self._peek(items, j), "catch"):
            sub = [self.leaf(items[j])]
            j += 1
            if self.is_group(self._peek(items, j), "paren"):
                sub.append(self.group_node(items[j], "parenthesized_expression", self._expr_nodes(items[j].items), named=False))
                j += 1
            if self.is_group(self._peek(items, j), "brace"):
                sub.append(self.block_of(items[j], "statement_block"))
                j += 1
            children.append(CstNode.wrap("catch_clause", sub))
        if self.is_word(self._peek(items, j), "finally"):
            sub = [self.leaf(items[j])]
            j += 1
            if self.is_group(self._peek(items, j), "brace"):
                sub.append(self.block_of(items[j], "statement_block"))
                j += 1
            children.append(CstNode.wrap("finally_clause", sub))
        return CstNode.wrap("try_statement", children), j

    # ---- expressions -------------------------------------------------------------

    def _expr_nodes(self, items: list) -> list[CstNode]:
        """Scan an expression region for constructs; leaves otherwise."""
        nodes: list[CstNode] = []
        i = 0
        n = len(items)
        prev_value = False  # previous item could end a value (call/index follows)
        while i < n:
            item = items[i]
            arrow = self._arrow_at(items, i, prev_value)
            if arrow is not None:
                node, i = arrow
                nodes.append(node)
                prev_value = True
                continue
            if self.is_word(item, "function") or (
                self.is_word(item, "async") and self.is_word(self._peek(items, i + 1), "function")
            ):
                node, i = self._function(items, i, declaration=False)
                nodes.append(node)
                prev_value = True
                continue
            if self.is_word(item, "class"):
                node, i = self._class(items, i, "class")
                nodes.append(node)
                prev_value = True
                continue
            if isinstance(item, _Group):
                nodes.append(self._expr_group(item, prev_value))
                prev_value = True
                i += 1
                continue
            nodes.append(self.leaf(item))
            prev_value = isinstance(item, Token) and (
                item.kind in (NAME, NUM, STR, REGEX) and item.text not in ("new", "typeof", "in", "of", "instanceof", "return", "case")
            )
            i += 1
        return nodes

    def _expr_group(self, group: _Group, prev_value: bool) -> CstNode:
        inner = self._expr_nodes(group.items)
        if group.kind == "paren":
            type_name = "arguments" if prev_value else "parenthesized_expression"
            return self.group_node(group, type_name, inner, named=not prev_value)
        if group.kind == "bracket":
            if prev_value:
                return self.group_node(group, "subscript", inner, named=False)
            return self.group_node(group, "array", inner)
        if group.kind == "template":
            return self.group_node(group, "template_substitution", inner)
        return self._object_literal(group)

    def _object_literal(self, group: _Group) -> CstNode:
        # Inside an object, `name(params) { ... }` is a method shorthand.
        # Everything between methods is scanned as one run so arrows in
        # property values are still found.
        members: list[CstNode] = []
        items = group.items
        run_start = 0
        i = 0
        n = len(items)

        def flush(upto: int):
            if upto > run_start:
                members.extend(self._expr_nodes(items[run_start:upto]))

        while i < n:
            item = items[i]
            name_like = (
                self.is_word(item)
                or (isinstance(item, Token) and item.kind in (STR, NUM))
                or self.is_group(item, "bracket")
            )
            at_boundary = i == run_start or self.is_op(items[i - 1], ",") or (
                self.is_word(items[i - 1], "async", "get", "set") or self.is_op(items[i - 1], "*")
            )
            if name_like and at_boundary and self.is_group(self._peek(items, i + 1), "paren"):
                ret_nodes: list[CstNode] = []
                body_idx = self._skip_return_type(items, i + 2, ret_nodes)
                if self.is_group(self._peek(items, body_idx), "brace"):
                    start = i
                    lead: list[CstNode] = []
                    if i > run_start and (self.is_word(items[i - 1], "async", "get", "set") or self.is_op(items[i - 1], "*")):
                        start = i - 1
                        lead = [self.leaf(items[i - 1])]
                    flush(start)
                    children = lead + self.flat(item)
                    children.append(self._formal_parameters(items[i + 1]))
                    children.extend(ret_nodes)
                    children.append(self.block_of(items[body_idx], "statement_block"))
                    members.append(CstNode.wrap("method_definition", children))
                    i = body_idx + 1
                    run_start = i
                    continue
            i += 1
        flush(n)
        return self.group_node(group, "object", members)

    def _arrow_at(self, items: list, i: int, prev_value: bool):
        """Arrow function starting at items[i], or None."""
        j = i
        async_tok = None
        if self.is_word(items[j], "async") and j + 1 < len(items):
            async_tok = items[j]
            j += 1
        params = self._peek(items, j)
        if params is None:
            return None
        if not (self.is_group(params, "paren") or (self.is_word(params) and params.text not in self.keywords)):
            return None
        k = j + 1
        if self.is_group(params, "paren"):
            # Only paren params can carry a return-type annotation;
            # `name: (...) => T` is a function type on `name`.
            k2, type_nodes = self._arrow_return_type(items, k)
        else:
            k2, type_nodes = k, []
        if not self.is_op(self._peek(items, k2), "=>"):
            return None
        if self._is_type_context(items, i):
            return None
        children: list[CstNode] = []
        if async_tok is not None:
            children.append(self.leaf(async_tok))
        if self.is_group(params, "paren"):
            children.append(self._formal_parameters(params))
        else:
            children.append(self.leaf(params))
        children.extend(type_nodes)
        children.append(self.leaf(items[k2]))  # '=>'
        k2 += 1
        body = self._peek(items, k2)
        if self.is_group(body, "brace"):
            children.append(self.block_of(body, "statement_block"))
            k2 += 1
        else:
            end = k2
            depth_break = {",", ";", ":"}
            while end < len(items):
                nxt = items[end]
                if self.is_op(nxt, *depth_break):
                    break
                end += 1
            children.extend(self._expr_nodes(items[k2:end]))
            k2 = end
        return CstNode.wrap("arrow_function", children), k2

    def _arrow_return_type(self, items, k):
        return k, []

    def _is_type_context(self, items: list, i: int) -> bool:
        return False


class TsParser(JsParser):
    """TypeScript: JS plus type declarations; type annotations tolerated."""

    language_id = "typescript"

    def _language_statement(self, items, i):
        word = items[i].text
        if word == "interface":
            return self._interface(items, i)
        if word == "type" and self.is_word(self._peek(items, i + 1)):
            return self._type_alias(items, i)
        if word == "enum" or (word == "const" and self.is_word(self._peek(items, i + 1), "enum")):
            if word == "const":
                return None  # handled by _declaration unless enum follows
            return self._enum(items, i)
        if word in ("namespace", "module") and self.is_word(self._peek(items, i + 1)):
            return self._namespace(items, i)
        if word == "declare":
            kw = self.leaf(items[i])
            inner, j = self.parse_statement(items, i + 1)
            children = [kw] + ([inner] if isinstance(inner, CstNode) else list(inner or []))
            return CstNode.wrap("ambient_declaration", children), j
        if word == "abstract" and self.is_word(self._peek(items, i + 1), "class"):
            return self._class(items, i, "class_declaration")
        return None

    def parse_statement(self, items: list, i: int):
        # `const enum X {...}`
        if self.is_word(items[i], "const") and self.is_word(self._peek(items, i + 1), "enum"):
            return self._enum(items, i)
        return super().parse_statement(items, i)

    def _interface(self, items: list, i: int):
        children = [self.leaf(items[i])]
        j = i + 1
        while j < len(items) and not self.is_group(items[j], "brace"):
            children.extend(self.flat(items[j]))
            j += 1
        if j < len(items):
            # Interface bodies are type-level: no value expressions inside.
            children.append(self.group_node(items[j], "interface_body", self.flat(items[j].items)))
            j += 1
        return CstNode.wrap("interface_declaration", children), j

    def _type_alias(self, items: list, i: int):
        end = _statement_end(items, i + 1, _JS_STMT_STARTERS)
        children = [self.leaf(items[i])] + self.flat(items[i + 1 : end])
        return CstNode.wrap("type_alias_declaration", children), end

    def _enum(self, items: list, i: int):
        children = [self.leaf(items[i])]
        j = i + 1
        while j < len(items) and not self.is_group(items[j], "brace"):
            children.extend(self.flat(items[j]))
            j += 1
        if j < len(items):
            children.append(self.group_node(items[j], "enum_body", self._expr_nodes(items[j].items)))
            j += 1
        return CstNode.wrap("enum_declaration", children), j

    def _namespace(self, items: list, i: int):
        children = [self.leaf(items[i])]
        j = i + 1
        while j < len(items) and not self.is_group(items[j], "brace"):
            children.extend(self.flat(items[j]))
            j += 1
        if j < len(items):
            children.append(self.block_of(items[j], "statement_block"))
            j += 1
        return CstNode.wrap("internal_module", children), j

    # Type parameters (`<T, U extends X>`) and annotations are consumed
    # token-wise so functions and methods parse cleanly around them.

    def _skip_type_params(self, items, j, children):
        if not self.is_op(self._peek(items, j), "<"):
            return j
        depth = 0
        n = len(items)
        while j < n:
            item = items[j]
            if self.is_op(item, "<"):
                depth += 1
            elif self.is_op(item, ">"):
                depth -= 1
            elif self.is_op(item, ">>"):
                depth -= 2
            elif self.is_op(item, ">>>"):
                depth -= 3
            elif self.is_op(item, ";") or self.is_group(item, "brace"):
                break
            children.extend(self.flat(item))
            j += 1
            if depth <= 0:
                break
        return j

    def _skip_type_params_index(self, items, j):
        sink: list[CstNode] = []
        return self._skip_type_params(items, j, sink)

    def _skip_return_type(self, items, j, children):
        if self.is_op(self._peek(items, j), ":"):
            children.append(self.leaf(items[j]))
            j += 1
            j = self._consume_type(items, j, children)
        return j

    def _skip_return_type_index(self, items, j, children):
        return self._skip_return_type(items, j, children)

    def _consume_type(self, items, j, children) -> int:
        # Consume a type expression conservatively: names, dots, unions,
        # generic brackets, and groups, stopping at '{', '=>', ';', '='
        # or a brace group. Commas only belong to the type inside <...>.
        n = len(items)
        angle = 0
        while j < n:
            item = items[j]
            if isinstance(item, _Group):
                if item.kind == "brace":
                    break
                children.extend(self.flat(item))
                j += 1
                continue
            if self.is_op(item, "<"):
                angle += 1
            elif self.is_op(item, ">"):
                angle = max(0, angle - 1)
            elif self.is_op(item, ">>"):
                angle = max(0, angle - 2)
            elif self.is_op(item, ">>>"):
                angle = max(0, angle - 3)
            elif self.is_op(item, ","):
                if angle == 0:
                    break
            elif self.is_op(item, "=>", ";", "="):
                break
            elif not (item.kind == NAME or self.is_op(item, ".", "|", "&", "?", "!")):
                break
            children.extend(self.flat(item))
            j += 1
        return j

    def _arrow_return_type(self, items, k):
        if not self.is_op(self._peek(items, k), ":"):
            return k, []
        nodes = [self.leaf(items[k])]
        j = self._consume_type(items, k + 1, nodes)
        return j, nodes

    def _is_type_context(self, items: list, i: int) -> bool:
        # `x: (a) => b` is a function type, not an arrow function.
        return i > 0 and self.is_op(items[i - 1], ":", "|", "&")


class JavaParser(_CParser):
    language_id = "java"
    keywords = _JAVA_KEYWORDS
    literals = {"true": "true", "false": "false", "null": "null_literal"}

    _TYPE_KEYWORDS = {
        "class": "class_declaration",
        "interface": "interface_declaration",
        "enum": "enum_declaration",
        "record": "record_declaration",
    }

    def parse_statements(self, items: list) -> list[CstNode]:
        nodes: list[CstNode] = []
        i = 0
        n = len(items)
        while i < n:
            node, i = self._statement(items, i)
            if isinstance(node, list):
                nodes.extend(node)
            elif node is not None:
                nodes.append(node)
        return nodes

    def _statement(self, items: list, i: int):
        item = items[i]
        if self.is_op(item, ";"):
            return self.leaf(item), i + 1
        if self.is_group(item, "brace"):
            return self.block_of(item, "block"), i + 1
        if self.is_op(item, "@"):
            return self._annotation(items, i)
        if self.is_word(item):
            word = item.text
            if word == "package":
                return self._run(items, i, "package_declaration")
            if word == "import":
                return self._run(items, i, "import_declaration")
            decl = self._type_decl_at(items, i)
            if decl is not None:
                return decl
            if word == "for":
                return self._for(items, i)
            if word == "while":
                return self._while_like(items, i, "while_statement")
            if word == "do":
                return self._do(items, i)
            if word == "if":
                return self._if(items, i)
            if word == "switch":
                return self._while_like(items, i, "switch_expression", body="switch_block")
            if word == "try":
                return self._try(items, i)
            if word == "synchronized" and self.is_group(self._peek(items, i + 1), "paren"):
                return self._while_like(items, i, "synchronized_statement")
            if word in ("return", "throw"):
                return self._run(items, i, f"{word}_statement")
            if word in ("break", "continue"):
                return self._run(items, i, f"{word}_statement")
            if word in ("case", "default"):
                return self._case_label(items, i)
        return self._expression_statement(items, i)

    @staticmethod
    def _peek(items, i):
        return items[i] if i < len(items) else None

    def _run(self, items: list, i: int, type_name: str):
        j = i + 1
        n = len(items)
        while j < n and not self.is_op(items[j], ";"):
            j += 1
        children = [self.leaf(items[i])] + self._expr_nodes(items[i + 1 : j])
        if j < n:
            children.append(self.leaf(items[j]))
            j += 1
        return CstNode.wrap(type_name, children), j

    def _case_label(self, items: list, i: int):
        leaves = [self.leaf(items[i])]
        j = i + 1
        n = len(items)
        while j < n and not self.is_op(items[j], ":", "->"):
            leaves.extend(self.flat(items[j]))
            j += 1
        if j < n:
            leaves.append(self.leaf(items[j]))
            j += 1
        return leaves, j

    def _expression_statement(self, items: list, i: int):
        n = len(items)
        j = i
        while j < n and not self.is_op(items[j], ";"):
            if self.is_group(items[j], "brace") and j > i:
                # `new Foo() { ... }` and array initializers end a unit.
                j += 1
                break
            if self.is_word(items[j], "for", "while", "do", "if", "switch", "try", "return", "throw", "case", "default") and j > i:
                break
            j += 1
        if j < n and self.is_op(items[j], ";"):
            j += 1
        if j == i:
            j = i + 1
        children = self._expr_nodes(items[i:j])
        if not children:
            return None, j
        return CstNode.wrap("expression_statement", children), j

    def _annotation(self, items: list, i: int):
        children = [self.leaf(items[i])]
        j = i + 1
        n = len(items)
        if j < n and self.is_word(items[j], "interface"):
            # '@interface Name { ... }' annotation type declaration.
            children.append(self.leaf(items[j]))
            j += 1
            while j < n and not self.is_group(items[j], "brace"):
                children.extend(self.flat(items[j]))
                j += 1
            if j < n:
                children.append(self.group_node(items[j], "annotation_type_body", self.flat(items[j].items)))
                j += 1
            return CstNode.wrap("annotation_type_declaration", children), j
        # One dotted name only: @com.example.Anno
        if j < n and self.is_word(items[j]):
            children.append(self.leaf(items[j]))
            j += 1
            while j + 1 < n and self.is_op(items[j], ".") and self.is_word(items[j + 1]):
                children.append(self.leaf(items[j]))
                children.append(self.leaf(items[j + 1]))
                j += 2
        if j < n and self.is_group(items[j], "paren"):
            children.append(self.group_node(items[j], "annotation_argument_list", self._expr_nodes(items[j].items), named=False))
            j += 1
            return CstNode.wrap("annotation", children), j
        return CstNode.wrap("marker_annotation", children), j

    def _type_decl_at(self, items: list, i: int, enclosing: str | None = None):
        """Parse a type declaration if one starts at i (modifiers allowed)."""
        j = i
        n = len(items)
        lead: list[CstNode] = []
        while j < n:
            item = items[j]
            if self.is_op(item, "@"):
                node, j = self._annotation(items, j)
                if node.type_name == "annotation_type_declaration":
                    return (lead + [node] if lead else node), j
                lead.append(node)
                continue
            if self.is_word(item) and item.text in _JAVA_MODIFIERS:
                lead.append(self.leaf(item))
                j += 1
                continue
            break
        if j < n and self.is_word(items[j]) and items[j].text in self._TYPE_KEYWORDS:
            return self._type_declaration(items, j, lead)
        return None

    def _type_declaration(self, items: list, j: int, lead: list[CstNode]):
        n = len(items)
        kw = items[j]
        type_name = self._TYPE_KEYWORDS[kw.text]
        children = lead + [self.leaf(kw)]
        j += 1
        name = None
        if j < n and self.is_word(items[j]):
            name = items[j].text
            children.append(self.leaf(items[j]))
            j += 1
        if kw.text == "record" and j < n and self.is_group(items[j], "paren"):
            children.append(self.group_node(items[j], "formal_parameters", self._expr_nodes(items[j].items)))
            j += 1
        while j < n and not self.is_group(items[j], "brace"):
            if self.is_op(items[j], ";"):
                children.append(self.leaf(items[j]))
                j += 1
                return CstNode.wrap(type_name, children), j
            children.extend(self.flat(items[j]))
            j += 1
        if j < n:
            if kw.text == "enum":
                children.append(self._enum_body(items[j], name))
            else:
                children.append(self._class_body(items[j], name))
            j += 1
        return CstNode.wrap(type_name, children), j

    def _class_body(self, group: _Group, type_name_str: str | None) -> CstNode:
        members: list[CstNode] = []
        items = group.items
        i = 0
        n = len(items)
        while i < n:
            member, i = self._member(items, i, type_name_str)
            if isinstance(member, list):
                members.extend(member)
            elif member is not None:
                members.append(member)
        return self.group_node(group, "class_body", members)

    def _enum_body(self, group: _Group, type_name_str: str | None) -> CstNode:
        items = group.items
        split = len(items)
        for idx, item in enumerate(items):
            if self.is_op(item, ";"):
                split = idx
                break
        constant_nodes = self._expr_nodes(items[:split])
        members: list[CstNode] = list(constant_nodes)
        i = split
        n = len(items)
        while i < n:
            if self.is_op(items[i], ";"):
                members.append(self.leaf(items[i]))
                i += 1
                continue
            member, i = self._member(items, i, type_name_str)
            if isinstance(member, list):
                members.extend(member)
            elif member is not None:
                members.append(member)
        return self.group_node(group, "enum_body", members)

    def _member(self, items: list, i: int, enclosing: str | None):
        n = len(items)
        if self.is_op(items[i], ";"):
            return self.leaf(items[i]), i + 1
        decl = self._type_decl_at(items, i)
        if decl is not None:
            return decl
        # Static/instance initializer blocks.
        if self.is_group(items[i], "brace"):
            return self.block_of(items[i], "block"), i + 1
        if self.is_word(items[i], "static") and self.is_group(self._peek(items, i + 1), "brace"):
            node = CstNode.wrap("static_initializer", [self.leaf(items[i]), self.block_of(items[i + 1], "block")])
            return node, i + 2
        # Scan one member unit: until ';' at top, or a body brace.
        lead: list[CstNode] = []
        j = i
        while j < n:
            item = items[j]
            if self.is_op(item, "@"):
                node, j = self._annotation(items, j)
                lead.append(node)
                continue
            break
        unit_start = j
        paren_idx = None
        saw_eq = False
        k = j
        while k < n:
            item = items[k]
            if self.is_op(item, ";"):
                break
            if self.is_op(item, "="):
                saw_eq = True
            if isinstance(item, _Group) and item.kind == "paren" and paren_idx is None and not saw_eq:
                paren_idx = k
            if isinstance(item, _Group) and item.kind == "brace" and not saw_eq:
                break
            k += 1
        unit = items[unit_start:k]
        has_body = k < n and self.is_group(items[k], "brace") and not saw_eq
        if paren_idx is not None and not saw_eq:
            # Method or constructor.
            children = list(lead)
            name_item = items[paren_idx - 1] if paren_idx > unit_start else None
            for idx in range(unit_start, paren_idx):
                if idx == paren_idx - 1 and self.is_word(items[idx]):
                    children.append(self.leaf(items[idx]))
                else:
                    children.extend(self.flat(items[idx]))
            children.append(self.group_node(items[paren_idx], "formal_parameters", self._expr_nodes(items[paren_idx].items)))
            idx = paren_idx + 1
            while idx < k:
                children.extend(self.flat(items[idx]))
                idx += 1
            if has_body:
                children.append(self.block_of(items[k], "block"))
                k += 1
            elif k < n and self.is_op(items[k], ";"):
                children.append(self.leaf(items[k]))
                k += 1
            is_ctor = (
                name_item is not None
                and self.is_word(name_item)
                and enclosing is not None
                and name_item.text == enclosing
                and paren_idx - unit_start == 1 + sum(
                    1 for idx in range(unit_start, paren_idx - 1)
                    if self.is_word(items[idx]) and items[idx].text in _JAVA_MODIFIERS
                )
            )
            type_name = "constructor_declaration" if is_ctor else "method_declaration"
            return CstNode.wrap(type_name, children), k
        # Field (or stray tokens).
        children = list(lead)
        children.extend(self._expr_nodes(unit))
        if has_body:
            children.extend(self._expr_nodes([items[k]]))
            k += 1
        if k < n and self.is_op(items[k], ";"):
            children.append(self.leaf(items[k]))
            k += 1
        if not children:
            return None, max(k, i + 1)
        if k == i:
            return self.flat(items[i]), i + 1
        return CstNode.wrap("field_declaration", children), k

    # ---- statements inside bodies ------------------------------------------------

    def _for(self, items: list, i: int):
        children = [self.leaf(items[i])]
        j = i + 1
        type_name = "for_statement"
        if self.is_group(self._peek(items, j), "paren"):
            header = items[j]
            has_semi = any(self.is_op(it, ";") for it in header.items)
            depth_colon = any(self.is_op(it, ":") for it in header.items)
            type_name = "enhanced_for_statement" if depth_colon and not has_semi else "for_statement"
            children.append(self.group_node(header, "parenthesized_expression", self._expr_nodes(header.items), named=False))
            j += 1
        body, j = self._statement(items, j)
        if isinstance(body, CstNode):
            children.append(body)
        elif isinstance(body, list):
            children.extend(body)
        return CstNode.wrap(type_name, children), j

    def _while_like(self, items: list, i: int, type_name: str, body: str = "block"):
        children = [self.leaf(items[i])]
        j = i + 1
        if self.is_group(self._peek(items, j), "paren"):
            children.append(self.group_node(items[j], "parenthesized_expression", self._expr_nodes(items[j].items), named=False))
            j += 1
        if self.is_group(self._peek(items, j), "brace"):
            children.append(self.block_of(items[j], body))
            j += 1
        else:
            stmt, j = self._statement(items, j)
            if isinstance(stmt, CstNode):
                children.append(stmt)
            elif isinstance(stmt, list):
                children.extend(stmt)
        return CstNode.wrap(type_name, children), j

    def _do(self, items: list, i: int):
        children = [self.leaf(items[i])]
        j = i + 1
        if self.is_group(self._peek(items, j), "brace"):
            children.append(self.block_of(items[j], "block"))
            j += 1
        if self.is_word(self._peek(items, j), "while"):
            children.append(self.leaf(items[j]))
            j += 1
            if self.is_group(self._peek(items, j), "paren"):
                children.append(self.group_node(items[j], "parenthesized_expression", self._expr_nodes(items[j].items), named=False))
                j += 1
            if self.is_op(self._peek(items, j), ";"):
                children.append(self.leaf(items[j]))
                j += 1
        return CstNode.wrap("do_statement", children), j

    def _if(self, items: list, i: int):
        children = [self.leaf(items[i])]
        j = i + 1
        if self.is_group(self._peek(items, j), "paren"):
            children.append(self.group_node(items[j], "parenthesized_expression", self._expr_nodes(items[j].items), named=False))
            j += 1
        body, j = self._statement(items, j)
        if isinstance(body, CstNode):
            children.append(body)
        elif isinstance(body, list):
            children.extend(body)
        if self.is_word(self._peek(items, j), "else"):
            children.append(self.leaf(items[j]))
            j += 1
            else_body, j = self._statement(items, j)
            if isinstance(else_body, CstNode):
                children.append(else_body)
            elif isinstance(else_body, list):
                children.extend(else_body)
        return CstNode.wrap("if_statement", children), j

    def _try(self, items: list, i: int):
        children = [self.leaf(items[i])]
        j = i + 1
        if self.is_group(self._peek(items, j), "paren"):
            # try-with-resources
            children.append(self.group_node(items[j], "resource_specification", self._expr_nodes(items[j].items), named=False))
            j += 1
        if self.is_group(self._peek(items, j), "brace"):
            children.append(self.block_of(items[j], "block"))
            j += 1
        while self.is_word(self._peek(items, j), "catch"):
            sub = [self.leaf(items[j])]
            j += 1
            if self.is_group(self._peek(items, j), "paren"):
                sub.append(self.group_node(items[j], "catch_formal_parameter", self._expr_nodes(items[j].items), named=False))
                j += 1
            if self.is_group(self._peek(items, j), "brace"):
                sub.append(self.block_of(items[j], "block"))
                j += 1
            children.append(CstNode.wrap("catch_clause", sub))
        if self.is_word(self._peek(items, j), "finally"):
            sub = [self.leaf(items[j])]
            j += 1
            if self.is_group(self._peek(items, j), "brace"):
                sub.append(self.block_of(items[j], "block"))
                j += 1
            children.append(CstNode.wrap("finally_clause", sub))
        return CstNode.wrap("try_statement", children), j

    # ---- expression scanning ----------------------------------------------------

    def _expr_nodes(self, items: list) -> list[CstNode]:
        nodes: list[CstNode] = []
        i = 0
        n = len(items)
        while i < n:
            item = items[i]
            # Lambdas: params -> body (but not switch arrows: case X ->).
            if self.is_op(item, "->") and nodes:
                prev_is_case = i >= 2 and self.is_word(items[i - 2], "case", "default")
                if i >= 1 and not prev_is_case and self._lambda_params_ok(items[i - 1]):
                    params = nodes.pop()
                    children = [params, self.leaf(item)]
                    i += 1
                    if i < n and self.is_group(items[i], "brace"):
                        children.append(self.block_of(items[i], "block"))
                        i += 1
                    else:
                        end = i
                        while end < n and not self.is_op(items[end], ",", ";", ")"):
                            end += 1
                        children.extend(self._expr_nodes(items[i:end]))
                        i = end
                    nodes.append(CstNode.wrap("lambda_expression", children))
                    continue
            if self.is_op(item, "@"):
                node, i = self._annotation(items, i)
                nodes.append(node)
                continue
            if self.is_word(item, "new"):
                node, i = self._object_creation(items, i)
                nodes.append(node)
                continue
            if self.is_word(item, "switch"):
                node, i = self._while_like(items, i, "switch_expression", body="switch_block")
                nodes.append(node)
                continue
            if isinstance(item, _Group):
                if item.kind == "brace":
                    nodes.append(self.group_node(item, "array_initializer", self._expr_nodes(item.items)))
                else:
                    inner = self._expr_nodes(item.items)
                    nodes.append(self.group_node(item, item.kind, inner, named=False))
                i += 1
                continue
            nodes.append(self.leaf(item))
            i += 1
        return nodes

    def _lambda_params_ok(self, item) -> bool:
        if self.is_group(item, "paren"):
            return True
        return self.is_word(item) and item.text not in _JAVA_KEYWORDS

    def _object_creation(self, items: list, i: int):
        children = [self.leaf(items[i])]
        j = i + 1
        n = len(items)
        while j < n and (self.is_word(items[j]) or self.is_op(items[j], ".", "<", ">", ",", "[", "]") or self.is_group(items[j], "bracket")):
            children.extend(self.flat(items[j]))
            j += 1
        if j < n and self.is_group(items[j], "paren"):
            children.append(self.group_node(items[j], "argument_list", self._expr_nodes(items[j].items), named=False))
            j += 1
            if j < n and self.is_group(items[j], "brace"):
                # Anonymous class body.
                children.append(self._class_body(items[j], None))
                j += 1
        elif j < n and self.is_group(items[j], "brace"):
            children.append(self.group_node(items[j], "array_initializer", self._expr_nodes(items[j].items)))
            j += 1
        return CstNode.wrap("object_creation_expression", children), j
