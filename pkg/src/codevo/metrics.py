"""Predefined per-language metric sets used by the CLI.

Everything here is built on the public ParsedCommit query surface; the
exact grammar node-type names are confined to the tables below so a
grammar change touches one file.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from statistics import median

from .cst.snapshot import ParsedCommit
from .engine import CATEGORICAL, NUMERIC, Evaluator, MetricDef, MetricRegistry
from .errors import UnsupportedLanguage

# Node-type tables, per grammar.
PY_DATA_STRUCTURES = ("dictionary", "list", "set", "tuple")
PY_LOOPS = ("for_statement", "while_statement")
PY_FUNCTIONAL = (
    "lambda",
    "yield",
    "generator_expression",
    "list_comprehension",
    "dictionary_comprehension",
    "set_comprehension",
)
PY_FUNCTION = "function_definition"
PY_DECORATOR = "decorator"
PY_PARAMETERS = "parameters"

JS_DECLARATION_KINDS = ("lexical_declaration", "variable_declaration")
JS_ARROW = "arrow_function"
JS_CLASSIC_FUNCTIONS = (
    "function_declaration",
    "function_expression",
    "generator_function_declaration",
    "generator_function",
    "method_definition",
)
JS_CLASSES = ("class_declaration", "class")
TS_TYPE_DECLS = {
    "interface_declaration": "interface",
    "type_alias_declaration": "type_alias",
    "enum_declaration": "enum",
}

JAVA_TYPE_DECLS = {
    "class_declaration": "class",
    "interface_declaration": "interface",
    "enum_declaration": "enum",
    "record_declaration": "record",
}
JAVA_METHOD = "method_declaration"
JAVA_LOOPS = ("for_statement", "enhanced_for_statement", "while_statement", "do_statement")

_TEST_STEM_SUFFIXES = ("_test", ".test", ".spec")
_DECORATOR_PREFIX = re.compile(rb"^@\s*([A-Za-z_][A-Za-z0-9_]*)")


def is_test_file(path: str) -> bool:
    """Path-based test heuristic: test/tests segments, test_ prefix,
    or a stem ending in _test/.test/.spec."""
    parts = path.lower().split("/")
    if any(seg in ("test", "tests") for seg in parts[:-1]):
        return True
    filename = parts[-1]
    if filename.startswith("test_"):
        return True
    stem = filename.rsplit(".", 1)[0]
    return stem.endswith(_TEST_STEM_SUFFIXES)


@dataclass(frozen=True)
class BuiltinSet:
    language_id: str
    metrics: tuple[tuple[MetricDef, Evaluator], ...]

    def registry(self) -> MetricRegistry:
        registry = MetricRegistry()
        for definition, evaluator in self.metrics:
            registry.register(definition, evaluator)
        return registry


# -- shared evaluators ---------------------------------------------------------


def _loc(pc: ParsedCommit) -> float:
    return pc.loc


def _source_files(pc: ParsedCommit) -> float:
    return len(pc.files)


def _test_files(pc: ParsedCommit) -> float:
    return sum(1 for f in pc.files if is_test_file(f.path))


def _loc_per_file(pc: ParsedCommit) -> float:
    if not pc.files:
        return 0
    return median(f.loc for f in pc.files)


def _comments(pc: ParsedCommit) -> float:
    return pc.count_nodes("comment")


def _common_metrics() -> list[tuple[MetricDef, Evaluator]]:
    return [
        (MetricDef("Lines of code", NUMERIC), _loc),
        (MetricDef("Source files", NUMERIC), _source_files),
        (MetricDef("Test files", NUMERIC), _test_files),
        (MetricDef("LOC per file", NUMERIC, aggregate_hint="median"), _loc_per_file),
        (MetricDef("Comments", NUMERIC), _comments),
    ]


# -- python ---------------------------------------------------------------------


def _py_async_functions(pc: ParsedCommit) -> float:
    return len(
        pc.nodes_matching(
            lambda n: n.type_name == PY_FUNCTION and n.text.startswith(b"async")
        )
    )


def _py_decorated_functions(pc: ParsedCommit) -> list[str]:
    labels = []
    for node in pc.nodes_matching(lambda n: n.type_name == PY_DECORATOR):
        parent = node.parent
        if parent is None or not any(
            c.type_name == PY_FUNCTION for c in parent.named_children
        ):
            continue
        match = _DECORATOR_PREFIX.match(node.text)
        if match:
            labels.append("@" + match.group(1).decode("ascii"))
    return labels


def _py_function_parameters(pc: ParsedCommit) -> float:
    counts = []
    for fn in pc.nodes_matching(lambda n: n.type_name == PY_FUNCTION):
        params = fn.child_by_type(PY_PARAMETERS)
        if params is not None:
            counts.append(len(params.named_children))
    if not counts:
        return 0
    return median(counts)


def _python_metrics() -> list[tuple[MetricDef, Evaluator]]:
    return _common_metrics() + [
        (
            MetricDef("Data structures", CATEGORICAL),
            lambda pc: pc.find_node_types(PY_DATA_STRUCTURES),
        ),
        (MetricDef("Loops", CATEGORICAL), lambda pc: pc.find_node_types(PY_LOOPS)),
        (MetricDef("Async functions", NUMERIC), _py_async_functions),
        (MetricDef("Decorated functions", CATEGORICAL), _py_decorated_functions),
        (
            MetricDef("Functional features", CATEGORICAL),
            lambda pc: pc.find_node_types(PY_FUNCTIONAL),
        ),
        (
            MetricDef("Function parameters", NUMERIC, aggregate_hint="median"),
            _py_function_parameters,
        ),
    ]


# -- javascript / typescript ------------------------------------------------------


def _js_variable_declarations(pc: ParsedCommit) -> list[str]:
    labels = []
    for node in pc.nodes_matching(lambda n: n.type_name in JS_DECLARATION_KINDS):
        first = node.children[0] if node.children else None
        labels.append(first.type_name if first is not None else "var")
    return labels


def _js_functions(pc: ParsedCommit) -> list[str]:
    kinds = set(JS_CLASSIC_FUNCTIONS)
    labels = []
    for node in pc.walk_named():
        if node.type_name == JS_ARROW:
            labels.append("arrow")
        elif node.type_name in kinds:
            labels.append("classic")
    return labels


def _js_classes(pc: ParsedCommit) -> float:
    return pc.count_nodes(JS_CLASSES)


def _js_metrics() -> list[tuple[MetricDef, Evaluator]]:
    return _common_metrics() + [
        (MetricDef("Variable declarations", CATEGORICAL), _js_variable_declarations),
        (MetricDef("Arrow vs classic functions", CATEGORICAL), _js_functions),
        (MetricDef("Classes", NUMERIC), _js_classes),
    ]


def _ts_type_declarations(pc: ParsedCommit) -> list[str]:
    return [
        TS_TYPE_DECLS[n.type_name]
        for n in pc.walk_named()
        if n.type_name in TS_TYPE_DECLS
    ]


def _ts_metrics() -> list[tuple[MetricDef, Evaluator]]:
    return _js_metrics() + [
        (MetricDef("Type declarations", CATEGORICAL), _ts_type_declarations),
    ]


# -- java --------------------------------------------------------------------------


def _java_type_declarations(pc: ParsedCommit) -> list[str]:
    return [
        JAVA_TYPE_DECLS[n.type_name]
        for n in pc.walk_named()
        if n.type_name in JAVA_TYPE_DECLS
    ]


def _java_metrics() -> list[tuple[MetricDef, Evaluator]]:
    return _common_metrics() + [
        (MetricDef("Type declarations", CATEGORICAL), _java_type_declarations),
        (MetricDef("Methods", NUMERIC), lambda pc: pc.count_nodes(JAVA_METHOD)),
        (MetricDef("Loops", CATEGORICAL), lambda pc: pc.find_node_types(JAVA_LOOPS)),
    ]


_BUILDERS = {
    "python": _python_metrics,
    "javascript": _js_metrics,
    "typescript": _ts_metrics,
    "java": _java_metrics,
}


def builtin_set(language_id: str) -> BuiltinSet:
    """The predefined metric catalog for one language."""
    try:
        builder = _BUILDERS[language_id]
    except KeyError:
        raise UnsupportedLanguage(
            f"no builtin metrics for {language_id!r}; choose one of {', '.join(_BUILDERS)}"
        ) from None
    return BuiltinSet(language_id, tuple(builder()))


def builtin_registry(language_id: str) -> MetricRegistry:
    return builtin_set(language_id).registry()
