"""Builtin metric catalogs, exercised on in-memory snapshots."""

from datetime import date, datetime, timezone

import pytest

from codevo.engine import CATEGORICAL, NUMERIC, fold_categorical
from codevo.cst import get_language, parse_snapshot
from codevo.errors import UnsupportedLanguage
from codevo.metrics import builtin_registry, builtin_set, is_test_file
from codevo.repo import CommitRef, FileBlob

COMMIT = CommitRef(
    hash="b" * 40,
    committer_date=datetime(2021, 1, 1, tzinfo=timezone.utc),
    author_date=datetime(2021, 1, 1, tzinfo=timezone.utc),
)


def snapshot(language: str, files: dict[str, str]):
    spec = get_language(language)
    blobs = [FileBlob(path=p, content=c.encode()) for p, c in files.items()]
    return parse_snapshot(blobs, spec, COMMIT, date(2021, 1, 1))


def run_metric(language: str, name: str, files: dict[str, str]):
    pc = snapshot(language, files)
    for definition, evaluator in builtin_set(language).metrics:
        if definition.name == name:
            return definition, evaluator(pc)
    raise AssertionError(f"no such builtin metric: {name}")


def test_every_language_has_a_set():
    for lang in ("python", "javascript", "typescript", "java"):
        s = builtin_set(lang)
        assert s.metrics, lang
        names = [d.name for d, _ in s.metrics]
        assert len(names) == len(set(names))


def test_unknown_language_rejected():
    with pytest.raises(UnsupportedLanguage):
        builtin_set("ruby")


def test_python_set_contains_named_metrics():
    names = [d.name for d, _ in builtin_set("python").metrics]
    for wanted in ("Lines of code", "Test files", "Data structures", "Loops"):
        assert wanted in names


def test_empty_snapshot_never_crashes():
    for lang in ("python", "javascript", "typescript", "java"):
        pc = snapshot(lang, {})
        for definition, evaluator in builtin_set(lang).metrics:
            result = evaluator(pc)
            if definition.kind == NUMERIC:
                assert result == 0, definition.name
            else:
                assert result == [], definition.name


def test_registry_builder_round_trip():
    reg = builtin_registry("java")
    assert len(reg) == len(builtin_set("java").metrics)


def test_builtins_use_only_public_query_surface():
    # No reaching into grammar internals: the catalog is built purely on
    # the ParsedCommit/CstNode query API.
    import inspect

    import codevo.metrics as metrics_module

    source = inspect.getsource(metrics_module)
    for private in ("python_parser", "clike_parser", "tokens", "_ExprParser", "lex_"):
        assert private not in source


# -- test-file heuristic -------------------------------------------------------


@pytest.mark.parametrize(
    "path,expected",
    [
        ("tests/test_api.py", True),
        ("src/test/java/FooTest.java", True),  # "test" path segment
        ("test_sampler.py", True),
        ("pkg/util_test.go", True),
        ("src/app.test.ts", True),
        ("src/api.spec.ts", True),
        ("src/app.py", False),
        ("contest/entry.py", False),
        ("testers/util.py", False),
        ("attest.py", False),
    ],
)
def test_is_test_file(path, expected):
    assert is_test_file(path) is expected


def test_test_files_metric():
    _, value = run_metric(
        "python",
        "Test files",
        {
            "tests/test_a.py": "x = 1\n",
            "util_test.py": "y = 2\n",
            "app.py": "z = 3\n",
        },
    )
    assert value == 2


# -- python ---------------------------------------------------------------------


def test_python_loc_and_files():
    files = {"a.py": "x = 1\n\ny = 2\n", "b.py": "z = 3\n"}
    assert run_metric("python", "Lines of code", files)[1] == 3
    assert run_metric("python", "Source files", files)[1] == 2
    assert run_metric("python", "LOC per file", files)[1] == 1.5


def test_python_data_structures():
    definition, labels = run_metric(
        "python", "Data structures", {"a.py": "d = {}\nl = [1]\ns = {1}\nt = (1, 2)\nl2 = [2]\n"}
    )
    assert definition.kind == CATEGORICAL
    assert fold_categorical(labels) == {"dictionary": 1, "list": 2, "set": 1, "tuple": 1}


def test_python_loops():
    _, labels = run_metric(
        "python", "Loops", {"a.py": "for i in x:\n    pass\nwhile y:\n    pass\nfor j in z:\n    pass\n"}
    )
    assert fold_categorical(labels) == {"for_statement": 2, "while_statement": 1}


def test_python_async_functions():
    _, value = run_metric(
        "python",
        "Async functions",
        {"a.py": "async def a():\n    pass\n\nasync def b():\n    pass\n\ndef c():\n    pass\n"},
    )
    assert value == 2


def test_python_decorated_functions():
    src = (
        "@pytest.fixture\ndef f():\n    pass\n\n"
        "@pytest.mark.slow\ndef g():\n    pass\n\n"
        "@property\ndef h(self):\n    pass\n\n"
        "@dataclass\nclass C:\n    pass\n"
    )
    _, labels = run_metric("python", "Decorated functions", {"a.py": src})
    # The class decorator is excluded: only decorated *functions* count.
    assert fold_categorical(labels) == {"@pytest": 2, "@property": 1}


def test_python_functional_features():
    src = (
        "f = lambda x: x\n"
        "g = lambda: 0\n"
        "def gen():\n    yield 1\n"
        "lc = [i for i in r]\n"
        "dc = {k: v for k in r}\n"
    )
    _, labels = run_metric("python", "Functional features", {"a.py": src})
    assert fold_categorical(labels) == {
        "lambda": 2,
        "yield": 1,
        "list_comprehension": 1,
        "dictionary_comprehension": 1,
    }


def test_python_function_parameters_median():
    src = "def a(x):\n    pass\n\ndef b(x, y, z):\n    pass\n\ndef c(x, y):\n    pass\n"
    _, value = run_metric("python", "Function parameters", {"a.py": src})
    assert value == 2


def test_python_comments_count():
    _, value = run_metric("python", "Comments", {"a.py": "# one\nx = 1  # two\n"})
    assert value == 2


# -- javascript -------------------------------------------------------------------


def test_js_variable_declarations():
    _, labels = run_metric("javascript", "Variable declarations", {"a.js": "const a=1; var b=2;\n"})
    assert fold_categorical(labels) == {"const": 1, "var": 1}


def test_js_variable_declarations_full_trio():
    src = "const a = 1;\nlet b = 2;\nvar c = 3;\nconst d = 4;\n"
    _, labels = run_metric("javascript", "Variable declarations", {"a.js": src})
    assert fold_categorical(labels) == {"const": 2, "let": 1, "var": 1}


def test_js_arrow_vs_classic():
    src = (
        "const f = (x) => x;\n"
        "function g() {}\n"
        "const h = function () {};\n"
        "class C { m() {} }\n"
    )
    _, labels = run_metric("javascript", "Arrow vs classic functions", {"a.js": src})
    assert fold_categorical(labels) == {"arrow": 1, "classic": 3}


def test_js_classes_count():
    src = "class A {}\nclass B extends A {}\nconst C = class {};\n"
    _, value = run_metric("javascript", "Classes", {"a.js": src})
    assert value == 3


# -- typescript --------------------------------------------------------------------


def test_ts_type_declarations():
    src = "interface I {}\ntype T = string;\nenum E { A }\ninterface J {}\n"
    _, labels = run_metric("typescript", "Type declarations", {"a.ts": src})
    assert fold_categorical(labels) == {"interface": 2, "type_alias": 1, "enum": 1}


def test_ts_inherits_js_metrics():
    names = [d.name for d, _ in builtin_set("typescript").metrics]
    assert "Variable declarations" in names
    assert "Arrow vs classic functions" in names


# -- java --------------------------------------------------------------------------


def test_java_type_declarations():
    src = (
        "class A {}\n"
        "interface B {}\n"
        "enum C { X }\n"
        "record D(int x) {}\n"
    )
    _, labels = run_metric("java", "Type declarations", {"A.java": src})
    assert fold_categorical(labels) == {"class": 1, "interface": 1, "enum": 1, "record": 1}


def test_java_methods_count():
    src = "class A {\n    void x() {}\n    int y() { return 1; }\n    A() {}\n}\n"
    _, value = run_metric("java", "Methods", {"A.java": src})
    assert value == 2  # constructor not counted


def test_java_loops():
    src = (
        "class A {\n    void m(int[] xs) {\n"
        "        for (int x : xs) {}\n"
        "        for (int i = 0; i < 3; i++) {}\n"
        "        while (true) {}\n"
        "        do {} while (false);\n"
        "    }\n}\n"
    )
    _, labels = run_metric("java", "Loops", {"A.java": src})
    assert fold_categorical(labels) == {
        "enhanced_for_statement": 1,
        "for_statement": 1,
        "while_statement": 1,
        "do_statement": 1,
    }
