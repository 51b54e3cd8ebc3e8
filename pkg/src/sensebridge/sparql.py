"""Single-pattern SPARQL subset: parser, renderer, and evaluator.

Supported grammar (keywords case-insensitive, whitespace free-form):

    query    := prefix* select where
    prefix   := 'PREFIX' NAME ':' '<' iri '>'
    select   := 'SELECT' '?' NAME
    where    := 'WHERE' '{' subject predicate object '.' filter? '}'
    subject  := '<' iri '>' | '?' NAME
    predicate:= NAME ':' NAME
    object   := '?' NAME
    filter   := 'FILTER' '(' 'lang' '(' '?' NAME ')' '=' STRING ')'

The filter's language tag is trimmed and lowercased at parse time, so a
tag written with stray whitespace (e.g. ``"en "``) still filters on "en".
Evaluation matches the pattern against the (concept IRI, skos:prefLabel,
literal@lang) triples implied by a :class:`~sensebridge.skos.ConceptStore`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import QueryParseError
from .skos import SKOS_NS, ConceptStore

PREF_LABEL_IRI = SKOS_NS + "prefLabel"


@dataclass(frozen=True)
class IriTerm:
    iri: str


@dataclass(frozen=True)
class LiteralTerm:
    text: str
    lang: str | None = None


@dataclass(frozen=True)
class TriplePattern:
    subject: str | IriTerm  # variable name or concrete IRI
    predicate: tuple[str, str]  # (prefix, local name)
    object: str  # variable name


@dataclass(frozen=True)
class LangFilter:
    variable: str
    tag: str


@dataclass(frozen=True)
class QueryAst:
    prefixes: tuple[tuple[str, str], ...]
    select_var: str
    pattern: TriplePattern
    filter: LangFilter | None = None

    def prefix_map(self) -> dict[str, str]:
        return dict(self.prefixes)


@dataclass(frozen=True)
class BindingRow:
    bindings: dict[str, LiteralTerm | IriTerm]

    def __getitem__(self, variable: str) -> LiteralTerm | IriTerm:
        return self.bindings[variable]


# --- tokenizer -------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<iri><[^<>]*>)
  | (?P<string>"[^"]*")
  | (?P<name>[A-Za-z_][A-Za-z0-9_\-]*)
  | (?P<punct>[{}().=?:])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Token:
    kind: str
    value: str
    offset: int  # character offset into the query text


def _byte_offset(text: str, char_offset: int) -> int:
    return len(text[:char_offset].encode("utf-8"))


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise QueryParseError(_byte_offset(text, pos), f"unexpected character {text[pos]!r}")
        if match.lastgroup != "ws":
            tokens.append(_Token(match.lastgroup, match.group(), pos))
        pos = match.end()
    tokens.append(_Token("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def next(self) -> _Token:
        token = self.tokens[self.i]
        self.i += 1
        return token

    def error(self, token: _Token, message: str) -> QueryParseError:
        return QueryParseError(_byte_offset(self.text, token.offset), message)

    def expect(self, kind: str, value: str | None = None, what: str = "") -> _Token:
        token = self.next()
        if token.kind != kind or (value is not None and token.value != value):
            wanted = what or value or kind
            raise self.error(token, f"expected {wanted}, got {token.value!r}")
        return token

    def keyword(self) -> str:
        return self.peek().value.lower() if self.peek().kind == "name" else ""

    def variable(self) -> str:
        self.expect("punct", "?")
        return self.expect("name", what="variable name").value

    def parse(self) -> QueryAst:
        prefixes: list[tuple[str, str]] = []
        while self.keyword() == "prefix":
            self.next()
            name = self.expect("name", what="prefix name").value
            self.expect("punct", ":")
            iri = self.expect("iri", what="IRI").value[1:-1]
            prefixes.append((name, iri))
        declared = dict(prefixes)

        if self.keyword() != "select":
            raise self.error(self.peek(), "expected SELECT")
        self.next()
        select_var = self.variable()
        if self.peek().kind == "punct" and self.peek().value == "?":
            raise self.error(self.peek(), "multiple select variables are not supported")

        if self.keyword() != "where":
            raise self.error(self.peek(), "expected WHERE")
        self.next()
        self.expect("punct", "{")

        pattern = self._triple(declared)
        self.expect("punct", ".")

        filter_: LangFilter | None = None
        if self.keyword() == "filter":
            filter_ = self._filter(pattern)
        elif self.peek().kind in ("iri", "name") or (
            self.peek().kind == "punct" and self.peek().value == "?"
        ):
            raise self.error(self.peek(), "multiple triple patterns are not supported")

        self.expect("punct", "}")
        if self.peek().kind != "eof":
            raise self.error(self.peek(), "trailing content after query")

        pattern_vars = {pattern.object}
        if isinstance(pattern.subject, str):
            pattern_vars.add(pattern.subject)
        scoped = pattern_vars | ({filter_.variable} if filter_ else set())
        if select_var not in scoped:
            raise self.error(self.tokens[0], f"selected variable ?{select_var} is unused")
        return QueryAst(
            prefixes=tuple(prefixes), select_var=select_var, pattern=pattern, filter=filter_
        )

    def _triple(self, declared: dict[str, str]) -> TriplePattern:
        token = self.peek()
        if token.kind == "iri":
            subject: str | IriTerm = IriTerm(self.next().value[1:-1])
        elif token.kind == "punct" and token.value == "?":
            subject = self.variable()
        else:
            raise self.error(token, "expected subject (<iri> or ?variable)")

        pfx_token = self.expect("name", what="prefixed predicate")
        self.expect("punct", ":")
        local = self.expect("name", what="predicate local name").value
        if pfx_token.value not in declared:
            raise self.error(pfx_token, f"undeclared prefix {pfx_token.value!r}")

        obj = self.variable()
        return TriplePattern(subject=subject, predicate=(pfx_token.value, local), object=obj)

    def _filter(self, pattern: TriplePattern) -> LangFilter:
        self.next()  # FILTER
        self.expect("punct", "(")
        fn = self.expect("name", what="lang")
        if fn.value.lower() != "lang":
            raise self.error(fn, "only lang() filters are supported")
        self.expect("punct", "(")
        variable = self.variable()
        self.expect("punct", ")")
        self.expect("punct", "=")
        raw = self.expect("string", what="language tag string").value[1:-1]
        self.expect("punct", ")")
        pattern_vars = {pattern.object} | (
            {pattern.subject} if isinstance(pattern.subject, str) else set()
        )
        if variable not in pattern_vars:
            raise self.error(fn, f"FILTER references unbound variable ?{variable}")
        return LangFilter(variable=variable, tag=raw.strip().lower())


def parse_query(text: str) -> QueryAst:
    """Parse a query string; raises :class:`QueryParseError` with byte offset."""
    return _Parser(text).parse()


def render_query(ast: QueryAst) -> str:
    """Canonical single-line rendering; ``parse_query`` round-trips it."""
    parts = [f"PREFIX {name}: <{iri}>" for name, iri in ast.prefixes]
    parts.append(f"SELECT ?{ast.select_var}")
    subject = (
        f"<{ast.pattern.subject.iri}>"
        if isinstance(ast.pattern.subject, IriTerm)
        else f"?{ast.pattern.subject}"
    )
    triple = f"{subject} {ast.pattern.predicate[0]}:{ast.pattern.predicate[1]} ?{ast.pattern.object} ."
    body = triple
    if ast.filter:
        body += f' FILTER (lang(?{ast.filter.variable}) = "{ast.filter.tag}")'
    parts.append(f"WHERE {{ {body} }}")
    return "\n".join(parts)


def build_label_query(concept_iri: str, lang: str) -> QueryAst:
    """Query asking for a concept's preferred label in one language."""
    return QueryAst(
        prefixes=(("skos", SKOS_NS),),
        select_var="prefLabel",
        pattern=TriplePattern(
            subject=IriTerm(concept_iri), predicate=("skos", "prefLabel"), object="prefLabel"
        ),
        filter=LangFilter(variable="prefLabel", tag=lang.strip().lower()),
    )


def evaluate(store: ConceptStore, ast: QueryAst) -> list[BindingRow]:
    """Match the pattern against the store's prefLabel triples.

    Rows are ordered by (subject IRI, language tag); an empty list means
    no match.
    """
    prefixes = ast.prefix_map()
    prefix, local = ast.pattern.predicate
    predicate_iri = prefixes.get(prefix, "") + local
    if predicate_iri != PREF_LABEL_IRI:
        return []

    if isinstance(ast.pattern.subject, IriTerm):
        concept = store.concepts.get(ast.pattern.subject.iri)
        concepts = [concept] if concept is not None else []
    else:
        concepts = [store.concepts[iri] for iri in sorted(store.concepts)]

    rows: list[BindingRow] = []
    for concept in concepts:
        for lang in sorted(concept.pref_labels):
            bindings: dict[str, LiteralTerm | IriTerm] = {}
            if isinstance(ast.pattern.subject, str):
                bindings[ast.pattern.subject] = IriTerm(concept.iri)
            bindings[ast.pattern.object] = LiteralTerm(concept.pref_labels[lang], lang)
            if ast.filter is not None:
                value = bindings.get(ast.filter.variable)
                if not isinstance(value, LiteralTerm) or value.lang != ast.filter.tag:
                    continue
            rows.append(BindingRow(bindings={ast.select_var: bindings[ast.select_var]}))
    return rows
