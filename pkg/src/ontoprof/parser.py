"""Recursive-descent parser for OWL 2 functional-style syntax.

Whole-document parse into an immutable Ontology.  On any error the parser
raises OntologyParseError carrying positioned diagnostics; no partial model
is ever returned.  Unknown top-level constructs (e.g. rules) are preserved
verbatim as non-logical axioms.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .model import (
    OWL, RDF, RDFS, XSD,
    AnnotationAssertion, AnnotationPropertyDomain, AnnotationPropertyRange,
    AnonymousIndividual, AsymmetricObjectProperty, Axiom, ClassAssertion,
    ClassExpression, DataComplementOf, DataIntersectionOf, DataOneOf,
    DataPropertyAssertion, DataPropertyDomain, DataPropertyRange, DataRange,
    DataRestriction, DataUnionOf, DatatypeDefinition, DatatypeRef,
    DatatypeRestriction, Declaration, DifferentIndividuals, DisjointClasses,
    DisjointDataProperties, DisjointObjectProperties, DisjointUnion, Entity,
    EntityKind, EquivalentClasses, EquivalentDataProperties,
    EquivalentObjectProperties, FunctionalDataProperty, FunctionalObjectProperty,
    HasKey, Individual, InverseFunctionalObjectProperty, InverseObjectProperties,
    IriRef, IrreflexiveObjectProperty, Literal, NamedClass,
    NegativeDataPropertyAssertion, NegativeObjectPropertyAssertion,
    ObjectAllValuesFrom, ObjectComplementOf, ObjectExactCardinality,
    ObjectHasSelf, ObjectHasValue, ObjectIntersectionOf, ObjectInverseOf,
    ObjectMaxCardinality, ObjectMinCardinality, ObjectOneOf,
    ObjectPropertyAssertion, ObjectPropertyDomain, ObjectPropertyExpression,
    ObjectPropertyRange, ObjectSomeValuesFrom, ObjectUnionOf, Ontology,
    OntologyAnnotation, PropertyChain, ReflexiveObjectProperty, SameIndividual,
    SubAnnotationPropertyOf, SubClassOf, SubDataPropertyOf, SubObjectPropertyOf,
    SymmetricObjectProperty, TransitiveObjectProperty, UnknownAxiom,
)

STANDARD_PREFIXES = {
    "owl:": OWL,
    "rdf:": RDF,
    "rdfs:": RDFS,
    "xsd:": XSD,
}


@dataclass(frozen=True)
class ParseDiagnostic:
    severity: str  # "error" | "warning"
    line: int
    column: int
    message: str
    origin: str = "<string>"

    def format(self) -> str:
        return f"{self.origin}:{self.line}:{self.column}: {self.severity}: {self.message}"


class OntologyParseError(Exception):
    """Parse failure; .diagnostics holds at least one positioned error."""

    def __init__(self, diagnostics: list[ParseDiagnostic]):
        super().__init__("; ".join(d.format() for d in diagnostics))
        self.diagnostics = diagnostics


# ---------------------------------------------------------------------------
# Lexer.

@dataclass(frozen=True)
class _Token:
    kind: str
    value: str
    line: int
    col: int
    start: int
    end: int


_NAME_RE = re.compile(r"([A-Za-z][A-Za-z0-9_.\-]*)?:([A-Za-z0-9_.\-]*)")
_IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9]*")
_INT_RE = re.compile(r"[0-9]+")
_NODEID_RE = re.compile(r"_:([A-Za-z0-9_.\-]+)")
_LANGTAG_RE = re.compile(r"@([A-Za-z]+(?:-[A-Za-z0-9]+)*)")


class _Lexer:
    def __init__(self, text: str, origin: str):
        self.text = text
        self.origin = origin
        self.pos = 0
        self.line = 1
        self.col = 1

    def error(self, message: str):
        raise OntologyParseError([ParseDiagnostic(
            "error", self.line, self.col, f"lexical error: {message}", self.origin)])

    def _advance(self, n: int):
        chunk = self.text[self.pos:self.pos + n]
        newlines = chunk.count("\n")
        if newlines:
            self.line += newlines
            self.col = n - chunk.rfind("\n")
        else:
            self.col += n
        self.pos += n

    def tokens(self) -> list[_Token]:
        out: list[_Token] = []
        text = self.text
        while self.pos < len(text):
            ch = text[self.pos]
            if ch in " \t\r\n":
                self._advance(1)
                continue
            if ch == "#":
                end = text.find("\n", self.pos)
                self._advance((end if end >= 0 else len(text)) - self.pos)
                continue
            line, col, start = self.line, self.col, self.pos
            if ch in "()=":
                kinds = {"(": "LPAREN", ")": "RPAREN", "=": "EQUALS"}
                self._advance(1)
                out.append(_Token(kinds[ch], ch, line, col, start, self.pos))
                continue
            if text.startswith("^^", self.pos):
                self._advance(2)
                out.append(_Token("DTMARK", "^^", line, col, start, self.pos))
                continue
            if ch == "<":
                end = text.find(">", self.pos + 1)
                if end < 0 or "\n" in text[self.pos:end]:
                    self.error("unterminated IRI")
                iri = text[self.pos + 1:end]
                self._advance(end + 1 - self.pos)
                out.append(_Token("IRI", iri, line, col, start, self.pos))
                continue
            if ch == '"':
                value = self._string()
                out.append(_Token("STRING", value, line, col, start, self.pos))
                continue
            if ch == "@":
                m = _LANGTAG_RE.match(text, self.pos)
                if not m:
                    self.error("malformed language tag")
                self._advance(m.end() - self.pos)
                out.append(_Token("LANGTAG", m.group(1), line, col, start, self.pos))
                continue
            if ch == "_" and text.startswith("_:", self.pos):
                m = _NODEID_RE.match(text, self.pos)
                if not m:
                    self.error("malformed anonymous individual")
                self._advance(m.end() - self.pos)
                out.append(_Token("NODEID", m.group(1), line, col, start, self.pos))
                continue
            m = _NAME_RE.match(text, self.pos)
            if m:
                self._advance(m.end() - self.pos)
                out.append(_Token("PNAME", m.group(0), line, col, start, self.pos))
                continue
            m = _IDENT_RE.match(text, self.pos)
            if m:
                self._advance(m.end() - self.pos)
                out.append(_Token("IDENT", m.group(0), line, col, start, self.pos))
                continue
            m = _INT_RE.match(text, self.pos)
            if m:
                self._advance(m.end() - self.pos)
                out.append(_Token("INT", m.group(0), line, col, start, self.pos))
                continue
            self.error(f"unexpected character {ch!r}")
        out.append(_Token("EOF", "", self.line, self.col, self.pos, self.pos))
        return out

    def _string(self) -> str:
        text = self.text
        i = self.pos + 1
        parts: list[str] = []
        while i < len(text):
            c = text[i]
            if c == "\\":
                if i + 1 >= len(text) or text[i + 1] not in '"\\':
                    self.error("invalid escape in string literal")
                parts.append(text[i + 1])
                i += 2
                continue
            if c == '"':
                self._advance(i + 1 - self.pos)
                return "".join(parts)
            parts.append(c)
            i += 1
        self.error("unterminated string literal")
        raise AssertionError("unreachable")


# ---------------------------------------------------------------------------
# Parser.

_ENTITY_KEYWORDS = {
    "Class": EntityKind.CLASS,
    "Datatype": EntityKind.DATATYPE,
    "ObjectProperty": EntityKind.OBJECT_PROPERTY,
    "DataProperty": EntityKind.DATA_PROPERTY,
    "AnnotationProperty": EntityKind.ANNOTATION_PROPERTY,
    "NamedIndividual": EntityKind.NAMED_INDIVIDUAL,
}

_DATA_RESTRICTION_KEYWORDS = {
    "DataSomeValuesFrom", "DataAllValuesFrom", "DataHasValue",
    "DataMinCardinality", "DataMaxCardinality", "DataExactCardinality",
}

_DATA_RANGE_KEYWORDS = {
    "DataIntersectionOf", "DataUnionOf", "DataComplementOf", "DataOneOf",
    "DatatypeRestriction",
}

# Keywords that are valid somewhere in the grammar but never as an axiom;
# seeing one at axiom level is a syntax error, not an unknown construct.
_NON_AXIOM_KEYWORDS = _DATA_RESTRICTION_KEYWORDS | _DATA_RANGE_KEYWORDS | set(_ENTITY_KEYWORDS) | {
    "ObjectIntersectionOf", "ObjectUnionOf", "ObjectComplementOf", "ObjectOneOf",
    "ObjectSomeValuesFrom", "ObjectAllValuesFrom", "ObjectHasValue", "ObjectHasSelf",
    "ObjectMinCardinality", "ObjectMaxCardinality", "ObjectExactCardinality",
    "ObjectInverseOf", "ObjectPropertyChain", "Prefix", "Ontology",
}


class _Parser:
    def __init__(self, text: str, origin: str):
        self.text = text
        self.origin = origin
        self.tokens = _Lexer(text, origin).tokens()
        self.i = 0
        self.prefixes = dict(STANDARD_PREFIXES)

    # -- token plumbing -----------------------------------------------------

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        if tok.kind != "EOF":
            self.i += 1
        return tok

    def fail(self, message: str, tok: _Token | None = None, kind: str = "syntax error"):
        tok = tok or self.peek()
        raise OntologyParseError([ParseDiagnostic(
            "error", tok.line, tok.col, f"{kind}: {message}", self.origin)])

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            self.fail(f"expected {what}, found {tok.value!r}" if tok.value
                      else f"expected {what}, found end of input")
        return self.advance()

    def at_keyword(self, *names: str) -> bool:
        tok = self.peek()
        return tok.kind == "IDENT" and tok.value in names

    # -- IRIs and prefixes --------------------------------------------------

    def resolve(self, tok: _Token) -> str:
        if tok.kind == "IRI":
            return tok.value
        name = tok.value
        prefix, _, local = name.partition(":")
        prefix += ":"
        base = self.prefixes.get(prefix)
        if base is None:
            self.fail(f"prefix {prefix!r} is not declared", tok, kind="unresolved prefix")
        return base + local

    def parse_iri(self, what: str = "IRI") -> str:
        tok = self.peek()
        if tok.kind not in ("IRI", "PNAME"):
            self.fail(f"expected {what}, found {tok.value!r}")
        return self.resolve(self.advance())

    # -- document -----------------------------------------------------------

    def parse_document(self) -> Ontology:
        while self.at_keyword("Prefix"):
            self.parse_prefix_declaration()
        if not self.at_keyword("Ontology"):
            self.fail("expected Ontology(...) document")
        self.advance()
        self.expect("LPAREN", "'('")
        iri = version = None
        if self.peek().kind in ("IRI", "PNAME"):
            iri = self.parse_iri("ontology IRI")
            if self.peek().kind in ("IRI", "PNAME"):
                version = self.parse_iri("version IRI")
        imports: list[str] = []
        annotations: list[OntologyAnnotation] = []
        axioms: list[Axiom] = []
        while True:
            tok = self.peek()
            if tok.kind == "RPAREN":
                self.advance()
                break
            if tok.kind == "EOF":
                self.fail("unexpected end of input inside Ontology(...)")
            if self.at_keyword("Import"):
                self.advance()
                self.expect("LPAREN", "'('")
                imports.append(self.parse_iri("import IRI"))
                self.expect("RPAREN", "')'")
            elif self.at_keyword("Annotation"):
                annotations.append(self.parse_ontology_annotation())
            else:
                axioms.append(self.parse_axiom())
        tok = self.peek()
        if tok.kind != "EOF":
            self.fail(f"unexpected trailing content {tok.value!r}")
        return Ontology(axioms=tuple(axioms), iri=iri, version_iri=version,
                        imports=tuple(imports), annotations=tuple(annotations))

    def parse_prefix_declaration(self):
        self.advance()
        self.expect("LPAREN", "'('")
        tok = self.expect("PNAME", "prefix name")
        name = tok.value
        if not name.endswith(":"):
            self.fail("prefix declaration must end with ':'", tok)
        self.expect("EQUALS", "'='")
        target = self.expect("IRI", "full IRI")
        self.expect("RPAREN", "')'")
        self.prefixes[name] = target.value

    # -- annotations ----------------------------------------------------------

    def parse_ontology_annotation(self) -> OntologyAnnotation:
        self.advance()  # Annotation
        self.expect("LPAREN", "'('")
        self.skip_inline_annotations()
        prop = self.parse_iri("annotation property")
        value = self.parse_annotation_value()
        self.expect("RPAREN", "')'")
        return OntologyAnnotation(prop=prop, value=value)

    def skip_inline_annotations(self):
        while self.at_keyword("Annotation"):
            self.parse_ontology_annotation()

    def parse_annotation_value(self):
        tok = self.peek()
        if tok.kind == "STRING":
            return self.parse_literal()
        if tok.kind == "NODEID":
            self.advance()
            return AnonymousIndividual(tok.value)
        return IriRef(self.parse_iri("annotation value"))

    # -- shared pieces ----------------------------------------------------------

    def parse_literal(self) -> Literal:
        tok = self.expect("STRING", "literal")
        nxt = self.peek()
        if nxt.kind == "DTMARK":
            self.advance()
            return Literal(tok.value, datatype=self.parse_iri("datatype IRI"))
        if nxt.kind == "LANGTAG":
            self.advance()
            return Literal(tok.value, language=nxt.value)
        return Literal(tok.value)

    def parse_individual(self) -> Individual:
        tok = self.peek()
        if tok.kind == "NODEID":
            self.advance()
            return AnonymousIndividual(tok.value)
        return self.parse_iri("individual")

    def parse_object_property(self) -> ObjectPropertyExpression:
        if self.at_keyword("ObjectInverseOf"):
            self.advance()
            self.expect("LPAREN", "'('")
            prop = self.parse_iri("object property")
            self.expect("RPAREN", "')'")
            return ObjectInverseOf(prop)
        return self.parse_iri("object property")

    def parse_data_range(self) -> DataRange:
        tok = self.peek()
        if tok.kind == "IDENT" and tok.value in _DATA_RANGE_KEYWORDS:
            self.advance()
            self.expect("LPAREN", "'('")
            if tok.value == "DataComplementOf":
                dr = DataComplementOf(self.parse_data_range())
                self.expect("RPAREN", "')'")
                return dr
            if tok.value == "DataOneOf":
                literals = []
                while self.peek().kind == "STRING":
                    literals.append(self.parse_literal())
                if not literals:
                    self.fail("DataOneOf needs at least one literal", tok, kind="arity violation")
                self.expect("RPAREN", "')'")
                return DataOneOf(tuple(literals))
            if tok.value == "DatatypeRestriction":
                datatype = self.parse_iri("datatype IRI")
                facets = []
                while self.peek().kind != "RPAREN":
                    facet = self.parse_iri("facet IRI")
                    facets.append((facet, self.parse_literal()))
                if not facets:
                    self.fail("DatatypeRestriction needs at least one facet", tok,
                              kind="arity violation")
                self.expect("RPAREN", "')'")
                return DatatypeRestriction(datatype, tuple(facets))
            operands = []
            while self.peek().kind != "RPAREN":
                operands.append(self.parse_data_range())
            if len(operands) < 2:
                self.fail(f"{tok.value} needs at least two operands", tok,
                          kind="arity violation")
            self.expect("RPAREN", "')'")
            cls = DataIntersectionOf if tok.value == "DataIntersectionOf" else DataUnionOf
            return cls(tuple(operands))
        return DatatypeRef(self.parse_iri("data range"))

    # -- class expressions -------------------------------------------------------

    def parse_class_expression(self) -> ClassExpression:
        tok = self.peek()
        if tok.kind in ("IRI", "PNAME"):
            return NamedClass(self.parse_iri("class"))
        if tok.kind != "IDENT":
            self.fail(f"expected class expression, found {tok.value!r}")
        name = tok.value
        handler = getattr(self, f"_ce_{name}", None)
        if name in _DATA_RESTRICTION_KEYWORDS:
            return self._parse_data_restriction(name)
        if handler is None:
            self.fail(f"unknown class expression constructor {name!r}", tok)
        self.advance()
        self.expect("LPAREN", "'('")
        result = handler(tok)
        self.expect("RPAREN", "')'")
        return result

    def _nary_expressions(self, tok: _Token, minimum: int) -> tuple[ClassExpression, ...]:
        operands = []
        while self.peek().kind != "RPAREN":
            operands.append(self.parse_class_expression())
        if len(operands) < minimum:
            self.fail(f"{tok.value} needs at least {minimum} operands", tok,
                      kind="arity violation")
        return tuple(operands)

    def _ce_ObjectIntersectionOf(self, tok):
        return ObjectIntersectionOf(self._nary_expressions(tok, 2))

    def _ce_ObjectUnionOf(self, tok):
        return ObjectUnionOf(self._nary_expressions(tok, 2))

    def _ce_ObjectComplementOf(self, tok):
        return ObjectComplementOf(self.parse_class_expression())

    def _ce_ObjectOneOf(self, tok):
        individuals = []
        while self.peek().kind != "RPAREN":
            individuals.append(self.parse_individual())
        if not individuals:
            self.fail("ObjectOneOf needs at least one individual", tok,
                      kind="arity violation")
        return ObjectOneOf(tuple(individuals))

    def _ce_ObjectSomeValuesFrom(self, tok):
        return ObjectSomeValuesFrom(self.parse_object_property(), self.parse_class_expression())

    def _ce_ObjectAllValuesFrom(self, tok):
        return ObjectAllValuesFrom(self.parse_object_property(), self.parse_class_expression())

    def _ce_ObjectHasValue(self, tok):
        return ObjectHasValue(self.parse_object_property(), self.parse_individual())

    def _ce_ObjectHasSelf(self, tok):
        return ObjectHasSelf(self.parse_object_property())

    def _cardinality(self, cls, tok):
        n_tok = self.expect("INT", "non-negative integer")
        prop = self.parse_object_property()
        filler = None
        if self.peek().kind != "RPAREN":
            filler = self.parse_class_expression()
        return cls(int(n_tok.value), prop, filler)

    def _ce_ObjectMinCardinality(self, tok):
        return self._cardinality(ObjectMinCardinality, tok)

    def _ce_ObjectMaxCardinality(self, tok):
        return self._cardinality(ObjectMaxCardinality, tok)

    def _ce_ObjectExactCardinality(self, tok):
        return self._cardinality(ObjectExactCardinality, tok)

    def _parse_data_restriction(self, name: str) -> DataRestriction:
        tok = self.advance()
        self.expect("LPAREN", "'('")
        if name in ("DataMinCardinality", "DataMaxCardinality", "DataExactCardinality"):
            n = int(self.expect("INT", "non-negative integer").value)
            prop = self.parse_iri("data property")
            rng = None
            if self.peek().kind != "RPAREN":
                rng = self.parse_data_range()
            self.expect("RPAREN", "')'")
            return DataRestriction(kind=name, props=(prop,), range=rng, n=n)
        if name == "DataHasValue":
            prop = self.parse_iri("data property")
            value = self.parse_literal()
            self.expect("RPAREN", "')'")
            return DataRestriction(kind=name, props=(prop,), value=value)
        # DataSomeValuesFrom / DataAllValuesFrom allow several data properties
        # followed by a data range; when the range is a bare datatype IRI it is
        # the last IRI before the closing paren.
        iris = [self.parse_iri("data property")]
        while self.peek().kind in ("IRI", "PNAME"):
            iris.append(self.parse_iri("data property"))
        if self.peek().kind == "RPAREN":
            if len(iris) < 2:
                self.fail(f"{name} needs a data property and a data range", tok,
                          kind="arity violation")
            props, rng = tuple(iris[:-1]), DatatypeRef(iris[-1])
        else:
            props, rng = tuple(iris), self.parse_data_range()
        self.expect("RPAREN", "')'")
        return DataRestriction(kind=name, props=props, range=rng)

    # -- axioms ----------------------------------------------------------------

    def parse_axiom(self) -> Axiom:
        tok = self.peek()
        if tok.kind != "IDENT":
            self.fail(f"expected axiom, found {tok.value!r}")
        handler = getattr(self, f"_ax_{tok.value}", None)
        if handler is None:
            if tok.value in _NON_AXIOM_KEYWORDS:
                self.fail(f"{tok.value!r} cannot appear as an axiom", tok)
            return self._unknown_construct()
        self.advance()
        self.expect("LPAREN", "'('")
        self.skip_inline_annotations()
        axiom = handler(tok)
        self.expect("RPAREN", "')'")
        return axiom

    def _unknown_construct(self) -> UnknownAxiom:
        name_tok = self.advance()
        open_tok = self.expect("LPAREN", "'('")
        depth = 1
        end = open_tok.end
        while depth:
            tok = self.advance()
            if tok.kind == "EOF":
                self.fail(f"unterminated construct {name_tok.value!r}", name_tok)
            if tok.kind == "LPAREN":
                depth += 1
            elif tok.kind == "RPAREN":
                depth -= 1
            end = tok.end
        return UnknownAxiom(name=name_tok.value, text=self.text[name_tok.start:end])

    def _class_operands(self, tok, minimum=2) -> tuple[ClassExpression, ...]:
        operands = []
        while self.peek().kind != "RPAREN":
            operands.append(self.parse_class_expression())
        if len(operands) < minimum:
            self.fail(f"{tok.value} needs at least {minimum} class expressions", tok,
                      kind="arity violation")
        return tuple(operands)

    def _property_operands(self, tok, minimum=2) -> tuple[ObjectPropertyExpression, ...]:
        operands = []
        while self.peek().kind != "RPAREN":
            operands.append(self.parse_object_property())
        if len(operands) < minimum:
            self.fail(f"{tok.value} needs at least {minimum} object properties", tok,
                      kind="arity violation")
        return tuple(operands)

    def _data_property_operands(self, tok, minimum=2) -> tuple[str, ...]:
        operands = []
        while self.peek().kind != "RPAREN":
            operands.append(self.parse_iri("data property"))
        if len(operands) < minimum:
            self.fail(f"{tok.value} needs at least {minimum} data properties", tok,
                      kind="arity violation")
        return tuple(operands)

    def _individual_operands(self, tok, minimum=2) -> tuple[Individual, ...]:
        operands = []
        while self.peek().kind != "RPAREN":
            operands.append(self.parse_individual())
        if len(operands) < minimum:
            self.fail(f"{tok.value} needs at least {minimum} individuals", tok,
                      kind="arity violation")
        return tuple(operands)

    # Class axioms.

    def _ax_SubClassOf(self, tok):
        operands = self._class_operands(tok, 2)
        if len(operands) != 2:
            self.fail("SubClassOf takes exactly two class expressions", tok,
                      kind="arity violation")
        return SubClassOf(operands[0], operands[1])

    def _ax_EquivalentClasses(self, tok):
        return EquivalentClasses(self._class_operands(tok, 2))

    def _ax_DisjointClasses(self, tok):
        return DisjointClasses(self._class_operands(tok, 2))

    def _ax_DisjointUnion(self, tok):
        cls = self.parse_iri("class")
        return DisjointUnion(cls, self._class_operands(tok, 2))

    # Object property axioms.

    def _ax_SubObjectPropertyOf(self, tok):
        if self.at_keyword("ObjectPropertyChain"):
            chain_tok = self.advance()
            self.expect("LPAREN", "'('")
            sub = PropertyChain(self._property_operands(chain_tok, 2))
            self.expect("RPAREN", "')'")
        else:
            sub = self.parse_object_property()
        return SubObjectPropertyOf(sub, self.parse_object_property())

    def _ax_EquivalentObjectProperties(self, tok):
        return EquivalentObjectProperties(self._property_operands(tok, 2))

    def _ax_DisjointObjectProperties(self, tok):
        return DisjointObjectProperties(self._property_operands(tok, 2))

    def _ax_InverseObjectProperties(self, tok):
        return InverseObjectProperties(self.parse_object_property(),
                                       self.parse_object_property())

    def _ax_ObjectPropertyDomain(self, tok):
        return ObjectPropertyDomain(self.parse_object_property(),
                                    self.parse_class_expression())

    def _ax_ObjectPropertyRange(self, tok):
        return ObjectPropertyRange(self.parse_object_property(),
                                   self.parse_class_expression())

    def _ax_FunctionalObjectProperty(self, tok):
        return FunctionalObjectProperty(self.parse_object_property())

    def _ax_InverseFunctionalObjectProperty(self, tok):
        return InverseFunctionalObjectProperty(self.parse_object_property())

    def _ax_ReflexiveObjectProperty(self, tok):
        return ReflexiveObjectProperty(self.parse_object_property())

    def _ax_IrreflexiveObjectProperty(self, tok):
        return IrreflexiveObjectProperty(self.parse_object_property())

    def _ax_SymmetricObjectProperty(self, tok):
        return SymmetricObjectProperty(self.parse_object_property())

    def _ax_AsymmetricObjectProperty(self, tok):
        return AsymmetricObjectProperty(self.parse_object_property())

    def _ax_TransitiveObjectProperty(self, tok):
        return TransitiveObjectProperty(self.parse_object_property())

    # Data property axioms.

    def _ax_SubDataPropertyOf(self, tok):
        return SubDataPropertyOf(self.parse_iri("data property"),
                                 self.parse_iri("data property"))

    def _ax_EquivalentDataProperties(self, tok):
        return EquivalentDataProperties(self._data_property_operands(tok, 2))

    def _ax_DisjointDataProperties(self, tok):
        return DisjointDataProperties(self._data_property_operands(tok, 2))

    def _ax_DataPropertyDomain(self, tok):
        return DataPropertyDomain(self.parse_iri("data property"),
                                  self.parse_class_expression())

    def _ax_DataPropertyRange(self, tok):
        return DataPropertyRange(self.parse_iri("data property"), self.parse_data_range())

    def _ax_FunctionalDataProperty(self, tok):
        return FunctionalDataProperty(self.parse_iri("data property"))

    # Other schema axioms.

    def _ax_DatatypeDefinition(self, tok):
        return DatatypeDefinition(self.parse_iri("datatype"), self.parse_data_range())

    def _ax_HasKey(self, tok):
        ce = self.parse_class_expression()
        self.expect("LPAREN", "'('")
        object_props = []
        while self.peek().kind != "RPAREN":
            object_props.append(self.parse_object_property())
        self.expect("RPAREN", "')'")
        self.expect("LPAREN", "'('")
        data_props = []
        while self.peek().kind != "RPAREN":
            data_props.append(self.parse_iri("data property"))
        self.expect("RPAREN", "')'")
        if not object_props and not data_props:
            self.fail("HasKey needs at least one key property", tok, kind="arity violation")
        return HasKey(ce, tuple(object_props), tuple(data_props))

    # Assertions.

    def _ax_SameIndividual(self, tok):
        return SameIndividual(self._individual_operands(tok, 2))

    def _ax_DifferentIndividuals(self, tok):
        return DifferentIndividuals(self._individual_operands(tok, 2))

    def _ax_ClassAssertion(self, tok):
        return ClassAssertion(self.parse_class_expression(), self.parse_individual())

    def _ax_ObjectPropertyAssertion(self, tok):
        return ObjectPropertyAssertion(self.parse_object_property(),
                                       self.parse_individual(), self.parse_individual())

    def _ax_NegativeObjectPropertyAssertion(self, tok):
        return NegativeObjectPropertyAssertion(self.parse_object_property(),
                                               self.parse_individual(),
                                               self.parse_individual())

    def _ax_DataPropertyAssertion(self, tok):
        return DataPropertyAssertion(self.parse_iri("data property"),
                                     self.parse_individual(), self.parse_literal())

    def _ax_NegativeDataPropertyAssertion(self, tok):
        return NegativeDataPropertyAssertion(self.parse_iri("data property"),
                                             self.parse_individual(), self.parse_literal())

    # Non-logical axioms.

    def _ax_Declaration(self, tok):
        kind_tok = self.peek()
        if kind_tok.kind != "IDENT" or kind_tok.value not in _ENTITY_KEYWORDS:
            self.fail(f"expected entity kind, found {kind_tok.value!r}")
        self.advance()
        self.expect("LPAREN", "'('")
        iri = self.parse_iri("entity IRI")
        self.expect("RPAREN", "')'")
        return Declaration(Entity(iri, _ENTITY_KEYWORDS[kind_tok.value]))

    def _ax_AnnotationAssertion(self, tok):
        prop = self.parse_iri("annotation property")
        subject_tok = self.peek()
        if subject_tok.kind == "NODEID":
            self.advance()
            subject = AnonymousIndividual(subject_tok.value)
        else:
            subject = IriRef(self.parse_iri("annotation subject"))
        return AnnotationAssertion(prop, subject, self.parse_annotation_value())

    def _ax_SubAnnotationPropertyOf(self, tok):
        return SubAnnotationPropertyOf(self.parse_iri("annotation property"),
                                       self.parse_iri("annotation property"))

    def _ax_AnnotationPropertyDomain(self, tok):
        return AnnotationPropertyDomain(self.parse_iri("annotation property"),
                                        self.parse_iri("IRI"))

    def _ax_AnnotationPropertyRange(self, tok):
        return AnnotationPropertyRange(self.parse_iri("annotation property"),
                                       self.parse_iri("IRI"))


def parse_ontology(text: str, origin: str = "<string>") -> Ontology:
    """Parse one functional-syntax document; raises OntologyParseError."""
    return _Parser(text, origin).parse_document()
