"""Neutrosophic ALC reasoner (C++ core)."""

from ._nalc import (
    Concept,
    InvalidKnowledgeBase,
    KnowledgeBase,
    OracleLimit,
    ParseError,
    Reasoner,
    ResourceExhausted,
    UnsupportedQuery,
    degree,
    entails,
    expand,
    format_concept,
    glb,
    lub,
    nnf,
    normalize_query,
    oracle_entails,
    parse_concept,
    parse_kb,
    satisfiable,
    subsumes,
)

__all__ = [
    "Concept",
    "InvalidKnowledgeBase",
    "KnowledgeBase",
    "OracleLimit",
    "ParseError",
    "Reasoner",
    "ResourceExhausted",
    "UnsupportedQuery",
    "degree",
    "entails",
    "expand",
    "format_concept",
    "glb",
    "lub",
    "nnf",
    "normalize_query",
    "oracle_entails",
    "parse_concept",
    "parse_kb",
    "satisfiable",
    "subsumes",
]
