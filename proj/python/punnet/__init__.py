"""Punning riddle generator: lexicon, homonym base, schemata, templates."""

from ._core import (
    CharResolution,
    GenerationConfig,
    HomonymBase,
    LexicalEntry,
    Lexicon,
    ParseError,
    Provenance,
    RealizedJoke,
    describe_schema,
    export_records,
    export_text,
    generate,
    parse_config,
    parse_records,
    regenerate,
    schema_names,
    template_names,
)

__all__ = [
    "CharResolution",
    "GenerationConfig",
    "HomonymBase",
    "LexicalEntry",
    "Lexicon",
    "ParseError",
    "Provenance",
    "RealizedJoke",
    "describe_schema",
    "export_records",
    "export_text",
    "generate",
    "parse_config",
    "parse_records",
    "regenerate",
    "schema_names",
    "template_names",
]
