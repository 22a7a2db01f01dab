"""Name casing for derived ontology IRIs (design decision D5).

Names are tokenized on `-`, `_`, `.` and camel-case boundaries, then
reassembled: PascalCase for classes, camelCase for properties. Property
local names keep an underscore between the parent and child component
(`compound` + `name` -> `compound_name`).
"""

from __future__ import annotations

import re

_SEPARATORS = re.compile(r"[-_.]+")
_CASE_BOUNDARY = re.compile(r"(?<=[a-z0-9])(?=[A-Z])|(?<=[A-Z])(?=[A-Z][a-z])")


def split_name(name: str) -> list[str]:
    tokens = []
    for part in _SEPARATORS.split(name):
        if not part:
            continue
        for token in _CASE_BOUNDARY.split(part):
            if token:
                tokens.append(token.lower())
    return tokens


def pascal_case(name: str) -> str:
    return "".join(t.capitalize() for t in split_name(name))


def camel_case(name: str) -> str:
    tokens = split_name(name)
    if not tokens:
        return ""
    return tokens[0] + "".join(t.capitalize() for t in tokens[1:])
