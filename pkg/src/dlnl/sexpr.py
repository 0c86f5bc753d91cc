"""Minimal s-expression reader/writer for all file formats of the kernel."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError


@dataclass(frozen=True)
class Sym:
    name: str

    def __str__(self):
        return self.name


def tokenize(src: str):
    """Yield (token, position) pairs; ';' starts a comment to end of line."""
    i, n = 0, len(src)
    while i < n:
        c = src[i]
        if c.isspace():
            i += 1
        elif c == ";":
            while i < n and src[i] != "\n":
                i += 1
        elif c in "()":
            yield c, i
            i += 1
        else:
            j = i
            while j < n and not src[j].isspace() and src[j] not in "();":
                j += 1
            yield src[i:j], i
            i = j


def parse_many(src: str):
    """Parse every top-level s-expression in src."""
    stack = []
    out = []
    last = 0
    for tok, pos in tokenize(src):
        last = pos
        if tok == "(":
            stack.append([])
        elif tok == ")":
            if not stack:
                raise ParseError("unbalanced ')'", pos)
            done = stack.pop()
            (stack[-1] if stack else out).append(done)
        else:
            (stack[-1] if stack else out).append(Sym(tok))
    if stack:
        raise ParseError("unclosed '('", last)
    return out

def parse_sexpr(src: str):
    forms = parse_many(src)
    if len(forms) != 1:
        raise ParseError(f"expected exactly one expression, found {len(forms)}")
    return forms[0]


def sexpr_to_str(node) -> str:
    if isinstance(node, Sym):
        return node.name
    if isinstance(node, list):
        return "(" + " ".join(sexpr_to_str(x) for x in node) + ")"
    return str(node)
