"""Tokenizer for the agent language. Tracks line/column for diagnostics."""

from __future__ import annotations

from dataclasses import dataclass

# Token types
ATOM = "ATOM"
VAR = "VAR"
INT = "INT"
INTERNAL = "INTERNAL"   # `.name` immediately followed by an identifier
PUNCT = "PUNCT"
EOF = "EOF"

_PUNCT2 = ("<-", "==", "\\==", "<=", ">=")
_PUNCT1 = "()[],.;:+-!?~&@<>"


class LexError(Exception):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Token:
    type: str
    value: str
    line: int
    col: int

    def __repr__(self):
        return f"{self.type}({self.value!r})@{self.line}:{self.col}"


def tokenize(source: str) -> list[Token]:
    tokens: list[Token] = []
    i, n = 0, len(source)
    line, col = 1, 1

    def advance(k: int):
        nonlocal i, line, col
        for _ in range(k):
            if i < n and source[i] == "\n":
                line += 1
                col = 1
            else:
                col += 1
            i += 1

    while i < n:
        c = source[i]
        if c in " \t\r\n":
            advance(1)
            continue
        if c == "/" and source.startswith("//", i):
            j = source.find("\n", i)
            advance((j - i) if j != -1 else (n - i))
            continue
        if c == "/" and source.startswith("/*", i):
            j = source.find("*/", i + 2)
            if j == -1:
                raise LexError("unterminated block comment", line, col)
            advance(j + 2 - i)
            continue
        if c.islower():
            j = i
            while j < n and (source[j].isalnum() or source[j] == "_"):
                j += 1
            tokens.append(Token(ATOM, source[i:j], line, col))
            advance(j - i)
            continue
        if c.isupper() or c == "_":
            j = i
            while j < n and (source[j].isalnum() or source[j] == "_"):
                j += 1
            tokens.append(Token(VAR, source[i:j], line, col))
            advance(j - i)
            continue
        if c.isdigit():
            j = i
            while j < n and source[j].isdigit():
                j += 1
            tokens.append(Token(INT, source[i:j], line, col))
            advance(j - i)
            continue
        if c == "." and i + 1 < n and source[i + 1].islower():
            j = i + 1
            while j < n and (source[j].isalnum() or source[j] == "_"):
                j += 1
            tokens.append(Token(INTERNAL, source[i + 1:j], line, col))
            advance(j - i)
            continue
        two = source[i:i + 2]
        three = source[i:i + 3]
        if three == "\\==":
            tokens.append(Token(PUNCT, three, line, col))
            advance(3)
            continue
        if two in _PUNCT2:
            tokens.append(Token(PUNCT, two, line, col))
            advance(2)
            continue
        if c in _PUNCT1:
            tokens.append(Token(PUNCT, c, line, col))
            advance(1)
            continue
        raise LexError(f"unexpected character {c!r}", line, col)

    tokens.append(Token(EOF, "", line, col))
    return tokens
