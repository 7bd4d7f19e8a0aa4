"""AST for the agent programming language subset, plus the canonical printer.

A program is a list of ground initial beliefs and a list of plans.  Plan
contexts are conjunctions of (possibly negated-as-failure) literals and
relational constraints; plan bodies are ordered step lists executed one step
per deliberation cycle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .terms import Literal, Term, Var, Int, Atom, Struct, ListTerm

TRIGGER_OPS = ("+", "-")
TRIGGER_KINDS = ("belief", "achievement", "test")
COMPARISON_OPS = ("==", "\\==", "<", "<=", ">", ">=")

#: Internal actions the parser accepts.  print/send/broadcast are part of the
#: language runtime; next_step/distance are environment-backed helpers.
INTERNAL_ACTIONS = ("print", "send", "broadcast", "next_step", "distance")


@dataclass(frozen=True)
class TriggeringEvent:
    op: str                    # "+" or "-"
    kind: str                  # "belief" | "achievement" | "test"
    literal: Literal

    def __post_init__(self):
        if self.op not in TRIGGER_OPS:
            raise ValueError(f"bad trigger op {self.op!r}")
        if self.kind not in TRIGGER_KINDS:
            raise ValueError(f"bad trigger kind {self.kind!r}")

    def signature(self) -> tuple:
        return (self.op, self.kind, self.literal.functor, self.literal.arity)


@dataclass(frozen=True)
class ContextLiteral:
    """A context condition `l` or `not l` checked against the belief base."""
    literal: Literal
    naf: bool = False          # negation as failure


@dataclass(frozen=True)
class ContextComparison:
    op: str
    left: Term
    right: Term


ContextItem = Union[ContextLiteral, ContextComparison]


# Body steps ----------------------------------------------------------------

@dataclass(frozen=True)
class ActionStep:
    """Environment action, e.g. move(right)."""
    literal: Literal


@dataclass(frozen=True)
class AchieveStep:
    literal: Literal


@dataclass(frozen=True)
class TestStep:
    literal: Literal


@dataclass(frozen=True)
class AddBeliefStep:
    literal: Literal


@dataclass(frozen=True)
class DeleteBeliefStep:
    literal: Literal


@dataclass(frozen=True)
class InternalStep:
    name: str
    args: tuple[Term, ...]


BodyStep = Union[ActionStep, AchieveStep, TestStep, AddBeliefStep, DeleteBeliefStep, InternalStep]


@dataclass(frozen=True)
class Plan:
    trigger: TriggeringEvent
    context: tuple[ContextItem, ...] = ()
    body: tuple[BodyStep, ...] = ()
    label: Optional[str] = None


@dataclass
class AgentProgram:
    beliefs: list[Literal] = field(default_factory=list)
    plans: list[Plan] = field(default_factory=list)

    def __eq__(self, other):
        return (
            isinstance(other, AgentProgram)
            and other.beliefs == self.beliefs
            and other.plans == self.plans
        )


# ---------------------------------------------------------------------------
# Printing (the inverse of parsing; parse(print(p)) == p)
# ---------------------------------------------------------------------------

def format_term(t: Term) -> str:
    if isinstance(t, (Var, Atom)):
        return t.name
    if isinstance(t, Int):
        return str(t.value)
    if isinstance(t, Struct):
        return f"{t.functor}({', '.join(format_term(a) for a in t.args)})"
    if isinstance(t, ListTerm):
        return f"[{', '.join(format_term(a) for a in t.items)}]"
    raise TypeError(f"not a term: {t!r}")


def format_literal(l: Literal) -> str:
    return ("~" if l.negated else "") + format_term(l.term)


_KIND_MARK = {"belief": "", "achievement": "!", "test": "?"}


def format_trigger(tr: TriggeringEvent) -> str:
    return f"{tr.op}{_KIND_MARK[tr.kind]}{format_literal(tr.literal)}"


def format_context_item(c: ContextItem) -> str:
    if isinstance(c, ContextLiteral):
        return ("not " if c.naf else "") + format_literal(c.literal)
    return f"{format_term(c.left)} {c.op} {format_term(c.right)}"


def format_step(s: BodyStep) -> str:
    if isinstance(s, ActionStep):
        return format_literal(s.literal)
    if isinstance(s, AchieveStep):
        return "!" + format_literal(s.literal)
    if isinstance(s, TestStep):
        return "?" + format_literal(s.literal)
    if isinstance(s, AddBeliefStep):
        return "+" + format_literal(s.literal)
    if isinstance(s, DeleteBeliefStep):
        return "-" + format_literal(s.literal)
    if isinstance(s, InternalStep):
        return f".{s.name}({', '.join(format_term(a) for a in s.args)})"
    raise TypeError(f"not a body step: {s!r}")


def format_plan(p: Plan) -> str:
    parts = []
    if p.label:
        parts.append(f"@{p.label} ")
    parts.append(format_trigger(p.trigger))
    if p.context:
        parts.append(" : " + " & ".join(format_context_item(c) for c in p.context))
    if p.body:
        parts.append(" <- " + "; ".join(format_step(s) for s in p.body))
    parts.append(".")
    return "".join(parts)


def print_program(p: AgentProgram) -> str:
    """Render a program as source text that re-parses to an equal AST."""
    lines = [format_literal(b) + "." for b in p.beliefs]
    if p.beliefs and p.plans:
        lines.append("")
    lines.extend(format_plan(pl) for pl in p.plans)
    return "\n".join(lines) + ("\n" if lines else "")
