"""First-order terms, literals and most-general unification.

Terms are immutable and hashable. Atoms and functor names start with a
lowercase letter; variables start with an uppercase letter or underscore.
A total "standard order" over ground terms (Int < Atom < Struct < List,
then by value/name/args) is used for deterministic sorting and for the
relational context constraints of the agent language.
"""

from __future__ import annotations

from typing import Iterator, Optional


class Term:
    """Base class; concrete terms are Var, Int, Atom, Struct and ListTerm."""

    __slots__ = ()

    def is_ground(self) -> bool:
        raise NotImplementedError

    def variables(self) -> Iterator[str]:
        raise NotImplementedError


class Var(Term):
    __slots__ = ("name", "_hash")

    def __init__(self, name: str):
        self.name = name
        self._hash = hash(("v", name))

    def is_ground(self) -> bool:
        return False

    def variables(self) -> Iterator[str]:
        yield self.name

    def __eq__(self, other):
        return isinstance(other, Var) and other.name == self.name

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return self.name


class Int(Term):
    __slots__ = ("value", "_hash")

    def __init__(self, value: int):
        self.value = value
        self._hash = hash(("i", value))

    def is_ground(self) -> bool:
        return True

    def variables(self) -> Iterator[str]:
        return iter(())

    def __eq__(self, other):
        return isinstance(other, Int) and other.value == self.value

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return str(self.value)


class Atom(Term):
    __slots__ = ("name", "_hash")

    def __init__(self, name: str):
        self.name = name
        self._hash = hash(("a", name))

    def is_ground(self) -> bool:
        return True

    def variables(self) -> Iterator[str]:
        return iter(())

    def __eq__(self, other):
        return isinstance(other, Atom) and other.name == self.name

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return self.name


class Struct(Term):
    """Compound term: functor name plus ordered argument terms."""

    __slots__ = ("functor", "args", "_hash", "_ground")

    def __init__(self, functor: str, args: tuple[Term, ...]):
        self.functor = functor
        self.args = args
        self._hash = hash(("s", functor, args))
        self._ground = all(a.is_ground() for a in args)

    def is_ground(self) -> bool:
        return self._ground

    def variables(self) -> Iterator[str]:
        for a in self.args:
            yield from a.variables()

    def __eq__(self, other):
        return (
            isinstance(other, Struct)
            and other._hash == self._hash
            and other.functor == self.functor
            and other.args == self.args
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"{self.functor}({', '.join(map(repr, self.args))})"


class ListTerm(Term):
    __slots__ = ("items", "_hash", "_ground")

    def __init__(self, items: tuple[Term, ...]):
        self.items = items
        self._hash = hash(("l", items))
        self._ground = all(a.is_ground() for a in items)

    def is_ground(self) -> bool:
        return self._ground

    def variables(self) -> Iterator[str]:
        for a in self.items:
            yield from a.variables()

    def __eq__(self, other):
        return isinstance(other, ListTerm) and other.items == self.items

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"[{', '.join(map(repr, self.items))}]"


class Literal:
    """An atom or compound with an optional strong-negation marker.

    The inner term is never a bare variable or integer.
    """

    __slots__ = ("negated", "term", "_hash")

    def __init__(self, term: Term, negated: bool = False):
        if not isinstance(term, (Atom, Struct)):
            raise ValueError(f"literal body must be an atom or compound, got {term!r}")
        self.term = term
        self.negated = negated
        self._hash = hash(("lit", negated, term))

    @property
    def functor(self) -> str:
        return self.term.name if isinstance(self.term, Atom) else self.term.functor

    @property
    def arity(self) -> int:
        return 0 if isinstance(self.term, Atom) else len(self.term.args)

    @property
    def args(self) -> tuple[Term, ...]:
        return () if isinstance(self.term, Atom) else self.term.args

    def is_ground(self) -> bool:
        return self.term.is_ground()

    def variables(self) -> Iterator[str]:
        return self.term.variables()

    def __eq__(self, other):
        return (
            isinstance(other, Literal)
            and other._hash == self._hash
            and other.negated == self.negated
            and other.term == self.term
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return ("~" if self.negated else "") + repr(self.term)


def atom(name: str) -> Atom:
    return Atom(name)


def struct(functor: str, *args: Term) -> Struct:
    return Struct(functor, tuple(args))


def lit(functor: str, *args) -> Literal:
    """Build a positive literal; bare ints become Int terms."""
    conv = tuple(Int(a) if isinstance(a, int) else a for a in args)
    if conv:
        return Literal(Struct(functor, conv))
    return Literal(Atom(functor))


# ---------------------------------------------------------------------------
# Substitutions
# ---------------------------------------------------------------------------

Substitution = dict[str, Term]
"""Map from variable name to term.  Kept fully resolved (idempotent): no
stored term contains a variable that the map also binds."""


def apply(s: Substitution, t: Term) -> Term:
    """Apply a substitution to a term."""
    if not s or t.is_ground():
        return t
    if isinstance(t, Var):
        return s.get(t.name, t)
    if isinstance(t, Struct):
        return Struct(t.functor, tuple(apply(s, a) for a in t.args))
    if isinstance(t, ListTerm):
        return ListTerm(tuple(apply(s, a) for a in t.items))
    return t


def apply_lit(s: Substitution, l: Literal) -> Literal:
    if not s or l.is_ground():
        return l
    return Literal(apply(s, l.term), l.negated)


def occurs(var_name: str, t: Term) -> bool:
    if isinstance(t, Var):
        return t.name == var_name
    if isinstance(t, Struct):
        return any(occurs(var_name, a) for a in t.args)
    if isinstance(t, ListTerm):
        return any(occurs(var_name, a) for a in t.items)
    return False


def _extend(s: Substitution, name: str, t: Term) -> Optional[Substitution]:
    """Bind name := t, keeping the substitution resolved; occurs check on."""
    t = apply(s, t)
    if isinstance(t, Var) and t.name == name:
        return s
    if occurs(name, t):
        return None
    one = {name: t}
    out = {k: apply(one, v) for k, v in s.items()}
    out[name] = t
    return out


def unify(a: Term, b: Term, s: Optional[Substitution] = None) -> Optional[Substitution]:
    """Most general unifier of a and b extending s, or None on clash.

    On success ``apply(result, a) == apply(result, b)``; the occurs check is
    enforced, so cyclic bindings fail rather than loop.
    """
    if s is None:
        s = {}
    a = apply(s, a)
    b = apply(s, b)
    if a == b:
        return s
    if isinstance(a, Var):
        return _extend(s, a.name, b)
    if isinstance(b, Var):
        return _extend(s, b.name, a)
    if isinstance(a, Int) and isinstance(b, Int):
        return s if a.value == b.value else None
    if isinstance(a, Atom) and isinstance(b, Atom):
        return s if a.name == b.name else None
    if isinstance(a, Struct) and isinstance(b, Struct):
        if a.functor != b.functor or len(a.args) != len(b.args):
            return None
        for x, y in zip(a.args, b.args):
            s = unify(x, y, s)
            if s is None:
                return None
        return s
    if isinstance(a, ListTerm) and isinstance(b, ListTerm):
        if len(a.items) != len(b.items):
            return None
        for x, y in zip(a.items, b.items):
            s = unify(x, y, s)
            if s is None:
                return None
        return s
    return None


def unify_lit(a: Literal, b: Literal, s: Optional[Substitution] = None) -> Optional[Substitution]:
    if a.negated != b.negated:
        return None
    return unify(a.term, b.term, s)


# ---------------------------------------------------------------------------
# Standard order over ground terms
# ---------------------------------------------------------------------------

_RANK = {Int: 0, Atom: 1, Struct: 2, ListTerm: 3}


def order_key(t: Term):
    """Sort key giving a total order over ground terms."""
    if isinstance(t, Int):
        return (0, t.value)
    if isinstance(t, Atom):
        return (1, t.name)
    if isinstance(t, Struct):
        return (2, t.functor, len(t.args), tuple(order_key(a) for a in t.args))
    if isinstance(t, ListTerm):
        return (3, len(t.items), tuple(order_key(a) for a in t.items))
    raise ValueError(f"no standard order for non-ground term {t!r}")


def lit_order_key(l: Literal):
    return (l.negated, order_key(l.term))


def compare_ground(op: str, a: Term, b: Term) -> bool:
    """Evaluate a relational constraint over ground terms.

    ``==``/``\\==`` are syntactic (dis)equality on any ground terms; the
    inequalities are defined for two ints (numeric) or two atoms
    (lexicographic).
    """
    if not (a.is_ground() and b.is_ground()):
        return False
    if op == "==":
        return a == b
    if op == "\\==":
        return a != b
    if isinstance(a, Int) and isinstance(b, Int):
        x, y = a.value, b.value
    elif isinstance(a, Atom) and isinstance(b, Atom):
        x, y = a.name, b.name
    else:
        return False
    if op == "<":
        return x < y
    if op == "<=":
        return x <= y
    if op == ">":
        return x > y
    if op == ">=":
        return x >= y
    raise ValueError(f"unknown comparison operator {op!r}")


_lit_cache: dict[tuple, Literal] = {}


def cached_lit(functor: str, *int_args: int) -> Literal:
    """Interned ground literal over integer arguments (percept fast path)."""
    key = (functor, int_args)
    l = _lit_cache.get(key)
    if l is None:
        l = lit(functor, *int_args)
        _lit_cache[key] = l
    return l
