"""A small congruence-expression language.

Statements like

    sum(k=0..p-1, (-1)^k * f(k)) ≡ jacobi(p,3) (mod p^2)

are parsed into ASTs and evaluated over ranges of primes, producing the
same report rows as the built-in checks.  Grammar (EBNF):

    stmt   := expr ("≡" expr "(mod" "p" "^" int ")")?
    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := "-" unary | factor
    factor := atom ("^" atom)?
    atom   := int | ident | "(" expr ")" | call | sum
    sum    := "sum" "(" ident "=" expr ".." expr "," expr ")"
    call   := ident "(" (expr ("," expr)*)? ")"

"≡" may be written "=mod=", and the Unicode minus sign is accepted for
"-".  Unary minus binds looser than "^": -1^k is -(1^k).  Semantics: all
arithmetic happens in the ambient ring mod p^e; "/" multiplies by the
inverse and fails on non-invertible divisors; sum bounds and exponents are
evaluated as exact integers (a residue-valued exponent is rejected, and a
negative exponent must be a literal, meaning inverse-power).

Builtins: binom(n,k), f(n), fx(n,x), fr(r,n), A(n), H(n), H2(n), q2(),
jacobi(a,n), inv(a).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .modring import NonInvertibleError, PrimePowerRing, Residue, jacobi, ring_new
from .report import CheckResult, Report
from .sequences import (
    _apery_cached,
    binom_exact,
    franel_exact,
    generalized_franel,
    get_context,
)

# --- AST ---------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Ast"


@dataclass(frozen=True)
class BinOp:
    op: str  # + - * / ^
    left: "Ast"
    right: "Ast"


@dataclass(frozen=True)
class Sum:
    index: str
    lower: "Ast"
    upper: "Ast"
    body: "Ast"


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple["Ast", ...]


Ast = Union[Num, Var, Neg, BinOp, Sum, Call]


@dataclass(frozen=True)
class CongruenceStmt:
    lhs: Ast
    rhs: Ast
    modulus_exponent: int


BUILTIN_ARITY = {
    "binom": 2,
    "f": 1,
    "fx": 2,
    "fr": 2,
    "A": 1,
    "H": 1,
    "H2": 1,
    "q2": 0,
    "jacobi": 2,
    "inv": 1,
}


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col


class EvalError(ValueError):
    pass


# --- lexer -------------------------------------------------------------------

_SYMBOLS = "+-*/^(),="


@dataclass(frozen=True)
class _Token:
    kind: str  # INT IDENT OP LPAREN RPAREN COMMA DOTDOT CONG EQUALS EOF
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i = 0
    line, col = 1, 1

    def advance(n: int):
        nonlocal i, line, col
        for _ in range(n):
            if i < len(text) and text[i] == "\n":
                line += 1
                col = 1
            else:
                col += 1
            i += 1

    while i < len(text):
        ch = text[i]
        if ch.isspace():
            advance(1)
            continue
        start_line, start_col = line, col
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(_Token("INT", text[i:j], start_line, start_col))
            advance(j - i)
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("IDENT", text[i:j], start_line, start_col))
            advance(j - i)
        elif ch == "≡":  # ≡
            tokens.append(_Token("CONG", "≡", start_line, start_col))
            advance(1)
        elif ch == "−":  # Unicode minus
            tokens.append(_Token("OP", "-", start_line, start_col))
            advance(1)
        elif ch == "." and text[i : i + 2] == "..":
            tokens.append(_Token("DOTDOT", "..", start_line, start_col))
            advance(2)
        elif ch == "=" and text[i : i + 5] == "=mod=":
            tokens.append(_Token("CONG", "=mod=", start_line, start_col))
            advance(5)
        elif ch == "=":
            tokens.append(_Token("EQUALS", "=", start_line, start_col))
            advance(1)
        elif ch == "(":
            tokens.append(_Token("LPAREN", "(", start_line, start_col))
            advance(1)
        elif ch == ")":
            tokens.append(_Token("RPAREN", ")", start_line, start_col))
            advance(1)
        elif ch == ",":
            tokens.append(_Token("COMMA", ",", start_line, start_col))
            advance(1)
        elif ch in "+-*/^":
            tokens.append(_Token("OP", ch, start_line, start_col))
            advance(1)
        else:
            raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(_Token("EOF", "", line, col))
    return tokens


# --- parser ------------------------------------------------------------------


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    @property
    def cur(self) -> _Token:
        return self.tokens[self.pos]

    def error(self, message: str):
        raise ParseError(message, self.cur.line, self.cur.col)

    _KIND_NAMES = {
        "LPAREN": "'('",
        "RPAREN": "')'",
        "COMMA": "','",
        "DOTDOT": "'..'",
        "EQUALS": "'='",
        "INT": "an integer",
        "IDENT": "an identifier",
        "EOF": "end of input",
    }

    def eat(self, kind: str, text: str | None = None) -> _Token:
        tok = self.cur
        if tok.kind != kind or (text is not None and tok.text != text):
            want = repr(text) if text else self._KIND_NAMES.get(kind, kind)
            got = repr(tok.text) if tok.text else "end of input"
            self.error(f"expected {want}, found {got}")
        self.pos += 1
        return tok

    def _at_modulus_clause(self) -> bool:
        # a variable right before "(mod p^e)" is not a function call
        toks = self.tokens[self.pos + 1 : self.pos + 7]
        return (
            len(toks) == 6
            and toks[0].kind == "LPAREN"
            and toks[1].kind == "IDENT" and toks[1].text == "mod"
            and toks[2].kind == "IDENT" and toks[2].text == "p"
            and toks[3].kind == "OP" and toks[3].text == "^"
            and toks[4].kind == "INT"
            and toks[5].kind == "RPAREN"
        )

    def statement(self) -> CongruenceStmt | Ast:
        lhs = self.expr()
        if self.cur.kind == "CONG":
            self.pos += 1
            rhs = self.expr()
            self.eat("LPAREN")
            tok = self.eat("IDENT")
            if tok.text != "mod":
                self.error("expected 'mod'")
            tok = self.eat("IDENT")
            if tok.text != "p":
                self.error("expected 'p'")
            self.eat("OP", "^")
            e = int(self.eat("INT").text)
            if not 1 <= e <= 4:
                self.error(f"modulus exponent must be in 1..4, got {e}")
            self.eat("RPAREN")
            self.eat("EOF")
            return CongruenceStmt(lhs, rhs, e)
        self.eat("EOF")
        return lhs

    def expr(self) -> Ast:
        node = self.term()
        while self.cur.kind == "OP" and self.cur.text in "+-":
            op = self.cur.text
            self.pos += 1
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Ast:
        node = self.unary()
        while self.cur.kind == "OP" and self.cur.text in "*/":
            op = self.cur.text
            self.pos += 1
            node = BinOp(op, node, self.unary())
        return node

    def unary(self) -> Ast:
        if self.cur.kind == "OP" and self.cur.text == "-":
            self.pos += 1
            return Neg(self.unary())
        return self.factor()

    def factor(self) -> Ast:
        node = self.atom()
        if self.cur.kind == "OP" and self.cur.text == "^":
            self.pos += 1
            node = BinOp("^", node, self.atom())
        return node

    def atom(self) -> Ast:
        tok = self.cur
        if tok.kind == "INT":
            self.pos += 1
            return Num(int(tok.text))
        if tok.kind == "LPAREN":
            self.pos += 1
            node = self.expr()
            self.eat("RPAREN")
            return node
        if tok.kind == "IDENT":
            if self.tokens[self.pos + 1].kind == "LPAREN" and not self._at_modulus_clause():
                if tok.text == "sum":
                    return self.sum_node()
                return self.call()
            self.pos += 1
            return Var(tok.text)
        self.error(f"expected an expression, found {tok.text or 'end of input'!r}")

    def sum_node(self) -> Ast:
        self.eat("IDENT")  # 'sum'
        self.eat("LPAREN")
        index = self.eat("IDENT").text
        self.eat("EQUALS")
        lower = self.expr()
        self.eat("DOTDOT")
        upper = self.expr()
        self.eat("COMMA")
        body = self.expr()
        self.eat("RPAREN")
        return Sum(index, lower, upper, body)

    def call(self) -> Ast:
        name_tok = self.eat("IDENT")
        name = name_tok.text
        if name not in BUILTIN_ARITY:
            raise ParseError(f"unknown function {name!r}", name_tok.line, name_tok.col)
        self.eat("LPAREN")
        args: list[Ast] = []
        if self.cur.kind != "RPAREN":
            args.append(self.expr())
            while self.cur.kind == "COMMA":
                self.pos += 1
                args.append(self.expr())
        self.eat("RPAREN")
        if len(args) != BUILTIN_ARITY[name]:
            raise ParseError(
                f"{name}() takes {BUILTIN_ARITY[name]} argument(s), got {len(args)}",
                name_tok.line,
                name_tok.col,
            )
        return Call(name, tuple(args))


def parse(text: str) -> CongruenceStmt | Ast:
    """Parse a congruence statement or bare expression."""
    return _Parser(_tokenize(text)).statement()


# --- printer -----------------------------------------------------------------

_LEVEL_ADD, _LEVEL_MUL, _LEVEL_UNARY, _LEVEL_POW, _LEVEL_ATOM = 1, 2, 3, 4, 5


def _level(node: Ast) -> int:
    if isinstance(node, (Num, Var, Call, Sum)):
        return _LEVEL_ATOM
    if isinstance(node, Neg):
        return _LEVEL_UNARY
    if node.op in "+-":
        return _LEVEL_ADD
    if node.op in "*/":
        return _LEVEL_MUL
    return _LEVEL_POW


def _emit(node: Ast, min_level: int) -> str:
    if isinstance(node, Num):
        s = str(node.value)
    elif isinstance(node, Var):
        s = node.name
    elif isinstance(node, Neg):
        s = "-" + _emit(node.operand, _LEVEL_UNARY)
    elif isinstance(node, Sum):
        s = (
            f"sum({node.index}={_emit(node.lower, _LEVEL_ADD)}"
            f"..{_emit(node.upper, _LEVEL_ADD)}, {_emit(node.body, _LEVEL_ADD)})"
        )
    elif isinstance(node, Call):
        s = f"{node.name}({', '.join(_emit(a, _LEVEL_ADD) for a in node.args)})"
    elif node.op in "+-":
        s = f"{_emit(node.left, _LEVEL_ADD)}{node.op}{_emit(node.right, _LEVEL_MUL)}"
    elif node.op in "*/":
        s = f"{_emit(node.left, _LEVEL_MUL)}{node.op}{_emit(node.right, _LEVEL_UNARY)}"
    else:  # ^
        s = f"{_emit(node.left, _LEVEL_ATOM)}^{_emit(node.right, _LEVEL_ATOM)}"
    if _level(node) < min_level:
        return f"({s})"
    return s


def unparse(node: CongruenceStmt | Ast) -> str:
    """Render an AST back to source; parse(unparse(x)) is structurally x."""
    if isinstance(node, CongruenceStmt):
        return (
            f"{_emit(node.lhs, _LEVEL_ADD)} ≡ {_emit(node.rhs, _LEVEL_ADD)}"
            f" (mod p^{node.modulus_exponent})"
        )
    return _emit(node, _LEVEL_ADD)


# --- evaluator ---------------------------------------------------------------


class _NotInteger(Exception):
    pass


def _is_negative_literal(node: Ast) -> bool:
    return isinstance(node, Neg) and isinstance(node.operand, Num)


def eval_expr(
    ast: Ast, ring: PrimePowerRing, bindings: dict[str, Residue] | None = None
) -> Residue:
    """Evaluate an expression in the given ring.  ``p`` is bound to the
    ring's prime; sum indices are bound as integers during iteration."""
    bindings = bindings or {}
    p = ring.p
    e = ring.e
    m = ring.modulus
    ctx = get_context(p)

    def ring_eval(node: Ast, idx: dict[str, int]) -> Residue:
        if isinstance(node, Num):
            return ring.residue(node.value)
        if isinstance(node, Var):
            if node.name in idx:
                return ring.residue(idx[node.name])
            if node.name == "p":
                return ring.residue(p)
            if node.name in bindings:
                r = bindings[node.name]
                if r.ring != ring:
                    raise EvalError(f"binding {node.name!r} lives in {r.ring}, not {ring}")
                return r
            raise EvalError(f"unbound variable {node.name!r}")
        if isinstance(node, Neg):
            return -ring_eval(node.operand, idx)
        if isinstance(node, Sum):
            try:
                lo = int_eval(node.lower, idx)
                hi = int_eval(node.upper, idx)
            except _NotInteger as exc:
                raise EvalError(f"sum bound is not an exact integer: {exc}") from None
            acc = ring.residue(0)
            shadow = node.index in idx
            saved = idx.get(node.index)
            for i in range(lo, hi + 1):
                idx[node.index] = i
                acc = acc + ring_eval(node.body, idx)
            if shadow:
                idx[node.index] = saved
            else:
                idx.pop(node.index, None)
            return acc
        if isinstance(node, Call):
            return call_eval(node, idx)
        # BinOp
        if node.op == "^":
            try:
                exponent = int_eval(node.right, idx)
            except _NotInteger as exc:
                raise EvalError(f"exponent must be an integer expression: {exc}") from None
            base = ring_eval(node.left, idx)
            if exponent < 0:
                if not _is_negative_literal(node.right):
                    raise EvalError("negative exponent must be a literal (inverse-power)")
                return base.inv() ** (-exponent)
            return base**exponent
        a = ring_eval(node.left, idx)
        b = ring_eval(node.right, idx)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        return a / b  # may raise NonInvertibleError

    def int_eval(node: Ast, idx: dict[str, int]) -> int:
        if isinstance(node, Num):
            return node.value
        if isinstance(node, Var):
            if node.name in idx:
                return idx[node.name]
            if node.name == "p":
                return p
            raise _NotInteger(f"variable {node.name!r} is not integer-valued here")
        if isinstance(node, Neg):
            return -int_eval(node.operand, idx)
        if isinstance(node, BinOp):
            if node.op == "^":
                ex = int_eval(node.right, idx)
                if ex < 0:
                    raise _NotInteger("negative exponent in integer context")
                return int_eval(node.left, idx) ** ex
            a = int_eval(node.left, idx)
            b = int_eval(node.right, idx)
            if node.op == "+":
                return a + b
            if node.op == "-":
                return a - b
            if node.op == "*":
                return a * b
            q, r = divmod(a, b)
            if r:
                raise _NotInteger(f"{a}/{b} is not an integer")
            return q
        raise _NotInteger("sums and calls are not integer expressions")

    def int_arg(node: Ast, idx: dict[str, int], what: str) -> int:
        try:
            return int_eval(node, idx)
        except _NotInteger as exc:
            raise EvalError(f"{what} must be an integer expression: {exc}") from None

    def call_eval(node: Call, idx: dict[str, int]) -> Residue:
        name = node.name
        if name == "binom":
            n = int_arg(node.args[0], idx, "binom() upper argument")
            k = int_arg(node.args[1], idx, "binom() lower argument")
            if k < 0:
                raise EvalError(f"binom() lower argument must be >= 0, got {k}")
            return ring.residue(binom_exact(n, k))
        if name == "f":
            n = int_arg(node.args[0], idx, "f() index")
            if n < 0:
                raise EvalError(f"f() index must be >= 0, got {n}")
            if n < p:
                return ring.residue(ctx.franel(e)[n])
            return ring.residue(franel_exact(n))
        if name == "fx":
            n = int_arg(node.args[0], idx, "fx() index")
            if not 0 <= n < p:
                raise EvalError(f"fx() index must be in 0..p-1, got {n}")
            x = ring_eval(node.args[1], idx)
            return ring.residue(ctx.fpoly(e, x.value)[n])
        if name == "fr":
            r = int_arg(node.args[0], idx, "fr() power")
            n = int_arg(node.args[1], idx, "fr() index")
            if r < 1:
                raise EvalError(f"fr() power must be >= 1, got {r}")
            if n < 0:
                raise EvalError(f"fr() index must be >= 0, got {n}")
            if n < p:
                return ring.residue(ctx.genfranel(e, r)[n])
            return ring.residue(generalized_franel(n, r))
        if name == "A":
            n = int_arg(node.args[0], idx, "A() index")
            if n < 0:
                raise EvalError(f"A() index must be >= 0, got {n}")
            return ring.residue(_apery_cached(n))
        if name in ("H", "H2"):
            n = int_arg(node.args[0], idx, "harmonic index")
            if n < 0:
                raise EvalError(f"harmonic index must be >= 0, got {n}")
            if n >= p:
                raise NonInvertibleError(
                    f"harmonic number at {n} >= p has a non-invertible term"
                )
            return ring.residue(ctx.harmonic(e, 1 if name == "H" else 2)[n])
        if name == "q2":
            if e > 3:
                raise EvalError("q2() needs ring exponent <= 3")
            return ring.residue(ctx.q2(e))
        if name == "jacobi":
            a = int_arg(node.args[0], idx, "jacobi() numerator")
            n = int_arg(node.args[1], idx, "jacobi() denominator")
            try:
                return ring.residue(jacobi(a, n))
            except ValueError as exc:
                raise EvalError(str(exc)) from None
        if name == "inv":
            return ring_eval(node.args[0], idx).inv()
        raise EvalError(f"unknown function {name!r}")  # unreachable after parse

    return ring_eval(ast, {})


def eval_congruence(
    stmt: CongruenceStmt, primes: list[int], check_id: str = "expr"
) -> Report:
    """Evaluate a parsed congruence statement at each prime.

    Evaluation errors (non-invertible division, bad bounds) become error
    rows, distinct from failures.
    """
    if not isinstance(stmt, CongruenceStmt):
        raise ValueError("statement has no modulus; use eval_expr for bare expressions")
    primes = sorted(set(primes))
    if not primes:
        raise ValueError("no primes in range")
    rows = []
    for p in primes:
        ring = ring_new(p, stmt.modulus_exponent)
        try:
            lhs = eval_expr(stmt.lhs, ring).value
            rhs = eval_expr(stmt.rhs, ring).value
            rows.append(
                CheckResult(
                    check_id=check_id,
                    check_class="user",
                    prime=p,
                    modulus_exponent=stmt.modulus_exponent,
                    params={},
                    lhs=lhs,
                    rhs=rhs,
                    passed=lhs == rhs,
                )
            )
        except (EvalError, NonInvertibleError) as exc:
            rows.append(
                CheckResult(
                    check_id=check_id,
                    check_class="user",
                    prime=p,
                    modulus_exponent=stmt.modulus_exponent,
                    params={},
                    lhs=0,
                    rhs=0,
                    passed=False,
                    error=str(exc),
                )
            )
    return Report(rows=rows)
