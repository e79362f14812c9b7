# -*- coding: utf-8 -*-
"""
Leitor do subconjunto de OpenQASM 2.0 aceito pelo compilador.

Aceita cabeçalho `OPENQASM`, `include`, declarações `qreg`/`creg`, portas de
1 qubit por nome (opacas, com parâmetros ignorados), `cz`, e ignora `barrier`
e `measure`. Qualquer outra porta de vários qubits (`cx`, `ccx`, ...) é
rejeitada: o circuito deve chegar decomposto em portas de 1 qubit e `cz`.
"""

import logging
from dataclasses import dataclass

from pyparsing import (
    Group,
    Keyword,
    Literal,
    MatchFirst,
    Optional,
    ParseException,
    QuotedString,
    Regex,
    StringEnd,
    Suppress,
    Word,
    ZeroOrMore,
    alphanums,
    alphas,
    col,
    cpp_style_comment,
    lineno,
    nested_expr,
    pyparsing_common,
)

from circuits.circuit import CZ, Circuit, cz, one_qubit
from utils.exceptions import CircuitSyntaxError, OperandRangeError, UnsupportedGateError

__version__ = "0.0.1"

logger = logging.getLogger(__name__)

RESERVED = ("OPENQASM", "include", "qreg", "creg", "measure", "barrier", "gate", "opaque", "if")


@dataclass
class _Statement:
    kind: str
    name: str
    line: int
    column: int
    size: int = 0
    refs: tuple = ()


def _qreg_action(s, loc, toks):
    return _Statement("qreg", toks[1], lineno(loc, s), col(loc, s), size=int(toks[2]))


def _gate_action(s, loc, toks):
    refs = tuple((ref[0], int(ref[1]) if len(ref) > 1 else None) for ref in toks[1])
    return _Statement("gate", toks[0], lineno(loc, s), col(loc, s), refs=refs)


def _build_grammar():
    ident = Word(alphas + "_", alphanums + "_")
    integer = pyparsing_common.integer
    semi, comma = Suppress(";"), Suppress(",")
    lbr, rbr = Suppress("["), Suppress("]")

    ref = Group(ident + Optional(lbr + integer + rbr))
    ref_list = Group(ref + ZeroOrMore(comma + ref))

    header = Suppress(Keyword("OPENQASM") + Regex(r"\d+(\.\d+)*") + semi)
    include = Suppress(Keyword("include") + QuotedString('"') + semi)
    qreg = (Keyword("qreg") + ident + lbr + integer + rbr + semi).set_parse_action(_qreg_action)
    creg = Suppress(Keyword("creg") + ident + lbr + integer + rbr + semi)
    measure = Suppress(Keyword("measure") + ref + Literal("->") + ref + semi)
    barrier = Suppress(Keyword("barrier") + ref_list + semi)

    reserved = MatchFirst([Keyword(k) for k in RESERVED])
    params = Suppress(nested_expr("(", ")"))
    gate_call = (~reserved + ident + Optional(params) + ref_list + semi).set_parse_action(_gate_action)

    program = Optional(header) + ZeroOrMore(include | qreg | creg | measure | barrier | gate_call) + StringEnd()
    program.ignore(cpp_style_comment)
    return program


_GRAMMAR = _build_grammar()


def parse_qasm(text: str) -> Circuit:
    """
    Converte um programa OpenQASM 2.0 (subconjunto) em Circuit.

    Args:
        text (str): Código-fonte QASM.

    Returns:
        Circuit: Circuito com as portas na ordem do programa.
    """
    try:
        statements = _GRAMMAR.parse_string(text, parse_all=True)
    except ParseException as e:
        raise CircuitSyntaxError(f"Erro de sintaxe QASM: {e.msg}", e.lineno, e.col) from e

    registers = {}
    num_qubits = 0
    gates = []
    for stmt in statements:
        if stmt.kind == "qreg":
            if stmt.name in registers:
                raise CircuitSyntaxError(f"Registro '{stmt.name}' declarado duas vezes", stmt.line, stmt.column)
            registers[stmt.name] = (num_qubits, stmt.size)
            num_qubits += stmt.size
            continue

        name = stmt.name.lower()
        targets = [_expand(ref, registers, stmt) for ref in stmt.refs]
        if len(targets) == 1:
            gates.extend(one_qubit(name, q) for q in targets[0])
        elif name == CZ and len(targets) == 2:
            gates.extend(cz(a, b) for a, b in _pairs(targets[0], targets[1], stmt))
        else:
            raise UnsupportedGateError(name)

    logger.debug(f"QASM lido: {num_qubits} qubits, {len(gates)} portas.")
    return Circuit(num_qubits, tuple(gates))


def _expand(ref, registers: dict, stmt: _Statement) -> list[int]:
    reg, index = ref
    if reg not in registers:
        raise CircuitSyntaxError(f"Registro não declarado: '{reg}'", stmt.line, stmt.column)
    offset, size = registers[reg]
    if index is None:
        return list(range(offset, offset + size))
    if not 0 <= index < size:
        raise OperandRangeError(f"Índice {reg}[{index}] fora do registro de tamanho {size} (linha {stmt.line}).")
    return [offset + index]


def _pairs(first: list[int], second: list[int], stmt: _Statement):
    n = max(len(first), len(second))
    if len(first) not in (1, n) or len(second) not in (1, n):
        raise CircuitSyntaxError("Registros de tamanhos diferentes em cz", stmt.line, stmt.column)
    first = first * n if len(first) == 1 else first
    second = second * n if len(second) == 1 else second
    for a, b in zip(first, second):
        if a == b:
            raise CircuitSyntaxError(f"cz com operandos repetidos ({a})", stmt.line, stmt.column)
        yield a, b


if __name__ == "__main__":
    exemplo = """
    OPENQASM 2.0;
    include "qelib1.inc";
    qreg q[3];
    h q[0];
    cz q[0],q[1];
    rz(pi/4) q[1];
    cz q[1],q[2];
    """
    circuito = parse_qasm(exemplo)
    print(f"{circuito.num_qubits} qubits, {len(circuito.gates)} portas")
    for porta in circuito.gates:
        print(f"  {porta.name} {porta.operands}")
