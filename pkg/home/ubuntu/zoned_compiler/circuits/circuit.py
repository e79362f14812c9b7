# -*- coding: utf-8 -*-
"""
Módulo de representação de circuitos quânticos.

Um circuito é uma lista ordenada de portas de 1 qubit (opacas, identificadas
pelo nome) e portas `cz`. O índice de qubit i é o átomo i em todo o compilador.
Este módulo também lê e grava a forma JSON do circuito e delega a leitura de
OpenQASM ao módulo `circuits.qasm_parser`.
"""

import json
import logging
from dataclasses import dataclass
from pathlib import Path

from utils.exceptions import CircuitSyntaxError, ContractViolation, OperandRangeError, UnsupportedGateError

__version__ = "0.0.1"

logger = logging.getLogger(__name__)

CZ = "cz"
ONE_QUBIT = "1q"
FORMATS = ("qasm", "json")


@dataclass(frozen=True)
class Gate:
    """Porta do circuito: `cz` com dois operandos distintos ou `1q` com um operando."""

    kind: str
    operands: tuple[int, ...]
    name: str = CZ

    def __post_init__(self):
        object.__setattr__(self, "operands", tuple(int(q) for q in self.operands))
        if self.kind == CZ:
            if len(self.operands) != 2 or self.operands[0] == self.operands[1]:
                raise ContractViolation(f"cz exige dois operandos distintos, recebeu {self.operands}.")
        elif self.kind == ONE_QUBIT:
            if len(self.operands) != 1:
                raise ContractViolation(f"Porta de 1 qubit '{self.name}' exige um operando, recebeu {self.operands}.")
        else:
            raise ContractViolation(f"Tipo de porta desconhecido: '{self.kind}'.")

    @property
    def is_cz(self) -> bool:
        return self.kind == CZ

    def to_dict(self) -> dict:
        if self.is_cz:
            return {"kind": CZ, "operands": list(self.operands)}
        return {"kind": ONE_QUBIT, "name": self.name, "operands": list(self.operands)}


def cz(a: int, b: int) -> Gate:
    return Gate(CZ, (a, b))


def one_qubit(name: str, qubit: int) -> Gate:
    return Gate(ONE_QUBIT, (qubit,), name=name)


@dataclass(frozen=True)
class Circuit:
    """Circuito imutável: número de qubits e portas na ordem do programa."""

    num_qubits: int
    gates: tuple[Gate, ...]

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        if self.num_qubits < 0:
            raise ContractViolation("num_qubits não pode ser negativo.")
        for gate in self.gates:
            for q in gate.operands:
                if not 0 <= q < self.num_qubits:
                    raise OperandRangeError(
                        f"Operando {q} da porta '{gate.name}' fora do intervalo [0, {self.num_qubits})."
                    )

    @property
    def two_qubit_gates(self) -> int:
        return sum(1 for g in self.gates if g.is_cz)

    def to_json(self) -> dict:
        return {"num_qubits": self.num_qubits, "gates": [g.to_dict() for g in self.gates]}

    def to_qasm(self) -> str:
        lines = ["OPENQASM 2.0;", 'include "qelib1.inc";', f"qreg q[{self.num_qubits}];"]
        for gate in self.gates:
            refs = ",".join(f"q[{q}]" for q in gate.operands)
            lines.append(f"{gate.name} {refs};")
        return "\n".join(lines) + "\n"


def parse_circuit(text: str, fmt: str = "qasm") -> Circuit:
    """
    Lê um circuito no formato declarado.

    Args:
        text (str): Conteúdo do documento.
        fmt (str): "qasm" (subconjunto de OpenQASM 2.0) ou "json".

    Returns:
        Circuit: Circuito com a ordem das portas preservada.
    """
    if fmt == "qasm":
        from circuits.qasm_parser import parse_qasm

        return parse_qasm(text)
    if fmt == "json":
        return _parse_json(text)
    raise ContractViolation(f"Formato de circuito desconhecido: '{fmt}'. Use um de {FORMATS}.")


def load_circuit(path: str | Path) -> Circuit:
    """Lê um circuito de arquivo; `.json` usa a forma JSON, qualquer outra extensão usa QASM."""
    path = Path(path)
    fmt = "json" if path.suffix.lower() == ".json" else "qasm"
    circuit = parse_circuit(path.read_text(encoding="utf-8"), fmt)
    logger.info(f"Circuito '{path.name}' lido: {circuit.num_qubits} qubits, {len(circuit.gates)} portas.")
    return circuit


def _parse_json(text: str) -> Circuit:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise CircuitSyntaxError(f"JSON do circuito malformado: {e.msg}", e.lineno, e.colno) from e
    if not isinstance(doc, dict) or not isinstance(doc.get("num_qubits"), int) or not isinstance(doc.get("gates"), list):
        raise CircuitSyntaxError("O circuito JSON precisa de 'num_qubits' (inteiro) e 'gates' (lista).", 1, 1)

    num_qubits = doc["num_qubits"]
    gates = []
    for i, raw in enumerate(doc["gates"]):
        if not isinstance(raw, dict) or not isinstance(raw.get("operands"), list):
            raise CircuitSyntaxError(f"gates[{i}] precisa de 'kind' e 'operands'.", 1, 1)
        kind = raw.get("kind")
        operands = raw["operands"]
        if not all(isinstance(q, int) and not isinstance(q, bool) for q in operands):
            raise CircuitSyntaxError(f"gates[{i}]: operandos devem ser inteiros.", 1, 1)
        for q in operands:
            if not 0 <= q < num_qubits:
                raise OperandRangeError(f"gates[{i}]: operando {q} fora do intervalo [0, {num_qubits}).")
        if kind == CZ:
            if len(operands) != 2 or operands[0] == operands[1]:
                raise CircuitSyntaxError(f"gates[{i}]: cz exige dois operandos distintos.", 1, 1)
            gates.append(cz(*operands))
        elif kind == ONE_QUBIT:
            if len(operands) != 1:
                raise CircuitSyntaxError(f"gates[{i}]: porta de 1 qubit exige um operando.", 1, 1)
            gates.append(one_qubit(str(raw.get("name", "u")), operands[0]))
        else:
            raise UnsupportedGateError(str(raw.get("name") or kind))
    return Circuit(num_qubits, tuple(gates))
