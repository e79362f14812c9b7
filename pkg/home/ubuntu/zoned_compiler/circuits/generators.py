# -*- coding: utf-8 -*-
"""
Geradores de circuitos sintéticos para o benchmark.

Cada família já sai decomposta em portas de 1 qubit e `cz`:
- ising: um passo de Trotter de uma cadeia ZZ de vizinhos próximos (2 cz por aresta).
- ghz: cadeia de CX (cada CX vira h·cz·h).
- qft: todos-com-todos, 2 cz por par de qubits.
- wstate: cadeia, 2 cz por ligação.
- star: o átomo 0 interage com todos os outros em camadas consecutivas (muito reuso).
- random: pares aleatórios, reproduzíveis pela semente.
"""

import numpy as np

from circuits.circuit import Circuit, cz, one_qubit
from utils.exceptions import ContractViolation

__version__ = "0.0.1"

FAMILIES = ("ising", "ghz", "qft", "wstate", "star", "random")


def ising_chain(num_qubits: int) -> Circuit:
    """Arestas pares primeiro e depois ímpares, para que as arestas disjuntas fiquem na mesma camada."""
    gates = [one_qubit("h", q) for q in range(num_qubits)]
    edges = [(i, i + 1) for i in range(0, num_qubits - 1, 2)] + [(i, i + 1) for i in range(1, num_qubits - 1, 2)]
    for a, b in edges:
        gates += [cz(a, b), one_qubit("rz", b), cz(a, b)]
    return Circuit(num_qubits, tuple(gates))


def ghz_chain(num_qubits: int) -> Circuit:
    gates = [one_qubit("h", 0)] if num_qubits else []
    for i in range(num_qubits - 1):
        gates += [one_qubit("h", i + 1), cz(i, i + 1), one_qubit("h", i + 1)]
    return Circuit(num_qubits, tuple(gates))


def qft(num_qubits: int) -> Circuit:
    gates = []
    for i in range(num_qubits):
        gates.append(one_qubit("h", i))
        for j in range(i + 1, num_qubits):
            gates += [cz(i, j), one_qubit("rz", j), cz(i, j)]
    return Circuit(num_qubits, tuple(gates))


def wstate_chain(num_qubits: int) -> Circuit:
    gates = [one_qubit("x", 0)] if num_qubits else []
    for i in range(num_qubits - 1):
        gates += [one_qubit("ry", i + 1), cz(i, i + 1), one_qubit("ry", i + 1), cz(i, i + 1), one_qubit("h", i)]
    return Circuit(num_qubits, tuple(gates))


def star(num_qubits: int) -> Circuit:
    gates = [one_qubit("h", 0)] if num_qubits else []
    for j in range(1, num_qubits):
        gates += [one_qubit("h", j), cz(0, j)]
    return Circuit(num_qubits, tuple(gates))


def random_circuit(num_qubits: int, seed: int | None = None, depth: int = 4) -> Circuit:
    if num_qubits < 2:
        raise ContractViolation("O circuito aleatório precisa de pelo menos 2 qubits.")
    rng = np.random.default_rng(seed)
    gates = []
    for _ in range(depth * num_qubits // 2):
        if rng.random() < 0.25:
            gates.append(one_qubit("rx", int(rng.integers(num_qubits))))
        a, b = rng.choice(num_qubits, size=2, replace=False)
        gates.append(cz(int(a), int(b)))
    return Circuit(num_qubits, tuple(gates))


def generate(family: str, num_qubits: int, seed: int | None = None) -> Circuit:
    """
    Gera um circuito de uma família sintética.

    Args:
        family (str): Uma de FAMILIES.
        num_qubits (int): Número de qubits.
        seed (int, optional): Semente (usada apenas pela família `random`).

    Returns:
        Circuit: Circuito decomposto em portas de 1 qubit e cz.
    """
    if num_qubits < 0:
        raise ContractViolation("num_qubits não pode ser negativo.")
    builders = {
        "ising": ising_chain,
        "ghz": ghz_chain,
        "qft": qft,
        "wstate": wstate_chain,
        "star": star,
    }
    if family == "random":
        return random_circuit(num_qubits, seed=seed)
    if family not in builders:
        raise ContractViolation(f"Família desconhecida: '{family}'. Use uma de {FAMILIES}.")
    return builders[family](num_qubits)


if __name__ == "__main__":
    for familia in FAMILIES:
        c = generate(familia, 8, seed=7)
        print(f"{familia:8s}: {c.num_qubits} qubits, {c.two_qubit_gates} cz, {len(c.gates)} portas")
