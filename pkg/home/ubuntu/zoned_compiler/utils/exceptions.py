# -*- coding: utf-8 -*-
"""
Exceções do compilador.

Todas derivam de `CompilerError` e carregam um `kind` estável, usado pela
linha de comando para montar o JSON de erro estruturado.
"""

__version__ = "0.0.1"


class CompilerError(Exception):
    """Erro base de qualquer estágio do compilador."""

    kind = "pipeline"

    def to_dict(self) -> dict:
        return {"kind": self.kind, "message": str(self)}


class ArchitectureParseError(CompilerError):
    """Documento de arquitetura malformado (JSON inválido ou campo de tipo errado)."""

    kind = "parse"

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.field = field


class ArchitectureValidationError(CompilerError):
    """Arquitetura bem formada, mas que viola algum invariante (zonas sobrepostas, pitch <= 0...)."""

    kind = "validation"

    def __init__(self, message: str, field: str | None = None, zones: tuple[str, ...] = ()):
        super().__init__(message)
        self.field = field
        self.zones = zones


class AddressError(CompilerError):
    """Endereço de armadilha fora da zona ou com slot incompatível."""

    kind = "address"


class CapacityError(CompilerError):
    """Não há armadilhas livres suficientes."""

    kind = "capacity"


class CircuitSyntaxError(CompilerError):
    """Erro de sintaxe no circuito, com linha e coluna (base 1)."""

    kind = "syntax"

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (linha {line}, coluna {column})")
        self.line = line
        self.column = column

    def to_dict(self) -> dict:
        payload = super().to_dict()
        payload.update({"line": self.line, "column": self.column})
        return payload


class UnsupportedGateError(CompilerError):
    """Porta multi-qubit diferente de `cz` (o chamador deve decompor antes)."""

    kind = "unsupported_gate"

    def __init__(self, gate: str):
        super().__init__(f"Porta não suportada: '{gate}'. Decomponha o circuito em portas de 1 qubit e cz.")
        self.gate = gate


class OperandRangeError(CompilerError):
    """Índice de qubit fora do intervalo declarado."""

    kind = "operand_range"


class ContractViolation(CompilerError, ValueError):
    """Pré-condição de uma operação violada pelo chamador."""

    kind = "contract"


class SearchBudgetExceeded(CompilerError):
    """A busca A* esgotou o limite de nós expandidos.

    `best_goal` guarda o melhor nó objetivo gerado até o momento (ou None).
    """

    kind = "search_budget"

    def __init__(self, message: str, best_goal=None):
        super().__init__(message)
        self.best_goal = best_goal


class RoutingError(CompilerError):
    """A transição entre duas colocações não pode ser roteada."""

    kind = "routing"

    def __init__(self, message: str, trap=None):
        super().__init__(message)
        self.trap = trap


class CoverageError(CompilerError):
    """Alguma transição entre camadas ficou sem rota na geração de código."""

    kind = "coverage"
