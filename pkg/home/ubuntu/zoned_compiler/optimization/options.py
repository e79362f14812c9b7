# -*- coding: utf-8 -*-
"""
Parâmetros do posicionador ciente de roteamento.

- alpha: peso dos custos de antecipação (look-ahead).
- beta: constante que favorece nós mais profundos da árvore de busca.
- gamma: bônus de reuso subtraído do custo de antecipação do átomo reutilizado.
- delta: peso da parte aceleradora da heurística.
- window: janela de poda (linhas, colunas); None usa a janela da arquitetura.
- max_nodes: limite de nós expandidos por camada (o A* parte da solução do mergulho guloso,
  então o limite só decide quanto se tenta melhorá-la).
"""

from dataclasses import asdict, dataclass, replace

from utils.exceptions import ContractViolation

__version__ = "0.0.1"

DEFAULT_MAX_NODES = 2_000

# Perfis ajustados para os benchmarks pequenos (qasmbench) e para circuitos grandes
PROFILES = {
    "qasmbench": {"alpha": 0.2, "beta": 0.2, "gamma": 5.0, "delta": 0.6},
    "large": {"alpha": 0.2, "beta": 0.8, "gamma": 5.0, "delta": 0.9},
}
DEFAULT_PROFILE = "qasmbench"


@dataclass(frozen=True)
class PlacerParams:
    alpha: float = PROFILES[DEFAULT_PROFILE]["alpha"]
    beta: float = PROFILES[DEFAULT_PROFILE]["beta"]
    gamma: float = PROFILES[DEFAULT_PROFILE]["gamma"]
    delta: float = PROFILES[DEFAULT_PROFILE]["delta"]
    window: tuple[int, int] | None = None
    max_nodes: int = DEFAULT_MAX_NODES

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta"):
            if getattr(self, name) < 0:
                raise ContractViolation(f"O parâmetro {name} não pode ser negativo.")
        if self.max_nodes < 1:
            raise ContractViolation("max_nodes deve ser >= 1.")
        if self.window is not None:
            if len(self.window) != 2 or min(self.window) < 1:
                raise ContractViolation(f"Janela inválida: {self.window}.")
            object.__setattr__(self, "window", tuple(int(v) for v in self.window))

    @classmethod
    def from_profile(cls, name: str = DEFAULT_PROFILE, **overrides) -> "PlacerParams":
        """Cria os parâmetros a partir de um perfil, aplicando por cima os valores não nulos de `overrides`."""
        if name not in PROFILES:
            raise ContractViolation(f"Perfil desconhecido: '{name}'. Use um de {sorted(PROFILES)}.")
        values = dict(PROFILES[name])
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def with_overrides(self, **overrides) -> "PlacerParams":
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})

    def to_dict(self) -> dict:
        payload = asdict(self)
        payload["window"] = list(self.window) if self.window else None
        return payload


def parse_window(text: str) -> tuple[int, int]:
    """Converte 'RxC' (ex.: '6x6') em (linhas, colunas)."""
    try:
        rows, cols = (int(v) for v in text.lower().split("x"))
    except ValueError:
        raise ContractViolation(f"Janela inválida '{text}'; use o formato RxC, ex.: 6x6.") from None
    if rows < 1 or cols < 1:
        raise ContractViolation(f"Janela inválida '{text}'; as extensões devem ser >= 1.")
    return rows, cols
