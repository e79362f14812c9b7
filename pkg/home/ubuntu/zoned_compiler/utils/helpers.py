# -*- coding: utf-8 -*-
"""
Módulo de funções auxiliares e utilitários.

Contém funções genéricas usadas em diferentes partes do compilador:
configuração de logging, variação percentual arredondada para os relatórios,
leitura/escrita de JSON e hash estável de artefatos intermediários.
"""

import hashlib
import json
import logging
import math
from pathlib import Path

__version__ = "0.0.2"

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(level: str = "WARNING") -> None:
    """Configura o logger raiz (stderr), mantendo o stdout livre para JSON."""
    logging.basicConfig(level=getattr(logging, level.upper(), logging.WARNING), format=LOG_FORMAT, force=True)


def round_half_away(value: float) -> int:
    """Arredonda para o inteiro mais próximo, empates para longe do zero (2.5 -> 3, -2.5 -> -3)."""
    return int(math.copysign(math.floor(abs(value) + 0.5), value))


def calculate_percentage_change(old_value: float, new_value: float) -> float:
    """Calcula a variação percentual entre dois valores."""
    if old_value == 0:
        return float("inf") if new_value > 0 else (float("-inf") if new_value < 0 else 0.0)
    return ((new_value - old_value) / old_value) * 100


def relative_delta_percent(aware: float, agnostic: float) -> int | None:
    """
    Variação relativa (aware - agnostic) / agnostic em porcentagem inteira.

    Returns:
        int | None: Percentual arredondado (meio para longe do zero) ou None
                    quando a referência é zero e o valor não é.
    """
    change = calculate_percentage_change(agnostic, aware)
    if math.isinf(change):
        return None
    return round_half_away(change)


def read_text(path: str | Path) -> str:
    """Lê um arquivo texto em UTF-8 (deixa propagar FileNotFoundError/OSError)."""
    return Path(path).read_text(encoding="utf-8")


def write_json(path: str | Path, payload) -> None:
    """Grava `payload` como JSON indentado e determinístico."""
    Path(path).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def stable_hash(payload) -> str:
    """SHA-256 da serialização canônica de `payload` (usado para garantir entradas idênticas)."""
    encoded = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode("utf-8")
    return hashlib.sha256(encoded).hexdigest()


if __name__ == "__main__":
    print(f"Variação (100 para 120): {calculate_percentage_change(100, 120):.2f}%")
    print(f"Delta arredondado (aware 41, agnostic 100): {relative_delta_percent(41, 100)}%")
    print(f"round_half_away(-2.5) = {round_half_away(-2.5)}")
