# -*- coding: utf-8 -*-
"""
Pacote de geração de código.

Produz a sequência de instruções (lotes de 1 qubit, captura/movimento/soltura,
pulsos de Rydberg), o modelo de tempo e as métricas de rearranjo.
"""

__version__ = "0.0.1"
