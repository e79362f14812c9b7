# -*- coding: utf-8 -*-
"""
Pacote de roteamento.

Converte colocações consecutivas em passos de rearranjo paralelos que
respeitam as restrições do AOD (não cruzamento, preservação e ghost spots).
"""

__version__ = "0.0.1"
