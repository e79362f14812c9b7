# -*- coding: utf-8 -*-
"""
Pacote de compilação.

Liga os estágios (escalonamento, reuso, colocação, roteamento e geração de
código) num único objeto usado por todos os comandos da linha de comando.
"""

__version__ = "0.0.1"
