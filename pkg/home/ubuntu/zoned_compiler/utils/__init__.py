# -*- coding: utf-8 -*-
"""
Pacote de utilitários.

Este pacote contém a hierarquia de exceções do compilador e funções
auxiliares (logging, JSON, variação percentual) usadas em várias partes
do aplicativo.
"""

__version__ = "0.0.2"
