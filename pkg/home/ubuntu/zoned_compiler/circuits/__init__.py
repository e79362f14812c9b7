# -*- coding: utf-8 -*-
"""
Pacote de circuitos.

Contém a representação de circuitos (portas de 1 qubit e cz), o leitor do
subconjunto de OpenQASM 2.0, a forma JSON e os geradores de circuitos
sintéticos usados no benchmark.
"""

__version__ = "0.0.1"
