# -*- coding: utf-8 -*-
"""
Pacote da arquitetura zonada.

Contém o modelo geométrico das zonas de armazenamento e de emaranhamento,
as constantes físicas (aceleração, tempo de transferência entre armadilhas)
e as consultas espaciais usadas pelo posicionador e pelo roteador.
"""

__version__ = "0.0.1"
