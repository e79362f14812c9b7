# -*- coding: utf-8 -*-
"""
Pacote de colocação de átomos.

Contém as peças usadas pelos dois posicionadores:
- Grupos de movimentos compatíveis (restrições do AOD)
- Função de custo e heurísticas da busca
- Busca A* sobre colocações parciais
- Posicionador ciente de roteamento e posicionador de base (guloso)
"""

__version__ = "0.0.2"
