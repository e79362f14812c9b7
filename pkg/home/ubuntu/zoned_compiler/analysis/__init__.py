# -*- coding: utf-8 -*-
"""
Pacote de análise do circuito e de benchmark.

Este pacote contém submódulos para:
- Escalonamento ASAP em camadas alternadas de 1 e 2 qubits.
- Análise de reuso de átomos entre camadas 2Q consecutivas.
- Comparação entre posicionadores e varredura de parâmetros (benchmark).
"""

__version__ = "0.0.2"
