"""
spinframe - Probabilidades de transição de um spin-1/2 em campo magnético girante
Formas fechadas de 1937, 1954 e a fórmula unificada de dois referenciais,
validadas contra um integrador numérico da equação de Schrödinger
"""

__version__ = "1.0.0"
__author__ = "spinframe Team"
