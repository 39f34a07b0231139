"""
Utilitários de entrada/saída do spinframe
"""
