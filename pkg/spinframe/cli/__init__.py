"""
Interface de linha de comando do spinframe
"""
