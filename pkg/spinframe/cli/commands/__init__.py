"""
Subcomandos da CLI
Cada módulo expõe NAME, HELP, register(subparsers) e run(args) -> int
"""
