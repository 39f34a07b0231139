"""
Física do spin-1/2: álgebra SU(2), frequências, propagadores, formas fechadas e oráculo
"""
