# Testes do spinframe: física (su2, model, propagators, closed_forms, oracle) e CLI
