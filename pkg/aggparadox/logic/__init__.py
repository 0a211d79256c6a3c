from aggparadox.logic.formula import Formula, evaluate, from_models, partial_to_conjunction
from aggparadox.logic.parser import (
    FormulaParser,
    format_formula_file,
    parse,
    parse_formula_file,
    read_formula_file,
)
from aggparadox.logic.semantics import (
    entails,
    equivalent,
    max_prime_implicate_size,
    mifap_assignments,
    models,
    prime_implicates,
    truth_table,
)

__all__ = [
    "Formula",
    "FormulaParser",
    "entails",
    "equivalent",
    "evaluate",
    "format_formula_file",
    "from_models",
    "max_prime_implicate_size",
    "mifap_assignments",
    "models",
    "parse",
    "parse_formula_file",
    "partial_to_conjunction",
    "prime_implicates",
    "read_formula_file",
    "truth_table",
]
