"""Exact dimensional quantity calculus over partially additive fields."""

from .dimensions import DIMENSIONLESS, Dimension, dim_inv, dim_mul, dim_pow
from .errors import (
    DefinitionError,
    FieldMismatchError,
    MissingUnitError,
    NoRootError,
    NotDimensionlessError,
    ParseError,
    QcalcError,
    UnknownUnitError,
    ZeroInverseError,
)
from .evaluate import EvalOutcome, evaluate, render, run
from .expr import parse, tokenize, unparse
from .qdef import load_definitions, parse_definitions
from .quantity import (
    CanonicalPaf,
    PartialResult,
    Quantity,
    Undefined,
    q_add,
    q_div,
    q_inv,
    q_mul,
    q_neg,
    q_pow,
    q_sub,
    strong_eq,
)
from .report import CheckReport, Violation
from .scalars import ComplexRational, ExactRational, Float64, PrimeField, ScalarField, ScalarKind, scalar_nth_root
from .units import (
    UnitRegistry,
    UnitSystem,
    coherent_from_base_units,
    decompose,
    is_coherent,
    recompose,
)

__version__ = "0.1.0"
