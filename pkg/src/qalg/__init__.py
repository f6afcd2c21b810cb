"""Exact set-valued arithmetic: quasi-algebras, their norms and spectra."""

from .core import (
    ChainReport,
    QAError,
    QAInstance,
    TagMismatch,
    Unsupported,
    UsageError,
    add,
    is_regular,
    is_symmetric,
    leq,
    mul,
    neg,
    scale,
    singular_chain,
    strictly_below,
    sub,
)
from .exact import Q, Sqrt, fmt_scalar, parse_scalar
from .expr import evaluate, parse_expr, serialize
from .instances import DEFAULT_TAGS, get_instance, instance_of
from .metric import excess, hausdorff, hausdorff_oracle, norm
from .spectrum import ALL, ZERO_ONLY, RegularScope, SpectrumSet, qsp

__version__ = "0.1.0"

__all__ = [
    "ChainReport",
    "QAError",
    "QAInstance",
    "TagMismatch",
    "Unsupported",
    "UsageError",
    "add",
    "is_regular",
    "is_symmetric",
    "leq",
    "mul",
    "neg",
    "scale",
    "singular_chain",
    "strictly_below",
    "sub",
    "Q",
    "Sqrt",
    "fmt_scalar",
    "parse_scalar",
    "evaluate",
    "parse_expr",
    "serialize",
    "DEFAULT_TAGS",
    "get_instance",
    "instance_of",
    "excess",
    "hausdorff",
    "hausdorff_oracle",
    "norm",
    "ALL",
    "ZERO_ONLY",
    "RegularScope",
    "SpectrumSet",
    "qsp",
]
