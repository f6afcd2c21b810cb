"""Randomised conformance testing: generators, shrinking, properties, reports."""

from .generators import draw, generate, stream
from .shrink import shrink

_LAZY = {
    "SuiteConfig": "runner", "ConformanceReport": "runner", "PropertyResult": "runner",
    "run_suite": "runner", "run_property": "runner", "replay": "runner",
    "REGISTRY": "properties", "properties": "properties", "Property": "properties",
    "MUTANTS": "mutants", "resolve_instance": "mutants",
}


def __getattr__(name):
    # the property registry imports the morphisms module, which itself uses
    # the generators above, so the heavier modules load on first use
    if name in _LAZY:
        import importlib
        mod = importlib.import_module(f".{_LAZY[name]}", __name__)
        return getattr(mod, name)
    raise AttributeError(name)


__all__ = ["draw", "generate", "stream", "shrink", *_LAZY]
