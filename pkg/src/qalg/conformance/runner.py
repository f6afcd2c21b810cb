"""Running the property suite and reporting the outcome."""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from typing import Optional

from ..core import QAInstance, UsageError
from ..exact import Q, Scalar
from ..instances import DEFAULT_TAGS
from ..metric import DEFAULT_RESOLUTION
from ..serial import to_json, to_text
from .properties import Property, properties
from .shrink import case_complexity, shrink

SUITE_VERSION = "1.0"
DEFAULT_SEED = 20240601


@dataclass(frozen=True)
class SuiteConfig:
    instances: tuple = DEFAULT_TAGS
    cases: int = 1000
    seed: object = DEFAULT_SEED
    size: int = 4
    resolution: Scalar = DEFAULT_RESOLUTION
    groups: Optional[tuple] = None
    ids: Optional[tuple] = None
    #: only meaningful for the binary64 demo model, which compares with this tolerance
    float_tolerance: Optional[float] = None

    def __post_init__(self):
        if self.cases < 1:
            raise UsageError("cases must be at least 1")
        if Q(self.resolution) <= 0:
            raise UsageError("resolution must be positive")
        if not 1 <= self.size <= 4:
            raise UsageError("size must be between 1 and 4")
        if isinstance(self.instances, (str, QAInstance)):
            object.__setattr__(self, "instances", (self.instances,))


@dataclass
class PropertyResult:
    id: str
    instance: str
    anchor: str
    cases: int
    passed: bool
    counterexample: Optional[tuple] = None
    original: Optional[tuple] = None
    error: Optional[str] = None
    millis: int = 0
    slots: tuple = field(default=(), repr=False)

    @property
    def counterexample_components(self) -> int:
        if self.counterexample is None:
            return 0
        return case_complexity(self.slots, self.counterexample)

    def to_json(self) -> dict:
        out = {
            "id": self.id,
            "instance": self.instance,
            "anchor": self.anchor,
            "cases": self.cases,
            "pass": self.passed,
            "millis": self.millis,
        }
        if self.counterexample is not None:
            out["counterexample"] = {
                "text": [to_text(v) for v in self.counterexample],
                "elements": [to_json(v) for v in self.counterexample],
            }
            if self.error:
                out["counterexample"]["error"] = self.error
        return out


@dataclass
class ConformanceReport:
    seed: object
    instances: tuple
    results: list
    suite_version: str = SUITE_VERSION

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list:
        return [r for r in self.results if not r.passed]

    def result(self, pid: str, instance: str) -> PropertyResult:
        for r in self.results:
            if r.id == pid and r.instance == instance:
                return r
        raise KeyError((pid, instance))

    def to_json(self) -> dict:
        return {
            "suite_version": self.suite_version,
            "seed": self.seed,
            "instance": ",".join(self.instances),
            "properties": [r.to_json() for r in self.results],
        }

    def dumps(self, **kw) -> str:
        return json.dumps(self.to_json(), **kw)


def _resolve(target, float_tolerance=None) -> QAInstance:
    if isinstance(target, QAInstance):
        return target
    from .mutants import resolve_instance
    return resolve_instance(target, float_tolerance)


def _fails(p: Property, inst, case) -> tuple[bool, Optional[str]]:
    try:
        return (not p.holds(inst, case)), None
    except Exception as e:  # a model that raises on valid input is broken
        return True, f"{type(e).__name__}: {e}"


def _rng(seed, pid: str, tag: str) -> random.Random:
    return random.Random(f"{seed}:{pid}:{tag}")


def run_property(p: Property, inst: QAInstance, cases: int, seed, size: int = 4) -> PropertyResult:
    """Evaluate ``p`` on ``cases`` generated cases, stopping at the first failure."""
    n = cases if p.max_cases is None else min(cases, p.max_cases)
    slots = p.slots(inst)
    rng = _rng(seed, p.id, inst.tag)
    t0 = time.perf_counter()
    ran = 0
    bad = err = None
    for _ in range(n):
        case = p.gen(inst, rng, size)
        ran += 1
        failed, err = _fails(p, inst, case)
        if failed:
            bad = case
            break
    res = PropertyResult(p.id, inst.tag, p.anchor, ran, bad is None, slots=slots)
    if bad is not None:
        small = shrink(slots, bad, lambda c: _fails(p, inst, c)[0])
        res.original = bad
        res.counterexample = small
        res.error = _fails(p, inst, small)[1]
    res.millis = int((time.perf_counter() - t0) * 1000)
    return res


def run_suite(cfg: SuiteConfig = SuiteConfig()) -> ConformanceReport:
    insts = [_resolve(t, cfg.float_tolerance) for t in cfg.instances]
    props = properties(cfg.groups, cfg.ids)
    results = []
    for inst in insts:
        for p in props:
            if p.applies(inst):
                results.append(run_property(p, inst, cfg.cases, cfg.seed, cfg.size))
    # stable order independent of evaluation order
    results.sort(key=lambda r: (r.id, r.instance))
    return ConformanceReport(cfg.seed, tuple(i.tag for i in insts), results)


def replay(p: Property, inst: QAInstance, case: tuple) -> bool:
    """``True`` when the recorded case still fails."""
    return _fails(p, inst, case)[0]
