"""Stream driver: run a maintainer over an update stream with oracle checks.

``run`` parses or generates a stream, drives the selected algorithm, writes
one metrics record per update (JSON lines), and cross-checks the maintained
guarantee against the exact oracles at the configured frequency.  Exit
status contract: 0 clean, 2 guarantee violated or step budget exceeded,
3 parse error, 4 oracle limit exceeded.
"""

from __future__ import annotations

import json
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, TextIO

from .cover import CoverMaintainer
from .errors import (
    DynMatchError,
    GuaranteeViolation,
    InvalidParams,
    OracleLimitExceeded,
    ParseError,
)
from .graph import DynamicGraph, UpdateEvent, parse_stream
from .lazy import LazyMcm, WeightedLazy
from .matching import Matching
from .schemes import DEFAULT_ALPHA, BucketedMwmScheme, GeometricMwmScheme
from .static_match import exact_mcm_oracle, exact_mwm_oracle
from .workloads import generate_workload
from .worstcase import WorstCaseMwm

ALGORITHMS = ("lazy-mcm", "lazy-mwm", "worst-mwm", "mwm-3eps", "mwm-1eps")

EXIT_OK = 0
EXIT_GUARANTEE = 2
EXIT_PARSE = 3
EXIT_ORACLE_LIMIT = 4


@dataclass
class RunConfig:
    algorithm: str = "lazy-mcm"
    eps: Fraction = Fraction(1, 4)
    n_cap: Optional[int] = None
    alpha: Fraction = DEFAULT_ALPHA
    budget_const: Optional[int] = 64
    check: str = "none"  # none | every | sample:K
    seed: int = 0
    input_path: Optional[str] = None
    gen_spec: Optional[str] = None
    metrics_path: Optional[str] = None
    oracle_edge_limit: int = 32
    oracle_vertex_limit: int = 16
    checked: bool = False

    def __post_init__(self):
        self.eps = Fraction(self.eps)
        self.alpha = Fraction(self.alpha)
        if self.algorithm not in ALGORITHMS:
            raise InvalidParams(f"unknown algorithm {self.algorithm!r}")
        if not 0 < self.eps <= Fraction(1, 2):
            raise InvalidParams(f"eps must be in (0, 1/2], got {self.eps}")
        if self.algorithm in ("lazy-mwm", "worst-mwm") and self.n_cap is None:
            raise InvalidParams(f"{self.algorithm} requires --n-cap")
        self.check_every = 0
        if self.check == "every":
            self.check_every = 1
        elif self.check.startswith("sample:"):
            self.check_every = int(self.check.split(":", 1)[1])
            if self.check_every < 1:
                raise InvalidParams("sample period must be >= 1")
        elif self.check != "none":
            raise InvalidParams(f"bad check policy {self.check!r}")


@dataclass
class MetricsRecord:
    seq: int
    m: int
    matching_size: int
    matching_weight: float
    steps_executed: int
    opt_size: Optional[int] = None
    opt_weight: Optional[float] = None
    ratio: Optional[float] = None

    def to_json(self) -> str:
        payload = {k: v for k, v in self.__dict__.items() if v is not None}
        return json.dumps(payload, sort_keys=True)


@dataclass
class RunResult:
    exit_code: int
    records: list[MetricsRecord] = field(default_factory=list)
    error: Optional[str] = None


def parse_gen_spec(spec: str) -> tuple[str, dict]:
    """``kind:key=value,key=value`` with numeric values parsed exactly."""
    kind, _, rest = spec.partition(":")
    params: dict = {}
    if rest:
        for item in rest.split(","):
            key, eq, value = item.partition("=")
            if not eq:
                raise InvalidParams(f"bad gen parameter {item!r}")
            try:
                params[key.strip()] = int(value)
            except ValueError:
                try:
                    params[key.strip()] = Fraction(value)
                except ValueError as exc:
                    raise InvalidParams(f"bad gen value {item!r}") from exc
    return kind.strip(), params


class _Driver:
    """Uniform adapter over the five maintainers."""

    def __init__(self, cfg: RunConfig):
        self.cfg = cfg
        self.weighted = cfg.algorithm != "lazy-mcm"
        self.graph = DynamicGraph(n_cap=cfg.n_cap if self.weighted else None)
        self.cover: Optional[CoverMaintainer] = None
        if cfg.algorithm == "lazy-mcm":
            self.cover = CoverMaintainer(checked=cfg.checked)
            self.algo = LazyMcm(cfg.eps, self.cover, checked=cfg.checked)
        elif cfg.algorithm == "lazy-mwm":
            self.cover = CoverMaintainer(checked=cfg.checked)
            self.algo = WeightedLazy(cfg.eps, self.cover, n_cap=cfg.n_cap,
                                     checked=cfg.checked)
        elif cfg.algorithm == "worst-mwm":
            self.algo = WorstCaseMwm(cfg.eps, cfg.n_cap,
                                     budget_const=cfg.budget_const,
                                     checked=cfg.checked)
        elif cfg.algorithm == "mwm-3eps":
            self.algo = GeometricMwmScheme(cfg.eps, cfg.alpha,
                                           n_cap=cfg.n_cap, checked=cfg.checked)
        else:
            self.algo = BucketedMwmScheme(cfg.eps, n_cap=cfg.n_cap,
                                          checked=cfg.checked)

    def step(self, ev: UpdateEvent) -> UpdateEvent:
        applied = self.graph.apply_update(ev)
        enriched = ev._replace(edge=applied)
        if self.cover is not None:
            self.cover.on_update(self.graph, enriched)
        if self.cfg.algorithm in ("mwm-3eps", "mwm-1eps"):
            self.algo.on_update(enriched)
        else:
            self.algo.on_update(self.graph, enriched)
        return enriched

    def matching(self) -> Matching:
        if self.cfg.algorithm in ("mwm-3eps", "mwm-1eps"):
            return self.algo.best()
        return self.algo.matching

    def steps_executed(self) -> int:
        if self.cfg.algorithm == "worst-mwm":
            return self.algo.steps_this_update()
        return 0

    def check_budget(self, seq: int) -> None:
        if self.cfg.algorithm != "worst-mwm":
            return
        budget = self.algo.budget_last
        if budget is not None and self.algo.steps_last > budget:
            raise GuaranteeViolation(
                seq, self.algo.steps_last / budget, "step budget exceeded"
            )

    def guarantee_ratio_bound(self) -> float:
        """Max admissible opt/maintained ratio for the configured algorithm."""
        eps, alpha = self.cfg.eps, self.cfg.alpha
        if self.cfg.algorithm == "mwm-3eps":
            a = float(alpha)
            return float((1 + eps) / (1 - eps)) * (a + 1) * a * math.log(a) / (a - 1) ** 2
        if self.cfg.algorithm == "mwm-1eps":
            return float((1 + 7 * eps) / (1 - eps))
        return float(1 + eps)

    def check_guarantee(
        self, seq: int, matching: Matching
    ) -> tuple[Optional[int], float, float]:
        cfg = self.cfg
        if cfg.algorithm == "lazy-mcm":
            opt = exact_mcm_oracle(self.graph, edge_limit=cfg.oracle_edge_limit)
            got = matching.size
            ok = (1 + cfg.eps) * got >= opt
            ratio = opt / got if got else (math.inf if opt else 1.0)
            if not ok:
                raise GuaranteeViolation(seq, ratio, "cardinality guarantee")
            return opt, float(opt), ratio
        opt_w = exact_mwm_oracle(self.graph, edge_limit=cfg.oracle_edge_limit)
        got_w = matching.weight
        eps = cfg.eps
        if cfg.algorithm in ("lazy-mwm", "worst-mwm"):
            ok = (1 + eps) * got_w >= opt_w
        elif cfg.algorithm == "mwm-1eps":
            ok = (1 + 7 * eps) * got_w >= (1 - eps) * opt_w
        else:
            ok = float(got_w) * self.guarantee_ratio_bound() >= float(opt_w)
        ratio = float(opt_w) / float(got_w) if got_w else (
            math.inf if opt_w else 1.0
        )
        if not ok:
            raise GuaranteeViolation(seq, ratio, "weight guarantee")
        return None, float(opt_w), ratio


def load_events(cfg: RunConfig) -> list[UpdateEvent]:
    if cfg.input_path is not None:
        with open(cfg.input_path) as fh:
            return list(parse_stream(fh))
    if cfg.gen_spec is not None:
        kind, params = parse_gen_spec(cfg.gen_spec)
        return generate_workload(kind, params, cfg.seed)
    return []


def run(cfg: RunConfig, metrics_out: Optional[TextIO] = None) -> RunResult:
    """Drive the configured algorithm over the stream; see module docstring
    for the exit-code contract."""
    result = RunResult(EXIT_OK)
    sink = metrics_out
    opened = None
    try:
        events = load_events(cfg)
        if cfg.metrics_path:
            opened = sink = open(cfg.metrics_path, "w")
        driver = _Driver(cfg)
        total = len(events)
        for ev in events:
            enriched = driver.step(ev)
            seq = enriched.seq
            matching = driver.matching()
            record = MetricsRecord(
                seq=seq,
                m=driver.graph.edge_count,
                matching_size=matching.size,
                matching_weight=float(matching.weight),
                steps_executed=driver.steps_executed(),
            )
            driver.check_budget(seq)
            do_check = cfg.check_every and (
                seq % cfg.check_every == 0 or seq == total
            )
            if do_check:
                opt_size, opt_weight, ratio = driver.check_guarantee(seq, matching)
                record.opt_size = opt_size
                record.opt_weight = opt_weight
                record.ratio = ratio
            result.records.append(record)
            if sink is not None:
                sink.write(record.to_json() + "\n")
    except ParseError as exc:
        result.exit_code, result.error = EXIT_PARSE, str(exc)
    except OracleLimitExceeded as exc:
        result.exit_code, result.error = EXIT_ORACLE_LIMIT, str(exc)
    except GuaranteeViolation as exc:
        result.exit_code, result.error = EXIT_GUARANTEE, str(exc)
    finally:
        if opened is not None:
            opened.close()
    return result
