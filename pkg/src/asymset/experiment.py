"""Seeded Monte-Carlo runs of the multi-level scheme."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .multilevel import SchemeParams, decode, derive_params, encode, proof_events
from .prior import Prior, entropy, huffman_weight, normalize_to_M, sample_set, satisfies_huffman

# rejection sampling gives up after this many rejections per requested trial
RETRY_FACTOR = 100


class RetryBudgetExceeded(RuntimeError):
    """Too many sampled sets violated the Huffman budget."""


@dataclass
class ExperimentConfig:
    prior: Prior  # raw prior; normalized into class M before use
    m_star: int
    delta: Fraction
    k: int
    trials: int
    seed: int = 0
    check_events: bool = False


@dataclass
class TrialRecord:
    seed: int
    items: tuple[int, ...]
    weight: float
    success: bool
    clean: bool
    level_failed: list[bool]
    events_hold: bool | None = None


@dataclass
class ExperimentReport:
    success_count: int
    trials_run: int
    rejected_trials: int
    total_bits: int
    entropy_bits: float
    mean_huffman_weight: float
    competitive_ratio: float | None
    level_failure_histogram: list[int]
    wall_clock_seconds: float
    records: list[TrialRecord] = field(default_factory=list, repr=False)

    @property
    def success_rate(self) -> float:
        return self.success_count / self.trials_run if self.trials_run else 0.0

    def as_dict(self) -> dict:
        return {
            "success_count": self.success_count,
            "trials_run": self.trials_run,
            "rejected_trials": self.rejected_trials,
            "total_bits": self.total_bits,
            "entropy_bits": self.entropy_bits,
            "mean_huffman_weight": self.mean_huffman_weight,
            "competitive_ratio": self.competitive_ratio,
            "level_failure_histogram": self.level_failure_histogram,
            "wall_clock_seconds": self.wall_clock_seconds,
        }


def run_experiment(cfg: ExperimentConfig, params: SchemeParams | None = None) -> ExperimentReport:
    """Trial i uses scheme seed cfg.seed + i and a Huffman-filtered S ~ mu^k.

    Sampling, filtering and decoding all use the class-M normalization of
    the configured prior.  A trial succeeds when the decoder returns S.
    """
    if cfg.trials < 1:
        raise ValueError("trials must be >= 1")
    if cfg.k < 1:
        raise ValueError("k must be >= 1")
    started = time.perf_counter()
    mu = normalize_to_M(cfg.prior)
    if params is None:
        params = derive_params(mu.N, cfg.m_star, cfg.delta)
    budget = RETRY_FACTOR * cfg.trials
    rejected = 0
    records = []
    histogram = [0] * params.T
    for trial in range(cfg.trials):
        trial_seed = cfg.seed + trial
        attempt = 0
        while True:
            S = sample_set(mu, cfg.k, [trial_seed, attempt])
            if satisfies_huffman(mu, S, params.m_star):
                break
            rejected += 1
            attempt += 1
            if rejected > budget:
                raise RetryBudgetExceeded(
                    f"{rejected} sampled sets exceeded the Huffman budget "
                    f"m*={params.m_star}; the prior is too heavy for it")
        S_hat, diag = decode(params, trial_seed, mu, encode(params, trial_seed, S))
        for t, failed in enumerate(diag.level_failed):
            histogram[t] += failed
        rec = TrialRecord(trial_seed, S, huffman_weight(mu, S), S_hat == S, diag.clean,
                          list(diag.level_failed))
        if cfg.check_events:
            rec.events_hold = proof_events(params, trial_seed, mu, S).hold
        records.append(rec)
    mean_weight = sum(r.weight for r in records) / len(records)
    return ExperimentReport(
        success_count=sum(r.success for r in records),
        trials_run=len(records),
        rejected_trials=rejected,
        total_bits=params.total_bits,
        entropy_bits=cfg.k * entropy(mu),
        mean_huffman_weight=mean_weight,
        competitive_ratio=params.total_bits / mean_weight if mean_weight > 0 else None,
        level_failure_histogram=histogram,
        wall_clock_seconds=time.perf_counter() - started,
        records=records,
    )
