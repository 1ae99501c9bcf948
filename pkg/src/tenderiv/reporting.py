"""Check reports produced by the verification suites."""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one named identity check.

    ``passed`` is true exactly when ``max_abs_err <= tol``.  Errors are
    scale-normalized by the producing check (see suites), so ``tol`` is the
    base tolerance of the identity.
    """

    name: str
    trials: int
    max_abs_err: float
    tol: float
    passed: bool
    seed: int

    @classmethod
    def from_measurement(cls, name, trials, max_abs_err, tol, seed):
        err = float(max_abs_err)
        return cls(name, int(trials), err, float(tol), err <= float(tol), int(seed))

    def to_obj(self):
        return {
            "name": self.name,
            "trials": self.trials,
            "max_abs_err": self.max_abs_err,
            "tol": self.tol,
            "pass": self.passed,
            "seed": self.seed,
        }


@dataclass
class RunSummary:
    """Aggregate of a suite run.

    ``wall_time_ms`` is kept for operator logs only; the serialized report
    contains reports and the overall verdict, so identical inputs produce
    identical bytes.
    """

    reports: list = field(default_factory=list)
    wall_time_ms: int = 0

    @property
    def all_pass(self):
        return all(r.passed for r in self.reports)

    def to_obj(self):
        return {
            "reports": [r.to_obj() for r in self.reports],
            "all_pass": self.all_pass,
        }
