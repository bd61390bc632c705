"""Run configuration, check entries and the machine-readable run report."""
import csv
import io
import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import __version__
from .scalars import fmt_fraction, parse_fraction

TARGETS = ("verblunsky", "phi", "psi", "P", "Q", "eigen-psi", "eigen-prl",
           "identities", "orthogonality", "bannai-ito")
COMMANDS = ("gen", "verify")


class UsageError(ValueError):
    """Invalid command-line configuration (exit code 2)."""


@dataclass
class RunConfig:
    command: str
    target: str
    N: int
    alpha: Fraction = Fraction(0)
    beta: Fraction = Fraction(0)
    n_max: int = 10
    tolerance: float = 1e-10
    out: str = None
    format: str = "json"
    weight_form: str = "cosN"

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.target not in TARGETS:
            raise UsageError(f"unknown target {self.target!r}")
        if isinstance(self.alpha, str):
            self.alpha = _parse(self.alpha, "alpha")
        if isinstance(self.beta, str):
            self.beta = _parse(self.beta, "beta")
        self.alpha, self.beta = Fraction(self.alpha), Fraction(self.beta)
        if self.N < 1:
            raise UsageError("N must be >= 1")
        if self.n_max < 0:
            raise UsageError("n-max must be >= 0")
        if not self.tolerance > 0:
            raise UsageError("tolerance must be positive")
        if self.alpha <= -1 or self.beta <= -1:
            raise UsageError("alpha and beta must exceed -1")
        if self.format not in ("json", "csv"):
            raise UsageError(f"unknown format {self.format!r}")
        if self.weight_form not in ("cosN", "Ncos"):
            raise UsageError(f"unknown weight form {self.weight_form!r}")

    def to_json(self):
        d = asdict(self)
        d["alpha"] = fmt_fraction(self.alpha)
        d["beta"] = fmt_fraction(self.beta)
        d.pop("out")
        return d


def _parse(text, name):
    try:
        return parse_fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"{name}: {exc}") from None


@dataclass
class CheckEntry:
    name: str
    n: int = None
    status: str = "pass"
    params: dict = field(default_factory=dict)
    detail: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.status == "pass"

    def sort_key(self):
        return (self.name, -1 if self.n is None else self.n)


def check(name, ok, n=None, params=None, **detail):
    return CheckEntry(name, n, "pass" if ok else "fail", dict(params or {}), detail)


@dataclass
class RunReport:
    config: dict
    checks: list = field(default_factory=list)
    data: dict = None
    elapsed_ms: float = 0.0
    version: str = __version__

    @property
    def passed(self):
        return sum(c.passed for c in self.checks)

    @property
    def failed(self):
        return len(self.checks) - self.passed

    def to_json(self):
        out = {
            "version": self.version,
            "config": self.config,
            "checks": [asdict(c) for c in sorted(self.checks, key=CheckEntry.sort_key)],
            "summary": {"passed": self.passed, "failed": self.failed,
                        "elapsed_ms": self.elapsed_ms},
        }
        if self.data is not None:
            out["data"] = self.data
        return out

    def serialize(self):
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        checks = [CheckEntry(**c) for c in obj["checks"]]
        return cls(obj["config"], checks, obj.get("data"),
                   obj["summary"]["elapsed_ms"], obj["version"])

    def __eq__(self, other):
        return isinstance(other, RunReport) and self.to_json() == other.to_json()

    def exit_code(self):
        return 0 if self.failed == 0 else 1


def to_csv(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def checks_csv(report):
    rows = []
    for c in sorted(report.checks, key=CheckEntry.sort_key):
        rows.append([c.name, "" if c.n is None else c.n, c.status,
                     json.dumps(c.detail, sort_keys=True)])
    return to_csv(["check", "n", "status", "detail"], rows)
