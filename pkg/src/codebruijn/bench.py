"""Side-by-side runs of the hereditary-substitution normalizer and the naive one.

Each row reports node visits inside substitution (the machine-independent
cost) next to wall time. Both engines must agree on the normal form.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterable

from . import instrument
from .lam import LAM, app, apps, lam, naive_normalize, normalize, var
from .universe import code, decode


def church(n: int):
    """The numeral ``λf.λx.f (f … x)`` as a closed term."""
    body = var(1)
    for _ in range(n):
        body = app(var(0), body)
    return lam(lam(body))


def church_square(n: int):
    """``mult n n`` with ``mult = λm.λn.λf. m (n f)``."""
    mult = lam(lam(lam(app(var(0), app(var(1), var(2))))))
    return apps(mult, church(n), church(n))


def under_binders(n: int):
    """``(λx. λy1 … λyn. x) (church n)``: the argument is carried under ``n`` binders."""
    body = var(0)
    for _ in range(n):
        body = lam(body)
    return app(lam(body), church(n))


WORKLOADS: dict[str, Callable[[int], object]] = {
    "church_square": church_square,
    "under_binders": under_binders,
}


@dataclass(frozen=True)
class Row:
    workload: str
    n: int
    steps: int
    hsub_visits: int
    naive_visits: int
    hsub_ms: float
    naive_ms: float

    HEADER = "workload\tn\tsteps\thsub_visits\tnaive_visits\thsub_ms\tnaive_ms"

    def tsv(self) -> str:
        return (f"{self.workload}\t{self.n}\t{self.steps}\t{self.hsub_visits}\t"
                f"{self.naive_visits}\t{self.hsub_ms:.3f}\t{self.naive_ms:.3f}")


def run_one(name: str, n: int, fuel: int) -> Row:
    t = WORKLOADS[name](n)
    with instrument.recording() as rec_h:
        start = time.perf_counter()
        r, steps = normalize(code(LAM, t, ()), fuel)
        hsub_ms = (time.perf_counter() - start) * 1000
    with instrument.recording() as rec_n:
        start = time.perf_counter()
        expect, naive_steps = naive_normalize(t, fuel)
        naive_ms = (time.perf_counter() - start) * 1000
    if decode(LAM, r, ()) != expect or steps != naive_steps:
        raise AssertionError(f"engines disagree on {name} {n}")
    return Row(name, n, steps, rec_h.visits, rec_n.visits, hsub_ms, naive_ms)


def run(names: Iterable[str], sizes: Iterable[int], fuel: int) -> list[Row]:
    return [run_one(w, n, fuel) for w in names for n in sizes]


def plot(rows: list[Row], path: str) -> None:
    """Visit counts against workload size, one panel per workload."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    names = sorted({r.workload for r in rows})
    fig, axes = plt.subplots(1, len(names), figsize=(5 * len(names), 4), squeeze=False)
    for ax, name in zip(axes[0], names):
        mine = [r for r in rows if r.workload == name]
        xs = [r.n for r in mine]
        ax.plot(xs, [r.hsub_visits for r in mine], marker="o", label="hereditary (co-de Bruijn)")
        ax.plot(xs, [r.naive_visits for r in mine], marker="s", label="shift/substitute (de Bruijn)")
        ax.set_title(name)
        ax.set_xlabel("n")
        ax.set_ylabel("nodes visited")
        ax.set_yscale("log")
        ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
