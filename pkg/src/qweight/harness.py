"""Named verification procedures, sweeps, reports and the KL result cache.

Theorem-backed checks (example13, stable-identity, stabilization,
typeA-charge, demazure) should never fail; a FAIL there points at the
code.  Conjecture-backed checks (conj1-box, conj1-count, conj2,
monotonicity) are searches: a FAIL is a counterexample and is recorded,
never raised.
"""

from __future__ import annotations

import csv
import io
import json
import os
import threading
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Any, Iterable, Sequence

from . import crystal as cr
from .demazure import demazure_kl_check, kl_character_sum
from .kostant import kl_poly, rect_complement, stable_kl_poly
from .poly import QPolynomial
from .roots import LengthFunction, ParameterError, Partition, partitions_in_box, partitions_of
from .ssot import ssot_enumerate, x_polynomial_boxcase, x_polynomial_via_ssot
from .tableaux import charge, kostka_foulkes, reading_word, tensor_to_tableau


class Status(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    UNSUPPORTED = "UNSUPPORTED"


THEOREM_CHECKS = ("example13", "stable-identity", "stabilization", "typeA-charge", "demazure")
CONJECTURE_CHECKS = ("conj1-box", "conj1-count", "conj2", "monotonicity")
CHECKS = THEOREM_CHECKS + CONJECTURE_CHECKS


class CacheCorruption(RuntimeError):
    pass


@dataclass(frozen=True)
class CheckSpec:
    check: str
    type: str = "C"
    n: int = 0
    lam: Partition = Partition()
    mu: Partition = Partition()
    g: int | None = None
    L: str = "standard"
    k_max: int | None = None
    qmax: int | None = None
    umax: int | None = None
    bound: int | None = None

    def __post_init__(self):
        if self.check not in CHECKS:
            raise ParameterError(f"unknown check {self.check!r}")
        object.__setattr__(self, "lam", Partition(self.lam))
        object.__setattr__(self, "mu", Partition(self.mu))
        object.__setattr__(self, "type", self.type.upper())

    def key(self) -> tuple:
        return (self.check, self.type, self.n, self.g if self.g is not None else -1,
                self.lam.parts, self.mu.parts, self.L)

    def params(self) -> str:
        bits = [f"type={self.type}", f"n={self.n}", f"lambda={self.lam}", f"mu={self.mu}"]
        for name in ("g", "k_max", "qmax", "umax", "bound"):
            v = getattr(self, name)
            if v is not None:
                bits.append(f"{name}={v}")
        if self.L != "standard":
            bits.append(f"L={self.L}")
        return " ".join(bits)

    def to_json(self) -> dict:
        d = asdict(self)
        d["lam"] = list(self.lam.parts)
        d["mu"] = list(self.mu.parts)
        return {k: v for k, v in d.items() if v is not None}

    @classmethod
    def from_json(cls, d: dict) -> CheckSpec:
        return cls(**d)


@dataclass
class CheckReport:
    spec: CheckSpec
    status: Status
    lhs: Any = None
    rhs: Any = None
    counterexample: dict | None = None
    detail: str = ""
    millis: float = 0.0

    @property
    def theorem_backed(self) -> bool:
        return self.spec.check in THEOREM_CHECKS

    def to_json(self, timing: bool = True) -> dict:
        d = {
            "spec": self.spec.to_json(),
            "status": self.status.value,
            "lhs": _jsonable(self.lhs),
            "rhs": _jsonable(self.rhs),
        }
        if self.counterexample is not None:
            d["counterexample"] = _jsonable(self.counterexample)
        if self.detail:
            d["detail"] = self.detail
        if timing:
            d["millis"] = round(self.millis, 3)
        return d


def _jsonable(x):
    if isinstance(x, QPolynomial):
        return list(x.coeffs)
    if isinstance(x, Partition):
        return list(x.parts)
    if isinstance(x, cr.BoxTensor):
        return x.to_json()
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


# --------------------------------------------------------------------------- cache

def _cache_key(type_, n, lam, mu, L, stable=False) -> tuple:
    return (type_, n, tuple(Partition(lam).parts), tuple(Partition(mu).parts), L, bool(stable))


class KLCache:
    """Append-only JSON-lines store of computed KL polynomials.

    One object per line::

        {"type":"C","n":3,"lambda":[1,1],"mu":[],"L":"standard","coeffs":[0,0,1,0,1]}

    Stable values carry an extra ``"stable": true``.
    """

    def __init__(self, path: str | os.PathLike | None = None):
        self.path = os.fspath(path) if path is not None else None
        self.entries: dict[tuple, tuple[int, ...]] = {}
        self.hits = 0
        self.misses = 0
        self._lock = threading.Lock()
        if self.path and os.path.exists(self.path):
            self._load()

    def _load(self):
        with open(self.path, "rb") as fh:
            offset = 0
            for raw in fh:
                line = raw.strip()
                if line:
                    try:
                        obj = json.loads(line)
                        key = _cache_key(obj["type"], obj["n"], obj["lambda"], obj["mu"],
                                         obj["L"], obj.get("stable", False))
                        coeffs = tuple(int(c) for c in obj["coeffs"])
                    except (ValueError, KeyError, TypeError) as exc:
                        raise CacheCorruption(f"{self.path}: bad entry at byte offset {offset}: {exc}") from None
                    old = self.entries.get(key)
                    if old is not None and old != coeffs:
                        raise CacheCorruption(f"{self.path}: conflicting entry at byte offset {offset}")
                    self.entries[key] = coeffs
                offset += len(raw)

    def snapshot(self) -> dict:
        return dict(self.entries)

    def get(self, key) -> QPolynomial | None:
        c = self.entries.get(key)
        return None if c is None else QPolynomial(c)

    def put(self, key, poly: QPolynomial) -> None:
        with self._lock:
            if key in self.entries:
                return
            self.entries[key] = poly.coeffs
            if self.path:
                type_, n, lam, mu, L, stable = key
                obj = {"type": type_, "n": n, "lambda": list(lam), "mu": list(mu), "L": L,
                       "coeffs": list(poly.coeffs)}
                if stable:
                    obj["stable"] = True
                with open(self.path, "a") as fh:
                    fh.write(json.dumps(obj, separators=(",", ":")) + "\n")

    def kl(self, type_, n, lam, mu, L="standard", stable=False) -> QPolynomial:
        key = _cache_key(type_, n, lam, mu, L, stable)
        hit = self.get(key)
        if hit is not None:
            self.hits += 1
            return hit
        self.misses += 1
        fn = stable_kl_poly if stable else kl_poly
        p = fn(type_, n, Partition(lam), Partition(mu), LengthFunction.parse(L))
        self.put(key, p)
        return p


# --------------------------------------------------------------------------- checks

def _report(spec, ok, lhs, rhs, counterexample=None, detail=""):
    status = Status.PASS if ok else Status.FAIL
    if ok:
        counterexample = None
    elif counterexample is None:
        counterexample = {"lhs": lhs, "rhs": rhs}
    return CheckReport(spec, status, lhs, rhs, counterexample, detail)


EXAMPLE13_TENSORS = (((-1, 1, 1), 2, 1), ((1, -1, 1), 4, 1), ((-2, 2, 1), 3, 2))


def verify_example_13(cache: KLCache | None = None, strict_H: bool = True,
                      reverse_tensors: bool = False) -> CheckReport:
    """Both KL polynomials of the worked example and its three crystal elements.

    ``strict_H=False`` and ``reverse_tensors=True`` are negative controls.
    """
    cache = cache or KLCache()
    spec = CheckSpec("example13", "C", 3, Partition((1, 1)), Partition())
    kl1 = cache.kl("C", 3, (1, 1), ())
    kl2 = cache.kl("C", 3, (2, 2, 1), (1, 1, 1))
    want1 = QPolynomial([0, 0, 1, 0, 1])
    want2 = QPolynomial([0, 0, 1, 1, 1])
    found = cr.enumerate_highest(3, (1, 0, 0), 3)
    if reverse_tensors:
        found = [cr.BoxTensor(tuple(reversed(t.letters))) for t in found]
    got = {t.letters: (cr.energy(t, strict=strict_H), t.max_index) for t in found}
    want = {letters: (e, eps) for letters, e, eps in EXAMPLE13_TENSORS}
    problems = []
    if kl1 != want1:
        problems.append(f"KL_(1,1),() = {kl1}")
    if kl2 != want2:
        problems.append(f"KL_(2,2,1),(1,1,1) = {kl2}")
    if got != want:
        problems.append("crystal elements/energies differ")
    return _report(spec, not problems, [kl1, kl2, sorted(got.items())], [want1, want2, sorted(want.items())],
                   counterexample={"problems": problems, "elements": {str(k): v for k, v in got.items()}}
                   if problems else None, detail="; ".join(problems))


def verify_conj1_boxcase(n: int, g: int, lam, cache: KLCache | None = None) -> CheckReport:
    cache = cache or KLCache()
    lam = Partition(lam)
    spec = CheckSpec("conj1-box", "C", n, lam, Partition([g - 1] * n), g=g)
    lt = rect_complement(lam, g, n)
    lhs = cache.kl("C", n, lam, spec.mu)
    rhs = x_polynomial_boxcase(lt, n, g)
    via_ssot = x_polynomial_via_ssot(lt, n, g)
    ok = lhs == rhs == via_ssot
    detail = "" if rhs == via_ssot else f"SSOT route gave {via_ssot}"
    return _report(spec, ok, lhs, rhs, detail=detail)


def verify_conj1_count(n: int, g: int, lam, mu, cache: KLCache | None = None) -> CheckReport:
    cache = cache or KLCache()
    lam, mu = Partition(lam), Partition(mu)
    spec = CheckSpec("conj1-count", "C", n, lam, mu, g=g)
    lt, mt = rect_complement(lam, g, n), rect_complement(mu, g, n)
    count = len(ssot_enumerate(lt, mt.parts, g))
    mult = cache.kl("C", n, lam, mu)(1)
    return _report(spec, count == mult, count, mult)


def verify_conj2(n: int, lam, mu, cache: KLCache | None = None) -> CheckReport:
    cache = cache or KLCache()
    spec = CheckSpec("conj2", "C", n, lam, mu, L="glA")
    p = cache.kl("C", n, lam, mu, "glA")
    return _report(spec, p.is_nonnegative(), p, None,
                   counterexample={"poly": p, "negative": {e: c for e, c in p.terms().items() if c < 0}})


def verify_monotonicity(n: int, lam, mu, cache: KLCache | None = None) -> CheckReport:
    cache = cache or KLCache()
    lam, mu = Partition(lam), Partition(mu)
    spec = CheckSpec("monotonicity", "C", n, lam, mu)
    big = cache.kl("C", n, lam.shifted(1, n), mu.shifted(1, n))
    small = cache.kl("C", n, lam, mu)
    diff = big - small
    return _report(spec, diff.is_nonnegative(), big, small,
                   counterexample={"difference": diff})


def verify_stable_identity(type_: str, n: int, lam, mu, cache: KLCache | None = None) -> CheckReport:
    """q^{(|lam|-|mu|)/2} * stable KL^{glA} == stable KL, exactly.

    The half comes from the substitution e^{e_i} -> q^{1/2} e^{e_i}, which
    sends each root outside the type-A subsystem to q times itself when all
    such roots have coordinate sum 2.  An odd size difference only passes
    when both sides vanish.
    """
    cache = cache or KLCache()
    lam, mu = Partition(lam), Partition(mu)
    spec = CheckSpec("stable-identity", type_, n, lam, mu)
    gl = cache.kl(spec.type, n, lam, mu, "glA", stable=True)
    st = cache.kl(spec.type, n, lam, mu, "standard", stable=True)
    d = lam.size - mu.size
    if d % 2:
        ok = gl.is_zero() and st.is_zero()
        return _report(spec, ok, gl, st, detail="odd size difference")
    if d >= 0:
        lhs, rhs = gl.shift(d // 2), st
    else:
        lhs, rhs = gl, st.shift(-d // 2)
    return _report(spec, lhs == rhs, lhs, rhs)


def verify_stabilization(type_: str, n: int, lam, mu, k_max: int | None = None,
                         cache: KLCache | None = None) -> CheckReport:
    cache = cache or KLCache()
    lam, mu = Partition(lam), Partition(mu)
    explicit = k_max is not None
    if k_max is None:
        k_max = lam.size + mu.size + n
    spec = CheckSpec("stabilization", type_, n, lam, mu, k_max=k_max if explicit else None)
    stable = cache.kl(spec.type, n, lam, mu, stable=True)
    for limit in ((k_max,) if explicit else (k_max, 2 * k_max)):
        seq = [cache.kl(spec.type, n, lam.shifted(k, n), mu.shifted(k, n)) for k in range(limit + 1)]
        k_star = None
        for k in range(limit, -1, -1):
            if seq[k] != stable:
                break
            k_star = k
        if k_star is not None:
            return CheckReport(spec, Status.PASS, seq[-1], stable, None, f"k*={k_star}")
    return _report(spec, False, seq[-1], stable,
                   counterexample={"sequence": seq, "stable": stable},
                   detail=f"no stabilization by k={limit}")


def verify_typeA_charge(n: int, weight_bound: int, cache: KLCache | None = None) -> CheckReport:
    cache = cache or KLCache()
    spec = CheckSpec("typeA-charge", "A", n, bound=weight_bound)
    pairs = 0
    for m in range(weight_bound + 1):
        parts = list(partitions_of(m, max_length=n))
        for lam in parts:
            for mu in parts:
                pairs += 1
                a = cache.kl("A", n, lam, mu)
                b = kostka_foulkes(lam, mu)
                if a != b:
                    return _report(spec, False, a, b,
                                   counterexample={"lambda": lam, "mu": mu, "kl": a, "kostka_foulkes": b})
    tensors = 0
    for m in range(1, n + 1):
        for shape in partitions_of(m):
            for t in cr.enumerate_highest(m, shape.padded(m), m, positive_only=True):
                tensors += 1
                e, c = cr.energy(t), charge(reading_word(tensor_to_tableau(t)))
                if e != c:
                    return _report(spec, False, e, c, counterexample={"tensor": t, "energy": e, "charge": c})
    return CheckReport(spec, Status.PASS, pairs, tensors, None, f"{pairs} KL pairs, {tensors} tensors")


def verify_demazure(type_: str, n: int, lam, L: str = "standard", qmax: int = 6,
                    umax: int | None = None) -> CheckReport:
    lam = Partition(lam)
    spec = CheckSpec("demazure", type_, n, lam, L=L, qmax=qmax, umax=umax)
    Lf = LengthFunction.parse(L)
    lhs = demazure_kl_check(spec.type, n, lam, Lf, qmax, umax)
    rhs, table = kl_character_sum(spec.type, n, lam, Lf, qmax, umax)
    if lhs == rhs:
        return CheckReport(spec, Status.PASS, len(lhs), len(table), None,
                           f"{len(lhs)} weights, {len(table)} characters")
    diff = lhs - rhs
    wt = min(diff.terms)
    return _report(spec, False, len(lhs), len(table),
                   counterexample={"weight": list(wt), "demazure": lhs[wt], "kl_sum": rhs[wt]})


def run_check(spec: CheckSpec, cache: KLCache | None = None) -> CheckReport:
    """Dispatch a CheckSpec; the CheckSpec alone determines the result."""
    cache = cache or KLCache()
    t0 = time.perf_counter()
    c = spec.check
    try:
        if c == "example13":
            rep = verify_example_13(cache)
        elif c == "conj1-box":
            rep = verify_conj1_boxcase(spec.n, spec.g, spec.lam, cache)
        elif c == "conj1-count":
            rep = verify_conj1_count(spec.n, spec.g, spec.lam, spec.mu, cache)
        elif c == "conj2":
            rep = verify_conj2(spec.n, spec.lam, spec.mu, cache)
        elif c == "monotonicity":
            rep = verify_monotonicity(spec.n, spec.lam, spec.mu, cache)
        elif c == "stable-identity":
            rep = verify_stable_identity(spec.type, spec.n, spec.lam, spec.mu, cache)
        elif c == "stabilization":
            rep = verify_stabilization(spec.type, spec.n, spec.lam, spec.mu, spec.k_max, cache)
        elif c == "typeA-charge":
            rep = verify_typeA_charge(spec.n, spec.bound if spec.bound is not None else 6, cache)
        else:
            rep = verify_demazure(spec.type, spec.n, spec.lam, spec.L,
                                  spec.qmax if spec.qmax is not None else 6, spec.umax)
    except cr.UnsupportedRegion as exc:
        rep = CheckReport(spec, Status.UNSUPPORTED, detail=str(exc))
    rep.spec = spec
    rep.millis = (time.perf_counter() - t0) * 1000
    return rep


# --------------------------------------------------------------------------- grids

def grid(check: str, n_max: int = 4, g_max: int = 3, size_max: int = 8,
         types: Sequence[str] = ("C",), L: str = "standard") -> list[CheckSpec]:
    """Parameter grid for one check; sizes follow the documented defaults."""
    specs = []
    if check == "example13":
        return [CheckSpec("example13", "C", 3, (1, 1), ())]
    if check == "typeA-charge":
        return [CheckSpec("typeA-charge", "A", n, bound=size_max) for n in range(1, n_max + 1)]
    for n in range(1, n_max + 1):
        if check == "conj1-box":
            for g in range(1, g_max + 1):
                specs += [CheckSpec(check, "C", n, lam, [g - 1] * n, g=g) for lam in partitions_in_box(n, g)]
        elif check == "conj1-count":
            for g in range(1, g_max + 1):
                box = partitions_in_box(n, g)
                specs += [CheckSpec(check, "C", n, lam, mu, g=g) for lam in box for mu in box]
        elif check in ("conj2", "monotonicity"):
            for a in range(size_max + 1):
                for lam in partitions_of(a, max_length=n):
                    for b in range(a + 1):
                        specs += [CheckSpec(check, "C", n, lam, mu, L="glA" if check == "conj2" else "standard")
                                  for mu in partitions_of(b, max_length=n)]
        elif check in ("stable-identity", "stabilization"):
            for t in types:
                if t.upper() == "D" and n < 2:
                    continue
                for a in range(size_max + 1):
                    for lam in partitions_of(a, max_length=n):
                        top = a if check == "stable-identity" else size_max
                        for b in range(top + 1):
                            specs += [CheckSpec(check, t, n, lam, mu) for mu in partitions_of(b, max_length=n)]
        elif check == "demazure":
            for t in types:
                if t.upper() == "D" and n < 2:
                    continue
                for a in range(size_max + 1):
                    specs += [CheckSpec(check, t, n, lam, L=L, qmax=6) for lam in partitions_of(a, max_length=n)]
        else:
            raise ParameterError(f"unknown check {check!r}")
    return specs


# --------------------------------------------------------------------------- sweeps

@dataclass
class SweepSummary:
    counts: dict = field(default_factory=dict)
    kl_evaluations: int = 0
    cache_hits: int = 0

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def to_json(self) -> dict:
        return {"total": self.total, "counts": {f"{c}:{s}": v for (c, s), v in sorted(self.counts.items())},
                "kl_evaluations": self.kl_evaluations, "cache_hits": self.cache_hits}


_WORKER_CACHE: KLCache | None = None


def _init_worker(snapshot):
    global _WORKER_CACHE
    _WORKER_CACHE = KLCache()
    _WORKER_CACHE.entries.update(snapshot)


def _run_in_worker(spec):
    before = set(_WORKER_CACHE.entries)
    hits, misses = _WORKER_CACHE.hits, _WORKER_CACHE.misses
    rep = run_check(spec, _WORKER_CACHE)
    new = {k: v for k, v in _WORKER_CACHE.entries.items() if k not in before}
    return rep, new, _WORKER_CACHE.hits - hits, _WORKER_CACHE.misses - misses


def run_sweep(specs: Iterable[CheckSpec], jobs: int = 1,
              cache: KLCache | str | os.PathLike | None = None) -> tuple[list[CheckReport], SweepSummary]:
    """Run every spec; reports come back sorted by spec key whatever the schedule."""
    if not isinstance(cache, KLCache):
        cache = KLCache(cache)
    specs = sorted(set(specs), key=CheckSpec.key)
    summary = SweepSummary()
    reports = []
    if jobs <= 1 or len(specs) < 2:
        h0, m0 = cache.hits, cache.misses
        reports = [run_check(s, cache) for s in specs]
        summary.cache_hits, summary.kl_evaluations = cache.hits - h0, cache.misses - m0
    else:
        with ProcessPoolExecutor(max_workers=jobs, initializer=_init_worker,
                                 initargs=(cache.snapshot(),)) as ex:
            for rep, new, hits, misses in ex.map(_run_in_worker, specs, chunksize=8):
                reports.append(rep)
                for k in sorted(new):
                    cache.put(k, QPolynomial(new[k]))
                summary.cache_hits += hits
                summary.kl_evaluations += misses
    for r in reports:
        key = (r.spec.check, r.status.value)
        summary.counts[key] = summary.counts.get(key, 0) + 1
    return reports, summary


def exit_code(reports: Iterable[CheckReport]) -> int:
    """0 all good, 1 a conjecture counterexample, 3 a theorem-backed failure."""
    reports = list(reports)
    if any(r.status is Status.FAIL and r.theorem_backed for r in reports):
        return 3
    if any(r.status is Status.FAIL for r in reports):
        return 1
    return 0


def reports_json(reports: Sequence[CheckReport], timing: bool = True) -> str:
    return json.dumps([r.to_json(timing) for r in reports], indent=1, sort_keys=True)


def reports_csv(reports: Sequence[CheckReport], timing: bool = True) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["check", "params", "status", "lhs", "rhs", "millis"])
    for r in reports:
        w.writerow([r.spec.check, r.spec.params(), r.status.value,
                    json.dumps(_jsonable(r.lhs)), json.dumps(_jsonable(r.rhs)),
                    f"{r.millis:.3f}" if timing else ""])
    return buf.getvalue()


def write_reports(reports: Sequence[CheckReport], path: str | os.PathLike) -> None:
    """JSON array at ``path`` and the CSV summary next to it."""
    path = os.fspath(path)
    with open(path, "w") as fh:
        fh.write(reports_json(reports))
    root, _ = os.path.splitext(path)
    with open(root + ".csv", "w") as fh:
        fh.write(reports_csv(reports))


def pipelines_agree(shape, n: int, g_cap: int) -> bool:
    """SSOT images and epsilon-filtered highest tensors coincide."""
    from .ssot import box_pipelines
    a, b = box_pipelines(shape, n, g_cap)
    return a == b


__all__ = [
    "CHECKS", "CONJECTURE_CHECKS", "THEOREM_CHECKS", "CacheCorruption", "CheckReport", "CheckSpec",
    "KLCache", "Status", "SweepSummary", "exit_code", "grid", "pipelines_agree", "reports_csv",
    "reports_json", "run_check", "run_sweep", "verify_conj1_boxcase", "verify_conj1_count", "verify_conj2",
    "verify_demazure", "verify_example_13", "verify_monotonicity", "verify_stabilization",
    "verify_stable_identity", "verify_typeA_charge", "write_reports",
]
