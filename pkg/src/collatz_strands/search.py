"""Exhaustive big-integer searches for within-strand cycles.

Two equations are scanned over a rectangle of exponents:

* ``appendix``: 3**a - 2**b * (2**a - 1) = (4 * 3**a + 1) / c, the
  exponential form printed for one residue case, kept verbatim.
* ``unified``: (2j + 1) * (2**(i+k+1) - 3**i) = 2**(k+1) - 1, the condition
  for a restart point of J to land exactly on the boundary through J
  (then 2J + 1 = (2j + 1) * 3**(i-1)).

Scans are partitioned by the first exponent. A partition is a pure function
of its index, so any number of worker processes produce the same report.
Progress can be checkpointed to a JSON file and resumed.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .cadogan import c
from .core import collatz_step
from .errors import BoundsMismatch, CorruptCheckpoint
from .trajectory import Classification, classify_restart

log = logging.getLogger(__name__)

CHECKPOINT_VERSION = 1
CHECKPOINT_EVERY_CELLS = 2**16
CHECKPOINT_EVERY_SECONDS = 5.0

# kind -> (partition bound key, offset bound key, lowest offset value)
_LAYOUT = {
    "appendix": ("a_max", "b_max", 1),
    "unified": ("i_max", "k_max", 0),
}


@dataclass
class SearchReport:
    kind: str
    bounds: dict
    solutions: list = field(default_factory=list)
    cells_total: int = 0
    scanned: int = 0
    skipped: int = 0
    cursor: dict | None = None
    elapsed_seconds: float = 0.0

    @property
    def complete(self) -> bool:
        return self.cursor is None

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "kind": self.kind,
            "bounds": dict(self.bounds),
            "solutions": self.solutions,
            "cells_total": self.cells_total,
            "scanned": self.scanned,
            "skipped": self.skipped,
            "complete": self.complete,
            "cursor": self.cursor,
        }
        if timing:
            d["elapsed_seconds"] = round(self.elapsed_seconds, 6)
        return d

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True) + "\n"


# -- cells -------------------------------------------------------------------

def appendix_cell(a: int, b: int):
    """Evaluate one (a, b). Returns None when skipped, else the solution dict or False."""
    p3 = 3**a
    lhs = p3 - (((1 << a) - 1) << b)
    if lhs <= 0:
        return None
    q, r = divmod(4 * p3 + 1, lhs)
    if r:
        return False
    return {
        "a": a,
        "b": b,
        "c": q,
        "well_formed": q % 6 == 5,
        "unified_agrees": unified_holds(a, b - 1, (q - 1) // 2) if q % 2 else False,
    }


def unified_filter(i: int, k: int) -> bool:
    # 0 < 2^(i+k+1) - 3^i <= 2^(k+1) - 1, decided by comparisons only
    p3 = 3**i
    return (1 << (i + k + 1)) > p3 and ((1 << (k + 1)) * ((1 << i) - 1)) <= p3 - 1


def unified_cell(i: int, k: int):
    if not unified_filter(i, k):
        return None
    d = (1 << (i + k + 1)) - 3**i
    q, r = divmod((1 << (k + 1)) - 1, d)
    if r or q % 2 == 0:
        return False
    j = (q - 1) // 2
    return {"i": i, "k": k, "j": j, "J": (q * 3 ** (i - 1) - 1) // 2}


def unified_holds(i: int, k: int, j: int) -> bool:
    return (2 * j + 1) * ((1 << (i + k + 1)) - 3**i) == (1 << (k + 1)) - 1


_CELL = {"appendix": appendix_cell, "unified": unified_cell}


def _solution_key(kind, s):
    return (s["a"], s["b"]) if kind == "appendix" else (s["i"], s["k"])


def _scan_partition(kind: str, p: int, start: int, stop: int):
    """Cells with offsets [start, stop) of partition p -> (solutions, scanned)."""
    cell = _CELL[kind]
    base = _LAYOUT[kind][2]
    sols, scanned = [], 0
    for off in range(start, stop):
        res = cell(p, base + off)
        if res is None:
            continue
        scanned += 1
        if res:
            sols.append(res)
    return sols, scanned


# -- bounds and predicted counts ---------------------------------------------

def _check_bounds(kind: str, bounds: dict) -> tuple[int, int]:
    if kind not in _LAYOUT:
        raise ValueError(f"unknown search kind {kind!r}")
    pk, ok, _ = _LAYOUT[kind]
    if set(bounds) != {pk, ok}:
        raise ValueError(f"{kind} bounds need exactly {pk} and {ok}")
    n_part, width = bounds[pk], bounds[ok]
    if not (isinstance(n_part, int) and isinstance(width, int)):
        raise ValueError("bounds must be integers")
    if n_part < 1 or width < 1:
        raise ValueError("bounds must be >= 1")
    if kind == "unified":
        width += 1  # k runs from 0
    return n_part, width


def predicted_scanned(kind: str, bounds: dict) -> int:
    """Number of cells that pass the cheap skip filter, counted per row analytically."""
    n_part, width = _check_bounds(kind, bounds)
    total = 0
    if kind == "appendix":
        b_max = bounds["b_max"]
        for a in range(1, n_part + 1):
            # 2^b (2^a - 1) < 3^a  <=>  2^b <= (3^a - 1) // (2^a - 1)
            top = ((3**a - 1) // ((1 << a) - 1)).bit_length() - 1
            total += max(0, min(top, b_max))
    else:
        k_max = bounds["k_max"]
        for i in range(1, n_part + 1):
            lo = max(0, (3**i).bit_length() - i - 1)
            hi = ((3**i - 1) // ((1 << i) - 1)).bit_length() - 2
            total += max(0, min(hi, k_max) - lo + 1)
    return total


# -- checkpoint files ----------------------------------------------------------

def _write_checkpoint(path, kind, bounds, cursor, solutions, scanned):
    doc = {
        "version": CHECKPOINT_VERSION,
        "kind": kind,
        "bounds": bounds,
        "cursor": cursor,
        "solutions": solutions,
        "scanned": scanned,
    }
    path = os.fspath(path)
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".ckpt-", suffix=".json")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as f:
            json.dump(doc, f, indent=2, sort_keys=True)
            f.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_checkpoint(path) -> dict:
    try:
        with open(path, encoding="utf-8") as f:
            doc = json.load(f)
    except (OSError, ValueError) as e:
        raise CorruptCheckpoint(f"cannot read checkpoint {path}: {e}") from e
    try:
        if doc["version"] != CHECKPOINT_VERSION:
            raise CorruptCheckpoint(f"unsupported checkpoint version {doc['version']}")
        kind = doc["kind"]
        if kind not in _LAYOUT:
            raise CorruptCheckpoint(f"unknown kind {kind!r}")
        bounds = doc["bounds"]
        cur = doc["cursor"]
        partition, offset = cur["partition"], cur["offset"]
        scanned = doc["scanned"]
        solutions = doc["solutions"]
        ints = (partition, offset, scanned)
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in ints):
            raise CorruptCheckpoint("cursor and scanned must be integers")
        if not isinstance(solutions, list) or not isinstance(bounds, dict):
            raise CorruptCheckpoint("malformed solutions or bounds")
    except (KeyError, TypeError) as e:
        raise CorruptCheckpoint(f"checkpoint {path} is missing fields: {e}") from e
    try:
        n_part, width = _check_bounds(kind, bounds)
    except ValueError as e:
        raise BoundsMismatch(str(e)) from e
    done = (partition - 1) * width + offset
    if not (1 <= partition <= n_part + 1 and 0 <= offset < width) or scanned > done:
        raise BoundsMismatch(f"cursor {cur} is inconsistent with bounds {bounds}")
    for s in solutions:
        key = _solution_key(kind, s)
        if not (1 <= key[0] <= n_part) or (key[0], key[1] - _LAYOUT[kind][2]) >= (partition, offset):
            raise BoundsMismatch(f"solution {s} lies outside the scanned region")
    return doc


# -- driver ------------------------------------------------------------------

def run_search(
    kind: str,
    bounds: dict,
    *,
    workers: int = 1,
    checkpoint=None,
    stop_after: int | None = None,
    _resume: dict | None = None,
) -> SearchReport:
    """Scan the whole rectangle (or continue from ``_resume``).

    ``stop_after`` ends the run after roughly that many cells, writing a
    checkpoint; the returned report then carries the resume cursor.
    """
    n_part, width = _check_bounds(kind, bounds)
    bounds = dict(bounds)
    if _resume:
        partition = _resume["cursor"]["partition"]
        offset = _resume["cursor"]["offset"]
        solutions = list(_resume["solutions"])
        scanned = _resume["scanned"]
    else:
        partition, offset, solutions, scanned = 1, 0, [], 0

    t0 = time.monotonic()
    last_ckpt_time = t0
    cells_since_ckpt = 0
    cells_this_run = 0

    def maybe_checkpoint(force=False):
        nonlocal last_ckpt_time, cells_since_ckpt
        if checkpoint is None:
            return
        now = time.monotonic()
        if force or cells_since_ckpt >= CHECKPOINT_EVERY_CELLS or now - last_ckpt_time >= CHECKPOINT_EVERY_SECONDS:
            _write_checkpoint(
                checkpoint, kind, bounds,
                {"partition": partition, "offset": offset}, solutions, scanned,
            )
            last_ckpt_time = now
            cells_since_ckpt = 0

    def budget_left():
        return None if stop_after is None else stop_after - cells_this_run

    try:
        if workers <= 1:
            while partition <= n_part:
                stop = width
                left = budget_left()
                if left is not None:
                    if left <= 0:
                        break
                    stop = min(width, offset + left)
                # chunks keep checkpoint cadence without per-cell bookkeeping
                stop = min(stop, offset + CHECKPOINT_EVERY_CELLS)
                sols, sc = _scan_partition(kind, partition, offset, stop)
                solutions.extend(sols)
                scanned += sc
                n = stop - offset
                cells_this_run += n
                cells_since_ckpt += n
                offset = stop
                if offset == width:
                    partition, offset = partition + 1, 0
                maybe_checkpoint()
        else:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                while partition <= n_part:
                    left = budget_left()
                    if left is not None and left <= 0:
                        break
                    batch = list(range(partition, min(n_part, partition + 4 * workers - 1) + 1))
                    starts = [offset] + [0] * (len(batch) - 1)
                    results = pool.map(
                        _scan_partition,
                        [kind] * len(batch), batch, starts, [width] * len(batch),
                    )
                    for p, start, (sols, sc) in zip(batch, starts, results):
                        solutions.extend(sols)
                        scanned += sc
                        n = width - start
                        cells_this_run += n
                        cells_since_ckpt += n
                        partition, offset = p + 1, 0
                        maybe_checkpoint()
                        left = budget_left()
                        if left is not None and left <= 0:
                            break
    except KeyboardInterrupt:
        maybe_checkpoint(force=True)
        raise

    solutions.sort(key=lambda s: _solution_key(kind, s))
    complete = partition > n_part
    cursor = None if complete else {"partition": partition, "offset": offset}
    if checkpoint is not None:
        maybe_checkpoint(force=True)
    done = n_part * width if complete else (partition - 1) * width + offset
    report = SearchReport(
        kind=kind,
        bounds=bounds,
        solutions=solutions,
        cells_total=n_part * width,
        scanned=scanned,
        skipped=done - scanned,
        cursor=cursor,
        elapsed_seconds=time.monotonic() - t0,
    )
    for s in solutions:
        if kind == "appendix" and (s["a"], s["b"]) != (1, 1):
            log.warning("appendix equation has a new solution: %s", s)
        if kind == "unified" and s["j"] > 0:
            log.warning("nontrivial within-strand cycle candidate: %s", s)
    return report


def appendix_search(a_max: int, b_max: int, **kw) -> SearchReport:
    """All (a, b, c) with 1 <= a <= a_max, 1 <= b <= b_max solving the appendix form."""
    return run_search("appendix", {"a_max": a_max, "b_max": b_max}, **kw)


def unified_cycle_search(i_max: int, k_max: int, **kw) -> SearchReport:
    """All (i, k, j) with 1 <= i <= i_max, 0 <= k <= k_max solving the unified equation."""
    return run_search("unified", {"i_max": i_max, "k_max": k_max}, **kw)


def resume(checkpoint_file, bounds: dict | None = None, **kw) -> SearchReport:
    """Continue a checkpointed scan; the result equals an uninterrupted run.

    If ``bounds`` is given it must match the checkpoint's bounds exactly.
    Progress keeps being written to the same file unless ``checkpoint`` is
    passed explicitly.
    """
    doc = load_checkpoint(checkpoint_file)
    if bounds is not None and dict(bounds) != doc["bounds"]:
        raise BoundsMismatch(f"checkpoint bounds {doc['bounds']} != requested {dict(bounds)}")
    kw.setdefault("checkpoint", checkpoint_file)
    return run_search(doc["kind"], doc["bounds"], _resume=doc, **kw)


# -- boundary oracle cross-check -------------------------------------------------

def oracle_on_boundary(J: int) -> bool:
    return classify_restart(J) is Classification.ON


@dataclass(frozen=True)
class CrossValidation:
    checked: int
    first_disagreement: int | None = None

    def __bool__(self) -> bool:
        return self.first_disagreement is None


def cross_validate(J_max: int) -> CrossValidation:
    """Compare the exact boundary test with the unified equation for every J <= J_max."""
    if J_max < 1:
        raise ValueError("J_max must be >= 1")
    for J in range(1, J_max + 1):
        v, k = collatz_step(J)
        i, j = c(v)
        on_eq = unified_filter(i, k) and unified_holds(i, k, j)
        if oracle_on_boundary(J) != on_eq:
            return CrossValidation(J, J)
    return CrossValidation(J_max)
