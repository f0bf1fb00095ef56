"""
Online Boolean matrix-vector multiplication through dynamic string queries.

The matrix rows are concatenated into one string of length m = r^2 and
padded to length 2m; the current vector is written into r symbols of the
other string. The alignment at (j-1)*r + 1 then lines row j of the matrix up
with the vector, so one query per row answers (Mv)[j].

Exact matching with wildcards decides (Mv)[j] deterministically. Inner
product modulo c needs the randomized variant: every set bit of the vector
is kept with probability 1/2 per trial, a zero product always reads 0 and a
non-zero product reads non-zero with probability at least 1/2, so repeating
the trial amplifies a one-sided error.
"""

import logging
import math
from typing import Optional

import numpy as np

from ..core.constants import APPROX_IP_THRESHOLD, DEFAULT_AMPLIFICATION
from ..core.data_models import Alphabet, DynamicString, StringRole, Update, UpdateModel
from ..core.exceptions import ReductionError
from ..core.utils import make_rng
from .backends import (
    BackendFactory,
    CountingBackend,
    approx_ip_backend,
    dynem_backend,
    dynip_backend,
    set_segment,
)
from .instances import GadgetResult, OMvInstance

logger = logging.getLogger(__name__)

# EM symbols: 0 is the wildcard, ordinary bits are stored shifted by one
EM_ZERO = 1
EM_ONE = 2


def default_repetitions(m: int, c_amp: float = DEFAULT_AMPLIFICATION) -> int:
    """ceil(c_amp * log2 m), at least 1"""
    return max(1, math.ceil(c_amp * math.log2(max(m, 2))))


def _connect(factory: BackendFactory, pattern, text, alphabet) -> CountingBackend:
    backend = CountingBackend(factory(
        DynamicString(pattern, alphabet, StringRole.PATTERN),
        DynamicString(text, alphabet, StringRole.TEXT),
    ))
    backend.check_dimensions(len(pattern), len(text))
    return backend


def omv_via_dynem(inst: OMvInstance, backend: Optional[BackendFactory] = None) -> GadgetResult:
    """Exact Mv for every vector via exact matching with wildcards"""
    r = inst.r
    m = r * r
    text = np.concatenate([
        np.where(inst.matrix.reshape(-1) == 1, EM_ONE, EM_ZERO),
        np.full(m, EM_ONE, dtype=np.int64),
    ])
    live = np.zeros(m, dtype=np.int64)
    counting = _connect(backend or dynem_backend(), live.copy(), text, Alphabet.binary(wildcard=True))

    results = np.zeros((r, r), dtype=np.int64)
    for t, v in enumerate(inst.vectors):
        # a 1 in v becomes an ordinary zero, a 0 becomes a wildcard
        set_segment(counting, live, 1, np.where(v == 1, EM_ZERO, 0), Update.pattern)
        for j in range(r):
            results[t, j] = 0 if counting.query(j * r + 1) else 1
    return GadgetResult("omv_dynem", results, counting.updates, counting.queries)


def _randomized_omv(
    name: str,
    inst: OMvInstance,
    factory: BackendFactory,
    repetitions: int,
    modulus: int,
    seed: int,
    text_only: bool,
) -> GadgetResult:
    if repetitions < 1:
        raise ReductionError(f"repetitions must be positive, got {repetitions}")
    if modulus < 2:
        raise ReductionError(f"modulus must be at least 2, got {modulus}")
    r = inst.r
    m = r * r
    rows = inst.matrix.reshape(-1)
    if text_only:
        pattern = rows.copy()
        live = np.zeros(2 * m, dtype=np.int64)
        counting = _connect(factory, pattern, live.copy(), Alphabet.binary())
        segment_start, make_update = m - r + 1, Update.text
    else:
        live = np.zeros(m, dtype=np.int64)
        counting = _connect(factory, live.copy(), np.concatenate([rows, np.zeros(m, dtype=np.int64)]), Alphabet.binary())
        segment_start, make_update = 1, Update.pattern

    rng = make_rng(seed, 30)
    results = np.zeros((r, r), dtype=np.int64)
    for t, v in enumerate(inst.vectors):
        for _ in range(repetitions):
            kept = v * (rng.random(r) < 0.5)
            set_segment(counting, live, segment_start, kept, make_update)
            for j in range(r):
                row = r - 1 - j if text_only else j
                if counting.mod_query(j * r + 1, modulus) != 0:
                    results[t, row] = 1
    logger.debug(
        f"{name}: r={r}, {repetitions} repetitions, {counting.updates} updates, "
        f"{counting.queries} queries"
    )
    return GadgetResult(
        name,
        results,
        counting.updates,
        counting.queries,
        {"repetitions": repetitions, "modulus": modulus},
    )


def omv_via_dynip_mod2(
    inst: OMvInstance,
    backend: Optional[BackendFactory] = None,
    repetitions: Optional[int] = None,
    seed: int = 0,
) -> GadgetResult:
    reps = repetitions if repetitions is not None else default_repetitions(inst.r ** 2)
    return _randomized_omv(
        "omv_ip_mod2", inst, backend or dynip_backend(), reps, 2, seed, text_only=False
    )


def omv_via_dynip_modc(
    inst: OMvInstance,
    c: int,
    backend: Optional[BackendFactory] = None,
    repetitions: Optional[int] = None,
    seed: int = 0,
) -> GadgetResult:
    reps = repetitions if repetitions is not None else default_repetitions(inst.r ** 2)
    return _randomized_omv(
        f"omv_ip_mod{c}", inst, backend or dynip_backend(), reps, c, seed, text_only=False
    )


def omv_text_only(
    inst: OMvInstance,
    backend: Optional[BackendFactory] = None,
    repetitions: Optional[int] = None,
    c: int = 2,
    seed: int = 0,
) -> GadgetResult:
    """Matrix in the pattern, vector written into the text; query j answers row r - j + 1"""
    reps = repetitions if repetitions is not None else default_repetitions(inst.r ** 2)
    factory = backend or dynip_backend(UpdateModel.TEXT_ONLY)
    return _randomized_omv("omv_text_only", inst, factory, reps, c, seed, text_only=True)


def omv_via_approx_dynip(
    inst: OMvInstance,
    epsilon: float = 0.25,
    backend: Optional[BackendFactory] = None,
    seed: int = 0,
    threshold: float = APPROX_IP_THRESHOLD,
) -> GadgetResult:
    """Deterministic: (Mv)[j] = 1 iff the approximate inner product exceeds the threshold"""
    r = inst.r
    m = r * r
    text = np.concatenate([inst.matrix.reshape(-1), np.zeros(m, dtype=np.int64)])
    live = np.zeros(m, dtype=np.int64)
    counting = _connect(
        backend or approx_ip_backend(epsilon, seed), live.copy(), text, Alphabet.binary()
    )
    results = np.zeros((r, r), dtype=np.int64)
    for t, v in enumerate(inst.vectors):
        set_segment(counting, live, 1, v, Update.pattern)
        for j in range(r):
            results[t, j] = 1 if counting.query(j * r + 1) > threshold else 0
    return GadgetResult(
        "omv_approx_ip", results, counting.updates, counting.queries, {"epsilon": epsilon}
    )
