"""Sweep kernels: trisect every subject of a universe at once.

Inputs are the favourable/opposing images of each element as ``uint64`` masks
over an ``m``-element subject universe.  Outputs are two ``uint64`` arrays of
length ``2**m``, indexed by subject mask, holding the POS and NEG element
masks (BND is whatever remains).

Three implementations exist:

* ``*_numba`` -- ``@njit`` loops, used by default when numba imports;
* ``*_numpy`` -- vectorised numpy over chunks of subjects;
* ``*_python`` -- plain integers, for more than 64 elements.

Set ``TRICONFLICT_DISABLE_NUMBA=1`` to force the numpy path.
"""

from __future__ import annotations

import os

import numpy as np

__all__ = [
    "NUMBA_AVAILABLE",
    "USE_NUMBA",
    "WORD_BITS",
    "backend",
    "smz_sweep",
    "fqw_sweep",
    "smz_sweep_numba",
    "smz_sweep_numpy",
    "smz_sweep_python",
    "fqw_sweep_numba",
    "fqw_sweep_numpy",
    "fqw_sweep_python",
]

WORD_BITS = 64
_CHUNK = 1 << 14
_MAX_WORD_TERM = 1 << 55

try:
    from numba import njit

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    NUMBA_AVAILABLE = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda f: f


USE_NUMBA = NUMBA_AVAILABLE and os.environ.get("TRICONFLICT_DISABLE_NUMBA", "").lower() not in ("1", "true", "yes")


def backend(n_elements: int) -> str:
    """Name of the implementation the dispatchers pick for ``n_elements``."""
    if n_elements > WORD_BITS:
        return "python"
    return "numba" if USE_NUMBA else "numpy"


# -- shared helpers ---------------------------------------------------------

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)


def _popcount_np(x: np.ndarray) -> np.ndarray:
    x = x - ((x >> np.uint64(1)) & _M1)
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    return (x * _H01) >> np.uint64(56)


def _as_words(masks) -> np.ndarray:
    return np.asarray([int(m) for m in masks], dtype=np.uint64)


# -- numba ------------------------------------------------------------------

@njit(cache=True)
def _popcount_nb(x):
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return (x * np.uint64(0x0101010101010101)) >> np.uint64(56)


@njit(cache=True)
def _smz_kernel(plus, minus, n_subjects):
    n = plus.shape[0]
    pos = np.zeros(n_subjects, dtype=np.uint64)
    neg = np.zeros(n_subjects, dtype=np.uint64)
    zero = np.uint64(0)
    one = np.uint64(1)
    for s in range(n_subjects):
        outside = ~np.uint64(s)
        p = zero
        q = zero
        for i in range(n):
            low_plus = (plus[i] & outside) == zero
            low_minus = (minus[i] & outside) == zero
            if low_plus and not low_minus:
                p |= one << np.uint64(i)
            elif low_minus and not low_plus:
                q |= one << np.uint64(i)
        pos[s] = p
        neg[s] = q
    return pos, neg


@njit(cache=True)
def _fqw_kernel(plus, minus, n_subjects, a_num, a_den, b_num, b_den):
    n = plus.shape[0]
    pos = np.zeros(n_subjects, dtype=np.uint64)
    neg = np.zeros(n_subjects, dtype=np.uint64)
    zero = np.uint64(0)
    one = np.uint64(1)
    for s in range(1, n_subjects):
        su = np.uint64(s)
        size = np.int64(_popcount_nb(su))
        p = zero
        q = zero
        for i in range(n):
            a = np.int64(_popcount_nb(plus[i] & su))
            r = np.int64(_popcount_nb(minus[i] & su))
            # a/size > a_num/a_den  <=>  a*a_den > a_num*size  (denominators positive)
            accepted = a * a_den > a_num * size
            rejected = r * b_den > b_num * size
            if accepted and not rejected:
                p |= one << np.uint64(i)
            elif rejected and not accepted:
                q |= one << np.uint64(i)
        pos[s] = p
        neg[s] = q
    return pos, neg


def smz_sweep_numba(plus, minus, n_subject_bits: int) -> tuple[np.ndarray, np.ndarray]:
    return _smz_kernel(_as_words(plus), _as_words(minus), 1 << n_subject_bits)


def fqw_sweep_numba(plus, minus, n_subject_bits: int, alpha, beta) -> tuple[np.ndarray, np.ndarray]:
    return _fqw_kernel(
        _as_words(plus), _as_words(minus), 1 << n_subject_bits,
        alpha.numerator, alpha.denominator, beta.numerator, beta.denominator,
    )


# -- numpy ------------------------------------------------------------------

def _bit_weights(n: int) -> np.ndarray:
    return np.left_shift(np.uint64(1), np.arange(n, dtype=np.uint64))


def smz_sweep_numpy(plus, minus, n_subject_bits: int) -> tuple[np.ndarray, np.ndarray]:
    plus, minus = _as_words(plus), _as_words(minus)
    total = 1 << n_subject_bits
    weights = _bit_weights(plus.shape[0])
    pos = np.zeros(total, dtype=np.uint64)
    neg = np.zeros(total, dtype=np.uint64)
    for start in range(0, total, _CHUNK):
        outside = ~np.arange(start, min(start + _CHUNK, total), dtype=np.uint64)[:, None]
        low_plus = (plus[None, :] & outside) == 0
        low_minus = (minus[None, :] & outside) == 0
        pos[start:start + outside.shape[0]] = np.where(low_plus & ~low_minus, weights, 0).sum(axis=1, dtype=np.uint64)
        neg[start:start + outside.shape[0]] = np.where(low_minus & ~low_plus, weights, 0).sum(axis=1, dtype=np.uint64)
    return pos, neg


def fqw_sweep_numpy(plus, minus, n_subject_bits: int, alpha, beta) -> tuple[np.ndarray, np.ndarray]:
    plus, minus = _as_words(plus), _as_words(minus)
    total = 1 << n_subject_bits
    weights = _bit_weights(plus.shape[0])
    pos = np.zeros(total, dtype=np.uint64)
    neg = np.zeros(total, dtype=np.uint64)
    for start in range(1, total, _CHUNK):
        subjects = np.arange(start, min(start + _CHUNK, total), dtype=np.uint64)
        size = _popcount_np(subjects).astype(np.int64)[:, None]
        a = _popcount_np(plus[None, :] & subjects[:, None]).astype(np.int64)
        r = _popcount_np(minus[None, :] & subjects[:, None]).astype(np.int64)
        accepted = a * alpha.denominator > alpha.numerator * size
        rejected = r * beta.denominator > beta.numerator * size
        stop = start + subjects.shape[0]
        pos[start:stop] = np.where(accepted & ~rejected, weights, 0).sum(axis=1, dtype=np.uint64)
        neg[start:stop] = np.where(rejected & ~accepted, weights, 0).sum(axis=1, dtype=np.uint64)
    return pos, neg


# -- arbitrary width --------------------------------------------------------

def smz_sweep_python(plus, minus, n_subject_bits: int) -> tuple[list[int], list[int]]:
    full = (1 << n_subject_bits) - 1
    pos, neg = [], []
    for s in range(1 << n_subject_bits):
        outside = full & ~s
        p = q = 0
        for i, (fp, fm) in enumerate(zip(plus, minus)):
            lp, lm = fp & outside == 0, fm & outside == 0
            if lp and not lm:
                p |= 1 << i
            elif lm and not lp:
                q |= 1 << i
        pos.append(p)
        neg.append(q)
    return pos, neg


def fqw_sweep_python(plus, minus, n_subject_bits: int, alpha, beta) -> tuple[list[int], list[int]]:
    pos, neg = [0], [0]
    for s in range(1, 1 << n_subject_bits):
        size = s.bit_count()
        p = q = 0
        for i, (fp, fm) in enumerate(zip(plus, minus)):
            accepted = (fp & s).bit_count() * alpha.denominator > alpha.numerator * size
            rejected = (fm & s).bit_count() * beta.denominator > beta.numerator * size
            if accepted and not rejected:
                p |= 1 << i
            elif rejected and not accepted:
                q |= 1 << i
        pos.append(p)
        neg.append(q)
    return pos, neg


# -- dispatch ---------------------------------------------------------------

_SMZ = {"numba": smz_sweep_numba, "numpy": smz_sweep_numpy, "python": smz_sweep_python}
_FQW = {"numba": fqw_sweep_numba, "numpy": fqw_sweep_numpy, "python": fqw_sweep_python}


def smz_sweep(plus, minus, n_subject_bits: int, impl: str | None = None):
    """POS/NEG masks of the set-inclusion model for every subject ``0 .. 2**m - 1``."""
    impl = impl or backend(len(plus))
    return _SMZ[impl](plus, minus, n_subject_bits)


def fqw_sweep(plus, minus, n_subject_bits: int, alpha, beta, impl: str | None = None):
    """POS/NEG masks of the degree model for every nonempty subject.

    ``alpha`` and ``beta`` are :class:`fractions.Fraction`; entry 0 (the empty
    subject) is left as zeros and must be ignored by callers.
    """
    if impl is None:
        impl = backend(len(plus))
        # keep the int64 cross-multiplication in range
        if max(alpha.numerator, alpha.denominator, beta.numerator, beta.denominator) > _MAX_WORD_TERM:
            impl = "python"
    return _FQW[impl](plus, minus, n_subject_bits, alpha, beta)
