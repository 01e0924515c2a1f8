"""Test signals and reproducible noise.

Three benchmark functions on [-1, 1]:

    f1(x) = |x| + x/2 - x^2          kink at 0, analytic elsewhere
    f2(x) = Ai(40 x)                  slow decay on the right, oscillation on the left
    f3(x) = tanh(20 sin(12 x)) + 0.02 exp(3 x) sin(300 x)

plus f1 with a sin(10 x) term added, used to break even symmetry in the
multiplicative-noise experiments.

The Airy function is evaluated in-house: the Maclaurin series in 50-digit
arithmetic for |t| <= 8 (the two series cancel about 13 leading digits near
t = 8, which doubles cannot absorb), and the standard asymptotic expansions
in doubles beyond.  Noise is drawn from a counter-based generator so every
sample is reproducible from (seed, index) alone.
"""

import math
from dataclasses import dataclass

import mpmath
import numpy as np

__all__ = [
    "f1",
    "f2",
    "f3",
    "f1_plus_sin10x",
    "FUNCTIONS",
    "airy_ai",
    "NoiseSpec",
    "add_noise",
    "make_generator",
    "derive_seed",
]

_SERIES_CUTOFF = 8.0
_SERIES_TOL = 1e-18  # stop when a term drops below this times the partial sum

with mpmath.workdps(50):
    # Ai(0) and -Ai'(0); the two sums near |t| = 8 run to ~1e6 while their
    # combination is ~5e-8, so the stopping test must watch the combined
    # partial sum, not each sum alone, and the arithmetic needs the headroom.
    _AI_C1 = mpmath.mpf(3) ** mpmath.mpf("-2/3") / mpmath.gamma(mpmath.mpf("2/3"))
    _AI_C2 = mpmath.mpf(3) ** mpmath.mpf("-1/3") / mpmath.gamma(mpmath.mpf("1/3"))


def _airy_series(t: float) -> float:
    # Ai(t) = c1 f(t) - c2 g(t) with f, g the two Maclaurin sums.
    with mpmath.workdps(50):
        tm = mpmath.mpf(t)
        t3 = tm**3
        da = mpmath.mpf(1)
        db = tm
        total = _AI_C1 * da - _AI_C2 * db
        floor = mpmath.mpf("1e-60")
        k = 0
        while True:
            k += 1
            da *= t3 / ((3 * k - 1) * (3 * k))
            db *= t3 / ((3 * k) * (3 * k + 1))
            total += _AI_C1 * da - _AI_C2 * db
            left = abs(_AI_C1 * da) + abs(_AI_C2 * db)
            if left < _SERIES_TOL * abs(total) or left < floor:
                break
        return float(total)


def _asymptotic_sums(zeta: float, parts: int):
    """Partial sums of u_k / zeta^k, truncated where the terms stop shrinking.

    parts=1 gives the single alternating sum for the decaying branch; parts=2
    gives the even and odd sums for the oscillatory branch.
    """
    sums = [0.0, 0.0]
    term = 1.0
    prev = math.inf
    k = 0
    while abs(term) < prev and abs(term) > 1e-19 * max(abs(sums[0]), 1.0):
        prev = abs(term)
        if parts == 1:
            sums[0] += term if k % 2 == 0 else -term
        else:
            which = k % 2
            flip = (k // 2) % 2
            sums[which] += -term if flip else term
        k += 1
        term *= (6 * k - 5) * (6 * k - 1) / (72 * k * zeta)
    return sums


def _airy_right(t: float) -> float:
    zeta = (2.0 / 3.0) * t**1.5
    s = _asymptotic_sums(zeta, 1)[0]
    return math.exp(-zeta) * s / (2.0 * math.sqrt(math.pi) * t**0.25)


def _airy_left(t: float) -> float:
    s = -t
    zeta = (2.0 / 3.0) * s**1.5
    even, odd = _asymptotic_sums(zeta, 2)
    phase = zeta + 0.25 * math.pi
    return (math.sin(phase) * even - math.cos(phase) * odd) / (
        math.sqrt(math.pi) * s**0.25
    )


def _airy_scalar(t: float) -> float:
    if abs(t) <= _SERIES_CUTOFF:
        return _airy_series(t)
    return _airy_right(t) if t > 0.0 else _airy_left(t)


def airy_ai(t):
    """Airy function of the first kind, elementwise."""
    t = np.asarray(t, dtype=float)
    if t.ndim == 0:
        return _airy_scalar(float(t))
    out = np.empty(t.shape)
    flat = t.ravel()
    for i in range(flat.size):
        out.flat[i] = _airy_scalar(float(flat[i]))
    return out


def f1(x):
    x = np.asarray(x, dtype=float)
    return np.abs(x) + 0.5 * x - x * x


def f2(x):
    return airy_ai(40.0 * np.asarray(x, dtype=float))


def f3(x):
    x = np.asarray(x, dtype=float)
    return np.tanh(20.0 * np.sin(12.0 * x)) + 0.02 * np.exp(3.0 * x) * np.sin(300.0 * x)


def f1_plus_sin10x(x):
    x = np.asarray(x, dtype=float)
    return f1(x) + np.sin(10.0 * x)


FUNCTIONS = {
    "f1": f1,
    "f2": f2,
    "f3": f3,
    "f1-plus-sin10x": f1_plus_sin10x,
}


def make_generator(seed: int) -> np.random.Generator:
    """Counter-based generator; the same seed always yields the same stream."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed)))


def derive_seed(master: int, *indices: int) -> int:
    """Independent child seed for (master, i, j, ...), stable across runs."""
    state = np.random.SeedSequence([int(master), *[int(i) for i in indices]])
    return int(state.generate_state(1, np.uint64)[0])


@dataclass(frozen=True)
class NoiseSpec:
    """What noise to add and from which seed.

    kind 'additive-white-snr' draws Gaussian noise scaled so the sample
    signal-to-noise ratio is snr_db.  kind 'multiplicative-uniform' draws one
    uniform r from the open interval (0, 1) and multiplies every sample by
    (1 + c r).
    """

    kind: str
    seed: int
    snr_db: float | None = None
    c: float | None = None

    def __post_init__(self):
        if self.kind not in ("additive-white-snr", "multiplicative-uniform"):
            raise ValueError(f"unknown noise kind: {self.kind!r}")
        if self.kind == "additive-white-snr":
            if self.snr_db is None or not math.isfinite(self.snr_db):
                raise ValueError("additive noise needs a finite snr_db")
        else:
            if self.c is None or not (self.c >= 0.0):
                raise ValueError("multiplicative noise needs c >= 0")


def add_noise(samples, noise: NoiseSpec) -> np.ndarray:
    """Perturb samples according to the noise spec, reproducibly."""
    samples = np.asarray(samples, dtype=float)
    rng = make_generator(noise.seed)
    if noise.kind == "additive-white-snr":
        power = float(np.mean(samples**2))
        if power == 0.0:
            raise ValueError("signal power is zero, SNR is undefined")
        sigma = math.sqrt(power * 10.0 ** (-noise.snr_db / 10.0))
        return samples + sigma * rng.standard_normal(samples.shape)
    r = rng.random()
    while r == 0.0:  # open interval (0, 1)
        r = rng.random()
    return samples * (1.0 + noise.c * r)
