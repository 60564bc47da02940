"""Built-in example models.

Each builtin ships twice: as a .ghm text definition (exercising the parser and
the jet backend) and as a hand-coded exact partial-derivative closure, so that
coefficient regressions can tell DSL/jet errors apart from formula errors.
The closure returns mixed partials of the right-hand side with respect to the
stacked state slots (current state, then one block per delay) and the two
active parameters, evaluated at a given point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from importlib import resources

import numpy as np

from .jets import _TANH_POLYS
from .modeldsl import ModelDef, parse_model

__all__ = ["BuiltinModel", "builtin", "builtin_names", "load_model_file"]


def _load_text(fname: str) -> str:
    return resources.files("ghlpc").joinpath("_data").joinpath(fname).read_text()


def load_model_file(path) -> ModelDef:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_model(fh.read(), name=str(path))


@dataclass(frozen=True)
class BuiltinModel:
    key: str
    model: ModelDef
    x_guess: np.ndarray
    alpha_guess: np.ndarray
    omega_guess: float
    exact_factory: object  # (x0, alpha0) -> partials(sm, pm) -> ndarray(n,)

    @property
    def n_slots(self) -> int:
        return self.model.n * (1 + self.model.n_delays)


# --- Bazykin-Khibnik -------------------------------------------------------
#
# f1 = g(x, n) - x*y,   f2 = -y*(m - x)
# with g = x^2(1-x)/(n+x) = -x^2 + (1+n)x - n(1+n) + n^2(1+n)/(n+x),
# so all mixed (x, n) derivatives of g come from the polynomial part plus
# s(n)/(n+x) with s(n) = n^2 + n^3.


def _bk_g_deriv(a: int, j: int, x: float, n: float) -> float:
    poly = 0.0
    if (a, j) == (0, 0):
        poly = -x * x + (1.0 + n) * x - n * (1.0 + n)
    elif (a, j) == (1, 0):
        poly = -2.0 * x + 1.0 + n
    elif (a, j) == (2, 0):
        poly = -2.0
    elif (a, j) == (0, 1):
        poly = x - 1.0 - 2.0 * n
    elif (a, j) == (1, 1):
        poly = 1.0
    elif (a, j) == (0, 2):
        poly = -2.0
    s_derivs = (n * n + n ** 3, 2.0 * n + 3.0 * n * n, 2.0 + 6.0 * n, 6.0)
    rat = 0.0
    for i in range(min(j, 3) + 1):
        k = a + j - i
        rat += (
            math.comb(j, i)
            * s_derivs[i]
            * (-1.0) ** k
            * math.factorial(k)
            * (n + x) ** (-(k + 1))
        )
    return poly + rat


def _bk_partials(x0, alpha0):
    x, y = float(x0[0]), float(x0[1])
    m, n = float(alpha0[0]), float(alpha0[1])

    def partials(sm, pm):
        a, b = sm
        i, j = pm
        f1 = 0.0
        f2 = 0.0
        if b == 0 and i == 0:
            f1 += _bk_g_deriv(a, j, x, n)
        # -x*y term of f1 and (x*y - y*m) structure of f2
        if (a, b, i, j) == (1, 1, 0, 0):
            f1 += -1.0
            f2 += 1.0
        elif (a, b, i, j) == (1, 0, 0, 0):
            f1 += -y
            f2 += y
        elif (a, b, i, j) == (0, 1, 0, 0):
            f1 += -x
            f2 += x - m
        elif (a, b, i, j) == (0, 1, 1, 0):
            f2 += -1.0
        elif (a, b, i, j) == (0, 0, 1, 0):
            f2 += -y
        elif (a, b, i, j) == (0, 0, 0, 0):
            f1 += -x * y
            f2 += -y * (m - x)
        return np.array([f1, f2])

    return partials


# --- extended Lorenz-84 ----------------------------------------------------

_L84 = dict(a=0.25, beta=1.0, G=0.25, delta=1.04, gamma=0.987)


def _lorenz84_partials(x0, alpha0):
    X, Y, Z, U = (float(v) for v in x0)
    F, T = (float(v) for v in alpha0)
    a, beta, G, delta, gamma = (_L84[k] for k in ("a", "beta", "G", "delta", "gamma"))
    table = {
        ((0, 0, 0, 0), (0, 0)): np.array(
            [
                -Y * Y - Z * Z - a * X + a * F - gamma * U * U,
                X * Y - beta * X * Z - Y + G,
                beta * X * Y + X * Z - Z,
                -delta * U + gamma * U * X + T,
            ]
        ),
        ((1, 0, 0, 0), (0, 0)): np.array([-a, Y - beta * Z, beta * Y + Z, gamma * U]),
        ((0, 1, 0, 0), (0, 0)): np.array([-2.0 * Y, X - 1.0, beta * X, 0.0]),
        ((0, 0, 1, 0), (0, 0)): np.array([-2.0 * Z, -beta * X, X - 1.0, 0.0]),
        ((0, 0, 0, 1), (0, 0)): np.array([-2.0 * gamma * U, 0.0, 0.0, -delta + gamma * X]),
        ((0, 0, 0, 0), (1, 0)): np.array([a, 0.0, 0.0, 0.0]),
        ((0, 0, 0, 0), (0, 1)): np.array([0.0, 0.0, 0.0, 1.0]),
        ((0, 2, 0, 0), (0, 0)): np.array([-2.0, 0.0, 0.0, 0.0]),
        ((0, 0, 2, 0), (0, 0)): np.array([-2.0, 0.0, 0.0, 0.0]),
        ((0, 0, 0, 2), (0, 0)): np.array([-2.0 * gamma, 0.0, 0.0, 0.0]),
        ((1, 1, 0, 0), (0, 0)): np.array([0.0, 1.0, beta, 0.0]),
        ((1, 0, 1, 0), (0, 0)): np.array([0.0, -beta, 1.0, 0.0]),
        ((1, 0, 0, 1), (0, 0)): np.array([0.0, 0.0, 0.0, gamma]),
    }
    zero = np.zeros(4)

    def partials(sm, pm):
        return table.get((tuple(sm), tuple(pm)), zero)

    return partials


# --- delayed FitzHugh-Nagumo ----------------------------------------------

_FHN = dict(b=0.9, eps=0.08, c=2.0528, d=-3.2135)


def _tanh_deriv(k: int, v: float) -> float:
    return float(np.polyval(_TANH_POLYS[k][::-1], math.tanh(v)))


def _fhn_partials(x0, alpha0):
    u = float(x0[0])
    v = float(x0[0])  # delayed u1 equals current u1 at an equilibrium
    beta, alpha = (float(p) for p in alpha0)
    b, eps, c, d = (_FHN[k] for k in ("b", "eps", "c", "d"))

    u2 = float(x0[1])

    def partials(sm, pm):
        a1, a2, a3, a4 = sm
        pb, pa = pm
        order = a1 + a2 + a3 + a4 + pb + pa
        f1 = 0.0
        f2 = 0.0
        # local polynomial part of f1: -u^3/3 + (c+alpha)u^2 + d*u - u2
        if a2 == 0 and a3 == 0 and a4 == 0 and pb == 0:
            poly = {
                (0, 0): -u ** 3 / 3.0 + (c + alpha) * u * u + d * u,
                (1, 0): -u * u + 2.0 * (c + alpha) * u + d,
                (2, 0): -2.0 * u + 2.0 * (c + alpha),
                (3, 0): -2.0,
                (0, 1): u * u,
                (1, 1): 2.0 * u,
                (2, 1): 2.0,
            }
            f1 += poly.get((a1, pa), 0.0)
        if (a1, a2, a3, a4, pb, pa) == (0, 1, 0, 0, 0, 0):
            f1 += -1.0
        if order == 0:
            f1 += -u2
        # delayed coupling 2*beta*tanh(u1(t - tau))
        if a1 == 0 and a2 == 0 and a4 == 0 and pa == 0 and pb <= 1:
            tk = _tanh_deriv(a3, v)
            if pb == 1:
                f1 += 2.0 * tk
            elif a3 > 0 or order == 0:
                f1 += 2.0 * beta * tk
        if pb == 0 and pa == 0:
            if (a1, a2, a3, a4) == (1, 0, 0, 0):
                f2 += eps
            elif (a1, a2, a3, a4) == (0, 1, 0, 0):
                f2 += -eps * b
            elif order == 0:
                f2 += eps * (u - b * u2)
        return np.array([f1, f2])

    return partials


_REGISTRY: dict[str, dict] = {
    "bazykin-khibnik": dict(
        fname="bazykin_khibnik.ghm",
        x_guess=np.array([0.26, 0.45]),
        alpha_guess=np.array([0.26, 0.13]),
        omega_guess=0.35,
        exact=_bk_partials,
    ),
    "lorenz84": dict(
        # the generalized Hopf point sits on the U < 0 equilibrium branch
        fname="lorenz84.ghm",
        x_guess=np.array([1.15, -0.03, 0.21, -0.51]),
        alpha_guess=np.array([2.4, 0.05]),
        omega_guess=0.69,
        exact=_lorenz84_partials,
    ),
    "fhn-dde": dict(
        fname="fhn_dde.ghm",
        x_guess=np.array([0.0, 0.0]),
        alpha_guess=np.array([1.9, -1.0429]),
        omega_guess=0.072,
        exact=_fhn_partials,
    ),
}


def builtin_names() -> tuple[str, ...]:
    return tuple(_REGISTRY)


def builtin(key: str) -> BuiltinModel:
    try:
        entry = _REGISTRY[key]
    except KeyError:
        raise KeyError(
            f"unknown builtin {key!r}; available: {', '.join(_REGISTRY)}"
        ) from None
    model = parse_model(_load_text(entry["fname"]), name=key)
    return BuiltinModel(
        key=key,
        model=model,
        x_guess=entry["x_guess"].copy(),
        alpha_guess=entry["alpha_guess"].copy(),
        omega_guess=entry["omega_guess"],
        exact_factory=entry["exact"],
    )
