"""Parameter-dependent coefficients: K_mu, b-scalars, a3201 and the H table.

All five parameter directions mu in {10, 01, 02, 11, 03} share one structure:
the unknowns (gamma_1, gamma_2) = K_mu enter every intermediate coefficient
affinely, and two real conditions pin them down -- the Fredholm condition of
the w*beta^mu equation (row 1) and of the w^2 wbar w*beta^mu equation (row 2).
Row 1 is assembled from Gamma_i(q) directly; row 2 is obtained by evaluating
the full Fredholm functional at gamma = (0,0), (1,0), (0,1) and differencing,
which reproduces the closed-form 2x2 system exactly (the functional is affine
in gamma) without transcribing its expanded form.  The same machinery runs
unchanged on the DDE context.

Intermediate solves during the gamma probing use the unchecked (termwise)
bordered solve; only the final, Fredholm-consistent right-hand sides go
through the checked solve.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import terms as T
from .errors import TransversalityError
from .ghode import CriticalCoeffs, g_jterms, set_gamma
from .terms import GREY_HELPERS, required_h_indices

CONSISTENCY_TOL = 1e-7
P_COND_LIMIT = 1e8


@dataclass
class ParamCoeffs:
    """Parameter maps, frequency corrections and the beta-dependent H table."""

    K: dict = field(default_factory=dict)          # mu -> real (2,)
    b1: dict = field(default_factory=dict)         # mu -> float
    b2: dict = field(default_factory=dict)         # mu -> float
    g3201: complex = 0.0 + 0.0j
    Hp: dict = field(default_factory=dict)         # (n,m,k,l) -> value
    gamma: dict = field(default_factory=dict)
    P: np.ndarray | None = None
    P_by_stage: dict = field(default_factory=dict)
    cond_P: float = np.nan
    checks: dict = field(default_factory=dict)

    @property
    def a3201(self) -> float:
        return self.g3201.real


class _StagePieces:
    """Quantities shared by all five parameter stages."""

    def __init__(self, ctx):
        q = ctx.C["q"]
        self.e = (np.array([1.0, 0.0]), np.array([0.0, 1.0]))
        self.J1e = [ctx.form("J1", e) for e in self.e]
        self.S = [ctx.reg_solve(0, v) for v in self.J1e]
        self.Gamma = [
            ctx.form("A1", q, self.e[i]) + ctx.form("B", q, self.S[i])
            for i in range(2)
        ]
        self.pGamma = [ctx.proj(g) for g in self.Gamma]


def _contract_or_zero(ctx, tl):
    if not tl:
        return np.zeros(ctx.n, dtype=complex)
    return ctx.contract(tl)


def _stage(ctx, mu: str, pieces: _StagePieces, pc: ParamCoeffs,
           solve_h21: bool) -> None:
    C = ctx.C
    d10 = 1.0 if mu == "10" else 0.0
    d01 = 1.0 if mu == "01" else 0.0
    kmu, lmu = int(mu[0]), int(mu[1])
    wmu = math.factorial(kmu) * math.factorial(lmu)
    tabs = T.STAGE_M.get(mu, {})
    expl = T.explicit_stage_terms(mu)
    M00v = _contract_or_zero(ctx, tabs.get("M00", ()))
    M10v = _contract_or_zero(ctx, tabs.get("M10", ()))
    M20v = _contract_or_zero(ctx, tabs.get("M20", ()))
    M11v = _contract_or_zero(ctx, tabs.get("M11", ()))
    M21v = _contract_or_zero(ctx, tabs.get("M21", ()))
    v00c = ctx.reg_solve(0, M00v)
    q = C["q"]
    Mt10 = M10v + ctx.form("B", q, v00c)
    pMt10 = ctx.proj(Mt10)

    def assemble(g1: float, g2: float, final: bool):
        K = g1 * pieces.e[0] + g2 * pieces.e[1]
        b1 = (
            g1 * pieces.pGamma[0].imag
            + g2 * pieces.pGamma[1].imag
            + pMt10.imag
        )
        H00 = g1 * pieces.S[0] + g2 * pieces.S[1] + v00c
        extra = None
        if final:
            set_gamma(ctx, 0, mu, d10 + 1j * b1)
        else:
            extra = {(0, kmu, lmu): (d10 + 1j * b1) / wmu}
        rhs10 = ctx.form("A1", q, K) + ctx.form("B", q, H00) + M10v
        H10 = ctx.sing_solve(
            rhs10, g_jterms(ctx, 1, 0, kmu, lmu, extra), check=final
        )
        rhs20 = (
            ctx.form("A1", C["H2000"], K)
            + 2 * ctx.form("B", q, H10)
            + ctx.form("B", H00, C["H2000"])
            + ctx.form("B1", q, q, K)
            + ctx.form("C", q, q, H00)
            + M20v
        )
        H20 = ctx.reg_solve(2, rhs20, g_jterms(ctx, 2, 0, kmu, lmu, extra))
        qb = ctx.conj(q)
        rhs11 = (
            ctx.form("A1", C["H1100"], K)
            + 2 * np.real(ctx.form("B", qb, H10))
            + ctx.form("B", H00, C["H1100"])
            + ctx.form("B1", q, qb, K)
            + ctx.form("C", q, qb, H00)
            + M11v
        )
        H11 = ctx.reg_solve(0, rhs11, g_jterms(ctx, 1, 1, kmu, lmu, extra))
        H10b = ctx.conj(H10)
        rhs21 = (
            ctx.form("A1", C["H2100"], K)
            + 2 * ctx.form("B", q, H11)
            + ctx.form("B", qb, H20)
            + ctx.form("B", H00, C["H2100"])
            + ctx.form("B", H10b, C["H2000"])
            + 2 * ctx.form("B", H10, C["H1100"])
            + 2 * ctx.form("B1", q, C["H1100"], K)
            + ctx.form("B1", qb, C["H2000"], K)
            + ctx.form("C", q, q, H10b)
            + 2 * ctx.form("C", q, qb, H10)
            + 2 * ctx.form("C", q, H00, C["H1100"])
            + ctx.form("C", qb, H00, C["H2000"])
            + ctx.form("C1", q, q, qb, K)
            + ctx.form("D", q, q, qb, H00)
            + M21v
        )
        f = 0.5 * ctx.proj(rhs21)
        return dict(K=K, b1=b1, H00=H00, H10=H10, H20=H20, H11=H11,
                    f=f, rhs21=rhs21)

    probes = [assemble(*g, final=False) for g in ((0.0, 0.0), (1.0, 0.0), (0.0, 1.0))]
    f0 = probes[0]["f"]
    P = np.array(
        [
            [pieces.pGamma[0].real, pieces.pGamma[1].real],
            [(probes[1]["f"] - f0).real, (probes[2]["f"] - f0).real],
        ]
    )
    rhs = np.array([d10 - pMt10.real, d01 - f0.real])
    cond = np.linalg.cond(P)
    if not np.isfinite(cond) or cond > P_COND_LIMIT:
        raise TransversalityError(
            f"transversality matrix ill-conditioned (cond = {cond:.2e})"
        )
    gam = np.linalg.solve(P, rhs)
    fin = assemble(gam[0], gam[1], final=True)
    b2 = fin["f"].imag
    set_gamma(ctx, 1, mu, d01 + 1j * b2)
    consistency = abs(fin["f"].real - d01)
    pc.checks.setdefault("stage_consistency", {})[mu] = consistency
    if consistency > CONSISTENCY_TOL * max(1.0, abs(fin["f"])):
        raise TransversalityError(
            f"stage {mu}: Fredholm real part off by {consistency:.2e}"
        )
    pc.P_by_stage[mu] = P
    pc.gamma[mu] = gam
    pc.K[mu] = fin["K"]
    pc.b1[mu] = fin["b1"]
    pc.b2[mu] = b2
    C[f"K{mu}"] = fin["K"]
    exposed = required_h_indices() | GREY_HELPERS
    for nm, val in (("00", fin["H00"]), ("10", fin["H10"]),
                    ("20", fin["H20"]), ("11", fin["H11"])):
        key = f"H{nm}{mu}"
        C[key] = val
        idx = (int(nm[0]), int(nm[1]), kmu, lmu)
        if idx in exposed:
            pc.Hp[idx] = val
    if solve_h21:
        H21 = ctx.sing_solve(fin["rhs21"], g_jterms(ctx, 2, 1, kmu, lmu))
        C[f"H21{mu}"] = H21
        pc.Hp[(2, 1, kmu, lmu)] = H21


def linear_param_coeffs(ctx, crit: CriticalCoeffs) -> ParamCoeffs:
    """K10, K01 and the linear-in-beta part of the H table."""
    pc = ParamCoeffs()
    pieces = _StagePieces(ctx)
    pc.checks["pieces"] = pieces
    _stage(ctx, "10", pieces, pc, solve_h21=True)
    _stage(ctx, "01", pieces, pc, solve_h21=True)
    pc.P = pc.P_by_stage["10"]
    pc.cond_P = np.linalg.cond(pc.P)
    return pc


def a3201_coeff(ctx, crit: CriticalCoeffs, pc: ParamCoeffs) -> ParamCoeffs:
    """g3201 (whose real part is a3201) plus H3001, H3101, H2201, H3201."""
    C = ctx.C
    for key, rate, tl, idx in (
        ("H3001", 3, T.M3001, (3, 0, 0, 1)),
        ("H3101", 2, T.M3101, (3, 1, 0, 1)),
        ("H2201", 0, T.M2201, (2, 2, 0, 1)),
    ):
        C[key] = ctx.reg_solve(rate, ctx.contract(tl), g_jterms(ctx, *idx))
        pc.Hp[idx] = C[key]
    M32 = ctx.contract(T.M3201)
    g3201 = ctx.proj(M32) / 12.0
    pc.g3201 = g3201
    set_gamma(ctx, 2, "01", g3201)
    C["H3201"] = ctx.sing_solve(M32, g_jterms(ctx, 3, 2, 0, 1))
    pc.Hp[(3, 2, 0, 1)] = C["H3201"]
    return pc


def higher_param_coeffs(ctx, crit: CriticalCoeffs, pc: ParamCoeffs) -> ParamCoeffs:
    """K02, K11, K03 stages and the remaining H coefficients of the table."""
    pieces = pc.checks["pieces"]
    _stage(ctx, "02", pieces, pc, solve_h21=True)
    _stage(ctx, "11", pieces, pc, solve_h21=False)
    _stage(ctx, "03", pieces, pc, solve_h21=False)
    C = ctx.C
    for key, rate, tl, idx in (
        ("H3010", 3, T.H3010, (3, 0, 1, 0)),
        ("H4001", 4, T.H4001, (4, 0, 0, 1)),
        ("H5001", 5, T.H5001, (5, 0, 0, 1)),
        ("H4101", 3, T.H4101, (4, 1, 0, 1)),
        ("H3002", 3, T.H3002, (3, 0, 0, 2)),
    ):
        C[key] = ctx.reg_solve(rate, ctx.contract(tl), g_jterms(ctx, *idx))
        pc.Hp[idx] = C[key]
    del pc.checks["pieces"]
    return pc


def param_coeffs(ctx, crit: CriticalCoeffs) -> ParamCoeffs:
    """Run the full parameter-dependent pipeline in dependency order."""
    pc = linear_param_coeffs(ctx, crit)
    a3201_coeff(ctx, crit, pc)
    higher_param_coeffs(ctx, crit, pc)
    return pc
