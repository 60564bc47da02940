import numpy as np
import pytest

from ghlpc.ghode import critical_coeffs, make_ode_context, run_critical
from ghlpc.ghode_params import a3201_coeff, linear_param_coeffs
from ghlpc.linode import GHPointODE, hopf_eigenpair

BK_L2 = -1024.0 * np.sqrt(2.0) / 729.0


def test_bazykin_l2_exact_backend(bk_pack):
    assert abs(bk_pack.crit.l2 - BK_L2) < 1e-9
    assert abs(bk_pack.crit.l1) < 1e-10


def test_bazykin_l2_jet_backend(bk_pack_jets):
    assert abs(bk_pack_jets.crit.l2 - BK_L2) < 1e-6


def test_jets_match_exact_through_seventh_order(bk_pack, bk_pack_jets):
    for att in ("c1", "c2", "c3"):
        a = getattr(bk_pack.crit, att)
        b = getattr(bk_pack_jets.crit, att)
        assert abs(a - b) < 1e-10 * max(1.0, abs(a)), att


def test_lorenz_l2(l84_pack):
    assert abs(l84_pack.crit.l2 - 0.22567) < 1e-4


def test_linear_model_all_coefficients_vanish():
    # a linear vector field with a Hopf pair: every c and every H is zero
    text = "state x y\nparam a b\ndx = -y + 0*a\ndy = x + 0*b\n"
    from ghlpc.modeldsl import parse_model

    model = parse_model(text)
    A = np.array([[0.0, -1.0], [1.0, 0.0]])
    w0, q, p = hopf_eigenpair(A, 1.0)
    gh = GHPointODE(x0=np.zeros(2), alpha0=np.zeros(2), omega0=w0, q=q, p=p, A=A)
    with pytest.warns(UserWarning):  # degenerate: Re c2 = 0 warning expected
        crit = critical_coeffs(model, gh, backend="jets")
    assert abs(crit.c1) < 1e-13 and abs(crit.c2) < 1e-13 and abs(crit.c3) < 1e-13
    for val in crit.H.values():
        assert np.max(np.abs(val)) < 1e-12


def test_phase_rotation_invariance(bk_pack, rng):
    gh0 = bk_pack.gh
    ref = (bk_pack.crit.c1, bk_pack.crit.c2, bk_pack.crit.c3, bk_pack.pc.g3201)
    for theta in rng.uniform(0.0, 2.0 * np.pi, size=8):
        rot = np.exp(1j * theta)
        gh = GHPointODE(x0=gh0.x0, alpha0=gh0.alpha0, omega0=gh0.omega0,
                        q=gh0.q * rot, p=gh0.p * rot, A=gh0.A)
        ctx = make_ode_context(bk_pack.model, gh, "exact",
                               bk_pack.bm.exact_factory)
        crit = run_critical(ctx)
        pc = linear_param_coeffs(ctx, crit)
        pc = a3201_coeff(ctx, crit, pc)
        got = (crit.c1, crit.c2, crit.c3, pc.g3201)
        for a, b in zip(got, ref):
            assert abs(a - b) < 1e-9 * max(1.0, abs(b))


def test_conjugate_symmetry_via_reality(bk_pack):
    # H_{nm00} with n = m must be real; the pipeline stores n >= m only, so
    # reality of the diagonal entries is the observable part of H_nm = conj(H_mn)
    for (n, m), val in bk_pack.crit.H.items():
        if n == m:
            assert np.max(np.abs(np.imag(val))) < 1e-9 * max(
                1.0, np.max(np.abs(val)))


def test_bordered_orthogonality(bk_pack):
    ctx = bk_pack.ctx
    for key in ("H2100", "H3200", "H4300"):
        val = ctx.C[key]
        assert abs(ctx.pairing(val)) < 1e-9 * max(1.0, np.max(np.abs(val)))


def test_fredholm_preprojection_residuals(bk_pack, l84_pack, fhn_pack):
    for pack in (bk_pack, l84_pack, fhn_pack):
        assert pack.ctx.fredholm_residuals, "no checked bordered solves?"
        assert max(pack.ctx.fredholm_residuals) <= 1e-9


def test_criticality_identities(bk_pack, l84_pack):
    # simplifications the derivation relies on, enforced as runtime checks
    for pack in (bk_pack, l84_pack):
        c1 = pack.crit.c1
        assert abs(c1 + np.conj(c1)) < 1e-8 * max(1.0, abs(c1))
        assert abs(3 * c1 + 2 * np.conj(c1) - 1j * c1.imag) < 1e-8 * max(1.0, abs(c1))


def test_lorenz_param_coeffs_same_P(l84_pack):
    P = l84_pack.pc.P
    for mu, Pm in l84_pack.pc.P_by_stage.items():
        assert np.max(np.abs(Pm - P)) <= 1e-13 * max(1.0, np.max(np.abs(P))), mu


def test_bk_quadratic_form_vs_finite_differences(bk_pack, rng):
    # the jet-extracted B(q, qb) against 4th-order central differences of the
    # directional second derivative of the model itself
    from ghlpc.modeldsl import compile_rhs

    ctx = make_ode_context(bk_pack.model, bk_pack.gh, "jets")
    q = bk_pack.gh.q
    got = ctx.form("B", q, np.conj(q))
    rhs = compile_rhs(bk_pack.model)
    x0, al = bk_pack.gh.x0, bk_pack.gh.alpha0
    h = 1e-3

    # complex bilinearity: B(q, conj q) = B(qr, qr) + B(qi, qi)
    def dir2(u):
        acc = np.zeros(2)
        for k, ck in ((-2, -1 / 12), (-1, 4 / 3), (0, -5 / 2), (1, 4 / 3),
                      (2, -1 / 12)):
            acc += ck * rhs(x0 + k * h * u, al)
        return acc / (h * h)

    qr, qi = np.real(q), np.imag(q)
    fd = dir2(qr) + dir2(qi)
    assert np.max(np.abs(got - fd)) < 1e-6 * max(1.0, np.max(np.abs(got)))
