"""Pure numpy implementation of the hot numerical kernels.

Mirrors ``spmeis._kernels._core``; the two backends must keep identical
branch boundaries and arithmetic so that results agree to rounding error.
"""

import numpy as np

# Evaluation regimes for the finite-length spherical-diffusion kernel
#   f(s, tau) = (tau/3) * tanh(x) / (tanh(x) - x),   x = sqrt(s*tau).
# The raw formula loses all significant digits as x -> 0 (numerator and
# denominator both vanish like x^3) and exp overflows for large Re(x), hence:
#   |s*tau| < SERIES_BOUND        -> Laurent series about s = 0
#   Re(x)   > SATURATION_BOUND    -> tanh == 1
#   otherwise                     -> tanh via (1 - e^{-2x}) / (1 + e^{-2x})
SERIES_BOUND = 1e-4
SATURATION_BOUND = 20.0


def backend_name():
    return "python"


def f_eval(s, tau):
    """Evaluate f(s, tau) for a 1-D complex array ``s`` and scalar ``tau > 0``.

    Series branch: f = -1/s - tau/15 + tau*(s*tau)/525 - 2*tau*(s*tau)^2/23625,
    with truncation error O(|s*tau|^3) relative to the tau/15 term.
    """
    s = np.asarray(s, dtype=np.complex128)
    z = s * tau
    out = np.empty_like(z)

    small = np.abs(z) < SERIES_BOUND
    if small.any():
        ss = s[small]
        zs = z[small]
        out[small] = (
            -1.0 / ss - tau / 15.0 + tau * zs / 525.0 - 2.0 * tau * (zs * zs) / 23625.0
        )
    big = ~small
    if big.any():
        x = np.sqrt(z[big])
        vals = np.empty_like(x)
        sat = x.real > SATURATION_BOUND
        if sat.any():
            vals[sat] = (tau / 3.0) / (1.0 - x[sat])
        gen = ~sat
        if gen.any():
            e = np.exp(-2.0 * x[gen])
            th = (1.0 - e) / (1.0 + e)
            vals[gen] = (tau / 3.0) * th / (th - x[gen])
        out[big] = vals
    return out


def loss_spectrum(omega, z_re, z_im, beta_plus, beta_minus, r_ct, tau_plus, tau_minus):
    """Sum of squared real and imaginary impedance residuals for one spectrum.

    The model impedance is -(beta_plus*f_plus - beta_minus*f_minus - r_ct)
    evaluated at s = i*omega.
    """
    s = 1j * np.asarray(omega, dtype=np.float64)
    fp = f_eval(s, tau_plus)
    fm = f_eval(s, tau_minus)
    model = (-beta_plus * fp + beta_minus * fm) + r_ct
    d_re = z_re - model.real
    d_im = z_im - model.imag
    return float(np.sum(d_re * d_re + d_im * d_im))


def loss_grid(omega, z_re, z_im, beta_plus, beta_minus, r_ct,
              tau_plus_axis, tau_minus_axis, out):
    """Accumulate per-cell squared-residual sums for one spectrum into ``out``.

    out[a, b] += sum_i |Z_i - model(omega_i; tau_plus_axis[a], tau_minus_axis[b])|^2
    """
    s = 1j * np.asarray(omega, dtype=np.float64)
    fp = np.stack([f_eval(s, float(t)) for t in tau_plus_axis])
    fm = np.stack([f_eval(s, float(t)) for t in tau_minus_axis])
    z = np.asarray(z_re, dtype=np.float64) + 1j * np.asarray(z_im, dtype=np.float64)
    # residual = (Z - r_ct + beta_plus*fp[a]) - beta_minus*fm[b]
    u = (z - r_ct) + beta_plus * fp
    v = beta_minus * fm
    n_p = fp.shape[0]
    # chunk rows to bound the (n_p, n_m, n_omega) temporary
    step = max(1, int(2e6 // max(1, v.size)))
    for lo in range(0, n_p, step):
        resid = u[lo:lo + step, None, :] - v[None, :, :]
        out[lo:lo + step, :] += np.sum(resid.real**2 + resid.imag**2, axis=2)
