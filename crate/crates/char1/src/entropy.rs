//! The entropy function and the deformation it drives between ordinary
//! addition and idempotent (max-plus) addition.
//!
//! The binary entropy `S(s) = −s ln s − (1−s) ln(1−s)` exponentiates to
//! `c(s) = s^{−s} (1−s)^{−(1−s)}`, and the variational identity
//! `sup_{s∈[0,1]} c(s) x^s y^{1−s} = x + y` recovers ordinary addition from
//! multiplication plus the entropy weight. The ρ-deformed addition
//! `(f +_ρ g)(x) = (f(x)^β + g(x)^β)^{T(x)}` with `β = 1/T(x)` interpolates
//! between pointwise addition (T ≡ 1) and pointwise max (T ≡ 0).

use crate::{Error, Result};

/// Binary entropy `S(s) = −s ln s − (1−s) ln(1−s)` with the `0·ln 0 = 0`
/// convention at the endpoints.
pub fn entropy_s(s: f64) -> Result<f64> {
    check_unit_interval(s)?;
    Ok(xlnx_neg(s) + xlnx_neg(1.0 - s))
}

fn xlnx_neg(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        -x * x.ln()
    }
}

fn check_unit_interval(s: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&s) {
        return Err(Error::Domain(format!("s = {s} outside [0,1]")));
    }
    Ok(())
}

/// The entropy weight `c(s) = e^{S(s)} = s^{−s} (1−s)^{−(1−s)}`, extended by
/// continuity to `c(0) = c(1) = 1`.
pub fn entropy_c(s: f64) -> Result<f64> {
    Ok(entropy_s(s)?.exp())
}

/// Frobenius-type automorphism `ϑ_λ(x) = x^λ` of the idempotent semifield
/// of non-negative reals under (max, ·).
pub fn rmax_frobenius(x: f64, lambda: f64) -> Result<f64> {
    if !(x >= 0.0) {
        return Err(Error::Domain(format!("x = {x} is not a non-negative real")));
    }
    if !(lambda > 0.0) {
        return Err(Error::Domain(format!("λ = {lambda} is not positive")));
    }
    Ok(x.powf(lambda))
}

/// `sup_{s∈[0,1]} c(s) x^s y^{1−s}` with its maximizer, by a grid scan of
/// the given resolution followed by golden-section refinement.
///
/// The lemma this realizes says the value is `x + y`, attained at
/// `s = x/(x+y)`; the closed forms are used only as cross-checks in tests —
/// the implementation exercises the variational principle itself.
pub fn free_energy_sup(x: f64, y: f64, grid: usize) -> Result<(f64, f64)> {
    if !(x > 0.0 && x.is_finite()) || !(y > 0.0 && y.is_finite()) {
        return Err(Error::Domain(format!("require finite x, y > 0, got ({x}, {y})")));
    }
    let grid = grid.max(8);
    // φ(s) = c(s) x^s y^(1−s) = exp(S(s) + s ln x + (1−s) ln y): the
    // exponent is strictly concave, so φ is unimodal and a grid argmax
    // brackets the supremum within one cell on each side.
    let (lx, ly) = (x.ln(), y.ln());
    let phi = |s: f64| (entropy_s(s).unwrap() + s * lx + (1.0 - s) * ly).exp();
    let mut best = (phi(0.0), 0usize);
    for k in 1..=grid {
        let v = phi(k as f64 / grid as f64);
        if v > best.0 {
            best = (v, k);
        }
    }
    let mut a = best.1.saturating_sub(1) as f64 / grid as f64;
    let mut b = ((best.1 + 1).min(grid)) as f64 / grid as f64;
    // Golden-section search on the bracket [a,b].
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (phi(c), phi(d));
    for _ in 0..80 {
        if fc < fd {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = phi(d);
        } else {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = phi(c);
        }
    }
    let s_star = 0.5 * (a + b);
    Ok((phi(s_star).max(fc).max(fd), s_star))
}

/// Pointwise ρ-deformed addition of two sampled functions with sampled
/// temperature: `(f +_ρ g)(x) = (f(x)^{1/T(x)} + g(x)^{1/T(x)})^{T(x)}`,
/// with the idempotent limit `max(f(x), g(x))` at `T(x) = 0`.
///
/// Values of `f` and `g` must lie in `(0,1]`; temperatures must be finite
/// and ≥ 0. Computed through logarithms so extreme β = 1/T neither overflow
/// nor underflow.
pub fn rho_add(f: &[f64], g: &[f64], t: &[f64]) -> Result<Vec<f64>> {
    if f.len() != g.len() || f.len() != t.len() {
        return Err(Error::Domain(format!(
            "sample length mismatch: {} vs {} vs {}",
            f.len(),
            g.len(),
            t.len()
        )));
    }
    f.iter()
        .zip(g)
        .zip(t)
        .map(|((&fv, &gv), &tv)| rho_add_point(fv, gv, tv))
        .collect()
}

/// Single-point ρ-deformed addition; see [`rho_add`].
pub fn rho_add_point(f: f64, g: f64, t: f64) -> Result<f64> {
    for v in [f, g] {
        if !(v > 0.0 && v <= 1.0) {
            return Err(Error::Domain(format!("function value {v} outside (0,1]")));
        }
    }
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::Domain(format!("temperature {t} is not a finite non-negative real")));
    }
    if t == 0.0 {
        return Ok(f.max(g));
    }
    // (f^β + g^β)^T = exp(max(ln f, ln g) + T·ln(1 + e^{−|ln f − ln g|/T})).
    let (lf, lg) = (f.ln(), g.ln());
    let hi = lf.max(lg);
    let delta = (lf - lg).abs() / t;
    Ok((hi + t * (-delta).exp().ln_1p()).exp())
}
