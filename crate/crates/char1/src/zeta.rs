//! Zeta functions of finite 𝔽₁-scheme data.
//!
//! A scheme datum is a list of points, each carrying a free rank k and a
//! finite abelian torsion group H (invariant factors). Its counting
//! function over 𝔽₁ⁿ is `Σ_x n^{k_x}·#{h ∈ H_x : ord(h) | n}`, and this
//! module builds:
//!
//! * the canonical entire interpolation N(z) of the counting function,
//!   written over cyclic subgroups with bounded frequencies;
//! * the elementary log-derivative constituents ξ_d assembled from the
//!   oscillatory-tail function `special::f_entire`;
//! * the exact rational singularity exponents α_j of ζ;
//! * the zeta log-derivative in two modes — the integral transform
//!   `−∫₁^∞ N(u) u^{−s−1} du` and the discrete Dirichlet sum
//!   `−Σ_{n≥1} N(n) n^{−s−1}` (continued via Hurwitz zeta) — which share
//!   their singularities at s = 0..max rank;
//! * the von Mangoldt counting profile N(n) = n·Λ(n).
//!
//! ζ itself is exposed only through log-derivatives and through ratios
//! `exp ∫_{s₀}^s` anchored at s₀ = 10, which are normalization-free.

use crate::arith;
use crate::monoid::{SchemeData, SchemePoint};
use crate::special::{f_auto, f_by_quadrature, hurwitz_zeta, GaussLegendre};
use crate::{Error, Result};
use num::complex::Complex64;
use num::{BigInt, BigRational, One, Zero};
use std::collections::BTreeMap;
use std::f64::consts::PI;

/// Where ratio evaluations are anchored: ζ(s)/ζ(RATIO_ANCHOR).
pub const RATIO_ANCHOR: f64 = 10.0;

/// Number of elements of each order d in `H = Π ℤ/m_j`: the map
/// d ↦ ν(d, H), by Möbius inversion of `h(e) = #{h : ord(h) | e}
/// = Π_j gcd(e, m_j)` over the divisors of the exponent of H.
pub fn element_order_counts(invariant_factors: &[u64]) -> Result<BTreeMap<u64, u64>> {
    let mut order: u128 = 1;
    let mut exponent: u64 = 1;
    for &m in invariant_factors {
        if m == 0 {
            return Err(Error::Domain("invariant factor 0 is not allowed".into()));
        }
        order *= m as u128;
        exponent = exponent / arith::gcd(exponent, m) * m;
    }
    if order > 1_000_000 {
        return Err(Error::Domain(format!(
            "torsion group of order {order} exceeds the 10^6 bound"
        )));
    }
    let h = |e: u64| -> u64 { invariant_factors.iter().map(|&m| arith::gcd(e, m)).product() };
    let mut nu = BTreeMap::new();
    let mut total = 0u64;
    for d in arith::divisors(exponent) {
        let mut count = 0i64;
        for e in arith::divisors(d) {
            count += i64::from(arith::moebius(d / e)) * h(e) as i64;
        }
        debug_assert!(count >= 0);
        if count > 0 {
            nu.insert(d, count as u64);
            total += count as u64;
        }
    }
    debug_assert_eq!(total as u128, order, "order counts must exhaust the group");
    Ok(nu)
}

/// Number of cyclic subgroups of each order d in H:
/// γ(H, d) = ν(d, H)/φ(d), since every cyclic subgroup of order d
/// contains exactly φ(d) elements of order d.
pub fn cyclic_subgroup_counts(invariant_factors: &[u64]) -> Result<BTreeMap<u64, u64>> {
    let nu = element_order_counts(invariant_factors)?;
    let mut gamma = BTreeMap::new();
    for (d, count) in nu {
        let phi = arith::euler_phi(d);
        debug_assert_eq!(count % phi, 0, "order-d elements come in φ(d)-blocks");
        gamma.insert(d, count / phi);
    }
    Ok(gamma)
}

/// ε_H = Σ_d ν(d, H)/d as an exact rational; the weight a torsion group
/// contributes to each singularity exponent.
pub fn epsilon_torsion(invariant_factors: &[u64]) -> Result<BigRational> {
    let nu = element_order_counts(invariant_factors)?;
    let mut acc = BigRational::zero();
    for (d, count) in nu {
        acc += BigRational::new(BigInt::from(count), BigInt::from(d));
    }
    Ok(acc)
}

/// Canonical entire extension of the counting function of one point:
/// N(z) = (z−1)^k Σ_d γ_d (φ(d)/d)(Σ_{|κ|<d/2} e^{2πi(z−1)κ/d}
///                                   + ε_d cos(π(z−1))),  ε_d = [d even].
///
/// At z = n+1 this equals the integer count n^k·Π_j gcd(n, m_j) exactly;
/// every exponential frequency is ≤ 1/2, which pins the interpolation
/// within the uniqueness class of sub-maximal exponential type.
#[derive(Debug, Clone)]
pub struct CanonicalCountingFn {
    pub rank: u32,
    /// (d, γ(H, d)) over cyclic-subgroup orders with γ > 0.
    pub cyclic_terms: Vec<(u64, u64)>,
}

impl CanonicalCountingFn {
    pub fn from_point(point: &SchemePoint) -> Result<Self> {
        let gamma = cyclic_subgroup_counts(&point.torsion)?;
        Ok(CanonicalCountingFn {
            rank: point.rank,
            cyclic_terms: gamma.into_iter().collect(),
        })
    }

    /// Largest frequency |κ|/d (cycles per unit of z) appearing in the
    /// exponential sum, the even-d boundary term counting as 1/2.
    pub fn max_frequency(&self) -> f64 {
        let mut max = 0.0f64;
        for &(d, _) in &self.cyclic_terms {
            let f = if d % 2 == 0 {
                0.5
            } else {
                ((d - 1) / 2) as f64 / d as f64
            };
            max = max.max(f);
        }
        max
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let w = z - 1.0;
        let mut torsion = Complex64::new(0.0, 0.0);
        for &(d, gamma) in &self.cyclic_terms {
            let weight = gamma as f64 * arith::euler_phi(d) as f64 / d as f64;
            torsion += weight * inner_cyclic_sum(d, w);
        }
        let mut pw = Complex64::new(1.0, 0.0);
        for _ in 0..self.rank {
            pw *= w;
        }
        pw * torsion
    }
}

/// Σ_{|κ|<d/2} e^{2πiwκ/d} + [d even]·cos(πw), with exact integer
/// argument reduction when w is a real integer so that counts come out
/// to full double precision.
fn inner_cyclic_sum(d: u64, w: Complex64) -> Complex64 {
    let integral_real = w.im == 0.0 && w.re.fract() == 0.0 && w.re.abs() < 9.0e15;
    let mut acc = Complex64::new(1.0, 0.0);
    for kappa in 1..=(d - 1) / 2 {
        if integral_real {
            let n = w.re as i64;
            let r = (n * kappa as i64).rem_euclid(d as i64) as f64 / d as f64;
            acc.re += 2.0 * (2.0 * PI * r).cos();
        } else {
            acc += 2.0 * (2.0 * PI * kappa as f64 / d as f64 * w).cos();
        }
    }
    if d % 2 == 0 {
        if integral_real {
            let r = (w.re as i64).rem_euclid(2) as f64;
            acc.re += (PI * r).cos();
        } else {
            acc += (PI * w).cos();
        }
    }
    acc
}

/// Canonical extension for a single point given as (rank, torsion).
pub fn canonical_extension_eval(rank: u32, torsion: &[u64], z: Complex64) -> Result<Complex64> {
    let f = CanonicalCountingFn::from_point(&SchemePoint {
        rank,
        torsion: torsion.to_vec(),
    })?;
    Ok(f.eval(z))
}

/// Canonical extension of the full counting function of a scheme datum:
/// the sum of the per-point extensions.
pub fn scheme_counting_eval(x: &SchemeData, z: Complex64) -> Result<Complex64> {
    let mut acc = Complex64::new(0.0, 0.0);
    for p in &x.points {
        acc += CanonicalCountingFn::from_point(p)?.eval(z);
    }
    Ok(acc)
}

/// ∂_s log ξ_d(s) = −(φ(d)/d)(1/s + Σ_{0<|κ|≤d/2} w_κ e^{−2πiκ/d} f(s, 2πκ/d)),
/// the contribution of κ = d/2 halved when d is even; negative κ enter
/// through f(s, −a) = conj(f(s̄, a)). Equals −∫₁^∞ N_d(u) u^{−s−1} du
/// for the d-th cyclic counting density N_d.
pub fn xi_logderiv(d: u64, s: Complex64) -> Result<Complex64> {
    xi_assemble(d, s, &mut |s, a| f_auto(s, a))
}

/// Same assembly as [`xi_logderiv`] with every f-value obtained from the
/// independent oscillatory quadrature; `tol` is the target for the
/// assembled value.
pub fn xi_logderiv_by_quadrature(d: u64, s: Complex64, tol: f64) -> Result<Complex64> {
    let per_term = tol / (d as f64 + 1.0);
    xi_assemble(d, s, &mut |s, a| f_by_quadrature(s, a, per_term))
}

fn xi_assemble(
    d: u64,
    s: Complex64,
    f: &mut dyn FnMut(Complex64, f64) -> Result<Complex64>,
) -> Result<Complex64> {
    if d == 0 {
        return Err(Error::Domain("constituent index d must be ≥ 1".into()));
    }
    let mut acc = 1.0 / s;
    for kappa in 1..=d / 2 {
        let a = 2.0 * PI * kappa as f64 / d as f64;
        let weight = if d % 2 == 0 && kappa == d / 2 { 0.5 } else { 1.0 };
        let phase = Complex64::from_polar(1.0, -2.0 * PI * kappa as f64 / d as f64);
        let fp = f(s, a)?;
        let fm = f(s.conj(), a)?.conj();
        acc += weight * (phase * fp + phase.conj() * fm);
    }
    Ok(-(arith::euler_phi(d) as f64 / d as f64) * acc)
}

/// Discrete counterpart of [`xi_logderiv`]: −Σ_{n≡1 (d)} φ(d)·n^{−s−1}
/// continued as −φ(d)·d^{−s−1}·ζ(s+1, 1/d). Shares the residue φ(d)/d
/// at s = 0 with the integral constituent.
pub fn xi_discrete_logderiv(d: u64, s: Complex64) -> Result<Complex64> {
    if d == 0 {
        return Err(Error::Domain("constituent index d must be ≥ 1".into()));
    }
    let phi = arith::euler_phi(d) as f64;
    let dp = ((-s - 1.0) * (d as f64).ln()).exp();
    Ok(-phi * dp * hurwitz_zeta(s + 1.0, 1.0 / d as f64)?)
}

/// Exact rational singularity exponents: ζ_X(s) behaves like
/// Π_j (s − j)^{α_j} near the integers j = 0..max rank.
#[derive(Debug, Clone, PartialEq)]
pub struct ExponentVector {
    /// α_j for j = 0..=max rank.
    pub alphas: Vec<BigRational>,
}

fn binom_big(n: u32, j: u32) -> BigInt {
    if j > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..j.min(n - j) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// α_j = (−1)^{j+1} Σ_x (−1)^{k_x} C(k_x, j) ε_{H_x}, all exact.
pub fn alpha_exponents(x: &SchemeData) -> Result<ExponentVector> {
    let max_rank = x.points.iter().map(|p| p.rank).max().unwrap_or(0);
    let eps: Vec<BigRational> = x
        .points
        .iter()
        .map(|p| epsilon_torsion(&p.torsion))
        .collect::<Result<_>>()?;
    let mut alphas = Vec::with_capacity(max_rank as usize + 1);
    for j in 0..=max_rank {
        let mut acc = BigRational::zero();
        for (p, e) in x.points.iter().zip(&eps) {
            let mut term = BigRational::from(binom_big(p.rank, j)) * e;
            if p.rank % 2 == 1 {
                term = -term;
            }
            acc += term;
        }
        if j % 2 == 0 {
            acc = -acc;
        }
        alphas.push(acc);
    }
    Ok(ExponentVector { alphas })
}

/// Which zeta log-derivative is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LdMode {
    /// −∫₁^∞ N(u) u^{−s−1} du, assembled from the ξ_d constituents.
    Integral,
    /// −Σ_{n≥1} N(n) n^{−s−1}, continued through Hurwitz zeta.
    Discrete,
}

struct PointTerms {
    rank: u32,
    /// (d, γ(H,d), ν(d,H)) per cyclic-subgroup order.
    terms: Vec<(u64, u64, u64)>,
}

/// Prepared evaluator for ∂_s log ζ_X(s) in either mode. Immutable after
/// construction; evaluations at distinct s are independent.
pub struct LogDerivEvaluator {
    mode: LdMode,
    points: Vec<PointTerms>,
    max_rank: u32,
}

impl LogDerivEvaluator {
    pub fn new(x: &SchemeData, mode: LdMode) -> Result<Self> {
        let mut points = Vec::with_capacity(x.points.len());
        let mut max_rank = 0;
        for p in &x.points {
            max_rank = max_rank.max(p.rank);
            let gamma = cyclic_subgroup_counts(&p.torsion)?;
            let terms = gamma
                .into_iter()
                .map(|(d, g)| (d, g, g * arith::euler_phi(d)))
                .collect();
            points.push(PointTerms {
                rank: p.rank,
                terms,
            });
        }
        Ok(LogDerivEvaluator {
            mode,
            points,
            max_rank,
        })
    }

    pub fn mode(&self) -> LdMode {
        self.mode
    }

    pub fn max_rank(&self) -> u32 {
        self.max_rank
    }

    /// ∂_s log ζ_X(s). Both modes share simple poles at s = 0..=max rank;
    /// those points are rejected as domain errors.
    pub fn eval(&self, s: Complex64) -> Result<Complex64> {
        for j in 0..=self.max_rank {
            if (s - j as f64).norm() < 1e-9 {
                return Err(Error::Domain(format!(
                    "log-derivative has a pole at s = {j}"
                )));
            }
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for pt in &self.points {
            let k = pt.rank;
            match self.mode {
                LdMode::Integral => {
                    // (u−1)^k = Σ_j C(k,j)(−1)^{k−j} u^j shifts each
                    // constituent: −∫ u^j N_d(u) u^{−s−1} du = ξ'_d/ξ_d (s−j).
                    for j in 0..=k {
                        let mut c = binom_f64(k, j);
                        if (k - j) % 2 == 1 {
                            c = -c;
                        }
                        for &(d, gamma, _) in &pt.terms {
                            acc += c * gamma as f64 * xi_logderiv(d, s - j as f64)?;
                        }
                    }
                }
                LdMode::Discrete => {
                    // N(n) = Σ_d ν(d)[d | n−1](n−1)^k; expand (n−1)^k in
                    // powers of n and sum each lattice n ≡ 1 (mod d) by
                    // Hurwitz zeta.
                    for &(d, _, nu) in &pt.terms {
                        for i in 0..=k {
                            let mut c = binom_f64(k, i);
                            if (k - i) % 2 == 1 {
                                c = -c;
                            }
                            let dp = ((i as f64 - s - 1.0) * (d as f64).ln()).exp();
                            let hz = hurwitz_zeta(s + 1.0 - i as f64, 1.0 / d as f64)?;
                            acc -= nu as f64 * c * dp * hz;
                        }
                    }
                }
            }
        }
        Ok(acc)
    }
}

fn binom_f64(n: u32, j: u32) -> f64 {
    if j > n {
        return 0.0;
    }
    let mut acc = 1.0f64;
    for i in 0..j.min(n - j) {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

/// ∂_s log ζ_X(s) for a prepared evaluator.
pub fn zeta_logderiv(ev: &LogDerivEvaluator, s: Complex64) -> Result<Complex64> {
    ev.eval(s)
}

/// log(ζ(s)/ζ(s₀)) = ∫_{s₀}^s ∂_w log ζ(w) dw along the straight path,
/// anchored at s₀ = [`RATIO_ANCHOR`]. The path must avoid the poles at
/// 0..=max rank.
pub fn log_zeta_ratio(ev: &LogDerivEvaluator, s: Complex64) -> Result<Complex64> {
    let s0 = Complex64::new(RATIO_ANCHOR, 0.0);
    let delta = s - s0;
    let len = delta.norm();
    if len == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let rule = GaussLegendre::new(16);
    let panels = (len / 0.5).ceil() as usize;
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..panels {
        let (t0, t1) = (k as f64 / panels as f64, (k + 1) as f64 / panels as f64);
        let c = 0.5 * (t1 - t0);
        let mid = 0.5 * (t1 + t0);
        for (&x, &w) in rule.nodes().iter().zip(rule.weights()) {
            let t = c * x + mid;
            acc += w * c * ev.eval(s0 + t * delta)?;
        }
    }
    Ok(acc * delta)
}

/// ζ(s)/ζ(s₀) with s₀ = [`RATIO_ANCHOR`].
pub fn zeta_ratio(ev: &LogDerivEvaluator, s: Complex64) -> Result<Complex64> {
    Ok(log_zeta_ratio(ev, s)?.exp())
}

/// The von Mangoldt counting profile N(n) = n·Λ(n), kept symbolic:
/// each prime power n = p^ℓ ≤ n_max is stored as n ↦ (p, ℓ), meaning
/// N(n) = n·log p; all other n have N(n) = 0.
#[derive(Debug, Clone)]
pub struct MangoldtProfile {
    n_max: u64,
    terms: BTreeMap<u64, (u64, u32)>,
}

impl MangoldtProfile {
    pub fn n_max(&self) -> u64 {
        self.n_max
    }

    /// All (n, p, ℓ) with n = p^ℓ ≤ n_max, in increasing n.
    pub fn terms(&self) -> impl Iterator<Item = (u64, u64, u32)> + '_ {
        self.terms.iter().map(|(&n, &(p, l))| (n, p, l))
    }

    /// N(n) as the symbolic pair (n, p) meaning n·log p; None when 0.
    pub fn counting_value(&self, n: u64) -> Option<(u64, u64)> {
        self.terms.get(&n).map(|&(p, _)| (n, p))
    }

    /// The idealized count #X(𝔽₁ⁿ) = (n+1)·log p when n+1 = p^ℓ,
    /// returned as the symbolic pair (n+1, p); None when 0.
    pub fn idealized_count(&self, n: u64) -> Option<(u64, u64)> {
        self.terms.get(&(n + 1)).map(|&(p, _)| (n + 1, p))
    }

    /// Σ_{n ≤ n_max} Λ(n) n^{−s}, the truncated Dirichlet series of
    /// −ζ′/ζ.
    pub fn dirichlet_lambda_sum(&self, s: f64) -> f64 {
        self.terms
            .iter()
            .map(|(&n, &(p, _))| (p as f64).ln() * (n as f64).powf(-s))
            .sum()
    }
}

/// Tabulate the profile up to n_max (≤ 10⁷).
pub fn mangoldt_profile(n_max: u64) -> Result<MangoldtProfile> {
    if n_max > 10_000_000 {
        return Err(Error::Domain(format!(
            "n_max = {n_max} exceeds the 10^7 bound"
        )));
    }
    let mut terms = BTreeMap::new();
    if n_max >= 2 {
        let sieve = arith::Sieve::new(n_max as usize);
        for &p in sieve.primes() {
            let mut n = p;
            let mut l = 1u32;
            loop {
                terms.insert(n, (p, l));
                match n.checked_mul(p) {
                    Some(next) if next <= n_max => {
                        n = next;
                        l += 1;
                    }
                    _ => break,
                }
            }
        }
    }
    Ok(MangoldtProfile { n_max, terms })
}
