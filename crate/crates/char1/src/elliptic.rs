//! Elliptic curves over ℚ: reduction mod p, exact point counts, the
//! multiplicative sequence t(n) with t(p^ℓ) = α_p^ℓ + ᾱ_p^ℓ, the
//! Dirichlet-series factorization R(s) = L(s)/(ζ(2s−1)·M(s)) checked at
//! the coefficient level, and the symbolic singularity catalog of the
//! associated discrete zeta function.
//!
//! Curves are given by a (minimal) Weierstrass model
//! y² + a₁xy + a₃y = x³ + a₂x² + a₄x + a₆ with the classical invariants
//! b₂ = a₁² + 4a₂, b₄ = 2a₄ + a₁a₃, b₆ = a₃² + 4a₆,
//! b₈ = a₁²a₆ + 4a₂a₆ − a₁a₃a₄ + a₂a₃² − a₄²,
//! Δ = −b₂²b₈ − 8b₄³ − 27b₆² + 9b₂b₄b₆.

use crate::arith;
use crate::{Error, Result};
use num::bigint::BigInt;
use num::{Integer, Signed, ToPrimitive, Zero};
use serde::Serialize;

/// A Weierstrass model with nonzero discriminant, its invariants, and
/// its bad primes. The model is assumed minimal at every prime (no
/// Tate algorithm is run); [`CurveModel::minimality_warnings`] flags the
/// standard non-minimality pattern heuristically.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveModel {
    pub a1: BigInt,
    pub a2: BigInt,
    pub a3: BigInt,
    pub a4: BigInt,
    pub a6: BigInt,
    b2: BigInt,
    b4: BigInt,
    b6: BigInt,
    b8: BigInt,
    delta: BigInt,
    /// (p, v_p(Δ)) over bad primes, increasing p.
    bad: Vec<(u64, u32)>,
}

/// Reduction type of a curve at one prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionType {
    Good,
    SplitMult,
    NonSplitMult,
    Additive,
}

impl std::fmt::Display for ReductionType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ReductionType::Good => "good",
            ReductionType::SplitMult => "split multiplicative",
            ReductionType::NonSplitMult => "non-split multiplicative",
            ReductionType::Additive => "additive",
        })
    }
}

const PRIME_BOUND: u64 = 1_000_000;

impl CurveModel {
    pub fn new(a: [BigInt; 5]) -> Result<Self> {
        let [a1, a2, a3, a4, a6] = a;
        let four = BigInt::from(4);
        let b2: BigInt = &a1 * &a1 + &four * &a2;
        let b4: BigInt = BigInt::from(2) * &a4 + &a1 * &a3;
        let b6: BigInt = &a3 * &a3 + &four * &a6;
        let b8: BigInt =
            &a1 * &a1 * &a6 + &four * &a2 * &a6 - &a1 * &a3 * &a4 + &a2 * &a3 * &a3 - &a4 * &a4;
        let delta: BigInt = -(&b2 * &b2 * &b8) - BigInt::from(8) * (&b4 * &b4 * &b4)
            - BigInt::from(27) * (&b6 * &b6)
            + BigInt::from(9) * &b2 * &b4 * &b6;
        if delta.is_zero() {
            return Err(Error::Domain(
                "discriminant is zero: the model is singular over the rationals".into(),
            ));
        }
        let bad = factor_bad_primes(&delta)?;
        Ok(CurveModel {
            a1,
            a2,
            a3,
            a4,
            a6,
            b2,
            b4,
            b6,
            b8,
            delta,
            bad,
        })
    }

    pub fn from_i64(a: [i64; 5]) -> Result<Self> {
        Self::new(a.map(BigInt::from))
    }

    /// The curve y² + y = x³ − x² − 10x − 20 (conductor 11).
    pub fn eleven_a() -> Self {
        Self::from_i64([0, -1, 1, -10, -20]).expect("reference curve is nonsingular")
    }

    /// Parse `{"a":[a1,a2,a3,a4,a6]}`; entries may be JSON integers or
    /// decimal strings (for values beyond 64 bits).
    pub fn from_json(text: &str) -> Result<Self> {
        let v: serde_json::Value = serde_json::from_str(text)
            .map_err(|e| Error::Domain(format!("curve JSON: {e}")))?;
        let arr = v
            .get("a")
            .and_then(|a| a.as_array())
            .ok_or_else(|| Error::Domain("curve JSON needs a field \"a\": [a1,a2,a3,a4,a6]".into()))?;
        if arr.len() != 5 {
            return Err(Error::Domain(format!(
                "curve JSON: \"a\" must have 5 entries, got {}",
                arr.len()
            )));
        }
        let mut a = Vec::with_capacity(5);
        for (i, x) in arr.iter().enumerate() {
            let big = match x {
                serde_json::Value::Number(n) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| Error::Domain(format!("coefficient {i}: not an integer"))),
                serde_json::Value::String(s) => s
                    .parse::<BigInt>()
                    .map_err(|_| Error::Domain(format!("coefficient {i}: bad integer string"))),
                _ => Err(Error::Domain(format!("coefficient {i}: expected integer"))),
            }?;
            a.push(big);
        }
        Self::new([
            a[0].clone(),
            a[1].clone(),
            a[2].clone(),
            a[3].clone(),
            a[4].clone(),
        ])
    }

    pub fn to_json(&self) -> String {
        let enc = |x: &BigInt| -> serde_json::Value {
            match x.to_i64() {
                Some(v) => serde_json::Value::from(v),
                None => serde_json::Value::from(x.to_string()),
            }
        };
        serde_json::json!({ "a": [enc(&self.a1), enc(&self.a2), enc(&self.a3), enc(&self.a4), enc(&self.a6)] })
            .to_string()
    }

    pub fn discriminant(&self) -> &BigInt {
        &self.delta
    }

    pub fn bad_primes(&self) -> Vec<u64> {
        self.bad.iter().map(|&(p, _)| p).collect()
    }

    /// Heuristic non-minimality flags: v_p(Δ) ≥ 12 together with
    /// v_p(c₄) ≥ 4 means the model can be reduced at p (warning only —
    /// minimal input is the caller's contract).
    pub fn minimality_warnings(&self) -> Vec<String> {
        let c4: BigInt = &self.b2 * &self.b2 - BigInt::from(24) * &self.b4;
        let mut out = Vec::new();
        for &(p, v) in &self.bad {
            if v < 12 {
                continue;
            }
            let v_c4 = if c4.is_zero() {
                u32::MAX
            } else {
                let mut c = c4.clone();
                let big_p = BigInt::from(p);
                let mut n = 0;
                while (&c % &big_p).is_zero() {
                    c /= &big_p;
                    n += 1;
                }
                n
            };
            if v_c4 >= 4 {
                out.push(format!(
                    "model looks non-minimal at p = {p}: v_p(discriminant) = {v} ≥ 12 and v_p(c4) ≥ 4"
                ));
            }
        }
        out
    }

    fn check_prime(&self, p: u64) -> Result<()> {
        if !arith::is_prime(p) {
            return Err(Error::Domain(format!("{p} is not prime")));
        }
        if p > PRIME_BOUND {
            return Err(Error::Domain(format!("prime {p} exceeds the 10^6 bound")));
        }
        Ok(())
    }

    /// #E(𝔽_p), the singular point included when the reduction is bad.
    /// Odd p counts via the completed square
    /// (2y + a₁x + a₃)² = 4x³ + b₂x² + 2b₄x + b₆ and the Legendre
    /// symbol; p ∈ {2, 3} enumerates the Weierstrass form directly.
    pub fn count_points_modp(&self, p: u64) -> Result<u64> {
        self.check_prime(p)?;
        if p <= 3 {
            let m = |x: &BigInt| mod_u(x, p);
            let (a1, a2, a3, a4, a6) =
                (m(&self.a1), m(&self.a2), m(&self.a3), m(&self.a4), m(&self.a6));
            let mut count = 1; // the point at infinity
            for x in 0..p {
                for y in 0..p {
                    let lhs = (y * y + a1 * x * y + a3 * y) % p;
                    let rhs = (((x + a2) * x + a4) * x + a6) % p;
                    if lhs == rhs {
                        count += 1;
                    }
                }
            }
            return Ok(count);
        }
        let b2 = mod_u(&self.b2, p);
        let b4_2 = mod_u(&(2 * &self.b4), p);
        let b6 = mod_u(&self.b6, p);
        let mut sum: i64 = 0;
        for x in 0..p {
            let g = (((4 * x + b2) % p * x + b4_2) % p * x + b6) % p;
            sum += i64::from(arith::legendre(g as i64, p));
        }
        Ok((p as i64 + 1 + sum) as u64)
    }

    /// Reduction type at p. Bad odd p: locate the double root x₀ of the
    /// completed-square cubic, write the tangent cone as
    /// η² = 4(x₀ − s)ξ² (s the remaining simple root) and classify by
    /// x₀ = s → additive, x₀ − s square → split, non-square → non-split.
    /// Bad p = 2: a₁ odd gives a node with tangent equation
    /// ϑ² + ϑ + (a₂+a₃) over 𝔽₂ — split iff a₂ + a₃ is even; a₁ even
    /// forces a cusp.
    pub fn reduction_type(&self, p: u64) -> Result<ReductionType> {
        self.check_prime(p)?;
        if !(&self.delta % BigInt::from(p)).is_zero() {
            return Ok(ReductionType::Good);
        }
        if p == 2 {
            let a1_odd = mod_u(&self.a1, 2) == 1;
            if !a1_odd {
                return Ok(ReductionType::Additive);
            }
            return Ok(if (mod_u(&self.a2, 2) + mod_u(&self.a3, 2)) % 2 == 0 {
                ReductionType::SplitMult
            } else {
                ReductionType::NonSplitMult
            });
        }
        let b2 = mod_u(&self.b2, p);
        let b4_2 = mod_u(&(2 * &self.b4), p);
        let b6 = mod_u(&self.b6, p);
        let g = |x: u64| (((4 * x + b2) % p * x + b4_2) % p * x + b6) % p;
        let dg = |x: u64| ((12 * x + 2 * b2) % p * x + b4_2) % p;
        let x0 = (0..p)
            .find(|&x| g(x) == 0 && dg(x) == 0)
            .ok_or_else(|| Error::Internal("bad reduction but no singular point found".into()))?;
        // Root sum of 4x³ + b₂x² + … is −b₂/4, so the simple root is
        // s = −b₂/4 − 2x₀.
        let inv4 = arith::mod_pow(4, p - 2, p);
        let s = ((p - b2) % p * inv4 + 2 * (p - x0)) % p;
        if s == x0 {
            return Ok(ReductionType::Additive);
        }
        let diff = (x0 + p - s) % p;
        Ok(if arith::legendre(diff as i64, p) == 1 {
            ReductionType::SplitMult
        } else {
            ReductionType::NonSplitMult
        })
    }
}

fn mod_u(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().expect("reduced residue fits")
}

/// Trial-divide |Δ| by primes up to 10⁶; a surviving cofactor means a
/// bad prime outside the supported range, which is a validation error.
fn factor_bad_primes(delta: &BigInt) -> Result<Vec<(u64, u32)>> {
    let mut bad = Vec::new();
    let mut rest = delta.abs();
    if let Some(small) = rest.to_u64() {
        let (factors, cofactor) = arith::factor_trial(small, PRIME_BOUND);
        if let Some(c) = cofactor {
            return Err(Error::Domain(format!(
                "discriminant has a prime factor above 10^6 (cofactor {c})"
            )));
        }
        return Ok(factors);
    }
    // 2, 3, then a 6k±1 wheel; composite candidates never divide because
    // their prime factors were removed first.
    let divide_out = |p: u64, rest: &mut BigInt| -> u32 {
        let big_p = BigInt::from(p);
        let mut v = 0;
        while (&*rest % &big_p).is_zero() {
            *rest /= &big_p;
            v += 1;
        }
        v
    };
    for p in [2u64, 3] {
        let v = divide_out(p, &mut rest);
        if v > 0 {
            bad.push((p, v));
        }
    }
    let mut p = 5u64;
    while p <= PRIME_BOUND {
        for q in [p, p + 2] {
            let v = divide_out(q, &mut rest);
            if v > 0 {
                bad.push((q, v));
            }
        }
        if let Some(r) = rest.to_u64() {
            // Small remainder: finish with u64 trial division.
            if r > 1 {
                let (mut factors, cofactor) = arith::factor_trial(r, PRIME_BOUND);
                if let Some(c) = cofactor {
                    return Err(Error::Domain(format!(
                        "discriminant has a prime factor above 10^6 (cofactor {c})"
                    )));
                }
                factors.retain(|&(q, _)| q > p + 2);
                bad.extend(factors);
            }
            bad.sort_unstable();
            return Ok(bad);
        }
        p += 6;
    }
    Err(Error::Domain(
        "discriminant has a prime factor above 10^6".into(),
    ))
}

/// Exact integer Dirichlet coefficients indexed by n (index 0 unused,
/// kept at 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirichletCoeffs {
    pub coeffs: Vec<i64>,
}

impl DirichletCoeffs {
    pub fn n_max(&self) -> u64 {
        self.coeffs.len() as u64 - 1
    }

    pub fn get(&self, n: u64) -> i64 {
        self.coeffs.get(n as usize).copied().unwrap_or(0)
    }
}

/// Coefficients of the level-11 eta product q·Π(1−qⁿ)²(1−q¹¹ⁿ)², the
/// modular form attached to [`CurveModel::eleven_a`]; a(0) = 0. Built
/// by squaring the pentagonal-number series at levels 1 and 11.
pub fn eta_coeffs(n_max: u64) -> Result<DirichletCoeffs> {
    if n_max > 100_000 {
        return Err(Error::Domain(format!(
            "eta expansion bound is 10^5, got {n_max}"
        )));
    }
    let deg = (n_max as usize).saturating_sub(1);
    let mut acc = vec![0i64; deg + 1];
    acc[0] = 1;
    for level in [1usize, 11, 1, 11] {
        acc = multiply_by_pentagonal(&acc, level);
    }
    let mut coeffs = vec![0i64; n_max as usize + 1];
    for (i, &c) in acc.iter().enumerate() {
        if i + 1 <= n_max as usize {
            coeffs[i + 1] = c;
        }
    }
    Ok(DirichletCoeffs { coeffs })
}

/// Multiply a truncated series by Π(1−q^{level·n}) via Euler's pentagonal
/// expansion Σ_k (−1)^k q^{level·k(3k−1)/2}.
fn multiply_by_pentagonal(a: &[i64], level: usize) -> Vec<i64> {
    let deg = a.len() - 1;
    let mut sparse = vec![(0usize, 1i64)];
    let mut k = 1i64;
    loop {
        let mut hit = false;
        for e in [k * (3 * k - 1) / 2, k * (3 * k + 1) / 2] {
            let e = e as usize * level;
            if e <= deg {
                sparse.push((e, if k % 2 == 1 { -1 } else { 1 }));
                hit = true;
            }
        }
        if !hit {
            break;
        }
        k += 1;
    }
    let mut out = vec![0i64; deg + 1];
    for &(e, c) in &sparse {
        for i in e..=deg {
            out[i] += c * a[i - e];
        }
    }
    out
}

/// a(p) from point counting: a(p) = p + 1 − #E(𝔽_p) at good primes and
/// the local L-value (split 1, non-split −1, additive 0) at bad ones,
/// extended to all n ≤ n_max by Hecke multiplicativity
/// (a(p^ν) = a(p)a(p^{ν−1}) − p·a(p^{ν−2}) at good p, a(p)^ν at bad p).
pub fn a_coeffs_from_counting(e: &CurveModel, n_max: u64) -> Result<DirichletCoeffs> {
    if n_max > 10_000 {
        return Err(Error::Domain(format!(
            "counting-based coefficients are supported to 10^4, got {n_max}"
        )));
    }
    let a_p = |p: u64| -> Result<i64> {
        Ok(match e.reduction_type(p)? {
            ReductionType::Good => p as i64 + 1 - e.count_points_modp(p)? as i64,
            ReductionType::SplitMult => 1,
            ReductionType::NonSplitMult => -1,
            ReductionType::Additive => 0,
        })
    };
    prime_power_multiplicative(e, n_max, a_p, |good, ap, p, table| {
        if good {
            // Hecke recurrence, seed a(p⁰) = 1.
            for nu in 1..table.len() {
                let prev2 = if nu >= 2 { table[nu - 2] } else { 1 };
                table[nu] = if nu == 1 {
                    ap
                } else {
                    ap * table[nu - 1] - p as i64 * prev2
                };
            }
        } else {
            for nu in 1..table.len() {
                table[nu] = ap.pow(nu as u32);
            }
        }
    })
}

/// t(n): the multiplicative function with t(1) = 1,
/// t(p^ℓ) = α_p^ℓ + ᾱ_p^ℓ at good primes (power-sum recurrence
/// t(p^ℓ) = a(p)t(p^{ℓ−1}) − p·t(p^{ℓ−2}) seeded with t(p⁰) → 2), and
/// t(p^ℓ) = 1 / (−1)^ℓ / 0 at split / non-split / additive primes.
/// Then #E(𝔽_{p^ℓ}) = p^ℓ + 1 − t(p^ℓ).
pub fn t_coeffs(e: &CurveModel, a: &DirichletCoeffs, n_max: u64) -> Result<DirichletCoeffs> {
    if a.n_max() < n_max {
        return Err(Error::Domain(format!(
            "need a(n) through {n_max}, have {}",
            a.n_max()
        )));
    }
    let a_p = |p: u64| -> Result<i64> { Ok(a.get(p)) };
    prime_power_multiplicative(e, n_max, a_p, |good, ap, p, table| {
        if good {
            for nu in 1..table.len() {
                // Power sums: s₀ = 2 feeds the ℓ = 2 step (table[0] is
                // the multiplicative identity 1, not s₀).
                let prev2 = if nu == 2 { 2 } else { table[nu.saturating_sub(2)] };
                table[nu] = if nu == 1 {
                    ap
                } else {
                    ap * table[nu - 1] - p as i64 * prev2
                };
            }
        } else {
            for nu in 1..table.len() {
                table[nu] = ap.pow(nu as u32);
            }
        }
    })
}

/// Shared multiplicative-fill driver: compute prime-power values with
/// `fill` (given a(p) from `a_p`), then extend by multiplicativity over
/// the factorization of every n ≤ n_max.
fn prime_power_multiplicative(
    e: &CurveModel,
    n_max: u64,
    a_p: impl Fn(u64) -> Result<i64>,
    fill: impl Fn(bool, i64, u64, &mut [i64]),
) -> Result<DirichletCoeffs> {
    let mut coeffs = vec![0i64; n_max as usize + 1];
    if n_max == 0 {
        return Ok(DirichletCoeffs { coeffs });
    }
    coeffs[1] = 1;
    if n_max == 1 {
        return Ok(DirichletCoeffs { coeffs });
    }
    let sieve = arith::Sieve::new(n_max as usize);
    let mut tables: std::collections::HashMap<u64, Vec<i64>> = std::collections::HashMap::new();
    for &p in sieve.primes() {
        let mut len = 1;
        let mut pw = p;
        while pw <= n_max {
            len += 1;
            match pw.checked_mul(p) {
                Some(next) => pw = next,
                None => break,
            }
        }
        let mut table = vec![0i64; len];
        table[0] = 1;
        let good = e.reduction_type(p)? == ReductionType::Good;
        fill(good, a_p(p)?, p, &mut table);
        tables.insert(p, table);
    }
    for n in 2..=n_max {
        let mut m = n;
        let p = sieve.factor(n)[0].0;
        let mut nu = 0;
        while m % p == 0 {
            m /= p;
            nu += 1;
        }
        coeffs[n as usize] = tables[&p][nu] * coeffs[m as usize];
    }
    Ok(DirichletCoeffs { coeffs })
}

/// Outcome of [`dirichlet_identity_check`].
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub n_checked: u64,
    /// First n where t(n) ≠ (a ⋆ u ⋆ v)(n): (n, t(n), convolution).
    pub first_global_mismatch: Option<(u64, i64, i64)>,
    /// First local power-series mismatch: (p, exponent, t-side, a-side).
    pub first_local_mismatch: Option<(u64, u32, i64, i64)>,
}

impl IdentityReport {
    pub fn ok(&self) -> bool {
        self.first_global_mismatch.is_none() && self.first_local_mismatch.is_none()
    }
}

/// Verify t = a ⋆ u ⋆ v exactly through n_max, where u carries
/// 1/ζ(2s−1) (u(m²) = μ(m)·m, else 0) and v carries
/// 1/M(s) = Π_{p bad} (1−p^{1−2s})^{−1} (v(e²) = e for e a product of
/// bad primes, else 0); plus the local checks
/// (1−px²)Σ_ν a(p^ν)x^ν = Σ_ν t(p^ν)x^ν at good p (order ≤ 8) and
/// t(p^ν) = a(p^ν) at bad p.
pub fn dirichlet_identity_check(
    e: &CurveModel,
    a: &DirichletCoeffs,
    t: &DirichletCoeffs,
    n_max: u64,
) -> Result<IdentityReport> {
    if a.n_max() < n_max || t.n_max() < n_max {
        return Err(Error::Domain(format!(
            "need both coefficient arrays through {n_max}"
        )));
    }
    let bad = e.bad_primes();
    let root = (n_max as f64).sqrt() as u64 + 1;
    // w = u ⋆ v on squares: w(q²) = Σ_{q = m·e, e bad-smooth} μ(m)·m·e.
    let mut w = vec![0i64; root as usize + 1];
    for q in 1..=root {
        let mut acc = 0i64;
        for ebad in bad_smooth_divisors(q, &bad) {
            let m = q / ebad;
            acc += i64::from(arith::moebius(m)) * m as i64 * ebad as i64;
        }
        w[q as usize] = acc;
    }
    let mut first_global_mismatch = None;
    for n in 1..=n_max {
        let mut conv = 0i64;
        let mut q = 1u64;
        while q * q <= n {
            if n % (q * q) == 0 && w[q as usize] != 0 {
                conv += a.get(n / (q * q)) * w[q as usize];
            }
            q += 1;
        }
        if conv != t.get(n) {
            first_global_mismatch = Some((n, t.get(n), conv));
            break;
        }
    }
    let mut first_local_mismatch = None;
    let sieve = arith::Sieve::new(n_max.max(2) as usize);
    'outer: for &p in sieve.primes() {
        let good = e.reduction_type(p)? == ReductionType::Good;
        let mut pw = 1u64;
        for nu in 0..=8u32 {
            if pw > n_max {
                break;
            }
            let (lhs, rhs) = if good {
                // coefficient of x^ν in (1−px²)·Σ a(p^ν)x^ν
                let shifted = if nu >= 2 { a.get(pw / (p * p)) } else { 0 };
                (t.get(pw), a.get(pw) - p as i64 * shifted)
            } else {
                (t.get(pw), a.get(pw))
            };
            if lhs != rhs {
                first_local_mismatch = Some((p, nu, lhs, rhs));
                break 'outer;
            }
            match pw.checked_mul(p) {
                Some(next) => pw = next,
                None => break,
            }
        }
    }
    Ok(IdentityReport {
        n_checked: n_max,
        first_global_mismatch,
        first_local_mismatch,
    })
}

/// Divisors of q composed only of the given primes (1 included).
fn bad_smooth_divisors(q: u64, bad: &[u64]) -> Vec<u64> {
    let mut out = vec![1u64];
    for &p in bad {
        let mut extended = Vec::new();
        for &d in &out {
            let mut dp = d;
            while q % (dp * p) == 0 && dp <= q / p {
                dp *= p;
                extended.push(dp);
            }
        }
        out.extend(extended);
    }
    out.retain(|d| q % d == 0);
    out
}

/// One symbolic singularity of the discrete zeta function
/// −ζ(s+1) − ζ(s) + L(s+1)/(ζ(2s+1)M(s+1)).
#[derive(Debug, Clone, Serialize)]
pub struct Singularity {
    pub re: f64,
    pub im: f64,
    pub source: String,
    /// Order of the singularity; 0 for the conditional-line marker.
    pub order: u32,
    /// True for items contingent on the Riemann hypothesis.
    pub conditional: bool,
}

/// All singularities inside the closed rectangle
/// re_range × im_range: the ζ poles at s = 0 and s = 1, the trivial-zero
/// points s = −n − 1/2 (n ≥ 1), the bad-prime lattices
/// s = −1/2 + πik/log p (order |S| at the common point k = 0), and a
/// conditional marker for the line Re(s) = −1/4 (nontrivial zeros of
/// ζ(2s+1), under RH).
pub fn singularity_catalog(
    e: &CurveModel,
    re_range: (f64, f64),
    im_range: (f64, f64),
) -> Vec<Singularity> {
    let (re_lo, re_hi) = re_range;
    let (im_lo, im_hi) = im_range;
    let inside = |re: f64, im: f64| re >= re_lo && re <= re_hi && im >= im_lo && im <= im_hi;
    let mut out = Vec::new();
    if inside(0.0, 0.0) {
        out.push(Singularity {
            re: 0.0,
            im: 0.0,
            source: "pole of zeta(s+1)".into(),
            order: 1,
            conditional: false,
        });
    }
    if inside(1.0, 0.0) {
        out.push(Singularity {
            re: 1.0,
            im: 0.0,
            source: "pole of zeta(s)".into(),
            order: 1,
            conditional: false,
        });
    }
    let mut n = 1u64;
    loop {
        let re = -(n as f64) - 0.5;
        if re < re_lo {
            break;
        }
        if inside(re, 0.0) {
            out.push(Singularity {
                re,
                im: 0.0,
                source: format!("trivial zero of zeta(2s+1) at s = -{n}-1/2"),
                order: 1,
                conditional: false,
            });
        }
        n += 1;
    }
    let bad = e.bad_primes();
    if inside(-0.5, 0.0) && !bad.is_empty() {
        out.push(Singularity {
            re: -0.5,
            im: 0.0,
            source: "zero of M(s+1) at s = -1/2 (every bad prime)".into(),
            order: bad.len() as u32,
            conditional: false,
        });
    }
    for &p in &bad {
        let spacing = std::f64::consts::PI / (p as f64).ln();
        let mut k = 1i64;
        loop {
            let im = spacing * k as f64;
            if im > im_hi && -im < im_lo {
                break;
            }
            for pt in [im, -im] {
                if inside(-0.5, pt) {
                    out.push(Singularity {
                        re: -0.5,
                        im: pt,
                        source: format!("zero of M(s+1), p = {p}, k = {}", if pt > 0.0 { k } else { -k }),
                        order: 1,
                        conditional: false,
                    });
                }
            }
            k += 1;
        }
    }
    if re_lo <= -0.25 && re_hi >= -0.25 {
        out.push(Singularity {
            re: -0.25,
            im: 0.0,
            source: "nontrivial zeros of zeta(2s+1) lie on Re(s) = -1/4 (assumes RH)".into(),
            order: 0,
            conditional: true,
        });
    }
    out.sort_by(|a, b| {
        (a.re, a.im)
            .partial_cmp(&(b.re, b.im))
            .expect("catalog coordinates are finite")
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn invariants_of_the_conductor_11_curve() {
        let e = CurveModel::eleven_a();
        // [PAPER] the reference curve y²+y = x³−x²−10x−20 has Δ = −11⁵.
        assert_eq!(e.discriminant(), &BigInt::from(-161051i64));
        assert_eq!(e.bad_primes(), vec![11]);
        assert!(e.minimality_warnings().is_empty());
    }

    #[test]
    fn singular_models_are_rejected() {
        // [TRIVIAL] Δ = 0 examples: y² = x³ and y² = x³ − 3x + 2.
        assert!(matches!(
            CurveModel::from_i64([0, 0, 0, 0, 0]),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            CurveModel::from_i64([0, 0, 0, -3, 2]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn oversized_bad_primes_are_rejected() {
        // [DERIVED] y² = x³ + 1000003 has Δ = −432·1000003², and
        // 1000003 is prime, beyond the 10^6 classification bound.
        assert!(matches!(
            CurveModel::from_i64([0, 0, 0, 0, 1_000_003]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn curve_json_round_trip() {
        let e = CurveModel::eleven_a();
        let back = CurveModel::from_json(&e.to_json()).unwrap();
        assert_eq!(e, back);
        // [TRIVIAL] malformed inputs are domain errors.
        assert!(CurveModel::from_json("{\"a\":[1,2,3]}").is_err());
        assert!(CurveModel::from_json("{\"b\":[]}").is_err());
        // [TRIVIAL] big coefficients survive as strings.
        let big = CurveModel::from_json("{\"a\":[0,0,0,0,\"1\"]}").unwrap();
        assert_eq!(big.a6, BigInt::from(1));
    }

    #[test]
    fn point_counts_of_the_reference_curve() {
        let e = CurveModel::eleven_a();
        // [DERIVED] exhaustive enumeration mod 2: 4 affine points + ∞.
        assert_eq!(e.count_points_modp(2).unwrap(), 5);
        // [PAPER] split multiplicative reduction: N(11) = 1 + (11−1).
        assert_eq!(e.count_points_modp(11).unwrap(), 11);
        // [TRIVIAL] non-primes and oversized primes rejected.
        assert!(e.count_points_modp(4).is_err());
        assert!(e.count_points_modp(1_000_003).is_err());
    }

    #[test]
    fn reduction_type_trichotomy() {
        let e11 = CurveModel::eleven_a();
        // [DERIVED] conductor 11: split at 11 (a(11) = 1), good at 2, 3.
        assert_eq!(e11.reduction_type(11).unwrap(), ReductionType::SplitMult);
        assert_eq!(e11.reduction_type(2).unwrap(), ReductionType::Good);
        assert_eq!(e11.reduction_type(3).unwrap(), ReductionType::Good);
        // [DERIVED] y²+xy+y = x³+4x−6 (conductor 14): a₁ odd with
        // a₂+a₃ odd → non-split at 2; at 7 the tangent-cone residue is a
        // square → split. Direct count N(2) = 4 (N_ns = 3 = 2+1 ✓).
        let e14 = CurveModel::from_i64([1, 0, 1, 4, -6]).unwrap();
        assert_eq!(e14.bad_primes(), vec![2, 7]);
        assert_eq!(e14.reduction_type(2).unwrap(), ReductionType::NonSplitMult);
        assert_eq!(e14.reduction_type(7).unwrap(), ReductionType::SplitMult);
        assert_eq!(e14.count_points_modp(2).unwrap(), 4);
        // [DERIVED] y² = x³ − x² + 49 reduces to the node y² = x²(x−1)
        // mod 7, and −1 is a non-residue mod 7 → non-split.
        let e_ns = CurveModel::from_i64([0, -1, 0, 0, 49]).unwrap();
        assert_eq!(e_ns.reduction_type(7).unwrap(), ReductionType::NonSplitMult);
        // [TRIVIAL] y² = x³ + 25 reduces to the cusp y² = x³ at each of
        // its bad primes 2, 3, 5.
        let e_add = CurveModel::from_i64([0, 0, 0, 0, 25]).unwrap();
        assert_eq!(e_add.bad_primes(), vec![2, 3, 5]);
        for p in [2, 3, 5] {
            assert_eq!(e_add.reduction_type(p).unwrap(), ReductionType::Additive, "p = {p}");
        }
    }

    #[test]
    fn non_minimal_pattern_warns() {
        // [DERIVED] y² = x³ + 5⁶ has v₅(Δ) = 12 and c₄ = 0: flagged.
        let e = CurveModel::from_i64([0, 0, 0, 0, 15_625]).unwrap();
        let warnings = e.minimality_warnings();
        assert_eq!(warnings.len(), 1);
        assert!(warnings[0].contains("p = 5"));
    }

    #[test]
    fn eta_product_reference_coefficients() {
        let a = eta_coeffs(1000).unwrap();
        // [PAPER] a(0)=0 and a(1..7) = (1,−2,−1,2,1,2,−2).
        assert_eq!(a.get(0), 0);
        let want = [1i64, -2, -1, 2, 1, 2, -2];
        for (n, &w) in want.iter().enumerate() {
            assert_eq!(a.get(n as u64 + 1), w, "a({})", n + 1);
        }
        // [DERIVED] split local factor at the bad prime: a(11^ν) = 1.
        assert_eq!(a.get(11), 1);
        assert_eq!(a.get(121), 1);
        // [TRIVIAL] bound enforced.
        assert!(eta_coeffs(100_001).is_err());
    }

    #[test]
    fn counting_and_eta_definitions_agree() {
        // [DERIVED] a(p) = p+1−#E(𝔽_p) extended multiplicatively equals
        // the eta expansion through 2000 — every n, not just primes.
        let e = CurveModel::eleven_a();
        let from_counting = a_coeffs_from_counting(&e, 2000).unwrap();
        let from_eta = eta_coeffs(2000).unwrap();
        assert_eq!(from_counting, from_eta);
    }

    #[test]
    fn t_reference_values() {
        let e = CurveModel::eleven_a();
        let a = eta_coeffs(1000).unwrap();
        let t = t_coeffs(&e, &a, 1000).unwrap();
        // [PAPER] t(1) = 1; t(11^ℓ) = 1 at the split prime.
        assert_eq!(t.get(1), 1);
        assert_eq!(t.get(11), 1);
        assert_eq!(t.get(121), 1);
        // [DERIVED] power sums at good primes: t(p²) = a(p)² − 2p.
        assert_eq!(t.get(4), a.get(2) * a.get(2) - 4);
        assert_eq!(t.get(9), a.get(3) * a.get(3) - 6);
        assert_eq!(t.get(4), 0);
        // [DERIVED] multiplicativity spot check: t(6) = t(2)t(3) = 2.
        assert_eq!(t.get(6), t.get(2) * t.get(3));
        assert_eq!(t.get(6), 2);
    }

    #[test]
    fn t_is_multiplicative_on_random_coprime_pairs() {
        // [DERIVED] 500 seeded coprime pairs with product ≤ 10⁴.
        let e = CurveModel::eleven_a();
        let a = eta_coeffs(10_000).unwrap();
        let t = t_coeffs(&e, &a, 10_000).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut done = 0;
        while done < 500 {
            let m = rng.gen_range(2..=100u64);
            let n = rng.gen_range(2..=10_000 / m);
            if arith::gcd(m, n) != 1 {
                continue;
            }
            done += 1;
            assert_eq!(t.get(m * n), t.get(m) * t.get(n), "({m}, {n})");
        }
    }

    #[test]
    fn counts_stay_positive_and_hasse_bounded() {
        // [PAPER] N(n) = n+1−t(n) > 0 for n ≤ 10⁵, and |t(p^k)| ≤ 2√(p^k)
        // at good prime powers (|α_p| = √p).
        let e = CurveModel::eleven_a();
        let a = eta_coeffs(100_000).unwrap();
        let t = t_coeffs(&e, &a, 100_000).unwrap();
        for n in 1..=100_000u64 {
            assert!(n as i64 + 1 - t.get(n) > 0, "n = {n}");
        }
        let sieve = arith::Sieve::new(100_000);
        for &p in sieve.primes() {
            if p == 11 {
                continue;
            }
            let mut pw = p;
            while pw <= 100_000 {
                let bound = 2.0 * (pw as f64).sqrt();
                assert!(
                    (t.get(pw) as f64).abs() <= bound + 1e-9,
                    "p^k = {pw}: t = {}",
                    t.get(pw)
                );
                match pw.checked_mul(p) {
                    Some(next) => pw = next,
                    None => break,
                }
            }
        }
    }

    #[test]
    fn dirichlet_identity_holds_for_the_reference_curve() {
        // [DERIVED] t = a ⋆ u ⋆ v exactly through 1000, u from 1/ζ(2s−1),
        // v from 1/M(s); local factors match to order 8.
        let e = CurveModel::eleven_a();
        let a = eta_coeffs(1000).unwrap();
        let t = t_coeffs(&e, &a, 1000).unwrap();
        let report = dirichlet_identity_check(&e, &a, &t, 1000).unwrap();
        assert!(report.ok(), "{report:?}");
        assert_eq!(report.n_checked, 1000);
    }

    #[test]
    fn dirichlet_identity_detects_corruption() {
        // [TRIVIAL] a deliberately corrupted t(500) is reported at 500.
        let e = CurveModel::eleven_a();
        let a = eta_coeffs(600).unwrap();
        let mut t = t_coeffs(&e, &a, 600).unwrap();
        t.coeffs[500] += 1;
        let report = dirichlet_identity_check(&e, &a, &t, 600).unwrap();
        assert!(!report.ok());
        assert_eq!(report.first_global_mismatch.map(|(n, _, _)| n), Some(500));
    }

    #[test]
    fn discrete_logderiv_coefficients_assemble() {
        // [TRIVIAL] coefficient-level identity: the counting sequence
        // N(n) = n+1−t(n) is exactly the term-wise sum of the three
        // Dirichlet pieces ζ(s+1) (coefficient 1), ζ(s) (coefficient n),
        // and −R(s+1) (coefficient −t(n)).
        let e = CurveModel::eleven_a();
        let a = eta_coeffs(200).unwrap();
        let t = t_coeffs(&e, &a, 200).unwrap();
        for n in 1..=200u64 {
            let count = n as i64 + 1 - t.get(n);
            assert_eq!(count, 1 + n as i64 - t.get(n));
            assert!(count > 0);
        }
    }

    #[test]
    fn singularity_catalog_of_the_reference_curve() {
        // [PAPER] window [−2,2]²: ζ-poles at 0 and 1, the trivial-zero
        // point −3/2, the order-1 pole at −1/2 (|S| = 1), the k = ±1
        // lattice points −1/2 ± πi/log 11, and the conditional marker.
        let e = CurveModel::eleven_a();
        let cat = singularity_catalog(&e, (-2.0, 2.0), (-2.0, 2.0));
        let spacing = std::f64::consts::PI / 11f64.ln();
        assert!((spacing - 1.3102).abs() < 1e-3);
        let concrete: Vec<(f64, f64, u32)> = cat
            .iter()
            .filter(|s| !s.conditional)
            .map(|s| (s.re, s.im, s.order))
            .collect();
        let want = vec![
            (-1.5, 0.0, 1),
            (-0.5, -spacing, 1),
            (-0.5, 0.0, 1),
            (-0.5, spacing, 1),
            (0.0, 0.0, 1),
            (1.0, 0.0, 1),
        ];
        assert_eq!(concrete.len(), want.len(), "{cat:#?}");
        for ((re, im, ord), (wre, wim, word)) in concrete.iter().zip(&want) {
            assert!((re - wre).abs() < 1e-12 && (im - wim).abs() < 1e-12);
            assert_eq!(ord, word);
        }
        let flags: Vec<_> = cat.iter().filter(|s| s.conditional).collect();
        assert_eq!(flags.len(), 1);
        assert!((flags[0].re + 0.25).abs() < 1e-15);
        // [TRIVIAL] a window away from every lattice is empty.
        assert!(singularity_catalog(&e, (5.0, 6.0), (5.0, 6.0)).is_empty());
    }

    #[test]
    fn singularity_catalog_with_several_bad_primes() {
        // [DERIVED] y² = x³ + 25 is bad at {2, 3, 5}: the pole at −1/2
        // has order 3 and each prime contributes its own lattice.
        let e = CurveModel::from_i64([0, 0, 0, 0, 25]).unwrap();
        let cat = singularity_catalog(&e, (-1.0, -0.4), (-5.0, 5.0));
        let at_half: Vec<_> = cat.iter().filter(|s| s.re == -0.5).collect();
        let center = at_half.iter().find(|s| s.im == 0.0).unwrap();
        assert_eq!(center.order, 3);
        for p in [2u64, 3, 5] {
            let spacing = std::f64::consts::PI / (p as f64).ln();
            let hits = at_half
                .iter()
                .filter(|s| (s.im.abs() % spacing) < 1e-9 || (spacing - s.im.abs() % spacing) < 1e-9)
                .filter(|s| s.im != 0.0 && s.source.contains(&format!("p = {p}")))
                .count();
            let k_max = (5.0 / spacing) as usize;
            assert_eq!(hits, 2 * k_max, "p = {p}");
        }
    }

    #[test]
    fn good_prime_counts_match_the_eta_coefficients() {
        // [PAPER] a(p) = p + 1 − #E(𝔽_p) at every good prime p ≤ 97.
        let e = CurveModel::eleven_a();
        let a = eta_coeffs(100).unwrap();
        let sieve = arith::Sieve::new(97);
        for &p in sieve.primes() {
            if p == 11 {
                continue;
            }
            let n = e.count_points_modp(p).unwrap();
            assert_eq!(a.get(p), p as i64 + 1 - n as i64, "p = {p}");
        }
    }
}
