//! Truncated p-typical Witt vectors over rings of polynomials with exponents
//! in ℤ[1/p], the universal addition coefficients w(pⁿ,k), the map w_p on
//! exponents, and the deformed addition +′.
//!
//! Addition of Witt vectors is computed through ghost components
//! `gh_i = Σ_{j≤i} pʲ a_j^{p^{i−j}}`: add ghostwise over a p-torsion-free
//! coefficient ring, then recover components by successive exact division by
//! p. Exactness of every division is a theorem (Witt integrality), so an
//! inexact division is reported as an internal error.
//!
//! The universal coefficients arise from `τ(x) + τ(1)`: writing the sum as
//! `Σ τ(z_n) pⁿ`, the component `s_n` reduced mod p is supported on
//! `x^k` with `0 < k < pⁿ`, and `w(pⁿ,k)` is that coefficient. Collecting the
//! coefficients along `α = k/pⁿ` gives the truncated series
//! `w_p(α) = Σ w(pⁿ, α pⁿ) Tⁿ`, and the deformed addition of monomials is
//! `x +′ y = Σ_{α} w_p(α) x^α y^{1−α}`.

use crate::{Error, Result};
use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Polynomial in one variable `t` with arbitrary-precision integer
/// coefficients and exponents in `(1/p^denom_exp)·ℤ≥0`.
///
/// Exponents are stored as integer numerators over the fixed denominator
/// `p^denom_exp`; all arithmetic requires both operands to share `p` and
/// `denom_exp`. No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq)]
pub struct FracExpPoly {
    p: u64,
    denom_exp: u32,
    terms: BTreeMap<u64, BigInt>,
}

impl FracExpPoly {
    /// The zero polynomial.
    pub fn zero(p: u64, denom_exp: u32) -> Self {
        FracExpPoly { p, denom_exp, terms: BTreeMap::new() }
    }

    /// The monomial `c · t^(num / p^denom_exp)`.
    pub fn monomial(p: u64, denom_exp: u32, coeff: BigInt, num: u64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(num, coeff);
        }
        FracExpPoly { p, denom_exp, terms }
    }

    /// The constant polynomial `c`.
    pub fn constant(p: u64, denom_exp: u32, coeff: BigInt) -> Self {
        Self::monomial(p, denom_exp, coeff, 0)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn denom_exp(&self) -> u32 {
        self.denom_exp
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored monomials.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Whether the polynomial is a single monomial (or zero).
    pub fn is_monomial(&self) -> bool {
        self.terms.len() <= 1
    }

    /// Iterate `(exponent numerator, coefficient)` in ascending exponent
    /// order.
    pub fn iter(&self) -> impl Iterator<Item = (u64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Coefficient at exponent numerator `num` (zero when absent).
    pub fn coeff(&self, num: u64) -> BigInt {
        self.terms.get(&num).cloned().unwrap_or_else(BigInt::zero)
    }

    fn assert_compatible(&self, other: &Self) {
        debug_assert_eq!(self.p, other.p, "mixed primes");
        debug_assert_eq!(self.denom_exp, other.denom_exp, "mixed exponent denominators");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let mut terms = self.terms.clone();
        for (&e, c) in &other.terms {
            let entry = terms.entry(e).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(&e);
            }
        }
        FracExpPoly { p: self.p, denom_exp: self.denom_exp, terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let mut terms = self.terms.clone();
        for (&e, c) in &other.terms {
            let entry = terms.entry(e).or_insert_with(BigInt::zero);
            *entry -= c;
            if entry.is_zero() {
                terms.remove(&e);
            }
        }
        FracExpPoly { p: self.p, denom_exp: self.denom_exp, terms }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let mut terms: BTreeMap<u64, BigInt> = BTreeMap::new();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &other.terms {
                let e = e1.checked_add(e2).expect("exponent numerator overflow");
                let entry = terms.entry(e).or_insert_with(BigInt::zero);
                *entry += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        FracExpPoly { p: self.p, denom_exp: self.denom_exp, terms }
    }

    /// `self^k` by binary exponentiation.
    pub fn pow(&self, k: u64) -> Self {
        let mut acc = Self::constant(self.p, self.denom_exp, BigInt::one());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiply by the integer scalar `c`.
    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.p, self.denom_exp);
        }
        let terms = self.terms.iter().map(|(&e, v)| (e, v * c)).collect();
        FracExpPoly { p: self.p, denom_exp: self.denom_exp, terms }
    }

    /// Divide every coefficient exactly by `d`, or report the failure.
    pub fn div_coeffs_exact(&self, d: &BigInt) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (&e, c) in &self.terms {
            let (q, r) = num::Integer::div_rem(c, d);
            if !r.is_zero() {
                return Err(Error::Internal(format!(
                    "inexact division during unghost: coefficient {c} not divisible by {d}"
                )));
            }
            terms.insert(e, q);
        }
        Ok(FracExpPoly { p: self.p, denom_exp: self.denom_exp, terms })
    }

    /// Reduce all coefficients into `0..p`, dropping vanishing terms.
    pub fn mod_p(&self) -> Self {
        let p = BigInt::from(self.p);
        let mut terms = BTreeMap::new();
        for (&e, c) in &self.terms {
            let mut r = c % &p;
            if r.is_negative() {
                r += &p;
            }
            if !r.is_zero() {
                terms.insert(e, r);
            }
        }
        FracExpPoly { p: self.p, denom_exp: self.denom_exp, terms }
    }

    /// Divide every exponent exactly by `q` (a power of p), i.e. take the
    /// formal q-th root of a polynomial all of whose exponent numerators are
    /// multiples of `q`. In characteristic p this is the inverse Frobenius on
    /// mod-p-reduced polynomials.
    pub fn exponents_div_exact(&self, q: u64) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (&e, c) in &self.terms {
            if e % q != 0 {
                return Err(Error::Internal(format!(
                    "unexpected exponent support: numerator {e} not divisible by {q}"
                )));
            }
            terms.insert(e / q, c.clone());
        }
        Ok(FracExpPoly { p: self.p, denom_exp: self.denom_exp, terms })
    }
}

impl fmt::Debug for FracExpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let den = (self.p as u128).pow(self.denom_exp);
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if *e == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*t^({e}/{den})")?;
            }
        }
        Ok(())
    }
}

/// Truncated p-typical Witt vector with polynomial components
/// `(a_0, …, a_N)` over ℤ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WittVec {
    p: u64,
    components: Vec<FracExpPoly>,
}

impl WittVec {
    /// The zero vector of the given length.
    pub fn zero(p: u64, denom_exp: u32, length: usize) -> Self {
        WittVec { p, components: vec![FracExpPoly::zero(p, denom_exp); length] }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn length(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[FracExpPoly] {
        &self.components
    }

    /// Ghost components `gh_i = Σ_{j≤i} pʲ a_j^{p^{i−j}}`.
    pub fn ghost(&self) -> Vec<FracExpPoly> {
        let p = self.p;
        (0..self.components.len())
            .map(|i| {
                let mut g = FracExpPoly::zero(p, self.components[i].denom_exp());
                for (j, a) in self.components.iter().enumerate().take(i + 1) {
                    let pj = BigInt::from(p).pow(j as u32);
                    let q = p.pow((i - j) as u32);
                    g = g.add(&a.pow(q).scale(&pj));
                }
                g
            })
            .collect()
    }

    /// Recover Witt components from ghost components by successive exact
    /// division by p. Fails with an internal error if any division is
    /// inexact (the ghost data did not come from a Witt vector over ℤ).
    pub fn from_ghost(p: u64, ghost: &[FracExpPoly]) -> Result<Self> {
        assert!(!ghost.is_empty());
        let denom_exp = ghost[0].denom_exp();
        let mut components: Vec<FracExpPoly> = Vec::with_capacity(ghost.len());
        for n in 0..ghost.len() {
            // gh_n = Σ_{j<n} p^j a_j^{p^(n-j)} + p^n a_n
            let mut acc = FracExpPoly::zero(p, denom_exp);
            for (j, a) in components.iter().enumerate() {
                let pj = BigInt::from(p).pow(j as u32);
                acc = acc.add(&a.pow(p.pow((n - j) as u32)).scale(&pj));
            }
            let diff = ghost[n].sub(&acc);
            let pn = BigInt::from(p).pow(n as u32);
            components.push(diff.div_coeffs_exact(&pn)?);
        }
        Ok(WittVec { p, components })
    }

    /// Witt-vector addition via ghost components.
    pub fn add(&self, other: &Self) -> Result<Self> {
        assert_eq!(self.p, other.p, "mixed primes");
        assert_eq!(self.length(), other.length(), "mixed lengths");
        let ga = self.ghost();
        let gb = other.ghost();
        let sum: Vec<FracExpPoly> =
            ga.iter().zip(&gb).map(|(a, b)| a.add(b)).collect();
        Self::from_ghost(self.p, &sum)
    }

    /// Components reduced mod p.
    pub fn mod_p(&self) -> Vec<FracExpPoly> {
        self.components.iter().map(FracExpPoly::mod_p).collect()
    }
}

/// Teichmüller representative `(m, 0, …, 0)` of a monomial.
///
/// Errors if the input is not a single monomial — the multiplicative section
/// is only defined there.
pub fn teichmuller(m: &FracExpPoly, length: usize) -> Result<WittVec> {
    if !m.is_monomial() {
        return Err(Error::Domain(
            "teichmuller lift requires a monomial input".into(),
        ));
    }
    let mut components = vec![FracExpPoly::zero(m.p(), m.denom_exp()); length];
    components[0] = m.clone();
    Ok(WittVec { p: m.p(), components })
}

/// The table of universal addition coefficients `w(pⁿ,k) ∈ 𝔽_p` for
/// `1 ≤ n ≤ N`, `0 < k < pⁿ`, together with the convention
/// `w_p(0) = w_p(1) = 1` at order T⁰.
#[derive(Clone, Debug)]
pub struct WCoeffTable {
    p: u64,
    n_max: u32,
    /// entries[n-1][k] = w(pⁿ,k), dense over 0..pⁿ (index 0 and pⁿ unused).
    entries: Vec<Vec<u64>>,
}

/// Compute the coefficient table from `τ(x) + τ(1)` in `W(ℤ[x])` of length
/// `N+1`.
///
/// The component `s_0` must equal `x + 1`, and each `s_n mod p` must be
/// supported on `{x^k : 0 < k < pⁿ}`; violations are internal errors.
/// Supported inputs: `p ∈ {2,3,5,7}`, `N ≤ 3` (the polynomial degree grows
/// like pᴺ).
pub fn witt_coeffs(p: u64, n_max: u32) -> Result<WCoeffTable> {
    if ![2, 3, 5, 7].contains(&p) {
        return Err(Error::Domain(format!("unsupported prime {p} (need 2, 3, 5, or 7)")));
    }
    if n_max > 3 {
        return Err(Error::Domain(format!("truncation order {n_max} too large (need N ≤ 3)")));
    }
    let x = FracExpPoly::monomial(p, 0, BigInt::one(), 1);
    let one = FracExpPoly::constant(p, 0, BigInt::one());
    let len = n_max as usize + 1;
    let sum = teichmuller(&x, len)?.add(&teichmuller(&one, len)?)?;

    let s0_expected = x.add(&one);
    if sum.components()[0] != s0_expected {
        return Err(Error::Internal("leading Witt component is not x + 1".into()));
    }

    let mut entries: Vec<Vec<u64>> = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let pn = p.pow(n);
        let sn = sum.components()[n as usize].mod_p();
        let mut row = vec![0u64; pn as usize + 1];
        for (k, c) in sn.iter() {
            if k == 0 || k >= pn {
                return Err(Error::Internal(format!(
                    "unexpected exponent support: x^{k} in component {n} (expected 0 < k < {pn})"
                )));
            }
            let c: u64 = c.try_into().expect("mod-p coefficient fits u64");
            row[k as usize] = c;
        }
        entries.push(row);
    }
    Ok(WCoeffTable { p, n_max, entries })
}

impl WCoeffTable {
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Truncation order: series are computed mod T^(N+1).
    pub fn n_max(&self) -> u32 {
        self.n_max
    }

    /// The coefficient `w(pⁿ,k)`, for `1 ≤ n ≤ N`, `0 < k < pⁿ`.
    pub fn w(&self, n: u32, k: u64) -> u64 {
        assert!(n >= 1 && n <= self.n_max && k > 0 && k < self.p.pow(n));
        self.entries[n as usize - 1][k as usize]
    }

    /// `w_p(α)` as a truncated series over 𝔽_p: index m of the result is the
    /// coefficient of Tᵐ.
    ///
    /// `α = a/pⁿ` must lie in `[0,1]` with denominator dividing `p^N`;
    /// endpoints return the convention value 1 (order T⁰).
    pub fn wp_map(&self, alpha_num: u64, alpha_den: u64) -> Result<Vec<u64>> {
        let (num, den) = reduce_fraction(alpha_num, alpha_den)?;
        if num > den {
            return Err(Error::Domain(format!(
                "alpha = {alpha_num}/{alpha_den} lies outside [0,1]"
            )));
        }
        let mut series = vec![0u64; self.n_max as usize + 1];
        if num == 0 || num == den {
            series[0] = 1;
            return Ok(series);
        }
        if !is_pow_of(den, self.p) || den > self.p.pow(self.n_max) {
            return Err(Error::Domain(format!(
                "alpha = {alpha_num}/{alpha_den} has denominator not of the form {}^n with n ≤ {}",
                self.p, self.n_max
            )));
        }
        for m in 1..=self.n_max {
            let pm = self.p.pow(m);
            if pm % den == 0 {
                let k = num * (pm / den);
                series[m as usize] = self.w(m, k);
            }
        }
        Ok(series)
    }

    /// All table rows `(alpha_num, alpha_den, series)` for `α = a/p^N`,
    /// `a = 1..=p^N`, with fractions reduced — the full table of `w_p` on
    /// `I_p ∩ (0,1]` at denominator `p^N`.
    pub fn rows(&self) -> Vec<(u64, u64, Vec<u64>)> {
        let pn = self.p.pow(self.n_max);
        (1..=pn)
            .map(|a| {
                let (num, den) = reduce_fraction(a, pn).expect("valid fraction");
                let series = self.wp_map(num, den).expect("in-range alpha");
                (num, den, series)
            })
            .collect()
    }
}

/// Reduce `num/den` to lowest terms; rejects a zero denominator.
fn reduce_fraction(num: u64, den: u64) -> Result<(u64, u64)> {
    if den == 0 {
        return Err(Error::Domain("zero denominator".into()));
    }
    let g = num::integer::gcd(num, den);
    if g == 0 {
        return Ok((0, 1));
    }
    Ok((num / g, den / g))
}

fn is_pow_of(mut n: u64, p: u64) -> bool {
    if n == 0 {
        return false;
    }
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Render a truncated 𝔽_p[T]-series as in the reference table: `0`, `1`,
/// `4T`, `T^3`, `3T^2+2T^3`, … (unit coefficients suppressed, `T^1` written
/// `T`).
pub fn series_string(series: &[u64]) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (m, &c) in series.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let part = match (m, c) {
            (0, c) => format!("{c}"),
            (1, 1) => "T".to_string(),
            (1, c) => format!("{c}T"),
            (m, 1) => format!("T^{m}"),
            (m, c) => format!("{c}T^{m}"),
        };
        parts.push(part);
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join("+")
    }
}

/// A monomial exponent `num / p^den_exp` for the deformed addition.
///
/// `from_fraction` validates that the denominator is a power of p no larger
/// than `p^N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonomialExp {
    pub num: u64,
    pub den_exp: u32,
}

impl MonomialExp {
    pub fn from_fraction(num: u64, den: u64, p: u64, n_max: u32) -> Result<Self> {
        let (num, den) = reduce_fraction(num, den)?;
        let mut d = den;
        let mut den_exp = 0u32;
        while d % p == 0 {
            d /= p;
            den_exp += 1;
        }
        if d != 1 || den_exp > n_max {
            return Err(Error::Domain(format!(
                "exponent {num}/{den} does not have denominator {p}^n with n ≤ {n_max}"
            )));
        }
        Ok(MonomialExp { num, den_exp })
    }

    /// Numerator over the fixed denominator `p^scale_exp`.
    fn scaled(&self, p: u64, scale_exp: u32) -> u64 {
        debug_assert!(scale_exp >= self.den_exp);
        self.num * p.pow(scale_exp - self.den_exp)
    }
}

/// `t^{xe} +′ t^{ye}` via the universal coefficients:
/// `Σ_{α∈I_p} w_p(α) x^α y^{1−α}`, truncated at T^N.
///
/// The result is indexed by the power of T; coefficients are mod-p-reduced
/// polynomials over the fixed exponent denominator `p^{2N}` (matching the
/// τ-adic oracle, whose n-th coordinate divides exponents by pⁿ).
pub fn deformed_add(
    xe: MonomialExp,
    ye: MonomialExp,
    table: &WCoeffTable,
) -> Result<Vec<FracExpPoly>> {
    let p = table.p;
    let n_max = table.n_max;
    let scale = 2 * n_max;
    let xs = xe.scaled(p, scale);
    let ys = ye.scaled(p, scale);
    let mut out = vec![FracExpPoly::zero(p, scale); n_max as usize + 1];

    // α = 1 and α = 0 contribute x and y at order T⁰.
    out[0] = out[0].add(&FracExpPoly::monomial(p, scale, BigInt::one(), xs));
    out[0] = out[0].add(&FracExpPoly::monomial(p, scale, BigInt::one(), ys));

    for n in 1..=n_max {
        let pn = p.pow(n);
        for k in 1..pn {
            let w = table.w(n, k);
            if w == 0 {
                continue;
            }
            // exponent α·xe + (1−α)·ye with α = k/pⁿ, over denominator p^{2N}:
            // (k·xs + (pⁿ−k)·ys) / pⁿ — exact because xs, ys carry p-adic
            // valuation ≥ N ≥ n.
            let raw = (k as u128) * (xs as u128) + ((pn - k) as u128) * (ys as u128);
            debug_assert_eq!(raw % pn as u128, 0);
            let e = (raw / pn as u128) as u64;
            let term = FracExpPoly::monomial(p, scale, BigInt::from(w), e);
            out[n as usize] = out[n as usize].add(&term);
        }
    }
    Ok(out.iter().map(FracExpPoly::mod_p).collect())
}

/// Independent oracle for [`deformed_add`]: compute `τ(x) + τ(y)` by ghost
/// components in `W(ℤ[t^{1/p^{2N}}])`, reduce each Witt coordinate `a_n`
/// mod p, and take its pⁿ-th root (divide exponents by pⁿ) to obtain the
/// τ-adic coefficient of pⁿ.
pub fn deformed_add_oracle(
    xe: MonomialExp,
    ye: MonomialExp,
    p: u64,
    n_max: u32,
) -> Result<Vec<FracExpPoly>> {
    let scale = 2 * n_max;
    let x = FracExpPoly::monomial(p, scale, BigInt::one(), xe.scaled(p, scale));
    let y = FracExpPoly::monomial(p, scale, BigInt::one(), ye.scaled(p, scale));
    let len = n_max as usize + 1;
    let sum = teichmuller(&x, len)?.add(&teichmuller(&y, len)?)?;
    sum.mod_p()
        .iter()
        .enumerate()
        .map(|(n, a)| a.exponents_div_exact(p.pow(n as u32)))
        .collect()
}
