//! Finite pointed commutative monoids, their prime spectra, localizations,
//! and the hom- and point-counting formulas they feed.
//!
//! A pointed monoid here is a finite commutative monoid with an absorbing
//! element 0 and identity 1, given by an explicit multiplication table. A
//! prime ideal is a proper ideal whose complement is multiplicatively
//! closed; the non-invertible elements always form the maximal prime. The
//! spectrum is in bijection with pointed monoid maps to 𝔽₁ = {0, 1}.
//!
//! Point counts over degree-n extensions use
//! `#Hom(ℤ/mℤ, ℤ/nℤ) = gcd(n, m)` and, for a scheme described by its
//! points' stalk data, `#X(𝔽₁ⁿ) = Σ_x n^{n(x)} Π_j gcd(n, m_j(x))`.

use crate::arith;
use crate::{Error, Result};
use num::complex::Complex64;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Finite pointed commutative monoid presented by a multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedMonoid {
    table: Vec<Vec<usize>>,
    zero: usize,
    one: usize,
}

impl PointedMonoid {
    /// Validate and wrap a multiplication table: must be square,
    /// commutative, associative, with `zero` absorbing and `one` neutral.
    pub fn new(table: Vec<Vec<usize>>, zero: usize, one: usize) -> Result<Self> {
        let n = table.len();
        if table.iter().any(|r| r.len() != n) || table.iter().flatten().any(|&v| v >= n) {
            return Err(Error::Domain("multiplication table is not square over its carrier".into()));
        }
        if zero >= n || one >= n {
            return Err(Error::Domain("distinguished elements out of range".into()));
        }
        let m = PointedMonoid { table, zero, one };
        for a in 0..n {
            if m.mul(m.zero, a) != m.zero {
                return Err(Error::Domain("zero is not absorbing".into()));
            }
            if m.mul(m.one, a) != a {
                return Err(Error::Domain("one is not neutral".into()));
            }
            for b in 0..n {
                if m.mul(a, b) != m.mul(b, a) {
                    return Err(Error::Domain("multiplication is not commutative".into()));
                }
                for c in 0..n {
                    if m.mul(m.mul(a, b), c) != m.mul(a, m.mul(b, c)) {
                        return Err(Error::Domain("multiplication is not associative".into()));
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn pow(&self, a: usize, k: u32) -> usize {
        let mut acc = self.one;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn is_unit(&self, a: usize) -> bool {
        (0..self.size()).any(|b| self.mul(a, b) == self.one)
    }

    pub fn units(&self) -> Vec<usize> {
        (0..self.size()).filter(|&a| self.is_unit(a)).collect()
    }

    /// The maximal prime 𝔭_M: the complement of the invertible elements.
    pub fn maximal_prime(&self) -> BTreeSet<usize> {
        (0..self.size()).filter(|&a| !self.is_unit(a)).collect()
    }

    /// `𝔽₁ = {0, 1}` (index 0 is 1, index 1 is 0).
    pub fn f1() -> Self {
        Self::group_monoid_cyclic(1)
    }

    /// `𝔽₁[ℤ/nℤ] = (ℤ/nℤ) ∪ {0}`: index i < n is the group element gⁱ,
    /// index n is the zero.
    pub fn group_monoid_cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let z = n;
        let table = (0..=n)
            .map(|a| {
                (0..=n)
                    .map(|b| if a == z || b == z { z } else { (a + b) % n })
                    .collect()
            })
            .collect();
        PointedMonoid { table, zero: z, one: 0 }
    }

    /// `{1, t, …, t^(k−1), 0}` with `t^k = 0`: index i < k is tⁱ, index k
    /// is the zero.
    pub fn free_nilpotent(k: usize) -> Self {
        assert!(k >= 1);
        let z = k;
        let table = (0..=k)
            .map(|a| {
                (0..=k)
                    .map(|b| if a == z || b == z || a + b >= k { z } else { a + b })
                    .collect()
            })
            .collect();
        PointedMonoid { table, zero: z, one: 0 }
    }

    /// `{1, t, …, t^(k−1), 0}` with the idempotent tail `t^k = t^(k−1)`
    /// (so t is not nilpotent): index i < k is tⁱ, index k is the zero.
    pub fn free_idempotent_tail(k: usize) -> Self {
        assert!(k >= 1);
        let z = k;
        let table = (0..=k)
            .map(|a| {
                (0..=k)
                    .map(|b| if a == z || b == z { z } else { (a + b).min(k - 1) })
                    .collect()
            })
            .collect();
        PointedMonoid { table, zero: z, one: 0 }
    }

    /// Smash product: carrier `{0} ∪ (A∖0)×(B∖0)`, all mixed products with
    /// zero collapsed to zero.
    pub fn smash(a: &PointedMonoid, b: &PointedMonoid) -> Self {
        let av: Vec<usize> = (0..a.size()).filter(|&x| x != a.zero).collect();
        let bv: Vec<usize> = (0..b.size()).filter(|&x| x != b.zero).collect();
        // index 0 is the zero; pair (i,j) sits at 1 + i*|bv| + j.
        let idx = |x: usize, y: usize| -> usize {
            let i = av.iter().position(|&v| v == x).unwrap();
            let j = bv.iter().position(|&v| v == y).unwrap();
            1 + i * bv.len() + j
        };
        let n = 1 + av.len() * bv.len();
        let mut table = vec![vec![0usize; n]; n];
        for (i, &x) in av.iter().enumerate() {
            for (j, &y) in bv.iter().enumerate() {
                let p = 1 + i * bv.len() + j;
                for (i2, &x2) in av.iter().enumerate() {
                    for (j2, &y2) in bv.iter().enumerate() {
                        let q = 1 + i2 * bv.len() + j2;
                        let (px, py) = (a.mul(x, x2), b.mul(y, y2));
                        table[p][q] = if px == a.zero || py == b.zero {
                            0
                        } else {
                            idx(px, py)
                        };
                    }
                }
            }
        }
        PointedMonoid { table, zero: 0, one: idx(a.one, b.one) }
    }
}

/// All prime ideals of `M`: proper ideals whose complement is closed under
/// multiplication. Exhaustive over subsets (the carrier is small), pruned by
/// the absorbing property; sorted by size then lexicographically, a linear
/// extension of inclusion. The maximal prime 𝔭_M is always present.
pub fn prime_ideals(m: &PointedMonoid) -> Vec<BTreeSet<usize>> {
    let n = m.size();
    assert!(n <= 24, "exhaustive prime search is for small carriers");
    let others: Vec<usize> =
        (0..n).filter(|&x| x != m.zero() && x != m.one()).collect();
    let mut out: Vec<BTreeSet<usize>> = Vec::new();
    for mask in 0u64..(1 << others.len()) {
        let mut ideal: BTreeSet<usize> = BTreeSet::new();
        ideal.insert(m.zero());
        for (bit, &x) in others.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                ideal.insert(x);
            }
        }
        // Ideal: I·M ⊆ I. (1 ∉ I by construction, so it is proper.)
        let absorbing = ideal
            .iter()
            .all(|&x| (0..n).all(|y| ideal.contains(&m.mul(x, y))));
        if !absorbing {
            continue;
        }
        // Prime: complement multiplicatively closed.
        let complement: Vec<usize> = (0..n).filter(|x| !ideal.contains(x)).collect();
        let closed = complement
            .iter()
            .all(|&a| complement.iter().all(|&b| !ideal.contains(&m.mul(a, b))));
        if closed {
            out.push(ideal);
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    debug_assert!(out.contains(&m.maximal_prime()));
    out
}

/// All ideals of `M` (proper or not), exhaustively.
pub fn ideals(m: &PointedMonoid) -> Vec<BTreeSet<usize>> {
    let n = m.size();
    assert!(n <= 16, "exhaustive ideal enumeration is for small carriers");
    let others: Vec<usize> = (0..n).filter(|&x| x != m.zero()).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << others.len()) {
        let mut ideal: BTreeSet<usize> = BTreeSet::new();
        ideal.insert(m.zero());
        for (bit, &x) in others.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                ideal.insert(x);
            }
        }
        let absorbing = ideal
            .iter()
            .all(|&x| (0..n).all(|y| ideal.contains(&m.mul(x, y))));
        if absorbing {
            out.push(ideal);
        }
    }
    out
}

/// The radical `√I = {x : x^k ∈ I for some k ≥ 1}`.
pub fn radical(m: &PointedMonoid, ideal: &BTreeSet<usize>) -> BTreeSet<usize> {
    (0..m.size())
        .filter(|&x| {
            let mut pow = x;
            for _ in 0..m.size() + 1 {
                if ideal.contains(&pow) {
                    return true;
                }
                pow = m.mul(pow, x);
            }
            false
        })
        .collect()
}

/// Localization `M_f`: the quotient of `M × {fⁿ}` by the congruence
/// `(m,s) ~ (m',s') ⇔ ∃u ∈ S: u·m·s' = u·m'·s`, computed by closure to a
/// fixpoint. If `f` is invertible this is isomorphic to `M`; if `f` is
/// nilpotent the result collapses to the trivial monoid `{0 = 1}`.
pub fn localize(m: &PointedMonoid, f: usize) -> Result<PointedMonoid> {
    localize_with_map(m, f).map(|(loc, _)| loc)
}

/// Like [`localize`], also returning the canonical map `M → M_f`,
/// `a ↦ [(a, 1)]`, as a vector indexed by elements of `M`.
pub fn localize_with_map(m: &PointedMonoid, f: usize) -> Result<(PointedMonoid, Vec<usize>)> {
    if f >= m.size() {
        return Err(Error::Domain(format!("element {f} out of range")));
    }
    // S = {1, f, f², …} inside M (finite, eventually periodic).
    let mut s_set: Vec<usize> = vec![m.one()];
    let mut cur = f;
    while !s_set.contains(&cur) {
        s_set.push(cur);
        cur = m.mul(cur, f);
    }
    let pairs: Vec<(usize, usize)> = (0..m.size())
        .flat_map(|a| s_set.iter().map(move |&s| (a, s)))
        .collect();
    let index_of = |p: (usize, usize)| pairs.iter().position(|&q| q == p).unwrap();

    // Union-find over pairs; the ∃u relation is an equivalence on a finite
    // commutative carrier, but we still iterate to a fixpoint as a guard.
    let mut parent: Vec<usize> = (0..pairs.len()).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..pairs.len() {
            for j in i + 1..pairs.len() {
                let (a, s) = pairs[i];
                let (b, t) = pairs[j];
                let related = s_set
                    .iter()
                    .any(|&u| m.mul(u, m.mul(a, t)) == m.mul(u, m.mul(b, s)));
                if related {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    if ri != rj {
                        parent[ri] = rj;
                        changed = true;
                    }
                }
            }
        }
    }

    // Canonical class numbering in first-appearance order.
    let mut class_of = vec![usize::MAX; pairs.len()];
    let mut reps: Vec<usize> = Vec::new();
    for i in 0..pairs.len() {
        let r = find(&mut parent, i);
        if let Some(pos) = reps.iter().position(|&x| x == r) {
            class_of[i] = pos;
        } else {
            class_of[i] = reps.len();
            reps.push(r);
        }
    }
    let k = reps.len();
    let mut table = vec![vec![usize::MAX; k]; k];
    for i in 0..pairs.len() {
        for j in 0..pairs.len() {
            let (a, s) = pairs[i];
            let (b, t) = pairs[j];
            let prod = index_of((m.mul(a, b), m.mul(s, t)));
            let (ci, cj, cp) = (class_of[i], class_of[j], class_of[prod]);
            if table[ci][cj] == usize::MAX {
                table[ci][cj] = cp;
            } else if table[ci][cj] != cp {
                return Err(Error::Internal(
                    "localization congruence is not compatible with multiplication".into(),
                ));
            }
        }
    }
    let zero = class_of[index_of((m.zero(), m.one()))];
    let one = class_of[index_of((m.one(), m.one()))];
    let loc = PointedMonoid::new(table, zero, one)
        .map_err(|e| Error::Internal(format!("localization produced an invalid monoid: {e}")))?;
    let canonical: Vec<usize> =
        (0..m.size()).map(|a| class_of[index_of((a, m.one()))]).collect();
    Ok((loc, canonical))
}

/// `#Hom(ℤ/mℤ, ℤ/nℤ) = gcd(n, m)`.
pub fn hom_count_cyclic(m: u64, n: u64) -> u64 {
    assert!(m >= 1 && n >= 1);
    arith::gcd(n, m)
}

/// Brute-force hom count: images x of the generator with m·x ≡ 0 (mod n).
pub fn hom_count_cyclic_bruteforce(m: u64, n: u64) -> u64 {
    assert!(m >= 1 && n >= 1);
    (0..n).filter(|x| (m * x) % n == 0).count() as u64
}

/// `gcd(n, m)` through the Fourier / Ramanujan-style expansion
/// `Σ_{d|m} (φ(d)/d) Σ_{k mod d} e^{2πi n k / d}`, evaluated in complex
/// floating point. The imaginary part must vanish to rounding; callers
/// round the real part to recover the exact integer.
pub fn gcd_fourier(n: u64, m: u64) -> Complex64 {
    assert!(m >= 1 && n >= 1);
    let mut acc = Complex64::new(0.0, 0.0);
    for d in arith::divisors(m) {
        let phi = arith::euler_phi(d) as f64;
        let mut inner = Complex64::new(0.0, 0.0);
        for k in 0..d {
            let theta = 2.0 * std::f64::consts::PI * (n as f64) * (k as f64) / (d as f64);
            inner += Complex64::new(theta.cos(), theta.sin());
        }
        acc += inner * (phi / d as f64);
    }
    acc
}

/// One point of a scheme: the rank `n(x)` of the free part and the invariant
/// factors `m_j(x)` of the torsion part of the stalk's unit group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemePoint {
    pub rank: u32,
    pub torsion: Vec<u64>,
}

/// A scheme abstracted as the list of its points' stalk data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeData {
    pub points: Vec<SchemePoint>,
}

impl SchemeData {
    /// Validate invariant-factor form: factors ≥ 1, each dividing the next.
    pub fn validate(&self) -> Result<()> {
        for (i, p) in self.points.iter().enumerate() {
            for w in p.torsion.windows(2) {
                if w[1] % w[0] != 0 {
                    return Err(Error::Domain(format!(
                        "point {i}: torsion {:?} is not in invariant-factor form",
                        p.torsion
                    )));
                }
            }
            if p.torsion.iter().any(|&m| m == 0) {
                return Err(Error::Domain(format!("point {i}: zero torsion factor")));
            }
        }
        Ok(())
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let data: SchemeData = serde_json::from_str(s)
            .map_err(|e| Error::Domain(format!("bad scheme JSON: {e}")))?;
        data.validate()?;
        Ok(data)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("scheme data serializes")
    }

    /// ℙ¹: two rank-0 points and one rank-1 point, all torsion-free.
    pub fn p1() -> Self {
        SchemeData {
            points: vec![
                SchemePoint { rank: 0, torsion: vec![] },
                SchemePoint { rank: 0, torsion: vec![] },
                SchemePoint { rank: 1, torsion: vec![] },
            ],
        }
    }

    /// `Spec 𝔽₁ᵐ`: one rank-0 point with torsion ℤ/mℤ.
    pub fn spec_f1m(m: u64) -> Self {
        SchemeData { points: vec![SchemePoint { rank: 0, torsion: vec![m] }] }
    }

    /// `#X(𝔽₁ⁿ) = Σ_x n^{n(x)} Π_j gcd(n, m_j(x))`, exactly.
    pub fn count_points_f1n(&self, n: u64) -> Result<u128> {
        if n < 1 {
            return Err(Error::Domain("extension degree must be ≥ 1".into()));
        }
        self.validate()?;
        let mut total: u128 = 0;
        for p in &self.points {
            let mut term: u128 = (n as u128)
                .checked_pow(p.rank)
                .ok_or_else(|| Error::Domain("point count overflows u128".into()))?;
            for &m in &p.torsion {
                term = term
                    .checked_mul(arith::gcd(n, m) as u128)
                    .ok_or_else(|| Error::Domain("point count overflows u128".into()))?;
            }
            total = total
                .checked_add(term)
                .ok_or_else(|| Error::Domain("point count overflows u128".into()))?;
        }
        Ok(total)
    }
}

/// The bijection between `Spec(M)` and pointed monoid maps `M → 𝔽₁`: each
/// prime 𝔭 yields `φ_𝔭` (0 on 𝔭, 1 off 𝔭). Each map is verified to be
/// multiplicative and unital, and its kernel is verified to recover 𝔭; a
/// failure is an internal error (it would signal a bug in the prime search).
pub fn spec_as_homs_to_f1(m: &PointedMonoid) -> Result<Vec<(BTreeSet<usize>, Vec<u8>)>> {
    let primes = prime_ideals(m);
    let mut out = Vec::with_capacity(primes.len());
    for p in primes {
        let phi: Vec<u8> = (0..m.size()).map(|x| u8::from(!p.contains(&x))).collect();
        if phi[m.zero()] != 0 || phi[m.one()] != 1 {
            return Err(Error::Internal("φ_𝔭 is not pointed/unital".into()));
        }
        for a in 0..m.size() {
            for b in 0..m.size() {
                if phi[m.mul(a, b)] != phi[a] * phi[b] {
                    return Err(Error::Internal(format!(
                        "φ_𝔭 fails multiplicativity at ({a},{b}) for 𝔭 = {p:?}"
                    )));
                }
            }
        }
        let kernel: BTreeSet<usize> =
            (0..m.size()).filter(|&x| phi[x] == 0).collect();
        if kernel != p {
            return Err(Error::Internal("kernel of φ_𝔭 does not recover 𝔭".into()));
        }
        out.push((p, phi));
    }
    Ok(out)
}

/// Check the basis-open cover property of `Spec(M)`: whenever opens
/// `D(f) = {𝔭 : f ∉ 𝔭}` cover the spectrum, one of them is already the
/// whole spectrum (equivalently, one of the f's is a unit). Exhaustive over
/// all families of basis opens; intended for `|M| ≤ 6`.
pub fn check_cover_lemma(m: &PointedMonoid) -> Result<()> {
    let primes = prime_ideals(m);
    let elems: Vec<usize> = (0..m.size()).collect();
    let opens: Vec<(usize, BTreeSet<usize>)> = elems
        .iter()
        .map(|&f| {
            let d: BTreeSet<usize> = primes
                .iter()
                .enumerate()
                .filter(|(_, p)| !p.contains(&f))
                .map(|(i, _)| i)
                .collect();
            (f, d)
        })
        .collect();
    let all: BTreeSet<usize> = (0..primes.len()).collect();
    let n = opens.len();
    assert!(n <= 20, "cover enumeration is exponential in |M|");
    for mask in 1u64..(1 << n) {
        let mut union: BTreeSet<usize> = BTreeSet::new();
        let mut members: Vec<usize> = Vec::new();
        for (bit, (f, d)) in opens.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                union.extend(d.iter().copied());
                members.push(*f);
            }
        }
        if union == all {
            let has_full = members.iter().any(|&f| {
                let covers_all = opens[elems.iter().position(|&e| e == f).unwrap()].1 == all;
                debug_assert_eq!(covers_all, m.is_unit(f) || primes.is_empty());
                covers_all
            });
            if !has_full {
                return Err(Error::Internal(format!(
                    "cover {members:?} of Spec has no member equal to the whole spectrum"
                )));
            }
        }
    }
    Ok(())
}
