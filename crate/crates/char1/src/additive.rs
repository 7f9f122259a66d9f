//! Additive structures on `K = H ∪ {0}` for a finite cyclic group `H`.
//!
//! A symmetry map is `s : K → K` with `s(0) = 1` commuting with every
//! multiplicative conjugate of itself:
//! `s(x·s(y·x⁻¹)) = x·s(s(y)·x⁻¹)` for all units `x` and all `y`. Each
//! such map induces an addition `x + y = x·s(y·x⁻¹)` (and `0 + y = y`)
//! which, when `s` is bijective and `|H| = p^ℓ − 1`, turns `K` into the
//! field with `p^ℓ` elements; when `s` is an idempotent retraction the same
//! law yields an additively idempotent semifield (on `ℝ₊` with
//! `s = max(·, 1)` it is exactly `max`).
//!
//! The number of symmetry maps on `ℤ/nℤ ∪ {0}` is `φ(p^ℓ − 1)/ℓ` when
//! `n + 1 = p^ℓ` is a prime power (with the single exception `n = 1`,
//! where the idempotent retraction joins the count, giving 2), and 0
//! otherwise. The constructive search realizes every map by transporting
//! `x ↦ x + 1` from `𝔽_{p^ℓ}` through a discrete logarithm at a primitive
//! element; Frobenius-conjugate generators yield the same map.

use crate::arith;
use crate::{Error, Result};

/// Multiplication on `K = ℤ/nℤ ∪ {0}`: index 0 is the absorbing zero,
/// index k ∈ 1..=n is the group element g^(k−1).
pub fn kmul(n: usize, a: usize, b: usize) -> usize {
    if a == 0 || b == 0 {
        0
    } else {
        1 + ((a - 1) + (b - 1)) % n
    }
}

/// Multiplicative inverse of a unit index (a ≠ 0).
pub fn kinv(n: usize, a: usize) -> usize {
    debug_assert!(a != 0);
    1 + (n - (a - 1)) % n
}

/// A symmetry map on `ℤ/nℤ ∪ {0}`, normalized by `s(0) = 1`, commuting
/// with all its multiplicative conjugates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SymmetryMap {
    n: usize,
    s: Vec<usize>,
}

impl SymmetryMap {
    /// Validate and wrap: length n+1, values in range, `s(0) = 1`, and the
    /// commutation identity for every unit x and every y.
    pub fn new(n: usize, s: Vec<usize>) -> Result<Self> {
        if n < 1 || s.len() != n + 1 {
            return Err(Error::Domain(format!(
                "symmetry map on order-{n} group needs {} values, got {}",
                n + 1,
                s.len()
            )));
        }
        if s.iter().any(|&v| v > n) {
            return Err(Error::Domain("symmetry map value out of range".into()));
        }
        if s[0] != 1 {
            return Err(Error::Domain("symmetry map must send 0 to 1".into()));
        }
        let m = SymmetryMap { n, s };
        m.validate()?;
        Ok(m)
    }

    fn from_parts_unchecked(n: usize, s: Vec<usize>) -> Self {
        let m = SymmetryMap { n, s };
        // Constructions backed by the transport theorem skip the O(n²)
        // check in release; keep it as a debug guard on small carriers.
        debug_assert!(n > 512 || m.validate().is_ok());
        m
    }

    /// Re-check the commutation identity on the full carrier, reporting a
    /// witness pair on failure.
    pub fn validate(&self) -> Result<()> {
        let (n, s) = (self.n, &self.s);
        for x in 1..=n {
            let xi = kinv(n, x);
            for y in 0..=n {
                let lhs = s[kmul(n, x, s[kmul(n, y, xi)])];
                let rhs = kmul(n, x, s[kmul(n, s[y], xi)]);
                if lhs != rhs {
                    return Err(Error::Domain(format!(
                        "commutation fails at witness (x = {x}, y = {y}): \
                         s(x·s(y·x⁻¹)) = {lhs} but x·s(s(y)·x⁻¹) = {rhs}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn map(&self) -> &[usize] {
        &self.s
    }

    pub fn apply(&self, x: usize) -> usize {
        self.s[x]
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.n + 1];
        self.s.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn is_involution(&self) -> bool {
        (0..=self.n).all(|x| self.s[self.s[x]] == x)
    }

    /// `s ∘ s = s` (idempotent retraction; the characteristic-one case).
    pub fn is_retraction(&self) -> bool {
        (0..=self.n).all(|x| self.s[self.s[x]] == self.s[x])
    }

    /// Directed edge list `(x, s(x))` for graph export.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..=self.n).map(|x| (x, self.s[x])).collect()
    }
}

/// Search mode for [`search_a`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// Exhaustive over all maps with `s(0) = 1`, with constraint
    /// propagation; capped at n ≤ 10.
    Brute,
    /// Transport of `x ↦ x + 1` from `𝔽_{n+1}` at every primitive element;
    /// empty when n+1 is not a prime power.
    Constructive,
}

/// All symmetry maps on `ℤ/nℤ ∪ {0}`, sorted by their value vectors.
pub fn search_a(n: usize, mode: SearchMode) -> Result<Vec<SymmetryMap>> {
    match mode {
        SearchMode::Brute => search_brute(n),
        SearchMode::Constructive => search_constructive(n),
    }
}

/// The closed-form count: 2 for n = 1; `φ(p^ℓ − 1)/ℓ` when n+1 = p^ℓ;
/// 0 when n+1 is not a prime power.
pub fn count_formula(n: usize) -> u64 {
    if n == 1 {
        return 2;
    }
    match prime_power(n as u64 + 1) {
        Some((_, l)) => {
            let phi = arith::euler_phi(n as u64);
            debug_assert_eq!(phi % l as u64, 0, "Frobenius orbits have full length");
            phi / l as u64
        }
        None => 0,
    }
}

fn prime_power(m: u64) -> Option<(u64, u32)> {
    let f = arith::factor(m);
    if f.len() == 1 {
        Some(f[0])
    } else {
        None
    }
}

fn search_brute(n: usize) -> Result<Vec<SymmetryMap>> {
    if n < 1 {
        return Err(Error::Domain("group order must be ≥ 1".into()));
    }
    if n > 10 {
        return Err(Error::Domain(format!(
            "brute search is capped at n ≤ 10 (search space (n+1)ⁿ); got n = {n}"
        )));
    }
    let mut s: Vec<Option<usize>> = vec![None; n + 1];
    s[0] = Some(1);
    let mut found: Vec<SymmetryMap> = Vec::new();
    dfs(n, &mut s, &mut found);
    found.sort();
    for m in &found {
        // Bijectivity is a theorem, not an assumption; the n = 1 retraction
        // is the single exception.
        assert!(m.is_bijective() || n == 1, "non-bijective map survived the search");
    }
    Ok(found)
}

/// Evaluate both sides of the commutation identity on a partial map;
/// `None` means some needed value is still unassigned.
fn instance_sides(
    n: usize,
    s: &[Option<usize>],
    x: usize,
    y: usize,
) -> (Option<usize>, Option<usize>) {
    let xi = kinv(n, x);
    let lhs = s[kmul(n, y, xi)].and_then(|inner| s[kmul(n, x, inner)]);
    let rhs = s[y].and_then(|sy| s[kmul(n, sy, xi)].map(|v| kmul(n, x, v)));
    (lhs, rhs)
}

/// Check every fully determined commutation instance; propagate the y = 0
/// specialization `s(x) = x·s(x⁻¹)` as forced values. Returns the list of
/// positions this call assigned (for backtracking), or None on
/// contradiction.
fn propagate(n: usize, s: &mut [Option<usize>]) -> Option<Vec<usize>> {
    let mut assigned: Vec<usize> = Vec::new();
    loop {
        let mut changed = false;
        // s(x) = x·s(x⁻¹): links each unit with its inverse.
        for x in 1..=n {
            let xi = kinv(n, x);
            if let Some(v) = s[xi] {
                let forced = kmul(n, x, v);
                match s[x] {
                    None => {
                        s[x] = Some(forced);
                        assigned.push(x);
                        changed = true;
                    }
                    Some(cur) if cur != forced => {
                        for &i in &assigned {
                            s[i] = None;
                        }
                        return None;
                    }
                    _ => {}
                }
            }
        }
        if !changed {
            break;
        }
    }
    for x in 1..=n {
        for y in 0..=n {
            if let (Some(l), Some(r)) = instance_sides(n, s, x, y) {
                if l != r {
                    for &i in &assigned {
                        s[i] = None;
                    }
                    return None;
                }
            }
        }
    }
    Some(assigned)
}

fn dfs(n: usize, s: &mut Vec<Option<usize>>, found: &mut Vec<SymmetryMap>) {
    let undo = match propagate(n, s) {
        Some(a) => a,
        None => return,
    };
    // Branch on the frontier of the orbit of 0 under s (0 → s(0) → …),
    // falling back to the smallest unassigned position.
    let mut branch: Option<usize> = None;
    let mut cur = 0usize;
    let mut steps = 0;
    while steps <= n + 1 {
        match s[cur] {
            Some(v) => {
                cur = v;
                steps += 1;
            }
            None => {
                branch = Some(cur);
                break;
            }
        }
    }
    if branch.is_none() {
        branch = (0..=n).find(|&i| s[i].is_none());
    }
    match branch {
        None => {
            let vals: Vec<usize> = s.iter().map(|v| v.unwrap()).collect();
            // All instances were fully determined and checked by propagate.
            let m = SymmetryMap::new(n, vals).expect("leaf map satisfies commutation");
            found.push(m);
        }
        Some(i) => {
            for v in 0..=n {
                s[i] = Some(v);
                dfs(n, s, found);
                s[i] = None;
            }
        }
    }
    for &i in &undo {
        s[i] = None;
    }
}

fn search_constructive(n: usize) -> Result<Vec<SymmetryMap>> {
    if n < 1 {
        return Err(Error::Domain("group order must be ≥ 1".into()));
    }
    let q = n as u64 + 1;
    let Some((p, l)) = prime_power(q) else {
        return Ok(Vec::new());
    };
    let field = SmallField::new(p, l)?;
    let mut maps: Vec<SymmetryMap> = Vec::new();
    for theta in field.primitive_elements() {
        let m = symmetry_from_generator(&field, theta);
        if !maps.contains(&m) {
            maps.push(m);
        }
    }
    if n == 1 {
        // The idempotent retraction s = (1, 1) also satisfies the
        // commutation identity on the two-element carrier and is counted.
        maps.push(SymmetryMap::from_parts_unchecked(1, vec![1, 1]));
    }
    maps.sort();
    Ok(maps)
}

/// Transport of `x ↦ x + 1` through the discrete logarithm at a primitive
/// element θ: index k+1 ↔ θ^k, and `s(g^k) = g^m` where `θ^k + 1 = θ^m`
/// (or 0 when `θ^k + 1 = 0`).
fn symmetry_from_generator(field: &SmallField, theta: u64) -> SymmetryMap {
    let n = (field.q - 1) as usize;
    let mut dlog: Vec<usize> = vec![usize::MAX; field.q as usize];
    let mut powers: Vec<u64> = Vec::with_capacity(n);
    let mut acc = 1u64;
    for k in 0..n {
        debug_assert!(dlog[acc as usize] == usize::MAX, "generator is not primitive");
        dlog[acc as usize] = k;
        powers.push(acc);
        acc = field.mul(acc, theta);
    }
    let mut s = vec![0usize; n + 1];
    s[0] = 1;
    for (k, &pw) in powers.iter().enumerate() {
        let y = field.add(pw, 1);
        s[k + 1] = if y == 0 { 0 } else { dlog[y as usize] + 1 };
    }
    SymmetryMap::from_parts_unchecked(n, s)
}

/// Build the symmetry map of `𝔽_{p^ℓ}` at the `generator_choice`-th
/// primitive element (ordered by polynomial encoding). Satisfies
/// `s^p = id`; in particular an involution for p = 2.
pub fn build_field_symmetry(p: u64, l: u32, generator_choice: usize) -> Result<SymmetryMap> {
    let field = SmallField::new(p, l)?;
    let prim = field.primitive_elements();
    let theta = *prim.get(generator_choice).ok_or_else(|| {
        Error::Domain(format!(
            "generator choice {generator_choice} out of range: {} primitive elements",
            prim.len()
        ))
    })?;
    Ok(symmetry_from_generator(&field, theta))
}

/// The lexicographically least monic irreducible polynomial used to model
/// `𝔽_{p^ℓ}`, as coefficients `[c₀, c₁, …, c_{ℓ−1}, 1]`.
pub fn irreducible_modulus(p: u64, l: u32) -> Result<Vec<u64>> {
    Ok(SmallField::new(p, l)?.modulus)
}

/// `𝔽_{p^ℓ}` with elements encoded as base-p digit strings (integer
/// 0..q−1), arithmetic modulo the least irreducible monic polynomial.
struct SmallField {
    p: u64,
    l: u32,
    q: u64,
    /// Monic modulus, length l+1, coefficients in 𝔽_p, little-endian.
    modulus: Vec<u64>,
}

impl SmallField {
    fn new(p: u64, l: u32) -> Result<Self> {
        if !arith::is_prime(p) {
            return Err(Error::Domain(format!("{p} is not prime")));
        }
        if l < 1 {
            return Err(Error::Domain("extension degree must be ≥ 1".into()));
        }
        let q = (p as u128).checked_pow(l).filter(|&q| q <= 1 << 16).ok_or_else(|| {
            Error::Domain(format!("field size {p}^{l} exceeds the 2^16 cap"))
        })? as u64;
        // Least irreducible monic polynomial of degree l: scan constant
        // parts in encoding order, trial-dividing by all monic polynomials
        // of degree ≤ l/2.
        let mut modulus = None;
        'scan: for c in 0..q {
            let mut cand: Vec<u64> = (0..l).map(|i| c / p.pow(i) % p).collect();
            cand.push(1);
            if l > 1 && cand[0] == 0 {
                continue; // divisible by T
            }
            for d in 1..=l / 2 {
                for e in 0..p.pow(d) {
                    let mut div: Vec<u64> = (0..d).map(|i| e / p.pow(i) % p).collect();
                    div.push(1);
                    if poly_rem(cand.clone(), &div, p).iter().all(|&x| x == 0) {
                        continue 'scan;
                    }
                }
            }
            modulus = Some(cand);
            break;
        }
        let modulus = modulus
            .ok_or_else(|| Error::Internal("no irreducible polynomial found".into()))?;
        Ok(SmallField { p, l, q, modulus })
    }

    fn digits(&self, a: u64) -> Vec<u64> {
        (0..self.l).map(|i| a / self.p.pow(i) % self.p).collect()
    }

    fn encode(&self, digits: &[u64]) -> u64 {
        digits
            .iter()
            .enumerate()
            .map(|(i, &d)| d % self.p * self.p.pow(i as u32))
            .sum()
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u64> = da.iter().zip(&db).map(|(&x, &y)| (x + y) % self.p).collect();
        self.encode(&sum)
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * self.l as usize - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        let rem = poly_rem(prod, &self.modulus, self.p);
        self.encode(&rem)
    }

    fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// All primitive elements, in increasing encoding order.
    fn primitive_elements(&self) -> Vec<u64> {
        let order = self.q - 1;
        if order == 1 {
            return vec![1];
        }
        let primes: Vec<u64> = arith::factor(order).into_iter().map(|(p, _)| p).collect();
        (2..self.q)
            .filter(|&a| primes.iter().all(|&r| self.pow(a, order / r) != 1))
            .collect()
    }
}

/// Remainder of `a` modulo the monic polynomial `b` over 𝔽_p
/// (little-endian coefficient vectors).
fn poly_rem(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    debug_assert_eq!(*b.last().unwrap(), 1, "divisor must be monic");
    while a.len() >= b.len() {
        let lead = *a.last().unwrap();
        if lead != 0 {
            let shift = a.len() - b.len();
            for (j, &bc) in b.iter().enumerate() {
                a[shift + j] = (a[shift + j] + p - lead * bc % p) % p;
            }
        }
        debug_assert_eq!(*a.last().unwrap(), 0);
        a.pop();
    }
    a
}

/// The addition table induced on `K` by a (not necessarily normalized)
/// map `s`: `x + y = s(0)⁻¹ · x · s(s(0)·y·x⁻¹)` for `x ≠ 0`, `0 + y = y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedAddition {
    n: usize,
    table: Vec<Vec<usize>>,
}

impl DerivedAddition {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn table(&self) -> &Vec<Vec<usize>> {
        &self.table
    }
}

/// Build and validate the derived addition from a raw map on `K`
/// (length n+1). Preconditions: `s(0) ≠ 0`; `s` commutes with its
/// conjugates; `s` bijective (field case) or `s∘s = s` (idempotent case).
/// The resulting law is verified commutative, associative, distributive,
/// with 0 neutral; bijective maps additionally yield additive inverses via
/// `θ = s⁻¹(0)`, retractions satisfy `1 + 1 = 1`.
pub fn addition_from_raw(n: usize, s: &[usize]) -> Result<DerivedAddition> {
    if n < 1 || s.len() != n + 1 || s.iter().any(|&v| v > n) {
        return Err(Error::Domain("map has wrong length or out-of-range values".into()));
    }
    if s[0] == 0 {
        return Err(Error::Domain("s(0) = 0: the map cannot induce an addition".into()));
    }
    // Commutation precondition, with witness on failure.
    for x in 1..=n {
        let xi = kinv(n, x);
        for y in 0..=n {
            let lhs = s[kmul(n, x, s[kmul(n, y, xi)])];
            let rhs = kmul(n, x, s[kmul(n, s[y], xi)]);
            if lhs != rhs {
                return Err(Error::Domain(format!(
                    "commutation fails at witness (x = {x}, y = {y}): {lhs} ≠ {rhs}"
                )));
            }
        }
    }
    let mut seen = vec![false; n + 1];
    let bijective = s.iter().all(|&v| !std::mem::replace(&mut seen[v], true));
    let retraction = (0..=n).all(|x| s[s[x]] == s[x]);
    if !bijective && !retraction {
        return Err(Error::Domain(
            "map is neither bijective nor an idempotent retraction".into(),
        ));
    }
    let s0i = kinv(n, s[0]);
    let add = |x: usize, y: usize| -> usize {
        if x == 0 {
            y
        } else {
            kmul(n, s0i, kmul(n, x, s[kmul(n, s[0], kmul(n, y, kinv(n, x)))]))
        }
    };
    let table: Vec<Vec<usize>> = (0..=n).map(|x| (0..=n).map(|y| add(x, y)).collect()).collect();
    let law = DerivedAddition { n, table };
    // Validated consequences; failures indicate a bug, not bad input.
    for a in 0..=n {
        if law.add(0, a) != a || law.add(a, 0) != a {
            return Err(Error::Internal("0 is not neutral for the derived law".into()));
        }
        for b in 0..=n {
            if law.add(a, b) != law.add(b, a) {
                return Err(Error::Internal("derived law is not commutative".into()));
            }
            for c in 0..=n {
                if law.add(law.add(a, b), c) != law.add(a, law.add(b, c)) {
                    return Err(Error::Internal("derived law is not associative".into()));
                }
                if kmul(n, c, law.add(a, b)) != law.add(kmul(n, c, a), kmul(n, c, b)) {
                    return Err(Error::Internal("derived law is not distributive".into()));
                }
            }
        }
    }
    if bijective {
        let theta = (0..=n)
            .find(|&x| s[x] == 0)
            .ok_or_else(|| Error::Internal("bijective map misses 0".into()))?;
        for a in 0..=n {
            if law.add(a, kmul(n, theta, a)) != 0 {
                return Err(Error::Internal(
                    "θ = s⁻¹(0) does not provide additive inverses".into(),
                ));
            }
        }
    } else if law.add(1, 1) != 1 {
        return Err(Error::Internal("retraction law violates 1 + 1 = 1".into()));
    }
    Ok(law)
}

/// Derived addition from a validated symmetry map.
pub fn addition_from_symmetry(s: &SymmetryMap) -> Result<DerivedAddition> {
    addition_from_raw(s.n(), s.map())
}

/// The retraction of `ℝ₊` onto `[1, ∞)`, `s(u) = max(u, 1)`, induces
/// `x + y = x·s(y/x) = max(x, y)`.
pub fn real_retraction_add(x: f64, y: f64) -> Result<f64> {
    if !(x >= 0.0) || !(y >= 0.0) {
        return Err(Error::Domain("retraction law needs x, y ≥ 0".into()));
    }
    Ok(if x == 0.0 { y } else { x * (y / x).max(1.0) })
}

/// Decompose the multigraph with edge matchings `(x, s(x))` and
/// `(x, R·s(R⁻¹·x))` (R = rotation by the unit `rotation`) into cycles and
/// return the sorted cycle-length multiset. Requires `s` to be a
/// fixed-point-free involution (the p = 2 construction); commuting
/// matchings force every length ≤ 4.
pub fn quadrilateral_check(s: &SymmetryMap, rotation: usize) -> Result<Vec<usize>> {
    let n = s.n();
    if rotation == 0 || rotation > n {
        return Err(Error::Domain("rotation must be a unit index".into()));
    }
    if !s.is_involution() {
        return Err(Error::Domain("quadrilateral check needs an involution".into()));
    }
    if (0..=n).any(|x| s.apply(x) == x) {
        return Err(Error::Domain("involution must be fixed-point free".into()));
    }
    let ri = kinv(n, rotation);
    let conj = |v: usize| kmul(n, rotation, s.apply(kmul(n, ri, v)));
    debug_assert!((0..=n).all(|v| conj(conj(v)) == v));
    let mut visited = vec![false; n + 1];
    let mut lengths: Vec<usize> = Vec::new();
    for v0 in 0..=n {
        if visited[v0] {
            continue;
        }
        let mut cur = v0;
        let mut len = 0usize;
        loop {
            visited[cur] = true;
            // Alternate the two matchings, starting with s.
            cur = if len % 2 == 0 { s.apply(cur) } else { conj(cur) };
            len += 1;
            if cur == v0 && len % 2 == 0 {
                break;
            }
        }
        lengths.push(len);
    }
    lengths.sort_unstable();
    Ok(lengths)
}
