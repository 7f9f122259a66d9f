//! Finite semirings of combinatorial characteristic: the family `B(n,i)`,
//! explicit semiring tables with characteristic classification, and the
//! brute-force classification of finite semifields with idempotent addition.
//!
//! `B(n,i)` has carrier `{0,…,n−1}`; a sum or product `v` computed in ℕ is
//! kept if `v < n` and otherwise replaced by the unique `ℓ ∈ [i, n−1]` with
//! `ℓ ≡ v (mod m)`, `m = n−i`. The Boolean semifield 𝔹 is `B(2,1)`, the only
//! finite semifield whose addition is idempotent.

use crate::{Error, Result};

/// The semiring `B(n,i)` on `{0,…,n−1}` (2 ≤ n, 1 ≤ i ≤ n−1).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeSemiring {
    n: u64,
    i: u64,
}

impl PrimeSemiring {
    pub fn new(n: u64, i: u64) -> Result<Self> {
        if n < 2 || i < 1 || i > n - 1 {
            return Err(Error::Domain(format!(
                "B(n,i) requires 2 ≤ n and 1 ≤ i ≤ n−1, got n = {n}, i = {i}"
            )));
        }
        Ok(PrimeSemiring { n, i })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn i(&self) -> u64 {
        self.i
    }

    /// The congruence modulus `m = n − i`.
    pub fn m(&self) -> u64 {
        self.n - self.i
    }

    /// Image of the natural number `v` in `B(n,i)`: identity below `n`,
    /// otherwise the unique `ℓ ∈ [i, n−1]` congruent to `v` mod `m`.
    fn normalize(&self, v: u64) -> u64 {
        if v < self.n {
            v
        } else {
            self.i + (v - self.i) % self.m()
        }
    }

    fn check_operand(&self, x: u64) -> Result<()> {
        if x >= self.n {
            return Err(Error::Domain(format!(
                "operand {x} outside {{0,…,{}}}",
                self.n - 1
            )));
        }
        Ok(())
    }

    pub fn add(&self, x: u64, y: u64) -> Result<u64> {
        self.check_operand(x)?;
        self.check_operand(y)?;
        Ok(self.normalize(x + y))
    }

    pub fn mul(&self, x: u64, y: u64) -> Result<u64> {
        self.check_operand(x)?;
        self.check_operand(y)?;
        Ok(self.normalize(x * y))
    }

    /// Explicit operation tables (element k at index k).
    pub fn table(&self) -> SemiringTable {
        let n = self.n as usize;
        let add = (0..n)
            .map(|x| (0..n).map(|y| self.add(x as u64, y as u64).unwrap() as usize).collect())
            .collect();
        let mul = (0..n)
            .map(|x| (0..n).map(|y| self.mul(x as u64, y as u64).unwrap() as usize).collect())
            .collect();
        SemiringTable { add, mul, zero: 0, one: 1 }
    }
}

/// A finite commutative semiring presented by operation tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiringTable {
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
    pub one: usize,
}

impl SemiringTable {
    pub fn size(&self) -> usize {
        self.add.len()
    }

    /// The Boolean semifield 𝔹 = `B(2,1)` on `{0,1}`.
    pub fn boolean() -> Self {
        PrimeSemiring::new(2, 1).unwrap().table()
    }

    /// The ring ℤ/nℤ as a semiring table.
    pub fn cyclic_ring(n: usize) -> Self {
        assert!(n >= 1);
        let add = (0..n).map(|x| (0..n).map(|y| (x + y) % n).collect()).collect();
        let mul = (0..n).map(|x| (0..n).map(|y| (x * y) % n).collect()).collect();
        SemiringTable { add, mul, zero: 0, one: 1 % n }
    }

    fn in_range(&self, x: usize) -> bool {
        x < self.size()
    }

    /// Check the commutative-semiring axioms: both operations total,
    /// commutative, associative; `zero` neutral for + and absorbing for ×;
    /// `one` neutral for ×; multiplication distributes over addition.
    pub fn validate(&self) -> Result<()> {
        let n = self.size();
        let square = |t: &Vec<Vec<usize>>, name: &str| -> Result<()> {
            if t.len() != n || t.iter().any(|r| r.len() != n) {
                return Err(Error::Domain(format!("{name} table is not {n}×{n}")));
            }
            if t.iter().flatten().any(|&v| !self.in_range(v)) {
                return Err(Error::Domain(format!("{name} table has out-of-range entries")));
            }
            Ok(())
        };
        square(&self.add, "addition")?;
        square(&self.mul, "multiplication")?;
        if !self.in_range(self.zero) || !self.in_range(self.one) {
            return Err(Error::Domain("distinguished elements out of range".into()));
        }
        let add = |x: usize, y: usize| self.add[x][y];
        let mul = |x: usize, y: usize| self.mul[x][y];
        for x in 0..n {
            if add(self.zero, x) != x {
                return Err(Error::Domain("zero is not additively neutral".into()));
            }
            if mul(self.one, x) != x {
                return Err(Error::Domain("one is not multiplicatively neutral".into()));
            }
            if mul(self.zero, x) != self.zero {
                return Err(Error::Domain("zero is not absorbing".into()));
            }
            for y in 0..n {
                if add(x, y) != add(y, x) {
                    return Err(Error::Domain("addition is not commutative".into()));
                }
                if mul(x, y) != mul(y, x) {
                    return Err(Error::Domain("multiplication is not commutative".into()));
                }
                for z in 0..n {
                    if add(add(x, y), z) != add(x, add(y, z)) {
                        return Err(Error::Domain("addition is not associative".into()));
                    }
                    if mul(mul(x, y), z) != mul(x, mul(y, z)) {
                        return Err(Error::Domain("multiplication is not associative".into()));
                    }
                    if mul(x, add(y, z)) != add(mul(x, y), mul(x, z)) {
                        return Err(Error::Domain("multiplication does not distribute".into()));
                    }
                }
            }
        }
        Ok(())
    }

    /// Whether `x + x = x` for every element.
    pub fn is_additively_idempotent(&self) -> bool {
        (0..self.size()).all(|x| self.add[x][x] == x)
    }

    /// Whether the nonzero elements form a group under multiplication (and
    /// the table is a valid semiring), i.e. the table presents a semifield.
    pub fn is_semifield(&self) -> bool {
        if self.validate().is_err() || self.size() < 2 || self.zero == self.one {
            return false;
        }
        let nonzero: Vec<usize> = (0..self.size()).filter(|&x| x != self.zero).collect();
        // Closure and invertibility: each nonzero x has xy = 1 for some
        // nonzero y, and products of nonzero elements stay nonzero.
        nonzero.iter().all(|&x| {
            nonzero.iter().all(|&y| self.mul[x][y] != self.zero)
                && nonzero.iter().any(|&y| self.mul[x][y] == self.one)
        })
    }
}

/// Characteristic of a finite semiring, read off the additive orbit of 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Characteristic {
    /// All k·1 distinct — impossible in a finite semiring, kept for
    /// completeness of the classification.
    Zero,
    /// n·1 = 0 for minimal n (ring-like characteristic).
    Positive(u64),
    /// n·1 = i·1 with n minimal and 1 ≤ i ≤ n−1 (combinatorial
    /// characteristic (n,i); characteristic one means (2,1)).
    Combinatorial { n: u64, i: u64 },
}

/// Classify a semiring table by iterating `k ↦ k·1`.
///
/// Returns `Positive(n)` when `n·1 = 0` first, `Combinatorial(n,i)` when
/// `n·1` first revisits `i·1` with `i ≥ 1`. Malformed tables are a
/// validation (domain) error.
pub fn characteristic_of(t: &SemiringTable) -> Result<Characteristic> {
    t.validate()?;
    if t.one == t.zero {
        // Trivial semiring: 1·1 = 0 immediately.
        return Ok(Characteristic::Positive(1));
    }
    // k·1 for k = 1, 2, …: position k-1 holds k·1.
    let mut orbit: Vec<usize> = vec![t.one];
    loop {
        let prev = *orbit.last().unwrap();
        let next = t.add[prev][t.one];
        let k = orbit.len() as u64 + 1; // next = k·1
        if next == t.zero {
            return Ok(Characteristic::Positive(k));
        }
        if let Some(pos) = orbit.iter().position(|&v| v == next) {
            return Ok(Characteristic::Combinatorial { n: k, i: pos as u64 + 1 });
        }
        orbit.push(next);
        debug_assert!(orbit.len() <= t.size(), "additive orbit exceeded carrier");
    }
}

/// All labeled abelian group tables on `{0,…,k−1}` with identity 0, obtained
/// by relabeling the canonical groups (cyclic, plus the Klein four-group at
/// k = 4). Exhaustive for k ≤ 5.
fn labeled_abelian_groups(k: usize) -> Vec<Vec<Vec<usize>>> {
    assert!(k >= 1 && k <= 5, "labeled_abelian_groups is exhaustive only for k ≤ 5");
    let mut canonical: Vec<Vec<Vec<usize>>> = Vec::new();
    // Cyclic group of order k.
    canonical.push((0..k).map(|a| (0..k).map(|b| (a + b) % k).collect()).collect());
    if k == 4 {
        // Klein four-group: bitwise xor on {0,1,2,3}.
        canonical.push((0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect());
    }
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for table in &canonical {
        for perm in permutations_fixing_zero(k) {
            let mut t = vec![vec![0usize; k]; k];
            for a in 0..k {
                for b in 0..k {
                    t[perm[a]][perm[b]] = perm[table[a][b]];
                }
            }
            if seen.insert(t.clone()) {
                out.push(t);
            }
        }
    }
    out
}

/// All permutations of `{0,…,k−1}` fixing 0.
fn permutations_fixing_zero(k: usize) -> Vec<Vec<usize>> {
    fn rec(rest: &[usize], acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(acc.clone());
            return;
        }
        for (i, &v) in rest.iter().enumerate() {
            let mut rest2 = rest.to_vec();
            rest2.remove(i);
            acc.push(v);
            rec(&rest2, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    let rest: Vec<usize> = (1..k).collect();
    rec(&rest, &mut vec![0], &mut out);
    out
}

/// Exhaustively enumerate all commutative semifield tables of the given size
/// on `{0,…,size−1}` with `zero = 0`, `one = 1`.
///
/// In a semifield, `x + y = x·(1 + x⁻¹y)` for `x ≠ 0`, so the addition is
/// determined by the multiplicative group of nonzero elements together with
/// the map `v(z) = 1 + z`; the enumeration ranges over all labeled abelian
/// groups on the nonzero part and all `size^(size−1)` choices of `v`,
/// keeping candidates that satisfy every semiring axiom. The size is capped
/// at 5 (the search space grows superexponentially).
pub fn enumerate_semifields(size: usize) -> Result<Vec<SemiringTable>> {
    if size < 2 || size > 5 {
        return Err(Error::Domain(format!(
            "semifield enumeration supports sizes 2..=5, got {size}"
        )));
    }
    let k = size - 1; // nonzero elements, labeled 1..=k with identity 1
    let mut found = Vec::new();
    for group in labeled_abelian_groups(k) {
        // Group element g is the semifield element g+1; inverse table.
        let inv: Vec<usize> = (0..k)
            .map(|a| (0..k).find(|&b| group[a][b] == 0).expect("group inverse"))
            .collect();
        // v ranges over all maps {1..=k} → {0..=k} (semifield elements).
        let total = (size as u64).pow(k as u32);
        for code in 0..total {
            let mut v = vec![0usize; k];
            let mut c = code;
            for slot in v.iter_mut() {
                *slot = (c % size as u64) as usize;
                c /= size as u64;
            }
            // Full tables on {0,…,size−1}: 0 is zero, nonzero x ↔ group
            // element x−1.
            let mul = |x: usize, y: usize| -> usize {
                if x == 0 || y == 0 {
                    0
                } else {
                    group[x - 1][y - 1] + 1
                }
            };
            let add = |x: usize, y: usize| -> usize {
                if x == 0 {
                    return y;
                }
                if y == 0 {
                    return x;
                }
                let z = group[inv[x - 1]][y - 1]; // x⁻¹y as group element
                let w = v[z];
                if w == 0 {
                    0
                } else {
                    mul(x, w)
                }
            };
            let table = SemiringTable {
                add: (0..size).map(|x| (0..size).map(|y| add(x, y)).collect()).collect(),
                mul: (0..size).map(|x| (0..size).map(|y| mul(x, y)).collect()).collect(),
                zero: 0,
                one: 1,
            };
            if table.is_semifield() {
                found.push(table);
            }
        }
    }
    Ok(found)
}

/// Check that an idempotent addition table defines a sup-semilattice: the
/// relation `a ≼ b ⇔ a + b = b` is a partial order in which `a + b` is the
/// least upper bound of `{a, b}`.
pub fn check_semilattice_order(t: &SemiringTable) -> Result<()> {
    if !t.is_additively_idempotent() {
        return Err(Error::Domain("addition is not idempotent".into()));
    }
    let n = t.size();
    let le = |a: usize, b: usize| t.add[a][b] == b;
    for a in 0..n {
        for b in 0..n {
            if le(a, b) && le(b, a) && a != b {
                return Err(Error::Domain("order is not antisymmetric".into()));
            }
            for c in 0..n {
                if le(a, b) && le(b, c) && !le(a, c) {
                    return Err(Error::Domain("order is not transitive".into()));
                }
            }
            let s = t.add[a][b];
            if !le(a, s) || !le(b, s) {
                return Err(Error::Domain("a+b is not an upper bound".into()));
            }
            for u in 0..n {
                if le(a, u) && le(b, u) && !le(s, u) {
                    return Err(Error::Domain("a+b is not the least upper bound".into()));
                }
            }
        }
    }
    Ok(())
}
