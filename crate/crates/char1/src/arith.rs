//! Elementary number theory: sieves, multiplicative functions, and modular
//! arithmetic.
//!
//! Everything here is exact integer arithmetic except [`Sieve::mangoldt`],
//! which returns `ln p` as an `f64`.

/// Smallest-prime-factor table with a cached prime list, built by a linear
/// sieve (each composite is struck exactly once, so construction is
/// `O(limit)`).
pub struct Sieve {
    spf: Vec<u32>,
    primes: Vec<u64>,
}

impl Sieve {
    /// Sieve covering `0..=limit`. `limit` must fit in `u32`.
    pub fn new(limit: usize) -> Self {
        assert!(limit <= u32::MAX as usize, "sieve limit must fit in u32");
        let mut spf = vec![0u32; limit + 1];
        let mut primes: Vec<u64> = Vec::new();
        for i in 2..=limit {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u64);
            }
            for &p in &primes {
                let p = p as usize;
                if p > spf[i] as usize || i * p > limit {
                    break;
                }
                spf[i * p] = p as u32;
            }
        }
        Sieve { spf, primes }
    }

    /// Largest value covered by the sieve.
    pub fn limit(&self) -> usize {
        self.spf.len() - 1
    }

    /// All primes `<= limit`, ascending.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Whether `n <= limit` is prime.
    pub fn is_prime(&self, n: u64) -> bool {
        n >= 2 && self.spf[n as usize] as u64 == n
    }

    /// Prime factorization of `n <= limit` as `(prime, exponent)` pairs in
    /// ascending prime order. `factor(1)` is empty.
    pub fn factor(&self, n: u64) -> Vec<(u64, u32)> {
        assert!(n >= 1 && n as usize <= self.limit());
        let mut n = n as usize;
        let mut out: Vec<(u64, u32)> = Vec::new();
        while n > 1 {
            let p = self.spf[n] as usize;
            let mut e = 0u32;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p as u64, e));
        }
        out
    }

    /// Euler totient of `n <= limit`.
    pub fn euler_phi(&self, n: u64) -> u64 {
        let mut phi = n;
        for (p, _) in self.factor(n) {
            phi = phi / p * (p - 1);
        }
        phi
    }

    /// Moebius function of `n <= limit`.
    pub fn moebius(&self, n: u64) -> i32 {
        let f = self.factor(n);
        if f.iter().any(|&(_, e)| e > 1) {
            0
        } else if f.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Von Mangoldt function of `n <= limit`: `ln p` when `n` is a power of
    /// the prime `p`, otherwise `0`.
    pub fn mangoldt(&self, n: u64) -> f64 {
        if n < 2 {
            return 0.0;
        }
        let f = self.factor(n);
        if f.len() == 1 {
            (f[0].0 as f64).ln()
        } else {
            0.0
        }
    }
}

/// Trial division by all primes `<= bound`. Returns the factored part and the
/// remaining cofactor if it exceeds 1. The cofactor, when present, has no
/// prime factor `<= bound`.
pub fn factor_trial(mut n: u64, bound: u64) -> (Vec<(u64, u32)>, Option<u64>) {
    assert!(n >= 1);
    let mut out: Vec<(u64, u32)> = Vec::new();
    let mut push = |p: u64, n: &mut u64| {
        let mut e = 0u32;
        while *n % p == 0 {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push(2, &mut n);
    let mut p = 3u64;
    while p <= bound && p.saturating_mul(p) <= n {
        push(p, &mut n);
        p += 2;
    }
    // If trial division passed sqrt(n), the remainder is prime (or 1).
    if n > 1 && p.saturating_mul(p) > n {
        out.push((n, 1));
        n = 1;
    }
    (out, if n > 1 { Some(n) } else { None })
}

/// Full prime factorization by trial division; `n` must factor completely
/// (always true for `n >= 1` since the bound covers `sqrt(n)`).
pub fn factor(n: u64) -> Vec<(u64, u32)> {
    let (f, rest) = factor_trial(n, u64::MAX);
    debug_assert!(rest.is_none());
    f
}

/// All divisors of the integer with the given factorization, ascending.
pub fn divisors_of_factored(factors: &[(u64, u32)]) -> Vec<u64> {
    let mut out = vec![1u64];
    for &(p, e) in factors {
        let prev = out.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            out.extend(prev.iter().map(|d| d * pk));
        }
    }
    out.sort_unstable();
    out
}

/// All divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    divisors_of_factored(&factor(n))
}

/// Euler totient by trial division.
pub fn euler_phi(n: u64) -> u64 {
    let mut phi = n;
    for (p, _) in factor(n) {
        phi = phi / p * (p - 1);
    }
    phi
}

/// Moebius function by trial division.
pub fn moebius(n: u64) -> i32 {
    let f = factor(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `a * b mod m` without overflow.
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `base^exp mod m` by square-and-multiply. `m` must be nonzero.
pub fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    assert!(m > 0);
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Legendre symbol `(a/p)` for an odd prime `p`: `1` for nonzero quadratic
/// residues, `-1` for non-residues, `0` when `p | a`.
pub fn legendre(a: i64, p: u64) -> i32 {
    debug_assert!(p > 2 && is_prime(p));
    let r = a.rem_euclid(p as i64) as u64;
    if r == 0 {
        return 0;
    }
    let s = mod_pow(r, (p - 1) / 2, p);
    if s == 1 {
        1
    } else {
        debug_assert_eq!(s, p - 1);
        -1
    }
}

/// Deterministic Miller–Rabin primality test, valid for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    // This witness set is known to be deterministic for all n < 2^64.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Greatest common divisor (non-negative).
pub fn gcd(a: u64, b: u64) -> u64 {
    num::integer::gcd(a, b)
}
