//! Integer machinery behind the graph census: factorization, Euler phi,
//! multiplicative orders modulo d, and 2-adic valuations.
//!
//! Everything here is deterministic. Primality uses the Miller–Rabin base
//! set {2, 3, ..., 37}, which is a proven deterministic witness set below
//! 3.3·10^24 and therefore for all of `u64`. Pollard rho (Brent variant)
//! uses the fixed increment schedule c = 1, 2, 3, ... so factorizations are
//! reproducible across runs and platforms.

use std::collections::BTreeMap;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumTheoryError {
    #[error("{a} is not coprime to {d}, so it has no multiplicative order")]
    NotCoprime { a: u64, d: u64 },
}

/// Exact prime factorization, primes ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    prime_powers: BTreeMap<u64, u32>,
}

impl Factorization {
    pub fn prime_powers(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.prime_powers.iter().map(|(&p, &e)| (p, e))
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.prime_powers.keys().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.prime_powers.is_empty()
    }

    /// Product of all p^e; the factored integer.
    pub fn value(&self) -> u64 {
        self.prime_powers
            .iter()
            .map(|(&p, &e)| p.pow(e))
            .product()
    }

    /// All divisors of the factored integer, ascending.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for (&p, &e) in &self.prime_powers {
            let prev = divs.clone();
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                divs.extend(prev.iter().map(|d| d * pk));
            }
        }
        divs.sort_unstable();
        divs
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
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

/// Deterministic Miller–Rabin for `u64`.
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
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Pollard rho with increment `c`. Returns a nontrivial factor or `None`
/// if this `c` closes its cycle without finding one.
fn pollard_rho(n: u64, c: u64) -> Option<u64> {
    if n % 2 == 0 {
        return Some(2);
    }
    let f = |x: u64| (mul_mod(x, x, n) + c) % n;
    let mut x = 2u64;
    let mut y = 2u64;
    loop {
        x = f(x);
        y = f(f(y));
        if x == y {
            return None;
        }
        let d = gcd(x.abs_diff(y), n);
        if d > 1 {
            return if d == n { None } else { Some(d) };
        }
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

const TRIAL_BOUND: u64 = 10_000;

/// Exact prime factorization of `m ≥ 1`. Trial division up to a fixed
/// bound, then Pollard rho with the deterministic schedule c = 1, 2, 3, ...
///
/// Panics if `m == 0`.
pub fn factorize(m: u64) -> Factorization {
    assert!(m >= 1, "factorize requires m >= 1");
    let mut prime_powers = BTreeMap::new();
    let mut m = m;
    let mut d = 2u64;
    while d <= TRIAL_BOUND && d.saturating_mul(d) <= m {
        while m % d == 0 {
            *prime_powers.entry(d).or_insert(0) += 1;
            m /= d;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m > 1 {
        let mut stack = vec![m];
        while let Some(v) = stack.pop() {
            if is_prime(v) {
                *prime_powers.entry(v).or_insert(0) += 1;
                continue;
            }
            let mut factor = None;
            for c in 1.. {
                if let Some(f) = pollard_rho(v, c) {
                    factor = Some(f);
                    break;
                }
            }
            let f = factor.expect("pollard rho schedule exhausted");
            stack.push(f);
            stack.push(v / f);
        }
    }
    Factorization { prime_powers }
}

/// All odd divisors of the factored integer except 1, ascending.
pub fn odd_divisors_gt1(f: &Factorization) -> Vec<u64> {
    let odd_part = Factorization {
        prime_powers: f
            .prime_powers
            .iter()
            .filter(|(&p, _)| p != 2)
            .map(|(&p, &e)| (p, e))
            .collect(),
    };
    odd_part.divisors().into_iter().filter(|&d| d > 1).collect()
}

/// Euler's totient of `d ≥ 1`.
pub fn euler_phi(d: u64) -> u64 {
    assert!(d >= 1);
    factorize(d)
        .prime_powers()
        .map(|(p, e)| p.pow(e - 1) * (p - 1))
        .product()
}

/// Least `k ≥ 1` with `a^k ≡ 1 (mod d)`, computed by stripping primes
/// from phi(d). `a` may be negative (it is reduced mod d first).
pub fn ord_mod(a: i64, d: u64) -> Result<u64, NumTheoryError> {
    assert!(d >= 1);
    if d == 1 {
        return Ok(1); // trivial group
    }
    let a_red = (a.rem_euclid(d as i64)) as u64;
    if gcd(a_red, d) != 1 {
        return Err(NumTheoryError::NotCoprime { a: a_red, d });
    }
    let phi = euler_phi(d);
    let mut ord = phi;
    for (p, e) in factorize(phi).prime_powers() {
        for _ in 0..e {
            if ord % p == 0 && pow_mod(a_red, ord / p, d) == 1 {
                ord /= p;
            } else {
                break;
            }
        }
    }
    debug_assert_eq!(pow_mod(a_red, ord, d), 1);
    Ok(ord)
}

/// Largest `e` with `2^e | m`.
pub fn two_adic_valuation(m: u64) -> u32 {
    assert!(m >= 1);
    m.trailing_zeros()
}

/// 3^n as u64; `None` once it no longer fits (n > 40).
pub fn pow3(n: u32) -> Option<u64> {
    3u64.checked_pow(n)
}
