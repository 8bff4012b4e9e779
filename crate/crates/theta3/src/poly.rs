//! Dense polynomials over GF(3).
//!
//! Coefficients live in {0, 1, 2} and are stored little-endian: index `i`
//! holds the coefficient of `x^i`. The canonical form has no trailing zero
//! beyond the leading term; the zero polynomial is the empty vector.
//!
//! The text format used by the CLI and config files is comma-separated
//! little-endian digits, e.g. `x^3 - x + 1` over GF(3) is `1,2,0,1`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyParseError {
    #[error("empty coefficient string")]
    Empty,
    #[error("coefficient {0:?} is not one of 0, 1, 2")]
    BadDigit(String),
}

/// A polynomial over GF(3) in canonical (trimmed) form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Poly3 {
    coeffs: Vec<u8>,
}

impl Poly3 {
    pub const ZERO: Poly3 = Poly3 { coeffs: Vec::new() };

    /// Builds a polynomial from little-endian coefficients, reducing each
    /// entry mod 3 and trimming trailing zeros.
    pub fn new(coeffs: impl Into<Vec<u8>>) -> Poly3 {
        let mut coeffs: Vec<u8> = coeffs.into();
        for c in &mut coeffs {
            *c %= 3;
        }
        let mut p = Poly3 { coeffs };
        p.trim();
        p
    }

    pub fn constant(c: u8) -> Poly3 {
        Poly3::new(vec![c])
    }

    pub fn one() -> Poly3 {
        Poly3::constant(1)
    }

    /// The monomial `x`.
    pub fn x() -> Poly3 {
        Poly3::new(vec![0, 1])
    }

    /// Monic polynomial of degree `deg` whose non-leading coefficients are
    /// the base-3 digits of `index` (little-endian). This is the scan
    /// encoding used by [`crate::field::find_irreducible`].
    pub fn monic_from_index(deg: usize, mut index: u64) -> Poly3 {
        let mut coeffs = vec![0u8; deg + 1];
        for c in coeffs.iter_mut().take(deg) {
            *c = (index % 3) as u8;
            index /= 3;
        }
        coeffs[deg] = 1;
        Poly3 { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn coeff(&self, i: usize) -> u8 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn add(&self, rhs: &Poly3) -> Poly3 {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push((self.coeff(i) + rhs.coeff(i)) % 3);
        }
        let mut p = Poly3 { coeffs: out };
        p.trim();
        p
    }

    pub fn sub(&self, rhs: &Poly3) -> Poly3 {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push((3 + self.coeff(i) - rhs.coeff(i)) % 3);
        }
        let mut p = Poly3 { coeffs: out };
        p.trim();
        p
    }

    pub fn neg(&self) -> Poly3 {
        Poly3 {
            coeffs: self.coeffs.iter().map(|&c| (3 - c) % 3).collect(),
        }
    }

    /// Schoolbook product; quadratic, which is fine at the degrees in play.
    pub fn mul(&self, rhs: &Poly3) -> Poly3 {
        if self.is_zero() || rhs.is_zero() {
            return Poly3::ZERO;
        }
        let mut out = vec![0u8; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                if b != 0 {
                    out[i + j] = (out[i + j] + a * b) % 3;
                }
            }
        }
        let mut p = Poly3 { coeffs: out };
        p.trim();
        p
    }

    pub fn scale(&self, c: u8) -> Poly3 {
        let c = c % 3;
        if c == 0 {
            return Poly3::ZERO;
        }
        Poly3 {
            coeffs: self.coeffs.iter().map(|&a| (a * c) % 3).collect(),
        }
    }

    /// Quotient and remainder of polynomial long division.
    ///
    /// Panics if `divisor` is zero.
    pub fn divrem(&self, divisor: &Poly3) -> (Poly3, Poly3) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.degree().unwrap();
        let mut rem = self.coeffs.clone();
        let rd = match self.degree() {
            Some(d) if d >= dd => d,
            _ => return (Poly3::ZERO, self.clone()),
        };
        let mut quot = vec![0u8; rd - dd + 1];
        // inverse of the leading coefficient: 1 -> 1, 2 -> 2
        let inv_lead = divisor.coeffs[dd];
        let mut top = rem.len();
        while top > dd {
            let lead = rem[top - 1];
            if lead != 0 {
                let shift = top - 1 - dd;
                let f = (lead * inv_lead) % 3;
                quot[shift] = f;
                for (i, &c) in divisor.coeffs.iter().enumerate() {
                    if c != 0 {
                        rem[i + shift] = (3 + rem[i + shift] - (f * c) % 3) % 3;
                    }
                }
            }
            top -= 1;
        }
        let mut q = Poly3 { coeffs: quot };
        q.trim();
        let mut r = Poly3 { coeffs: rem };
        r.trim();
        (q, r)
    }

    pub fn rem(&self, modulus: &Poly3) -> Poly3 {
        self.divrem(modulus).1
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly3) -> Poly3 {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if let Some(d) = a.degree() {
            let lead = a.coeffs[d];
            a = a.scale(lead); // lead^2 = 1 in GF(3), so this makes it monic
        }
        a
    }

    /// Extended Euclid: returns `gcd` (monic) and `u` with
    /// `u * self ≡ gcd (mod other)`.
    pub fn extended_gcd(&self, other: &Poly3) -> (Poly3, Poly3) {
        let mut r0 = other.clone();
        let mut r1 = self.clone();
        let mut s0 = Poly3::ZERO;
        let mut s1 = Poly3::one();
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        if let Some(d) = r0.degree() {
            let lead = r0.coeffs[d];
            r0 = r0.scale(lead);
            s0 = s0.scale(lead);
        }
        (r0, s0.rem(other))
    }
}

impl fmt::Display for Poly3 {
    /// Comma-separated little-endian digits; the zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Poly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly3({self})")
    }
}

impl FromStr for Poly3 {
    type Err = PolyParseError;

    fn from_str(s: &str) -> Result<Poly3, PolyParseError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(PolyParseError::Empty);
        }
        let mut coeffs = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            match part {
                "0" => coeffs.push(0),
                "1" => coeffs.push(1),
                "2" => coeffs.push(2),
                _ => return Err(PolyParseError::BadDigit(part.to_string())),
            }
        }
        Ok(Poly3::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly3 {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_form_trims_trailing_zeros() {
        assert_eq!(Poly3::new(vec![1, 2, 0, 0]), p("1,2"));
        assert!(Poly3::new(vec![0, 0]).is_zero());
        assert_eq!(Poly3::new(vec![0]).degree(), None);
    }

    #[test]
    fn display_roundtrip() {
        for s in ["1,2,0,1", "2", "0,1", "1"] {
            assert_eq!(p(s).to_string(), s);
        }
        assert_eq!(Poly3::ZERO.to_string(), "0");
        assert_eq!(p("0"), Poly3::ZERO);
    }

    #[test]
    fn parse_rejects_bad_digits() {
        assert_eq!(
            "1,3".parse::<Poly3>(),
            Err(PolyParseError::BadDigit("3".into()))
        );
        assert_eq!("".parse::<Poly3>(), Err(PolyParseError::Empty));
        assert!("1,-1".parse::<Poly3>().is_err());
    }

    #[test]
    fn mul_matches_hand_expansion() {
        // (x+1)^2 = x^2 + 2x + 1
        let x1 = p("1,1");
        assert_eq!(x1.mul(&x1), p("1,2,1"));
        // x * (x+2) = x^2 + 2x
        assert_eq!(Poly3::x().mul(&p("2,1")), p("0,2,1"));
        assert_eq!(p("1,2").mul(&Poly3::ZERO), Poly3::ZERO);
    }

    #[test]
    fn divrem_reconstructs() {
        let a = p("1,0,2,1,1");
        let b = p("1,2,1");
        let (q, r) = a.divrem(&b);
        assert_eq!(b.mul(&q).add(&r), a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn x_cubed_mod_conway() {
        // x^3 mod (x^3 - x + 1) = x - 1 = x + 2
        let m = p("1,2,0,1");
        let x3 = Poly3::x().mul(&Poly3::x()).mul(&Poly3::x());
        assert_eq!(x3.rem(&m), p("2,1"));
    }

    #[test]
    fn extended_gcd_gives_inverse() {
        let m = p("1,2,0,1");
        let a = p("0,1"); // x
        let (g, u) = a.extended_gcd(&m);
        assert!(g.is_one());
        assert_eq!(a.mul(&u).rem(&m), Poly3::one());
    }

    #[test]
    fn gcd_of_multiples() {
        let a = p("1,1").mul(&p("2,1"));
        let b = p("1,1").mul(&p("0,1"));
        assert_eq!(a.gcd(&b), p("1,1"));
        assert_eq!(Poly3::ZERO.gcd(&p("2,1")).is_monic(), true);
    }

    #[test]
    fn monic_from_index_scan_encoding() {
        assert_eq!(Poly3::monic_from_index(1, 0), p("0,1")); // x
        assert_eq!(Poly3::monic_from_index(2, 1), p("1,0,1")); // x^2 + 1
        assert_eq!(Poly3::monic_from_index(3, 7), p("1,2,0,1")); // x^3 + 2x + 1
    }
}
