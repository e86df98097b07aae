//! Exact arithmetic in Z[q^{1/2}, q^{-1/2}] and its specializations.
//!
//! An element is a sparse sum of terms `c * q^(k/2)` where the half-exponent
//! count `k` is an integer (so `k = 2` means `q`, `k = -1` means `q^{-1/2}`)
//! and `c` is an arbitrary-precision integer. No floating point enters the
//! algebra layer; real evaluation happens only inside [`SpecTarget::Real`].

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoeffError {
    /// A term with a negative q-exponent cannot be reduced through q |-> 0.
    #[error("element is not p-integral: term with exponent {half}/2 survives q^(1/2) -> 0")]
    NotPIntegral { half: i64 },
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("residue {r} is not invertible modulo {c}")]
    NotInvertible { r: u64, c: u64 },
    #[error("real evaluation point must satisfy q0 > 1")]
    BadRealPoint,
    #[error("cannot parse `{0}` as a half-Laurent element")]
    Parse(String),
}

/// Sparse element of Z[q^{1/2}, q^{-1/2}]; keys are half-exponent counts.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct HalfLaurent {
    terms: BTreeMap<i64, BigInt>,
}

impl HalfLaurent {
    pub fn zero() -> Self {
        HalfLaurent { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// `c * q^(half/2)` in canonical form.
    pub fn monomial(c: BigInt, half: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(half, c);
        }
        HalfLaurent { terms }
    }

    pub fn int(c: i64) -> Self {
        Self::monomial(BigInt::from(c), 0)
    }

    /// `q^(half/2)`.
    pub fn q_half_pow(half: i64) -> Self {
        Self::monomial(BigInt::one(), half)
    }

    /// The variable `q` itself.
    pub fn q() -> Self {
        Self::q_half_pow(2)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_monomial().map(|(c, h)| h == 0 && c.is_one()).unwrap_or(false)
    }

    /// Some((coefficient, half-exponent)) when the element is a single term.
    pub fn as_monomial(&self) -> Option<(&BigInt, i64)> {
        if self.terms.len() == 1 {
            let (h, c) = self.terms.iter().next().unwrap();
            Some((c, *h))
        } else {
            None
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(h, c)| (*h, c))
    }

    pub fn coeff(&self, half: i64) -> BigInt {
        self.terms.get(&half).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn min_half(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_half(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn insert_term(terms: &mut BTreeMap<i64, BigInt>, half: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match terms.entry(half) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (h, c) in &other.terms {
            Self::insert_term(&mut terms, *h, c.clone());
        }
        HalfLaurent { terms }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (h, c) in &other.terms {
            Self::insert_term(&mut self.terms, *h, c.clone());
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (h, c) in &other.terms {
            Self::insert_term(&mut terms, *h, -c.clone());
        }
        HalfLaurent { terms }
    }

    pub fn neg(&self) -> Self {
        HalfLaurent { terms: self.terms.iter().map(|(h, c)| (*h, -c.clone())).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (h1, c1) in &self.terms {
            for (h2, c2) in &other.terms {
                Self::insert_term(&mut terms, h1 + h2, c1 * c2);
            }
        }
        HalfLaurent { terms }
    }

    /// Multiply by the monomial `c * q^(half/2)` in place.
    pub fn mul_monomial(&self, c: &BigInt, half: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        HalfLaurent { terms: self.terms.iter().map(|(h, a)| (h + half, a * c)).collect() }
    }

    pub fn shift(&self, half: i64) -> Self {
        HalfLaurent { terms: self.terms.iter().map(|(h, a)| (h + half, a.clone())).collect() }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.mul_monomial(&BigInt::from(c), 0)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact division by a monomial; None when some coefficient is not divisible.
    pub fn div_monomial(&self, c: &BigInt, half: i64) -> Option<Self> {
        if c.is_zero() {
            return None;
        }
        let mut terms = BTreeMap::new();
        for (h, a) in &self.terms {
            let (q, r) = num::Integer::div_rem(a, c);
            if !r.is_zero() {
                return None;
            }
            terms.insert(h - half, q);
        }
        Some(HalfLaurent { terms })
    }

    /// Divide out the integer content and the lowest q-power; normalizes the
    /// lowest coefficient to be positive. Used by fraction-free elimination.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut content = BigInt::zero();
        for c in self.terms.values() {
            content = num::Integer::gcd(&content, c);
        }
        let low = self.min_half().unwrap();
        let lead_neg = self.terms[&low].is_negative();
        if lead_neg {
            content = -content;
        }
        self.div_monomial(&content, low).expect("content divides")
    }

    /// True when every exponent is nonnegative (the element survives q -> 0).
    pub fn is_p_integral(&self) -> bool {
        self.min_half().map_or(true, |h| h >= 0)
    }

    pub fn specialize(&self, target: &SpecTarget) -> Result<SpecValue, CoeffError> {
        match target {
            SpecTarget::ModP { p } => {
                if !is_prime(*p) {
                    return Err(CoeffError::NotPrime(*p));
                }
                let mut acc: u64 = 0;
                for (h, c) in &self.terms {
                    if *h < 0 {
                        return Err(CoeffError::NotPIntegral { half: *h });
                    }
                    if *h == 0 {
                        acc = (acc + mod_of_bigint(c, *p)) % *p;
                    }
                }
                Ok(SpecValue::Fp(acc))
            }
            SpecTarget::ModC { c, r } => {
                if !is_prime(*c) {
                    return Err(CoeffError::NotPrime(*c));
                }
                let r = r % c;
                if r == 0 {
                    return Err(CoeffError::NotInvertible { r, c: *c });
                }
                let mut acc: u64 = 0;
                for (h, a) in &self.terms {
                    let rp = mod_pow_signed(r, *h, *c)?;
                    acc = (acc + mod_of_bigint(a, *c) * rp) % *c;
                }
                Ok(SpecValue::Fp(acc))
            }
            SpecTarget::Real { q0_num, q0_den } => {
                if *q0_den == 0 || q0_num <= q0_den {
                    return Err(CoeffError::BadRealPoint);
                }
                let q0 = *q0_num as f64 / *q0_den as f64;
                Ok(SpecValue::Real(self.eval_f64(q0)))
            }
        }
    }

    /// Numeric evaluation at a real point q0 > 1.
    pub fn eval_f64(&self, q0: f64) -> f64 {
        let sqrt = q0.sqrt();
        let mut acc = 0.0;
        for (h, c) in &self.terms {
            acc += bigint_to_f64(c) * sqrt.powi(*h as i32);
        }
        acc
    }

    /// Decide whether |self| < 1 across all real q > 1.
    ///
    /// Only monomials admit a uniform verdict; everything else must be
    /// specialized by the caller.
    pub fn abs_lt_one(&self) -> Verdict {
        if self.is_zero() {
            return Verdict::Always;
        }
        match self.as_monomial() {
            Some((c, h)) => {
                let abs_one = c.abs().is_one();
                if h < 0 {
                    if abs_one {
                        Verdict::Always
                    } else {
                        Verdict::Depends
                    }
                } else {
                    // h >= 0 and |c| >= 1: the modulus is >= 1 for every q > 1.
                    Verdict::Never
                }
            }
            None => Verdict::Depends,
        }
    }
}

impl fmt::Display for HalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(h, c)| format!("{}*q^({}/2)", c, h)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl FromStr for HalfLaurent {
    type Err = CoeffError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut out = Self::zero();
        for part in s.split(" + ") {
            let (c_str, rest) = part
                .split_once("*q^(")
                .ok_or_else(|| CoeffError::Parse(part.to_string()))?;
            let h_str = rest
                .strip_suffix("/2)")
                .ok_or_else(|| CoeffError::Parse(part.to_string()))?;
            let c: BigInt = c_str.trim().parse().map_err(|_| CoeffError::Parse(part.to_string()))?;
            let h: i64 = h_str.trim().parse().map_err(|_| CoeffError::Parse(part.to_string()))?;
            out = out.add(&Self::monomial(c, h));
        }
        Ok(out)
    }
}

/// Specialization targets for coefficients.
#[derive(Clone, Debug, PartialEq)]
pub enum SpecTarget {
    /// q^{1/2} |-> 0, integers reduced mod p (q is a power of p).
    ModP { p: u64 },
    /// q^{1/2} |-> r in F_c for a prime c (typically c != p).
    ModC { c: u64, r: u64 },
    /// Numeric evaluation at a rational q0 > 1.
    Real { q0_num: u64, q0_den: u64 },
}

impl SpecTarget {
    pub fn real(q0_num: u64, q0_den: u64) -> Self {
        SpecTarget::Real { q0_num, q0_den }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SpecValue {
    Fp(u64),
    Real(f64),
}

impl SpecValue {
    pub fn as_fp(&self) -> Option<u64> {
        match self {
            SpecValue::Fp(v) => Some(*v),
            _ => None,
        }
    }
}

/// Outcome of the uniform |.| < 1 test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Always,
    Never,
    Depends,
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn mod_of_bigint(c: &BigInt, m: u64) -> u64 {
    use num::ToPrimitive;
    let r = c % BigInt::from(m);
    let r = if r.is_negative() { r + BigInt::from(m) } else { r };
    r.to_u64().expect("reduced residue fits")
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

fn mod_pow_signed(base: u64, exp: i64, c: u64) -> Result<u64, CoeffError> {
    if exp >= 0 {
        Ok(mod_pow(base, exp as u64, c))
    } else {
        // c prime: invert by Fermat.
        let inv = mod_pow(base, c - 2, c);
        if inv * base % c != 1 {
            return Err(CoeffError::NotInvertible { r: base, c });
        }
        Ok(mod_pow(inv, (-exp) as u64, c))
    }
}

fn bigint_to_f64(c: &BigInt) -> f64 {
    use num::ToPrimitive;
    c.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> HalfLaurent {
        HalfLaurent::q()
    }

    #[test]
    fn square_root_squares_to_q() {
        let h = HalfLaurent::q_half_pow(1);
        assert_eq!(h.mul(&h), q());
    }

    #[test]
    fn quadratic_relation_root() {
        // (x - q^d)(x + 1) vanishes at x = q^d.
        for d in 1..4i64 {
            let x = HalfLaurent::q_half_pow(2 * d);
            let lhs = x.sub(&HalfLaurent::q_half_pow(2 * d)).mul(&x.add(&HalfLaurent::one()));
            assert!(lhs.is_zero());
        }
    }

    #[test]
    fn difference_of_squares() {
        let lhs = q().sub(&HalfLaurent::one()).mul(&q().add(&HalfLaurent::one()));
        let rhs = q().mul(&q()).sub(&HalfLaurent::one());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn specialize_mod_p_kills_positive_powers() {
        // q^d + 1 -> 1 under ModP.
        let a = HalfLaurent::q_half_pow(4).add(&HalfLaurent::one());
        assert_eq!(a.specialize(&SpecTarget::ModP { p: 3 }).unwrap(), SpecValue::Fp(1));
        // q^{-1} is rejected.
        let b = HalfLaurent::q_half_pow(-2);
        assert!(matches!(
            b.specialize(&SpecTarget::ModP { p: 3 }),
            Err(CoeffError::NotPIntegral { .. })
        ));
    }

    #[test]
    fn specialize_mod_c_with_unit_residue() {
        // q^{1/2} + 1 -> 0 in F_2 with q^{1/2} |-> 1.
        let a = HalfLaurent::q_half_pow(1).add(&HalfLaurent::one());
        assert_eq!(a.specialize(&SpecTarget::ModC { c: 2, r: 1 }).unwrap(), SpecValue::Fp(0));
    }

    #[test]
    fn specialize_real() {
        let a = HalfLaurent::q_half_pow(-2);
        match a.specialize(&SpecTarget::real(4, 1)).unwrap() {
            SpecValue::Real(v) => assert!((v - 0.25).abs() < 1e-12),
            _ => panic!(),
        }
    }

    #[test]
    fn abs_verdicts() {
        assert_eq!(HalfLaurent::monomial(BigInt::from(-1), -1).abs_lt_one(), Verdict::Always);
        assert_eq!(HalfLaurent::q_half_pow(2).abs_lt_one(), Verdict::Never);
        assert_eq!(HalfLaurent::zero().abs_lt_one(), Verdict::Always);
        assert_eq!(HalfLaurent::int(-1).abs_lt_one(), Verdict::Never);
        assert_eq!(HalfLaurent::monomial(BigInt::from(2), -2).abs_lt_one(), Verdict::Depends);
        assert_eq!(q().add(&HalfLaurent::one()).abs_lt_one(), Verdict::Depends);
    }

    #[test]
    fn display_round_trip() {
        let a = HalfLaurent::monomial(BigInt::from(-3), -1)
            .add(&HalfLaurent::int(7))
            .add(&HalfLaurent::q_half_pow(4).scale_int(2));
        let s = a.to_string();
        assert_eq!(s, "-3*q^(-1/2) + 7*q^(0/2) + 2*q^(4/2)");
        let b: HalfLaurent = s.parse().unwrap();
        assert_eq!(a, b);
        assert_eq!("0".parse::<HalfLaurent>().unwrap(), HalfLaurent::zero());
    }

    #[test]
    fn primitive_part_normalizes() {
        let a = HalfLaurent::monomial(BigInt::from(-4), 2).add(&HalfLaurent::monomial(BigInt::from(-6), 4));
        let p = a.primitive_part();
        assert_eq!(p, HalfLaurent::int(2).add(&HalfLaurent::monomial(BigInt::from(3), 2)));
    }

    #[test]
    fn specialization_is_ring_hom_samples() {
        let targets = [
            SpecTarget::ModP { p: 5 },
            SpecTarget::ModC { c: 7, r: 3 },
        ];
        let elems = [
            q().add(&HalfLaurent::one()),
            HalfLaurent::q_half_pow(1).scale_int(2).add(&HalfLaurent::int(-3)),
            HalfLaurent::q_half_pow(3).add(&q()),
            HalfLaurent::one(),
        ];
        for t in &targets {
            for a in &elems {
                for b in &elems {
                    let ab = a.mul(b).specialize(t).unwrap().as_fp().unwrap();
                    let am = a.specialize(t).unwrap().as_fp().unwrap();
                    let bm = b.specialize(t).unwrap().as_fp().unwrap();
                    let m = match t {
                        SpecTarget::ModP { p } => *p,
                        SpecTarget::ModC { c, .. } => *c,
                        _ => unreachable!(),
                    };
                    assert_eq!(ab, am * bm % m);
                    let sum = a.add(b).specialize(t).unwrap().as_fp().unwrap();
                    assert_eq!(sum, (am + bm) % m);
                }
            }
        }
    }
}
