//! Dense univariate polynomials with arbitrary-precision integer
//! coefficients, stored in ascending order with no trailing zeros.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `1 - c t`
    pub fn one_minus(c: BigInt) -> Self {
        Self::new(vec![BigInt::one(), -c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// gcd of the coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Sign of `p(num / 2^shift)`, computed exactly.
    fn sign_at_dyadic(&self, num: &BigInt, shift: usize) -> Sign {
        // sum c_i num^i 2^{shift (d - i)}
        let Some(d) = self.degree() else {
            return Sign::NoSign;
        };
        let mut acc = BigInt::zero();
        let mut pow = BigInt::one();
        for (i, c) in self.coeffs.iter().enumerate() {
            acc += (c * &pow) << (shift * (d - i));
            pow *= num;
        }
        acc.sign()
    }

    /// Exact quotient `self / d` when `d` divides `self` in `Z[t]`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let mut rem = self.coeffs.clone();
        let sd = self.degree()?;
        if sd < dd {
            return None;
        }
        let lead = d.leading();
        let mut q = vec![BigInt::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (quot, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &quot * c;
            }
            q[k] = quot;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(Self::new(q))
        } else {
            None
        }
    }

    /// Pseudo-remainder of `self` by `d` with the positive multiplier
    /// `|lc(d)|^(deg self - deg d + 1)`, so signs are preserved.
    pub fn pseudo_rem(&self, d: &Poly) -> Poly {
        let dd = d.degree().expect("division by zero polynomial");
        let mut rem = self.clone();
        let lead = d.leading();
        let steps = match self.degree() {
            Some(sd) if sd >= dd => sd - dd + 1,
            _ => return rem,
        };
        let mut used = 0;
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let top = rem.leading();
            let shift = rd - dd;
            let mut next: Vec<BigInt> = rem.coeffs.iter().map(|c| c * &lead).collect();
            for (j, c) in d.coeffs.iter().enumerate() {
                next[shift + j] -= &top * c;
            }
            rem = Poly::new(next);
            used += 1;
        }
        let mut factor = num_traits::pow(lead.clone(), steps - used);
        if lead.is_negative() && steps % 2 == 1 {
            factor = -factor;
        }
        rem.scale(&factor)
    }

    /// Primitive gcd with positive leading coefficient; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive();
        }
        a.primitive()
    }

    /// Sturm sequence of the square-free part.
    fn sturm_sequence(&self) -> Vec<Poly> {
        let sf = self.square_free();
        let mut seq = vec![sf.clone(), sf.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let r = seq[n - 2].pseudo_rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            // Dividing by the positive content leaves the signs unchanged.
            let c = r.content();
            seq.push(-Poly::new(r.coeffs.iter().map(|x| x / &c).collect()));
        }
        seq
    }

    pub fn square_free(&self) -> Poly {
        let g = self.gcd(&self.derivative());
        if g.degree().unwrap_or(0) == 0 {
            self.primitive()
        } else {
            self.div_exact(&g).expect("gcd divides").primitive()
        }
    }

    /// Smallest root in `(0, bound]`, located by exact Sturm counting and
    /// dyadic bisection down to `2^-60` relative to `bound`.
    pub fn smallest_positive_root(&self, bound: u32) -> Option<f64> {
        if self.degree().unwrap_or(0) == 0 {
            return None;
        }
        let seq = self.sturm_sequence();
        let variations = |num: &BigInt, shift: usize| {
            let signs: Vec<Sign> = seq
                .iter()
                .map(|p| p.sign_at_dyadic(num, shift))
                .filter(|s| *s != Sign::NoSign)
                .collect();
            signs.windows(2).filter(|w| w[0] != w[1]).count()
        };
        const BITS: usize = 60;
        let hi_num = BigInt::from(bound) << BITS;
        let at_zero = variations(&BigInt::zero(), BITS);
        if at_zero == variations(&hi_num, BITS) {
            return None;
        }
        // Invariant: no root in (0, lo], at least one root in (lo, hi].
        let (mut lo, mut hi) = (BigInt::zero(), hi_num);
        while &hi - &lo > BigInt::one() {
            let mid: BigInt = (&lo + &hi) >> 1;
            if variations(&mid, BITS) < at_zero {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let scale = (BITS as f64).exp2();
        Some(hi.to_f64()? / scale)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{mag}t^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64(c)
    }

    #[test]
    fn arithmetic_and_display() {
        let a = p(&[1, -3]);
        let b = p(&[1, -2]);
        assert_eq!(&a * &b, p(&[1, -5, 6]));
        assert_eq!(&a - &a, Poly::zero());
        assert_eq!((&a * &b).to_string(), "1 - 5t + 6t^2");
        assert_eq!(p(&[0, 0, 0]).degree(), None);
    }

    #[test]
    fn exact_division() {
        let prod = &p(&[1, -3]) * &p(&[2, 0, 5]);
        assert_eq!(prod.div_exact(&p(&[1, -3])), Some(p(&[2, 0, 5])));
        assert_eq!(p(&[1, 1]).div_exact(&p(&[0, 2])), None);
        assert_eq!(p(&[1]).div_exact(&p(&[1, 1])), None);
    }

    #[test]
    fn gcd_recovers_common_factor() {
        let f = p(&[1, -2]);
        let a = &f * &p(&[1, -3]);
        let b = &f * &p(&[3, 0, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 2]));
        assert_eq!(p(&[2, -4]).gcd(&p(&[1, -3])), p(&[1]));
        assert_eq!(p(&[0, 4]).gcd(&p(&[0, 6])), p(&[0, 1]));
    }

    #[test]
    fn smallest_root() {
        let d = p(&[1, -5, 6]);
        assert!((d.smallest_positive_root(1).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        // Double root at 1/2.
        let d = &p(&[1, -2]) * &p(&[1, -2]);
        assert!((d.smallest_positive_root(1).unwrap() - 0.5).abs() < 1e-15);
        assert_eq!(p(&[1, 1]).smallest_positive_root(4), None);
        assert_eq!(p(&[3]).smallest_positive_root(4), None);
        // 1 - t - t^2: root (sqrt 5 - 1) / 2.
        let r = p(&[1, -1, -1]).smallest_positive_root(1).unwrap();
        assert!((r - (5f64.sqrt() - 1.0) / 2.0).abs() < 1e-15);
    }

    proptest! {
        #[test]
        fn gcd_divides_both(a in prop::collection::vec(-5i64..5, 1..5),
                            b in prop::collection::vec(-5i64..5, 1..5),
                            f in prop::collection::vec(-3i64..3, 1..3)) {
            let (a, b, f) = (p(&a), p(&b), p(&f));
            prop_assume!(!f.is_zero() && !a.is_zero() && !b.is_zero());
            let (x, y) = (&a * &f, &b * &f);
            let g = x.gcd(&y);
            prop_assert!(x.div_exact(&g).is_some());
            prop_assert!(y.div_exact(&g).is_some());
            prop_assert!(g.degree() >= f.degree());
        }
    }
}
