//! Univariate polynomials in the Hecke parameter `q`.
//!
//! Coefficients are an arbitrary exact ring; the crate uses `i64`
//! (see [`crate::IntPoly`]). Polynomials are kept in canonical form: no
//! trailing zero coefficients, so structural equality is ring equality.
//!
//! The text form lists terms by decreasing degree, e.g. `q^2-3*q+2`,
//! `q-1`, `q`, `1`, `0`. Parsing accepts any ordering of terms.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Coefficient ring requirements.
pub trait Coefficient:
    Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

impl<T> Coefficient for T where
    T: Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = T> + Sub<Output = T>
{
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly<T> {
    /// Constant term first.
    coeffs: Vec<T>,
}

impl<T: Coefficient> Poly<T> {
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::from_coeffs(vec![T::zero(), T::one()])
    }

    pub fn monomial(c: T, degree: usize) -> Self {
        let mut coeffs = vec![T::zero(); degree];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> T {
        self.coeffs.get(degree).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * at.clone() + c.clone())
    }
}

impl<T: Coefficient> Zero for Poly<T> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Coefficient> One for Poly<T> {
    fn one() -> Self {
        Self::constant(T::one())
    }
}

impl<T: Coefficient> Add<&Poly<T>> for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Coefficient> Sub<&Poly<T>> for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Coefficient> Mul<&Poly<T>> for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(out)
    }
}

impl<T: Coefficient> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl<T: Coefficient> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$m(&rhs)
            }
        }
        impl<T: Coefficient> $tr<&Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: &Poly<T>) -> Poly<T> {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl<T: Coefficient> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl<T> fmt::Display for Poly<T>
where
    T: Coefficient + fmt::Display + PartialOrd,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = *c < T::zero();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            if negative {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            if deg == 0 {
                write!(f, "{magnitude}")?;
                continue;
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude}*")?;
            }
            if deg == 1 {
                f.write_str("q")?;
            } else {
                write!(f, "q^{deg}")?;
            }
        }
        Ok(())
    }
}

impl<T> fmt::Debug for Poly<T>
where
    T: Coefficient + fmt::Display + PartialOrd,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

fn parse_term<T>(term: &str, whole: &str) -> Result<(T, usize), Error>
where
    T: Coefficient + FromStr,
{
    let bad = || Error::PolyParse(whole.to_string());
    let (coef_part, var_part) = match term.find('q') {
        Some(pos) => (&term[..pos], Some(&term[pos + 1..])),
        None => (term, None),
    };
    let coef_part = coef_part.strip_suffix('*').unwrap_or(coef_part);
    let coef = if coef_part.is_empty() {
        if var_part.is_none() {
            return Err(bad());
        }
        T::one()
    } else {
        coef_part.parse::<T>().map_err(|_| bad())?
    };
    let degree = match var_part {
        None => 0,
        Some("") => 1,
        Some(rest) => rest
            .strip_prefix('^')
            .and_then(|e| e.parse::<usize>().ok())
            .ok_or_else(bad)?,
    };
    Ok((coef, degree))
}

impl<T> FromStr for Poly<T>
where
    T: Coefficient + FromStr,
{
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::PolyParse(s.to_string()));
        }
        let mut acc = Poly::zero();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for end in 1..=bytes.len() {
            let at_boundary =
                end == bytes.len() || (matches!(bytes[end], b'+' | b'-') && bytes[end - 1] != b'^');
            if !at_boundary {
                continue;
            }
            let chunk = &compact[start..end];
            let (negative, body) = match chunk.as_bytes()[0] {
                b'-' => (true, &chunk[1..]),
                b'+' => (false, &chunk[1..]),
                _ => (false, chunk),
            };
            let (coef, degree) = parse_term::<T>(body, s)?;
            let coef = if negative { -coef } else { coef };
            acc = acc + Poly::monomial(coef, degree);
            start = end;
        }
        Ok(acc)
    }
}

impl<T> Serialize for Poly<T>
where
    T: Coefficient + fmt::Display + PartialOrd,
{
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de, T> Deserialize<'de> for Poly<T>
where
    T: Coefficient + FromStr,
{
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type P = Poly<i64>;

    fn p(c: &[i64]) -> P {
        P::from_coeffs(c.to_vec())
    }

    #[test]
    fn canonical_form_drops_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
    }

    #[test]
    fn display_alphabet() {
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(P::one().to_string(), "1");
        assert_eq!(P::q().to_string(), "q");
        assert_eq!((P::q() - P::one()).to_string(), "q-1");
        assert_eq!(p(&[2, -3, 1]).to_string(), "q^2-3*q+2");
        assert_eq!(p(&[0, -1]).to_string(), "-q");
        assert_eq!(p(&[-4]).to_string(), "-4");
    }

    #[test]
    fn parse_accepts_both_orders() {
        assert_eq!("q-1".parse::<P>().unwrap(), p(&[-1, 1]));
        assert_eq!("-1+q".parse::<P>().unwrap(), p(&[-1, 1]));
        assert_eq!("3+2*q+q^2".parse::<P>().unwrap(), p(&[3, 2, 1]));
        assert_eq!("0".parse::<P>().unwrap(), P::zero());
        assert_eq!(" 2 * q ^ 3 ".parse::<P>().unwrap(), p(&[0, 0, 0, 2]));
        assert!("".parse::<P>().is_err());
        assert!("q^".parse::<P>().is_err());
        assert!("x+1".parse::<P>().is_err());
    }

    #[test]
    fn quadratic_relation_on_scalars() {
        // (q + 1)(q - q) = 0 and (q+1)(q-1) = q^2 - 1
        let q = P::q();
        let one = P::one();
        assert!(((&q + &one) * (&q - &q)).is_zero());
        assert_eq!((&q + &one) * (&q - &one), p(&[-1, 0, 1]));
    }

    #[test]
    fn evaluation() {
        assert_eq!(p(&[-1, 1]).eval(&3), 2);
        assert_eq!(p(&[2, -3, 1]).eval(&1), 0);
        assert_eq!(P::zero().eval(&5), 0);
    }

    fn arb_poly() -> impl Strategy<Value = P> {
        prop::collection::vec(-20i64..20, 0..5).prop_map(P::from_coeffs)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
        }

        #[test]
        fn display_parse_round_trip(a in arb_poly()) {
            prop_assert_eq!(a.to_string().parse::<P>().unwrap(), a);
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in arb_poly(), b in arb_poly(), x in -4i64..5) {
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
            prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
        }
    }
}
