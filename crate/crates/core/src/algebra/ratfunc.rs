//! Rational functions K = F_q(t) in canonical form: monic denominator
//! coprime to the numerator, zero represented as 0/1. Canonical form is a
//! normal form, so equality of representations is equality of functions.

use super::field::{Fq, FqElem};
use super::poly::Poly;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(fq: &Fq, num: Poly, den: Poly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(fq, num, den))
    }

    fn reduce(fq: &Fq, num: Poly, den: Poly) -> RatFunc {
        if num.is_zero() {
            return RatFunc {
                num,
                den: Poly::one(),
            };
        }
        let g = Poly::gcd(fq, &num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                Poly::div_exact(fq, &num, &g).expect("gcd divides"),
                Poly::div_exact(fq, &den, &g).expect("gcd divides"),
            )
        };
        let lead = den.leading();
        if lead != 1 {
            let inv = fq.inv(lead).expect("nonzero");
            den = Poly::scale(fq, &den, inv);
            num = Poly::scale(fq, &num, inv);
        }
        RatFunc { num, den }
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn zero() -> RatFunc {
        RatFunc::from_poly(Poly::zero())
    }

    pub fn one() -> RatFunc {
        RatFunc::from_poly(Poly::one())
    }

    pub fn constant(a: FqElem) -> RatFunc {
        RatFunc::from_poly(Poly::constant(a))
    }

    pub fn from_int(fq: &Fq, n: i64) -> RatFunc {
        RatFunc::constant(fq.from_int(n))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Extracts the polynomial part if the denominator is 1.
    pub fn as_poly(&self) -> Option<&Poly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// A constant (element of F_q) if both num and den are constants.
    pub fn as_constant(&self, fq: &Fq) -> Option<FqElem> {
        if self.num.is_constant() && self.den.is_one() {
            Some(self.num.coeff(0))
        } else if self.num.is_constant() && self.den.is_constant() {
            let inv = fq.inv(self.den.coeff(0)).ok()?;
            Some(fq.mul(self.num.coeff(0), inv))
        } else {
            None
        }
    }

    pub fn add(fq: &Fq, a: &RatFunc, b: &RatFunc) -> RatFunc {
        if a.is_zero() {
            return b.clone();
        }
        if b.is_zero() {
            return a.clone();
        }
        if a.den.is_one() && b.den.is_one() {
            return RatFunc::from_poly(Poly::add(fq, &a.num, &b.num));
        }
        let num = Poly::add(
            fq,
            &Poly::mul(fq, &a.num, &b.den),
            &Poly::mul(fq, &b.num, &a.den),
        );
        let den = Poly::mul(fq, &a.den, &b.den);
        Self::reduce(fq, num, den)
    }

    pub fn neg(fq: &Fq, a: &RatFunc) -> RatFunc {
        RatFunc {
            num: Poly::neg(fq, &a.num),
            den: a.den.clone(),
        }
    }

    pub fn sub(fq: &Fq, a: &RatFunc, b: &RatFunc) -> RatFunc {
        RatFunc::add(fq, a, &RatFunc::neg(fq, b))
    }

    pub fn mul(fq: &Fq, a: &RatFunc, b: &RatFunc) -> RatFunc {
        if a.is_zero() || b.is_zero() {
            return RatFunc::zero();
        }
        if a.den.is_one() && b.den.is_one() {
            return RatFunc::from_poly(Poly::mul(fq, &a.num, &b.num));
        }
        // cross-reduce before multiplying to keep degrees down
        let g1 = Poly::gcd(fq, &a.num, &b.den);
        let g2 = Poly::gcd(fq, &b.num, &a.den);
        let an = Poly::div_exact(fq, &a.num, &g1).expect("gcd divides");
        let bd = Poly::div_exact(fq, &b.den, &g1).expect("gcd divides");
        let bn = Poly::div_exact(fq, &b.num, &g2).expect("gcd divides");
        let ad = Poly::div_exact(fq, &a.den, &g2).expect("gcd divides");
        Self::reduce(fq, Poly::mul(fq, &an, &bn), Poly::mul(fq, &ad, &bd))
    }

    pub fn inv(fq: &Fq, a: &RatFunc) -> Result<RatFunc> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFunc::new(fq, a.den.clone(), a.num.clone())
    }

    pub fn div(fq: &Fq, a: &RatFunc, b: &RatFunc) -> Result<RatFunc> {
        Ok(RatFunc::mul(fq, a, &RatFunc::inv(fq, b)?))
    }

    pub fn pow(fq: &Fq, a: &RatFunc, n: u64) -> RatFunc {
        RatFunc {
            num: Poly::pow(fq, &a.num, n),
            den: Poly::pow(fq, &a.den, n),
        }
    }

    pub fn scale(fq: &Fq, a: &RatFunc, s: FqElem) -> RatFunc {
        RatFunc {
            num: Poly::scale(fq, &a.num, s),
            den: a.den.clone(),
        }
    }

    /// f -> f^p; in characteristic p this is coefficientwise Frobenius with
    /// t -> t^p.
    pub fn frobenius_power(&self, fq: &Fq) -> RatFunc {
        RatFunc {
            num: self.num.frobenius_power(fq),
            den: self.den.frobenius_power(fq),
        }
    }

    /// The unique g with g^p = self, if one exists. num and den are coprime,
    /// so each must be a p-th power separately.
    pub fn pth_root(&self, fq: &Fq) -> Result<RatFunc> {
        Ok(RatFunc {
            num: self.num.pth_root(fq)?,
            den: self.den.pth_root(fq)?,
        })
    }

    /// Substitute t -> g(t) for a polynomial g.
    pub fn compose_poly(&self, fq: &Fq, g: &Poly) -> RatFunc {
        Self::reduce(
            fq,
            Poly::compose(fq, &self.num, g),
            Poly::compose(fq, &self.den, g),
        )
    }

    /// Evaluate at a field element; error if the denominator vanishes.
    pub fn eval(&self, fq: &Fq, x: FqElem) -> Result<FqElem> {
        let d = self.den.eval(fq, x);
        if d == 0 {
            return Err(Error::Pole(format!("denominator vanishes at {x}")));
        }
        Ok(fq.mul(self.num.eval(fq, x), fq.inv(d)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> Fq {
        Fq::new(5, 1).unwrap()
    }

    #[test]
    fn cancellation_to_canonical_form() {
        let fq = f5();
        // (t^2 - 1)/(t - 1) = t + 1 with denominator 1
        let num = Poly::new(vec![4, 0, 1]);
        let den = Poly::new(vec![4, 1]);
        let f = RatFunc::new(&fq, num, den).unwrap();
        assert_eq!(f.num(), &Poly::new(vec![1, 1]));
        assert!(f.den().is_one());
    }

    #[test]
    fn canonical_form_is_a_normal_form() {
        let fq = f5();
        // build 2t/(t+1) two different ways
        let a = RatFunc::new(&fq, Poly::new(vec![0, 4]), Poly::new(vec![2, 2])).unwrap();
        let b = RatFunc::new(
            &fq,
            Poly::new(vec![0, 0, 2]),
            Poly::mul(&fq, &Poly::new(vec![1, 1]), &Poly::t()),
        )
        .unwrap();
        assert_eq!(a, b);
        assert_eq!(a.den().leading(), 1);
    }

    #[test]
    fn arithmetic_field_laws() {
        let fq = f5();
        let x = RatFunc::new(&fq, Poly::new(vec![1, 2]), Poly::new(vec![3, 0, 1])).unwrap();
        let y = RatFunc::new(&fq, Poly::new(vec![0, 1]), Poly::new(vec![1, 1])).unwrap();
        let z = RatFunc::from_poly(Poly::new(vec![2, 0, 0, 1]));
        let lhs = RatFunc::mul(&fq, &x, &RatFunc::add(&fq, &y, &z));
        let rhs = RatFunc::add(&fq, &RatFunc::mul(&fq, &x, &y), &RatFunc::mul(&fq, &x, &z));
        assert_eq!(lhs, rhs);
        let inv = RatFunc::inv(&fq, &x).unwrap();
        assert_eq!(RatFunc::mul(&fq, &x, &inv), RatFunc::one());
        assert!(RatFunc::inv(&fq, &RatFunc::zero()).is_err());
    }

    #[test]
    fn pth_root_roundtrip() {
        let fq = f5();
        let f = RatFunc::new(&fq, Poly::new(vec![1, 2]), Poly::new(vec![0, 3, 1])).unwrap();
        let fp = f.frobenius_power(&fq);
        assert_eq!(fp.pth_root(&fq).unwrap(), f);
    }
}
