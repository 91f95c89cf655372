//! Univariate polynomials over F_q in the indeterminate t.
//!
//! Canonical form: no trailing zero coefficients, so the zero polynomial is
//! the empty vector and `degree()` returns `None` for it (the spec's
//! distinguished "-infinity").

use super::field::{Fq, FqElem};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    /// Coefficients, low to high. Invariant: last entry nonzero.
    c: Vec<FqElem>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<FqElem>) -> Poly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { c: coeffs }
    }

    pub fn zero() -> Poly {
        Poly { c: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly { c: vec![1] }
    }

    pub fn constant(a: FqElem) -> Poly {
        if a == 0 {
            Poly::zero()
        } else {
            Poly { c: vec![a] }
        }
    }

    /// The monomial t.
    pub fn t() -> Poly {
        Poly { c: vec![0, 1] }
    }

    /// c * t^k.
    pub fn monomial(c: FqElem, k: usize) -> Poly {
        if c == 0 {
            return Poly::zero();
        }
        let mut v = vec![0; k + 1];
        v[k] = c;
        Poly { c: v }
    }

    pub fn coeffs(&self) -> &[FqElem] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> FqElem {
        self.c.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn leading(&self) -> FqElem {
        self.c.last().copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.c == [1]
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn add(fq: &Fq, a: &Poly, b: &Poly) -> Poly {
        let n = a.c.len().max(b.c.len());
        let mut out = vec![0; n];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = fq.add(a.coeff(i), b.coeff(i));
        }
        Poly::new(out)
    }

    pub fn neg(fq: &Fq, a: &Poly) -> Poly {
        Poly {
            c: a.c.iter().map(|&x| fq.neg(x)).collect(),
        }
    }

    pub fn sub(fq: &Fq, a: &Poly, b: &Poly) -> Poly {
        Poly::add(fq, a, &Poly::neg(fq, b))
    }

    pub fn mul(fq: &Fq, a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0; a.c.len() + b.c.len() - 1];
        if fq.e() == 1 {
            // delayed-reduction schoolbook for the common prime-field case
            let p = fq.p();
            let cap = u64::MAX - (p - 1) * (p - 1);
            for (i, &x) in a.c.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in b.c.iter().enumerate() {
                    let slot = &mut out[i + j];
                    *slot += x * y;
                    if *slot > cap {
                        *slot %= p;
                    }
                }
            }
            for slot in out.iter_mut() {
                *slot %= p;
            }
        } else {
            for (i, &x) in a.c.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in b.c.iter().enumerate() {
                    out[i + j] = fq.add(out[i + j], fq.mul(x, y));
                }
            }
        }
        Poly::new(out)
    }

    pub fn scale(fq: &Fq, a: &Poly, s: FqElem) -> Poly {
        if s == 0 {
            return Poly::zero();
        }
        Poly::new(a.c.iter().map(|&x| fq.mul(x, s)).collect())
    }

    /// a * t^k.
    pub fn shift(a: &Poly, k: usize) -> Poly {
        if a.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![0; k];
        v.extend_from_slice(&a.c);
        Poly { c: v }
    }

    pub fn pow(fq: &Fq, a: &Poly, mut n: u64) -> Poly {
        let mut base = a.clone();
        let mut acc = Poly::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = Poly::mul(fq, &acc, &base);
            }
            base = Poly::mul(fq, &base, &base);
            n >>= 1;
        }
        acc
    }

    /// Quotient and remainder; division by zero is an error.
    pub fn divmod(fq: &Fq, a: &Poly, b: &Poly) -> Result<(Poly, Poly)> {
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let db = b.c.len() - 1;
        let lead_inv = fq.inv(b.leading())?;
        let mut rem = a.c.clone();
        if rem.len() <= db {
            return Ok((Poly::zero(), a.clone()));
        }
        let mut quot = vec![0; rem.len() - db];
        while rem.len() > db {
            let da = rem.len() - 1;
            let c = fq.mul(rem[da], lead_inv);
            quot[da - db] = c;
            if c != 0 {
                for i in 0..=db {
                    let t = fq.mul(c, b.c[i]);
                    rem[da - db + i] = fq.sub(rem[da - db + i], t);
                }
            }
            while rem.last() == Some(&0) {
                rem.pop();
            }
            if rem.len() <= db {
                break;
            }
        }
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn rem(fq: &Fq, a: &Poly, b: &Poly) -> Result<Poly> {
        Ok(Poly::divmod(fq, a, b)?.1)
    }

    /// Exact division; errors if the remainder is nonzero.
    pub fn div_exact(fq: &Fq, a: &Poly, b: &Poly) -> Result<Poly> {
        let (q, r) = Poly::divmod(fq, a, b)?;
        if !r.is_zero() {
            return Err(Error::Inconsistency(
                "exact polynomial division left a remainder".into(),
            ));
        }
        Ok(q)
    }

    /// Monic gcd.
    pub fn gcd(fq: &Fq, a: &Poly, b: &Poly) -> Poly {
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_zero() {
            let r = Poly::rem(fq, &a, &b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic(fq)
    }

    pub fn monic(&self, fq: &Fq) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = fq.inv(self.leading()).expect("nonzero leading coefficient");
        Poly::scale(fq, self, inv)
    }

    pub fn eval(&self, fq: &Fq, x: FqElem) -> FqElem {
        let mut acc = 0;
        for &c in self.c.iter().rev() {
            acc = fq.add(fq.mul(acc, x), c);
        }
        acc
    }

    /// Substitution of a polynomial for t.
    pub fn compose(fq: &Fq, f: &Poly, g: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for &c in f.c.iter().rev() {
            acc = Poly::mul(fq, &acc, g);
            acc = Poly::add(fq, &acc, &Poly::constant(c));
        }
        acc
    }

    pub fn derivative(&self, fq: &Fq) -> Poly {
        if self.c.len() <= 1 {
            return Poly::zero();
        }
        let mut out = Vec::with_capacity(self.c.len() - 1);
        for (i, &c) in self.c.iter().enumerate().skip(1) {
            out.push(fq.mul(c, fq.from_int(i as i64)));
        }
        Poly::new(out)
    }

    /// t^n * f(1/t); requires n >= deg f. Used for the chart at infinity.
    pub fn reverse_scaled(&self, n: usize) -> Result<Poly> {
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        let d = self.c.len() - 1;
        if n < d {
            return Err(Error::Inconsistency(format!(
                "reverse_scaled: n = {n} < deg = {d}"
            )));
        }
        let mut out = vec![0; n + 1];
        for (i, &c) in self.c.iter().enumerate() {
            out[n - i] = c;
        }
        Ok(Poly::new(out))
    }

    /// f -> f^p written as sum f_i^p t^(p i); equals Poly::pow(f, p) in
    /// characteristic p but costs O(deg).
    pub fn frobenius_power(&self, fq: &Fq) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let p = fq.p() as usize;
        let mut out = vec![0; (self.c.len() - 1) * p + 1];
        for (i, &c) in self.c.iter().enumerate() {
            out[i * p] = fq.pow(c, fq.p());
        }
        Poly::new(out)
    }

    /// The unique g with g^p = self, if it exists: all exponents must be
    /// multiples of p and coefficients p-th powers (automatic, F_q perfect).
    pub fn pth_root(&self, fq: &Fq) -> Result<Poly> {
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        let p = fq.p() as usize;
        if (self.c.len() - 1) % p != 0 {
            return Err(Error::Inconsistency(
                "pth_root: degree not a multiple of p".into(),
            ));
        }
        let mut out = vec![0; (self.c.len() - 1) / p + 1];
        for (i, &c) in self.c.iter().enumerate() {
            if i % p != 0 {
                if c != 0 {
                    return Err(Error::Inconsistency(
                        "pth_root: exponent not a multiple of p".into(),
                    ));
                }
                continue;
            }
            out[i / p] = fq.inv_frobenius(c);
        }
        Ok(Poly::new(out))
    }

    /// Multiplicity of the monic irreducible pi in self (0 for coprime).
    pub fn multiplicity_of(&self, fq: &Fq, pi: &Poly) -> u32 {
        assert!(!self.is_zero(), "valuation of the zero polynomial");
        let mut m = 0;
        let mut cur = self.clone();
        loop {
            let (q, r) = Poly::divmod(fq, &cur, pi).expect("nonzero modulus");
            if !r.is_zero() {
                return m;
            }
            m += 1;
            cur = q;
        }
    }

    /// Packed code of the coefficient vector, base q. Only for polynomials
    /// small enough to fit; used as a canonical dense index.
    pub fn code(&self, fq: &Fq) -> u64 {
        let mut code = 0u64;
        for &c in self.c.iter().rev() {
            code = code * fq.q() + c;
        }
        code
    }

    pub fn from_code(fq: &Fq, mut code: u64) -> Poly {
        let mut v = Vec::new();
        while code > 0 {
            v.push(code % fq.q());
            code /= fq.q();
        }
        Poly::new(v)
    }
}
