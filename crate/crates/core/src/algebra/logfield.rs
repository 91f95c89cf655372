//! Residue fields F_{q^d} realized with discrete-log tables.
//!
//! Elements are packed codes (base-q digits of the coordinate vector over
//! F_q). Multiplication is index addition through the exp/log tables, which
//! is what makes exhaustive point counting over every place of a given
//! degree affordable. Construction is deterministic: the modulus is the
//! lexicographically least monic irreducible of degree d over F_q.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::factor::is_irreducible;
use super::field::{prime_factors, Fq, FqElem};
use super::poly::Poly;
use crate::error::{Error, Result};

const SENTINEL: u32 = u32::MAX;
/// Largest table we are willing to build (elements, not bytes).
pub const MAX_TABLE: u64 = 1 << 22;

pub struct LogField {
    base: Fq,
    d: usize,
    order: u64,
    modulus: Poly,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl LogField {
    pub fn new(fq: &Fq, d: usize) -> Result<Arc<LogField>> {
        assert!(d >= 1);
        let key = (fq.p(), fq.e(), d);
        static CACHE: OnceLock<Mutex<HashMap<(u64, u32, usize), Arc<LogField>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(hit) = cache.lock().unwrap().get(&key) {
            return Ok(Arc::clone(hit));
        }
        let built = Arc::new(Self::build(fq, d)?);
        cache.lock().unwrap().insert(key, Arc::clone(&built));
        Ok(built)
    }

    fn build(fq: &Fq, d: usize) -> Result<LogField> {
        let order = (fq.q() as u128).pow(d as u32);
        if order > MAX_TABLE as u128 {
            return Err(Error::Resource(format!(
                "residue field of order {order} exceeds the table bound {MAX_TABLE}"
            )));
        }
        let order = order as u64;
        let modulus = if d == 1 {
            Poly::t()
        } else {
            let mut found = None;
            for low in 0..order {
                let f = Poly::add(fq, &Poly::from_code(fq, low), &Poly::monomial(1, d));
                if is_irreducible(fq, &f) {
                    found = Some(f);
                    break;
                }
            }
            found.expect("irreducibles of every degree exist")
        };

        let mul_raw = |a: u64, b: u64| -> u64 {
            let pa = Poly::from_code(fq, a);
            let pb = Poly::from_code(fq, b);
            let prod = Poly::rem(fq, &Poly::mul(fq, &pa, &pb), &modulus).expect("nonzero modulus");
            prod.code(fq)
        };

        // find a generator of the cyclic group of order q^d - 1
        let factors = prime_factors(order - 1);
        let pow_raw = |a: u64, mut n: u64| -> u64 {
            let mut base = a;
            let mut acc = 1u64;
            while n > 0 {
                if n & 1 == 1 {
                    acc = mul_raw(acc, base);
                }
                base = mul_raw(base, base);
                n >>= 1;
            }
            acc
        };
        let mut generator = 0u64;
        for cand in 2..order {
            if factors.iter().all(|&r| pow_raw(cand, (order - 1) / r) != 1) {
                generator = cand;
                break;
            }
        }
        if generator == 0 {
            return Err(Error::Inconsistency("no generator found".into()));
        }

        let mut exp = vec![0u32; (order - 1) as usize];
        let mut log = vec![SENTINEL; order as usize];
        let mut acc = 1u64;
        for (k, slot) in exp.iter_mut().enumerate() {
            *slot = acc as u32;
            log[acc as usize] = k as u32;
            acc = mul_raw(acc, generator);
        }
        if acc != 1 {
            return Err(Error::Inconsistency("generator order mismatch".into()));
        }
        Ok(LogField {
            base: fq.clone(),
            d,
            order,
            modulus,
            exp,
            log,
        })
    }

    pub fn base(&self) -> &Fq {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    /// The class of t modulo the defining modulus.
    pub fn theta(&self) -> u64 {
        if self.d == 1 {
            0
        } else {
            self.base.q()
        }
    }

    #[inline]
    pub fn log(&self, code: u64) -> Option<u32> {
        let v = self.log[code as usize];
        if v == SENTINEL {
            None
        } else {
            Some(v)
        }
    }

    #[inline]
    pub fn exp(&self, k: u64) -> u64 {
        self.exp[(k % (self.order - 1)) as usize] as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if a == 0 {
            return b;
        }
        if b == 0 {
            return a;
        }
        let q = self.base.q();
        let mut out = 0u64;
        let mut mult = 1u64;
        let (mut a, mut b) = (a, b);
        for _ in 0..self.d {
            let da = a % q;
            let db = b % q;
            out += self.base.add(da, db) * mult;
            mult *= q;
            a /= q;
            b /= q;
        }
        out
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            return 0;
        }
        let q = self.base.q();
        let mut out = 0u64;
        let mut mult = 1u64;
        let mut a = a;
        for _ in 0..self.d {
            out += self.base.neg(a % q) * mult;
            mult *= q;
            a /= q;
        }
        out
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        let la = self.log[a as usize] as u64;
        let lb = self.log[b as usize] as u64;
        self.exp(la + lb)
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let la = self.log[a as usize] as u64;
        Ok(self.exp(self.order - 1 - la))
    }

    pub fn pow(&self, a: u64, n: u64) -> u64 {
        if a == 0 {
            return if n == 0 { 1 } else { 0 };
        }
        let la = self.log[a as usize] as u128;
        let k = (la * n as u128) % (self.order as u128 - 1);
        self.exp(k as u64)
    }

    /// Quadratic character from log parity.
    #[inline]
    pub fn legendre(&self, a: u64) -> i8 {
        match self.log(a) {
            None => 0,
            Some(k) => {
                if k % 2 == 0 {
                    1
                } else {
                    -1
                }
            }
        }
    }

    /// Embed a base-field element (constant digit).
    pub fn embed(&self, c: FqElem) -> u64 {
        c
    }

    /// Evaluate a polynomial over F_q at an element of this field.
    pub fn eval_poly(&self, f: &Poly, x: u64) -> u64 {
        let mut acc = 0u64;
        for &c in f.coeffs().iter().rev() {
            acc = self.add(self.mul(acc, x), self.embed(c));
        }
        acc
    }

    /// Size of the Frobenius orbit of a nonzero element given by its log.
    pub fn orbit_size(&self, k: u64) -> usize {
        let m = self.order - 1;
        let q = self.base.q() % m;
        let mut cur = k % m;
        for i in 1..=self.d {
            cur = ((cur as u128 * q as u128) % m as u128) as u64;
            if cur == k % m {
                return i;
            }
        }
        unreachable!("orbit size divides d")
    }

    /// True if log k is the least log among its Frobenius conjugates.
    pub fn is_orbit_rep(&self, k: u64) -> bool {
        let m = self.order - 1;
        let q = self.base.q() % m;
        let mut cur = k;
        for _ in 1..self.d {
            cur = ((cur as u128 * q as u128) % m as u128) as u64;
            if cur < k {
                return false;
            }
        }
        true
    }

    /// Minimal polynomial over F_q of the element with the given code:
    /// the product of X - conjugate over the Frobenius orbit.
    pub fn minimal_polynomial(&self, code: u64) -> Poly {
        if code == 0 {
            return Poly::t();
        }
        let k = self.log[code as usize] as u64;
        let size = self.orbit_size(k);
        let m = self.order - 1;
        let q = self.base.q() % m;
        // coefficients over F_{q^d}, low to high, starting from X - theta
        let mut coeffs: Vec<u64> = vec![self.neg(code), 1];
        let mut conj = k;
        for _ in 1..size {
            conj = ((conj as u128 * q as u128) % m as u128) as u64;
            let root = self.exp(conj);
            let neg_root = self.neg(root);
            let mut next = vec![0u64; coeffs.len() + 1];
            for (i, &c) in coeffs.iter().enumerate() {
                next[i + 1] = self.add(next[i + 1], c);
                next[i] = self.add(next[i], self.mul(c, neg_root));
            }
            coeffs = next;
        }
        let q_base = self.base.q();
        let mut out = Vec::with_capacity(coeffs.len());
        for c in coeffs {
            debug_assert!(c < q_base, "minimal polynomial coefficient not in F_q");
            out.push(c);
        }
        Poly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::factor::monic_irreducibles;

    #[test]
    fn tables_agree_with_generic_arithmetic() {
        let fq = Fq::new(5, 1).unwrap();
        let lf = LogField::new(&fq, 2).unwrap();
        assert_eq!(lf.order(), 25);
        // multiplication through tables matches polynomial arithmetic
        for a in 0..25u64 {
            for b in 0..25u64 {
                let pa = Poly::from_code(&fq, a);
                let pb = Poly::from_code(&fq, b);
                let pr = Poly::rem(&fq, &Poly::mul(&fq, &pa, &pb), lf.modulus()).unwrap();
                assert_eq!(lf.mul(a, b), pr.code(&fq));
                let ps = Poly::add(&fq, &pa, &pb);
                assert_eq!(lf.add(a, b), ps.code(&fq));
            }
        }
    }

    #[test]
    fn minimal_polynomials_enumerate_irreducibles() {
        let fq = Fq::new(5, 1).unwrap();
        for d in [1usize, 2, 3] {
            let lf = LogField::new(&fq, d).unwrap();
            let mut polys = Vec::new();
            if d == 1 {
                polys.push(lf.minimal_polynomial(0));
            }
            for k in 0..lf.order() - 1 {
                if lf.orbit_size(k) == d && lf.is_orbit_rep(k) {
                    let mp = lf.minimal_polynomial(lf.exp(k));
                    assert_eq!(mp.degree(), Some(d));
                    // theta really is a root
                    assert_eq!(lf.eval_poly(&mp, lf.exp(k)), 0);
                    polys.push(mp);
                }
            }
            let mut expected: Vec<Poly> = monic_irreducibles(&fq, d).as_ref().clone();
            expected.sort();
            polys.sort();
            polys.dedup();
            assert_eq!(polys, expected, "d = {d}");
        }
    }

    #[test]
    fn legendre_matches_generic() {
        let fq = Fq::new(7, 1).unwrap();
        let lf = LogField::new(&fq, 1).unwrap();
        for a in 0..7u64 {
            assert_eq!(lf.legendre(a), fq.legendre(a));
        }
    }
}
