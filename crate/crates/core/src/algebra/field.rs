//! The finite field F_q, q = p^e with p > 3 prime.
//!
//! Elements are stored as packed codes: the power-basis coordinates
//! (c_0, ..., c_{e-1}) over F_p become the integer sum c_i * p^i < q.
//! All arithmetic goes through an explicit `&Fq` context, so elements stay
//! `Copy` and allocation-free.
//!
//! The defining modulus is chosen deterministically from (p, e): the
//! lexicographically least monic irreducible of degree e over F_p whose
//! root generates the multiplicative group. Reconstructing the field from
//! (p, e) therefore always yields identical element codes.

use crate::error::{Error, Result};

/// An element of F_q, as a packed code. Only meaningful together with the
/// `Fq` that produced it.
pub type FqElem = u64;

const MAX_EXT_DEGREE: u32 = 12;

/// Parameters of the constant field F_q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fq {
    p: u64,
    e: u32,
    q: u64,
    /// Monic irreducible of degree e over F_p, low-to-high coefficients.
    /// For e = 1 this is the polynomial y and is never consulted.
    modulus: Vec<u64>,
    /// A fixed generator of F_q^*. For e > 1 this is the class of y.
    generator: FqElem,
}

fn is_prime(n: u64) -> bool {
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

/// Prime factors of n, without multiplicity.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl Fq {
    /// Builds F_q for q = p^e. Rejects p ≤ 3, composite p, and e = 0.
    pub fn new(p: u64, e: u32) -> Result<Fq> {
        if p <= 3 {
            return Err(Error::InvalidField(format!(
                "characteristic must exceed 3, got {p}"
            )));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if e == 0 || e > MAX_EXT_DEGREE {
            return Err(Error::InvalidField(format!(
                "extension degree must be in 1..={MAX_EXT_DEGREE}, got {e}"
            )));
        }
        let mut q: u64 = 1;
        for _ in 0..e {
            q = q
                .checked_mul(p)
                .ok_or_else(|| Error::InvalidField("q overflows u64".into()))?;
        }
        if e == 1 {
            let generator = least_primitive_root(p);
            return Ok(Fq {
                p,
                e,
                q,
                modulus: vec![0, 1],
                generator,
            });
        }
        let modulus = least_primitive_modulus(p, e, q)?;
        Ok(Fq {
            p,
            e,
            q,
            modulus,
            generator: p, // the class of y, code p^1
        })
    }

    /// Builds F_q from a prime power q.
    pub fn from_order(q: u64) -> Result<Fq> {
        let factors = prime_factors(q);
        if factors.len() != 1 {
            return Err(Error::InvalidField(format!("{q} is not a prime power")));
        }
        let p = factors[0];
        let mut e = 0u32;
        let mut m = q;
        while m > 1 {
            m /= p;
            e += 1;
        }
        Fq::new(p, e)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// The fixed generator of F_q^*.
    pub fn generator(&self) -> FqElem {
        self.generator
    }

    pub fn zero(&self) -> FqElem {
        0
    }

    pub fn one(&self) -> FqElem {
        1
    }

    /// Embeds a signed integer via reduction mod p.
    pub fn from_int(&self, n: i64) -> FqElem {
        let p = self.p as i64;
        (((n % p) + p) % p) as u64
    }

    pub fn elements(&self) -> impl Iterator<Item = FqElem> {
        0..self.q
    }

    fn decode(&self, a: FqElem) -> [u64; MAX_EXT_DEGREE as usize] {
        let mut out = [0u64; MAX_EXT_DEGREE as usize];
        let mut a = a;
        for slot in out.iter_mut().take(self.e as usize) {
            *slot = a % self.p;
            a /= self.p;
        }
        out
    }

    fn encode(&self, digits: &[u64]) -> FqElem {
        let mut code = 0u64;
        for &d in digits[..self.e as usize].iter().rev() {
            code = code * self.p + d;
        }
        code
    }

    pub fn add(&self, a: FqElem, b: FqElem) -> FqElem {
        if self.e == 1 {
            return (a + b) % self.p;
        }
        let da = self.decode(a);
        let db = self.decode(b);
        let mut out = [0u64; MAX_EXT_DEGREE as usize];
        for i in 0..self.e as usize {
            out[i] = (da[i] + db[i]) % self.p;
        }
        self.encode(&out)
    }

    pub fn neg(&self, a: FqElem) -> FqElem {
        if self.e == 1 {
            return if a == 0 { 0 } else { self.p - a };
        }
        let da = self.decode(a);
        let mut out = [0u64; MAX_EXT_DEGREE as usize];
        for i in 0..self.e as usize {
            out[i] = if da[i] == 0 { 0 } else { self.p - da[i] };
        }
        self.encode(&out)
    }

    pub fn sub(&self, a: FqElem, b: FqElem) -> FqElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FqElem, b: FqElem) -> FqElem {
        if self.e == 1 {
            return (a * b) % self.p;
        }
        if a == 0 || b == 0 {
            return 0;
        }
        let da = self.decode(a);
        let db = self.decode(b);
        let e = self.e as usize;
        let mut conv = [0u64; 2 * MAX_EXT_DEGREE as usize];
        for i in 0..e {
            if da[i] == 0 {
                continue;
            }
            for j in 0..e {
                conv[i + j] = (conv[i + j] + da[i] * db[j]) % self.p;
            }
        }
        // reduce by the monic modulus: y^e = -(mu_0 + ... + mu_{e-1} y^{e-1})
        for k in (e..2 * e - 1).rev() {
            let c = conv[k];
            if c == 0 {
                continue;
            }
            conv[k] = 0;
            for (i, &mu) in self.modulus[..e].iter().enumerate() {
                let sub = (c * mu) % self.p;
                conv[k - e + i] = (conv[k - e + i] + self.p - sub) % self.p;
            }
        }
        self.encode(&conv)
    }

    pub fn pow(&self, a: FqElem, mut n: u64) -> FqElem {
        let mut base = a;
        let mut acc = 1u64;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FqElem) -> Result<FqElem> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.q - 2))
    }

    /// The quadratic character of F_q: +1 on nonzero squares, -1 on
    /// non-squares, 0 at 0. Computed as a^((q-1)/2).
    pub fn legendre(&self, a: FqElem) -> i8 {
        if a == 0 {
            return 0;
        }
        let v = self.pow(a, (self.q - 1) / 2);
        if v == 1 {
            1
        } else {
            -1
        }
    }

    /// The arithmetic Frobenius a -> a^p.
    pub fn frobenius(&self, a: FqElem) -> FqElem {
        if self.e == 1 {
            return a;
        }
        self.pow(a, self.p)
    }

    /// The inverse of Frobenius: the unique b with b^p = a.
    /// Frobenius is bijective on F_q, and b = a^(p^(e-1)).
    pub fn inv_frobenius(&self, a: FqElem) -> FqElem {
        if self.e == 1 {
            return a;
        }
        let mut n = 1u64;
        for _ in 0..self.e - 1 {
            n *= self.p;
        }
        self.pow(a, n)
    }

    /// Discrete log with respect to the fixed generator; exhaustive, meant
    /// for printing elements of small extension fields.
    pub fn dlog(&self, a: FqElem) -> Option<u64> {
        if a == 0 {
            return None;
        }
        let mut acc = 1u64;
        for k in 0..self.q - 1 {
            if acc == a {
                return Some(k);
            }
            acc = self.mul(acc, self.generator);
        }
        None
    }
}

fn least_primitive_root(p: u64) -> u64 {
    let factors = prime_factors(p - 1);
    'outer: for g in 2..p {
        for &r in &factors {
            // g^((p-1)/r) mod p
            let mut acc = 1u64;
            let mut base = g;
            let mut n = (p - 1) / r;
            while n > 0 {
                if n & 1 == 1 {
                    acc = acc * base % p;
                }
                base = base * base % p;
                n >>= 1;
            }
            if acc == 1 {
                continue 'outer;
            }
        }
        return g;
    }
    unreachable!("every prime has a primitive root")
}

/// Least monic irreducible of degree e over F_p (by the packed-code order of
/// its non-leading coefficients) whose root generates F_q^*.
fn least_primitive_modulus(p: u64, e: u32, q: u64) -> Result<Vec<u64>> {
    let fp = Fq::new(p, 1)?;
    let e = e as usize;
    let factors = prime_factors(q - 1);
    let mut code = 0u64;
    loop {
        if code >= q {
            return Err(Error::InvalidField(format!(
                "no primitive modulus of degree {e} over F_{p} (exhausted search)"
            )));
        }
        let mut coeffs: Vec<u64> = Vec::with_capacity(e + 1);
        let mut c = code;
        for _ in 0..e {
            coeffs.push(c % p);
            c /= p;
        }
        coeffs.push(1);
        if poly_irreducible_fp(&fp, &coeffs) && root_is_primitive(&fp, &coeffs, q, &factors) {
            return Ok(coeffs);
        }
        code += 1;
    }
}

/// Irreducibility of a monic polynomial over F_p via the Frobenius criterion:
/// y^(p^e) = y mod f and gcd(y^(p^(e/r)) - y, f) = 1 for prime r | e.
fn poly_irreducible_fp(fp: &Fq, f: &[u64]) -> bool {
    let e = f.len() - 1;
    if e == 1 {
        return true;
    }
    let y = vec![0, 1];
    let mut fr = y.clone();
    let mut frob_powers = Vec::new();
    for _ in 0..e {
        fr = fp_polymod_pow_p(fp, &fr, f);
        frob_powers.push(fr.clone());
    }
    if frob_powers[e - 1] != y {
        return false;
    }
    for &r in &prime_factors(e as u64) {
        let k = e / r as usize;
        let diff = fp_poly_sub(fp, &frob_powers[k - 1], &y);
        if fp_poly_gcd_deg(fp, &diff, f) != 0 {
            return false;
        }
    }
    true
}

fn root_is_primitive(fp: &Fq, f: &[u64], q: u64, factors: &[u64]) -> bool {
    for &r in factors {
        if fp_polymod_pow(fp, &[0, 1], (q - 1) / r, f) == vec![1] {
            return false;
        }
    }
    true
}

// Minimal F_p[y] helpers used only while bootstrapping a modulus.

fn fp_poly_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn fp_poly_sub(fp: &Fq, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = fp.sub(x, y);
    }
    fp_poly_trim(&mut out);
    out
}

fn fp_poly_mulmod(fp: &Fq, a: &[u64], b: &[u64], f: &[u64]) -> Vec<u64> {
    let mut conv = vec![0u64; a.len() + b.len().max(1)];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            conv[i + j] = fp.add(conv[i + j], fp.mul(x, y));
        }
    }
    // reduce by monic f
    let d = f.len() - 1;
    for k in (d..conv.len()).rev() {
        let c = conv[k];
        if c == 0 {
            continue;
        }
        conv[k] = 0;
        for i in 0..d {
            let sub = fp.mul(c, f[i]);
            conv[k - d + i] = fp.sub(conv[k - d + i], sub);
        }
    }
    conv.truncate(d);
    fp_poly_trim(&mut conv);
    conv
}

fn fp_polymod_pow(fp: &Fq, a: &[u64], mut n: u64, f: &[u64]) -> Vec<u64> {
    let mut base = a.to_vec();
    let mut acc = vec![1u64];
    while n > 0 {
        if n & 1 == 1 {
            acc = fp_poly_mulmod(fp, &acc, &base, f);
        }
        base = fp_poly_mulmod(fp, &base, &base, f);
        n >>= 1;
    }
    acc
}

fn fp_polymod_pow_p(fp: &Fq, a: &[u64], f: &[u64]) -> Vec<u64> {
    fp_polymod_pow(fp, a, fp.p(), f)
}

fn fp_poly_gcd_deg(fp: &Fq, a: &[u64], b: &[u64]) -> usize {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    while !b.is_empty() {
        // a mod b
        let db = b.len() - 1;
        let lead_inv = fp.inv(b[db]).expect("nonzero leading coefficient");
        while a.len() > db && !a.is_empty() {
            let da = a.len() - 1;
            if da < db {
                break;
            }
            let c = fp.mul(a[da], lead_inv);
            if c != 0 {
                for i in 0..=db {
                    let t = fp.mul(c, b[i]);
                    a[da - db + i] = fp.sub(a[da - db + i], t);
                }
            }
            fp_poly_trim(&mut a);
            if a.len() <= db {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    if a.is_empty() {
        0
    } else {
        a.len() - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_small_or_composite_characteristic() {
        assert!(Fq::new(3, 1).is_err());
        assert!(Fq::new(2, 1).is_err());
        assert!(Fq::new(15, 1).is_err());
        assert!(Fq::new(5, 0).is_err());
    }

    #[test]
    fn f5_basics() {
        let f = Fq::new(5, 1).unwrap();
        assert_eq!(f.add(3, 4), 2);
        assert_eq!(f.mul(3, 4), 2);
        assert_eq!(f.inv(2).unwrap(), 3);
        assert_eq!(f.from_int(-16), 4);
        assert_eq!(f.from_int(27), 2);
    }

    #[test]
    fn legendre_f5() {
        let f = Fq::new(5, 1).unwrap();
        // squares of F_5 are {0, 1, 4}
        assert_eq!(f.legendre(f.from_int(-1)), 1); // -1 = 4 = 2^2
        assert_eq!(f.legendre(2), -1);
        assert_eq!(f.legendre(0), 0);
        assert_eq!(f.legendre(1), 1);
        assert_eq!(f.legendre(3), -1);
    }

    #[test]
    fn legendre_multiplicative() {
        for q in [5u64, 7, 25, 49] {
            let f = Fq::from_order(q).unwrap();
            for a in 1..q {
                for b in 1..q {
                    assert_eq!(
                        f.legendre(f.mul(a, b)),
                        f.legendre(a) * f.legendre(b),
                        "q={q} a={a} b={b}"
                    );
                }
                let inv = f.inv(a).unwrap();
                assert_eq!(f.legendre(a) * f.legendre(inv), 1);
            }
        }
    }

    #[test]
    fn field_axioms_f25() {
        let f = Fq::new(5, 2).unwrap();
        assert_eq!(f.q(), 25);
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
            }
            if a != 0 {
                let i = f.inv(a).unwrap();
                assert_eq!(f.mul(a, i), 1);
            }
        }
        // associativity and distributivity, spot sample
        for a in f.elements() {
            for b in [1u64, 7, 13, 24] {
                for c in [2u64, 5, 11, 19] {
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn generator_has_full_order() {
        for q in [5u64, 7, 11, 25, 49] {
            let f = Fq::from_order(q).unwrap();
            let g = f.generator();
            let mut seen = std::collections::HashSet::new();
            let mut acc = 1u64;
            for _ in 0..q - 1 {
                seen.insert(acc);
                acc = f.mul(acc, g);
            }
            assert_eq!(acc, 1);
            assert_eq!(seen.len(), (q - 1) as usize);
        }
    }

    #[test]
    fn inv_frobenius_is_pth_root() {
        // round-trip over whole fields of order <= 49
        for q in [5u64, 7, 11, 13, 25, 49] {
            let f = Fq::from_order(q).unwrap();
            for a in f.elements() {
                let b = f.inv_frobenius(a);
                assert_eq!(f.pow(b, f.p()), a, "q={q} a={a}");
                assert_eq!(f.inv_frobenius(f.pow(a, f.p())), a);
            }
        }
    }

    #[test]
    fn inv_frobenius_of_generator_by_exhaustion() {
        // independent oracle: exhaustive search for the unique 5th root
        let f = Fq::new(5, 2).unwrap();
        let g = f.generator();
        let mut found = None;
        for b in f.elements() {
            if f.pow(b, 5) == g {
                assert!(found.is_none(), "p-th root must be unique");
                found = Some(b);
            }
        }
        assert_eq!(found.unwrap(), f.inv_frobenius(g));
    }

    #[test]
    fn frobenius_on_prime_field_is_identity() {
        let f = Fq::new(5, 1).unwrap();
        assert_eq!(f.inv_frobenius(2), 2);
        assert_eq!(f.inv_frobenius(0), 0);
    }

    #[test]
    fn deterministic_modulus() {
        let a = Fq::new(5, 2).unwrap();
        let b = Fq::new(5, 2).unwrap();
        assert_eq!(a.modulus(), b.modulus());
        assert_eq!(a.generator(), b.generator());
    }
}
