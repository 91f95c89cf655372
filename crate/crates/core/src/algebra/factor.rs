//! Irreducibility, enumeration of monic irreducibles, and factorization
//! over F_q. Cantor–Zassenhaus splitting is seeded from the polynomial
//! itself so factorizations are reproducible across runs.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::field::{prime_factors, Fq};
use super::poly::Poly;
use crate::util::{fnv1a64, SplitMix64};

/// x^(q^k) mod f by iterating the q-power map.
fn frobenius_mod(fq: &Fq, f: &Poly, k: usize) -> Poly {
    let mut x = Poly::rem(fq, &Poly::t(), f).expect("nonzero modulus");
    for _ in 0..k {
        x = polymod_pow(fq, &x, fq.q() as u128, f);
    }
    x
}

fn polymod_pow(fq: &Fq, a: &Poly, mut n: u128, f: &Poly) -> Poly {
    let mut base = Poly::rem(fq, a, f).expect("nonzero modulus");
    let mut acc = Poly::one();
    while n > 0 {
        if n & 1 == 1 {
            acc = Poly::rem(fq, &Poly::mul(fq, &acc, &base), f).expect("nonzero modulus");
        }
        base = Poly::rem(fq, &Poly::mul(fq, &base, &base), f).expect("nonzero modulus");
        n >>= 1;
    }
    acc
}

/// Irreducibility of a monic polynomial of degree >= 1.
pub fn is_irreducible(fq: &Fq, f: &Poly) -> bool {
    let d = match f.degree() {
        None | Some(0) => return false,
        Some(d) => d,
    };
    if d == 1 {
        return true;
    }
    let x = Poly::rem(fq, &Poly::t(), f).expect("nonzero modulus");
    // x^(q^d) = x mod f
    if frobenius_mod(fq, f, d) != x {
        return false;
    }
    for r in prime_factors(d as u64) {
        let k = d / r as usize;
        let diff = Poly::sub(fq, &frobenius_mod(fq, f, k), &x);
        if !Poly::gcd(fq, &diff, f).is_one() {
            return false;
        }
    }
    true
}

type IrredKey = (u64, u32, usize);
static IRRED_CACHE: OnceLock<Mutex<HashMap<IrredKey, Arc<Vec<Poly>>>>> = OnceLock::new();

/// All monic irreducibles of degree d over F_q, ordered by packed
/// coefficient code (constant coefficient least significant). The list is
/// memoized per (p, e, d).
pub fn monic_irreducibles(fq: &Fq, d: usize) -> Arc<Vec<Poly>> {
    assert!(d >= 1, "degree must be positive");
    let key = (fq.p(), fq.e(), d);
    let cache = IRRED_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&key) {
        return Arc::clone(hit);
    }
    let mut out = Vec::new();
    let q = fq.q();
    let count = q.pow(d as u32);
    for low_code in 0..count {
        let mut f = Poly::from_code(fq, low_code);
        f = Poly::add(fq, &f, &Poly::monomial(1, d));
        if is_irreducible(fq, &f) {
            out.push(f);
        }
    }
    let arc = Arc::new(out);
    cache
        .lock()
        .unwrap()
        .insert(key, Arc::clone(&arc));
    arc
}

/// Factorization of a nonzero polynomial into monic irreducibles with
/// multiplicities, together with the leading unit. Factors are sorted by
/// (degree, coefficient codes) so the output is canonical.
pub fn factor(fq: &Fq, f: &Poly) -> (u64, Vec<(Poly, u32)>) {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let unit = f.leading();
    let monic = f.monic(fq);
    let mut found: HashMap<Poly, u32> = HashMap::new();
    factor_rec(fq, &monic, 1, &mut found);
    let mut out: Vec<(Poly, u32)> = found.into_iter().collect();
    out.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| a.0.coeffs().cmp(b.0.coeffs()))
    });
    (unit, out)
}

fn factor_rec(fq: &Fq, f: &Poly, mult: u32, found: &mut HashMap<Poly, u32>) {
    match f.degree() {
        None | Some(0) => return,
        _ => {}
    }
    let deriv = f.derivative(fq);
    if deriv.is_zero() {
        // f = h(t^p); its factorization is that of h with multiplicities * p
        let h = f.pth_root(fq).expect("f'(t) = 0 forces p-th power shape");
        factor_rec(fq, &h, mult * fq.p() as u32, found);
        return;
    }
    let g = Poly::gcd(fq, f, &deriv);
    if !g.is_one() {
        let rest = Poly::div_exact(fq, f, &g).expect("gcd divides");
        factor_rec(fq, &g, mult, found);
        factor_rec(fq, &rest, mult, found);
        return;
    }
    // squarefree: distinct-degree then equal-degree splitting
    let mut remaining = f.clone();
    let mut frob = Poly::rem(fq, &Poly::t(), f).expect("nonzero modulus");
    let x = frob.clone();
    let mut d = 0usize;
    while remaining.degree().map_or(false, |deg| deg > 0) {
        d += 1;
        if remaining.degree() == Some(d) {
            *found.entry(remaining.monic(fq)).or_insert(0) += mult;
            break;
        }
        if 2 * d > remaining.degree().unwrap_or(0) {
            // remaining itself is irreducible
            *found.entry(remaining.monic(fq)).or_insert(0) += mult;
            break;
        }
        frob = polymod_pow(fq, &frob, fq.q() as u128, &remaining);
        let split = Poly::gcd(fq, &Poly::sub(fq, &frob, &x), &remaining);
        if split.degree().map_or(false, |deg| deg > 0) {
            equal_degree_split(fq, &split, d, mult, found);
            remaining = Poly::div_exact(fq, &remaining, &split).expect("gcd divides");
            frob = Poly::rem(fq, &frob, &remaining).expect("nonzero modulus");
        }
    }
}

/// Cantor–Zassenhaus equal-degree factorization (odd q).
fn equal_degree_split(fq: &Fq, f: &Poly, d: usize, mult: u32, found: &mut HashMap<Poly, u32>) {
    let deg = f.degree().expect("nonzero");
    if deg == d {
        *found.entry(f.monic(fq)).or_insert(0) += mult;
        return;
    }
    let mut seed_bytes = Vec::new();
    for &c in f.coeffs() {
        seed_bytes.extend_from_slice(&c.to_le_bytes());
    }
    let mut rng = SplitMix64::new(fnv1a64(&seed_bytes));
    let qd = (fq.q() as u128).pow(d as u32);
    let exp = (qd - 1) / 2;
    loop {
        let mut coeffs = Vec::with_capacity(2 * d);
        for _ in 0..2 * d {
            coeffs.push(rng.below(fq.q()));
        }
        let r = Poly::new(coeffs);
        if r.degree().is_none() {
            continue;
        }
        let g = Poly::gcd(fq, &r, f);
        let candidate = if !g.is_one() && g.degree() != f.degree() {
            g
        } else {
            let pw = polymod_pow(fq, &r, exp, f);
            let shifted = Poly::sub(fq, &pw, &Poly::one());
            let h = Poly::gcd(fq, &shifted, f);
            if h.is_one() || h.degree() == f.degree() {
                continue;
            }
            h
        };
        let other = Poly::div_exact(fq, f, &candidate).expect("divides");
        equal_degree_split(fq, &candidate, d, mult, found);
        equal_degree_split(fq, &other, d, mult, found);
        return;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> Fq {
        Fq::new(5, 1).unwrap()
    }

    #[test]
    fn irreducible_counts_match_moebius_formula() {
        // #monic irreducibles of degree d = (1/d) sum_{e|d} mu(e) q^(d/e)
        let cases = [(5u64, 1usize, 5u64), (5, 2, 10), (7, 2, 21), (5, 3, 40)];
        for (q, d, expect) in cases {
            let fq = Fq::from_order(q).unwrap();
            let list = monic_irreducibles(&fq, d);
            assert_eq!(list.len() as u64, expect, "q={q} d={d}");
            for f in list.iter() {
                assert!(is_irreducible(&fq, f));
                assert_eq!(f.leading(), 1);
                assert_eq!(f.degree(), Some(d));
            }
        }
    }

    #[test]
    fn factor_recovers_structure() {
        let fq = f5();
        // (t-1)^2 (t^2+2) t
        let a = Poly::new(vec![4, 1]);
        let b = Poly::new(vec![2, 0, 1]);
        assert!(is_irreducible(&fq, &b));
        let f = Poly::mul(
            &fq,
            &Poly::mul(&fq, &Poly::mul(&fq, &a, &a), &b),
            &Poly::t(),
        );
        let f = Poly::scale(&fq, &f, 3);
        let (unit, factors) = factor(&fq, &f);
        assert_eq!(unit, 3);
        assert_eq!(
            factors,
            vec![(Poly::t(), 1), (a.clone(), 2), (b.clone(), 1)]
        );
    }

    #[test]
    fn factor_pth_power() {
        let fq = f5();
        let a = Poly::new(vec![1, 1]);
        let f = Poly::pow(&fq, &a, 5);
        let (_, factors) = factor(&fq, &f);
        assert_eq!(factors, vec![(a, 5)]);
    }

    #[test]
    fn factor_roundtrip_random() {
        let fq = Fq::new(7, 1).unwrap();
        let mut rng = SplitMix64::new(42);
        for _ in 0..40 {
            let deg = 1 + (rng.below(8) as usize);
            let mut coeffs: Vec<u64> = (0..deg).map(|_| rng.below(7)).collect();
            coeffs.push(1 + rng.below(6));
            let f = Poly::new(coeffs);
            if f.degree().is_none() {
                continue;
            }
            let (unit, factors) = factor(&fq, &f);
            let mut back = Poly::constant(unit);
            for (g, m) in &factors {
                assert!(is_irreducible(&fq, g), "non-irreducible factor {g:?}");
                back = Poly::mul(&fq, &back, &Poly::pow(&fq, g, *m as u64));
            }
            assert_eq!(back, f);
        }
    }
}
