//! Text syntax for polynomials and rational functions.
//!
//! Terms `c*t^k` joined by `+`/`-`, whitespace-insensitive. Coefficients are
//! integers (reduced mod p) or, in an extension field, powers `g^j` of the
//! fixed generator. Parsing accepts any single-letter variable except `g`;
//! printing always uses `t`. Printing and parsing round-trip.

use super::field::{Fq, FqElem};
use super::poly::Poly;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

pub fn poly_to_string(fq: &Fq, p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut parts: Vec<String> = Vec::new();
    for (k, &c) in p.coeffs().iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let coeff = coeff_to_string(fq, c);
        let part = match k {
            0 => coeff,
            _ => {
                let var = if k == 1 {
                    "t".to_string()
                } else {
                    format!("t^{k}")
                };
                if coeff == "1" {
                    var
                } else {
                    format!("{coeff}*{var}")
                }
            }
        };
        parts.push(part);
    }
    parts.join(" + ")
}

fn coeff_to_string(fq: &Fq, c: FqElem) -> String {
    if c < fq.p() {
        return c.to_string();
    }
    // extension element: write as a generator power
    let j = fq.dlog(c).expect("nonzero element has a discrete log");
    if j == 1 {
        "g".to_string()
    } else {
        format!("g^{j}")
    }
}

pub fn ratfunc_to_string(fq: &Fq, f: &RatFunc) -> String {
    if f.is_polynomial() {
        poly_to_string(fq, f.num())
    } else {
        format!(
            "({})/({})",
            poly_to_string(fq, f.num()),
            poly_to_string(fq, f.den())
        )
    }
}

pub fn poly_from_str(fq: &Fq, s: &str) -> Result<Poly> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty polynomial text".into()));
    }
    let mut acc = Poly::zero();
    let mut term = String::new();
    let mut sign = 1i64;
    let mut chars = compact.chars().peekable();
    // leading sign
    if let Some(&c) = chars.peek() {
        if c == '+' || c == '-' {
            sign = if c == '-' { -1 } else { 1 };
            chars.next();
        }
    }
    let mut depth = 0i32;
    for c in chars {
        match c {
            '(' => {
                depth += 1;
                term.push(c);
            }
            ')' => {
                depth -= 1;
                term.push(c);
            }
            '+' | '-' if depth == 0 => {
                let t = parse_term(fq, &term, sign)?;
                acc = Poly::add(fq, &acc, &t);
                term.clear();
                sign = if c == '-' { -1 } else { 1 };
            }
            _ => term.push(c),
        }
    }
    let t = parse_term(fq, &term, sign)?;
    acc = Poly::add(fq, &acc, &t);
    Ok(acc)
}

fn parse_term(fq: &Fq, term: &str, sign: i64) -> Result<Poly> {
    if term.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    let mut coeff: FqElem = fq.from_int(sign);
    let mut degree: usize = 0;
    for factor in term.split('*') {
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in term '{term}'")));
        }
        let (base, exp) = match factor.split_once('^') {
            Some((b, e)) => {
                let exp: u64 = e
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent '{e}'")))?;
                (b, exp)
            }
            None => (factor, 1),
        };
        if base == "g" {
            if fq.e() == 1 {
                return Err(Error::Parse(
                    "generator symbol g is only valid for extension fields".into(),
                ));
            }
            coeff = fq.mul(coeff, fq.pow(fq.generator(), exp));
        } else if base.len() == 1 && base.chars().next().unwrap().is_ascii_alphabetic() {
            degree += exp as usize;
        } else {
            let n: i64 = base
                .parse()
                .map_err(|_| Error::Parse(format!("bad factor '{base}'")))?;
            let mut v = fq.from_int(n);
            v = fq.pow(v, exp);
            coeff = fq.mul(coeff, v);
        }
    }
    Ok(Poly::monomial(coeff, degree))
}

pub fn ratfunc_from_str(fq: &Fq, s: &str) -> Result<RatFunc> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if let Some((n, d)) = split_top_level_slash(&compact) {
        let num = poly_from_str(fq, strip_parens(n))?;
        let den = poly_from_str(fq, strip_parens(d))?;
        RatFunc::new(fq, num, den)
    } else {
        Ok(RatFunc::from_poly(poly_from_str(fq, &compact)?))
    }
}

fn split_top_level_slash(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '/' if depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}

fn strip_parens(s: &str) -> &str {
    let t = s.trim();
    if t.starts_with('(') && t.ends_with(')') {
        let inner = &t[1..t.len() - 1];
        // only strip if the parens actually match each other
        let mut depth = 0i32;
        for (i, c) in inner.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth < 0 && i != inner.len() {
                        return t;
                    }
                }
                _ => {}
            }
        }
        if depth == 0 {
            return inner;
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> Fq {
        Fq::new(5, 1).unwrap()
    }

    #[test]
    fn parse_simple() {
        let fq = f5();
        assert_eq!(
            poly_from_str(&fq, "t^2 + 1").unwrap(),
            Poly::new(vec![1, 0, 1])
        );
        assert_eq!(poly_from_str(&fq, "3*t").unwrap(), Poly::new(vec![0, 3]));
        assert_eq!(poly_from_str(&fq, "-1").unwrap(), Poly::constant(4));
        assert_eq!(
            poly_from_str(&fq, "2*t^3 - t + 4").unwrap(),
            Poly::new(vec![4, 4, 0, 2])
        );
        // uppercase variable accepted
        assert_eq!(poly_from_str(&fq, "T^2").unwrap(), Poly::monomial(1, 2));
        assert!(poly_from_str(&fq, "t^").is_err());
        assert!(poly_from_str(&fq, "").is_err());
        assert!(poly_from_str(&fq, "t + + 1").is_err());
    }

    #[test]
    fn print_parse_roundtrip() {
        let fq = f5();
        for code in [0u64, 1, 7, 26, 125, 3124, 444] {
            let p = Poly::from_code(&fq, code);
            let s = poly_to_string(&fq, &p);
            assert_eq!(poly_from_str(&fq, &s).unwrap(), p, "text: {s}");
        }
    }

    #[test]
    fn extension_field_generator_coeffs() {
        let fq = Fq::new(5, 2).unwrap();
        let g = fq.generator();
        let p = Poly::new(vec![2, g]);
        let s = poly_to_string(&fq, &p);
        assert_eq!(poly_from_str(&fq, &s).unwrap(), p);
        let q = poly_from_str(&fq, "g^3*t^2 + g + 1").unwrap();
        let expect = Poly::new(vec![fq.add(g, 1), 0, fq.pow(g, 3)]);
        assert_eq!(q, expect);
    }

    #[test]
    fn ratfunc_roundtrip() {
        let fq = f5();
        let f = RatFunc::new(&fq, Poly::new(vec![1, 1]), Poly::new(vec![0, 0, 1])).unwrap();
        let s = ratfunc_to_string(&fq, &f);
        assert_eq!(ratfunc_from_str(&fq, &s).unwrap(), f);
        let g = ratfunc_from_str(&fq, "(t+1)/(t^2)").unwrap();
        assert_eq!(g, f);
    }
}
