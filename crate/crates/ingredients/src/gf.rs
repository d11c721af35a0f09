//! Small finite fields GF(p^e), used for MOLS and affine-geometry
//! constructions. Elements are indices into precomputed add/mul tables.

/// p^e <= this bound keeps table sizes trivial for everything we build.
const MAX_ORDER: usize = 1 << 12;

pub struct Gf {
    pub q: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
}

pub fn prime_power(n: usize) -> Option<(usize, u32)> {
    if n < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut m = n;
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            return if m == 1 { Some((p, e)) } else { None };
        }
        p += 1;
    }
    Some((n, 1))
}

impl Gf {
    pub fn new(q: usize) -> Option<Gf> {
        let (p, e) = prime_power(q)?;
        if q > MAX_ORDER {
            return None;
        }
        // elements are base-p digit vectors, i.e. polynomials over GF(p)
        // of degree < e, reduced modulo a monic irreducible of degree e
        let irred = find_irreducible(p, e);
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            for b in 0..q {
                add[a * q + b] = add_poly(a, b, p, e);
                mul[a * q + b] = mul_poly(a, b, p, e, &irred);
            }
        }
        Some(Gf { q, add, mul })
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b]
    }
}

fn digits(mut x: usize, p: usize, e: u32) -> Vec<usize> {
    let mut d = Vec::with_capacity(e as usize);
    for _ in 0..e {
        d.push(x % p);
        x /= p;
    }
    d
}

fn undigits(d: &[usize], p: usize) -> usize {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn add_poly(a: usize, b: usize, p: usize, e: u32) -> usize {
    let (da, db) = (digits(a, p, e), digits(b, p, e));
    let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
    undigits(&sum, p)
}

/// Multiply then reduce by the irreducible (given as coefficient vector of
/// length e+1, monic).
fn mul_poly(a: usize, b: usize, p: usize, e: u32, irred: &[usize]) -> usize {
    let e = e as usize;
    let (da, db) = (digits(a, p, e as u32), digits(b, p, e as u32));
    let mut prod = vec![0usize; 2 * e];
    for (i, &x) in da.iter().enumerate() {
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for i in (e..2 * e).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        prod[i] = 0;
        // x^i = x^(i-e) * (x^e mod irred); x^e == -(low terms of irred)
        for j in 0..e {
            let sub = (c * irred[j]) % p;
            prod[i - e + j] = (prod[i - e + j] + p - sub) % p;
        }
    }
    undigits(&prod[..e], p)
}

/// Smallest monic irreducible of degree e over GF(p), by brute force root
/// and factor checking (degrees here never exceed ~12 over tiny primes).
fn find_irreducible(p: usize, e: u32) -> Vec<usize> {
    let e = e as usize;
    if e == 1 {
        return vec![0, 1];
    }
    let count = p.pow(e as u32);
    for low in 0..count {
        let mut poly = digits(low, p, e as u32);
        poly.push(1);
        if is_irreducible(&poly, p) {
            return poly;
        }
    }
    unreachable!("irreducible polynomials exist for every degree");
}

fn is_irreducible(poly: &[usize], p: usize) -> bool {
    let e = poly.len() - 1;
    // check for factors of each degree up to e/2 by trial division over
    // all monic polynomials of that degree
    for d in 1..=e / 2 {
        let count = p.pow(d as u32);
        for low in 0..count {
            let mut div = digits(low, p, d as u32);
            div.push(1);
            if divides(poly, &div, p) {
                return false;
            }
        }
    }
    true
}

fn divides(poly: &[usize], div: &[usize], p: usize) -> bool {
    let mut rem: Vec<usize> = poly.to_vec();
    let d = div.len() - 1;
    while rem.len() > d {
        let lead = *rem.last().unwrap();
        if lead != 0 {
            let shift = rem.len() - 1 - d;
            for (j, &c) in div.iter().enumerate() {
                let sub = (lead * c) % p;
                rem[shift + j] = (rem[shift + j] + p - sub) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_is_a_field() {
        let f = Gf::new(4).unwrap();
        // every nonzero element has an inverse
        for a in 1..4 {
            assert!((1..4).any(|b| f.mul(a, b) == 1), "no inverse for {a}");
        }
        // characteristic 2
        for a in 0..4 {
            assert_eq!(f.add(a, a), 0);
        }
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(49), Some((7, 2)));
    }
}
