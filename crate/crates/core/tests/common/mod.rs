#![allow(dead_code)]

use std::sync::Arc;

use invbasis::coeff::Field;
use invbasis::monomial::{Monomial, OrderKind, VarContext};
use invbasis::parse::parse_poly;
use invbasis::poly::{Polynomial, Ring};
use rand::rngs::StdRng;
use rand::Rng;

pub fn ring(names: &[&str]) -> Arc<Ring> {
    Ring::new(VarContext::new(names).unwrap(), OrderKind::DegRevLex, Field::Rational)
}

pub fn indexed_ring(n: usize, field: Field) -> Arc<Ring> {
    Ring::new(VarContext::indexed("x", n).unwrap(), OrderKind::DegRevLex, field)
}

pub fn polys(r: &Arc<Ring>, src: &[&str]) -> Vec<Polynomial> {
    src.iter().map(|s| parse_poly(r, s).unwrap()).collect()
}

pub fn mono(e: &[u32]) -> Monomial {
    Monomial::new(e.to_vec())
}

pub fn problem(name: &str) -> String {
    let path = format!("{}/problems/{name}.txt", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap()
}

/// Every monomial in `n` variables of total degree exactly `d`.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn walk(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            walk(i + 1, left - e, cur, out);
        }
    }
    let mut out = Vec::new();
    walk(0, d, &mut vec![0; n], &mut out);
    out
}

pub fn monomials_up_to(n: usize, d: u32) -> Vec<Monomial> {
    (0..=d).flat_map(|k| monomials_of_degree(n, k)).collect()
}

/// Janet multiplicative variables straight from the definition: `x_i` is
/// multiplicative for `u` iff `deg_i(u)` is maximal among the elements of
/// `set` agreeing with `u` in `x_1 .. x_{i-1}`.
pub fn janet_oracle(u: &Monomial, set: &[Monomial]) -> Vec<usize> {
    let n = u.nvars();
    (0..n)
        .filter(|&i| {
            set.iter()
                .filter(|v| (0..i).all(|k| v.deg_i(k) == u.deg_i(k)))
                .all(|v| v.deg_i(i) <= u.deg_i(i))
        })
        .collect()
}

/// Pommaret multiplicative variables: `x_k .. x_n` for class `k`.
pub fn pommaret_oracle(u: &Monomial) -> Vec<usize> {
    let n = u.nvars();
    match (0..n).rev().find(|&i| u.deg_i(i) > 0) {
        Some(k) => (k..n).collect(),
        None => (0..n).collect(),
    }
}

pub fn in_cone(u: &Monomial, mult: &[usize], w: &Monomial) -> bool {
    u.divides(w) && (0..u.nvars()).all(|i| w.deg_i(i) == u.deg_i(i) || mult.contains(&i))
}

pub fn random_monomial(rng: &mut StdRng, n: usize, max_deg: u32) -> Monomial {
    let d = rng.gen_range(1..=max_deg);
    let mut e = vec![0u32; n];
    for _ in 0..d {
        e[rng.gen_range(0..n)] += 1;
    }
    Monomial::new(e)
}

pub fn random_monomial_set(rng: &mut StdRng, n: usize, size: usize, max_deg: u32) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    while out.len() < size {
        let m = random_monomial(rng, n, max_deg);
        if !out.contains(&m) {
            out.push(m);
        }
    }
    out
}

/// Random polynomial with a few terms and small integer coefficients.
pub fn random_poly(rng: &mut StdRng, r: &Arc<Ring>, terms: usize, max_deg: u32) -> Polynomial {
    let n = r.nvars();
    let f = r.field();
    let parts = (0..terms).map(|k| {
        let m = if k + 1 == terms && rng.gen_bool(0.5) {
            Monomial::one(n)
        } else {
            random_monomial(rng, n, max_deg)
        };
        let c = rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 };
        (m, f.from_i64(c))
    });
    Polynomial::from_terms(r, parts)
}

pub fn random_system(rng: &mut StdRng, r: &Arc<Ring>, count: usize, max_deg: u32) -> Vec<Polynomial> {
    loop {
        let f: Vec<Polynomial> = (0..count)
            .map(|_| {
                let terms = rng.gen_range(2..=3);
                random_poly(rng, r, terms, max_deg)
            })
            .collect();
        if f.iter().all(|p| !p.is_zero() && !p.lm().unwrap().is_one()) {
            return f;
        }
    }
}

/// `sum_k m_k * basis[i_k]` with random monomial multipliers.
pub fn random_combination(rng: &mut StdRng, basis: &[Polynomial], terms: usize) -> Polynomial {
    let r = basis[0].ring();
    let n = r.nvars();
    let mut acc = Polynomial::zero(r);
    for _ in 0..terms {
        let g = &basis[rng.gen_range(0..basis.len())];
        let m = if rng.gen_bool(0.3) { Monomial::one(n) } else { random_monomial(rng, n, 2) };
        let c = r.field().from_i64(rng.gen_range(1..=4));
        acc = acc.add(&g.mul_term(&c, &m)).unwrap();
    }
    acc
}
