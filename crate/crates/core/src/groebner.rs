//! Buchberger's algorithm, used as an independent oracle for the involutive
//! completions.

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::{sort_by_lm_desc, Polynomial};
use crate::reduce::{autoreduce, conventional_nf};

/// S-polynomial of two elements with the same module position.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (lf, lg) = (f.lm().unwrap(), g.lm().unwrap());
    let l = lf.lcm(lg);
    let field = f.ring().field();
    let a = f.mul_term(&field.inv(f.lc().unwrap()), &lf.quotient_unchecked(&l));
    let b = g.mul_term(&field.inv(g.lc().unwrap()), &lg.quotient_unchecked(&l));
    a.sub(&b).expect("same ring")
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

fn coprime(a: &Monomial, b: &Monomial) -> bool {
    a.exps().iter().zip(b.exps()).all(|(x, y)| *x == 0 || *y == 0)
}

/// Reduced, monic Gröbner basis sorted by descending leading monomial.
///
/// Sugar selection strategy with the Gebauer-Möller pair update. The
/// product criterion is only applied in the ring case.
pub fn buchberger(polys: &[Polynomial]) -> Vec<Polynomial> {
    let input = autoreduce(polys);
    if input.is_empty() {
        return input;
    }
    let ring = input[0].ring().clone();
    let module = ring.rank() > 1;
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut sugar: Vec<u32> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let insert = |basis: &mut Vec<Polynomial>,
                  sugar: &mut Vec<u32>,
                  active: &mut Vec<bool>,
                  pairs: &mut Vec<Pair>,
                  h: Polynomial,
                  sh: u32| {
        let n = basis.len();
        let lh = h.lm().unwrap().clone();
        let fresh: Vec<(usize, Monomial, bool)> = (0..n)
            .filter(|&i| active[i] && basis[i].lm().unwrap().position() == lh.position())
            .map(|i| {
                let li = basis[i].lm().unwrap();
                (i, li.lcm(&lh), !module && coprime(li, &lh))
            })
            .collect();
        // keep a new pair only if no other new pair has an lcm dividing its own
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for (k, (i, l, cop)) in fresh.iter().enumerate() {
            let beaten = fresh.iter().enumerate().any(|(m, (_, l2, _))| {
                m != k && l2.divides(l) && (l2 != l || m < k || *cop)
            });
            let beaten_kept = kept.iter().any(|(_, l2, _)| l2.divides(l));
            if *cop || !(beaten || beaten_kept) {
                kept.push((*i, l.clone(), *cop));
            }
        }
        // an equal-lcm group containing a coprime pair is dropped entirely
        let kept: Vec<(usize, Monomial)> = kept
            .iter()
            .filter(|(_, l, cop)| !*cop && !fresh.iter().any(|(_, l2, c2)| *c2 && l2 == l))
            .map(|(i, l, _)| (*i, l.clone()))
            .collect();
        pairs.retain(|p| {
            let (gi, gj) = (basis[p.i].lm().unwrap(), basis[p.j].lm().unwrap());
            !(lh.divides(&p.lcm) && gi.lcm(&lh) != p.lcm && gj.lcm(&lh) != p.lcm)
        });
        for (i, lcm) in kept {
            let li = basis[i].lm().unwrap();
            let s = (sugar[i] + lcm.degree() - li.degree()).max(sh + lcm.degree() - lh.degree());
            pairs.push(Pair { i, j: n, lcm, sugar: s });
        }
        for i in 0..n {
            if active[i] && lh.divides(basis[i].lm().unwrap()) {
                active[i] = false;
            }
        }
        basis.push(h);
        sugar.push(sh);
        active.push(true);
    };

    for h in input {
        let s = h.total_degree().unwrap_or(0);
        insert(&mut basis, &mut sugar, &mut active, &mut pairs, h, s);
    }

    while !pairs.is_empty() {
        let k = (0..pairs.len())
            .min_by(|&a, &b| {
                (pairs[a].sugar.cmp(&pairs[b].sugar))
                    .then_with(|| ring.cmp(&pairs[a].lcm, &pairs[b].lcm))
                    .then((pairs[a].j, pairs[a].i).cmp(&(pairs[b].j, pairs[b].i)))
            })
            .unwrap();
        let Pair { i, j, sugar: s, .. } = pairs.swap_remove(k);
        let reducers: Vec<Polynomial> = basis
            .iter()
            .zip(&active)
            .filter(|(_, a)| **a)
            .map(|(g, _)| g.clone())
            .collect();
        let h = conventional_nf(&s_polynomial(&basis[i], &basis[j]), &reducers);
        if !h.is_zero() {
            insert(&mut basis, &mut sugar, &mut active, &mut pairs, h.make_monic(), s);
        }
    }
    let survivors: Vec<Polynomial> = basis
        .into_iter()
        .zip(active)
        .filter(|(_, a)| *a)
        .map(|(g, _)| g)
        .collect();
    reduce_basis(survivors)
}

/// Turns a Gröbner basis into the reduced one.
fn reduce_basis(basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut minimal: Vec<Polynomial> = Vec::new();
    let mut sorted = basis;
    sort_by_lm_desc(&mut sorted);
    for (i, f) in sorted.iter().enumerate() {
        let lm = f.lm().unwrap();
        let redundant = sorted.iter().enumerate().any(|(j, g)| {
            let lg = g.lm().unwrap();
            j != i && lg.divides(lm) && (lg != lm || j > i)
        });
        if !redundant {
            minimal.push(f.clone());
        }
    }
    autoreduce(&minimal)
}

/// Whether the two sets generate the same ideal (same reduced Gröbner basis).
pub fn ideal_equal(f: &[Polynomial], g: &[Polynomial]) -> Result<bool> {
    if let (Some(a), Some(b)) = (f.first(), g.first()) {
        if !a.same_ring(b) {
            return Err(Error::Context("ideals over different rings".into()));
        }
    }
    Ok(buchberger(f) == buchberger(g))
}

/// Whether `basis` is a Gröbner basis: every S-polynomial reduces to zero.
pub fn is_groebner_basis(basis: &[Polynomial]) -> bool {
    let nonzero: Vec<Polynomial> = basis.iter().filter(|p| !p.is_zero()).cloned().collect();
    for j in 0..nonzero.len() {
        for i in 0..j {
            let (a, b) = (nonzero[i].lm().unwrap(), nonzero[j].lm().unwrap());
            if a.position() != b.position() {
                continue;
            }
            if !conventional_nf(&s_polynomial(&nonzero[i], &nonzero[j]), &nonzero).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Ideal membership through the reduced Gröbner basis.
pub fn ideal_contains(groebner: &[Polynomial], f: &Polynomial) -> bool {
    conventional_nf(f, groebner).is_zero()
}

/// Leading monomials ordered descending.
pub fn leading_monomials(polys: &[Polynomial]) -> Vec<Monomial> {
    let mut v: Vec<Monomial> = polys.iter().filter_map(|p| p.lm().cloned()).collect();
    if let Some(p) = polys.first() {
        let ring = p.ring().clone();
        v.sort_by(|a, b| ring.cmp(b, a));
        v.dedup();
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Field;
    use crate::monomial::{OrderKind, VarContext};
    use crate::parse::parse_poly;
    use crate::poly::Ring;
    use std::sync::Arc;

    fn ring() -> Arc<Ring> {
        Ring::new(
            VarContext::new(&["x", "y", "z"]).unwrap(),
            OrderKind::DegRevLex,
            Field::Rational,
        )
    }

    fn ps(r: &Arc<Ring>, s: &[&str]) -> Vec<Polynomial> {
        s.iter().map(|s| parse_poly(r, s).unwrap()).collect()
    }

    #[test]
    fn small_reduced_basis() {
        let r = ring();
        let g = buchberger(&ps(&r, &["x^2*y - z", "x*y^2 - y"]));
        let expected = ps(&r, &["y^2*z - y", "y*z^2 - z", "x*y - y*z", "x*z - z^2"]);
        assert_eq!(g, expected);
        assert!(is_groebner_basis(&g));
    }

    #[test]
    fn trivial_cases() {
        let r = ring();
        let f = ps(&r, &["x - 1"]);
        assert_eq!(buchberger(&f), f);
        assert!(!ideal_equal(&ps(&r, &["x"]), &ps(&r, &["y"])).unwrap());
        let f = ps(&r, &["x^2*y - z", "x*y^2 - y"]);
        assert!(ideal_equal(&f, &buchberger(&f)).unwrap());
    }
}
