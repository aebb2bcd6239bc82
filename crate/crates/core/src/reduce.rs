//! Term rewriting kernel shared by conventional and involutive reduction.

use std::cmp::Ordering;

use crate::monomial::Monomial;
use crate::poly::{merge_scaled, sort_by_lm_desc, Polynomial, Term};

/// Rewrites every term of `f` that `find` maps to a reducer in `basis`.
///
/// `find(t)` must return an index whose leading monomial divides `t`.
/// Terms are visited from the largest down; leading monomials of `basis`
/// must be nonzero. With `keep_lead` the leading term of `f` is left alone.
pub(crate) fn reduce_with<F>(
    f: &Polynomial,
    basis: &[Polynomial],
    keep_lead: bool,
    mut find: F,
) -> Polynomial
where
    F: FnMut(&Monomial) -> Option<usize>,
{
    let ring = f.ring().clone();
    let field = ring.field();
    let mut out: Vec<Term> = Vec::new();
    let mut rest: Vec<Term> = f.terms().to_vec();
    let mut start = 0;
    if keep_lead && !rest.is_empty() {
        out.push(rest[0].clone());
        start = 1;
    }
    while start < rest.len() {
        let t = &rest[start];
        match find(&t.mono) {
            Some(k) => {
                let g = &basis[k];
                let lm = g.lm().expect("nonzero reducer");
                let q = lm.quotient_unchecked(&t.mono);
                let c = field.neg(&field.div(&t.coeff, g.lc().unwrap()));
                rest = merge_scaled(&ring, &rest[start + 1..], &c, &q, &g.terms()[1..]);
                start = 0;
            }
            None => {
                out.push(t.clone());
                start += 1;
            }
        }
    }
    Polynomial::from_sorted(&ring, out)
}

/// Index of the reducer with the largest leading monomial dividing `t`.
fn largest_divisor(basis: &[Polynomial], t: &Monomial) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (k, g) in basis.iter().enumerate() {
        let Some(lm) = g.lm() else { continue };
        if !lm.divides(t) {
            continue;
        }
        best = match best {
            Some(b) if g.ring().cmp(basis[b].lm().unwrap(), lm) != Ordering::Less => Some(b),
            _ => Some(k),
        };
    }
    best
}

/// Full conventional normal form of `f` modulo `basis`.
pub fn conventional_nf(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    reduce_with(f, basis, false, |t| largest_divisor(basis, t))
}

/// Conventional autoreduction: pairwise fully reduced, monic, sorted by
/// descending leading monomial. Zeros are dropped.
pub fn autoreduce(polys: &[Polynomial]) -> Vec<Polynomial> {
    let mut set: Vec<Polynomial> = polys
        .iter()
        .filter(|p| !p.is_zero())
        .map(Polynomial::make_monic)
        .collect();
    loop {
        sort_by_lm_desc(&mut set);
        // largest element whose leading monomial is divisible by another's
        let hit = (0..set.len()).find(|&i| {
            let lm = set[i].lm().unwrap();
            set.iter()
                .enumerate()
                .any(|(j, g)| j != i && g.lm().unwrap().divides(lm) && (g.lm().unwrap() != lm || j < i))
        });
        let Some(i) = hit else { break };
        let f = set.remove(i);
        let r = conventional_nf(&f, &set);
        if !r.is_zero() {
            set.push(r.make_monic());
        }
    }
    tail_reduce(set, |f, others| reduce_with(f, others, true, |t| largest_divisor(others, t)))
}

/// Applies `reduce(f, others)` to each element against the rest, keeping the
/// leading monomials. Result is monic and sorted.
pub(crate) fn tail_reduce<R>(set: Vec<Polynomial>, mut reduce: R) -> Vec<Polynomial>
where
    R: FnMut(&Polynomial, &[Polynomial]) -> Polynomial,
{
    let mut out = set;
    for i in 0..out.len() {
        let f = out[i].clone();
        let others: Vec<Polynomial> = out
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        out[i] = reduce(&f, &others).make_monic();
    }
    sort_by_lm_desc(&mut out);
    out
}
