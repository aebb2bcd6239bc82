//! Involutive completion of monomial sets.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::involutive::separation::{pommaret_mult, Division, SeparationTable};
use crate::monomial::{Monomial, MonomialOrdering};

/// Divisibility-minimal elements, without duplicates, sorted descending.
pub fn minimal_generators(set: &[Monomial], ord: &MonomialOrdering) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    for u in set {
        if out.contains(u) {
            continue;
        }
        if set.iter().any(|v| v != u && v.divides(u)) {
            continue;
        }
        out.push(u.clone());
    }
    sort_desc(&mut out, ord);
    out
}

pub(crate) fn sort_desc(set: &mut [Monomial], ord: &MonomialOrdering) {
    set.sort_by(|a, b| ord.compare(b, a));
}

/// The least nonmultiplicative prolongation outside the involutive cone,
/// optionally capped in degree.
fn least_missing_prolongation(
    table: &SeparationTable,
    ord: &MonomialOrdering,
    max_degree: Option<u32>,
) -> Option<Monomial> {
    let n = table.monomials().first()?.nvars();
    let mut best: Option<Monomial> = None;
    for (k, u) in table.monomials().iter().enumerate() {
        if max_degree.is_some_and(|d| u.degree() + 1 > d) {
            continue;
        }
        for x in table.nonmult(k).iter(n) {
            let w = u.mul_var(x);
            if table.in_cone(&w) {
                continue;
            }
            if best.as_ref().is_none_or(|b| ord.compare(&w, b) == Ordering::Less) {
                best = Some(w);
            }
        }
    }
    best
}

/// Whether every nonmultiplicative prolongation lies in the involutive cone,
/// i.e. the set is an involutive basis of the monomial ideal it generates.
pub fn is_complete(set: &[Monomial], division: Division) -> Result<bool> {
    let table = SeparationTable::new(division, set)?;
    let n = match set.first() {
        Some(u) => u.nvars(),
        None => return Ok(true),
    };
    Ok(set.iter().enumerate().all(|(k, u)| {
        table
            .nonmult(k)
            .iter(n)
            .all(|x| table.in_cone(&u.mul_var(x)))
    }))
}

/// Janet completion: repeatedly adjoin the least nonmultiplicative
/// prolongation outside the Janet cone. Started from the minimal generators
/// this is the minimal Janet basis of the monomial ideal.
pub fn janet_completion(set: &[Monomial], ord: &MonomialOrdering) -> Vec<Monomial> {
    let mut current = minimal_generators(set, ord);
    if current.is_empty() {
        return current;
    }
    loop {
        let table = SeparationTable::new(Division::Janet, &current).expect("distinct monomials");
        match least_missing_prolongation(&table, ord, None) {
            Some(w) => current.push(w),
            None => break,
        }
    }
    sort_desc(&mut current, ord);
    current
}

/// Pommaret completion of the minimal generators, keeping only monomials of
/// total degree at most `max_degree`.
pub fn truncated_pommaret_completion(
    set: &[Monomial],
    ord: &MonomialOrdering,
    max_degree: u32,
) -> Result<Vec<Monomial>> {
    let top = set.iter().map(Monomial::degree).max().unwrap_or(0);
    if max_degree < top {
        return Err(Error::Input(format!(
            "degree bound {max_degree} is below the largest generator degree {top}"
        )));
    }
    let mut current = minimal_generators(set, ord);
    if current.is_empty() {
        return Ok(current);
    }
    loop {
        let table = SeparationTable::new(Division::Pommaret, &current).expect("pommaret");
        match least_missing_prolongation(&table, ord, Some(max_degree)) {
            Some(w) => current.push(w),
            None => break,
        }
    }
    sort_desc(&mut current, ord);
    Ok(current)
}

/// Pommaret-prolongation condition on a Pommaret-autoreduced Janet monomial
/// basis: `u * x` stays in the Pommaret cone for every `u` and every
/// Pommaret nonmultiplicative `x`. True iff the ideal has a finite Pommaret basis.
pub fn pommaret_condition(set: &[Monomial]) -> bool {
    let Some(first) = set.first() else { return true };
    let n = first.nvars();
    let table = SeparationTable::new(Division::Pommaret, set).expect("pommaret");
    set.iter().all(|u| {
        pommaret_mult(u)
            .complement(n)
            .iter(n)
            .all(|x| table.in_cone(&u.mul_var(x)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::OrderKind;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn ord() -> MonomialOrdering {
        MonomialOrdering::new(OrderKind::DegRevLex)
    }

    #[test]
    fn infinite_pommaret_janet_completion() {
        let u = vec![m(&[1, 1, 0]), m(&[0, 1, 1]), m(&[0, 0, 2])];
        let mut got = janet_completion(&u, &ord());
        let mut want = vec![m(&[1, 1, 0]), m(&[0, 1, 1]), m(&[0, 0, 2]), m(&[1, 0, 2])];
        sort_desc(&mut got, &ord());
        sort_desc(&mut want, &ord());
        assert_eq!(got, want);
        assert!(is_complete(&got, Division::Janet).unwrap());
        assert!(!pommaret_condition(&got));
    }

    #[test]
    fn zero_dimensional_has_finite_pommaret() {
        let u = vec![m(&[2, 0]), m(&[0, 2])];
        let jb = janet_completion(&u, &ord());
        assert!(pommaret_condition(&jb));
    }

    #[test]
    fn truncation_bound_checked() {
        let u = vec![m(&[1, 1, 0]), m(&[0, 0, 3])];
        assert!(truncated_pommaret_completion(&u, &ord(), 2).is_err());
    }

    #[test]
    fn minimal_generators_drop_multiples() {
        let u = vec![m(&[1, 0]), m(&[2, 0]), m(&[1, 0]), m(&[0, 1])];
        assert_eq!(minimal_generators(&u, &ord()), vec![m(&[1, 0]), m(&[0, 1])]);
    }
}
