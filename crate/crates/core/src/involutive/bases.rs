//! Basis predicates, the minimal Janet basis and Pommaret finiteness.

use crate::error::{Error, Result};
use crate::involutive::autoreduce::{autoreduce_j, is_autoreduced};
use crate::involutive::completion::{janet_completion, pommaret_condition, truncated_pommaret_completion};
use crate::involutive::normal_form::InvolutiveReducer;
use crate::involutive::separation::{janet_mult, pommaret_mult, Division};
use crate::involutive::janet::janet_basis;
use crate::involutive::{BasisReport, Stats};
use crate::reduce::autoreduce;
use crate::monomial::Monomial;
use crate::poly::{sort_by_lm_desc, Polynomial};

fn heads(polys: &[Polynomial]) -> Vec<Monomial> {
    polys.iter().map(|p| p.lm().unwrap().clone()).collect()
}

/// Checks that every nonmultiplicative prolongation has vanishing involutive
/// normal form. The set must be autoreduced for the division.
pub fn is_involutive_basis(polys: &[Polynomial], division: Division) -> Result<bool> {
    if !is_autoreduced(polys, division) {
        return Err(Error::Precondition(format!(
            "set is not {division} autoreduced"
        )));
    }
    let Some(first) = polys.first() else {
        return Ok(true);
    };
    let n = first.ring().nvars();
    let reducer = InvolutiveReducer::new(polys, division)?;
    for (k, f) in polys.iter().enumerate() {
        for x in reducer.table().nonmult(k).iter(n) {
            if !reducer.normal_form(&f.mul_var(x)).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn is_janet_basis(polys: &[Polynomial]) -> Result<bool> {
    is_involutive_basis(polys, Division::Janet)
}

pub fn is_pommaret_basis(polys: &[Polynomial]) -> Result<bool> {
    is_involutive_basis(polys, Division::Pommaret)
}

/// Monic minimal Janet basis: the Janet completion of the leading monomials
/// of the reduced Gröbner basis, each new head realized as a shifted
/// Gröbner element and the whole set Janet autoreduced. The reduced
/// Gröbner basis is read off a Janet basis by conventional autoreduction.
pub fn minimal_janet_basis(polys: &[Polynomial]) -> Result<BasisReport> {
    let Some(first) = polys.iter().find(|p| !p.is_zero()) else {
        return Err(Error::Input("generating set is empty or all zero".into()));
    };
    if polys.iter().any(|p| !p.same_ring(first)) {
        return Err(Error::Context("generators over different rings".into()));
    }
    let ord = first.ring().ordering().clone();
    let gb = autoreduce(&janet_basis(polys)?.basis);
    let completed = janet_completion(&heads(&gb), &ord);
    let mut realized: Vec<Polynomial> = Vec::with_capacity(completed.len());
    for u in &completed {
        let g = gb
            .iter()
            .find(|g| g.lm().unwrap().divides(u))
            .expect("completion stays inside the initial ideal");
        let w = g.lm().unwrap().quotient_unchecked(u);
        realized.push(g.mul_monomial(&w));
    }
    let mut basis = autoreduce_j(&realized);
    sort_by_lm_desc(&mut basis);
    BasisReport::finish(basis, Division::Janet, Stats::default())
}

/// Whether the ideal of a Pommaret-Janet autoreduced Janet basis has a
/// finite Pommaret basis (which is then the set itself).
pub fn has_finite_pommaret_basis(polys: &[Polynomial]) -> Result<bool> {
    if !is_autoreduced(polys, Division::Pommaret) {
        return Err(Error::Precondition("set is not Pommaret autoreduced".into()));
    }
    if !is_janet_basis(polys)? {
        return Err(Error::Precondition("set is not a Janet basis".into()));
    }
    Ok(pommaret_condition(&heads(polys)))
}

/// Whether Pommaret and Janet multiplicative variables agree on every head.
pub fn separations_coincide(polys: &[Polynomial]) -> Result<bool> {
    let lms = heads(polys);
    let janet = janet_mult(&lms)?;
    Ok(lms.iter().zip(janet).all(|(u, j)| pommaret_mult(u) == j))
}

/// Leading monomials of the Pommaret basis up to total degree `max_degree`.
pub fn truncated_pommaret_basis(polys: &[Polynomial], max_degree: u32) -> Result<Vec<Monomial>> {
    let Some(first) = polys.first() else {
        return Err(Error::Input("empty basis".into()));
    };
    let ord = first.ring().ordering().clone();
    truncated_pommaret_completion(&heads(polys), &ord, max_degree)
}
