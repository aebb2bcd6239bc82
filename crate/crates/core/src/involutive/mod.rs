//! Janet and Pommaret divisions and the algorithms built on them.

pub mod autoreduce;
pub mod axioms;
pub mod bases;
pub mod completion;
pub mod hilbert;
pub mod janet;
pub mod normal_form;
pub mod separation;

pub use autoreduce::{autoreduce_j, autoreduce_p, autoreduce_pj, autoreduce_pj_counted, is_autoreduced, PjVariant};
pub use axioms::{check_division_axioms, AxiomReport};
pub use bases::{
    has_finite_pommaret_basis, is_involutive_basis, is_janet_basis, is_pommaret_basis,
    minimal_janet_basis, separations_coincide, truncated_pommaret_basis,
};
pub use completion::{
    is_complete, janet_completion, minimal_generators, pommaret_condition,
    truncated_pommaret_completion,
};
pub use hilbert::{monomial_count, HilbertSeries};
pub use janet::{janet_basis, janet_basis_with, JanetOptions, ProlongationEntry};
pub use normal_form::{involutive_nf, InvolutiveReducer};
pub use separation::{
    cone_member, in_involutive_cone, involutive_divisor, janet_mult, pommaret_mult, separation,
    ConeKind, Division, SeparationTable,
};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;

/// Counters collected while completing a basis.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Stats {
    pub prolongations: usize,
    pub criterion_hits: usize,
    pub normal_forms: usize,
    pub nonzero_normal_forms: usize,
    pub autoreductions: usize,
    pub autoreduction_passes: usize,
    /// T entries whose ancestor had no Janet divisor after a rebuild.
    pub ancestor_fallbacks: usize,
}

#[derive(Debug, Clone)]
pub struct BasisReport {
    /// Monic, sorted by leading monomial, largest first.
    pub basis: Vec<Polynomial>,
    pub division: Division,
    /// Leading monomials form the minimal Janet basis of the initial ideal.
    pub is_minimal: bool,
    /// The ideal has a finite Pommaret basis.
    pub finite_pommaret: bool,
    pub stats: Stats,
}

impl BasisReport {
    pub(crate) fn finish(basis: Vec<Polynomial>, division: Division, stats: Stats) -> Result<Self> {
        if !is_involutive_basis(&basis, division)? {
            return Err(Error::Precondition(format!("result is not a {division} basis")));
        }
        let Some(first) = basis.first() else {
            return Err(Error::Input("empty basis".into()));
        };
        let ord = first.ring().ordering().clone();
        let heads: Vec<Monomial> = basis.iter().map(|p| p.lm().unwrap().clone()).collect();
        let minimal = janet_completion(&heads, &ord);
        let mut sorted = heads.clone();
        completion::sort_desc(&mut sorted, &ord);
        Ok(BasisReport {
            is_minimal: sorted == minimal,
            finite_pommaret: pommaret_condition(&minimal),
            basis,
            division,
            stats,
        })
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().map(|p| p.lm().unwrap().clone()).collect()
    }
}
