//! Completion to a Janet basis with intermediate Pommaret-Janet autoreduction.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::involutive::autoreduce::{autoreduce_j, autoreduce_pj_counted, PjVariant};
use crate::involutive::normal_form::InvolutiveReducer;
use crate::involutive::separation::{in_involutive_cone, Division, SeparationTable};
use crate::involutive::{BasisReport, Stats};
use crate::monomial::{Monomial, MonomialOrdering, VarSet};
use crate::poly::{sort_by_lm_desc, Polynomial};
use crate::reduce::autoreduce;

/// A basis element together with its ancestor monomial and the
/// nonmultiplicative variables already prolonged.
#[derive(Debug, Clone)]
pub struct ProlongationEntry {
    pub poly: Polynomial,
    pub ancestor: Monomial,
    pub processed: VarSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JanetOptions {
    /// Skip prolongations certified redundant by the involutive chain criterion.
    pub criterion: bool,
    /// Intermediate autoreduction flavour.
    pub variant: PjVariant,
}

impl Default for JanetOptions {
    fn default() -> Self {
        JanetOptions {
            criterion: true,
            variant: PjVariant::Janet,
        }
    }
}

/// True when some entry `(f, v, D)` has `lm(f)` as Janet divisor of
/// `prolong_lm` and `lcm(ancestor, v) < prolong_lm`.
pub fn criterion(
    prolong_lm: &Monomial,
    ancestor: &Monomial,
    entries: &[ProlongationEntry],
    table: &SeparationTable,
    ord: &MonomialOrdering,
) -> bool {
    entries.iter().any(|e| {
        let lm = e.poly.lm().unwrap();
        let Some(k) = table.index_of(lm) else { return false };
        lm.position() == ancestor.position()
            && in_involutive_cone(lm, table.mult(k), prolong_lm)
            && ord.compare(&ancestor.lcm(&e.ancestor), prolong_lm) == Ordering::Less
    })
}

fn head_table(g: &[Polynomial]) -> SeparationTable {
    let lms: Vec<Monomial> = g.iter().map(|p| p.lm().unwrap().clone()).collect();
    SeparationTable::new(Division::Janet, &lms).expect("basis heads are distinct")
}

/// Janet basis of the ideal (or submodule) generated by `polys`.
pub fn janet_basis(polys: &[Polynomial]) -> Result<BasisReport> {
    janet_basis_with(polys, JanetOptions::default())
}

pub fn janet_basis_with(polys: &[Polynomial], opts: JanetOptions) -> Result<BasisReport> {
    let Some(first) = polys.iter().find(|p| !p.is_zero()) else {
        return Err(Error::Input("generating set is empty or all zero".into()));
    };
    let ring = first.ring().clone();
    if polys.iter().any(|p| !p.same_ring(first)) {
        return Err(Error::Context("generators over different rings".into()));
    }
    let ord = ring.ordering().clone();
    let n = ring.nvars();
    let mut stats = Stats::default();

    let mut g: Vec<Polynomial> = autoreduce(polys);
    let mut t: Vec<ProlongationEntry> = g
        .iter()
        .map(|p| ProlongationEntry {
            poly: p.clone(),
            ancestor: p.lm().unwrap().clone(),
            processed: VarSet::EMPTY,
        })
        .collect();
    let mut table = head_table(&g);

    loop {
        // t[k] describes g[k] here
        let mut pick: Option<(usize, usize, Monomial)> = None;
        for (k, e) in t.iter().enumerate() {
            let free = table.nonmult(k).difference(e.processed);
            let lm = e.poly.lm().unwrap();
            for x in free.iter(n) {
                let cand = lm.mul_var(x);
                let better = match &pick {
                    None => true,
                    Some((_, bx, best)) => match ord.compare(&cand, best) {
                        Ordering::Less => true,
                        // the smaller variable has the larger index
                        Ordering::Equal => x > *bx,
                        Ordering::Greater => false,
                    },
                };
                if better {
                    pick = Some((k, x, cand));
                }
            }
        }
        let Some((k, x, prolong_lm)) = pick else { break };
        stats.prolongations += 1;
        t[k].processed.insert(x);
        let ancestor = t[k].ancestor.clone();

        if opts.criterion && criterion(&prolong_lm, &ancestor, &t, &table, &ord) {
            stats.criterion_hits += 1;
        } else {
            let prolongation = t[k].poly.mul_var(x);
            let h = InvolutiveReducer::new(&g, Division::Janet)?.normal_form(&prolongation);
            stats.normal_forms += 1;
            if !h.is_zero() {
                let h = h.make_monic();
                stats.nonzero_normal_forms += 1;
                if h.lm() == Some(&prolong_lm) {
                    t.push(ProlongationEntry {
                        poly: h.clone(),
                        ancestor,
                        processed: VarSet::EMPTY,
                    });
                    g.push(h);
                } else {
                    t.push(ProlongationEntry {
                        poly: h.clone(),
                        ancestor: h.lm().unwrap().clone(),
                        processed: VarSet::EMPTY,
                    });
                    g.push(h);
                    let (reduced, passes) = autoreduce_pj_counted(&g, opts.variant);
                    stats.autoreductions += 1;
                    stats.autoreduction_passes += passes;
                    g = reduced;
                }
            }
        }

        // rebuild T against the current G
        table = head_table(&g);
        let old = std::mem::take(&mut t);
        for (i, p) in g.iter().enumerate() {
            let lm = p.lm().unwrap();
            match old.iter().find(|e| e.poly.lm() == Some(lm)) {
                Some(e) => {
                    let anchor = match table.divisor(&e.ancestor, &ord) {
                        Some(j) => g[j].lm().unwrap().clone(),
                        None => {
                            stats.ancestor_fallbacks += 1;
                            lm.clone()
                        }
                    };
                    t.push(ProlongationEntry {
                        poly: p.clone(),
                        ancestor: anchor,
                        processed: e.processed.intersection(table.nonmult(i)),
                    });
                }
                None => t.push(ProlongationEntry {
                    poly: p.clone(),
                    ancestor: lm.clone(),
                    processed: VarSet::EMPTY,
                }),
            }
        }
    }

    let mut g = autoreduce_j(&g);
    sort_by_lm_desc(&mut g);
    BasisReport::finish(g, Division::Janet, stats)
}
