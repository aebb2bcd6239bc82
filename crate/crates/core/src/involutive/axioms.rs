//! Finite checks of the involutive-division axioms on a concrete monomial set.

use crate::error::Result;
use crate::involutive::separation::{in_involutive_cone, separation, Division};
use crate::monomial::{Monomial, VarSet};

/// Outcome per axiom:
/// (a) `L(u,U)` is closed under division,
/// (b) intersecting cones are nested,
/// (c) `v ∈ u L(u,U)` implies `L(v,U) ⊆ L(u,U)`,
/// (d) `L(u,U) ⊆ L(u,V)` for `u ∈ V ⊆ U`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AxiomReport {
    pub divisor_closed: bool,
    pub cones_nested: bool,
    pub cone_monotone: bool,
    pub subset_monotone: bool,
}

impl AxiomReport {
    pub fn all(&self) -> bool {
        self.divisor_closed && self.cones_nested && self.cone_monotone && self.subset_monotone
    }
}

/// Largest set size for which every subset is visited in axiom (d);
/// above it only single-element removals are checked.
const SUBSET_LIMIT: usize = 10;

fn monomials_up_to(n: usize, bound: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial::one(n)];
    let mut frontier = vec![Monomial::one(n)];
    for _ in 0..bound {
        let mut next = Vec::new();
        for u in &frontier {
            // only raise variables at or after the last one raised: each monomial once
            let start = u.class().unwrap_or(0);
            for i in start..n {
                next.push(u.mul_var(i));
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Runs the four checks. (a) and (d) enumerate monomials up to
/// `degree_bound` (default: twice the largest degree in `set`).
pub fn check_division_axioms(
    set: &[Monomial],
    division: Division,
    degree_bound: Option<u32>,
) -> Result<AxiomReport> {
    let mult = separation(division, set)?;
    let Some(first) = set.first() else {
        return Ok(AxiomReport {
            divisor_closed: true,
            cones_nested: true,
            cone_monotone: true,
            subset_monotone: true,
        });
    };
    let n = first.nvars();
    let bound = degree_bound.unwrap_or_else(|| 2 * set.iter().map(Monomial::degree).max().unwrap_or(0));
    let probes = monomials_up_to(n, bound);
    let in_l = |m: VarSet, w: &Monomial| w.support().is_subset(m);

    let divisor_closed = mult.iter().all(|&m| {
        probes.iter().filter(|w| in_l(m, w)).all(|w| {
            (0..n)
                .filter(|&i| w.deg_i(i) > 0)
                .all(|i| in_l(m, &Monomial::var(n, i).quotient_unchecked(w)))
        })
    });

    let mut cones_nested = true;
    let mut cone_monotone = true;
    for (i, u) in set.iter().enumerate() {
        for (j, v) in set.iter().enumerate() {
            if i == j || u.position() != v.position() {
                continue;
            }
            let l = u.lcm(v);
            if in_involutive_cone(u, mult[i], &l)
                && in_involutive_cone(v, mult[j], &l)
                && !(in_involutive_cone(u, mult[i], v) || in_involutive_cone(v, mult[j], u))
            {
                cones_nested = false;
            }
            if in_involutive_cone(u, mult[i], v) && !mult[j].is_subset(mult[i]) {
                cone_monotone = false;
            }
        }
    }

    let mut subset_monotone = true;
    let mut check_subset = |keep: &[usize]| -> Result<()> {
        let sub: Vec<Monomial> = keep.iter().map(|&k| set[k].clone()).collect();
        let sub_mult = separation(division, &sub)?;
        for (pos, &k) in keep.iter().enumerate() {
            // monomial form of the inclusion, probed up to the bound
            let ok = mult[k].is_subset(sub_mult[pos])
                && probes
                    .iter()
                    .filter(|w| in_l(mult[k], w))
                    .all(|w| in_l(sub_mult[pos], w));
            if !ok {
                subset_monotone = false;
            }
        }
        Ok(())
    };
    if set.len() <= SUBSET_LIMIT {
        for mask in 1u32..(1 << set.len()) {
            let keep: Vec<usize> = (0..set.len()).filter(|&k| mask >> k & 1 == 1).collect();
            check_subset(&keep)?;
        }
    } else {
        for drop in 0..set.len() {
            let keep: Vec<usize> = (0..set.len()).filter(|&k| k != drop).collect();
            check_subset(&keep)?;
        }
    }

    Ok(AxiomReport {
        divisor_closed,
        cones_nested,
        cone_monotone,
        subset_monotone,
    })
}
