//! Janet, Pommaret and combined Pommaret-Janet autoreduction.

use crate::involutive::normal_form::InvolutiveReducer;
use crate::involutive::separation::{pommaret_mult, in_involutive_cone, Division, SeparationTable};
use crate::monomial::Monomial;
use crate::poly::{sort_by_lm_desc, Polynomial};
use crate::reduce::{reduce_with, tail_reduce};

/// Normal form used inside the repeat loop of the Pommaret-Janet autoreduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PjVariant {
    /// Janet normal forms: the combined Pommaret-Janet autoreduction.
    #[default]
    Janet,
    /// Pommaret normal forms: pure Pommaret autoreduction of the leading
    /// monomials, as in the original Zharkov scheme.
    Pommaret,
}

fn nonzero_monic(polys: &[Polynomial]) -> Vec<Polynomial> {
    polys
        .iter()
        .filter(|p| !p.is_zero())
        .map(Polynomial::make_monic)
        .collect()
}

/// Replaces elements sharing a leading monomial by their differences until
/// all leading monomials are distinct.
fn separate_leading_monomials(mut set: Vec<Polynomial>) -> Vec<Polynomial> {
    loop {
        sort_by_lm_desc(&mut set);
        let clash = set.windows(2).position(|w| w[0].lm() == w[1].lm());
        let Some(i) = clash else { return set };
        let f = set.remove(i + 1);
        let d = f.sub(&set[i]).expect("same ring");
        if !d.is_zero() {
            set.push(d.make_monic());
        }
    }
}

/// Janet autoreduction. Leading monomials are kept whenever they are distinct;
/// every other term is reduced by Janet divisors among the other elements.
pub fn autoreduce_j(polys: &[Polynomial]) -> Vec<Polynomial> {
    let set = separate_leading_monomials(nonzero_monic(polys));
    if set.is_empty() {
        return set;
    }
    let reducer_set = set.clone();
    let reducer = InvolutiveReducer::new(&reducer_set, Division::Janet).expect("distinct leading monomials");
    // tail terms are below the element's own head, so reducing against the
    // whole set is reducing against the others
    tail_reduce(set, |f, _| reducer.tail_normal_form(f))
}

/// Index of an element whose leading monomial lies in the Pommaret cone of
/// the others' leading monomials; the largest such element is preferred, and
/// of two equal heads the later one.
fn pommaret_reducible_head(set: &[Polynomial]) -> Option<usize> {
    let ord = set.first()?.ring().ordering().clone();
    let mut best: Option<usize> = None;
    for (i, h) in set.iter().enumerate() {
        let lm = h.lm().unwrap();
        let hit = set.iter().enumerate().any(|(j, g)| {
            let u = g.lm().unwrap();
            j != i && in_involutive_cone(u, pommaret_mult(u), lm) && (u != lm || j < i)
        });
        if hit {
            best = match best {
                Some(b) if ord.compare(set[b].lm().unwrap(), lm).is_ge() => Some(b),
                _ => Some(i),
            };
        }
    }
    best
}

/// Pommaret autoreduction: no term of any element is a Pommaret multiple of
/// another element's leading monomial.
pub fn autoreduce_p(polys: &[Polynomial]) -> Vec<Polynomial> {
    let mut set = nonzero_monic(polys);
    while let Some(i) = pommaret_reducible_head(&set) {
        let f = set.remove(i);
        let r = InvolutiveReducer::new(&set, Division::Pommaret)
            .expect("pommaret separation never fails")
            .normal_form(&f);
        if !r.is_zero() {
            set.push(r.make_monic());
        }
    }
    if set.is_empty() {
        return set;
    }
    let lms: Vec<Monomial> = set.iter().map(|p| p.lm().unwrap().clone()).collect();
    let table = SeparationTable::new(Division::Pommaret, &lms).unwrap();
    let ord = set[0].ring().ordering().clone();
    let basis = set.clone();
    tail_reduce(set, |f, _| {
        reduce_with(f, &basis, true, |t| table.divisor(t, &ord))
    })
}

/// Pommaret-Janet autoreduction.
///
/// Elements whose heads are Pommaret multiples of other heads are pulled out
/// and reduced (Janet or Pommaret normal form, per `variant`) modulo the
/// remaining set until nothing changes; the survivors are Janet autoreduced.
/// Returns the set and the number of passes of the outer loop.
pub fn autoreduce_pj_counted(polys: &[Polynomial], variant: PjVariant) -> (Vec<Polynomial>, usize) {
    let mut h_set = nonzero_monic(polys);
    let mut passes = 0;
    loop {
        passes += 1;
        let mut before = h_set.clone();
        sort_by_lm_desc(&mut before);
        let mut pulled: Vec<Polynomial> = Vec::new();
        while let Some(i) = pommaret_reducible_head(&h_set) {
            pulled.push(h_set.remove(i));
        }
        for g in pulled {
            let division = match variant {
                PjVariant::Janet => Division::Janet,
                PjVariant::Pommaret => Division::Pommaret,
            };
            let f = InvolutiveReducer::new(&h_set, division)
                .expect("distinct heads after the pommaret sweep")
                .normal_form(&g);
            if !f.is_zero() {
                h_set.push(f.make_monic());
            }
        }
        let mut after = h_set.clone();
        sort_by_lm_desc(&mut after);
        if after == before {
            break;
        }
    }
    (autoreduce_j(&h_set), passes)
}

pub fn autoreduce_pj(polys: &[Polynomial]) -> Vec<Polynomial> {
    autoreduce_pj_counted(polys, PjVariant::Janet).0
}

/// Whether no term of any element has an involutive divisor among the other heads.
pub fn is_autoreduced(polys: &[Polynomial], division: Division) -> bool {
    if polys.iter().any(Polynomial::is_zero) {
        return false;
    }
    let lms: Vec<Monomial> = polys.iter().map(|p| p.lm().unwrap().clone()).collect();
    for i in 0..lms.len() {
        if lms[..i].contains(&lms[i]) {
            return false;
        }
    }
    let Ok(table) = SeparationTable::new(division, &lms) else {
        return false;
    };
    polys.iter().enumerate().all(|(i, f)| {
        f.support().all(|t| {
            (0..lms.len()).all(|k| k == i || !in_involutive_cone(&lms[k], table.mult(k), t))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Field;
    use crate::monomial::{OrderKind, VarContext};
    use crate::parse::parse_poly;
    use crate::poly::Ring;
    use std::sync::Arc;

    fn ring(vars: &[&str]) -> Arc<Ring> {
        Ring::new(VarContext::new(vars).unwrap(), OrderKind::DegRevLex, Field::Rational)
    }

    fn ps(r: &Arc<Ring>, s: &[&str]) -> Vec<Polynomial> {
        s.iter().map(|s| parse_poly(r, s).unwrap()).collect()
    }

    fn sorted(mut v: Vec<Polynomial>) -> Vec<Polynomial> {
        sort_by_lm_desc(&mut v);
        v
    }

    #[test]
    fn four_vars_both_variants() {
        let r = ring(&["x", "y", "z", "t"]);
        let f = ps(&r, &["x*y*z*t - x*z", "x*y*z + z^2", "x*z*t + x^2", "x*y + z", "z*t + x"]);
        let g1 = autoreduce_pj(&f);
        assert_eq!(g1, sorted(ps(&r, &["x*z*t + x^2", "x*y + z", "z*t + x"])));
        let (g2, _) = autoreduce_pj_counted(&f, PjVariant::Pommaret);
        assert_eq!(
            g2,
            sorted(ps(&r, &["x*z*t + x^2", "z^2*t + x*z", "x*y + z", "z*t + x"]))
        );
        assert!(is_autoreduced(&g1, Division::Pommaret));
        assert!(is_autoreduced(&g1, Division::Janet));
        assert_eq!(autoreduce_pj(&g1), g1);
    }

    #[test]
    fn janet_autoreduction_keeps_heads() {
        let r = ring(&["x", "y", "z"]);
        let f = ps(&r, &["x*y + y*z", "y*z - z^2", "x^2 + x*y"]);
        let out = autoreduce_j(&f);
        let mut heads: Vec<_> = out.iter().map(|p| p.lm().unwrap().clone()).collect();
        let mut orig: Vec<_> = f.iter().map(|p| p.lm().unwrap().clone()).collect();
        heads.sort_by(|a, b| r.cmp(a, b));
        orig.sort_by(|a, b| r.cmp(a, b));
        assert_eq!(heads, orig);
        assert!(is_autoreduced(&out, Division::Janet));
        assert!(autoreduce_j(&[]).is_empty());
    }

    #[test]
    fn pommaret_autoreduction_pair() {
        let r = ring(&["x", "y"]);
        // x^2*y = (x*y)*x with x not Pommaret multiplicative for x*y: both stay
        let f = ps(&r, &["x*y", "x^2*y"]);
        assert_eq!(autoreduce_p(&f).len(), 2);
        // x*y^2 = (x*y)*y with y multiplicative: reduced away
        let f = ps(&r, &["x*y", "x*y^2"]);
        assert_eq!(autoreduce_p(&f), ps(&r, &["x*y"]));
    }
}
