//! Linear differential systems with constant coefficients.
//!
//! A derivative `d^a y_j` is the module monomial `x^a` in position `j`, and
//! differentiation by `x_i` is multiplication by `x_i`. Basis computations
//! run on the module side and are decoded back.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::coeff::{Coeff, Field};
use crate::error::{Error, Result};
use crate::involutive::{
    janet_basis_with, Division, InvolutiveReducer, JanetOptions, Stats,
};
use crate::monomial::{Monomial, MonomialOrdering, OrderKind, PositionRule, VarContext};
use crate::parse::parse_diff_at;
use crate::poly::{Polynomial, Ring};

/// `d^multi_index y_unknown`; unknowns are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Derivative {
    pub unknown: usize,
    pub multi_index: Monomial,
}

impl Derivative {
    pub fn order(&self) -> u32 {
        self.multi_index.degree()
    }

    pub fn differentiate(&self, i: usize) -> Derivative {
        Derivative {
            unknown: self.unknown,
            multi_index: self.multi_index.mul_var(i),
        }
    }

    fn to_monomial(&self) -> Monomial {
        self.multi_index.clone().with_position(self.unknown as u32)
    }

    fn from_monomial(m: &Monomial) -> Derivative {
        Derivative {
            unknown: m.position() as usize,
            multi_index: Monomial::new(m.exps().to_vec()),
        }
    }
}

/// A ranking: monomial ordering on multi-indices plus how unknowns compare.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ranking {
    pub base: OrderKind,
    pub position_rule: PositionRule,
    /// Unknown indices from highest to lowest.
    pub position_order: Vec<u32>,
}

impl Ranking {
    /// `base` with term-over-position and `y_1 > y_2 > ...`.
    pub fn new(base: OrderKind, unknowns: usize) -> Self {
        Ranking {
            base,
            position_rule: PositionRule::TermOverPosition,
            position_order: (0..unknowns as u32).collect(),
        }
    }

    pub fn ordering(&self) -> Result<MonomialOrdering> {
        MonomialOrdering::with_positions(self.base, self.position_rule, &self.position_order)
    }
}

/// Independent variables, unknowns, ranking and coefficient field.
#[derive(Debug)]
pub struct DiffRing {
    unknowns: Vec<String>,
    ranking: Ranking,
    module: Arc<Ring>,
    scalar: Arc<Ring>,
}

impl DiffRing {
    pub fn new(vars: VarContext, unknowns: &[&str], ranking: Ranking, field: Field) -> Result<Arc<Self>> {
        let names: Vec<String> = unknowns.iter().map(|s| s.to_string()).collect();
        Self::from_names(vars, names, ranking, field)
    }

    pub fn from_names(
        vars: VarContext,
        unknowns: Vec<String>,
        ranking: Ranking,
        field: Field,
    ) -> Result<Arc<Self>> {
        if unknowns.is_empty() {
            return Err(Error::Input("no unknowns declared".into()));
        }
        for (i, u) in unknowns.iter().enumerate() {
            if unknowns[..i].contains(u) || vars.index_of(u).is_some() {
                return Err(Error::Input(format!("unknown `{u}` is repeated or clashes with a variable")));
            }
        }
        if ranking.position_order.len() != unknowns.len() {
            return Err(Error::Input(format!(
                "ranking orders {} unknowns, {} declared",
                ranking.position_order.len(),
                unknowns.len()
            )));
        }
        let ordering = ranking.ordering()?;
        let module = Ring::module(vars.clone(), ordering, field, unknowns.len());
        let scalar = Ring::new(vars, ranking.base, field);
        Ok(Arc::new(DiffRing {
            unknowns,
            ranking,
            module,
            scalar,
        }))
    }

    pub fn unknowns(&self) -> &[String] {
        &self.unknowns
    }

    pub fn ranking(&self) -> &Ranking {
        &self.ranking
    }

    pub fn vars(&self) -> &VarContext {
        self.module.vars()
    }

    pub fn field(&self) -> Field {
        self.module.field()
    }

    /// The free module the system is encoded in.
    pub fn module_ring(&self) -> &Arc<Ring> {
        &self.module
    }

    /// The polynomial ring of each encoded component.
    pub fn component_ring(&self) -> &Arc<Ring> {
        &self.scalar
    }

    pub fn compare(&self, a: &Derivative, b: &Derivative) -> Ordering {
        self.module.cmp(&a.to_monomial(), &b.to_monomial())
    }

    pub fn parse(self: &Arc<Self>, src: &str) -> Result<LinearDiffPoly> {
        self.parse_at(src, 1)
    }

    pub fn parse_at(self: &Arc<Self>, src: &str, line: usize) -> Result<LinearDiffPoly> {
        let element = parse_diff_at(&self.module, &self.unknowns, src, line)?;
        Ok(LinearDiffPoly {
            ring: self.clone(),
            element,
        })
    }

    pub fn derivative(self: &Arc<Self>, d: &Derivative) -> Result<LinearDiffPoly> {
        if d.unknown >= self.unknowns.len() || d.multi_index.nvars() != self.vars().len() {
            return Err(Error::Input("derivative outside the declared unknowns or variables".into()));
        }
        Ok(LinearDiffPoly {
            ring: self.clone(),
            element: Polynomial::monomial(&self.module, d.to_monomial()),
        })
    }

    /// Wraps a module element, e.g. one produced by a basis computation.
    pub fn from_module(self: &Arc<Self>, element: Polynomial) -> Result<LinearDiffPoly> {
        if !Arc::ptr_eq(element.ring(), &self.module) && **element.ring() != *self.module {
            return Err(Error::Context("element is not over this module".into()));
        }
        Ok(LinearDiffPoly {
            ring: self.clone(),
            element,
        })
    }

    /// Inverse of [`LinearDiffPoly::encode`].
    pub fn decode(self: &Arc<Self>, components: &[Polynomial]) -> Result<LinearDiffPoly> {
        if components.len() != self.unknowns.len() {
            return Err(Error::Input(format!(
                "{} components for {} unknowns",
                components.len(),
                self.unknowns.len()
            )));
        }
        let mut terms = Vec::new();
        for (j, p) in components.iter().enumerate() {
            if p.ring().vars() != self.vars() || p.ring().field() != self.field() {
                return Err(Error::Context("component over a different ring".into()));
            }
            for t in p.terms() {
                terms.push((t.mono.clone().with_position(j as u32), t.coeff.clone()));
            }
        }
        Ok(LinearDiffPoly {
            ring: self.clone(),
            element: Polynomial::from_terms(&self.module, terms),
        })
    }
}

impl PartialEq for DiffRing {
    fn eq(&self, other: &Self) -> bool {
        self.unknowns == other.unknowns && self.ranking == other.ranking && *self.module == *other.module
    }
}

/// Linear differential polynomial, terms in descending ranking.
#[derive(Clone)]
pub struct LinearDiffPoly {
    ring: Arc<DiffRing>,
    element: Polynomial,
}

impl LinearDiffPoly {
    pub fn ring(&self) -> &Arc<DiffRing> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.element.is_zero()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Derivative, &Coeff)> + '_ {
        self.element
            .terms()
            .iter()
            .map(|t| (Derivative::from_monomial(&t.mono), &t.coeff))
    }

    /// Leading derivative.
    pub fn leader(&self) -> Option<Derivative> {
        self.element.lm().map(Derivative::from_monomial)
    }

    pub fn as_module_element(&self) -> &Polynomial {
        &self.element
    }

    /// One polynomial per unknown.
    pub fn encode(&self) -> Vec<Polynomial> {
        let mut parts: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); self.ring.unknowns.len()];
        for t in self.element.terms() {
            parts[t.mono.position() as usize].push((Monomial::new(t.mono.exps().to_vec()), t.coeff.clone()));
        }
        parts
            .into_iter()
            .map(|terms| Polynomial::from_terms(&self.ring.scalar, terms))
            .collect()
    }

    pub fn differentiate(&self, i: usize) -> LinearDiffPoly {
        self.with(self.element.mul_var(i))
    }

    pub fn scale(&self, c: &Coeff) -> LinearDiffPoly {
        self.with(self.element.scale(c))
    }

    pub fn add(&self, other: &LinearDiffPoly) -> Result<LinearDiffPoly> {
        Ok(self.with(self.element.add(&other.element)?))
    }

    pub fn sub(&self, other: &LinearDiffPoly) -> Result<LinearDiffPoly> {
        Ok(self.with(self.element.sub(&other.element)?))
    }

    pub fn make_monic(&self) -> LinearDiffPoly {
        self.with(self.element.make_monic())
    }

    fn with(&self, element: Polynomial) -> LinearDiffPoly {
        LinearDiffPoly {
            ring: self.ring.clone(),
            element,
        }
    }
}

impl PartialEq for LinearDiffPoly {
    fn eq(&self, other: &Self) -> bool {
        self.element == other.element
    }
}

impl Eq for LinearDiffPoly {}

impl fmt::Display for LinearDiffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let field = self.ring.field();
        let vars = self.ring.vars();
        for (k, (d, c)) in self.terms().enumerate() {
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if !field.is_one(&abs) {
                write!(f, "{abs}*")?;
            }
            f.write_str(&self.ring.unknowns[d.unknown])?;
            if !d.multi_index.is_one() {
                let mut names = Vec::new();
                for i in 0..vars.len() {
                    for _ in 0..d.multi_index.deg_i(i) {
                        names.push(vars.name(i));
                    }
                }
                write!(f, "[{}]", names.join(","))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LinearDiffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearDiffPoly({self})")
    }
}

#[derive(Debug, Clone)]
pub struct DiffBasisReport {
    /// Monic, leaders descending.
    pub basis: Vec<LinearDiffPoly>,
    pub is_minimal: bool,
    pub finite_pommaret: bool,
    pub stats: Stats,
}

fn common_ring(system: &[LinearDiffPoly]) -> Result<Arc<DiffRing>> {
    let Some(first) = system.iter().find(|p| !p.is_zero()) else {
        return Err(Error::Input("system is empty or all zero".into()));
    };
    if system.iter().any(|p| *p.ring != *first.ring) {
        return Err(Error::Context("equations over different differential rings".into()));
    }
    Ok(first.ring.clone())
}

/// Janet basis of the linear differential ideal generated by `system`.
pub fn janet_basis_diff(system: &[LinearDiffPoly]) -> Result<DiffBasisReport> {
    janet_basis_diff_with(system, JanetOptions::default())
}

pub fn janet_basis_diff_with(system: &[LinearDiffPoly], opts: JanetOptions) -> Result<DiffBasisReport> {
    let ring = common_ring(system)?;
    let encoded: Vec<Polynomial> = system.iter().map(|p| p.element.clone()).collect();
    let report = janet_basis_with(&encoded, opts)?;
    Ok(DiffBasisReport {
        basis: report
            .basis
            .into_iter()
            .map(|element| LinearDiffPoly {
                ring: ring.clone(),
                element,
            })
            .collect(),
        is_minimal: report.is_minimal,
        finite_pommaret: report.finite_pommaret,
        stats: report.stats,
    })
}

/// Janet normal form of `f` modulo a Janet basis of linear equations.
pub fn involutive_nf_diff(f: &LinearDiffPoly, basis: &[LinearDiffPoly]) -> Result<LinearDiffPoly> {
    let elements: Vec<Polynomial> = basis.iter().map(|p| p.element.clone()).collect();
    let reducer = InvolutiveReducer::new(&elements, Division::Janet)?;
    Ok(f.with(reducer.normal_form(&f.element)))
}
