//! Line-oriented problem files:
//!
//! ```text
//! vars: x, y, z
//! order: degrevlex
//! char: 0
//! polys:
//! x^2*y - z
//! x*y^2 - y
//! ```
//!
//! `mode: diff` with `unknowns: y1, y2` switches the body to linear
//! differential polynomials. `#` starts a comment.

use std::sync::Arc;

use crate::coeff::Field;
use crate::diffsys::{DiffRing, LinearDiffPoly, Ranking};
use crate::error::{Error, Result};
use crate::monomial::{OrderKind, VarContext};
use crate::parse::parse_poly_at;
use crate::poly::{Polynomial, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Poly,
    Diff,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemFile {
    pub vars: Vec<String>,
    pub order: OrderKind,
    pub characteristic: u64,
    pub mode: Mode,
    pub unknowns: Vec<String>,
    /// `(1-based line, text)` of each body expression.
    pub body: Vec<(usize, String)>,
}

fn split_list(s: &str) -> Vec<String> {
    s.split(',').map(|t| t.trim().to_string()).filter(|t| !t.is_empty()).collect()
}

impl ProblemFile {
    pub fn parse(src: &str) -> Result<Self> {
        let mut vars = None;
        let mut order = OrderKind::DegRevLex;
        let mut characteristic = 0;
        let mut mode = Mode::Poly;
        let mut unknowns = Vec::new();
        let mut body = Vec::new();
        let mut in_body = false;
        let mut polys_line = 0;

        for (k, raw) in src.lines().enumerate() {
            let line = k + 1;
            let text = raw.split('#').next().unwrap_or("");
            if text.trim().is_empty() {
                continue;
            }
            if in_body {
                body.push((line, text.to_string()));
                continue;
            }
            let Some((key, value)) = text.split_once(':') else {
                return Err(Error::parse(line, 1, "expected `key: value`"));
            };
            let value_col = key.len() + 2 + (value.len() - value.trim_start().len());
            let value = value.trim();
            match key.trim() {
                "vars" => vars = Some(split_list(value)),
                "order" => {
                    order = value
                        .parse()
                        .map_err(|_| Error::parse(line, value_col, format!("unknown ordering `{value}`")))?
                }
                "char" => {
                    characteristic = value
                        .parse()
                        .map_err(|_| Error::parse(line, value_col, format!("bad characteristic `{value}`")))?
                }
                "mode" => {
                    mode = match value {
                        "poly" => Mode::Poly,
                        "diff" => Mode::Diff,
                        _ => return Err(Error::parse(line, value_col, format!("unknown mode `{value}`"))),
                    }
                }
                "unknowns" => unknowns = split_list(value),
                "polys" => {
                    in_body = true;
                    polys_line = line;
                    if !value.is_empty() {
                        return Err(Error::parse(line, value_col, "expressions start on the next line"));
                    }
                }
                other => return Err(Error::parse(line, 1, format!("unknown key `{other}`"))),
            }
        }

        let Some(vars) = vars else {
            return Err(Error::parse(1, 1, "missing `vars:`"));
        };
        if vars.is_empty() {
            return Err(Error::parse(1, 1, "`vars:` is empty"));
        }
        if !in_body {
            return Err(Error::parse(src.lines().count().max(1), 1, "missing `polys:`"));
        }
        if body.is_empty() {
            return Err(Error::parse(polys_line, 1, "no expressions after `polys:`"));
        }
        if mode == Mode::Diff && unknowns.is_empty() {
            return Err(Error::parse(1, 1, "`mode: diff` needs `unknowns:`"));
        }
        Ok(ProblemFile {
            vars,
            order,
            characteristic,
            mode,
            unknowns,
            body,
        })
    }

    pub fn field(&self) -> Result<Field> {
        Field::from_characteristic(self.characteristic)
    }

    pub fn var_context(&self) -> Result<VarContext> {
        VarContext::new(&self.vars)
    }

    pub fn ring(&self) -> Result<Arc<Ring>> {
        Ok(Ring::new(self.var_context()?, self.order, self.field()?))
    }

    /// Body parsed as polynomials.
    pub fn polynomials(&self) -> Result<Vec<Polynomial>> {
        if self.mode == Mode::Diff {
            return Err(Error::Input("file is in differential mode".into()));
        }
        let ring = self.ring()?;
        self.body
            .iter()
            .map(|(line, text)| parse_poly_at(&ring, text, *line))
            .collect()
    }

    pub fn diff_ring(&self) -> Result<Arc<DiffRing>> {
        DiffRing::from_names(
            self.var_context()?,
            self.unknowns.clone(),
            Ranking::new(self.order, self.unknowns.len()),
            self.field()?,
        )
    }

    /// Body parsed as linear differential polynomials.
    pub fn diff_system(&self) -> Result<Vec<LinearDiffPoly>> {
        if self.mode != Mode::Diff {
            return Err(Error::Input("file is not in differential mode".into()));
        }
        let ring = self.diff_ring()?;
        self.body
            .iter()
            .map(|(line, text)| ring.parse_at(text, *line))
            .collect()
    }
}
