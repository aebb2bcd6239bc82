//! Browser front end: three operations over problem text, each returning
//! either rendered output or an error message for the page to show.

use std::fmt::Write;

use invbasis::involutive::{
    janet_basis, janet_completion, minimal_janet_basis, pommaret_condition, truncated_pommaret_completion, Division,
    SeparationTable,
};
use invbasis::diffsys::janet_basis_diff;
use invbasis::monomial::{Monomial, MonomialOrdering, OrderKind, VarContext};
use invbasis::parse::parse_monomial;
use invbasis::problem::{Mode, ProblemFile};
use serde::Serialize;
use wasm_bindgen::prelude::*;

fn err(e: invbasis::Error) -> String {
    e.to_string()
}

/// Janet basis (`minimal = false`) or minimal Janet basis of a problem file.
pub fn basis_text(src: &str, minimal: bool) -> Result<String, String> {
    let problem = ProblemFile::parse(src).map_err(err)?;
    let mut out = String::new();
    match problem.mode {
        Mode::Poly => {
            let f = problem.polynomials().map_err(err)?;
            let r = if minimal { minimal_janet_basis(&f) } else { janet_basis(&f) }.map_err(err)?;
            for p in &r.basis {
                let _ = writeln!(out, "{p}");
            }
            let _ = writeln!(out, "# size: {}", r.len());
            let _ = writeln!(out, "# minimal: {}", r.is_minimal);
            let _ = writeln!(out, "# finite pommaret: {}", r.finite_pommaret);
            let _ = writeln!(out, "# prolongations: {}", r.stats.prolongations);
        }
        Mode::Diff => {
            let sys = problem.diff_system().map_err(err)?;
            let r = janet_basis_diff(&sys).map_err(err)?;
            for p in &r.basis {
                let _ = writeln!(out, "{p}");
            }
            let _ = writeln!(out, "# size: {}", r.basis.len());
            let _ = writeln!(out, "# minimal: {}", r.is_minimal);
            let _ = writeln!(out, "# finite pommaret: {}", r.finite_pommaret);
        }
    }
    Ok(out)
}

fn monomials(ctx: &VarContext, src: &str) -> Result<Vec<Monomial>, String> {
    let set: Vec<Monomial> = src
        .split([',', '\n'])
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse_monomial(ctx, s).map_err(err))
        .collect::<Result<_, _>>()?;
    if set.is_empty() {
        return Err("no monomials given".into());
    }
    Ok(set)
}

fn division(name: &str) -> Result<Division, String> {
    name.parse().map_err(err)
}

/// Separation table for a comma separated monomial list over `vars`.
pub fn separation_text(vars: &str, set: &str, division_name: &str) -> Result<String, String> {
    let names: Vec<&str> = vars.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    let ctx = VarContext::new(&names).map_err(err)?;
    let set = monomials(&ctx, set)?;
    let table = SeparationTable::new(division(division_name)?, &set).map_err(err)?;
    let mut out = String::new();
    for (k, u) in set.iter().enumerate() {
        let show = |s: String| if s.is_empty() { "-".to_string() } else { s };
        let _ = writeln!(
            out,
            "{} | mult: {} | nonmult: {}",
            u.display(&ctx),
            show(ctx.fmt_vars(table.mult(k))),
            show(ctx.fmt_vars(table.nonmult(k)))
        );
    }
    Ok(out)
}

#[derive(Debug, Serialize, PartialEq)]
pub struct Staircase {
    pub extent: u32,
    pub generators: Vec<[u32; 2]>,
    /// Whether x and y are multiplicative for each generator.
    pub mult: Vec<[bool; 2]>,
    /// `cells[b][a]` for `x^a*y^b`: owning generator, -1 outside the ideal,
    /// -2 inside the ideal but in no involutive cone.
    pub cells: Vec<Vec<i32>>,
    pub complete: bool,
    pub finite_pommaret: bool,
}

/// Involutive cones of a monomial set in `x, y`, optionally completed first.
pub fn staircase(set: &str, division_name: &str, complete: bool, extent: u32) -> Result<Staircase, String> {
    let ctx = VarContext::new(&["x", "y"]).map_err(err)?;
    let input = monomials(&ctx, set)?;
    let div = division(division_name)?;
    let ord = MonomialOrdering::new(OrderKind::DegRevLex);
    let top = input.iter().map(Monomial::degree).max().unwrap_or(0);
    if top > extent {
        return Err(format!("generator degree {top} exceeds the grid size {extent}"));
    }
    let set = match (complete, div) {
        (false, _) => input.clone(),
        (true, Division::Janet) => janet_completion(&input, &ord),
        (true, Division::Pommaret) => truncated_pommaret_completion(&input, &ord, extent).map_err(err)?,
    };
    let table = SeparationTable::new(div, &set).map_err(err)?;
    let cells = (0..=extent)
        .map(|b| {
            (0..=extent)
                .map(|a| {
                    let w = Monomial::new(vec![a, b]);
                    match table.divisor(&w, &ord) {
                        Some(k) => k as i32,
                        None if input.iter().any(|u| u.divides(&w)) => -2,
                        None => -1,
                    }
                })
                .collect()
        })
        .collect();
    Ok(Staircase {
        extent,
        generators: set.iter().map(|u| [u.deg_i(0), u.deg_i(1)]).collect(),
        mult: (0..set.len()).map(|k| [table.mult(k).contains(0), table.mult(k).contains(1)]).collect(),
        cells,
        complete: invbasis::involutive::is_complete(&set, div).map_err(err)?,
        finite_pommaret: pommaret_condition(&janet_completion(&input, &ord)),
    })
}

#[wasm_bindgen]
pub fn basis(src: &str, minimal: bool) -> Result<String, JsError> {
    basis_text(src, minimal).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn separation(vars: &str, set: &str, division: &str) -> Result<String, JsError> {
    separation_text(vars, set, division).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn cones(set: &str, division: &str, complete: bool, extent: u32) -> Result<String, JsError> {
    let s = staircase(set, division, complete, extent).map_err(|e| JsError::new(&e))?;
    serde_json::to_string(&s).map_err(|e| JsError::new(&e.to_string()))
}
