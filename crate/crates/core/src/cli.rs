//! Command-line front end.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::diffsys::DiffRing;
use crate::error::Error;
use crate::groebner::{buchberger, ideal_contains, ideal_equal, is_groebner_basis};
use crate::involutive::{
    autoreduce_j, autoreduce_p, autoreduce_pj_counted, check_division_axioms, has_finite_pommaret_basis,
    involutive_nf, is_janet_basis, is_pommaret_basis, janet_basis_with, janet_completion,
    minimal_generators, minimal_janet_basis, separation, truncated_pommaret_basis, BasisReport, Division,
    HilbertSeries, JanetOptions, PjVariant, Stats,
};
use crate::monomial::Monomial;
use crate::parse::parse_poly_at;
use crate::poly::{sort_by_lm_desc, Polynomial};
use crate::problem::{Mode, ProblemFile};
use crate::reduce::{autoreduce, conventional_nf};
use std::sync::Arc;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "invbasis", version, about = "Janet, Pommaret and Groebner bases")]
pub struct Cli {
    /// Append computation counters.
    #[arg(long, global = true)]
    pub stats: bool,
    /// Cross-check the result against the Buchberger oracle.
    #[arg(long, global = true)]
    pub verify: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a basis of the ideal generated by the file body.
    Basis {
        kind: BasisKind,
        file: PathBuf,
        /// Intermediate autoreduction used by the Janet completion.
        #[arg(long, value_enum, default_value_t = VariantArg::Janet)]
        variant: VariantArg,
        /// Disable the involutive chain criterion.
        #[arg(long)]
        no_criterion: bool,
    },
    /// Autoreduce the file body.
    Autoreduce {
        #[arg(long, value_enum)]
        mode: AutoreduceMode,
        file: PathBuf,
    },
    /// Normal form of `--poly` modulo the file body.
    Nf {
        #[arg(long, value_enum)]
        mode: NfMode,
        #[arg(long)]
        poly: String,
        file: PathBuf,
    },
    /// Test a property of the file body.
    Check { property: Property, file: PathBuf },
    /// Multiplicative variables of the leading monomials.
    Separation {
        #[arg(long, value_enum)]
        division: DivisionArg,
        file: PathBuf,
    },
    /// Hilbert function of the quotient by the ideal.
    Hilbert {
        #[arg(long)]
        degree: u32,
        file: PathBuf,
    },
    /// Leading monomials of the Pommaret basis up to a degree.
    PommaretTruncate {
        #[arg(long)]
        maxdeg: u32,
        file: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BasisKind {
    Janet,
    MinimalJanet,
    Groebner,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Janet,
    Pommaret,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AutoreduceMode {
    Pj,
    P,
    J,
    Conv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NfMode {
    J,
    P,
    Conv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Property {
    Janet,
    Pommaret,
    Groebner,
    FinitePommaret,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DivisionArg {
    Janet,
    Pommaret,
}

impl From<DivisionArg> for Division {
    fn from(d: DivisionArg) -> Self {
        match d {
            DivisionArg::Janet => Division::Janet,
            DivisionArg::Pommaret => Division::Pommaret,
        }
    }
}

/// Exit status with the text destined for stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Io(String),
    Algebra(Error),
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Algebra(e)
    }
}

type Run<T> = std::result::Result<T, Failure>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    let mut out = String::new();
    match dispatch(cli, &mut out) {
        Ok(()) => Outcome { code: EXIT_OK, stdout: out, stderr: String::new() },
        Err(f) => {
            let (code, msg) = match f {
                Failure::Io(m) => (EXIT_IO, m),
                Failure::Verify(m) => (EXIT_VERIFY, format!("verification failed: {m}")),
                Failure::Algebra(e) => {
                    let code = match e {
                        Error::Precondition(_) => EXIT_PRECONDITION,
                        _ => EXIT_PARSE,
                    };
                    (code, e.to_string())
                }
            };
            Outcome { code, stdout: out, stderr: format!("error: {msg}\n") }
        }
    }
}

fn file_of(cmd: &Command) -> &PathBuf {
    match cmd {
        Command::Basis { file, .. }
        | Command::Autoreduce { file, .. }
        | Command::Nf { file, .. }
        | Command::Check { file, .. }
        | Command::Separation { file, .. }
        | Command::Hilbert { file, .. }
        | Command::PommaretTruncate { file, .. } => file,
    }
}

/// Input generators plus the printer for results.
struct Loaded {
    problem: ProblemFile,
    polys: Vec<Polynomial>,
    diff: Option<Arc<DiffRing>>,
}

impl Loaded {
    fn show(&self, p: &Polynomial) -> String {
        match &self.diff {
            Some(r) => r.from_module(p.clone()).map(|d| d.to_string()).unwrap_or_else(|_| p.to_string()),
            None => p.to_string(),
        }
    }

    fn monomial(&self, m: &Monomial) -> String {
        m.display(self.polys[0].ring().vars()).to_string()
    }

    fn print_basis(&self, out: &mut String, basis: &[Polynomial]) {
        let _ = writeln!(out, "# size: {}", basis.len());
        for p in basis {
            let _ = writeln!(out, "{}", self.show(p));
        }
    }
}

fn load(path: &PathBuf) -> Run<Loaded> {
    let src = std::fs::read_to_string(path)
        .map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))?;
    let problem = ProblemFile::parse(&src)?;
    let (polys, diff) = match problem.mode {
        Mode::Poly => (problem.polynomials()?, None),
        Mode::Diff => {
            let sys = problem.diff_system()?;
            let ring = sys[0].ring().clone();
            (sys.iter().map(|p| p.as_module_element().clone()).collect(), Some(ring))
        }
    };
    if polys.iter().all(Polynomial::is_zero) {
        return Err(Error::Input("all generators are zero".into()).into());
    }
    Ok(Loaded { problem, polys, diff })
}

fn monic_sorted(polys: &[Polynomial]) -> Vec<Polynomial> {
    let mut v: Vec<Polynomial> = polys.iter().filter(|p| !p.is_zero()).map(Polynomial::make_monic).collect();
    sort_by_lm_desc(&mut v);
    v
}

fn write_stats(out: &mut String, s: &Stats) {
    let _ = writeln!(out, "# prolongations: {}", s.prolongations);
    let _ = writeln!(out, "# criterion hits: {}", s.criterion_hits);
    let _ = writeln!(out, "# normal forms: {}", s.normal_forms);
    let _ = writeln!(out, "# nonzero normal forms: {}", s.nonzero_normal_forms);
    let _ = writeln!(out, "# autoreductions: {}", s.autoreductions);
    let _ = writeln!(out, "# autoreduction passes: {}", s.autoreduction_passes);
}

fn verify_ideal(input: &[Polynomial], output: &[Polynomial]) -> Run<()> {
    if ideal_equal(input, output)? {
        Ok(())
    } else {
        Err(Failure::Verify("output generates a different ideal".into()))
    }
}

fn heads(polys: &[Polynomial]) -> Vec<Monomial> {
    polys.iter().filter_map(|p| p.lm().cloned()).collect()
}

fn dispatch(cli: &Cli, out: &mut String) -> Run<()> {
    let data = load(file_of(&cli.command))?;
    let f = &data.polys;
    match &cli.command {
        Command::Basis { kind, variant, no_criterion, .. } => {
            let (basis, report): (Vec<Polynomial>, Option<BasisReport>) = match kind {
                BasisKind::Janet => {
                    let opts = JanetOptions {
                        criterion: !no_criterion,
                        variant: match variant {
                            VariantArg::Janet => PjVariant::Janet,
                            VariantArg::Pommaret => PjVariant::Pommaret,
                        },
                    };
                    let r = janet_basis_with(f, opts)?;
                    (r.basis.clone(), Some(r))
                }
                BasisKind::MinimalJanet => {
                    let r = minimal_janet_basis(f)?;
                    (r.basis.clone(), Some(r))
                }
                BasisKind::Groebner => (buchberger(f), None),
            };
            data.print_basis(out, &basis);
            if let Some(r) = &report {
                let _ = writeln!(out, "# minimal: {}", r.is_minimal);
                let _ = writeln!(out, "# finite pommaret: {}", r.finite_pommaret);
                if cli.stats {
                    write_stats(out, &r.stats);
                }
            }
            if cli.verify {
                verify_ideal(f, &basis)?;
                let ok = match kind {
                    BasisKind::Groebner => is_groebner_basis(&basis),
                    _ => is_janet_basis(&basis)? && is_groebner_basis(&basis),
                };
                if !ok {
                    return Err(Failure::Verify("basis property does not hold".into()));
                }
                let _ = writeln!(out, "# verified");
            }
        }
        Command::Autoreduce { mode, .. } => {
            let (result, passes) = match mode {
                AutoreduceMode::Pj => autoreduce_pj_counted(f, PjVariant::Janet),
                AutoreduceMode::P => (autoreduce_p(f), 0),
                AutoreduceMode::J => (autoreduce_j(f), 0),
                AutoreduceMode::Conv => (autoreduce(f), 0),
            };
            let result = monic_sorted(&result);
            data.print_basis(out, &result);
            if cli.stats && *mode == AutoreduceMode::Pj {
                let _ = writeln!(out, "# autoreduction passes: {passes}");
            }
            if cli.verify {
                verify_ideal(f, &result)?;
                let _ = writeln!(out, "# verified");
            }
        }
        Command::Nf { mode, poly, .. } => {
            let h = match &data.diff {
                Some(r) => r.parse(poly)?.as_module_element().clone(),
                None => parse_poly_at(f[0].ring(), poly, 1)?,
            };
            let nf = match mode {
                NfMode::J => involutive_nf(&h, f, Division::Janet)?,
                NfMode::P => involutive_nf(&h, f, Division::Pommaret)?,
                NfMode::Conv => conventional_nf(&h, f),
            };
            let _ = writeln!(out, "{}", data.show(&nf));
            if cli.verify {
                let gb = buchberger(f);
                if !ideal_contains(&gb, &h.sub(&nf)?) {
                    return Err(Failure::Verify("difference is not in the ideal".into()));
                }
                let _ = writeln!(out, "# verified");
            }
        }
        Command::Check { property, .. } => {
            let set = monic_sorted(f);
            let answer = match property {
                Property::Janet => is_janet_basis(&set)?,
                Property::Pommaret => is_pommaret_basis(&set)?,
                Property::Groebner => is_groebner_basis(&set),
                Property::FinitePommaret => has_finite_pommaret_basis(&set)?,
            };
            let _ = writeln!(out, "{answer}");
            if cli.verify {
                if matches!(property, Property::Janet | Property::Pommaret) && answer && !is_groebner_basis(&set) {
                    return Err(Failure::Verify("involutive basis is not a Groebner basis".into()));
                }
                let _ = writeln!(out, "# verified");
            }
        }
        Command::Separation { division, .. } => {
            let division: Division = (*division).into();
            let lms = heads(f);
            let mult = separation(division, &lms)?;
            let n = data.problem.vars.len();
            let ctx = f[0].ring().vars();
            let _ = writeln!(out, "# division: {division}");
            for (u, m) in lms.iter().zip(&mult) {
                let _ = writeln!(
                    out,
                    "{} | mult: {} | nonmult: {}",
                    data.monomial(u),
                    ctx.fmt_vars(*m),
                    ctx.fmt_vars(m.complement(n))
                );
            }
            if cli.verify {
                if !check_division_axioms(&lms, division, None)?.all() {
                    return Err(Failure::Verify("division axioms fail on this set".into()));
                }
                let _ = writeln!(out, "# verified");
            }
        }
        Command::Hilbert { degree, .. } => {
            let gb = buchberger(f);
            let ord = f[0].ring().ordering().clone();
            let completed = janet_completion(&heads(&gb), &ord);
            let series = HilbertSeries::new(&completed, Division::Janet, f[0].ring().rank())?;
            let _ = writeln!(out, "# ideal series: {series}");
            for d in 0..=*degree {
                let _ = writeln!(out, "{d} {}", series.quotient_fn(d));
            }
            if cli.verify {
                let gens = minimal_generators(&heads(&gb), &ord);
                for d in 0..=*degree {
                    let brute = brute_force_ideal_count(&gens, f[0].ring().nvars(), f[0].ring().rank(), d);
                    if brute != series.ideal_fn(d) {
                        return Err(Failure::Verify(format!("Hilbert function differs at degree {d}")));
                    }
                }
                let _ = writeln!(out, "# verified");
            }
        }
        Command::PommaretTruncate { maxdeg, .. } => {
            let jb = minimal_janet_basis(f)?;
            let lms = truncated_pommaret_basis(&jb.basis, *maxdeg)?;
            let _ = writeln!(out, "# size: {}", lms.len());
            for u in &lms {
                let _ = writeln!(out, "{}", data.monomial(u));
            }
            if cli.verify {
                if !jb.leading_monomials().iter().all(|u| *maxdeg < u.degree() || lms.contains(u)) {
                    return Err(Failure::Verify("minimal Janet heads missing from the truncation".into()));
                }
                let _ = writeln!(out, "# verified");
            }
        }
    }
    Ok(())
}

/// Degree-`d` monomials (over all positions) divisible by some generator.
fn brute_force_ideal_count(gens: &[Monomial], n: usize, rank: usize, d: u32) -> num_bigint::BigUint {
    let mut count = 0u64;
    let mut exps = vec![0u32; n];
    fn walk(i: usize, left: u32, exps: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
        if i + 1 == exps.len() {
            exps[i] = left;
            f(exps);
            return;
        }
        for e in 0..=left {
            exps[i] = e;
            walk(i + 1, left - e, exps, f);
        }
    }
    for pos in 0..rank {
        walk(0, d, &mut exps, &mut |e| {
            let w = Monomial::new(e.to_vec()).with_position(pos as u32);
            if gens.iter().any(|g| g.divides(&w)) {
                count += 1;
            }
        });
    }
    count.into()
}
