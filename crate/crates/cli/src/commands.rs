use std::sync::Arc;

use clap::ValueEnum;
use glacalc_core::extcalc::{
    ce_exactness, cohomology_dimensions, ext_diff, interior, lie_derivative, maurer_cartan,
    pullback, validate_morphism, wedge, Form,
};
use glacalc_core::gla::{validate_axioms, Algebra, Element};
use glacalc_core::idsys::{
    annihilator, cartan_equivalence, eas_check, frobenius_certificate, involutive_direct,
    symplectic_check, IdealSpec, Subspace,
};
use glacalc_core::report::{Sampling, ValidationReport};
use glacalc_core::Error;
use thiserror::Error;

use crate::definition::{Definition, DefinitionError, Named};
use crate::report::{Report, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Axiom suite for an algebra, or the morphism checks for a morphism.
    Validate,
    /// Maurer-Cartan structure equations and anchor relations.
    Mc,
    /// ω(z1, ..., zq).
    Eval,
    /// Exterior differential of a form.
    D,
    Wedge,
    /// Lie derivative L_z ω.
    Lie,
    /// Interior product i_z ω.
    Interior,
    /// φ*ω along a morphism.
    Pullback,
    /// A basis of the annihilator of a subspace.
    Annihilator,
    /// Closure of a subspace under the bracket.
    Involutive,
    /// Frobenius coframe test with its certificate.
    Frobenius,
    /// All three involutivity procedures side by side.
    Cartan,
    /// Exterior algebraic system test for an ideal and a subspace.
    Eas,
    Symplectic,
    /// Cohomology dimensions, or exactness of a given form.
    Cohomology,
}

impl Command {
    pub fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }
}

#[derive(Debug, Clone)]
pub struct Options {
    pub seed: u64,
    pub samples: usize,
    pub degree_cap: Option<usize>,
    pub args: Vec<String>,
}

impl Default for Options {
    fn default() -> Self {
        let s = Sampling::default();
        Options {
            seed: s.seed,
            samples: s.samples,
            degree_cap: None,
            args: Vec::new(),
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("{0}")]
    Definition(#[from] DefinitionError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Engine(#[from] Error),
}

impl CliError {
    /// 1 when the engine's own cross-checks disagree, 2 for everything the
    /// user can fix.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Engine(Error::TheoremEquivalenceViolated(_))
            | CliError::Engine(Error::CertificateReconstructionFailed(_)) => 1,
            _ => 2,
        }
    }
}

type Run<T> = Result<T, CliError>;

fn usage<T>(msg: impl Into<String>) -> Run<T> {
    Err(CliError::Usage(msg.into()))
}

/// Walks the `--arg` list, falling back to the first declared object.
struct Args<'a> {
    list: &'a [String],
    next: usize,
    used: Vec<String>,
}

impl<'a> Args<'a> {
    fn peek(&self) -> Option<&'a str> {
        self.list.get(self.next).map(String::as_str)
    }

    fn raw(&mut self, what: &str) -> Run<&'a str> {
        let Some(name) = self.peek() else {
            return usage(format!("missing --arg for the {what}"));
        };
        self.next += 1;
        self.used.push(name.to_string());
        Ok(name)
    }

    fn take<T>(&mut self, kind: &str, named: &'a Named<T>, default: bool) -> Run<&'a T> {
        if let Some(name) = self.peek() {
            self.next += 1;
            self.used.push(name.to_string());
            return match named.get(name) {
                Some(v) => Ok(v),
                None => usage(format!("no {kind} named `{name}` in the file")),
            };
        }
        if !default {
            return usage(format!("missing --arg for the {kind}"));
        }
        match named.first() {
            Some((name, v)) => {
                self.used.push(name.to_string());
                Ok(v)
            }
            None => usage(format!("the file declares no {kind}")),
        }
    }

    fn finish(&self) -> Run<()> {
        match self.list.get(self.next) {
            Some(extra) => usage(format!("unexpected argument `{extra}`")),
            None => Ok(()),
        }
    }
}

/// An element name or a basis label of `alg`.
fn element(def: &Definition, alg: &Arc<Algebra>, token: &str) -> Run<Element> {
    if let Some(z) = def.elements.get(token) {
        return Ok(Element::new(alg, z.coeffs().to_vec())?);
    }
    match alg.labels().iter().position(|l| l == token) {
        Some(a) => Ok(Element::basis(alg, a)),
        None => usage(format!("no element or basis label named `{token}`")),
    }
}

fn push_validation(report: &mut Report, v: &ValidationReport) {
    for c in &v.checks {
        let payload = c.witness.as_ref().map(|w| w.to_string()).unwrap_or_default();
        report.push(&c.name, Verdict::from_bool(c.passed), payload);
    }
}

fn index_label(idx: &[usize]) -> String {
    let wide = idx.iter().any(|&i| i >= 9);
    let parts: Vec<String> = idx.iter().map(|i| (i + 1).to_string()).collect();
    parts.join(if wide { "," } else { "" })
}

pub fn run(cmd: Command, def: &Definition, opts: &Options) -> Run<Report> {
    let mut args = Args {
        list: &opts.args,
        next: 0,
        used: Vec::new(),
    };
    let mut report = Report::new(&cmd.name(), Vec::new());
    let sampling = Sampling {
        samples: opts.samples,
        seed: opts.seed,
    };
    match cmd {
        Command::Validate => {
            report.seed = Some(opts.seed);
            let is_morphism = args.peek().is_some_and(|n| def.morphisms.get(n).is_some());
            if is_morphism {
                let phi = args.take("morphism", &def.morphisms, false)?;
                push_validation(&mut report, &validate_morphism(phi, sampling));
            } else {
                let alg = args.take("algebra", &def.algebras, true)?;
                push_validation(&mut report, &validate_axioms(alg, sampling));
            }
        }
        Command::Mc => {
            let alg = args.take("algebra", &def.algebras, true)?;
            let mc = maurer_cartan(alg);
            for eq in &mc.equations {
                let mut line = eq.line();
                if !eq.equal {
                    line.push_str(&format!(" (expected {})", eq.expected));
                }
                report.push("structure", Verdict::from_bool(eq.equal), line);
            }
            for rel in &mc.anchor_relations {
                let mut line = rel.line();
                if !rel.equal {
                    line.push_str(&format!(" (expected {})", rel.expected));
                }
                report.push("anchor", Verdict::from_bool(rel.equal), line);
            }
        }
        Command::Eval => {
            let w = args.take("form", &def.forms, true)?;
            let mut zs = Vec::new();
            while args.peek().is_some() {
                let token = args.raw("element")?;
                zs.push(element(def, w.algebra(), token)?);
            }
            let v = w.eval(&zs)?;
            report.info("value", v.display_with(w.algebra().var_names()).to_string());
        }
        Command::D => {
            let w = args.take("form", &def.forms, true)?;
            report.info("value", ext_diff(w).to_string());
        }
        Command::Wedge => {
            let w = args.take("form", &def.forms, false)?;
            let t = args.take("form", &def.forms, false)?;
            report.info("value", wedge(w, t)?.to_string());
        }
        Command::Lie | Command::Interior => {
            let token = args.raw("element")?;
            let w = args.take("form", &def.forms, false)?;
            let z = element(def, w.algebra(), token)?;
            let out = if cmd == Command::Lie {
                lie_derivative(&z, w)?
            } else {
                interior(&z, w)?
            };
            report.info("value", out.to_string());
        }
        Command::Pullback => {
            let phi = args.take("morphism", &def.morphisms, false)?;
            let w = args.take("form", &def.forms, false)?;
            report.info("value", pullback(phi, w)?.to_string());
        }
        Command::Annihilator => {
            let e = args.take("subspace", &def.subspaces, true)?;
            let ann = annihilator(e);
            if ann.is_empty() {
                report.info("annihilator", "0");
            }
            for (k, th) in ann.iter().enumerate() {
                report.info(format!("theta^{}", k + 1), th.to_string());
            }
        }
        Command::Involutive => {
            let e = args.take("subspace", &def.subspaces, true)?;
            let v = involutive_direct(e);
            if v.involutive {
                report.push("closure", Verdict::Pass, "every generator bracket lies in E");
            }
            for w in &v.witnesses {
                let text = format!("[s{},s{}] = {} lies outside E", w.a, w.b, w.bracket);
                report.push("closure", Verdict::Fail, text);
            }
        }
        Command::Frobenius => {
            let e = args.take("subspace", &def.subspaces, true)?;
            frobenius(&mut report, e)?;
        }
        Command::Cartan => {
            let e = args.take("subspace", &def.subspaces, true)?;
            let rep = cartan_equivalence(e, opts.degree_cap)?;
            let summary = |ok: bool| if ok { "involutive" } else { "not involutive" };
            report.push("direct", Verdict::from_bool(rep.direct.involutive), summary(rep.direct.involutive));
            report.push(
                "frobenius",
                Verdict::from_bool(rep.frobenius.involutive),
                summary(rep.frobenius.involutive),
            );
            report.push("eas", Verdict::from_bool(rep.eas.passed()), summary(rep.eas.passed()));
        }
        Command::Eas => {
            let from_file = args.peek().is_some_and(|n| def.ideals.get(n).is_some());
            let ideal = if from_file {
                Some(args.take("ideal", &def.ideals, false)?)
            } else {
                None
            };
            let e = args.take("subspace", &def.subspaces, true)?;
            let ideal = match ideal {
                Some(i) if opts.degree_cap.is_none() => i.clone(),
                Some(i) => IdealSpec::new(e.algebra(), i.generators().to_vec(), opts.degree_cap)?,
                None => {
                    report.info("ideal", "annihilator of E");
                    IdealSpec::of_annihilator(e, opts.degree_cap)?
                }
            };
            let v = eas_check(&ideal, e)?;
            let show = |w: &Option<glacalc_core::report::Witness>| match w {
                None => String::new(),
                Some(w) => w.to_string(),
            };
            report.push("vanishing", Verdict::from_bool(v.vanishing.is_none()), show(&v.vanishing));
            report.push("closure", Verdict::from_bool(v.closure.is_none()), show(&v.closure));
        }
        Command::Symplectic => {
            let w = args.take("form", &def.forms, true)?;
            let rep = symplectic_check(w)?;
            let dw = if rep.closed {
                String::new()
            } else {
                format!("d omega = {}", ext_diff(w))
            };
            report.push("closed", Verdict::from_bool(rep.closed), dw);
            let mut det = format!("det = {}", rep.determinant.display_with(w.algebra().var_names()));
            if rep.odd_dimension {
                det.push_str(" (odd dimension)");
            }
            report.push("nondegenerate", Verdict::from_bool(rep.nondegenerate()), det);
        }
        Command::Cohomology => {
            let is_form = args.peek().is_some_and(|n| def.forms.get(n).is_some());
            if is_form {
                let w = args.take("form", &def.forms, false)?;
                match ce_exactness(w)? {
                    Some(eta) => report.info("exact", format!("eta = {eta}")),
                    None => report.info("exact", "no"),
                }
            } else {
                let alg = args.take("algebra", &def.algebras, true)?;
                for (q, n) in cohomology_dimensions(alg)?.iter().enumerate() {
                    report.info(format!("H^{q}"), n.to_string());
                }
            }
        }
    }
    args.finish()?;
    report.args = args.used;
    Ok(report)
}

fn frobenius(report: &mut Report, e: &Subspace) -> Run<()> {
    let cert = frobenius_certificate(e)?;
    let r = cert.rank;
    report.info("rank", r.to_string());
    for (k, s) in cert.basis.iter().enumerate() {
        report.info(format!("s{}", k + 1), s.to_string());
    }
    for (k, th) in cert.coframe.iter().enumerate() {
        report.info(format!("theta^{}", k + 1), th.to_string());
    }
    let names = e.algebra().var_names();
    if cert.obstruction.is_empty() {
        report.push("obstruction", Verdict::Pass, "every A^a_bc vanishes");
    }
    for (&(alpha, b, c), v) in &cert.obstruction {
        let text = format!("A^{}_{} = {}", alpha + 1, index_label(&[b, c]), v.display_with(names));
        report.push("obstruction", Verdict::Fail, text);
    }
    if let Some(omega) = &cert.omega {
        for (i, row) in omega.iter().enumerate() {
            for (j, w) in row.iter().enumerate() {
                if !w.is_zero() {
                    report.info(format!("omega^{}_{}", r + i + 1, r + j + 1), w.to_string());
                }
            }
        }
        reconstruct(report, &cert.coframe, omega, r)?;
    }
    Ok(())
}

/// Re-derives `dθ^α = Σ_γ ω^α_γ ∧ θ^γ` from the printed pieces.
fn reconstruct(report: &mut Report, coframe: &[Form], omega: &[Vec<Form>], r: usize) -> Run<()> {
    for (i, row) in omega.iter().enumerate() {
        let th = &coframe[r + i];
        let mut sum = Form::zero(th.algebra(), 2);
        for (j, w) in row.iter().enumerate() {
            sum = sum.try_add(&wedge(w, &coframe[r + j])?)?;
        }
        let ok = ext_diff(th) == sum;
        let label = format!("d theta^{} = sum omega^{}_g ^ theta^g", r + i + 1, r + i + 1);
        report.push("certificate", Verdict::from_bool(ok), label);
    }
    Ok(())
}
