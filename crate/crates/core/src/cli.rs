//! Commands behind the `braidrep` binary.
//!
//! Each command returns a [`RunReport`] holding a JSON payload and a
//! plain-text rendering. Exit codes: 0 when the computation agrees with the
//! expected outcome (including recorded divergences), 1 on a mismatch,
//! 2 on a usage error.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::irreducibility::{
    burnside_span, grid_cells, grid_report, is_irreducible, predicted_status, GridCell, SpecializedRep,
    Status,
};
use crate::kernel::{candidate_pairs, certify, pure_commutator_word, KernelError};
use crate::laurent::LaurentPoly;
use crate::presentation::{Gen, Mode, Presentation};
use crate::ratfunc::RationalFunction;
use crate::rep::{ExtensionParams, InvolutionFamily, Representation};
use crate::ring::{Ring, Q};
use crate::sample;
use crate::solver::{
    assemble_extension, involution_classify, laurent_representability, solve_involution_2x2,
    solve_linear_part, block_form_check,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportStatus {
    Pass,
    Fail,
    Divergence,
}

impl ReportStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ReportStatus::Pass => "pass",
            ReportStatus::Fail => "fail",
            ReportStatus::Divergence => "divergence",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            ReportStatus::Pass | ReportStatus::Divergence => 0,
            ReportStatus::Fail => 1,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub status: ReportStatus,
    pub text: String,
}

impl RunReport {
    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "status": self.status.as_str(),
        })
    }

    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }
}

/// Invalid arguments; exit code 2.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("{0}")]
pub struct UsageError(pub String);

impl UsageError {
    pub const EXIT_CODE: i32 = 2;
}

fn usage<E: std::fmt::Display>(e: E) -> UsageError {
    UsageError(e.to_string())
}

/// Representation kinds accepted by `show-rep` and `verify`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepKind {
    Standard,
    Burau,
    F,
    SingularExt,
    Vsb2,
}

impl std::str::FromStr for RepKind {
    type Err = UsageError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "standard" => RepKind::Standard,
            "burau" => RepKind::Burau,
            "f" => RepKind::F,
            "singular-ext" => RepKind::SingularExt,
            "vsb2" => RepKind::Vsb2,
            _ => {
                return Err(UsageError(format!(
                    "unknown representation {s:?}; expected standard, burau, f, singular-ext or vsb2"
                )))
            }
        })
    }
}

/// Parameters shared by the representation commands.
#[derive(Debug, Clone)]
pub struct RepArgs {
    pub kind: RepKind,
    pub n: usize,
    pub a: LaurentPoly,
    pub c: LaurentPoly,
    pub family: u8,
    pub p: LaurentPoly,
    pub q: LaurentPoly,
    pub r: LaurentPoly,
    /// Group mode: singular images must be invertible over `Z[t, t^-1]`.
    pub group: bool,
}

impl RepArgs {
    pub fn new(kind: RepKind, n: usize) -> Self {
        Self {
            kind,
            n,
            a: LaurentPoly::one(),
            c: LaurentPoly::zero(),
            family: 5,
            p: LaurentPoly::zero(),
            q: LaurentPoly::one(),
            r: LaurentPoly::zero(),
            group: false,
        }
    }

    fn inputs(&self) -> Value {
        let mut m = json!({
            "kind": format!("{:?}", self.kind),
            "n": self.n,
            "group": self.group,
        });
        if matches!(self.kind, RepKind::SingularExt | RepKind::Vsb2) {
            m["a"] = json!(self.a.to_string());
            m["c"] = json!(self.c.to_string());
        }
        if self.kind == RepKind::Vsb2 {
            m["family"] = json!(self.family);
            m["p"] = json!(self.p.to_string());
            m["q"] = json!(self.q.to_string());
            m["r"] = json!(self.r.to_string());
        }
        m
    }

    pub fn build(&self) -> Result<Representation<LaurentPoly>, UsageError> {
        let t = LaurentPoly::t();
        let params = ExtensionParams::new(self.a.clone(), self.c.clone());
        match self.kind {
            RepKind::Standard => Representation::standard(self.n, &t),
            RepKind::Burau => Representation::burau(self.n, &t),
            RepKind::F => Representation::f_rep(self.n, &t),
            RepKind::SingularExt => Representation::singular_extension(self.n, &t, &params, self.group),
            RepKind::Vsb2 => {
                if self.n != 2 {
                    return Err(UsageError(format!("vsb2 is defined on 2 strands, got {}", self.n)));
                }
                let fam = InvolutionFamily::from_id(self.family, self.p.clone(), self.q.clone(), self.r.clone())
                    .ok_or_else(|| UsageError(format!("family must be 1..=5, got {}", self.family)))?;
                Representation::vsb2_extension(&t, &fam, &params, self.group)
            }
        }
        .map_err(usage)
    }
}

fn render_rep(rep: &Representation<LaurentPoly>) -> String {
    let mut out = format!("{} representation, n = {}, dim = {}\n", rep.name, rep.n, rep.dim);
    for (k, v) in &rep.params {
        let _ = writeln!(out, "  {k} = {v}");
    }
    for (g, m) in rep.images() {
        let _ = write!(out, "{g}:\n{m}");
    }
    out
}

pub fn show_rep(args: &RepArgs) -> Result<RunReport, UsageError> {
    let rep = args.build()?;
    Ok(RunReport {
        command: "show-rep".into(),
        inputs: args.inputs(),
        result: rep.to_json(),
        status: ReportStatus::Pass,
        text: render_rep(&rep),
    })
}

pub fn verify(args: &RepArgs, mode: Option<Mode>) -> Result<RunReport, UsageError> {
    let rep = args.build()?;
    let mode = mode.unwrap_or(rep.mode);
    let pres = Presentation::build(args.n, mode, args.group).map_err(usage)?;
    let violations = rep.verify_relations(&pres).map_err(usage)?;
    let listed: Vec<Value> = violations
        .iter()
        .map(|v| json!({"relation": v.relation.to_string(), "difference": v.difference.to_json()}))
        .collect();
    let mut text = format!(
        "{} relations of the {:?} presentation on {} strands checked: {} violated\n",
        pres.relations.len(),
        mode,
        args.n,
        violations.len()
    );
    for v in &violations {
        let _ = writeln!(text, "  violated: {}", v.relation);
    }
    let mut inputs = args.inputs();
    inputs["mode"] = json!(format!("{mode:?}"));
    Ok(RunReport {
        command: "verify".into(),
        inputs,
        result: json!({"relations": pres.relations.len(), "violations": listed}),
        status: if violations.is_empty() {
            ReportStatus::Pass
        } else {
            ReportStatus::Fail
        },
        text,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtensionTarget {
    Sb,
    Vsb2,
    Vsb,
}

impl std::str::FromStr for ExtensionTarget {
    type Err = UsageError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sb" => Ok(ExtensionTarget::Sb),
            "vsb2" => Ok(ExtensionTarget::Vsb2),
            "vsb" => Ok(ExtensionTarget::Vsb),
            _ => Err(UsageError(format!("unknown target {s:?}; expected sb, vsb2 or vsb"))),
        }
    }
}

pub fn solve_extension(target: ExtensionTarget, n: usize) -> Result<RunReport, UsageError> {
    match target {
        ExtensionTarget::Sb => solve_sb(n),
        ExtensionTarget::Vsb2 => {
            if n != 2 {
                return Err(UsageError(format!("vsb2 has 2 strands, got {n}")));
            }
            involutions(0, sample::seed_from_env()).map(|mut r| {
                r.command = "solve-extension".into();
                r.inputs = json!({"target": "vsb2", "n": 2});
                r
            })
        }
        ExtensionTarget::Vsb => solve_vsb(n),
    }
}

fn solve_sb(n: usize) -> Result<RunReport, UsageError> {
    let pres = Presentation::build(n, Mode::Singular, false).map_err(usage)?;
    let known = Representation::standard(n, &LaurentPoly::t()).map_err(usage)?;
    let taus: Vec<Gen> = (1..n).map(Gen::tau).collect();
    let sys = assemble_extension(&pres, &known, &taus).map_err(usage)?;
    let fam = solve_linear_part(&sys).map_err(usage)?;
    let repr = laurent_representability(&fam);
    let form = block_form_check(&fam).expect("at least one singular generator");
    let mut text = format!(
        "SB_{n}: {} unknowns, {} linear equations ({} zero and {} duplicate entries discarded), {} nonlinear\n",
        sys.unknowns.len(),
        sys.equations.len(),
        sys.discarded_zero,
        sys.discarded_duplicate,
        sys.nonlinear_residue.len()
    );
    let _ = writeln!(text, "free: {}", fam.free_names().join(", "));
    for (v, e) in &fam.bindings {
        let _ = writeln!(text, "  {} = {}", fam.unknowns[*v], e.render(&fam.unknowns));
    }
    if !fam.residue.is_empty() {
        let _ = writeln!(text, "nonlinear residue after substitution: {}", fam.residue.len());
    }
    let _ = writeln!(
        text,
        "block form: a = {}, c = {}; raw match {}; extra free {:?}; after setting {:?} to 1: match {}",
        form.a, form.c, form.raw_matches, form.extra_free, form.imposed, form.matches_after_imposing
    );
    let _ = writeln!(
        text,
        "group mode additionally needs a^2 - t c^2 to be a unit of Z[t, t^-1]"
    );
    let matches = match n {
        2 => {
            fam.free_names() == ["a", "c"]
                && fam.binding_of("d").as_deref() == Some("a")
                && fam.binding_of("b").as_deref() == Some("c*t^1")
                && sys.equations.len() == 3
        }
        3 => sys.equations.len() == 32 && sys.unknowns.len() == 18 && form.matches_after_imposing,
        _ => form.matches_after_imposing && fam.residue.is_empty(),
    } && repr.representable;
    Ok(RunReport {
        command: "solve-extension".into(),
        inputs: json!({"target": "sb", "n": n}),
        result: json!({
            "unknowns": sys.unknowns.len(),
            "equations": sys.equations.len(),
            "nonlinear_equations": sys.nonlinear_residue.len(),
            "family": fam.to_json(),
            "laurent_representable": repr.representable,
            "flagged": repr.flagged,
            "block_form": form.to_json(),
            "exploratory": n >= 4,
            "group_mode_condition": "a^2 - t*c^2 is a unit of Z[t^-1, t]",
        }),
        status: if matches {
            ReportStatus::Pass
        } else {
            ReportStatus::Fail
        },
        text,
    })
}

/// Exploratory: the virtual generators of `VSB_n` as unknowns over the
/// standard sigma and a trivial singular block.
fn solve_vsb(n: usize) -> Result<RunReport, UsageError> {
    if n < 3 {
        return Err(UsageError("use the vsb2 target for 2 strands".into()));
    }
    let pres = Presentation::build(n, Mode::VirtualSingular, false).map_err(usage)?;
    let t = LaurentPoly::t();
    let known = Representation::singular_extension(n, &t, &ExtensionParams::new(LaurentPoly::one(), LaurentPoly::zero()), false)
        .map_err(usage)?;
    let nus: Vec<Gen> = (1..n).map(Gen::nu).collect();
    let sys = assemble_extension(&pres, &known, &nus).map_err(usage)?;
    let fam = solve_linear_part(&sys).map_err(usage)?;
    let text = format!(
        "VSB_{n} (exploratory, tau = identity block): {} unknowns, {} linear and {} nonlinear equations; {} free after the linear part, {} nonlinear equations remain\n",
        sys.unknowns.len(),
        sys.equations.len(),
        sys.nonlinear_residue.len(),
        fam.free.len(),
        fam.residue.len()
    );
    Ok(RunReport {
        command: "solve-extension".into(),
        inputs: json!({"target": "vsb", "n": n}),
        result: json!({
            "exploratory": true,
            "unknowns": sys.unknowns.len(),
            "equations": sys.equations.len(),
            "nonlinear_equations": sys.nonlinear_residue.len(),
            "family": fam.to_json(),
        }),
        status: ReportStatus::Pass,
        text,
    })
}

/// `irreducible` arguments: numeric `t0`, or symbolic `t` when `t0` is `None`.
#[derive(Debug, Clone)]
pub struct IrreducibleArgs {
    pub n: usize,
    pub t0: Option<Q>,
    pub a: LaurentPoly,
    pub c: LaurentPoly,
}

fn laurent_at(p: &LaurentPoly, t0: &Q) -> Result<Q, UsageError> {
    p.eval(t0).map_err(usage)
}

pub fn irreducible(args: &IrreducibleArgs) -> Result<RunReport, UsageError> {
    let n = args.n;
    match &args.t0 {
        Some(t0) => {
            let (a, c) = (laurent_at(&args.a, t0)?, laurent_at(&args.c, t0)?);
            let spec = SpecializedRep::singular_extension(n, t0, &a, &c).map_err(usage)?;
            let verdict = is_irreducible(&spec);
            let predicted = predicted_status(&GridCell {
                n,
                t0: t0.clone(),
                a: a.clone(),
                c: c.clone(),
            });
            let status = if verdict.status == predicted {
                ReportStatus::Pass
            } else if n == 2 {
                ReportStatus::Divergence
            } else {
                ReportStatus::Fail
            };
            let mut text = format!(
                "n = {n}, t = {t0}, a = {a}, c = {c}: span {} of {}, {} (predicted {predicted})\n",
                verdict.span_dim,
                n * n,
                verdict.status
            );
            if let Some(w) = &verdict.witness {
                for v in &w.basis {
                    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
                    let _ = writeln!(text, "  invariant: ({})^T", parts.join(", "));
                }
            }
            if status == ReportStatus::Divergence {
                text.push_str("  two strands: the image algebra is commutative, so the general statement does not apply\n");
            }
            let mut result = verdict.to_json();
            result["predicted"] = json!(predicted.to_string());
            result["divergence_watch"] = json!(n == 2);
            Ok(RunReport {
                command: "irreducible".into(),
                inputs: json!({"n": n, "t": t0.to_string(), "a": args.a.to_string(), "c": args.c.to_string()}),
                result,
                status,
                text,
            })
        }
        None => {
            let rep = Representation::singular_extension(
                n,
                &LaurentPoly::t(),
                &ExtensionParams::new(args.a.clone(), args.c.clone()),
                false,
            )
            .map_err(usage)?;
            let spec: SpecializedRep<RationalFunction> = SpecializedRep::symbolic(&rep);
            let span = burnside_span(&spec.images(), spec.dim());
            let verdict = if span == n * n {
                Status::Irreducible
            } else {
                Status::Reducible
            };
            let status = match (verdict, n) {
                (Status::Irreducible, _) => ReportStatus::Pass,
                (Status::Reducible, 2) => ReportStatus::Divergence,
                _ => ReportStatus::Fail,
            };
            Ok(RunReport {
                command: "irreducible".into(),
                inputs: json!({"n": n, "t": "symbolic", "a": args.a.to_string(), "c": args.c.to_string()}),
                result: json!({
                    "status": verdict.to_string(),
                    "span_dim": span,
                    "dim": n,
                    "predicted": "irreducible",
                    "divergence_watch": n == 2,
                }),
                status,
                text: format!(
                    "n = {n}, t symbolic over Q(t), a = {}, c = {}: span {span} of {}, {verdict}\n",
                    args.a,
                    args.c,
                    n * n
                ),
            })
        }
    }
}

/// Grid description read from a JSON file:
/// `{"n": [3, 4], "t": ["2", "-1", "3/2"], "ac": [["2", "-1"]], "random_ac": 10}`.
#[derive(Debug, Clone, serde::Deserialize)]
pub struct GridSpec {
    #[serde(default)]
    pub n: Vec<usize>,
    pub t: Vec<String>,
    #[serde(default)]
    pub ac: Vec<(String, String)>,
    #[serde(default)]
    pub random_ac: usize,
    pub seed: Option<u64>,
}

fn parse_q(s: &str) -> Result<Q, UsageError> {
    s.trim()
        .parse::<Q>()
        .map_err(|e| UsageError(format!("bad rational {s:?}: {e}")))
}

impl GridSpec {
    pub fn cells(&self) -> Result<Vec<GridCell>, UsageError> {
        let fixed: Vec<(Q, Q)> = self
            .ac
            .iter()
            .map(|(a, c)| Ok((parse_q(a)?, parse_q(c)?)))
            .collect::<Result<_, UsageError>>()?;
        let mut rng = sample::rng(self.seed.unwrap_or_else(sample::seed_from_env));
        let mut cells = Vec::new();
        for &n in &self.n {
            for t in &self.t {
                let t0 = parse_q(t)?;
                let mut acs = fixed.clone();
                for _ in 0..self.random_ac {
                    acs.push(sample::ac_pair(&mut rng, &t0));
                }
                cells.extend(grid_cells(&[n], &[t0], &acs));
            }
        }
        Ok(cells)
    }
}

pub fn grid(spec: &GridSpec) -> Result<RunReport, UsageError> {
    let cells = spec.cells()?;
    let report = grid_report(&cells).map_err(usage)?;
    let divergences = report.divergences();
    let status = if divergences.is_empty() {
        ReportStatus::Pass
    } else if divergences.iter().all(|r| r.divergence_watch) {
        ReportStatus::Divergence
    } else {
        ReportStatus::Fail
    };
    let csv = report.to_csv();
    let mut result = report.summary_json();
    result["csv"] = json!(csv);
    Ok(RunReport {
        command: "grid".into(),
        inputs: json!({
            "n": spec.n,
            "t": spec.t,
            "ac": spec.ac,
            "random_ac": spec.random_ac,
            "seed": spec.seed.unwrap_or_else(sample::seed_from_env),
        }),
        result,
        status,
        text: format!(
            "{csv}{} cells, {} agree with the prediction, {} differ\n",
            report.rows.len(),
            report.agreements(),
            divergences.len()
        ),
    })
}

/// Kernel probe arguments. Without `a`, `c` the standard representation is
/// used; with them, the singular extension over `Q(t)`.
#[derive(Debug, Clone)]
pub struct KernelArgs {
    pub n: usize,
    pub pairs: Vec<((usize, usize), (usize, usize))>,
    pub ac: Option<(LaurentPoly, LaurentPoly)>,
}

/// Parses `"1,2:1,3;1,2:3,4"` into index pairs.
pub fn parse_pairs(s: &str) -> Result<Vec<((usize, usize), (usize, usize))>, UsageError> {
    let pair = |p: &str| -> Result<(usize, usize), UsageError> {
        let (i, j) = p
            .split_once(',')
            .ok_or_else(|| UsageError(format!("expected i,j in {p:?}")))?;
        Ok((
            i.trim().parse().map_err(usage)?,
            j.trim().parse().map_err(usage)?,
        ))
    };
    s.split(';')
        .filter(|x| !x.trim().is_empty())
        .map(|item| {
            let (l, r) = item
                .split_once(':')
                .ok_or_else(|| UsageError(format!("expected i,j:k,l in {item:?}")))?;
            Ok((pair(l)?, pair(r)?))
        })
        .collect()
}

fn probe_one<T: Ring>(
    rep: &Representation<T>,
    p1: (usize, usize),
    p2: (usize, usize),
) -> Result<(Value, bool), UsageError> {
    let w = pure_commutator_word(p1, p2, rep.n).map_err(usage)?;
    let label = format!("[A{}{}, A{}{}]", p1.0, p1.1, p2.0, p2.1);
    Ok(match certify(rep, &w) {
        Ok(cert) => {
            let mut j = cert.to_json();
            j["commutator"] = json!(label);
            (j, true)
        }
        Err(KernelError::TrivialWord(word)) => {
            (json!({"commutator": label, "word": word, "rejected": "trivial"}), true)
        }
        Err(KernelError::EmptyWord) => (json!({"commutator": label, "word": "1", "rejected": "empty"}), true),
        Err(KernelError::NotInKernel { word, image }) => (
            json!({"commutator": label, "word": word, "not_in_kernel": image}),
            false,
        ),
        Err(e) => return Err(usage(e)),
    })
}

pub fn kernel_probe(args: &KernelArgs) -> Result<RunReport, UsageError> {
    let n = args.n;
    let pairs = if args.pairs.is_empty() {
        candidate_pairs(n)
    } else {
        args.pairs.clone()
    };
    let t = LaurentPoly::t();
    let mut results = Vec::new();
    let mut ok = true;
    let rep_name;
    match &args.ac {
        None => {
            let rep = Representation::standard(n, &t).map_err(usage)?;
            rep_name = "standard".to_string();
            for (p1, p2) in &pairs {
                let (j, good) = probe_one(&rep, *p1, *p2)?;
                ok &= good;
                results.push(j);
            }
        }
        Some((a, c)) => {
            let params = ExtensionParams::new(RationalFunction::from(a.clone()), RationalFunction::from(c.clone()));
            let rep = Representation::singular_extension(n, &RationalFunction::t(), &params, true).map_err(usage)?;
            rep_name = "singular-ext over Q(t)".to_string();
            for (p1, p2) in &pairs {
                let (j, good) = probe_one(&rep, *p1, *p2)?;
                ok &= good;
                results.push(j);
            }
        }
    }
    let mut text = format!("kernel probe, {rep_name}, n = {n}\n");
    for r in &results {
        let verdict = if r.get("image").is_some() {
            "identity image, certificate issued (nontriviality cited)".to_string()
        } else if let Some(why) = r.get("rejected") {
            format!("rejected as {}", why.as_str().unwrap_or("trivial"))
        } else {
            "NOT in kernel".to_string()
        };
        let _ = writeln!(text, "  {}: {verdict}", r["commutator"].as_str().unwrap_or("?"));
    }
    let mut inputs = json!({
        "n": n,
        "pairs": pairs.iter().map(|(p, q)| format!("{},{}:{},{}", p.0, p.1, q.0, q.1)).collect::<Vec<_>>(),
    });
    if let Some((a, c)) = &args.ac {
        inputs["a"] = json!(a.to_string());
        inputs["c"] = json!(c.to_string());
    }
    Ok(RunReport {
        command: "kernel-probe".into(),
        inputs,
        result: json!({"representation": rep_name, "probes": results}),
        status: if ok { ReportStatus::Pass } else { ReportStatus::Fail },
        text,
    })
}

/// The five involution families, the `vsb2` relation check for each, and
/// classification of `samples` random rational involutions.
pub fn involutions(samples: usize, seed: u64) -> Result<RunReport, UsageError> {
    let fams = solve_involution_2x2();
    let mut text = String::from("involutions [[p, q], [r, s]] of Q(p, q, r)^2x2:\n");
    let t = LaurentPoly::t();
    let params = ExtensionParams::new(LaurentPoly::one(), LaurentPoly::zero());
    let mut relations_ok = true;
    let mut fam_json = Vec::new();
    for f in &fams {
        let sample_fam = match f.family {
            1 => InvolutionFamily::General { p: LaurentPoly::one(), q: LaurentPoly::constant(2) },
            2 => InvolutionFamily::LowerLeftNeg { r: t.clone() },
            3 => InvolutionFamily::LowerLeftPos { r: t.clone() },
            4 => InvolutionFamily::MinusIdentity,
            _ => InvolutionFamily::Identity,
        };
        let rep = Representation::vsb2_extension(&t, &sample_fam, &params, false).map_err(usage)?;
        let pres = Presentation::build(2, Mode::VirtualSingular, false).map_err(usage)?;
        let clean = rep.verify_relations(&pres).map_err(usage)?.is_empty();
        relations_ok &= clean && f.squares_to_identity();
        let m = f.render_matrix();
        let _ = writeln!(
            text,
            "  ({}) [[{}, {}], [{}, {}]]  {}  nu^2 = I: {}, relations hold: {}",
            f.family,
            m[0][0],
            m[0][1],
            m[1][0],
            m[1][1],
            f.conditions.join(", "),
            f.squares_to_identity(),
            clean
        );
        let mut j = f.to_json();
        j["relations_hold"] = json!(clean);
        fam_json.push(j);
    }
    let mut rng = sample::rng(seed);
    let mut counts: BTreeMap<u8, usize> = BTreeMap::new();
    let mut unclassified = Vec::new();
    for _ in 0..samples {
        let m = sample::involution(&mut rng);
        match involution_classify(&m) {
            Ok(f) => *counts.entry(f.id()).or_default() += 1,
            Err(e) => unclassified.push(json!({"matrix": m.to_json(), "error": e.to_string()})),
        }
    }
    if samples > 0 {
        let _ = writeln!(
            text,
            "classified {} of {samples} random involutions: {:?}",
            samples - unclassified.len(),
            counts
        );
    }
    let ok = fams.len() == 5 && relations_ok && unclassified.is_empty();
    Ok(RunReport {
        command: "involutions".into(),
        inputs: json!({"samples": samples, "seed": seed}),
        result: json!({
            "families": fam_json,
            "classified": counts.iter().map(|(k, v)| (k.to_string(), json!(v))).collect::<serde_json::Map<_, _>>(),
            "unclassified": unclassified,
        }),
        status: if ok { ReportStatus::Pass } else { ReportStatus::Fail },
        text,
    })
}

/// Parses `--mode` values.
pub fn parse_mode(s: &str) -> Result<Mode, UsageError> {
    s.parse::<Mode>().map_err(usage)
}
