//! Verbs of the `gschur` command line. Every verb builds a JSON report;
//! `--text` flattens it to `key: value` lines.

use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use super::format::AlgebraFile;
use crate::combinatorics::{Multipartition, Partition};
use crate::exactlin::Scalar;
use crate::modfilt::{
    build_filtration, pipeline_character, standard_module, tableau_character, truncated_standard,
    truncated_tensor_filtration, verify_multiplicities, CharacterVector, FiltrationReport, ModError,
};
use crate::schurcore::{Coproduct, SchurAlgebra, TElement};
use crate::superalg::{fixtures, HeredityData};
use crate::symfunc::MultiSymPoly;

#[derive(Parser, Debug)]
#[command(name = "gschur", version, about = "Generalized Schur superalgebras over heredity data")]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,
    #[command(flatten)]
    pub opts: Opts,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Opts {
    /// Heredity data as JSON, or `builtin:NAME` for a shipped fixture.
    #[arg(long, global = true)]
    pub algebra: Option<String>,
    #[arg(long, global = true)]
    pub n: Option<usize>,
    #[arg(long, global = true)]
    pub d: Option<usize>,
    /// Parts separated by commas, components by `|`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    #[arg(long, global = true)]
    pub mu: Option<String>,
    #[arg(long, global = true)]
    pub c: Option<usize>,
    /// Component label.
    #[arg(long, global = true)]
    pub i: Option<i64>,
    /// Width `N` of the algebra the computation runs in before compressing to `--n`.
    #[arg(long, global = true)]
    pub truncate: Option<usize>,
    #[arg(long, global = true, conflicts_with = "text")]
    pub json: bool,
    #[arg(long, global = true)]
    pub text: bool,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Verb {
    /// Check the heredity axioms and conformity (and those of T(n,d) with --n).
    Verify,
    /// List the η-basis of T(n,d).
    Basis,
    /// Multiply two elements, or print the product table of T(n,d).
    Mul { elements: Vec<String> },
    /// Coproduct of an element.
    Coproduct { element: String },
    /// Character of Δ(λ) three ways.
    Char {
        #[arg(long, hide = true)]
        mutate: bool,
    },
    /// Filtration of Δ(ι_i(λ)) ⊗ Δ(ι_i(ω_c)), or multiplicities with --mu.
    Filt,
    /// Multiplicities of Δ(ν) in Δ(λ) ⊗ Δ(μ) against LR products.
    Mult,
    /// The truncated standard module Δ_n(λ) from width --truncate.
    Truncate,
}

#[derive(Debug)]
pub enum Failure {
    /// Bad input: exit code 2.
    Usage(String),
    /// A check did not pass: exit code 1, with the report.
    Check(Value),
}

impl From<ModError> for Failure {
    fn from(e: ModError) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<Value, Failure>;

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

pub fn load_algebra(source: &str) -> Result<AlgebraFile, Failure> {
    if let Some(name) = source.strip_prefix("builtin:") {
        return match name {
            "trivial" => Ok(fixtures::trivial_file()),
            "superUT" => Ok(fixtures::super_ut_file()),
            "matrix11" => Ok(fixtures::matrix_1_1_file()),
            "quiver2" => Ok(fixtures::quiver2_file()),
            _ => Err(Failure::Usage(format!("unknown builtin algebra {name:?}"))),
        };
    }
    AlgebraFile::load(&PathBuf::from(source)).map_err(usage)
}

struct Ctx {
    opts: Opts,
    alg: Arc<HeredityData>,
}

impl Ctx {
    fn n(&self) -> Result<usize, Failure> {
        self.opts.n.ok_or_else(|| Failure::Usage("--n is required".into()))
    }

    fn schur(&self, n: usize) -> Result<Arc<SchurAlgebra>, Failure> {
        if n == 0 || n > 255 {
            return Err(Failure::Usage(format!("--n must lie in 1..=255, got {n}")));
        }
        Ok(Arc::new(SchurAlgebra::new(self.alg.clone(), n)))
    }

    fn component(&self) -> Result<usize, Failure> {
        match self.opts.i {
            Some(label) => self
                .alg
                .position(label)
                .ok_or_else(|| Failure::Usage(format!("no component with label {label}"))),
            None if self.alg.num_components() == 1 => Ok(0),
            None => Err(Failure::Usage("--i is required when the poset has several elements".into())),
        }
    }

    /// A multipartition, or a partition placed at `--i`.
    fn multipartition(&self, s: &str) -> Result<Multipartition, Failure> {
        let l = self.alg.num_components();
        if s.contains('|') || l == 1 {
            Multipartition::parse(s, l).map_err(usage)
        } else {
            let p = Partition::parse(s).map_err(usage)?;
            Ok(Multipartition::iota(l, self.component()?, &p))
        }
    }

    fn lambda(&self) -> Result<&str, Failure> {
        self.opts.lambda.as_deref().ok_or_else(|| Failure::Usage("--lambda is required".into()))
    }
}

fn mp_name(m: &Multipartition) -> String {
    let comps: Vec<String> = m.components().iter().map(|p| format!("({p})")).collect();
    if comps.len() == 1 {
        comps[0].clone()
    } else {
        format!("({})", comps.join(","))
    }
}

fn scalar_json(c: &Scalar) -> Value {
    Value::String(c.to_string())
}

fn monomials(ch: &CharacterVector) -> Value {
    let mut m = Map::new();
    for (k, c) in ch.terms() {
        m.insert(MultiSymPoly::monomial_name(k), json!(c));
    }
    Value::Object(m)
}

fn element_json(alg: &HeredityData, u: &TElement) -> Value {
    let mut m = Map::new();
    for (t, c) in u.terms() {
        m.insert(t.render(alg), scalar_json(c));
    }
    Value::Object(m)
}

fn coproduct_json(alg: &HeredityData, x: &Coproduct) -> Value {
    Value::Array(
        x.iter()
            .map(|((a, b), c)| json!({"left": a.render(alg), "right": b.render(alg), "coefficient": scalar_json(c)}))
            .collect(),
    )
}

fn parse_scalar(s: &str) -> Result<Scalar, Failure> {
    let bad = || Failure::Usage(format!("bad coefficient {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Scalar::new(p.into(), q.into()))
        }
        None => Ok(Scalar::from_integer(s.trim().parse::<i64>().map_err(|_| bad())?.into())),
    }
}

/// Parses `2*eta[e0,e0; 1,2; 2,1] - eta[...] + 1/2*eta[...]`; `1` is the unit of degree 0.
pub fn parse_element(schur: &SchurAlgebra, text: &str) -> Result<TElement, Failure> {
    let alg = schur.heredity_data();
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut depth = 0;
    let mut cur = String::new();
    let mut neg = false;
    for ch in text.chars() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            _ => {}
        }
        if depth == 0 && (ch == '+' || ch == '-') {
            if !cur.trim().is_empty() {
                terms.push((neg, cur.trim().to_string()));
            }
            cur.clear();
            neg = ch == '-';
            continue;
        }
        cur.push(ch);
    }
    if !cur.trim().is_empty() {
        terms.push((neg, cur.trim().to_string()));
    }
    if terms.is_empty() {
        return Err(Failure::Usage(format!("empty element {text:?}")));
    }
    let mut out: Option<TElement> = None;
    for (neg, term) in terms {
        let (coef, body) = match term.rsplit_once('*') {
            Some((c, b)) => (parse_scalar(c)?, b.trim().to_string()),
            None => (Scalar::from_integer(1.into()), term.clone()),
        };
        let coef = if neg { -coef } else { coef };
        let e = if body == "1" {
            TElement::unit0()
        } else {
            let inner = body
                .strip_prefix("eta[")
                .and_then(|b| b.strip_suffix(']'))
                .ok_or_else(|| Failure::Usage(format!("expected eta[b; r; s], got {body:?}")))?;
            let fields: Vec<&str> = inner.split(';').collect();
            if fields.len() != 3 {
                return Err(Failure::Usage(format!("expected three ';'-separated lists in {body:?}")));
            }
            let names: Vec<&str> = fields[0].split(',').map(str::trim).collect();
            let b = names
                .iter()
                .map(|nm| {
                    (0..alg.dim())
                        .find(|&k| alg.basis_name(k) == *nm)
                        .ok_or_else(|| Failure::Usage(format!("unknown basis element {nm:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let ints = |f: &str| -> Result<Vec<usize>, Failure> {
                f.split(',').map(|x| x.trim().parse::<usize>().map_err(|_| Failure::Usage(format!("bad index list {f:?}")))).collect()
            };
            let (r, s) = (ints(fields[1])?, ints(fields[2])?);
            if r.len() != b.len() || s.len() != b.len() {
                return Err(Failure::Usage(format!("lists of different lengths in {body:?}")));
            }
            schur.eta(&b, &r, &s).map_err(usage)?
        };
        let scaled = e.scaled(&coef);
        out = Some(match out {
            None => scaled,
            Some(acc) if acc.degree() == scaled.degree() => acc.add(&scaled),
            Some(acc) => return Err(Failure::Usage(format!("degrees {} and {} in one element", acc.degree(), scaled.degree()))),
        });
    }
    Ok(out.expect("at least one term"))
}

fn cmd_verify(ctx: &Ctx) -> Outcome {
    let alg = &ctx.alg;
    let report = alg.verify_axioms();
    let conforming = alg.is_conforming();
    let failures: Vec<Value> = report.failures.iter().map(|f| json!({"axiom": f.axiom.to_string(), "detail": f.detail})).collect();
    let mut ok = report.passed() && conforming;
    let mut out = json!({
        "name": alg.name(),
        "components": alg.num_components(),
        "dim": alg.dim(),
        "axioms_passed": report.passed(),
        "failures": failures,
        "conforming": conforming,
    });
    if let Some(n) = ctx.opts.n {
        let schur = ctx.schur(n)?;
        let degrees: Vec<usize> = match ctx.opts.d {
            Some(d) => vec![d],
            None => (0..=n).collect(),
        };
        let mut checks = Vec::new();
        for d in degrees {
            let r = schur.verify_heredity(d).map_err(usage)?;
            ok &= r.passed();
            checks.push(json!({
                "n": n,
                "d": d,
                "dim": schur.dim(d),
                "passed": r.passed(),
                "failures": r.failures.iter().map(|f| json!({"axiom": f.axiom.to_string(), "detail": f.detail})).collect::<Vec<_>>(),
            }));
        }
        out["schur"] = Value::Array(checks);
    }
    out["ok"] = json!(ok);
    if ok {
        Ok(out)
    } else {
        Err(Failure::Check(out))
    }
}

fn cmd_basis(ctx: &Ctx) -> Outcome {
    let n = ctx.n()?;
    let d = ctx.opts.d.ok_or_else(|| Failure::Usage("--d is required".into()))?;
    let schur = ctx.schur(n)?;
    let alg = schur.heredity_data();
    let basis: Vec<Value> = schur
        .enumerate_basis(d)
        .iter()
        .map(|t| json!({"element": t.render(alg), "parity": crate::schurcore::triple_parity(alg, t).bit(), "factorial": schur.c_factorial(t)}))
        .collect();
    Ok(json!({"n": n, "d": d, "dim": basis.len(), "basis": basis}))
}

fn cmd_mul(ctx: &Ctx, elements: &[String]) -> Outcome {
    let n = ctx.n()?;
    let schur = ctx.schur(n)?;
    let alg = schur.heredity_data();
    match elements {
        [a, b] => {
            let (x, y) = (parse_element(&schur, a)?, parse_element(&schur, b)?);
            let p = schur.multiply(&x, &y).map_err(usage)?;
            Ok(json!({
                "n": n,
                "left": element_json(alg, &x),
                "right": element_json(alg, &y),
                "product": element_json(alg, &p),
                "rendered": p.render(alg),
            }))
        }
        [] => {
            let d = ctx.opts.d.ok_or_else(|| Failure::Usage("--d is required for the product table".into()))?;
            let basis = schur.enumerate_basis(d);
            let mut table = Vec::new();
            for t in &basis {
                for u in &basis {
                    let p = schur
                        .multiply(&TElement::basis(t.clone()), &TElement::basis(u.clone()))
                        .map_err(usage)?;
                    if !p.is_zero() {
                        table.push(json!({"left": t.render(alg), "right": u.render(alg), "result": element_json(alg, &p)}));
                    }
                }
            }
            Ok(json!({"n": n, "d": d, "dim": basis.len(), "products": table}))
        }
        _ => Err(Failure::Usage("mul takes two elements, or none with --d for the table".into())),
    }
}

fn cmd_coproduct(ctx: &Ctx, element: &str) -> Outcome {
    let n = ctx.n()?;
    let schur = ctx.schur(n)?;
    let alg = schur.heredity_data();
    let x = parse_element(&schur, element)?;
    let cp = match ctx.opts.d {
        Some(e) => schur.coproduct_part(&x, e),
        None => schur.coproduct(&x),
    };
    Ok(json!({"n": n, "element": element_json(alg, &x), "coproduct": coproduct_json(alg, &cp)}))
}

fn cmd_char(ctx: &Ctx, mutate: bool) -> Outcome {
    let n = ctx.n()?;
    let lam = ctx.multipartition(ctx.lambda()?)?;
    if let Some(d) = ctx.opts.d {
        if d != lam.size() {
            return Err(Failure::Usage(format!("--d {d} does not match |λ| = {}", lam.size())));
        }
    }
    let schur = ctx.schur(n)?;
    let v = standard_module(&schur, &lam)?;
    let mut by_rank = v.character()?;
    if mutate {
        // deliberately wrong, exercising the disagreement path
        by_rank.add_term(lam.padded(n).map_err(usage)?, 1);
    }
    let by_tableaux = tableau_character(&schur, &lam)?;
    let by_pipeline = pipeline_character(&schur, &lam)?;
    let agree = by_rank == by_tableaux && by_tableaux == by_pipeline;
    let schur_exp = by_tableaux.to_schur().map(|e| e.to_string()).unwrap_or_else(|e| e.to_string());
    let out = json!({
        "lambda": mp_name(&lam),
        "n": n,
        "d": lam.size(),
        "dim": v.dim(),
        "idempotent": monomials(&by_rank),
        "tableau": monomials(&by_tableaux),
        "pipeline": monomials(&by_pipeline),
        "schur": schur_exp,
        "agree": agree,
    });
    if agree {
        Ok(out)
    } else {
        Err(Failure::Check(out))
    }
}

fn filtration_json(ctx: &Ctx, r: &FiltrationReport) -> Value {
    let steps: Vec<Value> = r
        .steps
        .iter()
        .map(|s| {
            json!({
                "pset": s.pset.elems(),
                "factor": mp_name(&s.factor),
                "parity": s.parity.bit(),
                "dim": s.dim,
                "quotient_dim": s.quotient_dim,
                "expected_dim": s.expected_dim,
                "weight_ok": s.weight_ok,
                "y_annihilated": s.y_annihilated,
                "skipped": s.skipped,
            })
        })
        .collect();
    json!({
        "lambda": format!("({})", r.lambda),
        "c": r.c,
        "i": ctx.alg.label(r.i),
        "n": r.n,
        "truncated_from": r.truncated_from,
        "tensor_dim": r.tensor_dim,
        "factors": r.factors().iter().map(mp_name).collect::<Vec<_>>(),
        "steps": steps,
        "generation": r.generation,
        "y_annihilation": r.y_annihilation,
        "dimension_sum": r.dimension_sum,
        "certified": r.certified(),
    })
}

fn cmd_filt(ctx: &Ctx) -> Outcome {
    if ctx.opts.mu.is_some() {
        return cmd_mult(ctx);
    }
    let n = ctx.n()?;
    let c = ctx.opts.c.ok_or_else(|| Failure::Usage("--c or --mu is required".into()))?;
    let lam = Partition::parse(ctx.lambda()?).map_err(usage)?;
    let i = ctx.component()?;
    let report = match ctx.opts.truncate {
        Some(big) => truncated_tensor_filtration(&ctx.schur(big)?, &ctx.schur(n)?, &lam, c, i)?,
        None => build_filtration(&ctx.schur(n)?, &lam, c, i)?,
    };
    let out = filtration_json(ctx, &report);
    if report.certified() {
        Ok(out)
    } else {
        Err(Failure::Check(out))
    }
}

fn cmd_mult(ctx: &Ctx) -> Outcome {
    let n = ctx.n()?;
    let lam = ctx.multipartition(ctx.lambda()?)?;
    let mu = ctx.multipartition(ctx.opts.mu.as_deref().ok_or_else(|| Failure::Usage("--mu is required".into()))?)?;
    let r = verify_multiplicities(&ctx.schur(n)?, &lam, &mu)?;
    let table = |m: &std::collections::BTreeMap<Multipartition, i64>| {
        Value::Object(m.iter().map(|(k, v)| (mp_name(k), json!(v))).collect())
    };
    let out = json!({
        "lambda": mp_name(&lam),
        "mu": mp_name(&mu),
        "n": n,
        "multiplicities": table(&r.observed),
        "lr": table(&r.predicted),
        "lr_agree": r.agree(),
        "top_once": r.top_once,
        "others_below": r.others_below,
        "decomposition_ok": r.decomposition_ok,
        "ok": r.passed(),
    });
    if r.passed() {
        Ok(out)
    } else {
        Err(Failure::Check(out))
    }
}

fn cmd_truncate(ctx: &Ctx) -> Outcome {
    let n = ctx.n()?;
    let lam = ctx.multipartition(ctx.lambda()?)?;
    let big = ctx.opts.truncate.unwrap_or_else(|| lam.size().max(n));
    let m = truncated_standard(&ctx.schur(big)?, &ctx.schur(n)?, &lam)?;
    let ch = m.character()?;
    Ok(json!({
        "lambda": mp_name(&lam),
        "n": n,
        "truncated_from": big,
        "dim": m.dim(),
        "nonzero": m.dim() > 0,
        "character": monomials(&ch),
        "schur": ch.to_schur().map(|e| e.to_string()).unwrap_or_else(|e| e.to_string()),
        "basis": m.labels(),
    }))
}

/// `key: value` lines, nested keys joined with dots.
pub fn to_text(v: &Value) -> String {
    fn walk(prefix: &str, v: &Value, out: &mut Vec<String>) {
        match v {
            Value::Object(m) => {
                for (k, x) in m {
                    let p = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                    walk(&p, x, out);
                }
            }
            Value::Array(xs) if xs.iter().any(|x| x.is_object() || x.is_array()) => {
                for (k, x) in xs.iter().enumerate() {
                    walk(&format!("{prefix}[{k}]"), x, out);
                }
            }
            Value::String(s) => out.push(format!("{prefix}: {s}")),
            other => out.push(format!("{prefix}: {other}")),
        }
    }
    let mut out = Vec::new();
    walk("", v, &mut out);
    let mut s = out.join("\n");
    s.push('\n');
    s
}

/// Runs one invocation; returns the exit code, stdout and stderr.
pub fn run<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, if code == 0 { e.to_string() } else { String::new() }, if code == 0 { String::new() } else { e.to_string() });
        }
    };
    let render = |v: &Value| {
        if cli.opts.text {
            to_text(v)
        } else {
            let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
            s.push('\n');
            s
        }
    };
    let outcome = dispatch(&cli);
    match outcome {
        Ok(v) => (0, render(&v), String::new()),
        Err(Failure::Check(v)) => (1, render(&v), "check failed\n".to_string()),
        Err(Failure::Usage(msg)) => (2, String::new(), format!("error: {msg}\n")),
    }
}

fn dispatch(cli: &Cli) -> Outcome {
    let source = cli.opts.algebra.as_deref().ok_or_else(|| Failure::Usage("--algebra is required".into()))?;
    let file = load_algebra(source)?;
    let alg = match HeredityData::from_file(&file) {
        Ok(a) => Arc::new(a),
        Err(e) if matches!(cli.verb, Verb::Verify) => {
            return Err(Failure::Check(json!({"name": file.name, "ok": false, "failures": [{"axiom": "file", "detail": e.to_string()}]})));
        }
        Err(e) => return Err(usage(e)),
    };
    let ctx = Ctx { opts: cli.opts.clone(), alg };
    match &cli.verb {
        Verb::Verify => cmd_verify(&ctx),
        Verb::Basis => cmd_basis(&ctx),
        Verb::Mul { elements } => cmd_mul(&ctx, elements),
        Verb::Coproduct { element } => cmd_coproduct(&ctx, element),
        Verb::Char { mutate } => cmd_char(&ctx, *mutate),
        Verb::Filt => cmd_filt(&ctx),
        Verb::Mult => cmd_mult(&ctx),
        Verb::Truncate => cmd_truncate(&ctx),
    }
}
