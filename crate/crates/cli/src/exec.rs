//! Runs a parsed session top to bottom and renders each command as text or
//! as one JSON document per line.

use std::collections::HashMap;
use std::fmt::Write as _;

use cmdefect::corpus::{verify_paper_statements, Bounds, CorpusSpec};
use cmdefect::groebner::{ideal_combine, Ideal, IdealOp};
use cmdefect::invariants::{global_invariants, LocalProfile};
use cmdefect::poly::{MonomialOrder, PolyRing};
use cmdefect::resolution::{hilbert_series, PresentedModule};
use cmdefect::serre::{almost_cm, check_condition, exhaustive_monomial_report, Answer, PropertyQuery};
use cmdefect::{FieldKind, Result as EngineResult};
use serde_json::{json, Value};

use crate::session::{Command, ComputeOp, Expectation, Session, Statement};

#[derive(Debug, Clone, Copy, Default)]
pub struct Options {
    pub json: bool,
    /// Applies to `check` commands that carry no `--expect` of their own.
    pub expect: Option<Expectation>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_UNMET: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Clone)]
enum Object {
    Ideal(Ideal),
    Module(PresentedModule),
}

/// Text and JSON renderings of one command, plus whether it failed an
/// expectation.
struct Rendered {
    text: String,
    doc: Value,
    unmet: bool,
}

impl Rendered {
    fn plain(text: String, doc: Value) -> Self {
        Rendered { text, doc, unmet: false }
    }
}

pub fn execute_session(session: &Session, opts: &Options) -> Outcome {
    let mut env: HashMap<String, Object> = HashMap::new();
    let mut out = Outcome { stdout: String::new(), stderr: String::new(), exit_code: EXIT_OK };
    for cmd in &session.commands {
        match run_command(cmd, &mut env, opts) {
            Ok(r) => {
                if opts.json {
                    out.stdout.push_str(&r.doc.to_string());
                    out.stdout.push('\n');
                } else {
                    out.stdout.push_str(&r.text);
                    if !r.text.ends_with('\n') {
                        out.stdout.push('\n');
                    }
                }
                if r.unmet {
                    out.exit_code = EXIT_UNMET;
                }
            }
            Err(e) => {
                if opts.json {
                    let doc = json!({"command": keyword(cmd), "line": cmd.span.line, "error": e.to_string()});
                    out.stdout.push_str(&doc.to_string());
                    out.stdout.push('\n');
                }
                let _ = writeln!(out.stderr, "error on line {} (`{}`): {e}", cmd.span.line, cmd.source);
                out.exit_code = EXIT_ERROR;
                return out;
            }
        }
    }
    out
}

fn keyword(cmd: &Command) -> &'static str {
    match cmd.statement {
        Statement::Ring(_) => "ring",
        Statement::Ideal { .. } => "ideal",
        Statement::Module { .. } => "module",
        Statement::Compute { .. } => "compute",
        Statement::Invariants { .. } => "invariants",
        Statement::Profile { .. } => "profile",
        Statement::Check { .. } => "check",
        Statement::Corpus { .. } => "corpus",
    }
}

fn ideal<'a>(env: &'a HashMap<String, Object>, name: &str) -> &'a Ideal {
    match env.get(name) {
        Some(Object::Ideal(i)) => i,
        _ => unreachable!("the parser checks references"),
    }
}

fn module<'a>(env: &'a HashMap<String, Object>, name: &str) -> &'a PresentedModule {
    match env.get(name) {
        Some(Object::Module(m)) => m,
        _ => unreachable!("the parser checks references"),
    }
}

pub fn render_ring(ring: &PolyRing) -> String {
    let field = match ring.field().kind() {
        FieldKind::Rationals => "Q".to_string(),
        _ => format!("F{}", ring.field().characteristic()),
    };
    let order = ring.order();
    let order = if order == MonomialOrder::LEX {
        "lex"
    } else if order == MonomialOrder::GRLEX {
        "grlex"
    } else {
        "grevlex"
    };
    format!("{field}[{}] {order}", ring.variables().join(","))
}

fn generator_strings(i: &Ideal) -> Vec<String> {
    i.generators().iter().map(|g| g.to_string()).collect()
}

fn run_command(cmd: &Command, env: &mut HashMap<String, Object>, opts: &Options) -> EngineResult<Rendered> {
    Ok(match &cmd.statement {
        Statement::Ring(r) => {
            let text = render_ring(r);
            Rendered::plain(format!("ring {text}"), json!({"command": "ring", "ring": text}))
        }
        Statement::Ideal { name, generators } => {
            let i = Ideal::new(generators[0].ring(), generators.clone())?;
            let r = ideal_rendered("ideal", name, &i);
            env.insert(name.clone(), Object::Ideal(i));
            r
        }
        Statement::Module { name, rows } => {
            let ring = rows.iter().flatten().next().map(|p| p.ring().clone());
            let ring = ring.ok_or_else(|| cmdefect::Error::Shape("a module matrix needs at least one entry".into()))?;
            let m = PresentedModule::from_rows(&ring, rows.clone())?.with_label(name.clone());
            let p = m.presentation();
            let r = Rendered::plain(
                format!("{name} = coker {p}"),
                json!({"command": "module", "name": name, "generators": p.target().rank(), "relations": p.source().rank()}),
            );
            env.insert(name.clone(), Object::Module(m));
            r
        }
        Statement::Compute { name, op } => {
            let result = match op {
                ComputeOp::Quotient(j) => {
                    let j = ideal(env, j);
                    Object::Module(PresentedModule::cyclic(j)?.with_label(name.clone()))
                }
                ComputeOp::Intersect(a, b) => Object::Ideal(ideal_combine(ideal(env, a), ideal(env, b), IdealOp::Intersection)?),
                ComputeOp::Sum(a, b) => Object::Ideal(ideal_combine(ideal(env, a), ideal(env, b), IdealOp::Sum)?),
                ComputeOp::Power(a, k) => {
                    let a = ideal(env, a);
                    Object::Ideal(ideal_combine(a, a, IdealOp::Power(*k))?)
                }
            };
            let r = match (&result, op) {
                (Object::Ideal(i), _) => ideal_rendered("compute", name, i),
                (Object::Module(_), ComputeOp::Quotient(j)) => {
                    let gens = generator_strings(ideal(env, j));
                    Rendered::plain(
                        format!("{name} = R/({})", gens.join(", ")),
                        json!({"command": "compute", "name": name, "kind": "module", "quotient_of": gens}),
                    )
                }
                _ => unreachable!(),
            };
            env.insert(name.clone(), result);
            r
        }
        Statement::Invariants { name } => invariants(name, module(env, name)),
        Statement::Profile { name } => {
            let rows = exhaustive_monomial_report(module(env, name))?;
            profile(name, &rows)
        }
        Statement::Check { query, name, expect } => check(name, module(env, name), query, expect.or(opts.expect))?,
        Statement::Corpus { spec, bounds } => corpus(spec, *bounds)?,
    })
}

fn ideal_rendered(command: &str, name: &str, i: &Ideal) -> Rendered {
    let gens = generator_strings(i);
    Rendered::plain(format!("{name} = ({})", gens.join(", ")), json!({"command": command, "name": name, "kind": "ideal", "generators": gens}))
}

fn invariants(name: &str, m: &PresentedModule) -> Rendered {
    let g = global_invariants(m);
    let betti = m.resolution().betti_table();
    let hs = hilbert_series(m);
    let acm = almost_cm(m);
    let mut text = format!("{name}: dim {}, depth {}, cmd {}, pd {}\n", g.dim, g.depth, g.cmd, g.projective_dimension);
    let _ = writeln!(text, "  betti {betti}");
    let _ = writeln!(text, "  hilbert series {hs}");
    let _ = write!(text, "  almost Cohen-Macaulay: {}", if acm { "yes" } else { "no" });
    let betti: Vec<Value> = betti.entries().map(|((i, j), b)| json!({"i": i, "degree": j, "rank": b})).collect();
    let doc = json!({
        "command": "invariants",
        "name": name,
        "dim": g.dim,
        "depth": g.depth,
        "cmd": g.cmd,
        "projective_dimension": g.projective_dimension,
        "almost_cm": acm,
        "betti": betti,
        "hilbert_series": hs.to_string(),
    });
    Rendered::plain(text, doc)
}

fn profile_doc(p: &LocalProfile) -> Value {
    json!({
        "prime": p.prime,
        "height": p.height,
        "dim": p.dim_local,
        "depth": p.depth_local,
        "cmd": p.cmd_local,
        "in_support": p.in_support,
    })
}

fn profile(name: &str, rows: &[LocalProfile]) -> Rendered {
    let width = rows.iter().map(|p| p.prime.chars().count()).max().unwrap_or(5).max(5);
    let mut text = format!("{name}: {} monomial primes\n", rows.len());
    let _ = writeln!(text, "  {:<width$}  {:>6}  {:>4}  {:>5}  {:>4}  support", "prime", "height", "dim", "depth", "cmd");
    for p in rows {
        let _ = writeln!(
            text,
            "  {:<width$}  {:>6}  {:>4}  {:>5}  {:>4}  {}",
            p.prime,
            p.height.to_string(),
            p.dim_local.to_string(),
            p.depth_local.to_string(),
            p.cmd_local.to_string(),
            if p.in_support { "yes" } else { "no" }
        );
    }
    let doc = json!({"command": "profile", "name": name, "primes": rows.iter().map(profile_doc).collect::<Vec<_>>()});
    Rendered::plain(text, doc)
}

fn check(name: &str, m: &PresentedModule, q: &PropertyQuery, expect: Option<Expectation>) -> EngineResult<Rendered> {
    let v = check_condition(m, q)?;
    let unmet = match expect {
        Some(Expectation::Yes) => v.answer != Answer::Yes,
        Some(Expectation::No) => v.answer != Answer::No,
        None => false,
    };
    let mut text = format!("check {q} on {name}: {}", v.answer);
    if let Some(p) = &v.profile {
        let _ = write!(text, " (witness {}: height {}, dim {}, depth {}, cmd {})", p.prime, p.height, p.dim_local, p.depth_local, p.cmd_local);
    }
    let _ = write!(text, "\n  {}", v.justification);
    if unmet {
        let want = if expect == Some(Expectation::Yes) { "yes" } else { "no" };
        let _ = write!(text, "\n  expected {want}");
    }
    let doc = json!({
        "command": "check",
        "name": name,
        "property": q.kind.to_string(),
        "n": q.n,
        "l": q.l,
        "answer": v.answer,
        "witness": v.certificate_prime,
        "profile": v.profile.as_ref().map(profile_doc),
        "chain": v.chain,
        "justification": v.justification,
        "expectation_met": !unmet,
    });
    Ok(Rendered { text, doc, unmet })
}

fn corpus(spec: &CorpusSpec, bounds: Bounds) -> EngineResult<Rendered> {
    let reports = verify_paper_statements(spec, bounds)?;
    let total: usize = reports.iter().map(|r| r.counterexamples.len()).sum();
    let mut text = format!(
        "corpus seed={} vars={} count={}: {} statements, {total} counterexamples\n",
        spec.seed,
        spec.variable_count,
        spec.instance_count,
        reports.len()
    );
    let width = reports.iter().map(|r| r.statement_id.len()).max().unwrap_or(0);
    for r in &reports {
        let _ = write!(text, "  {:<width$}  {} checked, {} counterexamples", r.statement_id, r.instances_checked, r.counterexamples.len());
        if let Some(c) = r.counterexamples.first() {
            let _ = write!(text, " (first: {} {})", c.module, c.parameters);
        }
        text.push('\n');
    }
    let docs: Vec<Value> = reports
        .iter()
        .map(|r| {
            json!({
                "id": r.statement_id,
                "description": r.description,
                "instances": r.instances_checked,
                "counterexamples": r.counterexamples.len(),
                "first_counterexample": r.counterexamples.first().map(|c| json!({"module": c.module, "parameters": c.parameters})),
            })
        })
        .collect();
    let doc = json!({
        "command": "corpus",
        "seed": spec.seed,
        "vars": spec.variable_count,
        "count": spec.instance_count,
        "n_max": bounds.n_max,
        "l_max": bounds.l_max,
        "statements": reports.len(),
        "counterexamples": total,
        "reports": docs,
    });
    Ok(Rendered { text, doc, unmet: total > 0 })
}
