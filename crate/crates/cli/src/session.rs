//! Session files: one command per line, `#` starts a comment.
//!
//! ```text
//! ring Q[X,Y,Z] grevlex
//! ideal J = X*Z, Y*Z, Z^2
//! compute A = quotient J
//! invariants A
//! check Sn n=1 on A --expect no
//! ```
//!
//! Polynomials are parsed while the session is read, so every syntax,
//! name and variable error carries a line and column.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use cmdefect::corpus::{Bounds, CorpusSpec};
use cmdefect::poly::{parse_polynomial, MonomialOrder, PolyRing, Polynomial};
use cmdefect::serre::{PropertyKind, PropertyQuery};
use cmdefect::{CoefficientField, Error as EngineError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{span}: {message}")]
pub struct ParseError {
    pub span: Span,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expectation {
    Yes,
    No,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComputeOp {
    Quotient(String),
    Intersect(String, String),
    Power(String, u32),
    Sum(String, String),
}

#[derive(Debug, Clone)]
pub enum Statement {
    Ring(Arc<PolyRing>),
    Ideal { name: String, generators: Vec<Polynomial> },
    Module { name: String, rows: Vec<Vec<Polynomial>> },
    Compute { name: String, op: ComputeOp },
    Invariants { name: String },
    Profile { name: String },
    Check { query: PropertyQuery, name: String, expect: Option<Expectation> },
    Corpus { spec: CorpusSpec, bounds: Bounds },
}

#[derive(Debug, Clone)]
pub struct Command {
    pub span: Span,
    pub source: String,
    pub statement: Statement,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObjectKind {
    Ideal,
    Module,
}

impl fmt::Display for ObjectKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ObjectKind::Ideal => "an ideal",
            ObjectKind::Module => "a module",
        })
    }
}

#[derive(Debug, Clone, Default)]
pub struct Session {
    pub ring: Option<Arc<PolyRing>>,
    pub objects: HashMap<String, ObjectKind>,
    pub commands: Vec<Command>,
}

impl Session {
    pub fn len(&self) -> usize {
        self.commands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.commands.is_empty()
    }
}

pub fn parse_session(text: &str) -> Result<Session, ParseError> {
    let mut session = Session::default();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let mut c = Cursor { line, pos: 0, number: i + 1 };
        c.skip_ws();
        let span = c.span();
        let statement = parse_line(&mut c, &mut session)?;
        if let Statement::Ring(r) = &statement {
            session.ring = Some(r.clone());
        }
        session.commands.push(Command { span, source: line.trim().to_string(), statement });
    }
    Ok(session)
}

struct Cursor<'a> {
    line: &'a str,
    pos: usize,
    number: usize,
}

impl<'a> Cursor<'a> {
    fn span_at(&self, pos: usize) -> Span {
        Span { line: self.number, column: self.line[..pos].chars().count() + 1 }
    }

    fn span(&self) -> Span {
        self.span_at(self.pos)
    }

    fn error_at(&self, pos: usize, message: impl Into<String>) -> ParseError {
        ParseError { span: self.span_at(pos), message: message.into() }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        self.error_at(self.pos, message)
    }

    fn rest(&self) -> &'a str {
        &self.line[self.pos..]
    }

    fn skip_ws(&mut self) {
        let rest = self.rest();
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.line.len()
    }

    /// The next run of non-space characters, without consuming it.
    fn peek_word(&mut self) -> &'a str {
        self.skip_ws();
        let rest = self.rest();
        let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
        &rest[..end]
    }

    fn word(&mut self, what: &str) -> Result<(usize, &'a str), ParseError> {
        let w = self.peek_word();
        if w.is_empty() {
            return Err(self.error(format!("expected {what}")));
        }
        let at = self.pos;
        self.pos += w.len();
        Ok((at, w))
    }

    fn identifier(&mut self, what: &str) -> Result<(usize, &'a str), ParseError> {
        self.skip_ws();
        let rest = self.rest();
        let end = rest
            .char_indices()
            .find(|&(i, ch)| !(ch == '_' || ch.is_ascii_alphabetic() || (i > 0 && ch.is_ascii_digit())))
            .map_or(rest.len(), |(i, _)| i);
        if end == 0 {
            return Err(self.error(format!("expected {what}")));
        }
        let at = self.pos;
        self.pos += end;
        Ok((at, &rest[..end]))
    }

    fn expect(&mut self, token: &str) -> Result<(), ParseError> {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            Ok(())
        } else {
            Err(self.error(format!("expected `{token}`")))
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            let w = self.peek_word();
            Err(self.error(format!("unexpected `{w}`")))
        }
    }

    fn number<T: std::str::FromStr>(&self, at: usize, text: &str, what: &str) -> Result<T, ParseError> {
        text.parse().map_err(|_| self.error_at(at, format!("expected a natural number for {what}, found `{text}`")))
    }

    /// Maps an engine parse error inside `text` (which starts at byte `at`)
    /// back to a position on the line.
    fn engine_error(&self, at: usize, text: &str, e: EngineError) -> ParseError {
        match e {
            EngineError::Parse { offset, message } => self.error_at(at + offset.min(text.len()), message),
            EngineError::UnknownVariable { name, offset } => {
                self.error_at(at + offset.min(text.len()), format!("unknown variable `{name}`"))
            }
            other => self.error_at(at, other.to_string()),
        }
    }
}

fn parse_line(c: &mut Cursor<'_>, s: &mut Session) -> Result<Statement, ParseError> {
    let (at, keyword) = c.identifier("a command")?;
    match keyword {
        "ring" => parse_ring(c, s, at),
        "ideal" => {
            let ring = require_ring(c, s, at)?;
            let name = declare(c, s, ObjectKind::Ideal)?;
            c.expect("=")?;
            c.skip_ws();
            let generators = poly_list(c, c.pos, c.rest(), &ring)?;
            c.pos = c.line.len();
            if generators.is_empty() {
                return Err(c.error("an ideal needs at least one generator"));
            }
            Ok(Statement::Ideal { name, generators })
        }
        "module" => {
            let ring = require_ring(c, s, at)?;
            let name = declare(c, s, ObjectKind::Module)?;
            c.expect("=")?;
            let (kw_at, kw) = c.identifier("`coker`")?;
            if kw != "coker" {
                return Err(c.error_at(kw_at, format!("expected `coker`, found `{kw}`")));
            }
            let rows = parse_matrix(c, &ring)?;
            c.finish()?;
            Ok(Statement::Module { name, rows })
        }
        "compute" => {
            require_ring(c, s, at)?;
            let name_at = {
                c.skip_ws();
                c.pos
            };
            let (_, name) = c.identifier("a name")?;
            c.expect("=")?;
            let (op_at, op) = c.identifier("`quotient`, `intersect`, `power` or `sum`")?;
            let (op, kind) = match op {
                "quotient" => (ComputeOp::Quotient(reference(c, s, ObjectKind::Ideal)?), ObjectKind::Module),
                "intersect" => {
                    (ComputeOp::Intersect(reference(c, s, ObjectKind::Ideal)?, reference(c, s, ObjectKind::Ideal)?), ObjectKind::Ideal)
                }
                "sum" => (ComputeOp::Sum(reference(c, s, ObjectKind::Ideal)?, reference(c, s, ObjectKind::Ideal)?), ObjectKind::Ideal),
                "power" => {
                    let base = reference(c, s, ObjectKind::Ideal)?;
                    let (k_at, k) = c.word("an exponent")?;
                    (ComputeOp::Power(base, c.number(k_at, k, "the exponent")?), ObjectKind::Ideal)
                }
                other => {
                    return Err(c.error_at(op_at, format!("unknown operation `{other}`; expected quotient, intersect, power or sum")))
                }
            };
            c.finish()?;
            insert(c, s, name_at, name, kind)?;
            Ok(Statement::Compute { name: name.to_string(), op })
        }
        "invariants" => {
            let name = reference(c, s, ObjectKind::Module)?;
            c.finish()?;
            Ok(Statement::Invariants { name })
        }
        "profile" => {
            let name = reference(c, s, ObjectKind::Module)?;
            c.finish()?;
            Ok(Statement::Profile { name })
        }
        "check" => parse_check(c, s),
        "corpus" => parse_corpus(c),
        other => Err(c.error_at(at, format!("unknown command `{other}`"))),
    }
}

fn require_ring(c: &Cursor<'_>, s: &Session, at: usize) -> Result<Arc<PolyRing>, ParseError> {
    s.ring.clone().ok_or_else(|| c.error_at(at, "no ring declared yet"))
}

fn insert(c: &Cursor<'_>, s: &mut Session, at: usize, name: &str, kind: ObjectKind) -> Result<(), ParseError> {
    if s.objects.contains_key(name) {
        return Err(c.error_at(at, format!("duplicate name `{name}`")));
    }
    s.objects.insert(name.to_string(), kind);
    Ok(())
}

fn declare(c: &mut Cursor<'_>, s: &mut Session, kind: ObjectKind) -> Result<String, ParseError> {
    let (at, name) = c.identifier("a name")?;
    insert(c, s, at, name, kind)?;
    Ok(name.to_string())
}

fn reference(c: &mut Cursor<'_>, s: &Session, want: ObjectKind) -> Result<String, ParseError> {
    let (at, name) = c.identifier("a name")?;
    match s.objects.get(name) {
        None => Err(c.error_at(at, format!("`{name}` is not declared"))),
        Some(&k) if k != want => {
            let hint = if want == ObjectKind::Module { format!("; try `compute A = quotient {name}`") } else { String::new() };
            Err(c.error_at(at, format!("`{name}` is {k}, expected {want}{hint}")))
        }
        Some(_) => Ok(name.to_string()),
    }
}

fn parse_ring(c: &mut Cursor<'_>, s: &Session, at: usize) -> Result<Statement, ParseError> {
    if s.ring.is_some() {
        return Err(c.error_at(at, "a ring is already declared"));
    }
    let (field_at, field) = c.identifier("a coefficient field (Q or Fp such as F101)")?;
    let field = match field {
        "Q" => CoefficientField::RATIONALS,
        f if f.len() > 1 && f.starts_with('F') && f[1..].bytes().all(|b| b.is_ascii_digit()) => {
            let p: u32 = c.number(field_at + 1, &f[1..], "the characteristic")?;
            CoefficientField::prime(p).map_err(|e| c.error_at(field_at, e.to_string()))?
        }
        other => return Err(c.error_at(field_at, format!("unsupported coefficient field `{other}`; expected Q or F<p>"))),
    };
    c.expect("[")?;
    let mut names = Vec::new();
    c.skip_ws();
    if !c.rest().starts_with(']') {
        loop {
            let (_, v) = c.identifier("a variable name")?;
            names.push(v.to_string());
            c.skip_ws();
            if c.rest().starts_with(',') {
                c.pos += 1;
            } else {
                break;
            }
        }
    }
    let vars_at = c.pos;
    c.expect("]")?;
    let order = if c.at_end() {
        MonomialOrder::GREVLEX
    } else {
        let (order_at, order) = c.word("a monomial order")?;
        match order {
            "grevlex" => MonomialOrder::GREVLEX,
            "grlex" => MonomialOrder::GRLEX,
            "lex" => MonomialOrder::LEX,
            other => return Err(c.error_at(order_at, format!("unsupported order \"{other}\"; expected lex, grlex or grevlex"))),
        }
    };
    c.finish()?;
    let ring = PolyRing::new(names, field, order).map_err(|e| c.error_at(vars_at, e.to_string()))?;
    Ok(Statement::Ring(ring))
}

/// Comma separated polynomials in `text`, which starts at byte `at`.
fn poly_list(c: &Cursor<'_>, at: usize, text: &str, ring: &Arc<PolyRing>) -> Result<Vec<Polynomial>, ParseError> {
    let mut out = Vec::new();
    let mut start = 0;
    for piece in text.split(',') {
        let lead = piece.len() - piece.trim_start().len();
        let body = piece.trim();
        if body.is_empty() {
            return Err(c.error_at(at + start, "empty entry in list"));
        }
        let f = parse_polynomial(body, ring).map_err(|e| c.engine_error(at + start + lead, body, e))?;
        out.push(f);
        start += piece.len() + 1;
    }
    Ok(out)
}

fn parse_matrix(c: &mut Cursor<'_>, ring: &Arc<PolyRing>) -> Result<Vec<Vec<Polynomial>>, ParseError> {
    c.expect("[")?;
    let mut rows = Vec::new();
    loop {
        c.expect("[")?;
        let at = c.pos;
        let close = c.rest().find(']').ok_or_else(|| c.error("unclosed row, expected `]`"))?;
        let body = &c.rest()[..close];
        let row = if body.trim().is_empty() { Vec::new() } else { poly_list(c, at, body, ring)? };
        if let Some(first) = rows.first() {
            let first: &Vec<Polynomial> = first;
            if first.len() != row.len() {
                return Err(c.error_at(at, format!("row has {} entries, the first row has {}", row.len(), first.len())));
            }
        }
        rows.push(row);
        c.pos += close + 1;
        c.skip_ws();
        if c.rest().starts_with(',') {
            c.pos += 1;
            continue;
        }
        c.expect("]")?;
        return Ok(rows);
    }
}

/// `key=value` pairs with natural number values, in any order, up to the
/// first word without `=`.
fn key_values(c: &mut Cursor<'_>, allowed: &[&str]) -> Result<HashMap<String, u64>, ParseError> {
    let mut out = HashMap::new();
    loop {
        let w = c.peek_word();
        if !w.contains('=') {
            return Ok(out);
        }
        let (at, w) = c.word("a parameter")?;
        let (key, value) = w.split_once('=').unwrap();
        if !allowed.contains(&key) {
            return Err(c.error_at(at, format!("unknown parameter `{key}`; expected one of {}", allowed.join(", "))));
        }
        if out.contains_key(key) {
            return Err(c.error_at(at, format!("parameter `{key}` given twice")));
        }
        out.insert(key.to_string(), c.number(at + key.len() + 1, value, key)?);
    }
}

fn parse_check(c: &mut Cursor<'_>, s: &Session) -> Result<Statement, ParseError> {
    let (kind_at, kind) = c.word("a property")?;
    let kind = match kind {
        "Sn" => PropertyKind::Sn,
        "Cn" => PropertyKind::Cn,
        "Cnl" => PropertyKind::Cnl,
        "Snl" => PropertyKind::Snl,
        "acm" => PropertyKind::AlmostCm,
        other => return Err(c.error_at(kind_at, format!("unknown property `{other}`; expected Sn, Cn, Cnl, Snl or acm"))),
    };
    let params_at = c.pos;
    let kv = key_values(c, &["n", "l"])?;
    let (need_n, need_l) = match kind {
        PropertyKind::Sn | PropertyKind::Cn => (true, false),
        PropertyKind::Cnl | PropertyKind::Snl => (true, true),
        _ => (false, false),
    };
    let get = |key: &str, needed: bool| -> Result<Option<u32>, ParseError> {
        match (kv.get(key), needed) {
            (Some(&v), true) => u32::try_from(v).map(Some).map_err(|_| c.error_at(params_at, format!("{key} is too large"))),
            (None, true) => Err(c.error_at(params_at, format!("{kind} needs {key}=.."))),
            (Some(_), false) => Err(c.error_at(params_at, format!("{kind} takes no {key}"))),
            (None, false) => Ok(None),
        }
    };
    let query = PropertyQuery { kind, n: get("n", need_n)?, l: get("l", need_l)? };
    let (on_at, on) = c.word("`on`")?;
    if on != "on" {
        return Err(c.error_at(on_at, format!("expected `on`, found `{on}`")));
    }
    let name = reference(c, s, ObjectKind::Module)?;
    let expect = if c.at_end() {
        None
    } else {
        let (flag_at, flag) = c.word("`--expect`")?;
        if flag != "--expect" {
            return Err(c.error_at(flag_at, format!("unexpected `{flag}`")));
        }
        let (v_at, v) = c.word("yes or no")?;
        match v {
            "yes" => Some(Expectation::Yes),
            "no" => Some(Expectation::No),
            other => return Err(c.error_at(v_at, format!("expected yes or no, found `{other}`"))),
        }
    };
    c.finish()?;
    Ok(Statement::Check { query, name, expect })
}

fn parse_corpus(c: &mut Cursor<'_>) -> Result<Statement, ParseError> {
    let params_at = c.pos;
    let kv = key_values(c, &["seed", "vars", "count", "degree", "gens", "n", "l"])?;
    let (verify_at, verify) = c.word("`verify`")?;
    if verify != "verify" {
        return Err(c.error_at(verify_at, format!("expected `verify`, found `{verify}`")));
    }
    c.finish()?;
    let need = |key: &str| kv.get(key).copied().ok_or_else(|| c.error_at(params_at, format!("corpus needs {key}=..")));
    let small = |key: &str, default: u64| -> Result<usize, ParseError> {
        let v = kv.get(key).copied().unwrap_or(default);
        usize::try_from(v).ok().filter(|&v| v <= 1 << 20).ok_or_else(|| c.error_at(params_at, format!("{key} is too large")))
    };
    let mut spec = CorpusSpec::new(need("seed")?, small("vars", need("vars")?)?, small("count", need("count")?)?);
    spec.max_degree = small("degree", spec.max_degree as u64)? as u32;
    spec.generator_count = small("gens", spec.generator_count as u64)?;
    spec.validate().map_err(|e| c.error_at(params_at, e.to_string()))?;
    let bounds = Bounds { n_max: small("n", 6)? as u32, l_max: small("l", 4)? as u32 };
    Ok(Statement::Corpus { spec, bounds })
}
