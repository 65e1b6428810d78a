//! Named examples, seeded random monomial modules, and a verifier that
//! checks the paper's statements over a corpus.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{ideal_combine, minimalize_monomials, Ideal, IdealOp};
use crate::invariants::{cm_defect, is_regular_element, LocalProfile};
use crate::par;
use crate::poly::{Monomial, MonomialOrder, PolyRing, Polynomial};
use crate::resolution::PresentedModule;
use crate::serre::{decide_from_profiles, grade_verdict, monomial_prime_grades, exhaustive_monomial_report, Answer, PropertyQuery};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub seed: u64,
    pub variable_count: usize,
    pub max_degree: u32,
    pub generator_count: usize,
    pub instance_count: usize,
}

impl CorpusSpec {
    pub fn new(seed: u64, variable_count: usize, instance_count: usize) -> Self {
        CorpusSpec { seed, variable_count, max_degree: 3, generator_count: 6, instance_count }
    }

    pub fn validate(&self) -> Result<()> {
        if !(2..=6).contains(&self.variable_count) {
            return Err(Error::OutOfRange(format!("variable_count {} not in 2..=6", self.variable_count)));
        }
        if !(1..=5).contains(&self.max_degree) {
            return Err(Error::OutOfRange(format!("max_degree {} not in 1..=5", self.max_degree)));
        }
        if !(1..=8).contains(&self.generator_count) {
            return Err(Error::OutOfRange(format!("generator_count {} not in 1..=8", self.generator_count)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub n_max: u32,
    pub l_max: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub module: String,
    pub parameters: String,
    pub profiles: Vec<LocalProfile>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub statement_id: String,
    pub description: String,
    pub instances_checked: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// The statements checked by [`verify_modules`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Statement {
    CmdIffAllCnl,
    DepthBoundedCharacterization,
    Monotonicity,
    SnlImpliesCnl,
    SnFamily,
    RegularElement,
    Deformation,
    VariableAdjunction,
    GradeCriterion,
}

impl Statement {
    pub const ALL: [Statement; 9] = [
        Statement::CmdIffAllCnl,
        Statement::DepthBoundedCharacterization,
        Statement::Monotonicity,
        Statement::SnlImpliesCnl,
        Statement::SnFamily,
        Statement::RegularElement,
        Statement::Deformation,
        Statement::VariableAdjunction,
        Statement::GradeCriterion,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Statement::CmdIffAllCnl => "a_cmd_le_l_iff_all_cnl",
            Statement::DepthBoundedCharacterization => "b_depth_bounded_characterization",
            Statement::Monotonicity => "c_monotonicity",
            Statement::SnlImpliesCnl => "d_snl_implies_cnl",
            Statement::SnFamily => "e_sn_family",
            Statement::RegularElement => "f_regular_element",
            Statement::Deformation => "g_deformation",
            Statement::VariableAdjunction => "h_variable_adjunction",
            Statement::GradeCriterion => "i_grade_criterion",
        }
    }

    pub fn description(&self) -> &'static str {
        match self {
            Statement::CmdIffAllCnl => "cmd(M) <= l iff M has (C_n^l) for every n",
            Statement::DepthBoundedCharacterization => {
                "(C_n^l) iff cmd(M_p) <= l at every prime with depth(M_p) <= n-l-1"
            }
            Statement::Monotonicity => "(C_n^l) implies (C_{n-1}^l) and (C_n^{l+1})",
            Statement::SnlImpliesCnl => "(S_n^l) implies (C_n^l); (S_n^l) agrees with (S_{n-l}) for n >= l",
            Statement::SnFamily => "(S_n) for all n iff CM; (S_n) iff M_p is CM whenever depth(M_p) < n",
            Statement::RegularElement => "x regular: cmd(M/xM) = cmd(M), and (C_n^l) on M gives (C_{n-1}^l) on M/xM",
            Statement::Deformation => {
                "x regular in the irrelevant ideal (graded stand-in for the Jacobson radical): (C_n^l) on M/xM gives (C_n^l) on M"
            }
            Statement::VariableAdjunction => {
                "polynomial-variable analogue of the power-series statement: cmd(M[y]) = cmd(M), and (C_n^l) passes to M[y]"
            }
            Statement::GradeCriterion => "(C_n^l) iff grade(p, M) >= min(n, dim M_p) - l at every monomial prime in the support",
        }
    }
}

fn variable_names(prefix: &str, range: std::ops::RangeInclusive<usize>) -> Vec<String> {
    range.map(|i| format!("{prefix}{i}")).collect()
}

/// `S/I` with `I = (X0) ∩ (X0,...,Xr)^(r+1)` in `k[X0..Xr, T1..Td]`.
pub fn example_excm(d: usize, r: usize) -> Result<PresentedModule> {
    if r == 0 {
        return Err(Error::OutOfRange("r must be positive".into()));
    }
    if d + r + 1 > 8 {
        return Err(Error::OutOfRange(format!("d + r + 1 = {} exceeds 8", d + r + 1)));
    }
    let mut names = variable_names("X", 0..=r);
    if d > 0 {
        names.extend(variable_names("T", 1..=d));
    }
    let ring = PolyRing::new(names, crate::field::CoefficientField::RATIONALS, MonomialOrder::GREVLEX)?;
    let x0 = Ideal::new(&ring, vec![Polynomial::variable(&ring, 0)])?;
    let maximal = Ideal::new(&ring, (0..=r).map(|i| Polynomial::variable(&ring, i)).collect())?;
    let power = ideal_combine(&maximal, &maximal, IdealOp::Power(r as u32 + 1))?;
    let ideal = ideal_combine(&x0, &power, IdealOp::Intersection)?;
    Ok(PresentedModule::cyclic(&ideal)?.with_label(format!("excm(d={d},r={r})")))
}

/// `k[X,Y,Z] / ((X,Y,Z)^2 ∩ (Z))`.
pub fn example_matsumura() -> PresentedModule {
    let ring = PolyRing::rational(&["X", "Y", "Z"]);
    let maximal = Ideal::new(&ring, (0..3).map(|i| Polynomial::variable(&ring, i)).collect()).unwrap();
    let square = ideal_combine(&maximal, &maximal, IdealOp::Power(2)).unwrap();
    let z = Ideal::new(&ring, vec![Polynomial::variable(&ring, 2)]).unwrap();
    let ideal = ideal_combine(&square, &z, IdealOp::Intersection).unwrap();
    PresentedModule::cyclic(&ideal).unwrap().with_label("matsumura")
}

/// Minimal generators of the monomial ideal `J` for instance `index`.
///
/// Half the instances draw random monomials; the other half intersect
/// powers of random monomial primes, which produces mixed and embedded
/// components. Either way at most `generator_count` generators are kept.
pub fn random_monomial_generators(spec: &CorpusSpec, index: usize) -> Vec<Monomial> {
    let m = spec.variable_count;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    rng.set_stream(index as u64);
    let mons = if rng.gen_bool(0.5) {
        let count = rng.gen_range(spec.generator_count.min(2)..=spec.generator_count);
        (0..count)
            .map(|_| {
                let degree = rng.gen_range(1..=spec.max_degree);
                let mut e = vec![0u32; m];
                for _ in 0..degree {
                    e[rng.gen_range(0..m)] += 1;
                }
                Monomial::from_exponents(&e)
            })
            .collect()
    } else {
        let components = rng.gen_range(2..=3);
        let mut acc = vec![Monomial::one(m)];
        for _ in 0..components {
            let mask = rng.gen_range(1..(1u64 << m));
            let power = rng.gen_range(1..=spec.max_degree.min(2));
            let prime_power = monomials_of_degree(mask, m, power);
            let lcms = acc.iter().flat_map(|a| prime_power.iter().map(move |b| a.lcm(b))).collect();
            acc = minimalize_monomials(lcms, MonomialOrder::GREVLEX);
        }
        acc
    };
    let mut gens = minimalize_monomials(mons, MonomialOrder::GREVLEX);
    gens.truncate(spec.generator_count);
    gens
}

/// All monomials of degree `d` in the variables of `mask`.
fn monomials_of_degree(mask: u64, nvars: usize, d: u32) -> Vec<Monomial> {
    let vars: Vec<usize> = (0..nvars).filter(|i| mask & (1 << i) != 0).collect();
    let mut out = vec![vec![0u32; nvars]];
    for _ in 0..d {
        let mut next = Vec::new();
        for e in &out {
            let last = (0..nvars).rev().find(|&i| e[i] > 0).unwrap_or(0);
            for &v in vars.iter().filter(|&&v| v >= last) {
                let mut f = e.clone();
                f[v] += 1;
                next.push(f);
            }
        }
        out = next;
    }
    out.iter().map(|e| Monomial::from_exponents(e)).collect()
}

pub fn corpus_ring(spec: &CorpusSpec) -> Arc<PolyRing> {
    let names = variable_names("x", 1..=spec.variable_count);
    PolyRing::new(names, crate::field::CoefficientField::RATIONALS, MonomialOrder::GREVLEX).unwrap()
}

/// `R/J` with `J` drawn deterministically from `(seed, index)`.
pub fn random_monomial_module(spec: &CorpusSpec, index: usize) -> PresentedModule {
    let ring = corpus_ring(spec);
    let gens = random_monomial_generators(spec, index).into_iter().map(|m| Polynomial::monomial(&ring, m)).collect();
    let ideal = Ideal::new(&ring, gens).unwrap();
    PresentedModule::cyclic(&ideal).unwrap().with_label(format!("corpus(seed={},#{index})", spec.seed))
}

pub fn corpus(spec: &CorpusSpec) -> Vec<PresentedModule> {
    (0..spec.instance_count).map(|i| random_monomial_module(spec, i)).collect()
}

/// `R[y] / J R[y]` for a cyclic module `R/J`.
pub fn adjoin_variable(m: &PresentedModule) -> Result<(PresentedModule, Polynomial)> {
    let ideal = m.cyclic_ideal().ok_or_else(|| Error::Shape("adjoin_variable needs a cyclic module".into()))?;
    let ring = m.ring();
    let name = ring.fresh_name("y");
    let big = ring.extend(&[name.as_str()])?;
    let images: Vec<Option<usize>> = (0..ring.nvars()).map(Some).collect();
    let gens = ideal.generators().iter().map(|g| g.substitute(&big, &images)).collect();
    let out = PresentedModule::cyclic(&Ideal::new(&big, gens)?)?;
    let label = format!("{}[{name}]", m.label().unwrap_or("M"));
    Ok((out.with_label(label), Polynomial::variable(&big, ring.nvars())))
}

/// `R/(J + (x_i - x_j))`, rewritten as a monomial module over the ring
/// without `x_i` by substituting `x_i -> x_j`.
pub fn quotient_by_difference(m: &PresentedModule, i: usize, j: usize) -> Result<PresentedModule> {
    let ideal = m.cyclic_ideal().ok_or_else(|| Error::Shape("quotient_by_difference needs a cyclic module".into()))?;
    let ring = m.ring();
    let n = ring.nvars();
    if i >= n || j >= n || i == j {
        return Err(Error::OutOfRange(format!("bad variable pair ({i},{j})")));
    }
    let mask = ((1u64 << n) - 1) & !(1 << i);
    let small = ring.subring(mask);
    let new_index = |k: usize| if k < i { k } else { k - 1 };
    let images: Vec<Option<usize>> = (0..n).map(|k| Some(new_index(if k == i { j } else { k }))).collect();
    let gens = ideal.generators().iter().map(|g| g.substitute(&small, &images)).collect();
    let out = PresentedModule::cyclic(&Ideal::new(&small, gens)?)?;
    let label = format!("{}/({}-{})", m.label().unwrap_or("M"), ring.variables()[i], ring.variables()[j]);
    Ok(out.with_label(label))
}

/// The first difference of variables that is regular on a cyclic monomial
/// module, together with the monomial form of the quotient.
pub fn regular_difference(m: &PresentedModule) -> Result<Option<(Polynomial, PresentedModule)>> {
    let ring = m.ring();
    let n = ring.nvars();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let x = Polynomial::variable(ring, i).sub(&Polynomial::variable(ring, j));
            if is_regular_element(&x, m)? {
                return Ok(Some((x, quotient_by_difference(m, i, j)?)));
            }
        }
    }
    Ok(None)
}

/// Exhaustive data on one module, reused by every statement.
struct Instance {
    module: PresentedModule,
    profiles: Vec<LocalProfile>,
    cmd: i64,
    dim: i64,
}

impl Instance {
    fn new(module: PresentedModule) -> Result<Self> {
        let profiles = exhaustive_monomial_report(&module)?;
        let cmd = cm_defect(&module);
        let dim = profiles.iter().filter_map(|p| p.dim_local.finite()).max().unwrap_or(-1);
        Ok(Instance { module, profiles, cmd, dim })
    }

    fn label(&self) -> String {
        self.module.label().unwrap_or("module").to_string()
    }

    fn yes(&self, q: PropertyQuery) -> bool {
        decide_from_profiles(&self.profiles, &q).answer == Answer::Yes
    }

    fn n_range(&self, bounds: &Bounds) -> std::ops::RangeInclusive<u32> {
        0..=(bounds.n_max as i64).min(self.dim + 2).max(0) as u32
    }

    fn l_range(&self, bounds: &Bounds) -> std::ops::RangeInclusive<u32> {
        0..=(bounds.l_max as i64).min(self.dim + 1).max(0) as u32
    }

    fn counterexample(&self, parameters: String) -> Counterexample {
        Counterexample { module: self.label(), parameters, profiles: self.profiles.clone() }
    }
}

type Found = Vec<Counterexample>;

fn check_a(inst: &Instance, bounds: &Bounds) -> Found {
    let mut out = Vec::new();
    let all_n = 0..=(inst.dim + 2).max(0) as u32;
    for l in inst.l_range(bounds) {
        let lhs = inst.cmd <= l as i64;
        let rhs = all_n.clone().all(|n| inst.yes(PropertyQuery::cnl(n, l)));
        if lhs != rhs {
            out.push(inst.counterexample(format!("l={l} cmd={} all_cnl={rhs}", inst.cmd)));
        }
    }
    out
}

fn check_b(inst: &Instance, bounds: &Bounds) -> Found {
    let mut out = Vec::new();
    for n in inst.n_range(bounds) {
        for l in inst.l_range(bounds) {
            let lhs = inst.yes(PropertyQuery::cnl(n, l));
            let rhs = inst.profiles.iter().filter(|p| p.in_support).all(|p| {
                let depth = p.depth_local.expect_finite("depth");
                depth > n as i64 - l as i64 - 1 || p.cmd_local.expect_finite("cmd") <= l as i64
            });
            if lhs != rhs {
                out.push(inst.counterexample(format!("n={n} l={l}")));
            }
        }
    }
    out
}

fn check_c(inst: &Instance, bounds: &Bounds) -> Found {
    let mut out = Vec::new();
    for n in inst.n_range(bounds) {
        for l in inst.l_range(bounds) {
            if !inst.yes(PropertyQuery::cnl(n, l)) {
                continue;
            }
            if n > 0 && !inst.yes(PropertyQuery::cnl(n - 1, l)) {
                out.push(inst.counterexample(format!("n={n} l={l} but not n-1")));
            }
            if !inst.yes(PropertyQuery::cnl(n, l + 1)) {
                out.push(inst.counterexample(format!("n={n} l={l} but not l+1")));
            }
        }
    }
    out
}

fn check_d(inst: &Instance, bounds: &Bounds) -> Found {
    let mut out = Vec::new();
    for n in inst.n_range(bounds) {
        for l in inst.l_range(bounds) {
            let snl = inst.yes(PropertyQuery::snl(n, l));
            if snl && !inst.yes(PropertyQuery::cnl(n, l)) {
                out.push(inst.counterexample(format!("n={n} l={l} snl without cnl")));
            }
            if n >= l && snl != inst.yes(PropertyQuery::sn(n - l)) {
                out.push(inst.counterexample(format!("n={n} l={l} snl differs from S_(n-l)")));
            }
        }
        if inst.yes(PropertyQuery::cnl(n, 0)) != inst.yes(PropertyQuery::sn(n))
            || inst.yes(PropertyQuery::cnl(n, 1)) != inst.yes(PropertyQuery::cn(n))
        {
            out.push(inst.counterexample(format!("n={n} named forms differ")));
        }
    }
    out
}

fn check_e(inst: &Instance, bounds: &Bounds) -> Found {
    let mut out = Vec::new();
    let all_sn = (0..=(inst.dim + 2).max(0) as u32).all(|n| inst.yes(PropertyQuery::sn(n)));
    if all_sn != (inst.cmd == 0) {
        out.push(inst.counterexample(format!("all S_n = {all_sn} but cmd = {}", inst.cmd)));
    }
    for n in inst.n_range(bounds) {
        let rhs = inst.profiles.iter().filter(|p| p.in_support).all(|p| {
            p.depth_local.expect_finite("depth") >= n as i64 || p.cmd_local.expect_finite("cmd") == 0
        });
        if inst.yes(PropertyQuery::sn(n)) != rhs {
            out.push(inst.counterexample(format!("n={n}")));
        }
    }
    out
}

/// Pairs `(M, x, M/xM)` with `x` a verified regular element: the module
/// with a fresh variable adjoined, and a regular difference of variables
/// when one exists.
fn regular_pairs(inst: &Instance) -> Result<Vec<(Instance, String, Instance)>> {
    let mut pairs = Vec::new();
    let (big, y) = adjoin_variable(&inst.module)?;
    pairs.push((Instance::new(big)?, y.to_string(), Instance::new(inst.module.clone())?));
    if inst.module.ring().nvars() >= 2 {
        if let Some((x, quotient)) = regular_difference(&inst.module)? {
            pairs.push((Instance::new(inst.module.clone())?, x.to_string(), Instance::new(quotient)?));
        }
    }
    Ok(pairs)
}

fn check_f(pairs: &[(Instance, String, Instance)], bounds: &Bounds) -> Found {
    let mut out = Vec::new();
    for (m, x, q) in pairs {
        if m.cmd != q.cmd {
            out.push(m.counterexample(format!("x={x}: cmd {} vs quotient {}", m.cmd, q.cmd)));
        }
        for n in m.n_range(bounds).filter(|&n| n >= 1) {
            for l in m.l_range(bounds) {
                if m.yes(PropertyQuery::cnl(n, l)) && !q.yes(PropertyQuery::cnl(n - 1, l)) {
                    out.push(m.counterexample(format!("x={x} n={n} l={l}: quotient fails (C_(n-1)^l)")));
                }
            }
        }
    }
    out
}

fn check_g(pairs: &[(Instance, String, Instance)], bounds: &Bounds) -> Found {
    let mut out = Vec::new();
    for (m, x, q) in pairs {
        for n in m.n_range(bounds) {
            for l in m.l_range(bounds) {
                if q.yes(PropertyQuery::cnl(n, l)) && !m.yes(PropertyQuery::cnl(n, l)) {
                    out.push(m.counterexample(format!("x={x} n={n} l={l}: quotient has (C_n^l), module does not")));
                }
            }
        }
    }
    out
}

fn check_h(inst: &Instance, bounds: &Bounds) -> Result<Found> {
    let mut out = Vec::new();
    let (big, _) = adjoin_variable(&inst.module)?;
    let big = Instance::new(big)?;
    if big.cmd != inst.cmd {
        out.push(inst.counterexample(format!("cmd {} vs adjoined {}", inst.cmd, big.cmd)));
    }
    for n in inst.n_range(bounds) {
        for l in inst.l_range(bounds) {
            if inst.yes(PropertyQuery::cnl(n, l)) && !big.yes(PropertyQuery::cnl(n, l)) {
                out.push(inst.counterexample(format!("n={n} l={l}: adjoined module fails")));
            }
        }
    }
    Ok(out)
}

fn check_i(inst: &Instance, bounds: &Bounds) -> Result<Found> {
    let mut out = Vec::new();
    let grades = monomial_prime_grades(&inst.module, &inst.profiles)?;
    for n in inst.n_range(bounds) {
        for l in inst.l_range(bounds) {
            let depth_based = inst.yes(PropertyQuery::cnl(n, l));
            let grade_based = grade_verdict(&inst.profiles, &grades, n, l);
            if depth_based != grade_based {
                out.push(inst.counterexample(format!("n={n} l={l}: depth {depth_based} grade {grade_based}")));
            }
        }
    }
    Ok(out)
}

fn check_instance(module: &PresentedModule, bounds: &Bounds, statements: &[Statement]) -> Vec<Found> {
    let run = || -> Result<Vec<Found>> {
        let inst = Instance::new(module.clone())?;
        let needs_pairs = statements.iter().any(|s| matches!(s, Statement::RegularElement | Statement::Deformation));
        let pairs = if needs_pairs { regular_pairs(&inst)? } else { Vec::new() };
        statements
            .iter()
            .map(|s| {
                Ok(match s {
                    Statement::CmdIffAllCnl => check_a(&inst, bounds),
                    Statement::DepthBoundedCharacterization => check_b(&inst, bounds),
                    Statement::Monotonicity => check_c(&inst, bounds),
                    Statement::SnlImpliesCnl => check_d(&inst, bounds),
                    Statement::SnFamily => check_e(&inst, bounds),
                    Statement::RegularElement => check_f(&pairs, bounds),
                    Statement::Deformation => check_g(&pairs, bounds),
                    Statement::VariableAdjunction => check_h(&inst, bounds)?,
                    Statement::GradeCriterion => check_i(&inst, bounds)?,
                })
            })
            .collect()
    };
    run().unwrap_or_else(|e| {
        let label = module.label().unwrap_or("module").to_string();
        statements
            .iter()
            .map(|_| vec![Counterexample { module: label.clone(), parameters: format!("engine error: {e}"), profiles: Vec::new() }])
            .collect()
    })
}

/// Runs the chosen statements over the modules, one report per statement.
pub fn verify_modules(modules: &[PresentedModule], bounds: Bounds, statements: &[Statement]) -> Vec<VerificationReport> {
    let per_instance = par::map_ordered(modules, |m| check_instance(m, &bounds, statements));
    statements
        .iter()
        .enumerate()
        .map(|(k, s)| VerificationReport {
            statement_id: s.id().to_string(),
            description: s.description().to_string(),
            instances_checked: modules.len(),
            counterexamples: per_instance.iter().flat_map(|found| found[k].iter().cloned()).collect(),
        })
        .collect()
}

pub fn verify_paper_statements(spec: &CorpusSpec, bounds: Bounds) -> Result<Vec<VerificationReport>> {
    spec.validate()?;
    Ok(verify_modules(&corpus(spec), bounds, &Statement::ALL))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::global_invariants;
    use crate::serre::check_condition;

    #[test]
    fn excm_small_cases() {
        for (d, r, dim, depth) in [(0, 1, 1, 0), (1, 2, 3, 1), (0, 2, 2, 0)] {
            let g = global_invariants(&example_excm(d, r).unwrap());
            assert_eq!((g.dim, g.depth, g.cmd), (dim.into(), depth.into(), r as i64), "d={d} r={r}");
        }
        assert!(example_excm(4, 4).is_err());
        let m = example_excm(0, 1).unwrap();
        assert_eq!(m.cyclic_ideal().unwrap().groebner_basis().elements().len(), 2);
    }

    #[test]
    fn matsumura_ideal() {
        let m = example_matsumura();
        let gb = m.cyclic_ideal().unwrap().groebner_basis().elements().iter().map(|g| g.to_string()).collect::<Vec<_>>();
        assert_eq!(gb.len(), 3);
        for g in ["X*Z", "Y*Z", "Z^2"] {
            assert!(gb.contains(&g.to_string()), "{gb:?}");
        }
        let v = check_condition(&m, &PropertyQuery::sn(1)).unwrap();
        assert_eq!(v.answer, Answer::No);
        assert_eq!(v.certificate_prime.as_deref(), Some("(X,Y,Z)"));
    }

    #[test]
    fn random_generation_is_deterministic_and_minimal() {
        let spec = CorpusSpec::new(42, 4, 20);
        for i in 0..spec.instance_count {
            let a = random_monomial_generators(&spec, i);
            assert_eq!(a, random_monomial_generators(&spec, i));
            assert!(!a.is_empty() && a.len() <= spec.generator_count);
            for (p, x) in a.iter().enumerate() {
                assert!(!x.is_one());
                for (q, y) in a.iter().enumerate() {
                    assert!(p == q || !x.divides(y));
                }
            }
        }
    }

    #[test]
    fn difference_quotient_is_monomial() {
        let r = PolyRing::rational(&["x", "y", "z"]);
        let j = Ideal::new(&r, crate::poly::parse_polynomial_list("x*y, z^2", &r).unwrap()).unwrap();
        let m = PresentedModule::cyclic(&j).unwrap();
        let q = quotient_by_difference(&m, 0, 2).unwrap();
        assert!(q.is_monomial());
        assert_eq!(q.ring().variables(), &["y".to_string(), "z".to_string()]);
        let (x, _) = regular_difference(&m).unwrap().unwrap();
        assert!(is_regular_element(&x, &m).unwrap());
    }

    #[test]
    fn small_corpus_has_no_counterexamples() {
        let spec = CorpusSpec::new(7, 3, 6);
        let reports = verify_paper_statements(&spec, Bounds { n_max: 5, l_max: 3 }).unwrap();
        assert_eq!(reports.len(), 9);
        for r in &reports {
            assert!(r.passed(), "{}: {:?}", r.statement_id, r.counterexamples);
        }
    }
}
