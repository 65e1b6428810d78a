//! Deciders for Serre-type conditions on graded modules.
//!
//! Monomial modules are decided exactly by sweeping the `2^m` monomial
//! primes. Other modules get a three-valued answer: `yes` from a sufficient
//! criterion, `no` only with a prime that visibly violates the inequality,
//! `unknown` otherwise.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extint::ExtendedInt;
use crate::groebner::{ideal_combine, krull_dimension_ideal, Ideal, IdealOp};
use crate::invariants::{
    cm_defect, grade_of_ideal_on_module, local_profile_by_localization, ExtPattern, LocalProfile, MonomialPrime, PrimeSpec,
};
use crate::par;
use crate::resolution::PresentedModule;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PropertyKind {
    Sn,
    Cn,
    Cnl,
    Snl,
    AlmostCm,
    CmdLeL,
}

impl fmt::Display for PropertyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PropertyKind::Sn => "Sn",
            PropertyKind::Cn => "Cn",
            PropertyKind::Cnl => "Cnl",
            PropertyKind::Snl => "Snl",
            PropertyKind::AlmostCm => "acm",
            PropertyKind::CmdLeL => "cmd_le_l",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PropertyQuery {
    pub kind: PropertyKind,
    pub n: Option<u32>,
    pub l: Option<u32>,
}

/// The inequality a query imposes at each prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Condition {
    /// `depth >= min(dim, n) - l`.
    C { n: i64, l: i64 },
    /// `depth >= min(dim, n - l)`, vacuous when `n < l`.
    S { n: i64, l: i64 },
    /// `cmd <= l`.
    Defect { l: i64 },
}

impl PropertyQuery {
    pub fn sn(n: u32) -> Self {
        PropertyQuery { kind: PropertyKind::Sn, n: Some(n), l: None }
    }

    pub fn cn(n: u32) -> Self {
        PropertyQuery { kind: PropertyKind::Cn, n: Some(n), l: None }
    }

    pub fn cnl(n: u32, l: u32) -> Self {
        PropertyQuery { kind: PropertyKind::Cnl, n: Some(n), l: Some(l) }
    }

    pub fn snl(n: u32, l: u32) -> Self {
        PropertyQuery { kind: PropertyKind::Snl, n: Some(n), l: Some(l) }
    }

    pub fn almost_cm() -> Self {
        PropertyQuery { kind: PropertyKind::AlmostCm, n: None, l: Some(1) }
    }

    pub fn cmd_le(l: u32) -> Self {
        PropertyQuery { kind: PropertyKind::CmdLeL, n: None, l: Some(l) }
    }

    /// Checks that the parameters the kind needs are present.
    pub fn validate(&self) -> Result<()> {
        let need_n = matches!(self.kind, PropertyKind::Sn | PropertyKind::Cn | PropertyKind::Cnl | PropertyKind::Snl);
        let need_l = matches!(self.kind, PropertyKind::Cnl | PropertyKind::Snl | PropertyKind::CmdLeL);
        if need_n && self.n.is_none() {
            return Err(Error::OutOfRange(format!("{} needs n", self.kind)));
        }
        if need_l && self.l.is_none() {
            return Err(Error::OutOfRange(format!("{} needs l", self.kind)));
        }
        Ok(())
    }

    fn condition(&self) -> Condition {
        let n = self.n.unwrap_or(0) as i64;
        let l = self.l.unwrap_or(0) as i64;
        match self.kind {
            PropertyKind::Sn => Condition::C { n, l: 0 },
            PropertyKind::Cn => Condition::C { n, l: 1 },
            PropertyKind::Cnl => Condition::C { n, l },
            PropertyKind::Snl => Condition::S { n, l },
            PropertyKind::AlmostCm => Condition::Defect { l: 1 },
            PropertyKind::CmdLeL => Condition::Defect { l },
        }
    }

    /// The defining inequality at one prime (primes outside the support
    /// always pass, since their depth is infinite).
    pub fn holds_at(&self, p: &LocalProfile) -> bool {
        if !p.in_support {
            return true;
        }
        let (dim, depth) = (p.dim_local.expect_finite("dim"), p.depth_local.expect_finite("depth"));
        match self.condition() {
            Condition::C { n, l } => depth >= dim.min(n) - l,
            Condition::S { n, l } => n < l || depth >= dim.min(n - l),
            Condition::Defect { l } => dim - depth <= l,
        }
    }
}

impl fmt::Display for PropertyQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        if let Some(n) = self.n {
            write!(f, " n={n}")?;
        }
        if let Some(l) = self.l {
            write!(f, " l={l}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Answer::Yes => "yes",
            Answer::No => "no",
            Answer::Unknown => "unknown",
        })
    }
}

/// How a `yes` was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Chain {
    Exhaustive,
    CmdBound,
    SnlImpliesCnl,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyVerdict {
    pub property: PropertyKind,
    pub n: Option<u32>,
    pub l: Option<u32>,
    pub answer: Answer,
    pub chain: Option<Chain>,
    pub certificate_prime: Option<String>,
    pub profile: Option<LocalProfile>,
    pub justification: String,
}

impl PropertyVerdict {
    fn new(q: &PropertyQuery, answer: Answer, chain: Option<Chain>, witness: Option<LocalProfile>, justification: String) -> Self {
        PropertyVerdict {
            property: q.kind,
            n: q.n,
            l: q.l,
            answer,
            chain,
            certificate_prime: witness.as_ref().map(|p| p.prime.clone()),
            profile: witness,
            justification,
        }
    }

    /// A `no` certificate really violates the inequality.
    pub fn certificate_is_valid(&self) -> bool {
        let q = PropertyQuery { kind: self.property, n: self.n, l: self.l };
        match (self.answer, &self.profile) {
            (Answer::No, Some(p)) => !q.holds_at(p),
            (Answer::No, None) => false,
            _ => true,
        }
    }
}

/// One profile per monomial prime, in report order.
pub fn exhaustive_monomial_report(m: &PresentedModule) -> Result<Vec<LocalProfile>> {
    if !m.is_monomial() {
        return Err(Error::NotMonomial(m.label().unwrap_or("module").to_string()));
    }
    let primes = MonomialPrime::all(m.ring().nvars());
    par::map_ordered(&primes, |p| local_profile_by_localization(m, p)).into_iter().collect()
}

/// Decides a query from a complete set of monomial profiles. The witness of
/// a failure is the last violating prime in report order.
pub fn decide_from_profiles(profiles: &[LocalProfile], q: &PropertyQuery) -> PropertyVerdict {
    match profiles.iter().rev().find(|p| !q.holds_at(p)) {
        Some(w) => PropertyVerdict::new(
            q,
            Answer::No,
            None,
            Some(w.clone()),
            format!("exhaustive over {} monomial primes; last violating prime reported", profiles.len()),
        ),
        None => PropertyVerdict::new(
            q,
            Answer::Yes,
            Some(Chain::Exhaustive),
            None,
            format!("exhaustive over {} monomial primes", profiles.len()),
        ),
    }
}

pub fn check_condition(m: &PresentedModule, q: &PropertyQuery) -> Result<PropertyVerdict> {
    q.validate()?;
    if m.is_monomial() {
        let profiles = exhaustive_monomial_report(m)?;
        return Ok(decide_from_profiles(&profiles, q));
    }
    Ok(check_condition_general(m, q))
}

/// `cmd(M) <= 1`.
pub fn almost_cm(m: &PresentedModule) -> bool {
    cm_defect(m) <= 1
}

/// Least `l` with `(C_n^l)`: the largest `min(dim_p, n) - depth_p` over the
/// support, and 0 if that is negative.
pub fn minimal_defect_level(m: &PresentedModule, n: u32) -> Result<u32> {
    let profiles = exhaustive_monomial_report(m)?;
    Ok(minimal_defect_level_from(&profiles, n))
}

pub fn minimal_defect_level_from(profiles: &[LocalProfile], n: u32) -> u32 {
    profiles
        .iter()
        .filter(|p| p.in_support)
        .map(|p| {
            let (d, e) = (p.dim_local.expect_finite("dim"), p.depth_local.expect_finite("depth"));
            (d.min(n as i64) - e).max(0) as u32
        })
        .max()
        .unwrap_or(0)
}

/// Exact `(S_k)` test from the Ext supports: `(S_k)` fails exactly when
/// some prime contains the supports `I_j` and `I_i` (`j < i`) and has height
/// below `i + k`, i.e. when `dim R/(I_i + I_j) > m - i - k`.
pub fn schenzel_sk(pattern: &ExtPattern, nvars: usize, k: i64) -> bool {
    let s = pattern.supports();
    for i in 0..s.len() {
        let Some(ii) = &s[i] else { continue };
        for sj in s.iter().take(i) {
            let Some(ij) = sj else { continue };
            let sum = ideal_combine(ii, ij, IdealOp::Sum).unwrap();
            if let ExtendedInt::Finite(d) = krull_dimension_ideal(&sum) {
                if d > nvars as i64 - i as i64 - k {
                    return false;
                }
            }
        }
    }
    true
}

/// Ideals on which a failure must show up, with the reasoning behind it.
#[derive(Debug, Clone)]
pub struct WitnessSet {
    pub ideals: Vec<Ideal>,
    pub justification: String,
}

const WITNESS_JUSTIFICATION: &str = "with c(p) the least and s(p) the largest i such that p contains the support of \
Ext^i(M,R), the slack ht p - s(p) - min(ht p - c(p), n) + l is non-decreasing in ht p and non-increasing as c \
decreases or s increases, so any violating prime forces a violation at a prime minimal over some pairwise sum";

pub fn witness_set(m: &PresentedModule) -> WitnessSet {
    witness_set_from(m, &ExtPattern::new(m))
}

fn witness_set_from(m: &PresentedModule, pattern: &ExtPattern) -> WitnessSet {
    let ring = m.ring();
    let s = pattern.supports();
    let mut ideals: Vec<Ideal> = Vec::new();
    let mut sums = Vec::new();
    for i in 0..s.len() {
        for j in i..s.len() {
            if let (Some(a), Some(b)) = (&s[i], &s[j]) {
                sums.push(ideal_combine(a, b, IdealOp::Sum).unwrap());
            }
        }
    }
    ideals.extend(sums.iter().cloned());
    if m.is_monomial() {
        let mut seen = Vec::new();
        for sum in &sums {
            for p in minimal_monomial_primes(sum, ring.nvars()) {
                if !seen.contains(&p) {
                    seen.push(p);
                    ideals.push(p.ideal(ring));
                }
            }
        }
    }
    WitnessSet { ideals, justification: WITNESS_JUSTIFICATION.to_string() }
}

/// Minimal monomial primes containing `ideal`, in report order.
pub fn minimal_monomial_primes(ideal: &Ideal, nvars: usize) -> Vec<MonomialPrime> {
    let containing: Vec<MonomialPrime> = MonomialPrime::all(nvars).into_iter().filter(|p| p.contains_ideal(ideal)).collect();
    containing
        .iter()
        .filter(|p| !containing.iter().any(|q| q != *p && q.mask() & p.mask() == q.mask()))
        .copied()
        .collect()
}

/// A witness ideal usable as a certificate: generated by linear forms
/// (hence prime) and proper.
fn as_prime(ideal: &Ideal, nvars: usize) -> Option<PrimeSpec> {
    if ideal.is_improper() {
        return None;
    }
    let gb = ideal.groebner_basis().elements().to_vec();
    if !gb.iter().all(|g| g.is_homogeneous() && g.degree() == Some(1)) {
        return None;
    }
    if gb.iter().all(|g| g.is_term()) {
        let mask = gb.iter().fold(0u64, |acc, g| acc | g.support_mask());
        return Some(PrimeSpec::Monomial(MonomialPrime::new(mask, nvars)));
    }
    Some(PrimeSpec::Ideal(Ideal::new(ideal.ring(), gb).unwrap()))
}

/// The three-valued checker used for non-monomial modules.
pub fn check_condition_general(m: &PresentedModule, q: &PropertyQuery) -> PropertyVerdict {
    let cmd = cm_defect(m);
    let nvars = m.ring().nvars();
    if let Condition::Defect { l } = q.condition() {
        let answer = if cmd <= l { Answer::Yes } else { Answer::No };
        let witness = (answer == Answer::No).then(|| {
            let pattern = ExtPattern::new(m);
            pattern.profile(&PrimeSpec::Monomial(MonomialPrime::irrelevant(nvars)), m.ring()).unwrap()
        });
        let chain = (answer == Answer::Yes).then_some(Chain::CmdBound);
        return PropertyVerdict::new(q, answer, chain, witness, format!("graded defect at the irrelevant ideal is {cmd}"));
    }
    let (bound_l, k) = match q.condition() {
        Condition::C { n, l } => (l, n - l),
        Condition::S { n, l } => (0, n - l),
        Condition::Defect { .. } => unreachable!(),
    };
    if cmd <= bound_l {
        return PropertyVerdict::new(q, Answer::Yes, Some(Chain::CmdBound), None, format!("cmd(M) = {cmd} <= {bound_l}"));
    }
    let pattern = ExtPattern::new(m);
    if k <= 0 || schenzel_sk(&pattern, nvars, k) {
        return PropertyVerdict::new(
            q,
            Answer::Yes,
            Some(Chain::SnlImpliesCnl),
            None,
            format!("Ext supports satisfy the (S_{k}) test, and (S_{{n-l}}) implies the queried condition"),
        );
    }
    let ws = witness_set_from(m, &pattern);
    let mut last_violation: Option<LocalProfile> = None;
    for ideal in &ws.ideals {
        let Some(prime) = as_prime(ideal, nvars) else { continue };
        let Ok(profile) = pattern.profile(&prime, m.ring()) else { continue };
        if !q.holds_at(&profile) {
            last_violation = Some(profile);
        }
    }
    match last_violation {
        Some(w) => PropertyVerdict::new(q, Answer::No, None, Some(w), format!("witness-set prime violates; {}", ws.justification)),
        None => PropertyVerdict::new(
            q,
            Answer::Unknown,
            None,
            None,
            "no sufficient criterion applies and no witness-set ideal is a recognisable violating prime".to_string(),
        ),
    }
}

/// `grade(p, M)` for each profiled monomial prime in the support (`+inf`
/// elsewhere).
pub fn monomial_prime_grades(m: &PresentedModule, profiles: &[LocalProfile]) -> Result<Vec<ExtendedInt>> {
    let ring = m.ring();
    par::map_ordered(profiles, |p| {
        if !p.in_support {
            return Ok(ExtendedInt::PosInfinity);
        }
        let prime = p.monomial_prime.ok_or_else(|| Error::OutOfRange(format!("{} is not a monomial prime", p.prime)))?;
        grade_of_ideal_on_module(&prime.ideal(ring), m)
    })
    .into_iter()
    .collect()
}

/// Grade form of `(C_n^l)`: `grade(p, M) >= min(n, dim M_p) - l` at every
/// monomial prime in the support.
pub fn grade_verdict(profiles: &[LocalProfile], grades: &[ExtendedInt], n: u32, l: u32) -> bool {
    profiles.iter().zip(grades).filter(|(p, _)| p.in_support).all(|(p, g)| {
        *g >= ExtendedInt::Finite(p.dim_local.expect_finite("dim").min(n as i64) - l as i64)
    })
}

pub fn check_by_grade(m: &PresentedModule, profiles: &[LocalProfile], n: u32, l: u32) -> Result<bool> {
    Ok(grade_verdict(profiles, &monomial_prime_grades(m, profiles)?, n, l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial_list, PolyRing};
    use std::sync::Arc;

    fn cyclic(r: &Arc<PolyRing>, gens: &str) -> PresentedModule {
        PresentedModule::cyclic(&Ideal::new(r, parse_polynomial_list(gens, r).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn line_and_plane() {
        let r = PolyRing::rational(&["x", "y", "z"]);
        let m = cyclic(&r, "x*y, x*z");
        assert_eq!(check_condition(&m, &PropertyQuery::sn(1)).unwrap().answer, Answer::Yes);
        let v = check_condition(&m, &PropertyQuery::sn(2)).unwrap();
        assert_eq!(v.answer, Answer::No);
        assert_eq!(v.certificate_prime.as_deref(), Some("(x,y,z)"));
        assert!(v.certificate_is_valid());
        assert!(almost_cm(&m));
    }

    #[test]
    fn general_path_agrees_on_small_example() {
        let r = PolyRing::rational(&["x", "y", "z"]);
        let m = cyclic(&r, "x*y, x*z");
        let exact = check_condition(&m, &PropertyQuery::sn(2)).unwrap();
        let general = check_condition_general(&m, &PropertyQuery::sn(2));
        assert_eq!(general.answer, exact.answer);
        assert!(general.certificate_is_valid());
        let ws = witness_set(&m);
        assert!(ws.ideals.iter().any(|i| i.generators().len() == 3 && MonomialPrime::irrelevant(3).contains_ideal(i)));
    }

    #[test]
    fn zero_module_has_empty_witness_set() {
        let r = PolyRing::rational(&["x", "y"]);
        let m = cyclic(&r, "1");
        assert!(witness_set(&m).ideals.is_empty());
        let report = exhaustive_monomial_report(&m).unwrap();
        assert!(report.iter().all(|p| !p.in_support));
    }

    #[test]
    fn vacuous_snl_below_l() {
        let p = LocalProfile {
            prime: "(x)".into(),
            monomial_prime: None,
            height: 1.into(),
            dim_local: 5.into(),
            depth_local: 0.into(),
            cmd_local: 5.into(),
            in_support: true,
        };
        assert!(PropertyQuery::snl(1, 2).holds_at(&p));
        assert!(!PropertyQuery::snl(3, 2).holds_at(&p));
    }

    #[test]
    fn excm_witness_and_levels() {
        let m = crate::corpus::example_excm(1, 2).unwrap();
        let v = check_condition(&m, &PropertyQuery::cnl(3, 1)).unwrap();
        assert_eq!(v.answer, Answer::No);
        assert_eq!(v.certificate_prime.as_deref(), Some("(X0,X1,X2,T1)"));
        assert_eq!(minimal_defect_level(&m, 3).unwrap(), 2);
        assert_eq!(minimal_defect_level(&m, 5).unwrap(), 2);
        assert_eq!(minimal_defect_level(&m, 2).unwrap(), 2);
        assert_eq!(minimal_defect_level(&m, 1).unwrap(), 1);
        let p = MonomialPrime::from_indices(&[0, 1, 2], 4);
        let prof = local_profile_by_localization(&m, &p).unwrap();
        assert_eq!((prof.height, prof.dim_local, prof.depth_local), (3.into(), 2.into(), 0.into()));
        assert!(!almost_cm(&m));
        let g = check_condition_general(&m, &PropertyQuery::cnl(3, 1));
        assert_eq!(g.answer, Answer::No);
        assert!(g.certificate_is_valid());
    }

    #[test]
    fn cm_module_level_zero() {
        let r = PolyRing::rational(&["x", "y"]);
        let m = cyclic(&r, "x^2");
        for n in 0..4 {
            assert_eq!(minimal_defect_level(&m, n).unwrap(), 0);
        }
        assert_eq!(check_condition_general(&m, &PropertyQuery::sn(3)).chain, Some(Chain::CmdBound));
    }
}
