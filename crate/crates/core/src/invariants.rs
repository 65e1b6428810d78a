//! Dimension, depth, Cohen-Macaulay defect, Ext, grade and local profiles.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extint::ExtendedInt;
use crate::groebner::engine::{vector_degree, Ctx, Term, Vector};
use crate::groebner::{ideal_combine, krull_dimension_ideal, Ideal, IdealOp};
use crate::poly::{Monomial, PolyRing, Polynomial};
use crate::resolution::linalg::{self, column_to_vector, top_ctx, vector_to_column};
use crate::resolution::{GradedFreeModule, ModuleMap, PresentedModule, Resolution};

/// The prime `(x_i : i in S)`, stored as a bit mask over the variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MonomialPrime {
    mask: u64,
    nvars: usize,
}

impl MonomialPrime {
    pub fn new(mask: u64, nvars: usize) -> Self {
        assert!(nvars <= 63 && mask >> nvars == 0, "mask outside the ring");
        MonomialPrime { mask, nvars }
    }

    pub fn from_indices(indices: &[usize], nvars: usize) -> Self {
        Self::new(indices.iter().fold(0, |m, &i| m | (1 << i)), nvars)
    }

    pub fn irrelevant(nvars: usize) -> Self {
        Self::new((1u64 << nvars) - 1, nvars)
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn indices(&self) -> Vec<usize> {
        (0..self.nvars).filter(|i| self.mask & (1 << i) != 0).collect()
    }

    pub fn height(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn ideal(&self, ring: &Arc<PolyRing>) -> Ideal {
        Ideal::monomial_prime(ring, self.mask)
    }

    /// `f` lies in the prime: every term involves a variable of `S`.
    pub fn contains(&self, f: &Polynomial) -> bool {
        f.terms().iter().all(|(m, _)| m.support_mask() & self.mask != 0)
    }

    pub fn contains_ideal(&self, ideal: &Ideal) -> bool {
        ideal.generators().iter().all(|g| self.contains(g))
    }

    pub fn render(&self, ring: &PolyRing) -> String {
        let names: Vec<&str> = self.indices().into_iter().map(|i| ring.variables()[i].as_str()).collect();
        format!("({})", names.join(","))
    }

    /// All `2^m` monomial primes, by size and then lexicographically.
    pub fn all(nvars: usize) -> Vec<MonomialPrime> {
        let mut out: Vec<MonomialPrime> = (0..(1u64 << nvars)).map(|m| MonomialPrime::new(m, nvars)).collect();
        out.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.indices().cmp(&b.indices())));
        out
    }
}

/// A prime to localize at: a monomial prime or a caller-supplied ideal.
#[derive(Debug, Clone)]
pub enum PrimeSpec {
    Monomial(MonomialPrime),
    Ideal(Ideal),
}

impl PrimeSpec {
    pub fn render(&self, ring: &PolyRing) -> String {
        match self {
            PrimeSpec::Monomial(p) => p.render(ring),
            PrimeSpec::Ideal(i) => i.to_string(),
        }
    }

    fn contains_ideal(&self, ideal: &Ideal) -> bool {
        match self {
            PrimeSpec::Monomial(p) => p.contains_ideal(ideal),
            PrimeSpec::Ideal(q) => q.contains_ideal(ideal),
        }
    }

    fn height(&self, nvars: usize) -> Result<i64> {
        match self {
            PrimeSpec::Monomial(p) => Ok(p.height() as i64),
            PrimeSpec::Ideal(q) => match krull_dimension_ideal(q) {
                ExtendedInt::Finite(d) => Ok(nvars as i64 - d),
                _ => Err(Error::ImproperIdeal),
            },
        }
    }
}

/// Height, dimension, depth and defect of `M_p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalProfile {
    pub prime: String,
    pub monomial_prime: Option<MonomialPrime>,
    pub height: ExtendedInt,
    pub dim_local: ExtendedInt,
    pub depth_local: ExtendedInt,
    pub cmd_local: ExtendedInt,
    pub in_support: bool,
}

impl LocalProfile {
    fn outside(prime: String, monomial_prime: Option<MonomialPrime>, height: i64) -> Self {
        LocalProfile {
            prime,
            monomial_prime,
            height: ExtendedInt::Finite(height),
            dim_local: ExtendedInt::NegInfinity,
            depth_local: ExtendedInt::PosInfinity,
            cmd_local: ExtendedInt::Finite(0),
            in_support: false,
        }
    }

    fn inside(prime: String, monomial_prime: Option<MonomialPrime>, height: i64, dim: i64, depth: i64) -> Self {
        LocalProfile {
            prime,
            monomial_prime,
            height: ExtendedInt::Finite(height),
            dim_local: ExtendedInt::Finite(dim),
            depth_local: ExtendedInt::Finite(depth),
            cmd_local: ExtendedInt::Finite(dim - depth),
            in_support: true,
        }
    }

    /// The same numbers (ignoring how the prime is labelled).
    pub fn same_numbers(&self, other: &LocalProfile) -> bool {
        (self.height, self.dim_local, self.depth_local, self.cmd_local, self.in_support)
            == (other.height, other.dim_local, other.depth_local, other.cmd_local, other.in_support)
    }
}

impl fmt::Display for LocalProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: ht {} dim {} depth {} cmd {}{}",
            self.prime,
            self.height,
            self.dim_local,
            self.depth_local,
            self.cmd_local,
            if self.in_support { "" } else { " (not in support)" }
        )
    }
}

/// Ideal of maximal minors of a presentation with `rank F_0` rows.
pub fn fitting_support_ideal(m: &PresentedModule) -> Ideal {
    let m = m.minimal_presentation();
    let ring = m.ring();
    let phi = m.presentation();
    let r = phi.target().rank();
    let k = phi.source().rank();
    if r == 0 {
        return Ideal::unit(ring);
    }
    if k < r {
        return Ideal::zero(ring);
    }
    let mut gens = Vec::new();
    for cols in combinations(k, r) {
        let sub: Vec<Vec<Polynomial>> = (0..r).map(|i| cols.iter().map(|&j| phi.entry(i, j).clone()).collect()).collect();
        let d = determinant(ring, &sub);
        if !d.is_zero() {
            gens.push(d.monic());
        }
    }
    gens.dedup();
    Ideal::new(ring, gens).unwrap()
}

const MINOR_BUDGET: u128 = 256;

/// An ideal with the same radical as the annihilator: `Fitt_0` when the
/// number of maximal minors is small, the annihilator itself otherwise.
pub fn support_ideal(m: &PresentedModule) -> Ideal {
    let m = m.minimal_presentation();
    let r = m.presentation().target().rank();
    let k = m.presentation().source().rank();
    if r <= 1 || k < r || (r <= 4 && binomial(k, r) <= MINOR_BUDGET) {
        fitting_support_ideal(&m)
    } else {
        annihilator(&m)
    }
}

/// `ann(M)`, the intersection of the annihilators of the generators.
pub fn annihilator(m: &PresentedModule) -> Ideal {
    let ring = m.ring().clone();
    let phi = m.presentation();
    let f0 = phi.target().degrees().to_vec();
    let ctx = m.ctx();
    let rels = phi.column_vectors(&ctx);
    let nvars = ring.nvars();
    let mut acc: Option<Ideal> = None;
    for j in 0..f0.len() {
        let mut cols = vec![vec![Term { mon: Monomial::one(nvars), comp: j, coef: ring.field().one() }]];
        cols.extend(rels.iter().cloned());
        let mut src = vec![f0[j]];
        src.extend_from_slice(phi.source().degrees());
        let syz = linalg::kernel(nvars, ring.field(), ring.order(), &cols, &f0, &src);
        let gens: Vec<Polynomial> = syz
            .iter()
            .map(|v| {
                let terms = v.iter().filter(|t| t.comp == 0).map(|t| (t.mon.clone(), t.coef.clone())).collect();
                Polynomial::from_terms(&ring, terms)
            })
            .filter(|p| !p.is_zero())
            .collect();
        let ann = Ideal::new(&ring, gens).unwrap();
        acc = Some(match acc {
            None => ann,
            Some(a) => ideal_combine(&a, &ann, IdealOp::Intersection).unwrap(),
        });
    }
    acc.unwrap_or_else(|| Ideal::unit(&ring))
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Laplace expansion along the first row.
fn determinant(ring: &Arc<PolyRing>, a: &[Vec<Polynomial>]) -> Polynomial {
    let n = a.len();
    if n == 0 {
        return Polynomial::one(ring);
    }
    if n == 1 {
        return a[0][0].clone();
    }
    let mut acc = Polynomial::zero(ring);
    for j in 0..n {
        if a[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> =
            a[1..].iter().map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, p)| p.clone()).collect()).collect();
        let term = a[0][j].mul(&determinant(ring, &minor));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

pub fn module_dimension(m: &PresentedModule) -> ExtendedInt {
    krull_dimension_ideal(&support_ideal(m))
}

/// Depth at the irrelevant ideal, `m - pd(M)`; `+inf` for the zero module.
pub fn module_depth_graded(m: &PresentedModule) -> ExtendedInt {
    match m.resolution().length() {
        ExtendedInt::Finite(pd) => ExtendedInt::Finite(m.ring().nvars() as i64 - pd),
        _ => ExtendedInt::PosInfinity,
    }
}

pub fn cm_defect(m: &PresentedModule) -> i64 {
    match (module_dimension(m), module_depth_graded(m)) {
        (ExtendedInt::Finite(d), ExtendedInt::Finite(e)) => d - e,
        _ => 0,
    }
}

/// Summary of the graded invariants of a module.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlobalInvariants {
    pub dim: ExtendedInt,
    pub depth: ExtendedInt,
    pub cmd: i64,
    pub projective_dimension: ExtendedInt,
}

pub fn global_invariants(m: &PresentedModule) -> GlobalInvariants {
    let dim = module_dimension(m);
    let depth = module_depth_graded(m);
    let cmd = match (dim, depth) {
        (ExtendedInt::Finite(d), ExtendedInt::Finite(e)) => d - e,
        _ => 0,
    };
    GlobalInvariants { dim, depth, cmd, projective_dimension: m.resolution().length() }
}

/// Cycles and boundaries of `Hom(F, N)` at position `i`, as submodules of
/// `Hom(F_i, G_0)` where `N = coker(G_1 -> G_0)`.
struct HomSubquotient {
    ambient: Vec<i64>,
    cycles: Vec<Vector>,
    boundaries: Vec<Vector>,
}

fn hom_degrees(f: &[i64], g: &[i64]) -> Vec<i64> {
    f.iter().flat_map(|&a| g.iter().map(move |&b| b - a)).collect()
}

fn hom_subquotient(res: &Resolution, i: usize, n: &PresentedModule) -> HomSubquotient {
    let ring = n.ring();
    let ctx = top_ctx(ring.field(), ring.order());
    let nvars = ring.nvars();
    let psi = n.presentation();
    let g0 = psi.target().degrees();
    let g1 = psi.source().degrees();
    let fdeg = |k: usize| res.modules().get(k).map_or(&[][..], |f| f.degrees());
    let ambient = hom_degrees(fdeg(i), g0);
    let width = g0.len();

    // delta_k : Hom(F_k, G_0) -> Hom(F_{k+1}, G_0), column (a, b) -> sum_c phi[a][c] (c, b).
    let delta = |k: usize| -> Vec<Vector> {
        let phi = &res.maps()[k];
        let mut cols = Vec::new();
        for a in 0..phi.target().rank() {
            for b in 0..width {
                let mut terms = Vec::new();
                for c in 0..phi.source().rank() {
                    for (m, coef) in phi.entry(a, c).terms() {
                        terms.push(Term { mon: m.clone(), comp: c * width + b, coef: coef.clone() });
                    }
                }
                cols.push(ctx.normalize(terms));
            }
        }
        cols
    };
    // Relations of N in each summand of Hom(F_k, G_0).
    let relations = |k: usize| -> (Vec<Vector>, Vec<i64>) {
        let mut cols = Vec::new();
        let mut degs = Vec::new();
        for (a, &fa) in fdeg(k).iter().enumerate() {
            for (l, &gl) in g1.iter().enumerate() {
                let col: Vec<Polynomial> = psi.column(l);
                cols.push(linalg::shift_components(&column_to_vector(&ctx, &col), a * width));
                degs.push(gl - fa);
            }
        }
        (cols, degs)
    };

    let cycles = if i + 1 < res.modules().len() {
        let mut cols = delta(i);
        let mut src = ambient.clone();
        let (rel, rel_deg) = relations(i + 1);
        let split = cols.len();
        cols.extend(rel);
        src.extend(rel_deg);
        let target = hom_degrees(fdeg(i + 1), g0);
        linalg::kernel(nvars, ring.field(), ring.order(), &cols, &target, &src)
            .into_iter()
            .map(|v| v.into_iter().filter(|t| t.comp < split).collect::<Vector>())
            .filter(|v| !v.is_empty())
            .collect()
    } else {
        (0..ambient.len()).map(|c| vec![Term { mon: Monomial::one(nvars), comp: c, coef: ring.field().one() }]).collect()
    };
    let mut boundaries = if i >= 1 { delta(i - 1) } else { Vec::new() };
    boundaries.extend(relations(i).0);
    boundaries.retain(|v| !v.is_empty());
    HomSubquotient { ambient, cycles, boundaries }
}

impl HomSubquotient {
    fn is_zero(&self, ctx: &Ctx) -> bool {
        let basis = linalg::submodule_basis(ctx, &self.boundaries, &self.ambient);
        self.cycles.iter().all(|z| linalg::in_submodule(ctx, &basis, z))
    }

    fn present(&self, ring: &Arc<PolyRing>) -> PresentedModule {
        let ctx = top_ctx(ring.field(), ring.order());
        let zdeg: Vec<i64> = self.cycles.iter().map(|z| vector_degree(z, &self.ambient).unwrap()).collect();
        let mut cols = self.cycles.clone();
        cols.extend(self.boundaries.iter().cloned());
        let mut src = zdeg.clone();
        src.extend(self.boundaries.iter().map(|b| vector_degree(b, &self.ambient).unwrap()));
        let a = self.cycles.len();
        let rels: Vec<Vector> = linalg::kernel(ring.nvars(), ring.field(), ring.order(), &cols, &self.ambient, &src)
            .into_iter()
            .map(|v| ctx.normalize(v.into_iter().filter(|t| t.comp < a).collect()))
            .filter(|v| !v.is_empty())
            .collect();
        let rel_deg: Vec<i64> = rels.iter().map(|v| vector_degree(v, &zdeg).unwrap()).collect();
        let target = GradedFreeModule::new(ring, zdeg);
        let columns: Vec<Vec<Polynomial>> = rels.iter().map(|v| vector_to_column(ring, v, a)).collect();
        let matrix = (0..a).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
        let map = ModuleMap::new(GradedFreeModule::new(ring, rel_deg), target, matrix).expect("homogeneous subquotient");
        PresentedModule::new(map).minimal_presentation()
    }
}

/// `Ext^i(M, N)` as a presented module.
pub fn ext_module(m: &PresentedModule, i: usize, target: &PresentedModule) -> Result<PresentedModule> {
    if !PolyRing::same(m.ring(), target.ring()) {
        return Err(Error::MixedRings);
    }
    let res = m.resolution();
    let ring = m.ring();
    if i >= res.modules().len() || res.modules()[0].rank() == 0 {
        return Ok(PresentedModule::free(GradedFreeModule::new(ring, vec![])));
    }
    Ok(hom_subquotient(&res, i, target).present(ring))
}

/// `R` as a module over itself.
pub fn ring_module(ring: &Arc<PolyRing>) -> PresentedModule {
    PresentedModule::free(GradedFreeModule::free(ring, 1))
}

fn ext_vanishes(res: &Resolution, i: usize, n: &PresentedModule) -> bool {
    if i >= res.modules().len() || res.modules()[0].rank() == 0 {
        return true;
    }
    let ring = n.ring();
    hom_subquotient(res, i, n).is_zero(&top_ctx(ring.field(), ring.order()))
}

/// `min { i : Ext^i(R/I, M) != 0 }`, `+inf` if none.
pub fn grade_of_ideal_on_module(ideal: &Ideal, m: &PresentedModule) -> Result<ExtendedInt> {
    if !PolyRing::same(ideal.ring(), m.ring()) {
        return Err(Error::MixedRings);
    }
    if ideal.is_improper() {
        return Err(Error::ImproperIdeal);
    }
    let quotient = PresentedModule::cyclic(ideal)?;
    let res = quotient.resolution();
    for i in 0..res.modules().len() {
        if !ext_vanishes(&res, i, m) {
            return Ok(ExtendedInt::Finite(i as i64));
        }
    }
    Ok(ExtendedInt::PosInfinity)
}

/// Inverts the variables outside `S` (sets them to 1) in a monomial module.
pub fn localize_at_monomial_prime(m: &PresentedModule, prime: &MonomialPrime) -> Result<PresentedModule> {
    if !m.is_monomial() {
        return Err(Error::NotMonomial(m.label().unwrap_or("module").to_string()));
    }
    let ring = m.ring();
    if prime.nvars() != ring.nvars() {
        return Err(Error::Shape("prime and module live in different rings".into()));
    }
    let sub = ring.subring(prime.mask());
    let mut next = 0;
    let images: Vec<Option<usize>> = (0..ring.nvars())
        .map(|i| {
            if prime.mask() & (1 << i) != 0 {
                next += 1;
                Some(next - 1)
            } else {
                None
            }
        })
        .collect();
    let rows: Vec<Vec<Polynomial>> =
        m.presentation().matrix().iter().map(|row| row.iter().map(|p| p.substitute(&sub, &images)).collect()).collect();
    let out = if rows.is_empty() {
        PresentedModule::free(GradedFreeModule::new(&sub, vec![]))
    } else {
        PresentedModule::from_rows(&sub, rows)?
    };
    Ok(out.minimal_presentation())
}

/// Profile at a monomial prime through localization and the graded engine.
pub fn local_profile_by_localization(m: &PresentedModule, prime: &MonomialPrime) -> Result<LocalProfile> {
    let loc = localize_at_monomial_prime(m, prime)?;
    let label = prime.render(m.ring());
    let ht = prime.height() as i64;
    let inv = global_invariants(&loc);
    Ok(match (inv.dim, inv.depth) {
        (ExtendedInt::Finite(d), ExtendedInt::Finite(e)) => LocalProfile::inside(label, Some(*prime), ht, d, e),
        _ => LocalProfile::outside(label, Some(*prime), ht),
    })
}

/// Supports of `Ext^i(M, R)` for `i = 0..=pd M` (`None` where Ext vanishes).
#[derive(Debug, Clone)]
pub struct ExtPattern {
    nvars: usize,
    supports: Vec<Option<Ideal>>,
}

impl ExtPattern {
    pub fn new(m: &PresentedModule) -> Self {
        let ring = m.ring();
        let res = m.resolution();
        let r = ring_module(ring);
        let supports = if res.modules()[0].rank() == 0 {
            Vec::new()
        } else {
            (0..res.modules().len())
                .map(|i| {
                    let e = hom_subquotient(&res, i, &r).present(ring);
                    let s = support_ideal(&e);
                    (!s.is_improper()).then_some(s)
                })
                .collect()
        };
        ExtPattern { nvars: ring.nvars(), supports }
    }

    pub fn supports(&self) -> &[Option<Ideal>] {
        &self.supports
    }

    /// Indices `i` whose Ext support contains the prime.
    fn indices_inside(&self, prime: &PrimeSpec) -> Vec<usize> {
        self.supports
            .iter()
            .enumerate()
            .filter_map(|(i, s)| s.as_ref().filter(|s| prime.contains_ideal(s)).map(|_| i))
            .collect()
    }

    pub fn profile(&self, prime: &PrimeSpec, ring: &PolyRing) -> Result<LocalProfile> {
        let ht = prime.height(self.nvars)?;
        let label = prime.render(ring);
        let mp = match prime {
            PrimeSpec::Monomial(p) => Some(*p),
            PrimeSpec::Ideal(_) => None,
        };
        let inside = self.indices_inside(prime);
        Ok(match (inside.first(), inside.last()) {
            (Some(&c), Some(&s)) => LocalProfile::inside(label, mp, ht, ht - c as i64, ht - s as i64),
            _ => LocalProfile::outside(label, mp, ht),
        })
    }
}

/// Profile of `M_p`: through localization for monomial modules at monomial
/// primes, through the Ext support pattern otherwise.
pub fn local_profile_at_prime(m: &PresentedModule, prime: &PrimeSpec) -> Result<LocalProfile> {
    if let PrimeSpec::Ideal(q) = prime {
        if !PolyRing::same(q.ring(), m.ring()) {
            return Err(Error::MixedRings);
        }
        if q.is_improper() {
            return Err(Error::ImproperIdeal);
        }
    }
    match prime {
        PrimeSpec::Monomial(p) if m.is_monomial() => local_profile_by_localization(m, p),
        _ => ExtPattern::new(m).profile(prime, m.ring()),
    }
}

/// Multiplication by `x` is injective on `M`.
pub fn is_regular_element(x: &Polynomial, m: &PresentedModule) -> Result<bool> {
    if !PolyRing::same(x.ring(), m.ring()) {
        return Err(Error::MixedRings);
    }
    if x.is_zero() {
        return Err(Error::OutOfRange("the zero element is never regular".into()));
    }
    if !x.is_homogeneous() {
        return Err(Error::NotHomogeneous(x.to_string()));
    }
    let ring = m.ring();
    let ctx = m.ctx();
    let phi = m.presentation();
    let f0 = phi.target().degrees();
    let r = f0.len();
    let dx = x.degree().unwrap() as i64;
    let mut cols: Vec<Vector> = (0..r)
        .map(|c| x.terms().iter().map(|(mon, coef)| Term { mon: mon.clone(), comp: c, coef: coef.clone() }).collect())
        .collect();
    let rels = phi.column_vectors(&ctx);
    cols.extend(rels.iter().cloned());
    let mut src: Vec<i64> = f0.iter().map(|d| d - dx).collect();
    src.extend_from_slice(phi.source().degrees());
    let kernel: Vec<Vector> = linalg::kernel(ring.nvars(), ring.field(), ring.order(), &cols, f0, &src)
        .into_iter()
        .map(|v| v.into_iter().filter(|t| t.comp < r).collect::<Vector>())
        .collect();
    let basis = linalg::submodule_basis(&ctx, &rels, f0);
    Ok(kernel.iter().all(|v| linalg::in_submodule(&ctx, &basis, v)))
}

/// `M / xM`, presented by appending `x e_j` to the relations.
pub fn quotient_by_element(m: &PresentedModule, x: &Polynomial) -> Result<PresentedModule> {
    if !x.is_homogeneous() || x.is_zero() {
        return Err(Error::NotHomogeneous(x.to_string()));
    }
    let phi = m.presentation();
    let r = phi.target().rank();
    let mut columns: Vec<Vec<Polynomial>> = (0..phi.source().rank()).map(|j| phi.column(j)).collect();
    for j in 0..r {
        let mut col = vec![Polynomial::zero(m.ring()); r];
        col[j] = x.clone();
        columns.push(col);
    }
    let map = ModuleMap::from_columns(phi.target().clone(), columns)?;
    let mut out = PresentedModule::new(map);
    if let Some(l) = m.label() {
        out = out.with_label(format!("{l}/({x})"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial_list;

    fn cyclic(r: &Arc<PolyRing>, gens: &str) -> PresentedModule {
        PresentedModule::cyclic(&Ideal::new(r, parse_polynomial_list(gens, r).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn fitting_ideals() {
        let r = PolyRing::rational(&["x", "y", "z"]);
        let m = cyclic(&r, "x*y, x*z");
        assert_eq!(fitting_support_ideal(&m).generators().len(), 2);
        let id = PresentedModule::from_rows(&r, vec![
            parse_polynomial_list("1, 0", &r).unwrap(),
            parse_polynomial_list("0, 1", &r).unwrap(),
        ])
        .unwrap();
        assert!(fitting_support_ideal(&id).is_improper());
        let diag = PresentedModule::from_rows(&r, vec![
            parse_polynomial_list("x, 0", &r).unwrap(),
            parse_polynomial_list("0, y", &r).unwrap(),
        ])
        .unwrap();
        let f = fitting_support_ideal(&diag);
        assert_eq!(f.generators(), parse_polynomial_list("x*y", &r).unwrap().as_slice());
    }

    #[test]
    fn global_numbers() {
        let r = PolyRing::rational(&["x", "y", "z"]);
        let m = cyclic(&r, "x*y, x*z");
        assert_eq!(module_dimension(&m), ExtendedInt::Finite(2));
        assert_eq!(module_depth_graded(&m), ExtendedInt::Finite(1));
        assert_eq!(cm_defect(&m), 1);
        let k = cyclic(&r, "x, y, z");
        assert_eq!(module_depth_graded(&k), ExtendedInt::Finite(0));
        assert_eq!(module_depth_graded(&ring_module(&r)), ExtendedInt::Finite(3));
        let zero = cyclic(&r, "1");
        assert_eq!(module_dimension(&zero), ExtendedInt::NegInfinity);
        assert_eq!(module_depth_graded(&zero), ExtendedInt::PosInfinity);
        assert_eq!(cm_defect(&zero), 0);
    }

    #[test]
    fn ext_of_residue_field() {
        let r = PolyRing::rational(&["x", "y", "z"]);
        let k = cyclic(&r, "x, y, z");
        let rr = ring_module(&r);
        for i in 0..3 {
            assert!(ext_module(&k, i, &rr).unwrap().is_zero(), "Ext^{i}(k, R) should vanish");
        }
        let top = ext_module(&k, 3, &rr).unwrap();
        assert_eq!(top.generator_degrees(), &[-3]);
        assert_eq!(module_dimension(&top), ExtendedInt::Finite(0));
    }

    #[test]
    fn ext_supports_of_non_cm_quotient() {
        let r = PolyRing::rational(&["x", "y", "z"]);
        let m = cyclic(&r, "x*y, x*z");
        let rr = ring_module(&r);
        assert!(ext_module(&m, 0, &rr).unwrap().is_zero());
        assert_eq!(module_dimension(&ext_module(&m, 1, &rr).unwrap()), ExtendedInt::Finite(2));
        // Ext^2 is R/(y,z) up to shift: the embedded line, not just the origin.
        let e2 = ext_module(&m, 2, &rr).unwrap();
        assert_eq!(module_dimension(&e2), ExtendedInt::Finite(1));
        let s = support_ideal(&e2);
        assert!(MonomialPrime::from_indices(&[1, 2], 3).contains_ideal(&s));
        assert!(!MonomialPrime::from_indices(&[0, 1], 3).contains_ideal(&s));
        assert!(MonomialPrime::irrelevant(3).contains_ideal(&s));
    }

    #[test]
    fn grades() {
        let r = PolyRing::rational(&["x", "y", "z"]);
        let max = MonomialPrime::irrelevant(3).ideal(&r);
        assert_eq!(grade_of_ideal_on_module(&max, &ring_module(&r)).unwrap(), ExtendedInt::Finite(3));
        let yz = MonomialPrime::from_indices(&[1, 2], 3).ideal(&r);
        assert_eq!(grade_of_ideal_on_module(&yz, &cyclic(&r, "x")).unwrap(), ExtendedInt::Finite(2));
        assert!(matches!(grade_of_ideal_on_module(&Ideal::unit(&r), &ring_module(&r)), Err(Error::ImproperIdeal)));
    }

    #[test]
    fn localization_substitutes_one() {
        let r = PolyRing::rational(&["X", "Y", "Z"]);
        let m = cyclic(&r, "X*Z, Y*Z, Z^2");
        let loc = localize_at_monomial_prime(&m, &MonomialPrime::from_indices(&[0, 2], 3)).unwrap();
        assert_eq!(loc.ring().variables(), &["X".to_string(), "Z".to_string()]);
        let j = loc.cyclic_ideal().unwrap();
        assert_eq!(j.groebner_basis().elements().len(), 1);
        assert_eq!(j.groebner_basis().elements()[0].to_string(), "Z");
    }

    #[test]
    fn profiles_agree_on_both_paths() {
        let r = PolyRing::rational(&["X", "Y", "Z"]);
        let m = cyclic(&r, "X*Z, Y*Z, Z^2");
        let pattern = ExtPattern::new(&m);
        for p in MonomialPrime::all(3) {
            let a = local_profile_by_localization(&m, &p).unwrap();
            let b = pattern.profile(&PrimeSpec::Monomial(p), &r).unwrap();
            assert!(a.same_numbers(&b), "{a} vs {b}");
        }
        let top = local_profile_by_localization(&m, &MonomialPrime::irrelevant(3)).unwrap();
        assert_eq!((top.dim_local, top.depth_local, top.cmd_local), (2.into(), 0.into(), 2.into()));
        let xz = local_profile_by_localization(&m, &MonomialPrime::from_indices(&[0, 2], 3)).unwrap();
        assert_eq!((xz.height, xz.dim_local, xz.depth_local, xz.cmd_local), (2.into(), 1.into(), 1.into(), 0.into()));
    }

    #[test]
    fn regular_elements() {
        let r = PolyRing::rational(&["x", "y", "z"]);
        let m = cyclic(&r, "x*y, x*z");
        let f = parse_polynomial_list("y - x, z, x", &r).unwrap();
        assert!(is_regular_element(&f[0], &m).unwrap());
        assert!(!is_regular_element(&f[1], &m).unwrap());
        assert!(!is_regular_element(&f[2], &m).unwrap());
    }

    #[test]
    fn report_order() {
        let order: Vec<Vec<usize>> = MonomialPrime::all(3).iter().map(|p| p.indices()).collect();
        assert_eq!(order, vec![vec![], vec![0], vec![1], vec![2], vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 1, 2]]);
    }
}
