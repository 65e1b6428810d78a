//! Graded free modules, presented modules and minimal free resolutions.

mod frame;
pub(crate) mod linalg;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extint::ExtendedInt;
use crate::groebner::engine::{Ctx, Term, Vector};
use crate::groebner::Ideal;
use crate::poly::{PolyRing, Polynomial};
use linalg::{column_to_vector, top_ctx, vector_to_column};

/// A free module `R^r` whose basis vectors carry degrees.
///
/// `degrees[i]` is the degree of the `i`-th basis vector; the twist of the
/// summand `R(t)` is `-degrees[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedFreeModule {
    ring: Arc<PolyRing>,
    degrees: Vec<i64>,
}

impl GradedFreeModule {
    pub fn new(ring: &Arc<PolyRing>, degrees: Vec<i64>) -> Self {
        GradedFreeModule { ring: ring.clone(), degrees }
    }

    /// `R(t_1) + ... + R(t_r)`.
    pub fn from_twists(ring: &Arc<PolyRing>, twists: &[i64]) -> Self {
        Self::new(ring, twists.iter().map(|t| -t).collect())
    }

    pub fn free(ring: &Arc<PolyRing>, rank: usize) -> Self {
        Self::new(ring, vec![0; rank])
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn twists(&self) -> Vec<i64> {
        self.degrees.iter().map(|d| -d).collect()
    }

    pub fn dual(&self) -> Self {
        Self::new(&self.ring, self.twists())
    }
}

/// A homogeneous map of graded free modules, stored as a
/// `target.rank() x source.rank()` matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleMap {
    source: GradedFreeModule,
    target: GradedFreeModule,
    matrix: Vec<Vec<Polynomial>>,
}

impl ModuleMap {
    pub fn new(source: GradedFreeModule, target: GradedFreeModule, matrix: Vec<Vec<Polynomial>>) -> Result<Self> {
        if !PolyRing::same(&source.ring, &target.ring) {
            return Err(Error::MixedRings);
        }
        if matrix.len() != target.rank() || matrix.iter().any(|row| row.len() != source.rank()) {
            return Err(Error::Shape(format!("expected a {} x {} matrix", target.rank(), source.rank())));
        }
        for (i, row) in matrix.iter().enumerate() {
            for (j, p) in row.iter().enumerate() {
                if !PolyRing::same(p.ring(), &source.ring) {
                    return Err(Error::MixedRings);
                }
                if p.is_zero() {
                    continue;
                }
                let want = source.degrees[j] - target.degrees[i];
                if !p.is_homogeneous() || p.degree().map(i64::from) != Some(want) {
                    return Err(Error::NotHomogeneous(format!("entry ({i}, {j}) = {p} should have degree {want}")));
                }
            }
        }
        Ok(ModuleMap { source, target, matrix })
    }

    /// Builds a map from its columns, reading each source degree off the
    /// first nonzero entry (zero columns get degree 0).
    pub fn from_columns(target: GradedFreeModule, columns: Vec<Vec<Polynomial>>) -> Result<Self> {
        let mut degrees = Vec::with_capacity(columns.len());
        for col in &columns {
            if col.len() != target.rank() {
                return Err(Error::Shape(format!("column of length {} for target of rank {}", col.len(), target.rank())));
            }
            let d = col
                .iter()
                .enumerate()
                .find(|(_, p)| !p.is_zero())
                .map(|(i, p)| target.degrees[i] + p.degree().unwrap() as i64)
                .unwrap_or(0);
            degrees.push(d);
        }
        let source = GradedFreeModule::new(&target.ring, degrees);
        let matrix = (0..target.rank()).map(|i| columns.iter().map(|c| c[i].clone()).collect()).collect();
        ModuleMap::new(source, target, matrix)
    }

    pub fn zero(source: GradedFreeModule, target: GradedFreeModule) -> Self {
        let matrix = vec![vec![Polynomial::zero(&source.ring); source.rank()]; target.rank()];
        ModuleMap { source, target, matrix }
    }

    pub fn source(&self) -> &GradedFreeModule {
        &self.source
    }

    pub fn target(&self) -> &GradedFreeModule {
        &self.target
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.source.ring
    }

    pub fn matrix(&self) -> &[Vec<Polynomial>] {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.matrix[i][j]
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        self.matrix.iter().map(|row| row[j].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().flatten().all(|p| p.is_zero())
    }

    /// Every entry is zero or a single term.
    pub fn is_monomial(&self) -> bool {
        self.matrix.iter().flatten().all(|p| p.is_zero() || p.is_term())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ModuleMap) -> Result<ModuleMap> {
        if other.target.rank() != self.source.rank() {
            return Err(Error::Shape("maps are not composable".into()));
        }
        let ring = self.ring();
        let matrix = (0..self.target.rank())
            .map(|i| {
                (0..other.source.rank())
                    .map(|j| {
                        (0..self.source.rank()).fold(Polynomial::zero(ring), |acc, k| {
                            acc.add(&self.matrix[i][k].mul(&other.matrix[k][j]))
                        })
                    })
                    .collect()
            })
            .collect();
        Ok(ModuleMap { source: other.source.clone(), target: self.target.clone(), matrix })
    }

    /// `Hom(-, R)` applied to the map.
    pub fn transpose(&self) -> ModuleMap {
        let matrix = (0..self.source.rank()).map(|j| self.column(j)).collect();
        ModuleMap { source: self.target.dual(), target: self.source.dual(), matrix }
    }

    pub(crate) fn column_vectors(&self, ctx: &Ctx) -> Vec<Vector> {
        (0..self.source.rank()).map(|j| column_to_vector(ctx, &self.column(j))).collect()
    }

    pub(crate) fn from_vectors(ring: &Arc<PolyRing>, source_degrees: Vec<i64>, target: GradedFreeModule, cols: &[Vector]) -> ModuleMap {
        let columns: Vec<Vec<Polynomial>> = cols.iter().map(|v| vector_to_column(ring, v, target.rank())).collect();
        let matrix = (0..target.rank()).map(|i| columns.iter().map(|c| c[i].clone()).collect()).collect();
        ModuleMap { source: GradedFreeModule::new(ring, source_degrees), target, matrix }
    }
}

impl fmt::Display for ModuleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .matrix
            .iter()
            .map(|row| format!("[{}]", row.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// The cokernel of a homogeneous map `F_1 -> F_0`.
#[derive(Clone)]
pub struct PresentedModule {
    presentation: ModuleMap,
    label: Option<String>,
    resolution: OnceLock<Arc<Resolution>>,
}

impl PresentedModule {
    pub fn new(presentation: ModuleMap) -> Self {
        PresentedModule { presentation, label: None, resolution: OnceLock::new() }
    }

    /// `R/J` for a homogeneous ideal `J`.
    pub fn cyclic(ideal: &Ideal) -> Result<Self> {
        if !ideal.is_homogeneous() {
            return Err(Error::NotHomogeneous(format!("ideal {ideal}")));
        }
        let target = GradedFreeModule::free(ideal.ring(), 1);
        let columns = ideal.generators().iter().map(|g| vec![g.clone()]).collect();
        Ok(Self::new(ModuleMap::from_columns(target, columns)?))
    }

    /// A free module presented by the zero map.
    pub fn free(module: GradedFreeModule) -> Self {
        let ring = module.ring.clone();
        Self::new(ModuleMap::zero(GradedFreeModule::new(&ring, vec![]), module))
    }

    /// `coker` of a matrix given by rows, inferring a grading that makes it
    /// homogeneous (unconstrained rows get degree 0).
    pub fn from_rows(ring: &Arc<PolyRing>, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let r = rows.len();
        let k = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != k) {
            return Err(Error::Shape("rows have different lengths".into()));
        }
        for p in rows.iter().flatten() {
            if !PolyRing::same(p.ring(), ring) {
                return Err(Error::MixedRings);
            }
            if !p.is_homogeneous() {
                return Err(Error::NotHomogeneous(format!("entry {p}")));
            }
        }
        // Propagate e_j = d_i + deg(a_ij) over the bipartite row/column graph.
        let mut row_deg: Vec<Option<i64>> = vec![None; r];
        let mut col_deg: Vec<Option<i64>> = vec![None; k];
        for start in 0..r {
            if row_deg[start].is_some() {
                continue;
            }
            row_deg[start] = Some(0);
            let mut stack = vec![(true, start)];
            while let Some((is_row, idx)) = stack.pop() {
                if is_row {
                    let d = row_deg[idx].unwrap();
                    for j in 0..k {
                        if let Some(a) = rows[idx][j].degree() {
                            let want = d + a as i64;
                            match col_deg[j] {
                                None => {
                                    col_deg[j] = Some(want);
                                    stack.push((false, j));
                                }
                                Some(e) if e != want => {
                                    return Err(Error::NotHomogeneous(format!("no grading makes column {j} homogeneous")));
                                }
                                _ => {}
                            }
                        }
                    }
                } else {
                    let e = col_deg[idx].unwrap();
                    for i in 0..r {
                        if let Some(a) = rows[i][idx].degree() {
                            let want = e - a as i64;
                            match row_deg[i] {
                                None => {
                                    row_deg[i] = Some(want);
                                    stack.push((true, i));
                                }
                                Some(d) if d != want => {
                                    return Err(Error::NotHomogeneous(format!("no grading makes row {i} homogeneous")));
                                }
                                _ => {}
                            }
                        }
                    }
                }
            }
        }
        let target = GradedFreeModule::new(ring, row_deg.into_iter().map(|d| d.unwrap_or(0)).collect());
        let source = GradedFreeModule::new(ring, col_deg.into_iter().map(|d| d.unwrap_or(0)).collect());
        Ok(Self::new(ModuleMap::new(source, target, rows)?))
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn presentation(&self) -> &ModuleMap {
        &self.presentation
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.presentation.ring()
    }

    pub fn generator_degrees(&self) -> &[i64] {
        self.presentation.target.degrees()
    }

    pub fn is_monomial(&self) -> bool {
        self.presentation.is_monomial()
    }

    /// The ideal `J` when the module is `R/J` (one generator of degree 0).
    pub fn cyclic_ideal(&self) -> Option<Ideal> {
        if self.presentation.target.rank() != 1 || self.presentation.target.degrees[0] != 0 {
            return None;
        }
        Ideal::new(self.ring(), self.presentation.matrix[0].clone()).ok()
    }

    pub(crate) fn ctx(&self) -> Ctx {
        top_ctx(self.ring().field(), self.ring().order())
    }

    /// The image of the presentation is all of `F_0`.
    pub fn is_zero(&self) -> bool {
        let ctx = self.ctx();
        let degrees = self.generator_degrees();
        let basis = linalg::submodule_basis(&ctx, &self.presentation.column_vectors(&ctx), degrees);
        let nvars = self.ring().nvars();
        (0..degrees.len()).all(|c| {
            let e = vec![Term { mon: crate::poly::Monomial::one(nvars), comp: c, coef: ctx.field.one() }];
            linalg::in_submodule(&ctx, &basis, &e)
        })
    }

    /// Minimal free resolution, computed once and cached.
    pub fn resolution(&self) -> Arc<Resolution> {
        self.resolution.get_or_init(|| Arc::new(free_resolution_minimal(self))).clone()
    }

    /// An isomorphic module whose presentation has no unit entries and
    /// minimal relations.
    pub fn minimal_presentation(&self) -> PresentedModule {
        let ring = self.ring().clone();
        let ctx = self.ctx();
        let mut rows = self.presentation.target.degrees.clone();
        let cols = linalg::minimal_generators(&ctx, &self.presentation.column_vectors(&ctx), &rows);
        let mut col_degrees: Vec<i64> =
            cols.iter().map(|v| crate::groebner::engine::vector_degree(v, &rows).unwrap()).collect();
        let mut m: Vec<Vec<Polynomial>> = {
            let columns: Vec<Vec<Polynomial>> = cols.iter().map(|v| vector_to_column(&ring, v, rows.len())).collect();
            (0..rows.len()).map(|i| columns.iter().map(|c| c[i].clone()).collect()).collect()
        };
        while let Some((r, c)) = find_unit(&m) {
            eliminate(&mut m, r, c);
            rows.remove(r);
            col_degrees.remove(c);
        }
        let target = GradedFreeModule::new(&ring, rows);
        let source = GradedFreeModule::new(&ring, col_degrees);
        let mut out = PresentedModule::new(ModuleMap { source, target, matrix: m });
        out.label = self.label.clone();
        out
    }
}

impl fmt::Debug for PresentedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PresentedModule")
            .field("label", &self.label)
            .field("generator_degrees", &self.generator_degrees())
            .field("presentation", &self.presentation.to_string())
            .finish()
    }
}

impl PartialEq for PresentedModule {
    fn eq(&self, other: &Self) -> bool {
        self.presentation == other.presentation && self.label == other.label
    }
}

/// A graded free resolution `F_0 <- F_1 <- ... <- F_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resolution {
    modules: Vec<GradedFreeModule>,
    maps: Vec<ModuleMap>,
    minimal: bool,
}

impl Resolution {
    pub fn modules(&self) -> &[GradedFreeModule] {
        &self.modules
    }

    /// `maps()[i]` is `phi_{i+1} : F_{i+1} -> F_i`.
    pub fn maps(&self) -> &[ModuleMap] {
        &self.maps
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(|m| m.rank()).collect()
    }

    /// Projective dimension; `-inf` when the module is zero.
    pub fn length(&self) -> ExtendedInt {
        if self.modules[0].rank() == 0 {
            ExtendedInt::NegInfinity
        } else {
            ExtendedInt::Finite(self.modules.len() as i64 - 1)
        }
    }

    /// Consecutive maps compose to zero.
    pub fn is_complex(&self) -> bool {
        self.maps.windows(2).all(|w| w[0].compose(&w[1]).map(|c| c.is_zero()).unwrap_or(false))
    }

    /// No entry of any map has a nonzero constant term.
    pub fn has_no_unit_entries(&self) -> bool {
        self.maps.iter().all(|m| m.matrix.iter().flatten().all(|p| !p.is_unit()))
    }

    pub fn betti_table(&self) -> BettiTable {
        let mut entries = BTreeMap::new();
        for (i, f) in self.modules.iter().enumerate() {
            for &d in f.degrees() {
                *entries.entry((i, d)).or_insert(0) += 1;
            }
        }
        BettiTable { entries }
    }
}

/// Graded Betti numbers `beta_{i,j}`: basis vectors of degree `j` in `F_i`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i64), usize>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: i64) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn total(&self, i: usize) -> usize {
        self.entries.iter().filter(|((k, _), _)| *k == i).map(|(_, v)| v).sum()
    }

    /// Nonzero entries as `((i, j), beta_{i,j})`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, i64), usize)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, *v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|((i, j), b)| format!("b[{i},{j}]={b}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// `numerator(t) / (1 - t)^variables`, numerator stored as degree -> coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSeries {
    pub numerator: BTreeMap<i64, i64>,
    pub variables: usize,
}

impl HilbertSeries {
    /// Order of the pole at `t = 1`; `-inf` for the zero series.
    pub fn pole_order(&self) -> ExtendedInt {
        let lo = match self.numerator.keys().next() {
            Some(&d) => d,
            None => return ExtendedInt::NegInfinity,
        };
        let hi = *self.numerator.keys().next_back().unwrap();
        let mut coeffs: Vec<BigInt> = (lo..=hi).map(|d| BigInt::from(self.numerator.get(&d).copied().unwrap_or(0))).collect();
        let mut roots = 0i64;
        // Divide by (t - 1) while 1 is a root.
        while coeffs.iter().sum::<BigInt>() == BigInt::from(0) {
            let mut q = vec![BigInt::from(0); coeffs.len() - 1];
            let mut acc = BigInt::from(0);
            for k in (1..coeffs.len()).rev() {
                acc += &coeffs[k];
                q[k - 1] = acc.clone();
            }
            coeffs = q;
            roots += 1;
        }
        ExtendedInt::Finite(self.variables as i64 - roots)
    }

    /// Coefficients of the Hilbert function in degrees `lo..=hi`.
    pub fn coefficients(&self, lo: i64, hi: i64) -> Vec<BigInt> {
        let m = self.variables as i64;
        (lo..=hi)
            .map(|d| {
                self.numerator
                    .iter()
                    .filter(|(&e, _)| e <= d)
                    .map(|(&e, &c)| binomial(d - e + m - 1, m - 1) * c)
                    .sum()
            })
            .collect()
    }
}

fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k {
        return if k == -1 && n == -1 { BigInt::from(1) } else { BigInt::from(0) };
    }
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (d, c) in &self.numerator {
            let power = match d {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{d}"),
            };
            parts.push(match (c.to_string().as_str(), power.is_empty()) {
                (_, true) => c.to_string(),
                ("1", false) => power,
                ("-1", false) => format!("-{power}"),
                (cs, false) => format!("{cs}*{power}"),
            });
        }
        let num = if parts.is_empty() { "0".to_string() } else { parts.join(" + ").replace("+ -", "- ") };
        if parts.len() <= 1 {
            write!(f, "{num}/(1-t)^{}", self.variables)
        } else {
            write!(f, "({num})/(1-t)^{}", self.variables)
        }
    }
}

/// Kernel of a homogeneous map, as a map onto it.
pub fn syzygy_module(phi: &ModuleMap) -> ModuleMap {
    let ring = phi.ring();
    let ctx = top_ctx(ring.field(), ring.order());
    let cols = phi.column_vectors(&ctx);
    let syz = linalg::kernel(ring.nvars(), ring.field(), ring.order(), &cols, phi.target.degrees(), phi.source.degrees());
    let degrees = syz.iter().map(|v| crate::groebner::engine::vector_degree(v, phi.source.degrees()).unwrap()).collect();
    ModuleMap::from_vectors(ring, degrees, phi.source.clone(), &syz)
}

pub fn free_resolution_minimal(m: &PresentedModule) -> Resolution {
    let ring = m.ring().clone();
    let field = ring.field();
    let ctx0 = frame::base_ctx(field, ring.order());
    let f0 = m.generator_degrees().to_vec();
    let fr = frame::schreyer_frame(&ctx0, &f0, &m.presentation.column_vectors(&ctx0));
    let mut degrees = fr.degrees;
    let mut mats: Vec<Vec<Vec<Polynomial>>> = fr
        .maps
        .iter()
        .enumerate()
        .map(|(k, cols)| {
            let rank = degrees[k].len();
            let columns: Vec<Vec<Polynomial>> = cols.iter().map(|v| vector_to_column(&ring, v, rank)).collect();
            (0..rank).map(|i| columns.iter().map(|c| c[i].clone()).collect()).collect()
        })
        .collect();

    for k in 1..=mats.len() {
        while let Some((r, c)) = find_unit(&mats[k - 1]) {
            eliminate(&mut mats[k - 1], r, c);
            if k >= 2 {
                for row in mats[k - 2].iter_mut() {
                    row.remove(r);
                }
            }
            if k < mats.len() {
                mats[k].remove(c);
            }
            degrees[k - 1].remove(r);
            degrees[k].remove(c);
        }
    }
    while degrees.len() > 1 && degrees.last().unwrap().is_empty() {
        degrees.pop();
        mats.pop();
    }
    if degrees[0].is_empty() {
        degrees.truncate(1);
        mats.clear();
    }

    let modules: Vec<GradedFreeModule> = degrees.into_iter().map(|d| GradedFreeModule::new(&ring, d)).collect();
    let maps = mats
        .into_iter()
        .enumerate()
        .map(|(k, matrix)| ModuleMap { source: modules[k + 1].clone(), target: modules[k].clone(), matrix })
        .collect();
    debug_assert!(modules.len() <= ring.nvars() + 1);
    Resolution { modules, maps, minimal: true }
}

fn find_unit(m: &[Vec<Polynomial>]) -> Option<(usize, usize)> {
    m.iter().enumerate().find_map(|(i, row)| row.iter().position(|p| p.is_unit()).map(|j| (i, j)))
}

/// Splits off the unit entry at `(r, c)`: `D - a u^{-1} b`, dropping row `r`
/// and column `c`.
fn eliminate(m: &mut Vec<Vec<Polynomial>>, r: usize, c: usize) {
    let u = m[r][c].constant_term();
    let field = m[r][c].ring().field();
    let u_inv = field.inv(&u);
    let pivot_row: Vec<Polynomial> = m[r].iter().map(|p| p.scale(&u_inv)).collect();
    for i in 0..m.len() {
        if i == r || m[i][c].is_zero() {
            continue;
        }
        let a = m[i][c].clone();
        for j in 0..pivot_row.len() {
            if j != c && !pivot_row[j].is_zero() {
                m[i][j] = m[i][j].sub(&a.mul(&pivot_row[j]));
            }
        }
    }
    m.remove(r);
    for row in m.iter_mut() {
        row.remove(c);
    }
}

pub fn betti_table(m: &PresentedModule) -> BettiTable {
    m.resolution().betti_table()
}

pub fn projective_dimension(m: &PresentedModule) -> ExtendedInt {
    m.resolution().length()
}

pub fn hilbert_series(m: &PresentedModule) -> HilbertSeries {
    let res = m.resolution();
    let mut numerator: BTreeMap<i64, i64> = BTreeMap::new();
    for (i, f) in res.modules().iter().enumerate() {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        for &d in f.degrees() {
            *numerator.entry(d).or_default() += sign;
        }
    }
    numerator.retain(|_, c| *c != 0);
    HilbertSeries { numerator, variables: m.ring().nvars() }
}
