//! Buchberger's algorithm on elements of a free module `R^r`.
//!
//! Ideals are the rank-one case. Vectors are sorted term lists, descending in
//! a [`ModuleOrder`]. The same routine produces reduced bases and minimal
//! generating sets of homogeneous submodules (generators are fed in by degree
//! alongside S-pairs).

use std::cmp::Ordering;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::field::{CoefficientField, Scalar};
use crate::poly::{Monomial, MonomialOrder};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Term {
    pub mon: Monomial,
    pub comp: usize,
    pub coef: Scalar,
}

pub(crate) type Vector = Vec<Term>;

/// A monomial order on a free module.
///
/// `Schreyer` compares `m e_i` with `n e_j` through `m * shift_i` and
/// `n * shift_j` in the base order and breaks ties by `rank` (smaller rank is
/// larger). Term-over-position is the special case with trivial shifts.
#[derive(Clone, Debug)]
pub(crate) enum ModuleOrder {
    Top(MonomialOrder),
    Pot(MonomialOrder),
    Schreyer { base: MonomialOrder, shifts: Arc<Vec<Monomial>>, rank: Arc<Vec<usize>> },
}

impl ModuleOrder {
    #[inline]
    pub fn cmp(&self, am: &Monomial, ac: usize, bm: &Monomial, bc: usize) -> Ordering {
        match self {
            ModuleOrder::Top(o) => o.cmp(am, bm).then(bc.cmp(&ac)),
            ModuleOrder::Pot(o) => bc.cmp(&ac).then_with(|| o.cmp(am, bm)),
            ModuleOrder::Schreyer { base, shifts, rank } => base
                .cmp_shifted(am, &shifts[ac], bm, &shifts[bc])
                .then(rank[bc].cmp(&rank[ac])),
        }
    }

    #[inline]
    pub fn cmp_terms(&self, a: &Term, b: &Term) -> Ordering {
        self.cmp(&a.mon, a.comp, &b.mon, b.comp)
    }

    /// The Schreyer order on `R^s` induced by the leading terms of `gens`
    /// (each living in the module ordered by `self`).
    pub fn schreyer(&self, leads: &[(Monomial, usize)]) -> ModuleOrder {
        let (base, prev_shift, prev_rank): (MonomialOrder, Option<&Vec<Monomial>>, Option<&Vec<usize>>) = match self {
            ModuleOrder::Top(b) => (*b, None, None),
            ModuleOrder::Schreyer { base, shifts, rank } => (*base, Some(shifts), Some(rank)),
            ModuleOrder::Pot(_) => panic!("Schreyer orders are built over term-over-position orders"),
        };
        let shifts: Vec<Monomial> = leads
            .iter()
            .map(|(m, c)| match prev_shift {
                Some(s) => m.mul(&s[*c]),
                None => m.clone(),
            })
            .collect();
        let prefix = |c: usize| prev_rank.map_or(c, |r| r[c]);
        let mut idx: Vec<usize> = (0..leads.len()).collect();
        idx.sort_by_key(|&i| (prefix(leads[i].1), i));
        let mut rank = vec![0; leads.len()];
        for (pos, i) in idx.into_iter().enumerate() {
            rank[i] = pos;
        }
        ModuleOrder::Schreyer { base, shifts: Arc::new(shifts), rank: Arc::new(rank) }
    }
}

/// Arithmetic context shared by all vector routines.
#[derive(Clone, Debug)]
pub(crate) struct Ctx {
    pub field: CoefficientField,
    pub order: ModuleOrder,
}

impl Ctx {
    pub fn new(field: CoefficientField, order: ModuleOrder) -> Self {
        Ctx { field, order }
    }

    /// Sorts and combines arbitrary terms.
    pub fn normalize(&self, mut terms: Vec<Term>) -> Vector {
        terms.sort_by(|a, b| self.order.cmp_terms(b, a));
        let mut out: Vector = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.comp == t.comp && last.mon == t.mon => {
                    last.coef = self.field.add(&last.coef, &t.coef);
                }
                _ => {
                    if out.last().is_some_and(|l| l.coef.is_zero()) {
                        out.pop();
                    }
                    out.push(t);
                }
            }
        }
        if out.last().is_some_and(|l| l.coef.is_zero()) {
            out.pop();
        }
        out
    }

    /// `f - c * m * g`.
    pub fn sub_mul(&self, f: &[Term], c: &Scalar, m: &Monomial, g: &[Term]) -> Vector {
        let field = self.field;
        let mut out = Vec::with_capacity(f.len() + g.len());
        let mut i = 0;
        let mut gi = g.iter().map(|t| Term { mon: t.mon.mul(m), comp: t.comp, coef: field.mul(c, &t.coef) }).peekable();
        while i < f.len() {
            let Some(gt) = gi.peek() else { break };
            match self.order.cmp_terms(&f[i], gt) {
                Ordering::Greater => {
                    out.push(f[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let gt = gi.next().unwrap();
                    out.push(Term { coef: field.neg(&gt.coef), ..gt });
                }
                Ordering::Equal => {
                    let gt = gi.next().unwrap();
                    let coef = field.sub(&f[i].coef, &gt.coef);
                    if !coef.is_zero() {
                        out.push(Term { coef, ..gt });
                    }
                    i += 1;
                }
            }
        }
        out.extend(f[i..].iter().cloned());
        out.extend(gi.map(|t| Term { coef: field.neg(&t.coef), ..t }));
        out
    }

    pub fn scale(&self, f: &[Term], c: &Scalar) -> Vector {
        if c.is_zero() {
            return Vec::new();
        }
        f.iter().map(|t| Term { mon: t.mon.clone(), comp: t.comp, coef: self.field.mul(c, &t.coef) }).collect()
    }

    pub fn mul_term(&self, f: &[Term], c: &Scalar, m: &Monomial) -> Vector {
        if c.is_zero() {
            return Vec::new();
        }
        f.iter().map(|t| Term { mon: t.mon.mul(m), comp: t.comp, coef: self.field.mul(c, &t.coef) }).collect()
    }

    pub fn monic(&self, f: &[Term]) -> Vector {
        match f.first() {
            None => Vec::new(),
            Some(t) => {
                let inv = self.field.inv(&t.coef);
                self.scale(f, &inv)
            }
        }
    }

    fn find_reducer(&self, t: &Term, basis: &[Vector]) -> Option<usize> {
        basis.iter().position(|g| {
            let l = &g[0];
            l.comp == t.comp && l.mon.divides(&t.mon)
        })
    }

    /// Full division: `f = sum q_k g_k + r`, always using the first basis
    /// element whose leading term divides. Quotients are returned as raw
    /// (unsorted, possibly repeated) term lists per basis index.
    pub fn divide(&self, f: &[Term], basis: &[Vector]) -> (Vec<Vec<(Monomial, Scalar)>>, Vector) {
        let mut quotients = vec![Vec::new(); basis.len()];
        let mut rem = Vec::new();
        let mut cur: Vector = f.to_vec();
        while let Some(lead) = cur.first().cloned() {
            match self.find_reducer(&lead, basis) {
                Some(k) => {
                    let g = &basis[k];
                    let m = g[0].mon.quotient_of(&lead.mon).unwrap();
                    let c = self.field.div(&lead.coef, &g[0].coef);
                    cur = self.sub_mul(&cur, &c, &m, g);
                    quotients[k].push((m, c));
                }
                None => {
                    rem.push(lead);
                    cur.remove(0);
                }
            }
        }
        (quotients, rem)
    }

    /// Remainder of full division.
    pub fn reduce(&self, f: &[Term], basis: &[Vector]) -> Vector {
        let mut rem = Vec::new();
        let mut cur: Vector = f.to_vec();
        while let Some(lead) = cur.first() {
            match self.find_reducer(lead, basis) {
                Some(k) => {
                    let g = &basis[k];
                    let m = g[0].mon.quotient_of(&lead.mon).unwrap();
                    let c = self.field.div(&lead.coef, &g[0].coef);
                    cur = self.sub_mul(&cur, &c, &m, g);
                }
                None => {
                    rem.push(cur.remove(0));
                }
            }
        }
        rem
    }

    pub fn s_vector(&self, f: &[Term], g: &[Term]) -> Option<Vector> {
        let (a, b) = (&f[0], &g[0]);
        if a.comp != b.comp {
            return None;
        }
        let l = a.mon.lcm(&b.mon);
        let ma = a.mon.quotient_of(&l).unwrap();
        let mb = b.mon.quotient_of(&l).unwrap();
        let lhs = self.mul_term(f, &b.coef, &ma);
        Some(self.sub_mul(&lhs, &a.coef, &mb, g))
    }
}

/// Homogeneous degree of a term given the degrees of the basis vectors.
#[inline]
pub(crate) fn term_degree(t: &Term, degrees: &[i64]) -> i64 {
    t.mon.degree() as i64 + degrees[t.comp]
}

/// Highest term degree; `None` for zero.
pub(crate) fn vector_degree(f: &[Term], degrees: &[i64]) -> Option<i64> {
    f.iter().map(|t| term_degree(t, degrees)).max()
}

pub(crate) fn is_homogeneous(f: &[Term], degrees: &[i64]) -> bool {
    match f.first() {
        None => true,
        Some(t) => {
            let d = term_degree(t, degrees);
            f.iter().all(|s| term_degree(s, degrees) == d)
        }
    }
}

pub(crate) struct GbOutput {
    /// Every element added during the run, monic, in insertion order.
    pub basis: Vec<Vector>,
    /// Input generators that survived reduction when fed in by degree; a
    /// minimal generating set when the input is homogeneous.
    pub kept_generators: Vec<usize>,
    pub homogeneous: bool,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    degree: i64,
}

/// Runs Buchberger's algorithm.
///
/// `degrees` gives the degree of each basis vector of the ambient module.
/// `ideal_mode` enables the coprime-leading-monomial criterion, which is only
/// valid in rank one.
pub(crate) fn buchberger(ctx: &Ctx, gens: &[Vector], degrees: &[i64], ideal_mode: bool) -> GbOutput {
    let homogeneous = gens.iter().all(|g| is_homogeneous(g, degrees));
    let mut order: Vec<usize> = (0..gens.len()).filter(|&k| !gens[k].is_empty()).collect();
    order.sort_by_key(|&k| vector_degree(&gens[k], degrees).unwrap());
    let mut pending = order.into_iter().peekable();

    let mut basis: Vec<Vector> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut kept = Vec::new();

    loop {
        let next_pair = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, p)| (p.degree, p.j, p.i))
            .map(|(k, p)| (k, p.degree));
        let next_gen = pending.peek().map(|&k| vector_degree(&gens[k], degrees).unwrap());
        let take_pair = match (next_pair, next_gen) {
            (None, None) => break,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (Some((_, dp)), Some(dg)) => dp <= dg,
        };

        let (mut f, from_gen) = if take_pair {
            let (k, _) = next_pair.unwrap();
            let p = pairs.swap_remove(k);
            let (gi, gj) = (&basis[p.i], &basis[p.j]);
            let mi = gi[0].mon.quotient_of(&p.lcm).unwrap();
            let mj = gj[0].mon.quotient_of(&p.lcm).unwrap();
            // Basis elements are monic, so the S-vector is mi*gi - mj*gj.
            (ctx.sub_mul(&ctx.mul_term(gi, &Scalar::one(), &mi), &Scalar::one(), &mj, gj), None)
        } else {
            let k = pending.next().unwrap();
            (gens[k].clone(), Some(k))
        };

        // Top reduction.
        while let Some(lead) = f.first() {
            let Some(r) = ctx.find_reducer(lead, &basis) else { break };
            let m = basis[r][0].mon.quotient_of(&lead.mon).unwrap();
            let c = lead.coef.clone();
            f = ctx.sub_mul(&f, &c, &m, &basis[r]);
        }
        if f.is_empty() {
            continue;
        }
        if let Some(k) = from_gen {
            kept.push(k);
        }
        let inv = ctx.field.inv(&f[0].coef);
        f = ctx.scale(&f, &inv);
        let t = basis.len();
        update_pairs(&mut pairs, &basis, &f, t, degrees, ideal_mode);
        basis.push(f);
    }

    GbOutput { basis, kept_generators: kept, homogeneous }
}

// Gebauer-Moeller installation of the pairs created by a new element `h`.
fn update_pairs(pairs: &mut Vec<Pair>, basis: &[Vector], h: &[Term], t: usize, degrees: &[i64], ideal_mode: bool) {
    let hl = &h[0];
    let mut fresh: Vec<(Pair, bool)> = basis
        .iter()
        .enumerate()
        .filter(|(_, g)| g[0].comp == hl.comp)
        .map(|(i, g)| {
            let lcm = g[0].mon.lcm(&hl.mon);
            let degree = lcm.degree() as i64 + degrees[hl.comp];
            let coprime = ideal_mode && g[0].mon.is_coprime(&hl.mon);
            (Pair { i, j: t, lcm, degree }, coprime)
        })
        .collect();

    // Criterion B on the old pairs.
    pairs.retain(|p| {
        if basis[p.i][0].comp != hl.comp || !hl.mon.divides(&p.lcm) {
            return true;
        }
        let li = basis[p.i][0].mon.lcm(&hl.mon);
        let lj = basis[p.j][0].mon.lcm(&hl.mon);
        li == p.lcm || lj == p.lcm
    });

    // Criterion M: drop a new pair whose lcm is properly divisible by another's.
    let lcms: Vec<Monomial> = fresh.iter().map(|(p, _)| p.lcm.clone()).collect();
    fresh.retain(|(p, _)| !lcms.iter().any(|l| l != &p.lcm && l.divides(&p.lcm)));

    // Criterion F plus the coprime criterion: one representative per lcm.
    let mut chosen: Vec<(Pair, bool)> = Vec::new();
    for (p, coprime) in fresh {
        match chosen.iter_mut().find(|(q, _)| q.lcm == p.lcm) {
            Some(entry) => entry.1 |= coprime,
            None => chosen.push((p, coprime)),
        }
    }
    pairs.extend(chosen.into_iter().filter(|(_, coprime)| !coprime).map(|(p, _)| p));
}

/// Reduced basis: minimal leading terms, fully tail-reduced, monic, sorted
/// descending by leading term.
pub(crate) fn interreduce(ctx: &Ctx, basis: &[Vector]) -> Vec<Vector> {
    let mut minimal: Vec<Vector> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        if g.is_empty() {
            continue;
        }
        let l = &g[0];
        let dominated = basis.iter().enumerate().any(|(k2, h)| {
            if k2 == k || h.is_empty() || h[0].comp != l.comp || !h[0].mon.divides(&l.mon) {
                return false;
            }
            h[0].mon != l.mon || k2 < k
        });
        if !dominated {
            minimal.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Vector> = minimal.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, g)| g.clone()).collect();
        let g = &minimal[k];
        let tail = ctx.reduce(&g[1..], &others);
        let mut v = vec![g[0].clone()];
        v.extend(tail);
        out.push(ctx.monic(&v));
    }
    out.sort_by(|a, b| ctx.order.cmp_terms(&b[0], &a[0]));
    out
}

/// Every S-vector reduces to zero.
pub(crate) fn is_groebner(ctx: &Ctx, basis: &[Vector]) -> bool {
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            if let Some(s) = ctx.s_vector(&basis[i], &basis[j]) {
                if !ctx.reduce(&s, basis).is_empty() {
                    return false;
                }
            }
        }
    }
    true
}
