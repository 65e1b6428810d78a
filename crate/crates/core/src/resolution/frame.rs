//! Schreyer frames: iterated syzygies read off from minimal S-pairs.
//!
//! Each level is a Gröbner basis for the Schreyer order induced by the level
//! below, so its syzygies come from pairs alone and need no further
//! Buchberger runs. Leading terms are sorted lex-descending within each
//! component, which makes the frame stop after at most `nvars + 1` levels.

use num_traits::Zero;

use crate::groebner::engine::{self, Ctx, ModuleOrder, Term, Vector};
use crate::poly::{Monomial, MonomialOrder};

use super::linalg::top_ctx;

pub(crate) struct Frame {
    /// Degrees of the basis of `F_0, F_1, ...`.
    pub degrees: Vec<Vec<i64>>,
    /// Columns of `phi_k : F_k -> F_{k-1}` as vectors in `F_{k-1}`.
    pub maps: Vec<Vec<Vector>>,
}

fn rank_of(order: &ModuleOrder, comp: usize) -> usize {
    match order {
        ModuleOrder::Schreyer { rank, .. } => rank[comp],
        _ => comp,
    }
}

fn sort_level(order: &ModuleOrder, level: &mut [Vector]) {
    level.sort_by(|a, b| {
        rank_of(order, a[0].comp)
            .cmp(&rank_of(order, b[0].comp))
            .then_with(|| MonomialOrder::LEX.cmp(&b[0].mon, &a[0].mon))
    });
}

pub(crate) fn schreyer_frame(ctx0: &Ctx, f0_degrees: &[i64], columns: &[Vector]) -> Frame {
    let out = engine::buchberger(ctx0, columns, f0_degrees, false);
    let mut level = engine::interreduce(ctx0, &out.basis);
    let mut ctx = ctx0.clone();
    sort_level(&ctx.order, &mut level);
    let mut frame = Frame { degrees: vec![f0_degrees.to_vec()], maps: Vec::new() };
    while !level.is_empty() {
        let below = frame.degrees.last().unwrap();
        let degrees: Vec<i64> = level.iter().map(|v| engine::vector_degree(v, below).unwrap()).collect();
        let leads: Vec<(Monomial, usize)> = level.iter().map(|v| (v[0].mon.clone(), v[0].comp)).collect();
        let next = Ctx::new(ctx.field, ctx.order.schreyer(&leads));
        let mut syz = pair_syzygies(&ctx, &next, &level);
        sort_level(&next.order, &mut syz);
        frame.degrees.push(degrees);
        frame.maps.push(level);
        level = syz;
        ctx = next;
    }
    frame
}

/// Syzygies of a Gröbner basis `g` (ordered by `prev`) from the minimal
/// S-pairs, as vectors ordered by the induced Schreyer order `next`.
fn pair_syzygies(prev: &Ctx, next: &Ctx, g: &[Vector]) -> Vec<Vector> {
    let field = prev.field;
    let mut out = Vec::new();
    for a in 0..g.len() {
        let la = &g[a][0];
        let mut cands: Vec<(Monomial, usize)> = (a + 1..g.len())
            .filter(|&b| g[b][0].comp == la.comp)
            .map(|b| (la.mon.quotient_of(&la.mon.lcm(&g[b][0].mon)).unwrap(), b))
            .collect();
        cands.sort_by_key(|(m, _)| m.degree());
        let mut kept: Vec<(Monomial, usize)> = Vec::new();
        for (m, b) in cands {
            if !kept.iter().any(|(k, _)| k.divides(&m)) {
                kept.push((m, b));
            }
        }
        for (mab, b) in kept {
            let lb = &g[b][0];
            let mba = lb.mon.quotient_of(&mab.mul(&la.mon)).unwrap();
            let s = prev.sub_mul(&prev.mul_term(&g[a], &lb.coef, &mab), &la.coef, &mba, &g[b]);
            let (quotients, rem) = prev.divide(&s, g);
            debug_assert!(rem.is_empty(), "frame level is not a Gröbner basis");
            let mut terms = vec![
                Term { mon: mab.clone(), comp: a, coef: lb.coef.clone() },
                Term { mon: mba, comp: b, coef: field.neg(&la.coef) },
            ];
            for (c, q) in quotients.into_iter().enumerate() {
                terms.extend(q.into_iter().map(|(m, coef)| Term { mon: m, comp: c, coef: field.neg(&coef) }));
            }
            let v = next.normalize(terms);
            debug_assert!(v[0].comp == a && v[0].mon == mab && !v[0].coef.is_zero());
            out.push(next.monic(&v));
        }
    }
    out
}

/// Order used on `F_0` when starting a frame.
pub(crate) fn base_ctx(field: crate::field::CoefficientField, order: MonomialOrder) -> Ctx {
    top_ctx(field, order)
}
