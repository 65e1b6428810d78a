//! Vector-level helpers shared by syzygies, resolutions and Ext.

use std::sync::Arc;

use crate::field::CoefficientField;
use crate::groebner::engine::{self, Ctx, ModuleOrder, Term, Vector};
use crate::poly::{MonomialOrder, PolyRing, Polynomial};

pub(crate) fn top_ctx(field: CoefficientField, order: MonomialOrder) -> Ctx {
    Ctx::new(field, ModuleOrder::Top(order))
}

pub(crate) fn column_to_vector(ctx: &Ctx, col: &[Polynomial]) -> Vector {
    let terms = col
        .iter()
        .enumerate()
        .flat_map(|(comp, p)| p.terms().iter().map(move |(m, c)| Term { mon: m.clone(), comp, coef: c.clone() }))
        .collect();
    ctx.normalize(terms)
}

pub(crate) fn vector_to_column(ring: &Arc<PolyRing>, v: &[Term], rank: usize) -> Vec<Polynomial> {
    let mut buckets = vec![Vec::new(); rank];
    for t in v {
        buckets[t.comp].push((t.mon.clone(), t.coef.clone()));
    }
    buckets.into_iter().map(|b| Polynomial::from_terms(ring, b)).collect()
}

/// Shifts every component index by `by`.
pub(crate) fn shift_components(v: &[Term], by: usize) -> Vector {
    v.iter().map(|t| Term { mon: t.mon.clone(), comp: t.comp + by, coef: t.coef.clone() }).collect()
}

/// Kernel of the map `R^k -> R^r` sending `e_j` to `columns[j]`.
///
/// Computed by a position-over-term Gröbner basis of the graph
/// `(columns[j], e_j)`: elements free of the first `r` components are
/// exactly the syzygies. Returned generators are minimal when homogeneous.
pub(crate) fn kernel(
    nvars: usize,
    field: CoefficientField,
    order: MonomialOrder,
    columns: &[Vector],
    target_degrees: &[i64],
    source_degrees: &[i64],
) -> Vec<Vector> {
    let r = target_degrees.len();
    let pot = Ctx::new(field, ModuleOrder::Pot(order));
    let mut degrees = target_degrees.to_vec();
    degrees.extend_from_slice(source_degrees);
    let graph: Vec<Vector> = columns
        .iter()
        .enumerate()
        .map(|(j, col)| {
            let mut terms = col.clone();
            terms.push(Term { mon: crate::poly::Monomial::one(nvars), comp: r + j, coef: field.one() });
            pot.normalize(terms)
        })
        .collect();
    let out = engine::buchberger(&pot, &graph, &degrees, false);
    let top = top_ctx(field, order);
    let syz: Vec<Vector> = out
        .basis
        .iter()
        .filter(|g| g[0].comp >= r)
        .map(|g| top.normalize(g.iter().map(|t| Term { mon: t.mon.clone(), comp: t.comp - r, coef: t.coef.clone() }).collect()))
        .collect();
    minimal_generators(&top, &syz, source_degrees)
}

/// A minimal generating subset (homogeneous input) or the nonzero inputs.
pub(crate) fn minimal_generators(ctx: &Ctx, gens: &[Vector], degrees: &[i64]) -> Vec<Vector> {
    let nonzero: Vec<Vector> = gens.iter().filter(|g| !g.is_empty()).cloned().collect();
    if nonzero.is_empty() {
        return nonzero;
    }
    let out = engine::buchberger(ctx, &nonzero, degrees, false);
    if !out.homogeneous {
        return nonzero;
    }
    out.kept_generators.iter().map(|&k| nonzero[k].clone()).collect()
}

/// Gröbner basis of the submodule spanned by `gens` (term-over-position).
pub(crate) fn submodule_basis(ctx: &Ctx, gens: &[Vector], degrees: &[i64]) -> Vec<Vector> {
    let out = engine::buchberger(ctx, gens, degrees, false);
    engine::interreduce(ctx, &out.basis)
}

pub(crate) fn in_submodule(ctx: &Ctx, basis: &[Vector], v: &[Term]) -> bool {
    ctx.reduce(v, basis).is_empty()
}
