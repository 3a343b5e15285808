use std::collections::{BTreeMap, HashMap};

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::qscalar::RootParams;
use crate::repcat::hom_dimension;

use super::{edge_colors, triple_admissible, GradedDimension, TrivalentGraph, Vertex};

/// `End(P_ω)` for a nonintegral edge grading `ω`, where `P_ω` is the sum of
/// the in-range `V_β` with `β + r − 1 ≡ ω`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BasicAlgebraGeneric {
    pub grading: Complex64,
    pub simple_summands: Vec<Complex64>,
    pub graded_endomorphism_dims: BTreeMap<i64, usize>,
}

impl BasicAlgebraGeneric {
    pub fn new(ctx: &RootParams, grading: Complex64) -> Result<Self> {
        let simple_summands = edge_colors(ctx, grading)?;
        let mut dims = BTreeMap::new();
        for &a in &simple_summands {
            for &b in &simple_summands {
                for (k, n) in hom_dimension(ctx, a, b)? {
                    *dims.entry(k).or_insert(0) += n;
                }
            }
        }
        Ok(BasicAlgebraGeneric {
            grading,
            simple_summands,
            graded_endomorphism_dims: dims,
        })
    }

    /// Degree-0 part is spanned by the summand idempotents.
    pub fn is_semisimple_commutative(&self) -> bool {
        self.graded_endomorphism_dims.len() == 1
            && self.graded_endomorphism_dims.get(&0) == Some(&self.simple_summands.len())
    }
}

/// Graded dimension of `Hom(ℂ, P_α⊗P_β⊗P_γ)` for three incoming gradings.
pub fn multiplicity_dims(ctx: &RootParams, a: Complex64, b: Complex64, c: Complex64) -> Result<BTreeMap<i64, usize>> {
    let (pa, pb, pc) = (edge_colors(ctx, a)?, edge_colors(ctx, b)?, edge_colors(ctx, c)?);
    let mut out = BTreeMap::new();
    for &x in &pa {
        for &y in &pb {
            for &z in &pc {
                for k in triple_admissible(ctx, x, y, z)? {
                    *out.entry(k).or_insert(0) += 1;
                }
            }
        }
    }
    Ok(out)
}

type Poly = BTreeMap<i64, u64>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (&i, &x) in a {
        for (&j, &y) in b {
            *out.entry(i + j).or_insert(0) += x * y;
        }
    }
    out
}

fn poly_add(a: &mut Poly, b: &Poly) {
    for (&k, &n) in b {
        *a.entry(k).or_insert(0) += n;
    }
}

/// The end of an edge as seen from one vertex.
#[derive(Clone, Copy)]
enum Port {
    /// Internal edge, with the sign of the color it contributes.
    Internal { edge: usize, sign: f64 },
    Leg(Complex64),
}

/// `HH₀(⊗_e 𝔸_e, ⊗_v ℍ_v)` in the generic case. Each edge algebra acts on
/// the multiplicity modules at its two ends; coinvariants keep exactly the
/// summands where both ends carry the same idempotent. The result is
/// assembled by contracting vertex tables over a moving frontier of edges.
pub fn hh0_dimension_generic(ctx: &RootParams, g: &TrivalentGraph) -> Result<GradedDimension> {
    g.validate(ctx)?;
    let mut algebras: HashMap<usize, BasicAlgebraGeneric> = HashMap::new();
    for (i, e) in g.edges.iter().enumerate() {
        if g.is_internal_edge(e) {
            let alg = BasicAlgebraGeneric::new(ctx, e.grading)?;
            if !alg.is_semisimple_commutative() {
                return Err(Error::NonGeneric(format!("edge {i}: basic algebra is not semisimple")));
            }
            algebras.insert(i, alg);
        }
    }
    let mut loop_factor: u64 = 1;
    for &w in &g.loops {
        let alg = BasicAlgebraGeneric::new(ctx, w)?;
        // HH₀ of a commutative semisimple algebra is itself in degree 0.
        loop_factor *= alg.graded_endomorphism_dims[&0] as u64;
    }

    let inc = g.incidences();
    let ports: Vec<(usize, Vec<Port>)> = g
        .vertices
        .iter()
        .enumerate()
        .filter(|(_, v)| matches!(v, Vertex::Internal { .. }))
        .map(|(v, _)| {
            let ps = inc[v]
                .iter()
                .map(|&(e, s)| {
                    if algebras.contains_key(&e) {
                        Port::Internal { edge: e, sign: s as f64 }
                    } else {
                        Port::Leg(g.leg_term(&g.edges[e]))
                    }
                })
                .collect();
            (v, ps)
        })
        .collect();

    // Remaining number of unprocessed endpoints per internal edge.
    let mut pending: HashMap<usize, usize> = algebras.keys().map(|&e| (e, 2)).collect();
    // Frontier state: labels of open edges (in `open` order) ↦ polynomial.
    let mut open: Vec<usize> = Vec::new();
    let mut state: HashMap<Vec<usize>, Poly> = HashMap::from([(Vec::new(), Poly::from([(0, 1)]))]);

    for (_, ps) in &ports {
        let mut new_open = open.clone();
        for p in ps {
            if let Port::Internal { edge, .. } = p {
                if !new_open.contains(edge) {
                    new_open.push(*edge);
                }
            }
        }
        let mut closing = Vec::new();
        for p in ps {
            if let Port::Internal { edge, .. } = p {
                let n = pending.get_mut(edge).expect("internal edge");
                *n -= 1;
                if *n == 0 && !closing.contains(edge) {
                    closing.push(*edge);
                }
            }
        }
        let fresh: Vec<usize> = new_open[open.len()..].to_vec();
        let fresh_sizes: Vec<usize> = fresh.iter().map(|e| algebras[e].simple_summands.len()).collect();
        let mut next: HashMap<Vec<usize>, Poly> = HashMap::new();
        for (labels, poly) in &state {
            let mut extra = vec![0usize; fresh.len()];
            loop {
                let mut full = labels.clone();
                full.extend_from_slice(&extra);
                let label_of = |e: usize| full[new_open.iter().position(|&x| x == e).expect("open edge")];
                let mut colors = [Complex64::new(0.0, 0.0); 3];
                for (n, p) in ps.iter().enumerate() {
                    colors[n] = match *p {
                        Port::Internal { edge, sign } => algebras[&edge].simple_summands[label_of(edge)] * sign,
                        Port::Leg(c) => c,
                    };
                }
                let degrees = super::degrees_for_sum(ctx, colors[0] + colors[1] + colors[2]);
                if !degrees.is_empty() {
                    let table: Poly = degrees.iter().map(|&k| (k, 1)).collect();
                    let key: Vec<usize> = new_open
                        .iter()
                        .zip(&full)
                        .filter(|(e, _)| !closing.contains(e))
                        .map(|(_, &l)| l)
                        .collect();
                    poly_add(next.entry(key).or_default(), &poly_mul(poly, &table));
                }
                // advance the labels of freshly opened edges
                let mut k = 0;
                loop {
                    if k == extra.len() {
                        break;
                    }
                    extra[k] += 1;
                    if extra[k] < fresh_sizes[k] {
                        break;
                    }
                    extra[k] = 0;
                    k += 1;
                }
                if k == extra.len() {
                    break;
                }
            }
        }
        open = new_open.into_iter().filter(|e| !closing.contains(e)).collect();
        state = next;
    }
    debug_assert!(open.is_empty());

    let mut out = GradedDimension::new(ctx);
    if let Some(poly) = state.get(&Vec::new()) {
        for (&k, &n) in poly {
            out.add(k, n * loop_factor);
        }
    }
    Ok(out)
}
