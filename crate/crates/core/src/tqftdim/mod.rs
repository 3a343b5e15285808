//! Graded dimensions of TQFT state spaces of decorated surfaces, computed
//! from admissible colorings of trivalent spine graphs, the Verlinde
//! formula, and degree-0 Hochschild homology in the generic case.

pub mod graphs;
mod hh0;
pub mod schema;

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::qscalar::{Degree, QScalar, RootParams};
use crate::repcat::ColorLabel;

pub use hh0::{hh0_dimension_generic, multiplicity_dims, BasicAlgebraGeneric};

#[derive(Clone, Debug, PartialEq)]
pub enum Vertex {
    /// Trivalent vertex; `order` is its position in the chosen vertex
    /// ordering (relevant for bases when r is even, not for dimensions).
    Internal { order: usize },
    /// Univalent end of a leg colored by a simple projective module.
    External { color: ColorLabel },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Edge {
    pub tail: usize,
    pub head: usize,
    /// Value of the cohomology class on the meridian of this edge.
    pub grading: Complex64,
}

/// An oriented uni-trivalent graph with edge gradings in `ℂ/2ℤ`; `loops`
/// are vertex-free circle components given by their gradings.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct TrivalentGraph {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    pub loops: Vec<Complex64>,
}

/// One `r`-admissible coloring with its vertex degrees.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AdmissibleColoring {
    /// Color of each internal edge (`None` for legs, whose color is fixed).
    pub edge_colors: Vec<Option<Complex64>>,
    pub loop_colors: Vec<Complex64>,
    /// Degree `k_v` of each internal vertex (`None` for external ones).
    pub vertex_degrees: Vec<Option<i64>>,
    pub total_degree: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ParityMode {
    Plain,
    Super,
}

/// `Σ_k dim_k t^k`, evaluated with the sign `(−1)^k` in super mode.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedDimension {
    pub coefficients: BTreeMap<i64, u64>,
    pub parity_mode: ParityMode,
}

impl GradedDimension {
    pub fn new(ctx: &RootParams) -> Self {
        GradedDimension {
            coefficients: BTreeMap::new(),
            parity_mode: if ctx.is_odd() { ParityMode::Plain } else { ParityMode::Super },
        }
    }

    pub fn total(&self) -> u64 {
        self.coefficients.values().sum()
    }

    pub fn eval(&self, t: Complex64) -> Complex64 {
        self.coefficients
            .iter()
            .map(|(&k, &d)| {
                let sign = match self.parity_mode {
                    ParityMode::Super if k.rem_euclid(2) == 1 => -1.0,
                    _ => 1.0,
                };
                t.powi(k as i32) * (sign * d as f64)
            })
            .sum()
    }

    /// Evaluate at `t = q^{2r′β}`.
    pub fn eval_at_class(&self, ctx: &RootParams, beta: Complex64) -> Complex64 {
        self.eval(ctx.q_pow(beta * (2 * ctx.rprime()) as f64))
    }

    fn add(&mut self, k: i64, n: u64) {
        if n > 0 {
            *self.coefficients.entry(k).or_insert(0) += n;
        }
    }

    fn merge(&mut self, other: &GradedDimension) {
        for (&k, &n) in &other.coefficients {
            self.add(k, n);
        }
    }
}

/// Degrees `k` with `s ∈ H_r + 2r′k`.
pub(crate) fn degrees_for_sum(ctx: &RootParams, s: Complex64) -> Vec<i64> {
    let Some(n) = ctx.near_integer(s) else {
        return Vec::new();
    };
    let (r, rp) = (ctx.r(), ctx.rprime());
    if (n - (r - 1)).rem_euclid(2) != 0 {
        return Vec::new();
    }
    // |n − 2r′k| ≤ r − 1
    let lo = (n - (r - 1)).div_euclid(2 * rp) - 1;
    let hi = (n + (r - 1)).div_euclid(2 * rp) + 1;
    (lo..=hi).filter(|k| (n - 2 * rp * k).abs() < r).collect()
}

/// All `k` with `α+β+γ ∈ H_r + 2r′k`.
pub fn triple_admissible(ctx: &RootParams, a: Complex64, b: Complex64, c: Complex64) -> Result<Vec<i64>> {
    for x in [a, b, c] {
        ctx.check_cdot(x)?;
    }
    Ok(degrees_for_sum(ctx, a + b + c))
}

/// The in-range colors of an edge with grading `omega`: representatives of
/// `ω − (r−1)` mod 2 with real part in `]−r, r]` (r odd) or `[0, r[` (r even).
pub fn edge_colors(ctx: &RootParams, omega: Complex64) -> Result<Vec<Complex64>> {
    if Degree(omega).is_integral(ctx.epsilon_int) {
        return Err(Error::NonGeneric(format!(
            "edge grading {} is integral",
            Degree(omega)
        )));
    }
    let r = ctx.r() as f64;
    let x = omega - (r - 1.0);
    let colors = if ctx.is_odd() {
        // Largest representative with real part ≤ r, then step down.
        let top = x + 2.0 * ((r - x.re) / 2.0).floor();
        (0..ctx.rprime()).map(|m| top - 2.0 * m as f64).collect()
    } else {
        let mut bottom = x + 2.0 * ((-x.re) / 2.0).floor();
        if bottom.re < 0.0 {
            bottom += 2.0;
        }
        (0..ctx.rprime()).map(|m| bottom + 2.0 * m as f64).collect()
    };
    Ok(colors)
}

/// Incidence of one internal vertex: `(edge, +1 if incoming, −1 if outgoing)`.
pub(crate) type Incidence = Vec<(usize, i64)>;

impl TrivalentGraph {
    pub fn is_internal_edge(&self, e: &Edge) -> bool {
        matches!(self.vertices[e.tail], Vertex::Internal { .. })
            && matches!(self.vertices[e.head], Vertex::Internal { .. })
    }

    /// First Betti number of the graph (loops included).
    pub fn genus(&self) -> usize {
        let internal_v = self
            .vertices
            .iter()
            .filter(|v| matches!(v, Vertex::Internal { .. }))
            .count();
        let internal_e = self.edges.iter().filter(|e| self.is_internal_edge(e)).count();
        let components = self.internal_components();
        internal_e + components + self.loops.len() - internal_v
    }

    fn internal_components(&self) -> usize {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for e in &self.edges {
            if self.is_internal_edge(e) {
                let (a, b) = (find(&mut parent, e.tail), find(&mut parent, e.head));
                parent[a] = b;
            }
        }
        (0..n)
            .filter(|&v| matches!(self.vertices[v], Vertex::Internal { .. }) && find(&mut parent, v) == v)
            .count()
    }

    pub fn incidences(&self) -> Vec<Incidence> {
        let mut inc = vec![Vec::new(); self.vertices.len()];
        for (i, e) in self.edges.iter().enumerate() {
            inc[e.head].push((i, 1));
            inc[e.tail].push((i, -1));
        }
        inc
    }

    /// Structural checks: valences, leg colors and degrees, the 1-cycle
    /// condition at every internal vertex.
    pub fn validate(&self, ctx: &RootParams) -> Result<()> {
        let eps = ctx.epsilon_int;
        let inc = self.incidences();
        for (v, vert) in self.vertices.iter().enumerate() {
            match vert {
                Vertex::Internal { .. } => {
                    if inc[v].len() != 3 {
                        return Err(Error::Schema(format!("vertex {v} has valence {}", inc[v].len())));
                    }
                    let flux: Complex64 = inc[v]
                        .iter()
                        .map(|&(e, s)| self.edges[e].grading * s as f64)
                        .sum();
                    if !Degree(flux).eq_mod2(Degree::zero(), eps) {
                        return Err(Error::Schema(format!(
                            "gradings around vertex {v} do not form a 1-cycle"
                        )));
                    }
                }
                Vertex::External { color } => {
                    if inc[v].len() != 1 {
                        return Err(Error::Schema(format!("leg end {v} has valence {}", inc[v].len())));
                    }
                    let e = &self.edges[inc[v][0].0];
                    if !matches!(self.vertices[if e.tail == v { e.head } else { e.tail }], Vertex::Internal { .. }) {
                        return Err(Error::Schema(format!("leg {v} is not attached to a trivalent vertex")));
                    }
                    if !color.is_simple_projective(ctx) {
                        return Err(Error::Domain(format!("leg color {color} is not simple projective")));
                    }
                    if !color.degree(ctx).eq_mod2(Degree(e.grading), eps) {
                        return Err(Error::Schema(format!(
                            "leg {v}: color degree {} differs from grading {}",
                            color.degree(ctx),
                            Degree(e.grading)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Signed color contributed by a leg edge to its trivalent vertex.
    pub(crate) fn leg_term(&self, e: &Edge) -> Complex64 {
        let (end, sign) = match (&self.vertices[e.tail], &self.vertices[e.head]) {
            (Vertex::External { color }, _) => (color, 1.0),
            (_, Vertex::External { color }) => (color, -1.0),
            _ => unreachable!("not a leg"),
        };
        match end {
            ColorLabel::Valpha(a) => *a * sign,
            _ => unreachable!("validated leg color"),
        }
    }
}

struct ColoringSpace {
    internal: Vec<usize>,
    choices: Vec<Vec<Complex64>>,
    loop_choices: Vec<Vec<Complex64>>,
    /// For each internal vertex: fixed leg contribution and internal incidences.
    vertices: Vec<(usize, Complex64, Vec<(usize, f64)>)>,
}

fn coloring_space(ctx: &RootParams, g: &TrivalentGraph) -> Result<ColoringSpace> {
    g.validate(ctx)?;
    let mut slot = vec![usize::MAX; g.edges.len()];
    let mut internal = Vec::new();
    let mut choices = Vec::new();
    for (i, e) in g.edges.iter().enumerate() {
        if g.is_internal_edge(e) {
            slot[i] = internal.len();
            internal.push(i);
            choices.push(edge_colors(ctx, e.grading)?);
        }
    }
    let loop_choices = g
        .loops
        .iter()
        .map(|w| edge_colors(ctx, *w))
        .collect::<Result<Vec<_>>>()?;
    let inc = g.incidences();
    let mut vertices = Vec::new();
    for (v, vert) in g.vertices.iter().enumerate() {
        if let Vertex::Internal { .. } = vert {
            let mut fixed = Complex64::new(0.0, 0.0);
            let mut terms = Vec::new();
            for &(e, s) in &inc[v] {
                if slot[e] == usize::MAX {
                    fixed += g.leg_term(&g.edges[e]);
                } else {
                    terms.push((slot[e], s as f64));
                }
            }
            vertices.push((v, fixed, terms));
        }
    }
    Ok(ColoringSpace {
        internal,
        choices,
        loop_choices,
        vertices,
    })
}

fn odometer(sizes: &[usize], mut f: impl FnMut(&[usize])) {
    if sizes.contains(&0) {
        return;
    }
    let mut idx = vec![0usize; sizes.len()];
    loop {
        f(&idx);
        let mut k = 0;
        loop {
            if k == sizes.len() {
                return;
            }
            idx[k] += 1;
            if idx[k] < sizes[k] {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

impl ColoringSpace {
    /// Visit colorings whose first internal edge takes choice `first`
    /// (or all colorings if there are no internal edges).
    fn visit(
        &self,
        ctx: &RootParams,
        first: Option<usize>,
        mut f: impl FnMut(&[Complex64], &[Vec<i64>]),
    ) {
        let mut sizes: Vec<usize> = self.choices.iter().map(Vec::len).collect();
        if first.is_some() {
            sizes[0] = 1;
        }
        let mut colors = vec![Complex64::new(0.0, 0.0); self.choices.len()];
        odometer(&sizes, |idx| {
            for (k, &i) in idx.iter().enumerate() {
                let pick = if k == 0 { first.unwrap_or(i) } else { i };
                colors[k] = self.choices[k][pick];
            }
            let degs: Vec<Vec<i64>> = self
                .vertices
                .iter()
                .map(|(_, fixed, terms)| {
                    let s = terms.iter().fold(*fixed, |acc, &(e, sg)| acc + colors[e] * sg);
                    degrees_for_sum(ctx, s)
                })
                .collect();
            f(&colors, &degs);
        });
    }

    fn first_choices(&self) -> Vec<Option<usize>> {
        match self.choices.first() {
            Some(c) => (0..c.len()).map(Some).collect(),
            None => vec![None],
        }
    }
}

/// Every admissible coloring, with one entry per valid vertex-degree assignment.
pub fn enumerate_colorings(ctx: &RootParams, g: &TrivalentGraph) -> Result<Vec<AdmissibleColoring>> {
    enumerate_colorings_with(ctx, g, Exec::default())
}

pub fn enumerate_colorings_with(
    ctx: &RootParams,
    g: &TrivalentGraph,
    exec: Exec,
) -> Result<Vec<AdmissibleColoring>> {
    let space = coloring_space(ctx, g)?;
    let loop_sizes: Vec<usize> = space.loop_choices.iter().map(Vec::len).collect();
    let parts = exec.map(&space.first_choices(), |first| {
        let mut out = Vec::new();
        space.visit(ctx, *first, |colors, degs| {
            let sizes: Vec<usize> = degs.iter().map(Vec::len).collect();
            odometer(&sizes, |di| {
                let mut vertex_degrees = vec![None; g.vertices.len()];
                let mut total = 0;
                for (n, (v, _, _)) in space.vertices.iter().enumerate() {
                    let k = degs[n][di[n]];
                    vertex_degrees[*v] = Some(k);
                    total += k;
                }
                let mut edge_colors = vec![None; g.edges.len()];
                for (k, &e) in space.internal.iter().enumerate() {
                    edge_colors[e] = Some(colors[k]);
                }
                odometer(&loop_sizes, |li| {
                    out.push(AdmissibleColoring {
                        edge_colors: edge_colors.clone(),
                        loop_colors: li
                            .iter()
                            .enumerate()
                            .map(|(l, &i)| space.loop_choices[l][i])
                            .collect(),
                        vertex_degrees: vertex_degrees.clone(),
                        total_degree: total,
                    });
                });
            });
        });
        out
    });
    Ok(parts.into_iter().flatten().collect())
}

/// Histogram of total degrees over all admissible colorings.
pub fn graded_dimension(ctx: &RootParams, g: &TrivalentGraph) -> Result<GradedDimension> {
    graded_dimension_with(ctx, g, Exec::default())
}

pub fn graded_dimension_with(ctx: &RootParams, g: &TrivalentGraph, exec: Exec) -> Result<GradedDimension> {
    let space = coloring_space(ctx, g)?;
    let loop_factor: u64 = space.loop_choices.iter().map(|c| c.len() as u64).product();
    let parts = exec.map(&space.first_choices(), |first| {
        let mut gd = GradedDimension::new(ctx);
        space.visit(ctx, *first, |_, degs| {
            // Convolve the per-vertex degree options.
            let mut acc: BTreeMap<i64, u64> = BTreeMap::from([(0, 1)]);
            for options in degs {
                let mut next = BTreeMap::new();
                for (&k, &n) in &acc {
                    for &d in options {
                        *next.entry(k + d).or_insert(0) += n;
                    }
                }
                acc = next;
            }
            for (k, n) in acc {
                gd.add(k, n * loop_factor);
            }
        });
        gd
    });
    let mut out = GradedDimension::new(ctx);
    for p in &parts {
        out.merge(p);
    }
    Ok(out)
}

/// Closed-form value of the invariant of `S¹×Σ_g` with `S¹`-class `β` and
/// points colored `c_i`.
pub fn verlinde(ctx: &RootParams, genus: usize, beta: Complex64, points: &[Complex64]) -> Result<QScalar> {
    if Degree(beta).is_integral(ctx.epsilon_int) {
        return Err(Error::Domain(format!("beta = {} must be non-integral", Degree(beta))));
    }
    for &c in points {
        ctx.check_cdot(c)?;
    }
    let r = ctx.r();
    let n = points.len() as i32;
    let c: Complex64 = points.iter().sum();
    let num = ctx.q_num(beta * r as f64);
    let exponent = 2 * genus as i32 - 2 + n;
    let mut sum = Complex64::new(0.0, 0.0);
    for k in ctx.h_r_set() {
        let den = ctx.q_num(beta + k as f64);
        if den.norm() < ctx.epsilon_int {
            return Err(Error::Domain(format!("{{beta + {k}}} vanishes")));
        }
        sum += ctx.q_pow(c * k as f64) * (num / den).powi(exponent);
    }
    let sign = if (n as i64 * (r - 1)) % 2 == 0 { 1.0 } else { -1.0 };
    let rp = ctx.rprime() as f64;
    Ok(sum * ctx.q_pow(c * beta) * (sign * rp.powi(genus as i32) / r as f64))
}
