//! Reference spine graphs and random generic decorations.

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::qscalar::{Degree, RootParams};
use crate::repcat::ColorLabel;

use super::{Edge, TrivalentGraph, Vertex};

fn bare(n: usize, edges: &[(usize, usize)]) -> TrivalentGraph {
    TrivalentGraph {
        vertices: (0..n).map(|order| Vertex::Internal { order }).collect(),
        edges: edges
            .iter()
            .map(|&(tail, head)| Edge { tail, head, grading: Complex64::new(0.0, 0.0) })
            .collect(),
        loops: Vec::new(),
    }
}

/// A cycle of `2g − 2` vertices with every other pair joined by a chord;
/// genus `g ≥ 2`. Gradings are zero until assigned.
pub fn necklace(g: usize) -> TrivalentGraph {
    assert!(g >= 2, "necklace graphs have genus at least 2");
    let n = 2 * g - 2;
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..n).step_by(2).map(|i| (i, i + 1)));
    bare(n, &edges)
}

/// Two vertices joined by three parallel edges, all oriented `0 → 1`.
pub fn theta() -> TrivalentGraph {
    bare(2, &[(0, 1), (0, 1), (0, 1)])
}

/// Two self-loops joined by a bridge.
pub fn dumbbell() -> TrivalentGraph {
    bare(2, &[(0, 0), (0, 1), (1, 1)])
}

/// The complete graph on four vertices; genus 3.
pub fn k4() -> TrivalentGraph {
    bare(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)])
}

/// A single vertex-free circle with grading `omega`.
pub fn circle(omega: Complex64) -> TrivalentGraph {
    TrivalentGraph { loops: vec![omega], ..Default::default() }
}

/// A spine of genus `g` with gradings zero until assigned: empty for
/// `g = 0`, a circle for `g = 1`, a necklace otherwise.
pub fn reference(g: usize) -> TrivalentGraph {
    match g {
        0 => TrivalentGraph::default(),
        1 => circle(Complex64::new(0.0, 0.0)),
        _ => necklace(g),
    }
}

/// Turn a vertex-free circle into a cycle through `n ≥ 1` vertices.
pub fn open_circle(g: &mut TrivalentGraph, n: usize) {
    let w = g.loops.pop().expect("a loop to open");
    let base = g.vertices.len();
    let count = g.vertices.iter().filter(|v| matches!(v, Vertex::Internal { .. })).count();
    for k in 0..n {
        g.vertices.push(Vertex::Internal { order: count + k });
    }
    for k in 0..n {
        g.edges.push(Edge { tail: base + k, head: base + (k + 1) % n, grading: w });
    }
}

/// Subdivide internal edge `e` by a new trivalent vertex carrying a leg
/// colored `color`, oriented into the graph when `incoming`. Gradings
/// along `e`'s second half are not adjusted.
pub fn attach_leg(g: &mut TrivalentGraph, e: usize, color: Complex64, incoming: bool) {
    let count = g.vertices.iter().filter(|v| matches!(v, Vertex::Internal { .. })).count();
    let v = g.vertices.len();
    g.vertices.push(Vertex::Internal { order: count });
    let x = g.vertices.len();
    g.vertices.push(Vertex::External { color: ColorLabel::Valpha(color) });
    let head = g.edges[e].head;
    g.edges[e].head = v;
    let w = g.edges[e].grading;
    g.edges.push(Edge { tail: v, head, grading: w });
    let (tail, head) = if incoming { (x, v) } else { (v, x) };
    g.edges.push(Edge { tail, head, grading: Complex64::new(0.0, 0.0) });
}

/// Overwrite all gradings with a random 1-cycle: legs get the degree of
/// their color, each leg's flux is routed to a root along a spanning tree,
/// and every non-tree edge (and free loop) carries a random class.
pub fn assign_random_gradings<R: Rng>(ctx: &RootParams, g: &mut TrivalentGraph, rng: &mut R) -> Result<()> {
    let nv = g.vertices.len();
    let mut adj: Vec<Vec<(usize, usize, f64)>> = vec![Vec::new(); nv];
    for (i, e) in g.edges.iter().enumerate() {
        if g.is_internal_edge(e) {
            adj[e.tail].push((i, e.head, 1.0));
            adj[e.head].push((i, e.tail, -1.0));
        }
    }
    // parent[v] = (parent vertex, edge, +1 if the edge points parent → v)
    let mut parent: Vec<Option<(usize, usize, f64)>> = vec![None; nv];
    let mut seen = vec![false; nv];
    let mut tree = vec![false; g.edges.len()];
    for start in 0..nv {
        if seen[start] || !matches!(g.vertices[start], Vertex::Internal { .. }) {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &(e, w, s) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some((v, e, s));
                    tree[e] = true;
                    stack.push(w);
                }
            }
        }
    }
    let path = |mut v: usize| {
        let mut out = Vec::new();
        while let Some((u, e, s)) = parent[v] {
            out.push((e, s));
            v = u;
        }
        out
    };
    let mut val = vec![Complex64::new(0.0, 0.0); g.edges.len()];
    for (i, e) in g.edges.iter().enumerate() {
        if g.is_internal_edge(e) && !tree[i] {
            let z = Complex64::new(rng.random_range(-3.0..3.0), rng.random_range(-0.3..0.3));
            val[i] += z;
            for (f, s) in path(e.tail) {
                val[f] += z * s;
            }
            for (f, s) in path(e.head) {
                val[f] -= z * s;
            }
        }
    }
    for (i, e) in g.edges.iter().enumerate() {
        if g.is_internal_edge(e) {
            continue;
        }
        let (color, v, inflow) = match (&g.vertices[e.tail], &g.vertices[e.head]) {
            (Vertex::External { color }, _) => (color, e.head, 1.0),
            (_, Vertex::External { color }) => (color, e.tail, -1.0),
            _ => unreachable!(),
        };
        let w = color.degree(ctx).0;
        val[i] = w;
        // Carry the leg's flux from v down the tree to the root.
        for (f, s) in path(v) {
            val[f] -= w * (inflow * s);
        }
    }
    for (e, v) in g.edges.iter_mut().zip(val) {
        e.grading = v;
    }
    for l in g.loops.iter_mut() {
        *l = Complex64::new(rng.random_range(-3.0..3.0), rng.random_range(-0.3..0.3));
    }
    g.validate(ctx)
}

/// True when every internal edge and loop has a nonintegral grading.
pub fn is_generic(ctx: &RootParams, g: &TrivalentGraph) -> bool {
    let ok = |w: Complex64| !Degree(w).is_integral(ctx.epsilon_int.max(1e-6));
    g.edges.iter().filter(|e| g.is_internal_edge(e)).all(|e| ok(e.grading)) && g.loops.iter().all(|w| ok(*w))
}

/// The reference spine of genus `g` with random generic gradings.
pub fn generic_reference<R: Rng>(ctx: &RootParams, g: usize, rng: &mut R) -> Result<TrivalentGraph> {
    let mut graph = reference(g);
    for _ in 0..100 {
        assign_random_gradings(ctx, &mut graph, rng)?;
        if is_generic(ctx, &graph) {
            return Ok(graph);
        }
    }
    Err(Error::NonGeneric("could not draw generic gradings".into()))
}

/// Random leg colors whose signed degrees sum to an even integer.
fn leg_colors<R: Rng>(ctx: &RootParams, n: usize, rng: &mut R) -> Option<Vec<(Complex64, bool)>> {
    let r = ctx.r() as f64;
    match n {
        0 => Some(Vec::new()),
        1 => {
            // A lone leg needs an even degree, so its color lies in rℤ.
            if ctx.is_odd() {
                let m = rng.random_range(-1..=1) as f64;
                Some(vec![(Complex64::new(m * r, 0.0), rng.random_bool(0.5))])
            } else {
                None
            }
        }
        _ => {
            let a = Complex64::new(rng.random_range(-2.0..2.0), rng.random_range(-0.2..0.2));
            let (sa, sb) = (rng.random_bool(0.5), rng.random_bool(0.5));
            let sign = |s: bool| if s { 1.0 } else { -1.0 };
            let m = rng.random_range(-2..=2) as f64;
            let b = (2.0 * m - (a + r - 1.0) * sign(sa)) / sign(sb) - (r - 1.0);
            if !ctx.in_cdot(a) || !ctx.in_cdot(b) {
                return None;
            }
            Some(vec![(a, sa), (b, sb)])
        }
    }
}

/// A random connected generic decorated graph of genus at most
/// `max_genus` with at most `max_legs` legs.
pub fn random_generic<R: Rng>(ctx: &RootParams, max_genus: usize, max_legs: usize, rng: &mut R) -> TrivalentGraph {
    loop {
        let genus = rng.random_range(1..=max_genus.max(1));
        let legs = rng.random_range(0..=max_legs.min(2));
        let Some(colors) = leg_colors(ctx, legs, rng) else { continue };
        let mut g = match genus {
            1 => circle(Complex64::new(0.0, 0.0)),
            2 => [theta(), dumbbell(), necklace(2)][rng.random_range(0..3)].clone(),
            _ => [necklace(genus), k4()][rng.random_range(0..2)].clone(),
        };
        if !colors.is_empty() && !g.loops.is_empty() {
            let n = rng.random_range(1..=2);
            open_circle(&mut g, n);
        }
        for (c, incoming) in colors {
            let internal: Vec<usize> = (0..g.edges.len()).filter(|&i| g.is_internal_edge(&g.edges[i])).collect();
            let e = internal[rng.random_range(0..internal.len())];
            attach_leg(&mut g, e, c, incoming);
        }
        if assign_random_gradings(ctx, &mut g, rng).is_ok() && is_generic(ctx, &g) {
            return g;
        }
    }
}
