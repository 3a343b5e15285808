//! Small library of standard diagrams.

use crate::error::{Error, Result};
use crate::repcat::ColorLabel;

use super::{CapKind, Component, CupKind, Slice, SlicedDiagram, Strand};

pub fn component(name: &str, color: ColorLabel, framing: Option<i64>) -> Component {
    Component {
        name: name.to_string(),
        color,
        framing,
    }
}

/// Round unknot, blackboard framing 0.
pub fn unknot(color: ColorLabel, framing: Option<i64>) -> SlicedDiagram {
    SlicedDiagram::closed(
        vec![component("K", color, framing)],
        vec![Slice::cup(0, 0, CupKind::Coev), Slice::cap(0, CapKind::EvPivotal)],
    )
    .expect("unknot typechecks")
}

/// Split unlink of round unknots side by side.
pub fn unlink(colors: &[ColorLabel]) -> SlicedDiagram {
    let components = colors
        .iter()
        .enumerate()
        .map(|(i, c)| component(&format!("K{i}"), c.clone(), None))
        .collect();
    let mut slices: Vec<Slice> = (0..colors.len())
        .map(|i| Slice::cup(2 * i, i, CupKind::Coev))
        .collect();
    slices.extend((0..colors.len()).map(|_| Slice::cap(0, CapKind::EvPivotal)));
    SlicedDiagram::closed(components, slices).expect("unlink typechecks")
}

/// Number of components of the closure of a braid word and the component of
/// each strand position.
pub fn closure_components(n: usize, word: &[(usize, i8)]) -> (usize, Vec<usize>) {
    let mut perm: Vec<usize> = (0..n).collect();
    for &(i, _) in word {
        perm.swap(i, i + 1);
    }
    // The strand starting at perm[p] ends at position p; closing joins p to p.
    let mut comp = vec![usize::MAX; n];
    let mut count = 0;
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut p = start;
        while comp[p] == usize::MAX {
            comp[p] = count;
            p = perm.iter().position(|&b| b == p).expect("permutation");
        }
        count += 1;
    }
    (count, comp)
}

/// Closure of a braid on `n` upward strands. `word` lists generators as
/// `(i, ±1)` acting on positions `i, i+1`; `colors` holds one color per
/// component, numbered by first strand.
pub fn braid_closure(n: usize, word: &[(usize, i8)], colors: &[ColorLabel]) -> Result<SlicedDiagram> {
    if word.iter().any(|&(i, _)| i + 1 >= n) {
        return Err(Error::Geometry("braid generator out of range".into()));
    }
    let (count, comp) = closure_components(n, word);
    if colors.len() != count {
        return Err(Error::Schema(format!(
            "braid closure has {count} components but {} colors were given",
            colors.len()
        )));
    }
    let components = colors
        .iter()
        .enumerate()
        .map(|(i, c)| component(&format!("K{i}"), c.clone(), None))
        .collect();
    let mut slices: Vec<Slice> = (0..n).map(|k| Slice::cup(k, comp[k], CupKind::Coev)).collect();
    slices.extend(word.iter().map(|&(i, s)| Slice::braid(i, s)));
    slices.extend((0..n).rev().map(|k| Slice::cap(k, CapKind::EvPivotal)));
    SlicedDiagram::closed(components, slices)
}

/// Set an explicit framing on every component.
pub fn with_framings(mut d: SlicedDiagram, framings: &[i64]) -> SlicedDiagram {
    for (c, f) in d.components.iter_mut().zip(framings) {
        c.framing = Some(*f);
    }
    d
}

/// Isotopic braid-closure diagrams of the trefoil (0-framed).
pub fn trefoil_variants(color: ColorLabel) -> Vec<(&'static str, SlicedDiagram)> {
    let words: [(&str, usize, Vec<(usize, i8)>); 4] = [
        ("s1^3", 2, vec![(0, 1), (0, 1), (0, 1)]),
        ("s1^3 s2", 3, vec![(0, 1), (0, 1), (0, 1), (1, 1)]),
        ("s1 s2 s1 s2", 3, vec![(0, 1), (1, 1), (0, 1), (1, 1)]),
        ("s2 s1^3 s2 s2^-1", 3, vec![(1, 1), (0, 1), (0, 1), (0, 1), (1, 1), (1, -1)]),
    ];
    words
        .into_iter()
        .map(|(name, n, w)| {
            let d = braid_closure(n, &w, std::slice::from_ref(&color)).expect("trefoil closure");
            (name, with_framings(d, &[0]))
        })
        .collect()
}

/// Isotopic braid-closure diagrams of the figure-eight knot (0-framed).
pub fn figure_eight_variants(color: ColorLabel) -> Vec<(&'static str, SlicedDiagram)> {
    let words: [(&str, usize, Vec<(usize, i8)>); 3] = [
        ("s1 s2^-1 s1 s2^-1", 3, vec![(0, 1), (1, -1), (0, 1), (1, -1)]),
        ("s2^-1 s1 s2^-1 s1", 3, vec![(1, -1), (0, 1), (1, -1), (0, 1)]),
        ("s1 s2^-1 s1 s2^-1 s3", 4, vec![(0, 1), (1, -1), (0, 1), (1, -1), (2, 1)]),
    ];
    words
        .into_iter()
        .map(|(name, n, w)| {
            let d = braid_closure(n, &w, std::slice::from_ref(&color)).expect("figure-eight closure");
            (name, with_framings(d, &[0]))
        })
        .collect()
}

/// Positive Hopf link as the closure of `σ1²`.
pub fn hopf(a: ColorLabel, b: ColorLabel) -> SlicedDiagram {
    braid_closure(2, &[(0, 1), (0, 1)], &[a, b]).expect("hopf closure")
}

/// Chain of unknots, consecutive ones linked once positively.
pub fn hopf_chain(colors: &[ColorLabel]) -> Result<SlicedDiagram> {
    let n = colors.len();
    let word: Vec<(usize, i8)> = (0..n.saturating_sub(1))
        .flat_map(|i| [(i, 1), (i, 1)])
        .collect();
    // Closure of σ1² σ2² … has n components, one per strand.
    braid_closure(n, &word, colors)
}

/// A single curl of the given sign on one upward strand, as a 1-1 tangle.
pub fn curl(color: ColorLabel, sign: i8) -> SlicedDiagram {
    SlicedDiagram::new(
        vec![component("K", color, None)],
        vec![Strand::up(0)],
        vec![
            Slice::cup(1, 0, CupKind::Coev),
            Slice::braid(0, sign),
            Slice::cap(1, CapKind::EvPivotal),
        ],
    )
    .expect("curl typechecks")
}

/// `(id ⊗ ev)(coev ⊗ id)` on one upward strand.
pub fn zigzag(color: ColorLabel) -> SlicedDiagram {
    SlicedDiagram::new(
        vec![component("K", color, None)],
        vec![Strand::up(0)],
        vec![Slice::cup(0, 0, CupKind::Coev), Slice::cap(1, CapKind::Ev)],
    )
    .expect("zigzag typechecks")
}
