//! Triangle matchings, connected-triangle-matching witnesses, their verifier,
//! an exact brute-force oracle, and the monochromatic `nK3` finders.
//!
//! The verifier is the trust anchor of the crate: it recomputes everything
//! from the raw coloring and never believes metadata carried by a witness.

use crate::error::{contradiction, precondition, Result};
use crate::graph::{Color, ColoredGraph};

/// `n` pairwise vertex-disjoint triangles, all edges one color.
/// Connectivity is *not* implied; that is [`CtmWitness`]'s job.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleMatching {
    pub color: Color,
    /// Each triple sorted ascending.
    pub triangles: Vec<[usize; 3]>,
}

impl TriangleMatching {
    pub fn new(color: Color, mut triangles: Vec<[usize; 3]>) -> Self {
        for t in &mut triangles {
            t.sort_unstable();
        }
        TriangleMatching { color, triangles }
    }

    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    /// All vertices, ascending.
    pub fn vertices(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.triangles.iter().flatten().copied().collect();
        vs.sort_unstable();
        vs
    }

    /// Checks range, non-degeneracy, disjointness and edge colors against a
    /// host graph (everything except connectivity).
    pub fn check_in(&self, g: &ColoredGraph) -> std::result::Result<(), Violation> {
        check_triangles(g, self.color, &self.triangles)
    }
}

/// A triangle matching plus the index of the color component that contains
/// it, making it a connected `c(nK3)` certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CtmWitness {
    pub tm: TriangleMatching,
    /// Index into `g.components(tm.color)`. Advisory: verification recomputes
    /// the decomposition rather than trusting this field.
    pub component_id: usize,
}

impl CtmWitness {
    /// Wraps a triangle matching, locating the component of its first vertex.
    pub fn locate(g: &ColoredGraph, tm: TriangleMatching) -> CtmWitness {
        let component_id = tm
            .triangles
            .first()
            .and_then(|t| g.components(tm.color).component_of(t[0]))
            .unwrap_or(0);
        CtmWitness { tm, component_id }
    }
}

/// Machine-readable reason a witness was rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    VertexRange { v: usize },
    DegenerateTriangle { triangle: [usize; 3] },
    WitnessColor,
    Count { have: usize, need: usize },
    Disjointness { v: usize },
    EdgeColor { u: usize, v: usize, expected: Color, found: Color },
    Connectivity,
}

impl Violation {
    /// Stable short code, used verbatim by the command-line surface.
    pub fn code(&self) -> &'static str {
        match self {
            Violation::VertexRange { .. } => "vertex-range",
            Violation::DegenerateTriangle { .. } => "degenerate-triangle",
            Violation::WitnessColor => "witness-color",
            Violation::Count { .. } => "count",
            Violation::Disjointness { .. } => "disjointness",
            Violation::EdgeColor { .. } => "edge-color",
            Violation::Connectivity => "connectivity",
        }
    }
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::VertexRange { v } => write!(f, "vertex-range: vertex {v} out of range"),
            Violation::DegenerateTriangle { triangle } => {
                write!(f, "degenerate-triangle: {triangle:?} repeats a vertex")
            }
            Violation::WitnessColor => write!(f, "witness-color: witness color must be Red or Blue"),
            Violation::Count { have, need } => {
                write!(f, "count: witness has {have} triangles, needs at least {need}")
            }
            Violation::Disjointness { v } => {
                write!(f, "disjointness: vertex {v} appears in two triangles")
            }
            Violation::EdgeColor {
                u,
                v,
                expected,
                found,
            } => write!(f, "edge-color: edge ({u},{v}) is {found}, expected {expected}"),
            Violation::Connectivity => {
                write!(f, "connectivity: triangles span more than one component")
            }
        }
    }
}

fn check_triangles(
    g: &ColoredGraph,
    color: Color,
    triangles: &[[usize; 3]],
) -> std::result::Result<(), Violation> {
    if color == Color::White {
        return Err(Violation::WitnessColor);
    }
    let mut seen = vec![false; g.n_vertices()];
    for t in triangles {
        for &v in t {
            if v >= g.n_vertices() {
                return Err(Violation::VertexRange { v });
            }
        }
        if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
            return Err(Violation::DegenerateTriangle { triangle: *t });
        }
        for &v in t {
            if seen[v] {
                return Err(Violation::Disjointness { v });
            }
            seen[v] = true;
        }
        for (u, v) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            let found = g.color(u, v);
            if found != color {
                return Err(Violation::EdgeColor {
                    u,
                    v,
                    expected: color,
                    found,
                });
            }
        }
    }
    Ok(())
}

/// Checks that `w` certifies a monochromatic `c(nK3)` in `g`: at least `n`
/// disjoint triangles of `w.tm.color`, all vertices inside one connected
/// component of that color class. Components are recomputed; the witness's
/// `component_id` is never trusted. Witnesses with more than `n` triangles
/// are accepted.
pub fn verify_ctm(
    g: &ColoredGraph,
    w: &CtmWitness,
    n: usize,
) -> std::result::Result<(), Violation> {
    check_triangles(g, w.tm.color, &w.tm.triangles)?;
    if w.tm.len() < n {
        return Err(Violation::Count {
            have: w.tm.len(),
            need: n,
        });
    }
    if n > 0 {
        let decomp = g.components(w.tm.color);
        let home = decomp.component_of(w.tm.triangles[0][0]);
        for t in &w.tm.triangles {
            for &v in t {
                if decomp.component_of(v) != home {
                    return Err(Violation::Connectivity);
                }
            }
        }
    }
    Ok(())
}

/// Lexicographically first color-`c` triangle among `avail` (ascending).
pub(crate) fn first_triangle(g: &ColoredGraph, c: Color, avail: &[usize]) -> Option<[usize; 3]> {
    for (i, &a) in avail.iter().enumerate() {
        for (j, &b) in avail.iter().enumerate().skip(i + 1) {
            if !g.is(a, b, c) {
                continue;
            }
            for &x in avail.iter().skip(j + 1) {
                if g.is(a, x, c) && g.is(b, x, c) {
                    return Some([a, b, x]);
                }
            }
        }
    }
    None
}

/// Greedy maximal packing: repeatedly removes the lexicographically first
/// color-`c` triangle. On return the leftover spans no color-`c` triangle.
pub(crate) fn greedy_triangle_packing(
    g: &ColoredGraph,
    c: Color,
    within: &[usize],
) -> (Vec<[usize; 3]>, Vec<usize>) {
    let mut avail: Vec<usize> = within.to_vec();
    let mut packing = Vec::new();
    while let Some(t) = first_triangle(g, c, &avail) {
        avail.retain(|v| !t.contains(v));
        packing.push(t);
    }
    (packing, avail)
}

/// Exhaustive search for `n` disjoint color-`c` triangles inside `within`.
/// Triangles are enumerated lexicographically over sorted vertex ids and the
/// first complete set found is returned, so results are reproducible.
pub(crate) fn exact_triangle_matching(
    g: &ColoredGraph,
    c: Color,
    n: usize,
    within: &[usize],
) -> Option<Vec<[usize; 3]>> {
    if within.len() < 3 * n {
        return None;
    }
    let mut active = vec![true; within.len()];
    let mut remaining = within.len();
    let mut acc = Vec::with_capacity(n);
    if search_triangles(g, c, within, &mut active, &mut remaining, n, &mut acc) {
        Some(acc)
    } else {
        None
    }
}

fn search_triangles(
    g: &ColoredGraph,
    c: Color,
    order: &[usize],
    active: &mut [bool],
    remaining: &mut usize,
    need: usize,
    acc: &mut Vec<[usize; 3]>,
) -> bool {
    if need == 0 {
        return true;
    }
    if *remaining < 3 * need {
        return false;
    }
    let ai = (0..order.len()).find(|&i| active[i]).expect("remaining > 0");
    let a = order[ai];
    // Branch 1: every triangle through `a`, lexicographically.
    for bi in (ai + 1)..order.len() {
        if !active[bi] || !g.is(a, order[bi], c) {
            continue;
        }
        for ci in (bi + 1)..order.len() {
            if !active[ci] || !g.is(a, order[ci], c) || !g.is(order[bi], order[ci], c) {
                continue;
            }
            active[ai] = false;
            active[bi] = false;
            active[ci] = false;
            *remaining -= 3;
            acc.push([a, order[bi], order[ci]]);
            if search_triangles(g, c, order, active, remaining, need - 1, acc) {
                return true;
            }
            acc.pop();
            active[ai] = true;
            active[bi] = true;
            active[ci] = true;
            *remaining += 3;
        }
    }
    // Branch 2: `a` sits in no triangle of the packing.
    active[ai] = false;
    *remaining -= 1;
    let found = search_triangles(g, c, order, active, remaining, need, acc);
    active[ai] = true;
    *remaining += 1;
    found
}

/// Exhaustive backtracking for a color-`c` connected triangle matching of
/// size `n`, restricted to each color-`c` component separately. Exact: the
/// result is `None` only when no such witness exists anywhere in `g`.
pub fn oracle_has_ctm(g: &ColoredGraph, c: Color, n: usize) -> Option<CtmWitness> {
    let decomp = g.components(c);
    for (component_id, comp) in decomp.components.iter().enumerate() {
        if comp.len() / 3 < n {
            continue; // a component holds at most |comp|/3 disjoint triangles
        }
        if let Some(triangles) = exact_triangle_matching(g, c, n, comp) {
            return Some(CtmWitness {
                tm: TriangleMatching::new(c, triangles),
                component_id,
            });
        }
    }
    None
}

/// True iff some color-`c` component contains a matching of size `n`.
pub fn has_connected_matching(g: &ColoredGraph, c: Color, n: usize) -> bool {
    if n == 0 {
        return true;
    }
    g.components(c)
        .components
        .iter()
        .any(|comp| comp.len() >= 2 * n && g.maximum_matching(c, comp).len() >= n)
}

/// Greedy phase shared by the monochromatic finders: pack Blue maximally,
/// then pack Red maximally in the remainder. Returns whichever color reached
/// `n` triangles, or `None` when both stalled below.
fn greedy_blue_then_red(g: &ColoredGraph, within: &[usize], n: usize) -> Option<TriangleMatching> {
    let (blue, rest) = greedy_triangle_packing(g, Color::Blue, within);
    if blue.len() >= n {
        return Some(TriangleMatching::new(Color::Blue, blue));
    }
    let (red, _) = greedy_triangle_packing(g, Color::Red, &rest);
    if red.len() >= n {
        return Some(TriangleMatching::new(Color::Red, red));
    }
    None
}

/// Monochromatic triangle matching of size at least `n` in a 2-colored
/// complete graph on at least `5n` vertices.
///
/// On `6n` or more vertices, two greedy maximal packings suffice: if both
/// stalled below `n`, at least six untouched vertices would remain with no
/// monochromatic triangle, impossible in a 2-colored complete graph. Between
/// `5n` and `6n - 1` vertices the finder falls back to exact backtracking,
/// whose success is what the `5n` threshold guarantees.
pub fn find_mono_triangle_matching(g: &ColoredGraph, n: usize) -> Result<TriangleMatching> {
    require_white_free(g)?;
    if n < 2 {
        return Err(precondition(format!("n={n} < 2")));
    }
    let nv = g.n_vertices();
    if nv < 5 * n {
        return Err(precondition(format!("|V|={nv} < 5n={}", 5 * n)));
    }
    find_mono_in(g, &g.vertices(), n)
}

pub(crate) fn find_mono_in(
    g: &ColoredGraph,
    within: &[usize],
    n: usize,
) -> Result<TriangleMatching> {
    if within.len() >= 6 * n {
        return greedy_blue_then_red(g, within, n).ok_or_else(|| {
            contradiction(format!(
                "both greedy packings stalled below n={n} on {} vertices >= 6n",
                within.len()
            ))
        });
    }
    for c in [Color::Blue, Color::Red] {
        if let Some(triangles) = exact_triangle_matching(g, c, n, within) {
            return Ok(TriangleMatching::new(c, triangles));
        }
    }
    Err(contradiction(format!(
        "no monochromatic {n}K3 in a 2-colored complete graph on {} >= 5n vertices",
        within.len()
    )))
}

/// Perturbed variant: graphs may miss up to `t - 1` edges per vertex (White),
/// and `6n - 2 + 5t` vertices make the two greedy packings sufficient on
/// their own; there is no exact fallback.
pub fn find_mono_triangle_matching_perturbed(
    g: &ColoredGraph,
    n: usize,
    t: usize,
) -> Result<TriangleMatching> {
    if n < 2 {
        return Err(precondition(format!("n={n} < 2")));
    }
    if t < 1 || t > n {
        return Err(precondition(format!("t={t} outside 1..=n (n={n})")));
    }
    let need = 6 * n - 2 + 5 * t;
    if g.n_vertices() < need {
        return Err(precondition(format!(
            "|V|={} < 6n-2+5t={need}",
            g.n_vertices()
        )));
    }
    require_max_white_degree_below(g, t)?;
    find_mono_perturbed_in(g, &g.vertices(), n, t)
}

pub(crate) fn find_mono_perturbed_in(
    g: &ColoredGraph,
    within: &[usize],
    n: usize,
    t: usize,
) -> Result<TriangleMatching> {
    greedy_blue_then_red(g, within, n).ok_or_else(|| {
        contradiction(format!(
            "both greedy packings stalled below n={n} on {} vertices >= 6n-2+5t (t={t})",
            within.len()
        ))
    })
}

pub(crate) fn require_white_free(g: &ColoredGraph) -> Result<()> {
    if g.is_white_free() {
        Ok(())
    } else {
        Err(precondition(
            "graph contains White edges; 2-colored input required".to_string(),
        ))
    }
}

pub(crate) fn require_max_white_degree_below(g: &ColoredGraph, t: usize) -> Result<()> {
    let max_wd = g.white_profile().max_white_degree;
    if t == 0 {
        if max_wd > 0 {
            return Err(precondition(format!(
                "t=0 requires no White edges, max white degree={max_wd}"
            )));
        }
        return Ok(());
    }
    if max_wd >= t {
        return Err(precondition(format!("max white degree={max_wd} >= t={t}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ColoredGraph;

    fn blocks_graph(red_blocks: &[usize], extra: usize) -> ColoredGraph {
        // Red inside each listed block, blue everywhere else; blocks are laid
        // out consecutively starting at vertex 0, extras appended.
        let mut bounds = vec![0usize];
        for &b in red_blocks {
            bounds.push(bounds.last().unwrap() + b);
        }
        let n = bounds.last().unwrap() + extra;
        let block_of = move |v: usize| bounds.windows(2).position(|w| w[0] <= v && v < w[1]);
        ColoredGraph::from_fn(n, false, move |u, v| match (block_of(u), block_of(v)) {
            (Some(a), Some(b)) if a == b => Color::Red,
            _ => Color::Blue,
        })
        .unwrap()
    }

    fn extremal_like(n: usize) -> ColoredGraph {
        blocks_graph(&[3 * n - 1, 3 * n - 1], n - 1)
    }

    #[test]
    fn verify_accepts_partition_of_all_red_k6() {
        let g = ColoredGraph::complete(6, Color::Red).unwrap();
        let w = CtmWitness::locate(
            &g,
            TriangleMatching::new(Color::Red, vec![[0, 1, 2], [3, 4, 5]]),
        );
        assert_eq!(verify_ctm(&g, &w, 2), Ok(()));
        // Overshoot is fine: two triangles also certify n = 1.
        assert_eq!(verify_ctm(&g, &w, 1), Ok(()));
    }

    #[test]
    fn verify_rejects_shared_vertex() {
        let g = ColoredGraph::complete(6, Color::Red).unwrap();
        let w = CtmWitness::locate(
            &g,
            TriangleMatching::new(Color::Red, vec![[0, 1, 2], [2, 3, 4]]),
        );
        assert_eq!(
            verify_ctm(&g, &w, 2).unwrap_err().code(),
            "disjointness"
        );
    }

    #[test]
    fn verify_rejects_cross_component_witness() {
        // Red triangles taken from the two different red blocks of the
        // lower-bound coloring cannot form a connected witness.
        let g = extremal_like(2);
        let w = CtmWitness::locate(
            &g,
            TriangleMatching::new(Color::Red, vec![[0, 1, 2], [5, 6, 7]]),
        );
        assert_eq!(verify_ctm(&g, &w, 2).unwrap_err(), Violation::Connectivity);
    }

    #[test]
    fn verify_rejects_wrong_color_and_range() {
        let g = ColoredGraph::complete(6, Color::Red).unwrap();
        let w = CtmWitness::locate(
            &g,
            TriangleMatching::new(Color::Blue, vec![[0, 1, 2], [3, 4, 5]]),
        );
        assert_eq!(verify_ctm(&g, &w, 2).unwrap_err().code(), "edge-color");

        let w = CtmWitness::locate(
            &g,
            TriangleMatching::new(Color::Red, vec![[0, 1, 99]]),
        );
        assert_eq!(verify_ctm(&g, &w, 1).unwrap_err().code(), "vertex-range");
    }

    #[test]
    fn oracle_finds_witness_in_all_red_k6() {
        let g = ColoredGraph::complete(6, Color::Red).unwrap();
        let w = oracle_has_ctm(&g, Color::Red, 2).expect("witness");
        assert_eq!(verify_ctm(&g, &w, 2), Ok(()));
        assert_eq!(w.tm.triangles, vec![[0, 1, 2], [3, 4, 5]]);
    }

    #[test]
    fn oracle_confirms_extremal_coloring_has_no_witness() {
        let g = extremal_like(2);
        assert!(oracle_has_ctm(&g, Color::Red, 2).is_none());
        assert!(oracle_has_ctm(&g, Color::Blue, 2).is_none());
    }

    #[test]
    fn oracle_confirms_sharpness_coloring_has_no_red_witness() {
        // Red K5 plus two vertices joined in blue: 7 vertices, no red 2K3.
        let g = blocks_graph(&[5], 2);
        assert!(oracle_has_ctm(&g, Color::Red, 2).is_none());
    }

    #[test]
    fn oracle_is_monotone_in_n() {
        let g = blocks_graph(&[7, 3], 2);
        for c in [Color::Red, Color::Blue] {
            let mut top = 0;
            for n in (0..=4).rev() {
                if oracle_has_ctm(&g, c, n).is_some() {
                    top = n;
                    break;
                }
            }
            for n in 0..=top {
                let w = oracle_has_ctm(&g, c, n).expect("monotone");
                assert_eq!(verify_ctm(&g, &w, n), Ok(()));
            }
        }
    }

    #[test]
    fn greedy_leaves_no_triangle_behind() {
        let g = blocks_graph(&[6, 5], 3);
        for c in [Color::Red, Color::Blue] {
            let (packing, rest) = greedy_triangle_packing(&g, c, &g.vertices());
            assert!(first_triangle(&g, c, &rest).is_none());
            TriangleMatching::new(c, packing).check_in(&g).unwrap();
        }
    }

    #[test]
    fn find_mono_on_all_blue_k10() {
        let g = ColoredGraph::complete(10, Color::Blue).unwrap();
        let tm = find_mono_triangle_matching(&g, 2).unwrap();
        assert_eq!(tm.color, Color::Blue);
        assert!(tm.len() >= 2);
        tm.check_in(&g).unwrap();
    }

    #[test]
    fn find_mono_prefers_the_only_available_color() {
        // Red = two disjoint K5s, blue = the complete bipartite complement,
        // which is triangle-free; the finder must come back red.
        let g = blocks_graph(&[5, 5], 0);
        assert!(oracle_has_ctm(&g, Color::Blue, 2).is_none());
        let tm = find_mono_triangle_matching(&g, 2).unwrap();
        assert_eq!(tm.color, Color::Red);
        tm.check_in(&g).unwrap();
    }

    #[test]
    fn find_mono_threshold_is_checked() {
        let g = ColoredGraph::complete(9, Color::Blue).unwrap();
        let err = find_mono_triangle_matching(&g, 2).unwrap_err();
        assert!(err.to_string().contains("|V|=9 < 5n=10"), "{err}");
    }

    #[test]
    fn find_mono_perturbed_all_red() {
        let g = ColoredGraph::from_fn(15, true, |_, _| Color::Red).unwrap();
        let tm = find_mono_triangle_matching_perturbed(&g, 2, 1).unwrap();
        assert_eq!(tm.color, Color::Red);
        assert!(tm.len() >= 2);
    }

    #[test]
    fn find_mono_perturbed_rejects_white_degree_at_t() {
        // White perfect matching on 14 of 15 vertices: max white degree is 1,
        // which is not strictly below t = 1.
        let g = ColoredGraph::from_fn(15, true, |u, v| {
            if v == u + 1 && u % 2 == 0 && v <= 13 {
                Color::White
            } else {
                Color::Red
            }
        })
        .unwrap();
        assert_eq!(g.white_profile().max_white_degree, 1);
        let err = find_mono_triangle_matching_perturbed(&g, 2, 1).unwrap_err();
        assert!(err.to_string().contains("max white degree=1 >= t=1"), "{err}");
    }

    #[test]
    fn has_connected_matching_examples() {
        let g = ColoredGraph::complete(4, Color::Red).unwrap();
        assert!(has_connected_matching(&g, Color::Red, 2));

        // Red = two disjoint edges: a red 2K2 exists but not connected.
        let g = ColoredGraph::from_fn(4, false, |u, v| {
            if (u, v) == (0, 1) || (u, v) == (2, 3) {
                Color::Red
            } else {
                Color::Blue
            }
        })
        .unwrap();
        assert!(!has_connected_matching(&g, Color::Red, 2));
        assert!(has_connected_matching(&g, Color::Red, 1));
        assert!(has_connected_matching(&g, Color::Blue, 2));
    }
}
