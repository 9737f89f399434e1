//! Edge-colored complete graphs and their basic structure.
//!
//! A [`ColoredGraph`] assigns exactly one [`Color`] to every unordered pair of
//! distinct vertices. Two-colored graphs use `Red` and `Blue`; graphs built
//! with `allows_white = true` may additionally mark pairs `White`, which
//! models a missing edge in an otherwise complete graph. Vertices are `0`-based
//! integer ids and every set-valued output is sorted ascending, so all
//! operations are deterministic functions of their inputs.

use crate::error::{GraphError, Result};

/// Hard cap on the number of vertices; the color table is dense.
pub const MAX_VERTICES: usize = 4096;

/// Edge color. `White` stands for a missing edge and is only legal in graphs
/// constructed with `allows_white = true`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Blue,
    White,
}

impl Color {
    /// Swaps `Red` and `Blue`; `White` is fixed.
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
            Color::White => Color::White,
        }
    }

    /// One-letter tag used by the file format and diagnostics.
    pub fn letter(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
            Color::White => 'W',
        }
    }
}

impl std::fmt::Display for Color {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            Color::Red => "Red",
            Color::Blue => "Blue",
            Color::White => "White",
        };
        f.write_str(name)
    }
}

/// A complete graph on `n` vertices with one color per unordered pair.
///
/// Immutable after construction; cheap to share read-only across threads.
#[derive(Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    n: usize,
    allows_white: bool,
    // Upper-triangular table, pair (u,v) with u < v at
    // u*(2n-u-1)/2 + (v-u-1).
    colors: Box<[Color]>,
}

impl std::fmt::Debug for ColoredGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ColoredGraph")
            .field("n", &self.n)
            .field("allows_white", &self.allows_white)
            .finish_non_exhaustive()
    }
}

impl ColoredGraph {
    /// Builds a graph by asking `color_of(u, v)` for every pair `u < v`.
    pub fn from_fn<F>(n: usize, allows_white: bool, mut color_of: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> Color,
    {
        if n == 0 {
            return Err(GraphError::Empty.into());
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n, max: MAX_VERTICES }.into());
        }
        let mut colors = Vec::with_capacity(n * (n - 1) / 2);
        for u in 0..n {
            for v in (u + 1)..n {
                let c = color_of(u, v);
                if c == Color::White && !allows_white {
                    return Err(GraphError::WhiteNotAllowed { u, v }.into());
                }
                colors.push(c);
            }
        }
        Ok(ColoredGraph {
            n,
            allows_white,
            colors: colors.into_boxed_slice(),
        })
    }

    /// Monochromatic complete graph. `c` must be `Red` or `Blue`.
    pub fn complete(n: usize, c: Color) -> Result<Self> {
        Self::from_fn(n, false, |_, _| c)
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn allows_white(&self) -> bool {
        self.allows_white
    }

    /// All vertex ids, ascending.
    pub fn vertices(&self) -> Vec<usize> {
        (0..self.n).collect()
    }

    #[inline]
    fn index(&self, u: usize, v: usize) -> usize {
        debug_assert!(u != v && u < self.n && v < self.n);
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        a * (2 * self.n - a - 1) / 2 + (b - a - 1)
    }

    /// Color of the pair `{u, v}`. Panics on `u == v` or out-of-range ids.
    #[inline]
    pub fn color(&self, u: usize, v: usize) -> Color {
        self.colors[self.index(u, v)]
    }

    #[inline]
    pub fn is(&self, u: usize, v: usize, c: Color) -> bool {
        self.color(u, v) == c
    }

    /// True when the graph contains no White pair (regardless of the flag).
    pub fn is_white_free(&self) -> bool {
        !self.allows_white || self.colors.iter().all(|&c| c != Color::White)
    }

    /// Per-vertex White-edge counts and their maximum.
    pub fn white_profile(&self) -> WhiteDegreeProfile {
        let mut per_vertex = vec![0usize; self.n];
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.color(u, v) == Color::White {
                    per_vertex[u] += 1;
                    per_vertex[v] += 1;
                }
            }
        }
        let max_white_degree = per_vertex.iter().copied().max().unwrap_or(0);
        WhiteDegreeProfile {
            max_white_degree,
            per_vertex,
        }
    }

    /// Connected components of the color-`c` subgraph over all vertices.
    pub fn components(&self, c: Color) -> ComponentDecomposition {
        self.components_within(c, &self.vertices())
    }

    /// Components of the color-`c` subgraph induced on `within`.
    ///
    /// `within` must be sorted ascending. Components are ordered by
    /// decreasing size, ties broken by smallest contained vertex id.
    pub fn components_within(&self, c: Color, within: &[usize]) -> ComponentDecomposition {
        let comps = components_by(within, |u, v| self.is(u, v, c));
        ComponentDecomposition {
            color: c,
            components: comps,
        }
    }

    /// Maximum-cardinality matching in the color-`c` subgraph induced on
    /// `within` (sorted ascending). Exact, via blossom augmentation.
    pub fn maximum_matching(&self, c: Color, within: &[usize]) -> Matching {
        let edges = crate::blossom::maximum_matching_on(within, |u, v| self.is(u, v, c));
        Matching { color: c, edges }
    }
}

/// Per-vertex White-degree counts; perturbed algorithms require
/// `max_white_degree < t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhiteDegreeProfile {
    pub max_white_degree: usize,
    pub per_vertex: Vec<usize>,
}

/// Components of one color class, largest first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentDecomposition {
    pub color: Color,
    /// Pairwise disjoint, each sorted ascending, union = host vertex set.
    /// Ordered by decreasing size; ties by smallest contained vertex id.
    pub components: Vec<Vec<usize>>,
}

impl ComponentDecomposition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.len()).collect()
    }

    /// Index of the component containing `v`, if any.
    pub fn component_of(&self, v: usize) -> Option<usize> {
        self.components
            .iter()
            .position(|comp| comp.binary_search(&v).is_ok())
    }
}

/// A set of pairwise vertex-disjoint edges, all of one color.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pub color: Color,
    /// Each pair `(u, v)` with `u < v`; the list is sorted.
    pub edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// All matched vertices, ascending.
    pub fn vertices(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        vs.sort_unstable();
        vs
    }
}

/// Connected components of the graph on `within` induced by an adjacency
/// predicate. Shared by the 2/3-colored and the 4-colored graph types.
pub(crate) fn components_by<F>(within: &[usize], adjacent: F) -> Vec<Vec<usize>>
where
    F: Fn(usize, usize) -> bool,
{
    let mut comps: Vec<Vec<usize>> = Vec::new();
    let mut seen = vec![false; within.len()];
    for start in 0..within.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![within[start]];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..within.len() {
                if !seen[j] && adjacent(within[i], within[j]) {
                    seen[j] = true;
                    comp.push(within[j]);
                    stack.push(j);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    // Stable by construction: discovery order already breaks size ties by
    // smallest contained vertex.
    comps.sort_by_key(|c| std::cmp::Reverse(c.len()));
    comps
}
