//! Exact maximum-cardinality matching in general graphs.
//!
//! Blossom contraction over an alternating-forest BFS (Edmonds). The
//! extraction lemmas need true maximum matchings: their replacement argument
//! ("an edge endpoint with two blue neighbors outside the matching could be
//! swapped for two independent edges") is only valid under maximality with
//! respect to augmentation, so a maximal greedy matching is not enough.
//!
//! Graphs here are desk-scale (well under a hundred vertices), so the dense
//! O(V^3)-flavored formulation is plenty and keeps the code short.

use std::collections::VecDeque;

const NONE: usize = usize::MAX;

/// Maximum matching over the vertex ids in `within` (sorted ascending) under
/// `adjacent`. Returns edges `(u, v)` with `u < v`, sorted; deterministic.
pub(crate) fn maximum_matching_on<F>(within: &[usize], adjacent: F) -> Vec<(usize, usize)>
where
    F: Fn(usize, usize) -> bool,
{
    let k = within.len();
    let mate = maximum_matching_compact(k, |i, j| adjacent(within[i], within[j]));
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for i in 0..k {
        let j = mate[i];
        if j != NONE && i < j {
            edges.push((within[i], within[j]));
        }
    }
    edges.sort_unstable();
    edges
}

/// Core routine on compact indices `0..k`. Returns `mate` with `NONE` for
/// unmatched vertices.
fn maximum_matching_compact<F>(k: usize, adj: F) -> Vec<usize>
where
    F: Fn(usize, usize) -> bool,
{
    let mut mate = vec![NONE; k];
    // Greedy seed; the augmenting search below corrects it to optimal.
    for v in 0..k {
        if mate[v] != NONE {
            continue;
        }
        for u in (v + 1)..k {
            if mate[u] == NONE && adj(v, u) {
                mate[v] = u;
                mate[u] = v;
                break;
            }
        }
    }
    for root in 0..k {
        if mate[root] != NONE {
            continue;
        }
        if let Some(leaf) = find_augmenting_path(k, &adj, &mate, root) {
            augment(&mut mate, &leaf.parents, leaf.exposed);
        }
    }
    mate
}

struct AugmentingPath {
    parents: Vec<usize>,
    exposed: usize,
}

fn augment(mate: &mut [usize], parents: &[usize], mut v: usize) {
    while v != NONE {
        let pv = parents[v];
        let next = mate[pv];
        mate[v] = pv;
        mate[pv] = v;
        v = next;
    }
}

/// BFS from an exposed `root`, contracting blossoms via the `base` array.
/// Returns the exposed endpoint of an augmenting path, if one exists.
fn find_augmenting_path<F>(
    k: usize,
    adj: &F,
    mate: &[usize],
    root: usize,
) -> Option<AugmentingPath>
where
    F: Fn(usize, usize) -> bool,
{
    let mut parents = vec![NONE; k];
    let mut base: Vec<usize> = (0..k).collect();
    let mut used = vec![false; k];
    let mut queue = VecDeque::new();
    used[root] = true;
    queue.push_back(root);

    while let Some(v) = queue.pop_front() {
        for to in 0..k {
            if to == v || !adj(v, to) {
                continue;
            }
            if base[v] == base[to] || mate[v] == to {
                continue;
            }
            if to == root || (mate[to] != NONE && parents[mate[to]] != NONE) {
                // Odd cycle through the root: contract it.
                let curbase = lca(&base, &parents, mate, v, to);
                let mut blossom = vec![false; k];
                mark_path(&mut parents, &base, mate, &mut blossom, v, curbase, to);
                mark_path(&mut parents, &base, mate, &mut blossom, to, curbase, v);
                for i in 0..k {
                    if blossom[base[i]] {
                        base[i] = curbase;
                        if !used[i] {
                            used[i] = true;
                            queue.push_back(i);
                        }
                    }
                }
            } else if parents[to] == NONE {
                parents[to] = v;
                if mate[to] == NONE {
                    return Some(AugmentingPath {
                        parents,
                        exposed: to,
                    });
                }
                used[mate[to]] = true;
                queue.push_back(mate[to]);
            }
        }
    }
    None
}

fn lca(base: &[usize], parents: &[usize], mate: &[usize], a: usize, b: usize) -> usize {
    let mut on_path = vec![false; base.len()];
    let mut x = a;
    loop {
        x = base[x];
        on_path[x] = true;
        if mate[x] == NONE {
            break; // root
        }
        x = parents[mate[x]];
    }
    let mut y = b;
    loop {
        y = base[y];
        if on_path[y] {
            return y;
        }
        y = parents[mate[y]];
    }
}

fn mark_path(
    parents: &mut [usize],
    base: &[usize],
    mate: &[usize],
    blossom: &mut [bool],
    mut v: usize,
    until: usize,
    mut child: usize,
) {
    while base[v] != until {
        blossom[base[v]] = true;
        blossom[base[mate[v]]] = true;
        parents[v] = child;
        child = mate[v];
        v = parents[mate[v]];
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// Independent oracle: exhaustive branch on the first unmatched vertex.
    pub(crate) fn brute_force_max_matching<F>(k: usize, adj: &F) -> usize
    where
        F: Fn(usize, usize) -> bool,
    {
        fn rec<F: Fn(usize, usize) -> bool>(k: usize, adj: &F, used: &mut [bool]) -> usize {
            let Some(v) = (0..k).find(|&v| !used[v]) else {
                return 0;
            };
            used[v] = true;
            let mut best = rec(k, adj, used); // leave v unmatched
            for u in (v + 1)..k {
                if !used[u] && adj(v, u) {
                    used[u] = true;
                    best = best.max(1 + rec(k, adj, used));
                    used[u] = false;
                }
            }
            used[v] = false;
            best
        }
        rec(k, adj, &mut vec![false; k])
    }

    fn check_valid_matching(k: usize, adj: &dyn Fn(usize, usize) -> bool, mate: &[usize]) {
        for v in 0..k {
            if mate[v] != NONE {
                assert_eq!(mate[mate[v]], v);
                assert!(adj(v, mate[v]), "matched non-edge {}-{}", v, mate[v]);
            }
        }
    }

    fn matching_size(mate: &[usize]) -> usize {
        mate.iter().filter(|&&m| m != NONE).count() / 2
    }

    #[test]
    fn five_cycle_has_matching_two() {
        let adj = |u: usize, v: usize| (u + 1) % 5 == v || (v + 1) % 5 == u;
        let expected = brute_force_max_matching(5, &adj);
        assert_eq!(expected, 2);
        let mate = maximum_matching_compact(5, adj);
        check_valid_matching(5, &adj, &mate);
        assert_eq!(matching_size(&mate), expected);
    }

    #[test]
    fn petersen_graph_is_perfectly_matchable() {
        let edges = [
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0), // outer cycle
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5), // inner star
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9), // spokes
        ];
        let adj = |u: usize, v: usize| edges.contains(&(u, v)) || edges.contains(&(v, u));
        let mate = maximum_matching_compact(10, adj);
        check_valid_matching(10, &adj, &mate);
        assert_eq!(matching_size(&mate), 5);
    }

    #[test]
    fn matches_brute_force_on_all_small_graphs() {
        // Every graph on up to 5 vertices: C(5,2) = 10 possible edges.
        for k in 1..=5usize {
            let pairs: Vec<(usize, usize)> = (0..k)
                .flat_map(|u| ((u + 1)..k).map(move |v| (u, v)))
                .collect();
            for mask in 0u32..(1 << pairs.len()) {
                let adj = |u: usize, v: usize| {
                    let (a, b) = if u < v { (u, v) } else { (v, u) };
                    let i = pairs.iter().position(|&p| p == (a, b)).unwrap();
                    mask & (1 << i) != 0
                };
                let mate = maximum_matching_compact(k, adj);
                check_valid_matching(k, &adj, &mate);
                assert_eq!(
                    matching_size(&mate),
                    brute_force_max_matching(k, &adj),
                    "k={k} mask={mask:b}"
                );
            }
        }
    }

    #[test]
    fn matches_brute_force_on_random_graphs_up_to_ten() {
        // Deterministic pseudo-random family; blossom-rich odd structures
        // show up routinely at these densities.
        let mut state = 0x243F6A8885A308D3u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for trial in 0..400 {
            let k = 6 + (trial % 5); // 6..=10
            let mut table = vec![false; k * k];
            for u in 0..k {
                for v in (u + 1)..k {
                    let bit = next() % 100 < 45;
                    table[u * k + v] = bit;
                    table[v * k + u] = bit;
                }
            }
            let adj = |u: usize, v: usize| table[u * k + v];
            let mate = maximum_matching_compact(k, adj);
            check_valid_matching(k, &adj, &mate);
            assert_eq!(
                matching_size(&mate),
                brute_force_max_matching(k, &adj),
                "trial={trial} k={k}"
            );
        }
    }

    #[test]
    fn within_ids_are_mapped_back() {
        let within = [3, 5, 8, 13];
        let edges = maximum_matching_on(&within, |u, v| u + v == 16 || u + v == 13);
        // 3-13 and 5-8 form the unique perfect matching here.
        assert_eq!(edges, vec![(3, 13), (5, 8)]);
    }
}
