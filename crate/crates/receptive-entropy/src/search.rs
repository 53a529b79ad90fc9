//! Exact combinatorial kernels: maximum clique and minimum set cover, both
//! branch-and-bound with greedy fallbacks.
//!
//! Max separated set = max clique of the separation graph; min spanning set /
//! min subcover = set cover. Exactness is required for the oracle acceptance
//! tests, so the exact solvers run whenever the instance fits its budget and
//! the greedy results always carry their bound direction.

/// Fixed-capacity bitset over usize indices.
#[derive(Clone, PartialEq, Eq)]
pub struct BitSet {
    words: Vec<u64>,
    len: usize,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::new(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn subtract(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn is_subset_of(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection_count(&self, other: &BitSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn first_one(&self) -> Option<usize> {
        self.iter_ones().next()
    }
}

impl std::fmt::Debug for BitSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter_ones()).finish()
    }
}

/// Undirected graph as adjacency bitsets.
pub struct Graph {
    pub adj: Vec<BitSet>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![BitSet::new(n); n],
        }
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        if a != b {
            self.adj[a].insert(b);
            self.adj[b].insert(a);
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CliqueOutcome {
    pub size: usize,
    pub exact: bool,
}

/// Greedy maximal clique: highest-degree-first seed, then grow. A lower bound.
pub fn greedy_clique(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut best = 0;
    // a few seeds are enough for a useful bound; determinism by index order
    for &seed in order.iter().take(8) {
        let mut cand = BitSet::full(n);
        let mut size = 0usize;
        let mut v = seed;
        loop {
            size += 1;
            cand.intersect_with(&g.adj[v]);
            // next candidate: max degree within cand, ties by index
            let mut next = None;
            let mut best_deg = 0;
            for u in cand.iter_ones() {
                let d = g.adj[u].intersection_count(&cand);
                if next.is_none() || d > best_deg {
                    next = Some(u);
                    best_deg = d;
                }
            }
            match next {
                Some(u) => v = u,
                None => break,
            }
        }
        best = best.max(size);
    }
    best
}

/// Exact maximum clique via branch and bound with greedy colouring bounds
/// (Tomita-style). Under `vertex_budget` vertices the result is exact;
/// otherwise the greedy lower bound is returned with `exact = false`.
pub fn max_clique(g: &Graph, vertex_budget: usize) -> CliqueOutcome {
    let n = g.n();
    if n == 0 {
        return CliqueOutcome {
            size: 0,
            exact: true,
        };
    }
    if n > vertex_budget {
        return CliqueOutcome {
            size: greedy_clique(g),
            exact: false,
        };
    }
    let mut best = greedy_clique(g);
    let full = BitSet::full(n);
    expand(g, &full, 0, &mut best);
    CliqueOutcome {
        size: best,
        exact: true,
    }
}

/// Greedy colouring of the candidate set; returns vertices sorted by colour
/// (ascending) paired with their colour number (1-based upper bound).
fn color_sort(g: &Graph, cand: &BitSet) -> Vec<(usize, usize)> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut uncolored: Vec<usize> = cand.iter_ones().collect();
    // higher-degree vertices first makes the bound tighter
    uncolored.sort_by_key(|&v| std::cmp::Reverse(g.adj[v].intersection_count(cand)));
    for v in uncolored {
        let mut placed = false;
        for class in classes.iter_mut() {
            if class.iter().all(|&u| !g.adj[v].contains(u)) {
                class.push(v);
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push(vec![v]);
        }
    }
    let mut out = Vec::with_capacity(cand.count());
    for (ci, class) in classes.iter().enumerate() {
        for &v in class {
            out.push((v, ci + 1));
        }
    }
    out
}

fn expand(g: &Graph, cand: &BitSet, size: usize, best: &mut usize) {
    let order = color_sort(g, cand);
    let mut cand = cand.clone();
    for &(v, color) in order.iter().rev() {
        if size + color <= *best {
            return; // colouring bound kills the rest (colours only shrink)
        }
        if size + 1 > *best {
            *best = size + 1;
        }
        let mut next = cand.clone();
        next.intersect_with(&g.adj[v]);
        if !next.is_empty() {
            expand(g, &next, size + 1, best);
        }
        cand.remove(v);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SetCoverOutcome {
    pub size: usize,
    pub exact: bool,
}

/// Greedy set cover (max coverage first, ties by set index). An upper bound.
pub fn greedy_set_cover(universe: usize, sets: &[BitSet]) -> Option<usize> {
    let mut uncovered = BitSet::full(universe);
    let mut picked = 0usize;
    while !uncovered.is_empty() {
        let mut best_set = None;
        let mut best_gain = 0usize;
        for (i, s) in sets.iter().enumerate() {
            let gain = s.intersection_count(&uncovered);
            if gain > best_gain {
                best_gain = gain;
                best_set = Some(i);
            }
        }
        let i = best_set?; // None: not coverable
        uncovered.subtract(&sets[i]);
        picked += 1;
    }
    Some(picked)
}

/// Exact minimum set cover via branch and bound with an expanded-node budget.
/// Branching picks the element with fewest candidate sets, so elements in a
/// single set are forced. On budget exhaustion the best value found so far is
/// returned with `exact = false` (an upper bound).
pub fn min_set_cover(universe: usize, sets: &[BitSet], node_budget: u64) -> Option<SetCoverOutcome> {
    // feasibility
    let mut all = BitSet::new(universe);
    for s in sets {
        all.union_with(s);
    }
    if all.count() < universe {
        return None;
    }
    let greedy = greedy_set_cover(universe, sets)?;
    let max_size = sets.iter().map(BitSet::count).max().unwrap_or(1).max(1);
    let mut best = greedy;
    let mut nodes = 0u64;
    let uncovered = BitSet::full(universe);
    let exact = cover_search(
        sets,
        &uncovered,
        0,
        &mut best,
        &mut nodes,
        node_budget,
        max_size,
    );
    Some(SetCoverOutcome { size: best, exact })
}

fn cover_search(
    sets: &[BitSet],
    uncovered: &BitSet,
    picked: usize,
    best: &mut usize,
    nodes: &mut u64,
    node_budget: u64,
    max_size: usize,
) -> bool {
    if uncovered.is_empty() {
        if picked < *best {
            *best = picked;
        }
        return true;
    }
    *nodes += 1;
    if *nodes > node_budget {
        return false;
    }
    // simple lower bound: remaining / largest set
    let lb = uncovered.count().div_ceil(max_size);
    if picked + lb >= *best {
        return true; // pruned, still exact
    }
    // branch on the uncovered element with fewest candidate sets
    let mut branch_elem = None;
    let mut branch_count = usize::MAX;
    for e in uncovered.iter_ones() {
        let c = sets.iter().filter(|s| s.contains(e)).count();
        if c < branch_count {
            branch_count = c;
            branch_elem = Some(e);
            if c <= 1 {
                break;
            }
        }
    }
    let e = branch_elem.expect("uncovered element exists");
    let mut candidates: Vec<usize> = (0..sets.len()).filter(|&i| sets[i].contains(e)).collect();
    if candidates.is_empty() {
        return true; // infeasible branch; exact
    }
    candidates.sort_by_key(|&i| std::cmp::Reverse(sets[i].intersection_count(uncovered)));
    let mut exact = true;
    for i in candidates {
        let mut next = uncovered.clone();
        next.subtract(&sets[i]);
        exact &= cover_search(sets, &next, picked + 1, best, nodes, node_budget, max_size);
        if !exact {
            break;
        }
    }
    exact
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph_from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::new(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    #[test]
    fn clique_small_graphs() {
        // triangle plus pendant
        let g = graph_from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]);
        assert_eq!(
            max_clique(&g, 1024),
            CliqueOutcome {
                size: 3,
                exact: true
            }
        );
        // empty graph
        let g = Graph::new(5);
        assert_eq!(max_clique(&g, 1024).size, 1);
        // complete graph
        let mut g = Graph::new(6);
        for a in 0..6 {
            for b in (a + 1)..6 {
                g.add_edge(a, b);
            }
        }
        assert_eq!(max_clique(&g, 1024).size, 6);
    }

    #[test]
    fn clique_complete_multipartite() {
        // 8 classes of size 4: clique number 8 (the separated-count shape)
        let classes = 8;
        let per = 4;
        let n = classes * per;
        let mut g = Graph::new(n);
        for a in 0..n {
            for b in (a + 1)..n {
                if a / per != b / per {
                    g.add_edge(a, b);
                }
            }
        }
        let r = max_clique(&g, 4096);
        assert_eq!(
            r,
            CliqueOutcome {
                size: classes,
                exact: true
            }
        );
        // greedy lower bound never exceeds the exact value
        assert!(greedy_clique(&g) <= classes);
    }

    #[test]
    fn set_cover_partition_instances() {
        // disjoint sets partitioning the universe: forced unique covers
        let universe = 12;
        let sets: Vec<BitSet> = (0..4)
            .map(|i| {
                let mut s = BitSet::new(universe);
                for e in (i * 3)..(i * 3 + 3) {
                    s.insert(e);
                }
                s
            })
            .collect();
        let r = min_set_cover(universe, &sets, 1 << 20).unwrap();
        assert_eq!(
            r,
            SetCoverOutcome {
                size: 4,
                exact: true
            }
        );
    }

    #[test]
    fn set_cover_overlapping() {
        let mk = |elems: &[usize]| {
            let mut s = BitSet::new(6);
            for &e in elems {
                s.insert(e);
            }
            s
        };
        let sets = vec![
            mk(&[0, 1, 2, 3]),
            mk(&[0, 1, 2]),
            mk(&[3, 4, 5]),
            mk(&[4, 5]),
        ];
        let r = min_set_cover(6, &sets, 1 << 20).unwrap();
        assert_eq!(r.size, 2);
        assert!(r.exact);
        let g = greedy_set_cover(6, &sets).unwrap();
        assert!(g >= r.size);
    }

    #[test]
    fn set_cover_infeasible() {
        let sets = vec![BitSet::new(3)];
        assert!(min_set_cover(3, &sets, 1 << 10).is_none());
    }

    #[test]
    fn exhaustive_cross_check_tiny() {
        // brute-force all subsets on pseudo-random small instances
        let mut seed = 0x243F6A88u64;
        let mut next = move || {
            seed = seed
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            seed >> 33
        };
        for _ in 0..50 {
            let universe = 8;
            let m = 6;
            let sets: Vec<BitSet> = (0..m)
                .map(|_| {
                    let mut s = BitSet::new(universe);
                    for e in 0..universe {
                        if next() % 3 == 0 {
                            s.insert(e);
                        }
                    }
                    s
                })
                .collect();
            let mut all = BitSet::new(universe);
            for s in &sets {
                all.union_with(s);
            }
            if all.count() < universe {
                continue;
            }
            // exhaustive minimum
            let mut exhaustive = usize::MAX;
            for mask in 1u32..(1 << m) {
                let mut u = BitSet::new(universe);
                for i in 0..m {
                    if mask >> i & 1 == 1 {
                        u.union_with(&sets[i]);
                    }
                }
                if u.count() == universe {
                    exhaustive = exhaustive.min(mask.count_ones() as usize);
                }
            }
            let r = min_set_cover(universe, &sets, 1 << 20).unwrap();
            assert!(r.exact);
            assert_eq!(r.size, exhaustive);
        }
    }
}
