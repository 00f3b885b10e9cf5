//! Erdős–Rényi graph generation and combinatorial queries.
//!
//! Graphs are immutable after construction and stored in a compressed
//! adjacency layout (offset array + flat neighbor array, rows sorted
//! ascending), so adjacency tests are binary searches and all queries are
//! safe to run concurrently.

use crate::error::{Error, Result};
use crate::rng::{new_rng, RNG_ALGORITHM};
use rand_distr::{Distribution, Geometric};

/// Vertex identifier; ids are contiguous 0..n−1.
pub type Vertex = u32;

/// Generation parameters carried by generated graphs.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct GenMeta {
    pub n: usize,
    pub d: f64,
    pub seed: u64,
    /// Identifier of the random generator that produced the edges.
    pub rng: &'static str,
}

/// Ordered sequence of distinct vertex ids, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    /// Build from an already-sorted, duplicate-free id list.
    pub fn from_sorted(ids: Vec<Vertex>) -> Self {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        VertexSet(ids)
    }

    /// Build from arbitrary ids: sorts and removes duplicates.
    pub fn from_unsorted(mut ids: Vec<Vertex>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        VertexSet(ids)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: Vertex) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    /// True if every element of `self` is in `other`.
    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.iter().all(|x| other.contains(x))
    }

    /// Membership bitmap of length `n`.
    pub fn bitmap(&self, n: usize) -> Vec<bool> {
        let mut b = vec![false; n];
        for x in self.iter() {
            b[x as usize] = true;
        }
        b
    }

    /// Set difference `self ∖ other`.
    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&x| !other.contains(x)).collect())
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(ids: Vec<Vertex>) -> Self {
        VertexSet::from_unsorted(ids)
    }
}

/// Immutable undirected simple graph in a compressed adjacency layout.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<Vertex>,
    meta: Option<GenMeta>,
}

impl Graph {
    /// Sample G(n, d/n): every unordered pair is an edge independently with
    /// probability d/n. Deterministic for fixed (n, d, seed).
    ///
    /// Edges are drawn by geometric skip-sampling over the lexicographic
    /// stream of the C(n,2) pairs, so the expected cost is O(n + |E|)
    /// rather than O(n²).
    pub fn generate(n: usize, d: f64, seed: u64) -> Result<Graph> {
        if n == 0 {
            return Err(Error::Parameter("generate: n must be >= 1".into()));
        }
        if !(0.0..=n as f64).contains(&d) {
            return Err(Error::Parameter(format!("generate: d = {d} outside [0, n]")));
        }
        let p = d / n as f64;
        let meta = GenMeta { n, d, seed, rng: RNG_ALGORITHM };
        if p == 0.0 {
            return Ok(Graph { offsets: vec![0; n + 1], neighbors: Vec::new(), meta: Some(meta) });
        }
        let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
        let m = n as u64 * (n as u64 - 1) / 2;
        if p >= 1.0 {
            for u in 0..n as Vertex {
                for v in (u + 1)..n as Vertex {
                    edges.push((u, v));
                }
            }
        } else {
            let mut rng = new_rng(seed);
            let geo = Geometric::new(p).expect("0 < p < 1");
            // cursor walks the pair stream; (row, row_start) track the
            // current lexicographic row so index -> pair is amortized O(1)
            let mut cursor: u64 = 0;
            let mut row: u64 = 0;
            let mut row_start: u64 = 0;
            loop {
                let skip = geo.sample(&mut rng);
                cursor = match cursor.checked_add(skip) {
                    Some(c) => c,
                    None => break,
                };
                if cursor >= m {
                    break;
                }
                while cursor >= row_start + (n as u64 - 1 - row) {
                    row_start += n as u64 - 1 - row;
                    row += 1;
                }
                let v = row + 1 + (cursor - row_start);
                edges.push((row as Vertex, v as Vertex));
                cursor += 1;
            }
        }
        let mut g = Self::build(n, &edges);
        g.meta = Some(meta);
        Ok(g)
    }

    /// Build from an explicit edge list. Rejects self-loops, duplicate
    /// edges, and out-of-range ids.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph> {
        let mut canon: Vec<(Vertex, Vertex)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u as usize >= n || v as usize >= n {
                return Err(Error::Parameter(format!("from_edges: id out of range in ({u},{v})")));
            }
            if u == v {
                return Err(Error::Parameter(format!("from_edges: self-loop at {u}")));
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        if canon.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parameter("from_edges: duplicate edge".into()));
        }
        Ok(Self::build(n, &canon))
    }

    /// Assemble the compressed layout from canonical (u < v) edges sorted
    /// lexicographically.
    fn build(n: usize, edges: &[(Vertex, Vertex)]) -> Graph {
        let mut deg = vec![0usize; n];
        for &(u, v) in edges {
            deg[u as usize] += 1;
            deg[v as usize] += 1;
        }
        let mut offsets = vec![0usize; n + 1];
        for i in 0..n {
            offsets[i + 1] = offsets[i] + deg[i];
        }
        let mut fill = offsets.clone();
        let mut neighbors = vec![0 as Vertex; 2 * edges.len()];
        for &(u, v) in edges {
            neighbors[fill[u as usize]] = v;
            fill[u as usize] += 1;
            neighbors[fill[v as usize]] = u;
            fill[v as usize] += 1;
        }
        // lexicographic edge order fills each row ascending
        debug_assert!((0..n).all(|i| neighbors[offsets[i]..offsets[i + 1]].windows(2).all(|w| w[0] < w[1])));
        Graph { offsets, neighbors, meta: None }
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.len() / 2
    }

    pub fn meta(&self) -> Option<&GenMeta> {
        self.meta.as_ref()
    }

    pub fn degree(&self, x: Vertex) -> usize {
        self.offsets[x as usize + 1] - self.offsets[x as usize]
    }

    pub fn neighbors(&self, x: Vertex) -> &[Vertex] {
        &self.neighbors[self.offsets[x as usize]..self.offsets[x as usize + 1]]
    }

    pub fn has_edge(&self, x: Vertex, y: Vertex) -> bool {
        self.neighbors(x).binary_search(&y).is_ok()
    }

    /// Canonical edge list (u < v), ascending lexicographic.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() as Vertex {
            for &v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    fn check_vertex(&self, x: Vertex) -> Result<()> {
        if (x as usize) < self.n() {
            Ok(())
        } else {
            Err(Error::Parameter(format!("vertex {x} out of range (n = {})", self.n())))
        }
    }

    /// BFS distances from `x`; `u32::MAX` marks unreachable vertices.
    pub fn bfs_distances(&self, x: Vertex) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.n()];
        dist[x as usize] = 0;
        let mut queue = std::collections::VecDeque::from([x]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            for &v in self.neighbors(u) {
                if dist[v as usize] == u32::MAX {
                    dist[v as usize] = du + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// BFS restricted to depth ≤ `r`, returning (vertex, distance) pairs in
    /// discovery order.
    fn bfs_to_depth(&self, x: Vertex, r: u32) -> Vec<(Vertex, u32)> {
        let mut seen = vec![false; self.n()];
        seen[x as usize] = true;
        let mut out = vec![(x, 0u32)];
        let mut head = 0;
        while head < out.len() {
            let (u, du) = out[head];
            head += 1;
            if du == r {
                continue;
            }
            for &v in self.neighbors(u) {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    out.push((v, du + 1));
                }
            }
        }
        out
    }

    /// Closed ball B_r(x) = {y : d(x,y) ≤ r}.
    pub fn ball(&self, x: Vertex, r: u32) -> Result<VertexSet> {
        self.check_vertex(x)?;
        let mut ids: Vec<Vertex> = self.bfs_to_depth(x, r).into_iter().map(|(v, _)| v).collect();
        ids.sort_unstable();
        Ok(VertexSet::from_sorted(ids))
    }

    /// Sphere S_r(x) = {y : d(x,y) = r}.
    pub fn sphere(&self, x: Vertex, r: u32) -> Result<VertexSet> {
        self.check_vertex(x)?;
        let mut ids: Vec<Vertex> = self
            .bfs_to_depth(x, r)
            .into_iter()
            .filter(|&(_, d)| d == r)
            .map(|(v, _)| v)
            .collect();
        ids.sort_unstable();
        Ok(VertexSet::from_sorted(ids))
    }

    /// All spheres S_0(x), …, S_{r−1}(x) from a single BFS.
    pub fn spheres(&self, x: Vertex, r: u32) -> Result<Vec<VertexSet>> {
        self.check_vertex(x)?;
        if r == 0 {
            return Ok(Vec::new());
        }
        let mut layers: Vec<Vec<Vertex>> = vec![Vec::new(); r as usize];
        for (v, d) in self.bfs_to_depth(x, r - 1) {
            layers[d as usize].push(v);
        }
        Ok(layers
            .into_iter()
            .map(|mut l| {
                l.sort_unstable();
                VertexSet::from_sorted(l)
            })
            .collect())
    }

    /// Normalized degrees α_x = degree(x)/d.
    pub fn normalized_degrees(&self, d: f64) -> Result<Vec<f64>> {
        if !(d > 0.0) {
            return Err(Error::Parameter(format!("normalized_degrees: d = {d} <= 0")));
        }
        Ok((0..self.n()).map(|x| self.degree(x as Vertex) as f64 / d).collect())
    }

    /// True iff the induced subgraph on B_r(x) is a tree (connected and
    /// acyclic). The ball is connected by construction, so this reduces to
    /// an internal edge count of |B_r(x)| − 1.
    pub fn is_tree_ball(&self, x: Vertex, r: u32) -> Result<bool> {
        self.check_vertex(x)?;
        let ball = self.ball(x, r)?;
        let inside = ball.bitmap(self.n());
        let mut internal = 0usize;
        for u in ball.iter() {
            for &v in self.neighbors(u) {
                if v > u && inside[v as usize] {
                    internal += 1;
                }
            }
        }
        Ok(internal == ball.len() - 1)
    }

    /// Largest connected component; ties broken by smallest contained id.
    pub fn giant_component(&self) -> VertexSet {
        let n = self.n();
        let mut comp = vec![usize::MAX; n];
        let mut best: Option<(usize, usize)> = None; // (size, first id)
        let mut c = 0;
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let mut size = 0usize;
            let mut queue = std::collections::VecDeque::from([s as Vertex]);
            comp[s] = c;
            while let Some(u) = queue.pop_front() {
                size += 1;
                for &v in self.neighbors(u) {
                    if comp[v as usize] == usize::MAX {
                        comp[v as usize] = c;
                        queue.push_back(v);
                    }
                }
            }
            // first id of component c is s (smallest unvisited); larger size
            // wins, equal size keeps the earlier (smaller first id) component
            if best.is_none_or(|(bs, _)| size > bs) {
                best = Some((size, c));
            }
            c += 1;
        }
        let target = best.map(|(_, c)| c).unwrap_or(0);
        VertexSet::from_sorted(
            (0..n).filter(|&v| comp[v] == target).map(|v| v as Vertex).collect(),
        )
    }

    /// Diameter of the giant component.
    ///
    /// `exact = true` runs the iFUB refinement (exact result: double sweep,
    /// then eccentricities level by level until the bound closes);
    /// `exact = false` returns the double-sweep lower bound, which never
    /// exceeds the exact value.
    pub fn diameter(&self, exact: bool) -> Result<usize> {
        if self.n() == 0 {
            return Err(Error::Parameter("diameter: empty graph".into()));
        }
        let giant = self.giant_component();
        if giant.len() <= 1 {
            return Ok(0);
        }
        // double sweep from the max-degree vertex of the giant component
        let start = giant
            .iter()
            .max_by_key(|&v| (self.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let d1 = self.bfs_distances(start);
        let a = argmax_dist(&d1);
        let d2 = self.bfs_distances(a);
        let b = argmax_dist(&d2);
        let mut lb = d2[b as usize] as usize;
        if !exact {
            return Ok(lb);
        }
        // iFUB rooted at the midpoint of the a-b geodesic
        let mid = self.geodesic_midpoint(a, b, &d2);
        let dm = self.bfs_distances(mid);
        let ecc_mid = dm.iter().filter(|&&d| d != u32::MAX).max().copied().unwrap_or(0) as usize;
        lb = lb.max(ecc_mid);
        let mut levels: Vec<Vec<Vertex>> = vec![Vec::new(); ecc_mid + 1];
        for v in giant.iter() {
            let d = dm[v as usize];
            if d != u32::MAX {
                levels[d as usize].push(v);
            }
        }
        let mut i = ecc_mid;
        while i >= 1 && lb < 2 * i {
            for &v in &levels[i] {
                let dv = self.bfs_distances(v);
                let ecc = dv.iter().filter(|&&d| d != u32::MAX).max().copied().unwrap_or(0);
                lb = lb.max(ecc as usize);
            }
            i -= 1;
        }
        Ok(lb)
    }

    /// Vertex halfway along a shortest a–b path, given BFS distances from a.
    fn geodesic_midpoint(&self, a: Vertex, b: Vertex, dist_a: &[u32]) -> Vertex {
        let total = dist_a[b as usize];
        let mut cur = b;
        // walk from b towards a until half distance remains
        while dist_a[cur as usize] > total / 2 {
            let next = self
                .neighbors(cur)
                .iter()
                .copied()
                .find(|&w| dist_a[w as usize] + 1 == dist_a[cur as usize]);
            match next {
                Some(w) => cur = w,
                None => break,
            }
        }
        let _ = a;
        cur
    }
}

fn argmax_dist(dist: &[u32]) -> Vertex {
    let mut best = 0;
    let mut best_d = 0u32;
    for (v, &d) in dist.iter().enumerate() {
        if d != u32::MAX && d > best_d {
            best_d = d;
            best = v;
        }
    }
    best as Vertex
}

/// Write the edge-list text format: a `# n=<n> d=<d> seed=<seed>` header
/// when generation metadata is present, then one `u v` line per edge with
/// u < v in ascending lexicographic order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    if let Some(m) = g.meta() {
        out.push_str(&format!("# n={} d={} seed={}\n", m.n, crate::io::fmt_f64(m.d), m.seed));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Read the edge-list text format. A missing header is tolerated: the vertex
/// count is then 1 + the largest id, and no metadata is attached.
pub fn read_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut meta: Option<GenMeta> = None;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            let mut hn = None;
            let mut hd = None;
            let mut hs = None;
            for tok in rest.split_whitespace() {
                if let Some(v) = tok.strip_prefix("n=") {
                    hn = v.parse::<usize>().ok();
                } else if let Some(v) = tok.strip_prefix("d=") {
                    hd = v.parse::<f64>().ok();
                } else if let Some(v) = tok.strip_prefix("seed=") {
                    hs = v.parse::<u64>().ok();
                }
            }
            if let (Some(hn), Some(hd), Some(hs)) = (hn, hd, hs) {
                n = Some(hn);
                meta = Some(GenMeta { n: hn, d: hd, seed: hs, rng: RNG_ALGORITHM });
            }
            continue;
        }
        let mut it = line.split_whitespace();
        let u: Vertex = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parameter(format!("edge list: bad line {line:?}")))?;
        let v: Vertex = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parameter(format!("edge list: bad line {line:?}")))?;
        edges.push((u, v));
    }
    let n = n.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) as usize + 1).max().unwrap_or(0));
    let mut g = Graph::from_edges(n.max(1), &edges)?;
    g.meta = meta;
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n as Vertex - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n as Vertex {
            for v in u + 1..n as Vertex {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    fn star(k: usize) -> Graph {
        let edges: Vec<_> = (1..=k as Vertex).map(|v| (0, v)).collect();
        Graph::from_edges(k + 1, &edges).unwrap()
    }

    #[test]
    fn generate_degenerate_probabilities() {
        let g = Graph::generate(5, 0.0, 1).unwrap();
        assert_eq!(g.edge_count(), 0);
        let g = Graph::generate(4, 4.0, 7).unwrap();
        assert_eq!(g.edge_count(), 6); // complete K4
        assert!(Graph::generate(4, -0.5, 1).is_err());
        assert!(Graph::generate(4, 5.0, 1).is_err());
    }

    #[test]
    fn generate_edge_count_concentration() {
        // Binomial oracle: mean C(n,2)p ~ nd/2 = 46000, sigma = sqrt(C(n,2)p(1-p)) ~ 214.
        let n = 10_000;
        let d = 9.2;
        let g = Graph::generate(n, d, 3).unwrap();
        let pairs = (n * (n - 1) / 2) as f64;
        let p = d / n as f64;
        let mean = pairs * p;
        let sigma = (pairs * p * (1.0 - p)).sqrt();
        let e = g.edge_count() as f64;
        assert!((e - mean).abs() <= 3.0 * sigma, "edges {e} vs mean {mean}, sigma {sigma}");
    }

    #[test]
    fn generate_deterministic() {
        let a = Graph::generate(2000, 7.0, 42).unwrap();
        let b = Graph::generate(2000, 7.0, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(write_edge_list(&a), write_edge_list(&b));
        let c = Graph::generate(2000, 7.0, 43).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn generate_rejects_structural_defects() {
        let g = Graph::generate(3000, 8.0, 11).unwrap();
        for u in 0..g.n() as Vertex {
            let nbrs = g.neighbors(u);
            assert!(nbrs.windows(2).all(|w| w[0] < w[1]), "row {u} unsorted/duplicated");
            assert!(!nbrs.contains(&u), "self-loop at {u}");
            for &v in nbrs {
                assert!(g.has_edge(v, u), "asymmetric edge {u}-{v}");
            }
        }
    }

    #[test]
    fn ball_and_sphere_on_path() {
        let g = path(3);
        assert_eq!(g.ball(0, 1).unwrap().as_slice(), &[0, 1]);
        assert_eq!(g.sphere(0, 2).unwrap().as_slice(), &[2]);
        assert_eq!(g.ball(0, 0).unwrap().as_slice(), &[0]);
    }

    #[test]
    fn ball_is_union_of_spheres() {
        let g = Graph::generate(500, 5.0, 9).unwrap();
        for &x in &[0, 17, 499] {
            for r in 0..5 {
                let ball = g.ball(x, r).unwrap();
                let total: usize = (0..=r).map(|i| g.sphere(x, i).unwrap().len()).sum();
                assert_eq!(ball.len(), total);
                // monotone: ball(r) subset of ball(r+1)
                assert!(ball.is_subset_of(&g.ball(x, r + 1).unwrap()));
            }
        }
    }

    #[test]
    fn spheres_match_individual_queries() {
        let g = Graph::generate(400, 6.0, 2).unwrap();
        let all = g.spheres(3, 4).unwrap();
        assert_eq!(all.len(), 4);
        for (i, s) in all.iter().enumerate() {
            assert_eq!(s, &g.sphere(3, i as u32).unwrap());
        }
    }

    #[test]
    fn distance_symmetry_sampled() {
        let g = Graph::generate(1000, 6.0, 5).unwrap();
        let pairs = [(0, 999), (10, 500), (123, 456), (7, 8)];
        for &(x, y) in &pairs {
            let dx = g.bfs_distances(x);
            let dy = g.bfs_distances(y);
            assert_eq!(dx[y as usize], dy[x as usize]);
        }
    }

    #[test]
    fn normalized_degrees_basics() {
        let g = complete(4);
        let a = g.normalized_degrees(3.0).unwrap();
        assert!(a.iter().all(|&v| (v - 1.0).abs() < 1e-15));
        let g = star(10);
        let a = g.normalized_degrees(5.0).unwrap();
        assert_eq!(a[0], 2.0);
        assert_eq!(a[1], 0.2);
        assert!(g.normalized_degrees(0.0).is_err());
    }

    #[test]
    fn max_degree_bound_high_probability() {
        // Sanity check, logged not fatal: max alpha <= 10 log(n)/d.
        let n = 20_000;
        let d = (n as f64).ln();
        let g = Graph::generate(n, d, 1).unwrap();
        let bound = 10.0 * (n as f64).ln() / d;
        let max_alpha =
            g.normalized_degrees(d).unwrap().into_iter().fold(0.0f64, f64::max);
        if max_alpha > bound {
            eprintln!("warning: max alpha {max_alpha} exceeds 10 log(n)/d = {bound}");
        }
    }

    #[test]
    fn tree_ball_detection() {
        let g = path(6);
        for x in 0..6 {
            for r in 0..6 {
                assert!(g.is_tree_ball(x, r).unwrap());
            }
        }
        let tri = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!tri.is_tree_ball(0, 1).unwrap());
        assert!(tri.is_tree_ball(0, 0).unwrap());
    }

    #[test]
    fn tree_ball_frequency_monte_carlo() {
        // Monte-Carlo at n = 2e4, d = log n. Radius-1 balls around typical
        // vertices are trees in >= 90% of draws. Radius-3 balls around the
        // max-degree vertex are essentially never trees at this size: the
        // boundary sphere holds ~2.5e3 vertices, giving ~1.5e3 expected
        // cross edges inside the ball.
        let n = 20_000;
        let d = (n as f64).ln();
        let mut ok_typical = 0;
        let mut non_tree_max = 0;
        for seed in 0..20 {
            let g = Graph::generate(n, d, seed).unwrap();
            let typical = (seed as Vertex * 977) % n as Vertex;
            if g.is_tree_ball(typical, 1).unwrap() {
                ok_typical += 1;
            }
            let x = (0..n as Vertex).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap();
            if !g.is_tree_ball(x, 3).unwrap() {
                non_tree_max += 1;
            }
        }
        assert!(ok_typical >= 18, "radius-1 tree frequency {ok_typical}/20 < 0.9");
        assert!(non_tree_max >= 19, "radius-3 max-degree balls unexpectedly trees");
    }

    #[test]
    fn giant_component_basics() {
        let g = path(5);
        assert_eq!(g.giant_component().len(), 5);
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_edges.giant_component().as_slice(), &[0, 1]);
    }

    #[test]
    fn giant_component_supercritical() {
        let n = 10_000;
        let d = (n as f64).ln();
        for seed in 0..20 {
            let g = Graph::generate(n, d, seed).unwrap();
            assert!(g.giant_component().len() >= (0.99 * n as f64) as usize, "seed {seed}");
        }
    }

    #[test]
    fn diameter_small_cases() {
        assert_eq!(path(5).diameter(true).unwrap(), 4);
        assert_eq!(complete(4).diameter(true).unwrap(), 1);
        assert!(path(5).diameter(false).unwrap() <= 4);
    }

    #[test]
    fn diameter_double_sweep_below_exact() {
        for seed in 0..5 {
            let g = Graph::generate(800, 3.0, seed).unwrap();
            let approx = g.diameter(false).unwrap();
            let exact = g.diameter(true).unwrap();
            assert!(approx <= exact, "seed {seed}: {approx} > {exact}");
        }
    }

    #[test]
    fn diameter_tracks_classical_asymptotic() {
        // diam = (log n/log d)(1 + o(1)); at n = 5e4 the measured value is
        // 7-8 against the leading term 4.54, so the finite-size window is
        // [0.8, 2.0] times the asymptotic.
        let n = 50_000;
        let d = (n as f64).ln();
        let target = (n as f64).ln() / d.ln();
        for seed in 0..5 {
            let g = Graph::generate(n, d, seed).unwrap();
            let diam = g.diameter(true).unwrap() as f64;
            assert!(
                diam >= 0.8 * target && diam <= 2.0 * target,
                "seed {seed}: diameter {diam} vs target {target}"
            );
        }
    }

    #[test]
    fn diameter_exact_matches_bfs_oracle() {
        // brute-force all-pairs BFS oracle on small instances
        for seed in 0..5 {
            let g = Graph::generate(400, 3.0, seed).unwrap();
            let giant = g.giant_component();
            let mut brute = 0u32;
            for v in giant.iter() {
                let dist = g.bfs_distances(v);
                for w in giant.iter() {
                    if dist[w as usize] != u32::MAX {
                        brute = brute.max(dist[w as usize]);
                    }
                }
            }
            assert_eq!(g.diameter(true).unwrap(), brute as usize, "seed {seed}");
        }
    }

    proptest::proptest! {
        #[test]
        fn edge_list_roundtrip_arbitrary(edges in proptest::collection::vec((0u32..40, 0u32..40), 0..80)) {
            let canon: Vec<(Vertex, Vertex)> = edges
                .into_iter()
                .filter(|&(u, v)| u != v)
                .map(|(u, v)| (u.min(v), u.max(v)))
                .collect();
            let mut dedup = canon.clone();
            dedup.sort_unstable();
            dedup.dedup();
            let g = Graph::from_edges(40, &dedup).unwrap();
            let back = read_edge_list(&write_edge_list(&g)).unwrap();
            // header-less text infers n from the largest id
            proptest::prop_assert_eq!(back.edge_count(), g.edge_count());
            for (u, v) in g.edges() {
                proptest::prop_assert!(back.has_edge(u, v));
            }
        }
    }

    #[test]
    fn edge_list_roundtrip() {
        let g = Graph::generate(200, 4.0, 13).unwrap();
        let text = write_edge_list(&g);
        assert!(text.starts_with("# n=200 d="));
        let h = read_edge_list(&text).unwrap();
        assert_eq!(g, h);
        // header-less input tolerated, meta absent
        let plain = "0 1\n1 2\n";
        let p = read_edge_list(plain).unwrap();
        assert_eq!(p.n(), 3);
        assert_eq!(p.edge_count(), 2);
        assert!(p.meta().is_none());
    }
}
