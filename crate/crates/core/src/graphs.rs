//! Threshold graphs, homomorphism counts and regularization.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::ExactCount;

/// Largest source graph accepted by [`hom_count`].
pub const HOM_BRUTE_LIMIT: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Color {
    Blue,
    Red,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub label: Option<i64>,
    pub color: Color,
}

impl Vertex {
    pub fn blue() -> Self {
        Vertex {
            label: None,
            color: Color::Blue,
        }
    }
}

/// Undirected graph with loops, optional integer labels and a two-coloring.
/// Edges are stored as `(u, v)` with `u <= v`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LabeledGraph {
    vertices: Vec<Vertex>,
    edges: BTreeSet<(usize, usize)>,
}

impl LabeledGraph {
    /// `n` blue, unlabeled, isolated vertices.
    pub fn new(n: usize) -> Self {
        LabeledGraph {
            vertices: vec![Vertex::blue(); n],
            edges: BTreeSet::new(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = LabeledGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, label: Option<i64>, color: Color) -> usize {
        self.vertices.push(Vertex { label, color });
        self.vertices.len() - 1
    }

    /// Adds `uv`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.vertices.len();
        if u >= n || v >= n {
            return Err(Error::InvalidParameter(format!(
                "edge ({u}, {v}) on a graph with {n} vertices"
            )));
        }
        self.edges.insert((u.min(v), u.max(v)));
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        self.edges.remove(&(u.min(v), u.max(v)))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, v: usize) -> Vertex {
        self.vertices[v]
    }

    pub fn set_color(&mut self, v: usize, color: Color) {
        self.vertices[v].color = color;
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|&(u, v)| u == v)
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| (a == v) as usize + (b == v) as usize)
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.degrees().iter().all(|&x| x == d)
    }

    /// Neighbor lists; a loop lists the vertex as its own neighbor once.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            if u != v {
                adj[v].push(u);
            }
        }
        adj
    }

    /// `d·|V| − 2|E|`.
    pub fn discrepancy(&self, d: usize) -> i64 {
        d as i64 * self.vertices.len() as i64 - 2 * self.edges.len() as i64
    }

    /// `Σ_v (d − deg v)`, equal to [`LabeledGraph::discrepancy`].
    pub fn discrepancy_by_degrees(&self, d: usize) -> i64 {
        self.degrees().iter().map(|&x| d as i64 - x as i64).sum()
    }

    /// Edge-list text: `# vertices N`, optional `# red:` and `# labels:`
    /// headers, then one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# vertices {}", self.vertices.len())?;
        let red: Vec<String> = (0..self.vertices.len())
            .filter(|&v| self.vertices[v].color == Color::Red)
            .map(|v| v.to_string())
            .collect();
        if !red.is_empty() {
            writeln!(f, "# red: {}", red.join(" "))?;
        }
        if self.vertices.iter().any(|v| v.label.is_some()) {
            let labels: Vec<String> = self
                .vertices
                .iter()
                .map(|v| v.label.map_or("-".to_string(), |l| l.to_string()))
                .collect();
            writeln!(f, "# labels: {}", labels.join(" "))?;
        }
        for (u, v) in &self.edges {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

impl FromStr for LabeledGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |line: &str| Error::Parse {
            kind: "edge list",
            input: line.to_string(),
        };
        let mut g: Option<LabeledGraph> = None;
        let mut edges = Vec::new();
        let mut red = Vec::new();
        let mut labels = Vec::new();
        for line in s.lines().map(str::trim).filter(|l| !l.is_empty()) {
            if let Some(rest) = line.strip_prefix("# vertices") {
                let n = rest.trim().parse().map_err(|_| bad(line))?;
                g = Some(LabeledGraph::new(n));
            } else if let Some(rest) = line.strip_prefix("# red:") {
                for t in rest.split_whitespace() {
                    red.push(t.parse::<usize>().map_err(|_| bad(line))?);
                }
            } else if let Some(rest) = line.strip_prefix("# labels:") {
                for t in rest.split_whitespace() {
                    labels.push(match t {
                        "-" => None,
                        _ => Some(t.parse::<i64>().map_err(|_| bad(line))?),
                    });
                }
            } else if line.starts_with('#') {
                continue;
            } else {
                let mut it = line.split_whitespace();
                let (Some(u), Some(v), None) = (it.next(), it.next(), it.next()) else {
                    return Err(bad(line));
                };
                let u = u.parse().map_err(|_| bad(line))?;
                let v = v.parse().map_err(|_| bad(line))?;
                edges.push((u, v));
            }
        }
        let mut g = g.ok_or_else(|| bad("missing '# vertices' header"))?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        for v in red {
            if v >= g.vertex_count() {
                return Err(bad("red vertex out of range"));
            }
            g.set_color(v, Color::Red);
        }
        if !labels.is_empty() {
            if labels.len() != g.vertex_count() {
                return Err(bad("label count differs from vertex count"));
            }
            for (v, l) in labels.into_iter().enumerate() {
                g.vertices[v].label = l;
            }
        }
        Ok(g)
    }
}

/// Vertices carry `labels`; `uv` (loops included) is an edge iff the label
/// sum is at least `lambda`.
pub fn threshold_graph(labels: &[i64], lambda: i64) -> LabeledGraph {
    let mut g = LabeledGraph::default();
    for &l in labels {
        g.add_vertex(Some(l), Color::Blue);
    }
    for u in 0..labels.len() {
        for v in u..labels.len() {
            if labels[u] + labels[v] >= lambda {
                g.edges.insert((u, v));
            }
        }
    }
    g
}

/// `H_q`: labels `1..=q`, threshold `q`. Vertex `i` carries label `i + 1`.
pub fn h_q(q: u32) -> LabeledGraph {
    let labels: Vec<i64> = (1..=q as i64).collect();
    threshold_graph(&labels, q as i64)
}

pub fn complete_bipartite(a: usize, b: usize) -> LabeledGraph {
    let mut g = LabeledGraph::new(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.edges.insert((u, v));
        }
    }
    g
}

pub fn cycle(n: usize) -> LabeledGraph {
    let mut g = LabeledGraph::new(n);
    for v in 0..n {
        let w = (v + 1) % n;
        if v != w {
            g.edges.insert((v.min(w), v.max(w)));
        }
    }
    g
}

/// Graph on head positions `1..=h` (vertex `x − 1` has label `x`) with
/// `xy` an edge when `x ≠ y` and `x + y` is one of `positions`. Pairs with
/// `x = y` would be loops and are left out.
pub fn heavy_index_graph(h: usize, positions: &BTreeSet<usize>) -> Result<LabeledGraph> {
    if h == 0 {
        return Err(Error::InvalidParameter("head length must be >= 1".into()));
    }
    if let Some(&p) = positions.iter().find(|&&p| p <= h) {
        return Err(Error::InvalidParameter(format!(
            "position {p} is not past the head (h = {h})"
        )));
    }
    let mut g = LabeledGraph::default();
    for x in 1..=h {
        g.add_vertex(Some(x as i64), Color::Blue);
    }
    for x in 1..=h {
        for y in x + 1..=h {
            if positions.contains(&(x + y)) {
                g.edges.insert((x - 1, y - 1));
            }
        }
    }
    Ok(g)
}

/// Homomorphisms `G → H` by exhaustive backtracking. `G` may have at most
/// [`HOM_BRUTE_LIMIT`] vertices.
pub fn hom_count(g: &LabeledGraph, h: &LabeledGraph) -> Result<ExactCount> {
    let n = g.vertex_count();
    if n > HOM_BRUTE_LIMIT {
        return Err(Error::GraphTooLarge {
            vertices: n,
            limit: HOM_BRUTE_LIMIT,
        });
    }
    let hn = h.vertex_count();
    let h_adj: Vec<Vec<bool>> = (0..hn)
        .map(|a| (0..hn).map(|b| h.has_edge(a, b)).collect())
        .collect();
    // constraints checked when the later endpoint is assigned
    let mut back: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (u, v) in g.edges() {
        back[v].push(u);
    }
    fn go(k: usize, img: &mut Vec<usize>, back: &[Vec<usize>], h_adj: &[Vec<bool>]) -> u128 {
        if k == back.len() {
            return 1;
        }
        let mut total = 0;
        for c in 0..h_adj.len() {
            img.push(c);
            if back[k].iter().all(|&u| h_adj[img[u]][c]) {
                total += go(k + 1, img, back, h_adj);
            }
            img.pop();
        }
        total
    }
    Ok(ExactCount::from(go(
        0,
        &mut Vec::with_capacity(n),
        &back,
        &h_adj,
    )))
}

/// Homomorphisms `G → H` by dynamic programming over a vertex ordering,
/// keeping only the images of processed vertices that still have
/// unprocessed neighbors. Handles graphs beyond the brute-force limit when
/// that frontier stays small.
pub fn hom_count_dp(g: &LabeledGraph, h: &LabeledGraph) -> ExactCount {
    let n = g.vertex_count();
    let hn = h.vertex_count();
    let adj = g.adjacency();
    let h_adj: Vec<Vec<bool>> = (0..hn)
        .map(|a| (0..hn).map(|b| h.has_edge(a, b)).collect())
        .collect();

    let order = frontier_order(&adj);
    let mut done = vec![false; n];
    let mut frontier: Vec<usize> = Vec::new();
    let mut states: HashMap<Vec<u16>, BigUint> = HashMap::from([(Vec::new(), BigUint::one())]);
    let mut factor = BigUint::one();

    for &v in &order {
        done[v] = true;
        let looped = adj[v].contains(&v);
        let linked: Vec<usize> = frontier
            .iter()
            .enumerate()
            .filter(|(_, &u)| adj[v].contains(&u))
            .map(|(i, _)| i)
            .collect();
        let mut next_frontier = frontier.clone();
        next_frontier.push(v);
        let keep: Vec<bool> = next_frontier
            .iter()
            .map(|&u| adj[u].iter().any(|&w| !done[w]))
            .collect();
        let mut next: HashMap<Vec<u16>, BigUint> = HashMap::new();
        for (state, ways) in &states {
            for (c, row) in h_adj.iter().enumerate() {
                if looped && !row[c] {
                    continue;
                }
                if linked.iter().any(|&i| !h_adj[state[i] as usize][c]) {
                    continue;
                }
                let key: Vec<u16> = state
                    .iter()
                    .copied()
                    .chain(std::iter::once(c as u16))
                    .zip(&keep)
                    .filter(|(_, &k)| k)
                    .map(|(x, _)| x)
                    .collect();
                *next.entry(key).or_insert_with(BigUint::zero) += ways;
            }
        }
        frontier = next_frontier
            .into_iter()
            .zip(&keep)
            .filter(|(_, &k)| k)
            .map(|(u, _)| u)
            .collect();
        // states with an empty frontier collapse into a scalar factor
        if frontier.is_empty() {
            let sum: BigUint = next.into_values().sum();
            factor *= sum;
            states = HashMap::from([(Vec::new(), BigUint::one())]);
        } else {
            states = next;
        }
    }
    let rest: BigUint = states.into_values().sum();
    ExactCount::from(factor * rest)
}

/// Greedy ordering that keeps the DP frontier small; ties go to the lowest
/// index.
fn frontier_order(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best: Option<(usize, usize, usize)> = None;
        let open: Vec<usize> = (0..n).filter(|&v| !done[v]).collect();
        for v in open {
            done[v] = true;
            let size = (0..n)
                .filter(|&u| done[u] && adj[u].iter().any(|&w| !done[w]))
                .count();
            done[v] = false;
            let fresh = adj[v].iter().filter(|&&w| !done[w] && w != v).count();
            let key = (size, fresh, v);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
        let v = best.unwrap().2;
        done[v] = true;
        order.push(v);
    }
    order
}

/// `hom(K_{d,d}, H_q)` by splitting on the minimum label of each side.
pub fn hom_kdd(d: u32, q: u32) -> ExactCount {
    let q64 = q as u64;
    let min_exactly =
        |x: u64| -> BigUint { BigUint::from(q64 - x + 1).pow(d) - BigUint::from(q64 - x).pow(d) };
    let n: Vec<BigUint> = (1..=q64).map(min_exactly).collect();
    let mut total = BigUint::zero();
    for a in 1..=q64 {
        for b in 1..=q64 {
            if a + b >= q64 {
                total += &n[a as usize - 1] * &n[b as usize - 1];
            }
        }
    }
    ExactCount::from(total)
}

/// `hom(K_{d,d}, H_q) ≤ 2q·⌊(q+2)²/4⌋^d`, compared exactly.
pub fn hom_kdd_within_bound(d: u32, q: u32) -> bool {
    let s = ((q as u64 + 2) * (q as u64 + 2)) / 4;
    let bound = BigUint::from(2 * q as u64) * BigUint::from(s).pow(d);
    hom_kdd(d, q).value() <= &bound
}

/// Output of [`regularize`].
#[derive(Clone, Debug)]
pub struct Regularized {
    pub graph: LabeledGraph,
    /// `D_d` of the input graph.
    pub initial_discrepancy: i64,
    /// Blue edges removed while fixing divisibility.
    pub removed_edges: Vec<(usize, usize)>,
    pub red_added: usize,
}

impl Regularized {
    /// `1 + max(3 + D/d, 2⌈d/2⌉) + |V|`, with `D` and `|V|` taken from the
    /// input graph, as a rational comparison `|V'| ≤ bound`.
    pub fn within_vertex_bound(&self, d: usize, input_vertices: usize) -> bool {
        let dd = d as i64;
        let lhs = (self.graph.vertex_count() as i64 - 1 - input_vertices as i64) * dd;
        let a = 3 * dd + self.initial_discrepancy;
        let b = 2 * d.div_ceil(2) as i64 * dd;
        lhs <= a.max(b)
    }
}

/// Embeds a loop-free graph of maximum degree at most `d` into a
/// `d`-regular one without decreasing homomorphism counts into `H_q`.
///
/// Input vertices are colored blue. In order: pad to an even vertex count
/// with an isolated blue vertex; delete lexicographically smallest
/// blue–blue edges until `D` is divisible by `d`; add `D/d` red vertices if
/// `D/d > d`, else `2⌈d/2⌉` of them (`d + 1` when `D = 0`, since no simple
/// `d`-regular graph on `d` vertices exists); join each deficient blue
/// vertex to the least-degree red vertices; finally complete the red part
/// with a Havel–Hakimi pass. Ties always go to the lowest index.
pub fn regularize(g: &LabeledGraph, d: usize) -> Result<Regularized> {
    if d == 0 {
        return Err(Error::InvalidParameter("target degree must be >= 1".into()));
    }
    if g.has_loops() {
        return Err(Error::InvalidParameter(
            "regularize needs a loop-free graph".into(),
        ));
    }
    let max = g.max_degree();
    if max > d {
        return Err(Error::DegreeTooLarge { max, d });
    }
    let initial_discrepancy = g.discrepancy(d);
    let mut out = g.clone();
    for v in 0..out.vertex_count() {
        out.set_color(v, Color::Blue);
    }

    if out.vertex_count() % 2 == 1 {
        out.add_vertex(None, Color::Blue);
    }

    let mut removed = Vec::new();
    while out.discrepancy(d) % d as i64 != 0 {
        let Some(&e) = out.edges.iter().next() else {
            return Err(Error::RegularizeFailed {
                d,
                detail: "ran out of blue edges to delete".into(),
            });
        };
        out.edges.remove(&e);
        removed.push(e);
    }

    let big_d = out.discrepancy(d) as usize;
    let red = if big_d / d > d {
        big_d / d
    } else if big_d == 0 {
        d + 1
    } else {
        2 * d.div_ceil(2)
    };
    let first_red = out.vertex_count();
    for _ in 0..red {
        out.add_vertex(None, Color::Red);
    }
    let reds: Vec<usize> = (first_red..first_red + red).collect();

    let mut deg = out.degrees();
    for b in 0..first_red {
        let need = d - deg[b];
        let mut by_degree = reds.clone();
        by_degree.sort_by_key(|&r| (deg[r], r));
        for &r in by_degree.iter().take(need) {
            out.edges.insert((b, r));
            deg[b] += 1;
            deg[r] += 1;
        }
        if deg[b] != d {
            return Err(Error::RegularizeFailed {
                d,
                detail: format!("blue vertex {b} left at degree {}", deg[b]),
            });
        }
    }

    // Havel–Hakimi on the remaining red demand
    loop {
        let mut open: Vec<usize> = reds.iter().copied().filter(|&r| deg[r] < d).collect();
        if open.is_empty() {
            break;
        }
        open.sort_by_key(|&r| (deg[r], r));
        let v = open[0];
        let want = d - deg[v];
        let partners: Vec<usize> = open[1..]
            .iter()
            .copied()
            .filter(|&u| !out.has_edge(u, v))
            .take(want)
            .collect();
        if partners.len() < want {
            return Err(Error::RegularizeFailed {
                d,
                detail: format!("red vertex {v} cannot reach degree {d}"),
            });
        }
        for u in partners {
            out.edges.insert((u.min(v), u.max(v)));
            deg[u] += 1;
            deg[v] += 1;
        }
    }

    if !out.is_regular(d) {
        return Err(Error::RegularizeFailed {
            d,
            detail: "degree sequence is not constant".into(),
        });
    }
    Ok(Regularized {
        graph: out,
        initial_discrepancy,
        removed_edges: removed,
        red_added: red,
    })
}

/// Every loop-free `d`-regular graph on `n` labeled vertices in which
/// vertex 0 is adjacent to exactly `1..=d`. Every isomorphism class
/// appears at least once.
pub fn rooted_regular_graphs(n: usize, d: usize) -> Vec<LabeledGraph> {
    if n * d % 2 == 1 || d >= n {
        return Vec::new();
    }
    let mut g = LabeledGraph::new(n);
    for v in 1..=d {
        g.edges.insert((0, v));
    }
    let mut deg = g.degrees();
    let mut out = Vec::new();
    fill(&mut g, &mut deg, 1, d, &mut out);
    out
}

fn fill(
    g: &mut LabeledGraph,
    deg: &mut Vec<usize>,
    v: usize,
    d: usize,
    out: &mut Vec<LabeledGraph>,
) {
    let n = g.vertex_count();
    if v == n {
        out.push(g.clone());
        return;
    }
    let need = d - deg[v];
    let candidates: Vec<usize> = (v + 1..n).filter(|&u| deg[u] < d).collect();
    choose(g, deg, v, d, &candidates, 0, need, out);
}

#[allow(clippy::too_many_arguments)]
fn choose(
    g: &mut LabeledGraph,
    deg: &mut Vec<usize>,
    v: usize,
    d: usize,
    candidates: &[usize],
    start: usize,
    need: usize,
    out: &mut Vec<LabeledGraph>,
) {
    if need == 0 {
        fill(g, deg, v + 1, d, out);
        return;
    }
    for i in start..candidates.len() {
        if candidates.len() - i < need {
            break;
        }
        let u = candidates[i];
        g.edges.insert((v, u));
        deg[v] += 1;
        deg[u] += 1;
        choose(g, deg, v, d, candidates, i + 1, need - 1, out);
        g.edges.remove(&(v, u));
        deg[v] -= 1;
        deg[u] -= 1;
    }
}

/// `hom(G, H)^{2d} ≤ hom(K_{d,d}, H)^{|V(G)|}` for a `d`-regular `G`,
/// compared exactly.
pub fn zhao_holds(g: &LabeledGraph, h: &LabeledGraph, d: usize) -> bool {
    let lhs = hom_count_dp(g, h).into_inner().pow(2 * d as u32);
    let kdd = hom_count_dp(&complete_bipartite(d, d), h).into_inner();
    lhs <= kdd.pow(g.vertex_count() as u32)
}
