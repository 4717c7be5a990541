//! Left-right planarity test with certificates.
//!
//! A planar answer carries a rotation system (clockwise neighbour order per
//! vertex) whose face count satisfies Euler's formula; a non-planar answer
//! carries a minimal non-planar subgraph, which is a subdivision of K₅ or
//! K₃,₃.
//!
//! The test follows the left-right criterion of de Fraysseix and Rosenstiehl
//! in the formulation of Brandes: a DFS orientation with low points, a nesting
//! order on outgoing edges, and a stack of conflict pairs of return-edge
//! intervals.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

type Edge = (usize, usize);

/// Clockwise neighbour order around every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub rotation: BTreeMap<usize, Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subdivision of K₅ or K₃,₃ contained in the graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    /// Vertices of degree ≥ 3 in the subdivision.
    pub branch_vertices: Vec<usize>,
    pub edges: Vec<Edge>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum PlanarityWitness {
    Embedding(Embedding),
    Kuratowski(KuratowskiWitness),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarityResult {
    pub planar: bool,
    pub witness: PlanarityWitness,
}

fn normalize(edges: &[Edge]) -> Vec<Edge> {
    let set: BTreeSet<Edge> = edges
        .iter()
        .filter(|(a, b)| a != b)
        .map(|&(a, b)| (a.min(b), a.max(b)))
        .collect();
    set.into_iter().collect()
}

/// Relabels arbitrary vertex ids to `0..len` in ascending order.
struct Compact {
    ids: Vec<usize>,
    adj: Vec<Vec<usize>>,
}

impl Compact {
    fn new(vertices: &BTreeSet<usize>, edges: &[Edge]) -> Self {
        let ids: Vec<usize> = vertices.iter().copied().collect();
        let index: HashMap<usize, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut adj = vec![Vec::new(); ids.len()];
        for &(a, b) in edges {
            let (ia, ib) = (index[&a], index[&b]);
            adj[ia].push(ib);
            adj[ib].push(ia);
        }
        Self { ids, adj }
    }
}

/// Planarity of the simple graph on `vertices` with `edges` (loops and duplicates are ignored).
pub fn planarity(vertices: &BTreeSet<usize>, edges: &[Edge]) -> PlanarityResult {
    let edges = normalize(edges);
    let mut all: BTreeSet<usize> = vertices.clone();
    for &(a, b) in &edges {
        all.insert(a);
        all.insert(b);
    }
    match embed(&all, &edges) {
        Some(embedding) => PlanarityResult {
            planar: true,
            witness: PlanarityWitness::Embedding(embedding),
        },
        None => PlanarityResult {
            planar: false,
            witness: PlanarityWitness::Kuratowski(kuratowski_subgraph(&edges)),
        },
    }
}

/// Embedding of the graph, or `None` if it is not planar.
pub fn embed(vertices: &BTreeSet<usize>, edges: &[Edge]) -> Option<Embedding> {
    let edges = normalize(edges);
    let v = vertices.len();
    if v > 2 && edges.len() > 3 * v - 6 {
        return None;
    }
    let g = Compact::new(vertices, &edges);
    let rotation = LrPlanarity::new(&g.adj).run()?;
    Some(Embedding {
        rotation: rotation
            .into_iter()
            .enumerate()
            .map(|(i, nbrs)| (g.ids[i], nbrs.into_iter().map(|w| g.ids[w]).collect()))
            .collect(),
    })
}

fn is_planar_edges(edges: &[Edge]) -> bool {
    let vertices: BTreeSet<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    embed(&vertices, edges).is_some()
}

/// Deletes every edge whose removal keeps the graph non-planar. What remains
/// is edge-minimal non-planar, hence a Kuratowski subdivision.
fn kuratowski_subgraph(edges: &[Edge]) -> KuratowskiWitness {
    let mut kept: Vec<Edge> = edges.to_vec();
    let mut i = 0;
    while i < kept.len() {
        let mut trial = kept.clone();
        trial.remove(i);
        if !is_planar_edges(&trial) {
            kept = trial;
        } else {
            i += 1;
        }
    }
    let mut degree: BTreeMap<usize, usize> = BTreeMap::new();
    for &(a, b) in &kept {
        *degree.entry(a).or_default() += 1;
        *degree.entry(b).or_default() += 1;
    }
    let branch_vertices: Vec<usize> = degree
        .iter()
        .filter(|(_, &d)| d >= 3)
        .map(|(&v, _)| v)
        .collect();
    let kind = if branch_vertices.len() == 5 && branch_vertices.iter().all(|v| degree[v] == 4) {
        KuratowskiKind::K5
    } else {
        debug_assert!(
            branch_vertices.len() == 6 && branch_vertices.iter().all(|v| degree[v] == 3),
            "minimal non-planar subgraph is neither K5 nor K3,3: {kept:?}"
        );
        KuratowskiKind::K33
    };
    KuratowskiWitness {
        kind,
        branch_vertices,
        edges: kept,
    }
}

impl Embedding {
    /// Checks that the rotation system uses each edge once in each direction and
    /// that every connected component with edges satisfies `V − E + F = 2`.
    pub fn is_valid_for(&self, edges: &[Edge]) -> bool {
        let edges = normalize(edges);
        let mut darts: HashSet<Edge> = HashSet::new();
        for (&v, nbrs) in &self.rotation {
            for &w in nbrs {
                if !darts.insert((v, w)) {
                    return false;
                }
            }
        }
        if darts.len() != 2 * edges.len() || edges.iter().any(|&(a, b)| !darts.contains(&(a, b)) || !darts.contains(&(b, a))) {
            return false;
        }
        let pos: HashMap<Edge, usize> = self
            .rotation
            .iter()
            .flat_map(|(&v, nbrs)| nbrs.iter().enumerate().map(move |(i, &w)| ((v, w), i)))
            .collect();
        // dart (u→v) is followed by (v→w) where w comes after u in v's rotation
        let next = |(u, v): Edge| -> Edge {
            let r = &self.rotation[&v];
            let i = pos[&(v, u)];
            (v, r[(i + 1) % r.len()])
        };
        let mut face_of: HashMap<Edge, usize> = HashMap::new();
        let mut faces = 0;
        for &d in pos.keys().collect::<BTreeSet<_>>() {
            if face_of.contains_key(&d) {
                continue;
            }
            let mut cur = d;
            loop {
                face_of.insert(cur, faces);
                cur = next(cur);
                if cur == d {
                    break;
                }
            }
            faces += 1;
        }
        // Euler per component
        let mut comp: HashMap<usize, usize> = HashMap::new();
        let mut n_comp = 0;
        for &start in self.rotation.keys() {
            if comp.contains_key(&start) || self.rotation[&start].is_empty() {
                continue;
            }
            let mut stack = vec![start];
            comp.insert(start, n_comp);
            while let Some(v) = stack.pop() {
                for &w in &self.rotation[&v] {
                    if let std::collections::hash_map::Entry::Vacant(e) = comp.entry(w) {
                        e.insert(n_comp);
                        stack.push(w);
                    }
                }
            }
            n_comp += 1;
        }
        let mut per = vec![(0i64, 0i64, 0i64); n_comp];
        for (v, &c) in &comp {
            let _ = v;
            per[c].0 += 1;
        }
        for &(a, _) in &edges {
            per[comp[&a]].1 += 1;
        }
        let mut seen_face: HashSet<usize> = HashSet::new();
        for (d, &f) in &face_of {
            if seen_face.insert(f) {
                per[comp[&d.0]].2 += 1;
            }
        }
        per.iter().all(|&(v, e, f)| v - e + f == 2)
    }
}

impl KuratowskiWitness {
    /// Checks that the witness is a subgraph of `edges` and a subdivision of its kind:
    /// branch vertices of the right degree joined by internally disjoint paths of
    /// degree-2 vertices, connecting the right pairs.
    pub fn is_valid_for(&self, edges: &[Edge]) -> bool {
        let all: HashSet<Edge> = normalize(edges).into_iter().collect();
        let mine = normalize(&self.edges);
        if mine.iter().any(|e| !all.contains(e)) {
            return false;
        }
        let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(a, b) in &mine {
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
        let branch: BTreeSet<usize> = adj.iter().filter(|(_, n)| n.len() >= 3).map(|(&v, _)| v).collect();
        if adj.values().any(|n| n.len() < 2) {
            return false;
        }
        let (count, deg) = match self.kind {
            KuratowskiKind::K5 => (5, 4),
            KuratowskiKind::K33 => (6, 3),
        };
        if branch.len() != count || branch.iter().any(|v| adj[v].len() != deg) {
            return false;
        }
        // follow each path out of each branch vertex to the branch vertex at its end
        let mut links: BTreeSet<(usize, usize)> = BTreeSet::new();
        for &b in &branch {
            for &first in &adj[&b] {
                let (mut prev, mut cur) = (b, first);
                while !branch.contains(&cur) {
                    let nxt = if adj[&cur][0] == prev { adj[&cur][1] } else { adj[&cur][0] };
                    prev = cur;
                    cur = nxt;
                }
                if cur == b || !links.insert((b.min(cur), b.max(cur))) && b < cur {
                    return false;
                }
            }
        }
        match self.kind {
            KuratowskiKind::K5 => links.len() == 10,
            KuratowskiKind::K33 => {
                if links.len() != 9 {
                    return false;
                }
                // links must form K3,3: two-colour the branch vertices
                let bv: Vec<usize> = branch.iter().copied().collect();
                let side_a: Vec<usize> = std::iter::once(bv[0])
                    .chain(bv.iter().copied().filter(|&v| v != bv[0] && !links.contains(&(bv[0].min(v), bv[0].max(v)))))
                    .collect();
                side_a.len() == 3
                    && side_a.iter().all(|&a| {
                        side_a.iter().all(|&c| a == c || !links.contains(&(a.min(c), a.max(c))))
                    })
            }
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct Interval {
    low: Option<Edge>,
    high: Option<Edge>,
}

impl Interval {
    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Debug)]
struct ConflictPair {
    id: u64,
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

#[derive(Default)]
struct HalfEdges {
    cw: HashMap<Edge, usize>,
    ccw: HashMap<Edge, usize>,
    first: HashMap<usize, usize>,
}

impl HalfEdges {
    fn add_cw(&mut self, start: usize, end: usize, reference: Option<usize>) {
        match reference {
            None => {
                self.cw.insert((start, end), end);
                self.ccw.insert((start, end), end);
                self.first.insert(start, end);
            }
            Some(r) => {
                let cw_ref = self.cw[&(start, r)];
                self.cw.insert((start, r), end);
                self.cw.insert((start, end), cw_ref);
                self.ccw.insert((start, cw_ref), end);
                self.ccw.insert((start, end), r);
            }
        }
    }

    fn add_ccw(&mut self, start: usize, end: usize, reference: Option<usize>) {
        match reference {
            None => self.add_cw(start, end, None),
            Some(r) => {
                let ccw_ref = self.ccw[&(start, r)];
                self.add_cw(start, end, Some(ccw_ref));
                if self.first.get(&start) == Some(&r) {
                    self.first.insert(start, end);
                }
            }
        }
    }

    fn add_first(&mut self, start: usize, end: usize) {
        let reference = self.first.get(&start).copied();
        self.add_ccw(start, end, reference);
    }

    fn rotation(&self, v: usize) -> Vec<usize> {
        let Some(&first) = self.first.get(&v) else {
            return Vec::new();
        };
        let mut out = vec![first];
        let mut cur = self.cw[&(v, first)];
        while cur != first {
            out.push(cur);
            cur = self.cw[&(v, cur)];
        }
        out
    }
}

struct LrPlanarity<'a> {
    adj: &'a [Vec<usize>],
    height: Vec<Option<usize>>,
    parent_edge: Vec<Option<Edge>>,
    oriented: HashSet<Edge>,
    out_adj: Vec<Vec<usize>>,
    lowpt: HashMap<Edge, usize>,
    lowpt2: HashMap<Edge, usize>,
    nesting_depth: HashMap<Edge, i64>,
    ordered_adj: Vec<Vec<usize>>,
    refs: HashMap<Edge, Edge>,
    side: HashMap<Edge, i64>,
    stack: Vec<ConflictPair>,
    stack_bottom: HashMap<Edge, Option<u64>>,
    lowpt_edge: HashMap<Edge, Edge>,
    left_ref: HashMap<usize, usize>,
    right_ref: HashMap<usize, usize>,
    roots: Vec<usize>,
    next_id: u64,
    emb: HalfEdges,
}

impl<'a> LrPlanarity<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        Self {
            adj,
            height: vec![None; n],
            parent_edge: vec![None; n],
            oriented: HashSet::new(),
            out_adj: vec![Vec::new(); n],
            lowpt: HashMap::new(),
            lowpt2: HashMap::new(),
            nesting_depth: HashMap::new(),
            ordered_adj: vec![Vec::new(); n],
            refs: HashMap::new(),
            side: HashMap::new(),
            stack: Vec::new(),
            stack_bottom: HashMap::new(),
            lowpt_edge: HashMap::new(),
            left_ref: HashMap::new(),
            right_ref: HashMap::new(),
            roots: Vec::new(),
            next_id: 0,
            emb: HalfEdges::default(),
        }
    }

    fn run(mut self) -> Option<Vec<Vec<usize>>> {
        let n = self.adj.len();
        for v in 0..n {
            if self.height[v].is_none() {
                self.height[v] = Some(0);
                self.roots.push(v);
                self.dfs_orientation(v);
            }
        }
        for v in 0..n {
            let mut o = self.out_adj[v].clone();
            o.sort_by_key(|&w| self.nesting_depth[&(v, w)]);
            self.ordered_adj[v] = o;
        }
        for r in self.roots.clone() {
            if !self.dfs_testing(r) {
                return None;
            }
        }
        let oriented: Vec<Edge> = self.oriented.iter().copied().collect();
        for e in oriented {
            let s = self.sign(e);
            *self.nesting_depth.get_mut(&e).expect("oriented edge") *= s;
        }
        for v in 0..n {
            let mut o = self.out_adj[v].clone();
            o.sort_by_key(|&w| self.nesting_depth[&(v, w)]);
            let mut prev = None;
            for &w in &o {
                self.emb.add_cw(v, w, prev);
                prev = Some(w);
            }
            self.ordered_adj[v] = o;
        }
        for r in self.roots.clone() {
            self.dfs_embedding(r);
        }
        Some((0..n).map(|v| self.emb.rotation(v)).collect())
    }

    fn h(&self, v: usize) -> usize {
        self.height[v].expect("visited vertex")
    }

    fn dfs_orientation(&mut self, v: usize) {
        let e = self.parent_edge[v];
        for &w in &self.adj[v] {
            if self.oriented.contains(&(v, w)) || self.oriented.contains(&(w, v)) {
                continue;
            }
            let vw = (v, w);
            self.oriented.insert(vw);
            self.out_adj[v].push(w);
            let hv = self.h(v);
            self.lowpt.insert(vw, hv);
            self.lowpt2.insert(vw, hv);
            match self.height[w] {
                None => {
                    self.parent_edge[w] = Some(vw);
                    self.height[w] = Some(hv + 1);
                    self.dfs_orientation(w);
                }
                Some(hw) => {
                    self.lowpt.insert(vw, hw);
                }
            }
            let lp = self.lowpt[&vw];
            let lp2 = self.lowpt2[&vw];
            let mut depth = 2 * lp as i64;
            if lp2 < hv {
                depth += 1;
            }
            self.nesting_depth.insert(vw, depth);
            if let Some(e) = e {
                let (le, le2) = (self.lowpt[&e], self.lowpt2[&e]);
                if lp < le {
                    self.lowpt2.insert(e, le.min(lp2));
                    self.lowpt.insert(e, lp);
                } else if lp > le {
                    self.lowpt2.insert(e, le2.min(lp));
                } else {
                    self.lowpt2.insert(e, le2.min(lp2));
                }
            }
        }
    }

    fn top_id(&self) -> Option<u64> {
        self.stack.last().map(|p| p.id)
    }

    fn fresh_pair(&mut self) -> ConflictPair {
        self.next_id += 1;
        ConflictPair {
            id: self.next_id,
            left: Interval::default(),
            right: Interval::default(),
        }
    }

    fn set_ref(&mut self, key: Option<Edge>, value: Option<Edge>) {
        if let Some(k) = key {
            match value {
                Some(v) => {
                    self.refs.insert(k, v);
                }
                None => {
                    self.refs.remove(&k);
                }
            }
        }
    }

    fn conflicting(&self, i: &Interval, b: Edge) -> bool {
        match i.high {
            Some(h) => self.lowpt[&h] > self.lowpt[&b],
            None => false,
        }
    }

    fn lowest(&self, p: &ConflictPair) -> Option<usize> {
        let l = p.left.low.map(|e| self.lowpt[&e]);
        let r = p.right.low.map(|e| self.lowpt[&e]);
        match (l, r) {
            (None, r) => r,
            (l, None) => l,
            (Some(a), Some(b)) => Some(a.min(b)),
        }
    }

    fn dfs_testing(&mut self, v: usize) -> bool {
        let e = self.parent_edge[v];
        let ordered = self.ordered_adj[v].clone();
        for (idx, &w) in ordered.iter().enumerate() {
            let ei = (v, w);
            self.stack_bottom.insert(ei, self.top_id());
            if Some(ei) == self.parent_edge[w] {
                if !self.dfs_testing(w) {
                    return false;
                }
            } else {
                self.lowpt_edge.insert(ei, ei);
                let mut p = self.fresh_pair();
                p.right = Interval {
                    low: Some(ei),
                    high: Some(ei),
                };
                self.stack.push(p);
            }
            if self.lowpt[&ei] < self.h(v) {
                let e = e.expect("return edges imply a parent edge");
                if idx == 0 {
                    let le = self.lowpt_edge[&ei];
                    self.lowpt_edge.insert(e, le);
                } else if !self.add_constraints(ei, e) {
                    return false;
                }
            }
        }
        if let Some(e) = e {
            self.remove_back_edges(e);
        }
        true
    }

    fn add_constraints(&mut self, ei: Edge, e: Edge) -> bool {
        let mut p = self.fresh_pair();
        while let Some(mut q) = self.stack.pop() {
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let qlow = q.right.low.expect("non-empty right interval");
            if self.lowpt[&qlow] > self.lowpt[&e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.set_ref(p.right.low, q.right.high);
                }
                p.right.low = q.right.low;
            } else {
                let le = self.lowpt_edge[&e];
                self.refs.insert(qlow, le);
            }
            if self.top_id() == self.stack_bottom[&ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().expect("checked non-empty");
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            self.set_ref(p.right.low, q.right.high);
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else {
                self.set_ref(p.left.low, q.left.high);
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: Edge) {
        let u = e.0;
        let hu = self.h(u);
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != Some(hu) {
                break;
            }
            let p = self.stack.pop().expect("checked non-empty");
            if let Some(l) = p.left.low {
                self.side.insert(l, -1);
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if h.1 != u {
                    break;
                }
                p.left.high = self.refs.get(&h).copied();
            }
            if p.left.high.is_none() {
                if let Some(l) = p.left.low {
                    self.set_ref(Some(l), p.right.low);
                    self.side.insert(l, -1);
                    p.left.low = None;
                }
            }
            while let Some(h) = p.right.high {
                if h.1 != u {
                    break;
                }
                p.right.high = self.refs.get(&h).copied();
            }
            if p.right.high.is_none() {
                if let Some(r) = p.right.low {
                    self.set_ref(Some(r), p.left.low);
                    self.side.insert(r, -1);
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }
        if self.lowpt[&e] < hu {
            let top = self.stack.last().expect("a return edge leaves a conflict pair");
            let (hl, hr) = (top.left.high, top.right.high);
            let use_left = match (hl, hr) {
                (Some(l), None) => {
                    let _ = l;
                    true
                }
                (Some(l), Some(r)) => self.lowpt[&l] > self.lowpt[&r],
                _ => false,
            };
            let target = if use_left { hl } else { hr };
            self.set_ref(Some(e), target);
        }
    }

    fn sign(&mut self, e: Edge) -> i64 {
        // iterative form of sign(e) = side(e) · sign(ref(e)), compressing the ref chain
        let mut chain = vec![e];
        while let Some(&r) = self.refs.get(chain.last().expect("non-empty")) {
            chain.push(r);
        }
        let mut acc = *self.side.get(chain.last().expect("non-empty")).unwrap_or(&1);
        for &c in chain.iter().rev().skip(1) {
            acc *= *self.side.get(&c).unwrap_or(&1);
            self.side.insert(c, acc);
            self.refs.remove(&c);
        }
        *self.side.get(&e).unwrap_or(&1)
    }

    fn dfs_embedding(&mut self, v: usize) {
        let ordered = self.ordered_adj[v].clone();
        for w in ordered {
            let ei = (v, w);
            if Some(ei) == self.parent_edge[w] {
                self.emb.add_first(w, v);
                self.left_ref.insert(v, w);
                self.right_ref.insert(v, w);
                self.dfs_embedding(w);
            } else if *self.side.get(&ei).unwrap_or(&1) == 1 {
                let r = self.right_ref.get(&w).copied();
                self.emb.add_cw(w, v, r);
            } else {
                let l = self.left_ref.get(&w).copied();
                self.emb.add_ccw(w, v, l);
                self.left_ref.insert(w, v);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vertices(edges: &[Edge]) -> BTreeSet<usize> {
        edges.iter().flat_map(|&(a, b)| [a, b]).collect()
    }

    fn complete(n: usize) -> Vec<Edge> {
        (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
    }

    fn grid(r: usize, c: usize) -> Vec<Edge> {
        let mut e = Vec::new();
        for i in 0..r {
            for j in 0..c {
                let q = i * c + j;
                if j + 1 < c {
                    e.push((q, q + 1));
                }
                if i + 1 < r {
                    e.push((q, q + c));
                }
            }
        }
        e
    }

    fn check(edges: &[Edge]) -> PlanarityResult {
        let r = planarity(&vertices(edges), edges);
        match &r.witness {
            PlanarityWitness::Embedding(emb) => assert!(emb.is_valid_for(edges), "bad embedding for {edges:?}"),
            PlanarityWitness::Kuratowski(k) => assert!(k.is_valid_for(edges), "bad witness {k:?}"),
        }
        r
    }

    #[test]
    fn k5_is_not_planar() {
        let r = check(&complete(5));
        assert!(!r.planar);
        match r.witness {
            PlanarityWitness::Kuratowski(k) => assert_eq!(k.kind, KuratowskiKind::K5),
            _ => unreachable!(),
        }
    }

    #[test]
    fn k33_is_not_planar() {
        let edges: Vec<Edge> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
        let r = check(&edges);
        assert!(!r.planar);
        match r.witness {
            PlanarityWitness::Kuratowski(k) => assert_eq!(k.kind, KuratowskiKind::K33),
            _ => unreachable!(),
        }
    }

    #[test]
    fn petersen_contains_k33_subdivision() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        let r = check(&edges);
        assert!(!r.planar);
        // Petersen passes the edge-count filter (15 ≤ 24), so the LR test itself rejects it
        assert!(embed(&vertices(&edges), &edges).is_none());
    }

    #[test]
    fn planar_families() {
        assert!(check(&grid(5, 5)).planar);
        assert!(check(&complete(4)).planar);
        let mut k5_minus = complete(5);
        k5_minus.pop();
        assert!(check(&k5_minus).planar);
        // wheel with 8 spokes
        let mut wheel: Vec<Edge> = (1..=8).map(|i| (0, i)).collect();
        wheel.extend((1..=8).map(|i| (i, i % 8 + 1)));
        assert!(check(&wheel).planar);
        // disconnected: two triangles and an isolated vertex
        let tri = vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)];
        let mut vs = vertices(&tri);
        vs.insert(9);
        let r = planarity(&vs, &tri);
        assert!(r.planar);
    }

    #[test]
    fn triangulated_grid_is_planar() {
        let mut e = grid(4, 4);
        for i in 0..3 {
            for j in 0..3 {
                let q = i * 4 + j;
                e.push((q, q + 5));
            }
        }
        assert!(check(&e).planar);
        // adding both diagonals in one cell and a long chord stays planar? K5-free check via witness
        e.push((1, 4));
        let r = check(&e);
        assert!(r.planar);
    }

    #[test]
    fn ignores_loops_and_duplicates() {
        let edges = vec![(0, 1), (1, 0), (1, 1), (1, 2)];
        assert!(check(&edges).planar);
    }

    #[test]
    fn random_graphs_always_carry_valid_certificates() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut planar = 0;
        let mut nonplanar = 0;
        for _ in 0..300 {
            let n = rng.gen_range(4..11);
            let p = rng.gen_range(0.15..0.6);
            let edges: Vec<Edge> = (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            if edges.is_empty() {
                continue;
            }
            if check(&edges).planar {
                planar += 1;
            } else {
                nonplanar += 1;
            }
        }
        assert!(planar > 30 && nonplanar > 30, "{planar} {nonplanar}");
    }
}
