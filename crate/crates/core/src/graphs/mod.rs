//! Interaction graphs of Pauli Hamiltonians and code operators.
//!
//! Vertices are physical qubit indices. Every weight-two operator `P_u Q_v`
//! contributes an edge `{u, v}` tagged with its type (`"XX"`, `"ZZ"`, `"XZ"`,
//! ...), written lower qubit first. Several operators on the same pair add
//! several tags to one edge.

pub mod planarity;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::codes::StabilizerCode;
use crate::error::{Error, Result};
use crate::hamiltonians::PauliHamiltonian;
use crate::pauli::PauliString;

pub use planarity::{Embedding, KuratowskiKind, KuratowskiWitness, PlanarityResult, PlanarityWitness};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct InteractionGraph {
    pub vertices: BTreeSet<usize>,
    /// Edge `(u, v)` with `u < v`, mapped to its interaction types in insertion order.
    pub edges: BTreeMap<(usize, usize), Vec<String>>,
}

fn edge_type(p: &PauliString, u: usize, v: usize) -> String {
    let mut s = String::with_capacity(2);
    s.push(p.letter(u));
    s.push(p.letter(v));
    s
}

impl InteractionGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds the support of `p` (weight ≤ 2) to the graph.
    pub fn add_operator(&mut self, p: &PauliString) -> Result<()> {
        let support = p.support();
        match support.as_slice() {
            [] => {}
            [u] => {
                self.vertices.insert(*u);
            }
            [u, v] => {
                self.vertices.insert(*u);
                self.vertices.insert(*v);
                self.edges.entry((*u, *v)).or_default().push(edge_type(p, *u, *v));
            }
            _ => {
                return Err(Error::UnsupportedInteraction(p.without_sign().to_string()))
            }
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize, kind: &str) {
        assert_ne!(u, v, "self-loop on {u}");
        self.vertices.insert(u);
        self.vertices.insert(v);
        self.edges
            .entry((u.min(v), u.max(v)))
            .or_default()
            .push(kind.to_string());
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges.keys().copied().collect()
    }

    pub fn neighbours(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut adj: BTreeMap<usize, Vec<usize>> =
            self.vertices.iter().map(|&v| (v, Vec::new())).collect();
        for &(u, v) in self.edges.keys() {
            adj.get_mut(&u).expect("edge endpoint is a vertex").push(v);
            adj.get_mut(&v).expect("edge endpoint is a vertex").push(u);
        }
        adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.keys().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn degrees(&self) -> BTreeMap<usize, usize> {
        self.neighbours().into_iter().map(|(v, n)| (v, n.len())).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().values().copied().max().unwrap_or(0)
    }

    /// Distinct interaction types over all edges.
    pub fn interaction_types(&self) -> BTreeSet<String> {
        self.edges.values().flatten().cloned().collect()
    }

    pub fn planarity(&self) -> PlanarityResult {
        planarity::planarity(&self.vertices, &self.edge_list())
    }

    pub fn is_planar(&self) -> bool {
        planarity::embed(&self.vertices, &self.edge_list()).is_some()
    }

    pub fn bipartition(&self) -> BipartitionResult {
        bipartition(self)
    }

    /// Graphviz rendering with edge labels listing the interaction types.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph interaction {\n");
        for v in &self.vertices {
            let _ = writeln!(out, "  {v};");
        }
        for ((u, v), kinds) in &self.edges {
            let _ = writeln!(out, "  {u} -- {v} [label=\"{}\"];", kinds.join(","));
        }
        out.push_str("}\n");
        out
    }
}

/// Graph of the weight ≤ 2 terms of `h`; heavier terms are an error.
pub fn interaction_graph(h: &PauliHamiltonian) -> Result<InteractionGraph> {
    let mut g = InteractionGraph::new();
    for t in h.terms() {
        g.add_operator(&t.pauli)?;
    }
    Ok(g)
}

/// Graph of an encoded Hamiltonian, optionally adding the weight-two generators of `c` as penalty edges.
pub fn encoded_interaction_graph(
    encoded: &PauliHamiltonian,
    c: &StabilizerCode,
    include_penalty: bool,
) -> Result<InteractionGraph> {
    crate::error::check_dim(c.n, encoded.num_qubits())?;
    let mut g = interaction_graph(encoded)?;
    if include_penalty {
        for gen in c.generators.iter().filter(|g| g.weight() == 2) {
            g.add_operator(gen)?;
        }
    }
    Ok(g)
}

/// Graph of the code's weight ≤ 2 logical operators, plus weight-two generators if asked.
/// Heavier operators are skipped.
pub fn code_operator_graph(c: &StabilizerCode, include_generators: bool) -> InteractionGraph {
    let mut g = InteractionGraph::new();
    let gens: &[PauliString] = if include_generators { &c.generators } else { &[] };
    for p in c.logical_x.iter().chain(&c.logical_z).chain(gens) {
        if p.weight() <= 2 {
            g.add_operator(p).expect("weight checked");
        }
    }
    g
}

/// Gottesman-code graph holding the single-body logicals `X̄ᵢ`, `Z̄ᵢ` and, when asked,
/// the two-body products `X̄ᵢX̄ⱼ = XᵢXⱼ` and `Z̄ᵢZ̄ⱼ = ZᵢZⱼ` on spoke qubits.
pub fn gottesman_logical_graph(c: &StabilizerCode, with_two_body: bool) -> Result<InteractionGraph> {
    let mut g = code_operator_graph(c, false);
    if with_two_body {
        for i in 0..c.k {
            for j in i + 1..c.k {
                g.add_operator(&c.logical_x[i].multiply(&c.logical_x[j])?)?;
                g.add_operator(&c.logical_z[i].multiply(&c.logical_z[j])?)?;
            }
        }
    }
    Ok(g)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub side_a: BTreeSet<usize>,
    pub side_b: BTreeSet<usize>,
}

impl Bipartition {
    pub fn new(side_a: BTreeSet<usize>, side_b: BTreeSet<usize>) -> Result<Self> {
        if let Some(v) = side_a.intersection(&side_b).next() {
            return Err(Error::Parameter(format!("qubit {v} is on both sides")));
        }
        Ok(Self { side_a, side_b })
    }

    /// Every edge joins the two sides.
    pub fn separates(&self, g: &InteractionGraph) -> bool {
        g.edges.keys().all(|(u, v)| {
            (self.side_a.contains(u) && self.side_b.contains(v))
                || (self.side_b.contains(u) && self.side_a.contains(v))
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum BipartitionResult {
    Bipartite(Bipartition),
    /// Closed walk `v₀ v₁ … v_{2m}` with `v_{2m}` adjacent to `v₀`, of odd length.
    OddCycle { cycle: Vec<usize> },
}

impl BipartitionResult {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, BipartitionResult::Bipartite(_))
    }
}

/// Breadth-first two-colouring; the lowest vertex of each component goes to `side_a`.
pub fn bipartition(g: &InteractionGraph) -> BipartitionResult {
    let adj = g.neighbours();
    let mut colour: BTreeMap<usize, (bool, Option<usize>)> = BTreeMap::new();
    for &root in &g.vertices {
        if colour.contains_key(&root) {
            continue;
        }
        colour.insert(root, (false, None));
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let cu = colour[&u].0;
            for &w in &adj[&u] {
                match colour.get(&w) {
                    None => {
                        colour.insert(w, (!cu, Some(u)));
                        queue.push_back(w);
                    }
                    Some(&(cw, _)) if cw == cu => {
                        return BipartitionResult::OddCycle {
                            cycle: odd_cycle(&colour, u, w),
                        }
                    }
                    _ => {}
                }
            }
        }
    }
    let (a, b): (Vec<_>, Vec<_>) = colour.iter().partition(|(_, (c, _))| !c);
    BipartitionResult::Bipartite(Bipartition {
        side_a: a.into_iter().map(|(&v, _)| v).collect(),
        side_b: b.into_iter().map(|(&v, _)| v).collect(),
    })
}

/// Joins the BFS-tree paths from `u` and `w` (same colour, adjacent) at their meeting point.
fn odd_cycle(colour: &BTreeMap<usize, (bool, Option<usize>)>, u: usize, w: usize) -> Vec<usize> {
    let path = |mut v: usize| {
        let mut p = vec![v];
        while let Some(parent) = colour[&v].1 {
            p.push(parent);
            v = parent;
        }
        p
    };
    let pu = path(u);
    let pw = path(w);
    // strip the shared tail, keeping the lowest common ancestor once
    let mut i = pu.len();
    let mut j = pw.len();
    while i > 1 && j > 1 && pu[i - 2] == pw[j - 2] {
        i -= 1;
        j -= 1;
    }
    let mut cycle: Vec<usize> = pu[..i].to_vec();
    cycle.extend(pw[..j - 1].iter().rev());
    cycle
}

/// Conjugates every generator and logical by Hadamards on `side_b`.
///
/// The result is CSS exactly when no transformed generator or logical mixes
/// X and Z letters, so applying the same transform twice restores the input.
pub fn hadamard_transform(c: &StabilizerCode, b: &Bipartition) -> Result<StabilizerCode> {
    let covered: BTreeSet<usize> = b.side_a.union(&b.side_b).copied().collect();
    if let Some(q) = (0..c.n).find(|q| !covered.contains(q)) {
        return Err(Error::Parameter(format!(
            "bipartition does not cover physical qubit {q}"
        )));
    }
    if let Some(q) = covered.iter().find(|&&q| q >= c.n) {
        return Err(Error::Parameter(format!(
            "bipartition names qubit {q} outside a code on {} qubits",
            c.n
        )));
    }
    if let Some(q) = b.side_a.intersection(&b.side_b).next() {
        return Err(Error::Parameter(format!("qubit {q} is on both sides")));
    }
    let side_b: Vec<usize> = b.side_b.iter().copied().collect();
    let h = |ops: &[PauliString]| -> Vec<PauliString> {
        ops.iter().map(|p| p.hadamard_conjugate(side_b.iter().copied())).collect()
    };
    let generators = h(&c.generators);
    let logical_x = h(&c.logical_x);
    let logical_z = h(&c.logical_z);
    let mixed = |p: &PauliString| !p.x_bits().is_zero() && !p.z_bits().is_zero();
    let css = !generators.iter().chain(&logical_x).chain(&logical_z).any(mixed);
    StabilizerCode::new(c.n, c.k, css, generators, logical_x, logical_z, c.labels.clone())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphReport {
    pub vertices: usize,
    pub edges: usize,
    pub max_degree: usize,
    pub planar: bool,
    pub bipartite: bool,
    pub interaction_types: BTreeSet<String>,
    pub witness: GraphWitness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphWitness {
    pub planarity: PlanarityWitness,
    pub bipartition: BipartitionResult,
}

pub fn graph_report(g: &InteractionGraph) -> GraphReport {
    let p = g.planarity();
    let b = g.bipartition();
    GraphReport {
        vertices: g.num_vertices(),
        edges: g.num_edges(),
        max_degree: g.max_degree(),
        planar: p.planar,
        bipartite: b.is_bipartite(),
        interaction_types: g.interaction_types(),
        witness: GraphWitness {
            planarity: p.witness,
            bipartition: b,
        },
    }
}
