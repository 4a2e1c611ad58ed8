//! Bratteli diagrams of the chains {H_{k,n}(q)}_n, their quotients, minimal
//! generating sets and the diagrams of the centralisers.

use crate::error::{Error, Result};
use crate::shapes::{kostka, res_set, s_set, Partition};
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;
use std::collections::{BTreeSet, HashMap};
use std::fmt::Write;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Vertex {
    pub partition: Partition,
    pub dim: u64,
}

/// An edge between vertex `upper` of level n and vertex `lower` of level n+1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub upper: usize,
    pub lower: usize,
    pub multiplicity: u32,
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let len = if self.multiplicity == 1 { 2 } else { 3 };
        let mut seq = s.serialize_seq(Some(len))?;
        seq.serialize_element(&self.upper)?;
        seq.serialize_element(&self.lower)?;
        if self.multiplicity != 1 {
            seq.serialize_element(&self.multiplicity)?;
        }
        seq.end()
    }
}

/// A vertex address: level and partition.
pub type Node = (usize, Partition);

/// Levels `0..=n_max` of a Bratteli diagram; `edges[n]` joins levels n and n+1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BratteliDiagram {
    pub levels: Vec<Vec<Vertex>>,
    pub edges: Vec<Vec<Edge>>,
}

impl BratteliDiagram {
    pub fn depth(&self) -> usize {
        self.levels.len().saturating_sub(1)
    }

    pub fn index_of(&self, level: usize, p: &Partition) -> Option<usize> {
        self.levels.get(level)?.iter().position(|v| &v.partition == p)
    }

    pub fn vertex_count(&self) -> usize {
        self.levels.iter().map(|l| l.len()).sum()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.iter().map(|e| e.len()).sum()
    }

    /// Σ dim² at a level: the dimension of the algebra there.
    pub fn algebra_dim(&self, level: usize) -> u64 {
        self.levels[level].iter().map(|v| v.dim * v.dim).sum()
    }

    pub fn partitions(&self, level: usize) -> Vec<Partition> {
        self.levels[level].iter().map(|v| v.partition.clone()).collect()
    }

    fn lower_neighbours(&self, level: usize, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.get(level).into_iter().flatten().filter(move |e| e.upper == i).map(|e| e.lower)
    }

    fn upper_neighbours(&self, level: usize, i: usize) -> impl Iterator<Item = usize> + '_ {
        let below = if level == 0 { None } else { self.edges.get(level - 1) };
        below.into_iter().flatten().filter(move |e| e.lower == i).map(|e| e.upper)
    }

    /// Checks that every vertex dimension is the sum over its upper neighbours.
    pub fn dimensions_consistent(&self) -> bool {
        (1..self.levels.len()).all(|n| {
            self.levels[n].iter().enumerate().all(|(i, v)| {
                let s: u64 = self.edges[n - 1]
                    .iter()
                    .filter(|e| e.lower == i)
                    .map(|e| self.levels[n - 1][e.upper].dim * e.multiplicity as u64)
                    .sum();
                s == v.dim
            })
        })
    }

    fn locate(&self, nodes: &[Node]) -> Result<Vec<(usize, usize)>> {
        nodes
            .iter()
            .map(|(l, p)| {
                self.index_of(*l, p)
                    .map(|i| (*l, i))
                    .ok_or_else(|| Error::Invalid(format!("no vertex {p} at level {l}")))
            })
            .collect()
    }

    fn name(&self, (l, i): (usize, usize)) -> Node {
        (l, self.levels[l][i].partition.clone())
    }
}

/// The diagram of {H_{k,n}(q)} for n ≤ n_max, with vertices S_{k,n} in
/// reverse lexicographic order and edges given by Res_k.
pub fn build_chain(k: &[usize], n_max: usize) -> Result<BratteliDiagram> {
    if k.len() < n_max {
        return Err(Error::OutOfRange(format!("k has {} entries, need {n_max}", k.len())));
    }
    let mut levels: Vec<Vec<Vertex>> = vec![vec![Vertex { partition: Partition::empty(), dim: 1 }]];
    let mut edges = Vec::new();
    for n in 1..=n_max {
        let prev: HashMap<&Partition, usize> = levels[n - 1].iter().enumerate().map(|(i, v)| (&v.partition, i)).collect();
        let mut level = Vec::new();
        let mut es = Vec::new();
        for (j, lambda) in s_set(k, n)?.into_iter().enumerate() {
            let mut dim = 0;
            for mu in res_set(&lambda, k, n)? {
                let i = prev[&mu];
                dim += levels[n - 1][i].dim;
                es.push(Edge { upper: i, lower: j, multiplicity: 1 });
            }
            let expected = kostka(&lambda, &k[..n])?;
            if dim != expected {
                return Err(Error::Invalid(format!("dimension of {lambda} is {dim}, Kostka number {expected}")));
            }
            level.push(Vertex { partition: lambda, dim });
        }
        es.sort_by_key(|e| (e.upper, e.lower));
        edges.push(es);
        levels.push(level);
    }
    Ok(BratteliDiagram { levels, edges })
}

/// ⟨S⟩: the seed vertices together with everything reachable downwards.
pub fn generated(d: &BratteliDiagram, seed: &[Node]) -> Result<BTreeSet<Node>> {
    Ok(closure(d, &d.locate(seed)?).into_iter().map(|x| d.name(x)).collect())
}

fn closure(d: &BratteliDiagram, seed: &[(usize, usize)]) -> BTreeSet<(usize, usize)> {
    let mut out: BTreeSet<(usize, usize)> = seed.iter().copied().collect();
    for level in 0..d.depth() {
        let here: Vec<usize> = out.iter().filter(|(l, _)| *l == level).map(|(_, i)| *i).collect();
        for i in here {
            for j in d.lower_neighbours(level, i).collect::<Vec<_>>() {
                out.insert((level + 1, j));
            }
        }
    }
    out
}

/// The quotient generated by `seed`: ⟨seed⟩ and its incident edges are removed.
pub fn quotient(d: &BratteliDiagram, seed: &[Node]) -> Result<BratteliDiagram> {
    let removed = closure(d, &d.locate(seed)?);
    let mut remap: Vec<Vec<Option<usize>>> = Vec::new();
    let mut levels = Vec::new();
    for (l, level) in d.levels.iter().enumerate() {
        let mut map = Vec::new();
        let mut kept = Vec::new();
        for (i, v) in level.iter().enumerate() {
            if removed.contains(&(l, i)) {
                map.push(None);
            } else {
                map.push(Some(kept.len()));
                kept.push(v.clone());
            }
        }
        remap.push(map);
        levels.push(kept);
    }
    let edges = d
        .edges
        .iter()
        .enumerate()
        .map(|(l, es)| {
            es.iter()
                .filter_map(|e| {
                    let u = remap[l][e.upper]?;
                    let v = remap[l + 1][e.lower]?;
                    Some(Edge { upper: u, lower: v, multiplicity: e.multiplicity })
                })
                .collect()
        })
        .collect();
    Ok(BratteliDiagram { levels, edges })
}

/// Minimal elements of a path-closed vertex set: those with no upper
/// neighbour inside the set.
pub fn minimal_generators(d: &BratteliDiagram, removed: &[Node]) -> Result<Vec<Node>> {
    let set: BTreeSet<(usize, usize)> = d.locate(removed)?.into_iter().collect();
    if closure(d, &set.iter().copied().collect::<Vec<_>>()) != set {
        return Err(Error::Precondition("removed set is not closed under downward paths".into()));
    }
    Ok(set
        .iter()
        .filter(|&&(l, i)| d.upper_neighbours(l, i).all(|u| !set.contains(&(l - 1, u))))
        .map(|&x| d.name(x))
        .collect())
}

/// Whether the ideals of a removed set give a chain of quotient algebras:
/// a vertex is removed exactly when all its lower neighbours are.
pub fn is_chain_of_quotients(d: &BratteliDiagram, removed: &[Node]) -> Result<bool> {
    let set: BTreeSet<(usize, usize)> = d.locate(removed)?.into_iter().collect();
    for l in 0..d.depth() {
        for i in 0..d.levels[l].len() {
            let all_below = d.lower_neighbours(l, i).all(|j| set.contains(&(l + 1, j)));
            if set.contains(&(l, i)) != all_below {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All vertices of length greater than `n_rows`.
pub fn long_vertices(d: &BratteliDiagram, n_rows: usize) -> Vec<Node> {
    let mut out = Vec::new();
    for (l, level) in d.levels.iter().enumerate() {
        for v in level {
            if v.partition.len() > n_rows {
                out.push((l, v.partition.clone()));
            }
        }
    }
    out
}

/// Vertices λ at level n with l(λ) < n: the seed of the k → k−1 quotient.
pub fn short_vertices(d: &BratteliDiagram) -> Vec<Node> {
    let mut out = Vec::new();
    for (l, level) in d.levels.iter().enumerate() {
        for v in level {
            if v.partition.len() < l {
                out.push((l, v.partition.clone()));
            }
        }
    }
    out
}

/// The diagram of the centralisers for gl_N: the quotient by all vertices
/// with more than N rows. For weakly decreasing k, additionally asserts that
/// the level-(N+1) vertices with N+1 rows already generate everything removed.
pub fn centralizer_diagram(k: &[usize], big_n: usize, n_max: usize) -> Result<BratteliDiagram> {
    if big_n == 0 {
        return Err(Error::OutOfRange("N must be at least 1".into()));
    }
    let d = build_chain(k, n_max)?;
    let removed = long_vertices(&d, big_n);
    let decreasing = k[..n_max].windows(2).all(|w| w[0] >= w[1]);
    if decreasing && n_max > big_n {
        let seed: Vec<Node> = removed.iter().filter(|(l, _)| *l == big_n + 1).cloned().collect();
        let gen = generated(&d, &seed)?;
        if gen != removed.iter().cloned().collect::<BTreeSet<_>>() {
            return Err(Error::Invalid("level N+1 vertices do not generate the removed set".into()));
        }
    }
    quotient(&d, &removed)
}

fn label(p: &Partition) -> String {
    if p.is_empty() {
        "∅".to_string()
    } else {
        p.to_string()
    }
}

/// Deterministic Graphviz output, one rank per level.
pub fn to_dot(d: &BratteliDiagram) -> String {
    let mut s = String::from("digraph bratteli {\n  node [shape=plaintext];\n");
    for (l, level) in d.levels.iter().enumerate() {
        s.push_str("  { rank=same;");
        for (i, v) in level.iter().enumerate() {
            write!(s, " \"v{l}_{i}\" [label=\"{} ({})\"];", label(&v.partition), v.dim).unwrap();
        }
        s.push_str(" }\n");
    }
    for (l, es) in d.edges.iter().enumerate() {
        for e in es {
            writeln!(s, "  \"v{l}_{}\" -> \"v{}_{}\";", e.upper, l + 1, e.lower).unwrap();
        }
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn dims(d: &BratteliDiagram, l: usize) -> Vec<u64> {
        d.levels[l].iter().map(|v| v.dim).collect()
    }

    #[test]
    fn chain_diagram_dimensions() {
        let d = build_chain(&[2; 3], 3).unwrap();
        assert_eq!(dims(&d, 3), vec![1, 2, 3, 1, 1, 2, 1]);
        assert_eq!(d.partitions(3), vec![p(&[6]), p(&[5, 1]), p(&[4, 2]), p(&[4, 1, 1]), p(&[3, 3]), p(&[3, 2, 1]), p(&[2, 2, 2])]);
        let y = build_chain(&[1; 5], 5).unwrap();
        assert_eq!(dims(&y, 4), vec![1, 3, 2, 3, 1]);
        let mut l5 = dims(&y, 5);
        l5.sort();
        assert_eq!(l5, vec![1, 1, 4, 4, 5, 5, 6]);
        let a3 = build_chain(&[3, 1, 1, 1], 4).unwrap();
        let named: Vec<(Partition, u64)> = a3.levels[4].iter().map(|v| (v.partition.clone(), v.dim)).collect();
        for (q, dim) in [(p(&[6]), 1), (p(&[5, 1]), 3), (p(&[4, 2]), 3), (p(&[3, 3]), 1), (p(&[4, 1, 1]), 3), (p(&[3, 2, 1]), 2), (p(&[3, 1, 1, 1]), 1)] {
            assert!(named.contains(&(q, dim)));
        }
        assert_eq!(a3.algebra_dim(4), 34);
        assert!(d.dimensions_consistent() && y.dimensions_consistent() && a3.dimensions_consistent());
    }

    #[test]
    fn temperley_lieb_quotient() {
        let y = build_chain(&[1; 5], 5).unwrap();
        let tl = quotient(&y, &[(3, p(&[1, 1, 1]))]).unwrap();
        for level in &tl.levels {
            assert!(level.iter().all(|v| v.partition.len() <= 2));
        }
        assert_eq!(tl.algebra_dim(3), 5);
        assert_eq!(tl.algebra_dim(5), 42);
        assert_eq!(quotient(&y, &[]).unwrap(), y);
        assert!(quotient(&y, &[(2, p(&[3]))]).is_err());
    }

    #[test]
    fn k_minus_one_quotients() {
        let d = build_chain(&[2; 5], 5).unwrap();
        let short = short_vertices(&d);
        assert_eq!(minimal_generators(&d, &short).unwrap(), vec![(2, p(&[4])), (3, p(&[3, 3]))]);
        let q = quotient(&d, &short).unwrap();
        let smaller = build_chain(&[1; 5], 5).unwrap();
        for l in 0..=5 {
            let mapped: Vec<Partition> = q.partitions(l).iter().map(|x| crate::shapes::phi_column_removal(x, l).unwrap()).collect();
            assert_eq!(mapped, smaller.partitions(l));
            assert_eq!(dims(&q, l), dims(&smaller, l));
        }
        assert_eq!(q.edges, smaller.edges);
        let y = build_chain(&[1; 4], 4).unwrap();
        assert_eq!(minimal_generators(&y, &short_vertices(&y)).unwrap(), vec![(2, p(&[2]))]);
        assert!(minimal_generators(&y, &[(2, p(&[2]))]).is_err());
    }

    #[test]
    fn centraliser_diagrams() {
        let c = centralizer_diagram(&[2; 3], 2, 3).unwrap();
        assert_eq!(c.partitions(3), vec![p(&[6]), p(&[5, 1]), p(&[4, 2]), p(&[3, 3])]);
        assert_eq!(c.algebra_dim(3), 15);
        let tl = centralizer_diagram(&[1; 6], 2, 6).unwrap();
        let catalan = [1, 1, 2, 5, 14, 42, 132];
        for (n, &cat) in catalan.iter().enumerate() {
            assert_eq!(tl.algebra_dim(n), cat);
        }
        assert_eq!(centralizer_diagram(&[2; 3], 3, 3).unwrap(), build_chain(&[2; 3], 3).unwrap());
    }

    #[test]
    fn increasing_counterexample() {
        let d = build_chain(&[1, 1, 1, 3], 4).unwrap();
        let gen = generated(&d, &[(3, p(&[1, 1, 1]))]).unwrap();
        assert!(d.index_of(4, &p(&[3, 2, 1])).is_some());
        assert!(!gen.contains(&(4, p(&[3, 2, 1]))));
        assert!(centralizer_diagram(&[1, 1, 1, 3], 2, 4).is_ok());
    }

    #[test]
    fn dot_output() {
        let d = build_chain(&[], 0).unwrap();
        assert_eq!(d.vertex_count(), 1);
        assert!(to_dot(&d).contains("∅ (1)"));
        let y = build_chain(&[1, 1], 2).unwrap();
        assert_eq!((y.vertex_count(), y.edge_count()), (4, 3));
        assert_eq!(to_dot(&y).matches("->").count(), 3);
        assert_eq!(to_dot(&y), to_dot(&y.clone()));
        let js = serde_json::to_string(&y).unwrap();
        assert!(js.starts_with("{\"levels\":[[{\"partition\":[],\"dim\":1}]"));
    }
}
