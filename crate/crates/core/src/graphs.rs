//! Multigraphs, cographic matroids, broken-circuit complexes and chromatic
//! polynomials.

use std::collections::HashSet;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{Face, SimplicialComplex, MAX_GROUND_SET};
use crate::error::{Error, Result};
use crate::poly::{IntegerPolynomial, Polynomial, Reliability};
use crate::union_find::DisjointSets;

/// Largest edge count accepted by the exhaustive subset sweeps.
pub const MAX_SWEEP_EDGES: usize = 30;

/// Undirected multigraph; edge `i` is ground element `i` of derived complexes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multigraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if edges.len() > MAX_GROUND_SET {
            return Err(Error::GroundSetTooLarge(edges.len()));
        }
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= n || v >= n) {
            return Err(Error::Malformed(format!(
                "edge ({u}, {v}) leaves the {n} vertices"
            )));
        }
        Ok(Multigraph { n, edges })
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_self_loop(&self) -> bool {
        self.edges.iter().any(|&(u, v)| u == v)
    }

    /// Components of the spanning subgraph with the given edges.
    pub fn component_count_with(&self, kept: Face) -> usize {
        let mut ds = DisjointSets::new(self.n);
        for e in kept.iter() {
            let (u, v) = self.edges[e];
            ds.union(u, v);
        }
        ds.set_count()
    }

    pub fn component_count(&self) -> usize {
        self.component_count_with(Face::full(self.edge_count()))
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_count() == 1
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let g: Multigraph = serde_json::from_str(text)?;
        Multigraph::new(g.n, g.edges)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }

    /// Circuits as edge sets. Loops are 1-circuits and parallel pairs 2-circuits.
    pub fn circuits(&self) -> Vec<Face> {
        let m = self.edge_count();
        let mut adjacency: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.n];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            adjacency[u].push((v, i));
            if u != v {
                adjacency[v].push((u, i));
            }
        }
        let mut found: HashSet<u64> = HashSet::new();
        let mut out = Vec::new();
        // each circuit is found once, from its smallest edge e = (u, v), as a
        // simple path v -> u through larger edges
        for e in 0..m {
            let (u, v) = self.edges[e];
            if u == v {
                if found.insert(Face::singleton(e).bits()) {
                    out.push(Face::singleton(e));
                }
                continue;
            }
            let mut visited = vec![false; self.n];
            visited[v] = true;
            let mut path = Face::singleton(e);
            walk(
                &adjacency,
                e,
                v,
                u,
                &mut visited,
                &mut path,
                &mut found,
                &mut out,
            );
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.lex_cmp(*b)));
        out
    }
}

#[allow(clippy::too_many_arguments)]
fn walk(
    adjacency: &[Vec<(usize, usize)>],
    least: usize,
    at: usize,
    target: usize,
    visited: &mut [bool],
    path: &mut Face,
    found: &mut HashSet<u64>,
    out: &mut Vec<Face>,
) {
    for &(next, edge) in &adjacency[at] {
        if edge <= least || path.contains(edge) {
            continue;
        }
        if next == target {
            let circuit = path.with(edge);
            if found.insert(circuit.bits()) {
                out.push(circuit);
            }
            continue;
        }
        if visited[next] {
            continue;
        }
        visited[next] = true;
        *path = path.with(edge);
        walk(adjacency, least, next, target, visited, path, found, out);
        *path = path.without(edge);
        visited[next] = false;
    }
}

/// `K_4` on vertices `A=0, B=1, C=2, D=3`; edges `e1..e6` are
/// `AB, BD, DC, AC, AD, CB`, so `e1/e3`, `e2/e4`, `e5/e6` are opposite.
pub fn k4() -> Multigraph {
    Multigraph {
        n: 4,
        edges: vec![(0, 1), (1, 3), (3, 2), (0, 2), (0, 3), (2, 1)],
    }
}

/// `K_4` with the opposite edges `e1` and `e3` each replaced by six parallel edges.
pub fn royle_sokal() -> Multigraph {
    let mut edges = vec![(0, 1); 6];
    edges.push((1, 3));
    edges.extend(vec![(3, 2); 6]);
    edges.extend([(0, 2), (0, 3), (2, 1)]);
    Multigraph { n: 4, edges }
}

fn require_connected(g: &Multigraph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// Complex of edge sets whose removal leaves the graph connected. Facets are
/// complements of spanning trees.
pub fn cographic_matroid(g: &Multigraph) -> Result<SimplicialComplex> {
    require_connected(g)?;
    let m = g.edge_count();
    let all = Face::full(m);
    let facets: Vec<Face> = all
        .subsets_of_size(g.n - 1)
        .into_par_iter()
        .filter(|&tree| g.component_count_with(tree) == 1)
        .map(|tree| all.difference(tree))
        .collect();
    SimplicialComplex::from_facets(m, facets)
}

/// All-terminal reliability by sweeping every edge subset, with `q` the edge
/// failure probability.
pub fn reliability_by_subsets(g: &Multigraph) -> Result<IntegerPolynomial> {
    require_connected(g)?;
    let m = g.edge_count();
    if m > MAX_SWEEP_EDGES {
        return Err(Error::Resource(format!(
            "{m} edges is too many for a subset sweep"
        )));
    }
    // counts[k]: connected spanning subgraphs missing exactly k edges
    let counts = (0..1u64 << m)
        .into_par_iter()
        .fold(
            || vec![0u64; m + 1],
            |mut acc, kept| {
                if g.component_count_with(Face::from_bits(kept)) == 1 {
                    acc[m - kept.count_ones() as usize] += 1;
                }
                acc
            },
        )
        .reduce(
            || vec![0u64; m + 1],
            |a, b| a.iter().zip(&b).map(|(x, y)| x + y).collect(),
        );
    let one_minus_q = IntegerPolynomial::one_minus_q();
    Ok(counts
        .iter()
        .enumerate()
        .fold(Polynomial::zero(), |acc, (k, &c)| {
            let term = one_minus_q.pow(m - k).shift(k).scale(&BigInt::from(c));
            &acc + &term
        }))
}

/// Broken-circuit complex. `order` lists the edges from least to greatest;
/// `None` means list order.
pub fn broken_circuit_complex(
    g: &Multigraph,
    order: Option<&[usize]>,
) -> Result<SimplicialComplex> {
    if g.has_self_loop() {
        return Err(Error::Domain(
            "a self-loop makes the empty set a broken circuit".into(),
        ));
    }
    let m = g.edge_count();
    let rank = edge_rank(g, order)?;
    let broken: Vec<Face> = g
        .circuits()
        .into_iter()
        .map(|c| {
            let least = c.iter().min_by_key(|&e| rank[e]).expect("nonempty circuit");
            c.without(least)
        })
        .collect();
    let d = g.n - g.component_count();
    // faces are forests, so facets have exactly n - c edges
    let facets: Vec<Face> = Face::full(m)
        .subsets_of_size(d)
        .into_par_iter()
        .filter(|&f| !broken.iter().any(|b| b.is_subset_of(f)))
        .collect();
    SimplicialComplex::from_facets(m, facets)
}

/// Position of every edge in the linear order.
fn edge_rank(g: &Multigraph, order: Option<&[usize]>) -> Result<Vec<usize>> {
    let m = g.edge_count();
    let Some(order) = order else {
        return Ok((0..m).collect());
    };
    let mut rank = vec![usize::MAX; m];
    if order.len() != m {
        return Err(Error::Malformed(format!(
            "edge order has {} entries, expected {m}",
            order.len()
        )));
    }
    for (pos, &e) in order.iter().enumerate() {
        if e >= m || rank[e] != usize::MAX {
            return Err(Error::Malformed(format!(
                "edge order is not a permutation of 0..{m}"
            )));
        }
        rank[e] = pos;
    }
    Ok(rank)
}

/// Chromatic polynomial in `x` by deletion-contraction.
pub fn chromatic_polynomial(g: &Multigraph) -> IntegerPolynomial {
    if g.has_self_loop() {
        return Polynomial::zero();
    }
    let mut edges: Vec<(usize, usize)> =
        g.edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    edges.sort_unstable();
    edges.dedup();
    Polynomial::new(chromatic_simple(g.n, &edges))
}

fn chromatic_simple(n: usize, edges: &[(usize, usize)]) -> Vec<BigInt> {
    let Some((&(u, v), rest)) = edges.split_last() else {
        let mut c = vec![BigInt::from(0); n + 1];
        c[n] = BigInt::from(1);
        return c;
    };
    let deleted = chromatic_simple(n, rest);
    // merge v into u and close the gap left by v
    let relabel = |x: usize| {
        let x = if x == v { u } else { x };
        if x > v {
            x - 1
        } else {
            x
        }
    };
    let mut merged: Vec<(usize, usize)> = rest
        .iter()
        .map(|&(a, b)| {
            let (a, b) = (relabel(a), relabel(b));
            (a.min(b), a.max(b))
        })
        .collect();
    merged.sort_unstable();
    merged.dedup();
    let contracted = chromatic_simple(n - 1, &merged);
    deleted
        .into_iter()
        .enumerate()
        .map(|(i, c)| c - contracted.get(i).cloned().unwrap_or_default())
        .collect()
}

/// Both sides of the reliability form of the chromatic polynomial, cleared of
/// denominators.
#[derive(Clone, Debug, PartialEq)]
pub struct ChromaticIdentityReport {
    /// `(-q)^n pi(G, (q-1)/q)`.
    pub lhs: IntegerPolynomial,
    /// `(1-q)^c Rel(BR)` with `Rel` summed over all faces.
    pub rhs_full: IntegerPolynomial,
    /// `(1-q)^c h_BR(q)`.
    pub rhs_h_form: IntegerPolynomial,
    pub components: usize,
    pub reliability: Reliability,
}

impl ChromaticIdentityReport {
    pub fn holds_full(&self) -> bool {
        self.lhs == self.rhs_full
    }

    pub fn holds_h_form(&self) -> bool {
        self.lhs == self.rhs_h_form
    }
}

/// Evaluates `(-q)^n pi(G, (q-1)/q)` as an integer polynomial in `q`.
pub fn chromatic_in_q(pi: &IntegerPolynomial, n: usize) -> IntegerPolynomial {
    let q_minus_1 = IntegerPolynomial::from_i64s(&[-1, 1]);
    let sign = if n.is_multiple_of(2) {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    };
    pi.coeffs()
        .iter()
        .enumerate()
        .fold(Polynomial::zero(), |acc, (i, c)| {
            let term = q_minus_1.pow(i).shift(n - i).scale(&(c * &sign));
            &acc + &term
        })
}

pub fn chromatic_reliability_identity(
    g: &Multigraph,
    order: Option<&[usize]>,
) -> Result<ChromaticIdentityReport> {
    let br = broken_circuit_complex(g, order)?;
    let c = g.component_count();
    let reliability = br.reliability()?;
    let factor = IntegerPolynomial::one_minus_q().pow(c);
    Ok(ChromaticIdentityReport {
        lhs: chromatic_in_q(&chromatic_polynomial(g), g.n),
        rhs_full: &factor * &reliability.expand(),
        rhs_h_form: &factor * &reliability.h,
        components: c,
        reliability,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::FVector;

    fn k3() -> Multigraph {
        Multigraph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn k4_cographic() {
        let c = cographic_matroid(&k4()).unwrap();
        assert_eq!(c.f_vector(), FVector::from_u64s(&[1, 6, 15, 16]));
        let rel = c.reliability().unwrap();
        assert_eq!(rel.expand(), reliability_by_subsets(&k4()).unwrap());
    }

    #[test]
    fn tree_has_unit_reliability() {
        let path = Multigraph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let c = cographic_matroid(&path).unwrap();
        assert_eq!(c.dimension(), Some(0));
        assert_eq!(
            c.reliability().unwrap().normalized().h,
            IntegerPolynomial::one()
        );
    }

    #[test]
    fn disconnected_is_rejected() {
        let g = Multigraph::new(3, vec![(0, 1)]).unwrap();
        assert!(matches!(cographic_matroid(&g), Err(Error::Disconnected)));
    }

    #[test]
    fn royle_sokal_shape() {
        let g = royle_sokal();
        assert_eq!((g.n, g.edge_count()), (4, 16));
        let c = cographic_matroid(&g).unwrap();
        assert_eq!(c.dimension(), Some(13));
        let rel = c.reliability().unwrap();
        assert_eq!(rel.unit_root_multiplicity, 3);
        assert_eq!(
            rel.h,
            IntegerPolynomial::from_i64s(&[1, 3, 6, 10, 14, 18, 22, 26, 26, 22, 18, 14, 10, 6])
        );
    }

    #[test]
    fn circuits_of_small_graphs() {
        assert_eq!(k3().circuits(), vec![Face::full(3)]);
        let k4_circuits = k4().circuits();
        assert_eq!(k4_circuits.len(), 7);
        assert_eq!(k4_circuits.iter().filter(|c| c.len() == 3).count(), 4);
        let parallel = Multigraph::new(2, vec![(0, 1), (1, 0), (1, 1)]).unwrap();
        assert_eq!(
            parallel.circuits(),
            vec![Face::singleton(2), Face::from_elements([0, 1]).unwrap()]
        );
    }

    #[test]
    fn broken_circuits_of_k3() {
        let br = broken_circuit_complex(&k3(), None).unwrap();
        assert_eq!(br.f_vector(), FVector::from_u64s(&[1, 3, 2]));
        assert!(!br.contains_face(Face::from_elements([1, 2]).unwrap()));
        let reversed = broken_circuit_complex(&k3(), Some(&[2, 1, 0])).unwrap();
        assert!(!reversed.contains_face(Face::from_elements([0, 1]).unwrap()));
        assert!(broken_circuit_complex(&k3(), Some(&[0, 0, 1])).is_err());
    }

    #[test]
    fn broken_circuits_edge_cases() {
        let forest = Multigraph::new(5, vec![(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(
            broken_circuit_complex(&forest, None).unwrap(),
            SimplicialComplex::simplex(3)
        );
        assert_eq!(
            broken_circuit_complex(&k4(), None).unwrap().dimension(),
            Some(3)
        );
        let looped = Multigraph::new(1, vec![(0, 0)]).unwrap();
        assert!(matches!(
            broken_circuit_complex(&looped, None),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(
            chromatic_polynomial(&k3()),
            IntegerPolynomial::from_i64s(&[0, 2, -3, 1])
        );
        let empty = Multigraph::new(3, vec![]).unwrap();
        assert_eq!(chromatic_polynomial(&empty), IntegerPolynomial::monomial(3));
        assert_eq!(
            chromatic_polynomial(&k4()),
            IntegerPolynomial::from_i64s(&[0, -6, 11, -6, 1])
        );
    }

    #[test]
    fn chromatic_identity_on_k3() {
        let r = chromatic_reliability_identity(&k3(), None).unwrap();
        assert_eq!(r.lhs, IntegerPolynomial::from_i64s(&[1, 0, -1]));
        assert!(r.holds_h_form());
        // the fully expanded reliability carries an extra (1-q)^(m-n)
        assert!(!r.holds_full());
        assert_eq!(r.lhs, r.reliability.expand());
    }

    #[test]
    fn single_edge_identity() {
        let g = Multigraph::new(2, vec![(0, 1)]).unwrap();
        let r = chromatic_reliability_identity(&g, None).unwrap();
        assert!(r.holds_full());
        assert!(r.holds_h_form());
    }

    #[test]
    fn json_round_trip() {
        let g = royle_sokal();
        assert_eq!(Multigraph::from_json(&g.to_json()).unwrap(), g);
        let g = Multigraph::from_json(r#"{"n": 2, "edges": [[0, 1], [1, 1]]}"#).unwrap();
        assert_eq!(g.edges, vec![(0, 1), (1, 1)]);
        assert!(Multigraph::from_json(r#"{"n": 2, "edges": [[0, 2]]}"#).is_err());
    }
}
