//! Corpus generators shared by the acceptance checks.

#![allow(dead_code)]

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use relroots::complex::{Face, SimplicialComplex};
use relroots::graphs::Multigraph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every complex on `0..m` (every down-closed family of subsets), including
/// the void complex.
pub fn all_complexes(m: usize) -> Vec<SimplicialComplex> {
    assert!(m <= 5, "the count explodes past five elements");
    let mut subsets: Vec<u64> = (0..1u64 << m).collect();
    subsets.sort_by_key(|s| (s.count_ones(), *s));
    let mut out = Vec::new();
    let mut chosen: Vec<u64> = Vec::new();
    fn walk(
        i: usize,
        subsets: &[u64],
        present: u64,
        chosen: &mut Vec<u64>,
        m: usize,
        out: &mut Vec<SimplicialComplex>,
    ) {
        if i == subsets.len() {
            let faces = chosen.iter().map(|&b| Face::from_bits(b));
            out.push(SimplicialComplex::from_facets(m, faces.collect::<Vec<_>>()).unwrap());
            return;
        }
        let s = subsets[i];
        walk(i + 1, subsets, present, chosen, m, out);
        // present is indexed by subset bits (m <= 5 keeps it within 64 bits)
        let closed = Face::from_bits(s)
            .iter()
            .all(|x| present >> (s & !(1 << x)) & 1 == 1);
        if closed {
            chosen.push(s);
            walk(i + 1, subsets, present | 1 << s, chosen, m, out);
            chosen.pop();
        }
    }
    walk(0, &subsets, 0, &mut chosen, m, &mut out);
    out
}

/// Random complex on `m` elements generated by up to `max_facets` random sets.
pub fn random_complex(m: usize, max_facets: usize, rng: &mut ChaCha8Rng) -> SimplicialComplex {
    let count = rng.random_range(1..=max_facets);
    let sets: Vec<Face> = (0..count)
        .map(|_| Face::from_bits(rng.random_range(0..1u64 << m)))
        .collect();
    SimplicialComplex::from_facets(m, sets).unwrap()
}

/// Families of `r`-subsets of `0..m` that satisfy the basis exchange axiom.
pub fn basis_families(m: usize, r: usize) -> Vec<Vec<Face>> {
    let candidates = Face::full(m).subsets_of_size(r);
    let n = candidates.len();
    assert!(n <= 24, "too many candidate bases");
    let index: HashMap<u64, usize> = candidates
        .iter()
        .enumerate()
        .map(|(i, f)| (f.bits(), i))
        .collect();
    (1u64..1 << n)
        .into_par_iter()
        .filter(|&mask| satisfies_basis_exchange(mask, &candidates, &index))
        .map(|mask| {
            (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| candidates[i])
                .collect()
        })
        .collect()
}

pub fn satisfies_basis_exchange(
    mask: u64,
    candidates: &[Face],
    index: &HashMap<u64, usize>,
) -> bool {
    let members: Vec<Face> = (0..candidates.len())
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| candidates[i])
        .collect();
    let has = |f: Face| index.get(&f.bits()).is_some_and(|&i| mask >> i & 1 == 1);
    members.iter().all(|&b1| {
        members.iter().all(|&b2| {
            b1.difference(b2)
                .iter()
                .all(|x| b2.difference(b1).iter().any(|y| has(b1.without(x).with(y))))
        })
    })
}

/// Connected simple graphs on `0..n`, one per edge subset of `K_n`.
pub fn connected_simple_graphs(n: usize) -> Vec<Multigraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len())
        .filter_map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Multigraph::new(n, edges).unwrap();
            g.is_connected().then_some(g)
        })
        .collect()
}

/// Connected multigraphs (loops and parallel edges allowed) with at most
/// `max_edges` edges, as sorted edge multisets on `n` vertices.
pub fn connected_multigraphs(max_edges: usize) -> Vec<Multigraph> {
    let mut out = Vec::new();
    for n in 1..=max_edges + 1 {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u..n).map(move |v| (u, v))).collect();
        let mut found = Vec::new();
        let mut stack: Vec<(usize, Vec<(usize, usize)>)> = vec![(0, Vec::new())];
        while let Some((start, edges)) = stack.pop() {
            if edges.len() >= n.saturating_sub(1) {
                found.push(edges.clone());
            }
            if edges.len() == max_edges {
                continue;
            }
            for (i, &p) in pairs.iter().enumerate().skip(start) {
                let mut next = edges.clone();
                next.push(p);
                stack.push((i, next));
            }
        }
        out.par_extend(found.into_par_iter().filter_map(|edges| {
            let g = Multigraph::new(n, edges).unwrap();
            g.is_connected().then_some(g)
        }));
    }
    out
}

/// Hyperplanes of size at least `r` of a rank-`r` paving matroid pairwise
/// share at most `r - 2` elements.
fn compatible(a: Face, b: Face, r: usize) -> bool {
    a.intersection(b).len() + 2 <= r
}

fn block_candidates(m: usize, r: usize) -> Vec<Face> {
    (r..m)
        .flat_map(|k| Face::full(m).subsets_of_size(k))
        .collect()
}

/// Every family of large hyperplanes of a rank-`r` paving matroid on `0..m`.
pub fn paving_block_families(m: usize, r: usize) -> Vec<Vec<Face>> {
    fn walk(
        i: usize,
        r: usize,
        candidates: &[Face],
        chosen: &mut Vec<Face>,
        out: &mut Vec<Vec<Face>>,
    ) {
        if i == candidates.len() {
            out.push(chosen.clone());
            return;
        }
        walk(i + 1, r, candidates, chosen, out);
        if chosen.iter().all(|&b| compatible(b, candidates[i], r)) {
            chosen.push(candidates[i]);
            walk(i + 1, r, candidates, chosen, out);
            chosen.pop();
        }
    }
    let candidates = block_candidates(m, r);
    let mut out = Vec::new();
    walk(0, r, &candidates, &mut Vec::new(), &mut out);
    out
}

/// Greedy random family of compatible hyperplanes.
pub fn random_paving_blocks(m: usize, r: usize, rng: &mut ChaCha8Rng) -> Vec<Face> {
    use rand::seq::SliceRandom;
    let mut candidates = block_candidates(m, r);
    candidates.shuffle(rng);
    let keep = rng.random_range(0.05..0.6);
    let mut chosen: Vec<Face> = Vec::new();
    for c in candidates {
        if rng.random_bool(keep) && chosen.iter().all(|&b| compatible(b, c, r)) {
            chosen.push(c);
        }
    }
    chosen
}

/// Bases are the `r`-sets inside no hyperplane.
pub fn paving_from_blocks(m: usize, r: usize, blocks: &[Face]) -> SimplicialComplex {
    let bases: Vec<Face> = Face::full(m)
        .subsets_of_size(r)
        .into_iter()
        .filter(|s| !blocks.iter().any(|b| s.is_subset_of(*b)))
        .collect();
    SimplicialComplex::from_facets(m, bases).unwrap()
}

/// Pure 2-dimensional loopless complex on `m` elements with `f2` edges: a
/// covering matching (with one path of length two for odd `m`), then more edges.
pub fn dim2_witness(m: usize, f2: usize) -> SimplicialComplex {
    let mut edges: Vec<Face> = Vec::new();
    let mut x = 0;
    if m % 2 == 1 {
        edges.push(Face::from_elements([0, 1]).unwrap());
        edges.push(Face::from_elements([1, 2]).unwrap());
        x = 3;
    }
    while x + 1 < m {
        edges.push(Face::from_elements([x, x + 1]).unwrap());
        x += 2;
    }
    for pair in Face::full(m).subsets_of_size(2) {
        if edges.len() >= f2 {
            break;
        }
        if !edges.contains(&pair) {
            edges.push(pair);
        }
    }
    edges.truncate(f2);
    SimplicialComplex::from_facets(m, edges).unwrap()
}
