//! Matroid recognition, standard matroids, shellability, and the structural
//! facts about low-rank matroids that the disk results rest on.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::binomial;
use rayon::prelude::*;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::poly::HVector;

/// Faces `sigma`, `alpha` with `|sigma| < |alpha|` such that no `z` in
/// `alpha \ sigma` extends `sigma` to a face.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExchangeViolation {
    pub sigma: Face,
    pub alpha: Face,
}

/// Checks the exchange axiom.
///
/// Only pairs with `|alpha| = |sigma| + 1` are compared; for a complex the
/// general axiom follows from this case by induction on `|alpha| - |sigma|`.
/// The void complex is not a matroid and yields `Err(None)`.
pub fn exchange_check(c: &SimplicialComplex) -> std::result::Result<(), Option<ExchangeViolation>> {
    if c.is_void() {
        return Err(None);
    }
    let levels = c.faces_by_size();
    let faces: HashSet<u64> = levels.iter().flatten().map(|f| f.bits()).collect();
    for pair in levels.windows(2) {
        let (smaller, larger) = (&pair[0], &pair[1]);
        let violation = larger.par_iter().find_map_first(|&alpha| {
            smaller.iter().find_map(|&sigma| {
                let extendable = alpha
                    .difference(sigma)
                    .iter()
                    .any(|z| faces.contains(&sigma.with(z).bits()));
                (!extendable).then_some(ExchangeViolation { sigma, alpha })
            })
        });
        if let Some(v) = violation {
            return Err(Some(v));
        }
    }
    Ok(())
}

pub fn is_matroid(c: &SimplicialComplex) -> bool {
    exchange_check(c).is_ok()
}

/// Uniform matroid: every `r`-subset of `0..m` is a facet.
pub fn uniform(m: usize, r: usize) -> Result<SimplicialComplex> {
    if r > m {
        return Err(Error::Precondition(format!("rank {r} exceeds order {m}")));
    }
    SimplicialComplex::from_facets(m, Face::full(m).subsets_of_size(r))
}

/// Lines of the Fano plane, 1-based.
pub const FANO_LINES: [[usize; 3]; 7] = [
    [1, 2, 4],
    [1, 3, 6],
    [1, 5, 7],
    [2, 3, 5],
    [2, 6, 7],
    [3, 4, 7],
    [4, 5, 6],
];

/// The Fano matroid: all triples of `0..7` except the seven lines.
pub fn fano() -> SimplicialComplex {
    let lines: Vec<Face> = FANO_LINES
        .iter()
        .map(|l| Face::from_elements(l.iter().map(|x| x - 1)).expect("small"))
        .collect();
    let facets = Face::full(7)
        .subsets_of_size(3)
        .into_iter()
        .filter(|t| !lines.contains(t));
    SimplicialComplex::from_facets(7, facets).expect("valid")
}

fn binom(n: usize, k: usize) -> BigInt {
    if k > n {
        BigInt::from(0)
    } else {
        binomial(BigInt::from(n), BigInt::from(k))
    }
}

/// H-vector of a paving matroid of rank `r` on `m` elements with `f_r` bases.
pub fn paving_h_vector(m: usize, r: usize, f_r: &BigInt) -> Result<HVector> {
    if r > m {
        return Err(Error::Precondition(format!("rank {r} exceeds order {m}")));
    }
    if r == 0 {
        return Ok(HVector(vec![f_r.clone()]));
    }
    let mut h: Vec<BigInt> = (0..r).map(|i| binom(m - r + i - 1, i)).collect();
    if m == r {
        // the complete (r-1)-skeleton of a simplex
        h = (0..r)
            .map(|i| {
                if i == 0 {
                    BigInt::from(1)
                } else {
                    BigInt::from(0)
                }
            })
            .collect();
    }
    h.push(f_r - binom(m - 1, r - 1));
    Ok(HVector(h))
}

/// Complete `(r-1)`-skeleton, where `r` is the dimension.
pub fn is_paving(c: &SimplicialComplex) -> bool {
    let Some(r) = c.dimension() else {
        return false;
    };
    if r == 0 {
        return true;
    }
    let f = c.f_vector();
    f.0[r - 1] == binom(c.ground_size(), r - 1)
}

pub const DEFAULT_SHELLING_FACET_CAP: usize = 20;

/// Searches for a shelling order of a pure complex.
///
/// Returns the facet indices (into [`SimplicialComplex::facets`]) of a
/// shelling, or `None` if none exists. Complexes with more than `cap` facets
/// are refused.
pub fn shelling_order(c: &SimplicialComplex, cap: usize) -> Result<Option<Vec<usize>>> {
    let facets = c.facets();
    if facets.is_empty() {
        return Err(Error::Precondition("the void complex has no facets".into()));
    }
    if !c.is_pure() {
        return Err(Error::Precondition(
            "shellability needs a pure complex".into(),
        ));
    }
    let t = facets.len();
    if t > cap || t > 63 {
        return Err(Error::Resource(format!(
            "{t} facets exceeds the shelling search cap of {cap}"
        )));
    }
    let d = facets[0].len();
    if d == 0 || t == 1 {
        return Ok(Some((0..t).collect()));
    }

    // Adding facet j after the prefix `used` is valid when every intersection
    // with an earlier facet sits inside an intersection of size d-1.
    let fits = |used: u64, j: usize| -> bool {
        let mut caps: Vec<Face> = Vec::new();
        let mut all: Vec<Face> = Vec::new();
        for i in Face::from_bits(used).iter() {
            let meet = facets[j].intersection(facets[i]);
            if meet.len() == d - 1 {
                caps.push(meet);
            }
            all.push(meet);
        }
        all.iter().all(|m| caps.iter().any(|c| m.is_subset_of(*c)))
    };

    let mut dead: HashSet<u64> = HashSet::new();
    let mut order = Vec::with_capacity(t);
    fn search(
        used: u64,
        t: usize,
        order: &mut Vec<usize>,
        dead: &mut HashSet<u64>,
        fits: &dyn Fn(u64, usize) -> bool,
    ) -> bool {
        if order.len() == t {
            return true;
        }
        if dead.contains(&used) {
            return false;
        }
        for j in 0..t {
            if used >> j & 1 == 1 {
                continue;
            }
            if used == 0 || fits(used, j) {
                order.push(j);
                if search(used | 1 << j, t, order, dead, fits) {
                    return true;
                }
                order.pop();
            }
        }
        dead.insert(used);
        false
    }
    if search(0, t, &mut order, &mut dead, &fits) {
        Ok(Some(order))
    } else {
        Ok(None)
    }
}

pub fn is_shellable(c: &SimplicialComplex) -> Result<bool> {
    Ok(shelling_order(c, DEFAULT_SHELLING_FACET_CAP)?.is_some())
}

/// Is the graph on `0..n` with the given edge set complete multipartite?
/// Returns the parts (classes of the non-adjacency relation) when it is.
pub fn multipartite_cells(n: usize, edges: &HashSet<(usize, usize)>) -> Option<Vec<Vec<usize>>> {
    let adjacent = |a: usize, b: usize| edges.contains(&(a.min(b), a.max(b)));
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        match cells.iter_mut().find(|cell| !adjacent(cell[0], x)) {
            Some(cell) => cell.push(x),
            None => cells.push(vec![x]),
        }
    }
    // non-adjacency must be an equivalence relation: inside a cell nothing is
    // adjacent, across cells everything is
    for (i, a) in cells.iter().enumerate() {
        for (j, b) in cells.iter().enumerate() {
            for &x in a {
                for &y in b {
                    if x != y && adjacent(x, y) != (i != j) {
                        return None;
                    }
                }
            }
        }
    }
    Some(cells)
}

fn skeleton_edges(c: &SimplicialComplex) -> HashSet<(usize, usize)> {
    let levels = c.faces_by_size();
    levels
        .get(2)
        .map(|pairs| {
            pairs
                .iter()
                .map(|f| {
                    let e = f.elements();
                    (e[0], e[1])
                })
                .collect()
        })
        .unwrap_or_default()
}

#[derive(Clone, Debug, PartialEq)]
pub struct Rank2Report {
    pub m: usize,
    pub f2: BigInt,
    /// Parts of the 2-skeleton when it is complete multipartite.
    pub cells: Option<Vec<Vec<usize>>>,
    pub f2_lower_bound: i64,
    pub f2_bound_holds: bool,
}

impl Rank2Report {
    pub fn all_hold(&self) -> bool {
        self.cells.is_some() && self.f2_bound_holds
    }
}

/// The 2-skeleton of a rank-2 matroid is complete multipartite with at least `2m - 4` edges.
pub fn rank2_structure_check(c: &SimplicialComplex) -> Result<Rank2Report> {
    if c.dimension() != Some(2) {
        return Err(Error::Precondition(format!(
            "expected rank 2, found {:?}",
            c.dimension()
        )));
    }
    let m = c.ground_size();
    let edges = skeleton_edges(c);
    let f2 = BigInt::from(edges.len());
    let bound = 2 * m as i64 - 4;
    Ok(Rank2Report {
        m,
        cells: multipartite_cells(m, &edges),
        f2_bound_holds: f2 >= BigInt::from(bound),
        f2,
        f2_lower_bound: bound,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct Rank3Report {
    pub m: usize,
    pub f2: BigInt,
    pub h: HVector,
    /// Parts of the 2-skeleton when it is complete multipartite.
    pub skeleton_cells: Option<Vec<Vec<usize>>>,
    pub h1_equals_m_minus_3: bool,
    /// `H_2 = F_2 - 2 H_1 - 3 H_0`.
    pub h2_identity: bool,
    pub h2_at_least_2m_minus_9: bool,
    pub h3_at_least_m_minus_5: bool,
    pub f2_at_least_4m_minus_12: bool,
}

impl Rank3Report {
    pub fn all_hold(&self) -> bool {
        self.skeleton_cells.as_ref().is_some_and(|c| c.len() >= 3)
            && self.h1_equals_m_minus_3
            && self.h2_identity
            && self.h2_at_least_2m_minus_9
            && self.h3_at_least_m_minus_5
            && self.f2_at_least_4m_minus_12
    }
}

/// Structural inequalities for a connected, loopless, coloopless rank-3 matroid.
pub fn rank3_bounds_check(c: &SimplicialComplex) -> Result<Rank3Report> {
    if c.dimension() != Some(3) {
        return Err(Error::Precondition(format!(
            "expected rank 3, found {:?}",
            c.dimension()
        )));
    }
    let m = c.ground_size() as i64;
    let f = c.f_vector();
    let h = c.h_vector();
    let f2 = f.0[2].clone();
    let edges = skeleton_edges(c);
    let big = |v: i64| BigInt::from(v);
    Ok(Rank3Report {
        m: m as usize,
        skeleton_cells: multipartite_cells(m as usize, &edges),
        h1_equals_m_minus_3: h.0[1] == big(m - 3),
        h2_identity: h.0[2] == &f2 - big(2) * &h.0[1] - big(3) * &h.0[0],
        h2_at_least_2m_minus_9: h.0[2] >= big(2 * m - 9),
        h3_at_least_m_minus_5: h.0[3] >= big(m - 5),
        f2_at_least_4m_minus_12: f2 >= big(4 * m - 12),
        f2,
        h,
    })
}

/// A complex with a single component.
pub fn is_connected(c: &SimplicialComplex) -> bool {
    c.components().len() == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complex(m: usize, sets: &[&[usize]]) -> SimplicialComplex {
        let sets: Vec<Vec<usize>> = sets.iter().map(|s| s.to_vec()).collect();
        SimplicialComplex::from_sets(m, &sets).unwrap()
    }

    #[test]
    fn uniform_is_matroid() {
        assert!(is_matroid(&uniform(4, 2).unwrap()));
        assert_eq!(
            uniform(3, 1).unwrap().facet_lists(),
            vec![vec![0], vec![1], vec![2]]
        );
        assert_eq!(uniform(5, 5).unwrap(), SimplicialComplex::simplex(5));
        assert!(uniform(2, 3).is_err());
    }

    #[test]
    fn p5_violates_exchange() {
        let err = exchange_check(&SimplicialComplex::matched_path(5))
            .unwrap_err()
            .unwrap();
        assert_eq!(err.sigma.elements(), vec![2]);
        assert_eq!(err.alpha.elements(), vec![0, 1]);
        assert!(matches!(
            exchange_check(&SimplicialComplex::empty(2)),
            Err(None)
        ));
    }

    #[test]
    fn fano_shape() {
        let f = fano();
        assert_eq!(f.facets().len(), 28);
        assert!(f.contains_face(Face::from_elements([4, 5, 6]).unwrap()));
        assert!(!f.contains_face(Face::from_elements([0, 1, 3]).unwrap()));
        assert!(is_matroid(&f));
        assert!(is_paving(&f));
    }

    #[test]
    fn paving_h_vectors() {
        let h = paving_h_vector(6, 4, &BigInt::from(15)).unwrap();
        assert_eq!(&h.0[..4], &[1, 2, 3, 4].map(BigInt::from));
        let h = paving_h_vector(5, 4, &BigInt::from(5)).unwrap();
        assert_eq!(h.0, [1, 1, 1, 1, 1].map(BigInt::from));
        // agrees with the transform on uniform matroids
        for (m, r) in [(6, 4), (7, 3), (5, 2)] {
            let u = uniform(m, r).unwrap();
            assert!(is_paving(&u));
            assert_eq!(
                paving_h_vector(m, r, &u.f_vector().0[r]).unwrap(),
                u.h_vector()
            );
        }
    }

    #[test]
    fn two_dimensional_shellability_is_graph_connectivity() {
        let path = complex(4, &[&[0, 1], &[1, 2], &[2, 3]]);
        assert!(is_shellable(&path).unwrap());
        let split = complex(4, &[&[0, 1], &[2, 3]]);
        assert!(!is_shellable(&split).unwrap());
        assert!(is_shellable(&SimplicialComplex::simplex(5)).unwrap());
    }

    #[test]
    fn shelling_order_is_valid() {
        // boundary of a tetrahedron
        let c = uniform(4, 3).unwrap();
        let order = shelling_order(&c, 20).unwrap().unwrap();
        assert_eq!(order.len(), 4);
        // two triangles meeting in a vertex are not shellable
        let bowtie = complex(5, &[&[0, 1, 2], &[2, 3, 4]]);
        assert_eq!(shelling_order(&bowtie, 20).unwrap(), None);
    }

    #[test]
    fn shelling_refuses_large_and_impure() {
        assert!(matches!(is_shellable(&fano()), Err(Error::Resource(_))));
        let mixed = complex(3, &[&[0, 1], &[2]]);
        assert!(matches!(is_shellable(&mixed), Err(Error::Precondition(_))));
    }

    #[test]
    fn rank2_checks() {
        let r = rank2_structure_check(&uniform(4, 2).unwrap()).unwrap();
        assert_eq!(r.cells.as_ref().unwrap().len(), 4);
        assert_eq!(r.f2, BigInt::from(6));
        assert!(r.all_hold());

        for m in 4..9 {
            let facets: Vec<Vec<usize>> = (0..2)
                .flat_map(|a| (2..m).map(move |b| vec![a, b]))
                .collect();
            let k2 = SimplicialComplex::from_sets(m, &facets).unwrap();
            assert!(is_matroid(&k2));
            let r = rank2_structure_check(&k2).unwrap();
            assert_eq!(r.f2, BigInt::from(2 * m - 4));
            assert!(r.all_hold());
        }
        assert!(rank2_structure_check(&fano()).is_err());
    }

    #[test]
    fn multipartite_detection() {
        let path: HashSet<(usize, usize)> = [(0, 1), (1, 2)].into_iter().collect();
        assert_eq!(
            multipartite_cells(3, &path),
            Some(vec![vec![0, 2], vec![1]])
        );
        // complement of P3 (an edge plus an isolated vertex) is not multipartite
        let co_p3: HashSet<(usize, usize)> = [(0, 1)].into_iter().collect();
        assert_eq!(multipartite_cells(3, &co_p3), None);
    }

    #[test]
    fn rank3_checks_on_fano() {
        let r = rank3_bounds_check(&fano()).unwrap();
        assert!(r.all_hold(), "{r:?}");
        assert!(rank3_bounds_check(&uniform(4, 2).unwrap()).is_err());
    }

    #[test]
    fn skeleton_of_matroid_is_matroid() {
        let f = fano();
        for k in 0..=3 {
            assert!(is_matroid(&f.k_skeleton(k).unwrap()));
        }
        let sk = f.k_skeleton(2).unwrap();
        assert_eq!(sk.f_vector().0[2], BigInt::from(21));
    }
}
