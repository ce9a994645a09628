//! Simplicial complexes stored by their facets.
//!
//! A complex on the ground set `0..m` is kept as the antichain of its maximal
//! faces. The full face set is the downward closure of the facets and is only
//! materialized by [`SimplicialComplex::enumerate_faces`] and the helpers that
//! need every face. Faces are 64-bit sets, so `m` is capped at
//! [`MAX_GROUND_SET`].

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::union_find::DisjointSets;

pub const MAX_GROUND_SET: usize = 64;

/// A subset of the ground set `0..64`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub const fn from_bits(bits: u64) -> Self {
        Face(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(x: usize) -> Self {
        debug_assert!(x < MAX_GROUND_SET);
        Face(1 << x)
    }

    /// Full set `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_GROUND_SET);
        if n == 64 {
            Face(u64::MAX)
        } else {
            Face((1u64 << n) - 1)
        }
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Result<Self> {
        let mut bits = 0u64;
        for x in elements {
            if x >= MAX_GROUND_SET {
                return Err(Error::GroundSetTooLarge(x + 1));
            }
            bits |= 1 << x;
        }
        Ok(Face(bits))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, x: usize) -> bool {
        x < MAX_GROUND_SET && self.0 >> x & 1 == 1
    }

    pub fn with(self, x: usize) -> Self {
        Face(self.0 | 1 << x)
    }

    pub fn without(self, x: usize) -> Self {
        Face(self.0 & !(1 << x))
    }

    pub fn is_subset_of(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Face) -> Self {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Self {
        Face(self.0 & other.0)
    }

    pub fn difference(self, other: Face) -> Self {
        Face(self.0 & !other.0)
    }

    /// Largest member plus one, or zero for the empty face.
    pub fn span(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    /// Members in ascending order.
    pub fn iter(self) -> FaceIter {
        FaceIter(self.0)
    }

    pub fn elements(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Drops element `x` and shifts every larger member down by one.
    pub fn remove_index(self, x: usize) -> Self {
        let low = self.0 & ((1u64 << x) - 1);
        let high = if x >= 63 { 0 } else { (self.0 >> (x + 1)) << x };
        Face(low | high)
    }

    /// Relabels members through `map` (member `i` becomes `map[i]`).
    pub fn relabel(self, map: &[usize]) -> Self {
        Face(self.iter().fold(0, |acc, x| acc | 1 << map[x]))
    }

    pub fn shifted(self, offset: usize) -> Self {
        Face(self.0 << offset)
    }

    /// All subsets of this face, including the empty set and the face itself.
    pub fn subsets(self) -> impl Iterator<Item = Face> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let current = next?;
            next = if current == full {
                None
            } else {
                Some((current.wrapping_sub(full)) & full)
            };
            Some(Face(current))
        })
    }

    /// Subsets of exactly `k` members, in colexicographic order.
    pub fn subsets_of_size(self, k: usize) -> Vec<Face> {
        let members = self.elements();
        let mut out = Vec::new();
        if k > members.len() {
            return out;
        }
        let n = members.len();
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            out.push(Face(idx.iter().fold(0, |acc, &i| acc | 1 << members[i])));
            let mut i = k;
            while i > 0 && idx[i - 1] == n - k + i - 1 {
                i -= 1;
            }
            if i == 0 {
                return out;
            }
            idx[i - 1] += 1;
            for j in i..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }

    /// Lexicographic comparison of the sorted member lists.
    pub fn lex_cmp(self, other: Face) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct FaceIter(u64);

impl Iterator for FaceIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for FaceIter {}

/// Keeps the inclusion-maximal sets, dropping duplicates, sorted lexicographically.
pub(crate) fn maximal_sets(mut candidates: Vec<Face>) -> Vec<Face> {
    candidates.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(a.bits().cmp(&b.bits())));
    candidates.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(candidates.len());
    for c in candidates {
        if !kept.iter().any(|k| c.is_subset_of(*k)) {
            kept.push(c);
        }
    }
    kept.sort_unstable_by(|a, b| a.lex_cmp(*b));
    kept
}

/// A simplicial complex on the ground set `0..m`, stored by its facets.
///
/// Carries the original label of every ground element so that reindexing
/// operations (deletion, link, loop stripping) can still report in terms of
/// the input labels.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    m: usize,
    facets: Vec<Face>,
    labels: Vec<usize>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    /// Builds the complex generated by `candidates`, keeping only maximal sets.
    pub fn from_facets<I: IntoIterator<Item = Face>>(m: usize, candidates: I) -> Result<Self> {
        if m > MAX_GROUND_SET {
            return Err(Error::GroundSetTooLarge(m));
        }
        let candidates: Vec<Face> = candidates.into_iter().collect();
        if let Some(bad) = candidates.iter().find(|f| f.span() > m) {
            return Err(Error::Malformed(format!(
                "facet {bad:?} has an element outside the ground set 0..{m}"
            )));
        }
        Ok(Self {
            m,
            facets: maximal_sets(candidates),
            labels: (0..m).collect(),
        })
    }

    pub fn from_sets(m: usize, sets: &[Vec<usize>]) -> Result<Self> {
        if m > MAX_GROUND_SET {
            return Err(Error::GroundSetTooLarge(m));
        }
        let mut faces = Vec::with_capacity(sets.len());
        for s in sets {
            if let Some(&x) = s.iter().find(|&&x| x >= m) {
                return Err(Error::Malformed(format!(
                    "element {x} outside the ground set 0..{m}"
                )));
            }
            faces.push(Face::from_elements(s.iter().copied())?);
        }
        Self::from_facets(m, faces)
    }

    /// The complex with no faces at all (reliability identically zero).
    pub fn empty(m: usize) -> Self {
        Self {
            m,
            facets: Vec::new(),
            labels: (0..m).collect(),
        }
    }

    /// The full power set of `0..n`.
    pub fn simplex(n: usize) -> Self {
        Self::from_facets(n, [Face::full(n)]).expect("simplex within the ground-set cap")
    }

    /// Facets `{0,1}` plus the path `{2,3},{3,4},…,{m-2,m-1}`.
    ///
    /// For `m = 3` the path degenerates to the isolated vertex `{2}`.
    pub fn matched_path(m: usize) -> Self {
        assert!(m >= 2, "needs at least two elements");
        let mut facets = vec![Face::from_bits(0b11)];
        if m == 3 {
            facets.push(Face::singleton(2));
        }
        for i in 2..m.saturating_sub(1) {
            facets.push(Face::singleton(i).with(i + 1));
        }
        Self::from_facets(m, facets).expect("valid")
    }

    pub fn ground_size(&self) -> usize {
        self.m
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<usize>) -> Result<Self> {
        if labels.len() != self.m {
            return Err(Error::Malformed(format!(
                "{} labels for a ground set of size {}",
                labels.len(),
                self.m
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    /// `true` when the complex has no faces (not even the empty face).
    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn contains_face(&self, face: Face) -> bool {
        self.facets.iter().any(|f| face.is_subset_of(*f))
    }

    /// Size of the largest facet; `None` encodes dimension minus infinity.
    pub fn dimension(&self) -> Option<usize> {
        self.facets.iter().map(|f| f.len()).max()
    }

    pub fn is_pure(&self) -> bool {
        match self.facets.first() {
            None => true,
            Some(first) => self.facets.iter().all(|f| f.len() == first.len()),
        }
    }

    /// Faces grouped by cardinality: entry `i` lists the faces of size `i`.
    pub fn faces_by_size(&self) -> Vec<Vec<Face>> {
        let Some(d) = self.dimension() else {
            return Vec::new();
        };
        let mut levels: Vec<Vec<Face>> = vec![Vec::new(); d + 1];
        for f in &self.facets {
            levels[f.len()].push(*f);
        }
        for size in (1..=d).rev() {
            let mut level = std::mem::take(&mut levels[size]);
            level.sort_unstable_by_key(|f| f.bits());
            level.dedup();
            let mut shadow = Vec::with_capacity(level.len() * size);
            for f in &level {
                for x in f.iter() {
                    shadow.push(f.without(x));
                }
            }
            levels[size - 1].extend(shadow);
            levels[size] = level;
        }
        levels[0].clear();
        levels[0].push(Face::EMPTY);
        for level in &mut levels {
            level.sort_unstable_by(|a, b| a.lex_cmp(*b));
        }
        levels
    }

    /// Every face exactly once, ordered by cardinality then lexicographically.
    pub fn enumerate_faces(&self) -> Vec<Face> {
        self.faces_by_size().into_iter().flatten().collect()
    }

    pub fn face_count(&self) -> usize {
        self.faces_by_size().iter().map(Vec::len).sum()
    }

    fn check_element(&self, x: usize) -> Result<()> {
        if x >= self.m {
            return Err(Error::Precondition(format!(
                "element {x} outside the ground set 0..{}",
                self.m
            )));
        }
        Ok(())
    }

    fn without_label(&self, x: usize) -> Vec<usize> {
        let mut labels = self.labels.clone();
        labels.remove(x);
        labels
    }

    /// Faces avoiding `x`, on the ground set with `x` removed.
    pub fn deletion(&self, x: usize) -> Result<Self> {
        self.check_element(x)?;
        let facets = self
            .facets
            .iter()
            .map(|f| f.without(x).remove_index(x))
            .collect();
        Ok(Self {
            m: self.m - 1,
            facets: maximal_sets(facets),
            labels: self.without_label(x),
        })
    }

    /// Faces containing `x` with `x` removed, on the ground set with `x` removed.
    pub fn link(&self, x: usize) -> Result<Self> {
        self.check_element(x)?;
        let facets = self
            .facets
            .iter()
            .filter(|f| f.contains(x))
            .map(|f| f.without(x).remove_index(x))
            .collect();
        Ok(Self {
            m: self.m - 1,
            facets: maximal_sets(facets),
            labels: self.without_label(x),
        })
    }

    /// Direct sum on the disjoint union of the ground sets; `other` is shifted up by `self.m`.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        let m = self.m + other.m;
        if m > MAX_GROUND_SET {
            return Err(Error::GroundSetTooLarge(m));
        }
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for a in &self.facets {
            for b in &other.facets {
                facets.push(a.union(b.shifted(self.m)));
            }
        }
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().map(|l| l + self.m));
        Ok(Self {
            m,
            facets: maximal_sets(facets),
            labels,
        })
    }

    /// Restriction to the ground elements in `keep`, reindexed in ascending order.
    pub fn restrict(&self, keep: Face) -> Self {
        let members = keep.elements();
        let mut map = vec![usize::MAX; self.m];
        for (new, &old) in members.iter().enumerate() {
            map[old] = new;
        }
        let facets = if self.facets.is_empty() {
            Vec::new()
        } else {
            maximal_sets(
                self.facets
                    .iter()
                    .map(|f| f.intersection(keep).relabel(&map))
                    .collect(),
            )
        };
        Self {
            m: members.len(),
            facets,
            labels: members.iter().map(|&i| self.labels[i]).collect(),
        }
    }

    /// Inclusion-minimal subsets of the ground set that are not faces.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        if self.facets.is_empty() {
            return vec![Face::EMPTY];
        }
        let faces: std::collections::HashSet<u64> =
            self.enumerate_faces().into_iter().map(Face::bits).collect();
        let mut out = Vec::new();
        for &sigma in &faces {
            let sigma = Face::from_bits(sigma);
            for x in 0..self.m {
                // each minimal non-face is produced once, from its largest member
                if sigma.contains(x) || sigma.span() > x {
                    continue;
                }
                let candidate = sigma.with(x);
                if faces.contains(&candidate.bits()) {
                    continue;
                }
                if sigma
                    .iter()
                    .all(|y| faces.contains(&candidate.without(y).bits()))
                {
                    out.push(candidate);
                }
            }
        }
        out.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then(a.lex_cmp(*b)));
        out
    }

    /// Finest decomposition into a direct sum (join on disjoint ground sets).
    ///
    /// A complex splits over a partition exactly when every minimal non-face
    /// lies inside one block, so the components are the connected pieces of
    /// the minimal non-face hypergraph. Loops and coloops come out as
    /// singleton components. A complex without faces is returned whole.
    pub fn components(&self) -> Vec<Self> {
        if self.facets.is_empty() || self.m == 0 {
            return vec![self.clone()];
        }
        let mut ds = DisjointSets::new(self.m);
        for n in self.minimal_nonfaces() {
            let mut members = n.iter();
            if let Some(first) = members.next() {
                for x in members {
                    ds.union(first, x);
                }
            }
        }
        ds.groups()
            .into_iter()
            .map(|g| self.restrict(Face::from_elements(g).expect("in range")))
            .collect()
    }

    /// Elements contained in no face.
    pub fn loops(&self) -> Vec<usize> {
        let covered = self.facets.iter().fold(Face::EMPTY, |acc, f| acc.union(*f));
        (0..self.m).filter(|&x| !covered.contains(x)).collect()
    }

    /// Elements contained in every facet.
    pub fn coloops(&self) -> Vec<usize> {
        if self.facets.is_empty() {
            return Vec::new();
        }
        let common = self
            .facets
            .iter()
            .fold(Face::full(self.m), |acc, f| acc.intersection(*f));
        common.elements()
    }

    pub fn has_loops(&self) -> bool {
        !self.loops().is_empty()
    }

    pub fn has_coloops(&self) -> bool {
        !self.coloops().is_empty()
    }

    /// Removes every loop from the ground set.
    pub fn strip_loops(&self) -> Self {
        let covered = self.facets.iter().fold(Face::EMPTY, |acc, f| acc.union(*f));
        self.restrict(covered)
    }

    /// The complex of all faces of cardinality at most `k`.
    pub fn k_skeleton(&self, k: usize) -> Result<Self> {
        let d = self
            .dimension()
            .ok_or_else(|| Error::Precondition("the void complex has no skeleta".into()))?;
        if k > d {
            return Err(Error::Precondition(format!(
                "skeleton order {k} exceeds the dimension {d}"
            )));
        }
        let mut facets = Vec::new();
        for f in &self.facets {
            if f.len() <= k {
                facets.push(*f);
            } else {
                facets.extend(f.subsets_of_size(k));
            }
        }
        Ok(Self {
            m: self.m,
            facets: maximal_sets(facets),
            labels: self.labels.clone(),
        })
    }

    /// Facets as sorted element lists, in lexicographic order.
    pub fn facet_lists(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|f| f.elements()).collect()
    }
}

/// On-disk form of a complex: `{ "m": int, "facets": [[int, ...], ...] }`, 0-based.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ComplexFile {
    pub m: usize,
    pub facets: Vec<Vec<usize>>,
}

impl From<&SimplicialComplex> for ComplexFile {
    fn from(c: &SimplicialComplex) -> Self {
        ComplexFile {
            m: c.ground_size(),
            facets: c.facet_lists(),
        }
    }
}

impl TryFrom<ComplexFile> for SimplicialComplex {
    type Error = Error;

    fn try_from(file: ComplexFile) -> Result<Self> {
        SimplicialComplex::from_sets(file.m, &file.facets)
    }
}

impl SimplicialComplex {
    pub fn from_json(text: &str) -> Result<Self> {
        let file: ComplexFile = serde_json::from_str(text)?;
        file.try_into()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&ComplexFile::from(self)).expect("plain data serializes")
    }
}
