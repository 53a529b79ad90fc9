//! The acting monoid Z_+^k: lattice elements, regular systems, Folner diagnostics.
//!
//! A *regular system* in Z_+^k is a sequence Gamma = (N_0, N_1, ...) of finite
//! sets with e in N_0 and N_i + N_j contained in N_{i+j}. It plays the role of
//! the orbit segment [0, n] of a single map. The *standard* system is
//! N_n = [0, n]^k; the *even* system N_n = {0, 2, ..., 2n} in Z_+ is regular
//! but not a Folner sequence, which is what makes the receptive normalization
//! 1/n differ from the classical 1/|N_n|.
//!
//! Systems are stored extensionally up to `n_max`; every limit downstream
//! becomes a finite sequence plus diagnostics. Sets are kept sorted
//! lexicographically so all iteration orders are deterministic.

use crate::error::{Error, Result};
use num::rational::Ratio;
use serde::{Deserialize, Serialize};
use std::fmt;

/// One coordinate of a lattice point. u32 is ample: windows and indices in
/// this artifact stay in the hundreds.
pub type Coord = u32;

/// An element of Z_+^k (or of the coordinate lattice Z_+^d), written additively.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LatticeElement(pub Vec<Coord>);

impl LatticeElement {
    pub fn zero(k: usize) -> Self {
        LatticeElement(vec![0; k])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn coords(&self) -> &[Coord] {
        &self.0
    }
}

impl fmt::Debug for LatticeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for LatticeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A finite set of lattice points of a fixed dimension, stored sorted
/// (lexicographically) in a flat buffer of `dim`-sized chunks.
///
/// This is the workhorse container for N_n sets, coordinate sets of cylinder
/// partitions, and ball windows. Flat storage keeps multi-million element
/// standard systems cheap.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PointSet {
    dim: usize,
    flat: Vec<Coord>,
}

impl PointSet {
    pub fn empty(dim: usize) -> Self {
        assert!(dim >= 1, "PointSet dimension must be >= 1");
        PointSet { dim, flat: Vec::new() }
    }

    pub fn singleton(point: &[Coord]) -> Self {
        PointSet {
            dim: point.len(),
            flat: point.to_vec(),
        }
    }

    /// Builds from arbitrary rows, sorting and deduplicating.
    pub fn from_rows<I, R>(dim: usize, rows: I) -> Self
    where
        I: IntoIterator<Item = R>,
        R: AsRef<[Coord]>,
    {
        let mut owned: Vec<Vec<Coord>> = rows
            .into_iter()
            .map(|r| {
                let r = r.as_ref();
                assert_eq!(r.len(), dim, "row dimension mismatch");
                r.to_vec()
            })
            .collect();
        owned.sort_unstable();
        owned.dedup();
        let mut flat = Vec::with_capacity(owned.len() * dim);
        for row in owned {
            flat.extend_from_slice(&row);
        }
        PointSet { dim, flat }
    }

    /// The box [lo_1, hi_1] x ... x [lo_d, hi_d], enumerated lexicographically.
    pub fn box_set(lo: &[Coord], hi: &[Coord]) -> Self {
        assert_eq!(lo.len(), hi.len());
        let dim = lo.len();
        let mut flat = Vec::new();
        let mut cur: Vec<Coord> = lo.to_vec();
        'outer: loop {
            flat.extend_from_slice(&cur);
            // odometer increment, last axis fastest
            for axis in (0..dim).rev() {
                if cur[axis] < hi[axis] {
                    cur[axis] += 1;
                    for a in axis + 1..dim {
                        cur[a] = lo[a];
                    }
                    continue 'outer;
                }
            }
            break;
        }
        PointSet { dim, flat }
    }

    /// The cube [0, end]^dim.
    pub fn cube(dim: usize, end: Coord) -> Self {
        Self::box_set(&vec![0; dim], &vec![end; dim])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.flat.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.flat.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[Coord]> + '_ {
        self.flat.chunks_exact(self.dim)
    }

    pub fn row(&self, i: usize) -> &[Coord] {
        &self.flat[i * self.dim..(i + 1) * self.dim]
    }

    pub fn contains(&self, point: &[Coord]) -> bool {
        self.index_of(point).is_some()
    }

    /// Binary search by lexicographic order.
    pub fn index_of(&self, point: &[Coord]) -> Option<usize> {
        debug_assert_eq!(point.len(), self.dim);
        let n = self.len();
        let mut lo = 0usize;
        let mut hi = n;
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.row(mid).cmp(point) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    pub fn is_subset_of(&self, other: &PointSet) -> bool {
        self.iter().all(|p| other.contains(p))
    }

    /// Merge of two sorted sets.
    pub fn union(&self, other: &PointSet) -> PointSet {
        assert_eq!(self.dim, other.dim);
        let mut flat = Vec::with_capacity(self.flat.len() + other.flat.len());
        let (mut i, mut j) = (0usize, 0usize);
        while i < self.len() && j < other.len() {
            match self.row(i).cmp(other.row(j)) {
                std::cmp::Ordering::Less => {
                    flat.extend_from_slice(self.row(i));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    flat.extend_from_slice(other.row(j));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    flat.extend_from_slice(self.row(i));
                    i += 1;
                    j += 1;
                }
            }
        }
        while i < self.len() {
            flat.extend_from_slice(self.row(i));
            i += 1;
        }
        while j < other.len() {
            flat.extend_from_slice(other.row(j));
            j += 1;
        }
        PointSet { dim: self.dim, flat }
    }

    /// Translate every point by `shift`.
    pub fn translate(&self, shift: &[Coord]) -> Result<PointSet> {
        assert_eq!(shift.len(), self.dim);
        let mut flat = Vec::with_capacity(self.flat.len());
        for p in self.iter() {
            for (a, &c) in p.iter().enumerate() {
                let s = c as u64 + shift[a] as u64;
                if s > Coord::MAX as u64 {
                    return Err(Error::CoordOverflow(format!(
                        "translate {c} + {} on axis {a}",
                        shift[a]
                    )));
                }
                flat.push(s as Coord);
            }
        }
        // translation preserves lexicographic order
        Ok(PointSet { dim: self.dim, flat })
    }

    /// All pairwise sums, deduplicated.
    pub fn sumset(&self, other: &PointSet) -> Result<PointSet> {
        assert_eq!(self.dim, other.dim);
        let mut rows: Vec<Vec<Coord>> = Vec::with_capacity(self.len() * other.len());
        for p in self.iter() {
            for q in other.iter() {
                let mut s = Vec::with_capacity(self.dim);
                for a in 0..self.dim {
                    let v = p[a] as u64 + q[a] as u64;
                    if v > Coord::MAX as u64 {
                        return Err(Error::CoordOverflow("sumset".into()));
                    }
                    s.push(v as Coord);
                }
                rows.push(s);
            }
        }
        Ok(PointSet::from_rows(self.dim, rows))
    }

    /// Multiply every coordinate by `p` (the dilation g -> p*g).
    pub fn dilate(&self, p: Coord) -> Result<PointSet> {
        let mut flat = Vec::with_capacity(self.flat.len());
        for &c in &self.flat {
            let v = c as u64 * p as u64;
            if v > Coord::MAX as u64 {
                return Err(Error::CoordOverflow("dilate".into()));
            }
            flat.push(v as Coord);
        }
        Ok(PointSet { dim: self.dim, flat })
    }

    /// Keep the points whose coordinates are componentwise multiples of `moduli`.
    pub fn intersect_multiples(&self, moduli: &[Coord]) -> PointSet {
        assert_eq!(moduli.len(), self.dim);
        let mut flat = Vec::new();
        for p in self.iter() {
            if p.iter().zip(moduli).all(|(&c, &m)| c % m == 0) {
                flat.extend_from_slice(p);
            }
        }
        PointSet { dim: self.dim, flat }
    }

    /// Projection onto a contiguous axis range, deduplicated.
    pub fn project(&self, axes: std::ops::Range<usize>) -> PointSet {
        let sub = axes.len();
        assert!(sub >= 1 && axes.end <= self.dim);
        let rows: Vec<Vec<Coord>> = self.iter().map(|p| p[axes.clone()].to_vec()).collect();
        PointSet::from_rows(sub, rows)
    }

    pub fn symmetric_difference_count(&self, other: &PointSet) -> u64 {
        assert_eq!(self.dim, other.dim);
        let mut count = 0u64;
        let (mut i, mut j) = (0usize, 0usize);
        while i < self.len() && j < other.len() {
            match self.row(i).cmp(other.row(j)) {
                std::cmp::Ordering::Less => {
                    count += 1;
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    count += 1;
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        count + (self.len() - i) as u64 + (other.len() - j) as u64
    }

    pub fn max_along_axis(&self, axis: usize) -> Option<Coord> {
        self.iter().map(|p| p[axis]).max()
    }

    pub fn min_along_axis(&self, axis: usize) -> Option<Coord> {
        self.iter().map(|p| p[axis]).min()
    }

    /// Max over points of the l-infinity norm.
    pub fn max_linf_norm(&self) -> Option<Coord> {
        self.iter().map(|p| p.iter().copied().max().unwrap_or(0)).max()
    }

    pub fn rows(&self) -> Vec<Vec<Coord>> {
        self.iter().map(|p| p.to_vec()).collect()
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}", LatticeElement(p.to_vec()))?;
        }
        write!(f, "}}")
    }
}

/// How a regular system was constructed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SystemKind {
    Standard,
    Even,
    Scaled(Coord),
    Restricted(Vec<Coord>),
    Custom,
}

/// A regular system Gamma = (N_n)_{n <= n_max} in Z_+^k, stored extensionally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularSystem {
    k: usize,
    sets: Vec<PointSet>,
    kind: SystemKind,
    nested: bool,
}

/// Outcome of the regularity check; on failure the least witness under the
/// scan order (i >= 1 lexicographic with j from 0, the pair (0,0) last).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityReport {
    pub identity_ok: bool,
    pub witness: Option<(usize, usize, LatticeElement)>,
}

impl RegularityReport {
    pub fn is_valid(&self) -> bool {
        self.identity_ok && self.witness.is_none()
    }
}

/// Folner defect table for one group element.
#[derive(Clone, Debug)]
pub struct FolnerReport {
    pub element: LatticeElement,
    /// (n, |N_n symdiff (g + N_n)| / |N_n|) as exact rationals.
    pub defects: Vec<(usize, Ratio<u64>)>,
    /// Non-increasing over the computed range and strictly smaller at the end.
    pub folner_compatible: bool,
}

impl RegularSystem {
    /// The standard system N_n = [0, n]^k.
    pub fn standard(k: usize, n_max: usize) -> Self {
        assert!(k >= 1 && n_max >= 1);
        let sets = (0..=n_max)
            .map(|n| PointSet::cube(k, n as Coord))
            .collect();
        RegularSystem {
            k,
            sets,
            kind: SystemKind::Standard,
            nested: true,
        }
    }

    /// N_n = {0, 2, 4, ..., 2n} in Z_+: regular but not Folner.
    pub fn even(n_max: usize) -> Self {
        assert!(n_max >= 1);
        let sets = (0..=n_max)
            .map(|n| {
                PointSet::from_rows(1, (0..=n).map(|m| vec![2 * m as Coord]))
            })
            .collect();
        RegularSystem {
            k: 1,
            sets,
            kind: SystemKind::Even,
            nested: true,
        }
    }

    /// From explicit element lists. Validates shape, not regularity; run
    /// [`RegularSystem::verify_regular`] for the latter.
    pub fn custom(k: usize, sets: Vec<PointSet>) -> Result<Self> {
        if sets.is_empty() {
            return Err(Error::InvalidSystem("no sets provided".into()));
        }
        for (n, s) in sets.iter().enumerate() {
            if s.dim() != k {
                return Err(Error::InvalidSystem(format!(
                    "N_{n} has dimension {} != k = {k}",
                    s.dim()
                )));
            }
            if s.is_empty() {
                return Err(Error::InvalidSystem(format!("N_{n} is empty")));
            }
        }
        let nested = sets.windows(2).all(|w| w[0].is_subset_of(&w[1]));
        Ok(RegularSystem {
            k,
            sets,
            kind: SystemKind::Custom,
            nested,
        })
    }

    /// Gamma' = (N_{pn}): regularity is inherited since N_{pi} + N_{pj} is
    /// contained in N_{p(i+j)}.
    pub fn scaled(&self, p: usize) -> Result<Self> {
        if p == 0 {
            return Err(Error::InvalidConfig {
                field: "p".into(),
                message: "scaling factor must be >= 1".into(),
            });
        }
        let n_max = self.n_max() / p;
        if n_max < 1 {
            return Err(Error::IndexOverflow {
                requested: p,
                n_max: self.n_max(),
            });
        }
        let sets = (0..=n_max).map(|n| self.sets[p * n].clone()).collect();
        Ok(RegularSystem {
            k: self.k,
            sets,
            kind: SystemKind::Scaled(p as Coord),
            nested: self.nested,
        })
    }

    /// M_n = N_n intersect (p_1 Z_+ x ... x p_k Z_+), in ambient coordinates.
    pub fn restricted(&self, moduli: &[Coord]) -> Result<Self> {
        if moduli.len() != self.k {
            return Err(Error::InvalidConfig {
                field: "moduli".into(),
                message: format!("expected {} entries, got {}", self.k, moduli.len()),
            });
        }
        if moduli.iter().any(|&m| m == 0) {
            return Err(Error::InvalidConfig {
                field: "moduli".into(),
                message: "entries must be >= 1".into(),
            });
        }
        let sets: Vec<PointSet> = self
            .sets
            .iter()
            .map(|s| s.intersect_multiples(moduli))
            .collect();
        for (n, s) in sets.iter().enumerate() {
            if s.is_empty() {
                return Err(Error::InvalidSystem(format!(
                    "restriction empties N_{n}"
                )));
            }
        }
        let nested = self.nested;
        Ok(RegularSystem {
            k: self.k,
            sets,
            kind: SystemKind::Restricted(moduli.to_vec()),
            nested,
        })
    }

    /// pGamma = (p * N_n), every element dilated. This realizes the regular
    /// system written pGamma in subaction arguments; note it differs from
    /// [`RegularSystem::scaled`], which re-indexes to (N_{pn}).
    pub fn dilated(&self, p: Coord) -> Result<Self> {
        let sets = self
            .sets
            .iter()
            .map(|s| s.dilate(p))
            .collect::<Result<Vec<_>>>()?;
        let nested = self.nested;
        Ok(RegularSystem {
            k: self.k,
            sets,
            kind: SystemKind::Custom,
            nested,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n_max(&self) -> usize {
        self.sets.len() - 1
    }

    pub fn kind(&self) -> &SystemKind {
        &self.kind
    }

    pub fn is_nested(&self) -> bool {
        self.nested
    }

    pub fn set(&self, n: usize) -> Result<&PointSet> {
        self.sets.get(n).ok_or(Error::IndexOverflow {
            requested: n,
            n_max: self.n_max(),
        })
    }

    /// True iff e in N_0 and N_i + N_j is contained in N_{i+j} for all
    /// i + j <= n_max. On failure reports the least witness (i, j, g) under
    /// the scan order: i >= 1 lexicographically (j from 0), then (0, 0);
    /// for the commutative monoid Z_+^k the skipped pairs (0, j) are covered
    /// by (j, 0).
    pub fn verify_regular(&self) -> RegularityReport {
        let identity_ok = self.sets[0].contains(&vec![0; self.k]);
        let n_max = self.n_max();
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for i in 1..=n_max {
            for j in 0..=(n_max - i) {
                pairs.push((i, j));
            }
        }
        pairs.push((0, 0));
        for (i, j) in pairs {
            if let Ok(sum) = self.sets[i].sumset(&self.sets[j]) {
                let target = &self.sets[i + j];
                for g in sum.iter() {
                    if !target.contains(g) {
                        return RegularityReport {
                            identity_ok,
                            witness: Some((i, j, LatticeElement(g.to_vec()))),
                        };
                    }
                }
            }
        }
        RegularityReport {
            identity_ok,
            witness: None,
        }
    }

    /// |N_n symdiff (g + N_n)| / |N_n| as an exact rational.
    pub fn folner_defect(&self, g: &LatticeElement, n: usize) -> Result<Ratio<u64>> {
        if g.dim() != self.k {
            return Err(Error::InvalidConfig {
                field: "g".into(),
                message: format!("expected dimension {}, got {}", self.k, g.dim()),
            });
        }
        let set = self.set(n)?;
        let shifted = set.translate(g.coords())?;
        Ok(Ratio::new(
            set.symmetric_difference_count(&shifted),
            set.len() as u64,
        ))
    }

    /// Defect table over n = 1..=n_max with the Folner-compatibility flag:
    /// non-increasing over the range and strictly smaller at the end.
    pub fn folner_report(&self, g: &LatticeElement) -> Result<FolnerReport> {
        let mut defects = Vec::new();
        for n in 1..=self.n_max() {
            defects.push((n, self.folner_defect(g, n)?));
        }
        let non_increasing = defects.windows(2).all(|w| w[1].1 <= w[0].1);
        let decreased = defects.len() >= 2 && defects.last().unwrap().1 < defects[0].1;
        Ok(FolnerReport {
            element: g.clone(),
            defects,
            folner_compatible: non_increasing && decreased,
        })
    }

    /// Serializable description: kind + parameters for the named families,
    /// explicit element lists otherwise.
    pub fn to_document(&self) -> RegularSystemSpec {
        match &self.kind {
            SystemKind::Standard => RegularSystemSpec::Standard {
                k: self.k,
                n_max: self.n_max(),
            },
            SystemKind::Even => RegularSystemSpec::Even { n_max: self.n_max() },
            _ => RegularSystemSpec::Custom {
                k: self.k,
                sets: self.sets.iter().map(|s| s.rows()).collect(),
            },
        }
    }
}

/// Declarative description of a regular system, the on-disk form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RegularSystemSpec {
    Standard {
        k: usize,
        n_max: usize,
    },
    Even {
        n_max: usize,
    },
    Scaled {
        p: usize,
        base: Box<RegularSystemSpec>,
    },
    Restricted {
        moduli: Vec<Coord>,
        base: Box<RegularSystemSpec>,
    },
    Custom {
        k: usize,
        sets: Vec<Vec<Vec<Coord>>>,
    },
}

impl RegularSystemSpec {
    pub fn build(&self) -> Result<RegularSystem> {
        match self {
            RegularSystemSpec::Standard { k, n_max } => {
                if *k < 1 || *n_max < 1 {
                    return Err(Error::InvalidConfig {
                        field: "gamma".into(),
                        message: "standard system needs k >= 1 and n_max >= 1".into(),
                    });
                }
                Ok(RegularSystem::standard(*k, *n_max))
            }
            RegularSystemSpec::Even { n_max } => {
                if *n_max < 1 {
                    return Err(Error::InvalidConfig {
                        field: "gamma.n_max".into(),
                        message: "must be >= 1".into(),
                    });
                }
                Ok(RegularSystem::even(*n_max))
            }
            RegularSystemSpec::Scaled { p, base } => base.build()?.scaled(*p),
            RegularSystemSpec::Restricted { moduli, base } => base.build()?.restricted(moduli),
            RegularSystemSpec::Custom { k, sets } => {
                let sets = sets
                    .iter()
                    .map(|rows| PointSet::from_rows(*k, rows.iter()))
                    .collect();
                RegularSystem::custom(*k, sets)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_system_boxes() {
        let g = RegularSystem::standard(1, 5);
        assert_eq!(g.set(2).unwrap().rows(), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(g.set(5).unwrap().len(), 6);
        let g2 = RegularSystem::standard(2, 3);
        assert_eq!(
            g2.set(1).unwrap().rows(),
            vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]
        );
        for n in 0..=3 {
            assert_eq!(g2.set(n).unwrap().len(), (n + 1).pow(2));
        }
        assert!(g2.verify_regular().is_valid());
    }

    #[test]
    fn even_system_sets_and_regularity() {
        let g = RegularSystem::even(6);
        assert_eq!(
            g.set(3).unwrap().rows(),
            vec![vec![0], vec![2], vec![4], vec![6]]
        );
        assert!(g.verify_regular().is_valid());
        // N_1 + N_2 = {0,2,4,6} subset of N_3
        let sum = g.set(1).unwrap().sumset(g.set(2).unwrap()).unwrap();
        assert!(sum.is_subset_of(g.set(3).unwrap()));
    }

    #[test]
    fn doubling_system_rejected_with_witness() {
        // N_n = [0, 2^n]
        let sets: Vec<PointSet> = (0..=4u32)
            .map(|n| PointSet::box_set(&[0], &[2u32.pow(n)]))
            .collect();
        let g = RegularSystem::custom(1, sets).unwrap();
        let report = g.verify_regular();
        assert!(!report.is_valid());
        assert_eq!(
            report.witness,
            Some((1, 0, LatticeElement(vec![3]))),
            "N_1 + N_0 = [0,3] not contained in N_1 = [0,2]"
        );
    }

    #[test]
    fn folner_defects() {
        let g = RegularSystem::standard(1, 9);
        let d = g.folner_defect(&LatticeElement(vec![1]), 9).unwrap();
        assert_eq!(d, Ratio::new(2, 10)); // [0,9] vs [1,10]: {0,10}
        let g2 = RegularSystem::standard(2, 9);
        let d2 = g2.folner_defect(&LatticeElement(vec![1, 0]), 9).unwrap();
        assert_eq!(d2, Ratio::new(1, 5)); // 2*10/100

        let even = RegularSystem::even(8);
        for n in 1..=8 {
            let d = even.folner_defect(&LatticeElement(vec![1]), n).unwrap();
            assert_eq!(d, Ratio::new(2, 1), "disjoint translate at n={n}");
        }
        let report = even.folner_report(&LatticeElement(vec![1])).unwrap();
        assert!(!report.folner_compatible);
        let report = g.folner_report(&LatticeElement(vec![1])).unwrap();
        assert!(report.folner_compatible);
        // strictly decreasing like c/n
        for w in report.defects.windows(2) {
            assert!(w[1].1 < w[0].1);
        }
    }

    #[test]
    fn scaled_and_restricted() {
        let g = RegularSystem::standard(1, 12);
        let s2 = g.scaled(2).unwrap();
        assert_eq!(s2.set(2).unwrap().rows(), PointSet::cube(1, 4).rows());
        let s1 = g.scaled(1).unwrap();
        assert_eq!(s1.set(7).unwrap(), g.set(7).unwrap());

        let even = RegularSystem::even(9);
        let s3 = even.scaled(3).unwrap();
        assert_eq!(
            s3.set(1).unwrap().rows(),
            vec![vec![0], vec![2], vec![4], vec![6]]
        );

        let r = g.restricted(&[2]).unwrap();
        assert_eq!(r.set(4).unwrap().rows(), vec![vec![0], vec![2], vec![4]]);
        let g2 = RegularSystem::standard(2, 5);
        let r2 = g2.restricted(&[2, 3]).unwrap();
        let expect: Vec<Vec<Coord>> = [0u32, 2, 4]
            .iter()
            .flat_map(|&a| [0u32, 3].iter().map(move |&b| vec![a, b]))
            .collect();
        assert_eq!(r2.set(5).unwrap(), &PointSet::from_rows(2, expect));
        let r1 = g2.restricted(&[1, 1]).unwrap();
        assert_eq!(r1.set(5).unwrap(), g2.set(5).unwrap());
    }

    #[test]
    fn scaled_composes() {
        let g = RegularSystem::standard(1, 30);
        let a = g.scaled(2).unwrap().scaled(3).unwrap();
        let b = g.scaled(6).unwrap();
        for n in 0..=a.n_max().min(b.n_max()) {
            assert_eq!(a.set(n).unwrap(), b.set(n).unwrap());
        }
    }

    #[test]
    fn nestedness() {
        let g = RegularSystem::standard(2, 6);
        assert!(g.is_nested());
        let e = RegularSystem::even(6);
        assert!(e.is_nested());
    }

    #[test]
    fn document_round_trip() {
        let g = RegularSystem::standard(2, 4);
        let doc = g.to_document();
        let s = toml::to_string(&doc).unwrap();
        let parsed: RegularSystemSpec = toml::from_str(&s).unwrap();
        assert_eq!(parsed, doc);
        let rebuilt = parsed.build().unwrap();
        assert_eq!(&rebuilt, &g);

        let custom = RegularSystem::even(3).to_document();
        let rebuilt = custom.build().unwrap();
        assert_eq!(rebuilt.set(3).unwrap(), RegularSystem::even(3).set(3).unwrap());

        // scaled/restricted serialize extensionally
        let r = RegularSystem::standard(1, 8).restricted(&[2]).unwrap();
        let doc = r.to_document();
        let rebuilt = toml::from_str::<RegularSystemSpec>(&toml::to_string(&doc).unwrap())
            .unwrap()
            .build()
            .unwrap();
        for n in 0..=r.n_max() {
            assert_eq!(rebuilt.set(n).unwrap(), r.set(n).unwrap());
        }
    }
}
