//! Phase spaces: full shifts over Z_+^d acted on by lattice translations.
//!
//! A [`SymbolicSystem`] is a (possibly multi-factor) full shift together with
//! a homomorphism Z_+^k -> translations: generator i moves the configuration
//! by a fixed displacement vector. This realizes every concrete example the
//! receptive-entropy computations need: the Bernoulli shift (k = d = 1), the
//! diagonal action T((m_1,...,m_k), x) = f^{m_1+...+m_k}(x), shift fields over
//! Z_+^d, products of shifts, and the trivial action (all displacements 0).
//!
//! The metric is fixed to d(x, y) = 2^(-m) where m is the least l-infinity
//! norm of a coordinate at which x and y differ. With this choice every
//! dynamic ball is exactly a cylinder, so measures and counts are exact.
//!
//! Products need care: the product of two shifts is *not* the i.i.d. full
//! shift on the pair alphabet over the product lattice. Here a product point
//! assigns to lattice coordinate (u, v) the pair (x_1(u), x_2(v)); the system
//! records a factor structure and all cylinder statistics are computed on the
//! per-factor projections of a coordinate set. Single factors reduce to the
//! usual formulas.

use crate::error::{Error, Result};
use crate::lattice::{Coord, LatticeElement, PointSet, RegularSystem};
use num::BigUint;
use num::One;
use serde::{Deserialize, Serialize};

/// One independent shift factor: alphabet size and how many lattice axes it owns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorSpec {
    pub alphabet: usize,
    pub dim: usize,
}

/// A full shift (product of full-shift factors) with a translation action of Z_+^k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicSystem {
    factors: Vec<FactorSpec>,
    /// k displacement vectors in Z_+^d, d = total lattice dimension.
    displacements: Vec<LatticeElement>,
}

impl SymbolicSystem {
    pub fn new(factors: Vec<FactorSpec>, displacements: Vec<LatticeElement>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidConfig {
                field: "system.factors".into(),
                message: "at least one factor required".into(),
            });
        }
        for (i, f) in factors.iter().enumerate() {
            if f.alphabet < 1 || f.dim < 1 {
                return Err(Error::InvalidConfig {
                    field: format!("system.factors[{i}]"),
                    message: "alphabet and dim must be >= 1".into(),
                });
            }
            if f.alphabet > u8::MAX as usize + 1 {
                return Err(Error::InvalidConfig {
                    field: format!("system.factors[{i}].alphabet"),
                    message: "alphabet sizes above 256 are not supported".into(),
                });
            }
        }
        let d: usize = factors.iter().map(|f| f.dim).sum();
        if displacements.is_empty() {
            return Err(Error::InvalidConfig {
                field: "system.displacements".into(),
                message: "at least one generator required".into(),
            });
        }
        for (i, g) in displacements.iter().enumerate() {
            if g.dim() != d {
                return Err(Error::InvalidConfig {
                    field: format!("system.displacements[{i}]"),
                    message: format!("expected dimension {d}, got {}", g.dim()),
                });
            }
        }
        Ok(SymbolicSystem {
            factors,
            displacements,
        })
    }

    /// Full shift on r symbols over Z_+^d with the given generator displacements.
    pub fn full_shift(r: usize, d: usize, displacements: Vec<Vec<Coord>>) -> Result<Self> {
        Self::new(
            vec![FactorSpec { alphabet: r, dim: d }],
            displacements.into_iter().map(LatticeElement).collect(),
        )
    }

    /// The one-sided Bernoulli shift: k = d = 1, displacement 1.
    pub fn bernoulli_shift(r: usize) -> Self {
        Self::full_shift(r, 1, vec![vec![1]]).expect("valid shift")
    }

    /// Diagonal action of Z_+^k: every generator advances the same shift,
    /// so g = (m_1, ..., m_k) acts as f^(m_1 + ... + m_k).
    pub fn diagonal(r: usize, k: usize) -> Self {
        Self::full_shift(r, 1, vec![vec![1]; k]).expect("valid diagonal system")
    }

    /// d-dimensional shift field: k = d generators, unit translations.
    pub fn shift_field(r: usize, d: usize) -> Self {
        let gens = (0..d)
            .map(|a| {
                let mut v = vec![0; d];
                v[a] = 1;
                v
            })
            .collect();
        Self::full_shift(r, d, gens).expect("valid shift field")
    }

    /// Trivial action: one generator with zero displacement.
    pub fn trivial(r: usize) -> Self {
        Self::full_shift(r, 1, vec![vec![0]]).expect("valid trivial system")
    }

    /// Product action on X_1 x X_2: factors concatenated, generators act
    /// componentwise (k = k_1 + k_2).
    pub fn product(&self, other: &SymbolicSystem) -> SymbolicSystem {
        let d1 = self.lattice_dim();
        let d2 = other.lattice_dim();
        let mut factors = self.factors.clone();
        factors.extend(other.factors.clone());
        let mut displacements = Vec::new();
        for g in &self.displacements {
            let mut v = g.0.clone();
            v.extend(std::iter::repeat(0).take(d2));
            displacements.push(LatticeElement(v));
        }
        for g in &other.displacements {
            let mut v = vec![0; d1];
            v.extend_from_slice(&g.0);
            displacements.push(LatticeElement(v));
        }
        SymbolicSystem {
            factors,
            displacements,
        }
    }

    pub fn factors(&self) -> &[FactorSpec] {
        &self.factors
    }

    pub fn lattice_dim(&self) -> usize {
        self.factors.iter().map(|f| f.dim).sum()
    }

    pub fn num_generators(&self) -> usize {
        self.displacements.len()
    }

    pub fn displacements(&self) -> &[LatticeElement] {
        &self.displacements
    }

    /// Axis range owned by each factor.
    pub fn factor_axes(&self) -> Vec<std::ops::Range<usize>> {
        let mut out = Vec::with_capacity(self.factors.len());
        let mut off = 0;
        for f in &self.factors {
            out.push(off..off + f.dim);
            off += f.dim;
        }
        out
    }

    /// delta(g) = sum_i g_i * displacement_i for g in Z_+^k.
    pub fn displacement_of(&self, g: &[Coord]) -> Result<LatticeElement> {
        if g.len() != self.num_generators() {
            return Err(Error::InvalidConfig {
                field: "g".into(),
                message: format!(
                    "expected {} generator exponents, got {}",
                    self.num_generators(),
                    g.len()
                ),
            });
        }
        let d = self.lattice_dim();
        let mut acc = vec![0u64; d];
        for (i, &gi) in g.iter().enumerate() {
            for a in 0..d {
                acc[a] += gi as u64 * self.displacements[i].0[a] as u64;
            }
        }
        let mut out = Vec::with_capacity(d);
        for v in acc {
            if v > Coord::MAX as u64 {
                return Err(Error::CoordOverflow("displacement_of".into()));
            }
            out.push(v as Coord);
        }
        Ok(LatticeElement(out))
    }

    /// The set {delta(g) : g in N}, deduplicated. For the diagonal action this
    /// collapses a (n+1)^k box to the segment [0, kn].
    pub fn displacement_set(&self, n_set: &PointSet) -> Result<PointSet> {
        let mut rows = Vec::with_capacity(n_set.len());
        for g in n_set.iter() {
            rows.push(self.displacement_of(g)?.0);
        }
        Ok(PointSet::from_rows(self.lattice_dim(), rows))
    }

    /// All generator displacements zero: the structural certificate behind
    /// "the trivial action has every entropy equal to 0" (A^n = A for all n).
    pub fn is_trivial_action(&self) -> bool {
        self.displacements.iter().all(|g| g.is_zero())
    }

    /// Number of cylinders on a coordinate set S: prod_i r_i^(|proj_i S|).
    pub fn cell_count(&self, coords: &PointSet) -> BigUint {
        let mut total = BigUint::one();
        for (f, axes) in self.factors.iter().zip(self.factor_axes()) {
            let m = coords.project(axes).len();
            total *= BigUint::from(f.alphabet).pow(m as u32);
        }
        total
    }

    /// Per-factor projections of a coordinate set.
    pub fn factor_projections(&self, coords: &PointSet) -> Vec<PointSet> {
        self.factor_axes()
            .into_iter()
            .map(|axes| coords.project(axes))
            .collect()
    }

    /// Permute the alphabet of one factor; counts and (suitably permuted)
    /// measures are unchanged, which is the conjugacy-invariance check.
    pub fn validate_permutation(&self, factor: usize, perm: &[u8]) -> Result<()> {
        let f = self.factors.get(factor).ok_or_else(|| Error::InvalidConfig {
            field: "factor".into(),
            message: format!("no factor {factor}"),
        })?;
        let mut seen = vec![false; f.alphabet];
        if perm.len() != f.alphabet {
            return Err(Error::InvalidConfig {
                field: "perm".into(),
                message: "length must equal alphabet size".into(),
            });
        }
        for &p in perm {
            if (p as usize) >= f.alphabet || seen[p as usize] {
                return Err(Error::InvalidConfig {
                    field: "perm".into(),
                    message: "not a permutation".into(),
                });
            }
            seen[p as usize] = true;
        }
        Ok(())
    }
}

/// Whether a coordinate set is read as a partition or as an open cover; for
/// cylinder sets the two coincide (cells are clopen).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PartitionRole {
    Partition,
    Cover,
}

/// The partition (or cover) of the full shift into cylinders determined by a
/// finite coordinate set S, i.e. the spec of the paper's A and A^n_Gamma.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinatePartition {
    pub coords: PointSet,
    pub role: PartitionRole,
}

impl CoordinatePartition {
    pub fn partition(coords: PointSet) -> Self {
        assert!(!coords.is_empty(), "coordinate set must be non-empty");
        CoordinatePartition {
            coords,
            role: PartitionRole::Partition,
        }
    }

    pub fn cover(coords: PointSet) -> Self {
        assert!(!coords.is_empty(), "coordinate set must be non-empty");
        CoordinatePartition {
            coords,
            role: PartitionRole::Cover,
        }
    }

    /// Cylinder partition at the lattice origin.
    pub fn at_origin(sys: &SymbolicSystem) -> Self {
        Self::partition(PointSet::singleton(&vec![0; sys.lattice_dim()]))
    }

    /// g^{-1} A: coordinates translated by delta(g). Cardinality is preserved.
    pub fn pullback(&self, g: &[Coord], sys: &SymbolicSystem) -> Result<Self> {
        let delta = sys.displacement_of(g)?;
        Ok(CoordinatePartition {
            coords: self.coords.translate(delta.coords())?,
            role: self.role,
        })
    }

    /// A^n_Gamma = join of g^{-1} A over g in N_n: coordinates are the sumset
    /// S + delta(N_n).
    pub fn join_over(
        &self,
        gamma: &RegularSystem,
        n: usize,
        sys: &SymbolicSystem,
    ) -> Result<Self> {
        let deltas = sys.displacement_set(gamma.set(n)?)?;
        Ok(CoordinatePartition {
            coords: self.coords.sumset(&deltas)?,
            role: self.role,
        })
    }
}

/// All patterns on the window [0, L]^d with the induced metric: the compact
/// set K that brute-force oracles run on.
///
/// Points are stored as flat byte strings, one symbol per window position of
/// each factor (factor windows concatenated, positions in row-major order).
/// The point list is in lexicographic order of those strings, so every
/// enumeration downstream is deterministic.
#[derive(Clone, Debug)]
pub struct FiniteApproximation {
    sys: SymbolicSystem,
    window_end: Coord,
    /// Per factor: its local window box [0,L]^{d_f}, row-major.
    factor_windows: Vec<PointSet>,
    factor_offsets: Vec<usize>,
    point_len: usize,
    points: Vec<u8>,
    /// Byte positions sorted by the l-infinity norm of their lattice coordinate.
    positions_by_norm: Vec<(Coord, usize)>,
}

impl FiniteApproximation {
    /// Enumerates all patterns on [0, L]^d; errors out with the offending
    /// count when prod_i r_i^{(L+1)^{d_i}} exceeds `budget`.
    pub fn truncate(sys: &SymbolicSystem, window_end: Coord, budget: u64) -> Result<Self> {
        let mut total = BigUint::one();
        for f in sys.factors() {
            let positions = (window_end as u64 + 1).pow(f.dim as u32);
            if positions > u32::MAX as u64 {
                return Err(Error::BudgetExceeded {
                    what: "truncation window".into(),
                    needed: positions.to_string(),
                    budget,
                });
            }
            total *= BigUint::from(f.alphabet).pow(positions as u32);
        }
        if total > BigUint::from(budget) {
            return Err(Error::BudgetExceeded {
                what: "pattern enumeration".into(),
                needed: total.to_string(),
                budget,
            });
        }
        let n_points = total
            .try_into()
            .map(|v: u64| v as usize)
            .expect("within budget");

        let factor_windows: Vec<PointSet> = sys
            .factors()
            .iter()
            .map(|f| PointSet::cube(f.dim, window_end))
            .collect();
        let mut factor_offsets = Vec::with_capacity(sys.factors().len());
        let mut point_len = 0usize;
        for w in &factor_windows {
            factor_offsets.push(point_len);
            point_len += w.len();
        }

        // radix of each byte position
        let mut radix = Vec::with_capacity(point_len);
        for (f, w) in sys.factors().iter().zip(&factor_windows) {
            radix.extend(std::iter::repeat(f.alphabet as u8).take(w.len()));
        }

        let mut points = Vec::with_capacity(n_points * point_len);
        let mut cur = vec![0u8; point_len];
        'odometer: loop {
            points.extend_from_slice(&cur);
            for pos in (0..point_len).rev() {
                if cur[pos] + 1 < radix[pos] {
                    cur[pos] += 1;
                    for p in pos + 1..point_len {
                        cur[p] = 0;
                    }
                    continue 'odometer;
                }
            }
            break;
        }
        debug_assert_eq!(points.len(), n_points * point_len);

        let mut positions_by_norm: Vec<(Coord, usize)> = Vec::with_capacity(point_len);
        for (fi, w) in factor_windows.iter().enumerate() {
            for (local, p) in w.iter().enumerate() {
                let norm = p.iter().copied().max().unwrap_or(0);
                positions_by_norm.push((norm, factor_offsets[fi] + local));
            }
        }
        positions_by_norm.sort_unstable();

        Ok(FiniteApproximation {
            sys: sys.clone(),
            window_end,
            factor_windows,
            factor_offsets,
            point_len,
            points,
            positions_by_norm,
        })
    }

    pub fn system(&self) -> &SymbolicSystem {
        &self.sys
    }

    pub fn window_end(&self) -> Coord {
        self.window_end
    }

    pub fn len(&self) -> usize {
        if self.point_len == 0 {
            0
        } else {
            self.points.len() / self.point_len
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn point(&self, i: usize) -> &[u8] {
        &self.points[i * self.point_len..(i + 1) * self.point_len]
    }

    /// Symbol of factor `f` at its local coordinate (the projection of a
    /// lattice coordinate onto the factor's axes). None outside the window.
    pub fn factor_symbol_at(&self, point: &[u8], f: usize, local: &[Coord]) -> Option<u8> {
        Some(point[self.factor_position(f, local)?])
    }

    /// Byte position of factor `f`'s symbol at a local coordinate, inside the
    /// concatenated pattern. None outside the window.
    pub fn factor_position(&self, f: usize, local: &[Coord]) -> Option<usize> {
        if local.iter().any(|&c| c > self.window_end) {
            return None;
        }
        let idx = self.factor_windows[f].index_of(local)?;
        Some(self.factor_offsets[f] + idx)
    }

    /// Do x and y agree at lattice coordinate `coord`? None when the
    /// coordinate is outside the window (domain condition violated).
    pub fn agree_at(&self, x: &[u8], y: &[u8], coord: &[Coord]) -> Option<bool> {
        let axes = self.sys.factor_axes();
        for (f, range) in axes.into_iter().enumerate() {
            let local = &coord[range];
            let sx = self.factor_symbol_at(x, f, local)?;
            let sy = self.factor_symbol_at(y, f, local)?;
            if sx != sy {
                return Some(false);
            }
        }
        Some(true)
    }

    /// Least l-infinity norm of a window coordinate where x and y differ.
    pub fn min_diff_norm(&self, x: &[u8], y: &[u8]) -> Option<Coord> {
        // positions_by_norm indexes concatenated factor patterns directly:
        // a differing byte is a differing factor component at that coordinate
        // projection, hence a differing product coordinate of the same norm.
        for &(norm, pos) in &self.positions_by_norm {
            if x[pos] != y[pos] {
                return Some(norm);
            }
        }
        None
    }

    /// The induced metric 2^(-min differing norm); 0 when the patterns agree
    /// on the whole window.
    pub fn distance(&self, i: usize, j: usize) -> f64 {
        match self.min_diff_norm(self.point(i), self.point(j)) {
            Some(m) => 0.5f64.powi(m as i32),
            None => 0.0,
        }
    }

    /// Partial generator map: the pattern translated by delta(g), defined on
    /// the sub-window where the shift stays inside [0, L]^d. Returns the
    /// factor-wise shifted pattern (same layout, positions outside the domain
    /// set to `u8::MAX`) plus the per-axis domain end, or None when the
    /// displacement empties the window.
    pub fn apply_generator(&self, point: &[u8], g: &[Coord]) -> Result<Option<(Vec<u8>, Coord)>> {
        let delta = self.sys.displacement_of(g)?;
        let max_shift = delta.0.iter().copied().max().unwrap_or(0);
        if max_shift > self.window_end {
            return Ok(None);
        }
        let domain_end = self.window_end - max_shift;
        let mut out = vec![u8::MAX; self.point_len];
        let axes = self.sys.factor_axes();
        for (f, range) in axes.into_iter().enumerate() {
            let dshift = &delta.0[range];
            for (local_idx, local) in self.factor_windows[f].iter().enumerate() {
                let mut src = Vec::with_capacity(local.len());
                let mut ok = true;
                for (a, &c) in local.iter().enumerate() {
                    let s = c + dshift[a];
                    if s > self.window_end {
                        ok = false;
                        break;
                    }
                    src.push(s);
                }
                if ok {
                    if let Some(sym) = self.factor_symbol_at(point, f, &src) {
                        out[self.factor_offsets[f] + local_idx] = sym;
                    }
                }
            }
        }
        Ok(Some((out, domain_end)))
    }

    /// Point-and-metric table as CSV for external validation. Guarded: the
    /// pairwise table is quadratic.
    pub fn to_metric_csv(&self, max_points: usize) -> Result<String> {
        if self.len() > max_points {
            return Err(Error::BudgetExceeded {
                what: "metric table export".into(),
                needed: self.len().to_string(),
                budget: max_points as u64,
            });
        }
        let mut out = String::new();
        out.push_str("i,j,distance\n");
        for i in 0..self.len() {
            for j in (i + 1)..self.len() {
                out.push_str(&format!("{i},{j},{}\n", self.distance(i, j)));
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pullback_translates_coords() {
        let sys = SymbolicSystem::diagonal(2, 2);
        let a = CoordinatePartition::at_origin(&sys);
        let b = a.pullback(&[2, 1], &sys).unwrap();
        assert_eq!(b.coords.rows(), vec![vec![3]]);
        let e = a.pullback(&[0, 0], &sys).unwrap();
        assert_eq!(e.coords, a.coords);

        let field = SymbolicSystem::shift_field(2, 2);
        let a2 = CoordinatePartition::at_origin(&field);
        let b2 = a2.pullback(&[1, 0], &field).unwrap();
        assert_eq!(b2.coords.rows(), vec![vec![1, 0]]);
    }

    #[test]
    fn pullback_composes() {
        let sys = SymbolicSystem::shift_field(3, 2);
        let a = CoordinatePartition::partition(PointSet::from_rows(2, [[0u32, 0], [1, 2]]));
        let via_gh = a
            .pullback(&[1, 2], &sys)
            .unwrap()
            .pullback(&[0, 3], &sys)
            .unwrap();
        let direct = a.pullback(&[1, 5], &sys).unwrap();
        assert_eq!(via_gh.coords, direct.coords);
        assert_eq!(via_gh.coords.len(), a.coords.len());
    }

    #[test]
    fn join_matches_diagonal_closed_form() {
        // Example: diagonal k = 2, S = {0}, standard system: coords [0, 2n].
        let sys = SymbolicSystem::diagonal(2, 2);
        let gamma = RegularSystem::standard(2, 5);
        let a = CoordinatePartition::at_origin(&sys);
        let j = a.join_over(&gamma, 3, &sys).unwrap();
        assert_eq!(j.coords, PointSet::cube(1, 6));

        // trivial action: join never grows
        let triv = SymbolicSystem::trivial(2);
        let gamma1 = RegularSystem::standard(1, 5);
        let a = CoordinatePartition::at_origin(&triv);
        for n in 1..=5 {
            let j = a.join_over(&gamma1, n, &triv).unwrap();
            assert_eq!(j.coords, a.coords);
        }

        // 2-dim shift field, standard k = 2: coords [0, n]^2
        let field = SymbolicSystem::shift_field(2, 2);
        let a = CoordinatePartition::at_origin(&field);
        let j = a.join_over(&gamma, 2, &field).unwrap();
        assert_eq!(j.coords, PointSet::cube(2, 2));
    }

    #[test]
    fn join_monotone_on_nested_systems() {
        let sys = SymbolicSystem::diagonal(2, 2);
        let gamma = RegularSystem::standard(2, 6);
        let a = CoordinatePartition::at_origin(&sys);
        let mut prev = a.join_over(&gamma, 1, &sys).unwrap();
        for n in 2..=6 {
            let next = a.join_over(&gamma, n, &sys).unwrap();
            assert!(prev.coords.is_subset_of(&next.coords));
            assert!(next.coords.len() <= a.coords.len() * gamma.set(n).unwrap().len());
            prev = next;
        }
    }

    #[test]
    fn product_factor_projections() {
        let s1 = SymbolicSystem::bernoulli_shift(2);
        let s2 = SymbolicSystem::bernoulli_shift(2);
        let prod = s1.product(&s2);
        assert_eq!(prod.lattice_dim(), 2);
        assert_eq!(prod.num_generators(), 2);
        let gamma = RegularSystem::standard(2, 4);
        let a = CoordinatePartition::at_origin(&prod);
        let j = a.join_over(&gamma, 3, &prod).unwrap();
        let projs = prod.factor_projections(&j.coords);
        assert_eq!(projs[0], PointSet::cube(1, 3));
        assert_eq!(projs[1], PointSet::cube(1, 3));
        // cell count 2^(3+1) * 2^(3+1), not 4^16
        assert_eq!(prod.cell_count(&j.coords), BigUint::from(256u32));
    }

    #[test]
    fn truncation_enumeration_and_metric() {
        let sys = SymbolicSystem::bernoulli_shift(2);
        let fa = FiniteApproximation::truncate(&sys, 3, 1 << 20).unwrap();
        assert_eq!(fa.len(), 16);
        // patterns differing only at coordinate 2 have distance 2^-2
        let x = fa.point(0); // 0000
        let y_idx = 0b0010usize; // pattern 0010, coordinate 2 differs
        let y = fa.point(y_idx);
        assert_eq!(fa.min_diff_norm(x, y), Some(2));
        assert_eq!(fa.distance(0, y_idx), 0.25);

        // over budget
        let field = SymbolicSystem::shift_field(2, 2);
        let err = FiniteApproximation::truncate(&field, 4, 1 << 20).unwrap_err();
        match err {
            Error::BudgetExceeded { needed, .. } => {
                assert_eq!(needed, (BigUint::from(1u8) << 25u32).to_string())
            }
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn truncation_metric_agrees_with_full_shift() {
        // interior deciding coordinate: induced metric = full-shift metric
        let sys = SymbolicSystem::bernoulli_shift(2);
        let fa = FiniteApproximation::truncate(&sys, 4, 1 << 20).unwrap();
        for i in 0..fa.len() {
            for j in (i + 1)..fa.len() {
                let m = fa.min_diff_norm(fa.point(i), fa.point(j)).unwrap();
                // recompute from raw patterns
                let (x, y) = (fa.point(i), fa.point(j));
                let expect = (0..5).find(|&c| x[c] != y[c]).unwrap() as Coord;
                assert_eq!(m, expect);
            }
        }
    }

    #[test]
    fn generator_map_translates_with_truncation() {
        let sys = SymbolicSystem::bernoulli_shift(2);
        let fa = FiniteApproximation::truncate(&sys, 3, 1 << 20).unwrap();
        // pattern 0110 shifted by f: 110? on domain [0,2]
        let idx = 0b0110usize;
        let (shifted, domain_end) = fa.apply_generator(fa.point(idx), &[1]).unwrap().unwrap();
        assert_eq!(domain_end, 2);
        assert_eq!(&shifted[0..3], &[1, 1, 0]);
        assert_eq!(shifted[3], u8::MAX);
    }
}
