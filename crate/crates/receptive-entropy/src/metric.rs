//! Receptive and classical metric entropy of partition joins.
//!
//! The receptive metric entropy of an action with respect to a partition A
//! and a regular system Gamma is limsup (1/n) H_mu(A^n_Gamma); the classical
//! amenable normalization divides by |N_n| instead. Neither limit is
//! computable at desk scale, so every operation here returns an
//! [`EntropySequence`]: the finite record {(n, a_n, a_n / norm(n))} with a
//! headline (the value at n_max, or a certified 0 for the trivial action,
//! where A^n = A for every n) and slope diagnostics over the trailing
//! quarter of the samples.
//!
//! For Bernoulli oracles the raw values are carried as exact symbolic
//! entropies, so the law checks in this module (scaling, products,
//! subactions, conjugacy) are asserted as exact arithmetic identities rather
//! than float comparisons.

use crate::error::{Error, Result};
use crate::lattice::{Coord, LatticeElement, PointSet, RegularSystem};
use crate::measure::{
    bernoulli_partition_entropy, markov_partition_entropy, shannon_entropy_nats, ExactEntropy,
    MeasureOracle,
};
use crate::symbolic::{CoordinatePartition, PartitionRole, SymbolicSystem};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::ToPrimitive;
use serde::{Deserialize, Serialize};

/// Entropy of a single partition, with the exact form when the oracle is
/// Bernoulli.
#[derive(Clone, Debug, PartialEq)]
pub struct EntropyValue {
    pub nats: f64,
    pub exact: Option<ExactEntropy>,
}

/// H_mu(A) over the cylinders of A; Bernoulli measures use the closed form
/// sum_f |proj_f S| * H(p_f), Markov measures enumerate (budget-capped).
pub fn partition_entropy(
    measure: &MeasureOracle,
    sys: &SymbolicSystem,
    partition: &CoordinatePartition,
    enumeration_budget: u64,
) -> Result<EntropyValue> {
    if partition.role != PartitionRole::Partition {
        return Err(Error::InvalidConfig {
            field: "partition.role".into(),
            message: "entropy is defined for partitions; got a cover".into(),
        });
    }
    measure.validate_for(sys)?;
    match measure {
        MeasureOracle::Bernoulli(b) => {
            let exact = bernoulli_partition_entropy(b, sys, &partition.coords);
            Ok(EntropyValue {
                nats: exact.eval(),
                exact: Some(exact),
            })
        }
        MeasureOracle::Markov(m) => Ok(EntropyValue {
            nats: markov_partition_entropy(m, &partition.coords, enumeration_budget)?,
            exact: None,
        }),
    }
}

/// Which sequence the growth is divided by.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Normalization {
    /// 1/n: the receptive normalization.
    Receptive,
    /// 1/|N_n|: the classical amenable normalization.
    Classical,
}

#[derive(Clone, Debug, Serialize)]
pub struct EntropySample {
    pub n: usize,
    pub raw: f64,
    pub normalized: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SequenceDiagnostics {
    /// Secant slope of the raw values over the trailing quarter window.
    pub tail_slope: f64,
    pub raw_nondecreasing: bool,
    /// The raw sequence is provably constant for all n (trivial action):
    /// limsup a_n / norm(n) = 0 is a theorem, not an extrapolation.
    pub certified_zero: bool,
}

/// Finite record of a limsup: samples, headline, diagnostics.
#[derive(Clone, Debug)]
pub struct EntropySequence {
    pub normalization: Normalization,
    pub samples: Vec<EntropySample>,
    pub headline: f64,
    pub diagnostics: SequenceDiagnostics,
    exact_raw: Vec<Option<ExactEntropy>>,
}

impl EntropySequence {
    pub(crate) fn assemble(
        normalization: Normalization,
        raw: Vec<(usize, EntropyValue)>,
        norms: Vec<BigRational>,
        certified_zero: bool,
    ) -> Self {
        let mut samples = Vec::with_capacity(raw.len());
        let mut exact_raw = Vec::with_capacity(raw.len());
        for ((n, value), norm) in raw.into_iter().zip(norms) {
            let normalized = match &value.exact {
                // evaluate the exactly-rescaled form: keeps identities like
                // (n+1)^2 log 2 / (n+1)^2 = log 2 bit-exact
                Some(e) => e.scale(&norm.recip()).eval(),
                None => value.nats / norm.to_f64().unwrap_or(f64::NAN),
            };
            samples.push(EntropySample {
                n,
                raw: value.nats,
                normalized,
            });
            exact_raw.push(value.exact);
        }
        let window = samples.len().div_ceil(4).max(2).min(samples.len());
        let tail = &samples[samples.len() - window..];
        let tail_slope = if tail.len() >= 2 {
            (tail.last().unwrap().raw - tail[0].raw)
                / (tail.last().unwrap().n as f64 - tail[0].n as f64)
        } else {
            0.0
        };
        let raw_nondecreasing = samples.windows(2).all(|w| w[1].raw >= w[0].raw - 1e-12);
        let headline = if certified_zero {
            0.0
        } else {
            samples.last().map(|s| s.normalized).unwrap_or(0.0)
        };
        EntropySequence {
            normalization,
            samples,
            headline,
            diagnostics: SequenceDiagnostics {
                tail_slope,
                raw_nondecreasing,
                certified_zero,
            },
            exact_raw,
        }
    }

    pub fn raw_exact(&self, idx: usize) -> Option<&ExactEntropy> {
        self.exact_raw.get(idx).and_then(|e| e.as_ref())
    }

    pub fn sample_at(&self, n: usize) -> Option<&EntropySample> {
        self.samples.iter().find(|s| s.n == n)
    }

    /// True when both sequences carry identical exact forms (or bit-identical
    /// floats where no exact form exists) at every sample.
    pub fn bit_identical(&self, other: &EntropySequence) -> bool {
        self.samples.len() == other.samples.len()
            && self.samples.iter().zip(&other.samples).all(|(a, b)| {
                a.n == b.n
                    && a.raw.to_bits() == b.raw.to_bits()
                    && a.normalized.to_bits() == b.normalized.to_bits()
            })
            && self
                .exact_raw
                .iter()
                .zip(&other.exact_raw)
                .all(|(a, b)| a == b)
    }
}

fn norm_factor(
    normalization: Normalization,
    gamma: &RegularSystem,
    n: usize,
) -> Result<BigRational> {
    let v = match normalization {
        Normalization::Receptive => n,
        Normalization::Classical => gamma.set(n)?.len(),
    };
    Ok(BigRational::from_integer(BigInt::from(v)))
}

/// The sequence (1/n) H_mu(A^n_Gamma) (or 1/|N_n| for the classical branch)
/// for n = 1..=n_max.
pub fn receptive_metric_sequence(
    sys: &SymbolicSystem,
    measure: &MeasureOracle,
    partition: &CoordinatePartition,
    gamma: &RegularSystem,
    n_max: usize,
    normalization: Normalization,
    enumeration_budget: u64,
) -> Result<EntropySequence> {
    if n_max > gamma.n_max() {
        return Err(Error::IndexOverflow {
            requested: n_max,
            n_max: gamma.n_max(),
        });
    }
    if n_max < 1 {
        return Err(Error::InvalidConfig {
            field: "n_max".into(),
            message: "need n_max >= 1".into(),
        });
    }
    let mut raw = Vec::with_capacity(n_max);
    let mut norms = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let joined = partition.join_over(gamma, n, sys)?;
        raw.push((
            n,
            partition_entropy(measure, sys, &joined, enumeration_budget)?,
        ));
        norms.push(norm_factor(normalization, gamma, n)?);
    }
    let certified_zero = sys.is_trivial_action()
        && match normalization {
            Normalization::Receptive => true,
            Normalization::Classical => gamma.set(n_max)?.len() > gamma.set(1)?.len(),
        };
    Ok(EntropySequence::assemble(
        normalization,
        raw,
        norms,
        certified_zero,
    ))
}

/// Closed form for the diagonal action of Example-2.5 type: k * H(p).
pub fn diagonal_closed_form(k: usize, probs: &[BigRational]) -> f64 {
    k as f64 * shannon_entropy_nats(probs)
}

/// Per-n outcome of the scaling-law check (Prop. 2.6 finite form).
#[derive(Clone, Debug)]
pub struct ScalingLawReport {
    pub p: usize,
    /// (Gamma' raw at n) == (Gamma raw at p n), exact, for every n.
    pub per_n_identity: bool,
    pub mismatches: Vec<usize>,
    pub headline_ratio: f64,
    pub base: EntropySequence,
    pub scaled: EntropySequence,
}

/// Checks the Gamma' = (N_{pn}) samples against the Gamma samples: the raw
/// value of Gamma' at n equals the raw value of Gamma at pn as an exact
/// arithmetic identity, and the normalized headlines sit in ratio ~ p.
pub fn verify_scaling_law(
    sys: &SymbolicSystem,
    measure: &MeasureOracle,
    partition: &CoordinatePartition,
    gamma: &RegularSystem,
    p: usize,
    n_max: usize,
    enumeration_budget: u64,
) -> Result<ScalingLawReport> {
    if p * n_max > gamma.n_max() {
        return Err(Error::IndexOverflow {
            requested: p * n_max,
            n_max: gamma.n_max(),
        });
    }
    let scaled_gamma = gamma.scaled(p)?;
    let base = receptive_metric_sequence(
        sys,
        measure,
        partition,
        gamma,
        p * n_max,
        Normalization::Receptive,
        enumeration_budget,
    )?;
    let scaled = receptive_metric_sequence(
        sys,
        measure,
        partition,
        &scaled_gamma,
        n_max,
        Normalization::Receptive,
        enumeration_budget,
    )?;
    let mut mismatches = Vec::new();
    for n in 1..=n_max {
        let equal = match (scaled.raw_exact(n - 1), base.raw_exact(p * n - 1)) {
            (Some(a), Some(b)) => a == b,
            _ => scaled.samples[n - 1].raw.to_bits() == base.samples[p * n - 1].raw.to_bits(),
        };
        if !equal {
            mismatches.push(n);
        }
    }
    let headline_ratio = scaled.headline / base.headline;
    Ok(ScalingLawReport {
        p,
        per_n_identity: mismatches.is_empty(),
        mismatches,
        headline_ratio,
        base,
        scaled,
    })
}

/// Headline entropy of each generator's own Z_+ action versus the full
/// action: the finite form of sup_{g in N_1} h_mu(g) <= h_tilde_mu(T).
#[derive(Clone, Debug)]
pub struct GeneratorEntropyReport {
    pub per_generator: Vec<(LatticeElement, f64)>,
    pub action_headline: f64,
    /// action headline minus the best generator headline, at n_max.
    pub margin: f64,
    pub satisfied: bool,
}

pub fn generator_entropy_report(
    sys: &SymbolicSystem,
    measure: &MeasureOracle,
    partition: &CoordinatePartition,
    gamma: &RegularSystem,
    n_max: usize,
    enumeration_budget: u64,
) -> Result<GeneratorEntropyReport> {
    let action = receptive_metric_sequence(
        sys,
        measure,
        partition,
        gamma,
        n_max,
        Normalization::Receptive,
        enumeration_budget,
    )?;
    let n1 = gamma.set(1)?;
    let mut per_generator = Vec::new();
    let single_gamma = RegularSystem::standard(1, n_max);
    for g in n1.iter() {
        if g.iter().all(|&c| c == 0) {
            continue; // the identity acts trivially
        }
        let delta = sys.displacement_of(g)?;
        let single = SymbolicSystem::new(sys.factors().to_vec(), vec![delta])?;
        let seq = receptive_metric_sequence(
            &single,
            measure,
            partition,
            &single_gamma,
            n_max,
            Normalization::Receptive,
            enumeration_budget,
        )?;
        per_generator.push((LatticeElement(g.to_vec()), seq.headline));
    }
    let sup = per_generator
        .iter()
        .map(|(_, h)| *h)
        .fold(0.0f64, f64::max);
    Ok(GeneratorEntropyReport {
        per_generator,
        action_headline: action.headline,
        margin: action.headline - sup,
        satisfied: sup <= action.headline + 1e-9,
    })
}

/// Finite form of the product bounds (Prop. 3.2): the raw identity
/// H_mu(C^n) = H_mu1(A^n) + H_mu2(B^n) holds exactly, and the headline obeys
/// max(h1, h2) <= h <= h1 + h2.
#[derive(Clone, Debug)]
pub struct ProductBoundsReport {
    pub per_n_identity: bool,
    pub mismatches: Vec<usize>,
    pub product_headline: f64,
    pub factor_headlines: (f64, f64),
    pub lower_ok: bool,
    pub upper_ok: bool,
    pub product_sequence: EntropySequence,
}

/// The product regular system N_n = N_n^(1) x N_n^(2).
pub fn product_regular_system(g1: &RegularSystem, g2: &RegularSystem) -> Result<RegularSystem> {
    let n_max = g1.n_max().min(g2.n_max());
    let mut sets = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let a = g1.set(n)?;
        let b = g2.set(n)?;
        let mut rows: Vec<Vec<Coord>> = Vec::with_capacity(a.len() * b.len());
        for p in a.iter() {
            for q in b.iter() {
                let mut row = p.to_vec();
                row.extend_from_slice(q);
                rows.push(row);
            }
        }
        sets.push(PointSet::from_rows(g1.k() + g2.k(), rows));
    }
    RegularSystem::custom(g1.k() + g2.k(), sets)
}

#[allow(clippy::too_many_arguments)]
pub fn product_bounds_report(
    sys1: &SymbolicSystem,
    sys2: &SymbolicSystem,
    m1: &MeasureOracle,
    m2: &MeasureOracle,
    a1: &CoordinatePartition,
    a2: &CoordinatePartition,
    gamma1: &RegularSystem,
    gamma2: &RegularSystem,
    n_max: usize,
    enumeration_budget: u64,
) -> Result<ProductBoundsReport> {
    let (MeasureOracle::Bernoulli(b1), MeasureOracle::Bernoulli(b2)) = (m1, m2) else {
        return Err(Error::Unsupported(
            "product systems support Bernoulli factors only".into(),
        ));
    };
    let prod_sys = sys1.product(sys2);
    let prod_measure = MeasureOracle::Bernoulli(b1.product(b2));
    let prod_gamma = product_regular_system(gamma1, gamma2)?;
    // product partition A x B in the concatenated coordinates
    let d1 = sys1.lattice_dim();
    let d2 = sys2.lattice_dim();
    let mut rows: Vec<Vec<Coord>> = Vec::new();
    for p in a1.coords.iter() {
        for q in a2.coords.iter() {
            let mut row = p.to_vec();
            row.extend_from_slice(q);
            rows.push(row);
        }
    }
    let prod_partition = CoordinatePartition::partition(PointSet::from_rows(d1 + d2, rows));

    let seq = receptive_metric_sequence(
        &prod_sys,
        &prod_measure,
        &prod_partition,
        &prod_gamma,
        n_max,
        Normalization::Receptive,
        enumeration_budget,
    )?;
    let seq1 = receptive_metric_sequence(
        sys1,
        m1,
        a1,
        gamma1,
        n_max,
        Normalization::Receptive,
        enumeration_budget,
    )?;
    let seq2 = receptive_metric_sequence(
        sys2,
        m2,
        a2,
        gamma2,
        n_max,
        Normalization::Receptive,
        enumeration_budget,
    )?;
    let mut mismatches = Vec::new();
    for n in 1..=n_max {
        let ok = match (
            seq.raw_exact(n - 1),
            seq1.raw_exact(n - 1),
            seq2.raw_exact(n - 1),
        ) {
            (Some(c), Some(a), Some(b)) => *c == a.add(b),
            _ => false,
        };
        if !ok {
            mismatches.push(n);
        }
    }
    let (h1, h2) = (seq1.headline, seq2.headline);
    let h = seq.headline;
    Ok(ProductBoundsReport {
        per_n_identity: mismatches.is_empty(),
        mismatches,
        product_headline: h,
        factor_headlines: (h1, h2),
        lower_ok: h >= h1.max(h2) - 1e-9,
        upper_ok: h <= h1 + h2 + 1e-9,
        product_sequence: seq,
    })
}

/// Finite form of the subaction bounds (Prop. 3.1(b)) plus, for uniform
/// moduli on standard systems, the exact pGamma identity.
#[derive(Clone, Debug)]
pub struct SubactionReport {
    pub full: EntropySequence,
    pub restricted: EntropySequence,
    /// restricted headline <= full headline (at n_max).
    pub lower_ok: bool,
    /// full headline <= prod(moduli) * restricted headline.
    pub upper_ok: bool,
    pub moduli_product: u64,
    /// For uniform moduli p on a standard Gamma: the dilated system
    /// pGamma = (p N_n) equals (N_{pn} cap H) exactly, set by set. None when
    /// not applicable.
    pub ph_identity: Option<bool>,
}

pub fn subaction_report(
    sys: &SymbolicSystem,
    measure: &MeasureOracle,
    partition: &CoordinatePartition,
    gamma: &RegularSystem,
    moduli: &[Coord],
    n_max: usize,
    enumeration_budget: u64,
) -> Result<SubactionReport> {
    let restricted_gamma = gamma.restricted(moduli)?;
    let full = receptive_metric_sequence(
        sys,
        measure,
        partition,
        gamma,
        n_max,
        Normalization::Receptive,
        enumeration_budget,
    )?;
    let restricted = receptive_metric_sequence(
        sys,
        measure,
        partition,
        &restricted_gamma,
        n_max,
        Normalization::Receptive,
        enumeration_budget,
    )?;
    let moduli_product: u64 = moduli.iter().map(|&m| m as u64).product();

    let uniform_p = moduli.iter().all(|&m| m == moduli[0]).then_some(moduli[0]);
    let ph_identity = match (uniform_p, gamma.kind()) {
        (Some(p), crate::lattice::SystemKind::Standard) => {
            let dilated = gamma.dilated(p)?;
            match gamma.scaled(p as usize) {
                Ok(scaled) => {
                    let scaled_restricted = scaled.restricted(moduli)?;
                    let upto = n_max.min(scaled_restricted.n_max()).min(dilated.n_max());
                    let mut ok = true;
                    for n in 0..=upto {
                        if dilated.set(n)? != scaled_restricted.set(n)? {
                            ok = false;
                            break;
                        }
                    }
                    Some(ok)
                }
                Err(_) => None,
            }
        }
        _ => None,
    };

    Ok(SubactionReport {
        lower_ok: restricted.headline <= full.headline + 1e-9,
        upper_ok: full.headline <= moduli_product as f64 * restricted.headline + 1e-9,
        moduli_product,
        ph_identity,
        full,
        restricted,
    })
}

/// Shift invariance H_mu(g^{-1} A) = H_mu(A): exact for Bernoulli, bit-equal
/// enumeration for stationary Markov.
pub fn shift_invariance_holds(
    measure: &MeasureOracle,
    sys: &SymbolicSystem,
    partition: &CoordinatePartition,
    g: &[Coord],
    enumeration_budget: u64,
) -> Result<bool> {
    let pulled = partition.pullback(g, sys)?;
    let a = partition_entropy(measure, sys, partition, enumeration_budget)?;
    let b = partition_entropy(measure, sys, &pulled, enumeration_budget)?;
    Ok(match (&a.exact, &b.exact) {
        (Some(x), Some(y)) => x == y,
        _ => a.nats.to_bits() == b.nats.to_bits(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::parse_probability;
    use num::rational::BigRational;

    fn rat(s: &str) -> BigRational {
        parse_probability(s).unwrap()
    }

    fn half_half() -> MeasureOracle {
        MeasureOracle::bernoulli(vec![rat("1/2"), rat("1/2")]).unwrap()
    }

    #[test]
    fn partition_entropy_examples() {
        let sys = SymbolicSystem::bernoulli_shift(2);
        let a = CoordinatePartition::at_origin(&sys);
        let h = partition_entropy(&half_half(), &sys, &a, 1 << 20).unwrap();
        assert_eq!(h.nats, 2.0f64.ln());

        let skew = MeasureOracle::bernoulli(vec![rat("1/4"), rat("3/4")]).unwrap();
        let h = partition_entropy(&skew, &sys, &a, 1 << 20).unwrap();
        assert!((h.nats - 0.562335).abs() < 1e-6);

        let a3 = CoordinatePartition::partition(PointSet::cube(1, 2));
        let h = partition_entropy(&half_half(), &sys, &a3, 1 << 20).unwrap();
        assert_eq!(h.nats, 3.0 * 2.0f64.ln());
    }

    #[test]
    fn covers_are_rejected() {
        let sys = SymbolicSystem::bernoulli_shift(2);
        let c = CoordinatePartition::cover(PointSet::singleton(&[0]));
        assert!(partition_entropy(&half_half(), &sys, &c, 1 << 20).is_err());
    }

    #[test]
    fn diagonal_sequence_matches_example() {
        // diagonal k = 2, Bernoulli(1/2,1/2), S = {0}: raw H at n = (2n+1) log 2
        let sys = SymbolicSystem::diagonal(2, 2);
        let gamma = RegularSystem::standard(2, 30);
        let a = CoordinatePartition::at_origin(&sys);
        let seq = receptive_metric_sequence(
            &sys,
            &half_half(),
            &a,
            &gamma,
            30,
            Normalization::Receptive,
            1 << 20,
        )
        .unwrap();
        for s in &seq.samples {
            assert_eq!(s.raw, (2 * s.n + 1) as f64 * 2.0f64.ln());
        }
        assert!((seq.headline - diagonal_closed_form(2, &[rat("1/2"), rat("1/2")])).abs() < 0.05);
        assert!(seq.diagnostics.raw_nondecreasing);
    }

    #[test]
    fn trivial_action_certified_zero() {
        let sys = SymbolicSystem::trivial(2);
        let gamma = RegularSystem::standard(1, 20);
        let a = CoordinatePartition::at_origin(&sys);
        let seq = receptive_metric_sequence(
            &sys,
            &half_half(),
            &a,
            &gamma,
            20,
            Normalization::Receptive,
            1 << 20,
        )
        .unwrap();
        assert_eq!(seq.headline, 0.0);
        assert!(seq.diagnostics.certified_zero);
        // normalized samples are log2 / n on the way down
        assert_eq!(seq.samples[0].normalized, 2.0f64.ln());
    }

    #[test]
    fn field_classical_vs_receptive() {
        let sys = SymbolicSystem::shift_field(2, 2);
        let gamma = RegularSystem::standard(2, 12);
        let a = CoordinatePartition::at_origin(&sys);
        let classical = receptive_metric_sequence(
            &sys,
            &half_half(),
            &a,
            &gamma,
            12,
            Normalization::Classical,
            1 << 20,
        )
        .unwrap();
        for s in &classical.samples {
            assert_eq!(s.normalized, 2.0f64.ln(), "classical value is log 2 exactly");
        }
        let receptive = receptive_metric_sequence(
            &sys,
            &half_half(),
            &a,
            &gamma,
            12,
            Normalization::Receptive,
            1 << 20,
        )
        .unwrap();
        for s in &receptive.samples {
            assert_eq!(s.raw, ((s.n + 1) * (s.n + 1)) as f64 * 2.0f64.ln());
        }
    }

    #[test]
    fn scaling_law_exact() {
        let sys = SymbolicSystem::diagonal(2, 1);
        let gamma = RegularSystem::standard(1, 40);
        let a = CoordinatePartition::at_origin(&sys);
        let report = verify_scaling_law(&sys, &half_half(), &a, &gamma, 2, 20, 1 << 20).unwrap();
        assert!(report.per_n_identity);
        // p = 1 leaves the ratio exactly 1
        let id = verify_scaling_law(&sys, &half_half(), &a, &gamma, 1, 40, 1 << 20).unwrap();
        assert!(id.per_n_identity);
        assert_eq!(id.headline_ratio, 1.0);
    }

    #[test]
    fn generator_report_diagonal() {
        let sys = SymbolicSystem::diagonal(2, 2);
        let gamma = RegularSystem::standard(2, 40);
        let a = CoordinatePartition::at_origin(&sys);
        let r = generator_entropy_report(&sys, &half_half(), &a, &gamma, 40, 1 << 20).unwrap();
        assert!(r.satisfied);
        // unit generators converge to log 2; action headline to 2 log 2
        assert!((r.action_headline - 2.0 * 2.0f64.ln()).abs() < 0.05);
        for (_, h) in &r.per_generator {
            assert!(*h <= r.action_headline);
        }
        // trivial action: both sides zero
        let triv = SymbolicSystem::trivial(2);
        let gamma1 = RegularSystem::standard(1, 10);
        let a = CoordinatePartition::at_origin(&triv);
        let r = generator_entropy_report(&triv, &half_half(), &a, &gamma1, 10, 1 << 20).unwrap();
        assert_eq!(r.action_headline, 0.0);
        assert!(r.per_generator.iter().all(|(_, h)| *h == 0.0));
    }

    #[test]
    fn product_identity_exact() {
        let s1 = SymbolicSystem::bernoulli_shift(2);
        let s2 = SymbolicSystem::bernoulli_shift(2);
        let g1 = RegularSystem::standard(1, 20);
        let a1 = CoordinatePartition::at_origin(&s1);
        let r = product_bounds_report(
            &s1,
            &s2,
            &half_half(),
            &MeasureOracle::bernoulli(vec![rat("1/4"), rat("3/4")]).unwrap(),
            &a1,
            &a1,
            &g1,
            &g1,
            20,
            1 << 20,
        )
        .unwrap();
        assert!(r.per_n_identity);
        assert!(r.lower_ok && r.upper_ok);
        // H at n = (n+1)(log 2 + H(1/4,3/4))
        let h14 = shannon_entropy_nats(&[rat("1/4"), rat("3/4")]);
        let s = r.product_sequence.sample_at(10).unwrap();
        assert!((s.raw - 11.0 * (2.0f64.ln() + h14)).abs() < 1e-12);

        // factor x trivial factor (r = 1): sequence equals the live factor's
        let triv = SymbolicSystem::full_shift(1, 1, vec![vec![1]]).unwrap();
        let mu1 = MeasureOracle::bernoulli(vec![rat("1")]).unwrap();
        let r = product_bounds_report(
            &s1,
            &triv,
            &half_half(),
            &mu1,
            &a1,
            &CoordinatePartition::at_origin(&triv),
            &g1,
            &g1,
            20,
            1 << 20,
        )
        .unwrap();
        assert!(r.per_n_identity);
        let base = receptive_metric_sequence(
            &s1,
            &half_half(),
            &a1,
            &g1,
            20,
            Normalization::Receptive,
            1 << 20,
        )
        .unwrap();
        for (a, b) in r.product_sequence.samples.iter().zip(&base.samples) {
            assert_eq!(a.raw, b.raw);
        }
    }

    #[test]
    fn subaction_bounds_and_ph() {
        let sys = SymbolicSystem::diagonal(2, 1);
        let gamma = RegularSystem::standard(1, 60);
        let a = CoordinatePartition::at_origin(&sys);
        let r = subaction_report(&sys, &half_half(), &a, &gamma, &[2], 20, 1 << 20).unwrap();
        assert!(r.lower_ok && r.upper_ok);
        assert_eq!(r.ph_identity, Some(true));

        // moduli of 1: identical sequences
        let r1 = subaction_report(&sys, &half_half(), &a, &gamma, &[1], 20, 1 << 20).unwrap();
        assert!(r1.full.bit_identical(&r1.restricted));
    }

    #[test]
    fn conjugacy_invariance_bitwise() {
        let sys = SymbolicSystem::bernoulli_shift(2);
        let gamma = RegularSystem::standard(1, 25);
        let a = CoordinatePartition::at_origin(&sys);
        let mu = MeasureOracle::bernoulli(vec![rat("1/4"), rat("3/4")]).unwrap();
        let MeasureOracle::Bernoulli(b) = &mu else {
            unreachable!()
        };
        let permuted = MeasureOracle::Bernoulli(b.permuted(0, &[1, 0]));
        let s1 =
            receptive_metric_sequence(&sys, &mu, &a, &gamma, 25, Normalization::Receptive, 1 << 20)
                .unwrap();
        let s2 = receptive_metric_sequence(
            &sys,
            &permuted,
            &a,
            &gamma,
            25,
            Normalization::Receptive,
            1 << 20,
        )
        .unwrap();
        assert!(s1.bit_identical(&s2));
    }

    #[test]
    fn shift_invariance() {
        let sys = SymbolicSystem::bernoulli_shift(2);
        let a = CoordinatePartition::partition(PointSet::from_rows(1, [[0u32], [2]]));
        let mu = MeasureOracle::bernoulli(vec![rat("1/4"), rat("3/4")]).unwrap();
        assert!(shift_invariance_holds(&mu, &sys, &a, &[3], 1 << 20).unwrap());
        let markov = MeasureOracle::Markov(
            crate::measure::MarkovMeasure::new(
                vec![vec![0.9, 0.1], vec![0.3, 0.7]],
                vec![0.75, 0.25],
            )
            .unwrap(),
        );
        assert!(shift_invariance_holds(&markov, &sys, &a, &[5], 1 << 20).unwrap());
    }
}
