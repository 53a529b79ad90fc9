//! (n, eps)-separated and (n, eps)-spanning counts, minimal subcovers, and
//! the open-cover receptive entropy, by closed form and by brute force.
//!
//! With the dyadic metric, y lies in the dynamic ball D_n(x, eps) iff y
//! agrees with x on the window W(n, eps) = union over g in N_n of
//! (delta(g) + Ball_t), t = t(eps) the largest t with 2^-t > eps. Dynamic
//! balls are cylinders, so on full shifts the separated maximum, the spanning
//! minimum, and the minimal subcover of the joined cylinder cover all equal
//! the number of patterns on the relevant window, and the three counting
//! routes can be cross-checked exactly against combinatorial brute force on
//! finite truncations.
//!
//! Epsilon values must avoid the dyadics 2^-t: the metric takes exactly those
//! values, so a dyadic eps would put the strict comparison d > eps on a
//! boundary. The default grid 3 * 2^-(t+2) sits between adjacent dyadics and
//! halving stays on the grid.

use crate::error::{Error, Result};
use crate::lattice::{Coord, PointSet, RegularSystem};
use crate::measure::log_cell_count_exact;
use crate::metric::{EntropySequence, EntropyValue, Normalization};
use crate::search::{greedy_clique, max_clique, min_set_cover, BitSet, Graph};
use crate::symbolic::{CoordinatePartition, FiniteApproximation, SymbolicSystem};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::BigUint;
use serde::Serialize;

/// t(eps) = max{t >= 0 : 2^-t > eps}; rejects dyadic eps and eps outside (0, 1).
pub fn epsilon_radius(epsilon: f64) -> Result<u32> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::EpsilonRange { epsilon });
    }
    // dyadic check: exact powers of two have a zero significand field
    let bits = epsilon.to_bits();
    if bits & ((1u64 << 52) - 1) == 0 {
        return Err(Error::DyadicEpsilon { epsilon });
    }
    let mut t = 0u32;
    while 0.5f64.powi(t as i32 + 1) > epsilon {
        t += 1;
    }
    Ok(t)
}

/// The canonical non-dyadic grid value 3 * 2^-(t+2), which has radius t.
pub fn grid_epsilon(t: u32) -> f64 {
    3.0 * 0.5f64.powi(t as i32 + 2)
}

/// W(n, eps): the coordinate window a dynamic ball fixes.
pub fn ball_window(
    sys: &SymbolicSystem,
    gamma: &RegularSystem,
    n: usize,
    epsilon: f64,
) -> Result<PointSet> {
    let t = epsilon_radius(epsilon)?;
    let deltas = sys.displacement_set(gamma.set(n)?)?;
    let ball = PointSet::cube(sys.lattice_dim(), t);
    deltas.sumset(&ball)
}

/// A dynamic ball D_n(x, eps) described by its window: the ball around any x
/// is exactly the cylinder fixing x on `window`.
#[derive(Clone, Debug)]
pub struct DynamicBallSpec {
    pub n: usize,
    pub epsilon: f64,
    pub window: PointSet,
}

impl DynamicBallSpec {
    pub fn new(
        sys: &SymbolicSystem,
        gamma: &RegularSystem,
        n: usize,
        epsilon: f64,
    ) -> Result<Self> {
        Ok(DynamicBallSpec {
            n,
            epsilon,
            window: ball_window(sys, gamma, n, epsilon)?,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CountMethod {
    ClosedForm,
    ExactBruteforce,
    GreedyBound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundDirection {
    Lower,
    Upper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CountQuantity {
    SeparatedMax,
    SpanningMin,
    SubcoverMin,
}

/// One counted quantity; closed_form and exact_bruteforce entries are exact,
/// greedy entries carry their bound direction.
#[derive(Clone, Debug)]
pub struct CountRecord {
    pub quantity: CountQuantity,
    pub n: usize,
    pub epsilon: Option<f64>,
    pub count: BigUint,
    pub method: CountMethod,
    pub bound_direction: Option<BoundDirection>,
}

impl CountRecord {
    pub fn is_exact(&self) -> bool {
        self.method != CountMethod::GreedyBound
    }
}

/// s_n(eps) on the full shift: two points are (n, eps)-separated iff they
/// differ somewhere on W(n, eps), so the maximum is the pattern count there.
pub fn separated_max_closed_form(
    sys: &SymbolicSystem,
    gamma: &RegularSystem,
    n: usize,
    epsilon: f64,
) -> Result<CountRecord> {
    let w = ball_window(sys, gamma, n, epsilon)?;
    Ok(CountRecord {
        quantity: CountQuantity::SeparatedMax,
        n,
        epsilon: Some(epsilon),
        count: sys.cell_count(&w),
        method: CountMethod::ClosedForm,
        bound_direction: None,
    })
}

/// r_n(eps) on the full shift: dynamic balls are the cylinders on W(n, eps),
/// which partition the space, so the minimal spanning set picks one center
/// per cylinder.
pub fn spanning_min_closed_form(
    sys: &SymbolicSystem,
    gamma: &RegularSystem,
    n: usize,
    epsilon: f64,
) -> Result<CountRecord> {
    let w = ball_window(sys, gamma, n, epsilon)?;
    Ok(CountRecord {
        quantity: CountQuantity::SpanningMin,
        n,
        epsilon: Some(epsilon),
        count: sys.cell_count(&w),
        method: CountMethod::ClosedForm,
        bound_direction: None,
    })
}

/// Byte positions of the truncation compared by the separation predicate:
/// every (delta(g), j) pair with |j|_inf <= t, mapped through each factor.
/// Errors out when the orbit leaves the truncation window.
fn orbit_positions(
    fa: &FiniteApproximation,
    gamma: &RegularSystem,
    n: usize,
    t: u32,
) -> Result<Vec<usize>> {
    let sys = fa.system();
    let deltas = sys.displacement_set(gamma.set(n)?)?;
    let ball = PointSet::cube(sys.lattice_dim(), t);
    let mut required: Coord = 0;
    let mut positions = Vec::new();
    let axes = sys.factor_axes();
    for delta in deltas.iter() {
        for j in ball.iter() {
            for (f, range) in axes.iter().enumerate() {
                let mut local = Vec::with_capacity(range.len());
                for a in range.clone() {
                    local.push(delta[a] + j[a]);
                }
                let end = local.iter().copied().max().unwrap_or(0);
                required = required.max(end);
                if end > fa.window_end() {
                    continue; // collected into the error below
                }
                // byte position inside the concatenated pattern
                let idx = fa
                    .factor_position(f, &local)
                    .expect("within window by the check above");
                positions.push(idx);
            }
        }
    }
    if required > fa.window_end() {
        return Err(Error::DomainViolation {
            required,
            have: fa.window_end(),
        });
    }
    Ok(positions)
}

/// Exact maximum (n, eps)-separated subset of the truncation by max clique on
/// the separation graph (edge iff some g in N_n gives d(gx, gy) > eps). Above
/// `clique_budget` vertices a greedy clique lower bound is returned, flagged.
pub fn separated_max_bruteforce(
    fa: &FiniteApproximation,
    gamma: &RegularSystem,
    n: usize,
    epsilon: f64,
    clique_budget: usize,
) -> Result<CountRecord> {
    let t = epsilon_radius(epsilon)?;
    let positions = orbit_positions(fa, gamma, n, t)?;
    let m = fa.len();
    let mut graph = Graph::new(m);
    for i in 0..m {
        let x = fa.point(i);
        for j in (i + 1)..m {
            let y = fa.point(j);
            if positions.iter().any(|&p| x[p] != y[p]) {
                graph.add_edge(i, j);
            }
        }
    }
    let outcome = max_clique(&graph, clique_budget);
    Ok(CountRecord {
        quantity: CountQuantity::SeparatedMax,
        n,
        epsilon: Some(epsilon),
        count: BigUint::from(if outcome.exact {
            outcome.size
        } else {
            greedy_clique(&graph)
        }),
        method: if outcome.exact {
            CountMethod::ExactBruteforce
        } else {
            CountMethod::GreedyBound
        },
        bound_direction: (!outcome.exact).then_some(BoundDirection::Lower),
    })
}

/// Exact minimum (n, eps)-spanning set of the truncation: set cover by
/// dynamic balls centered at truncation points. Greedy upper bound beyond the
/// node budget, flagged.
pub fn spanning_min(
    fa: &FiniteApproximation,
    gamma: &RegularSystem,
    n: usize,
    epsilon: f64,
    node_budget: u64,
) -> Result<CountRecord> {
    let t = epsilon_radius(epsilon)?;
    let positions = orbit_positions(fa, gamma, n, t)?;
    let m = fa.len();
    let mut balls: Vec<BitSet> = Vec::with_capacity(m);
    for i in 0..m {
        let x = fa.point(i);
        let mut ball = BitSet::new(m);
        for j in 0..m {
            let y = fa.point(j);
            if positions.iter().all(|&p| x[p] == y[p]) {
                ball.insert(j);
            }
        }
        balls.push(ball);
    }
    let outcome = min_set_cover(m, &balls, node_budget).ok_or_else(|| {
        Error::Unsupported("dynamic balls fail to cover the truncation".into())
    })?;
    Ok(CountRecord {
        quantity: CountQuantity::SpanningMin,
        n,
        epsilon: Some(epsilon),
        count: BigUint::from(outcome.size),
        method: if outcome.exact {
            CountMethod::ExactBruteforce
        } else {
            CountMethod::GreedyBound
        },
        bound_direction: (!outcome.exact).then_some(BoundDirection::Upper),
    })
}

/// N(A) for a cylinder cover: every cell is non-empty on the full shift and
/// the cells are pairwise disjoint, so the minimal subcover keeps all of
/// them: prod_f r_f^{|proj_f S|}.
pub fn minimal_subcover_count(sys: &SymbolicSystem, cover: &CoordinatePartition) -> BigUint {
    sys.cell_count(&cover.coords)
}

/// The cells of a cylinder cover as point sets of the truncation, for the
/// brute-force subcover oracle (points grouped by their pattern on `coords`).
pub fn cylinder_cells_on_truncation(
    fa: &FiniteApproximation,
    coords: &PointSet,
) -> Result<Vec<BitSet>> {
    let sys = fa.system();
    let axes = sys.factor_axes();
    let mut positions = Vec::new();
    for (f, range) in axes.iter().enumerate() {
        let proj = coords.project(range.clone());
        for local in proj.iter() {
            let idx = fa
                .factor_position(f, local)
                .ok_or(Error::DomainViolation {
                    required: local.iter().copied().max().unwrap_or(0),
                    have: fa.window_end(),
                })?;
            positions.push(idx);
        }
    }
    let mut groups: std::collections::BTreeMap<Vec<u8>, BitSet> = Default::default();
    for i in 0..fa.len() {
        let key: Vec<u8> = positions.iter().map(|&p| fa.point(i)[p]).collect();
        groups
            .entry(key)
            .or_insert_with(|| BitSet::new(fa.len()))
            .insert(i);
    }
    Ok(groups.into_values().collect())
}

/// Exact minimal subcover over explicit cover elements (point sets of the
/// truncation); duplicates are harmless. Greedy upper bound past the budget.
pub fn minimal_subcover_bruteforce(
    fa: &FiniteApproximation,
    cover_sets: &[BitSet],
    node_budget: u64,
) -> Result<CountRecord> {
    let outcome = min_set_cover(fa.len(), cover_sets, node_budget)
        .ok_or_else(|| Error::Unsupported("cover does not cover the truncation".into()))?;
    Ok(CountRecord {
        quantity: CountQuantity::SubcoverMin,
        n: 0,
        epsilon: None,
        count: BigUint::from(outcome.size),
        method: if outcome.exact {
            CountMethod::ExactBruteforce
        } else {
            CountMethod::GreedyBound
        },
        bound_direction: (!outcome.exact).then_some(BoundDirection::Upper),
    })
}

/// The open-cover receptive entropy sequence (1/n) log N(A^n_Gamma); on full
/// shifts log N is the exact form sum_f |proj_f coords| log r_f, which equals
/// the uniform-measure metric sequence sample by sample.
pub fn open_cover_entropy_sequence(
    sys: &SymbolicSystem,
    cover: &CoordinatePartition,
    gamma: &RegularSystem,
    n_max: usize,
) -> Result<EntropySequence> {
    if n_max > gamma.n_max() {
        return Err(Error::IndexOverflow {
            requested: n_max,
            n_max: gamma.n_max(),
        });
    }
    let mut raw = Vec::with_capacity(n_max);
    let mut norms = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let joined = cover.join_over(gamma, n, sys)?;
        let exact = log_cell_count_exact(sys, &joined.coords);
        raw.push((
            n,
            EntropyValue {
                nats: exact.eval(),
                exact: Some(exact),
            },
        ));
        norms.push(BigRational::from_integer(BigInt::from(n)));
    }
    Ok(EntropySequence::assemble(
        Normalization::Receptive,
        raw,
        norms,
        sys.is_trivial_action(),
    ))
}

/// Count-based estimate of the receptive topological entropy at scale eps:
/// the open-cover sequence of the cover by cylinders on Ball_t(eps), whose
/// joins have exactly the windows W(n, eps).
pub fn h_tilde_sequence(
    sys: &SymbolicSystem,
    gamma: &RegularSystem,
    n_max: usize,
    epsilon: f64,
) -> Result<EntropySequence> {
    let t = epsilon_radius(epsilon)?;
    let gamma_cover = CoordinatePartition::cover(PointSet::cube(sys.lattice_dim(), t));
    open_cover_entropy_sequence(sys, &gamma_cover, gamma, n_max)
}

/// Largest grid epsilon that is a Lebesgue number for the cylinder cover on
/// S: any set of diameter <= 3*2^-(m+2) < 2^-m agrees on Ball_m, which
/// contains S (m = max coordinate norm of S).
pub fn lebesgue_number_analytic(cover: &CoordinatePartition) -> f64 {
    let m = cover.coords.max_linf_norm().unwrap_or(0);
    grid_epsilon(m)
}

/// Exact Lebesgue number on a truncation: delta = min over points of the
/// largest distance-to-complement over cover elements containing the point,
/// reported as the grid epsilon just below that dyadic value. Distances are
/// 2^-e, so smaller exponents mean larger distances; exponent -1 encodes an
/// element with empty complement (any radius fits).
pub fn lebesgue_number_on_truncation(
    fa: &FiniteApproximation,
    cover_sets: &[BitSet],
) -> Option<f64> {
    let m = fa.len();
    let mut worst_exp: i64 = -1; // max over points of the best exponent
    for x in 0..m {
        let mut best_exp: Option<i64> = None; // min exponent over elements
        for set in cover_sets {
            if !set.contains(x) {
                continue;
            }
            let mut exp: i64 = -1;
            for y in 0..m {
                if !set.contains(y) {
                    if let Some(norm) = fa.min_diff_norm(fa.point(x), fa.point(y)) {
                        let e = norm as i64;
                        exp = if exp < 0 { e } else { exp.min(e) };
                    }
                }
            }
            // exp stayed -1: complement empty or indistinguishable
            best_exp = Some(match best_exp {
                Some(cur) => cur.min(exp),
                None => exp,
            });
        }
        let b = best_exp?; // a point in no element: not a cover
        worst_exp = worst_exp.max(b);
    }
    Some(grid_epsilon(worst_exp.max(0) as u32))
}

/// One inequality instance from the count suite.
#[derive(Clone, Debug)]
pub struct InequalityCheck {
    pub name: String,
    pub context: String,
    pub lhs: BigUint,
    pub rhs: BigUint,
    pub ok: bool,
}

#[derive(Clone, Debug, Default)]
pub struct CountInequalityReport {
    pub checks: Vec<InequalityCheck>,
    pub violations: usize,
}

impl CountInequalityReport {
    fn push(&mut self, name: &str, context: String, lhs: BigUint, rhs: BigUint) {
        let ok = lhs <= rhs;
        if !ok {
            self.violations += 1;
        }
        self.checks.push(InequalityCheck {
            name: name.to_string(),
            context,
            lhs,
            rhs,
            ok,
        });
    }
}

/// Evaluates the three count-inequality families on exact records:
/// (a) r_n(eps) <= s_n(eps) <= r_n(eps/2),
/// (b) N(A^n) <= r_n(delta_A / 2) for delta_A a Lebesgue number of A,
/// (c) s_n(eps) <= N(gamma_eps^n) for the diameter-eps cover gamma_eps,
/// plus closed-form vs brute-force equality wherever a truncation is usable.
#[allow(clippy::too_many_arguments)]
pub fn count_inequality_suite(
    sys: &SymbolicSystem,
    gamma: &RegularSystem,
    covers: &[CoordinatePartition],
    eps_grid: &[f64],
    n_range: std::ops::RangeInclusive<usize>,
    fa: Option<&FiniteApproximation>,
    clique_budget: usize,
    node_budget: u64,
) -> Result<CountInequalityReport> {
    let mut report = CountInequalityReport::default();
    for &eps in eps_grid {
        for n in n_range.clone() {
            let s = separated_max_closed_form(sys, gamma, n, eps)?;
            let r = spanning_min_closed_form(sys, gamma, n, eps)?;
            let r_half = spanning_min_closed_form(sys, gamma, n, eps / 2.0)?;
            let ctx = format!("eps={eps} n={n}");
            report.push("r_n <= s_n", ctx.clone(), r.count.clone(), s.count.clone());
            report.push(
                "s_n <= r_n(eps/2)",
                ctx.clone(),
                s.count.clone(),
                r_half.count.clone(),
            );

            // (c): gamma_eps = cylinders on Ball_t(eps) has diameter <= eps
            let t = epsilon_radius(eps)?;
            let gamma_cover = CoordinatePartition::cover(PointSet::cube(sys.lattice_dim(), t));
            let n_gamma = minimal_subcover_count(sys, &gamma_cover.join_over(gamma, n, sys)?);
            report.push("s_n <= N(gamma^n)", ctx.clone(), s.count.clone(), n_gamma);

            // closed form vs brute force (both directions makes it equality)
            if let Some(fa) = fa {
                if let Ok(bs) = separated_max_bruteforce(fa, gamma, n, eps, clique_budget) {
                    if bs.is_exact() {
                        report.push(
                            "s_n bruteforce = closed form (<=)",
                            ctx.clone(),
                            bs.count.clone(),
                            s.count.clone(),
                        );
                        report.push(
                            "s_n closed form = bruteforce (<=)",
                            ctx.clone(),
                            s.count.clone(),
                            bs.count.clone(),
                        );
                    }
                }
                if let Ok(br) = spanning_min(fa, gamma, n, eps, node_budget) {
                    if br.is_exact() {
                        report.push(
                            "r_n bruteforce = closed form (<=)",
                            ctx.clone(),
                            br.count.clone(),
                            r.count.clone(),
                        );
                        report.push(
                            "r_n closed form = bruteforce (<=)",
                            ctx,
                            r.count.clone(),
                            br.count.clone(),
                        );
                    }
                }
            }
        }
    }
    // (b) per cover
    for (ci, cover) in covers.iter().enumerate() {
        let delta = lebesgue_number_analytic(cover);
        for n in n_range.clone() {
            let joined = cover.join_over(gamma, n, sys)?;
            let n_a = minimal_subcover_count(sys, &joined);
            let r = spanning_min_closed_form(sys, gamma, n, delta / 2.0)?;
            report.push(
                "N(A^n) <= r_n(delta/2)",
                format!("cover={ci} delta={delta} n={n}"),
                n_a,
                r.count.clone(),
            );
        }
    }
    Ok(report)
}
