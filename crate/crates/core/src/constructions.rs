//! Explicit generating sets and rank-controlling labelings for complete graphs.
//!
//! Every construction re-checks its own output: members must be splines, the
//! set must span, and the claimed rank must match the Smith invariants.

use std::fmt;

use crate::arith::{factorize, is_prime, ModulusContext};
use crate::error::{Error, Result};
use crate::graph::{complete_edge_count, complete_from_labels, CompleteGraphLabels, EdgeLabeledGraph};
use crate::lattice::{build_spline_lattice, flow_up_basis, module_invariants, spans, ModuleInvariants};
use crate::splines::{smallest_leading_entry, to_spline, Spline, WalkMode};
use crate::verify::{check_flow_up_generators, check_minimum_criterion};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Certificate {
    /// Trivial spline plus constant flow-up classes with chained constants.
    CriterionMinimum,
    /// Spans, and its size equals the module rank.
    RankMatchedMinimum,
    /// Spans; minimality not established.
    GeneratingOnly,
}

impl Certificate {
    pub fn as_str(self) -> &'static str {
        match self {
            Certificate::CriterionMinimum => "criterion-minimum",
            Certificate::RankMatchedMinimum => "rank-matched-minimum",
            Certificate::GeneratingOnly => "generating-only",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "criterion-minimum" => Some(Certificate::CriterionMinimum),
            "rank-matched-minimum" => Some(Certificate::RankMatchedMinimum),
            "generating-only" => Some(Certificate::GeneratingOnly),
            _ => None,
        }
    }

    pub fn is_minimum(self) -> bool {
        self != Certificate::GeneratingOnly
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplineFlags {
    pub flow_up_index: Option<usize>,
    pub constant: Option<u128>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratingSet {
    pub splines: Vec<Spline>,
    pub flags: Vec<SplineFlags>,
    pub certificate: Certificate,
    pub invariants: ModuleInvariants,
}

impl GeneratingSet {
    /// Checks `splines` against `g` and attaches `claimed` if it holds.
    pub fn certify(g: &EdgeLabeledGraph, splines: Vec<Spline>, claimed: Certificate) -> Result<Self> {
        for s in &splines {
            to_spline(g, s.values())?;
        }
        let lat = build_spline_lattice(g)?;
        if !spans(&lat, &splines)? {
            return Err(Error::Consistency("constructed set does not span the spline module".into()));
        }
        let invariants = module_invariants(&lat)?;
        match claimed {
            Certificate::CriterionMinimum => {
                let crit = check_minimum_criterion(&splines, g.ctx());
                if !crit.holds {
                    return Err(Error::Consistency(format!(
                        "minimality criterion fails: {}",
                        crit.reason.unwrap_or_default()
                    )));
                }
                let fu = check_flow_up_generators(g, &splines)?;
                if !fu.holds {
                    return Err(Error::Consistency(fu.reason.unwrap_or_default()));
                }
                if splines.len() != invariants.rank {
                    return Err(Error::Consistency(format!(
                        "criterion-certified set has {} members but the rank is {}",
                        splines.len(),
                        invariants.rank
                    )));
                }
            }
            Certificate::RankMatchedMinimum => {
                if splines.len() != invariants.rank {
                    return Err(Error::Consistency(format!(
                        "set has {} members but the rank is {}",
                        splines.len(),
                        invariants.rank
                    )));
                }
            }
            Certificate::GeneratingOnly => {}
        }
        let flags = splines
            .iter()
            .map(|s| SplineFlags { flow_up_index: s.flow_up_index(), constant: s.constant_value() })
            .collect();
        Ok(GeneratingSet { splines, flags, certificate: claimed, invariants })
    }

    pub fn rank(&self) -> usize {
        self.invariants.rank
    }

    pub fn len(&self) -> usize {
        self.splines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.splines.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainDirection {
    /// `a_{r_n} | ... | a_2 | a_1`
    Decreasing,
    /// `a_1 | a_2 | ... | a_{r_n}`
    Increasing,
}

/// Edge labels forming a divisibility chain in canonical edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainLabels {
    labels: Vec<u128>,
    direction: ChainDirection,
}

impl ChainLabels {
    pub fn new(labels: Vec<u128>, direction: ChainDirection, ctx: &ModulusContext) -> Result<Self> {
        let m = ctx.modulus();
        if labels.is_empty() {
            return Err(Error::InvalidChain("no labels".into()));
        }
        for &a in &labels {
            if a <= 1 || a >= m || !m.is_multiple_of(a) {
                return Err(Error::InvalidChain(format!(
                    "{a} is not a divisor of {m} strictly between 1 and {m}"
                )));
            }
        }
        for (k, w) in labels.windows(2).enumerate() {
            let ok = match direction {
                ChainDirection::Decreasing => w[0] % w[1] == 0,
                ChainDirection::Increasing => w[1] % w[0] == 0,
            };
            if !ok {
                return Err(Error::InvalidChain(format!(
                    "a_{} = {} and a_{} = {} break the {:?} chain",
                    k + 1,
                    w[0],
                    k + 2,
                    w[1],
                    direction
                )));
            }
        }
        Ok(ChainLabels { labels, direction })
    }

    pub fn labels(&self) -> &[u128] {
        &self.labels
    }

    pub fn direction(&self) -> ChainDirection {
        self.direction
    }

    /// 1-based `a_k`.
    fn a(&self, k: usize) -> u128 {
        self.labels[k - 1]
    }
}

fn chain_graph(n: usize, chain: &ChainLabels, want: ChainDirection, ctx: &ModulusContext) -> Result<EdgeLabeledGraph> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("complete graph needs n >= 3, got {n}")));
    }
    if chain.direction != want {
        return Err(Error::InvalidChain(format!("expected a {want:?} chain")));
    }
    if chain.labels.len() != complete_edge_count(n) {
        return Err(Error::InvalidChain(format!(
            "K_{n} needs {} labels, got {}",
            complete_edge_count(n),
            chain.labels.len()
        )));
    }
    complete_from_labels(&CompleteGraphLabels::new(n, chain.labels.clone()), ctx)
}

/// Decreasing chain: `F^(i)` is `a_{r_{i-1}+1}` (the label of `v_1 v_i`) at
/// `v_i` and zero elsewhere.
pub fn son_decreasing(n: usize, chain: &ChainLabels, ctx: &ModulusContext) -> Result<(EdgeLabeledGraph, GeneratingSet)> {
    let g = chain_graph(n, chain, ChainDirection::Decreasing, ctx)?;
    let mut set = vec![Spline::ones(n)];
    for i in 2..=n {
        let mut v = vec![0; n];
        v[i - 1] = chain.a(complete_edge_count(i - 1) + 1);
        set.push(Spline(v));
    }
    let gs = GeneratingSet::certify(&g, set, Certificate::CriterionMinimum)?;
    Ok((g, gs))
}

/// Increasing chain: `F^(i)` is the constant `a_{r_n - (n - i)}` on
/// `v_i..v_n` and zero before.
pub fn son_increasing(n: usize, chain: &ChainLabels, ctx: &ModulusContext) -> Result<(EdgeLabeledGraph, GeneratingSet)> {
    let g = chain_graph(n, chain, ChainDirection::Increasing, ctx)?;
    let rn = complete_edge_count(n);
    let mut set = vec![Spline::ones(n)];
    for i in 2..=n {
        let c = chain.a(rn - (n - i));
        let v = (1..=n).map(|x| if x >= i { c } else { 0 }).collect();
        set.push(Spline(v));
    }
    let gs = GeneratingSet::certify(&g, set, Certificate::CriterionMinimum)?;
    Ok((g, gs))
}

/// Exponent `e` with `x = p^e`, if any.
fn exponent_of(p: u128, mut x: u128) -> Option<u32> {
    let mut e = 0;
    while x.is_multiple_of(p) {
        x /= p;
        e += 1;
    }
    (x == 1).then_some(e)
}

/// Complete graph over `Z/p^t Z` with arbitrary labels `p^{e}`, `1 <= e < t`.
///
/// For each `i >= 2`, with `p^{a_i}` the least leading entry at `v_i`,
/// `F^(i)` is `p^{a_i}` on the component of `v_i` in the subgraph of edges
/// with exponent above `a_i`, and zero elsewhere. `a_i` comes from the
/// lattice diagonal; `cross_check` also recomputes it from trails.
pub fn prime_power_unordered(g: &EdgeLabeledGraph, cross_check: bool) -> Result<GeneratingSet> {
    let ctx = g.ctx();
    let (p, t) = ctx
        .prime_power()
        .ok_or_else(|| Error::Hypothesis(format!("modulus {} is not a prime power", ctx.modulus())))?;
    if !g.is_complete() {
        return Err(Error::Hypothesis("graph is not complete".into()));
    }
    for e in g.edges() {
        match exponent_of(p, e.label) {
            Some(k) if k >= 1 && k < t => {}
            _ => {
                return Err(Error::InvalidLabel {
                    u: e.u,
                    v: e.v,
                    label: e.label,
                    reason: format!("expected {p}^k with 1 <= k < {t}"),
                })
            }
        }
    }
    let n = g.vertex_count();
    let report = flow_up_basis(&build_spline_lattice(g)?)?;
    let mut set = vec![Spline::ones(n)];
    for i in 2..=n {
        let lead = report.diagonal[i - 1];
        if cross_check {
            let walk = smallest_leading_entry(g, i, WalkMode::Trails)?;
            if walk.value != lead % ctx.modulus() {
                return Err(Error::Consistency(format!(
                    "index {i}: lattice gives {lead}, trails give {}",
                    walk.value
                )));
            }
        }
        let a = exponent_of(p, lead)
            .ok_or_else(|| Error::Consistency(format!("leading entry {lead} is not a power of {p}")))?;
        let component = g.component_of(i, |e| exponent_of(p, e.label).is_some_and(|k| k > a));
        if let Some(&j) = component.iter().find(|&&j| j < i) {
            return Err(Error::Consistency(format!(
                "component for index {i} reaches the earlier vertex v{j}"
            )));
        }
        let v = (1..=n).map(|x| if component.contains(&x) { lead } else { 0 }).collect();
        set.push(Spline(v));
    }
    GeneratingSet::certify(g, set, Certificate::CriterionMinimum)
}

fn prime_base(x: u128) -> Option<u128> {
    let ctx = factorize(x).ok()?;
    ctx.prime_power().map(|(p, _)| p)
}

/// `K_n` over `Z/(p^a q^b)Z` with the path `v_1 v_2 ... v_n` labeled `p^a` and
/// every other edge `q^b`. Both label classes contain a spanning tree, so
/// only constant splines survive.
pub fn rank_one_pq(n: usize, p_power: u128, q_power: u128) -> Result<EdgeLabeledGraph> {
    if n < 4 {
        return Err(Error::InvalidArgument(format!(
            "rank one needs n >= 4 (K_{n} has too few edges for two disjoint spanning trees)"
        )));
    }
    let (Some(p), Some(q)) = (prime_base(p_power), prime_base(q_power)) else {
        return Err(Error::InvalidArgument(format!("{p_power} and {q_power} must be prime powers")));
    };
    if p == q {
        return Err(Error::InvalidArgument(format!("{p_power} and {q_power} share the prime {p}")));
    }
    let m = p_power
        .checked_mul(q_power)
        .ok_or_else(|| Error::InvalidArgument("modulus overflows".into()))?;
    let ctx = factorize(m)?;
    let labels = (1..=complete_edge_count(n))
        .map(|k| {
            let (i, j) = crate::graph::complete_edge_endpoints(k);
            if j == i + 1 {
                p_power
            } else {
                q_power
            }
        })
        .collect();
    let g = complete_from_labels(&CompleteGraphLabels::new(n, labels), &ctx)?;
    let rank = module_invariants(&build_spline_lattice(&g)?)?.rank;
    if rank != 1 {
        return Err(Error::Consistency(format!("expected rank 1, found {rank}")));
    }
    Ok(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StarMode {
    /// Every new edge labeled `p`: the rank goes up by one.
    AllP,
    /// Edge `v_1 v_{n+1}` labeled `q`, the rest `p`: the rank is unchanged.
    OneQ,
}

fn check_pq(ctx: &ModulusContext, p: u128, q: u128) -> Result<()> {
    if p == q || !is_prime(p) || !is_prime(q) || p.checked_mul(q) != Some(ctx.modulus()) {
        return Err(Error::InvalidArgument(format!(
            "modulus {} is not the product of the distinct primes {p} and {q}",
            ctx.modulus()
        )));
    }
    Ok(())
}

/// `K_{n+1} = K_n + S_n` over `Z/pqZ`, controlling the rank by the star labels.
///
/// `g` must have a generating set made of the trivial spline and flow-up
/// splines with entries in `<p>`; this is checked on the lattice basis.
pub fn star_extension(g: &EdgeLabeledGraph, mode: StarMode, p: u128, q: u128) -> Result<EdgeLabeledGraph> {
    let ctx = g.ctx();
    check_pq(ctx, p, q)?;
    let lat = build_spline_lattice(g)?;
    let report = flow_up_basis(&lat)?;
    for i in 2..=g.vertex_count() {
        let col = report.reduced_column(i, ctx);
        if col.values().iter().any(|&x| x % p != 0) {
            return Err(Error::Hypothesis(format!(
                "flow-up generator {:?} has an entry outside <{p}>",
                col.values()
            )));
        }
    }
    let before = module_invariants(&lat)?.rank;
    let n = g.vertex_count();
    let labels: Vec<u128> = (1..=n)
        .map(|i| if mode == StarMode::OneQ && i == 1 { q } else { p })
        .collect();
    let ext = g.add_star(&labels)?;
    let after = module_invariants(&build_spline_lattice(&ext)?)?.rank;
    let expected = match mode {
        StarMode::AllP => before + 1,
        StarMode::OneQ => before,
    };
    if after != expected {
        return Err(Error::Consistency(format!(
            "{mode:?} extension of a rank-{before} graph has rank {after}, expected {expected}"
        )));
    }
    Ok(ext)
}

/// `K_n` over `Z/pqZ` with rank exactly `rank`: start from the edge `v_1 v_2`
/// labeled `p`, then `rank - 2` all-`p` stars, then `n - rank` one-`q` stars.
pub fn pq_rank(n: usize, rank: usize, p: u128, q: u128) -> Result<EdgeLabeledGraph> {
    if n < 2 || rank < 2 || rank > n {
        return Err(Error::InvalidArgument(format!("rank {rank} not in 2..={n}")));
    }
    let m = p
        .checked_mul(q)
        .ok_or_else(|| Error::InvalidArgument("modulus overflows".into()))?;
    let ctx = factorize(m)?;
    check_pq(&ctx, p, q)?;
    let mut g = EdgeLabeledGraph::new(ctx, 2, &[(1, 2, p)])?;
    for _ in 0..rank - 2 {
        g = star_extension(&g, StarMode::AllP, p, q)?;
    }
    for _ in 0..n - rank {
        g = star_extension(&g, StarMode::OneQ, p, q)?;
    }
    let got = module_invariants(&build_spline_lattice(&g)?)?.rank;
    if got != rank {
        return Err(Error::Consistency(format!("built rank {got}, wanted {rank}")));
    }
    Ok(g)
}

/// Which route produced a minimum generating set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    DecreasingChain,
    IncreasingChain,
    PrimePower,
    FlowUpBasis,
}

fn chain_direction(labels: &[u128]) -> Option<ChainDirection> {
    if labels.windows(2).all(|w| w[0] % w[1] == 0) {
        Some(ChainDirection::Decreasing)
    } else if labels.windows(2).all(|w| w[1] % w[0] == 0) {
        Some(ChainDirection::Increasing)
    } else {
        None
    }
}

/// Best generating set available for `g`: an explicit certified set when the
/// labels meet a construction's hypothesis, otherwise the reduced flow-up
/// basis (certified by rank when its size happens to match).
pub fn minimum_generating_set(g: &EdgeLabeledGraph, cross_check: bool) -> Result<(Route, GeneratingSet)> {
    let ctx = g.ctx();
    let n = g.vertex_count();
    if n >= 3 && g.has_proper_labels() {
        if let Some(labels) = g.complete_labels() {
            if let Some(dir) = chain_direction(&labels) {
                let chain = ChainLabels::new(labels, dir, ctx)?;
                return Ok(match dir {
                    ChainDirection::Decreasing => (Route::DecreasingChain, son_decreasing(n, &chain, ctx)?.1),
                    ChainDirection::Increasing => (Route::IncreasingChain, son_increasing(n, &chain, ctx)?.1),
                });
            }
            if ctx.prime_power().is_some() {
                return Ok((Route::PrimePower, prime_power_unordered(g, cross_check)?));
            }
        }
    }
    let report = flow_up_basis(&build_spline_lattice(g)?)?;
    if cross_check {
        for i in 2..=n {
            let walk = smallest_leading_entry(g, i, WalkMode::Trails)?;
            if walk.value != report.diagonal[i - 1] % ctx.modulus() {
                return Err(Error::Consistency(format!(
                    "index {i}: lattice gives {}, trails give {}",
                    report.diagonal[i - 1],
                    walk.value
                )));
            }
        }
    }
    let set = report.flow_up_generators(ctx);
    let rank = module_invariants(&build_spline_lattice(g)?)?.rank;
    let cert = if set.len() == rank {
        Certificate::RankMatchedMinimum
    } else {
        Certificate::GeneratingOnly
    };
    Ok((Route::FlowUpBasis, GeneratingSet::certify(g, set, cert)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{enumerate_splines, oracle_rank, DEFAULT_BUDGET};

    fn s(v: &[u128]) -> Spline {
        Spline(v.to_vec())
    }

    #[test]
    fn decreasing_triangle() {
        let ctx = factorize(8).unwrap();
        let chain = ChainLabels::new(vec![4, 4, 2], ChainDirection::Decreasing, &ctx).unwrap();
        let (g, gs) = son_decreasing(3, &chain, &ctx).unwrap();
        assert_eq!(gs.splines, vec![s(&[1, 1, 1]), s(&[0, 4, 0]), s(&[0, 0, 4])]);
        assert_eq!(gs.certificate, Certificate::CriterionMinimum);
        assert_eq!(gs.rank(), 3);
        assert_eq!(oracle_rank(&g, DEFAULT_BUDGET).unwrap(), 3);
    }

    #[test]
    fn decreasing_k4_uses_edge_to_v1() {
        let ctx = factorize(2u128.pow(10)).unwrap();
        let labels: Vec<u128> = [9, 8, 8, 7, 6, 5].iter().map(|&k| 2u128.pow(k)).collect();
        let chain = ChainLabels::new(labels.clone(), ChainDirection::Decreasing, &ctx).unwrap();
        let (_, gs) = son_decreasing(4, &chain, &ctx).unwrap();
        assert_eq!(gs.splines[3], s(&[0, 0, 0, labels[3]]));
        assert_eq!(gs.splines[2], s(&[0, 0, labels[1], 0]));
        assert_eq!(gs.rank(), 4);
    }

    #[test]
    fn increasing_equal_chain() {
        let ctx = factorize(36).unwrap();
        let chain = ChainLabels::new(vec![6; 6], ChainDirection::Increasing, &ctx).unwrap();
        let (_, gs) = son_increasing(4, &chain, &ctx).unwrap();
        assert_eq!(
            gs.splines,
            vec![s(&[1, 1, 1, 1]), s(&[0, 6, 6, 6]), s(&[0, 0, 6, 6]), s(&[0, 0, 0, 6])]
        );
    }

    #[test]
    fn chain_validation() {
        let ctx = factorize(8).unwrap();
        assert!(ChainLabels::new(vec![2, 4], ChainDirection::Decreasing, &ctx).is_err());
        assert!(ChainLabels::new(vec![2, 8], ChainDirection::Increasing, &ctx).is_err());
        assert!(ChainLabels::new(vec![1, 2], ChainDirection::Increasing, &ctx).is_err());
        assert!(ChainLabels::new(vec![3], ChainDirection::Increasing, &ctx).is_err());
        let ok = ChainLabels::new(vec![4, 2, 2], ChainDirection::Decreasing, &ctx).unwrap();
        assert!(son_increasing(3, &ok, &ctx).is_err());
        assert!(son_decreasing(4, &ok, &ctx).is_err());
    }

    #[test]
    fn prime_power_all_exponent_one() {
        let ctx = factorize(27).unwrap();
        let g = complete_from_labels(&CompleteGraphLabels::new(4, vec![3; 6]), &ctx).unwrap();
        let gs = prime_power_unordered(&g, true).unwrap();
        assert_eq!(
            gs.splines,
            vec![s(&[1, 1, 1, 1]), s(&[0, 3, 0, 0]), s(&[0, 0, 3, 0]), s(&[0, 0, 0, 3])]
        );
    }

    #[test]
    fn prime_power_agrees_with_chain_constructions() {
        let ctx = factorize(2u128.pow(8)).unwrap();
        let dec: Vec<u128> = [7, 6, 6, 5, 4, 3].iter().map(|&k| 2u128.pow(k)).collect();
        let chain = ChainLabels::new(dec, ChainDirection::Decreasing, &ctx).unwrap();
        let (g, son) = son_decreasing(4, &chain, &ctx).unwrap();
        assert_eq!(prime_power_unordered(&g, true).unwrap().splines, son.splines);

        let inc: Vec<u128> = [1, 2, 2, 3, 5, 7].iter().map(|&k| 2u128.pow(k)).collect();
        let chain = ChainLabels::new(inc, ChainDirection::Increasing, &ctx).unwrap();
        let (g, son) = son_increasing(4, &chain, &ctx).unwrap();
        assert_eq!(prime_power_unordered(&g, true).unwrap().splines, son.splines);
    }

    #[test]
    fn prime_power_rejections() {
        let g = complete_from_labels(&CompleteGraphLabels::new(3, vec![2, 3, 2]), &factorize(6).unwrap())
            .unwrap();
        assert!(matches!(prime_power_unordered(&g, false), Err(Error::Hypothesis(_))));
        let path = EdgeLabeledGraph::new(factorize(8).unwrap(), 3, &[(1, 2, 2), (2, 3, 4)]).unwrap();
        assert!(matches!(prime_power_unordered(&path, false), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn rank_one_graphs() {
        for n in [4, 5] {
            let g = rank_one_pq(n, 2, 3).unwrap();
            assert_eq!(g.modulus(), 6);
            assert_eq!(g.label(1, 2), Some(2));
            assert_eq!(g.label(1, 3), Some(3));
            assert_eq!(g.label(1, n), Some(3));
            assert_eq!(enumerate_splines(&g, DEFAULT_BUDGET).unwrap().len(), 6);
        }
        assert!(rank_one_pq(3, 2, 3).is_err());
        assert!(rank_one_pq(4, 2, 4).is_err());
        assert!(rank_one_pq(4, 6, 5).is_err());
        assert_eq!(rank_one_pq(4, 4, 9).unwrap().modulus(), 36);
    }

    #[test]
    fn star_extensions_from_an_edge() {
        let k2 = EdgeLabeledGraph::new(factorize(6).unwrap(), 2, &[(1, 2, 2)]).unwrap();
        let up = star_extension(&k2, StarMode::AllP, 2, 3).unwrap();
        assert_eq!(oracle_rank(&up, DEFAULT_BUDGET).unwrap(), 3);
        let flat = star_extension(&k2, StarMode::OneQ, 2, 3).unwrap();
        assert_eq!(oracle_rank(&flat, DEFAULT_BUDGET).unwrap(), 2);
        assert_eq!(flat.label(1, 3), Some(3));
        assert!(star_extension(&k2, StarMode::AllP, 3, 2).is_err());
        let k2_12 = EdgeLabeledGraph::new(factorize(12).unwrap(), 2, &[(1, 2, 2)]).unwrap();
        assert!(star_extension(&k2_12, StarMode::AllP, 2, 6).is_err());
    }

    #[test]
    fn pq_rank_base_case() {
        let g = pq_rank(2, 2, 2, 3).unwrap();
        let (route, gs) = minimum_generating_set(&g, true).unwrap();
        assert_eq!(route, Route::FlowUpBasis);
        assert_eq!(gs.splines, vec![s(&[1, 1]), s(&[0, 2])]);
        assert_eq!(gs.certificate, Certificate::RankMatchedMinimum);
        assert!(pq_rank(4, 1, 2, 3).is_err());
        assert!(pq_rank(4, 5, 2, 3).is_err());
    }

    #[test]
    fn dispatch_routes() {
        let g = crate::splines::fixtures::c5();
        let (route, gs) = minimum_generating_set(&g, true).unwrap();
        assert_eq!(route, Route::FlowUpBasis);
        assert_eq!(gs.len(), 4);
        assert_eq!(gs.rank(), 3);
        assert_eq!(gs.certificate, Certificate::GeneratingOnly);

        let ctx = factorize(27).unwrap();
        let g = complete_from_labels(&CompleteGraphLabels::new(3, vec![3, 9, 3]), &ctx).unwrap();
        assert_eq!(minimum_generating_set(&g, false).unwrap().0, Route::PrimePower);
        let g = complete_from_labels(&CompleteGraphLabels::new(3, vec![9, 3, 3]), &ctx).unwrap();
        assert_eq!(minimum_generating_set(&g, false).unwrap().0, Route::DecreasingChain);
        let g = complete_from_labels(&CompleteGraphLabels::new(3, vec![3, 3, 9]), &ctx).unwrap();
        assert_eq!(minimum_generating_set(&g, false).unwrap().0, Route::IncreasingChain);
    }

    #[test]
    fn certificate_strings_round_trip() {
        for c in [Certificate::CriterionMinimum, Certificate::RankMatchedMinimum, Certificate::GeneratingOnly] {
            assert_eq!(Certificate::parse(c.as_str()), Some(c));
        }
        assert_eq!(Certificate::parse("nope"), None);
    }
}
