//! Independent checks: the flow-up generator test, the minimality criterion
//! for constant flow-up sets, and exhaustive enumeration oracles.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use crate::arith::{lcm, ModulusContext};
use crate::error::{Error, Result};
use crate::graph::EdgeLabeledGraph;
use crate::lattice::{
    build_spline_lattice, flow_up_basis, in_triangular_lattice, invariants_from_generators,
    lattice_of_splines, ModuleInvariants,
};
use crate::matrix::IntMatrix;
use crate::splines::{first_violation, path_gcd_set, trail_gcd_set, Spline, WalkMode};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub holds: bool,
    /// First failure, in words.
    pub reason: Option<String>,
}

impl CheckOutcome {
    fn pass() -> Self {
        CheckOutcome { holds: true, reason: None }
    }

    fn fail(reason: impl Into<String>) -> Self {
        CheckOutcome { holds: false, reason: Some(reason.into()) }
    }
}

/// Whether a family of flow-up classes, at most one per index, generates the
/// module. It does exactly when every index whose leading ideal is nonzero is
/// present and the member there generates that ideal.
pub fn check_flow_up_generators(g: &EdgeLabeledGraph, set: &[Spline]) -> Result<CheckOutcome> {
    let ctx = g.ctx();
    let mut by_index: BTreeMap<usize, &Spline> = BTreeMap::new();
    for s in set {
        if let Some(err) = first_violation(g, s.values())? {
            return Err(err);
        }
        let idx = s
            .flow_up_index()
            .ok_or_else(|| Error::InvalidArgument("zero spline in a flow-up set".into()))?;
        if by_index.insert(idx, s).is_some() {
            return Err(Error::InvalidArgument(format!("two members with flow-up index {idx}")));
        }
    }
    let report = flow_up_basis(&build_spline_lattice(g)?)?;
    for i in 1..=g.vertex_count() {
        let want = report.leading_ideals[i - 1];
        let got = by_index.get(&i).map_or(ctx.modulus(), |s| ctx.canonical_label(s.at(i)));
        if got != want {
            let msg = match by_index.get(&i) {
                None => format!("index {i}: no member, but flow-up classes with leading entry {want} exist"),
                Some(s) => format!(
                    "index {i}: leading entry {} generates <{got}>, the least possible is <{want}>",
                    s.at(i)
                ),
            };
            return Ok(CheckOutcome::fail(msg));
        }
    }
    Ok(CheckOutcome::pass())
}

/// Minimality criterion for constant flow-up sets: the set holds the trivial
/// spline, every other member is a constant flow-up class at its own index,
/// and the constants form a divisibility chain. Comparability is judged on the ideals the
/// constants generate.
pub fn check_minimum_criterion(set: &[Spline], ctx: &ModulusContext) -> CheckOutcome {
    let Some(n) = set.first().map(Spline::len) else {
        return CheckOutcome::fail("empty set");
    };
    let ones = Spline::ones(n);
    let Some(trivial_at) = set.iter().position(|s| *s == ones) else {
        return CheckOutcome::fail("missing the trivial spline (1,...,1)");
    };
    let mut constants = vec![(1u128, 1u128)];
    let mut indices = BTreeSet::from([1usize]);
    for (k, s) in set.iter().enumerate() {
        if k == trivial_at {
            continue;
        }
        if let Some(i) = s.flow_up_index() {
            if !indices.insert(i) {
                return CheckOutcome::fail(format!("two members with flow-up index {i}"));
            }
        }
        match s.constant_value() {
            Some(c) => constants.push((c, ctx.canonical_label(c))),
            _ => {
                return CheckOutcome::fail(format!(
                    "member {} {:?} is not a constant flow-up class",
                    k + 1,
                    s.values()
                ))
            }
        }
    }
    for (a, (ca, ia)) in constants.iter().enumerate() {
        for (cb, ib) in &constants[a + 1..] {
            if ia % ib != 0 && ib % ia != 0 {
                return CheckOutcome::fail(format!("constants {ca},{cb} incomparable"));
            }
        }
    }
    CheckOutcome::pass()
}

/// Every spline of `g`, in lexicographic order.
///
/// Vertices are assigned in index order; each new value ranges over the
/// residues compatible with its largest-label earlier neighbour and is then
/// checked against the others. Every assignment counts against `budget`.
pub fn enumerate_splines(g: &EdgeLabeledGraph, budget: u64) -> Result<Vec<Spline>> {
    let n = g.vertex_count();
    let m = g.modulus();
    // earlier[x] = (earlier neighbour, label), largest label first
    let earlier: Vec<Vec<(usize, u128)>> = (1..=n)
        .map(|x| {
            let mut v: Vec<(usize, u128)> = g
                .neighbors(x)
                .iter()
                .filter(|&&(w, _)| w < x)
                .map(|&(w, id)| (w, g.edge(id).label))
                .collect();
            v.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
            v
        })
        .collect();

    struct Search<'a> {
        earlier: &'a [Vec<(usize, u128)>],
        m: u128,
        budget: u64,
        visited: u64,
        current: Vec<u128>,
        out: Vec<Spline>,
    }

    impl Search<'_> {
        fn run(&mut self, x: usize) -> Result<()> {
            if x > self.earlier.len() {
                self.out.push(Spline(self.current.clone()));
                return Ok(());
            }
            let cons = &self.earlier[x - 1];
            let (start, step) = match cons.first() {
                Some(&(w, d)) => (self.current[w - 1] % d, d),
                None => (0, 1),
            };
            let mut r = start;
            while r < self.m {
                let ok = cons.iter().skip(1).all(|&(w, d)| {
                    let f = self.current[w - 1];
                    let diff = if r >= f { r - f } else { self.m - (f - r) };
                    diff % d == 0
                });
                if ok {
                    self.visited += 1;
                    if self.visited > self.budget {
                        return Err(Error::OracleInfeasible { budget: self.budget });
                    }
                    self.current.push(r);
                    self.run(x + 1)?;
                    self.current.pop();
                }
                r += step;
            }
            Ok(())
        }
    }

    let mut search = Search { earlier: &earlier, m, budget, visited: 0, current: Vec::with_capacity(n), out: Vec::new() };
    search.run(1)?;
    Ok(search.out)
}

/// Module invariants from the full list of splines, bypassing the
/// constraint-kernel construction of the lattice entirely.
pub fn oracle_invariants(g: &EdgeLabeledGraph, splines: &[Spline]) -> Result<ModuleInvariants> {
    let n = g.vertex_count();
    let ctx = g.ctx();
    let mut basis = lattice_of_splines(n, &[], ctx)?;
    for s in splines {
        let v: Vec<BigInt> = s.values().iter().map(|&x| BigInt::from(x)).collect();
        if !in_triangular_lattice(&basis, &v) {
            basis = crate::matrix::hermite_normal_form(&basis.hconcat(&IntMatrix::from_columns(n, &[v])));
        }
    }
    invariants_from_generators(&basis, ctx)
}

/// Rank computed from exhaustive enumeration.
pub fn oracle_rank(g: &EdgeLabeledGraph, budget: u64) -> Result<usize> {
    let all = enumerate_splines(g, budget)?;
    Ok(oracle_invariants(g, &all)?.rank)
}

/// All `Z`-linear combinations of `gens` mod `m`.
pub fn span_closure(gens: &[Spline], n: usize, ctx: &ModulusContext) -> BTreeSet<Spline> {
    let mut set = BTreeSet::from([Spline(vec![0; n])]);
    for gen in gens {
        let order = gen.values().iter().map(|&x| ctx.additive_order(x)).fold(1, lcm);
        let mut next = BTreeSet::new();
        for s in &set {
            let mut cur = s.clone();
            for _ in 0..order {
                next.insert(cur.clone());
                cur = cur.add(gen, ctx);
            }
        }
        set = next;
    }
    set
}

/// A spline whose entry at `vertex` is not a multiple of the walk lcm that the
/// zeros on `v_1..v_{index-1}` force there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinViolation {
    pub spline: Spline,
    pub vertex: usize,
    pub required: u128,
}

/// Checks, for every spline with `i - 1` leading zeros and every `j >= i`,
/// that `f_{v_j}` is a multiple of the lcm of walk gcds from `v_j` to
/// `v_1..v_{i-1}`.
#[allow(clippy::needless_range_loop)]
pub fn audit_min_divisibility(
    g: &EdgeLabeledGraph,
    splines: &[Spline],
    mode: WalkMode,
) -> Result<Vec<MinViolation>> {
    let n = g.vertex_count();
    let ctx = g.ctx();
    // pair_lcm[j][k]: lcm of walk gcds from v_j to v_k
    let mut pair_lcm = vec![vec![1u128; n + 1]; n + 1];
    for j in 1..=n {
        for k in 1..=n {
            if j == k {
                continue;
            }
            let set = match mode {
                WalkMode::SimplePaths => path_gcd_set(g, j, k)?,
                WalkMode::Trails => trail_gcd_set(g, j, k)?,
            };
            pair_lcm[j][k] = set.into_iter().fold(1, lcm);
        }
    }
    // required[i][j] = lcm over k < i of pair_lcm[j][k]
    let mut required = vec![vec![1u128; n + 1]; n + 2];
    for i in 2..=n {
        for j in i..=n {
            required[i][j] = (1..i).map(|k| pair_lcm[j][k]).fold(1, lcm);
        }
    }
    let mut out = Vec::new();
    for s in splines {
        let Some(i) = s.flow_up_index().filter(|&i| i >= 2) else { continue };
        for j in i..=n {
            let req = required[i][j];
            if !ctx.is_multiple(s.at(j), req) {
                out.push(MinViolation { spline: s.clone(), vertex: j, required: req });
            }
        }
    }
    Ok(out)
}

/// Whether the trail lcm and the simple-path lcm agree for every ordered pair.
pub fn trails_agree_with_paths(g: &EdgeLabeledGraph) -> Result<bool> {
    let n = g.vertex_count();
    for j in 1..=n {
        for k in 1..=n {
            if j == k {
                continue;
            }
            let t = trail_gcd_set(g, j, k)?.into_iter().fold(1, lcm);
            let p = path_gcd_set(g, j, k)?.into_iter().fold(1, lcm);
            if t != p {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
