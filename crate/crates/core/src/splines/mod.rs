//! Splines on an edge-labeled graph and flow-up classification.

mod leading;
mod trails;

pub use leading::{construct_flow_up, smallest_leading_entry, LeadingEntry, WalkMode};
pub use trails::{
    for_each_simple_path, for_each_trail, path_gcd_set, simple_paths_between, trail_gcd_set,
    trails_between, Trail,
};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::arith::ModulusContext;
use crate::error::{Error, Result};
use crate::graph::EdgeLabeledGraph;

/// A vertex labelling `(f_{v_1}, ..., f_{v_n})` with residues in `[0, m)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Spline(pub Vec<u128>);

impl Spline {
    pub fn constant(n: usize, c: u128) -> Self {
        Spline(vec![c; n])
    }

    pub fn ones(n: usize) -> Self {
        Self::constant(n, 1)
    }

    pub fn values(&self) -> &[u128] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Value at 1-based vertex `v`.
    pub fn at(&self, v: usize) -> u128 {
        self.0[v - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// `1 + (number of leading zeros)`, or `None` for the zero spline.
    pub fn flow_up_index(&self) -> Option<usize> {
        self.0.iter().position(|&x| x != 0).map(|p| p + 1)
    }

    /// `Some(c)` when every nonzero entry equals `c`.
    pub fn constant_value(&self) -> Option<u128> {
        let mut nonzero = self.0.iter().copied().filter(|&x| x != 0);
        let c = nonzero.next()?;
        nonzero.all(|x| x == c).then_some(c)
    }

    pub fn add(&self, other: &Spline, ctx: &ModulusContext) -> Spline {
        Spline(self.0.iter().zip(&other.0).map(|(&a, &b)| ctx.add(a, b)).collect())
    }

    pub fn scale(&self, k: u128, ctx: &ModulusContext) -> Spline {
        Spline(self.0.iter().map(|&a| ctx.mul(a, k)).collect())
    }
}

/// Flow-up index of `f`. See [`Spline::flow_up_index`].
pub fn flow_up_index(f: &Spline) -> Option<usize> {
    f.flow_up_index()
}

/// `(true, c)` when all nonzero entries share the value `c`.
pub fn is_constant_flow_up(f: &Spline) -> (bool, Option<u128>) {
    match f.constant_value() {
        Some(c) => (true, Some(c)),
        None => (false, None),
    }
}

/// A spline together with its flow-up index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowUpClass {
    pub spline: Spline,
    pub index: usize,
}

impl FlowUpClass {
    pub fn new(spline: Spline) -> Option<Self> {
        spline.flow_up_index().map(|index| FlowUpClass { spline, index })
    }

    pub fn leading_entry(&self) -> u128 {
        self.spline.at(self.index)
    }
}

/// First edge condition violated by `f`, if any.
pub fn first_violation(g: &EdgeLabeledGraph, f: &[u128]) -> Result<Option<Error>> {
    let n = g.vertex_count();
    if f.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: f.len() });
    }
    let ctx = g.ctx();
    for e in g.edges() {
        let diff = ctx.sub(ctx.reduce(f[e.u - 1]), ctx.reduce(f[e.v - 1]));
        if !diff.is_multiple_of(e.label) {
            return Ok(Some(Error::NotASpline { u: e.u, v: e.v, label: e.label, difference: diff }));
        }
    }
    Ok(None)
}

/// Whether `f` satisfies every edge condition: `label | (f_u - f_v) mod m`.
pub fn is_spline(g: &EdgeLabeledGraph, f: &[u128]) -> Result<bool> {
    Ok(first_violation(g, f)?.is_none())
}

/// Checks `f` and wraps it as a [`Spline`] with reduced entries.
pub fn to_spline(g: &EdgeLabeledGraph, f: &[u128]) -> Result<Spline> {
    match first_violation(g, f)? {
        Some(err) => Err(err),
        None => Ok(Spline(f.iter().map(|&x| g.ctx().reduce(x)).collect())),
    }
}

/// Entrywise least nonnegative residue of an integer vector.
pub fn reduce_spline(f: &[BigInt], ctx: &ModulusContext) -> Spline {
    let m = BigInt::from(ctx.modulus());
    Spline(
        f.iter()
            .map(|x| {
                let r = ((x % &m) + &m) % &m;
                r.to_u128().expect("residue below the modulus fits in u128")
            })
            .collect(),
    )
}
