use crate::arith::lcm;
use crate::error::{Error, Result};
use crate::graph::EdgeLabeledGraph;
use crate::lattice::{build_spline_lattice, flow_up_basis};

use super::trails::{path_gcd_set, trail_gcd_set};
use super::FlowUpClass;

/// Which walks feed the lcm. Both give the same value: every trail contains
/// a simple path with the same endpoints whose gcd is a multiple of the
/// trail's gcd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WalkMode {
    #[default]
    SimplePaths,
    Trails,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LeadingEntry {
    /// Exact lcm over the integers; always a divisor of `m`.
    pub lcm: u128,
    /// `lcm mod m`.
    pub value: u128,
    /// `lcm == 0 mod m`: no flow-up class exists at this index.
    pub vanishes: bool,
}

/// lcm over `k < i` of the gcds of all walks from `v_i` to `v_k`: the least
/// leading entry a flow-up class at `v_i` can have.
pub fn smallest_leading_entry(g: &EdgeLabeledGraph, i: usize, mode: WalkMode) -> Result<LeadingEntry> {
    let n = g.vertex_count();
    if i < 2 || i > n {
        return Err(Error::InvalidArgument(format!("leading-entry index {i} outside 2..={n}")));
    }
    let mut acc = 1u128;
    for k in 1..i {
        let gcds = match mode {
            WalkMode::SimplePaths => path_gcd_set(g, i, k)?,
            WalkMode::Trails => trail_gcd_set(g, i, k)?,
        };
        acc = gcds.into_iter().fold(acc, lcm);
    }
    let m = g.modulus();
    let value = acc % m;
    Ok(LeadingEntry { lcm: acc, value, vanishes: value == 0 })
}

/// A flow-up class at `v_i` with the least possible leading entry, taken from
/// the lattice's triangular basis, or `None` if every spline vanishing on
/// `v_1..v_{i-1}` also vanishes at `v_i`.
pub fn construct_flow_up(g: &EdgeLabeledGraph, i: usize) -> Result<Option<FlowUpClass>> {
    let n = g.vertex_count();
    if i == 0 || i > n {
        return Err(Error::InvalidArgument(format!("flow-up index {i} outside 1..={n}")));
    }
    let report = flow_up_basis(&build_spline_lattice(g)?)?;
    let ideal = report.leading_ideals[i - 1];
    let found = if ideal == g.modulus() {
        None
    } else {
        let spline = report.reduced_column(i, g.ctx());
        Some(FlowUpClass { spline, index: i })
    };
    if i >= 2 {
        let expected = smallest_leading_entry(g, i, WalkMode::SimplePaths)?;
        let got = found.as_ref().map_or(0, FlowUpClass::leading_entry);
        if expected.value != got {
            return Err(Error::Consistency(format!(
                "index {i}: lattice leading entry {got} but walk lcm {}",
                expected.value
            )));
        }
    }
    Ok(found)
}
