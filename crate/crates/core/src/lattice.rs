//! The spline lattice over the integers.
//!
//! Splines over `Z/mZ` are exactly the reductions of integer vectors `f` with
//! `gcd(l_e, m) | f_u - f_v` on every edge. That set is a full-rank lattice
//! `L` containing `m Z^n`, and the spline module is `L / m Z^n`. Working in
//! `L` gives exact PID machinery: a lower-triangular Hermite basis is a
//! flow-up basis, and Smith invariants give the module's cyclic decomposition.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::arith::ModulusContext;
use crate::error::{Error, Result};
use crate::graph::EdgeLabeledGraph;
use crate::matrix::{column_echelon, hermite_normal_form, integer_kernel, smith_normal_form, IntMatrix};
use crate::splines::{reduce_spline, to_spline, Spline};

#[derive(Debug, Clone)]
pub struct SplineLattice {
    graph: EdgeLabeledGraph,
    /// `n x k` matrix whose columns generate `L`; the last `n` columns are `m e_i`.
    generators: IntMatrix,
}

impl SplineLattice {
    pub fn graph(&self) -> &EdgeLabeledGraph {
        &self.graph
    }

    pub fn generators(&self) -> &IntMatrix {
        &self.generators
    }
}

/// Whether the integer vector satisfies every lifted edge constraint.
fn satisfies_constraints(g: &EdgeLabeledGraph, f: &[BigInt]) -> bool {
    g.edges().iter().all(|e| {
        let diff = &f[e.u - 1] - &f[e.v - 1];
        (diff % BigInt::from(e.label)).is_zero()
    })
}

fn modulus_columns(n: usize, m: u128) -> IntMatrix {
    IntMatrix::diagonal(&vec![BigInt::from(m); n])
}

/// Generators of `L` from the integer kernel of `[M | -D]`, where `M` is the
/// signed incidence matrix and `D = diag(label_e)`: `(f, t)` is in the kernel
/// exactly when `f_u - f_v = label_e * t_e` on every edge.
pub fn build_spline_lattice(g: &EdgeLabeledGraph) -> Result<SplineLattice> {
    let n = g.vertex_count();
    let edges = g.edges();
    let mut system = IntMatrix::zeros(edges.len(), n + edges.len());
    for (row, e) in edges.iter().enumerate() {
        system.set(row, e.u - 1, BigInt::from(1));
        system.set(row, e.v - 1, BigInt::from(-1));
        system.set(row, n + row, -BigInt::from(e.label));
    }
    let kernel = integer_kernel(&system);
    let projected: Vec<Vec<BigInt>> =
        kernel.columns().into_iter().map(|c| c[..n].to_vec()).collect();
    let generators =
        IntMatrix::from_columns(n, &projected).hconcat(&modulus_columns(n, g.modulus()));
    for (j, col) in generators.columns().iter().enumerate() {
        if !satisfies_constraints(g, col) {
            return Err(Error::Consistency(format!("lattice generator {j} violates an edge constraint")));
        }
    }
    Ok(SplineLattice { graph: g.clone(), generators })
}

/// A lower-triangular basis of `L`: column `i` vanishes above row `i` and has
/// positive diagonal `d_i`, the least positive leading entry of an integer
/// flow-up spline at `v_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowUpBasisReport {
    pub basis: IntMatrix,
    pub diagonal: Vec<u128>,
    /// `gcd(d_i, m)`; equal to `m` when no flow-up class exists at index `i`.
    pub leading_ideals: Vec<u128>,
}

impl FlowUpBasisReport {
    pub fn n(&self) -> usize {
        self.diagonal.len()
    }

    /// Basis column for 1-based index `i`, reduced mod `m`.
    pub fn reduced_column(&self, i: usize, ctx: &ModulusContext) -> Spline {
        reduce_spline(&self.basis.column(i - 1), ctx)
    }

    /// Flow-up indices `i` whose leading ideal is nonzero mod `m`.
    pub fn live_indices(&self, ctx: &ModulusContext) -> Vec<usize> {
        (1..=self.n()).filter(|&i| self.leading_ideals[i - 1] != ctx.modulus()).collect()
    }

    /// The reduced basis with zero-ideal indices dropped: a flow-up
    /// generating set of the module, ordered by flow-up index.
    pub fn flow_up_generators(&self, ctx: &ModulusContext) -> Vec<Spline> {
        self.live_indices(ctx).into_iter().map(|i| self.reduced_column(i, ctx)).collect()
    }
}

/// Lower-triangular Hermite basis of a full-rank lattice given by generators.
fn triangular_basis(generators: &IntMatrix) -> Result<IntMatrix> {
    let e = column_echelon(generators);
    let n = generators.rows();
    if e.pivot_rows != (0..n).collect::<Vec<_>>() {
        return Err(Error::Consistency("spline lattice is not of full rank".into()));
    }
    Ok(e.basis())
}

pub fn flow_up_basis(lat: &SplineLattice) -> Result<FlowUpBasisReport> {
    let basis = triangular_basis(&lat.generators)?;
    let ctx = lat.graph.ctx();
    let mut diagonal = Vec::with_capacity(basis.cols());
    for i in 0..basis.cols() {
        let d = basis
            .get(i, i)
            .to_u128()
            .ok_or_else(|| Error::Consistency(format!("diagonal entry {i} does not fit u128")))?;
        if !ctx.modulus().is_multiple_of(d) {
            return Err(Error::Consistency(format!("diagonal entry {d} does not divide m")));
        }
        diagonal.push(d);
    }
    let leading_ideals = diagonal.iter().map(|&d| ctx.canonical_label(d)).collect();
    Ok(FlowUpBasisReport { basis, diagonal, leading_ideals })
}

/// Cyclic decomposition of the spline module `L / m Z^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleInvariants {
    /// Smith invariants `delta_1 | ... | delta_n` of `L` in `Z^n`.
    pub lattice_invariants: Vec<u128>,
    /// Nontrivial module factors `m / delta_i`, in divisibility order.
    pub factors: Vec<u128>,
    /// Minimal number of generators of the module.
    pub rank: usize,
}

impl ModuleInvariants {
    /// Number of splines, i.e. the product of the factors.
    pub fn order(&self) -> u128 {
        self.factors.iter().product()
    }
}

/// Invariants of `L / m Z^n` from any `n`-row generator matrix of `L`, which
/// must already contain `m Z^n` in its span.
pub fn invariants_from_generators(generators: &IntMatrix, ctx: &ModulusContext) -> Result<ModuleInvariants> {
    let n = generators.rows();
    let m = ctx.modulus();
    let snf = smith_normal_form(generators);
    let deltas = snf
        .invariants_u128()
        .ok_or_else(|| Error::Consistency("Smith invariant does not fit u128".into()))?;
    if deltas.len() != n || deltas.iter().any(|&d| !m.is_multiple_of(d)) {
        return Err(Error::Consistency(format!(
            "generators do not span a lattice containing m Z^n (invariants {deltas:?})"
        )));
    }
    let mut factors: Vec<u128> = deltas.iter().map(|&d| m / d).filter(|&f| f != 1).collect();
    factors.reverse();
    let rank = factors.len();
    Ok(ModuleInvariants { lattice_invariants: deltas, factors, rank })
}

pub fn module_invariants(lat: &SplineLattice) -> Result<ModuleInvariants> {
    invariants_from_generators(&lat.generators, lat.graph.ctx())
}

/// Lower-triangular Hermite basis of the lattice spanned by lifted splines
/// together with `m Z^n`.
pub fn lattice_of_splines(n: usize, gens: &[Spline], ctx: &ModulusContext) -> Result<IntMatrix> {
    let cols: Vec<Vec<BigInt>> =
        gens.iter().map(|s| s.values().iter().map(|&x| BigInt::from(x)).collect()).collect();
    let a = IntMatrix::from_columns(n, &cols).hconcat(&modulus_columns(n, ctx.modulus()));
    triangular_basis(&a)
}

/// Whether the splines generate the whole module.
pub fn spans(lat: &SplineLattice, gens: &[Spline]) -> Result<bool> {
    let g = &lat.graph;
    for s in gens {
        to_spline(g, s.values())?;
    }
    let target = hermite_normal_form(&lat.generators);
    Ok(lattice_of_splines(g.vertex_count(), gens, g.ctx())? == target)
}

/// Membership of an integer vector in a lattice with lower-triangular basis.
pub fn in_triangular_lattice(basis: &IntMatrix, v: &[BigInt]) -> bool {
    let mut rest = v.to_vec();
    for i in 0..basis.cols() {
        let d = basis.get(i, i);
        let (q, r) = rest[i].div_rem(d);
        if !r.is_zero() {
            return false;
        }
        if !q.is_zero() {
            for (k, x) in rest.iter_mut().enumerate().skip(i) {
                *x -= &q * basis.get(k, i);
            }
        }
    }
    rest.iter().all(Zero::is_zero)
}
