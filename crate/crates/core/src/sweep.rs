//! Random-J sweeps over an algebra. Instances are independent and carry
//! their own seed, so the parallel and sequential drivers give identical
//! records in identical order.

use serde::{Deserialize, Serialize};

use crate::acs::AlmostComplexStructure;
use crate::error::Result;
use crate::lie::LieAlgebra;
use crate::pairing::Orientation;
use crate::tameness::{analyze, boundary_plus_vectors, feasibility_oracle, obstruction_vector, verify_obstruction};

/// Random closed forms tried by the feasibility oracle per instance.
pub const ORACLE_TRIALS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub seed: u64,
    pub h_plus: usize,
    pub h_minus: usize,
    pub b2: usize,
    pub b_plus: usize,
    pub cocycle_dim: usize,
    pub coboundary_dim: usize,
    pub invariant_cocycle_dim: usize,
    pub invariant_coboundary_dim: usize,
    pub anti_invariant_coboundary_dim: usize,
    pub tamed_cohomological: bool,
    pub tamed_forms: bool,
    pub tamed_vectors: bool,
    pub feasible: bool,
    /// `Some(valid)` when an obstruction vector was produced.
    pub obstruction_valid: Option<bool>,
    pub integrable: bool,
    /// `Λ⁻_J ⊂ Z`.
    pub minus_closed: bool,
    /// `Λ⁻_J ∩ Z ≠ 0`.
    pub minus_meets_closed: bool,
}

impl SweepRecord {
    pub fn verdicts_agree(&self) -> bool {
        self.tamed_cohomological == self.tamed_forms
            && self.tamed_forms == self.tamed_vectors
            && self.tamed_vectors == self.feasible
    }
}

pub fn run_instance(g: &LieAlgebra, or: &Orientation, seed: u64) -> Result<SweepRecord> {
    let j = AlmostComplexStructure::random(or, seed);
    let a = analyze(g, or, &j)?;
    let tamed_cohomological = a.tamed_cohomological();
    let feasibility = feasibility_oracle(g, or, &j, ORACLE_TRIALS, seed)?;
    let obstruction_valid = if tamed_cohomological {
        None
    } else {
        let v = obstruction_vector(g, or, &j)?;
        Some(verify_obstruction(g, &j, &v)?)
    };
    let r = &a.report;
    Ok(SweepRecord {
        seed,
        h_plus: r.h_plus,
        h_minus: r.h_minus,
        b2: r.b2,
        b_plus: r.b_plus,
        cocycle_dim: r.cocycle_dim,
        coboundary_dim: r.coboundary_dim,
        invariant_cocycle_dim: a.z_plus.dim(),
        invariant_coboundary_dim: r.invariant_coboundary_dim,
        anti_invariant_coboundary_dim: r.anti_invariant_coboundary_dim,
        tamed_cohomological,
        tamed_forms: a.tamed_linear(),
        tamed_vectors: boundary_plus_vectors(g, &j)?.is_zero(),
        feasible: feasibility.feasible,
        obstruction_valid,
        integrable: j.is_integrable(g)?,
        minus_closed: a.z_minus.dim() == a.lambda_minus.dim(),
        minus_meets_closed: !a.z_minus.is_zero(),
    })
}

/// Maps `f` over `items` on the current thread.
pub fn map_sequential<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

/// Maps `f` over `items` on the rayon pool; output order matches input.
#[cfg(feature = "parallel")]
pub fn map_parallel<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

/// Parallel when the `parallel` feature is enabled, sequential otherwise.
pub fn map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        map_parallel(items, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_sequential(items, f)
    }
}

/// Sweeps seeds `base..base + count`.
pub fn sweep(g: &LieAlgebra, or: &Orientation, base: u64, count: u64) -> Vec<Result<SweepRecord>> {
    let seeds: Vec<u64> = (base..base + count).collect();
    map(&seeds, |&s| run_instance(g, or, s))
}

pub fn sweep_sequential(g: &LieAlgebra, or: &Orientation, base: u64, count: u64) -> Vec<Result<SweepRecord>> {
    let seeds: Vec<u64> = (base..base + count).collect();
    map_sequential(&seeds, |&s| run_instance(g, or, s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog_get;

    #[test]
    fn drivers_agree() {
        let g = catalog_get("nil4").unwrap().algebra;
        let or = Orientation::standard(4);
        let a = sweep(&g, &or, 10, 12);
        let b = sweep_sequential(&g, &or, 10, 12);
        assert_eq!(a, b);
        for r in a {
            let r = r.unwrap();
            assert!(r.verdicts_agree());
            assert_eq!(r.h_plus + r.h_minus, r.b2);
        }
    }
}
