//! Lie algebras given by structure constants, and their Chevalley-Eilenberg
//! (co)homology.
//!
//! The differential on forms is `dφ(u, v) = -φ([u, v])` on 1-forms, extended
//! to all grades by the Leibniz rule. The boundary on k-vectors is the
//! signed adjoint `⟨∂w, φ⟩ = (-1)^{k+1} ⟨w, dφ⟩`, so in coordinates
//! `∂_k = (-1)^{k+1} d_{k-1}^T`.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exterior::{basis_indices, binomial, Forms, Graded, KForm, KVector, Vectors};
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::subspace::Subspace;

/// One structure constant: `[f_i, f_j]` has coefficient `coeff` on `f_k`.
/// Indices are 1-based and `i < j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstant {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub coeff: Scalar,
}

impl StructureConstant {
    pub fn new(i: usize, j: usize, k: usize, coeff: Scalar) -> Self {
        Self { i, j, k, coeff }
    }
}

/// A finite-dimensional Lie algebra over the rationals with a fixed basis
/// `f_1 .. f_n`.
#[derive(Clone)]
pub struct LieAlgebra {
    dim: usize,
    /// `c[i][j][k]`, 0-based, fully antisymmetric in `(i, j)`.
    c: Vec<Vec<Vec<Scalar>>>,
    /// `d_k : Λ^k → Λ^{k+1}`, columns are images of basis k-forms.
    d: Arc<Vec<Matrix>>,
}

impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.c == other.c
    }
}

impl Eq for LieAlgebra {}

impl std::fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LieAlgebra(dim {}, ", self.dim)?;
        let brackets: Vec<String> = self
            .structure_constants()
            .iter()
            .map(|s| format!("[f{},f{}]∋{}f{}", s.i, s.j, crate::scalar::format(&s.coeff), s.k))
            .collect();
        write!(f, "{})", brackets.join(" "))
    }
}

/// Outcome of a Jacobi check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JacobiReport {
    Holds,
    /// First triple `i < j < k` (1-based) with a nonzero Jacobiator, and
    /// that Jacobiator's components.
    Fails {
        triple: (usize, usize, usize),
        residual: Vec<Scalar>,
    },
}

impl JacobiReport {
    pub fn holds(&self) -> bool {
        matches!(self, JacobiReport::Holds)
    }
}

impl LieAlgebra {
    /// Builds and validates (including the Jacobi identity).
    pub fn new(dim: usize, constants: &[StructureConstant]) -> Result<Self> {
        let g = Self::new_unchecked(dim, constants)?;
        if let JacobiReport::Fails { triple, .. } = g.check_jacobi() {
            return Err(Error::JacobiViolation {
                i: triple.0,
                j: triple.1,
                k: triple.2,
            });
        }
        Ok(g)
    }

    /// Builds without checking Jacobi. Index validation still applies.
    pub fn new_unchecked(dim: usize, constants: &[StructureConstant]) -> Result<Self> {
        if dim == 0 || dim > crate::exterior::MAX_DIM {
            return Err(Error::UnsupportedDimension {
                required: crate::exterior::MAX_DIM,
                found: dim,
            });
        }
        let mut c = vec![vec![vec![Scalar::zero(); dim]; dim]; dim];
        let mut seen = BTreeSet::new();
        for sc in constants {
            for idx in [sc.i, sc.j, sc.k] {
                if idx == 0 || idx > dim {
                    return Err(Error::IndexOutOfRange { index: idx, dim });
                }
            }
            if sc.i >= sc.j {
                return Err(Error::BracketOrder { i: sc.i, j: sc.j });
            }
            if !seen.insert((sc.i, sc.j, sc.k)) {
                return Err(Error::DuplicateConstant {
                    i: sc.i,
                    j: sc.j,
                    k: sc.k,
                });
            }
            let (i, j, k) = (sc.i - 1, sc.j - 1, sc.k - 1);
            c[i][j][k] = sc.coeff.clone();
            c[j][i][k] = -sc.coeff.clone();
        }
        let d = Arc::new((0..=dim).map(|k| differential_matrix(dim, &c, k)).collect());
        Ok(Self { dim, c, d })
    }

    /// Convenience for bracket tables written in any order, e.g. `[f4, f1] = f1`
    /// is `((4, 1), vec![(1, 1)])`. Pairs with `i > j` are normalized to
    /// `[f_j, f_i] = -…` before strict validation.
    pub fn from_brackets(dim: usize, table: &[((usize, usize), Vec<(usize, Scalar)>)]) -> Result<Self> {
        let mut constants = Vec::new();
        for ((i, j), image) in table {
            if i == j {
                return Err(Error::BracketOrder { i: *i, j: *j });
            }
            for (k, coeff) in image {
                if i < j {
                    constants.push(StructureConstant::new(*i, *j, *k, coeff.clone()));
                } else {
                    constants.push(StructureConstant::new(*j, *i, *k, -coeff.clone()));
                }
            }
        }
        Self::new(dim, &constants)
    }

    pub fn abelian(dim: usize) -> Self {
        Self::new(dim, &[]).expect("abelian algebra is valid")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Nonzero structure constants with `i < j`, sorted.
    pub fn structure_constants(&self) -> Vec<StructureConstant> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    if !self.c[i][j][k].is_zero() {
                        out.push(StructureConstant::new(i + 1, j + 1, k + 1, self.c[i][j][k].clone()));
                    }
                }
            }
        }
        out
    }

    /// Structure constant `c^k_{ij}` with 1-based indices, any order of `i, j`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.c[i - 1][j - 1][k - 1].clone()
    }

    /// `[u, v]` for vectors given by components.
    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim;
        let mut out = vec![Scalar::zero(); n];
        for i in 0..n {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if v[j].is_zero() || i == j {
                    continue;
                }
                let uv = &u[i] * &v[j];
                for k in 0..n {
                    if !self.c[i][j][k].is_zero() {
                        out[k] += &uv * &self.c[i][j][k];
                    }
                }
            }
        }
        out
    }

    fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim];
        v[i] = Scalar::one();
        v
    }

    pub fn check_jacobi(&self) -> JacobiReport {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (a, b, c) = (self.basis_vector(i), self.basis_vector(j), self.basis_vector(k));
                    let t1 = self.bracket(&self.bracket(&a, &b), &c);
                    let t2 = self.bracket(&self.bracket(&b, &c), &a);
                    let t3 = self.bracket(&self.bracket(&c, &a), &b);
                    let residual: Vec<Scalar> = (0..n).map(|m| &t1[m] + &t2[m] + &t3[m]).collect();
                    if residual.iter().any(|x| !x.is_zero()) {
                        return JacobiReport::Fails {
                            triple: (i + 1, j + 1, k + 1),
                            residual,
                        };
                    }
                }
            }
        }
        JacobiReport::Holds
    }

    /// `tr(ad_{f_i}) = Σ_j c^j_{ij}`.
    pub fn ad_traces(&self) -> Vec<Scalar> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.c[i][j][j].clone()).sum())
            .collect()
    }

    pub fn is_unimodular(&self) -> bool {
        self.ad_traces().iter().all(Zero::is_zero)
    }

    fn check_grade(&self, k: usize) -> Result<()> {
        if k > self.dim {
            return Err(Error::GradeOverflow { grade: k, dim: self.dim });
        }
        Ok(())
    }

    /// Matrix of `d : Λ^k(g*) → Λ^{k+1}(g*)` in lexicographic bases. For
    /// `k = n` this is the zero map to a zero-dimensional space.
    pub fn d_matrix(&self, k: usize) -> Result<&Matrix> {
        self.check_grade(k)?;
        Ok(&self.d[k])
    }

    /// Matrix of `∂ : Λ^k(g) → Λ^{k-1}(g)`.
    pub fn boundary_matrix(&self, k: usize) -> Result<Matrix> {
        if k == 0 {
            return Err(Error::GradeUnderflow);
        }
        self.check_grade(k)?;
        let dt = self.d[k - 1].transpose();
        Ok(if k % 2 == 0 { dt.neg() } else { dt })
    }

    fn check_dim<V: crate::exterior::Variance>(&self, x: &Graded<V>) -> Result<()> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.dim(),
            });
        }
        Ok(())
    }

    /// Chevalley-Eilenberg differential.
    pub fn d(&self, alpha: &KForm) -> Result<KForm> {
        self.check_dim(alpha)?;
        let k = alpha.grade();
        if k == self.dim {
            return Err(Error::GradeOverflow {
                grade: k + 1,
                dim: self.dim,
            });
        }
        let image = self.d[k].mul_vec(&alpha.coords());
        KForm::from_coords(self.dim, k + 1, &image)
    }

    /// Chevalley-Eilenberg boundary on k-vectors.
    pub fn boundary(&self, w: &KVector) -> Result<KVector> {
        self.check_dim(w)?;
        let k = w.grade();
        let m = self.boundary_matrix(k)?;
        KVector::from_coords(self.dim, k - 1, &m.mul_vec(&w.coords()))
    }

    fn kernel<V: crate::exterior::Variance>(&self, m: &Matrix, grade: usize) -> Result<Subspace<V>> {
        if m.nrows() == 0 {
            return Subspace::full(self.dim, grade);
        }
        Subspace::from_coordinate_rows(self.dim, grade, &m.nullspace())
    }

    fn image<V: crate::exterior::Variance>(&self, m: &Matrix, grade: usize) -> Result<Subspace<V>> {
        let cols: Vec<Vec<Scalar>> = (0..m.ncols()).map(|j| m.column(j)).collect();
        Subspace::from_coordinate_rows(self.dim, grade, &cols)
    }

    /// `Z^k`, closed k-forms.
    pub fn cocycles(&self, k: usize) -> Result<Subspace<Forms>> {
        self.check_grade(k)?;
        self.kernel(&self.d[k], k)
    }

    /// `B^k`, exact k-forms.
    pub fn coboundaries(&self, k: usize) -> Result<Subspace<Forms>> {
        self.check_grade(k)?;
        if k == 0 {
            return Subspace::zero(self.dim, 0);
        }
        self.image(&self.d[k - 1], k)
    }

    /// `Z_k`, k-cycles.
    pub fn cycles(&self, k: usize) -> Result<Subspace<Vectors>> {
        self.check_grade(k)?;
        if k == 0 {
            return Subspace::full(self.dim, 0);
        }
        self.kernel(&self.boundary_matrix(k)?, k)
    }

    /// `B_k`, k-boundaries.
    pub fn boundaries(&self, k: usize) -> Result<Subspace<Vectors>> {
        self.check_grade(k)?;
        if k == self.dim {
            return Subspace::zero(self.dim, k);
        }
        self.image(&self.boundary_matrix(k + 1)?, k)
    }

    pub fn cohomology(&self, k: usize) -> Result<CohomologySpace<Forms>> {
        CohomologySpace::new(self.cocycles(k)?, self.coboundaries(k)?)
    }

    pub fn homology(&self, k: usize) -> Result<CohomologySpace<Vectors>> {
        CohomologySpace::new(self.cycles(k)?, self.boundaries(k)?)
    }

    /// `b_k = dim Z^k - dim B^k`, computed from ranks.
    pub fn betti(&self, k: usize) -> Result<usize> {
        self.check_grade(k)?;
        let dim_k = binomial(self.dim, k);
        let rank_out = self.d[k].rank();
        let rank_in = if k == 0 { 0 } else { self.d[k - 1].rank() };
        Ok(dim_k - rank_out - rank_in)
    }

    /// Betti number of Lie algebra homology, from the boundary maps.
    pub fn homology_betti(&self, k: usize) -> Result<usize> {
        self.check_grade(k)?;
        let dim_k = binomial(self.dim, k);
        let rank_out = if k == 0 { 0 } else { self.boundary_matrix(k)?.rank() };
        let rank_in = if k == self.dim {
            0
        } else {
            self.boundary_matrix(k + 1)?.rank()
        };
        Ok(dim_k - rank_out - rank_in)
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        (0..=self.dim).map(|k| self.betti(k).expect("grade in range")).collect()
    }
}

/// Matrix of `d` on grade `k`. On a monomial,
/// `d(f^{i1} ∧ … ∧ f^{ik}) = Σ_r (-1)^r f^{i1} ∧ … ∧ d f^{ir} ∧ … ∧ f^{ik}`
/// with `d f^m = -Σ_{i<j} c^m_{ij} f^{ij}`.
fn differential_matrix(n: usize, c: &[Vec<Vec<Scalar>>], k: usize) -> Matrix {
    let source = basis_indices(n, k);
    let target = basis_indices(n, k + 1);
    let mut m = Matrix::zeros(target.len(), source.len());
    if k == n || n < 2 {
        return m;
    }
    let d1: Vec<KForm> = (0..n)
        .map(|mm| {
            let mut out = KForm::zero(n, 2).expect("n >= 2 when k < n");
            for i in 0..n {
                for j in i + 1..n {
                    if !c[i][j][mm].is_zero() {
                        let t = KForm::term(n, -c[i][j][mm].clone(), &[i + 1, j + 1]).expect("valid");
                        out = out.add(&t).expect("same shape");
                    }
                }
            }
            out
        })
        .collect();
    for (col, mi) in source.iter().enumerate() {
        let idx = mi.indices();
        let mut total = KForm::zero(n, k + 1).expect("k < n");
        for r in 0..idx.len() {
            let mut acc = KForm::basis(n, &[]).expect("scalar 1");
            for (s, &i) in idx.iter().enumerate() {
                let factor = if s == r {
                    d1[i - 1].clone()
                } else {
                    KForm::basis(n, &[i]).expect("valid")
                };
                acc = acc.wedge(&factor).expect("grades fit");
            }
            total = if r % 2 == 0 {
                total.add(&acc)
            } else {
                total.sub(&acc)
            }
            .expect("same shape");
        }
        for (row, coeff) in total.coords().into_iter().enumerate() {
            m[(row, col)] = coeff;
        }
    }
    m
}

/// A (co)homology space: cycles modulo boundaries, kept as two subspaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologySpace<V: crate::exterior::Variance> {
    pub cycles: Subspace<V>,
    pub boundaries: Subspace<V>,
}

impl<V: crate::exterior::Variance> CohomologySpace<V> {
    pub fn new(cycles: Subspace<V>, boundaries: Subspace<V>) -> Result<Self> {
        if !cycles.contains(&boundaries)? {
            return Err(Error::InvariantViolated(
                "boundaries are not contained in cycles".into(),
            ));
        }
        Ok(Self { cycles, boundaries })
    }

    pub fn grade(&self) -> usize {
        self.cycles.grade()
    }

    pub fn dim(&self) -> usize {
        self.cycles.dim() - self.boundaries.dim()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn nil3_r() -> LieAlgebra {
        LieAlgebra::new(4, &[StructureConstant::new(1, 3, 2, int(1))]).unwrap()
    }

    fn nil4() -> LieAlgebra {
        LieAlgebra::from_brackets(4, &[((4, 2), vec![(1, int(1))]), ((4, 3), vec![(2, int(1))])]).unwrap()
    }

    fn f(terms: &[(i64, &[usize])]) -> KForm {
        KForm::from_terms(4, terms).unwrap()
    }

    #[test]
    fn jacobi_verdicts() {
        assert!(nil3_r().check_jacobi().holds());
        assert!(LieAlgebra::abelian(4).check_jacobi().holds());
        let bad = [
            StructureConstant::new(1, 2, 1, int(1)),
            StructureConstant::new(1, 3, 2, int(1)),
        ];
        let g = LieAlgebra::new_unchecked(4, &bad).unwrap();
        match g.check_jacobi() {
            JacobiReport::Fails { triple, residual } => {
                assert_eq!(triple, (1, 2, 3));
                assert_eq!(residual, vec![int(0), int(1), int(0), int(0)]);
            }
            JacobiReport::Holds => panic!("expected a violation"),
        }
        assert_eq!(
            LieAlgebra::new(4, &bad),
            Err(Error::JacobiViolation { i: 1, j: 2, k: 3 })
        );
    }

    #[test]
    fn construction_errors() {
        let c = |i, j, k| StructureConstant::new(i, j, k, int(1));
        assert_eq!(
            LieAlgebra::new(4, &[c(2, 1, 3)]),
            Err(Error::BracketOrder { i: 2, j: 1 })
        );
        assert_eq!(
            LieAlgebra::new(4, &[c(1, 1, 3)]),
            Err(Error::BracketOrder { i: 1, j: 1 })
        );
        assert_eq!(
            LieAlgebra::new(4, &[c(1, 2, 3), c(1, 2, 3)]),
            Err(Error::DuplicateConstant { i: 1, j: 2, k: 3 })
        );
        assert!(matches!(
            LieAlgebra::new(4, &[c(1, 5, 3)]),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn unimodularity() {
        let sol = LieAlgebra::from_brackets(4, &[((4, 1), vec![(1, int(1))]), ((2, 4), vec![(2, int(1))])]).unwrap();
        assert!(sol.is_unimodular());
        let affine = LieAlgebra::new(4, &[StructureConstant::new(1, 2, 2, int(1))]).unwrap();
        assert!(!affine.is_unimodular());
        assert_eq!(affine.ad_traces()[0], int(1));
        assert!(LieAlgebra::abelian(4).is_unimodular());
    }

    #[test]
    fn differential_examples() {
        let g = nil3_r();
        assert_eq!(g.d(&f(&[(1, &[2])])).unwrap(), f(&[(-1, &[1, 3])]));
        assert!(g.d(&f(&[(1, &[1])])).unwrap().is_zero());
        assert_eq!(nil4().d(&f(&[(1, &[1])])).unwrap(), f(&[(1, &[2, 4])]));
        // Leibniz on a 2-form: d(f^{24}) = d f^2 ∧ f^4 = -f^{134}
        assert_eq!(g.d(&f(&[(1, &[2, 4])])).unwrap(), f(&[(-1, &[1, 3, 4])]));
    }

    #[test]
    fn boundary_examples() {
        let e = |idx: &[usize]| KVector::basis(4, idx).unwrap();
        assert_eq!(nil3_r().boundary(&e(&[1, 3])).unwrap(), e(&[2]));
        assert_eq!(nil4().boundary(&e(&[2, 4])).unwrap(), e(&[1]).neg());
        let ab = LieAlgebra::abelian(4);
        for k in 1..=4 {
            assert!(ab.boundary_matrix(k).unwrap().is_zero());
        }
        assert_eq!(ab.boundary(&KVector::basis(4, &[]).unwrap()), Err(Error::GradeUnderflow));
    }

    #[test]
    fn cocycles_and_betti() {
        let g = nil3_r();
        let z = g.cocycles(2).unwrap();
        let expected: Vec<KForm> = [[1, 2], [3, 4], [1, 4], [2, 3], [1, 3]]
            .iter()
            .map(|i| f(&[(1, i)]))
            .collect();
        assert!(z.same_as(&Subspace::span(4, 2, &expected).unwrap()).unwrap());
        let b = g.coboundaries(2).unwrap();
        assert!(b.same_as(&Subspace::span(4, 2, [&f(&[(1, &[1, 3])])]).unwrap()).unwrap());
        assert_eq!(g.betti(2).unwrap(), 4);

        let z4 = nil4().cocycles(2).unwrap();
        let expected: Vec<KForm> = [[1, 4], [2, 3], [2, 4], [3, 4]].iter().map(|i| f(&[(1, i)])).collect();
        assert!(z4.same_as(&Subspace::span(4, 2, &expected).unwrap()).unwrap());
        assert_eq!(nil4().betti(2).unwrap(), 2);
        assert_eq!(LieAlgebra::abelian(4).betti_numbers(), vec![1, 4, 6, 4, 1]);
    }

    #[test]
    fn homology_matches_cohomology() {
        for g in [nil3_r(), nil4(), LieAlgebra::abelian(4)] {
            for k in 0..=4 {
                assert_eq!(g.betti(k).unwrap(), g.homology_betti(k).unwrap());
                assert_eq!(g.cohomology(k).unwrap().dim(), g.betti(k).unwrap());
                assert_eq!(g.homology(k).unwrap().dim(), g.betti(k).unwrap());
            }
        }
    }
}
