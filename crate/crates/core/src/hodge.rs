//! Hodge theory for a left-invariant metric: star, codifferential,
//! Laplacian, harmonic forms and the Hodge decomposition.
//!
//! The metric `h` is a Gram matrix on `g`. Forms get the induced inner
//! product `⟨f^I, f^J⟩ = det(h⁻¹[I, J])`. The Hodge star is defined by
//! `α ∧ *β = ⟨α, β⟩ Vol_h`, and `δ = (-1)^{n(p+1)+1} * d *` on p-forms.
//!
//! Only metrics with a rational volume `√det h` are accepted, and the
//! orientation's `η` must equal `Vol_h` exactly.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exterior::{basis_indices, binomial, Forms, KForm};
use crate::lie::LieAlgebra;
use crate::linalg::Matrix;
use crate::pairing::{complement_sign, Orientation};
use crate::scalar::{self, Scalar};
use crate::subspace::Subspace;

/// A positive definite inner product on `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerProduct {
    gram: Matrix,
}

impl InnerProduct {
    pub fn new(gram: Matrix) -> Result<Self> {
        if !gram.is_positive_definite() {
            return Err(Error::NotPositiveDefinite);
        }
        Ok(Self { gram })
    }

    pub fn euclidean(n: usize) -> Self {
        Self {
            gram: Matrix::identity(n),
        }
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.nrows()
    }

    /// `h(u, v)`.
    pub fn apply(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        crate::linalg::dot(u, &self.gram.mul_vec(v))
    }

    /// `√det h`, when rational.
    pub fn volume_factor(&self) -> Result<Scalar> {
        let det = self.gram.determinant();
        scalar::sqrt_exact(&det).ok_or_else(|| Error::IrrationalVolume(scalar::format(&det)))
    }

    /// The orientation with `η = Vol_h`, oriented like `f_{1…n}` when
    /// `sign > 0` and oppositely otherwise.
    pub fn orientation(&self, sign: i32) -> Result<Orientation> {
        let v = self.volume_factor()?;
        let zeta_coeff = v.recip();
        Orientation::scaled(self.dim(), if sign < 0 { -zeta_coeff } else { zeta_coeff })
    }

    /// Gram matrix of the induced inner product on `Λ^k(g*)`.
    pub fn form_gram(&self, k: usize) -> Matrix {
        let inv = self.gram.inverse().expect("positive definite");
        let basis = basis_indices(self.dim(), k);
        let idx: Vec<Vec<usize>> = basis
            .iter()
            .map(|mi| mi.indices().iter().map(|i| i - 1).collect())
            .collect();
        Matrix::from_fn(basis.len(), basis.len(), |a, b| {
            if k == 0 {
                scalar::one()
            } else {
                inv.submatrix(&idx[a], &idx[b]).determinant()
            }
        })
    }
}

/// A metric together with a compatible orientation.
#[derive(Debug, Clone)]
pub struct Hodge {
    metric: InnerProduct,
    orientation: Orientation,
    /// `c` with `Vol_h = η = c · f^{1…n}`.
    volume: Scalar,
    grams: Vec<Matrix>,
}

/// `α = harmonic + dλ + δμ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeDecomposition {
    pub harmonic: KForm,
    pub exact: KForm,
    pub primitive: Option<KForm>,
    pub coexact: KForm,
    pub coprimitive: Option<KForm>,
}

impl Hodge {
    pub fn new(metric: InnerProduct, orientation: Orientation) -> Result<Self> {
        let n = metric.dim();
        if orientation.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: orientation.dim(),
            });
        }
        let v = metric.volume_factor()?;
        let top: Vec<usize> = (1..=n).collect();
        let eta_coeff = orientation.eta().coeff_of(&top);
        if eta_coeff.abs() != v {
            return Err(Error::IncompatibleOrientation);
        }
        let grams = (0..=n).map(|k| metric.form_gram(k)).collect();
        Ok(Self {
            metric,
            orientation,
            volume: eta_coeff,
            grams,
        })
    }

    /// Standard Euclidean metric with `ζ = f_{1…n}`.
    pub fn euclidean(n: usize) -> Self {
        Self::new(InnerProduct::euclidean(n), Orientation::standard(n)).expect("compatible")
    }

    pub fn metric(&self) -> &InnerProduct {
        &self.metric
    }

    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }

    pub fn dim(&self) -> usize {
        self.metric.dim()
    }

    fn check(&self, alpha: &KForm) -> Result<()> {
        if alpha.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: alpha.dim(),
            });
        }
        Ok(())
    }

    pub fn inner(&self, alpha: &KForm, beta: &KForm) -> Result<Scalar> {
        self.check(alpha)?;
        self.check(beta)?;
        if alpha.grade() != beta.grade() {
            return Err(Error::GradeMismatch {
                expected: alpha.grade(),
                found: beta.grade(),
            });
        }
        let g = &self.grams[alpha.grade()];
        Ok(crate::linalg::dot(&alpha.coords(), &g.mul_vec(&beta.coords())))
    }

    pub fn norm_squared(&self, alpha: &KForm) -> Result<Scalar> {
        self.inner(alpha, alpha)
    }

    /// Hodge star `Λ^k → Λ^{n-k}`.
    pub fn star(&self, beta: &KForm) -> Result<KForm> {
        self.check(beta)?;
        let n = self.dim();
        let k = beta.grade();
        let g = &self.grams[k];
        let pairings = g.mul_vec(&beta.coords());
        let mut out = KForm::zero(n, n - k)?;
        for (mi, p) in basis_indices(n, k).iter().zip(pairings) {
            if p.is_zero() {
                continue;
            }
            let sign = complement_sign(mi, n);
            let c = &p * &self.volume;
            let c = if sign < 0 { -c } else { c };
            out = out.add(&KForm::from_multi_index(n, mi.complement(n), c)?)?;
        }
        Ok(out)
    }

    /// Codifferential `δ : Λ^p → Λ^{p-1}`.
    pub fn codifferential(&self, g: &LieAlgebra, alpha: &KForm) -> Result<KForm> {
        self.check(alpha)?;
        let n = self.dim();
        let p = alpha.grade();
        if p == 0 {
            return Err(Error::GradeUnderflow);
        }
        let out = self.star(&g.d(&self.star(alpha)?)?)?;
        Ok(if (n * (p + 1) + 1) % 2 == 1 { out.neg() } else { out })
    }

    /// `Δ = dδ + δd`.
    pub fn laplacian(&self, g: &LieAlgebra, alpha: &KForm) -> Result<KForm> {
        self.check(alpha)?;
        let n = self.dim();
        let p = alpha.grade();
        let mut out = KForm::zero(n, p)?;
        if p > 0 {
            out = out.add(&g.d(&self.codifferential(g, alpha)?)?)?;
        }
        if p < n {
            out = out.add(&self.codifferential(g, &g.d(alpha)?)?)?;
        }
        Ok(out)
    }

    fn operator_matrix<F>(&self, source: usize, target: usize, f: F) -> Result<Matrix>
    where
        F: Fn(&KForm) -> Result<KForm>,
    {
        let n = self.dim();
        let basis = basis_indices(n, source);
        let mut m = Matrix::zeros(binomial(n, target), basis.len());
        for (col, mi) in basis.into_iter().enumerate() {
            let img = f(&KForm::from_multi_index(n, mi, scalar::one())?)?;
            for (row, c) in img.coords().into_iter().enumerate() {
                m[(row, col)] = c;
            }
        }
        Ok(m)
    }

    /// Matrix of `δ` on `Λ^p` in lexicographic bases.
    pub fn codifferential_matrix(&self, g: &LieAlgebra, p: usize) -> Result<Matrix> {
        self.operator_matrix(p, p - 1, |a| self.codifferential(g, a))
    }

    /// Harmonic p-forms, `ker Δ`.
    pub fn harmonic_space(&self, g: &LieAlgebra, p: usize) -> Result<Subspace<Forms>> {
        let lap = self.operator_matrix(p, p, |a| self.laplacian(g, a))?;
        Subspace::from_coordinate_rows(self.dim(), p, &lap.nullspace())
    }

    /// Orthogonal projection of `alpha` onto a subspace.
    pub fn project(&self, alpha: &KForm, s: &Subspace<Forms>) -> Result<KForm> {
        let n = self.dim();
        let p = alpha.grade();
        if s.is_zero() {
            return KForm::zero(n, p);
        }
        let basis = s.basis();
        let m = basis.len();
        let gram = Matrix::from_fn(m, m, |i, j| self.inner(&basis[i], &basis[j]).expect("same grade"));
        let rhs: Vec<Scalar> = basis
            .iter()
            .map(|b| self.inner(b, alpha))
            .collect::<Result<_>>()?;
        let x = gram
            .solve(&rhs)
            .ok_or_else(|| Error::InvariantViolated("singular Gram matrix".into()))?;
        let terms: Vec<(Scalar, &KForm)> = x.into_iter().zip(basis).collect();
        KForm::combination(n, p, &terms)
    }

    /// Hodge decomposition of a p-form on a unimodular algebra, with
    /// primitives `λ` (`dλ = exact`) and `μ` (`δμ = coexact`).
    pub fn decompose(&self, g: &LieAlgebra, alpha: &KForm) -> Result<HodgeDecomposition> {
        self.check(alpha)?;
        if !g.is_unimodular() {
            return Err(Error::NotUnimodular);
        }
        let n = self.dim();
        let p = alpha.grade();

        let (exact, primitive) = if p == 0 {
            (KForm::zero(n, 0)?, None)
        } else {
            let d = g.d_matrix(p - 1)?;
            let image = image_subspace(n, p, d)?;
            let exact = self.project(alpha, &image)?;
            let lambda = d
                .solve(&exact.coords())
                .ok_or_else(|| Error::InvariantViolated("exact part has no primitive".into()))?;
            (exact, Some(KForm::from_coords(n, p - 1, &lambda)?))
        };
        let (coexact, coprimitive) = if p == n {
            (KForm::zero(n, n)?, None)
        } else {
            let delta = self.codifferential_matrix(g, p + 1)?;
            let image = image_subspace(n, p, &delta)?;
            let coexact = self.project(alpha, &image)?;
            let mu = delta
                .solve(&coexact.coords())
                .ok_or_else(|| Error::InvariantViolated("coexact part has no primitive".into()))?;
            (coexact, Some(KForm::from_coords(n, p + 1, &mu)?))
        };
        let harmonic = alpha.sub(&exact)?.sub(&coexact)?;
        if !self.laplacian(g, &harmonic)?.is_zero() {
            return Err(Error::InvariantViolated("harmonic part is not harmonic".into()));
        }
        Ok(HodgeDecomposition {
            harmonic,
            exact,
            primitive,
            coexact,
            coprimitive,
        })
    }

    /// Split of a 2-form (in dimension 4) into self-dual and anti-self-dual
    /// parts, `α± = (α ± *α) / 2`.
    pub fn sd_asd_split(&self, alpha: &KForm) -> Result<(KForm, KForm)> {
        self.check(alpha)?;
        if self.dim() != 4 || alpha.grade() != 2 {
            return Err(Error::UnsupportedDimension {
                required: 4,
                found: self.dim(),
            });
        }
        let half = scalar::ratio(1, 2);
        let s = self.star(alpha)?;
        Ok((alpha.add(&s)?.scale(&half), alpha.sub(&s)?.scale(&half)))
    }

    /// `Λ^±_h`, the ±1 eigenspaces of `*` on 2-forms (dimension 4).
    pub fn self_dual_space(&self, sign: i32) -> Result<Subspace<Forms>> {
        let parts = Subspace::<Forms>::full(4, 2)?
            .basis()
            .iter()
            .map(|b| self.sd_asd_split(b).map(|(p, m)| if sign > 0 { p } else { m }))
            .collect::<Result<Vec<_>>>()?;
        Subspace::span(4, 2, &parts)
    }

    pub fn is_positive(&self, x: &Scalar) -> bool {
        x.is_positive()
    }
}

fn image_subspace(n: usize, grade: usize, m: &Matrix) -> Result<Subspace<Forms>> {
    let cols: Vec<Vec<Scalar>> = (0..m.ncols()).map(|j| m.column(j)).collect();
    Subspace::from_coordinate_rows(n, grade, &cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::StructureConstant;
    use crate::scalar::int;

    fn f(terms: &[(i64, &[usize])]) -> KForm {
        KForm::from_terms(4, terms).unwrap()
    }

    fn nil3_r() -> LieAlgebra {
        LieAlgebra::new(4, &[StructureConstant::new(1, 3, 2, int(1))]).unwrap()
    }

    #[test]
    fn star_examples() {
        let h = Hodge::euclidean(4);
        assert_eq!(h.star(&f(&[(1, &[1, 2])])).unwrap(), f(&[(1, &[3, 4])]));
        assert_eq!(h.star(&f(&[(1, &[1, 3])])).unwrap(), f(&[(-1, &[2, 4])]));
        let a = f(&[(3, &[1, 2]), (-1, &[1, 4]), (2, &[2, 3])]);
        assert_eq!(h.star(&h.star(&a).unwrap()).unwrap(), a);
        // * of a 0-form is the volume form
        assert_eq!(
            h.star(&KForm::basis(4, &[]).unwrap()).unwrap(),
            KForm::basis(4, &[1, 2, 3, 4]).unwrap()
        );
    }

    #[test]
    fn star_with_scaled_metric() {
        // h = diag(4, 1, 1, 1) has volume 2
        let gram = Matrix::from_fn(4, 4, |i, j| if i != j { int(0) } else if i == 0 { int(4) } else { int(1) });
        let metric = InnerProduct::new(gram).unwrap();
        let or = metric.orientation(1).unwrap();
        let h = Hodge::new(metric.clone(), or.clone()).unwrap();
        let a = f(&[(1, &[1, 2]), (2, &[2, 4])]);
        let b = f(&[(5, &[1, 3]), (1, &[3, 4])]);
        // α ∧ *β = ⟨α, β⟩ Vol_h, evaluated through Φ_ζ
        assert_eq!(or.phi_zeta(&a, &h.star(&b).unwrap()).unwrap(), h.inner(&a, &b).unwrap());
        assert_eq!(
            Hodge::new(metric, Orientation::standard(4)).unwrap_err(),
            Error::IncompatibleOrientation
        );
    }

    #[test]
    fn irrational_volume_rejected() {
        let gram = Matrix::from_fn(4, 4, |i, j| if i != j { int(0) } else if i == 0 { int(2) } else { int(1) });
        let metric = InnerProduct::new(gram).unwrap();
        assert!(matches!(metric.orientation(1), Err(Error::IrrationalVolume(_))));
        assert_eq!(
            InnerProduct::new(Matrix::from_integers(&[&[1, 2], &[2, 1]])),
            Err(Error::NotPositiveDefinite)
        );
    }

    #[test]
    fn abelian_laplacian_vanishes() {
        let h = Hodge::euclidean(4);
        let g = LieAlgebra::abelian(4);
        for p in 0..=4 {
            assert_eq!(h.harmonic_space(&g, p).unwrap().dim(), binomial(4, p));
        }
    }

    #[test]
    fn nil3_harmonic_two_forms() {
        let h = Hodge::euclidean(4);
        assert_eq!(h.harmonic_space(&nil3_r(), 2).unwrap().dim(), 4);
    }

    #[test]
    fn exact_form_decomposition() {
        let h = Hodge::euclidean(4);
        let g = nil3_r();
        let a = f(&[(1, &[1, 3])]);
        let dec = h.decompose(&g, &a).unwrap();
        assert!(dec.harmonic.is_zero());
        assert!(dec.coexact.is_zero());
        assert_eq!(dec.exact, a);
        assert_eq!(g.d(dec.primitive.as_ref().unwrap()).unwrap(), a);
        assert_eq!(dec.primitive.unwrap(), KForm::term(4, int(-1), &[2]).unwrap());
    }

    #[test]
    fn decompose_requires_unimodular() {
        let h = Hodge::euclidean(4);
        let affine = LieAlgebra::new(4, &[StructureConstant::new(1, 2, 2, int(1))]).unwrap();
        assert_eq!(h.decompose(&affine, &f(&[(1, &[1, 2])])), Err(Error::NotUnimodular));
    }

    #[test]
    fn self_dual_split() {
        let h = Hodge::euclidean(4);
        let (p, m) = h.sd_asd_split(&f(&[(1, &[1, 2])])).unwrap();
        let half = scalar::ratio(1, 2);
        assert_eq!(p, f(&[(1, &[1, 2]), (1, &[3, 4])]).scale(&half));
        assert_eq!(m, f(&[(1, &[1, 2]), (-1, &[3, 4])]).scale(&half));
        let sd = f(&[(1, &[1, 4]), (1, &[2, 3])]);
        assert_eq!(h.sd_asd_split(&sd).unwrap().0, sd);
        assert_eq!(h.self_dual_space(1).unwrap().dim(), 3);
        assert_eq!(h.self_dual_space(-1).unwrap().dim(), 3);
    }
}
