//! Almost complex structures on `g`, their action on 2-forms and
//! 2-vectors, the invariant/anti-invariant splitting, the Plücker chart
//! formula for `Λ⁻_J`, the Nijenhuis tensor and Hermitian data.
//!
//! `J` is stored as a matrix `A` with `J f_k = Σ_h A[h][k] f_h`.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exterior::{Forms, KForm, KVector, Vectors};
use crate::hodge::InnerProduct;
use crate::lie::LieAlgebra;
use crate::linalg::Matrix;
use crate::pairing::Orientation;
use crate::scalar::{self, Scalar};
use crate::subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlmostComplexStructure {
    matrix: Matrix,
}

/// Plücker data of the chart `U_ij` on which the explicit formula for
/// `Λ⁻_J` is written.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartData {
    pub chart: (usize, usize),
    /// `σ(1..=4)`: the relabelling `e_h = f_{σ(h)}`.
    pub relabel: [usize; 4],
    /// `p[h][k]` in relabelled indices (0-based).
    pub plucker: [[Scalar; 4]; 4],
}

impl ChartData {
    pub fn p(&self, h: usize, k: usize) -> &Scalar {
        &self.plucker[h - 1][k - 1]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermitianData {
    pub metric: Matrix,
    pub fundamental_form: KForm,
}

impl AlmostComplexStructure {
    pub fn new(matrix: Matrix) -> Result<Self> {
        let n = matrix.nrows();
        if !matrix.is_square() || n % 2 != 0 || n == 0 {
            return Err(Error::NotComplexStructure);
        }
        if matrix.mul(&matrix) != Matrix::identity(n).neg() {
            return Err(Error::NotComplexStructure);
        }
        Ok(Self { matrix })
    }

    /// Like `new`, additionally requiring that `J` induces `or`.
    pub fn oriented(matrix: Matrix, or: &Orientation) -> Result<Self> {
        let j = Self::new(matrix)?;
        j.require_orientation(or)?;
        Ok(j)
    }

    /// `J₀ f_{2i-1} = f_{2i}`.
    pub fn standard(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in (0..n).step_by(2) {
            m[(i + 1, i)] = scalar::one();
            m[(i, i + 1)] = -scalar::one();
        }
        Self { matrix: m }
    }

    /// `P J₀ P⁻¹`.
    pub fn conjugated_standard(p: &Matrix) -> Result<Self> {
        let inv = p.inverse().ok_or(Error::NotComplexStructure)?;
        Self::new(p.mul(&Self::standard(p.nrows()).matrix).mul(&inv))
    }

    /// A random structure inducing `or`: `J₀` conjugated by an integer
    /// matrix with entries in `-3..=3`.
    pub fn random(or: &Orientation, seed: u64) -> Self {
        let n = or.dim();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let mut p = Matrix::from_fn(n, n, |_, _| scalar::int(rng.gen_range(-3..=3)));
            let det = p.determinant();
            if det.is_zero() {
                continue;
            }
            if scalar::sign(&det) != or.sign() {
                for i in 0..n {
                    p[(i, 0)] = -p[(i, 0)].clone();
                }
            }
            let j = Self::conjugated_standard(&p).expect("invertible conjugator");
            assert_eq!(j.orientation_sign(or).expect("valid J"), 1);
            return j;
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn negated(&self) -> Self {
        Self {
            matrix: self.matrix.neg(),
        }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.mul_vec(v)
    }

    fn check_dim(&self, n: usize) -> Result<()> {
        if n != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: n,
            });
        }
        Ok(())
    }

    /// `v₁ ∧ Jv₁ ∧ … ∧ v_m ∧ Jv_m` for the given vectors.
    pub fn complex_volume(&self, vs: &[Vec<Scalar>]) -> Result<KVector> {
        let n = self.dim();
        let mut acc = KVector::basis(n, &[])?;
        for v in vs {
            self.check_dim(v.len())?;
            acc = acc.wedge(&KVector::from_vec(v)?)?;
            acc = acc.wedge(&KVector::from_vec(&self.apply(v))?)?;
        }
        Ok(acc)
    }

    /// Sign of `η(v₁ ∧ Jv₁ ∧ … )`; errors if the vectors do not produce
    /// a basis.
    pub fn orientation_sign_from(&self, or: &Orientation, vs: &[Vec<Scalar>]) -> Result<i32> {
        self.check_dim(or.dim())?;
        let top = self.complex_volume(vs)?;
        if top.grade() != self.dim() {
            return Err(Error::GradeMismatch {
                expected: self.dim(),
                found: top.grade(),
            });
        }
        let s = crate::exterior::evaluate(&top, or.eta())?;
        if s.is_zero() {
            return Err(Error::ZeroElement);
        }
        Ok(scalar::sign(&s))
    }

    /// Standard basis vectors `v₁, v₂, …` chosen greedily so that
    /// `{v₁, Jv₁, v₂, Jv₂, …}` is a basis.
    pub fn adapted_vectors(&self) -> Vec<Vec<Scalar>> {
        let n = self.dim();
        let mut chosen = Vec::new();
        let mut span: Vec<Vec<Scalar>> = Vec::new();
        for i in 0..n {
            let mut e = vec![scalar::zero(); n];
            e[i] = scalar::one();
            let mut trial = span.clone();
            trial.push(e.clone());
            trial.push(self.apply(&e));
            if Matrix::from_rows(&trial, n).rank() == trial.len() {
                span = trial;
                chosen.push(e);
            }
            if span.len() == n {
                break;
            }
        }
        chosen
    }

    pub fn orientation_sign(&self, or: &Orientation) -> Result<i32> {
        let vs = self.adapted_vectors();
        if vs.len() * 2 != self.dim() {
            return Err(Error::InvariantViolated("no J-adapted basis found".into()));
        }
        self.orientation_sign_from(or, &vs)
    }

    pub fn require_orientation(&self, or: &Orientation) -> Result<()> {
        if self.orientation_sign(or)? != 1 {
            return Err(Error::OrientationMismatch);
        }
        Ok(())
    }

    /// `α ↦ α(J·, J·)`.
    pub fn act_on_2forms(&self, alpha: &KForm) -> Result<KForm> {
        self.check_dim(alpha.dim())?;
        let w = alpha.to_antisymmetric()?;
        KForm::from_antisymmetric(&self.matrix.transpose().mul(&w).mul(&self.matrix))
    }

    /// `u ∧ v ↦ Ju ∧ Jv`.
    pub fn act_on_2vectors(&self, u: &KVector) -> Result<KVector> {
        self.check_dim(u.dim())?;
        let m = u.to_antisymmetric()?;
        KVector::from_antisymmetric(&self.matrix.mul(&m).mul(&self.matrix.transpose()))
    }

    /// `(α ± Jα) / 2`.
    pub fn project_form(&self, alpha: &KForm, sign: i32) -> Result<KForm> {
        let j = self.act_on_2forms(alpha)?;
        let s = if sign > 0 { alpha.add(&j)? } else { alpha.sub(&j)? };
        Ok(s.scale(&scalar::ratio(1, 2)))
    }

    pub fn project_vector(&self, u: &KVector, sign: i32) -> Result<KVector> {
        let j = self.act_on_2vectors(u)?;
        let s = if sign > 0 { u.add(&j)? } else { u.sub(&j)? };
        Ok(s.scale(&scalar::ratio(1, 2)))
    }

    fn eigenspace_forms(&self, sign: i32) -> Result<Subspace<Forms>> {
        let n = self.dim();
        Subspace::<Forms>::full(n, 2)?.map(n, 2, |b| self.project_form(b, sign))
    }

    fn eigenspace_vectors(&self, sign: i32) -> Result<Subspace<Vectors>> {
        let n = self.dim();
        Subspace::<Vectors>::full(n, 2)?.map(n, 2, |b| self.project_vector(b, sign))
    }

    /// `Λ⁺_J(g*)`, the J-invariant 2-forms.
    pub fn lambda_plus(&self) -> Result<Subspace<Forms>> {
        self.eigenspace_forms(1)
    }

    /// `Λ⁻_J(g*)`, the J-anti-invariant 2-forms.
    pub fn lambda_minus(&self) -> Result<Subspace<Forms>> {
        self.eigenspace_forms(-1)
    }

    pub fn lambda_plus_vectors(&self) -> Result<Subspace<Vectors>> {
        self.eigenspace_vectors(1)
    }

    pub fn lambda_minus_vectors(&self) -> Result<Subspace<Vectors>> {
        self.eigenspace_vectors(-1)
    }

    fn require_four(&self) -> Result<()> {
        if self.dim() != 4 {
            return Err(Error::UnsupportedDimension {
                required: 4,
                found: self.dim(),
            });
        }
        Ok(())
    }

    /// Plücker data for the chart `(i, j)`, `1 ≤ i < j ≤ 4`. The chart is
    /// relabelled so that `(i, j)` becomes `(1, 3)` and the complementary
    /// pair, in increasing order, becomes `(2, 4)`.
    pub fn chart_data(&self, i: usize, j: usize) -> Result<ChartData> {
        self.require_four()?;
        if !(1 <= i && i < j && j <= 4) {
            return Err(Error::InvalidChart { i, j });
        }
        let rest: Vec<usize> = (1..=4).filter(|&x| x != i && x != j).collect();
        let relabel = [i, rest[0], j, rest[1]];
        let a = |h: usize, k: usize| self.matrix[(relabel[h - 1] - 1, relabel[k - 1] - 1)].clone();
        let plucker: [[Scalar; 4]; 4] = std::array::from_fn(|h| {
            std::array::from_fn(|k| a(2, h + 1) * a(4, k + 1) - a(2, k + 1) * a(4, h + 1))
        });
        let data = ChartData {
            chart: (i, j),
            relabel,
            plucker,
        };
        if data.p(1, 3).is_zero() {
            return Err(Error::InvalidChart { i, j });
        }
        Ok(data)
    }

    /// `Λ⁻_J` from the explicit chart formula
    /// `span{e^{24} - Σ_{h<k} p_hk e^{hk}, Σ_h (a_2h e^{4h} - a_4h e^{2h})}`.
    pub fn lambda_minus_plucker(&self, i: usize, j: usize) -> Result<Subspace<Forms>> {
        let data = self.chart_data(i, j)?;
        let sigma = data.relabel;
        let a = |h: usize, k: usize| self.matrix[(sigma[h - 1] - 1, sigma[k - 1] - 1)].clone();
        let e = |c: Scalar, h: usize, k: usize| KForm::term(4, c, &[sigma[h - 1], sigma[k - 1]]);

        let mut first = e(scalar::one(), 2, 4)?;
        for h in 1..=4 {
            for k in (h + 1)..=4 {
                first = first.sub(&e(data.p(h, k).clone(), h, k)?)?;
            }
        }
        let mut second = KForm::zero(4, 2)?;
        for h in 1..=4 {
            if h != 4 {
                second = second.add(&e(a(2, h), 4, h)?)?;
            }
            if h != 2 {
                second = second.sub(&e(a(4, h), 2, h)?)?;
            }
        }
        Subspace::span(4, 2, [&first, &second])
    }

    /// `N_J(u, v) = [u, v] - J[Ju, v] - J[u, Jv] - [Ju, Jv]`.
    pub fn nijenhuis(&self, g: &LieAlgebra, u: &[Scalar], v: &[Scalar]) -> Result<Vec<Scalar>> {
        self.check_dim(g.dim())?;
        self.check_dim(u.len())?;
        self.check_dim(v.len())?;
        let ju = self.apply(u);
        let jv = self.apply(v);
        let a = g.bracket(u, v);
        let b = self.apply(&g.bracket(&ju, v));
        let c = self.apply(&g.bracket(u, &jv));
        let d = g.bracket(&ju, &jv);
        Ok((0..self.dim())
            .map(|k| &a[k] - &b[k] - &c[k] - &d[k])
            .collect())
    }

    pub fn is_integrable(&self, g: &LieAlgebra) -> Result<bool> {
        let n = self.dim();
        let e = |i: usize| {
            let mut v = vec![scalar::zero(); n];
            v[i] = scalar::one();
            v
        };
        for i in 0..n {
            for j in (i + 1)..n {
                if self.nijenhuis(g, &e(i), &e(j))?.iter().any(|x| !x.is_zero()) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `Λ⁻_J ⊂ Z`, a sufficient condition for integrability in dimension 4.
    pub fn integrable_sufficient(&self, g: &LieAlgebra) -> Result<bool> {
        self.require_four()?;
        self.check_dim(g.dim())?;
        g.cocycles(2)?.contains(&self.lambda_minus()?)
    }

    /// `h̃ = (h + h(J·, J·)) / 2` and `φ(u, v) = h̃(Ju, v)`.
    pub fn hermitian_data(&self, h: &InnerProduct) -> Result<HermitianData> {
        self.check_dim(h.dim())?;
        let a = &self.matrix;
        let metric = h
            .gram()
            .add(&a.transpose().mul(h.gram()).mul(a))
            .scale(&scalar::ratio(1, 2));
        let fundamental_form = KForm::from_antisymmetric(&a.transpose().mul(&metric))?;
        Ok(HermitianData {
            metric,
            fundamental_form,
        })
    }

    /// `G(u, v) = (ω(u, Jv) + ω(v, Ju)) / 2`.
    pub fn taming_gram(&self, omega: &KForm) -> Result<Matrix> {
        self.check_dim(omega.dim())?;
        let wa = omega.to_antisymmetric()?.mul(&self.matrix);
        Ok(wa.add(&wa.transpose()).scale(&scalar::ratio(1, 2)))
    }

    /// `ω(v, Jv) > 0` for every nonzero `v` (no closedness required).
    pub fn is_positive_on(&self, omega: &KForm) -> Result<bool> {
        Ok(self.taming_gram(omega)?.is_positive_definite())
    }

    pub fn is_tamed_by(&self, g: &LieAlgebra, omega: &KForm) -> Result<bool> {
        self.check_dim(g.dim())?;
        Ok(g.d(omega)?.is_zero() && self.is_positive_on(omega)?)
    }

    pub fn is_compatible_with(&self, g: &LieAlgebra, omega: &KForm) -> Result<bool> {
        Ok(self.is_tamed_by(g, omega)? && self.act_on_2forms(omega)? == *omega)
    }
}

impl Orientation {
    /// The orientation `f_1 ∧ … ∧ f_n` or its negative, whichever `J`
    /// induces.
    pub fn induced_by(j: &AlmostComplexStructure) -> Result<Self> {
        let or = Orientation::standard(j.dim());
        Ok(if j.orientation_sign(&or)? > 0 { or } else { or.negated() })
    }
}

/// `v ∧ Jv`.
pub fn positive_bivector(j: &AlmostComplexStructure, v: &[Scalar]) -> Result<KVector> {
    crate::exterior::wedge_vectors(v, &j.apply(v))
}

/// True when the vector `v` is nonzero.
pub fn is_nonzero(v: &[Scalar]) -> bool {
    v.iter().any(|x| !x.is_zero())
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::StructureConstant;
    use crate::scalar::{int, ratio};

    fn f(terms: &[(i64, &[usize])]) -> KForm {
        KForm::from_terms(4, terms).unwrap()
    }

    fn j0() -> AlmostComplexStructure {
        AlmostComplexStructure::standard(4)
    }

    fn nil3() -> LieAlgebra {
        LieAlgebra::new(4, &[StructureConstant::new(1, 3, 2, int(1))]).unwrap()
    }

    fn e(i: usize) -> Vec<Scalar> {
        let mut v = vec![int(0); 4];
        v[i - 1] = int(1);
        v
    }

    #[test]
    fn standard_is_j0() {
        let j = j0();
        assert_eq!(j.apply(&e(1)), e(2));
        assert_eq!(j.apply(&e(3)), e(4));
        assert_eq!(j.apply(&e(2)), e(1).iter().map(|x| -x).collect::<Vec<_>>());
    }

    #[test]
    fn rejects_non_complex() {
        assert_eq!(
            AlmostComplexStructure::new(Matrix::identity(4)),
            Err(Error::NotComplexStructure)
        );
    }

    #[test]
    fn orientation_signs() {
        let or = Orientation::standard(4);
        let j = j0();
        assert_eq!(j.orientation_sign(&or).unwrap(), 1);
        assert_eq!(j.orientation_sign(&or.negated()).unwrap(), -1);
        assert_eq!(j.negated().orientation_sign(&or).unwrap(), 1);
        // pair independence
        assert_eq!(j.orientation_sign_from(&or, &[e(2), e(4)]).unwrap(), 1);
        assert_eq!(
            j.orientation_sign_from(&or, &[vec![int(1), int(0), int(1), int(0)], e(4)])
                .unwrap(),
            1
        );
        assert!(j.orientation_sign_from(&or, &[e(1), e(2)]).is_err());
    }

    #[test]
    fn action_examples() {
        let j = j0();
        assert_eq!(j.act_on_2forms(&f(&[(1, &[1, 2])])).unwrap(), f(&[(1, &[1, 2])]));
        assert_eq!(j.act_on_2forms(&f(&[(1, &[1, 3])])).unwrap(), f(&[(1, &[2, 4])]));
        let a = f(&[(1, &[1, 4]), (1, &[2, 3])]);
        assert_eq!(j.act_on_2forms(&a).unwrap(), a.neg());
        let u = KVector::from_terms(4, &[(1, &[1, 3])]).unwrap();
        assert_eq!(
            j.act_on_2vectors(&u).unwrap(),
            KVector::from_terms(4, &[(1, &[2, 4])]).unwrap()
        );
    }

    #[test]
    fn eigenspaces() {
        let j = j0();
        let minus = j.lambda_minus().unwrap();
        let expected = Subspace::span(
            4,
            2,
            [&f(&[(1, &[1, 3]), (-1, &[2, 4])]), &f(&[(1, &[1, 4]), (1, &[2, 3])])],
        )
        .unwrap();
        assert!(minus.same_as(&expected).unwrap());
        let plus = j.lambda_plus().unwrap();
        assert_eq!(plus.dim(), 4);
        for x in [f(&[(1, &[1, 2])]), f(&[(1, &[3, 4])]), f(&[(1, &[1, 4]), (-1, &[2, 3])])] {
            assert!(plus.contains_element(&x).unwrap());
        }
        assert_eq!(j.lambda_plus_vectors().unwrap().dim(), 4);
        assert_eq!(j.lambda_minus_vectors().unwrap().dim(), 2);
    }

    #[test]
    fn plucker_j0() {
        let j = j0();
        let data = j.chart_data(1, 3).unwrap();
        assert_eq!(*data.p(1, 3), int(1));
        let expected = Subspace::span(
            4,
            2,
            [&f(&[(1, &[2, 4]), (-1, &[1, 3])]), &f(&[(-1, &[1, 4]), (-1, &[2, 3])])],
        )
        .unwrap();
        let got = j.lambda_minus_plucker(1, 3).unwrap();
        assert!(got.same_as(&expected).unwrap());
        assert!(got.same_as(&j.lambda_minus().unwrap()).unwrap());
        // L_12 is J-invariant
        assert_eq!(j.chart_data(1, 2).unwrap_err(), Error::InvalidChart { i: 1, j: 2 });
    }

    #[test]
    fn plucker_matches_projector_on_all_valid_charts() {
        let or = Orientation::standard(4);
        for seed in 0..20 {
            let j = AlmostComplexStructure::random(&or, seed);
            let minus = j.lambda_minus().unwrap();
            for (a, b) in [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)] {
                if let Ok(s) = j.lambda_minus_plucker(a, b) {
                    assert!(s.same_as(&minus).unwrap(), "seed {seed} chart {a}{b}");
                }
            }
        }
    }

    #[test]
    fn invalid_chart_when_plane_invariant() {
        // J f1 = f3
        let m = Matrix::from_integers(&[&[0, 0, -1, 0], &[0, 0, 0, -1], &[1, 0, 0, 0], &[0, 1, 0, 0]]);
        let j = AlmostComplexStructure::new(m).unwrap();
        assert!(j.lambda_minus_plucker(1, 3).is_err());
    }

    #[test]
    fn nijenhuis_j0() {
        let j = j0();
        let g = nil3();
        assert_eq!(j.nijenhuis(&g, &e(1), &e(3)).unwrap(), e(2));
        assert!(!j.is_integrable(&g).unwrap());
        assert!(!j.integrable_sufficient(&g).unwrap());
        let ab = LieAlgebra::abelian(4);
        assert!(j.is_integrable(&ab).unwrap());
        assert!(j.integrable_sufficient(&ab).unwrap());
    }

    #[test]
    fn hermitian_j0() {
        let j = j0();
        let h = InnerProduct::euclidean(4);
        let data = j.hermitian_data(&h).unwrap();
        assert_eq!(data.fundamental_form, f(&[(1, &[1, 2]), (1, &[3, 4])]));
        assert_eq!(data.metric, Matrix::identity(4));
        let phi = &data.fundamental_form;
        assert_eq!(phi.wedge(phi).unwrap(), f(&[(2, &[1, 2, 3, 4])]).scale(&int(1)));
        assert!(j.lambda_plus().unwrap().contains_element(phi).unwrap());
    }

    #[test]
    fn hermitian_symmetrization_for_general_metric() {
        let j = j0();
        let gram = Matrix::from_integers(&[&[2, 1, 0, 0], &[1, 3, 0, 1], &[0, 0, 1, 0], &[0, 1, 0, 4]]);
        let h = InnerProduct::new(gram).unwrap();
        let data = j.hermitian_data(&h).unwrap();
        let a = j.matrix();
        assert_eq!(a.transpose().mul(&data.metric).mul(a), data.metric);
        assert!(data.metric.is_positive_definite());
        assert!(j.lambda_plus().unwrap().contains_element(&data.fundamental_form).unwrap());
        let again = j.hermitian_data(&InnerProduct::new(data.metric.clone()).unwrap()).unwrap();
        assert_eq!(again.metric, data.metric);
    }

    #[test]
    fn taming() {
        let j = j0();
        let g = nil3();
        let omega = f(&[(1, &[1, 2]), (1, &[3, 4])]);
        assert!(j.is_compatible_with(&g, &omega).unwrap());
        assert!(!j.is_tamed_by(&g, &f(&[(1, &[1, 2]), (-1, &[3, 4])])).unwrap());
        let beta = f(&[(1, &[1, 4]), (1, &[2, 3])]);
        assert!(!j.is_tamed_by(&g, &beta).unwrap());
        assert!(j.taming_gram(&beta).unwrap().is_zero());
        // tamed but not compatible
        let t = omega.add(&beta.scale(&ratio(1, 2))).unwrap();
        assert!(j.is_tamed_by(&g, &t).unwrap());
        assert!(!j.is_compatible_with(&g, &t).unwrap());
    }

    #[test]
    fn random_structures() {
        let or = Orientation::standard(4);
        let mut seen = std::collections::BTreeSet::new();
        for seed in 0..100 {
            let j = AlmostComplexStructure::random(&or, seed);
            assert_eq!(j.orientation_sign(&or).unwrap(), 1);
            seen.insert(format!("{:?}", j.matrix()));
        }
        assert!(seen.len() > 95);
        let neg = or.negated();
        assert_eq!(AlmostComplexStructure::random(&neg, 3).orientation_sign(&neg).unwrap(), 1);
        assert_eq!(
            AlmostComplexStructure::conjugated_standard(&Matrix::identity(4)).unwrap(),
            AlmostComplexStructure::standard(4)
        );
    }

    #[test]
    fn induced_orientation() {
        let j = j0();
        assert_eq!(Orientation::induced_by(&j).unwrap().sign(), 1);
        let flip = Matrix::from_integers(&[&[-1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        let k = AlmostComplexStructure::conjugated_standard(&flip).unwrap();
        assert_eq!(Orientation::induced_by(&k).unwrap().sign(), -1);
        assert_eq!(
            AlmostComplexStructure::oriented(k.matrix().clone(), &Orientation::standard(4)),
            Err(Error::OrientationMismatch)
        );
    }

    #[test]
    fn positive_bivectors_are_simple() {
        let j = AlmostComplexStructure::random(&Orientation::standard(4), 7);
        let w = positive_bivector(&j, &[int(1), int(-2), int(0), int(3)]).unwrap();
        assert!(crate::exterior::is_simple(&w).unwrap());
    }
}
