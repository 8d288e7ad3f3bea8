//! Volume-normalized wedge pairings and the duality isomorphisms between
//! k-vectors and complementary forms.
//!
//! With a top vector `ζ` and top form `η` normalized by `η(ζ) = 1`:
//!
//! * `Φ_ζ(α, β) = (α ∧ β)(ζ)` pairs `Λ^k(g*)` with `Λ^{n-k}(g*)`,
//! * `Φ_η(u, w) = η(u ∧ w)` pairs `Λ^k(g)` with `Λ^{n-k}(g)`,
//! * `G_η(u)(w) = η(u ∧ w)` and `G_ζ` (its inverse) identify the two sides.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exterior::{basis_indices, evaluate, Forms, Graded, KForm, KVector, MultiIndex, Variance, Vectors};
use crate::lie::LieAlgebra;
use crate::linalg::{congruence_diagonalize, Inertia, Matrix};
use crate::scalar::{self, Scalar};
use crate::subspace::Subspace;

/// A pair `(ζ, η)` of top-degree vector and form with `η(ζ) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    zeta: KVector,
    eta: KForm,
}

fn top_index(n: usize) -> Vec<usize> {
    (1..=n).collect()
}

impl Orientation {
    /// `ζ = f_1 ∧ … ∧ f_n`, `η = f^1 ∧ … ∧ f^n`.
    pub fn standard(n: usize) -> Self {
        Self::scaled(n, scalar::one()).expect("standard orientation")
    }

    /// `ζ = c · f_{1…n}`, `η = c⁻¹ · f^{1…n}`.
    pub fn scaled(n: usize, c: Scalar) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::InvalidOrientation("zeta must be nonzero".into()));
        }
        let zeta = KVector::term(n, c.clone(), &top_index(n))?;
        let eta = KForm::term(n, c.recip(), &top_index(n))?;
        Ok(Self { zeta, eta })
    }

    /// Orientation from a nonzero top-degree vector; `η` is the dual form.
    pub fn from_zeta(zeta: KVector) -> Result<Self> {
        let n = zeta.dim();
        if zeta.grade() != n {
            return Err(Error::GradeMismatch {
                expected: n,
                found: zeta.grade(),
            });
        }
        let c = zeta.coeff_of(&top_index(n));
        Self::scaled(n, c)
    }

    pub fn negated(&self) -> Self {
        Self {
            zeta: self.zeta.neg(),
            eta: self.eta.neg(),
        }
    }

    pub fn dim(&self) -> usize {
        self.zeta.dim()
    }

    pub fn zeta(&self) -> &KVector {
        &self.zeta
    }

    pub fn eta(&self) -> &KForm {
        &self.eta
    }

    /// `+1` if `ζ` is a positive multiple of `f_{1…n}`, else `-1`.
    pub fn sign(&self) -> i32 {
        scalar::sign(&self.zeta.coeff_of(&top_index(self.dim())))
    }

    /// Whether another top vector defines the same orientation.
    pub fn agrees_with(&self, top: &KVector) -> bool {
        let c = top.coeff_of(&top_index(self.dim()));
        scalar::sign(&c) == self.sign()
    }

    fn check<V: Variance>(&self, x: &Graded<V>) -> Result<()> {
        if x.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: x.dim(),
            });
        }
        Ok(())
    }

    fn check_complementary(&self, p: usize, q: usize) -> Result<()> {
        if p + q != self.dim() {
            return Err(Error::GradeMismatch {
                expected: self.dim() - p,
                found: q,
            });
        }
        Ok(())
    }

    /// `Φ_ζ(α, β) = (α ∧ β)(ζ)`.
    pub fn phi_zeta(&self, alpha: &KForm, beta: &KForm) -> Result<Scalar> {
        self.check(alpha)?;
        self.check(beta)?;
        self.check_complementary(alpha.grade(), beta.grade())?;
        evaluate(&self.zeta, &alpha.wedge(beta)?)
    }

    /// `Φ_η(u, w) = η(u ∧ w)`.
    pub fn phi_eta(&self, u: &KVector, w: &KVector) -> Result<Scalar> {
        self.check(u)?;
        self.check(w)?;
        self.check_complementary(u.grade(), w.grade())?;
        evaluate(&u.wedge(w)?, &self.eta)
    }

    /// `G_η(u)`, the `(n-k)`-form `w ↦ η(u ∧ w)`.
    pub fn g_eta(&self, u: &KVector) -> Result<KForm> {
        self.check(u)?;
        let n = self.dim();
        let q = n - u.grade();
        let coords = basis_indices(n, q)
            .into_iter()
            .map(|mi| {
                let w = KVector::from_multi_index(n, mi, scalar::one())?;
                evaluate(&u.wedge(&w)?, &self.eta)
            })
            .collect::<Result<Vec<_>>>()?;
        KForm::from_coords(n, q, &coords)
    }

    /// `G_ζ(α)`, characterized by `⟨G_ζ(α), β⟩ = ζ(β ∧ α)`.
    pub fn g_zeta(&self, alpha: &KForm) -> Result<KVector> {
        self.check(alpha)?;
        let n = self.dim();
        let k = n - alpha.grade();
        let coords = basis_indices(n, k)
            .into_iter()
            .map(|mi| {
                let beta = KForm::from_multi_index(n, mi, scalar::one())?;
                evaluate(&self.zeta, &beta.wedge(alpha)?)
            })
            .collect::<Result<Vec<_>>>()?;
        KVector::from_coords(n, k, &coords)
    }

    /// Gram matrix `[Φ_ζ(b_i, b_j)]` of a list of middle-degree forms.
    pub fn gram_forms(&self, basis: &[KForm]) -> Result<Matrix> {
        let m = basis.len();
        let mut g = Matrix::zeros(m, m);
        for i in 0..m {
            for j in i..m {
                let v = self.phi_zeta(&basis[i], &basis[j])?;
                g[(j, i)] = v.clone();
                g[(i, j)] = v;
            }
        }
        Ok(g)
    }

    /// Gram matrix `[Φ_η(b_i, b_j)]` of middle-degree vectors.
    pub fn gram_vectors(&self, basis: &[KVector]) -> Result<Matrix> {
        let m = basis.len();
        let mut g = Matrix::zeros(m, m);
        for i in 0..m {
            for j in i..m {
                let v = self.phi_eta(&basis[i], &basis[j])?;
                g[(j, i)] = v.clone();
                g[(i, j)] = v;
            }
        }
        Ok(g)
    }

    fn check_middle<V: Variance>(&self, s: &Subspace<V>) -> Result<()> {
        let n = self.dim();
        if s.space_dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: s.space_dim(),
            });
        }
        if n % 2 != 0 || s.grade() * 2 != n {
            return Err(Error::GradeMismatch {
                expected: n / 2,
                found: s.grade(),
            });
        }
        Ok(())
    }

    /// Signature of `Φ_ζ` restricted to a subspace of middle-degree forms.
    /// The pairing is symmetric only when `n/2` is even; for other `n` the
    /// call is rejected.
    pub fn signature(&self, s: &Subspace<Forms>) -> Result<SignatureReport> {
        self.check_middle(s)?;
        self.check_symmetric()?;
        Ok(SignatureReport::from(congruence_diagonalize(&self.gram_forms(s.basis())?).inertia()))
    }

    /// Signature of `Φ_η` on a subspace of middle-degree vectors.
    pub fn signature_vectors(&self, s: &Subspace<Vectors>) -> Result<SignatureReport> {
        self.check_middle(s)?;
        self.check_symmetric()?;
        Ok(SignatureReport::from(congruence_diagonalize(&self.gram_vectors(s.basis())?).inertia()))
    }

    fn check_symmetric(&self) -> Result<()> {
        if (self.dim() / 2) % 2 != 0 {
            return Err(Error::UnsupportedDimension {
                required: 4,
                found: self.dim(),
            });
        }
        Ok(())
    }
}

/// `(positive, negative, null)` dimensions of a symmetric pairing on a subspace.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct SignatureReport {
    pub positive: usize,
    pub negative: usize,
    pub null: usize,
}

impl From<Inertia> for SignatureReport {
    fn from(i: Inertia) -> Self {
        Self {
            positive: i.positive,
            negative: i.negative,
            null: i.null,
        }
    }
}

impl SignatureReport {
    pub fn new(positive: usize, negative: usize, null: usize) -> Self {
        Self {
            positive,
            negative,
            null,
        }
    }

    pub fn dimension(&self) -> usize {
        self.positive + self.negative + self.null
    }
}

/// `b⁺(g)`: the positive index of `Φ_ζ` on the closed 2-forms of a
/// 4-dimensional unimodular algebra. Also checks `dim Z = b⁺ + 3` and
/// `dim B = 3 − b⁺`.
pub fn b_plus(g: &LieAlgebra, or: &Orientation) -> Result<usize> {
    require_unimodular_4d(g)?;
    if or.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: or.dim(),
        });
    }
    let z = g.cocycles(2)?;
    let b = g.coboundaries(2)?;
    let sig = or.signature(&z)?;
    let bp = sig.positive;
    if z.dim() != bp + 3 || b.dim() + bp != 3 {
        return Err(Error::InvariantViolated(format!(
            "dim Z = {}, dim B = {}, b+ = {bp}",
            z.dim(),
            b.dim()
        )));
    }
    Ok(bp)
}

pub(crate) fn require_unimodular_4d(g: &LieAlgebra) -> Result<()> {
    if g.dim() != 4 {
        return Err(Error::UnsupportedDimension {
            required: 4,
            found: g.dim(),
        });
    }
    if !g.is_unimodular() {
        return Err(Error::NotUnimodular);
    }
    Ok(())
}

/// Sign of `(f_I ∧ f_{I^c})` relative to `f_{1…n}`.
pub fn complement_sign(mi: &MultiIndex, n: usize) -> i32 {
    mi.wedge(&mi.complement(n)).map_or(0, |(_, s)| s)
}

/// Whether `Φ_ζ(x, x)` is positive.
pub fn is_positive_square(or: &Orientation, x: &KForm) -> Result<bool> {
    Ok(or.phi_zeta(x, x)?.is_positive())
}
