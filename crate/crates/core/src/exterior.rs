//! Exterior algebra over an `n`-dimensional space with exact coefficients.
//!
//! Elements are sparse maps from sorted multi-indices to rationals. The same
//! storage type serves both k-vectors (`f_I`) and k-forms (`f^I`); a marker
//! type keeps the two apart so that only a vector can be paired with a form.
//!
//! Indices in the public API are 1-based: `KForm::basis(4, &[1, 3])` is
//! `f^1 ∧ f^3`. Pairing uses the determinant convention, so
//! `evaluate(f_I, f^J)` is `1` when `I = J` and `0` otherwise.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{self, Scalar};

/// Largest supported ambient dimension (multi-indices are bit sets).
pub const MAX_DIM: usize = 32;

/// A strictly increasing tuple of basis indices, stored as a bit set.
///
/// Ordering is lexicographic on the index tuple, so `{1,2} < {1,3} < {2,3}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct MultiIndex(u32);

impl MultiIndex {
    pub const EMPTY: MultiIndex = MultiIndex(0);

    /// From 1-based indices in any order. Returns the sorted index and the
    /// sign of the sorting permutation.
    pub fn from_indices(indices: &[usize], dim: usize) -> Result<(MultiIndex, i32)> {
        let mut mask = 0u32;
        let mut sign = 1;
        for &i in indices {
            if i == 0 || i > dim || i > MAX_DIM {
                return Err(Error::IndexOutOfRange { index: i, dim });
            }
            let bit = 1u32 << (i - 1);
            if mask & bit != 0 {
                return Err(Error::RepeatedIndex(i));
            }
            // each already-present larger index is one inversion
            if (mask & !(bit | (bit - 1))).count_ones() % 2 == 1 {
                sign = -sign;
            }
            mask |= bit;
        }
        Ok((MultiIndex(mask), sign))
    }

    pub fn grade(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn bits(&self) -> u32 {
        self.0
    }

    /// 1-based indices in increasing order.
    pub fn indices(&self) -> Vec<usize> {
        (0..MAX_DIM).filter(|b| self.0 >> b & 1 == 1).map(|b| b + 1).collect()
    }

    pub fn max_index(&self) -> usize {
        MAX_DIM - self.0.leading_zeros() as usize
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && i <= MAX_DIM && self.0 >> (i - 1) & 1 == 1
    }

    /// Complement inside `{1..dim}`.
    pub fn complement(&self, dim: usize) -> MultiIndex {
        let full = if dim == 32 { u32::MAX } else { (1u32 << dim) - 1 };
        MultiIndex(full & !self.0)
    }

    /// `f_I ∧ f_J = sign · f_{I ∪ J}`, or `None` when the sets overlap.
    pub fn wedge(&self, other: &MultiIndex) -> Option<(MultiIndex, i32)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        // inversions: pairs (a in self, b in other) with a > b
        let mut inversions = 0u32;
        let mut rest = other.0;
        while rest != 0 {
            let b = rest.trailing_zeros();
            rest &= rest - 1;
            inversions += (self.0 >> b).count_ones();
        }
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        Some((MultiIndex(self.0 | other.0), sign))
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.indices().cmp(&other.indices())
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.indices().iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", s.join(","))
    }
}

/// All grade-`k` multi-indices in `{1..n}`, lexicographically ordered.
/// This is the coordinate order used by `coords` / `from_coords`.
pub fn basis_indices(n: usize, k: usize) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut combo: Vec<usize> = (0..k).collect();
    loop {
        out.push(MultiIndex(combo.iter().fold(0u32, |m, &i| m | 1 << i)));
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if combo[i] < n - k + i {
                combo[i] += 1;
                for j in i + 1..k {
                    combo[j] = combo[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Binomial coefficient, the dimension of `Λ^k` of an `n`-space.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

mod sealed {
    pub trait Sealed {}
}

/// Distinguishes vectors from forms at the type level.
pub trait Variance: sealed::Sealed + Copy + Clone + fmt::Debug + Send + Sync + 'static {
    /// `"f_"` for vectors, `"f^"` for forms.
    const PREFIX: &'static str;
}

/// Marker for elements of `Λ^k(g)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Vectors;

/// Marker for elements of `Λ^k(g*)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Forms;

impl sealed::Sealed for Vectors {}
impl sealed::Sealed for Forms {}

impl Variance for Vectors {
    const PREFIX: &'static str = "f_";
}

impl Variance for Forms {
    const PREFIX: &'static str = "f^";
}

/// A homogeneous element of the exterior algebra.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graded<V: Variance> {
    dim: usize,
    grade: usize,
    coeffs: BTreeMap<MultiIndex, Scalar>,
    _variance: PhantomData<V>,
}

pub type KVector = Graded<Vectors>;
pub type KForm = Graded<Forms>;

impl<V: Variance> Graded<V> {
    pub fn zero(dim: usize, grade: usize) -> Result<Self> {
        if dim > MAX_DIM {
            return Err(Error::UnsupportedDimension {
                required: MAX_DIM,
                found: dim,
            });
        }
        if grade > dim {
            return Err(Error::GradeOverflow { grade, dim });
        }
        Ok(Self {
            dim,
            grade,
            coeffs: BTreeMap::new(),
            _variance: PhantomData,
        })
    }

    /// The basis element `f_{i1} ∧ … ∧ f_{ik}` (or `f^{…}`); indices are
    /// 1-based and may be unsorted, in which case the permutation sign is
    /// applied.
    pub fn basis(dim: usize, indices: &[usize]) -> Result<Self> {
        Self::term(dim, scalar::one(), indices)
    }

    pub fn term(dim: usize, coeff: Scalar, indices: &[usize]) -> Result<Self> {
        let mut out = Self::zero(dim, indices.len())?;
        let (mi, sign) = MultiIndex::from_indices(indices, dim)?;
        let c = if sign < 0 { -coeff } else { coeff };
        out.insert(mi, c);
        Ok(out)
    }

    /// Sum of integer-weighted basis terms, e.g.
    /// `KForm::from_terms(4, &[(1, &[1, 2]), (1, &[3, 4])])` is `f^{12} + f^{34}`.
    pub fn from_terms(dim: usize, terms: &[(i64, &[usize])]) -> Result<Self> {
        let grade = terms.first().map_or(0, |(_, idx)| idx.len());
        let mut out = Self::zero(dim, grade)?;
        for (c, idx) in terms {
            out = out.add(&Self::term(dim, scalar::int(*c), idx)?)?;
        }
        Ok(out)
    }

    pub fn from_multi_index(dim: usize, mi: MultiIndex, coeff: Scalar) -> Result<Self> {
        let mut out = Self::zero(dim, mi.grade())?;
        if mi.max_index() > dim {
            return Err(Error::IndexOutOfRange {
                index: mi.max_index(),
                dim,
            });
        }
        out.insert(mi, coeff);
        Ok(out)
    }

    /// Coordinates in the lexicographic basis of [`basis_indices`].
    pub fn from_coords(dim: usize, grade: usize, coords: &[Scalar]) -> Result<Self> {
        let basis = basis_indices(dim, grade);
        if coords.len() != basis.len() {
            return Err(Error::CoordinateLength {
                expected: basis.len(),
                found: coords.len(),
            });
        }
        let mut out = Self::zero(dim, grade)?;
        for (mi, c) in basis.into_iter().zip(coords) {
            out.insert(mi, c.clone());
        }
        Ok(out)
    }

    /// A grade-1 element from its components.
    pub fn from_vec(components: &[Scalar]) -> Result<Self> {
        Self::from_coords(components.len(), 1, components)
    }

    pub fn coords(&self) -> Vec<Scalar> {
        basis_indices(self.dim, self.grade)
            .iter()
            .map(|mi| self.coeff(mi))
            .collect()
    }

    fn insert(&mut self, mi: MultiIndex, c: Scalar) {
        if c.is_zero() {
            self.coeffs.remove(&mi);
        } else {
            self.coeffs.insert(mi, c);
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn coeff(&self, mi: &MultiIndex) -> Scalar {
        self.coeffs.get(mi).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Coefficient of the basis element with the given (sorted, 1-based)
    /// indices. Out-of-range or unsorted input reads as zero.
    pub fn coeff_of(&self, indices: &[usize]) -> Scalar {
        match MultiIndex::from_indices(indices, self.dim) {
            Ok((mi, 1)) => self.coeff(&mi),
            Ok((mi, _)) => -self.coeff(&mi),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Scalar)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        if self.grade != other.grade {
            return Err(Error::GradeMismatch {
                expected: self.grade,
                found: other.grade,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (mi, c) in &other.coeffs {
            let v = out.coeff(mi) + c;
            out.insert(*mi, v);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-scalar::one())
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = Self {
            dim: self.dim,
            grade: self.grade,
            coeffs: BTreeMap::new(),
            _variance: PhantomData,
        };
        if !s.is_zero() {
            for (mi, c) in &self.coeffs {
                out.coeffs.insert(*mi, c * s);
            }
        }
        out
    }

    /// Linear combination `Σ c_i x_i`; all terms must share a shape.
    pub fn combination(dim: usize, grade: usize, terms: &[(Scalar, &Self)]) -> Result<Self> {
        let mut out = Self::zero(dim, grade)?;
        for (c, x) in terms {
            out = out.add(&x.scale(c))?;
        }
        Ok(out)
    }

    /// Exterior product. Graded-commutative:
    /// `a ∧ b = (-1)^{pq} b ∧ a`.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let grade = self.grade + other.grade;
        let mut out = Self::zero(self.dim, grade)?;
        let mut acc: BTreeMap<MultiIndex, Scalar> = BTreeMap::new();
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                if let Some((mi, sign)) = a.wedge(b) {
                    let v = ca * cb;
                    let e = acc.entry(mi).or_insert_with(Scalar::zero);
                    if sign > 0 {
                        *e += v;
                    } else {
                        *e -= v;
                    }
                }
            }
        }
        for (mi, c) in acc {
            out.insert(mi, c);
        }
        Ok(out)
    }

    /// Components of a grade-1 element.
    pub fn as_vec(&self) -> Result<Vec<Scalar>> {
        if self.grade != 1 {
            return Err(Error::GradeMismatch {
                expected: 1,
                found: self.grade,
            });
        }
        Ok(self.coords())
    }

    /// The antisymmetric coefficient matrix `M` of a grade-2 element,
    /// `M[a][b] = coefficient of f_{ab}` for `a < b`.
    ///
    /// For a 2-form this is the matrix of the bilinear map:
    /// `α(u, v) = uᵀ M v`.
    pub fn to_antisymmetric(&self) -> Result<Matrix> {
        if self.grade != 2 {
            return Err(Error::GradeMismatch {
                expected: 2,
                found: self.grade,
            });
        }
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (mi, c) in &self.coeffs {
            let idx = mi.indices();
            let (a, b) = (idx[0] - 1, idx[1] - 1);
            m[(a, b)] = c.clone();
            m[(b, a)] = -c.clone();
        }
        Ok(m)
    }

    /// Inverse of [`Graded::to_antisymmetric`]; reads the strict upper triangle.
    pub fn from_antisymmetric(m: &Matrix) -> Result<Self> {
        let n = m.nrows();
        let mut out = Self::zero(n, 2)?;
        for a in 0..n {
            for b in a + 1..n {
                out.insert(MultiIndex(1 << a | 1 << b), m[(a, b)].clone());
            }
        }
        Ok(out)
    }
}

impl<V: Variance> fmt::Debug for Graded<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<V: Variance> fmt::Display for Graded<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mi, c) in &self.coeffs {
            let label: String = if mi.grade() == 0 {
                "1".to_string()
            } else {
                let idx: Vec<String> = mi.indices().iter().map(usize::to_string).collect();
                let sep = if self.dim > 9 { "," } else { "" };
                format!("{}{{{}}}", V::PREFIX, idx.join(sep))
            };
            let neg = scalar::sign(c) < 0;
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if mag.is_one() {
                write!(f, "{label}")?;
            } else {
                write!(f, "{}*{label}", scalar::format(&mag))?;
            }
            first = false;
        }
        Ok(())
    }
}

/// The natural pairing `Ψ^k(u, α) = α(u)`.
pub fn evaluate(u: &KVector, alpha: &KForm) -> Result<Scalar> {
    if u.dim != alpha.dim {
        return Err(Error::DimensionMismatch {
            expected: u.dim,
            found: alpha.dim,
        });
    }
    if u.grade != alpha.grade {
        return Err(Error::GradeMismatch {
            expected: u.grade,
            found: alpha.grade,
        });
    }
    Ok(u
        .coeffs
        .iter()
        .filter_map(|(mi, c)| alpha.coeffs.get(mi).map(|d| c * d))
        .sum())
}

/// Evaluates a 2-form on a pair of vectors, `α(u, v)`.
pub fn form_on_pair(alpha: &KForm, u: &[Scalar], v: &[Scalar]) -> Result<Scalar> {
    let m = alpha.to_antisymmetric()?;
    if u.len() != alpha.dim || v.len() != alpha.dim {
        return Err(Error::DimensionMismatch {
            expected: alpha.dim,
            found: u.len().max(v.len()),
        });
    }
    Ok(crate::linalg::dot(u, &m.mul_vec(v)))
}

/// A bivector is simple iff `u ∧ u = 0`.
pub fn is_simple(u: &KVector) -> Result<bool> {
    if u.grade != 2 {
        return Err(Error::GradeMismatch {
            expected: 2,
            found: u.grade,
        });
    }
    Ok(u.dim < 4 || u.wedge(u)?.is_zero())
}

/// Factors a nonzero simple bivector as `v ∧ w`.
///
/// With `U` the antisymmetric coefficient matrix and `U_ij ≠ 0`, the
/// column `U_{·j}` and row `U_{i·}` both lie in the plane of `u`, and
/// `U_{·j} ∧ U_{i·} = U_ij · u`.
pub fn factor_simple(u: &KVector) -> Result<(Vec<Scalar>, Vec<Scalar>)> {
    if u.grade != 2 {
        return Err(Error::GradeMismatch {
            expected: 2,
            found: u.grade,
        });
    }
    let (mi, c) = u.coeffs.iter().next().ok_or(Error::ZeroElement)?;
    let idx = mi.indices();
    let (i, j) = (idx[0] - 1, idx[1] - 1);
    let m = u.to_antisymmetric()?;
    let inv = c.recip();
    let v: Vec<Scalar> = m.column(j).iter().map(|x| x * &inv).collect();
    let w: Vec<Scalar> = m.row(i).to_vec();
    let rebuilt = KVector::from_vec(&v)?.wedge(&KVector::from_vec(&w)?)?;
    if &rebuilt != u {
        return Err(Error::NotSimple);
    }
    Ok((v, w))
}

/// `v ∧ w` for grade-1 components.
pub fn wedge_vectors<V: Variance>(v: &[Scalar], w: &[Scalar]) -> Result<Graded<V>> {
    Graded::<V>::from_vec(v)?.wedge(&Graded::<V>::from_vec(w)?)
}


#[derive(serde::Serialize, serde::Deserialize)]
struct TermRepr {
    indices: Vec<usize>,
    #[serde(with = "crate::scalar::serde_str")]
    coeff: Scalar,
}

#[derive(serde::Serialize, serde::Deserialize)]
struct GradedRepr {
    dim: usize,
    grade: usize,
    terms: Vec<TermRepr>,
}

/// Serialized as `{"dim", "grade", "terms": [{"indices", "coeff"}]}` with
/// 1-based indices and coefficients as `p/q` strings.
impl<V: Variance> serde::Serialize for Graded<V> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = GradedRepr {
            dim: self.dim,
            grade: self.grade,
            terms: self
                .coeffs
                .iter()
                .map(|(mi, c)| TermRepr {
                    indices: mi.indices(),
                    coeff: c.clone(),
                })
                .collect(),
        };
        serde::Serialize::serialize(&repr, s)
    }
}

impl<'de, V: Variance> serde::Deserialize<'de> for Graded<V> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = GradedRepr::deserialize(d)?;
        let mut out = Self::zero(repr.dim, repr.grade).map_err(D::Error::custom)?;
        for t in repr.terms {
            if t.indices.len() != repr.grade {
                return Err(D::Error::custom("term grade does not match"));
            }
            let term = Self::term(repr.dim, t.coeff, &t.indices).map_err(D::Error::custom)?;
            out = out.add(&term).map_err(D::Error::custom)?;
        }
        Ok(out)
    }
}
