//! Linear subspaces of a fixed `Λ^k`, represented by an independent basis.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exterior::{basis_indices, binomial, Graded, Variance};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub struct Subspace<V: Variance> {
    dim: usize,
    grade: usize,
    basis: Vec<Graded<V>>,
}

impl<V: Variance> Subspace<V> {
    pub fn zero(dim: usize, grade: usize) -> Result<Self> {
        Graded::<V>::zero(dim, grade)?;
        Ok(Self {
            dim,
            grade,
            basis: Vec::new(),
        })
    }

    pub fn full(dim: usize, grade: usize) -> Result<Self> {
        let basis = basis_indices(dim, grade)
            .into_iter()
            .map(|mi| Graded::from_multi_index(dim, mi, crate::scalar::one()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { dim, grade, basis })
    }

    /// Span of the generators; dependent generators are dropped greedily, so
    /// the kept basis is a subset of the input in input order.
    pub fn span<'a, I>(dim: usize, grade: usize, generators: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Graded<V>>,
    {
        let mut out = Self::zero(dim, grade)?;
        for g in generators {
            out.check_element(g)?;
            if !out.contains_element(g)? {
                out.basis.push(g.clone());
            }
        }
        Ok(out)
    }

    /// Span of coordinate rows (lexicographic basis order).
    pub fn from_coordinate_rows(dim: usize, grade: usize, rows: &[Vec<Scalar>]) -> Result<Self> {
        let elems = rows
            .iter()
            .map(|r| Graded::<V>::from_coords(dim, grade, r))
            .collect::<Result<Vec<_>>>()?;
        Self::span(dim, grade, &elems)
    }

    fn check_element(&self, x: &Graded<V>) -> Result<()> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.dim(),
            });
        }
        if x.grade() != self.grade {
            return Err(Error::GradeMismatch {
                expected: self.grade,
                found: x.grade(),
            });
        }
        Ok(())
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
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

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        binomial(self.dim, self.grade)
    }

    pub fn space_dim(&self) -> usize {
        self.dim
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn basis(&self) -> &[Graded<V>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Basis vectors as rows of a `dim × ambient_dim` matrix.
    pub fn coordinate_matrix(&self) -> Matrix {
        let rows: Vec<Vec<Scalar>> = self.basis.iter().map(Graded::coords).collect();
        Matrix::from_rows(&rows, self.ambient_dim())
    }

    /// The reduced echelon basis, with pivots searched in `order` (a
    /// permutation of coordinate positions). Two subspaces are equal iff
    /// their echelon bases agree for any fixed order.
    pub fn echelon_basis_with_order(&self, order: &[usize]) -> Vec<Graded<V>> {
        let (r, _) = self.coordinate_matrix().rref_with_order(order);
        r.to_rows()
            .iter()
            .map(|row| Graded::from_coords(self.dim, self.grade, row).expect("shape is fixed"))
            .collect()
    }

    pub fn echelon_basis(&self) -> Vec<Graded<V>> {
        let order: Vec<usize> = (0..self.ambient_dim()).collect();
        self.echelon_basis_with_order(&order)
    }

    /// Coordinates of `x` in this subspace's basis, if `x` lies in it.
    pub fn coordinates_of(&self, x: &Graded<V>) -> Result<Option<Vec<Scalar>>> {
        self.check_element(x)?;
        if self.basis.is_empty() {
            return Ok(if x.is_zero() { Some(Vec::new()) } else { None });
        }
        // columns are basis vectors
        let a = self.coordinate_matrix().transpose();
        Ok(a.solve(&x.coords()))
    }

    pub fn contains_element(&self, x: &Graded<V>) -> Result<bool> {
        Ok(self.coordinates_of(x)?.is_some())
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Self) -> Result<bool> {
        self.check_ambient(other)?;
        for b in &other.basis {
            if !self.contains_element(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn same_as(&self, other: &Self) -> Result<bool> {
        Ok(self.dim() == other.dim() && self.contains(other)?)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Self::span(self.dim, self.grade, self.basis.iter().chain(&other.basis))
    }

    /// Intersection via the kernel of `[A^T | -B^T]`: each kernel vector
    /// `(x, y)` gives a common element `Σ x_i a_i = Σ y_j b_j`.
    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        if self.basis.is_empty() || other.basis.is_empty() {
            return Self::zero(self.dim, self.grade);
        }
        let a = self.coordinate_matrix();
        let b = other.coordinate_matrix();
        let stacked = a.vstack(&b.neg()).transpose();
        let kernel = stacked.nullspace();
        let elems: Vec<Graded<V>> = kernel
            .iter()
            .map(|k| {
                let terms: Vec<(Scalar, &Graded<V>)> = k[..self.basis.len()]
                    .iter()
                    .cloned()
                    .zip(&self.basis)
                    .filter(|(c, _)| !c.is_zero())
                    .collect();
                Graded::combination(self.dim, self.grade, &terms)
            })
            .collect::<Result<_>>()?;
        Self::span(self.dim, self.grade, &elems)
    }

    /// Image of a linear map given on elements.
    pub fn map<W: Variance, F>(&self, dim: usize, grade: usize, f: F) -> Result<Subspace<W>>
    where
        F: Fn(&Graded<V>) -> Result<Graded<W>>,
    {
        let images = self.basis.iter().map(f).collect::<Result<Vec<_>>>()?;
        Subspace::span(dim, grade, &images)
    }
}

impl<V: Variance> fmt::Debug for Subspace<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.basis.iter().map(|b| b.to_string()).collect();
        write!(f, "span{{{}}}", items.join(", "))
    }
}
