//! The five unimodular symplectic 4-dimensional Lie algebras and the
//! almost complex structures used as fixtures on them.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::acs::AlmostComplexStructure;
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::Matrix;
use crate::scalar::{self, int, Scalar};

/// Invariants stored with each entry and checked against recomputation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub b_plus: usize,
    pub betti: [usize; 5],
    pub unimodular: bool,
}

impl Expected {
    pub fn b2(&self) -> usize {
        self.betti[2]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Family {
    pub name: &'static str,
    pub params: &'static [&'static str],
    pub constraint: &'static str,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub title: &'static str,
    pub algebra: LieAlgebra,
    pub families: Vec<Family>,
    pub expected: Expected,
}

const NAMES: [&str; 5] = ["R4", "nil3xR", "nil4", "sol3xR", "r'30xR"];

const J_AB: Family = Family {
    name: "J_ab",
    params: &["a", "b"],
    constraint: "a^2 + b^2 != 0",
};

const J_0: Family = Family {
    name: "J_0",
    params: &[],
    constraint: "none",
};

const J_T: Family = Family {
    name: "J_t",
    params: &["t"],
    constraint: "|t| < 1",
};

pub fn catalog_list() -> Vec<&'static str> {
    NAMES.to_vec()
}

fn brackets(table: &[((usize, usize), &[(usize, i64)])]) -> LieAlgebra {
    let table: Vec<((usize, usize), Vec<(usize, Scalar)>)> = table
        .iter()
        .map(|(ij, terms)| (*ij, terms.iter().map(|(k, c)| (*k, int(*c))).collect()))
        .collect();
    LieAlgebra::from_brackets(4, &table).expect("catalog brackets are valid")
}

pub fn catalog_get(name: &str) -> Result<CatalogEntry> {
    let entry = match name {
        "R4" => CatalogEntry {
            name: "R4",
            title: "abelian R^4",
            algebra: LieAlgebra::abelian(4),
            families: vec![],
            expected: Expected {
                b_plus: 3,
                betti: [1, 4, 6, 4, 1],
                unimodular: true,
            },
        },
        "nil3xR" => CatalogEntry {
            name: "nil3xR",
            title: "nil^3 x R, [f1,f3] = f2",
            algebra: brackets(&[((1, 3), &[(2, 1)])]),
            families: vec![J_AB, J_0],
            expected: Expected {
                b_plus: 2,
                betti: [1, 3, 4, 3, 1],
                unimodular: true,
            },
        },
        "nil4" => CatalogEntry {
            name: "nil4",
            title: "nil^4, [f4,f2] = f1, [f4,f3] = f2",
            algebra: brackets(&[((4, 2), &[(1, 1)]), ((4, 3), &[(2, 1)])]),
            families: vec![J_T],
            expected: Expected {
                b_plus: 1,
                betti: [1, 2, 2, 2, 1],
                unimodular: true,
            },
        },
        "sol3xR" => CatalogEntry {
            name: "sol3xR",
            title: "sol^3 x R, [f4,f1] = f1, [f2,f4] = f2",
            algebra: brackets(&[((4, 1), &[(1, 1)]), ((2, 4), &[(2, 1)])]),
            families: vec![],
            expected: Expected {
                b_plus: 1,
                betti: [1, 2, 2, 2, 1],
                unimodular: true,
            },
        },
        "r'30xR" => CatalogEntry {
            name: "r'30xR",
            title: "r'_{3,0} x R, [f1,f3] = f2, [f2,f1] = f3",
            algebra: brackets(&[((1, 3), &[(2, 1)]), ((2, 1), &[(3, 1)])]),
            families: vec![],
            expected: Expected {
                b_plus: 1,
                betti: [1, 2, 2, 2, 1],
                unimodular: true,
            },
        },
        _ => return Err(Error::UnknownCatalogEntry(name.to_string())),
    };
    Ok(entry)
}

pub fn catalog_all() -> Vec<CatalogEntry> {
    NAMES.iter().map(|n| catalog_get(n).expect("listed")).collect()
}

impl CatalogEntry {
    pub fn family(&self, name: &str) -> Result<&Family> {
        self.families
            .iter()
            .find(|f| f.name == name)
            .ok_or_else(|| Error::UnknownFamily {
                entry: self.name.to_string(),
                family: name.to_string(),
            })
    }

    /// A member of one of this entry's families.
    pub fn family_j(&self, name: &str, params: &[Scalar]) -> Result<AlmostComplexStructure> {
        let family = self.family(name)?;
        if params.len() != family.params.len() {
            return Err(Error::ParameterConstraint(format!(
                "{} takes {} parameter(s), got {}",
                family.name,
                family.params.len(),
                params.len()
            )));
        }
        match family.name {
            "J_ab" => j_ab(&params[0], &params[1]),
            "J_t" => j_t(&params[0]),
            _ => Ok(j0()),
        }
    }
}

fn checked(m: Matrix) -> Result<AlmostComplexStructure> {
    AlmostComplexStructure::new(m)
        .map_err(|_| Error::InvariantViolated("family matrix does not square to -1".into()))
}

/// The family on `nil³ × ℝ` with `J f_1 = a f_2 + f_3 - b f_4`. It induces
/// the orientation `-f_1 ∧ f_2 ∧ f_3 ∧ f_4`.
pub fn j_ab(a: &Scalar, b: &Scalar) -> Result<AlmostComplexStructure> {
    if (a * a + b * b).is_zero() {
        return Err(Error::ParameterConstraint("a^2 + b^2 must be nonzero".into()));
    }
    let (z, o) = (scalar::zero(), scalar::one());
    let rows = vec![
        vec![z.clone(), z.clone(), -o.clone(), z.clone()],
        vec![a.clone(), z.clone(), -b.clone(), -o.clone()],
        vec![o.clone(), z.clone(), z.clone(), z.clone()],
        vec![-b.clone(), o, -a.clone(), z],
    ];
    checked(Matrix::from_rows(&rows, 4))
}

/// The family on `nil⁴`, defined for `|t| < 1`.
pub fn j_t(t: &Scalar) -> Result<AlmostComplexStructure> {
    if t.abs() >= Scalar::one() {
        return Err(Error::ParameterConstraint("|t| must be less than 1".into()));
    }
    let t2 = t * t;
    let o = scalar::one();
    let z = scalar::zero();
    let two_t = t * int(2);
    let rows = vec![
        vec![z.clone(), &t2 - &o, two_t.clone(), z.clone()],
        vec![&o - &t2, z.clone(), z.clone(), -two_t.clone()],
        vec![-two_t.clone(), z.clone(), z.clone(), &t2 - &o],
        vec![z.clone(), two_t, &o - &t2, z],
    ];
    checked(Matrix::from_rows(&rows, 4).scale(&(o + t2).recip()))
}

/// `J f_1 = f_2`, `J f_3 = f_4` on `nil³ × ℝ`, compatible with
/// `f^{12} + f^{34}`.
pub fn j0() -> AlmostComplexStructure {
    AlmostComplexStructure::standard(4)
}
