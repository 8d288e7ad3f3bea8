//! Tameness of almost complex structures on 4-dimensional unimodular Lie
//! algebras.
//!
//! With `Z`, `B` the closed and exact 2-forms and `Λ^±_J` the J-invariant
//! and anti-invariant 2-forms:
//!
//! * `h⁻_J = dim(Z ∩ Λ⁻_J)` and `h⁺_J = dim(Z ∩ Λ⁺_J) - dim(B ∩ Λ⁺_J)`;
//! * `J` is tamed iff `h⁻_J = b⁺ - 1` iff `B ∩ Λ⁺_J = 0`, and a tamed `J`
//!   always admits a compatible form;
//! * when `J` is not tamed, a nonzero `v` with `v ∧ Jv` a boundary is an
//!   exact certificate, since every closed form vanishes on it.
//!
//! Every function re-checks the dimension identities it relies on and
//! reports a violation as [`Error::InvariantViolated`].

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::acs::{positive_bivector, AlmostComplexStructure};
use crate::error::{Error, Result};
use crate::exterior::{evaluate, factor_simple, Forms, KForm, KVector, Vectors};
use crate::lie::LieAlgebra;
use crate::linalg::congruence_diagonalize;
use crate::pairing::{b_plus, require_unimodular_4d, Orientation, SignatureReport};
use crate::scalar::{self, Scalar};
use crate::subspace::Subspace;

/// Pivot order used for the canonical bases of `Z^±_J`: `f^{12}, f^{34},
/// f^{14}, f^{23}, f^{13}, f^{24}` (positions in the lexicographic basis).
pub const PAIRED_ORDER: [usize; 6] = [0, 5, 2, 3, 1, 4];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JCohomologyReport {
    pub h_plus: usize,
    pub h_minus: usize,
    pub b2: usize,
    pub b_plus: usize,
    /// Canonical basis of `Z⁺_J = Z ∩ Λ⁺_J`.
    pub plus_basis: Vec<KForm>,
    /// Elements of `plus_basis` whose classes form a basis of `H⁺_J`.
    pub plus_representatives: Vec<KForm>,
    /// Canonical basis of `Z⁻_J = Z ∩ Λ⁻_J`; its classes form a basis of
    /// `H⁻_J`.
    pub minus_basis: Vec<KForm>,
    pub cocycle_dim: usize,
    pub coboundary_dim: usize,
    /// `dim(B ∩ Λ⁺_J)`.
    pub invariant_coboundary_dim: usize,
    /// `dim(B ∩ Λ⁻_J)`.
    pub anti_invariant_coboundary_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    CompatibleForm { form: KForm },
    ObstructionVector {
        #[serde(with = "scalar::serde_str::vec")]
        vector: Vec<Scalar>,
        bivector: KVector,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub tamed: bool,
    pub almost_kahler: bool,
    pub integrable: bool,
    pub report: JCohomologyReport,
    /// Signature of the wedge pairing on `Z⁺_J`; `(1, b⁺, 0)` when tamed.
    pub plus_signature: SignatureReport,
    pub witness: Witness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeVerdict {
    pub in_compatible_cone: bool,
    pub in_tamed_cone: bool,
    /// Representative in `Z⁺_J` of the `H⁺_J` part.
    pub plus_part: KForm,
    /// Representative in `Z⁻_J` of the `H⁻_J` part.
    pub minus_part: KForm,
    /// `e²` of the `H⁺_J` part.
    #[serde(with = "scalar::serde_str")]
    pub square: Scalar,
    /// The bases the coordinates refer to.
    pub plus_basis: Vec<KForm>,
    pub minus_basis: Vec<KForm>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Feasibility {
    pub feasible: bool,
    pub witness: Option<KForm>,
    #[serde(with = "option_vec")]
    pub certificate: Option<Vec<Scalar>>,
    pub trials: usize,
}

mod option_vec {
    use crate::scalar::Scalar;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(x: &Option<Vec<Scalar>>, s: S) -> Result<S::Ok, S::Error> {
        x.as_ref()
            .map(|v| v.iter().map(crate::scalar::format).collect::<Vec<_>>())
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Vec<Scalar>>, D::Error> {
        use serde::de::Error as _;
        Option::<Vec<String>>::deserialize(d)?
            .map(|v| {
                v.iter()
                    .map(|s| crate::scalar::parse(s).ok_or_else(|| D::Error::custom(format!("bad rational `{s}`"))))
                    .collect()
            })
            .transpose()
    }
}

/// All subspaces behind a report, computed once.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub cocycles: Subspace<Forms>,
    pub coboundaries: Subspace<Forms>,
    pub z_plus: Subspace<Forms>,
    pub z_minus: Subspace<Forms>,
    pub b_plus_part: Subspace<Forms>,
    pub lambda_plus: Subspace<Forms>,
    pub lambda_minus: Subspace<Forms>,
    pub report: JCohomologyReport,
}

fn violated(msg: impl Into<String>) -> Error {
    Error::InvariantViolated(msg.into())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(violated(msg()))
    }
}

fn check_inputs(g: &LieAlgebra, or: &Orientation, j: &AlmostComplexStructure) -> Result<()> {
    require_unimodular_4d(g)?;
    for d in [or.dim(), j.dim()] {
        if d != 4 {
            return Err(Error::DimensionMismatch { expected: 4, found: d });
        }
    }
    j.require_orientation(or)
}

pub fn analyze(g: &LieAlgebra, or: &Orientation, j: &AlmostComplexStructure) -> Result<Analysis> {
    check_inputs(g, or, j)?;
    let z = g.cocycles(2)?;
    let b = g.coboundaries(2)?;
    let lp = j.lambda_plus()?;
    let lm = j.lambda_minus()?;
    let zp = z.intersection(&lp)?;
    let zm = z.intersection(&lm)?;
    let bp = b.intersection(&lp)?;
    let bm = b.intersection(&lm)?;
    let bplus = b_plus(g, or)?;
    let b2 = g.betti(2)?;

    ensure(z.dim() == bplus + 3, || format!("dim Z = {} but b+ = {bplus}", z.dim()))?;
    ensure(b.dim() + bplus == 3, || format!("dim B = {} but b+ = {bplus}", b.dim()))?;
    ensure(zp.dim() == bplus + 1, || format!("dim Z+ = {} but b+ = {bplus}", zp.dim()))?;
    ensure(bp.dim() <= 1, || format!("dim(B ∩ Λ+) = {}", bp.dim()))?;
    ensure(bm.is_zero(), || "B ∩ Λ- is nonzero".into())?;
    for x in b.basis() {
        for y in b.basis() {
            ensure(or.phi_zeta(x, y)?.is_zero(), || "B is not isotropic".into())?;
        }
    }

    let plus_basis = zp.echelon_basis_with_order(&PAIRED_ORDER);
    let minus_basis = zm.echelon_basis_with_order(&PAIRED_ORDER);
    let mut plus_representatives = Vec::new();
    let mut span = bp.clone();
    for x in &plus_basis {
        if !span.contains_element(x)? {
            span = span.sum(&Subspace::span(4, 2, [x])?)?;
            plus_representatives.push(x.clone());
        }
    }
    let h_plus = zp.dim() - bp.dim();
    let h_minus = zm.dim();
    ensure(plus_representatives.len() == h_plus, || "H+ representatives miscounted".into())?;
    ensure(h_plus + h_minus == b2, || format!("h+ + h- = {} but b2 = {b2}", h_plus + h_minus))?;
    ensure(h_minus + 1 == bplus || h_minus == bplus, || {
        format!("h- = {h_minus} with b+ = {bplus}")
    })?;

    // representatives are jointly independent modulo B and span Z
    let joint = Subspace::span(
        4,
        2,
        plus_representatives.iter().chain(&minus_basis).chain(b.basis()),
    )?;
    ensure(joint.dim() == h_plus + h_minus + b.dim() && joint.same_as(&z)?, || {
        "H+ and H- representatives are not independent modulo B".into()
    })?;

    let report = JCohomologyReport {
        h_plus,
        h_minus,
        b2,
        b_plus: bplus,
        plus_basis,
        plus_representatives,
        minus_basis,
        cocycle_dim: z.dim(),
        coboundary_dim: b.dim(),
        invariant_coboundary_dim: bp.dim(),
        anti_invariant_coboundary_dim: bm.dim(),
    };
    Ok(Analysis {
        cocycles: z,
        coboundaries: b,
        z_plus: zp,
        z_minus: zm,
        b_plus_part: bp,
        lambda_plus: lp,
        lambda_minus: lm,
        report,
    })
}

pub fn j_cohomology(g: &LieAlgebra, or: &Orientation, j: &AlmostComplexStructure) -> Result<JCohomologyReport> {
    Ok(analyze(g, or, j)?.report)
}

impl Analysis {
    /// Tameness from `h⁻_J = b⁺ - 1`.
    pub fn tamed_cohomological(&self) -> bool {
        self.report.h_minus + 1 == self.report.b_plus
    }

    /// Tameness from `B ∩ Λ⁺_J(g*) = 0`.
    pub fn tamed_linear(&self) -> bool {
        self.b_plus_part.is_zero()
    }
}

/// `B_2 ∩ Λ⁺_J(g)`, the exact positive-type bivectors.
pub fn boundary_plus_vectors(g: &LieAlgebra, j: &AlmostComplexStructure) -> Result<Subspace<Vectors>> {
    g.boundaries(2)?.intersection(&j.lambda_plus_vectors()?)
}

pub fn classify(g: &LieAlgebra, or: &Orientation, j: &AlmostComplexStructure) -> Result<Classification> {
    let a = analyze(g, or, j)?;
    let tamed = a.tamed_cohomological();
    let vector_side = boundary_plus_vectors(g, j)?.is_zero();
    ensure(tamed == a.tamed_linear() && tamed == vector_side, || {
        format!(
            "tameness criteria disagree: cohomological {tamed}, forms {}, vectors {vector_side}",
            a.tamed_linear()
        )
    })?;
    let integrable = j.is_integrable(g)?;
    ensure(integrable || !j.integrable_sufficient(g)?, || "Λ- ⊂ Z but J is not integrable".into())?;
    let bplus = a.report.b_plus;
    ensure(bplus != 3 || tamed, || "b+ = 3 but J is not tamed".into())?;
    ensure(bplus != 2 || tamed || integrable, || "b+ = 2 and J neither tamed nor integrable".into())?;

    let plus_signature = or.signature(&a.z_plus)?;
    let witness = if tamed {
        ensure(plus_signature == SignatureReport::new(1, bplus, 0), || {
            format!("signature of Z+ is {plus_signature:?}")
        })?;
        Witness::CompatibleForm {
            form: compatible_form_from(&a, g, or, j)?,
        }
    } else {
        let (vector, bivector) = obstruction_from(g, j)?;
        Witness::ObstructionVector { vector, bivector }
    };
    Ok(Classification {
        tamed,
        almost_kahler: tamed,
        integrable,
        report: a.report,
        plus_signature,
        witness,
    })
}

/// Forms in `Z⁺_J` spanning the positive axes of a diagonalization of the
/// wedge pairing.
fn positive_axes(a: &Analysis, or: &Orientation) -> Result<Vec<KForm>> {
    let basis = a.z_plus.basis();
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    let cong = congruence_diagonalize(&or.gram_forms(basis)?);
    let mut out = Vec::new();
    for (i, d) in cong.diagonal.iter().enumerate() {
        if d.is_positive() {
            let row = cong.basis.row(i);
            let terms: Vec<(Scalar, &KForm)> = row.iter().cloned().zip(basis).collect();
            out.push(KForm::combination(4, 2, &terms)?);
        }
    }
    Ok(out)
}

fn compatible_form_from(
    a: &Analysis,
    g: &LieAlgebra,
    or: &Orientation,
    j: &AlmostComplexStructure,
) -> Result<KForm> {
    if !a.tamed_cohomological() {
        return Err(Error::NotTamed);
    }
    let axes = positive_axes(a, or)?;
    ensure(axes.len() == 1, || format!("{} positive axes on Z+", axes.len()))?;
    let e = &axes[0];
    let plus = j.is_compatible_with(g, e)?;
    let minus = j.is_compatible_with(g, &e.neg())?;
    ensure(plus != minus, || format!("±e+ compatibility: {plus}, {minus}"))?;
    Ok(if plus { e.clone() } else { e.neg() })
}

/// A J-compatible symplectic form, found in the positive component of
/// `Z⁺_J`.
pub fn construct_compatible_form(g: &LieAlgebra, or: &Orientation, j: &AlmostComplexStructure) -> Result<KForm> {
    let a = analyze(g, or, j)?;
    compatible_form_from(&a, g, or, j)
}

/// The compatible form plus `beta`, which must be closed and
/// anti-invariant.
pub fn construct_taming_form(
    g: &LieAlgebra,
    or: &Orientation,
    j: &AlmostComplexStructure,
    beta: &KForm,
) -> Result<KForm> {
    if beta.dim() != 4 || beta.grade() != 2 {
        return Err(Error::InadmissibleForm("expected a 2-form on a 4-dimensional algebra".into()));
    }
    if !g.d(beta)?.is_zero() {
        return Err(Error::InadmissibleForm(format!("{beta} is not closed")));
    }
    if j.act_on_2forms(beta)? != beta.neg() {
        return Err(Error::InadmissibleForm(format!("{beta} is not anti-invariant")));
    }
    let omega = construct_compatible_form(g, or, j)?.add(beta)?;
    ensure(j.is_tamed_by(g, &omega)?, || format!("{omega} does not tame J"))?;
    Ok(omega)
}

fn obstruction_from(g: &LieAlgebra, j: &AlmostComplexStructure) -> Result<(Vec<Scalar>, KVector)> {
    let bp = boundary_plus_vectors(g, j)?;
    let w = bp.basis().first().ok_or(Error::Tamed)?;
    let (x, _) = factor_simple(w)?;
    let vjv = positive_bivector(j, &x)?;
    ensure(verify_obstruction(g, j, &x)?, || format!("v ∧ Jv = {vjv} is not a valid obstruction"))?;
    Ok((x, vjv))
}

/// A nonzero `v` with `v ∧ Jv` a boundary; errors with [`Error::Tamed`]
/// when no such vector exists.
pub fn obstruction_vector(g: &LieAlgebra, or: &Orientation, j: &AlmostComplexStructure) -> Result<Vec<Scalar>> {
    check_inputs(g, or, j)?;
    Ok(obstruction_from(g, j)?.0)
}

/// Checks `v ≠ 0`, `v ∧ Jv ∈ B_2(g)`, and `z(v ∧ Jv) = 0` for every
/// closed 2-form `z`.
pub fn verify_obstruction(g: &LieAlgebra, j: &AlmostComplexStructure, v: &[Scalar]) -> Result<bool> {
    if !crate::acs::is_nonzero(v) {
        return Ok(false);
    }
    let vjv = positive_bivector(j, v)?;
    if vjv.is_zero() || !g.boundaries(2)?.contains_element(&vjv)? {
        return Ok(false);
    }
    for z in g.cocycles(2)?.basis() {
        if !evaluate(&vjv, z)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Membership of a class in the compatible and tamed cones. The class is
/// `Σ plus[i] · plus_representatives[i] + Σ minus[k] · minus_basis[k]`.
pub fn cone_membership(
    g: &LieAlgebra,
    or: &Orientation,
    j: &AlmostComplexStructure,
    plus: &[Scalar],
    minus: Option<&[Scalar]>,
) -> Result<ConeVerdict> {
    let a = analyze(g, or, j)?;
    cone_membership_with(&a, g, or, j, plus, minus)
}

/// As [`cone_membership`], reusing a precomputed analysis.
pub fn cone_membership_with(
    a: &Analysis,
    g: &LieAlgebra,
    or: &Orientation,
    j: &AlmostComplexStructure,
    plus: &[Scalar],
    minus: Option<&[Scalar]>,
) -> Result<ConeVerdict> {
    let r = &a.report;
    if plus.len() != r.h_plus {
        return Err(Error::CoordinateLength {
            expected: r.h_plus,
            found: plus.len(),
        });
    }
    let zeros = vec![scalar::zero(); r.h_minus];
    let minus = minus.unwrap_or(&zeros);
    if minus.len() != r.h_minus {
        return Err(Error::CoordinateLength {
            expected: r.h_minus,
            found: minus.len(),
        });
    }
    let combine = |coeffs: &[Scalar], basis: &[KForm]| {
        let terms: Vec<(Scalar, &KForm)> = coeffs.iter().cloned().zip(basis).collect();
        KForm::combination(4, 2, &terms)
    };
    let plus_part = combine(plus, &r.plus_representatives)?;
    let minus_part = combine(minus, &r.minus_basis)?;
    let square = or.phi_zeta(&plus_part, &plus_part)?;
    let mut verdict = ConeVerdict {
        in_compatible_cone: false,
        in_tamed_cone: false,
        plus_part,
        minus_part,
        square,
        plus_basis: r.plus_representatives.clone(),
        minus_basis: r.minus_basis.clone(),
        note: None,
    };
    if !a.tamed_cohomological() {
        verdict.note = Some("J is not tamed; both cones are empty".into());
        return Ok(verdict);
    }
    let compatible = j.is_compatible_with(g, &verdict.plus_part)?;
    let minus_zero = verdict.minus_part.is_zero();
    verdict.in_compatible_cone = compatible && minus_zero;
    verdict.in_tamed_cone = compatible;

    let omega0 = compatible_form_from(a, g, or, j)?;
    if compatible {
        ensure(verdict.square.is_positive(), || "compatible class with e² ≤ 0".into())?;
        ensure(or.phi_zeta(&verdict.plus_part, &omega0)?.is_positive(), || {
            "compatible class outside the witness component".into()
        })?;
    }
    let total = verdict.plus_part.add(&verdict.minus_part)?;
    ensure(j.is_tamed_by(g, &total)? == compatible, || {
        "tamed cone disagrees with compatible cone + H-".into()
    })?;
    Ok(verdict)
}

/// Randomized search for a taming form among closed 2-forms, seeded with
/// the positive axes of `Z⁺_J` and their negatives. A negative verdict is
/// only returned together with an obstruction vector.
pub fn feasibility_oracle(
    g: &LieAlgebra,
    or: &Orientation,
    j: &AlmostComplexStructure,
    trials: usize,
    seed: u64,
) -> Result<Feasibility> {
    let a = analyze(g, or, j)?;
    let mut candidates = Vec::new();
    for e in positive_axes(&a, or)? {
        candidates.push(e.neg());
        candidates.push(e);
    }
    let z = a.cocycles.basis();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tried = 0;
    let next = |rng: &mut ChaCha8Rng| -> Result<KForm> {
        let terms: Vec<(Scalar, &KForm)> = z
            .iter()
            .map(|b| (scalar::ratio(rng.gen_range(-6..=6), rng.gen_range(1..=3)), b))
            .collect();
        KForm::combination(4, 2, &terms)
    };
    let mut i = 0;
    loop {
        let omega = if i < candidates.len() {
            candidates[i].clone()
        } else if i < candidates.len() + trials {
            next(&mut rng)?
        } else {
            break;
        };
        i += 1;
        tried += 1;
        if j.is_tamed_by(g, &omega)? {
            return Ok(Feasibility {
                feasible: true,
                witness: Some(omega),
                certificate: None,
                trials: tried,
            });
        }
    }
    match obstruction_from(g, j) {
        Ok((v, _)) => Ok(Feasibility {
            feasible: false,
            witness: None,
            certificate: Some(v),
            trials: tried,
        }),
        Err(Error::Tamed) => Err(violated("search found no taming form, but no obstruction exists")),
        Err(e) => Err(e),
    }
}
