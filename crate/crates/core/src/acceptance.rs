//! The acceptance suite: eleven exact checks run by the `acceptance` test
//! target and by `tamelie selftest`.

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::acs::{positive_bivector, AlmostComplexStructure};
use crate::catalog::{self, catalog_all, catalog_get};
use crate::error::Error;
use crate::exterior::{evaluate, is_simple, wedge_vectors, Forms, KForm, KVector};
use crate::hodge::{Hodge, InnerProduct};
use crate::lie::{LieAlgebra, StructureConstant};
use crate::linalg::{congruence_diagonalize, Matrix};
use crate::pairing::{b_plus, Orientation, SignatureReport};
use crate::sample;
use crate::scalar::{self, int, ratio, Scalar};
use crate::subspace::Subspace;
use crate::sweep::{self, SweepRecord};
use crate::tameness::{analyze, classify, cone_membership_with, obstruction_vector, verify_obstruction, Witness};

pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    pub seed: u64,
    /// Random J per catalog algebra in the sweeps.
    pub sweep_count: u64,
    /// Randomized cases per structural suite.
    pub structural_cases: usize,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            sweep_count: 100,
            structural_cases: 500,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct CriterionOutcome {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl std::fmt::Display for CriterionOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{mark}] {:>2}. {}: {}", self.id, self.title, self.detail)
    }
}

pub const TITLES: [&str; 11] = [
    "nil3xR fixture",
    "cone region",
    "J_ab family",
    "J_t family",
    "H+ (+) H- sweep",
    "tameness criteria agree",
    "b+ branches",
    "dimension identities",
    "structural suites",
    "Hodge suite",
    "negative controls",
];

type Check = std::result::Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: crate::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn f(terms: &[(i64, &[usize])]) -> KForm {
    KForm::from_terms(4, terms).expect("valid literal")
}

/// `span(xs) + B == span(ys) + B` with both families independent modulo `B`.
fn same_modulo(xs: &[KForm], ys: &[KForm], b: &Subspace<Forms>) -> crate::Result<bool> {
    let sx = Subspace::span(4, 2, xs.iter().chain(b.basis()))?;
    let sy = Subspace::span(4, 2, ys.iter().chain(b.basis()))?;
    Ok(sx.dim() == xs.len() + b.dim() && sy.dim() == ys.len() + b.dim() && sx.same_as(&sy)?)
}

fn criterion_1() -> Check {
    let g = lib(catalog_get("nil3xR"))?.algebra;
    let or = Orientation::standard(4);
    let j = catalog::j0();
    let c = lib(classify(&g, &or, &j))?;
    let r = &c.report;
    check(c.tamed && c.almost_kahler, || "not tamed".into())?;
    check((r.h_plus, r.h_minus, r.b_plus, r.b2) == (3, 1, 2, 4), || {
        format!("(h+, h-, b+, b2) = ({}, {}, {}, {})", r.h_plus, r.h_minus, r.b_plus, r.b2)
    })?;
    let b = lib(g.coboundaries(2))?;
    let plus = [f(&[(1, &[1, 2])]), f(&[(1, &[3, 4])]), f(&[(1, &[1, 4]), (-1, &[2, 3])])];
    let minus = [f(&[(1, &[1, 4]), (1, &[2, 3])])];
    check(lib(same_modulo(&r.plus_representatives, &plus, &b))?, || "H+ span differs".into())?;
    check(lib(same_modulo(&r.minus_basis, &minus, &b))?, || "H- span differs".into())?;
    let Witness::CompatibleForm { form } = &c.witness else {
        return Err("no compatible witness".into());
    };
    check(lib(j.is_compatible_with(&g, form))?, || "witness not compatible".into())?;
    Ok(format!("h+ = 3, h- = 1, b+ = 2, b2 = 4; witness {form}"))
}

/// Every rational `p/q` with `p ∈ [-4, 4]`, `q ∈ {1, 2}`.
fn grid_values() -> Vec<Scalar> {
    let mut v: Vec<Scalar> = (-4..=4).flat_map(|p| [int(p), ratio(p, 2)]).collect();
    v.sort();
    v.dedup();
    v
}

fn criterion_2() -> Check {
    let g = lib(catalog_get("nil3xR"))?.algebra;
    let or = Orientation::standard(4);
    let j = catalog::j0();
    let a = lib(analyze(&g, &or, &j))?;
    let expected_basis = [f(&[(1, &[1, 2])]), f(&[(1, &[3, 4])]), f(&[(1, &[1, 4]), (-1, &[2, 3])])];
    check(a.report.plus_representatives == expected_basis, || {
        "coordinate basis is not {f12, f34, f14 - f23}".into()
    })?;
    let values = grid_values();
    let mut points = 0;
    let mut inside = 0;
    for x in &values {
        for y in &values {
            for z in &values {
                let verdict = lib(cone_membership_with(&a, &g, &or, &j, &[x.clone(), y.clone(), z.clone()], None))?;
                let region = x.is_positive() && y.is_positive() && (x * y - z * z).is_positive();
                check(verdict.in_compatible_cone == region, || {
                    format!("mismatch at ({}, {}, {})", scalar::format(x), scalar::format(y), scalar::format(z))
                })?;
                check(!verdict.in_compatible_cone || verdict.in_tamed_cone, || "compatible but not tamed".into())?;
                points += 1;
                inside += region as usize;
            }
        }
    }
    Ok(format!("{points} grid points agree, {inside} inside the cone"))
}

fn criterion_3() -> Check {
    let g = lib(catalog_get("nil3xR"))?.algebra;
    let z = lib(g.cocycles(2))?;
    let params = [
        (int(1), int(0)),
        (int(0), int(1)),
        (int(1), int(1)),
        (int(2), int(-3)),
        (ratio(1, 2), ratio(1, 3)),
    ];
    for (a, b) in &params {
        let label = format!("(a, b) = ({}, {})", scalar::format(a), scalar::format(b));
        let j = lib(catalog::j_ab(a, b))?;
        let or = lib(Orientation::induced_by(&j))?;
        let s = a * a + b * b;
        let first = f(&[(1, &[3, 4]), (-1, &[1, 2])])
            .scale(a)
            .sub(&f(&[(1, &[2, 3]), (-1, &[1, 4])]).scale(b))
            .and_then(|x| x.add(&f(&[(1, &[1, 3])]).scale(&s)));
        let second = f(&[(1, &[2, 3]), (-1, &[1, 4])])
            .scale(a)
            .add(&f(&[(1, &[3, 4]), (-1, &[1, 2])]).scale(b));
        let printed = lib(Subspace::span(4, 2, [&lib(first)?, &lib(second)?]))?;
        let minus = lib(j.lambda_minus())?;
        check(lib(minus.same_as(&printed))?, || format!("{label}: Λ- differs from the printed span"))?;
        check(lib(z.contains(&minus))?, || format!("{label}: Λ- not closed"))?;
        let c = lib(classify(&g, &or, &j))?;
        check(!c.tamed && c.integrable, || format!("{label}: tamed = {}, integrable = {}", c.tamed, c.integrable))?;
        let v = lib(obstruction_vector(&g, &or, &j))?;
        check(lib(verify_obstruction(&g, &j, &v))?, || format!("{label}: invalid obstruction"))?;
    }
    Ok(format!("{} parameter pairs: not tamed, integrable, certified", params.len()))
}

fn criterion_4() -> Check {
    let entry = lib(catalog_get("nil4"))?;
    let g = &entry.algebra;
    let or = Orientation::standard(4);
    let z = lib(g.cocycles(2))?;
    check(lib(b_plus(g, &or))? == 1, || "b+ != 1".into())?;
    let target = f(&[(1, &[1, 4]), (1, &[2, 3])]);
    let ts = [int(0), ratio(1, 2), ratio(-1, 2), ratio(3, 4), ratio(-3, 4)];
    for t in &ts {
        let j = lib(catalog::j_t(t))?;
        let label = format!("t = {}", scalar::format(t));
        let minus = lib(j.lambda_minus())?;
        check(lib(minus.contains_element(&target))?, || format!("{label}: f14 + f23 not anti-invariant"))?;
        check(lib(z.contains_element(&target))?, || format!("{label}: f14 + f23 not closed"))?;
        let c = lib(classify(g, &or, &j))?;
        check(!c.tamed, || format!("{label}: tamed"))?;
    }
    Ok(format!("{} values of t: not tamed", ts.len()))
}

/// Sweep results per catalog entry.
pub struct SweepData {
    pub entries: Vec<(&'static str, usize, Vec<crate::Result<SweepRecord>>)>,
}

pub fn run_sweeps(cfg: &Config) -> SweepData {
    let or = Orientation::standard(4);
    let entries = catalog_all()
        .into_iter()
        .enumerate()
        .map(|(i, e)| {
            let base = cfg.seed.wrapping_add(1_000_000 * i as u64);
            (e.name, e.expected.b_plus, sweep::sweep(&e.algebra, &or, base, cfg.sweep_count))
        })
        .collect();
    SweepData { entries }
}

fn records<'a>(name: &str, rs: &'a [crate::Result<SweepRecord>]) -> std::result::Result<Vec<&'a SweepRecord>, String> {
    rs.iter()
        .map(|r| r.as_ref().map_err(|e| format!("{name}: {e}")))
        .collect()
}

fn criterion_5(data: &SweepData) -> Check {
    let mut total = 0;
    for (name, _, rs) in &data.entries {
        for r in records(name, rs)? {
            check(r.h_plus + r.h_minus == r.b2, || format!("{name} seed {}: h+ + h- != b2", r.seed))?;
            check(r.h_minus + 1 == r.b_plus || r.h_minus == r.b_plus, || {
                format!("{name} seed {}: h- = {} with b+ = {}", r.seed, r.h_minus, r.b_plus)
            })?;
            total += 1;
        }
    }
    Ok(format!("{total} random J over {} algebras", data.entries.len()))
}

fn criterion_6(data: &SweepData) -> Check {
    let mut untamed = 0;
    let mut total = 0;
    for (name, _, rs) in &data.entries {
        for r in records(name, rs)? {
            check(r.verdicts_agree(), || format!("{name} seed {}: verdicts disagree {r:?}", r.seed))?;
            if !r.tamed_cohomological {
                untamed += 1;
                check(r.obstruction_valid == Some(true), || format!("{name} seed {}: bad obstruction", r.seed))?;
            }
            total += 1;
        }
    }
    Ok(format!("{total} instances agree, {untamed} not tamed with valid obstructions"))
}

fn criterion_7(data: &SweepData) -> Check {
    let mut summary = Vec::new();
    for (name, bp, rs) in &data.entries {
        let rs = records(name, rs)?;
        let tamed = rs.iter().filter(|r| r.tamed_cohomological).count();
        for r in &rs {
            match bp {
                3 => check(r.tamed_cohomological && r.integrable, || {
                    format!("{name} seed {}: b+ = 3 but not tamed and integrable", r.seed)
                })?,
                2 => check(r.tamed_cohomological != r.minus_closed, || {
                    format!("{name} seed {}: tamed XOR Λ- ⊂ Z fails", r.seed)
                })?,
                1 => check(r.tamed_cohomological || r.minus_meets_closed, || {
                    format!("{name} seed {}: not tamed but Λ- ∩ Z = 0", r.seed)
                })?,
                _ => return Err(format!("{name}: unexpected b+ = {bp}")),
            }
        }
        summary.push(format!("{name} {tamed}/{} tamed", rs.len()));
    }
    // random J are almost always tamed on nil3xR and nil4; the families
    // exercise the other branch
    let nil3 = lib(catalog_get("nil3xR"))?.algebra;
    let nil4 = lib(catalog_get("nil4"))?.algebra;
    let mut members = 0;
    for a in -2..=2 {
        for b in -2..=2 {
            if a == 0 && b == 0 {
                continue;
            }
            let j = lib(catalog::j_ab(&ratio(a, 2), &int(b)))?;
            let or = lib(Orientation::induced_by(&j))?;
            let c = lib(classify(&nil3, &or, &j))?;
            check(c.tamed != lib(j.integrable_sufficient(&nil3))?, || format!("J_ab({a}/2, {b}) branch fails"))?;
            members += 1;
        }
    }
    for p in -4..=4 {
        let j = lib(catalog::j_t(&ratio(p, 5)))?;
        let or = Orientation::standard(4);
        let a = lib(analyze(&nil4, &or, &j))?;
        check(a.tamed_cohomological() || !a.z_minus.is_zero(), || format!("J_t({p}/5) branch fails"))?;
        members += 1;
    }
    summary.push(format!("{members} family members"));
    Ok(summary.join(", "))
}

fn criterion_8(data: &SweepData) -> Check {
    let or = Orientation::standard(4);
    for e in catalog_all() {
        let b = lib(e.algebra.coboundaries(2))?;
        for x in b.basis() {
            for y in b.basis() {
                check(lib(or.phi_zeta(x, y))?.is_zero(), || format!("{}: B not isotropic", e.name))?;
            }
        }
    }
    let mut total = 0;
    for (name, bp, rs) in &data.entries {
        for r in records(name, rs)? {
            let ok = r.b_plus == *bp
                && r.cocycle_dim == bp + 3
                && r.coboundary_dim + bp == 3
                && r.invariant_cocycle_dim == bp + 1
                && r.invariant_coboundary_dim <= 1
                && r.anti_invariant_coboundary_dim == 0;
            check(ok, || format!("{name} seed {}: {r:?}", r.seed))?;
            total += 1;
        }
    }
    Ok(format!("{total} instances, B isotropic on all entries"))
}

fn random_catalog_algebra(rng: &mut ChaCha8Rng, algebras: &[LieAlgebra]) -> LieAlgebra {
    algebras[rng.gen_range(0..algebras.len())].clone()
}

fn random_j(rng: &mut ChaCha8Rng, or: &Orientation) -> AlmostComplexStructure {
    AlmostComplexStructure::random(or, rng.gen())
}

fn structural(cfg: &Config) -> std::result::Result<Vec<String>, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x9e37_79b9);
    let n_cases = cfg.structural_cases;
    let algebras: Vec<LieAlgebra> = catalog_all().into_iter().map(|e| e.algebra).collect();
    let or = Orientation::standard(4);
    let mut done = Vec::new();

    for _ in 0..n_cases {
        let g = random_catalog_algebra(&mut rng, &algebras);
        let k = rng.gen_range(0..=2);
        let a = lib(sample::graded::<Forms, _>(&mut rng, 4, k))?;
        check(lib(g.d(&lib(g.d(&a))?))?.is_zero(), || format!("d² ≠ 0 on {a}"))?;
    }
    done.push("d²=0");

    for _ in 0..n_cases {
        let g = random_catalog_algebra(&mut rng, &algebras);
        let k = rng.gen_range(2..=4);
        let u = lib(sample::graded::<crate::exterior::Vectors, _>(&mut rng, 4, k))?;
        check(lib(g.boundary(&lib(g.boundary(&u))?))?.is_zero(), || format!("∂² ≠ 0 on {u}"))?;
    }
    done.push("∂²=0");

    for _ in 0..n_cases {
        let g = random_catalog_algebra(&mut rng, &algebras);
        let k = rng.gen_range(1..=4);
        let u = lib(sample::graded::<crate::exterior::Vectors, _>(&mut rng, 4, k))?;
        let a = lib(sample::graded::<Forms, _>(&mut rng, 4, k - 1))?;
        let lhs = lib(evaluate(&lib(g.boundary(&u))?, &a))?;
        let rhs = lib(evaluate(&u, &lib(g.d(&a))?))?;
        let rhs = if k % 2 == 0 { -rhs } else { rhs };
        check(lhs == rhs, || format!("∂/d adjointness fails for {u}, {a}"))?;
    }
    done.push("∂/d adjoint");

    for _ in 0..n_cases {
        let c = loop {
            let c = sample::scalar(&mut rng, 4);
            if !c.is_zero() {
                break c;
            }
        };
        let o = lib(Orientation::scaled(4, c))?;
        let k = rng.gen_range(0..=4);
        let u = lib(sample::graded::<crate::exterior::Vectors, _>(&mut rng, 4, k))?;
        check(lib(o.g_zeta(&lib(o.g_eta(&u))?))? == u, || format!("G_ζ G_η ≠ id on {u}"))?;
        let a = lib(sample::graded::<Forms, _>(&mut rng, 4, 2))?;
        let b = lib(sample::graded::<Forms, _>(&mut rng, 4, 2))?;
        let lhs = lib(o.phi_eta(&lib(o.g_zeta(&a))?, &lib(o.g_zeta(&b))?))?;
        check(lhs == lib(o.phi_zeta(&b, &a))?, || "Φ_η(G_ζ α, G_ζ β) ≠ Φ_ζ(β, α)".into())?;
    }
    done.push("G_ζ G_η = id, Φ_η∘G_ζ");

    for _ in 0..n_cases {
        // diagonal metrics with square entries keep the volume rational
        let d: Vec<Scalar> = (0..4)
            .map(|_| {
                let x = ratio(rng.gen_range(1..=4), rng.gen_range(1..=3));
                &x * &x
            })
            .collect();
        let gram = Matrix::from_fn(4, 4, |i, j| if i == j { d[i].clone() } else { int(0) });
        let metric = lib(InnerProduct::new(gram))?;
        let o = lib(metric.orientation(1))?;
        let h = lib(Hodge::new(metric, o.clone()))?;
        let a = lib(sample::graded::<Forms, _>(&mut rng, 4, 2))?;
        let b = lib(sample::graded::<Forms, _>(&mut rng, 4, 2))?;
        let lhs = lib(o.phi_zeta(&a, &b))?;
        let rhs = lib(o.phi_zeta(&lib(h.star(&a))?, &lib(h.star(&b))?))?;
        check(lhs == rhs, || "Φ_ζ(α, β) ≠ Φ_ζ(*α, *β)".into())?;
    }
    done.push("Φ_ζ star-invariant");

    let mut count = 0;
    while count < n_cases {
        let basis: Vec<KForm> = (0..6)
            .map(|_| sample::graded::<Forms, _>(&mut rng, 4, 2))
            .collect::<crate::Result<_>>()
            .map_err(|e| e.to_string())?;
        let m = Matrix::from_rows(&basis.iter().map(KForm::coords).collect::<Vec<_>>(), 6);
        if m.determinant().is_zero() {
            continue;
        }
        let sig = congruence_diagonalize(&lib(or.gram_forms(&basis))?).inertia();
        check(SignatureReport::from(sig) == SignatureReport::new(3, 3, 0), || format!("signature {sig:?}"))?;
        count += 1;
    }
    done.push("Λ² signature (3,3,0)");

    for _ in 0..n_cases {
        let j = random_j(&mut rng, &or);
        let sm = lib(or.signature(&lib(j.lambda_minus())?))?;
        let sp = lib(or.signature(&lib(j.lambda_plus())?))?;
        check(sm == SignatureReport::new(2, 0, 0) && sp == SignatureReport::new(1, 3, 0), || {
            format!("Λ- {sm:?}, Λ+ {sp:?}")
        })?;
    }
    done.push("Λ± signatures");

    for i in 0..n_cases {
        let u = if i % 2 == 0 {
            let v = sample::vector(&mut rng, 4);
            let w = sample::vector(&mut rng, 4);
            lib(wedge_vectors(&v, &w))?
        } else {
            lib(sample::graded::<crate::exterior::Vectors, _>(&mut rng, 4, 2))?
        };
        let square_zero = lib(u.wedge(&u))?.is_zero();
        check(lib(is_simple(&u))? == square_zero, || format!("is_simple disagrees on {u}"))?;
    }
    done.push("simple ⟺ u∧u = 0");

    for _ in 0..n_cases {
        let j = random_j(&mut rng, &or);
        let minus = lib(j.lambda_minus())?;
        let terms: Vec<(Scalar, &KForm)> = minus.basis().iter().map(|b| (sample::scalar(&mut rng, 5), b)).collect();
        let beta = lib(KForm::combination(4, 2, &terms))?;
        let v = sample::vector(&mut rng, 4);
        let vjv: KVector = lib(positive_bivector(&j, &v))?;
        check(lib(evaluate(&vjv, &beta))?.is_zero(), || "anti-invariant form nonzero on v∧Jv".into())?;
    }
    done.push("Λ- vanishes on v∧Jv");

    let mut charts = 0;
    for _ in 0..n_cases {
        let j = random_j(&mut rng, &or);
        let minus = lib(j.lambda_minus())?;
        for (a, b) in [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)] {
            match j.lambda_minus_plucker(a, b) {
                Ok(s) => {
                    check(lib(s.same_as(&minus))?, || format!("chart ({a},{b}) differs"))?;
                    charts += 1;
                }
                Err(Error::InvalidChart { .. }) => {}
                Err(e) => return Err(e.to_string()),
            }
        }
    }
    done.push("chart formula");
    let mut out: Vec<String> = done.into_iter().map(String::from).collect();
    out.push(format!("{charts} valid charts"));
    Ok(out)
}

fn criterion_9(cfg: &Config) -> Check {
    let suites = structural(cfg)?;
    Ok(format!("{} cases each: {}", cfg.structural_cases, suites.join("; ")))
}

fn criterion_10(cfg: &Config) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x0bad_cafe);
    let h = Hodge::euclidean(4);
    let per_entry = 40;
    for e in catalog_all() {
        let g = &e.algebra;
        for p in 0..=4 {
            let harm = lib(h.harmonic_space(g, p))?.dim();
            let b = lib(g.betti(p))?;
            check(harm == b, || format!("{}: dim harmonic({p}) = {harm}, b{p} = {b}", e.name))?;
        }
        for _ in 0..per_entry {
            let p = rng.gen_range(0..=3);
            let a = lib(sample::graded::<Forms, _>(&mut rng, 4, p))?;
            let b = lib(sample::graded::<Forms, _>(&mut rng, 4, p + 1))?;
            let lhs = lib(h.inner(&lib(g.d(&a))?, &b))?;
            let rhs = lib(h.inner(&a, &lib(h.codifferential(g, &b))?))?;
            check(lhs == rhs, || format!("{}: ⟨dα, β⟩ ≠ ⟨α, δβ⟩", e.name))?;
        }
        for _ in 0..per_entry {
            let raw = lib(sample::graded::<Forms, _>(&mut rng, 4, 2))?;
            let alpha = lib(h.sd_asd_split(&raw))?.0;
            let dec = lib(h.decompose(g, &alpha))?;
            let (dl_p, dl_m) = lib(h.sd_asd_split(&dec.exact))?;
            let (de_p, de_m) = lib(h.sd_asd_split(&dec.coexact))?;
            check(dl_p == de_p && dl_m == de_m.neg(), || format!("{}: exact/coexact halves differ", e.name))?;
            let two = int(2);
            check(lib(alpha.sub(&dl_p.scale(&two)))? == dec.harmonic, || {
                format!("{}: α - 2(dλ)+ ≠ α_harm", e.name)
            })?;
            let lhs = lib(alpha.add(&dl_m.scale(&two)))?;
            let rhs = lib(dec.harmonic.add(&dec.exact.scale(&two)))?;
            check(lhs == rhs, || format!("{}: α + 2(dλ)- ≠ α_harm + 2dλ", e.name))?;
            let lambda = dec.primitive.as_ref().ok_or("missing primitive")?;
            check(lib(g.d(lambda))? == dec.exact, || format!("{}: dλ mismatch", e.name))?;
        }
    }
    Ok(format!("harmonic dims = Betti numbers; {per_entry} adjointness and {per_entry} decomposition cases per algebra"))
}

fn criterion_11() -> Check {
    let affine = lib(LieAlgebra::new(4, &[StructureConstant::new(1, 2, 2, int(1))]))?;
    let or = Orientation::standard(4);
    check(
        classify(&affine, &or, &catalog::j0()).err() == Some(Error::NotUnimodular),
        || "non-unimodular algebra accepted".into(),
    )?;
    let bad = LieAlgebra::new(
        3,
        &[
            StructureConstant::new(1, 2, 3, int(1)),
            StructureConstant::new(1, 3, 3, int(1)),
            StructureConstant::new(2, 3, 1, int(1)),
        ],
    );
    check(matches!(bad, Err(Error::JacobiViolation { .. })), || "Jacobi violation accepted".into())?;
    let nil3 = lib(catalog_get("nil3xR"))?.algebra;
    let jab = lib(catalog::j_ab(&int(1), &int(0)))?;
    check(lib(jab.orientation_sign(&or))? == -1, || "J_ab sign is not -1".into())?;
    check(
        classify(&nil3, &or, &jab).err() == Some(Error::OrientationMismatch),
        || "orientation mismatch accepted".into(),
    )?;
    check(
        classify(&nil3, &or.negated(), &catalog::j0()).err() == Some(Error::OrientationMismatch),
        || "negated orientation accepted".into(),
    )?;
    Ok("non-unimodular, Jacobi-violating and mis-oriented inputs rejected".into())
}

fn outcome(id: usize, result: Check) -> CriterionOutcome {
    let (passed, detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CriterionOutcome {
        id,
        title: TITLES[id - 1],
        passed,
        detail,
    }
}

/// Runs one criterion (1-based id).
pub fn run_criterion(id: usize, cfg: &Config) -> CriterionOutcome {
    let needs_sweep = (5..=8).contains(&id);
    let data = needs_sweep.then(|| run_sweeps(cfg));
    run_with(id, cfg, data.as_ref())
}

fn run_with(id: usize, cfg: &Config, data: Option<&SweepData>) -> CriterionOutcome {
    let result = match id {
        1 => criterion_1(),
        2 => criterion_2(),
        3 => criterion_3(),
        4 => criterion_4(),
        5 => criterion_5(data.expect("sweep data")),
        6 => criterion_6(data.expect("sweep data")),
        7 => criterion_7(data.expect("sweep data")),
        8 => criterion_8(data.expect("sweep data")),
        9 => criterion_9(cfg),
        10 => criterion_10(cfg),
        11 => criterion_11(),
        _ => Err(format!("no criterion {id}")),
    };
    outcome(id, result)
}

/// Runs all eleven criteria, sharing one sweep between criteria 5-8.
pub fn run_all(cfg: &Config) -> Vec<CriterionOutcome> {
    let data = run_sweeps(cfg);
    let ids: Vec<usize> = (1..=11).collect();
    sweep::map(&ids, |&id| run_with(id, cfg, Some(&data)))
}
