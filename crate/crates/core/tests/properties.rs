use proptest::prelude::*;

use tamelie::acs::positive_bivector;
use tamelie::catalog::{catalog_all, catalog_get, j0};
use tamelie::exterior::{binomial, factor_simple, is_simple, wedge_vectors, Forms, Graded, Variance};
use tamelie::linalg::{inertia, Matrix};
use tamelie::scalar::{self, ratio, Scalar};
use tamelie::tameness::{
    analyze, classify, cone_membership, construct_compatible_form, verify_obstruction, Witness,
};
use tamelie::{evaluate, AlmostComplexStructure, Hodge, KForm, KVector, LieAlgebra, Orientation, Subspace};

fn rational() -> impl Strategy<Value = Scalar> {
    (-5i64..=5, 1i64..=3).prop_map(|(p, q)| ratio(p, q))
}

fn coords(len: usize) -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec(rational(), len)
}

fn graded<V: Variance>(n: usize, k: usize) -> impl Strategy<Value = Graded<V>> {
    coords(binomial(n, k)).prop_map(move |c| Graded::from_coords(n, k, &c).unwrap())
}

fn form(n: usize, k: usize) -> impl Strategy<Value = KForm> {
    graded::<Forms>(n, k)
}

fn bivector() -> impl Strategy<Value = KVector> {
    graded(4, 2)
}

fn unimodular() -> Vec<LieAlgebra> {
    catalog_all().into_iter().map(|e| e.algebra).collect()
}

/// A random J together with the orientation it induces.
fn structure() -> impl Strategy<Value = (AlmostComplexStructure, Orientation)> {
    (any::<u64>(), any::<bool>()).prop_map(|(seed, neg)| {
        let or = if neg {
            Orientation::standard(4).negated()
        } else {
            Orientation::standard(4)
        };
        (AlmostComplexStructure::random(&or, seed), or)
    })
}

fn sign(k: usize) -> Scalar {
    if k % 2 == 0 {
        scalar::one()
    } else {
        -scalar::one()
    }
}

/// Grades `(p, q, r)` with `p + q + r <= 5` and the matching forms on `ℝ⁵`.
fn triple() -> impl Strategy<Value = (KForm, KForm, KForm)> {
    (0usize..=5, 0usize..=5, 0usize..=5)
        .prop_filter("fits in dimension 5", |(p, q, r)| p + q + r <= 5)
        .prop_flat_map(|(p, q, r)| (form(5, p), form(5, q), form(5, r)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn wedge_is_associative((a, b, c) in triple()) {
        let left = a.wedge(&b).unwrap().wedge(&c).unwrap();
        let right = a.wedge(&b.wedge(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn wedge_is_graded_commutative((a, b, _c) in triple()) {
        let ab = a.wedge(&b).unwrap();
        let ba = b.wedge(&a).unwrap();
        prop_assert_eq!(ab, ba.scale(&sign(a.grade() * b.grade())));
    }

    #[test]
    fn simple_bivectors_factor(v in coords(5), w in coords(5)) {
        let u: KVector = wedge_vectors(&v, &w).unwrap();
        prop_assert!(is_simple(&u).unwrap());
        if !u.is_zero() {
            let (x, y) = factor_simple(&u).unwrap();
            prop_assert_eq!(wedge_vectors::<tamelie::exterior::Vectors>(&x, &y).unwrap(), u);
        }
    }

    #[test]
    fn simplicity_matches_square(u in graded::<tamelie::exterior::Vectors>(5, 2)) {
        prop_assert_eq!(is_simple(&u).unwrap(), u.wedge(&u).unwrap().is_zero());
        if is_simple(&u).unwrap() && !u.is_zero() {
            let (x, y) = factor_simple(&u).unwrap();
            prop_assert_eq!(wedge_vectors::<tamelie::exterior::Vectors>(&x, &y).unwrap(), u);
        }
    }

    #[test]
    fn d_squares_to_zero(idx in 0usize..5, k in 0usize..=2, c in coords(6)) {
        let g = &unimodular()[idx];
        let alpha = KForm::from_coords(4, k, &c[..binomial(4, k)]).unwrap();
        prop_assert!(g.d(&g.d(&alpha).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn boundary_is_adjoint_to_d(idx in 0usize..5, k in 1usize..=4, w in coords(6), phi in coords(6)) {
        let g = &unimodular()[idx];
        let w = KVector::from_coords(4, k, &w[..binomial(4, k)]).unwrap();
        let phi = KForm::from_coords(4, k - 1, &phi[..binomial(4, k - 1)]).unwrap();
        let lhs = evaluate(&g.boundary(&w).unwrap(), &phi).unwrap();
        let rhs = evaluate(&w, &g.d(&phi).unwrap()).unwrap();
        prop_assert_eq!(lhs, sign(k + 1) * rhs);
    }

    #[test]
    fn star_preserves_wedge_pairing(k in 0usize..=4, a in coords(6), b in coords(6)) {
        let h = Hodge::euclidean(4);
        let or = Orientation::standard(4);
        let alpha = KForm::from_coords(4, k, &a[..binomial(4, k)]).unwrap();
        let beta = KForm::from_coords(4, 4 - k, &b[..binomial(4, 4 - k)]).unwrap();
        let lhs = or.phi_zeta(&alpha, &beta).unwrap();
        let rhs = or.phi_zeta(&h.star(&alpha).unwrap(), &h.star(&beta).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn g_zeta_intertwines_pairings(k in 0usize..=4, a in coords(6), b in coords(6), c in 1i64..=3, neg in any::<bool>()) {
        let or = Orientation::scaled(4, ratio(if neg { -c } else { c }, 1)).unwrap();
        let alpha = KForm::from_coords(4, k, &a[..binomial(4, k)]).unwrap();
        let beta = KForm::from_coords(4, 4 - k, &b[..binomial(4, 4 - k)]).unwrap();
        let lhs = or.phi_eta(&or.g_zeta(&alpha).unwrap(), &or.g_zeta(&beta).unwrap()).unwrap();
        prop_assert_eq!(&lhs, &or.phi_zeta(&alpha, &beta).unwrap());
        if k % 2 == 0 {
            prop_assert_eq!(lhs, or.phi_zeta(&beta, &alpha).unwrap());
        }
    }

    #[test]
    fn signature_is_basis_independent(idx in 0usize..5, entries in coords(36)) {
        let g = &unimodular()[idx];
        let or = Orientation::standard(4);
        let z = g.cocycles(2).unwrap();
        let m = z.dim();
        let p = Matrix::from_fn(m, m, |i, j| entries[i * 6 + j].clone());
        prop_assume!(p.determinant() != scalar::zero());
        let mixed: Vec<KForm> = (0..m)
            .map(|i| {
                let terms: Vec<(Scalar, &KForm)> =
                    z.basis().iter().enumerate().map(|(j, b)| (p[(i, j)].clone(), b)).collect();
                KForm::combination(4, 2, &terms).unwrap()
            })
            .collect();
        let direct = or.signature(&z).unwrap();
        let via = inertia(&or.gram_forms(&mixed).unwrap());
        prop_assert_eq!(direct, via.into());
    }

    #[test]
    fn j_action_is_an_isometric_involution((j, or) in structure(), a in form(4, 2), b in form(4, 2)) {
        let ja = j.act_on_2forms(&a).unwrap();
        prop_assert_eq!(j.act_on_2forms(&ja).unwrap(), a.clone());
        let jb = j.act_on_2forms(&b).unwrap();
        prop_assert_eq!(or.phi_zeta(&ja, &jb).unwrap(), or.phi_zeta(&a, &b).unwrap());
    }

    #[test]
    fn opposite_eigenspaces_annihilate((j, _or) in structure(), u in bivector(), a in form(4, 2)) {
        for s in [1, -1] {
            let up = j.project_vector(&u, s).unwrap();
            let am = j.project_form(&a, -s).unwrap();
            prop_assert_eq!(evaluate(&up, &am).unwrap(), scalar::zero());
        }
    }

    #[test]
    fn g_zeta_maps_eigenspaces((j, or) in structure()) {
        let plus = j.lambda_plus().unwrap().map(4, 2, |a| or.g_zeta(a)).unwrap();
        prop_assert!(plus.same_as(&j.lambda_plus_vectors().unwrap()).unwrap());
        let minus = j.lambda_minus().unwrap().map(4, 2, |a| or.g_zeta(a)).unwrap();
        prop_assert!(minus.same_as(&j.lambda_minus_vectors().unwrap()).unwrap());
    }

    #[test]
    fn positive_bivectors_are_simple_and_nonnegative((j, or) in structure(), v in coords(4)) {
        let u = positive_bivector(&j, &v).unwrap();
        prop_assert!(is_simple(&u).unwrap());
        prop_assert!(or.phi_eta(&u, &u).unwrap() >= scalar::zero());
    }

    #[test]
    fn plucker_formula_matches_projector((j, _or) in structure()) {
        let minus = j.lambda_minus().unwrap();
        for (i, k) in [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)] {
            if let Ok(chart) = j.lambda_minus_plucker(i, k) {
                prop_assert!(chart.same_as(&minus).unwrap());
            }
        }
    }

    #[test]
    fn hermitian_data_is_invariant((j, _or) in structure(), diag in prop::collection::vec(1i64..=4, 4), off in -1i64..=1) {
        let mut gram = Matrix::from_fn(4, 4, |r, c| if r == c { ratio(diag[r], 1) } else { scalar::zero() });
        gram[(0, 1)] = ratio(off, 2);
        gram[(1, 0)] = ratio(off, 2);
        let h = tamelie::InnerProduct::new(gram).unwrap();
        let data = j.hermitian_data(&h).unwrap();
        let a = j.matrix();
        prop_assert_eq!(a.transpose().mul(&data.metric).mul(a), data.metric.clone());
        prop_assert!(data.metric.is_positive_definite());
        prop_assert_eq!(j.act_on_2forms(&data.fundamental_form).unwrap(), data.fundamental_form.clone());
        prop_assert!(j.is_positive_on(&data.fundamental_form).unwrap());
    }

    #[test]
    fn integrability_test_is_consistent(idx in 0usize..5, (j, or) in structure()) {
        let g = &unimodular()[idx];
        let _ = or;
        if j.integrable_sufficient(g).unwrap() {
            prop_assert!(j.is_integrable(g).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn classification_is_coherent(idx in 0usize..5, (j, or) in structure()) {
        let g = &unimodular()[idx];
        let a = analyze(g, &or, &j).unwrap();
        let r = &a.report;
        prop_assert_eq!(r.h_plus + r.h_minus, r.b2);
        prop_assert_eq!(r.cocycle_dim, r.b_plus + 3);
        prop_assert_eq!(r.coboundary_dim, 3 - r.b_plus);
        prop_assert_eq!(a.z_plus.dim(), r.b_plus + 1);
        prop_assert!(r.h_minus + 1 == r.b_plus || r.h_minus == r.b_plus);

        let c = classify(g, &or, &j).unwrap();
        prop_assert_eq!(c.tamed, r.h_minus + 1 == r.b_plus);
        match &c.witness {
            Witness::CompatibleForm { form } => {
                prop_assert!(c.tamed);
                prop_assert!(j.is_compatible_with(g, form).unwrap());
                prop_assert_eq!(construct_compatible_form(g, &or, &j).unwrap(), form.clone());
            }
            Witness::ObstructionVector { vector, bivector } => {
                prop_assert!(!c.tamed);
                prop_assert!(verify_obstruction(g, &j, vector).unwrap());
                prop_assert!(g.boundaries(2).unwrap().contains_element(bivector).unwrap());
            }
        }
        if r.b_plus == 3 {
            prop_assert!(c.tamed);
        }
        if !c.tamed && r.b_plus == 1 {
            prop_assert!(!a.z_minus.is_zero());
        }
    }

    #[test]
    fn cone_region_on_fixture(a in rational(), b in rational(), c in rational()) {
        let g = catalog_get("nil3xR").unwrap().algebra;
        let or = Orientation::standard(4);
        let v = cone_membership(&g, &or, &j0(), &[a.clone(), b.clone(), c.clone()], None).unwrap();
        let inside = a > scalar::zero() && b > scalar::zero() && a * b > c.clone() * c;
        prop_assert_eq!(v.in_compatible_cone, inside);
        prop_assert_eq!(v.in_tamed_cone, inside);
    }

    #[test]
    fn forms_round_trip_through_json(k in 0usize..=4, c in coords(6)) {
        let alpha = KForm::from_coords(4, k, &c[..binomial(4, k)]).unwrap();
        let text = serde_json::to_string(&alpha).unwrap();
        prop_assert!(!text.contains('.'));
        let back: KForm = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, alpha);
    }
}

#[test]
fn evaluation_is_a_perfect_pairing() {
    for k in 0..=4 {
        let n = binomial(4, k);
        let unit = |i: usize| -> Vec<Scalar> {
            (0..n).map(|j| if i == j { scalar::one() } else { scalar::zero() }).collect()
        };
        for i in 0..n {
            for j in 0..n {
                let u = KVector::from_coords(4, k, &unit(i)).unwrap();
                let a = KForm::from_coords(4, k, &unit(j)).unwrap();
                let want = if i == j { scalar::one() } else { scalar::zero() };
                assert_eq!(evaluate(&u, &a).unwrap(), want);
            }
        }
    }
}

#[test]
fn basis_bivectors_simplicity() {
    for i in 1..=5 {
        for j in i + 1..=5 {
            assert!(is_simple(&KVector::basis(5, &[i, j]).unwrap()).unwrap());
        }
    }
    let u = KVector::from_terms(4, &[(1, &[1, 2]), (1, &[3, 4])]).unwrap();
    assert!(!is_simple(&u).unwrap());
}

#[test]
fn cohomology_and_homology_agree() {
    for e in catalog_all() {
        let g = &e.algebra;
        for k in 0..=4 {
            assert_eq!(g.betti(k).unwrap(), g.homology_betti(k).unwrap(), "{} k={k}", e.name);
        }
        assert!(g.is_unimodular());
        assert_eq!(g.betti(4).unwrap(), 1);
    }
    // [f1, f2] = f2 is not unimodular and has no top class.
    let g = LieAlgebra::from_brackets(4, &[((1, 2), vec![(2, scalar::one())])]).unwrap();
    assert!(!g.is_unimodular());
    assert_eq!(g.betti(4).unwrap(), 0);
    assert_eq!(g.homology_betti(4).unwrap(), 0);
}

#[test]
fn duality_maps_cycles_to_cocycles() {
    let or = Orientation::standard(4);
    for e in catalog_all() {
        let g = &e.algebra;
        for k in 0..=4 {
            let z = g.cycles(k).unwrap().map(4, 4 - k, |u| or.g_eta(u)).unwrap();
            assert!(z.same_as(&g.cocycles(4 - k).unwrap()).unwrap(), "{} k={k}", e.name);
            let b = g.boundaries(k).unwrap().map(4, 4 - k, |u| or.g_eta(u)).unwrap();
            assert!(b.same_as(&g.coboundaries(4 - k).unwrap()).unwrap(), "{} k={k}", e.name);
            for zc in g.cocycles(k).unwrap().basis() {
                for bc in g.coboundaries(4 - k).unwrap().basis() {
                    assert_eq!(or.phi_zeta(zc, bc).unwrap(), scalar::zero());
                }
            }
        }
    }
}

#[test]
fn subspace_bases_are_interchangeable() {
    let g = catalog_get("nil4").unwrap().algebra;
    let z = g.cocycles(2).unwrap();
    let again = Subspace::span(4, 2, z.echelon_basis().iter()).unwrap();
    assert!(again.same_as(&z).unwrap());
}
