use super::*;
use crate::gen::graph;
use crate::model::HBasisChange;
use crate::rational::int;
use crate::subspace::{decomposable, h_tensor};
use crate::uft::is_direct_sum_of;
use alloc::vec;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn v(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| int(x)).collect()
}

fn span(sp: &ModelSpace, rows: &[&[i64]]) -> Subspace {
    Subspace::new(sp.dim(), &rows.iter().map(|r| v(r)).collect::<Vec<_>>())
}

fn e_span(sp: &ModelSpace, rows: &[&[i64]]) -> Subspace {
    Subspace::new(sp.e_dim(), &rows.iter().map(|r| v(r)).collect::<Vec<_>>())
}

/// `{h₁⊗f + h₂⊗Tf}` in the standard frame, `T` given by its columns on `fs`.
fn standard_graph(fs: &[&[i64]], ts: &[&[i64]]) -> Subspace {
    let fs: Vec<Vec<Rational>> = fs.iter().map(|r| v(r)).collect();
    let ts: Vec<Vec<Rational>> = ts.iter().map(|r| v(r)).collect();
    graph(&HBasisChange::identity(), &fs, &ts)
}

fn h1() -> Vec<Rational> {
    v(&[1, 0])
}

#[test]
fn stabilizer_examples() {
    let sp = ModelSpace::standard(2);
    let e = e_span(&sp, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
    assert_eq!(stabilizer(&h_tensor(&sp, &e)).dim(), 3);
    let s = stabilizer(&decomposable(&sp, &h1(), &e));
    assert_eq!(s.space, Subspace::new(3, &[v(&[1, -1, 0]), v(&[0, 0, 1])]));
    let sp1 = ModelSpace::standard(1);
    let tc = standard_graph(&[&[1, 0], &[0, 1]], &[&[0, 1], &[-1, 0]]);
    let s = stabilizer(&tc);
    assert_eq!(s.space, Subspace::new(3, &[v(&[1, 0, 0])]));
    assert!(s.contains(&Operator::i()));
    assert_eq!(stabilizer(&Subspace::zero(sp1.dim())).dim(), 3);
}

#[test]
fn witnesses_from_q() {
    let sp = ModelSpace::standard(1);
    let u = decomposable(&sp, &h1(), &Subspace::full(2));
    let w = kind_witnesses(&stabilizer(&u));
    assert!(w.complex.is_none());
    assert_eq!(w.weakly_para_complex, Some(Operator::k()));
    assert_eq!(w.nilpotent, Some(Operator::from_ints(1, -1, 0)));

    let only_i = Stabilizer { space: Subspace::new(3, &[v(&[1, 0, 0])]) };
    let w = kind_witnesses(&only_i);
    assert!(w.complex.is_some() && w.weakly_para_complex.is_none() && w.nilpotent.is_none());
    assert_eq!(kind_witnesses(&Stabilizer { space: Subspace::zero(3) }), Witnesses::default());

    // split binary form: q = α² − β² on span{I, J} has two isotropic lines
    let ij = Stabilizer { space: Subspace::new(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]) };
    let iso = nilpotent_candidates(&ij);
    assert_eq!(iso.len(), 2);
    assert!(iso.iter().all(|a| a.q().is_zero() && !a.is_zero()));
    // span{I, J + K} carries α² − 2β², which has no rational isotropic vector
    let aniso = Stabilizer { space: Subspace::new(3, &[v(&[1, 0, 0]), v(&[0, 1, 1])]) };
    assert!(nilpotent_candidates(&aniso).is_empty());
}

#[test]
fn para_quaternionic_examples() {
    let sp = ModelSpace::standard(1);
    let full = is_para_quaternionic(&sp, &h_tensor(&sp, &Subspace::full(2)));
    assert!(full.is_para_quaternionic && full.hermitian && full.gram_block);
    assert_eq!(signature(&sp, &h_tensor(&sp, &Subspace::full(2))), SignatureTriple::new(2, 0, 2));
    let line = h_tensor(&sp, &e_span(&sp, &[&[1, 0]]));
    let c = is_para_quaternionic(&sp, &line);
    assert!(c.is_para_quaternionic && !c.hermitian && c.gram_block);
    assert_eq!(signature(&sp, &line), SignatureTriple::new(0, 2, 0));
    let graph = standard_graph(&[&[1, 0]], &[&[0, 1]]);
    assert!(!is_para_quaternionic(&sp, &graph).is_para_quaternionic);
}

use crate::subspace::signature;

#[test]
fn complex_rotation_is_totally_complex() {
    let sp = ModelSpace::standard(1);
    let u = standard_graph(&[&[1, 0], &[0, 1]], &[&[0, 1], &[-1, 0]]);
    let c = check_complex(&sp, &u, &Operator::i()).unwrap();
    assert!(c.t_squared_ok && c.hermitian && c.totally_complex && c.partner_orthogonal);
    assert_eq!(c.signature, SignatureTriple::new(2, 0, 0));
    assert!(c.signature_even && c.kaehler_identity);
    assert!(c.kaehler.is_skew());
    let r = classify(&sp, &u);
    assert!(r.flags.complex && r.flags.totally_complex && !r.flags.real && r.flags.pure);
    assert!(!is_real(&sp, &u));
}

#[test]
fn complex_not_omega_preserving() {
    // J₀ ⊕ J₀ conjugated by the shear e₁ ↦ e₁ + e₃
    let sp = ModelSpace::standard(2);
    let d = Matrix::from_rows(4, &[v(&[1, 0, 0, 0]), v(&[0, 1, 0, 0]), v(&[1, 0, 1, 0]), v(&[0, 0, 0, 1])]);
    let j0 = Matrix::from_rows(4, &[v(&[0, -1, 0, 0]), v(&[1, 0, 0, 0]), v(&[0, 0, 0, -1]), v(&[0, 0, 1, 0])]);
    let t = d.mul_mat(&j0).mul_mat(&d.inverse().unwrap());
    let fs: Vec<Vec<Rational>> = (0..4).map(|i| sp.unit_e(i)).collect();
    let ts: Vec<Vec<Rational>> = fs.iter().map(|f| t.mul_vec(f)).collect();
    let u = graph(&HBasisChange::identity(), &fs, &ts);
    let c = check_complex(&sp, &u, &Operator::i()).unwrap();
    assert!(c.t_squared_ok);
    assert!(!c.omega_condition && !c.partner_orthogonal && !c.totally_complex);
    assert!(classify(&sp, &u).flags.complex);
}

#[test]
fn complex_errors_and_u0() {
    let sp = ModelSpace::standard(1);
    let u = standard_graph(&[&[1, 0], &[0, 1]], &[&[0, 1], &[-1, 0]]);
    assert_eq!(check_complex(&sp, &u, &Operator::k()).unwrap_err(), crate::Error::WrongWitness("complex witness needs q(A) > 0"));
    assert_eq!(check_complex(&sp, &u, &Operator::from_ints(2, 1, 0)).unwrap_err(), crate::Error::NotInStabilizer);
    let sp2 = ModelSpace::standard(2);
    let pq = h_tensor(&sp2, &e_span(&sp2, &[&[1, 0, 0, 0]]));
    let c = check_complex(&sp2, &pq, &Operator::i()).unwrap();
    assert_eq!(c.u0, pq);
    assert!(c.complement.is_zero());
}

#[test]
fn para_complex_diagonal() {
    let sp = ModelSpace::standard(1);
    let u = standard_graph(&[&[1, 0], &[0, 1]], &[&[1, 0], &[0, -1]]);
    let r = classify(&sp, &u);
    assert!(r.flags.para_complex && r.flags.weakly_para_complex && !r.flags.complex);
    assert!(r.flags.totally_para_complex);
    assert_eq!(r.signature, SignatureTriple::new(1, 0, 1));
    // eigenvectors of T = diag(1, −1) correspond to h₁ ± h₂, the eigenlines of J
    let a = r.witnesses.para_complex.clone().unwrap();
    assert!(a.coords()[0].is_zero() && a.coords()[2].is_zero());
    let p = check_para_complex(&sp, &u, &a).unwrap();
    assert_eq!((p.d_plus, p.d_minus), (1, 1));
    assert!(p.trace_route_ok && p.strictly && p.signature_matches && p.t_squared_ok);
    assert!(p.omega_condition && p.partner_orthogonal && p.totally_para_complex);
    match &p.eigen {
        EigenSplit::Rational { plus, minus, recomposes } => {
            assert!(*recomposes);
            assert_eq!(plus.fiber.dim() + minus.fiber.dim(), 2);
        }
        other => panic!("expected rational eigenspaces, got {other:?}"),
    }
    // eigenspaces are scale-free: h₁ + h₂ and 2(h₁ + h₂) have the same fiber
    let fib = |h: &[i64]| crate::subspace::fiber(&sp, &u, &v(h));
    assert_eq!(fib(&[1, 1]), fib(&[2, 2]));
    assert_eq!(fib(&[1, -1]), fib(&[-3, 3]));
    assert_eq!(fib(&[1, 1]).dim() + fib(&[1, -1]).dim(), 2);
}

#[test]
fn para_complex_decomposable_is_weak() {
    let sp = ModelSpace::standard(1);
    let u = decomposable(&sp, &h1(), &Subspace::full(2));
    let p = check_para_complex(&sp, &u, &Operator::k()).unwrap();
    assert_eq!((p.d_plus, p.d_minus), (0, 2));
    assert!(!p.strictly && !p.hermitian && p.trace_route_ok && p.signature_matches);
    let n = p.eigen_family.clone().unwrap();
    for a in [-3, -1, 2] {
        let member = n.scale(&int(a)).add(&Operator::k());
        assert_eq!(member.q(), Operator::k().q());
        assert!(is_invariant(&u, &member));
    }
    let r = classify(&sp, &u);
    assert!(r.flags.weakly_para_complex && !r.flags.para_complex && r.flags.nilpotent == Some(1));
}

#[test]
fn para_complex_irrational_eigenvalues() {
    // T² = 2·Id on F = E, witness with q = −2 after rescaling
    let sp = ModelSpace::standard(1);
    let u = standard_graph(&[&[1, 0], &[0, 1]], &[&[0, 1], &[2, 0]]);
    let r = classify(&sp, &u);
    assert!(r.flags.weakly_para_complex);
    let a = r.witnesses.weakly_para_complex.clone().unwrap();
    let p = check_para_complex(&sp, &u, &a).unwrap();
    assert!(p.t_squared_ok && p.trace_route_ok && p.signature_matches);
    match &p.eigen {
        EigenSplit::Quadratic { plus, minus, .. } => assert_eq!(plus.len() + minus.len(), 2),
        other => panic!("expected quadratic eigenspaces, got {other:?}"),
    }
}

#[test]
fn nilpotent_examples() {
    let sp = ModelSpace::standard(1);
    let a = Operator::from_ints(1, -1, 0);
    let u = decomposable(&sp, &h1(), &Subspace::full(2));
    let c = check_nilpotent(&sp, &u, &a).unwrap();
    assert_eq!(c.degree, 1);
    assert!(c.u0.is_zero() && c.e1.dim() == 2 && c.rest.is_zero() && c.recomposes && c.criterion);

    let pq = h_tensor(&sp, &Subspace::full(2));
    for a in [Operator::from_ints(1, -1, 0), Operator::from_ints(1, 1, 0), Operator::from_ints(1, 0, 1)] {
        assert_eq!(check_nilpotent(&sp, &pq, &a).unwrap().degree, 2);
    }

    let u = span(&sp, &[&[0, 1, 0, 0], &[1, 0, 0, 1]]);
    let c = check_nilpotent(&sp, &u, &a).unwrap();
    assert_eq!(c.degree, 2);
    assert!(c.criterion && c.recomposes && c.rest_real);
    assert_eq!(c.e1, e_span(&sp, &[&[0, 1]]));
    assert_eq!(c.rest, span(&sp, &[&[1, 0, 0, 1]]));
    assert!(check_nilpotent(&sp, &u, &Operator::k()).is_err());
}

#[test]
fn real_examples() {
    let sp = ModelSpace::standard(1);
    let line = span(&sp, &[&[1, 0, 0, 1]]);
    assert!(is_real(&sp, &line));
    let r = classify(&sp, &line);
    assert!(r.flags.real && r.flags.hermitian && r.flags.totally_real);
    assert!(!r.flags.complex && !r.flags.weakly_para_complex && r.flags.nilpotent.is_none());
    assert_eq!(r.signature, SignatureTriple::new(1, 0, 0));
    let t = check_totally_real(&sp, &line).unwrap();
    assert!(t.conditions && t.gram_orthogonal && t.gram_formula && t.dim_bound && t.e1_cap_e2_zero);
    assert_eq!(sp.metric(&v(&[1, 0, 0, 1]), &v(&[1, 0, 0, 1])), int(2));

    let with_dec = span(&sp, &[&[1, 0, 0, 0]]);
    assert!(!is_real(&sp, &with_dec));
}

#[test]
fn totally_real_two_planes() {
    let sp = ModelSpace::standard(2);
    let u = standard_graph(&[&[1, 0, 0, 0], &[0, 0, 1, 0]], &[&[0, 1, 0, 0], &[0, 0, 0, 1]]);
    let t = check_totally_real(&sp, &u).unwrap();
    assert!(t.conditions && t.gram_orthogonal && t.gram_formula);
    assert!(classify(&sp, &u).flags.totally_real);

    let u = standard_graph(&[&[1, 0, 0, 0], &[0, 1, 0, 0]], &[&[0, 1, 1, 0], &[-1, 0, 0, 1]]);
    let t = check_totally_real(&sp, &u).unwrap();
    assert!(!t.omega_e1_zero && !t.conditions && !t.gram_orthogonal);
    let r = classify(&sp, &u);
    assert!(r.flags.real && r.flags.hermitian && !r.flags.totally_real);
}

#[test]
fn generic_examples() {
    let sp = ModelSpace::standard(2);
    let pq = h_tensor(&sp, &e_span(&sp, &[&[1, 0, 0, 0], &[0, 0, 1, 0]]));
    let d = generic_decompose(&sp, &pq);
    assert_eq!(d.addends.len(), 1);
    assert_eq!(d.addends[0].kind, AddendKind::ParaQuaternionic);

    let u = standard_graph(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]], &[&[0, 1, 0, 0], &[-1, 0, 0, 0], &[0, 0, 0, 1]]);
    let d = generic_decompose(&sp, &u);
    let kinds: Vec<AddendKind> = d.addends.iter().map(|a| a.kind).collect();
    assert_eq!(kinds, vec![AddendKind::Complex, AddendKind::Real]);
    assert_eq!(d.addends[0].factor.as_ref().unwrap().coeffs(), &[int(1), int(0), int(1)]);
    assert!(d.recomposes_to(&u));
    assert!(classify(&sp, &d.addends[0].subspace).flags.complex);
    assert!(is_real(&sp, &d.addends[1].subspace));
    let w = d.addends[0].witness.clone().unwrap();
    assert!(is_invariant(&d.addends[0].subspace, &w));
}

#[test]
fn witness_identity() {
    // T = [[p, q'], …] on ℚ²: companion matrix of x² − px − q
    for (p, q) in [(0, -1), (1, 1), (2, -5), (-3, 2)] {
        let sp = ModelSpace::standard(1);
        let t = Matrix::from_rows(2, &[v(&[0, q]), v(&[1, p])]);
        let fs: Vec<Vec<Rational>> = (0..2).map(|i| sp.unit_e(i)).collect();
        let ts: Vec<Vec<Rational>> = fs.iter().map(|f| t.mul_vec(f)).collect();
        let u = graph(&HBasisChange::identity(), &fs, &ts);
        let poly = crate::poly::Poly::new(vec![int(-q), int(-p), int(1)]);
        let a = witness_for_factor(&poly);
        assert_eq!(a, Operator::from_ints(1 - q, -1 - q, -p));
        assert!(is_invariant(&u, &a));
        assert_eq!(a.q(), int(-(p * p + 4 * q)));
    }
}

#[test]
fn oracle_examples() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let sp = ModelSpace::standard(1);
    let u = standard_graph(&[&[1, 0], &[0, 1]], &[&[0, 1], &[-1, 0]]);
    let r = classify(&sp, &u);
    let o = oracle_check(&sp, &r, &u, &mut rng, 16);
    assert!(o.is_clean(), "{:?}", o.violations);

    let mut forged = r.clone();
    forged.flags.real = true;
    let o = oracle_check(&sp, &forged, &u, &mut rng, 16);
    assert!(o.violations.iter().any(|v| v.starts_with("real: AU ∩ U = 0")));

    let z = Subspace::zero(sp.dim());
    let r = classify(&sp, &z);
    assert!(oracle_check(&sp, &r, &z, &mut rng, 4).is_clean());
}

#[test]
fn max_invariant_is_invariant() {
    let sp = ModelSpace::standard(1);
    let u = span(&sp, &[&[1, 0, 0, 0], &[0, 1, 0, 1]]);
    for a in [Operator::i(), Operator::k(), Operator::from_ints(1, -1, 0), Operator::from_ints(2, 1, 1)] {
        let w = max_invariant(&u, &a);
        assert!(u.contains(&w) && is_invariant(&w, &a));
    }
    assert!(is_direct_sum_of(&u, &[u.clone()]));
}

#[test]
fn descartes_matches_congruence() {
    let sp = ModelSpace::standard(2);
    let u = span(&sp, &[&[1, 0, 0, 0, 0, 1, 0, 0], &[0, 0, 1, 0, 0, 0, 0, 1], &[0, 1, 0, 0, 0, 0, 0, 0]]);
    let g = gram(&sp, &u);
    assert_eq!(oracle::descartes_signature(&g), signature_of(&g));
}
