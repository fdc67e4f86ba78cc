//! Brute-force re-verification of a classification report from the raw definitions.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;
use rand_core::RngCore;

use crate::gen::{random_h_basis, random_operator, random_vector};
use crate::matrix::Matrix;
use crate::model::{AdmissibleBasis, ModelSpace, Operator};
use crate::rational::{sign, Rational};
use crate::subspace::{gram, image, maximal_pq, SignatureTriple, Subspace};
use crate::uft::{injective_presentation, invariant_core};

use super::complex::{orthogonal_image, q_partners};
use super::{is_invariant, operator_on, ClassificationReport};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OracleReport {
    pub confirmations: Vec<String>,
    pub violations: Vec<String>,
}

impl OracleReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    fn check(&mut self, ok: bool, what: String) {
        if ok {
            self.confirmations.push(what);
        } else {
            self.violations.push(what);
        }
    }
}

fn sign_changes(coeffs: &[Rational]) -> usize {
    let signs: Vec<i32> = coeffs.iter().map(sign).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Inertia from the characteristic polynomial of a symmetric matrix: its roots are all
/// real, so Descartes' rule of signs counts them exactly.
pub fn descartes_signature(g: &Matrix) -> SignatureTriple {
    let cp = g.charpoly();
    let zero = cp.iter().position(|c| !c.is_zero()).unwrap_or(cp.len());
    let rest = &cp[zero..];
    let p = sign_changes(rest);
    let flipped: Vec<Rational> =
        rest.iter().enumerate().map(|(i, c)| if (i + zero) % 2 == 1 { -c.clone() } else { c.clone() }).collect();
    let q = sign_changes(&flipped);
    SignatureTriple::new(p, zero, q)
}

/// `AU ∩ U ≠ 0`
fn meets(u: &Subspace, a: &Operator) -> bool {
    !image(a, u).intersect(u).is_zero()
}

pub fn oracle_check<R: RngCore>(
    sp: &ModelSpace,
    report: &ClassificationReport,
    u: &Subspace,
    rng: &mut R,
    samples: usize,
) -> OracleReport {
    let mut out = OracleReport::default();
    let f = &report.flags;
    let stab = Subspace::new(3, &report.stabilizer.iter().map(Operator::coords).collect::<Vec<_>>());

    out.check(report.is_consistent(), "flag implications".into());
    out.check(report.dim == u.dim(), "dimension".into());
    for a in &report.stabilizer {
        out.check(is_invariant(u, a), format!("stabilizer element {:?} leaves U invariant", a.coords()));
    }
    for _ in 0..samples {
        let a = random_operator(rng);
        out.check(
            is_invariant(u, &a) == stab.contains_vector(&a.coords()),
            format!("sampled operator {:?} agrees with the stabilizer", a.coords()),
        );
    }

    let u0 = maximal_pq(u);
    out.check(f.para_quaternionic == (u0 == *u), "para-quaternionic ⟺ U₀ = U".into());
    out.check(f.pure == u0.is_zero(), "pure ⟺ U₀ = 0".into());
    out.check(report.u0 == u0, "U₀".into());

    let w = &report.witnesses;
    let witness = |out: &mut OracleReport, name: &str, flag: bool, a: &Option<Operator>, s: i32| match a {
        Some(a) => {
            out.check(flag, format!("{name} flag set with witness"));
            out.check(is_invariant(u, a), format!("{name} witness leaves U invariant"));
            out.check(sign(&a.q()) == s && !a.is_zero(), format!("{name} witness has the right q sign"));
        }
        None => out.check(!flag, format!("{name} flag unset without witness")),
    };
    witness(&mut out, "complex", f.complex, &w.complex, 1);
    witness(&mut out, "weakly para-complex", f.weakly_para_complex, &w.weakly_para_complex, -1);
    witness(&mut out, "para-complex", f.para_complex, &w.para_complex, -1);
    if let Some(a) = &w.para_complex {
        let tr = operator_on(u, a).map(|m| m.trace());
        out.check(tr.is_some_and(|t| t.is_zero()), "para-complex witness has balanced eigenspaces".into());
    }
    witness(&mut out, "nilpotent", f.nilpotent.is_some(), &w.nilpotent, 0);
    if let (Some(d), Some(a)) = (f.nilpotent, &w.nilpotent) {
        out.check((d == 1) == image(a, u).is_zero(), "nilpotent degree".into());
    }

    let g = gram(sp, u);
    out.check(f.hermitian == (g.rank() == u.dim()), "Hermitian ⟺ Gram invertible".into());
    out.check(descartes_signature(&g) == report.signature, "signature by Descartes' rule".into());

    let partners_orthogonal = |a: &Operator| q_partners(a).iter().all(|b| orthogonal_image(sp, b, u));
    if let Some(a) = &w.complex {
        if f.pure && f.hermitian {
            out.check(f.totally_complex == partners_orthogonal(a), "totally complex ⟺ partners ⊥".into());
        }
    }
    if let Some(a) = &w.para_complex {
        if f.pure && f.hermitian {
            out.check(f.totally_para_complex == partners_orthogonal(a), "totally para-complex ⟺ partners ⊥".into());
        }
    }
    let ijk_orthogonal = [Operator::i(), Operator::j(), Operator::k()].iter().all(|a| orthogonal_image(sp, a, u));
    out.check(f.totally_real == (u.is_zero() || (f.real && f.hermitian && ijk_orthogonal)), "totally real ⟺ IU, JU, KU ⊥ U".into());

    if f.real {
        let mut probes: Vec<Operator> = [Operator::i(), Operator::j(), Operator::k()].to_vec();
        probes.extend(report.stabilizer.iter().cloned());
        probes.extend([&w.complex, &w.weakly_para_complex, &w.nilpotent].into_iter().flatten().cloned());
        for _ in 0..samples {
            probes.push(random_operator(rng));
        }
        for a in probes.iter().filter(|a| !a.is_zero()) {
            out.check(!meets(u, a), format!("real: AU ∩ U = 0 for A = {:?}", a.coords()));
        }
    } else {
        let certified = !u0.is_zero()
            || !report.stabilizer.is_empty()
            || injective_presentation(sp, u).map_or(true, |form| !invariant_core(&form).w.is_zero());
        out.check(certified, "not real: certificate found".into());
    }

    let vs = u.vectors();
    let pick = |rng: &mut R| -> Vec<Rational> {
        if vs.is_empty() {
            random_vector(rng, sp.dim())
        } else {
            vs[(rng.next_u64() % vs.len() as u64) as usize].clone()
        }
    };
    for _ in 0..samples.min(8) {
        let x = pick(rng);
        let y = pick(rng);
        let base = sp.hermitian_product(&x, &y, &AdmissibleBasis::standard()).imaginary_part().norm();
        let s = random_h_basis(rng);
        let other = sp.hermitian_product(&x, &y, &s.admissible_basis()).imaginary_part().norm();
        out.check(base == other, "N(Im(X·Y)) is basis independent".into());
    }
    out
}
