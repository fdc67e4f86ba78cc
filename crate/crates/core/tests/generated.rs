use pqh_core::classify::{classify, oracle_check, ClassificationReport};
use pqh_core::gen::{generate, Kind};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn expected(kind: Kind, r: &ClassificationReport) -> bool {
    let f = &r.flags;
    match kind {
        Kind::ParaQuaternionic => f.para_quaternionic,
        Kind::Complex => f.complex && f.pure,
        Kind::ParaComplex => f.para_complex,
        Kind::WeaklyParaComplex => f.weakly_para_complex,
        Kind::Nilpotent => f.nilpotent.is_some(),
        Kind::Real => f.real,
        Kind::TotallyReal => f.totally_real,
        Kind::TotallyComplex => f.totally_complex,
        Kind::TotallyParaComplex => f.totally_para_complex,
        Kind::Decomposable => f.nilpotent == Some(1),
        Kind::Random => true,
    }
}

#[test]
fn every_kind_classifies_as_built_and_passes_the_oracle() {
    for kind in Kind::ALL {
        for n in 1..=3 {
            for seed in 0..12 {
                let mut rng = ChaCha8Rng::seed_from_u64(seed * 31 + n as u64);
                let inst = generate(&mut rng, n, kind);
                let r = classify(&inst.space, &inst.subspace);
                assert!(expected(kind, &r), "{kind} n={n} seed={seed}: {:?}", r.flags);
                let o = oracle_check(&inst.space, &r, &inst.subspace, &mut rng, 8);
                assert!(o.is_clean(), "{kind} n={n} seed={seed}: {:?}", o.violations);
            }
        }
    }
}
