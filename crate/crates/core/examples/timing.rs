//! Per-kind wall time of generation, classification and the oracle.
//!
//! `cargo run --release -p pqh-core --example timing [kind]`

use pqh_core::classify::{classify, oracle_check};
use pqh_core::gen::{generate, Kind};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

fn main() {
    let only: Option<Kind> = std::env::args().nth(1).map(|s| s.parse().unwrap());
    for kind in Kind::ALL.into_iter().filter(|k| only.is_none_or(|o| o == *k)) {
        let (mut tg, mut tc, mut to) = (0.0, 0.0, 0.0);
        for n in 1..=3 {
            for seed in 0..12 {
                let mut rng = ChaCha8Rng::seed_from_u64(seed * 31 + n as u64);
                let t = Instant::now();
                let inst = generate(&mut rng, n, kind);
                tg += t.elapsed().as_secs_f64();
                let t = Instant::now();
                let r = classify(&inst.space, &inst.subspace);
                tc += t.elapsed().as_secs_f64();
                let t = Instant::now();
                let _ = oracle_check(&inst.space, &r, &inst.subspace, &mut rng, 8);
                to += t.elapsed().as_secs_f64();
            }
        }
        println!("{kind}: gen {tg:.2} classify {tc:.2} oracle {to:.2}");
    }
}
