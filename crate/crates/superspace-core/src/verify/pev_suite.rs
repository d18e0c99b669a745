//! Properties of Berezin integration and purge-evaluation: normalizations,
//! linearity over derivations, compatibility with conjugation, and the
//! divergence-kernel behaviour of randomized total divergences.

use alloc::vec::Vec;

use rand::Rng;

use super::{check, random_scalar, random_super, Check};
use crate::calculus::{berezin, divergence_kernel_witness, pev, Measure, PevMap};
use crate::grassmann::{gens, Level, SuperExpr};
use crate::superops::{e_dprime, e_prime, q, q_bar};

const L: Level = Level::Standard;

pub fn run() -> Vec<Check> {
    let mut checks = Vec::new();
    let map = PevMap::standard();

    // Normalization axioms.
    let t12 = SuperExpr::mono((1 << gens::theta(1)) | (1 << gens::theta(2)), L);
    let tb12 = SuperExpr::mono((1 << gens::theta_bar(1)) | (1 << gens::theta_bar(2)), L);
    checks.push(check(
        "Berezin normalizations on the top monomials",
        berezin(&t12, Measure::DTheta) == SuperExpr::one(L)
            && berezin(&tb12, Measure::DThetaBar) == SuperExpr::one(L)
            && berezin(&(&t12 * &tb12), Measure::Full) == SuperExpr::one(L)
            && berezin(&SuperExpr::gen(gens::theta(1), L), Measure::DTheta).is_zero(),
    ));

    // Purge-evaluation commutes with every frame derivation and with
    // Berezin integration, on 100 random expressions.
    let pool = ["p", "q", "s"];
    let mut commute = true;
    for k in 0..100u64 {
        let mut r = super::rng(0xbe52e1 ^ k);
        let f = random_super(&mut r, &pool, L);
        for a in 1..=2u8 {
            commute &= pev(&q(a, L).apply(&f), &map) == q(a, L).apply(&pev(&f, &map));
            commute &= pev(&q_bar(a, L).apply(&f), &map) == q_bar(a, L).apply(&pev(&f, &map));
            commute &= pev(&e_prime(a, L).apply(&f), &map) == e_prime(a, L).apply(&pev(&f, &map));
            commute &= pev(&e_dprime(a, L).apply(&f), &map) == e_dprime(a, L).apply(&pev(&f, &map));
        }
        for mu in 0..4u8 {
            commute &= pev(&f.partial(mu), &map) == pev(&f, &map).partial(mu);
        }
        commute &=
            pev(&berezin(&f, Measure::Full), &map) == berezin(&pev(&f, &map), Measure::Full);
    }
    checks.push(check(
        "purge-evaluation commutes with derivations and Berezin integration",
        commute,
    ));

    // Conjugation compatibility on even expressions.
    let mut dag = true;
    for k in 0..100u64 {
        let mut r = super::rng(0xdada ^ k);
        let f = random_super(&mut r, &pool, L);
        let even: SuperExpr = f
            .terms()
            .filter(|(m, _)| m.count_ones() % 2 == 0)
            .fold(SuperExpr::zero(L), |acc, (m, p)| {
                acc + SuperExpr::term(m, p.clone(), L)
            });
        dag &= pev(&even.twisted_dagger(), &map) == pev(&even, &map).plain_conj();
    }
    checks.push(check(
        "standard purge-evaluation is compatible with the twisted conjugation on even inputs",
        dag,
    ));

    // Euler operators annihilate randomized total divergences.
    let mut euler = true;
    for k in 0..100u64 {
        let mut r = super::rng(0xeu64 ^ (k << 3));
        let l = random_scalar(&mut r, &pool);
        let mu = r.gen_range(0..4u8);
        euler &= divergence_kernel_witness(&l.partial(mu)).is_none();
    }
    checks.push(check(
        "Euler operators annihilate 100 randomized divergences",
        euler,
    ));

    // And they detect a non-divergence.
    let bad = &crate::scalar::ScalarPoly::sym("p") * &crate::scalar::ScalarPoly::sym("p");
    checks.push(check(
        "Euler operator rejects an algebraic density",
        divergence_kernel_witness(&bad).is_some(),
    ));
    checks
}
