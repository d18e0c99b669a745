//! Operator identities for the supersymmetry derivations, checked on a
//! generic superfield carrying all 256 monomials with independent symbolic
//! coefficients.

use alloc::vec::Vec;

use super::{check, Check};
use crate::grassmann::{Level, SuperExpr};
use crate::rational::GaussRat;
use crate::scalar::ScalarPoly;
use crate::spinor;
use crate::superops::{e_dprime, e_prime, q, q_bar, Derivation};

const L: Level = Level::Standard;

/// All 256 monomials with fresh coefficient symbols.
pub(crate) fn generic_superfield(prefix: &str) -> SuperExpr {
    let mut f = SuperExpr::zero(L);
    for th in 0..16u16 {
        for vth in 0..16u16 {
            let mask = th | (vth << 8);
            f += SuperExpr::term(
                mask,
                ScalarPoly::sym(&alloc::format!("{prefix}{mask}")),
                L,
            );
        }
    }
    f
}

pub fn run() -> Vec<Check> {
    let mut checks = Vec::new();
    let f = generic_superfield("c");

    let translate = |sign: i64, a: u8, b: u8| {
        let mut out = SuperExpr::zero(L);
        for mu in 0..4u8 {
            out += f.partial(mu).scale(
                &(GaussRat::i() * GaussRat::from_int(2 * sign) * spinor::sigma(mu, a, b)),
            );
        }
        out
    };

    let mut q_qbar = true;
    let mut e_e = true;
    let mut zeros = true;
    for a in 1..=2u8 {
        for b in 1..=2u8 {
            q_qbar &= q(a, L).anticommutator(&q_bar(b, L), &f) == translate(1, a, b);
            e_e &= e_prime(a, L).anticommutator(&e_dprime(b, L), &f) == translate(-1, a, b);
            let same_type: [(&Derivation, &Derivation); 4] = [
                (&q(a, L), &q(b, L)),
                (&q_bar(a, L), &q_bar(b, L)),
                (&e_prime(a, L), &e_prime(b, L)),
                (&e_dprime(a, L), &e_dprime(b, L)),
            ];
            for (d1, d2) in same_type {
                zeros &= d1.anticommutator(d2, &f).is_zero();
            }
            let mixed: [(&Derivation, &Derivation); 4] = [
                (&e_prime(a, L), &q(b, L)),
                (&e_prime(a, L), &q_bar(b, L)),
                (&e_dprime(a, L), &q(b, L)),
                (&e_dprime(a, L), &q_bar(b, L)),
            ];
            for (d1, d2) in mixed {
                zeros &= d1.anticommutator(d2, &f).is_zero();
            }
        }
    }
    checks.push(check(
        "supersymmetry bracket closes on twice the translation",
        q_qbar,
    ));
    checks.push(check(
        "invariant-derivation bracket closes on minus twice the translation",
        e_e,
    ));
    checks.push(check(
        "all same-type and mixed brackets vanish",
        zeros,
    ));

    // Dagger conjugation of the derivations with the parity sign.
    let even: SuperExpr = f
        .terms()
        .filter(|(m, _)| m.count_ones() % 2 == 0)
        .fold(SuperExpr::zero(L), |acc, (m, p)| {
            acc + SuperExpr::term(m, p.clone(), L)
        });
    let odd: SuperExpr = f
        .terms()
        .filter(|(m, _)| m.count_ones() % 2 == 1)
        .fold(SuperExpr::zero(L), |acc, (m, p)| {
            acc + SuperExpr::term(m, p.clone(), L)
        });
    let mut dag = true;
    for a in 1..=2u8 {
        dag &= q(a, L).apply(&even).twisted_dagger() == q_bar(a, L).apply(&even.twisted_dagger());
        dag &= q(a, L).apply(&odd).twisted_dagger()
            == q_bar(a, L).apply(&odd.twisted_dagger()).scale(&GaussRat::from_int(-1));
        dag &= e_prime(a, L).apply(&even).twisted_dagger()
            == e_dprime(a, L).apply(&even.twisted_dagger());
        dag &= e_prime(a, L).apply(&odd).twisted_dagger()
            == e_dprime(a, L)
                .apply(&odd.twisted_dagger())
                .scale(&GaussRat::from_int(-1));
    }
    checks.push(check(
        "derivations conjugate through the twisted conjugation with parity sign",
        dag,
    ));
    checks
}
