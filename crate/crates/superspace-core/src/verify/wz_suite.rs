//! End-to-end checks of the Wess-Zumino pipeline: the product displays, the
//! purge-evaluated action density, supersymmetry invariance of every kernel
//! before and after purge-evaluation, and auxiliary elimination down to the
//! final on-shell density.

use alloc::vec::Vec;

use super::{check, Check};
use crate::calculus::{divergence_equal, susy_invariance_check, ActionMode, PevMap};
use crate::grassmann::{gens, Level, SuperExpr};
use crate::rational::GaussRat;
use crate::scalar::{FieldSymbol, ScalarPoly};
use crate::spinor;
use crate::superops::mk_chiral;
use crate::wess_zumino::{wz_action_density, wz_eliminate_f, wz_kernel, WZParams};

const L: Level = Level::Standard;

fn sp(name: &str) -> ScalarPoly {
    ScalarPoly::sym(name)
}

fn field() -> SuperExpr {
    mk_chiral(&sp("f0"), &sp("f1"), &sp("f2"), &sp("f12"), L)
}

fn mask(gs: &[u8]) -> u16 {
    gs.iter().fold(0u16, |m, g| m | (1 << g))
}

pub fn run() -> Vec<Check> {
    let mut checks = Vec::new();
    let p = WZParams::formal();
    let f = field();
    let fd = f.twisted_dagger();
    let map = PevMap::standard();

    // Spot checks of the kinetic kernel expansion.
    let prod = &fd * &f;
    let fa = [sp("f1"), sp("f2")];
    let mut spot = true;
    // thetabar^b vthbar_b block: -fbar_b f0.
    for b in 1..=2u8 {
        spot &= prod.coefficient(mask(&[gens::theta_bar(b), gens::vth_bar(b)]))
            == -(&fa[(b - 1) as usize].conj() * &sp("f0"));
    }
    // Top vth_a vthbar_b block: i sigmabar^{mu b a}(f_a d fbar_b - fbar_b d f_a).
    let top = mask(&[
        gens::theta(1),
        gens::theta(2),
        gens::theta_bar(1),
        gens::theta_bar(2),
    ]);
    for a in 1..=2u8 {
        for b in 1..=2u8 {
            let mut want = ScalarPoly::zero();
            for mu in 0..4u8 {
                want += (&(&fa[(a - 1) as usize] * &fa[(b - 1) as usize].conj().partial(mu))
                    - &(&fa[(b - 1) as usize].conj() * &fa[(a - 1) as usize].partial(mu)))
                    .scale(&(GaussRat::i() * spinor::sigma_bar_upper(mu, b, a)));
            }
            spot &= prod.coefficient(top | mask(&[gens::vth(a), gens::vth_bar(b)])) == want;
        }
    }
    // Top vth^4 block: fbar12 f12.
    spot &= prod.coefficient(
        top | mask(&[gens::vth(1), gens::vth(2), gens::vth_bar(1), gens::vth_bar(2)]),
    ) == &sp("f12").conj() * &sp("f12");
    checks.push(check("kinetic kernel block expansion", spot));

    // Powers: the theta-degree blocks of f^2 and f^3.
    let f2 = &f * &f;
    let f3 = &f2 * &f;
    let th12v = mask(&[gens::theta(1), gens::theta(2), gens::vth(1), gens::vth(2)]);
    let want2 = (&(&sp("f0") * &sp("f12")) - &(&sp("f1") * &sp("f2")))
        .scale(&GaussRat::from_int(2));
    let want3 = (&(&sp("f0").pow(2) * &sp("f12"))
        - &(&(&sp("f0") * &sp("f1")) * &sp("f2")).scale(&GaussRat::from_int(2)))
        .scale(&GaussRat::from_int(3));
    checks.push(check(
        "square and cube top spinor blocks",
        f2.coefficient(th12v) == want2 && f3.coefficient(th12v) == want3,
    ));

    // The purge-evaluated density against the display, up to divergences.
    let density = wz_action_density(&f, &p, &map).expect("chiral input");
    let display = {
        let c = |q: &ScalarPoly| q.conj();
        let mut d = ScalarPoly::zero();
        for mu in 0..4u8 {
            d += (&c(&sp("f0")) * &sp("f0").partial(mu).partial(mu))
                .scale(&GaussRat::from_int(spinor::eta(mu, mu)));
        }
        for a in 1..=2u8 {
            for b in 1..=2u8 {
                for mu in 0..4u8 {
                    d += (&fa[(a - 1) as usize] * &c(&fa[(b - 1) as usize]).partial(mu)).scale(
                        &(GaussRat::i() * GaussRat::ratio(1, 2) * spinor::sigma_bar_upper(mu, b, a)),
                    );
                }
            }
        }
        d += (&c(&sp("f12")) * &sp("f12")).scale(&GaussRat::ratio(1, 4));
        let w = |m: &ScalarPoly, g: &ScalarPoly, l: &ScalarPoly,
                 f0: &ScalarPoly, f1: &ScalarPoly, f2: &ScalarPoly, f12: &ScalarPoly| {
            &(&(m * &(&(f0 * f12) - &(f1 * f2)))
                + &(g * &(&(&f0.pow(2) * f12) - &(&(f0 * f1) * f2).scale(&GaussRat::from_int(2)))))
                + &(l * f12)
        };
        d += w(&p.m, &p.g, &p.lambda, &sp("f0"), &sp("f1"), &sp("f2"), &sp("f12"));
        d += w(
            &p.m.conj(),
            &p.g.conj(),
            &p.lambda.conj(),
            &c(&sp("f0")),
            &c(&sp("f1")),
            &c(&sp("f2")),
            &c(&sp("f12")),
        );
        d
    };
    checks.push(check(
        "purge-evaluated density equals the display up to a boundary term",
        divergence_equal(&density, &display).is_none(),
    ));

    // SUSY invariance of all kernels, every generator, pre and post
    // purge-evaluation.
    let kernel = wz_kernel(&f, &p).expect("chiral input");
    let mut invariant = true;
    for c in susy_invariance_check(&kernel.d_term, ActionMode::FullMeasure, &map).unwrap() {
        invariant &= c.pass;
    }
    for c in susy_invariance_check(&kernel.f_term, ActionMode::ChiralMeasure, &map).unwrap() {
        invariant &= c.pass;
    }
    for c in susy_invariance_check(&kernel.fbar_term, ActionMode::AntichiralMeasure, &map).unwrap()
    {
        invariant &= c.pass;
    }
    checks.push(check(
        "all action kernels are supersymmetric up to boundary terms",
        invariant,
    ));

    // Auxiliary elimination.
    let sol = wz_eliminate_f(&density, &FieldSymbol::base("f12")).expect("bilinear shape");
    let pot = |m: &ScalarPoly, g: &ScalarPoly, l: &ScalarPoly, f0: &ScalarPoly| {
        &(&(m * f0) + &(g * &f0.pow(2))) + l
    };
    let want_value = pot(&p.m.conj(), &p.g.conj(), &p.lambda.conj(), &sp("f0").conj())
        .scale(&GaussRat::from_int(-4));
    checks.push(check(
        "auxiliary equations of motion solve to minus four times the superpotential gradient",
        sol.value == want_value,
    ));
    let potential = (&pot(&p.m, &p.g, &p.lambda, &sp("f0"))
        * &pot(&p.m.conj(), &p.g.conj(), &p.lambda.conj(), &sp("f0").conj()))
        .scale(&GaussRat::from_int(-4));
    let mut on_shell_display = display.clone();
    // Remove every term containing the auxiliary pair, then add the
    // Yukawa-potential replacement.
    on_shell_display = on_shell_display
        .subst(&FieldSymbol::base("f12"), &ScalarPoly::zero())
        .subst(&FieldSymbol::base("f12").conj(), &ScalarPoly::zero());
    on_shell_display = &on_shell_display + &potential;
    checks.push(check(
        "on-shell density carries the product potential",
        divergence_equal(&sol.on_shell, &on_shell_display).is_none(),
    ));

    // Switching off the couplings drops the auxiliary field entirely.
    let free_density = wz_action_density(&f, &WZParams::zero(), &map).unwrap();
    let free = wz_eliminate_f(&free_density, &FieldSymbol::base("f12")).unwrap();
    checks.push(check(
        "free theory eliminates the auxiliary component to zero",
        free.value.is_zero() && free.conj_value.is_zero(),
    ));
    checks
}
