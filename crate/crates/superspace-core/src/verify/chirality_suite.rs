//! Chirality checks: the constructor expansions, annihilation by the
//! invariant derivations, the three-term chiral-frame form, the conjugation
//! exchange, and the forced nilpotent top component.

use alloc::vec::Vec;

use super::{check, Check};
use crate::grassmann::{gens, sector_of, Level, Sector, SuperExpr};
use crate::rational::GaussRat;
use crate::scalar::ScalarPoly;
use crate::superops::{
    change_frame, chiral_general, e_dprime, e_prime, is_antichiral, is_chiral, mk_antichiral,
    mk_chiral, x_antichiral, x_chiral, Frame,
};

const L: Level = Level::Standard;

pub fn run() -> Vec<Check> {
    let mut checks = Vec::new();
    let sp = ScalarPoly::sym;
    let f = mk_chiral(&sp("f0"), &sp("f1"), &sp("f2"), &sp("f12"), L);

    let mut ann = true;
    for b in 1..=2u8 {
        ann &= e_dprime(b, L).apply(&f).is_zero();
    }
    checks.push(check(
        "small chiral constructor is annihilated by both invariant derivations",
        ann,
    ));
    checks.push(check(
        "small chiral constructor lies in the small sector",
        sector_of(&f) == Sector::Small,
    ));

    let mut coords = true;
    for mu in 0..4u8 {
        coords &= is_chiral(&x_chiral(mu, L)) && is_antichiral(&x_antichiral(mu, L));
    }
    coords &= is_chiral(&SuperExpr::gen(gens::theta(1), L))
        && is_antichiral(&SuperExpr::gen(gens::theta_bar(2), L));
    checks.push(check(
        "shifted coordinates and odd coordinates have the expected chirality",
        coords,
    ));

    // In the chiral frame: three terms, free of thetabar and vthbar.
    let fp = change_frame(&f, Frame::Standard, Frame::Chiral);
    let barred = (1u16 << gens::theta_bar(1))
        | (1 << gens::theta_bar(2))
        | (1 << gens::vth_bar(1))
        | (1 << gens::vth_bar(2));
    let free = fp.terms().all(|(m, _)| m & barred == 0);
    checks.push(check(
        "chiral field in the chiral frame is free of barred generators",
        free,
    ));
    checks.push(check(
        "chiral frame round trip is the identity",
        change_frame(&fp, Frame::Chiral, Frame::Standard) == f,
    ));

    // Conjugation exchanges the constructors with the spinor sign.
    let want = mk_antichiral(
        &sp("f0").conj(),
        &-sp("f1").conj(),
        &-sp("f2").conj(),
        &sp("f12").conj(),
        L,
    );
    checks.push(check(
        "twisted conjugation maps the chiral constructor to the antichiral one",
        f.twisted_dagger() == want && is_antichiral(&want),
    ));

    // Products of chiral fields are chiral; the ring property.
    let g = mk_chiral(&sp("g0"), &sp("g1"), &sp("g2"), &sp("g12"), L);
    let prod = &f * &g;
    checks.push(check(
        "chiral fields form a ring",
        is_chiral(&prod) && sector_of(&prod) == Sector::Small,
    ));

    // The forced nilpotent top component: multiplying two expansions whose
    // top slots are plain scalars produces the extra
    // -vth_1 vth_2 (A_1 B_2 + A_2 B_1) in the chiral frame.
    let mk_unconstrained = |p: &str| {
        let c0 = SuperExpr::scalar(sp(&alloc::format!("{p}0")), L);
        let c1 = SuperExpr::gen(gens::vth(1), L).scale_poly(&sp(&alloc::format!("{p}1")));
        let c2 = SuperExpr::gen(gens::vth(2), L).scale_poly(&sp(&alloc::format!("{p}2")));
        let c12 = SuperExpr::scalar(sp(&alloc::format!("{p}f")), L);
        chiral_general(&c0, &c1, &c2, &c12, L)
    };
    let a = mk_unconstrained("A");
    let b = mk_unconstrained("B");
    let prod = change_frame(&(&a * &b), Frame::Standard, Frame::Chiral);
    let th12 = (1u16 << gens::theta(1)) | (1 << gens::theta(2));
    let forced = prod.coefficient(th12 | (1 << gens::vth(1)) | (1 << gens::vth(2)));
    let want_forced = (&(&sp("A1") * &sp("B2")) + &(&sp("A2") * &sp("B1")))
        .scale(&GaussRat::from_int(-1));
    checks.push(check(
        "products force the nilpotent top component",
        forced == want_forced,
    ));

    // Antichiral mirror through e'.
    let fd = f.twisted_dagger();
    let mut ann = true;
    for a in 1..=2u8 {
        ann &= e_prime(a, L).apply(&fd).is_zero();
    }
    checks.push(check(
        "antichiral image is annihilated by both unprimed invariant derivations",
        ann,
    ));
    checks
}
