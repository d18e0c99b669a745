//! Golden checks for the sector product expansions: the full tame product
//! display transcribed block by block, its medium and small specializations,
//! and sector closure on randomized instances.

use alloc::vec::Vec;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{check, random_coeff, Check};
use crate::grassmann::{gens, sector_of, Level, Sector, SuperExpr, TameComponents};
use crate::rational::GaussRat;
use crate::scalar::ScalarPoly;
use crate::spinor;

const L: Level = Level::Standard;

fn mask(gs: &[u8]) -> u16 {
    gs.iter().fold(0u16, |m, g| m | (1 << g))
}

/// The explicit product expansion of two tame scalar superfields,
/// transcribed block by block. `dotted(c, b)` below refers to the dotted
/// spinor components `c_(betadot)`.
pub(crate) fn tame_product_display(a: &TameComponents, b: &TameComponents) -> SuperExpr {
    use gens::{theta, theta_bar, vth, vth_bar};
    let mut e = SuperExpr::zero(L);
    let mut put = |m: u16, p: ScalarPoly| e += SuperExpr::term(m, p, L);

    let idx = |k: u8| (k - 1) as usize;
    // Scalar block.
    put(0, &a.c0 * &b.c0);
    // theta^alpha vth_alpha.
    for al in 1..=2u8 {
        put(
            mask(&[theta(al), vth(al)]),
            &(&a.ca[idx(al)] * &b.c0) + &(&a.c0 * &b.ca[idx(al)]),
        );
        put(
            mask(&[theta_bar(al), vth_bar(al)]),
            &(&a.cbd[idx(al)] * &b.c0) + &(&a.c0 * &b.cbd[idx(al)]),
        );
    }
    let th12 = mask(&[theta(1), theta(2)]);
    let tb12 = mask(&[theta_bar(1), theta_bar(2)]);
    // theta^1 theta^2 blocks.
    put(th12, &(&a.cp0 * &b.c0) + &(&a.c0 * &b.cp0));
    put(
        th12 | mask(&[vth(1), vth(2)]),
        &(&(&a.c12 * &b.c0) - &(&a.ca[0] * &b.ca[1])) + &(&(&a.c0 * &b.c12) - &(&a.ca[1] * &b.ca[0])),
    );
    // theta^alpha thetabar^betadot blocks.
    for al in 1..=2u8 {
        for bd in 1..=2u8 {
            let mut vec_part = ScalarPoly::zero();
            for mu in 0..4usize {
                vec_part += (&(&a.cv[mu] * &b.c0) + &(&a.c0 * &b.cv[mu]))
                    .scale(&spinor::sigma(mu as u8, al, bd));
            }
            put(mask(&[theta(al), theta_bar(bd)]), vec_part);
            put(
                mask(&[theta(al), theta_bar(bd), vth(al), vth_bar(bd)]),
                &(&(&a.cab[idx(al)][idx(bd)] * &b.c0) - &(&a.ca[idx(al)] * &b.cbd[idx(bd)]))
                    + &(&(&a.c0 * &b.cab[idx(al)][idx(bd)]) - &(&a.cbd[idx(bd)] * &b.ca[idx(al)])),
            );
        }
    }
    // thetabar^1. thetabar^2. blocks.
    put(tb12, &(&a.cpp0 * &b.c0) + &(&a.c0 * &b.cpp0));
    put(
        tb12 | mask(&[vth_bar(1), vth_bar(2)]),
        &(&(&a.cd12 * &b.c0) - &(&a.cbd[0] * &b.cbd[1]))
            + &(&(&a.c0 * &b.cd12) - &(&a.cbd[1] * &b.cbd[0])),
    );
    // theta^1 theta^2 thetabar^betadot blocks.
    for bd in 1..=2u8 {
        let base = th12 | mask(&[theta_bar(bd)]);
        for al in 1..=2u8 {
            let mut acc = ScalarPoly::zero();
            for mu in 0..4usize {
                let inner = &(&(&a.cpv[mu] * &b.c0) + &(&a.cv[mu] * &b.ca[idx(al)]))
                    + &(&(&a.ca[idx(al)] * &b.cv[mu]) + &(&a.c0 * &b.cpv[mu]));
                acc += inner.scale(&spinor::sigma_up_first(mu as u8, al, bd));
            }
            put(base | mask(&[vth(al)]), acc);
        }
        put(
            base | mask(&[vth_bar(bd)]),
            &(&(&a.cpbd[idx(bd)] * &b.c0) + &(&a.cp0 * &b.cbd[idx(bd)]))
                + &(&(&a.cbd[idx(bd)] * &b.cp0) + &(&a.c0 * &b.cpbd[idx(bd)])),
        );
        let long = &(&(&(&a.c12b[idx(bd)] * &b.c0) + &(&a.c12 * &b.cbd[idx(bd)]))
            + &(&(&a.cab[0][idx(bd)] * &b.ca[1]) + &(&a.cab[1][idx(bd)] * &b.ca[0])))
            + &(&(&(&a.ca[0] * &b.cab[1][idx(bd)]) + &(&a.ca[1] * &b.cab[0][idx(bd)]))
                + &(&(&a.cbd[idx(bd)] * &b.c12) + &(&a.c0 * &b.c12b[idx(bd)])));
        put(base | mask(&[vth(1), vth(2), vth_bar(bd)]), long);
    }
    // theta^alpha thetabar^1. thetabar^2. blocks.
    for al in 1..=2u8 {
        let base = mask(&[theta(al)]) | tb12;
        put(
            base | mask(&[vth(al)]),
            &(&(&a.cppa[idx(al)] * &b.c0) + &(&a.cpp0 * &b.ca[idx(al)]))
                + &(&(&a.ca[idx(al)] * &b.cpp0) + &(&a.c0 * &b.cppa[idx(al)])),
        );
        for bd in 1..=2u8 {
            let mut acc = ScalarPoly::zero();
            for mu in 0..4usize {
                let inner = &(&(&a.cppv[mu] * &b.c0) + &(&a.cv[mu] * &b.cbd[idx(bd)]))
                    + &(&(&a.cbd[idx(bd)] * &b.cv[mu]) + &(&a.c0 * &b.cppv[mu]));
                acc += inner.scale(&spinor::sigma_up_second(mu as u8, al, bd));
            }
            put(base | mask(&[vth_bar(bd)]), acc);
        }
        let long = &(&(&(&a.ca12[idx(al)] * &b.c0) + &(&a.cab[idx(al)][0] * &b.cbd[1]))
            + &(&(&a.cab[idx(al)][1] * &b.cbd[0]) + &(&a.cd12 * &b.ca[idx(al)])))
            + &(&(&(&a.ca[idx(al)] * &b.cd12) + &(&a.cbd[0] * &b.cab[idx(al)][1]))
                + &(&(&a.cbd[1] * &b.cab[idx(al)][0]) + &(&a.c0 * &b.ca12[idx(al)])));
        put(base | mask(&[vth(al), vth_bar(1), vth_bar(2)]), long);
    }
    // Top blocks.
    let top = th12 | tb12;
    {
        let mut plain = &(&(&a.ct0 * &b.c0) + &(&a.cp0 * &b.cpp0))
            + &(&(&a.cpp0 * &b.cp0) + &(&a.c0 * &b.ct0));
        for mu in 0..4usize {
            plain += (&a.cv[mu] * &b.cv[mu])
                .scale(&GaussRat::from_int(2 * spinor::eta(mu as u8, mu as u8)));
        }
        put(top, plain);
    }
    {
        let part1 = &(&(&a.ct12 * &b.c0) - &(&a.cppa[0] * &b.ca[1]))
            + &(&(&a.cpp0 * &b.c12) - &(&a.cppa[1] * &b.ca[0]));
        let part2 = &(&(&a.c12 * &b.cpp0) - &(&a.ca[0] * &b.cppa[1]))
            + &(&(&a.c0 * &b.ct12) - &(&a.ca[1] * &b.cppa[0]));
        put(top | mask(&[vth(1), vth(2)]), &part1 + &part2);
    }
    for al in 1..=2u8 {
        for bd in 1..=2u8 {
            let mut acc = ScalarPoly::zero();
            for mu in 0..4usize {
                let inner = &(&(&(&a.ctv[mu] * &b.c0) + &(&a.cpv[mu] * &b.cbd[idx(bd)]))
                    - &(&(&a.cppv[mu] * &b.ca[idx(al)]) + &(&a.ca[idx(al)] * &b.cppv[mu])))
                    + &(&(&a.cbd[idx(bd)] * &b.cpv[mu]) + &(&a.c0 * &b.ctv[mu]));
                acc += inner.scale(&spinor::sigma_bar_upper(mu as u8, bd, al));
            }
            put(top | mask(&[vth(al), vth_bar(bd)]), acc);
        }
    }
    {
        let part1 = &(&(&a.ctd12 * &b.c0) - &(&a.cpbd[0] * &b.cbd[1]))
            + &(&(&a.cp0 * &b.cd12) - &(&a.cpbd[1] * &b.cbd[0]));
        let part2 = &(&(&a.cd12 * &b.cp0) - &(&a.cbd[0] * &b.cpbd[1]))
            + &(&(&a.c0 * &b.ctd12) - &(&a.cbd[1] * &b.cpbd[0]));
        put(top | mask(&[vth_bar(1), vth_bar(2)]), &part1 + &part2);
    }
    {
        let neg = |p: ScalarPoly| p.scale(&GaussRat::from_int(-1));
        let mut acc = &a.ctop * &b.c0;
        acc += neg(&a.c12b[0] * &b.cbd[1]);
        acc += neg(&a.c12b[1] * &b.cbd[0]);
        acc += neg(&a.ca12[0] * &b.ca[1]);
        acc += neg(&a.ca12[1] * &b.ca[0]);
        acc += &a.c12 * &b.cd12;
        acc += &a.cab[0][0] * &b.cab[1][1];
        acc += &a.cab[0][1] * &b.cab[1][0];
        acc += &a.cab[1][0] * &b.cab[0][1];
        acc += &a.cab[1][1] * &b.cab[0][0];
        acc += &a.cd12 * &b.c12;
        acc += neg(&a.ca[0] * &b.ca12[1]);
        acc += neg(&a.ca[1] * &b.ca12[0]);
        acc += neg(&a.cbd[0] * &b.c12b[1]);
        acc += neg(&a.cbd[1] * &b.c12b[0]);
        acc += &a.c0 * &b.ctop;
        put(top | mask(&[vth(1), vth(2), vth_bar(1), vth_bar(2)]), acc);
    }
    e
}

fn medium_components(c: &mut TameComponents) {
    c.cp0 = ScalarPoly::zero();
    c.cpp0 = ScalarPoly::zero();
}

fn small_components(c: &mut TameComponents) {
    medium_components(c);
    c.cpbd = [ScalarPoly::zero(), ScalarPoly::zero()];
    c.cppa = [ScalarPoly::zero(), ScalarPoly::zero()];
    c.ct12 = ScalarPoly::zero();
    c.ctd12 = ScalarPoly::zero();
}

/// A random instance of the given sector with small rational components.
pub(crate) fn random_sector_instance(r: &mut ChaCha8Rng, sector: Sector) -> SuperExpr {
    let mut c = TameComponents::default();
    let mut sym_id = 0u32;
    let mut gen = |r: &mut ChaCha8Rng| {
        sym_id += 1;
        ScalarPoly::sym(&alloc::format!("r{sym_id}")).scale(&random_coeff(r))
    };
    c.c0 = gen(r);
    c.ca = [gen(r), gen(r)];
    c.cbd = [gen(r), gen(r)];
    c.cp0 = gen(r);
    c.c12 = gen(r);
    c.cv = [gen(r), gen(r), gen(r), gen(r)];
    c.cab = [[gen(r), gen(r)], [gen(r), gen(r)]];
    c.cpp0 = gen(r);
    c.cd12 = gen(r);
    c.cpv = [gen(r), gen(r), gen(r), gen(r)];
    c.cpbd = [gen(r), gen(r)];
    c.c12b = [gen(r), gen(r)];
    c.cppa = [gen(r), gen(r)];
    c.cppv = [gen(r), gen(r), gen(r), gen(r)];
    c.ca12 = [gen(r), gen(r)];
    c.ct0 = gen(r);
    c.ct12 = gen(r);
    c.ctv = [gen(r), gen(r), gen(r), gen(r)];
    c.ctd12 = gen(r);
    c.ctop = gen(r);
    match sector {
        Sector::Tame | Sector::General => {}
        Sector::Medium => medium_components(&mut c),
        Sector::Small => small_components(&mut c),
    }
    c.assemble(L)
}

pub fn run() -> Vec<Check> {
    let mut checks = Vec::new();

    // Golden displays: tame, medium, small.
    let a = TameComponents::symbols("A");
    let b = TameComponents::symbols("B");
    let product = &a.assemble(L) * &b.assemble(L);
    checks.push(check(
        "tame product reproduces the block expansion",
        product == tame_product_display(&a, &b),
    ));
    checks.push(check(
        "tame product is symmetric",
        product == &b.assemble(L) * &a.assemble(L),
    ));

    let mut am = a.clone();
    let mut bm = b.clone();
    medium_components(&mut am);
    medium_components(&mut bm);
    checks.push(check(
        "medium product reproduces the specialized block expansion",
        &am.assemble(L) * &bm.assemble(L) == tame_product_display(&am, &bm),
    ));

    let mut asmall = a.clone();
    let mut bsmall = b.clone();
    small_components(&mut asmall);
    small_components(&mut bsmall);
    checks.push(check(
        "small product reproduces the specialized block expansion",
        &asmall.assemble(L) * &bsmall.assemble(L) == tame_product_display(&asmall, &bsmall),
    ));

    // Named coefficient from the small-product display:
    // theta^1 theta^2 vth_1 vth_2 of A B = A12 B0 - A1 B2 - A2 B1 + A0 B12.
    let spot = (&asmall.assemble(L) * &bsmall.assemble(L)).coefficient(
        mask(&[gens::theta(1), gens::theta(2), gens::vth(1), gens::vth(2)]),
    );
    let want = &(&(&asmall.c12 * &bsmall.c0) - &(&asmall.ca[0] * &bsmall.ca[1]))
        + &(&(&asmall.c0 * &bsmall.c12) - &(&asmall.ca[1] * &bsmall.ca[0]));
    checks.push(check("small-product top spinor block coefficient", spot == want));

    // Sector closure on 100 random pairs (tame, medium, small cycled) plus
    // sector containment of the factors.
    let mut r = super::rng(0x5ec70c);
    let mut closure_ok = true;
    for k in 0..100u32 {
        let sector = match k % 3 {
            0 => Sector::Tame,
            1 => Sector::Medium,
            _ => Sector::Small,
        };
        let x = random_sector_instance(&mut r, sector);
        let y = random_sector_instance(&mut r, sector);
        let prod = &x * &y;
        let got = sector_of(&prod);
        let fits = match sector {
            Sector::Tame => matches!(got, Sector::Tame | Sector::Medium | Sector::Small),
            Sector::Medium => matches!(got, Sector::Medium | Sector::Small),
            Sector::Small => got == Sector::Small,
            Sector::General => true,
        };
        closure_ok &= fits;
        if r.gen_bool(0.2) {
            // The twisted conjugation preserves each sector.
            let dag = sector_of(&x.twisted_dagger());
            closure_ok &= dag == sector_of(&x);
        }
    }
    checks.push(check(
        "sector closure under products on 100 random pairs",
        closure_ok,
    ));

    // Graded structure properties on random inhomogeneous triples.
    let pool = ["u", "v", "w"];
    let mut assoc = true;
    let mut graded = true;
    let mut dagger = true;
    for k in 0..100u64 {
        let mut rr = super::rng(0xa550c ^ k);
        let x = super::random_super(&mut rr, &pool, L);
        let y = super::random_super(&mut rr, &pool, L);
        let z = super::random_super(&mut rr, &pool, L);
        assoc &= &(&x * &y) * &z == &x * &(&y * &z);
        dagger &= (&x * &y).twisted_dagger() == &y.twisted_dagger() * &x.twisted_dagger();
        dagger &= x.twisted_dagger().twisted_dagger() == x;
        dagger &= (&x * &y).plain_conj() == &x.plain_conj() * &y.plain_conj();
        // Graded commutativity on the homogeneous parts.
        let split = |e: &SuperExpr, parity: u32| -> SuperExpr {
            e.terms()
                .filter(|(m, _)| m.count_ones() % 2 == parity)
                .fold(SuperExpr::zero(L), |acc, (m, p)| {
                    acc + SuperExpr::term(m, p.clone(), L)
                })
        };
        for px in 0..2u32 {
            for py in 0..2u32 {
                let xe = split(&x, px);
                let ye = split(&y, py);
                let rhs = if px * py % 2 == 1 {
                    (&ye * &xe).scale(&GaussRat::from_int(-1))
                } else {
                    &ye * &xe
                };
                graded &= &xe * &ye == rhs;
            }
        }
    }
    checks.push(check("associativity on 100 random triples", assoc));
    checks.push(check(
        "graded commutativity with the Koszul sign on 100 random pairs",
        graded,
    ));
    checks.push(check(
        "twisted conjugation antihomomorphism and involution on 100 random pairs",
        dagger,
    ));
    checks
}
