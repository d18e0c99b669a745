//! The nine-dimensional exotic algebra: the full multiplication table
//! checked entry by entry against its printed form, the conjugation
//! antihomomorphism on random pairs, a non-associativity witness, and the
//! flattening projection.

use alloc::vec::Vec;

use rand::Rng;

use super::{check, random_coeff, Check};
use crate::calculus::{exotic_mul, exotic_pev, ExoticElem, EXOTIC_DIM};
use crate::grassmann::{Level, SuperExpr};
use crate::rational::GaussRat;

/// The printed multiplication table in the basis
/// `(1, v1, v2, vb1, vb2, s11, s12, s21, s22)`: entry `(c, k)` stands for
/// `c * basis[k]`, and `None` for zero.
const TABLE: [[Option<(i64, usize)>; 9]; 9] = {
    const O: Option<(i64, usize)> = None;
    let e = |c: i64, k: usize| Some((c, k));
    [
        // row 1
        [e(1, 0), e(1, 1), e(1, 2), e(1, 3), e(1, 4), e(1, 5), e(1, 6), e(1, 7), e(1, 8)],
        // row v1
        [e(1, 1), O, e(1, 0), e(1, 5), e(1, 6), O, O, e(1, 3), e(1, 4)],
        // row v2
        [e(1, 2), e(-1, 0), O, e(1, 7), e(1, 8), e(-1, 3), e(-1, 4), O, O],
        // row vb1
        [e(1, 3), e(-1, 5), e(-1, 7), O, e(-1, 0), O, e(1, 1), O, e(1, 2)],
        // row vb2
        [e(1, 4), e(-1, 6), e(-1, 8), e(1, 0), O, e(-1, 1), O, e(-1, 2), O],
        // row s11
        [e(1, 5), O, e(-1, 3), O, e(-1, 1), O, O, O, e(1, 0)],
        // row s12
        [e(1, 6), O, e(-1, 4), e(1, 1), O, O, O, e(1, 0), O],
        // row s21
        [e(1, 7), e(1, 3), O, O, e(-1, 2), O, e(1, 0), O, O],
        // row s22
        [e(1, 8), e(1, 4), O, e(1, 2), O, e(1, 0), O, O, O],
    ]
};

fn random_elem(r: &mut rand_chacha::ChaCha8Rng) -> ExoticElem {
    let mut e = ExoticElem::zero();
    for _ in 0..3 {
        let k = r.gen_range(0..EXOTIC_DIM);
        e = e.add(&ExoticElem::basis(k).scale(&random_coeff(r)));
    }
    e
}

pub fn run() -> Vec<Check> {
    let mut checks = Vec::new();

    let mut table_ok = true;
    for a in 0..EXOTIC_DIM {
        for b in 0..EXOTIC_DIM {
            let got = exotic_mul(&ExoticElem::basis(a), &ExoticElem::basis(b));
            let want = match TABLE[a][b] {
                None => ExoticElem::zero(),
                Some((c, k)) => ExoticElem::basis(k).scale(&GaussRat::from_int(c)),
            };
            table_ok &= got == want;
        }
    }
    checks.push(check(
        "full 9 x 9 multiplication table matches entry by entry",
        table_ok,
    ));

    let mut dagger_ok = true;
    let mut bilinear_ok = true;
    for k in 0..100u64 {
        let mut r = super::rng(0xe801 ^ k);
        let x = random_elem(&mut r);
        let y = random_elem(&mut r);
        dagger_ok &= exotic_mul(&x, &y).dagger() == exotic_mul(&y.dagger(), &x.dagger());
        let z = random_elem(&mut r);
        let lhs = exotic_mul(&x.add(&y), &z);
        let rhs = exotic_mul(&x, &z).add(&exotic_mul(&y, &z));
        bilinear_ok &= lhs == rhs;
    }
    checks.push(check(
        "twisted conjugation reverses products on 100 random pairs",
        dagger_ok,
    ));
    checks.push(check("multiplication is bilinear", bilinear_ok));

    // Non-associativity witness: (v1 v1) v2 = 0 but v1 (v1 v2) = v1.
    let v1 = ExoticElem::vth(1);
    let v2 = ExoticElem::vth(2);
    let left = exotic_mul(&exotic_mul(&v1, &v1), &v2);
    let right = exotic_mul(&v1, &exotic_mul(&v1, &v2));
    checks.push(check(
        "an explicit non-associativity witness exists",
        left != right && left == ExoticElem::zero() && right == v1,
    ));

    // The flattening projection table.
    const L: Level = Level::Standard;
    let m = |nib: u16| SuperExpr::mono(nib << 8, L);
    let neg = |e: ExoticElem| e.scale(&GaussRat::from_int(-1));
    let pairs = [
        (0b0000u16, ExoticElem::one()),
        (0b0001, ExoticElem::vth(1)),
        (0b0010, ExoticElem::vth(2)),
        (0b0100, ExoticElem::vth_bar(1)),
        (0b1000, ExoticElem::vth_bar(2)),
        (0b0011, ExoticElem::one()),
        (0b1100, neg(ExoticElem::one())),
        (0b0101, ExoticElem::sigma(1, 1)),
        (0b1001, ExoticElem::sigma(1, 2)),
        (0b0110, ExoticElem::sigma(2, 1)),
        (0b1010, ExoticElem::sigma(2, 2)),
        (0b0111, ExoticElem::vth_bar(1)),
        (0b1011, ExoticElem::vth_bar(2)),
        (0b1101, neg(ExoticElem::vth(1))),
        (0b1110, neg(ExoticElem::vth(2))),
        (0b1111, neg(ExoticElem::one())),
    ];
    let mut flat_ok = true;
    for (nib, want) in pairs {
        flat_ok &= exotic_pev(&m(nib)).unwrap() == want;
    }
    checks.push(check(
        "flattening projection matches the assignment table",
        flat_ok,
    ));
    checks
}
