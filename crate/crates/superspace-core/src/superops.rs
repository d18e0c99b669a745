//! Supersymmetry derivations, chirality, chiral/antichiral constructors,
//! and changes between the standard, chiral, and antichiral coordinate
//! frames.
//!
//! All derivations are represented in the standard frame; chirality in the
//! other frames is obtained by conjugating through the frame change.

use alloc::vec::Vec;

use crate::grassmann::{gens, Level, SuperExpr};
use crate::rational::GaussRat;
use crate::scalar::{FieldSymbol, ScalarPoly};
use crate::spinor;

/// A first-order operator: a sum of `coefficient * basic-derivative` terms,
/// applied by left multiplication of the coefficient.
#[derive(Clone, Debug)]
pub struct Derivation {
    terms: Vec<(SuperExpr, Basic)>,
}

#[derive(Clone, Copy, Debug)]
enum Basic {
    /// Left derivative with respect to one Grassmann generator.
    DGen(u8),
    /// Spacetime derivative.
    DX(u8),
}

impl Derivation {
    pub fn apply(&self, f: &SuperExpr) -> SuperExpr {
        let mut out = SuperExpr::zero(f.level());
        for (coeff, basic) in &self.terms {
            let piece = match basic {
                Basic::DGen(g) => f.d_gen(*g),
                Basic::DX(mu) => f.partial(*mu),
            };
            out += coeff * &piece;
        }
        out
    }

    /// `{D1, D2} f = D1(D2 f) + D2(D1 f)`.
    pub fn anticommutator(&self, other: &Derivation, f: &SuperExpr) -> SuperExpr {
        self.apply(&other.apply(f)) + other.apply(&self.apply(f))
    }
}

/// `Q_alpha = d/dtheta^alpha - i sum sigma^mu_{alpha betadot} thetabar^betadot d_mu`.
pub fn q(alpha: u8, level: Level) -> Derivation {
    let mut terms = alloc::vec![(SuperExpr::one(level), Basic::DGen(gens::theta(alpha)))];
    for mu in 0..4u8 {
        let mut coeff = SuperExpr::zero(level);
        for betadot in 1..=2u8 {
            coeff += SuperExpr::gen(gens::theta_bar(betadot), level)
                .scale(&(-GaussRat::i() * spinor::sigma(mu, alpha, betadot)));
        }
        terms.push((coeff, Basic::DX(mu)));
    }
    Derivation { terms }
}

/// `Qbar_betadot = -d/dthetabar^betadot + i sum theta^alpha sigma^mu_{alpha betadot} d_mu`.
pub fn q_bar(betadot: u8, level: Level) -> Derivation {
    let mut terms = alloc::vec![(
        SuperExpr::one(level).scale(&GaussRat::from_int(-1)),
        Basic::DGen(gens::theta_bar(betadot)),
    )];
    for mu in 0..4u8 {
        let mut coeff = SuperExpr::zero(level);
        for alpha in 1..=2u8 {
            coeff += SuperExpr::gen(gens::theta(alpha), level)
                .scale(&(GaussRat::i() * spinor::sigma(mu, alpha, betadot)));
        }
        terms.push((coeff, Basic::DX(mu)));
    }
    Derivation { terms }
}

/// `e'_alpha = d/dtheta^alpha + i sum sigma^mu_{alpha betadot} thetabar^betadot d_mu`,
/// invariant under the supersymmetry flow.
pub fn e_prime(alpha: u8, level: Level) -> Derivation {
    let mut terms = alloc::vec![(SuperExpr::one(level), Basic::DGen(gens::theta(alpha)))];
    for mu in 0..4u8 {
        let mut coeff = SuperExpr::zero(level);
        for betadot in 1..=2u8 {
            coeff += SuperExpr::gen(gens::theta_bar(betadot), level)
                .scale(&(GaussRat::i() * spinor::sigma(mu, alpha, betadot)));
        }
        terms.push((coeff, Basic::DX(mu)));
    }
    Derivation { terms }
}

/// `e''_betadot = -d/dthetabar^betadot - i sum theta^alpha sigma^mu_{alpha betadot} d_mu`.
pub fn e_dprime(betadot: u8, level: Level) -> Derivation {
    let mut terms = alloc::vec![(
        SuperExpr::one(level).scale(&GaussRat::from_int(-1)),
        Basic::DGen(gens::theta_bar(betadot)),
    )];
    for mu in 0..4u8 {
        let mut coeff = SuperExpr::zero(level);
        for alpha in 1..=2u8 {
            coeff += SuperExpr::gen(gens::theta(alpha), level)
                .scale(&(-GaussRat::i() * spinor::sigma(mu, alpha, betadot)));
        }
        terms.push((coeff, Basic::DX(mu)));
    }
    Derivation { terms }
}

/// `(eta Q + etabar Qbar) f = sum eta^alpha Q_alpha f - sum etabar^betadot
/// Qbar_betadot f`, the infinitesimal supersymmetry variation with the odd
/// parameters multiplying from the left. The input must live at the
/// parameter level.
pub fn param_susy_variation(f: &SuperExpr) -> SuperExpr {
    assert!(f.level() == Level::Param, "parameter level not activated");
    let mut out = SuperExpr::zero(Level::Param);
    for alpha in 1..=2u8 {
        out += &SuperExpr::gen(gens::eta(alpha), Level::Param) * &q(alpha, Level::Param).apply(f);
    }
    for betadot in 1..=2u8 {
        out += (&SuperExpr::gen(gens::eta_bar(betadot), Level::Param)
            * &q_bar(betadot, Level::Param).apply(f))
            .scale(&GaussRat::from_int(-1));
    }
    out
}

/// `true` iff both annihilating invariant derivations vanish on `f` exactly.
pub fn is_chiral(f: &SuperExpr) -> bool {
    (1..=2u8).all(|b| e_dprime(b, f.level()).apply(f).is_zero())
}

pub fn is_antichiral(f: &SuperExpr) -> bool {
    (1..=2u8).all(|a| e_prime(a, f.level()).apply(f).is_zero())
}

/// `box = sum eta^{mu nu} d_mu d_nu` on coefficients.
pub fn box_op(f: &SuperExpr) -> SuperExpr {
    let mut out = SuperExpr::zero(f.level());
    for mu in 0..4u8 {
        out += f
            .partial(mu)
            .partial(mu)
            .scale(&GaussRat::from_int(spinor::eta(mu, mu)));
    }
    out
}

/// The general chiral expansion in the standard frame from its four
/// independent components (arbitrary expressions in the non-coordinate
/// generators):
///
/// ```text
/// f = c0 + sum theta^g c[g] + theta^1 theta^2 c12
///     + i sum theta^g thetabar^d sigma^nu_{g d} d_nu c0
///     + i sum theta^1 theta^2 thetabar^d sigma^{nu g}_d d_nu c[g]
///     - theta^1 theta^2 thetabar^1. thetabar^2. box c0
/// ```
pub fn chiral_general(
    c0: &SuperExpr,
    c1: &SuperExpr,
    c2: &SuperExpr,
    c12: &SuperExpr,
    level: Level,
) -> SuperExpr {
    use gens::{theta, theta_bar};
    let comps = [c1, c2];
    let th = |a: u8| SuperExpr::gen(theta(a), level);
    let thb = |b: u8| SuperExpr::gen(theta_bar(b), level);
    let th12 = &th(1) * &th(2);

    let mut f = c0.clone();
    for g in 1..=2u8 {
        f += &th(g) * comps[(g - 1) as usize];
    }
    f += &th12 * c12;
    for g in 1..=2u8 {
        for d in 1..=2u8 {
            for nu in 0..4u8 {
                let s = GaussRat::i() * spinor::sigma(nu, g, d);
                if s.is_zero() {
                    continue;
                }
                f += (&(&th(g) * &thb(d)) * &c0.partial(nu)).scale(&s);
            }
        }
    }
    for d in 1..=2u8 {
        for g in 1..=2u8 {
            for nu in 0..4u8 {
                let s = GaussRat::i() * spinor::sigma_up_first(nu, g, d);
                if s.is_zero() {
                    continue;
                }
                f += (&(&th12 * &thb(d)) * &comps[(g - 1) as usize].partial(nu)).scale(&s);
            }
        }
    }
    let top = &th12 * &(&thb(1) * &thb(2));
    f += (&top * &box_op(c0)).scale(&GaussRat::from_int(-1));
    f
}

/// The general antichiral expansion in the standard frame.
pub fn antichiral_general(
    c0: &SuperExpr,
    cd1: &SuperExpr,
    cd2: &SuperExpr,
    cd12: &SuperExpr,
    level: Level,
) -> SuperExpr {
    use gens::{theta, theta_bar};
    let comps = [cd1, cd2];
    let th = |a: u8| SuperExpr::gen(theta(a), level);
    let thb = |b: u8| SuperExpr::gen(theta_bar(b), level);
    let tb12 = &thb(1) * &thb(2);

    let mut f = c0.clone();
    for d in 1..=2u8 {
        f += &thb(d) * comps[(d - 1) as usize];
    }
    f += &tb12 * cd12;
    for g in 1..=2u8 {
        for d in 1..=2u8 {
            for nu in 0..4u8 {
                let s = -GaussRat::i() * spinor::sigma(nu, g, d);
                if s.is_zero() {
                    continue;
                }
                f += (&(&th(g) * &thb(d)) * &c0.partial(nu)).scale(&s);
            }
        }
    }
    for g in 1..=2u8 {
        for d in 1..=2u8 {
            for nu in 0..4u8 {
                let s = GaussRat::i() * spinor::sigma_up_second(nu, g, d);
                if s.is_zero() {
                    continue;
                }
                f += (&(&th(g) * &tb12) * &comps[(d - 1) as usize].partial(nu)).scale(&s);
            }
        }
    }
    let top = &(&th(1) * &th(2)) * &tb12;
    f += (&top * &box_op(c0)).scale(&GaussRat::from_int(-1));
    f
}

/// The small chiral superfield with scalar components
/// `(f_(0), f_(1), f_(2), f_(12))`: the `theta^g`-component is the nilpotent
/// `vth_g f_(g)` and the top component is `vth_1 vth_2 f_(12)`.
pub fn mk_chiral(
    f0: &ScalarPoly,
    f1: &ScalarPoly,
    f2: &ScalarPoly,
    f12: &ScalarPoly,
    level: Level,
) -> SuperExpr {
    let c0 = SuperExpr::scalar(f0.clone(), level);
    let c1 = SuperExpr::gen(gens::vth(1), level).scale_poly(f1);
    let c2 = SuperExpr::gen(gens::vth(2), level).scale_poly(f2);
    let c12 =
        (&SuperExpr::gen(gens::vth(1), level) * &SuperExpr::gen(gens::vth(2), level)).scale_poly(f12);
    chiral_general(&c0, &c1, &c2, &c12, level)
}

/// The small antichiral superfield with scalar components
/// `(f_(0), f_(1.), f_(2.), f_(1.2.))`.
pub fn mk_antichiral(
    f0: &ScalarPoly,
    fd1: &ScalarPoly,
    fd2: &ScalarPoly,
    fd12: &ScalarPoly,
    level: Level,
) -> SuperExpr {
    let c0 = SuperExpr::scalar(f0.clone(), level);
    let c1 = SuperExpr::gen(gens::vth_bar(1), level).scale_poly(fd1);
    let c2 = SuperExpr::gen(gens::vth_bar(2), level).scale_poly(fd2);
    let c12 = (&SuperExpr::gen(gens::vth_bar(1), level) * &SuperExpr::gen(gens::vth_bar(2), level))
        .scale_poly(fd12);
    antichiral_general(&c0, &c1, &c2, &c12, level)
}

/// Coordinate frames on superspace: standard `x`, chiral
/// `x' = x + i theta sigma thetabar`, antichiral `x'' = x - i theta sigma thetabar`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Frame {
    Standard,
    Chiral,
    AntiChiral,
}

impl Frame {
    /// The coefficient of `i theta sigma thetabar` in `x_from - x_to`: the
    /// nilpotent shift a coefficient function picks up when it is
    /// re-expanded around the new frame's base point.
    fn shift_steps(from: Frame, to: Frame) -> i64 {
        let pos = |f: Frame| match f {
            Frame::Standard => 0i64,
            Frame::Chiral => 1,
            Frame::AntiChiral => -1,
        };
        pos(from) - pos(to)
    }
}

/// The chiral coordinate `x'^mu` as an expression in the standard frame.
pub fn x_chiral(mu: u8, level: Level) -> SuperExpr {
    SuperExpr::scalar(ScalarPoly::from_symbol(FieldSymbol::coord(mu)), level)
        + theta_sigma_thetabar(mu, level).scale(&GaussRat::i())
}

/// The antichiral coordinate `x''^mu` as an expression in the standard frame.
pub fn x_antichiral(mu: u8, level: Level) -> SuperExpr {
    SuperExpr::scalar(ScalarPoly::from_symbol(FieldSymbol::coord(mu)), level)
        + theta_sigma_thetabar(mu, level).scale(&-GaussRat::i())
}

/// `sum theta^a sigma^mu_{a b} thetabar^b`.
pub fn theta_sigma_thetabar(mu: u8, level: Level) -> SuperExpr {
    let mut out = SuperExpr::zero(level);
    for a in 1..=2u8 {
        for b in 1..=2u8 {
            let s = spinor::sigma(mu, a, b);
            if s.is_zero() {
                continue;
            }
            out += (&SuperExpr::gen(gens::theta(a), level)
                * &SuperExpr::gen(gens::theta_bar(b), level))
                .scale(&s);
        }
    }
    out
}

/// Re-express `f` (given in frame `from`) in frame `to` by Taylor expansion
/// of every coefficient in the nilpotent shift. The expansion terminates at
/// second order because the shift squares into the top theta monomial and
/// cubes to zero; the round trip is the exact identity.
pub fn change_frame(f: &SuperExpr, from: Frame, to: Frame) -> SuperExpr {
    let steps = Frame::shift_steps(from, to);
    if steps == 0 {
        return f.clone();
    }
    let level = f.level();
    // delta^mu = steps * i * theta sigma^mu thetabar
    let delta: Vec<SuperExpr> = (0..4u8)
        .map(|mu| theta_sigma_thetabar(mu, level).scale(&(GaussRat::i() * GaussRat::from_int(steps))))
        .collect();
    let mut out = SuperExpr::zero(level);
    for (mask, p) in f.terms() {
        let mono = SuperExpr::mono(mask, level);
        // T(p) = p + sum delta^mu d_mu p + 1/2 sum delta^mu delta^nu d_mu d_nu p
        let mut tp = SuperExpr::scalar(p.clone(), level);
        for mu in 0..4u8 {
            tp += &delta[mu as usize] * &SuperExpr::scalar(p.partial(mu), level);
        }
        for mu in 0..4u8 {
            for nu in 0..4u8 {
                let dd = &delta[mu as usize] * &delta[nu as usize];
                if dd.is_zero() {
                    continue;
                }
                tp += (&dd * &SuperExpr::scalar(p.partial(mu).partial(nu), level))
                    .scale(&GaussRat::ratio(1, 2));
            }
        }
        out += &mono * &tp;
    }
    out
}

/// Left derivative by a generator as a raw operation on the given
/// representation (no frame conversion); used to state operator identities
/// like "`e''` is `-d/dthetabar` in the chiral frame".
pub fn raw_d_gen(f: &SuperExpr, g: u8) -> SuperExpr {
    f.d_gen(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::{sector_of, Sector};
    use gens::*;

    const L: Level = Level::Standard;

    fn sp(name: &str) -> ScalarPoly {
        ScalarPoly::sym(name)
    }

    /// A generic superfield: all 256 standard monomials with fresh symbols.
    fn generic(prefix: &str) -> SuperExpr {
        let mut f = SuperExpr::zero(L);
        for mth in 0..16u16 {
            for mvth in 0..16u16 {
                let mask = mth | (mvth << 8);
                f += SuperExpr::term(
                    mask,
                    sp(&alloc::format!("{prefix}c{mask}")),
                    L,
                );
            }
        }
        f
    }

    #[test]
    fn q_on_constants_and_generators() {
        let one = SuperExpr::one(L);
        assert!(q(1, L).apply(&one).is_zero());
        for a in 1..=2u8 {
            for b in 1..=2u8 {
                let want = if a == b {
                    SuperExpr::one(L)
                } else {
                    SuperExpr::zero(L)
                };
                assert_eq!(q(a, L).apply(&SuperExpr::gen(theta(b), L)), want);
            }
        }
    }

    #[test]
    fn susy_anticommutators_on_generic_superfield() {
        let f = generic("f");
        // {Q_a, Qbar_b} f = 2 i sum sigma^mu_{a b} d_mu f.
        for a in 1..=2u8 {
            for b in 1..=2u8 {
                let lhs = q(a, L).anticommutator(&q_bar(b, L), &f);
                let mut rhs = SuperExpr::zero(L);
                for mu in 0..4u8 {
                    rhs += f
                        .partial(mu)
                        .scale(&(GaussRat::i() * GaussRat::from_int(2) * spinor::sigma(mu, a, b)));
                }
                assert_eq!(lhs, rhs, "Q-Qbar bracket at ({a},{b})");
            }
        }
        // {e'_a, e''_b} f = -2 i sigma d f; all same-type brackets vanish.
        for a in 1..=2u8 {
            for b in 1..=2u8 {
                let lhs = e_prime(a, L).anticommutator(&e_dprime(b, L), &f);
                let mut rhs = SuperExpr::zero(L);
                for mu in 0..4u8 {
                    rhs += f.partial(mu).scale(
                        &(-GaussRat::i() * GaussRat::from_int(2) * spinor::sigma(mu, a, b)),
                    );
                }
                assert_eq!(lhs, rhs, "e'-e'' bracket at ({a},{b})");
                assert!(q(a, L).anticommutator(&q(b, L), &f).is_zero());
                assert!(q_bar(a, L).anticommutator(&q_bar(b, L), &f).is_zero());
                assert!(e_prime(a, L).anticommutator(&e_prime(b, L), &f).is_zero());
                assert!(e_dprime(a, L).anticommutator(&e_dprime(b, L), &f).is_zero());
                assert!(e_prime(a, L).anticommutator(&q(b, L), &f).is_zero());
                assert!(e_prime(a, L).anticommutator(&q_bar(b, L), &f).is_zero());
                assert!(e_dprime(a, L).anticommutator(&q(b, L), &f).is_zero());
                assert!(e_dprime(a, L).anticommutator(&q_bar(b, L), &f).is_zero());
            }
        }
    }

    #[test]
    fn basic_chirality_examples() {
        for a in 1..=2u8 {
            assert!(is_chiral(&SuperExpr::gen(theta(a), L)));
            assert!(is_antichiral(&SuperExpr::gen(theta_bar(a), L)));
            assert!(!is_antichiral(&SuperExpr::gen(theta(a), L)));
        }
        for mu in 0..4u8 {
            assert!(is_chiral(&x_chiral(mu, L)));
            assert!(is_antichiral(&x_antichiral(mu, L)));
        }
    }

    #[test]
    fn mk_chiral_is_small_and_chiral() {
        let f = mk_chiral(&sp("f0"), &sp("f1"), &sp("f2"), &sp("f12"), L);
        assert!(is_chiral(&f));
        assert_eq!(sector_of(&f), Sector::Small);
        // theta^a thetabar^b coefficient is i sigma^mu d_mu f0; top is -box f0.
        for a in 1..=2u8 {
            for b in 1..=2u8 {
                let mut want = ScalarPoly::zero();
                for mu in 0..4u8 {
                    want += sp("f0").partial(mu).scale(&(GaussRat::i() * spinor::sigma(mu, a, b)));
                }
                let mask = (1u16 << theta(a)) | (1 << theta_bar(b));
                assert_eq!(f.coefficient(mask), want);
            }
        }
        let top = 0b1111u16;
        let mut boxf = ScalarPoly::zero();
        for mu in 0..4u8 {
            boxf += sp("f0")
                .partial(mu)
                .partial(mu)
                .scale(&GaussRat::from_int(spinor::eta(mu, mu)));
        }
        assert_eq!(f.coefficient(top), -boxf);
        assert!(mk_chiral(
            &ScalarPoly::zero(),
            &ScalarPoly::zero(),
            &ScalarPoly::zero(),
            &ScalarPoly::zero(),
            L
        )
        .is_zero());
    }

    #[test]
    fn dagger_of_chiral_is_antichiral_with_flipped_spinors() {
        let f = mk_chiral(&sp("f0"), &sp("f1"), &sp("f2"), &sp("f12"), L);
        let want = mk_antichiral(
            &sp("f0").conj(),
            &-sp("f1").conj(),
            &-sp("f2").conj(),
            &sp("f12").conj(),
            L,
        );
        assert_eq!(f.twisted_dagger(), want);
        assert!(is_antichiral(&f.twisted_dagger()));
    }

    #[test]
    fn chiral_products_stay_chiral() {
        let f = mk_chiral(&sp("A0"), &sp("A1"), &sp("A2"), &sp("A12"), L);
        let g = mk_chiral(&sp("B0"), &sp("B1"), &sp("B2"), &sp("B12"), L);
        let prod = &f * &g;
        assert!(is_chiral(&prod));
        assert_eq!(sector_of(&prod), Sector::Small);
    }

    #[test]
    fn chiral_in_chiral_frame_is_three_terms() {
        let f = mk_chiral(&sp("f0"), &sp("f1"), &sp("f2"), &sp("f12"), L);
        let fp = change_frame(&f, Frame::Standard, Frame::Chiral);
        // Expected: f0 + sum theta^g vth_g f_g + theta^1 theta^2 vth_1 vth_2 f12,
        // with no thetabar or vthbar generators.
        let mut want = SuperExpr::scalar(sp("f0"), L);
        for g in 1..=2u8 {
            want += SuperExpr::mono((1 << theta(g)) | (1 << vth(g)), L)
                .scale_poly(&sp(&alloc::format!("f{g}")));
        }
        want += SuperExpr::mono(
            (1 << theta(1)) | (1 << theta(2)) | (1 << vth(1)) | (1 << vth(2)),
            L,
        )
        .scale_poly(&sp("f12"));
        assert_eq!(fp, want);
        // Round trip.
        assert_eq!(change_frame(&fp, Frame::Chiral, Frame::Standard), f);
    }

    #[test]
    fn frame_round_trips_on_generic_superfield() {
        let f = generic("g");
        for to in [Frame::Chiral, Frame::AntiChiral] {
            let there = change_frame(&f, Frame::Standard, to);
            assert_eq!(change_frame(&there, to, Frame::Standard), f);
        }
        let ch = change_frame(&f, Frame::Standard, Frame::Chiral);
        let anti = change_frame(&ch, Frame::Chiral, Frame::AntiChiral);
        assert_eq!(anti, change_frame(&f, Frame::Standard, Frame::AntiChiral));
    }

    #[test]
    fn e_dprime_is_raw_derivative_in_chiral_frame() {
        let f = generic("h");
        for b in 1..=2u8 {
            let lhs = change_frame(&e_dprime(b, L).apply(&f), Frame::Standard, Frame::Chiral);
            let rhs = change_frame(&f, Frame::Standard, Frame::Chiral)
                .d_gen(theta_bar(b))
                .scale(&GaussRat::from_int(-1));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn unconstrained_f_component_forces_nilpotent_correction() {
        // Two chiral expansions whose top components are plain scalars (not
        // nilpotent) multiply into something outside that family: in the
        // chiral frame the product's theta^1 theta^2 block picks up the
        // extra -vth_1 vth_2 (A1 B2 + A2 B1).
        let mk = |p: &str| {
            let c0 = SuperExpr::scalar(sp(&alloc::format!("{p}0")), L);
            let c1 = SuperExpr::gen(vth(1), L).scale_poly(&sp(&alloc::format!("{p}1")));
            let c2 = SuperExpr::gen(vth(2), L).scale_poly(&sp(&alloc::format!("{p}2")));
            let c12 = SuperExpr::scalar(sp(&alloc::format!("{p}f")), L); // plain scalar F-slot
            chiral_general(&c0, &c1, &c2, &c12, L)
        };
        let a = mk("A");
        let b = mk("B");
        let prod = change_frame(&(&a * &b), Frame::Standard, Frame::Chiral);
        let th12 = (1u16 << theta(1)) | (1 << theta(2));
        // Plain theta^1 theta^2 block: A0 Bf + Af B0.
        assert_eq!(
            prod.coefficient(th12),
            &(&sp("A0") * &sp("Bf")) + &(&sp("Af") * &sp("B0"))
        );
        // Forced nilpotent block: -(A1 B2 + A2 B1).
        let forced = prod.coefficient(th12 | (1 << vth(1)) | (1 << vth(2)));
        assert_eq!(
            forced,
            -(&(&sp("A1") * &sp("B2")) + &(&sp("A2") * &sp("B1")))
        );
    }

    #[test]
    fn derivations_conjugate_through_dagger_with_parity_sign() {
        // On even f: (Q_a f)^dag = Qbar_a f^dag; on odd f the sign flips.
        // Same pattern for e' and e''.
        let even = generic("e")
            .terms()
            .filter(|(m, _)| m.count_ones() % 2 == 0)
            .map(|(m, p)| SuperExpr::term(m, p.clone(), L))
            .fold(SuperExpr::zero(L), |acc, t| acc + t);
        let odd = generic("o")
            .terms()
            .filter(|(m, _)| m.count_ones() % 2 == 1)
            .map(|(m, p)| SuperExpr::term(m, p.clone(), L))
            .fold(SuperExpr::zero(L), |acc, t| acc + t);
        for a in 1..=2u8 {
            let lhs = q(a, L).apply(&even).twisted_dagger();
            let rhs = q_bar(a, L).apply(&even.twisted_dagger());
            assert_eq!(lhs, rhs);
            let lhs = q(a, L).apply(&odd).twisted_dagger();
            let rhs = q_bar(a, L).apply(&odd.twisted_dagger());
            assert_eq!(lhs, -rhs);
            let lhs = e_prime(a, L).apply(&even).twisted_dagger();
            let rhs = e_dprime(a, L).apply(&even.twisted_dagger());
            assert_eq!(lhs, rhs);
            let lhs = e_dprime(a, L).apply(&odd).twisted_dagger();
            let rhs = e_prime(a, L).apply(&odd.twisted_dagger());
            assert_eq!(lhs, -rhs);
        }
    }

    #[test]
    fn graded_leibniz_rule() {
        let f_odd = SuperExpr::gen(theta(1), L).scale_poly(&sp("A"))
            + SuperExpr::gen(vth_bar(2), L).scale_poly(&sp("B"));
        let g = generic("k");
        for a in 1..=2u8 {
            // Q_a is odd: Q(f g) = (Q f) g + (-1)^{p(f)} f (Q g).
            let lhs = q(a, L).apply(&(&f_odd * &g));
            let rhs = &q(a, L).apply(&f_odd) * &g - &f_odd * &q(a, L).apply(&g);
            assert_eq!(lhs, rhs);
        }
    }
}
