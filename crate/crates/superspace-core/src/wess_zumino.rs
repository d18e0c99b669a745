//! The Wess-Zumino model pipeline: powers of a small chiral superfield, the
//! action kernels, the purge-evaluated spacetime density, and elimination of
//! the auxiliary components.

use alloc::string::String;

use crate::calculus::{action_density_parts, PevMap};
use crate::error::CoreError;
use crate::grassmann::{sector_of, Sector, SuperExpr};
use crate::rational::GaussRat;
use crate::scalar::{FieldSymbol, ScalarPoly};
use crate::superops::is_chiral;

/// Formal coupling constants of the model; spacetime derivatives annihilate
/// them and conjugation produces the barred partners.
#[derive(Clone, Debug)]
pub struct WZParams {
    pub lambda: ScalarPoly,
    pub m: ScalarPoly,
    pub g: ScalarPoly,
}

impl WZParams {
    /// Fresh formal symbols `lambda`, `m`, `g`.
    pub fn formal() -> Self {
        WZParams {
            lambda: ScalarPoly::from_symbol(FieldSymbol::coupling("lambda")),
            m: ScalarPoly::from_symbol(FieldSymbol::coupling("m")),
            g: ScalarPoly::from_symbol(FieldSymbol::coupling("g")),
        }
    }

    /// All couplings zero (free theory).
    pub fn zero() -> Self {
        WZParams {
            lambda: ScalarPoly::zero(),
            m: ScalarPoly::zero(),
            g: ScalarPoly::zero(),
        }
    }
}

/// The three Berezin kernels of the action: the full-measure piece
/// `-1/4 f^dag f`, the chiral superpotential piece, and its conjugate
/// (which enters the action with measure `-int d2thetabar`).
#[derive(Clone, Debug)]
pub struct WZKernel {
    pub d_term: SuperExpr,
    pub f_term: SuperExpr,
    pub fbar_term: SuperExpr,
}

/// Build the kernels from a small chiral superfield.
pub fn wz_kernel(f: &SuperExpr, p: &WZParams) -> Result<WZKernel, CoreError> {
    if !is_chiral(f) {
        return Err(CoreError::NotChiral);
    }
    if !f.is_zero() && sector_of(f) != Sector::Small {
        return Err(CoreError::NotInSector("small"));
    }
    let fd = f.twisted_dagger();
    let d_term = (&fd * f).scale(&GaussRat::ratio(-1, 4));
    let f2 = f * f;
    let f3 = &f2 * f;
    let f_term = f.scale_poly(&p.lambda)
        + f2.scale_poly(&p.m).scale(&GaussRat::ratio(1, 2))
        + f3.scale_poly(&p.g).scale(&GaussRat::ratio(1, 3));
    let fd2 = &fd * &fd;
    let fd3 = &fd2 * &fd;
    let fbar_term = fd.scale_poly(&p.lambda.conj())
        + fd2.scale_poly(&p.m.conj()).scale(&GaussRat::ratio(1, 2))
        + fd3.scale_poly(&p.g.conj()).scale(&GaussRat::ratio(1, 3));
    Ok(WZKernel {
        d_term,
        f_term,
        fbar_term,
    })
}

/// The purge-evaluated spacetime density of the model, up to boundary terms.
pub fn wz_action_density(
    f: &SuperExpr,
    p: &WZParams,
    map: &PevMap,
) -> Result<ScalarPoly, CoreError> {
    let k = wz_kernel(f, p)?;
    Ok(action_density_parts(&k.d_term, &k.f_term, &k.fbar_term, map))
}

/// Result of eliminating a conjugate pair of auxiliary components.
#[derive(Clone, Debug)]
pub struct AuxSolution {
    /// The density with the pair substituted by the solved values.
    pub on_shell: ScalarPoly,
    /// The solved value of the component itself.
    pub value: ScalarPoly,
    /// The solved value of its conjugate.
    pub conj_value: ScalarPoly,
}

/// Eliminate a non-dynamical conjugate pair `(s, conj s)` from a density of
/// the shape `A s sbar + B s + B' sbar + C` with constant `A`: solve the
/// linear equations of motion and substitute back. Densities with
/// derivatives of the pair or higher powers are rejected.
pub fn eliminate_aux_pair(density: &ScalarPoly, s: &FieldSymbol) -> Result<AuxSolution, CoreError> {
    let sbar = s.conj();
    if sbar == *s {
        return Err(CoreError::Elimination(String::from(
            "auxiliary component must be complex",
        )));
    }
    // No derivatives of the pair may occur.
    for (m, _) in density.terms() {
        for sym in m.symbols() {
            if !sym.deriv().is_empty() && (sym.family() == *s || sym.family() == sbar) {
                return Err(CoreError::Elimination(String::from(
                    "density couples derivatives of the auxiliary component",
                )));
            }
        }
    }
    let ds = density.d_dsym(s);
    let dsbar = density.d_dsym(&sbar);
    // A = coefficient of s sbar; must be a nonzero constant.
    let a_poly = ds.d_dsym(&sbar);
    if !a_poly.is_constant() || a_poly.is_zero() {
        return Err(CoreError::Elimination(String::from(
            "quadratic auxiliary coefficient is not a nonzero constant",
        )));
    }
    let a = a_poly.constant_part();
    let b = ds.subst(&sbar, &ScalarPoly::zero());
    let bprime = dsbar.subst(s, &ScalarPoly::zero());
    // Degree checks: after removing A s sbar + B s + B' sbar nothing with the
    // pair may remain.
    let value = bprime.scale(&(-GaussRat::one() * a.inv()));
    let conj_value = b.scale(&(-GaussRat::one() * a.inv()));
    let on_shell = density.subst(s, &value).subst(&sbar, &conj_value);
    for (m, _) in on_shell.terms() {
        for sym in m.symbols() {
            if sym.family() == *s || sym.family() == sbar {
                return Err(CoreError::Elimination(String::from(
                    "auxiliary component enters beyond the bilinear shape",
                )));
            }
        }
    }
    Ok(AuxSolution {
        on_shell,
        value,
        conj_value,
    })
}

/// Eliminate the top components `(f_(12), conj f_(12))` of the Wess-Zumino
/// density produced by [`wz_action_density`].
pub fn wz_eliminate_f(density: &ScalarPoly, f12: &FieldSymbol) -> Result<AuxSolution, CoreError> {
    eliminate_aux_pair(density, f12)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::{divergence_equal, susy_invariance_check, ActionMode};
    use crate::grassmann::gens::*;
    use crate::grassmann::Level;
    use crate::spinor;
    use crate::superops::mk_chiral;

    const L: Level = Level::Standard;

    fn sp(name: &str) -> ScalarPoly {
        ScalarPoly::sym(name)
    }

    fn comps() -> (ScalarPoly, ScalarPoly, ScalarPoly, ScalarPoly) {
        (sp("f0"), sp("f1"), sp("f2"), sp("f12"))
    }

    fn chiral_field() -> SuperExpr {
        let (f0, f1, f2, f12) = comps();
        mk_chiral(&f0, &f1, &f2, &f12, L)
    }

    fn mask(gs: &[u8]) -> u16 {
        gs.iter().fold(0u16, |m, g| m | (1 << g))
    }

    /// The nine-block expansion of `f^dag f` for a small chiral field,
    /// transcribed block by block.
    fn dagger_product_display() -> SuperExpr {
        let (f0, f1, f2, f12) = comps();
        let fa = [f1.clone(), f2.clone()];
        let c = |p: &ScalarPoly| p.conj();
        let mut e = SuperExpr::zero(L);
        let mut put = |m: u16, p: ScalarPoly| e += SuperExpr::term(m, p, L);

        put(0, &c(&f0) * &f0);
        for a in 1..=2u8 {
            put(
                mask(&[theta(a), vth(a)]),
                &c(&f0) * &fa[(a - 1) as usize],
            );
            put(
                mask(&[theta_bar(a), vth_bar(a)]),
                -(&c(&fa[(a - 1) as usize]) * &f0),
            );
        }
        put(mask(&[theta(1), theta(2), vth(1), vth(2)]), &c(&f0) * &f12);
        for a in 1..=2u8 {
            for b in 1..=2u8 {
                let mut v = ScalarPoly::zero();
                for mu in 0..4u8 {
                    v += (&(&c(&f0) * &f0.partial(mu)) - &(&c(&f0).partial(mu) * &f0))
                        .scale(&(GaussRat::i() * spinor::sigma(mu, a, b)));
                }
                put(mask(&[theta(a), theta_bar(b)]), v);
                put(
                    mask(&[theta(a), theta_bar(b), vth(a), vth_bar(b)]),
                    &c(&fa[(b - 1) as usize]) * &fa[(a - 1) as usize],
                );
            }
        }
        put(
            mask(&[theta_bar(1), theta_bar(2), vth_bar(1), vth_bar(2)]),
            &c(&f12) * &f0,
        );
        for b in 1..=2u8 {
            for a in 1..=2u8 {
                let mut v = ScalarPoly::zero();
                for mu in 0..4u8 {
                    v += (&(&c(&f0) * &fa[(a - 1) as usize].partial(mu))
                        - &(&c(&f0).partial(mu) * &fa[(a - 1) as usize]))
                        .scale(&(GaussRat::i() * spinor::sigma_up_first(mu, a, b)));
                }
                put(mask(&[theta(1), theta(2), theta_bar(b), vth(a)]), v);
            }
            put(
                mask(&[theta(1), theta(2), theta_bar(b), vth(1), vth(2), vth_bar(b)]),
                -(&c(&fa[(b - 1) as usize]) * &f12),
            );
        }
        for a in 1..=2u8 {
            for b in 1..=2u8 {
                let mut v = ScalarPoly::zero();
                for mu in 0..4u8 {
                    v += (&(&c(&fa[(b - 1) as usize]) * &f0.partial(mu))
                        - &(&c(&fa[(b - 1) as usize]).partial(mu) * &f0))
                        .scale(&(GaussRat::i() * spinor::sigma_up_second(mu, a, b)));
                }
                put(mask(&[theta(a), theta_bar(1), theta_bar(2), vth_bar(b)]), v);
            }
            put(
                mask(&[
                    theta(a),
                    theta_bar(1),
                    theta_bar(2),
                    vth(a),
                    vth_bar(1),
                    vth_bar(2),
                ]),
                &c(&f12) * &fa[(a - 1) as usize],
            );
        }
        let top = mask(&[theta(1), theta(2), theta_bar(1), theta_bar(2)]);
        let mut kin = ScalarPoly::zero();
        for mu in 0..4u8 {
            kin += (&c(&f0).partial(mu) * &f0.partial(mu))
                .scale(&GaussRat::from_int(2 * spinor::eta(mu, mu)));
        }
        let mut boxes = ScalarPoly::zero();
        for mu in 0..4u8 {
            let s = GaussRat::from_int(-spinor::eta(mu, mu));
            boxes += (&c(&f0).partial(mu).partial(mu) * &f0).scale(&s);
            boxes += (&c(&f0) * &f0.partial(mu).partial(mu)).scale(&s);
        }
        put(top, boxes + kin);
        for a in 1..=2u8 {
            for b in 1..=2u8 {
                let mut v = ScalarPoly::zero();
                for mu in 0..4u8 {
                    v += (&(&fa[(a - 1) as usize] * &c(&fa[(b - 1) as usize]).partial(mu))
                        - &(&c(&fa[(b - 1) as usize]) * &fa[(a - 1) as usize].partial(mu)))
                        .scale(&(GaussRat::i() * spinor::sigma_bar_upper(mu, b, a)));
                }
                put(top | mask(&[vth(a), vth_bar(b)]), v);
            }
        }
        put(
            top | mask(&[vth(1), vth(2), vth_bar(1), vth_bar(2)]),
            &c(&f12) * &f12,
        );
        e
    }

    #[test]
    fn dagger_product_reproduces_nine_block_display() {
        let f = chiral_field();
        let prod = &f.twisted_dagger() * &f;
        assert_eq!(prod, dagger_product_display());
        // Commutes both ways (even elements).
        assert_eq!(prod, &f * &f.twisted_dagger());
    }

    #[test]
    fn chiral_powers_theta_bar_free_parts() {
        let (f0, f1, f2, f12) = comps();
        let f = chiral_field();
        let f2e = &f * &f;
        let f3e = &f2e * &f;
        let thbar_free = |e: &SuperExpr| {
            let mut out = SuperExpr::zero(L);
            let tb = (1u16 << theta_bar(1)) | (1 << theta_bar(2));
            for (m, p) in e.terms() {
                if m & tb == 0 {
                    out += SuperExpr::term(m, p.clone(), L);
                }
            }
            out
        };
        // f^2 = f0^2 + 2 theta vth f0 f_a + 2 th12 vth12 (f0 f12 - f1 f2) + ...
        let mut want2 = SuperExpr::scalar(f0.pow(2), L);
        for (a, fa) in [(1u8, &f1), (2u8, &f2)] {
            want2 += SuperExpr::term(
                mask(&[theta(a), vth(a)]),
                (&f0 * fa).scale(&GaussRat::from_int(2)),
                L,
            );
        }
        want2 += SuperExpr::term(
            mask(&[theta(1), theta(2), vth(1), vth(2)]),
            (&(&f0 * &f12) - &(&f1 * &f2)).scale(&GaussRat::from_int(2)),
            L,
        );
        assert_eq!(thbar_free(&f2e), want2);
        // f^3 top block: 3 (f0^2 f12 - 2 f0 f1 f2).
        let got3 = f3e.coefficient(mask(&[theta(1), theta(2), vth(1), vth(2)]));
        let want3 = (&(&f0.pow(2) * &f12)
            - &(&(&f0 * &f1) * &f2).scale(&GaussRat::from_int(2)))
            .scale(&GaussRat::from_int(3));
        assert_eq!(got3, want3);
        // Conjugate squares mirror with the sign on the spinor blocks.
        let fd = f.twisted_dagger();
        let fd2 = &fd * &fd;
        let got = fd2.coefficient(mask(&[theta_bar(1), vth_bar(1)]));
        assert_eq!(got, (&f0.conj() * &f1.conj()).scale(&GaussRat::from_int(-2)));
    }

    /// The post-purge density display of the model.
    fn density_display(p: &WZParams) -> ScalarPoly {
        let (f0, f1, f2, f12) = comps();
        let fa = [f1.clone(), f2.clone()];
        let c = |q: &ScalarPoly| q.conj();
        let mut d = ScalarPoly::zero();
        // fbar0 box f0
        for mu in 0..4u8 {
            d += (&c(&f0) * &f0.partial(mu).partial(mu))
                .scale(&GaussRat::from_int(spinor::eta(mu, mu)));
        }
        // (i/2) sigmabar^{mu b a} f_a d_mu fbar_b
        for a in 1..=2u8 {
            for b in 1..=2u8 {
                for mu in 0..4u8 {
                    d += (&fa[(a - 1) as usize] * &c(&fa[(b - 1) as usize]).partial(mu)).scale(
                        &(GaussRat::i() * GaussRat::ratio(1, 2) * spinor::sigma_bar_upper(mu, b, a)),
                    );
                }
            }
        }
        // 1/4 fbar12 f12
        d += (&c(&f12) * &f12).scale(&GaussRat::ratio(1, 4));
        // superpotential blocks
        let w = |m: &ScalarPoly, g: &ScalarPoly, l: &ScalarPoly,
                 f0: &ScalarPoly, f1: &ScalarPoly, f2: &ScalarPoly, f12: &ScalarPoly| {
            &(&(m * &(&(f0 * f12) - &(f1 * f2)))
                + &(g * &(&(&f0.pow(2) * f12) - &(&(f0 * f1) * f2).scale(&GaussRat::from_int(2)))))
                + &(l * f12)
        };
        d += w(&p.m, &p.g, &p.lambda, &f0, &f1, &f2, &f12);
        d += w(
            &p.m.conj(),
            &p.g.conj(),
            &p.lambda.conj(),
            &c(&f0),
            &c(&f1),
            &c(&f2),
            &c(&f12),
        );
        d
    }

    #[test]
    fn action_density_matches_display_up_to_divergence() {
        let p = WZParams::formal();
        let density = wz_action_density(&chiral_field(), &p, &PevMap::standard()).unwrap();
        let display = density_display(&p);
        assert!(divergence_equal(&density, &display).is_none());
        // Exact checks on non-derivative blocks: the f12 bilinear and the
        // lambda-linear terms appear verbatim.
        let (_, _, _, f12) = comps();
        let quarter = density.d_dsym(&FieldSymbol::base("f12")).d_dsym(&FieldSymbol::base("f12").conj());
        assert_eq!(quarter, ScalarPoly::ratio(1, 4));
        let lam_coeff = density
            .d_dsym(&FieldSymbol::base("f12"))
            .subst(&FieldSymbol::base("f12").conj(), &ScalarPoly::zero())
            .d_dsym(&FieldSymbol::coupling("lambda"));
        assert_eq!(lam_coeff, ScalarPoly::one());
        let _ = f12;
    }

    #[test]
    fn free_density_is_kinetic_only() {
        let density =
            wz_action_density(&chiral_field(), &WZParams::zero(), &PevMap::standard()).unwrap();
        let p = WZParams::zero();
        let display = density_display(&p);
        assert!(divergence_equal(&density, &display).is_none());
    }

    #[test]
    fn f_elimination_matches_solved_values() {
        let p = WZParams::formal();
        let density = wz_action_density(&chiral_field(), &p, &PevMap::standard()).unwrap();
        let f12 = FieldSymbol::base("f12");
        let sol = wz_eliminate_f(&density, &f12).unwrap();
        let (f0, f1, f2, _) = comps();
        // f12 = -4 (mbar fbar0 + gbar fbar0^2 + lambdabar).
        let pot = |m: &ScalarPoly, g: &ScalarPoly, l: &ScalarPoly, f0: &ScalarPoly| {
            &(&(m * f0) + &(g * &f0.pow(2))) + l
        };
        let want = pot(&p.m.conj(), &p.g.conj(), &p.lambda.conj(), &f0.conj())
            .scale(&GaussRat::from_int(-4));
        assert_eq!(sol.value, want);
        assert_eq!(
            sol.conj_value,
            pot(&p.m, &p.g, &p.lambda, &f0).scale(&GaussRat::from_int(-4))
        );
        // On-shell density: kinetic + Yukawa + the -4 |W'|^2 potential.
        let mut want_density = ScalarPoly::zero();
        for mu in 0..4u8 {
            want_density += (&f0.conj() * &f0.partial(mu).partial(mu))
                .scale(&GaussRat::from_int(spinor::eta(mu, mu)));
        }
        let fa = [f1.clone(), f2.clone()];
        for a in 1..=2u8 {
            for b in 1..=2u8 {
                for mu in 0..4u8 {
                    want_density += (&fa[(a - 1) as usize]
                        * &fa[(b - 1) as usize].conj().partial(mu))
                        .scale(
                            &(GaussRat::i()
                                * GaussRat::ratio(1, 2)
                                * spinor::sigma_bar_upper(mu, b, a)),
                        );
                }
            }
        }
        want_density = want_density
            - (&(&p.m * &f1) * &f2)
            - (&(&(&p.g * &f0) * &f1) * &f2).scale(&GaussRat::from_int(2))
            - (&(&p.m.conj() * &f1.conj()) * &f2.conj())
            - (&(&(&p.g.conj() * &f0.conj()) * &f1.conj()) * &f2.conj())
                .scale(&GaussRat::from_int(2));
        want_density = want_density
            - (&pot(&p.m, &p.g, &p.lambda, &f0)
                * &pot(&p.m.conj(), &p.g.conj(), &p.lambda.conj(), &f0.conj()))
                .scale(&GaussRat::from_int(4));
        assert!(divergence_equal(&sol.on_shell, &want_density).is_none());
    }

    #[test]
    fn f_elimination_with_zero_couplings_drops_aux() {
        let density =
            wz_action_density(&chiral_field(), &WZParams::zero(), &PevMap::standard()).unwrap();
        let sol = wz_eliminate_f(&density, &FieldSymbol::base("f12")).unwrap();
        assert!(sol.value.is_zero());
        assert!(sol.conj_value.is_zero());
    }

    #[test]
    fn kernels_are_susy_invariant() {
        let p = WZParams::formal();
        let k = wz_kernel(&chiral_field(), &p).unwrap();
        let map = PevMap::standard();
        for c in susy_invariance_check(&k.d_term, ActionMode::FullMeasure, &map).unwrap() {
            assert!(c.pass, "D-term: {}", c.name);
        }
        for c in susy_invariance_check(&k.f_term, ActionMode::ChiralMeasure, &map).unwrap() {
            assert!(c.pass, "F-term: {}", c.name);
        }
        for c in susy_invariance_check(&k.fbar_term, ActionMode::AntichiralMeasure, &map).unwrap() {
            assert!(c.pass, "Fbar-term: {}", c.name);
        }
    }

    #[test]
    fn kernel_rejects_non_chiral_input() {
        let bad = SuperExpr::gen(theta_bar(1), L);
        assert!(matches!(
            wz_kernel(&bad, &WZParams::zero()),
            Err(CoreError::NotChiral)
        ));
    }
}
