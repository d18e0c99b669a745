//! Abelian gauge theory on superspace: vector superfields, gauge
//! transformations and the Wess-Zumino gauge, the associated left connection
//! and its curvature, gaugino superfields, the gauge-invariant matter
//! kinetic term, the full action, and supersymmetry transformations that
//! preserve the Wess-Zumino gauge.

use alloc::string::String;
use alloc::vec::Vec;

use crate::calculus::{action_density_parts, PevMap};
use crate::error::CoreError;
use crate::grassmann::{gens, Level, SuperExpr, THETA_BLOCK};
use crate::rational::GaussRat;
use crate::scalar::{FieldSymbol, ScalarPoly};
use crate::spinor;
use crate::superops::{self, chiral_general, mk_antichiral, mk_chiral};
use crate::wess_zumino::WZParams;

/// The four independent components of a small chiral superfield.
#[derive(Clone, Debug)]
pub struct SmallChiral {
    pub c0: ScalarPoly,
    pub c1: ScalarPoly,
    pub c2: ScalarPoly,
    pub c12: ScalarPoly,
}

impl SmallChiral {
    pub fn symbols(base: &str) -> Self {
        let s = |t: &str| ScalarPoly::from_symbol(FieldSymbol::base(&alloc::format!("{base}{t}")));
        SmallChiral {
            c0: s("_(0)"),
            c1: s("_(1)"),
            c2: s("_(2)"),
            c12: s("_(12)"),
        }
    }

    pub fn zero() -> Self {
        SmallChiral {
            c0: ScalarPoly::zero(),
            c1: ScalarPoly::zero(),
            c2: ScalarPoly::zero(),
            c12: ScalarPoly::zero(),
        }
    }

    pub fn field(&self, level: Level) -> SuperExpr {
        mk_chiral(&self.c0, &self.c1, &self.c2, &self.c12, level)
    }

    pub fn dagger_field(&self, level: Level) -> SuperExpr {
        mk_antichiral(
            &self.c0.conj(),
            &-self.c1.conj(),
            &-self.c2.conj(),
            &self.c12.conj(),
            level,
        )
    }
}

/// The sixteen real degrees of freedom of a vector superfield: complex
/// `v0q`, `va`, `v12`, `vpp` are paired with their conjugates in the
/// expansion, `v0`, `vv`, `vt0` are real-valued.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorSuperfield {
    /// `V_(0)` (real).
    pub v0: ScalarPoly,
    /// `V_(alpha)` (complex).
    pub va: [ScalarPoly; 2],
    /// `V_(12)` (complex).
    pub v12: ScalarPoly,
    /// `V_[mu]` (real).
    pub vv: [ScalarPoly; 4],
    /// `V''_(alpha)` (complex).
    pub vpp: [ScalarPoly; 2],
    /// `V~_(0)` (real).
    pub vt0: ScalarPoly,
}

impl VectorSuperfield {
    /// Fresh symbols with the right reality properties.
    pub fn symbols(base: &str) -> Self {
        let real = |t: &str| {
            ScalarPoly::from_symbol(FieldSymbol::real_base(&alloc::format!("{base}{t}")))
        };
        let cplx =
            |t: &str| ScalarPoly::from_symbol(FieldSymbol::base(&alloc::format!("{base}{t}")));
        VectorSuperfield {
            v0: real("_(0)"),
            va: [cplx("_(1)"), cplx("_(2)")],
            v12: cplx("_(12)"),
            vv: [real("_[0]"), real("_[1]"), real("_[2]"), real("_[3]")],
            vpp: [cplx("''_(1)"), cplx("''_(2)")],
            vt0: real("~_(0)"),
        }
    }

    /// A vector superfield already in Wess-Zumino gauge.
    pub fn wz_symbols(base: &str) -> Self {
        let mut v = VectorSuperfield::symbols(base);
        v.v0 = ScalarPoly::zero();
        v.va = [ScalarPoly::zero(), ScalarPoly::zero()];
        v.v12 = ScalarPoly::zero();
        v
    }

    pub fn is_wz_gauge(&self) -> bool {
        self.v0.is_zero() && self.va.iter().all(ScalarPoly::is_zero) && self.v12.is_zero()
    }

    /// Assemble the expression in standard coordinates. In the shifted form
    /// the top component reads `V~_(0) - box V_(0)`; the plain form carries
    /// `V~_(0)` itself.
    pub fn to_superexpr(&self, shifted: bool, level: Level) -> SuperExpr {
        use gens::{theta, theta_bar, vth, vth_bar};
        let m = |gs: &[u8]| gs.iter().fold(0u16, |acc, g| acc | (1 << g));
        let mut e = SuperExpr::zero(level);
        let mut put = |mask: u16, p: ScalarPoly| e += SuperExpr::term(mask, p, level);

        put(0, self.v0.clone());
        for a in 1..=2u8 {
            put(m(&[theta(a), vth(a)]), self.va[(a - 1) as usize].clone());
            put(
                m(&[theta_bar(a), vth_bar(a)]),
                -self.va[(a - 1) as usize].conj(),
            );
        }
        put(m(&[theta(1), theta(2), vth(1), vth(2)]), self.v12.clone());
        for a in 1..=2u8 {
            for b in 1..=2u8 {
                let mut vec_part = ScalarPoly::zero();
                for mu in 0..4u8 {
                    vec_part += self.vv[mu as usize].scale(&spinor::sigma(mu, a, b));
                }
                put(m(&[theta(a), theta_bar(b)]), vec_part);
            }
        }
        put(
            m(&[theta_bar(1), theta_bar(2), vth_bar(1), vth_bar(2)]),
            self.v12.conj(),
        );
        for b in 1..=2u8 {
            let base = m(&[theta(1), theta(2), theta_bar(b)]);
            for a in 1..=2u8 {
                let mut acc = ScalarPoly::zero();
                for mu in 0..4u8 {
                    acc += self.va[(a - 1) as usize]
                        .partial(mu)
                        .scale(&(GaussRat::i() * spinor::sigma_up_first(mu, a, b)));
                }
                put(base | m(&[vth(a)]), acc);
            }
            put(
                base | m(&[vth_bar(b)]),
                self.vpp[(b - 1) as usize].conj(),
            );
        }
        for a in 1..=2u8 {
            let base = m(&[theta(a), theta_bar(1), theta_bar(2)]);
            put(base | m(&[vth(a)]), self.vpp[(a - 1) as usize].clone());
            for b in 1..=2u8 {
                let mut acc = ScalarPoly::zero();
                for mu in 0..4u8 {
                    acc += self.va[(b - 1) as usize]
                        .conj()
                        .partial(mu)
                        .scale(&(-GaussRat::i() * spinor::sigma_up_second(mu, a, b)));
                }
                put(base | m(&[vth_bar(b)]), acc);
            }
        }
        let top = m(&[theta(1), theta(2), theta_bar(1), theta_bar(2)]);
        let mut t = self.vt0.clone();
        if shifted {
            for mu in 0..4u8 {
                t = t - self
                    .v0
                    .partial(mu)
                    .partial(mu)
                    .scale(&GaussRat::from_int(spinor::eta(mu, mu)));
            }
        }
        put(top, t);
        e
    }
}

/// Component form of the gauge transformation
/// `V -> V - i (Lambda - Lambda^dag)` on a vector superfield in the shifted
/// expression; `V''` and `V~_(0)` are invariant.
pub fn gauge_transform(
    v: &VectorSuperfield,
    lam: &SmallChiral,
) -> Result<VectorSuperfield, CoreError> {
    let i = GaussRat::i();
    let mut out = v.clone();
    out.v0 = &v.v0 - &(&lam.c0 - &lam.c0.conj()).scale(&i);
    out.va = [
        &v.va[0] - &lam.c1.scale(&i),
        &v.va[1] - &lam.c2.scale(&i),
    ];
    out.v12 = &v.v12 - &lam.c12.scale(&i);
    for mu in 0..4usize {
        out.vv[mu] = &v.vv[mu] + &(&lam.c0 + &lam.c0.conj()).partial(mu as u8);
    }
    Ok(out)
}

/// The unique small chiral gauge parameter with vanishing real lowest part
/// that brings a vector superfield (in shifted expression) to Wess-Zumino
/// gauge, together with the transformed superfield.
pub fn to_wz_gauge(v: &VectorSuperfield) -> (VectorSuperfield, SmallChiral) {
    let half_i = GaussRat::i() * GaussRat::ratio(-1, 2);
    let lam = SmallChiral {
        c0: v.v0.scale(&half_i),
        c1: v.va[0].scale(&-GaussRat::i()),
        c2: v.va[1].scale(&-GaussRat::i()),
        c12: v.v12.scale(&-GaussRat::i()),
    };
    let out = gauge_transform(v, &lam).expect("component transform is total");
    (out, lam)
}

/// `e^{t V} = 1 + t V + t^2/2 V^2` for `V` in Wess-Zumino gauge (the cube
/// vanishes identically).
pub fn exp_v(v: &VectorSuperfield, scale: &ScalarPoly, level: Level) -> Result<SuperExpr, CoreError> {
    if !v.is_wz_gauge() {
        return Err(CoreError::NotWessZuminoGauge);
    }
    let ve = v.to_superexpr(false, level).scale_poly(scale);
    let sq = (&ve * &ve).scale(&GaussRat::ratio(1, 2));
    Ok(SuperExpr::one(level) + ve + sq)
}

/// The even left connection associated to a vector superfield. In the
/// abelian case the conjugated derivation collapses exactly to
/// `e'_alpha + (e'_alpha V)` because `V` is even and central, so no
/// truncated exponential series is needed.
pub struct Connection {
    level: Level,
    /// `(e'_alpha V)` for `alpha = 1, 2`.
    w_prime: [SuperExpr; 2],
}

impl Connection {
    pub fn new(v_expr: &SuperExpr) -> Self {
        let level = v_expr.level();
        Connection {
            level,
            w_prime: [
                superops::e_prime(1, level).apply(v_expr),
                superops::e_prime(2, level).apply(v_expr),
            ],
        }
    }

    /// `nabla_{e'_alpha} f = e'_alpha f + (e'_alpha V) f`.
    pub fn along_e_prime(&self, alpha: u8, f: &SuperExpr) -> SuperExpr {
        superops::e_prime(alpha, self.level).apply(f)
            + &self.w_prime[(alpha - 1) as usize] * f
    }

    /// `nabla_{e''_betadot} f = e''_betadot f`.
    pub fn along_e_dprime(&self, betadot: u8, f: &SuperExpr) -> SuperExpr {
        superops::e_dprime(betadot, self.level).apply(f)
    }

    /// `nabla_mu = -(i/4) sum sigmabar_mu^{betadot alpha}
    /// {nabla_{e'_alpha}, nabla_{e''_betadot}}`.
    pub fn along_x(&self, mu: u8, f: &SuperExpr) -> SuperExpr {
        let mut out = SuperExpr::zero(self.level);
        for alpha in 1..=2u8 {
            for betadot in 1..=2u8 {
                let c = spinor::sigma_bar_lower(mu, betadot, alpha)
                    * (GaussRat::i() * GaussRat::ratio(-1, 4));
                if c.is_zero() {
                    continue;
                }
                let anti = self.along_e_prime(alpha, &self.along_e_dprime(betadot, f))
                    + self.along_e_dprime(betadot, &self.along_e_prime(alpha, f));
                out += anti.scale(&c);
            }
        }
        out
    }

    /// The bispinor `Theta_{alpha betadot} = e''_betadot (e'_alpha V)`, so
    /// that `nabla_mu = d_mu - (i/4) sum sigmabar_mu^{betadot alpha}
    /// Theta_{alpha betadot}` as a multiplication operator.
    pub fn theta_bispinor(&self, alpha: u8, betadot: u8) -> SuperExpr {
        superops::e_dprime(betadot, self.level).apply(&self.w_prime[(alpha - 1) as usize])
    }
}

/// One line of a flatness report.
pub use crate::calculus::Check;

/// Verify the fermionic flatness of the connection on a spanning set: both
/// same-chirality curvature components and the mixed component (against the
/// defining relation for `nabla_mu`) vanish as operators.
pub fn curvature_flatness_check(v_expr: &SuperExpr, test: &SuperExpr) -> Vec<Check> {
    let level = v_expr.level();
    let conn = Connection::new(v_expr);
    let mut checks = Vec::new();
    let mut ok_pp = true;
    let mut ok_dd = true;
    let mut ok_mixed = true;
    for a in 1..=2u8 {
        for b in 1..=2u8 {
            let f_pp = conn.along_e_prime(a, &conn.along_e_prime(b, test))
                + conn.along_e_prime(b, &conn.along_e_prime(a, test));
            ok_pp &= f_pp.is_zero();
            let f_dd = conn.along_e_dprime(a, &conn.along_e_dprime(b, test))
                + conn.along_e_dprime(b, &conn.along_e_dprime(a, test));
            ok_dd &= f_dd.is_zero();
            // Mixed: {nabla'_a, nabla''_b} - (-2 i sigma^mu_{a b} nabla_mu) = 0.
            let anti = conn.along_e_prime(a, &conn.along_e_dprime(b, test))
                + conn.along_e_dprime(b, &conn.along_e_prime(a, test));
            let mut expected = SuperExpr::zero(level);
            for mu in 0..4u8 {
                let c = -GaussRat::i() * GaussRat::from_int(2) * spinor::sigma(mu, a, b);
                if c.is_zero() {
                    continue;
                }
                expected += conn.along_x(mu, test).scale(&c);
            }
            ok_mixed &= anti == expected;
        }
    }
    checks.push(Check {
        name: String::from("curvature along two unprimed-invariant directions vanishes"),
        pass: ok_pp,
    });
    checks.push(Check {
        name: String::from("curvature along two primed-invariant directions vanishes"),
        pass: ok_dd,
    });
    checks.push(Check {
        name: String::from("mixed fermionic curvature vanishes"),
        pass: ok_mixed,
    });
    checks
}

/// The gaugino superfield `W_alpha = e''_2 e''_1 e'_alpha V`.
pub fn gaugino(v_expr: &SuperExpr, alpha: u8) -> SuperExpr {
    let level = v_expr.level();
    superops::e_dprime(2, level).apply(
        &superops::e_dprime(1, level).apply(&superops::e_prime(alpha, level).apply(v_expr)),
    )
}

/// The conjugate gaugino superfield `Wbar_betadot = e'_1 e'_2 e''_betadot V`.
pub fn gaugino_bar(v_expr: &SuperExpr, betadot: u8) -> SuperExpr {
    let level = v_expr.level();
    superops::e_prime(1, level).apply(
        &superops::e_prime(2, level).apply(&superops::e_dprime(betadot, level).apply(v_expr)),
    )
}

/// The gauge-invariant kinetic kernel `Phi^dag e^{t V} Phi` for a small
/// chiral matter field of charge `t` and a vector superfield in Wess-Zumino
/// gauge.
pub fn matter_kinetic(
    phi: &SmallChiral,
    v: &VectorSuperfield,
    charge: &ScalarPoly,
    level: Level,
) -> Result<SuperExpr, CoreError> {
    let ev = exp_v(v, charge, level)?;
    Ok(&phi.dagger_field(level) * &(&ev * &phi.field(level)))
}

/// The three Berezin kernels of the full abelian action with matter:
///
/// ```text
/// S = tau/8 int d2theta W_1 W_2  -  taubar/8 int d2thetabar Wbar_2. Wbar_1.
///     - 1/4 int d4theta Phi^dag e^{e_m V} Phi
///     + int d2theta (lambda Phi + m/2 Phi^2 + g/3 Phi^3)  -  int d2thetabar (conj).
/// ```
pub struct U1Kernels {
    pub d_term: SuperExpr,
    pub f_term: SuperExpr,
    pub fbar_term: SuperExpr,
}

pub fn u1_kernels(
    phi: &SmallChiral,
    v: &VectorSuperfield,
    tau: &ScalarPoly,
    charge: &ScalarPoly,
    p: &WZParams,
    level: Level,
) -> Result<U1Kernels, CoreError> {
    if !v.is_wz_gauge() {
        return Err(CoreError::NotWessZuminoGauge);
    }
    let v_expr = v.to_superexpr(false, level);
    let w1 = gaugino(&v_expr, 1);
    let w2 = gaugino(&v_expr, 2);
    let wb1 = gaugino_bar(&v_expr, 1);
    let wb2 = gaugino_bar(&v_expr, 2);
    let d_term = matter_kinetic(phi, v, charge, level)?.scale(&GaussRat::ratio(-1, 4));
    let phi_f = phi.field(level);
    let phi2 = &phi_f * &phi_f;
    let phi3 = &phi2 * &phi_f;
    let f_term = (&w1 * &w2).scale_poly(&tau.scale(&GaussRat::ratio(1, 8)))
        + phi_f.scale_poly(&p.lambda)
        + phi2.scale_poly(&p.m).scale(&GaussRat::ratio(1, 2))
        + phi3.scale_poly(&p.g).scale(&GaussRat::ratio(1, 3));
    let phid = phi.dagger_field(level);
    let phid2 = &phid * &phid;
    let phid3 = &phid2 * &phid;
    let fbar_term = (&wb2 * &wb1).scale_poly(&tau.conj().scale(&GaussRat::ratio(1, 8)))
        + phid.scale_poly(&p.lambda.conj())
        + phid2.scale_poly(&p.m.conj()).scale(&GaussRat::ratio(1, 2))
        + phid3.scale_poly(&p.g.conj()).scale(&GaussRat::ratio(1, 3));
    Ok(U1Kernels {
        d_term,
        f_term,
        fbar_term,
    })
}

/// The purge-evaluated spacetime density of the abelian action, up to
/// boundary terms.
pub fn u1_action_density(
    phi: &SmallChiral,
    v: &VectorSuperfield,
    tau: &ScalarPoly,
    charge: &ScalarPoly,
    p: &WZParams,
    map: &PevMap,
    level: Level,
) -> Result<ScalarPoly, CoreError> {
    let k = u1_kernels(phi, v, tau, charge, p, level)?;
    Ok(action_density_parts(&k.d_term, &k.f_term, &k.fbar_term, map))
}

// ---------------------------------------------------------------------------
// Supersymmetry in Wess-Zumino gauge.
// ---------------------------------------------------------------------------

/// Extract the `theta`-block of an expression: the sum of terms whose
/// `theta`/`thetabar` bits equal `th_mask` exactly, with those bits removed
/// (no sign is incurred in canonical order).
pub fn theta_block(e: &SuperExpr, th_mask: u16) -> SuperExpr {
    let mut out = SuperExpr::zero(e.level());
    for (mask, p) in e.terms() {
        if mask & THETA_BLOCK == th_mask {
            out += SuperExpr::term(mask & !THETA_BLOCK, p.clone(), e.level());
        }
    }
    out
}

/// Is the expression shaped like a vector superfield in Wess-Zumino gauge
/// (possibly with parameter-dependent components): all blocks of
/// `theta`-degree below two and the two pure degree-two blocks vanish.
pub fn is_wz_pattern(e: &SuperExpr) -> bool {
    use gens::{theta, theta_bar};
    let th12 = (1u16 << theta(1)) | (1 << theta(2));
    let tb12 = (1u16 << theta_bar(1)) | (1 << theta_bar(2));
    let forbidden = [
        0u16,
        1 << theta(1),
        1 << theta(2),
        1 << theta_bar(1),
        1 << theta_bar(2),
        th12,
        tb12,
    ];
    forbidden.iter().all(|m| theta_block(e, *m).is_zero())
}

/// Result of one supersymmetry variation in Wess-Zumino gauge.
pub struct WzVariation {
    /// The corrected variation, again in Wess-Zumino pattern.
    pub variation: SuperExpr,
    /// The compensating chiral gauge parameter (vanishing lowest component).
    pub lambda: SuperExpr,
}

/// Apply the parameter supersymmetry variation to a Wess-Zumino-pattern
/// expression and solve for the unique compensating chiral gauge parameter
/// with vanishing lowest component that restores the gauge.
pub fn susy_wz_gauge(v_expr: &SuperExpr) -> Result<WzVariation, CoreError> {
    if v_expr.level() != Level::Param {
        return Err(CoreError::ParamLevelInactive);
    }
    if !is_wz_pattern(v_expr) {
        return Err(CoreError::NotWessZuminoGauge);
    }
    let w = superops::param_susy_variation(v_expr);
    solve_wz_compensator(&w)
}

/// Given a "real" variation `w` whose lowest block vanishes, solve
/// `w - i (Lambda - Lambda^dag)` into Wess-Zumino pattern for the unique
/// chiral `Lambda` with zero lowest component, checking the result and the
/// uniqueness through the opposite elimination order.
pub fn solve_wz_compensator(w: &SuperExpr) -> Result<WzVariation, CoreError> {
    use gens::theta;
    let level = w.level();
    if !theta_block(w, 0).is_zero() {
        return Err(CoreError::Elimination(String::from(
            "variation has a nonvanishing lowest block",
        )));
    }
    let i = GaussRat::i();
    let c1 = theta_block(w, 1 << theta(1)).scale(&-i.clone());
    let c2 = theta_block(w, 1 << theta(2)).scale(&-i.clone());
    let c12 = theta_block(w, (1 << theta(1)) | (1 << theta(2))).scale(&-i.clone());
    let zero = SuperExpr::zero(level);
    let lambda = chiral_general(&zero, &c1, &c2, &c12, level);
    let variation = w - &(&lambda - &lambda.twisted_dagger()).scale(&i);
    if !is_wz_pattern(&variation) {
        return Err(CoreError::Elimination(String::from(
            "compensated variation does not restore the gauge pattern",
        )));
    }
    // Uniqueness: eliminate through the antichiral blocks instead and
    // compare.
    {
        use gens::theta_bar;
        let d1 = theta_block(w, 1 << theta_bar(1)).scale(&i);
        let d2 = theta_block(w, 1 << theta_bar(2)).scale(&i);
        let d12 = theta_block(w, (1 << theta_bar(1)) | (1 << theta_bar(2))).scale(&i);
        let lambda_dag = superops::antichiral_general(&zero, &d1, &d2, &d12, level);
        let lambda_alt = lambda_dag.twisted_dagger();
        if lambda_alt != lambda {
            return Err(CoreError::Elimination(String::from(
                "gauge compensator is not unique across elimination orders",
            )));
        }
    }
    Ok(WzVariation { variation, lambda })
}

/// Read off the Wess-Zumino-gauge supersymmetry generators from the
/// corrected variation: `Q^wz_alpha V` is the left `eta^alpha` coefficient
/// and `Qbar^wz_betadot V` the negated left `etabar^betadot` coefficient.
pub fn read_wz_generators(variation: &SuperExpr) -> ([SuperExpr; 2], [SuperExpr; 2]) {
    let q = [
        variation.d_gen(gens::eta(1)),
        variation.d_gen(gens::eta(2)),
    ];
    let qbar = [
        variation.d_gen(gens::eta_bar(1)).scale(&GaussRat::from_int(-1)),
        variation.d_gen(gens::eta_bar(2)).scale(&GaussRat::from_int(-1)),
    ];
    (q, qbar)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::gens::*;
    use crate::grassmann::{sector_of, Sector};
    use crate::superops::{is_antichiral, is_chiral};

    const L: Level = Level::Standard;

    #[test]
    fn vector_superfield_is_real_and_medium() {
        let v = VectorSuperfield::symbols("V");
        for shifted in [false, true] {
            let e = v.to_superexpr(shifted, L);
            assert_eq!(e.twisted_dagger(), e, "realness, shifted = {shifted}");
            assert_eq!(sector_of(&e), Sector::Medium);
        }
    }

    #[test]
    fn gauge_transform_matches_superfield_transform() {
        let v = VectorSuperfield::symbols("V");
        let lam = SmallChiral::symbols("L");
        let out = gauge_transform(&v, &lam).unwrap();
        let want = v.to_superexpr(true, L)
            - (&lam.field(L) - &lam.dagger_field(L)).scale(&GaussRat::i());
        assert_eq!(out.to_superexpr(true, L), want);
        // V'' and V~ untouched.
        assert_eq!(out.vpp, v.vpp);
        assert_eq!(out.vt0, v.vt0);
        // Identity at lambda = 0.
        let id = gauge_transform(&v, &SmallChiral::zero()).unwrap();
        assert_eq!(id, v);
    }

    #[test]
    fn wz_gauge_reached_and_unique_choice() {
        let v = VectorSuperfield::symbols("V");
        let (wz, lam) = to_wz_gauge(&v);
        assert!(wz.is_wz_gauge());
        // The gauge parameter has purely imaginary lowest component.
        assert_eq!(lam.c0.conj(), -lam.c0.clone());
        // Already-gauged input returns itself with zero parameter.
        let (again, lam2) = to_wz_gauge(&wz);
        assert_eq!(again, wz);
        assert!(lam2.c0.is_zero() && lam2.c1.is_zero() && lam2.c12.is_zero());
        // Residual real transformations shift only the vector component.
        let mut real_lam = SmallChiral::zero();
        real_lam.c0 = ScalarPoly::from_symbol(FieldSymbol::real_base("r"));
        let shifted = gauge_transform(&wz, &real_lam).unwrap();
        assert!(shifted.is_wz_gauge());
        for mu in 0..4usize {
            assert_eq!(
                shifted.vv[mu],
                &wz.vv[mu] + &real_lam.c0.partial(mu as u8).scale(&GaussRat::from_int(2))
            );
        }
    }

    #[test]
    fn wz_powers_and_exponential() {
        let v = VectorSuperfield::wz_symbols("V");
        let ve = v.to_superexpr(false, L);
        let sq = &ve * &ve;
        // V^2 = 2 theta^4 sum eta^{mu nu} V_[mu] V_[nu].
        let mut want = ScalarPoly::zero();
        for mu in 0..4u8 {
            want += (&v.vv[mu as usize] * &v.vv[mu as usize])
                .scale(&GaussRat::from_int(2 * spinor::eta(mu, mu)));
        }
        let top = 0b1111u16;
        assert_eq!(sq.coefficient(top), want);
        assert_eq!(sq.terms().count(), 1);
        assert!((&sq * &ve).is_zero(), "cube vanishes");
        // exp with zero charge is 1.
        assert_eq!(
            exp_v(&v, &ScalarPoly::zero(), L).unwrap(),
            SuperExpr::one(L)
        );
        let t = ScalarPoly::from_symbol(FieldSymbol::real_coupling("t"));
        let e = exp_v(&v, &t, L).unwrap();
        assert_eq!(
            e.coefficient(top),
            &(&v.vt0 * &t) + &(want.scale(&GaussRat::ratio(1, 2)) * t.pow(2))
        );
    }

    #[test]
    fn wz_gauge_form_survives_frame_changes() {
        use crate::superops::{change_frame, Frame};
        let v = VectorSuperfield::wz_symbols("V");
        let ve = v.to_superexpr(false, L);
        let in_chiral = change_frame(&ve, Frame::Standard, Frame::Chiral);
        assert!(is_wz_pattern(&in_chiral));
        // Top block picks up -2 i sum d^mu V_[mu].
        let top = 0b1111u16;
        let mut want = v.vt0.clone();
        for mu in 0..4u8 {
            want = want
                - v.vv[mu as usize]
                    .partial(mu)
                    .scale(&(GaussRat::i() * GaussRat::from_int(2 * spinor::eta(mu, mu))));
        }
        assert_eq!(in_chiral.coefficient(top), want);
        let in_anti = change_frame(&ve, Frame::Standard, Frame::AntiChiral);
        assert!(is_wz_pattern(&in_anti));
        let mut want = v.vt0.clone();
        for mu in 0..4u8 {
            want = want
                + v.vv[mu as usize]
                    .partial(mu)
                    .scale(&(GaussRat::i() * GaussRat::from_int(2 * spinor::eta(mu, mu))));
        }
        assert_eq!(in_anti.coefficient(top), want);
    }

    #[test]
    fn connection_restriction_and_theta_leading_term() {
        let v = VectorSuperfield::wz_symbols("V");
        let conn = Connection::new(&v.to_superexpr(false, L));
        // nabla_mu(1) restricts to -(i/2) V_[mu] on spacetime (the higher
        // theta-degree blocks carry the rest of the operator).
        for mu in 0..4u8 {
            let got = conn.along_x(mu, &SuperExpr::one(L));
            let want = v.vv[mu as usize].scale(&(GaussRat::i() * GaussRat::ratio(-1, 2)));
            assert_eq!(got.coefficient(0), want);
        }
        // nabla_mu on a scalar restricts to d_mu - (i/2) V_[mu].
        let f = ScalarPoly::sym("A");
        for mu in 0..4u8 {
            let got = conn.along_x(mu, &SuperExpr::scalar(f.clone(), L));
            let want_low = &f.partial(mu)
                + &(&v.vv[mu as usize] * &f).scale(&(GaussRat::i() * GaussRat::ratio(-1, 2)));
            assert_eq!(got.coefficient(0), want_low);
        }
        // Theta bispinor leading term: -sum sigma^nu_{a b} V_[nu].
        for a in 1..=2u8 {
            for b in 1..=2u8 {
                let th = conn.theta_bispinor(a, b);
                let mut want = ScalarPoly::zero();
                for nu in 0..4u8 {
                    want += v.vv[nu as usize].scale(&-spinor::sigma(nu, a, b));
                }
                assert_eq!(th.coefficient(0), want);
            }
        }
    }

    #[test]
    fn gauginos_are_chiral_and_gauge_invariant() {
        let v = VectorSuperfield::symbols("V");
        let ve = v.to_superexpr(true, L);
        for a in 1..=2u8 {
            assert!(is_chiral(&gaugino(&ve, a)));
            assert!(is_antichiral(&gaugino_bar(&ve, a)));
        }
        // Gauge invariance: the gauge shift is additive and the gauginos of
        // the pure shift vanish.
        let lam = SmallChiral::symbols("L");
        let shift = (&lam.field(L) - &lam.dagger_field(L)).scale(&-GaussRat::i());
        for a in 1..=2u8 {
            assert!(gaugino(&shift, a).is_zero());
            assert!(gaugino_bar(&shift, a).is_zero());
        }
    }

    #[test]
    fn gaugino_leading_term_in_chiral_frame() {
        use crate::superops::{change_frame, Frame};
        let v = VectorSuperfield::wz_symbols("V");
        let w1 = change_frame(&gaugino(&v.to_superexpr(false, L), 1), Frame::Standard, Frame::Chiral);
        assert_eq!(
            w1.coefficient(1 << vth(1)),
            v.vpp[0].clone(),
            "leading term of W_1 is vth_1 V''_(1)"
        );
    }

    #[test]
    fn matter_kinetic_reduces_to_free_kernel_without_gauge_field() {
        let phi = SmallChiral::symbols("P");
        let mut v = VectorSuperfield::wz_symbols("V");
        v.vv = core::array::from_fn(|_| ScalarPoly::zero());
        v.vpp = [ScalarPoly::zero(), ScalarPoly::zero()];
        v.vt0 = ScalarPoly::zero();
        let k = matter_kinetic(&phi, &v, &ScalarPoly::one(), L).unwrap();
        let free = &phi.dagger_field(L) * &phi.field(L);
        assert_eq!(k, free);
    }

    #[test]
    fn susy_wz_gauge_identities() {
        let v = VectorSuperfield::wz_symbols("V");
        let ve = v.to_superexpr(false, Level::Param);
        let out = susy_wz_gauge(&ve).unwrap();
        assert!(is_wz_pattern(&out.variation));
        assert!(is_chiral(&out.lambda));
        // Lowest block of the raw variation vanishes.
        let w = superops::param_susy_variation(&ve);
        assert!(theta_block(&w, 0).is_zero());
        // Zero parameters appear only through eta factors: setting them to
        // zero means taking the eta-free part, which is empty.
        for (mask, _) in out.variation.terms() {
            assert!(mask & crate::grassmann::ETA_BLOCK != 0);
        }
    }

    #[test]
    fn susy_wz_gauge_needs_param_level() {
        let v = VectorSuperfield::wz_symbols("V");
        let ve = v.to_superexpr(false, L);
        assert!(matches!(
            susy_wz_gauge(&ve),
            Err(CoreError::ParamLevelInactive)
        ));
    }
}
