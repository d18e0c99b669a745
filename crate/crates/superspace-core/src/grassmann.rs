//! The Z/2-graded anticommuting function ring over the scalar ring.
//!
//! Generators, in canonical order (bit positions in the monomial mask):
//!
//! ```text
//!  0 theta^1   1 theta^2   2 thetabar^1.  3 thetabar^2.
//!  4 eta^1     5 eta^2     6 etabar^1.    7 etabar^2.
//!  8 vth_1     9 vth_2    10 vthbar_1.   11 vthbar_2.
//! ```
//!
//! The `eta` block is the Grassmann parameter level; it is available only on
//! expressions created at [`Level::Param`]. Mixing levels in a binary
//! operation is a programming error and panics.
//!
//! A monomial denotes the product of its set generators in ascending
//! canonical order; multiplication computes the Koszul sign from the number
//! of transpositions needed to merge two masks.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use crate::rational::GaussRat;
use crate::scalar::ScalarPoly;
use crate::spinor;

/// A Grassmann generator, identified by its bit position.
pub type Gen = u8;

/// Generator bit positions and index helpers.
pub mod gens {
    use super::Gen;

    /// `theta^alpha`, `alpha` in `{1, 2}`.
    pub fn theta(alpha: u8) -> Gen {
        debug_assert!(alpha == 1 || alpha == 2);
        alpha - 1
    }

    /// `thetabar^betadot`, `betadot` in `{1, 2}`.
    pub fn theta_bar(betadot: u8) -> Gen {
        debug_assert!(betadot == 1 || betadot == 2);
        2 + betadot - 1
    }

    /// `eta^alpha` (parameter level).
    pub fn eta(alpha: u8) -> Gen {
        4 + alpha - 1
    }

    /// `etabar^betadot` (parameter level).
    pub fn eta_bar(betadot: u8) -> Gen {
        6 + betadot - 1
    }

    /// `vartheta_alpha`.
    pub fn vth(alpha: u8) -> Gen {
        8 + alpha - 1
    }

    /// `varthetabar_betadot`.
    pub fn vth_bar(betadot: u8) -> Gen {
        10 + betadot - 1
    }

    /// Twisted conjugation image of a generator: swap the undotted and
    /// dotted partner within each block.
    pub fn dagger(g: Gen) -> Gen {
        match g {
            0..=1 => g + 2,
            2..=3 => g - 2,
            4..=5 => g + 2,
            6..=7 => g - 2,
            8..=9 => g + 2,
            10..=11 => g - 2,
            _ => unreachable!("generator out of range"),
        }
    }

    pub const NAMES: [&str; 12] = [
        "theta^1",
        "theta^2",
        "thetabar^1.",
        "thetabar^2.",
        "eta^1",
        "eta^2",
        "etabar^1.",
        "etabar^2.",
        "vth_1",
        "vth_2",
        "vthbar_1.",
        "vthbar_2.",
    ];
}

/// Mask restricted to the `theta`/`thetabar` block.
pub const THETA_BLOCK: u16 = 0x000f;
/// Mask restricted to the parameter block.
pub const ETA_BLOCK: u16 = 0x00f0;
/// Mask restricted to the `vartheta` block.
pub const VTH_BLOCK: u16 = 0x0f00;

/// Which generator set an expression lives over.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Level {
    /// Coordinates and field level only (`theta`, `thetabar`, `vth`,
    /// `vthbar`).
    Standard,
    /// The Grassmann parameter level (`eta`, `etabar`) is activated as well.
    Param,
}

impl Level {
    fn allows(self, mask: u16) -> bool {
        self == Level::Param || mask & ETA_BLOCK == 0
    }
}

/// Koszul sign `(-1)^inv` for merging two disjoint ascending masks: `inv`
/// counts the generator transpositions needed to sort `a` followed by `b`.
fn koszul_sign(a: u16, b: u16) -> i8 {
    let mut inversions = 0u32;
    let mut bb = b;
    while bb != 0 {
        let g = bb.trailing_zeros();
        inversions += (a >> (g + 1)).count_ones();
        bb &= bb - 1;
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// An element of the graded function ring: a finite map from Grassmann
/// monomials to scalar polynomials. Absent monomials are zero; stored
/// coefficients are nonzero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuperExpr {
    level: Level,
    terms: BTreeMap<u16, ScalarPoly>,
}

impl SuperExpr {
    pub fn zero(level: Level) -> Self {
        SuperExpr {
            level,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(level: Level) -> Self {
        SuperExpr::scalar(ScalarPoly::one(), level)
    }

    pub fn scalar(p: ScalarPoly, level: Level) -> Self {
        let mut terms = BTreeMap::new();
        if !p.is_zero() {
            terms.insert(0, p);
        }
        SuperExpr { level, terms }
    }

    /// The monomial with the given mask and coefficient one.
    pub fn mono(mask: u16, level: Level) -> Self {
        assert!(level.allows(mask), "parameter level not activated");
        let mut terms = BTreeMap::new();
        terms.insert(mask, ScalarPoly::one());
        SuperExpr { level, terms }
    }

    pub fn gen(g: Gen, level: Level) -> Self {
        SuperExpr::mono(1 << g, level)
    }

    pub fn term(mask: u16, coeff: ScalarPoly, level: Level) -> Self {
        assert!(level.allows(mask), "parameter level not activated");
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mask, coeff);
        }
        SuperExpr { level, terms }
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u16, &ScalarPoly)> {
        self.terms.iter().map(|(m, p)| (*m, p))
    }

    pub fn coefficient(&self, mask: u16) -> ScalarPoly {
        self.terms.get(&mask).cloned().unwrap_or_default()
    }

    /// Lift a standard-level expression into the parameter level.
    pub fn with_param_level(&self) -> SuperExpr {
        SuperExpr {
            level: Level::Param,
            terms: self.terms.clone(),
        }
    }

    fn check_level(&self, other: &SuperExpr) {
        assert!(
            self.level == other.level,
            "mixing Grassmann parameter-level contexts"
        );
    }

    fn add_term(&mut self, mask: u16, p: ScalarPoly) {
        if p.is_zero() {
            return;
        }
        match self.terms.entry(mask) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(p);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += p;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &GaussRat) -> SuperExpr {
        let mut out = SuperExpr::zero(self.level);
        for (m, p) in &self.terms {
            out.add_term(*m, p.scale(c));
        }
        out
    }

    pub fn scale_poly(&self, c: &ScalarPoly) -> SuperExpr {
        let mut out = SuperExpr::zero(self.level);
        for (m, p) in &self.terms {
            out.add_term(*m, p * c);
        }
        out
    }

    /// Apply a map to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&ScalarPoly) -> ScalarPoly) -> SuperExpr {
        let mut out = SuperExpr::zero(self.level);
        for (m, p) in &self.terms {
            out.add_term(*m, f(p));
        }
        out
    }

    /// Coefficient-wise spacetime derivative.
    pub fn partial(&self, mu: u8) -> SuperExpr {
        self.map_coeffs(|p| p.partial(mu))
    }

    /// Grassmann parity when the expression is homogeneous.
    pub fn parity(&self) -> Option<u8> {
        let mut parity = None;
        for m in self.terms.keys() {
            let p = (m.count_ones() % 2) as u8;
            match parity {
                None => parity = Some(p),
                Some(q) if q == p => {}
                _ => return None,
            }
        }
        parity.or(Some(0))
    }

    /// Left derivative with respect to one generator.
    pub fn d_gen(&self, g: Gen) -> SuperExpr {
        let bit = 1u16 << g;
        let mut out = SuperExpr::zero(self.level);
        for (m, p) in &self.terms {
            if m & bit == 0 {
                continue;
            }
            let below = (m & (bit - 1)).count_ones();
            let coeff = if below % 2 == 0 {
                p.clone()
            } else {
                p.scale(&GaussRat::from_int(-1))
            };
            out.add_term(m & !bit, coeff);
        }
        out
    }

    /// The twisted conjugation: an order-reversing involution that swaps
    /// dotted and undotted generators and conjugates coefficients.
    pub fn twisted_dagger(&self) -> SuperExpr {
        let mut out = SuperExpr::zero(self.level);
        for (m, p) in &self.terms {
            let (mask, sign) = dagger_mono(*m);
            let mut coeff = p.conj();
            if sign < 0 {
                coeff = coeff.scale(&GaussRat::from_int(-1));
            }
            out.add_term(mask, coeff);
        }
        out
    }

    /// The plain conjugation: order-preserving, swaps dotted and undotted
    /// generators and conjugates coefficients.
    pub fn plain_conj(&self) -> SuperExpr {
        let mut out = SuperExpr::zero(self.level);
        for (m, p) in &self.terms {
            let (mask, sign) = conj_mono(*m);
            let mut coeff = p.conj();
            if sign < 0 {
                coeff = coeff.scale(&GaussRat::from_int(-1));
            }
            out.add_term(mask, coeff);
        }
        out
    }
}

/// Sort a sequence of distinct generators into ascending order, returning
/// the mask and the permutation sign.
fn sort_gens(seq: &[Gen]) -> (u16, i8) {
    let mut inversions = 0;
    for i in 0..seq.len() {
        for j in (i + 1)..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    let mut mask = 0u16;
    for g in seq {
        mask |= 1 << g;
    }
    (mask, if inversions % 2 == 0 { 1 } else { -1 })
}

fn dagger_mono(m: u16) -> (u16, i8) {
    // Image sequence: reverse the monomial, then map each generator.
    let mut seq: Vec<Gen> = (0..12).filter(|g| m & (1 << g) != 0).collect();
    seq.reverse();
    for g in seq.iter_mut() {
        *g = gens::dagger(*g);
    }
    sort_gens(&seq)
}

fn conj_mono(m: u16) -> (u16, i8) {
    let mut seq: Vec<Gen> = (0..12).filter(|g| m & (1 << g) != 0).collect();
    for g in seq.iter_mut() {
        *g = gens::dagger(*g);
    }
    sort_gens(&seq)
}

impl Add for &SuperExpr {
    type Output = SuperExpr;
    fn add(self, rhs: &SuperExpr) -> SuperExpr {
        self.check_level(rhs);
        let mut out = self.clone();
        for (m, p) in &rhs.terms {
            out.add_term(*m, p.clone());
        }
        out
    }
}

impl Add for SuperExpr {
    type Output = SuperExpr;
    fn add(self, rhs: SuperExpr) -> SuperExpr {
        &self + &rhs
    }
}

impl AddAssign<SuperExpr> for SuperExpr {
    fn add_assign(&mut self, rhs: SuperExpr) {
        self.check_level(&rhs);
        for (m, p) in rhs.terms {
            self.add_term(m, p);
        }
    }
}

impl Sub for &SuperExpr {
    type Output = SuperExpr;
    fn sub(self, rhs: &SuperExpr) -> SuperExpr {
        self.check_level(rhs);
        let mut out = self.clone();
        for (m, p) in &rhs.terms {
            out.add_term(*m, p.scale(&GaussRat::from_int(-1)));
        }
        out
    }
}

impl Sub for SuperExpr {
    type Output = SuperExpr;
    fn sub(self, rhs: SuperExpr) -> SuperExpr {
        &self - &rhs
    }
}

impl Neg for SuperExpr {
    type Output = SuperExpr;
    fn neg(self) -> SuperExpr {
        self.scale(&GaussRat::from_int(-1))
    }
}

impl Mul for &SuperExpr {
    type Output = SuperExpr;
    fn mul(self, rhs: &SuperExpr) -> SuperExpr {
        self.check_level(rhs);
        let mut out = SuperExpr::zero(self.level);
        for (ma, pa) in &self.terms {
            for (mb, pb) in &rhs.terms {
                if ma & mb != 0 {
                    continue; // a repeated generator squares to zero
                }
                let sign = koszul_sign(*ma, *mb);
                let mut coeff = pa * pb;
                if sign < 0 {
                    coeff = coeff.scale(&GaussRat::from_int(-1));
                }
                out.add_term(ma | mb, coeff);
            }
        }
        out
    }
}

impl Mul for SuperExpr {
    type Output = SuperExpr;
    fn mul(self, rhs: SuperExpr) -> SuperExpr {
        &self * &rhs
    }
}

impl fmt::Display for SuperExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, p) in &self.terms {
            if !first {
                writeln!(f)?;
            }
            first = false;
            if *m == 0 {
                write!(f, "1")?;
            } else {
                let mut sep = false;
                for g in 0..12 {
                    if m & (1 << g) != 0 {
                        if sep {
                            write!(f, " ")?;
                        }
                        write!(f, "{}", gens::NAMES[g as usize])?;
                        sep = true;
                    }
                }
            }
            write!(f, "  *  [{p}]")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Sector templates.
// ---------------------------------------------------------------------------

/// The structural sectors, ordered from largest to smallest.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sector {
    General,
    Tame,
    Medium,
    Small,
}

/// The 41 scalar components of a tame scalar superfield. Index conventions:
/// spinor arrays are indexed by `alpha - 1`, vector arrays by `mu`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TameComponents {
    /// `f_(0)`
    pub c0: ScalarPoly,
    /// `f_(alpha)`
    pub ca: [ScalarPoly; 2],
    /// `f_(betadot)`
    pub cbd: [ScalarPoly; 2],
    /// `f'_(0)`
    pub cp0: ScalarPoly,
    /// `f_(12)`
    pub c12: ScalarPoly,
    /// `f_[mu]`
    pub cv: [ScalarPoly; 4],
    /// `f_(alpha betadot)`
    pub cab: [[ScalarPoly; 2]; 2],
    /// `f''_(0)`
    pub cpp0: ScalarPoly,
    /// `f_(1.2.)`
    pub cd12: ScalarPoly,
    /// `f'_[mu]`
    pub cpv: [ScalarPoly; 4],
    /// `f'_(betadot)`
    pub cpbd: [ScalarPoly; 2],
    /// `f_(12 betadot)`
    pub c12b: [ScalarPoly; 2],
    /// `f''_(alpha)`
    pub cppa: [ScalarPoly; 2],
    /// `f''_[mu]`
    pub cppv: [ScalarPoly; 4],
    /// `f_(alpha 1.2.)`
    pub ca12: [ScalarPoly; 2],
    /// `f~_(0)`
    pub ct0: ScalarPoly,
    /// `f~_(12)`
    pub ct12: ScalarPoly,
    /// `f~_[mu]`
    pub ctv: [ScalarPoly; 4],
    /// `f~_(1.2.)`
    pub ctd12: ScalarPoly,
    /// `f_(12 1.2.)`
    pub ctop: ScalarPoly,
}

fn mask_of(gens_list: &[Gen]) -> u16 {
    let mut m = 0;
    for g in gens_list {
        m |= 1 << g;
    }
    m
}

impl TameComponents {
    /// Fresh named symbols for all 41 components, with the component tag
    /// appended to `base`.
    pub fn symbols(base: &str) -> Self {
        use crate::scalar::FieldSymbol;
        let sym = |suffix: &str| {
            ScalarPoly::from_symbol(FieldSymbol::base(&alloc::format!("{base}{suffix}")))
        };
        let arr2 = |f: &dyn Fn(u8) -> ScalarPoly| [f(1), f(2)];
        let arr4 = |f: &dyn Fn(u8) -> ScalarPoly| [f(0), f(1), f(2), f(3)];
        TameComponents {
            c0: sym("_(0)"),
            ca: arr2(&|a| sym(&alloc::format!("_({a})"))),
            cbd: arr2(&|b| sym(&alloc::format!("_({b}.)"))),
            cp0: sym("'_(0)"),
            c12: sym("_(12)"),
            cv: arr4(&|m| sym(&alloc::format!("_[{m}]"))),
            cab: [
                [sym("_(11.)"), sym("_(12.)")],
                [sym("_(21.)"), sym("_(22.)")],
            ],
            cpp0: sym("''_(0)"),
            cd12: sym("_(1.2.)"),
            cpv: arr4(&|m| sym(&alloc::format!("'_[{m}]"))),
            cpbd: arr2(&|b| sym(&alloc::format!("'_({b}.)"))),
            c12b: arr2(&|b| sym(&alloc::format!("_(12{b}.)"))),
            cppa: arr2(&|a| sym(&alloc::format!("''_({a})"))),
            cppv: arr4(&|m| sym(&alloc::format!("''_[{m}]"))),
            ca12: arr2(&|a| sym(&alloc::format!("_({a}1.2.)"))),
            ct0: sym("~_(0)"),
            ct12: sym("~_(12)"),
            ctv: arr4(&|m| sym(&alloc::format!("~_[{m}]"))),
            ctd12: sym("~_(1.2.)"),
            ctop: sym("_(121.2.)"),
        }
    }

    /// Assemble the tame template expression in standard coordinates.
    pub fn assemble(&self, level: Level) -> SuperExpr {
        use gens::{theta, theta_bar, vth, vth_bar};
        let mut e = SuperExpr::zero(level);
        let mut put = |mask: u16, p: ScalarPoly| {
            e += SuperExpr::term(mask, p, level);
        };

        put(0, self.c0.clone());
        for a in 1..=2u8 {
            put(
                mask_of(&[theta(a), vth(a)]),
                self.ca[(a - 1) as usize].clone(),
            );
            put(
                mask_of(&[theta_bar(a), vth_bar(a)]),
                self.cbd[(a - 1) as usize].clone(),
            );
        }
        let th12 = mask_of(&[theta(1), theta(2)]);
        put(th12, self.cp0.clone());
        put(th12 | mask_of(&[vth(1), vth(2)]), self.c12.clone());
        for a in 1..=2u8 {
            for b in 1..=2u8 {
                let base = mask_of(&[theta(a), theta_bar(b)]);
                let mut vec_part = ScalarPoly::zero();
                for mu in 0..4u8 {
                    vec_part += self.cv[mu as usize].scale(&spinor::sigma(mu, a, b));
                }
                put(base, vec_part);
                put(
                    base | mask_of(&[vth(a), vth_bar(b)]),
                    self.cab[(a - 1) as usize][(b - 1) as usize].clone(),
                );
            }
        }
        let tb12 = mask_of(&[theta_bar(1), theta_bar(2)]);
        put(tb12, self.cpp0.clone());
        put(tb12 | mask_of(&[vth_bar(1), vth_bar(2)]), self.cd12.clone());
        for b in 1..=2u8 {
            let base = th12 | mask_of(&[theta_bar(b)]);
            for a in 1..=2u8 {
                let mut vec_part = ScalarPoly::zero();
                for mu in 0..4u8 {
                    vec_part += self.cpv[mu as usize].scale(&spinor::sigma_up_first(mu, a, b));
                }
                put(base | mask_of(&[vth(a)]), vec_part);
            }
            put(
                base | mask_of(&[vth_bar(b)]),
                self.cpbd[(b - 1) as usize].clone(),
            );
            put(
                base | mask_of(&[vth(1), vth(2), vth_bar(b)]),
                self.c12b[(b - 1) as usize].clone(),
            );
        }
        for a in 1..=2u8 {
            let base = mask_of(&[theta(a)]) | tb12;
            put(
                base | mask_of(&[vth(a)]),
                self.cppa[(a - 1) as usize].clone(),
            );
            for b in 1..=2u8 {
                let mut vec_part = ScalarPoly::zero();
                for mu in 0..4u8 {
                    vec_part += self.cppv[mu as usize].scale(&spinor::sigma_up_second(mu, a, b));
                }
                put(base | mask_of(&[vth_bar(b)]), vec_part);
            }
            put(
                base | mask_of(&[vth(a), vth_bar(1), vth_bar(2)]),
                self.ca12[(a - 1) as usize].clone(),
            );
        }
        let top = th12 | tb12;
        put(top, self.ct0.clone());
        put(top | mask_of(&[vth(1), vth(2)]), self.ct12.clone());
        for a in 1..=2u8 {
            for b in 1..=2u8 {
                let mut vec_part = ScalarPoly::zero();
                for mu in 0..4u8 {
                    vec_part += self.ctv[mu as usize].scale(&spinor::sigma_bar_upper(mu, b, a));
                }
                put(top | mask_of(&[vth(a), vth_bar(b)]), vec_part);
            }
        }
        put(top | mask_of(&[vth_bar(1), vth_bar(2)]), self.ctd12.clone());
        put(
            top | mask_of(&[vth(1), vth(2), vth_bar(1), vth_bar(2)]),
            self.ctop.clone(),
        );
        e
    }

    /// Read the 41 component slots off an expression. The result is only
    /// meaningful together with a rebuild-and-compare (see [`sector_of`]).
    pub fn extract(e: &SuperExpr) -> TameComponents {
        use gens::{theta, theta_bar, vth, vth_bar};
        let mut c = TameComponents::default();
        c.c0 = e.coefficient(0);
        for a in 1..=2u8 {
            c.ca[(a - 1) as usize] = e.coefficient(mask_of(&[theta(a), vth(a)]));
            c.cbd[(a - 1) as usize] = e.coefficient(mask_of(&[theta_bar(a), vth_bar(a)]));
        }
        let th12 = mask_of(&[theta(1), theta(2)]);
        let tb12 = mask_of(&[theta_bar(1), theta_bar(2)]);
        c.cp0 = e.coefficient(th12);
        c.c12 = e.coefficient(th12 | mask_of(&[vth(1), vth(2)]));
        // Vector components: f_[mu] = -1/2 sum sigmabar_mu^{bd a} t_{a bd}.
        for mu in 0..4u8 {
            let mut acc = ScalarPoly::zero();
            for a in 1..=2u8 {
                for b in 1..=2u8 {
                    let t = e.coefficient(mask_of(&[theta(a), theta_bar(b)]));
                    acc += t.scale(&(spinor::sigma_bar_lower(mu, b, a) * GaussRat::ratio(-1, 2)));
                }
            }
            c.cv[mu as usize] = acc;
        }
        for a in 1..=2u8 {
            for b in 1..=2u8 {
                c.cab[(a - 1) as usize][(b - 1) as usize] = e.coefficient(mask_of(&[
                    theta(a),
                    theta_bar(b),
                    vth(a),
                    vth_bar(b),
                ]));
            }
        }
        c.cpp0 = e.coefficient(tb12);
        c.cd12 = e.coefficient(tb12 | mask_of(&[vth_bar(1), vth_bar(2)]));
        // f'_[mu]: lower the raised spinor index, then invert as a bispinor.
        for mu in 0..4u8 {
            let mut acc = ScalarPoly::zero();
            for d in 1..=2u8 {
                for b in 1..=2u8 {
                    // w_{d b} = sum_a eps_{d a} u_{a b}
                    let mut w = ScalarPoly::zero();
                    for a in 1..=2u8 {
                        let ee = spinor::eps_lower(d, a);
                        if ee != 0 {
                            w += e
                                .coefficient(th12 | mask_of(&[theta_bar(b), vth(a)]))
                                .scale(&GaussRat::from_int(ee));
                        }
                    }
                    acc += w.scale(&(spinor::sigma_bar_lower(mu, b, d) * GaussRat::ratio(-1, 2)));
                }
            }
            c.cpv[mu as usize] = acc;
        }
        for b in 1..=2u8 {
            c.cpbd[(b - 1) as usize] =
                e.coefficient(th12 | mask_of(&[theta_bar(b), vth_bar(b)]));
            c.c12b[(b - 1) as usize] =
                e.coefficient(th12 | mask_of(&[theta_bar(b), vth(1), vth(2), vth_bar(b)]));
        }
        for a in 1..=2u8 {
            c.cppa[(a - 1) as usize] = e.coefficient(mask_of(&[theta(a), vth(a)]) | tb12);
            c.ca12[(a - 1) as usize] =
                e.coefficient(mask_of(&[theta(a), vth(a), vth_bar(1), vth_bar(2)]) | tb12);
        }
        // f''_[mu]: lower the raised dotted index, then invert.
        for mu in 0..4u8 {
            let mut acc = ScalarPoly::zero();
            for a in 1..=2u8 {
                for g in 1..=2u8 {
                    let mut w = ScalarPoly::zero();
                    for b in 1..=2u8 {
                        let ee = spinor::eps_lower(g, b);
                        if ee != 0 {
                            w += e
                                .coefficient(mask_of(&[theta(a), vth_bar(b)]) | tb12)
                                .scale(&GaussRat::from_int(ee));
                        }
                    }
                    acc += w.scale(&(spinor::sigma_bar_lower(mu, g, a) * GaussRat::ratio(-1, 2)));
                }
            }
            c.cppv[mu as usize] = acc;
        }
        let top = th12 | tb12;
        c.ct0 = e.coefficient(top);
        c.ct12 = e.coefficient(top | mask_of(&[vth(1), vth(2)]));
        // f~_[mu] from s_{a b} = sum sigmabar^{mu b a} f~_[mu]:
        // f~_[mu] = -1/2 sum_nu eta_{mu nu} sum sigma^nu_{a b} s_{a b}.
        for mu in 0..4u8 {
            let mut acc = ScalarPoly::zero();
            for a in 1..=2u8 {
                for b in 1..=2u8 {
                    let s = e.coefficient(top | mask_of(&[vth(a), vth_bar(b)]));
                    acc += s.scale(&spinor::sigma(mu, a, b));
                }
            }
            let eta_mm = GaussRat::from_int(spinor::eta(mu, mu));
            c.ctv[mu as usize] = acc.scale(&(eta_mm * GaussRat::ratio(-1, 2)));
        }
        c.ctd12 = e.coefficient(top | mask_of(&[vth_bar(1), vth_bar(2)]));
        c.ctop = e.coefficient(top | mask_of(&[vth(1), vth(2), vth_bar(1), vth_bar(2)]));
        c
    }
}

/// Classify an expression against the sector templates: the tightest of
/// small, medium, tame whose structural pattern it matches, else general.
pub fn sector_of(e: &SuperExpr) -> Sector {
    // Parameter-level generators never occur in the sector templates.
    if e.terms.keys().any(|m| m & ETA_BLOCK != 0) {
        return Sector::General;
    }
    let c = TameComponents::extract(e);
    if &c.assemble(e.level) != e {
        return Sector::General;
    }
    if !c.cp0.is_zero() || !c.cpp0.is_zero() {
        return Sector::Tame;
    }
    let small = c.cpbd.iter().all(ScalarPoly::is_zero)
        && c.cppa.iter().all(ScalarPoly::is_zero)
        && c.ct12.is_zero()
        && c.ctd12.is_zero();
    if small {
        Sector::Small
    } else {
        Sector::Medium
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gens::*;

    fn th(a: u8) -> SuperExpr {
        SuperExpr::gen(theta(a), Level::Standard)
    }

    fn thb(b: u8) -> SuperExpr {
        SuperExpr::gen(theta_bar(b), Level::Standard)
    }

    #[test]
    fn generators_square_to_zero_and_anticommute() {
        assert!((&th(1) * &th(1)).is_zero());
        let ab = &th(1) * &th(2);
        let ba = &th(2) * &th(1);
        assert_eq!(ab, -ba);
    }

    #[test]
    fn koszul_sign_matches_sorting_oracle() {
        // Oracle: count inversions of the concatenated generator sequence by
        // explicit enumeration.
        for a_mask in [0b0000_0001u16, 0b0000_0110, 0b1010_0000, 0b0000_1011] {
            for b_mask in [0b0000_0000u16, 0b0100_1000, 0b0001_0100] {
                if a_mask & b_mask != 0 {
                    continue;
                }
                let seq_a: Vec<Gen> = (0..12).filter(|g| a_mask & (1 << g) != 0).collect();
                let seq_b: Vec<Gen> = (0..12).filter(|g| b_mask & (1 << g) != 0).collect();
                let mut seq = seq_a;
                seq.extend(seq_b);
                let (_, want) = sort_gens(&seq);
                assert_eq!(koszul_sign(a_mask, b_mask), want);
            }
        }
    }

    #[test]
    fn fierz_type_identity() {
        // (sum theta sigma^mu thetabar)(sum theta sigma^nu thetabar)
        //   = 2 theta^1 theta^2 thetabar^1. thetabar^2. eta^{mu nu}.
        for mu in 0..4u8 {
            for nu in 0..4u8 {
                let bilinear = |m: u8| {
                    let mut e = SuperExpr::zero(Level::Standard);
                    for a in 1..=2u8 {
                        for b in 1..=2u8 {
                            e += (&th(a) * &thb(b)).scale(&spinor::sigma(m, a, b));
                        }
                    }
                    e
                };
                let prod = &bilinear(mu) * &bilinear(nu);
                let top = SuperExpr::mono(
                    mask_of(&[theta(1), theta(2), theta_bar(1), theta_bar(2)]),
                    Level::Standard,
                )
                .scale(&GaussRat::from_int(2 * spinor::eta(mu, nu)));
                assert_eq!(prod, top);
            }
        }
    }

    #[test]
    fn dagger_reverses_products() {
        // (theta^1 theta^2)^dag = thetabar^2. thetabar^1. = -thetabar^1. thetabar^2.
        let t12 = &th(1) * &th(2);
        let want = (&thb(1) * &thb(2)).scale(&GaussRat::from_int(-1));
        assert_eq!(t12.twisted_dagger(), want);
    }

    #[test]
    fn dagger_involution_and_antihomomorphism() {
        let f = (&th(1) * &thb(2)).scale(&GaussRat::i())
            + SuperExpr::gen(vth(1), Level::Standard).scale_poly(&ScalarPoly::sym("A"));
        let g = &th(2) * &SuperExpr::gen(vth_bar(1), Level::Standard)
            + SuperExpr::scalar(ScalarPoly::sym("B"), Level::Standard);
        assert_eq!(f.twisted_dagger().twisted_dagger(), f);
        let lhs = (&f * &g).twisted_dagger();
        let rhs = &g.twisted_dagger() * &f.twisted_dagger();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn plain_conj_is_homomorphism() {
        let f = (&th(1) * &thb(2)).scale(&GaussRat::i())
            + SuperExpr::gen(vth(2), Level::Standard).scale_poly(&ScalarPoly::sym("A"));
        let g = &th(2) * &SuperExpr::gen(vth_bar(1), Level::Standard)
            + SuperExpr::scalar(ScalarPoly::sym("B"), Level::Standard);
        assert_eq!(f.plain_conj().plain_conj(), f);
        assert_eq!((&f * &g).plain_conj(), &f.plain_conj() * &g.plain_conj());
        // conj(i theta^1) = -i thetabar^1.
        let it1 = th(1).scale(&GaussRat::i());
        assert_eq!(it1.plain_conj(), thb(1).scale(&-GaussRat::i()));
    }

    #[test]
    fn conj_and_dagger_agree_up_to_degree_one() {
        let f = SuperExpr::scalar(ScalarPoly::sym("A").scale(&GaussRat::i()), Level::Standard)
            + th(2).scale_poly(&ScalarPoly::sym("B"))
            + SuperExpr::gen(vth_bar(1), Level::Standard);
        assert_eq!(f.plain_conj(), f.twisted_dagger());
    }

    #[test]
    fn graded_commutativity() {
        let odd1 = th(1).scale_poly(&ScalarPoly::sym("A"))
            + SuperExpr::gen(vth_bar(2), Level::Standard);
        let odd2 = thb(1) + SuperExpr::gen(vth(1), Level::Standard);
        let even = &th(1) * &thb(2);
        // odd * odd anticommute; even commutes with everything.
        assert_eq!(&odd1 * &odd2, -(&odd2 * &odd1));
        assert_eq!(&even * &odd1, &odd1 * &even);
    }

    #[test]
    fn left_derivative() {
        // d/dtheta^2 (theta^1 theta^2) = -theta^1.
        let t12 = &th(1) * &th(2);
        assert_eq!(t12.d_gen(theta(2)), -th(1));
        assert_eq!(t12.d_gen(theta(1)), th(2));
    }

    #[test]
    fn tame_template_round_trip() {
        let comps = TameComponents::symbols("A");
        let e = comps.assemble(Level::Standard);
        assert_eq!(sector_of(&e), Sector::Tame);
        let back = TameComponents::extract(&e);
        assert_eq!(back, comps);
    }

    #[test]
    fn medium_and_small_classification() {
        let mut comps = TameComponents::symbols("A");
        comps.cp0 = ScalarPoly::zero();
        comps.cpp0 = ScalarPoly::zero();
        let e = comps.assemble(Level::Standard);
        assert_eq!(sector_of(&e), Sector::Medium);
        comps.cpbd = [ScalarPoly::zero(), ScalarPoly::zero()];
        comps.cppa = [ScalarPoly::zero(), ScalarPoly::zero()];
        comps.ct12 = ScalarPoly::zero();
        comps.ctd12 = ScalarPoly::zero();
        let e = comps.assemble(Level::Standard);
        assert_eq!(sector_of(&e), Sector::Small);
    }

    #[test]
    fn non_template_is_general() {
        let comps = TameComponents::symbols("A");
        let mut e = comps.assemble(Level::Standard);
        e += SuperExpr::gen(theta(1), Level::Standard).scale_poly(&ScalarPoly::sym("x"));
        assert_eq!(sector_of(&e), Sector::General);
    }

    #[test]
    #[should_panic(expected = "parameter level")]
    fn eta_requires_param_level() {
        let _ = SuperExpr::gen(eta(1), Level::Standard);
    }

    #[test]
    #[should_panic(expected = "mixing Grassmann parameter-level")]
    fn level_mixing_panics() {
        let a = SuperExpr::one(Level::Standard);
        let b = SuperExpr::one(Level::Param);
        let _ = &a * &b;
    }
}
