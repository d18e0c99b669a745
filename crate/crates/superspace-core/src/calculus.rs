//! Berezin integration, purge-evaluation maps, the divergence-kernel test
//! behind "invariant up to a boundary term", and the nine-dimensional
//! exotic algebra obtained by flattening the `vartheta` Grassmann algebra.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::CoreError;
use crate::grassmann::{gens, SuperExpr, VTH_BLOCK};
use crate::rational::GaussRat;
use crate::scalar::{FieldSymbol, ScalarPoly};
use crate::spinor;
use crate::superops::{self, Derivation};

/// Fermionic measures. The normalizations are
/// `int dtheta^2 dtheta^1 (theta^1 theta^2) = 1`,
/// `int dthetabar^2. dthetabar^1. (thetabar^1. thetabar^2.) = 1`,
/// and `Full` is the composition of the two.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Measure {
    /// `dtheta^2 dtheta^1`
    DTheta,
    /// `dthetabar^2. dthetabar^1.`
    DThetaBar,
    /// `dthetabar^2. dthetabar^1. dtheta^2 dtheta^1`
    Full,
}

/// Berezin integration: extract the coefficient of the top monomial of the
/// integrated generators, keeping the dependence on all others. With the
/// canonical generator order the extraction carries no extra sign.
pub fn berezin(f: &SuperExpr, measure: Measure) -> SuperExpr {
    let pair = |f: &SuperExpr, lo: u8, hi: u8| -> SuperExpr {
        let bits = (1u16 << lo) | (1u16 << hi);
        let mut out = SuperExpr::zero(f.level());
        for (mask, p) in f.terms() {
            if mask & bits == bits {
                out += SuperExpr::term(mask & !bits, p.clone(), f.level());
            }
        }
        out
    };
    match measure {
        Measure::DTheta => pair(f, gens::theta(1), gens::theta(2)),
        Measure::DThetaBar => pair(f, gens::theta_bar(1), gens::theta_bar(2)),
        Measure::Full => pair(
            &pair(f, gens::theta(1), gens::theta(2)),
            gens::theta_bar(1),
            gens::theta_bar(2),
        ),
    }
}

/// A purge-evaluation map: a linear assignment of a constant to each of the
/// sixteen `vartheta` monomials (the empty monomial is forced to map to 1).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PevMap {
    /// Indexed by the `vartheta` nibble `0..16`, bit `k` standing for
    /// generator `vth`-block bit `k` (`vth_1, vth_2, vthbar_1., vthbar_2.`).
    values: [GaussRat; 16],
}

impl PevMap {
    /// Build from the sixteen values; the degree-zero entry must be 1.
    pub fn new(values: [GaussRat; 16]) -> Result<Self, CoreError> {
        if !values[0].is_one() {
            return Err(CoreError::Elimination(String::from(
                "purge-evaluation must send the empty monomial to 1",
            )));
        }
        Ok(PevMap { values })
    }

    /// The standard map:
    /// `vth_1 vth_2 -> 1`, `vth_a vthbar_b -> -1`, `vthbar_1. vthbar_2. -> -1`,
    /// the top monomial `-> -1`, odd monomials `-> 0`.
    pub fn standard() -> Self {
        let mut values: [GaussRat; 16] = core::array::from_fn(|_| GaussRat::zero());
        values[0b0000] = GaussRat::one();
        values[0b0011] = GaussRat::one(); // vth_1 vth_2
        values[0b1100] = GaussRat::from_int(-1); // vthbar_1. vthbar_2.
        for a in 0..2 {
            for b in 2..4 {
                values[(1 << a) | (1 << b)] = GaussRat::from_int(-1); // vth_a vthbar_b
            }
        }
        values[0b1111] = GaussRat::from_int(-1);
        PevMap { values }
    }

    pub fn value(&self, vth_nibble: u16) -> &GaussRat {
        &self.values[(vth_nibble & 0xf) as usize]
    }

    pub fn values(&self) -> &[GaussRat; 16] {
        &self.values
    }
}

/// Purge-evaluation: eliminate every `vartheta` generator by the map,
/// leaving an expression in the remaining generators. The extraction of the
/// trailing `vartheta` block carries no sign in the canonical order.
pub fn pev(f: &SuperExpr, map: &PevMap) -> SuperExpr {
    let mut out = SuperExpr::zero(f.level());
    for (mask, p) in f.terms() {
        let nib = (mask & VTH_BLOCK) >> 8;
        let rest = mask & !VTH_BLOCK;
        let c = map.value(nib);
        if c.is_zero() {
            continue;
        }
        out += SuperExpr::term(rest, p.scale(c), f.level());
    }
    out
}

/// Assert that a scalar density is annihilated by the Euler operator of
/// every dynamical field family occurring in it, i.e. that it is a total
/// divergence. Returns the offending family on failure.
pub fn divergence_kernel_witness(density: &ScalarPoly) -> Option<FieldSymbol> {
    for family in density.field_families() {
        if !density.euler(&family).is_zero() {
            return Some(family);
        }
    }
    None
}

/// Divergence-kernel test for a full expression in the non-coordinate
/// generators: every Grassmann coefficient must be a total divergence.
pub fn divergence_kernel_super(e: &SuperExpr) -> Option<FieldSymbol> {
    for (_, p) in e.terms() {
        if let Some(w) = divergence_kernel_witness(p) {
            return Some(w);
        }
    }
    None
}

/// Which action functional a kernel feeds.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ActionMode {
    /// Full superspace measure; any integrand.
    FullMeasure,
    /// Chiral measure `dtheta^2 dtheta^1`; the integrand must be chiral.
    ChiralMeasure,
    /// Antichiral measure; the integrand must be antichiral.
    AntichiralMeasure,
}

/// One line of a verification report.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

impl From<spinor::Check> for Check {
    fn from(c: spinor::Check) -> Self {
        Check {
            name: c.name,
            pass: c.pass,
        }
    }
}

/// Verify that the action built from `kernel` with the given measure is
/// supersymmetric up to a boundary term: for every supersymmetry generator
/// the varied density (before and after purge-evaluation) lies in the
/// divergence kernel. Preconditions on chirality are reported as errors.
pub fn susy_invariance_check(
    kernel: &SuperExpr,
    mode: ActionMode,
    map: &PevMap,
) -> Result<Vec<Check>, CoreError> {
    let level = kernel.level();
    match mode {
        ActionMode::ChiralMeasure if !superops::is_chiral(kernel) => {
            return Err(CoreError::NotChiral)
        }
        ActionMode::AntichiralMeasure if !superops::is_antichiral(kernel) => {
            return Err(CoreError::NotAntichiral)
        }
        _ => {}
    }
    let measure = match mode {
        ActionMode::FullMeasure => Measure::Full,
        ActionMode::ChiralMeasure => Measure::DTheta,
        ActionMode::AntichiralMeasure => Measure::DThetaBar,
    };
    let mut checks = Vec::new();
    let qs: Vec<(String, Derivation)> = (1..=2u8)
        .map(|a| (alloc::format!("Q_{a}"), superops::q(a, level)))
        .chain((1..=2u8).map(|b| (alloc::format!("Qbar_{b}."), superops::q_bar(b, level))))
        .collect();
    for (name, d) in &qs {
        let varied = d.apply(kernel);
        let density = berezin(&varied, measure);
        let pre = divergence_kernel_super(&density).is_none();
        checks.push(Check {
            name: alloc::format!("variation by {name} is a boundary term"),
            pass: pre,
        });
        let purged = pev(&density, map);
        let post = divergence_kernel_super(&purged).is_none();
        checks.push(Check {
            name: alloc::format!("purge-evaluated variation by {name} is a boundary term"),
            pass: post,
        });
    }
    Ok(checks)
}

/// The purge-evaluated spacetime density of an action assembled from a
/// full-measure kernel, a chiral-measure kernel, and an antichiral-measure
/// kernel:
///
/// ```text
/// density = Pev [ int d4theta d  +  int d2theta f  -  int d2thetabar fbar ]
/// ```
///
/// restricted to its Grassmann-free part (the discarded blocks integrate to
/// boundary terms for admissible kernels, so every identity stated "up to a
/// boundary term" should be tested with the divergence kernel).
pub fn action_density_parts(
    d_kernel: &SuperExpr,
    f_kernel: &SuperExpr,
    fbar_kernel: &SuperExpr,
    map: &PevMap,
) -> ScalarPoly {
    let d = pev(&berezin(d_kernel, Measure::Full), map).coefficient(0);
    let f = pev(&berezin(f_kernel, Measure::DTheta), map).coefficient(0);
    let fb = pev(&berezin(fbar_kernel, Measure::DThetaBar), map).coefficient(0);
    &(&d + &f) - &fb
}

/// Equality up to boundary terms: the difference of two densities lies in
/// the kernel of every Euler operator. Returns a witness family on failure.
pub fn divergence_equal(a: &ScalarPoly, b: &ScalarPoly) -> Option<FieldSymbol> {
    divergence_kernel_witness(&(a - b))
}

// ---------------------------------------------------------------------------
// The exotic algebra.
// ---------------------------------------------------------------------------

/// Basis of the nine-dimensional exotic algebra:
/// `(1, vth_1, vth_2, vthbar_1., vthbar_2., s_{11.}, s_{12.}, s_{21.}, s_{22.})`.
pub const EXOTIC_DIM: usize = 9;

const E_ONE: usize = 0;

fn e_vth(alpha: u8) -> usize {
    alpha as usize // 1, 2
}

fn e_vthbar(betadot: u8) -> usize {
    2 + betadot as usize // 3, 4
}

fn e_sigma(alpha: u8, betadot: u8) -> usize {
    4 + ((alpha - 1) * 2 + betadot) as usize // 5..=8
}

/// An element of the exotic algebra: a 9-vector over `Q(i)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExoticElem {
    pub coords: [GaussRat; EXOTIC_DIM],
}

impl ExoticElem {
    pub fn zero() -> Self {
        ExoticElem {
            coords: core::array::from_fn(|_| GaussRat::zero()),
        }
    }

    pub fn basis(k: usize) -> Self {
        let mut e = ExoticElem::zero();
        e.coords[k] = GaussRat::one();
        e
    }

    pub fn one() -> Self {
        ExoticElem::basis(E_ONE)
    }

    pub fn vth(alpha: u8) -> Self {
        ExoticElem::basis(e_vth(alpha))
    }

    pub fn vth_bar(betadot: u8) -> Self {
        ExoticElem::basis(e_vthbar(betadot))
    }

    pub fn sigma(alpha: u8, betadot: u8) -> Self {
        ExoticElem::basis(e_sigma(alpha, betadot))
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        ExoticElem {
            coords: core::array::from_fn(|k| &self.coords[k] * c),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        ExoticElem {
            coords: core::array::from_fn(|k| self.coords[k].clone() + other.coords[k].clone()),
        }
    }

    /// Twisted conjugation: `1 -> 1`, `vth_a <-> vthbar_a.`,
    /// `s_{a b.} -> s_{b a.}`, with conjugated coefficients.
    pub fn dagger(&self) -> Self {
        let mut out = ExoticElem::zero();
        let images: [usize; EXOTIC_DIM] = [
            E_ONE,
            e_vthbar(1),
            e_vthbar(2),
            e_vth(1),
            e_vth(2),
            e_sigma(1, 1),
            e_sigma(2, 1),
            e_sigma(1, 2),
            e_sigma(2, 2),
        ];
        for k in 0..EXOTIC_DIM {
            out.coords[images[k]] = self.coords[k].conj();
        }
        out
    }
}

/// The structure constants: `basis_mul(a, b)` is the product of basis
/// elements `a` and `b`, built from the defining relations
///
/// ```text
/// vth_a * vth_b      = -eps_{a b}
/// vth_a * vthbar_b.  = -vthbar_b. * vth_a = s_{a b.}
/// vthbar_a. * vthbar_b. = eps_{a. b.}
/// vth_a * s_{g d.}   = s_{g d.} * vth_a   = eps_{g a} vthbar_d.
/// vthbar_b. * s_{g d.} = s_{g d.} * vthbar_b. = eps_{d. b.} vth_g
/// s_{a b.} * s_{g d.} = |eps_{a g} eps_{b. d.}|
/// ```
fn basis_mul(a: usize, b: usize) -> ExoticElem {
    if a == E_ONE {
        return ExoticElem::basis(b);
    }
    if b == E_ONE {
        return ExoticElem::basis(a);
    }
    let kind = |k: usize| -> (u8, u8, u8) {
        // (class, alpha, betadot): class 1 = vth, 2 = vthbar, 3 = sigma.
        match k {
            1 | 2 => (1, k as u8, 0),
            3 | 4 => (2, 0, (k - 2) as u8),
            _ => {
                let t = (k - 5) as u8;
                (3, t / 2 + 1, t % 2 + 1)
            }
        }
    };
    let (ca, aa, ab) = kind(a);
    let (cb, ba, bb) = kind(b);
    let int = |v: i64| ExoticElem::one().scale(&GaussRat::from_int(v));
    match (ca, cb) {
        (1, 1) => int(-spinor::eps_lower(aa, ba)),
        (2, 2) => int(spinor::eps_lower(ab, bb)),
        (1, 2) => ExoticElem::sigma(aa, bb),
        (2, 1) => ExoticElem::sigma(ba, ab).scale(&GaussRat::from_int(-1)),
        (1, 3) => ExoticElem::vth_bar(bb).scale(&GaussRat::from_int(spinor::eps_lower(ba, aa))),
        (3, 1) => ExoticElem::vth_bar(ab).scale(&GaussRat::from_int(spinor::eps_lower(aa, ba))),
        (2, 3) => ExoticElem::vth(ba).scale(&GaussRat::from_int(spinor::eps_lower(bb, ab))),
        (3, 2) => ExoticElem::vth(aa).scale(&GaussRat::from_int(spinor::eps_lower(ab, bb))),
        (3, 3) => {
            let v = spinor::eps_lower(aa, ba) * spinor::eps_lower(ab, bb);
            int(v.abs())
        }
        _ => unreachable!(),
    }
}

/// Bilinear multiplication on the exotic algebra (not associative).
pub fn exotic_mul(x: &ExoticElem, y: &ExoticElem) -> ExoticElem {
    let mut out = ExoticElem::zero();
    for a in 0..EXOTIC_DIM {
        if x.coords[a].is_zero() {
            continue;
        }
        for b in 0..EXOTIC_DIM {
            if y.coords[b].is_zero() {
                continue;
            }
            let c = &x.coords[a] * &y.coords[b];
            out = out.add(&basis_mul(a, b).scale(&c));
        }
    }
    out
}

/// The flattening projection from the `vartheta` Grassmann algebra onto the
/// exotic algebra:
///
/// ```text
/// 1 -> 1,  vth_a -> vth_a,  vthbar_b. -> vthbar_b.,
/// vth_1 vth_2 -> 1,  vth_a vthbar_b. -> s_{a b.},  vthbar_1. vthbar_2. -> -1,
/// vth_1 vth_2 vthbar_b. -> vthbar_b.,  vth_a vthbar_1. vthbar_2. -> -vth_a,
/// top -> -1.
/// ```
///
/// The input must involve only `vartheta` generators with constant
/// coefficients.
pub fn exotic_pev(w: &SuperExpr) -> Result<ExoticElem, CoreError> {
    let mut out = ExoticElem::zero();
    for (mask, p) in w.terms() {
        if mask & !VTH_BLOCK != 0 {
            return Err(CoreError::BadIndex(String::from(
                "exotic flattening applies to the vartheta block only",
            )));
        }
        if !p.is_constant() {
            return Err(CoreError::BadIndex(String::from(
                "exotic flattening needs constant coefficients",
            )));
        }
        let c = p.constant_part();
        let nib = (mask >> 8) & 0xf;
        let image = match nib {
            0b0000 => ExoticElem::one(),
            0b0001 => ExoticElem::vth(1),
            0b0010 => ExoticElem::vth(2),
            0b0100 => ExoticElem::vth_bar(1),
            0b1000 => ExoticElem::vth_bar(2),
            0b0011 => ExoticElem::one(),
            0b1100 => ExoticElem::one().scale(&GaussRat::from_int(-1)),
            0b0101 => ExoticElem::sigma(1, 1),
            0b1001 => ExoticElem::sigma(1, 2),
            0b0110 => ExoticElem::sigma(2, 1),
            0b1010 => ExoticElem::sigma(2, 2),
            0b0111 => ExoticElem::vth_bar(1),
            0b1011 => ExoticElem::vth_bar(2),
            0b1101 => ExoticElem::vth(1).scale(&GaussRat::from_int(-1)),
            0b1110 => ExoticElem::vth(2).scale(&GaussRat::from_int(-1)),
            0b1111 => ExoticElem::one().scale(&GaussRat::from_int(-1)),
            _ => unreachable!(),
        };
        out = out.add(&image.scale(&c));
    }
    Ok(out)
}

/// The full 9 x 9 multiplication table, row-major: `table[a][b] = a * b`.
pub fn exotic_table() -> [[ExoticElem; EXOTIC_DIM]; EXOTIC_DIM] {
    core::array::from_fn(|a| core::array::from_fn(|b| basis_mul(a, b)))
}

/// Parse a purge-evaluation override: sixteen lines `<gens> = <rational>`
/// where `<gens>` is a space-separated list drawn from
/// `1 v1 v2 vb1 vb2` (the empty product written `1`).
pub fn parse_pev_table(text: &str) -> Result<PevMap, String> {
    let mut seen: BTreeMap<u16, GaussRat> = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut halves = line.splitn(2, '=');
        let lhs = halves.next().unwrap_or("").trim();
        let rhs = halves
            .next()
            .ok_or_else(|| alloc::format!("line {}: missing `=`", lineno + 1))?
            .trim();
        let mut nib = 0u16;
        for tok in lhs.split_whitespace() {
            let bit = match tok {
                "1" => continue,
                "v1" => 0,
                "v2" => 1,
                "vb1" => 2,
                "vb2" => 3,
                other => return Err(alloc::format!("line {}: unknown generator `{other}`", lineno + 1)),
            };
            if nib & (1 << bit) != 0 {
                return Err(alloc::format!("line {}: repeated generator", lineno + 1));
            }
            nib |= 1 << bit;
        }
        let value = GaussRat::parse(rhs).map_err(|e| alloc::format!("line {}: {e}", lineno + 1))?;
        if seen.insert(nib, value).is_some() {
            return Err(alloc::format!("line {}: duplicate monomial", lineno + 1));
        }
    }
    if seen.len() != 16 {
        return Err(alloc::format!(
            "purge-evaluation table needs exactly 16 entries, got {}",
            seen.len()
        ));
    }
    let values: [GaussRat; 16] = core::array::from_fn(|k| seen[&(k as u16)].clone());
    PevMap::new(values).map_err(|e| alloc::format!("{e}"))
}
