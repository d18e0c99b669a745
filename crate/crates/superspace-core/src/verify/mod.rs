//! The verification suites: golden coefficient-by-coefficient checks of the
//! explicit expansions the engine must reproduce, and randomized property
//! checks of the structural laws. The command-line `verify` subcommand and
//! the acceptance tests both run these.

use alloc::string::String;
use alloc::vec::Vec;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use crate::calculus::Check;
use crate::grassmann::{Level, SuperExpr};
use crate::rational::GaussRat;
use crate::scalar::ScalarPoly;

mod chirality_suite;
mod exotic_suite;
mod gauge_suite;
mod pev_suite;
mod products_suite;
mod sigma_suite;
mod susy_suite;
mod wz_suite;

/// The available suites, in the order `all` runs them.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Spinor,
    SusyAlgebra,
    Products,
    Chirality,
    Pev,
    Exotic,
    WessZumino,
    Gauge,
    Sigma,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Spinor,
        Suite::SusyAlgebra,
        Suite::Products,
        Suite::Chirality,
        Suite::Pev,
        Suite::Exotic,
        Suite::WessZumino,
        Suite::Gauge,
        Suite::Sigma,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Spinor => "spinor",
            Suite::SusyAlgebra => "susy-algebra",
            Suite::Products => "products",
            Suite::Chirality => "chirality",
            Suite::Pev => "pev",
            Suite::Exotic => "exotic",
            Suite::WessZumino => "wess-zumino",
            Suite::Gauge => "gauge",
            Suite::Sigma => "sigma",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.iter().copied().find(|s| s.name() == name)
    }
}

/// The outcome of one suite.
#[derive(Clone, Debug)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Run one suite.
pub fn run_suite(suite: Suite) -> Report {
    let checks = match suite {
        Suite::Spinor => crate::spinor::sigma_identity_suite()
            .into_iter()
            .map(Check::from)
            .collect(),
        Suite::SusyAlgebra => susy_suite::run(),
        Suite::Products => products_suite::run(),
        Suite::Chirality => chirality_suite::run(),
        Suite::Pev => pev_suite::run(),
        Suite::Exotic => exotic_suite::run(),
        Suite::WessZumino => wz_suite::run(),
        Suite::Gauge => gauge_suite::run(),
        Suite::Sigma => sigma_suite::run(),
    };
    Report {
        suite: String::from(suite.name()),
        checks,
    }
}

pub(crate) fn check(name: &str, pass: bool) -> Check {
    Check {
        name: String::from(name),
        pass,
    }
}

// ---------------------------------------------------------------------------
// Seeded random generators for the property suites.
// ---------------------------------------------------------------------------

pub(crate) fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random Gaussian rational with small numerators and denominators.
pub(crate) fn random_coeff(r: &mut ChaCha8Rng) -> GaussRat {
    let pick = |r: &mut ChaCha8Rng| {
        let num = r.gen_range(-4i64..=4);
        let den = r.gen_range(1i64..=3);
        (num, den)
    };
    let (a, b) = pick(r);
    let (c, d) = pick(r);
    GaussRat::complex_ratio(a, b, c, d)
}

/// A random scalar polynomial over a small symbol pool, with occasional
/// derivatives.
pub(crate) fn random_scalar(r: &mut ChaCha8Rng, pool: &[&str]) -> ScalarPoly {
    let mut out = ScalarPoly::zero();
    let terms = r.gen_range(1..=3);
    for _ in 0..terms {
        let mut term = ScalarPoly::constant(random_coeff(r));
        let factors = r.gen_range(0..=2);
        for _ in 0..factors {
            let name = pool[r.gen_range(0..pool.len())];
            let mut q = ScalarPoly::sym(name);
            if r.gen_bool(0.3) {
                q = q.partial(r.gen_range(0..4u8) as u8);
            }
            if r.gen_bool(0.5) {
                q = q.conj();
            }
            term = &term * &q;
        }
        out += term;
    }
    out
}

/// A random inhomogeneous expression over the standard generators.
pub(crate) fn random_super(r: &mut ChaCha8Rng, pool: &[&str], level: Level) -> SuperExpr {
    let mut out = SuperExpr::zero(level);
    let terms = r.gen_range(1..=5);
    for _ in 0..terms {
        let theta_nibble = r.gen_range(0..16u16);
        let vth_nibble = r.gen_range(0..16u16);
        let mask = theta_nibble | (vth_nibble << 8);
        out += SuperExpr::term(mask, random_scalar(r, pool), level);
    }
    out
}
