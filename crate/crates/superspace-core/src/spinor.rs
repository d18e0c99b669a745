//! Exact constant tables for two-component spinor algebra: the symplectic
//! epsilon tensors, the Pauli matrices, the Minkowski metric and the
//! spacetime volume tensor, plus the index conversions built from them.
//!
//! All conventions are fixed at compile time; every downstream sign in the
//! engine depends on these tables.

use alloc::string::String;
use alloc::vec::Vec;

use crate::rational::GaussRat;
use crate::scalar::{FieldSymbol, ScalarPoly};

/// Undotted spinor index, `1` or `2`.
pub type SpinIdx = u8;
/// Dotted spinor index, `1` or `2`.
pub type DotIdx = u8;

/// `eps^{12} = -eps^{21} = 1`, both for dotted and undotted indices.
pub fn eps_upper(a: u8, b: u8) -> i64 {
    match (a, b) {
        (1, 2) => 1,
        (2, 1) => -1,
        _ => 0,
    }
}

/// `eps_{12} = -eps_{21} = -1`, both for dotted and undotted indices.
pub fn eps_lower(a: u8, b: u8) -> i64 {
    -eps_upper(a, b)
}

/// Minkowski metric `diag(-1, 1, 1, 1)`; also used for the inverse.
pub fn eta(mu: u8, nu: u8) -> i64 {
    if mu != nu {
        0
    } else if mu == 0 {
        -1
    } else {
        1
    }
}

/// Totally antisymmetric volume tensor with `eps^{0123} = 1`.
pub fn eps4(mu: u8, nu: u8, rho: u8, tau: u8) -> i64 {
    let idx = [mu, nu, rho, tau];
    for k in 0..4 {
        for l in (k + 1)..4 {
            if idx[k] == idx[l] {
                return 0;
            }
        }
    }
    // Count inversions of the permutation of (0,1,2,3).
    let mut inv = 0;
    for k in 0..4 {
        for l in (k + 1)..4 {
            if idx[k] > idx[l] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Pauli matrix entry `sigma^mu_{alpha betadot}` with
/// `sigma^0 = diag(-1, -1)` and `sigma^{1,2,3}` the standard Pauli matrices.
pub fn sigma(mu: u8, alpha: SpinIdx, betadot: DotIdx) -> GaussRat {
    let (a, b) = (alpha, betadot);
    match mu {
        0 => match (a, b) {
            (1, 1) | (2, 2) => GaussRat::from_int(-1),
            _ => GaussRat::zero(),
        },
        1 => match (a, b) {
            (1, 2) | (2, 1) => GaussRat::one(),
            _ => GaussRat::zero(),
        },
        2 => match (a, b) {
            (1, 2) => -GaussRat::i(),
            (2, 1) => GaussRat::i(),
            _ => GaussRat::zero(),
        },
        3 => match (a, b) {
            (1, 1) => GaussRat::one(),
            (2, 2) => GaussRat::from_int(-1),
            _ => GaussRat::zero(),
        },
        _ => panic!("spacetime index out of range"),
    }
}

/// `sigmabar^{mu betadot alpha} = sum eps^{alpha gamma} eps^{betadot deltadot}
/// sigma^mu_{gamma deltadot}`.
pub fn sigma_bar_upper(mu: u8, betadot: DotIdx, alpha: SpinIdx) -> GaussRat {
    let mut out = GaussRat::zero();
    for gamma in 1..=2 {
        for deltadot in 1..=2 {
            let e = eps_upper(alpha, gamma) * eps_upper(betadot, deltadot);
            if e != 0 {
                out += sigma(mu, gamma, deltadot) * GaussRat::from_int(e);
            }
        }
    }
    out
}

/// `sigmabar_mu = sum_nu eta_{mu nu} sigmabar^nu` (indices `[betadot][alpha]`).
pub fn sigma_bar_lower(mu: u8, betadot: DotIdx, alpha: SpinIdx) -> GaussRat {
    let mut out = GaussRat::zero();
    for nu in 0..4 {
        let e = eta(mu, nu);
        if e != 0 {
            out += sigma_bar_upper(nu, betadot, alpha) * GaussRat::from_int(e);
        }
    }
    out
}

/// `sigma^{mu alpha}_{  betadot} = sum_gamma eps^{alpha gamma}
/// sigma^mu_{gamma betadot}` (first spinor index raised).
pub fn sigma_up_first(mu: u8, alpha: SpinIdx, betadot: DotIdx) -> GaussRat {
    let mut out = GaussRat::zero();
    for gamma in 1..=2 {
        let e = eps_upper(alpha, gamma);
        if e != 0 {
            out += sigma(mu, gamma, betadot) * GaussRat::from_int(e);
        }
    }
    out
}

/// `sigma^{mu betadot}_alpha = sum_deltadot eps^{betadot deltadot}
/// sigma^mu_{alpha deltadot}` (second spinor index raised).
pub fn sigma_up_second(mu: u8, alpha: SpinIdx, betadot: DotIdx) -> GaussRat {
    let mut out = GaussRat::zero();
    for deltadot in 1..=2 {
        let e = eps_upper(betadot, deltadot);
        if e != 0 {
            out += sigma(mu, alpha, deltadot) * GaussRat::from_int(e);
        }
    }
    out
}

/// `(sigma^{mu nu})_alpha^gamma = 1/4 (sigma^mu sigmabar^nu -
/// sigma^nu sigmabar^mu)_alpha^gamma`, the Lorentz generators in the spinor
/// representation.
pub fn sigma_munu(mu: u8, nu: u8, alpha: SpinIdx, gamma: SpinIdx) -> GaussRat {
    let mut out = GaussRat::zero();
    for deltadot in 1..=2 {
        out += sigma(mu, alpha, deltadot) * sigma_bar_upper(nu, deltadot, gamma)
            - sigma(nu, alpha, deltadot) * sigma_bar_upper(mu, deltadot, gamma);
    }
    out * GaussRat::ratio(1, 4)
}

/// Raise one spinor index of a 2-vector of polynomials:
/// `psi^alpha = sum eps^{alpha beta} psi_beta`. Entries are
/// `v[0] = psi_1`, `v[1] = psi_2`.
pub fn raise(v: &[ScalarPoly; 2]) -> [ScalarPoly; 2] {
    let mk = |alpha: u8| {
        let mut out = ScalarPoly::zero();
        for beta in 1..=2u8 {
            let e = eps_upper(alpha, beta);
            if e != 0 {
                out += v[(beta - 1) as usize].scale(&GaussRat::from_int(e));
            }
        }
        out
    };
    [mk(1), mk(2)]
}

/// Lower one spinor index: `psi_alpha = sum eps_{alpha beta} psi^beta`.
pub fn lower(v: &[ScalarPoly; 2]) -> [ScalarPoly; 2] {
    let mk = |alpha: u8| {
        let mut out = ScalarPoly::zero();
        for beta in 1..=2u8 {
            let e = eps_lower(alpha, beta);
            if e != 0 {
                out += v[(beta - 1) as usize].scale(&GaussRat::from_int(e));
            }
        }
        out
    };
    [mk(1), mk(2)]
}

/// One named identity check over all index values.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

/// Evaluate the sigma-matrix identity suite exactly over all index values.
pub fn sigma_identity_suite() -> Vec<Check> {
    let mut checks = Vec::new();
    let mut push = |name: &str, pass: bool| {
        checks.push(Check {
            name: String::from(name),
            pass,
        })
    };

    // sum_beta eps_{alpha beta} eps^{beta gamma} = delta_alpha^gamma.
    let mut ok = true;
    for alpha in 1..=2 {
        for gamma in 1..=2 {
            let mut acc = 0;
            for beta in 1..=2 {
                acc += eps_lower(alpha, beta) * eps_upper(beta, gamma);
            }
            ok &= acc == i64::from(alpha == gamma);
        }
    }
    push("epsilon lower-upper contraction is the identity", ok);

    // Raise then lower is the identity on formal spinors.
    let psi = [ScalarPoly::sym("p1"), ScalarPoly::sym("p2")];
    ok = lower(&raise(&psi)) == psi && raise(&lower(&psi)) == psi;
    push("raise/lower round trip", ok);

    // sum sigmabar_mu^{betadot alpha} sigma^nu_{alpha betadot} = -2 delta_mu^nu.
    ok = true;
    for mu in 0..4 {
        for nu in 0..4 {
            let mut acc = GaussRat::zero();
            for alpha in 1..=2 {
                for betadot in 1..=2 {
                    acc += sigma_bar_lower(mu, betadot, alpha) * sigma(nu, alpha, betadot);
                }
            }
            ok &= acc == GaussRat::from_int(if mu == nu { -2 } else { 0 });
        }
    }
    push("sigmabar-sigma trace normalization", ok);

    // (sigma^mu sigmabar^nu + sigma^nu sigmabar^mu)_alpha^gamma
    //   = -2 eta^{mu nu} delta_alpha^gamma.
    ok = true;
    for mu in 0..4 {
        for nu in 0..4 {
            for alpha in 1..=2 {
                for gamma in 1..=2 {
                    let mut acc = GaussRat::zero();
                    for d in 1..=2 {
                        acc += sigma(mu, alpha, d) * sigma_bar_upper(nu, d, gamma)
                            + sigma(nu, alpha, d) * sigma_bar_upper(mu, d, gamma);
                    }
                    let want = if alpha == gamma { -2 * eta(mu, nu) } else { 0 };
                    ok &= acc == GaussRat::from_int(want);
                }
            }
        }
    }
    push("Clifford relation with one raised index", ok);

    // (sigma^mu sigmabar^nu + sigma^nu sigmabar^mu)_{alpha gamma}
    //   = 2 eta^{mu nu} eps_{alpha gamma}  (both indices down).
    ok = true;
    for mu in 0..4 {
        for nu in 0..4 {
            for alpha in 1..=2 {
                for gamma in 1..=2 {
                    let mut acc = GaussRat::zero();
                    for bd in 1..=2 {
                        for dd in 1..=2 {
                            let e = eps_upper(bd, dd);
                            if e != 0 {
                                acc += (sigma(mu, alpha, bd) * sigma(nu, gamma, dd)
                                    + sigma(nu, alpha, bd) * sigma(mu, gamma, dd))
                                    * GaussRat::from_int(e);
                            }
                        }
                    }
                    let want = 2 * eta(mu, nu) * eps_lower(alpha, gamma);
                    ok &= acc == GaussRat::from_int(want);
                }
            }
        }
    }
    push("Clifford relation with both indices lowered", ok);

    // Completeness: sum_mu sigma^mu_{alpha betadot} sigmabar_mu^{deltadot gamma}
    //   = -2 delta_alpha^gamma delta_betadot^deltadot.
    ok = true;
    for alpha in 1..=2 {
        for betadot in 1..=2 {
            for gamma in 1..=2 {
                for deltadot in 1..=2 {
                    let mut acc = GaussRat::zero();
                    for mu in 0..4 {
                        acc += sigma(mu, alpha, betadot) * sigma_bar_lower(mu, deltadot, gamma);
                    }
                    let want = if alpha == gamma && betadot == deltadot {
                        -2
                    } else {
                        0
                    };
                    ok &= acc == GaussRat::from_int(want);
                }
            }
        }
    }
    push("sigma completeness relation", ok);

    // Tr(sigma^{mu nu} sigma^{mu' nu'}) =
    //   -1/2 (eta^{mu mu'} eta^{nu nu'} - eta^{mu nu'} eta^{nu mu'})
    //   - (i/2) eps^{mu nu mu' nu'}.
    ok = true;
    for mu in 0..4 {
        for nu in 0..4 {
            for mup in 0..4 {
                for nup in 0..4 {
                    let mut tr = GaussRat::zero();
                    for alpha in 1..=2 {
                        for gamma in 1..=2 {
                            tr += sigma_munu(mu, nu, alpha, gamma)
                                * sigma_munu(mup, nup, gamma, alpha);
                        }
                    }
                    let sym = GaussRat::ratio(-1, 2)
                        * GaussRat::from_int(
                            eta(mu, mup) * eta(nu, nup) - eta(mu, nup) * eta(nu, mup),
                        );
                    let vol = GaussRat::i()
                        * GaussRat::ratio(-1, 2)
                        * GaussRat::from_int(eps4(mu, nu, mup, nup));
                    ok &= tr == sym + vol;
                }
            }
        }
    }
    push("Lorentz-generator trace identity", ok);

    // Conjugation of sigma entries: conj(sigma^mu_{alpha betadot}) =
    // sigma^mu_{beta alphadot}.
    ok = true;
    for mu in 0..4 {
        for a in 1..=2 {
            for b in 1..=2 {
                ok &= sigma(mu, a, b).conj() == sigma(mu, b, a);
            }
        }
    }
    push("sigma entries conjugate by index swap", ok);

    // Momentum round trip: p_{alpha betadot} = sum sigma^mu p_mu, then
    // p^mu = -1/2 sum sigmabar^{mu betadot alpha} p_{alpha betadot}.
    ok = true;
    {
        let p: Vec<ScalarPoly> = (0..4)
            .map(|mu| ScalarPoly::from_symbol(FieldSymbol::base(&alloc::format!("p{mu}"))))
            .collect();
        for mu in 0..4u8 {
            let mut recovered = ScalarPoly::zero();
            for alpha in 1..=2 {
                for betadot in 1..=2 {
                    let mut entry = ScalarPoly::zero();
                    for nu in 0..4u8 {
                        entry += p[nu as usize].scale(&sigma(nu, alpha, betadot));
                    }
                    recovered += entry
                        .scale(&(sigma_bar_upper(mu, betadot, alpha) * GaussRat::ratio(-1, 2)));
                }
            }
            let mut want = ScalarPoly::zero();
            for nu in 0..4u8 {
                want += p[nu as usize].scale(&GaussRat::from_int(eta(mu, nu)));
            }
            ok &= recovered == want;
        }
    }
    push("momentum bispinor round trip", ok);

    checks
}
