//! Nonlinear sigma models: chiral maps into a complex target, pullback of
//! target functions through the Taylor expansion in the nilpotent parts,
//! the Kaehler abbreviations, the action functional, and elimination of the
//! auxiliary top components.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

use crate::calculus::{action_density_parts, PevMap};
use crate::error::CoreError;
use crate::grassmann::{Level, SuperExpr};
use crate::rational::GaussRat;
use crate::scalar::{FieldSymbol, MapComp, ScalarPoly, TargetKind};
use crate::superops::mk_chiral;

/// A chiral map into an `n`-dimensional complex target, specified by the
/// independent components of its coordinate pullbacks.
#[derive(Clone, Debug)]
pub struct ChiralMap {
    name: String,
    dim: u8,
}

impl ChiralMap {
    pub fn new(name: &str, dim: u8) -> Self {
        assert!(dim >= 1);
        ChiralMap {
            name: String::from(name),
            dim,
        }
    }

    pub fn dim(&self) -> u8 {
        self.dim
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// The component symbol `f^i_(comp)`.
    pub fn comp(&self, coord: u8, comp: MapComp) -> ScalarPoly {
        ScalarPoly::from_symbol(FieldSymbol::map_comp(&self.name, coord, comp))
    }

    /// The coordinate pullback `f^i = f^sharp(z^i)` as a small chiral field.
    pub fn coord_field(&self, coord: u8, level: Level) -> SuperExpr {
        mk_chiral(
            &self.comp(coord, MapComp::Lowest),
            &self.comp(coord, MapComp::Spinor(1)),
            &self.comp(coord, MapComp::Spinor(2)),
            &self.comp(coord, MapComp::Top),
            level,
        )
    }

    /// The nilpotent part `n'^i = f^i - f^i_(0)`.
    pub fn nilpotent(&self, coord: u8, level: Level) -> SuperExpr {
        self.coord_field(coord, level)
            - SuperExpr::scalar(self.comp(coord, MapComp::Lowest), level)
    }

    /// The conjugate nilpotent part `n''^i = (n'^i)^dag`.
    pub fn nilpotent_bar(&self, coord: u8, level: Level) -> SuperExpr {
        self.nilpotent(coord, level).twisted_dagger()
    }
}

/// A function on the target, presented through its derivative coefficients
/// pulled back along the lowest map components. `deriv` returns
/// `(d_z^dz d_zbar^dzbar F)(f_(0), conj f_(0))` as a scalar polynomial.
pub trait TargetFn {
    fn deriv(&self, map: &ChiralMap, dz: &[u8], dzbar: &[u8]) -> ScalarPoly;
}

/// A formal real smooth function of `(z, zbar)` (a Kaehler potential).
#[derive(Clone, Debug)]
pub struct FormalSmooth(pub String);

impl TargetFn for FormalSmooth {
    fn deriv(&self, map: &ChiralMap, dz: &[u8], dzbar: &[u8]) -> ScalarPoly {
        ScalarPoly::from_symbol(FieldSymbol::pull(
            &self.0,
            map.name(),
            map.dim(),
            TargetKind::SmoothReal,
            dz.to_vec(),
            dzbar.to_vec(),
        ))
    }
}

/// A formal holomorphic function (a superpotential symbol).
#[derive(Clone, Debug)]
pub struct FormalHolomorphic(pub String);

impl TargetFn for FormalHolomorphic {
    fn deriv(&self, map: &ChiralMap, dz: &[u8], dzbar: &[u8]) -> ScalarPoly {
        if !dzbar.is_empty() {
            return ScalarPoly::zero();
        }
        ScalarPoly::from_symbol(FieldSymbol::pull(
            &self.0,
            map.name(),
            map.dim(),
            TargetKind::Holomorphic,
            dz.to_vec(),
            Vec::new(),
        ))
    }
}

/// The flat Kaehler potential `h = sum_i z^i zbar^i`.
#[derive(Clone, Copy, Debug)]
pub struct FlatKahler;

impl TargetFn for FlatKahler {
    fn deriv(&self, map: &ChiralMap, dz: &[u8], dzbar: &[u8]) -> ScalarPoly {
        match (dz.len(), dzbar.len()) {
            (0, 0) => {
                let mut acc = ScalarPoly::zero();
                for i in 0..map.dim() {
                    acc += &map.comp(i, MapComp::Lowest) * &map.comp(i, MapComp::Lowest).conj();
                }
                acc
            }
            (1, 0) => map.comp(dz[0], MapComp::Lowest).conj(),
            (0, 1) => map.comp(dzbar[0], MapComp::Lowest),
            (1, 1) if dz[0] == dzbar[0] => ScalarPoly::one(),
            _ => ScalarPoly::zero(),
        }
    }
}

/// A holomorphic polynomial `W = sum c_k prod_i (z^i)^{k_i}` with exact
/// coefficients.
#[derive(Clone, Debug)]
pub struct PolyHolomorphic {
    /// `(coefficient, exponents per coordinate)`.
    pub terms: Vec<(GaussRat, Vec<u32>)>,
}

impl PolyHolomorphic {
    /// The single monomial `z^{coord}`.
    pub fn coordinate(dim: u8, coord: u8) -> Self {
        let mut exps = alloc::vec![0u32; dim as usize];
        exps[coord as usize] = 1;
        PolyHolomorphic {
            terms: alloc::vec![(GaussRat::one(), exps)],
        }
    }
}

impl TargetFn for PolyHolomorphic {
    fn deriv(&self, map: &ChiralMap, dz: &[u8], dzbar: &[u8]) -> ScalarPoly {
        if !dzbar.is_empty() {
            return ScalarPoly::zero();
        }
        let mut out = ScalarPoly::zero();
        'terms: for (c, exps) in &self.terms {
            let mut coeff = c.clone();
            let mut exps = exps.clone();
            for i in dz {
                let e = &mut exps[*i as usize];
                if *e == 0 {
                    continue 'terms;
                }
                coeff *= GaussRat::from_int(*e as i64);
                *e -= 1;
            }
            let mut mono = ScalarPoly::constant(coeff);
            for (i, e) in exps.iter().enumerate() {
                mono = &mono * &map.comp(i as u8, MapComp::Lowest).pow(*e);
            }
            out += mono;
        }
        out
    }
}

/// The pointwise product of two target functions (Leibniz rule on the
/// derivative coefficients).
pub struct ProductFn<'a>(pub &'a dyn TargetFn, pub &'a dyn TargetFn);

impl TargetFn for ProductFn<'_> {
    fn deriv(&self, map: &ChiralMap, dz: &[u8], dzbar: &[u8]) -> ScalarPoly {
        let mut out = ScalarPoly::zero();
        // Sum over subset splittings of the (multiset) index lists.
        for za in subsets(dz) {
            let (z1, z2) = za;
            for zb in subsets(dzbar) {
                let (b1, b2) = zb;
                out += &self.0.deriv(map, &z1, &b1) * &self.1.deriv(map, &z2, &b2);
            }
        }
        out
    }
}

fn subsets(list: &[u8]) -> Vec<(Vec<u8>, Vec<u8>)> {
    let n = list.len();
    let mut out = Vec::new();
    for pick in 0..(1u32 << n) {
        let mut a = Vec::new();
        let mut b = Vec::new();
        for (k, v) in list.iter().enumerate() {
            if pick & (1 << k) != 0 {
                a.push(*v);
            } else {
                b.push(*v);
            }
        }
        out.push((a, b));
    }
    out
}

/// Pull a target function back along the chiral map: the Taylor expansion
/// in the nilpotent parts, exact because triple products of same-chirality
/// nilpotents vanish:
///
/// ```text
/// f#(h) = h + d_i h n'^i + dbar_j h n''^j
///         + 1/2 d_i d_j h n'^i n'^j + d_i dbar_j h n'^i n''^j
///         + 1/2 dbar_i dbar_j h n''^i n''^j
///         + 1/2 d_i d_j dbar_k h n'^i n'^j n''^k
///         + 1/2 d_i dbar_j dbar_k h n'^i n''^j n''^k
///         + 1/4 d_i d_j dbar_k dbar_l h n'^i n'^j n''^k n''^l
/// ```
pub fn pullback(map: &ChiralMap, h: &dyn TargetFn, level: Level) -> SuperExpr {
    let n = map.dim();
    let np: Vec<SuperExpr> = (0..n).map(|i| map.nilpotent(i, level)).collect();
    let nb: Vec<SuperExpr> = (0..n).map(|i| map.nilpotent_bar(i, level)).collect();
    let mut out = SuperExpr::scalar(h.deriv(map, &[], &[]), level);
    let half = GaussRat::ratio(1, 2);
    let quarter = GaussRat::ratio(1, 4);
    for i in 0..n {
        out += np[i as usize].scale_poly(&h.deriv(map, &[i], &[]));
        out += nb[i as usize].scale_poly(&h.deriv(map, &[], &[i]));
    }
    for i in 0..n {
        for j in 0..n {
            let npp = &np[i as usize] * &np[j as usize];
            out += npp.scale_poly(&h.deriv(map, &[i, j], &[])).scale(&half);
            let nmix = &np[i as usize] * &nb[j as usize];
            out += nmix.scale_poly(&h.deriv(map, &[i], &[j]));
            let nbb = &nb[i as usize] * &nb[j as usize];
            out += nbb.scale_poly(&h.deriv(map, &[], &[i, j])).scale(&half);
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let t1 = &(&np[i as usize] * &np[j as usize]) * &nb[k as usize];
                out += t1.scale_poly(&h.deriv(map, &[i, j], &[k])).scale(&half);
                let t2 = &(&np[i as usize] * &nb[j as usize]) * &nb[k as usize];
                out += t2.scale_poly(&h.deriv(map, &[i], &[j, k])).scale(&half);
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let t = &(&(&np[i as usize] * &np[j as usize]) * &nb[k as usize])
                        * &nb[l as usize];
                    out += t
                        .scale_poly(&h.deriv(map, &[i, j], &[k, l]))
                        .scale(&quarter);
                }
            }
        }
    }
    out
}

/// The Kaehler abbreviations over a formal potential: metric, formal
/// inverse, Christoffel symbols, curvature.
#[derive(Clone, Debug)]
pub struct KahlerContext {
    pub map: ChiralMap,
    pub potential: String,
}

impl KahlerContext {
    pub fn new(map: ChiralMap, potential: &str) -> Self {
        KahlerContext {
            map,
            potential: String::from(potential),
        }
    }

    pub fn potential_fn(&self) -> FormalSmooth {
        FormalSmooth(self.potential.clone())
    }

    fn hsym(&self, dz: Vec<u8>, dzbar: Vec<u8>) -> ScalarPoly {
        ScalarPoly::from_symbol(FieldSymbol::pull(
            &self.potential,
            self.map.name(),
            self.map.dim(),
            TargetKind::SmoothReal,
            dz,
            dzbar,
        ))
    }

    /// `g_{i jbar} = d_i dbar_j h`, pulled back.
    pub fn metric(&self, i: u8, jbar: u8) -> ScalarPoly {
        self.hsym(alloc::vec![i], alloc::vec![jbar])
    }

    /// The formal inverse-metric entry `g^{i jbar}`.
    pub fn metric_inv(&self, i: u8, jbar: u8) -> ScalarPoly {
        ScalarPoly::from_symbol(FieldSymbol::inverse_metric(
            &self.potential,
            self.map.name(),
            self.map.dim(),
            i,
            jbar,
        ))
    }

    /// `Gamma^s_{ji} = sum_kbar g^{s kbar} d_i g_{j kbar}`.
    pub fn christoffel(&self, s: u8, j: u8, i: u8) -> ScalarPoly {
        let mut out = ScalarPoly::zero();
        for kbar in 0..self.map.dim() {
            out += &self.metric_inv(s, kbar) * &self.hsym(alloc::vec![i, j], alloc::vec![kbar]);
        }
        out
    }

    /// `Gammabar^sbar_{jbar ibar}`, the conjugate Christoffel symbol.
    pub fn christoffel_bar(&self, sbar: u8, jbar: u8, ibar: u8) -> ScalarPoly {
        self.christoffel(sbar, jbar, ibar).conj()
    }

    /// `R_{i kbar j lbar} = d_i d_j dbar_k dbar_l h
    ///    - sum_{s,t} g^{t sbar} (d_i d_j dbar_s h)(d_t dbar_k dbar_l h)`.
    pub fn curvature(&self, i: u8, kbar: u8, j: u8, lbar: u8) -> ScalarPoly {
        let mut out = self.hsym(alloc::vec![i, j], alloc::vec![kbar, lbar]);
        for s in 0..self.map.dim() {
            for t in 0..self.map.dim() {
                out = out
                    - &(&self.metric_inv(t, s) * &self.hsym(alloc::vec![i, j], alloc::vec![s]))
                        * &self.hsym(alloc::vec![t], alloc::vec![kbar, lbar]);
            }
        }
        out
    }
}

/// The three Berezin kernels of the sigma-model action
/// `-1/4 int d4theta f#(h) + [int d2theta f#(W) - int d2thetabar f#(W)^dag]`.
pub struct SigmaKernels {
    pub d_term: SuperExpr,
    pub f_term: SuperExpr,
    pub fbar_term: SuperExpr,
}

pub fn sigma_kernels(
    map: &ChiralMap,
    h: &dyn TargetFn,
    w: &dyn TargetFn,
    level: Level,
) -> SigmaKernels {
    let d_term = pullback(map, h, level).scale(&GaussRat::ratio(-1, 4));
    let f_term = pullback(map, w, level);
    let fbar_term = f_term.twisted_dagger();
    SigmaKernels {
        d_term,
        f_term,
        fbar_term,
    }
}

/// The purge-evaluated spacetime density of the sigma model, up to boundary
/// terms.
pub fn sigma_action_density(
    map: &ChiralMap,
    h: &dyn TargetFn,
    w: &dyn TargetFn,
    pev_map: &PevMap,
    level: Level,
) -> ScalarPoly {
    let k = sigma_kernels(map, h, w, level);
    action_density_parts(&k.d_term, &k.f_term, &k.fbar_term, pev_map)
}

/// Result of the auxiliary elimination on a sigma-model density.
pub struct SigmaAuxSolution {
    pub on_shell: ScalarPoly,
    /// Solved `f^i_(12)` per coordinate.
    pub values: Vec<ScalarPoly>,
    /// Solved `conj f^i_(12)` per coordinate.
    pub conj_values: Vec<ScalarPoly>,
}

/// Eliminate the nondynamical top components from a density of the shape
/// `1/4 sum g_{i jbar} f^i_(12) conj f^j_(12) + linear + rest` using the
/// formal inverse metric, then apply the contraction rewrite.
pub fn sigma_eliminate_f(
    density: &ScalarPoly,
    ctx: &KahlerContext,
) -> Result<SigmaAuxSolution, CoreError> {
    let n = ctx.map.dim();
    let top = |i: u8| FieldSymbol::map_comp(ctx.map.name(), i, MapComp::Top);
    // Check the bilinear block is exactly 1/4 g_{i jbar}.
    for i in 0..n {
        for j in 0..n {
            let a = density.d_dsym(&top(i)).d_dsym(&top(j).conj());
            let want = ctx.metric(i, j).scale(&GaussRat::ratio(1, 4));
            if a != want {
                return Err(CoreError::Elimination(String::from(
                    "quadratic auxiliary block is not a quarter of the metric",
                )));
            }
        }
    }
    let zero_tops = |p: &ScalarPoly| -> ScalarPoly {
        let mut out = p.clone();
        for i in 0..n {
            out = out.subst(&top(i), &ScalarPoly::zero());
            out = out.subst(&top(i).conj(), &ScalarPoly::zero());
        }
        out
    };
    // B_jbar = dD/d(conj f^j_(12)) at tops = 0; Bbar_i likewise.
    let b: Vec<ScalarPoly> = (0..n)
        .map(|j| zero_tops(&density.d_dsym(&top(j).conj())))
        .collect();
    let bbar: Vec<ScalarPoly> = (0..n)
        .map(|i| zero_tops(&density.d_dsym(&top(i))))
        .collect();
    // f^i = -4 sum_j g^{i jbar} B_jbar ; conj f^j = -4 sum_i g^{i jbar} Bbar_i.
    let minus4 = GaussRat::from_int(-4);
    let values: Vec<ScalarPoly> = (0..n)
        .map(|i| {
            let mut acc = ScalarPoly::zero();
            for j in 0..n {
                acc += &ctx.metric_inv(i, j) * &b[j as usize];
            }
            acc.scale(&minus4).contract_inverse_metric()
        })
        .collect();
    let conj_values: Vec<ScalarPoly> = (0..n)
        .map(|j| {
            let mut acc = ScalarPoly::zero();
            for i in 0..n {
                acc += &ctx.metric_inv(i, j) * &bbar[i as usize];
            }
            acc.scale(&minus4).contract_inverse_metric()
        })
        .collect();
    let mut on_shell = density.clone();
    for i in 0..n {
        on_shell = on_shell.subst(&top(i), &values[i as usize]);
        on_shell = on_shell.subst(&top(i).conj(), &conj_values[i as usize]);
    }
    Ok(SigmaAuxSolution {
        on_shell: on_shell.contract_inverse_metric(),
        values,
        conj_values,
    })
}

/// Convenience: box a target function.
pub fn boxed(f: impl TargetFn + 'static) -> Box<dyn TargetFn> {
    Box::new(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::gens::*;
    use crate::superops::{is_antichiral, is_chiral};

    const L: Level = Level::Standard;

    fn map1() -> ChiralMap {
        ChiralMap::new("f", 1)
    }

    fn map2() -> ChiralMap {
        ChiralMap::new("f", 2)
    }

    #[test]
    fn coordinate_pullback_is_the_chiral_field() {
        let m = map2();
        for i in 0..2u8 {
            let w = PolyHolomorphic::coordinate(2, i);
            assert_eq!(pullback(&m, &w, L), m.coord_field(i, L));
        }
    }

    #[test]
    fn nilpotent_triple_products_vanish() {
        let m = map2();
        for i in 0..2u8 {
            for j in 0..2u8 {
                for k in 0..2u8 {
                    let t = &(&m.nilpotent(i, L) * &m.nilpotent(j, L)) * &m.nilpotent(k, L);
                    assert!(t.is_zero());
                    let tb =
                        &(&m.nilpotent_bar(i, L) * &m.nilpotent_bar(j, L)) * &m.nilpotent_bar(k, L);
                    assert!(tb.is_zero());
                }
            }
        }
    }

    #[test]
    fn holomorphic_pullback_is_chiral_with_expected_top_block() {
        let m = map2();
        let w = FormalHolomorphic(String::from("W"));
        let p = pullback(&m, &w, L);
        assert!(is_chiral(&p));
        assert!(is_antichiral(&p.twisted_dagger()));
        // theta^1 theta^2 vth_1 vth_2 block:
        //   sum_i (d_i W) f^i_(12) - sum_{ij} (d_i d_j W) f^i_(1) f^j_(2).
        let mask = (1u16 << theta(1)) | (1 << theta(2)) | (1 << vth(1)) | (1 << vth(2));
        let mut want = ScalarPoly::zero();
        for i in 0..2u8 {
            want += &w.deriv(&m, &[i], &[]) * &m.comp(i, MapComp::Top);
        }
        for i in 0..2u8 {
            for j in 0..2u8 {
                want = want
                    - &(&w.deriv(&m, &[i, j], &[]) * &m.comp(i, MapComp::Spinor(1)))
                        * &m.comp(j, MapComp::Spinor(2));
            }
        }
        assert_eq!(p.coefficient(mask), want);
    }

    #[test]
    fn smooth_pullback_is_dagger_invariant() {
        let m = map2();
        let h = FormalSmooth(String::from("h"));
        let p = pullback(&m, &h, L);
        assert_eq!(p.twisted_dagger(), p);
    }

    #[test]
    fn pullback_is_ring_homomorphism_on_products() {
        let m = map1();
        let h1 = FormalSmooth(String::from("h1"));
        let h2 = FormalSmooth(String::from("h2"));
        let prod = ProductFn(&h1, &h2);
        let lhs = pullback(&m, &prod, L);
        let rhs = &pullback(&m, &h1, L) * &pullback(&m, &h2, L);
        assert_eq!(lhs, rhs);
        // Mixed kinds as well.
        let w = FormalHolomorphic(String::from("W"));
        let prod = ProductFn(&h1, &w);
        let lhs = pullback(&m, &prod, L);
        let rhs = &pullback(&m, &h1, L) * &pullback(&m, &w, L);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn flat_target_matches_explicit_coordinate_product() {
        // h = sum z^i zbar^i pulled back equals sum f^i (f^i)^dag.
        let m = map2();
        let lhs = pullback(&m, &FlatKahler, L);
        let mut rhs = SuperExpr::zero(L);
        for i in 0..2u8 {
            let f = m.coord_field(i, L);
            rhs += &f * &f.twisted_dagger();
        }
        assert_eq!(lhs, rhs);
        // Spacetime derivative agrees between both routes as well.
        assert_eq!(lhs.partial(1), rhs.partial(1));
    }

    #[test]
    fn polynomial_superpotential_pullback_matches_power() {
        // W = z^2 on a 1-dimensional target: f#(W) = (f)^2.
        let m = map1();
        let w = PolyHolomorphic {
            terms: alloc::vec![(GaussRat::one(), alloc::vec![2])],
        };
        let f = m.coord_field(0, L);
        assert_eq!(pullback(&m, &w, L), &f * &f);
    }

    #[test]
    fn basic_identity_metric_symmetry() {
        let ctx = KahlerContext::new(map2(), "h");
        for i in 0..2u8 {
            for j in 0..2u8 {
                assert_eq!(ctx.metric(i, j).conj(), ctx.metric(j, i));
            }
        }
    }

    #[test]
    fn basic_identity_christoffel_contraction() {
        // sum_s g_{s kbar} Gamma^s_{ji} = d_i g_{j kbar}.
        for ctx in [KahlerContext::new(map1(), "h"), KahlerContext::new(map2(), "h")] {
            let n = ctx.map.dim();
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let mut lhs = ScalarPoly::zero();
                        for s in 0..n {
                            lhs += &ctx.metric(s, k) * &ctx.christoffel(s, j, i);
                        }
                        let want = ctx.hsym(alloc::vec![i, j], alloc::vec![k]);
                        assert_eq!(lhs.contract_inverse_metric(), want);
                    }
                }
            }
        }
    }

    #[test]
    fn basic_identity_curvature_via_christoffel() {
        // R_{i kbar j lbar} = d_j dbar_l g_{i kbar}
        //   - sum_{s,t} g_{s tbar} Gamma^s_{ij} conj(Gamma^t_{kl}).
        for ctx in [KahlerContext::new(map1(), "h"), KahlerContext::new(map2(), "h")] {
            let n = ctx.map.dim();
            for i in 0..n {
                for k in 0..n {
                    for j in 0..n {
                        for l in 0..n {
                            let mut rhs = ctx.hsym(alloc::vec![i, j], alloc::vec![k, l]);
                            for s in 0..n {
                                for t in 0..n {
                                    rhs = rhs
                                        - &(&ctx.hsym(alloc::vec![s], alloc::vec![t])
                                            * &ctx.christoffel(s, i, j))
                                            * &ctx.christoffel_bar(t, k, l);
                                }
                            }
                            let lhs = ctx.curvature(i, k, j, l);
                            assert_eq!(
                                lhs.contract_inverse_metric(),
                                rhs.contract_inverse_metric()
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn elimination_solves_paper_form() {
        let ctx = KahlerContext::new(map1(), "h");
        let w = FormalHolomorphic(String::from("W"));
        let density =
            sigma_action_density(&ctx.map, &ctx.potential_fn(), &w, &PevMap::standard(), L);
        let sol = sigma_eliminate_f(&density, &ctx).unwrap();
        // f^1_(12) = -4 g^{1 1bar} (dbar W bar) + Gamma^1_{11} f_1 f_2.
        let wbar_d = w.deriv(&ctx.map, &[0], &[]).conj();
        let want = (&ctx.metric_inv(0, 0) * &wbar_d).scale(&GaussRat::from_int(-4))
            + &ctx.christoffel(0, 0, 0)
                * &(&ctx.map.comp(0, MapComp::Spinor(1)) * &ctx.map.comp(0, MapComp::Spinor(2)));
        assert_eq!(sol.values[0], want.contract_inverse_metric());
    }
}
