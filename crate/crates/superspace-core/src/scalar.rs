//! The free commutative differential ring of formal complex-valued smooth
//! functions on spacetime.
//!
//! A [`FieldSymbol`] is a formal derived field: a named function together
//! with a multiset of spacetime derivative indices and a conjugation flag.
//! Composite symbols for pulled-back target-space derivatives (used by the
//! sigma-model pipeline) and formal inverse-metric entries live in the same
//! type so that the spacetime derivative and the variational derivative can
//! apply the chain rule uniformly.
//!
//! A [`ScalarPoly`] is a normalized polynomial over Gaussian rationals in
//! these symbols. All operations keep the canonical sorted-merged form, so
//! equality of values is equality of representations.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use crate::rational::GaussRat;

/// Spacetime index, `0..=3`.
pub type Mu = u8;

/// Component slot of a chiral-map coordinate (lowest, spinor pair, top).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum MapComp {
    /// The lowest component `f^i_(0)`.
    Lowest,
    /// A spinor component `f^i_(alpha)`, `alpha` in `{1, 2}`.
    Spinor(u8),
    /// The top component `f^i_(12)`.
    Top,
}

/// How a pulled-back target function behaves under conjugation and the
/// holomorphic/antiholomorphic derivative split.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum TargetKind {
    /// A real-valued smooth function of `(z, zbar)`; conjugation swaps the
    /// two derivative multi-indices.
    SmoothReal,
    /// A holomorphic function; antiholomorphic derivatives annihilate it
    /// (and holomorphic ones annihilate its conjugate).
    Holomorphic,
}

/// The structured name of a symbol family.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum SymName {
    /// A free named function on spacetime.
    Base(Arc<str>),
    /// The spacetime coordinate function `x^mu` (its derivative is the
    /// Kronecker delta).
    Coord(Mu),
    /// A component of a chiral map into an `n`-dimensional complex target.
    MapComp {
        map: Arc<str>,
        coord: u8,
        comp: MapComp,
    },
    /// `(d_z^dz d_zbar^dzbar F)(f_(0), conj f_(0))`: a target-space
    /// derivative of `F` pulled back through the map's lowest components.
    /// The multi-indices are sorted lists of target-coordinate indices.
    Pull {
        func: Arc<str>,
        map: Arc<str>,
        dim: u8,
        kind: TargetKind,
        dz: Vec<u8>,
        dzbar: Vec<u8>,
    },
    /// Formal inverse-metric entry `g^{up, upbar-bar}` for the Kaehler
    /// metric of `func` (only meaningful together with the contraction
    /// rewrite, see [`ScalarPoly::contract_inverse_metric`]).
    InverseMetric {
        func: Arc<str>,
        map: Arc<str>,
        dim: u8,
        up: u8,
        upbar: u8,
    },
}

/// A formal derived field symbol.
///
/// Two symbols that differ only in the order of their derivative indices are
/// identical: the index multiset is kept sorted. `conj(conj(s)) = s`, and the
/// stored form is canonical (real symbols never carry the flag; conjugated
/// pullback symbols are rewritten per their target kind).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FieldSymbol {
    name: SymName,
    conjugated: bool,
    deriv: Vec<Mu>,
    real: bool,
    constant: bool,
}

fn sorted(mut v: Vec<u8>) -> Vec<u8> {
    v.sort_unstable();
    v
}

impl FieldSymbol {
    /// A complex-valued function symbol on spacetime.
    pub fn base(name: &str) -> Self {
        FieldSymbol {
            name: SymName::Base(Arc::from(name)),
            conjugated: false,
            deriv: Vec::new(),
            real: false,
            constant: false,
        }
    }

    /// A real-valued function symbol (`conj` is the identity on it).
    pub fn real_base(name: &str) -> Self {
        FieldSymbol {
            real: true,
            ..FieldSymbol::base(name)
        }
    }

    /// The coordinate function `x^mu`.
    pub fn coord(mu: Mu) -> Self {
        debug_assert!(mu < 4);
        FieldSymbol {
            name: SymName::Coord(mu),
            conjugated: false,
            deriv: Vec::new(),
            real: true,
            constant: false,
        }
    }

    /// A complex coupling constant: `conj` flips it, spacetime derivatives
    /// annihilate it.
    pub fn coupling(name: &str) -> Self {
        FieldSymbol {
            constant: true,
            ..FieldSymbol::base(name)
        }
    }

    /// A real coupling constant.
    pub fn real_coupling(name: &str) -> Self {
        FieldSymbol {
            real: true,
            constant: true,
            ..FieldSymbol::base(name)
        }
    }

    /// A component of a chiral map into a `dim`-dimensional target.
    pub fn map_comp(map: &str, coord: u8, comp: MapComp) -> Self {
        FieldSymbol {
            name: SymName::MapComp {
                map: Arc::from(map),
                coord,
                comp,
            },
            conjugated: false,
            deriv: Vec::new(),
            real: false,
            constant: false,
        }
    }

    /// A pulled-back target-space derivative symbol.
    pub fn pull(
        func: &str,
        map: &str,
        dim: u8,
        kind: TargetKind,
        dz: Vec<u8>,
        dzbar: Vec<u8>,
    ) -> Self {
        let sym = FieldSymbol {
            name: SymName::Pull {
                func: Arc::from(func),
                map: Arc::from(map),
                dim,
                kind,
                dz: sorted(dz),
                dzbar: sorted(dzbar),
            },
            conjugated: false,
            deriv: Vec::new(),
            real: false,
            constant: false,
        };
        sym
    }

    /// A formal inverse-metric entry for the Kaehler potential `func`.
    pub fn inverse_metric(func: &str, map: &str, dim: u8, up: u8, upbar: u8) -> Self {
        FieldSymbol {
            name: SymName::InverseMetric {
                func: Arc::from(func),
                map: Arc::from(map),
                dim,
                up,
                upbar,
            },
            conjugated: false,
            deriv: Vec::new(),
            real: false,
            constant: false,
        }
    }

    pub fn name(&self) -> &SymName {
        &self.name
    }

    pub fn deriv(&self) -> &[Mu] {
        &self.deriv
    }

    pub fn is_conjugated(&self) -> bool {
        self.conjugated
    }

    pub fn is_constant(&self) -> bool {
        self.constant
    }

    pub fn is_real(&self) -> bool {
        self.real
    }

    /// The symbol with one more spacetime derivative (pure base symbols
    /// only; composite symbols go through [`ScalarPoly::partial`]).
    pub fn with_deriv(&self, mu: Mu) -> Self {
        debug_assert!(mu < 4);
        let mut s = self.clone();
        s.deriv.push(mu);
        s.deriv.sort_unstable();
        s
    }

    /// The family tag of this symbol: the symbol stripped of derivatives.
    pub fn family(&self) -> Self {
        let mut s = self.clone();
        s.deriv.clear();
        s
    }

    /// Complex conjugation, in canonical form.
    pub fn conj(&self) -> Self {
        let mut s = self.clone();
        match &mut s.name {
            SymName::Pull {
                kind, dz, dzbar, ..
            } => {
                // (d^a dbar^b F)-bar = d^b dbar^a F-bar; real targets drop
                // the bar, so only the swap remains.
                core::mem::swap(dz, dzbar);
                match kind {
                    TargetKind::SmoothReal => {}
                    TargetKind::Holomorphic => s.conjugated = !s.conjugated,
                }
            }
            SymName::InverseMetric { up, upbar, .. } => {
                // Hermitian metric: conj(g^{i jbar}) = g^{j ibar}.
                core::mem::swap(up, upbar);
            }
            _ => {
                if !s.real {
                    s.conjugated = !s.conjugated;
                }
            }
        }
        s
    }
}

impl fmt::Display for FieldSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for mu in &self.deriv {
            write!(f, "d{mu} ")?;
        }
        let bar = |s: &str| -> String {
            if self.conjugated {
                alloc::format!("{s}*")
            } else {
                String::from(s)
            }
        };
        match &self.name {
            SymName::Base(n) => write!(f, "{}", bar(n)),
            SymName::Coord(mu) => write!(f, "x{mu}"),
            SymName::MapComp { map, coord, comp } => {
                let tag = match comp {
                    MapComp::Lowest => String::from("(0)"),
                    MapComp::Spinor(a) => alloc::format!("({a})"),
                    MapComp::Top => String::from("(12)"),
                };
                write!(f, "{}", bar(&alloc::format!("{map}^{}_{tag}", coord + 1)))
            }
            SymName::Pull {
                func, dz, dzbar, ..
            } => {
                let mut body = String::new();
                for i in dz {
                    body.push_str(&alloc::format!("z{}", i + 1));
                }
                if !dzbar.is_empty() {
                    body.push('|');
                    for j in dzbar {
                        body.push_str(&alloc::format!("z{}", j + 1));
                    }
                }
                write!(f, "{}", bar(&alloc::format!("{func}[{body}]")))
            }
            SymName::InverseMetric { func, up, upbar, .. } => {
                write!(
                    f,
                    "{}",
                    bar(&alloc::format!("{func}^[{},{}]", up + 1, upbar + 1))
                )
            }
        }
    }
}

/// A sorted multiset of symbols: one monomial of the free commutative ring.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct SymMonomial(Vec<FieldSymbol>);

impl SymMonomial {
    pub fn unit() -> Self {
        SymMonomial(Vec::new())
    }

    pub fn from_symbol(s: FieldSymbol) -> Self {
        SymMonomial(alloc::vec![s])
    }

    pub fn symbols(&self) -> &[FieldSymbol] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    fn mul(&self, other: &SymMonomial) -> SymMonomial {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        v.sort();
        SymMonomial(v)
    }

    fn conj(&self) -> SymMonomial {
        let mut v: Vec<FieldSymbol> = self.0.iter().map(FieldSymbol::conj).collect();
        v.sort();
        SymMonomial(v)
    }

    /// Remove one occurrence of `s`; `None` if absent.
    fn without_one(&self, s: &FieldSymbol) -> Option<SymMonomial> {
        let pos = self.0.iter().position(|t| t == s)?;
        let mut v = self.0.clone();
        v.remove(pos);
        Some(SymMonomial(v))
    }
}

/// A normalized polynomial over `Q(i)` in [`FieldSymbol`]s.
///
/// Values are immutable after construction; every operation returns a fresh
/// normalized polynomial (merged like terms, no zero coefficients).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct ScalarPoly {
    terms: BTreeMap<SymMonomial, GaussRat>,
}

impl ScalarPoly {
    pub fn zero() -> Self {
        ScalarPoly::default()
    }

    pub fn one() -> Self {
        ScalarPoly::constant(GaussRat::one())
    }

    pub fn i() -> Self {
        ScalarPoly::constant(GaussRat::i())
    }

    pub fn constant(c: GaussRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(SymMonomial::unit(), c);
        }
        ScalarPoly { terms }
    }

    pub fn int(n: i64) -> Self {
        ScalarPoly::constant(GaussRat::from_int(n))
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        ScalarPoly::constant(GaussRat::ratio(p, q))
    }

    pub fn from_symbol(s: FieldSymbol) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(SymMonomial::from_symbol(s), GaussRat::one());
        ScalarPoly { terms }
    }

    pub fn sym(name: &str) -> Self {
        ScalarPoly::from_symbol(FieldSymbol::base(name))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SymMonomial, &GaussRat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient of the empty monomial.
    pub fn constant_part(&self) -> GaussRat {
        self.terms
            .get(&SymMonomial::unit())
            .cloned()
            .unwrap_or_else(GaussRat::zero)
    }

    /// `true` if the polynomial is a plain constant.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(SymMonomial::is_unit)
    }

    fn add_term(&mut self, m: SymMonomial, c: GaussRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &GaussRat) -> ScalarPoly {
        if c.is_zero() {
            return ScalarPoly::zero();
        }
        let mut out = ScalarPoly::zero();
        for (m, k) in &self.terms {
            out.add_term(m.clone(), k * c);
        }
        out
    }

    pub fn pow(&self, n: u32) -> ScalarPoly {
        let mut out = ScalarPoly::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Coefficient-wise and symbol-wise complex conjugation; an involutive
    /// ring homomorphism.
    pub fn conj(&self) -> ScalarPoly {
        let mut out = ScalarPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.conj(), c.conj());
        }
        out
    }

    /// The formal spacetime derivative, with the Leibniz rule on products
    /// and the target-space chain rule on pulled-back symbols.
    pub fn partial(&self, mu: Mu) -> ScalarPoly {
        assert!(mu < 4, "spacetime index out of range");
        let mut out = ScalarPoly::zero();
        for (m, c) in &self.terms {
            for (pos, s) in m.symbols().iter().enumerate() {
                let rest = {
                    let mut v = m.symbols().to_vec();
                    v.remove(pos);
                    SymMonomial(v)
                };
                let ds = symbol_partial(s, mu);
                if ds.is_zero() {
                    continue;
                }
                for (dm, dc) in &ds.terms {
                    out.add_term(rest.mul(dm), dc * c);
                }
            }
        }
        out
    }

    /// Formal partial derivative with respect to one exact symbol (counting
    /// multiplicity), extended through the dependence of pulled-back and
    /// inverse-metric symbols on the underived map components.
    pub fn d_dsym(&self, target: &FieldSymbol) -> ScalarPoly {
        let mut out = ScalarPoly::zero();
        for (m, c) in &self.terms {
            // Direct occurrences, with multiplicity.
            let mult = m.symbols().iter().filter(|s| *s == target).count();
            if mult > 0 {
                let rest = m.without_one(target).expect("occurrence counted above");
                out.add_term(rest, c * &GaussRat::from_int(mult as i64));
            }
            // Chain rule through composite symbols (they depend only on the
            // underived lowest map components).
            if !target.deriv.is_empty() {
                continue;
            }
            for (pos, s) in m.symbols().iter().enumerate() {
                let dep = symbol_dependence(s, target);
                if dep.is_zero() {
                    continue;
                }
                let mut v = m.symbols().to_vec();
                v.remove(pos);
                let rest = SymMonomial(v);
                for (dm, dc) in &dep.terms {
                    out.add_term(rest.mul(dm), dc * c);
                }
            }
        }
        out
    }

    /// Substitute `sym -> value` (the symbol may occur at any power).
    pub fn subst(&self, sym: &FieldSymbol, value: &ScalarPoly) -> ScalarPoly {
        let mut out = ScalarPoly::zero();
        for (m, c) in &self.terms {
            let mut power = 0u32;
            let mut rest = Vec::new();
            for s in m.symbols() {
                if s == sym {
                    power += 1;
                } else {
                    rest.push(s.clone());
                }
            }
            let base = ScalarPoly {
                terms: {
                    let mut t = BTreeMap::new();
                    t.insert(SymMonomial(rest), c.clone());
                    t
                },
            };
            out += &base * &value.pow(power);
        }
        out
    }

    /// The Euler (variational-derivative) operator for the field family of
    /// `phi` (its derivative indices are ignored): the polynomial
    /// `sum_k (-1)^|k| d^k (dL / d(d^k phi))` over every derivative multiset
    /// `k` through which `L` depends on the family.
    ///
    /// It annihilates every total divergence, so `euler(phi, a - b) == 0`
    /// for all families is the "equal up to boundary terms" test.
    pub fn euler(&self, phi: &FieldSymbol) -> ScalarPoly {
        let family = phi.family();
        // Collect the derivative multisets through which L sees the family.
        let mut multisets: alloc::collections::BTreeSet<Vec<Mu>> = alloc::collections::BTreeSet::new();
        for (m, _) in &self.terms {
            for s in m.symbols() {
                if s.family() == family {
                    multisets.insert(s.deriv.clone());
                } else if s.deriv.is_empty() && !symbol_dependence(s, &family).is_zero() {
                    multisets.insert(Vec::new());
                }
            }
        }
        let mut out = ScalarPoly::zero();
        for k in multisets {
            let mut derived = family.clone();
            derived.deriv = k.clone();
            let mut piece = self.d_dsym(&derived);
            for mu in &k {
                piece = piece.partial(*mu);
            }
            if k.len() % 2 == 1 {
                piece = -piece;
            }
            out += piece;
        }
        out
    }

    /// Every distinct symbol family `(name, conjugated)` of non-constant
    /// dynamical symbols occurring in the polynomial (composite symbols
    /// contribute the lowest map components they depend on).
    pub fn field_families(&self) -> alloc::vec::Vec<FieldSymbol> {
        let mut set: alloc::collections::BTreeSet<FieldSymbol> = alloc::collections::BTreeSet::new();
        for (m, _) in &self.terms {
            for s in m.symbols() {
                if s.constant {
                    continue;
                }
                match &s.name {
                    SymName::Pull { map, dim, .. } | SymName::InverseMetric { map, dim, .. } => {
                        for i in 0..*dim {
                            let c = FieldSymbol::map_comp(map, i, MapComp::Lowest);
                            set.insert(c.conj());
                            set.insert(c);
                        }
                    }
                    _ => {
                        set.insert(s.family());
                    }
                }
            }
        }
        set.into_iter().collect()
    }

    /// Apply the inverse-metric contraction rewrite until a fixed point:
    /// whenever the full sums `sum_j g^{i jbar} g_{k jbar}` (or
    /// `sum_i g^{i jbar} g_{i lbar}`) occur with a common cofactor, they are
    /// replaced by the Kronecker delta. `g_{i jbar}` here is the underived
    /// pulled-back Hessian of the named potential.
    pub fn contract_inverse_metric(&self) -> ScalarPoly {
        let mut cur = self.clone();
        loop {
            match contract_once(&cur) {
                Some(next) => cur = next,
                None => return cur,
            }
        }
    }
}

/// Spacetime derivative of a single symbol, as a polynomial.
fn symbol_partial(s: &FieldSymbol, mu: Mu) -> ScalarPoly {
    if s.constant {
        return ScalarPoly::zero();
    }
    match &s.name {
        SymName::Coord(nu) => {
            debug_assert!(s.deriv.is_empty());
            if *nu == mu {
                ScalarPoly::one()
            } else {
                ScalarPoly::zero()
            }
        }
        SymName::Base(_) | SymName::MapComp { .. } => ScalarPoly::from_symbol(s.with_deriv(mu)),
        SymName::Pull {
            map, dim, kind, ..
        } => {
            debug_assert!(s.deriv.is_empty(), "pull symbols carry no x-derivatives");
            let mut out = ScalarPoly::zero();
            let (z_side, zbar_side) = match (kind, s.conjugated) {
                (TargetKind::SmoothReal, _) => (true, true),
                (TargetKind::Holomorphic, false) => (true, false),
                (TargetKind::Holomorphic, true) => (false, true),
            };
            for i in 0..*dim {
                if z_side {
                    let bumped = bump_pull(s, i, false);
                    let comp = FieldSymbol::map_comp(map, i, MapComp::Lowest).with_deriv(mu);
                    out += &ScalarPoly::from_symbol(bumped) * &ScalarPoly::from_symbol(comp);
                }
                if zbar_side {
                    let bumped = bump_pull(s, i, true);
                    let comp = FieldSymbol::map_comp(map, i, MapComp::Lowest)
                        .conj()
                        .with_deriv(mu);
                    out += &ScalarPoly::from_symbol(bumped) * &ScalarPoly::from_symbol(comp);
                }
            }
            out
        }
        SymName::InverseMetric {
            func,
            map,
            dim,
            up,
            upbar,
        } => {
            // d(g^{i jbar}) = - sum_{s,t} g^{i tbar} g^{s jbar} d(g_{s tbar}).
            let mut out = ScalarPoly::zero();
            for sv in 0..*dim {
                for tv in 0..*dim {
                    let left = FieldSymbol::inverse_metric(func, map, *dim, *up, tv);
                    let right = FieldSymbol::inverse_metric(func, map, *dim, sv, *upbar);
                    let hess = FieldSymbol::pull(
                        func,
                        map,
                        *dim,
                        TargetKind::SmoothReal,
                        alloc::vec![sv],
                        alloc::vec![tv],
                    );
                    let dg = symbol_partial(&hess, mu);
                    out += &(&ScalarPoly::from_symbol(left) * &ScalarPoly::from_symbol(right))
                        .scale(&GaussRat::from_int(-1))
                        * &dg;
                }
            }
            out
        }
    }
}

/// Derivative of a composite symbol with respect to an underived lowest map
/// component (zero for anything else).
fn symbol_dependence(s: &FieldSymbol, target: &FieldSymbol) -> ScalarPoly {
    if !target.deriv.is_empty() {
        return ScalarPoly::zero();
    }
    let (t_map, t_coord) = match &target.name {
        SymName::MapComp {
            map,
            coord,
            comp: MapComp::Lowest,
        } => (map, *coord),
        _ => return ScalarPoly::zero(),
    };
    match &s.name {
        SymName::Pull { map, kind, .. } => {
            if map != t_map {
                return ScalarPoly::zero();
            }
            let (z_side, zbar_side) = match (kind, s.conjugated) {
                (TargetKind::SmoothReal, _) => (true, true),
                (TargetKind::Holomorphic, false) => (true, false),
                (TargetKind::Holomorphic, true) => (false, true),
            };
            if !target.conjugated && z_side {
                ScalarPoly::from_symbol(bump_pull(s, t_coord, false))
            } else if target.conjugated && zbar_side {
                ScalarPoly::from_symbol(bump_pull(s, t_coord, true))
            } else {
                ScalarPoly::zero()
            }
        }
        SymName::InverseMetric {
            func,
            map,
            dim,
            up,
            upbar,
        } => {
            if map != t_map {
                return ScalarPoly::zero();
            }
            let mut out = ScalarPoly::zero();
            for sv in 0..*dim {
                for tv in 0..*dim {
                    let left = FieldSymbol::inverse_metric(func, map, *dim, *up, tv);
                    let right = FieldSymbol::inverse_metric(func, map, *dim, sv, *upbar);
                    let (dz, dzbar) = if target.conjugated {
                        (alloc::vec![sv], alloc::vec![tv, t_coord])
                    } else {
                        (alloc::vec![sv, t_coord], alloc::vec![tv])
                    };
                    let dg =
                        FieldSymbol::pull(func, map, *dim, TargetKind::SmoothReal, dz, dzbar);
                    out += &(&ScalarPoly::from_symbol(left) * &ScalarPoly::from_symbol(right))
                        .scale(&GaussRat::from_int(-1))
                        * &ScalarPoly::from_symbol(dg);
                }
            }
            out
        }
        _ => ScalarPoly::zero(),
    }
}

fn bump_pull(s: &FieldSymbol, coord: u8, barred: bool) -> FieldSymbol {
    let mut out = s.clone();
    if let SymName::Pull { dz, dzbar, .. } = &mut out.name {
        if barred {
            dzbar.push(coord);
            dzbar.sort_unstable();
        } else {
            dz.push(coord);
            dz.sort_unstable();
        }
    } else {
        unreachable!("bump_pull on non-pull symbol");
    }
    out
}

/// One pass of the inverse-metric contraction; `None` when no full sum is
/// present. Terms are scanned in canonical order so the result is
/// deterministic.
fn contract_once(p: &ScalarPoly) -> Option<ScalarPoly> {
    for (m, c) in &p.terms {
        for (pos_inv, s) in m.symbols().iter().enumerate() {
            let (func, map, dim, up, upbar) = match &s.name {
                SymName::InverseMetric {
                    func,
                    map,
                    dim,
                    up,
                    upbar,
                } if s.deriv.is_empty() => (func.clone(), map.clone(), *dim, *up, *upbar),
                _ => continue,
            };
            let metric = |i: u8, jbar: u8| {
                FieldSymbol::pull(
                    &func,
                    &map,
                    dim,
                    TargetKind::SmoothReal,
                    alloc::vec![i],
                    alloc::vec![jbar],
                )
            };
            let inverse =
                |i: u8, jbar: u8| FieldSymbol::inverse_metric(&func, &map, dim, i, jbar);
            let rest_of_m = {
                let mut v = m.symbols().to_vec();
                v.remove(pos_inv);
                SymMonomial(v)
            };
            // Contraction over the barred index: the full sum
            //    sum_jbar g^{up jbar} g_{k jbar} * base  ->  delta_{up k} * base.
            for k in 0..dim {
                let base = match rest_of_m.without_one(&metric(k, upbar)) {
                    Some(b) => b,
                    None => continue,
                };
                let sibling = |jbar: u8| {
                    let mut w = base.0.clone();
                    w.push(inverse(up, jbar));
                    w.push(metric(k, jbar));
                    SymMonomial(sorted_syms(w))
                };
                if (0..dim).all(|jbar| p.terms.get(&sibling(jbar)) == Some(c)) {
                    let mut out = p.clone();
                    for jbar in 0..dim {
                        out.add_term(sibling(jbar), -c.clone());
                    }
                    if up == k {
                        out.add_term(base, c.clone());
                    }
                    return Some(out);
                }
            }
            // Contraction over the unbarred index: the full sum
            //    sum_i g^{i upbar} g_{i lbar} * base  ->  delta_{upbar lbar} * base.
            for lbar in 0..dim {
                let base = match rest_of_m.without_one(&metric(up, lbar)) {
                    Some(b) => b,
                    None => continue,
                };
                let sibling = |i: u8| {
                    let mut w = base.0.clone();
                    w.push(inverse(i, upbar));
                    w.push(metric(i, lbar));
                    SymMonomial(sorted_syms(w))
                };
                if (0..dim).all(|i| p.terms.get(&sibling(i)) == Some(c)) {
                    let mut out = p.clone();
                    for i in 0..dim {
                        out.add_term(sibling(i), -c.clone());
                    }
                    if upbar == lbar {
                        out.add_term(base, c.clone());
                    }
                    return Some(out);
                }
            }
        }
    }
    None
}

fn sorted_syms(mut v: Vec<FieldSymbol>) -> Vec<FieldSymbol> {
    v.sort();
    v
}

impl Add for &ScalarPoly {
    type Output = ScalarPoly;
    fn add(self, rhs: &ScalarPoly) -> ScalarPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Add for ScalarPoly {
    type Output = ScalarPoly;
    fn add(self, rhs: ScalarPoly) -> ScalarPoly {
        &self + &rhs
    }
}

impl AddAssign<ScalarPoly> for ScalarPoly {
    fn add_assign(&mut self, rhs: ScalarPoly) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl Sub for &ScalarPoly {
    type Output = ScalarPoly;
    fn sub(self, rhs: &ScalarPoly) -> ScalarPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Sub for ScalarPoly {
    type Output = ScalarPoly;
    fn sub(self, rhs: ScalarPoly) -> ScalarPoly {
        &self - &rhs
    }
}

impl Neg for ScalarPoly {
    type Output = ScalarPoly;
    fn neg(self) -> ScalarPoly {
        self.scale(&GaussRat::from_int(-1))
    }
}

impl Mul for &ScalarPoly {
    type Output = ScalarPoly;
    fn mul(self, rhs: &ScalarPoly) -> ScalarPoly {
        let mut out = ScalarPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for ScalarPoly {
    type Output = ScalarPoly;
    fn mul(self, rhs: ScalarPoly) -> ScalarPoly {
        &self * &rhs
    }
}

impl fmt::Display for ScalarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for s in m.symbols() {
                write!(f, " {s}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> ScalarPoly {
        ScalarPoly::sym("A")
    }

    fn b() -> ScalarPoly {
        ScalarPoly::sym("B")
    }

    #[test]
    fn zero_annihilates() {
        let x = ScalarPoly::constant(GaussRat::complex_ratio(2, 1, 1, 1)) * ScalarPoly::sym("x");
        assert!((&x * &ScalarPoly::zero()).is_zero());
    }

    #[test]
    fn free_product_single_term() {
        let p = &a() * &b();
        assert_eq!(p.num_terms(), 1);
        let (m, c) = p.terms().next().unwrap();
        assert_eq!(m.symbols().len(), 2);
        assert!(c.is_one());
    }

    #[test]
    fn conjugate_pair_product() {
        // (A + iB)(A - iB) = A^2 + B^2, expanded by hand.
        let lhs = &(a() + ScalarPoly::i() * b()) * &(a() - ScalarPoly::i() * b());
        let rhs = &(&a() * &a()) + &(&b() * &b());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn partial_of_constant() {
        assert!(ScalarPoly::int(5).partial(0).is_zero());
        let lam = ScalarPoly::from_symbol(FieldSymbol::coupling("lambda"));
        assert!(lam.partial(2).is_zero());
    }

    #[test]
    fn leibniz_rule() {
        let p = &a() * &b();
        let want = &a().partial(1) * &b() + &a() * &b().partial(1);
        assert_eq!(p.partial(1), want);
    }

    #[test]
    fn partials_commute() {
        let p = &a() * &a().partial(3);
        assert_eq!(p.partial(0).partial(2), p.partial(2).partial(0));
    }

    #[test]
    fn conj_is_involution_and_commutes_with_partial() {
        let p = &(a().scale(&GaussRat::i())) + &b().partial(2);
        assert_eq!(p.conj().conj(), p);
        assert_eq!(p.partial(1).conj(), p.conj().partial(1));
    }

    #[test]
    fn euler_kills_divergence() {
        let phi = FieldSymbol::base("A");
        let l = (&a() * &a().partial(1)).partial(0);
        assert!(l.euler(&phi).is_zero());
    }

    #[test]
    fn euler_algebraic_density() {
        let phi = FieldSymbol::base("A");
        let l = &a() * &a();
        assert_eq!(l.euler(&phi), a().scale(&GaussRat::from_int(2)));
    }

    #[test]
    fn euler_kinetic_density_gives_box() {
        // L = sum eta^{mu nu} dA dA  ->  E_A(L) = -2 box A,
        // box = -d0^2 + d1^2 + d2^2 + d3^2 (hand computation).
        let phi = FieldSymbol::base("A");
        let mut l = ScalarPoly::zero();
        let eta = [-1i64, 1, 1, 1];
        for mu in 0..4u8 {
            l += (&a().partial(mu) * &a().partial(mu)).scale(&GaussRat::from_int(eta[mu as usize]));
        }
        let mut want = ScalarPoly::zero();
        for mu in 0..4u8 {
            want += a()
                .partial(mu)
                .partial(mu)
                .scale(&GaussRat::from_int(-2 * eta[mu as usize]));
        }
        assert_eq!(l.euler(&phi), want);
    }

    #[test]
    fn pull_chain_rule() {
        // d_mu (h o f) = h_z * d_mu f + h_zbar * d_mu fbar  (dim 1, real h).
        let h = FieldSymbol::pull("h", "f", 1, TargetKind::SmoothReal, alloc::vec![], alloc::vec![]);
        let p = ScalarPoly::from_symbol(h).partial(2);
        let f0 = FieldSymbol::map_comp("f", 0, MapComp::Lowest);
        let hz = FieldSymbol::pull("h", "f", 1, TargetKind::SmoothReal, alloc::vec![0], alloc::vec![]);
        let hzb = FieldSymbol::pull("h", "f", 1, TargetKind::SmoothReal, alloc::vec![], alloc::vec![0]);
        let want = &ScalarPoly::from_symbol(hz) * &ScalarPoly::from_symbol(f0.with_deriv(2))
            + &ScalarPoly::from_symbol(hzb) * &ScalarPoly::from_symbol(f0.conj().with_deriv(2));
        assert_eq!(p, want);
    }

    #[test]
    fn holomorphic_conj_depends_only_on_zbar() {
        let w = FieldSymbol::pull("W", "f", 2, TargetKind::Holomorphic, alloc::vec![0], alloc::vec![]);
        let wbar = w.conj();
        assert!(wbar.is_conjugated());
        let p = ScalarPoly::from_symbol(wbar).partial(0);
        // Every term must involve a conjugated lowest component.
        for (m, _) in p.terms() {
            assert!(m
                .symbols()
                .iter()
                .any(|s| s.is_conjugated() && !s.deriv().is_empty()));
        }
        assert_eq!(p.num_terms(), 2);
    }

    #[test]
    fn real_symbol_conj_fixed() {
        let v = FieldSymbol::real_base("v");
        assert_eq!(v.conj(), v);
    }

    #[test]
    fn metric_contraction_dim1() {
        let ginv = ScalarPoly::from_symbol(FieldSymbol::inverse_metric("h", "f", 1, 0, 0));
        let g = ScalarPoly::from_symbol(FieldSymbol::pull(
            "h",
            "f",
            1,
            TargetKind::SmoothReal,
            alloc::vec![0],
            alloc::vec![0],
        ));
        let prod = &ginv * &g;
        assert_eq!(prod.contract_inverse_metric(), ScalarPoly::one());
    }

    #[test]
    fn metric_contraction_dim2_full_sum_only() {
        let dim = 2;
        let ginv = |i, j| ScalarPoly::from_symbol(FieldSymbol::inverse_metric("h", "f", dim, i, j));
        let g = |i, j| {
            ScalarPoly::from_symbol(FieldSymbol::pull(
                "h",
                "f",
                dim,
                TargetKind::SmoothReal,
                alloc::vec![i],
                alloc::vec![j],
            ))
        };
        // Partial sum: no rewrite fires.
        let partial = &ginv(0, 0) * &g(1, 0);
        assert_eq!(partial.contract_inverse_metric(), partial);
        // Full sum over the barred index with i == k contracts to 1.
        let full = &(&ginv(0, 0) * &g(0, 0)) + &(&ginv(0, 1) * &g(0, 1));
        assert_eq!(full.contract_inverse_metric(), ScalarPoly::one());
        // Full sum with i != k contracts to 0.
        let full0 = &(&ginv(0, 0) * &g(1, 0)) + &(&ginv(0, 1) * &g(1, 1));
        assert!(full0.contract_inverse_metric().is_zero());
        // Full sum over the unbarred index.
        let fullu = &(&ginv(0, 0) * &g(0, 1)) + &(&ginv(1, 0) * &g(1, 1));
        assert!(fullu.contract_inverse_metric().is_zero());
    }
}
