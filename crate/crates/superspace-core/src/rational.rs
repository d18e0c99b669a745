//! Gaussian rationals: the coefficient field `Q(i)`.
//!
//! Every constant appearing in the engine (signs, halves, quarters, the
//! entries of the Pauli matrices) lies in `Q(i)`, so exact arithmetic here
//! makes every downstream identity an equality of normal forms.

use alloc::string::String;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An element `re + im * i` of `Q(i)` with exact rational parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GaussRat {
    re: BigRational,
    im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn zero() -> Self {
        GaussRat {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    pub fn one() -> Self {
        GaussRat {
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRat {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        GaussRat {
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }

    /// `p/q` as a real rational. Panics if `q == 0`.
    pub fn ratio(p: i64, q: i64) -> Self {
        GaussRat {
            re: BigRational::new(BigInt::from(p), BigInt::from(q)),
            im: BigRational::zero(),
        }
    }

    /// `(a/b) + (c/d) i`.
    pub fn complex_ratio(a: i64, b: i64, c: i64, d: i64) -> Self {
        GaussRat {
            re: BigRational::new(BigInt::from(a), BigInt::from(b)),
            im: BigRational::new(BigInt::from(c), BigInt::from(d)),
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero in Q(i)");
        let norm = &self.re * &self.re + &self.im * &self.im;
        GaussRat {
            re: &self.re / &norm,
            im: -&self.im / &norm,
        }
    }

    /// Parse the exact-rational literal grammar `a/b+c/d*i` (also accepts
    /// plain `a`, `a/b`, `i`, `-i`, `c*i`, `a+c*i`, `a-c/d*i`).
    pub fn parse(text: &str) -> Result<Self, String> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(String::from("empty rational literal"));
        }
        // Split into at most two signed parts.
        let mut parts: alloc::vec::Vec<String> = alloc::vec::Vec::new();
        let mut cur = String::new();
        for (k, ch) in s.chars().enumerate() {
            if (ch == '+' || ch == '-') && k > 0 {
                parts.push(core::mem::take(&mut cur));
                if ch == '-' {
                    cur.push('-');
                }
            } else {
                cur.push(ch);
            }
        }
        parts.push(cur);
        if parts.len() > 2 {
            return Err(alloc::format!("too many terms in rational literal `{text}`"));
        }
        let mut out = GaussRat::zero();
        for part in parts {
            let (is_imag, body) = if let Some(stripped) = part.strip_suffix("*i") {
                (true, String::from(stripped))
            } else if let Some(stripped) = part.strip_suffix('i') {
                (true, String::from(stripped))
            } else {
                (false, part.clone())
            };
            let body = if body.is_empty() || body == "-" {
                alloc::format!("{body}1")
            } else {
                body
            };
            let ratio = parse_ratio(&body)
                .ok_or_else(|| alloc::format!("bad rational literal `{text}`"))?;
            if is_imag {
                out.im += ratio;
            } else {
                out.re += ratio;
            }
        }
        Ok(out)
    }
}

fn parse_ratio(body: &str) -> Option<BigRational> {
    let mut split = body.splitn(2, '/');
    let num: BigInt = split.next()?.parse().ok()?;
    match split.next() {
        Some(den) => {
            let den: BigInt = den.parse().ok()?;
            if den.is_zero() {
                return None;
            }
            Some(BigRational::new(num, den))
        }
        None => Some(BigRational::from_integer(num)),
    }
}

fn fmt_ratio(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussRat {
    /// Canonical form of the `a/b+c/d*i` literal grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if !self.re.is_zero() {
            fmt_ratio(&self.re, f)?;
            if !self.im.is_zero() {
                if self.im.is_positive() {
                    write!(f, "+")?;
                }
                fmt_ratio(&self.im, f)?;
                write!(f, "*i")?;
            }
            Ok(())
        } else {
            fmt_ratio(&self.im, f)?;
            write!(f, "*i")
        }
    }
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: GaussRat) -> GaussRat {
        GaussRat {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl AddAssign for GaussRat {
    fn add_assign(&mut self, rhs: GaussRat) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl Sub for GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: GaussRat) -> GaussRat {
        GaussRat {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl SubAssign for GaussRat {
    fn sub_assign(&mut self, rhs: GaussRat) {
        self.re -= rhs.re;
        self.im -= rhs.im;
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Mul for GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: GaussRat) -> GaussRat {
        &self * &rhs
    }
}

impl Mul for &GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl MulAssign for GaussRat {
    fn mul_assign(&mut self, rhs: GaussRat) {
        *self = &*self * &rhs;
    }
}

impl Div for GaussRat {
    type Output = GaussRat;
    fn div(self, rhs: GaussRat) -> GaussRat {
        &self * &rhs.inv()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn field_ops() {
        let a = GaussRat::complex_ratio(2, 1, 1, 1); // 2 + i
        let b = GaussRat::complex_ratio(1, 2, -1, 3); // 1/2 - i/3
        let prod = &a * &b;
        assert_eq!(prod, GaussRat::complex_ratio(4, 3, -1, 6));
        assert_eq!(a.clone() * a.inv(), GaussRat::one());
        assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn i_squares_to_minus_one() {
        assert_eq!(GaussRat::i() * GaussRat::i(), GaussRat::from_int(-1));
    }

    #[test]
    fn parse_round_trip() {
        for text in ["1/2+3/4*i", "-2", "i", "-1/3*i", "5+i", "0"] {
            let v = GaussRat::parse(text).unwrap();
            let shown = v.to_string();
            assert_eq!(GaussRat::parse(&shown).unwrap(), v);
        }
    }
}
