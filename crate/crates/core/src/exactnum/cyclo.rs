use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::field::{field, CycloField};
use super::{ExactError, Rational};

/// An exact element of the cyclotomic field ℚ(ζ_N).
///
/// The coefficient vector holds the coordinates on 1, ζ, …, ζ^{φ(N)−1} after
/// reduction modulo Φ_N, so two elements of the same order are equal exactly
/// when their vectors are. Elements of different orders are compared and
/// combined in ℚ(ζ_lcm).
#[derive(Clone, Debug)]
pub struct Cyclo {
    order: u32,
    coeffs: Vec<Rational>,
}

impl Cyclo {
    pub fn zero() -> Self {
        Cyclo { order: 1, coeffs: vec![Rational::zero()] }
    }

    pub fn one() -> Self {
        Cyclo::from_rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Cyclo::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        Cyclo::from_rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(q: Rational) -> Self {
        Cyclo { order: 1, coeffs: vec![q] }
    }

    /// ζ_N^k in canonical form.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        assert!(n >= 1, "root_of_unity needs a positive order");
        let f = field(n);
        let idx = k.rem_euclid(n as i64) as usize;
        Cyclo {
            order: n,
            coeffs: f.powers[idx].iter().map(|&c| Rational::from_integer(BigInt::from(c))).collect(),
        }
    }

    /// Builds Σ c_k ζ_N^k from an arbitrary-length coefficient list, reducing
    /// exponents modulo N and the result modulo Φ_N.
    pub fn from_power_coeffs(n: u32, raw: &[Rational]) -> Self {
        let f = field(n);
        let mut coeffs = vec![Rational::zero(); f.degree];
        for (k, c) in raw.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &f.powers[k % n as usize];
            for (t, p) in row.iter().enumerate() {
                if *p != 0 {
                    coeffs[t] += c * Rational::from_integer(BigInt::from(*p));
                }
            }
        }
        Cyclo { order: n, coeffs }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value, if the element lies in ℚ.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Re-expresses the element in ℚ(ζ_m); `m` must be a multiple of the order.
    pub fn lift_to(&self, m: u32) -> Cyclo {
        assert!(m.is_multiple_of(self.order), "cannot lift order {} to {}", self.order, m);
        if m == self.order {
            return self.clone();
        }
        let f = field(m);
        let mut coeffs = vec![Rational::zero(); f.degree];
        if self.order == 1 {
            coeffs[0] = self.coeffs[0].clone();
            return Cyclo { order: m, coeffs };
        }
        let step = (m / self.order) as usize;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &f.powers[(i * step) % m as usize];
            for (t, p) in row.iter().enumerate() {
                if *p != 0 {
                    coeffs[t] += c * Rational::from_integer(BigInt::from(*p));
                }
            }
        }
        Cyclo { order: m, coeffs }
    }

    fn aligned<'a>(a: &'a Cyclo, b: &'a Cyclo) -> (std::borrow::Cow<'a, Cyclo>, std::borrow::Cow<'a, Cyclo>) {
        use std::borrow::Cow;
        if a.order == b.order {
            return (Cow::Borrowed(a), Cow::Borrowed(b));
        }
        let m = a.order.lcm(&b.order);
        let la = if a.order == m { Cow::Borrowed(a) } else { Cow::Owned(a.lift_to(m)) };
        let lb = if b.order == m { Cow::Borrowed(b) } else { Cow::Owned(b.lift_to(m)) };
        (la, lb)
    }

    pub fn scale(&self, q: &Rational) -> Cyclo {
        Cyclo { order: self.order, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    fn mul_same(a: &Cyclo, b: &Cyclo, f: &CycloField) -> Cyclo {
        let d = f.degree;
        let mut conv = vec![Rational::zero(); 2 * d - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    conv[i + j] += x * y;
                }
            }
        }
        let mut coeffs: Vec<Rational> = conv.drain(..d).collect();
        for (off, c) in conv.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = (d + off) % f.order as usize;
            for (t, p) in f.powers[k].iter().enumerate() {
                if *p != 0 {
                    coeffs[t] += &c * Rational::from_integer(BigInt::from(*p));
                }
            }
        }
        Cyclo { order: a.order, coeffs }
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<Cyclo, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if self.order <= 2 || self.coeffs.len() == 1 {
            let q = &self.coeffs[0];
            return Ok(Cyclo { order: self.order, coeffs: vec![q.recip()] });
        }
        // Solve (multiplication-by-self) · x = 1 over ℚ.
        let f = field(self.order);
        let d = f.degree;
        let mut m: Vec<Vec<Rational>> = vec![vec![Rational::zero(); d + 1]; d];
        for j in 0..d {
            let col = Cyclo::mul_same(self, &Cyclo::root_of_unity(self.order, j as i64), &f);
            for i in 0..d {
                m[i][j] = col.coeffs[i].clone();
            }
        }
        m[0][d] = Rational::one();
        for c in 0..d {
            let p = (c..d).find(|&r| !m[r][c].is_zero()).expect("multiplication matrix of a nonzero element is invertible");
            m.swap(c, p);
            let pv = m[c][c].recip();
            for k in c..=d {
                m[c][k] = &m[c][k] * &pv;
            }
            for r in 0..d {
                if r != c && !m[r][c].is_zero() {
                    let fct = m[r][c].clone();
                    for k in c..=d {
                        let t = &m[c][k] * &fct;
                        m[r][k] -= t;
                    }
                }
            }
        }
        Ok(Cyclo { order: self.order, coeffs: m.into_iter().map(|row| row[d].clone()).collect() })
    }

    pub fn checked_div(&self, other: &Cyclo) -> Result<Cyclo, ExactError> {
        Ok(self * &other.inv()?)
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, e: i64) -> Result<Cyclo, ExactError> {
        let mut base = if e < 0 { self.inv()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = Cyclo::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Complex value of the element, for human-readable output only.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.order as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = c.numer().to_f64().unwrap_or(f64::NAN) / c.denom().to_f64().unwrap_or(f64::NAN);
            let ang = 2.0 * std::f64::consts::PI * k as f64 / n;
            re += v * ang.cos();
            im += v * ang.sin();
        }
        (re, im)
    }

    pub fn approx_string(&self) -> String {
        let (re, im) = self.to_complex();
        let clean = |x: f64| if x.abs() < 1e-12 { 0.0 } else { x };
        let (re, im) = (clean(re), clean(im));
        if im == 0.0 {
            format!("{re:.6}")
        } else if im < 0.0 {
            format!("{re:.6}-{:.6}i", -im)
        } else {
            format!("{re:.6}+{im:.6}i")
        }
    }
}

impl Default for Cyclo {
    fn default() -> Self {
        Cyclo::zero()
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Cyclo::aligned(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclo {}

impl<'a> Add<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &'a Cyclo) -> Cyclo {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        let (a, b) = Cyclo::aligned(self, rhs);
        Cyclo { order: a.order, coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect() }
    }
}

impl<'a> Sub<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &'a Cyclo) -> Cyclo {
        if rhs.is_zero() {
            return self.clone();
        }
        let (a, b) = Cyclo::aligned(self, rhs);
        Cyclo { order: a.order, coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect() }
    }
}

impl<'a> Mul<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &'a Cyclo) -> Cyclo {
        if self.is_zero() || rhs.is_zero() {
            return Cyclo::zero();
        }
        if self.order == 1 {
            return rhs.scale(&self.coeffs[0]);
        }
        if rhs.order == 1 {
            return self.scale(&rhs.coeffs[0]);
        }
        let (a, b) = Cyclo::aligned(self, rhs);
        let f = field(a.order);
        Cyclo::mul_same(&a, &b, &f)
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: Cyclo) -> Cyclo {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: &'a Cyclo) -> Cyclo {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Cyclo> for &'a Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: Cyclo) -> Cyclo {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Cyclo> for Cyclo {
    fn add_assign(&mut self, rhs: &Cyclo) {
        if rhs.is_zero() {
            return;
        }
        if self.order == rhs.order {
            for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *x += y;
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl AddAssign<Cyclo> for Cyclo {
    fn add_assign(&mut self, rhs: Cyclo) {
        *self += &rhs;
    }
}

impl SubAssign<&Cyclo> for Cyclo {
    fn sub_assign(&mut self, rhs: &Cyclo) {
        if rhs.is_zero() {
            return;
        }
        if self.order == rhs.order {
            for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *x -= y;
            }
        } else {
            *self = &*self - rhs;
        }
    }
}

impl SubAssign<Cyclo> for Cyclo {
    fn sub_assign(&mut self, rhs: Cyclo) {
        *self -= &rhs;
    }
}

impl std::iter::Sum for Cyclo {
    fn sum<I: Iterator<Item = Cyclo>>(iter: I) -> Cyclo {
        iter.fold(Cyclo::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl From<i64> for Cyclo {
    fn from(n: i64) -> Self {
        Cyclo::from_int(n)
    }
}

impl From<Rational> for Cyclo {
    fn from(q: Rational) -> Self {
        Cyclo::from_rational(q)
    }
}

fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Renders e.g. `1/3 + 2/3*ζ6 - ζ6^2`; rationals print bare.
impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            let gen = match k {
                0 => String::new(),
                1 => format!("ζ{}", self.order),
                _ => format!("ζ{}^{}", self.order, k),
            };
            let body = if gen.is_empty() {
                fmt_rational(&mag)
            } else if mag.is_one() {
                gen
            } else {
                format!("{}*{}", fmt_rational(&mag), gen)
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                write!(f, "{body}")?;
                first = false;
            } else {
                write!(f, " {} {body}", if neg { "-" } else { "+" })?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CycloRepr {
    order: u32,
    coeffs: Vec<(String, String)>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CycloInput {
    Repr(CycloRepr),
    Int(i64),
    Text(String),
}

fn parse_rational(s: &str) -> Option<Rational> {
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: BigInt = n.trim().parse().ok()?;
    let d: BigInt = d.trim().parse().ok()?;
    (!d.is_zero()).then(|| Rational::new(n, d))
}

/// `ζN^k`, `zN^k`, `ζN` or `zN`.
fn parse_root(s: &str) -> Option<Cyclo> {
    let body = s.strip_prefix('ζ').or_else(|| s.strip_prefix('z'))?;
    let (n, k) = body.split_once('^').unwrap_or((body, "1"));
    let n: u32 = n.trim().parse().ok()?;
    let k: i64 = k.trim().parse().ok()?;
    (n > 0).then(|| Cyclo::root_of_unity(n, k))
}

fn parse_term(s: &str) -> Option<Cyclo> {
    let s = s.trim();
    if let Some((c, root)) = s.split_once('*') {
        return Some(&parse_root(root.trim())? * &Cyclo::from_rational(parse_rational(c)?));
    }
    parse_root(s).or_else(|| parse_rational(s).map(Cyclo::from_rational))
}

impl std::str::FromStr for Cyclo {
    type Err = ExactError;

    /// Reads the `Display` format, e.g. `-1/2 + 3*ζ6^2`; `z` may stand for `ζ`.
    fn from_str(s: &str) -> Result<Self, ExactError> {
        let err = || ExactError::Parse(s.to_string());
        let t = s.trim();
        if t.is_empty() {
            return Err(err());
        }
        // split into signed terms; only a leading sign may stand alone
        let mut terms: Vec<(i64, &str)> = Vec::new();
        let (mut sign, mut start) = (1i64, 0);
        let mut body = t;
        if let Some(rest) = t.strip_prefix('-') {
            sign = -1;
            body = rest;
        }
        for (pos, ch) in body.char_indices() {
            if ch == '+' || ch == '-' {
                terms.push((sign, &body[start..pos]));
                sign = if ch == '-' { -1 } else { 1 };
                start = pos + 1;
            }
        }
        terms.push((sign, &body[start..]));
        let mut total = Cyclo::zero();
        for (sign, term) in terms {
            let c = parse_term(term).ok_or_else(err)?;
            total = &total + &(&c * &Cyclo::from_int(sign));
        }
        Ok(total)
    }
}

impl Serialize for Cyclo {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CycloRepr {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| (c.numer().to_string(), c.denom().to_string())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclo {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = match CycloInput::deserialize(d)? {
            CycloInput::Repr(r) => r,
            CycloInput::Int(n) => return Ok(Cyclo::from_int(n)),
            CycloInput::Text(t) => return t.parse().map_err(D::Error::custom),
        };
        if repr.order == 0 {
            return Err(D::Error::custom("cyclotomic order must be positive"));
        }
        let mut raw = Vec::with_capacity(repr.coeffs.len());
        for (n, dd) in &repr.coeffs {
            let num: BigInt = n.parse().map_err(|_| D::Error::custom(format!("bad integer {n:?}")))?;
            let den: BigInt = dd.parse().map_err(|_| D::Error::custom(format!("bad integer {dd:?}")))?;
            if den.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            raw.push(Rational::new(num, den));
        }
        if raw.is_empty() {
            raw.push(Rational::zero());
        }
        Ok(Cyclo::from_power_coeffs(repr.order, &raw))
    }
}
