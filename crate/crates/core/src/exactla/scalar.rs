//! Field elements over the rationals or a prime field.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::LinalgError;

/// Largest admissible prime modulus (exclusive).
pub const MAX_PRIME: u64 = 1 << 31;

/// The ground field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ScalarDomain {
    Rational,
    Prime(u32),
}

impl ScalarDomain {
    /// Prime field `F_p`; rejects composites and `p >= 2^31`.
    pub fn prime(p: u64) -> Result<Self, LinalgError> {
        if p >= MAX_PRIME {
            return Err(LinalgError::PrimeTooLarge(p));
        }
        if !is_prime(p) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(ScalarDomain::Prime(p as u32))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            ScalarDomain::Rational => 0,
            ScalarDomain::Prime(p) => *p,
        }
    }

    /// True iff the characteristic is neither 2 nor 3.
    pub fn theorem_scope(&self) -> bool {
        !matches!(self.characteristic(), 2 | 3)
    }
}

impl fmt::Display for ScalarDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarDomain::Rational => write!(f, "Q"),
            ScalarDomain::Prime(p) => write!(f, "F{p}"),
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact field element. Rationals are kept in lowest terms with a
/// positive denominator; residues are reduced into `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn zero(domain: ScalarDomain) -> Self {
        Self::from_i64(domain, 0)
    }

    pub fn one(domain: ScalarDomain) -> Self {
        Self::from_i64(domain, 1)
    }

    pub fn from_i64(domain: ScalarDomain, v: i64) -> Self {
        match domain {
            ScalarDomain::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            ScalarDomain::Prime(p) => Scalar::Residue {
                value: v.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    /// Image of an integer in the given field.
    pub fn from_bigint(domain: ScalarDomain, v: &BigInt) -> Self {
        match domain {
            ScalarDomain::Rational => Scalar::Rational(BigRational::from_integer(v.clone())),
            ScalarDomain::Prime(p) => Scalar::Residue {
                value: v.mod_floor(&BigInt::from(p)).to_u32().expect("residue fits"),
                modulus: p,
            },
        }
    }

    /// Image of a rational number; `None` if the denominator vanishes mod p.
    pub fn from_rational(domain: ScalarDomain, q: &BigRational) -> Option<Self> {
        match domain {
            ScalarDomain::Rational => Some(Scalar::Rational(q.clone())),
            ScalarDomain::Prime(_) => {
                let num = Self::from_bigint(domain, q.numer());
                let den = Self::from_bigint(domain, q.denom());
                den.inv().map(|d| &num * &d)
            }
        }
    }

    pub fn domain(&self) -> ScalarDomain {
        match self {
            Scalar::Rational(_) => ScalarDomain::Rational,
            Scalar::Residue { modulus, .. } => ScalarDomain::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: pow_mod(*value as u64, *modulus as u64 - 2, *modulus as u64) as u32,
                modulus: *modulus,
            },
        })
    }

    /// `self / rhs`, `None` when `rhs` is zero.
    pub fn checked_div(&self, rhs: &Scalar) -> Option<Self> {
        rhs.inv().map(|r| self * &r)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Scalar::one(self.domain());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Rational value of the scalar, when the domain is `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Residue { .. } => None,
        }
    }

    /// Total order used for canonical sorting: numeric order over `Q`,
    /// residue order over `F_p`.
    pub fn canonical_cmp(&self, other: &Scalar) -> Ordering {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a.cmp(b),
            (Scalar::Residue { value: a, .. }, Scalar::Residue { value: b, .. }) => a.cmp(b),
            (Scalar::Rational(_), _) => Ordering::Less,
            (_, Scalar::Rational(_)) => Ordering::Greater,
        }
    }

    fn assert_same_domain(&self, other: &Scalar) {
        debug_assert_eq!(self.domain(), other.domain(), "scalar domain mismatch in arithmetic");
    }
}

fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.assert_same_domain(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => Scalar::Residue {
                value: ((*a as u64 + *b as u64) % *modulus as u64) as u32,
                modulus: *modulus,
            },
            _ => panic!("scalar domain mismatch"),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.assert_same_domain(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => {
                let m = *modulus as u64;
                Scalar::Residue {
                    value: ((*a as u64 + m - *b as u64) % m) as u32,
                    modulus: *modulus,
                }
            }
            _ => panic!("scalar domain mismatch"),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.assert_same_domain(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => Scalar::Residue {
                value: ((*a as u64 * *b as u64) % *modulus as u64) as u32,
                modulus: *modulus,
            },
            _ => panic!("scalar domain mismatch"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

/// Parse scalar text of the form `-?digits(/digits)?` into `domain`.
pub fn parse_scalar(text: &str, domain: ScalarDomain) -> Result<Scalar, LinalgError> {
    let malformed = || LinalgError::MalformedScalar(text.to_string());
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (num_txt, den_txt) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits(num_txt) || !den_txt.is_none_or(digits) {
        return Err(malformed());
    }
    let mut num: BigInt = num_txt.parse().map_err(|_| malformed())?;
    if neg {
        num = -num;
    }
    let den: BigInt = match den_txt {
        Some(d) => d.parse().map_err(|_| malformed())?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(LinalgError::ZeroDenominator(text.to_string()));
    }
    let q = BigRational::new(num, den);
    Scalar::from_rational(domain, &q).ok_or_else(|| LinalgError::NotReducible {
        text: text.to_string(),
        modulus: domain.characteristic(),
    })
}
