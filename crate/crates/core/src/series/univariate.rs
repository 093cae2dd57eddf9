use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Polynomial (or truncated series) in one variable `t`.
///
/// `cap = None` marks an exact polynomial; `Some(c)` means coefficients
/// above `t^c` are unknown and were dropped.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    cap: Option<u32>,
    coeffs: BTreeMap<u32, BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn one() -> Self {
        Self::from_terms(None, [(0, BigInt::one())])
    }

    /// Exact polynomial from a dense coefficient list, index = power of `t`.
    pub fn from_coeffs<C: Into<BigInt> + Copy>(coeffs: &[C]) -> Self {
        Self::from_terms(
            None,
            coeffs.iter().enumerate().map(|(i, &c)| (i as u32, c.into())),
        )
    }

    pub fn from_terms<I, C>(cap: Option<u32>, terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, C)>,
        C: Into<BigInt>,
    {
        let mut coeffs: BTreeMap<u32, BigInt> = BTreeMap::new();
        for (i, c) in terms {
            if cap.is_some_and(|cap| i > cap) {
                continue;
            }
            *coeffs.entry(i).or_default() += c.into();
        }
        coeffs.retain(|_, c| !c.is_zero());
        UniPoly { cap, coeffs }
    }

    /// `1 + sign * t^k`.
    pub fn binomial(k: u32, sign: i32, cap: Option<u32>) -> Self {
        Self::from_terms(cap, [(0, BigInt::one()), (k, BigInt::from(sign))])
    }

    /// Expansion of `1 / (1 - t^k)` up to `t^cap`.
    pub fn geom(k: u32, cap: u32) -> Self {
        assert!(k > 0, "geometric ratio must be non-constant");
        Self::from_terms(
            Some(cap),
            (0..=cap / k).map(|m| (m * k, BigInt::one())),
        )
    }

    pub fn cap(&self) -> Option<u32> {
        self.cap
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coefficient(&self, i: u32) -> BigInt {
        self.coeffs.get(&i).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> + '_ {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    /// Dense coefficient vector `[c_0, ..., c_deg]`; empty for zero.
    pub fn to_dense(&self) -> Vec<BigInt> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|i| self.coefficient(i)).collect(),
        }
    }

    /// Marks the polynomial exact (drops the cap).
    pub fn into_exact(mut self) -> Self {
        self.cap = None;
        self
    }

    pub fn truncate(&self, cap: u32) -> Self {
        let cap = self.cap.map_or(cap, |c| c.min(cap));
        Self::from_terms(Some(cap), self.terms().map(|(i, c)| (i, c.clone())))
    }

    fn joint_cap(a: Option<u32>, b: Option<u32>) -> Option<u32> {
        match (a, b) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, None) | (None, x) => x,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let cap = Self::joint_cap(self.cap, other.cap);
        Self::from_terms(
            cap,
            self.terms()
                .chain(other.terms())
                .map(|(i, c)| (i, c.clone())),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            cap: self.cap,
            coeffs: self.coeffs.iter().map(|(&i, c)| (i, -c)).collect(),
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: u32) -> Self {
        Self::from_terms(self.cap, self.terms().map(|(i, c)| (i + k, c.clone())))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let cap = Self::joint_cap(self.cap, other.cap);
        let mut acc: BTreeMap<u32, BigInt> = BTreeMap::new();
        for (i, a) in self.terms() {
            for (j, b) in other.terms() {
                if cap.is_some_and(|cap| i + j > cap) {
                    break;
                }
                *acc.entry(i + j).or_default() += a * b;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        UniPoly { cap, coeffs: acc }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut result = UniPoly {
            cap: self.cap,
            ..Self::one()
        };
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        let mut last = self.degree().unwrap_or(0);
        for (&i, c) in self.coeffs.iter().rev() {
            acc *= num_traits::pow(t.clone(), (last - i) as usize);
            acc += c;
            last = i;
        }
        acc * num_traits::pow(t.clone(), last as usize)
    }

    /// Coefficientwise equality, ignoring the caps.
    pub fn same_coeffs(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }

    /// First power of `t` where the coefficients differ.
    pub fn first_difference(&self, other: &Self) -> Option<(u32, BigInt, BigInt)> {
        let top = self.degree().max(other.degree())?;
        (0..=top).find_map(|i| {
            let (a, b) = (self.coefficient(i), other.coefficient(i));
            (a != b).then_some((i, a, b))
        })
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.cap {
            Some(c) => write!(f, "UniPoly(cap={c}, {self})"),
            None => write!(f, "UniPoly({self})"),
        }
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (n, (&i, c)) in self.coeffs.iter().enumerate() {
            let mag = c.abs();
            if n == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
