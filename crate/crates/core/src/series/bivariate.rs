use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{tri_index, tri_len, SeriesError, UniPoly};

/// A power series in `x` and `y` with integer coefficients, truncated at
/// total degree `cap`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BiSeries {
    cap: u32,
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiSeries {
    pub fn zero(cap: u32) -> Self {
        BiSeries {
            cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(cap: u32) -> Self {
        Self::monomial(0, 0, BigInt::one(), cap)
    }

    /// `coeff * x^i y^j`, or zero if the monomial lies above the cap.
    pub fn monomial(i: u32, j: u32, coeff: impl Into<BigInt>, cap: u32) -> Self {
        Self::from_terms(cap, [((i, j), coeff.into())])
    }

    /// Builds a series from `(exponent, coefficient)` pairs. Repeated
    /// exponents are summed; terms above the cap and zero sums are dropped.
    pub fn from_terms<I, C>(cap: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = ((u32, u32), C)>,
        C: Into<BigInt>,
    {
        let mut map: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
        for ((i, j), c) in terms {
            if i + j > cap {
                continue;
            }
            *map.entry((i, j)).or_default() += c.into();
        }
        map.retain(|_, c| !c.is_zero());
        BiSeries { cap, terms: map }
    }

    /// `1 + x^i y^j`.
    pub fn one_plus(i: u32, j: u32, cap: u32) -> Self {
        Self::from_terms(cap, [((0, 0), 1), ((i, j), 1)])
    }

    /// `1 - x^i y^j`.
    pub fn one_minus(i: u32, j: u32, cap: u32) -> Self {
        Self::from_terms(cap, [((0, 0), 1), ((i, j), -1)])
    }

    /// The expansion of `1 / (1 - x^a y^b)`.
    pub fn geom(a: u32, b: u32, cap: u32) -> Result<Self, SeriesError> {
        let step = a + b;
        if step == 0 {
            return Err(SeriesError::ConstantRatio);
        }
        let count = cap / step + 1;
        Ok(Self::from_terms(
            cap,
            (0..count).map(|k| ((a * k, b * k), BigInt::one())),
        ))
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates over `((i, j), coefficient)` in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Coefficient of `x^i y^j`. Above the cap the value is unknown, which
    /// is reported as an error rather than zero.
    pub fn coefficient(&self, i: u32, j: u32) -> Result<BigInt, SeriesError> {
        if i + j > self.cap {
            return Err(SeriesError::OutOfRange { i, j, cap: self.cap });
        }
        Ok(self.terms.get(&(i, j)).cloned().unwrap_or_default())
    }

    /// Highest total degree with a nonzero coefficient.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    /// True iff every stored term has total degree at most `deg`.
    ///
    /// Panics if `deg > cap`: the answer would depend on truncated terms.
    pub fn is_polynomial_below(&self, deg: u32) -> bool {
        assert!(
            deg <= self.cap,
            "degree bound {deg} exceeds truncation cap {}",
            self.cap
        );
        self.terms.keys().all(|&(i, j)| i + j <= deg)
    }

    /// Drops every term above `new_cap` and records the smaller cap.
    pub fn truncate(&self, new_cap: u32) -> Self {
        let cap = new_cap.min(self.cap);
        BiSeries {
            cap,
            terms: self
                .terms
                .iter()
                .filter(|(&(i, j), _)| i + j <= cap)
                .map(|(&e, c)| (e, c.clone()))
                .collect(),
        }
    }

    /// Re-labels the series with a larger cap. Only sound for a series that
    /// is an exact polynomial.
    pub fn with_cap(&self, cap: u32) -> Self {
        if cap <= self.cap {
            return self.truncate(cap);
        }
        BiSeries {
            cap,
            terms: self.terms.clone(),
        }
    }

    fn check_cap(&self, other: &Self) -> Result<(), SeriesError> {
        if self.cap != other.cap {
            return Err(SeriesError::CapMismatch {
                left: self.cap,
                right: other.cap,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_cap(other)?;
        let mut out = self.clone();
        out.add_assign_unchecked(other, false);
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_cap(other)?;
        let mut out = self.clone();
        out.add_assign_unchecked(other, true);
        Ok(out)
    }

    pub(crate) fn add_assign_unchecked(&mut self, other: &Self, negate: bool) {
        for (&e, c) in &other.terms {
            let entry = self.terms.entry(e).or_default();
            if negate {
                *entry -= c;
            } else {
                *entry += c;
            }
            if entry.is_zero() {
                self.terms.remove(&e);
            }
        }
    }

    pub fn neg(&self) -> Self {
        BiSeries {
            cap: self.cap,
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        if factor.is_zero() {
            return Self::zero(self.cap);
        }
        BiSeries {
            cap: self.cap,
            terms: self.terms.iter().map(|(&e, c)| (e, c * factor)).collect(),
        }
    }

    /// Multiplies by the monomial `x^a y^b`, truncating at the cap.
    pub fn shift(&self, a: u32, b: u32) -> Self {
        BiSeries {
            cap: self.cap,
            terms: self
                .terms
                .iter()
                .filter(|(&(i, j), _)| i + j + a + b <= self.cap)
                .map(|(&(i, j), c)| ((i + a, j + b), c.clone()))
                .collect(),
        }
    }

    /// Truncated product.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_cap(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let cap = self.cap;
        if self.is_zero() || other.is_zero() {
            return Self::zero(cap);
        }
        // Iterate the longer operand on the outside; the inner operand is
        // sorted by total degree so the truncation bound is a `break`.
        let (outer, inner) = if self.len() >= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut inner_sorted: Vec<(u32, u32, &BigInt)> =
            inner.terms.iter().map(|(&(i, j), c)| (i, j, c)).collect();
        inner_sorted.sort_by_key(|&(i, j, _)| i + j);

        if let Some(out) = mul_small(outer, &inner_sorted, cap) {
            return out;
        }

        let mut acc = vec![BigInt::zero(); tri_len(cap)];
        for (&(ai, aj), ac) in &outer.terms {
            let room = cap - (ai + aj);
            for &(bi, bj, bc) in &inner_sorted {
                if bi + bj > room {
                    break;
                }
                acc[tri_index(ai + bi, aj + bj)] += ac * bc;
            }
        }
        Self::from_dense(cap, acc)
    }

    fn from_dense(cap: u32, acc: Vec<BigInt>) -> Self {
        let mut terms = BTreeMap::new();
        let mut it = acc.into_iter();
        for k in 0..=cap {
            for i in 0..=k {
                let c = it.next().expect("dense buffer sized for cap");
                if !c.is_zero() {
                    terms.insert((i, k - i), c);
                }
            }
        }
        BiSeries { cap, terms }
    }

    /// `self^e` by repeated squaring; `pow(0)` is one.
    pub fn pow(&self, mut e: u32) -> Self {
        let mut result = Self::one(self.cap);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        result
    }

    /// Exact quotient `self / den` up to the cap. The denominator must have
    /// constant term `+1` or `-1`, so every coefficient is recovered in
    /// graded order with integer arithmetic only.
    pub fn div_exact(&self, den: &Self) -> Result<Self, SeriesError> {
        self.check_cap(den)?;
        let c0 = den.terms.get(&(0, 0)).ok_or(SeriesError::NonUnit)?;
        if c0.abs() != BigInt::one() {
            return Err(SeriesError::NonUnit);
        }
        let negative_unit = c0.is_negative();
        let cap = self.cap;
        let rest: Vec<(u32, u32, &BigInt)> = den
            .terms
            .iter()
            .filter(|(&e, _)| e != (0, 0))
            .map(|(&(i, j), c)| (i, j, c))
            .collect();

        let mut q = vec![BigInt::zero(); tri_len(cap)];
        for k in 0..=cap {
            for i in 0..=k {
                let j = k - i;
                let mut v = self.terms.get(&(i, j)).cloned().unwrap_or_default();
                for &(a, b, c) in &rest {
                    if a <= i && b <= j {
                        let prev = &q[tri_index(i - a, j - b)];
                        if !prev.is_zero() {
                            v -= c * prev;
                        }
                    }
                }
                if negative_unit {
                    v = -v;
                }
                q[tri_index(i, j)] = v;
            }
        }
        Ok(Self::from_dense(cap, q))
    }

    /// Substitutes `x = y = t`.
    pub fn specialize_diag(&self) -> UniPoly {
        UniPoly::from_terms(
            Some(self.cap),
            self.terms.iter().map(|(&(i, j), c)| (i + j, c.clone())),
        )
    }

    /// Substitutes `x = t`, `y = -1`.
    pub fn specialize_y_minus1(&self) -> UniPoly {
        UniPoly::from_terms(
            Some(self.cap),
            self.terms
                .iter()
                .map(|(&(i, j), c)| (i, if j % 2 == 0 { c.clone() } else { -c })),
        )
    }

    /// Swaps the roles of `x` and `y`.
    pub fn transpose(&self) -> Self {
        BiSeries {
            cap: self.cap,
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((j, i), c.clone()))
                .collect(),
        }
    }

    /// First exponent (in graded order) where the two series differ,
    /// together with both coefficients. Compares only up to the smaller cap.
    pub fn first_difference(&self, other: &Self) -> Option<((u32, u32), BigInt, BigInt)> {
        let cap = self.cap.min(other.cap);
        let mut keys: Vec<(u32, u32)> = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .copied()
            .filter(|&(i, j)| i + j <= cap)
            .collect();
        keys.sort_by_key(|&(i, j)| (i + j, i));
        keys.dedup();
        keys.into_iter().find_map(|e| {
            let a = self.terms.get(&e).cloned().unwrap_or_default();
            let b = other.terms.get(&e).cloned().unwrap_or_default();
            (a != b).then_some((e, a, b))
        })
    }
}

/// Product with `i128` accumulators when the coefficient sizes make
/// overflow impossible. Returns `None` when the bound does not hold.
fn mul_small(outer: &BiSeries, inner: &[(u32, u32, &BigInt)], cap: u32) -> Option<BiSeries> {
    let bits = |it: &mut dyn Iterator<Item = &BigInt>| it.map(|c| c.bits()).max().unwrap_or(0);
    let a_bits = bits(&mut outer.terms.values());
    let b_bits = bits(&mut inner.iter().map(|t| t.2));
    let n_bits = 64 - (inner.len().min(outer.len()) as u64).leading_zeros() as u64;
    if a_bits + b_bits + n_bits >= 126 {
        return None;
    }
    let inner_small: Vec<(u32, u32, i128)> = inner
        .iter()
        .map(|&(i, j, c)| (i, j, c.to_i128().expect("bit bound checked")))
        .collect();
    let mut acc = vec![0i128; tri_len(cap)];
    for (&(ai, aj), ac) in &outer.terms {
        let ac = ac.to_i128().expect("bit bound checked");
        let room = cap - (ai + aj);
        for &(bi, bj, bc) in &inner_small {
            if bi + bj > room {
                break;
            }
            acc[tri_index(ai + bi, aj + bj)] += ac * bc;
        }
    }
    Some(BiSeries::from_dense(
        cap,
        acc.into_iter().map(BigInt::from).collect(),
    ))
}

impl fmt::Debug for BiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiSeries(cap={}, {})", self.cap, self)
    }
}

impl fmt::Display for BiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by_key(|&&(i, j)| (i + j, std::cmp::Reverse(i)));
        for (n, e) in keys.into_iter().enumerate() {
            let c = &self.terms[e];
            let mono = match *e {
                (0, 0) => String::new(),
                (i, j) => [("x", i), ("y", j)]
                    .iter()
                    .filter(|(_, p)| *p > 0)
                    .map(|&(var, p)| match p {
                        1 => var.to_string(),
                        p => format!("{var}^{p}"),
                    })
                    .collect::<Vec<_>>()
                    .join("*"),
            };
            let mag = c.abs();
            if n == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}
