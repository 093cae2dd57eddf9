//! Hodge–Poincaré series of moduli spaces of stable bundles.
//!
//! The central object is the equivariant series `F_{n,d}(x, y)` of the
//! semistable stratum, defined by induction on the rank:
//!
//! ```text
//! F_{n,d} = A_n - sum_{mu unstable} (xy)^{d_mu} prod_j F_{n_j, d_j}
//! ```
//!
//! where `A_n` is the ambient series of [`ambient_hp`] and the sum runs over
//! the Harder–Narasimhan types of [`crate::hntypes`]. For coprime `(n, d)`,
//! `(1 - xy) F_{n,d}` is the Hodge–Poincaré polynomial of the moduli space,
//! and dividing out the Jacobian factor `(1 + x)^g (1 + y)^g` gives the
//! fixed-determinant space.
//!
//! [`HodgeEngine`] memoizes `F` on `d mod n`, since `F_{n,d}` is invariant
//! under `d -> d + n e`. The invariance is checked independently by
//! [`HodgeEngine::f_series_exact_degree`], which never reduces degrees.

mod cache;
mod report;

pub use cache::{DiskCache, CACHE_FORMAT_VERSION};
pub use report::{HodgeNumber, HodgeReport, Variant};

use std::collections::{BTreeMap, HashMap};
use std::path::PathBuf;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hntypes::{enumerate_types, HnType};
use crate::series::{BiSeries, UniPoly};

/// Complex dimension of the full moduli space: `n^2 (g - 1) + 1`.
pub fn full_dimension(n: u32, g: u32) -> u32 {
    n * n * (g - 1) + 1
}

/// Complex dimension of the fixed-determinant space: `(n^2 - 1)(g - 1)`.
pub fn fixed_dimension(n: u32, g: u32) -> u32 {
    (n * n - 1) * (g - 1)
}

/// Truncation used when none is requested: two above twice the dimension
/// of the full space, so the polynomial cutoff check is not vacuous.
pub fn default_cap(n: u32, g: u32) -> u32 {
    2 * full_dimension(n, g) + 2
}

/// Key of a memoized `F_{n,d}` series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MemoKey {
    pub n: u32,
    pub d_residue: u32,
    pub g: u32,
    pub cap: u32,
}

impl MemoKey {
    pub fn new(n: u32, d: i64, g: u32, cap: u32) -> Self {
        MemoKey {
            n,
            d_residue: d.rem_euclid(n as i64) as u32,
            g,
            cap,
        }
    }
}

fn check_domain(n: u32, g: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::RankZero);
    }
    if g < 2 {
        return Err(Error::GenusTooSmall(g));
    }
    Ok(())
}

fn check_coprime(n: u32, d: i64) -> Result<()> {
    if (n as i64).gcd(&d) != 1 {
        return Err(Error::NotCoprime { n, d });
    }
    Ok(())
}

/// `(1 + x)^g (1 + y)^g`, the Hodge–Poincaré polynomial of the Jacobian.
pub fn jacobian_factor(g: u32, cap: u32) -> BiSeries {
    BiSeries::one_plus(1, 0, cap)
        .pow(g)
        .mul(&BiSeries::one_plus(0, 1, cap).pow(g))
        .expect("shared cap")
}

/// Equivariant Hodge–Poincaré series of the space of all holomorphic
/// structures:
///
/// ```text
/// prod_{l=1}^{n} (1 + x^l y^{l-1})^g (1 + x^{l-1} y^l)^g
/// ------------------------------------------------------
///   (1 - x^n y^n) prod_{l=1}^{n-1} (1 - x^l y^l)^2
/// ```
pub fn ambient_hp(n: u32, g: u32, cap: u32) -> BiSeries {
    let mut acc = BiSeries::geom(n, n, cap).expect("n >= 1");
    for l in 1..=n {
        let a = BiSeries::one_plus(l, l - 1, cap).pow(g);
        let b = BiSeries::one_plus(l - 1, l, cap).pow(g);
        acc = acc.mul(&a).and_then(|s| s.mul(&b)).expect("shared cap");
    }
    for l in 1..n {
        let inv = BiSeries::geom(l, l, cap).expect("l >= 1").pow(2);
        acc = acc.mul(&inv).expect("shared cap");
    }
    acc
}

/// Residue class of a type: each part as `(rank, degree mod rank)`.
type ResidueParts = Vec<(u32, u32)>;

#[derive(Default)]
pub struct HodgeEngine {
    memo: Mutex<HashMap<MemoKey, Arc<BiSeries>>>,
    ambient: Mutex<HashMap<(u32, u32, u32), Arc<BiSeries>>>,
    cache: Option<DiskCache>,
}

impl HodgeEngine {
    pub fn new() -> Self {
        Self::default()
    }

    /// An engine that also reads and writes `F` series under `dir`.
    pub fn with_cache_dir(dir: impl Into<PathBuf>) -> Result<Self> {
        Ok(HodgeEngine {
            cache: Some(DiskCache::open(dir)?),
            ..Self::default()
        })
    }

    pub fn disk_cache(&self) -> Option<&DiskCache> {
        self.cache.as_ref()
    }

    /// Number of `F` series held in memory.
    pub fn memo_len(&self) -> usize {
        self.memo.lock().unwrap().len()
    }

    pub fn ambient_hp(&self, n: u32, g: u32, cap: u32) -> Result<Arc<BiSeries>> {
        check_domain(n, g)?;
        if let Some(s) = self.ambient.lock().unwrap().get(&(n, g, cap)) {
            return Ok(Arc::clone(s));
        }
        let s = Arc::new(ambient_hp(n, g, cap));
        self.ambient
            .lock()
            .unwrap()
            .entry((n, g, cap))
            .or_insert_with(|| Arc::clone(&s));
        Ok(s)
    }

    /// `F_{n,d}` truncated at `cap`. Coprimality is not required.
    pub fn f_series(&self, n: u32, d: i64, g: u32, cap: u32) -> Result<Arc<BiSeries>> {
        check_domain(n, g)?;
        let key = MemoKey::new(n, d, g, cap);
        if let Some(s) = self.memo.lock().unwrap().get(&key) {
            return Ok(Arc::clone(s));
        }
        if let Some(s) = self.cache.as_ref().and_then(|c| c.load(&key)) {
            let s = Arc::new(s);
            self.memo.lock().unwrap().insert(key, Arc::clone(&s));
            return Ok(s);
        }

        let mut f = (*self.ambient_hp(n, g, cap)?).clone();
        for (_, correction) in self.corrections_by_composition(n, key.d_residue as i64, g, cap)? {
            f.add_assign_unchecked(&correction, true);
        }
        let f = Arc::new(f);
        if let Some(c) = &self.cache {
            // The disk cache is advisory; a failed write only costs a recompute.
            let _ = c.store(&key, &f);
        }
        // Concurrent computations of the same key produce identical series.
        let mut memo = self.memo.lock().unwrap();
        Ok(Arc::clone(memo.entry(key).or_insert(f)))
    }

    /// The unstable-strata correction `sum (xy)^{d_mu} prod_j F_{n_j,d_j}`
    /// split by the rank composition of `mu`.
    ///
    /// Types sharing a composition and the residues `d_j mod n_j` share the
    /// product of `F` factors, so each such class costs one product plus a
    /// cheap sum of monomial shifts.
    pub fn corrections_by_composition(
        &self,
        n: u32,
        d: i64,
        g: u32,
        cap: u32,
    ) -> Result<BTreeMap<Vec<u32>, BiSeries>> {
        check_domain(n, g)?;
        let mut classes: BTreeMap<ResidueParts, Vec<u32>> = BTreeMap::new();
        for mu in enumerate_types(n, d, g, (cap / 2) as i64) {
            let parts = mu
                .parts()
                .iter()
                .map(|p| (p.rank, p.degree.rem_euclid(p.rank as i64) as u32))
                .collect();
            classes
                .entry(parts)
                .or_default()
                .push(mu.codimension(g) as u32);
        }

        let pieces: Vec<(Vec<u32>, BiSeries)> = classes
            .into_par_iter()
            .map(|(parts, codims)| {
                let mut product = BiSeries::one(cap);
                for &(rank, residue) in &parts {
                    product = product.mul(&*self.f_series(rank, residue as i64, g, cap)?)?;
                }
                let mut sum = BiSeries::zero(cap);
                for c in codims {
                    sum.add_assign_unchecked(&product.shift(c, c), false);
                }
                let ranks = parts.iter().map(|&(r, _)| r).collect();
                Ok((ranks, sum))
            })
            .collect::<Result<_>>()?;

        let mut out: BTreeMap<Vec<u32>, BiSeries> = BTreeMap::new();
        for (ranks, piece) in pieces {
            out.entry(ranks)
                .or_insert_with(|| BiSeries::zero(cap))
                .add_assign_unchecked(&piece, false);
        }
        Ok(out)
    }

    /// `F_{n,d}` computed type by type with the actual degrees `d_j`,
    /// never reducing a degree modulo the rank. Used to check the
    /// `d -> d + n e` invariance that [`HodgeEngine::f_series`] relies on.
    pub fn f_series_exact_degree(&self, n: u32, d: i64, g: u32, cap: u32) -> Result<BiSeries> {
        check_domain(n, g)?;
        let mut memo = HashMap::new();
        self.f_exact_rec(n, d, g, cap, &mut memo)
    }

    fn f_exact_rec(
        &self,
        n: u32,
        d: i64,
        g: u32,
        cap: u32,
        memo: &mut HashMap<(u32, i64), BiSeries>,
    ) -> Result<BiSeries> {
        if let Some(s) = memo.get(&(n, d)) {
            return Ok(s.clone());
        }
        let mut f = (*self.ambient_hp(n, g, cap)?).clone();
        let types: Vec<HnType> = enumerate_types(n, d, g, (cap / 2) as i64);
        for mu in types {
            let c = mu.codimension(g) as u32;
            let mut term = BiSeries::one(cap).shift(c, c);
            for p in mu.parts() {
                let factor = self.f_exact_rec(p.rank, p.degree, g, cap, memo)?;
                term = term.mul(&factor)?;
            }
            f.add_assign_unchecked(&term, true);
        }
        memo.insert((n, d), f.clone());
        Ok(f)
    }

    /// Hodge–Poincaré polynomial of the full moduli space `M(n, d)`.
    pub fn hp_full(&self, n: u32, d: i64, g: u32) -> Result<BiSeries> {
        self.hp_full_with_cap(n, d, g, None)
    }

    pub fn hp_full_with_cap(&self, n: u32, d: i64, g: u32, cap: Option<u32>) -> Result<BiSeries> {
        check_domain(n, g)?;
        check_coprime(n, d)?;
        let top = full_dimension(n, g);
        let cap = resolve_cap(n, g, cap)?;
        let f = self.f_series(n, d, g, cap)?;
        let hp = f.mul(&BiSeries::one_minus(1, 1, cap))?;
        check_polynomial(&hp, top, "polynomial cutoff of (1 - xy) F")?;
        Ok(hp)
    }

    /// Hodge–Poincaré polynomial of the fixed-determinant space.
    pub fn hp_fixed_det(&self, n: u32, d: i64, g: u32) -> Result<BiSeries> {
        self.hp_fixed_det_with_cap(n, d, g, None)
    }

    pub fn hp_fixed_det_with_cap(
        &self,
        n: u32,
        d: i64,
        g: u32,
        cap: Option<u32>,
    ) -> Result<BiSeries> {
        let full = self.hp_full_with_cap(n, d, g, cap)?;
        let cap = full.cap();
        let q = full.div_exact(&jacobian_factor(g, cap))?;
        check_polynomial(&q, fixed_dimension(n, g), "Jacobian factor division")?;
        Ok(q)
    }

    /// `chi(t)` of the fixed-determinant space: its polynomial at `y = -1`.
    pub fn chi_characteristic(&self, n: u32, d: i64, g: u32) -> Result<UniPoly> {
        Ok(self.hp_fixed_det(n, d, g)?.specialize_y_minus1().into_exact())
    }

    /// Euler characteristic and signature of the fixed-determinant space,
    /// `chi(-1)` and `chi(1)`. Both vanish for `n >= 2`; for `n = 1` the
    /// space is a point and both are 1.
    pub fn euler_and_signature(&self, n: u32, d: i64, g: u32) -> Result<(BigInt, BigInt)> {
        let chi = self.chi_characteristic(n, d, g)?;
        let euler = chi.eval(&BigInt::from(-1));
        let signature = chi.eval(&BigInt::one());
        if n >= 2 && !(euler.is_zero() && signature.is_zero()) {
            return Err(Error::consistency(
                "vanishing Euler characteristic and signature",
                format!("chi(-1) = {euler}, chi(1) = {signature}"),
            ));
        }
        Ok((euler, signature))
    }

    pub fn report(&self, n: u32, d: i64, g: u32, variant: Variant) -> Result<HodgeReport> {
        self.report_with_cap(n, d, g, variant, None)
    }

    pub fn report_with_cap(
        &self,
        n: u32,
        d: i64,
        g: u32,
        variant: Variant,
        cap: Option<u32>,
    ) -> Result<HodgeReport> {
        let poly = match variant {
            Variant::Full => self.hp_full_with_cap(n, d, g, cap)?,
            Variant::FixedDeterminant => self.hp_fixed_det_with_cap(n, d, g, cap)?,
        };
        HodgeReport::from_polynomial(n, d, g, variant, &poly)
    }
}

fn resolve_cap(n: u32, g: u32, cap: Option<u32>) -> Result<u32> {
    let needed = 2 * full_dimension(n, g);
    match cap {
        None => Ok(default_cap(n, g)),
        Some(c) if c < needed => Err(Error::CapTooSmall { cap: c, needed }),
        Some(c) => Ok(c),
    }
}

/// Checks that `p` is a polynomial of top bidegree `(dim, dim)` with
/// `h^{dim,dim} = 1`.
fn check_polynomial(p: &BiSeries, dim: u32, what: &str) -> Result<()> {
    if !p.is_polynomial_below(2 * dim) {
        let ((i, j), c) = p
            .terms()
            .find(|&((i, j), _)| i + j > 2 * dim)
            .expect("some term above the bound");
        return Err(Error::consistency(
            what,
            format!("nonzero coefficient {c} at x^{i} y^{j} above total degree {}", 2 * dim),
        ));
    }
    let top = p.coefficient(dim, dim)?;
    if !top.is_one() {
        return Err(Error::consistency(
            what,
            format!("coefficient of x^{dim} y^{dim} is {top}, expected 1"),
        ));
    }
    Ok(())
}
