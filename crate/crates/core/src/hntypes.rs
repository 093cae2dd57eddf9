//! Harder–Narasimhan types of rank `n`, degree `d` bundles and the complex
//! codimension of their strata.
//!
//! A type is the sequence of `(rank, degree)` pairs of the semistable
//! subquotients of the canonical filtration, ordered by strictly decreasing
//! slope. The semistable type is never represented: every [`HnType`] has at
//! least two parts.
//!
//! Slopes are compared by integer cross-multiplication only.

use std::cmp::Ordering;
use std::fmt;

/// One semistable subquotient: rank and degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Part {
    pub rank: u32,
    pub degree: i64,
}

impl Part {
    pub fn new(rank: u32, degree: i64) -> Self {
        Part { rank, degree }
    }

    /// Compares slopes `degree / rank` without division.
    pub fn cmp_slope(&self, other: &Part) -> Ordering {
        (self.degree * other.rank as i64).cmp(&(other.degree * self.rank as i64))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, thiserror::Error)]
pub enum HnTypeError {
    #[error("an unstable type needs at least two parts, got {0}")]
    TooFewParts(usize),
    #[error("part {0} has rank zero")]
    ZeroRank(usize),
    #[error("slopes must strictly decrease after part {0}")]
    SlopeOrder(usize),
}

/// An unstable Harder–Narasimhan type.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HnType {
    parts: Vec<Part>,
}

impl HnType {
    pub fn new(parts: Vec<Part>) -> Result<Self, HnTypeError> {
        if parts.len() < 2 {
            return Err(HnTypeError::TooFewParts(parts.len()));
        }
        if let Some(k) = parts.iter().position(|p| p.rank == 0) {
            return Err(HnTypeError::ZeroRank(k));
        }
        if let Some(k) = parts
            .windows(2)
            .position(|w| w[0].cmp_slope(&w[1]) != Ordering::Greater)
        {
            return Err(HnTypeError::SlopeOrder(k));
        }
        Ok(HnType { parts })
    }

    /// Convenience constructor from `(rank, degree)` pairs.
    pub fn from_pairs(pairs: &[(u32, i64)]) -> Result<Self, HnTypeError> {
        Self::new(pairs.iter().map(|&(r, d)| Part::new(r, d)).collect())
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn rank(&self) -> u32 {
        self.parts.iter().map(|p| p.rank).sum()
    }

    pub fn degree(&self) -> i64 {
        self.parts.iter().map(|p| p.degree).sum()
    }

    pub fn ranks(&self) -> Vec<u32> {
        self.parts.iter().map(|p| p.rank).collect()
    }

    /// Complex codimension of the stratum, by the pairwise sum over
    /// `j < i` of `n_i d_j - n_j d_i + n_i n_j (g - 1)`.
    pub fn codimension(&self, genus: u32) -> i64 {
        let g1 = genus as i64 - 1;
        let mut total = 0;
        for (j, pj) in self.parts.iter().enumerate() {
            for pi in &self.parts[j + 1..] {
                let (ni, nj) = (pi.rank as i64, pj.rank as i64);
                total += ni * pj.degree - nj * pi.degree + ni * nj * g1;
            }
        }
        total
    }

    /// The type obtained by tensoring with a degree `e` line bundle.
    pub fn shift(&self, e: i64) -> HnType {
        HnType {
            parts: self
                .parts
                .iter()
                .map(|p| Part::new(p.rank, p.degree + e * p.rank as i64))
                .collect(),
        }
    }

    fn sort_key(&self) -> (usize, Vec<u32>, Vec<i64>) {
        (
            self.parts.len(),
            self.ranks(),
            self.parts.iter().map(|p| p.degree).collect(),
        )
    }
}

impl fmt::Debug for HnType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HnType{self}")
    }
}

impl fmt::Display for HnType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({}, {})", p.rank, p.degree)?;
        }
        write!(f, "]")
    }
}

impl PartialOrd for HnType {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: number of parts, then ranks, then degrees.
impl Ord for HnType {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

/// Ordered compositions of `n` into at least two positive parts.
pub fn compositions(n: u32) -> Vec<Vec<u32>> {
    fn rec(rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            if cur.len() >= 2 {
                out.push(cur.clone());
            }
            return;
        }
        for k in 1..=rest {
            cur.push(k);
            rec(rest - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// Codimension contributed by the ranks alone: `(g - 1) * sum_{j<i} n_i n_j`.
pub fn base_codimension(ranks: &[u32], genus: u32) -> i64 {
    let mut s = 0i64;
    for (j, &nj) in ranks.iter().enumerate() {
        for &ni in &ranks[j + 1..] {
            s += ni as i64 * nj as i64;
        }
    }
    s * (genus as i64 - 1)
}

/// Every unstable type of rank `n`, degree `d` whose stratum has
/// codimension at most `max_codim`, in canonical order.
///
/// For a fixed composition, the slope spread above the base codimension is
/// `sum_k m_k (n - m_k) (s_k - s_{k+1})` with `m_k` the partial rank sums.
/// Each weight `m_k (n - m_k)` is at least `n - 1`, so every slope lies
/// within `R / (n - 1)` of `d / n`, where `R` is the budget left after the
/// base codimension. That bounds each degree; the partial spread prunes
/// the search as degrees are chosen left to right.
pub fn enumerate_types(n: u32, d: i64, genus: u32, max_codim: i64) -> Vec<HnType> {
    let mut out = Vec::new();
    if n < 2 || max_codim < 0 {
        return out;
    }
    for ranks in compositions(n) {
        let base = base_codimension(&ranks, genus);
        if base > max_codim {
            continue;
        }
        let budget = max_codim - base;
        let search = DegreeSearch::new(&ranks, n, d, budget);
        search.run(&mut Vec::with_capacity(ranks.len()), &mut out);
    }
    for t in &out {
        debug_assert!(t.codimension(genus) <= max_codim);
    }
    out.sort();
    out
}

struct DegreeSearch<'a> {
    ranks: &'a [u32],
    n: i64,
    d: i64,
    /// `m_k (n - m_k)` for the boundary after part `k`.
    weights: Vec<i64>,
    /// Common denominator for the partial spread: lcm of `n_k n_{k+1}`.
    denom: i64,
    budget: i64,
}

impl<'a> DegreeSearch<'a> {
    fn new(ranks: &'a [u32], n: u32, d: i64, budget: i64) -> Self {
        let n = n as i64;
        let mut m = 0i64;
        let weights = ranks[..ranks.len() - 1]
            .iter()
            .map(|&r| {
                m += r as i64;
                m * (n - m)
            })
            .collect();
        let denom = ranks
            .windows(2)
            .map(|w| w[0] as i64 * w[1] as i64)
            .fold(1i64, num_integer::lcm);
        DegreeSearch {
            ranks,
            n,
            d,
            weights,
            denom,
            budget,
        }
    }

    /// Inclusive range of admissible degrees for a part of rank `r`:
    /// `|d_j / r - d / n| <= budget / (n - 1)`.
    fn degree_range(&self, r: i64) -> (i64, i64) {
        let scale = self.n * (self.n - 1);
        let centre = r * self.d * (self.n - 1);
        let spread = r * self.n * self.budget;
        (
            (centre - spread).div_euclid(scale) + i64::from((centre - spread).rem_euclid(scale) != 0),
            (centre + spread).div_euclid(scale),
        )
    }

    /// Spread contributed by boundaries `0..k` in units of `1 / denom`.
    fn partial_spread(&self, degrees: &[i64]) -> i64 {
        let mut s = 0;
        for k in 0..degrees.len().saturating_sub(1) {
            let (nk, nk1) = (self.ranks[k] as i64, self.ranks[k + 1] as i64);
            let gap = degrees[k] * nk1 - degrees[k + 1] * nk;
            s += self.weights[k] * gap * (self.denom / (nk * nk1));
        }
        s
    }

    fn slope_drops(&self, degrees: &[i64]) -> bool {
        let k = degrees.len();
        if k < 2 {
            return true;
        }
        let a = Part::new(self.ranks[k - 2], degrees[k - 2]);
        let b = Part::new(self.ranks[k - 1], degrees[k - 1]);
        a.cmp_slope(&b) == Ordering::Greater
    }

    fn run(&self, degrees: &mut Vec<i64>, out: &mut Vec<HnType>) {
        let k = degrees.len();
        let p = self.ranks.len();
        if k == p - 1 {
            let last = self.d - degrees.iter().sum::<i64>();
            degrees.push(last);
            if self.slope_drops(degrees)
                && self.partial_spread(degrees) <= self.budget * self.denom
            {
                let parts = self
                    .ranks
                    .iter()
                    .zip(degrees.iter())
                    .map(|(&r, &deg)| Part::new(r, deg))
                    .collect();
                out.push(HnType::new(parts).expect("search only emits valid types"));
            }
            degrees.pop();
            return;
        }
        let (lo, hi) = self.degree_range(self.ranks[k] as i64);
        for deg in lo..=hi {
            degrees.push(deg);
            if self.slope_drops(degrees)
                && self.partial_spread(degrees) <= self.budget * self.denom
            {
                self.run(degrees, out);
            }
            degrees.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(pairs: &[(u32, i64)]) -> HnType {
        HnType::from_pairs(pairs).unwrap()
    }

    /// Exhaustive search over a generous degree box, checked with the
    /// codimension formula directly.
    fn brute_force(n: u32, d: i64, g: u32, max_codim: i64) -> Vec<HnType> {
        fn fill(
            ranks: &[u32],
            d: i64,
            g: u32,
            max_codim: i64,
            bound: i64,
            degs: &mut Vec<i64>,
            out: &mut Vec<HnType>,
        ) {
            if degs.len() == ranks.len() - 1 {
                let mut all = degs.clone();
                all.push(d - degs.iter().sum::<i64>());
                let parts = ranks.iter().zip(&all).map(|(&r, &x)| Part::new(r, x)).collect();
                if let Ok(t) = HnType::new(parts) {
                    if t.codimension(g) <= max_codim {
                        out.push(t);
                    }
                }
                return;
            }
            for x in -bound..=bound {
                degs.push(x);
                fill(ranks, d, g, max_codim, bound, degs, out);
                degs.pop();
            }
        }
        let bound = 2 * max_codim + 2 * d.abs() + 4;
        let mut out = Vec::new();
        for ranks in compositions(n) {
            fill(&ranks, d, g, max_codim, bound, &mut Vec::new(), &mut out);
        }
        out.sort();
        out
    }

    #[test]
    fn rejects_invalid_types() {
        assert_eq!(
            HnType::from_pairs(&[(2, 1)]).unwrap_err(),
            HnTypeError::TooFewParts(1)
        );
        assert_eq!(
            HnType::from_pairs(&[(1, 0), (1, 0)]).unwrap_err(),
            HnTypeError::SlopeOrder(0)
        );
        assert_eq!(
            HnType::from_pairs(&[(2, 2), (1, 1)]).unwrap_err(),
            HnTypeError::SlopeOrder(0)
        );
        assert_eq!(
            HnType::from_pairs(&[(0, 2), (1, 1)]).unwrap_err(),
            HnTypeError::ZeroRank(0)
        );
    }

    #[test]
    fn codimension_examples() {
        for g in 2..6u32 {
            for r in 0..5i64 {
                assert_eq!(ty(&[(1, r + 1), (1, -r)]).codimension(g), 2 * r + g as i64);
            }
            for r in 1..5i64 {
                // (2, r), (1, 1 - r): slope r/2 > 1 - r needs r >= 1
                assert_eq!(
                    ty(&[(2, r), (1, 1 - r)]).codimension(g),
                    3 * r + 2 * g as i64 - 4
                );
            }
            for (d1, d2, d3) in [(1, 0, 0), (2, 0, -1), (3, -1, -1), (4, 1, -4)] {
                if d1 > d2 && d2 > d3 {
                    assert_eq!(
                        ty(&[(1, d1), (1, d2), (1, d3)]).codimension(g),
                        2 * (d1 - d3) + 3 * (g as i64 - 1)
                    );
                }
            }
        }
    }

    #[test]
    fn shift_examples() {
        let mu = ty(&[(1, 1), (1, 0)]);
        assert_eq!(mu.shift(1), ty(&[(1, 2), (1, 1)]));
        assert_eq!(mu.shift(0), mu);
        let nu = ty(&[(2, 3), (1, -2)]);
        assert_eq!(nu.shift(-2).codimension(3), nu.codimension(3));
    }

    #[test]
    fn enumeration_examples() {
        for d in -3..4 {
            assert!(enumerate_types(1, d, 2, 50).is_empty());
        }
        assert_eq!(
            enumerate_types(2, 1, 2, 6),
            vec![ty(&[(1, 1), (1, 0)]), ty(&[(1, 2), (1, -1)]), ty(&[(1, 3), (1, -2)])]
        );
        assert_eq!(
            enumerate_types(2, 0, 2, 5),
            vec![ty(&[(1, 1), (1, -1)]), ty(&[(1, 2), (1, -2)])]
        );
    }

    #[test]
    fn rank_two_count_closed_form() {
        for g in 2..6u32 {
            for dmax in 0..30i64 {
                let expect = ((dmax - g as i64).div_euclid(2) + 1).max(0) as usize;
                assert_eq!(enumerate_types(2, 1, g, dmax).len(), expect, "g={g} D={dmax}");
            }
        }
    }

    #[test]
    fn matches_brute_force() {
        for (n, d, g, dmax) in [
            (2, 1, 2, 9),
            (2, 0, 3, 10),
            (3, 1, 2, 12),
            (3, 2, 2, 11),
            (3, 0, 3, 14),
            (3, -4, 2, 10),
            (4, 1, 2, 11),
            (4, 3, 2, 10),
        ] {
            assert_eq!(
                enumerate_types(n, d, g, dmax),
                brute_force(n, d, g, dmax),
                "n={n} d={d} g={g} D={dmax}"
            );
        }
    }

    #[test]
    fn decomposition_identity() {
        // codim = base + sum_k m_k (n - m_k) (s_k - s_{k+1}), cleared of
        // denominators by multiplying with prod_k n_k.
        for (n, d, g) in [(3, 1, 2), (4, 1, 3), (4, 2, 2), (5, 2, 2)] {
            for t in enumerate_types(n, d, g, 16) {
                let ranks = t.ranks();
                let degs: Vec<i64> = t.parts().iter().map(|p| p.degree).collect();
                let prod: i64 = ranks.iter().map(|&r| r as i64).product();
                let mut m = 0i64;
                let mut spread = 0i64;
                for k in 0..ranks.len() - 1 {
                    m += ranks[k] as i64;
                    let (nk, nk1) = (ranks[k] as i64, ranks[k + 1] as i64);
                    let gap = degs[k] * nk1 - degs[k + 1] * nk;
                    spread += m * (n as i64 - m) * gap * (prod / (nk * nk1));
                }
                assert_eq!(
                    t.codimension(g) * prod,
                    base_codimension(&ranks, g) * prod + spread,
                    "{t}"
                );
            }
        }
    }

    #[test]
    fn slopes_straddle_average() {
        for (n, d) in [(3, 1), (4, 3), (5, 2)] {
            for t in enumerate_types(n, d, 2, 14) {
                let first = t.parts()[0];
                let last = *t.parts().last().unwrap();
                assert!(first.degree * n as i64 > d * first.rank as i64);
                assert!(last.degree * (n as i64) < d * last.rank as i64);
                assert!(t.codimension(2) > 0);
            }
        }
    }

    #[test]
    fn canonical_order() {
        let ts = enumerate_types(3, 1, 2, 12);
        let mut sorted = ts.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(ts, sorted);
        assert!(ts.windows(2).all(|w| w[0].len() <= w[1].len()));
    }
}
