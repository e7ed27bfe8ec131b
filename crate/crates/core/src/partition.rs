//! Partitions, beta-sets and d-hook combinatorics.
//!
//! A partition is stored as its non-increasing list of positive parts;
//! trailing zeros are never stored. A beta-set is a strictly decreasing list
//! of distinct non-negative integers; `beta_set(lambda, s)` produces the
//! first-column-hook encoding `{lambda_i + s - i}` of length `s`, and adding
//! a d-hook at `x` moves the bead `x` to `x + d` on the abacus.
//!
//! The two numerical invariants attached to a hook addition are
//! `hook_degree` (the cohomological degree `2(n-1+x-#{y<x}) - #{x<y<x+d}`)
//! and `frobenius_exponent` (`n + x - #X`); both are invariant under the
//! beta-set shift `X -> (X+1) u {0}`.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

use crate::{Error, Result};

/// A partition of `n`: non-increasing positive parts, sum cached.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
    n: u32,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Errors when the sequence
    /// increases or contains an interior zero.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidArgument(format!(
                    "parts not non-increasing: {parts:?}"
                )));
            }
        }
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(format!(
                "interior zero part: {parts:?}"
            )));
        }
        let n = parts.iter().sum();
        Ok(Partition { parts, n })
    }

    pub fn empty() -> Self {
        Partition {
            parts: Vec::new(),
            n: 0,
        }
    }

    /// The one-row partition `(k)`; `(0)` is the empty partition.
    pub fn row(k: u32) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition {
                parts: vec![k],
                n: k,
            }
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.n
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_rectangle(&self) -> bool {
        !self.parts.is_empty() && self.parts.iter().all(|&x| x == self.parts[0])
    }

    /// Conjugate partition.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut parts = Vec::with_capacity(cols);
        for j in 1..=cols {
            parts.push(self.parts.iter().filter(|&&x| x as usize >= j).count() as u32);
        }
        Partition {
            parts,
            n: self.n,
        }
    }

    /// Key for JSON maps: parts joined by '+', e.g. "3+2"; "" for the empty
    /// partition.
    pub fn key(&self) -> String {
        self.parts
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join("+")
    }

    /// Parses "3+2", "3,2" or "3 2".
    pub fn parse(s: &str) -> Result<Partition> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Vec<u32> = trimmed
            .split(|c: char| c == '+' || c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| Error::InvalidArgument(format!("bad partition token {t:?}")))
            })
            .collect::<Result<_>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

impl fmt::Display for Partition {
    /// Exponent-compressed form: `(2^2,1)`, `(1^5)`, `()`.
    fn fmt(&self, fmt: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fmt, "(")?;
        let mut i = 0;
        let mut first = true;
        while i < self.parts.len() {
            let v = self.parts[i];
            let mut j = i;
            while j < self.parts.len() && self.parts[j] == v {
                j += 1;
            }
            if !first {
                write!(fmt, ",")?;
            }
            first = false;
            if j - i > 1 {
                write!(fmt, "{}^{}", v, j - i)?;
            } else {
                write!(fmt, "{v}")?;
            }
            i = j;
        }
        write!(fmt, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, fmt: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fmt, "{self}")
    }
}

/// A beta-set: strictly decreasing distinct non-negative integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct BetaSet {
    elements: Vec<u32>,
}

impl BetaSet {
    pub fn new(elements: Vec<u32>) -> Result<Self> {
        for w in elements.windows(2) {
            if w[0] <= w[1] {
                return Err(Error::InvalidArgument(format!(
                    "beta-set not strictly decreasing: {elements:?}"
                )));
            }
        }
        Ok(BetaSet { elements })
    }

    pub fn from_set(set: &BTreeSet<u32>) -> Self {
        let mut elements: Vec<u32> = set.iter().copied().collect();
        elements.reverse();
        BetaSet { elements }
    }

    /// Decreasing order.
    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.elements.contains(&x)
    }

    /// The partition encoded by this beta-set (zeros dropped).
    pub fn partition(&self) -> Partition {
        let s = self.elements.len();
        let mut parts = Vec::new();
        for (idx, &x) in self.elements.iter().enumerate() {
            let gap = (s - 1 - idx) as u32;
            let part = x - gap;
            if part > 0 {
                parts.push(part);
            }
        }
        let n = parts.iter().sum();
        Partition { parts, n }
    }

    /// The shift `X -> (X + 1) u {0}` (same partition, one more slot).
    pub fn shift(&self) -> BetaSet {
        let mut elements: Vec<u32> = self.elements.iter().map(|&x| x + 1).collect();
        elements.push(0);
        BetaSet { elements }
    }

    /// All `x` with `x + d` not in the set, in decreasing order.
    pub fn addable_hooks(&self, d: u32) -> Vec<u32> {
        self.elements
            .iter()
            .copied()
            .filter(|&x| !self.contains(x + d))
            .collect()
    }

    /// The addable hooks as sites `(x, x + d)`.
    pub fn addable_hook_sites(&self, d: u32) -> Vec<HookSite> {
        self.addable_hooks(d)
            .into_iter()
            .map(|x| HookSite { x, d })
            .collect()
    }

    /// Moves the bead `x` to `x + d`, i.e. adds a d-hook; returns the grown
    /// partition.
    pub fn add_hook(&self, x: u32, d: u32) -> Result<Partition> {
        if !self.contains(x) {
            return Err(Error::InvalidHook(format!("{x} not in beta-set")));
        }
        if self.contains(x + d) {
            return Err(Error::InvalidHook(format!(
                "{} already occupied, hook ({x},{}) not addable",
                x + d,
                x + d
            )));
        }
        let mut set: BTreeSet<u32> = self.elements.iter().copied().collect();
        set.remove(&x);
        set.insert(x + d);
        Ok(BetaSet::from_set(&set).partition())
    }

    /// Moves the bead `x` to `x - d` (removes a d-hook).
    pub fn remove_hook(&self, x: u32, d: u32) -> Result<Partition> {
        if !self.contains(x) {
            return Err(Error::InvalidHook(format!("{x} not in beta-set")));
        }
        if x < d || self.contains(x - d) {
            return Err(Error::InvalidHook(format!("hook at {x} of length {d} not removable")));
        }
        let mut set: BTreeSet<u32> = self.elements.iter().copied().collect();
        set.remove(&x);
        set.insert(x - d);
        Ok(BetaSet::from_set(&set).partition())
    }

    /// Number of beads strictly between `x` and `x + d` (the leg length of
    /// the added hook).
    pub fn leg_count(&self, x: u32, d: u32) -> Result<u32> {
        if !self.contains(x) {
            return Err(Error::InvalidHook(format!("{x} not in beta-set")));
        }
        Ok(self
            .elements
            .iter()
            .filter(|&&y| y > x && y < x + d)
            .count() as u32)
    }

    fn count_below(&self, x: u32) -> u32 {
        self.elements.iter().filter(|&&y| y < x).count() as u32
    }

    /// Cohomological degree of the hook addition at `x`:
    /// `2(n - 1 + x - #{y < x}) - #{x < y < x + d}`.
    ///
    /// Requires the hook to be addable and the partition of the beta-set to
    /// have size `n - d`.
    pub fn hook_degree(&self, x: u32, n: u32, d: u32) -> Result<i64> {
        if !self.contains(x) || self.contains(x + d) {
            return Err(Error::InvalidHook(format!("hook ({x},{}) not addable", x + d)));
        }
        if self.partition().size() + d != n {
            return Err(Error::InvalidArgument(format!(
                "beta-set encodes a partition of {}, expected {}",
                self.partition().size(),
                n - d
            )));
        }
        let legs = self.leg_count(x, d)? as i64;
        Ok(2 * (n as i64 - 1 + x as i64 - self.count_below(x) as i64) - legs)
    }

    /// Frobenius eigenvalue exponent of the hook addition at `x`:
    /// `n + x - #X`.
    pub fn frobenius_exponent(&self, x: u32, n: u32) -> Result<i64> {
        if !self.contains(x) {
            return Err(Error::InvalidHook(format!("{x} not in beta-set")));
        }
        Ok(n as i64 + x as i64 - self.elements.len() as i64)
    }
}

impl TryFrom<Vec<u32>> for BetaSet {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        BetaSet::new(v)
    }
}

impl From<BetaSet> for Vec<u32> {
    fn from(b: BetaSet) -> Vec<u32> {
        b.elements
    }
}

impl fmt::Debug for BetaSet {
    fn fmt(&self, fmt: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fmt, "{{")?;
        for (i, x) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(fmt, ",")?;
            }
            write!(fmt, "{x}")?;
        }
        write!(fmt, "}}")
    }
}

/// An addable d-hook site `(x, x + d)` of an ambient beta-set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HookSite {
    pub x: u32,
    pub d: u32,
}

/// The beta-set `{lambda_i + s - i : 1 <= i <= s}` (zero parts appended up
/// to length `s`). Errors when `s` is smaller than the number of parts.
pub fn beta_set(lambda: &Partition, s: usize) -> Result<BetaSet> {
    if s < lambda.num_parts() {
        return Err(Error::InvalidArgument(format!(
            "beta-set length {s} smaller than {} parts",
            lambda.num_parts()
        )));
    }
    let mut elements = Vec::with_capacity(s);
    for i in 0..s {
        let part = lambda.parts().get(i).copied().unwrap_or(0);
        elements.push(part + (s - 1 - i) as u32);
    }
    Ok(BetaSet { elements })
}

/// A beta-set of `lambda` that is saturated for d-hook moves: its smallest
/// `d` entries are exactly `{0, 1, ..., d-1}`, so further shifts create no
/// new addable hooks.
pub fn saturated_beta_set(lambda: &Partition, d: u32) -> BetaSet {
    beta_set(lambda, lambda.num_parts() + d as usize).expect("length >= parts")
}

/// All hook lengths of the Young diagram, sorted increasing.
pub fn hook_multiset(lambda: &Partition) -> Vec<u32> {
    let conj = lambda.conjugate();
    let mut hooks = Vec::with_capacity(lambda.size() as usize);
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 1..=row {
            let arm = row - j;
            let leg = conj.parts()[(j - 1) as usize] - (i as u32 + 1);
            hooks.push(arm + leg + 1);
        }
    }
    hooks.sort_unstable();
    hooks
}

/// `lambda_1 + (number of parts) - 1`; errors on the empty partition.
pub fn largest_hook(lambda: &Partition) -> Result<u32> {
    if lambda.is_empty() {
        return Err(Error::InvalidArgument(
            "largest hook of the empty partition".into(),
        ));
    }
    Ok(lambda.parts()[0] + lambda.num_parts() as u32 - 1)
}

/// True when the diagram has no hook of length exactly `m`.
pub fn is_m_core(lambda: &Partition, m: u32) -> bool {
    assert!(m >= 1);
    !hook_multiset(lambda).contains(&m)
}

/// Greedily removes m-hooks until none remain. The result is independent of
/// the removal order (tested exhaustively elsewhere).
pub fn m_core(lambda: &Partition, m: u32) -> Partition {
    assert!(m >= 1);
    let mut set: BTreeSet<u32> = beta_set(lambda, lambda.num_parts())
        .expect("exact length")
        .elements()
        .iter()
        .copied()
        .collect();
    loop {
        let mov = set
            .iter()
            .rev()
            .copied()
            .find(|&x| x >= m && !set.contains(&(x - m)));
        match mov {
            Some(x) => {
                set.remove(&x);
                set.insert(x - m);
            }
            None => break,
        }
    }
    BetaSet::from_set(&set).partition()
}

/// All partitions of `n - 1` obtained by removing one removable corner.
/// Errors on the empty partition.
pub fn removable_corners(lambda: &Partition) -> Result<Vec<Partition>> {
    if lambda.is_empty() {
        return Err(Error::InvalidArgument(
            "removable corners of the empty partition".into(),
        ));
    }
    let parts = lambda.parts();
    let mut out = Vec::new();
    for i in 0..parts.len() {
        let next = parts.get(i + 1).copied().unwrap_or(0);
        if parts[i] > next {
            let mut newparts = parts.to_vec();
            newparts[i] -= 1;
            out.push(Partition::new(newparts).expect("corner removal stays valid"));
        }
    }
    Ok(out)
}

/// Dominance order: partial sums of `lambda` weakly exceed those of `mu`.
/// Errors when the sizes differ.
pub fn dominates(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if lambda.size() != mu.size() {
        return Err(Error::InvalidArgument(format!(
            "dominance needs equal sizes, got {} and {}",
            lambda.size(),
            mu.size()
        )));
    }
    let len = lambda.num_parts().max(mu.num_parts());
    let mut sl = 0i64;
    let mut sm = 0i64;
    for i in 0..len {
        sl += lambda.parts().get(i).copied().unwrap_or(0) as i64;
        sm += mu.parts().get(i).copied().unwrap_or(0) as i64;
        if sl < sm {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn gen(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            let parts = cur.clone();
            let n = parts.iter().sum();
            out.push(Partition { parts, n });
            return;
        }
        let top = rest.min(max);
        for k in (1..=top).rev() {
            cur.push(k);
            gen(rest - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    gen(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn bs(e: &[u32]) -> BetaSet {
        BetaSet::new(e.to_vec()).unwrap()
    }

    #[test]
    fn beta_set_basics() {
        assert_eq!(beta_set(&p(&[3, 2]), 2).unwrap(), bs(&[4, 2]));
        assert_eq!(beta_set(&p(&[1]), 5).unwrap(), bs(&[5, 3, 2, 1, 0]));
        assert_eq!(beta_set(&Partition::empty(), 3).unwrap(), bs(&[2, 1, 0]));
        assert!(beta_set(&p(&[3, 2]), 1).is_err());
    }

    #[test]
    fn partition_of_beta_set() {
        assert_eq!(bs(&[4, 2]).partition(), p(&[3, 2]));
        assert_eq!(bs(&[7, 5, 2, 1, 0]).partition(), p(&[3, 2]));
        assert_eq!(bs(&[2, 1, 0]).partition(), Partition::empty());
        // shift-invariance oracle for {7,5,2,1,0}: add a zero part, recompute
        let x = beta_set(&p(&[3, 2]), 5).unwrap();
        assert_eq!(x, bs(&[7, 5, 2, 1, 0]));
    }

    #[test]
    fn addable_hooks_cases() {
        let x = bs(&[5, 3, 2, 1, 0]);
        assert_eq!(x.addable_hooks(4), vec![5, 3, 2, 0]);
        let sites = x.addable_hook_sites(4);
        assert_eq!(sites.len(), 4);
        assert!(sites.iter().all(|s| s.d == 4 && !x.contains(s.x + s.d)));
        // n - d >= d: all of X is addable, e.g. (n,d) = (7,3)
        let y = bs(&[7, 2, 1, 0]);
        assert_eq!(y.addable_hooks(3), vec![7, 2, 1, 0]);
        let z = bs(&[0]);
        assert_eq!(z.addable_hooks(1), vec![0]);
    }

    #[test]
    fn add_hook_cases() {
        let x = bs(&[5, 3, 2, 1, 0]);
        assert_eq!(x.add_hook(2, 4).unwrap(), p(&[2, 2, 1]));
        assert_eq!(x.add_hook(5, 4).unwrap(), p(&[5]));
        assert_eq!(x.add_hook(3, 4).unwrap(), p(&[3, 2]));
        assert!(x.add_hook(4, 4).is_err()); // 4 not in X
        assert!(x.add_hook(1, 4).is_err()); // 1 + 4 = 5 occupied
    }

    #[test]
    fn leg_counts() {
        let x = bs(&[5, 3, 2, 1, 0]);
        assert_eq!(x.leg_count(0, 4).unwrap(), 3);
        assert_eq!(x.leg_count(5, 4).unwrap(), 0);
        assert_eq!(x.leg_count(2, 4).unwrap(), 2);
    }

    #[test]
    fn hook_degrees_x54() {
        let x = bs(&[5, 3, 2, 1, 0]);
        assert_eq!(x.hook_degree(5, 5, 4).unwrap(), 10);
        assert_eq!(x.hook_degree(0, 5, 4).unwrap(), 5);
        assert_eq!(x.hook_degree(2, 5, 4).unwrap(), 6);
        assert!(x.hook_degree(1, 5, 4).is_err()); // not addable
    }

    #[test]
    fn frobenius_exponents() {
        let x = bs(&[5, 3, 2, 1, 0]);
        assert_eq!(x.frobenius_exponent(5, 5).unwrap(), 5);
        assert_eq!(x.frobenius_exponent(0, 5).unwrap(), 0);
        // shift invariance
        let y = x.shift();
        assert_eq!(y.frobenius_exponent(6, 5).unwrap(), 5);
        assert_eq!(y.frobenius_exponent(1, 5).unwrap(), 0);
    }

    #[test]
    fn shift_invariance_of_hook_data() {
        let mu = p(&[2, 1]);
        let d = 3;
        let n = mu.size() + d;
        let x = saturated_beta_set(&mu, d);
        let y = x.shift();
        for &a in &x.addable_hooks(d) {
            assert_eq!(x.add_hook(a, d).unwrap(), y.add_hook(a + 1, d).unwrap());
            assert_eq!(
                x.hook_degree(a, n, d).unwrap(),
                y.hook_degree(a + 1, n, d).unwrap()
            );
            assert_eq!(
                x.frobenius_exponent(a, n).unwrap(),
                y.frobenius_exponent(a + 1, n).unwrap()
            );
        }
    }

    #[test]
    fn hooks_and_largest() {
        assert_eq!(hook_multiset(&p(&[2, 2, 1])), vec![1, 1, 2, 3, 4]);
        assert_eq!(largest_hook(&p(&[2, 2, 1])).unwrap(), 4);
        // (1^5): largest hook 5 = n - x at n = 5, x = 0
        assert_eq!(largest_hook(&p(&[1, 1, 1, 1, 1])).unwrap(), 5);
        assert_eq!(largest_hook(&p(&[1])).unwrap(), 1);
        assert!(largest_hook(&Partition::empty()).is_err());
        // beta-set route: hook lengths are {x - y : x in X, y not in X, y < x}
        for lam in [p(&[3, 2]), p(&[4, 2, 1]), p(&[2, 2, 2])] {
            let x = beta_set(&lam, lam.num_parts()).unwrap();
            let mut alt: Vec<u32> = Vec::new();
            for &a in x.elements() {
                for y in 0..a {
                    if !x.contains(y) {
                        alt.push(a - y);
                    }
                }
            }
            alt.sort_unstable();
            assert_eq!(alt, hook_multiset(&lam));
        }
    }

    #[test]
    fn m_core_checks() {
        assert!(is_m_core(&p(&[3, 2]), 5));
        // (n-d, x+1, 1^{d-x-1}) with x = n-m has an m-hook: n=7, d=4, m=5
        assert!(!is_m_core(&p(&[3, 3, 1]), 5));
        // (x, n-d+1, 1^{d-x-1}) has largest hook d < m: n=5, d=4, x=2
        assert!(is_m_core(&p(&[2, 2, 1]), 5));
        assert_eq!(m_core(&p(&[3, 2]), 5), p(&[3, 2]));
        assert_eq!(m_core(&p(&[5]), 5), Partition::empty());
    }

    /// All removal orders reach the same core (memoized exhaustive search).
    #[test]
    fn m_core_confluent_small() {
        use std::collections::BTreeMap;
        fn cores(
            lam: &Partition,
            m: u32,
            memo: &mut BTreeMap<Partition, BTreeSet<Partition>>,
        ) -> BTreeSet<Partition> {
            if let Some(c) = memo.get(lam) {
                return c.clone();
            }
            let x = beta_set(lam, lam.num_parts().max(1)).unwrap();
            let mut moves = Vec::new();
            for &a in x.elements() {
                if a >= m && !x.contains(a - m) {
                    moves.push(x.remove_hook(a, m).unwrap());
                }
            }
            let result: BTreeSet<Partition> = if moves.is_empty() {
                std::iter::once(lam.clone()).collect()
            } else {
                moves.iter().flat_map(|nl| cores(nl, m, memo)).collect()
            };
            memo.insert(lam.clone(), result.clone());
            result
        }
        for n in 0..=10u32 {
            for lam in partitions_of(n) {
                for m in 1..=6u32 {
                    let mut memo = BTreeMap::new();
                    let all = cores(&lam, m, &mut memo);
                    assert_eq!(all.len(), 1, "non-confluent core for {lam} m={m}");
                    assert_eq!(all.into_iter().next().unwrap(), m_core(&lam, m));
                }
            }
        }
    }

    #[test]
    fn corners() {
        let got = removable_corners(&p(&[2, 2, 1])).unwrap();
        assert_eq!(got, vec![p(&[2, 1, 1]), p(&[2, 2])]);
        assert_eq!(removable_corners(&p(&[3, 3])).unwrap(), vec![p(&[3, 2])]);
        assert_eq!(removable_corners(&p(&[4])).unwrap(), vec![p(&[3])]);
        assert!(removable_corners(&Partition::empty()).is_err());
    }

    #[test]
    fn rectangle_iff_single_corner() {
        for n in 1..=12u32 {
            for lam in partitions_of(n) {
                let single = removable_corners(&lam).unwrap().len() == 1;
                assert_eq!(single, lam.is_rectangle(), "{lam}");
            }
        }
    }

    #[test]
    fn dominance() {
        assert!(dominates(&p(&[3]), &p(&[1, 1, 1])).unwrap());
        assert!(!dominates(&p(&[2, 2]), &p(&[3, 1])).unwrap());
        assert!(dominates(&p(&[2, 2]), &p(&[2, 2])).unwrap());
        assert!(dominates(&p(&[3]), &p(&[2])).is_err());
    }

    #[test]
    fn add_then_remove_round_trip() {
        for n in 0..=10u32 {
            for mu in partitions_of(n) {
                for d in 1..=6u32 {
                    let x = saturated_beta_set(&mu, d);
                    for &a in &x.addable_hooks(d) {
                        let grown = x.add_hook(a, d).unwrap();
                        let y = beta_set(&grown, x.len()).unwrap();
                        assert!(y.contains(a + d));
                        assert_eq!(y.remove_hook(a + d, d).unwrap(), mu);
                    }
                }
            }
        }
    }

    #[test]
    fn partitions_enumeration() {
        assert_eq!(partitions_of(0).len(), 1);
        assert_eq!(partitions_of(5).len(), 7);
        assert_eq!(partitions_of(10).len(), 42);
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(p(&[2, 2, 1]).to_string(), "(2^2,1)");
        assert_eq!(p(&[1, 1, 1, 1, 1]).to_string(), "(1^5)");
        assert_eq!(Partition::empty().to_string(), "()");
        assert_eq!(Partition::parse("3+2").unwrap(), p(&[3, 2]));
        assert_eq!(Partition::parse("3,2").unwrap(), p(&[3, 2]));
        assert_eq!(p(&[3, 2]).key(), "3+2");
    }
}
