//! Virtual unipotent characters of GL_n(q) and their block combinatorics.
//!
//! Unipotent characters are labeled by partitions of n; a [`VirtualChar`]
//! is an integer combination of those labels. Harish-Chandra restriction
//! acts by removing one box; Deligne-Lusztig d-induction acts by adding one
//! d-hook in every possible way, with signs.

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

use crate::partition::{
    m_core, partitions_of, removable_corners, saturated_beta_set, Partition,
};
use crate::{Error, Result};

/// An integer combination of partition labels of a fixed rank; zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VirtualChar {
    rank: u32,
    coeffs: BTreeMap<Partition, i64>,
}

impl VirtualChar {
    pub fn zero(rank: u32) -> Self {
        VirtualChar {
            rank,
            coeffs: BTreeMap::new(),
        }
    }

    /// The class of a single unipotent character label.
    pub fn unipotent(lambda: &Partition) -> Self {
        let mut v = VirtualChar::zero(lambda.size());
        v.add_term(lambda.clone(), 1);
        v
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> i64 {
        self.coeffs.get(lambda).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, lambda: Partition, c: i64) {
        assert_eq!(lambda.size(), self.rank, "label of wrong rank");
        let entry = self.coeffs.entry(lambda.clone()).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.coeffs.remove(&lambda);
        }
    }

    pub fn add(&self, other: &VirtualChar) -> VirtualChar {
        assert_eq!(self.rank, other.rank);
        let mut out = self.clone();
        for (l, &c) in &other.coeffs {
            out.add_term(l.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &VirtualChar) -> VirtualChar {
        assert_eq!(self.rank, other.rank);
        let mut out = self.clone();
        for (l, &c) in &other.coeffs {
            out.add_term(l.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: i64) -> VirtualChar {
        let mut out = VirtualChar::zero(self.rank);
        if c != 0 {
            for (l, &v) in &self.coeffs {
                out.coeffs.insert(l.clone(), c * v);
            }
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.coeffs.iter().map(|(l, &c)| (l, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Sum of the coefficients (the "mass" used by restriction checks).
    pub fn total_mass(&self) -> i64 {
        self.coeffs.values().sum()
    }
}

impl Serialize for VirtualChar {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = ser.serialize_map(Some(self.coeffs.len()))?;
        for (l, c) in &self.coeffs {
            map.serialize_entry(&l.key(), c)?;
        }
        map.end()
    }
}

impl fmt::Display for VirtualChar {
    fn fmt(&self, fmt: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(fmt, "0");
        }
        let mut first = true;
        for (l, &c) in &self.coeffs {
            if first {
                if c < 0 {
                    write!(fmt, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(fmt, " - ")?;
            } else {
                write!(fmt, " + ")?;
            }
            let a = c.unsigned_abs();
            if a != 1 {
                write!(fmt, "{a}*")?;
            }
            write!(fmt, "{l}")?;
        }
        Ok(())
    }
}

/// A map (cohomological degree, Frobenius-eigenvalue exponent) -> virtual
/// character; empty entries are not stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedChar {
    rank: u32,
    entries: BTreeMap<(i64, i64), VirtualChar>,
}

impl GradedChar {
    pub fn new(rank: u32) -> Self {
        GradedChar {
            rank,
            entries: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn add_entry(&mut self, degree: i64, eigen_exp: i64, v: VirtualChar) {
        assert_eq!(v.rank(), self.rank);
        if v.is_zero() {
            return;
        }
        let slot = self
            .entries
            .entry((degree, eigen_exp))
            .or_insert_with(|| VirtualChar::zero(self.rank));
        *slot = slot.add(&v);
        if slot.is_zero() {
            self.entries.remove(&(degree, eigen_exp));
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (i64, i64, &VirtualChar)> {
        self.entries.iter().map(|(&(d, e), v)| (d, e, v))
    }

    pub fn get(&self, degree: i64, eigen_exp: i64) -> Option<&VirtualChar> {
        self.entries.get(&(degree, eigen_exp))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn degrees(&self) -> Vec<i64> {
        let mut ds: Vec<i64> = self.entries.keys().map(|&(d, _)| d).collect();
        ds.dedup();
        ds
    }

    /// Shift every degree by `dd` and every exponent by `de`.
    pub fn shifted(&self, dd: i64, de: i64) -> GradedChar {
        let mut out = GradedChar::new(self.rank);
        for (&(d, e), v) in &self.entries {
            out.entries.insert((d + dd, e + de), v.clone());
        }
        out
    }
}

/// The l-parameters that matter here: the order m of q mod l, and the
/// exceptional multiplicity r of the principal-block Brauer line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EllParams {
    pub m: u32,
    pub r: u32,
}

impl EllParams {
    pub fn new(m: u32, r: u32) -> Result<Self> {
        if m < 1 || r < 1 {
            return Err(Error::InvalidArgument("EllParams need m, r >= 1".into()));
        }
        Ok(EllParams { m, r })
    }
}

/// Harish-Chandra restriction: linear extension of box removal. Errors on
/// rank 0.
pub fn hc_restrict(v: &VirtualChar) -> Result<VirtualChar> {
    if v.rank() == 0 {
        return Err(Error::InvalidArgument(
            "Harish-Chandra restriction from rank 0".into(),
        ));
    }
    let mut out = VirtualChar::zero(v.rank() - 1);
    for (l, c) in v.iter() {
        for corner in removable_corners(l)? {
            out.add_term(corner, c);
        }
    }
    Ok(out)
}

/// Deligne-Lusztig d-induction of the label `mu` (a partition of n - d):
/// the signed sum over all addable d-hooks, with the Murnaghan-Nakayama
/// leg-length sign convention `eps_x = (-1)^{#{y : x < y < x + d}}`.
///
/// The sign convention is a choice: it is invariant under beta-set shifts
/// and no downstream identity in this crate depends on it.
pub fn dl_induction(mu: &Partition, d: u32) -> VirtualChar {
    assert!(d >= 1);
    let n = mu.size() + d;
    let x = saturated_beta_set(mu, d);
    let mut out = VirtualChar::zero(n);
    for &a in &x.addable_hooks(d) {
        let legs = x.leg_count(a, d).expect("element of X");
        let sign = if legs.is_multiple_of(2) { 1 } else { -1 };
        out.add_term(x.add_hook(a, d).expect("addable"), sign);
    }
    out
}

/// One Phi_d-block (or defect-zero singleton): the partitions of n sharing
/// a d-core.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhiBlock {
    pub core: Partition,
    pub labels: Vec<Partition>,
    pub defect_zero: bool,
}

/// Groups the partitions of `n` by d-core. Singleton groups whose member is
/// its own d-core are defect-zero labels.
pub fn phi_d_blocks(n: u32, d: u32) -> Vec<PhiBlock> {
    assert!(d >= 1);
    let mut groups: BTreeMap<Partition, Vec<Partition>> = BTreeMap::new();
    for lam in partitions_of(n) {
        groups.entry(m_core(&lam, d)).or_default().push(lam);
    }
    groups
        .into_iter()
        .map(|(core, mut labels)| {
            labels.sort();
            let defect_zero = labels.len() == 1 && labels[0] == core;
            PhiBlock {
                core,
                labels,
                defect_zero,
            }
        })
        .collect()
}

/// Labels of the principal Phi_m-block of GL_n(q) in the regime
/// `m <= n < 2m`: the partitions obtained by adding one m-hook to `(n-m)`.
pub fn principal_block_labels(n: u32, m: u32) -> Result<Vec<Partition>> {
    if !(m <= n && n < 2 * m) {
        return Err(Error::UnsupportedRegime(format!(
            "principal block labels need m <= n < 2m, got n={n}, m={m}"
        )));
    }
    let mu = Partition::row(n - m);
    let x = saturated_beta_set(&mu, m);
    let mut labels: Vec<Partition> = x
        .addable_hooks(m)
        .iter()
        .map(|&a| x.add_hook(a, m).expect("addable"))
        .collect();
    labels.sort();
    Ok(labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::is_m_core;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn hc_restrict_examples() {
        let v = VirtualChar::unipotent(&p(&[2, 2, 1]));
        let r = hc_restrict(&v).unwrap();
        assert_eq!(r.coeff(&p(&[2, 1, 1])), 1);
        assert_eq!(r.coeff(&p(&[2, 2])), 1);
        assert_eq!(r.num_terms(), 2);

        let v = VirtualChar::unipotent(&p(&[6]));
        assert_eq!(hc_restrict(&v).unwrap(), VirtualChar::unipotent(&p(&[5])));

        // (n-d+1, n-d, 1^{2d-n-1}) at (n,d) = (5,4): restriction has >= 2 terms
        let v = VirtualChar::unipotent(&p(&[2, 1, 1, 1]));
        assert!(hc_restrict(&v).unwrap().num_terms() >= 2);

        assert!(hc_restrict(&VirtualChar::zero(0)).is_err());
    }

    #[test]
    fn restriction_mass_is_corner_count() {
        for n in 1..=9u32 {
            for lam in partitions_of(n) {
                let v = VirtualChar::unipotent(&lam);
                let mass = hc_restrict(&v).unwrap().total_mass();
                assert_eq!(mass as usize, removable_corners(&lam).unwrap().len());
            }
        }
    }

    #[test]
    fn dl_induction_x54() {
        let v = dl_induction(&p(&[1]), 4);
        assert_eq!(v.coeff(&p(&[5])), 1);
        assert_eq!(v.coeff(&p(&[3, 2])), -1);
        assert_eq!(v.coeff(&p(&[2, 2, 1])), 1);
        assert_eq!(v.coeff(&p(&[1, 1, 1, 1, 1])), -1);
        assert_eq!(v.num_terms(), 4);
    }

    #[test]
    fn dl_induction_degenerate() {
        assert_eq!(
            dl_induction(&Partition::empty(), 1),
            VirtualChar::unipotent(&p(&[1]))
        );
    }

    #[test]
    fn dl_induction_summand_count() {
        // trivial coefficient: |X'| summands, d+1 when n >= 2d, d otherwise
        for n in 2..=10u32 {
            for d in 1..=n {
                let v = dl_induction(&Partition::row(n - d), d);
                let expected = if n >= 2 * d { d + 1 } else { d };
                assert_eq!(v.num_terms() as u32, expected, "n={n} d={d}");
                assert!(v.iter().all(|(_, c)| c == 1 || c == -1));
            }
        }
    }

    #[test]
    fn dl_induction_preserves_core() {
        for n in 2..=12u32 {
            for d in 1..=6u32.min(n) {
                for mu in partitions_of(n - d) {
                    if !is_m_core(&mu, d) {
                        continue;
                    }
                    for (l, _) in dl_induction(&mu, d).iter() {
                        assert_eq!(m_core(l, d), mu, "n={n} d={d} mu={mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn blocks_x54() {
        let blocks = phi_d_blocks(5, 4);
        let core1 = blocks.iter().find(|b| b.core == p(&[1])).unwrap();
        assert_eq!(
            core1.labels,
            vec![p(&[1, 1, 1, 1, 1]), p(&[2, 2, 1]), p(&[3, 2]), p(&[5])]
        );
        assert!(!core1.defect_zero);
        // every partition of 5 appears exactly once
        let total: usize = blocks.iter().map(|b| b.labels.len()).sum();
        assert_eq!(total, partitions_of(5).len());
    }

    #[test]
    fn blocks_singletons_when_d_large() {
        let blocks = phi_d_blocks(2, 3);
        assert!(blocks.iter().all(|b| b.defect_zero));
        assert_eq!(blocks.len(), 2);
    }

    #[test]
    fn principal_labels() {
        assert_eq!(
            principal_block_labels(5, 5).unwrap(),
            vec![
                p(&[1, 1, 1, 1, 1]),
                p(&[2, 1, 1, 1]),
                p(&[3, 1, 1]),
                p(&[4, 1]),
                p(&[5])
            ]
        );
        assert_eq!(
            principal_block_labels(4, 4).unwrap(),
            vec![p(&[1, 1, 1, 1]), p(&[2, 1, 1]), p(&[3, 1]), p(&[4])]
        );
        for (n, m) in [(8u32, 7u32), (7, 7), (9, 7), (11, 6)] {
            assert_eq!(principal_block_labels(n, m).unwrap().len() as u32, m);
        }
        assert!(principal_block_labels(10, 5).is_err());
        assert!(principal_block_labels(4, 5).is_err());
    }

    #[test]
    fn virtual_char_json_keys() {
        let v = dl_induction(&p(&[1]), 4);
        let json = serde_json::to_string(&v).unwrap();
        assert!(json.contains("\"3+2\":-1"));
        assert!(json.contains("\"5\":1"));
    }
}
