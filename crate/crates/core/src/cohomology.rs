//! Closed-form cohomology tables of the Deligne-Lusztig varieties X_{n,d}.
//!
//! With coefficients in the unipotent local system attached to a partition
//! `mu` of `n - d`, the compactly supported cohomology is multiplicity-free:
//! one entry per addable d-hook `x` of `mu`, sitting in degree
//! `hook_degree(X, x)` with Frobenius eigenvalue `q^(frobenius_exponent)`.
//! The trivial-coefficient table is additionally cross-checked against the
//! grouped three-case closed form and a structural zero count.
//!
//! The module also houses the torsion-free gate for modular coefficients,
//! the C-normalization (shift by `-(2n-d-1)` and eigenvalue twist by
//! `-(n-d-1)`), eigenvalue cuts, and the long-exact-sequence Euler
//! characteristic oracle that cross-validates all tables against each other.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

use crate::character::{hc_restrict, principal_block_labels, GradedChar, VirtualChar};
use crate::partition::{
    beta_set, is_m_core, removable_corners, saturated_beta_set, Partition,
};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Normalization {
    #[serde(rename = "X-degrees")]
    XDegrees,
    #[serde(rename = "C-degrees")]
    CDegrees,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingTag {
    CharZero,
    Integral,
    Modular(u32),
}

impl RingTag {
    pub fn label(&self) -> String {
        match self {
            RingTag::CharZero => "char-zero".into(),
            RingTag::Integral => "integral".into(),
            RingTag::Modular(m) => format!("modular({m})"),
        }
    }

    pub fn modulus(&self) -> Option<u32> {
        match self {
            RingTag::Modular(m) => Some(*m),
            _ => None,
        }
    }
}

impl Serialize for RingTag {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.label())
    }
}

/// A cohomology table of X_{n,d}: a graded character plus bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyTable {
    pub n: u32,
    pub d: u32,
    pub mu: Partition,
    pub normalization: Normalization,
    pub ring_tag: RingTag,
    pub table: GradedChar,
    /// Set when the table was produced under an explicit, unverified
    /// torsion-free assumption (gate override).
    pub assumed_torsion_free: bool,
}

impl CohomologyTable {
    fn validate(&self) -> Result<()> {
        let n = self.n as i64;
        let d = self.d as i64;
        let trivial = Partition::row(self.n);
        let (lo_expected, hi_expected) = match self.normalization {
            Normalization::XDegrees => (2 * n - d - 1, 4 * n - 2 * d - 2),
            Normalization::CDegrees => (0, 2 * n - d - 1),
        };
        let degrees = self.table.degrees();
        if self.mu == Partition::row(self.n - self.d) {
            let lo = degrees.iter().min().copied();
            let hi = degrees.iter().max().copied();
            if lo != Some(lo_expected) || hi != Some(hi_expected) {
                return Err(Error::ModelViolation(format!(
                    "trivial-coefficient table of X_{{{},{}}} spans {lo:?}..{hi:?}, expected \
                     {lo_expected}..{hi_expected}",
                    self.n, self.d
                )));
            }
        }
        // the trivial label only ever occurs in the top slot, with coefficient 1
        let top = degrees.iter().max().copied();
        for (deg, _exp, v) in self.table.entries() {
            let c = v.coeff(&trivial);
            if c != 0 && (Some(deg) != top || c != 1) {
                return Err(Error::ModelViolation(format!(
                    "trivial label misplaced: coefficient {c} in degree {deg}"
                )));
            }
        }
        // one degree and one exponent per hook: degree -> exponent is a
        // well-defined injection on nonzero entries
        let mut seen_deg = BTreeMap::new();
        let mut seen_exp = BTreeMap::new();
        for (deg, exp, _) in self.table.entries() {
            if let Some(prev) = seen_deg.insert(deg, exp) {
                return Err(Error::ModelViolation(format!(
                    "degree {deg} carries two eigenvalue exponents ({prev}, {exp})"
                )));
            }
            if let Some(prev) = seen_exp.insert(exp, deg) {
                return Err(Error::ModelViolation(format!(
                    "exponent {exp} occurs in two degrees ({prev}, {deg})"
                )));
            }
        }
        Ok(())
    }

    /// Degrees with a nonzero entry, increasing.
    pub fn nonzero_degrees(&self) -> Vec<i64> {
        self.table.degrees()
    }

    /// Zero slots strictly between the first nonzero and the top degree.
    pub fn zero_degrees(&self) -> Vec<i64> {
        let degs = self.nonzero_degrees();
        let (Some(&lo), Some(&hi)) = (degs.first(), degs.last()) else {
            return Vec::new();
        };
        (lo..=hi).filter(|x| !degs.contains(x)).collect()
    }
}

impl Serialize for CohomologyTable {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            degree: i64,
            eigen_exp: i64,
            #[serde(skip_serializing_if = "Option::is_none")]
            eigen_exp_mod_m: Option<i64>,
            labels: &'a VirtualChar,
        }
        let m = self.ring_tag.modulus();
        let entries: Vec<Entry> = self
            .table
            .entries()
            .map(|(degree, eigen_exp, labels)| Entry {
                degree,
                eigen_exp,
                eigen_exp_mod_m: m.map(|m| eigen_exp.rem_euclid(m as i64)),
                labels,
            })
            .collect();
        let mut st = ser.serialize_struct("CohomologyTable", 7)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("d", &self.d)?;
        st.serialize_field("mu", &self.mu)?;
        st.serialize_field("ring_tag", &self.ring_tag)?;
        st.serialize_field("normalization", &self.normalization)?;
        if self.assumed_torsion_free {
            st.serialize_field("assumed_torsion_free", &true)?;
        } else {
            st.skip_field("assumed_torsion_free")?;
        }
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

impl fmt::Display for CohomologyTable {
    fn fmt(&self, fmt: &mut fmt::Formatter<'_>) -> fmt::Result {
        let norm = match self.normalization {
            Normalization::XDegrees => "X-degrees",
            Normalization::CDegrees => "C-degrees",
        };
        writeln!(
            fmt,
            "# H_c^*(X_{{{},{}}}; mu={}) [{}] ring={}{}",
            self.n,
            self.d,
            self.mu,
            norm,
            self.ring_tag.label(),
            if self.assumed_torsion_free {
                " (torsion-freeness assumed, unverified)"
            } else {
                ""
            }
        )?;
        writeln!(fmt, "{:<8}{:<12}character", "degree", "eigenvalue")?;
        for (deg, exp, v) in self.table.entries() {
            let eig = match self.ring_tag.modulus() {
                Some(m) => format!("q^{exp}={}", format_args!("q^{}", exp.rem_euclid(m as i64))),
                None => format!("q^{exp}"),
            };
            writeln!(fmt, "{deg:<8}{eig:<12}{v}")?;
        }
        Ok(())
    }
}

/// Cohomology of X_{n,d} with coefficients in the local system of `mu`
/// (a partition of n - d), over characteristic zero, in X-degrees.
///
/// One entry per addable d-hook of the saturated beta-set; the result does
/// not depend on the amount of padding beyond saturation.
pub fn cohomology_with_coeffs(n: u32, d: u32, mu: &Partition) -> Result<CohomologyTable> {
    if !(1 <= d && d <= n) {
        return Err(Error::InvalidArgument(format!("need 1 <= d <= n, got ({n},{d})")));
    }
    if mu.size() + d != n {
        return Err(Error::InvalidArgument(format!(
            "mu must be a partition of {}, got |mu| = {}",
            n - d,
            mu.size()
        )));
    }
    let x = saturated_beta_set(mu, d);
    let mut table = GradedChar::new(n);
    for &a in &x.addable_hooks(d) {
        let deg = x.hook_degree(a, n, d)?;
        let exp = x.frobenius_exponent(a, n)?;
        table.add_entry(deg, exp, VirtualChar::unipotent(&x.add_hook(a, d)?));
    }
    let out = CohomologyTable {
        n,
        d,
        mu: mu.clone(),
        normalization: Normalization::XDegrees,
        ring_tag: RingTag::CharZero,
        table,
        assumed_torsion_free: false,
    };
    out.validate()?;
    Ok(out)
}

/// Actual and structurally expected zero counts for the trivial table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ZeroGap {
    pub n: u32,
    pub d: u32,
    /// Number of zero degrees between first nonzero and top degree.
    pub count: i64,
    /// Structural prediction: `2n-2d` when `n < 2d`, else `2n-2d-1`
    /// (the set of addable hooks is all of X exactly when `n - d >= d`).
    pub structural: i64,
}

fn zero_gap_of(table: &CohomologyTable) -> ZeroGap {
    let n = table.n as i64;
    let d = table.d as i64;
    let structural = if n < 2 * d { 2 * n - 2 * d } else { 2 * n - 2 * d - 1 };
    ZeroGap {
        n: table.n,
        d: table.d,
        count: table.zero_degrees().len() as i64,
        structural,
    }
}

/// Trivial-coefficient table, cross-checked against the grouped three-case
/// closed form and the structural zero count. Any mismatch is an encoding
/// bug and is surfaced as an inconsistency, never returned silently.
pub fn cohomology_trivial_table(n: u32, d: u32) -> Result<CohomologyTable> {
    let mu = Partition::row(n - d);
    let out = cohomology_with_coeffs(n, d, &mu)?;

    // grouped formula: for y in {0..d-1} u {2n-d-1}, the entry in degree
    // 2n-d-1+y is mu*y <q^{n-d-1+y}> when y < n-d, mu*(y+1) <q^{n-d+y}>
    // when n-d <= y < d-1, and (n) <q^{2n-d-1}> at y = 2n-d-1. The case
    // conditions are tied to the beta-set {n, d-1, ..., 0} of length d+1
    // (one padding slot more than saturation when mu is empty), so build
    // the comparison on that set; agreement across the two beta-sets is
    // part of what the cross-check certifies.
    let x = beta_set(&mu, d as usize + 1)?;
    let mut expected = GradedChar::new(n);
    let nn = n as i64;
    let dd = d as i64;
    for y in 0..d as i64 {
        if y < nn - dd {
            let a = y as u32;
            expected.add_entry(
                2 * nn - dd - 1 + y,
                nn - dd - 1 + y,
                VirtualChar::unipotent(&x.add_hook(a, d)?),
            );
        } else if y < dd - 1 {
            let a = (y + 1) as u32;
            expected.add_entry(
                2 * nn - dd - 1 + y,
                nn - dd + y,
                VirtualChar::unipotent(&x.add_hook(a, d)?),
            );
        }
    }
    expected.add_entry(
        4 * nn - 2 * dd - 2,
        2 * nn - dd - 1,
        VirtualChar::unipotent(&Partition::row(n)),
    );
    if expected != out.table {
        return Err(Error::Inconsistency(format!(
            "X_{{{n},{d}}}: hook-degree table disagrees with the grouped closed form"
        )));
    }

    let gap = zero_gap_of(&out);
    if gap.count != gap.structural {
        return Err(Error::Inconsistency(format!(
            "X_{{{n},{d}}}: zero count {} differs from structural prediction {}",
            gap.count, gap.structural
        )));
    }
    Ok(out)
}

/// Zero-gap data for the trivial table (used by reports and sweeps).
pub fn zero_gap(n: u32, d: u32) -> Result<ZeroGap> {
    Ok(zero_gap_of(&cohomology_trivial_table(n, d)?))
}

/// Renormalizes an X-degrees table to C-degrees: degree -> degree-(2n-d-1),
/// exponent -> exponent-(n-d-1). Errors when already in C-degrees.
pub fn to_c_normalization(t: &CohomologyTable) -> Result<CohomologyTable> {
    if t.normalization != Normalization::XDegrees {
        return Err(Error::InvalidArgument("table already in C-degrees".into()));
    }
    let n = t.n as i64;
    let d = t.d as i64;
    let out = CohomologyTable {
        table: t.table.shifted(-(2 * n - d - 1), -(n - d - 1)),
        normalization: Normalization::CDegrees,
        ..t.clone()
    };
    out.validate()?;
    Ok(out)
}

/// Inverse of [`to_c_normalization`].
pub fn to_x_normalization(t: &CohomologyTable) -> Result<CohomologyTable> {
    if t.normalization != Normalization::CDegrees {
        return Err(Error::InvalidArgument("table already in X-degrees".into()));
    }
    let n = t.n as i64;
    let d = t.d as i64;
    let out = CohomologyTable {
        table: t.table.shifted(2 * n - d - 1, n - d - 1),
        normalization: Normalization::XDegrees,
        ..t.clone()
    };
    out.validate()?;
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TorsionFreeStatus {
    /// m > d, m > n-d+1 and m > 6.
    Guaranteed,
    /// The singled-out case (n,d,m) = (5,4,5).
    RemarkException,
    NotGuaranteed,
}

/// Whether integral cohomology of X_{n,d} is known torsion-free for l | Phi_m(q).
pub fn torsion_free_gate(n: u32, d: u32, m: u32) -> TorsionFreeStatus {
    if m > d && m > n - d + 1 && m > 6 {
        TorsionFreeStatus::Guaranteed
    } else if (n, d, m) == (5, 4, 5) {
        TorsionFreeStatus::RemarkException
    } else {
        TorsionFreeStatus::NotGuaranteed
    }
}

/// Modular (mod-l) cohomology table of X_{n,d} in C-degrees, for l | Phi_m(q).
///
/// Produced from the closed forms under the torsion-free hypothesis; the
/// gate enforces the hypothesis unless `assume_torsion_free` overrides it,
/// in which case the table is marked unverified.
pub fn cohomology_mod_ell(
    n: u32,
    d: u32,
    m: u32,
    assume_torsion_free: bool,
) -> Result<CohomologyTable> {
    let status = torsion_free_gate(n, d, m);
    if status == TorsionFreeStatus::NotGuaranteed && !assume_torsion_free {
        return Err(Error::GateRefused(format!(
            "torsion-freeness not guaranteed for (n,d,m) = ({n},{d},{m}); \
             pass the explicit override to assume it"
        )));
    }
    let mut out = to_c_normalization(&cohomology_trivial_table(n, d)?)?;
    out.ring_tag = RingTag::Modular(m);
    out.assumed_torsion_free = status == TorsionFreeStatus::NotGuaranteed;

    // the structural checks below encode the block theory of the regime
    // m > d, m > n-d+1; an override can build the formal table outside it,
    // where they do not apply
    let in_regime = m > d && m > n - d + 1;
    if !in_regime {
        return Ok(out);
    }
    if m <= n {
        // the exponent-(n mod m) cut has exactly two entries, in C-degrees
        // n-m and 2n-d-1
        let cut = eigen_cut(&out, m, (n as i64).rem_euclid(m as i64));
        let degs = cut.nonzero_degrees();
        let expect = vec![(n - m) as i64, (2 * n - d - 1) as i64];
        if degs != expect {
            return Err(Error::ModelViolation(format!(
                "principal eigenvalue cut of X_{{{n},{d}}} mod m={m} sits in degrees {degs:?}, \
                 expected {expect:?}"
            )));
        }
        // every label is either an m-core (defect zero) or a principal-block label
        let principal = principal_block_labels(n, m)?;
        for (_, _, v) in out.table.entries() {
            for (l, _) in v.iter() {
                if !is_m_core(l, m) && !principal.contains(l) {
                    return Err(Error::ModelViolation(format!(
                        "label {l} is neither an m-core nor principal for m={m}"
                    )));
                }
            }
        }
    } else {
        // l does not divide |GL_n(q)|: every label is its own block
        for (_, _, v) in out.table.entries() {
            for (l, _) in v.iter() {
                if !is_m_core(l, m) {
                    return Err(Error::ModelViolation(format!(
                        "label {l} should be an m-core for m={m} > n={n}"
                    )));
                }
            }
        }
    }
    Ok(out)
}

/// Sub-table of entries whose eigenvalue exponent is congruent to `e` mod `m`.
pub fn eigen_cut(t: &CohomologyTable, m: u32, e: i64) -> CohomologyTable {
    let mut table = GradedChar::new(t.n);
    for (deg, exp, v) in t.table.entries() {
        if exp.rem_euclid(m as i64) == e.rem_euclid(m as i64) {
            table.add_entry(deg, exp, v.clone());
        }
    }
    CohomologyTable {
        table,
        ..t.clone()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LesStatus {
    Balanced,
    Imbalanced,
    /// d = 1: the restriction triangle would involve X_{n-1,0}, which is
    /// outside the family (the definition needs d >= 1 on the smaller
    /// variety too); the identity is not asserted there.
    DegenerateSkipped,
}

/// One eigenvalue-exponent bucket of the Euler identity: signed sums (sign
/// = degree parity) of the two sides, in rank n-1.
#[derive(Debug, Clone, Serialize)]
pub struct LesBucket {
    pub eigen_exp: i64,
    pub lhs: VirtualChar,
    pub rhs: VirtualChar,
    pub balanced: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct LesReport {
    pub n: u32,
    pub d: u32,
    pub mu: Partition,
    pub status: LesStatus,
    pub buckets: Vec<LesBucket>,
}

impl LesReport {
    pub fn balanced(&self) -> bool {
        !matches!(self.status, LesStatus::Imbalanced)
    }
}

impl fmt::Display for LesReport {
    fn fmt(&self, fmt: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.status {
            LesStatus::DegenerateSkipped => write!(
                fmt,
                "les(n={}, d=1, mu={}): n/a (triangle undefined at d=1)",
                self.n, self.mu
            ),
            _ => {
                writeln!(
                    fmt,
                    "les(n={}, d={}, mu={}): {}",
                    self.n,
                    self.d,
                    self.mu,
                    if self.balanced() { "balanced" } else { "IMBALANCED" }
                )?;
                for b in &self.buckets {
                    writeln!(
                        fmt,
                        "  q^{}: lhs = {}, rhs = {}{}",
                        b.eigen_exp,
                        b.lhs,
                        b.rhs,
                        if b.balanced { "" } else { "   <-- mismatch" }
                    )?;
                }
                Ok(())
            }
        }
    }
}

/// Signed (Euler) sum of a table after Harish-Chandra restriction of every
/// entry, bucketed by eigenvalue exponent.
fn euler_restricted(t: &CohomologyTable) -> Result<BTreeMap<i64, VirtualChar>> {
    let mut out: BTreeMap<i64, VirtualChar> = BTreeMap::new();
    for (deg, exp, v) in t.table.entries() {
        let sign = if deg.rem_euclid(2) == 0 { 1 } else { -1 };
        let r = hc_restrict(v)?.scale(sign);
        let slot = out.entry(exp).or_insert_with(|| VirtualChar::zero(t.n - 1));
        *slot = slot.add(&r);
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// Signed sum of a table (no restriction), with optional degree shift and
/// eigenvalue twist applied first.
fn euler_shifted(
    t: &CohomologyTable,
    deg_shift: i64,
    twist: i64,
) -> BTreeMap<i64, VirtualChar> {
    let mut out: BTreeMap<i64, VirtualChar> = BTreeMap::new();
    for (deg, exp, v) in t.table.entries() {
        let sign = if (deg + deg_shift).rem_euclid(2) == 0 { 1 } else { -1 };
        let slot = out
            .entry(exp + twist)
            .or_insert_with(|| VirtualChar::zero(t.n));
        *slot = slot.add(&v.scale(sign));
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Euler-characteristic consistency of the restriction triangle for
/// X_{n,d} with coefficients `mu`: per eigenvalue exponent,
///
/// `sum_i (-1)^i R(H^i(X_{n,d},mu))` equals the contribution of
/// `G_m x X_{n-1,d-1}` (two copies, degrees +1 and +2, the latter twisted)
/// plus `X_{n-1,d}` over the one-box restrictions of `mu` (degree +2,
/// twisted).
///
/// For d = n the closed stratum vanishes (the empty partition has no
/// corners). For d = 1 the triangle is not defined and the report says so.
pub fn les_euler_check(n: u32, d: u32, mu: &Partition) -> Result<LesReport> {
    if n < 2 || d < 1 || d > n {
        return Err(Error::InvalidArgument(format!("need n >= 2 and 1 <= d <= n, got ({n},{d})")));
    }
    if mu.size() + d != n {
        return Err(Error::InvalidArgument(format!(
            "mu must be a partition of {}, got {}",
            n - d,
            mu.size()
        )));
    }
    if d == 1 {
        return Ok(LesReport {
            n,
            d,
            mu: mu.clone(),
            status: LesStatus::DegenerateSkipped,
            buckets: Vec::new(),
        });
    }

    let lhs = euler_restricted(&cohomology_with_coeffs(n, d, mu)?)?;

    // G_m factor: copies in degrees i-1 and i-2 (the latter Tate-twisted)
    let open = cohomology_with_coeffs(n - 1, d - 1, mu)?;
    let mut rhs = BTreeMap::new();
    let add_into = |rhs: &mut BTreeMap<i64, VirtualChar>, part: BTreeMap<i64, VirtualChar>| {
        for (e, v) in part {
            let slot = rhs.entry(e).or_insert_with(|| VirtualChar::zero(n - 1));
            *slot = slot.add(&v);
        }
    };
    add_into(&mut rhs, euler_shifted(&open, 1, 0));
    add_into(&mut rhs, euler_shifted(&open, 2, 1));
    // closed stratum: one copy per removable corner of mu, degree +2, twisted
    if !mu.is_empty() {
        for corner in removable_corners(mu)? {
            let closed = cohomology_with_coeffs(n - 1, d, &corner)?;
            add_into(&mut rhs, euler_shifted(&closed, 2, 1));
        }
    }
    rhs.retain(|_, v| !v.is_zero());

    let mut exps: Vec<i64> = lhs.keys().chain(rhs.keys()).copied().collect();
    exps.sort_unstable();
    exps.dedup();
    let mut buckets = Vec::new();
    let mut all_ok = true;
    for e in exps {
        let l = lhs.get(&e).cloned().unwrap_or_else(|| VirtualChar::zero(n - 1));
        let r = rhs.get(&e).cloned().unwrap_or_else(|| VirtualChar::zero(n - 1));
        let balanced = l == r;
        all_ok &= balanced;
        buckets.push(LesBucket {
            eigen_exp: e,
            lhs: l,
            rhs: r,
            balanced,
        });
    }
    Ok(LesReport {
        n,
        d,
        mu: mu.clone(),
        status: if all_ok {
            LesStatus::Balanced
        } else {
            LesStatus::Imbalanced
        },
        buckets,
    })
}

/// One named check with its outcome.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantsReport {
    pub n: u32,
    pub d: u32,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl fmt::Display for InvariantsReport {
    fn fmt(&self, fmt: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            fmt,
            "invariants(n={}, d={}): {}",
            self.n,
            self.d,
            if self.passed { "all pass" } else { "FAILED" }
        )?;
        for c in &self.checks {
            writeln!(
                fmt,
                "  [{}] {}: {}",
                if c.passed { "ok" } else { "FAIL" },
                c.name,
                c.detail
            )?;
        }
        Ok(())
    }
}

/// Structural invariants of the trivial-coefficient table: degree range,
/// trivial label placement, Steinberg placement, zero-gap shape.
///
/// The Steinberg label `(1^n)` occurs exactly when `d >= n - 1` (the
/// parabolic is a Borel), once, in the bottom degree `2n-d-1`.
pub fn table_invariants(n: u32, d: u32) -> Result<InvariantsReport> {
    let t = cohomology_trivial_table(n, d)?;
    let nn = n as i64;
    let dd = d as i64;
    let degs = t.nonzero_degrees();
    let mut checks = Vec::new();

    let bottom = degs.first().copied().unwrap_or(i64::MIN);
    checks.push(Check {
        name: "first nonzero degree".into(),
        passed: bottom == 2 * nn - dd - 1,
        detail: format!("{bottom} (expected {})", 2 * nn - dd - 1),
    });

    let top = degs.last().copied().unwrap_or(i64::MIN);
    let trivial = Partition::row(n);
    let top_entry_ok = top == 4 * nn - 2 * dd - 2
        && t.table
            .get(top, 2 * nn - dd - 1)
            .map(|v| v.coeff(&trivial) == 1 && v.num_terms() == 1)
            .unwrap_or(false);
    let trivial_elsewhere = t
        .table
        .entries()
        .any(|(deg, _, v)| deg != top && v.coeff(&trivial) != 0);
    checks.push(Check {
        name: "trivial label at the top only".into(),
        passed: top_entry_ok && !trivial_elsewhere,
        detail: format!("top degree {top}, exponent {}", 2 * nn - dd - 1),
    });

    let steinberg = Partition::new(vec![1; n as usize]).expect("column shape");
    let st_entries: Vec<i64> = t
        .table
        .entries()
        .filter(|(_, _, v)| v.coeff(&steinberg) != 0)
        .map(|(deg, _, _)| deg)
        .collect();
    let st_expected = d >= n - 1;
    let st_ok = if st_expected {
        st_entries == vec![2 * nn - dd - 1]
            && t.table
                .entries()
                .filter(|(deg, _, v)| *deg == 2 * nn - dd - 1 && v.coeff(&steinberg) == 1)
                .count()
                == 1
    } else {
        st_entries.is_empty()
    };
    checks.push(Check {
        name: "Steinberg placement".into(),
        passed: st_ok,
        detail: format!(
            "present in degrees {st_entries:?}; expected {}",
            if st_expected {
                format!("bottom degree {} only", 2 * nn - dd - 1)
            } else {
                "absent".into()
            }
        ),
    });

    let zeros = t.zero_degrees();
    let contiguous = zeros
        .windows(2)
        .all(|w| w[1] == w[0] + 1);
    let gap = zero_gap_of(&t);
    checks.push(Check {
        name: "zero gap".into(),
        passed: contiguous && gap.count == gap.structural,
        detail: format!(
            "{} zero degrees {:?}; 2n-2d = {}",
            gap.count,
            zeros,
            2 * nn - 2 * dd
        ),
    });

    let passed = checks.iter().all(|c| c.passed);
    Ok(InvariantsReport { n, d, checks, passed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::beta_set;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// The golden X_{5,4} table.
    #[test]
    fn x54_table() {
        let t = cohomology_with_coeffs(5, 4, &p(&[1])).unwrap();
        let rows: Vec<(i64, i64, Partition)> = t
            .table
            .entries()
            .map(|(d, e, v)| {
                assert_eq!(v.num_terms(), 1);
                let (l, c) = v.iter().next().unwrap();
                assert_eq!(c, 1);
                (d, e, l.clone())
            })
            .collect();
        assert_eq!(
            rows,
            vec![
                (5, 0, p(&[1, 1, 1, 1, 1])),
                (6, 2, p(&[2, 2, 1])),
                (7, 3, p(&[3, 2])),
                (10, 5, p(&[5])),
            ]
        );
        assert_eq!(t.zero_degrees(), vec![8, 9]);
    }

    #[test]
    fn first_entry_for_trivial_mu() {
        for (n, d) in [(9u32, 4u32), (7, 3), (6, 5)] {
            let t = cohomology_trivial_table(n, d).unwrap();
            let bottom = (2 * n - d - 1) as i64;
            let v = t.table.get(bottom, (n - d - 1) as i64).unwrap();
            let mut expect = vec![n - d];
            expect.extend(std::iter::repeat_n(1, d as usize));
            assert_eq!(v.coeff(&Partition::new(expect).unwrap()), 1);
        }
    }

    #[test]
    fn point_variety() {
        let t = cohomology_with_coeffs(1, 1, &Partition::empty()).unwrap();
        let rows: Vec<_> = t.table.entries().collect();
        assert_eq!(rows.len(), 1);
        let (deg, exp, v) = rows[0];
        assert_eq!((deg, exp), (0, 0));
        assert_eq!(v.coeff(&p(&[1])), 1);
    }

    #[test]
    fn beta_set_padding_independence_of_table() {
        for (n, d, mu) in [(7u32, 3u32, p(&[3, 1])), (6, 4, p(&[2])), (8, 5, p(&[2, 1]))] {
            let base = cohomology_with_coeffs(n, d, &mu).unwrap();
            for extra in 1..=5usize {
                let x = beta_set(&mu, mu.num_parts() + d as usize + extra).unwrap();
                let mut table = GradedChar::new(n);
                for &a in &x.addable_hooks(d) {
                    table.add_entry(
                        x.hook_degree(a, n, d).unwrap(),
                        x.frobenius_exponent(a, n).unwrap(),
                        VirtualChar::unipotent(&x.add_hook(a, d).unwrap()),
                    );
                }
                assert_eq!(table, base.table, "padding {extra}");
            }
        }
    }

    #[test]
    fn coxeter_case_no_gap() {
        for n in 1..=8u32 {
            let t = cohomology_trivial_table(n, n).unwrap();
            assert!(t.zero_degrees().is_empty(), "n={n}");
        }
    }

    #[test]
    fn zero_gap_structure_sweep() {
        for n in 1..=14u32 {
            for d in 1..=n {
                let g = zero_gap(n, d).unwrap();
                let expected = if n < 2 * d {
                    2 * (n as i64) - 2 * (d as i64)
                } else {
                    2 * (n as i64) - 2 * (d as i64) - 1
                };
                assert_eq!(g.count, expected, "n={n} d={d}");
            }
        }
    }

    #[test]
    fn c_normalization() {
        let t = cohomology_trivial_table(5, 4).unwrap();
        let c = to_c_normalization(&t).unwrap();
        // degree 5 -> 0 with exponent 0; top 10 -> 2n-d-1 = 5 with exponent n = 5
        assert!(c.table.get(0, 0).is_some());
        assert!(c.table.get(5, 5).is_some());
        assert_eq!(to_x_normalization(&c).unwrap().table, t.table);
        assert!(to_c_normalization(&c).is_err());
        assert!(to_x_normalization(&t).is_err());
    }

    #[test]
    fn gate() {
        assert_eq!(torsion_free_gate(8, 4, 7), TorsionFreeStatus::Guaranteed);
        assert_eq!(torsion_free_gate(5, 4, 5), TorsionFreeStatus::RemarkException);
        assert_eq!(torsion_free_gate(20, 5, 7), TorsionFreeStatus::NotGuaranteed);
        assert_eq!(torsion_free_gate(4, 3, 4), TorsionFreeStatus::NotGuaranteed);
    }

    #[test]
    fn mod_ell_x54() {
        let t = cohomology_mod_ell(5, 4, 5, false).unwrap();
        assert_eq!(t.normalization, Normalization::CDegrees);
        assert!(!t.assumed_torsion_free);
        let rows: Vec<(i64, i64, Partition)> = t
            .table
            .entries()
            .map(|(d, e, v)| (d, e, v.iter().next().unwrap().0.clone()))
            .collect();
        assert_eq!(
            rows,
            vec![
                (0, 0, p(&[1, 1, 1, 1, 1])),
                (1, 2, p(&[2, 2, 1])),
                (2, 3, p(&[3, 2])),
                (5, 5, p(&[5])),
            ]
        );
    }

    #[test]
    fn mod_ell_gl4_needs_override() {
        assert!(matches!(
            cohomology_mod_ell(4, 3, 4, false),
            Err(Error::GateRefused(_))
        ));
        let t = cohomology_mod_ell(4, 3, 4, true).unwrap();
        assert!(t.assumed_torsion_free);
        let cut = eigen_cut(&t, 4, 0);
        let v = cut.table.get(0, 0).unwrap();
        assert_eq!(v.coeff(&p(&[1, 1, 1, 1])), 1);
    }

    #[test]
    fn mod_ell_large_m_matches_char_zero() {
        let t = cohomology_mod_ell(3, 2, 7, false).unwrap();
        let c = to_c_normalization(&cohomology_trivial_table(3, 2).unwrap()).unwrap();
        assert_eq!(t.table, c.table);
    }

    #[test]
    fn eigen_cuts_x54() {
        let t = cohomology_trivial_table(5, 4).unwrap();
        let cut0 = eigen_cut(&t, 5, 0);
        assert_eq!(cut0.nonzero_degrees(), vec![5, 10]);
        let cut2 = eigen_cut(&t, 5, 2);
        assert_eq!(cut2.nonzero_degrees(), vec![6]);
        let cut4 = eigen_cut(&t, 5, 4);
        assert!(cut4.nonzero_degrees().is_empty());
    }

    #[test]
    fn les_balanced_x54() {
        let r = les_euler_check(5, 4, &p(&[1])).unwrap();
        assert_eq!(r.status, LesStatus::Balanced);
        assert!(r.buckets.iter().all(|b| b.balanced));
    }

    #[test]
    fn les_degenerate_d1() {
        let r = les_euler_check(2, 1, &p(&[1])).unwrap();
        assert_eq!(r.status, LesStatus::DegenerateSkipped);
    }

    #[test]
    fn les_coxeter() {
        let r = les_euler_check(2, 2, &Partition::empty()).unwrap();
        assert_eq!(r.status, LesStatus::Balanced);
        let r = les_euler_check(6, 6, &Partition::empty()).unwrap();
        assert_eq!(r.status, LesStatus::Balanced);
    }

    #[test]
    fn les_detects_corruption() {
        // a deliberately wrong "identity": drop the closed stratum at d < n
        let n = 5;
        let d = 3;
        let mu = p(&[2]);
        let lhs = euler_restricted(&cohomology_with_coeffs(n, d, &mu).unwrap()).unwrap();
        let open = cohomology_with_coeffs(n - 1, d - 1, &mu).unwrap();
        let mut rhs = BTreeMap::new();
        for (e, v) in euler_shifted(&open, 1, 0) {
            rhs.entry(e)
                .and_modify(|s: &mut VirtualChar| *s = s.add(&v))
                .or_insert(v);
        }
        for (e, v) in euler_shifted(&open, 2, 1) {
            rhs.entry(e)
                .and_modify(|s: &mut VirtualChar| *s = s.add(&v))
                .or_insert(v);
        }
        assert_ne!(lhs, rhs, "dropping the closed stratum must imbalance");
    }

    #[test]
    fn invariants_reports() {
        assert!(table_invariants(5, 4).unwrap().passed);
        // Coxeter: Steinberg in degree n-1
        let r = table_invariants(6, 6).unwrap();
        assert!(r.passed);
        let t = cohomology_trivial_table(6, 6).unwrap();
        let st = Partition::new(vec![1; 6]).unwrap();
        let deg: Vec<i64> = t
            .table
            .entries()
            .filter(|(_, _, v)| v.coeff(&st) != 0)
            .map(|(d, _, _)| d)
            .collect();
        assert_eq!(deg, vec![5]);
        // (n,1): top degree 4n-4
        let t = cohomology_trivial_table(6, 1).unwrap();
        assert_eq!(t.nonzero_degrees().last().copied(), Some(20));
        assert!(table_invariants(6, 1).unwrap().passed);
    }

    #[test]
    fn json_schema_fields() {
        let t = cohomology_mod_ell(5, 4, 5, false).unwrap();
        let v = serde_json::to_value(&t).unwrap();
        assert_eq!(v["n"], 5);
        assert_eq!(v["ring_tag"], "modular(5)");
        assert_eq!(v["normalization"], "C-degrees");
        let first = &v["entries"][0];
        assert!(first["degree"].is_i64());
        assert!(first["eigen_exp"].is_i64());
        assert!(first["eigen_exp_mod_m"].is_i64());
        assert!(first["labels"].is_object());
    }
}
