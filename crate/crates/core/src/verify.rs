//! Acceptance sweep drivers: each criterion is a pure function returning a
//! structured result, shared by the acceptance test suite and the CLI
//! `verify-all` subcommand.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::time::Instant;

use crate::brauer::{build_line, reps_isomorphic};
use crate::cohomology::{
    cohomology_mod_ell, cohomology_trivial_table, les_euler_check, LesStatus,
};
use crate::complex::{
    build_d_model, chain_map_shapes, hom_k_dims, truncated_e, verify_two_term,
};
use crate::partition::{partitions_of, saturated_beta_set, Partition};
use crate::{Error, Result};

#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: String,
    pub passed: bool,
    pub elapsed_ms: f64,
    pub budget_ms: Option<f64>,
    pub details: Vec<String>,
}

impl CriterionResult {
    pub fn summary_line(&self) -> String {
        let budget = match self.budget_ms {
            Some(b) => format!(" [{:.1} ms / budget {:.0} ms]", self.elapsed_ms, b),
            None => format!(" [{:.1} ms]", self.elapsed_ms),
        };
        format!(
            "criterion {}: {}{} - {}",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            budget,
            self.name
        )
    }
}

fn finish(
    id: u8,
    name: &str,
    started: Instant,
    budget_ms: Option<f64>,
    content_ok: bool,
    mut details: Vec<String>,
) -> CriterionResult {
    let elapsed_ms = started.elapsed().as_secs_f64() * 1e3;
    let within = budget_ms.is_none_or(|b| elapsed_ms < b);
    if !within {
        details.push(format!("time budget exceeded: {elapsed_ms:.1} ms"));
    }
    CriterionResult {
        id,
        name: name.to_string(),
        passed: content_ok && within,
        elapsed_ms,
        budget_ms,
        details,
    }
}

/// Criterion 1: the golden X_{5,4} table, exact, < 1 ms (library call).
pub fn criterion_1() -> CriterionResult {
    let golden: Vec<(i64, i64, Vec<u32>)> = vec![
        (5, 0, vec![1, 1, 1, 1, 1]),
        (6, 2, vec![2, 2, 1]),
        (7, 3, vec![3, 2]),
        (10, 5, vec![5]),
    ];
    // warm-up, then time the call itself
    let _ = cohomology_trivial_table(5, 4);
    let started = Instant::now();
    let table = cohomology_trivial_table(5, 4);
    let compute_ms = started.elapsed().as_secs_f64() * 1e3;

    let mut details = Vec::new();
    let ok = match table {
        Ok(t) => {
            let rows: Vec<(i64, i64, Vec<u32>)> = t
                .table
                .entries()
                .map(|(d, e, v)| {
                    let (l, _) = v.iter().next().unwrap();
                    (d, e, l.parts().to_vec())
                })
                .collect();
            let exact = rows == golden && t.zero_degrees() == vec![8, 9];
            details.push(format!("rows {rows:?}; computed in {compute_ms:.3} ms"));
            exact
        }
        Err(e) => {
            details.push(format!("table failed: {e}"));
            false
        }
    };
    let within = compute_ms < 1.0;
    if !within {
        details.push(format!("library call took {compute_ms:.3} ms >= 1 ms"));
    }
    CriterionResult {
        id: 1,
        name: "X_{5,4} golden table".into(),
        passed: ok && within,
        elapsed_ms: compute_ms,
        budget_ms: Some(1.0),
        details,
    }
}

/// Criterion 2: structural checks of the trivial table for all
/// 1 <= d <= n <= 14: first nonzero degree 2n-d-1, top degree 4n-2d-2, top
/// label (n) with exponent 2n-d-1, zero-gap length exactly 2n-2d.
///
/// The zero-gap assertion is taken literally; the actual count for
/// n >= 2d is 2n-2d-1 (all d+1 beads of the saturated beta-set are addable
/// there), so those cells fail and are reported.
pub fn criterion_2() -> CriterionResult {
    let started = Instant::now();
    let mut details = Vec::new();
    let mut failures = Vec::new();
    let mut cells = 0usize;
    for n in 1..=14u32 {
        for d in 1..=n {
            cells += 1;
            match cohomology_trivial_table(n, d) {
                Ok(t) => {
                    let nn = n as i64;
                    let dd = d as i64;
                    let degs = t.nonzero_degrees();
                    let first_ok = degs.first() == Some(&(2 * nn - dd - 1));
                    let top = degs.last().copied();
                    let trivial = Partition::row(n);
                    let top_ok = top == Some(4 * nn - 2 * dd - 2)
                        && t.table
                            .get(4 * nn - 2 * dd - 2, 2 * nn - dd - 1)
                            .map(|v| v.coeff(&trivial) == 1)
                            .unwrap_or(false);
                    let gap = t.zero_degrees().len() as i64;
                    let gap_ok = gap == 2 * nn - 2 * dd;
                    if !(first_ok && top_ok && gap_ok) {
                        failures.push(format!(
                            "(n={n},d={d}): first_ok={first_ok} top_ok={top_ok} zero-gap {gap} \
                             (asserted {})",
                            2 * nn - 2 * dd
                        ));
                    }
                }
                Err(e) => failures.push(format!("(n={n},d={d}): {e}")),
            }
        }
    }
    let ok = failures.is_empty();
    details.push(format!("{} cells checked, {} failed", cells, failures.len()));
    if !ok {
        details.push(
            "zero-gap = 2n-2d holds only for n < 2d; for n >= 2d the set of addable hooks \
             is all of the saturated beta-set (d+1 entries), giving 2n-2d-1 zero degrees. \
             Failing cells:"
                .into(),
        );
        details.extend(failures.iter().take(8).cloned());
        if failures.len() > 8 {
            details.push(format!("... and {} more (all with n >= 2d)", failures.len() - 8));
        }
    }
    finish(2, "trivial-table structural checks (1<=d<=n<=14)", started, Some(1000.0), ok, details)
}

/// Criterion 3: the long-exact-sequence Euler oracle balances in every
/// eigenvalue bucket for 2 <= n <= 12, 1 <= d <= n, |mu| = n-d <= 6. The
/// d = 1 cells are n/a (the restriction triangle needs d >= 2; the base
/// cases of the theory are proved separately).
pub fn criterion_3() -> CriterionResult {
    let started = Instant::now();
    let mut details = Vec::new();
    let mut checked = 0usize;
    let mut skipped = 0usize;
    let mut failures = Vec::new();
    for n in 2..=12u32 {
        for d in 1..=n {
            if n - d > 6 {
                continue;
            }
            for mu in partitions_of(n - d) {
                match les_euler_check(n, d, &mu) {
                    Ok(rep) => match rep.status {
                        LesStatus::Balanced => checked += 1,
                        LesStatus::DegenerateSkipped => skipped += 1,
                        LesStatus::Imbalanced => {
                            failures.push(format!("(n={n},d={d},mu={mu})"))
                        }
                    },
                    Err(e) => failures.push(format!("(n={n},d={d},mu={mu}): {e}")),
                }
            }
        }
    }
    let ok = failures.is_empty();
    details.push(format!(
        "{checked} cells balanced, {skipped} n/a at d=1, {} imbalanced",
        failures.len()
    ));
    details.extend(failures.into_iter().take(8));
    finish(3, "LES Euler oracle sweep (n<=12)", started, Some(30_000.0), ok, details)
}

/// Criterion 4: beta-set padding independence of (mu*x, degree, exponent)
/// for 500 seeded random (mu, d, padding) triples.
pub fn criterion_4() -> CriterionResult {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_be7a);
    let mut details = Vec::new();
    let mut failures = 0usize;
    for _ in 0..500 {
        let size = rng.gen_range(0..=10u32);
        let pool = partitions_of(size);
        let mu = pool[rng.gen_range(0..pool.len())].clone();
        let d = rng.gen_range(1..=6u32);
        let extra = rng.gen_range(1..=5u32);
        let n = mu.size() + d;
        let base = saturated_beta_set(&mu, d);
        let mut padded = base.clone();
        for _ in 0..extra {
            padded = padded.shift();
        }
        let base_hooks = base.addable_hooks(d);
        let padded_hooks = padded.addable_hooks(d);
        if base_hooks.len() != padded_hooks.len() {
            failures += 1;
            continue;
        }
        for &x in &base_hooks {
            let y = x + extra;
            let same = base.add_hook(x, d).unwrap() == padded.add_hook(y, d).unwrap()
                && base.hook_degree(x, n, d).unwrap() == padded.hook_degree(y, n, d).unwrap()
                && base.frobenius_exponent(x, n).unwrap()
                    == padded.frobenius_exponent(y, n).unwrap();
            if !same {
                failures += 1;
            }
        }
    }
    let ok = failures == 0;
    details.push(format!("500 triples sampled, {failures} mismatches"));
    finish(4, "beta-set padding independence", started, None, ok, details)
}

/// Criterion 5: Brauer-line invariants for m <= 8, r <= 3, p in {2,3,5}:
/// Hom/End dimension table, syzygy periodicity Omega^{2m} k = k, exceptional
/// step, and the two-factor walk modules.
pub fn criterion_5() -> CriterionResult {
    let started = Instant::now();
    let mut details = Vec::new();
    let mut failures = Vec::new();
    let mut cells = 0usize;
    for m in 1..=8usize {
        for r in 1..=3usize {
            for p in [2u64, 3, 5] {
                cells += 1;
                if let Err(e) = check_line_cell(m, r, p) {
                    failures.push(format!("(m={m},r={r},p={p}): {e}"));
                }
            }
        }
    }
    let ok = failures.is_empty();
    details.push(format!("{cells} lines checked, {} failed", failures.len()));
    details.extend(failures.into_iter().take(8));
    finish(5, "Brauer-line invariants (m<=8, r<=3, p in {2,3,5})", started, Some(60_000.0), ok, details)
}

fn check_line_cell(m: usize, r: usize, p: u64) -> Result<()> {
    // construction verifies the Hom/End table; re-assert it explicitly
    let line = build_line(m, r, p)?;
    for s in 1..=m {
        for t in 1..=m {
            let dim = line.hom_pp(s, t).dim();
            let expected = if s == t {
                if s == m {
                    r + 1
                } else {
                    2
                }
            } else if s.abs_diff(t) == 1 {
                1
            } else {
                0
            };
            if dim != expected {
                return Err(Error::Inconsistency(format!(
                    "dim Hom(P_{s},P_{t}) = {dim}, expected {expected}"
                )));
            }
        }
    }
    let k = line.trivial();
    for i in 1..m {
        let om = line.syzygy_power(&k, i)?;
        let factors = om.composition_factors();
        let ok = factors.len() == 2
            && factors.get(&i) == Some(&1)
            && factors.get(&(i + 1)) == Some(&1);
        if !ok {
            return Err(Error::Inconsistency(format!(
                "Omega^{i} k has factors {factors:?}, expected {{S_{i}, S_{}}}",
                i + 1
            )));
        }
    }
    let om_m = line.syzygy_power(&k, m)?;
    let factors = om_m.composition_factors();
    if !(factors.len() == 1 && factors.get(&m) == Some(&r)) {
        return Err(Error::Inconsistency(format!(
            "Omega^{m} k has factors {factors:?}, expected S_{m}^{r}"
        )));
    }
    let om_2m = line.syzygy_power(&k, 2 * m)?;
    if !reps_isomorphic(&om_2m, &k)? {
        return Err(Error::Inconsistency(format!("Omega^{} k != k", 2 * m)));
    }
    Ok(())
}

/// Criterion 6: E(j) is partial-tilting for m in 2..=7, r in 1..=3,
/// j in 2..=m, with identical Hom tables over p in {2,3,5}.
pub fn criterion_6() -> CriterionResult {
    let started = Instant::now();
    let mut details = Vec::new();
    let mut failures = Vec::new();
    let mut cells = 0usize;
    for m in 2..=7usize {
        for r in 1..=3usize {
            let lines: Vec<_> = [2u64, 3, 5]
                .iter()
                .map(|&p| build_line(m, r, p))
                .collect::<Result<_>>()
                .unwrap_or_default();
            if lines.len() != 3 {
                failures.push(format!("(m={m},r={r}): line construction failed"));
                continue;
            }
            for j in 2..=m {
                cells += 1;
                let mut tables = Vec::new();
                let mut cell_ok = true;
                for line in &lines {
                    match truncated_e(line, j).and_then(|e| hom_k_dims(line, &e, &e)) {
                        Ok(t) => tables.push(t),
                        Err(e) => {
                            failures.push(format!("(m={m},r={r},j={j}): {e}"));
                            cell_ok = false;
                            break;
                        }
                    }
                }
                if !cell_ok {
                    continue;
                }
                let vanish = tables.iter().all(|t| t.vanishes_off_zero());
                let agree = tables.windows(2).all(|w| w[0] == w[1]);
                if !vanish || !agree {
                    failures.push(format!(
                        "(m={m},r={r},j={j}): vanish={vanish} p-agreement={agree} tables {:?}",
                        tables
                    ));
                }
            }
        }
    }
    let ok = failures.is_empty();
    details.push(format!(
        "{cells} (m,r,j) cells x 3 primes checked, {} failed",
        failures.len()
    ));
    details.extend(failures.into_iter().take(8));
    finish(6, "partial-tilting sweep for E(j)", started, Some(120_000.0), ok, details)
}

/// Criterion 7: chain-map classification for the same (m, r, j) sweep:
/// for |a| > 1 every cycle matches the two legal adjacency patterns and is
/// a boundary; for |a| = 1 every cycle is a boundary.
pub fn criterion_7() -> CriterionResult {
    let started = Instant::now();
    let mut details = Vec::new();
    let mut failures = Vec::new();
    let mut shifts = 0usize;
    for m in 2..=7usize {
        for r in 1..=3usize {
            let line = match build_line(m, r, 2) {
                Ok(l) => l,
                Err(e) => {
                    failures.push(format!("(m={m},r={r}): {e}"));
                    continue;
                }
            };
            for j in 2..=m {
                let e = match truncated_e(&line, j) {
                    Ok(e) => e,
                    Err(err) => {
                        failures.push(format!("(m={m},r={r},j={j}): {err}"));
                        continue;
                    }
                };
                let span = e.hi() - e.lo;
                let dims = match hom_k_dims(&line, &e, &e) {
                    Ok(t) => t,
                    Err(err) => {
                        failures.push(format!("(m={m},r={r},j={j}): {err}"));
                        continue;
                    }
                };
                for a in -span..=span {
                    if a == 0 {
                        continue;
                    }
                    shifts += 1;
                    if a.abs() == 1 {
                        if dims.dim(a) != 0 {
                            failures.push(format!(
                                "(m={m},r={r},j={j},a={a}): cycle survives homotopy"
                            ));
                        }
                        continue;
                    }
                    match chain_map_shapes(&line, &e, a) {
                        Ok(rep) if rep.passed => {}
                        Ok(rep) => failures.push(format!(
                            "(m={m},r={r},j={j},a={a}): {:?} null={} ",
                            rep.violations, rep.all_null_homotopic
                        )),
                        Err(err) => {
                            failures.push(format!("(m={m},r={r},j={j},a={a}): {err}"))
                        }
                    }
                }
            }
        }
    }
    let ok = failures.is_empty();
    details.push(format!("{shifts} shifts classified, {} failures", failures.len()));
    details.extend(failures.into_iter().take(8));
    finish(7, "chain-map classification sweep", started, None, ok, details)
}

/// Admissible torsion-free cells (n, d, m) with n <= 12 and m <= n.
pub fn admissible_cells(max_n: u32) -> Vec<(u32, u32, u32)> {
    let mut cells = Vec::new();
    for n in 2..=max_n {
        for d in 1..=n {
            for m in 1..=n {
                use crate::cohomology::{torsion_free_gate, TorsionFreeStatus};
                if torsion_free_gate(n, d, m) != TorsionFreeStatus::NotGuaranteed {
                    cells.push((n, d, m));
                }
            }
        }
    }
    cells
}

/// Criterion 8: D-model coherence for all admissible (n, d, m) with
/// n <= 12 and r in {1, 2}: cohomology exactly in degrees 3n-d-1-m and
/// 4n-2d-2, the two-term syzygy identity, the two-factor bottom shape,
/// j = m+d-n+1, and the printed-formula discrepancy flagged.
pub fn criterion_8() -> CriterionResult {
    let started = Instant::now();
    let mut details = Vec::new();
    let mut failures = Vec::new();
    let cells = admissible_cells(12);
    let mut checked = 0usize;
    for &(n, d, m) in &cells {
        for r in [1usize, 2] {
            checked += 1;
            match build_d_model(n, d, m, r, 2) {
                Ok(model) => {
                    let rep = &model.report;
                    let j_ok = rep.j as i64 == m as i64 + d as i64 - n as i64 + 1
                        && rep.printed_j_discrepancy;
                    let degrees_ok = rep.bottom_degree == 3 * n as i64 - d as i64 - 1 - m as i64
                        && rep.top_degree == 4 * n as i64 - 2 * d as i64 - 2;
                    let two = verify_two_term(&model.line, &model.complex);
                    let two_ok = matches!(&two, Ok(t) if t.isomorphic);
                    if !(j_ok && degrees_ok && rep.passed && two_ok) {
                        failures.push(format!(
                            "(n={n},d={d},m={m},r={r}): j_ok={j_ok} degrees_ok={degrees_ok} \
                             two_term={two_ok}"
                        ));
                    }
                }
                Err(e) => failures.push(format!("(n={n},d={d},m={m},r={r}): {e}")),
            }
        }
    }
    let ok = failures.is_empty();
    details.push(format!(
        "{} admissible cells x 2 multiplicities checked, {} failed",
        checked,
        failures.len()
    ));
    details.extend(failures.into_iter().take(8));
    finish(8, "D-model coherence sweep", started, None, ok, details)
}

/// Criterion 9: the modular gate refuses unguaranteed parameters without an
/// override, and accepts (5,4,5) through the remark exception.
pub fn criterion_9() -> CriterionResult {
    let started = Instant::now();
    let mut details = Vec::new();
    let refused = matches!(
        cohomology_mod_ell(20, 5, 7, false),
        Err(Error::GateRefused(_))
    );
    details.push(format!("(20,5,7) without override refused: {refused}"));
    let overridden = cohomology_mod_ell(20, 5, 7, true)
        .map(|t| t.assumed_torsion_free)
        .unwrap_or(false);
    details.push(format!("(20,5,7) with override marked unverified: {overridden}"));
    let remark = cohomology_mod_ell(5, 4, 5, false).is_ok();
    details.push(format!("(5,4,5) accepted via remark exception: {remark}"));
    let guaranteed = cohomology_mod_ell(8, 4, 7, false).is_ok();
    details.push(format!("(8,4,7) accepted as guaranteed: {guaranteed}"));
    let ok = refused && overridden && remark && guaranteed;
    finish(9, "modular table gate", started, None, ok, details)
}

pub fn run_all() -> Vec<CriterionResult> {
    vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
    ]
}

pub fn render_matrix(results: &[CriterionResult], verbose: bool) -> String {
    let mut out = String::new();
    for r in results {
        out.push_str(&r.summary_line());
        out.push('\n');
        if verbose || !r.passed {
            for d in &r.details {
                out.push_str("    ");
                out.push_str(d);
                out.push('\n');
            }
        }
    }
    let passed = results.iter().filter(|r| r.passed).count();
    out.push_str(&format!("{passed}/{} criteria passed\n", results.len()));
    out
}
