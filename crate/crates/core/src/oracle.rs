//! Brute-force ground truth and exhaustive scans.
//!
//! Nothing here calls into the constructive solver except
//! [`exhaustive_theorem_check`], whose job is to run it on every family.

use std::ops::Range;
use std::thread;
use std::time::{Duration, Instant};

use crate::cycle::{Arc, CycleContext, Vertex, VertexSet};
use crate::error::{Error, Result};
use crate::solver::{self, Instance};
use crate::transform::DoublingMap;

/// All independent `m`-subsets of `C_t`, in lexicographic order of their
/// sorted 1-based labels.
pub fn enumerate_independent_sets(ctx: CycleContext, m: usize) -> Result<Vec<VertexSet>> {
    let t = ctx.order();
    if m == 0 || m >= t {
        return Err(Error::InvalidParameters(format!(
            "set size {m} must lie in 1..{t}"
        )));
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(m);
    extend_independent(ctx, m, 0, &mut current, &mut out);
    Ok(out)
}

fn extend_independent(
    ctx: CycleContext,
    m: usize,
    from: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<VertexSet>,
) {
    let t = ctx.order();
    if current.len() == m {
        // 0 and t-1 are adjacent through the wrap.
        if !(current[0] == 0 && current[m - 1] == t - 1) {
            let set = VertexSet::new(ctx, current.iter().map(|&r| ctx.wrap(r as i64)))
                .expect("distinct residues");
            out.push(set);
        }
        return;
    }
    let remaining = m - current.len();
    // Each further member needs two more slots, except the last one.
    let mut next = from;
    while next + 2 * (remaining - 1) < t {
        current.push(next);
        extend_independent(ctx, m, next + 2, current, out);
        current.pop();
        next += 1;
    }
}

/// The lexicographically smallest rotation of a set.
pub fn canonical_rotation(set: &VertexSet) -> VertexSet {
    let ctx = set.context();
    (0..ctx.order() as i64)
        .map(|by| {
            VertexSet::new(ctx, set.members().iter().map(|&v| ctx.translate(v, by)))
                .expect("rotation is a bijection")
        })
        .min_by(|a, b| a.members().cmp(b.members()))
        .expect("t >= 3")
}

/// Searches for `m` family indices with distinct, pairwise non-adjacent
/// representatives.
///
/// Indices are tried in order, and within an index candidate vertices
/// ascending; choosing an index is tried before skipping it. Returns 0-based
/// `(set index, vertex)` pairs in increasing index order.
pub fn brute_force_rainbow(family: &[VertexSet], m: usize) -> Option<Vec<(usize, Vertex)>> {
    if m == 0 {
        return Some(Vec::new());
    }
    let ctx = family.first()?.context();
    let mut used = vec![false; ctx.order()];
    let mut chosen = Vec::with_capacity(m);
    search(ctx, family, m, 0, &mut used, &mut chosen).then_some(chosen)
}

fn search(
    ctx: CycleContext,
    family: &[VertexSet],
    m: usize,
    index: usize,
    used: &mut [bool],
    chosen: &mut Vec<(usize, Vertex)>,
) -> bool {
    if chosen.len() == m {
        return true;
    }
    if family.len() - index < m - chosen.len() {
        return false;
    }
    for &v in family[index].members() {
        let blocked = used[v.residue()]
            || used[ctx.predecessor(v).residue()]
            || used[ctx.successor(v).residue()];
        if blocked {
            continue;
        }
        used[v.residue()] = true;
        chosen.push((index, v));
        if search(ctx, family, m, index + 1, used, chosen) {
            return true;
        }
        chosen.pop();
        used[v.residue()] = false;
    }
    search(ctx, family, m, index + 1, used, chosen)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanKind {
    Exhaustive,
    Conjecture,
}

impl ScanKind {
    pub fn name(self) -> &'static str {
        match self {
            ScanKind::Exhaustive => "exhaustive",
            ScanKind::Conjecture => "conjecture",
        }
    }
}

/// A family for which the scan did not produce a verified rainbow set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanFailure {
    /// 1-based labels of every set in the family.
    pub sets: Vec<Vec<usize>>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub kind: ScanKind,
    pub t: usize,
    pub s: usize,
    pub families: u64,
    pub failures: Vec<ScanFailure>,
    pub workers: usize,
    pub elapsed: Duration,
}

impl ScanReport {
    pub fn is_clean(&self) -> bool {
        self.failures.is_empty()
    }
}

fn checked_power(base: u64, exp: usize) -> Result<u64> {
    (0..exp)
        .try_fold(1u64, |acc, _| acc.checked_mul(base))
        .ok_or_else(|| {
            Error::InvalidParameters(format!("{base}^{exp} families overflow the scan counter"))
        })
}

/// Number of rotation-reduced families scanned for a given `s`: `(2s+1)^(s-1)`.
pub fn theorem_family_count(s: usize) -> Result<u64> {
    if s == 0 {
        return Err(Error::InvalidParameters("s must be at least 1".into()));
    }
    checked_power(2 * s as u64 + 1, s - 1)
}

/// The family with `a_1 = 1` and `(a_2, ..., a_s)` given by the base-`(2s+1)`
/// digits of `index`, most significant first, pushed through the doubling map.
pub fn theorem_family(s: usize, index: u64) -> Result<Instance> {
    let ctx = CycleContext::odd(s)?;
    let doubling = DoublingMap::new(ctx)?;
    let t = ctx.order() as u64;
    let mut starts = vec![0u64; s];
    let mut rest = index;
    for slot in starts[1..].iter_mut().rev() {
        *slot = rest % t;
        rest /= t;
    }
    if rest != 0 {
        return Err(Error::InvalidParameters(format!(
            "family index {index} out of range"
        )));
    }
    let family = starts
        .into_iter()
        .map(|a| {
            let arc = Arc::new(ctx, ctx.wrap(a as i64), s)?;
            doubling.arc_to_independent_set(&arc)
        })
        .collect::<Result<Vec<_>>>()?;
    Instance::new(ctx, family)
}

/// Streams every rotation-reduced family for `s`, in index order.
pub fn theorem_families(s: usize) -> Result<impl Iterator<Item = Instance>> {
    let count = theorem_family_count(s)?;
    Ok((0..count).map(move |i| theorem_family(s, i).expect("index in range")))
}

/// Splits `0..total` into at most `workers` contiguous ranges and collects the
/// failures each worker reports, in index order.
fn scan_parallel<F>(total: u64, workers: usize, check: F) -> Vec<ScanFailure>
where
    F: Fn(u64) -> Option<ScanFailure> + Sync,
{
    let workers = workers.max(1).min(total.max(1) as usize) as u64;
    let chunk = total.div_ceil(workers);
    let ranges: Vec<Range<u64>> = (0..workers)
        .map(|w| (w * chunk).min(total)..((w + 1) * chunk).min(total))
        .collect();
    if ranges.len() == 1 {
        return ranges[0].clone().filter_map(&check).collect();
    }
    thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .into_iter()
            .map(|range| {
                let check = &check;
                scope.spawn(move || range.filter_map(check).collect::<Vec<_>>())
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("scan worker panicked"))
            .collect()
    })
}

/// Solves and verifies every rotation-reduced family of `s` arcs in `C_{2s+1}`.
pub fn exhaustive_theorem_check(s: usize, workers: usize) -> Result<ScanReport> {
    let families = theorem_family_count(s)?;
    let started = Instant::now();
    let failures = scan_parallel(families, workers, |index| {
        let inst = match theorem_family(s, index) {
            Ok(inst) => inst,
            Err(e) => {
                return Some(ScanFailure {
                    sets: Vec::new(),
                    reason: format!("family {index}: {e}"),
                })
            }
        };
        let reason = match solver::solve(&inst) {
            Err(e) => format!("{}: {e}", e.kind()),
            Ok(cert) => match solver::verify_certificate(&inst, &cert) {
                Ok(()) => return None,
                Err(rejection) => format!("{}: {rejection}", rejection.code()),
            },
        };
        Some(ScanFailure {
            sets: inst.labels(),
            reason,
        })
    });
    Ok(ScanReport {
        kind: ScanKind::Exhaustive,
        t: 2 * s + 1,
        s,
        families,
        failures,
        workers,
        elapsed: started.elapsed(),
    })
}

fn check_conjecture_parameters(t: usize, s: usize) -> Result<CycleContext> {
    if s == 0 || 2 * s >= t {
        return Err(Error::InvalidParameters(format!(
            "need 1 <= s < t/2, got t = {t}, s = {s}"
        )));
    }
    CycleContext::new(t)
}

/// Independent `s`-sets of `C_t` and the rotation representatives among them.
fn conjecture_space(ctx: CycleContext, s: usize) -> Result<(Vec<VertexSet>, Vec<VertexSet>)> {
    let sets = enumerate_independent_sets(ctx, s)?;
    let reps = sets
        .iter()
        .filter(|set| canonical_rotation(set) == **set)
        .cloned()
        .collect();
    Ok((sets, reps))
}

/// Number of families [`conjecture_scan`] examines for `(t, s)`.
pub fn conjecture_family_count(t: usize, s: usize) -> Result<u64> {
    let ctx = check_conjecture_parameters(t, s)?;
    let (sets, reps) = conjecture_space(ctx, s)?;
    checked_power(sets.len() as u64, s - 1)?
        .checked_mul(reps.len() as u64)
        .ok_or_else(|| Error::InvalidParameters("family count overflows".into()))
}

/// Runs the brute-force search on every family of `s` independent `s`-sets
/// of `C_t` whose first set is a rotation representative.
pub fn conjecture_scan(t: usize, s: usize, workers: usize) -> Result<ScanReport> {
    let ctx = check_conjecture_parameters(t, s)?;
    let (sets, reps) = conjecture_space(ctx, s)?;
    let tail = checked_power(sets.len() as u64, s - 1)?;
    let families = conjecture_family_count(t, s)?;
    let n = sets.len() as u64;
    let started = Instant::now();
    let failures = scan_parallel(families, workers, |index| {
        let mut family = Vec::with_capacity(s);
        family.push(reps[(index / tail) as usize].clone());
        let mut rest = index % tail;
        let mut others = vec![0usize; s - 1];
        for slot in others.iter_mut().rev() {
            *slot = (rest % n) as usize;
            rest /= n;
        }
        family.extend(others.into_iter().map(|i| sets[i].clone()));
        let inst = Instance::new(ctx, family).expect("enumerated sets are valid");
        let reason = match brute_force_rainbow(inst.family(), s) {
            None => "no rainbow independent set".to_string(),
            Some(pairs) => match solver::verify_assignment(&inst, &pairs) {
                Ok(()) => return None,
                Err(rejection) => format!("{}: {rejection}", rejection.code()),
            },
        };
        Some(ScanFailure {
            sets: inst.labels(),
            reason,
        })
    });
    Ok(ScanReport {
        kind: ScanKind::Conjecture,
        t,
        s,
        families,
        failures,
        workers,
        elapsed: started.elapsed(),
    })
}
