//! Constructive rainbow independent sets for `s` independent `s`-sets in `C_{2s+1}`.
//!
//! The pipeline pulls every set back to an arc through the doubling map,
//! rotates and sorts the arc starts so that `1 = a_1 <= a_2 <= ... <= a_s`,
//! picks a shift `k` that avoids the `2s` residues `a_i - 1 - i` and
//! `a_i + s - i`, and reads off one vertex per arc from a window of `s`
//! consecutive vertices. Pushing that window forward through the doubling
//! map gives an independent `s`-set with one vertex from each original set.
//!
//! All comparisons that decide the case and the split index `r` are done on
//! plain integers over the normalized starts; only the final vertices are
//! reduced modulo `2s + 1`.

use std::collections::BTreeSet;
use std::fmt;

use crate::cycle::{Arc, CycleContext, Vertex, VertexSet};
use crate::error::{Error, Result};
use crate::transform::DoublingMap;

/// An ordered family of independent `s`-sets of one cycle, where `s` is the
/// family length. Repeated sets are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    ctx: CycleContext,
    family: Vec<VertexSet>,
}

impl Instance {
    pub fn new(ctx: CycleContext, family: Vec<VertexSet>) -> Result<Self> {
        let s = family.len();
        for (index, set) in family.iter().enumerate() {
            let check = || -> Result<()> {
                if set.context() != ctx {
                    return Err(Error::ContextMismatch {
                        expected: ctx.order(),
                        found: set.context().order(),
                    });
                }
                if set.len() != s {
                    return Err(Error::WrongSize {
                        expected: s,
                        found: set.len(),
                    });
                }
                set.ensure_independent()
            };
            check().map_err(|e| e.in_set(index))?;
        }
        Ok(Self { ctx, family })
    }

    /// Builds an instance from 1-based labels.
    pub fn from_labels<L: AsRef<[i64]>>(t: usize, sets: &[L]) -> Result<Self> {
        let ctx = CycleContext::new(t)?;
        let family = sets
            .iter()
            .enumerate()
            .map(|(i, l)| VertexSet::from_labels(ctx, l.as_ref()).map_err(|e| e.in_set(i)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ctx, family)
    }

    pub fn context(&self) -> CycleContext {
        self.ctx
    }

    pub fn family(&self) -> &[VertexSet] {
        &self.family
    }

    pub fn size(&self) -> usize {
        self.family.len()
    }

    pub fn labels(&self) -> Vec<Vec<usize>> {
        self.family.iter().map(VertexSet::labels).collect()
    }
}

/// Arc starts after rotating and sorting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedArcs {
    /// 1-based starts `a_1..a_s`, nondecreasing, with `a_1 = 1`.
    pub starts: Vec<i64>,
    /// Offset added to every original 1-based start.
    pub rotation: i64,
    /// `permutation[p]` is the 0-based family index sitting at normalized position `p`.
    pub permutation: Vec<usize>,
}

impl NormalizedArcs {
    pub fn size(&self) -> usize {
        self.starts.len()
    }

    fn order(&self) -> i64 {
        2 * self.size() as i64 + 1
    }

    /// `a_i - 1 - i` for 1-based position `i`.
    fn lower(&self, i: usize) -> i64 {
        self.starts[i - 1] - 1 - i as i64
    }

    /// `a_i + s - i` for 1-based position `i`.
    fn upper(&self, i: usize) -> i64 {
        self.starts[i - 1] + self.size() as i64 - i as i64
    }

    /// Residues modulo `2s + 1` that the shift must avoid.
    pub fn forbidden_residues(&self) -> BTreeSet<i64> {
        let t = self.order();
        (1..=self.size())
            .flat_map(|i| [self.lower(i), self.upper(i)])
            .map(|x| x.rem_euclid(t))
            .collect()
    }
}

/// Rotates the arcs so the smallest start becomes 1, then stably sorts them.
pub fn normalize(arcs: &[Arc]) -> Result<NormalizedArcs> {
    let first = arcs
        .first()
        .ok_or_else(|| Error::InvalidParameters("empty family".into()))?;
    let ctx = first.context();
    if let Some(bad) = arcs.iter().find(|a| a.context() != ctx) {
        return Err(Error::ContextMismatch {
            expected: ctx.order(),
            found: bad.context().order(),
        });
    }
    let labels: Vec<i64> = arcs.iter().map(|a| a.start().label() as i64).collect();
    let min = *labels.iter().min().expect("non-empty");
    let rotation = 1 - min;
    let mut permutation: Vec<usize> = (0..arcs.len()).collect();
    // sort_by_key is stable, so equal starts keep family order.
    permutation.sort_by_key(|&i| labels[i]);
    let starts = permutation.iter().map(|&i| labels[i] + rotation).collect();
    Ok(NormalizedArcs {
        starts,
        rotation,
        permutation,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Case {
    /// `k < a_1 + s - 1`.
    One,
    /// `k > a_1 + s - 1`.
    Two,
}

impl Case {
    pub fn number(self) -> u8 {
        match self {
            Case::One => 1,
            Case::Two => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShiftChoice {
    pub k: i64,
    pub case: Case,
    /// 1-based split position.
    pub r: usize,
}

/// Shifts in `0..=2s` that avoid every forbidden residue, ascending.
pub fn admissible_shifts(norm: &NormalizedArcs) -> Vec<i64> {
    let forbidden = norm.forbidden_residues();
    (0..norm.order())
        .filter(|k| !forbidden.contains(k))
        .collect()
}

/// Picks the smallest admissible shift and classifies it.
///
/// With the smallest shift the construction always lands in Case 1;
/// [`classify_shift`] accepts any admissible shift and reaches Case 2 as well.
pub fn choose_k(norm: &NormalizedArcs) -> Result<ShiftChoice> {
    let s = norm.size();
    if s == 0 {
        return Err(Error::InvalidParameters("empty family".into()));
    }
    let k = admissible_shifts(norm)
        .first()
        .copied()
        .ok_or(Error::NoValidK { max: 2 * s })?;
    classify_shift(norm, k)
}

/// Determines the case and split position `r` for an admissible shift `k`.
pub fn classify_shift(norm: &NormalizedArcs, k: i64) -> Result<ShiftChoice> {
    let s = norm.size();
    if s == 0 {
        return Err(Error::InvalidParameters("empty family".into()));
    }
    if !(0..norm.order()).contains(&k) || norm.forbidden_residues().contains(&k) {
        return Err(Error::InvalidParameters(format!(
            "shift {k} is not admissible"
        )));
    }
    check_monotonicity(norm, k)?;

    let pivot = norm.starts[0] + s as i64 - 1;
    let (case, bound): (Case, fn(&NormalizedArcs, usize) -> i64) = if k < pivot {
        (Case::One, NormalizedArcs::lower)
    } else if k > pivot {
        (Case::Two, NormalizedArcs::upper)
    } else {
        // a_1 + s - 1 is the forbidden value a_1 + s - i at i = 1.
        return Err(Error::NoValidK { max: 2 * s });
    };
    let r = (1..=s)
        .rev()
        .find(|&i| k > bound(norm, i))
        .ok_or(Error::NoCaseIndex { k })?;
    Ok(ShiftChoice { k, case, r })
}

/// Checks that `{i : k > a_i - 1 - i}` and `{i : k > a_i + s - i}` are
/// prefixes and the matching `<` sets are suffixes of `1..=s`.
pub fn check_monotonicity(norm: &NormalizedArcs, k: i64) -> Result<()> {
    let s = norm.size();
    type Bound = fn(&NormalizedArcs, usize) -> i64;
    let bounds: [(u8, Bound); 2] = [(1, NormalizedArcs::lower), (2, NormalizedArcs::upper)];
    for (part, bound) in bounds {
        for i in 1..=s {
            let here = bound(norm, i);
            if k > here {
                if let Some(j) = (1..i).find(|&j| k <= bound(norm, j)) {
                    return Err(Error::ClaimViolation { part, k, i, j });
                }
            }
            if k < here {
                if let Some(j) = (i + 1..=s).find(|&j| k >= bound(norm, j)) {
                    return Err(Error::ClaimViolation {
                        part: part + 2,
                        k,
                        i,
                        j,
                    });
                }
            }
        }
    }
    Ok(())
}

/// Assigns one vertex to every normalized position, in normalized coordinates.
///
/// Each assigned vertex is checked to lie in its position's arc.
pub fn construct_assignment(norm: &NormalizedArcs, choice: &ShiftChoice) -> Result<Vec<Vertex>> {
    let s = norm.size();
    let ctx = CycleContext::odd(s)?;
    let (k, r, s_i) = (choice.k, choice.r, s as i64);
    (1..=s)
        .map(|i| {
            let i_i = i as i64;
            let label = match (choice.case, i <= r) {
                (Case::One, true) => k + i_i,
                (Case::One, false) => k + i_i - s_i,
                (Case::Two, true) => k + s_i + i_i,
                (Case::Two, false) => k + i_i,
            };
            let vertex = ctx.wrap(label - 1);
            let arc = Arc::new(ctx, ctx.wrap(norm.starts[i - 1] - 1), s)?;
            if !arc.contains(vertex) {
                return Err(Error::AssignmentOutOfArc {
                    position: i,
                    vertex: vertex.label(),
                });
            }
            Ok(vertex)
        })
        .collect()
}

/// Derivation record for a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    pub rotation: i64,
    /// 0-based family index at each normalized position.
    pub permutation: Vec<usize>,
    pub k: i64,
    pub case: Case,
    pub r: usize,
    /// First vertex of the constructed window, in normalized arc coordinates.
    pub window_start: Vertex,
}

/// One vertex per family member, forming an independent set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RainbowCertificate {
    /// `assignment[i]` is the vertex chosen from set `i`.
    pub assignment: Vec<Vertex>,
    pub trace: Trace,
}

impl RainbowCertificate {
    /// `(set index, vertex)` pairs, both 0-based.
    pub fn pairs(&self) -> Vec<(usize, Vertex)> {
        self.assignment.iter().copied().enumerate().collect()
    }
}

/// Builds a rainbow independent `s`-set for `s` independent `s`-sets in `C_{2s+1}`.
pub fn solve(inst: &Instance) -> Result<RainbowCertificate> {
    let ctx = inst.context();
    let s = inst.size();
    if ctx.order() != 2 * s + 1 {
        return Err(Error::WrongCycleOrder { t: ctx.order(), s });
    }
    let doubling = DoublingMap::new(ctx)?;
    let arcs = inst
        .family()
        .iter()
        .enumerate()
        .map(|(i, set)| {
            doubling
                .independent_set_to_arc(set)
                .map_err(|e| e.in_set(i))
        })
        .collect::<Result<Vec<_>>>()?;

    let norm = normalize(&arcs)?;
    let choice = choose_k(&norm)?;
    let window = construct_assignment(&norm, &choice)?;
    let window_arc = VertexSet::new(ctx, window.iter().copied())?
        .as_arc()
        .filter(|a| a.length() == s)
        .ok_or(Error::NotAnArc)?;

    let mut assignment = vec![ctx.wrap(0); s];
    for (position, &vertex) in window.iter().enumerate() {
        let original = ctx.translate(vertex, -norm.rotation);
        assignment[norm.permutation[position]] = doubling.apply(original);
    }
    Ok(RainbowCertificate {
        assignment,
        trace: Trace {
            rotation: norm.rotation,
            permutation: norm.permutation,
            k: choice.k,
            case: choice.case,
            r: choice.r,
            window_start: window_arc.start(),
        },
    })
}

/// Why a proposed rainbow assignment was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rejection {
    Size {
        expected: usize,
        found: usize,
    },
    /// A set index out of range or used twice (0-based).
    Index {
        index: usize,
    },
    /// The vertex is not in the set it was drawn from (0-based index).
    Membership {
        index: usize,
        vertex: Vertex,
    },
    /// A 1-based vertex label that does not exist on the cycle.
    OutOfRange {
        index: usize,
        label: usize,
    },
    Distinctness {
        vertex: Vertex,
    },
    Independence {
        u: Vertex,
        v: Vertex,
    },
}

impl Rejection {
    pub fn code(&self) -> &'static str {
        match self {
            Rejection::Size { .. } => "size",
            Rejection::Index { .. } => "index",
            Rejection::Membership { .. } => "membership",
            Rejection::OutOfRange { .. } => "range",
            Rejection::Distinctness { .. } => "distinctness",
            Rejection::Independence { .. } => "independence",
        }
    }
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::Size { expected, found } => {
                write!(f, "expected {expected} representatives, found {found}")
            }
            Rejection::Index { index } => {
                write!(
                    f,
                    "set index {} is invalid or repeated",
                    index.wrapping_add(1)
                )
            }
            Rejection::OutOfRange { index, label } => {
                write!(
                    f,
                    "vertex {label} chosen for set {} is not on the cycle",
                    index + 1
                )
            }
            Rejection::Membership { index, vertex } => {
                write!(f, "vertex {vertex} is not in set {}", index + 1)
            }
            Rejection::Distinctness { vertex } => write!(f, "vertex {vertex} is used twice"),
            Rejection::Independence { u, v } => write!(f, "vertices {u} and {v} are adjacent"),
        }
    }
}

/// Re-derives validity of `(set index, vertex)` pairs from scratch: one
/// representative per set, each drawn from its set, all distinct, and
/// independent as a whole.
pub fn verify_assignment(inst: &Instance, pairs: &[(usize, Vertex)]) -> Result<(), Rejection> {
    let s = inst.size();
    if pairs.len() != s {
        return Err(Rejection::Size {
            expected: s,
            found: pairs.len(),
        });
    }
    let mut seen = vec![false; s];
    for &(index, _) in pairs {
        if index >= s || std::mem::replace(&mut seen[index], true) {
            return Err(Rejection::Index { index });
        }
    }
    for &(index, vertex) in pairs {
        if !inst.family()[index].contains(vertex) {
            return Err(Rejection::Membership { index, vertex });
        }
    }
    let mut vertices: Vec<Vertex> = pairs.iter().map(|&(_, v)| v).collect();
    vertices.sort_unstable();
    if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
        return Err(Rejection::Distinctness { vertex: w[0] });
    }
    let set = VertexSet::new(inst.context(), vertices).expect("members are in range and distinct");
    match set.find_edge() {
        Some((u, v)) => Err(Rejection::Independence { u, v }),
        None => Ok(()),
    }
}

/// Checks a certificate against its instance, ignoring the trace.
pub fn verify_certificate(inst: &Instance, cert: &RainbowCertificate) -> Result<(), Rejection> {
    verify_assignment(inst, &cert.pairs())
}
