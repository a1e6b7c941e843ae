//! Arithmetic on the cycle `C_t`.
//!
//! Vertices are stored as residues `0..t`. Anything user-facing (documents,
//! error messages, `Display`) uses the 1-based labels `1..=t`, so vertex `v`
//! is adjacent to `v + 1` and vertex `t` is adjacent to vertex `1`.

use std::fmt;

use crate::error::{Error, Result};

/// The ambient cycle `C_t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleContext {
    t: usize,
}

impl CycleContext {
    pub fn new(t: usize) -> Result<Self> {
        if t < 3 {
            return Err(Error::CycleTooSmall { t });
        }
        Ok(Self { t })
    }

    /// The odd cycle `C_{2s+1}`.
    pub fn odd(s: usize) -> Result<Self> {
        Self::new(2 * s + 1)
    }

    pub fn order(&self) -> usize {
        self.t
    }

    /// Reduces an arbitrary integer to a vertex.
    pub fn wrap(&self, value: i64) -> Vertex {
        Vertex(value.rem_euclid(self.t as i64) as usize)
    }

    /// Vertex from its 0-based residue, checked against the cycle order.
    pub fn vertex(&self, residue: usize) -> Result<Vertex> {
        if residue >= self.t {
            return Err(Error::VertexOutOfRange {
                vertex: residue as i64 + 1,
                t: self.t,
            });
        }
        Ok(Vertex(residue))
    }

    /// Vertex from its 1-based label in `1..=t`.
    pub fn vertex_from_label(&self, label: i64) -> Result<Vertex> {
        if label < 1 || label > self.t as i64 {
            return Err(Error::VertexOutOfRange {
                vertex: label,
                t: self.t,
            });
        }
        Ok(Vertex(label as usize - 1))
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        (0..self.t).map(Vertex)
    }

    pub fn successor(&self, v: Vertex) -> Vertex {
        Vertex((v.0 + 1) % self.t)
    }

    pub fn predecessor(&self, v: Vertex) -> Vertex {
        Vertex((v.0 + self.t - 1) % self.t)
    }

    pub fn translate(&self, v: Vertex, by: i64) -> Vertex {
        self.wrap(v.0 as i64 + by)
    }
}

/// A vertex of the cycle, held as its 0-based residue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex(usize);

impl Vertex {
    pub fn residue(self) -> usize {
        self.0
    }

    /// 1-based label.
    pub fn label(self) -> usize {
        self.0 + 1
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Two vertices are adjacent iff they differ by ±1 modulo t.
pub fn adjacent(u: Vertex, v: Vertex, ctx: CycleContext) -> bool {
    let t = ctx.order();
    let d = (u.0 + t - v.0) % t;
    d == 1 || d == t - 1
}

/// A set of distinct vertices of one cycle, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    ctx: CycleContext,
    members: Vec<Vertex>,
}

impl VertexSet {
    /// Builds a set from vertices of `ctx`. Rejects repeats and out-of-range residues.
    pub fn new(ctx: CycleContext, members: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        let mut members: Vec<Vertex> = members.into_iter().collect();
        for &v in &members {
            ctx.vertex(v.0)?;
        }
        members.sort_unstable();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex {
                vertex: w[0].label(),
            });
        }
        Ok(Self { ctx, members })
    }

    /// Builds a set from 1-based labels.
    pub fn from_labels(ctx: CycleContext, labels: &[i64]) -> Result<Self> {
        let members = labels
            .iter()
            .map(|&l| ctx.vertex_from_label(l))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ctx, members)
    }

    pub fn context(&self) -> CycleContext {
        self.ctx
    }

    pub fn members(&self) -> &[Vertex] {
        &self.members
    }

    pub fn labels(&self) -> Vec<usize> {
        self.members.iter().map(|v| v.label()).collect()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    /// Some edge of the cycle inside the set, if any.
    pub fn find_edge(&self) -> Option<(Vertex, Vertex)> {
        // Sorted members: only neighbours in sort order, and the wrap pair, can be adjacent.
        let n = self.members.len();
        if n < 2 {
            return None;
        }
        for w in self.members.windows(2) {
            if adjacent(w[0], w[1], self.ctx) {
                return Some((w[0], w[1]));
            }
        }
        let (first, last) = (self.members[0], self.members[n - 1]);
        adjacent(first, last, self.ctx).then_some((last, first))
    }

    pub fn is_independent(&self) -> bool {
        self.find_edge().is_none()
    }

    /// Like [`is_independent`](Self::is_independent), but reports the offending edge.
    pub fn ensure_independent(&self) -> Result<()> {
        match self.find_edge() {
            None => Ok(()),
            Some((u, v)) => Err(Error::NotIndependent {
                u: u.label(),
                v: v.label(),
            }),
        }
    }

    /// If the set is a run of consecutive vertices shorter than the cycle,
    /// the arc it forms.
    pub fn as_arc(&self) -> Option<Arc> {
        let len = self.members.len();
        if len == 0 || len >= self.ctx.order() {
            return None;
        }
        // The run start is the unique member whose predecessor is absent.
        let mut starts = self
            .members
            .iter()
            .copied()
            .filter(|&v| !self.contains(self.ctx.predecessor(v)));
        let start = starts.next()?;
        if starts.next().is_some() {
            return None;
        }
        Arc::new(self.ctx, start, len).ok()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// `length` consecutive vertices starting at `start`, with `1 <= length < t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arc {
    ctx: CycleContext,
    start: Vertex,
    length: usize,
}

impl Arc {
    pub fn new(ctx: CycleContext, start: Vertex, length: usize) -> Result<Self> {
        ctx.vertex(start.0)?;
        if length == 0 || length >= ctx.order() {
            return Err(Error::InvalidArcLength {
                length,
                t: ctx.order(),
            });
        }
        Ok(Self { ctx, start, length })
    }

    pub fn context(&self) -> CycleContext {
        self.ctx
    }

    pub fn start(&self) -> Vertex {
        self.start
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.length).map(move |j| self.ctx.translate(self.start, j as i64))
    }

    pub fn contains(&self, v: Vertex) -> bool {
        let t = self.ctx.order();
        (v.0 + t - self.start.0) % t < self.length
    }

    pub fn members(&self) -> VertexSet {
        VertexSet {
            ctx: self.ctx,
            members: {
                let mut m: Vec<Vertex> = self.iter().collect();
                m.sort_unstable();
                m
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(t: usize, labels: &[i64]) -> VertexSet {
        VertexSet::from_labels(CycleContext::new(t).unwrap(), labels).unwrap()
    }

    fn v(ctx: CycleContext, label: i64) -> Vertex {
        ctx.vertex_from_label(label).unwrap()
    }

    #[test]
    fn adjacency_examples() {
        let c5 = CycleContext::new(5).unwrap();
        assert!(adjacent(v(c5, 1), v(c5, 2), c5));
        assert!(adjacent(v(c5, 5), v(c5, 1), c5));
        assert!(!adjacent(v(c5, 1), v(c5, 3), c5));
    }

    #[test]
    fn independence_examples() {
        assert!(set(5, &[1, 3]).is_independent());
        assert!(!set(5, &[5, 1]).is_independent());
        assert!(set(7, &[1, 3, 5]).is_independent());
        assert_eq!(
            set(5, &[5, 1]).ensure_independent(),
            Err(Error::NotIndependent { u: 1, v: 5 })
        );
    }

    #[test]
    fn arc_member_examples() {
        let arc = |t, start, len| {
            let ctx = CycleContext::new(t).unwrap();
            Arc::new(ctx, v(ctx, start), len).unwrap()
        };
        assert_eq!(
            arc(5, 4, 2).iter().map(Vertex::label).collect::<Vec<_>>(),
            [4, 5]
        );
        assert_eq!(
            arc(5, 5, 2).iter().map(Vertex::label).collect::<Vec<_>>(),
            [5, 1]
        );
        assert_eq!(
            arc(7, 6, 3).iter().map(Vertex::label).collect::<Vec<_>>(),
            [6, 7, 1]
        );
        assert_eq!(arc(7, 6, 3).members(), set(7, &[6, 7, 1]));
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(CycleContext::new(2), Err(Error::CycleTooSmall { t: 2 }));
        let c5 = CycleContext::new(5).unwrap();
        assert!(matches!(
            VertexSet::from_labels(c5, &[0]),
            Err(Error::VertexOutOfRange { vertex: 0, t: 5 })
        ));
        assert!(matches!(
            VertexSet::from_labels(c5, &[6]),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert_eq!(
            VertexSet::from_labels(c5, &[2, 2]),
            Err(Error::DuplicateVertex { vertex: 2 })
        );
        assert!(Arc::new(c5, v(c5, 1), 5).is_err());
        assert!(Arc::new(c5, v(c5, 1), 0).is_err());
    }

    #[test]
    fn as_arc_detects_runs() {
        assert_eq!(
            set(7, &[7, 1, 2])
                .as_arc()
                .map(|a| (a.start().label(), a.length())),
            Some((7, 3))
        );
        assert_eq!(set(7, &[1, 3]).as_arc(), None);
        assert_eq!(set(5, &[1, 2, 3, 4, 5]).as_arc(), None);
    }

    proptest! {
        #[test]
        fn arcs_never_collide(t in 3usize..40, start in 0usize..40, len in 1usize..40) {
            prop_assume!(start < t && len < t);
            let ctx = CycleContext::new(t).unwrap();
            let arc = Arc::new(ctx, ctx.vertex(start).unwrap(), len).unwrap();
            prop_assert_eq!(arc.members().len(), len);
            prop_assert_eq!(arc.members().as_arc(), Some(arc));
        }

        #[test]
        fn adjacency_symmetric_irreflexive(t in 3usize..40, a in 0usize..40, b in 0usize..40) {
            prop_assume!(a < t && b < t);
            let ctx = CycleContext::new(t).unwrap();
            let (u, w) = (ctx.vertex(a).unwrap(), ctx.vertex(b).unwrap());
            prop_assert_eq!(adjacent(u, w, ctx), adjacent(w, u, ctx));
            prop_assert!(!adjacent(u, u, ctx));
        }

        #[test]
        fn independence_is_monotone(t in 3usize..20, mask in any::<u32>(), keep in any::<u32>()) {
            let ctx = CycleContext::new(t).unwrap();
            let pick = |m: u32| ctx.vertices().filter(move |v| m >> v.residue() & 1 == 1);
            let s = VertexSet::new(ctx, pick(mask)).unwrap();
            let sub = VertexSet::new(ctx, pick(mask & keep)).unwrap();
            if s.is_independent() {
                prop_assert!(sub.is_independent());
            }
        }
    }
}
