//! The doubling bijection on `C_{2s+1}`.
//!
//! On 1-based labels the map is `j ↦ 2j − 1 (mod 2s+1)`; on residues it is
//! plain doubling `x ↦ 2x`, with inverse `x ↦ (s+1)·x`. It carries every arc
//! of `s` consecutive vertices onto an independent `s`-set and back, which
//! turns a family of independent sets into a family of arcs.

use crate::cycle::{Arc, CycleContext, Vertex, VertexSet};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DoublingMap {
    ctx: CycleContext,
}

impl DoublingMap {
    pub fn new(ctx: CycleContext) -> Result<Self> {
        if ctx.order().is_multiple_of(2) {
            return Err(Error::EvenCycle { t: ctx.order() });
        }
        Ok(Self { ctx })
    }

    pub fn context(&self) -> CycleContext {
        self.ctx
    }

    /// `s` where `t = 2s + 1`.
    pub fn half(&self) -> usize {
        self.ctx.order() / 2
    }

    pub fn apply(&self, j: Vertex) -> Vertex {
        self.ctx.wrap(2 * j.residue() as i64)
    }

    pub fn invert(&self, v: Vertex) -> Vertex {
        self.ctx.wrap((self.half() as i64 + 1) * v.residue() as i64)
    }

    /// Pulls an independent `s`-set back to the arc it is the image of.
    pub fn independent_set_to_arc(&self, set: &VertexSet) -> Result<Arc> {
        if set.context() != self.ctx {
            return Err(Error::ContextMismatch {
                expected: self.ctx.order(),
                found: set.context().order(),
            });
        }
        let s = self.half();
        if set.len() != s {
            return Err(Error::WrongSize {
                expected: s,
                found: set.len(),
            });
        }
        set.ensure_independent()?;
        let preimage = VertexSet::new(self.ctx, set.members().iter().map(|&v| self.invert(v)))?;
        preimage.as_arc().ok_or(Error::NotAnArc)
    }

    /// Pushes an arc of length `s` forward to an independent `s`-set.
    pub fn arc_to_independent_set(&self, arc: &Arc) -> Result<VertexSet> {
        if arc.context() != self.ctx {
            return Err(Error::ContextMismatch {
                expected: self.ctx.order(),
                found: arc.context().order(),
            });
        }
        if arc.length() != self.half() {
            return Err(Error::WrongSize {
                expected: self.half(),
                found: arc.length(),
            });
        }
        VertexSet::new(self.ctx, arc.iter().map(|j| self.apply(j)))
    }
}
