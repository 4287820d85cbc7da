//! Operation counting between consecutive emitted solutions.
//!
//! Counts are abstract (path searches, adjacency entries inspected, arcs
//! flipped or copied) so delay measurements do not depend on the machine.

use std::ops::AddAssign;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounts {
    /// Breadth-first path searches started.
    pub path_searches: u64,
    /// Adjacency entries inspected plus arcs reversed or copied.
    pub arc_touches: u64,
    /// Flippable-pair tests (each one is up to k + 1 path searches).
    pub flip_tests: u64,
}

impl OpCounts {
    /// The scalar cost used for delay bounds: path searches plus arc touches.
    pub fn ops(&self) -> u64 {
        self.path_searches + self.arc_touches
    }

    fn max_with(&mut self, other: &OpCounts) {
        self.path_searches = self.path_searches.max(other.path_searches);
        self.arc_touches = self.arc_touches.max(other.arc_touches);
        self.flip_tests = self.flip_tests.max(other.flip_tests);
    }
}

impl AddAssign for OpCounts {
    fn add_assign(&mut self, rhs: Self) {
        self.path_searches += rhs.path_searches;
        self.arc_touches += rhs.arc_touches;
        self.flip_tests += rhs.flip_tests;
    }
}

/// Accumulates operation counts and splits them into gaps at each emission.
///
/// There are `emissions + 1` gaps once [`DelayMeter::finish`] has run: before
/// the first solution, between consecutive ones, and after the last.
#[derive(Debug, Clone, Default)]
pub struct DelayMeter {
    current: OpCounts,
    total: OpCounts,
    max_gap: OpCounts,
    max_gap_ops: u64,
    preprocessing: OpCounts,
    emissions: u64,
    finished: bool,
    log: Option<Vec<OpCounts>>,
}

impl DelayMeter {
    pub fn new() -> Self {
        Self::default()
    }

    /// A meter that also keeps every gap, for per-solution reports.
    pub fn with_log() -> Self {
        Self {
            log: Some(Vec::new()),
            ..Self::default()
        }
    }

    pub(crate) fn path_search(&mut self) {
        self.current.path_searches += 1;
    }

    pub(crate) fn touch(&mut self, arcs: usize) {
        self.current.arc_touches += arcs as u64;
    }

    pub(crate) fn flip_test(&mut self) {
        self.current.flip_tests += 1;
    }

    /// Moves everything counted so far into the preprocessing bucket, which
    /// is reported separately and excluded from the gaps.
    pub(crate) fn end_preprocessing(&mut self) {
        self.preprocessing += std::mem::take(&mut self.current);
    }

    pub(crate) fn emit(&mut self) {
        self.emissions += 1;
        self.close_gap();
    }

    /// Closes the trailing gap. Idempotent.
    pub fn finish(&mut self) {
        if !self.finished {
            self.finished = true;
            self.close_gap();
        }
    }

    fn close_gap(&mut self) {
        let gap = std::mem::take(&mut self.current);
        self.total += gap;
        self.max_gap.max_with(&gap);
        self.max_gap_ops = self.max_gap_ops.max(gap.ops());
        if let Some(log) = &mut self.log {
            log.push(gap);
        }
    }

    pub fn emissions(&self) -> u64 {
        self.emissions
    }

    /// Componentwise maximum over all closed gaps.
    pub fn max_gap(&self) -> OpCounts {
        self.max_gap
    }

    /// Largest [`OpCounts::ops`] of a single gap.
    pub fn max_gap_ops(&self) -> u64 {
        self.max_gap_ops
    }

    /// Sum over all closed gaps (preprocessing excluded).
    pub fn total(&self) -> OpCounts {
        self.total
    }

    pub fn preprocessing(&self) -> OpCounts {
        self.preprocessing
    }

    /// Total operations divided by the number of solutions, `None` when
    /// nothing was emitted.
    pub fn amortized_ops(&self) -> Option<f64> {
        (self.emissions > 0).then(|| self.total.ops() as f64 / self.emissions as f64)
    }

    pub fn gaps(&self) -> Option<&[OpCounts]> {
        self.log.as_deref()
    }
}
