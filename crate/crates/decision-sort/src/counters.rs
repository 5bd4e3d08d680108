use serde::Serialize;

/// Exact operation tallies for a sort run.
///
/// For a completed unique-key sort of `n` keys over a domain of `k` slots:
/// `mark_writes == n`, `emit_comparisons == k`, `emit_writes == n`,
/// `iterations == n + k`, and `swaps == 0`. The totals depend only on
/// `(n, k)`, never on the input ordering.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OpCounters {
    pub mark_writes: u64,
    pub emit_comparisons: u64,
    pub emit_writes: u64,
    /// Loop-body executions across both phases: `n` marks plus `k` scans.
    pub iterations: u64,
    /// Always zero; the sort never exchanges elements.
    pub swaps: u64,
}

impl OpCounters {
    /// Field-wise sum, used to fold per-phase counters into a whole-run total.
    pub fn merged(self, other: OpCounters) -> OpCounters {
        OpCounters {
            mark_writes: self.mark_writes + other.mark_writes,
            emit_comparisons: self.emit_comparisons + other.emit_comparisons,
            emit_writes: self.emit_writes + other.emit_writes,
            iterations: self.iterations + other.iterations,
            swaps: self.swaps + other.swaps,
        }
    }

    /// Total elementary read/write/compare steps: `2n + k` for a completed
    /// unique-key sort.
    pub fn steps(&self) -> u64 {
        self.mark_writes + self.emit_comparisons + self.emit_writes
    }
}
