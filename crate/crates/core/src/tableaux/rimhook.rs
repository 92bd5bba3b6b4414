//! Special rim hooks and special rim hook tabloids.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::{Cell, Partition};

/// An edgewise-connected set of cells with no 2×2 block.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RimHook {
    /// sorted row-major
    cells: Vec<Cell>,
}

impl RimHook {
    pub fn new(mut cells: Vec<Cell>) -> Result<RimHook> {
        cells.sort();
        cells.dedup();
        let hook = RimHook { cells };
        hook.check()?;
        Ok(hook)
    }

    fn from_cells_unchecked(mut cells: Vec<Cell>) -> RimHook {
        cells.sort();
        RimHook { cells }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.binary_search(&cell).is_ok()
    }

    /// Number of distinct rows.
    pub fn height(&self) -> usize {
        let mut rows: Vec<usize> = self.cells.iter().map(|c| c.row).collect();
        rows.dedup();
        rows.len()
    }

    /// `(-1)^(height - 1)`
    pub fn sign(&self) -> i64 {
        if self.height() % 2 == 1 {
            1
        } else {
            -1
        }
    }

    pub fn is_special(&self) -> bool {
        self.cells.iter().any(|c| c.col == 1)
    }

    /// Topmost, then leftmost cell.
    pub fn top_left(&self) -> Cell {
        self.cells[0]
    }

    fn check(&self) -> Result<()> {
        if self.cells.is_empty() {
            return Err(Error::InvalidTabloid("empty rim hook".into()));
        }
        let set: HashSet<Cell> = self.cells.iter().copied().collect();
        for c in &self.cells {
            let block = [Cell::new(c.row, c.col + 1), Cell::new(c.row + 1, c.col), Cell::new(c.row + 1, c.col + 1)];
            if block.iter().all(|b| set.contains(b)) {
                return Err(Error::InvalidTabloid(format!("rim hook contains a 2x2 block at {c}")));
            }
        }
        let mut seen = HashSet::from([self.cells[0]]);
        let mut stack = vec![self.cells[0]];
        while let Some(c) = stack.pop() {
            let mut nb = vec![Cell::new(c.row + 1, c.col), Cell::new(c.row, c.col + 1)];
            if c.row > 1 {
                nb.push(Cell::new(c.row - 1, c.col));
            }
            if c.col > 1 {
                nb.push(Cell::new(c.row, c.col - 1));
            }
            for d in nb {
                if set.contains(&d) && seen.insert(d) {
                    stack.push(d);
                }
            }
        }
        if seen.len() != set.len() {
            return Err(Error::InvalidTabloid("rim hook is not connected".into()));
        }
        Ok(())
    }
}

/// A decomposition of a shape into special rim hooks that can be peeled off
/// one at a time, each removal leaving a Ferrers diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpecialRimHookTabloid {
    shape: Partition,
    /// sorted by top-left cell
    hooks: Vec<RimHook>,
}

impl SpecialRimHookTabloid {
    /// Validates every tabloid invariant.
    pub fn new(shape: Partition, hooks: Vec<RimHook>) -> Result<Self> {
        let t = Self::from_hooks_unchecked(shape, hooks);
        t.check()?;
        Ok(t)
    }

    pub(crate) fn from_hooks_unchecked(shape: Partition, mut hooks: Vec<RimHook>) -> Self {
        hooks.sort_by_key(RimHook::top_left);
        SpecialRimHookTabloid { shape, hooks }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn hooks(&self) -> &[RimHook] {
        &self.hooks
    }

    pub fn hook_count(&self) -> usize {
        self.hooks.len()
    }

    /// Multiset of hook sizes.
    pub fn type_partition(&self) -> Partition {
        let sizes: Vec<usize> = self.hooks.iter().map(RimHook::size).collect();
        Partition::from_composition(&sizes)
    }

    pub fn sign(&self) -> i64 {
        self.hooks.iter().map(RimHook::sign).product()
    }

    /// Index into [`hooks`](Self::hooks) of the hook covering `cell`.
    pub fn hook_index_at(&self, cell: Cell) -> Option<usize> {
        self.hooks.iter().position(|h| h.contains(cell))
    }

    pub fn check(&self) -> Result<()> {
        let mut covered = HashSet::new();
        for h in &self.hooks {
            h.check()?;
            if !h.is_special() {
                return Err(Error::InvalidTabloid(format!("hook at {} misses column 1", h.top_left())));
            }
            for &c in h.cells() {
                if !self.shape.contains(c) {
                    return Err(Error::InvalidTabloid(format!("{c} lies outside {}", self.shape)));
                }
                if !covered.insert(c) {
                    return Err(Error::InvalidTabloid(format!("{c} covered twice")));
                }
            }
        }
        if covered.len() != self.shape.size() {
            return Err(Error::InvalidTabloid("hooks do not cover the shape".into()));
        }
        if !peelable(self.shape.parts().to_vec(), &self.hooks) {
            return Err(Error::InvalidTabloid("hooks cannot be peeled off in any order".into()));
        }
        Ok(())
    }
}

/// True if some order removes every hook, each leaving a Ferrers diagram.
fn peelable(rows: Vec<usize>, hooks: &[RimHook]) -> bool {
    if hooks.is_empty() {
        return rows.iter().all(|&r| r == 0);
    }
    (0..hooks.len()).any(|i| match remove(&rows, &hooks[i]) {
        Some(rest) => {
            let others: Vec<RimHook> = hooks.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, h)| h.clone()).collect();
            peelable(rest, &others)
        }
        None => false,
    })
}

/// Row lengths after deleting `hook`, if the hook sits at the ends of its rows
/// and the result is still weakly decreasing.
fn remove(rows: &[usize], hook: &RimHook) -> Option<Vec<usize>> {
    let mut out = rows.to_vec();
    let mut i = 0;
    let cells = hook.cells();
    while i < cells.len() {
        let r = cells[i].row;
        let run: Vec<&Cell> = cells[i..].iter().take_while(|c| c.row == r).collect();
        let first = run[0].col;
        let last = run[run.len() - 1].col;
        if run.len() != last - first + 1 || out.get(r - 1) != Some(&last) {
            return None;
        }
        out[r - 1] = first - 1;
        i += run.len();
    }
    out.windows(2).all(|w| w[0] >= w[1]).then_some(out)
}

/// Every special rim hook tabloid of `shape`, optionally only those of type
/// `type_filter`.
///
/// Each tabloid is produced once: the hook through the bottom-left cell
/// is always the first that can be removed (removing any other special hook
/// would empty a row above a non-empty one), so peeling it first and
/// recursing on the residue gives a canonical construction.
pub fn enumerate_srht(shape: &Partition, type_filter: Option<&Partition>) -> Vec<SpecialRimHookTabloid> {
    let d = shape.size();
    let budget = type_filter.map(|t| {
        let mut counts = vec![0usize; d + 1];
        for &p in t.parts() {
            if p <= d {
                counts[p] += 1;
            }
        }
        counts
    });
    if type_filter.is_some_and(|t| t.size() != d) {
        return Vec::new();
    }
    let mut out = Vec::new();
    peel(shape.parts().to_vec(), budget, &mut Vec::new(), &mut |hooks| {
        out.push(SpecialRimHookTabloid::from_hooks_unchecked(shape.clone(), hooks.to_vec()));
    });
    out
}

fn peel(rows: Vec<usize>, budget: Option<Vec<usize>>, hooks: &mut Vec<RimHook>, emit: &mut dyn FnMut(&[RimHook])) {
    let len = rows.iter().take_while(|&&r| r > 0).count();
    if len == 0 {
        emit(hooks);
        return;
    }
    // walk the rim from the bottom-left cell: right along a row, up at its end
    let (mut r, mut c) = (len, 1);
    let mut cells = Vec::new();
    // (row, column where the walk entered it)
    let mut entries = vec![(len, 1)];
    loop {
        cells.push(Cell::new(r, c));
        if c < rows[r - 1] {
            c += 1;
            continue;
        }
        // a strip ending at a row end leaves a Ferrers diagram
        let size = cells.len();
        if budget.as_ref().is_none_or(|b| b[size] > 0) {
            let mut rest = rows[..len].to_vec();
            for &(row, col) in &entries {
                rest[row - 1] = col - 1;
            }
            let mut next_budget = budget.clone();
            if let Some(b) = next_budget.as_mut() {
                b[size] -= 1;
            }
            hooks.push(RimHook::from_cells_unchecked(cells.clone()));
            peel(rest, next_budget, hooks, emit);
            hooks.pop();
        }
        if r == 1 {
            break;
        }
        r -= 1;
        entries.push((r, c));
    }
}

impl fmt::Display for SpecialRimHookTabloid {
    /// Grid of hook numbers (hooks numbered from 1 by top-left cell), then a
    /// `type=… sign=…` trailer.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &len) in self.shape.parts().iter().enumerate() {
            let labels: Vec<String> = (1..=len)
                .map(|j| {
                    self.hook_index_at(Cell::new(i + 1, j))
                        .map_or_else(|| "?".to_string(), |k| (k + 1).to_string())
                })
                .collect();
            writeln!(f, "{}", labels.join(" "))?;
        }
        writeln!(f, "type={} sign={:+}", self.type_partition(), self.sign())
    }
}
