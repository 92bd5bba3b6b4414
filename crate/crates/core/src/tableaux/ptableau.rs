use std::fmt;

use crate::error::{Error, Result};
use crate::orderstruct::Poset;
use crate::partitions::{Cell, Partition};

/// A filling of a Ferrers shape by the elements of a poset, each used once,
/// with columns strictly increasing downward and no row descent `x ≻ y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl PTableau {
    /// Checks all three conditions against `poset`.
    pub fn new(poset: &Poset, rows: Vec<Vec<usize>>) -> Result<PTableau> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::InvalidTableau(e.to_string()))?;
        let t = PTableau { shape, rows };
        t.check(poset)?;
        Ok(t)
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> PTableau {
        let shape = Partition::new(rows.iter().map(Vec::len).collect()).expect("rows form a shape");
        PTableau { shape, rows }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn at(&self, cell: Cell) -> Option<usize> {
        self.rows.get(cell.row.checked_sub(1)?)?.get(cell.col.checked_sub(1)?).copied()
    }

    /// Cell holding `element`.
    pub fn position(&self, element: usize) -> Option<Cell> {
        self.rows.iter().enumerate().find_map(|(i, row)| {
            row.iter()
                .position(|&x| x == element)
                .map(|j| Cell::new(i + 1, j + 1))
        })
    }

    pub fn check(&self, poset: &Poset) -> Result<()> {
        let n = poset.len();
        if self.shape.size() != n {
            return Err(Error::InvalidTableau(format!(
                "shape {} has {} cells but the poset has {n} elements",
                self.shape,
                self.shape.size()
            )));
        }
        let mut seen = vec![false; n];
        for &x in self.rows.iter().flatten() {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidTableau(format!("element {x} missing, repeated or out of range")));
            }
        }
        for cell in self.shape.cells() {
            let x = self.at(cell).expect("cell in shape");
            if cell.row > 1 {
                let above = self.at(Cell::new(cell.row - 1, cell.col)).expect("cell above");
                if !poset.less(above, x) {
                    return Err(Error::InvalidTableau(format!("{above} above {x} but not {above} < {x}")));
                }
            }
            if cell.col > 1 {
                let left = self.at(Cell::new(cell.row, cell.col - 1)).expect("cell to the left");
                if poset.less(x, left) {
                    return Err(Error::InvalidTableau(format!("{left} left of {x} but {left} > {x}")));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for PTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let labels: Vec<String> = row.iter().map(usize::to_string).collect();
            writeln!(f, "{}", labels.join(" "))?;
        }
        Ok(())
    }
}

/// All P-tableaux of the given shape, by row-major backtracking.
pub fn enumerate_p_tableaux(poset: &Poset, shape: &Partition) -> Result<Vec<PTableau>> {
    let n = poset.len();
    if shape.size() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: shape.size(),
        });
    }
    let cells: Vec<Cell> = shape.cells().collect();
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&p| Vec::with_capacity(p)).collect();
    let mut out = Vec::new();
    fill(poset, shape, &cells, 0, 0, &mut rows, &mut out);
    Ok(out)
}

fn fill(
    poset: &Poset,
    shape: &Partition,
    cells: &[Cell],
    pos: usize,
    used: u32,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<PTableau>,
) {
    let Some(&cell) = cells.get(pos) else {
        out.push(PTableau {
            shape: shape.clone(),
            rows: rows.clone(),
        });
        return;
    };
    let (i, j) = (cell.row - 1, cell.col - 1);
    let above = (i > 0).then(|| rows[i - 1][j]);
    let left = (j > 0).then(|| rows[i][j - 1]);
    for x in 0..poset.len() {
        if used >> x & 1 == 1 {
            continue;
        }
        if above.is_some_and(|a| !poset.less(a, x)) || left.is_some_and(|l| poset.less(x, l)) {
            continue;
        }
        rows[i].push(x);
        fill(poset, shape, cells, pos + 1, used | 1 << x, rows, out);
        rows[i].pop();
    }
}
