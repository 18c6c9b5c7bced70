//! Text rendering of the p-runner abacus.
//!
//! Columns follow the visual runner order (p+1)/2, ..., p-1, 0, 1, ...,
//! (p-1)/2, so row t covers the consecutive positions t*p + (p+1)/2 ..
//! t*p + (p+1)/2 + p - 1 and position 0 sits in the middle of its row.
//! Beads print as 'b', empty positions as 'n', and the zero position as a
//! white bead 'o'.

use serde::Serialize;

use crate::bar::BarLength;
use crate::partition::BarPartition;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbacusRendering {
    /// Row index t of the first row; row t starts at position t*p + (p+1)/2.
    pub first_row: i64,
    pub rows: Vec<String>,
}

impl AbacusRendering {
    /// Position displayed at (row, column) of the grid.
    pub fn position(&self, p: i64, row: usize, col: usize) -> i64 {
        (self.first_row + row as i64) * p + (p + 1) / 2 + col as i64
    }
}

impl std::fmt::Display for AbacusRendering {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for row in &self.rows {
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

/// Renders the bead configuration with `rows_above` rows above the row
/// containing position 0 and `rows_below` rows below it.
pub fn render_abacus(
    lam: &BarPartition,
    p: BarLength,
    rows_above: usize,
    rows_below: usize,
) -> AbacusRendering {
    let pv = p.get();
    // Position 0 lives in row -1: that row covers -(p-1)/2 ..= (p-1)/2.
    let zero_row = -1i64;
    let first_row = zero_row - rows_above as i64;
    let last_row = zero_row + rows_below as i64;
    let rows = (first_row..=last_row)
        .map(|t| {
            (0..pv)
                .map(|c| {
                    let x = t * pv + (pv + 1) / 2 + c;
                    if x == 0 {
                        'o'
                    } else if lam.bead(x) {
                        'b'
                    } else {
                        'n'
                    }
                })
                .collect()
        })
        .collect();
    AbacusRendering { first_row, rows }
}
