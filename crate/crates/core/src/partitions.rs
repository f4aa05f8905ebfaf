//! Integer partitions and skew shapes.
//!
//! Rows and columns are 1-indexed wherever a [`Cell`] is exposed; the parts
//! vector itself is stored 0-indexed.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts. The empty sequence is ∅.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, stripping trailing zeros.
    pub fn new(parts: &[usize]) -> Result<Self> {
        let end = parts.iter().rposition(|&p| p != 0).map_or(0, |i| i + 1);
        let parts = &parts[..end];
        for (index, pair) in parts.windows(2).enumerate() {
            if pair[1] > pair[0] {
                return Err(Error::NotWeaklyDecreasing {
                    index: index + 1,
                    part: pair[1],
                });
            }
        }
        // A zero before a positive part is caught above, so every part is positive.
        Ok(Self {
            parts: parts.to_vec(),
        })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts, l(λ).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// |λ|
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part in (0-indexed) row `i`, reading missing rows as 0.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// True iff the diagram of `inner` fits inside the diagram of `self`.
    pub fn contains(&self, inner: &Partition) -> bool {
        contains(self, inner)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the comma-separated form, e.g. `"4,3,1"`. The empty string is ∅.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidArgument(format!("bad partition part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(&parts)
    }
}

/// `make_partition`: normalizes and validates a raw part list.
pub fn make_partition(parts: &[usize]) -> Result<Partition> {
    Partition::new(parts)
}

/// `inner ⊆ outer`, with missing parts read as 0.
pub fn contains(outer: &Partition, inner: &Partition) -> bool {
    inner.len() <= outer.len() && inner.parts.iter().zip(&outer.parts).all(|(i, o)| i <= o)
}

/// A cell of a Young diagram, 1-indexed (row, column).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }
}

/// The skew diagram outer/inner.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !contains(&outer, &inner) {
            return Err(Error::NotContained);
        }
        Ok(Self { outer, inner })
    }

    /// Straight shape λ/∅.
    pub fn straight(outer: Partition) -> Self {
        Self {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn cell_count(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Cells of outer not in inner, row by row.
    pub fn cells(&self) -> Vec<Cell> {
        let mut cells = Vec::with_capacity(self.cell_count());
        for (i, &len) in self.outer.parts.iter().enumerate() {
            for j in self.inner.part(i)..len {
                cells.push(Cell::new(i + 1, j + 1));
            }
        }
        cells
    }

    /// Corners whose removal leaves a partition still containing inner.
    pub fn removable_corners(&self) -> Vec<Cell> {
        removable_corners(self)
    }

    /// Deletes `cell` from the outer shape. The cell must be a removable corner.
    pub fn remove_corner(&self, cell: Cell) -> Result<SkewShape> {
        let i = cell.row - 1;
        if self.outer.part(i) != cell.col {
            return Err(Error::InvalidArgument(format!(
                "({}, {}) is not at the end of its row",
                cell.row, cell.col
            )));
        }
        let mut parts = self.outer.parts.clone();
        parts[i] -= 1;
        SkewShape::new(Partition::new(&parts)?, self.inner.clone())
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.outer, self.inner)
    }
}

pub fn removable_corners(shape: &SkewShape) -> Vec<Cell> {
    let outer = &shape.outer.parts;
    (0..outer.len())
        .filter(|&i| {
            let len = outer[i];
            let row_end = i + 1 == outer.len() || outer[i + 1] < len;
            row_end && shape.inner.part(i) < len
        })
        .map(|i| Cell::new(i + 1, outer[i]))
        .collect()
}

/// All λ ⊢ n with at most `max_rows` parts and `mu ⊆ λ`, in lexicographically
/// decreasing order.
pub fn outer_shapes(n: usize, mu: &Partition, max_rows: usize) -> Result<Vec<Partition>> {
    if mu.len() > max_rows {
        return Err(Error::InnerTooLong {
            rows: mu.len(),
            max_rows,
        });
    }
    let mut out = Vec::new();
    if mu.size() > n {
        return Ok(out);
    }
    let mut current = Vec::with_capacity(max_rows);
    fill_parts(n, n, max_rows, mu, &mut current, &mut out);
    Ok(out)
}

fn fill_parts(
    remaining: usize,
    cap: usize,
    rows_left: usize,
    mu: &Partition,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        if current.len() >= mu.len() {
            out.push(Partition {
                parts: current.clone(),
            });
        }
        return;
    }
    if rows_left == 0 {
        return;
    }
    let lower = mu.part(current.len()).max(1);
    let upper = cap.min(remaining);
    // Parts below ceil(remaining / rows_left) cannot finish in time.
    let needed = remaining.div_ceil(rows_left);
    for part in (lower.max(needed)..=upper).rev() {
        current.push(part);
        fill_parts(remaining - part, part, rows_left - 1, mu, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts).unwrap()
    }

    #[test]
    fn make_partition_normalizes() {
        assert_eq!(make_partition(&[4, 3, 1]).unwrap().parts(), &[4, 3, 1]);
        assert_eq!(make_partition(&[2, 1, 0, 0]).unwrap(), p(&[2, 1]));
        assert_eq!(make_partition(&[0, 0]).unwrap(), Partition::empty());
        assert!(matches!(
            make_partition(&[1, 3]),
            Err(Error::NotWeaklyDecreasing { index: 1, part: 3 })
        ));
        assert!(make_partition(&[2, 0, 1]).is_err());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("4,3,1".parse::<Partition>().unwrap(), p(&[4, 3, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(p(&[4, 3, 1]).to_string(), "4,3,1");
        assert_eq!(Partition::empty().to_string(), "");
        assert!("1,x".parse::<Partition>().is_err());
        assert!("1,2".parse::<Partition>().is_err());
    }

    #[test]
    fn containment() {
        assert!(contains(&p(&[4, 3, 1]), &p(&[2, 1])));
        assert!(!contains(&p(&[3, 3]), &p(&[2, 1, 1])));
        assert!(contains(&Partition::empty(), &Partition::empty()));
        assert!(!contains(&p(&[2, 2]), &p(&[3])));
        assert!(SkewShape::new(p(&[1]), p(&[2])).is_err());
    }

    #[test]
    fn outer_shapes_examples() {
        assert_eq!(
            outer_shapes(4, &p(&[2, 1]), 3).unwrap(),
            vec![p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1])]
        );
        assert_eq!(
            outer_shapes(3, &Partition::empty(), 3).unwrap(),
            vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]
        );
        assert!(outer_shapes(2, &p(&[2, 1]), 3).unwrap().is_empty());
        assert_eq!(
            outer_shapes(0, &Partition::empty(), 3).unwrap(),
            vec![Partition::empty()]
        );
        assert!(matches!(
            outer_shapes(5, &p(&[1, 1, 1]), 2),
            Err(Error::InnerTooLong { rows: 3, max_rows: 2 })
        ));
    }

    #[test]
    fn corners() {
        let shape = SkewShape::straight(p(&[2, 1]));
        assert_eq!(shape.removable_corners(), vec![Cell::new(1, 2), Cell::new(2, 1)]);
        let shape = SkewShape::new(p(&[3, 1]), p(&[2, 1])).unwrap();
        assert_eq!(shape.removable_corners(), vec![Cell::new(1, 3)]);
        let shape = SkewShape::new(p(&[1]), p(&[1])).unwrap();
        assert!(shape.removable_corners().is_empty());
    }

    #[test]
    fn cells_of_skew_shape() {
        let shape = SkewShape::new(p(&[3, 2]), p(&[2, 1])).unwrap();
        assert_eq!(shape.cells(), vec![Cell::new(1, 3), Cell::new(2, 2)]);
        assert_eq!(shape.cell_count(), 2);
    }
}
