//! Brute-force skew tableau counts, independent of the Motzkin formulas.
//!
//! Counting removes the cell holding the largest entry: it is always a
//! removable corner, so f(λ/μ) = Σ_corners f((λ − corner)/μ) with f(μ/μ) = 1.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::{outer_shapes, Cell, Partition, SkewShape};

/// Default cap on the number of cells `enumerate_syt` will fill.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 12;

/// Memo table for one inner partition; keys are outer shapes.
#[derive(Debug, Clone)]
pub struct OracleCache {
    inner: Partition,
    counts: HashMap<Partition, BigUint>,
}

impl OracleCache {
    pub fn new(inner: Partition) -> Self {
        Self {
            inner,
            counts: HashMap::new(),
        }
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Number of standard fillings of outer/inner.
    pub fn count(&mut self, outer: &Partition) -> Result<BigUint> {
        let shape = SkewShape::new(outer.clone(), self.inner.clone())?;
        Ok(self.count_shape(&shape))
    }

    fn count_shape(&mut self, shape: &SkewShape) -> BigUint {
        if shape.outer() == &self.inner {
            return BigUint::one();
        }
        if let Some(c) = self.counts.get(shape.outer()) {
            return c.clone();
        }
        let mut total = BigUint::zero();
        for corner in shape.removable_corners() {
            let smaller = shape
                .remove_corner(corner)
                .expect("removable corner leaves a valid skew shape");
            total += self.count_shape(&smaller);
        }
        self.counts.insert(shape.outer().clone(), total.clone());
        total
    }
}

/// Number of standard Young tableaux of the skew shape.
pub fn count_syt(shape: &SkewShape) -> BigUint {
    OracleCache::new(shape.inner().clone()).count_shape(shape)
}

/// A standard filling: each cell of the skew shape mapped to its entry 1..=N.
pub type Filling = BTreeMap<Cell, usize>;

/// Every standard filling, with the default cell limit.
pub fn enumerate_syt(shape: &SkewShape) -> Result<Vec<Filling>> {
    enumerate_syt_with_limit(shape, DEFAULT_ENUMERATION_LIMIT)
}

pub fn enumerate_syt_with_limit(shape: &SkewShape, limit: usize) -> Result<Vec<Filling>> {
    let cells = shape.cell_count();
    if cells > limit {
        return Err(Error::TooManyCells { cells, limit });
    }
    // Place 1, 2, ... in turn; the next entry may go in any cell whose
    // left and upper neighbours are already inner or filled.
    let rows = shape.outer().len();
    let mut filled: Vec<usize> = (0..rows).map(|i| shape.inner().part(i)).collect();
    let mut current = Filling::new();
    let mut out = Vec::new();
    place(shape, &mut filled, &mut current, 1, cells, &mut out);
    Ok(out)
}

fn place(
    shape: &SkewShape,
    filled: &mut [usize],
    current: &mut Filling,
    next: usize,
    total: usize,
    out: &mut Vec<Filling>,
) {
    if next > total {
        out.push(current.clone());
        return;
    }
    for i in 0..filled.len() {
        let col = filled[i];
        if col >= shape.outer().part(i) {
            continue;
        }
        // Cell (i, col) needs the cell above it settled.
        if i > 0 && filled[i - 1] <= col {
            continue;
        }
        let cell = Cell::new(i + 1, col + 1);
        filled[i] += 1;
        current.insert(cell, next);
        place(shape, filled, current, next + 1, total, out);
        current.remove(&cell);
        filled[i] -= 1;
    }
}

/// Σ over λ ⊢ n with at most `max_rows` rows and μ ⊆ λ of f(λ/μ).
pub fn oracle_total(n: usize, mu: &Partition, max_rows: usize) -> Result<BigUint> {
    let shapes = outer_shapes(n, mu, max_rows)?;
    let mut cache = OracleCache::new(mu.clone());
    let mut total = BigUint::zero();
    for lambda in &shapes {
        total += cache.count(lambda)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts).unwrap()
    }

    fn skew(outer: &[usize], inner: &[usize]) -> SkewShape {
        SkewShape::new(p(outer), p(inner)).unwrap()
    }

    fn is_standard(shape: &SkewShape, filling: &Filling) -> bool {
        let mut entries: Vec<usize> = filling.values().copied().collect();
        entries.sort_unstable();
        if entries != (1..=shape.cell_count()).collect::<Vec<_>>() {
            return false;
        }
        filling.iter().all(|(cell, &v)| {
            let right = filling.get(&Cell::new(cell.row, cell.col + 1));
            let below = filling.get(&Cell::new(cell.row + 1, cell.col));
            right.is_none_or(|&r| r > v) && below.is_none_or(|&b| b > v)
        })
    }

    #[test]
    fn counts() {
        assert_eq!(count_syt(&skew(&[4, 3, 1], &[])), BigUint::from(70u32));
        assert_eq!(count_syt(&skew(&[3, 2], &[2, 1])), BigUint::from(2u32));
        assert_eq!(count_syt(&skew(&[4], &[4])), BigUint::one());
        assert_eq!(count_syt(&skew(&[], &[])), BigUint::one());
    }

    #[test]
    fn enumeration() {
        assert_eq!(enumerate_syt(&skew(&[2, 1], &[])).unwrap().len(), 2);
        assert_eq!(enumerate_syt(&skew(&[1], &[])).unwrap().len(), 1);
        let shape = skew(&[2, 2], &[1]);
        let all = enumerate_syt(&shape).unwrap();
        assert_eq!(all.len(), 2);
        assert!(all.iter().all(|f| is_standard(&shape, f)));
        assert!(matches!(
            enumerate_syt(&skew(&[7, 6], &[])),
            Err(Error::TooManyCells { cells: 13, limit: 12 })
        ));
        assert_eq!(enumerate_syt_with_limit(&skew(&[7, 6], &[]), 13).unwrap().len(), 429);
    }

    #[test]
    fn totals() {
        assert_eq!(oracle_total(3, &p(&[]), 3).unwrap(), BigUint::from(4u32));
        assert_eq!(oracle_total(4, &p(&[2, 1]), 3).unwrap(), BigUint::from(3u32));
        assert_eq!(oracle_total(2, &p(&[2, 1]), 3).unwrap(), BigUint::zero());
        assert!(matches!(
            oracle_total(6, &p(&[1, 1, 1]), 2),
            Err(Error::InnerTooLong { .. })
        ));
    }

    #[test]
    fn cache_keeps_inner_fixed() {
        let mut cache = OracleCache::new(p(&[1]));
        assert_eq!(cache.count(&p(&[2, 1])).unwrap(), BigUint::from(2u32));
        assert!(!cache.is_empty());
        assert_eq!(cache.count(&p(&[1])).unwrap(), BigUint::one());
        assert!(cache.count(&p(&[])).is_err());
    }
}
