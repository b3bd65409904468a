//! Kostka numbers and Littlewood–Richardson coefficients by direct tableau counting.

use crate::error::{contract, Result};
use crate::partitions::Partition;

/// The cells of `outer` not in `inner`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(contract(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Cells `(row, col)` in reverse reading order: rows top to bottom, each right to left.
    pub fn reading_cells(&self) -> Vec<(usize, usize)> {
        let mut cells = Vec::with_capacity(self.size());
        for i in 0..self.outer.len() {
            for j in (self.inner.part(i)..self.outer.part(i)).rev() {
                cells.push((i, j));
            }
        }
        cells
    }

    fn contains_cell(&self, i: usize, j: usize) -> bool {
        j < self.outer.part(i) && j >= self.inner.part(i)
    }
}

/// Number of semistandard tableaux of shape `lambda` and weight `mu`.
pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<u64> {
    if lambda.size() != mu.size() {
        return Err(contract(format!("|{lambda}| != |{mu}|")));
    }
    let mut shape = vec![0usize; lambda.len()];
    Ok(count_strips(lambda, mu.parts(), &mut shape))
}

// Adds horizontal strips of sizes `weights[0]`, `weights[1]`, ... inside `target`.
fn count_strips(target: &Partition, weights: &[usize], shape: &mut [usize]) -> u64 {
    let Some((&w, rest)) = weights.split_first() else {
        return 1;
    };
    let mut total = 0;
    let before = shape.to_vec();
    fill_strip(target, &before, 0, w, shape, &mut |s| {
        total += count_strips(target, rest, s)
    });
    total
}

fn fill_strip(
    target: &Partition,
    before: &[usize],
    row: usize,
    remaining: usize,
    shape: &mut [usize],
    on_done: &mut dyn FnMut(&mut [usize]),
) {
    if row == shape.len() {
        if remaining == 0 {
            on_done(shape);
        }
        return;
    }
    let cap = if row == 0 {
        target.part(0)
    } else {
        target.part(row).min(before[row - 1])
    };
    let room = cap.saturating_sub(before[row]);
    for add in 0..=room.min(remaining) {
        shape[row] = before[row] + add;
        fill_strip(target, before, row + 1, remaining - add, shape, on_done);
    }
    shape[row] = before[row];
}

/// `c^ν_{λμ}`: Littlewood–Richardson tableaux of shape `ν/λ` and weight `μ`.
/// Zero when `λ ⊄ ν` or the sizes do not add up.
pub fn lr_coefficient(nu: &Partition, lambda: &Partition, mu: &Partition) -> u64 {
    if nu.size() != lambda.size() + mu.size() || !nu.contains(lambda) {
        return 0;
    }
    let shape = SkewShape {
        outer: nu.clone(),
        inner: lambda.clone(),
    };
    let cells = shape.reading_cells();
    let mut filling = vec![vec![0usize; nu.first()]; nu.len()];
    let mut counts = vec![0usize; mu.len() + 1];
    let mut state = LrSearch {
        shape: &shape,
        cells: &cells,
        weight: mu.parts(),
        filling: &mut filling,
        counts: &mut counts,
    };
    state.count(0)
}

struct LrSearch<'a> {
    shape: &'a SkewShape,
    cells: &'a [(usize, usize)],
    weight: &'a [usize],
    filling: &'a mut Vec<Vec<usize>>,
    counts: &'a mut Vec<usize>,
}

impl LrSearch<'_> {
    fn count(&mut self, pos: usize) -> u64 {
        let Some(&(i, j)) = self.cells.get(pos) else {
            return 1;
        };
        let max_right = if self.shape.contains_cell(i, j + 1) {
            self.filling[i][j + 1]
        } else {
            usize::MAX
        };
        let min_above = if i > 0 && self.shape.contains_cell(i - 1, j) {
            self.filling[i - 1][j] + 1
        } else {
            1
        };
        let mut total = 0;
        for v in min_above..=self.weight.len().min(max_right) {
            if self.counts[v] >= self.weight[v - 1]
                || (v > 1 && self.counts[v] >= self.counts[v - 1])
            {
                continue;
            }
            self.counts[v] += 1;
            self.filling[i][j] = v;
            total += self.count(pos + 1);
            self.counts[v] -= 1;
        }
        self.filling[i][j] = 0;
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::degree;
    use crate::partitions::enumerate;
    use num_bigint::BigUint;

    fn p(parts: &[usize]) -> Partition {
        Partition::of(parts)
    }

    #[test]
    fn kostka_basics() {
        for lambda in enumerate(6, None).unwrap() {
            assert_eq!(kostka(&lambda, &lambda).unwrap(), 1);
            assert_eq!(kostka(&p(&[6]), &lambda).unwrap(), 1);
        }
        assert_eq!(kostka(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(kostka(&p(&[3, 2]), &p(&[2, 2, 1])).unwrap(), 2);
        assert_eq!(kostka(&p(&[2, 2]), &p(&[3, 1])).unwrap(), 0);
        assert!(kostka(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn kostka_with_unit_weight_is_degree() {
        for n in 1..=8 {
            for lambda in enumerate(n, None).unwrap() {
                let k = kostka(&lambda, &Partition::column(n)).unwrap();
                assert_eq!(BigUint::from(k), degree(&lambda), "{lambda}");
            }
        }
    }

    #[test]
    fn lr_examples() {
        let lambda = p(&[3, 1]);
        assert_eq!(lr_coefficient(&lambda, &lambda, &Partition::empty()), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[1, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);
        assert_eq!(lr_coefficient(&p(&[2, 2]), &p(&[3]), &p(&[1])), 0);
    }

    #[test]
    fn lr_induced_degree() {
        let a = p(&[2, 1]);
        let total: BigUint = enumerate(6, None)
            .unwrap()
            .iter()
            .map(|nu| BigUint::from(lr_coefficient(nu, &a, &a)) * degree(nu))
            .sum();
        // f(2,1)^2 * C(6,3)
        assert_eq!(total, degree(&a) * degree(&a) * BigUint::from(20u32));
        assert_eq!(total, BigUint::from(80u32));
    }

    #[test]
    fn skew_shape_cells() {
        let s = SkewShape::new(p(&[3, 2]), p(&[1])).unwrap();
        assert_eq!(s.size(), 4);
        assert_eq!(s.reading_cells(), vec![(0, 2), (0, 1), (1, 1), (1, 0)]);
        assert!(SkewShape::new(p(&[1]), p(&[2])).is_err());
    }
}
