use crate::error::{Error, Result};
use crate::order::Order;

/// A fully materialized `n x n` square in row-major storage.
///
/// The type guarantees only that every cell holds a symbol in `0..n`;
/// whether the square is Latin is a property checked by
/// [`crate::verify::is_latin`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatinSquare {
    n: u32,
    cells: Vec<u32>,
}

impl LatinSquare {
    pub fn from_cells(order: Order, cells: Vec<u32>) -> Result<Self> {
        let n = order.get();
        let expected = order.as_usize() * order.as_usize();
        if cells.len() != expected {
            return Err(Error::OrderMismatch {
                expected: n,
                got: (cells.len() as f64).sqrt() as u32,
            });
        }
        if let Some(&bad) = cells.iter().find(|&&v| v >= n) {
            return Err(Error::SymbolOutOfRange { value: bad, n });
        }
        Ok(LatinSquare { n, cells })
    }

    pub fn order(&self) -> Order {
        Order::new(self.n).expect("order was validated on construction")
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> u32 {
        self.cells[row * self.n as usize + col]
    }

    pub fn row(&self, row: usize) -> &[u32] {
        let n = self.n as usize;
        &self.cells[row * n..(row + 1) * n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.cells.chunks_exact(self.n as usize)
    }

    pub fn cells(&self) -> &[u32] {
        &self.cells
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_cells_validates_shape_and_symbols() {
        let order = Order::new(2).unwrap();
        assert!(LatinSquare::from_cells(order, vec![0, 1, 1, 0]).is_ok());
        assert!(matches!(
            LatinSquare::from_cells(order, vec![0, 1, 1]),
            Err(Error::OrderMismatch { .. })
        ));
        assert_eq!(
            LatinSquare::from_cells(order, vec![0, 1, 2, 0]),
            Err(Error::SymbolOutOfRange { value: 2, n: 2 })
        );
    }

    #[test]
    fn accessors_agree_with_row_major_layout() {
        let order = Order::new(2).unwrap();
        let sq = LatinSquare::from_cells(order, vec![0, 1, 1, 0]).unwrap();
        assert_eq!(sq.get(0, 1), 1);
        assert_eq!(sq.get(1, 0), 1);
        assert_eq!(sq.row(1), &[1, 0]);
        assert_eq!(sq.rows().count(), 2);
    }
}
