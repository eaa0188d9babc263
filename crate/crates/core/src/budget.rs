//! Enumeration budgets.
//!
//! Every operation whose running time grows with the Weyl group order, the
//! module dimension or a matrix size takes a [`Budget`]. Exceeding it is an
//! [`Error::Resource`](crate::Error::Resource), never a silent truncation.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Largest Weyl group order that may be enumerated.
    pub max_weyl_order: u128,
    /// Largest module dimension for explicit characters.
    pub max_dimension: u128,
    /// Largest matrix size for the type-A commutant construction.
    pub max_matrix_dim: usize,
    /// Largest number of box partitions enumerated.
    pub max_partitions: u128,
    /// Lifts the Weyl-order budget (needed for E8 alternating sums).
    pub full_weyl: bool,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_weyl_order: 10_000_000,
            max_dimension: 1_000_000,
            max_matrix_dim: 60,
            max_partitions: 10_000_000,
            full_weyl: false,
        }
    }
}

impl Budget {
    pub fn check_weyl_order(&self, order: u128) -> crate::Result<()> {
        if self.full_weyl || order <= self.max_weyl_order {
            Ok(())
        } else {
            Err(crate::Error::resource(
                format!("Weyl group enumeration (order {order})"),
                order,
                self.max_weyl_order,
            ))
        }
    }

    pub fn check_dimension(&self, what: &str, dim: u128) -> crate::Result<()> {
        if dim <= self.max_dimension {
            Ok(())
        } else {
            Err(crate::Error::resource(
                format!("{what} (dimension {dim})"),
                dim,
                self.max_dimension,
            ))
        }
    }
}
