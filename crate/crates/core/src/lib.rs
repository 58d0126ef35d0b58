//! Standard monomials, monomial-free restricted initial ideals and toric
//! polytopes for Richardson varieties `X_w^v` in the flag variety.

pub mod compat;
pub mod error;
pub mod ideal;
pub mod limits;
pub mod order;
pub mod polytope;
pub mod table1;
pub mod tableau;
pub mod verify;

pub use error::{Error, Result};
pub use limits::Limits;
pub use order::{ColumnSubset, Direction, OrderedSetPartition, Permutation};
pub use tableau::{DefiningChain, Tableau};
