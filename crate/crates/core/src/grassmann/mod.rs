//! Chow ring of `Gr(2, n+2)`: quotient-ring normal forms in `c1, c2`, an
//! independent Schubert-calculus oracle, and Chern classes of symmetric
//! powers of rank-2 bundles.

mod chern;
mod ring;
mod schubert;

pub use chern::{fano_class, fano_polynomial, sym_power_chern, symmetric_to_elementary};
pub use ring::{complete_symmetric, partition_count, ClassDisplay, GClass, GRing};
pub use schubert::{
    check_pieri_oracle, giambelli, pieri_mul, schubert_degree, schubert_of_monomial,
    schubert_to_class, sigma11_mul, Partition2, SchubertSum,
};
