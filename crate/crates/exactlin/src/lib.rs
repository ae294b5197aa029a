//! Exact linear algebra over Z for computing with finitely generated abelian
//! groups: Smith normal form with unimodular transforms, presented groups and
//! their canonical forms, homomorphisms with well-definedness checking, and
//! (bi)complexes with homology.

pub mod complex;
pub mod group;
pub mod mat;
pub mod snf;

pub use complex::{ChainMap, IntBicomplex, IntComplex};
pub use group::{CanonicalForm, FgAbGroup, GroupMap, Subquotient};
pub use mat::Mat;
pub use snf::{
    det, in_row_space, is_unimodular, kernel_basis, preimage_lattice, row_space_basis,
    saturation_basis, smith, solve_left, solve_left_many, Snf,
};

/// Map a collection independently, in parallel when the `parallel` feature is
/// enabled. The sequential path is always available for comparison.
pub fn par_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().map(f).collect()
    }
}

/// Always-sequential variant, kept callable regardless of features so the
/// benchmark suite can compare the two code paths directly.
pub fn seq_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}
