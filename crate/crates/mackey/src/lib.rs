//! Mackey functors for cyclic groups C_n over exact integer presentations.
//!
//! A Mackey functor here is one finitely generated abelian group per divisor
//! d | n together with prime-step restrictions, transfers, and the action of
//! the chosen generator of C_n, all validated against the four compatibility
//! axioms. On top of that sit the standard examples (A, Z, Z*, ⟨Z⟩, ⟨Z/p⟩),
//! the twisted Burnside functors A[τ], the box product built inductively by
//! levelwise tensor + transfer slots, the ⊠ assembly for square-free orders,
//! and certified isomorphism recognition (`iso_as_tau`, `find_mackey_iso`).

mod boxprod;
mod diagram;
mod functor;
mod iso;
mod standard;

pub use boxprod::box_product;
pub use diagram::{from_json, from_json_str, lewis_ascii, lewis_dot, to_json, to_json_string, MackeyJson};
pub use functor::{exact_at, mat_label, prime_steps, AxiomReport, MackeyFunctor, MackeyMap};
pub use iso::{find_mackey_iso, is_iso_to_tau, iso_as_tau};
pub use standard::{
    ai_box_zic, boxtimes, burnside_functor, constant_z, dual_z, standard, tau_burnside,
    top_concentrated, StandardName, TauBurnside,
};
