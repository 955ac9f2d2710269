pub mod error;
pub mod finspan;
pub mod free_smc;
pub mod kleisli;
pub mod monoidal;
pub mod multiset;
pub mod pbc;
pub mod perm;
pub mod slist;
pub mod suites;
pub mod unbias;
