//! The free symmetric monoidal category on a set of labels, its models,
//! and coherence by normalization to symmetric lists.

pub mod eval;
pub mod gen;
pub mod model;
pub mod psi;
pub mod term;

pub use eval::{canonical_term, decide_equal, eval_mor, eval_obj, normalize, normalize_obj};
pub use model::{check_model_laws, FinBijectionModel, FreeTermModel, SListModel, SmcModel};
pub use psi::{psi_extend, psi_monoidal_iso, Psi};
pub use term::{MorTerm, ObjTerm};
