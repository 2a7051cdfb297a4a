//! Words, relations and search for the virtual singular braid monoid VSB_n.

pub(crate) mod coxeter;
pub mod diagram;
pub mod exec;
pub mod lemmas;
pub mod markov;
pub mod perm;
pub mod random;
pub mod reduced;
pub mod relations;
pub mod script;
pub mod search;
pub mod word;

pub use exec::Exec;
pub use perm::Permutation;
pub use relations::{
    apply_relation, neighbors, reduced_relation_set, relation_set, Dir, Family, ReducedFamily,
    ReducedRelationId, RelRef, RelationError, RelationId, RelationSet, RewriteStep,
};
pub use script::{check_rewrite_script, RewriteScript, ScriptCheck};
pub use search::{equivalent_bounded, equivalent_with, EquivResult, SearchBudget, SearchOptions, Strategy};
pub use word::{BraidWord, Letter, LetterKind, WordError};
