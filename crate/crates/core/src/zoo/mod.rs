//! Reference weak bimonoids: groupoid and monoid algebras, the corpus used
//! by the tests, and mutants that break a chosen law.

mod corpus;
mod groupoid;
mod monoid;
mod mutate;

pub use corpus::{corpus, corpus_entry, super_exterior, CorpusEntry, Source};
pub use groupoid::{groupoid_algebra, Arrow, FiniteGroupoid};
pub use monoid::{monoid_algebra, FiniteMonoidTable};
pub use mutate::{mutate, MutationTarget};
