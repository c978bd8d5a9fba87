//! Exact character theory of finite groups: cyclotomic arithmetic, character
//! tables, Clifford theory, fully ramified characters and the Isaacs
//! correspondence for coprime actions.

pub mod chartab;
pub mod clifford;
pub mod cyclotomic;
pub mod error;
pub mod corpus;
pub mod group;
pub mod isaacs;
pub mod ramified;
pub mod verify;

pub use chartab::{character_table, ClassFunction};
pub use cyclotomic::{Cyclotomic, NumberField};
pub use error::{Error, ErrorClass, Result};
pub use group::{Group, Subgroup};
