//! Exact computation of derivations, biderivations, symmetric biderivation
//! radicals and commutative post-Lie structures of finite-dimensional Lie
//! algebras over `Q` and prime fields.

pub mod biderive;
pub mod chevalley;
pub mod exactla;
pub mod liecore;
pub mod witt;
