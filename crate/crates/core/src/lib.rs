pub mod bracketing;
pub mod cli;
pub mod closure;
pub mod derivation;
pub mod error;
pub mod free_group;
pub mod lie;
pub mod linalg;
pub mod magnus;
pub mod parse;
pub mod permutation;
pub mod random;
pub mod schur;
pub mod tensor;
pub mod transfer;
pub mod verify;
pub mod word;
