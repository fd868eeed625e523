//! Exact solvers and closed-form characterizations for a family of
//! impartial Nim variants: classic Nim, Moore's k-Nim, exact k-Nim, the
//! slow counterparts of both (each chosen pile loses exactly one token),
//! and Exco-Nim (an extra pile that may always be reduced).
//!
//! [`engine`] computes Sprague-Grundy values for the normal and misere
//! conventions by retrograde enumeration over downward-closed boxes,
//! which makes the values exact. [`formulas`] holds the closed forms and
//! position characterizations, and [`verify`] cross-checks each of them
//! against the engine, position by position, over configurable boxes.

pub mod engine;
pub mod error;
pub mod formulas;
pub mod ranking;
pub mod rules;
pub mod verify;

pub use engine::{
    best_move, classify_game, classify_position, find_positions_with, mex, sg_value,
    GameClassReport, PositionClass, SgTable, SwapKind, Witness, MEMORY_BUDGET_ENV,
};
pub use error::{Error, Result};
pub use rules::{is_terminal, moves, Family, GameSpec, Position, Version};
