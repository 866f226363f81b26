//! Surface language for privacy mechanisms checked by `checkdp`.
//!
//! A mechanism is written in a small probabilistic DSL (`.cdp` files) with
//! distance-annotated types, an adjacency precondition and a claimed privacy
//! bound. This crate parses and validates that language and provides a
//! reference interpreter for concrete executions.

pub mod ast;
pub mod interp;
pub mod lexer;
pub mod parser;
pub mod pretty;
pub mod rational;
pub mod validate;

pub use ast::{
    AdjEntry, AdjacencySpec, AnnType, Base, BinOp, Cmd, CmdKind, Distance, Expr, ExprKind,
    SourceProgram, Span,
};
pub use parser::{parse, ParseError};
pub use rational::Rat;
pub use validate::{validate, Diagnostic};
