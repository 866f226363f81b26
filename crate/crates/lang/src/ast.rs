//! Abstract syntax for mechanism sources.
//!
//! Every node carries a source span so diagnostics can always point back into
//! the input text.

use std::collections::BTreeMap;
use std::fmt;

use crate::rational::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Span {
    pub line: u32,
    pub col: u32,
}

impl Span {
    pub fn new(line: u32, col: u32) -> Self {
        Span { line, col }
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

/// Distance annotation of a `real` type: the variable is either identical in
/// the two related runs (`Zero`) or tracked by an explicit distance variable
/// (`Star`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Distance {
    Zero,
    Star,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Base {
    Real,
    Bool,
    List(Box<AnnType>),
}

/// Annotated type. Only `real` carries a distance of its own; `bool` and
/// `list` do not (a list of starred reals annotates the element type).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnType {
    pub base: Base,
    pub dist: Distance,
}

impl AnnType {
    pub fn real(dist: Distance) -> Self {
        AnnType { base: Base::Real, dist }
    }

    pub fn bool() -> Self {
        AnnType { base: Base::Bool, dist: Distance::Zero }
    }

    pub fn list(elem: AnnType) -> Self {
        AnnType { base: Base::List(Box::new(elem)), dist: Distance::Zero }
    }

    /// Distance of the element type for list types, own distance otherwise.
    pub fn elem_dist(&self) -> Distance {
        match &self.base {
            Base::List(inner) => inner.elem_dist(),
            _ => self.dist,
        }
    }

    pub fn is_list(&self) -> bool {
        matches!(self.base, Base::List(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Mod,
    Lt,
    Le,
    Gt,
    Ge,
    Eq,
    Ne,
    And,
    Or,
}

impl BinOp {
    pub fn is_cmp(self) -> bool {
        matches!(self, BinOp::Lt | BinOp::Le | BinOp::Gt | BinOp::Ge | BinOp::Eq | BinOp::Ne)
    }

    pub fn is_linear(self) -> bool {
        matches!(self, BinOp::Add | BinOp::Sub)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
            BinOp::Div => "/",
            BinOp::Mod => "%",
            BinOp::Lt => "<",
            BinOp::Le => "<=",
            BinOp::Gt => ">",
            BinOp::Ge => ">=",
            BinOp::Eq => "==",
            BinOp::Ne => "!=",
            BinOp::And => "&&",
            BinOp::Or => "||",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ExprKind {
    Num(Rat),
    Bool(bool),
    Var(String),
    Not(Box<Expr>),
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Ternary(Box<Expr>, Box<Expr>, Box<Expr>),
    /// `e :: xs` appends element `e` at the end of list `xs`.
    Cons(Box<Expr>, Box<Expr>),
    Index(Box<Expr>, Box<Expr>),
    /// `^x` / `^x[i]`: aligned distance reference (preconditions and
    /// alignment patterns only).
    DistAligned(String, Option<Box<Expr>>),
    /// `^^x` / `^^x[i]`: shadow distance reference.
    DistShadow(String, Option<Box<Expr>>),
}

impl Expr {
    pub fn new(kind: ExprKind, span: Span) -> Self {
        Expr { kind, span }
    }

    pub fn free_vars(&self, out: &mut Vec<String>) {
        match &self.kind {
            ExprKind::Num(_) | ExprKind::Bool(_) => {}
            ExprKind::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            ExprKind::Not(e) | ExprKind::Neg(e) => e.free_vars(out),
            ExprKind::Bin(_, a, b) | ExprKind::Cons(a, b) | ExprKind::Index(a, b) => {
                a.free_vars(out);
                b.free_vars(out);
            }
            ExprKind::Ternary(c, a, b) => {
                c.free_vars(out);
                a.free_vars(out);
                b.free_vars(out);
            }
            ExprKind::DistAligned(v, idx) | ExprKind::DistShadow(v, idx) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
                if let Some(i) = idx {
                    i.free_vars(out);
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Cmd {
    pub kind: CmdKind,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq)]
pub enum CmdKind {
    Skip,
    Assign(String, Expr),
    /// `x := lap(scale)`: draw a Laplace sample with the given scale.
    Sample(String, Expr),
    If(Expr, Vec<Cmd>, Vec<Cmd>),
    While(Expr, Vec<Cmd>),
    Return(Expr),
}

/// Adjacency constraint for one star-annotated input.
#[derive(Debug, Clone, PartialEq)]
pub struct AdjEntry {
    /// Per-element lower bound on the distance.
    pub lo: Rat,
    /// Per-element upper bound on the distance.
    pub hi: Rat,
    /// Optional bound on the L1 norm of the whole distance vector
    /// ("at most one query differs by at most c" style adjacency).
    pub norm1: Option<Rat>,
    /// Shadow distances are declared equal to aligned distances.
    pub shadow_tied: bool,
}

/// Adjacency precondition: bounds for the distance variables of every
/// star-annotated input.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct AdjacencySpec {
    pub entries: BTreeMap<String, AdjEntry>,
}

impl AdjacencySpec {
    pub fn entry(&self, input: &str) -> Option<&AdjEntry> {
        self.entries.get(input)
    }
}

/// A parsed mechanism: header, claimed bound, adjacency spec and body.
#[derive(Debug, Clone, PartialEq)]
pub struct SourceProgram {
    pub name: String,
    pub params: Vec<(String, AnnType, Span)>,
    /// Return variable and its declared type.
    pub ret: (String, AnnType),
    /// Claimed privacy bound as a multiple of the scale symbol `eps`.
    pub bound_coef: Rat,
    pub precondition: AdjacencySpec,
    pub body: Vec<Cmd>,
}

impl SourceProgram {
    pub fn param_type(&self, name: &str) -> Option<&AnnType> {
        self.params.iter().find(|(n, _, _)| n == name).map(|(_, t, _)| t)
    }

    /// Names of variables assigned by sampling commands anywhere in the body.
    pub fn random_vars(&self) -> Vec<String> {
        fn walk(cmds: &[Cmd], out: &mut Vec<String>) {
            for c in cmds {
                match &c.kind {
                    CmdKind::Sample(x, _) => {
                        if !out.contains(x) {
                            out.push(x.clone());
                        }
                    }
                    CmdKind::If(_, t, e) => {
                        walk(t, out);
                        walk(e, out);
                    }
                    CmdKind::While(_, b) => walk(b, out),
                    _ => {}
                }
            }
        }
        let mut out = Vec::new();
        walk(&self.body, &mut out);
        out
    }

    /// Star-annotated inputs in declaration order.
    pub fn star_inputs(&self) -> Vec<(String, bool)> {
        self.params
            .iter()
            .filter(|(_, t, _)| t.elem_dist() == Distance::Star)
            .map(|(n, t, _)| (n.clone(), t.is_list()))
            .collect()
    }
}
