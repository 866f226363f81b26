//! Hand-rolled lexer for `.cdp` sources.

use std::fmt;

use crate::ast::Span;
use crate::rational::{parse_decimal, Rat};

#[derive(Debug, Clone, PartialEq)]
pub enum Tok {
    Ident(String),
    Num(Rat),
    // punctuation and operators
    LParen,
    RParen,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Comma,
    Semi,
    Colon,
    Assign,   // :=
    ColonCol, // ::
    Arrow,    // ->
    Plus,
    Minus,
    Star,
    Slash,
    Percent,
    Lt,
    Le,
    Gt,
    Ge,
    EqEq,
    Ne,
    AndAnd,
    OrOr,
    Bang,
    Question,
    Caret,       // ^
    CaretCaret,  // ^^
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Num(r) => write!(f, "number `{r}`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::LBrace => write!(f, "`{{`"),
            Tok::RBrace => write!(f, "`}}`"),
            Tok::LBracket => write!(f, "`[`"),
            Tok::RBracket => write!(f, "`]`"),
            Tok::Comma => write!(f, "`,`"),
            Tok::Semi => write!(f, "`;`"),
            Tok::Colon => write!(f, "`:`"),
            Tok::Assign => write!(f, "`:=`"),
            Tok::ColonCol => write!(f, "`::`"),
            Tok::Arrow => write!(f, "`->`"),
            Tok::Plus => write!(f, "`+`"),
            Tok::Minus => write!(f, "`-`"),
            Tok::Star => write!(f, "`*`"),
            Tok::Slash => write!(f, "`/`"),
            Tok::Percent => write!(f, "`%`"),
            Tok::Lt => write!(f, "`<`"),
            Tok::Le => write!(f, "`<=`"),
            Tok::Gt => write!(f, "`>`"),
            Tok::Ge => write!(f, "`>=`"),
            Tok::EqEq => write!(f, "`==`"),
            Tok::Ne => write!(f, "`!=`"),
            Tok::AndAnd => write!(f, "`&&`"),
            Tok::OrOr => write!(f, "`||`"),
            Tok::Bang => write!(f, "`!`"),
            Tok::Question => write!(f, "`?`"),
            Tok::Caret => write!(f, "`^`"),
            Tok::CaretCaret => write!(f, "`^^`"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Lexeme {
    pub tok: Tok,
    pub span: Span,
}

#[derive(Debug, thiserror::Error)]
#[error("{span}: {msg}")]
pub struct LexError {
    pub span: Span,
    pub msg: String,
}

pub fn lex(text: &str) -> Result<Vec<Lexeme>, LexError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0usize;
    let mut line = 1u32;
    let mut col = 1u32;

    macro_rules! push {
        ($tok:expr, $span:expr) => {
            out.push(Lexeme { tok: $tok, span: $span })
        };
    }

    while i < chars.len() {
        let c = chars[i];
        let span = Span::new(line, col);
        let mut adv = |i: &mut usize, col: &mut u32, n: usize| {
            *i += n;
            *col += n as u32;
        };
        match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
            }
            ' ' | '\t' | '\r' => adv(&mut i, &mut col, 1),
            '#' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
            }
            '/' if chars.get(i + 1) == Some(&'/') => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
            }
            '(' => {
                push!(Tok::LParen, span);
                adv(&mut i, &mut col, 1);
            }
            ')' => {
                push!(Tok::RParen, span);
                adv(&mut i, &mut col, 1);
            }
            '{' => {
                push!(Tok::LBrace, span);
                adv(&mut i, &mut col, 1);
            }
            '}' => {
                push!(Tok::RBrace, span);
                adv(&mut i, &mut col, 1);
            }
            '[' => {
                push!(Tok::LBracket, span);
                adv(&mut i, &mut col, 1);
            }
            ']' => {
                push!(Tok::RBracket, span);
                adv(&mut i, &mut col, 1);
            }
            ',' => {
                push!(Tok::Comma, span);
                adv(&mut i, &mut col, 1);
            }
            ';' => {
                push!(Tok::Semi, span);
                adv(&mut i, &mut col, 1);
            }
            '+' => {
                push!(Tok::Plus, span);
                adv(&mut i, &mut col, 1);
            }
            '*' => {
                push!(Tok::Star, span);
                adv(&mut i, &mut col, 1);
            }
            '%' => {
                push!(Tok::Percent, span);
                adv(&mut i, &mut col, 1);
            }
            '?' => {
                push!(Tok::Question, span);
                adv(&mut i, &mut col, 1);
            }
            '-' => {
                if chars.get(i + 1) == Some(&'>') {
                    push!(Tok::Arrow, span);
                    adv(&mut i, &mut col, 2);
                } else {
                    push!(Tok::Minus, span);
                    adv(&mut i, &mut col, 1);
                }
            }
            '/' => {
                push!(Tok::Slash, span);
                adv(&mut i, &mut col, 1);
            }
            ':' => {
                if chars.get(i + 1) == Some(&'=') {
                    push!(Tok::Assign, span);
                    adv(&mut i, &mut col, 2);
                } else if chars.get(i + 1) == Some(&':') {
                    push!(Tok::ColonCol, span);
                    adv(&mut i, &mut col, 2);
                } else {
                    push!(Tok::Colon, span);
                    adv(&mut i, &mut col, 1);
                }
            }
            '<' => {
                if chars.get(i + 1) == Some(&'=') {
                    push!(Tok::Le, span);
                    adv(&mut i, &mut col, 2);
                } else {
                    push!(Tok::Lt, span);
                    adv(&mut i, &mut col, 1);
                }
            }
            '>' => {
                if chars.get(i + 1) == Some(&'=') {
                    push!(Tok::Ge, span);
                    adv(&mut i, &mut col, 2);
                } else {
                    push!(Tok::Gt, span);
                    adv(&mut i, &mut col, 1);
                }
            }
            '=' => {
                if chars.get(i + 1) == Some(&'=') {
                    push!(Tok::EqEq, span);
                    adv(&mut i, &mut col, 2);
                } else {
                    return Err(LexError { span, msg: "expected `==` (use `:=` for assignment)".into() });
                }
            }
            '!' => {
                if chars.get(i + 1) == Some(&'=') {
                    push!(Tok::Ne, span);
                    adv(&mut i, &mut col, 2);
                } else {
                    push!(Tok::Bang, span);
                    adv(&mut i, &mut col, 1);
                }
            }
            '&' => {
                if chars.get(i + 1) == Some(&'&') {
                    push!(Tok::AndAnd, span);
                    adv(&mut i, &mut col, 2);
                } else {
                    return Err(LexError { span, msg: "expected `&&`".into() });
                }
            }
            '|' => {
                if chars.get(i + 1) == Some(&'|') {
                    push!(Tok::OrOr, span);
                    adv(&mut i, &mut col, 2);
                } else {
                    return Err(LexError { span, msg: "expected `||`".into() });
                }
            }
            '^' => {
                if chars.get(i + 1) == Some(&'^') {
                    push!(Tok::CaretCaret, span);
                    adv(&mut i, &mut col, 2);
                } else {
                    push!(Tok::Caret, span);
                    adv(&mut i, &mut col, 1);
                }
            }
            _ if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                col += (i - start) as u32;
                let value = parse_decimal(&text)
                    .ok_or_else(|| LexError { span, msg: format!("bad numeric literal `{text}`") })?;
                push!(Tok::Num(value), span);
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let mut text: String = chars[start..i].iter().collect();
                // `real_*` is a single type token
                if text == "real_" && chars.get(i) == Some(&'*') {
                    i += 1;
                    text.push('*');
                }
                col += (i - start) as u32;
                push!(Tok::Ident(text), span);
            }
            _ => {
                return Err(LexError { span, msg: format!("unexpected character `{c}`") });
            }
        }
    }
    out.push(Lexeme { tok: Tok::Eof, span: Span::new(line, col) });
    Ok(out)
}
