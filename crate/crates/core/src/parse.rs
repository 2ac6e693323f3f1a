//! Text syntax for elements, tensors and polynomials.
//!
//! ```text
//! sum     := term (('+' | '-') term)*
//! term    := product ['(x)' product]        tensors only
//! product := unary (['*'] unary)*           juxtaposition multiplies
//! unary   := '-' unary | power
//! power   := atom ['^' integer]
//! atom    := rational | label | 'x' | '(' sum ')'
//! ```
//!
//! Rationals are `7`, `-3` (via unary minus), `1/2` or `0.25`. Labels are
//! the basis labels of the algebra; a bare number means that multiple of the
//! unit. `x` is the indeterminate and is only accepted by [`parse_poly`].

use std::sync::Arc;

use num_traits::{ToPrimitive, Zero};

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::{self, Rational};
use crate::tensor::TensorElement;

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Number(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    TensorOp,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Element,
    Tensor,
    Poly,
}

fn lex(text: &str, mode: Mode) -> Result<Vec<(Token, usize)>> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let b = bytes[pos];
        let start = pos;
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                pos += 1;
                continue;
            }
            b'+' => tokens.push((Token::Plus, start)),
            b'-' => tokens.push((Token::Minus, start)),
            b'*' => tokens.push((Token::Star, start)),
            b'^' => tokens.push((Token::Caret, start)),
            b'(' if mode == Mode::Tensor && text[pos..].starts_with("(x)") => {
                tokens.push((Token::TensorOp, start));
                pos += 3;
                continue;
            }
            b'(' => tokens.push((Token::LParen, start)),
            b')' => tokens.push((Token::RParen, start)),
            b'0'..=b'9' => {
                let digits = |p: &mut usize| {
                    while *p < bytes.len() && bytes[*p].is_ascii_digit() {
                        *p += 1;
                    }
                };
                digits(&mut pos);
                if pos + 1 < bytes.len()
                    && (bytes[pos] == b'/' || bytes[pos] == b'.')
                    && bytes[pos + 1].is_ascii_digit()
                {
                    pos += 1;
                    digits(&mut pos);
                }
                let value = scalar::parse_rational(&text[start..pos]).map_err(|e| match e {
                    Error::DivisionByZero => Error::parse(start, "zero denominator"),
                    _ => Error::parse(start, format!("invalid number `{}`", &text[start..pos])),
                })?;
                tokens.push((Token::Number(value), start));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while pos < bytes.len() && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_') {
                    pos += 1;
                }
                tokens.push((Token::Ident(text[start..pos].to_string()), start));
                continue;
            }
            _ => {
                let ch = text[pos..].chars().next().unwrap_or('?');
                return Err(Error::parse(start, format!("unexpected character `{ch}`")));
            }
        }
        pos += 1;
    }
    Ok(tokens)
}

#[derive(Clone, Debug)]
enum Node {
    Number(Rational),
    Basis(usize),
    X,
    Neg(Box<Node>),
    Add(Box<Node>, Box<Node>),
    Sub(Box<Node>, Box<Node>),
    Mul(Box<Node>, Box<Node>),
    Pow(Box<Node>, u32),
    Tensor(Box<Node>, Box<Node>, usize),
}

struct Parser<'a> {
    tokens: Vec<(Token, usize)>,
    index: usize,
    end: usize,
    algebra: &'a Algebra,
    mode: Mode,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.index).map(|(t, _)| t)
    }

    fn position(&self) -> usize {
        self.tokens.get(self.index).map_or(self.end, |(_, p)| *p)
    }

    fn bump(&mut self) -> Option<Token> {
        let token = self.tokens.get(self.index).map(|(t, _)| t.clone());
        self.index += 1;
        token
    }

    fn sum(&mut self) -> Result<Node> {
        let mut node = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    node = Node::Add(Box::new(node), Box::new(self.term()?));
                }
                Some(Token::Minus) => {
                    self.bump();
                    node = Node::Sub(Box::new(node), Box::new(self.term()?));
                }
                _ => return Ok(node),
            }
        }
    }

    fn term(&mut self) -> Result<Node> {
        let left = self.product()?;
        if self.peek() == Some(&Token::TensorOp) {
            let pos = self.position();
            self.bump();
            let right = self.product()?;
            if self.peek() == Some(&Token::TensorOp) {
                return Err(Error::parse(self.position(), "only A ⊗ A is supported"));
            }
            return Ok(Node::Tensor(Box::new(left), Box::new(right), pos));
        }
        Ok(left)
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self.peek(),
            Some(Token::Number(_) | Token::Ident(_) | Token::LParen)
        )
    }

    fn product(&mut self) -> Result<Node> {
        let mut node = self.unary()?;
        loop {
            if self.peek() == Some(&Token::Star) {
                self.bump();
            } else if !self.starts_atom() {
                return Ok(node);
            }
            node = Node::Mul(Box::new(node), Box::new(self.unary()?));
        }
    }

    fn unary(&mut self) -> Result<Node> {
        if self.peek() == Some(&Token::Minus) {
            self.bump();
            return Ok(Node::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Node> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.bump();
        let pos = self.position();
        match self.bump() {
            Some(Token::Number(n)) if n.is_integer() => {
                let exp = n
                    .to_integer()
                    .to_u32()
                    .ok_or_else(|| Error::parse(pos, "exponent out of range"))?;
                Ok(Node::Pow(Box::new(base), exp))
            }
            _ => Err(Error::parse(pos, "expected a nonnegative integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<Node> {
        let pos = self.position();
        match self.bump() {
            Some(Token::Number(n)) => Ok(Node::Number(n)),
            Some(Token::Ident(name)) => {
                if let Some(i) = self.algebra.label_index(&name) {
                    Ok(Node::Basis(i))
                } else if name == "x" && self.mode == Mode::Poly {
                    Ok(Node::X)
                } else {
                    Err(Error::parse(
                        pos,
                        format!(
                            "unknown basis label `{name}` for algebra `{}` (labels: {})",
                            self.algebra.name(),
                            self.algebra.labels().join(", ")
                        ),
                    ))
                }
            }
            Some(Token::LParen) => {
                let inner = self.sum()?;
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(Error::parse(self.position().min(self.end), "expected `)`")),
                }
            }
            Some(Token::RParen) => Err(Error::parse(pos, "unexpected `)`")),
            Some(_) => Err(Error::parse(pos, "expected a number, label or `(`")),
            None => Err(Error::parse(pos, "unexpected end of input")),
        }
    }
}

fn parse_tree(algebra: &Algebra, text: &str, mode: Mode) -> Result<Node> {
    let tokens = lex(text, mode)?;
    let mut parser = Parser {
        tokens,
        index: 0,
        end: text.len(),
        algebra,
        mode,
    };
    let node = parser.sum()?;
    if parser.index < parser.tokens.len() {
        return Err(Error::parse(parser.position(), "unexpected trailing input"));
    }
    Ok(node)
}

fn element_of(algebra: &Arc<Algebra>, node: &Node) -> Result<Element> {
    Ok(match node {
        Node::Number(n) => Element::scalar(algebra, n),
        Node::Basis(i) => Element::basis(algebra, *i),
        Node::X => unreachable!("x is only produced in polynomial mode"),
        Node::Neg(a) => element_of(algebra, a)?.neg(),
        Node::Add(a, b) => element_of(algebra, a)?.add(&element_of(algebra, b)?)?,
        Node::Sub(a, b) => element_of(algebra, a)?.sub(&element_of(algebra, b)?)?,
        Node::Mul(a, b) => element_of(algebra, a)?.mul(&element_of(algebra, b)?)?,
        Node::Pow(a, e) => {
            let base = element_of(algebra, a)?;
            let mut acc = Element::unit(algebra);
            for _ in 0..*e {
                acc = acc.mul(&base)?;
            }
            acc
        }
        Node::Tensor(_, _, pos) => {
            return Err(Error::parse(*pos, "`(x)` is only allowed at the top level of a tensor"))
        }
    })
}

fn poly_of(algebra: &Arc<Algebra>, node: &Node) -> Result<Polynomial> {
    Ok(match node {
        Node::Number(_) | Node::Basis(_) => Polynomial::constant(&element_of(algebra, node)?),
        Node::X => Polynomial::x(algebra),
        Node::Neg(a) => poly_of(algebra, a)?.neg(),
        Node::Add(a, b) => poly_of(algebra, a)?.add(&poly_of(algebra, b)?)?,
        Node::Sub(a, b) => poly_of(algebra, a)?.sub(&poly_of(algebra, b)?)?,
        Node::Mul(a, b) => poly_of(algebra, a)?.mul(&poly_of(algebra, b)?)?,
        Node::Pow(a, e) => {
            let base = poly_of(algebra, a)?;
            let mut acc = Polynomial::constant(&Element::unit(algebra));
            for _ in 0..*e {
                acc = acc.mul(&base)?;
            }
            acc
        }
        Node::Tensor(_, _, pos) => return Err(Error::parse(*pos, "`(x)` is not allowed in a polynomial")),
    })
}

fn tensor_of(algebra: &Arc<Algebra>, node: &Node) -> Result<TensorElement> {
    Ok(match node {
        Node::Tensor(l, r, _) => {
            TensorElement::simple(&element_of(algebra, l)?, &element_of(algebra, r)?)?
        }
        Node::Neg(a) => tensor_of(algebra, a)?.neg(),
        Node::Add(a, b) => tensor_of(algebra, a)?.add(&tensor_of(algebra, b)?)?,
        Node::Sub(a, b) => tensor_of(algebra, a)?.sub(&tensor_of(algebra, b)?)?,
        Node::Mul(a, b) => match (a.as_ref(), b.as_ref()) {
            (Node::Number(n), t) | (t, Node::Number(n)) => tensor_of(algebra, t)?.scale(n),
            _ => return Err(Error::parse(0, "tensors can only be scaled by rational numbers")),
        },
        Node::Number(n) if n.is_zero() => TensorElement::zero(algebra),
        _ => {
            return Err(Error::parse(
                0,
                "expected a sum of simple tensors `c (x) d`",
            ))
        }
    })
}

pub fn parse_element(algebra: &Arc<Algebra>, text: &str) -> Result<Element> {
    element_of(algebra, &parse_tree(algebra, text, Mode::Element)?)
}

pub fn parse_tensor(algebra: &Arc<Algebra>, text: &str) -> Result<TensorElement> {
    tensor_of(algebra, &parse_tree(algebra, text, Mode::Tensor)?)
}

pub fn parse_poly(algebra: &Arc<Algebra>, text: &str) -> Result<Polynomial> {
    poly_of(algebra, &parse_tree(algebra, text, Mode::Poly)?)
}
