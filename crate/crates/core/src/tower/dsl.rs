//! Line-oriented tower description language.
//!
//! ```text
//! base Q                       # or: base F<p>
//! gen s minpoly s^2 - 2
//! gen t minpoly t^2 - s
//! ground s                     # optional
//! ```
//!
//! Polynomial expressions use integer literals, generator names, `+ - * ^`
//! and parentheses. The grammar is LL(1):
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary ('*' unary)*
//! unary := '-' unary | power
//! power := atom ('^' INT)?
//! atom  := INT | NAME | '(' expr ')'
//! ```

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Exponents above this are rejected to keep expansion bounded.
pub const MAX_EXPONENT: u32 = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseSpec {
    Rational,
    Prime(u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenDecl {
    pub name: String,
    pub expr: Expr,
    pub line: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerSpec {
    pub base: BaseSpec,
    pub base_line: usize,
    pub gens: Vec<GenDecl>,
    /// Generator name and line of the ground marker.
    pub ground: Option<(String, usize)>,
}

impl TowerSpec {
    /// Number of levels generating the ground field.
    pub fn ground_levels(&self) -> usize {
        match &self.ground {
            None => 0,
            Some((name, _)) => self.gens.iter().position(|g| &g.name == name).unwrap() + 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
}

struct Lexed {
    toks: Vec<(Tok, usize)>,
    end_col: usize,
}

fn lex(line_no: usize, text: &str) -> Result<Lexed> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            toks.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            toks.push((Tok::Int(s.parse().unwrap()), col));
        } else if "+-*^()".contains(c) {
            toks.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(Error::Syntax {
                line: line_no,
                column: col,
                message: format!("unexpected character '{c}'"),
            });
        }
    }
    let end_col = chars.iter().position(|&c| c == '#').unwrap_or(chars.len()) + 1;
    Ok(Lexed { toks, end_col })
}

struct Cursor<'a> {
    line: usize,
    toks: &'a [(Tok, usize)],
    pos: usize,
    end_col: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            line: self.line,
            column: self.col(),
            message: message.into(),
        })
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn ident(&mut self, what: &str) -> Result<String> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => self.err(format!("expected {what}")),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<()> {
        match self.peek() {
            Some(Tok::Ident(s)) if s == kw => {
                self.pos += 1;
                Ok(())
            }
            _ => self.err(format!("expected '{kw}'")),
        }
    }

    fn finish(&self) -> Result<()> {
        if self.pos < self.toks.len() {
            return self.err("unexpected trailing input");
        }
        Ok(())
    }

    fn expr(&mut self, known: &[String]) -> Result<Expr> {
        let mut lhs = self.term(known)?;
        loop {
            match self.peek() {
                Some(Tok::Sym('+')) => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term(known)?));
                }
                Some(Tok::Sym('-')) => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term(known)?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self, known: &[String]) -> Result<Expr> {
        let mut lhs = self.unary(known)?;
        while self.peek() == Some(&Tok::Sym('*')) {
            self.pos += 1;
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary(known)?));
        }
        Ok(lhs)
    }

    fn unary(&mut self, known: &[String]) -> Result<Expr> {
        if self.peek() == Some(&Tok::Sym('-')) {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary(known)?)));
        }
        let base = self.atom(known)?;
        if self.peek() != Some(&Tok::Sym('^')) {
            return Ok(base);
        }
        self.pos += 1;
        match self.peek() {
            Some(Tok::Int(n)) => {
                let e = u32::try_from(n.clone()).ok().filter(|&e| e <= MAX_EXPONENT);
                match e {
                    Some(e) => {
                        self.pos += 1;
                        Ok(Expr::Pow(Box::new(base), e))
                    }
                    None => self.err(format!("exponent exceeds {MAX_EXPONENT}")),
                }
            }
            _ => self.err("expected integer exponent"),
        }
    }

    fn atom(&mut self, known: &[String]) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Expr::Int(n))
            }
            Some(Tok::Ident(name)) => {
                if !known.contains(&name) {
                    return Err(Error::UnknownGenerator {
                        line: self.line,
                        name,
                    });
                }
                self.pos += 1;
                Ok(Expr::Var(name))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr(known)?;
                if self.bump() != Some(Tok::Sym(')')) {
                    self.pos -= 1;
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            _ => self.err("expected a number, a generator name or '('"),
        }
    }
}

fn parse_base(cur: &mut Cursor) -> Result<BaseSpec> {
    let col = cur.col();
    let name = cur.ident("base field 'Q' or 'F<p>'")?;
    let spec = if name == "Q" {
        BaseSpec::Rational
    } else if let Some(p) = name.strip_prefix('F').and_then(|d| d.parse::<u64>().ok()) {
        BaseSpec::Prime(p)
    } else {
        return Err(Error::Syntax {
            line: cur.line,
            column: col,
            message: format!("unknown base field '{name}'"),
        });
    };
    cur.finish()?;
    Ok(spec)
}

/// Parses tower source text. Field-level checks (primality, monicity,
/// irreducibility) happen when the tower is built.
pub fn parse(text: &str) -> Result<TowerSpec> {
    let mut base: Option<(BaseSpec, usize)> = None;
    let mut gens: Vec<GenDecl> = Vec::new();
    let mut ground = None;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let lexed = lex(line, raw)?;
        if lexed.toks.is_empty() {
            continue;
        }
        let mut cur = Cursor {
            line,
            toks: &lexed.toks,
            pos: 0,
            end_col: lexed.end_col,
        };
        if base.is_none() {
            cur.keyword("base")?;
            base = Some((parse_base(&mut cur)?, line));
            continue;
        }
        let kw = cur.ident("'gen' or 'ground'")?;
        match kw.as_str() {
            "gen" => {
                let name_col = cur.col();
                let name = cur.ident("generator name")?;
                if gens.iter().any(|g| g.name == name) {
                    return Err(Error::Syntax {
                        line,
                        column: name_col,
                        message: format!("generator '{name}' declared twice"),
                    });
                }
                cur.keyword("minpoly")?;
                let mut known: Vec<String> = gens.iter().map(|g| g.name.clone()).collect();
                known.push(name.clone());
                let expr = cur.expr(&known)?;
                cur.finish()?;
                gens.push(GenDecl { name, expr, line });
            }
            "ground" => {
                if ground.is_some() {
                    cur.pos -= 1;
                    return cur.err("duplicate 'ground'");
                }
                let name = cur.ident("generator name")?;
                if !gens.iter().any(|g| g.name == name) {
                    return Err(Error::UnknownGenerator { line, name });
                }
                cur.finish()?;
                ground = Some((name, line));
            }
            _ => {
                cur.pos -= 1;
                return cur.err("expected 'gen' or 'ground'");
            }
        }
    }
    let Some((base, base_line)) = base else {
        return Err(Error::Syntax {
            line: last_line.max(1),
            column: 1,
            message: "expected 'base'".into(),
        });
    };
    if gens.is_empty() {
        return Err(Error::Syntax {
            line: last_line + 1,
            column: 1,
            message: "expected at least one 'gen'".into(),
        });
    }
    Ok(TowerSpec {
        base,
        base_line,
        gens,
        ground,
    })
}
