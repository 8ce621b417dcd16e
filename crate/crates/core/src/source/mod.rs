//! Plain-text ideal files.
//!
//! ```text
//! ring 32003 [x,y,z]
//! ideal I = x^3, y^3, x*y - z^2
//! ```
//!
//! `#` starts a comment that runs to the end of the line.

use crate::groebner::Ideal;
use crate::ring::{FieldSpec, Polynomial, RingContext};
use crate::{Error, Result};

/// A ring with named ideals, in file order.
#[derive(Clone, Debug)]
pub struct IdealSource {
    pub ring: RingContext,
    pub ideals: Vec<(String, Ideal)>,
}

impl IdealSource {
    pub fn get(&self, name: &str) -> Option<&Ideal> {
        self.ideals.iter().find(|(n, _)| n == name).map(|(_, i)| i)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Num(String),
    Sym(char),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, col, msg: msg.into() }
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    for (li, line) in text.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            if c == '#' {
                break;
            }
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            if c.is_ascii_alphabetic() || c == '_' {
                let s = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token { tok: Tok::Ident(chars[s..i].iter().collect()), line: li + 1, col });
                continue;
            }
            if c.is_ascii_digit() {
                let s = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                out.push(Token { tok: Tok::Num(chars[s..i].iter().collect()), line: li + 1, col });
                continue;
            }
            if "[],=+-*^()".contains(c) {
                out.push(Token { tok: Tok::Sym(c), line: li + 1, col });
                i += 1;
                continue;
            }
            return Err(err(li + 1, col, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos)
    }

    fn here(&self) -> (usize, usize) {
        self.peek().map(|t| (t.line, t.col)).unwrap_or(self.end)
    }

    fn fail<T>(&self, msg: impl Into<String>) -> Result<T> {
        let (l, c) = self.here();
        Err(err(l, c, msg))
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn is_sym(&self, c: char) -> bool {
        matches!(self.peek(), Some(Token { tok: Tok::Sym(s), .. }) if *s == c)
    }

    fn expect_sym(&mut self, c: char) -> Result<()> {
        if self.is_sym(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(format!("expected `{c}`"))
        }
    }

    fn ident(&mut self) -> Result<String> {
        match self.peek() {
            Some(Token { tok: Tok::Ident(s), .. }) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => self.fail("expected a name"),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<()> {
        match self.peek() {
            Some(Token { tok: Tok::Ident(s), .. }) if s == kw => {
                self.pos += 1;
                Ok(())
            }
            _ => self.fail(format!("expected `{kw}`")),
        }
    }

    fn number(&mut self) -> Result<String> {
        match self.peek() {
            Some(Token { tok: Tok::Num(s), .. }) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => self.fail("expected a number"),
        }
    }

    // poly := ['-'|'+'] term (('+'|'-') term)*
    fn poly(&mut self, ring: &RingContext) -> Result<Polynomial> {
        let mut acc = ring.zero();
        let mut first = true;
        loop {
            let neg = if self.is_sym('-') {
                self.pos += 1;
                true
            } else if self.is_sym('+') {
                self.pos += 1;
                false
            } else if first {
                false
            } else {
                return Ok(acc);
            };
            first = false;
            let t = self.term(ring)?;
            acc = if neg { acc.sub(&t) } else { acc.add(&t) };
        }
    }

    // term := factor ('*' factor)*
    fn term(&mut self, ring: &RingContext) -> Result<Polynomial> {
        let mut acc = self.power(ring)?;
        while self.is_sym('*') {
            self.pos += 1;
            acc = acc.mul(&self.power(ring)?);
        }
        Ok(acc)
    }

    // power := atom ('^' number)?
    fn power(&mut self, ring: &RingContext) -> Result<Polynomial> {
        let base = self.atom(ring)?;
        if self.is_sym('^') {
            self.pos += 1;
            let e = self.number()?;
            let e: u32 = e.parse().map_err(|_| {
                let (l, c) = self.here();
                err(l, c, "exponent too large")
            })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self, ring: &RingContext) -> Result<Polynomial> {
        let (line, col) = self.here();
        match self.next() {
            Some(Token { tok: Tok::Num(s), .. }) => {
                let p = ring.field.p() as u64;
                let v = s.bytes().fold(0u64, |a, b| (a * 10 + (b - b'0') as u64) % p);
                Ok(Polynomial::constant(ring.n(), ring.field, v as i64))
            }
            Some(Token { tok: Tok::Ident(s), .. }) => match ring.names.iter().position(|x| *x == s) {
                Some(i) => Ok(ring.var(i)),
                None => Err(err(line, col, format!("unknown variable `{s}`"))),
            },
            Some(Token { tok: Tok::Sym('('), .. }) => {
                let p = self.poly(ring)?;
                self.expect_sym(')')?;
                Ok(p)
            }
            _ => Err(err(line, col, "expected a variable, number or `(`")),
        }
    }
}

/// Parses a ring declaration followed by ideal declarations.
pub fn parse_source(text: &str) -> Result<IdealSource> {
    let toks = lex(text)?;
    let nlines = text.lines().count().max(1);
    let end = (nlines, text.lines().last().map(|l| l.chars().count() + 1).unwrap_or(1));
    let mut p = Parser { toks, pos: 0, end };

    p.keyword("ring")?;
    let (pl, pc) = p.here();
    let prime = p.number()?;
    let prime: u64 = prime.parse().map_err(|_| err(pl, pc, "prime too large"))?;
    let field = FieldSpec::new(u32::try_from(prime).map_err(|_| err(pl, pc, "prime too large"))?)
        .map_err(|e| err(pl, pc, e.to_string()))?;
    p.expect_sym('[')?;
    let mut names = Vec::new();
    loop {
        let (l, c) = p.here();
        let v = p.ident()?;
        if v == "ring" || v == "ideal" {
            return Err(err(l, c, format!("`{v}` cannot be a variable name")));
        }
        if names.contains(&v) {
            return Err(err(l, c, format!("duplicate variable `{v}`")));
        }
        names.push(v);
        if p.is_sym(',') {
            p.pos += 1;
        } else {
            break;
        }
    }
    p.expect_sym(']')?;
    let ring = RingContext::new(names, field).map_err(|e| err(pl, pc, e.to_string()))?;

    let mut ideals: Vec<(String, Ideal)> = Vec::new();
    while p.peek().is_some() {
        p.keyword("ideal")?;
        let (nl, nc) = p.here();
        let name = p.ident()?;
        if ideals.iter().any(|(n, _)| *n == name) {
            return Err(err(nl, nc, format!("ideal `{name}` declared twice")));
        }
        p.expect_sym('=')?;
        let mut gens = Vec::new();
        loop {
            let (gl, gc) = p.here();
            let g = p.poly(&ring)?;
            if g.is_zero() {
                return Err(err(gl, gc, "zero generator"));
            }
            if !g.is_homogeneous() {
                return Err(err(gl, gc, "generator is not homogeneous"));
            }
            gens.push(g);
            if p.is_sym(',') {
                p.pos += 1;
            } else {
                break;
            }
        }
        if let Some(t) = p.peek() {
            if t.tok != Tok::Ident("ideal".into()) {
                return p.fail("expected `,` or a new `ideal` declaration");
            }
        }
        ideals.push((name, Ideal::new(ring.clone(), gens)?));
    }
    Ok(IdealSource { ring, ideals })
}

/// Prints in the format read by [`parse_source`].
pub fn print_source(ring: &RingContext, ideals: &[(String, Ideal)]) -> String {
    let mut s = format!("ring {} [{}]\n", ring.field.p(), ring.names.join(","));
    for (name, i) in ideals {
        let gens: Vec<String> = i.gens().iter().map(|g| g.display_with(&ring.names)).collect();
        s.push_str(&format!("ideal {} = {}\n", name, gens.join(", ")));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_example() {
        let s = parse_source("ring 32003 [x,y,z]\nideal I = x^3, y^3, x*y - z^2\n").unwrap();
        assert_eq!(s.ring.n(), 3);
        assert_eq!(s.get("I").unwrap().gens().len(), 3);
    }

    #[test]
    fn zero_generators_rejected() {
        let e = parse_source("ring 32003 [x,y]\nideal I = x - x").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, col: 11, .. }), "{e:?}");
        let e = parse_source("ring 32003 [x,y]\nideal I = x^2, 32003*y").unwrap_err();
        assert!(e.to_string().contains("zero generator"));
    }

    #[test]
    fn positions_reported() {
        let e = parse_source("ring 32003 [x,y]\nideal I = x + w").unwrap_err();
        assert_eq!(e, err(2, 15, "unknown variable `w`"));
        assert!(parse_source("ring 32004 [x]").is_err());
        assert!(parse_source("ring 7 [x]\nideal I = x, (x").is_err());
    }

    #[test]
    fn parentheses_and_signs() {
        let s = parse_source("ring 7 [a,b]\nideal J = -(a+b)^2 + 2*a*b, 8*a").unwrap();
        let r = &s.ring;
        let want = r.monomial(&[2, 0]).add(&r.monomial(&[0, 2])).neg();
        assert_eq!(s.get("J").unwrap().gens()[0], want);
        assert_eq!(s.get("J").unwrap().gens()[1], r.var(0));
    }

    #[test]
    fn round_trip() {
        let text = "ring 32003 [x,y,z]\nideal I = x^3 - 2*y*z^2, y^3\nideal K = z\n";
        let s = parse_source(text).unwrap();
        let printed = print_source(&s.ring, &s.ideals);
        let again = parse_source(&printed).unwrap();
        assert_eq!(print_source(&again.ring, &again.ideals), printed);
        for ((_, a), (_, b)) in s.ideals.iter().zip(&again.ideals) {
            assert_eq!(a.gens(), b.gens());
        }
    }
}
