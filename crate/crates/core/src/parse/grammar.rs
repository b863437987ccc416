//! Lexer and recursive-descent parser for the problem-file grammar:
//!
//! ```text
//! file      := defn newline defn
//! defn      := name "=" expr
//! name      := "f" | "theta"
//! expr      := term (("+" | "-") term)*
//! term      := factor ("*" factor)*
//! factor    := rational | "#" | patterntok | var ("^" nat)?
//! patterntok:= "(" var "^" nat ")"
//! rational  := ("-")? nat ("/" nat)?
//! ```
//!
//! Comments run from `//` to the end of the line; whitespace is otherwise
//! insignificant. A leading `-` on the first term of an expression is
//! accepted as well, though the canonical printer never emits one.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{PatternPoly, ProblemSpec};
use crate::error::{Error, Result};
use crate::poly::{BiPoly, Rat};

/// Exponents above this are rejected at parse time; dense `(x^d)` tokens
/// expand to `d + 1` generic members, so unbounded exponents would turn a
/// short input into an allocation bomb.
const MAX_EXPONENT: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Nat(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Slash,
    Hash,
    Equals,
    Newline,
    Eof,
}

fn describe(tok: &Tok) -> String {
    match tok {
        Tok::Ident(s) => format!("identifier `{s}`"),
        Tok::Nat(n) => format!("number `{n}`"),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::Slash => "`/`".into(),
        Tok::Hash => "`#`".into(),
        Tok::Equals => "`=`".into(),
        Tok::Newline => "end of line".into(),
        Tok::Eof => "end of input".into(),
    }
}

struct Token {
    tok: Tok,
    pos: usize,
}

fn line_col(text: &str, pos: usize) -> (usize, usize) {
    let mut line = 1;
    let mut col = 1;
    for (i, ch) in text.char_indices() {
        if i >= pos {
            break;
        }
        if ch == '\n' {
            line += 1;
            col = 1;
        } else {
            col += 1;
        }
    }
    (line, col)
}

fn syntax_error(text: &str, pos: usize, expected: &str, found: String) -> Error {
    let (line, col) = line_col(text, pos);
    Error::Syntax {
        pos,
        line,
        col,
        expected: expected.to_string(),
        found,
    }
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let mut toks = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, ch)) = chars.peek() {
        match ch {
            ' ' | '\t' | '\r' => {
                chars.next();
            }
            '\n' => {
                chars.next();
                toks.push(Token {
                    tok: Tok::Newline,
                    pos,
                });
            }
            '/' => {
                chars.next();
                if chars.peek().is_some_and(|&(_, c)| c == '/') {
                    // comment to end of line
                    while chars.peek().is_some_and(|&(_, c)| c != '\n') {
                        chars.next();
                    }
                } else {
                    toks.push(Token {
                        tok: Tok::Slash,
                        pos,
                    });
                }
            }
            '+' | '-' | '*' | '^' | '(' | ')' | '#' | '=' => {
                chars.next();
                let tok = match ch {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '^' => Tok::Caret,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    '#' => Tok::Hash,
                    _ => Tok::Equals,
                };
                toks.push(Token { tok, pos });
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&(_, c)) = chars.peek() {
                    if c.is_ascii_digit() {
                        digits.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let n: BigInt = digits.parse().expect("digit run parses as an integer");
                toks.push(Token {
                    tok: Tok::Nat(n),
                    pos,
                });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(&(_, c)) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        name.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                toks.push(Token {
                    tok: Tok::Ident(name),
                    pos,
                });
            }
            other => {
                return Err(syntax_error(
                    text,
                    pos,
                    "a token of the problem grammar",
                    format!("character `{other}`"),
                ));
            }
        }
    }
    toks.push(Token {
        tok: Tok::Eof,
        pos: text.len(),
    });
    Ok(toks)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum PatternTok {
    Hash,
    Dense { var: String, deg: usize },
}

#[derive(Debug)]
struct RawTerm {
    coeff: Rat,
    /// Variable factors as (name, exponent, byte position).
    vars: Vec<(String, usize, usize)>,
    pattern: Option<PatternTok>,
}

#[derive(Debug)]
struct RawDefn {
    name: String,
    name_pos: usize,
    terms: Vec<RawTerm>,
}

struct Parser<'a> {
    text: &'a str,
    toks: Vec<Token>,
    idx: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.idx].tok
    }

    fn pos(&self) -> usize {
        self.toks[self.idx].pos
    }

    fn advance(&mut self) -> Tok {
        let t = self.toks[self.idx].tok.clone();
        if self.idx + 1 < self.toks.len() {
            self.idx += 1;
        }
        t
    }

    fn error_here(&self, expected: &str) -> Error {
        syntax_error(self.text, self.pos(), expected, describe(self.peek()))
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<()> {
        if self.peek() == &tok {
            self.advance();
            Ok(())
        } else {
            Err(self.error_here(expected))
        }
    }

    fn expect_nat(&mut self, expected: &str) -> Result<(BigInt, usize)> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Nat(n) => {
                self.advance();
                Ok((n, pos))
            }
            _ => Err(self.error_here(expected)),
        }
    }

    fn nat_to_exponent(&self, n: &BigInt, pos: usize) -> Result<usize> {
        let too_big = || {
            syntax_error(
                self.text,
                pos,
                &format!("an exponent no larger than {MAX_EXPONENT}"),
                format!("number `{n}`"),
            )
        };
        let v: usize = n.try_into().map_err(|_| too_big())?;
        if v > MAX_EXPONENT {
            return Err(too_big());
        }
        Ok(v)
    }

    fn skip_newlines(&mut self) {
        while self.peek() == &Tok::Newline {
            self.advance();
        }
    }

    fn parse_defn(&mut self) -> Result<RawDefn> {
        let name_pos = self.pos();
        let name = match self.peek().clone() {
            Tok::Ident(s) if s == "f" || s == "theta" => {
                self.advance();
                s
            }
            _ => return Err(self.error_here("a definition name (`f` or `theta`)")),
        };
        self.expect(Tok::Equals, "`=`")?;
        let terms = self.parse_expr()?;
        Ok(RawDefn {
            name,
            name_pos,
            terms,
        })
    }

    fn parse_expr(&mut self) -> Result<Vec<RawTerm>> {
        let mut terms = Vec::new();
        let mut negate = false;
        if self.peek() == &Tok::Minus {
            self.advance();
            negate = true;
        }
        terms.push(self.parse_term(negate)?);
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.advance();
                    terms.push(self.parse_term(false)?);
                }
                Tok::Minus => {
                    self.advance();
                    terms.push(self.parse_term(true)?);
                }
                _ => break,
            }
        }
        Ok(terms)
    }

    fn parse_term(&mut self, negate: bool) -> Result<RawTerm> {
        let mut term = RawTerm {
            coeff: if negate {
                -Rat::one()
            } else {
                Rat::one()
            },
            vars: Vec::new(),
            pattern: None,
        };
        self.parse_factor(&mut term)?;
        while self.peek() == &Tok::Star {
            self.advance();
            self.parse_factor(&mut term)?;
        }
        Ok(term)
    }

    fn parse_rational(&mut self, negate: bool) -> Result<Rat> {
        let (numer, _) = self.expect_nat("a number")?;
        let mut denom = BigInt::one();
        if self.peek() == &Tok::Slash {
            self.advance();
            let (d, dpos) = self.expect_nat("a denominator")?;
            if d.is_zero() {
                return Err(syntax_error(
                    self.text,
                    dpos,
                    "a nonzero denominator",
                    "number `0`".into(),
                ));
            }
            denom = d;
        }
        let r = Rat::new(numer, denom);
        Ok(if negate { -r } else { r })
    }

    fn set_pattern(&mut self, term: &mut RawTerm, tok: PatternTok, pos: usize) -> Result<()> {
        if term.pattern.is_some() {
            return Err(syntax_error(
                self.text,
                pos,
                "at most one `#` or `(var^d)` per term",
                "a second pattern marker".into(),
            ));
        }
        term.pattern = Some(tok);
        Ok(())
    }

    fn parse_factor(&mut self, term: &mut RawTerm) -> Result<()> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Minus => {
                self.advance();
                let r = self.parse_rational(true)?;
                term.coeff = &term.coeff * r;
                Ok(())
            }
            Tok::Nat(_) => {
                let r = self.parse_rational(false)?;
                term.coeff = &term.coeff * r;
                Ok(())
            }
            Tok::Hash => {
                self.advance();
                self.set_pattern(term, PatternTok::Hash, pos)
            }
            Tok::LParen => {
                self.advance();
                let var = match self.peek().clone() {
                    Tok::Ident(s) => {
                        self.advance();
                        s
                    }
                    _ => return Err(self.error_here("a variable name inside `(var^d)`")),
                };
                self.check_var_name(&var, pos)?;
                self.expect(Tok::Caret, "`^`")?;
                let (n, npos) = self.expect_nat("a degree")?;
                let deg = self.nat_to_exponent(&n, npos)?;
                self.expect(Tok::RParen, "`)`")?;
                self.set_pattern(term, PatternTok::Dense { var, deg }, pos)
            }
            Tok::Ident(name) => {
                self.advance();
                self.check_var_name(&name, pos)?;
                let mut exp = 1usize;
                if self.peek() == &Tok::Caret {
                    self.advance();
                    let (n, npos) = self.expect_nat("a nonnegative exponent")?;
                    exp = self.nat_to_exponent(&n, npos)?;
                }
                term.vars.push((name, exp, pos));
                Ok(())
            }
            _ => Err(self.error_here("a coefficient, `#`, `(var^d)`, or a variable")),
        }
    }

    fn check_var_name(&self, name: &str, pos: usize) -> Result<()> {
        if name == "f" || name == "theta" {
            return Err(syntax_error(
                self.text,
                pos,
                "a variable name other than the reserved `f` and `theta`",
                format!("identifier `{name}`"),
            ));
        }
        Ok(())
    }
}

/// Parses a problem file into a [`ProblemSpec`].
pub fn parse_problem(text: &str) -> Result<ProblemSpec> {
    let toks = lex(text)?;
    let mut p = Parser { text, toks, idx: 0 };
    p.skip_newlines();
    let first = p.parse_defn()?;
    if p.peek() != &Tok::Newline && p.peek() != &Tok::Eof {
        return Err(p.error_here("`+`, `-`, `*`, or the end of the definition"));
    }
    p.skip_newlines();
    let second = p.parse_defn()?;
    p.skip_newlines();
    if p.peek() != &Tok::Eof {
        return Err(p.error_here("end of input after the second definition"));
    }
    if first.name == second.name {
        return Err(syntax_error(
            text,
            second.name_pos,
            "one `f` and one `theta` definition",
            format!("a second `{}`", second.name),
        ));
    }
    let (f_defn, theta_defn) = if first.name == "f" {
        (first, second)
    } else {
        (second, first)
    };
    build_spec(text, f_defn, theta_defn)
}

fn build_spec(text: &str, f_defn: RawDefn, theta_defn: RawDefn) -> Result<ProblemSpec> {
    // Collect the distinct variable names in order of first appearance,
    // counting the variables of `(var^d)` tokens as appearances too.
    let mut names: Vec<String> = Vec::new();
    let mut dense_var: Option<String> = None;
    for defn in [&f_defn, &theta_defn] {
        for term in &defn.terms {
            let mut occurrences: Vec<(&str, usize)> = term
                .vars
                .iter()
                .map(|(n, _, p)| (n.as_str(), *p))
                .collect();
            if let Some(PatternTok::Dense { var, .. }) = &term.pattern {
                occurrences.push((var.as_str(), defn.name_pos));
                match &dense_var {
                    None => dense_var = Some(var.clone()),
                    Some(dv) if dv != var => {
                        return Err(syntax_error(
                            text,
                            defn.name_pos,
                            "a single parameter variable in all `(var^d)` tokens",
                            format!("both `({dv}^..)` and `({var}^..)`"),
                        ));
                    }
                    Some(_) => {}
                }
            }
            for (name, pos) in occurrences {
                if !names.iter().any(|n| n == name) {
                    if names.len() == 2 {
                        return Err(Error::MixedVariables {
                            var: name.to_string(),
                            pos,
                        });
                    }
                    names.push(name.to_string());
                }
            }
        }
    }

    let (x_var, y_var) = resolve_roles(&names, dense_var.as_deref());
    let vars = (x_var.as_str(), y_var.as_str());

    let pattern_mode = [&f_defn, &theta_defn]
        .iter()
        .any(|d| d.terms.iter().any(|t| t.pattern.is_some()));

    if pattern_mode {
        let mut warn = false;
        let f = build_pattern(&f_defn, vars, &mut warn);
        let theta = build_pattern(&theta_defn, vars, &mut warn);
        check_positive_degree_pattern(&f, "f", vars.1)?;
        check_positive_degree_pattern(&theta, "theta", vars.1)?;
        Ok(ProblemSpec::new_pattern(f, theta, warn))
    } else {
        let f = build_concrete(&f_defn, vars);
        let theta = build_concrete(&theta_defn, vars);
        check_positive_degree_concrete(&f, "f", vars.1)?;
        check_positive_degree_concrete(&theta, "theta", vars.1)?;
        Ok(ProblemSpec::new_concrete(f, theta))
    }
}

/// Assigns the parameter (x) and eliminated (y) roles to variable names.
///
/// A `(var^d)` token pins its variable to the parameter role. Literal `x`
/// and `y` take their namesake roles. A single remaining custom name fills
/// the eliminated slot (a one-variable input is a polynomial in the variable
/// being eliminated); two custom names are assigned alphabetically so the
/// outcome does not depend on term order.
fn resolve_roles(names: &[String], dense_var: Option<&str>) -> (String, String) {
    let mut x_slot: Option<String> = dense_var.map(str::to_string);
    let mut y_slot: Option<String> = None;
    let mut leftovers: Vec<&String> = Vec::new();
    for name in names {
        if x_slot.as_deref() == Some(name) || y_slot.as_deref() == Some(name) {
            continue;
        }
        if name == "x" && x_slot.is_none() {
            x_slot = Some(name.clone());
        } else if name == "y" && y_slot.is_none() {
            y_slot = Some(name.clone());
        } else {
            leftovers.push(name);
        }
    }
    leftovers.sort();
    match leftovers.len() {
        0 => {}
        1 => {
            if y_slot.is_none() {
                y_slot = Some(leftovers[0].clone());
            } else {
                x_slot = Some(leftovers[0].clone());
            }
        }
        _ => {
            x_slot = Some(leftovers[0].clone());
            y_slot = Some(leftovers[1].clone());
        }
    }
    let x = x_slot.unwrap_or_else(|| {
        if y_slot.as_deref() == Some("x") {
            "y".to_string()
        } else {
            "x".to_string()
        }
    });
    let y = y_slot.unwrap_or_else(|| if x == "y" { "x".to_string() } else { "y".to_string() });
    (x, y)
}

fn term_exponents(term: &RawTerm, vars: (&str, &str)) -> (usize, usize) {
    let mut i = 0;
    let mut j = 0;
    for (name, exp, _) in &term.vars {
        if name == vars.0 {
            i += exp;
        } else {
            debug_assert_eq!(name, vars.1);
            j += exp;
        }
    }
    (i, j)
}

fn build_concrete(defn: &RawDefn, vars: (&str, &str)) -> BiPoly {
    BiPoly::new(
        vars,
        defn.terms
            .iter()
            .map(|t| (term_exponents(t, vars), t.coeff.clone())),
    )
}

fn build_pattern(defn: &RawDefn, vars: (&str, &str), warn: &mut bool) -> PatternPoly {
    let mut members = BTreeSet::new();
    for term in &defn.terms {
        let (i, j) = term_exponents(term, vars);
        match &term.pattern {
            None => {
                if term.coeff.is_zero() {
                    continue;
                }
                // concrete term in a pattern-mode file: absorbed as generic
                *warn = true;
                members.insert((i, j));
            }
            Some(tok) => {
                if term.coeff.is_zero() {
                    *warn = true;
                    continue;
                }
                if !term.coeff.abs().is_one() {
                    *warn = true;
                }
                match tok {
                    PatternTok::Hash => {
                        members.insert((i, j));
                    }
                    PatternTok::Dense { deg, .. } => {
                        for shift in 0..=*deg {
                            members.insert((i + shift, j));
                        }
                    }
                }
            }
        }
    }
    PatternPoly::new(vars, members)
}

fn check_positive_degree_concrete(p: &BiPoly, name: &str, y_var: &str) -> Result<()> {
    if p.is_zero() {
        return Err(Error::DegenerateInput(format!(
            "`{name}` is identically zero"
        )));
    }
    if !matches!(p.degree_in(y_var), crate::poly::Degree::Finite(d) if d >= 1) {
        return Err(Error::DegenerateInput(format!(
            "`{name}` has degree 0 in `{y_var}`"
        )));
    }
    Ok(())
}

fn check_positive_degree_pattern(p: &PatternPoly, name: &str, y_var: &str) -> Result<()> {
    if p.is_zero() {
        return Err(Error::DegenerateInput(format!(
            "`{name}` is identically zero"
        )));
    }
    if !matches!(p.degree_in(y_var), crate::poly::Degree::Finite(d) if d >= 1) {
        return Err(Error::DegenerateInput(format!(
            "`{name}` has degree 0 in `{y_var}`"
        )));
    }
    Ok(())
}
