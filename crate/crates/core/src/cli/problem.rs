//! Problem files.
//!
//! ```text
//! # comments run to the end of the line
//! params: a, b
//! vars: x, y
//! order_vars: lex(x, y)          # lex | degrevlex, optional precedence list
//! order_params: lex(a, b)
//! division: janet                # or pair:<rho>:<order>:<adm|inv>
//! generators:
//!   a*x^2
//!   b*y^2
//! ```
//!
//! Generators may also be separated by commas. Expressions use integer
//! literals, `+ - * / ^` and parentheses; `/` only divides by a nonzero
//! constant. In `pair:y,x:lex(x,y):inv`, `rho` lists the variables in
//! permutation order and the ordering is the box ordering.

use std::fmt;

use thiserror::Error;

use crate::engine::Names;
use crate::involution::{BoxOrientation, DivisionSpec};
use crate::polyalg::{Exponent, MonomialOrdering, OrderKind, ParamPoly, ParamScalar, QPoly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

fn err<T>(line: usize, col: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, col, msg: msg.into() })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemFile {
    pub params: Vec<String>,
    pub vars: Vec<String>,
    pub order_vars: MonomialOrdering,
    pub order_params: MonomialOrdering,
    pub division: DivisionSpec,
    pub generators: Vec<ParamPoly>,
}

impl ProblemFile {
    pub fn names(&self) -> Names {
        Names::new(self.params.clone(), self.vars.clone())
    }

    pub fn order_vars_string(&self) -> String {
        ordering_string(&self.order_vars, &self.vars)
    }

    pub fn order_params_string(&self) -> String {
        ordering_string(&self.order_params, &self.params)
    }

    pub fn division_string(&self) -> String {
        division_string(&self.division, &self.vars)
    }
}

/// `lex(x, y)`: kind and precedence, highest first.
pub fn ordering_string(o: &MonomialOrdering, names: &[String]) -> String {
    let kind = match o.kind() {
        OrderKind::Lex => "lex",
        OrderKind::DegRevLex => "degrevlex",
    };
    let p: Vec<&str> = o.permutation().iter().map(|&i| names[i].as_str()).collect();
    format!("{kind}({})", p.join(", "))
}

pub fn division_string(d: &DivisionSpec, vars: &[String]) -> String {
    if *d == DivisionSpec::janet(vars.len()) {
        return "janet".into();
    }
    let rho: Vec<&str> = d.rho().iter().map(|&i| vars[i].as_str()).collect();
    let o = match d.orientation() {
        BoxOrientation::Admissible => "adm",
        BoxOrientation::Inverse => "inv",
    };
    format!("pair:{}:{}:{o}", rho.join(","), ordering_string(d.box_order(), vars).replace(", ", ","))
}

impl fmt::Display for ProblemFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.names();
        writeln!(f, "params: {}", self.params.join(", "))?;
        writeln!(f, "vars: {}", self.vars.join(", "))?;
        writeln!(f, "order_vars: {}", self.order_vars_string())?;
        writeln!(f, "order_params: {}", self.order_params_string())?;
        writeln!(f, "division: {}", self.division_string())?;
        writeln!(f, "generators:")?;
        for g in &self.generators {
            writeln!(f, "  {}", names.poly(g))?;
        }
        Ok(())
    }
}

fn is_ident(s: &str) -> bool {
    let mut c = s.chars();
    matches!(c.next(), Some(ch) if ch.is_ascii_alphabetic() || ch == '_') && c.all(|ch| ch.is_ascii_alphanumeric() || ch == '_')
}

/// Splits `s` (starting at column `col0`) on commas, trimming each piece.
fn split_list(s: &str, col0: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, ch) in s.char_indices().chain(std::iter::once((s.len(), ','))) {
        if ch == ',' {
            let piece = &s[start..i];
            let lead = piece.len() - piece.trim_start().len();
            if !piece.trim().is_empty() {
                out.push((col0 + start + lead, piece.trim()));
            }
            start = i + 1;
        }
    }
    out
}

fn parse_names(v: &str, line: usize, col: usize) -> Result<Vec<String>, ParseError> {
    split_list(v, col)
        .into_iter()
        .map(|(c, s)| if is_ident(s) { Ok(s.to_string()) } else { err(line, c, format!("invalid name `{s}`")) })
        .collect()
}

fn parse_ordering(v: &str, names: &[String], line: usize, col: usize) -> Result<MonomialOrdering, ParseError> {
    let (kind_s, rest) = match v.find('(') {
        Some(i) => (v[..i].trim(), Some(i)),
        None => (v.trim(), None),
    };
    let kind = match kind_s {
        "lex" => OrderKind::Lex,
        "degrevlex" => OrderKind::DegRevLex,
        _ => return err(line, col, format!("unknown ordering `{kind_s}`")),
    };
    let Some(open) = rest else { return Ok(MonomialOrdering::new(kind, names.len())) };
    let Some(close) = v.rfind(')').filter(|&c| c > open && v[c + 1..].trim().is_empty()) else {
        return err(line, col + open, "unbalanced parenthesis in ordering");
    };
    let perm = parse_index_list(&v[open + 1..close], names, line, col + open + 1)?;
    Ok(MonomialOrdering::with_permutation(kind, perm).expect("checked permutation"))
}

/// A list naming every element of `names` exactly once.
fn parse_index_list(v: &str, names: &[String], line: usize, col: usize) -> Result<Vec<usize>, ParseError> {
    let mut perm = Vec::new();
    for (c, s) in split_list(v, col) {
        let Some(i) = names.iter().position(|n| n == s) else { return err(line, c, format!("unknown name `{s}`")) };
        if perm.contains(&i) {
            return err(line, c, format!("`{s}` listed twice"));
        }
        perm.push(i);
    }
    if perm.len() != names.len() {
        return err(line, col, format!("expected all of {} names", names.len()));
    }
    Ok(perm)
}

fn parse_division(v: &str, vars: &[String], line: usize, col: usize) -> Result<DivisionSpec, ParseError> {
    if v == "janet" {
        return Ok(DivisionSpec::janet(vars.len()));
    }
    let parts: Vec<&str> = v.split(':').collect();
    if parts.len() != 4 || parts[0] != "pair" {
        return err(line, col, "division must be `janet` or `pair:<rho>:<order>:<adm|inv>`");
    }
    let c1 = col + parts[0].len() + 1;
    let c2 = c1 + parts[1].len() + 1;
    let c3 = c2 + parts[2].len() + 1;
    let rho = parse_index_list(parts[1], vars, line, c1)?;
    let ord = parse_ordering(parts[2], vars, line, c2)?;
    let orient = match parts[3].trim() {
        "adm" => BoxOrientation::Admissible,
        "inv" => BoxOrientation::Inverse,
        o => return err(line, c3, format!("orientation must be `adm` or `inv`, got `{o}`")),
    };
    Ok(DivisionSpec::new(rho, ord, orient).expect("checked dimensions"))
}

/// Ring context for expression parsing.
#[derive(Debug, Clone)]
pub struct Ring<'n> {
    pub params: &'n [String],
    pub vars: &'n [String],
    pub xord: &'n MonomialOrdering,
    pub aord: &'n MonomialOrdering,
}

impl Ring<'_> {
    fn constant(&self, r: Rational) -> ParamPoly {
        ParamPoly::term(self.xord, self.aord, Exponent::one(self.vars.len()), QPoly::constant(self.aord, r))
    }

    fn name(&self, s: &str) -> Option<ParamPoly> {
        if let Some(i) = self.vars.iter().position(|n| n == s) {
            return Some(ParamPoly::term(self.xord, self.aord, Exponent::var(self.vars.len(), i), ParamScalar::one(self.aord)));
        }
        let i = self.params.iter().position(|n| n == s)?;
        Some(ParamPoly::term(self.xord, self.aord, Exponent::one(self.vars.len()), QPoly::var(self.aord, i)))
    }

    fn as_constant(f: &ParamPoly) -> Option<Rational> {
        match f.terms() {
            [] => Some(Rational::from_integer(0.into())),
            [(e, c)] if e.is_one() => c.as_constant(),
            _ => None,
        }
    }
}

fn mul(f: &ParamPoly, g: &ParamPoly) -> ParamPoly {
    g.terms().iter().fold(ParamPoly::zero(f.var_order(), f.param_order()), |acc, (e, c)| acc.add(&f.mul_term(e, c)))
}

struct Lexer<'s, 'n> {
    src: &'s str,
    pos: usize,
    line: usize,
    col0: usize,
    ring: &'s Ring<'n>,
}

impl Lexer<'_, '_> {
    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(|c: char| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn fail<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        err(self.line, self.col0 + self.pos, msg)
    }

    fn expr(&mut self) -> Result<ParamPoly, ParseError> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if op == '+' { acc.add(&t) } else { acc.sub(&t) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<ParamPoly, ParseError> {
        let mut acc = self.factor()?;
        while let Some(op @ ('*' | '/')) = self.peek() {
            self.pos += 1;
            let at = self.pos;
            let f = self.factor()?;
            if op == '*' {
                acc = mul(&acc, &f);
            } else {
                match Ring::as_constant(&f) {
                    Some(c) if !num_traits::Zero::is_zero(&c) => acc = acc.scale_rational(&c.recip()),
                    Some(_) => return err(self.line, self.col0 + at, "division by zero"),
                    None => return err(self.line, self.col0 + at, "can only divide by a constant"),
                }
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<ParamPoly, ParseError> {
        if self.peek() == Some('-') {
            self.pos += 1;
            return Ok(self.factor()?.neg());
        }
        if self.peek() == Some('+') {
            self.pos += 1;
            return self.factor();
        }
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let digits = self.digits();
        let Ok(k) = digits.parse::<u32>() else { return self.fail("expected a nonnegative integer exponent") };
        Ok((0..k).fold(self.ring.constant(Rational::from_integer(1.into())), |acc, _| mul(&acc, &base)))
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        while self.src[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn atom(&mut self) -> Result<ParamPoly, ParseError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return self.fail("expected `)`");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n: num_bigint::BigInt = self.digits().parse().expect("digits");
                Ok(self.ring.constant(Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.src[self.pos..].starts_with(|c: char| c.is_ascii_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                let s = &self.src[start..self.pos];
                match self.ring.name(s) {
                    Some(p) => Ok(p),
                    None => err(self.line, self.col0 + start, format!("unknown name `{s}`")),
                }
            }
            Some(c) => self.fail(format!("unexpected `{c}`")),
            None => self.fail("unexpected end of expression"),
        }
    }
}

/// Parses one polynomial. `line` and `col` locate `src` for error messages
/// (both 1-based).
pub fn parse_poly_at(src: &str, ring: &Ring, line: usize, col: usize) -> Result<ParamPoly, ParseError> {
    let mut lx = Lexer { src, pos: 0, line, col0: col, ring };
    let p = lx.expr()?;
    if lx.peek().is_some() {
        return lx.fail("unexpected trailing input");
    }
    Ok(p)
}

pub fn parse_poly(src: &str, ring: &Ring) -> Result<ParamPoly, ParseError> {
    parse_poly_at(src, ring, 1, 1)
}

/// Parses a problem file.
pub fn parse_problem(text: &str) -> Result<ProblemFile, ParseError> {
    let mut params: Option<Vec<String>> = None;
    let mut vars: Option<Vec<String>> = None;
    let mut raw: Vec<(&str, usize, usize, &str)> = Vec::new();
    let mut gens: Vec<(usize, usize, &str)> = Vec::new();
    let mut in_gens = false;
    for (k, full) in text.lines().enumerate() {
        let line = k + 1;
        let body = full.split('#').next().unwrap();
        if body.trim().is_empty() {
            continue;
        }
        if let Some(i) = body.find(':').filter(|&i| is_ident(body[..i].trim())) {
            let key = body[..i].trim();
            let vstart = i + 1 + (body[i + 1..].len() - body[i + 1..].trim_start().len());
            let value = body[vstart..].trim_end();
            let col = vstart + 1;
            in_gens = false;
            match key {
                "params" | "vars" => {
                    let slot = if key == "params" { &mut params } else { &mut vars };
                    if slot.is_some() {
                        return err(line, 1, format!("`{key}` given twice"));
                    }
                    *slot = Some(parse_names(value, line, col)?);
                }
                "order_vars" | "order_params" | "division" => {
                    if raw.iter().any(|r| r.0 == key) {
                        return err(line, 1, format!("`{key}` given twice"));
                    }
                    raw.push((key, line, col, value));
                }
                "generators" => {
                    in_gens = true;
                    gens.extend(split_list(value, col).into_iter().map(|(c, s)| (line, c, s)));
                }
                _ => return err(line, 1, format!("unknown key `{key}`")),
            }
        } else if in_gens {
            gens.extend(split_list(body, 1).into_iter().map(|(c, s)| (line, c, s)));
        } else {
            return err(line, 1, "expected `key: value`");
        }
    }
    let Some(vars) = vars else { return err(1, 1, "missing `vars`") };
    let params = params.unwrap_or_default();
    for (i, n) in params.iter().chain(&vars).enumerate() {
        if params.iter().chain(&vars).take(i).any(|m| m == n) {
            return err(1, 1, format!("name `{n}` declared twice"));
        }
    }
    let field = |key: &str| raw.iter().find(|r| r.0 == key).copied();
    let order_vars = match field("order_vars") {
        Some((_, l, c, v)) => parse_ordering(v, &vars, l, c)?,
        None => MonomialOrdering::lex(vars.len()),
    };
    let order_params = match field("order_params") {
        Some((_, l, c, v)) => parse_ordering(v, &params, l, c)?,
        None => MonomialOrdering::lex(params.len()),
    };
    let division = match field("division") {
        Some((_, l, c, v)) => parse_division(v, &vars, l, c)?,
        None => DivisionSpec::janet(vars.len()),
    };
    let ring = Ring { params: &params, vars: &vars, xord: &order_vars, aord: &order_params };
    let generators = gens.iter().map(|&(l, c, s)| parse_poly_at(s, &ring, l, c)).collect::<Result<Vec<_>, _>>()?;
    Ok(ProblemFile { params, vars, order_vars, order_params, division, generators })
}
