//! Text forms.
//!
//! Monomials are `x1^2*x2*x4` (`1` for the unit), ideals are comma-separated
//! monomials with an optional `n=<count>;` header, e.g.
//! `n=4; x1^2, x1*x2^2, x1*x2*x3^2`. Without the header `n` is the largest
//! variable index used.
//!
//! Decompositions are line oriented:
//!
//! ```text
//! target: quotient
//! ideal: n=4; x1^2, x1*x2^2
//! 1 | x2 x3 x4
//! x1 | x3 x4
//! x1*x2 | x3 x4
//! ```
//!
//! with one `v | Z` piece per line (`-` for an empty `Z`) and `#` comments.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, VarSet, MAX_VARS};
use crate::stanley::{StanleyDecomposition, StanleyPiece, Target, TargetKind};

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
    base: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str, base: usize) -> Self {
        Cursor { src, pos: 0, base }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.base + self.pos, msg)
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{c}'")))
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let digits = self.rest().chars().take_while(char::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.err("expected a number"));
        }
        let value = self.rest()[..digits]
            .parse::<u64>()
            .map_err(|_| self.err("number too large"))?;
        self.pos += digits;
        Ok(value)
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.src.len()
    }
}

/// Raw factors `(variable index, exponent)` of one monomial.
fn parse_factors(cur: &mut Cursor<'_>) -> Result<Vec<(usize, u32)>> {
    cur.skip_ws();
    if cur.peek() == Some('1') {
        cur.pos += 1;
        return Ok(Vec::new());
    }
    let mut factors = Vec::new();
    loop {
        cur.skip_ws();
        let start = cur.pos;
        if !cur.eat('x') {
            return Err(cur.err("expected a variable like x1"));
        }
        let index = cur.number()?;
        if index == 0 || index as usize > MAX_VARS {
            cur.pos = start;
            return Err(cur.err(format!("variable index must be in 1..={MAX_VARS}")));
        }
        let exp = if cur.eat('^') {
            u32::try_from(cur.number()?).map_err(|_| cur.err("exponent too large"))?
        } else {
            1
        };
        factors.push((index as usize - 1, exp));
        if !cur.eat('*') {
            break;
        }
    }
    Ok(factors)
}

fn build(factors: &[(usize, u32)], n: usize, cur: &Cursor<'_>) -> Result<Monomial> {
    let mut exps = vec![0u32; n];
    for &(j, e) in factors {
        if j >= n {
            return Err(cur.err(format!("x{} exceeds n={n}", j + 1)));
        }
        exps[j] = exps[j]
            .checked_add(e)
            .ok_or_else(|| cur.err("exponent overflow"))?;
    }
    Ok(Monomial::new(exps))
}

/// Parses one monomial in `n` variables.
pub fn parse_monomial(text: &str, n: usize) -> Result<Monomial> {
    let mut cur = Cursor::new(text, 0);
    let factors = parse_factors(&mut cur)?;
    if !cur.at_end() {
        return Err(cur.err("trailing input"));
    }
    build(&factors, n, &cur)
}

fn parse_ideal_at(text: &str, base: usize) -> Result<MonomialIdeal> {
    let mut cur = Cursor::new(text, base);
    if cur.at_end() {
        return Err(Error::EmptyIdeal);
    }
    let mut declared = None;
    if cur.rest().starts_with('n') {
        cur.pos += 1;
        cur.expect('=')?;
        let n = cur.number()? as usize;
        if n == 0 || n > MAX_VARS {
            return Err(cur.err(format!("n must be in 1..={MAX_VARS}")));
        }
        declared = Some(n);
        cur.expect(';')?;
    }
    if cur.at_end() {
        return Err(Error::EmptyIdeal);
    }
    let mut raw = Vec::new();
    loop {
        let start = cur.pos;
        let factors = parse_factors(&mut cur)?;
        if factors.is_empty() {
            cur.pos = start;
            cur.skip_ws();
            return Err(Error::UnitGenerator);
        }
        raw.push(factors);
        if !cur.eat(',') {
            break;
        }
    }
    if !cur.at_end() {
        return Err(cur.err("expected ',' or end of input"));
    }
    let used = raw.iter().flatten().map(|&(j, _)| j + 1).max().unwrap_or(1);
    let n = declared.unwrap_or(used);
    let gens = raw
        .iter()
        .map(|f| build(f, n, &cur))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new(n, gens)
}

/// Parses an ideal such as `n=5; x1*x2, x2*x3*x4, x3*x4*x5`.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    parse_ideal_at(text, 0)
}

fn parse_varset(text: &str, n: usize, base: usize) -> Result<VarSet> {
    let t = text.trim();
    if t == "-" || t.is_empty() {
        return Ok(VarSet::EMPTY);
    }
    let mut set = VarSet::EMPTY;
    let mut offset = base + (text.len() - text.trim_start().len());
    for word in t.split_whitespace() {
        let idx = word
            .strip_prefix('x')
            .and_then(|d| d.parse::<usize>().ok())
            .filter(|&i| (1..=n).contains(&i))
            .ok_or_else(|| Error::parse(offset, format!("bad variable '{word}'")))?;
        set.insert(idx - 1);
        offset += word.len() + 1;
    }
    Ok(set)
}

/// Parses the line-oriented decomposition format.
pub fn parse_decomposition(text: &str) -> Result<StanleyDecomposition> {
    let mut kind = None;
    let mut ideal = None;
    let mut pieces = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let base = offset;
        offset += line.len();
        let body = line.split('#').next().unwrap_or("").trim_end();
        if body.trim().is_empty() {
            continue;
        }
        if let Some(k) = body.trim_start().strip_prefix("target:") {
            kind = Some(match k.trim() {
                "ideal" => TargetKind::Ideal,
                "quotient" => TargetKind::Quotient,
                other => return Err(Error::parse(base, format!("unknown target '{other}'"))),
            });
        } else if let Some(i) = body.trim_start().strip_prefix("ideal:") {
            let at = base + body.len() - i.len();
            ideal = Some(parse_ideal_at(i, at)?);
        } else {
            let ideal = ideal
                .as_ref()
                .ok_or_else(|| Error::parse(base, "piece before the 'ideal:' line"))?;
            let (v, z) = body
                .split_once('|')
                .ok_or_else(|| Error::parse(base, "expected 'v | Z'"))?;
            let v = parse_monomial(v, ideal.n()).map_err(|e| match e {
                Error::Parse { pos, msg } => Error::parse(base + pos, msg),
                other => other,
            })?;
            let z = parse_varset(z, ideal.n(), base + body.find('|').unwrap_or(0) + 1)?;
            pieces.push(StanleyPiece::new(v, z));
        }
    }
    let kind = kind.ok_or_else(|| Error::parse(text.len(), "missing 'target:' line"))?;
    let ideal = ideal.ok_or_else(|| Error::parse(text.len(), "missing 'ideal:' line"))?;
    StanleyDecomposition::new(Target::new(kind, ideal), pieces)
}

pub fn render_decomposition(d: &StanleyDecomposition) -> String {
    format!(
        "target: {}\nideal: {}\n{}",
        d.target().kind(),
        d.target().ideal(),
        d
    )
}
