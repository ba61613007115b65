//! The line-oriented input format.
//!
//! ```text
//! # comment
//! ring hochster_roberts
//! vars a:2 b:1 c:3 d:2
//! char 32003
//! ideal a*d-b*c, c^2-a^3
//! params a, b
//! power 2
//! mode both shimoda
//! ```
//!
//! Polynomials use `+ - * ^`, parentheses and integer coefficients. They are
//! kept with integer coefficients so that the characteristic can still be
//! changed after parsing.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::corpus::Instance;
use crate::error::{Error, Result};
use crate::ideal::PresentedRing;
use crate::kernel::{Field, Poly, PolyRing, Rationals, Variable, DEFAULT_PRIME, MAX_VARS};

/// Exponent vector to coefficient.
pub type IntPoly = BTreeMap<Vec<u32>, BigInt>;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    #[default]
    Criteria,
    Oracle,
    Both,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Criteria => "criteria",
            Mode::Oracle => "oracle",
            Mode::Both => "both",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "criteria" => Some(Mode::Criteria),
            "oracle" => Some(Mode::Oracle),
            "both" => Some(Mode::Both),
            _ => None,
        }
    }

    pub fn runs_criteria(self) -> bool {
        self != Mode::Oracle
    }

    pub fn runs_oracle(self) -> bool {
        self != Mode::Criteria
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputDocument {
    pub name: String,
    pub vars: Vec<Variable>,
    pub characteristic: u64,
    pub ideal: Vec<IntPoly>,
    pub params: Vec<IntPoly>,
    /// Power of `q`; the dimension when absent.
    pub power: Option<u32>,
    pub mode: Mode,
    pub shimoda: bool,
    pub buchsbaum: bool,
}

fn perr(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, col, msg: msg.into() }
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub fn parse_document(text: &str) -> Result<InputDocument> {
    let mut name = None;
    let mut vars: Option<Vec<Variable>> = None;
    let mut characteristic = None;
    let mut ideal = Vec::new();
    let mut params = None;
    let mut power = None;
    let mut mode = None;
    let (mut shimoda, mut buchsbaum) = (false, false);

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap();
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let key_col = content.len() - trimmed.len() + 1;
        let key_len = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
        let key = &trimmed[..key_len];
        let rest_col = key_col + key_len;
        let rest = &trimmed[key_len..];
        let words = || words_with_cols(rest, rest_col);
        let once = |seen: bool| if seen { Err(perr(line_no, key_col, format!("duplicate `{key}` line"))) } else { Ok(()) };
        match key {
            "ring" => {
                once(name.is_some())?;
                let w = words();
                match w.as_slice() {
                    [(n, _)] if is_ident(n) => name = Some(n.to_string()),
                    [(_, c)] => return Err(perr(line_no, *c, "ring name must be an identifier")),
                    _ => return Err(perr(line_no, rest_col, "expected `ring <name>`")),
                }
            }
            "vars" => {
                once(vars.is_some())?;
                let mut vs: Vec<Variable> = Vec::new();
                for (w, c) in words() {
                    let (n, weight) = match w.split_once(':') {
                        Some((n, wt)) => {
                            let weight: u32 = wt.parse().map_err(|_| perr(line_no, c + n.len() + 1, format!("bad weight `{wt}`")))?;
                            (n, weight)
                        }
                        None => (w, 1),
                    };
                    if !is_ident(n) {
                        return Err(perr(line_no, c, format!("bad variable name `{n}`")));
                    }
                    if weight == 0 {
                        return Err(perr(line_no, c, format!("variable `{n}` needs a positive weight")));
                    }
                    if vs.iter().any(|v| v.name == n) {
                        return Err(perr(line_no, c, format!("variable `{n}` declared twice")));
                    }
                    vs.push(Variable { name: n.to_string(), weight });
                }
                if vs.is_empty() {
                    return Err(perr(line_no, rest_col, "no variables"));
                }
                if vs.len() > MAX_VARS {
                    return Err(perr(line_no, key_col, format!("at most {MAX_VARS} variables are supported")));
                }
                vars = Some(vs);
            }
            "char" => {
                once(characteristic.is_some())?;
                characteristic = Some(single_number(&words(), line_no, rest_col)?);
            }
            "ideal" => {
                let vs = vars.as_ref().ok_or_else(|| perr(line_no, key_col, "`vars` must come before `ideal`"))?;
                ideal.extend(parse_poly_list(rest, rest_col, line_no, vs)?);
            }
            "params" => {
                once(params.is_some())?;
                let vs = vars.as_ref().ok_or_else(|| perr(line_no, key_col, "`vars` must come before `params`"))?;
                params = Some(parse_poly_list(rest, rest_col, line_no, vs)?);
            }
            "power" => {
                once(power.is_some())?;
                let n = single_number(&words(), line_no, rest_col)?;
                if n == 0 || n > u32::MAX as u64 {
                    return Err(perr(line_no, rest_col + 1, "power must be a positive integer"));
                }
                power = Some(n as u32);
            }
            "mode" => {
                once(mode.is_some())?;
                let mut m = Mode::Criteria;
                for (w, c) in words() {
                    match w {
                        "shimoda" => shimoda = true,
                        "buchsbaum" => buchsbaum = true,
                        other => m = Mode::parse(other).ok_or_else(|| perr(line_no, c, format!("unknown mode `{other}`")))?,
                    }
                }
                mode = Some(m);
            }
            other => return Err(perr(line_no, key_col, format!("unknown keyword `{other}`"))),
        }
    }
    let end = text.lines().count().max(1);
    Ok(InputDocument {
        name: name.ok_or_else(|| perr(end, 1, "missing `ring` line"))?,
        vars: vars.ok_or_else(|| perr(end, 1, "missing `vars` line"))?,
        characteristic: characteristic.unwrap_or(DEFAULT_PRIME as u64),
        ideal,
        params: params.ok_or_else(|| perr(end, 1, "missing `params` line"))?,
        power,
        mode: mode.unwrap_or_default(),
        shimoda,
        buchsbaum,
    })
}

fn words_with_cols(rest: &str, col0: usize) -> Vec<(&str, usize)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in rest.char_indices().chain(std::iter::once((rest.len(), ' '))) {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((&rest[s..i], col0 + s));
                start = None;
            }
            _ => {}
        }
    }
    out
}

fn single_number(words: &[(&str, usize)], line: usize, col: usize) -> Result<u64> {
    match words {
        [(w, c)] => w.parse().map_err(|_| perr(line, *c, format!("expected a non-negative integer, found `{w}`"))),
        _ => Err(perr(line, col, "expected exactly one integer")),
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(s: &str, col0: usize, line: usize) -> Result<Vec<(Tok, usize)>> {
    let bytes: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let col = col0 + i;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = bytes[start..i].iter().collect();
            out.push((Tok::Num(digits.parse().unwrap()), col));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(bytes[start..i].iter().collect()), col));
        } else if "+-*^(),".contains(c) {
            out.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(perr(line, col, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct ExprParser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    end_col: usize,
    vars: &'a [Variable],
}

fn int_add(a: &IntPoly, b: &IntPoly, sign: i32) -> IntPoly {
    let mut out = a.clone();
    for (e, c) in b {
        let entry = out.entry(e.clone()).or_insert_with(BigInt::zero);
        if sign > 0 {
            *entry += c;
        } else {
            *entry -= c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn int_mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut out = IntPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert_with(BigInt::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn int_constant(n: usize, c: BigInt) -> IntPoly {
    let mut p = IntPoly::new();
    if !c.is_zero() {
        p.insert(vec![0; n], c);
    }
    p
}

impl ExprParser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |t| t.1)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        perr(self.line, self.col(), msg)
    }

    fn expr(&mut self) -> Result<IntPoly> {
        let mut sign = 1;
        if let Some(Tok::Sym(c @ ('+' | '-'))) = self.peek() {
            sign = if *c == '-' { -1 } else { 1 };
            self.pos += 1;
        }
        let mut acc = int_add(&IntPoly::new(), &self.term()?, sign);
        while let Some(Tok::Sym(c @ ('+' | '-'))) = self.peek() {
            let s = if *c == '-' { -1 } else { 1 };
            self.pos += 1;
            acc = int_add(&acc, &self.term()?, s);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<IntPoly> {
        let mut acc = self.factor()?;
        while let Some(Tok::Sym('*')) = self.peek() {
            self.pos += 1;
            acc = int_mul(&acc, &self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<IntPoly> {
        let base = self.atom()?;
        if let Some(Tok::Sym('^')) = self.peek() {
            self.pos += 1;
            let col = self.col();
            let Some(Tok::Num(k)) = self.peek().cloned() else { return Err(self.err("expected an exponent")) };
            self.pos += 1;
            let k: u32 = k.try_into().ok().filter(|&k: &u32| k <= u16::MAX as u32).ok_or_else(|| perr(self.line, col, "exponent too large"))?;
            let mut out = int_constant(self.vars.len(), BigInt::one());
            for _ in 0..k {
                out = int_mul(&out, &base);
            }
            if out.keys().any(|e| e.iter().any(|&x| x > u16::MAX as u32)) {
                return Err(perr(self.line, col, "exponent too large"));
            }
            return Ok(out);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<IntPoly> {
        let n = self.vars.len();
        match self.peek().cloned() {
            Some(Tok::Num(v)) => {
                self.pos += 1;
                Ok(int_constant(n, v))
            }
            Some(Tok::Ident(name)) => {
                let i = self.vars.iter().position(|v| v.name == name).ok_or_else(|| self.err(format!("unknown variable `{name}`")))?;
                self.pos += 1;
                let mut e = vec![0; n];
                e[i] = 1;
                Ok(IntPoly::from([(e, BigInt::one())]))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::Sym(')')) {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(t) => Err(self.err(format!("unexpected {}", describe(&t)))),
            None => Err(self.err("unexpected end of line")),
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(n) => format!("number `{n}`"),
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Sym(c) => format!("`{c}`"),
    }
}

/// A comma-separated list of polynomials. An empty list is allowed.
pub fn parse_poly_list(s: &str, col0: usize, line: usize, vars: &[Variable]) -> Result<Vec<IntPoly>> {
    let toks = tokenize(s, col0, line)?;
    if toks.is_empty() {
        return Ok(Vec::new());
    }
    let end_col = col0 + s.trim_end().chars().count();
    let mut p = ExprParser { toks, pos: 0, line, end_col, vars };
    let mut out = vec![p.expr()?];
    while p.peek() == Some(&Tok::Sym(',')) {
        p.pos += 1;
        out.push(p.expr()?);
    }
    if p.pos < p.toks.len() {
        return Err(p.err(format!("unexpected {}", describe(&p.toks[p.pos].0))));
    }
    Ok(out)
}

/// Parses one polynomial in the given variables.
pub fn parse_poly(s: &str, vars: &[Variable]) -> Result<IntPoly> {
    let list = parse_poly_list(s, 1, 1, vars)?;
    match list.len() {
        1 => Ok(list.into_iter().next().unwrap()),
        _ => Err(perr(1, 1, "expected a single polynomial")),
    }
}

impl InputDocument {
    /// Canonical polynomial text: terms in degree reverse lexicographic order.
    pub fn format_poly(&self, p: &IntPoly) -> String {
        let r = PolyRing::new(Rationals, self.vars.clone()).expect("validated variables");
        r.format(&to_poly(&r, p))
    }

    /// Builds the ring and parameters over the given field.
    pub fn instance<F: Field>(&self, field: F) -> Result<Instance<F>> {
        let r = PolyRing::new(field, self.vars.clone())?;
        let rels = self.ideal.iter().map(|p| to_poly(&r, p)).collect();
        let ring: Arc<PresentedRing<F>> = PresentedRing::new(self.name.clone(), r.clone(), rels)?;
        let params: Vec<Poly<F>> = self.params.iter().map(|p| to_poly(&r, p)).collect();
        if let Some(p) = params.iter().find(|p| !r.is_homogeneous(p)) {
            return Err(Error::InvalidInput(format!("parameter {} is not homogeneous", r.format(p))));
        }
        Ok(Instance::new(ring, params))
    }

    /// The document describing an instance, with integer coefficients read
    /// off the printed field elements.
    pub fn from_instance<F: Field>(inst: &Instance<F>) -> Result<Self> {
        let r = inst.ring.ambient();
        let conv = |f: &Poly<F>| -> Result<IntPoly> {
            let mut out = IntPoly::new();
            for (m, c) in f.terms() {
                let s = r.field().format(c);
                let v: BigInt = s.parse().map_err(|_| Error::InvalidInput(format!("coefficient {s} is not an integer")))?;
                out.insert((0..r.nvars()).map(|i| m.exp(i)).collect(), v);
            }
            Ok(out)
        };
        Ok(InputDocument {
            name: inst.name().to_string(),
            vars: r.vars().to_vec(),
            characteristic: r.field().characteristic(),
            ideal: inst.ring.relations().iter().map(conv).collect::<Result<_>>()?,
            params: inst.params.iter().map(conv).collect::<Result<_>>()?,
            power: None,
            mode: Mode::Criteria,
            shimoda: false,
            buchsbaum: false,
        })
    }
}

pub fn to_poly<F: Field>(r: &PolyRing<F>, p: &IntPoly) -> Poly<F> {
    let f = r.field();
    r.from_terms(p.iter().map(|(e, c)| (r.monomial(e), f.from_bigint(c))).filter(|(_, c)| !f.is_zero(c)).collect())
}

impl fmt::Display for InputDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring {}", self.name)?;
        let vars: Vec<String> = self.vars.iter().map(|v| format!("{}:{}", v.name, v.weight)).collect();
        writeln!(f, "vars {}", vars.join(" "))?;
        writeln!(f, "char {}", self.characteristic)?;
        for g in &self.ideal {
            writeln!(f, "ideal {}", self.format_poly(g))?;
        }
        let params: Vec<String> = self.params.iter().map(|p| self.format_poly(p)).collect();
        writeln!(f, "params {}", params.join(", "))?;
        if let Some(n) = self.power {
            writeln!(f, "power {n}")?;
        }
        write!(f, "mode {}", self.mode.name())?;
        if self.shimoda {
            write!(f, " shimoda")?;
        }
        if self.buchsbaum {
            write!(f, " buchsbaum")?;
        }
        writeln!(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::kernel::PrimeField;

    const SAMPLE: &str = "# two planes meeting in a point\nring tp\nvars x y u:1 v\nideal x*u, x*v\nideal y*u, y*v  # second line\nparams x+u, y+v\nmode both buchsbaum\n";

    #[test]
    fn parses_sample() {
        let doc = parse_document(SAMPLE).unwrap();
        assert_eq!(doc.name, "tp");
        assert_eq!(doc.vars.len(), 4);
        assert_eq!(doc.ideal.len(), 4);
        assert_eq!(doc.characteristic, 32003);
        assert_eq!((doc.mode, doc.buchsbaum, doc.shimoda), (Mode::Both, true, false));
        let inst = doc.instance(PrimeField::default()).unwrap();
        assert_eq!(inst.dim(), 2);
    }

    #[test]
    fn round_trip() {
        let doc = parse_document(SAMPLE).unwrap();
        let text = doc.to_string();
        assert_eq!(parse_document(&text).unwrap(), doc);
        assert_eq!(parse_document(&text).unwrap().to_string(), text);
    }

    #[test]
    fn expressions() {
        let vars = vec![Variable { name: "x".into(), weight: 1 }, Variable { name: "y".into(), weight: 1 }];
        let p = parse_poly("(x+y)^2 - 2*x*y - y^2", &vars).unwrap();
        assert_eq!(p, IntPoly::from([(vec![2, 0], BigInt::from(1))]));
        assert!(parse_poly("x - x", &vars).unwrap().is_empty());
        assert_eq!(parse_poly("-3*x^0", &vars).unwrap(), IntPoly::from([(vec![0, 0], BigInt::from(-3))]));
    }

    #[test]
    fn error_positions() {
        let e = parse_document("ring r\nvars x y\nparams x, y*z\n").unwrap_err();
        assert_eq!(e, Error::Parse { line: 3, col: 13, msg: "unknown variable `z`".into() });
        let e = parse_document("ring r\nvars x y\nparams x +, y\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, col: 11, .. }), "{e:?}");
        let e = parse_document("ring r\nvars x:0\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, col: 6, .. }), "{e:?}");
        let e = parse_document("ring r\n  frobnicate\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, col: 3, .. }), "{e:?}");
        assert!(matches!(parse_document("ring r\nvars x\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn non_homogeneous_is_rejected() {
        let doc = parse_document("ring r\nvars x y\nideal x^2 - y\nparams x\n").unwrap();
        assert!(matches!(doc.instance(PrimeField::default()), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn corpus_documents_round_trip() {
        for name in corpus::EXAMPLE_NAMES {
            let inst = corpus::by_name(name, PrimeField::default()).unwrap();
            let doc = InputDocument::from_instance(&inst).unwrap();
            let text = doc.to_string();
            let back = parse_document(&text).unwrap();
            assert_eq!(back, doc, "{name}");
            let again = back.instance(PrimeField::default()).unwrap();
            assert_eq!(again.ring.relations(), inst.ring.relations());
            assert_eq!(again.params, inst.params);
        }
    }
}
