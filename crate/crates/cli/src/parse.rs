//! Class expressions.
//!
//! ```text
//! expr     := sign? term (('+' | '-') term)*
//! term     := rational '*' atom | atom | rational
//! atom     := gen ('x' gen)?
//! gen      := ('A' | 'B' | 's' | 'm') '[' nat ',' nat ']'
//! rational := nat ('/' nat)?
//! ```
//!
//! Whitespace is ignored. Positions in errors are 0-based character offsets.

use std::fmt;

use loopalg_core::spaces::SpaceParams;
use loopalg_core::string_topology::{CohGen, LinComb, LoopGen};
use loopalg_core::Scalar;
use num_bigint::BigInt;
use num_traits::Zero;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Syntax,
    Semantic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ErrorKind,
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn syntax(position: usize, message: impl Into<String>) -> Self {
        ParseError { kind: ErrorKind::Syntax, position, message: message.into() }
    }

    fn semantic(position: usize, message: impl Into<String>) -> Self {
        ParseError { kind: ErrorKind::Semantic, position, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ErrorKind::Syntax => "syntax error",
            ErrorKind::Semantic => "invalid class",
        };
        write!(f, "{kind} at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    A,
    B,
    Sigma,
    Mu,
}

impl GenKind {
    fn is_loop(self) -> bool {
        matches!(self, GenKind::A | GenKind::B)
    }
}

/// `A[k,i]` as written; `k` and `i` are unchecked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenExpr {
    pub kind: GenKind,
    pub level: BigInt,
    pub index: BigInt,
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermExpr {
    /// Signed coefficient; 1 when omitted.
    pub coeff: Scalar,
    /// One generator, or two for a cross term. Empty for a bare rational.
    pub atom: Vec<GenExpr>,
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassExpr {
    pub terms: Vec<TermExpr>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Slash,
    Open,
    Close,
    Comma,
    Cross,
    Gen(GenKind),
    Nat(BigInt),
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Slash => "'/'".into(),
        Tok::Open => "'['".into(),
        Tok::Close => "']'".into(),
        Tok::Comma => "','".into(),
        Tok::Cross => "'x'".into(),
        Tok::Gen(_) => "a generator".into(),
        Tok::Nat(n) => format!("number {n}"),
        Tok::End => "end of input".into(),
    }
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '[' => Tok::Open,
            ']' => Tok::Close,
            ',' => Tok::Comma,
            'x' => Tok::Cross,
            'A' => Tok::Gen(GenKind::A),
            'B' => Tok::Gen(GenKind::B),
            's' => Tok::Gen(GenKind::Sigma),
            'm' => Tok::Gen(GenKind::Mu),
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((Tok::Nat(digits.parse().expect("ascii digits")), start));
                continue;
            }
            other => return Err(ParseError::syntax(i, format!("unexpected character {other:?}"))),
        };
        out.push((tok, i));
        i += 1;
    }
    out.push((Tok::End, chars.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(ParseError::syntax(self.pos(), format!("expected {}, found {}", describe(&want), describe(self.peek()))))
        }
    }

    fn nat(&mut self) -> Result<BigInt, ParseError> {
        match self.peek().clone() {
            Tok::Nat(n) => {
                self.bump();
                Ok(n)
            }
            t => Err(ParseError::syntax(self.pos(), format!("expected a number, found {}", describe(&t)))),
        }
    }

    fn expr(&mut self) -> Result<ClassExpr, ParseError> {
        let mut terms = Vec::new();
        let mut negative = false;
        match self.peek() {
            Tok::Minus => {
                self.bump();
                negative = true;
            }
            Tok::Plus => {
                self.bump();
            }
            _ => {}
        }
        loop {
            terms.push(self.term(negative)?);
            negative = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                Tok::End => break,
                t => {
                    return Err(ParseError::syntax(
                        self.pos(),
                        format!("expected '+', '-' or end of input, found {}", describe(t)),
                    ))
                }
            };
            self.bump();
        }
        Ok(ClassExpr { terms })
    }

    fn term(&mut self, negative: bool) -> Result<TermExpr, ParseError> {
        let position = self.pos();
        let mut coeff = Scalar::from_integer(1.into());
        let mut atom = Vec::new();
        match self.peek() {
            Tok::Nat(_) => {
                let num = self.nat()?;
                let den = if *self.peek() == Tok::Slash {
                    self.bump();
                    let at = self.pos();
                    let den = self.nat()?;
                    if den.is_zero() {
                        return Err(ParseError::semantic(at, "division by zero"));
                    }
                    den
                } else {
                    BigInt::from(1)
                };
                coeff = Scalar::new(num, den);
                if *self.peek() == Tok::Star {
                    self.bump();
                    atom = self.atom()?;
                }
            }
            Tok::Gen(_) => atom = self.atom()?,
            t => {
                return Err(ParseError::syntax(position, format!("expected a term, found {}", describe(t))));
            }
        }
        if negative {
            coeff = -coeff;
        }
        Ok(TermExpr { coeff, atom, position })
    }

    fn atom(&mut self) -> Result<Vec<GenExpr>, ParseError> {
        let mut gens = vec![self.gen()?];
        if *self.peek() == Tok::Cross {
            self.bump();
            gens.push(self.gen()?);
        }
        Ok(gens)
    }

    fn gen(&mut self) -> Result<GenExpr, ParseError> {
        let position = self.pos();
        let kind = match *self.peek() {
            Tok::Gen(k) => k,
            ref t => {
                return Err(ParseError::syntax(position, format!("expected A, B, s or m, found {}", describe(t))));
            }
        };
        self.bump();
        self.expect(Tok::Open)?;
        let level = self.nat()?;
        self.expect(Tok::Comma)?;
        let index = self.nat()?;
        self.expect(Tok::Close)?;
        Ok(GenExpr { kind, level, index, position })
    }
}

pub fn parse(src: &str) -> Result<ClassExpr, ParseError> {
    let mut p = Parser { toks: tokenize(src)?, at: 0 };
    p.expr()
}

/// Basis keys a class expression can resolve to.
pub trait Key: Ord + Clone {
    const WHAT: &'static str;
    fn from_atom(p: &SpaceParams, atom: &[GenExpr]) -> Result<Self, ParseError>;
}

fn checked(p: &SpaceParams, g: &GenExpr) -> Result<(u32, u32), ParseError> {
    let semantic = |e: loopalg_core::Error| ParseError::semantic(g.position, e.to_string());
    let k = u32::try_from(&g.level)
        .map_err(|_| ParseError::semantic(g.position, format!("k = {} is too large", g.level)))?;
    p.check_level(k).map_err(semantic)?;
    let i = u32::try_from(&g.index).unwrap_or(u32::MAX);
    p.check_index(i).map_err(|_| {
        ParseError::semantic(g.position, format!("i = {} out of range (index out of range for n={})", g.index, p.n()))
    })?;
    Ok((k, i))
}

fn loop_gen(p: &SpaceParams, g: &GenExpr) -> Result<LoopGen, ParseError> {
    let (k, i) = checked(p, g)?;
    match g.kind {
        GenKind::A => Ok(LoopGen::a(k, i)),
        GenKind::B => Ok(LoopGen::b(k, i)),
        _ => Err(ParseError::semantic(g.position, "expected a homology generator A[k,i] or B[k,i]")),
    }
}

fn coh_gen(p: &SpaceParams, g: &GenExpr) -> Result<CohGen, ParseError> {
    let (k, i) = checked(p, g)?;
    match g.kind {
        GenKind::Sigma => Ok(CohGen::sigma(k, i)),
        GenKind::Mu => Ok(CohGen::mu(k, i)),
        _ => Err(ParseError::semantic(g.position, "expected a cohomology generator s[k,i] or m[k,i]")),
    }
}

fn arity(atom: &[GenExpr], want: usize, what: &str) -> Result<(), ParseError> {
    if atom.len() != want {
        return Err(ParseError::semantic(atom[0].position, format!("expected {what}")));
    }
    Ok(())
}

impl Key for LoopGen {
    const WHAT: &'static str = "a homology class";
    fn from_atom(p: &SpaceParams, atom: &[GenExpr]) -> Result<Self, ParseError> {
        arity(atom, 1, "a single generator, not a cross term")?;
        loop_gen(p, &atom[0])
    }
}

impl Key for CohGen {
    const WHAT: &'static str = "a cohomology class";
    fn from_atom(p: &SpaceParams, atom: &[GenExpr]) -> Result<Self, ParseError> {
        arity(atom, 1, "a single generator, not a cross term")?;
        coh_gen(p, &atom[0])
    }
}

impl Key for (LoopGen, LoopGen) {
    const WHAT: &'static str = "a sum of cross terms of homology generators";
    fn from_atom(p: &SpaceParams, atom: &[GenExpr]) -> Result<Self, ParseError> {
        arity(atom, 2, "a cross term g x h")?;
        Ok((loop_gen(p, &atom[0])?, loop_gen(p, &atom[1])?))
    }
}

impl Key for (CohGen, CohGen) {
    const WHAT: &'static str = "a sum of cross terms of cohomology generators";
    fn from_atom(p: &SpaceParams, atom: &[GenExpr]) -> Result<Self, ParseError> {
        arity(atom, 2, "a cross term a x b")?;
        Ok((coh_gen(p, &atom[0])?, coh_gen(p, &atom[1])?))
    }
}

impl ClassExpr {
    /// The class as a combination of `K`s. A bare rational must be 0.
    pub fn resolve<K: Key>(&self, p: &SpaceParams) -> Result<LinComb<K>, ParseError> {
        let mut out = LinComb::zero();
        for t in &self.terms {
            if t.atom.is_empty() {
                if !t.coeff.is_zero() {
                    return Err(ParseError::semantic(
                        t.position,
                        format!("a nonzero constant is not {}", K::WHAT),
                    ));
                }
                continue;
            }
            out.add_term(K::from_atom(p, &t.atom)?, t.coeff.clone());
        }
        Ok(out)
    }

    /// True if every generator is `A`/`B`.
    pub fn is_homology(&self) -> bool {
        self.terms.iter().flat_map(|t| &t.atom).all(|g| g.kind.is_loop())
    }
}

/// Parses and resolves in one step.
pub fn parse_class<K: Key>(p: &SpaceParams, src: &str) -> Result<LinComb<K>, ParseError> {
    parse(src)?.resolve(p)
}

/// Generator of `H_*(SM)` or `H_*(SM ×_M SM)` for the gysin command:
/// `a[i]` or `ab[i]`. Returns `(with_b, i)`.
pub fn parse_bundle_gen(p: &SpaceParams, src: &str) -> Result<(bool, u32), ParseError> {
    let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    let (with_b, rest) = if let Some(r) = s.strip_prefix("ab") {
        (true, r)
    } else if let Some(r) = s.strip_prefix('a') {
        (false, r)
    } else {
        return Err(ParseError::syntax(0, "expected a[i] or ab[i]"));
    };
    let inner = rest
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| ParseError::syntax(s.len() - rest.len(), "expected [i]"))?;
    if inner.is_empty() || !inner.chars().all(|c| c.is_ascii_digit()) {
        return Err(ParseError::syntax(s.len() - rest.len() + 1, "expected a number"));
    }
    let i: u32 = inner.parse().unwrap_or(u32::MAX);
    if i >= p.n() {
        return Err(ParseError::semantic(
            s.len() - rest.len() + 1,
            format!("i = {inner} out of range (index out of range for n={})", p.n()),
        ));
    }
    Ok((with_b, i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use loopalg_core::spaces::Family;
    use loopalg_core::string_topology::{LoopClass, TensorCohClass};
    use loopalg_core::{ratio, scalar};

    fn cp2() -> SpaceParams {
        SpaceParams::new(Family::Complex, 2).unwrap()
    }

    #[test]
    fn two_term_loop_class() {
        let e = parse("A[2,0] - 3/2*B[1,1]").unwrap();
        assert_eq!(e.terms.len(), 2);
        let x: LoopClass = e.resolve(&cp2()).unwrap();
        let want = LoopClass::basis(LoopGen::a(2, 0)) - LoopClass::term(LoopGen::b(1, 1), ratio(3, 2));
        assert_eq!(x, want);
    }

    #[test]
    fn zero_level_is_rejected() {
        let err = parse_class::<LoopGen>(&cp2(), "A[0,1]").unwrap_err();
        assert_eq!(err.kind, ErrorKind::Semantic);
        assert!(err.message.contains("k must be ≥ 1"), "{err}");
    }

    #[test]
    fn index_out_of_range() {
        let err = parse_class::<LoopGen>(&cp2(), "A[1,0] + B[1,2]").unwrap_err();
        assert_eq!(err.position, 9);
        assert!(err.message.contains("index out of range for n=2"), "{err}");
    }

    #[test]
    fn tensor_atom() {
        let t: TensorCohClass = parse_class(&cp2(), "s[1,0] x m[1,1]").unwrap();
        assert_eq!(t, TensorCohClass::basis((CohGen::sigma(1, 0), CohGen::mu(1, 1))));
        let t2: TensorCohClass = parse_class(&cp2(), "s[1,0]xm[1,1]").unwrap();
        assert_eq!(t, t2);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse("A[2,0] + ").unwrap_err();
        assert_eq!((err.kind, err.position), (ErrorKind::Syntax, 9));
        let err = parse("A[2 0]").unwrap_err();
        assert_eq!(err.position, 4);
        let err = parse("A[2,0] B[1,0]").unwrap_err();
        assert_eq!(err.position, 7);
        let err = parse("q[1,0]").unwrap_err();
        assert_eq!(err.position, 0);
        let err = parse("1/0*A[1,0]").unwrap_err();
        assert_eq!(err.kind, ErrorKind::Semantic);
    }

    #[test]
    fn kinds_must_match() {
        assert!(parse_class::<LoopGen>(&cp2(), "s[1,0]").is_err());
        assert!(parse_class::<LoopGen>(&cp2(), "A[1,0] x A[1,0]").is_err());
        assert!(parse_class::<(LoopGen, LoopGen)>(&cp2(), "A[1,0]").is_err());
        assert!(parse_class::<LoopGen>(&cp2(), "2").is_err());
        assert_eq!(parse_class::<LoopGen>(&cp2(), "0").unwrap(), LoopClass::zero());
    }

    #[test]
    fn coefficients_combine() {
        let x: LoopClass = parse_class(&cp2(), "-A[1,0] + 2/4*A[1,0]").unwrap();
        assert_eq!(x, LoopClass::term(LoopGen::a(1, 0), ratio(-1, 2)));
        let x: LoopClass = parse_class(&cp2(), "4*A[1,0] - 4*A[1,0]").unwrap();
        assert!(x.is_zero());
        let x: LoopClass = parse_class(&cp2(), "0 + 2*A[1,0]").unwrap();
        assert_eq!(x, LoopClass::term(LoopGen::a(1, 0), scalar(2)));
    }

    #[test]
    fn bundle_generators() {
        assert_eq!(parse_bundle_gen(&cp2(), "a[1]").unwrap(), (false, 1));
        assert_eq!(parse_bundle_gen(&cp2(), "ab[0]").unwrap(), (true, 0));
        assert!(parse_bundle_gen(&cp2(), "ab[2]").unwrap_err().message.contains("n=2"));
        assert!(parse_bundle_gen(&cp2(), "b[0]").is_err());
        assert!(parse_bundle_gen(&cp2(), "a[]").is_err());
    }
}
