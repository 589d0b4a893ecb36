//! Output records and the text, JSON and LaTeX emitters.

use std::fmt::Write as _;

use loopalg_core::Scalar;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::parse::{parse, GenKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

/// One command's output. JSON keys: `space`, `n`, `command`, `result` and
/// `degree` when it is defined.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputRecord {
    pub space: String,
    pub n: u32,
    pub command: String,
    pub result: ResultBody,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<DegreeShift>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DegreeShift {
    pub input: Option<u32>,
    pub output: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ResultBody {
    Class(ClassResult),
    Table(TableResult),
    Verify(VerifyResult),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassResult {
    /// Canonical form of the input.
    pub input: String,
    /// `closed` or `pipeline`, for the coproduct.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub route: Option<String>,
    /// Map, level and cut position, where they apply.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub context: Option<String>,
    /// Canonical form of the result.
    pub value: String,
    pub terms: Vec<TermRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermRecord {
    /// Always `p/q`.
    pub coefficient: String,
    pub generators: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableResult {
    pub max_degree: u32,
    pub rows: Vec<BettiRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BettiRow {
    pub degree: u32,
    pub betti: usize,
    pub generators: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyResult {
    pub suite: String,
    pub max_k: u32,
    pub passed: bool,
    pub checks: u64,
    pub failures: u64,
    pub counterexamples: Vec<String>,
}

pub fn coefficient_string(c: &Scalar) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

/// Inverse of [`coefficient_string`].
pub fn parse_coefficient(s: &str) -> Option<Scalar> {
    let (p, q) = s.split_once('/')?;
    let q: num_bigint::BigInt = q.parse().ok()?;
    if q.is_positive() {
        Some(Scalar::new(p.parse().ok()?, q))
    } else {
        None
    }
}

/// Canonical `c1*g1 + c2*g2 - ...` from `(coefficient, key)` pairs.
pub fn canonical(terms: &[(Scalar, String)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, (c, key)) in terms.iter().enumerate() {
        match (i == 0, c.is_negative()) {
            (true, true) => s.push('-'),
            (true, false) => {}
            (false, true) => s.push_str(" - "),
            (false, false) => s.push_str(" + "),
        }
        let abs = c.abs();
        if !abs.is_one() {
            let _ = write!(s, "{abs}*");
        }
        s.push_str(key);
    }
    s
}

pub fn render(record: &OutputRecord, format: Format) -> String {
    match format {
        Format::Text => text(record),
        Format::Json => serde_json::to_string_pretty(record).expect("records serialize") + "\n",
        Format::Latex => latex(record),
    }
}

fn plural(n: usize, word: &str) -> String {
    if n == 1 {
        format!("1 {word}")
    } else {
        format!("{n} {word}s")
    }
}

fn degree_text(d: &DegreeShift) -> String {
    let show = |x: Option<u32>| x.map_or_else(|| "n/a".to_string(), |d| d.to_string());
    format!("degree {} -> {}", show(d.input), show(d.output))
}

fn text(r: &OutputRecord) -> String {
    let mut s = String::new();
    match &r.result {
        ResultBody::Class(c) => {
            let _ = writeln!(s, "{}", c.value);
            let mut info = vec![plural(c.terms.len(), "term")];
            if let Some(d) = &r.degree {
                info.push(degree_text(d));
            }
            if let Some(route) = &c.route {
                info.push(format!("route {route}"));
            }
            if let Some(ctx) = &c.context {
                info.push(ctx.clone());
            }
            let _ = writeln!(s, "{}", info.join(", "));
        }
        ResultBody::Table(t) => {
            let _ = writeln!(s, "{:>6}  {:>5}  generators", "degree", "betti");
            for row in &t.rows {
                let line = format!("{:>6}  {:>5}  {}", row.degree, row.betti, row.generators.join(" "));
                let _ = writeln!(s, "{}", line.trim_end());
            }
        }
        ResultBody::Verify(v) => {
            let _ = write!(s, "{} {} ({} checks", if v.passed { "PASS" } else { "FAIL" }, v.suite, v.checks);
            if !v.passed {
                let _ = write!(s, ", {} failed", v.failures);
            }
            let _ = writeln!(s, ", max k {})", v.max_k);
            if let Some(first) = v.counterexamples.first() {
                let _ = writeln!(s, "first counterexample: {first}");
            }
        }
    }
    s
}

/// `A[2,1]` to `A_{2}^{1}`, `s[1,0]` to `\sigma_{1}^{0}`, and the bracket
/// labels of the completing manifolds to their subscripted forms.
pub fn latex_generator(g: &str) -> String {
    if let Ok(e) = parse(g) {
        if let [t] = e.terms.as_slice() {
            if t.coeff.is_one() && t.atom.len() == 1 {
                let a = &t.atom[0];
                let head = match a.kind {
                    GenKind::A => "A",
                    GenKind::B => "B",
                    GenKind::Sigma => "\\sigma",
                    GenKind::Mu => "\\mu",
                };
                return format!("{head}_{{{}}}^{{{}}}", a.level, a.index);
            }
        }
    }
    let inner = g.trim_start_matches('[').trim_end_matches(']');
    let parts: Vec<String> = inner
        .split(' ')
        .map(|p| {
            let (name, sub) = p.split_once('_').unwrap_or((p, ""));
            let name = match (name.chars().next(), name.chars().nth(1)) {
                (Some(c), Some('~')) => format!("\\tilde{{{c}}}"),
                (Some(c), Some('^')) => format!("\\hat{{{c}}}"),
                _ => name.to_string(),
            };
            let sub = sub.trim_start_matches('{').trim_end_matches('}');
            if sub.is_empty() {
                name
            } else {
                format!("{name}_{{{sub}}}")
            }
        })
        .collect();
    format!("\\left[{}\\right]", parts.join("\\,"))
}

fn latex_coefficient(c: &Scalar, first: bool) -> String {
    let sign = match (first, c.is_negative()) {
        (true, true) => "-",
        (true, false) => "",
        (false, true) => " - ",
        (false, false) => " + ",
    };
    let abs = c.abs();
    let mag = if abs.is_one() {
        String::new()
    } else if abs.is_integer() {
        format!("{} ", abs.numer())
    } else {
        format!("\\frac{{{}}}{{{}}} ", abs.numer(), abs.denom())
    };
    format!("{sign}{mag}")
}

fn latex_terms(terms: &[TermRecord]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, t) in terms.iter().enumerate() {
        let c = parse_coefficient(&t.coefficient).expect("records hold p/q coefficients");
        s.push_str(&latex_coefficient(&c, i == 0));
        let gens: Vec<String> = t.generators.iter().map(|g| latex_generator(g)).collect();
        s.push_str(&gens.join(" \\times "));
    }
    s
}

/// LaTeX of an input echo: a class expression, or a bundle generator.
fn latex_input(input: &str) -> String {
    match parse(input) {
        Ok(e) => {
            let terms: Vec<TermRecord> = e
                .terms
                .iter()
                .map(|t| TermRecord {
                    coefficient: coefficient_string(&t.coeff),
                    generators: t
                        .atom
                        .iter()
                        .map(|g| {
                            let c = match g.kind {
                                GenKind::A => 'A',
                                GenKind::B => 'B',
                                GenKind::Sigma => 's',
                                GenKind::Mu => 'm',
                            };
                            format!("{c}[{},{}]", g.level, g.index)
                        })
                        .collect(),
                })
                .collect();
            latex_terms(&terms)
        }
        Err(_) => format!("\\texttt{{{input}}}"),
    }
}

fn latex(r: &OutputRecord) -> String {
    let mut s = String::new();
    match &r.result {
        ResultBody::Class(c) => {
            let op = match r.command.as_str() {
                "coproduct" => "\\vee",
                "product" => "\\circledast",
                "gysin" => "f_!",
                "cap" => "\\xi \\cap",
                _ => "",
            };
            let _ = write!(s, "{op}\\left({}\\right) = {}", latex_input(&c.input), latex_terms(&c.terms));
            let _ = writeln!(s);
            if let Some(d) = &r.degree {
                let _ = writeln!(s, "% {}", degree_text(d));
            }
            if let Some(ctx) = &c.context {
                let _ = writeln!(s, "% {ctx}");
            }
        }
        ResultBody::Table(t) => {
            let _ = writeln!(s, "\\begin{{tabular}}{{rrl}}");
            let _ = writeln!(s, "$d$ & $b_d$ & generators \\\\ \\hline");
            for row in &t.rows {
                let gens: Vec<String> = row.generators.iter().map(|g| format!("${}$", latex_generator(g))).collect();
                let _ = writeln!(s, "{} & {} & {}\\\\", row.degree, row.betti, gens.join(", "));
            }
            let _ = writeln!(s, "\\end{{tabular}}");
        }
        ResultBody::Verify(v) => {
            let _ = writeln!(
                s,
                "\\textbf{{{}}} {} ({} checks, $k \\le {}$)",
                if v.passed { "PASS" } else { "FAIL" },
                v.suite,
                v.checks,
                v.max_k
            );
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use loopalg_core::ratio;

    #[test]
    fn coefficients_are_fractions() {
        assert_eq!(coefficient_string(&ratio(-3, 2)), "-3/2");
        assert_eq!(coefficient_string(&ratio(4, 2)), "2/1");
        assert_eq!(parse_coefficient("-3/2"), Some(ratio(-3, 2)));
        assert_eq!(parse_coefficient("3/0"), None);
        assert_eq!(parse_coefficient("3"), None);
    }

    #[test]
    fn latex_of_generators() {
        assert_eq!(latex_generator("A[2,1]"), "A_{2}^{1}");
        assert_eq!(latex_generator("m[1,0]"), "\\mu_{1}^{0}");
        assert_eq!(latex_generator("[a_1 b x_{1,3}]"), "\\left[a_{1}\\,b\\,x_{1,3}\\right]");
        assert_eq!(latex_generator("[a~_0 b~]"), "\\left[\\tilde{a}_{0}\\,\\tilde{b}\\right]");
    }

    #[test]
    fn canonical_matches_core_display() {
        use loopalg_core::string_topology::{LoopClass, LoopGen};
        let x = LoopClass::basis(LoopGen::a(2, 0)) - LoopClass::term(LoopGen::b(1, 1), ratio(3, 2));
        let terms: Vec<(Scalar, String)> = x.iter().map(|(g, c)| (c.clone(), LoopClass::basis(*g).to_string())).collect();
        assert_eq!(canonical(&terms), x.to_string());
    }
}
