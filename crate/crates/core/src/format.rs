//! Plain-text formats for matrices, presentations, fans and discrepancy inputs.
//!
//! Blank lines and lines starting with `#` are ignored everywhere.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::blowup::{BlowupSpec, CIData, EquationData};
use crate::coxpres::{CoxPresentation, MonomialIdeal};
use crate::error::{CoxError, Result};
use crate::galefan::Fan;
use crate::intlattice::IntMatrix;

/// Meaningful lines with their 1-based line numbers.
fn lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect()
}

struct Cursor<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            lines: lines(text),
            pos: 0,
        }
    }

    fn next(&mut self, what: &str) -> Result<(usize, &'a str)> {
        let l = self.lines.get(self.pos).copied().ok_or_else(|| {
            let last = self.lines.last().map_or(0, |l| l.0);
            CoxError::parse(last + 1, format!("unexpected end of input, expected {what}"))
        })?;
        self.pos += 1;
        Ok(l)
    }

    fn peek(&self) -> Option<(usize, &'a str)> {
        self.lines.get(self.pos).copied()
    }

    fn keyword(&mut self, key: &str) -> Result<(usize, &'a str)> {
        let (n, l) = self.next(key)?;
        match l.strip_prefix(key) {
            Some(rest) if rest.is_empty() || rest.starts_with(char::is_whitespace) => Ok((n, rest.trim())),
            _ => Err(CoxError::parse(n, format!("expected `{key}`"))),
        }
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            Some((n, _)) => Err(CoxError::parse(n, "unexpected trailing content")),
            None => Ok(()),
        }
    }
}

fn parse_num<T: FromStr>(line: usize, tok: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| CoxError::parse(line, format!("bad number `{tok}`")))
}

fn int_row(line: usize, text: &str) -> Result<Vec<BigInt>> {
    text.split_whitespace().map(|t| parse_num(line, t)).collect()
}

fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

/// `r n` on the first line, then `r` rows of `n` integers.
pub fn parse_matrix(text: &str) -> Result<IntMatrix> {
    let mut c = Cursor::new(text);
    let (n0, header) = c.next("matrix size")?;
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(|t| parse_num(n0, t))
        .collect::<Result<_>>()?;
    let [r, n] = dims[..] else {
        return Err(CoxError::parse(n0, "expected `rows cols`"));
    };
    let rows = read_rows(&mut c, r, n)?;
    c.finish()?;
    IntMatrix::from_big_rows(rows).map_err(|e| CoxError::parse(n0, e.to_string()))
}

fn read_rows(c: &mut Cursor<'_>, r: usize, n: usize) -> Result<Vec<Vec<BigInt>>> {
    (0..r)
        .map(|_| {
            let (ln, l) = c.next("matrix row")?;
            let row = int_row(ln, l)?;
            if row.len() != n {
                return Err(CoxError::parse(ln, format!("expected {n} entries, got {}", row.len())));
            }
            Ok(row)
        })
        .collect()
}

pub fn write_matrix(m: &IntMatrix) -> String {
    format!("{} {}\n{}", m.rows(), m.cols(), m)
}

pub fn parse_presentation(text: &str) -> Result<CoxPresentation> {
    let mut c = Cursor::new(text);
    let (n0, rest) = c.keyword("rank")?;
    let r: usize = parse_num(n0, rest)?;
    let (n1, rest) = c.keyword("vars")?;
    let vars: Vec<String> = rest.split_whitespace().map(String::from).collect();
    if vars.is_empty() {
        return Err(CoxError::parse(n1, "no variables"));
    }
    let rows = read_rows(&mut c, r, vars.len())?;
    let (n2, rest) = c.keyword("irrelevant")?;
    let components = parse_components(n2, rest, &vars)?;
    let mut stacky = false;
    if let Some((n3, l)) = c.peek() {
        if l.starts_with("stacky") {
            let (_, rest) = c.keyword("stacky")?;
            stacky = match rest {
                "true" => true,
                "false" => false,
                _ => return Err(CoxError::parse(n3, "stacky must be true or false")),
            };
        }
    }
    c.finish()?;
    let weights = IntMatrix::from_big_rows(rows).map_err(|e| CoxError::parse(n0, e.to_string()))?;
    let ideal = MonomialIdeal::new(components, vars.len()).map_err(|e| CoxError::parse(n2, e.to_string()))?;
    CoxPresentation::new(vars, weights, ideal, stacky)
}

fn parse_components(line: usize, text: &str, vars: &[String]) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let inner = rest
            .strip_prefix('(')
            .and_then(|s| s.split_once(')'))
            .ok_or_else(|| CoxError::parse(line, "components must look like (a,b)(c)"))?;
        let comp = inner
            .0
            .split(',')
            .map(str::trim)
            .map(|name| {
                vars.iter()
                    .position(|v| v == name)
                    .ok_or_else(|| CoxError::parse(line, format!("unknown variable `{name}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        out.push(comp);
        rest = inner.1.trim_start();
    }
    if out.is_empty() {
        return Err(CoxError::parse(line, "no components"));
    }
    Ok(out)
}

pub fn format_ideal(ideal: &MonomialIdeal, vars: &[String]) -> String {
    ideal
        .components()
        .iter()
        .map(|c| {
            let names: Vec<&str> = c.iter().map(|&i| vars[i].as_str()).collect();
            format!("({})", names.join(","))
        })
        .collect()
}

pub fn write_presentation(p: &CoxPresentation) -> String {
    let mut s = format!("rank {}\nvars {}\n", p.rank(), p.variables().join(" "));
    s.push_str(&p.weights().to_string());
    s.push_str(&format!("irrelevant {}\n", format_ideal(p.irrelevant(), p.variables())));
    if p.is_stacky() {
        s.push_str("stacky true\n");
    }
    s
}

pub fn parse_fan(text: &str) -> Result<Fan> {
    let mut c = Cursor::new(text);
    let (n0, rest) = c.keyword("dim")?;
    let d: usize = parse_num(n0, rest)?;
    let (n1, rest) = c.keyword("rays")?;
    let k: usize = parse_num(n1, rest)?;
    let rays = read_rows(&mut c, k, d)?;
    let (n2, rest) = c.keyword("cones")?;
    let m: usize = parse_num(n2, rest)?;
    let mut cones = Vec::with_capacity(m);
    for _ in 0..m {
        let (ln, l) = c.next("cone")?;
        let idx = l
            .split_whitespace()
            .map(|t| {
                let i: usize = parse_num(ln, t)?;
                if i == 0 || i > k {
                    return Err(CoxError::parse(ln, format!("ray index {i} out of range 1..{k}")));
                }
                Ok(i - 1)
            })
            .collect::<Result<Vec<_>>>()?;
        cones.push(idx);
    }
    c.finish()?;
    Fan::new(d, rays, cones)
}

pub fn write_fan(f: &Fan) -> String {
    let mut s = format!("dim {}\nrays {}\n", f.lattice_dim(), f.rays().len());
    for r in f.rays() {
        s.push_str(&join(r, " "));
        s.push('\n');
    }
    s.push_str(&format!("cones {}\n", f.max_cones().len()));
    for c in f.max_cones() {
        let one_based: Vec<usize> = c.iter().map(|i| i + 1).collect();
        s.push_str(&join(&one_based, " "));
        s.push('\n');
    }
    s
}

/// Blow-up data plus equations, optionally with an unknown entry of `b` to solve for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscrepancyInput {
    pub spec: BlowupSpec,
    pub ci: CIData,
    pub unknown: Option<usize>,
    pub target: Option<BigRational>,
    pub bound: Option<i64>,
}

/// Reads a discrepancy input:
///
/// ```text
/// fibre 1 2 3 1 1
/// b ? 2 3 1 1
/// center 1 2
/// order 3
/// support 1 0 0 0 1 0 0; 0 0 2 0 0 1 0
/// target 1/3
/// ```
///
/// `order` and `support` each add one equation. A `?` in `b` marks the
/// unknown to solve for, which requires `target`.
pub fn parse_discrepancy_input(text: &str) -> Result<DiscrepancyInput> {
    let mut fibre = None;
    let mut b: Option<(usize, Vec<Option<i64>>)> = None;
    let mut center = None;
    let mut equations = Vec::new();
    let mut target = None;
    let mut bound = None;
    let mut new_var = "xi".to_string();
    let mut last_line = 0;
    for (n, l) in lines(text) {
        last_line = n;
        let (key, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        let rest = rest.trim();
        match key {
            "fibre" => {
                fibre = Some(rest.split_whitespace().map(|t| parse_num(n, t)).collect::<Result<Vec<i64>>>()?);
            }
            "b" => {
                let vals = rest
                    .split_whitespace()
                    .map(|t| if t == "?" { Ok(None) } else { parse_num(n, t).map(Some) })
                    .collect::<Result<Vec<_>>>()?;
                b = Some((n, vals));
            }
            "center" => {
                let v: Vec<usize> = rest.split_whitespace().map(|t| parse_num(n, t)).collect::<Result<_>>()?;
                let [r, s] = v[..] else {
                    return Err(CoxError::parse(n, "center takes two indices"));
                };
                center = Some((r, s));
            }
            "order" => equations.push(EquationData {
                order: Some(parse_num(n, rest)?),
                ..Default::default()
            }),
            "support" => {
                let monos = rest
                    .split(';')
                    .map(|m| m.split_whitespace().map(|t| parse_num(n, t)).collect::<Result<Vec<u64>>>())
                    .collect::<Result<Vec<_>>>()?;
                equations.push(EquationData {
                    support: Some(monos),
                    ..Default::default()
                });
            }
            "target" => {
                target = Some(parse_num::<BigRational>(n, rest)?);
            }
            "bound" => bound = Some(parse_num(n, rest)?),
            "newvar" => new_var = rest.to_string(),
            _ => return Err(CoxError::parse(n, format!("unknown key `{key}`"))),
        }
    }
    let missing = |what: &str| CoxError::parse(last_line + 1, format!("missing `{what}` line"));
    let a = fibre.ok_or_else(|| missing("fibre"))?;
    let (bline, b) = b.ok_or_else(|| missing("b"))?;
    let center = center.ok_or_else(|| missing("center"))?;
    let unknowns: Vec<usize> = b.iter().enumerate().filter(|(_, x)| x.is_none()).map(|(i, _)| i).collect();
    if unknowns.len() > 1 {
        return Err(CoxError::parse(bline, "at most one unknown entry"));
    }
    let unknown = unknowns.first().copied();
    if unknown.is_some() && target.is_none() {
        return Err(missing("target"));
    }
    let k = center.1;
    let ak = *a.get(k).ok_or_else(|| CoxError::parse(bline, "center index out of range"))?;
    let b: Vec<i64> = b
        .iter()
        .enumerate()
        .map(|(i, x)| {
            x.unwrap_or_else(|| {
                // smallest admissible placeholder; the solver overwrites it
                if i == k {
                    ak
                } else {
                    let r = a.get(i).copied().unwrap_or(1).rem_euclid(ak);
                    if r == 0 {
                        ak
                    } else {
                        r
                    }
                }
            })
        })
        .collect();
    let spec = BlowupSpec::new(center, k, a, b, &new_var).map_err(|e| CoxError::parse(bline, e.to_string()))?;
    Ok(DiscrepancyInput {
        spec,
        ci: CIData { equations },
        unknown,
        target,
        bound,
    })
}
