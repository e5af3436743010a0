//! Line-oriented algebra files.
//!
//! ```text
//! carrier a b c
//! leq
//! 1 1 1
//! 0 1 1
//! 0 0 1
//! dot
//! a b c
//! b b c
//! c c c
//! one a
//! ```
//! `dot` and `one` are optional and default to join and bottom. The
//! implication is the co-residual of dot when it exists.

use crate::algebra::{co_residual, FiniteAlgebra};
use crate::lattice::FiniteLattice;
use crate::order::FinitePreorder;
use crate::LabError;

fn syntax(line: usize, msg: impl Into<String>) -> LabError {
    LabError::Syntax { line, msg: msg.into() }
}

pub fn parse_algebra(text: &str) -> Result<FiniteAlgebra, LabError> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let mut labels: Vec<String> = Vec::new();
    let mut leq: Option<Vec<Vec<bool>>> = None;
    let mut dot: Option<Vec<Vec<usize>>> = None;
    let mut one: Option<usize> = None;
    let mut i = 0;
    let index = |labels: &[String], line: usize, s: &str| -> Result<usize, LabError> {
        labels.iter().position(|l| l == s).ok_or_else(|| syntax(line, format!("unknown element {s}")))
    };
    while i < lines.len() {
        let (ln, l) = lines[i];
        let mut words = l.split_whitespace();
        let head = words.next().unwrap_or("");
        i += 1;
        match head {
            "carrier" => labels = words.map(str::to_string).collect(),
            "leq" | "dot" => {
                let n = labels.len();
                if n == 0 {
                    return Err(syntax(ln, "carrier must come first"));
                }
                if i + n > lines.len() {
                    return Err(syntax(ln, format!("{head} needs {n} rows")));
                }
                let rows: Vec<(usize, Vec<&str>)> =
                    lines[i..i + n].iter().map(|(k, r)| (*k, r.split_whitespace().collect())).collect();
                i += n;
                if let Some((k, _)) = rows.iter().find(|(_, r)| r.len() != n) {
                    return Err(syntax(*k, format!("row needs {n} entries")));
                }
                if head == "leq" {
                    let mut m = Vec::new();
                    for (k, r) in rows {
                        m.push(
                            r.iter()
                                .map(|w| match *w {
                                    "1" => Ok(true),
                                    "0" => Ok(false),
                                    _ => Err(syntax(k, "leq entries are 0 or 1")),
                                })
                                .collect::<Result<Vec<_>, _>>()?,
                        );
                    }
                    leq = Some(m);
                } else {
                    let mut m = Vec::new();
                    for (k, r) in rows {
                        m.push(r.iter().map(|w| index(&labels, k, w)).collect::<Result<Vec<_>, _>>()?);
                    }
                    dot = Some(m);
                }
            }
            "one" => {
                let w = words.next().ok_or_else(|| syntax(ln, "one needs an element"))?;
                one = Some(index(&labels, ln, w)?);
            }
            _ => return Err(syntax(ln, format!("unknown field {head}"))),
        }
    }
    let leq = leq.ok_or_else(|| syntax(lines.len(), "missing leq"))?;
    let lattice = FiniteLattice::from_order(FinitePreorder::new(leq)?)?;
    let dot = dot.unwrap_or_else(|| lattice.join_table().to_vec());
    let one = one.unwrap_or(lattice.bottom());
    let imp = co_residual(&lattice, &dot).ok();
    Ok(FiniteAlgebra::new(lattice, dot, one, imp).with_labels(labels))
}

pub fn write_algebra(a: &FiniteAlgebra) -> String {
    let n = a.len();
    let mut s = format!("carrier {}\nleq\n", a.labels.join(" "));
    for x in 0..n {
        let row: Vec<&str> = (0..n).map(|y| if a.lattice.leq(x, y) { "1" } else { "0" }).collect();
        s += &format!("{}\n", row.join(" "));
    }
    s += "dot\n";
    for row in &a.dot {
        let row: Vec<&str> = row.iter().map(|&v| a.labels[v].as_str()).collect();
        s += &format!("{}\n", row.join(" "));
    }
    s + &format!("one {}\n", a.labels[a.one])
}
