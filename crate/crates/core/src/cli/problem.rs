//! Line-oriented problem files.
//!
//! ```text
//! # comment
//! weights = 1 1 2
//! field = z2 ; z0^2 ; z0*z2
//! invariant f1 = z0
//! poly F = z0*z1
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{parse_polynomial, Polynomial};
use crate::weights::Weights;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemFile {
    pub weights: Weights,
    pub field: Option<Vec<Polynomial>>,
    /// Candidate invariant polynomials, in file order.
    pub invariants: Vec<(String, Polynomial)>,
    /// Other named polynomials (numerators, denominators, forms).
    pub polys: Vec<(String, Polynomial)>,
}

/// JSON echo of a problem file with canonical polynomial strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProblemEcho {
    pub weights: Vec<u32>,
    pub field: Option<Vec<String>>,
    pub invariants: Vec<NamedPoly>,
    pub polys: Vec<NamedPoly>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedPoly {
    pub name: String,
    pub value: String,
}

fn line_err(line: usize, message: impl Into<String>) -> Error {
    Error::ProblemFile {
        line,
        message: message.into(),
    }
}

fn valid_name(name: &str) -> bool {
    !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<ProblemFile> {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty())
            .collect();

        let mut weights = None;
        for &(no, l) in &lines {
            let Some((key, value)) = l.split_once('=') else {
                return Err(line_err(no, "expected `key = value`"));
            };
            if key.trim() == "weights" {
                if weights.is_some() {
                    return Err(line_err(no, "weights given twice"));
                }
                weights = Some(Weights::parse(value).map_err(|e| line_err(no, e.to_string()))?);
            }
        }
        let weights = weights.ok_or_else(|| line_err(0, "missing `weights` line"))?;
        let nvars = weights.len();
        let poly = |no: usize, s: &str| {
            parse_polynomial(s, nvars).map_err(|e| line_err(no, e.to_string()))
        };

        let mut field = None;
        let mut invariants: Vec<(String, Polynomial)> = Vec::new();
        let mut polys: Vec<(String, Polynomial)> = Vec::new();
        for &(no, l) in &lines {
            let (key, value) = l.split_once('=').expect("checked above");
            let key: Vec<&str> = key.split_whitespace().collect();
            match key.as_slice() {
                ["weights"] => {}
                ["field"] => {
                    if field.is_some() {
                        return Err(line_err(no, "field given twice"));
                    }
                    let comps = value
                        .split(';')
                        .map(|c| poly(no, c))
                        .collect::<Result<Vec<_>>>()?;
                    if comps.len() != nvars {
                        return Err(line_err(
                            no,
                            format!("field has {} components, weights need {nvars}", comps.len()),
                        ));
                    }
                    field = Some(comps);
                }
                [kind @ ("invariant" | "poly"), name] => {
                    if !valid_name(name) {
                        return Err(line_err(no, format!("invalid name {name:?}")));
                    }
                    let list = if *kind == "invariant" {
                        &mut invariants
                    } else {
                        &mut polys
                    };
                    if list.iter().any(|(n, _)| n == name) {
                        return Err(line_err(no, format!("duplicate name {name:?}")));
                    }
                    list.push((name.to_string(), poly(no, value)?));
                }
                _ => return Err(line_err(no, format!("unknown key {:?}", key.join(" ")))),
            }
        }
        Ok(ProblemFile {
            weights,
            field,
            invariants,
            polys,
        })
    }

    pub fn read(path: &std::path::Path) -> Result<ProblemFile> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| line_err(0, format!("cannot read {}: {e}", path.display())))?;
        ProblemFile::parse(&text)
    }

    pub fn poly(&self, name: &str) -> Option<&Polynomial> {
        self.polys
            .iter()
            .chain(&self.invariants)
            .find(|(n, _)| n == name)
            .map(|(_, p)| p)
    }

    pub fn echo(&self) -> ProblemEcho {
        let named = |v: &[(String, Polynomial)]| {
            v.iter()
                .map(|(n, p)| NamedPoly {
                    name: n.clone(),
                    value: p.to_string(),
                })
                .collect()
        };
        ProblemEcho {
            weights: self.weights.as_slice().to_vec(),
            field: self
                .field
                .as_ref()
                .map(|f| f.iter().map(Polynomial::to_string).collect()),
            invariants: named(&self.invariants),
            polys: named(&self.polys),
        }
    }

    /// Rebuilds a problem from its JSON echo.
    pub fn from_echo(echo: &ProblemEcho) -> Result<ProblemFile> {
        ProblemFile::parse(&echo.to_text())
    }
}

impl ProblemEcho {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let ws: Vec<String> = self.weights.iter().map(u32::to_string).collect();
        out.push_str(&format!("weights = {}\n", ws.join(" ")));
        if let Some(f) = &self.field {
            out.push_str(&format!("field = {}\n", f.join(" ; ")));
        }
        for p in &self.invariants {
            out.push_str(&format!("invariant {} = {}\n", p.name, p.value));
        }
        for p in &self.polys {
            out.push_str(&format!("poly {} = {}\n", p.name, p.value));
        }
        out
    }
}
