//! The job-script grammar.
//!
//! ```text
//! ring NAME = FIELD [v1, v2, x1..x4];
//! matrix M = [[e11, e12], [e21, e22]];
//! ideal I = minors(M, k) | pfaffians(M, k) | gens(f, ..) | product(M, Y) | J  [+ ...];
//! report scm(I) | rees(I) | theorem24(I) | lemma21(I, s, t_max) | profile(I, j_max);
//! ```
//!
//! `FIELD` is `p` (the configured prime), `Q`/`QQ`, `ZZ/p` or a bare prime.
//! Matrices and ideals live in the most recently declared ring. `#` starts a
//! comment running to the end of the line.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum IdealExpr {
    Minors {
        matrix: String,
        k: usize,
    },
    Pfaffians {
        matrix: String,
        k: usize,
    },
    Gens {
        polys: Vec<String>,
    },
    /// Entries of the matrix product.
    Product {
        left: String,
        right: String,
    },
    Named {
        ideal: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "command", rename_all = "snake_case")]
pub enum ReportCmd {
    Scm { ideal: String },
    Rees { ideal: String },
    Theorem24 { ideal: String },
    Lemma21 { ideal: String, s: usize, t_max: u32 },
    Profile { ideal: String, j_max: u32 },
}

impl ReportCmd {
    pub fn ideal(&self) -> &str {
        match self {
            ReportCmd::Scm { ideal }
            | ReportCmd::Rees { ideal }
            | ReportCmd::Theorem24 { ideal }
            | ReportCmd::Lemma21 { ideal, .. }
            | ReportCmd::Profile { ideal, .. } => ideal,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ReportCmd::Scm { .. } => "scm",
            ReportCmd::Rees { .. } => "rees",
            ReportCmd::Theorem24 { .. } => "theorem24",
            ReportCmd::Lemma21 { .. } => "lemma21",
            ReportCmd::Profile { .. } => "profile",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Statement {
    Ring { name: String, field: String, vars: Vec<String> },
    Matrix { name: String, rows: Vec<Vec<String>> },
    Ideal { name: String, terms: Vec<IdealExpr> },
    Report(ReportCmd),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Located {
    pub line: usize,
    pub statement: Statement,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct JobScript {
    pub statements: Vec<Located>,
}

fn script_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Script { line, msg: msg.into() }
}

fn is_ident(s: &str) -> bool {
    let mut c = s.chars();
    matches!(c.next(), Some(ch) if ch.is_ascii_alphabetic() || ch == '_')
        && c.all(|ch| ch.is_ascii_alphanumeric() || ch == '_')
}

fn ident(s: &str, line: usize) -> Result<String> {
    let s = s.trim();
    if is_ident(s) {
        Ok(s.to_string())
    } else {
        Err(script_err(line, format!("`{s}` is not a valid name")))
    }
}

/// Split at `sep` outside brackets and parentheses.
fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn strip_brackets(s: &str, open: char, close: char, line: usize) -> Result<&str> {
    let s = s.trim();
    s.strip_prefix(open)
        .and_then(|r| r.strip_suffix(close))
        .ok_or_else(|| script_err(line, format!("expected `{open}...{close}`, found `{s}`")))
}

/// `name(args)` split into the name and its top-level arguments.
fn call(s: &str, line: usize) -> Result<(String, Vec<String>)> {
    let s = s.trim();
    let open = s.find('(').ok_or_else(|| script_err(line, format!("expected a call, found `{s}`")))?;
    let name = ident(&s[..open], line)?;
    let inner = strip_brackets(&s[open..], '(', ')', line)?;
    let args = if inner.trim().is_empty() {
        Vec::new()
    } else {
        split_top(inner, ',').into_iter().map(|a| a.trim().to_string()).collect()
    };
    Ok((name, args))
}

fn number<T: std::str::FromStr>(s: &str, line: usize) -> Result<T> {
    s.trim().parse().map_err(|_| script_err(line, format!("expected a non-negative integer, found `{s}`")))
}

fn arity(name: &str, args: &[String], n: usize, line: usize) -> Result<()> {
    if args.len() != n {
        return Err(script_err(line, format!("`{name}` takes {n} arguments, found {}", args.len())));
    }
    Ok(())
}

/// Expand `x1..x4` into `x1, x2, x3, x4`.
fn expand_var(v: &str, line: usize) -> Result<Vec<String>> {
    let Some((a, b)) = v.split_once("..") else {
        return Ok(vec![ident(v, line)?]);
    };
    let (a, b) = (a.trim(), b.trim());
    let split = |s: &str| {
        let digits = s.len() - s.trim_end_matches(|c: char| c.is_ascii_digit()).len();
        (s[..s.len() - digits].to_string(), s[s.len() - digits..].parse::<usize>().ok())
    };
    match (split(a), split(b)) {
        ((pa, Some(lo)), (pb, Some(hi))) if pa == pb && lo <= hi && is_ident(a) => {
            Ok((lo..=hi).map(|i| format!("{pa}{i}")).collect())
        }
        _ => Err(script_err(line, format!("bad variable range `{v}`"))),
    }
}

fn parse_statement(text: &str, line: usize) -> Result<Statement> {
    let text = text.trim();
    let (keyword, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
    let rest = rest.trim();
    if keyword == "report" {
        let (name, args) = call(rest, line)?;
        let target = || ident(args.first().map_or("", String::as_str), line);
        let cmd = match name.as_str() {
            "scm" => {
                arity(&name, &args, 1, line)?;
                ReportCmd::Scm { ideal: target()? }
            }
            "rees" => {
                arity(&name, &args, 1, line)?;
                ReportCmd::Rees { ideal: target()? }
            }
            "theorem24" => {
                arity(&name, &args, 1, line)?;
                ReportCmd::Theorem24 { ideal: target()? }
            }
            "lemma21" => {
                arity(&name, &args, 3, line)?;
                ReportCmd::Lemma21 { ideal: target()?, s: number(&args[1], line)?, t_max: number(&args[2], line)? }
            }
            "profile" => {
                arity(&name, &args, 2, line)?;
                ReportCmd::Profile { ideal: target()?, j_max: number(&args[1], line)? }
            }
            other => return Err(script_err(line, format!("unknown report `{other}`"))),
        };
        return Ok(Statement::Report(cmd));
    }
    let (lhs, rhs) = rest.split_once('=').ok_or_else(|| script_err(line, "expected `NAME = ...`"))?;
    let name = ident(lhs, line)?;
    let rhs = rhs.trim();
    match keyword {
        "ring" => {
            let open = rhs.find('[').ok_or_else(|| script_err(line, "expected `FIELD [vars]`"))?;
            let field = rhs[..open].trim().to_string();
            if field.is_empty() {
                return Err(script_err(line, "missing field"));
            }
            let inner = strip_brackets(&rhs[open..], '[', ']', line)?;
            let mut vars = Vec::new();
            for v in inner.split(',').map(str::trim).filter(|v| !v.is_empty()) {
                vars.extend(expand_var(v, line)?);
            }
            if vars.is_empty() {
                return Err(script_err(line, "a ring needs at least one variable"));
            }
            Ok(Statement::Ring { name, field, vars })
        }
        "matrix" => {
            let inner = strip_brackets(rhs, '[', ']', line)?;
            let mut rows = Vec::new();
            for row in split_top(inner, ',') {
                let row = strip_brackets(row, '[', ']', line)?;
                rows.push(split_top(row, ',').into_iter().map(|e| e.trim().to_string()).collect::<Vec<_>>());
            }
            let cols = rows.first().map_or(0, Vec::len);
            if cols == 0 || rows.iter().any(|r| r.len() != cols || r.iter().any(String::is_empty)) {
                return Err(script_err(line, "matrix rows must be non-empty and of equal length"));
            }
            Ok(Statement::Matrix { name, rows })
        }
        "ideal" => {
            let mut terms = Vec::new();
            for part in split_top(rhs, '+') {
                let part = part.trim();
                if is_ident(part) {
                    terms.push(IdealExpr::Named { ideal: part.to_string() });
                    continue;
                }
                let (op, args) = call(part, line)?;
                terms.push(match op.as_str() {
                    "minors" | "pfaffians" => {
                        arity(&op, &args, 2, line)?;
                        let matrix = ident(&args[0], line)?;
                        let k = number(&args[1], line)?;
                        if op == "minors" {
                            IdealExpr::Minors { matrix, k }
                        } else {
                            IdealExpr::Pfaffians { matrix, k }
                        }
                    }
                    "gens" => IdealExpr::Gens { polys: args },
                    "product" => {
                        arity(&op, &args, 2, line)?;
                        IdealExpr::Product { left: ident(&args[0], line)?, right: ident(&args[1], line)? }
                    }
                    other => return Err(script_err(line, format!("unknown ideal constructor `{other}`"))),
                });
            }
            Ok(Statement::Ideal { name, terms })
        }
        other => Err(script_err(line, format!("unknown statement `{other}`"))),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Ring,
    Matrix,
    Ideal,
}

/// Parse a job script and check that every name is declared before use.
pub fn parse_job(text: &str) -> Result<JobScript> {
    let cleaned: String = text.lines().map(|l| l.split('#').next().unwrap_or("")).collect::<Vec<_>>().join("\n");
    let mut statements = Vec::new();
    let mut offset = 0;
    let pieces: Vec<&str> = cleaned.split(';').collect();
    let last = pieces.len() - 1;
    for (idx, piece) in pieces.into_iter().enumerate() {
        let lead = piece.len() - piece.trim_start().len();
        let line = cleaned[..offset + lead].matches('\n').count() + 1;
        offset += piece.len() + 1;
        if piece.trim().is_empty() {
            continue;
        }
        if idx == last {
            return Err(script_err(line, "missing `;` after the last statement"));
        }
        statements.push(Located { line, statement: parse_statement(piece, line)? });
    }
    let script = JobScript { statements };
    check_names(&script)?;
    Ok(script)
}

fn check_names(script: &JobScript) -> Result<()> {
    let mut kinds: HashMap<&str, Kind> = HashMap::new();
    let mut have_ring = false;
    for st in &script.statements {
        let line = st.line;
        let need = |kinds: &HashMap<&str, Kind>, name: &str, kind: Kind, what: &str| -> Result<()> {
            if kinds.get(name) == Some(&kind) {
                Ok(())
            } else {
                Err(script_err(line, format!("undeclared {what} `{name}`")))
            }
        };
        let declared = match &st.statement {
            Statement::Ring { name, .. } => {
                have_ring = true;
                Some((name.as_str(), Kind::Ring))
            }
            Statement::Matrix { name, .. } => Some((name.as_str(), Kind::Matrix)),
            Statement::Ideal { name, terms } => {
                for t in terms {
                    match t {
                        IdealExpr::Minors { matrix, .. } | IdealExpr::Pfaffians { matrix, .. } => {
                            need(&kinds, matrix, Kind::Matrix, "matrix")?
                        }
                        IdealExpr::Product { left, right } => {
                            need(&kinds, left, Kind::Matrix, "matrix")?;
                            need(&kinds, right, Kind::Matrix, "matrix")?;
                        }
                        IdealExpr::Named { ideal } => need(&kinds, ideal, Kind::Ideal, "ideal")?,
                        IdealExpr::Gens { .. } => {}
                    }
                }
                Some((name.as_str(), Kind::Ideal))
            }
            Statement::Report(cmd) => {
                need(&kinds, cmd.ideal(), Kind::Ideal, "ideal")?;
                None
            }
        };
        if let Some((name, kind)) = declared {
            if kind != Kind::Ring && !have_ring {
                return Err(script_err(line, "declare a ring first"));
            }
            if kinds.insert(name, kind).is_some() {
                return Err(script_err(line, format!("`{name}` is declared twice")));
            }
        }
    }
    Ok(())
}
