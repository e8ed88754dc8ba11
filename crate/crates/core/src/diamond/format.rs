//! Plain-text presentation files.
//!
//! ```text
//! # comment
//! name: example
//! generators: x y z
//! rules:
//!   y.x -> [q] x.y
//!   z.x -> x.z - 1/2
//! ```
//!
//! Generators are listed smallest first. A right side is a sum of terms,
//! each an optional coefficient (a rational number, or any scalar in
//! brackets) followed by a dot-separated monomial; `1` and `0` stand alone.

use num_rational::BigRational;

use super::monomial::{is_valid_name, Alphabet, Monomial};
use super::ncpoly::NCPoly;
use super::system::{RewriteSystem, Rule};
use crate::error::{Error, ParseError, Result};
use crate::scalar::Scalar;

/// A parsed presentation file.
#[derive(Clone, Debug)]
pub struct PresentationFile {
    pub name: Option<String>,
    pub system: RewriteSystem,
}

fn perr(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse(ParseError::new(line, col, msg))
}

pub fn parse_presentation(text: &str) -> Result<PresentationFile> {
    let mut name = None;
    let mut alphabet: Option<Alphabet> = None;
    let mut in_rules = false;
    let mut rules = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let ln = ln + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let indent = line.len() - line.trim_start().len();
        let trimmed = line.trim();
        if let Some(rest) = trimmed.strip_prefix("name:") {
            name = Some(rest.trim().to_string());
        } else if let Some(rest) = trimmed.strip_prefix("generators:") {
            if alphabet.is_some() {
                return Err(perr(ln, indent + 1, "generators listed twice"));
            }
            let col0 = indent + "generators:".len();
            let mut names = Vec::new();
            let mut col = col0;
            for tok in rest.split(|c: char| c.is_whitespace() || c == ',') {
                col += 1;
                if !tok.is_empty() {
                    if !is_valid_name(tok) {
                        return Err(perr(ln, col, format!("invalid generator name '{tok}'")));
                    }
                    if names.iter().any(|n| n == tok) {
                        return Err(perr(ln, col, format!("duplicate generator '{tok}'")));
                    }
                    names.push(tok.to_string());
                }
                col += tok.len();
            }
            alphabet = Some(Alphabet::new(names)?);
        } else if trimmed == "rules:" {
            if alphabet.is_none() {
                return Err(perr(ln, indent + 1, "rules before generators"));
            }
            in_rules = true;
        } else if in_rules {
            let a = alphabet.as_ref().expect("checked above");
            let Some(arrow) = line.find("->") else {
                return Err(perr(ln, indent + 1, "expected 'lhs -> rhs'"));
            };
            let lhs_text = &line[..arrow];
            let lhs = parse_monomial_at(a, lhs_text.trim(), ln, indent + 1)?;
            if lhs.is_one() {
                return Err(perr(ln, indent + 1, "left side must be a nonempty monomial"));
            }
            let rhs = parse_poly_at(a, &line[arrow + 2..], ln, arrow + 3)?;
            rules.push(Rule::new(lhs, rhs, a)?);
        } else {
            return Err(perr(ln, indent + 1, format!("unexpected line '{trimmed}'")));
        }
    }
    let alphabet = alphabet.ok_or_else(|| perr(1, 1, "missing 'generators:' line"))?;
    Ok(PresentationFile { name, system: RewriteSystem::new(alphabet, rules) })
}

fn parse_monomial_at(a: &Alphabet, s: &str, line: usize, col: usize) -> Result<Monomial> {
    if s == "1" {
        return Ok(Monomial::one());
    }
    let mut gens = Vec::new();
    let mut c = col;
    for part in s.split('.') {
        let p = part.trim();
        let id = a.id(p).ok_or_else(|| perr(line, c, format!("unknown generator '{p}'")))?;
        gens.push(id);
        c += part.len() + 1;
    }
    Ok(Monomial::new(gens))
}

/// Parses a polynomial; `col` is the 1-based column of the first byte of `s`.
pub fn parse_poly_at(a: &Alphabet, s: &str, line: usize, col: usize) -> Result<NCPoly> {
    let bytes = s.as_bytes();
    let mut out = NCPoly::zero();
    let mut pos = 0;
    let mut first = true;
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    loop {
        skip_ws(&mut pos);
        if pos >= bytes.len() {
            if first {
                return Err(perr(line, col + pos, "empty right side"));
            }
            break;
        }
        let mut sign = 1;
        if bytes[pos] == b'+' || bytes[pos] == b'-' {
            if bytes[pos] == b'-' {
                sign = -1;
            }
            pos += 1;
            skip_ws(&mut pos);
        } else if !first {
            return Err(perr(line, col + pos, "expected '+' or '-'"));
        }
        first = false;
        let start = pos;
        let mut coeff = Scalar::int(sign);
        let mut explicit = false;
        if pos < bytes.len() && bytes[pos] == b'[' {
            let close = s[pos..].find(']').ok_or_else(|| perr(line, col + pos, "unclosed '['"))? + pos;
            let c = Scalar::parse(&s[pos + 1..close]).map_err(|e| Error::Parse(e.offset(line, col + pos)))?;
            coeff = &coeff * &c;
            pos = close + 1;
            explicit = true;
        } else if pos < bytes.len() && bytes[pos].is_ascii_digit() {
            let end = s[pos..].find(|c: char| !(c.is_ascii_digit() || c == '/')).map_or(s.len(), |e| e + pos);
            let r: BigRational =
                s[pos..end].parse().map_err(|_| perr(line, col + pos, format!("bad number '{}'", &s[pos..end])))?;
            coeff = &coeff * &Scalar::from(r);
            pos = end;
            explicit = true;
        }
        skip_ws(&mut pos);
        let mend = s[pos..].find(['+', '-']).map_or(s.len(), |e| e + pos);
        let mtext = s[pos..mend].trim();
        let mono = if mtext.is_empty() {
            if !explicit {
                return Err(perr(line, col + start, "empty term"));
            }
            Monomial::one()
        } else if mtext.contains(char::is_whitespace) && !mtext.contains('.') {
            return Err(perr(line, col + pos, format!("unexpected '{mtext}'")));
        } else {
            parse_monomial_at(a, mtext, line, col + pos)?
        };
        out.add_term(mono, coeff);
        pos = mend;
    }
    Ok(out)
}

/// Parses a standalone polynomial over `a`.
pub fn parse_poly(a: &Alphabet, s: &str) -> Result<NCPoly> {
    parse_poly_at(a, s, 1, 1)
}

/// Renders a system in the file format; parsing the output gives back the
/// same rules.
pub fn write_presentation(name: Option<&str>, sys: &RewriteSystem) -> String {
    let mut s = String::new();
    if let Some(n) = name {
        s.push_str(&format!("name: {n}\n"));
    }
    s.push_str(&format!("generators: {}\n", sys.alphabet().names().join(" ")));
    s.push_str("rules:\n");
    for r in sys.rules() {
        s.push_str(&format!("  {} -> {}\n", r.lhs().display(sys.alphabet()), r.rhs().display(sys.alphabet())));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "# toy\nname: toy\ngenerators: x y z\nrules:\n  y.x -> [q] x.y\n  z.x -> x.z - 1/2\n  z.y -> -[q^-1 + 1] y.z + 2 x + 1\n";

    #[test]
    fn parse_and_roundtrip() {
        let f = parse_presentation(SAMPLE).unwrap();
        assert_eq!(f.name.as_deref(), Some("toy"));
        assert_eq!(f.system.rules().len(), 3);
        let text = write_presentation(f.name.as_deref(), &f.system);
        let g = parse_presentation(&text).unwrap();
        assert_eq!(f.system.rules(), g.system.rules());
        assert_eq!(text, write_presentation(Some("toy"), &g.system));
    }

    #[test]
    fn error_positions() {
        let e = parse_presentation("generators: x y\nrules:\n  y.x -> x.w\n").unwrap_err();
        assert_eq!(e, perr(3, 12, "unknown generator 'w'"));
        let e = parse_presentation("generators: x y\nrules:\n  y.x -> [q^] x\n").unwrap_err();
        assert!(matches!(e, Error::Parse(ParseError { line: 3, .. })), "{e}");
        let e = parse_presentation("generators: x 9y\n").unwrap_err();
        assert_eq!(e, perr(1, 15, "invalid generator name '9y'"));
        assert!(matches!(
            parse_presentation("generators: x y\nrules:\n  x.y -> y.x\n"),
            Err(Error::IncompatibleRule { .. })
        ));
    }

    #[test]
    fn constants_and_signs() {
        let a = Alphabet::new(["x"]).unwrap();
        let p = parse_poly(&a, "-1/2 x + 3").unwrap();
        assert_eq!(p.display(&a).to_string(), "-1/2 x + 3");
        assert!(parse_poly(&a, "0").unwrap().is_zero());
    }
}
