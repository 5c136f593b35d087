use super::table::GroupTable;
use crate::error::{Error, Result};

/// Parse the group spec mini-language, case-insensitively:
///
/// ```text
/// spec := term ( 'x' term )*
/// term := 'C' n | 'D' n | 'S' n | 'A' n | 'C' a ':' b ':' 'C' c | 'G18'
/// ```
pub fn parse_spec(input: &str) -> Result<GroupTable> {
    let toks = lex(input)?;
    let mut pos = 0usize;
    let g = parse_product(&toks, &mut pos, input)?;
    if pos != toks.len() {
        return Err(Error::ParseSpec(format!(
            "{input}: trailing tokens after position {pos}"
        )));
    }
    Ok(g)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Letter(char), // one of c d s a g (lowercased)
    Num(usize),
    Colon,
    Times,
    G18,
}

fn lex(input: &str) -> Result<Vec<Tok>> {
    let lower = input.to_ascii_lowercase();
    let mut toks = Vec::new();
    let mut chars = lower.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' => {
                chars.next();
            }
            ':' => {
                chars.next();
                toks.push(Tok::Colon);
            }
            '0'..='9' => {
                let mut n = 0usize;
                while let Some(&d) = chars.peek() {
                    if let Some(v) = d.to_digit(10) {
                        n = n * 10 + v as usize;
                        if n > 1_000_000 {
                            return Err(Error::ParseSpec(format!("{input}: number too large")));
                        }
                        chars.next();
                    } else {
                        break;
                    }
                }
                toks.push(Tok::Num(n));
            }
            'g' => {
                chars.next();
                // only G18 starts with g
                let mut n = 0usize;
                while let Some(&d) = chars.peek() {
                    if let Some(v) = d.to_digit(10) {
                        n = n * 10 + v as usize;
                        chars.next();
                    } else {
                        break;
                    }
                }
                if n != 18 {
                    return Err(Error::ParseSpec(format!("{input}: unknown group G{n}")));
                }
                toks.push(Tok::G18);
            }
            'c' | 'd' | 's' | 'a' => {
                chars.next();
                toks.push(Tok::Letter(c));
            }
            'x' => {
                chars.next();
                toks.push(Tok::Times);
            }
            other => {
                return Err(Error::ParseSpec(format!(
                    "{input}: unexpected character '{other}'"
                )))
            }
        }
    }
    Ok(toks)
}

fn parse_product(toks: &[Tok], pos: &mut usize, input: &str) -> Result<GroupTable> {
    let mut acc = parse_term(toks, pos, input)?;
    while *pos < toks.len() && toks[*pos] == Tok::Times {
        *pos += 1;
        let rhs = parse_term(toks, pos, input)?;
        acc = GroupTable::direct_product(&acc, &rhs)?;
    }
    Ok(acc)
}

fn expect_num(toks: &[Tok], pos: &mut usize, input: &str) -> Result<usize> {
    match toks.get(*pos) {
        Some(Tok::Num(n)) => {
            *pos += 1;
            Ok(*n)
        }
        _ => Err(Error::ParseSpec(format!("{input}: expected a number"))),
    }
}

fn parse_term(toks: &[Tok], pos: &mut usize, input: &str) -> Result<GroupTable> {
    match toks.get(*pos) {
        Some(Tok::G18) => {
            *pos += 1;
            GroupTable::g18()
        }
        Some(Tok::Letter('c')) => {
            *pos += 1;
            let a = expect_num(toks, pos, input)?;
            if toks.get(*pos) == Some(&Tok::Colon) {
                *pos += 1;
                let b = expect_num(toks, pos, input)?;
                if toks.get(*pos) != Some(&Tok::Colon) {
                    return Err(Error::ParseSpec(format!("{input}: expected ':'")));
                }
                *pos += 1;
                if toks.get(*pos) != Some(&Tok::Letter('c')) {
                    return Err(Error::ParseSpec(format!("{input}: expected 'C'")));
                }
                *pos += 1;
                let c = expect_num(toks, pos, input)?;
                GroupTable::metacyclic(a, b, c, &format!("C {a} : {b} : C {c}"), "x")
                    .map_err(|e| match e {
                        Error::SizeLimit(a, b) => Error::SizeLimit(a, b),
                        other => Error::ParseSpec(format!("{input}: {other}")),
                    })
            } else {
                GroupTable::cyclic(a)
            }
        }
        Some(Tok::Letter('d')) => {
            *pos += 1;
            let n = expect_num(toks, pos, input)?;
            GroupTable::dihedral(n)
        }
        Some(Tok::Letter('s')) => {
            *pos += 1;
            let n = expect_num(toks, pos, input)?;
            GroupTable::symmetric(n)
        }
        Some(Tok::Letter('a')) => {
            *pos += 1;
            let n = expect_num(toks, pos, input)?;
            GroupTable::alternating(n)
        }
        _ => Err(Error::ParseSpec(format!(
            "{input}: expected a group term at token {pos}"
        ))),
    }
}
