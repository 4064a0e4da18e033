//! Parser for the deterministic polynomial text form, the inverse of
//! `Poly::text`. Used by tests, golden fixtures, and the CLI.

use crate::algebra::{Discipline, GeneratorId, Monomial, Poly};
use crate::error::{Error, Result};

fn bad(msg: String) -> Error {
    Error::MalformedInput { line: 0, msg }
}

/// Parse a generator token such as `q0`, `p12`, `aL13`, `bR34`, `a10_13`.
pub fn parse_generator(tok: &str) -> Result<GeneratorId> {
    let (tag, rest) = if let Some(r) = tok.strip_prefix("aL") {
        ("aL", r)
    } else if let Some(r) = tok.strip_prefix("aR") {
        ("aR", r)
    } else if let Some(r) = tok.strip_prefix("bL") {
        ("bL", r)
    } else if let Some(r) = tok.strip_prefix("bR") {
        ("bR", r)
    } else if let Some(r) = tok.strip_prefix('q') {
        ("q", r)
    } else if let Some(r) = tok.strip_prefix('p') {
        ("p", r)
    } else if let Some(r) = tok.strip_prefix('a') {
        ("a", r)
    } else if let Some(r) = tok.strip_prefix('b') {
        ("b", r)
    } else {
        return Err(bad(format!("unknown generator token `{tok}`")));
    };
    let pair = |rest: &str| -> Result<(u32, u32)> {
        if let Some((i, j)) = rest.split_once('_') {
            Ok((
                i.parse().map_err(|_| bad(format!("bad index in `{tok}`")))?,
                j.parse().map_err(|_| bad(format!("bad index in `{tok}`")))?,
            ))
        } else if rest.len() == 2 {
            let i = rest[..1].parse().map_err(|_| bad(format!("bad index in `{tok}`")))?;
            let j = rest[1..].parse().map_err(|_| bad(format!("bad index in `{tok}`")))?;
            Ok((i, j))
        } else {
            Err(bad(format!("pair generator `{tok}` needs two indices")))
        }
    };
    Ok(match tag {
        "q" => GeneratorId::Q(rest.parse().map_err(|_| bad(format!("bad index in `{tok}`")))?),
        "p" => GeneratorId::P(rest.parse().map_err(|_| bad(format!("bad index in `{tok}`")))?),
        "aL" => {
            let (i, j) = pair(rest)?;
            GeneratorId::alpha_l(i, j)
        }
        "aR" => {
            let (i, j) = pair(rest)?;
            GeneratorId::alpha_r(i, j)
        }
        "bL" => {
            let (i, j) = pair(rest)?;
            GeneratorId::beta_l(i, j)
        }
        "bR" => {
            let (i, j) = pair(rest)?;
            GeneratorId::beta_r(i, j)
        }
        "a" => {
            let (i, j) = pair(rest)?;
            GeneratorId::alpha(i, j)
        }
        "b" => {
            let (i, j) = pair(rest)?;
            GeneratorId::beta(i, j)
        }
        _ => unreachable!(),
    })
}

/// Parse the text form of a polynomial: monomials joined by `+`, factors by
/// `*`, `t^k` for Laurent powers of t, `g^e` for repeated generators.
pub fn parse_poly(text: &str, discipline: Discipline) -> Result<Poly> {
    let text = text.trim();
    if text == "0" || text.is_empty() {
        return Ok(Poly::zero(discipline));
    }
    let mut out = Poly::zero(discipline);
    for mono in text.split('+').map(str::trim) {
        if mono == "1" {
            out.toggle(Monomial::one(discipline));
            continue;
        }
        let mut t_exp: i64 = 0;
        let mut factors: Vec<(GeneratorId, u32)> = Vec::new();
        for tok in mono.split('*').map(str::trim) {
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => {
                    (b, e.parse::<i64>().map_err(|_| bad(format!("bad exponent in `{tok}`")))?)
                }
                None => (tok, 1),
            };
            if base == "t" {
                t_exp += exp;
            } else if base == "1" {
                // harmless unit factor
            } else {
                let g = parse_generator(base)?;
                if exp < 0 {
                    return Err(bad(format!("negative exponent on `{base}`")));
                }
                factors.push((g, exp as u32));
            }
        }
        let m = match discipline {
            Discipline::Commutative => {
                let mut gens = std::collections::BTreeMap::new();
                for (g, e) in factors {
                    if e > 0 {
                        *gens.entry(g).or_insert(0) += e;
                    }
                }
                Monomial::Commutative { gens, t_exp }
            }
            Discipline::FreeWord => {
                if t_exp != 0 {
                    return Err(bad("t is not available in word monomials".into()));
                }
                let mut w = Vec::new();
                for (g, e) in factors {
                    for _ in 0..e {
                        w.push(g);
                    }
                }
                Monomial::Word(w)
            }
        };
        out.toggle(m);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_text_form() {
        for s in [
            "0",
            "1",
            "q0",
            "t*q0*q1*q2*p3 + q0*q1*q2*p4",
            "t^-1*p0",
            "bR12*aL14 + aL12*aL24",
            "q3^2*p3",
        ] {
            let p = parse_poly(s, Discipline::Commutative).unwrap();
            let back = parse_poly(&p.text(), Discipline::Commutative).unwrap();
            assert_eq!(p, back, "{s}");
        }
    }

    #[test]
    fn word_form() {
        let p = parse_poly("q0*q1 + q1*q0", Discipline::FreeWord).unwrap();
        assert_eq!(p.len(), 2);
    }
}
