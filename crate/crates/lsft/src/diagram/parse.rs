use super::{Event, EventKind, FrontDiagram, MiddleData, Pairing};
use crate::error::{Error, Result};

/// Parsed content of a diagram file.
#[derive(Debug, Clone)]
pub enum ParsedInput {
    Front(FrontDiagram),
    Middle(MiddleData),
}

/// Parse the line-oriented diagram grammar.
///
/// ```text
/// front v1          # or: middle v1
/// lcusp <row>
/// cross <row> [label]
/// rcusp <row>
/// divide
/// mark <row>
/// ```
///
/// `middle v1` files instead take `n <int>`, `pairL <i> <j>`,
/// `pairR <i> <j>`, and `mu <i> <int>` lines. `#` starts a comment.
pub fn parse(text: &str) -> Result<ParsedInput> {
    let mut lines = numbered_lines(text);
    let Some((ln, header)) = lines.next() else {
        return Err(Error::MalformedInput { line: 0, msg: "empty input".into() });
    };
    match header.as_str() {
        "front v1" => Ok(ParsedInput::Front(parse_front_body(lines)?)),
        "middle v1" => Ok(ParsedInput::Middle(parse_middle_body(lines)?)),
        other => Err(Error::MalformedInput {
            line: ln,
            msg: format!("expected `front v1` or `middle v1` header, got `{other}`"),
        }),
    }
}

pub fn parse_front(text: &str) -> Result<FrontDiagram> {
    match parse(text)? {
        ParsedInput::Front(d) => Ok(d),
        ParsedInput::Middle(_) => Err(Error::MalformedInput {
            line: 1,
            msg: "expected a front diagram, got middle data".into(),
        }),
    }
}

pub fn parse_middle(text: &str) -> Result<MiddleData> {
    match parse(text)? {
        ParsedInput::Middle(m) => Ok(m),
        ParsedInput::Front(_) => Err(Error::MalformedInput {
            line: 1,
            msg: "expected middle data, got a front diagram".into(),
        }),
    }
}

fn numbered_lines(text: &str) -> impl Iterator<Item = (usize, String)> + '_ {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line.to_string()))
        }
    })
}

fn parse_front_body(lines: impl Iterator<Item = (usize, String)>) -> Result<FrontDiagram> {
    let mut events = Vec::new();
    for (ln, line) in lines {
        let mut parts = line.split_whitespace();
        let word = parts.next().unwrap();
        let mut arg = |what: &str| -> Result<usize> {
            parts
                .next()
                .ok_or_else(|| Error::MalformedInput {
                    line: ln,
                    msg: format!("`{word}` needs a {what}"),
                })?
                .parse()
                .map_err(|_| Error::MalformedInput {
                    line: ln,
                    msg: format!("`{word}` needs a numeric {what}"),
                })
        };
        let kind = match word {
            "lcusp" => EventKind::LeftCusp(arg("row")?),
            "rcusp" => EventKind::RightCusp(arg("row")?),
            "cross" => {
                let row = arg("row")?;
                let label = match parts.next() {
                    None => None,
                    Some(s) => Some(s.parse::<u32>().map_err(|_| Error::MalformedInput {
                        line: ln,
                        msg: "crossing label must be an integer".into(),
                    })?),
                };
                EventKind::Crossing(row, label)
            }
            "divide" => EventKind::Divide,
            "mark" => EventKind::Mark(arg("row")?),
            other => {
                return Err(Error::MalformedInput {
                    line: ln,
                    msg: format!("unknown event `{other}`"),
                })
            }
        };
        events.push(Event { kind, line: ln });
    }
    if events.is_empty() {
        return Err(Error::MalformedInput { line: 0, msg: "no events".into() });
    }
    FrontDiagram::from_events(events, false)
}

fn parse_middle_body(lines: impl Iterator<Item = (usize, String)>) -> Result<MiddleData> {
    let mut n: Option<u32> = None;
    let mut pair_l: Vec<(u32, u32)> = Vec::new();
    let mut pair_r: Vec<(u32, u32)> = Vec::new();
    let mut mu: std::collections::BTreeMap<u32, i64> = Default::default();
    for (ln, line) in lines {
        let mut parts = line.split_whitespace();
        let word = parts.next().unwrap();
        let mut num = |what: &str| -> Result<i64> {
            parts
                .next()
                .ok_or_else(|| Error::MalformedInput {
                    line: ln,
                    msg: format!("`{word}` needs {what}"),
                })?
                .parse()
                .map_err(|_| Error::MalformedInput {
                    line: ln,
                    msg: format!("`{word}` needs numeric {what}"),
                })
        };
        match word {
            "n" => n = Some(num("a count")? as u32),
            "pairL" => {
                let i = num("two points")? as u32;
                let j = num("two points")? as u32;
                pair_l.push((i, j));
            }
            "pairR" => {
                let i = num("two points")? as u32;
                let j = num("two points")? as u32;
                pair_r.push((i, j));
            }
            "mu" => {
                let i = num("a point and a value")? as u32;
                let v = num("a point and a value")?;
                mu.insert(i, v);
            }
            other => {
                return Err(Error::MalformedInput {
                    line: ln,
                    msg: format!("unknown middle entry `{other}`"),
                })
            }
        }
    }
    let n = n.ok_or(Error::MalformedInput { line: 0, msg: "missing `n`".into() })?;
    let bl = Pairing::new(n, pair_l)?;
    let br = Pairing::new(n, pair_r)?;
    let mu: Vec<i64> = (1..=n).map(|i| mu.get(&i).copied().unwrap_or(0)).collect();
    MiddleData::new(n, bl, br, mu)
}

/// Built-in example diagrams.
pub fn builtin_source(name: &str) -> Option<&'static str> {
    match name {
        "trefoil" => Some(
            "front v1\n\
             lcusp 1\n\
             lcusp 3\n\
             cross 2\n\
             divide\n\
             cross 2\n\
             cross 2\n\
             rcusp 1\n\
             rcusp 1\n",
        ),
        "unknot" => Some("front v1\nlcusp 1\nmark 1\nrcusp 1\n"),
        "unknot-divided" => Some("front v1\nlcusp 1\ndivide\nrcusp 1\n"),
        "trefoil-undivided" => Some(
            "front v1\n\
             lcusp 1\n\
             lcusp 3\n\
             cross 2\n\
             mark 1\n\
             cross 2\n\
             cross 2\n\
             rcusp 1\n\
             rcusp 1\n",
        ),
        _ => None,
    }
}

pub fn builtin_names() -> &'static [&'static str] {
    &["trefoil", "unknot", "unknot-divided", "trefoil-undivided"]
}
