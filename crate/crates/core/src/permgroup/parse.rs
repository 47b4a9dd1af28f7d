//! Group files: one generator per line in cycle notation `(0 1 2)(3 4)` or
//! image notation `[1,2,0,4,3]`. Blank lines and `#` comments are ignored.
//! An optional first line `degree N` fixes the degree; otherwise it is
//! inferred as one more than the largest moved point.

use super::{PermError, PermGroup, Permutation};

enum Generator {
    Cycles(Vec<Vec<usize>>),
    Images(Vec<usize>),
}

fn err(line: usize, column: usize, message: impl Into<String>) -> PermError {
    PermError::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Parses a group file. When `expected_degree` is given (the vertex count of
/// the graph the group acts on), the group is built on exactly that many
/// points and any conflicting degree is rejected.
pub fn parse_group(text: &str, expected_degree: Option<usize>) -> Result<PermGroup, PermError> {
    let mut declared: Option<(usize, usize)> = None;
    let mut gens: Vec<(usize, Generator)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        let col0 = content.len() - content.trim_start().len() + 1;
        if let Some(rest) = trimmed.strip_prefix("degree") {
            if declared.is_some() || !gens.is_empty() {
                return Err(err(lineno, col0, "`degree` must be the first line"));
            }
            let n = rest
                .trim()
                .parse::<usize>()
                .map_err(|_| err(lineno, col0 + 6, "expected an integer after `degree`"))?;
            declared = Some((n, lineno));
            continue;
        }
        let generator = match trimmed.as_bytes()[0] {
            b'(' => Generator::Cycles(parse_cycles(trimmed, lineno, col0)?),
            b'[' => Generator::Images(parse_images(trimmed, lineno, col0)?),
            _ => return Err(err(lineno, col0, "expected `(` or `[`")),
        };
        gens.push((lineno, generator));
    }

    let inferred = gens
        .iter()
        .map(|(_, g)| match g {
            Generator::Cycles(cs) => cs.iter().flatten().map(|&p| p + 1).max().unwrap_or(0),
            Generator::Images(im) => im.len(),
        })
        .max()
        .unwrap_or(0);
    let degree = match (declared, expected_degree) {
        (Some((n, line)), Some(e)) if n != e => {
            return Err(err(
                line,
                1,
                format!("declared degree {n} but the graph has {e} vertices"),
            ))
        }
        (Some((n, _)), _) => n,
        (None, Some(e)) => e,
        (None, None) => inferred,
    };
    if inferred > degree {
        return Err(PermError::DegreeMismatch {
            expected: degree,
            found: inferred,
        });
    }

    let mut perms = Vec::with_capacity(gens.len());
    for (line, g) in gens {
        let perm = match g {
            Generator::Cycles(cs) => Permutation::from_cycles(degree, &cs),
            Generator::Images(im) => {
                if im.len() != degree {
                    return Err(err(
                        line,
                        1,
                        format!("image list has length {} but the degree is {degree}", im.len()),
                    ));
                }
                Permutation::from_images(im)
            }
        }
        .map_err(|e| err(line, 1, e.to_string()))?;
        perms.push(perm);
    }
    PermGroup::new(perms, degree)
}

fn parse_cycles(s: &str, line: usize, col0: usize) -> Result<Vec<Vec<usize>>, PermError> {
    let bytes = s.as_bytes();
    let mut cycles = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b' ' | b'\t' => i += 1,
            b'(' => {
                let close = s[i..]
                    .find(')')
                    .map(|k| i + k)
                    .ok_or_else(|| err(line, col0 + i, "unclosed `(`"))?;
                let inner = &s[i + 1..close];
                let mut cycle = Vec::new();
                let mut offset = i + 1;
                for tok in inner.split([' ', ',', '\t']) {
                    if !tok.is_empty() {
                        let p = tok
                            .parse::<usize>()
                            .map_err(|_| err(line, col0 + offset, format!("bad point `{tok}`")))?;
                        cycle.push(p);
                    }
                    offset += tok.len() + 1;
                }
                if !cycle.is_empty() {
                    cycles.push(cycle);
                }
                i = close + 1;
            }
            _ => return Err(err(line, col0 + i, "unexpected character in cycle notation")),
        }
    }
    Ok(cycles)
}

fn parse_images(s: &str, line: usize, col0: usize) -> Result<Vec<usize>, PermError> {
    let end = s.rfind(']').ok_or_else(|| err(line, col0 + s.len(), "unclosed `[`"))?;
    if !s[end + 1..].trim().is_empty() {
        return Err(err(line, col0 + end + 1, "trailing characters after `]`"));
    }
    let mut images = Vec::new();
    let mut offset = 1;
    for tok in s[1..end].split(',') {
        let t = tok.trim();
        if !t.is_empty() {
            let p = t
                .parse::<usize>()
                .map_err(|_| err(line, col0 + offset, format!("bad image `{t}`")))?;
            images.push(p);
        }
        offset += tok.len() + 1;
    }
    Ok(images)
}

/// Writes generators in cycle notation, preceded by a `degree` line.
pub fn write_group(group: &PermGroup) -> String {
    let mut out = format!("degree {}\n", group.degree());
    for g in group.generators() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}
