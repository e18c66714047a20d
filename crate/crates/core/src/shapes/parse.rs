use super::{CylindricShape, Shape, ShapeError, ShiftedSkewShape, SkewShape};

const SHIFTED_PREFIX: &str = "shifted:";

fn malformed(text: &str, reason: impl Into<String>) -> ShapeError {
    ShapeError::Malformed { text: text.to_string(), reason: reason.into() }
}

/// One `/`-separated component: compact digits, or comma-separated numbers.
fn parse_parts(text: &str, component: &str) -> Result<Vec<usize>, ShapeError> {
    if component.is_empty() {
        return Ok(Vec::new());
    }
    if component.contains(',') {
        let mut pieces: Vec<&str> = component.split(',').collect();
        if pieces.last() == Some(&"") {
            pieces.pop();
        }
        pieces
            .iter()
            .map(|p| {
                if p.is_empty() || !p.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(malformed(text, format!("bad part {p:?}")));
                }
                p.parse::<usize>().map_err(|_| malformed(text, format!("part {p:?} out of range")))
            })
            .collect()
    } else {
        component
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| malformed(text, format!("unexpected {c:?}"))))
            .collect()
    }
}

/// Parses `λ[/μ[/d]]`, optionally prefixed by `shifted:`.
///
/// Single-digit parts may be run together (`6533/21`); otherwise separate by
/// commas (`12,10,6,6/4,2`, or `12,` for a single multi-digit part).
pub fn parse_shape(text: &str) -> Result<Shape, ShapeError> {
    let trimmed = text.trim();
    let (shifted, body) = match trimmed.strip_prefix(SHIFTED_PREFIX) {
        Some(rest) => (true, rest),
        None => (false, trimmed),
    };
    let comps: Vec<&str> = body.split('/').collect();
    if comps[0].is_empty() {
        return Err(malformed(text, "missing lambda"));
    }
    let lambda = parse_parts(text, comps[0])?;
    match (comps.len(), shifted) {
        (1 | 2, _) => {
            let mu = if comps.len() == 2 { parse_parts(text, comps[1])? } else { Vec::new() };
            if shifted {
                Ok(Shape::Shifted(ShiftedSkewShape::new(lambda, mu)?))
            } else {
                Ok(Shape::Skew(SkewShape::new(lambda, mu)?))
            }
        }
        (3, false) => {
            let mu = parse_parts(text, comps[1])?;
            let d_text = comps[2];
            if d_text.is_empty() || !d_text.bytes().all(|b| b.is_ascii_digit()) {
                return Err(malformed(text, format!("bad shift {d_text:?}")));
            }
            let d = d_text.parse().map_err(|_| malformed(text, "shift out of range"))?;
            Ok(Shape::Cylindric(CylindricShape::new(lambda, mu, d)?))
        }
        (3, true) => Err(malformed(text, "shifted shapes take no cylindric shift")),
        _ => Err(malformed(text, "too many '/' separators")),
    }
}

fn format_parts(parts: &[usize]) -> String {
    if parts.iter().all(|&p| p <= 9) {
        parts.iter().map(|p| p.to_string()).collect()
    } else {
        let joined = parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
        if parts.len() == 1 {
            joined + ","
        } else {
            joined
        }
    }
}

fn trimmed_mu(mu: &[usize]) -> &[usize] {
    let end = mu.iter().rposition(|&m| m != 0).map_or(0, |i| i + 1);
    &mu[..end]
}

/// Canonical text form; inverse of [`parse_shape`].
pub fn format_shape(shape: &Shape) -> String {
    match shape {
        Shape::Skew(s) => {
            let mu = trimmed_mu(s.mu());
            if mu.is_empty() {
                format_parts(s.lambda())
            } else {
                format!("{}/{}", format_parts(s.lambda()), format_parts(mu))
            }
        }
        Shape::Cylindric(c) => {
            format!("{}/{}/{}", format_parts(c.lambda()), format_parts(trimmed_mu(c.mu())), c.d())
        }
        Shape::Shifted(s) => {
            if s.mu().is_empty() {
                format!("{SHIFTED_PREFIX}{}", format_parts(s.lambda()))
            } else {
                format!("{SHIFTED_PREFIX}{}/{}", format_parts(s.lambda()), format_parts(s.mu()))
            }
        }
    }
}

impl std::fmt::Display for Shape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&format_shape(self))
    }
}

impl std::fmt::Display for SkewShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&format_shape(&Shape::Skew(self.clone())))
    }
}

impl std::fmt::Display for CylindricShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&format_shape(&Shape::Cylindric(self.clone())))
    }
}

impl std::fmt::Display for ShiftedSkewShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&format_shape(&Shape::Shifted(self.clone())))
    }
}

impl std::str::FromStr for Shape {
    type Err = ShapeError;

    fn from_str(s: &str) -> Result<Self, ShapeError> {
        parse_shape(s)
    }
}
