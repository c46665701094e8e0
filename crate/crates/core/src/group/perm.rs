//! Permutation generating sets and cycle notation.

use crate::error::{Error, Result};

/// Named permutations of `{1..degree}`, stored as 0-based image arrays.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationGenSet {
    degree: usize,
    generators: Vec<(String, Vec<u32>)>,
}

impl PermutationGenSet {
    pub fn new(degree: usize) -> Self {
        Self {
            degree,
            generators: Vec::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[(String, Vec<u32>)] {
        &self.generators
    }

    /// Adds a generator given in disjoint-cycle notation, e.g. `(1 2 3)(4 5)`.
    pub fn add_cycles(&mut self, name: &str, cycles: &str) -> Result<()> {
        let images = parse_cycles(cycles, self.degree).map_err(Error::MalformedSpec)?;
        self.generators.push((name.to_string(), images));
        Ok(())
    }

    pub fn add_images(&mut self, name: &str, images: Vec<u32>) -> Result<()> {
        if images.len() != self.degree || !is_bijection(&images) {
            return Err(Error::MalformedSpec(format!(
                "generator {name} is not a permutation of degree {}",
                self.degree
            )));
        }
        self.generators.push((name.to_string(), images));
        Ok(())
    }
}

fn is_bijection(images: &[u32]) -> bool {
    let mut seen = vec![false; images.len()];
    for &x in images {
        match seen.get_mut(x as usize) {
            Some(s) if !*s => *s = true,
            _ => return false,
        }
    }
    true
}

/// Parses disjoint cycles over `{1..degree}` into a 0-based image array.
/// `()` and the empty string denote the identity.
pub fn parse_cycles(text: &str, degree: usize) -> std::result::Result<Vec<u32>, String> {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    let mut seen = vec![false; degree];
    let mut rest = text.trim();
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(format!("expected `(` in cycle notation `{text}`"));
        };
        let Some(close) = body.find(')') else {
            return Err(format!("unclosed cycle in `{text}`"));
        };
        let mut points = Vec::new();
        for tok in body[..close].split(|c: char| c.is_whitespace() || c == ',') {
            if tok.is_empty() {
                continue;
            }
            let pt: usize = tok
                .parse()
                .map_err(|_| format!("bad point `{tok}` in `{text}`"))?;
            if pt == 0 || pt > degree {
                return Err(format!("point {pt} outside 1..={degree}"));
            }
            if seen[pt - 1] {
                return Err(format!("point {pt} repeated in `{text}`"));
            }
            seen[pt - 1] = true;
            points.push(pt - 1);
        }
        for (k, &pt) in points.iter().enumerate() {
            images[pt] = points[(k + 1) % points.len()] as u32;
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(images)
}

/// Disjoint-cycle notation (1-based) for a 0-based image array; `()` for the identity.
pub fn format_cycles(images: &[u32]) -> String {
    let mut seen = vec![false; images.len()];
    let mut out = String::new();
    for start in 0..images.len() {
        if seen[start] || images[start] as usize == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push((x + 1).to_string());
            x = images[x] as usize;
        }
        out.push('(');
        out.push_str(&cycle.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_round_trip() {
        let p = parse_cycles("(1 2 3)(5 4)", 5).unwrap();
        assert_eq!(p, vec![1, 2, 0, 4, 3]);
        assert_eq!(format_cycles(&p), "(1 2 3)(4 5)");
        assert_eq!(format_cycles(&parse_cycles("()", 3).unwrap()), "()");
    }

    #[test]
    fn rejects_bad_cycles() {
        assert!(parse_cycles("(1 2)(2 3)", 3).is_err());
        assert!(parse_cycles("(1 4)", 3).is_err());
        assert!(parse_cycles("1 2", 3).is_err());
    }
}
