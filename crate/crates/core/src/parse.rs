//! Group spec strings.
//!
//! ```text
//! NAME    := "C"int | "D"int | "S"int | "A"int | "Q8" | "V4"
//! PRODUCT := NAME ("x" NAME)*
//! PERM    := "perm(" degree "):" generator ("," generator)*
//! ```
//!
//! A generator is one or more cycles of space-separated 1-based points,
//! e.g. `(1 2)(3 4)`. `D<n>` is dihedral of order `2n`. The strings `1` and
//! `trivial` are accepted as aliases for `C1`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{self, FiniteGroup, DEFAULT_ORDER_BOUND};

pub fn parse_group(spec: &str) -> Result<FiniteGroup> {
    parse_group_bounded(spec, DEFAULT_ORDER_BOUND)
}

pub fn parse_group_bounded(spec: &str, bound: usize) -> Result<FiniteGroup> {
    let trimmed = spec.trim();
    let offset = spec.len() - spec.trim_start().len();
    let group = if let Some(rest) = trimmed.strip_prefix("perm(") {
        parse_perm(spec, offset + 5, rest, bound)?
    } else {
        parse_product(spec, offset, trimmed, bound)?
    };
    Ok(group.with_name(trimmed))
}

fn syntax(spec: &str, offset: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        spec: spec.to_string(),
        offset,
        message: message.into(),
    }
}

#[derive(Clone, Copy, Debug)]
enum Named {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Quaternion,
    Klein,
}

impl Named {
    fn order(self) -> u128 {
        let factorial = |n: usize| (1..=n as u128).fold(1u128, |acc, k| acc.saturating_mul(k));
        match self {
            Named::Cyclic(n) => n as u128,
            Named::Dihedral(n) => 2 * n as u128,
            Named::Symmetric(n) => factorial(n),
            Named::Alternating(n) => (factorial(n) / 2).max(1),
            Named::Quaternion => 8,
            Named::Klein => 4,
        }
    }

    fn build(self) -> Result<FiniteGroup> {
        match self {
            Named::Cyclic(n) => group::cyclic(n),
            Named::Dihedral(n) => group::dihedral(n),
            Named::Symmetric(n) => group::symmetric(n),
            Named::Alternating(n) => group::alternating(n),
            Named::Quaternion => group::quaternion8(),
            Named::Klein => {
                let c2 = Arc::new(group::cyclic(2)?);
                let p = group::direct_product(&c2, &c2, 4)?;
                Ok((*p.group).clone())
            }
        }
    }
}

fn parse_name(spec: &str, offset: usize, token: &str) -> Result<Named> {
    match token {
        "Q8" => return Ok(Named::Quaternion),
        "V4" => return Ok(Named::Klein),
        "1" | "trivial" => return Ok(Named::Cyclic(1)),
        _ => {}
    }
    let mut chars = token.chars();
    let kind = chars
        .next()
        .ok_or_else(|| syntax(spec, offset, "empty group name"))?;
    let digits = chars.as_str();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(syntax(spec, offset, format!("unknown group name {token:?}")));
    }
    let n: usize = digits
        .parse()
        .map_err(|_| syntax(spec, offset + 1, "integer out of range"))?;
    let named = match kind {
        'C' => Named::Cyclic(n),
        'D' => Named::Dihedral(n),
        'S' => Named::Symmetric(n),
        'A' => Named::Alternating(n),
        _ => return Err(syntax(spec, offset, format!("unknown group family {kind:?}"))),
    };
    if matches!(named, Named::Cyclic(0) | Named::Dihedral(0)) {
        return Err(syntax(spec, offset + 1, "index must be positive"));
    }
    Ok(named)
}

fn parse_product(spec: &str, offset: usize, body: &str, bound: usize) -> Result<FiniteGroup> {
    let mut factors = Vec::new();
    let mut pos = offset;
    for token in body.split('x') {
        factors.push(parse_name(spec, pos, token)?);
        pos += token.len() + 1;
    }
    let order = factors.iter().fold(1u128, |acc, f| acc.saturating_mul(f.order()));
    if order > bound as u128 {
        return Err(Error::OrderBound { order, bound });
    }
    let mut acc = Arc::new(factors[0].build()?);
    for f in &factors[1..] {
        let next = Arc::new(f.build()?);
        acc = group::direct_product(&acc, &next, bound)?.group;
    }
    Ok(Arc::try_unwrap(acc).unwrap_or_else(|a| (*a).clone()))
}

fn parse_perm(spec: &str, offset: usize, rest: &str, bound: usize) -> Result<FiniteGroup> {
    let close = rest
        .find(')')
        .ok_or_else(|| syntax(spec, offset, "missing ')' after degree"))?;
    let degree: usize = rest[..close]
        .trim()
        .parse()
        .map_err(|_| syntax(spec, offset, "degree must be a positive integer"))?;
    if degree == 0 {
        return Err(syntax(spec, offset, "degree must be positive"));
    }
    let after = &rest[close + 1..];
    let body = after
        .strip_prefix(':')
        .ok_or_else(|| syntax(spec, offset + close + 1, "expected ':' after perm(degree)"))?;
    let body_offset = offset + close + 2;
    if body.trim().is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let mut generators = Vec::new();
    let mut pos = body_offset;
    for gen_text in body.split(',') {
        generators.push(parse_generator(spec, pos, gen_text, degree)?);
        pos += gen_text.len() + 1;
    }
    group::permutation_group(degree, generators, bound)
}

/// Parses a product of cycles such as `(1 2)(3 4)` into 0-based images.
fn parse_generator(spec: &str, offset: usize, text: &str, degree: usize) -> Result<Vec<usize>> {
    let mut perm: Vec<usize> = (0..degree).collect();
    let mut rest = text;
    let mut pos = offset;
    let mut cycles = 0;
    loop {
        let skipped = rest.len() - rest.trim_start().len();
        rest = rest.trim_start();
        pos += skipped;
        if rest.is_empty() {
            break;
        }
        let inner_start = rest
            .strip_prefix('(')
            .ok_or_else(|| syntax(spec, pos, "expected '(' to start a cycle"))?;
        let end = inner_start
            .find(')')
            .ok_or_else(|| syntax(spec, pos, "unterminated cycle"))?;
        let mut points = Vec::new();
        for tok in inner_start[..end].split_whitespace() {
            let p: usize = tok
                .parse()
                .map_err(|_| syntax(spec, pos, format!("bad point {tok:?}")))?;
            if p == 0 || p > degree {
                return Err(syntax(spec, pos, format!("point {p} outside 1..={degree}")));
            }
            if points.contains(&(p - 1)) {
                return Err(syntax(spec, pos, format!("point {p} repeated in a cycle")));
            }
            points.push(p - 1);
        }
        // Apply this cycle after the ones already read.
        let mut cycle: Vec<usize> = (0..degree).collect();
        for (i, &a) in points.iter().enumerate() {
            cycle[a] = points[(i + 1) % points.len()];
        }
        perm = perm.iter().map(|&x| cycle[x]).collect();
        cycles += 1;
        pos += end + 2;
        rest = &inner_start[end + 1..];
    }
    if cycles == 0 {
        return Err(syntax(spec, offset, "empty generator"));
    }
    Ok(perm)
}
