use super::{BraidWord, Generator, GroupKind, WordError};

fn subscript_digit(c: char) -> Option<char> {
    let d = (c as u32).checked_sub('₀' as u32)?;
    (d < 10).then(|| char::from_digit(d, 10).unwrap())
}

fn parse_token(tok: &str) -> Result<Generator, WordError> {
    let bad = || WordError::Syntax(tok.to_string());
    let mut chars = tok.chars();
    let head = chars.next().ok_or_else(bad)?;
    let rest: String = chars.collect();

    let (mut gen_inverse, virtual_) = match head {
        's' | 'σ' => (false, false),
        'S' => (true, false),
        'r' | 'ρ' => (false, true),
        _ => return Err(bad()),
    };

    // optional '_' before the index; ascii or subscript digits
    let body = rest.strip_prefix('_').unwrap_or(&rest);
    let mut digits = String::new();
    let mut tail = body;
    for (pos, c) in body.char_indices() {
        if c.is_ascii_digit() {
            digits.push(c);
        } else if let Some(d) = subscript_digit(c) {
            digits.push(d);
        } else {
            tail = &body[pos..];
            break;
        }
        tail = &body[pos + c.len_utf8()..];
    }
    if digits.is_empty() {
        return Err(bad());
    }
    let index: usize = digits.parse().map_err(|_| bad())?;

    match tail {
        "" => {}
        "'" | "^-1" | "⁻¹" | "^{-1}" if head != 'S' => gen_inverse = true,
        _ => return Err(bad()),
    }

    Ok(if virtual_ {
        Generator::rho(index)
    } else if gen_inverse {
        Generator::sigma_inv(index)
    } else {
        Generator::sigma(index)
    })
}

pub(super) fn parse_word(text: &str, strands: usize, group: GroupKind) -> Result<BraidWord, WordError> {
    let letters = text
        .split_whitespace()
        .map(parse_token)
        .collect::<Result<Vec<_>, _>>()?;
    BraidWord::new(group, strands, letters)
}
