use crate::error::{Error, Result};
use crate::perm::Permutation;

fn format_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Format { line, msg: msg.into() }
}

/// Reads `n <width>` followed by 2^n decimal values, one per line.
pub fn parse_spec(text: &str) -> Result<Permutation> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let (hline, header) = lines
        .by_ref()
        .find(|(_, l)| !l.is_empty())
        .ok_or_else(|| format_err(1, "empty spec"))?;
    let width: u32 = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", w] => w.parse().map_err(|_| format_err(hline, format!("bad width {w:?}")))?,
        _ => return Err(format_err(hline, "expected header `n <width>`")),
    };
    crate::perm::check_width(width)?;
    let size = 1usize << width;
    let mut table = Vec::with_capacity(size);
    let mut last = hline;
    for (no, l) in lines {
        if l.is_empty() {
            continue;
        }
        if table.len() == size {
            return Err(format_err(no, format!("more than {size} values")));
        }
        let v: u32 = l.parse().map_err(|_| format_err(no, format!("bad value {l:?}")))?;
        table.push(v);
        last = no;
    }
    if table.len() != size {
        return Err(format_err(last, format!("expected {size} values, found {}", table.len())));
    }
    Permutation::new(width, table)
}

pub fn serialize_spec(p: &Permutation) -> String {
    let mut s = String::with_capacity(p.size() * 8 + 8);
    s.push_str(&format!("n {}\n", p.width()));
    for v in p.table() {
        s.push_str(&v.to_string());
        s.push('\n');
    }
    s
}
