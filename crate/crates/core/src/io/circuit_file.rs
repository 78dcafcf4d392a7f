use std::collections::HashMap;
use std::fmt::Write;

use crate::circuit::{Circuit, Gate};
use crate::error::{Error, Result};

fn format_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Format { line, msg: msg.into() }
}

/// Writes the `.v/.i/.o` header, one gate per line, and cost blocks as
/// `.block <cost>` … `.endblock`.
pub fn serialize_circuit(c: &Circuit) -> String {
    let vars: Vec<String> = (0..c.width()).map(|i| format!("x{i}")).collect();
    let vars = vars.join(",");
    let mut s = format!(".v {vars}\n.i {vars}\n.o {vars}\nBEGIN\n");
    let mut blocks = c.blocks().iter().peekable();
    let mut open_until = None;
    for (i, g) in c.gates().iter().enumerate() {
        if let Some(b) = blocks.next_if(|b| b.start == i) {
            writeln!(s, ".block {}", b.cost).unwrap();
            open_until = Some(b.start + b.len);
        }
        writeln!(s, "{g}").unwrap();
        if open_until == Some(i + 1) {
            s.push_str(".endblock\n");
            open_until = None;
        }
    }
    s.push_str("END\n");
    s
}

pub fn parse_circuit(text: &str) -> Result<Circuit> {
    let mut names: Option<HashMap<String, u32>> = None;
    let mut circuit: Option<Circuit> = None;
    let mut open_block: Option<(usize, u64)> = None;
    let mut ended = false;
    for (idx, raw) in text.lines().enumerate() {
        let no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if ended {
            return Err(format_err(no, "content after END"));
        }
        let (head, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match (head, circuit.as_mut()) {
            (".v", None) => {
                let list: Vec<&str> = rest.split([',', ' ']).filter(|v| !v.is_empty()).collect();
                if list.is_empty() {
                    return Err(format_err(no, "empty variable list"));
                }
                let mut map = HashMap::new();
                for (i, v) in list.iter().enumerate() {
                    if map.insert(v.to_string(), i as u32).is_some() {
                        return Err(format_err(no, format!("variable {v} declared twice")));
                    }
                }
                names = Some(map);
            }
            (".i" | ".o" | ".c" | ".ol", None) => {}
            ("BEGIN", None) => {
                let map = names.as_ref().ok_or_else(|| format_err(no, "BEGIN before .v"))?;
                circuit = Some(Circuit::new(map.len() as u32).map_err(|e| format_err(no, e.to_string()))?);
            }
            ("END", Some(_)) => {
                if open_block.is_some() {
                    return Err(format_err(no, "unterminated .block"));
                }
                ended = true;
            }
            (".block", Some(c)) => {
                if open_block.is_some() {
                    return Err(format_err(no, "nested .block"));
                }
                let cost = rest.parse().map_err(|_| format_err(no, format!("bad block cost {rest:?}")))?;
                open_block = Some((c.len(), cost));
            }
            (".endblock", Some(c)) => {
                let (start, cost) = open_block.take().ok_or_else(|| format_err(no, ".endblock without .block"))?;
                c.add_block(start, c.len() - start, cost).map_err(|e| format_err(no, e.to_string()))?;
            }
            (_, Some(c)) if head.starts_with('t') => {
                let arity: usize = head[1..]
                    .parse()
                    .map_err(|_| format_err(no, format!("unknown gate {head}")))?;
                let map = names.as_ref().expect("set before BEGIN");
                let lines = rest
                    .split(',')
                    .map(|v| {
                        let v = v.trim();
                        map.get(v).copied().ok_or_else(|| format_err(no, format!("unknown variable {v:?}")))
                    })
                    .collect::<Result<Vec<u32>>>()?;
                if arity == 0 || lines.len() != arity {
                    return Err(format_err(no, format!("{head} needs {arity} lines, got {}", lines.len())));
                }
                let (target, controls) = lines.split_last().expect("arity > 0");
                if controls.contains(target) {
                    return Err(format_err(no, "target listed among controls"));
                }
                let g = Gate::new(controls, *target).map_err(|e| format_err(no, e.to_string()))?;
                c.push(g).map_err(|e| format_err(no, e.to_string()))?;
            }
            (_, Some(_)) => return Err(format_err(no, format!("unknown gate {head}"))),
            (_, None) => return Err(format_err(no, format!("unexpected {head:?} before BEGIN"))),
        }
    }
    if !ended {
        return Err(format_err(text.lines().count().max(1), "missing END"));
    }
    Ok(circuit.expect("END implies BEGIN"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wrap(body: &str, n: u32) -> String {
        let vars: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        format!(".v {}\nBEGIN\n{body}\nEND\n", vars.join(","))
    }

    #[test]
    fn single_gates() {
        let c = parse_circuit(&wrap("t1 x0", 3)).unwrap();
        assert_eq!(c.gates(), &[Gate::not(0)]);
        let c = parse_circuit(&wrap("t3 x2,x1,x0", 3)).unwrap();
        assert_eq!(c.gates(), &[Gate::toffoli(1, 2, 0)]);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(
            parse_circuit(&wrap("t1 x0\nf2 x0,x1", 3)).unwrap_err(),
            Error::Format { line: 4, msg: "unknown gate f2".into() }
        );
        assert!(matches!(
            parse_circuit(&wrap("t2 x1,x1", 3)),
            Err(Error::Format { line: 3, .. })
        ));
        assert!(matches!(parse_circuit(&wrap("t2 x1,x7", 3)), Err(Error::Format { line: 3, .. })));
        assert!(matches!(parse_circuit(".v a,b\nBEGIN\nt1 a\n"), Err(Error::Format { .. })));
    }

    #[test]
    fn named_variables() {
        let c = parse_circuit(".v a b c\n.i a,b,c\n.o a,b,c\nBEGIN\nt2 c,a\nEND\n").unwrap();
        assert_eq!(c.gates(), &[Gate::cnot(2, 0)]);
    }

    #[test]
    fn blocks_round_trip() {
        let mut c = Circuit::from_gates(7, [Gate::not(0), Gate::cnot(0, 1), Gate::toffoli(0, 1, 2)]).unwrap();
        c.add_block(1, 2, 40).unwrap();
        let text = serialize_circuit(&c);
        assert!(text.contains(".block 40\nt2 x0,x1\nt3 x0,x1,x2\n.endblock\n"));
        assert_eq!(parse_circuit(&text).unwrap(), c);
    }
}
