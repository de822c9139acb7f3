//! Plain-text circuit diagrams: one line per subsystem, time running left to
//! right. Controls are `*`, targets `+`, swapped wires `x`, shifted wires `S`,
//! and `|` marks a wire crossed by a gate without being acted on.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::gates::GateId;

/// Symbol for each wire of an `n`-wire register; `None` where the gate does
/// not reach.
fn column(gate: &GateId, n: usize) -> Vec<Option<char>> {
    let mut col = vec![None; n];
    let pair = |col: &mut Vec<Option<char>>, a: char, b: char| {
        if n >= 2 {
            col[0] = Some(a);
            col[1] = Some(b);
        }
    };
    match gate {
        GateId::Identity => {}
        GateId::Cnot1 => pair(&mut col, '*', '+'),
        GateId::Cnot2 => pair(&mut col, '+', '*'),
        GateId::Swap => pair(&mut col, 'x', 'x'),
        GateId::CyclicShift => col.fill(Some('S')),
        GateId::Embedded { inner, positions } => {
            let sub = column(inner, positions.len());
            for (&p, sym) in positions.iter().zip(sub) {
                if p < n {
                    col[p] = sym;
                }
            }
        }
    }
    let touched: Vec<usize> = (0..n).filter(|&i| col[i].is_some()).collect();
    if let (Some(&lo), Some(&hi)) = (touched.first(), touched.last()) {
        for slot in &mut col[lo..=hi] {
            slot.get_or_insert('|');
        }
    }
    col
}

pub fn render_circuit(n: usize, gates: &[GateId]) -> String {
    let columns: Vec<Vec<Option<char>>> = gates.iter().map(|g| column(g, n)).collect();
    let label_width = format!("q{}", n.saturating_sub(1)).len();
    let mut out = String::new();
    for wire in 0..n {
        let label = format!("q{wire}");
        out.push_str(&label);
        out.push_str(&" ".repeat(label_width - label.len()));
        out.push_str(": -");
        for col in &columns {
            out.push(col[wire].unwrap_or('-'));
            out.push('-');
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::boxed::Box;

    #[test]
    fn qubit_swap_circuit() {
        let text = render_circuit(2, &[GateId::Cnot1, GateId::Cnot2, GateId::Cnot1]);
        assert_eq!(text, "q0: -*-+-*-\nq1: -+-*-+-\n");
    }

    #[test]
    fn embedded_gate_crosses_middle_wire() {
        let gate = GateId::Embedded {
            inner: Box::new(GateId::Cnot1),
            positions: vec![2, 0],
        };
        let text = render_circuit(3, &[gate, GateId::Identity]);
        assert_eq!(text, "q0: -+---\nq1: -|---\nq2: -*---\n");
    }
}
