//! Text and JSON renderings of operators, spectra and supports.

use mixwalk_core::charpoly::CharPoly;
use mixwalk_core::operators::NormalizedHermitian;
use mixwalk_core::spectrum::SpectrumSummary;
use mixwalk_core::supports::Support;
use mixwalk_core::{ArcIndex, Digraph, OpMatrix, Walk};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::error::{CliError, Result};

/// Operators that `build` can print.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Operator {
    /// Boundary `K`.
    #[value(name = "K")]
    K,
    /// Coin `C = 2K*K - I`.
    #[value(name = "C")]
    C,
    /// Shift `S` of the underlying graph.
    #[value(name = "S")]
    S,
    /// Twisted shift `S_θ`.
    #[value(name = "St")]
    STheta,
    /// Phase diagonal `D_θ`.
    #[value(name = "Dt")]
    DTheta,
    /// Transfer matrix `U_θ = S_θ C`.
    #[value(name = "U")]
    U,
    /// Grover transfer matrix of the underlying graph.
    #[value(name = "Ug")]
    Grover,
    /// η-Hermitian adjacency matrix.
    #[value(name = "H")]
    H,
    /// Normalized `H̃_η = D^{-1/2} H_η D^{-1/2}`.
    #[value(name = "Ht")]
    HTilde,
    /// Digon locator `R`.
    #[value(name = "R")]
    R,
    #[value(name = "Ft")]
    FT,
    #[value(name = "Fo")]
    FO,
    /// Arc matrix `A(G)`.
    #[value(name = "A")]
    A,
}

impl Operator {
    pub fn label(self) -> &'static str {
        match self {
            Operator::K => "K",
            Operator::C => "C",
            Operator::S => "S",
            Operator::STheta => "S_theta",
            Operator::DTheta => "D_theta",
            Operator::U => "U_theta",
            Operator::Grover => "U",
            Operator::H => "H_eta",
            Operator::HTilde => "H~_eta",
            Operator::R => "R",
            Operator::FT => "F_t",
            Operator::FO => "F_o",
            Operator::A => "A",
        }
    }

    fn arc_indexed(self) -> bool {
        !matches!(self, Operator::H | Operator::A)
    }
}

/// Text dump of one operator: a header naming the index sets, then rows.
pub fn dump_operator(g: &Digraph, angle: mixwalk_core::Angle, op: Operator, float: bool) -> Result<String> {
    if op.arc_indexed() && g.has_no_arcs() {
        return Err(CliError::Precondition(format!("{} needs at least one arc", op.label())));
    }
    let mut out = format!("# {} eta={}\n", op.label(), angle);
    if op.arc_indexed() {
        let w = Walk::new(g, angle)?;
        out.push_str(&format!("# arcs: {}\n", arc_header(w.index())));
        let body = match op {
            Operator::K => {
                let k = w.boundary();
                if float {
                    render_complex(k.degrees().len(), w.index().len(), &k.to_complex())
                } else {
                    rows(&k.render())
                }
            }
            Operator::HTilde => {
                let h = w.h_tilde();
                if float {
                    render_complex(h.degrees.len(), h.degrees.len(), &h.to_complex())
                } else {
                    render_normalized(&h)
                }
            }
            _ => {
                let m = match op {
                    Operator::C => w.coin(),
                    Operator::S => w.shift(),
                    Operator::STheta => w.shift_theta(),
                    Operator::DTheta => w.d_theta(),
                    Operator::U => w.u_theta(),
                    Operator::Grover => w.grover(),
                    Operator::R => w.digon_locator(),
                    Operator::FT => w.f_t(),
                    Operator::FO => w.f_o(),
                    _ => unreachable!("vertex operators handled below"),
                };
                matrix_text(&m, float)
            }
        };
        out.push_str(&body);
    } else {
        let m = match op {
            Operator::H => mixwalk_core::operators::h_eta(g, angle),
            _ => OpMatrix::from_integers(
                mixwalk_core::IndexSpace::vertex(g.n()),
                mixwalk_core::IndexSpace::vertex(g.n()),
                &mixwalk_core::scalar::Field::rationals(),
                &g.adjacency(),
            ),
        };
        out.push_str(&matrix_text(&m, float));
    }
    Ok(out)
}

pub fn arc_header(index: &ArcIndex) -> String {
    index.arcs().iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" ")
}

fn matrix_text(m: &OpMatrix, float: bool) -> String {
    if float {
        render_complex(m.rows().dim, m.cols().dim, &m.to_complex())
    } else {
        rows(&m.render_exact())
    }
}

fn rows(text: &str) -> String {
    let mut s = text.trim_end().to_string();
    s.push('\n');
    s
}

/// Entries `H_xy / sqrt(d_x d_y)`, simplified when the product is a square.
fn render_normalized(h: &NormalizedHermitian) -> String {
    let n = h.degrees.len();
    let mut out = String::new();
    for x in 0..n {
        let row: Vec<String> = (0..n)
            .map(|y| {
                let e = h.h.get(x, y);
                if e.is_zero() {
                    return "0".into();
                }
                let p = (h.degrees[x] * h.degrees[y]) as u64;
                let r = (p as f64).sqrt().round() as u64;
                if r * r == p {
                    let s = e.field().rational(1, r as i64);
                    (e * &s).to_string()
                } else {
                    format!("({})/sqrt({})", e, p)
                }
            })
            .collect();
        out.push_str(&row.join(" | "));
        out.push('\n');
    }
    out
}

pub fn render_complex(rows: usize, cols: usize, m: &[Complex64]) -> String {
    let mut out = String::new();
    for i in 0..rows {
        let row: Vec<String> = (0..cols).map(|j| format_complex(m[i * cols + j])).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

fn format_complex(z: Complex64) -> String {
    let clean = |x: f64| if x.abs() < 5e-13 { 0.0 } else { x };
    let (re, im) = (clean(z.re), clean(z.im));
    if im >= 0.0 {
        format!("{:.6}+{:.6}i", re, im)
    } else {
        format!("{:.6}-{:.6}i", re, -im)
    }
}

pub fn spectrum_json(s: &SpectrumSummary) -> Value {
    let eigs: Vec<Value> = s.eigs.iter().map(|e| json!({"re": e.value.re, "im": e.value.im, "mult": e.mult})).collect();
    json!({"eigs": eigs, "source": s.source.label()})
}

/// Coefficients, constant term first; integers as numbers when they fit.
pub fn charpoly_json(p: &CharPoly) -> Value {
    match p {
        CharPoly::Integer(c) => Value::Array(
            c.iter()
                .map(|x| match i64::try_from(x) {
                    Ok(v) => json!(v),
                    Err(_) => json!(x.to_string()),
                })
                .collect(),
        ),
        CharPoly::Rational(c) => Value::Array(c.iter().map(|x| json!(x.to_string())).collect()),
        CharPoly::Cyclotomic(c) => Value::Array(c.iter().map(|x| json!(x.to_string())).collect()),
    }
}

pub fn support_text(s: &Support, index: &ArcIndex) -> String {
    s.render(index)
}

#[cfg(test)]
mod tests {
    use super::*;
    use mixwalk_core::Angle;

    #[test]
    fn example_transfer_matrix_dump() {
        let g = crate::input::parse_arc_list("n=4; 0->1; 1->0; 2->1; 1->3; 3->2").unwrap();
        let text = dump_operator(&g, Angle::RIGHT, Operator::U, false).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "# U_theta eta=1/2");
        assert_eq!(lines.len(), 2 + 8);
        let float = dump_operator(&g, Angle::RIGHT, Operator::U, true).unwrap();
        assert!(float.lines().nth(2).unwrap().split(' ').count() == 8);
    }

    #[test]
    fn complete_graph_hermitian_dump() {
        let g = Digraph::complete(3);
        let text = dump_operator(&g, Angle::RIGHT, Operator::H, false).unwrap();
        assert_eq!(text, "# H_eta eta=1/2\n0 | 1 | 1\n1 | 0 | 1\n1 | 1 | 0\n");
        let ht = dump_operator(&g, Angle::RIGHT, Operator::HTilde, false).unwrap();
        assert!(ht.ends_with("0 | 1/2 | 1/2\n1/2 | 0 | 1/2\n1/2 | 1/2 | 0\n"), "{}", ht);
    }

    #[test]
    fn arcless_graph_rejected_for_arc_operators() {
        let e = dump_operator(&Digraph::empty(3), Angle::ZERO, Operator::U, false).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        assert!(dump_operator(&Digraph::empty(3), Angle::ZERO, Operator::H, false).is_ok());
    }

    #[test]
    fn spectrum_json_shape() {
        let s = mixwalk_core::spectrum::y_family_spectrum(3).unwrap();
        let v = spectrum_json(&s);
        assert_eq!(v["source"], "closed-form");
        let total: u64 = v["eigs"].as_array().unwrap().iter().map(|e| e["mult"].as_u64().unwrap()).sum();
        assert_eq!(total, 6);
    }
}
