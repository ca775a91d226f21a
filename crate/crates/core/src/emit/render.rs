use std::fmt::Write as _;
use std::str::FromStr;

use crate::closed_form::{monomial_triple, ClosedFormTriple};
use crate::error::{Error, Result};
use crate::exact::{Poly, Rational};
use crate::sequence::SeqParams;
use crate::verify::{verify_triple, GATE_N_MAX};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Latex,
    Text,
    Json,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "latex" => Ok(Format::Latex),
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format {other:?}")),
        }
    }
}

/// Presentation details that differ between LaTeX and plain text.
struct Style {
    latex: bool,
}

impl Style {
    fn frac(&self, r: &Rational) -> String {
        if r.is_integer() {
            r.numer().to_string()
        } else if self.latex {
            format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
        } else {
            format!("{}/{}", r.numer(), r.denom())
        }
    }

    fn sum_prefix(&self) -> &'static str {
        if self.latex {
            "2\\sum_{k=1}^{n}"
        } else {
            "2 * sum_{k=1..n}"
        }
    }

    fn term(&self, sym: &str, index: &str) -> String {
        if self.latex {
            if index.len() == 1 {
                format!("{sym}_{index}")
            } else {
                format!("{sym}_{{{index}}}")
            }
        } else {
            format!("{sym}({index})")
        }
    }

    fn times(&self) -> &'static str {
        if self.latex {
            " "
        } else {
            " * "
        }
    }
}

/// Single monomial `c var^i` with `c` already made non-negative.
fn monomial(style: &Style, c: &Rational, i: usize, var: char) -> String {
    let var_part = match i {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{i}"),
    };
    if i == 0 {
        style.frac(c)
    } else if c.is_one() {
        var_part
    } else {
        format!("{}{var_part}", style.frac(c))
    }
}

/// Compact polynomial, highest degree first, e.g. `n^2+2n-\frac{1}{2}`.
fn poly_compact(style: &Style, p: &Poly, var: char) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        out.push_str(&monomial(style, &c.abs(), i, var));
    }
    out
}

/// Text form accepted back by [`super::parse_poly_in`], e.g. `3k^2 - 1/2k + 5`.
pub fn poly_text(p: &Poly, var: char) -> String {
    let style = Style { latex: false };
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        match (out.is_empty(), c.is_negative()) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        out.push_str(&monomial(&style, &c.abs(), i, var));
    }
    out
}

/// LaTeX form of a polynomial, compact like the identity renderer uses.
pub fn poly_latex(p: &Poly, var: char) -> String {
    poly_compact(&Style { latex: true }, p, var)
}

fn is_single_term(p: &Poly) -> bool {
    p.coeffs().iter().filter(|c| !c.is_zero()).count() == 1
}

/// `coefficient * symbol`, without its sign. `p` must be nonzero with a
/// positive leading coefficient.
fn factor(style: &Style, p: &Poly, var: char, symbol: &str) -> String {
    if *p == Poly::one() {
        symbol.to_string()
    } else if is_single_term(p) {
        format!("{}{}{symbol}", poly_compact(style, p, var), style.times())
    } else {
        format!("({}){}{symbol}", poly_compact(style, p, var), style.times())
    }
}

/// Letter used for `s_n`: the conventional one for the named sequences.
pub fn sequence_symbol(params: &SeqParams) -> &'static str {
    params.preset().map_or("s", |p| p.symbol())
}

fn identity(style: &Style, t: &ClosedFormTriple) -> String {
    let sym = sequence_symbol(&t.params);

    let lhs = if t.weight.is_zero() {
        "0".to_string()
    } else {
        let w = &t.weight;
        let s = style.term(sym, "k-1");
        let body = if *w == Poly::one() {
            s
        } else if is_single_term(w) {
            format!("{}{}{s}", poly_compact(style, w, 'k'), style.times())
        } else {
            format!("({}){}{s}", poly_compact(style, w, 'k'), style.times())
        };
        format!("{} {body}", style.sum_prefix())
    };

    // (negative?, body) pieces of the right-hand side
    let mut pieces: Vec<(bool, String)> = Vec::new();
    for (p, index) in [(&t.f, "n+1"), (&t.g, "n")] {
        let Some(lead) = p.leading_coeff() else {
            continue;
        };
        let neg = lead.is_negative();
        let p = if neg { -p } else { p.clone() };
        pieces.push((neg, factor(style, &p, 'n', &style.term(sym, index))));
    }
    for (i, c) in t.h.coeffs().iter().enumerate().rev() {
        if !c.is_zero() {
            pieces.push((c.is_negative(), monomial(style, &c.abs(), i, 'n')));
        }
    }

    let mut rhs = String::new();
    for (k, (neg, body)) in pieces.iter().enumerate() {
        match (k, neg) {
            (0, true) => rhs.push('-'),
            (0, false) => {}
            (_, true) => rhs.push_str(" - "),
            (_, false) => rhs.push_str(" + "),
        }
        rhs.push_str(body);
    }
    if rhs.is_empty() {
        rhs.push('0');
    }
    format!("{lhs} = {rhs}")
}

/// Renders one identity. JSON emits the triple object itself.
pub fn render_identity(t: &ClosedFormTriple, format: Format) -> String {
    match format {
        Format::Latex => identity(&Style { latex: true }, t),
        Format::Text => identity(&Style { latex: false }, t),
        Format::Json => serde_json::to_string_pretty(t).expect("triples serialize"),
    }
}

/// Monomial identities for `d = 0..=d_max`, one per line (a JSON array for
/// [`Format::Json`]). Every identity is verified to `n = 100` before it is
/// rendered.
pub fn render_table(params: &SeqParams, d_max: usize, format: Format) -> Result<String> {
    let mut triples = Vec::with_capacity(d_max + 1);
    for d in 0..=d_max {
        let t = monomial_triple(d, params);
        let report = verify_triple(&t, GATE_N_MAX);
        if let Some(f) = report.first_failure {
            return Err(Error::Unverified { n: f.n });
        }
        triples.push(t);
    }
    if format == Format::Json {
        return Ok(serde_json::to_string_pretty(&triples).expect("triples serialize"));
    }
    let mut out = String::new();
    for t in &triples {
        let _ = writeln!(out, "{}", render_identity(t, format));
    }
    out.pop();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::general_triple;
    use crate::emit::parse_poly;

    #[test]
    fn pell_eq1_latex() {
        let pell = SeqParams::pell();
        assert_eq!(
            render_identity(&monomial_triple(1, &pell), Format::Latex),
            "2\\sum_{k=1}^{n} k P_{k-1} = n P_{n+1} - (n+1) P_n"
        );
        assert_eq!(
            render_identity(&monomial_triple(2, &pell), Format::Latex),
            "2\\sum_{k=1}^{n} k^2 P_{k-1} = (n^2+1) P_{n+1} - (n^2+2n) P_n - 1"
        );
    }

    #[test]
    fn zero_triple() {
        let t = general_triple(&Poly::zero(), &SeqParams::pell());
        assert_eq!(render_identity(&t, Format::Latex), "0 = 0");
        assert_eq!(render_identity(&t, Format::Text), "0 = 0");
    }

    #[test]
    fn fibonacci_constant_weight() {
        let t = monomial_triple(0, &SeqParams::fibonacci());
        assert_eq!(
            render_identity(&t, Format::Latex),
            "2\\sum_{k=1}^{n} F_{k-1} = 2 F_{n+1} - 2"
        );
        assert_eq!(
            render_identity(&t, Format::Text),
            "2 * sum_{k=1..n} F(k-1) = 2 * F(n+1) - 2"
        );
    }

    #[test]
    fn fractions_and_generic_symbol() {
        // a + b - 1 = 4 puts fractions in every coefficient
        let params = SeqParams::new(3, 2, 1, 1).unwrap();
        let t = monomial_triple(1, &params);
        let s = render_identity(&t, Format::Latex);
        assert!(s.starts_with("2\\sum_{k=1}^{n} k s_{k-1} = (\\frac{1}{2}n"), "{s}");
        assert!(s.contains("s_{n+1}") && s.contains("s_n"), "{s}");
        let s = render_identity(&t, Format::Text);
        assert!(s.contains("1/2n"), "{s}");
    }

    #[test]
    fn multi_term_weight() {
        let t = general_triple(&parse_poly("k^2 + k").unwrap(), &SeqParams::pell());
        assert_eq!(
            render_identity(&t, Format::Latex),
            "2\\sum_{k=1}^{n} (k^2+k) P_{k-1} = (n^2+n+1) P_{n+1} - (n^2+3n+1) P_n - 1"
        );
    }

    #[test]
    fn table_shapes() {
        let pell = SeqParams::pell();
        let lines = render_table(&pell, 2, Format::Latex).unwrap();
        assert_eq!(lines.lines().count(), 3);
        assert_eq!(
            lines.lines().next().unwrap(),
            "2\\sum_{k=1}^{n} P_{k-1} = P_{n+1} - P_n - 1"
        );
        assert_eq!(render_table(&SeqParams::lucas(), 0, Format::Text).unwrap().lines().count(), 1);
        let js: serde_json::Value =
            serde_json::from_str(&render_table(&pell, 0, Format::Json).unwrap()).unwrap();
        assert_eq!(js.as_array().unwrap().len(), 1);
        assert_eq!(render_table(&SeqParams::lucas(), 1, Format::Latex).unwrap().lines().count(), 2);
    }

    #[test]
    fn text_poly_forms() {
        let p = Poly::from_coeffs(vec![Rational::from(5), Rational::new(-1, 2), Rational::from(3)]);
        assert_eq!(poly_text(&p, 'k'), "3k^2 - 1/2k + 5");
        assert_eq!(poly_text(&Poly::from_ints(&[0, -1]), 'k'), "-k");
        assert_eq!(poly_text(&Poly::zero(), 'k'), "0");
        assert_eq!(poly_latex(&p, 'x'), "3x^2-\\frac{1}{2}x+5");
    }
}
