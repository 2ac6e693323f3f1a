//! Canonical text forms. Everything printed here parses back to an equal value.

use std::fmt;

use num_traits::{One, Signed};

use crate::algebra::Element;
use crate::scalar::Rational;
use crate::tensor::TensorElement;

/// `coef · label`, with the unit label `1` absorbed into the coefficient.
pub(crate) fn term(coef: &Rational, label: &str) -> String {
    if label == "1" {
        return coef.to_string();
    }
    if coef.is_one() {
        label.to_string()
    } else if (-coef).is_one() {
        format!("-{label}")
    } else if coef.is_integer() {
        format!("{coef}{label}")
    } else {
        format!("{coef}*{label}")
    }
}

/// Joins signed terms with ` + ` / ` - `; the empty sum prints as `0`.
pub(crate) fn join_terms(terms: impl IntoIterator<Item = String>) -> String {
    let mut out = String::new();
    for t in terms {
        if out.is_empty() {
            out = t;
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&t);
        }
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels = self.algebra().labels();
        let terms = self
            .coords()
            .iter()
            .zip(labels)
            .filter(|(c, _)| !num_traits::Zero::is_zero(*c))
            .map(|(c, l)| term(c, l));
        f.write_str(&join_terms(terms))
    }
}

impl Element {
    /// True when the printed form is a single signed term, so it can take a
    /// polynomial power without parentheses.
    pub(crate) fn is_monomial(&self) -> bool {
        self.coords().iter().filter(|c| !num_traits::Zero::is_zero(*c)).count() <= 1
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels = self.algebra().labels();
        let mut terms: Vec<(usize, usize, Rational)> =
            self.terms().map(|(l, r, c)| (l, r, c.clone())).collect();
        terms.sort_by_key(|(l, r, _)| (*l, *r));
        let printed = terms.into_iter().map(|(l, r, c)| {
            let left = term(&c.abs(), &labels[l]);
            let sign = if c.is_negative() { "-" } else { "" };
            format!("{sign}{left} (x) {}", labels[r])
        });
        f.write_str(&join_terms(printed))
    }
}
