//! Output values: compact JSON by default, aligned text with --pretty.

use std::fmt::Display;

use fdb_core::lincomb::render_sum;
use fdb_core::{LinComb, Tensor2};
use serde::Serialize;
use serde_json::Value;

pub struct Out {
    pub json: Value,
    pub text: String,
}

impl Out {
    pub fn new(value: &impl Serialize, text: impl Into<String>) -> Self {
        Out { json: serde_json::to_value(value).expect("output values serialize"), text: text.into() }
    }

    pub fn render(&self, pretty: bool) -> String {
        if pretty {
            self.text.trim_end().to_string()
        } else {
            serde_json::to_string(&self.json).expect("JSON values serialize")
        }
    }
}

/// "c*u ⊗ v + ..." with a caller-chosen rendering of basis elements.
pub fn tensor_text<B: Ord + Clone>(t: &Tensor2<B>, show: impl Fn(&B) -> String) -> String {
    render_sum(t, |(a, b)| (format!("{} ⊗ {}", show(a), show(b)), false))
}

pub fn sum_text<B: Ord + Clone + Display>(x: &LinComb<B>) -> String {
    render_sum(x, |b| (b.to_string(), false))
}

/// Rows of label/value pairs with the labels padded to a common width.
pub fn aligned(rows: &[(String, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    rows.iter()
        .map(|(k, v)| format!("{k}{}  {v}", " ".repeat(width - k.chars().count())))
        .collect::<Vec<_>>()
        .join("\n")
}
