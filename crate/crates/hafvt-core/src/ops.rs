//! Numeric primitives: stable softmax, cosine similarity against matrix
//! rows, and the scaled dot-product attention layer.
//!
//! Transcendentals route through `libm` (not the platform's libm) so a
//! fixed build produces bit-identical results everywhere.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::Matrix;

#[inline]
pub(crate) fn exp(x: f64) -> f64 {
    libm::exp(x)
}

#[inline]
pub(crate) fn ln(x: f64) -> f64 {
    libm::log(x)
}

#[inline]
pub(crate) fn log2(x: f64) -> f64 {
    libm::log2(x)
}

#[inline]
pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

/// Numerically stable softmax of `v / temperature`.
///
/// Entries land in (0, 1) and sum to 1; the maximum logit is subtracted
/// before exponentiation.
pub fn softmax(v: &[f64], temperature: f64) -> Result<Vec<f64>> {
    if v.is_empty() {
        return Err(Error::Dimension(String::from("softmax of empty vector")));
    }
    if temperature <= 0.0 || !temperature.is_finite() {
        return Err(Error::Config(format!(
            "softmax temperature must be positive, got {temperature}"
        )));
    }
    if v.iter().any(|x| !x.is_finite()) {
        return Err(Error::Numeric(String::from(
            "softmax input contains non-finite values",
        )));
    }
    let inv_t = 1.0 / temperature;
    let max = v.iter().fold(f64::NEG_INFINITY, |a, &b| a.max(b * inv_t));
    let mut out: Vec<f64> = v.iter().map(|&x| exp(x * inv_t - max)).collect();
    let sum: f64 = out.iter().sum();
    for o in &mut out {
        *o /= sum;
    }
    Ok(out)
}

/// Cosine similarity of `h` against every row of `e`.
///
/// Rows of `e` with exactly zero norm get similarity 0 (frozen embedding
/// files may contain padding rows); a zero-norm `h` is an error.
pub fn cosine_sim_rows(h: &[f64], e: &Matrix) -> Result<Vec<f64>> {
    if h.len() != e.cols() {
        return Err(Error::Dimension(format!(
            "cosine: query dim {} vs matrix cols {}",
            h.len(),
            e.cols()
        )));
    }
    if h.iter().any(|x| !x.is_finite()) {
        return Err(Error::Numeric(String::from(
            "cosine query contains non-finite values",
        )));
    }
    let h_norm = sqrt(h.iter().map(|x| x * x).sum());
    if h_norm == 0.0 {
        return Err(Error::Degenerate(String::from(
            "cosine query has zero norm",
        )));
    }
    let mut out = Vec::with_capacity(e.rows());
    let mut zero_rows = 0usize;
    for i in 0..e.rows() {
        let row = e.row(i);
        let mut dot = 0.0;
        let mut nsq = 0.0;
        for (&a, &b) in h.iter().zip(row) {
            dot += a * b;
            nsq += b * b;
        }
        if nsq == 0.0 {
            zero_rows += 1;
            out.push(0.0);
        } else {
            out.push(dot / (h_norm * sqrt(nsq)));
        }
    }
    if zero_rows > 0 {
        log::warn!("cosine: {zero_rows} zero-norm rows scored as 0");
    }
    Ok(out)
}

/// Row-wise softmax of a square logit matrix, in place.
///
/// With `causal` set, row `i` is restricted to columns `<= i`; excluded
/// columns come out exactly 0.
pub fn masked_softmax_rows(logits: &mut Matrix, causal: bool) {
    let n = logits.rows();
    for i in 0..n {
        let limit = if causal { i + 1 } else { logits.cols() };
        let row = logits.row_mut(i);
        let max = row[..limit].iter().fold(f64::NEG_INFINITY, |a, &b| a.max(b));
        let mut sum = 0.0;
        for v in &mut row[..limit] {
            *v = exp(*v - max);
            sum += *v;
        }
        for v in &mut row[..limit] {
            *v /= sum;
        }
        for v in &mut row[limit..] {
            *v = 0.0;
        }
    }
}

/// One self-attention layer's projection weights (all `d x d`).
#[derive(Debug, Clone, PartialEq)]
pub struct AttentionLayer {
    pub w_q: Matrix,
    pub w_k: Matrix,
    pub w_v: Matrix,
}

impl AttentionLayer {
    pub fn dim(&self) -> usize {
        self.w_q.rows()
    }

    fn validate(&self, d: usize) -> Result<()> {
        for (name, w) in [("w_q", &self.w_q), ("w_k", &self.w_k), ("w_v", &self.w_v)] {
            if w.rows() != d || w.cols() != d {
                return Err(Error::Dimension(format!(
                    "{name} is {}x{}, expected {d}x{d}",
                    w.rows(),
                    w.cols()
                )));
            }
        }
        Ok(())
    }
}

/// Attention stack configuration for one sequence encoder.
#[derive(Debug, Clone, PartialEq)]
pub struct AttentionParams {
    pub layers: Vec<AttentionLayer>,
    /// Restrict position `i` to attend to positions `<= i`.
    pub causal: bool,
    /// Skip the learned projections and use Q = K = V = input.
    pub identity_projections: bool,
}

/// Applies the attention stack to an `n x d` sequence embedding matrix.
///
/// Per layer: Q = F W_Q, K = F W_K, V = F W_V, then
/// `softmax(Q K^T / sqrt(d)) V` row-wise with the configured mask. With
/// a causal mask, output row `i` depends only on input rows `<= i`.
pub fn attention_forward(f: &Matrix, params: &AttentionParams) -> Result<Matrix> {
    if f.rows() == 0 {
        return Err(Error::Dimension(String::from(
            "attention input has no rows",
        )));
    }
    let d = f.cols();
    let mut h = f.clone();
    if params.identity_projections {
        for _ in 0..params.layers.len().max(1) {
            h = attention_qkv(&h, &h, &h, params.causal)?;
        }
        return Ok(h);
    }
    for layer in &params.layers {
        layer.validate(d)?;
        let q = h.matmul(&layer.w_q, false)?;
        let k = h.matmul(&layer.w_k, false)?;
        let v = h.matmul(&layer.w_v, false)?;
        h = attention_qkv(&q, &k, &v, params.causal)?;
    }
    Ok(h)
}

fn attention_qkv(q: &Matrix, k: &Matrix, v: &Matrix, causal: bool) -> Result<Matrix> {
    let scale = 1.0 / sqrt(k.cols() as f64);
    let mut logits = q.matmul(k, true)?;
    logits.scale_assign(scale);
    masked_softmax_rows(&mut logits, causal);
    logits.matmul(v, false)
}
