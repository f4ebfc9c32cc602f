//! Item registry and the three embedding matrices aligned to it.
//!
//! The catalog fixes the row index space: every embedding matrix, candidate
//! set, and score vector is indexed by catalog row. A 64-bit FNV-1a hash of
//! the ordered external ids travels with every derived artifact so that
//! misaligned files are caught before any arithmetic happens.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::Rng;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ops;
use crate::rng::{self, Stream};

/// The two item domains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Domain {
    X,
    Y,
}

impl Domain {
    pub fn as_str(self) -> &'static str {
        match self {
            Domain::X => "X",
            Domain::Y => "Y",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "X" | "x" => Ok(Domain::X),
            "Y" | "y" => Ok(Domain::Y),
            other => Err(Error::Data(format!("unknown domain {other:?}"))),
        }
    }

    pub fn other(self) -> Self {
        match self {
            Domain::X => Domain::Y,
            Domain::Y => Domain::X,
        }
    }
}

/// The three item representation sources.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Modality {
    Id,
    Img,
    Tex,
}

impl Modality {
    pub const ALL: [Modality; 3] = [Modality::Id, Modality::Img, Modality::Tex];

    pub fn as_str(self) -> &'static str {
        match self {
            Modality::Id => "id",
            Modality::Img => "img",
            Modality::Tex => "tex",
        }
    }
}

/// 64-bit FNV-1a.
pub fn fnv1a64(bytes: impl IntoIterator<Item = u8>) -> u64 {
    let mut hash = 0xcbf29ce484222325u64;
    for b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    }
    hash
}

/// Immutable item registry; row order defines every embedding index.
#[derive(Debug, Clone)]
pub struct ItemCatalog {
    items: Vec<(String, Domain)>,
    index: BTreeMap<String, usize>,
}

impl ItemCatalog {
    pub fn new(items: Vec<(String, Domain)>) -> Result<Self> {
        let mut index = BTreeMap::new();
        for (i, (id, _)) in items.iter().enumerate() {
            if index.insert(id.clone(), i).is_some() {
                return Err(Error::Consistency(format!(
                    "duplicate external id {id:?} in catalog"
                )));
            }
        }
        Ok(Self { items, index })
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn external_id(&self, row: usize) -> &str {
        &self.items[row].0
    }

    pub fn domain(&self, row: usize) -> Domain {
        self.items[row].1
    }

    pub fn lookup(&self, external_id: &str) -> Option<usize> {
        self.index.get(external_id).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, Domain)> {
        self.items.iter().map(|(id, d)| (id.as_str(), *d))
    }

    /// Ascending catalog rows belonging to `domain`.
    pub fn domain_rows(&self, domain: Domain) -> Vec<usize> {
        (0..self.items.len())
            .filter(|&i| self.items[i].1 == domain)
            .collect()
    }

    pub fn domain_count(&self, domain: Domain) -> usize {
        self.items.iter().filter(|(_, d)| *d == domain).count()
    }

    /// FNV-1a over the ordered external id bytes. Stored in embedding files
    /// and checkpoints; any reordering or re-labelling changes it.
    pub fn hash(&self) -> u64 {
        fnv1a64(self.items.iter().flat_map(|(id, _)| id.bytes()))
    }
}

/// The three embedding matrices, row-aligned with a catalog.
#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddingBank {
    /// Learnable ID embeddings, `n x q`.
    pub e_id: Matrix,
    /// Frozen image embeddings, `n x e`.
    pub e_img: Matrix,
    /// Frozen text embeddings, `n x e`.
    pub e_tex: Matrix,
}

impl EmbeddingBank {
    pub fn new(n_items: usize, e_id: Matrix, e_img: Matrix, e_tex: Matrix) -> Result<Self> {
        for (name, m) in [("e_id", &e_id), ("e_img", &e_img), ("e_tex", &e_tex)] {
            if m.rows() != n_items {
                return Err(Error::Consistency(format!(
                    "{name} has {} rows, catalog has {n_items} items",
                    m.rows()
                )));
            }
            if m.cols() == 0 {
                return Err(Error::Dimension(format!("{name} has zero columns")));
            }
        }
        if e_img.cols() != e_tex.cols() {
            return Err(Error::Consistency(format!(
                "frozen embedding dims differ: img {} vs tex {}",
                e_img.cols(),
                e_tex.cols()
            )));
        }
        Ok(Self { e_id, e_img, e_tex })
    }

    /// Learnable embedding dimension q.
    pub fn q(&self) -> usize {
        self.e_id.cols()
    }

    /// Frozen embedding dimension e.
    pub fn dim_frozen(&self) -> usize {
        self.e_img.cols()
    }

    pub fn modality(&self, m: Modality) -> &Matrix {
        match m {
            Modality::Id => &self.e_id,
            Modality::Img => &self.e_img,
            Modality::Tex => &self.e_tex,
        }
    }

    pub fn modality_dim(&self, m: Modality) -> usize {
        self.modality(m).cols()
    }

    /// L2-normalizes the frozen matrices row-wise; zero rows are left alone.
    pub fn normalize_frozen(&mut self) {
        for m in [&mut self.e_img, &mut self.e_tex] {
            for i in 0..m.rows() {
                let row = m.row_mut(i);
                let norm = ops::sqrt(row.iter().map(|v| v * v).sum());
                if norm > 0.0 {
                    for v in row {
                        *v /= norm;
                    }
                }
            }
        }
    }
}

/// Seeded init for the learnable embedding matrix: uniform in
/// `[-1/sqrt(q), +1/sqrt(q)]`, keeping initial cosine similarities small.
pub fn init_learnable(n: usize, q: usize, seed: u64) -> Result<Matrix> {
    if n == 0 || q == 0 {
        return Err(Error::Config(format!(
            "init_learnable needs positive dims, got {n}x{q}"
        )));
    }
    let bound = 1.0 / ops::sqrt(q as f64);
    let mut rng = rng::derive(seed, Stream::InitEmbedding);
    let data: Vec<f64> = (0..n * q).map(|_| rng.random_range(-bound..bound)).collect();
    Matrix::from_vec(n, q, data)
}
