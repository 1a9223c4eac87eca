//! Quivers as multiplicity matrices, McKay quivers of abelian groups, and the
//! returning-arrow construction.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::{char_inv, det_character, enumerate_characters, AbCharacter, AbRep, FinAbGroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("multiplicity matrix is not {0}x{0}")]
    NotSquare(usize),
    #[error("vertex sequences differ")]
    VertexMismatch,
}

/// What a vertex stands for.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexPayload {
    /// A character of an abelian group, as an exponent tuple.
    Exponents(Vec<u32>),
    /// A row of a character table.
    Row(usize),
    /// A character of a subgroup, as its values (exponents of `ζ_N`) on the
    /// subgroup's elements.
    Restriction(Vec<u32>),
}

impl fmt::Display for VertexPayload {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u32]| v.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",");
        match self {
            VertexPayload::Exponents(e) => f.write_str(&join(e)),
            VertexPayload::Row(r) => write!(f, "row {r}"),
            VertexPayload::Restriction(v) => write!(f, "[{}]", join(v)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub id: usize,
    pub label: String,
    pub payload: VertexPayload,
    pub dim: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ambient {
    GL,
    SL,
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ambient::GL => "GL",
            Ambient::SL => "SL",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverMeta {
    pub group: String,
    pub rep: String,
    pub ambient: Ambient,
    pub construction: String,
    /// `dim V` for the representation that built the quiver.
    pub rep_dim: u64,
    /// Cyclic factor orders when the group is abelian and the vertices are
    /// its characters; used to apply label schemes.
    pub group_orders: Option<Vec<u32>>,
}

/// A quiver stored as a square matrix of arrow multiplicities:
/// `mult[i][j]` arrows from vertex `i` to vertex `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<Vertex>,
    mult: Vec<Vec<u64>>,
    meta: QuiverMeta,
}

impl Quiver {
    pub fn new(vertices: Vec<Vertex>, mult: Vec<Vec<u64>>, meta: QuiverMeta) -> Result<Self, QuiverError> {
        let n = vertices.len();
        if mult.len() != n || mult.iter().any(|row| row.len() != n) {
            return Err(QuiverError::NotSquare(n));
        }
        Ok(Quiver { vertices, mult, meta })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertices_mut(&mut self) -> &mut [Vertex] {
        &mut self.vertices
    }

    pub fn mult(&self) -> &[Vec<u64>] {
        &self.mult
    }

    /// Mutable access to a single multiplicity, e.g. for building negative
    /// controls in tests.
    pub fn mult_mut(&mut self, i: usize, j: usize) -> &mut u64 {
        &mut self.mult[i][j]
    }

    pub fn meta(&self) -> &QuiverMeta {
        &self.meta
    }

    pub fn meta_mut(&mut self) -> &mut QuiverMeta {
        &mut self.meta
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn arrow_count(&self) -> u64 {
        self.mult.iter().flatten().sum()
    }

    pub fn out_degree(&self, i: usize) -> u64 {
        self.mult[i].iter().sum()
    }

    pub fn in_degree(&self, j: usize) -> u64 {
        self.mult.iter().map(|row| row[j]).sum()
    }

    pub fn loop_count(&self) -> u64 {
        (0..self.len()).map(|i| self.mult[i][i]).sum()
    }

    /// `Σ_j mult[i][j]·dim_j == dim(V)·dim_i` at every vertex.
    pub fn row_sum_law_holds(&self) -> bool {
        (0..self.len()).all(|i| {
            let lhs: u64 = self.mult[i].iter().zip(&self.vertices).map(|(m, v)| m * v.dim).sum();
            lhs == self.meta.rep_dim * self.vertices[i].dim
        })
    }

    /// In-degree equals out-degree at every vertex.
    pub fn is_balanced(&self) -> bool {
        (0..self.len()).all(|i| self.in_degree(i) == self.out_degree(i))
    }

    pub fn is_permutation_matrix(&self) -> bool {
        (0..self.len()).all(|i| {
            self.mult[i].iter().all(|&m| m <= 1) && self.out_degree(i) == 1 && self.in_degree(i) == 1
        })
    }

    /// Nonzero entries as `(from, to, mult)`, sorted by `(from, to)`.
    pub fn arrows(&self) -> Vec<(usize, usize, u64)> {
        let mut out = Vec::new();
        for (i, row) in self.mult.iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                if m > 0 {
                    out.push((i, j, m));
                }
            }
        }
        out
    }
}

fn abelian_vertices(g: &FinAbGroup) -> Vec<Vertex> {
    enumerate_characters(g)
        .into_iter()
        .enumerate()
        .map(|(id, chi)| Vertex {
            id,
            label: chi.to_string(),
            payload: VertexPayload::Exponents(chi.exponents().to_vec()),
            dim: 1,
        })
        .collect()
}

fn abelian_meta(v: &AbRep, construction: &str) -> QuiverMeta {
    let ambient = if det_character(v).is_trivial() { Ambient::SL } else { Ambient::GL };
    QuiverMeta {
        group: v.group().describe(),
        rep: v.describe(),
        ambient,
        construction: construction.to_string(),
        rep_dim: v.dim() as u64,
        group_orders: Some(v.group().orders().to_vec()),
    }
}

/// Multiplicity matrix of `V ⊗ −` on Irr(G) for abelian `G`:
/// `a[i][j]` counts the summands `χ` of `V` with `χ·χ_i = χ_j`.
fn abelian_matrix(v: &AbRep) -> Vec<Vec<u64>> {
    let g = v.group();
    let chars = enumerate_characters(g);
    let mut mult = vec![vec![0u64; chars.len()]; chars.len()];
    for (i, chi_i) in chars.iter().enumerate() {
        for s in v.summands() {
            // lex index of s·χ_i, without materializing the product tuple
            let j = s
                .exponents()
                .iter()
                .zip(chi_i.exponents())
                .zip(g.orders())
                .fold(0usize, |acc, ((&a, &b), &n)| acc * n as usize + ((a + b) % n) as usize);
            mult[i][j] += 1;
        }
    }
    mult
}

/// The McKay quiver `Q_V(G)` of an abelian group, vertices in lex order of
/// character exponent tuples.
pub fn mckay_quiver_abelian(g: &FinAbGroup, v: &AbRep) -> Quiver {
    assert_eq!(g, v.group(), "representation is over a different group");
    Quiver::new(abelian_vertices(g), abelian_matrix(v), abelian_meta(v, "mckay")).expect("square by construction")
}

/// Entrywise sum of two quivers on the same vertex sequence. Metadata is
/// taken from `a`, with the representation descriptions concatenated.
pub fn quiver_add(a: &Quiver, b: &Quiver) -> Result<Quiver, QuiverError> {
    let same_vertices = a.len() == b.len()
        && a.vertices.iter().zip(&b.vertices).all(|(x, y)| x.payload == y.payload && x.dim == y.dim);
    if !same_vertices {
        return Err(QuiverError::VertexMismatch);
    }
    let mult = a
        .mult
        .iter()
        .zip(&b.mult)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x + y).collect())
        .collect();
    let rep = match (a.meta.rep.is_empty(), b.meta.rep.is_empty()) {
        (true, _) => b.meta.rep.clone(),
        (_, true) => a.meta.rep.clone(),
        _ => format!("{};{}", a.meta.rep, b.meta.rep),
    };
    let meta = QuiverMeta { rep, rep_dim: a.meta.rep_dim + b.meta.rep_dim, ..a.meta.clone() };
    Ok(Quiver { vertices: a.vertices.clone(), mult, meta })
}

/// The character `det(V)⁻¹` appended by the embedding `GL(V) → SL(V ⊕ k)`.
pub fn returning_character(v: &AbRep) -> AbCharacter {
    char_inv(v.group(), &det_character(v))
}

/// `V ⊕ det(V)⁻¹`: the representation of `G` inside `SL(n+1)`.
pub fn sl_augment(g: &FinAbGroup, v: &AbRep) -> AbRep {
    assert_eq!(g, v.group(), "representation is over a different group");
    v.with_summand(returning_character(v))
}

/// The returning-arrow quiver of `Q_V(G)`, computed as the McKay quiver of
/// the SL-augmented representation. The result is checked against the
/// decomposition `Q_V(G) + Q_{det⁻¹}(G)` before it is returned.
pub fn returning_arrow_quiver(g: &FinAbGroup, v: &AbRep) -> Quiver {
    let augmented = sl_augment(g, v);
    let mut q = mckay_quiver_abelian(g, &augmented);

    let det_inv = AbRep::new(g.clone(), vec![returning_character(v)]).expect("character of g");
    let split = quiver_add(&mckay_quiver_abelian(g, v), &mckay_quiver_abelian(g, &det_inv))
        .expect("same group, same vertices");
    assert_eq!(q.mult, split.mult, "returning arrows disagree with the det⁻¹ decomposition");

    q.meta.construction = "returning_arrow".to_string();
    q.meta.ambient = Ambient::SL;
    q
}

/// Golden-test comparator: identical vertex payloads and identical matrices.
pub fn quiver_isomorphic_as_labeled(a: &Quiver, b: &Quiver) -> bool {
    a.len() == b.len()
        && a.vertices.iter().zip(&b.vertices).all(|(x, y)| x.payload == y.payload)
        && a.mult == b.mult
}
