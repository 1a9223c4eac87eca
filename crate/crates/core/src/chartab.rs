//! Finite groups presented by exact character tables.
//!
//! Tensor multiplicities are inner products
//! `a_ij = (1/|G|) Σ_c |c| · χ_V(c) · χ_i(c) · χ_j(c⁻¹)`, computed in
//! `Z[ζ_N]` without floating point. For abelian groups this is the
//! independent route against which the combinatorial fast path in
//! [`crate::mckay`] is checked.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::{char_eval, enumerate_characters, FinAbGroup};
use crate::cyclotomic::{CycloError, CycloInt, ProductAccumulator};
use crate::mckay::{Ambient, Quiver, QuiverMeta, Vertex, VertexPayload};

pub const TABLE_FORMAT_VERSION: u32 = 1;

/// One failed table invariant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("empty table: no classes")]
    Empty,
    #[error("class size sum: sizes add to {got}, group order is {expected}")]
    ClassSizeSum { expected: u64, got: u64 },
    #[error("identity class: class 0 has size {0}, expected 1")]
    IdentityClassSize(u64),
    #[error("class size: class {0} is empty")]
    ZeroClassSize(usize),
    #[error("inverse_class: length {got}, expected {expected}")]
    InverseClassLength { expected: usize, got: usize },
    #[error("inverse_class: not a permutation of the class indices")]
    InverseClassNotPermutation,
    #[error("inverse_class: not an involution at class {0}")]
    InverseClassNotInvolution(usize),
    #[error("inverse_class: identity class is not fixed")]
    InverseClassMovesIdentity,
    #[error("shape: {rows} rows for {classes} classes")]
    NotSquare { rows: usize, classes: usize },
    #[error("shape: row {row} has {got} entries, expected {expected}")]
    RowLength { row: usize, expected: usize, got: usize },
    #[error("root order: entry ({row}, {class}) has root order {got}, table has {expected}")]
    RootOrder { row: usize, class: usize, expected: u32, got: u32 },
    #[error("dimension: row {row} has identity value {value}, expected a positive integer")]
    Dimension { row: usize, value: String },
    #[error("dimension squares: sum of squared dimensions is {got}, group order is {expected}")]
    DimensionSquares { expected: u64, got: u64 },
    #[error("row orthogonality: <row {i}, row {j}> = {got}, expected {expected}")]
    Orthogonality { i: usize, j: usize, got: String, expected: i64 },
    #[error("arithmetic: {context}: {source}")]
    Arithmetic { context: String, source: CycloError },
}

#[derive(Debug, Error)]
pub enum ChartabError {
    #[error("invalid character table: {}", join_errors(.0))]
    Invalid(Vec<TableError>),
    #[error("row index {index} out of range (table has {rows} rows)")]
    RowIndex { index: usize, rows: usize },
    #[error("invalid row index '{0}'")]
    BadRowToken(String),
    #[error("negative multiplicity {value} at ({i}, {j})")]
    NegativeMultiplicity { i: usize, j: usize, value: i64 },
    #[error("multiplicity ({i}, {j}): {source}")]
    Arithmetic { i: usize, j: usize, source: CycloError },
    #[error("row {0} has no conjugate row in the table")]
    NoConjugate(usize),
    #[error("unsupported table format_version {0}")]
    FormatVersion(u32),
    #[error("table file: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("table file: {0}")]
    Io(#[from] std::io::Error),
}

fn join_errors(errs: &[TableError]) -> String {
    errs.iter().map(|e| e.to_string()).collect::<Vec<_>>().join("; ")
}

/// A character table with exact entries in `Z[ζ_N]`, `N = root_order`.
/// Class 0 is the identity class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    pub name: String,
    pub group_order: u64,
    pub class_sizes: Vec<u64>,
    pub inverse_class: Vec<usize>,
    pub root_order: u32,
    pub rows: Vec<Vec<CycloInt>>,
}

impl CharacterTable {
    pub fn num_classes(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// `χ_i(1)`; only meaningful on a validated table.
    pub fn dim(&self, row: usize) -> u64 {
        self.rows[row][0].as_integer().map(|d| d.max(0) as u64).unwrap_or(0)
    }

    /// Index of the row whose entries are the complex conjugates of `row`.
    pub fn conjugate_row(&self, row: usize) -> Option<usize> {
        let conj: Vec<CycloInt> = self.rows[row].iter().map(CycloInt::conj).collect();
        self.rows.iter().position(|r| *r == conj)
    }
}

/// `(1/|G|) Σ_c |c| · x(c) · y(c⁻¹)`, exact.
fn inner_product(t: &CharacterTable, x: &[CycloInt], y: &[CycloInt]) -> Result<CycloInt, CycloError> {
    let mut acc = ProductAccumulator::new(t.root_order);
    for c in 0..t.num_classes() {
        acc.add_product(&x[c], &y[t.inverse_class[c]], t.class_sizes[c] as i64)?;
    }
    acc.finish()?.divide_by_integer(t.group_order as i64)
}

/// Checks every table invariant; returns all failures found.
pub fn validate_table(t: &CharacterTable) -> Result<(), Vec<TableError>> {
    let mut errs = Vec::new();
    let k = t.num_classes();
    if k == 0 {
        return Err(vec![TableError::Empty]);
    }

    let sum: u64 = t.class_sizes.iter().sum();
    if sum != t.group_order {
        errs.push(TableError::ClassSizeSum { expected: t.group_order, got: sum });
    }
    if t.class_sizes[0] != 1 {
        errs.push(TableError::IdentityClassSize(t.class_sizes[0]));
    }
    for (c, &s) in t.class_sizes.iter().enumerate() {
        if s == 0 {
            errs.push(TableError::ZeroClassSize(c));
        }
    }

    if t.inverse_class.len() != k {
        errs.push(TableError::InverseClassLength { expected: k, got: t.inverse_class.len() });
    } else {
        let mut seen = vec![false; k];
        let mut is_perm = true;
        for &c in &t.inverse_class {
            if c >= k || seen[c] {
                is_perm = false;
                break;
            }
            seen[c] = true;
        }
        if !is_perm {
            errs.push(TableError::InverseClassNotPermutation);
        } else {
            if t.inverse_class[0] != 0 {
                errs.push(TableError::InverseClassMovesIdentity);
            }
            for c in 0..k {
                if t.inverse_class[t.inverse_class[c]] != c {
                    errs.push(TableError::InverseClassNotInvolution(c));
                }
            }
        }
    }

    if t.num_rows() != k {
        errs.push(TableError::NotSquare { rows: t.num_rows(), classes: k });
    }
    for (r, row) in t.rows.iter().enumerate() {
        if row.len() != k {
            errs.push(TableError::RowLength { row: r, expected: k, got: row.len() });
            continue;
        }
        for (c, z) in row.iter().enumerate() {
            if z.root_order() != t.root_order {
                errs.push(TableError::RootOrder { row: r, class: c, expected: t.root_order, got: z.root_order() });
            }
        }
        match row[0].as_integer() {
            Ok(d) if d > 0 => {}
            _ => errs.push(TableError::Dimension { row: r, value: row[0].to_string() }),
        }
    }
    if !errs.is_empty() {
        return Err(errs);
    }

    let dim_squares: u64 = (0..t.num_rows()).map(|r| t.dim(r).pow(2)).sum();
    if dim_squares != t.group_order {
        errs.push(TableError::DimensionSquares { expected: t.group_order, got: dim_squares });
    }

    for i in 0..t.num_rows() {
        for j in 0..t.num_rows() {
            let expected = (i == j) as i64;
            match inner_product(t, &t.rows[i], &t.rows[j]) {
                Ok(ip) if ip == CycloInt::from_integer(t.root_order, expected) => {}
                Ok(ip) => errs.push(TableError::Orthogonality { i, j, got: ip.to_string(), expected }),
                Err(CycloError::NotDivisible(_)) => errs.push(TableError::Orthogonality {
                    i,
                    j,
                    got: "a non-integral multiple of 1/|G|".into(),
                    expected,
                }),
                Err(source) => {
                    errs.push(TableError::Arithmetic { context: format!("rows {i}, {j}"), source })
                }
            }
        }
    }

    if errs.is_empty() {
        Ok(())
    } else {
        Err(errs)
    }
}

/// `V` as a multiset of irreducible rows.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RepSpec {
    pub rows: Vec<usize>,
}

impl RepSpec {
    pub fn new(rows: Vec<usize>) -> Self {
        RepSpec { rows }
    }

    /// Comma-separated row indices, repeats allowed; empty string is `V = 0`.
    pub fn parse(s: &str) -> Result<Self, ChartabError> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(RepSpec::default());
        }
        let rows = s
            .split(',')
            .map(|tok| tok.trim().parse::<usize>().map_err(|_| ChartabError::BadRowToken(tok.trim().into())))
            .collect::<Result<_, _>>()?;
        Ok(RepSpec { rows })
    }

    pub fn dim(&self, t: &CharacterTable) -> u64 {
        self.rows.iter().map(|&r| t.dim(r)).sum()
    }

    /// The dual representation `V*`.
    pub fn conjugate(&self, t: &CharacterTable) -> Result<RepSpec, ChartabError> {
        let rows = self
            .rows
            .iter()
            .map(|&r| t.conjugate_row(r).ok_or(ChartabError::NoConjugate(r)))
            .collect::<Result<_, _>>()?;
        Ok(RepSpec { rows })
    }

    fn check(&self, t: &CharacterTable) -> Result<(), ChartabError> {
        match self.rows.iter().find(|&&r| r >= t.num_rows()) {
            Some(&index) => Err(ChartabError::RowIndex { index, rows: t.num_rows() }),
            None => Ok(()),
        }
    }

    fn character(&self, t: &CharacterTable) -> Vec<CycloInt> {
        (0..t.num_classes())
            .map(|c| self.rows.iter().fold(CycloInt::zero(t.root_order), |acc, &r| acc + t.rows[r][c].clone()))
            .collect()
    }

    pub fn describe(&self) -> String {
        self.rows.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(",")
    }
}

fn to_multiplicity(z: CycloInt, i: usize, j: usize) -> Result<u64, ChartabError> {
    let value = z.as_integer().map_err(|source| ChartabError::Arithmetic { i, j, source })?;
    u64::try_from(value).map_err(|_| ChartabError::NegativeMultiplicity { i, j, value })
}

/// Multiplicity of `S_j` in `V ⊗ S_i`.
pub fn tensor_multiplicity(t: &CharacterTable, v: &RepSpec, i: usize, j: usize) -> Result<u64, ChartabError> {
    v.check(t)?;
    for index in [i, j] {
        if index >= t.num_rows() {
            return Err(ChartabError::RowIndex { index, rows: t.num_rows() });
        }
    }
    let chi_v = v.character(t);
    let product: Vec<CycloInt> = chi_v.iter().zip(&t.rows[i]).map(|(a, b)| a * b).collect();
    let z = inner_product(t, &product, &t.rows[j]).map_err(|source| ChartabError::Arithmetic { i, j, source })?;
    to_multiplicity(z, i, j)
}

/// The McKay quiver `Q_V(G)` with one vertex per table row.
pub fn mckay_quiver_table(t: &CharacterTable, v: &RepSpec) -> Result<Quiver, ChartabError> {
    v.check(t)?;
    let chi_v = v.character(t);
    let n = t.num_rows();
    let mut mult = vec![vec![0u64; n]; n];
    for i in 0..n {
        let product: Vec<CycloInt> = chi_v.iter().zip(&t.rows[i]).map(|(a, b)| a * b).collect();
        for j in 0..n {
            let z =
                inner_product(t, &product, &t.rows[j]).map_err(|source| ChartabError::Arithmetic { i, j, source })?;
            mult[i][j] = to_multiplicity(z, i, j)?;
        }
    }
    let vertices = (0..n)
        .map(|r| Vertex { id: r, label: format!("χ{r}"), payload: VertexPayload::Row(r), dim: t.dim(r) })
        .collect();
    let meta = QuiverMeta {
        group: if t.name.is_empty() { format!("order {}", t.group_order) } else { t.name.clone() },
        rep: v.describe(),
        ambient: Ambient::GL,
        construction: "chartab".into(),
        rep_dim: v.dim(t),
        group_orders: None,
    };
    Ok(Quiver::new(vertices, mult, meta).expect("square by construction"))
}

/// Character table of an abelian group: one singleton class per element
/// (lex order), one row per character (lex order).
pub fn table_from_abelian(g: &FinAbGroup) -> CharacterTable {
    let elements = g.elements();
    let inverse_class = elements
        .iter()
        .map(|x| {
            let inv: Vec<u32> = x.exponents().iter().zip(g.orders()).map(|(&e, &n)| (n - e) % n).collect();
            g.index_of(&inv)
        })
        .collect();
    let rows = enumerate_characters(g)
        .iter()
        .map(|chi| elements.iter().map(|x| char_eval(g, chi, x)).collect())
        .collect();
    CharacterTable {
        name: g.describe(),
        group_order: g.size() as u64,
        class_sizes: vec![1; g.size()],
        inverse_class,
        root_order: g.exponent(),
        rows,
    }
}

const Q8_TABLE: &str = include_str!("../data/q8.json");

/// The quaternion group of order 8; its 2-dimensional irreducible is row 4.
pub fn quaternion_table() -> CharacterTable {
    load_table_str(Q8_TABLE).expect("shipped Q8 table parses")
}

pub const BUILTIN_TABLES: &[&str] = &[
    "c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8", "c9", "c10", "c11", "c12", "c2xc2", "q8",
];

/// Built-in tables: `c1` … `c12`, `c2xc2`, `q8`.
pub fn builtin_table(name: &str) -> Option<CharacterTable> {
    let lower = name.to_ascii_lowercase();
    match lower.as_str() {
        "q8" => Some(quaternion_table()),
        "c2xc2" | "klein" => Some(table_from_abelian(&FinAbGroup::new(vec![2, 2]).ok()?)),
        _ => {
            let n: u32 = lower.strip_prefix('c')?.parse().ok()?;
            (1..=12).contains(&n).then(|| table_from_abelian(&FinAbGroup::cyclic(n)))
        }
    }
}

// File format: one JSON object; each entry is a list of [coefficient, power]
// pairs meaning Σ c·ζ_N^p. Saved files always carry canonical pairs.

#[derive(Serialize, Deserialize)]
struct TableFile {
    #[serde(default = "default_version")]
    format_version: u32,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    name: String,
    group_order: u64,
    class_sizes: Vec<u64>,
    inverse_class: Vec<usize>,
    root_order: u32,
    rows: Vec<Vec<Vec<(i64, i64)>>>,
}

fn default_version() -> u32 {
    TABLE_FORMAT_VERSION
}

pub fn load_table_str(text: &str) -> Result<CharacterTable, ChartabError> {
    let file: TableFile = serde_json::from_str(text)?;
    if file.format_version != TABLE_FORMAT_VERSION {
        return Err(ChartabError::FormatVersion(file.format_version));
    }
    if file.root_order == 0 {
        return Err(ChartabError::Invalid(vec![TableError::RootOrder {
            row: 0,
            class: 0,
            expected: 1,
            got: 0,
        }]));
    }
    let rows = file
        .rows
        .iter()
        .enumerate()
        .map(|(r, row)| {
            row.iter()
                .enumerate()
                .map(|(c, terms)| {
                    CycloInt::from_terms(file.root_order, terms).map_err(|source| {
                        ChartabError::Invalid(vec![TableError::Arithmetic { context: format!("entry ({r}, {c})"), source }])
                    })
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CharacterTable {
        name: file.name,
        group_order: file.group_order,
        class_sizes: file.class_sizes,
        inverse_class: file.inverse_class,
        root_order: file.root_order,
        rows,
    })
}

pub fn load_table(path: &Path) -> Result<CharacterTable, ChartabError> {
    load_table_str(&std::fs::read_to_string(path)?)
}

pub fn save_table_string(t: &CharacterTable) -> String {
    let file = TableFile {
        format_version: TABLE_FORMAT_VERSION,
        name: t.name.clone(),
        group_order: t.group_order,
        class_sizes: t.class_sizes.clone(),
        inverse_class: t.inverse_class.clone(),
        root_order: t.root_order,
        rows: t.rows.iter().map(|row| row.iter().map(CycloInt::terms).collect()).collect(),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("table serializes");
    s.push('\n');
    s
}

impl fmt::Display for CharacterTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} (order {}, {} classes)", self.name, self.group_order, self.num_classes())?;
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|z| z.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2_table() -> CharacterTable {
        CharacterTable {
            name: "C2".into(),
            group_order: 2,
            class_sizes: vec![1, 1],
            inverse_class: vec![0, 1],
            root_order: 2,
            rows: vec![
                vec![CycloInt::from_integer(2, 1), CycloInt::from_integer(2, 1)],
                vec![CycloInt::from_integer(2, 1), CycloInt::from_integer(2, -1)],
            ],
        }
    }

    /// Brute-force inner product straight from the definition, using only
    /// ring operators.
    fn brute_multiplicity(t: &CharacterTable, v: &[usize], i: usize, j: usize) -> i64 {
        let mut sum = CycloInt::zero(t.root_order);
        for c in 0..t.num_classes() {
            let mut chi_v = CycloInt::zero(t.root_order);
            for &r in v {
                chi_v = chi_v + t.rows[r][c].clone();
            }
            let term = &(&chi_v * &t.rows[i][c]) * &t.rows[j][c].conj();
            sum = sum + term.try_scale(t.class_sizes[c] as i64).unwrap();
        }
        sum.divide_by_integer(t.group_order as i64).unwrap().as_integer().unwrap()
    }

    #[test]
    fn builtin_tables_validate() {
        for name in BUILTIN_TABLES {
            let t = builtin_table(name).unwrap();
            assert_eq!(validate_table(&t), Ok(()), "{name}");
        }
        assert!(builtin_table("c13").is_none());
        assert!(builtin_table("s3").is_none());
        assert_eq!(validate_table(&c2_table()), Ok(()));
    }

    #[test]
    fn q8_shape() {
        let q8 = quaternion_table();
        assert_eq!(q8.class_sizes, vec![1, 1, 2, 2, 2]);
        assert_eq!((0..5).map(|r| q8.dim(r)).collect::<Vec<_>>(), vec![1, 1, 1, 1, 2]);
        assert_eq!(q8.rows[4][1], CycloInt::from_integer(4, -2));
    }

    #[test]
    fn validation_reports_named_failures() {
        let mut t = c2_table();
        t.class_sizes = vec![1, 2];
        let errs = validate_table(&t).unwrap_err();
        assert!(errs.iter().any(|e| matches!(e, TableError::ClassSizeSum { expected: 2, got: 3 })));
        assert!(errs[0].to_string().starts_with("class size sum"));

        let mut t = c2_table();
        t.rows[1][1] = CycloInt::from_integer(2, 1);
        let errs = validate_table(&t).unwrap_err();
        assert!(errs.iter().any(|e| matches!(e, TableError::Orthogonality { i: 0, j: 1, .. })));

        let mut t = c2_table();
        t.inverse_class = vec![1, 0];
        let errs = validate_table(&t).unwrap_err();
        assert!(errs.contains(&TableError::InverseClassMovesIdentity));

        let mut t = c2_table();
        t.rows.pop();
        assert!(validate_table(&t).unwrap_err().contains(&TableError::NotSquare { rows: 1, classes: 2 }));
    }

    #[test]
    fn c2_multiplicities() {
        let t = c2_table();
        assert_eq!(tensor_multiplicity(&t, &RepSpec::new(vec![1]), 0, 1).unwrap(), 1);
        assert_eq!(tensor_multiplicity(&t, &RepSpec::new(vec![1]), 0, 0).unwrap(), 0);
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(tensor_multiplicity(&t, &RepSpec::new(vec![0]), i, j).unwrap(), (i == j) as u64);
            }
        }
        assert!(matches!(
            tensor_multiplicity(&t, &RepSpec::new(vec![2]), 0, 0),
            Err(ChartabError::RowIndex { index: 2, rows: 2 })
        ));
    }

    #[test]
    fn q8_quiver_is_doubled_affine_d4() {
        let q8 = quaternion_table();
        let v = RepSpec::new(vec![4]);
        assert_eq!(tensor_multiplicity(&q8, &v, 0, 4).unwrap(), 1);
        for j in 0..4 {
            assert_eq!(tensor_multiplicity(&q8, &v, 0, j).unwrap(), 0);
        }
        let q = mckay_quiver_table(&q8, &v).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                let expected = ((i == 4) != (j == 4)) as u64;
                assert_eq!(q.mult()[i][j], expected, "({i},{j})");
                assert_eq!(q.mult()[i][j] as i64, brute_multiplicity(&q8, &[4], i, j));
            }
        }
        assert!(q.row_sum_law_holds());
    }

    #[test]
    fn cyclic_quivers_are_doubled_affine_a() {
        for n in 3..=5u32 {
            let t = builtin_table(&format!("c{n}")).unwrap();
            let q = mckay_quiver_table(&t, &RepSpec::new(vec![1, n as usize - 1])).unwrap();
            let n = n as usize;
            for i in 0..n {
                for j in 0..n {
                    let expected = (j == (i + 1) % n || j == (i + n - 1) % n) as u64;
                    assert_eq!(q.mult()[i][j], expected);
                    assert_eq!(q.mult()[i][j] as i64, brute_multiplicity(&t, &[1, n - 1], i, j));
                }
            }
        }
    }

    #[test]
    fn empty_rep_gives_zero_matrix() {
        let q = mckay_quiver_table(&quaternion_table(), &RepSpec::default()).unwrap();
        assert_eq!(q.arrow_count(), 0);
    }

    #[test]
    fn abelian_tables() {
        let t = table_from_abelian(&FinAbGroup::cyclic(2));
        assert_eq!(t.rows, c2_table().rows);
        let t = table_from_abelian(&FinAbGroup::trivial());
        assert_eq!(t.rows, vec![vec![CycloInt::one(1)]]);
        let t = table_from_abelian(&FinAbGroup::cyclic(5));
        for (r, row) in t.rows.iter().enumerate() {
            for (c, z) in row.iter().enumerate() {
                assert_eq!(*z, CycloInt::root_power(5, (r * c) as i64));
            }
        }
    }

    #[test]
    fn duality_and_row_sums() {
        let t = builtin_table("c6").unwrap();
        let v = RepSpec::new(vec![1, 2, 2]);
        let dual = v.conjugate(&t).unwrap();
        assert_eq!(dual.rows, vec![5, 4, 4]);
        let q = mckay_quiver_table(&t, &v).unwrap();
        let qd = mckay_quiver_table(&t, &dual).unwrap();
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(q.mult()[i][j], qd.mult()[j][i]);
            }
        }
        assert!(q.row_sum_law_holds());

        let q8 = quaternion_table();
        let q = mckay_quiver_table(&q8, &RepSpec::new(vec![4, 1])).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(q.mult()[i][j], q.mult()[j][i]);
            }
        }
    }

    #[test]
    fn file_round_trip() {
        let q8 = quaternion_table();
        let saved = save_table_string(&q8);
        let reloaded = load_table_str(&saved).unwrap();
        assert_eq!(reloaded, q8);
        assert_eq!(save_table_string(&reloaded), saved);

        let c12 = builtin_table("c12").unwrap();
        assert_eq!(load_table_str(&save_table_string(&c12)).unwrap(), c12);
    }

    #[test]
    fn file_errors() {
        assert!(matches!(load_table_str("{"), Err(ChartabError::Parse(_))));
        let bumped = Q8_TABLE.replace("\"format_version\": 1", "\"format_version\": 7");
        assert!(matches!(load_table_str(&bumped), Err(ChartabError::FormatVersion(7))));
    }

    #[test]
    fn rep_spec_parsing() {
        assert_eq!(RepSpec::parse("4, 4,0").unwrap().rows, vec![4, 4, 0]);
        assert_eq!(RepSpec::parse("").unwrap().rows, Vec::<usize>::new());
        assert!(matches!(RepSpec::parse("1,x"), Err(ChartabError::BadRowToken(t)) if t == "x"));
    }
}
