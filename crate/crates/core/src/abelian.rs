//! Finite abelian groups `C_{n_1} × … × C_{n_r}`, their characters, and
//! diagonal representations.
//!
//! Group elements and characters are both exponent tuples. The character
//! with exponents `(e_1, …, e_r)` sends `(g_1, …, g_r)` to
//! `Π ζ_{n_p}^{e_p g_p}`, so the character group is again `Π C_{n_p}` and
//! multiplying characters is componentwise addition.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cyclotomic::CycloInt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AbelianError {
    #[error("group must have at least one cyclic factor")]
    EmptyGroup,
    #[error("cyclic factor orders must be positive")]
    ZeroOrder,
    #[error("invalid group order '{0}'")]
    BadOrder(String),
    #[error("invalid exponent '{0}'")]
    BadExponent(String),
    #[error("tuple '{tuple}' has {got} entries, group rank is {rank}")]
    Arity { tuple: String, got: usize, rank: usize },
    #[error("element set is not a subgroup: {0}")]
    NotASubgroup(String),
}

/// `C_{orders[0]} × … × C_{orders[r−1]}`. The trivial group is `[1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct FinAbGroup {
    orders: Vec<u32>,
}

impl TryFrom<Vec<u32>> for FinAbGroup {
    type Error = AbelianError;
    fn try_from(orders: Vec<u32>) -> Result<Self, AbelianError> {
        FinAbGroup::new(orders)
    }
}

impl From<FinAbGroup> for Vec<u32> {
    fn from(g: FinAbGroup) -> Self {
        g.orders
    }
}

impl FinAbGroup {
    pub fn new(orders: Vec<u32>) -> Result<Self, AbelianError> {
        if orders.is_empty() {
            return Err(AbelianError::EmptyGroup);
        }
        if orders.contains(&0) {
            return Err(AbelianError::ZeroOrder);
        }
        Ok(FinAbGroup { orders })
    }

    pub fn trivial() -> Self {
        FinAbGroup { orders: vec![1] }
    }

    pub fn cyclic(n: u32) -> Self {
        Self::new(vec![n]).expect("cyclic group order must be positive")
    }

    /// `C_2^k`, the group behind the sixiang, bagua and hexagram quivers.
    pub fn elementary_two(k: usize) -> Self {
        Self::new(vec![2; k.max(1)]).expect("nonempty")
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn size(&self) -> usize {
        self.orders.iter().map(|&n| n as usize).product()
    }

    /// Least common multiple of the factor orders.
    pub fn exponent(&self) -> u32 {
        self.orders.iter().fold(1, |acc, &n| num_integer::lcm(acc, n))
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement { exponents: vec![0; self.rank()] }
    }

    pub fn element(&self, exponents: &[i64]) -> Result<GroupElement, AbelianError> {
        Ok(GroupElement { exponents: self.reduce(exponents)? })
    }

    pub fn character(&self, exponents: &[i64]) -> Result<AbCharacter, AbelianError> {
        Ok(AbCharacter { exponents: self.reduce(exponents)? })
    }

    pub fn trivial_character(&self) -> AbCharacter {
        AbCharacter { exponents: vec![0; self.rank()] }
    }

    /// The character that is `ζ_{n_p}` on the `p`-th generator and trivial
    /// on the others.
    pub fn coordinate_character(&self, p: usize) -> AbCharacter {
        let mut exponents = vec![0; self.rank()];
        exponents[p] = 1 % self.orders[p];
        AbCharacter { exponents }
    }

    fn reduce(&self, exponents: &[i64]) -> Result<Vec<u32>, AbelianError> {
        if exponents.len() != self.rank() {
            return Err(AbelianError::Arity {
                tuple: join(exponents.iter()),
                got: exponents.len(),
                rank: self.rank(),
            });
        }
        Ok(exponents
            .iter()
            .zip(&self.orders)
            .map(|(&e, &n)| e.rem_euclid(n as i64) as u32)
            .collect())
    }

    /// All elements in lexicographic order of exponent tuples.
    pub fn elements(&self) -> Vec<GroupElement> {
        self.tuples().into_iter().map(|exponents| GroupElement { exponents }).collect()
    }

    fn tuples(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::with_capacity(self.size());
        let mut cur = vec![0u32; self.rank()];
        loop {
            out.push(cur.clone());
            // odometer, last coordinate fastest
            let mut p = self.rank();
            loop {
                if p == 0 {
                    return out;
                }
                p -= 1;
                cur[p] += 1;
                if cur[p] < self.orders[p] {
                    break;
                }
                cur[p] = 0;
            }
        }
    }

    /// Position of an exponent tuple in lexicographic order (mixed radix).
    pub fn index_of(&self, exponents: &[u32]) -> usize {
        exponents
            .iter()
            .zip(&self.orders)
            .fold(0usize, |acc, (&e, &n)| acc * n as usize + e as usize)
    }

    pub fn compose(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement { exponents: self.add_tuples(&a.exponents, &b.exponents) }
    }

    fn add_tuples(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        assert_eq!(a.len(), self.rank(), "rank mismatch");
        assert_eq!(b.len(), self.rank(), "rank mismatch");
        a.iter().zip(b).zip(&self.orders).map(|((&x, &y), &n)| (x + y) % n).collect()
    }

    /// Order of a tuple under componentwise addition.
    pub fn tuple_order(&self, exponents: &[u32]) -> u32 {
        exponents
            .iter()
            .zip(&self.orders)
            .map(|(&e, &n)| n / num_integer::gcd(e, n))
            .fold(1, num_integer::lcm)
    }

    /// Human-readable description, e.g. `C2xC2`, `C1`.
    pub fn describe(&self) -> String {
        self.orders.iter().map(|n| format!("C{n}")).collect::<Vec<_>>().join("x")
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

/// Parses the CLI group grammar: comma-separated positive integers.
impl FromStr for FinAbGroup {
    type Err = AbelianError;
    fn from_str(s: &str) -> Result<Self, AbelianError> {
        let orders = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                match tok.parse::<u32>() {
                    Ok(n) if n >= 1 => Ok(n),
                    _ => Err(AbelianError::BadOrder(tok.to_string())),
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        FinAbGroup::new(orders)
    }
}

fn join<T: fmt::Display>(it: impl Iterator<Item = T>) -> String {
    it.map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    exponents: Vec<u32>,
}

impl GroupElement {
    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AbCharacter {
    exponents: Vec<u32>,
}

impl AbCharacter {
    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }
}

impl fmt::Display for AbCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(self.exponents.iter()))
    }
}

/// Irr(G) in lexicographic order of exponent tuples.
pub fn enumerate_characters(g: &FinAbGroup) -> Vec<AbCharacter> {
    g.tuples().into_iter().map(|exponents| AbCharacter { exponents }).collect()
}

pub fn char_mul(g: &FinAbGroup, a: &AbCharacter, b: &AbCharacter) -> AbCharacter {
    AbCharacter { exponents: g.add_tuples(&a.exponents, &b.exponents) }
}

pub fn char_inv(g: &FinAbGroup, a: &AbCharacter) -> AbCharacter {
    assert_eq!(a.exponents.len(), g.rank(), "rank mismatch");
    AbCharacter {
        exponents: a.exponents.iter().zip(&g.orders).map(|(&e, &n)| (n - e) % n).collect(),
    }
}

/// The exponent `e` with `χ(g) = ζ_N^e`, `N` the group exponent.
pub fn char_eval_exponent(g: &FinAbGroup, chi: &AbCharacter, x: &GroupElement) -> u32 {
    assert_eq!(chi.exponents.len(), g.rank(), "rank mismatch");
    assert_eq!(x.exponents.len(), g.rank(), "rank mismatch");
    let big_n = g.exponent() as u64;
    let e = chi
        .exponents
        .iter()
        .zip(&x.exponents)
        .zip(&g.orders)
        .map(|((&c, &v), &n)| c as u64 * v as u64 % n as u64 * (big_n / n as u64))
        .sum::<u64>();
    (e % big_n) as u32
}

/// `χ(g)` as an exact cyclotomic integer at root order = group exponent.
pub fn char_eval(g: &FinAbGroup, chi: &AbCharacter, x: &GroupElement) -> CycloInt {
    CycloInt::root_power(g.exponent(), char_eval_exponent(g, chi, x) as i64)
}

/// A diagonal representation: a multiset of characters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbRep {
    group: FinAbGroup,
    summands: Vec<AbCharacter>,
}

impl AbRep {
    pub fn new(group: FinAbGroup, summands: Vec<AbCharacter>) -> Result<Self, AbelianError> {
        for s in &summands {
            if s.exponents.len() != group.rank() {
                return Err(AbelianError::Arity {
                    tuple: s.to_string(),
                    got: s.exponents.len(),
                    rank: group.rank(),
                });
            }
            if s.exponents.iter().zip(&group.orders).any(|(&e, &n)| e >= n) {
                return Err(AbelianError::BadExponent(s.to_string()));
            }
        }
        Ok(AbRep { group, summands })
    }

    /// Builds a representation from raw exponent tuples.
    pub fn from_tuples(group: &FinAbGroup, tuples: &[&[i64]]) -> Result<Self, AbelianError> {
        let summands = tuples.iter().map(|t| group.character(t)).collect::<Result<_, _>>()?;
        Ok(AbRep { group: group.clone(), summands })
    }

    /// Parses the CLI representation grammar: semicolon-separated exponent
    /// tuples, each with exactly `rank` comma-separated entries. The empty
    /// string is the zero representation.
    pub fn parse(group: &FinAbGroup, s: &str) -> Result<Self, AbelianError> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(AbRep { group: group.clone(), summands: vec![] });
        }
        let mut summands = Vec::new();
        for tuple in s.split(';') {
            let entries = tuple
                .split(',')
                .map(|tok| {
                    let tok = tok.trim();
                    tok.parse::<u32>().map_err(|_| AbelianError::BadExponent(tok.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            if entries.len() != group.rank() {
                return Err(AbelianError::Arity {
                    tuple: tuple.trim().to_string(),
                    got: entries.len(),
                    rank: group.rank(),
                });
            }
            if let Some((e, _)) = entries.iter().zip(&group.orders).find(|(&e, &n)| e >= n) {
                return Err(AbelianError::BadExponent(e.to_string()));
            }
            summands.push(AbCharacter { exponents: entries });
        }
        Ok(AbRep { group: group.clone(), summands })
    }

    /// `V` made of the `rank` coordinate characters, e.g. `χ_100 ⊕ χ_010 ⊕ χ_001`.
    pub fn coordinate(group: &FinAbGroup) -> Self {
        let summands = (0..group.rank()).map(|p| group.coordinate_character(p)).collect();
        AbRep { group: group.clone(), summands }
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn summands(&self) -> &[AbCharacter] {
        &self.summands
    }

    pub fn dim(&self) -> usize {
        self.summands.len()
    }

    pub fn with_summand(&self, chi: AbCharacter) -> Self {
        let mut summands = self.summands.clone();
        summands.push(chi);
        AbRep { group: self.group.clone(), summands }
    }

    /// Same grammar as [`AbRep::parse`].
    pub fn describe(&self) -> String {
        self.summands.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(";")
    }
}

/// `det V`, the product of all summands.
pub fn det_character(v: &AbRep) -> AbCharacter {
    v.summands
        .iter()
        .fold(v.group.trivial_character(), |acc, s| char_mul(&v.group, &acc, s))
}

/// A subgroup given as an explicit, closed set of elements of its ambient group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    ambient: FinAbGroup,
    elements: Vec<GroupElement>,
}

impl Subgroup {
    /// Checks closure under the group law and stores the elements in lex order.
    pub fn new(ambient: &FinAbGroup, mut elements: Vec<GroupElement>) -> Result<Self, AbelianError> {
        if let Some(bad) = elements.iter().find(|x| {
            x.exponents.len() != ambient.rank()
                || x.exponents.iter().zip(&ambient.orders).any(|(&e, &n)| e >= n)
        }) {
            return Err(AbelianError::NotASubgroup(format!(
                "({}) is not an element of {ambient}",
                join(bad.exponents.iter())
            )));
        }
        elements.sort();
        elements.dedup();
        if elements.binary_search(&ambient.identity()).is_err() {
            return Err(AbelianError::NotASubgroup("identity missing".into()));
        }
        for a in &elements {
            for b in &elements {
                let ab = ambient.compose(a, b);
                if elements.binary_search(&ab).is_err() {
                    return Err(AbelianError::NotASubgroup(format!(
                        "({}) + ({}) = ({}) not in set",
                        join(a.exponents.iter()),
                        join(b.exponents.iter()),
                        join(ab.exponents.iter())
                    )));
                }
            }
        }
        Ok(Subgroup { ambient: ambient.clone(), elements })
    }

    pub fn whole(g: &FinAbGroup) -> Self {
        Subgroup { ambient: g.clone(), elements: g.elements() }
    }

    /// `ker χ = { g : χ(g) = 1 }`.
    pub fn kernel(g: &FinAbGroup, chi: &AbCharacter) -> Self {
        let elements = g.elements().into_iter().filter(|x| char_eval_exponent(g, chi, x) == 0).collect();
        Subgroup { ambient: g.clone(), elements }
    }

    pub fn ambient(&self) -> &FinAbGroup {
        &self.ambient
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn describe(&self) -> String {
        let elems = self.elements.iter().map(|x| format!("({})", join(x.exponents.iter()))).collect::<Vec<_>>();
        format!("subgroup of {} {{{}}}", self.ambient, elems.join(","))
    }
}

/// A character of a subgroup, recorded by its values on the subgroup's
/// elements (in the subgroup's element order) as exponents of `ζ_N`, with
/// `N` the ambient group exponent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RestrictedCharacter {
    values: Vec<u32>,
}

impl RestrictedCharacter {
    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// Pointwise product of two restrictions to the same subgroup.
    pub fn mul(&self, other: &Self, root_order: u32) -> Self {
        RestrictedCharacter {
            values: self.values.iter().zip(&other.values).map(|(&a, &b)| (a + b) % root_order).collect(),
        }
    }
}

impl fmt::Display for RestrictedCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", join(self.values.iter()))
    }
}

pub fn restrict_character(chi: &AbCharacter, n: &Subgroup) -> RestrictedCharacter {
    RestrictedCharacter {
        values: n.elements.iter().map(|x| char_eval_exponent(&n.ambient, chi, x)).collect(),
    }
}

/// Restricts every summand of `V` to `N`. The dimension is preserved.
pub fn restrict_rep(v: &AbRep, n: &Subgroup) -> Result<Vec<RestrictedCharacter>, AbelianError> {
    if n.ambient != v.group {
        return Err(AbelianError::NotASubgroup(format!(
            "subgroup lives in {}, representation in {}",
            n.ambient, v.group
        )));
    }
    Ok(v.summands.iter().map(|s| restrict_character(s, n)).collect())
}
