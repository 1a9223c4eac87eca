//! Labeling schemes for the traditional Chinese diagrams and the named
//! presets that bind each diagram to a (group, representation,
//! construction) triple.
//!
//! Yao convention: bit `p` of a `C_2^k` character's exponent tuple is the
//! `p`-th line counted from the bottom; exponent 1 is a solid (yang) line,
//! exponent 0 a broken (yin) line.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::abelian::{AbCharacter, AbRep, FinAbGroup};
use crate::mckay::{mckay_quiver_abelian, returning_arrow_quiver, Quiver, VertexPayload};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("label scheme '{scheme}' needs group {expected}, got {got}")]
    Arity { scheme: LabelScheme, expected: String, got: String },
    #[error("label scheme '{0}' needs abelian character vertices")]
    NotAbelian(LabelScheme),
    #[error("unknown preset '{0}'")]
    UnknownPreset(String),
    #[error("unknown label scheme '{0}'")]
    UnknownScheme(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LabelScheme {
    Exponents,
    Yinyang,
    Sixiang,
    Trigram,
    Hexagram,
    Wuxing,
}

impl LabelScheme {
    pub const ALL: [LabelScheme; 6] = [
        LabelScheme::Exponents,
        LabelScheme::Yinyang,
        LabelScheme::Sixiang,
        LabelScheme::Trigram,
        LabelScheme::Hexagram,
        LabelScheme::Wuxing,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LabelScheme::Exponents => "exponents",
            LabelScheme::Yinyang => "yinyang",
            LabelScheme::Sixiang => "sixiang",
            LabelScheme::Trigram => "trigram",
            LabelScheme::Hexagram => "hexagram",
            LabelScheme::Wuxing => "wuxing",
        }
    }

    /// Cyclic factor orders the scheme applies to; `None` means any group.
    pub fn required_orders(self) -> Option<Vec<u32>> {
        match self {
            LabelScheme::Exponents => None,
            LabelScheme::Yinyang => Some(vec![2]),
            LabelScheme::Sixiang => Some(vec![2; 2]),
            LabelScheme::Trigram => Some(vec![2; 3]),
            LabelScheme::Hexagram => Some(vec![2; 6]),
            LabelScheme::Wuxing => Some(vec![5]),
        }
    }

    pub fn check(self, orders: &[u32]) -> Result<(), DiagramError> {
        match self.required_orders() {
            Some(req) if req != orders => Err(DiagramError::Arity {
                scheme: self,
                expected: FinAbGroup::new(req).map(|g| g.describe()).unwrap_or_default(),
                got: FinAbGroup::new(orders.to_vec()).map(|g| g.describe()).unwrap_or_else(|_| "?".into()),
            }),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for LabelScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LabelScheme {
    type Err = DiagramError;
    fn from_str(s: &str) -> Result<Self, DiagramError> {
        LabelScheme::ALL
            .into_iter()
            .find(|scheme| scheme.name() == s)
            .ok_or_else(|| DiagramError::UnknownScheme(s.to_string()))
    }
}

const WUXING: [&str; 5] = ["金", "水", "木", "火", "土"];

const SIXIANG: [&str; 4] = ["太阴 ⚏", "少阳 ⚎", "少阴 ⚍", "太阳 ⚌"];

/// Indexed by `4·b1 + 2·b2 + b3` with `b1` the bottom line.
const TRIGRAMS: [(&str, &str); 8] = [
    ("坤", "☷"),
    ("艮", "☶"),
    ("坎", "☵"),
    ("巽", "☴"),
    ("震", "☳"),
    ("离", "☲"),
    ("兑", "☱"),
    ("乾", "☰"),
];

fn trigram_index(bits: &[u32]) -> usize {
    (bits[0] * 4 + bits[1] * 2 + bits[2]) as usize
}

fn label_exponents(exponents: &[u32], scheme: LabelScheme) -> String {
    match scheme {
        LabelScheme::Exponents => exponents.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(","),
        LabelScheme::Wuxing => WUXING[exponents[0] as usize].to_string(),
        LabelScheme::Yinyang => if exponents[0] == 0 { "阴 (--)" } else { "阳 (—)" }.to_string(),
        LabelScheme::Sixiang => SIXIANG[(exponents[0] * 2 + exponents[1]) as usize].to_string(),
        LabelScheme::Trigram => {
            let (name, glyph) = TRIGRAMS[trigram_index(exponents)];
            format!("{name} {glyph}")
        }
        LabelScheme::Hexagram => {
            // lower trigram = lines 1..3, upper = lines 4..6
            let lower = TRIGRAMS[trigram_index(&exponents[0..3])];
            let upper = TRIGRAMS[trigram_index(&exponents[3..6])];
            format!("上{}下{} {}{}", upper.1, lower.1, upper.0, lower.0)
        }
    }
}

pub fn label_character(g: &FinAbGroup, chi: &AbCharacter, scheme: LabelScheme) -> Result<String, DiagramError> {
    scheme.check(g.orders())?;
    Ok(label_exponents(chi.exponents(), scheme))
}

/// Relabels every vertex of an abelian McKay quiver with `scheme`.
pub fn apply_labels(q: &mut Quiver, scheme: LabelScheme) -> Result<(), DiagramError> {
    let orders = q.meta().group_orders.clone().ok_or(DiagramError::NotAbelian(scheme))?;
    scheme.check(&orders)?;
    let mut labels = Vec::with_capacity(q.len());
    for v in q.vertices() {
        match &v.payload {
            VertexPayload::Exponents(e) => labels.push(label_exponents(e, scheme)),
            _ => return Err(DiagramError::NotAbelian(scheme)),
        }
    }
    for (v, label) in q.vertices_mut().iter_mut().zip(labels) {
        v.label = label;
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Construction {
    Mckay,
    ReturningArrow,
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Construction::Mckay => "mckay",
            Construction::ReturningArrow => "returning_arrow",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LayoutHint {
    Circle,
    DoubledCycle,
    Hypercube,
}

impl fmt::Display for LayoutHint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LayoutHint::Circle => "circle",
            LayoutHint::DoubledCycle => "doubled_cycle",
            LayoutHint::Hypercube => "hypercube",
        })
    }
}

#[derive(Debug, Clone)]
pub struct Preset {
    pub name: &'static str,
    pub description: &'static str,
    pub group: FinAbGroup,
    pub rep: AbRep,
    pub construction: Construction,
    pub scheme: LabelScheme,
    pub layout_hint: LayoutHint,
}

impl Preset {
    pub fn build(&self) -> Quiver {
        let mut q = match self.construction {
            Construction::Mckay => mckay_quiver_abelian(&self.group, &self.rep),
            Construction::ReturningArrow => returning_arrow_quiver(&self.group, &self.rep),
        };
        apply_labels(&mut q, self.scheme).expect("registry schemes match their groups");
        q
    }
}

struct Entry {
    name: &'static str,
    description: &'static str,
    orders: &'static [u32],
    rep: &'static [&'static [i64]],
    construction: Construction,
    scheme: LabelScheme,
    layout_hint: LayoutHint,
}

use Construction::{Mckay, ReturningArrow};
use LayoutHint::{Circle, DoubledCycle, Hypercube};

const COORD6: &[&[i64]] = &[
    &[1, 0, 0, 0, 0, 0],
    &[0, 1, 0, 0, 0, 0],
    &[0, 0, 1, 0, 0, 0],
    &[0, 0, 0, 1, 0, 0],
    &[0, 0, 0, 0, 1, 0],
    &[0, 0, 0, 0, 0, 1],
];

const REGISTRY: &[Entry] = &[
    Entry {
        name: "wuxing-sheng",
        description: "wuxing generating cycle: C5, V = S1",
        orders: &[5],
        rep: &[&[1]],
        construction: Mckay,
        scheme: LabelScheme::Wuxing,
        layout_hint: Circle,
    },
    Entry {
        name: "wuxing-ke",
        description: "wuxing overcoming pentagram: C5, V = S2",
        orders: &[5],
        rep: &[&[2]],
        construction: Mckay,
        scheme: LabelScheme::Wuxing,
        layout_hint: Circle,
    },
    Entry {
        name: "wuxing-xie",
        description: "wuxing weakening (inverse generating): C5, V = S4",
        orders: &[5],
        rep: &[&[4]],
        construction: Mckay,
        scheme: LabelScheme::Wuxing,
        layout_hint: Circle,
    },
    Entry {
        name: "wuxing-wu",
        description: "wuxing insulting (inverse overcoming): C5, V = S3",
        orders: &[5],
        rep: &[&[3]],
        construction: Mckay,
        scheme: LabelScheme::Wuxing,
        layout_hint: Circle,
    },
    Entry {
        name: "wuxing-shengke",
        description: "wuxing generating and overcoming: C5, V = S1 + S2",
        orders: &[5],
        rep: &[&[1], &[2]],
        construction: Mckay,
        scheme: LabelScheme::Wuxing,
        layout_hint: Circle,
    },
    Entry {
        name: "taiji",
        description: "taiji: trivial group, V = S0",
        orders: &[1],
        rep: &[&[0]],
        construction: Mckay,
        scheme: LabelScheme::Exponents,
        layout_hint: Circle,
    },
    Entry {
        name: "liangyi",
        description: "liangyi: C2, V = S1",
        orders: &[2],
        rep: &[&[1]],
        construction: Mckay,
        scheme: LabelScheme::Yinyang,
        layout_hint: DoubledCycle,
    },
    Entry {
        name: "liangyi-sl2",
        description: "liangyi with returning arrows: C2, V = S1 inside SL(2)",
        orders: &[2],
        rep: &[&[1]],
        construction: ReturningArrow,
        scheme: LabelScheme::Yinyang,
        layout_hint: DoubledCycle,
    },
    Entry {
        name: "taijitu",
        description: "taijitu: C2, V = S1 + S1 inside SL(3)",
        orders: &[2],
        rep: &[&[1], &[1]],
        construction: ReturningArrow,
        scheme: LabelScheme::Yinyang,
        layout_hint: DoubledCycle,
    },
    Entry {
        name: "sixiang",
        description: "sixiang: C2xC2, V = x10 + x01",
        orders: &[2, 2],
        rep: &[&[1, 0], &[0, 1]],
        construction: Mckay,
        scheme: LabelScheme::Sixiang,
        layout_hint: Hypercube,
    },
    Entry {
        name: "sixiang-sl3",
        description: "sixiang with returning arrows: C2xC2, V = x10 + x01 inside SL(3)",
        orders: &[2, 2],
        rep: &[&[1, 0], &[0, 1]],
        construction: ReturningArrow,
        scheme: LabelScheme::Sixiang,
        layout_hint: Hypercube,
    },
    Entry {
        name: "bagua",
        description: "bagua: C2^3, V = x100 + x010 + x001",
        orders: &[2, 2, 2],
        rep: &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]],
        construction: Mckay,
        scheme: LabelScheme::Trigram,
        layout_hint: Hypercube,
    },
    Entry {
        name: "hexagrams",
        description: "64 hexagrams: C2^6, V = six coordinate characters",
        orders: &[2, 2, 2, 2, 2, 2],
        rep: COORD6,
        construction: Mckay,
        scheme: LabelScheme::Hexagram,
        layout_hint: Hypercube,
    },
];

pub fn preset_names() -> Vec<&'static str> {
    REGISTRY.iter().map(|e| e.name).collect()
}

pub fn presets() -> Vec<Preset> {
    REGISTRY.iter().map(entry_to_preset).collect()
}

fn entry_to_preset(e: &Entry) -> Preset {
    let group = FinAbGroup::new(e.orders.to_vec()).expect("registry group");
    let rep = AbRep::from_tuples(&group, e.rep).expect("registry rep");
    Preset {
        name: e.name,
        description: e.description,
        group,
        rep,
        construction: e.construction,
        scheme: e.scheme,
        layout_hint: e.layout_hint,
    }
}

pub fn find_preset(name: &str) -> Result<Preset, DiagramError> {
    REGISTRY
        .iter()
        .find(|e| e.name == name)
        .map(entry_to_preset)
        .ok_or_else(|| DiagramError::UnknownPreset(name.to_string()))
}

/// Builds the quiver registered under `name`, labeled with its scheme.
pub fn preset(name: &str) -> Result<Quiver, DiagramError> {
    Ok(find_preset(name)?.build())
}
