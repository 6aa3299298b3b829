//! Cubie-level model of the 2×2×2 and 3×3×3 cubes and their turn metrics.
//!
//! A metric is a generator set closed under inverses; together with a start
//! state it defines the Cayley graph implicitly.

mod moves;
mod rank;
mod state;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

pub use moves::{Face, Move, CORNERS, EDGES};
pub use rank::{coordinate_space, lehmer_rank, lehmer_unrank, rank, unrank, TwoCubeTables};
pub use state::{apply_move, solved_state, CornerState, CubeState, EdgeState, ANCHOR_CORNER};

pub(crate) use state::apply_unchecked;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CubeSize {
    Two,
    Three,
}

impl CubeSize {
    pub fn from_edge_length(n: u32) -> Result<Self, String> {
        match n {
            2 => Ok(CubeSize::Two),
            3 => Ok(CubeSize::Three),
            other => Err(format!("unsupported cube size {other}; expected 2 or 3")),
        }
    }

    pub fn edge_length(self) -> u32 {
        match self {
            CubeSize::Two => 2,
            CubeSize::Three => 3,
        }
    }
}

impl fmt::Display for CubeSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.edge_length();
        write!(f, "{n}x{n}x{n}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MetricName {
    Quarter,
    Square,
    SquareSlice,
}

impl MetricName {
    pub fn as_str(self) -> &'static str {
        match self {
            MetricName::Quarter => "quarter",
            MetricName::Square => "square",
            MetricName::SquareSlice => "square-slice",
        }
    }
}

impl fmt::Display for MetricName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MetricName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "quarter" => Ok(MetricName::Quarter),
            "square" => Ok(MetricName::Square),
            "square-slice" => Ok(MetricName::SquareSlice),
            other => Err(format!(
                "unknown metric {other:?}; expected quarter, square or square-slice"
            )),
        }
    }
}

/// A turn metric: the generators counted as single edges of the Cayley
/// graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Metric {
    size: CubeSize,
    name: MetricName,
    generators: Vec<Move>,
}

impl Metric {
    /// The five supported metrics, in the order of the summary table.
    pub const SUPPORTED: [(CubeSize, MetricName); 5] = [
        (CubeSize::Three, MetricName::SquareSlice),
        (CubeSize::Two, MetricName::Square),
        (CubeSize::Two, MetricName::Quarter),
        (CubeSize::Three, MetricName::Square),
        (CubeSize::Three, MetricName::Quarter),
    ];

    pub fn new(size: CubeSize, name: MetricName) -> Result<Self> {
        let face = |f| Move::face(size, f);
        let generators = match (size, name) {
            // R, D and B never disturb the anchored UFL corner.
            (CubeSize::Two, MetricName::Quarter) => [Face::R, Face::D, Face::B]
                .into_iter()
                .flat_map(|f| {
                    let m = face(f);
                    [m.clone(), m.inverse()]
                })
                .collect(),
            (CubeSize::Two, MetricName::Square) => [Face::R, Face::D, Face::B]
                .into_iter()
                .map(|f| face(f).power(2))
                .collect(),
            (CubeSize::Three, MetricName::Quarter) => Face::ALL
                .into_iter()
                .flat_map(|f| {
                    let m = face(f);
                    [m.clone(), m.inverse()]
                })
                .collect(),
            (CubeSize::Three, MetricName::Square) => {
                Face::ALL.into_iter().map(|f| face(f).power(2)).collect()
            }
            // Opposite outer layers turned 180° together.
            (CubeSize::Three, MetricName::SquareSlice) => [
                (Face::R, Face::L),
                (Face::D, Face::U),
                (Face::B, Face::F),
            ]
            .into_iter()
            .map(|(a, b)| {
                let (a, b) = (face(a).power(2), face(b).power(2));
                let name = format!("{}{}'", a.name(), b.name());
                a.then(&b).with_name(name)
            })
            .collect(),
            (size, name) => return Err(Error::UnsupportedMetric { size, name }),
        };
        Ok(Metric {
            size,
            name,
            generators,
        })
    }

    pub fn cube_size(&self) -> CubeSize {
        self.size
    }

    pub fn name(&self) -> MetricName {
        self.name
    }

    pub fn generators(&self) -> &[Move] {
        &self.generators
    }

    pub fn degree(&self) -> usize {
        self.generators.len()
    }

    /// Exact order of the group generated by this metric, from the usual
    /// counting arguments.
    pub fn group_order(&self) -> BigUint {
        let fact = |n: u32| -> BigUint { (1..=n).map(BigUint::from).product() };
        let pow = |b: u32, e: u32| BigUint::from(b).pow(e);
        match (self.size, self.name) {
            // Each of the three slice axes independently in one of two states.
            (CubeSize::Three, MetricName::SquareSlice) => pow(2, 3),
            // Positions of one tetrad of corners fix everything else.
            (CubeSize::Two, MetricName::Square) => fact(4),
            // Seven free corners, six free twists.
            (CubeSize::Two, MetricName::Quarter) => fact(7) * pow(3, 6),
            // 96 corner configurations times the three edge orbits of 4,
            // halved by the shared parity constraint.
            (CubeSize::Three, MetricName::Square) => {
                BigUint::from(96u32) * fact(4).pow(3) / BigUint::from(2u32)
            }
            (CubeSize::Three, MetricName::Quarter) => {
                fact(8) * pow(3, 7) * fact(12) * pow(2, 11) / BigUint::from(2u32)
            }
            (CubeSize::Two, MetricName::SquareSlice) => {
                unreachable!("constructor rejects unsupported metrics")
            }
        }
    }

    /// Move tables for dense enumeration, available for metrics whose whole
    /// group fits the dense 2×2×2 coordinate space.
    pub fn dense_tables(&self) -> Option<TwoCubeTables> {
        match self.size {
            CubeSize::Two => Some(TwoCubeTables::new(&self.generators)),
            CubeSize::Three => None,
        }
    }

    /// Position of the inverse of generator `index` within the generator list.
    pub fn inverse_index(&self, index: usize) -> Option<usize> {
        let inv = self.generators[index].inverse();
        self.generators.iter().position(|g| g.same_action(&inv))
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.size, self.name)
    }
}

pub fn generators(metric: &Metric) -> &[Move] {
    metric.generators()
}

pub fn group_order(metric: &Metric) -> BigUint {
    metric.group_order()
}
