//! Restricted lattice paths: grammar, peak data, weight/charge/relative
//! heights, and exhaustive enumeration of the counts `P_{K,i}(2n,m)`.
//!
//! Paths live in the first quadrant of the integer lattice and obey:
//!
//! 1. the start is an even non-negative position on the y axis;
//! 2. steps go northeast `(x,y) -> (x+1,y+1)`, southeast `(x,y) -> (x+1,y-1)`
//!    when `y >= 1`, or horizontally `(x,0) -> (x+1,0)` on the axis only;
//! 3. a non-empty path ends on the axis;
//! 4. (K-restriction) peaks sit at even x positions;
//! 5. (K-restriction) peak heights are at most `K - 1`.
//!
//! The *weight* of a path is the sum of the x coordinates of its peaks. The
//! *relative height* of a peak at `(x, y)` is the largest `h` for which the
//! path has vertices at height `y - h` on both sides of `x` such that the
//! enclosed stretch contains no peak taller than `y` and every other peak of
//! height exactly `y` inside it lies to the right of `x`. The *charge* is
//! the sum of all relative heights.
//!
//! Canonical form: a path carries no steps after the southeast step that
//! finally returns it to the axis, so a path with no peaks is stored with an
//! empty step sequence and is the unique path of weight 0 for its start
//! height.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::jagged::Restriction;
use crate::table::CountTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    NorthEast,
    SouthEast,
    Horizontal,
}

impl Step {
    pub fn to_char(self) -> char {
        match self {
            Step::NorthEast => 'N',
            Step::SouthEast => 'S',
            Step::Horizontal => 'H',
        }
    }

    pub fn from_char(c: char) -> Result<Self> {
        match c {
            'N' => Ok(Step::NorthEast),
            'S' => Ok(Step::SouthEast),
            'H' => Ok(Step::Horizontal),
            _ => Err(Error::InvalidPath(format!("unknown step character {c:?}"))),
        }
    }
}

/// One peak of a path: position, height, relative height, and the number of
/// horizontal moves strictly to its left.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Peak {
    pub x: u32,
    pub y: u32,
    pub h: u32,
    pub o: u32,
}

/// A lattice path in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    start: u32,
    steps: Vec<Step>,
}

impl LatticePath {
    /// Validates the step grammar, the terminal condition, and canonicity.
    pub fn new(start: u32, steps: Vec<Step>) -> Result<Self> {
        if !start.is_multiple_of(2) {
            return Err(Error::InvalidPath(format!("start height {start} is odd")));
        }
        let mut y = i64::from(start);
        let mut last_ne = None;
        for (idx, &s) in steps.iter().enumerate() {
            match s {
                Step::NorthEast => {
                    y += 1;
                    last_ne = Some(idx);
                }
                Step::SouthEast => {
                    if y < 1 {
                        return Err(Error::InvalidPath(
                            "southeast step below the axis".into(),
                        ));
                    }
                    y -= 1;
                }
                Step::Horizontal => {
                    if y != 0 {
                        return Err(Error::InvalidPath(
                            "horizontal step off the axis".into(),
                        ));
                    }
                }
            }
        }
        if !steps.is_empty() {
            if y != 0 {
                return Err(Error::InvalidPath("path does not end on the axis".into()));
            }
            let Some(last_ne) = last_ne else {
                return Err(Error::InvalidPath(
                    "peak-free path is canonically empty".into(),
                ));
            };
            if steps[last_ne + 1..].iter().any(|&s| s != Step::SouthEast) {
                return Err(Error::InvalidPath(
                    "trailing steps after the final descent".into(),
                ));
            }
        }
        Ok(Self { start, steps })
    }

    /// The unique weight-0 path for a given (even) start height.
    pub fn empty(start: u32) -> Result<Self> {
        Self::new(start, Vec::new())
    }

    pub fn start(&self) -> u32 {
        self.start
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn steps_string(&self) -> String {
        self.steps.iter().map(|s| s.to_char()).collect()
    }

    pub fn from_steps_str(start: u32, s: &str) -> Result<Self> {
        let steps = s.chars().map(Step::from_char).collect::<Result<Vec<_>>>()?;
        Self::new(start, steps)
    }

    /// All vertices `(x, y)` including the start.
    pub fn vertices(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut y = self.start;
        out.push((0, y));
        for (idx, &s) in self.steps.iter().enumerate() {
            match s {
                Step::NorthEast => y += 1,
                Step::SouthEast => y -= 1,
                Step::Horizontal => {}
            }
            out.push((idx as u32 + 1, y));
        }
        out
    }

    /// Peaks with position, height, relative height, and horizontal-move
    /// counts, left to right.
    pub fn peaks(&self) -> Vec<Peak> {
        let verts = self.vertices();
        let mut raw: Vec<(u32, u32, u32)> = Vec::new(); // (x, y, o)
        let mut h_moves = 0u32;
        for idx in 0..self.steps.len() {
            if self.steps[idx] == Step::Horizontal {
                h_moves += 1;
            }
            if self.steps[idx] == Step::NorthEast
                && self.steps.get(idx + 1) == Some(&Step::SouthEast)
            {
                let (x, y) = verts[idx + 1];
                raw.push((x, y, h_moves));
            }
        }
        raw.iter()
            .map(|&(x, y, o)| Peak {
                x,
                y,
                h: relative_height(&verts, &raw, x, y),
                o,
            })
            .collect()
    }

    pub fn relative_heights(&self) -> Vec<u32> {
        self.peaks().iter().map(|p| p.h).collect()
    }

    /// Sum of the x coordinates of all peaks.
    pub fn weight(&self) -> u64 {
        self.peaks().iter().map(|p| u64::from(p.x)).sum()
    }

    /// Sum of all relative heights.
    pub fn charge(&self) -> u64 {
        self.peaks().iter().map(|p| u64::from(p.h)).sum()
    }

    /// True iff every peak sits at an even position with height at most
    /// `k - 1` (the path grammar itself is enforced by construction).
    pub fn validate(&self, k: u32) -> bool {
        self.peaks()
            .iter()
            .all(|p| p.x % 2 == 0 && p.y < k)
    }
}

/// Relative height of the peak at `(x, y)`: try `h = y` downward and take
/// the first height whose tightest enclosing window at level `y - h` is not
/// disqualified by a taller peak or by an equal-height peak to the left.
fn relative_height(verts: &[(u32, u32)], peaks: &[(u32, u32, u32)], x: u32, y: u32) -> u32 {
    for h in (1..=y).rev() {
        let level = y - h;
        let left = verts
            .iter()
            .filter(|&&(vx, vy)| vx < x && vy == level)
            .map(|&(vx, _)| vx)
            .next_back();
        let right = verts
            .iter()
            .filter(|&&(vx, vy)| vx > x && vy == level)
            .map(|&(vx, _)| vx)
            .next();
        let (Some(left), Some(right)) = (left, right) else {
            continue;
        };
        let ok = peaks.iter().all(|&(px, py, _)| {
            if px <= left || px >= right || px == x {
                true
            } else {
                py < y || (py == y && px > x)
            }
        });
        if ok {
            return h;
        }
    }
    // a peak always admits h = 1 through its own shoulders
    unreachable!("peak with no admissible relative height")
}

impl Serialize for LatticePath {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("LatticePath", 2)?;
        st.serialize_field("start", &self.start)?;
        st.serialize_field("steps", &self.steps_string())?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for LatticePath {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            start: u32,
            steps: String,
        }
        let raw = Raw::deserialize(deserializer)?;
        LatticePath::from_steps_str(raw.start, &raw.steps).map_err(D::Error::custom)
    }
}

/// Count table `P_{K,i}(2n, m)` over all weights `2n <= max_weight`, indexed
/// by (weight, charge). Includes the empty path at weight 0. Rejects odd
/// weight bounds: K-restricted paths have even weight.
pub fn path_counts(r: &Restriction, max_weight: u64) -> Result<CountTable> {
    if !max_weight.is_multiple_of(2) {
        return Err(Error::OddWeightBound(max_weight));
    }
    let mut table = CountTable::new();
    for_each_restricted_path(r.k(), r.start_height(), max_weight, |path| {
        table.add(path.weight(), path.charge());
    });
    Ok(table)
}

/// Visit every K-restricted path from `(0, start)` of weight at most
/// `max_weight`, in depth-first step order (NE before SE before H at each
/// branch). Peaks are forced to even positions and height at most `k - 1`
/// during the walk, so the enumeration prunes hard and is exhaustive.
pub fn for_each_restricted_path<F: FnMut(&LatticePath)>(
    k: u32,
    start: u32,
    max_weight: u64,
    mut f: F,
) {
    assert!(k >= 2, "path restriction needs K >= 2");
    assert_eq!(start % 2, 0, "start height must be even");
    // the weight-0 path
    if let Ok(p) = LatticePath::empty(start) {
        f(&p);
    }
    // A canonical path may open with a run of southeast steps from the
    // start height; every other southeast step follows a peak and is
    // handled inside the walk.
    let mut steps = Vec::new();
    for descent in 0..=start {
        walk(
            k,
            start,
            max_weight,
            &mut steps,
            descent,
            start - descent,
            0,
            &mut f,
        );
        steps.push(Step::SouthEast);
    }
    steps.clear();
}

/// Depth-first extension. `weight` is the accumulated peak weight; a branch
/// is cut as soon as even its cheapest completion exceeds `max_weight`. Any
/// path of weight `<= W` keeps every vertex at `x <= W + K`, so the walk
/// terminates.
#[allow(clippy::too_many_arguments)]
fn walk<F: FnMut(&LatticePath)>(
    k: u32,
    start: u32,
    max_weight: u64,
    steps: &mut Vec<Step>,
    x: u32,
    y: u32,
    weight: u64,
    f: &mut F,
) {
    // Try NE: the next peak will sit at position >= x + 1, contributing at
    // least that much weight.
    if u64::from(y) < u64::from(k) - 1 && weight + u64::from(x) < max_weight {
        steps.push(Step::NorthEast);
        // A peak right here (NE followed by SE): only at even x+1... the
        // peak position is x+1.
        let px = x + 1;
        if px.is_multiple_of(2) && weight + u64::from(px) <= max_weight && y < k - 1 {
            steps.push(Step::SouthEast);
            if y == 0 {
                // returned to the axis: emit this canonical completion
                emit(start, steps, f);
            }
            walk_after_descent(k, start, max_weight, steps, px + 1, y, weight + u64::from(px), f);
            steps.pop();
        }
        // keep climbing
        walk(k, start, max_weight, steps, px, y + 1, weight, f);
        steps.pop();
    }
    // Try H (axis only). A horizontal run only matters if a peak follows;
    // pruned by the same weight bound.
    if y == 0 && weight + u64::from(x) + 2 <= max_weight {
        steps.push(Step::Horizontal);
        walk(k, start, max_weight, steps, x + 1, 0, weight, f);
        steps.pop();
    }
}

/// Continue strictly after a peak: descend, or finish the descent and
/// resume climbing. `y` is the height after the peak's SE step.
#[allow(clippy::too_many_arguments)]
fn walk_after_descent<F: FnMut(&LatticePath)>(
    k: u32,
    start: u32,
    max_weight: u64,
    steps: &mut Vec<Step>,
    x: u32,
    y: u32,
    weight: u64,
    f: &mut F,
) {
    if y > 0 {
        // keep descending
        steps.push(Step::SouthEast);
        if y == 1 {
            emit(start, steps, f);
        }
        walk_after_descent(k, start, max_weight, steps, x + 1, y - 1, weight, f);
        steps.pop();
    }
    // or turn around / walk on
    walk(k, start, max_weight, steps, x, y, weight, f);
}

fn emit<F: FnMut(&LatticePath)>(start: u32, steps: &[Step], f: &mut F) {
    let path = LatticePath {
        start,
        steps: steps.to_vec(),
    };
    debug_assert!(LatticePath::new(start, steps.to_vec()).is_ok());
    f(&path);
}
