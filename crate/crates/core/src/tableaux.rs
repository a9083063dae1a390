//! Column arrays of "unusual shape" counted by the multiplicity, and their
//! labeling bijection with nonintersecting R-families.
//!
//! Column `c` (for `c = 1..d-1`) corresponds to the path `R_{d-c}`. It has
//! `c - s_{d-c}` cells, all top-aligned, and below its last cell sits the
//! fixed cap `i_d - i_{d-c} - s_{d-c} + 1`. Rows are read left to right
//! over the cells that are present, skipping shorter columns.

use std::fmt;

use crate::error::Error;
use crate::guard::Guard;
use crate::paths::{r_spec, validate_family, MonotonePath, PathFamily, Step};
use crate::schubert::{s_vector, SchubertDatum};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnusualShape {
    /// `heights[c - 1]` is the length of column `c`.
    pub heights: Vec<usize>,
    /// `caps[c - 1]` is the value appended below column `c`.
    pub caps: Vec<i64>,
}

impl UnusualShape {
    pub fn columns(&self) -> usize {
        self.heights.len()
    }

    pub fn cells(&self) -> usize {
        self.heights.iter().sum()
    }

    /// Length of column `c` (zero-based) after appending its cap.
    fn augmented_height(&self, c: usize) -> usize {
        self.heights[c] + 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct UnusualArray {
    pub columns: Vec<Vec<i64>>,
}

impl UnusualArray {
    pub fn new(columns: Vec<Vec<i64>>) -> Self {
        UnusualArray { columns }
    }

    /// Entry at one-based `(row, column)`, if present.
    pub fn get(&self, row: usize, column: usize) -> Option<i64> {
        self.columns
            .get(column - 1)
            .and_then(|c| c.get(row - 1))
            .copied()
    }

    /// Rows top to bottom; absent cells are `None`.
    pub fn rows(&self) -> Vec<Vec<Option<i64>>> {
        let depth = self.columns.iter().map(Vec::len).max().unwrap_or(0);
        (0..depth)
            .map(|t| self.columns.iter().map(|c| c.get(t).copied()).collect())
            .collect()
    }
}

impl fmt::Display for UnusualArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = self
            .columns
            .iter()
            .map(|c| {
                let inner: Vec<String> = c.iter().map(ToString::to_string).collect();
                format!("[{}]", inner.join(","))
            })
            .collect();
        write!(f, "[{}]", cols.join(","))
    }
}

/// The first property an array fails, with one-based coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// Property (1): wrong number of columns or wrong column length.
    ColumnLength {
        column: usize,
        expected: usize,
        found: usize,
    },
    /// Entries must be positive integers.
    NotPositive { row: usize, column: usize },
    /// Property (2): the cell is smaller than the present cell to its left.
    RowOrder { row: usize, column: usize },
    /// Property (3): the cell is not larger than the cell above it.
    ColumnOrder { row: usize, column: usize },
    /// Property (4): the cap of `column` breaks row or column order.
    Augmented { row: usize, column: usize },
}

impl Violation {
    pub fn property(&self) -> u8 {
        match self {
            Violation::ColumnLength { .. } | Violation::NotPositive { .. } => 1,
            Violation::RowOrder { .. } => 2,
            Violation::ColumnOrder { .. } => 3,
            Violation::Augmented { .. } => 4,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::ColumnLength {
                column,
                expected,
                found,
            } => write!(
                f,
                "(1): column {column} has {found} cells, expected {expected}"
            ),
            Violation::NotPositive { row, column } => {
                write!(
                    f,
                    "(1): entry at row {row}, column {column} is not positive"
                )
            }
            Violation::RowOrder { row, column } => {
                write!(f, "(2): row {row} decreases at column {column}")
            }
            Violation::ColumnOrder { row, column } => {
                write!(f, "(3): column {column} does not increase at row {row}")
            }
            Violation::Augmented { row, column } => {
                write!(
                    f,
                    "(4): cap of column {column} at row {row} breaks the order"
                )
            }
        }
    }
}

/// Column lengths `c - s_{d-c}` and caps `i_d - i_{d-c} - s_{d-c} + 1`.
pub fn shape_of(datum: &SchubertDatum) -> Result<UnusualShape, Error> {
    let d = datum.d();
    if d < 2 {
        return Err(Error::DegenerateShape);
    }
    let s = s_vector(datum);
    let top = datum.i_at(d);
    let mut heights = Vec::with_capacity(d - 1);
    let mut caps = Vec::with_capacity(d - 1);
    for c in 1..d {
        let l = d - c;
        let h = c as i64 - s.at(l);
        debug_assert!(h >= 0);
        heights.push(h as usize);
        caps.push(top - datum.i_at(l) - s.at(l) + 1);
    }
    Ok(UnusualShape { heights, caps })
}

/// Value in augmented row `row` (one-based) of zero-based column `c`.
fn augmented_cell(shape: &UnusualShape, columns: &[Vec<i64>], row: usize, c: usize) -> Option<i64> {
    let h = shape.heights[c];
    if row <= h {
        columns.get(c).and_then(|col| col.get(row - 1)).copied()
    } else if row == h + 1 {
        Some(shape.caps[c])
    } else {
        None
    }
}

/// Checks properties (1)–(4); reports the first violation found.
pub fn validate_array(shape: &UnusualShape, array: &UnusualArray) -> Result<(), Violation> {
    if array.columns.len() != shape.columns() {
        return Err(Violation::ColumnLength {
            column: array.columns.len().min(shape.columns()) + 1,
            expected: shape.heights.get(array.columns.len()).copied().unwrap_or(0),
            found: 0,
        });
    }
    for (c, (col, &h)) in array.columns.iter().zip(&shape.heights).enumerate() {
        if col.len() != h {
            return Err(Violation::ColumnLength {
                column: c + 1,
                expected: h,
                found: col.len(),
            });
        }
        if let Some(t) = col.iter().position(|&v| v < 1) {
            return Err(Violation::NotPositive {
                row: t + 1,
                column: c + 1,
            });
        }
    }
    let depth = shape.heights.iter().copied().max().unwrap_or(0);
    for row in 1..=depth {
        let mut prev: Option<i64> = None;
        for c in 0..shape.columns() {
            if let Some(v) = array.get(row, c + 1) {
                if prev.is_some_and(|p| v < p) {
                    return Err(Violation::RowOrder { row, column: c + 1 });
                }
                prev = Some(v);
            }
        }
    }
    for (c, col) in array.columns.iter().enumerate() {
        if let Some(t) = (1..col.len()).find(|&t| col[t] <= col[t - 1]) {
            return Err(Violation::ColumnOrder {
                row: t + 1,
                column: c + 1,
            });
        }
    }
    for (c, col) in array.columns.iter().enumerate() {
        if col.last().is_some_and(|&v| v >= shape.caps[c]) {
            return Err(Violation::Augmented {
                row: col.len() + 1,
                column: c + 1,
            });
        }
    }
    for row in 1..=depth + 1 {
        let mut prev: Option<(i64, usize)> = None;
        for c in 0..shape.columns() {
            if let Some(v) = augmented_cell(shape, &array.columns, row, c) {
                if let Some((p, pc)) = prev {
                    if v < p {
                        // blame whichever of the two cells is a cap
                        let column = if row == shape.heights[c] + 1 {
                            c + 1
                        } else {
                            pc + 1
                        };
                        return Err(Violation::Augmented { row, column });
                    }
                }
                prev = Some((v, c));
            }
        }
    }
    Ok(())
}

struct ArraySearch<'a, F> {
    shape: &'a UnusualShape,
    columns: Vec<Vec<i64>>,
    nodes: u64,
    guard: Guard,
    visit: F,
}

impl<F: FnMut(&UnusualArray)> ArraySearch<'_, F> {
    /// Largest value allowed in augmented row `row` to the left of or at
    /// column `c`, from caps and the room needed by cells to the right.
    fn right_bound(&self, row: usize, c: usize) -> i64 {
        let mut bound = i64::MAX;
        for r in c + 1..self.shape.columns() {
            let h = self.shape.heights[r];
            let cap = self.shape.caps[r];
            if row <= h {
                bound = bound.min(cap - 1 - (h - row) as i64);
            } else if row == h + 1 {
                bound = bound.min(cap);
            }
        }
        bound
    }

    fn left_value(&self, row: usize, c: usize) -> Option<i64> {
        (0..c)
            .rev()
            .find(|&l| row <= self.shape.augmented_height(l))
            .and_then(|l| augmented_cell(self.shape, &self.columns, row, l))
    }

    fn fill(&mut self, c: usize, row: usize) -> Result<(), Error> {
        self.nodes += 1;
        if self.nodes > self.guard.limit() {
            return Err(Error::GuardExceeded {
                work: format!("> {} search nodes", self.guard.limit()),
                guard: self.guard.limit(),
            });
        }
        if c == self.shape.columns() {
            (self.visit)(&UnusualArray::new(self.columns.clone()));
            return Ok(());
        }
        let h = self.shape.heights[c];
        let cap = self.shape.caps[c];
        if row > h {
            // column complete: its cap must fit its augmented row
            if self.left_value(h + 1, c).is_some_and(|left| cap < left) {
                return Ok(());
            }
            return self.fill(c + 1, 1);
        }
        let above = if row > 1 {
            self.columns[c][row - 2] + 1
        } else {
            1
        };
        let left = self.left_value(row, c).unwrap_or(1);
        let lo = above.max(left).max(1);
        let hi = (cap - 1 - (h - row) as i64).min(self.right_bound(row, c));
        for v in lo..=hi {
            self.columns[c].push(v);
            let r = self.fill(c, row + 1);
            self.columns[c].pop();
            r?;
        }
        Ok(())
    }
}

/// Visits every valid array in column-major lexicographic order.
pub fn for_each_array<F>(shape: &UnusualShape, guard: Guard, visit: F) -> Result<(), Error>
where
    F: FnMut(&UnusualArray),
{
    let mut search = ArraySearch {
        shape,
        columns: vec![Vec::new(); shape.columns()],
        nodes: 0,
        guard,
        visit,
    };
    search.fill(0, 1)
}

pub fn enumerate_arrays(shape: &UnusualShape, guard: Guard) -> Result<Vec<UnusualArray>, Error> {
    let mut out = Vec::new();
    for_each_array(shape, guard, |a| out.push(a.clone()))?;
    Ok(out)
}

pub fn count_arrays(shape: &UnusualShape, guard: Guard) -> Result<u64, Error> {
    let mut n = 0u64;
    for_each_array(shape, guard, |_| n += 1)?;
    Ok(n)
}

/// Labels each horizontal step by its diagonal: a step taken after `k`
/// earlier steps gets label `k + 1`. The labels of `R_l` form column `d - l`.
pub fn r_family_to_array(
    datum: &SchubertDatum,
    family: &PathFamily,
) -> Result<UnusualArray, Error> {
    let shape = shape_of(datum)?;
    validate_family(&r_spec(datum), family)?;
    let d = datum.d();
    let columns = (1..d)
        .map(|c| {
            let path = &family.paths()[d - c - 1];
            path.steps
                .iter()
                .enumerate()
                .filter(|(_, &s)| s == Step::E)
                .map(|(k, _)| k as i64 + 1)
                .collect()
        })
        .collect();
    let array = UnusualArray::new(columns);
    validate_array(&shape, &array)
        .map_err(|v| Error::FamilyInvalid(format!("labels violate property {v}")))?;
    Ok(array)
}

/// Builds the paths whose east steps sit at the labelled positions, without
/// checking that they avoid each other. Column `d - l` lists the step
/// positions at which `R_l` moves east.
pub fn paths_from_labels(datum: &SchubertDatum, array: &UnusualArray) -> Result<PathFamily, Error> {
    let d = datum.d();
    if array.columns.len() + 1 != d {
        return Err(Error::NoPreimage(format!(
            "{} columns for d = {d}",
            array.columns.len()
        )));
    }
    let spec = r_spec(datum);
    let s = s_vector(datum);
    let top = datum.i_at(d);
    let mut paths = Vec::with_capacity(d);
    for l in 1..=d {
        let length = (top - datum.i_at(l) - s.at(l)) as usize;
        let mut steps = vec![Step::S; length];
        if l < d {
            for &label in &array.columns[d - l - 1] {
                if label < 1 || label as usize > length {
                    return Err(Error::NoPreimage(format!(
                        "label {label} outside the {length} steps of R_{l}"
                    )));
                }
                steps[label as usize - 1] = Step::E;
            }
        }
        paths.push(MonotonePath::new(spec.starts[l - 1], steps));
    }
    Ok(PathFamily(paths))
}

/// Inverse of [`r_family_to_array`].
pub fn array_to_r_family(datum: &SchubertDatum, array: &UnusualArray) -> Result<PathFamily, Error> {
    let shape = shape_of(datum)?;
    validate_array(&shape, array).map_err(Error::ArrayInvalid)?;
    let family = paths_from_labels(datum, array)?;
    validate_family(&r_spec(datum), &family).map_err(|e| Error::NoPreimage(e.to_string()))?;
    Ok(family)
}
