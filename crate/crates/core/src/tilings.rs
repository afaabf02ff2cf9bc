//! Board tilings equivalent to the constrained paths.
//!
//! A board of length `n+k-1` is covered by blue squares, red squares, and
//! black rectangles spanning two cells, with `#red + #black = k` and
//! `#blue + #black = n-1`. Each black rectangle behaves like a blue square
//! followed by a red square, so blues and blacks both count as one
//! blue-equivalent. A maximal run of red squares may be at most as long as
//! the number of blue-equivalents to its left, less one when the tile
//! immediately before the run is a black rectangle (its embedded red cell
//! spends one unit of the budget).
//!
//! Step-for-tile transliteration: East = blue, North = red, diagonal =
//! black. Text form: a string over `{B, R, K}` with `K` the black
//! rectangle.

use std::fmt;

use crate::error::{Error, Result};
use crate::numbers::{max_inversions, BigNat};
use crate::paths::{LatticePath, Step};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tile {
    BlueSquare,
    RedSquare,
    BlackRectangle,
}

impl Tile {
    fn letter(self) -> char {
        match self {
            Tile::BlueSquare => 'B',
            Tile::RedSquare => 'R',
            Tile::BlackRectangle => 'K',
        }
    }

    /// Board cells covered.
    fn width(self) -> usize {
        match self {
            Tile::BlackRectangle => 2,
            _ => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tiling {
    tiles: Vec<Tile>,
}

impl Tiling {
    pub fn new(tiles: Vec<Tile>) -> Self {
        Tiling { tiles }
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn parse(input: &str) -> Result<Self> {
        let mut tiles = Vec::new();
        for (i, c) in input.chars().enumerate() {
            tiles.push(match c {
                'B' | 'b' => Tile::BlueSquare,
                'R' | 'r' => Tile::RedSquare,
                'K' | 'k' => Tile::BlackRectangle,
                other => {
                    return Err(Error::Parse {
                        position: i + 1,
                        message: format!("expected one of B, R, K, got `{other}`"),
                    })
                }
            });
        }
        Ok(Tiling { tiles })
    }

    pub fn board_length(&self) -> usize {
        self.tiles.iter().map(|t| t.width()).sum()
    }

    fn count(&self, tile: Tile) -> usize {
        self.tiles.iter().filter(|&&t| t == tile).count()
    }

    /// Red-run budgets hold everywhere.
    pub fn runs_are_bounded(&self) -> bool {
        let mut blue_equivalents = 0usize;
        let mut run = 0usize;
        let mut budget = 0usize;
        let mut prev_black = false;
        for &t in &self.tiles {
            match t {
                Tile::BlueSquare | Tile::BlackRectangle => {
                    blue_equivalents += 1;
                    run = 0;
                    prev_black = t == Tile::BlackRectangle;
                }
                Tile::RedSquare => {
                    if run == 0 {
                        budget = blue_equivalents - usize::from(prev_black);
                    }
                    run += 1;
                    if run > budget {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Full membership test for the `(n, k)` class.
    pub fn is_valid_for(&self, n: usize, k: usize) -> bool {
        let blacks = self.count(Tile::BlackRectangle);
        self.count(Tile::RedSquare) + blacks == k
            && self.count(Tile::BlueSquare) + blacks + 1 == n
            && self.board_length() + 1 == n + k
            && self.runs_are_bounded()
    }

    /// Replace each black rectangle by a blue square followed by a red
    /// square. Board length is preserved.
    pub fn normalize_blacks(&self) -> Tiling {
        let mut tiles = Vec::with_capacity(self.board_length());
        for &t in &self.tiles {
            match t {
                Tile::BlackRectangle => {
                    tiles.push(Tile::BlueSquare);
                    tiles.push(Tile::RedSquare);
                }
                other => tiles.push(other),
            }
        }
        Tiling { tiles }
    }
}

impl fmt::Display for Tiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.tiles {
            write!(f, "{}", t.letter())?;
        }
        Ok(())
    }
}

/// Step-for-tile transliteration of a path.
pub fn path_to_tiling(path: &LatticePath) -> Tiling {
    let tiles = path
        .steps()
        .iter()
        .map(|s| match s {
            Step::East => Tile::BlueSquare,
            Step::North => Tile::RedSquare,
            Step::NorthEast => Tile::BlackRectangle,
        })
        .collect();
    Tiling { tiles }
}

/// Inverse transliteration; errors when the run constraint is broken.
pub fn tiling_to_path(t: &Tiling) -> Result<LatticePath> {
    if !t.runs_are_bounded() {
        return Err(Error::InvalidArgument(format!(
            "tiling {t} violates the red-run bound"
        )));
    }
    let steps = t
        .tiles
        .iter()
        .map(|tile| match tile {
            Tile::BlueSquare => Step::East,
            Tile::RedSquare => Step::North,
            Tile::BlackRectangle => Step::NorthEast,
        })
        .collect();
    Ok(LatticePath::new(steps))
}

/// Count the `(n, k)` class by direct search over tile sequences. This is a
/// genuine fourth counting route: it never touches the path machinery.
pub fn count_tilings(n: usize, k: usize) -> Result<BigNat> {
    if n == 0 {
        return Err(Error::InvalidArgument("count_tilings requires n >= 1".into()));
    }
    if k > max_inversions(n) {
        return Ok(BigNat::zero());
    }
    let mut total = BigNat::zero();
    place(n - 1, k, 0, 0, 0, 0, false, &mut total);
    return Ok(total);

    /// `blue_like`/`red_like` count blue-equivalents and red-equivalents
    /// placed so far (blacks count once on each side).
    #[allow(clippy::too_many_arguments)]
    fn place(
        blue_target: usize,
        red_target: usize,
        blue_like: usize,
        red_like: usize,
        run: usize,
        budget: usize,
        prev_black: bool,
        total: &mut BigNat,
    ) {
        if blue_like == blue_target && red_like == red_target {
            *total += &BigNat::one();
            return;
        }
        if blue_like < blue_target {
            // blue square
            place(blue_target, red_target, blue_like + 1, red_like, 0, 0, false, total);
            // black rectangle needs room on both counts
            if red_like < red_target {
                place(blue_target, red_target, blue_like + 1, red_like + 1, 0, 0, true, total);
            }
        }
        if red_like < red_target {
            let budget = if run == 0 {
                blue_like - usize::from(prev_black)
            } else {
                budget
            };
            if run < budget {
                place(blue_target, red_target, blue_like, red_like + 1, run + 1, budget, prev_black, total);
            }
        }
    }
}
