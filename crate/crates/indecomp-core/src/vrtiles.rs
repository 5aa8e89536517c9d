//! The geometric layer: tile coordinate tables, row assembly, the vertex map
//! between the rows, Vietoris–Rips complexes at the scheduled radii, the
//! ladder-shaped diagram of complexes, the perturbation-stability harness,
//! and the hand-built simplicial sandal models.
//!
//! All geometry is exact: coordinates are arbitrary-precision rationals and
//! the edge rule `dist < 2r` is decided by comparing squared distances. The
//! strip tiles lie in the `z = 0` plane; the junction tiles (`C`, `F`) are
//! rotated 90° and stand vertically over the junction lines, where their
//! bottom edges share points with the strip.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};
use rand_core::{RngCore, SeedableRng};

use crate::complexes::{clique_complex, ComplexDiagram, SimplicialComplex, SimplicialMap};
use crate::exactalg::{rational_from_decimal, Point, Rational};
use crate::quiver::{cl_n_quiver, Orientation};

/// Tile identifiers. `EBar` is the reversed `E` tile.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TileId {
    A,
    B,
    C,
    D,
    E,
    EBar,
    F,
}

impl fmt::Display for TileId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TileId::A => "A",
            TileId::B => "B",
            TileId::C => "C",
            TileId::D => "D",
            TileId::E => "E",
            TileId::EBar => "Ebar",
            TileId::F => "F",
        };
        write!(f, "{s}")
    }
}

/// Local coordinates of the 13 points of one tile, indexed 1..=13: corners
/// 1-4, two points per edge 5-12, interior 13.
#[derive(Clone, Debug)]
pub struct Tile {
    pub id: TileId,
    points: Vec<(Rational, Rational)>,
}

impl Tile {
    /// Local coordinates of point `index` (1-based as in the table).
    pub fn point(&self, index: u8) -> &(Rational, Rational) {
        &self.points[usize::from(index) - 1]
    }

    pub fn indices() -> impl Iterator<Item = u8> {
        1..=13
    }
}

/// The coordinate table, one column per tile.
pub fn tile_points(id: TileId) -> Tile {
    let raw: [(&str, &str); 13] = match id {
        TileId::A => [
            ("0", "0"), ("0", "5"), ("5", "5"), ("5", "0"),
            ("1.5", "0"), ("3.5", "0"), ("1.5", "5"), ("3.5", "5"),
            ("0", "1.5"), ("0", "3.5"), ("5", "0.7"), ("5", "4.3"),
            ("1.86", "2.5"),
        ],
        TileId::B => [
            ("0", "0"), ("0", "5"), ("5", "5"), ("5", "0"),
            ("1.3", "0"), ("3.7", "0"), ("1.3", "5"), ("3.7", "5"),
            ("0", "0.7"), ("0", "4.3"), ("5", "1.5"), ("5", "3.5"),
            ("3", "2.5"),
        ],
        TileId::C => [
            ("0", "0"), ("0", "5"), ("5", "5"), ("5", "0"),
            ("0.7", "0"), ("4.3", "0"), ("1.5", "5"), ("3.5", "5"),
            ("0", "1.5"), ("0", "3.5"), ("5", "1.5"), ("5", "3.5"),
            ("2.5", "2.9"),
        ],
        TileId::D => [
            ("0", "0"), ("0", "5"), ("5", "5"), ("5", "0"),
            ("1.3", "0"), ("3.7", "0"), ("1.3", "5"), ("3.7", "5"),
            ("0", "1.3"), ("0", "3.7"), ("5", "0.5"), ("5", "4.5"),
            ("2", "2.5"),
        ],
        TileId::E => [
            ("0", "0"), ("0", "5"), ("5", "5"), ("5", "0"),
            ("1.3", "0"), ("3.7", "0"), ("1.3", "5"), ("3.7", "5"),
            ("0", "0.5"), ("0", "4.5"), ("5", "1"), ("5", "4"),
            ("3", "2.5"),
        ],
        TileId::EBar => [
            ("0", "0"), ("0", "5"), ("5", "5"), ("5", "0"),
            ("1.3", "0"), ("3.7", "0"), ("1.3", "5"), ("3.7", "5"),
            ("0", "1"), ("0", "4"), ("5", "0.5"), ("5", "4.5"),
            ("2", "2.5"),
        ],
        TileId::F => [
            ("0", "0"), ("0", "5"), ("5", "5"), ("5", "0"),
            ("0.5", "0"), ("4.5", "0"), ("0.7", "5"), ("4.3", "5"),
            ("0", "1.3"), ("0", "3.7"), ("5", "1.3"), ("5", "3.7"),
            ("2.5", "3.5"),
        ],
    };
    Tile {
        id,
        points: raw
            .iter()
            .map(|(x, y)| (rational_from_decimal(x), rational_from_decimal(y)))
            .collect(),
    }
}

/// Which of the two assembled rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Row {
    Upper,
    Lower,
}

/// Where a tile instance sits in the assembly plan.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Slot {
    /// `k`-th horizontal tile of the strip, 0-based, at x-offset `5k`.
    Strip(usize),
    /// `j`-th vertical tile standing over the junction line `x = 10j + 5`.
    Junction(usize),
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slot::Strip(k) => write!(f, "s{k}"),
            Slot::Junction(j) => write!(f, "j{j}"),
        }
    }
}

/// An assembled row: deduplicated exact points with full tile provenance.
#[derive(Clone, Debug)]
pub struct PointCloud {
    pub row: Row,
    pub d: usize,
    pub points: Vec<Point>,
    /// For each point, every (slot, tile, local index) that produced it.
    pub provenance: Vec<Vec<(Slot, TileId, u8)>>,
}

impl PointCloud {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Point id by (slot, local index), if assembled.
    pub fn id_of(&self, slot: Slot, index: u8) -> Option<usize> {
        self.provenance.iter().position(|plist| {
            plist.iter().any(|&(s, _, i)| s == slot && i == index)
        })
    }
}

fn strip_tile(row: Row, k: usize) -> TileId {
    match row {
        Row::Upper => {
            if k % 2 == 0 {
                TileId::A
            } else {
                TileId::B
            }
        }
        Row::Lower => {
            if k == 0 {
                TileId::D
            } else if k % 2 == 1 {
                TileId::E
            } else {
                TileId::EBar
            }
        }
    }
}

fn junction_tile(row: Row) -> TileId {
    match row {
        Row::Upper => TileId::C,
        Row::Lower => TileId::F,
    }
}

/// Assembles a row for parameter `d`: the strip is `2d` tiles side by side
/// (upper `A B A B …`, lower `D E Ē E Ē …`, the `D` used once), and one
/// vertical tile (`C` resp. `F`) stands over each junction `x = 10j + 5`,
/// its bottom edge landing on the shared strip points there. Coinciding
/// boundary points are merged exactly.
pub fn assemble(row: Row, d: usize) -> PointCloud {
    assert!(d >= 1);
    let mut coord_to_id: BTreeMap<Point, usize> = BTreeMap::new();
    let mut points = Vec::new();
    let mut provenance: Vec<Vec<(Slot, TileId, u8)>> = Vec::new();
    let mut add = |pt: Point, slot: Slot, tile: TileId, index: u8| {
        let id = *coord_to_id.entry(pt.clone()).or_insert_with(|| {
            points.push(pt);
            provenance.push(Vec::new());
            points.len() - 1
        });
        provenance[id].push((slot, tile, index));
    };
    for k in 0..2 * d {
        let tile_id = strip_tile(row, k);
        let tile = tile_points(tile_id);
        let offset = Rational::from_integer((5 * k as i64).into());
        for i in Tile::indices() {
            let (x, y) = tile.point(i).clone();
            add(Point::new(x + &offset, y, Rational::zero()), Slot::Strip(k), tile_id, i);
        }
    }
    for j in 0..d {
        let tile_id = junction_tile(row);
        let tile = tile_points(tile_id);
        let x_plane = Rational::from_integer((10 * j as i64 + 5).into());
        for i in Tile::indices() {
            // 90° rotation out of the plane: local (x, y) stands up as
            // (depth, height) in the plane x = 10j + 5.
            let (lx, ly) = tile.point(i).clone();
            add(Point::new(x_plane.clone(), lx, ly), Slot::Junction(j), tile_id, i);
        }
    }
    PointCloud { row, d, points, provenance }
}

/// Two tiles claim the same lower point but map it to different upper
/// points; indicates a coordinate-table transcription error.
#[derive(Clone, Debug)]
pub struct AmbiguityError {
    pub lower_id: usize,
    pub images: Vec<usize>,
}

impl fmt::Display for AmbiguityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lower point {} has ambiguous images {:?}", self.lower_id, self.images)
    }
}

/// The vertex map `f : P_ℓ -> P_u` by same-slot same-index correspondence.
/// Consistency across shared boundary points is checked, not assumed.
pub fn vertex_map(lower: &PointCloud, upper: &PointCloud) -> Result<Vec<usize>, AmbiguityError> {
    assert_eq!(lower.d, upper.d);
    let mut upper_by_slot: BTreeMap<(Slot, u8), usize> = BTreeMap::new();
    for (id, plist) in upper.provenance.iter().enumerate() {
        for &(slot, _, i) in plist {
            upper_by_slot.insert((slot, i), id);
        }
    }
    let mut out = Vec::with_capacity(lower.len());
    for (id, plist) in lower.provenance.iter().enumerate() {
        let images: Vec<usize> = {
            let mut v: Vec<usize> = plist
                .iter()
                .map(|&(slot, _, i)| upper_by_slot[&(slot, i)])
                .collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        if images.len() != 1 {
            return Err(AmbiguityError { lower_id: id, images });
        }
        out.push(images[0]);
    }
    Ok(out)
}

/// The Vietoris–Rips complex at radius `r`: clique complex of all edges of
/// length strictly below `2r`, expanded to `maxdim`.
pub fn vr_complex(cloud: &PointCloud, r: &Rational, maxdim: usize) -> SimplicialComplex {
    let four_r_sq = {
        let two_r = r + r;
        &two_r * &two_r
    };
    let n = cloud.len();
    let vertices: Vec<u32> = (0..n as u32).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if cloud.points[i].dist_sq(&cloud.points[j]) < four_r_sq {
                edges.push((i as u32, j as u32));
            }
        }
    }
    clique_complex(&vertices, &edges, maxdim)
}

/// The five scheduled radii with their open intervals `(x_i, y_i)`.
#[derive(Clone, Debug)]
pub struct RadiusSchedule {
    pub lower_bounds: [Rational; 5],
    pub upper_bounds: [Rational; 5],
    pub chosen: [Rational; 5],
}

impl RadiusSchedule {
    pub fn new(
        lower_bounds: [Rational; 5],
        upper_bounds: [Rational; 5],
        chosen: [Rational; 5],
    ) -> Self {
        for i in 0..5 {
            assert!(
                lower_bounds[i] < chosen[i] && chosen[i] < upper_bounds[i],
                "radius {} not strictly inside its interval",
                i + 1
            );
        }
        RadiusSchedule { lower_bounds, upper_bounds, chosen }
    }

    pub fn interval_width(&self, i: usize) -> Rational {
        &self.upper_bounds[i] - &self.lower_bounds[i]
    }

    /// Minimum interval width across the schedule.
    pub fn min_width(&self) -> Rational {
        (0..5).map(|i| self.interval_width(i)).min().unwrap()
    }
}

/// The table schedule: intervals
/// `(1.06,1.12) (1.21,1.25) (1.6,1.665) (1.8,1.805) (2,2.015)`,
/// radii at the midpoints.
pub fn default_schedule() -> RadiusSchedule {
    let lo = ["1.06", "1.21", "1.6", "1.8", "2"].map(rational_from_decimal);
    let hi = ["1.12", "1.25", "1.665", "1.805", "2.015"].map(rational_from_decimal);
    let half = Rational::new(1.into(), 2.into());
    let mid = core::array::from_fn(|i| (&lo[i] + &hi[i]) * &half);
    RadiusSchedule::new(lo, hi, mid)
}

/// For each interval, samples `samples` radii strictly inside and reports
/// whether all of them produce the identical abstract complex. Samples sit
/// at `x + (y - x) * s / (samples + 1)`.
pub fn interval_constancy_check(
    cloud: &PointCloud,
    schedule: &RadiusSchedule,
    samples: usize,
    maxdim: usize,
) -> [bool; 5] {
    core::array::from_fn(|i| {
        if samples <= 1 {
            return true;
        }
        let lo = &schedule.lower_bounds[i];
        let width = schedule.interval_width(i);
        let denominator = Rational::from_integer(((samples + 1) as i64).into());
        let mut first: Option<SimplicialComplex> = None;
        for s in 1..=samples {
            let t = Rational::from_integer((s as i64).into()) / &denominator;
            let r = lo + &width * &t;
            let complex = vr_complex(cloud, &r, maxdim);
            match &first {
                None => first = Some(complex),
                Some(c) => {
                    if *c != complex {
                        return false;
                    }
                }
            }
        }
        true
    })
}

/// Failure modes of the ladder diagram construction.
#[derive(Clone, Debug)]
pub enum VrError {
    Ambiguous(AmbiguityError),
    /// A vertical map fails to be simplicial at some radius, which signals a
    /// radius outside the valid ranges.
    NotSimplicial { radius_index: usize, witness: Vec<u32> },
    /// Row inclusion fails between consecutive radii (the schedule is not
    /// increasing).
    NotMonotone { radius_index: usize },
}

impl fmt::Display for VrError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VrError::Ambiguous(e) => write!(f, "{e}"),
            VrError::NotSimplicial { radius_index, witness } => write!(
                f,
                "vertex map not simplicial at radius r{} (simplex {:?})",
                radius_index + 1,
                witness
            ),
            VrError::NotMonotone { radius_index } => write!(
                f,
                "complex at r{} is not included in the one at r{}",
                radius_index + 1,
                radius_index + 2
            ),
        }
    }
}

/// Builds the `CL_5(ffff)` diagram of Vietoris–Rips complexes: rows are the
/// filtrations of `P_ℓ` (bottom) and `P_u` (top) at the five scheduled
/// radii, horizontal maps are inclusions, and the vertical maps restrict the
/// vertex map. Verticals are checked to be simplicial and, after identifying
/// vertices, subcomplex inclusions.
pub fn build_cl5_vr_diagram(
    d: usize,
    schedule: &RadiusSchedule,
    maxdim: usize,
) -> Result<ComplexDiagram, VrError> {
    let lower = assemble(Row::Lower, d);
    let upper = assemble(Row::Upper, d);
    let f = vertex_map(&lower, &upper).map_err(VrError::Ambiguous)?;
    let lower_complexes: Vec<SimplicialComplex> =
        schedule.chosen.iter().map(|r| vr_complex(&lower, r, maxdim)).collect();
    let upper_complexes: Vec<SimplicialComplex> =
        schedule.chosen.iter().map(|r| vr_complex(&upper, r, maxdim)).collect();
    for i in 0..5 {
        let fi = SimplicialMap::from_fn(&lower_complexes[i], |v| f[v as usize] as u32);
        fi.check_simplicial(&lower_complexes[i], &upper_complexes[i])
            .map_err(|e| VrError::NotSimplicial { radius_index: i, witness: e.witness })?;
        if i + 1 < 5
            && !(lower_complexes[i].is_subcomplex_of(&lower_complexes[i + 1])
                && upper_complexes[i].is_subcomplex_of(&upper_complexes[i + 1]))
        {
            return Err(VrError::NotMonotone { radius_index: i });
        }
    }
    let shape = Arc::new(cl_n_quiver(5, &Orientation::forward(4)));
    // Vertex order in cl_n_quiver: b1..b5 then t1..t5; arrows bottom
    // horizontals, top horizontals, verticals.
    let mut spaces = lower_complexes.clone();
    spaces.extend(upper_complexes.iter().cloned());
    let mut maps = Vec::new();
    for i in 0..4 {
        maps.push(SimplicialMap::identity(&lower_complexes[i]));
    }
    for i in 0..4 {
        maps.push(SimplicialMap::identity(&upper_complexes[i]));
    }
    for i in 0..5 {
        maps.push(SimplicialMap::from_fn(&lower_complexes[i], |v| f[v as usize] as u32));
    }
    let diagram = ComplexDiagram { shape, spaces, maps };
    debug_assert!(diagram.validate().is_ok());
    Ok(diagram)
}

/// One certified band: no squared pairwise distance of either cloud falls
/// strictly inside `((2r - m)^2, (2r + m)^2)`.
fn band_is_clear(spectrum: &[Rational], two_r: &Rational, margin: &Rational) -> bool {
    let lo = two_r - margin;
    let hi = two_r + margin;
    let lo_sq = &lo * &lo;
    let hi_sq = &hi * &hi;
    spectrum.iter().all(|d2| *d2 <= lo_sq || *d2 >= hi_sq)
}

/// Largest margin on a 1e-6 grid for which the band around `2r` is clear of
/// the spectrum, capped at `cap`.
fn certified_margin(spectrum: &[Rational], two_r: &Rational, cap: &Rational) -> Rational {
    let grid = Rational::new(1.into(), 1_000_000.into());
    let cap_steps: i64 = (cap / &grid).to_integer().try_into().unwrap_or(i64::MAX);
    let (mut lo, mut hi) = (0i64, cap_steps);
    // Invariant: margin lo*grid is clear; hi+1 unknown/blocked.
    while lo < hi {
        let mid = (lo + hi + 1) / 2;
        let m = Rational::from_integer(mid.into()) * &grid;
        if band_is_clear(spectrum, two_r, &m) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    Rational::from_integer(lo.into()) * grid
}

/// Report of the stability harness.
#[derive(Clone, Debug)]
pub struct StabilityReport {
    /// Certified clear band half-width around each `2 r_i`.
    pub margins: [Rational; 5],
    /// Minimum certified margin.
    pub rho: Rational,
    /// Per-trial: (trial index, displacement bound, complexes unchanged).
    pub trials: Vec<(usize, Rational, bool)>,
}

/// The spectrum-gap premise failed: some pairwise distance sits closer than
/// the table-derived bound `0.005` to a doubled radius.
#[derive(Clone, Debug)]
pub struct GapViolation {
    pub margins: [Rational; 5],
    pub rho: Rational,
    /// The tightest (radius index, squared distance) witness.
    pub witness: (usize, Rational),
}

impl fmt::Display for GapViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "certified spectrum gap {} at r{} is below the required 0.005",
            self.rho,
            self.witness.0 + 1
        )
    }
}

/// Pairwise squared distances of both clouds for parameter `d`.
pub fn distance_spectrum(d: usize) -> Vec<Rational> {
    let mut spectrum = Vec::new();
    for row in [Row::Lower, Row::Upper] {
        let cloud = assemble(row, d);
        for i in 0..cloud.len() {
            for j in i + 1..cloud.len() {
                spectrum.push(cloud.points[i].dist_sq(&cloud.points[j]));
            }
        }
    }
    spectrum.sort();
    spectrum.dedup();
    spectrum
}

/// Certifies the per-radius spectrum margins for parameter `d` (midpoint
/// radii assumed). Returns the margins and their minimum.
pub fn certify_margins(d: usize, schedule: &RadiusSchedule) -> ([Rational; 5], Rational) {
    let spectrum = distance_spectrum(d);
    let margins: [Rational; 5] = core::array::from_fn(|i| {
        // Capped at the interval width: a clear band wider than the interval
        // carries no extra information for the lemma.
        let two_r = &schedule.chosen[i] + &schedule.chosen[i];
        certified_margin(&spectrum, &two_r, &schedule.interval_width(i))
    });
    let rho = margins.iter().min().cloned().unwrap();
    (margins, rho)
}

fn perturb_cloud(cloud: &PointCloud, magnitude: &Rational, rng: &mut impl RngCore) -> PointCloud {
    // Per-coordinate displacement in a grid inside ±magnitude*577/1000, so
    // the Euclidean displacement stays strictly under `magnitude`
    // (3 * 0.577^2 < 1).
    let coord_bound = magnitude * Rational::new(577.into(), 1000.into());
    let step = &coord_bound / Rational::from_integer(100.into());
    let mut out = cloud.clone();
    for pt in out.points.iter_mut() {
        let mut delta = || {
            let k = (rng.next_u64() % 201) as i64 - 100;
            &step * Rational::from_integer(k.into())
        };
        let (dx, dy, dz) = (delta(), delta(), delta());
        *pt = Point::new(&pt.x + dx, &pt.y + dy, &pt.z + dz);
    }
    out
}

/// Runs seeded perturbation trials: every point of both clouds moves inside
/// a ball of radius `magnitude`; reports whether all ten complexes stay
/// equal as abstract complexes on the point ids.
pub fn perturbation_trials(
    d: usize,
    schedule: &RadiusSchedule,
    magnitude: &Rational,
    trials: usize,
    seed: u64,
    maxdim: usize,
) -> Vec<(usize, Rational, bool)> {
    let lower = assemble(Row::Lower, d);
    let upper = assemble(Row::Upper, d);
    let reference: Vec<SimplicialComplex> = schedule
        .chosen
        .iter()
        .flat_map(|r| [vr_complex(&lower, r, maxdim), vr_complex(&upper, r, maxdim)])
        .collect();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..trials)
        .map(|t| {
            let lower_p = perturb_cloud(&lower, magnitude, &mut rng);
            let upper_p = perturb_cloud(&upper, magnitude, &mut rng);
            let unchanged = schedule.chosen.iter().enumerate().all(|(i, r)| {
                vr_complex(&lower_p, r, maxdim) == reference[2 * i]
                    && vr_complex(&upper_p, r, maxdim) == reference[2 * i + 1]
            });
            (t, magnitude.clone(), unchanged)
        })
        .collect()
}

/// Adversarial push: moves one point of the tightest near-threshold pair
/// directly away from (or toward) its partner by at most `magnitude`,
/// then reports whether any of the ten complexes changed.
pub fn adversarial_perturbation(
    d: usize,
    schedule: &RadiusSchedule,
    magnitude: &Rational,
    maxdim: usize,
) -> bool {
    // Locate the pair and radius with the smallest clearance |dist - 2r|,
    // comparing squared quantities to stay exact: minimize the width of the
    // band between dist^2 and (2r)^2.
    let mut best: Option<(Row, usize, usize, usize, Rational)> = None;
    for row in [Row::Lower, Row::Upper] {
        let cloud = assemble(row, d);
        for i in 0..cloud.len() {
            for j in i + 1..cloud.len() {
                let d2 = cloud.points[i].dist_sq(&cloud.points[j]);
                for (k, r) in schedule.chosen.iter().enumerate() {
                    let two_r = r + r;
                    let t2 = &two_r * &two_r;
                    let gap = (&d2 - &t2).abs();
                    if best.as_ref().is_none_or(|(_, _, _, _, g)| gap < *g) {
                        best = Some((row, i, j, k, gap.clone()));
                    }
                }
            }
        }
    }
    let (row, i, j, _, _) = best.expect("nonempty spectrum");
    let cloud = assemble(row, d);
    let other = match row {
        Row::Lower => assemble(Row::Upper, d),
        Row::Upper => assemble(Row::Lower, d),
    };
    let reference: Vec<SimplicialComplex> = schedule
        .chosen
        .iter()
        .flat_map(|r| [vr_complex(&cloud, r, maxdim), vr_complex(&other, r, maxdim)])
        .collect();
    //

    // Move point i along the chord i -> j, scaled so the displacement stays
    // within `magnitude`: factor t with t^2 * dist^2 <= magnitude^2, found on
    // a fine rational grid. Try both directions; return true if either
    // changes some complex.
    let d2 = cloud.points[i].dist_sq(&cloud.points[j]);
    let mag_sq = magnitude * magnitude;
    let grid = 1_000_000i64;
    let mut lo = 0i64;
    let mut hi = grid;
    while lo < hi {
        let mid = (lo + hi + 1) / 2;
        let t = Rational::new(mid.into(), grid.into());
        if &t * &t * &d2 <= mag_sq {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    let t = Rational::new(lo.into(), grid.into());
    for dir in [Rational::one(), -Rational::one()] {
        let mut moved = cloud.clone();
        let scale = &t * &dir;
        let (pi, pj) = (&cloud.points[i], &cloud.points[j]);
        moved.points[i] = Point::new(
            &pi.x + &scale * (&pi.x - &pj.x),
            &pi.y + &scale * (&pi.y - &pj.y),
            &pi.z + &scale * (&pi.z - &pj.z),
        );
        let changed = schedule
            .chosen
            .iter()
            .enumerate()
            .any(|(k, r)| vr_complex(&moved, r, maxdim) != reference[2 * k]);
        if changed {
            return true;
        }
    }
    false
}

/// The full stability harness: certifies the spectrum margins (requiring the
/// table-derived `ρ >= 0.005`), then runs seeded perturbation trials at
/// displacement `0.49 ρ`.
pub fn stability_harness(
    d: usize,
    schedule: &RadiusSchedule,
    trials: usize,
    seed: u64,
    maxdim: usize,
) -> Result<StabilityReport, GapViolation> {
    let (margins, rho) = certify_margins(d, schedule);
    let required = rational_from_decimal("0.005");
    if rho < required {
        let spectrum = distance_spectrum(d);
        let idx = (0..5).min_by_key(|&i| margins[i].clone()).unwrap();
        let two_r = &schedule.chosen[idx] + &schedule.chosen[idx];
        let witness_d2 = spectrum
            .iter()
            .min_by_key(|d2| {
                let t2 = &two_r * &two_r;
                (*d2 - t2).abs()
            })
            .cloned()
            .unwrap();
        return Err(GapViolation { margins, rho, witness: (idx, witness_d2) });
    }
    let magnitude = &rho * rational_from_decimal("0.49");
    let trials = perturbation_trials(d, schedule, &magnitude, trials, seed, maxdim);
    Ok(StabilityReport { margins, rho, trials })
}

// ---------------------------------------------------------------------------
// Sandal models
// ---------------------------------------------------------------------------

/// Vertex ids for the sandal complexes: `d + 1` posts along the sole, then a
/// fixed block per strap unit (strand midpoints, membrane ring + apex, three
/// fill rings + apexes).
struct SandalIds {
    d: usize,
}

const UNIT_BLOCK: usize = 4 + 9 + 15;

impl SandalIds {
    fn post(&self, u: usize) -> u32 {
        debug_assert!(u <= self.d);
        u as u32
    }

    fn unit_base(&self, u: usize) -> u32 {
        debug_assert!((1..=self.d).contains(&u));
        (self.d + 1 + (u - 1) * UNIT_BLOCK) as u32
    }

    fn mid(&self, strand: usize, u: usize) -> u32 {
        // strand: 0 = rail, 1 = outer strap, 2 = inner strap, 3 = sole loop
        self.unit_base(u) + strand as u32
    }

    fn membrane_ring(&self, u: usize, j: usize) -> u32 {
        self.unit_base(u) + 4 + j as u32
    }

    fn membrane_apex(&self, u: usize) -> u32 {
        self.unit_base(u) + 12
    }

    fn fill_ring(&self, u: usize, fill: usize, j: usize) -> u32 {
        self.unit_base(u) + 13 + (fill * 5 + j) as u32
    }

    fn fill_apex(&self, u: usize, fill: usize) -> u32 {
        self.unit_base(u) + 13 + (fill * 5 + 4) as u32
    }
}

const RAIL: usize = 0;
const OUTER: usize = 1;
const INNER: usize = 2;
const SOLE: usize = 3;

/// Simplices of one strand of unit `u` (two edges through its midpoint).
fn strand_edges(ids: &SandalIds, strand: usize, u: usize) -> [[u32; 2]; 2] {
    let (a, m, b) = (ids.post(u - 1), ids.mid(strand, u), ids.post(u));
    [[a, m], [m, b]]
}

/// Closed walk along strand `s1` forward then strand `s2` backward.
fn strand_loop(ids: &SandalIds, s1: usize, s2: usize, u: usize) -> Vec<u32> {
    vec![ids.post(u - 1), ids.mid(s1, u), ids.post(u), ids.mid(s2, u), ids.post(u - 1)]
}

/// Attaches a disk along a closed walk: an annulus of quads down to a fresh
/// inner polygon, capped by a fresh apex. Kills exactly the walk's homology
/// class (a cone would also kill independent cycles whenever the walk
/// revisits vertices).
fn attach_disk(
    complex: &mut SimplicialComplex,
    walk: &[u32],
    ring: impl Fn(usize) -> u32,
    apex: u32,
) {
    let k = walk.len() - 1;
    debug_assert!(k >= 3);
    for j in 0..k {
        let (w0, w1) = (walk[j], walk[j + 1]);
        let (i0, i1) = (ring(j), ring((j + 1) % k));
        complex.insert_with_faces(&[w0, w1, i0]);
        complex.insert_with_faces(&[w1, i1, i0]);
        complex.insert_with_faces(&[apex, i0, i1]);
    }
}

fn membrane_walk(ids: &SandalIds, u: usize) -> Vec<u32> {
    // Sole-loop strand forward, outer strap backward; for u >= 2 continue
    // around the previous unit's inner strap and rail. This pins
    // [sole_u] = [outer_u] + [inner_{u-1}] in every space containing it.
    let mut walk = vec![
        ids.post(u - 1),
        ids.mid(SOLE, u),
        ids.post(u),
        ids.mid(OUTER, u),
        ids.post(u - 1),
    ];
    if u >= 2 {
        walk.extend([
            ids.mid(INNER, u - 1),
            ids.post(u - 2),
            ids.mid(RAIL, u - 1),
            ids.post(u - 1),
        ]);
    }
    walk
}

fn add_strands(complex: &mut SimplicialComplex, ids: &SandalIds, strands: &[usize]) {
    for u in 1..=ids.d {
        for &s in strands {
            for e in strand_edges(ids, s, u) {
                complex.insert_with_faces(&e);
            }
        }
    }
}

fn add_membranes(complex: &mut SimplicialComplex, ids: &SandalIds) {
    for u in 1..=ids.d {
        let walk = membrane_walk(ids, u);
        attach_disk(complex, &walk, |j| ids.membrane_ring(u, j), ids.membrane_apex(u));
    }
}

fn add_fills(complex: &mut SimplicialComplex, ids: &SandalIds, fill: usize, s1: usize, s2: usize) {
    for u in 1..=ids.d {
        let walk = strand_loop(ids, s1, s2, u);
        attach_disk(complex, &walk, |j| ids.fill_ring(u, fill, j), ids.fill_apex(u, fill));
    }
}

/// Builds the sandal diagram `S(d)` on `CL_5(ffff)`: a shared sole rail with
/// `d` strap units. Per unit there are four subdivided strands between
/// consecutive sole posts (rail, outer strap, inner strap, sole loop), disk
/// membranes coupling consecutive units, and per-column disk fills. All ten
/// maps are inclusions; `H_1` of the diagram realizes `M(d, 0)`.
pub fn sandal_diagram(d: usize) -> ComplexDiagram {
    assert!(d >= 1);
    let ids = SandalIds { d };
    let all = [RAIL, OUTER, INNER, SOLE];

    // Top row.
    let mut t1 = SimplicialComplex::empty();
    add_strands(&mut t1, &ids, &[RAIL, OUTER]);
    let mut t2 = SimplicialComplex::empty();
    add_strands(&mut t2, &ids, &all);
    add_membranes(&mut t2, &ids);
    let t3 = t2.clone();
    let mut t4 = t3.clone();
    add_fills(&mut t4, &ids, 0, INNER, RAIL);
    let mut t5 = t4.clone();
    add_fills(&mut t5, &ids, 1, OUTER, RAIL);
    add_fills(&mut t5, &ids, 2, OUTER, INNER);

    // Bottom row.
    let mut b1 = SimplicialComplex::empty();
    b1.insert_with_faces(&[ids.post(0)]);
    let mut b2 = SimplicialComplex::empty();
    add_strands(&mut b2, &ids, &[RAIL, SOLE]);
    let b3 = t2.clone();
    let b4 = b3.clone();
    let mut b5 = b4.clone();
    add_fills(&mut b5, &ids, 2, OUTER, INNER);

    let shape = Arc::new(cl_n_quiver(5, &Orientation::forward(4)));
    let bottoms = [b1, b2, b3, b4, b5];
    let tops = [t1, t2, t3, t4, t5];
    for i in 0..4 {
        debug_assert!(bottoms[i].is_subcomplex_of(&bottoms[i + 1]));
        debug_assert!(tops[i].is_subcomplex_of(&tops[i + 1]));
    }
    for i in 0..5 {
        debug_assert!(bottoms[i].is_subcomplex_of(&tops[i]));
    }
    let mut spaces: Vec<SimplicialComplex> = bottoms.to_vec();
    spaces.extend(tops.iter().cloned());
    let mut maps = Vec::new();
    for i in 0..4 {
        maps.push(SimplicialMap::identity(&bottoms[i]));
    }
    for i in 0..4 {
        maps.push(SimplicialMap::identity(&tops[i]));
    }
    for i in 0..5 {
        maps.push(SimplicialMap::identity(&bottoms[i]));
    }
    let diagram = ComplexDiagram { shape, spaces, maps };
    debug_assert!(diagram.validate().is_ok());
    diagram
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::diagram_homology;
    use crate::families::build_m_cl5;
    use crate::quiver::{are_isomorphic, IsoResult};

    #[test]
    fn tile_table_spot_checks() {
        let a = tile_points(TileId::A);
        assert_eq!(a.point(13), &(rational_from_decimal("1.86"), rational_from_decimal("2.5")));
        let f = tile_points(TileId::F);
        assert_eq!(f.point(5), &(rational_from_decimal("0.5"), rational_from_decimal("0")));
        let ebar = tile_points(TileId::EBar);
        assert_eq!(ebar.point(11), &(rational_from_decimal("5"), rational_from_decimal("0.5")));
    }

    #[test]
    fn ebar_is_reflected_e_as_a_point_set() {
        // The table's Ē column equals E mirrored about the vertical axis as
        // a set; the index correspondence differs, which is why the vertex
        // map checks consistency instead of assuming it.
        let e = tile_points(TileId::E);
        let ebar = tile_points(TileId::EBar);
        let five = rational_from_decimal("5");
        let mut mirrored: Vec<(Rational, Rational)> = Tile::indices()
            .map(|i| {
                let (x, y) = e.point(i).clone();
                (&five - &x, y)
            })
            .collect();
        let mut listed: Vec<(Rational, Rational)> =
            Tile::indices().map(|i| ebar.point(i).clone()).collect();
        mirrored.sort();
        listed.sort();
        assert_eq!(mirrored, listed);
    }

    #[test]
    fn assembly_counts_and_merging() {
        // Upper d=1: A, B strip plus one C; shared points merge exactly.
        let up = assemble(Row::Upper, 1);
        // Oracle: dedupe over exact coordinates of the 3*13 placed points.
        assert_eq!(up.len(), 31);
        let c_tiles = up
            .provenance
            .iter()
            .flatten()
            .filter(|(_, t, _)| *t == TileId::C)
            .count();
        assert_eq!(c_tiles, 13);
        let low = assemble(Row::Lower, 1);
        assert_eq!(low.len(), 31);
        let tiles: alloc::collections::BTreeSet<TileId> =
            low.provenance.iter().flatten().map(|&(_, t, _)| t).collect();
        assert_eq!(
            tiles.into_iter().collect::<Vec<_>>(),
            vec![TileId::D, TileId::E, TileId::F]
        );
        // d=2 has exactly 2 junction tiles per row.
        let up2 = assemble(Row::Upper, 2);
        let junctions: alloc::collections::BTreeSet<Slot> = up2
            .provenance
            .iter()
            .flatten()
            .filter(|(s, _, _)| matches!(s, Slot::Junction(_)))
            .map(|&(s, _, _)| s)
            .collect();
        assert_eq!(junctions.len(), 2);
    }

    #[test]
    fn vertex_map_well_defined_and_injective() {
        for d in 1..=3 {
            let lower = assemble(Row::Lower, d);
            let upper = assemble(Row::Upper, d);
            let f = vertex_map(&lower, &upper).expect("well-defined");
            let mut images = f.clone();
            images.sort_unstable();
            images.dedup();
            assert_eq!(images.len(), f.len(), "vertex map must be injective");
            // Spot check: D index 13 goes to A index 13 of the same slot.
            let d13 = lower.id_of(Slot::Strip(0), 13).unwrap();
            let a13 = upper.id_of(Slot::Strip(0), 13).unwrap();
            assert_eq!(f[d13], a13);
        }
    }

    #[test]
    fn vr_edge_rule_is_strict() {
        // Tile A alone: edge between (0,0) and (1.5,0) at r1 (1.5 < 2.18).
        let cloud = PointCloud {
            row: Row::Upper,
            d: 1,
            points: vec![
                Point::new(Rational::zero(), Rational::zero(), Rational::zero()),
                Point::new(rational_from_decimal("1.5"), Rational::zero(), Rational::zero()),
            ],
            provenance: vec![vec![], vec![]],
        };
        let r1 = rational_from_decimal("1.09");
        let complex = vr_complex(&cloud, &r1, 2);
        assert!(complex.contains(&[0, 1]));
        // Radius zero keeps only vertices.
        let r0 = Rational::zero();
        let complex0 = vr_complex(&cloud, &r0, 2);
        assert_eq!(complex0.count(0), 2);
        assert_eq!(complex0.count(1), 0);
        // Exactly at threshold: dist = 2r is NOT an edge.
        let r_tie = rational_from_decimal("0.75");
        let tie = vr_complex(&cloud, &r_tie, 2);
        assert_eq!(tie.count(1), 0);
    }

    #[test]
    fn vr_monotone_along_schedule() {
        let schedule = default_schedule();
        let cloud = assemble(Row::Lower, 1);
        let complexes: Vec<SimplicialComplex> =
            schedule.chosen.iter().map(|r| vr_complex(&cloud, r, 2)).collect();
        for i in 0..4 {
            assert!(complexes[i].is_subcomplex_of(&complexes[i + 1]));
        }
    }

    #[test]
    fn schedule_examples() {
        let s = default_schedule();
        assert_eq!(s.chosen[3], rational_from_decimal("1.8025"));
        assert_eq!(s.min_width(), rational_from_decimal("0.005"));
        let widths: Vec<Rational> = (0..5).map(|i| s.interval_width(i)).collect();
        assert_eq!(
            widths,
            ["0.06", "0.04", "0.065", "0.005", "0.015"].map(rational_from_decimal)
        );
    }

    #[test]
    fn sampling_across_interval_boundaries_differs() {
        // r = 1.5 vs r = 1.7 straddles the I3/I4 gap: complexes differ.
        let cloud = assemble(Row::Lower, 1);
        let a = vr_complex(&cloud, &rational_from_decimal("1.5"), 2);
        let b = vr_complex(&cloud, &rational_from_decimal("1.7"), 2);
        assert_ne!(a, b);
    }

    #[test]
    fn single_sample_constancy_is_trivial() {
        let cloud = assemble(Row::Lower, 1);
        let res = interval_constancy_check(&cloud, &default_schedule(), 1, 2);
        assert!(res.iter().all(|&b| b));
    }

    #[test]
    fn sandal_h1_dims_and_leftmost_spaces() {
        let diagram = sandal_diagram(2);
        diagram.validate().unwrap();
        let rep = diagram_homology(&diagram, 1, 101);
        assert_eq!(rep.dims(), &[0, 2, 4, 4, 2, 2, 4, 4, 2, 0]);
        // Bottom-left space is a single point; top-right is fully filled.
        assert_eq!(diagram.spaces[0].count(0), 1);
        assert_eq!(rep.dims()[9], 0);
    }

    #[test]
    fn sandal_realizes_m_d0() {
        for d in 1..=2 {
            let rep = diagram_homology(&sandal_diagram(d), 1, 101);
            let m = build_m_cl5(d, 0, 101);
            match are_isomorphic(&rep, &m, 1 << 16, 11).unwrap() {
                IsoResult::Iso(w) => assert!(w.is_invertible()),
                other => panic!("H1(S({d})) ≇ M({d},0): {other:?}"),
            }
        }
    }

    #[test]
    fn vr_diagram_d1_realizes_m_10() {
        let diagram = build_cl5_vr_diagram(1, &default_schedule(), 2).unwrap();
        diagram.validate().unwrap();
        let rep = diagram_homology(&diagram, 1, 101);
        assert_eq!(rep.dims(), &[0, 1, 2, 2, 1, 1, 2, 2, 1, 0]);
        let m = build_m_cl5(1, 0, 101);
        assert!(matches!(
            are_isomorphic(&rep, &m, 1 << 16, 5).unwrap(),
            IsoResult::Iso(_)
        ));
    }

    #[test]
    fn invalid_radius_breaks_the_pipeline() {
        // Replacing r1 by 1.3 (outside the table range) must either break
        // the vertical simplicial check or change the homology away from
        // M(d,0); both are reported.
        let mut schedule = default_schedule();
        schedule.chosen[0] = rational_from_decimal("1.3");
        schedule.upper_bounds[0] = rational_from_decimal("1.4");
        match build_cl5_vr_diagram(1, &schedule, 2) {
            Err(VrError::NotSimplicial { .. }) | Err(VrError::NotMonotone { .. }) => {}
            Err(e) => panic!("unexpected error {e}"),
            Ok(diagram) => {
                let rep = diagram_homology(&diagram, 1, 101);
                let m = build_m_cl5(1, 0, 101);
                assert!(
                    !matches!(are_isomorphic(&rep, &m, 1 << 16, 5).unwrap(), IsoResult::Iso(_)),
                    "invalid radius must not reproduce M(1,0)"
                );
            }
        }
    }

    #[test]
    fn margins_reflect_the_table_gap_defect() {
        // The exact tile table leaves a ~3.4e-5 gap at r3 (pair C2-C13), so
        // the harness must refuse to certify rho >= 0.005.
        let schedule = default_schedule();
        let (margins, rho) = certify_margins(1, &schedule);
        assert!(rho < rational_from_decimal("0.005"));
        assert!(rho > Rational::zero());
        assert!(margins[0] >= rational_from_decimal("0.05"));
        match stability_harness(1, &schedule, 1, 3, 2) {
            Err(GapViolation { witness, .. }) => assert_eq!(witness.0, 2),
            Ok(_) => panic!("gap violation expected with the exact table"),
        }
    }

    #[test]
    fn perturbations_below_certified_margin_are_safe() {
        let schedule = default_schedule();
        let (_, rho) = certify_margins(1, &schedule);
        let magnitude = &rho * rational_from_decimal("0.49");
        let trials = perturbation_trials(1, &schedule, &magnitude, 3, 99, 2);
        assert!(trials.iter().all(|(_, _, unchanged)| *unchanged));
        // An adversarial push at 2 rho flips at least one complex.
        let two_rho = &rho + &rho;
        assert!(adversarial_perturbation(1, &schedule, &two_rho, 2));
    }
}
