//! Constructors for the algebraic families: `φ(d,λ)` and `M(d,λ)` on the
//! length-5 commutative ladder, Kronecker regular modules `R_n(λ)`, the cube
//! functor `θ`, and the six 3×3 commutative grid variants built around a
//! central `K^{2d}` with Jordan-cell twisting.
//!
//! The grid variants are frozen to their displayed matrix tables; a separate
//! recipe-based builder re-derives one of them from the central star
//! assignment and completion rule as a cross-check.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::exactalg::{jordan_cell, FieldMatrix};
use crate::quiver::{cl_n_quiver, BoundQuiver, Orientation, Representation};

fn ident(d: usize, p: u64) -> FieldMatrix {
    FieldMatrix::identity(d, p)
}

fn zeros(r: usize, c: usize, p: u64) -> FieldMatrix {
    FieldMatrix::zero(r, c, p)
}

/// `[I; 0]` of shape `2d x d`.
fn stack_i_0(d: usize, p: u64) -> FieldMatrix {
    ident(d, p).vstack(&zeros(d, d, p)).unwrap()
}

/// `[0; I]` of shape `2d x d`.
fn stack_0_i(d: usize, p: u64) -> FieldMatrix {
    zeros(d, d, p).vstack(&ident(d, p)).unwrap()
}

/// `[I; M]` of shape `2d x d`.
fn stack_i_m(m: &FieldMatrix, p: u64) -> FieldMatrix {
    ident(m.rows(), p).vstack(m).unwrap()
}

/// `[I 0]` of shape `d x 2d`.
fn row_i_0(d: usize, p: u64) -> FieldMatrix {
    ident(d, p).hstack(&zeros(d, d, p)).unwrap()
}

/// `[0 I]` of shape `d x 2d`.
fn row_0_i(d: usize, p: u64) -> FieldMatrix {
    zeros(d, d, p).hstack(&ident(d, p)).unwrap()
}

/// `[I M]` of shape `d x 2d`.
fn row_i_m(m: &FieldMatrix, p: u64) -> FieldMatrix {
    ident(m.rows(), p).hstack(m).unwrap()
}

/// The block matrix data of the arrow `φ(d,λ)`: blocks `(I, I; I, J_d(λ))`
/// between the interval multiplicity spaces, tagged by the canonical
/// morphisms that carry them.
#[derive(Clone, Debug)]
pub struct PhiBlocks {
    pub d: usize,
    pub lambda: u64,
    /// `blocks[i][j]` maps source summand `j` to target summand `i`.
    pub blocks: [[FieldMatrix; 2]; 2],
    /// Source interval endpoints: `I[3,4]^d ⊕ I[2,5]^d`.
    pub sources: [(usize, usize); 2],
    /// Target interval endpoints: `I[1,4]^d ⊕ I[2,3]^d`.
    pub targets: [(usize, usize); 2],
}

impl PhiBlocks {
    /// Canonical-morphism tag of block `(i, j)`, e.g. `f^{2,5,1,4}`.
    pub fn label(&self, i: usize, j: usize) -> String {
        let s = self.sources[j];
        let t = self.targets[i];
        format!("f^{{{},{},{},{}}}", s.0, s.1, t.0, t.1)
    }
}

/// Builds `φ(d,λ)`: the map `I[3,4]^d ⊕ I[2,5]^d -> I[1,4]^d ⊕ I[2,3]^d`
/// with blocks `(I, I; I, J_d(λ))`.
pub fn build_phi(d: usize, lambda: u64, p: u64) -> PhiBlocks {
    assert!(d >= 1);
    PhiBlocks {
        d,
        lambda,
        blocks: [
            [ident(d, p), ident(d, p)],
            [ident(d, p), jordan_cell(d, lambda, p)],
        ],
        sources: [(3, 4), (2, 5)],
        targets: [(1, 4), (2, 3)],
    }
}

/// Builds `M(d,λ)` on `CL_5(ffff)`:
///
/// ```text
/// K^d -[I;0]-> K^2d --id--> K^2d -[I 0]-> K^d ---> 0
///  ^             ^             ^            ^       ^
///  0         [I;J_d(λ)]  [I I; I J_d(λ)]  [I I]     0
///  |             |             |            |       |
///  0  ---> K^d -[0;I]-> K^2d --id--> K^2d -[0 I]-> K^d
/// ```
pub fn build_m_cl5(d: usize, lambda: u64, p: u64) -> Representation {
    assert!(d >= 1);
    let quiver = Arc::new(cl_n_quiver(5, &Orientation::forward(4)));
    let j = jordan_cell(d, lambda, p);
    let dims = vec![0, d, 2 * d, 2 * d, d, d, 2 * d, 2 * d, d, 0];
    let v3 = ident(d, p)
        .hstack(&ident(d, p))
        .unwrap()
        .vstack(&ident(d, p).hstack(&j).unwrap())
        .unwrap();
    let maps = vec![
        // bottom horizontals
        zeros(d, 0, p),
        stack_0_i(d, p),
        ident(2 * d, p),
        row_0_i(d, p),
        // top horizontals
        stack_i_0(d, p),
        ident(2 * d, p),
        row_i_0(d, p),
        zeros(0, d, p),
        // verticals
        zeros(d, 0, p),
        stack_i_m(&j, p),
        v3,
        ident(d, p).hstack(&ident(d, p)).unwrap(),
        zeros(0, d, p),
    ];
    let rep = Representation::new(quiver, p, dims, maps).expect("shapes");
    debug_assert!(rep.validate().is_ok());
    rep
}

/// The Kronecker quiver `Q_2`: two vertices, two parallel arrows.
pub fn kronecker_quiver() -> BoundQuiver {
    BoundQuiver::new(
        vec!["1".into(), "2".into()],
        vec![
            ("g1".into(), "1".into(), "2".into()),
            ("g2".into(), "1".into(), "2".into()),
        ],
        vec![],
    )
    .expect("Q2")
}

/// The regular indecomposable `R_n(λ): K^n ⇉ K^n` with maps `I` and `J_n(λ)`.
pub fn build_kronecker(n: usize, lambda: u64, p: u64) -> Representation {
    assert!(n >= 1);
    let quiver = Arc::new(kronecker_quiver());
    Representation::new(
        quiver,
        p,
        vec![n, n],
        vec![ident(n, p), jordan_cell(n, lambda, p)],
    )
    .expect("shapes")
}

/// The commutative cube quiver: front face `1,2,3,4`, back face
/// `1',2',3',4'` (written `1p..4p`), bound by all six face relations.
pub fn cube_quiver() -> BoundQuiver {
    let v = |s: &str| s.to_string();
    BoundQuiver::new(
        ["1", "2", "3", "4", "1p", "2p", "3p", "4p"].iter().map(|s| v(s)).collect(),
        vec![
            ("12".into(), "1".into(), "2".into()),
            ("13".into(), "1".into(), "3".into()),
            ("24".into(), "2".into(), "4".into()),
            ("34".into(), "3".into(), "4".into()),
            ("1p2p".into(), "1p".into(), "2p".into()),
            ("1p3p".into(), "1p".into(), "3p".into()),
            ("2p4p".into(), "2p".into(), "4p".into()),
            ("3p4p".into(), "3p".into(), "4p".into()),
            ("11p".into(), "1".into(), "1p".into()),
            ("22p".into(), "2".into(), "2p".into()),
            ("33p".into(), "3".into(), "3p".into()),
            ("44p".into(), "4".into(), "4p".into()),
        ],
        vec![
            (vec!["12".into(), "24".into()], vec!["13".into(), "34".into()]),
            (vec!["1p2p".into(), "2p4p".into()], vec!["1p3p".into(), "3p4p".into()]),
            (vec!["12".into(), "22p".into()], vec!["11p".into(), "1p2p".into()]),
            (vec!["13".into(), "33p".into()], vec!["11p".into(), "1p3p".into()]),
            (vec!["24".into(), "44p".into()], vec!["22p".into(), "2p4p".into()]),
            (vec!["34".into(), "44p".into()], vec!["33p".into(), "3p4p".into()]),
        ],
    )
    .expect("cube")
}

/// The fully faithful functor `θ : rep Q_2 -> rep C` on objects. Zeroes sit
/// at corners `1` and `4'`; the first Kronecker arrow lands on `3 -> 3'`,
/// the second on `2 -> 2'`, matching the displayed `θ(R_n(λ))` (identity on
/// `3 -> 3'`, `J_n(λ)` on `2 -> 2'`).
pub fn theta(v: &Representation) -> Representation {
    assert_eq!(*v.quiver().as_ref(), kronecker_quiver(), "theta expects Q_2");
    let p = v.modulus();
    let (n1, n2) = (v.dims()[0], v.dims()[1]);
    let g1 = v.map_on("g1").clone();
    let g2 = v.map_on("g2").clone();
    let quiver = Arc::new(cube_quiver());
    // Vertex order: 1, 2, 3, 4, 1p, 2p, 3p, 4p.
    let dims = vec![0, n1, n1, n1, n2, n2, n2, 0];
    let maps = vec![
        zeros(n1, 0, p),       // 12
        zeros(n1, 0, p),       // 13
        ident(n1, p),          // 24
        ident(n1, p),          // 34
        ident(n2, p),          // 1p2p
        ident(n2, p),          // 1p3p
        zeros(0, n2, p),       // 2p4p
        zeros(0, n2, p),       // 3p4p
        zeros(n2, 0, p),       // 11p
        g2,                    // 22p
        g1,                    // 33p
        zeros(0, n1, p),       // 44p
    ];
    let rep = Representation::new(quiver, p, dims, maps).expect("shapes");
    debug_assert!(rep.validate().is_ok());
    rep
}

/// The interval `I_1` of `CL_2(f)`: top row `K -> K`, bottom-right `K`.
pub fn cl2_interval_i1(p: u64) -> Representation {
    let quiver = Arc::new(cl_n_quiver(2, &Orientation::forward(1)));
    // vertices b1, b2, t1, t2; arrows bh1, th1, v1, v2
    Representation::new(
        quiver,
        p,
        vec![0, 1, 1, 1],
        vec![zeros(1, 0, p), ident(1, p), zeros(1, 0, p), ident(1, p)],
    )
    .expect("I1")
}

/// The interval `I_2` of `CL_2(f)`: bottom row `K -> K`, top-left `K`.
pub fn cl2_interval_i2(p: u64) -> Representation {
    let quiver = Arc::new(cl_n_quiver(2, &Orientation::forward(1)));
    Representation::new(
        quiver,
        p,
        vec![1, 1, 1, 0],
        vec![ident(1, p), zeros(0, 1, p), ident(1, p), zeros(0, 1, p)],
    )
    .expect("I2")
}

/// The six 3×3 grid orientations, classified by the arrows of the central
/// star relative to the middle vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grid33Variant {
    FourIn,
    FourOut,
    ThreeInOneOut,
    OneInThreeOut,
    TwoInTwoOutA,
    TwoInTwoOutB,
}

impl Grid33Variant {
    pub const ALL: [Grid33Variant; 6] = [
        Grid33Variant::FourIn,
        Grid33Variant::FourOut,
        Grid33Variant::ThreeInOneOut,
        Grid33Variant::OneInThreeOut,
        Grid33Variant::TwoInTwoOutA,
        Grid33Variant::TwoInTwoOutB,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Grid33Variant::FourIn => "4in",
            Grid33Variant::FourOut => "4out",
            Grid33Variant::ThreeInOneOut => "3in1out",
            Grid33Variant::OneInThreeOut => "1in3out",
            Grid33Variant::TwoInTwoOutA => "2in2out_a",
            Grid33Variant::TwoInTwoOutB => "2in2out_b",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownVariant(pub String);

impl fmt::Display for UnknownVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown 3x3 grid variant: {}", self.0)
    }
}

impl FromStr for Grid33Variant {
    type Err = UnknownVariant;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Grid33Variant::ALL
            .iter()
            .find(|v| v.name() == s)
            .copied()
            .ok_or_else(|| UnknownVariant(s.to_string()))
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum H {
    Right,
    Left,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum V {
    Up,
    Down,
}

/// Horizontal directions per column pair and vertical directions per row
/// pair, read off the displayed module for each variant.
fn grid33_orientation(variant: Grid33Variant) -> ([H; 2], [V; 2]) {
    match variant {
        Grid33Variant::ThreeInOneOut => ([H::Right, H::Left], [V::Up, V::Up]),
        Grid33Variant::OneInThreeOut => ([H::Left, H::Right], [V::Up, V::Up]),
        Grid33Variant::FourIn => ([H::Right, H::Left], [V::Down, V::Up]),
        Grid33Variant::FourOut => ([H::Left, H::Right], [V::Up, V::Down]),
        Grid33Variant::TwoInTwoOutA => ([H::Left, H::Left], [V::Down, V::Down]),
        Grid33Variant::TwoInTwoOutB => ([H::Left, H::Right], [V::Down, V::Up]),
    }
}

/// The 3×3 commutative grid quiver for one variant. Vertices `r{i}c{j}`
/// (row 1 on top); arrows `h{i}{j}` (row `i`, between columns `j`, `j+1`)
/// and `v{i}{j}` (column `j`, between rows `i`, `i+1`); one commutativity
/// relation per unit square.
pub fn grid33_quiver(variant: Grid33Variant) -> BoundQuiver {
    let (hdir, vdir) = grid33_orientation(variant);
    let name = |i: usize, j: usize| format!("r{i}c{j}");
    let vertices: Vec<String> =
        (1..=3).flat_map(|i| (1..=3).map(move |j| name(i, j))).collect();
    let mut arrows = Vec::new();
    for i in 1..=3 {
        for j in 1..=2 {
            let (src, dst) = match hdir[j - 1] {
                H::Right => (name(i, j), name(i, j + 1)),
                H::Left => (name(i, j + 1), name(i, j)),
            };
            arrows.push((format!("h{i}{j}"), src, dst));
        }
    }
    for i in 1..=2 {
        for j in 1..=3 {
            let (src, dst) = match vdir[i - 1] {
                V::Up => (name(i + 1, j), name(i, j)),
                V::Down => (name(i, j), name(i + 1, j)),
            };
            arrows.push((format!("v{i}{j}"), src, dst));
        }
    }
    // One relation per unit square: the two directed paths from the square's
    // source corner to its sink corner.
    let mut relations = Vec::new();
    for i in 1..=2 {
        for j in 1..=2 {
            let ids = [
                format!("h{i}{j}"),
                format!("h{}{}", i + 1, j),
                format!("v{i}{j}"),
                format!("v{}{}", i, j + 1),
            ];
            let find = |id: &str| {
                arrows
                    .iter()
                    .find(|(a, _, _)| a == id)
                    .map(|(_, s, d)| (s.clone(), d.clone()))
                    .unwrap()
            };
            let eps: Vec<(String, (String, String))> =
                ids.iter().map(|id| (id.clone(), find(id))).collect();
            // Source corner: src of two arrows.
            let source = eps
                .iter()
                .map(|(_, (s, _))| s.clone())
                .find(|s| eps.iter().filter(|(_, (s2, _))| s2 == s).count() == 2)
                .expect("square has a source corner");
            let mut paths = Vec::new();
            for (id, (s, mid)) in eps.iter().filter(|(_, (s, _))| *s == source) {
                let _ = s;
                let (id2, _) = eps
                    .iter()
                    .find(|(other, (s2, _))| other != id && s2 == mid)
                    .expect("square path continues");
                paths.push(vec![id.clone(), id2.clone()]);
            }
            assert_eq!(paths.len(), 2);
            relations.push((paths[0].clone(), paths[1].clone()));
        }
    }
    BoundQuiver::new(vertices, arrows, relations).expect("grid33")
}

/// Builds the displayed 3×3 grid module for a variant: `K^{2d}` at the
/// center, `K^d` on the arms and completed corners, zero elsewhere; arm maps
/// from `{[I;0],[0;I],[I;I],[I;J_d(λ)]}` (or transposes) and corner
/// completions as displayed.
pub fn build_grid33(
    variant: Grid33Variant,
    d: usize,
    lambda: u64,
    p: u64,
) -> Representation {
    assert!(d >= 1);
    let quiver = Arc::new(grid33_quiver(variant));
    let j = jordan_cell(d, lambda, p);
    let name = |i: usize, j_: usize| format!("r{i}c{j_}");
    // Dimensions by vertex.
    let dim_table: [[usize; 3]; 3] = match variant {
        Grid33Variant::ThreeInOneOut => [[d, d, d], [d, 2 * d, d], [0, d, 0]],
        Grid33Variant::OneInThreeOut => [[0, d, 0], [d, 2 * d, d], [d, d, d]],
        Grid33Variant::FourIn | Grid33Variant::FourOut => {
            [[0, d, 0], [d, 2 * d, d], [0, d, 0]]
        }
        Grid33Variant::TwoInTwoOutA => [[d, d, 0], [d, 2 * d, d], [0, d, d]],
        Grid33Variant::TwoInTwoOutB => [[d, d, d], [d, 2 * d, d], [d, d, d]],
    };
    let dims: Vec<usize> = (1..=3).flat_map(|i| (1..=3).map(move |jj| dim_table[i - 1][jj - 1])).collect();
    // Nonzero maps by arrow id; everything else is the zero map of the
    // right shape.
    let mut nonzero: Vec<(&str, FieldMatrix)> = Vec::new();
    match variant {
        Grid33Variant::ThreeInOneOut => {
            nonzero.extend([
                ("h11", ident(d, p)),
                ("h12", ident(d, p)),
                ("h21", stack_i_0(d, p)),
                ("h22", stack_0_i(d, p)),
                ("v11", ident(d, p)),
                ("v12", row_i_m(&ident(d, p), p)), // [I I]
                ("v13", ident(d, p)),
                ("v22", stack_i_m(&j, p)),
            ]);
        }
        Grid33Variant::OneInThreeOut => {
            nonzero.extend([
                ("h21", row_i_0(d, p)),
                ("h22", row_0_i(d, p)),
                ("h31", ident(d, p)),
                ("h32", j.clone()),
                ("v12", row_i_m(&ident(d, p), p)),
                ("v21", ident(d, p)),
                ("v22", stack_i_m(&j, p)),
                ("v23", ident(d, p)),
            ]);
        }
        Grid33Variant::FourIn => {
            nonzero.extend([
                ("h21", stack_i_0(d, p)),
                ("h22", stack_0_i(d, p)),
                ("v12", stack_i_m(&ident(d, p), p)), // [I; I] pointing down into center
                ("v22", stack_i_m(&j, p)),
            ]);
        }
        Grid33Variant::FourOut => {
            nonzero.extend([
                ("h21", row_i_0(d, p)),
                ("h22", row_0_i(d, p)),
                ("v12", row_i_m(&j, p)),             // [I J_d(λ)] upward
                ("v22", row_i_m(&ident(d, p), p)),   // [I I] downward
            ]);
        }
        Grid33Variant::TwoInTwoOutA => {
            nonzero.extend([
                ("h11", ident(d, p)),
                ("h21", row_i_0(d, p)),
                ("h22", stack_i_m(&j, p)),
                ("h32", ident(d, p)),
                ("v11", ident(d, p)),
                ("v12", stack_i_m(&ident(d, p), p)),
                ("v22", row_0_i(d, p)),
                ("v23", j.clone()),
            ]);
        }
        Grid33Variant::TwoInTwoOutB => {
            nonzero.extend([
                ("h11", ident(d, p)),
                ("h12", ident(d, p)),
                ("h21", row_i_0(d, p)),
                ("h22", row_0_i(d, p)),
                ("h31", ident(d, p)),
                ("h32", j.clone()),
                ("v11", ident(d, p)),
                ("v12", stack_i_m(&ident(d, p), p)),
                ("v13", ident(d, p)),
                ("v21", ident(d, p)),
                ("v22", stack_i_m(&j, p)),
                ("v23", ident(d, p)),
            ]);
        }
    }
    let dim_of = |vname: &str| -> usize {
        dims[quiver.vertex_index(vname).unwrap()]
    };
    let maps: Vec<FieldMatrix> = quiver
        .arrows()
        .iter()
        .map(|a| {
            let src = quiver.vertex_names()[a.src].clone();
            let dst = quiver.vertex_names()[a.dst].clone();
            match nonzero.iter().find(|(id, _)| *id == a.id) {
                Some((_, m)) => m.clone(),
                None => zeros(dim_of(&dst), dim_of(&src), p),
            }
        })
        .collect();
    let _ = name;
    let rep = Representation::new(quiver, p, dims, maps).expect("shapes");
    debug_assert!(rep.validate().is_ok());
    rep
}

/// Builds the three-in-one-out grid from the central star recipe instead of
/// the frozen table: in-arms `[I;0]`, `[0;I]`, `[I;I]`; out-arm
/// `[I J_d(λ)]`; each corner square gets the composite on one arrow and the
/// identity on the other. The top-right completion is
/// `[I J_d(λ)]·[I;I] = J_d(λ+1)`.
pub fn build_grid33_recipe(d: usize, lambda: u64, p: u64) -> Representation {
    assert!(d >= 1);
    let quiver = Arc::new(grid33_quiver(Grid33Variant::ThreeInOneOut));
    let j = jordan_cell(d, lambda, p);
    let dims = vec![d, d, d, d, 2 * d, d, 0, d, 0];
    let out_arm = row_i_m(&j, p); // [I J_d(λ)] : center -> top
    let in_left = stack_i_0(d, p);
    let in_right = stack_i_m(&ident(d, p), p); // [I; I]
    let in_bottom = stack_0_i(d, p);
    // Corner completions: composite through the center on the vertical,
    // identity on the horizontal into the top-center.
    let top_left_comp = out_arm.matmul(&in_left).unwrap(); // = I
    let top_right_comp = out_arm.matmul(&in_right).unwrap(); // = J_d(λ+1)
    let by_id: Vec<(&str, FieldMatrix)> = vec![
        ("h11", ident(d, p)),
        ("h12", ident(d, p)),
        ("h21", in_left),
        ("h22", in_right),
        ("v11", top_left_comp),
        ("v12", out_arm),
        ("v13", top_right_comp),
        ("v22", in_bottom),
    ];
    let maps: Vec<FieldMatrix> = quiver
        .arrows()
        .iter()
        .map(|a| match by_id.iter().find(|(id, _)| *id == a.id) {
            Some((_, m)) => m.clone(),
            None => zeros(dims[a.dst], dims[a.src], p),
        })
        .collect();
    let rep = Representation::new(quiver, p, dims, maps).expect("shapes");
    debug_assert!(rep.validate().is_ok());
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{
        a_n_quiver, are_isomorphic, end_basis, hom_basis, is_local_exhaustive, ladder_split,
        Dir, IsoResult, Locality,
    };

    #[test]
    fn phi_blocks_and_labels() {
        let phi = build_phi(1, 0, 101);
        assert_eq!(phi.blocks[0][0], FieldMatrix::from_rows(&[vec![1]], 101));
        assert_eq!(phi.blocks[1][1], FieldMatrix::from_rows(&[vec![0]], 101));
        assert_eq!(phi.label(0, 1), "f^{2,5,1,4}");
        let phi3 = build_phi(3, 7, 101);
        assert_eq!(phi3.blocks[1][1], jordan_cell(3, 7, 101));
        // All four blocks nonzero (the K_{2,2} configuration carries them).
        for i in 0..2 {
            for jj in 0..2 {
                assert!(!build_phi(2, 1, 101).blocks[i][jj].is_zero() || (i, jj) == (1, 1));
            }
        }
    }

    #[test]
    fn m_cl5_dims_maps_and_validation() {
        let m = build_m_cl5(1, 0, 101);
        assert!(m.validate().is_ok());
        assert_eq!(m.dims(), &[0, 1, 2, 2, 1, 1, 2, 2, 1, 0]);
        assert_eq!(m.map_on("v2"), &FieldMatrix::from_rows(&[vec![1], vec![0]], 101));
        for d in 1..=6 {
            for lambda in [0u64, 1] {
                let m = build_m_cl5(d, lambda, 101);
                assert!(m.validate().is_ok());
                assert_eq!(end_basis(&m).dim(), d, "dim End(M({d},{lambda}))");
            }
        }
    }

    #[test]
    fn m_cl5_rows_decompose_as_phi_signature() {
        let d = 3;
        let m = build_m_cl5(d, 0, 101);
        let (bottom, top, _) = ladder_split(&m).unwrap();
        let dec_b = crate::intervals::decompose_forward(&bottom).unwrap();
        assert_eq!(dec_b.multiplicity(3, 4), d);
        assert_eq!(dec_b.multiplicity(2, 5), d);
        assert_eq!(dec_b.total_summands(), 2 * d);
        let dec_t = crate::intervals::decompose_forward(&top).unwrap();
        assert_eq!(dec_t.multiplicity(1, 4), d);
        assert_eq!(dec_t.multiplicity(2, 3), d);
        let phi = build_phi(d, 0, 101);
        assert_eq!(phi.sources, [(3, 4), (2, 5)]);
        assert_eq!(phi.targets, [(1, 4), (2, 3)]);
    }

    #[test]
    fn kronecker_and_theta() {
        let r1 = build_kronecker(1, 0, 101);
        assert_eq!(r1.map_on("g1"), &FieldMatrix::from_rows(&[vec![1]], 101));
        assert_eq!(r1.map_on("g2"), &FieldMatrix::from_rows(&[vec![0]], 101));
        let r3 = build_kronecker(3, 0, 101);
        assert_eq!(r3.map_on("g2"), &jordan_cell(3, 0, 101));
        for n in 1..5 {
            assert_eq!(end_basis(&build_kronecker(n, 0, 101)).dim(), n);
        }

        let t = theta(&build_kronecker(2, 5, 101));
        assert!(t.validate().is_ok());
        assert_eq!(t.dim_at("1"), 0);
        assert_eq!(t.dim_at("4p"), 0);
        assert_eq!(t.map_on("33p"), &FieldMatrix::identity(2, 101));
        assert_eq!(t.map_on("22p"), &jordan_cell(2, 5, 101));
    }

    #[test]
    fn theta_is_fully_faithful_on_samples() {
        use rand_core::{RngCore, SeedableRng};
        let p = 101;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        let quiver = Arc::new(kronecker_quiver());
        let mut random_rep = |n1: usize, n2: usize| {
            let g1 = FieldMatrix::from_fn(n2, n1, p, |_, _| rng.next_u64() % p);
            let g2 = FieldMatrix::from_fn(n2, n1, p, |_, _| rng.next_u64() % p);
            Representation::new(quiver.clone(), p, vec![n1, n2], vec![g1, g2]).unwrap()
        };
        for (n1, n2, m1, m2) in [(1, 1, 1, 1), (2, 1, 1, 2), (2, 2, 2, 2), (3, 2, 2, 3), (2, 3, 3, 2)] {
            let v = random_rep(n1, n2);
            let w = random_rep(m1, m2);
            let lhs = hom_basis(&theta(&v), &theta(&w)).unwrap().dim();
            let rhs = hom_basis(&v, &w).unwrap().dim();
            assert_eq!(lhs, rhs, "theta must preserve Hom dimensions");
        }
    }

    #[test]
    fn theta_preserves_direct_sums_and_indecomposability() {
        let p = 2;
        let v = build_kronecker(1, 0, p);
        let w = build_kronecker(2, 1, p);
        let sum_then_theta = theta(&v.direct_sum(&w).unwrap());
        let theta_then_sum = theta(&v).direct_sum(&theta(&w)).unwrap();
        match are_isomorphic(&sum_then_theta, &theta_then_sum, 1 << 20, 3).unwrap() {
            IsoResult::Iso(_) => {}
            other => panic!("θ(V⊕W) ≅ θV⊕θW expected, got {other:?}"),
        }
        for n in 1..=4 {
            let t = theta(&build_kronecker(n, 0, p));
            let end = end_basis(&t);
            assert!(matches!(is_local_exhaustive(&end, 1 << 20), Locality::Local));
        }
    }

    #[test]
    fn cl2_intervals_match_display_and_hom_dim() {
        let p = 101;
        let i1 = cl2_interval_i1(p);
        let i2 = cl2_interval_i2(p);
        assert!(i1.validate().is_ok());
        assert!(i2.validate().is_ok());
        assert_eq!(i1.dims(), &[0, 1, 1, 1]);
        assert_eq!(i2.dims(), &[1, 1, 1, 0]);
        assert_eq!(hom_basis(&i1, &i2).unwrap().dim(), 2);
    }

    #[test]
    fn cube_combinatorics() {
        let c = cube_quiver();
        assert_eq!(c.arrow_count(), 12);
        assert_eq!(c.relations().len(), 6);
    }

    #[test]
    fn all_grid_variants_validate_and_are_local() {
        for variant in Grid33Variant::ALL {
            for d in 1..=3 {
                for lambda in [0u64, 1] {
                    let g = build_grid33(variant, d, lambda, 101);
                    assert!(g.validate().is_ok(), "{} d={d} λ={lambda}", variant.name());
                    assert_eq!(g.dim_at("r2c2"), 2 * d);
                }
                let g2 = build_grid33(variant, d, 1, 2);
                let end = end_basis(&g2);
                assert_eq!(end.dim(), d, "End dim for {}", variant.name());
                assert!(
                    matches!(is_local_exhaustive(&end, 1 << 20), Locality::Local),
                    "{} d={d} must be local",
                    variant.name()
                );
            }
        }
    }

    #[test]
    fn four_in_arm_maps_match_display() {
        let d = 1;
        let g = build_grid33(Grid33Variant::FourIn, d, 0, 101);
        assert_eq!(g.dims().iter().sum::<usize>(), 6 * d);
        assert_eq!(g.map_on("h21"), &stack_i_0(d, 101));
        assert_eq!(g.map_on("h22"), &stack_0_i(d, 101));
        assert_eq!(g.map_on("v12"), &stack_i_m(&ident(d, 101), 101));
        assert_eq!(g.map_on("v22"), &stack_i_m(&jordan_cell(d, 0, 101), 101));
    }

    #[test]
    fn four_out_arm_maps_match_display() {
        let d = 2;
        let g = build_grid33(Grid33Variant::FourOut, d, 0, 101);
        assert_eq!(g.map_on("h21"), &row_i_0(d, 101));
        assert_eq!(g.map_on("h22"), &row_0_i(d, 101));
        assert_eq!(g.map_on("v12"), &row_i_m(&jordan_cell(d, 0, 101), 101));
        assert_eq!(g.map_on("v22"), &row_i_m(&ident(d, 101), 101));
    }

    #[test]
    fn recipe_grid_exhibits_shifted_jordan_completion() {
        for d in 1..=4 {
            for lambda in [0u64, 1, 7] {
                let g = build_grid33_recipe(d, lambda, 101);
                assert!(g.validate().is_ok());
                // [I J_d(λ)]·[I;I] = J_d(λ+1) entrywise.
                let composite = g
                    .map_on("v12")
                    .matmul(g.map_on("h22"))
                    .unwrap();
                assert_eq!(composite, jordan_cell(d, lambda + 1, 101));
                assert_eq!(g.map_on("v13"), &jordan_cell(d, lambda + 1, 101));
            }
        }
        let end = end_basis(&build_grid33_recipe(3, 0, 2));
        assert_eq!(end.dim(), 3);
        assert!(matches!(is_local_exhaustive(&end, 1 << 20), Locality::Local));
    }

    #[test]
    fn grid_orientation_reading() {
        // 2in2out_a is the all-left/all-down display; its reverse is the
        // standard forward grid orientation class.
        let q = grid33_quiver(Grid33Variant::TwoInTwoOutA);
        let a = &q.arrows()[q.arrow_index("h11").unwrap()];
        assert_eq!(q.vertex_names()[a.src], "r1c2");
        assert_eq!(q.vertex_names()[a.dst], "r1c1");
        let v = &q.arrows()[q.arrow_index("v11").unwrap()];
        assert_eq!(q.vertex_names()[v.src], "r1c1");
        assert_eq!(q.vertex_names()[v.dst], "r2c1");
        let _ = (Dir::Forward, a_n_quiver(2, &Orientation::forward(1)));
    }
}
