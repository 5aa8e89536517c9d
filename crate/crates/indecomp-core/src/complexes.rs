//! Abstract simplicial complexes, boundary matrices, homology with explicit
//! cycle bases over `F_p`, induced maps of simplicial maps, and the functor
//! taking a quiver-shaped diagram of complexes to a representation.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::exactalg::FieldMatrix;
use crate::quiver::{BoundQuiver, Representation};

/// A finite abstract simplicial complex on `u32` vertex ids. Simplices are
/// stored per dimension as strictly sorted vertex tuples; the set is closed
/// under faces by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    // simplices[k] = sorted set of k-simplices (each a sorted vertex tuple)
    simplices: Vec<BTreeSet<Vec<u32>>>,
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        SimplicialComplex { simplices: Vec::new() }
    }

    /// Builds the face closure of the given simplices (vertices may be listed
    /// in any order; duplicates are rejected).
    pub fn from_simplices<I, S>(simplices: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[u32]>,
    {
        let mut out = SimplicialComplex::empty();
        for s in simplices {
            out.insert_with_faces(s.as_ref());
        }
        out
    }

    pub fn insert_with_faces(&mut self, simplex: &[u32]) {
        let mut v: Vec<u32> = simplex.to_vec();
        v.sort_unstable();
        v.dedup();
        assert_eq!(v.len(), simplex.len(), "repeated vertex in simplex");
        let k = v.len() - 1;
        while self.simplices.len() <= k {
            self.simplices.push(BTreeSet::new());
        }
        if self.simplices[k].contains(&v) {
            return;
        }
        if k > 0 {
            for drop in 0..v.len() {
                let face: Vec<u32> = v
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != drop)
                    .map(|(_, &x)| x)
                    .collect();
                self.insert_with_faces(&face);
            }
        }
        self.simplices[k].insert(v);
    }

    /// Highest dimension with simplices, or `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        (0..self.simplices.len()).rev().find(|&k| !self.simplices[k].is_empty())
    }

    pub fn simplices_of_dim(&self, k: usize) -> Vec<Vec<u32>> {
        self.simplices.get(k).map(|s| s.iter().cloned().collect()).unwrap_or_default()
    }

    pub fn count(&self, k: usize) -> usize {
        self.simplices.get(k).map_or(0, BTreeSet::len)
    }

    pub fn vertices(&self) -> Vec<u32> {
        self.simplices_of_dim(0).into_iter().map(|v| v[0]).collect()
    }

    pub fn contains(&self, simplex: &[u32]) -> bool {
        let mut v: Vec<u32> = simplex.to_vec();
        v.sort_unstable();
        self.simplices
            .get(v.len() - 1)
            .is_some_and(|s| s.contains(&v))
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.simplices.iter().enumerate().all(|(k, set)| {
            set.iter().all(|s| other.simplices.get(k).is_some_and(|o| o.contains(s)))
        })
    }

    /// Euler characteristic `Σ (-1)^k #simplices_k`.
    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .enumerate()
            .map(|(k, s)| if k % 2 == 0 { s.len() as i64 } else { -(s.len() as i64) })
            .sum()
    }
}

/// The clique (flag) complex of a graph, expanded up to `maxdim`.
pub fn clique_complex(vertices: &[u32], edges: &[(u32, u32)], maxdim: usize) -> SimplicialComplex {
    let mut complex = SimplicialComplex::empty();
    for &v in vertices {
        complex.insert_with_faces(&[v]);
    }
    let mut adjacency: BTreeMap<u32, BTreeSet<u32>> = BTreeMap::new();
    for &(u, v) in edges {
        assert_ne!(u, v, "loop edge");
        adjacency.entry(u).or_default().insert(v);
        adjacency.entry(v).or_default().insert(u);
    }
    // Grow cliques one vertex at a time; extend only past the last vertex so
    // each clique is enumerated once.
    let mut current: Vec<Vec<u32>> = edges
        .iter()
        .map(|&(u, v)| {
            let mut e = vec![u, v];
            e.sort_unstable();
            e
        })
        .collect();
    current.sort();
    current.dedup();
    for clique in &current {
        complex.insert_with_faces(clique);
    }
    for _size in 3..=maxdim + 1 {
        let mut next = Vec::new();
        for clique in &current {
            let last = *clique.last().unwrap();
            let candidates: Vec<u32> = adjacency
                .get(&clique[0])
                .map(|s| s.iter().copied().filter(|&w| w > last).collect())
                .unwrap_or_default();
            for w in candidates {
                if clique.iter().all(|&u| adjacency[&u].contains(&w)) {
                    let mut bigger = clique.clone();
                    bigger.push(w);
                    complex.insert_with_faces(&bigger);
                    next.push(bigger);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        current = next;
    }
    complex
}

/// Boundary matrix `∂_k : C_k -> C_{k-1}` with columns over the sorted
/// k-simplices and alternating signs reduced mod `p`. For `k = 0` this is
/// the zero map out of `C_0`.
pub fn boundary_matrix(complex: &SimplicialComplex, k: usize, p: u64) -> FieldMatrix {
    let cols = complex.simplices_of_dim(k);
    if k == 0 {
        return FieldMatrix::zero(0, cols.len(), p);
    }
    let rows = complex.simplices_of_dim(k - 1);
    let row_index: BTreeMap<&[u32], usize> =
        rows.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
    let mut m = FieldMatrix::zero(rows.len(), cols.len(), p);
    for (j, s) in cols.iter().enumerate() {
        for drop in 0..s.len() {
            let face: Vec<u32> = s
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != drop)
                .map(|(_, &x)| x)
                .collect();
            let i = row_index[face.as_slice()];
            let sign = if drop % 2 == 0 { 1 } else { p - 1 };
            m[(i, j)] = sign;
        }
    }
    m
}

/// A homology basis in degree `k`: Betti number, explicit cycle
/// representatives (coordinates over the sorted k-simplices), and the
/// factored decision data needed to express arbitrary cycles in the basis.
#[derive(Clone, Debug)]
pub struct HomologyBasis {
    pub degree: usize,
    pub p: u64,
    pub betti: usize,
    /// Cycle representatives as chain vectors over the k-simplices.
    pub cycle_representatives: Vec<Vec<u64>>,
    // Expression machinery: row transform of [reps | boundaries] and the
    // pivot columns of its reduced form.
    transform: FieldMatrix,
    pivots: Vec<usize>,
}

impl HomologyBasis {
    /// Expresses a cycle in the homology basis (a boundary maps to all
    /// zeros). Returns `None` if the chain is not a cycle modulo boundaries,
    /// which indicates a non-chain-map upstream.
    pub fn express(&self, chain: &[u64]) -> Option<Vec<u64>> {
        let p = self.p;
        let e = self.transform.rows();
        assert_eq!(chain.len(), e);
        // w = T * chain
        let mut w = vec![0u64; e];
        for (r, wr) in w.iter_mut().enumerate() {
            let mut acc = 0u64;
            for c in 0..e {
                acc = (acc + self.transform[(r, c)] * (chain[c] % p)) % p;
            }
            *wr = acc;
        }
        // Consistency: rows past the rank must vanish.
        if w.iter().skip(self.pivots.len()).any(|&x| x != 0) {
            return None;
        }
        let mut coeffs = vec![0u64; self.betti];
        for (r, &c) in self.pivots.iter().enumerate() {
            if c < self.betti {
                coeffs[c] = w[r];
            }
        }
        Some(coeffs)
    }
}

/// Homology of `X` in degree `k` over `F_p`, with deterministic first-pivot
/// cycle representatives: `betti = dim ker ∂_k − rank ∂_{k+1}`.
pub fn homology(complex: &SimplicialComplex, k: usize, p: u64) -> HomologyBasis {
    let d_k = boundary_matrix(complex, k, p);
    let d_k1 = boundary_matrix(complex, k + 1, p);
    let cycles = d_k.kernel_basis(); // n_k x z
    let n_k = complex.count(k);
    // Select kernel columns independent modulo the boundary columns: rref of
    // [boundaries | cycles], keep cycle columns that become pivots.
    let boundaries = d_k1;
    let mut combined = FieldMatrix::zero(n_k, boundaries.cols() + cycles.cols(), p);
    for r in 0..n_k {
        for c in 0..boundaries.cols() {
            combined[(r, c)] = boundaries[(r, c)];
        }
        for c in 0..cycles.cols() {
            combined[(r, boundaries.cols() + c)] = cycles[(r, c)];
        }
    }
    let pivots = combined.rref_in_place();
    let reps: Vec<Vec<u64>> = pivots
        .iter()
        .filter(|&&c| c >= boundaries.cols())
        .map(|&c| cycles.column(c - boundaries.cols()))
        .collect();
    let betti = reps.len();
    // Factor [reps | boundaries | I] once for later expression queries.
    let total = betti + boundaries.cols();
    let mut aug = FieldMatrix::zero(n_k, total + n_k, p);
    for r in 0..n_k {
        for (c, rep) in reps.iter().enumerate() {
            aug[(r, c)] = rep[r];
        }
        for c in 0..boundaries.cols() {
            aug[(r, betti + c)] = boundaries[(r, c)];
        }
        aug[(r, total + r)] = 1;
    }
    let aug_pivots = aug.rref_in_place();
    let pivots: Vec<usize> =
        aug_pivots.into_iter().take_while(|&c| c < total).collect();
    let mut transform = FieldMatrix::zero(n_k, n_k, p);
    for r in 0..n_k {
        for c in 0..n_k {
            transform[(r, c)] = aug[(r, total + c)];
        }
    }
    HomologyBasis {
        degree: k,
        p,
        betti,
        cycle_representatives: reps,
        transform,
        pivots,
    }
}

/// A simplicial map given by a total vertex assignment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    pub assignment: BTreeMap<u32, u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotSimplicial {
    /// A source simplex whose image is not a simplex of the target (or a
    /// vertex with no assignment).
    pub witness: Vec<u32>,
}

impl fmt::Display for NotSimplicial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "image of simplex {:?} is not in the target complex", self.witness)
    }
}

impl SimplicialMap {
    pub fn identity(complex: &SimplicialComplex) -> SimplicialMap {
        SimplicialMap {
            assignment: complex.vertices().into_iter().map(|v| (v, v)).collect(),
        }
    }

    pub fn from_fn(src: &SimplicialComplex, f: impl Fn(u32) -> u32) -> SimplicialMap {
        SimplicialMap {
            assignment: src.vertices().into_iter().map(|v| (v, f(v))).collect(),
        }
    }

    /// Checks that every simplex maps (after deduplication) to a simplex of
    /// the target.
    pub fn check_simplicial(
        &self,
        src: &SimplicialComplex,
        dst: &SimplicialComplex,
    ) -> Result<(), NotSimplicial> {
        let top = src.dim().map_or(0, |d| d);
        for k in 0..=top {
            for s in src.simplices_of_dim(k) {
                let mut image: Vec<u32> = Vec::with_capacity(s.len());
                for &v in &s {
                    match self.assignment.get(&v) {
                        Some(&w) => image.push(w),
                        None => return Err(NotSimplicial { witness: s.clone() }),
                    }
                }
                image.sort_unstable();
                image.dedup();
                if !dst.contains(&image) {
                    return Err(NotSimplicial { witness: s });
                }
            }
        }
        Ok(())
    }

    fn compose(&self, then: &SimplicialMap) -> SimplicialMap {
        SimplicialMap {
            assignment: self
                .assignment
                .iter()
                .map(|(&v, &w)| (v, then.assignment[&w]))
                .collect(),
        }
    }
}

/// The map induced on degree-`k` homology by a simplicial map. Simplices
/// with degenerate images contribute zero; otherwise the coefficient is
/// transported with the sorting-permutation sign. The result is a
/// `betti(dst) x betti(src)` matrix in the given bases.
pub fn induced_map(
    f: &SimplicialMap,
    src: &SimplicialComplex,
    dst: &SimplicialComplex,
    k: usize,
    p: u64,
    src_basis: &HomologyBasis,
    dst_basis: &HomologyBasis,
) -> Result<FieldMatrix, NotSimplicial> {
    f.check_simplicial(src, dst)?;
    let src_simplices = src.simplices_of_dim(k);
    let dst_simplices = dst.simplices_of_dim(k);
    let dst_index: BTreeMap<&[u32], usize> =
        dst_simplices.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
    let mut out = FieldMatrix::zero(dst_basis.betti, src_basis.betti, p);
    for (j, rep) in src_basis.cycle_representatives.iter().enumerate() {
        let mut image = vec![0u64; dst_simplices.len()];
        for (idx, &coef) in rep.iter().enumerate() {
            if coef % p == 0 {
                continue;
            }
            let s = &src_simplices[idx];
            let mapped: Vec<u32> = s.iter().map(|v| f.assignment[v]).collect();
            let mut sorted = mapped.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                continue; // degenerate image
            }
            // Sign of the permutation sorting `mapped`.
            let mut inversions = 0usize;
            for a in 0..mapped.len() {
                for b in a + 1..mapped.len() {
                    if mapped[a] > mapped[b] {
                        inversions += 1;
                    }
                }
            }
            let signed = if inversions % 2 == 0 { coef } else { (p - coef) % p };
            let di = dst_index[sorted.as_slice()];
            image[di] = (image[di] + signed) % p;
        }
        let coeffs = dst_basis
            .express(&image)
            .expect("image of a cycle under a simplicial map is a cycle");
        for (i, &c) in coeffs.iter().enumerate() {
            out[(i, j)] = c;
        }
    }
    Ok(out)
}

/// A quiver-shaped diagram of complexes and simplicial maps.
#[derive(Clone, Debug)]
pub struct ComplexDiagram {
    pub shape: Arc<BoundQuiver>,
    pub spaces: Vec<SimplicialComplex>,
    pub maps: Vec<SimplicialMap>,
}

#[derive(Clone, Debug)]
pub enum DiagramError {
    NotSimplicial { arrow: usize, witness: Vec<u32> },
    RelationMismatch { relation: usize },
}

impl fmt::Display for DiagramError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramError::NotSimplicial { arrow, witness } => {
                write!(f, "map on arrow {arrow} is not simplicial at {witness:?}")
            }
            DiagramError::RelationMismatch { relation } => {
                write!(f, "vertex maps disagree on relation {relation}")
            }
        }
    }
}

impl ComplexDiagram {
    /// Checks each map is simplicial and relation path compositions agree as
    /// vertex assignments.
    pub fn validate(&self) -> Result<(), DiagramError> {
        assert_eq!(self.spaces.len(), self.shape.vertex_count());
        assert_eq!(self.maps.len(), self.shape.arrow_count());
        for (i, arrow) in self.shape.arrows().iter().enumerate() {
            self.maps[i]
                .check_simplicial(&self.spaces[arrow.src], &self.spaces[arrow.dst])
                .map_err(|e| DiagramError::NotSimplicial { arrow: i, witness: e.witness })?;
        }
        for (ri, rel) in self.shape.relations().iter().enumerate() {
            let compose_path = |path: &[usize]| -> Option<SimplicialMap> {
                let first = *path.first()?;
                let mut acc = SimplicialMap::identity(&self.spaces[self.shape.arrows()[first].src]);
                for &a in path {
                    acc = acc.compose(&self.maps[a]);
                }
                Some(acc)
            };
            match (compose_path(&rel.lhs), compose_path(&rel.rhs)) {
                (Some(a), Some(b)) => {
                    if a != b {
                        return Err(DiagramError::RelationMismatch { relation: ri });
                    }
                }
                // Empty sides denote identities; compositions against them
                // are checked by the nonempty side mapping vertices to
                // themselves.
                (Some(a), None) | (None, Some(a)) => {
                    if a.assignment.iter().any(|(v, w)| v != w) {
                        return Err(DiagramError::RelationMismatch { relation: ri });
                    }
                }
                (None, None) => {}
            }
        }
        Ok(())
    }

    /// Applies degree-`k` homology to the whole diagram, producing a
    /// representation of the shape quiver over `F_p`. Functoriality makes
    /// the relation squares commute; `validate` is re-checked on the result.
    pub fn homology_representation(&self, k: usize, p: u64) -> Representation {
        let bases: Vec<HomologyBasis> =
            self.spaces.iter().map(|space| homology(space, k, p)).collect();
        let dims: Vec<usize> = bases.iter().map(|b| b.betti).collect();
        let maps: Vec<FieldMatrix> = self
            .shape
            .arrows()
            .iter()
            .enumerate()
            .map(|(i, arrow)| {
                induced_map(
                    &self.maps[i],
                    &self.spaces[arrow.src],
                    &self.spaces[arrow.dst],
                    k,
                    p,
                    &bases[arrow.src],
                    &bases[arrow.dst],
                )
                .expect("diagram maps must be simplicial")
            })
            .collect();
        let rep = Representation::new(self.shape.clone(), p, dims, maps).expect("shapes");
        debug_assert!(rep.validate().is_ok(), "homology functor must respect relations");
        rep
    }
}

/// Convenience wrapper matching the pipeline's entry point.
pub fn diagram_homology(diagram: &ComplexDiagram, k: usize, p: u64) -> Representation {
    diagram.homology_representation(k, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{a_n_quiver, Orientation};

    fn circle(n: u32) -> SimplicialComplex {
        SimplicialComplex::from_simplices((0..n).map(|i| [i, (i + 1) % n]))
    }

    #[test]
    fn clique_complex_examples() {
        let triangle = clique_complex(&[0, 1, 2], &[(0, 1), (1, 2), (0, 2)], 2);
        assert_eq!(triangle.count(0), 3);
        assert_eq!(triangle.count(1), 3);
        assert_eq!(triangle.count(2), 1);

        let square = clique_complex(&[0, 1, 2, 3], &[(0, 1), (1, 2), (2, 3), (0, 3)], 2);
        assert_eq!(square.count(2), 0);
        assert_eq!(homology(&square, 1, 101).betti, 1);

        // K4 has four 3-cliques and contractible 2-skeleton in degree 1.
        let k4 = clique_complex(
            &[0, 1, 2, 3],
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
            2,
        );
        assert_eq!(k4.count(2), 4);
        assert_eq!(homology(&k4, 1, 101).betti, 0);
    }

    #[test]
    fn boundary_of_boundary_vanishes() {
        let k4 = clique_complex(
            &[0, 1, 2, 3],
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
            3,
        );
        for p in [2u64, 101] {
            for k in 1..=2 {
                let d1 = boundary_matrix(&k4, k, p);
                let d2 = boundary_matrix(&k4, k + 1, p);
                assert!(d1.matmul(&d2).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn edge_boundary_convention() {
        let e = SimplicialComplex::from_simplices([[3u32, 7]]);
        let d1 = boundary_matrix(&e, 1, 101);
        // Column is e_v - e_u for u < v, rows over sorted vertices [3, 7].
        assert_eq!(d1[(0, 0)], 100);
        assert_eq!(d1[(1, 0)], 1);
    }

    #[test]
    fn circle_homology() {
        let c = circle(3);
        assert_eq!(boundary_matrix(&c, 1, 101).rank(), 2);
        assert_eq!(homology(&c, 0, 101).betti, 1);
        let h1 = homology(&c, 1, 101);
        assert_eq!(h1.betti, 1);
        // The representative is a genuine cycle.
        let d1 = boundary_matrix(&c, 1, 101);
        let rep = &h1.cycle_representatives[0];
        for r in 0..d1.rows() {
            let s: u64 = (0..d1.cols()).map(|c2| d1[(r, c2)] * rep[c2] % 101).sum();
            assert_eq!(s % 101, 0);
        }
    }

    #[test]
    fn octahedron_is_a_sphere() {
        // Vertices 0/1 poles ±x, 2/3 ±y, 4/5 ±z: 8 faces, no diagonals.
        let faces: Vec<[u32; 3]> = vec![
            [0, 2, 4], [0, 2, 5], [0, 3, 4], [0, 3, 5],
            [1, 2, 4], [1, 2, 5], [1, 3, 4], [1, 3, 5],
        ];
        let oct = SimplicialComplex::from_simplices(faces);
        for p in [2u64, 101] {
            assert_eq!(homology(&oct, 0, p).betti, 1);
            assert_eq!(homology(&oct, 1, p).betti, 0);
            assert_eq!(homology(&oct, 2, p).betti, 1);
            // Euler characteristic cross-check: 2 = 1 - 0 + 1.
            assert_eq!(oct.euler_characteristic(), 2);
        }
    }

    #[test]
    fn expressing_a_boundary_gives_zero() {
        let triangle = clique_complex(&[0, 1, 2], &[(0, 1), (1, 2), (0, 2)], 2);
        let h1 = homology(&triangle, 1, 101);
        assert_eq!(h1.betti, 0);
        let d2 = boundary_matrix(&triangle, 2, 101);
        let boundary = d2.column(0);
        assert_eq!(h1.express(&boundary), Some(vec![]));
    }

    #[test]
    fn induced_map_identity_and_collapse() {
        let c = circle(4);
        let h = homology(&c, 1, 101);
        let id = SimplicialMap::identity(&c);
        let m = induced_map(&id, &c, &c, 1, 101, &h, &h).unwrap();
        assert!(m.is_identity());

        // Collapsing the circle into a filled disk kills H_1.
        let disk = clique_complex(&[0, 1, 2, 3], &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)], 2);
        let hd = homology(&disk, 1, 101);
        assert_eq!(hd.betti, 0);
        let incl = SimplicialMap::identity(&c);
        let m = induced_map(&incl, &c, &disk, 1, 101, &h, &hd).unwrap();
        assert_eq!(m.rows(), 0);
        assert_eq!(m.cols(), 1);
    }

    #[test]
    fn induced_map_rejects_non_simplicial() {
        let c = circle(4);
        let target = SimplicialComplex::from_simplices([[0u32, 1]]);
        let f = SimplicialMap::from_fn(&c, |v| v % 3); // sends 3 -> 0; image of edge {2,3} is {2,0}, absent
        let h = homology(&c, 1, 101);
        let ht = homology(&target, 1, 101);
        assert!(induced_map(&f, &c, &target, 1, 101, &h, &ht).is_err());
    }

    #[test]
    fn functoriality_on_a_composable_pair() {
        // circle(3) -> circle(3) with rotated labels -> filled triangle.
        let c = circle(3);
        let rot = SimplicialMap::from_fn(&c, |v| (v + 1) % 3);
        let filled = clique_complex(&[0, 1, 2], &[(0, 1), (1, 2), (0, 2)], 2);
        let incl = SimplicialMap::identity(&c);
        let h = homology(&c, 1, 101);
        let hf = homology(&filled, 1, 101);
        let m_rot = induced_map(&rot, &c, &c, 1, 101, &h, &h).unwrap();
        let m_incl = induced_map(&incl, &c, &filled, 1, 101, &h, &hf).unwrap();
        let composite_map = SimplicialMap {
            assignment: rot.assignment.iter().map(|(&v, &w)| (v, incl.assignment[&w])).collect(),
        };
        let m_comp = induced_map(&composite_map, &c, &filled, 1, 101, &h, &hf).unwrap();
        assert_eq!(m_comp, m_incl.matmul(&m_rot).unwrap());
    }

    #[test]
    fn diagram_of_identities_induces_identities() {
        let quiver = Arc::new(a_n_quiver(3, &Orientation::forward(2)));
        let c = circle(5);
        let diagram = ComplexDiagram {
            shape: quiver,
            spaces: vec![c.clone(), c.clone(), c.clone()],
            maps: vec![SimplicialMap::identity(&c), SimplicialMap::identity(&c)],
        };
        diagram.validate().unwrap();
        let rep = diagram.homology_representation(1, 101);
        assert_eq!(rep.dims(), &[1, 1, 1]);
        assert!(rep.maps().iter().all(FieldMatrix::is_identity));
    }
}
