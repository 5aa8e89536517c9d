//! JSON and CSV codecs for the core types.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use indecomp_core::complexes::{ComplexDiagram, SimplicialComplex, SimplicialMap};
use indecomp_core::exactalg::FieldMatrix;
use indecomp_core::intervals::{HomTable, IntervalDecomposition};
use indecomp_core::quiver::{BoundQuiver, Representation};
use indecomp_core::vrtiles::PointCloud;

#[derive(Debug)]
pub enum IoError {
    Json(serde_json::Error),
    Invalid(String),
}

impl std::fmt::Display for IoError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            IoError::Json(e) => write!(f, "malformed JSON: {e}"),
            IoError::Invalid(msg) => write!(f, "invalid input: {msg}"),
        }
    }
}

impl std::error::Error for IoError {}

impl From<serde_json::Error> for IoError {
    fn from(e: serde_json::Error) -> Self {
        IoError::Json(e)
    }
}

fn invalid(msg: impl Into<String>) -> IoError {
    IoError::Invalid(msg.into())
}

// --------------------------------------------------------------------------
// Matrices
// --------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct MatrixJson {
    pub p: u64,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<u64>>,
}

pub fn matrix_to_json(m: &FieldMatrix) -> MatrixJson {
    MatrixJson {
        p: m.modulus(),
        rows: m.rows(),
        cols: m.cols(),
        entries: (0..m.rows())
            .map(|r| (0..m.cols()).map(|c| m[(r, c)]).collect())
            .collect(),
    }
}

pub fn matrix_from_json(j: &MatrixJson) -> Result<FieldMatrix, IoError> {
    if j.p < 2 {
        return Err(invalid("modulus must be at least 2"));
    }
    if j.entries.len() != j.rows || j.entries.iter().any(|row| row.len() != j.cols) {
        return Err(invalid("entry grid does not match declared shape"));
    }
    if j.entries.iter().flatten().any(|&e| e >= j.p) {
        return Err(invalid("entries must lie in [0, p)"));
    }
    Ok(FieldMatrix::from_fn(j.rows, j.cols, j.p, |r, c| j.entries[r][c]))
}

// --------------------------------------------------------------------------
// Quivers and representations
// --------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct ArrowJson {
    pub id: String,
    pub src: String,
    pub dst: String,
}

#[derive(Serialize, Deserialize)]
pub struct QuiverJson {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowJson>,
    pub relations: Vec<(Vec<String>, Vec<String>)>,
}

#[derive(Serialize, Deserialize)]
pub struct RepresentationJson {
    pub p: u64,
    pub quiver: QuiverJson,
    pub dims: BTreeMap<String, usize>,
    pub maps: BTreeMap<String, MatrixJson>,
}

pub fn quiver_to_json(q: &BoundQuiver) -> QuiverJson {
    QuiverJson {
        vertices: q.vertex_names().to_vec(),
        arrows: q
            .arrows()
            .iter()
            .map(|a| ArrowJson {
                id: a.id.clone(),
                src: q.vertex_names()[a.src].clone(),
                dst: q.vertex_names()[a.dst].clone(),
            })
            .collect(),
        relations: q
            .relations()
            .iter()
            .map(|r| {
                let name = |path: &[usize]| {
                    path.iter().map(|&i| q.arrows()[i].id.clone()).collect::<Vec<_>>()
                };
                (name(&r.lhs), name(&r.rhs))
            })
            .collect(),
    }
}

pub fn quiver_from_json(j: &QuiverJson) -> Result<BoundQuiver, IoError> {
    BoundQuiver::new(
        j.vertices.clone(),
        j.arrows.iter().map(|a| (a.id.clone(), a.src.clone(), a.dst.clone())).collect(),
        j.relations.clone(),
    )
    .map_err(|e| invalid(format!("bad quiver: {e}")))
}

pub fn representation_to_json(rep: &Representation) -> RepresentationJson {
    let q = rep.quiver();
    RepresentationJson {
        p: rep.modulus(),
        quiver: quiver_to_json(q),
        dims: q
            .vertex_names()
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), rep.dims()[i]))
            .collect(),
        maps: q
            .arrows()
            .iter()
            .enumerate()
            .map(|(i, a)| (a.id.clone(), matrix_to_json(&rep.maps()[i])))
            .collect(),
    }
}

pub fn representation_from_json(j: &RepresentationJson) -> Result<Representation, IoError> {
    let quiver = Arc::new(quiver_from_json(&j.quiver)?);
    let dims: Vec<usize> = quiver
        .vertex_names()
        .iter()
        .map(|v| j.dims.get(v).copied().ok_or_else(|| invalid(format!("missing dim for {v}"))))
        .collect::<Result<_, _>>()?;
    let maps: Vec<FieldMatrix> = quiver
        .arrows()
        .iter()
        .map(|a| {
            let mj = j
                .maps
                .get(&a.id)
                .ok_or_else(|| invalid(format!("missing map for arrow {}", a.id)))?;
            if mj.p != j.p {
                return Err(invalid(format!("matrix modulus differs on arrow {}", a.id)));
            }
            matrix_from_json(mj)
        })
        .collect::<Result<_, _>>()?;
    Representation::new(quiver, j.p, dims, maps)
        .map_err(|e| invalid(format!("bad representation: {e}")))
}

// --------------------------------------------------------------------------
// Complexes and diagrams
// --------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct ComplexJson {
    pub vertices: Vec<u32>,
    /// Keyed by dimension (as a string for JSON friendliness); dimension 0
    /// repeats the vertex list as singletons.
    pub simplices: BTreeMap<String, Vec<Vec<u32>>>,
}

pub fn complex_to_json(c: &SimplicialComplex) -> ComplexJson {
    let mut simplices = BTreeMap::new();
    if let Some(top) = c.dim() {
        for k in 0..=top {
            simplices.insert(k.to_string(), c.simplices_of_dim(k));
        }
    }
    ComplexJson { vertices: c.vertices(), simplices }
}

pub fn complex_from_json(j: &ComplexJson) -> Result<SimplicialComplex, IoError> {
    let mut all: Vec<Vec<u32>> = j.vertices.iter().map(|&v| vec![v]).collect();
    for (k, list) in &j.simplices {
        let k: usize = k.parse().map_err(|_| invalid("non-numeric dimension key"))?;
        for s in list {
            if s.len() != k + 1 {
                return Err(invalid("simplex size does not match its dimension key"));
            }
            all.push(s.clone());
        }
    }
    Ok(SimplicialComplex::from_simplices(all))
}

#[derive(Serialize, Deserialize)]
pub struct DiagramJson {
    pub shape: QuiverJson,
    pub spaces: Vec<ComplexJson>,
    /// Vertex assignments per arrow, in the shape's arrow order.
    pub maps: Vec<BTreeMap<u32, u32>>,
}

pub fn diagram_to_json(d: &ComplexDiagram) -> DiagramJson {
    DiagramJson {
        shape: quiver_to_json(&d.shape),
        spaces: d.spaces.iter().map(complex_to_json).collect(),
        maps: d.maps.iter().map(|m| m.assignment.clone().into_iter().collect()).collect(),
    }
}

pub fn diagram_from_json(j: &DiagramJson) -> Result<ComplexDiagram, IoError> {
    let shape = Arc::new(quiver_from_json(&j.shape)?);
    if j.spaces.len() != shape.vertex_count() || j.maps.len() != shape.arrow_count() {
        return Err(invalid("diagram shape does not match spaces/maps"));
    }
    let spaces = j.spaces.iter().map(complex_from_json).collect::<Result<Vec<_>, _>>()?;
    let maps = j
        .maps
        .iter()
        .map(|m| SimplicialMap { assignment: m.clone().into_iter().collect() })
        .collect();
    let diagram = ComplexDiagram { shape, spaces, maps };
    diagram
        .validate()
        .map_err(|e| invalid(format!("diagram does not validate: {e}")))?;
    Ok(diagram)
}

// --------------------------------------------------------------------------
// Hom tables and decompositions
// --------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct HomTableJson {
    pub n: usize,
    pub tau: String,
    pub entries: Vec<HomEntryJson>,
}

#[derive(Serialize, Deserialize)]
pub struct HomEntryJson {
    pub from: (usize, usize),
    pub to: (usize, usize),
    pub dim: u8,
}

pub fn hom_table_to_json(t: &HomTable) -> HomTableJson {
    HomTableJson {
        n: t.n,
        tau: t.tau.to_string(),
        entries: t
            .entries()
            .map(|(&(from, to), &dim)| HomEntryJson { from, to, dim })
            .collect(),
    }
}

/// Renders the ⊵ table as a text matrix: rows are sources, columns targets.
pub fn hom_table_to_text(t: &HomTable) -> String {
    let intervals = indecomp_core::intervals::all_intervals(t.n);
    let label = |&(a, b): &(usize, usize)| format!("[{a},{b}]");
    let width = intervals.iter().map(|iv| label(iv).len()).max().unwrap_or(1) + 1;
    let mut out = String::new();
    let _ = write!(out, "{:>width$}", "");
    for iv in &intervals {
        let _ = write!(out, "{:>width$}", label(iv));
    }
    out.push('\n');
    for from in &intervals {
        let _ = write!(out, "{:>width$}", label(from));
        for to in &intervals {
            let _ = write!(out, "{:>width$}", t.entry(*from, *to));
        }
        out.push('\n');
    }
    out
}

#[derive(Serialize, Deserialize)]
pub struct DecompositionJson {
    pub summands: Vec<SummandJson>,
}

#[derive(Serialize, Deserialize)]
pub struct SummandJson {
    pub a: usize,
    pub b: usize,
    pub multiplicity: usize,
}

pub fn decomposition_to_json(d: &IntervalDecomposition) -> DecompositionJson {
    DecompositionJson {
        summands: d
            .multiplicities
            .iter()
            .map(|(&(a, b), &m)| SummandJson { a, b, multiplicity: m })
            .collect(),
    }
}

// --------------------------------------------------------------------------
// Point clouds
// --------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct PointCloudJson {
    pub row: String,
    pub d: usize,
    pub points: Vec<PointJson>,
}

#[derive(Serialize, Deserialize)]
pub struct PointJson {
    pub id: usize,
    /// Coordinates as exact `numerator/denominator` strings.
    pub x: String,
    pub y: String,
    pub z: String,
    pub provenance: Vec<String>,
}

fn rational_string(r: &indecomp_core::Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn point_cloud_to_json(cloud: &PointCloud) -> PointCloudJson {
    PointCloudJson {
        row: match cloud.row {
            indecomp_core::vrtiles::Row::Upper => "upper".into(),
            indecomp_core::vrtiles::Row::Lower => "lower".into(),
        },
        d: cloud.d,
        points: cloud
            .points
            .iter()
            .enumerate()
            .map(|(id, p)| PointJson {
                id,
                x: rational_string(&p.x),
                y: rational_string(&p.y),
                z: rational_string(&p.z),
                provenance: cloud.provenance[id]
                    .iter()
                    .map(|(slot, tile, idx)| format!("{slot}:{tile}:{idx}"))
                    .collect(),
            })
            .collect(),
    }
}

/// CSV export: `id,x_num,x_den,y_num,y_den,z_num,z_den,provenance`.
pub fn point_cloud_to_csv(cloud: &PointCloud) -> String {
    let mut out = String::from("id,x_num,x_den,y_num,y_den,z_num,z_den,provenance\n");
    for (id, p) in cloud.points.iter().enumerate() {
        let prov = cloud.provenance[id]
            .iter()
            .map(|(slot, tile, idx)| format!("{slot}:{tile}:{idx}"))
            .collect::<Vec<_>>()
            .join(";");
        let _ = writeln!(
            out,
            "{id},{},{},{},{},{},{},{prov}",
            p.x.numer(),
            p.x.denom(),
            p.y.numer(),
            p.y.denom(),
            p.z.numer(),
            p.z.denom(),
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use indecomp_core::families::build_m_cl5;
    use indecomp_core::vrtiles::{assemble, Row};

    #[test]
    fn representation_roundtrip() {
        let m = build_m_cl5(2, 1, 101);
        let j = representation_to_json(&m);
        let text = serde_json::to_string(&j).unwrap();
        let back: RepresentationJson = serde_json::from_str(&text).unwrap();
        let rep = representation_from_json(&back).unwrap();
        assert_eq!(rep, m);
    }

    #[test]
    fn matrix_validation() {
        let bad = MatrixJson { p: 5, rows: 1, cols: 1, entries: vec![vec![7]] };
        assert!(matrix_from_json(&bad).is_err());
        let ragged = MatrixJson { p: 5, rows: 2, cols: 2, entries: vec![vec![1, 2]] };
        assert!(matrix_from_json(&ragged).is_err());
    }

    #[test]
    fn complex_roundtrip() {
        let c = indecomp_core::complexes::clique_complex(
            &[0, 1, 2, 3],
            &[(0, 1), (1, 2), (0, 2), (2, 3)],
            2,
        );
        let j = complex_to_json(&c);
        let back = complex_from_json(&j).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn cloud_csv_has_exact_rationals() {
        let cloud = assemble(Row::Upper, 1);
        let csv = point_cloud_to_csv(&cloud);
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "id,x_num,x_den,y_num,y_den,z_num,z_den,provenance"
        );
        assert_eq!(lines.count(), cloud.len());
        // Tile A's interior point (1.86, 2.5) appears reduced: 93/50.
        assert!(csv.contains("93,50"));
    }
}
