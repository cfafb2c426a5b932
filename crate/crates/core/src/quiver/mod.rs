//! Quivers: the data model, the `.quiver` DSL, and the shape classifier.
//!
//! Vertices are kept in declaration order and are addressed internally by
//! index; arrows likewise. Loops and parallel arrows are allowed.

mod dsl;
mod shape;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{HallError, Result};

pub use dsl::{parse_quiver, ParseError, ParseErrorKind};
pub use shape::{classify_shape, predict, ComponentShape, Shape, ShapeVerdict};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub label: String,
    pub src: usize,
    pub tgt: usize,
}

impl Arrow {
    pub fn is_loop(&self) -> bool {
        self.src == self.tgt
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    name: String,
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl fmt::Debug for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quiver({}: ", self.name)?;
        let arrows: Vec<String> = self
            .arrows
            .iter()
            .map(|a| {
                format!(
                    "{}:{}->{}",
                    a.label, self.vertices[a.src], self.vertices[a.tgt]
                )
            })
            .collect();
        write!(
            f,
            "[{}] {{{}}})",
            self.vertices.join(" "),
            arrows.join(", ")
        )
    }
}

/// Canonical JSON form of a quiver.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverJson {
    pub name: String,
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowJson {
    pub label: String,
    pub src: String,
    pub tgt: String,
}

pub(crate) fn is_identifier(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric())
}

impl Quiver {
    /// Builds a quiver from vertex ids and `(label, src, tgt)` triples.
    pub fn new<S: AsRef<str>>(
        name: &str,
        vertices: &[S],
        arrows: &[(&str, &str, &str)],
    ) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let arrows = arrows
            .iter()
            .map(|(l, s, t)| (l.to_string(), s.to_string(), t.to_string()))
            .collect::<Vec<_>>();
        Quiver::from_parts(name.to_string(), vertices, arrows)
    }

    pub(crate) fn from_parts(
        name: String,
        vertices: Vec<String>,
        arrows: Vec<(String, String, String)>,
    ) -> Result<Self> {
        // derived names (`opposite`, components) may carry `_` or `.`
        if !name
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '.')
        {
            return Err(HallError::invalid(format!("bad quiver name {name:?}")));
        }
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if !is_identifier(v) {
                return Err(HallError::invalid(format!("bad vertex id {v:?}")));
            }
            if index.insert(v.clone(), i).is_some() {
                return Err(HallError::invalid(format!("duplicate vertex {v}")));
            }
        }
        let mut labels = HashMap::new();
        let mut out = Vec::with_capacity(arrows.len());
        for (label, src, tgt) in arrows {
            if !is_identifier(&label) {
                return Err(HallError::invalid(format!("bad arrow label {label:?}")));
            }
            if labels.insert(label.clone(), ()).is_some() {
                return Err(HallError::invalid(format!("duplicate arrow label {label}")));
            }
            let s = *index
                .get(&src)
                .ok_or_else(|| HallError::invalid(format!("unknown vertex {src}")))?;
            let t = *index
                .get(&tgt)
                .ok_or_else(|| HallError::invalid(format!("unknown vertex {tgt}")))?;
            out.push(Arrow {
                label,
                src: s,
                tgt: t,
            });
        }
        Ok(Quiver {
            name,
            vertices,
            arrows: out,
        })
    }

    pub fn empty(name: &str) -> Self {
        Quiver {
            name: name.to_string(),
            vertices: Vec::new(),
            arrows: Vec::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == id)
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = (usize, &Arrow)> {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.src == v)
    }

    pub fn arrows_to(&self, v: usize) -> impl Iterator<Item = (usize, &Arrow)> {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.tgt == v)
    }

    /// Same underlying graph, every arrow reversed, labels kept. The name
    /// toggles an `_op` suffix so that taking the opposite twice is the identity.
    pub fn opposite(&self) -> Quiver {
        let name = match self.name.strip_suffix("_op") {
            Some(base) => base.to_string(),
            None => format!("{}_op", self.name),
        };
        Quiver {
            name,
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    label: a.label.clone(),
                    src: a.tgt,
                    tgt: a.src,
                })
                .collect(),
        }
    }

    /// Vertex sets of the connected components of the underlying graph,
    /// ordered by their first vertex in declaration order.
    pub fn component_vertex_sets(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut y = x;
            while parent[y] != r {
                let next = parent[y];
                parent[y] = r;
                y = next;
            }
            r
        }
        for a in &self.arrows {
            let (ra, rb) = (find(&mut parent, a.src), find(&mut parent, a.tgt));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut slot: HashMap<usize, usize> = HashMap::new();
        for v in 0..n {
            let r = find(&mut parent, v);
            let k = *slot.entry(r).or_insert_with(|| {
                groups.push(Vec::new());
                groups.len() - 1
            });
            groups[k].push(v);
        }
        groups
    }

    pub fn connected_components(&self) -> Vec<Quiver> {
        let sets = self.component_vertex_sets();
        if sets.len() == 1 {
            return vec![self.clone()];
        }
        sets.iter()
            .enumerate()
            .map(|(k, set)| {
                self.full_subquiver(set)
                    .with_name(&format!("{}.{}", self.name, k + 1))
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_vertex_sets().len() == 1
    }

    /// The full subquiver on the given vertices (in the given order).
    pub fn full_subquiver(&self, vertex_indices: &[usize]) -> Quiver {
        let mut map = vec![usize::MAX; self.vertices.len()];
        for (new, &old) in vertex_indices.iter().enumerate() {
            map[old] = new;
        }
        Quiver {
            name: self.name.clone(),
            vertices: vertex_indices
                .iter()
                .map(|&v| self.vertices[v].clone())
                .collect(),
            arrows: self
                .arrows
                .iter()
                .filter(|a| map[a.src] != usize::MAX && map[a.tgt] != usize::MAX)
                .map(|a| Arrow {
                    label: a.label.clone(),
                    src: map[a.src],
                    tgt: map[a.tgt],
                })
                .collect(),
        }
    }

    /// Whether the quiver has an oriented cycle (loops included).
    pub fn has_oriented_cycle(&self) -> bool {
        // Kahn's algorithm
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.tgt] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for a in self.arrows.iter().filter(|a| a.src == v) {
                indeg[a.tgt] -= 1;
                if indeg[a.tgt] == 0 {
                    stack.push(a.tgt);
                }
            }
        }
        seen < n
    }

    pub fn is_acyclic(&self) -> bool {
        !self.has_oriented_cycle()
    }

    /// Paths of length `1..=max_len` as arrow-index sequences in composition
    /// order (first arrow first), enumerated deterministically.
    pub fn paths_up_to(&self, max_len: usize) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = (0..self.arrows.len()).map(|a| vec![a]).collect();
        let mut frontier = out.clone();
        for _ in 1..max_len {
            let mut next = Vec::new();
            for path in &frontier {
                let end = self.arrows[*path.last().expect("paths are nonempty")].tgt;
                for (b, _) in self.arrows_from(end) {
                    let mut p = path.clone();
                    p.push(b);
                    next.push(p);
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    /// All paths (including trivial ones) from `from`, as `(end vertex, arrow
    /// sequence)`. Only meaningful on acyclic quivers.
    pub fn paths_from(&self, from: usize) -> Result<Vec<(usize, Vec<usize>)>> {
        if self.has_oriented_cycle() {
            return Err(HallError::unsupported(
                "paths of a quiver with an oriented cycle are infinite",
            ));
        }
        let mut out = vec![(from, Vec::new())];
        let mut i = 0;
        while i < out.len() {
            let (end, path) = out[i].clone();
            for (b, a) in self.arrows_from(end) {
                let mut p = path.clone();
                p.push(b);
                out.push((a.tgt, p));
            }
            i += 1;
        }
        Ok(out)
    }

    /// All paths ending at `to`, as `(start vertex, arrow sequence)`.
    pub fn paths_to(&self, to: usize) -> Result<Vec<(usize, Vec<usize>)>> {
        let op = self.opposite();
        Ok(op
            .paths_from(to)?
            .into_iter()
            .map(|(start, mut path)| {
                path.reverse();
                (start, path)
            })
            .collect())
    }

    /// Disjoint union; vertex ids and labels must not clash.
    pub fn disjoint_union(&self, other: &Quiver, name: &str) -> Result<Quiver> {
        let mut vertices = self.vertices.clone();
        vertices.extend(other.vertices.iter().cloned());
        let arrows: Vec<(String, String, String)> = self
            .arrow_triples()
            .into_iter()
            .chain(other.arrow_triples())
            .collect();
        Quiver::from_parts(name.to_string(), vertices, arrows)
    }

    fn arrow_triples(&self) -> Vec<(String, String, String)> {
        self.arrows
            .iter()
            .map(|a| {
                (
                    a.label.clone(),
                    self.vertices[a.src].clone(),
                    self.vertices[a.tgt].clone(),
                )
            })
            .collect()
    }

    pub fn to_json_value(&self) -> QuiverJson {
        QuiverJson {
            name: self.name.clone(),
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| ArrowJson {
                    label: a.label.clone(),
                    src: self.vertices[a.src].clone(),
                    tgt: self.vertices[a.tgt].clone(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("quiver JSON serializes")
    }

    pub fn from_json(s: &str) -> Result<Quiver> {
        let j: QuiverJson = serde_json::from_str(s)?;
        Quiver::from_json_value(&j)
    }

    pub fn from_json_value(j: &QuiverJson) -> Result<Quiver> {
        Quiver::from_parts(
            j.name.clone(),
            j.vertices.clone(),
            j.arrows
                .iter()
                .map(|a| (a.label.clone(), a.src.clone(), a.tgt.clone()))
                .collect(),
        )
    }

    /// Renders the quiver in the `.quiver` DSL.
    pub fn to_dsl(&self) -> String {
        let mut s = format!("quiver {}\n", self.name);
        if !self.vertices.is_empty() {
            s.push_str(&format!("vertex {}\n", self.vertices.join(" ")));
        }
        for a in &self.arrows {
            s.push_str(&format!(
                "arrow {}: {} -> {}\n",
                a.label, self.vertices[a.src], self.vertices[a.tgt]
            ));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q6() -> Quiver {
        Quiver::new("Q6", &["1", "2"], &[("l", "1", "1"), ("a", "2", "1")]).unwrap()
    }

    #[test]
    fn opposite_is_an_involution() {
        let q = q6();
        let op = q.opposite();
        assert_eq!(op.name(), "Q6_op");
        assert_eq!(
            op.arrows()[1],
            Arrow {
                label: "a".into(),
                src: 0,
                tgt: 1
            }
        );
        assert_eq!(op.opposite(), q);
    }

    #[test]
    fn opposite_of_a_loop_quiver_is_itself_up_to_name() {
        let q = Quiver::new("loop", &["1"], &[("x", "1", "1")]).unwrap();
        assert_eq!(q.opposite().arrows(), q.arrows());
    }

    #[test]
    fn components() {
        let q = Quiver::new("u", &["1", "2", "3"], &[("a", "1", "2"), ("l", "3", "3")]).unwrap();
        let comps = q.connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].vertices(), &["1", "2"]);
        assert_eq!(comps[1].vertices(), &["3"]);
        assert!(Quiver::empty("e").connected_components().is_empty());
        let d4 = Quiver::new(
            "d4",
            &["1", "2", "3", "4"],
            &[("a", "1", "2"), ("b", "3", "2"), ("c", "4", "2")],
        )
        .unwrap();
        assert_eq!(d4.connected_components().len(), 1);
    }

    #[test]
    fn cycles_and_paths() {
        assert!(q6().has_oriented_cycle());
        let l3 = Quiver::new("L3", &["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap();
        assert!(l3.is_acyclic());
        assert_eq!(l3.paths_from(0).unwrap().len(), 3);
        assert_eq!(l3.paths_to(2).unwrap().len(), 3);
        assert_eq!(l3.paths_up_to(3).len(), 3);
        assert!(q6().paths_from(0).is_err());
    }

    #[test]
    fn json_round_trip() {
        let q = q6();
        let s = q.to_json();
        assert_eq!(
            s,
            r#"{"name":"Q6","vertices":["1","2"],"arrows":[{"label":"l","src":"1","tgt":"1"},{"label":"a","src":"2","tgt":"1"}]}"#
        );
        assert_eq!(Quiver::from_json(&s).unwrap(), q);
    }

    #[test]
    fn dsl_round_trip() {
        let q = q6();
        assert_eq!(parse_quiver(&q.to_dsl()).unwrap(), q);
    }
}
