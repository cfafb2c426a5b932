//! Classification of connected quivers into the shapes L, Δ, V, Λ and the
//! resulting predictions for when the span of modules with many summands is
//! an ideal or a subring of the Hall algebra.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::Quiver;
use crate::error::{HallError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "shape")]
pub enum Shape {
    /// Linearly oriented path on `m` vertices.
    L { m: usize },
    /// Oriented cycle on `n + 1` vertices; `Delta { n: 0 }` is a loop.
    Delta { n: usize },
    /// Path on `m` vertices whose only sink is the interior vertex at position `x`.
    V { m: usize, x: usize },
    /// Path on `n` vertices whose only source is the interior vertex at position `y`.
    Lambda { n: usize, y: usize },
    /// Anything else. The reason names the first violated structural predicate.
    Other { reason: String },
}

impl Shape {
    pub fn is_l_or_delta(&self) -> bool {
        matches!(self, Shape::L { .. } | Shape::Delta { .. })
    }

    pub fn is_v(&self) -> bool {
        matches!(self, Shape::V { .. })
    }

    pub fn is_lambda(&self) -> bool {
        matches!(self, Shape::Lambda { .. })
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::L { m } => write!(f, "L_{m}"),
            Shape::Delta { n } => write!(f, "Δ_{n}"),
            Shape::V { m, x } => write!(f, "V_{{{m},{x}}}"),
            Shape::Lambda { n, y } => write!(f, "Λ_{{{n},{y}}}"),
            Shape::Other { reason } => write!(f, "other ({reason})"),
        }
    }
}

/// Shape of one component together with the vertex order it was read in:
/// along the arrows for L, around the cycle (from the first declared vertex)
/// for Δ, and from the endpoint declared first for V, Λ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentShape {
    #[serde(flatten)]
    pub shape: Shape,
    pub vertex_order: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeVerdict {
    pub components: Vec<ComponentShape>,
    /// D_r is an ideal for every r >= 1.
    pub ideal_all_r: bool,
    /// D_1 is a subring.
    pub subring_r1: bool,
    /// D_r is a subring for every r >= 1 (equivalently, for some r >= 2).
    pub subring_all_r: bool,
}

pub fn classify_shape(component: &Quiver) -> Result<ComponentShape> {
    if !component.is_connected() {
        return Err(HallError::invalid(format!(
            "classify_shape needs a connected quiver; {} has {} components",
            component.name(),
            component.component_vertex_sets().len()
        )));
    }
    let n = component.vertex_count();
    let m = component.arrow_count();
    let ids = component.vertices();
    let other = |reason: String| ComponentShape {
        shape: Shape::Other { reason },
        vertex_order: ids.to_vec(),
    };

    let mut degree = vec![0usize; n];
    let mut indeg = vec![0usize; n];
    let mut outdeg = vec![0usize; n];
    for a in component.arrows() {
        degree[a.src] += 1;
        degree[a.tgt] += 1;
        outdeg[a.src] += 1;
        indeg[a.tgt] += 1;
    }

    // a single oriented cycle, including a loop and a 2-cycle
    if m == n && m > 0 && (0..n).all(|v| indeg[v] == 1 && outdeg[v] == 1) {
        let mut order = vec![0usize];
        let mut cur = 0;
        loop {
            let next = component
                .arrows()
                .iter()
                .find(|a| a.src == cur)
                .expect("out-degree is one")
                .tgt;
            if next == 0 {
                break;
            }
            order.push(next);
            cur = next;
        }
        return Ok(ComponentShape {
            shape: Shape::Delta { n: n - 1 },
            vertex_order: order.into_iter().map(|v| ids[v].clone()).collect(),
        });
    }

    if let Some(a) = component.arrows().iter().find(|a| a.is_loop()) {
        return Ok(other(format!(
            "loop at {} together with other arrows",
            ids[a.src]
        )));
    }
    for (i, a) in component.arrows().iter().enumerate() {
        if component.arrows()[i + 1..]
            .iter()
            .any(|b| b.src == a.src && b.tgt == a.tgt)
        {
            return Ok(other(format!(
                "parallel arrows {} -> {}",
                ids[a.src], ids[a.tgt]
            )));
        }
    }
    if let Some(v) = (0..n).find(|&v| degree[v] >= 3) {
        return Ok(other(format!("branch vertex {}", ids[v])));
    }
    if m >= n {
        return Ok(other("cycle that is not oriented".to_string()));
    }

    // a path: walk it from the endpoint declared first
    if n == 1 {
        return Ok(ComponentShape {
            shape: Shape::L { m: 1 },
            vertex_order: ids.to_vec(),
        });
    }
    let start = (0..n)
        .find(|&v| degree[v] == 1)
        .expect("a path has an endpoint");
    let mut order = vec![start];
    let mut forward = Vec::with_capacity(n - 1);
    let mut used = vec![false; m];
    let mut cur = start;
    while order.len() < n {
        let (k, a) = component
            .arrows()
            .iter()
            .enumerate()
            .find(|(k, a)| !used[*k] && (a.src == cur || a.tgt == cur))
            .expect("the path continues");
        used[k] = true;
        let next = if a.src == cur { a.tgt } else { a.src };
        forward.push(a.src == cur);
        order.push(next);
        cur = next;
    }

    let sinks: Vec<usize> = (0..n).filter(|&i| outdeg[order[i]] == 0).collect();
    let sources: Vec<usize> = (0..n).filter(|&i| indeg[order[i]] == 0).collect();
    let named = |order: &[usize]| order.iter().map(|&v| ids[v].clone()).collect::<Vec<_>>();

    if forward.iter().all(|&f| f) {
        return Ok(ComponentShape {
            shape: Shape::L { m: n },
            vertex_order: named(&order),
        });
    }
    if forward.iter().all(|&f| !f) {
        let rev: Vec<usize> = order.iter().rev().copied().collect();
        return Ok(ComponentShape {
            shape: Shape::L { m: n },
            vertex_order: named(&rev),
        });
    }
    if sinks.len() == 1 && sinks[0] > 0 && sinks[0] < n - 1 {
        return Ok(ComponentShape {
            shape: Shape::V {
                m: n,
                x: sinks[0] + 1,
            },
            vertex_order: named(&order),
        });
    }
    if sources.len() == 1 && sources[0] > 0 && sources[0] < n - 1 {
        return Ok(ComponentShape {
            shape: Shape::Lambda {
                n,
                y: sources[0] + 1,
            },
            vertex_order: named(&order),
        });
    }
    Ok(other("≥2 sinks and ≥2 sources".to_string()))
}

/// Applies the classification of quivers whose D_r is an ideal or subring to
/// every connected component.
pub fn predict(q: &Quiver) -> ShapeVerdict {
    let components: Vec<ComponentShape> = q
        .connected_components()
        .iter()
        .map(|c| classify_shape(c).expect("components are connected"))
        .collect();
    let all = |f: &dyn Fn(&Shape) -> bool| components.iter().all(|c| f(&c.shape));
    let ideal_all_r = all(&|s| s.is_l_or_delta());
    let subring_r1 = all(&|s| s.is_l_or_delta() || s.is_v() || s.is_lambda());
    let subring_all_r =
        all(&|s| s.is_l_or_delta() || s.is_v()) || all(&|s| s.is_l_or_delta() || s.is_lambda());
    ShapeVerdict {
        components,
        ideal_all_r,
        subring_r1,
        subring_all_r,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::parse_quiver;

    fn shape(text: &str) -> Shape {
        classify_shape(&parse_quiver(text).unwrap()).unwrap().shape
    }

    #[test]
    fn the_four_shapes_and_a_zigzag() {
        assert_eq!(
            shape("quiver l5\nvertex 1 2 3 4 5\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 4\narrow d: 4 -> 5"),
            Shape::L { m: 5 }
        );
        assert_eq!(
            shape("quiver c\nvertex 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 1"),
            Shape::Delta { n: 2 }
        );
        assert_eq!(
            shape("quiver v\nvertex 1 2 3 4 5\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 4 -> 3\narrow d: 5 -> 4"),
            Shape::V { m: 5, x: 3 }
        );
        assert_eq!(
            shape("quiver z\nvertex 1 2 3 4\narrow a: 2 -> 1\narrow b: 2 -> 3\narrow c: 4 -> 3"),
            Shape::Other {
                reason: "≥2 sinks and ≥2 sources".into()
            }
        );
    }

    #[test]
    fn degenerate_paths_and_cycles() {
        assert_eq!(shape("quiver p\nvertex 1"), Shape::L { m: 1 });
        assert_eq!(
            shape("quiver p\nvertex 1 2\narrow a: 2 -> 1"),
            Shape::L { m: 2 }
        );
        assert_eq!(
            shape("quiver p\nvertex 1\narrow x: 1 -> 1"),
            Shape::Delta { n: 0 }
        );
        assert_eq!(
            shape("quiver p\nvertex 1 2\narrow a: 1 -> 2\narrow b: 2 -> 1"),
            Shape::Delta { n: 1 }
        );
        assert!(matches!(
            shape("quiver k\nvertex 1 2\narrow a: 1 -> 2\narrow b: 1 -> 2"),
            Shape::Other { .. }
        ));
        assert!(matches!(
            shape("quiver q8\nvertex 1\narrow x: 1 -> 1\narrow y: 1 -> 1"),
            Shape::Other { .. }
        ));
    }

    #[test]
    fn l_vertex_order_follows_arrows() {
        let q = parse_quiver("quiver l\nvertex 1 2 3\narrow a: 3 -> 2\narrow b: 2 -> 1").unwrap();
        let c = classify_shape(&q).unwrap();
        assert_eq!(c.shape, Shape::L { m: 3 });
        assert_eq!(c.vertex_order, vec!["3", "2", "1"]);
    }

    #[test]
    fn disconnected_input_is_an_error() {
        let q = parse_quiver("quiver u\nvertex 1 2").unwrap();
        assert!(classify_shape(&q).is_err());
        assert!(classify_shape(&Quiver::empty("e")).is_err());
    }

    #[test]
    fn predictions() {
        let q = parse_quiver(
            "quiver u\nvertex 0 1 2 3\narrow x: 0 -> 0\narrow a: 1 -> 2\narrow b: 2 -> 3",
        )
        .unwrap();
        let v = predict(&q);
        assert!(v.ideal_all_r && v.subring_r1 && v.subring_all_r);

        let vl = parse_quiver(
            "quiver vl\nvertex 1 2 3 4 5 6 7 8 9\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 4 -> 3\narrow d: 5 -> 4\n\
             arrow e: 7 -> 6\narrow f: 7 -> 8\narrow g: 8 -> 9",
        )
        .unwrap();
        let v = predict(&vl);
        assert_eq!(
            (v.ideal_all_r, v.subring_r1, v.subring_all_r),
            (false, true, false)
        );

        let k = parse_quiver("quiver k\nvertex 1 2\narrow a: 1 -> 2\narrow b: 1 -> 2").unwrap();
        let v = predict(&k);
        assert_eq!(
            (v.ideal_all_r, v.subring_r1, v.subring_all_r),
            (false, false, false)
        );

        let e = predict(&Quiver::empty("e"));
        assert!(e.components.is_empty() && e.ideal_all_r);
    }
}
