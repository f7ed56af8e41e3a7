//! Rooted combinatorial planar maps as dart permutations.
//!
//! A map on `n_darts` darts is a pair of permutations: `alpha`, a fixed-point
//! free involution pairing the two darts of each edge, and `nu`, whose cycles
//! are the counterclockwise rotations at the vertices. The group generated by
//! the two must act transitively (the map is connected) and the Euler count
//! `V - E + F = 2` must hold (genus 0). One dart is distinguished as the root.
//!
//! Faces are the cycles of `phi = nu . alpha` (cross the edge, then rotate).
//! Under the counterclockwise convention each `phi`-cycle traverses one face
//! with that face on the left of every dart in the cycle, so the face on the
//! *right* of a dart `d` is the `phi`-cycle containing `alpha(d)`. The root
//! face is the face on the right of the root.

mod builder;
mod canonical;
mod connectivity;
mod enumerate;

pub use builder::MapBuilder;
pub use canonical::{canonical_form, is_asymmetric, CanonicalForm};
pub use connectivity::{edge_connectivity_at_least_3, is_nonseparable};
pub use enumerate::{
    enumerate_bounded_quadrangulations, enumerate_four_valent, enumerate_maps_by_edges,
    for_each_four_valent, ENUMERATION_CAP_FOUR_VALENT, ENUMERATION_CAP_HALF_EDGES,
};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Dart index. Darts of a map with `n_darts` darts are `0..n_darts`.
pub type Dart = u32;

/// A rooted combinatorial map of genus 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootedMap {
    alpha: Vec<Dart>,
    nu: Vec<Dart>,
    root: Dart,
}

/// Faces of a map: each face is one cycle of `phi = nu . alpha`.
#[derive(Debug, Clone)]
pub struct Faces {
    pub cycles: Vec<Vec<Dart>>,
    /// Index into `cycles` of the root face (the face right of the root).
    pub root_face: usize,
}

impl RootedMap {
    /// Builds a map from its permutations, checking every invariant.
    pub fn from_permutations(alpha: Vec<Dart>, nu: Vec<Dart>, root: Dart) -> Result<Self> {
        let m = RootedMap { alpha, nu, root };
        m.check_invariants().map_err(Error::InvalidMap)?;
        Ok(m)
    }

    /// Builds a map that is known valid by construction. Invariants are still
    /// asserted in test builds.
    pub(crate) fn from_parts_unchecked(alpha: Vec<Dart>, nu: Vec<Dart>, root: Dart) -> Self {
        let m = RootedMap { alpha, nu, root };
        debug_assert!(m.check_invariants().is_ok(), "{:?}", m.check_invariants());
        m
    }

    fn check_invariants(&self) -> std::result::Result<(), String> {
        let n = self.alpha.len();
        if n == 0 || n % 2 != 0 {
            return Err(format!("n_darts must be positive and even, got {n}"));
        }
        if self.nu.len() != n {
            return Err("alpha and nu must have equal length".into());
        }
        if (self.root as usize) >= n {
            return Err(format!("root {} out of range", self.root));
        }
        let mut seen = vec![false; n];
        for (d, &img) in self.nu.iter().enumerate() {
            let img = img as usize;
            if img >= n || seen[img] {
                return Err(format!("nu is not a permutation at dart {d}"));
            }
            seen[img] = true;
        }
        for (d, &img) in self.alpha.iter().enumerate() {
            let i = img as usize;
            if i >= n {
                return Err(format!("alpha out of range at dart {d}"));
            }
            if i == d {
                return Err(format!("alpha has a fixed point at dart {d}"));
            }
            if self.alpha[i] as usize != d {
                return Err(format!("alpha is not an involution at dart {d}"));
            }
        }
        // Connectivity under <alpha, nu>.
        let mut reached = vec![false; n];
        let mut stack = vec![0 as Dart];
        reached[0] = true;
        let mut count = 1;
        while let Some(d) = stack.pop() {
            for next in [self.alpha[d as usize], self.nu[d as usize]] {
                if !reached[next as usize] {
                    reached[next as usize] = true;
                    count += 1;
                    stack.push(next);
                }
            }
        }
        if count != n {
            return Err("map is not connected".into());
        }
        let v = cycle_count(&self.nu);
        let f = {
            let phi: Vec<Dart> = (0..n).map(|d| self.phi(d as Dart)).collect();
            cycle_count(&phi)
        };
        let e = n / 2;
        if v + f != e + 2 {
            return Err(format!("genus is not 0: V={v} E={e} F={f}"));
        }
        Ok(())
    }

    pub fn n_darts(&self) -> usize {
        self.alpha.len()
    }

    pub fn n_edges(&self) -> usize {
        self.alpha.len() / 2
    }

    pub fn n_vertices(&self) -> usize {
        cycle_count(&self.nu)
    }

    pub fn n_faces(&self) -> usize {
        self.n_edges() + 2 - self.n_vertices()
    }

    pub fn root(&self) -> Dart {
        self.root
    }

    pub fn alpha(&self, d: Dart) -> Dart {
        self.alpha[d as usize]
    }

    pub fn nu(&self, d: Dart) -> Dart {
        self.nu[d as usize]
    }

    /// Face permutation `phi = nu . alpha`.
    pub fn phi(&self, d: Dart) -> Dart {
        self.nu[self.alpha[d as usize] as usize]
    }

    pub fn alpha_slice(&self) -> &[Dart] {
        &self.alpha
    }

    pub fn nu_slice(&self) -> &[Dart] {
        &self.nu
    }

    /// Inverse rotation, computed in O(n_darts).
    pub fn nu_inverse(&self) -> Vec<Dart> {
        let mut inv = vec![0 as Dart; self.nu.len()];
        for (d, &img) in self.nu.iter().enumerate() {
            inv[img as usize] = d as Dart;
        }
        inv
    }

    /// Same map re-rooted at `d`.
    pub fn re_rooted(&self, d: Dart) -> RootedMap {
        debug_assert!((d as usize) < self.n_darts());
        RootedMap {
            alpha: self.alpha.clone(),
            nu: self.nu.clone(),
            root: d,
        }
    }

    /// Vertex ids in `0..n_vertices`, assigned by minimal dart per nu-cycle
    /// in increasing order of that minimal dart.
    pub fn vertex_ids(&self) -> Vec<u32> {
        let n = self.n_darts();
        let mut id = vec![u32::MAX; n];
        let mut next = 0;
        for d in 0..n {
            if id[d] == u32::MAX {
                let mut x = d;
                loop {
                    id[x] = next;
                    x = self.nu[x] as usize;
                    if x == d {
                        break;
                    }
                }
                next += 1;
            }
        }
        id
    }

    /// True if every vertex has degree exactly 4.
    pub fn is_four_valent(&self) -> bool {
        let n = self.n_darts();
        let mut seen = vec![false; n];
        for d in 0..n {
            if !seen[d] {
                let mut len = 0;
                let mut x = d;
                loop {
                    seen[x] = true;
                    len += 1;
                    x = self.nu[x] as usize;
                    if x == d {
                        break;
                    }
                }
                if len != 4 {
                    return false;
                }
            }
        }
        true
    }

    /// All faces, with the root face flagged.
    pub fn faces(&self) -> Faces {
        let n = self.n_darts();
        let mut face_of = vec![usize::MAX; n];
        let mut cycles = Vec::new();
        for d in 0..n {
            if face_of[d] == usize::MAX {
                let idx = cycles.len();
                let mut cycle = Vec::new();
                let mut x = d;
                loop {
                    face_of[x] = idx;
                    cycle.push(x as Dart);
                    x = self.phi(x as Dart) as usize;
                    if x == d {
                        break;
                    }
                }
                cycles.push(cycle);
            }
        }
        let root_face = face_of[self.alpha(self.root) as usize];
        Faces { cycles, root_face }
    }

    /// Degree of the root face.
    pub fn root_face_degree(&self) -> usize {
        let start = self.alpha(self.root);
        let mut deg = 0;
        let mut x = start;
        loop {
            deg += 1;
            x = self.phi(x);
            if x == start {
                break;
            }
        }
        deg
    }

    /// The planar dual: vertices and faces swap, edges stay. Darts keep their
    /// ids (`nu* = nu . alpha`, `alpha* = alpha`, root unchanged), so the
    /// operation is an exact involution.
    pub fn dual(&self) -> RootedMap {
        let n = self.n_darts();
        let nu_star: Vec<Dart> = (0..n).map(|d| self.phi(d as Dart)).collect();
        RootedMap::from_parts_unchecked(self.alpha.clone(), nu_star, self.root)
    }

    /// The medial map: one 4-valent vertex per edge of `self`, one medial
    /// edge per corner. Dart `2d` of the medial sits at the midpoint of
    /// `edge(d)`; dart `2d+1` is its partner at the midpoint of
    /// `edge(phi(d))`. The medial root is the dart at the root edge's medial
    /// vertex that points along the root with the root face on its right.
    pub fn medial(&self) -> RootedMap {
        let n = self.n_darts();
        let mut phi_inv = vec![0 as Dart; n];
        for d in 0..n {
            phi_inv[self.phi(d as Dart) as usize] = d as Dart;
        }
        let mut alpha = vec![0 as Dart; 2 * n];
        let mut nu = vec![0 as Dart; 2 * n];
        for d in 0..n {
            alpha[2 * d] = (2 * d + 1) as Dart;
            alpha[2 * d + 1] = (2 * d) as Dart;
            nu[2 * d] = 2 * phi_inv[d] + 1;
            nu[2 * d + 1] = 2 * self.alpha(self.phi(d as Dart));
        }
        let root = 2 * phi_inv[self.alpha(self.root) as usize] + 1;
        RootedMap::from_parts_unchecked(alpha, nu, root)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&MapJson::from(self)).expect("map serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: MapJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("map json: {e}")))?;
        raw.try_into()
    }
}

fn cycle_count(perm: &[Dart]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut count = 0;
    for d in 0..perm.len() {
        if !seen[d] {
            count += 1;
            let mut x = d;
            while !seen[x] {
                seen[x] = true;
                x = perm[x] as usize;
            }
        }
    }
    count
}

/// Interchange schema: `{"n_darts": .., "alpha": [..], "nu": [..], "root": ..}`.
#[derive(Serialize, Deserialize)]
pub(crate) struct MapJson {
    pub n_darts: usize,
    pub alpha: Vec<Dart>,
    pub nu: Vec<Dart>,
    pub root: Dart,
}

impl From<&RootedMap> for MapJson {
    fn from(m: &RootedMap) -> Self {
        MapJson {
            n_darts: m.n_darts(),
            alpha: m.alpha.clone(),
            nu: m.nu.clone(),
            root: m.root,
        }
    }
}

impl TryFrom<MapJson> for RootedMap {
    type Error = Error;

    fn try_from(raw: MapJson) -> Result<Self> {
        if raw.alpha.len() != raw.n_darts || raw.nu.len() != raw.n_darts {
            return Err(Error::InvalidMap(
                "n_darts does not match permutation lengths".into(),
            ));
        }
        RootedMap::from_permutations(raw.alpha, raw.nu, raw.root)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Two loops at one vertex, drawn without crossing: the 1-vertex 4-valent
    /// shadow. Rotation (0 1 2 3), loops {0,1} and {2,3}.
    pub(crate) fn bouquet_two_loops() -> RootedMap {
        RootedMap::from_permutations(vec![1, 0, 3, 2], vec![1, 2, 3, 0], 0).unwrap()
    }

    #[test]
    fn bouquet_has_three_faces() {
        let m = bouquet_two_loops();
        assert_eq!(m.n_vertices(), 1);
        assert_eq!(m.n_edges(), 2);
        assert_eq!(m.faces().cycles.len(), 3);
    }

    #[test]
    fn crossing_loops_rejected_as_higher_genus() {
        // Pairing {0,2},{1,3} on a single 4-valent vertex is the torus map.
        let err = RootedMap::from_permutations(vec![2, 3, 0, 1], vec![1, 2, 3, 0], 0);
        assert!(matches!(err, Err(Error::InvalidMap(_))));
    }

    #[test]
    fn face_degrees_sum_to_darts() {
        let m = bouquet_two_loops();
        let total: usize = m.faces().cycles.iter().map(|c| c.len()).sum();
        assert_eq!(total, m.n_darts());
    }

    #[test]
    fn dual_is_involution_and_swaps_counts() {
        let m = bouquet_two_loops();
        let d = m.dual();
        assert_eq!(d.n_vertices(), m.n_faces());
        assert_eq!(d.n_faces(), m.n_vertices());
        assert_eq!(d.dual(), m);
    }

    #[test]
    fn medial_vertex_count_is_edge_count() {
        // Single edge between two vertices.
        let m = RootedMap::from_permutations(vec![1, 0], vec![0, 1], 0).unwrap();
        let med = m.medial();
        assert_eq!(med.n_vertices(), m.n_edges());
        assert!(med.is_four_valent());
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let m = bouquet_two_loops();
        let text = m.to_json();
        let back = RootedMap::from_json(&text).unwrap();
        assert_eq!(back, m);
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn invalid_json_is_rejected() {
        let bad = r#"{"n_darts": 4, "alpha": [0,1,3,2], "nu": [1,2,3,0], "root": 0}"#;
        assert!(RootedMap::from_json(bad).is_err());
    }
}
