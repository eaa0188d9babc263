//! Weyl orbit traversal by length layers.
//!
//! From a dominant weight, applying `s_i` where the `i`-th coordinate is
//! positive moves one step down in length; distinct layers never share a
//! weight, so deduplication only has to happen inside a layer. For a regular
//! dominant start (such as `ρ`) the orbit is in bijection with `W`.

use std::collections::HashSet;

use super::{RootSystem, Weight};

/// Walks the orbit of dominant `top` layer by layer, calling `visit(weight,
/// length)`. Children of a weight rejected by `keep` are not explored; this
/// is only sound when `keep` is monotone along downward steps.
pub(crate) fn orbit_layers(
    rs: &RootSystem,
    top: &Weight,
    keep: impl Fn(&Weight) -> bool,
    mut visit: impl FnMut(&Weight, usize),
) {
    if !keep(top) {
        return;
    }
    let mut layer = vec![top.clone()];
    let mut length = 0;
    while !layer.is_empty() {
        let mut next: HashSet<Weight> = HashSet::new();
        for w in &layer {
            visit(w, length);
            for i in 0..rs.rank() {
                if w.0[i] > 0 {
                    let child = rs.reflect(w, i);
                    if keep(&child) {
                        next.insert(child);
                    }
                }
            }
        }
        let mut nl: Vec<Weight> = next.into_iter().collect();
        nl.sort();
        layer = nl;
        length += 1;
    }
}

/// One Weyl group element, identified by its image of `ρ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    rho_image: Weight,
    length: usize,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.length
    }

    /// `det(w) = (-1)^{ℓ(w)}`.
    pub fn sign(&self) -> i64 {
        if self.length.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn rho_image(&self) -> &Weight {
        &self.rho_image
    }

    /// Reduced word `[i_1, …, i_k]` with `w = s_{i_1} ⋯ s_{i_k}` (0-based nodes).
    pub fn reduced_word(&self, rs: &RootSystem) -> Vec<usize> {
        let mut x = self.rho_image.clone();
        let mut word = Vec::with_capacity(self.length);
        while let Some(i) = x.0.iter().position(|&c| c < 0) {
            rs.reflect_in_place(&mut x, i);
            word.push(i);
        }
        word
    }

    /// `w(μ)`.
    pub fn apply(&self, rs: &RootSystem, mu: &Weight) -> Weight {
        let mut out = mu.clone();
        for &i in self.reduced_word(rs).iter().rev() {
            rs.reflect_in_place(&mut out, i);
        }
        out
    }
}

/// Iterator over `W` in order of increasing length; see
/// [`RootSystem::weyl_signed_iterate`].
///
/// Layers are materialized one at a time so memory tracks the widest layer,
/// not `|W|`. [`WeylElements::next_layer`] hands out whole layers for
/// partitioned parallel consumption.
pub struct WeylElements<'a> {
    rs: &'a RootSystem,
    layer: Vec<Weight>,
    pos: usize,
    length: usize,
}

impl<'a> WeylElements<'a> {
    pub(super) fn new(rs: &'a RootSystem) -> Self {
        WeylElements {
            rs,
            layer: vec![rs.rho()],
            pos: 0,
            length: 0,
        }
    }

    fn advance_layer(&mut self) {
        let mut next: HashSet<Weight> = HashSet::new();
        for w in &self.layer {
            for i in 0..self.rs.rank() {
                if w.0[i] > 0 {
                    next.insert(self.rs.reflect(w, i));
                }
            }
        }
        let mut nl: Vec<Weight> = next.into_iter().collect();
        nl.sort();
        self.layer = nl;
        self.pos = 0;
        self.length += 1;
    }

    /// Remaining elements of the current layer, then moves to the next.
    pub fn next_layer(&mut self) -> Option<Vec<WeylElement>> {
        if self.pos >= self.layer.len() {
            if self.layer.is_empty() {
                return None;
            }
            self.advance_layer();
            if self.layer.is_empty() {
                return None;
            }
        }
        let length = self.length;
        let out = self.layer[self.pos..]
            .iter()
            .map(|w| WeylElement {
                rho_image: w.clone(),
                length,
            })
            .collect();
        self.pos = self.layer.len();
        Some(out)
    }
}

impl Iterator for WeylElements<'_> {
    type Item = WeylElement;

    fn next(&mut self) -> Option<WeylElement> {
        if self.pos >= self.layer.len() {
            if self.layer.is_empty() {
                return None;
            }
            self.advance_layer();
            if self.layer.is_empty() {
                return None;
            }
        }
        let w = WeylElement {
            rho_image: self.layer[self.pos].clone(),
            length: self.length,
        };
        self.pos += 1;
        Some(w)
    }
}
