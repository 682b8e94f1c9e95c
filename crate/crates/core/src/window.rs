//! Finite windows of `C+(a,b)` and maps tabulated over them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::element::BicyclicElement;
use crate::error::Result;

/// The window `W_B = { b^i a^j : 0 <= i <= j <= B }`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowSpec {
    pub bound: u64,
}

impl WindowSpec {
    pub const fn new(bound: u64) -> Self {
        WindowSpec { bound }
    }

    pub fn len(&self) -> usize {
        let b = self.bound as usize;
        (b + 1) * (b + 2) / 2
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: BicyclicElement) -> bool {
        x.in_plus() && x.a_exp <= self.bound
    }

    /// Elements in lexicographic `(i, j)` order.
    pub fn elements(&self) -> impl Iterator<Item = BicyclicElement> + Clone {
        let bound = self.bound;
        (0..=bound).flat_map(move |i| (i..=bound).map(move |j| BicyclicElement::new(i, j)))
    }

    /// Position of `x` in [`WindowSpec::elements`] order.
    pub fn index_of(&self, x: BicyclicElement) -> Option<usize> {
        if !self.contains(x) {
            return None;
        }
        let (i, j, b) = (x.b_exp as usize, x.a_exp as usize, self.bound as usize);
        Some(i * (b + 1) - i * i.saturating_sub(1) / 2 + (j - i))
    }
}

/// A map `W_B -> C+(a,b)` given by its table of values, stored in window order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowMap {
    pub window: WindowSpec,
    images: Vec<BicyclicElement>,
}

impl WindowMap {
    /// Tabulates `f` over the window.
    pub fn tabulate(
        window: WindowSpec,
        mut f: impl FnMut(BicyclicElement) -> Result<BicyclicElement>,
    ) -> Result<Self> {
        let images = window.elements().map(&mut f).collect::<Result<_>>()?;
        Ok(WindowMap { window, images })
    }

    pub fn get(&self, x: BicyclicElement) -> Option<BicyclicElement> {
        self.window.index_of(x).map(|k| self.images[k])
    }

    pub fn iter(&self) -> impl Iterator<Item = (BicyclicElement, BicyclicElement)> + '_ {
        self.window.elements().zip(self.images.iter().copied())
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = self.images.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    /// Pairs of distinct window points with the same image, if any.
    pub fn collision(&self) -> Option<(BicyclicElement, BicyclicElement)> {
        let mut tagged: Vec<_> = self.iter().map(|(x, y)| (y, x)).collect();
        tagged.sort_unstable();
        tagged
            .windows(2)
            .find(|w| w[0].0 == w[1].0)
            .map(|w| (w[0].1, w[1].1))
    }

    /// First point where the two maps differ.
    pub fn first_difference(&self, other: &WindowMap) -> Option<BicyclicElement> {
        if self.window != other.window {
            return self.window.elements().next();
        }
        self.iter()
            .zip(other.images.iter())
            .find(|((_, a), b)| a != *b)
            .map(|((x, _), _)| x)
    }

    pub fn agrees_with(&self, f: impl Fn(BicyclicElement) -> Result<BicyclicElement>) -> bool {
        self.iter().all(|(x, y)| f(x) == Ok(y))
    }
}

impl fmt::Display for WindowMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (x, y) in self.iter() {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{x} -> {y}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_size_and_indexing() {
        let w = WindowSpec::new(12);
        assert_eq!(w.len(), 91);
        assert_eq!(w.elements().count(), 91);
        for (k, x) in w.elements().enumerate() {
            assert_eq!(w.index_of(x), Some(k), "{x}");
        }
        assert_eq!(w.index_of(BicyclicElement::new(3, 2)), None);
        assert_eq!(w.index_of(BicyclicElement::new(0, 13)), None);
        assert_eq!(WindowSpec::new(0).elements().collect::<Vec<_>>(), [BicyclicElement::ONE]);
    }

    #[test]
    fn window_map_lookup_and_injectivity() {
        let w = WindowSpec::new(4);
        let id = WindowMap::tabulate(w, Ok).unwrap();
        assert!(id.is_injective());
        assert_eq!(id.collision(), None);
        assert_eq!(id.get(BicyclicElement::new(1, 3)), Some(BicyclicElement::new(1, 3)));
        let deg = WindowMap::tabulate(w, |x| Ok(BicyclicElement::new(0, x.mg_degree() as u64))).unwrap();
        assert!(!deg.is_injective());
        let (x, y) = deg.collision().unwrap();
        assert_ne!(x, y);
        assert_eq!(deg.get(x), deg.get(y));
        assert_eq!(id.first_difference(&deg), Some(BicyclicElement::new(1, 1)));
    }
}
