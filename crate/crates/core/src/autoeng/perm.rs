//! Permutations as image arrays over vertex indices.

/// A bijection `{0..degree} -> {0..degree}` stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u32).collect() }
    }

    /// # Panics
    /// If `images` is not a bijection on `0..images.len()`.
    pub fn from_images(images: Vec<u32>) -> Self {
        let mut seen = vec![false; images.len()];
        for &img in &images {
            assert!(
                (img as usize) < images.len() && !seen[img as usize],
                "images do not form a bijection"
            );
            seen[img as usize] = true;
        }
        Permutation { images }
    }

    pub fn from_fn(degree: usize, f: impl Fn(usize) -> usize) -> Self {
        Permutation::from_images((0..degree).map(|x| f(x) as u32).collect())
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i as u32 == img)
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u32;
        }
        Permutation { images }
    }

    /// The composite `x -> next(self(x))`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        assert_eq!(self.degree(), next.degree(), "degree mismatch");
        Permutation { images: self.images.iter().map(|&i| next.images[i as usize]).collect() }
    }

    /// The smallest point moved by the permutation, if any.
    pub fn min_moved_point(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|&(i, &img)| i as u32 != img).map(|(i, _)| i)
    }
}
