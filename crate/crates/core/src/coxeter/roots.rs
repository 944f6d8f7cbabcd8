use nalgebra::DMatrix;

/// A root `x_i - x_j` of `sl_{n+1}`, labelled by the ordered pair
/// `(i, j)` with `i ≠ j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub i: usize,
    pub j: usize,
}

impl Root {
    pub fn new(i: usize, j: usize) -> Self {
        assert_ne!(i, j, "x_i - x_i is not a root");
        Root { i, j }
    }

    /// Coordinates in `Z^{n+1}`.
    pub fn vector(&self, n: usize) -> Vec<i64> {
        let mut v = vec![0i64; n + 1];
        v[self.i] = 1;
        v[self.j] = -1;
        v
    }

    /// Coxeter-orbit label: the cyclic difference `(i - j) mod (n+1)`,
    /// ranging over `1, …, n`.
    pub fn orbit(&self, n: usize) -> usize {
        (self.i + n + 1 - self.j) % (n + 1)
    }

    /// Mass class `min(d, n+1-d)` of the cyclic difference: the orbit of
    /// the root taken up to sign, which is what sets the soliton mass.
    pub fn mass_class(&self, n: usize) -> usize {
        let d = self.orbit(n);
        d.min(n + 1 - d)
    }
}

/// The root system of type `A_n`, living in the trace-zero hyperplane of
/// `R^{n+1}` with the restricted Euclidean inner product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootSystemA {
    n: usize,
}

impl RootSystemA {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "the rank must be at least 1");
        RootSystemA { n }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// All `n(n+1)` roots.
    pub fn roots(&self) -> Vec<Root> {
        let mut out = Vec::with_capacity(self.n * (self.n + 1));
        for i in 0..=self.n {
            for j in 0..=self.n {
                if i != j {
                    out.push(Root { i, j });
                }
            }
        }
        out
    }

    /// The simple roots `α_i = x_{i-1} - x_i` for `i = 1, …, n`.
    pub fn simple_roots(&self) -> Vec<Root> {
        (1..=self.n).map(|i| Root { i: i - 1, j: i }).collect()
    }

    pub fn dot(&self, a: &[i64], b: &[i64]) -> i64 {
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    }
}

/// The Coxeter element `r_{α_1} ⋯ r_{α_n}` of the `A_n` Weyl group,
/// stored as the coordinate permutation it induces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterElement {
    // basis image: e_j ↦ e_{perm[j]}
    perm: Vec<usize>,
}

/// Composes the simple reflections (rightmost acting first). For `A_n`
/// the result is the cyclic coordinate permutation `e_j ↦ e_{j+1}`, of
/// order `n+1`; the composition is carried out explicitly rather than
/// hard-coded.
pub fn coxeter_element(n: usize) -> CoxeterElement {
    assert!(n >= 1, "the rank must be at least 1");
    let system = RootSystemA::new(n);
    let mut images: Vec<Vec<i64>> = (0..=n)
        .map(|j| {
            let mut v = vec![0i64; n + 1];
            v[j] = 1;
            v
        })
        .collect();
    for alpha in system.simple_roots().iter().rev() {
        let alpha_v = alpha.vector(n);
        for v in &mut images {
            // r_α(v) = v - ⟨v, α⟩ α  (roots have squared length 2)
            let inner = system.dot(v, &alpha_v);
            for (x, a) in v.iter_mut().zip(&alpha_v) {
                *x -= inner * a;
            }
        }
    }
    let perm = images
        .iter()
        .map(|v| {
            let mut target = None;
            for (idx, &x) in v.iter().enumerate() {
                match x {
                    0 => {}
                    1 if target.is_none() => target = Some(idx),
                    _ => panic!("Coxeter element of A_n must permute coordinates"),
                }
            }
            target.expect("image of a basis vector cannot vanish")
        })
        .collect();
    CoxeterElement { perm }
}

impl CoxeterElement {
    pub fn rank(&self) -> usize {
        self.perm.len() - 1
    }

    /// Image index of the basis vector `e_j`.
    pub fn image(&self, j: usize) -> usize {
        self.perm[j]
    }

    pub fn apply_root(&self, r: &Root) -> Root {
        Root {
            i: self.perm[r.i],
            j: self.perm[r.j],
        }
    }

    pub fn apply_vec(&self, v: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; v.len()];
        for (j, &x) in v.iter().enumerate() {
            out[self.perm[j]] = x;
        }
        out
    }

    /// Smallest `t ≥ 1` with `c^t = id`.
    pub fn order(&self) -> usize {
        let id: Vec<usize> = (0..self.perm.len()).collect();
        let mut cur = self.perm.clone();
        let mut t = 1;
        while cur != id {
            cur = cur.iter().map(|&j| self.perm[j]).collect();
            t += 1;
        }
        t
    }

    pub fn matrix(&self) -> DMatrix<f64> {
        let size = self.perm.len();
        DMatrix::from_fn(size, size, |r, c| {
            if self.perm[c] == r {
                1.0
            } else {
                0.0
            }
        })
    }
}
