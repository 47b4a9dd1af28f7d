//! Deterministic Schreier–Sims.
//!
//! Level `i` stores the base point `b_i`, the strong generators fixing
//! `b_0 .. b_{i-1}`, and a full transversal: `transversal[x]` maps `b_i` to `x`.

use super::perm::Permutation;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub point: usize,
    pub gens: Vec<Permutation>,
    pub transversal: Vec<Option<Permutation>>,
    pub orbit: Vec<usize>,
}

impl Level {
    fn new(point: usize, degree: usize) -> Self {
        let mut level = Level {
            point,
            gens: Vec::new(),
            transversal: vec![None; degree],
            orbit: Vec::new(),
        };
        level.rebuild_orbit(degree);
        level
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        self.transversal = vec![None; degree];
        self.transversal[self.point] = Some(Permutation::identity(degree));
        self.orbit = vec![self.point];
        let mut head = 0;
        while head < self.orbit.len() {
            let x = self.orbit[head];
            head += 1;
            for s in &self.gens {
                let y = s.apply(x);
                if self.transversal[y].is_none() {
                    let rep = self.transversal[x].as_ref().unwrap().then(s);
                    self.transversal[y] = Some(rep);
                    self.orbit.push(y);
                }
            }
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    pub degree: usize,
    pub levels: Vec<Level>,
}

impl StabChain {
    /// Builds a chain whose base starts with `base_prefix` (points may repeat
    /// only if the caller passes duplicates; the prefix is used verbatim).
    pub fn build(degree: usize, gens: &[Permutation], base_prefix: &[usize]) -> Self {
        let gens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut base: Vec<usize> = base_prefix.to_vec();
        for g in &gens {
            if base.iter().all(|&b| g.apply(b) == b) {
                base.push(g.first_moved_point().unwrap());
            }
        }
        let mut levels: Vec<Level> = Vec::with_capacity(base.len());
        for (i, &b) in base.iter().enumerate() {
            let mut level = Level::new(b, degree);
            level.gens = gens
                .iter()
                .filter(|g| base[..i].iter().all(|&p| g.apply(p) == p))
                .cloned()
                .collect();
            level.rebuild_orbit(degree);
            levels.push(level);
        }
        let mut chain = StabChain { degree, levels };
        chain.complete();
        chain
    }

    fn complete(&mut self) {
        let mut i = self.levels.len();
        while i > 0 {
            let lvl = i - 1;
            match self.failing_schreier_generator(lvl) {
                None => i -= 1,
                Some((residue, depth)) => {
                    if depth == self.levels.len() {
                        let p = residue
                            .first_moved_point()
                            .expect("residue of a failed strip is never the identity");
                        self.levels.push(Level::new(p, self.degree));
                    }
                    for l in (lvl + 1)..=depth {
                        self.levels[l].gens.push(residue.clone());
                        self.levels[l].rebuild_orbit(self.degree);
                    }
                    i = depth + 1;
                }
            }
        }
    }

    fn failing_schreier_generator(&self, lvl: usize) -> Option<(Permutation, usize)> {
        let level = &self.levels[lvl];
        for &x in &level.orbit {
            let ux = level.transversal[x].as_ref().unwrap();
            for s in &level.gens {
                let y = s.apply(x);
                let uy = level.transversal[y].as_ref().unwrap();
                let h = ux.then(s).then(&uy.inverse());
                if h.is_identity() {
                    continue;
                }
                let (residue, depth) = self.strip(h, lvl + 1);
                if !residue.is_identity() {
                    return Some((residue, depth));
                }
            }
        }
        None
    }

    /// Sifts `g` through levels `start..`; returns the residue and the level
    /// at which sifting stopped (`levels.len()` if it went all the way).
    pub fn strip(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for k in start..self.levels.len() {
            let level = &self.levels[k];
            let x = g.apply(level.point);
            match &level.transversal[x] {
                None => return (g, k),
                Some(u) => g = g.then(&u.inverse()),
            }
        }
        let depth = self.levels.len();
        (g, depth)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.strip(g.clone(), 0).0.is_identity()
    }

    /// Group order; saturates at `u128::MAX`.
    pub fn order(&self) -> u128 {
        self.levels
            .iter()
            .fold(1u128, |acc, l| acc.saturating_mul(l.orbit.len() as u128))
    }

    /// Generators of the pointwise stabiliser of the first `k` base points.
    pub fn stabilizer_gens(&self, k: usize) -> Vec<Permutation> {
        self.levels.get(k).map(|l| l.gens.clone()).unwrap_or_default()
    }

    /// Every element, as products `r_m * .. * r_1 * r_0` of transversal
    /// elements (deepest level first).
    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let reps: Vec<&Permutation> = level
                .orbit
                .iter()
                .map(|&x| level.transversal[x].as_ref().unwrap())
                .collect();
            let mut next = Vec::with_capacity(out.len() * reps.len());
            for h in &out {
                for r in &reps {
                    next.push(h.then(r));
                }
            }
            out = next;
        }
        out
    }
}
