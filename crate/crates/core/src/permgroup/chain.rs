//! Deterministic Schreier–Sims.

use super::perm::Permutation;

#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    generators: Vec<Permutation>,
    orbit: Vec<usize>,
    /// `transversal[x]` maps the base point to `x`; assigned once, never replaced.
    transversal: Vec<Option<Permutation>>,
    inverse_transversal: Vec<Option<Permutation>>,
    /// `checked[k][s]`: Schreier generator for `orbit[k]` and `generators[s]` has sifted.
    checked: Vec<Vec<bool>>,
    /// Rows before this index are fully checked.
    cursor: usize,
}

impl Level {
    fn new(degree: usize, base_point: usize) -> Self {
        let mut transversal = vec![None; degree];
        let mut inverse_transversal = vec![None; degree];
        transversal[base_point] = Some(Permutation::identity(degree));
        inverse_transversal[base_point] = Some(Permutation::identity(degree));
        Level {
            base_point,
            generators: Vec::new(),
            orbit: vec![base_point],
            transversal,
            inverse_transversal,
            checked: vec![Vec::new()],
            cursor: 0,
        }
    }

    fn add_generator(&mut self, g: Permutation) {
        self.generators.push(g);
        self.cursor = 0;
        // Extend from every known point with the new generator, then close up.
        let new_idx = self.generators.len() - 1;
        let mut frontier: Vec<usize> = Vec::new();
        for k in 0..self.orbit.len() {
            let x = self.orbit[k];
            let y = self.generators[new_idx].apply(x);
            if self.transversal[y].is_none() {
                self.assign(x, y, new_idx);
                frontier.push(y);
            }
        }
        while let Some(x) = frontier.pop() {
            for s in 0..self.generators.len() {
                let y = self.generators[s].apply(x);
                if self.transversal[y].is_none() {
                    self.assign(x, y, s);
                    frontier.push(y);
                }
            }
        }
    }

    fn assign(&mut self, from: usize, to: usize, s: usize) {
        let u = self.transversal[from]
            .as_ref()
            .expect("orbit point has a transversal")
            .compose(&self.generators[s]);
        self.inverse_transversal[to] = Some(u.inverse());
        self.transversal[to] = Some(u);
        self.orbit.push(to);
        self.checked.push(Vec::new());
    }

    fn next_unchecked(&mut self) -> Option<(usize, usize)> {
        let gens = self.generators.len();
        while self.cursor < self.orbit.len() {
            let k = self.cursor;
            let row = &mut self.checked[k];
            if row.len() < gens {
                row.resize(gens, false);
            }
            if let Some(s) = row.iter().position(|&c| !c) {
                row[s] = true;
                return Some((k, s));
            }
            self.cursor += 1;
        }
        None
    }
}

/// Base and strong generating set with explicit transversals.
#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    /// Builds a chain whose base starts with `prefix`; further base points are the
    /// smallest points moved by the element that needs them.
    pub fn build(degree: usize, generators: &[Permutation], prefix: &[usize]) -> Self {
        Self::build_with_order_hint(degree, generators, prefix, None)
    }

    /// As [`build`](Self::build); when `known_order` is given the sifting loop stops as
    /// soon as the product of basic orbit lengths reaches it.
    pub fn build_with_order_hint(
        degree: usize,
        generators: &[Permutation],
        prefix: &[usize],
        known_order: Option<u128>,
    ) -> Self {
        let mut chain = StabilizerChain {
            degree,
            levels: prefix.iter().map(|&b| Level::new(degree, b)).collect(),
        };
        let gens: Vec<Permutation> = generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        for g in &gens {
            if chain.levels.iter().all(|l| g.apply(l.base_point) == l.base_point) {
                let b = g.first_moved().expect("non-identity");
                chain.levels.push(Level::new(degree, b));
            }
        }
        for g in &gens {
            // A generator belongs to every level whose earlier base points it fixes.
            for i in 0..chain.levels.len() {
                chain.levels[i].add_generator(g.clone());
                if g.apply(chain.levels[i].base_point) != chain.levels[i].base_point {
                    break;
                }
            }
        }
        if chain.levels.is_empty() {
            return chain;
        }
        let done = |c: &StabilizerChain| known_order.is_some_and(|o| c.order() >= o);
        let mut i = chain.levels.len() - 1;
        loop {
            if done(&chain) {
                break;
            }
            match chain.levels[i].next_unchecked() {
                Some((k, s)) => {
                    let level = &chain.levels[i];
                    let beta = level.orbit[k];
                    let g = &level.generators[s];
                    let image = g.apply(beta);
                    let h = level.transversal[beta]
                        .as_ref()
                        .unwrap()
                        .compose(g)
                        .compose(level.inverse_transversal[image].as_ref().unwrap());
                    if h.is_identity() {
                        continue;
                    }
                    let (residue, j) = chain.sift_from(h, i + 1);
                    if residue.is_identity() {
                        continue;
                    }
                    if j == chain.levels.len() {
                        let b = residue.first_moved().expect("non-identity");
                        chain.levels.push(Level::new(degree, b));
                    }
                    for l in (i + 1)..=j {
                        chain.levels[l].add_generator(residue.clone());
                    }
                    i = j;
                }
                None => {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                }
            }
        }
        chain
    }

    fn sift_from(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (idx, level) in self.levels.iter().enumerate().skip(start) {
            let beta = g.apply(level.base_point);
            match &level.inverse_transversal[beta] {
                Some(inv) => g = g.compose(inv),
                None => return (g, idx),
            }
        }
        (g, self.levels.len())
    }

    /// Residue of `g` and the level where sifting stopped.
    pub fn sift(&self, g: &Permutation) -> (Permutation, usize) {
        self.sift_from(g.clone(), 0)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(g).0.is_identity()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Basic orbit at `level`, in discovery order.
    pub fn basic_orbit(&self, level: usize) -> &[usize] {
        &self.levels[level].orbit
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    /// Element mapping the base point of `level` to `point`, if in the basic orbit.
    pub fn transversal_element(&self, level: usize, point: usize) -> Option<&Permutation> {
        self.levels[level].transversal[point].as_ref()
    }

    /// Strong generators of the pointwise stabilizer of the first `level` base points.
    pub fn stabilizer_generators(&self, level: usize) -> Vec<Permutation> {
        self.levels
            .get(level)
            .map(|l| l.generators.clone())
            .unwrap_or_default()
    }

    /// All strong generators.
    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.stabilizer_generators(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> Vec<Permutation> {
        let cycle: Vec<usize> = (0..n).collect();
        vec![
            Permutation::from_cycles(n, &[&[0, 1]]).unwrap(),
            Permutation::from_cycles(n, &[&cycle]).unwrap(),
        ]
    }

    #[test]
    fn symmetric_orders() {
        let mut expected = 1u128;
        for n in 2..=9 {
            expected *= n as u128;
            assert_eq!(StabilizerChain::build(n, &sym(n), &[]).order(), expected);
        }
    }

    #[test]
    fn trivial_group() {
        let c = StabilizerChain::build(5, &[Permutation::identity(5)], &[]);
        assert_eq!(c.order(), 1);
        assert_eq!(c.depth(), 0);
        assert!(c.contains(&Permutation::identity(5)));
    }

    #[test]
    fn membership() {
        // Alt(5) does not contain a transposition.
        let a5 = vec![
            Permutation::from_cycles(5, &[&[0, 1, 2]]).unwrap(),
            Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap(),
        ];
        let c = StabilizerChain::build(5, &a5, &[]);
        assert_eq!(c.order(), 60);
        assert!(!c.contains(&Permutation::from_cycles(5, &[&[0, 1]]).unwrap()));
        assert!(c.contains(&Permutation::from_cycles(5, &[&[0, 1], &[2, 3]]).unwrap()));
    }

    #[test]
    fn base_prefix_is_respected() {
        let c = StabilizerChain::build(6, &sym(6), &[4, 2]);
        assert_eq!(&c.base()[..2], &[4, 2]);
        assert_eq!(c.order(), 720);
        for g in c.stabilizer_generators(1) {
            assert_eq!(g.apply(4), 4);
        }
    }

    #[test]
    fn order_hint_gives_same_order() {
        let c = StabilizerChain::build_with_order_hint(7, &sym(7), &[3], Some(5040));
        assert_eq!(c.order(), 5040);
    }
}
