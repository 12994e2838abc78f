//! Hyperovals of PG(2,4).

use std::sync::Arc;

use super::field::FiniteField;
use super::geometry::{projective_objects, sl_generators, ObjectKind, ProjectiveSpace};
use super::semilinear::{linear_action, LinearDomain};
use crate::error::Result;
use crate::permgroup::GeneratedGroup;

#[derive(Clone, Debug)]
pub struct Hyperovals {
    /// The 21 points and 21 lines of PG(2,4), lines as sorted point sets.
    pub lines: Vec<Vec<u32>>,
    /// All hyperovals, each sorted, in lexicographic order.
    pub ovals: Vec<Vec<u32>>,
    /// PSL(3,4) on the 21 points.
    pub group: GeneratedGroup,
    /// Orbits of the group on `ovals`, as indices, ordered by least member.
    pub orbits: Vec<Vec<usize>>,
}

impl Hyperovals {
    pub fn orbit_label(&self, oval: usize) -> usize {
        self.orbits
            .iter()
            .position(|o| o.contains(&oval))
            .expect("every oval lies in an orbit")
    }

    /// Hyperovals in the orbit of the lexicographically least one.
    pub fn least_orbit(&self) -> Vec<Vec<u32>> {
        self.orbits[0].iter().map(|&i| self.ovals[i].clone()).collect()
    }
}

/// All 6-sets of PG(2,4) with no three points collinear.
pub fn hyperovals_pg24() -> Result<Hyperovals> {
    let field = Arc::new(FiniteField::new(2, 2)?);
    let pg = ProjectiveSpace::new(field.clone(), 3)?;
    let lines = pg.point_sets(&projective_objects(&field, 3, ObjectKind::Lines)?);
    let n = pg.num_points();
    let mut line_of = vec![vec![usize::MAX; n]; n];
    for (l, pts) in lines.iter().enumerate() {
        for &a in pts {
            for &b in pts {
                line_of[a as usize][b as usize] = l;
            }
        }
    }
    let mut on_line = vec![vec![false; lines.len()]; n];
    for (l, pts) in lines.iter().enumerate() {
        for &a in pts {
            on_line[a as usize][l] = true;
        }
    }
    let mut ovals = Vec::new();
    let mut current: Vec<usize> = Vec::with_capacity(6);
    extend(n, &line_of, &on_line, &mut current, 0, &mut ovals);

    let group = linear_action(
        &sl_generators(&field, 3),
        &field,
        3,
        LinearDomain::ProjectivePoints,
        "PSL(3,4)",
    )?;
    let on_ovals = group.action_on_sets(&ovals)?;
    let orbits = on_ovals.orbits();
    Ok(Hyperovals {
        lines,
        ovals,
        group,
        orbits,
    })
}

fn extend(
    n: usize,
    line_of: &[Vec<usize>],
    on_line: &[Vec<bool>],
    current: &mut Vec<usize>,
    start: usize,
    out: &mut Vec<Vec<u32>>,
) {
    if current.len() == 6 {
        out.push(current.iter().map(|&x| x as u32).collect());
        return;
    }
    for c in start..n {
        let collinear = current.iter().enumerate().any(|(i, &a)| {
            current[i + 1..]
                .iter()
                .any(|&b| on_line[c][line_of[a][b]])
        });
        if !collinear {
            current.push(c);
            extend(n, line_of, on_line, current, c + 1, out);
            current.pop();
        }
    }
}
