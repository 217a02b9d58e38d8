//! Brute-force partitions of mixed graphs under relabelling, and under
//! relabelling combined with switching.

use itertools::Itertools;

use crate::graph::MixedGraph;
use crate::spectra::graph_char_poly;
use crate::switching::{relabelled_switching, SwitchDiagonal};

use super::CensusError;

/// Largest vertex count accepted by the dedup routines.
pub const MAX_DEDUP_N: usize = 8;

/// One class: its representative (least encoding among members), the member
/// indices into the input, and per member a witness `(perm, D)` with
/// `member.induced(&perm) == apply_switch(representative, D)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DedupClass {
    pub representative: MixedGraph,
    pub members: Vec<usize>,
    pub witnesses: Vec<(Vec<usize>, SwitchDiagonal)>,
}

fn check_n(graphs: &[MixedGraph]) -> Result<(), CensusError> {
    let Some(first) = graphs.first() else {
        return Ok(());
    };
    let n = first.n();
    if n > MAX_DEDUP_N {
        return Err(CensusError::TooManyVertices { n, max: MAX_DEDUP_N });
    }
    if graphs.iter().any(|g| g.n() != n) {
        return Err(CensusError::MixedVertexCounts);
    }
    Ok(())
}

/// Partitions `graphs` under relabelling followed by switching. Classes are
/// ordered by representative encoding.
pub fn dedup_classes(graphs: &[MixedGraph]) -> Result<Vec<DedupClass>, CensusError> {
    check_n(graphs)?;
    let mut order: Vec<usize> = (0..graphs.len()).collect();
    order.sort_by_key(|&i| graphs[i].encoding());
    let polys: Vec<_> = graphs.iter().map(graph_char_poly).collect();
    let mut classes: Vec<(usize, DedupClass)> = Vec::new();
    for i in order {
        let g = &graphs[i];
        let found = classes.iter_mut().find_map(|(rep, class)| {
            if polys[*rep] != polys[i] {
                return None;
            }
            relabelled_switching(&class.representative, g).map(|w| (class, w))
        });
        match found {
            Some((class, w)) => {
                class.members.push(i);
                class.witnesses.push(w);
            }
            None => classes.push((
                i,
                DedupClass {
                    representative: g.clone(),
                    members: vec![i],
                    witnesses: vec![((0..g.n()).collect(), SwitchDiagonal::identity(g.n()))],
                },
            )),
        }
    }
    Ok(classes.into_iter().map(|(_, c)| c).collect())
}

/// Least encoding over all relabellings; equal keys mean isomorphic mixed
/// graphs.
pub fn mixed_canonical_key(g: &MixedGraph) -> Vec<u8> {
    let n = g.n();
    (0..n)
        .permutations(n)
        .map(|p| g.induced(&p).encoding())
        .min()
        .unwrap_or_default()
}

/// Partitions `graphs` under relabelling only; returns member index lists
/// ordered by canonical key, each list ascending.
pub fn isomorphism_classes(graphs: &[MixedGraph]) -> Result<Vec<Vec<usize>>, CensusError> {
    check_n(graphs)?;
    let mut keyed: Vec<(Vec<u8>, usize)> = graphs.iter().enumerate().map(|(i, g)| (mixed_canonical_key(g), i)).collect();
    keyed.sort();
    Ok(keyed
        .into_iter()
        .chunk_by(|(k, _)| k.clone())
        .into_iter()
        .map(|(_, grp)| grp.map(|(_, i)| i).collect())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::enumerate_orientations;
    use crate::switching::apply_switch;

    fn check_witnesses(graphs: &[MixedGraph], classes: &[DedupClass]) {
        let mut seen: Vec<usize> = classes.iter().flat_map(|c| c.members.clone()).collect();
        seen.sort_unstable();
        assert_eq!(seen, (0..graphs.len()).collect::<Vec<_>>());
        for c in classes {
            for (&m, (perm, d)) in c.members.iter().zip(&c.witnesses) {
                assert_eq!(graphs[m].induced(perm), apply_switch(&c.representative, d).unwrap());
            }
        }
    }

    #[test]
    fn triangles_and_quadrangles_give_three_classes() {
        for base in [MixedGraph::complete(3), MixedGraph::cycle(4)] {
            let all: Vec<MixedGraph> = enumerate_orientations(&base).unwrap().collect();
            let classes = dedup_classes(&all).unwrap();
            assert_eq!(classes.len(), 3);
            check_witnesses(&all, &classes);
        }
    }

    #[test]
    fn knst_is_a_single_class() {
        for n in 2..=5 {
            let all: Vec<MixedGraph> = (0..=n).map(|s| MixedGraph::knst(s, n - s)).collect();
            let classes = dedup_classes(&all).unwrap();
            assert_eq!(classes.len(), 1, "n={n}");
            check_witnesses(&all, &classes);
        }
    }

    #[test]
    fn isomorphism_counts() {
        let tri: Vec<MixedGraph> = enumerate_orientations(&MixedGraph::complete(3)).unwrap().collect();
        assert_eq!(isomorphism_classes(&tri).unwrap().len(), 7);
        let quad: Vec<MixedGraph> = enumerate_orientations(&MixedGraph::cycle(4)).unwrap().collect();
        assert_eq!(isomorphism_classes(&quad).unwrap().len(), 15);
        assert!(matches!(
            dedup_classes(&[MixedGraph::empty(9)]),
            Err(CensusError::TooManyVertices { n: 9, .. })
        ));
    }
}
