//! Discrete simulator of MERA causal-cone geometry.
//!
//! The layered coarse-graining graph is never materialized: a causal cone is
//! one site interval per level, propagated by the widening-then-dividing
//! rule `[lo, hi] -> [⌊(lo−1)/b⌋, ⌊(hi+1)/b⌋]` (pad 1 models disentangler
//! reach, division models the isometries).  Cone widths shrink to a small
//! constant floor (3 for binary, 2 for ternary networks) after about
//! log_b(block size) levels.
//!
//! Cuts count severed bonds.  A single-block cut runs side walls up to a cap
//! level and then cuts the cone's parent bonds there; the reported cut
//! minimizes over the cap level.  For two blocks the disconnected routing
//! cuts each block separately, while the connected routing cuts the spanning
//! interval plus the gap interval — the discrete counterpart of the two
//! competing geodesic pairings.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MeraError {
    #[error("branching factor must be 2 or 3 (got {0})")]
    BadBranch(usize),
    #[error("n_sites = {0} is not a positive power of branch {1} (or exceeds 2^24)")]
    NotPowerOfBranch(usize, usize),
    #[error("block [{lo}, {hi}] out of range for {n_sites} sites")]
    BlockOutOfRange { lo: usize, hi: usize, n_sites: usize },
    #[error("blocks must be disjoint")]
    BlocksOverlap,
    #[error("invalid interval: lo must not exceed hi")]
    EmptyInterval,
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
}

/// Inclusive interval of boundary (or level-k) sites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SiteInterval {
    lo: usize,
    hi: usize,
}

impl SiteInterval {
    pub fn new(lo: usize, hi: usize) -> Result<Self, MeraError> {
        if lo > hi {
            return Err(MeraError::EmptyInterval);
        }
        Ok(SiteInterval { lo, hi })
    }

    pub fn lo(&self) -> usize {
        self.lo
    }
    pub fn hi(&self) -> usize {
        self.hi
    }
    pub fn width(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn intersects(&self, other: &SiteInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn contains(&self, other: &SiteInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }
}

/// Layered coarse-graining network: branch^depth boundary sites.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeraNetwork {
    branch: usize,
    n_sites: usize,
    depth: u32,
    bond_entropy: f64,
}

/// Causal cone of a block: one site interval per level, k = 0..=depth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CausalCone {
    pub per_level: Vec<SiteInterval>,
}

impl CausalCone {
    pub fn widths(&self) -> Vec<usize> {
        self.per_level.iter().map(|iv| iv.width()).collect()
    }
}

/// Which two-block routing a cut or classification refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Connected,
    Disconnected,
}

/// A minimal-cut result: severed bond count, its entropy-weighted length,
/// and the per-level breakdown (side bonds plus the cap at its level).
#[derive(Debug, Clone, PartialEq)]
pub struct CutResult {
    pub bond_count: usize,
    pub length: f64,
    pub per_level_bonds: Vec<usize>,
    /// For two-block cuts, the routing that won; `None` for single blocks.
    pub routing: Option<Regime>,
}

/// Width the cones stabilize at: 3 for binary, 2 for ternary networks.
pub fn width_floor(branch: usize) -> Result<usize, MeraError> {
    match branch {
        2 => Ok(3),
        3 => Ok(2),
        other => Err(MeraError::BadBranch(other)),
    }
}

/// Connected regime iff the block size reaches at least the separation:
/// w_H = log_b l ≥ w_* = log_b d, ties classified Connected.
pub fn regime_classify(l: usize, d: usize, branch: usize) -> Result<Regime, MeraError> {
    width_floor(branch)?;
    if l == 0 || d == 0 {
        return Err(MeraError::InvalidParameter("l and d must be >= 1"));
    }
    Ok(if l >= d {
        Regime::Connected
    } else {
        Regime::Disconnected
    })
}

impl MeraNetwork {
    pub fn new(n_sites: usize, branch: usize) -> Result<Self, MeraError> {
        width_floor(branch)?;
        if n_sites <= 1 || n_sites > 1 << 24 {
            return Err(MeraError::NotPowerOfBranch(n_sites, branch));
        }
        let mut depth = 0u32;
        let mut m = n_sites;
        while m.is_multiple_of(branch) {
            m /= branch;
            depth += 1;
        }
        if m != 1 {
            return Err(MeraError::NotPowerOfBranch(n_sites, branch));
        }
        Ok(MeraNetwork {
            branch,
            n_sites,
            depth,
            bond_entropy: 1.0,
        })
    }

    /// Entropy per traced bond (log of the bond dimension); default 1.
    pub fn with_bond_entropy(mut self, bond_entropy: f64) -> Result<Self, MeraError> {
        if !(bond_entropy > 0.0) || !bond_entropy.is_finite() {
            return Err(MeraError::InvalidParameter("bond_entropy must be > 0"));
        }
        self.bond_entropy = bond_entropy;
        Ok(self)
    }

    pub fn branch(&self) -> usize {
        self.branch
    }
    pub fn n_sites(&self) -> usize {
        self.n_sites
    }
    pub fn depth(&self) -> u32 {
        self.depth
    }
    pub fn bond_entropy(&self) -> f64 {
        self.bond_entropy
    }

    /// Number of sites at level k.
    pub fn extent(&self, level: u32) -> usize {
        self.n_sites / self.branch.pow(level)
    }

    fn check_block(&self, block: SiteInterval) -> Result<(), MeraError> {
        if block.hi >= self.n_sites {
            return Err(MeraError::BlockOutOfRange {
                lo: block.lo,
                hi: block.hi,
                n_sites: self.n_sites,
            });
        }
        Ok(())
    }

    /// Causal cone of `block`: levels 0..=depth.
    pub fn causal_cone(&self, block: SiteInterval) -> Result<CausalCone, MeraError> {
        self.check_block(block)?;
        let b = self.branch as i64;
        let mut per_level = Vec::with_capacity(self.depth as usize + 1);
        per_level.push(block);
        let (mut lo, mut hi) = (block.lo as i64, block.hi as i64);
        for k in 1..=self.depth {
            let ext = self.extent(k) as i64;
            lo = ((lo - 1).div_euclid(b)).max(0);
            hi = ((hi + 1).div_euclid(b)).min(ext - 1);
            per_level.push(SiteInterval {
                lo: lo as usize,
                hi: hi as usize,
            });
        }
        Ok(CausalCone { per_level })
    }

    /// Smallest level at which the two blocks' cones intersect.
    ///
    /// Returns `None` for the trivial merge: an intersection happening only
    /// at a level whose extent has collapsed to at most twice the width
    /// floor means the floor-width cones stayed separated until the lattice
    /// ran out of room ("shrink to one without overlapping").
    pub fn cone_overlap_level(
        &self,
        block_a: SiteInterval,
        block_b: SiteInterval,
    ) -> Result<Option<u32>, MeraError> {
        if block_a.intersects(&block_b) {
            return Err(MeraError::BlocksOverlap);
        }
        let ca = self.causal_cone(block_a)?;
        let cb = self.causal_cone(block_b)?;
        let trivial = 2 * width_floor(self.branch)?;
        for (k, (ia, ib)) in ca.per_level.iter().zip(&cb.per_level).enumerate() {
            if ia.intersects(ib) {
                let k = k as u32;
                return Ok(if self.extent(k) <= trivial { None } else { Some(k) });
            }
        }
        Ok(None)
    }

    /// Single-block minimal cut: side walls up to a cap level plus the cap,
    /// minimized over the cap level.
    fn single_cut(&self, block: SiteInterval) -> Result<(usize, Vec<usize>), MeraError> {
        let cone = self.causal_cone(block)?;
        let depth = self.depth as usize;
        let sides_at = |k: usize, iv: &SiteInterval| -> usize {
            let ext = self.extent(k as u32);
            (iv.lo > 0) as usize + (iv.hi < ext - 1) as usize
        };
        let mut best_cost = usize::MAX;
        let mut best_cap = 0usize;
        let mut side_sum = 0usize;
        for (k, iv) in cone.per_level.iter().enumerate() {
            side_sum += sides_at(k, iv);
            let cap = if k < depth { iv.width() } else { 0 };
            if side_sum + cap < best_cost {
                best_cost = side_sum + cap;
                best_cap = k;
            }
        }
        let mut per_level = vec![0usize; depth + 1];
        for (k, iv) in cone.per_level.iter().enumerate().take(best_cap + 1) {
            per_level[k] = sides_at(k, iv);
        }
        if best_cap < depth {
            per_level[best_cap] += cone.per_level[best_cap].width();
        }
        Ok((best_cost, per_level))
    }

    fn cut_result(&self, bond_count: usize, per_level: Vec<usize>, routing: Option<Regime>) -> CutResult {
        CutResult {
            bond_count,
            length: bond_count as f64 * self.bond_entropy,
            per_level_bonds: per_level,
            routing,
        }
    }

    /// Disconnected routing for two blocks: independent single-block cuts.
    pub fn disconnected_cut(
        &self,
        block_a: SiteInterval,
        block_b: SiteInterval,
    ) -> Result<CutResult, MeraError> {
        let (a, b) = ordered_disjoint(block_a, block_b)?;
        let (ca, pa) = self.single_cut(a)?;
        let (cb, pb) = self.single_cut(b)?;
        let per: Vec<usize> = pa.iter().zip(&pb).map(|(x, y)| x + y).collect();
        Ok(self.cut_result(ca + cb, per, Some(Regime::Disconnected)))
    }

    /// Connected routing for two blocks: cut of the spanning interval plus
    /// cut of the gap between them (empty for adjacent blocks).
    pub fn connected_cut(
        &self,
        block_a: SiteInterval,
        block_b: SiteInterval,
    ) -> Result<CutResult, MeraError> {
        let (a, b) = ordered_disjoint(block_a, block_b)?;
        let span = SiteInterval { lo: a.lo, hi: b.hi };
        let (mut count, mut per) = self.single_cut(span)?;
        if b.lo - a.hi >= 2 {
            let gap = SiteInterval {
                lo: a.hi + 1,
                hi: b.lo - 1,
            };
            let (cg, pg) = self.single_cut(gap)?;
            count += cg;
            for (x, y) in per.iter_mut().zip(&pg) {
                *x += y;
            }
        }
        Ok(self.cut_result(count, per, Some(Regime::Connected)))
    }

    /// Minimal cut separating the causal region of one or two blocks.
    ///
    /// For two blocks, returns whichever routing is shorter (ties go to the
    /// connected routing, matching the classifier's tie rule).
    pub fn minimal_cut(&self, blocks: &[SiteInterval]) -> Result<CutResult, MeraError> {
        match blocks {
            [single] => {
                let (count, per) = self.single_cut(*single)?;
                Ok(self.cut_result(count, per, None))
            }
            [a, b] => {
                let con = self.connected_cut(*a, *b)?;
                let dis = self.disconnected_cut(*a, *b)?;
                Ok(if con.bond_count <= dis.bond_count {
                    con
                } else {
                    dis
                })
            }
            _ => Err(MeraError::InvalidParameter(
                "minimal_cut takes one or two blocks",
            )),
        }
    }
}

fn ordered_disjoint(
    a: SiteInterval,
    b: SiteInterval,
) -> Result<(SiteInterval, SiteInterval), MeraError> {
    if a.intersects(&b) {
        return Err(MeraError::BlocksOverlap);
    }
    Ok(if a.lo < b.lo { (a, b) } else { (b, a) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: usize, hi: usize) -> SiteInterval {
        SiteInterval::new(lo, hi).unwrap()
    }

    #[test]
    fn build_examples() {
        assert_eq!(MeraNetwork::new(8, 2).unwrap().depth(), 3);
        assert_eq!(MeraNetwork::new(27, 3).unwrap().depth(), 3);
        assert!(matches!(
            MeraNetwork::new(12, 2),
            Err(MeraError::NotPowerOfBranch(12, 2))
        ));
        assert!(matches!(MeraNetwork::new(8, 4), Err(MeraError::BadBranch(4))));
        assert!(MeraNetwork::new(1, 2).is_err());
        assert!(MeraNetwork::new(1 << 25, 2).is_err());
    }

    #[test]
    fn cone_single_site_stays_at_floor() {
        let net = MeraNetwork::new(1024, 2).unwrap();
        let cone = net.causal_cone(iv(300, 300)).unwrap();
        assert!(cone.widths().iter().all(|&w| w <= 3));

        let net3 = MeraNetwork::new(729, 3).unwrap();
        let cone3 = net3.causal_cone(iv(300, 300)).unwrap();
        assert!(cone3.widths().iter().all(|&w| w <= 2));
    }

    #[test]
    fn cone_frozen_widths_block16() {
        // explicit run of the recursion, frozen: widths and the first level
        // at which the width reaches the floor (= ceil(log2 16) + 1)
        let net = MeraNetwork::new(1024, 2).unwrap();
        let cone = net.causal_cone(iv(100, 115)).unwrap();
        assert_eq!(cone.widths(), vec![16, 10, 6, 5, 4, 3, 3, 2, 2, 2, 1]);
        let first = cone.widths().iter().position(|&w| w <= 3).unwrap();
        assert_eq!(first, 5);
    }

    #[test]
    fn cone_full_system_is_whole_network() {
        let net = MeraNetwork::new(256, 2).unwrap();
        let cone = net.causal_cone(iv(0, 255)).unwrap();
        for (k, lvl) in cone.per_level.iter().enumerate() {
            assert_eq!(lvl.lo(), 0);
            assert_eq!(lvl.hi(), net.extent(k as u32) - 1);
        }
    }

    #[test]
    fn cone_levels_contain_exact_image() {
        let net = MeraNetwork::new(4096, 2).unwrap();
        let cone = net.causal_cone(iv(517, 611)).unwrap();
        for k in 0..net.depth() as usize {
            let cur = cone.per_level[k];
            let nxt = cone.per_level[k + 1];
            assert!(nxt.contains(&iv(cur.lo() / 2, cur.hi() / 2)), "level {k}");
        }
        assert_eq!(cone.per_level[0], iv(517, 611));
    }

    #[test]
    fn cone_monotone_under_block_growth() {
        let net = MeraNetwork::new(4096, 2).unwrap();
        let small = net.causal_cone(iv(600, 650)).unwrap();
        let large = net.causal_cone(iv(590, 700)).unwrap();
        for (s, l) in small.per_level.iter().zip(&large.per_level) {
            assert!(l.contains(s));
        }
    }

    #[test]
    fn cone_out_of_range() {
        let net = MeraNetwork::new(64, 2).unwrap();
        assert!(matches!(
            net.causal_cone(iv(60, 64)),
            Err(MeraError::BlockOutOfRange { .. })
        ));
    }

    #[test]
    fn overlap_adjacent_blocks() {
        let net = MeraNetwork::new(1024, 2).unwrap();
        let k = net.cone_overlap_level(iv(100, 103), iv(104, 107)).unwrap();
        assert!(k.unwrap() <= 1);
    }

    #[test]
    fn overlap_frozen_regression() {
        // single sites 64 apart on 4096 sites: frozen explicit-run value 5,
        // inside ceil(log2 64) +/- 1
        let net = MeraNetwork::new(4096, 2).unwrap();
        let k = net
            .cone_overlap_level(iv(1000, 1000), iv(1064, 1064))
            .unwrap();
        assert_eq!(k, Some(5));
    }

    #[test]
    fn overlap_none_for_floor_width_cones() {
        // l = 2 blocks separated by half a 2^16 lattice merge only at the
        // trivial top levels
        let n = 1 << 16;
        let net = MeraNetwork::new(n, 2).unwrap();
        let a = iv(0, 1);
        let b = iv(2 + n / 2 - 1, 2 + n / 2);
        assert_eq!(net.cone_overlap_level(a, b).unwrap(), None);
        let a = iv(1000, 1001);
        let b = iv(1000 + 2 + n / 2 - 1, 1000 + 2 + n / 2);
        assert_eq!(net.cone_overlap_level(a, b).unwrap(), None);
    }

    #[test]
    fn overlap_rejects_intersecting_blocks() {
        let net = MeraNetwork::new(64, 2).unwrap();
        assert_eq!(
            net.cone_overlap_level(iv(0, 10), iv(5, 12)),
            Err(MeraError::BlocksOverlap)
        );
    }

    #[test]
    fn single_site_cut_floor_constant() {
        // frozen from explicit enumeration on the 8-site network
        let net = MeraNetwork::new(8, 2).unwrap();
        for s in 1..7 {
            assert_eq!(net.minimal_cut(&[iv(s, s)]).unwrap().bond_count, 3);
        }
        // edge sites lose one side wall
        assert_eq!(net.minimal_cut(&[iv(0, 0)]).unwrap().bond_count, 2);
    }

    #[test]
    fn single_block_cuts_frozen() {
        // explicit runs, base site 1000, 2^16-site binary network
        let net = MeraNetwork::new(1 << 16, 2).unwrap();
        let expect = [
            (2, 4),
            (4, 6),
            (8, 10),
            (16, 12),
            (32, 14),
            (64, 17),
            (128, 19),
            (256, 21),
            (512, 23),
        ];
        for (l, want) in expect {
            let cut = net.minimal_cut(&[iv(1000, 1000 + l - 1)]).unwrap();
            assert_eq!(cut.bond_count, want, "l={l}");
            assert_eq!(
                cut.per_level_bonds.iter().sum::<usize>(),
                cut.bond_count,
                "per-level breakdown must sum to the total"
            );
            assert!(cut.routing.is_none());
        }
        // logarithmic growth: cut(64) - cut(8) within 2 of 2*log2(64/8)
        assert!((17i64 - 10 - 6).abs() <= 2);
    }

    #[test]
    fn two_block_routing_flips_once() {
        let n = 1 << 16;
        let net = MeraNetwork::new(n, 2).unwrap();
        let l = 16;
        let a0 = n / 3;
        let mut flips = Vec::new();
        let mut prev: Option<Regime> = None;
        for d in 1..300 {
            let a = iv(a0, a0 + l - 1);
            let b = iv(a0 + l - 1 + d, a0 + 2 * l - 2 + d);
            let win = net.minimal_cut(&[a, b]).unwrap().routing.unwrap();
            if let Some(p) = prev {
                if p != win {
                    flips.push((d, win));
                }
            }
            prev = Some(win);
        }
        assert_eq!(flips, vec![(11, Regime::Disconnected)]);
    }

    #[test]
    fn classifier_examples() {
        assert_eq!(regime_classify(16, 4, 2).unwrap(), Regime::Connected);
        assert_eq!(regime_classify(4, 16, 2).unwrap(), Regime::Disconnected);
        assert_eq!(regime_classify(8, 8, 2).unwrap(), Regime::Connected);
        assert!(matches!(regime_classify(4, 4, 5), Err(MeraError::BadBranch(5))));
        assert!(regime_classify(0, 4, 2).is_err());
    }

    #[test]
    fn classifier_matches_cut_winner_off_threshold() {
        let n = 1 << 16;
        let net = MeraNetwork::new(n, 2).unwrap();
        let a0 = n / 3;
        for le in 1..=8u32 {
            for de in 1..=8u32 {
                let (l, d) = (1usize << le, 1usize << de);
                let a = iv(a0, a0 + l - 1);
                let b = iv(a0 + l - 1 + d, a0 + 2 * l - 2 + d);
                let win = net.minimal_cut(&[a, b]).unwrap().routing.unwrap();
                let cls = regime_classify(l, d, 2).unwrap();
                if (le as i64 - de as i64).abs() > 1 {
                    assert_eq!(win, cls, "l={l} d={d}");
                }
            }
        }
    }

    #[test]
    fn reflection_symmetry() {
        let n = 1 << 12;
        let net = MeraNetwork::new(n, 2).unwrap();
        let refl = |b: SiteInterval| iv(n - 1 - b.hi(), n - 1 - b.lo());
        let a = iv(700, 715);
        let b = iv(900, 915);
        let direct = net.minimal_cut(&[a, b]).unwrap();
        let mirrored = net.minimal_cut(&[refl(b), refl(a)]).unwrap();
        assert_eq!(direct.bond_count, mirrored.bond_count);
        assert_eq!(direct.routing, mirrored.routing);
        assert_eq!(
            net.cone_overlap_level(a, b).unwrap(),
            net.cone_overlap_level(refl(b), refl(a)).unwrap()
        );
        let single = net.minimal_cut(&[a]).unwrap();
        let single_m = net.minimal_cut(&[refl(a)]).unwrap();
        assert_eq!(single.bond_count, single_m.bond_count);
    }

    #[test]
    fn maximum_size_network() {
        // 2^24 sites: interval arithmetic keeps this instant
        let n = 1 << 24;
        let net = MeraNetwork::new(n, 2).unwrap();
        assert_eq!(net.depth(), 24);
        let a = iv(n / 3, n / 3 + (1 << 12) - 1);
        let b = iv(n / 2, n / 2 + (1 << 12) - 1);
        let cut = net.minimal_cut(&[a, b]).unwrap();
        assert!(cut.bond_count > 0);
        assert_eq!(cut.per_level_bonds.len(), 25);
        assert!(net.cone_overlap_level(a, b).unwrap().is_some());
    }

    #[test]
    fn bond_entropy_scales_length() {
        let net = MeraNetwork::new(256, 2)
            .unwrap()
            .with_bond_entropy(0.5)
            .unwrap();
        let cut = net.minimal_cut(&[iv(40, 55)]).unwrap();
        assert_eq!(cut.length, cut.bond_count as f64 * 0.5);
    }
}
