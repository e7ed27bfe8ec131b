//! A concrete model of the line-shaped Brauer tree algebra with m edges and
//! exceptional multiplicity r, as quiver representations over GF(p).
//!
//! Quiver: vertices 0..m-1 (edge i of the tree is vertex i-1; edge 1 is
//! adjacent to the trivial-character end, edge m to the exceptional vertex).
//! Arrows `up[v]: v -> v+1`, `down[v]: v+1 -> v`, plus one loop at the last
//! vertex; representations that do not use the loop carry a zero matrix.
//!
//! Projectives are built by hand (top, heart strands, socle) and the
//! Hom/End dimension table is verified at construction by solving for all
//! arrow-commuting maps: dim End(P_i) = 2 for i < m, dim End(P_m) = r+1,
//! dim Hom(P_s, P_t) = [|s-t| = 1] otherwise. Algebra relations are never
//! materialized; the dimension table is the correctness certificate.
//!
//! Module-level operations: projective covers (top generators pushed along
//! the defining paths of each projective basis vector), syzygies, stripping
//! of projective summands (split idempotents found through the
//! top-coefficient pairing), minimal resolutions of the trivial module by
//! walking the tree, and isomorphism testing by exhaustive search for an
//! invertible element of the Hom space.

use serde::Serialize;
use std::collections::BTreeMap;

use crate::gf::{Mat, PrimeField};
use crate::partition::{saturated_beta_set, Partition};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arrow {
    Up(usize),
    Down(usize),
    Cycle,
}

/// A finite-dimensional representation of the line quiver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rep {
    pub m: usize,
    pub field: PrimeField,
    pub dims: Vec<usize>,
    pub up: Vec<Mat>,
    pub down: Vec<Mat>,
    pub cycle: Mat,
}

impl Rep {
    pub fn zero_module(m: usize, field: PrimeField) -> Rep {
        let dims = vec![0; m];
        let up = (0..m.saturating_sub(1))
            .map(|_| Mat::zero(0, 0, field))
            .collect();
        let down = (0..m.saturating_sub(1))
            .map(|_| Mat::zero(0, 0, field))
            .collect();
        Rep {
            m,
            field,
            dims,
            up,
            down,
            cycle: Mat::zero(0, 0, field),
        }
    }

    /// The simple module at edge `i` (1-based).
    pub fn simple(m: usize, field: PrimeField, i: usize) -> Rep {
        assert!(1 <= i && i <= m);
        let mut dims = vec![0; m];
        dims[i - 1] = 1;
        Rep::with_dims(m, field, dims)
    }

    /// Zero arrows, given dimension vector.
    pub fn with_dims(m: usize, field: PrimeField, dims: Vec<usize>) -> Rep {
        assert_eq!(dims.len(), m);
        let up = (0..m - 1)
            .map(|v| Mat::zero(dims[v + 1], dims[v], field))
            .collect();
        let down = (0..m - 1)
            .map(|v| Mat::zero(dims[v], dims[v + 1], field))
            .collect();
        let cycle = Mat::zero(dims[m - 1], dims[m - 1], field);
        Rep {
            m,
            field,
            dims,
            up,
            down,
            cycle,
        }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn arrows(&self) -> Vec<Arrow> {
        let mut a: Vec<Arrow> = (0..self.m - 1).map(Arrow::Up).collect();
        a.extend((0..self.m - 1).map(Arrow::Down));
        a.push(Arrow::Cycle);
        a
    }

    pub fn arrow_endpoints(&self, a: Arrow) -> (usize, usize) {
        match a {
            Arrow::Up(v) => (v, v + 1),
            Arrow::Down(v) => (v + 1, v),
            Arrow::Cycle => (self.m - 1, self.m - 1),
        }
    }

    pub fn arrow_matrix(&self, a: Arrow) -> &Mat {
        match a {
            Arrow::Up(v) => &self.up[v],
            Arrow::Down(v) => &self.down[v],
            Arrow::Cycle => &self.cycle,
        }
    }

    pub fn arrow_matrix_mut(&mut self, a: Arrow) -> &mut Mat {
        match a {
            Arrow::Up(v) => &mut self.up[v],
            Arrow::Down(v) => &mut self.down[v],
            Arrow::Cycle => &mut self.cycle,
        }
    }

    pub fn validate(&self) -> Result<()> {
        for a in self.arrows() {
            let (u, w) = self.arrow_endpoints(a);
            let mat = self.arrow_matrix(a);
            if mat.rows != self.dims[w] || mat.cols != self.dims[u] {
                return Err(Error::ModelViolation(format!(
                    "arrow {a:?} has shape {}x{}, expected {}x{}",
                    mat.rows, mat.cols, self.dims[w], self.dims[u]
                )));
            }
        }
        Ok(())
    }

    /// Block-diagonal direct sum; returns per-part per-vertex offsets too.
    pub fn direct_sum(parts: &[&Rep], m: usize, field: PrimeField) -> (Rep, Vec<Vec<usize>>) {
        let mut dims = vec![0usize; m];
        let mut offsets = Vec::with_capacity(parts.len());
        for part in parts {
            offsets.push(dims.clone());
            for (dv, pv) in dims.iter_mut().zip(&part.dims) {
                *dv += pv;
            }
        }
        let mut sum = Rep::with_dims(m, field, dims);
        for (pi, part) in parts.iter().enumerate() {
            for a in sum.arrows() {
                let (u, w) = sum.arrow_endpoints(a);
                let src_off = offsets[pi][u];
                let dst_off = offsets[pi][w];
                let block = part.arrow_matrix(a).clone();
                let mat = sum.arrow_matrix_mut(a);
                for i in 0..block.rows {
                    for j in 0..block.cols {
                        mat.set(dst_off + i, src_off + j, block.get(i, j));
                    }
                }
            }
        }
        (sum, offsets)
    }

    /// Per-vertex dimension of the radical (sum of images of all arrows).
    pub fn radical_dims(&self) -> Vec<usize> {
        (0..self.m)
            .map(|v| {
                let mut cols: Vec<Vec<u64>> = Vec::new();
                for a in self.arrows() {
                    let (_, w) = self.arrow_endpoints(a);
                    if w != v {
                        continue;
                    }
                    let mat = self.arrow_matrix(a);
                    for j in 0..mat.cols {
                        cols.push(mat.column(j));
                    }
                }
                if cols.is_empty() {
                    0
                } else {
                    Mat::from_columns(self.dims[v], &cols, self.field).rank()
                }
            })
            .collect()
    }

    pub fn top_dims(&self) -> Vec<usize> {
        let rad = self.radical_dims();
        (0..self.m).map(|v| self.dims[v] - rad[v]).collect()
    }

    /// Per-vertex dimension of the socle (joint kernel of all arrows out
    /// of each vertex).
    pub fn socle_dims(&self) -> Vec<usize> {
        (0..self.m)
            .map(|v| {
                let mut stacked: Vec<Vec<u64>> = Vec::new();
                for a in self.arrows() {
                    let (u, _) = self.arrow_endpoints(a);
                    if u != v {
                        continue;
                    }
                    let mat = self.arrow_matrix(a);
                    for i in 0..mat.rows {
                        stacked.push((0..mat.cols).map(|j| mat.get(i, j)).collect());
                    }
                }
                if stacked.is_empty() {
                    self.dims[v]
                } else {
                    let m = Mat::from_rows(stacked, self.field);
                    m.kernel_basis().cols
                }
            })
            .collect()
    }

    /// Composition-factor multiplicities = the dimension vector (1-based
    /// edge index -> multiplicity).
    pub fn composition_factors(&self) -> BTreeMap<usize, usize> {
        self.dims
            .iter()
            .enumerate()
            .filter(|(_, &d)| d > 0)
            .map(|(v, &d)| (v + 1, d))
            .collect()
    }

    /// Unit-vector indices at vertex `v` spanning a complement of the
    /// radical (deterministic choice).
    fn top_generator_indices(&self, v: usize) -> Vec<usize> {
        let mut cols: Vec<Vec<u64>> = Vec::new();
        for a in self.arrows() {
            let (_, w) = self.arrow_endpoints(a);
            if w != v {
                continue;
            }
            let mat = self.arrow_matrix(a);
            for j in 0..mat.cols {
                cols.push(mat.column(j));
            }
        }
        let k = cols.len();
        let rad = Mat::from_columns(self.dims[v], &cols, self.field);
        let aug = rad.hstack(&Mat::identity(self.dims[v], self.field));
        let (_, pivots) = aug.rref();
        pivots
            .into_iter()
            .filter(|&c| c >= k)
            .map(|c| c - k)
            .collect()
    }
}

/// A morphism of representations: one matrix per vertex, commuting with all
/// arrows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepMap {
    pub maps: Vec<Mat>,
}

impl RepMap {
    pub fn zero(src: &Rep, dst: &Rep) -> RepMap {
        RepMap {
            maps: (0..src.m)
                .map(|v| Mat::zero(dst.dims[v], src.dims[v], src.field))
                .collect(),
        }
    }

    pub fn identity(rep: &Rep) -> RepMap {
        RepMap {
            maps: (0..rep.m)
                .map(|v| Mat::identity(rep.dims[v], rep.field))
                .collect(),
        }
    }

    pub fn is_valid(&self, src: &Rep, dst: &Rep) -> bool {
        for v in 0..src.m {
            if self.maps[v].rows != dst.dims[v] || self.maps[v].cols != src.dims[v] {
                return false;
            }
        }
        for a in src.arrows() {
            let (u, w) = src.arrow_endpoints(a);
            let lhs = dst.arrow_matrix(a).mul(&self.maps[u]);
            let rhs = self.maps[w].mul(src.arrow_matrix(a));
            if lhs != rhs {
                return false;
            }
        }
        true
    }

    /// g o f (f first).
    pub fn compose(g: &RepMap, f: &RepMap) -> RepMap {
        RepMap {
            maps: g
                .maps
                .iter()
                .zip(&f.maps)
                .map(|(gm, fm)| gm.mul(fm))
                .collect(),
        }
    }

    pub fn add(&self, other: &RepMap) -> RepMap {
        RepMap {
            maps: self
                .maps
                .iter()
                .zip(&other.maps)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: u64) -> RepMap {
        RepMap {
            maps: self.maps.iter().map(|m| m.scale(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(|m| m.is_zero())
    }

    /// All vertex matrices square and invertible.
    pub fn is_isomorphism(&self) -> bool {
        self.maps.iter().all(|m| m.is_invertible())
    }

    /// Vertex-major, row-major flattening (the canonical coordinate order
    /// used by Hom bases).
    pub fn flatten(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for m in &self.maps {
            out.extend(m.flatten());
        }
        out
    }

    pub fn unflatten(src: &Rep, dst: &Rep, data: &[u64]) -> RepMap {
        let mut maps = Vec::with_capacity(src.m);
        let mut pos = 0;
        for v in 0..src.m {
            let rows = dst.dims[v];
            let cols = src.dims[v];
            let mut mat = Mat::zero(rows, cols, src.field);
            for i in 0..rows {
                for j in 0..cols {
                    mat.set(i, j, data[pos]);
                    pos += 1;
                }
            }
            maps.push(mat);
        }
        assert_eq!(pos, data.len());
        RepMap { maps }
    }
}

/// A canonical basis of Hom(M, N): echelonized kernel of the commuting
/// equations, in the flattening order of [`RepMap::flatten`].
#[derive(Debug, Clone)]
pub struct HomBasis {
    pub maps: Vec<RepMap>,
    free_positions: Vec<usize>,
    flat_len: usize,
}

impl HomBasis {
    pub fn dim(&self) -> usize {
        self.maps.len()
    }

    /// Coordinates of an arbitrary commuting map in this basis; panics via
    /// ModelViolation if the map is outside the span (cannot happen for
    /// genuine RepMaps).
    pub fn coords_of(&self, map: &RepMap) -> Result<Vec<u64>> {
        let flat = map.flatten();
        assert_eq!(flat.len(), self.flat_len);
        let coords: Vec<u64> = self.free_positions.iter().map(|&p| flat[p]).collect();
        // verify the reconstruction
        let field = map.maps.first().map(|m| m.f);
        if let Some(f) = field {
            let mut recon = vec![0u64; self.flat_len];
            for (k, b) in self.maps.iter().enumerate() {
                if coords[k] == 0 {
                    continue;
                }
                for (pos, val) in b.flatten().into_iter().enumerate() {
                    recon[pos] = f.add(recon[pos], f.mul(coords[k], val));
                }
            }
            if recon != flat {
                return Err(Error::ModelViolation(
                    "map outside the computed Hom basis span".into(),
                ));
            }
        }
        Ok(coords)
    }
}

/// Basis of the space of arrow-commuting maps M -> N.
pub fn hom_basis(src: &Rep, dst: &Rep) -> HomBasis {
    assert_eq!(src.m, dst.m);
    assert_eq!(src.field, dst.field);
    let m = src.m;
    let field = src.field;
    // variable layout mirrors RepMap::flatten
    let mut var_offset = vec![0usize; m + 1];
    for v in 0..m {
        var_offset[v + 1] = var_offset[v] + dst.dims[v] * src.dims[v];
    }
    let nvars = var_offset[m];
    let var_index =
        |v: usize, i: usize, j: usize| var_offset[v] + i * src.dims[v] + j;

    let mut rows: Vec<Vec<u64>> = Vec::new();
    for a in src.arrows() {
        let (u, w) = src.arrow_endpoints(a);
        let ma = src.arrow_matrix(a);
        let na = dst.arrow_matrix(a);
        // (N_a f_u - f_w M_a)[i][j] = 0
        for i in 0..dst.dims[w] {
            for j in 0..src.dims[u] {
                let mut row = vec![0u64; nvars];
                for k in 0..dst.dims[u] {
                    let c = na.get(i, k);
                    if c != 0 {
                        let vi = var_index(u, k, j);
                        row[vi] = field.add(row[vi], c);
                    }
                }
                for k in 0..src.dims[w] {
                    let c = ma.get(k, j);
                    if c != 0 {
                        let vi = var_index(w, i, k);
                        row[vi] = field.sub(row[vi], c);
                    }
                }
                rows.push(row);
            }
        }
    }
    let eqs = Mat::from_rows(rows, field);
    let eqs = if eqs.cols == 0 {
        Mat::zero(0, nvars, field)
    } else {
        eqs
    };
    let (kernel, free_positions) = eqs.kernel_basis_with_free();
    let mut maps = Vec::with_capacity(kernel.cols);
    for j in 0..kernel.cols {
        let col = kernel.column(j);
        let map = RepMap::unflatten(src, dst, &col);
        debug_assert!(map.is_valid(src, dst));
        maps.push(map);
    }
    HomBasis {
        maps,
        free_positions,
        flat_len: nvars,
    }
}

/// Subrepresentation spanned by given per-vertex column bases (columns in
/// M-coordinates; they must be arrow-stable).
fn sub_rep_from_basis(mmod: &Rep, bases: &[Mat]) -> Result<(Rep, RepMap)> {
    let m = mmod.m;
    let field = mmod.field;
    let dims: Vec<usize> = bases.iter().map(|b| b.cols).collect();
    let mut sub = Rep::with_dims(m, field, dims);
    for a in mmod.arrows() {
        let (u, w) = mmod.arrow_endpoints(a);
        let image = mmod.arrow_matrix(a).mul(&bases[u]);
        let expressed = bases[w].solve(&image).ok_or_else(|| {
            Error::ModelViolation(format!("columns not arrow-stable under {a:?}"))
        })?;
        *sub.arrow_matrix_mut(a) = expressed;
    }
    sub.validate()?;
    let incl = RepMap {
        maps: bases.to_vec(),
    };
    debug_assert!(incl.is_valid(&sub, mmod));
    Ok((sub, incl))
}

/// Kernel of f: M -> N as a subrepresentation, with its inclusion.
pub fn kernel_subrep(mmod: &Rep, f: &RepMap) -> Result<(Rep, RepMap)> {
    let bases: Vec<Mat> = (0..mmod.m).map(|v| f.maps[v].kernel_basis()).collect();
    sub_rep_from_basis(mmod, &bases)
}

/// Quotient of M by the span of the given per-vertex columns (need not be
/// independent); returns the quotient and the projection.
pub fn quotient_rep(mmod: &Rep, sub_cols: &[Mat]) -> Result<(Rep, RepMap)> {
    let m = mmod.m;
    let field = mmod.field;
    let mut proj_maps = Vec::with_capacity(m);
    let mut section = Vec::with_capacity(m);
    let mut dims = Vec::with_capacity(m);
    for (v, sub) in sub_cols.iter().enumerate() {
        let dim = mmod.dims[v];
        let cols: Vec<Vec<u64>> = (0..sub.cols).map(|j| sub.column(j)).collect();
        let all = Mat::from_columns(dim, &cols, field);
        let aug = all.hstack(&Mat::identity(dim, field));
        let (_, pivots) = aug.rref();
        let sub_pivots: Vec<usize> = pivots.iter().copied().filter(|&c| c < all.cols).collect();
        let unit_pivots: Vec<usize> = pivots
            .iter()
            .copied()
            .filter(|&c| c >= all.cols)
            .map(|c| c - all.cols)
            .collect();
        let rank = sub_pivots.len();
        let q = dim - rank;
        // square change of basis [sub basis | complement units]
        let mut cols2: Vec<Vec<u64>> = sub_pivots.iter().map(|&j| all.column(j)).collect();
        for &u in &unit_pivots {
            let mut e = vec![0u64; dim];
            e[u] = 1;
            cols2.push(e);
        }
        let s = Mat::from_columns(dim, &cols2, field);
        let sinv = s
            .inverse()
            .ok_or_else(|| Error::ModelViolation("change of basis not invertible".into()))?;
        // projection = last q rows of S^{-1}; section = complement unit columns
        proj_maps.push(sinv.block(rank, dim, 0, dim));
        let sect_cols: Vec<Vec<u64>> = unit_pivots
            .iter()
            .map(|&u| {
                let mut e = vec![0u64; dim];
                e[u] = 1;
                e
            })
            .collect();
        section.push(Mat::from_columns(dim, &sect_cols, field));
        dims.push(q);
    }
    let mut quot = Rep::with_dims(m, field, dims);
    for a in mmod.arrows() {
        let (u, w) = mmod.arrow_endpoints(a);
        *quot.arrow_matrix_mut(a) = proj_maps[w]
            .mul(mmod.arrow_matrix(a))
            .mul(&section[u]);
    }
    quot.validate()?;
    let proj = RepMap { maps: proj_maps };
    if !proj.is_valid(mmod, &quot) {
        return Err(Error::ModelViolation(
            "projection does not commute: columns were not a subrepresentation".into(),
        ));
    }
    Ok((quot, proj))
}

/// A projective cover: the projective, its indecomposable indices (1-based,
/// with multiplicity, ordered by vertex), and the surjection.
#[derive(Debug, Clone)]
pub struct Cover {
    pub proj_indices: Vec<usize>,
    pub source: Rep,
    pub map: RepMap,
}

/// The line Brauer tree algebra model.
pub struct BrauerLine {
    pub m: usize,
    pub r: usize,
    pub field: PrimeField,
    projectives: Vec<Rep>,
    /// basis_paths[i][v][k] = defining path of the k-th basis vector of
    /// P_{i+1} at vertex v (a word in arrows applied to the top generator).
    basis_paths: Vec<Vec<Vec<Vec<Arrow>>>>,
    hom_pp: Vec<Vec<HomBasis>>,
}

/// Builds the line with m edges, exceptional multiplicity r, over GF(p),
/// and verifies the Hom/End dimension table at construction.
pub fn build_line(m: usize, r: usize, p: u64) -> Result<BrauerLine> {
    if m < 1 || r < 1 {
        return Err(Error::InvalidArgument("need m >= 1 and r >= 1".into()));
    }
    let field = PrimeField::new(p)?;
    let mut projectives = Vec::with_capacity(m);
    let mut basis_paths = Vec::with_capacity(m);

    for i in 1..=m {
        let (rep, paths) = build_projective(m, r, field, i);
        rep.validate()?;
        projectives.push(rep);
        basis_paths.push(paths);
    }

    // Hom/End dimension table
    let mut hom_pp: Vec<Vec<HomBasis>> = Vec::with_capacity(m);
    for s in 1..=m {
        let mut row = Vec::with_capacity(m);
        for t in 1..=m {
            let basis = hom_basis(&projectives[s - 1], &projectives[t - 1]);
            let expected = expected_hom_dim(m, r, s, t);
            if basis.dim() != expected {
                return Err(Error::ModelViolation(format!(
                    "dim Hom(P_{s}, P_{t}) = {} on the line (m={m}, r={r}, p={p}), expected {expected}",
                    basis.dim()
                )));
            }
            row.push(basis);
        }
        hom_pp.push(row);
    }

    // tops are the expected simples
    for (i, proj) in projectives.iter().enumerate() {
        let tops = proj.top_dims();
        let ok = tops.iter().enumerate().all(|(v, &t)| t == usize::from(v == i));
        if !ok {
            return Err(Error::ModelViolation(format!(
                "top of P_{} is not S_{}",
                i + 1,
                i + 1
            )));
        }
    }

    Ok(BrauerLine {
        m,
        r,
        field,
        projectives,
        basis_paths,
        hom_pp,
    })
}

fn expected_hom_dim(m: usize, r: usize, s: usize, t: usize) -> usize {
    if s == t {
        if s == m {
            r + 1
        } else {
            2
        }
    } else if s.abs_diff(t) == 1 {
        1
    } else {
        0
    }
}

/// Projective at edge i with its basis paths.
fn build_projective(
    m: usize,
    r: usize,
    field: PrimeField,
    i: usize,
) -> (Rep, Vec<Vec<Vec<Arrow>>>) {
    let mut paths: Vec<Vec<Vec<Arrow>>> = vec![Vec::new(); m];
    let rep;
    if m == 1 {
        // uniserial S_1^{r+1} along the loop
        let mut rp = Rep::with_dims(1, field, vec![r + 1]);
        for b in 0..r {
            rp.cycle.set(b + 1, b, 1);
        }
        paths[0] = (0..=r).map(|b| vec![Arrow::Cycle; b]).collect();
        rep = rp;
    } else if i == 1 {
        // [t: S_1; h: S_2; s: S_1]
        let mut dims = vec![0; m];
        dims[0] = 2;
        dims[1] = 1;
        let mut rp = Rep::with_dims(m, field, dims);
        rp.up[0].set(0, 0, 1); // t -> h
        rp.down[0].set(1, 0, 1); // h -> s
        paths[0] = vec![vec![], vec![Arrow::Up(0), Arrow::Down(0)]];
        paths[1] = vec![vec![Arrow::Up(0)]];
        rep = rp;
    } else if i < m {
        // interior: [t: S_i; l: S_{i-1}, r: S_{i+1}; s: S_i]
        let u = i - 1;
        let mut dims = vec![0; m];
        dims[u] = 2;
        dims[u - 1] = 1;
        dims[u + 1] = 1;
        let mut rp = Rep::with_dims(m, field, dims);
        rp.down[u - 1].set(0, 0, 1); // t -> l
        rp.up[u - 1].set(1, 0, 1); // l -> s
        rp.up[u].set(0, 0, 1); // t -> r
        rp.down[u].set(1, 0, 1); // r -> s
        paths[u] = vec![vec![], vec![Arrow::Down(u - 1), Arrow::Up(u - 1)]];
        paths[u - 1] = vec![vec![Arrow::Down(u - 1)]];
        paths[u + 1] = vec![vec![Arrow::Up(u)]];
        rep = rp;
    } else {
        // i == m: [t; z_1..z_{r-1} (loop strand); s] at vertex m-1, w at m-2
        let u = m - 1;
        let mut dims = vec![0; m];
        dims[u] = r + 1;
        dims[u - 1] = 1;
        let mut rp = Rep::with_dims(m, field, dims);
        rp.down[u - 1].set(0, 0, 1); // t -> w
        rp.up[u - 1].set(r, 0, 1); // w -> s (socle index r)
        if r >= 2 {
            for b in 0..r - 1 {
                rp.cycle.set(b + 1, b, 1); // t -> z_1 -> ... -> z_{r-1}
            }
            rp.cycle.set(r, r - 1, 1); // z_{r-1} -> s
        }
        let mut vm: Vec<Vec<Arrow>> = vec![vec![]];
        for k in 1..r {
            vm.push(vec![Arrow::Cycle; k]);
        }
        vm.push(vec![Arrow::Down(u - 1), Arrow::Up(u - 1)]);
        paths[u] = vm;
        paths[u - 1] = vec![vec![Arrow::Down(u - 1)]];
        rep = rp;
    }
    (rep, paths)
}

/// Applies a path of arrows to a column vector at vertex `v0`.
fn apply_path(mmod: &Rep, v0: usize, vec: &Mat, path: &[Arrow]) -> (usize, Mat) {
    let mut v = v0;
    let mut cur = vec.clone();
    for &a in path {
        let (src, dst) = mmod.arrow_endpoints(a);
        assert_eq!(src, v, "path leaves the carried vertex");
        cur = mmod.arrow_matrix(a).mul(&cur);
        v = dst;
    }
    (v, cur)
}

/// A minimal projective resolution of the trivial module, with its walk.
#[derive(Debug, Clone)]
pub struct Resolution {
    /// 1-based projective index of each term T_0, T_1, ...
    pub proj: Vec<usize>,
    pub terms: Vec<Rep>,
    /// diffs[k]: T_{k+1} -> T_k.
    pub diffs: Vec<RepMap>,
    /// omegas[k] = Omega^{ k+1 } of the trivial module.
    pub omegas: Vec<Rep>,
}

impl BrauerLine {
    pub fn projective(&self, i: usize) -> &Rep {
        &self.projectives[i - 1]
    }

    pub fn simple(&self, i: usize) -> Rep {
        Rep::simple(self.m, self.field, i)
    }

    /// The trivial module k = S_1.
    pub fn trivial(&self) -> Rep {
        self.simple(1)
    }

    pub fn hom_pp(&self, s: usize, t: usize) -> &HomBasis {
        &self.hom_pp[s - 1][t - 1]
    }

    /// Hom dimension table as a matrix of dims (1-based in both indices).
    pub fn hom_dim_table(&self) -> Vec<Vec<usize>> {
        (1..=self.m)
            .map(|s| (1..=self.m).map(|t| self.hom_pp(s, t).dim()).collect())
            .collect()
    }

    /// Minimal projective cover of M. Errors when no surjective lift exists
    /// (which would mean M is not a module over the modeled algebra).
    pub fn projective_cover(&self, mmod: &Rep) -> Result<Cover> {
        let m = self.m;
        let field = self.field;
        let mut proj_indices = Vec::new();
        let mut parts: Vec<&Rep> = Vec::new();
        let mut generators: Vec<(usize, usize)> = Vec::new(); // (vertex, unit index)
        for v in 0..m {
            for idx in mmod.top_generator_indices(v) {
                proj_indices.push(v + 1);
                parts.push(&self.projectives[v]);
                generators.push((v, idx));
            }
        }
        let (source, offsets) = Rep::direct_sum(&parts, m, field);
        let mut map = RepMap::zero(&source, mmod);
        for (pi, &(v, gen_idx)) in generators.iter().enumerate() {
            let mut gen = Mat::zero(mmod.dims[v], 1, field);
            gen.set(gen_idx, 0, 1);
            let paths = &self.basis_paths[v]; // P_{v+1}
            for (w, vertex_paths) in paths.iter().enumerate() {
                for (b, path) in vertex_paths.iter().enumerate() {
                    let (vend, img) = apply_path(mmod, v, &gen, path);
                    assert_eq!(vend, w, "basis path lands at its declared vertex");
                    let col = offsets[pi][w] + b;
                    for row in 0..mmod.dims[w] {
                        map.maps[w].set(row, col, img.get(row, 0));
                    }
                }
            }
        }
        if !map.is_valid(&source, mmod) {
            return Err(Error::ModelViolation(
                "projective cover candidate does not commute with the arrows".into(),
            ));
        }
        for v in 0..m {
            if map.maps[v].rank() != mmod.dims[v] {
                return Err(Error::ModelViolation(format!(
                    "projective cover candidate not surjective at vertex {v}"
                )));
            }
        }
        Ok(Cover {
            proj_indices,
            source,
            map,
        })
    }

    /// Kernel of the projective cover.
    pub fn syzygy(&self, mmod: &Rep) -> Result<Rep> {
        let cover = self.projective_cover(mmod)?;
        let (k, _) = kernel_subrep(&cover.source, &cover.map)?;
        Ok(k)
    }

    /// Omega^e(M); for e = 0 strips the maximal projective summand.
    pub fn syzygy_power(&self, mmod: &Rep, e: usize) -> Result<Rep> {
        if e == 0 {
            return self.strip_projectives(mmod);
        }
        let mut cur = mmod.clone();
        for _ in 0..e {
            cur = self.syzygy(&cur)?;
        }
        Ok(cur)
    }

    /// Splits off projective summands until none remain.
    pub fn strip_projectives(&self, mmod: &Rep) -> Result<Rep> {
        let mut cur = mmod.clone();
        'outer: loop {
            if cur.is_zero() {
                return Ok(cur);
            }
            for i in 1..=self.m {
                let p = &self.projectives[i - 1];
                let into = hom_basis(p, &cur);
                if into.dim() == 0 {
                    continue;
                }
                let out_of = hom_basis(&cur, p);
                for g in &into.maps {
                    for h in &out_of.maps {
                        let hg = RepMap::compose(h, g);
                        // top coefficient: (h g)(t) has t-coordinate != 0
                        // exactly when h g is invertible in End(P_i)
                        let tau = hg.maps[i - 1].get(0, 0);
                        if tau == 0 {
                            continue;
                        }
                        let inv = RepMap {
                            maps: hg
                                .maps
                                .iter()
                                .map(|mm| {
                                    mm.inverse().ok_or_else(|| {
                                        Error::ModelViolation(
                                            "unit pairing but non-invertible composite".into(),
                                        )
                                    })
                                })
                                .collect::<Result<Vec<_>>>()?,
                        };
                        // e = g (hg)^{-1} h is idempotent with image P_i
                        let e = RepMap::compose(&RepMap::compose(g, &inv), h);
                        let (rest, _) = kernel_subrep(&cur, &e)?;
                        cur = rest;
                        continue 'outer;
                    }
                }
            }
            return Ok(cur);
        }
    }

    /// Minimal resolution of the trivial module of the given length
    /// (number of terms).
    pub fn resolution_of_trivial(&self, len: usize) -> Result<Resolution> {
        if len < 1 {
            return Err(Error::InvalidArgument("resolution length must be >= 1".into()));
        }
        let mut proj = Vec::with_capacity(len);
        let mut terms = Vec::with_capacity(len);
        let mut diffs = Vec::with_capacity(len.saturating_sub(1));
        let mut omegas = Vec::with_capacity(len);
        let mut current = self.trivial();
        let mut prev_incl: Option<RepMap> = None; // Omega^k -> T_{k-1}
        for step in 0..len {
            let cover = self.projective_cover(&current)?;
            if cover.proj_indices.len() != 1 {
                return Err(Error::ModelViolation(format!(
                    "walk module at step {step} has non-simple top {:?}",
                    cover.proj_indices
                )));
            }
            proj.push(cover.proj_indices[0]);
            terms.push(cover.source.clone());
            if let Some(incl) = prev_incl.take() {
                // T_step -> Omega^step -> T_{step-1}
                diffs.push(RepMap::compose(&incl, &cover.map));
            }
            let (kernel, incl) = kernel_subrep(&cover.source, &cover.map)?;
            omegas.push(kernel.clone());
            prev_incl = Some(incl);
            current = kernel;
        }
        Ok(Resolution {
            proj,
            terms,
            diffs,
            omegas,
        })
    }

    /// Report on Omega^2 of an interior simple: number of composition
    /// factors and simplicity after stripping projectives.
    pub fn omega2_interior_report(&self, i: usize) -> Result<Omega2Report> {
        if self.m < 4 {
            return Err(Error::InvalidArgument(
                "omega2 interior shape needs m >= 4".into(),
            ));
        }
        if !(1 < i && i < self.m) {
            return Err(Error::InvalidArgument(format!(
                "edge {i} is not interior on a line with {} edges",
                self.m
            )));
        }
        let om2 = self.syzygy_power(&self.simple(i), 2)?;
        let stripped = self.strip_projectives(&om2)?;
        let total = stripped.total_dim();
        let report = Omega2Report {
            i,
            factors: stripped.composition_factors(),
            total,
            simple_after_strip: total == 1,
            passed: total >= 3,
        };
        if !report.passed || report.simple_after_strip {
            return Err(Error::Inconsistency(format!(
                "Omega^2 S_{i} on the line (m={}, r={}) has {total} factors",
                self.m, self.r
            )));
        }
        Ok(report)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Omega2Report {
    pub i: usize,
    pub factors: BTreeMap<usize, usize>,
    pub total: usize,
    pub simple_after_strip: bool,
    pub passed: bool,
}

/// True iff an invertible commuting map exists; deterministic exhaustive
/// search over the Hom space (the spaces here are at most a few dimensions).
pub fn reps_isomorphic(a: &Rep, b: &Rep) -> Result<bool> {
    if a.dims != b.dims {
        return Ok(false);
    }
    if a.total_dim() == 0 {
        return Ok(true);
    }
    let basis = hom_basis(a, b);
    let k = basis.dim();
    if k == 0 {
        return Ok(false);
    }
    let p = a.field.p;
    let combos = (p as u128).checked_pow(k as u32);
    match combos {
        Some(c) if c <= 2_000_000 => {}
        _ => {
            return Err(Error::ModelViolation(format!(
                "isomorphism search space p^{k} too large"
            )))
        }
    }
    let mut coeffs = vec![0u64; k];
    loop {
        // odometer increment
        let mut pos = 0;
        loop {
            if pos == k {
                return Ok(false);
            }
            coeffs[pos] += 1;
            if coeffs[pos] < p {
                break;
            }
            coeffs[pos] = 0;
            pos += 1;
        }
        let mut map = RepMap::zero(a, b);
        for (c, bmap) in coeffs.iter().zip(&basis.maps) {
            if *c != 0 {
                map = map.add(&bmap.scale(*c));
            }
        }
        if map.is_isomorphism() {
            return Ok(true);
        }
    }
}

/// Partition labels of the line's edges for the principal Phi_m-block of
/// GL_n(q), in the regime m <= n < 2m. For n = m every edge is pinned
/// (hooks); for n > m only edge 1 and the walk positions j = m+d-n+1 forced
/// by the admissible d are pinned; the rest stay unresolved.
#[derive(Debug, Clone, Serialize)]
pub struct EdgeLabels {
    pub n: u32,
    pub m: u32,
    pub labels: BTreeMap<usize, Partition>,
    pub unresolved: Vec<usize>,
}

pub fn edge_partition_labels(n: u32, m: u32) -> Result<EdgeLabels> {
    if !(m <= n && n < 2 * m) {
        return Err(Error::UnsupportedRegime(format!(
            "edge labels need m <= n < 2m, got n={n}, m={m}"
        )));
    }
    let mut labels = BTreeMap::new();
    if n == m {
        for i in 1..=m as usize {
            let mut parts = vec![n - i as u32 + 1];
            parts.extend(std::iter::repeat_n(1, i - 1));
            labels.insert(i, Partition::new(parts)?);
        }
    } else {
        labels.insert(1, Partition::row(n));
        // admissible d: m > d and m > n-d+1
        for d in (n - m + 2)..=(m - 1) {
            let j = (m + d - n + 1) as usize;
            let mu = Partition::row(n - d);
            let x = saturated_beta_set(&mu, d);
            let label = x.add_hook(n - m, d)?;
            // cross-check against the closed form (n-d, n-m+1, 1^{m+d-n-1})
            let mut parts = vec![n - d, n - m + 1];
            parts.extend(std::iter::repeat_n(1, (m + d - n - 1) as usize));
            let closed = Partition::new(parts)?;
            if label != closed {
                return Err(Error::ModelViolation(format!(
                    "abacus label {label} differs from closed form {closed} at (n,m,d)=({n},{m},{d})"
                )));
            }
            labels.insert(j, label);
        }
    }
    let unresolved = (1..=m as usize).filter(|i| !labels.contains_key(i)).collect();
    Ok(EdgeLabels {
        n,
        m,
        labels,
        unresolved,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(m: usize, r: usize, p: u64) -> BrauerLine {
        build_line(m, r, p).unwrap()
    }

    #[test]
    fn construction_invariants_sample() {
        // the full m <= 8, r <= 3, p in {2,3,5} sweep runs in the acceptance
        // suite; spot-check here
        for (m, r, p) in [(5usize, 1usize, 2u64), (3, 2, 3), (1, 2, 5), (2, 3, 2)] {
            let l = line(m, r, p);
            for s in 1..=m {
                for t in 1..=m {
                    assert_eq!(l.hom_pp(s, t).dim(), expected_hom_dim(m, r, s, t));
                }
            }
        }
    }

    #[test]
    fn p4_composition_factors_x54() {
        let l = line(5, 1, 2);
        let p4 = l.projective(4);
        let factors = p4.composition_factors();
        assert_eq!(factors.get(&4), Some(&2));
        assert_eq!(factors.get(&3), Some(&1));
        assert_eq!(factors.get(&5), Some(&1));
        assert_eq!(p4.total_dim(), 4);
    }

    #[test]
    fn end_of_single_edge_line() {
        let l = line(1, 2, 2);
        assert_eq!(l.hom_pp(1, 1).dim(), 3);
    }

    #[test]
    fn distant_hom_vanishes() {
        let l = line(3, 1, 2);
        assert_eq!(l.hom_pp(1, 3).dim(), 0);
        let l4 = line(4, 1, 2);
        assert_eq!(hom_basis(&l4.simple(1), l4.projective(3)).dim(), 0);
    }

    #[test]
    fn covers() {
        let l = line(4, 1, 2);
        let c = l.projective_cover(&l.simple(1)).unwrap();
        assert_eq!(c.proj_indices, vec![1]);
        // cover of a projective is itself with zero kernel
        let c = l.projective_cover(l.projective(3)).unwrap();
        assert_eq!(c.proj_indices, vec![3]);
        let (k, _) = kernel_subrep(&c.source, &c.map).unwrap();
        assert!(k.is_zero());
        // cover of Omega k is P_2
        let om = l.syzygy(&l.trivial()).unwrap();
        let c = l.projective_cover(&om).unwrap();
        assert_eq!(c.proj_indices, vec![2]);
    }

    #[test]
    fn walk_factors_and_period() {
        for (m, r) in [(4usize, 1usize), (4, 2), (5, 1), (3, 3)] {
            let l = line(m, r, 2);
            let k = l.trivial();
            for i in 1..m {
                let om = l.syzygy_power(&k, i).unwrap();
                let mut expect = BTreeMap::new();
                expect.insert(i, 1);
                expect.insert(i + 1, 1);
                assert_eq!(om.composition_factors(), expect, "m={m} r={r} i={i}");
            }
            // exceptional step: Omega^m k is uniserial S_m^r
            let om = l.syzygy_power(&k, m).unwrap();
            let mut expect = BTreeMap::new();
            expect.insert(m, r);
            assert_eq!(om.composition_factors(), expect);
            assert_eq!(om.top_dims().iter().sum::<usize>(), 1);
            // period 2m
            let om = l.syzygy_power(&k, 2 * m).unwrap();
            assert!(reps_isomorphic(&om, &k).unwrap(), "m={m} r={r}");
            // middle of the way back: m < i < 2m has two factors
            for i in m + 1..2 * m {
                let om = l.syzygy_power(&k, i).unwrap();
                assert_eq!(om.total_dim(), 2, "m={m} r={r} i={i}");
            }
        }
    }

    #[test]
    fn gl4_walk_endpoint() {
        // m = 4: Omega^5 k has factors {S_3, S_4}, the (S(21^2) over S(1^4))
        // two-layer module
        let l = line(4, 1, 2);
        let om = l.syzygy_power(&l.trivial(), 5).unwrap();
        let mut expect = BTreeMap::new();
        expect.insert(3, 1);
        expect.insert(4, 1);
        assert_eq!(om.composition_factors(), expect);
    }

    #[test]
    fn resolution_terms() {
        let l = line(5, 1, 2);
        let res = l.resolution_of_trivial(6).unwrap();
        assert_eq!(res.proj, vec![1, 2, 3, 4, 5, 5]);
        // differentials compose to zero and land in the radical
        for k in 0..res.diffs.len() {
            let d = &res.diffs[k];
            assert!(d.is_valid(&res.terms[k + 1], &res.terms[k]));
            if k + 1 < res.diffs.len() {
                assert!(RepMap::compose(d, &res.diffs[k + 1]).is_zero());
            }
        }
        let l1 = line(1, 2, 2);
        let res = l1.resolution_of_trivial(4).unwrap();
        assert_eq!(res.proj, vec![1, 1, 1, 1]);
        // alternating differential depths 1 and r: image ranks r, 1, r
        let ranks: Vec<usize> = res.diffs.iter().map(|d| d.maps[0].rank()).collect();
        assert_eq!(ranks, vec![2, 1, 2]);
        // L = 1: the bare cover of k
        let res = l.resolution_of_trivial(1).unwrap();
        assert_eq!(res.proj, vec![1]);
        assert!(res.diffs.is_empty());
    }

    /// Minimality: every resolution differential lands inside the radical
    /// of its target.
    #[test]
    fn resolution_differentials_in_radical() {
        use crate::gf::Mat;
        for (m, r) in [(4usize, 1usize), (5, 2), (2, 3)] {
            let l = line(m, r, 3);
            let res = l.resolution_of_trivial(2 * m + 1).unwrap();
            for (k, d) in res.diffs.iter().enumerate() {
                let target = &res.terms[k];
                for v in 0..m {
                    // radical basis at v: columns of all incoming arrows
                    let mut cols: Vec<Vec<u64>> = Vec::new();
                    for a in target.arrows() {
                        let (_, w) = target.arrow_endpoints(a);
                        if w != v {
                            continue;
                        }
                        let mat = target.arrow_matrix(a);
                        for j in 0..mat.cols {
                            cols.push(mat.column(j));
                        }
                    }
                    let rad = Mat::from_columns(target.dims[v], &cols, l.field);
                    assert!(
                        rad.solve(&d.maps[v]).is_some(),
                        "differential {k} escapes the radical at vertex {v} (m={m}, r={r})"
                    );
                }
            }
        }
    }

    #[test]
    fn omega2_interior() {
        let l = line(5, 1, 2);
        let rep = l.omega2_interior_report(3).unwrap();
        assert_eq!(rep.total, 5);
        assert!(!rep.simple_after_strip);
        let l2 = line(5, 2, 2);
        assert!(!l2.omega2_interior_report(3).unwrap().simple_after_strip);
        assert!(l.omega2_interior_report(1).is_err());
        assert!(l.omega2_interior_report(5).is_err());
    }

    #[test]
    fn isomorphism_tests() {
        let l = line(3, 1, 2);
        assert!(reps_isomorphic(l.projective(2), l.projective(2)).unwrap());
        let om = l.syzygy(&l.trivial()).unwrap();
        assert!(!reps_isomorphic(&om, &l.trivial()).unwrap());
        let om6 = l.syzygy_power(&l.trivial(), 6).unwrap();
        assert!(reps_isomorphic(&om6, &l.trivial()).unwrap());
    }

    #[test]
    fn stripping() {
        let l = line(3, 2, 3);
        let p2 = l.projective(2).clone();
        let k = l.trivial();
        let (sum, _) = Rep::direct_sum(&[&p2, &k], l.m, l.field);
        let stripped = l.strip_projectives(&sum).unwrap();
        assert_eq!(stripped.dims, k.dims);
        assert!(reps_isomorphic(&stripped, &k).unwrap());
        let bare = l.strip_projectives(&p2).unwrap();
        assert!(bare.is_zero());
    }

    #[test]
    fn edge_labels() {
        fn p(parts: &[u32]) -> Partition {
            Partition::new(parts.to_vec()).unwrap()
        }
        let e = edge_partition_labels(5, 5).unwrap();
        assert_eq!(e.labels[&1], p(&[5]));
        assert_eq!(e.labels[&2], p(&[4, 1]));
        assert_eq!(e.labels[&3], p(&[3, 1, 1]));
        assert_eq!(e.labels[&4], p(&[2, 1, 1, 1]));
        assert_eq!(e.labels[&5], p(&[1, 1, 1, 1, 1]));
        assert!(e.unresolved.is_empty());

        let e = edge_partition_labels(4, 4).unwrap();
        assert_eq!(e.labels[&4], p(&[1, 1, 1, 1]));
        assert_eq!(e.labels[&3], p(&[2, 1, 1]));

        let e = edge_partition_labels(8, 7).unwrap();
        assert_eq!(e.labels[&1], p(&[8]));
        assert_eq!(e.labels[&5], p(&[3, 2, 1, 1, 1]));
        assert!(e.unresolved.contains(&2));
        assert!(e.unresolved.contains(&7));

        assert!(edge_partition_labels(10, 5).is_err());
    }

    #[test]
    fn p_independence_of_hom_dims() {
        for p in [2u64, 3, 5] {
            let l = line(4, 2, p);
            assert_eq!(l.hom_dim_table(), line(4, 2, 2).hom_dim_table());
        }
    }
}
