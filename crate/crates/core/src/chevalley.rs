//! Chevalley-basis Lie algebra over Q(zeta_8): integer structure constants,
//! Killing form, adjoint matrices, and exact Cayley-transform matrices via
//! spectral projectors.
//!
//! Basis order: the simple coroots H_1..H_r, then one root vector X_alpha
//! per root in the root system's canonical order. The structure constants
//! N_{alpha,beta} are fixed by the extraspecial-pair convention (signs + on
//! extraspecial pairs, positive roots ordered by height then lex); all other
//! constants are propagated through Jacobi identities and verified
//! exhaustively.

use crate::cyclo::{rat_int, Cyclo8, Rat};
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::roots::{RootSystem, RootVec};
use std::collections::BTreeMap;

#[derive(Clone)]
pub struct LieAlgebra {
    pub rs: RootSystem,
    pub dim: usize,
    /// bracket[a][b] over the basis, as sparse (index, integer) pairs.
    bracket_table: Vec<Vec<Vec<(usize, i64)>>>,
    /// Adjoint matrix of each basis element.
    adjoint: Vec<Mat>,
    /// Killing form B(e_a, e_b) as integers.
    pub killing: Vec<Vec<i64>>,
    /// Structure constants N_{alpha,beta} for root pairs with alpha+beta a
    /// root, indexed by root indices.
    n_const: BTreeMap<(usize, usize), i64>,
    /// Coroot coordinates (in the H_i basis) per root.
    pub coroots: Vec<Vec<i64>>,
}

impl LieAlgebra {
    pub fn basis_index_h(&self, i: usize) -> usize {
        i
    }

    pub fn basis_index_root(&self, alpha: usize) -> usize {
        self.rs.rank + alpha
    }

    /// Structure constant N_{alpha,beta}, 0 if alpha+beta is not a root.
    pub fn n_constant(&self, a: usize, b: usize) -> i64 {
        self.n_const.get(&(a, b)).copied().unwrap_or(0)
    }

    pub fn adjoint_of_basis(&self, idx: usize) -> &Mat {
        &self.adjoint[idx]
    }

    /// ad(x) for an arbitrary element.
    pub fn ad(&self, x: &[Cyclo8]) -> Mat {
        let mut m = Mat::zero(self.dim, self.dim);
        for (a, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for i in 0..self.dim {
                for j in 0..self.dim {
                    if !self.adjoint[a][(i, j)].is_zero() {
                        let t = &self.adjoint[a][(i, j)] * c;
                        m[(i, j)] = &m[(i, j)] + &t;
                    }
                }
            }
        }
        m
    }

    pub fn bracket(&self, x: &[Cyclo8], y: &[Cyclo8]) -> Vec<Cyclo8> {
        let mut out = vec![Cyclo8::zero(); self.dim];
        for (a, ca) in x.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in y.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let f = ca * cb;
                for &(k, v) in &self.bracket_table[a][b] {
                    let t = f.scale(&rat_int(v));
                    out[k] = &out[k] + &t;
                }
            }
        }
        out
    }

    pub fn killing_form(&self, x: &[Cyclo8], y: &[Cyclo8]) -> Cyclo8 {
        let mut acc = Cyclo8::zero();
        for (a, ca) in x.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in y.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let k = self.killing[a][b];
                if k != 0 {
                    acc += &(ca * cb).scale(&rat_int(k));
                }
            }
        }
        acc
    }

    pub fn basis_vector(&self, idx: usize) -> Vec<Cyclo8> {
        let mut v = vec![Cyclo8::zero(); self.dim];
        v[idx] = Cyclo8::one();
        v
    }

    pub fn root_vector(&self, alpha: usize) -> Vec<Cyclo8> {
        self.basis_vector(self.basis_index_root(alpha))
    }

    /// The coroot H_alpha as an element (in the H_i block).
    pub fn coroot_vector(&self, alpha: usize) -> Vec<Cyclo8> {
        let mut v = vec![Cyclo8::zero(); self.dim];
        for (i, &c) in self.coroots[alpha].iter().enumerate() {
            v[i] = Cyclo8::from_int(c);
        }
        v
    }

    /// Value alpha(h) for h in the Cartan given by coordinates in the H_i
    /// basis (entries of h beyond the Cartan block are ignored).
    pub fn root_on_cartan(&self, alpha: usize, h: &[Cyclo8]) -> Cyclo8 {
        let mut acc = Cyclo8::zero();
        for j in 0..self.rs.rank {
            if h[j].is_zero() {
                continue;
            }
            let v = root_on_simple_coroot(&self.rs, alpha, j);
            if v != 0 {
                acc += &h[j].scale(&rat_int(v));
            }
        }
        acc
    }

    pub fn build(rs: RootSystem) -> Result<LieAlgebra> {
        let rank = rs.rank;
        let nroots = rs.num_roots();
        let dim = rank + nroots;
        let n_const = structure_constants(&rs)?;
        let coroots: Vec<Vec<i64>> = rs.roots.iter().map(|r| rs.coroot_coords(r)).collect();

        // Bracket table.
        let mut table = vec![vec![Vec::new(); dim]; dim];
        // [H_i, H_j] = 0. [H_i, X_a] = alpha(H_i) X_a.
        for i in 0..rank {
            for a in 0..nroots {
                let v = root_on_simple_coroot(&rs, a, i);
                if v != 0 {
                    table[i][rank + a] = vec![(rank + a, v)];
                    table[rank + a][i] = vec![(rank + a, -v)];
                }
            }
        }
        for a in 0..nroots {
            for b in 0..nroots {
                if b == rs.negative_of(a) {
                    // [X_a, X_{-a}] = H_a (the coroot).
                    if a < rs.n_pos {
                        let entries: Vec<(usize, i64)> = coroots[a]
                            .iter()
                            .enumerate()
                            .filter(|(_, &c)| c != 0)
                            .map(|(i, &c)| (i, c))
                            .collect();
                        table[rank + a][rank + b] = entries.clone();
                        table[rank + b][rank + a] =
                            entries.into_iter().map(|(i, c)| (i, -c)).collect();
                    }
                    continue;
                }
                let sum: RootVec = rs.roots[a]
                    .iter()
                    .zip(rs.roots[b].iter())
                    .map(|(x, y)| x + y)
                    .collect();
                if let Some(c) = rs.root_index(&sum) {
                    let n = *n_const.get(&(a, b)).ok_or_else(|| {
                        Error::InternalConsistency(format!("missing N for pair ({a},{b})"))
                    })?;
                    table[rank + a][rank + b] = vec![(rank + c, n)];
                }
            }
        }

        // Adjoint matrices.
        let mut adjoint = Vec::with_capacity(dim);
        for a in 0..dim {
            let mut m = Mat::zero(dim, dim);
            for b in 0..dim {
                for &(k, v) in &table[a][b] {
                    m[(k, b)] = Cyclo8::from_int(v);
                }
            }
            adjoint.push(m);
        }

        // Killing form (integer trace of integer matrices).
        let int_adj: Vec<Vec<Vec<i64>>> = (0..dim)
            .map(|a| {
                let mut m = vec![vec![0i64; dim]; dim];
                for b in 0..dim {
                    for &(k, v) in &table[a][b] {
                        m[k][b] = v;
                    }
                }
                m
            })
            .collect();
        let mut killing = vec![vec![0i64; dim]; dim];
        for a in 0..dim {
            for b in a..dim {
                let mut tr = 0i64;
                for i in 0..dim {
                    for k in 0..dim {
                        tr += int_adj[a][i][k] * int_adj[b][k][i];
                    }
                }
                killing[a][b] = tr;
                killing[b][a] = tr;
            }
        }

        let la = LieAlgebra { rs, dim, bracket_table: table, adjoint, killing, n_const, coroots };
        la.verify()?;
        Ok(la)
    }

    /// Exhaustive safety checks on the constructed algebra.
    fn verify(&self) -> Result<()> {
        let rs = &self.rs;
        // String property |N| = p+1 for all root pairs.
        for a in 0..rs.num_roots() {
            for b in 0..rs.num_roots() {
                if b == rs.negative_of(a) {
                    continue;
                }
                let sum: RootVec =
                    rs.roots[a].iter().zip(&rs.roots[b]).map(|(x, y)| x + y).collect();
                if rs.root_index(&sum).is_some() {
                    let n = self.n_constant(a, b);
                    let (p, _) = rs.root_string(&rs.roots[b], &rs.roots[a]);
                    if n.abs() != p + 1 {
                        return Err(Error::InternalConsistency(format!(
                            "|N({a},{b})| = {} but p+1 = {}",
                            n.abs(),
                            p + 1
                        )));
                    }
                }
            }
        }
        // Jacobi identity on all basis triples.
        for a in 0..self.dim {
            let ea = self.basis_vector(a);
            for b in (a + 1)..self.dim {
                let eb = self.basis_vector(b);
                let ab = self.bracket(&ea, &eb);
                for c in (b + 1)..self.dim {
                    let ec = self.basis_vector(c);
                    let bc = self.bracket(&eb, &ec);
                    let ca = self.bracket(&ec, &ea);
                    let mut acc = self.bracket(&ab, &ec);
                    let t2 = self.bracket(&bc, &ea);
                    let t3 = self.bracket(&ca, &eb);
                    for i in 0..self.dim {
                        acc[i] += &t2[i];
                        acc[i] += &t3[i];
                    }
                    if acc.iter().any(|x| !x.is_zero()) {
                        return Err(Error::InternalConsistency(format!(
                            "Jacobi fails on basis triple ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        // Killing form root grading: B(X_a, X_b) = 0 unless b = -a.
        for a in 0..rs.num_roots() {
            for b in 0..rs.num_roots() {
                let k = self.killing[rs.rank + a][rs.rank + b];
                if (b == rs.negative_of(a)) != (k != 0) {
                    return Err(Error::InternalConsistency("Killing grading violated".into()));
                }
            }
        }
        Ok(())
    }

    /// Ad of the Cayley element exp(pi/4 (X_{-alpha} - X_alpha)), computed
    /// exactly through spectral projectors: the argument is semisimple with
    /// spectrum in i*{-3..3}, so Ad = sum_m zeta^m P_m.
    pub fn cayley_matrix(&self, alpha: usize) -> Result<Mat> {
        let neg = self.rs.negative_of(alpha);
        let mut z = vec![Cyclo8::zero(); self.dim];
        z[self.basis_index_root(neg)] = Cyclo8::one();
        z[self.basis_index_root(alpha)] = Cyclo8::from_int(-1);
        let e = self.ad(&z);
        exp_i_semisimple(&e, 1)
    }

    /// exp(t ad Z) for nilpotent ad Z, as a finite polynomial.
    pub fn exp_nilpotent(&self, z: &[Cyclo8], t: &Cyclo8) -> Result<Mat> {
        let adz = self.ad(z);
        let mut term = Mat::identity(self.dim);
        let mut acc = Mat::identity(self.dim);
        let mut k = 1u32;
        loop {
            term = &term * &adz;
            if term.is_zero() {
                break;
            }
            if k as usize > self.dim {
                return Err(Error::NotNilpotent);
            }
            let coeff = t_pow_over_factorial(t, k);
            acc = acc.add(&term.scale(&coeff));
            k += 1;
        }
        Ok(acc)
    }

    pub fn is_nilpotent(&self, z: &[Cyclo8]) -> bool {
        let adz = self.ad(z);
        let mut m = adz.clone();
        for _ in 0..self.dim {
            if m.is_zero() {
                return true;
            }
            m = &m * &adz;
        }
        m.is_zero()
    }
}

fn t_pow_over_factorial(t: &Cyclo8, k: u32) -> Cyclo8 {
    let mut p = Cyclo8::one();
    let mut fact = Rat::from(num_bigint::BigInt::from(1));
    for i in 1..=k {
        p = &p * t;
        fact *= Rat::from(num_bigint::BigInt::from(i as i64));
    }
    p.scale(&fact.recip())
}

/// exp((k pi / 4) E) for E semisimple with spectrum inside i*{-3..3}:
/// returns sum_m zeta^{k m} P_m with Lagrange projectors P_m. Errors if the
/// spectrum assumption fails.
pub fn exp_i_semisimple(e: &Mat, k: i64) -> Result<Mat> {
    let n = e.rows;
    let ms: Vec<i64> = (-3..=3).collect();
    // Consistency: prod_m (E - i m) = 0.
    let mut prod = Mat::identity(n);
    for &m in &ms {
        let shift = Mat::identity(n).scale(&Cyclo8::i().scale(&rat_int(m)));
        prod = &prod * &e.sub(&shift);
    }
    if !prod.is_zero() {
        return Err(Error::InternalConsistency(
            "ad spectrum outside i*{-3..3}; structure constants suspect".into(),
        ));
    }
    let mut acc = Mat::zero(n, n);
    for &m in &ms {
        // P_m = prod_{m' != m} (E - i m') / (i m - i m').
        let mut p = Mat::identity(n);
        let mut denom = Cyclo8::one();
        for &mp in &ms {
            if mp == m {
                continue;
            }
            let shift = Mat::identity(n).scale(&Cyclo8::i().scale(&rat_int(mp)));
            p = &p * &e.sub(&shift);
            denom = &denom * &Cyclo8::i().scale(&rat_int(m - mp));
        }
        let p = p.scale(&denom.inv().expect("distinct eigenvalues"));
        acc = acc.add(&p.scale(&Cyclo8::zeta_pow(k * m)));
    }
    Ok(acc)
}

pub fn root_on_simple_coroot(rs: &RootSystem, alpha: usize, j: usize) -> i64 {
    // alpha(H_j) = sum_i n_i A_{ij}.
    rs.roots[alpha].iter().enumerate().map(|(i, &ni)| ni * rs.cartan[i][j]).sum()
}

/// Compute all structure constants N_{alpha,beta} via the extraspecial-pair
/// sign convention and Jacobi propagation.
fn structure_constants(rs: &RootSystem) -> Result<BTreeMap<(usize, usize), i64>> {
    let n = rs.num_roots();
    let mut known: BTreeMap<(usize, usize), i64> = BTreeMap::new();

    // Pairs (a, b) with a+b a root.
    let mut summable: Vec<(usize, usize, usize)> = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if b == rs.negative_of(a) || a == b {
                continue;
            }
            let sum: RootVec = rs.roots[a].iter().zip(&rs.roots[b]).map(|(x, y)| x + y).collect();
            if let Some(c) = rs.root_index(&sum) {
                summable.push((a, b, c));
            }
        }
    }

    // Extraspecial pairs: for each non-simple positive root gamma, the pair
    // (xi, gamma - xi) with xi the first positive root (in the canonical
    // height-lex order) such that gamma - xi is a positive root. Sign +.
    for c in 0..rs.n_pos {
        let gamma = &rs.roots[c];
        let height: i64 = gamma.iter().sum();
        if height == 1 {
            continue;
        }
        for a in 0..rs.n_pos {
            let diff: RootVec = gamma.iter().zip(&rs.roots[a]).map(|(g, x)| g - x).collect();
            if let Some(b) = rs.root_index(&diff) {
                if b < rs.n_pos {
                    let (p, _) = rs.root_string(&rs.roots[b], &rs.roots[a]);
                    known.insert((a, b), p + 1);
                    known.insert((b, a), -(p + 1));
                    break;
                }
            }
        }
    }

    // Propagate through antisymmetry, negation and Jacobi until fixpoint.
    let neg_pair = |a: usize, b: usize| (rs.negative_of(a), rs.negative_of(b));
    loop {
        let mut changed = false;
        // Antisymmetry and negation rules.
        let snapshot: Vec<((usize, usize), i64)> = known.iter().map(|(&k, &v)| (k, v)).collect();
        for ((a, b), v) in snapshot {
            if known.insert((b, a), -v) != Some(-v) {
                changed = true;
            }
            let (na, nb) = neg_pair(a, b);
            if known.insert((na, nb), -v) != Some(-v) {
                changed = true;
            }
        }
        // Cyclic relation for alpha+beta+gamma = 0:
        //   N(a,b)/(g,g) = N(b,g)/(a,a) = N(g,a)/(b,b).
        for &(a, b, c) in &summable {
            if known.contains_key(&(a, b)) {
                continue;
            }
            let g = rs.negative_of(c);
            let lsq = |r: usize| rs.inner(&rs.roots[r], &rs.roots[r]);
            if let Some(&v) = known.get(&(b, g)) {
                let num = v * lsq(g);
                let den = lsq(a);
                if num % den == 0 {
                    known.insert((a, b), num / den);
                    changed = true;
                    continue;
                }
            }
            if let Some(&v) = known.get(&(g, a)) {
                let num = v * lsq(g);
                let den = lsq(b);
                if num % den == 0 {
                    known.insert((a, b), num / den);
                    changed = true;
                }
            }
        }
        // Jacobi on root triples (x, y, z) with x+y+z a root and all
        // pairwise sums nonzero:
        //   N(y,z) N(x,y+z) + N(z,x) N(y,z+x) + N(x,y) N(z,x+y) = 0.
        for &(x, y, _) in &summable {
            for z in 0..n {
                if z == rs.negative_of(x) || z == rs.negative_of(y) || z == x || z == y {
                    continue;
                }
                let total: RootVec = (0..rs.rank)
                    .map(|i| rs.roots[x][i] + rs.roots[y][i] + rs.roots[z][i])
                    .collect();
                if !rs.is_root(&total) {
                    continue;
                }
                // Terms: (pair, cofactor-pair). A term vanishes when the
                // inner sum is not a root.
                let term = |p: usize, q: usize| -> Option<(usize, usize)> {
                    let s: RootVec =
                        rs.roots[p].iter().zip(&rs.roots[q]).map(|(u, v)| u + v).collect();
                    rs.root_index(&s).map(|idx| (idx, 0)).map(|_| {
                        let idx = rs.root_index(&s).unwrap();
                        (idx, idx)
                    })
                };
                let mut terms: Vec<Option<((usize, usize), (usize, usize))>> = Vec::new();
                // N(y,z) N(x, y+z)
                terms.push(term(y, z).map(|(s, _)| ((y, z), (x, s))));
                // N(z,x) N(y, z+x)
                terms.push(term(z, x).map(|(s, _)| ((z, x), (y, s))));
                // N(x,y) N(z, x+y)
                terms.push(term(x, y).map(|(s, _)| ((x, y), (z, s))));
                let live: Vec<((usize, usize), (usize, usize))> =
                    terms.into_iter().flatten().collect();
                // Evaluate: each live term is a product of two constants.
                let mut unknown: Vec<usize> = Vec::new();
                let mut values: Vec<Option<(i64, i64)>> = Vec::new();
                for (ti, &(p1, p2)) in live.iter().enumerate() {
                    let v1 = known.get(&p1).copied();
                    let v2 = known.get(&p2).copied();
                    match (v1, v2) {
                        (Some(a), Some(b)) => values.push(Some((a, b))),
                        _ => {
                            unknown.push(ti);
                            values.push(None);
                        }
                    }
                }
                if unknown.len() != 1 {
                    continue;
                }
                let ti = unknown[0];
                let (p1, p2) = live[ti];
                let v1 = known.get(&p1).copied();
                let v2 = known.get(&p2).copied();
                let rest: i64 = values.iter().flatten().map(|(a, b)| a * b).sum();
                // who is unknown in the product?
                match (v1, v2) {
                    (Some(a), None) => {
                        if a != 0 && rest % a == 0 {
                            let nv = -rest / a;
                            if known.insert(p2, nv) != Some(nv) {
                                changed = true;
                            }
                        }
                    }
                    (None, Some(b)) => {
                        if b != 0 && rest % b == 0 {
                            let nv = -rest / b;
                            if known.insert(p1, nv) != Some(nv) {
                                changed = true;
                            }
                        }
                    }
                    _ => {}
                }
            }
        }
        if !changed {
            break;
        }
    }

    // All summable pairs must be resolved.
    for &(a, b, _) in &summable {
        if !known.contains_key(&(a, b)) {
            return Err(Error::InternalConsistency(format!(
                "structure constant N({a},{b}) unresolved"
            )));
        }
    }
    known.retain(|&(a, b), _| {
        let sum: RootVec = rs.roots[a].iter().zip(&rs.roots[b]).map(|(x, y)| x + y).collect();
        rs.is_root(&sum)
    });
    Ok(known)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn algebra(name: &str) -> LieAlgebra {
        LieAlgebra::build(RootSystem::of_type(name).unwrap()).unwrap()
    }

    #[test]
    fn sl2_basics() {
        let la = algebra("A1");
        assert_eq!(la.dim, 3);
        // [X_a, X_{-a}] = H_a and B(H,H) = 8.
        let x = la.root_vector(0);
        let y = la.root_vector(1);
        let h = la.bracket(&x, &y);
        assert_eq!(h, la.coroot_vector(0));
        assert_eq!(la.killing[0][0], 8);
        // [H, X] = 2X.
        let hx = la.bracket(&la.basis_vector(0), &x);
        assert_eq!(hx[la.basis_index_root(0)], Cyclo8::from_int(2));
    }

    #[test]
    fn a2_simple_constants() {
        let la = algebra("A2");
        let i1 = la.rs.root_index(&vec![1, 0]).unwrap();
        let i2 = la.rs.root_index(&vec![0, 1]).unwrap();
        assert_eq!(la.n_constant(i1, i2).abs(), 1);
    }

    #[test]
    fn g2_dimension_and_grading() {
        let la = algebra("G2");
        assert_eq!(la.dim, 14);
        // Killing form vanishes off the pairing blocks (checked in verify),
        // and is nondegenerate.
        let b = Mat::from_fn(la.dim, la.dim, |i, j| Cyclo8::from_int(la.killing[i][j]));
        assert_eq!(b.rank(), la.dim);
    }

    #[test]
    fn killing_ad_invariance_spot() {
        let la = algebra("C2");
        for a in 0..la.dim {
            for b in 0..la.dim {
                for c in 0..la.dim {
                    let za = la.basis_vector(a);
                    let xb = la.basis_vector(b);
                    let yc = la.basis_vector(c);
                    let t1 = la.killing_form(&la.bracket(&za, &xb), &yc);
                    let t2 = la.killing_form(&xb, &la.bracket(&za, &yc));
                    assert!((&t1 + &t2).is_zero());
                }
            }
        }
    }

    #[test]
    fn cayley_sl2() {
        let la = algebra("A1");
        let c = la.cayley_matrix(0).unwrap();
        // Ad(c) H = X + X_{-}.
        let h = la.coroot_vector(0);
        let img = c.apply(&h);
        let mut expect = vec![Cyclo8::zero(); 3];
        expect[la.basis_index_root(0)] = Cyclo8::one();
        expect[la.basis_index_root(1)] = Cyclo8::one();
        assert_eq!(img, expect);
        // Ad(c)^2 H = -H.
        let c2 = &c * &c;
        let img2 = c2.apply(&h);
        let neg_h: Vec<Cyclo8> = h.iter().map(|x| -x).collect();
        assert_eq!(img2, neg_h);
    }

    #[test]
    fn cayley_order_eight() {
        for name in ["A1", "A2", "C2", "G2"] {
            let la = algebra(name);
            for alpha in 0..la.rs.n_pos.min(3) {
                let c = la.cayley_matrix(alpha).unwrap();
                assert_eq!(c.pow(8), Mat::identity(la.dim), "{name} root {alpha}");
            }
        }
    }

    #[test]
    fn cayley_is_bracket_and_killing_isometry() {
        let la = algebra("C2");
        let c = la.cayley_matrix(0).unwrap();
        for a in 0..la.dim {
            for b in 0..la.dim {
                let ea = la.basis_vector(a);
                let eb = la.basis_vector(b);
                let lhs = c.apply(&la.bracket(&ea, &eb));
                let rhs = la.bracket(&c.apply(&ea), &c.apply(&eb));
                assert_eq!(lhs, rhs);
                let k1 = la.killing_form(&c.apply(&ea), &c.apply(&eb));
                let k2 = la.killing_form(&ea, &eb);
                assert_eq!(k1, k2);
            }
        }
    }

    #[test]
    fn cayley_square_is_weyl_reflection_on_cartan() {
        for name in ["A2", "C2", "G2"] {
            let la = algebra(name);
            let rs = &la.rs;
            for alpha in 0..rs.n_pos {
                let c = la.cayley_matrix(alpha).unwrap();
                let c2 = &c * &c;
                // Restriction of c^2 to the Cartan equals s_alpha.
                for j in 0..rs.rank {
                    let h = la.basis_vector(j);
                    let img = c2.apply(&h);
                    // s_alpha(H_j) = H_j - alpha(H_j) H_alpha.
                    let aj = root_on_simple_coroot(rs, alpha, j);
                    let mut expect = vec![Cyclo8::zero(); la.dim];
                    expect[j] = Cyclo8::one();
                    for (i, &ci) in la.coroots[alpha].iter().enumerate() {
                        let t = Cyclo8::from_int(-aj * ci);
                        expect[i] = &expect[i] + &t;
                    }
                    assert_eq!(img, expect, "{name} alpha {alpha} H_{j}");
                }
            }
        }
    }

    #[test]
    fn exp_nilpotent_basic() {
        let la = algebra("A1");
        let x = la.root_vector(0);
        let m = la.exp_nilpotent(&x, &Cyclo8::one()).unwrap();
        // (ad X)^3 = 0 in sl2 adjoint: matrix is unipotent.
        let diff = m.sub(&Mat::identity(3));
        assert!(diff.pow(3).is_zero());
        // exp(0) = id.
        let zero = vec![Cyclo8::zero(); 3];
        assert_eq!(la.exp_nilpotent(&zero, &Cyclo8::one()).unwrap(), Mat::identity(3));
        // exp(tZ) exp(-tZ) = id.
        let t = Cyclo8::new(rat_int(2), rat_int(1), rat_int(0), rat_int(-1));
        let a = la.exp_nilpotent(&x, &t).unwrap();
        let b = la.exp_nilpotent(&x, &(-&t)).unwrap();
        assert_eq!(&a * &b, Mat::identity(3));
        // Non-nilpotent rejected.
        let h = la.basis_vector(0);
        assert!(la.exp_nilpotent(&h, &Cyclo8::one()).is_err());
    }
}
