//! Root systems of rank <= 4 from a Cartan matrix, with full Weyl group
//! enumeration. Roots live in simple-root coordinates; the Weyl action on
//! the Cartan subalgebra is kept as an integer matrix in coroot coordinates.

use crate::error::{Error, Result};
use std::collections::{BTreeMap, VecDeque};

pub type RootVec = Vec<i64>;

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub name: String,
    pub rank: usize,
    /// cartan[i][j] = <alpha_i, alpha_j^vee>.
    pub cartan: Vec<Vec<i64>>,
    /// All roots in simple-root coordinates; positives first, then their
    /// negatives in the same order.
    pub roots: Vec<RootVec>,
    pub n_pos: usize,
    index: BTreeMap<RootVec, usize>,
    /// Symmetrizer d_i = (alpha_i, alpha_i)/2 as integers.
    pub sym: Vec<i64>,
}

impl RootSystem {
    pub fn of_type(name: &str) -> Result<RootSystem> {
        let cartan: Vec<Vec<i64>> = match name {
            "A1" => vec![vec![2]],
            "A2" => vec![vec![2, -1], vec![-1, 2]],
            // alpha_1 short, alpha_2 long for both B2 and C2 presentations.
            "C2" => vec![vec![2, -1], vec![-2, 2]],
            "B2" => vec![vec![2, -2], vec![-1, 2]],
            // alpha_1 short, alpha_2 long.
            "G2" => vec![vec![2, -1], vec![-3, 2]],
            "C3" => vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]],
            _ => {
                return Err(Error::NotCartanMatrix(format!("unknown type {name}")));
            }
        };
        Self::from_cartan(name, cartan)
    }

    pub fn from_cartan(name: &str, cartan: Vec<Vec<i64>>) -> Result<RootSystem> {
        let rank = cartan.len();
        if rank == 0 || rank > 4 {
            return Err(Error::NotCartanMatrix(format!("rank {rank} out of range")));
        }
        for (i, row) in cartan.iter().enumerate() {
            if row.len() != rank {
                return Err(Error::NotCartanMatrix("not square".into()));
            }
            if row[i] != 2 {
                return Err(Error::NotCartanMatrix("diagonal must be 2".into()));
            }
            for (j, &a) in row.iter().enumerate() {
                if i != j {
                    if a > 0 {
                        return Err(Error::NotCartanMatrix("positive off-diagonal".into()));
                    }
                    if (a == 0) != (cartan[j][i] == 0) {
                        return Err(Error::NotCartanMatrix("zero pattern not symmetric".into()));
                    }
                    if a * cartan[j][i] > 3 {
                        return Err(Error::NotCartanMatrix("product of off-diagonals > 3".into()));
                    }
                }
            }
        }
        let sym = symmetrizer(&cartan)?;

        // Generate all roots by closing the simple roots under simple
        // reflections.
        let mut roots: Vec<RootVec> = Vec::new();
        let mut index = BTreeMap::new();
        let mut queue: VecDeque<RootVec> = VecDeque::new();
        for i in 0..rank {
            let mut v = vec![0i64; rank];
            v[i] = 1;
            queue.push_back(v);
        }
        while let Some(r) = queue.pop_front() {
            if index.contains_key(&r) {
                continue;
            }
            index.insert(r.clone(), usize::MAX);
            roots.push(r.clone());
            for s in 0..rank {
                let refl = reflect_simple(&cartan, &r, s);
                if !index.contains_key(&refl) {
                    queue.push_back(refl);
                }
            }
            let neg: RootVec = r.iter().map(|x| -x).collect();
            if !index.contains_key(&neg) {
                queue.push_back(neg);
            }
        }
        // Canonical order: positives by (height, lex), then negatives in the
        // matching order.
        let mut pos: Vec<RootVec> = roots.iter().filter(|r| is_positive(r)).cloned().collect();
        pos.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then(b.cmp(a))
        });
        let n_pos = pos.len();
        let mut ordered = pos.clone();
        ordered.extend(pos.iter().map(|r| r.iter().map(|x| -x).collect::<RootVec>()));
        if ordered.len() != roots.len() {
            return Err(Error::NotCartanMatrix("root set not symmetric".into()));
        }
        let mut index = BTreeMap::new();
        for (i, r) in ordered.iter().enumerate() {
            index.insert(r.clone(), i);
        }
        Ok(RootSystem { name: name.to_string(), rank, cartan, roots: ordered, n_pos, index, sym })
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn root_index(&self, r: &RootVec) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn is_root(&self, r: &RootVec) -> bool {
        self.index.contains_key(r)
    }

    pub fn negative_of(&self, i: usize) -> usize {
        if i < self.n_pos {
            i + self.n_pos
        } else {
            i - self.n_pos
        }
    }

    pub fn simple_root_index(&self, s: usize) -> usize {
        let mut v = vec![0i64; self.rank];
        v[s] = 1;
        self.index[&v]
    }

    /// Inner product (beta, gamma) in the symmetrized form.
    pub fn inner(&self, beta: &RootVec, gamma: &RootVec) -> i64 {
        let mut acc = 0;
        for i in 0..self.rank {
            for j in 0..self.rank {
                // (alpha_i, alpha_j) = d_j * A_ij.
                acc += beta[i] * gamma[j] * self.sym[j] * self.cartan[i][j];
            }
        }
        acc
    }

    /// <beta, alpha^vee> = 2 (beta, alpha) / (alpha, alpha), an integer.
    pub fn pairing(&self, beta: &RootVec, alpha: &RootVec) -> i64 {
        let num = 2 * self.inner(beta, alpha);
        let den = self.inner(alpha, alpha);
        debug_assert!(den > 0 && num % den == 0);
        num / den
    }

    pub fn root_length_sq(&self, i: usize) -> i64 {
        self.inner(&self.roots[i], &self.roots[i])
    }

    /// s_alpha(beta) for arbitrary roots.
    pub fn reflect(&self, beta: &RootVec, alpha: &RootVec) -> RootVec {
        let k = self.pairing(beta, alpha);
        beta.iter().zip(alpha.iter()).map(|(b, a)| b - k * a).collect()
    }

    /// Coroot of an arbitrary root in simple-coroot coordinates:
    /// alpha^vee = sum_i n_i d_i / d_alpha * alpha_i^vee.
    pub fn coroot_coords(&self, alpha: &RootVec) -> Vec<i64> {
        let d_alpha = self.inner(alpha, alpha) / 2;
        (0..self.rank)
            .map(|i| {
                let num = alpha[i] * self.sym[i];
                debug_assert!(num % d_alpha == 0);
                num / d_alpha
            })
            .collect()
    }

    /// The alpha-string through beta: largest (down, up) with
    /// beta - down*alpha ... beta + up*alpha inside the adjoint weight set
    /// (roots together with 0).
    pub fn root_string(&self, beta: &RootVec, alpha: &RootVec) -> (i64, i64) {
        let admissible = |v: &RootVec| v.iter().all(|&x| x == 0) || self.is_root(v);
        let mut down = 0;
        loop {
            let cand: RootVec =
                beta.iter().zip(alpha).map(|(b, a)| b - (down + 1) * a).collect();
            if admissible(&cand) {
                down += 1;
            } else {
                break;
            }
        }
        let mut up = 0;
        loop {
            let cand: RootVec = beta.iter().zip(alpha).map(|(b, a)| b + (up + 1) * a).collect();
            if admissible(&cand) {
                up += 1;
            } else {
                break;
            }
        }
        (down, up)
    }
}

fn reflect_simple(cartan: &[Vec<i64>], r: &RootVec, s: usize) -> RootVec {
    // <r, alpha_s^vee> = sum_i r_i A_is.
    let k: i64 = r.iter().enumerate().map(|(i, &ri)| ri * cartan[i][s]).sum();
    let mut out = r.clone();
    out[s] -= k;
    out
}

fn is_positive(r: &RootVec) -> bool {
    let s: i64 = r.iter().sum();
    s > 0
}

fn symmetrizer(cartan: &[Vec<i64>]) -> Result<Vec<i64>> {
    let rank = cartan.len();
    // Find positive integers d_i with d_j A_ij = d_i A_ji, i.e. d_i A_ij
    // is symmetric after weighting columns: d_j = d_i * A_ji / A_ij.
    // Work over rationals (as numerator/denominator pairs) and clear at the
    // end.
    let mut num = vec![0i64; rank];
    let mut den = vec![1i64; rank];
    num[0] = 1;
    loop {
        let mut changed = false;
        for i in 0..rank {
            for j in 0..rank {
                if cartan[i][j] != 0 && num[i] != 0 && num[j] == 0 {
                    num[j] = num[i] * cartan[j][i];
                    den[j] = den[i] * cartan[i][j];
                    if num[j] * den[j] < 0 {
                        num[j] = num[j].abs();
                        den[j] = den[j].abs();
                    }
                    changed = true;
                }
            }
        }
        if num.iter().all(|&x| x != 0) {
            break;
        }
        if !changed {
            // Disconnected diagram: seed the next component.
            if let Some(k) = num.iter().position(|&x| x == 0) {
                num[k] = 1;
            }
        }
    }
    let lcm = den.iter().fold(1i64, |acc, &d| {
        let d = d.abs().max(1);
        acc / gcd(acc, d) * d
    });
    let mut d: Vec<i64> = (0..rank).map(|i| num[i].abs() * (lcm / den[i].abs().max(1))).collect();
    let g = d.iter().fold(0i64, |acc, &x| gcd(acc, x));
    if g > 1 {
        for x in d.iter_mut() {
            *x /= g;
        }
    }
    // Verify.
    for i in 0..rank {
        for j in 0..rank {
            if d[j] * cartan[i][j] != d[i] * cartan[j][i] {
                return Err(Error::NotCartanMatrix("symmetrizer failed".into()));
            }
        }
    }
    if d.iter().any(|&x| x <= 0) {
        return Err(Error::NotCartanMatrix("symmetrizer failed".into()));
    }
    Ok(d)
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// One element of the complex Weyl group: a permutation of the root index
/// set, an integer matrix on coroot coordinates, and a shortlex-minimal
/// reduced word in the simple reflections.
#[derive(Clone, Debug)]
pub struct WeylElement {
    pub word: Vec<usize>,
    /// perm[i] = index of w(root_i).
    pub perm: Vec<usize>,
    /// h_mat[i][j]: w(H_j) = sum_i h_mat[i][j] H_i (columns are images of
    /// the simple coroots).
    pub h_mat: Vec<Vec<i64>>,
}

#[derive(Clone, Debug)]
pub struct WeylGroup {
    pub elements: Vec<WeylElement>,
    perm_index: BTreeMap<Vec<usize>, usize>,
    /// mult[a][b] = index of elements[a] * elements[b] (composition: apply b
    /// first, then a).
    pub mult: Vec<Vec<usize>>,
    pub inverse: Vec<usize>,
}

impl WeylGroup {
    pub fn generate(rs: &RootSystem) -> WeylGroup {
        let n = rs.num_roots();
        let rank = rs.rank;
        // Simple reflection permutations and coroot matrices.
        let mut gen_perm = Vec::new();
        let mut gen_hmat = Vec::new();
        for s in 0..rank {
            let alpha: RootVec = {
                let mut v = vec![0i64; rank];
                v[s] = 1;
                v
            };
            let perm: Vec<usize> =
                (0..n).map(|i| rs.root_index(&rs.reflect(&rs.roots[i], &alpha)).unwrap()).collect();
            // s_s(H_j) = H_j - alpha_s(H_j) H_s = H_j - A_{sj} H_s.
            let mut m = vec![vec![0i64; rank]; rank];
            for j in 0..rank {
                m[j][j] = 1;
            }
            for j in 0..rank {
                m[s][j] -= rs.cartan[s][j];
            }
            gen_perm.push(perm);
            gen_hmat.push(m);
        }

        let id = WeylElement {
            word: vec![],
            perm: (0..n).collect(),
            h_mat: {
                let mut m = vec![vec![0i64; rank]; rank];
                for j in 0..rank {
                    m[j][j] = 1;
                }
                m
            },
        };
        let mut elements = vec![id];
        let mut perm_index = BTreeMap::new();
        perm_index.insert(elements[0].perm.clone(), 0usize);
        // BFS over right multiplication keeps words shortlex-minimal.
        let mut head = 0;
        while head < elements.len() {
            let cur = elements[head].clone();
            for s in 0..rank {
                // (w * s_s): apply s_s first, then w.
                let perm: Vec<usize> = (0..n).map(|i| cur.perm[gen_perm[s][i]]).collect();
                if perm_index.contains_key(&perm) {
                    continue;
                }
                let h_mat = mat_mul_i64(&cur.h_mat, &gen_hmat[s]);
                let mut word = cur.word.clone();
                word.push(s);
                perm_index.insert(perm.clone(), elements.len());
                elements.push(WeylElement { word, perm, h_mat });
            }
            head += 1;
        }

        let m = elements.len();
        let mut mult = vec![vec![0usize; m]; m];
        for a in 0..m {
            for b in 0..m {
                let perm: Vec<usize> = (0..n).map(|i| elements[a].perm[elements[b].perm[i]]).collect();
                mult[a][b] = perm_index[&perm];
            }
        }
        let mut inverse = vec![0usize; m];
        for a in 0..m {
            inverse[a] = (0..m).find(|&b| mult[a][b] == 0).unwrap();
        }
        WeylGroup { elements, perm_index, mult, inverse }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn find_by_perm(&self, perm: &[usize]) -> Option<usize> {
        self.perm_index.get(perm).copied()
    }

    /// Index of the reflection in an arbitrary root.
    pub fn reflection(&self, rs: &RootSystem, root_idx: usize) -> usize {
        let alpha = &rs.roots[root_idx];
        let perm: Vec<usize> = (0..rs.num_roots())
            .map(|i| rs.root_index(&rs.reflect(&rs.roots[i], alpha)).unwrap())
            .collect();
        self.find_by_perm(&perm).expect("reflection is a Weyl element")
    }

    /// Subgroup closure of a generator set, as a sorted set of indices.
    pub fn subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.len()];
        seen[0] = true;
        let mut stack = vec![0usize];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mult[g][x];
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        (0..self.len()).filter(|&i| seen[i]).collect()
    }

    /// Word rendered as digit string ("e" for the identity).
    pub fn word_label(&self, w: usize) -> String {
        let word = &self.elements[w].word;
        if word.is_empty() {
            "e".to_string()
        } else {
            word.iter().map(|s| (s + 1).to_string()).collect()
        }
    }

    pub fn parse_word(&self, rs: &RootSystem, label: &str) -> Result<usize> {
        if label == "e" || label.is_empty() {
            return Ok(0);
        }
        let mut cur = 0usize;
        for ch in label.chars() {
            let s = ch
                .to_digit(10)
                .and_then(|d| if d >= 1 && (d as usize) <= rs.rank { Some(d as usize - 1) } else { None })
                .ok_or_else(|| Error::InvalidInput(format!("bad word character '{ch}'")))?;
            let refl = self.find_simple_reflection(rs, s);
            cur = self.mult[cur][refl];
        }
        Ok(cur)
    }

    fn find_simple_reflection(&self, rs: &RootSystem, s: usize) -> usize {
        self.reflection(rs, rs.simple_root_index(s))
    }
}

fn mat_mul_i64(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_counts() {
        for (name, nroots, npos) in
            [("A1", 2, 1), ("A2", 6, 3), ("B2", 8, 4), ("C2", 8, 4), ("G2", 12, 6), ("C3", 18, 9)]
        {
            let rs = RootSystem::of_type(name).unwrap();
            assert_eq!(rs.num_roots(), nroots, "{name}");
            assert_eq!(rs.n_pos, npos, "{name}");
            for i in 0..rs.num_roots() {
                assert_eq!(rs.pairing(&rs.roots[i], &rs.roots[i]), 2);
            }
        }
    }

    #[test]
    fn weyl_orders() {
        for (name, order) in [("A2", 6), ("B2", 8), ("C2", 8), ("G2", 12), ("C3", 48)] {
            let rs = RootSystem::of_type(name).unwrap();
            let w = WeylGroup::generate(&rs);
            assert_eq!(w.len(), order, "{name}");
        }
    }

    #[test]
    fn b2_longest_word() {
        let rs = RootSystem::of_type("B2").unwrap();
        let w = WeylGroup::generate(&rs);
        let maxlen = w.elements.iter().map(|e| e.word.len()).max().unwrap();
        assert_eq!(maxlen, 4);
    }

    #[test]
    fn weyl_preserves_pairing() {
        let rs = RootSystem::of_type("G2").unwrap();
        let w = WeylGroup::generate(&rs);
        for e in &w.elements {
            for i in 0..rs.num_roots() {
                for j in 0..rs.num_roots() {
                    let a = rs.pairing(&rs.roots[i], &rs.roots[j]);
                    let b = rs.pairing(&rs.roots[e.perm[i]], &rs.roots[e.perm[j]]);
                    assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn root_strings() {
        // B2 with short roots e1 +- e2: string of e1+e2 through e1-e2.
        let rs = RootSystem::of_type("B2").unwrap();
        // In B2 (alpha_1 long? our B2: alpha_1 = e1-e2 long... use explicit
        // vectors): short simples have length 2. Find two orthogonal short
        // roots.
        let min_len = rs.roots.iter().map(|x| rs.inner(x, x)).min().unwrap();
        let shorts: Vec<RootVec> =
            rs.roots.iter().filter(|r| rs.inner(r, r) == min_len).cloned().collect();
        let b = shorts
            .iter()
            .find(|r| rs.inner(r, &shorts[0]) == 0)
            .expect("orthogonal short root exists");
        let (down, up) = rs.root_string(&shorts[0], b);
        assert_eq!((down, up), (1, 1));
        assert_eq!(down - up, rs.pairing(&shorts[0], b));

        let a2 = RootSystem::of_type("A2").unwrap();
        let a1 = vec![1, 0];
        let a2r = vec![0, 1];
        assert_eq!(a2.root_string(&a1, &a2r), (0, 1));
        assert_eq!(a2.root_string(&a1, &a1), (2, 0));
    }

    #[test]
    fn reflections_involutive_and_braid() {
        let rs = RootSystem::of_type("G2").unwrap();
        let w = WeylGroup::generate(&rs);
        let s1 = w.reflection(&rs, rs.simple_root_index(0));
        let s2 = w.reflection(&rs, rs.simple_root_index(1));
        assert_eq!(w.mult[s1][s1], 0);
        assert_eq!(w.mult[s2][s2], 0);
        // Braid for G2: (s1 s2)^6 = e.
        let mut x = 0usize;
        for _ in 0..6 {
            x = w.mult[x][s1];
            x = w.mult[x][s2];
        }
        assert_eq!(x, 0);
    }

    #[test]
    fn string_property_all_pairs() {
        for name in ["A2", "B2", "G2", "C3"] {
            let rs = RootSystem::of_type(name).unwrap();
            for b in &rs.roots {
                for a in &rs.roots {
                    if b == a || *b == a.iter().map(|x| -x).collect::<Vec<_>>() {
                        continue;
                    }
                    let (p, q) = rs.root_string(b, a);
                    assert_eq!(p - q, rs.pairing(b, a), "{name}");
                }
            }
        }
    }

    #[test]
    fn bad_cartan_rejected() {
        assert!(RootSystem::from_cartan("X", vec![vec![2, 1], vec![1, 2]]).is_err());
        assert!(RootSystem::from_cartan("X", vec![vec![1]]).is_err());
        assert!(RootSystem::of_type("E8").is_err());
    }
}
