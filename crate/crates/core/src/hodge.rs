//! Weight filtrations, sl2-triples, Deligne bigradings, the naive limit
//! flip, polarizability and cuspidality tests, nilpotent-orbit consistency
//! checks, and boundary-component dimension formulas.

use crate::chevalley::{exp_i_semisimple, LieAlgebra};
use crate::cyclo::{rat, rat_int, Cyclo8};
use crate::error::{Error, Result};
use crate::linalg::{hermitian_signature, Mat, Subspace};
use crate::orbits::{OrbitSet, Session};
use crate::realform::{classify_frame, CartanFrame, Conjugation, RootClass};
use num_traits::Signed;
use std::collections::BTreeMap;

/// Increasing weight filtration, stored as cumulative subspaces per level.
#[derive(Clone)]
pub struct WeightFiltration {
    pub levels: Vec<(i64, Subspace)>,
}

impl WeightFiltration {
    pub fn at(&self, k: i64) -> Subspace {
        let ambient = self.levels.last().map(|(_, s)| s.ambient).unwrap_or(0);
        let mut cur = Subspace::zero(ambient);
        for (lvl, s) in &self.levels {
            if *lvl <= k {
                cur = s.clone();
            }
        }
        cur
    }

    pub fn gr_dim(&self, k: i64) -> usize {
        let below = self
            .levels
            .iter()
            .filter(|(l, _)| *l < k)
            .map(|(_, s)| s.dim())
            .max()
            .unwrap_or(0);
        self.at(k).dim() - below
    }
}

#[derive(Clone)]
pub struct Sl2Triple {
    pub n: Vec<Cyclo8>,
    pub y: Vec<Cyclo8>,
    pub n_plus: Vec<Cyclo8>,
}

/// Jacobson-Morozov completion of a nonzero nilpotent: (N, Y, N+) with
/// [Y,N] = -2N, [Y,N+] = 2N+, [N+,N] = Y.
pub fn jm_triple(la: &LieAlgebra, sigma: Option<&Conjugation>, n: &[Cyclo8]) -> Result<Sl2Triple> {
    if n.iter().all(|x| x.is_zero()) {
        return Err(Error::InvalidInput("Jacobson-Morozov needs a nonzero nilpotent".into()));
    }
    if !la.is_nilpotent(n) {
        return Err(Error::NotNilpotent);
    }
    let adn = la.ad(n);
    // Solve ad(N)^2 u = 2N, then Y := ad(N) u lies in the image of ad N and
    // satisfies [N, Y] = 2N i.e. [Y, N] = -2N.
    let adn2 = &adn * &adn;
    let rhs: Vec<Cyclo8> = n.iter().map(|x| x.scale(&rat_int(2))).collect();
    let u = adn2
        .solve(&rhs)
        .ok_or_else(|| Error::InternalConsistency("JM grading element system insoluble".into()))?;
    let mut y = adn.apply(&u);
    if let Some(s) = sigma {
        if s.apply(n) == n.to_vec() {
            let sy = s.apply(&y);
            y = (0..la.dim).map(|i| (&y[i] + &sy[i]).scale(&rat(1, 2))).collect();
        }
    }
    // N+ solves [N, N+] = -Y together with [Y, N+] = 2 N+.
    let ady = la.ad(&y);
    let dim = la.dim;
    let mut stacked = Mat::zero(2 * dim, dim);
    for i in 0..dim {
        for j in 0..dim {
            stacked[(i, j)] = adn[(i, j)].clone();
            stacked[(dim + i, j)] = ady[(i, j)].clone();
        }
        stacked[(dim + i, i)] = &stacked[(dim + i, i)] - &Cyclo8::from_int(2);
    }
    let mut target = vec![Cyclo8::zero(); 2 * dim];
    for i in 0..dim {
        target[i] = -&y[i];
    }
    let mut n_plus = stacked
        .solve(&target)
        .ok_or_else(|| Error::InternalConsistency("JM raising element system insoluble".into()))?;
    if let Some(s) = sigma {
        if s.apply(n) == n.to_vec() {
            let sn = s.apply(&n_plus);
            n_plus = (0..dim).map(|i| (&n_plus[i] + &sn[i]).scale(&rat(1, 2))).collect();
        }
    }
    let triple = Sl2Triple { n: n.to_vec(), y, n_plus };
    verify_triple(la, &triple)?;
    Ok(triple)
}

fn verify_triple(la: &LieAlgebra, t: &Sl2Triple) -> Result<()> {
    let yn = la.bracket(&t.y, &t.n);
    let want: Vec<Cyclo8> = t.n.iter().map(|x| x.scale(&rat_int(-2))).collect();
    if yn != want {
        return Err(Error::InternalConsistency("[Y,N] != -2N".into()));
    }
    let ynp = la.bracket(&t.y, &t.n_plus);
    let want: Vec<Cyclo8> = t.n_plus.iter().map(|x| x.scale(&rat_int(2))).collect();
    if ynp != want {
        return Err(Error::InternalConsistency("[Y,N+] != 2N+".into()));
    }
    let npn = la.bracket(&t.n_plus, &t.n);
    if npn != t.y {
        return Err(Error::InternalConsistency("[N+,N] != Y".into()));
    }
    Ok(())
}

/// The unique monodromy weight filtration of a nilpotent N, built from the
/// ad(Y)-eigenspaces of a Jacobson-Morozov triple and then re-verified by
/// independent rank checks of the defining conditions.
pub fn weight_filtration(
    la: &LieAlgebra,
    sigma: Option<&Conjugation>,
    n: &[Cyclo8],
) -> Result<WeightFiltration> {
    let dim = la.dim;
    if n.iter().all(|x| x.is_zero()) {
        return Ok(WeightFiltration {
            levels: vec![(-1, Subspace::zero(dim)), (0, Subspace::full(dim))],
        });
    }
    let triple = jm_triple(la, sigma, n)?;
    let ady = la.ad(&triple.y);
    // Eigenspace scan over the bounded integer spectrum.
    let mut eig: BTreeMap<i64, Subspace> = BTreeMap::new();
    let mut total = 0;
    for m in -12..=12i64 {
        let shift = Mat::identity(dim).scale(&Cyclo8::from_int(m));
        let ker = ady.sub(&shift).kernel();
        if ker.rows > 0 {
            total += ker.rows;
            eig.insert(m, Subspace::span(dim, &ker.rows_vec()));
        }
    }
    if total != dim {
        return Err(Error::InternalConsistency("ad(Y) spectrum not integral".into()));
    }
    let mut levels = Vec::new();
    let min = *eig.keys().next().unwrap();
    let max = *eig.keys().last().unwrap();
    let mut rows: Vec<Vec<Cyclo8>> = Vec::new();
    levels.push((min - 1, Subspace::zero(dim)));
    for k in min..=max {
        if let Some(s) = eig.get(&k) {
            rows.extend(s.basis.rows_vec());
        }
        levels.push((k, Subspace::span(dim, &rows)));
    }
    let w = WeightFiltration { levels };
    verify_weight_filtration(la, n, &w)?;
    Ok(w)
}

/// Independent verification of the two defining conditions of W(N).
pub fn verify_weight_filtration(la: &LieAlgebra, n: &[Cyclo8], w: &WeightFiltration) -> Result<()> {
    let adn = la.ad(n);
    let min = w.levels.first().unwrap().0;
    let max = w.levels.last().unwrap().0;
    // (i) N W_l <= W_{l-2}.
    for l in min..=max {
        let img = w.at(l).map(&adn);
        if !w.at(l - 2).contains_subspace(&img) {
            return Err(Error::InternalConsistency("W(N): N W_l not inside W_{l-2}".into()));
        }
    }
    // (ii) N^k : Gr_k -> Gr_{-k} is an isomorphism, via exact ranks.
    for k in 1..=max.max(-min) {
        let gr_k = w.gr_dim(k);
        let gr_mk = w.gr_dim(-k);
        if gr_k != gr_mk {
            return Err(Error::InternalConsistency("W(N): graded dims asymmetric".into()));
        }
        let nk = adn.pow(k as u32);
        let img = w.at(k).map(&nk);
        let dim_mod = img.sum(&w.at(-k - 1)).dim() - w.at(-k - 1).dim();
        if dim_mod != gr_k {
            return Err(Error::InternalConsistency(
                "W(N): N^k not an isomorphism on graded pieces".into(),
            ));
        }
    }
    Ok(())
}

/// A flag as a descending chain of subspaces. `at(p)` is the step function.
#[derive(Clone)]
pub struct FlagChain {
    pub levels: Vec<(i64, Subspace)>,
}

impl FlagChain {
    pub fn from_descending(levels: Vec<(i64, Subspace)>) -> FlagChain {
        FlagChain { levels }
    }

    pub fn ambient(&self) -> usize {
        self.levels.first().map(|(_, s)| s.ambient).unwrap_or(0)
    }

    pub fn at(&self, p: i64) -> Subspace {
        // levels are stored descending by level; F^p = the entry with the
        // smallest level >= p.
        let mut out = Subspace::zero(self.ambient());
        for (lvl, s) in &self.levels {
            if *lvl >= p {
                out = s.clone();
            } else {
                break;
            }
        }
        out
    }

    pub fn min_level(&self) -> i64 {
        self.levels.last().map(|(l, _)| *l).unwrap_or(0)
    }

    pub fn max_level(&self) -> i64 {
        self.levels.first().map(|(l, _)| *l).unwrap_or(0)
    }

    pub fn map(&self, m: &Mat) -> FlagChain {
        FlagChain {
            levels: self.levels.iter().map(|(l, s)| (*l, s.map(m))).collect(),
        }
    }

    pub fn conj(&self, sigma: &Conjugation) -> FlagChain {
        FlagChain {
            levels: self
                .levels
                .iter()
                .map(|(l, s)| {
                    let rows: Vec<Vec<Cyclo8>> =
                        (0..s.basis.rows).map(|i| sigma.apply(s.basis.row(i))).collect();
                    (*l, Subspace::span(s.ambient, &rows))
                })
                .collect(),
        }
    }
}

/// Mixed Hodge data: a flag, a weight filtration, and the Deligne bigrading
/// with its splitness marker.
pub struct MixedFlagData {
    pub f: FlagChain,
    pub w: WeightFiltration,
    pub deligne: BTreeMap<(i64, i64), Subspace>,
    pub is_split: bool,
}

impl MixedFlagData {
    pub fn dims(&self) -> BTreeMap<(i64, i64), usize> {
        self.deligne
            .iter()
            .filter(|(_, s)| s.dim() > 0)
            .map(|(&k, s)| (k, s.dim()))
            .collect()
    }
}

/// The closed-form Deligne splitting
/// I^{p,q} = F^p cap W_{p+q} cap (sigma F^q cap W_{p+q} +
///           sum_{j>=1} sigma F^{q-j} cap W_{p+q-j-1}).
pub fn deligne_bigrading(
    la: &LieAlgebra,
    sigma: &Conjugation,
    f: &FlagChain,
    w: &WeightFiltration,
) -> Result<MixedFlagData> {
    let dim = la.dim;
    let fbar = f.conj(sigma);
    let wmin = w.levels.first().unwrap().0;
    let wmax = w.levels.last().unwrap().0;
    let pmin = f.min_level() - 1;
    let pmax = f.max_level() + 1;
    let mut deligne = BTreeMap::new();
    let mut total = 0usize;
    for p in pmin..=pmax {
        for k in wmin..=wmax {
            let q = k - p;
            let mut corr = fbar.at(q).intersect(&w.at(k));
            let mut j = 1;
            loop {
                let term = fbar.at(q - j).intersect(&w.at(k - j - 1));
                let next = corr.sum(&term);
                // Once sigma F^{q-j} is everything and W_{k-j-1} has
                // bottomed out, further terms repeat.
                let done = q - j < fbar.min_level() && k - j - 1 < wmin;
                corr = next;
                j += 1;
                if done || j > 2 * (wmax - wmin + 2) {
                    break;
                }
            }
            let i_pq = f.at(p).intersect(&w.at(k)).intersect(&corr);
            if i_pq.dim() > 0 {
                total += i_pq.dim();
                deligne.insert((p, q), i_pq);
            }
        }
    }
    if total != dim {
        return Err(Error::InvalidInput(
            "not a mixed Hodge structure: Deligne pieces do not span".into(),
        ));
    }
    // (a) F^a = sum of I^{p,q} with p >= a; (b) W_b = sum with p+q <= b.
    for p in pmin..=pmax {
        let expect: usize =
            deligne.iter().filter(|(&(pp, _), _)| pp >= p).map(|(_, s)| s.dim()).sum();
        if expect != f.at(p).dim() {
            return Err(Error::InvalidInput(format!(
                "not a mixed Hodge structure: F^{p} dimension mismatch"
            )));
        }
    }
    for b in wmin..=wmax {
        let expect: usize =
            deligne.iter().filter(|(&(pp, qq), _)| pp + qq <= b).map(|(_, s)| s.dim()).sum();
        if expect != w.at(b).dim() {
            return Err(Error::InvalidInput(format!(
                "not a mixed Hodge structure: W_{b} dimension mismatch"
            )));
        }
    }
    // (c) conj(I^{b,a}) == I^{a,b} mod lower-order terms; equality iff
    // split.
    let mut is_split = true;
    for (&(p, q), s) in &deligne {
        let rows: Vec<Vec<Cyclo8>> =
            (0..s.basis.rows).map(|i| sigma.apply(s.basis.row(i))).collect();
        let conj_s = Subspace::span(dim, &rows);
        let target = deligne.get(&(q, p)).cloned().unwrap_or_else(|| Subspace::zero(dim));
        if conj_s != target {
            is_split = false;
            // Congruence: conj(I^{p,q}) inside I^{q,p} + sum_{p'<q, q'<p}.
            let mut allowed = target;
            for (&(pp, qq), t) in &deligne {
                if pp < q && qq < p {
                    allowed = allowed.sum(t);
                }
            }
            if !allowed.contains_subspace(&conj_s) {
                return Err(Error::InvalidInput(
                    "Deligne conjugation congruence fails; not an R-MHS".into(),
                ));
            }
        }
    }
    Ok(MixedFlagData { f: f.clone(), w: w.clone(), deligne, is_split })
}

/// The naive limit of an R-split mixed flag: the antidiagonal flip
/// F-hat^a = sum over q <= -a of I^{p,q}.
pub fn naive_limit(
    la: &LieAlgebra,
    sigma: &Conjugation,
    mfd: &MixedFlagData,
    n: &[Cyclo8],
) -> Result<FlagChain> {
    if !mfd.is_split {
        return Err(Error::InvalidInput(
            "naive limit materialized only for R-split data; split the input first".into(),
        ));
    }
    let dim = la.dim;
    let qs: Vec<i64> = mfd.deligne.keys().map(|&(_, q)| q).collect();
    let amin = -qs.iter().max().unwrap();
    let amax = -qs.iter().min().unwrap();
    let mut levels = Vec::new();
    for a in (amin..=amax).rev() {
        let mut rows: Vec<Vec<Cyclo8>> = Vec::new();
        for (&(_, q), s) in &mfd.deligne {
            if q <= -a {
                rows.extend(s.basis.rows_vec());
            }
        }
        levels.push((a, Subspace::span(dim, &rows)));
    }
    let hat = FlagChain::from_descending(levels);
    // Upside-down filtration identity:
    // sum_p Fhat^p cap sigma(Fhat^{j-p}) = W(N)_{-j}.
    let hat_bar = hat.conj(sigma);
    let wmin = mfd.w.levels.first().unwrap().0;
    let wmax = mfd.w.levels.last().unwrap().0;
    for j in wmin..=wmax {
        let mut acc = Subspace::zero(dim);
        for p in hat.min_level()..=hat.max_level() {
            acc = acc.sum(&hat.at(p).intersect(&hat_bar.at(j - p)));
        }
        if acc != mfd.w.at(-j) {
            return Err(Error::InternalConsistency(
                "naive limit: upside-down weight filtration identity fails".into(),
            ));
        }
    }
    let _ = n;
    Ok(hat)
}

/// Antidiagonal flip on a dimension table.
pub fn flip_dims(dims: &BTreeMap<(i64, i64), usize>) -> BTreeMap<(i64, i64), usize> {
    dims.iter().map(|(&(p, q), &d)| ((-q, -p), d)).collect()
}

#[derive(Clone, Debug)]
pub struct ConsistencySample {
    pub y: i64,
    pub pure: bool,
    pub positive: bool,
}

impl ConsistencySample {
    pub fn pass(&self) -> bool {
        self.pure && self.positive
    }
}

/// For each sample y > 0, test whether exp(i y N) applied to the flag is a
/// polarized Hodge flag: (1) pure bigrading; (2) definite sign pattern
/// (-1)^p (-B)(v, sigma v) > 0 on each g^{p,-p}.
pub fn nilpotent_orbit_consistency(
    la: &LieAlgebra,
    sigma: &Conjugation,
    flag: &FlagChain,
    n: &[Cyclo8],
    samples: &[i64],
) -> Result<Vec<ConsistencySample>> {
    if !la.is_nilpotent(n) {
        return Err(Error::NotNilpotent);
    }
    let dim = la.dim;
    let mut out = Vec::new();
    for &y in samples {
        let iy = Cyclo8::i().scale(&rat_int(y));
        let m = la.exp_nilpotent(n, &iy)?;
        let moved = flag.map(&m);
        let moved_bar = moved.conj(sigma);
        // Hodge pieces H^p = F^p cap sigma(F^{-p}).
        let mut pure = true;
        let mut positive = true;
        let mut total = 0;
        for p in moved.min_level()..=moved.max_level() {
            let h = moved.at(p).intersect(&moved_bar.at(-p));
            total += h.dim();
            if h.dim() == 0 {
                continue;
            }
            let nb = h.basis.rows;
            let mut gram = Mat::zero(nb, nb);
            for i in 0..nb {
                for j in 0..nb {
                    let val =
                        -&la.killing_form(h.basis.row(i), &sigma.apply(h.basis.row(j)));
                    gram[(i, j)] = if p.rem_euclid(2) == 0 { val } else { -val };
                }
            }
            let (pos, neg, null) = hermitian_signature(&gram)?;
            if neg != 0 || null != 0 || pos != nb {
                positive = false;
            }
        }
        if total != dim {
            pure = false;
        }
        out.push(ConsistencySample { y, pure, positive });
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub enum Polarizability {
    Polarizable { witness: Option<Vec<Cyclo8>>, via: String },
    NotPolarizable { reason: String },
    Undetermined,
}

impl Polarizability {
    pub fn is_polarizable(&self) -> Option<bool> {
        match self {
            Polarizability::Polarizable { .. } => Some(true),
            Polarizability::NotPolarizable { .. } => Some(false),
            Polarizability::Undetermined => None,
        }
    }
}

/// Decision procedure for polarizability of a boundary stratum record.
pub fn polarizability(session: &Session, set: &OrbitSet, record: usize, height: i64) -> Result<Polarizability> {
    let rec = &set.records[record];
    let la = &session.la;
    let sigma = &session.sigma;
    let frame = &session.graph.frames[rec.frame];
    let p = session.p_values(rec.rep_w);
    let q = session.q_values(rec.frame, rec.rep_w)?;

    // Basis of g^{-1,-1} as transported root vectors.
    let low: Vec<usize> = (0..la.rs.num_roots()).filter(|&a| p[a] == -1 && q[a] == -1).collect();
    if low.is_empty() {
        return Ok(Polarizability::NotPolarizable { reason: "g^{-1,-1} = 0".into() });
    }
    // Real basis of the real points of g^{-1,-1}.
    let mut real_basis: Vec<Vec<Cyclo8>> = Vec::new();
    let mut seen: Vec<usize> = Vec::new();
    for &a in &low {
        if seen.contains(&a) {
            continue;
        }
        let partner = frame.tau[a];
        let v = frame.transporter.col(la.basis_index_root(a));
        if partner == a {
            for k in 0..4 {
                let tw: Vec<Cyclo8> = v.iter().map(|x| x * &Cyclo8::zeta_pow(k)).collect();
                let s = sigma.apply(&tw);
                let r: Vec<Cyclo8> = (0..la.dim).map(|i| &tw[i] + &s[i]).collect();
                if r.iter().any(|x| !x.is_zero()) {
                    real_basis.push(r);
                    break;
                }
            }
            seen.push(a);
        } else {
            let s = sigma.apply(&v);
            let r1: Vec<Cyclo8> = (0..la.dim).map(|i| &v[i] + &s[i]).collect();
            let tv: Vec<Cyclo8> = v.iter().map(|x| x * &Cyclo8::i()).collect();
            let s2 = sigma.apply(&tv);
            let r2: Vec<Cyclo8> = (0..la.dim).map(|i| &tv[i] + &s2[i]).collect();
            real_basis.push(r1);
            real_basis.push(r2);
            seen.push(a);
            seen.push(partner);
        }
    }
    if real_basis.len() != low.len() {
        return Err(Error::InternalConsistency("real form of g^{-1,-1} has wrong size".into()));
    }

    // Weight-symmetry precondition of condition (i): dims of g^{p,j-p} and
    // g^{p-j,-p} must agree for every (p, j).
    let table = &rec.hpq;
    for (&(pp, qq), &d) in table.iter() {
        let j = pp + qq;
        if j < 1 {
            continue;
        }
        let target = table.get(&(pp - j, -pp)).copied().unwrap_or(0);
        if target != d {
            return Ok(Polarizability::NotPolarizable {
                reason: format!("dim g^{{{pp},{qq}}} != dim g^{{{},{}}}", pp - j, -pp),
            });
        }
    }
    // Hard-Lefschetz precondition: condition (i) makes N-hat injective from
    // each graded level into the next one down, so the level dimensions
    // must be unimodal toward zero. Failure rules out every witness.
    let mut levels: BTreeMap<i64, usize> = BTreeMap::new();
    for (&(pp, qq), &d) in table.iter() {
        *levels.entry(pp + qq).or_insert(0) += d;
    }
    for (&j, &dim_j) in levels.iter() {
        if j < 2 {
            continue;
        }
        let below = levels.get(&(j - 2)).copied().unwrap_or(0);
        if dim_j > below {
            return Ok(Polarizability::NotPolarizable {
                reason: format!(
                    "graded dims not unimodal: dim at weight {j} exceeds weight {}",
                    j - 2
                ),
            });
        }
    }

    // Candidate search over rational combinations of bounded height.
    let coeffs = rational_heights(height);
    let k = real_basis.len();
    let mut directions: Vec<Vec<Cyclo8>> = Vec::new();
    let mut keys: Vec<String> = Vec::new();
    let mut counters = vec![0usize; k];
    loop {
        let cand: Vec<Cyclo8> = counters.iter().map(|&ci| coeffs[ci].clone()).collect();
        if cand.iter().any(|c| !c.is_zero()) {
            // Normalize by positive scaling only: signs matter for the
            // positivity condition at odd weights.
            let first = cand
                .iter()
                .find(|c| !c.is_zero())
                .and_then(|c| c.as_rational().cloned())
                .unwrap();
            let scale = Cyclo8::from_rat(first.abs().recip());
            let norm: Vec<String> = cand.iter().map(|c| format!("{}", c * &scale)).collect();
            let key = norm.join(",");
            if !keys.contains(&key) {
                keys.push(key);
                let mut v = vec![Cyclo8::zero(); la.dim];
                for (ci, c) in cand.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for i in 0..la.dim {
                        v[i] = &v[i] + &(c * &real_basis[ci][i]);
                    }
                }
                directions.push(v);
            }
        }
        // increment odometer
        let mut pos = 0;
        loop {
            if pos == k {
                break;
            }
            counters[pos] += 1;
            if counters[pos] < coeffs.len() {
                break;
            }
            counters[pos] = 0;
            pos += 1;
        }
        if pos == k {
            break;
        }
    }

    for cand in directions {
        if check_witness(session, table, &p, &q, frame, &cand)? {
            let via = if rec.codim == 1 {
                "codimension-one real root line".to_string()
            } else {
                "bounded rational search".to_string()
            };
            return Ok(Polarizability::Polarizable { witness: Some(cand), via });
        }
    }

    if session.grading.is_strongly_classical(la) {
        return Ok(Polarizability::Polarizable {
            witness: None,
            via: "strongly classical grading".into(),
        });
    }
    Ok(Polarizability::Undetermined)
}

fn rational_heights(height: i64) -> Vec<Cyclo8> {
    let mut out = vec![Cyclo8::zero()];
    for num in 1..=height {
        for den in 1..=height {
            if gcd(num, den) != 1 {
                continue;
            }
            out.push(Cyclo8::from_rat(rat(num, den)));
            out.push(Cyclo8::from_rat(rat(-num, den)));
        }
    }
    out
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

/// Conditions (i) and (ii) of the polarizability definition for a concrete
/// candidate N-hat.
fn check_witness(
    session: &Session,
    table: &BTreeMap<(i64, i64), usize>,
    p: &[i64],
    q: &[i64],
    frame: &CartanFrame,
    nhat: &[Cyclo8],
) -> Result<bool> {
    let la = &session.la;
    let sigma = &session.sigma;
    let adn = la.ad(nhat);
    let dim = la.dim;
    let jmax = table.keys().map(|&(pp, qq)| pp + qq).max().unwrap_or(0);

    // Collect the bigraded pieces as subspaces.
    let mut pieces: BTreeMap<(i64, i64), Subspace> = BTreeMap::new();
    for a in 0..la.rs.num_roots() {
        let key = (p[a], q[a]);
        let v = frame.transporter.col(la.basis_index_root(a));
        let cur = pieces.entry(key).or_insert_with(|| Subspace::zero(dim));
        let mut rows = cur.basis.rows_vec();
        rows.push(v);
        *cur = Subspace::span(dim, &rows);
    }
    let cartan_rows: Vec<Vec<Cyclo8>> =
        (0..session.rank()).map(|j| frame.transporter.col(j)).collect();
    {
        let cur = pieces.entry((0, 0)).or_insert_with(|| Subspace::zero(dim));
        let mut rows = cur.basis.rows_vec();
        rows.extend(cartan_rows);
        *cur = Subspace::span(dim, &rows);
    }

    // Condition (i): N^j : g^{p, j-p} -> g^{p-j, -p} isomorphisms.
    for j in 1..=jmax {
        let nj = adn.pow(j as u32);
        for (&(pp, qq), s) in &pieces {
            if pp + qq != j {
                continue;
            }
            let img = s.map(&nj);
            if img.dim() != s.dim() {
                return Ok(false);
            }
        }
    }
    // Condition (ii): positivity on primitive pieces.
    for j in 0..=jmax {
        let nj = adn.pow(j as u32);
        let nj1 = adn.pow(j as u32 + 1);
        let ker = Subspace::span(dim, &nj1.kernel().rows_vec());
        for (&(pp, qq), s) in &pieces {
            if pp + qq != j {
                continue;
            }
            let prim = s.intersect(&ker);
            if prim.dim() == 0 {
                continue;
            }
            let nb = prim.basis.rows;
            let mut gram = Mat::zero(nb, nb);
            // i^{-j} (-1)^{p+1} B(v, N^j conj(w)).
            let phase = Cyclo8::zeta_pow(-2 * j).scale(&rat_int(if (pp + 1).rem_euclid(2) == 0 {
                1
            } else {
                -1
            }));
            for a in 0..nb {
                for b in 0..nb {
                    let w = nj.apply(&sigma.apply(prim.basis.row(b)));
                    gram[(a, b)] = &la.killing_form(prim.basis.row(a), &w) * &phase;
                }
            }
            let (pos, neg, null) = hermitian_signature(&gram)?;
            if neg != 0 || null != 0 || pos != nb {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Expand a witness in the frame's transported root-vector coordinates and
/// return the root indices in its support.
pub fn witness_root_support(session: &Session, frame: usize, witness: &[Cyclo8]) -> Vec<usize> {
    let fr = &session.graph.frames[frame];
    let coords = fr.inv_transporter.apply(witness);
    (0..session.la.rs.num_roots())
        .filter(|&a| !coords[session.la.basis_index_root(a)].is_zero())
        .collect()
}

/// Cuspidality of a stratum: restrict to the Levi roots (p+q = 0), undo
/// Cayley transforms in real Levi roots, and test whether the residual
/// split directions centralize the Levi.
pub fn cuspidality(session: &Session, set: &OrbitSet, record: usize) -> Result<bool> {
    let rec = &set.records[record];
    let la = &session.la;
    let sigma = &session.sigma;
    let p = session.p_values(rec.rep_w);
    let q = session.q_values(rec.frame, rec.rep_w)?;
    let levi: Vec<usize> =
        (0..la.rs.num_roots()).filter(|&a| p[a] + q[a] == 0).collect();

    let mut frame = session.graph.frames[rec.frame].clone();
    for _ in 0..=session.rank() {
        let real_in_levi = levi
            .iter()
            .copied()
            .find(|&a| a < la.rs.n_pos && frame.class[a] == RootClass::Real);
        let Some(beta) = real_in_levi else { break };
        frame = inverse_cayley(session, &frame, beta)?;
    }
    // Residual split part: the (-1)-eigenspace of theta on the frame
    // Cartan; cuspidal iff every Levi root vanishes on it.
    let rank = session.rank();
    let m = &(&frame.inv_transporter * &session.theta) * &frame.transporter;
    let mut theta_h = Mat::zero(rank, rank);
    for i in 0..rank {
        for j in 0..rank {
            theta_h[(i, j)] = m[(i, j)].clone();
        }
    }
    let a_part = theta_h.add(&Mat::identity(rank)).kernel();
    for r in 0..a_part.rows {
        let h0_coords = a_part.row(r);
        for &alpha in &levi {
            let mut acc = Cyclo8::zero();
            for j in 0..rank {
                let v = crate::chevalley::root_on_simple_coroot(&la.rs, alpha, j);
                if v != 0 && !h0_coords[j].is_zero() {
                    acc += &h0_coords[j].scale(&rat_int(v));
                }
            }
            if !acc.is_zero() {
                return Ok(false);
            }
        }
    }
    let _ = sigma;
    Ok(true)
}

/// Inverse Cayley transform in a real root of the frame, via the exact
/// exponential of i times the real sl2 "sum" direction.
pub fn inverse_cayley(session: &Session, frame: &CartanFrame, beta: usize) -> Result<CartanFrame> {
    let la = &session.la;
    let sigma = &session.sigma;
    if frame.class[beta] != RootClass::Real {
        return Err(Error::InvalidInput(format!("root {beta} is not real in this frame")));
    }
    let dim = la.dim;
    let vb = frame.transporter.col(la.basis_index_root(beta));
    let vnb = frame.transporter.col(la.basis_index_root(la.rs.negative_of(beta)));
    let realify = |v: &Vec<Cyclo8>| -> Result<Vec<Cyclo8>> {
        for k in 0..4 {
            let tw: Vec<Cyclo8> = v.iter().map(|x| x * &Cyclo8::zeta_pow(k)).collect();
            let s = sigma.apply(&tw);
            let r: Vec<Cyclo8> = (0..dim).map(|i| &tw[i] + &s[i]).collect();
            if r.iter().any(|x| !x.is_zero()) {
                return Ok(r);
            }
        }
        Err(Error::InternalConsistency("real root line resists realification".into()))
    };
    let r_plus = realify(&vb)?;
    let r_minus0 = realify(&vnb)?;
    // Normalize the pair so that [[r+, r-], r+] = 2 r+.
    let h = la.bracket(&r_plus, &r_minus0);
    let hr = la.bracket(&h, &r_plus);
    // hr = s * r_plus for a scalar s.
    let idx = r_plus.iter().position(|x| !x.is_zero()).unwrap();
    let s = &hr[idx] * &r_plus[idx].inv().unwrap();
    if s.is_zero() {
        return Err(Error::InternalConsistency("degenerate real sl2".into()));
    }
    let factor = Cyclo8::from_int(2) * s.inv()?;
    let r_minus: Vec<Cyclo8> = r_minus0.iter().map(|x| x * &factor).collect();
    // Generator i (r+ + r-) has ad spectrum in iZ.
    let z: Vec<Cyclo8> = (0..dim)
        .map(|i| &(&r_plus[i] + &r_minus[i]) * &Cyclo8::i())
        .collect();
    let adz = la.ad(&z);
    let m = exp_i_semisimple(&adz, 1)?;
    let t = &m * &frame.transporter;
    let new = classify_frame(la, sigma, &session.theta, t, frame.path.clone(), frame.id + 100)?;
    if new.real_rank + 1 != frame.real_rank {
        return Err(Error::InternalConsistency(
            "inverse Cayley did not decrease the real rank".into(),
        ));
    }
    Ok(new)
}

/// Dimension report for a boundary component, per the exact formulas with
/// regions I, I', I'', II, II'.
#[derive(Clone, Debug, serde::Serialize)]
pub struct DimensionReport {
    pub dim_b: i64,
    pub dim_b_r: i64,
    pub dim_b_hat: i64,
    pub dim_d_n: i64,
    pub dim_orbit: i64,
    pub codim: i64,
    pub cond_alpha: bool,
    pub cond_beta: bool,
    pub cond_gamma: bool,
}

pub fn dimension_report(
    la: &LieAlgebra,
    mfd: &MixedFlagData,
    n: &[Cyclo8],
    dim_compact_dual: usize,
) -> Result<DimensionReport> {
    if !mfd.is_split {
        return Err(Error::InvalidInput("dimension report requires split data".into()));
    }
    let adn = la.ad(n);
    // Primitive dims on the LMHS side: for p+q >= 0,
    // P~^{p,q} = ker(N^{p+q+1}) cap I^{p,q}; z^{p,q} (p+q <= 0) mirrors.
    let mut z: BTreeMap<(i64, i64), usize> = BTreeMap::new();
    for (&(p, q), s) in &mfd.deligne {
        if p + q < 0 {
            continue;
        }
        let nk = adn.pow((p + q + 1) as u32);
        let ker = Subspace::span(la.dim, &nk.kernel().rows_vec());
        let prim = s.intersect(&ker).dim();
        if prim > 0 {
            z.insert((-q, -p), prim);
        }
    }
    let zv = |pred: &dyn Fn(i64, i64) -> bool| -> i64 {
        z.iter().filter(|(&(p, q), _)| pred(p, q)).map(|(_, &d)| d as i64).sum()
    };
    let region_i = zv(&|p, q| p < 0 && q >= 0 && p + q <= 0);
    let region_i_prime = zv(&|p, q| q > 0 && p + q <= 0);
    let region_i_dprime = zv(&|p, q| q > 0 && p + q < 0);
    let region_ii_prime = zv(&|p, q| p < 0 && q < 0);
    let diag_neg = zv(&|p, q| p < 0 && q == -p);

    // Codimension of the ambient naive-limit orbit from the flipped table.
    let dims = mfd.dims();
    let c: i64 = dims
        .iter()
        .filter(|(&(p, q), _)| p < 0 && q < 0)
        .map(|(_, &d)| d as i64)
        .sum();
    let d = dim_compact_dual as i64;

    let cond_alpha = region_i_dprime == 0;
    let cond_beta = c == 1;
    let cond_gamma = c == 1 && zv(&|p, q| p < 0 && q == 0) == 0;

    Ok(DimensionReport {
        dim_b: 2 * region_i + 2 * (region_ii_prime - 1),
        dim_b_r: 2 * region_i + (region_ii_prime - 1),
        dim_b_hat: 2 * region_i_prime,
        dim_d_n: 2 * diag_neg,
        dim_orbit: 2 * d - c,
        codim: c,
        cond_alpha,
        cond_beta,
        cond_gamma,
    })
}

/// Build the flag chain of an orbit record's representative point, together
/// with the weight filtration W~ of its bigrading (the split MHS the record
/// carries).
pub fn record_mixed_data(session: &Session, set: &OrbitSet, record: usize) -> Result<MixedFlagData> {
    let rec = &set.records[record];
    let chain = session.flag_chain(rec.frame, rec.rep_w);
    let f = FlagChain::from_descending(chain);
    // W~_{-k} = sum_{p+q >= k} g^{p,q}; as an increasing filtration
    // W_b = sum_{p+q <= b}.
    let p = session.p_values(rec.rep_w);
    let q = session.q_values(rec.frame, rec.rep_w)?;
    let fr = &session.graph.frames[rec.frame];
    let dim = session.la.dim;
    let mut by_level: BTreeMap<i64, Vec<Vec<Cyclo8>>> = BTreeMap::new();
    for a in 0..session.la.rs.num_roots() {
        by_level
            .entry(p[a] + q[a])
            .or_default()
            .push(fr.transporter.col(session.la.basis_index_root(a)));
    }
    for j in 0..session.rank() {
        by_level.entry(0).or_default().push(fr.transporter.col(j));
    }
    let min = *by_level.keys().next().unwrap();
    let max = *by_level.keys().last().unwrap();
    let mut rows: Vec<Vec<Cyclo8>> = Vec::new();
    let mut levels = vec![(min - 1, Subspace::zero(dim))];
    for k in min..=max {
        if let Some(v) = by_level.get(&k) {
            rows.extend(v.clone());
        }
        levels.push((k, Subspace::span(dim, &rows)));
    }
    let w = WeightFiltration { levels };
    deligne_bigrading(&session.la, &session.sigma, &f, &w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbits::EnumerationOptions;
    use crate::realform::GradingDatum;
    use crate::roots::RootSystem;

    fn session(name: &str, grading: Vec<u8>) -> Session {
        let la = LieAlgebra::build(RootSystem::of_type(name).unwrap()).unwrap();
        let g = GradingDatum::new(grading).unwrap();
        Session::new(la, g, &EnumerationOptions::default()).unwrap()
    }

    #[test]
    fn sl2_weight_filtration() {
        let s = session("A1", vec![1]);
        let la = &s.la;
        let n = la.root_vector(1); // X_{-alpha}
        let w = weight_filtration(la, Some(&s.sigma), &n).unwrap();
        assert_eq!(w.gr_dim(-2), 1);
        assert_eq!(w.gr_dim(0), 1);
        assert_eq!(w.gr_dim(2), 1);
        // N = 0: trivial filtration.
        let z = vec![Cyclo8::zero(); la.dim];
        let w0 = weight_filtration(la, None, &z).unwrap();
        assert_eq!(w0.at(-1).dim(), 0);
        assert_eq!(w0.at(0).dim(), la.dim);
    }

    #[test]
    fn jm_triple_sl2() {
        let s = session("A1", vec![1]);
        let la = &s.la;
        let n = la.root_vector(1);
        let t = jm_triple(la, None, &n).unwrap();
        // Y = -H_alpha for the lowering root vector.
        let mut expect = vec![Cyclo8::zero(); la.dim];
        expect[0] = Cyclo8::from_int(-2);
        assert_eq!(la.bracket(&t.y, &n), {
            let mut v = vec![Cyclo8::zero(); la.dim];
            v[la.basis_index_root(1)] = Cyclo8::from_int(-2);
            v
        });
        // Scaling invariance of Y.
        let n3: Vec<Cyclo8> = n.iter().map(|x| x.scale(&rat_int(3))).collect();
        let t3 = jm_triple(la, None, &n3).unwrap();
        assert_eq!(t.y, t3.y);
    }

    #[test]
    fn g2_principal_symmetric() {
        let s = session("G2", vec![1, 1]);
        let la = &s.la;
        // Principal nilpotent: sum of negative simple root vectors.
        let i1 = la.rs.root_index(&vec![-1, 0]).unwrap();
        let i2 = la.rs.root_index(&vec![0, -1]).unwrap();
        let mut n = vec![Cyclo8::zero(); la.dim];
        n[la.basis_index_root(i1)] = Cyclo8::one();
        n[la.basis_index_root(i2)] = Cyclo8::one();
        let w = weight_filtration(la, None, &n).unwrap();
        for k in 1..=10 {
            assert_eq!(w.gr_dim(k), w.gr_dim(-k));
        }
    }

    #[test]
    fn deligne_split_matches_orbit_bigrading() {
        let s = session("A2", vec![1, 1]);
        let set = s.enumerate_orbits().unwrap();
        for ri in 0..set.records.len() {
            let mfd = record_mixed_data(&s, &set, ri).unwrap();
            assert!(mfd.is_split, "{}", set.records[ri].label);
            assert_eq!(mfd.dims(), set.records[ri].hpq, "{}", set.records[ri].label);
        }
    }

    #[test]
    fn nonsplit_sl2_detected() {
        // Build a non-split MHS on sl2 by tilting the Hodge-Tate limit flag
        // of the split frame with a lower-triangular correction.
        let s = session("A1", vec![1]);
        let la = &s.la;
        let set = s.enumerate_orbits().unwrap();
        let closed = set.closed;
        let mfd = record_mixed_data(&s, &set, closed).unwrap();
        assert!(mfd.is_split);
        // Perturb F^1 by a direction in I^{0,0}: chooses a non-real mix.
        let f1 = mfd.deligne.get(&(1, 1)).unwrap();
        let f0 = mfd.deligne.get(&(0, 0)).unwrap();
        let v1 = f1.basis.row(0).to_vec();
        let v0 = f0.basis.row(0).to_vec();
        let c = &Cyclo8::one() + &Cyclo8::i();
        let tilted: Vec<Cyclo8> = (0..la.dim).map(|i| &v1[i] + &(&v0[i] * &c)).collect();
        let dim = la.dim;
        let f = FlagChain::from_descending(vec![
            (1, Subspace::span(dim, &[tilted.clone()])),
            (0, Subspace::span(dim, &[tilted, v0])),
            (-1, Subspace::full(dim)),
        ]);
        let mfd2 = deligne_bigrading(la, &s.sigma, &f, &mfd.w).unwrap();
        assert!(!mfd2.is_split);
    }

    #[test]
    fn flip_is_involution_and_footnote() {
        let s = session("A1", vec![1]);
        let set = s.enumerate_orbits().unwrap();
        let mfd = record_mixed_data(&s, &set, set.closed).unwrap();
        let dims = mfd.dims();
        let flipped = flip_dims(&dims);
        // Hodge-Tate data is fixed by the flip; double flip is the
        // identity always.
        assert_eq!(flip_dims(&flipped), dims);
        assert_eq!(flipped, dims);
        // The base point of the domain has antidiagonal dims; its flip puts
        // the (1,-1) root vector at (1,1)-position reversed.
        let base = record_mixed_data(&s, &set, set.base).unwrap();
        let fl = flip_dims(&base.dims());
        assert_eq!(fl.get(&(1, -1)).copied(), base.dims().get(&(1, -1)).copied());
    }

    #[test]
    fn naive_limit_of_closed_sl2() {
        let s = session("A1", vec![1]);
        let la = &s.la;
        let set = s.enumerate_orbits().unwrap();
        let mfd = record_mixed_data(&s, &set, set.closed).unwrap();
        // N-hat: the real direction in g^{-1,-1}.
        let pol = polarizability(&s, &set, set.closed, 3).unwrap();
        let Polarizability::Polarizable { witness: Some(nhat), .. } = pol else {
            panic!("closed PGL2 orbit must be polarizable");
        };
        let hat = naive_limit(la, &s.sigma, &mfd, &nhat).unwrap();
        assert_eq!(hat.at(1).dim(), 1);
    }

    #[test]
    fn pgl2_closed_polarizable_and_consistency() {
        let s = session("A1", vec![1]);
        let set = s.enumerate_orbits().unwrap();
        let pol = polarizability(&s, &set, set.closed, 3).unwrap();
        let Polarizability::Polarizable { witness: Some(nhat), .. } = pol else {
            panic!("expected witness")
        };
        // The witness flows the stratum flag into the domain.
        let chain = s.flag_chain(set.records[set.closed].frame, set.records[set.closed].rep_w);
        let f = FlagChain::from_descending(chain);
        let rep = nilpotent_orbit_consistency(&s.la, &s.sigma, &f, &nhat, &[1, 2, 10]).unwrap();
        assert!(rep.iter().all(|r| r.pass()), "{rep:?}");
        // N = 0 with the base flag: trivially passes; with a boundary flag:
        // fails purity.
        let zero = vec![Cyclo8::zero(); s.la.dim];
        let base_chain = FlagChain::from_descending(s.flag_chain(0, 0));
        let rep0 = nilpotent_orbit_consistency(&s.la, &s.sigma, &base_chain, &zero, &[1]).unwrap();
        assert!(rep0[0].pass());
        let rep1 = nilpotent_orbit_consistency(&s.la, &s.sigma, &f, &zero, &[1]).unwrap();
        assert!(!rep1[0].pass());
    }

    #[test]
    fn sign_flipped_witness_fails_on_carayol_wall() {
        // The codim-1 stratum of the nonclassical SU(2,1) domain separates
        // D from a non-polarized open orbit; flowing with the flipped
        // witness lands across the wall and fails the sign pattern.
        let s = session("A2", vec![1, 1]);
        let set = s.enumerate_orbits().unwrap();
        let ri = set.records.iter().position(|r| r.codim == 1).unwrap();
        let pol = polarizability(&s, &set, ri, 3).unwrap();
        let Polarizability::Polarizable { witness: Some(nhat), .. } = pol else {
            panic!("expected witness")
        };
        let chain = s.flag_chain(set.records[ri].frame, set.records[ri].rep_w);
        let f = FlagChain::from_descending(chain);
        let ok = nilpotent_orbit_consistency(&s.la, &s.sigma, &f, &nhat, &[1, 2, 10]).unwrap();
        assert!(ok.iter().all(|r| r.pass()));
        let flipped: Vec<Cyclo8> = nhat.iter().map(|x| -x).collect();
        let bad = nilpotent_orbit_consistency(&s.la, &s.sigma, &f, &flipped, &[1, 2, 10]).unwrap();
        assert!(bad.iter().all(|r| !r.pass()), "{bad:?}");
    }

    #[test]
    fn carayol_closed_witness_not_root_vector() {
        let s = session("A2", vec![1, 1]);
        let set = s.enumerate_orbits().unwrap();
        let pol = polarizability(&s, &set, set.closed, 3).unwrap();
        let Polarizability::Polarizable { witness: Some(nhat), .. } = pol else {
            panic!("Carayol closed orbit must be polarizable")
        };
        let support = witness_root_support(&s, set.records[set.closed].frame, &nhat);
        assert!(support.len() >= 2, "witness must not be a single root vector");
    }

    #[test]
    fn cuspidality_basics() {
        // PGL2: the codim-1 closed orbit is cuspidal; open orbits are
        // cuspidal.
        let s = session("A1", vec![1]);
        let set = s.enumerate_orbits().unwrap();
        for ri in 0..set.records.len() {
            assert!(cuspidality(&s, &set, ri).unwrap());
        }
    }

    #[test]
    fn sp6_siegel_closed_not_cuspidal() {
        let s = session("C3", vec![0, 0, 1]);
        let set = s.enumerate_orbits().unwrap();
        assert!(!cuspidality(&s, &set, set.closed).unwrap());
        // Codimension-one strata are cuspidal.
        for (ri, rec) in set.records.iter().enumerate() {
            if rec.codim == 1 {
                assert!(cuspidality(&s, &set, ri).unwrap(), "{}", rec.label);
            }
        }
    }

    #[test]
    fn sp6_levi_type_a2() {
        // N = sum of the root vectors for e3-e1, e3-e2, -e1-e2; the Levi of
        // W(N) is sl3.
        let s = session("C3", vec![0, 0, 1]);
        let la = &s.la;
        let roots = [vec![-1i64, -1, 0], vec![0, -1, 0], vec![-1, -2, -1]];
        let mut n = vec![Cyclo8::zero(); la.dim];
        for r in &roots {
            let idx = la.rs.root_index(&r.to_vec()).unwrap();
            n[la.basis_index_root(idx)] = Cyclo8::one();
        }
        let t = jm_triple(la, None, &n).unwrap();
        let ady = la.ad(&t.y);
        // Kernel roots of ad(Y): count root vectors in the kernel.
        let ker = Subspace::span(la.dim, &ady.kernel().rows_vec());
        let mut levi_roots = 0;
        for a in 0..la.rs.num_roots() {
            if ker.contains(&la.root_vector(a)) {
                levi_roots += 1;
            }
        }
        assert_eq!(levi_roots, 6); // A2 has six roots
    }

    #[test]
    fn dimension_report_basics() {
        let s = session("A1", vec![1]);
        let set = s.enumerate_orbits().unwrap();
        let mfd = record_mixed_data(&s, &set, set.closed).unwrap();
        let pol = polarizability(&s, &set, set.closed, 3).unwrap();
        let Polarizability::Polarizable { witness: Some(nhat), .. } = pol else {
            panic!("expected witness")
        };
        let rep = dimension_report(&s.la, &mfd, &nhat, s.dim_compact_dual()).unwrap();
        // Hodge-Tate: the image boundary component is a point.
        assert_eq!(rep.dim_b_hat, 0);
        assert_eq!(rep.dim_orbit, 2 - 1);
        assert!(rep.cond_beta);
    }

    #[test]
    fn carayol_codim1_gamma_isomorphism() {
        // For the codimension-one limit structure of the nonclassical
        // SU(2,1) domain, the naive limit loses no information.
        let s = session("A2", vec![1, 1]);
        let set = s.enumerate_orbits().unwrap();
        let ri = set.records.iter().position(|r| r.codim == 1).unwrap();
        let mfd = record_mixed_data(&s, &set, ri).unwrap();
        let pol = polarizability(&s, &set, ri, 3).unwrap();
        let Polarizability::Polarizable { witness: Some(nhat), .. } = pol else {
            panic!("codim-1 stratum must carry a witness")
        };
        let rep = dimension_report(&s.la, &mfd, &nhat, s.dim_compact_dual()).unwrap();
        assert!(rep.cond_gamma, "{rep:?}");
        assert_eq!(rep.dim_orbit, 2 * 3 - 1);
    }
}
