//! Enumeration of the real-group orbits on the compact dual: cocharacters,
//! flags, bigradings, Weyl double cosets, codimension, incidence edges, and
//! orbit classification flags.

use crate::chevalley::{exp_i_semisimple, root_on_simple_coroot, LieAlgebra};
use crate::cyclo::{rat, rat_int, Cyclo8};
use crate::error::{Error, Result};
use crate::linalg::{hermitian_signature, Mat, Subspace};
use crate::realform::{
    cartan_hasse, theta_matrix, CartanFrame, CartanGraph, Conjugation, GradingDatum, RootClass,
};
use crate::roots::WeylGroup;
use std::collections::{BTreeMap, BTreeSet};

/// Per-frame fixture data for the connected real Weyl group.
#[derive(Clone, Debug, Default)]
pub struct RealWeylFixtures {
    /// frame id -> extra generator words (digit strings in simple
    /// reflections).
    pub generators: BTreeMap<usize, Vec<String>>,
    /// frame id -> expected number of orbit-producing double cosets, used
    /// only to anchor the completeness flag.
    pub expected_cosets: BTreeMap<usize, usize>,
}

#[derive(Clone, Debug, Default)]
pub struct EnumerationOptions {
    pub fixtures: RealWeylFixtures,
    pub certified_search: bool,
}

/// The connected real Weyl group of one frame, as a subgroup of the complex
/// Weyl group, with a completeness marker.
#[derive(Clone, Debug)]
pub struct RealWeyl {
    pub frame: usize,
    pub elements: Vec<usize>,
    pub generators: Vec<usize>,
    pub complete: bool,
    pub provenance: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub enum EdgeKind {
    Cayley,
    Cross,
    WolfClosed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub kind: EdgeKind,
}

#[derive(Clone, Debug, Default)]
pub struct OrbitFlags {
    pub open: bool,
    pub closed: bool,
    pub hodge_tate: bool,
    pub boundary_stratum: bool,
}

#[derive(Clone)]
pub struct OrbitRecord {
    pub label: String,
    /// Minimal representative (frame, Weyl index).
    pub frame: usize,
    pub rep_w: usize,
    /// All (frame, w) pairs known to land in this orbit.
    pub reps: Vec<(usize, usize)>,
    /// Minimal representatives of the merged coarse classes.
    pub merged_classes: Vec<(usize, usize)>,
    pub codim: usize,
    pub hpq: BTreeMap<(i64, i64), usize>,
    pub flags: OrbitFlags,
}

impl OrbitRecord {
    pub fn hpq_list(&self) -> Vec<(i64, i64, usize)> {
        self.hpq.iter().map(|(&(p, q), &d)| (p, q, d)).collect()
    }
}

pub struct OrbitSet {
    pub records: Vec<OrbitRecord>,
    pub base: usize,
    pub closed: usize,
    pub edges: Vec<Edge>,
}

/// Everything needed to enumerate and classify orbits for one (type,
/// grading) configuration.
pub struct Session {
    pub la: LieAlgebra,
    pub weyl: WeylGroup,
    pub sigma: Conjugation,
    pub grading: GradingDatum,
    pub theta: Mat,
    pub graph: CartanGraph,
    /// Cartan-block coordinates of the grading element phi0 (rational).
    pub phi0: Vec<Cyclo8>,
    /// pi_chi0 per root.
    pub pi0: Vec<i64>,
    /// The stabilizer subgroup W_I of the base cocharacter.
    pub stab: Vec<usize>,
    pub real_weyl: Vec<RealWeyl>,
    chains: std::cell::RefCell<BTreeMap<(usize, usize), Vec<(i64, Subspace)>>>,
}

impl Session {
    pub fn new(la: LieAlgebra, grading: GradingDatum, opts: &EnumerationOptions) -> Result<Session> {
        if grading.values.len() != la.rs.rank {
            return Err(Error::InvalidInput("grading length must equal rank".into()));
        }
        let weyl = WeylGroup::generate(&la.rs);
        let sigma = Conjugation::from_grading(&la, &grading);
        sigma.verify(&la)?;
        let theta = theta_matrix(&la, &grading);
        let graph = cartan_hasse(&la, &sigma, &grading)?;
        let phi0_full = grading.grading_element(&la);
        let phi0 = phi0_full[..la.rs.rank].to_vec();
        let pi0: Vec<i64> = (0..la.rs.num_roots()).map(|a| grading.pi(&la, a)).collect();
        let stab_gens: Vec<usize> = (0..la.rs.num_roots())
            .filter(|&a| pi0[a] == 0)
            .map(|a| weyl.reflection(&la.rs, a))
            .collect();
        let stab = weyl.subgroup(&stab_gens);

        let mut session = Session {
            la,
            weyl,
            sigma,
            grading,
            theta,
            graph,
            phi0,
            pi0,
            stab,
            real_weyl: vec![],
            chains: std::cell::RefCell::new(BTreeMap::new()),
        };
        session.real_weyl = session.compute_real_weyl(opts)?;
        Ok(session)
    }

    pub fn rank(&self) -> usize {
        self.la.rs.rank
    }

    /// Complex dimension of the compact dual.
    pub fn dim_compact_dual(&self) -> usize {
        self.pi0.iter().filter(|&&p| p > 0).count()
    }

    fn compute_real_weyl(&self, opts: &EnumerationOptions) -> Result<Vec<RealWeyl>> {
        let mut out = Vec::new();
        for frame in &self.graph.frames {
            let mut gens: Vec<usize> = Vec::new();
            let mut provenance = Vec::new();
            for (a, class) in frame.class.iter().enumerate() {
                if a >= self.la.rs.n_pos {
                    continue;
                }
                match class {
                    RootClass::Real => {
                        gens.push(self.weyl.reflection(&self.la.rs, a));
                        provenance.push(format!("reflection in real root {a}"));
                    }
                    RootClass::CompactImaginary => {
                        gens.push(self.weyl.reflection(&self.la.rs, a));
                        provenance.push(format!("reflection in compact imaginary root {a}"));
                    }
                    _ => {}
                }
            }
            if let Some(words) = opts.fixtures.generators.get(&frame.id) {
                for word in words {
                    let w = self.weyl.parse_word(&self.la.rs, word)?;
                    // Necessary soundness check: the element must commute
                    // with the conjugation action on the frame root data.
                    if !self.commutes_with_tau(frame, w) {
                        return Err(Error::InvalidInput(format!(
                            "fixture generator '{word}' does not commute with the conjugation \
                             on frame {}",
                            frame.id
                        )));
                    }
                    gens.push(w);
                    provenance.push(format!("fixture generator '{word}'"));
                }
            }
            if opts.certified_search {
                for w in self.certified_search(frame)? {
                    if !gens.contains(&w) {
                        gens.push(w);
                        provenance.push(format!(
                            "certified exponential realizes {}",
                            self.weyl.word_label(w)
                        ));
                    }
                }
            }
            let elements = self.weyl.subgroup(&gens);
            let compact = frame.real_rank == 0;
            let split = frame.real_rank == self.rank();
            let complete = compact
                || split
                || opts.fixtures.generators.contains_key(&frame.id)
                || opts.fixtures.expected_cosets.contains_key(&frame.id);
            out.push(RealWeyl { frame: frame.id, elements, generators: gens, complete, provenance });
        }
        Ok(out)
    }

    fn commutes_with_tau(&self, frame: &CartanFrame, w: usize) -> bool {
        let perm = &self.weyl.elements[w].perm;
        (0..self.la.rs.num_roots()).all(|a| perm[frame.tau[a]] == frame.tau[perm[a]])
    }

    /// Bounded search for exactly-exponentiable real elements normalizing
    /// the frame Cartan; every hit certifies a Weyl element of the
    /// connected real Weyl group.
    fn certified_search(&self, frame: &CartanFrame) -> Result<Vec<usize>> {
        let la = &self.la;
        let mut found = Vec::new();
        let mut candidates: Vec<Vec<Cyclo8>> = Vec::new();
        for a in 0..la.rs.n_pos {
            if !matches!(frame.class[a], RootClass::Real | RootClass::CompactImaginary) {
                continue;
            }
            let v = frame.transporter.col(la.basis_index_root(a));
            let vneg = frame.transporter.col(la.basis_index_root(la.rs.negative_of(a)));
            // Real combinations spanning the rotation directions of the
            // corresponding sl2.
            for k in 0..4i64 {
                let tw: Vec<Cyclo8> =
                    v.iter().map(|x| x * &Cyclo8::zeta_pow(k)).collect();
                let tn: Vec<Cyclo8> =
                    vneg.iter().map(|x| x * &Cyclo8::zeta_pow(-k)).collect();
                let z: Vec<Cyclo8> = (0..la.dim).map(|i| &tw[i] - &tn[i]).collect();
                let zr: Vec<Cyclo8> =
                    (0..la.dim).map(|i| &z[i] + &self.sigma.apply(&z)[i]).collect();
                if zr.iter().any(|x| !x.is_zero()) {
                    candidates.push(zr);
                }
            }
        }
        for z in candidates {
            let adz = la.ad(&z);
            for k in [1i64, 2, 4] {
                let Ok(m) = exp_i_semisimple(&adz, k) else { continue };
                if let Some(w) = self.weyl_of_real_normalizer(frame, &m) {
                    if !found.contains(&w) {
                        found.push(w);
                    }
                }
            }
        }
        Ok(found)
    }

    /// If m is a real algebra automorphism normalizing the frame Cartan,
    /// return the induced complex Weyl element.
    fn weyl_of_real_normalizer(&self, frame: &CartanFrame, m: &Mat) -> Option<usize> {
        // Reality: S conj(M) S = M.
        let conj_m = &(&self.sigma.s * &m.conj_entries()) * &self.sigma.s;
        if conj_m != *m {
            return None;
        }
        // Normalizes the transported Cartan: C^{-1} M C preserves the
        // Cartan block.
        let t = &(&frame.inv_transporter * m) * &frame.transporter;
        let rank = self.rank();
        for j in 0..rank {
            for i in rank..self.la.dim {
                if !t[(i, j)].is_zero() {
                    return None;
                }
            }
        }
        // The induced map must be a Weyl element on the root system: match
        // its action on the root lines.
        let nroots = self.la.rs.num_roots();
        let mut perm = vec![0usize; nroots];
        for a in 0..nroots {
            let col = t.col(self.la.basis_index_root(a));
            let mut support = None;
            for b in 0..nroots {
                if !col[self.la.basis_index_root(b)].is_zero() {
                    if support.is_some() {
                        return None;
                    }
                    support = Some(b);
                }
            }
            for j in 0..rank {
                if !col[j].is_zero() {
                    return None;
                }
            }
            perm[a] = support?;
        }
        self.weyl.find_by_perm(&perm)
    }

    /// p-grading of the flag point (frame, w): p(alpha) = pi0(w^{-1} alpha).
    pub fn p_values(&self, w: usize) -> Vec<i64> {
        let winv = self.weyl.inverse[w];
        let perm = &self.weyl.elements[winv].perm;
        (0..self.la.rs.num_roots()).map(|a| self.pi0[perm[a]]).collect()
    }

    /// q-grading via the conjugated cocharacter, computed exactly from the
    /// frame's tau matrix on the Cartan.
    pub fn q_values(&self, frame: usize, w: usize) -> Result<Vec<i64>> {
        let fr = &self.graph.frames[frame];
        let rank = self.rank();
        // w phi0 in Cartan coordinates.
        let hm = &self.weyl.elements[w].h_mat;
        let mut wphi = vec![Cyclo8::zero(); rank];
        for j in 0..rank {
            if self.phi0[j].is_zero() {
                continue;
            }
            for i in 0..rank {
                if hm[i][j] != 0 {
                    wphi[i] = &wphi[i] + &self.phi0[j].scale(&rat_int(hm[i][j]));
                }
            }
        }
        let eta = fr.tau_cartan.apply(&wphi);
        let mut out = Vec::with_capacity(self.la.rs.num_roots());
        for a in 0..self.la.rs.num_roots() {
            let mut acc = Cyclo8::zero();
            for j in 0..rank {
                let v = root_on_simple_coroot(&self.la.rs, a, j);
                if v != 0 && !eta[j].is_zero() {
                    acc += &eta[j].scale(&rat_int(v));
                }
            }
            let half = acc.scale(&rat(1, 2));
            let q = half
                .as_rational()
                .and_then(|r| if r.is_integer() { Some(r.to_integer()) } else { None })
                .ok_or_else(|| {
                    Error::InternalConsistency(format!(
                        "non-integral conjugate grading at frame {frame}, w {w}, root {a}"
                    ))
                })?;
            out.push(i64::try_from(q).map_err(|_| {
                Error::InternalConsistency("grading value out of range".into())
            })?);
        }
        Ok(out)
    }

    /// The h^{p,q} table of the flag point, with the Cartan in (0,0).
    pub fn hpq_table(&self, frame: usize, w: usize) -> Result<BTreeMap<(i64, i64), usize>> {
        let p = self.p_values(w);
        let q = self.q_values(frame, w)?;
        let mut table: BTreeMap<(i64, i64), usize> = BTreeMap::new();
        *table.entry((0, 0)).or_insert(0) += self.rank();
        for a in 0..self.la.rs.num_roots() {
            *table.entry((p[a], q[a])).or_insert(0) += 1;
        }
        // Conjugation symmetry h^{p,q} = h^{q,p}.
        for (&(pp, qq), &d) in &table {
            if table.get(&(qq, pp)).copied().unwrap_or(0) != d {
                return Err(Error::InternalConsistency(format!(
                    "h^{{p,q}} symmetry violated at frame {frame}, w {w}"
                )));
            }
        }
        Ok(table)
    }

    pub fn codim_of_table(table: &BTreeMap<(i64, i64), usize>) -> usize {
        table.iter().filter(|(&(p, q), _)| p > 0 && q > 0).map(|(_, &d)| d).sum()
    }

    /// Exact flag chain (descending filtration levels) of the flag point.
    pub fn flag_chain(&self, frame: usize, w: usize) -> Vec<(i64, Subspace)> {
        if let Some(c) = self.chains.borrow().get(&(frame, w)) {
            return c.clone();
        }
        let chain = self.flag_chain_for_transporter(&self.graph.frames[frame].transporter, w);
        self.chains.borrow_mut().insert((frame, w), chain.clone());
        chain
    }

    fn flag_chain_for_transporter(&self, c: &Mat, w: usize) -> Vec<(i64, Subspace)> {
        let p = self.p_values(w);
        let dim = self.la.dim;
        let mut levels: BTreeSet<i64> = p.iter().copied().collect();
        levels.insert(0);
        let mut chain = Vec::new();
        let mut rows: Vec<Vec<Cyclo8>> = Vec::new();
        for &lvl in levels.iter().rev() {
            for a in 0..self.la.rs.num_roots() {
                if p[a] == lvl {
                    rows.push(c.col(self.la.basis_index_root(a)));
                }
            }
            if lvl == 0 {
                for j in 0..self.rank() {
                    rows.push(c.col(j));
                }
            }
            let sub = Subspace::span(dim, &rows);
            rows = sub.basis.rows_vec();
            chain.push((lvl, sub));
        }
        chain
    }

    fn chain_key(chain: &[(i64, Subspace)]) -> String {
        let mut s = String::new();
        for (lvl, sub) in chain {
            s.push_str(&format!("{lvl}>{}#", sub.key()));
        }
        s
    }

    /// Signature profile of a pure flag point: per level p, the signature
    /// of -B(u, sigma v) on g^{p,-p}.
    fn open_profile(&self, frame: usize, w: usize) -> Result<Vec<(i64, usize, usize)>> {
        let p = self.p_values(w);
        let fr = &self.graph.frames[frame];
        let mut by_level: BTreeMap<i64, Vec<Vec<Cyclo8>>> = BTreeMap::new();
        for a in 0..self.la.rs.num_roots() {
            by_level
                .entry(p[a])
                .or_default()
                .push(fr.transporter.col(self.la.basis_index_root(a)));
        }
        let mut profile = Vec::new();
        for (lvl, vecs) in by_level {
            if lvl == 0 {
                continue;
            }
            let n = vecs.len();
            let mut gram = Mat::zero(n, n);
            for i in 0..n {
                for j in 0..n {
                    gram[(i, j)] = -&self.la.killing_form(&vecs[i], &self.sigma.apply(&vecs[j]));
                }
            }
            let (pos, neg, null) = hermitian_signature(&gram)?;
            if null != 0 {
                return Err(Error::InternalConsistency(
                    "degenerate polarization form on a pure flag".into(),
                ));
            }
            profile.push((lvl, pos, neg));
        }
        Ok(profile)
    }

    /// Coarse double cosets Wr(frame) \ W / W_I, as (min rep, members).
    pub fn coarse_classes(&self, frame: usize) -> Vec<(usize, Vec<usize>)> {
        let wr = &self.real_weyl[frame].elements;
        let mut seen = vec![false; self.weyl.len()];
        let mut classes = Vec::new();
        for w in 0..self.weyl.len() {
            if seen[w] {
                continue;
            }
            let mut members = BTreeSet::new();
            for &r in wr {
                let rw = self.weyl.mult[r][w];
                for &u in &self.stab {
                    members.insert(self.weyl.mult[rw][u]);
                }
            }
            for &m in &members {
                seen[m] = true;
            }
            let min = *members.iter().next().unwrap();
            classes.push((min, members.into_iter().collect()));
        }
        classes
    }

    /// Full orbit enumeration with sound merging.
    pub fn enumerate_orbits(&self) -> Result<OrbitSet> {
        #[derive(Clone)]
        struct Candidate {
            frame: usize,
            min_rep: usize,
            members: Vec<usize>,
            codim: usize,
            hpq: BTreeMap<(i64, i64), usize>,
        }
        let mut cands: Vec<Candidate> = Vec::new();
        for frame in 0..self.graph.frames.len() {
            for (min_rep, members) in self.coarse_classes(frame) {
                let hpq = self.hpq_table(frame, min_rep)?;
                let codim = Self::codim_of_table(&hpq);
                // Codimension and h-table must be constant across the
                // double coset.
                for &m in &members {
                    let t = self.hpq_table(frame, m)?;
                    if t != hpq {
                        return Err(Error::InternalConsistency(format!(
                            "h-table varies inside double coset at frame {frame}"
                        )));
                    }
                }
                cands.push(Candidate { frame, min_rep, members, codim, hpq });
            }
        }

        // Union-find over candidates.
        let n = cands.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, i: usize) -> usize {
            if parent[i] != i {
                let r = find(parent, parent[i]);
                parent[i] = r;
            }
            parent[i]
        }
        let union = |parent: &mut Vec<usize>, a: usize, b: usize| {
            let ra = find(parent, a);
            let rb = find(parent, b);
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        };

        let complete_flag = self.grading.is_complete_flag();
        if !complete_flag {
            // Merge by exact flag equality across all representatives.
            let mut dict: BTreeMap<String, usize> = BTreeMap::new();
            for (ci, cand) in cands.iter().enumerate() {
                for &w in &cand.members {
                    let key = Self::chain_key(&self.flag_chain(cand.frame, w));
                    if let Some(&cj) = dict.get(&key) {
                        union(&mut parent, ci, cj);
                    } else {
                        dict.insert(key, ci);
                    }
                }
            }
        }

        // Wolf: all candidates of maximal codimension belong to the unique
        // closed orbit.
        let cmax = cands.iter().map(|c| c.codim).max().unwrap();
        let closed_ids: Vec<usize> =
            (0..n).filter(|&i| cands[i].codim == cmax).collect();
        for w in closed_ids.windows(2) {
            union(&mut parent, w[0], w[1]);
        }

        // Leftover open candidates from noncompact frames: match into the
        // frame-0 class with the same exact signature profile.
        if !complete_flag {
            let mut base_profiles: Vec<(usize, Vec<(i64, usize, usize)>)> = Vec::new();
            for (ci, cand) in cands.iter().enumerate() {
                if cand.frame == 0 {
                    base_profiles.push((ci, self.open_profile(0, cand.min_rep)?));
                }
            }
            for ci in 0..n {
                if cands[ci].frame == 0 || cands[ci].codim != 0 {
                    continue;
                }
                if cands[ci].frame != 0 && find(&mut parent, ci) != ci {
                    continue;
                }
                let root = find(&mut parent, ci);
                if cands.iter().enumerate().any(|(cj, c)| {
                    c.frame == 0 && find(&mut parent, cj) == root
                }) {
                    continue;
                }
                let profile = self.open_profile(cands[ci].frame, cands[ci].min_rep)?;
                let matches: Vec<usize> = base_profiles
                    .iter()
                    .filter(|(_, p)| *p == profile)
                    .map(|(cj, _)| *cj)
                    .collect();
                match matches.len() {
                    1 => union(&mut parent, ci, matches[0]),
                    0 => {
                        return Err(Error::InternalConsistency(
                            "open orbit candidate matches no base class".into(),
                        ))
                    }
                    _ => {
                        return Err(Error::InternalConsistency(
                            "ambiguous open-orbit profile match".into(),
                        ))
                    }
                }
            }
        }

        // Consistency: merged candidates agree on codim and h-table; base
        // classes never merge with each other.
        for i in 0..n {
            for j in (i + 1)..n {
                if find(&mut parent, i) == find(&mut parent, j) {
                    if cands[i].codim != cands[j].codim || cands[i].hpq != cands[j].hpq {
                        return Err(Error::InternalConsistency(
                            "merged orbit candidates with different invariants".into(),
                        ));
                    }
                    if cands[i].frame == 0 && cands[j].frame == 0 {
                        return Err(Error::InternalConsistency(
                            "two base double cosets merged".into(),
                        ));
                    }
                }
            }
        }

        // Build records.
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..n {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().push(i);
        }
        let mut records = Vec::new();
        for (_, group) in groups {
            let mut reps: Vec<(usize, usize)> = Vec::new();
            let mut merged_classes = Vec::new();
            for &ci in &group {
                merged_classes.push((cands[ci].frame, cands[ci].min_rep));
                for &w in &cands[ci].members {
                    reps.push((cands[ci].frame, w));
                }
            }
            reps.sort();
            merged_classes.sort();
            let (frame, rep_w) = merged_classes[0];
            let label = format!("o{frame}^{{{}}}", self.weyl.word_label(rep_w));
            records.push(OrbitRecord {
                label,
                frame,
                rep_w,
                reps,
                merged_classes,
                codim: cands[group[0]].codim,
                hpq: cands[group[0]].hpq.clone(),
                flags: OrbitFlags::default(),
            });
        }
        records.sort_by_key(|r| (r.codim, r.frame, r.rep_w));

        let base = records
            .iter()
            .position(|r| r.reps.contains(&(0, 0)))
            .ok_or_else(|| Error::InternalConsistency("base point lost".into()))?;
        let closed_codim = records.iter().map(|r| r.codim).max().unwrap();
        let closed_list: Vec<usize> =
            (0..records.len()).filter(|&i| records[i].codim == closed_codim).collect();
        if closed_list.len() != 1 {
            return Err(Error::InternalConsistency(
                "closed orbit is not unique after merging".into(),
            ));
        }
        let closed = closed_list[0];

        let mut set = OrbitSet { records, base, closed, edges: vec![] };
        self.incidence_edges(&mut set)?;
        self.classify(&mut set);
        Ok(set)
    }

    /// Index of the record containing the coarse class of (frame, w).
    fn record_of(&self, set: &OrbitSet, frame: usize, w: usize) -> Option<usize> {
        set.records.iter().position(|r| r.reps.contains(&(frame, w)))
    }

    /// Resolve the orbit of the Cayley transform of a representative flag
    /// in the noncompact imaginary root alpha.
    fn cayley_target(&self, set: &OrbitSet, frame: usize, w: usize, alpha: usize) -> Option<usize> {
        // Defining-edge rewrite: find w_r in the connected real Weyl group
        // with w_r(alpha) = +-beta for (frame, beta) the defining edge of
        // some deeper frame; then the target class is (k, w_r^{-1} w).
        for &wr in &self.real_weyl[frame].elements {
            let b = self.weyl.elements[wr].perm[alpha];
            let bpos = if b < self.la.rs.n_pos { b } else { neg_of(&self.la, b) };
            for k in 0..self.graph.frames.len() {
                if let Some((src, root)) = self.graph.defining_edge(k) {
                    if src == frame && root == bpos {
                        let wr_inv = self.weyl.inverse[wr];
                        let tw = self.weyl.mult[wr_inv][w];
                        return self.record_of(set, k, tw);
                    }
                }
            }
        }
        // Exact fallback: compute the transformed flag and look it up among
        // all representative flags.
        let cm = self.la.cayley_matrix(alpha).ok()?;
        let t = &self.graph.frames[frame].transporter * &cm;
        let chain = self.flag_chain_for_transporter(&t, w);
        let key = Self::chain_key(&chain);
        for (ri, rec) in set.records.iter().enumerate() {
            for &(f, rw) in &rec.reps {
                if Self::chain_key(&self.flag_chain(f, rw)) == key {
                    return Some(ri);
                }
            }
        }
        None
    }

    fn incidence_edges(&self, set: &mut OrbitSet) -> Result<()> {
        let mut edges: BTreeSet<(usize, usize, EdgeKind)> = BTreeSet::new();
        for (ri, rec) in set.records.iter().enumerate() {
            for &(frame, w) in &rec.reps {
                let fr = &self.graph.frames[frame];
                // Cayley edges in noncompact imaginary roots.
                for alpha in fr.noncompact_imaginary_positive(&self.la) {
                    if let Some(tj) = self.cayley_target(set, frame, w, alpha) {
                        if tj != ri && set.records[tj].codim > rec.codim {
                            edges.insert((ri, tj, EdgeKind::Cayley));
                        }
                    }
                }
                // Cross-action edges in complex roots, codimension
                // increasing only.
                for a in 0..self.la.rs.n_pos {
                    if !matches!(fr.class[a], RootClass::Complex(_)) {
                        continue;
                    }
                    let s = self.weyl.reflection(&self.la.rs, a);
                    let tw = self.weyl.mult[s][w];
                    if let Some(tj) = self.record_of(set, frame, tw) {
                        if tj != ri && set.records[tj].codim > rec.codim {
                            edges.insert((ri, tj, EdgeKind::Cross));
                        }
                    }
                }
            }
        }
        // Wolf: the closed orbit lies in every closure.
        for ri in 0..set.records.len() {
            if ri != set.closed {
                edges.insert((ri, set.closed, EdgeKind::WolfClosed));
            }
        }
        // Deduplicate by (src, dst), preferring Cayley over Cross over Wolf.
        let mut best: BTreeMap<(usize, usize), EdgeKind> = BTreeMap::new();
        for (s, d, k) in edges {
            let e = best.entry((s, d)).or_insert(k);
            if k < *e {
                *e = k;
            }
        }
        set.edges = best
            .into_iter()
            .map(|((src, dst), kind)| Edge { src, dst, kind })
            .collect();
        Ok(())
    }

    fn classify(&self, set: &mut OrbitSet) {
        let closed = set.closed;
        let base = set.base;
        for (ri, rec) in set.records.iter_mut().enumerate() {
            rec.flags.open = rec.codim == 0;
            rec.flags.closed = ri == closed;
            rec.flags.hodge_tate = rec.hpq.keys().all(|&(p, q)| p == q);
        }
        // Boundary strata: reachable from the base record along closure
        // edges.
        let mut reach = vec![false; set.records.len()];
        let mut stack = vec![base];
        reach[base] = true;
        while let Some(x) = stack.pop() {
            for e in &set.edges {
                if e.src == x && !reach[e.dst] {
                    reach[e.dst] = true;
                    stack.push(e.dst);
                }
            }
        }
        for (ri, rec) in set.records.iter_mut().enumerate() {
            rec.flags.boundary_stratum = reach[ri] && ri != base;
        }
    }

    /// Codimension-one boundary candidates for an open orbit of a complete
    /// flag configuration: noncompact imaginary roots orthogonal to a wall
    /// of the orbit's chamber, with the open orbit across the wall.
    pub fn codim1_candidates(
        &self,
        set: &OrbitSet,
        open_record: usize,
    ) -> Result<Vec<(usize, usize, usize)>> {
        if !self.grading.is_complete_flag() {
            return Err(Error::InvalidInput(
                "codimension-one wall analysis requires the complete flag grading".into(),
            ));
        }
        let rec = &set.records[open_record];
        if rec.codim != 0 || rec.frame != 0 {
            return Err(Error::InvalidInput("record is not an open base orbit".into()));
        }
        let mut out: Vec<(usize, usize, usize)> = Vec::new();
        for &(frame, w) in &rec.reps {
            if frame != 0 {
                continue;
            }
            let p = self.p_values(w);
            for alpha in self.graph.frames[0].noncompact_imaginary_positive(&self.la) {
                let (a_eff, pa) =
                    if p[alpha] >= 0 { (alpha, p[alpha]) } else { (self.la.rs.negative_of(alpha), -p[alpha]) };
                if pa != 1 {
                    continue;
                }
                // Across the wall: the open orbit of w_alpha w.
                let s = self.weyl.reflection(&self.la.rs, a_eff);
                let across_w = self.weyl.mult[s][w];
                let across = self
                    .record_of(set, 0, across_w)
                    .ok_or_else(|| Error::InternalConsistency("across-wall orbit missing".into()))?;
                let stratum = self
                    .cayley_target(set, 0, w, alpha)
                    .ok_or_else(|| Error::InternalConsistency("wall stratum unresolved".into()))?;
                if !out.contains(&(a_eff, stratum, across)) {
                    out.push((a_eff, stratum, across));
                }
            }
        }
        out.sort();
        Ok(out)
    }
}

fn neg_of(la: &LieAlgebra, a: usize) -> usize {
    la.rs.negative_of(a)
}
