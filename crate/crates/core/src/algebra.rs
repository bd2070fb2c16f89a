//! Finite dimensional algebras presented by structure constants, and their
//! construction from bound quiver presentations, opposites, tensor products
//! and enveloping algebras.
//!
//! Path composition is function-like: in a product `p*q` the path `q` is
//! applied first, so `p*q` is nonzero only when `target(q) = source(p)`.
//! Relation paths in presentations are written the same way (product order).

use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::error::Error;
use crate::field::Field;
use crate::matrix::Matrix;

#[derive(Clone, Debug)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// One relation: a linear combination of parallel paths. Each path is a
/// sequence of arrow indices in product order (rightmost applied first).
#[derive(Clone, Debug)]
pub struct Relation<F: Field> {
    pub terms: Vec<(F::Elem, Vec<usize>)>,
}

#[derive(Clone, Debug)]
pub struct QuiverPresentation<F: Field> {
    pub field: F,
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation<F>>,
}

/// A finite dimensional algebra given by structure constants with
/// distinguished orthogonal idempotents and a chosen radical basis.
#[derive(Clone)]
pub struct Algebra<F: Field> {
    field: F,
    dim: usize,
    labels: Vec<String>,
    /// mult[i][j] = coordinate vector of b_i * b_j
    mult: Vec<Vec<Vec<F::Elem>>>,
    unit: Vec<F::Elem>,
    /// index sets of basis elements summing to the orthogonal idempotents
    idempotents: Vec<Vec<usize>>,
    /// indices of basis elements spanning the Jacobson radical
    radical: Vec<usize>,
    hash: String,
}

impl<F: Field> std::fmt::Debug for Algebra<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Algebra(dim {} over {}, {} vertices)", self.dim, self.field.spec(), self.idempotents.len())
    }
}

// ---------------------------------------------------------------------------
// paths

/// A path stored in application order: `arrows[0]` acts first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Path {
    source: usize,
    target: usize,
    arrows: Vec<usize>,
}

impl Path {
    fn trivial(v: usize) -> Self {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    fn label<F: Field>(&self, q: &QuiverPresentation<F>) -> String {
        if self.arrows.is_empty() {
            format!("e{}", q.vertices[self.source])
        } else {
            // product order: last applied arrow leftmost
            self.arrows.iter().rev().map(|&a| q.arrows[a].name.clone()).collect::<Vec<_>>().join("*")
        }
    }

    /// `self` composed after `first`: apply `first`, then `self`.
    fn after(&self, first: &Path) -> Option<Path> {
        if first.target != self.source {
            return None;
        }
        let mut arrows = first.arrows.clone();
        arrows.extend_from_slice(&self.arrows);
        Some(Path { source: first.source, target: self.target, arrows })
    }
}

/// From a relation term path (arrow indices in product order) to a `Path`.
fn relation_path<F: Field>(q: &QuiverPresentation<F>, prod_order: &[usize]) -> Result<Path, Error> {
    if prod_order.is_empty() {
        return Err(Error::NotAdmissible("empty relation path".into()));
    }
    let mut iter = prod_order.iter().rev(); // application order
    let first = *iter.next().unwrap();
    let mut p = Path {
        source: q.arrows[first].source,
        target: q.arrows[first].target,
        arrows: vec![first],
    };
    for &a in iter {
        let arr = &q.arrows[a];
        if arr.source != p.target {
            return Err(Error::NotAdmissible(format!(
                "relation path is not composable at arrow {}",
                arr.name
            )));
        }
        p.arrows.push(a);
        p.target = arr.target;
    }
    Ok(p)
}

pub const DEFAULT_LENGTH_CAP: usize = 30;

/// Guard against runaway path enumeration in wild quivers.
const PATH_SPACE_BUDGET: usize = 200_000;

struct PathSpace {
    /// paths grouped by length, concatenated; `offsets[l]` = first index of length l
    paths: Vec<Path>,
    offsets: Vec<usize>,
}

impl PathSpace {
    fn build<F: Field>(q: &QuiverPresentation<F>, max_len: usize) -> Result<PathSpace, Error> {
        let mut paths: Vec<Path> = (0..q.vertices.len()).map(Path::trivial).collect();
        let mut offsets = vec![0usize];
        let mut prev_start = 0;
        for _len in 1..=max_len {
            offsets.push(paths.len());
            let prev_end = paths.len();
            let mut new_paths = Vec::new();
            for p in &paths[prev_start..prev_end] {
                for (ai, arr) in q.arrows.iter().enumerate() {
                    if arr.source == p.target {
                        let mut arrows = p.arrows.clone();
                        arrows.push(ai);
                        new_paths.push(Path { source: p.source, target: arr.target, arrows });
                    }
                }
            }
            prev_start = prev_end;
            paths.extend(new_paths);
            if paths.len() > PATH_SPACE_BUDGET {
                return Err(Error::NotAdmissible(format!(
                    "path space exceeds {PATH_SPACE_BUDGET} elements before the ideal closes"
                )));
            }
        }
        offsets.push(paths.len());
        Ok(PathSpace { paths, offsets })
    }

    fn len_of(&self, idx: usize) -> usize {
        match self.offsets.binary_search(&idx) {
            Ok(mut l) => {
                // idx may be the start of several empty groups
                while l + 1 < self.offsets.len() && self.offsets[l + 1] == idx {
                    l += 1;
                }
                l
            }
            Err(l) => l - 1,
        }
    }

    fn index_of(&self, p: &Path) -> Option<usize> {
        let l = p.arrows.len();
        if l + 1 >= self.offsets.len() {
            return None;
        }
        self.paths[self.offsets[l]..self.offsets[l + 1]]
            .iter()
            .position(|x| x == p)
            .map(|k| self.offsets[l] + k)
    }
}

impl<F: Field> Algebra<F> {
    /// Quotient of the path algebra by the admissible ideal generated by
    /// the relations. The quotient basis consists of the surviving paths of
    /// length `< L` where `L <= length_cap` is the first length at which
    /// every path falls into the ideal.
    pub fn from_presentation(q: &QuiverPresentation<F>, length_cap: usize) -> Result<Self, Error> {
        assert!(length_cap >= 1, "length_cap must be >= 1");
        let f = &q.field;
        if q.vertices.is_empty() {
            return Err(Error::NotAdmissible("quiver needs at least one vertex".into()));
        }
        for a in &q.arrows {
            if a.source >= q.vertices.len() || a.target >= q.vertices.len() {
                return Err(Error::NotAdmissible(format!("arrow {} has undeclared endpoints", a.name)));
            }
        }
        // Admissibility: generators inside the square of the arrow ideal,
        // nonzero coefficients, parallel terms.
        let mut rel_paths: Vec<Vec<(F::Elem, Path)>> = Vec::new();
        let mut max_rel_len = 2usize;
        for rel in &q.relations {
            let mut terms = Vec::new();
            let mut st: Option<(usize, usize)> = None;
            for (c, pr) in &rel.terms {
                if f.is_zero(c) {
                    return Err(Error::NotAdmissible("zero coefficient in relation".into()));
                }
                let p = relation_path(q, pr)?;
                if p.arrows.len() < 2 {
                    return Err(Error::NotAdmissible(
                        "relation not contained in the square of the arrow ideal".into(),
                    ));
                }
                max_rel_len = max_rel_len.max(p.arrows.len());
                match st {
                    None => st = Some((p.source, p.target)),
                    Some(x) => {
                        if x != (p.source, p.target) {
                            return Err(Error::NotAdmissible("relation terms are not parallel".into()));
                        }
                    }
                }
                terms.push((c.clone(), p));
            }
            if terms.is_empty() {
                return Err(Error::NotAdmissible("empty relation".into()));
            }
            rel_paths.push(terms);
        }

        // Grow the window until products of surviving paths fit inside it.
        let mut window = max_rel_len.max(2);
        loop {
            let space = PathSpace::build(q, window)?;
            let (survivors, expr) = Self::ideal_survivors(f, q, &space, &rel_paths)?;
            let max_surv_len = survivors.iter().map(|&i| space.len_of(i)).max().unwrap_or(0);
            if max_surv_len >= length_cap {
                return Err(Error::NotNilpotent { cap: length_cap });
            }
            let needed = (2 * max_surv_len).max(max_rel_len);
            if needed > window {
                window = needed.min(2 * length_cap);
                continue;
            }
            return Self::finish_presentation(q, &space, &survivors, &expr);
        }
    }

    /// Greedy quotient basis: a path survives when its image is independent
    /// of the ideal span plus the earlier survivors. Returns the survivor
    /// indices and an expression matrix whose columns are [ideal rows |
    /// survivor unit vectors] for coordinate extraction.
    fn ideal_survivors(
        f: &F,
        _q: &QuiverPresentation<F>,
        space: &PathSpace,
        rels: &[Vec<(F::Elem, Path)>],
    ) -> Result<(Vec<usize>, Matrix<F>), Error> {
        let n = space.paths.len();
        // all products x * r * y that stay inside the window
        let mut rows: Vec<Vec<F::Elem>> = Vec::new();
        for terms in rels {
            let rl_max = terms.iter().map(|(_, p)| p.arrows.len()).max().unwrap();
            for x in &space.paths {
                for y in &space.paths {
                    if x.arrows.len() + rl_max + y.arrows.len() > space.offsets.len() - 2 {
                        continue;
                    }
                    // product x * r * y: apply y, then r, then x
                    let mut vec = vec![f.zero(); n];
                    let mut any = false;
                    for (c, rp) in terms {
                        let Some(ry) = rp.after(y) else { continue };
                        let Some(xry) = x.after(&ry) else { continue };
                        let idx = space.index_of(&xry).ok_or_else(|| {
                            Error::Internal("windowed product escaped the path space".into())
                        })?;
                        vec[idx] = f.add(&vec[idx], c);
                        any = true;
                    }
                    if any && vec.iter().any(|e| !f.is_zero(e)) {
                        rows.push(vec);
                    }
                }
            }
        }
        let ideal = if rows.is_empty() {
            Matrix::zero(f.clone(), 0, n)
        } else {
            Matrix::from_rows(f.clone(), rows).row_space_basis()
        };
        // greedy: extend the row space by unit vectors of paths, shortest first
        let mut work = ideal.clone();
        let mut survivors = Vec::new();
        for idx in 0..n {
            let mut unit = vec![f.zero(); n];
            unit[idx] = f.one();
            let cand = Matrix::vstack(&[&work, &Matrix::from_rows(f.clone(), vec![unit])]);
            let r = cand.rank();
            if r > work.rank() {
                survivors.push(idx);
                work = cand.row_space_basis();
            }
        }
        // expression matrix: columns = ideal basis rows then survivor units
        let mut cols: Vec<Matrix<F>> = Vec::new();
        let it = ideal.transpose();
        if it.cols() > 0 {
            cols.push(it);
        }
        let mut surv_cols = Matrix::zero(f.clone(), n, survivors.len());
        for (k, &s) in survivors.iter().enumerate() {
            surv_cols.set(s, k, f.one());
        }
        cols.push(surv_cols);
        let refs: Vec<&Matrix<F>> = cols.iter().collect();
        Ok((survivors, Matrix::hstack(&refs)))
    }

    fn finish_presentation(
        q: &QuiverPresentation<F>,
        space: &PathSpace,
        survivors: &[usize],
        expr: &Matrix<F>,
    ) -> Result<Self, Error> {
        let f = &q.field;
        let dim = survivors.len();
        let n_ideal = expr.cols() - dim;
        let labels: Vec<String> = survivors.iter().map(|&i| space.paths[i].label(q)).collect();

        // reduce an arbitrary path-space vector to survivor coordinates
        let reduce = |v: &Matrix<F>| -> Result<Vec<F::Elem>, Error> {
            let x = expr
                .solve(v)
                .ok_or_else(|| Error::Internal("path vector outside ideal + survivor span".into()))?;
            Ok((0..dim).map(|k| x.at(n_ideal + k, 0).clone()).collect())
        };

        let mut mult = vec![vec![Vec::new(); dim]; dim];
        for (i, &pi) in survivors.iter().enumerate() {
            for (j, &pj) in survivors.iter().enumerate() {
                // b_i * b_j: apply b_j first
                let prod = space.paths[pi].after(&space.paths[pj]);
                mult[i][j] = match prod {
                    None => vec![f.zero(); dim],
                    Some(p) => {
                        let idx = space
                            .index_of(&p)
                            .ok_or_else(|| Error::Internal("basis product escaped the window".into()))?;
                        let mut v = Matrix::zero(f.clone(), space.paths.len(), 1);
                        v.set(idx, 0, f.one());
                        reduce(&v)?
                    }
                };
            }
        }

        let mut unit = vec![f.zero(); dim];
        let mut idempotents = Vec::new();
        for v in 0..q.vertices.len() {
            let triv = Path::trivial(v);
            let k = survivors
                .iter()
                .position(|&i| space.paths[i] == triv)
                .ok_or_else(|| Error::NotAdmissible(format!("trivial path e{} died in the quotient", q.vertices[v])))?;
            unit[k] = f.one();
            idempotents.push(vec![k]);
        }
        let radical: Vec<usize> = (0..dim)
            .filter(|&k| !space.paths[survivors[k]].arrows.is_empty())
            .collect();

        let a = Algebra::from_parts(f.clone(), labels, mult, unit, idempotents, radical)?;
        // every input relation must vanish in the quotient
        for terms in q.relations.iter() {
            let mut v = Matrix::zero(f.clone(), space.paths.len(), 1);
            for (c, pr) in &terms.terms {
                let p = relation_path(q, pr)?;
                let idx = space.index_of(&p).unwrap();
                let cur = v.at(idx, 0).clone();
                v.set(idx, 0, f.add(&cur, c));
            }
            let coords = reduce(&v)?;
            if coords.iter().any(|e| !f.is_zero(e)) {
                return Err(Error::Internal("relation does not vanish in the constructed quotient".into()));
            }
        }
        Ok(a)
    }

    /// Assemble and fully validate an algebra from raw structure constants.
    pub fn from_parts(
        field: F,
        labels: Vec<String>,
        mult: Vec<Vec<Vec<F::Elem>>>,
        unit: Vec<F::Elem>,
        idempotents: Vec<Vec<usize>>,
        radical: Vec<usize>,
    ) -> Result<Self, Error> {
        let dim = labels.len();
        let mut a = Algebra {
            field,
            dim,
            labels,
            mult,
            unit,
            idempotents,
            radical,
            hash: String::new(),
        };
        a.hash = a.compute_hash();
        a.validate()?;
        Ok(a)
    }

    fn compute_hash(&self) -> String {
        let mut h = Sha256::new();
        let mut s = String::new();
        let _ = write!(s, "{};{};", self.field.spec(), self.dim);
        for l in &self.labels {
            let _ = write!(s, "{l},");
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                for e in &self.mult[i][j] {
                    let _ = write!(s, "{};", self.field.elem_to_string(e));
                }
            }
        }
        for e in &self.unit {
            let _ = write!(s, "{};", self.field.elem_to_string(e));
        }
        let _ = write!(s, "{:?};{:?}", self.idempotents, self.radical);
        h.update(s.as_bytes());
        hex_string(&h.finalize())
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn hash(&self) -> &str {
        &self.hash
    }

    pub fn num_vertices(&self) -> usize {
        self.idempotents.len()
    }

    pub fn radical_indices(&self) -> &[usize] {
        &self.radical
    }

    pub fn unit_coords(&self) -> &[F::Elem] {
        &self.unit
    }

    pub fn mult_coords(&self, i: usize, j: usize) -> &[F::Elem] {
        &self.mult[i][j]
    }

    pub fn same_as(&self, other: &Algebra<F>) -> bool {
        self.hash == other.hash
    }

    pub fn basis_coords(&self, i: usize) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    pub fn idempotent_coords(&self, v: usize) -> Vec<F::Elem> {
        let mut out = vec![self.field.zero(); self.dim];
        for &i in &self.idempotents[v] {
            out[i] = self.field.one();
        }
        out
    }

    /// Product of two elements given by coordinate vectors.
    pub fn mul_elems(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for i in 0..self.dim {
            if f.is_zero(&x[i]) {
                continue;
            }
            for j in 0..self.dim {
                if f.is_zero(&y[j]) {
                    continue;
                }
                let c = f.mul(&x[i], &y[j]);
                for (l, m) in self.mult[i][j].iter().enumerate() {
                    if !f.is_zero(m) {
                        out[l] = f.add(&out[l], &f.mul(&c, m));
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by basis element i.
    pub fn left_mult(&self, i: usize) -> Matrix<F> {
        Matrix::from_fn(self.field.clone(), self.dim, self.dim, |r, c| self.mult[i][c][r].clone())
    }

    /// Matrix of right multiplication by basis element i.
    pub fn right_mult(&self, i: usize) -> Matrix<F> {
        Matrix::from_fn(self.field.clone(), self.dim, self.dim, |r, c| self.mult[c][i][r].clone())
    }

    pub fn left_mult_of(&self, x: &[F::Elem]) -> Matrix<F> {
        let f = &self.field;
        let mut m = Matrix::zero(f.clone(), self.dim, self.dim);
        for (i, c) in x.iter().enumerate() {
            if !f.is_zero(c) {
                m = m.add(&self.left_mult(i).scale(c));
            }
        }
        m
    }

    pub fn right_mult_of(&self, x: &[F::Elem]) -> Matrix<F> {
        let f = &self.field;
        let mut m = Matrix::zero(f.clone(), self.dim, self.dim);
        for (i, c) in x.iter().enumerate() {
            if !f.is_zero(c) {
                m = m.add(&self.right_mult(i).scale(c));
            }
        }
        m
    }

    /// Algebra generators: the idempotents plus lifts of a basis of J/J^2;
    /// sufficient for intertwiner computations over the (basic) algebras
    /// this crate constructs.
    pub fn generators(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let mut gens: Vec<Vec<F::Elem>> = (0..self.num_vertices()).map(|v| self.idempotent_coords(v)).collect();
        // span of J^2 inside the radical coordinates
        let mut sq_rows: Vec<Vec<F::Elem>> = Vec::new();
        for &i in &self.radical {
            for &j in &self.radical {
                let v = &self.mult[i][j];
                if v.iter().any(|e| !f.is_zero(e)) {
                    sq_rows.push(v.clone());
                }
            }
        }
        let mut work = if sq_rows.is_empty() {
            Matrix::zero(f.clone(), 0, self.dim)
        } else {
            Matrix::from_rows(f.clone(), sq_rows).row_space_basis()
        };
        for &i in &self.radical {
            let unit = Matrix::from_rows(f.clone(), vec![self.basis_coords(i)]);
            let cand = Matrix::vstack(&[&work, &unit]);
            if cand.rank() > work.rank() {
                gens.push(self.basis_coords(i));
                work = cand.row_space_basis();
            }
        }
        gens
    }

    // -----------------------------------------------------------------
    // construction invariants

    pub fn validate(&self) -> Result<(), Error> {
        let f = &self.field;
        let d = self.dim;
        if self.mult.len() != d || self.mult.iter().any(|r| r.len() != d || r.iter().any(|v| v.len() != d)) {
            return Err(Error::Invariant("structure constant table has wrong shape".into()));
        }
        // unit is a two-sided identity
        for i in 0..d {
            let b = self.basis_coords(i);
            if self.mul_elems(&self.unit, &b) != b || self.mul_elems(&b, &self.unit) != b {
                return Err(Error::Invariant(format!("unit is not an identity against basis element {i}")));
            }
        }
        // associativity on all basis triples
        for i in 0..d {
            for j in 0..d {
                let ij = self.mult[i][j].clone();
                for l in 0..d {
                    let b_l = self.basis_coords(l);
                    let lhs = self.mul_elems(&ij, &b_l);
                    let jl = &self.mult[j][l];
                    let rhs = self.mul_elems(&self.basis_coords(i), jl);
                    if lhs != rhs {
                        return Err(Error::Invariant(format!("associativity fails at triple ({i},{j},{l})")));
                    }
                }
            }
        }
        // idempotents: orthogonal, idempotent, summing to the unit
        let n_v = self.idempotents.len();
        let mut sum = vec![f.zero(); d];
        for v in 0..n_v {
            let ev = self.idempotent_coords(v);
            if self.mul_elems(&ev, &ev) != ev {
                return Err(Error::Invariant(format!("e_{v} is not idempotent")));
            }
            for w in 0..n_v {
                if v != w {
                    let ew = self.idempotent_coords(w);
                    if self.mul_elems(&ev, &ew).iter().any(|e| !f.is_zero(e)) {
                        return Err(Error::Invariant(format!("e_{v} e_{w} != 0")));
                    }
                }
            }
            for (s, e) in sum.iter_mut().zip(ev.iter()) {
                *s = f.add(s, e);
            }
        }
        if sum != self.unit {
            return Err(Error::Invariant("idempotents do not sum to the unit".into()));
        }
        self.validate_radical()
    }

    fn validate_radical(&self) -> Result<(), Error> {
        let f = &self.field;
        let d = self.dim;
        // J is a two-sided ideal spanned by basis elements
        let rad_set: std::collections::HashSet<usize> = self.radical.iter().copied().collect();
        let in_rad_span = |v: &[F::Elem]| v.iter().enumerate().all(|(l, e)| rad_set.contains(&l) || f.is_zero(e));
        for &j in &self.radical {
            for i in 0..d {
                if !in_rad_span(&self.mult[i][j]) || !in_rad_span(&self.mult[j][i]) {
                    return Err(Error::Invariant("radical span is not a two-sided ideal".into()));
                }
            }
        }
        // nilpotency: J^(k+1) = J * J^k until zero
        let mut power: Vec<Vec<F::Elem>> = self.radical.iter().map(|&i| self.basis_coords(i)).collect();
        let mut steps = 0usize;
        while !power.is_empty() {
            steps += 1;
            if steps > d + 1 {
                return Err(Error::Invariant("radical candidate is not nilpotent".into()));
            }
            let mut rows = Vec::new();
            for &i in &self.radical {
                for p in &power {
                    let v = self.mul_elems(&self.basis_coords(i), p);
                    if v.iter().any(|e| !f.is_zero(e)) {
                        rows.push(v);
                    }
                }
            }
            if rows.is_empty() {
                break;
            }
            let basis = Matrix::from_rows(f.clone(), rows).row_space_basis();
            power = (0..basis.rows())
                .map(|r| (0..d).map(|c| basis.at(r, c).clone()).collect())
                .collect();
        }
        // A/J semisimple, split flavour: e_v (A/J) e_v is a division algebra.
        // The quotient basis is the non-radical part since J is spanned by
        // basis elements.
        let ss: Vec<usize> = (0..d).filter(|i| !rad_set.contains(i)).collect();
        for v in 0..self.idempotents.len() {
            let ev = self.idempotent_coords(v);
            // basis of e_v (A/J) e_v: project e_v b_i e_v to the ss part
            let mut rows = Vec::new();
            for &i in &ss {
                let x = self.mul_elems(&ev, &self.mul_elems(&self.basis_coords(i), &ev));
                let proj: Vec<F::Elem> = ss.iter().map(|&l| x[l].clone()).collect();
                if proj.iter().any(|e| !f.is_zero(e)) {
                    rows.push(proj);
                }
            }
            if rows.is_empty() {
                return Err(Error::Invariant(format!("e_{v}(A/J)e_{v} is zero")));
            }
            let basis = Matrix::from_rows(f.clone(), rows).row_space_basis();
            if basis.rows() != 1 {
                // Non-split corners are outside the supported scope; the
                // presentation/tensor constructors never produce them.
                return Err(Error::Invariant(format!(
                    "e_{v}(A/J)e_{v} has dimension {} > 1; non-split semisimple quotients are unsupported",
                    basis.rows()
                )));
            }
            // the single generator must be non-nilpotent (it is e_v mod J)
            let gen: Vec<F::Elem> = {
                let mut g = vec![f.zero(); d];
                for (k, &l) in ss.iter().enumerate() {
                    g[l] = basis.at(0, k).clone();
                }
                g
            };
            let mut pow = gen.clone();
            for _ in 0..d {
                pow = self.mul_elems(&pow, &gen);
            }
            let proj_nonzero = ss.iter().any(|&l| !f.is_zero(&pow[l]));
            if !proj_nonzero {
                return Err(Error::Invariant(format!("e_{v}(A/J)e_{v} has a nonzero nilpotent")));
            }
        }
        Ok(())
    }

    // -----------------------------------------------------------------
    // derived algebras

    pub fn opposite(&self) -> Algebra<F> {
        let d = self.dim;
        let mut mult = vec![vec![Vec::new(); d]; d];
        for i in 0..d {
            for j in 0..d {
                mult[i][j] = self.mult[j][i].clone();
            }
        }
        let mut a = Algebra {
            field: self.field.clone(),
            dim: d,
            labels: self.labels.clone(),
            mult,
            unit: self.unit.clone(),
            idempotents: self.idempotents.clone(),
            radical: self.radical.clone(),
            hash: String::new(),
        };
        a.hash = a.compute_hash();
        a
    }

    /// Tensor product over the common ground field; basis ordered with the
    /// left factor major.
    pub fn tensor(&self, other: &Algebra<F>) -> Result<Algebra<F>, Error> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(format!(
                "{} vs {}",
                self.field.spec(),
                other.field.spec()
            )));
        }
        let f = &self.field;
        let (da, db) = (self.dim, other.dim);
        let d = da * db;
        let idx = |i: usize, j: usize| i * db + j;
        let mut labels = Vec::with_capacity(d);
        for i in 0..da {
            for j in 0..db {
                labels.push(format!("{}⊗{}", self.labels[i], other.labels[j]));
            }
        }
        let mut mult = vec![vec![Vec::new(); d]; d];
        for i in 0..da {
            for j in 0..db {
                for k in 0..da {
                    for l in 0..db {
                        let ca = &self.mult[i][k];
                        let cb = &other.mult[j][l];
                        let mut v = vec![f.zero(); d];
                        for (r, ar) in ca.iter().enumerate() {
                            if f.is_zero(ar) {
                                continue;
                            }
                            for (s, bs) in cb.iter().enumerate() {
                                if !f.is_zero(bs) {
                                    v[idx(r, s)] = f.mul(ar, bs);
                                }
                            }
                        }
                        mult[idx(i, j)][idx(k, l)] = v;
                    }
                }
            }
        }
        let mut unit = vec![f.zero(); d];
        for (r, ar) in self.unit.iter().enumerate() {
            for (s, bs) in other.unit.iter().enumerate() {
                let p = f.mul(ar, bs);
                if !f.is_zero(&p) {
                    unit[idx(r, s)] = p;
                }
            }
        }
        let mut idempotents = Vec::new();
        for ev in &self.idempotents {
            for fw in &other.idempotents {
                let mut set = Vec::new();
                for &i in ev {
                    for &j in fw {
                        set.push(idx(i, j));
                    }
                }
                idempotents.push(set);
            }
        }
        // J(A)⊗B + A⊗J(B)
        let rad_a: std::collections::HashSet<usize> = self.radical.iter().copied().collect();
        let rad_b: std::collections::HashSet<usize> = other.radical.iter().copied().collect();
        let radical: Vec<usize> = (0..d)
            .filter(|&k| rad_a.contains(&(k / db)) || rad_b.contains(&(k % db)))
            .collect();
        Algebra::from_parts(f.clone(), labels, mult, unit, idempotents, radical)
    }

    /// The enveloping algebra A ⊗ A^op.
    pub fn enveloping(&self) -> Algebra<F> {
        self.tensor(&self.opposite()).expect("same field")
    }
}

pub fn hex_string(bytes: &[u8]) -> String {
    let mut s = String::with_capacity(bytes.len() * 2);
    for b in bytes {
        let _ = write!(s, "{b:02x}");
    }
    s
}
