use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{make_algebra, Algebra, Kind, MatrixShape, StructureTable};
use crate::error::{Error, Result};
use crate::linalg::{Accumulator, BasedSpace, RowReducer, SparseVec, Subspace};
use crate::scalar::Scalar;

/// The ground field as a one-dimensional algebra with basis `1`.
pub fn scalar_field() -> Algebra {
    let mut t = StructureTable::new(1);
    t.set(0, 0, SparseVec::unit(0));
    let space = BasedSpace::new(alloc::vec![String::from("1")]).unwrap();
    make_algebra("k", space, t, Kind::Associative, Some(SparseVec::unit(0))).unwrap()
}

fn matrix_label(n: usize, i: usize, j: usize, a: &str) -> String {
    if n < 10 {
        format!("e{}{}({a})", i + 1, j + 1)
    } else {
        format!("e{},{}({a})", i + 1, j + 1)
    }
}

/// `M_n(A)` with basis `e_ij(a_p)`, index `(i·n + j)·dim A + p`.
pub fn matrix_algebra(a: &Algebra, n: usize) -> Result<Algebra> {
    a.require_kind(Kind::Associative)?;
    if n == 0 {
        return Err(Error::InvalidArgument("matrix size must be positive".into()));
    }
    let d = a.dim();
    let idx = |i: usize, j: usize, p: usize| (i * n + j) * d + p;
    let mut labels = Vec::with_capacity(n * n * d);
    for i in 0..n {
        for j in 0..n {
            for p in 0..d {
                labels.push(matrix_label(n, i, j, a.space().label(p)));
            }
        }
    }
    let mut t = StructureTable::new(n * n * d);
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                for p in 0..d {
                    for q in 0..d {
                        let prod = a.basis_mul(p, q);
                        if prod.is_zero() {
                            continue;
                        }
                        t.set(idx(i, j, p), idx(j, l, q), prod.remap(|r| idx(i, l, r)));
                    }
                }
            }
        }
    }
    let unit = a.unit().map(|u| {
        SparseVec::from_terms((0..n).flat_map(|i| u.iter().map(move |(p, c)| (idx(i, i, p), c.clone()))))
    });
    let name = format!("M{n}({})", a.name());
    Ok(make_algebra(&name, BasedSpace::new(labels)?, t, Kind::Associative, unit)?
        .with_shape(MatrixShape { n, base_dim: d }))
}

/// `[A, A]`: the span of all basis commutators.
pub fn commutator_subspace(a: &Algebra) -> Result<Subspace> {
    a.require_kind(Kind::Associative)?;
    let n = a.dim();
    let mut r = RowReducer::new(n);
    for i in 0..n {
        for j in i + 1..n {
            r.insert(&(a.basis_mul(i, j) - a.basis_mul(j, i)));
        }
    }
    Ok(Subspace::from_reducer(r))
}

/// `A⁽⁺⁾`: same space with `x∘y = ½(xy + yx)`.
pub fn plus_algebra(a: &Algebra) -> Result<Algebra> {
    a.require_kind(Kind::Associative)?;
    let n = a.dim();
    let half = Scalar::half();
    let mut t = StructureTable::new(n);
    for i in 0..n {
        for j in 0..n {
            let mut v = a.basis_mul(i, j) + a.basis_mul(j, i);
            v = v.scaled(&half);
            t.set(i, j, v);
        }
    }
    let name = format!("{}+", a.name());
    make_algebra(&name, a.space().clone(), t, Kind::Jordan, a.unit().cloned())
}

/// `sl_n(A)` inside `M_n(A)`, with its matrix-level bookkeeping.
///
/// Basis order: off-diagonal `e_ij(a_p)` for `i ≠ j` in lexicographic
/// order, then `e_ii(a_p) - e_{i+1,i+1}(a_p)` for `i < n-1`, then
/// `e_nn(c_q)` for the reduced basis `c_q` of `[A, A]`.
#[derive(Clone, Debug)]
pub struct SpecialLinear {
    algebra: Algebra,
    n: usize,
    base: Algebra,
    matrix: Algebra,
    commutators: Subspace,
}

pub fn sl_n(a: &Algebra, n: usize) -> Result<SpecialLinear> {
    a.require_kind(Kind::Associative)?;
    a.require_unit()?;
    if n < 2 {
        return Err(Error::InvalidArgument(format!("sl_n needs n >= 2, got {n}")));
    }
    let matrix = matrix_algebra(a, n)?;
    let commutators = commutator_subspace(a)?;
    let d = a.dim();
    let mut labels = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                for p in 0..d {
                    labels.push(matrix_label(n, i, j, a.space().label(p)));
                }
            }
        }
    }
    for i in 0..n - 1 {
        for p in 0..d {
            let l = a.space().label(p);
            labels.push(format!("{}-{}", matrix_label(n, i, i, l), matrix_label(n, i + 1, i + 1, l)));
        }
    }
    for c in commutators.basis() {
        labels.push(matrix_label(n, n - 1, n - 1, &a.space().format_vector(c)));
    }
    let mut sl = SpecialLinear {
        algebra: scalar_field(),
        n,
        base: a.clone(),
        matrix,
        commutators,
    };
    let basis: Vec<SparseVec> = (0..labels.len()).map(|k| sl.basis_in_matrix(k)).collect();
    let dim = basis.len();
    let mut t = StructureTable::new(dim);
    for p in 0..dim {
        for q in p + 1..dim {
            let x = &basis[p];
            let y = &basis[q];
            let comm = &sl.matrix.mul(x, y) - &sl.matrix.mul(y, x);
            let coords = sl.from_matrix(&comm)?;
            t.set(q, p, -&coords);
            t.set(p, q, coords);
        }
    }
    let name = format!("sl{n}({})", a.name());
    sl.algebra = make_algebra(&name, BasedSpace::new(labels)?, t, Kind::Lie, None)?;
    Ok(sl)
}

impl SpecialLinear {
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn base(&self) -> &Algebra {
        &self.base
    }

    pub fn matrix(&self) -> &Algebra {
        &self.matrix
    }

    pub fn commutators(&self) -> &Subspace {
        &self.commutators
    }

    fn d(&self) -> usize {
        self.base.dim()
    }

    fn offdiag_slot(&self, i: usize, j: usize) -> usize {
        i * (self.n - 1) + if j < i { j } else { j - 1 }
    }

    /// `e_ij(a)` as an element of `M_n(A)`.
    pub fn matrix_unit(&self, i: usize, j: usize, a: &SparseVec) -> SparseVec {
        let (n, d) = (self.n, self.d());
        a.remap(|p| (i * n + j) * d + p)
    }

    fn basis_in_matrix(&self, k: usize) -> SparseVec {
        let (n, d) = (self.n, self.d());
        let off = n * (n - 1) * d;
        if k < off {
            let slot = k / d;
            let (i, jj) = (slot / (n - 1), slot % (n - 1));
            let j = if jj < i { jj } else { jj + 1 };
            return SparseVec::unit((i * n + j) * d + k % d);
        }
        let k = k - off;
        if k < (n - 1) * d {
            let (i, p) = (k / d, k % d);
            return &SparseVec::unit((i * n + i) * d + p) - &SparseVec::unit(((i + 1) * n + i + 1) * d + p);
        }
        let c = &self.commutators.basis()[k - (n - 1) * d];
        self.matrix_unit(n - 1, n - 1, c)
    }

    pub fn to_matrix(&self, x: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (k, c) in x.iter() {
            acc.add_scaled(c, &self.basis_in_matrix(k));
        }
        acc.finish()
    }

    /// Coordinates of a matrix whose trace lies in `[A, A]`.
    pub fn from_matrix(&self, x: &SparseVec) -> Result<SparseVec> {
        let (n, d) = (self.n, self.d());
        let mut out = Accumulator::new();
        let mut diag: Vec<Accumulator> = (0..n).map(|_| Accumulator::new()).collect();
        for (m, c) in x.iter() {
            let (ij, p) = (m / d, m % d);
            let (i, j) = (ij / n, ij % n);
            if i == j {
                diag[i].add(p, c);
            } else {
                out.add(self.offdiag_slot(i, j) * d + p, c);
            }
        }
        let diag: Vec<SparseVec> = diag.into_iter().map(Accumulator::finish).collect();
        let base = n * (n - 1) * d;
        let mut partial = SparseVec::new();
        for (i, di) in diag.iter().enumerate().take(n - 1) {
            partial.add_scaled(&Scalar::one(), di);
            for (p, c) in partial.iter() {
                out.add(base + i * d + p, c);
            }
        }
        partial.add_scaled(&Scalar::one(), &diag[n - 1]);
        let coords = self.commutators.coordinates(&partial).ok_or_else(|| {
            Error::InvalidArgument(format!(
                "trace {} is not in [A,A]",
                self.base.space().format_vector(&partial)
            ))
        })?;
        let base = base + (n - 1) * d;
        for (q, c) in coords.iter() {
            out.add(base + q, c);
        }
        Ok(out.finish())
    }

    /// `e_ij(a)` in `sl_n` coordinates, `i ≠ j`.
    pub fn elementary(&self, i: usize, j: usize, a: &SparseVec) -> Result<SparseVec> {
        if i >= self.n || j >= self.n || i == j {
            return Err(Error::InvalidArgument(format!(
                "no off-diagonal unit ({i},{j}) in sl{}",
                self.n
            )));
        }
        self.base.space().check_vector(a)?;
        let d = self.d();
        Ok(a.remap(|p| self.offdiag_slot(i, j) * d + p))
    }

    /// `h_ij = e_ii(1) - e_jj(1)` in `sl_n` coordinates.
    pub fn coroot(&self, i: usize, j: usize) -> Result<SparseVec> {
        let one = self.base.require_unit()?;
        let m = &self.matrix_unit(i, i, one) - &self.matrix_unit(j, j, one);
        self.from_matrix(&m)
    }

    /// Whether the Lie subalgebra generated by the off-diagonal units is all
    /// of `sl_n(A)`.
    pub fn generated_by_off_diagonal(&self) -> bool {
        let dim = self.algebra.dim();
        let gens = self.n * (self.n - 1) * self.d();
        let mut r = RowReducer::new(dim);
        let mut work: Vec<SparseVec> = Vec::new();
        for k in 0..gens {
            let v = SparseVec::unit(k);
            if r.insert(&v) {
                work.push(v);
            }
        }
        while let Some(v) = work.pop() {
            for k in 0..gens {
                let b = self.algebra.mul(&v, &SparseVec::unit(k));
                if r.insert(&b) {
                    work.push(b);
                }
            }
        }
        r.rank() == dim
    }
}

/// Noncommutative polynomial: `(coefficient, word)` terms, words as
/// generator indices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    pub terms: Vec<(Scalar, Vec<usize>)>,
}

fn words_up_to(ngens: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = alloc::vec![Vec::new()];
    let mut layer: Vec<Vec<usize>> = alloc::vec![Vec::new()];
    for _ in 0..d {
        let mut next = Vec::new();
        for w in &layer {
            for g in 0..ngens {
                let mut w2 = w.clone();
                w2.push(g);
                next.push(w2);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// `k⟨X⟩` modulo the two-sided ideal of `relations` and all words of degree
/// above `max_degree`.
///
/// The ideal is computed exactly as the span of `u·r·v` over all words
/// `u, v` short enough to matter; the basis is the set of standard
/// monomials (words that are not leading terms in degree-lex order).
pub fn truncated_free(generators: &[&str], max_degree: usize, relations: &[Polynomial]) -> Result<Algebra> {
    if max_degree == 0 {
        return Err(Error::InvalidArgument("truncation degree must be at least 1".into()));
    }
    let ngens = generators.len();
    for r in relations {
        for (_, w) in &r.terms {
            if let Some(&g) = w.iter().find(|&&g| g >= ngens) {
                return Err(Error::IndexOutOfRange { index: g, dim: ngens });
            }
        }
    }
    let words = words_up_to(ngens, max_degree);
    let total = words.len();
    let index: BTreeMap<&[usize], usize> = words.iter().enumerate().map(|(k, w)| (w.as_slice(), k)).collect();
    // Largest word gets the smallest column so pivots land on leading terms.
    let col = |k: usize| total - 1 - k;
    let mut ideal = RowReducer::new(total);
    for r in relations {
        let Some(min_deg) = r.terms.iter().map(|(_, w)| w.len()).min() else {
            continue;
        };
        if min_deg > max_degree {
            continue;
        }
        let room = max_degree - min_deg;
        for u in words.iter().filter(|u| u.len() <= room) {
            for v in words.iter().filter(|v| u.len() + v.len() <= room) {
                let mut acc = Accumulator::new();
                for (c, w) in &r.terms {
                    if u.len() + w.len() + v.len() > max_degree {
                        continue;
                    }
                    let word: Vec<usize> = u.iter().chain(w).chain(v).copied().collect();
                    acc.add(col(index[word.as_slice()]), c);
                }
                ideal.insert(&acc.finish());
            }
        }
    }
    let one_col = col(0);
    if ideal.contains(&SparseVec::unit(one_col)) {
        return Err(Error::DegenerateQuotient);
    }
    let basis_words: Vec<usize> = (0..total).filter(|&k| !ideal.is_pivot(col(k))).collect();
    let position: BTreeMap<usize, usize> = basis_words.iter().enumerate().map(|(b, &k)| (col(k), b)).collect();
    let single_char = generators.iter().all(|g| g.chars().count() == 1);
    let label = |w: &[usize]| -> String {
        if w.is_empty() {
            return String::from("1");
        }
        let parts: Vec<&str> = w.iter().map(|&g| generators[g]).collect();
        if single_char {
            parts.concat()
        } else {
            parts.join(".")
        }
    };
    let labels: Vec<String> = basis_words.iter().map(|&k| label(&words[k])).collect();
    let dim = basis_words.len();
    let mut t = StructureTable::new(dim);
    for (a, &ka) in basis_words.iter().enumerate() {
        for (b, &kb) in basis_words.iter().enumerate() {
            let (wa, wb) = (&words[ka], &words[kb]);
            if wa.len() + wb.len() > max_degree {
                continue;
            }
            let w: Vec<usize> = wa.iter().chain(wb).copied().collect();
            let rem = ideal.reduce(&SparseVec::unit(col(index[w.as_slice()])));
            t.set(a, b, rem.remap(|c| position[&c]));
        }
    }
    let rel = if relations.is_empty() { "" } else { ",rel" };
    let name = format!("k<{}>/(deg>{max_degree}{rel})", generators.join(","));
    let unit = SparseVec::unit(position[&one_col]);
    make_algebra(&name, BasedSpace::new(labels)?, t, Kind::Associative, Some(unit))
}

/// Exterior algebra on `m` generators, basis ordered by degree then lexicographically.
pub fn grassmann(m: usize) -> Result<Algebra> {
    if m > 12 {
        return Err(Error::ResourceLimit {
            what: "grassmann generators",
            size: m,
            limit: 12,
        });
    }
    let mut masks: Vec<u32> = (0..1u32 << m).collect();
    let elems = |mask: u32| -> Vec<u32> { (0..m as u32).filter(|b| mask >> b & 1 == 1).collect() };
    masks.sort_by_key(|&x| (x.count_ones(), elems(x)));
    let pos: BTreeMap<u32, usize> = masks.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let labels: Vec<String> = masks
        .iter()
        .map(|&x| {
            if x == 0 {
                String::from("1")
            } else {
                elems(x).iter().map(|b| format!("e{}", b + 1)).collect()
            }
        })
        .collect();
    let dim = masks.len();
    let mut t = StructureTable::new(dim);
    for &a in &masks {
        for &b in &masks {
            if a & b != 0 {
                continue;
            }
            // Sign of moving each generator of b past the larger ones of a.
            let swaps: u32 = elems(b).iter().map(|&j| (a >> (j + 1)).count_ones()).sum();
            let s = if swaps.is_multiple_of(2) { 1 } else { -1 };
            t.set(pos[&a], pos[&b], SparseVec::single(pos[&(a | b)], Scalar::from_int(s)));
        }
    }
    let name = format!("Λ({m})");
    make_algebra(&name, BasedSpace::new(labels)?, t, Kind::Associative, Some(SparseVec::unit(0)))
}

/// `A ⊕ B` with componentwise product.
pub fn direct_sum(a: &Algebra, b: &Algebra) -> Result<Algebra> {
    if a.kind() != b.kind() {
        return Err(Error::KindMismatch {
            expected: a.kind(),
            found: b.kind(),
        });
    }
    let (da, db) = (a.dim(), b.dim());
    let mut labels: Vec<String> = a.space().labels().iter().map(|l| format!("({l},0)")).collect();
    labels.extend(b.space().labels().iter().map(|l| format!("(0,{l})")));
    let mut t = StructureTable::new(da + db);
    for (i, j, v) in a.table().nonzero() {
        t.set(i, j, v.clone());
    }
    for (i, j, v) in b.table().nonzero() {
        t.set(da + i, da + j, v.remap(|k| da + k));
    }
    let unit = match (a.unit(), b.unit()) {
        (Some(ua), Some(ub)) => Some(ua + &ub.remap(|k| da + k)),
        _ => None,
    };
    let name = format!("{}⊕{}", a.name(), b.name());
    make_algebra(&name, BasedSpace::new(labels)?, t, a.kind(), unit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_identity, Identity};

    fn dual() -> Algebra {
        truncated_free(&["x"], 1, &[]).unwrap()
    }

    fn poly(terms: &[(i64, &[usize])]) -> Polynomial {
        Polynomial {
            terms: terms.iter().map(|&(c, w)| (Scalar::from_int(c), w.to_vec())).collect(),
        }
    }

    #[test]
    fn matrix_algebra_dims_and_unit() {
        let k = scalar_field();
        let m2 = matrix_algebra(&k, 2).unwrap();
        assert_eq!(m2.dim(), 4);
        assert_eq!(matrix_algebra(&k, 4).unwrap().dim(), 16);
        let u = m2.unit().unwrap();
        assert_eq!(m2.space().format_vector(u), "e11(1) + e22(1)");
        let e12 = m2.basis("e12(1)").unwrap();
        let e21 = m2.basis("e21(1)").unwrap();
        assert_eq!(m2.mul(&e12, &e21), m2.basis("e11(1)").unwrap());
    }

    #[test]
    fn m2_of_m2_relabels_to_m4() {
        // Oracle: explicit block relabelling e_ij(e_pq) ↦ E_{2i+p, 2j+q}.
        let k = scalar_field();
        let m2 = matrix_algebra(&k, 2).unwrap();
        let m22 = matrix_algebra(&m2, 2).unwrap();
        let m4 = matrix_algebra(&k, 4).unwrap();
        assert_eq!(m22.dim(), 16);
        let relabel = |idx: usize| {
            let (ij, pq) = (idx / 4, idx % 4);
            let (i, j, p, q) = (ij / 2, ij % 2, pq / 2, pq % 2);
            (2 * i + p) * 4 + (2 * j + q)
        };
        for x in 0..16 {
            for y in 0..16 {
                let lhs = m22.basis_mul(x, y).remap(relabel);
                let rhs = m4.basis_mul(relabel(x), relabel(y)).clone();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn commutator_subspace_examples() {
        assert_eq!(commutator_subspace(&dual()).unwrap().dim(), 0);
        let m2 = matrix_algebra(&scalar_field(), 2).unwrap();
        assert_eq!(commutator_subspace(&m2).unwrap().dim(), 3);
        // Brute force over all 16 ordered basis pairs of Λ(e1,e2).
        let g = grassmann(2).unwrap();
        let mut r = RowReducer::new(4);
        for i in 0..4 {
            for j in 0..4 {
                r.insert(&(g.basis_mul(i, j) - g.basis_mul(j, i)));
            }
        }
        assert_eq!(commutator_subspace(&g).unwrap().dim(), r.rank());
        assert_eq!(r.rank(), 1);
    }

    #[test]
    fn sl_n_dims() {
        let k = scalar_field();
        assert_eq!(sl_n(&k, 2).unwrap().algebra().dim(), 3);
        assert_eq!(sl_n(&k, 4).unwrap().algebra().dim(), 15);
        let m2 = matrix_algebra(&k, 2).unwrap();
        let expected = 3 * 4 + commutator_subspace(&m2).unwrap().dim();
        assert_eq!(sl_n(&m2, 2).unwrap().algebra().dim(), expected);
        assert_eq!(expected, 15);
        assert!(sl_n(&k, 1).is_err());
    }

    #[test]
    fn sl_n_is_generated_by_off_diagonal_units() {
        for a in [scalar_field(), dual(), grassmann(2).unwrap()] {
            for n in [2, 3] {
                assert!(sl_n(&a, n).unwrap().generated_by_off_diagonal());
            }
        }
    }

    #[test]
    fn sl_n_requires_unit() {
        let mut t = StructureTable::new(1);
        t.set(0, 0, SparseVec::new());
        let nil = make_algebra("nil", BasedSpace::indexed("n", 1), t, Kind::Associative, None).unwrap();
        assert!(nil.unit().is_none());
        assert!(matches!(sl_n(&nil, 2), Err(Error::NotUnital(_))));
    }

    #[test]
    fn plus_algebra_examples() {
        let d = dual();
        let dp = plus_algebra(&d).unwrap();
        assert_eq!(dp.table(), d.table());
        let m2 = matrix_algebra(&scalar_field(), 2).unwrap();
        let p = plus_algebra(&m2).unwrap();
        let e12 = p.basis("e12(1)").unwrap();
        let e21 = p.basis("e21(1)").unwrap();
        assert_eq!(p.space().format_vector(&p.mul(&e12, &e21)), "1/2*e11(1) + 1/2*e22(1)");
        let g = plus_algebra(&grassmann(2).unwrap()).unwrap();
        assert!(g.mul(&g.basis("e1").unwrap(), &g.basis("e2").unwrap()).is_zero());
        assert!(matches!(
            plus_algebra(&p),
            Err(Error::KindMismatch { .. })
        ));
    }

    #[test]
    fn grassmann_relations() {
        let g = grassmann(2).unwrap();
        let (e1, e2) = (g.basis("e1").unwrap(), g.basis("e2").unwrap());
        assert_eq!(g.mul(&e1, &e2), g.basis("e1e2").unwrap());
        assert_eq!(g.mul(&e2, &e1), -&g.basis("e1e2").unwrap());
        assert!(g.mul(&e1, &e1).is_zero());
        assert_eq!(grassmann(3).unwrap().dim(), 8);
    }

    #[test]
    fn truncated_free_examples() {
        assert_eq!(truncated_free(&["x", "y"], 2, &[]).unwrap().dim(), 7);
        let comm = poly(&[(1, &[0, 1]), (-1, &[1, 0])]);
        let c = truncated_free(&["x", "y"], 2, &[comm]).unwrap();
        assert_eq!(c.dim(), 6);
        assert!(check_identity(&c, Identity::Commutativity).holds);
        let x2 = poly(&[(1, &[0, 0])]);
        let d = truncated_free(&["x"], 1, core::slice::from_ref(&x2)).unwrap();
        assert_eq!(d.dim(), 2);
        assert_eq!(d.table(), dual().table());
        assert_eq!(truncated_free(&["x"], 3, &[x2]).unwrap().dim(), 2);
        assert_eq!(truncated_free(&["x", "y"], 3, &[]).unwrap().dim(), 15);
    }

    #[test]
    fn truncated_free_rejects_collapsing_relations() {
        let bad = poly(&[(1, &[]), (-1, &[0])]);
        // 1 = x forces 1 = x^2 = 0 at degree 1.
        assert!(matches!(
            truncated_free(&["x"], 1, &[bad]),
            Err(Error::DegenerateQuotient)
        ));
        assert!(truncated_free(&["x"], 1, &[poly(&[(1, &[3])])]).is_err());
    }

    #[test]
    fn direct_sum_examples() {
        let k = scalar_field();
        let kk = direct_sum(&k, &k).unwrap();
        assert_eq!(kk.dim(), 2);
        assert_eq!(kk.space().format_vector(kk.unit().unwrap()), "(1,0) + (0,1)");
        let sl2 = sl_n(&k, 2).unwrap();
        let s = direct_sum(sl2.algebra(), sl2.algebra()).unwrap();
        assert_eq!(s.dim(), 6);
        assert_eq!(s.kind(), Kind::Lie);
        assert!(direct_sum(&k, sl2.algebra()).is_err());
    }
}
