//! Finite fields, vector spaces over them, and the permutation groups used
//! by the linear fixtures: affine groups `V ⋊ A` acting on the points of `V`,
//! and matrix groups acting on nonzero vectors.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::{generate_subgroup, is_prime, FiniteGroup, Subgroup};
use crate::error::{Error, Result};

/// `GF(p^k)` with elements encoded as integers `0..q` whose base-`p` digits
/// are polynomial coefficients. For prime `q` the encoding is the residue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisField {
    p: u32,
    q: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
}

impl GaloisField {
    pub fn new(q: u32) -> Result<Self> {
        let (p, k) = prime_power(q).ok_or_else(|| Error::InvalidFixture(format!("{q} is not a prime power")))?;
        let add = (0..q)
            .flat_map(|a| (0..q).map(move |b| (a, b)))
            .map(|(a, b)| {
                let (da, db) = (digits(a, p, k), digits(b, p, k));
                undigits(&da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect::<Vec<_>>(), p)
            })
            .collect();
        let modulus = find_irreducible(p, k);
        let mul = (0..q)
            .flat_map(|a| (0..q).map(move |b| (a, b)))
            .map(|(a, b)| poly_mul_mod(a, b, p, k, &modulus))
            .collect();
        Ok(Self { p, q, add, mul })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn size(&self) -> u32 {
        self.q
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize]
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize]
    }

    pub fn neg(&self, a: u32) -> u32 {
        (0..self.q).find(|&b| self.add(a, b) == 0).expect("additive inverse")
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        (1..self.q).find(|&b| self.mul(a, b) == 1)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: u32) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// The smallest-encoded generator of the multiplicative group.
    pub fn primitive_element(&self) -> u32 {
        (1..self.q)
            .find(|&a| self.multiplicative_order(a) == self.q as usize - 1)
            .expect("multiplicative group of a finite field is cyclic")
    }
}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut m = q;
    let mut k = 0;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    (m == 1 && is_prime(p)).then_some((p, k))
}

fn digits(mut a: u32, p: u32, k: u32) -> Vec<u32> {
    (0..k)
        .map(|_| {
            let d = a % p;
            a /= p;
            d
        })
        .collect()
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

/// Product of two polynomials reduced modulo the monic `modulus`
/// (coefficients of degrees `0..k`, leading 1 implicit).
fn poly_mul_mod(a: u32, b: u32, p: u32, k: u32, modulus: &[u32]) -> u32 {
    let (da, db) = (digits(a, p, k), digits(b, p, k));
    let mut prod = vec![0u32; (2 * k) as usize];
    for (i, x) in da.iter().enumerate() {
        for (j, y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for deg in (k as usize..prod.len()).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        prod[deg] = 0;
        // x^k = -modulus(x) below degree k.
        for (j, &m) in modulus.iter().enumerate() {
            let idx = deg - k as usize + j;
            prod[idx] = (prod[idx] + c * (p - m % p)) % p;
        }
    }
    undigits(&prod[..k as usize], p)
}

fn find_irreducible(p: u32, k: u32) -> Vec<u32> {
    if k == 1 {
        return vec![0];
    }
    let q = p.pow(k);
    (0..q)
        .map(|code| digits(code, p, k))
        .find(|modulus| (1..q).all(|a| (1..q).all(|b| poly_mul_mod(a, b, p, k, modulus) != 0)))
        .expect("irreducible polynomials exist in every degree")
}

pub type Matrix = Vec<Vec<u32>>;

/// Row vector times matrix.
fn apply_matrix(field: &GaloisField, v: &[u32], m: &Matrix) -> Vec<u32> {
    let d = v.len();
    (0..d)
        .map(|j| (0..d).fold(0, |acc, i| field.add(acc, field.mul(v[i], m[i][j]))))
        .collect()
}

fn mat_mul(field: &GaloisField, a: &Matrix, b: &Matrix) -> Matrix {
    a.iter().map(|row| apply_matrix(field, row, b)).collect()
}

/// Gauss-Jordan inverse; `None` when singular.
pub fn invert_matrix(field: &GaloisField, m: &Matrix) -> Option<Matrix> {
    let d = m.len();
    let mut a: Vec<Vec<u32>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..d).map(|j| u32::from(i == j)));
            r
        })
        .collect();
    for col in 0..d {
        let pivot = (col..d).find(|&r| a[r][col] != 0)?;
        a.swap(col, pivot);
        let inv = field.inv(a[col][col])?;
        for x in a[col].iter_mut() {
            *x = field.mul(*x, inv);
        }
        for r in 0..d {
            if r != col && a[r][col] != 0 {
                let factor = a[r][col];
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x = field.sub(*x, field.mul(factor, y));
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[d..].to_vec()).collect())
}

fn encode(v: &[u32], q: u32) -> u32 {
    v.iter().rev().fold(0, |acc, &x| acc * q + x)
}

fn decode(mut code: u32, q: u32, d: usize) -> Vec<u32> {
    (0..d)
        .map(|_| {
            let x = code % q;
            code /= q;
            x
        })
        .collect()
}

fn all_vectors(q: u32, d: usize) -> impl Iterator<Item = Vec<u32>> {
    (0..q.pow(d as u32)).map(move |c| decode(c, q, d))
}

/// How a generator of the complement acts on `V = V_1 ⊕ … ⊕ V_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSpec {
    /// `λ·Id` on the listed summands and the identity on the others.
    Scalar { lambda: u32, summands: Vec<usize> },
    /// `λ·Id` on the listed summands and the identity on the span of `fixed`,
    /// which must be a complement of those summands.
    ScalarFixing {
        lambda: u32,
        summands: Vec<usize>,
        fixed: Vec<Vec<u32>>,
    },
    /// An explicit invertible matrix acting on row vectors.
    Matrix(Matrix),
}

/// `V ⋊ A` acting on the `q^d` points of `V` by `v ↦ vM + s`.
#[derive(Clone, Debug)]
pub struct VectorSpaceGroup {
    pub group: Arc<FiniteGroup>,
    pub field: GaloisField,
    pub dims: Vec<usize>,
    /// The translation subgroup `V`.
    pub translations: Subgroup,
    /// The linear complement `A`.
    pub complement: Subgroup,
    /// One subgroup per direct summand.
    pub summands: Vec<Subgroup>,
    /// Element index of each specified linear generator.
    pub linear_generators: Vec<u32>,
    pub named: BTreeMap<String, Subgroup>,
}

impl VectorSpaceGroup {
    pub fn dimension(&self) -> usize {
        self.dims.iter().sum()
    }

    fn point_count(&self) -> u32 {
        self.field.size().pow(self.dimension() as u32)
    }

    /// Element index of the translation by `v`.
    pub fn translation(&self, v: &[u32]) -> u32 {
        let q = self.field.size();
        let d = self.dimension();
        let perm: Vec<u32> = (0..self.point_count())
            .map(|c| {
                let w = decode(c, q, d);
                let sum: Vec<u32> = w.iter().zip(v).map(|(&a, &b)| self.field.add(a, b)).collect();
                encode(&sum, q)
            })
            .collect();
        self.group
            .index_of_permutation(&perm)
            .expect("translations lie in the group")
    }

    /// Translation subgroup of the span of `vectors`.
    pub fn subspace(&self, vectors: &[Vec<u32>]) -> Subgroup {
        let seed: Vec<u32> = vectors
            .iter()
            .flat_map(|v| {
                (1..self.field.size()).map(move |c| v.iter().map(|&x| self.field.mul(c, x)).collect::<Vec<u32>>())
            })
            .map(|v| self.translation(&v))
            .collect();
        generate_subgroup(&self.group, &seed)
    }

    /// Coordinates of the basis vectors spanning summand `i`.
    pub fn summand_basis(&self, i: usize) -> Vec<Vec<u32>> {
        let d = self.dimension();
        let start: usize = self.dims[..i].iter().sum();
        (start..start + self.dims[i])
            .map(|j| (0..d).map(|c| u32::from(c == j)).collect())
            .collect()
    }
}

fn spec_matrix(field: &GaloisField, dims: &[usize], spec: &LinearSpec) -> Result<Matrix> {
    let d: usize = dims.iter().sum();
    let offsets: Vec<usize> = dims
        .iter()
        .scan(0, |acc, &x| {
            let o = *acc;
            *acc += x;
            Some(o)
        })
        .collect();
    let coords_of = |summands: &[usize]| -> Result<Vec<usize>> {
        let mut coords = Vec::new();
        for &s in summands {
            if s >= dims.len() {
                return Err(Error::InvalidFixture(format!("no summand {s}")));
            }
            coords.extend(offsets[s]..offsets[s] + dims[s]);
        }
        Ok(coords)
    };
    let check_lambda = |lambda: u32| -> Result<()> {
        if lambda == 0 || lambda >= field.size() {
            Err(Error::InvalidFixture(format!(
                "scalar {lambda} is not a nonzero element of GF({})",
                field.size()
            )))
        } else {
            Ok(())
        }
    };
    let m = match spec {
        LinearSpec::Scalar { lambda, summands } => {
            check_lambda(*lambda)?;
            let coords = coords_of(summands)?;
            (0..d)
                .map(|i| {
                    (0..d)
                        .map(|j| match (i == j, coords.contains(&i)) {
                            (true, true) => *lambda,
                            (true, false) => 1,
                            _ => 0,
                        })
                        .collect()
                })
                .collect()
        }
        LinearSpec::ScalarFixing {
            lambda,
            summands,
            fixed,
        } => {
            check_lambda(*lambda)?;
            let coords = coords_of(summands)?;
            if coords.len() + fixed.len() != d || fixed.iter().any(|v| v.len() != d) {
                return Err(Error::InvalidFixture(
                    "fixed vectors must complete the scaled summands to a basis".into(),
                ));
            }
            let mut basis: Matrix = Vec::new();
            let mut images: Matrix = Vec::new();
            for &c in &coords {
                let e: Vec<u32> = (0..d).map(|j| u32::from(j == c)).collect();
                images.push(e.iter().map(|&x| field.mul(*lambda, x)).collect());
                basis.push(e);
            }
            for v in fixed {
                basis.push(v.clone());
                images.push(v.clone());
            }
            let inv = invert_matrix(field, &basis)
                .ok_or_else(|| Error::InvalidFixture("fixed vectors do not complement the scaled summands".into()))?;
            mat_mul(field, &inv, &images)
        }
        LinearSpec::Matrix(m) => {
            if m.len() != d || m.iter().any(|r| r.len() != d) {
                return Err(Error::InvalidFixture(format!("matrix must be {d}x{d}")));
            }
            m.clone()
        }
    };
    if invert_matrix(field, &m).is_none() {
        return Err(Error::InvalidFixture("linear map is not invertible".into()));
    }
    Ok(m)
}

/// Builds `V ⋊ ⟨maps⟩` for `V = GF(q)^{d_1} ⊕ … ⊕ GF(q)^{d_r}`.
pub fn build_vector_space_semidirect(
    q: u32,
    dims: &[usize],
    maps: &[LinearSpec],
    cap: usize,
) -> Result<VectorSpaceGroup> {
    let field = GaloisField::new(q)?;
    if dims.is_empty() || dims.contains(&0) {
        return Err(Error::InvalidFixture("dimensions must be positive".into()));
    }
    let d: usize = dims.iter().sum();
    let points = q
        .checked_pow(d as u32)
        .filter(|&n| n <= 1 << 16)
        .ok_or_else(|| Error::InvalidFixture("vector space too large".into()))?;
    let matrices = maps
        .iter()
        .map(|s| spec_matrix(&field, dims, s))
        .collect::<Result<Vec<_>>>()?;
    let linear_perm = |m: &Matrix| -> Vec<u32> {
        (0..points)
            .map(|c| encode(&apply_matrix(&field, &decode(c, q, d), m), q))
            .collect()
    };
    let translation_perm = |v: &[u32]| -> Vec<u32> {
        (0..points)
            .map(|c| {
                let w = decode(c, q, d);
                encode(&w.iter().zip(v).map(|(&a, &b)| field.add(a, b)).collect::<Vec<_>>(), q)
            })
            .collect()
    };
    // GF(p)-basis of V: monomials times coordinate vectors.
    let (p, k) = prime_power(q).expect("validated by GaloisField::new");
    let mut gens = Vec::new();
    for j in 0..d {
        for e in 0..k {
            let v: Vec<u32> = (0..d).map(|i| if i == j { p.pow(e) } else { 0 }).collect();
            gens.push(translation_perm(&v));
        }
    }
    let n_translation_gens = gens.len();
    gens.extend(matrices.iter().map(linear_perm));
    let group = Arc::new(FiniteGroup::from_permutations(points as usize, &gens, cap)?);
    let idx = |perm: &Vec<u32>| group.index_of_permutation(perm).expect("generator in group");
    let translation_gens: Vec<u32> = gens[..n_translation_gens].iter().map(idx).collect();
    let linear_generators: Vec<u32> = gens[n_translation_gens..].iter().map(idx).collect();
    let translations = generate_subgroup(&group, &translation_gens);
    let complement = generate_subgroup(&group, &linear_generators);
    let mut out = VectorSpaceGroup {
        group,
        field,
        dims: dims.to_vec(),
        translations,
        complement,
        summands: Vec::new(),
        linear_generators,
        named: BTreeMap::new(),
    };
    out.summands = (0..dims.len()).map(|i| out.subspace(&out.summand_basis(i))).collect();
    out.named.insert("S".into(), out.translations.clone());
    Ok(out)
}

/// A matrix group acting on the nonzero vectors of `GF(q)^d`, as a
/// permutation group of degree `q^d - 1`.
pub fn build_linear_group(q: u32, d: usize, generators: &[Matrix], cap: usize) -> Result<FiniteGroup> {
    let field = GaloisField::new(q)?;
    let points = q.pow(d as u32);
    let mut perms = Vec::new();
    for m in generators {
        if m.len() != d || m.iter().any(|r| r.len() != d) || invert_matrix(&field, m).is_none() {
            return Err(Error::InvalidFixture("generator is not an invertible matrix".into()));
        }
        perms.push(
            (1..points)
                .map(|c| encode(&apply_matrix(&field, &decode(c, q, d), m), q) - 1)
                .collect(),
        );
    }
    FiniteGroup::from_permutations((points - 1) as usize, &perms, cap)
}

/// All vectors of `GF(q)^d` in encoding order; exposed for fixtures.
pub fn vectors(q: u32, d: usize) -> Vec<Vec<u32>> {
    all_vectors(q, d).collect()
}
