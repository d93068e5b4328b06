use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use weightlattice::algebra::{Field, FieldElem, IntMatrix, Matrix};

fn random_elem(f: &Field, rng: &mut ChaCha8Rng) -> FieldElem {
    match f.size() {
        Some(q) => FieldElem::Finite(rng.gen_range(0..q)),
        None => {
            let n = BigInt::from(rng.gen_range(-30i64..=30));
            let d = BigInt::from(rng.gen_range(1i64..=12));
            FieldElem::Rational(BigRational::new(n, d))
        }
    }
}

fn fields() -> Vec<Field> {
    vec![
        Field::prime(2).unwrap(),
        Field::prime(3).unwrap(),
        Field::prime(101).unwrap(),
        Field::galois(2, 2).unwrap(),
        Field::galois(3, 2).unwrap(),
        Field::galois(2, 4).unwrap(),
        Field::galois(5, 3).unwrap(),
        Field::galois(2, 9).unwrap(),
        Field::rationals(),
    ]
}

#[test]
fn field_axioms_on_random_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for f in fields() {
        for _ in 0..10_000 {
            let (a, b, c) = (random_elem(&f, &mut rng), random_elem(&f, &mut rng), random_elem(&f, &mut rng));
            let add = |x: &FieldElem, y: &FieldElem| f.add(x, y).unwrap();
            let mul = |x: &FieldElem, y: &FieldElem| f.mul(x, y).unwrap();
            assert_eq!(add(&add(&a, &b), &c), add(&a, &add(&b, &c)), "{f}");
            assert_eq!(mul(&mul(&a, &b), &c), mul(&a, &mul(&b, &c)), "{f}");
            assert_eq!(add(&a, &b), add(&b, &a));
            assert_eq!(mul(&a, &b), mul(&b, &a));
            assert_eq!(mul(&a, &add(&b, &c)), add(&mul(&a, &b), &mul(&a, &c)));
            assert!(f.is_zero(&add(&a, &f.neg(&a).unwrap())));
            assert_eq!(f.sub(&add(&a, &b), &b).unwrap(), a);
            if !f.is_zero(&a) {
                assert_eq!(mul(&a, &f.inv(&a).unwrap()), f.one(), "{f}");
                assert_eq!(f.div(&mul(&b, &a), &a).unwrap(), b);
            }
        }
    }
}

fn random_matrix(f: &Field, rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let data = (0..rows * cols).map(|_| random_elem(f, rng)).collect();
    Matrix::new(f.clone(), rows, cols, data).unwrap()
}

#[test]
fn rref_and_kernel_properties() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for f in fields() {
        for _ in 0..40 {
            let (r, c) = (rng.gen_range(1..6), rng.gen_range(1..8));
            let m = random_matrix(&f, r, c, &mut rng);
            let rr = m.rref();
            assert_eq!(rr.matrix.rref().matrix, rr.matrix);
            assert!(rr.matrix.same_row_space(&m));
            let ker = m.kernel_basis();
            assert_eq!(rr.rank + ker.rows(), c);
            if ker.rows() > 0 {
                let prod = m.mul(&ker.transpose()).unwrap();
                assert!((0..prod.rows()).all(|i| (0..prod.cols()).all(|j| f.is_zero(prod.get(i, j)))));
                assert_eq!(ker.rank(), ker.rows());
            }
        }
    }
}

fn random_int_matrix(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> IntMatrix {
    let data = (0..rows * cols).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect();
    IntMatrix::new(rows, cols, data).unwrap()
}

#[test]
fn hermite_and_smith_properties() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..200 {
        let (r, c) = (rng.gen_range(1..5), rng.gen_range(1..7));
        let m = random_int_matrix(r, c, &mut rng);
        let h = m.hnf();
        assert_eq!(h.u.mul(&m), h.h);
        assert_eq!(h.u.determinant().abs(), BigInt::from(1));
        let s = m.smith();
        assert_eq!(s.u.mul(&m).mul(&s.w), s.d);
        let sat = m.row_saturation();
        assert_eq!(sat.rows(), s.rank);
        if sat.rows() > 0 {
            assert!(sat.elementary_divisors().iter().all(|d| d == &BigInt::from(1)));
            assert_eq!(sat.elementary_divisors().len(), sat.rows());
            // same rational span: stacking adds no rank
            let q = Field::rationals();
            let to_q = |x: &IntMatrix| {
                let rows = (0..x.rows()).map(|i| x.row(i).iter().map(|v| q.from_bigint(v)).collect()).collect();
                Matrix::from_rows(q.clone(), rows).unwrap()
            };
            let mq = to_q(&m);
            let nonzero: Vec<usize> = (0..mq.rows()).collect();
            assert_eq!(mq.select_rows(&nonzero).rank(), to_q(&sat).rank());
            let stacked: Vec<Vec<FieldElem>> =
                (0..r).map(|i| mq.row(i).to_vec()).chain((0..sat.rows()).map(|i| to_q(&sat).row(i).to_vec())).collect();
            assert_eq!(Matrix::from_rows(q.clone(), stacked).unwrap().rank(), s.rank);
        }
    }
}
