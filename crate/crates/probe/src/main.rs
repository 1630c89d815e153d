use nalgebra::DMatrix;
use num_complex::Complex64 as C64;
use std::time::Instant;

// CSR complex sparse apply benchmark with XXZ-like sparsity
fn main() {
    let n = 256usize;
    let nnz_per_col = 14usize;
    let mut seed = 0x9e3779b97f4a7c15u64;
    let mut rng = move || {
        seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((seed >> 11) as f64) / ((1u64 << 53) as f64) - 0.5
    };
    // build CSR: row_ptr, col_idx, vals
    let mut row_ptr = vec![0usize; n + 1];
    let mut col_idx = Vec::new();
    let mut vals: Vec<C64> = Vec::new();
    for i in 0..n {
        for k in 0..nnz_per_col {
            col_idx.push((i * 37 + k * 19) % n);
            vals.push(C64::new(rng(), rng()));
        }
        row_ptr[i + 1] = col_idx.len();
    }
    let x: Vec<C64> = (0..n).map(|_| C64::new(rng(), rng())).collect();
    let mut y = vec![C64::new(0.0, 0.0); n];
    let reps = 200_000;
    let t0 = Instant::now();
    for _ in 0..reps {
        for i in 0..n {
            let mut acc = y[i];
            for k in row_ptr[i]..row_ptr[i + 1] {
                acc += vals[k] * x[col_idx[k]];
            }
            y[i] = acc;
        }
    }
    let dt = t0.elapsed().as_secs_f64();
    println!("CSR apply ({} nnz): {:.2} us/op (checksum {})", col_idx.len(), dt / reps as f64 * 1e6, y[0]);

    // real symmetric eigen 256
    let mut a = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        for j in 0..=i {
            let v = rng();
            a[(i, j)] = v;
            a[(j, i)] = v;
        }
    }
    let t0 = Instant::now();
    for _ in 0..5 { let _ = a.clone().symmetric_eigen(); }
    println!("real symmetric_eigen 256 x5 avg: {:.1} ms", t0.elapsed().as_secs_f64() * 1e3 / 5.0);
    let t0 = Instant::now();
    for _ in 0..5 { let _ = a.clone().symmetric_eigenvalues(); }
    println!("real symmetric_eigenvalues 256 x5 avg: {:.1} ms", t0.elapsed().as_secs_f64() * 1e3 / 5.0);
}
