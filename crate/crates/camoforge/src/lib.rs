#[cfg(test)]
mod bench {
    use ndarray::Array2;
    use std::time::Instant;

    #[test]
    #[ignore]
    fn gemm_throughput() {
        // typical conv-as-gemm sizes for this project
        for (m, k, n) in [(32, 144, 1024), (64, 288, 256), (128, 576, 64), (16, 144, 4096)] {
            let a = Array2::<f64>::from_elem((m, k), 1.0003);
            let b = Array2::<f64>::from_elem((k, n), 0.9997);
            let reps = (2_000_000_000 / (2 * m * k * n)).max(3);
            let t = Instant::now();
            let mut acc = 0.0;
            for _ in 0..reps {
                let c = a.dot(&b);
                acc += c[[0, 0]];
            }
            let secs = t.elapsed().as_secs_f64();
            let gflops = (2 * m * k * n * reps) as f64 / secs / 1e9;
            println!("m{m} k{k} n{n}: {gflops:.2} GFLOP/s (reps {reps}, acc {acc:.1})");
        }
    }
}
