use gth_core::linalg::*;
use proptest::prelude::*;

fn mat_mul(a: &[Vec<u64>], b: &[Vec<u64>], m: u64) -> Vec<Vec<u64>> {
    let rows = a.len();
    let inner = b.len();
    let cols = b[0].len();
    (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| (0..inner).fold(0u64, |acc, k| (acc + a[i][k] * b[k][j]) % m))
                .collect()
        })
        .collect()
}

/// Every vector of the span, by brute force over all coefficient tuples.
fn brute_span(rows: &[Vec<u64>], ncols: usize, m: u64) -> std::collections::BTreeSet<Vec<u64>> {
    let mut out = std::collections::BTreeSet::new();
    let k = rows.len();
    let mut coef = vec![0u64; k];
    loop {
        let mut v = vec![0u64; ncols];
        for (c, r) in coef.iter().zip(rows) {
            for (x, &y) in v.iter_mut().zip(r) {
                *x = (*x + c * y) % m;
            }
        }
        out.insert(v);
        let mut i = 0;
        loop {
            if i == k {
                return out;
            }
            coef[i] += 1;
            if coef[i] < m {
                break;
            }
            coef[i] = 0;
            i += 1;
        }
    }
}

fn pp_strategy() -> impl Strategy<Value = PrimePower> {
    prop_oneof![
        Just(PrimePower::new(2, 1)),
        Just(PrimePower::new(2, 2)),
        Just(PrimePower::new(2, 3)),
        Just(PrimePower::new(3, 1)),
        Just(PrimePower::new(3, 2)),
        Just(PrimePower::new(5, 1)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn howell_membership_matches_brute_force(
        pp in pp_strategy(),
        rows in prop::collection::vec(prop::collection::vec(0u64..64, 3), 0..4),
        probe in prop::collection::vec(0u64..64, 3),
    ) {
        let ncols = 3;
        let hf = howell_form(&rows, ncols, pp);
        let span = brute_span(&rows, ncols, pp.m);
        // span sizes agree
        prop_assert_eq!(hf.span_size(), span.len() as u128);
        // membership agrees on the probe
        let reduced: Vec<u64> = probe.iter().map(|&x| x % pp.m).collect();
        prop_assert_eq!(hf.contains(&probe), span.contains(&reduced));
        // every generator is in the span
        for r in &rows {
            prop_assert!(hf.contains(r));
        }
    }

    #[test]
    fn express_recovers_coefficients(
        pp in pp_strategy(),
        rows in prop::collection::vec(prop::collection::vec(0u64..64, 3), 1..4),
        coef in prop::collection::vec(0u64..64, 3),
    ) {
        let ncols = 3;
        let mut v = vec![0u64; ncols];
        for (c, r) in coef.iter().zip(&rows) {
            for (x, &y) in v.iter_mut().zip(r) {
                *x = (*x + c * y) % pp.m;
            }
        }
        let x = express_in_span(&rows, &v, ncols, pp).expect("v is in the span");
        let mut w = vec![0u64; ncols];
        for (c, r) in x.iter().zip(&rows) {
            for (t, &y) in w.iter_mut().zip(r) {
                *t = (*t + c * y) % pp.m;
            }
        }
        prop_assert_eq!(w, v);
    }

    #[test]
    fn right_kernel_is_exact(
        pp in pp_strategy(),
        a in prop::collection::vec(prop::collection::vec(0u64..64, 3), 1..4),
    ) {
        let ncols = 3;
        let gens = right_kernel(&a, ncols, pp);
        // every generator really is in the kernel
        for x in &gens {
            for row in &a {
                let dot = row.iter().zip(x).fold(0u64, |acc, (&r, &xv)| (acc + r * xv) % pp.m);
                prop_assert_eq!(dot, 0);
            }
        }
        // kernel size matches brute force
        let hf = howell_form(&gens, ncols, pp);
        let brute = {
            let mut count = 0u128;
            let m = pp.m;
            let mut x = vec![0u64; ncols];
            'outer: loop {
                if a.iter().all(|row| {
                    row.iter().zip(&x).fold(0u64, |acc, (&r, &xv)| (acc + r * xv) % m) == 0
                }) {
                    count += 1;
                }
                let mut i = 0;
                loop {
                    if i == ncols {
                        break 'outer;
                    }
                    x[i] += 1;
                    if x[i] < m {
                        break;
                    }
                    x[i] = 0;
                    i += 1;
                }
            }
            count
        };
        prop_assert_eq!(hf.span_size(), brute);
    }

    #[test]
    fn smith_local_transforms_check_out(
        pp in pp_strategy(),
        a in prop::collection::vec(prop::collection::vec(0u64..64, 3), 1..4),
    ) {
        let ncols = 3;
        let s = smith_local(&a, ncols, pp);
        let m = pp.m;
        let reduced: Vec<Vec<u64>> = a
            .iter()
            .map(|r| r.iter().map(|&x| x % m).collect())
            .collect();
        let lar = mat_mul(&mat_mul(&s.left, &reduced, m), &s.right, m);
        for (i, row) in lar.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                let want = if i == j { s.diag.get(i).copied().unwrap_or(0) % m } else { 0 };
                prop_assert_eq!(x, want, "entry ({}, {})", i, j);
            }
        }
        let ident = mat_mul(&s.right_inv, &s.right, m);
        for (i, row) in ident.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                prop_assert_eq!(x, u64::from(i == j));
            }
        }
        // diagonal valuations are nondecreasing
        for w in s.diag.windows(2) {
            prop_assert!(pp.val(w[0]) <= pp.val(w[1]));
        }
    }
}
