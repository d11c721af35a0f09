//! Manual probe for the interval solvers; prints timing per instance.

use sb_search::solver::{solve_cube, solve_multipartite_interval, Budget, CubeInstance};
use sb_search::system::TriangleSystem;
use sb_core::GroupedPointSet;
use std::time::Instant;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let what = args.get(1).map(String::as_str).unwrap_or("all");

    if what == "all" || what == "sbts" {
        for (v, mu) in [
            (6u64, 0u64),
            (6, 1),
            (7, 0),
            (8, 0),
            (8, 3),
            (9, 0),
            (10, 0),
            (10, 1),
            (11, 0),
            (12, 0),
            (12, 1),
        ] {
            let g = GroupedPointSet::uniform(1, v as usize);
            let sys = TriangleSystem::multipartite(&g, None);
            let t = Instant::now();
            let res = solve_multipartite_interval(&sys, None, mu, 42, Budget::default());
            println!(
                "sbts v={} mu={} -> {} in {:.2?}",
                v,
                mu,
                res.is_some(),
                t.elapsed()
            );
        }
    }

    if what == "all" || what == "cube" {
        for n in 2usize..=6 {
            let inst = CubeInstance {
                n,
                exclude_diagonal: false,
                mu: 0,
            };
            let t = Instant::now();
            let res = solve_cube(&inst, 42, Budget::default());
            println!("cube n={} -> {} in {:.2?}", n, res.is_some(), t.elapsed());
        }
    }

    if what == "all" || what == "k6k3" {
        let inst = CubeInstance {
            n: 6,
            exclude_diagonal: true,
            mu: 0,
        };
        let t = Instant::now();
        let res = solve_cube(&inst, 42, Budget::default());
        println!("k6xk3 -> {} in {:.2?}", res.is_some(), t.elapsed());
    }
}
