#![allow(dead_code)]

use toricnf_core::{Rat, SemigroupPresentation};

pub fn q(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

pub fn presentation(cols: &[&[i64]]) -> SemigroupPresentation {
    SemigroupPresentation::from_i64_columns(cols).unwrap()
}

pub fn example15() -> SemigroupPresentation {
    presentation(&[&[2, 0, 0], &[3, 0, 0], &[0, 1, 0], &[1, 1, 0], &[2, 0, 1], &[0, 2, 1]])
}

pub fn example23() -> SemigroupPresentation {
    presentation(&[&[1, 0, 0], &[1, 1, 0], &[1, 3, 0], &[1, 4, 0], &[1, 1, 1], &[1, 4, 1]])
}

pub fn example37() -> SemigroupPresentation {
    presentation(&[&[1, 0], &[2, 2], &[0, 1]])
}

pub fn example51() -> SemigroupPresentation {
    presentation(&[&[1, 0], &[1, 1], &[1, 3], &[1, 4]])
}

pub fn example52() -> SemigroupPresentation {
    presentation(&[&[0, 2], &[0, 3], &[-1, 1], &[-1, 2], &[-2, 2], &[1, 1]])
}

pub fn corpus() -> Vec<(&'static str, SemigroupPresentation)> {
    vec![
        ("example15", example15()),
        ("example23", example23()),
        ("example37", example37()),
        ("example51", example51()),
        ("example52", example52()),
    ]
}
