//! Worked examples with their expected outputs embedded.

use std::collections::BTreeMap;
use std::fmt::Display;

use clap::ValueEnum;
use lrzeta::jdt::{elementary_slide, transport_exponents};
use lrzeta::knuth::phi_w;
use lrzeta::lr::lr_table;
use lrzeta::shapes::star_offsets;
use lrzeta::tableaux::row_word;
use lrzeta::zeta::{verify_product_theorem, verify_skew_theorem, verify_winged_theorem};
use lrzeta::{
    arm_body, lr_expand, phi_t, rectify, star_shape, Exponent, Partition, Result, SkewShape, Tableau,
    TruncationContext,
};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Example {
    /// Labeling of a tableau and its row word.
    Labeling,
    /// A single slide, step by step.
    Slide,
    /// Rectification with exponent transport, and the seven-term expansion.
    SkewExpansion,
    /// The product expansion for μ = (2,2,1,1), ν = (5,2).
    ProductExpansion,
    /// The winged expansion over (5,2,1,1)/(2,1).
    WingedExpansion,
}

#[derive(Serialize)]
pub struct Check {
    name: &'static str,
    expected: Value,
    actual: Value,
    matches: bool,
}

#[derive(Serialize)]
pub struct ReproReport {
    pub example: String,
    pub pass: bool,
    checks: Vec<Check>,
}

fn check(name: &'static str, expected: Value, actual: Value) -> Check {
    Check {
        matches: expected == actual,
        name,
        expected,
        actual,
    }
}

/// Rows as strings with `.` for boxes outside the tableau.
fn rows<T: Display>(t: &Tableau<T>) -> Value {
    let out: Vec<String> = t
        .rows()
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| x.map_or(".".to_string(), |v| v.to_string()))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    json!(out)
}

fn table<'a>(entries: impl Iterator<Item = (&'a Partition, String)>) -> Value {
    let m: BTreeMap<String, String> = entries.map(|(p, c)| (p.to_string(), c)).collect();
    json!(m)
}

fn expected_table(entries: &[(&str, u32)]) -> Value {
    let parts: Vec<(Partition, String)> = entries.iter().map(|(l, c)| (p(l), c.to_string())).collect();
    table(parts.iter().map(|(l, c)| (l, c.clone())))
}

fn p(s: &str) -> Partition {
    s.parse().expect("embedded partition")
}

fn labeling() -> Result<Vec<Check>> {
    let l = Tableau::from_rows(vec![
        vec![Some(1), Some(1), Some(1)],
        vec![Some(2), Some(3), Some(4)],
        vec![Some(3)],
    ]);
    let word = row_word(&l);
    let labeled = phi_t(&l)?;
    let lw = phi_w(&word);
    Ok(vec![
        check(
            "row word",
            json!("3234111"),
            json!(word.0.iter().map(u32::to_string).collect::<String>()),
        ),
        check("labeled tableau", json!(["1_1 1_2 1_3", "2_1 3_2 4_1", "3_1"]), rows(&labeled)),
        check(
            "labeled row word",
            json!("3_1 2_1 3_2 4_1 1_1 1_2 1_3"),
            json!(lw.0.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")),
        ),
        check(
            "labeled row word agrees with row word of labeled tableau",
            json!(true),
            json!(row_word(&labeled) == lw),
        ),
    ])
}

fn slide() -> Result<Vec<Check>> {
    let mut t = Tableau::from_rows(vec![
        vec![None, None, None, Some(6)],
        vec![None, Some(2), Some(4)],
        vec![Some(2), Some(3), Some(5)],
        vec![Some(5), Some(5)],
    ]);
    let mut hole = (2, 1);
    let mut holes = vec![hole];
    let mut states = Vec::new();
    while let Ok((next, h)) = elementary_slide(&t, hole) {
        t = next;
        hole = h;
        holes.push(h);
        states.push(rows(&t));
    }
    Ok(vec![
        check("hole path", json!([[2, 1], [3, 1], [3, 2], [4, 2]]), json!(holes)),
        check(
            "states",
            json!([
                [". . . 6", "2 2 4", ". 3 5", "5 5"],
                [". . . 6", "2 2 4", "3 . 5", "5 5"],
                [". . . 6", "2 2 4", "3 5 5", "5"],
            ]),
            json!(states),
        ),
        check("result", json!([". . . 6", "2 2 4", "3 5 5", "5"]), rows(&t)),
    ])
}

fn skew_expansion() -> Result<Vec<Check>> {
    let l = Tableau::from_rows(vec![vec![None, Some(2)], vec![Some(1), Some(3)], vec![Some(2)]]);
    let r = rectify(&l)?;
    let v = Tableau::from_rows(vec![
        vec![None, Some("v12")],
        vec![Some("v21"), Some("v22")],
        vec![Some("v31")],
    ]);
    let moved = transport_exponents(&v, &r)?;
    let e = lr_expand(&"7,3,1,1/2,1".parse::<SkewShape>()?);
    Ok(vec![
        check("labeled tableau", json!([". 2_2", "1_1 3_1", "2_1"]), rows(&phi_t(&l)?)),
        check("rectification", json!(["1 2", "2 3"]), rows(&r.rectified)),
        check("transported exponents", json!(["v21 v12", "v31 v22"]), rows(&moved)),
        check(
            "expansion of (7,3,1,1)/(2,1)",
            expected_table(&[
                ("7,2", 1),
                ("7,1,1", 1),
                ("6,3", 1),
                ("6,2,1", 2),
                ("6,1,1,1", 1),
                ("5,3,1", 1),
                ("5,2,1,1", 1),
            ]),
            table(e.entries.iter().map(|x| (&x.nu, x.coeff.to_string()))),
        ),
    ])
}

fn product_expansion() -> Result<Vec<Check>> {
    let (mu, nu) = (p("2,2,1,1"), p("5,2"));
    let t = lr_table(&mu, &nu);
    let star = star_shape(&mu, &nu);
    let split = arm_body(&star);
    let (dr, dc) = star_offsets(&mu, &nu);
    // Body exponents collapse to 2; arm boxes get 3, 4, 5.
    let mut arms: BTreeMap<(usize, usize), Exponent> = BTreeMap::new();
    for (k, &c) in split.right_arm.iter().chain(&split.left_arm).enumerate() {
        arms.insert(c, Exponent::int(3 + k as i64));
    }
    let at = |c| arms.get(&c).copied().unwrap_or(Exponent::int(2));
    let s = Tableau::from_cells(mu.cells().map(|(i, j)| ((i, j), at((i + dr, j)))))?;
    let tt = Tableau::from_cells(nu.cells().map(|(i, j)| ((i, j), at((i, j + dc)))))?;
    let r = verify_product_theorem(&mu, &nu, &s, &tt, &TruncationContext::exact(2), None)?;
    Ok(vec![
        check(
            "product expansion",
            expected_table(&[
                ("7,4,1,1", 1),
                ("7,3,2,1", 1),
                ("6,4,2,1", 1),
                ("6,4,1,1,1", 1),
                ("6,3,2,2", 1),
                ("6,3,2,1,1", 2),
                ("6,3,1,1,1,1", 1),
                ("6,2,2,2,1", 1),
                ("6,2,2,1,1,1", 1),
                ("5,4,2,1,1", 1),
                ("5,3,2,2,1", 1),
                ("5,2,2,2,1,1", 1),
            ]),
            table(t.entries.iter().map(|x| (&x.lambda, x.coeff.to_string()))),
        ),
        check("identity at N = 2", json!(true), json!(r.equal)),
    ])
}

fn winged_expansion() -> Result<Vec<Check>> {
    let shape: SkewShape = "5,2,1,1/2,1".parse()?;
    let split = arm_body(&shape);
    let alpha = p("2,1").diagram();
    let beta = "3,3/2".parse::<SkewShape>()?.diagram();
    let mut arms: BTreeMap<(usize, usize), Exponent> = BTreeMap::new();
    for (k, &c) in split.right_arm.iter().chain(&split.left_arm).enumerate() {
        arms.insert(c, Exponent::int(3 + k as i64));
    }
    let v = Tableau::from_cells(shape.cells().map(|c| (c, arms.get(&c).copied().unwrap_or(Exponent::int(2)))))?;
    let a = Tableau::from_cells(alpha.cells().map(|c| (c, Exponent::int(2))))?;
    let b = Tableau::from_cells(beta.cells().map(|c| (c, Exponent::int(3))))?;
    let r = verify_winged_theorem(&alpha, &beta, 1, 2, &shape, &a, &b, &v, &TruncationContext::exact(2), None)?;
    let skew = verify_skew_theorem(&shape, &v, &TruncationContext::exact(2), None)?;
    Ok(vec![
        check(
            "arms of (5,2,1,1)/(2,1)",
            json!({ "left": [[4, 1]], "right": [[1, 4], [1, 5]] }),
            json!({ "left": split.left_arm, "right": split.right_arm }),
        ),
        check(
            "winged expansion",
            expected_table(&[("5,1", 1), ("4,2", 1), ("4,1,1", 2), ("3,2,1", 1), ("3,1,1,1", 1)]),
            table(r.per_nu.iter().map(|x| (&x.nu, x.coeff.to_string()))),
        ),
        check("identity at N = 2", json!(true), json!(r.equal)),
        check("identity without wings at N = 2", json!(true), json!(skew.equal)),
    ])
}

pub fn run(example: Example) -> Result<ReproReport> {
    let checks = match example {
        Example::Labeling => labeling()?,
        Example::Slide => slide()?,
        Example::SkewExpansion => skew_expansion()?,
        Example::ProductExpansion => product_expansion()?,
        Example::WingedExpansion => winged_expansion()?,
    };
    Ok(ReproReport {
        example: example.to_possible_value().map_or_else(String::new, |v| v.get_name().to_string()),
        pass: checks.iter().all(|c| c.matches),
        checks,
    })
}
