use crate::corpus::{generic_pfaffian_gorenstein, PFAFFIAN4_SEED};
use crate::error::{Error, Result};
use crate::field::Zp;

/// Names accepted by [`example_script`].
pub const EXAMPLES: &[&str] = &["25a", "25b", "pfaffian4"];

const EXAMPLE_25A: &str = "\
# Maximal minors of a 2 x 4 circulant matrix.
ring R = p [x1..x4];
matrix M = [[x1, x2, x3, x4], [x2, x3, x4, x1]];
ideal I = minors(M, 2);
report scm(I);
report rees(I);
report theorem24(I);
report lemma21(I, 4, 1);
report profile(I, 1);
";

fn example_25b() -> String {
    let mut vars = Vec::new();
    let mut rows = Vec::new();
    for i in 1..=5 {
        let mut row = Vec::new();
        for j in 1..=5 {
            row.push(match i.cmp(&j) {
                std::cmp::Ordering::Less => format!("p{i}{j}"),
                std::cmp::Ordering::Equal => "0".to_string(),
                std::cmp::Ordering::Greater => format!("-p{j}{i}"),
            });
            if i < j {
                vars.push(format!("p{i}{j}"));
            }
        }
        rows.push(format!("[{}]", row.join(", ")));
    }
    format!(
        "# 4 x 4 Pfaffians of a generic alternating 5 x 5 matrix and the entries of its
# product with a generic column; 15 variables. Depth computations need --tier 2.
ring R = p [{}, y1..y5];
matrix phi = [{}];
matrix Y = [[y1], [y2], [y3], [y4], [y5]];
ideal I = pfaffians(phi, 4) + product(phi, Y);
report rees(I);
report theorem24(I);
report profile(I, 4);
",
        vars.join(", "),
        rows.join(",\n              ")
    )
}

fn example_pfaffian4() -> Result<String> {
    let (_, m, attempts) = generic_pfaffian_gorenstein(Zp::default(), PFAFFIAN4_SEED)?;
    let rows: Vec<String> =
        m.iter().map(|r| format!("[{}]", r.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))).collect();
    Ok(format!(
        "# Submaximal Pfaffians of a random linear alternating 5 x 5 matrix in\n\
         # four variables (seed {PFAFFIAN4_SEED}, draw {attempts}); coefficients live in ZZ/32003.\n\
         ring R = 32003 [x1..x4];\n\
         matrix A = [{}];\n\
         ideal I = pfaffians(A, 4);\n\
         report scm(I);\n\
         report rees(I);\n\
         report theorem24(I);\n",
        rows.join(",\n            ")
    ))
}

/// The job file for one of the reference examples.
pub fn example_script(name: &str) -> Result<String> {
    match name {
        "25a" => Ok(EXAMPLE_25A.to_string()),
        "25b" => Ok(example_25b()),
        "pfaffian4" => example_pfaffian4(),
        other => {
            Err(Error::Precondition(format!("unknown example `{other}`; expected one of {}", EXAMPLES.join(", "))))
        }
    }
}
