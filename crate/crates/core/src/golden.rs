//! Reference values for small spaces, in the LaTeX notation read by
//! [`parse_latex`](crate::render::parse_latex).

use crate::bigraded::BiSymFunc;
use crate::error::Result;
use crate::render::parse_latex;

pub struct Golden {
    pub name: &'static str,
    pub n: usize,
    pub k: usize,
    pub l: usize,
    pub latex: &'static str,
}

impl Golden {
    pub fn value(&self) -> Result<BiSymFunc> {
        parse_latex(self.latex)
    }
}

pub const GOLDEN: [Golden; 9] = [
    Golden {
        name: "E5_0_1",
        n: 5,
        k: 0,
        l: 1,
        latex: "(q^2+q+1)s^y_{(5)}+qs^y_{(4,1)}",
    },
    Golden {
        name: "E5_1_3",
        n: 5,
        k: 1,
        l: 3,
        latex: "s^x_{(1)}s^y_{(4)}(q^2+q+1)",
    },
    Golden {
        name: "E6_0_1",
        n: 6,
        k: 0,
        l: 1,
        latex: "(q^3+2q^2+2q+1) s^y_{(6)}+(q^2+q)s^y_{(5,1)}+(q^2+q)s^y_{(4,2)}",
    },
    Golden {
        name: "E6_1_3",
        n: 6,
        k: 1,
        l: 3,
        latex: "s^x_{(1)}\\,( (q^3+2q^2+2q+1) s^y_{(5)}+(q^2+q)s^y_{(4,1)} )",
    },
    Golden {
        name: "E4_2_3",
        n: 4,
        k: 2,
        l: 3,
        latex: "(q+1)s^x_{(2)}s^y_{(2)}",
    },
    Golden {
        name: "E7_0_3",
        n: 7,
        k: 0,
        l: 3,
        latex: "(q^4+q^3+2 q^2+q+1)s_{(7)}+(q^3+q^2+q)s_{(6,1)}+q^2s_{(5,2)}",
    },
    Golden {
        name: "E7_0_1",
        n: 7,
        k: 0,
        l: 1,
        latex: "s_{(7)}(q^4+2q^3+4q^2+2q+1)+s_{(6,1)}(2q^3+3q^2+2q)+s_{(5,2)}(q^3+3q^2+q)+\\\\\
                +s_{(4,3)}(q^3+2q^2+q)+s_{(4,2,1)}q^2",
    },
    Golden {
        name: "E8_0_3",
        n: 8,
        k: 0,
        l: 3,
        latex: "(q^5+2q^4+3q^3+3q^2+2q+1)s_{(8)}+(q^4+2q^3+2q^2+q)s_{(7,1)}\
                +(q^4+2q^3+2q^2+q)s_{(6,2)}+\\\\+(q^3+q^2)s_{(5,3)}+(q^4+q^3+q^2+q)s_{(4,4)}",
    },
    Golden {
        name: "E8_0_1",
        n: 8,
        k: 0,
        l: 1,
        latex: "(q^5+3q^4+6q^3+6q^2+3q+1)s_{(8)}+(2q^4+6q^3+6q^2+2q)s_{(7,1)}\
                +(2q^4+7q^3+7q^2+2q)s_{(6,2)}+\\\\+(q^3+q^2)s_{(6,1,1)}+(q^4+5q^3+5q^2+q)s_{(5,3)}\
                +(2q^3+2q^2)s_{(5,2,1)}+\\\\+(q^4+3q^3+3q^2+q)s_{(4,4)}+(2q^3+2q^2)s_{(4,3,1)}\
                +(q^3+q^2)s_{(4,2,2)}",
    },
];

/// Betti numbers of `M̄_{0,n}` obtained by applying hook dimensions to the
/// reference characters above.
pub fn reference_betti(n: usize) -> Result<Option<Vec<num_bigint::BigInt>>> {
    let Some(g) = GOLDEN.iter().find(|g| g.n == n && g.k == 0 && g.l == 1) else {
        return Ok(None);
    };
    let value = g.value()?;
    let mut betti: Vec<num_bigint::BigInt> = Vec::new();
    for ((x, y), c) in value.terms() {
        let leg = |p: &crate::partition::Partition| -> Result<num_bigint::BigUint> {
            if p.is_empty() {
                Ok(1u32.into())
            } else {
                p.irrep_dimension()
            }
        };
        let dim = num_bigint::BigInt::from(leg(x)? * leg(y)?);
        for (i, a) in c.terms() {
            if betti.len() <= i {
                betti.resize(i + 1, 0.into());
            }
            betti[i] += a.to_integer() * &dim;
        }
    }
    Ok(Some(betti))
}
