//! Built-in surgery presentations.
//!
//! The same data ships as JSON under `fixtures/` in this crate.

use num_bigint::BigInt;

use crate::embeddings::SpinBoundarySignatures;
use crate::intlinalg::{IntMatrix, IntSymMatrix};
use crate::surgery::{Gamma2Element, SurgeryPresentation};

fn one_by_one(name: &str, framing: i64) -> SurgeryPresentation {
    SurgeryPresentation::new(name, IntSymMatrix::from_rows(&[[framing]]).expect("1x1"))
}

/// S³: surgery on the empty link.
pub fn s3() -> SurgeryPresentation {
    SurgeryPresentation::new("S3", IntSymMatrix::empty())
}

/// S¹×S²: 0-framed unknot.
pub fn s1_x_s2() -> SurgeryPresentation {
    one_by_one("S1xS2", 0)
}

/// ℝP³ = L(2,1): 2-framed unknot.
pub fn rp3() -> SurgeryPresentation {
    one_by_one("RP3", 2)
}

/// L(4,1): 4-framed unknot.
pub fn lens4() -> SurgeryPresentation {
    one_by_one("L(4,1)", 4)
}

/// T³: 0-framed Borromean rings, whose pairwise linking numbers vanish.
pub fn t3() -> SurgeryPresentation {
    SurgeryPresentation::new("T3", IntSymMatrix::zeros(3))
}

/// Spin fillings of T³: the solid 3-torus (signature 0) and the
/// signature 8 manifold, both in the only Wu coset.
pub fn t3_spin_boundary_signatures() -> SpinBoundarySignatures {
    SpinBoundarySignatures::new().with(Gamma2Element::zero(0), [0, 8])
}

/// The E₈ form: even, unimodular, positive definite.
pub fn e8_form() -> IntSymMatrix {
    let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)];
    let mut m = IntMatrix::zeros(8, 8);
    for i in 0..8 {
        m[(i, i)] = BigInt::from(2);
    }
    for (i, j) in edges {
        m[(i, j)] = BigInt::from(-1);
        m[(j, i)] = BigInt::from(-1);
    }
    IntSymMatrix::new(m).expect("E8 is symmetric")
}

/// Two copies of ℝP³ summed: H₁ = ℤ₂ ⊕ ℤ₂.
pub fn rp3_sum_rp3() -> SurgeryPresentation {
    SurgeryPresentation::new(
        "RP3#RP3",
        IntSymMatrix::from_rows(&[[2, 0], [0, 2]]).expect("symmetric"),
    )
}

/// ℝP³ # S¹×S²: H₁ = ℤ ⊕ ℤ₂.
pub fn rp3_sum_s1_x_s2() -> SurgeryPresentation {
    SurgeryPresentation::new(
        "RP3#S1xS2",
        IntSymMatrix::from_rows(&[[2, 0], [0, 0]]).expect("symmetric"),
    )
}

/// Every built-in presentation.
pub fn all() -> Vec<SurgeryPresentation> {
    vec![
        s3(),
        s1_x_s2(),
        rp3(),
        lens4(),
        t3(),
        rp3_sum_rp3(),
        rp3_sum_s1_x_s2(),
        SurgeryPresentation::new("E8", e8_form()),
    ]
}
