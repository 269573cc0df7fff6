//! The axial algebra of Monster type `(2, 1/2)` over GF(5) spanned by the
//! axes `a[i]`, `i` in `Z`, and the vectors `s[r,n]`.
//!
//! Elements are finite sparse combinations of basis symbols. The crate
//! provides the product, the dihedral symmetries, eigenspace decomposition
//! with respect to `a[0]`, fusion law and identity checks, and ideal
//! closures in finite windows.
//!
//! ```
//! use axial_core::{mul, Element};
//!
//! let x: Element = "a[0]".parse().unwrap();
//! let y: Element = "a[1]".parse().unwrap();
//! assert_eq!(mul(&x, &y).to_string(), "3*a[0] + 3*a[1] + s[0,1]");
//! ```

pub mod basis;
pub mod eigen;
pub mod element;
pub mod error;
pub mod format;
pub mod linalg;
pub mod product;
pub mod quotient;
pub mod scalar;
pub mod symmetry;
pub mod verify;
pub mod window;

pub use basis::{BasisSymbol, Sigma};
pub use eigen::{
    check_fusion, check_primitivity, decompose, EigenDecomposition, Eigenvalue, FusionReport,
    PrimitivityReport, VectorKind,
};
pub use element::{add, scale, Element};
pub use error::{Error, ParseError};
pub use format::{parse_element, print_element};
pub use product::{mul, Hhat, Product};
pub use quotient::{ideal_closure, preset_6a2, preset_highwater, Closure, Quotient, WindowSpan};
pub use scalar::Scalar;
pub use symmetry::{apply, compose, miyamoto, DihedralMap};
pub use verify::{check_all, IdentityReport, VerifyConfig};
pub use window::Window;
