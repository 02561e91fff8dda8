//! Solvers for 1-D variable-coefficient tempered fractional diffusion equations.
//!
//! The Crank-Nicolson / tempered-WSGD discretization of
//!
//! ```text
//! u_t = d(x) (D_L^{beta,lambda} + D_R^{beta,lambda}) u + f(x, t),   u(a,t) = u(b,t) = 0
//! ```
//!
//! produces one linear system `(I + DG) u^{j+1} = (I - DG) u^j + dt f^{j+1/2}`
//! per time step, where `G` is a symmetric positive definite Toeplitz matrix and
//! `D = diag(d(x_i))`. This crate assembles that system, marches it in time, and
//! solves each step with GMRES accelerated by a tau-matrix approximate-inverse
//! preconditioner: `G` is projected into the tau algebra (diagonalized by the
//! orthonormal DST-I), the row-wise inverses `(I + d_i tau(G))^{-1}` are
//! collapsed onto `l` interpolation nodes with hat-function weights, and one
//! application costs `l + 1` sine transforms. A Strang-circulant variant, exact
//! row-wise references, and an Arnoldi/Ritz spectrum diagnostic round out the
//! toolbox.
//!
//! Everything is double precision, deterministic, and `O(N log N)` per
//! preconditioned GMRES iteration.

pub mod eig;
pub mod error;
pub mod gmres;
pub mod matrix_market;
pub mod precond;
pub mod problem;
pub mod system;
pub mod tau;
pub mod toeplitz;
pub mod transforms;
pub mod weights;

pub use error::{Error, Result};
pub use gmres::{gmres, GmresConfig, PrecondSide, SolveStats};
pub use precond::{CaiPreconditioner, TaiPreconditioner};
pub use problem::{Coefficient, ProblemConfig, SourceKind};
pub use system::{build_system, time_march, DiscreteSystem};
pub use tau::TauMatrix;
pub use toeplitz::{CirculantMatrix, HankelCorrection, SymmetricToeplitz};
pub use transforms::{FourierPlan, SineTransformPlan};
pub use weights::{gl_weights, solve_gammas, tempered_weights, TemperedWeights};
