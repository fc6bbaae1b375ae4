//! Theta divisors: Tannaka groups for ordinary double points, fake Jacobians,
//! summand and simplicity obstructions, and the fourfold table.

pub mod fake_jacobian;
pub mod fourfold;
pub mod obstruction;
pub mod theta;

pub use fake_jacobian::{
    alt_cm1_coefficient, construction_degree, covering_degree, fake_jacobian_solve, genus5_c1_for_target,
    genus5_obstruction, FakeJacobianSolution, Genus5Record,
};
pub use fourfold::{fourfold_table, fourfold_table_expanded, thetanull_row, verify_inverse_galois, FourfoldRow};
pub use obstruction::{
    adjoint_obstruction, simplicity_criteria, summand_bound, symplectic_standard, theta_not_a_sum, AdjointObstruction,
    ConvolutionCriterion, SimplicityReport, SummandBound,
};
pub use theta::{
    cc_odp, divisor_cm, s_sets, s_sets_from_classification, theta_group, GroupDescriptor, GroupFamily, PpavInput,
    ThetaGroupVerdict,
};
