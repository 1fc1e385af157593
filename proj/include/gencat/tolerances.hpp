#pragma once

// Floating-point tolerances shared by the analytic and Monte Carlo layers.

namespace gencat::tol {

/// Two closed forms of the same analytic quantity (relative).
inline constexpr double kIdentity = 1e-12;
/// The two printed forms of the limit Weyl function (relative to term scale).
inline constexpr double kWeylForms = 1e-13;
/// Truncated Laurent series against the closed form (absolute).
inline constexpr double kTruncation = 1e-8;
/// Residual accepted for a limit outlier root of the limit Weyl function.
inline constexpr double kLimitRoot = 1e-12;
/// Denominators smaller than this count as a pole.
inline constexpr double kPole = 1e-12;
/// Minimum distance from a secular pole lambda_j.
inline constexpr double kSecularPole = 1e-13;
/// Newton stopping residual for the nonreal outlier.
inline constexpr double kNewtonResidual = 1e-11;
/// Imaginary part below which the nonreal outlier is taken to have hit the real axis.
inline constexpr double kRealAxis = 1e-10;
/// Residual certificate for any emitted finite-N outlier.
inline constexpr double kOutlierResidual = 1e-10;
/// Relative bisection width for real outliers.
inline constexpr double kBisection = 1e-12;
/// sum w_j against ||b||^2 (relative).
inline constexpr double kWeightSum = 1e-10;
/// Determinant comparison in the permutation similarity check (relative).
inline constexpr double kDeterminant = 1e-6;

}  // namespace gencat::tol
