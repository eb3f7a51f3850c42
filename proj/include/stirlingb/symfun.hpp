#pragma once

#include <vector>

#include "stirlingb/qpoly.hpp"

namespace stirlingb {

/// [1]_q, [3]_q, ..., [2n-1]_q
std::vector<QPoly> odd_specialization(int n);

/// e_k at the odd specialization with n variables; zero for k > n.
QPoly elementary_spec(int n, int k);
/// h_k at the odd specialization with n variables; h_k() = δ_k0.
QPoly homogeneous_spec(int n, int k);
/// [1]_q^m + [3]_q^m + ... + [2n-1]_q^m
QPoly power_spec(int n, int m);

/// Σ_{j=0}^m (-1)^j ss^B_q(n,n-j) S^B_q(n-1+m-j, n-1); zero when the identity holds.
QPoly orthogonality_residual(int n, int m);
/// Σ_{j=1}^m (-1)^(j-1) j ss^B_q(n,n-j) S^B_q(n-1+m-j, n-1) - p_m.
QPoly power_sum_residual(int n, int m);

/// Same sums with the second-kind index taken literally as S^B_q(n+m-j, n).
/// These do not vanish in general (already at n = m = 1).
QPoly printed_orthogonality_residual(int n, int m);
QPoly printed_power_sum_residual(int n, int m);
/// h_k over n variables minus S^B_q(n+k, n).
QPoly printed_homogeneous_residual(int n, int k);

}  // namespace stirlingb
