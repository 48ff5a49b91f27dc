#ifndef SUPERCHAR_LR_HPP
#define SUPERCHAR_LR_HPP

#include <cstdint>

#include <superchar/partition.hpp>

namespace superchar
{

/// Multiplicity of S_lam in S_mu * S_nu, counted as skew tableaux of shape
/// lam/mu and content nu whose reverse reading word (right to left, top to
/// bottom) is a lattice word. Zero when mu is not inside lam or the sizes
/// do not add up.
std::int64_t lr_coeff(const Partition &lam, const Partition &mu, const Partition &nu);

/// Closed form for a rectangular outer shape: 1 iff mu_i + nu_{a+1-i} = m
/// for i = 1..a. Throws invalid_input if mu or nu leaves (m^a).
int lr_rectangle(int m, int a, const Partition &mu, const Partition &nu);

/// Sum of LR^{(m^a)}_{kappa, mu} over kappa in the class, by direct
/// summation of tableau counts. Throws invalid_input when m < 1 or a < 1.
std::int64_t lr_rect_sum(int m, int a, const Partition &mu, PartitionClass variant);

} // namespace superchar

#endif
