#ifndef ICSI_INFO_MEASURES_HPP
#define ICSI_INFO_MEASURES_HPP

#include <span>
#include <string>
#include <vector>

#include "icsi/joint_pmf.hpp"

namespace icsi::prob {

/// All entropies and mutual informations are in bits (log base 2).

/// H(axes) on the marginal over the requested axes. 0 log 0 is 0.
double entropy(const JointPmf& pmf, std::span<const std::string> axes);

/// H(target | given) = H(target, given) - H(given). Axis sets must be
/// disjoint; result clamped at zero when within -1e-12.
double conditional_entropy(const JointPmf& pmf,
                           std::span<const std::string> target,
                           std::span<const std::string> given);

/// I(A; B | C) with C possibly empty. A, B, C pairwise disjoint. Small
/// negative values from rounding are clamped to zero.
double mutual_information(const JointPmf& pmf,
                          std::span<const std::string> group_a,
                          std::span<const std::string> group_b,
                          std::span<const std::string> group_c = {});

/// Convenience overloads for brace-literal call sites.
inline double entropy(const JointPmf& pmf, std::initializer_list<std::string> axes) {
    std::vector<std::string> v(axes);
    return entropy(pmf, std::span<const std::string>(v));
}
inline double conditional_entropy(const JointPmf& pmf, std::initializer_list<std::string> target,
                                  std::initializer_list<std::string> given) {
    std::vector<std::string> t(target), g(given);
    return conditional_entropy(pmf, t, g);
}
inline double mutual_information(const JointPmf& pmf, std::initializer_list<std::string> a,
                                 std::initializer_list<std::string> b,
                                 std::initializer_list<std::string> c = {}) {
    std::vector<std::string> va(a), vb(b), vc(c);
    return mutual_information(pmf, va, vb, vc);
}

/// Binary entropy h(p) in bits.
double binary_entropy(double p);

} // namespace icsi::prob

#endif
