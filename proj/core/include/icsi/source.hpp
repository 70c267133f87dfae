#ifndef ICSI_SOURCE_HPP
#define ICSI_SOURCE_HPP

#include <optional>
#include <vector>

#include "icsi/joint_pmf.hpp"

namespace icsi::prob {

/// Which receiver gets each side-information sequence. Desired wiring gives
/// receiver k the side information of its own source; interfering wiring
/// swaps them.
enum class SideInfoWiring { Desired, Interfering };

/// A source U with side information V, joint p(u, v), plus the system-level
/// wiring of V and an optional deterministic map h with v = h(u).
class SourceSpec {
public:
    SourceSpec() = default;
    /// Axes of joint must be exactly (u-axis, v-axis) in that order.
    /// When h is present, p(v|u) must be 0/1-valued and agree with h,
    /// i.e. H(V|U) = 0.
    SourceSpec(JointPmf joint, SideInfoWiring wiring,
               std::optional<std::vector<int>> h = std::nullopt);

    const JointPmf& joint() const { return joint_; }
    SideInfoWiring wiring() const { return wiring_; }
    bool has_h() const { return h_.has_value(); }
    const std::vector<int>& h() const;                 // ConfigError if absent

    const Alphabet& u_axis() const { return joint_.axes()[0]; }
    const Alphabet& v_axis() const { return joint_.axes()[1]; }

    double entropy_u() const;
    double entropy_v() const;
    double entropy_u_given_v() const;

private:
    JointPmf joint_;
    SideInfoWiring wiring_ = SideInfoWiring::Desired;
    std::optional<std::vector<int>> h_;
};

} // namespace icsi::prob

#endif
