#ifndef ICSI_CHANNEL_HPP
#define ICSI_CHANNEL_HPP

#include <optional>

#include "icsi/joint_pmf.hpp"

namespace icsi::prob {

enum class ChannelKind { GeneralIC, ZIC };

/// Discrete memoryless interference channel p(y1, y2 | x1, x2). For the
/// Z-interference kind the joint kernel factors as p(y1|x1) p(y2|x1,x2) and
/// both factors are stored; construction verifies the factorization to
/// 1e-12 when a joint kernel is also supplied.
class ChannelSpec {
public:
    /// General interference channel from the joint kernel. Input axes must
    /// be (x1, x2) and output axes (y1, y2).
    static ChannelSpec general(CondPmf joint);

    /// Z-interference channel from its factors p(y1|x1) and p(y2|x1,x2).
    static ChannelSpec z_from_factors(CondPmf p_y1_given_x1, CondPmf p_y2_given_x1x2);

    ChannelKind kind() const { return kind_; }
    bool is_z() const { return kind_ == ChannelKind::ZIC; }

    const CondPmf& joint() const { return joint_; }          // p(y1,y2|x1,x2)
    const CondPmf& y1_factor() const;                        // ConfigError unless Z
    const CondPmf& y2_factor() const;                        // ConfigError unless Z

    const Alphabet& x1() const { return joint_.input_axes()[0]; }
    const Alphabet& x2() const { return joint_.input_axes()[1]; }
    const Alphabet& y1() const { return joint_.output_axes()[0]; }
    const Alphabet& y2() const { return joint_.output_axes()[1]; }

    /// p(y2 | x1, x2) marginalized from the joint kernel (any kind).
    CondPmf y2_marginal_kernel() const;
    /// p(y1 | x1, x2) marginalized from the joint kernel (any kind).
    CondPmf y1_marginal_kernel() const;

private:
    ChannelKind kind_ = ChannelKind::GeneralIC;
    CondPmf joint_;
    std::optional<CondPmf> y1_factor_;
    std::optional<CondPmf> y2_factor_;
};

/// Verify |joint - p(y1|x1) p(y2|x1,x2)| <= tol cellwise.
bool z_factorization_consistent(const CondPmf& joint, const CondPmf& y1f,
                                const CondPmf& y2f, double tol = 1e-12);

} // namespace icsi::prob

#endif
