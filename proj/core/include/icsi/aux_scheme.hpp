#ifndef ICSI_AUX_SCHEME_HPP
#define ICSI_AUX_SCHEME_HPP

#include <vector>

#include "icsi/joint_pmf.hpp"

namespace icsi::prob {

/// Decision variables of the joint source-channel sufficiency region:
/// a time-sharing pmf p(q) and per-transmitter kernels p(w_k, x_k | u_k, q).
struct AuxScheme {
    Alphabet q;
    std::vector<double> p_q;
    CondPmf p_w1x1_given_u1q;   // output (w1, x1), input (u1, q)
    CondPmf p_w2x2_given_u2q;   // output (w2, x2), input (u2, q)

    const Alphabet& w1() const { return p_w1x1_given_u1q.output_axes()[0]; }
    const Alphabet& w2() const { return p_w2x2_given_u2q.output_axes()[0]; }

    /// Degenerate scheme: unary Q and W, x_k a deterministic copy of u_k.
    /// Requires |X_k| == |U_k|.
    static AuxScheme identity_copy(const Alphabet& u1, const Alphabet& u2,
                                   const Alphabet& x1, const Alphabet& x2);
};

/// Separated decision variables: source halves p(wbar_k | u_k, q) and
/// channel halves p(wtilde_k, x_k | q).
struct AuxSchemeSep {
    Alphabet q;
    std::vector<double> p_q;
    CondPmf p_wb1_given_u1q;    // output (wb1), input (u1, q)
    CondPmf p_wb2_given_u2q;    // output (wb2), input (u2, q)
    CondPmf p_wt1x1_given_q;    // output (wt1, x1), input (q)
    CondPmf p_wt2x2_given_q;    // output (wt2, x2), input (q)

    const Alphabet& wb1() const { return p_wb1_given_u1q.output_axes()[0]; }
    const Alphabet& wb2() const { return p_wb2_given_u2q.output_axes()[0]; }
    const Alphabet& wt1() const { return p_wt1x1_given_q.output_axes()[0]; }
    const Alphabet& wt2() const { return p_wt2x2_given_q.output_axes()[0]; }

    /// Combine into the unseparated form with w_k = (wbar_k, wtilde_k) and
    /// p(w_k, x_k | u_k, q) = p(wbar_k | u_k, q) p(wtilde_k, x_k | q).
    AuxScheme combined() const;
};

} // namespace icsi::prob

#endif
