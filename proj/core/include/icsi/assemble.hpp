#ifndef ICSI_ASSEMBLE_HPP
#define ICSI_ASSEMBLE_HPP

#include "icsi/aux_scheme.hpp"
#include "icsi/channel.hpp"
#include "icsi/source.hpp"

namespace icsi::prob {

/// Joint distribution
///   p(q) p(u1,v1) p(u2,v2) p(w1,x1|u1,q) p(w2,x2|u2,q) p(y1,y2|x1,x2)
/// over axes (q, u1, v1, u2, v2, w1, w2, x1, x2, y1, y2).
JointPmf assemble_joint_theorem2(const SourceSpec& src1, const SourceSpec& src2,
                                 const ChannelSpec& ch, const AuxScheme& aux,
                                 std::size_t cell_cap = kDefaultCellCap);

/// Separated joint distribution
///   p(q) p(u1,v1) p(wb1|u1,q) p(u2,v2) p(wb2|u2,q)
///   p(wt1,x1|q) p(wt2,x2|q) p(y1,y2|x1,x2)
/// over axes (q, u1, v1, u2, v2, wb1, wb2, wt1, wt2, x1, x2, y1, y2).
/// Verifies I(WT1; U1 | Q) = 0 on the result (separation sanity check).
JointPmf assemble_joint_corollary1(const SourceSpec& src1, const SourceSpec& src2,
                                   const ChannelSpec& ch, const AuxSchemeSep& aux,
                                   std::size_t cell_cap = kDefaultCellCap);

/// Z-channel coding-side joint p(w) p(x1|w) p(x2) p(y1|x1) p(y2|x1,x2)
/// over axes (w, x1, x2, y1, y2). Channel must be Z-interference.
JointPmf assemble_joint_zw(const ChannelSpec& ch, const Alphabet& w,
                           const std::vector<double>& p_w, const CondPmf& p_x1_given_w,
                           const std::vector<double>& p_x2);

/// Inner-bound joint p(s1) p(s2) p(x1|s1) p(x2|s2) p(y1,y2|x1,x2)
/// over axes (s1, s2, x1, x2, y1, y2).
JointPmf assemble_joint_g1(const ChannelSpec& ch, const Alphabet& s1,
                           const std::vector<double>& p_s1, const Alphabet& s2,
                           const std::vector<double>& p_s2, const CondPmf& p_x1_given_s1,
                           const CondPmf& p_x2_given_s2);

} // namespace icsi::prob

#endif
