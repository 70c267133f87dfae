#ifndef ICSI_JOINT_PMF_HPP
#define ICSI_JOINT_PMF_HPP

#include <span>
#include <string>
#include <vector>

#include "icsi/alphabet.hpp"

namespace icsi::prob {

/// Default cap on the number of cells of a dense product space. The 11-axis
/// joint of the main sufficiency region grows combinatorially; exceeding the
/// cap raises SizeError instead of silently crawling.
inline constexpr std::size_t kDefaultCellCap = 10'000'000;

/// Tolerance for "masses sum to one" on construction.
inline constexpr double kMassTolerance = 1e-12;

/// Probabilities below this are treated as exact zeros inside entropy sums.
inline constexpr double kEntropyFloor = 1e-15;

/// Joint probability mass function over a product of named finite alphabets.
/// Dense row-major storage, last axis fastest. Immutable after construction;
/// every operation returns a new value, so instances are safe to share
/// across threads.
class JointPmf {
public:
    JointPmf() = default;

    /// Validates: unique axis names, nonnegative mass, total within 1e-12 of
    /// one, cell count within cap.
    JointPmf(std::vector<Alphabet> axes, std::vector<double> mass,
             std::size_t cell_cap = kDefaultCellCap);

    /// Uniform distribution over the product space.
    static JointPmf uniform(std::vector<Alphabet> axes);

    const std::vector<Alphabet>& axes() const { return axes_; }
    const std::vector<double>& mass() const { return mass_; }
    std::size_t cells() const { return mass_.size(); }

    int axis_index(const std::string& name) const;       // AxisError if absent
    bool has_axis(const std::string& name) const;
    const Alphabet& axis(const std::string& name) const;

    /// Multi-index of a flat cell, and back.
    std::vector<int> unravel(std::size_t flat) const;
    std::size_t ravel(std::span<const int> idx) const;
    double at(std::span<const int> idx) const { return mass_[ravel(idx)]; }

    /// Marginal over the named axes, kept in this pmf's axis order.
    JointPmf marginal(std::span<const std::string> names) const;

    /// Explicit renormalization; construction never silently fixes mass.
    JointPmf renormalized() const;

    /// Number of cells of a would-be product space; SizeError if over cap.
    static std::size_t checked_cell_count(const std::vector<Alphabet>& axes,
                                          std::size_t cell_cap);

private:
    std::vector<Alphabet> axes_;
    std::vector<double> mass_;
    std::vector<std::size_t> strides_;

    void init_strides();
};

/// Conditional PMF: for each cell of the input product space, a PMF over the
/// output product space. Kernel rows must each sum to one within 1e-12.
class CondPmf {
public:
    CondPmf() = default;
    CondPmf(std::vector<Alphabet> output_axes, std::vector<Alphabet> input_axes,
            std::vector<double> kernel);

    const std::vector<Alphabet>& output_axes() const { return out_axes_; }
    const std::vector<Alphabet>& input_axes() const { return in_axes_; }

    std::size_t output_cells() const { return out_cells_; }
    std::size_t input_cells() const { return in_cells_; }

    double at(std::size_t input_flat, std::size_t output_flat) const {
        return kernel_[input_flat * out_cells_ + output_flat];
    }
    const std::vector<double>& kernel() const { return kernel_; }

    /// Row (a PMF over outputs) for one input cell.
    std::span<const double> row(std::size_t input_flat) const {
        return {kernel_.data() + input_flat * out_cells_, out_cells_};
    }

    /// Deterministic kernel from an explicit output index per input cell.
    static CondPmf deterministic(std::vector<Alphabet> output_axes,
                                 std::vector<Alphabet> input_axes,
                                 const std::vector<int>& output_for_input);

private:
    std::vector<Alphabet> out_axes_;
    std::vector<Alphabet> in_axes_;
    std::vector<double> kernel_;    // [input][output]
    std::size_t out_cells_ = 0;
    std::size_t in_cells_ = 0;
};

} // namespace icsi::prob

#endif
