#ifndef ICSI_ALPHABET_HPP
#define ICSI_ALPHABET_HPP

#include <string>
#include <vector>

namespace icsi::prob {

/// A named finite alphabet. Symbol labels are kept for reporting; all
/// computation uses symbol indices 0..size-1.
struct Alphabet {
    std::string name;
    std::vector<std::string> symbols;

    Alphabet() = default;
    Alphabet(std::string name_, std::vector<std::string> symbols_);

    /// Alphabet {name}0..{name}{size-1}.
    static Alphabet indexed(const std::string& name, int size);
    /// Single-symbol alphabet; carries no information.
    static Alphabet unary(const std::string& name);

    int size() const { return static_cast<int>(symbols.size()); }
};

} // namespace icsi::prob

#endif
