#pragma once

#include "mockgl/gauss.hpp"

#include <string>
#include <utility>

namespace mgl {

struct ParityKind {
    enum class Kind { ModN, Total };
    Kind kind = Kind::ModN;
    int n = 2;

    static ParityKind mod(int n);
    static ParityKind total() { return {Kind::Total, 0}; }
    /// f(c) for a crossing of index `ind`.
    bool odd(int ind) const;
    friend bool operator==(const ParityKind&, const ParityKind&) = default;
};

std::string to_string(const ParityKind& p);
/// Accepts "total", "0", "mod2", "2", "mod5", ...
ParityKind parse_parity(const std::string& text);

Diagram project(const Diagram& d, const ParityKind& p);
std::pair<Diagram, int> stable_project(const Diagram& d, const ParityKind& p);

}  // namespace mgl
