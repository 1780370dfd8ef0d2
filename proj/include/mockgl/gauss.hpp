#pragma once

#include "mockgl/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace mgl {

struct Crossing {
    int label = 0;
    int sign = 1;
    friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct Passage {
    int label = 0;
    bool over = false;
    friend bool operator==(const Passage&, const Passage&) = default;
};

/// Signed Gauss code of a virtual knot diagram. Crossings are sorted by label; the basepoint
/// sits immediately before passages[basepoint].
struct Diagram {
    std::vector<Crossing> crossings;
    std::vector<Passage> passages;
    int basepoint = 0;

    int size() const { return static_cast<int>(crossings.size()); }
    int sign_of(int label) const;
    /// Positions (over, under) of a crossing in the passage sequence.
    std::pair<int, int> positions(int label) const;
    friend bool operator==(const Diagram&, const Diagram&) = default;
};

Diagram parse_gauss(const std::string& text);
/// Builds and validates a diagram from explicit parts.
Diagram make_diagram(std::vector<Passage> passages, const std::map<int, int>& signs, int basepoint = 0);
std::string to_gauss(const Diagram& d);

using CrossingIndexTable = std::map<int, int>;

CrossingIndexTable crossing_indices(const Diagram& d);

enum class Colorability { Neither = 0, CheckerboardColorable = 1, AlmostClassical = 2 };

Colorability colorability(const Diagram& d);
std::string to_string(Colorability c);
int odd_writhe(const Diagram& d);
int writhe(const Diagram& d);

/// Relabels crossings 1..n in order of their first passage, keeping the basepoint.
Diagram canonical_labels(const Diagram& d);
/// Rotates the cyclic passage sequence so that it starts at position k; the basepoint moves along.
Diagram rotate(const Diagram& d, int k);

}  // namespace mgl
