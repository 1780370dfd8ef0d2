#pragma once

#include "mockgl/matrix.hpp"

#include <optional>

namespace mgl {

enum class FormType { Even, Odd };

struct MockSeifertMatrix {
    IntMatrix entries;
    std::optional<Int> euler;

    MockSeifertMatrix() = default;
    explicit MockSeifertMatrix(IntMatrix a, std::optional<Int> e = std::nullopt) : entries(std::move(a)), euler(std::move(e)) {
        if (!entries.square()) throw PreconditionError("mock Seifert matrix must be square");
    }

    int size() const { return entries.rows(); }
    /// Even when every diagonal entry is even, i.e. the mod 2 form is alternating.
    FormType type() const {
        for (int i = 0; i < size(); ++i)
            if (is_odd(entries(i, i))) return FormType::Odd;
        return FormType::Even;
    }
    Int det() const { return size() == 0 ? Int(1) : mgl::det(entries); }
    /// G = (A + A^T)/2 as a rational matrix.
    RatMatrix symmetric_part() const {
        RatMatrix g = to_rat(entries + entries.transpose());
        return g * Rat(1, 2);
    }
    friend bool operator==(const MockSeifertMatrix&, const MockSeifertMatrix&) = default;
};

inline std::string to_string(FormType t) { return t == FormType::Even ? "even" : "odd"; }

}  // namespace mgl
