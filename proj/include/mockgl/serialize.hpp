#pragma once

#include "mockgl/concord.hpp"
#include "mockgl/parity.hpp"
#include "mockgl/realize.hpp"

#include <json.hpp>

namespace mgl {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "mockgl/1";

json int_json(const Int& v);
Int int_from_json(const json& j);
json rat_json(const Rat& v);

json matrix_json(const IntMatrix& a);
IntMatrix matrix_from_json(const json& j);
/// Rows separated by newlines or ';', entries by commas or whitespace; '#' starts a comment.
/// Also accepts a JSON array of rows.
IntMatrix parse_matrix(const std::string& text);

void to_json(json& j, const Diagram& d);
void to_json(json& j, const MockSeifertMatrix& a);
void to_json(json& j, const BandPresentation& b);
void from_json(const json& j, BandPresentation& b);
void to_json(json& j, const CirclePoint& p);
void to_json(json& j, const JumpPoint& p);
void to_json(json& j, const SignatureFunction& s);
void to_json(json& j, const GLInvariants& g);
void to_json(json& j, const Bounds& b);
void to_json(json& j, const DeltaOneCheck& d);
void to_json(json& j, const FoxMilnorResult& f);
void to_json(json& j, const AdmissibilityResult& a);
void to_json(json& j, const MetabolicVerdict& v);
void to_json(json& j, const ObstructionBundle& b);
void to_json(json& j, const ConcordanceClass& c);
void to_json(json& j, const OrderBound& o);
void to_json(json& j, const IsometricStructure& s);

json polynomial_json(const LaurentPoly& p);

struct TableEntry {
    std::string name;
    std::string code;
    int line = 0;
};

struct TableParse {
    std::vector<TableEntry> entries;
    std::vector<std::string> warnings;
};

/// One "name code" pair per line; '#' comments and blank lines are skipped, "-" stands for the empty code.
/// Lines whose code does not parse are reported as warnings and skipped.
TableParse parse_table(const std::string& text);

/// Full invariant report of a mock Seifert matrix.
json invariants_json(const MockSeifertMatrix& a);

}  // namespace mgl
