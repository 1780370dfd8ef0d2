#pragma once

#include "mockgl/invariants.hpp"
#include "mockgl/seifert.hpp"

#include <optional>
#include <string>

namespace mgl {

struct Mod2Class {
    enum class Kind { Hyperbolic, Identity } kind = Kind::Identity;
    int rank = 0;  // g for Hyperbolic(g), n for Identity(n)
    /// 0/1 matrix W with W^T A W = normal form (mod 2).
    IntMatrix witness;
};

std::string to_string(const Mod2Class& c);
/// H^g or I_n as a 0/1 matrix.
IntMatrix mod2_normal_form(Mod2Class::Kind kind, int rank);
Mod2Class mod2_classify(const MockSeifertMatrix& a);
/// Integer unimodular lift of a matrix invertible over the two-element field.
IntMatrix lift_unimodular(const IntMatrix& w);
IntMatrix mod2(const IntMatrix& a);

enum class Admissibility { Yes, No, Unknown };
std::string to_string(Admissibility a);

struct AdmissibilityResult {
    Admissibility verdict = Admissibility::Unknown;
    std::string detail;
    /// For odd type: unimodular P with P^T A P = H^(m-1) + K (mod 2) and last diagonal entry 0.
    std::optional<IntMatrix> witness;
};

AdmissibilityResult is_admissible(const MockSeifertMatrix& a, int budget = 6);

MockSeifertMatrix block_sum(const MockSeifertMatrix& a, const MockSeifertMatrix& b);
MockSeifertMatrix negate(const MockSeifertMatrix& a);
MockSeifertMatrix congruent(const MockSeifertMatrix& a, const IntMatrix& p);

struct MetabolicVerdict {
    enum class Kind { Certificate, Obstructed, Unknown } kind = Kind::Unknown;
    enum class Reason { None, OddSize, FoxMilnorFails, SignatureNonzero, DetNotSquare, HasseWittNontrivial };
    Reason reason = Reason::None;
    IntMatrix basis;                    // certificate: n x n/2, primitive, B^T A B = 0
    std::optional<CirclePoint> omega;   // SignatureNonzero
    std::optional<Int> prime;           // HasseWittNontrivial
    std::string detail;

    bool certificate() const { return kind == Kind::Certificate; }
    bool obstructed() const { return kind == Kind::Obstructed; }
};

std::string to_string(MetabolicVerdict::Kind k);
std::string to_string(MetabolicVerdict::Reason r);

/// True when B is primitive with half the rows as columns and B^T A B = 0.
bool verify_certificate(const IntMatrix& a, const IntMatrix& b);

constexpr int kDefaultBudget = 10;

MetabolicVerdict metabolic(const MockSeifertMatrix& a, int budget = kDefaultBudget);
MetabolicVerdict concordant(const MockSeifertMatrix& a, const MockSeifertMatrix& b, int budget = kDefaultBudget);

/// Hasse-Witt invariant of the rational diagonal form at p.
int hasse_invariant(const std::vector<Rat>& diagonal, const Int& p);

}  // namespace mgl
