#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "esymm/lambda_map.hpp"
#include "esymm/matrix.hpp"
#include "esymm/rng.hpp"

namespace esymm {

enum class ScalarMode { exact, float64 };

/// A codimension-2 candidate: two shape operators in sp(n) for the standard
/// forms, p = 1.
struct Codim2Instance {
    std::size_t n = 1;
    Mat c1, c2;
    ScalarMode mode = ScalarMode::exact;
};

/// The two endomorphism-valued identities the third condition reduces to
/// when p = 1, checked on all basis pairs.  The verdict always equals the
/// general third-condition check on the assembled family.
bool check_p1_equations(const Codim2Instance& inst);

/// Residual Frobenius norm of the same identities evaluated in double
/// precision; used only to pre-filter large random searches.
double p1_residual_float(const Codim2Instance& inst);

ShapeFamily family_from_instance(const Codim2Instance& inst);

enum class Codim2Verdict { flat, products_zero, violation };
std::string verdict_name(Codim2Verdict v);

/// For a solution of the p = 1 equations: "flat" when the base curvature
/// vanishes, "products_zero" when every C_i C_j = 0.  "violation" would
/// contradict the classification and signals an implementation bug.
Codim2Verdict classify(const Codim2Instance& inst);

/// Deterministic candidate generator: rank-one pairs, strictly triangular
/// block forms, proportional pencils and their symplectic conjugates, all
/// filtered through check_p1_equations (float pre-filter first in float64
/// mode, with exact re-verification of everything accepted).
std::vector<Codim2Instance> sample_solutions(std::size_t n, std::size_t count,
                                             std::uint64_t seed,
                                             ScalarMode mode = ScalarMode::exact);

struct ProofLemmaReport {
    bool pencil_nilpotent = true;  // every a C1 + b C2 on the grid is nilpotent (dim 2 span)
    bool kernel_inclusion = true;  // ker C1 inside ker C2 whenever some C1^2 != 0
    bool squares_zero = true;      // C^2 = 0 across the pencil when the span has dim 2
    std::string detail;
    bool all() const { return pencil_nilpotent && kernel_inclusion && squares_zero; }
};

/// Conclusions of the classification's proof lemmas, each checked under its
/// own hypotheses, over the rational (a, b) grid {-3..3}^2 \ {0} plus 20
/// seeded random pairs.
ProofLemmaReport verify_proof_lemmas(const Codim2Instance& inst, std::uint64_t seed = 2024);

} // namespace esymm
