#pragma once

// Numerical data of a smooth surface germ (X ∋ x, B) with boundary components
// B_1, B_2 through x. Bigness of K_X + B - (B_1 + B_2)/l is a declared input
// and is not checked here.

#include "toric_volume/errors.hpp"
#include "toric_volume/rational.hpp"

#include <string>
#include <vector>

namespace toric {

struct GermParams {
    Rational b1_sq;     ///< B_1^2, negative
    Integer l;          ///< declared integer l >= 1
    Rational vol_x;     ///< vol(X, K_X + B) > 0
    Rational kb_dot_b2; ///< (K_X + B) . B_2 >= 1/l
    std::string label;
};

/// Unchecked germ fields, as read from a file or the command line.
struct RawGermParams {
    Rational b1_sq;
    Integer l;
    Rational vol_x;
    Rational kb_dot_b2;
    std::string label;
};

class GermValidationError : public ValidationError {
public:
    explicit GermValidationError(std::vector<std::string> violations);
    const std::vector<std::string>& violations() const { return violations_; }

private:
    std::vector<std::string> violations_;
};

/// Lists every violated invariant; empty when the fields form a valid germ.
std::vector<std::string> germ_violations(const RawGermParams& raw);

/// Throws GermValidationError listing every violated invariant.
GermParams validate_germ(const RawGermParams& raw);

/// a_0 = 1 / (p_1 - q_1 B_1^2), the log discrepancy of C_0 over the contracted
/// pair. Satisfies 0 < a_0 < 1/p_1 (asserted).
Rational compute_a0(const GermParams& germ, const Integer& p1, const Integer& q1);

/// (p + q) / l: log discrepancy of the toric divisor over p*e1 + q*e2 with
/// respect to (X, B - (B_1 + B_2)/l).
Rational log_discrepancy(const Integer& p, const Integer& q, const Integer& l);

} // namespace toric
