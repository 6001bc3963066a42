#pragma once

#include "arthur/parameters.hpp"
#include "arthur/root_datum.hpp"

#include <map>
#include <vector>

namespace arthur {

/// Nilradical roots of the parabolic attached to theta, graded by the sum of
/// their coefficients on simple roots outside theta (level >= 1).
struct GradedNilradical {
    LeviSubset theta;
    std::map<int, std::vector<Root>> levels;

    bool empty() const { return levels.empty(); }
    std::vector<Root> all_roots() const; ///< level by level
};

GradedNilradical grade_nilradical(const RootDatum& d, const LeviSubset& theta);

/// r is the adjoint action on the nilradical, r_tilde its contragredient.
///
/// Sign convention: the r_tilde eigenvalue at a positive nilradical root b is
/// b(t) itself and the r eigenvalue is its inverse. With this choice the
/// rank-one reducibility point and the Arthur point b(H) = 2 both produce the
/// eigenvalue q at s = 1.
enum class Orientation { R, RTilde };

const char* to_text(Orientation o);

struct LocalLFactor {
    std::vector<QMonomial> eigenvalues;
    std::vector<Root> roots; ///< the root behind each eigenvalue
    Orientation orientation = Orientation::R;

    std::size_t dimension() const { return eigenvalues.size(); }
    friend bool operator==(const LocalLFactor&, const LocalLFactor&) = default;
};

/// L(s) = prod_i (1 - lambda_i q^{-s})^{-1} over the roots of g.
/// Throws ValidationError if p lives on a different datum than the grading.
LocalLFactor l_factor(const GradedNilradical& g, const UnramifiedParameter& p, Orientation o);

/// Factor restricted to one level r_i.
LocalLFactor l_factor_level(const GradedNilradical& g, int level, const UnramifiedParameter& p, Orientation o);

struct Vanishing {
    bool vanishes = false;
    std::vector<std::size_t> witnesses; ///< indices into the eigenvalue list
};

/// Whether L(s)^{-1} = 0: some factor 1 - zeta q^{a - s} vanishes, which for
/// formal q > 1 happens exactly when zeta = 1 and a = s.
Vanishing inverse_vanishes_at(const LocalLFactor& l, const Rational& s);

/// Real poles of L: exponents of the eigenvalues with trivial unit, sorted,
/// with multiplicity.
std::vector<Rational> pole_locations(const LocalLFactor& l);

enum class RatioClass { Zero, Nonzero };

struct CoefficientRatio {
    LocalLFactor numerator;   ///< L(0, r . phi), checked nonvanishing
    LocalLFactor denominator; ///< L(1, r_tilde . phi)
    Vanishing denominator_vanishing;
    RatioClass verdict = RatioClass::Nonzero;
};

/// Zero class of L(0, r)/L(1, r_tilde), i.e. of the inverse local coefficient
/// up to an exponential factor. Requires the exponent part of p to be
/// strictly positive on every nilradical root (ValidationError otherwise).
/// Throws InvariantViolation if the numerator inverse vanishes at 0.
CoefficientRatio local_coefficient_ratio(const RootDatum& d, const LeviSubset& theta, const UnramifiedParameter& p);

} // namespace arthur
