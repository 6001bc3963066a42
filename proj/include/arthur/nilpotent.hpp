#pragma once

#include "arthur/root_datum.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <vector>

namespace arthur {

/// Jordan type of a nilpotent in the defining representation.
class Partition {
public:
    Partition() = default;
    /// Throws ValidationError unless nonempty, positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int total() const;
    int multiplicity(int part) const;

    /// Only even parts, each with even multiplicity (two orbits in type D).
    bool is_very_even() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

std::string to_text(const Partition& p); // "[3,1,1]"

/// Values a_i(H) for the dominant neutral element H; entries lie in {0,1,2}.
class WeightedDynkinDiagram {
public:
    WeightedDynkinDiagram() = default;
    /// Throws ValidationError if some entry is outside {0,1,2}.
    explicit WeightedDynkinDiagram(std::vector<int> values);

    static WeightedDynkinDiagram zero(int rank) { return WeightedDynkinDiagram(std::vector<int>(static_cast<std::size_t>(rank), 0)); }

    const std::vector<int>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    int operator[](std::size_t i) const { return values_[i]; }
    bool is_zero() const;

    friend bool operator==(const WeightedDynkinDiagram&, const WeightedDynkinDiagram&) = default;

private:
    std::vector<int> values_;
};

std::string to_text(const WeightedDynkinDiagram& w); // "(2,0,2)"

inline int pair_with_H(const Root& r, const WeightedDynkinDiagram& H) { return pair_with_H(r, H.values()); }

/// The SL2 component: dominant H plus the positive roots whose root vectors
/// make up the nilpositive element.
struct SL2Data {
    WeightedDynkinDiagram H;
    std::vector<Root> S;

    bool is_trivial() const { return H.is_zero(); }
    friend bool operator==(const SL2Data&, const SL2Data&) = default;
};

/// Total and parity rules for nilpotent orbits of the classical Lie algebra
/// of the given type (defining representation of dimension n+1, 2n+1, 2n, 2n).
/// Throws ValidationError naming the offending part.
void validate_partition(Family family, int rank, const Partition& p);

/// All partitions that pass validate_partition, in reverse lexicographic order.
std::vector<Partition> valid_partitions(Family family, int rank);

/// Weight strings (m-1, m-3, ..., 1-m) of every part, sorted descending.
std::vector<int> neutral_weights(const Partition& p);

WeightedDynkinDiagram wdd_from_partition(Family family, int rank, const Partition& p);

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// An sl2-triple in the defining representation with h diagonal and dominant.
/// Basis order: e_0..e_n for type A; e_0..e_{n-1}, [0 for B], -e_{n-1}..-e_0
/// for B, C, D. The form is antidiagonal, negated on the second half for C.
struct MatrixTriple {
    IntMatrix e;
    IntMatrix h;
    IntMatrix f;
    IntMatrix form;           ///< invariant bilinear form; empty for type A
    std::vector<Root> support; ///< positive roots with nonzero coefficient in e
};

/// Largest rank accepted by the matrix construction.
inline constexpr int kMaxMatrixRank = 6;

/// Builds e as a sum of root vectors X_b over a set S of positive roots with
/// b(H) = 2, chosen so that [e, f] = h has an integral solution f in the
/// -2 eigenspace of ad h. Candidate sets are tried by size, then in root
/// order; the first that works is returned. Every bracket relation and the
/// form are checked before returning. Throws ValidationError for rank above
/// kMaxMatrixRank.
MatrixTriple oracle_matrix_triple(Family family, int rank, const Partition& p);

/// H from the partition, S from the support of the matrix triple.
SL2Data sl2_data_from_partition(Family family, int rank, const Partition& p);

/// Structural check of raw (H, S): entries in {0,1,2}, S made of positive
/// roots with pairing 2, and S empty exactly when H is zero. This does not
/// certify that (H, S) comes from an actual orbit.
void validate_sl2_data(const RootDatum& d, const SL2Data& s);

} // namespace arthur
