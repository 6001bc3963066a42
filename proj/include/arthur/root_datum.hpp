#pragma once

#include "arthur/qmonomial.hpp"
#include "arthur/rational.hpp"

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace arthur {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', G = 'G' };

/// Cartan type of a split group: family letter plus rank.
struct CartanSpec {
    Family family = Family::A;
    int rank = 1;

    /// Throws ValidationError for combinations such as D2 or G3.
    void validate() const;
    std::string name() const; // "B2"
    friend bool operator==(const CartanSpec&, const CartanSpec&) = default;
};

Family parse_family(std::string_view letter);
CartanSpec parse_cartan(std::string_view name); // "C3"

/// A root written in the simple-root basis. Coefficients are all >= 0 or
/// all <= 0 for an actual root; the type itself does not know the datum.
class Root {
public:
    Root() = default;
    explicit Root(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {}

    static Root simple(std::size_t rank, std::size_t index);

    std::size_t rank() const { return coeffs_.size(); }
    int operator[](std::size_t i) const { return coeffs_[i]; }
    const std::vector<int>& coeffs() const { return coeffs_; }

    int height() const;
    bool is_positive() const;
    bool is_zero() const;

    Root operator-() const;
    friend Root operator+(const Root& a, const Root& b);
    friend Root operator-(const Root& a, const Root& b) { return a + (-b); }

    friend bool operator==(const Root&, const Root&) = default;
    friend auto operator<=>(const Root&, const Root&) = default;

private:
    std::vector<int> coeffs_;
};

/// "a1", "a1+a2", "3a1+2a2", "-a2"; indices are 1-based (Bourbaki labels).
std::string to_text(const Root& r);
std::ostream& operator<<(std::ostream& os, const Root& r);

/// The enumeration order used everywhere a deterministic choice is needed:
/// by height, then lexicographically larger coefficient vectors first
/// (so a1 precedes a2 among the simple roots).
bool root_order_less(const Root& a, const Root& b);

/// A set of simple-root indices (0-based) defining a standard Levi.
class LeviSubset {
public:
    LeviSubset() = default;
    explicit LeviSubset(std::vector<int> indices);

    static LeviSubset all(int rank);

    const std::vector<int>& indices() const { return indices_; }
    bool contains(int i) const;
    bool empty() const { return indices_.empty(); }
    std::size_t size() const { return indices_.size(); }

    friend bool operator==(const LeviSubset&, const LeviSubset&) = default;

private:
    std::vector<int> indices_;
};

/// Root system with its Cartan matrix cartan(i, j) = <a_i, a_j^vee>, Bourbaki
/// numbering, and positive roots generated by root-string closure.
class RootDatum {
public:
    /// Standard datum of the given type. Throws ValidationError on a bad spec.
    static RootDatum build(const CartanSpec& spec);

    const CartanSpec& spec() const { return spec_; }
    int rank() const { return spec_.rank; }
    int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

    /// Positive roots in root_order_less order.
    const std::vector<Root>& positive_roots() const { return positive_; }
    Root simple_root(int i) const { return Root::simple(static_cast<std::size_t>(rank()), static_cast<std::size_t>(i)); }

    bool is_positive_root(const Root& r) const;
    bool is_root(const Root& r) const;

    /// <r, a_j^vee>.
    int coroot_pairing(const Root& r, int j) const;

    /// s_j(r) = r - <r, a_j^vee> a_j.
    Root reflect(const Root& r, int j) const;

    /// Index in positive_roots(), or -1.
    int index_of(const Root& r) const;

    friend bool operator==(const RootDatum& a, const RootDatum& b)
    {
        return a.spec_ == b.spec_ && a.cartan_ == b.cartan_;
    }

private:
    RootDatum(CartanSpec spec, std::vector<std::vector<int>> cartan);
    void generate_positive_roots();

    CartanSpec spec_;
    std::vector<std::vector<int>> cartan_;
    std::vector<Root> positive_;

    friend RootDatum dual_datum(const RootDatum& d);
};

inline RootDatum build_root_datum(const CartanSpec& spec) { return RootDatum::build(spec); }

/// Roots and coroots exchanged: transposed Cartan matrix, B and C swapped.
/// Simple-root indices are preserved so index i of the dual is the coroot
/// of index i.
RootDatum dual_datum(const RootDatum& d);

/// prod_i coords[i]^{c_i} for r = sum c_i a_i.
QMonomial evaluate_root(const Root& r, std::span<const QMonomial> coords);

/// sum_i c_i values[i]; values are simple-root evaluations of some H.
int pair_with_H(const Root& r, std::span<const int> values);
Rational pair_with_H(const Root& r, std::span<const Rational> values);

struct LeviSplit {
    std::vector<Root> levi_roots;       ///< positive roots supported on theta
    std::vector<Root> nilradical_roots; ///< the remaining positive roots
};

LeviSplit levi_and_nilradical(const RootDatum& d, const LeviSubset& theta);

/// Action of s_j on a vector of simple-root evaluations:
/// v'_i = v_i - <a_i, a_j^vee> v_j.
std::vector<Rational> reflect_evaluations(const RootDatum& d, std::span<const Rational> v, int j);

/// Same action written multiplicatively on torus eigen-data.
std::vector<QMonomial> reflect_evaluations(const RootDatum& d, std::span<const QMonomial> t, int j);

std::vector<Rational> apply_word(const RootDatum& d, std::span<const Rational> v, std::span<const int> word);
std::vector<QMonomial> apply_word(const RootDatum& d, std::span<const QMonomial> t, std::span<const int> word);
Root apply_word(const RootDatum& d, Root r, std::span<const int> word);

struct Dominantized {
    std::vector<Rational> vector; ///< all entries >= 0
    std::vector<int> word;        ///< reflections applied, first to last
};

/// Move an evaluation vector into the closed dominant chamber by repeatedly
/// reflecting in the first negative coordinate. Each step removes exactly one
/// positive root from the set that is negative on the vector, so the word has
/// length at most |positive roots|.
Dominantized dominantize(const RootDatum& d, std::span<const Rational> v);

} // namespace arthur
